//! Integral closures of powers and stabilization of the filtration.
//!
//! A lattice point `α` of `nQ` is a minimal generator of `closure(I^n)`
//! exactly when `α − e_j ∉ nQ` for every `j` with `α_j > 0`, because `nQ` is
//! closed under adding the orthant. Minimal points lie in `∏[0, n·M_j]` with
//! `M_j` the largest `j`-th exponent among the generators: if
//! `α ≥ Σ λ_i v_i` with `Σ λ_i = n` and `α_j > n·M_j ≥ Σ λ_i v_{ij}`, then
//! `α − e_j` dominates the same combination.

use std::collections::BTreeMap;
use std::sync::RwLock;

use crate::ehrhart::collect_in_box;
use crate::error::{Error, Result};
use crate::exact_math::{dot, Rational};
use crate::ideals::{ExponentVector, MonomialIdeal};
use crate::polyhedra::{newton_polyhedron, HalfSpaceSystem};
use crate::veronese::veronese_a_invariant;

fn minimal_points(q: &HalfSpaceSystem, bounds: &[u64], n: u64) -> Vec<ExponentVector> {
    collect_in_box(bounds, |p| {
        if !q.contains(p, n) {
            return false;
        }
        let mut below = p.to_vec();
        for j in 0..p.len() {
            if p[j] > 0 {
                below[j] -= 1;
                let inside = q.contains(&below, n);
                below[j] += 1;
                if inside {
                    return false;
                }
            }
        }
        true
    })
    .into_iter()
    .map(ExponentVector::new)
    .collect()
}

fn closure_with(ideal: &MonomialIdeal, q: &HalfSpaceSystem, n: u64) -> MonomialIdeal {
    let d = ideal.dimension();
    if n == 0 {
        return MonomialIdeal::unit(d);
    }
    let bounds: Vec<u64> = ideal.max_exponents().iter().map(|&m| m * n).collect();
    MonomialIdeal::new(d, minimal_points(q, &bounds, n)).expect("nQ has lattice points")
}

/// Minimal generators of the integral closure of `I^n`.
pub fn closure_power(ideal: &MonomialIdeal, n: u64) -> MonomialIdeal {
    closure_with(ideal, &newton_polyhedron(ideal), n)
}

/// Size of the box enumerated by [`closure_power`].
pub fn closure_box(ideal: &MonomialIdeal, n: u64) -> Vec<u64> {
    ideal.max_exponents().iter().map(|&m| m * n).collect()
}

fn pure_power_part(ideal: &MonomialIdeal) -> Result<MonomialIdeal> {
    let a = ideal
        .pure_power_exponents()
        .ok_or(Error::NotZeroDimensional {
            operation: "pure power reduction",
        })?;
    MonomialIdeal::pure_powers(&a)
}

/// Compares `closure(I^n)` with the closure of the `n`-th power of the
/// pure-power subideal. Requires `⟨v, α_0⟩ ≥ 1` for every generator.
pub fn pure_power_reduction_check(ideal: &MonomialIdeal, n: u64) -> Result<bool> {
    let pure = pure_power_part(ideal)?;
    let alpha0: Vec<Rational> = pure
        .pure_power_exponents()
        .expect("pure powers")
        .iter()
        .map(|&a| Rational::from_integer(a.into()).recip())
        .collect();
    if let Some(bad) = ideal
        .generators()
        .iter()
        .find(|g| dot(g, &alpha0) < Rational::from_integer(1.into()))
    {
        return Err(Error::AlphaHypothesisFails(bad.entries().to_vec()));
    }
    Ok(closure_power(ideal, n) == closure_power(&pure, n))
}

/// `closure(I^b) = I · closure(I^{b−1})`.
pub fn stabilization_check(ideal: &MonomialIdeal, b: u64) -> bool {
    ClosureFiltration::new(ideal.clone()).stabilization_check(b)
}

pub fn stabilization_report(ideal: &MonomialIdeal) -> StabilizationReport {
    ClosureFiltration::new(ideal.clone()).report()
}

/// The filtration `{closure(I^n)}` of one ideal, with a shared cache.
#[derive(Debug)]
pub struct ClosureFiltration {
    ideal: MonomialIdeal,
    newton: HalfSpaceSystem,
    cache: RwLock<BTreeMap<u64, MonomialIdeal>>,
}

impl ClosureFiltration {
    pub fn new(ideal: MonomialIdeal) -> Self {
        let newton = newton_polyhedron(&ideal);
        Self {
            ideal,
            newton,
            cache: RwLock::new(BTreeMap::new()),
        }
    }

    pub fn ideal(&self) -> &MonomialIdeal {
        &self.ideal
    }

    pub fn newton_polyhedron(&self) -> &HalfSpaceSystem {
        &self.newton
    }

    pub fn closure(&self, n: u64) -> MonomialIdeal {
        if let Some(hit) = self.cache.read().expect("cache lock").get(&n) {
            return hit.clone();
        }
        let computed = closure_with(&self.ideal, &self.newton, n);
        self.cache
            .write()
            .expect("cache lock")
            .entry(n)
            .or_insert(computed)
            .clone()
    }

    pub fn stabilization_check(&self, b: u64) -> bool {
        assert!(b >= 1, "stabilization index starts at 1");
        let previous = self.closure(b - 1);
        let rhs = self.ideal.product(&previous).expect("same dimension");
        self.closure(b) == rhs
    }

    pub fn report(&self) -> StabilizationReport {
        let d = self.ideal.dimension();
        let profile = self.ideal.profile();
        let checks: Vec<bool> = (1..=d as u64).map(|b| self.stabilization_check(b)).collect();
        let index_found = checks
            .iter()
            .rposition(|&ok| !ok)
            .map_or(1, |last_failure| last_failure + 2);
        let rank_bound_r0 = profile.on_affine_hyperplane().then_some(profile.rank);
        let graded = profile.equigenerated_degree.filter(|&r| r >= 2);
        let a_invariant = graded.map(|r| veronese_a_invariant(d as u64, r).expect("r >= 2"));
        let veronese_bound = graded.map(|r| d as u64 - d as u64 / r + 1);
        let a_invariant_bound = a_invariant.map(|a| d as i64 + 2 + a);
        StabilizationReport {
            dimension: d,
            index_found,
            theorem_bound_d: d,
            rank_bound_r0,
            equigenerated_degree: profile.equigenerated_degree,
            a_invariant,
            veronese_bound,
            a_invariant_bound,
            checks,
        }
    }
}

/// Stabilization data over the window `b = 1..=d`.
///
/// `index_found` is the least `b₀` such that the check holds for every `b`
/// in `[b₀, d]`. Beyond `d` the check is not run; the filtration is known
/// to stabilize there. A value of `d + 1` means the check failed at `d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilizationReport {
    pub dimension: usize,
    pub index_found: usize,
    pub theorem_bound_d: usize,
    /// Rank of the generator matrix, when the generators lie on an affine
    /// hyperplane avoiding the origin.
    pub rank_bound_r0: Option<usize>,
    pub equigenerated_degree: Option<u64>,
    /// `a(R[Jt])` for the Veronese ideal of the common degree `r ≥ 2`.
    pub a_invariant: Option<i64>,
    /// `d − ⌊d/r⌋ + 1`.
    pub veronese_bound: Option<u64>,
    /// `d + 2 + a(R[Jt])`.
    pub a_invariant_bound: Option<i64>,
    /// `checks[b − 1]` is the outcome at `b`.
    pub checks: Vec<bool>,
}

impl StabilizationReport {
    /// Whether the checks beyond `d` were taken on trust. Always true.
    pub fn relies_on_bound_beyond_window(&self) -> bool {
        true
    }

    /// The smallest applicable bound.
    pub fn best_bound(&self) -> usize {
        let mut best = self.theorem_bound_d;
        if let Some(r0) = self.rank_bound_r0 {
            best = best.min(r0);
        }
        if let Some(v) = self.veronese_bound {
            best = best.min(v as usize);
        }
        if let Some(a) = self.a_invariant_bound {
            best = best.min(a.max(1) as usize);
        }
        best.max(1)
    }

    /// Every applicable bound is at least `index_found`.
    pub fn is_consistent(&self) -> bool {
        self.index_found <= self.best_bound()
    }
}

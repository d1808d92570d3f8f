//! Monomial ideals as canonical sets of minimal exponent vectors.
//!
//! Variables are positional: coordinate `i` of an exponent vector is the
//! power of `x_{i+1}`. All indices in this API are zero-based.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Deref;

use num_traits::One;

use crate::error::{Error, Result};
use crate::exact_math::{dot, from_u64, matrix_rank, Rational, RationalMatrix, RationalVector};

/// Exponent `a ∈ N^d` of the monomial `x^a`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExponentVector(Vec<u64>);

impl ExponentVector {
    pub fn new(entries: Vec<u64>) -> Self {
        Self(entries)
    }

    pub fn zero(dim: usize) -> Self {
        Self(vec![0; dim])
    }

    /// `power · e_var`.
    pub fn pure_power(dim: usize, var: usize, power: u64) -> Self {
        let mut v = vec![0; dim];
        v[var] = power;
        Self(v)
    }

    pub fn entries(&self) -> &[u64] {
        &self.0
    }

    pub fn into_inner(self) -> Vec<u64> {
        self.0
    }

    /// Total degree `|a|`.
    pub fn degree(&self) -> u64 {
        self.0.iter().sum()
    }

    /// Componentwise `self ≤ other`, i.e. `x^self` divides `x^other`.
    pub fn divides(&self, other: &[u64]) -> bool {
        self.0.len() == other.len() && self.0.iter().zip(other).all(|(a, b)| a <= b)
    }

    pub fn add(&self, other: &ExponentVector) -> ExponentVector {
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn scale(&self, factor: u64) -> ExponentVector {
        Self(self.0.iter().map(|a| a * factor).collect())
    }

    /// If this is `a · e_i` with `a > 0`, returns `(i, a)`.
    pub fn as_pure_power(&self) -> Option<(usize, u64)> {
        let mut support = self.0.iter().enumerate().filter(|(_, &a)| a > 0);
        let first = support.next()?;
        support.next().is_none().then_some((first.0, *first.1))
    }
}

impl Deref for ExponentVector {
    type Target = [u64];
    fn deref(&self) -> &[u64] {
        &self.0
    }
}

impl From<Vec<u64>> for ExponentVector {
    fn from(v: Vec<u64>) -> Self {
        Self(v)
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, ")")
    }
}

/// A monomial ideal in `d` variables, stored as its unique minimal generating
/// set in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    dim: usize,
    gens: Vec<ExponentVector>,
}

/// Reduces `raw` to its ≤-minimal elements, deduplicated and lex-sorted.
pub fn minimal_generators(dim: usize, raw: Vec<ExponentVector>) -> Result<MonomialIdeal> {
    if dim == 0 {
        return Err(Error::ZeroAmbientDimension);
    }
    if raw.is_empty() {
        return Err(Error::EmptyGeneratingSet);
    }
    if let Some(bad) = raw.iter().find(|v| v.len() != dim) {
        return Err(Error::DimensionMismatch {
            expected: dim,
            found: bad.len(),
        });
    }
    Ok(MonomialIdeal {
        dim,
        gens: minimalize(raw),
    })
}

fn minimalize(mut raw: Vec<ExponentVector>) -> Vec<ExponentVector> {
    // Sorting by degree first means a divisor always precedes its multiples.
    raw.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.cmp(b)));
    raw.dedup();
    let mut kept: Vec<ExponentVector> = Vec::with_capacity(raw.len());
    for v in raw {
        if !kept.iter().any(|g| g.divides(&v)) {
            kept.push(v);
        }
    }
    kept.sort();
    kept
}

impl MonomialIdeal {
    pub fn new(dim: usize, raw: Vec<ExponentVector>) -> Result<Self> {
        minimal_generators(dim, raw)
    }

    pub fn from_rows(dim: usize, rows: &[&[u64]]) -> Result<Self> {
        minimal_generators(dim, rows.iter().map(|r| ExponentVector::new(r.to_vec())).collect())
    }

    /// The whole ring `(1)`.
    pub fn unit(dim: usize) -> Self {
        Self {
            dim,
            gens: vec![ExponentVector::zero(dim)],
        }
    }

    /// `(x_1, …, x_d)`.
    pub fn maximal(dim: usize) -> Self {
        let gens = (0..dim).map(|i| ExponentVector::pure_power(dim, i, 1)).collect();
        Self {
            dim,
            gens: minimalize(gens),
        }
    }

    /// `(x_1^{a_1}, …, x_d^{a_d})`.
    pub fn pure_powers(exponents: &[u64]) -> Result<Self> {
        let d = exponents.len();
        minimal_generators(
            d,
            exponents
                .iter()
                .enumerate()
                .map(|(i, &a)| ExponentVector::pure_power(d, i, a))
                .collect(),
        )
    }

    pub fn dimension(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[ExponentVector] {
        &self.gens
    }

    pub fn num_generators(&self) -> usize {
        self.gens.len()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(|g| g.degree() == 0)
    }

    /// Membership of `x^a`: some generator divides it.
    pub fn contains(&self, a: &[u64]) -> bool {
        self.gens.iter().any(|g| g.divides(a))
    }

    /// Ideal containment `self ⊆ other`.
    pub fn is_subset_of(&self, other: &MonomialIdeal) -> bool {
        self.dim == other.dim && self.gens.iter().all(|g| other.contains(g))
    }

    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: other.dim,
            });
        }
        let sums = self
            .gens
            .iter()
            .flat_map(|g| other.gens.iter().map(move |h| g.add(h)))
            .collect();
        Ok(MonomialIdeal {
            dim: self.dim,
            gens: minimalize(sums),
        })
    }

    /// `I^n` by repeated multiplication, minimalizing after every step.
    /// `I^0` is the unit ideal.
    pub fn power(&self, n: u64) -> MonomialIdeal {
        let mut acc = MonomialIdeal::unit(self.dim);
        for _ in 0..n {
            acc = acc.product(self).expect("same dimension");
        }
        acc
    }

    /// Exponents `a_i` of the pure powers `x_i^{a_i}` in the generating set,
    /// or `None` unless one exists for every variable.
    pub fn pure_power_exponents(&self) -> Option<Vec<u64>> {
        let mut out = vec![None; self.dim];
        for g in &self.gens {
            if let Some((i, a)) = g.as_pure_power() {
                out[i] = Some(a);
            }
        }
        out.into_iter().collect()
    }

    pub fn is_zero_dimensional(&self) -> bool {
        self.pure_power_exponents().is_some()
    }

    /// The ideal in `d − 1` variables obtained by setting `x_var = 0`.
    pub fn facet_ideal(&self, var: usize) -> Result<MonomialIdeal> {
        if !self.is_zero_dimensional() {
            return Err(Error::NotZeroDimensional {
                operation: "facet ideal",
            });
        }
        if self.dim < 2 {
            return Err(Error::TooFewVariables {
                operation: "facet ideal",
                required: 2,
                found: self.dim,
            });
        }
        if var >= self.dim {
            return Err(Error::VariableOutOfRange {
                index: var,
                dim: self.dim,
            });
        }
        let kept = self
            .gens
            .iter()
            .filter(|g| g[var] == 0)
            .map(|g| {
                let mut e = g.entries().to_vec();
                e.remove(var);
                ExponentVector::new(e)
            })
            .collect();
        minimal_generators(self.dim - 1, kept)
    }

    /// Relabels variables: coordinate `i` moves to position `perm[i]`.
    pub fn permute(&self, perm: &[usize]) -> Result<MonomialIdeal> {
        if perm.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: perm.len(),
            });
        }
        let gens = self
            .gens
            .iter()
            .map(|g| {
                let mut e = vec![0; self.dim];
                for (i, &a) in g.iter().enumerate() {
                    e[perm[i]] = a;
                }
                ExponentVector::new(e)
            })
            .collect();
        minimal_generators(self.dim, gens)
    }

    /// Componentwise maximum of the generators.
    pub fn max_exponents(&self) -> Vec<u64> {
        (0..self.dim)
            .map(|j| self.gens.iter().map(|g| g[j]).max().unwrap_or(0))
            .collect()
    }

    pub fn profile(&self) -> IdealProfile {
        profile(self)
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, g) in self.gens.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", monomial_string(g, None))?;
        }
        write!(f, ")")
    }
}

/// Renders `x^a` as `x1^4*x3`, or `1` for the zero exponent. When `names` is
/// given it must have one entry per coordinate.
pub fn monomial_string(a: &[u64], names: Option<&[String]>) -> String {
    let factors: Vec<String> = a
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(i, &e)| {
            let name = names.map_or_else(|| format!("x{}", i + 1), |n| n[i].clone());
            if e == 1 {
                name
            } else {
                format!("{name}^{e}")
            }
        })
        .collect();
    if factors.is_empty() {
        "1".to_string()
    } else {
        factors.join("*")
    }
}

pub fn power(ideal: &MonomialIdeal, n: u64) -> MonomialIdeal {
    ideal.power(n)
}

pub fn product(a: &MonomialIdeal, b: &MonomialIdeal) -> Result<MonomialIdeal> {
    a.product(b)
}

pub fn contains(ideal: &MonomialIdeal, a: &[u64]) -> bool {
    ideal.contains(a)
}

pub fn facet_ideal(ideal: &MonomialIdeal, var: usize) -> Result<MonomialIdeal> {
    ideal.facet_ideal(var)
}

/// Structural data about an ideal.
///
/// For zero-dimensional ideals the generators split as: the pure powers
/// `a_i e_i`, the mixed generators with `⟨v, α_0⟩ < 1`, and the rest.
/// `split_index` counts the first two groups together.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealProfile {
    pub dimension: usize,
    pub is_zero_dimensional: bool,
    pub pure_power_exponents: Option<Vec<u64>>,
    /// `(1/a_1, …, 1/a_d)`.
    pub alpha0: Option<RationalVector>,
    pub split_index: Option<usize>,
    /// Mixed generators strictly below the hyperplane `⟨x, α_0⟩ = 1`.
    pub small_generators: Vec<ExponentVector>,
    /// Mixed generators on or above that hyperplane.
    pub large_generators: Vec<ExponentVector>,
    /// Common total degree of all generators, when there is one.
    pub equigenerated_degree: Option<u64>,
    /// Some `c` with `⟨v, c⟩ = 1` for every generator, i.e. the generators lie
    /// on an affine hyperplane avoiding the origin.
    pub affine_hyperplane_normal: Option<RationalVector>,
    /// Rank of the generator matrix.
    pub rank: usize,
}

impl IdealProfile {
    /// The generators lie on the degree hyperplane `Σ x_i = r` with `r ≥ 1`.
    pub fn on_degree_hyperplane(&self) -> bool {
        self.equigenerated_degree.is_some_and(|r| r >= 1)
    }

    pub fn on_affine_hyperplane(&self) -> bool {
        self.affine_hyperplane_normal.is_some()
    }
}

pub fn profile(ideal: &MonomialIdeal) -> IdealProfile {
    let d = ideal.dim;
    let gens = &ideal.gens;
    let pure = ideal.pure_power_exponents();
    let alpha0: Option<RationalVector> = pure
        .as_ref()
        .map(|a| a.iter().map(|&ai| from_u64(ai).recip()).collect());

    let mut small = Vec::new();
    let mut large = Vec::new();
    if let Some(alpha) = &alpha0 {
        for g in gens.iter().filter(|g| g.as_pure_power().is_none()) {
            match dot(g, alpha).cmp(&Rational::one()) {
                Ordering::Less => small.push(g.clone()),
                _ => large.push(g.clone()),
            }
        }
    }
    let split_index = alpha0.as_ref().map(|_| d + small.len());

    let degree = gens[0].degree();
    let equigenerated_degree = gens.iter().all(|g| g.degree() == degree).then_some(degree);

    let matrix = RationalMatrix::from_integer_rows(gens.iter().map(|g| g.iter().copied()))
        .expect("generators share a length");
    let ones = vec![Rational::one(); gens.len()];
    let affine_hyperplane_normal = matrix.solve(&ones).expect("rhs matches rows");

    IdealProfile {
        dimension: d,
        is_zero_dimensional: pure.is_some(),
        pure_power_exponents: pure,
        alpha0,
        split_index,
        small_generators: small,
        large_generators: large,
        equigenerated_degree,
        affine_hyperplane_normal,
        rank: matrix_rank(&matrix),
    }
}

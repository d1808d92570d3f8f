//! The Rees cone of the `r`-th Veronese ideal and its a-invariant.
//!
//! The cone `R_+A′ ⊂ R^{d+1}` is generated by `e_1, …, e_d` and the points
//! `(a, 1)` with `|a| = r`. Its facets are `x_i ≥ 0` for `i ≤ d + 1` and
//! `⟨(1, …, 1, −r), x⟩ ≥ 0`. When `d = 1` the inequality `x_1 ≥ 0` follows
//! from `x_1 ≥ r·x_2 ≥ 0` and is not a facet.
//!
//! Under the grading `δ(x_i) = 1`, `δ(t) = 1 − r` the a-invariant is minus
//! the least degree of an interior lattice point `(a, b)`:
//! `a_i ≥ 1`, `b ≥ 1`, `|a| ≥ rb + 1`. For fixed `b` the least `|a|` is
//! `max(d, rb + 1)`, so `δ = max(d, rb + 1) + (1 − r)b`. Once `rb + 1 ≥ d`
//! this is `b + 1`, increasing in `b`, and `b ≤ d` covers every candidate.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::exact_math::RationalMatrix;
use crate::ideals::ExponentVector;
use crate::polyhedra::{enumerate_facets, HalfSpace};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VeroneseCone {
    d: usize,
    r: u64,
    facets: Vec<HalfSpace>,
}

fn check_parameters(d: usize, r: u64) -> Result<()> {
    if d == 0 {
        return Err(Error::ZeroAmbientDimension);
    }
    if r < 2 {
        return Err(Error::VeroneseDegree(r));
    }
    Ok(())
}

/// Closed-form facet system of the Veronese Rees cone.
pub fn veronese_facets(d: usize, r: u64) -> Result<VeroneseCone> {
    check_parameters(d, r)?;
    let mut facets: Vec<HalfSpace> = (0..=d)
        .filter(|&i| d > 1 || i == d)
        .map(|i| HalfSpace::coordinate(d + 1, i))
        .collect();
    let mut normal = vec![BigInt::from(1); d + 1];
    normal[d] = -BigInt::from(r);
    facets.push(HalfSpace::new(normal, BigInt::from(0)));
    Ok(VeroneseCone { d, r, facets })
}

fn compositions(total: u64, parts: usize, prefix: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
    if parts == 1 {
        prefix.push(total);
        out.push(prefix.clone());
        prefix.pop();
        return;
    }
    for first in (0..=total).rev() {
        prefix.push(first);
        compositions(total - first, parts - 1, prefix, out);
        prefix.pop();
    }
}

/// Verdict of [`VeroneseCone::validate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FacetValidation {
    /// Every generator satisfies every inequality.
    pub valid: bool,
    /// Every inequality is tight on `d` linearly independent generators.
    pub tight: bool,
    /// Brute-force enumeration agrees; `None` outside `d, r ≤ 4`.
    pub enumeration_agrees: Option<bool>,
}

impl FacetValidation {
    pub fn passed(&self) -> bool {
        self.valid && self.tight && self.enumeration_agrees != Some(false)
    }
}

impl VeroneseCone {
    pub fn dimension(&self) -> usize {
        self.d
    }

    pub fn degree(&self) -> u64 {
        self.r
    }

    /// Inequalities `⟨a, x⟩ ≥ 0` in `R^{d+1}`.
    pub fn facets(&self) -> &[HalfSpace] {
        &self.facets
    }

    /// `A′`: the unit vectors `e_1..e_d`, then `(a, 1)` for `|a| = r` in
    /// decreasing lexicographic order.
    pub fn generators(&self) -> Vec<Vec<u64>> {
        let d = self.d;
        let mut out: Vec<Vec<u64>> = (0..d)
            .map(|i| (0..=d).map(|j| u64::from(i == j)).collect())
            .collect();
        let mut lifted = Vec::new();
        compositions(self.r, d, &mut Vec::new(), &mut lifted);
        out.extend(lifted.into_iter().map(|mut a| {
            a.push(1);
            a
        }));
        out
    }

    /// Brute-force facets of the cone over [`generators`](Self::generators).
    pub fn enumerate(&self) -> Vec<HalfSpace> {
        let rays: Vec<Vec<BigInt>> = self
            .generators()
            .iter()
            .map(|g| g.iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        enumerate_facets(self.d + 1, &[vec![BigInt::from(0); self.d + 1]], &rays)
    }

    pub fn validate(&self) -> FacetValidation {
        let gens = self.generators();
        let big: Vec<Vec<BigInt>> = gens
            .iter()
            .map(|g| g.iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        let valid = self
            .facets
            .iter()
            .all(|h| big.iter().all(|g| h.is_satisfied_by(g)));
        let tight = self.facets.iter().all(|h| {
            let on: Vec<Vec<BigInt>> = big.iter().filter(|g| h.is_tight_at(g)).cloned().collect();
            !on.is_empty() && RationalMatrix::from_integer_rows(on).expect("rectangular").rank() == self.d
        });
        let enumeration_agrees = (self.d <= 4 && self.r <= 4).then(|| {
            let mut expected = self.facets.clone();
            expected.sort_by(|a, b| (a.normal(), a.bound()).cmp(&(b.normal(), b.bound())));
            self.enumerate() == expected
        });
        FacetValidation {
            valid,
            tight,
            enumeration_agrees,
        }
    }

    /// Whether `(a, b)` lies in the interior of the cone.
    pub fn contains_interior(&self, point: &GradedLatticePoint) -> bool {
        let mut x: Vec<BigInt> = point.a.iter().map(|&v| BigInt::from(v)).collect();
        x.push(BigInt::from(point.b));
        x.len() == self.d + 1 && self.facets.iter().all(|h| h.value_at(&x) > BigInt::from(0))
    }
}

/// Closed form: `−2` if `r ≥ d`; otherwise with `d = qr + s`, `−(q+2)` for
/// `s ≥ 2` and `−(q+1)` for `s ∈ {0, 1}`.
pub fn veronese_a_invariant(d: u64, r: u64) -> Result<i64> {
    check_parameters(d as usize, r)?;
    if r >= d {
        return Ok(-2);
    }
    let (q, s) = (d / r, d % r);
    Ok(if s >= 2 { -(q as i64 + 2) } else { -(q as i64 + 1) })
}

/// `−min δ` over the interior lattice points of the cone.
pub fn a_invariant_search_oracle(d: u64, r: u64) -> Result<i64> {
    check_parameters(d as usize, r)?;
    let best = (1..=d)
        .map(|b| d.max(r * b + 1) as i64 + (1 - r as i64) * b as i64)
        .min()
        .expect("d >= 1");
    Ok(-best)
}

/// A monomial `x^a t^b` of `R[t]` graded by `δ(x_i) = 1`, `δ(t) = 1 − r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedLatticePoint {
    pub a: ExponentVector,
    pub b: u64,
    pub r: u64,
}

impl GradedLatticePoint {
    pub fn new(a: ExponentVector, b: u64, r: u64) -> Self {
        Self { a, b, r }
    }

    /// `|a| + (1 − r)·b`.
    pub fn degree(&self) -> i64 {
        self.a.degree() as i64 + (1 - self.r as i64) * self.b as i64
    }
}

/// `x_1^{r−d+2} x_2 ⋯ x_d t`, for `r ≥ d`.
pub fn witness_m1(d: usize, r: u64) -> Option<GradedLatticePoint> {
    if d == 0 || r < 2 || r < d as u64 {
        return None;
    }
    let mut a = vec![1u64; d];
    a[0] = r - d as u64 + 2;
    Some(GradedLatticePoint::new(ExponentVector::new(a), 1, r))
}

/// `x_1^2 ⋯ x_{r−s+1}^2 x_{r−s+2} ⋯ x_d t^{q+1}` with `d = qr + s`, for
/// `2 ≤ r < d`.
pub fn witness_m2(d: usize, r: u64) -> Option<GradedLatticePoint> {
    if r < 2 || r >= d as u64 {
        return None;
    }
    let (q, s) = (d as u64 / r, d as u64 % r);
    let squares = (r - s + 1) as usize;
    let a: Vec<u64> = (0..d).map(|i| if i < squares { 2 } else { 1 }).collect();
    Some(GradedLatticePoint::new(ExponentVector::new(a), q + 1, r))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn normals(cone: &VeroneseCone) -> Vec<Vec<i64>> {
        cone.facets()
            .iter()
            .map(|h| h.normal().iter().map(|x| i64::try_from(x).unwrap()).collect())
            .collect()
    }

    #[test]
    fn closed_form_facets() {
        let c = veronese_facets(2, 2).unwrap();
        assert_eq!(
            normals(&c),
            vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1], vec![1, 1, -2]]
        );
        let c = veronese_facets(3, 2).unwrap();
        assert_eq!(normals(&c).last().unwrap(), &vec![1, 1, 1, -2]);
        assert_eq!(c.facets().len(), 5);
    }

    #[test]
    fn generators_of_small_cone() {
        let c = veronese_facets(2, 3).unwrap();
        assert_eq!(
            c.generators(),
            vec![
                vec![1, 0, 0],
                vec![0, 1, 0],
                vec![3, 0, 1],
                vec![2, 1, 1],
                vec![1, 2, 1],
                vec![0, 3, 1]
            ]
        );
        assert!(c.validate().passed());
        assert_eq!(c.validate().enumeration_agrees, Some(true));
    }

    #[test]
    fn line_case_drops_redundant_coordinate() {
        let c = veronese_facets(1, 3).unwrap();
        assert_eq!(normals(&c), vec![vec![0, 1], vec![1, -3]]);
        assert!(c.validate().passed());
    }

    #[test]
    fn degree_one_is_rejected() {
        assert_eq!(veronese_facets(3, 1), Err(Error::VeroneseDegree(1)));
        assert_eq!(veronese_a_invariant(3, 0), Err(Error::VeroneseDegree(0)));
    }

    #[test]
    fn a_invariant_cases() {
        assert_eq!(veronese_a_invariant(3, 3).unwrap(), -2);
        assert_eq!(veronese_a_invariant(5, 2).unwrap(), -3);
        assert_eq!(veronese_a_invariant(8, 3).unwrap(), -4);
    }

    #[test]
    fn search_oracle_cases() {
        assert_eq!(a_invariant_search_oracle(3, 2).unwrap(), -2);
        assert_eq!(a_invariant_search_oracle(3, 5).unwrap(), -2);
        assert_eq!(a_invariant_search_oracle(4, 2).unwrap(), -3);
    }

    #[test]
    fn witnesses() {
        let c = veronese_facets(3, 5).unwrap();
        let m1 = witness_m1(3, 5).unwrap();
        assert_eq!(m1.a.entries(), &[4, 1, 1]);
        assert!(c.contains_interior(&m1));
        assert_eq!(m1.degree(), 2);

        let c = veronese_facets(8, 3).unwrap();
        let m2 = witness_m2(8, 3).unwrap();
        assert_eq!(m2.a.entries(), &[2, 2, 1, 1, 1, 1, 1, 1]);
        assert_eq!(m2.b, 3);
        assert!(c.contains_interior(&m2));
        assert_eq!(m2.degree(), 4);
    }

    #[test]
    fn boundary_point_is_not_interior() {
        let c = veronese_facets(2, 2).unwrap();
        let p = GradedLatticePoint::new(ExponentVector::new(vec![1, 1]), 1, 2);
        assert!(!c.contains_interior(&p));
    }
}

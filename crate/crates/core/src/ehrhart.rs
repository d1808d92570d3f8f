//! Lattice-point counting in dilated lattice polytopes.
//!
//! Counting is plain enumeration of an integer box filtered by a membership
//! predicate. The first coordinate is split across rayon workers; each worker
//! walks the remaining coordinates with an odometer. Sums and collected
//! point lists do not depend on the partition.

use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exact_math::{interpolate_polynomial, Polynomial, Rational};
use crate::polyhedra::Polytope;

/// A bounded region of `R^d` together with its dilations `nR`.
pub trait CountingRegion: Sync {
    fn dimension(&self) -> usize;

    /// Dimension of the affine hull; the degree of the Ehrhart polynomial.
    fn affine_dimension(&self) -> usize;

    /// Inclusive upper bounds of a box `∏[0, b_j]` containing every lattice
    /// point of `nR`. The region is assumed to lie in the nonnegative orthant.
    fn box_bounds(&self, n: u64) -> Vec<u64>;

    fn contains(&self, point: &[u64], n: u64) -> bool;

    /// Membership in the relative interior of `nR`.
    fn contains_interior(&self, point: &[u64], n: u64) -> bool;
}

impl CountingRegion for Polytope {
    fn dimension(&self) -> usize {
        Polytope::dimension(self)
    }

    fn affine_dimension(&self) -> usize {
        Polytope::affine_dimension(self)
    }

    fn box_bounds(&self, n: u64) -> Vec<u64> {
        self.extent().iter().map(|&m| m * n).collect()
    }

    fn contains(&self, point: &[u64], n: u64) -> bool {
        Polytope::contains(self, point, n)
    }

    fn contains_interior(&self, point: &[u64], n: u64) -> bool {
        self.contains_relative_interior(point, n)
    }
}

/// Number of lattice points in `∏[0, b_j]`, saturating.
pub fn box_size(bounds: &[u64]) -> u128 {
    bounds
        .iter()
        .fold(1u128, |acc, &b| acc.saturating_mul(u128::from(b) + 1))
}

fn walk_slice<F: FnMut(&[u64])>(first: u64, bounds: &[u64], mut visit: F) {
    let mut point = vec![0u64; bounds.len()];
    point[0] = first;
    loop {
        visit(&point);
        let mut j = bounds.len() - 1;
        loop {
            if j == 0 {
                return;
            }
            if point[j] < bounds[j] {
                point[j] += 1;
                break;
            }
            point[j] = 0;
            j -= 1;
        }
    }
}

/// Counts the points of `∏[0, b_j]` satisfying `pred`.
pub fn count_in_box<F>(bounds: &[u64], pred: F) -> u64
where
    F: Fn(&[u64]) -> bool + Sync,
{
    if bounds.is_empty() {
        return u64::from(pred(&[]));
    }
    (0..=bounds[0])
        .into_par_iter()
        .map(|first| {
            let mut count = 0u64;
            walk_slice(first, bounds, |p| count += u64::from(pred(p)));
            count
        })
        .sum()
}

/// The points of `∏[0, b_j]` satisfying `pred`, in lexicographic order.
pub fn collect_in_box<F>(bounds: &[u64], pred: F) -> Vec<Vec<u64>>
where
    F: Fn(&[u64]) -> bool + Sync,
{
    if bounds.is_empty() {
        return if pred(&[]) { vec![Vec::new()] } else { Vec::new() };
    }
    let slices: Vec<Vec<Vec<u64>>> = (0..=bounds[0])
        .into_par_iter()
        .map(|first| {
            let mut found = Vec::new();
            walk_slice(first, bounds, |p| {
                if pred(p) {
                    found.push(p.to_vec());
                }
            });
            found
        })
        .collect();
    slices.into_iter().flatten().collect()
}

/// `|Z^d ∩ nR|`, or the relative-interior count when `interior` is set.
pub fn count_lattice_points<R: CountingRegion + ?Sized>(region: &R, n: u64, interior: bool) -> u64 {
    let bounds = region.box_bounds(n);
    if interior {
        count_in_box(&bounds, |p| region.contains_interior(p, n))
    } else {
        count_in_box(&bounds, |p| region.contains(p, n))
    }
}

/// Interpolates the counts at `n = 0..=d₁` and checks the prediction at
/// `d₁ + 1` and `d₁ + 2`.
pub fn ehrhart_polynomial<R: CountingRegion + ?Sized>(region: &R) -> Result<Polynomial> {
    let d1 = region.affine_dimension() as u64;
    let nodes: Vec<(i64, Rational)> = (0..=d1)
        .map(|n| (n as i64, Rational::from_integer(count_lattice_points(region, n, false).into())))
        .collect();
    let poly = interpolate_polynomial(&nodes)?;
    for n in d1 + 1..=d1 + 2 {
        let counted = count_lattice_points(region, n, false);
        let predicted = poly.eval_int(n as i64);
        if predicted != Rational::from_integer(counted.into()) {
            return Err(Error::NonPolynomialCount {
                n,
                counted,
                predicted: predicted.to_string(),
            });
        }
    }
    Ok(poly)
}

/// Outcome of comparing interior counts against `(−1)^{d₁} E(−n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Reciprocity {
    Holds,
    FailsAt {
        n: u64,
        interior: u64,
        predicted: Rational,
    },
}

impl Reciprocity {
    pub fn holds(&self) -> bool {
        matches!(self, Reciprocity::Holds)
    }
}

/// Checks `E°(n) = (−1)^{d₁} E(−n)` for `n = 1..=n_max`.
pub fn reciprocity_check<R: CountingRegion + ?Sized>(region: &R, n_max: u64) -> Result<Reciprocity> {
    let poly = ehrhart_polynomial(region)?;
    Ok(reciprocity_against(region, &poly, n_max))
}

/// As [`reciprocity_check`] with a precomputed Ehrhart polynomial.
pub fn reciprocity_against<R: CountingRegion + ?Sized>(
    region: &R,
    poly: &Polynomial,
    n_max: u64,
) -> Reciprocity {
    let sign = if region.affine_dimension().is_multiple_of(2) {
        Rational::one()
    } else {
        -Rational::one()
    };
    for n in 1..=n_max {
        let interior = count_lattice_points(region, n, true);
        let predicted = &sign * poly.eval_int(-(n as i64));
        if predicted != Rational::from_integer(interior.into()) {
            return Reciprocity::FailsAt {
                n,
                interior,
                predicted,
            };
        }
    }
    Reciprocity::Holds
}

/// Relative volume: the leading coefficient of the Ehrhart polynomial.
pub fn relative_volume<R: CountingRegion + ?Sized>(region: &R) -> Result<Rational> {
    let poly = ehrhart_polynomial(region)?;
    Ok(if poly.is_zero() {
        Rational::zero()
    } else {
        poly.leading_coefficient()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_math::{factorial, rational};
    use crate::ideals::MonomialIdeal;
    use crate::polyhedra::{base_simplex, polytope_p};

    fn example_a() -> MonomialIdeal {
        MonomialIdeal::from_rows(3, &[&[4, 0, 0], &[0, 5, 0], &[0, 0, 6], &[1, 1, 2]]).unwrap()
    }

    fn poly(c: &[(i64, i64)]) -> Polynomial {
        Polynomial::new(c.iter().map(|&(n, d)| rational(n, d)).collect())
    }

    #[test]
    fn simplex_counts() {
        let s = Polytope::axis_simplex(&[2, 2]);
        assert_eq!(count_lattice_points(&s, 1, false), 6);
        assert_eq!(count_lattice_points(&s, 2, true), 3);
        assert_eq!(count_lattice_points(&s, 0, false), 1);
        assert_eq!(count_lattice_points(&s, 0, true), 0);
        assert_eq!(count_lattice_points(&base_simplex(&example_a()).unwrap(), 1, false), 46);
    }

    #[test]
    fn example_polynomials() {
        let s = base_simplex(&example_a()).unwrap();
        assert_eq!(ehrhart_polynomial(&s).unwrap(), Polynomial::from_integers(&[1, 6, 19, 20]));
        let p = polytope_p(&example_a()).unwrap();
        assert_eq!(
            ehrhart_polynomial(&p).unwrap(),
            poly(&[(1, 1), (1, 6), (3, 2), (13, 3)])
        );
        assert_eq!(
            ehrhart_polynomial(&Polytope::standard_simplex(2)).unwrap(),
            poly(&[(1, 1), (3, 2), (1, 2)])
        );
    }

    #[test]
    fn volumes() {
        assert_eq!(
            relative_volume(&base_simplex(&example_a()).unwrap()).unwrap(),
            rational(20, 1)
        );
        assert_eq!(
            relative_volume(&polytope_p(&example_a()).unwrap()).unwrap(),
            rational(13, 3)
        );
        for d in 1..=3 {
            let expected = Rational::new(1.into(), factorial(d));
            assert_eq!(relative_volume(&Polytope::standard_simplex(d)).unwrap(), expected);
        }
    }

    #[test]
    fn reciprocity_examples() {
        assert!(reciprocity_check(&Polytope::axis_simplex(&[2, 2]), 3).unwrap().holds());
        assert!(reciprocity_check(&Polytope::axis_simplex(&[1]), 3).unwrap().holds());
        assert!(reciprocity_check(&base_simplex(&example_a()).unwrap(), 2).unwrap().holds());
    }

    #[test]
    fn lower_dimensional_region() {
        let i = MonomialIdeal::from_rows(3, &[&[10, 0, 0], &[0, 8, 0], &[0, 0, 5]]).unwrap();
        let p = polytope_p(&i).unwrap();
        let e = ehrhart_polynomial(&p).unwrap();
        assert_eq!(e.degree(), Some(2));
        assert!(reciprocity_against(&p, &e, 3).holds());
    }

    struct HalfOpenSegment;

    impl CountingRegion for HalfOpenSegment {
        fn dimension(&self) -> usize {
            1
        }
        fn affine_dimension(&self) -> usize {
            1
        }
        fn box_bounds(&self, n: u64) -> Vec<u64> {
            vec![n]
        }
        // [0, 1/2] dilated: not a lattice polytope
        fn contains(&self, p: &[u64], n: u64) -> bool {
            2 * p[0] <= n
        }
        fn contains_interior(&self, p: &[u64], n: u64) -> bool {
            p[0] > 0 && 2 * p[0] < n
        }
    }

    #[test]
    fn non_lattice_region_is_rejected() {
        assert!(matches!(
            ehrhart_polynomial(&HalfOpenSegment),
            Err(Error::NonPolynomialCount { .. })
        ));
    }

    #[test]
    fn box_helpers() {
        assert_eq!(box_size(&[1, 2]), 6);
        assert_eq!(count_in_box(&[3, 3], |p| p[0] + p[1] <= 3), 10);
        let pts = collect_in_box(&[1, 1], |_| true);
        assert_eq!(pts, vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]);
    }
}

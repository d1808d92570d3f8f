//! Rational polyhedra in H-representation.
//!
//! The Newton polyhedron `Q = R_+^d + conv(v_1, …, v_q)` of a monomial ideal is
//! computed once by brute-force facet enumeration and cached as a
//! [`HalfSpaceSystem`]. Its dilation `nQ` keeps the normals and scales the
//! bounds, so lattice membership in `nQ` costs one pass over the facets.

pub mod fourier_motzkin;
mod polytope;

pub use fourier_motzkin::{fm_member_oracle, DilationOracle};
pub use polytope::{base_simplex, polytope_p, Polytope};

use std::cmp::Ordering;
use std::collections::BTreeSet;

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::exact_math::{generalized_cross_product, RationalMatrix};
use crate::ideals::MonomialIdeal;

/// The inequality `⟨normal, x⟩ ≥ bound`, with `normal` and `bound` sharing no
/// common factor.
#[derive(Clone, Debug)]
pub struct HalfSpace {
    normal: Vec<BigInt>,
    bound: BigInt,
    small: Option<(Vec<i64>, i64)>,
}

impl PartialEq for HalfSpace {
    fn eq(&self, other: &Self) -> bool {
        self.normal == other.normal && self.bound == other.bound
    }
}

impl Eq for HalfSpace {}

impl HalfSpace {
    pub fn new(normal: Vec<BigInt>, bound: BigInt) -> Self {
        let g = normal.iter().fold(bound.clone(), |g, x| g.gcd(x));
        let (normal, bound) = if g.is_zero() || g == BigInt::from(1) {
            (normal, bound)
        } else {
            (normal.iter().map(|x| x / &g).collect(), &bound / &g)
        };
        let small = normal
            .iter()
            .map(ToPrimitive::to_i64)
            .collect::<Option<Vec<i64>>>()
            .zip(bound.to_i64());
        Self {
            normal,
            bound,
            small,
        }
    }

    pub fn from_i64(normal: &[i64], bound: i64) -> Self {
        Self::new(normal.iter().map(|&x| BigInt::from(x)).collect(), BigInt::from(bound))
    }

    /// `x_var ≥ 0` in dimension `dim`.
    pub fn coordinate(dim: usize, var: usize) -> Self {
        let mut normal = vec![0; dim];
        normal[var] = 1;
        Self::from_i64(&normal, 0)
    }

    pub fn normal(&self) -> &[BigInt] {
        &self.normal
    }

    pub fn bound(&self) -> &BigInt {
        &self.bound
    }

    pub fn is_coordinate(&self) -> bool {
        self.bound.is_zero()
            && self.normal.iter().filter(|x| !x.is_zero()).count() == 1
            && self.normal.iter().all(|x| !x.is_negative())
    }

    /// Compares `⟨normal, point⟩` with `n · bound`.
    pub fn compare(&self, point: &[u64], n: u64) -> Ordering {
        if let Some((normal, bound)) = &self.small {
            if let Some(ord) = compare_small(normal, *bound, point, n) {
                return ord;
            }
        }
        let lhs: BigInt = self
            .normal
            .iter()
            .zip(point)
            .map(|(a, &x)| a * BigInt::from(x))
            .sum();
        lhs.cmp(&(&self.bound * BigInt::from(n)))
    }

    /// `point ∈ n · {x : ⟨normal, x⟩ ≥ bound}`.
    pub fn contains(&self, point: &[u64], n: u64) -> bool {
        self.compare(point, n) != Ordering::Less
    }

    pub fn value_at(&self, point: &[BigInt]) -> BigInt {
        self.normal.iter().zip(point).map(|(a, x)| a * x).sum()
    }

    pub fn is_satisfied_by(&self, point: &[BigInt]) -> bool {
        self.value_at(point) >= self.bound
    }

    pub fn is_tight_at(&self, point: &[BigInt]) -> bool {
        self.value_at(point) == self.bound
    }
}

fn compare_small(normal: &[i64], bound: i64, point: &[u64], n: u64) -> Option<Ordering> {
    let mut acc: i128 = 0;
    for (&a, &x) in normal.iter().zip(point) {
        let term = i128::from(a).checked_mul(i128::from(x))?;
        acc = acc.checked_add(term)?;
    }
    let rhs = i128::from(bound).checked_mul(i128::from(n))?;
    Some(acc.cmp(&rhs))
}

/// A finite list of inequalities `⟨normal, x⟩ ≥ bound` in a fixed dimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HalfSpaceSystem {
    dim: usize,
    inequalities: Vec<HalfSpace>,
}

impl HalfSpaceSystem {
    pub fn new(dim: usize, inequalities: Vec<HalfSpace>) -> Self {
        debug_assert!(inequalities.iter().all(|h| h.normal.len() == dim));
        Self { dim, inequalities }
    }

    pub fn dimension(&self) -> usize {
        self.dim
    }

    pub fn inequalities(&self) -> &[HalfSpace] {
        &self.inequalities
    }

    pub fn len(&self) -> usize {
        self.inequalities.len()
    }

    pub fn is_empty(&self) -> bool {
        self.inequalities.is_empty()
    }

    /// Lattice membership in the `n`-th dilation.
    pub fn contains(&self, point: &[u64], n: u64) -> bool {
        self.inequalities.iter().all(|h| h.contains(point, n))
    }

    pub fn concat(&self, other: &HalfSpaceSystem) -> HalfSpaceSystem {
        let mut inequalities = self.inequalities.clone();
        for h in &other.inequalities {
            if !inequalities.contains(h) {
                inequalities.push(h.clone());
            }
        }
        HalfSpaceSystem::new(self.dim, inequalities)
    }
}

/// Facets of the full-dimensional polyhedron `conv(points) + cone(rays)`.
///
/// Every candidate hyperplane is spanned by `k ≥ 1` of the points and
/// `dim − k` of the rays. A candidate is kept when all points and rays lie on
/// one side of it. Since the tight set spans a hyperplane by construction,
/// each kept candidate supports a facet. Candidates whose spanning set is
/// dependent are skipped. Results are primitive, deduplicated, and sorted.
pub fn enumerate_facets(dim: usize, points: &[Vec<BigInt>], rays: &[Vec<BigInt>]) -> Vec<HalfSpace> {
    let mut found: BTreeSet<(Vec<BigInt>, BigInt)> = BTreeSet::new();
    for k in 1..=points.len().min(dim) {
        for chosen in (0..points.len()).combinations(k) {
            let base = &points[chosen[0]];
            let diffs: Vec<Vec<BigInt>> = chosen[1..]
                .iter()
                .map(|&i| points[i].iter().zip(base).map(|(a, b)| a - b).collect())
                .collect();
            for dirs in (0..rays.len()).combinations(dim - k) {
                let mut rows = diffs.clone();
                rows.extend(dirs.iter().map(|&j| rays[j].clone()));
                let normal = generalized_cross_product(&rows, dim);
                if normal.iter().all(Zero::is_zero) {
                    continue;
                }
                let normal = crate::exact_math::primitive(&normal);
                let bound: BigInt = normal.iter().zip(base).map(|(a, x)| a * x).sum();
                if let Some((normal, bound)) = orient(normal, bound, points, rays) {
                    found.insert((normal, bound));
                }
            }
        }
    }
    found
        .into_iter()
        .map(|(normal, bound)| HalfSpace::new(normal, bound))
        .collect()
}

/// Chooses the sign making the inequality valid on all points and rays, or
/// `None` when neither sign is valid.
fn orient(
    normal: Vec<BigInt>,
    bound: BigInt,
    points: &[Vec<BigInt>],
    rays: &[Vec<BigInt>],
) -> Option<(Vec<BigInt>, BigInt)> {
    let mut pos = true;
    let mut neg = true;
    let dot = |v: &[BigInt]| -> BigInt { normal.iter().zip(v).map(|(a, x)| a * x).sum() };
    for p in points {
        match dot(p).cmp(&bound) {
            Ordering::Less => pos = false,
            Ordering::Greater => neg = false,
            Ordering::Equal => {}
        }
    }
    for r in rays {
        let v = dot(r);
        if v.is_negative() {
            pos = false;
        } else if v.is_positive() {
            neg = false;
        }
    }
    if pos {
        Some((normal, bound))
    } else if neg {
        Some((normal.iter().map(|x| -x).collect(), -bound))
    } else {
        None
    }
}

/// Affine rank of the face `{x ∈ conv(points) + cone(rays) : ⟨a, x⟩ = b}`,
/// from the tight points and rays.
pub fn face_dimension(h: &HalfSpace, points: &[Vec<BigInt>], rays: &[Vec<BigInt>]) -> usize {
    let tight: Vec<&Vec<BigInt>> = points.iter().filter(|p| h.is_tight_at(p)).collect();
    let Some(base) = tight.first() else {
        return 0;
    };
    let mut rows: Vec<Vec<BigInt>> = tight[1..]
        .iter()
        .map(|p| p.iter().zip(base.iter()).map(|(a, b)| a - b).collect())
        .collect();
    rows.extend(rays.iter().filter(|r| h.value_at(r).is_zero()).cloned());
    if rows.is_empty() {
        return 0;
    }
    RationalMatrix::from_integer_rows(rows).expect("rectangular").rank()
}

pub(crate) fn to_big(v: &[u64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

pub(crate) fn unit_rays(dim: usize) -> Vec<Vec<BigInt>> {
    (0..dim)
        .map(|i| (0..dim).map(|j| BigInt::from(u8::from(i == j))).collect())
        .collect()
}

/// H-representation of `Q = R_+^d + conv(generators)`.
///
/// The coordinate inequalities `x_i ≥ 0` come first and are always present;
/// the remaining facets follow in sorted order. All normals are nonnegative.
pub fn newton_polyhedron(ideal: &MonomialIdeal) -> HalfSpaceSystem {
    let d = ideal.dimension();
    let points: Vec<Vec<BigInt>> = ideal.generators().iter().map(|g| to_big(g)).collect();
    let rays = unit_rays(d);
    let mut inequalities: Vec<HalfSpace> = (0..d).map(|i| HalfSpace::coordinate(d, i)).collect();
    for h in enumerate_facets(d, &points, &rays) {
        if !inequalities.contains(&h) {
            inequalities.push(h);
        }
    }
    HalfSpaceSystem::new(d, inequalities)
}

/// `α ∈ nQ`.
pub fn dilate_member(q: &HalfSpaceSystem, alpha: &[u64], n: u64) -> bool {
    q.contains(alpha, n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn system_rows(q: &HalfSpaceSystem) -> Vec<(Vec<i64>, i64)> {
        q.inequalities()
            .iter()
            .map(|h| {
                (
                    h.normal().iter().map(|x| x.to_i64().unwrap()).collect(),
                    h.bound().to_i64().unwrap(),
                )
            })
            .collect()
    }

    #[test]
    fn newton_polyhedron_of_two_squares() {
        let q = newton_polyhedron(&MonomialIdeal::pure_powers(&[2, 2]).unwrap());
        assert_eq!(
            system_rows(&q),
            vec![(vec![1, 0], 0), (vec![0, 1], 0), (vec![1, 1], 2)]
        );
    }

    #[test]
    fn newton_polyhedron_of_unequal_powers() {
        let q = newton_polyhedron(&MonomialIdeal::pure_powers(&[3, 2]).unwrap());
        assert_eq!(
            system_rows(&q),
            vec![(vec![1, 0], 0), (vec![0, 1], 0), (vec![2, 3], 6)]
        );
    }

    #[test]
    fn newton_polyhedron_in_three_variables() {
        let q = newton_polyhedron(&MonomialIdeal::pure_powers(&[2, 2, 2]).unwrap());
        assert_eq!(
            system_rows(&q),
            vec![
                (vec![1, 0, 0], 0),
                (vec![0, 1, 0], 0),
                (vec![0, 0, 1], 0),
                (vec![1, 1, 1], 2)
            ]
        );
    }

    #[test]
    fn non_zero_dimensional_newton_polyhedron() {
        let q = newton_polyhedron(&MonomialIdeal::from_rows(2, &[&[1, 1]]).unwrap());
        assert_eq!(
            system_rows(&q),
            vec![(vec![1, 0], 0), (vec![0, 1], 0), (vec![0, 1], 1), (vec![1, 0], 1)]
        );
    }

    #[test]
    fn dilation_membership() {
        let q = newton_polyhedron(&MonomialIdeal::pure_powers(&[2, 2]).unwrap());
        assert!(dilate_member(&q, &[1, 1], 1));
        assert!(!dilate_member(&q, &[1, 0], 1));
        assert!(dilate_member(&q, &[3, 1], 2));
        assert!(!dilate_member(&q, &[2, 1], 2));
    }

    #[test]
    fn big_coefficients_fall_back_to_exact_arithmetic() {
        let huge = BigInt::from(i64::MAX) * BigInt::from(4);
        let h = HalfSpace::new(vec![huge.clone(), BigInt::from(1)], huge);
        assert!(h.small.is_none());
        assert!(h.contains(&[1, 0], 1));
        assert!(!h.contains(&[0, 5], 1));
        let h = HalfSpace::from_i64(&[i64::MAX, i64::MAX], i64::MAX);
        assert!(h.contains(&[u64::MAX / 2, u64::MAX / 2], 3));
    }

    #[test]
    fn halfspace_is_primitive() {
        let h = HalfSpace::from_i64(&[2, 4], 6);
        assert_eq!(h, HalfSpace::from_i64(&[1, 2], 3));
        assert!(HalfSpace::coordinate(3, 1).is_coordinate());
    }
}

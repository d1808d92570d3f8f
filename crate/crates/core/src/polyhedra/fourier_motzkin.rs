//! Exact Fourier–Motzkin elimination.
//!
//! Used as an independent membership oracle for dilated Newton polyhedra:
//! `α ∈ nQ` iff there is `λ ∈ Q_+^q` with `Σ λ_j = n` and `Σ λ_j v_j ≤ α`.
//! Eliminating `λ` symbolically, with `(α, n)` kept as parameters, yields a
//! finite list of homogeneous inequalities in `(α, n)` that never passes
//! through the facet enumeration of the main path.

use std::collections::HashSet;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::exact_math::primitive;
use crate::ideals::MonomialIdeal;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct Row {
    coeffs: Vec<BigInt>,
    ancestors: u128,
}

/// Projects `{(y, p) : rows · (y, p) ≥ 0}` onto the `p` coordinates by
/// eliminating the first `eliminate` columns.
///
/// Redundant rows are pruned with Chernikov's rule: after `k` eliminations a
/// row combining more than `k + 1` input rows is implied by the others. The
/// rule is only applied when the input has at most 128 rows.
pub fn eliminate(rows: &[Vec<BigInt>], eliminate: usize) -> Vec<Vec<BigInt>> {
    let track = rows.len() <= 128;
    let mut current: Vec<Row> = rows
        .iter()
        .enumerate()
        .map(|(i, r)| Row {
            coeffs: primitive(r),
            ancestors: if track { 1u128 << i } else { 0 },
        })
        .collect();
    for step in 1..=eliminate {
        let (mut pos, mut neg, mut next) = (Vec::new(), Vec::new(), Vec::new());
        for row in current {
            let lead = &row.coeffs[0];
            if lead.is_positive() {
                pos.push(row);
            } else if lead.is_negative() {
                neg.push(row);
            } else {
                next.push(Row {
                    coeffs: row.coeffs[1..].to_vec(),
                    ancestors: row.ancestors,
                });
            }
        }
        for p in &pos {
            for q in &neg {
                let ancestors = p.ancestors | q.ancestors;
                if track && ancestors.count_ones() as usize > step + 1 {
                    continue;
                }
                let a = &p.coeffs[0];
                let b = -&q.coeffs[0];
                let combined: Vec<BigInt> = p.coeffs[1..]
                    .iter()
                    .zip(&q.coeffs[1..])
                    .map(|(x, y)| x * &b + y * a)
                    .collect();
                next.push(Row {
                    coeffs: primitive(&combined),
                    ancestors,
                });
            }
        }
        let mut seen = HashSet::new();
        next.retain(|r| !r.coeffs.iter().all(Zero::is_zero) && seen.insert(r.coeffs.clone()));
        current = next;
    }
    current.into_iter().map(|r| r.coeffs).collect()
}

/// Feasibility of a homogeneous system `rows · x ≥ 0` after all variables
/// but the trailing `params.len()` have been eliminated, evaluated at `params`.
pub fn projected_holds(projected: &[Vec<BigInt>], params: &[BigInt]) -> bool {
    projected
        .iter()
        .all(|r| r.iter().zip(params).map(|(a, x)| a * x).sum::<BigInt>() >= BigInt::zero())
}

/// Dilation membership for the Newton polyhedron of one ideal, decided by the
/// projected system. Build once, query many points.
#[derive(Clone, Debug)]
pub struct DilationOracle {
    dim: usize,
    /// Rows over `(α_1, …, α_d, n)`.
    rows: Vec<Vec<BigInt>>,
    small: Option<Vec<Vec<i64>>>,
}

impl DilationOracle {
    pub fn new(ideal: &MonomialIdeal) -> Self {
        let d = ideal.dimension();
        let gens = ideal.generators();
        let q = gens.len();
        let free = q - 1;
        let last = &gens[q - 1];
        // Columns: λ_1..λ_{q−1}, α_1..α_d, n, with λ_q = n − Σ λ_j substituted.
        let width = free + d + 1;
        let mut rows = Vec::new();
        for j in 0..free {
            let mut r = vec![BigInt::zero(); width];
            r[j] = BigInt::from(1);
            rows.push(r);
        }
        // λ_q ≥ 0
        let mut r = vec![BigInt::zero(); width];
        for c in r.iter_mut().take(free) {
            *c = BigInt::from(-1);
        }
        r[width - 1] = BigInt::from(1);
        rows.push(r);
        // α_i − Σ_j λ_j v_{j,i} ≥ 0
        for i in 0..d {
            let mut r = vec![BigInt::zero(); width];
            for (j, g) in gens.iter().take(free).enumerate() {
                r[j] = BigInt::from(last[i]) - BigInt::from(g[i]);
            }
            r[free + i] = BigInt::from(1);
            r[width - 1] = -BigInt::from(last[i]);
            rows.push(r);
        }
        let rows = eliminate(&rows, free);
        let small = rows
            .iter()
            .map(|r| r.iter().map(ToPrimitive::to_i64).collect::<Option<Vec<i64>>>())
            .collect();
        Self { dim: d, rows, small }
    }

    /// The projected inequalities over `(α, n)`.
    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    pub fn contains(&self, alpha: &[u64], n: u64) -> bool {
        debug_assert_eq!(alpha.len(), self.dim);
        if let Some(small) = &self.small {
            if let Some(v) = small_holds(small, alpha, n) {
                return v;
            }
        }
        let mut params: Vec<BigInt> = alpha.iter().map(|&x| BigInt::from(x)).collect();
        params.push(BigInt::from(n));
        projected_holds(&self.rows, &params)
    }
}

fn small_holds(rows: &[Vec<i64>], alpha: &[u64], n: u64) -> Option<bool> {
    for r in rows {
        let mut acc: i128 = 0;
        for (&a, &x) in r.iter().zip(alpha.iter().chain(std::iter::once(&n))) {
            acc = acc.checked_add(i128::from(a).checked_mul(i128::from(x))?)?;
        }
        if acc < 0 {
            return Some(false);
        }
    }
    Some(true)
}

/// One-shot form of [`DilationOracle`].
pub fn fm_member_oracle(ideal: &MonomialIdeal, alpha: &[u64], n: u64) -> bool {
    DilationOracle::new(ideal).contains(alpha, n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyhedra::{dilate_member, newton_polyhedron};

    fn example_a() -> MonomialIdeal {
        MonomialIdeal::from_rows(3, &[&[4, 0, 0], &[0, 5, 0], &[0, 0, 6], &[1, 1, 2]]).unwrap()
    }

    #[test]
    fn agrees_with_facet_path_on_simple_cases() {
        let i = MonomialIdeal::pure_powers(&[2, 2]).unwrap();
        let q = newton_polyhedron(&i);
        for (alpha, n) in [([1u64, 1], 1u64), ([1, 0], 1), ([3, 1], 2)] {
            assert_eq!(fm_member_oracle(&i, &alpha, n), dilate_member(&q, &alpha, n));
        }
    }

    #[test]
    fn generator_is_member() {
        assert!(fm_member_oracle(&example_a(), &[1, 1, 2], 1));
    }

    #[test]
    fn axis_point_below_pure_power_is_not_member() {
        assert!(!fm_member_oracle(&example_a(), &[0, 0, 5], 1));
        assert!(fm_member_oracle(&example_a(), &[0, 0, 6], 1));
    }

    #[test]
    fn single_generator_needs_no_elimination() {
        let i = MonomialIdeal::from_rows(2, &[&[2, 3]]).unwrap();
        let o = DilationOracle::new(&i);
        assert!(o.contains(&[4, 6], 2));
        assert!(!o.contains(&[4, 5], 2));
    }

    #[test]
    fn elimination_projects_a_triangle() {
        // { y ≥ 0, p − y ≥ 0 } projects to p ≥ 0.
        let rows = vec![
            vec![BigInt::from(1), BigInt::from(0)],
            vec![BigInt::from(-1), BigInt::from(1)],
        ];
        assert_eq!(eliminate(&rows, 1), vec![vec![BigInt::from(1)]]);
    }

    #[test]
    fn infeasible_system_projects_to_contradiction() {
        // y ≥ p (with p = 1 as constant column) and y ≤ 0 gives −p ≥ 0.
        let rows = vec![
            vec![BigInt::from(1), BigInt::from(-1)],
            vec![BigInt::from(-1), BigInt::from(0)],
        ];
        let projected = eliminate(&rows, 1);
        assert!(!projected_holds(&projected, &[BigInt::from(1)]));
        assert!(projected_holds(&projected, &[BigInt::from(0)]));
    }
}

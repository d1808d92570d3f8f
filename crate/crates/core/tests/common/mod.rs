#![allow(dead_code)]

use monideal::{ExponentVector, MonomialIdeal, Rational};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const SEED: u64 = 0x5eed_1de4;

pub fn ideal(d: usize, rows: &[&[u64]]) -> MonomialIdeal {
    MonomialIdeal::from_rows(d, rows).unwrap()
}

pub fn example_a() -> MonomialIdeal {
    ideal(3, &[&[4, 0, 0], &[0, 5, 0], &[0, 0, 6], &[1, 1, 2]])
}

pub fn example_b() -> MonomialIdeal {
    MonomialIdeal::pure_powers(&[10, 8, 5]).unwrap()
}

pub fn q(num: i64, den: i64) -> Rational {
    Rational::new(num.into(), den.into())
}

pub fn int(v: i64) -> Rational {
    Rational::from_integer(v.into())
}

/// Generalized binomial coefficient `n(n−1)⋯(n−k+1)/k!`.
pub fn binomial(n: i64, k: u64) -> BigInt {
    (0..k).fold(BigInt::one(), |acc, i| acc * BigInt::from(n - i as i64) / BigInt::from(i + 1))
}

/// Zero-dimensional ideal: one pure power per variable plus up to
/// `6 − d` random mixed monomials, all exponents at most 5.
pub fn random_zero_dimensional(rng: &mut ChaCha8Rng, d: usize) -> MonomialIdeal {
    let mut rows: Vec<ExponentVector> = (0..d)
        .map(|i| ExponentVector::pure_power(d, i, rng.gen_range(1..=5)))
        .collect();
    let extra = rng.gen_range(0..=6 - d);
    for _ in 0..extra {
        rows.push(ExponentVector::new((0..d).map(|_| rng.gen_range(0..=5)).collect()));
    }
    rows.retain(|v| v.degree() > 0);
    MonomialIdeal::new(d, rows).unwrap()
}

/// Zero-dimensional ideal generated in a single degree `r`, at most six
/// generators.
pub fn random_equigenerated(rng: &mut ChaCha8Rng, d: usize) -> MonomialIdeal {
    let r = rng.gen_range(2..=5u64);
    let mut rows: Vec<ExponentVector> = (0..d).map(|i| ExponentVector::pure_power(d, i, r)).collect();
    let extra = rng.gen_range(0..=6 - d);
    for _ in 0..extra {
        let mut a = vec![0u64; d];
        for _ in 0..r {
            a[rng.gen_range(0..d)] += 1;
        }
        rows.push(ExponentVector::new(a));
    }
    MonomialIdeal::new(d, rows).unwrap()
}

/// 100 general ideals followed by 40 equigenerated ones, `d ∈ {2, 3}`.
pub fn random_suite() -> Vec<MonomialIdeal> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut out = Vec::new();
    for k in 0..100 {
        out.push(random_zero_dimensional(&mut rng, 2 + k % 2));
    }
    for k in 0..40 {
        out.push(random_equigenerated(&mut rng, 2 + k % 2));
    }
    out
}

/// Gaussian elimination over the rationals; `None` when inconsistent.
/// Free variables are set to zero.
pub fn solve(mut a: Vec<Vec<Rational>>, mut b: Vec<Rational>) -> Option<Vec<Rational>> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        b.swap(r, p);
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let f = &a[i][c] / &a[r][c];
                for j in 0..cols {
                    let delta = &f * &a[r][j];
                    a[i][j] -= delta;
                }
                let delta = &f * &b[r];
                b[i] -= delta;
            }
        }
        pivots.push((r, c));
        r += 1;
        if r == rows {
            break;
        }
    }
    if (r..rows).any(|i| !b[i].is_zero()) {
        return None;
    }
    let mut x = vec![Rational::zero(); cols];
    for (i, c) in pivots {
        x[c] = &b[i] / &a[i][c];
    }
    Some(x)
}

/// `z ∈ conv(points)`, by trying every subset of at most `d + 1` points
/// for a nonnegative barycentric solution.
pub fn in_convex_hull(points: &[Vec<u64>], z: &[u64]) -> bool {
    let d = z.len();
    let k_max = points.len().min(d + 1);
    for k in 1..=k_max {
        let mut idx: Vec<usize> = (0..k).collect();
        loop {
            let mut a: Vec<Vec<Rational>> = (0..d)
                .map(|i| idx.iter().map(|&j| int(points[j][i] as i64)).collect())
                .collect();
            a.push(vec![Rational::one(); k]);
            let mut b: Vec<Rational> = z.iter().map(|&x| int(x as i64)).collect();
            b.push(Rational::one());
            if let Some(l) = solve(a, b) {
                let residual_ok = verify_combination(points, &idx, &l, z);
                if residual_ok && l.iter().all(|x| !x.is_negative()) {
                    return true;
                }
            }
            if !next_subset(&mut idx, points.len()) {
                break;
            }
        }
    }
    false
}

fn verify_combination(points: &[Vec<u64>], idx: &[usize], l: &[Rational], z: &[u64]) -> bool {
    let sum: Rational = l.iter().sum();
    if sum != Rational::one() {
        return false;
    }
    (0..z.len()).all(|i| {
        let v: Rational = idx.iter().zip(l).map(|(&j, lj)| lj * int(points[j][i] as i64)).sum();
        v == int(z[i] as i64)
    })
}

fn next_subset(idx: &mut [usize], n: usize) -> bool {
    let k = idx.len();
    for i in (0..k).rev() {
        if idx[i] < n - k + i {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Hilbert coefficients from values `f(0..=d)` via the full linear system
/// `f(n) = Σ (−1)^i e_i C(n+d−1−i, d−i)`.
pub fn hilbert_coefficients_oracle(values: &[Rational], d: usize) -> Vec<Rational> {
    let a: Vec<Vec<Rational>> = (0..=d as i64)
        .map(|n| {
            (0..=d)
                .map(|i| {
                    let c = Rational::from_integer(binomial(n + d as i64 - 1 - i as i64, (d - i) as u64));
                    if i % 2 == 0 {
                        c
                    } else {
                        -c
                    }
                })
                .collect()
        })
        .collect();
    solve(a, values[..=d].to_vec()).expect("triangular system is regular")
}

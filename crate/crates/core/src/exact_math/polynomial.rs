use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::{factorial, integer, Rational};
use crate::error::{Error, Result};

/// Univariate polynomial in `n` with exact rational coefficients, constant
/// term first. Trailing zeros are never stored, so the zero polynomial has no
/// coefficients at all.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

/// Printing order for [`Polynomial::render`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum TermOrder {
    /// Highest power first (the `Display` order).
    #[default]
    Descending,
    /// Constant term first.
    Ascending,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_integers(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| integer(c)).collect())
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// The polynomial `n`.
    pub fn identity() -> Self {
        Self::from_integers(&[0, 1])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `n^power`, zero past the degree.
    pub fn coefficient(&self, power: usize) -> Rational {
        self.coeffs.get(power).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading_coefficient(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_int(&self, x: i64) -> Rational {
        self.eval(&integer(x))
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * factor).collect())
    }

    /// Human-readable form in the requested term order, e.g.
    /// `(47/3)n^3 + (35/2)n^2 + (35/6)n`.
    pub fn render(&self, order: TermOrder) -> String {
        let mut terms: Vec<(usize, &Rational)> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .collect();
        if terms.is_empty() {
            return "0".to_string();
        }
        if order == TermOrder::Descending {
            terms.reverse();
        }
        let mut out = String::new();
        for (i, (power, c)) in terms.into_iter().enumerate() {
            let negative = c.is_negative();
            match (i, negative) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            out.push_str(&format_term(&c.abs(), power));
        }
        out
    }
}

fn format_term(c: &Rational, power: usize) -> String {
    let coeff = if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("({c})")
    };
    match power {
        0 => coeff,
        _ => {
            let var = if power == 1 {
                "n".to_string()
            } else {
                format!("n^{power}")
            };
            if c.is_one() {
                var
            } else {
                format!("{coeff}{var}")
            }
        }
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(TermOrder::Descending))
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..len).map(|i| self.coefficient(i) + rhs.coefficient(i)).collect())
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self + &(-rhs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: Polynomial) -> Polynomial { (&self).$m(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

/// `C(n + shift, k)` as a polynomial in `n`, i.e. `(n+shift)(n+shift-1)…(n+shift-k+1)/k!`.
pub fn binomial_polynomial(shift: i64, k: usize) -> Polynomial {
    let mut p = Polynomial::constant(Rational::one());
    for j in 0..k as i64 {
        p = &p * &Polynomial::from_integers(&[shift - j, 1]);
    }
    p.scale(&Rational::from_integer(factorial(k)).recip())
}

/// The unique polynomial of degree below `points.len()` through every
/// `(argument, value)` pair, by Newton divided differences.
pub fn interpolate_polynomial(points: &[(i64, Rational)]) -> Result<Polynomial> {
    if points.is_empty() {
        return Err(Error::NoInterpolationNodes);
    }
    for (i, (x, _)) in points.iter().enumerate() {
        if points[..i].iter().any(|(y, _)| y == x) {
            return Err(Error::RepeatedInterpolationNode(*x));
        }
    }
    let xs: Vec<Rational> = points.iter().map(|(x, _)| integer(*x)).collect();
    let mut table: Vec<Rational> = points.iter().map(|(_, v)| v.clone()).collect();
    let n = points.len();
    for level in 1..n {
        for i in (level..n).rev() {
            table[i] = (&table[i] - &table[i - 1]) / (&xs[i] - &xs[i - level]);
        }
    }
    // Horner on the Newton form: c_0 + (n - x_0)(c_1 + (n - x_1)(c_2 + …)).
    let mut p = Polynomial::constant(table[n - 1].clone());
    for i in (0..n - 1).rev() {
        let factor = Polynomial::new(vec![-xs[i].clone(), Rational::one()]);
        p = &(&p * &factor) + &Polynomial::constant(table[i].clone());
    }
    Ok(p)
}

/// Coordinates `(e_0, …, e_d)` of `p` in the alternating binomial basis
/// `p(n) = Σ (−1)^i e_i C(n+d−1−i, d−i)`.
///
/// The basis element for `e_i` has degree `d − i` and leading coefficient
/// `1/(d−i)!`, so the system is triangular and is solved from the top.
pub fn to_hilbert_coefficients(p: &Polynomial, d: usize) -> Result<Vec<Rational>> {
    if let Some(deg) = p.degree().filter(|&deg| deg > d) {
        return Err(Error::DegreeTooLarge { degree: deg, bound: d });
    }
    let mut rest = p.clone();
    let mut e = Vec::with_capacity(d + 1);
    for i in 0..=d {
        let k = d - i;
        let basis = binomial_polynomial(d as i64 - 1 - i as i64, k);
        let signed = rest.coefficient(k) * Rational::from_integer(factorial(k));
        rest = &rest - &basis.scale(&signed);
        e.push(if i % 2 == 0 { signed } else { -signed });
    }
    debug_assert!(rest.is_zero());
    Ok(e)
}

/// Inverse of [`to_hilbert_coefficients`].
pub fn from_hilbert_coefficients(e: &[Rational], d: usize) -> Polynomial {
    e.iter().enumerate().take(d + 1).fold(Polynomial::zero(), |acc, (i, ei)| {
        let sign = if i % 2 == 0 { ei.clone() } else { -ei.clone() };
        &acc + &binomial_polynomial(d as i64 - 1 - i as i64, d - i).scale(&sign)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_math::{rational, RationalMatrix};
    use proptest::prelude::*;

    fn pts(values: &[(i64, i64)]) -> Vec<(i64, Rational)> {
        values.iter().map(|&(x, y)| (x, integer(y))).collect()
    }

    #[test]
    fn interpolates_square() {
        let p = interpolate_polynomial(&pts(&[(0, 0), (1, 1), (2, 4)])).unwrap();
        assert_eq!(p, Polynomial::from_integers(&[0, 0, 1]));
    }

    #[test]
    fn interpolates_length_values_of_pure_power_ideal() {
        let p = interpolate_polynomial(&pts(&[(0, 0), (1, 112), (2, 704), (3, 2176)])).unwrap();
        let expected = Polynomial::new(vec![
            integer(0),
            rational(16, 3),
            integer(40),
            rational(200, 3),
        ]);
        assert_eq!(p, expected);
    }

    #[test]
    fn interpolates_affine() {
        let p = interpolate_polynomial(&pts(&[(0, 1), (1, 2)])).unwrap();
        assert_eq!(p, Polynomial::from_integers(&[1, 1]));
    }

    #[test]
    fn repeated_node_is_rejected() {
        let err = interpolate_polynomial(&pts(&[(0, 1), (2, 2), (0, 3)])).unwrap_err();
        assert_eq!(err, Error::RepeatedInterpolationNode(0));
        assert!(err.to_string().contains("repeated interpolation node"));
        assert_eq!(interpolate_polynomial(&[]), Err(Error::NoInterpolationNodes));
    }

    /// Independent route: evaluate the alternating binomial basis at
    /// n = 0..=d and solve the resulting square system by elimination.
    fn hilbert_coefficients_by_linear_system(p: &Polynomial, d: usize) -> Vec<Rational> {
        let choose = |top: i64, k: usize| -> Rational {
            if k == 0 {
                return Rational::one();
            }
            if top < k as i64 || top < 0 {
                return Rational::zero();
            }
            let mut acc = Rational::one();
            for j in 0..k as i64 {
                acc = acc * integer(top - j) / integer(j + 1);
            }
            acc
        };
        let rows: Vec<Vec<Rational>> = (0..=d as i64)
            .map(|n| {
                (0..=d)
                    .map(|i| {
                        let b = choose(n + d as i64 - 1 - i as i64, d - i);
                        if i % 2 == 0 {
                            b
                        } else {
                            -b
                        }
                    })
                    .collect()
            })
            .collect();
        let rhs: Vec<Rational> = (0..=d as i64).map(|n| p.eval_int(n)).collect();
        RationalMatrix::new(rows).unwrap().solve(&rhs).unwrap().unwrap()
    }

    #[test]
    fn hilbert_coefficients_of_mixed_ideal() {
        let p = Polynomial::new(vec![
            integer(0),
            rational(35, 6),
            rational(35, 2),
            rational(47, 3),
        ]);
        let oracle = hilbert_coefficients_by_linear_system(&p, 3);
        let expected: Vec<Rational> = [94, 59, 4, 0].iter().map(|&x| integer(x)).collect();
        assert_eq!(oracle, expected);
        assert_eq!(to_hilbert_coefficients(&p, 3).unwrap(), expected);
    }

    #[test]
    fn hilbert_coefficients_of_square_of_maximal_ideal() {
        let p = Polynomial::from_integers(&[0, 1, 2]);
        let expected: Vec<Rational> = [4, 1, 0].iter().map(|&x| integer(x)).collect();
        assert_eq!(to_hilbert_coefficients(&p, 2).unwrap(), expected);
        assert_eq!(hilbert_coefficients_by_linear_system(&p, 2), expected);
    }

    #[test]
    fn hilbert_coefficients_of_zero() {
        let e = to_hilbert_coefficients(&Polynomial::zero(), 3).unwrap();
        assert!(e.iter().all(Zero::is_zero));
        assert_eq!(e.len(), 4);
    }

    #[test]
    fn degree_above_basis_is_rejected() {
        let p = Polynomial::from_integers(&[0, 0, 0, 1]);
        assert!(matches!(
            to_hilbert_coefficients(&p, 2),
            Err(Error::DegreeTooLarge { degree: 3, bound: 2 })
        ));
    }

    #[test]
    fn rendering() {
        let p = Polynomial::new(vec![
            integer(0),
            rational(35, 6),
            rational(35, 2),
            rational(47, 3),
        ]);
        assert_eq!(p.to_string(), "(47/3)n^3 + (35/2)n^2 + (35/6)n");
        assert_eq!(
            p.render(TermOrder::Ascending),
            "(35/6)n + (35/2)n^2 + (47/3)n^3"
        );
        assert_eq!(Polynomial::from_integers(&[1, 6, 19, 20]).to_string(), "20n^3 + 19n^2 + 6n + 1");
        assert_eq!(Polynomial::from_integers(&[-1, 0, 1]).to_string(), "n^2 - 1");
        assert_eq!(Polynomial::from_integers(&[0, -1]).to_string(), "-n");
        assert_eq!(Polynomial::zero().to_string(), "0");
    }

    #[test]
    fn binomial_polynomial_matches_counts() {
        // C(n+2, 2) at n = 3 is 10.
        assert_eq!(binomial_polynomial(2, 2).eval_int(3), integer(10));
        // C(n-1, 2) vanishes at n = 0 and n = 1 and is 1 at n = 3.
        let p = binomial_polynomial(-1, 2);
        assert_eq!(p.eval_int(1), integer(0));
        assert_eq!(p.eval_int(3), integer(1));
    }

    fn small_rational() -> impl Strategy<Value = Rational> {
        (-50i64..50, 1i64..12).prop_map(|(a, b)| rational(a, b))
    }

    proptest! {
        #[test]
        fn hilbert_basis_round_trip(coeffs in prop::collection::vec(small_rational(), 0..5), extra in 0usize..2) {
            let p = Polynomial::new(coeffs);
            let d = p.degree().unwrap_or(0) + extra;
            let e = to_hilbert_coefficients(&p, d).unwrap();
            let back = from_hilbert_coefficients(&e, d);
            for n in 0..=(d as i64 + 2) {
                prop_assert_eq!(back.eval_int(n), p.eval_int(n));
            }
        }

        #[test]
        fn interpolation_reproduces_points(values in prop::collection::vec(small_rational(), 1..7), offset in -5i64..5) {
            let points: Vec<(i64, Rational)> = values
                .into_iter()
                .enumerate()
                .map(|(i, v)| (offset + 2 * i as i64, v))
                .collect();
            let p = interpolate_polynomial(&points).unwrap();
            prop_assert!(p.degree().is_none_or(|d| d < points.len()));
            for (x, v) in &points {
                prop_assert_eq!(&p.eval_int(*x), v);
            }
        }
    }
}

//! Hilbert functions of the filtration `{closure(I^n)}` for zero-dimensional
//! monomial ideals.
//!
//! `f(n) = ℓ(R / closure(I^n))` is computed twice: as the number of lattice
//! points of the orthant outside `nQ`, and as `E_S(n) − E_P(n)`. Every value
//! handed out has passed the comparison.

use std::sync::OnceLock;

use num_traits::{One, Signed, Zero};

use crate::ehrhart::{count_in_box, ehrhart_polynomial};
use crate::error::{Error, Result};
use crate::exact_math::{
    factorial, interpolate_polynomial, is_integral, to_hilbert_coefficients, Polynomial, Rational,
};
use crate::ideals::MonomialIdeal;
use crate::polyhedra::{base_simplex, newton_polyhedron, polytope_p, HalfSpaceSystem, Polytope};

/// Cached geometry for one ideal: `Q`, `S`, `P` and the two Ehrhart
/// polynomials.
#[derive(Debug)]
pub struct HilbertAnalysis {
    ideal: MonomialIdeal,
    exponents: Vec<u64>,
    newton: HalfSpaceSystem,
    simplex: Polytope,
    polytope: Polytope,
    extra_nodes: u64,
    e_s: OnceLock<Polynomial>,
    e_p: OnceLock<Polynomial>,
}

impl HilbertAnalysis {
    pub fn new(ideal: &MonomialIdeal) -> Result<Self> {
        Self::build(ideal, "Hilbert analysis")
    }

    fn build(ideal: &MonomialIdeal, operation: &'static str) -> Result<Self> {
        let d = ideal.dimension();
        let exponents = ideal
            .pure_power_exponents()
            .ok_or(Error::NotZeroDimensional { operation })?;
        if d < 2 {
            return Err(Error::TooFewVariables {
                operation,
                required: 2,
                found: d,
            });
        }
        Ok(Self {
            ideal: ideal.clone(),
            exponents,
            newton: newton_polyhedron(ideal),
            simplex: base_simplex(ideal)?,
            polytope: polytope_p(ideal)?,
            extra_nodes: 2,
            e_s: OnceLock::new(),
            e_p: OnceLock::new(),
        })
    }

    /// Number of verification nodes past `d` used by
    /// [`hilbert_polynomial`](Self::hilbert_polynomial). Default 2.
    pub fn with_extra_nodes(mut self, extra: u64) -> Self {
        self.extra_nodes = extra;
        self
    }

    pub fn ideal(&self) -> &MonomialIdeal {
        &self.ideal
    }

    pub fn simplex(&self) -> &Polytope {
        &self.simplex
    }

    pub fn polytope(&self) -> &Polytope {
        &self.polytope
    }

    pub fn simplex_ehrhart(&self) -> Result<&Polynomial> {
        cached(&self.e_s, || ehrhart_polynomial(&self.simplex))
    }

    pub fn polytope_ehrhart(&self) -> Result<&Polynomial> {
        cached(&self.e_p, || ehrhart_polynomial(&self.polytope))
    }

    /// Box enumerated by [`length`](Self::length), as inclusive upper bounds.
    pub fn length_box(&self, n: u64) -> Vec<u64> {
        self.exponents.iter().map(|&a| (n * a).saturating_sub(1)).collect()
    }

    /// `|N^d \ nQ|`. Points with a coordinate `≥ n·a_i` lie in `nQ`.
    pub fn length(&self, n: u64) -> u64 {
        if n == 0 {
            return 0;
        }
        count_in_box(&self.length_box(n), |p| !self.newton.contains(p, n))
    }

    /// `E_S(n) − E_P(n)`, checked against [`length`](Self::length).
    pub fn hilbert_function(&self, n: u64) -> Result<u64> {
        let x = n as i64;
        let ehrhart = self.simplex_ehrhart()?.eval_int(x) - self.polytope_ehrhart()?.eval_int(x);
        let length = self.length(n);
        if ehrhart != Rational::from_integer(length.into()) {
            return Err(Error::EhrhartLengthMismatch {
                n,
                ehrhart: ehrhart.to_string(),
                length,
            });
        }
        Ok(length)
    }

    /// Interpolates `f` at `n = 0..=d` and verifies the extra nodes.
    pub fn hilbert_polynomial(&self) -> Result<Polynomial> {
        let d = self.ideal.dimension() as u64;
        let nodes = (0..=d)
            .map(|n| Ok((n as i64, Rational::from_integer(self.hilbert_function(n)?.into()))))
            .collect::<Result<Vec<_>>>()?;
        let poly = interpolate_polynomial(&nodes)?;
        for n in d + 1..=d + self.extra_nodes {
            let value = self.hilbert_function(n)?;
            if poly.eval_int(n as i64) != Rational::from_integer(value.into()) {
                return Err(Error::CrossCheck(format!(
                    "Hilbert function leaves the interpolating polynomial at n = {n}"
                )));
            }
        }
        if poly.degree() != Some(d as usize) || !poly.coefficient(0).is_zero() {
            return Err(Error::CrossCheck(format!(
                "Hilbert polynomial {poly} does not have degree {d} and zero constant term"
            )));
        }
        Ok(poly)
    }

    /// `e(I) = d!·c_d`.
    pub fn multiplicity(&self) -> Result<Rational> {
        let d = self.ideal.dimension();
        Ok(self.hilbert_polynomial()?.coefficient(d) * Rational::from_integer(factorial(d)))
    }

    pub fn report(&self) -> Result<HilbertReport> {
        let d = self.ideal.dimension();
        let poly = self.hilbert_polynomial()?;
        let c: Vec<Rational> = (0..=d).map(|i| poly.coefficient(i)).collect();
        let e = to_hilbert_coefficients(&poly, d)?;
        if let Some((index, value)) = e.iter().enumerate().find(|(_, v)| !is_integral(v)) {
            return Err(Error::NonIntegralCoefficient {
                index,
                value: value.to_string(),
            });
        }
        let multiplicity = &c[d] * Rational::from_integer(factorial(d));
        let facet_multiplicities = (0..d)
            .map(|i| facet_multiplicity(&self.ideal.facet_ideal(i)?))
            .collect::<Result<Vec<_>>>()?;

        let total: Rational = facet_multiplicities.iter().sum();
        let lower_factorial = Rational::from_integer(factorial(d - 1));
        let two = Rational::from_integer(2.into());
        let boletin_lhs = &two * &c[d - 1];
        let omitted_sums: Vec<Rational> = facet_multiplicities.iter().map(|m| &total - m).collect();
        let boletin_rhs: Vec<Rational> = omitted_sums.iter().map(|s| s / &lower_factorial).collect();
        let boletin_holds = boletin_rhs.iter().map(|r| &boletin_lhs >= r).collect();
        let cor_lhs = &e[0] * Rational::from_integer((d as i64 - 1).into()) - &two * &e[1];
        let floor = Rational::from_integer((d as i64 - 1).into());
        let cor_holds = omitted_sums
            .iter()
            .map(|s| &cor_lhs >= s && s >= &floor)
            .collect();

        Ok(HilbertReport {
            dimension: d,
            c_zero: c[0].is_zero(),
            e_last_zero: e[d].is_zero(),
            e_nonnegative: e.iter().all(|x| !x.is_negative()),
            c_coefficients: c,
            e_coefficients: e,
            multiplicity,
            facet_multiplicities,
            boletin_lhs,
            boletin_rhs,
            boletin_holds,
            cor_lhs,
            cor_rhs: omitted_sums,
            cor_holds,
        })
    }
}

fn cached(
    cell: &OnceLock<Polynomial>,
    compute: impl FnOnce() -> Result<Polynomial>,
) -> Result<&Polynomial> {
    if let Some(p) = cell.get() {
        return Ok(p);
    }
    let p = compute()?;
    Ok(cell.get_or_init(|| p))
}

/// `e(J)` of a zero-dimensional ideal in `d ≥ 1` variables; `J = (x^a)` when
/// `d = 1`.
fn facet_multiplicity(ideal: &MonomialIdeal) -> Result<Rational> {
    if ideal.dimension() == 1 {
        let a = ideal.pure_power_exponents().ok_or(Error::NotZeroDimensional {
            operation: "facet multiplicity",
        })?;
        return Ok(Rational::from_integer(a[0].into()));
    }
    HilbertAnalysis::new(ideal)?.multiplicity()
}

/// Coefficients, multiplicities and inequality verdicts for one ideal.
///
/// The index `j` of `boletin_rhs`, `cor_rhs` and the verdict vectors is the
/// omitted variable (zero-based).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertReport {
    pub dimension: usize,
    /// `c_0, …, c_d`, constant term first.
    pub c_coefficients: Vec<Rational>,
    /// `e_0, …, e_d`.
    pub e_coefficients: Vec<Rational>,
    /// `e(I) = d!·c_d`.
    pub multiplicity: Rational,
    /// `e(I_1), …, e(I_d)`.
    pub facet_multiplicities: Vec<Rational>,
    /// `2c_{d−1}`.
    pub boletin_lhs: Rational,
    /// `Σ_{i≠j} e(I_i) / (d−1)!`.
    pub boletin_rhs: Vec<Rational>,
    pub boletin_holds: Vec<bool>,
    /// `e_0(d−1) − 2e_1`.
    pub cor_lhs: Rational,
    /// `Σ_{i≠j} e(I_i)`.
    pub cor_rhs: Vec<Rational>,
    /// `cor_lhs ≥ cor_rhs[j] ≥ d − 1`.
    pub cor_holds: Vec<bool>,
    pub c_zero: bool,
    pub e_last_zero: bool,
    pub e_nonnegative: bool,
}

impl HilbertReport {
    /// Every verdict and invariant in the report holds.
    pub fn all_hold(&self) -> bool {
        self.c_zero
            && self.e_last_zero
            && self.e_nonnegative
            && self.boletin_holds.iter().all(|&b| b)
            && self.cor_holds.iter().all(|&b| b)
    }

    pub fn boletin_is_equality(&self) -> bool {
        self.boletin_rhs.iter().all(|r| r == &self.boletin_lhs)
    }

    /// `Polynomial` form of `f`.
    pub fn hilbert_polynomial(&self) -> Polynomial {
        Polynomial::new(self.c_coefficients.clone())
    }

    pub fn e0(&self) -> &Rational {
        &self.e_coefficients[0]
    }

    pub fn is_complete_intersection_multiplicity(&self, exponents: &[u64]) -> bool {
        let product: Rational = exponents
            .iter()
            .fold(Rational::one(), |acc, &a| acc * Rational::from_integer(a.into()));
        product == self.multiplicity
    }
}

/// `ℓ(R / closure(I^n))` by complement counting.
pub fn length(ideal: &MonomialIdeal, n: u64) -> Result<u64> {
    Ok(HilbertAnalysis::build(ideal, "length")?.length(n))
}

pub fn hilbert_function(ideal: &MonomialIdeal, n: u64) -> Result<u64> {
    HilbertAnalysis::build(ideal, "Hilbert function")?.hilbert_function(n)
}

pub fn hilbert_polynomial(ideal: &MonomialIdeal) -> Result<Polynomial> {
    HilbertAnalysis::build(ideal, "Hilbert polynomial")?.hilbert_polynomial()
}

pub fn hilbert_report(ideal: &MonomialIdeal) -> Result<HilbertReport> {
    HilbertAnalysis::build(ideal, "Hilbert report")?.report()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_math::rational;

    fn example_a() -> MonomialIdeal {
        MonomialIdeal::from_rows(3, &[&[4, 0, 0], &[0, 5, 0], &[0, 0, 6], &[1, 1, 2]]).unwrap()
    }

    fn example_b() -> MonomialIdeal {
        MonomialIdeal::pure_powers(&[10, 8, 5]).unwrap()
    }

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| Rational::from_integer(x.into())).collect()
    }

    #[test]
    fn lengths() {
        let b = example_b();
        let values: Vec<u64> = (0..=3).map(|n| length(&b, n).unwrap()).collect();
        assert_eq!(values, vec![0, 112, 704, 2176]);
        assert_eq!(length(&MonomialIdeal::maximal(2), 2).unwrap(), 3);
        assert_eq!(length(&example_a(), 1).unwrap(), 39);
    }

    #[test]
    fn hilbert_function_values() {
        assert_eq!(hilbert_function(&example_a(), 1).unwrap(), 39);
        assert_eq!(hilbert_function(&MonomialIdeal::maximal(2), 3).unwrap(), 6);
        assert_eq!(hilbert_function(&example_b(), 2).unwrap(), 704);
    }

    #[test]
    fn hilbert_polynomials() {
        let p = hilbert_polynomial(&example_a()).unwrap();
        assert_eq!(p.to_string(), "(47/3)n^3 + (35/2)n^2 + (35/6)n");
        let p = hilbert_polynomial(&example_b()).unwrap();
        assert_eq!(
            p,
            Polynomial::new(vec![rational(0, 1), rational(16, 3), rational(40, 1), rational(200, 3)])
        );
        let p = hilbert_polynomial(&MonomialIdeal::maximal(2).power(3)).unwrap();
        assert_eq!(p, Polynomial::new(vec![rational(0, 1), rational(3, 2), rational(9, 2)]));
    }

    #[test]
    fn report_for_example_a() {
        let r = hilbert_report(&example_a()).unwrap();
        assert_eq!(r.e_coefficients, ints(&[94, 59, 4, 0]));
        assert_eq!(r.facet_multiplicities, ints(&[30, 24, 20]));
        assert_eq!(r.multiplicity, rational(94, 1));
        assert_eq!(r.boletin_lhs, rational(35, 1));
        assert_eq!(r.boletin_rhs[2], rational(27, 1));
        assert_eq!(r.cor_lhs, rational(70, 1));
        assert_eq!(r.cor_rhs[2], rational(54, 1));
        assert!(r.all_hold());
    }

    #[test]
    fn report_for_maximal_ideal_square_is_tight() {
        let r = hilbert_report(&MonomialIdeal::maximal(3).power(2)).unwrap();
        assert_eq!(r.c_coefficients[2], rational(2, 1));
        assert_eq!(r.boletin_lhs, rational(4, 1));
        assert!(r.boletin_is_equality());
        assert!(r.all_hold());
    }

    #[test]
    fn report_for_example_b() {
        let r = hilbert_report(&example_b()).unwrap();
        assert_eq!(r.e0(), &rational(400, 1));
        assert!(r.is_complete_intersection_multiplicity(&[10, 8, 5]));
        assert!(r.all_hold());
    }

    #[test]
    fn preconditions() {
        let not_zero_dim = MonomialIdeal::from_rows(2, &[&[1, 1]]).unwrap();
        let err = length(&not_zero_dim, 1).unwrap_err();
        assert_eq!(err.to_string(), "length requires zero-dimensional ideal");
        let line = MonomialIdeal::from_rows(1, &[&[3]]).unwrap();
        assert!(matches!(
            hilbert_report(&line),
            Err(Error::TooFewVariables { .. })
        ));
    }
}

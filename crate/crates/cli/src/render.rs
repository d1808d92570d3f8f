use monideal::exact_math::TermOrder;
use monideal::ideals::monomial_string;
use monideal::{ExponentVector, HalfSpace, MonomialIdeal, Polynomial, Rational};
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

pub fn rational_json(q: &Rational) -> Value {
    json!({ "num": q.numer().to_string(), "den": q.denom().to_string() })
}

pub fn rationals_json(qs: &[Rational]) -> Value {
    qs.iter().map(rational_json).collect()
}

/// Coefficients constant term first, plus the rendered text.
pub fn polynomial_json(p: &Polynomial, order: TermOrder) -> Value {
    json!({
        "coefficients": rationals_json(p.coefficients()),
        "degree": p.degree(),
        "text": p.render(order),
    })
}

pub fn monomials_json(gens: &[ExponentVector]) -> Value {
    gens.iter().map(|g| Value::from(g.entries().to_vec())).collect()
}

pub fn monomial(a: &[u64], names: Option<&[String]>) -> String {
    monomial_string(a, names)
}

pub fn ideal(i: &MonomialIdeal, names: Option<&[String]>) -> String {
    let gens: Vec<String> = i.generators().iter().map(|g| monomial_string(g, names)).collect();
    format!("({})", gens.join(", "))
}

pub fn join(qs: &[Rational]) -> String {
    qs.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}

pub fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// `⟨a, x⟩ ≥ b` as `x1 + x2 - 2x3 >= 0`.
pub fn linear_form(h: &HalfSpace) -> String {
    let mut out = String::new();
    for (i, c) in h.normal().iter().enumerate().filter(|(_, c)| !c.is_zero()) {
        let sign = if c.is_negative() { "-" } else { "+" };
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(&format!(" {sign} "));
        }
        let magnitude = c.abs();
        if !magnitude.is_one() {
            out.push_str(&magnitude.to_string());
        }
        out.push_str(&format!("x{}", i + 1));
    }
    if out.is_empty() {
        out.push('0');
    }
    format!("{out} >= {}", h.bound())
}

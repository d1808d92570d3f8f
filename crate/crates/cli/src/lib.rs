//! Command-line front end for `monideal`.
//!
//! [`run`] parses arguments, reads the ideal, dispatches one command and
//! writes either plain text or a JSON document. Exit codes: 0 success,
//! 1 invalid input, 2 precondition violation or size guard, 3 failed
//! cross-check.

pub mod parse;
mod render;

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use monideal::ehrhart::{self, box_size, reciprocity_against};
use monideal::exact_math::{from_hilbert_coefficients, to_hilbert_coefficients, TermOrder};
use monideal::polyhedra::DilationOracle;
use monideal::veronese::{witness_m1, witness_m2};
use monideal::{
    a_invariant_search_oracle, closure, relative_volume, veronese_a_invariant, veronese_facets,
    ClosureFiltration, ErrorKind, HilbertAnalysis, MonomialIdeal, Polytope, Reciprocity,
};
use serde_json::{json, Value};

pub use parse::{parse_ideal, IdealDocument, ParseError};
use render::{linear_form, monomials_json, polynomial_json, rational_json, rationals_json};

pub const SCHEMA: &str = "monideal/1";

#[derive(Debug, Parser)]
#[command(name = "monideal", version, about = "Integral closures, Hilbert functions and Ehrhart data of monomial ideals")]
pub struct Cli {
    /// Emit a JSON document instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Run every available cross-check and exit 3 if one fails.
    #[arg(long, global = true)]
    pub check: bool,
    /// Abort before enumerating more lattice points than this.
    #[arg(long, global = true, default_value_t = 100_000_000)]
    pub max_points: u128,
    /// Print polynomials with ascending powers.
    #[arg(long, global = true)]
    pub ascending: bool,
    /// Number of variables, when larger than the highest index used.
    #[arg(long, global = true)]
    pub dim: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

/// Where the ideal comes from: `--ideal TEXT`, a file, or stdin.
#[derive(Debug, Clone, clap::Args)]
pub struct Source {
    /// Ideal given inline.
    #[arg(long, conflicts_with = "file")]
    pub ideal: Option<String>,
    /// File holding the ideal; stdin when absent.
    pub file: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Object {
    /// The simplex spanned by the origin and the pure powers.
    #[value(name = "S", alias = "s")]
    S,
    /// The polytope cut from the simplex by the Newton polyhedron.
    #[value(name = "P", alias = "p")]
    P,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Minimal generators of the integral closure of I^N.
    Closure {
        #[arg(short = 'n')]
        n: u64,
        #[command(flatten)]
        source: Source,
    },
    /// Hilbert function f(N) with the length cross-check.
    Hilbert {
        #[arg(short = 'n')]
        n: u64,
        #[command(flatten)]
        source: Source,
    },
    /// Hilbert polynomial and its coefficients.
    Hpoly {
        #[command(flatten)]
        source: Source,
    },
    /// Hilbert coefficients, multiplicities and inequality verdicts.
    Report {
        #[command(flatten)]
        source: Source,
    },
    /// Stabilization of the closure filtration.
    Stab {
        #[command(flatten)]
        source: Source,
    },
    /// Ehrhart polynomial, volume and reciprocity of S or P.
    Ehrhart {
        #[arg(long, value_enum)]
        object: Object,
        /// Reciprocity is checked for n = 1..=N_MAX.
        #[arg(long, default_value_t = 3)]
        n_max: u64,
        #[command(flatten)]
        source: Source,
    },
    /// Facets and a-invariant of the Rees cone of the r-th Veronese ideal.
    Veronese {
        #[arg(short = 'd')]
        d: usize,
        #[arg(short = 'r')]
        r: u64,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Closure { .. } => "closure",
            Command::Hilbert { .. } => "hilbert",
            Command::Hpoly { .. } => "hpoly",
            Command::Report { .. } => "report",
            Command::Stab { .. } => "stab",
            Command::Ehrhart { .. } => "ehrhart",
            Command::Veronese { .. } => "veronese",
        }
    }

    fn source(&self) -> Option<&Source> {
        match self {
            Command::Closure { source, .. }
            | Command::Hilbert { source, .. }
            | Command::Hpoly { source }
            | Command::Report { source }
            | Command::Stab { source }
            | Command::Ehrhart { source, .. } => Some(source),
            Command::Veronese { .. } => None,
        }
    }
}

/// A failed run, with its exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Failure {
    Input { message: String, position: Option<usize> },
    Precondition(String),
    Internal(String),
}

impl Failure {
    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Input { .. } => 1,
            Failure::Precondition(_) => 2,
            Failure::Internal(_) => 3,
        }
    }

    fn kind(&self) -> &'static str {
        match self {
            Failure::Input { .. } => "invalid_input",
            Failure::Precondition(_) => "precondition",
            Failure::Internal(_) => "internal",
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Input { message, position: Some(p) } => format!("{message} at position {p}"),
            Failure::Input { message, .. } | Failure::Precondition(message) | Failure::Internal(message) => {
                message.clone()
            }
        }
    }

    fn input(message: impl Into<String>) -> Self {
        Failure::Input {
            message: message.into(),
            position: None,
        }
    }
}

impl From<monideal::Error> for Failure {
    fn from(e: monideal::Error) -> Self {
        match e.kind() {
            ErrorKind::InvalidInput => Failure::input(e.to_string()),
            ErrorKind::Precondition => Failure::Precondition(e.to_string()),
            ErrorKind::Internal => Failure::Internal(e.to_string()),
        }
    }
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        Failure::Input {
            message: e.message,
            position: e.position,
        }
    }
}

/// One named cross-check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

fn check(name: &'static str, passed: bool, detail: impl Into<String>) -> Check {
    Check {
        name,
        passed,
        detail: detail.into(),
    }
}

/// Result of a successful dispatch, before rendering.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub command: &'static str,
    pub document: Option<IdealDocument>,
    pub result: Value,
    pub lines: Vec<String>,
    pub checks: Vec<Check>,
}

impl Outcome {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn to_json(&self) -> Value {
        let mut doc = json!({
            "schema": SCHEMA,
            "command": self.command,
            "result": self.result,
        });
        if let Some(d) = &self.document {
            doc["ideal"] = d.to_json();
            doc["notices"] = Value::from(d.notices.clone());
        } else {
            doc["notices"] = json!([]);
        }
        if !self.checks.is_empty() {
            doc["checks"] = self
                .checks
                .iter()
                .map(|c| json!({ "name": c.name, "passed": c.passed, "detail": c.detail }))
                .collect();
        }
        doc
    }
}

struct Context<'a> {
    cli: &'a Cli,
    order: TermOrder,
}

impl Context<'_> {
    fn poly(&self, p: &monideal::Polynomial) -> String {
        p.render(self.order)
    }

    fn guard(&self, points: u128, what: &str) -> Result<(), Failure> {
        if points > self.cli.max_points {
            return Err(Failure::Precondition(format!(
                "{what} would enumerate about {points} lattice points, above --max-points {}",
                self.cli.max_points
            )));
        }
        Ok(())
    }
}

fn scaled_box(extent: &[u64], n: u64) -> Vec<u64> {
    extent.iter().map(|&m| m.saturating_mul(n)).collect()
}

/// Points enumerated while interpolating the Ehrhart polynomial of `p`.
fn ehrhart_cost(p: &Polytope, extra_up_to: u64) -> u128 {
    let top = (p.affine_dimension() as u64 + 2).max(extra_up_to);
    (0..=top).fold(0u128, |acc, n| acc.saturating_add(box_size(&scaled_box(p.extent(), n))))
}

fn hilbert_cost(ideal: &MonomialIdeal, lengths: impl IntoIterator<Item = u64>) -> Result<u128, Failure> {
    let a = ideal.pure_power_exponents().ok_or(monideal::Error::NotZeroDimensional {
        operation: "Hilbert analysis",
    })?;
    let simplex = Polytope::axis_simplex(&a);
    let lengths = lengths.into_iter().fold(0u128, |acc, n| {
        let bounds: Vec<u64> = a.iter().map(|&ai| ai.saturating_mul(n).saturating_sub(1)).collect();
        acc.saturating_add(if n == 0 { 0 } else { box_size(&bounds) })
    });
    Ok(ehrhart_cost(&simplex, 0).saturating_mul(2).saturating_add(lengths))
}

fn closure_cost(ideal: &MonomialIdeal, ns: impl IntoIterator<Item = u64>) -> u128 {
    ns.into_iter().fold(0u128, |acc, n| {
        let bounds: Vec<u64> = ideal.max_exponents().iter().map(|&m| m.saturating_mul(n)).collect();
        acc.saturating_add(box_size(&bounds))
    })
}

fn read_source(source: &Source, stdin: &mut dyn Read) -> Result<String, Failure> {
    if let Some(text) = &source.ideal {
        return Ok(text.clone());
    }
    let mut text = String::new();
    match &source.file {
        Some(path) => {
            text = std::fs::read_to_string(path)
                .map_err(|e| Failure::input(format!("cannot read {}: {e}", path.display())))?;
        }
        None => {
            stdin
                .read_to_string(&mut text)
                .map_err(|e| Failure::input(format!("cannot read stdin: {e}")))?;
        }
    }
    Ok(text)
}

/// Parses the ideal (if the command needs one) and runs the command.
pub fn dispatch(cli: &Cli, stdin: &mut dyn Read) -> Result<Outcome, Failure> {
    let ctx = Context {
        cli,
        order: if cli.ascending {
            TermOrder::Ascending
        } else {
            TermOrder::Descending
        },
    };
    let document = match cli.command.source() {
        Some(source) => Some(parse_ideal(&read_source(source, stdin)?, cli.dim)?),
        None => None,
    };
    let (result, lines, checks) = match (&cli.command, &document) {
        (Command::Closure { n, .. }, Some(doc)) => run_closure(&ctx, doc, *n)?,
        (Command::Hilbert { n, .. }, Some(doc)) => run_hilbert(&ctx, doc, *n)?,
        (Command::Hpoly { .. }, Some(doc)) => run_hpoly(&ctx, doc)?,
        (Command::Report { .. }, Some(doc)) => run_report(&ctx, doc)?,
        (Command::Stab { .. }, Some(doc)) => run_stab(&ctx, doc)?,
        (Command::Ehrhart { object, n_max, .. }, Some(doc)) => run_ehrhart(&ctx, doc, *object, *n_max)?,
        (Command::Veronese { d, r }, _) => run_veronese(&ctx, *d, *r)?,
        (_, None) => unreachable!("every other command reads an ideal"),
    };
    Ok(Outcome {
        command: cli.command.name(),
        document,
        result,
        lines,
        checks,
    })
}

type Parts = (Value, Vec<String>, Vec<Check>);

fn run_closure(ctx: &Context, doc: &IdealDocument, n: u64) -> Result<Parts, Failure> {
    let ideal = &doc.ideal;
    ctx.guard(closure_cost(ideal, [n]), "closure")?;
    let c = closure::closure_power(ideal, n);
    let names = doc.names();
    let mut lines = vec![format!(
        "closure of I^{n}: {} minimal generators",
        c.num_generators()
    )];
    lines.extend(c.generators().iter().map(|g| format!("  {}", render::monomial(g, names))));
    let mut checks = Vec::new();
    if ctx.cli.check {
        let oracle = DilationOracle::new(ideal);
        let certified = c.generators().iter().all(|g| {
            oracle.contains(g, n)
                && (0..g.len()).all(|j| {
                    g[j] == 0 || {
                        let mut below = g.to_vec();
                        below[j] -= 1;
                        !oracle.contains(&below, n)
                    }
                })
        });
        checks.push(check(
            "generators_certified",
            certified,
            "every generator lies in nQ and no generator minus a unit vector does (elimination oracle)",
        ));
        let power = ideal.power(n);
        checks.push(check("contains_power", power.is_subset_of(&c), "I^n is contained in the closure"));
        checks.push(check(
            "idempotent",
            closure::closure_power(&c, 1) == c,
            "the closure is integrally closed",
        ));
    }
    let result = json!({
        "n": n,
        "closure": { "d": c.dimension(), "gens": monomials_json(c.generators()) },
        "monomials": c.generators().iter().map(|g| render::monomial(g, names)).collect::<Vec<_>>(),
        "num_generators": c.num_generators(),
    });
    Ok((result, lines, checks))
}

fn run_hilbert(ctx: &Context, doc: &IdealDocument, n: u64) -> Result<Parts, Failure> {
    let ideal = &doc.ideal;
    let d = ideal.dimension() as u64;
    let extra: Vec<u64> = if ctx.cli.check { (0..=d + 2).collect() } else { Vec::new() };
    ctx.guard(hilbert_cost(ideal, std::iter::once(n).chain(extra.iter().copied()))?, "hilbert")?;
    let analysis = HilbertAnalysis::new(ideal)?;
    let e_s = analysis.simplex_ehrhart()?.eval_int(n as i64);
    let e_p = analysis.polytope_ehrhart()?.eval_int(n as i64);
    let difference = &e_s - &e_p;
    let length = analysis.length(n);
    let agrees = difference == monideal::exact_math::from_u64(length);
    let lines = vec![
        format!("f({n}) = {length}"),
        format!("length by complement count: {length}"),
        format!("E_S({n}) - E_P({n}) = {e_s} - {e_p} = {difference}"),
        format!("cross-check: {}", if agrees { "agrees" } else { "MISMATCH" }),
    ];
    let mut checks = vec![check(
        "ehrhart_equals_length",
        agrees,
        "E_S(n) - E_P(n) equals the complement count",
    )];
    if ctx.cli.check {
        let oracle = DilationOracle::new(ideal);
        let fm = if n == 0 {
            0
        } else {
            ehrhart::count_in_box(&analysis.length_box(n), |p| !oracle.contains(p, n))
        };
        checks.push(check("elimination_length", fm == length, format!("elimination oracle counts {fm}")));
        let poly = analysis.hilbert_polynomial()?;
        let value = poly.eval_int(n as i64);
        checks.push(check(
            "polynomial_value",
            value == monideal::exact_math::from_u64(length),
            format!("Hilbert polynomial gives {value}"),
        ));
    }
    let result = json!({
        "n": n,
        "value": length,
        "length": length,
        "ehrhart_simplex": rational_json(&e_s),
        "ehrhart_polytope": rational_json(&e_p),
        "ehrhart_difference": rational_json(&difference),
        "agrees": agrees,
    });
    Ok((result, lines, checks))
}

fn run_hpoly(ctx: &Context, doc: &IdealDocument) -> Result<Parts, Failure> {
    let ideal = &doc.ideal;
    let d = ideal.dimension() as u64;
    let extra: Vec<u64> = if ctx.cli.check { (0..=d + 2).collect() } else { Vec::new() };
    ctx.guard(hilbert_cost(ideal, (0..=d + 2).chain(extra))?, "hpoly")?;
    let analysis = HilbertAnalysis::new(ideal)?;
    let poly = analysis.hilbert_polynomial()?;
    let c: Vec<_> = (0..=d as usize).map(|i| poly.coefficient(i)).collect();
    let multiplicity = analysis.multiplicity()?;
    let lines = vec![
        format!("f(n) = {}", ctx.poly(&poly)),
        format!("c = [{}]", render::join(&c)),
        format!("e(I) = {multiplicity}"),
    ];
    let mut checks = Vec::new();
    if ctx.cli.check {
        let e = to_hilbert_coefficients(&poly, d as usize)?;
        checks.push(check(
            "hilbert_basis_round_trip",
            from_hilbert_coefficients(&e, d as usize) == poly,
            "the e-coefficients reproduce the polynomial",
        ));
        let oracle = DilationOracle::new(ideal);
        let bad: Vec<u64> = (1..=d + 2)
            .filter(|&n| {
                let count = ehrhart::count_in_box(&analysis.length_box(n), |p| !oracle.contains(p, n));
                poly.eval_int(n as i64) != monideal::exact_math::from_u64(count)
            })
            .collect();
        checks.push(check(
            "elimination_values",
            bad.is_empty(),
            format!("polynomial matches elimination-oracle lengths for n = 1..={}", d + 2),
        ));
    }
    let result = json!({
        "polynomial": polynomial_json(&poly, ctx.order),
        "c_coefficients": rationals_json(&c),
        "multiplicity": rational_json(&multiplicity),
    });
    Ok((result, lines, checks))
}

fn verdicts(holds: &[bool]) -> String {
    holds
        .iter()
        .enumerate()
        .map(|(j, &ok)| format!("omit x{}: {}", j + 1, if ok { "holds" } else { "FAILS" }))
        .collect::<Vec<_>>()
        .join(", ")
}

fn run_report(ctx: &Context, doc: &IdealDocument) -> Result<Parts, Failure> {
    let ideal = &doc.ideal;
    let d = ideal.dimension() as u64;
    ctx.guard(hilbert_cost(ideal, 0..=d + 2)?, "report")?;
    let analysis = HilbertAnalysis::new(ideal)?;
    let r = analysis.report()?;
    let poly = r.hilbert_polynomial();
    let lines = vec![
        format!("f(n) = {}", ctx.poly(&poly)),
        format!("c = [{}]", render::join(&r.c_coefficients)),
        format!("e = [{}]", render::join(&r.e_coefficients)),
        format!("e(I) = {}", r.multiplicity),
        format!("facet multiplicities e(I_i) = [{}]", render::join(&r.facet_multiplicities)),
        format!(
            "2c_(d-1) = {} >= sum_(i!=j) e(I_i)/(d-1)! = [{}]: {}",
            r.boletin_lhs,
            render::join(&r.boletin_rhs),
            verdicts(&r.boletin_holds)
        ),
        format!(
            "e_0(d-1) - 2e_1 = {} >= sum_(i!=j) e(I_i) = [{}] >= d-1: {}",
            r.cor_lhs,
            render::join(&r.cor_rhs),
            verdicts(&r.cor_holds)
        ),
        format!(
            "c_0 = 0: {}; e_d = 0: {}; e_i >= 0: {}",
            render::yes_no(r.c_zero),
            render::yes_no(r.e_last_zero),
            render::yes_no(r.e_nonnegative)
        ),
        format!("all verdicts hold: {}", render::yes_no(r.all_hold())),
    ];
    let mut checks = Vec::new();
    if ctx.cli.check {
        checks.push(check("verdicts_hold", r.all_hold(), "every inequality and invariant holds"));
        checks.push(check(
            "hilbert_basis_round_trip",
            from_hilbert_coefficients(&r.e_coefficients, r.dimension) == poly,
            "the e-coefficients reproduce the polynomial",
        ));
        checks.push(check(
            "multiplicity_is_e0",
            &r.multiplicity == r.e0(),
            "d!·c_d equals e_0",
        ));
    }
    let result = json!({
        "dimension": r.dimension,
        "polynomial": polynomial_json(&poly, ctx.order),
        "c_coefficients": rationals_json(&r.c_coefficients),
        "e_coefficients": rationals_json(&r.e_coefficients),
        "multiplicity": rational_json(&r.multiplicity),
        "facet_multiplicities": rationals_json(&r.facet_multiplicities),
        "boletin": {
            "lhs": rational_json(&r.boletin_lhs),
            "rhs": rationals_json(&r.boletin_rhs),
            "holds": r.boletin_holds,
            "equality": r.boletin_is_equality(),
        },
        "corollary": {
            "lhs": rational_json(&r.cor_lhs),
            "rhs": rationals_json(&r.cor_rhs),
            "holds": r.cor_holds,
        },
        "c_zero": r.c_zero,
        "e_last_zero": r.e_last_zero,
        "e_nonnegative": r.e_nonnegative,
        "all_hold": r.all_hold(),
    });
    Ok((result, lines, checks))
}

fn run_stab(ctx: &Context, doc: &IdealDocument) -> Result<Parts, Failure> {
    let ideal = &doc.ideal;
    let d = ideal.dimension() as u64;
    let top = if ctx.cli.check { d + 2 } else { d };
    ctx.guard(closure_cost(ideal, 1..=top), "stab")?;
    let f = ClosureFiltration::new(ideal.clone());
    let r = f.report();
    let window: Vec<String> = r
        .checks
        .iter()
        .enumerate()
        .map(|(b, &ok)| format!("b={}: {}", b + 1, if ok { "stable" } else { "not stable" }))
        .collect();
    let opt = |v: Option<String>| v.unwrap_or_else(|| "n/a".into());
    let mut lines = vec![
        format!("closure(I^b) = I*closure(I^(b-1)) checked for b = 1..={d}"),
        format!("  {}", window.join(", ")),
        format!("stabilization index found: {}", r.index_found),
        format!("general bound b >= d: {}", r.theorem_bound_d),
        format!("rank bound r0: {}", opt(r.rank_bound_r0.map(|v| v.to_string()))),
        format!("equigenerated degree r: {}", opt(r.equigenerated_degree.map(|v| v.to_string()))),
    ];
    if r.veronese_bound.is_some() {
        lines.push(format!("Veronese a-invariant: {}", opt(r.a_invariant.map(|v| v.to_string()))));
        lines.push(format!("bound d - floor(d/r) + 1: {}", opt(r.veronese_bound.map(|v| v.to_string()))));
        lines.push(format!("bound d + 2 + a: {}", opt(r.a_invariant_bound.map(|v| v.to_string()))));
    }
    lines.push(format!(
        "best bound: {}; consistent: {}",
        r.best_bound(),
        render::yes_no(r.is_consistent())
    ));
    let mut checks = vec![check(
        "bounds_consistent",
        r.is_consistent(),
        "the index found does not exceed any applicable bound",
    )];
    let mut beyond = Vec::new();
    if ctx.cli.check {
        beyond = (d + 1..=d + 2).map(|b| (b, f.stabilization_check(b))).collect();
        checks.push(check(
            "stable_beyond_window",
            beyond.iter().all(|&(_, ok)| ok),
            format!("checked b = {}..={}", d + 1, d + 2),
        ));
        if let (Some(rdeg), Some(a)) = (r.equigenerated_degree.filter(|&v| v >= 2), r.a_invariant) {
            let search = a_invariant_search_oracle(d, rdeg)?;
            checks.push(check("a_invariant_oracle", search == a, format!("search oracle gives {search}")));
        }
    } else {
        lines.push(format!("b > {d}: not checked (stable by the general bound)"));
    }
    if !beyond.is_empty() {
        lines.push(format!(
            "beyond the window: {}",
            beyond
                .iter()
                .map(|(b, ok)| format!("b={b}: {}", if *ok { "stable" } else { "not stable" }))
                .collect::<Vec<_>>()
                .join(", ")
        ));
    }
    let result = json!({
        "dimension": r.dimension,
        "index_found": r.index_found,
        "window_checks": r.checks,
        "theorem_bound_d": r.theorem_bound_d,
        "rank_bound_r0": r.rank_bound_r0,
        "equigenerated_degree": r.equigenerated_degree,
        "a_invariant": r.a_invariant,
        "veronese_bound": r.veronese_bound,
        "a_invariant_bound": r.a_invariant_bound,
        "best_bound": r.best_bound(),
        "consistent": r.is_consistent(),
        "relies_on_bound_beyond_window": beyond.is_empty(),
    });
    Ok((result, lines, checks))
}

fn run_ehrhart(ctx: &Context, doc: &IdealDocument, object: Object, n_max: u64) -> Result<Parts, Failure> {
    let ideal = &doc.ideal;
    let (label, region) = match object {
        Object::S => ("S", monideal::base_simplex(ideal)?),
        Object::P => ("P", monideal::polytope_p(ideal)?),
    };
    ctx.guard(ehrhart_cost(&region, n_max), "ehrhart")?;
    let poly = monideal::ehrhart_polynomial(&region)?;
    let volume = relative_volume(&region)?;
    let k = region.affine_dimension();
    let verdict = reciprocity_against(&region, &poly, n_max);
    let verdict_text = match &verdict {
        Reciprocity::Holds => "holds".to_string(),
        Reciprocity::FailsAt { n, interior, predicted } => {
            format!("FAILS at n = {n}: {interior} interior points, (-1)^{k}E(-{n}) = {predicted}")
        }
    };
    let lines = vec![
        format!("E_{label}(n) = {}", ctx.poly(&poly)),
        format!("affine dimension: {k}"),
        format!("relative volume: {volume}"),
        format!("reciprocity for n = 1..={n_max}: {verdict_text}"),
    ];
    let mut checks = vec![check(
        "reciprocity",
        verdict.holds(),
        format!("interior counts equal (-1)^{k}E(-n) for n = 1..={n_max}"),
    )];
    if ctx.cli.check {
        checks.push(check(
            "constant_term",
            poly.eval_int(0) == monideal::exact_math::integer(1),
            "E(0) = 1",
        ));
        let leading = poly.coefficient(k);
        checks.push(check(
            "degree",
            poly.degree() == Some(k),
            "degree equals the affine dimension",
        ));
        if k == region.dimension() {
            checks.push(check("leading_is_volume", leading == volume, "leading coefficient equals the volume"));
        }
    }
    let failure = match &verdict {
        Reciprocity::Holds => Value::Null,
        Reciprocity::FailsAt { n, interior, predicted } => json!({
            "n": n,
            "interior": interior,
            "predicted": rational_json(predicted),
        }),
    };
    let result = json!({
        "object": label,
        "vertices": monomials_json(region.vertices()),
        "affine_dimension": k,
        "polynomial": polynomial_json(&poly, ctx.order),
        "relative_volume": rational_json(&volume),
        "reciprocity": { "n_max": n_max, "holds": verdict.holds(), "failure": failure },
    });
    Ok((result, lines, checks))
}

/// Number of points `(a, 1)` with `|a| = r` in `d` coordinates, saturating.
fn lifted_generators(d: usize, r: u64) -> u128 {
    let mut acc = 1u128;
    for i in 1..d as u128 {
        acc = acc.saturating_mul(r as u128 + i) / i;
    }
    acc
}

fn run_veronese(ctx: &Context, d: usize, r: u64) -> Result<Parts, Failure> {
    if d == 0 {
        return Err(monideal::Error::ZeroAmbientDimension.into());
    }
    if r < 2 {
        return Err(monideal::Error::VeroneseDegree(r).into());
    }
    ctx.guard(lifted_generators(d, r).saturating_add(d as u128), "veronese")?;
    let cone = veronese_facets(d, r)?;
    let a = veronese_a_invariant(d as u64, r)?;
    let search = a_invariant_search_oracle(d as u64, r)?;
    let validation = cone.validate();
    let mut lines = vec![format!("facets of the Rees cone in R^{}:", d + 1)];
    lines.extend(cone.facets().iter().map(|h| format!("  {}", linear_form(h))));
    lines.push(format!("a-invariant: {a}"));
    lines.push(format!(
        "search oracle: {search} ({})",
        if search == a { "agrees" } else { "DISAGREES" }
    ));
    let enumeration = match validation.enumeration_agrees {
        Some(true) => "agrees",
        Some(false) => "DISAGREES",
        None => "skipped (d or r above 4)",
    };
    lines.push(format!(
        "facet validation: valid {}, tight {}, brute-force enumeration {enumeration}",
        render::yes_no(validation.valid),
        render::yes_no(validation.tight)
    ));
    let mut witnesses = Vec::new();
    for (name, w, want) in [
        ("m1", witness_m1(d, r), 2),
        ("m2", witness_m2(d, r), (d as u64 / r) as i64 + 2),
    ] {
        if let Some(w) = w {
            let inside = cone.contains_interior(&w);
            lines.push(format!(
                "witness {name} = ({}, {}): degree {}, interior {}",
                w.a.entries().iter().map(u64::to_string).collect::<Vec<_>>().join(", "),
                w.b,
                w.degree(),
                render::yes_no(inside)
            ));
            witnesses.push((name, w, want, inside));
        }
    }
    let mut checks = vec![
        check("a_invariant_oracle", search == a, format!("search oracle gives {search}")),
        check("facets_valid", validation.valid && validation.tight, "every facet is valid and tight"),
    ];
    if validation.enumeration_agrees.is_some() || ctx.cli.check {
        checks.push(check(
            "facet_enumeration",
            validation.enumeration_agrees.unwrap_or_else(|| {
                let mut expected = cone.facets().to_vec();
                expected.sort_by(|x, y| (x.normal(), x.bound()).cmp(&(y.normal(), y.bound())));
                cone.enumerate() == expected
            }),
            "closed form matches brute-force facet enumeration",
        ));
    }
    for (name, w, want, inside) in &witnesses {
        checks.push(check(
            if *name == "m1" { "witness_m1" } else { "witness_m2" },
            *inside && w.degree() == *want,
            format!("interior point of degree {want}"),
        ));
    }
    let result = json!({
        "d": d,
        "r": r,
        "facets": cone.facets().iter().map(|h| json!({
            "normal": h.normal().iter().map(ToString::to_string).collect::<Vec<_>>(),
            "bound": h.bound().to_string(),
            "text": linear_form(h),
        })).collect::<Vec<_>>(),
        "a_invariant": a,
        "oracle_a_invariant": search,
        "oracle_agrees": search == a,
        "validation": {
            "valid": validation.valid,
            "tight": validation.tight,
            "enumeration_agrees": validation.enumeration_agrees,
        },
        "witnesses": witnesses.iter().map(|(name, w, _, inside)| json!({
            "name": name,
            "a": w.a.entries(),
            "b": w.b,
            "degree": w.degree(),
            "interior": inside,
        })).collect::<Vec<_>>(),
    });
    Ok((result, lines, checks))
}

fn write_failure(cli_json: bool, command: Option<&str>, failure: &Failure, stdout: &mut dyn Write, stderr: &mut dyn Write) {
    if cli_json {
        let mut doc = json!({
            "schema": SCHEMA,
            "command": command,
            "error": { "kind": failure.kind(), "message": failure.message() },
        });
        if let Failure::Input { position: Some(p), .. } = failure {
            doc["error"]["position"] = Value::from(*p);
        }
        let _ = writeln!(stdout, "{}", serde_json::to_string_pretty(&doc).expect("serializable"));
    }
    let _ = writeln!(stderr, "error: {}", failure.message());
}

/// Full program: arguments in, exit code out.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind as K;
            return match e.kind() {
                K::DisplayHelp | K::DisplayVersion | K::DisplayHelpOnMissingArgumentOrSubcommand => {
                    let _ = write!(stdout, "{}", e.render());
                    0
                }
                _ => {
                    let _ = write!(stderr, "{}", e.render());
                    1
                }
            };
        }
    };
    match dispatch(&cli, stdin) {
        Ok(outcome) => {
            if cli.json {
                let _ = writeln!(
                    stdout,
                    "{}",
                    serde_json::to_string_pretty(&outcome.to_json()).expect("serializable")
                );
            } else {
                if let Some(doc) = &outcome.document {
                    for notice in &doc.notices {
                        let _ = writeln!(stderr, "note: {notice}");
                    }
                    let _ = writeln!(stdout, "I = {}", render::ideal(&doc.ideal, doc.names()));
                }
                for line in &outcome.lines {
                    let _ = writeln!(stdout, "{line}");
                }
                for c in &outcome.checks {
                    let _ = writeln!(
                        stdout,
                        "check {}: {} ({})",
                        c.name,
                        if c.passed { "pass" } else { "FAIL" },
                        c.detail
                    );
                }
            }
            if outcome.passed() {
                0
            } else {
                let failed: Vec<&str> = outcome.checks.iter().filter(|c| !c.passed).map(|c| c.name).collect();
                let _ = writeln!(stderr, "error: cross-check failed: {}", failed.join(", "));
                3
            }
        }
        Err(failure) => {
            write_failure(cli.json, Some(cli.command.name()), &failure, stdout, stderr);
            failure.exit_code()
        }
    }
}

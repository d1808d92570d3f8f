//! Integral closures of powers of monomial ideals, Newton polyhedra,
//! Ehrhart counting and Hilbert functions, in exact arithmetic.
//!
//! Monomials are exponent vectors; variables are positional.

pub mod closure;
pub mod ehrhart;
pub mod error;
pub mod exact_math;
pub mod hilbert;
pub mod ideals;
pub mod polyhedra;
pub mod veronese;

pub use closure::{
    closure_power, pure_power_reduction_check, stabilization_check, stabilization_report,
    ClosureFiltration, StabilizationReport,
};
pub use ehrhart::{
    count_lattice_points, ehrhart_polynomial, reciprocity_check, relative_volume, CountingRegion,
    Reciprocity,
};
pub use error::{Error, ErrorKind, Result};
pub use exact_math::{Polynomial, Rational, RationalMatrix, RationalVector};
pub use hilbert::{hilbert_function, hilbert_polynomial, hilbert_report, length, HilbertAnalysis, HilbertReport};
pub use ideals::{minimal_generators, ExponentVector, IdealProfile, MonomialIdeal};
pub use polyhedra::{
    base_simplex, dilate_member, fm_member_oracle, newton_polyhedron, polytope_p, HalfSpace,
    HalfSpaceSystem, Polytope,
};
pub use veronese::{
    a_invariant_search_oracle, veronese_a_invariant, veronese_facets, GradedLatticePoint,
    VeroneseCone,
};

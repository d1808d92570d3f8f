use num_bigint::BigInt;
use num_integer::Integer;

use super::{newton_polyhedron, to_big, HalfSpace, HalfSpaceSystem};
use crate::error::{Error, Result};
use crate::exact_math::RationalMatrix;
use crate::ideals::{ExponentVector, MonomialIdeal};

/// A lattice polytope given by generating points together with an
/// H-representation that contains all of its facets (possibly with extra
/// valid inequalities).
///
/// Inequalities tight on every generating point are the implicit equalities
/// of the affine hull; the relative interior is strict on all the others.
#[derive(Clone, Debug)]
pub struct Polytope {
    vertices: Vec<ExponentVector>,
    system: HalfSpaceSystem,
    implicit: Vec<bool>,
    affine_dim: usize,
    extent: Vec<u64>,
}

impl Polytope {
    /// `system` must describe exactly `conv(vertices)`.
    pub fn from_parts(vertices: Vec<ExponentVector>, system: HalfSpaceSystem) -> Self {
        assert!(!vertices.is_empty(), "polytope needs a generating point");
        let dim = system.dimension();
        let big: Vec<Vec<BigInt>> = vertices.iter().map(|v| to_big(v)).collect();
        let implicit = system
            .inequalities()
            .iter()
            .map(|h| big.iter().all(|v| h.is_tight_at(v)))
            .collect();
        let base = &vertices[0];
        let diffs: Vec<Vec<i64>> = vertices[1..]
            .iter()
            .map(|v| v.iter().zip(base.iter()).map(|(&a, &b)| a as i64 - b as i64).collect())
            .collect();
        let affine_dim = if diffs.is_empty() {
            0
        } else {
            RationalMatrix::from_integer_rows(diffs).expect("rectangular").rank()
        };
        let extent = (0..dim)
            .map(|j| vertices.iter().map(|v| v[j]).max().unwrap_or(0))
            .collect();
        Self {
            vertices,
            system,
            implicit,
            affine_dim,
            extent,
        }
    }

    /// `conv(0, a_1 e_1, …, a_d e_d) = {x ≥ 0, Σ x_i / a_i ≤ 1}`.
    pub fn axis_simplex(exponents: &[u64]) -> Self {
        let d = exponents.len();
        let lcm = exponents
            .iter()
            .fold(BigInt::from(1), |l, &a| l.lcm(&BigInt::from(a)));
        let mut inequalities: Vec<HalfSpace> = (0..d).map(|i| HalfSpace::coordinate(d, i)).collect();
        inequalities.push(HalfSpace::new(
            exponents.iter().map(|&a| -(&lcm / BigInt::from(a))).collect(),
            -lcm.clone(),
        ));
        let mut vertices = vec![ExponentVector::zero(d)];
        vertices.extend(
            exponents
                .iter()
                .enumerate()
                .map(|(i, &a)| ExponentVector::pure_power(d, i, a)),
        );
        Self::from_parts(vertices, HalfSpaceSystem::new(d, inequalities))
    }

    /// `conv(0, e_1, …, e_d)`.
    pub fn standard_simplex(dim: usize) -> Self {
        Self::axis_simplex(&vec![1; dim])
    }

    pub fn dimension(&self) -> usize {
        self.system.dimension()
    }

    pub fn affine_dimension(&self) -> usize {
        self.affine_dim
    }

    pub fn vertices(&self) -> &[ExponentVector] {
        &self.vertices
    }

    pub fn system(&self) -> &HalfSpaceSystem {
        &self.system
    }

    /// Componentwise maximum over the generating points; `n · extent` bounds
    /// the `n`-th dilation.
    pub fn extent(&self) -> &[u64] {
        &self.extent
    }

    /// Lattice membership in `n · P`.
    pub fn contains(&self, point: &[u64], n: u64) -> bool {
        self.system.contains(point, n)
    }

    /// Lattice membership in the relative interior of `n · P`.
    pub fn contains_relative_interior(&self, point: &[u64], n: u64) -> bool {
        self.system
            .inequalities()
            .iter()
            .zip(&self.implicit)
            .all(|(h, &implicit)| {
                let ord = h.compare(point, n);
                if implicit {
                    ord.is_ge()
                } else {
                    ord.is_gt()
                }
            })
    }
}

/// `S = conv(0, a_1 e_1, …, a_d e_d)` for a zero-dimensional ideal.
pub fn base_simplex(ideal: &MonomialIdeal) -> Result<Polytope> {
    let a = ideal
        .pure_power_exponents()
        .ok_or(Error::NotZeroDimensional {
            operation: "base simplex",
        })?;
    Ok(Polytope::axis_simplex(&a))
}

/// `P = conv(v_1, …, v_s)`: the pure powers together with the mixed
/// generators strictly below `⟨x, α_0⟩ = 1`. Membership uses `P = S ∩ Q`.
pub fn polytope_p(ideal: &MonomialIdeal) -> Result<Polytope> {
    let profile = ideal.profile();
    let a = profile
        .pure_power_exponents
        .as_ref()
        .ok_or(Error::NotZeroDimensional {
            operation: "polytope P",
        })?;
    let d = ideal.dimension();
    let mut vertices: Vec<ExponentVector> = a
        .iter()
        .enumerate()
        .map(|(i, &ai)| ExponentVector::pure_power(d, i, ai))
        .collect();
    vertices.extend(profile.small_generators.iter().cloned());
    let simplex = Polytope::axis_simplex(a);
    let system = simplex.system().concat(&newton_polyhedron(ideal));
    Ok(Polytope::from_parts(vertices, system))
}

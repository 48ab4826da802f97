//! Topological basis on a four-site spin-1 chain.
//!
//! Three diagrams span the space: two side-by-side cups `∪∪` on sites
//! (1,2)(3,4), nested cups `∪in∪` on (1,4)(2,3), and `∪S∪`, the braid on the
//! middle strands applied to `∪∪`. Orthonormal combinations `e₁, e₂, e₃` of
//! these diagrams are invariant under `E₁₂, E₂₃, S₁₂, S₂₃`, which act on
//! them as 3×3 matrices satisfying the same algebra.
//!
//! The cups carry no `φ_μλ` phase, so every constructor here requires
//! `φ_μλ = 0`.
//!
//! Sign convention: the basis vectors are used exactly as given by their
//! diagram expansions. No per-vector sign flip is applied; with this choice
//! the computed `E_B`, `B` and the `S₂₃|e₃⟩` expansion coincide with their
//! closed forms entrywise.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{
    compose_placements, embed_two_site, small_inverse, ComplexMatrix, ComplexVector,
};
use crate::relations::{
    check_bwma_generators, check_e_squared_uncleared, BwmaScalars, Generator, RelationReport,
};
use crate::reps::{build_e9, build_psi, build_s9, total_spin_operators, RepParams};

/// Gram-matrix tolerance enforced when constructing a basis.
pub const BASIS_TOLERANCE: f64 = 1e-10;

/// Diagonal `±1` gauge applied to `(e₁, e₂, e₃)`.
pub const BASIS_GAUGE: [f64; 3] = [1.0, 1.0, 1.0];

const N_SITES: usize = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphicLabel {
    CupCup,
    NestedCup,
    BraidCup,
}

#[derive(Clone, Debug)]
pub struct GraphicVector {
    pub label: GraphicLabel,
    pub vector: ComplexVector,
}

#[derive(Clone, Debug)]
pub struct Graphics {
    pub cup_cup: GraphicVector,
    pub nested_cup: GraphicVector,
    pub braid_cup: GraphicVector,
}

fn require_cup_params(params: &RepParams) -> Result<()> {
    if params.phi_mu_lambda() != 0.0 {
        return Err(Error::InvalidParameter(
            "topological basis requires phi_mu_lambda = 0".into(),
        ));
    }
    Ok(())
}

/// `E₁₂, E₂₃, S₁₂, S₂₃` on four sites.
#[derive(Clone, Debug)]
pub struct ChainOperators {
    pub e12: ComplexMatrix,
    pub e23: ComplexMatrix,
    pub s12: ComplexMatrix,
    pub s23: ComplexMatrix,
}

pub fn chain_operators(params: &RepParams) -> Result<ChainOperators> {
    let e = build_e9(params);
    let s = build_s9(params);
    Ok(ChainOperators {
        e12: embed_two_site(&e, 1, N_SITES, 3)?,
        e23: embed_two_site(&e, 2, N_SITES, 3)?,
        s12: embed_two_site(&s, 1, N_SITES, 3)?,
        s23: embed_two_site(&s, 2, N_SITES, 3)?,
    })
}

pub fn build_graphics(params: &RepParams) -> Result<Graphics> {
    require_cup_params(params)?;
    let d = params.loop_value();
    let phi = build_psi(params, false);
    let cup_cup = compose_placements(&[(&phi, (1, 2)), (&phi, (3, 4))], N_SITES, 3)?.scale_real(d);
    let nested = compose_placements(&[(&phi, (1, 4)), (&phi, (2, 3))], N_SITES, 3)?.scale_real(d);
    let s23 = embed_two_site(&build_s9(params), 2, N_SITES, 3)?;
    let braid = s23.apply(&cup_cup)?;
    Ok(Graphics {
        cup_cup: GraphicVector {
            label: GraphicLabel::CupCup,
            vector: cup_cup,
        },
        nested_cup: GraphicVector {
            label: GraphicLabel::NestedCup,
            vector: nested,
        },
        braid_cup: GraphicVector {
            label: GraphicLabel::BraidCup,
            vector: braid,
        },
    })
}

#[derive(Clone, Debug)]
pub struct TopologicalBasis {
    pub e1: ComplexVector,
    pub e2: ComplexVector,
    pub e3: ComplexVector,
    pub params: RepParams,
}

impl TopologicalBasis {
    pub fn vectors(&self) -> [&ComplexVector; 3] {
        [&self.e1, &self.e2, &self.e3]
    }

    /// `⟨e_i|e_j⟩`.
    pub fn gram(&self) -> ComplexMatrix {
        let v = self.vectors();
        ComplexMatrix::from_fn(3, 3, |i, j| v[i].inner(v[j]))
    }
}

fn combine(terms: &[(f64, &ComplexVector)], scale: f64) -> Result<ComplexVector> {
    let mut acc = ComplexVector::zeros(terms[0].1.dim());
    for (c, v) in terms {
        acc = acc.add(&v.scale_real(*c))?;
    }
    Ok(acc.scale_real(scale))
}

/// Builds `e₁, e₂, e₃` from the three diagrams and checks orthonormality.
pub fn build_e_basis(params: &RepParams) -> Result<TopologicalBasis> {
    let g = build_graphics(params)?;
    let q = params.q();
    let d = params.loop_value();
    let (cc, nc, bc) = (&g.cup_cup.vector, &g.nested_cup.vector, &g.braid_cup.vector);

    let e1 = combine(
        &[(1.0, bc), (q, nc), (-q * (q + 1.0) / d, cc)],
        q / ((1.0 + q * q) * (d * d - d - 1.0).sqrt()) * BASIS_GAUGE[0],
    )?;
    let e2 = cc.scale_real(BASIS_GAUGE[1] / d);
    let e3 = combine(
        &[(1.0, bc), (-1.0 / q, nc), (-(q * q - 1.0 / q) / d, cc)],
        q / ((1.0 + q * q) * d.sqrt()) * BASIS_GAUGE[2],
    )?;

    let basis = TopologicalBasis {
        e1,
        e2,
        e3,
        params: *params,
    };
    let gram = basis.gram();
    let deviation = gram.max_abs_diff(&ComplexMatrix::identity(3))?;
    if deviation > BASIS_TOLERANCE {
        let rows = (0..3)
            .map(|i| {
                (0..3)
                    .map(|j| (gram.get(i, j).re, gram.get(i, j).im))
                    .collect()
            })
            .collect();
        return Err(Error::BasisInconsistent {
            deviation,
            gram: rows,
        });
    }
    Ok(basis)
}

/// `⟨e_i|op|e_j⟩`.
pub fn reduce_operator(op: &ComplexMatrix, basis: &TopologicalBasis) -> Result<ComplexMatrix> {
    let v = basis.vectors();
    let images = v.iter().map(|e| op.apply(e)).collect::<Result<Vec<_>>>()?;
    Ok(ComplexMatrix::from_fn(3, 3, |i, j| v[i].inner(&images[j])))
}

/// Reduced generators: `E_A, E_B` from `E₁₂, E₂₃`, `A, B` from `S₁₂, S₂₃`.
#[derive(Clone, Debug)]
pub struct ReducedOperators {
    pub e_a: ComplexMatrix,
    pub e_b: ComplexMatrix,
    pub a: ComplexMatrix,
    pub b: ComplexMatrix,
}

pub fn reduced_operators(basis: &TopologicalBasis) -> Result<ReducedOperators> {
    let ops = chain_operators(&basis.params)?;
    Ok(ReducedOperators {
        e_a: reduce_operator(&ops.e12, basis)?,
        e_b: reduce_operator(&ops.e23, basis)?,
        a: reduce_operator(&ops.s12, basis)?,
        b: reduce_operator(&ops.s23, basis)?,
    })
}

/// The reduced matrices and similarity transform in closed form.
#[derive(Clone, Debug)]
pub struct ClosedForms {
    pub e_a: ComplexMatrix,
    pub e_b: ComplexMatrix,
    pub a: ComplexMatrix,
    pub b: ComplexMatrix,
    pub u: ComplexMatrix,
}

pub fn closed_form_reduced(q: f64) -> Result<ClosedForms> {
    if !(q > 0.0 && q.is_finite()) {
        return Err(Error::InvalidParameter("q must be positive".into()));
    }
    let d = q + 1.0 + 1.0 / q;
    let r = (d * d - d - 1.0).sqrt();
    let sd = d.sqrt();
    let m = |v: [f64; 9]| ComplexMatrix::from_real(3, 3, &v);
    Ok(ClosedForms {
        e_a: m([0.0, 0.0, 0.0, 0.0, d, 0.0, 0.0, 0.0, 0.0])?,
        e_b: m([
            (d * d - d - 1.0) / d,
            r / d,
            -r / sd,
            r / d,
            1.0 / d,
            -1.0 / sd,
            -r / sd,
            -1.0 / sd,
            1.0,
        ])?,
        a: m([q, 0.0, 0.0, 0.0, q.powi(-2), 0.0, 0.0, 0.0, -1.0 / q])?,
        b: m([
            1.0 / (q.powi(4) * (d - 1.0) * d),
            r / (d * q),
            -r / (q * q * (d - 1.0) * sd),
            r / (d * q),
            q * q / d,
            q / sd,
            -r / (q * q * (d - 1.0) * sd),
            q / sd,
            (d - 2.0) / (d - 1.0),
        ])?,
        u: m([
            1.0 / ((d - 1.0) * d),
            -r / d,
            -r / (sd * (d - 1.0)),
            r / d,
            -1.0 / d,
            1.0 / sd,
            r / (sd * (d - 1.0)),
            1.0 / sd,
            -(d - 2.0) / (d - 1.0),
        ])?,
    })
}

/// Coefficients of `S₂₃|e₃⟩` on `(e₁, e₂, e₃)`.
pub fn s23_e3_expansion(basis: &TopologicalBasis) -> Result<[Complex64; 3]> {
    let s23 = embed_two_site(&build_s9(&basis.params), 2, N_SITES, 3)?;
    let image = s23.apply(&basis.e3)?;
    let v = basis.vectors();
    Ok([v[0].inner(&image), v[1].inner(&image), v[2].inner(&image)])
}

/// `−√(d²−d−1)/(q²√d(d−1))`, `q/√d`, `(d−2)/(d−1)`.
pub fn s23_e3_closed_form(q: f64) -> [f64; 3] {
    let d = q + 1.0 + 1.0 / q;
    let r = (d * d - d - 1.0).sqrt();
    [
        -r / (q * q * d.sqrt() * (d - 1.0)),
        q / d.sqrt(),
        (d - 2.0) / (d - 1.0),
    ]
}

/// Residuals of the similarity `B = UAU⁻¹`, `E_B = UE_AU⁻¹` in product form,
/// plus measured properties of `U`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SimilarityReport {
    /// `max|BU − UA|`
    pub b_u_minus_u_a: f64,
    /// `max|E_B U − U E_A|`
    pub eb_u_minus_u_ea: f64,
    /// `max|UU† − I|`
    pub unitarity_residual: f64,
    /// `max|U² − I|`
    pub involution_residual: f64,
    /// `max|U·U⁻¹ − I|` with `U⁻¹` from Gauss–Jordan; `None` if singular.
    pub inverse_residual: Option<f64>,
}

pub fn similarity_residuals(u: &ComplexMatrix, ops: &ReducedOperators) -> Result<SimilarityReport> {
    let id = ComplexMatrix::identity(3);
    let inverse_residual = match small_inverse(u, 1e-12) {
        Ok(inv) => Some((u * &inv).max_abs_diff(&id)?),
        Err(Error::Singular { .. }) => None,
        Err(e) => return Err(e),
    };
    Ok(SimilarityReport {
        b_u_minus_u_a: (&ops.b * u).max_abs_diff(&(u * &ops.a))?,
        eb_u_minus_u_ea: (&ops.e_b * u).max_abs_diff(&(u * &ops.e_a))?,
        unitarity_residual: (u * &u.adjoint()).max_abs_diff(&id)?,
        involution_residual: (u * u).max_abs_diff(&id)?,
        inverse_residual,
    })
}

/// The reduced BWMA relations for `(A, E_A)` and `(B, E_B)`; inverses via
/// Gauss–Jordan.
pub fn check_reduced_bwma(ops: &ReducedOperators, q: f64, tol: f64) -> Result<Vec<RelationReport>> {
    let inv_tol = 1e-12;
    let a = Generator {
        label: "a".into(),
        s: ops.a.clone(),
        s_inv: small_inverse(&ops.a, inv_tol)?,
        e: ops.e_a.clone(),
    };
    let b = Generator {
        label: "b".into(),
        s: ops.b.clone(),
        s_inv: small_inverse(&ops.b, inv_tol)?,
        e: ops.e_b.clone(),
    };
    let mut reports = check_bwma_generators(&a, &b, &BwmaScalars::numeric(q), "reduced", tol)?;
    reports.push(check_e_squared_uncleared(
        "reduced.e_squared.a",
        &ops.e_a,
        q,
        tol,
    )?);
    reports.push(check_e_squared_uncleared(
        "reduced.e_squared.b",
        &ops.e_b,
        q,
        tol,
    )?);
    reports.sort_by(|x, y| x.name.cmp(&y.name));
    Ok(reports)
}

impl From<&ClosedForms> for ReducedOperators {
    fn from(c: &ClosedForms) -> Self {
        ReducedOperators {
            e_a: c.e_a.clone(),
            e_b: c.e_b.clone(),
            a: c.a.clone(),
            b: c.b.clone(),
        }
    }
}

/// `‖S²_total e_i‖` and `‖S^z_total e_i‖` for the three basis vectors.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SingletReport {
    pub s_squared_norms: [f64; 3],
    pub sz_norms: [f64; 3],
    pub at_singlet_point: bool,
    /// Only asserted at the singlet point.
    pub pass: Option<bool>,
}

pub fn singlet_check(basis: &TopologicalBasis, tol: f64) -> Result<SingletReport> {
    let (s2, sz) = total_spin_operators(N_SITES)?;
    let mut s_squared_norms = [0.0; 3];
    let mut sz_norms = [0.0; 3];
    for (i, e) in basis.vectors().into_iter().enumerate() {
        s_squared_norms[i] = s2.apply(e)?.norm();
        sz_norms[i] = sz.apply(e)?.norm();
    }
    let at_singlet_point = basis.params == RepParams::singlet_point();
    let pass = at_singlet_point.then(|| s_squared_norms.iter().chain(&sz_norms).all(|&n| n < tol));
    Ok(SingletReport {
        s_squared_norms,
        sz_norms,
        at_singlet_point,
        pass,
    })
}

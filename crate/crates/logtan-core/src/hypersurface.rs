//! The logarithmic tangent module of a projective hypersurface `D = V(F)`
//! and the slope-stability decision ladder.
//!
//! Degree-`t` global sections of the logarithmic tangent sheaf are exactly
//! the degree-`t` syzygies of the partial derivatives of `F`; those
//! dimensions are computed by pure graded linear algebra (no Groebner
//! bases), while dimension/degree of the singular scheme and saturation
//! quotients go through the Groebner engine.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::CoreError;
use crate::field::K;
use crate::groebner::{
    dim_deg, groebner_basis, hilbert_function, normal_form, saturate, GroebnerOptions,
};
use crate::linalg::ExactMatrix;
use crate::poly::{graded_basis, Monomial, MonomialOrder, Polynomial};

/// A homogeneous hypersurface `D = V(F)` in `P^N`.
#[derive(Clone, Debug)]
pub struct Hypersurface {
    pub f: Polynomial,
    /// Degree of `F`.
    pub d: u32,
    /// Projective dimension of the ambient space (`num_vars - 1`).
    pub n_big: usize,
}

impl Hypersurface {
    pub fn new(f: Polynomial) -> Result<Self, CoreError> {
        if f.is_zero() {
            return Err(CoreError::Invalid("F must be nonzero".into()));
        }
        if !f.is_homogeneous() {
            return Err(CoreError::Invalid("F must be homogeneous".into()));
        }
        let d = f.degree().unwrap();
        if d < 1 {
            return Err(CoreError::Invalid("F must be non-constant".into()));
        }
        if f.num_vars < 3 {
            return Err(CoreError::Invalid(
                "need at least 3 variables (a plane curve or higher)".into(),
            ));
        }
        Ok(Hypersurface {
            d,
            n_big: f.num_vars - 1,
            f,
        })
    }

    /// The partial derivatives of `F` (generators of the Jacobian ideal),
    /// including zero partials — their presence is meaningful (cones).
    pub fn partials(&self) -> Vec<Polynomial> {
        (0..self.f.num_vars).map(|i| self.f.differentiate(i)).collect()
    }

    /// Nonzero partials only, for Groebner computations.
    pub fn jacobian_gens(&self) -> Vec<Polynomial> {
        self.partials().into_iter().filter(|p| !p.is_zero()).collect()
    }

    /// `dim H^0(T_D(t))`: the dimension of the space of degree-`t`
    /// syzygies of the partials, as the kernel of the graded linear map
    /// `(R_t)^{N+1} -> R_{t + d - 1}`, `(a_i) ↦ Σ a_i ∂_i F`.
    pub fn log_sections_dim(&self, t: u32) -> usize {
        let (rank, cols) = self.syzygy_kernel_data(t);
        cols - rank
    }

    /// Basis of the degree-`t` syzygies, as vectors over the monomial
    /// coordinates of `(R_t)^{N+1}` (used by tests and witnesses).
    pub fn log_sections_kernel(&self, t: u32) -> Vec<Vec<K>> {
        self.syzygy_matrix(t).rank_and_kernel().1
    }

    fn syzygy_kernel_data(&self, t: u32) -> (usize, usize) {
        let m = self.syzygy_matrix(t);
        (m.rank(), m.cols)
    }

    /// Columns indexed by (partial index, degree-t monomial); rows by
    /// degree-(t+d-1) monomials.
    fn syzygy_matrix(&self, t: u32) -> ExactMatrix {
        let nv = self.f.num_vars;
        let field = self.f.field;
        let parts = self.partials();
        let rows_basis = graded_basis(nv, t + self.d - 1);
        let row_index: BTreeMap<&Monomial, usize> =
            rows_basis.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let col_monos = graded_basis(nv, t);
        let mut mat = ExactMatrix::zero(field, rows_basis.len(), parts.len() * col_monos.len());
        for (pi, p) in parts.iter().enumerate() {
            for (mi, m) in col_monos.iter().enumerate() {
                let col = pi * col_monos.len() + mi;
                for (mm, c) in p.mul_monomial(m, &field.one()).terms() {
                    mat.set(row_index[mm], col, c.clone());
                }
            }
        }
        mat
    }

    /// Smallest `t` with a nonzero degree-`t` syzygy.  Bounded by `d - 1`
    /// (the Koszul syzygies of two nonzero partials live there).
    pub fn min_syzygy_degree(&self) -> Result<u32, CoreError> {
        if self.jacobian_gens().len() < 2 {
            return Err(CoreError::Hypothesis(
                "min_syzygy_degree needs at least two nonzero partials".into(),
            ));
        }
        for t in 0..self.d {
            if self.log_sections_dim(t) > 0 {
                return Ok(t);
            }
        }
        unreachable!("Koszul syzygies exist in degree d-1")
    }

    /// Number of trivial line-bundle summands split off by constant
    /// syzygies: the corank of the span of the partials.  Positive counts
    /// witness a cone structure (up to coordinate change).
    pub fn trivial_summand_count(&self) -> usize {
        self.log_sections_dim(0)
    }

    /// A witness for a positive trivial summand count: one nonzero
    /// constant kernel vector of the partials, as field scalars.
    pub fn trivial_summand_witness(&self) -> Option<Vec<K>> {
        let ker = self.log_sections_kernel(0);
        ker.into_iter().next()
    }

    /// Projective dimension of the singular scheme (−1 when smooth) and,
    /// when 0-dimensional, its degree (the total Tjurina number; this is
    /// the constant Hilbert polynomial, insensitive to saturation).
    pub fn singular_dim_deg(&self) -> Result<(i64, Option<u64>), CoreError> {
        let gens = self.jacobian_gens();
        if gens.is_empty() {
            return Err(CoreError::Invalid("all partials vanish".into()));
        }
        let (dim, deg) = dim_deg(&gens)?;
        Ok((dim, if dim == 0 { Some(deg) } else { None }))
    }

    /// `dim (J^sat / J)_t`, which computes `h^1(T_D(t - d))` for singular
    /// `D`: the Hilbert functions of `R/J` and `R/J^sat` through the
    /// engine, subtracted.
    pub fn saturation_quotient_dim(&self, t: u32) -> Result<usize, CoreError> {
        let (hf_j, hf_sat) = self.quotient_hilberts(t)?;
        Ok((hf_j - hf_sat) as usize)
    }

    fn require_singular(&self) -> Result<(), CoreError> {
        let (dim, _) = self.singular_dim_deg()?;
        if dim < 0 {
            return Err(CoreError::Hypothesis(
                "identification requires D singular".into(),
            ));
        }
        Ok(())
    }

    fn quotient_hilberts(&self, t: u32) -> Result<(u64, u64), CoreError> {
        self.require_singular()?;
        let j = self.jacobian_gens();
        let sat = self.saturated_jacobian()?;
        let hj = hilbert_function(&j, t)?;
        let hs = hilbert_function(&sat, t)?;
        Ok((hj.values[t as usize], hs.values[t as usize]))
    }

    /// Generators of `J^sat = J : m^∞` (iterated colon by the irrelevant
    /// ideal).
    pub fn saturated_jacobian(&self) -> Result<Vec<Polynomial>, CoreError> {
        let j = self.jacobian_gens();
        let nv = self.f.num_vars;
        let vars: Vec<Polynomial> = (0..nv)
            .map(|i| Polynomial::var(self.f.field, nv, i))
            .collect();
        Ok(saturate(&j, &vars)?.0)
    }

    /// Rank of multiplication `·g : (J^sat/J)_t -> (J^sat/J)_{t+deg g}`,
    /// realized on explicit coset bases (normal-form coordinates in the
    /// standard monomials of `R/J`).
    pub fn mult_map_rank(&self, g: &Polynomial, t_from: u32) -> Result<usize, CoreError> {
        if !g.is_homogeneous() {
            return Err(CoreError::Invalid("g must be homogeneous".into()));
        }
        self.require_singular()?;
        if g.is_zero() {
            return Ok(0);
        }
        let field = self.f.field;
        let nv = self.f.num_vars;
        let j = self.jacobian_gens();
        let gb = groebner_basis(&j, MonomialOrder::Grevlex, GroebnerOptions::default())?;
        let sat = self.saturated_jacobian()?;

        // Coset basis of (J^sat/J)_t: normal forms of the degree-t slice
        // of J^sat, echeloned; keep polynomial representatives.
        let reps = coset_basis(&sat, &gb.elements, nv, field, t_from);
        if reps.is_empty() {
            return Ok(0);
        }
        let t_to = t_from + g.degree().unwrap();
        let target = graded_basis(nv, t_to);
        let index: BTreeMap<&Monomial, usize> =
            target.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let mut rows = Vec::new();
        for r in &reps {
            let nf = normal_form(&g.mul(r), &gb.elements, MonomialOrder::Grevlex);
            let mut v = vec![field.zero(); target.len()];
            for (m, c) in nf.terms() {
                v[index[m]] = c.clone();
            }
            rows.push(v);
        }
        Ok(ExactMatrix::from_rows(field, rows).rank())
    }
}

/// Polynomial representatives of a basis of `(I_slice mod gb)_t`, where
/// `I_slice` is spanned by all degree-`t` multiples of `slice_gens`.
fn coset_basis(
    slice_gens: &[Polynomial],
    gb: &[Polynomial],
    nv: usize,
    field: crate::field::FieldSpec,
    t: u32,
) -> Vec<Polynomial> {
    let coords = graded_basis(nv, t);
    let index: BTreeMap<&Monomial, usize> =
        coords.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut rows: Vec<Vec<K>> = Vec::new();
    let mut pivots: Vec<usize> = Vec::new();
    let mut reps = Vec::new();
    for gsat in slice_gens {
        let Some(dg) = gsat.degree() else { continue };
        if dg > t {
            continue;
        }
        for m in graded_basis(nv, t - dg) {
            let cand = gsat.mul_monomial(&m, &field.one());
            let nf = normal_form(&cand, gb, MonomialOrder::Grevlex);
            let mut v = vec![field.zero(); coords.len()];
            for (mm, c) in nf.terms() {
                v[index[mm]] = c.clone();
            }
            // Incremental echelon insert.
            for (row, &p) in rows.iter().zip(&pivots) {
                if !v[p].is_zero() {
                    let f = v[p].clone();
                    for (a, b) in v.iter_mut().zip(row) {
                        let tt = b.mul(&f);
                        *a = a.sub(&tt);
                    }
                }
            }
            if let Some(p) = v.iter().position(|c| !c.is_zero()) {
                let inv = v[p].inv().unwrap();
                for a in v.iter_mut() {
                    *a = a.mul(&inv);
                }
                rows.push(v);
                pivots.push(p);
                reps.push(nf);
            }
        }
    }
    reps
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum Verdict {
    SlopeStable,
    NotSemistable,
    SmoothClassical,
    Inconclusive,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum Criterion {
    ConeObstruction,
    CorollaryB,
    TheoremC,
}

/// Outcome of the decision ladder.  `criterion` names the rung that
/// produced a definite verdict; `Inconclusive` results carry no criterion.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct StabilityReport {
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub criterion: Option<Criterion>,
    pub d: u32,
    #[serde(rename = "N")]
    pub n_big: usize,
    /// Projective dimension of the singular locus (−1: smooth).
    pub s: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r: Option<u32>,
    #[serde(rename = "singDeg", skip_serializing_if = "Option::is_none")]
    pub sing_deg: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bound: Option<u64>,
    #[serde(rename = "h0AtQ", skip_serializing_if = "Option::is_none")]
    pub h0_at_q: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

/// The decision ladder.  Sufficient criteria only: a failed rung never
/// declares instability — the only negative verdict comes from constant
/// syzygies (trivial summands, the cone obstruction).
///
/// Rungs: (1) cone obstruction; (2) smooth; for isolated singularities
/// the numeric Theorem-C bound is tried before the Corollary-B kernel
/// vanishing (see the worked nodal-cubic example); for positive-dimensional
/// singular loci within the hypothesis range only Corollary B applies.
pub fn stability_check(h: &Hypersurface) -> Result<StabilityReport, CoreError> {
    let d = h.d;
    let n = h.n_big;
    let mut report = StabilityReport {
        verdict: Verdict::Inconclusive,
        criterion: None,
        d,
        n_big: n,
        s: -1,
        q: None,
        r: None,
        sing_deg: None,
        bound: None,
        h0_at_q: None,
        witness: None,
        note: None,
    };

    // (1) Constant syzygies split trivial summands: not semistable.
    let tsc = h.trivial_summand_count();
    if tsc > 0 {
        report.verdict = Verdict::NotSemistable;
        report.criterion = Some(Criterion::ConeObstruction);
        report.witness = h
            .trivial_summand_witness()
            .map(|v| v.iter().map(|k| k.to_text()).collect());
        // The singular locus of a cone always contains the vertex; still
        // report s when computable.
        if let Ok((s, _)) = h.singular_dim_deg() {
            report.s = s;
        }
        return Ok(report);
    }

    let (s, sing_deg) = h.singular_dim_deg()?;
    report.s = s;
    report.sing_deg = sing_deg;

    // (2) Smooth hypersurfaces: stable by the classical result.
    if s < 0 {
        report.verdict = Verdict::SmoothClassical;
        return Ok(report);
    }

    report.r = Some(h.min_syzygy_degree()?);

    // Hypothesis range for the criteria: s <= N - 2.
    if s as usize > n - 2 {
        report.note = Some(format!(
            "sing(D) has dimension {} = N-1; outside the criteria's hypotheses",
            s
        ));
        return Ok(report);
    }

    let q = ((d as u64 - 1) * (s as u64 + 1) / n as u64) as u32;
    report.q = Some(q);

    if s == 0 {
        // Theorem C's numeric bound: singDeg < (d - q - 1)(d - 1)^(N-1).
        let bound = (d as u64 - q as u64 - 1) * (d as u64 - 1).pow(n as u32 - 1);
        report.bound = Some(bound);
        if sing_deg.unwrap() < bound {
            report.verdict = Verdict::SlopeStable;
            report.criterion = Some(Criterion::TheoremC);
            return Ok(report);
        }
    }

    // Corollary B: vanishing of H^0(T_D(q)).
    let h0 = h.log_sections_dim(q);
    report.h0_at_q = Some(h0);
    if h0 == 0 {
        report.verdict = Verdict::SlopeStable;
        report.criterion = Some(Criterion::CorollaryB);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{FieldSpec, DEFAULT_PRIME};
    use crate::poly::parse_polynomial;

    fn fp() -> FieldSpec {
        FieldSpec::Prime(DEFAULT_PRIME)
    }

    fn hs(src: &str, nv: usize, f: FieldSpec) -> Hypersurface {
        Hypersurface::new(parse_polynomial(src, nv, f).unwrap()).unwrap()
    }

    #[test]
    fn quartic_with_one_degenerate_point() {
        // F = x0*x1^3 + x2^4 + x3^4: d=4, N=3, isolated singularity with
        // total Tjurina number 18; r = 1; bound (4-1-1)*27 = 18 fails.
        let h = hs("x0*x1^3 + x2^4 + x3^4", 4, fp());
        assert_eq!(h.trivial_summand_count(), 0);
        assert_eq!(h.min_syzygy_degree().unwrap(), 1);
        let (s, deg) = h.singular_dim_deg().unwrap();
        assert_eq!((s, deg), (0, Some(18)));
        let rep = stability_check(&h).unwrap();
        assert_eq!(rep.verdict, Verdict::Inconclusive);
        assert_eq!(rep.q, Some(1));
        assert_eq!(rep.r, Some(1));
        assert_eq!(rep.bound, Some(18));
        assert_eq!(rep.sing_deg, Some(18));
        // du Plessis–Wall: (d - r - 1)(d-1)^{N-1} <= singDeg.
        let r = rep.r.unwrap() as u64;
        assert!((4 - r - 1) * 9 <= 18);
    }

    #[test]
    fn smooth_fermat_quintic_surface() {
        let h = hs("x0^5 + x1^5 + x2^5 + x3^5", 4, fp());
        let rep = stability_check(&h).unwrap();
        assert_eq!(rep.verdict, Verdict::SmoothClassical);
        assert_eq!(rep.s, -1);
    }

    #[test]
    fn cone_is_not_semistable() {
        let h = hs("x0^2 + x1^2", 4, fp());
        assert_eq!(h.trivial_summand_count(), 2);
        let rep = stability_check(&h).unwrap();
        assert_eq!(rep.verdict, Verdict::NotSemistable);
        assert_eq!(rep.criterion, Some(Criterion::ConeObstruction));
        let w = rep.witness.unwrap();
        assert!(!w.is_empty());
    }

    #[test]
    fn one_node_cubic_surface_via_numeric_bound() {
        // x3*(x0^2+x1^2+x2^2) plus a cubic in x0..x2 chosen so the only
        // singular point (geometrically) is the ordinary node at the
        // vertex [0:0:0:1]; checked by the Jacobian scheme having degree 1.
        let h = hs(
            "x0^2*x3 + x1^2*x3 + x2^2*x3 + x0^3 + 2*x1^3 + 3*x2^3 + x0*x1*x2",
            4,
            fp(),
        );
        let rep = stability_check(&h).unwrap();
        assert_eq!(rep.verdict, Verdict::SlopeStable);
        assert_eq!(rep.criterion, Some(Criterion::TheoremC));
        assert_eq!(rep.q, Some(0));
        assert_eq!(rep.sing_deg, Some(1));
        assert_eq!(rep.bound, Some(8));
    }

    #[test]
    fn koszul_lower_bound_at_degree_d_minus_1() {
        for src in ["x0^3 + x1^3 + x2^3 + x3^3", "x0*x1^2 + x2^3 + x3^3"] {
            let h = hs(src, 4, fp());
            let d = h.d;
            // C(N+1, 2) Koszul syzygies among the partials.
            assert!(h.log_sections_dim(d - 1) >= 6);
        }
    }

    #[test]
    fn saturation_quotient_and_mult_map() {
        let h = hs("x0*x1^2 + x2^3 + x3^3", 4, fp());
        // t = 0: J is generated in degree d-1 = 2 and the saturation has
        // nothing below that either.
        assert_eq!(h.saturation_quotient_dim(0).unwrap(), 0);
        // t = 2: difference of the two engine Hilbert values.
        let j = h.jacobian_gens();
        let sat = h.saturated_jacobian().unwrap();
        let hj = hilbert_function(&j, 2).unwrap().values[2];
        let hsat = hilbert_function(&sat, 2).unwrap().values[2];
        assert_eq!(h.saturation_quotient_dim(2).unwrap() as u64, hj - hsat);
        // Finite length: vanishes in high degrees (isolated singularity).
        assert_eq!(h.saturation_quotient_dim(12).unwrap(), 0);
        // g in J kills the quotient; g = 0 likewise.
        let g = h.partials()[0].clone();
        assert_eq!(h.mult_map_rank(&g, 2).unwrap(), 0);
        let z = Polynomial::zero(fp(), 4);
        assert_eq!(h.mult_map_rank(&z, 2).unwrap(), 0);
    }

    #[test]
    fn smooth_rejects_saturation_quotient() {
        let h = hs("x0^3 + x1^3 + x2^3 + x3^3", 4, fp());
        assert!(matches!(
            h.saturation_quotient_dim(2),
            Err(CoreError::Hypothesis(_))
        ));
    }
}

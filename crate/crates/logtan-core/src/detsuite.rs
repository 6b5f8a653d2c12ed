//! Determinantal hypersurfaces: the tautological determinant (generic and
//! symmetric), Betti verification of the classical resolutions of the
//! submaximal-minor ideals, certified semigeneric sections, the structure
//! of the section ideal, Artinian reductions with the quadratic Lefschetz
//! property, restriction vanishing, and the fiber-rank stratification of
//! the logarithmic tangent sheaf over matrices of each rank.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;
use serde::Serialize;

use crate::error::CoreError;
use crate::field::{FieldSpec, K};
use crate::groebner::{
    dim_deg, groebner_basis, hilbert_function, ideals_equal, normal_form, GroebnerOptions,
};
use crate::linalg::ExactMatrix;
use crate::module::{minimal_free_resolution, BettiEntry, BettiTable, GradedMap};
use crate::poly::{graded_basis, Monomial, MonomialOrder, Polynomial};

pub const RETRY_BUDGET: u32 = 16;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum Flavor {
    Generic,
    Symmetric,
}

/// A determinantal hypersurface `D = V(det M)` where `M` is the generic
/// (all-distinct-variables) or generic-symmetric matrix of linear forms.
#[derive(Clone, Debug)]
pub struct DetInstance {
    pub n: usize,
    pub flavor: Flavor,
    pub field: FieldSpec,
    pub num_vars: usize,
    pub matrix: Vec<Vec<Polynomial>>,
    pub f: Polynomial,
}

/// Determinant of a polynomial matrix by cofactor (Laplace) expansion —
/// deliberately naive, used as the independent oracle everywhere.
pub fn det_poly(m: &[Vec<Polynomial>]) -> Polynomial {
    let n = m.len();
    let field = m[0][0].field;
    let nv = m[0][0].num_vars;
    fn rec(
        m: &[Vec<Polynomial>],
        rows: &[usize],
        cols: &[usize],
        field: FieldSpec,
        nv: usize,
    ) -> Polynomial {
        if rows.len() == 1 {
            return m[rows[0]][cols[0]].clone();
        }
        let mut acc = Polynomial::zero(field, nv);
        for (k, &c) in cols.iter().enumerate() {
            let sub_cols: Vec<usize> = cols
                .iter()
                .copied()
                .filter(|&cc| cc != c)
                .collect();
            let minor = rec(m, &rows[1..], &sub_cols, field, nv);
            let term = minor.mul(&m[rows[0]][c]);
            acc = if k % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
        }
        acc
    }
    let idx: Vec<usize> = (0..n).collect();
    rec(m, &idx, &idx, field, nv)
}

/// The order-(n−1) minor obtained by deleting row `i` and column `j`.
pub fn minor(m: &[Vec<Polynomial>], i: usize, j: usize) -> Polynomial {
    let n = m.len();
    let rows: Vec<usize> = (0..n).filter(|&r| r != i).collect();
    let cols: Vec<usize> = (0..n).filter(|&c| c != j).collect();
    let sub: Vec<Vec<Polynomial>> = rows
        .iter()
        .map(|&r| cols.iter().map(|&c| m[r][c].clone()).collect())
        .collect();
    det_poly(&sub)
}

/// Index of the symmetric variable `x_{ij}` (`i <= j`) among the
/// `C(n+1,2)` coordinates, row-major over the upper triangle.
fn sym_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i <= j && j < n);
    i * n - i * (i + 1) / 2 + j
}

pub fn build_determinant(
    n: usize,
    flavor: Flavor,
    field: FieldSpec,
) -> Result<DetInstance, CoreError> {
    if n < 2 {
        return Err(CoreError::Invalid("n must be at least 2".into()));
    }
    field.validate()?;
    let num_vars = match flavor {
        Flavor::Generic => n * n,
        Flavor::Symmetric => {
            if field.characteristic() == 2 {
                return Err(CoreError::Invalid(
                    "symmetric flavor needs characteristic different from 2".into(),
                ));
            }
            n * (n + 1) / 2
        }
    };
    let entry = |i: usize, j: usize| -> Polynomial {
        let idx = match flavor {
            Flavor::Generic => i * n + j,
            Flavor::Symmetric => sym_index(n, i.min(j), i.max(j)),
        };
        Polynomial::var(field, num_vars, idx)
    };
    let matrix: Vec<Vec<Polynomial>> = (0..n)
        .map(|i| (0..n).map(|j| entry(i, j)).collect())
        .collect();
    let f = det_poly(&matrix);

    // Partials equal the order-(n−1) minors up to sign (and a factor of 2
    // on symmetric off-diagonals) — asserted against the cofactor oracle.
    let inst = DetInstance {
        n,
        flavor,
        field,
        num_vars,
        matrix,
        f,
    };
    inst.assert_partials_are_minors()?;
    Ok(inst)
}

impl DetInstance {
    fn assert_partials_are_minors(&self) -> Result<(), CoreError> {
        let n = self.n;
        match self.flavor {
            Flavor::Generic => {
                for i in 0..n {
                    for j in 0..n {
                        let p = self.f.differentiate(i * n + j);
                        let mut m = minor(&self.matrix, i, j);
                        if (i + j) % 2 == 1 {
                            m = m.neg();
                        }
                        if p != m {
                            return Err(CoreError::Invalid(
                                "partials do not match signed minors".into(),
                            ));
                        }
                    }
                }
            }
            Flavor::Symmetric => {
                let two = self.field.from_i64(2);
                for i in 0..n {
                    for j in i..n {
                        let p = self.f.differentiate(sym_index(n, i, j));
                        let mut m = minor(&self.matrix, i, j);
                        if (i + j) % 2 == 1 {
                            m = m.neg();
                        }
                        if i != j {
                            m = m.scale(&two);
                        }
                        if p != m {
                            return Err(CoreError::Invalid(
                                "partials do not match signed (doubled) minors".into(),
                            ));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Generators of the submaximal-minor ideal (equivalently, of the
    /// Jacobian ideal up to units).
    pub fn jacobian_gens(&self) -> Vec<Polynomial> {
        (0..self.num_vars).map(|i| self.f.differentiate(i)).collect()
    }
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ResolutionCheck {
    pub computed: BettiTable,
    pub expected: BettiTable,
    /// For the symmetric flavor: the same table in the sheaf-normalized
    /// twists (generators in degree 1), a uniform shift of the module
    /// twists.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sheaf_twists: Option<BettiTable>,
    pub matches: bool,
}

/// Verifies the minimal free resolution of the logarithmic tangent module
/// (the syzygy module of the partials) against the closed-form tables:
/// generic `(2(n²−1) @ −n, n² @ −(n+1), 1 @ −2n)`, symmetric
/// `(n²−1 @ −n, C(n,2) @ −(n+1))`.
pub fn resolution_check(inst: &DetInstance) -> Result<ResolutionCheck, CoreError> {
    if inst.n > 3 {
        return Err(CoreError::Scale(format!(
            "resolution_check supports n <= 3 (got n = {}); use graded_betti_probe",
            inst.n
        )));
    }
    let n = inst.n as i64;
    let gens = inst.jacobian_gens();
    // Resolve R/J with the internal degree cap 2n+2; the strata from
    // homological index 2 on are the resolution of the syzygy module.
    let res = minimal_free_resolution(&gens, 8)?;
    let full = res.betti();
    let computed = BettiTable {
        entries: full
            .entries
            .iter()
            .filter(|e| e.index >= 2)
            .map(|e| BettiEntry {
                index: e.index - 2,
                twist: e.twist,
                rank: e.rank,
            })
            .collect(),
    };
    let expected = match inst.flavor {
        Flavor::Generic => BettiTable {
            entries: vec![
                BettiEntry {
                    index: 0,
                    twist: -n,
                    rank: (2 * (n * n - 1)) as usize,
                },
                BettiEntry {
                    index: 1,
                    twist: -(n + 1),
                    rank: (n * n) as usize,
                },
                BettiEntry {
                    index: 2,
                    twist: -2 * n,
                    rank: 1,
                },
            ],
        },
        Flavor::Symmetric => BettiTable {
            entries: vec![
                BettiEntry {
                    index: 0,
                    twist: -n,
                    rank: (n * n - 1) as usize,
                },
                BettiEntry {
                    index: 1,
                    twist: -(n + 1),
                    rank: (n * (n - 1) / 2) as usize,
                },
            ],
        },
    };
    let sheaf_twists = match inst.flavor {
        Flavor::Generic => None,
        Flavor::Symmetric => Some(BettiTable {
            // Uniform shift by n-1: generators in degree 1, relations in 2.
            entries: expected
                .entries
                .iter()
                .map(|e| BettiEntry {
                    index: e.index,
                    twist: e.twist + (n - 1),
                    rank: e.rank,
                })
                .collect(),
        }),
    };
    let matches = computed == expected;
    Ok(ResolutionCheck {
        computed,
        expected,
        sheaf_twists,
        matches,
    })
}

/// Graded-piece fallback for sizes beyond the resolution engine: reads the
/// first two Betti ranks of the syzygy module off kernel dimensions in
/// degrees n and n+1 (numbers of generators and of relations).
pub fn graded_betti_probe(inst: &DetInstance) -> Result<(usize, usize), CoreError> {
    let h = crate::hypersurface::Hypersurface::new(inst.f.clone())?;
    let field = inst.field;
    let nv = inst.num_vars;
    // Degree-n generators of the syzygy module = linear syzygies of the
    // degree-(n-1) partials; kernel coordinates are (partial, variable).
    let gens = h.log_sections_kernel(1);
    let b1 = gens.len();
    // Relations in degree n+1: the kernel of R_1^{b1} -> (R_2)^{nv}
    // sending (l_g) to sum l_g * s_g.  Basis x_v * s_g on the source;
    // (component, degree-2 monomial) coordinates on the target.
    let deg1 = graded_basis(nv, 1);
    let deg2 = graded_basis(nv, 2);
    let col_of: std::collections::BTreeMap<&Monomial, usize> =
        deg2.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut rows: Vec<Vec<K>> = Vec::with_capacity(b1 * nv);
    for s in &gens {
        for xv in &deg1 {
            let mut row = vec![field.zero(); nv * deg2.len()];
            for pi in 0..nv {
                for (mi, m) in deg1.iter().enumerate() {
                    let c = &s[pi * deg1.len() + mi];
                    if !c.is_zero() {
                        let prod = m.mul(xv);
                        row[pi * deg2.len() + col_of[&prod]] =
                            row[pi * deg2.len() + col_of[&prod]].add(c);
                    }
                }
            }
            rows.push(row);
        }
    }
    let rank = ExactMatrix::from_rows(field, rows).rank();
    let b2 = b1 * nv - rank;
    Ok((b1, b2))
}

/// A certified semigeneric section: `ML = M0 + x0·E_{1,1}` with `M0` a
/// seeded random matrix of linear forms in (x1, x2, x3).
#[derive(Clone, Debug)]
pub struct SemigenericSection {
    pub n: usize,
    pub seed: u64,
    pub field: FieldSpec,
    /// Matrix of linear forms in 4 variables (x0 absent from M0).
    pub m0: Vec<Vec<Polynomial>>,
    pub ml: Vec<Vec<Polynomial>>,
    pub certificate: GenericityCertificate,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct GenericityCertificate {
    /// Projective dimension of `V(det M0, det M1)` in the plane (must be 0).
    pub w_dim: i64,
    /// Its length (must be `n(n-1)`).
    pub w_length: u64,
    pub expected_length: u64,
    /// Transversality of the two curves: the scheme cut by both curves and
    /// the 2×2 minors of their Jacobian is empty (so `W` is reduced).
    pub reduced: bool,
    /// Resamples consumed before the certificate passed.
    pub retries: u32,
}

impl GenericityCertificate {
    pub fn passes(&self) -> bool {
        self.w_dim == 0 && self.w_length == self.expected_length && self.reduced
    }
}

pub fn semigeneric_section(
    n: usize,
    seed: u64,
    field: FieldSpec,
) -> Result<SemigenericSection, CoreError> {
    if n < 2 {
        return Err(CoreError::Invalid("n must be at least 2".into()));
    }
    // Over a prime field the certificate needs room for n(n-1) distinct
    // intersection points; the rationals always have room.
    if let FieldSpec::Prime(p) = field {
        if p <= (n * (n - 1)) as u64 {
            return Err(CoreError::Invalid(format!(
                "need p > n(n-1) = {}",
                n * (n - 1)
            )));
        }
    }
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    let mut last_cert = None;
    for retry in 0..RETRY_BUDGET {
        // Linear forms in x1..x3 inside the 4-variable ring.
        let m0: Vec<Vec<Polynomial>> = (0..n)
            .map(|_| {
                (0..n)
                    .map(|_| {
                        let mut f = Polynomial::zero(field, 4);
                        for v in 1..4 {
                            f.add_term(Monomial::var(4, v), field.random(&mut rng));
                        }
                        f
                    })
                    .collect()
            })
            .collect();
        let cert = certify(&m0, n, retry)?;
        if cert.passes() {
            let mut ml = m0.clone();
            ml[0][0] = ml[0][0].add(&Polynomial::var(field, 4, 0));
            return Ok(SemigenericSection {
                n,
                seed,
                field,
                m0,
                ml,
                certificate: cert,
            });
        }
        last_cert = Some(cert);
    }
    Err(CoreError::Degenerate {
        retries: RETRY_BUDGET,
        context: format!(
            "semigeneric certificate kept failing: {:?}",
            last_cert.map(|c| (c.w_dim, c.w_length, c.reduced))
        ),
    })
}

/// Certificate for `M0`: `det M0` and `det M1` (the lower-right minor) cut
/// out a reduced scheme of dimension 0 and length `n(n-1)` in the plane.
fn certify(
    m0: &[Vec<Polynomial>],
    n: usize,
    retries: u32,
) -> Result<GenericityCertificate, CoreError> {
    // Work in the 3-variable plane ring (drop absent x0).
    let to_plane = |p: &Polynomial| p.unshift_vars(1);
    let f = to_plane(&det_poly(m0));
    let g = if n >= 2 {
        let sub: Vec<Vec<Polynomial>> = (1..n)
            .map(|i| (1..n).map(|j| m0[i][j].clone()).collect())
            .collect();
        to_plane(&det_poly(&sub))
    } else {
        unreachable!()
    };
    let expected_length = (n * (n - 1)) as u64;
    if f.is_zero() || g.is_zero() {
        return Ok(GenericityCertificate {
            w_dim: -2,
            w_length: 0,
            expected_length,
            reduced: false,
            retries,
        });
    }
    let (w_dim, w_length) = dim_deg(&[f.clone(), g.clone()])?;
    // Transversality: curves plus the 2×2 minors of their Jacobian cut
    // out the empty scheme.
    let mut gens = vec![f.clone(), g.clone()];
    for a in 0..3 {
        for b in a + 1..3 {
            let m = f
                .differentiate(a)
                .mul(&g.differentiate(b))
                .sub(&f.differentiate(b).mul(&g.differentiate(a)));
            gens.push(m);
        }
    }
    let reduced = dim_deg(&gens)?.0 == -1;
    Ok(GenericityCertificate {
        w_dim,
        w_length,
        expected_length,
        reduced,
        retries,
    })
}

impl SemigenericSection {
    /// The section ideal: all order-(n−1) minors of `ML`.
    pub fn section_ideal(&self) -> Vec<Polynomial> {
        let n = self.n;
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                out.push(minor(&self.ml, i, j));
            }
        }
        out
    }

    /// Generators of `x0·m0^{n-2} + m0^{n-1}` where `m0 = (x1, x2, x3)`.
    pub fn structural_ideal(&self) -> Vec<Polynomial> {
        let n = self.n;
        let field = self.field;
        let mut out = Vec::new();
        let embed = |m: &Monomial| -> Monomial {
            let mut e = vec![0u16; 4];
            e[1..4].copy_from_slice(&m.0);
            Monomial(e)
        };
        if n >= 2 {
            for m in graded_basis(3, n as u32 - 2) {
                let mut e = embed(&m);
                e.0[0] += 1;
                out.push(Polynomial::monomial(field, e, field.one()));
            }
        }
        for m in graded_basis(3, n as u32 - 1) {
            out.push(Polynomial::monomial(field, embed(&m), field.one()));
        }
        out
    }
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Propn2Report {
    pub equal: bool,
    /// The unconditional containment `I_L ⊆ x0·m0^{n-2} + m0^{n-1}`.
    pub containment: bool,
    pub lhs_hf: Vec<u64>,
    pub rhs_hf: Vec<u64>,
}

/// Structure of the section ideal of a certified semigeneric matrix:
/// `I_L = x0·m0^{n-2} + m0^{n-1}` (Groebner equality both ways, plus the
/// unconditional containment asserted separately).
pub fn propn2_check(sec: &SemigenericSection) -> Result<Propn2Report, CoreError> {
    let lhs = sec.section_ideal();
    let rhs = sec.structural_ideal();
    let rhs_gb = groebner_basis(&rhs, MonomialOrder::Grevlex, GroebnerOptions::default())?;
    let containment = lhs.iter().all(|f| rhs_gb.contains(f));
    let equal = ideals_equal(&lhs, &rhs)?;
    let max_d = 2 * sec.n as u32;
    let lhs_hf = hilbert_function(&lhs, max_d)?.values;
    let rhs_hf = hilbert_function(&rhs, max_d)?.values;
    Ok(Propn2Report {
        equal,
        containment,
        lhs_hf,
        rhs_hf,
    })
}

/// Which 4-variable section to use for the Artinian/Lefschetz check.
pub enum SectionChoice<'a> {
    /// The semigeneric section, with `h = x0` (multiplication by `x0²`).
    Semigeneric(&'a SemigenericSection),
    /// A seeded random 4-variable specialization with a random quadric.
    Random { seed: u64 },
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct LefschetzReport {
    pub hf: Vec<u64>,
    pub dim_from: usize,
    pub dim_to: usize,
    pub expected_dim: usize,
    pub rank: usize,
    pub iso: bool,
    pub retries: u32,
}

/// The graded algebra `A = R_L / I_L` of a 4-variable section of the
/// generic determinant: asserts `dim A_{n-3} = dim A_{n-1} = C(n,3)` and
/// returns the rank of multiplication by `h²` (semigeneric, `h = x0`) or
/// by a random quadric `g` from `A_{n-3}` to `A_{n-1}`.
pub fn artinian_lefschetz_check(
    inst: &DetInstance,
    choice: SectionChoice<'_>,
) -> Result<LefschetzReport, CoreError> {
    if inst.flavor != Flavor::Generic {
        return Err(CoreError::Invalid(
            "the Lefschetz check applies to the generic flavor".into(),
        ));
    }
    let n = inst.n;
    if n < 3 {
        return Err(CoreError::Invalid("need n >= 3".into()));
    }
    let field = inst.field;
    match choice {
        SectionChoice::Semigeneric(sec) => {
            if sec.n != n || sec.field != field {
                return Err(CoreError::Invalid("section does not match instance".into()));
            }
            let ideal = sec.section_ideal();
            let h2 = Polynomial::monomial(field, Monomial(vec![2, 0, 0, 0]), field.one());
            lefschetz_on(&ideal, n, &h2, field, 0)
        }
        SectionChoice::Random { seed } => {
            let mut rng = ChaCha20Rng::seed_from_u64(seed);
            for retry in 0..RETRY_BUDGET {
                // Random 4-variable specialization of the n² coordinates.
                let images: Vec<Polynomial> = (0..inst.num_vars)
                    .map(|_| {
                        let mut f = Polynomial::zero(field, 4);
                        for v in 0..4 {
                            f.add_term(Monomial::var(4, v), field.random(&mut rng));
                        }
                        f
                    })
                    .collect();
                let ideal: Vec<Polynomial> = inst
                    .jacobian_gens()
                    .iter()
                    .map(|p| p.substitute(&images))
                    .collect();
                // Degenerate (non-Artinian) sections are resampled.
                if dim_deg(&ideal)?.0 != -1 {
                    continue;
                }
                let mut g = Polynomial::zero(field, 4);
                for m in graded_basis(4, 2) {
                    g.add_term(m, field.random(&mut rng));
                }
                return lefschetz_on(&ideal, n, &g, field, retry);
            }
            Err(CoreError::Degenerate {
                retries: RETRY_BUDGET,
                context: "random section stayed non-Artinian".into(),
            })
        }
    }
}

fn lefschetz_on(
    ideal: &[Polynomial],
    n: usize,
    g: &Polynomial,
    field: FieldSpec,
    retries: u32,
) -> Result<LefschetzReport, CoreError> {
    let gb = groebner_basis(ideal, MonomialOrder::Grevlex, GroebnerOptions::default())?;
    let t_from = n as u32 - 3;
    let t_to = n as u32 - 1;
    let hf = hilbert_function(ideal, 2 * n as u32)?;
    let dim_from = hf.values[t_from as usize] as usize;
    let dim_to = hf.values[t_to as usize] as usize;
    let expected = binom(n, 3);

    // Monomial coset bases from the leading-term ideal.
    let lt = gb.leading_monomials();
    let std_monos = |t: u32| -> Vec<Monomial> {
        graded_basis(4, t)
            .into_iter()
            .filter(|m| !lt.iter().any(|l| l.divides(m)))
            .collect()
    };
    let from_basis = std_monos(t_from);
    let to_basis = std_monos(t_to);
    debug_assert_eq!(from_basis.len(), dim_from);
    debug_assert_eq!(to_basis.len(), dim_to);
    let mut rows = Vec::new();
    for m in &from_basis {
        let prod = g.mul_monomial(m, &field.one());
        let nf = normal_form(&prod, &gb.elements, MonomialOrder::Grevlex);
        let mut v = vec![field.zero(); to_basis.len()];
        for (mm, c) in nf.terms() {
            let idx = to_basis.iter().position(|b| b == mm).unwrap();
            v[idx] = c.clone();
        }
        rows.push(v);
    }
    let rank = if rows.is_empty() {
        0
    } else {
        ExactMatrix::from_rows(field, rows).rank()
    };
    Ok(LefschetzReport {
        hf: hf.values,
        dim_from,
        dim_to,
        expected_dim: expected,
        rank,
        iso: dim_from == expected && dim_to == expected && rank == expected,
        retries,
    })
}

fn binom(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let mut r = 1usize;
    for i in 0..k {
        r = r * (n - i) / (i + 1);
    }
    r
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct RestrictionReport {
    pub hf: Vec<u64>,
    pub vanishes_from: Option<u32>,
    pub pass: bool,
    pub retries: u32,
}

/// Restriction vanishing.  Symmetric: the 3-variable Artinian reduction of
/// the minor ideal has `A_t = 0` for all `t >= n-1`.  Generic: reduces to
/// the Lefschetz isomorphism on a random Artinian section.
pub fn restriction_vanishing(
    inst: &DetInstance,
    seed: u64,
) -> Result<RestrictionReport, CoreError> {
    let field = inst.field;
    match inst.flavor {
        Flavor::Generic => {
            let rep = artinian_lefschetz_check(inst, SectionChoice::Random { seed })?;
            Ok(RestrictionReport {
                hf: rep.hf.clone(),
                vanishes_from: None,
                pass: rep.iso,
                retries: rep.retries,
            })
        }
        Flavor::Symmetric => {
            let mut rng = ChaCha20Rng::seed_from_u64(seed);
            for retry in 0..RETRY_BUDGET {
                let images: Vec<Polynomial> = (0..inst.num_vars)
                    .map(|_| {
                        let mut f = Polynomial::zero(field, 3);
                        for v in 0..3 {
                            f.add_term(Monomial::var(3, v), field.random(&mut rng));
                        }
                        f
                    })
                    .collect();
                let ideal: Vec<Polynomial> = inst
                    .jacobian_gens()
                    .iter()
                    .map(|p| p.substitute(&images))
                    .filter(|p| !p.is_zero())
                    .collect();
                if ideal.is_empty() || dim_deg(&ideal)?.0 != -1 {
                    continue;
                }
                let max_d = 2 * inst.n as u32;
                let hf = hilbert_function(&ideal, max_d)?;
                // Artinian: once zero, always zero.
                let vanishes_from = hf.values.iter().position(|&v| v == 0).map(|t| t as u32);
                let pass = vanishes_from.map(|t| t <= inst.n as u32 - 1).unwrap_or(false);
                return Ok(RestrictionReport {
                    hf: hf.values,
                    vanishes_from,
                    pass,
                    retries: retry,
                });
            }
            Err(CoreError::Degenerate {
                retries: RETRY_BUDGET,
                context: "random plane stayed degenerate".into(),
            })
        }
    }
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct FiberRankReport {
    pub n: usize,
    pub k: usize,
    pub kernel_dims: Vec<usize>,
    pub expected: usize,
    /// Fiber dimensions of the evaluated presentation matrix (for
    /// `n ∈ {2,3}` and `k >= 1`), with the expected `n² + k² − 2`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fiber_dims: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fiber_expected: Option<usize>,
    pub pass: bool,
}

/// For seeded random matrices `a` of rank `n-k`, the solution space of
/// `a·b = λ·Id`, `b·a = μ·Id` has dimension 1 (k = 0, spanned by `a⁻¹`)
/// or `k²` (k >= 1).  For `n ∈ {2,3}` and `k >= 1` the result is
/// cross-checked against the evaluated presentation matrix of the
/// logarithmic tangent module: fiber dimension `n² + k² − 2`.
pub fn fiber_rank_check(
    n: usize,
    k: usize,
    trials: u32,
    field: FieldSpec,
    seed: u64,
) -> Result<FiberRankReport, CoreError> {
    if k >= n {
        return Err(CoreError::Invalid("need 0 <= k <= n-1".into()));
    }
    if trials < 1 {
        return Err(CoreError::Invalid("need at least one trial".into()));
    }
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    let expected = if k == 0 { 1 } else { k * k };

    let mut kernel_dims = Vec::new();
    let mut samples: Vec<Vec<Vec<K>>> = Vec::new();
    for _ in 0..trials {
        let a = sample_rank_matrix(n, k, field, &mut rng)?;
        // Unknowns: b (n², column-major irrelevent as long as consistent),
        // then λ, μ.  Equations: a·b − λ·Id = 0 and b·a − μ·Id = 0.
        let cols = n * n + 2;
        let mut rows: Vec<Vec<K>> = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let mut r1 = vec![field.zero(); cols];
                let mut r2 = vec![field.zero(); cols];
                for t in 0..n {
                    // (a·b)_{ij} involves b_{t j}; (b·a)_{ij} involves b_{i t}.
                    r1[t * n + j] = r1[t * n + j].add(&a[i][t]);
                    r2[i * n + t] = r2[i * n + t].add(&a[t][j]);
                }
                if i == j {
                    r1[n * n] = field.one().neg();
                    r2[n * n + 1] = field.one().neg();
                }
                rows.push(r1);
                rows.push(r2);
            }
        }
        let (_, ker) = ExactMatrix::from_rows(field, rows).rank_and_kernel();
        kernel_dims.push(ker.len());
        samples.push(a);
    }

    // Presentation-matrix cross-check for the small sizes.
    let (fiber_dims, fiber_expected) = if n <= 3 && k >= 1 {
        let phi = presentation_matrix(n, field)?;
        let mut dims = Vec::new();
        for a in &samples {
            let point: Vec<K> = a.iter().flat_map(|row| row.iter().cloned()).collect();
            let eval = phi.evaluate(&point);
            dims.push(phi.target_rank() - eval.rank());
        }
        (Some(dims), Some(n * n + k * k - 2))
    } else {
        (None, None)
    };

    let pass = kernel_dims.iter().all(|&d| d == expected)
        && fiber_dims
            .as_ref()
            .map(|ds| ds.iter().all(|&d| Some(d) == fiber_expected))
            .unwrap_or(true);
    Ok(FiberRankReport {
        n,
        k,
        kernel_dims,
        expected,
        fiber_dims,
        fiber_expected,
        pass,
    })
}

/// The presentation matrix of the logarithmic tangent module of the
/// generic determinant: the second differential of the resolution of the
/// syzygy module (relations among its generators), with linear entries.
pub fn presentation_matrix(n: usize, field: FieldSpec) -> Result<GradedMap, CoreError> {
    let inst = build_determinant(n, Flavor::Generic, field)?;
    let res = minimal_free_resolution(&inst.jacobian_gens(), 8)?;
    // maps[0]: F_1 -> F_0 (the minors), maps[1]: generators of the syzygy
    // module, maps[2]: its relations — the presentation differential.
    res.maps
        .get(2)
        .cloned()
        .ok_or_else(|| CoreError::Invalid("resolution too short".into()))
}

/// A random matrix of rank exactly `n - k`: product of two seeded
/// invertible factors around a rank projector.
fn sample_rank_matrix<R: Rng>(
    n: usize,
    k: usize,
    field: FieldSpec,
    rng: &mut R,
) -> Result<Vec<Vec<K>>, CoreError> {
    let rand_invertible = |rng: &mut R| -> Result<Vec<Vec<K>>, CoreError> {
        for _ in 0..RETRY_BUDGET {
            let m: Vec<Vec<K>> = (0..n)
                .map(|_| (0..n).map(|_| field.random(rng)).collect())
            .collect();
            if ExactMatrix::from_rows(field, m.clone()).rank() == n {
                return Ok(m);
            }
        }
        Err(CoreError::Degenerate {
            retries: RETRY_BUDGET,
            context: "could not sample an invertible factor".into(),
        })
    };
    let p = rand_invertible(rng)?;
    let q = rand_invertible(rng)?;
    // a = p · diag(1,...,1,0,...,0) · q with n-k ones.
    let mut a = vec![vec![field.zero(); n]; n];
    for i in 0..n {
        for j in 0..n {
            let mut acc = field.zero();
            for t in 0..n - k {
                acc = acc.add(&p[i][t].mul(&q[t][j]));
            }
            a[i][j] = acc;
        }
    }
    Ok(a)
}

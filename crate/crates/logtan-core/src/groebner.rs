//! Groebner bases for polynomial ideals: Buchberger's algorithm with the
//! coprime-lead and chain pair-elimination criteria and sugar-degree pair
//! selection, reduced bases (canonical per order), normal forms, ideal
//! intersection/colon/saturation via an auxiliary elimination variable,
//! and Hilbert-series-based dimension and degree.

use std::collections::BTreeMap;

use num::{BigRational, One, Zero};

use crate::error::CoreError;
use crate::field::FieldSpec;
use crate::poly::{graded_basis, Monomial, MonomialOrder, Polynomial};

/// A reduced Groebner basis: monic elements, fully inter-reduced, sorted
/// by leading monomial.  For a fixed order this representation is unique,
/// so ideal equality is list equality.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GroebnerBasis {
    pub field: FieldSpec,
    pub num_vars: usize,
    pub ord: MonomialOrder,
    pub elements: Vec<Polynomial>,
}

impl GroebnerBasis {
    /// Leading monomials of the basis (generators of the initial ideal).
    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elements
            .iter()
            .map(|g| g.leading(self.ord).expect("basis elements are nonzero").0.clone())
            .collect()
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        normal_form(f, &self.elements, self.ord).is_zero()
    }

    /// True when this basis generates the whole ring.
    pub fn is_unit_ideal(&self) -> bool {
        self.elements.len() == 1 && self.elements[0].degree() == Some(0)
    }
}

/// Full normal form of `f` against `basis` under `ord`: no term of the
/// result is divisible by any leading monomial of the basis.  Reducers
/// are tried in basis order, so the result is deterministic.
pub fn normal_form(f: &Polynomial, basis: &[Polynomial], ord: MonomialOrder) -> Polynomial {
    let leads: Vec<(&Monomial, &crate::field::K)> = basis
        .iter()
        .map(|g| g.leading(ord).expect("reducers must be nonzero"))
        .collect();
    let mut h = f.clone();
    let mut rem = Polynomial::zero(f.field, f.num_vars);
    while let Some((lm, lc)) = h.leading(ord) {
        let lm = lm.clone();
        let lc = lc.clone();
        let mut reduced = false;
        for (g, (gm, gc)) in basis.iter().zip(&leads) {
            if gm.divides(&lm) {
                let q = gm.quotient(&lm);
                let c = lc.div(gc).expect("leading coefficients are invertible");
                h = h.sub(&g.mul_monomial(&q, &c));
                reduced = true;
                break;
            }
        }
        if !reduced {
            // Move the irreducible leading term to the remainder.
            rem.add_term(lm.clone(), lc.clone());
            h.add_term(lm, lc.neg());
        }
    }
    rem
}

#[derive(Clone, Copy, Debug, Default)]
pub struct GroebnerOptions {
    /// Abort with a diagnostic if any basis element's total degree would
    /// exceed this cap (used by the fixed-size verification suites).
    pub degree_cap: Option<u32>,
}

/// Buchberger's algorithm returning the reduced Groebner basis.
pub fn groebner_basis(
    gens: &[Polynomial],
    ord: MonomialOrder,
    opts: GroebnerOptions,
) -> Result<GroebnerBasis, CoreError> {
    let field = gens
        .first()
        .map(|g| g.field)
        .ok_or_else(|| CoreError::Invalid("empty generator list".into()))?;
    let num_vars = gens[0].num_vars;
    for g in gens {
        if g.field != field || g.num_vars != num_vars {
            return Err(CoreError::Invalid(
                "generators must share a field and variable count".into(),
            ));
        }
    }

    let mut basis: Vec<Polynomial> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    if basis.is_empty() {
        return Ok(GroebnerBasis {
            field,
            num_vars,
            ord,
            elements: vec![],
        });
    }

    #[derive(Clone)]
    struct Pair {
        i: usize,
        j: usize,
        lcm: Monomial,
        sugar: u32,
    }

    let lead = |p: &Polynomial| -> (Monomial, u32) {
        let (m, _) = p.leading(ord).unwrap();
        (m.clone(), p.degree().unwrap())
    };

    let mut leads: Vec<(Monomial, u32)> = basis.iter().map(|g| lead(g)).collect();
    let mut pairs: Vec<Pair> = Vec::new();
    let make_pairs = |pairs: &mut Vec<Pair>, leads: &[(Monomial, u32)], t: usize| {
        for i in 0..t {
            let lcm = leads[i].0.lcm(&leads[t].0);
            // Sugar degree: degree the S-polynomial inherits.
            let s = (lcm.degree() - leads[i].0.degree() + leads[i].1)
                .max(lcm.degree() - leads[t].0.degree() + leads[t].1);
            pairs.push(Pair {
                i,
                j: t,
                lcm,
                sugar: s,
            });
        }
    };
    for t in 0..basis.len() {
        make_pairs(&mut pairs, &leads, t);
    }
    let mut done: std::collections::HashSet<(usize, usize)> = Default::default();

    while !pairs.is_empty() {
        // Sugar selection: smallest sugar, ties by lcm (under the order)
        // and then by indices, so selection is deterministic.
        let mut best = 0;
        for k in 1..pairs.len() {
            let a = &pairs[k];
            let b = &pairs[best];
            let better = match a.sugar.cmp(&b.sugar) {
                std::cmp::Ordering::Less => true,
                std::cmp::Ordering::Greater => false,
                std::cmp::Ordering::Equal => match ord.cmp(&a.lcm, &b.lcm) {
                    std::cmp::Ordering::Less => true,
                    std::cmp::Ordering::Greater => false,
                    std::cmp::Ordering::Equal => (a.i, a.j) < (b.i, b.j),
                },
            };
            if better {
                best = k;
            }
        }
        let pair = pairs.swap_remove(best);
        done.insert((pair.i, pair.j));

        // Coprime-lead criterion.
        if leads[pair.i].0.gcd_is_one(&leads[pair.j].0) {
            continue;
        }
        // Chain criterion: some other lead divides the lcm and both
        // side pairs were already handled.
        let mut skip = false;
        for k in 0..basis.len() {
            if k == pair.i || k == pair.j {
                continue;
            }
            if leads[k].0.divides(&pair.lcm) {
                let a = (pair.i.min(k), pair.i.max(k));
                let b = (pair.j.min(k), pair.j.max(k));
                if done.contains(&a) && done.contains(&b) {
                    skip = true;
                    break;
                }
            }
        }
        if skip {
            continue;
        }

        let (gi, gj) = (&basis[pair.i], &basis[pair.j]);
        let (mi, ci) = gi.leading(ord).unwrap();
        let (mj, cj) = gj.leading(ord).unwrap();
        let s = gi
            .mul_monomial(&mi.quotient(&pair.lcm), &cj.clone())
            .sub(&gj.mul_monomial(&mj.quotient(&pair.lcm), &ci.clone()));
        let h = normal_form(&s, &basis, ord);
        if h.is_zero() {
            continue;
        }
        if let Some(cap) = opts.degree_cap {
            if h.degree().unwrap() > cap {
                return Err(CoreError::DegreeOverflow {
                    cap,
                    context: "Groebner basis element".into(),
                });
            }
        }
        basis.push(h);
        let t = basis.len() - 1;
        leads.push(lead(&basis[t]));
        make_pairs(&mut pairs, &leads, t);
    }

    Ok(GroebnerBasis {
        field,
        num_vars,
        ord,
        elements: interreduce(basis, ord),
    })
}

/// Inter-reduces a Groebner basis to its reduced, monic, sorted form.
fn interreduce(mut basis: Vec<Polynomial>, ord: MonomialOrder) -> Vec<Polynomial> {
    // Drop elements whose lead is divisible by another element's lead.
    basis.sort_by(|a, b| {
        ord.cmp(a.leading(ord).unwrap().0, b.leading(ord).unwrap().0)
    });
    let mut kept: Vec<Polynomial> = Vec::new();
    'outer: for g in basis {
        let gm = g.leading(ord).unwrap().0.clone();
        for h in &kept {
            if h.leading(ord).unwrap().0.divides(&gm) {
                continue 'outer;
            }
        }
        kept.push(g);
    }
    // Tail-reduce everything against everything else until stable.
    loop {
        let mut changed = false;
        for i in 0..kept.len() {
            let others: Vec<Polynomial> = kept
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, p)| p.clone())
                .collect();
            if others.is_empty() {
                break;
            }
            let nf = normal_form(&kept[i], &others, ord);
            if nf != kept[i] {
                kept[i] = nf;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    let mut out: Vec<Polynomial> = kept.into_iter().map(|g| g.monic(ord)).collect();
    out.sort_by(|a, b| ord.cmp(a.leading(ord).unwrap().0, b.leading(ord).unwrap().0));
    out
}

/// Check used by the test suites: every S-polynomial of the basis reduces
/// to zero (Buchberger's criterion).
pub fn buchberger_criterion_holds(gb: &GroebnerBasis) -> bool {
    let b = &gb.elements;
    for i in 0..b.len() {
        for j in i + 1..b.len() {
            let (mi, ci) = b[i].leading(gb.ord).unwrap();
            let (mj, cj) = b[j].leading(gb.ord).unwrap();
            let lcm = mi.lcm(mj);
            let s = b[i]
                .mul_monomial(&mi.quotient(&lcm), &cj.clone())
                .sub(&b[j].mul_monomial(&mj.quotient(&lcm), &ci.clone()));
            if !normal_form(&s, b, gb.ord).is_zero() {
                return false;
            }
        }
    }
    true
}

/// Two ideals are equal iff their reduced grevlex bases coincide.
pub fn ideals_equal(a: &[Polynomial], b: &[Polynomial]) -> Result<bool, CoreError> {
    let ga = groebner_basis(a, MonomialOrder::Grevlex, GroebnerOptions::default())?;
    let gb = groebner_basis(b, MonomialOrder::Grevlex, GroebnerOptions::default())?;
    Ok(ga.elements == gb.elements)
}

/// Ideal intersection via the auxiliary-variable trick: eliminate `t`
/// from `t*I + (1-t)*J`.  This is the one computation family that leaves
/// grevlex.
pub fn intersect(a: &[Polynomial], b: &[Polynomial]) -> Result<Vec<Polynomial>, CoreError> {
    let field = a
        .first()
        .or(b.first())
        .map(|p| p.field)
        .ok_or_else(|| CoreError::Invalid("empty generator lists".into()))?;
    let nv = a.first().or(b.first()).unwrap().num_vars;
    let wide = nv + 1;
    let t = Polynomial::var(field, wide, 0);
    let one = Polynomial::constant(field, wide, field.one());
    let one_minus_t = one.sub(&t);
    let mut gens = Vec::new();
    for f in a {
        gens.push(t.mul(&f.shift_vars(1, wide)));
    }
    for g in b {
        gens.push(one_minus_t.mul(&g.shift_vars(1, wide)));
    }
    let gb = groebner_basis(&gens, MonomialOrder::ElimFirst, GroebnerOptions::default())?;
    Ok(gb
        .elements
        .iter()
        .filter(|p| p.leading(MonomialOrder::ElimFirst).unwrap().0 .0[0] == 0)
        .map(|p| p.unshift_vars(1))
        .collect())
}

/// Exact division of `g` by `f` (the remainder must vanish).
pub fn exact_divide(g: &Polynomial, f: &Polynomial) -> Polynomial {
    let mut h = g.clone();
    let mut q = Polynomial::zero(g.field, g.num_vars);
    let (fm, fc) = f.leading(MonomialOrder::Grevlex).expect("divisor is nonzero");
    while let Some((hm, hc)) = h.leading(MonomialOrder::Grevlex) {
        assert!(fm.divides(hm), "division was not exact");
        let m = fm.quotient(hm);
        let c = hc.div(fc).unwrap();
        q.add_term(m.clone(), c.clone());
        h = h.sub(&f.mul_monomial(&m, &c));
    }
    q
}

/// Ideal quotient `I : f` computed as `(I ∩ <f>) / f`.
pub fn colon_poly(i: &[Polynomial], f: &Polynomial) -> Result<Vec<Polynomial>, CoreError> {
    if f.is_zero() {
        return Err(CoreError::Invalid("colon by the zero polynomial".into()));
    }
    let inter = intersect(i, std::slice::from_ref(f))?;
    Ok(inter.iter().map(|g| exact_divide(g, f)).collect())
}

/// Ideal quotient `I : J` as the intersection of the single-polynomial
/// quotients over the generators of `J`.
pub fn colon(i: &[Polynomial], j: &[Polynomial]) -> Result<Vec<Polynomial>, CoreError> {
    let mut acc: Option<Vec<Polynomial>> = None;
    for f in j {
        if f.is_zero() {
            continue;
        }
        let q = colon_poly(i, f)?;
        acc = Some(match acc {
            None => q,
            Some(prev) => intersect(&prev, &q)?,
        });
    }
    acc.ok_or_else(|| CoreError::Invalid("colon by the zero ideal".into()))
}

/// Saturation `I : J^∞` by iterated colon, together with the number of
/// colon rounds needed to stabilize.
pub fn saturate(i: &[Polynomial], j: &[Polynomial]) -> Result<(Vec<Polynomial>, u32), CoreError> {
    let mut cur = groebner_basis(i, MonomialOrder::Grevlex, GroebnerOptions::default())?;
    let mut steps = 0u32;
    loop {
        let next_gens = colon(&cur.elements, j)?;
        let next = groebner_basis(&next_gens, MonomialOrder::Grevlex, GroebnerOptions::default())?;
        if next.elements == cur.elements {
            return Ok((cur.elements, steps));
        }
        cur = next;
        steps += 1;
    }
}

/// Minimal generators of the monomial ideal spanned by `gens`.
pub fn minimalize_monomials(gens: &[Monomial]) -> Vec<Monomial> {
    let mut sorted: Vec<Monomial> = gens.to_vec();
    sorted.sort();
    let mut out: Vec<Monomial> = Vec::new();
    'outer: for m in sorted {
        for k in &out {
            if k.divides(&m) {
                continue 'outer;
            }
        }
        out.push(m);
    }
    out
}

/// Numerator of the Hilbert series of `R/I` for a monomial ideal `I`,
/// as coefficients of `z^0, z^1, ...`; the series is `N(z)/(1-z)^v`.
///
/// Classical pivot recursion: for a variable `x` occurring in a mixed
/// generator, `N(I) = N(I + <x>) + z * N(I : x)`.
pub fn hilbert_numerator(gens: &[Monomial], num_vars: usize) -> Vec<i128> {
    let gens = minimalize_monomials(gens);
    if gens.is_empty() {
        return vec![1];
    }
    if gens.iter().any(|m| m.is_one()) {
        return vec![0];
    }
    // Base case: pairwise-coprime pure variable powers.
    let pure = gens.iter().all(|m| m.0.iter().filter(|&&e| e > 0).count() == 1);
    if pure {
        let mut num = vec![1i128];
        for m in &gens {
            let d = m.degree() as usize;
            // num *= (1 - z^d)
            let mut next = vec![0i128; num.len() + d];
            for (i, &c) in num.iter().enumerate() {
                next[i] += c;
                next[i + d] -= c;
            }
            num = next;
        }
        return num;
    }
    // Pivot: the most frequent variable among mixed generators.
    let mut freq = vec![0usize; num_vars];
    for m in &gens {
        if m.0.iter().filter(|&&e| e > 0).count() > 1 {
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    freq[i] += 1;
                }
            }
        }
    }
    let x = freq
        .iter()
        .enumerate()
        .max_by_key(|(i, &c)| (c, num_vars - i))
        .unwrap()
        .0;

    // I + <x>
    let mut plus: Vec<Monomial> = gens.iter().filter(|m| m.0[x] == 0).cloned().collect();
    plus.push(Monomial::var(num_vars, x));
    // I : x
    let quot: Vec<Monomial> = gens
        .iter()
        .map(|m| {
            let mut e = m.clone();
            if e.0[x] > 0 {
                e.0[x] -= 1;
            }
            e
        })
        .collect();

    let a = hilbert_numerator(&plus, num_vars);
    let b = hilbert_numerator(&quot, num_vars);
    let mut out = vec![0i128; a.len().max(b.len() + 1)];
    for (i, &c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, &c) in b.iter().enumerate() {
        out[i + 1] += c;
    }
    while out.len() > 1 && *out.last().unwrap() == 0 {
        out.pop();
    }
    out
}

/// Hilbert data of a graded quotient `R/I`.
#[derive(Clone, Debug, PartialEq)]
pub struct HilbertFn {
    /// `dim (R/I)_t` for `t = 0 ..= max_degree`.
    pub values: Vec<u64>,
    /// Coefficients (constant first) of the Hilbert polynomial, exact.
    pub hp_coeffs: Vec<BigRational>,
    /// The function agrees with the polynomial from this degree on.
    pub stable_from: i64,
    /// Krull dimension of the affine cone (0 for the zero ring is `0`
    /// only when the ideal is the unit ideal; see `proj_dim`).
    pub affine_dim: usize,
    /// Dimension of the projective scheme (`-1` when empty).
    pub proj_dim: i64,
    /// Degree of the projective scheme (length when zero-dimensional);
    /// for the empty scheme this is 0.
    pub degree: u64,
}

/// Evaluates the Hilbert function of `R/I` from the numerator of its
/// Hilbert series (all exact integer arithmetic).
pub fn hilbert_from_numerator(num: &[i128], num_vars: usize, max_degree: u32) -> HilbertFn {
    // Reduce N(z)/(1-z)^v by the common (1-z) factors.
    let mut reduced = num.to_vec();
    let mut pole = num_vars as i64;
    let is_zero_poly = reduced.iter().all(|&c| c == 0);
    if is_zero_poly {
        return HilbertFn {
            values: vec![0; max_degree as usize + 1],
            hp_coeffs: vec![],
            stable_from: 0,
            affine_dim: 0,
            proj_dim: -1,
            degree: 0,
        };
    }
    loop {
        let s: i128 = reduced.iter().sum();
        if s != 0 || pole == 0 {
            break;
        }
        // Divide by (1-z): prefix sums.
        let mut q = Vec::with_capacity(reduced.len().saturating_sub(1));
        let mut acc = 0i128;
        for i in 0..reduced.len() - 1 {
            acc += reduced[i];
            q.push(acc);
        }
        reduced = if q.is_empty() { vec![0] } else { q };
        pole -= 1;
    }
    let affine_dim = pole.max(0) as usize;
    let degree_scheme: i128 = reduced.iter().sum();
    debug_assert!(degree_scheme > 0);

    // Hilbert function values by convolution with C(t - s + v - 1, v - 1).
    let v = num_vars as i64;
    let binom = |n: i64, k: i64| -> i128 {
        if n < 0 || k < 0 || n < k {
            return 0;
        }
        let mut r: i128 = 1;
        for i in 0..k {
            r = r * (n - i) as i128 / (i + 1) as i128;
        }
        r
    };
    let mut values = Vec::with_capacity(max_degree as usize + 1);
    for t in 0..=max_degree as i64 {
        let mut acc = 0i128;
        for (s, &c) in num.iter().enumerate() {
            acc += c * binom(t - s as i64 + v - 1, v - 1);
        }
        debug_assert!(acc >= 0);
        values.push(acc as u64);
    }

    // Hilbert polynomial from the reduced numerator: degree affine_dim-1.
    let d = affine_dim as i64;
    let mut hp = vec![BigRational::zero(); affine_dim.max(1)];
    if d > 0 {
        // HP(t) = sum_s reduced[s] * C(t - s + d - 1, d - 1), expanded in t.
        for (s, &c) in reduced.iter().enumerate() {
            if c == 0 {
                continue;
            }
            // Polynomial prod_{i=1..d-1} (t - s + i) / (d-1)!
            let mut term = vec![BigRational::one()]; // coefficients in t
            for i in 1..d {
                let shift = BigRational::from_integer((i - s as i64).into());
                // term *= (t + shift)
                let mut next = vec![BigRational::zero(); term.len() + 1];
                for (k, coef) in term.iter().enumerate() {
                    next[k + 1] += coef;
                    next[k] += coef * &shift;
                }
                term = next;
            }
            let mut fact = BigRational::one();
            for i in 1..d {
                fact *= BigRational::from_integer(i.into());
            }
            let scale = BigRational::from_integer(c.to_string().parse().unwrap()) / fact;
            for (k, coef) in term.iter().enumerate() {
                hp[k] += coef * &scale;
            }
        }
    }
    while hp.len() > 1 && hp.last().unwrap().is_zero() {
        hp.pop();
    }
    if d == 0 {
        hp = vec![];
    }

    let stable_from = (num.len() as i64 - v + 1).max(0);
    HilbertFn {
        values,
        hp_coeffs: hp,
        stable_from,
        affine_dim,
        proj_dim: affine_dim as i64 - 1,
        degree: if affine_dim == 0 {
            // Projective scheme empty; report 0.
            0
        } else {
            degree_scheme as u64
        },
    }
}

impl HilbertFn {
    /// Evaluates the Hilbert polynomial at `t`.
    pub fn hp_at(&self, t: i64) -> BigRational {
        let mut acc = BigRational::zero();
        let mut pow = BigRational::one();
        let tt = BigRational::from_integer(t.into());
        for c in &self.hp_coeffs {
            acc += c * &pow;
            pow *= &tt;
        }
        acc
    }
}

/// Hilbert function of `R/<gens>` up to `max_degree`, via the initial
/// ideal of a grevlex Groebner basis.
pub fn hilbert_function(gens: &[Polynomial], max_degree: u32) -> Result<HilbertFn, CoreError> {
    let gb = groebner_basis(gens, MonomialOrder::Grevlex, GroebnerOptions::default())?;
    let nv = gens[0].num_vars;
    let lt = gb.leading_monomials();
    let num = hilbert_numerator(&lt, nv);
    Ok(hilbert_from_numerator(&num, nv, max_degree))
}

/// Projective dimension and degree of `V(gens)`: `(-1, 0)` for the empty
/// scheme (including the unit ideal).
pub fn dim_deg(gens: &[Polynomial]) -> Result<(i64, u64), CoreError> {
    let h = hilbert_function(gens, 0)?;
    Ok((h.proj_dim, h.degree))
}

/// Independent cross-check for tests: `dim (R/I)_t` by dense linear
/// algebra (corank of the multiplication matrix of the generators).
pub fn quotient_dim_dense(gens: &[Polynomial], t: u32) -> usize {
    let field = gens[0].field;
    let nv = gens[0].num_vars;
    let target: Vec<Monomial> = graded_basis(nv, t);
    let index: BTreeMap<&Monomial, usize> =
        target.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut cols: Vec<Vec<crate::field::K>> = Vec::new();
    for g in gens {
        let Some(d) = g.degree() else { continue };
        if d > t || !g.is_homogeneous() {
            // Dense check is only used on homogeneous inputs.
            assert!(g.is_homogeneous(), "dense Hilbert check needs homogeneous input");
            continue;
        }
        for m in graded_basis(nv, t - d) {
            let prod = g.mul_monomial(&m, &field.one());
            let mut col = vec![field.zero(); target.len()];
            for (mm, c) in prod.terms() {
                col[index[mm]] = c.clone();
            }
            cols.push(col);
        }
    }
    if cols.is_empty() {
        return target.len();
    }
    let mat = crate::linalg::ExactMatrix::from_rows(field, cols).transpose();
    target.len() - mat.rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::DEFAULT_PRIME;
    use crate::poly::parse_polynomial;

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    fn gens(src: &[&str], nv: usize, f: FieldSpec) -> Vec<Polynomial> {
        src.iter().map(|s| parse_polynomial(s, nv, f).unwrap()).collect()
    }

    #[test]
    fn katsura_like_basis_is_groebner() {
        let g = gens(&["x0^2 + x1^2 - x2^2", "x0*x1 - x2^2", "x0 + x1 + x2"], 3, q());
        let gb = groebner_basis(&g, MonomialOrder::Grevlex, GroebnerOptions::default()).unwrap();
        assert!(buchberger_criterion_holds(&gb));
        for f in &g {
            assert!(gb.contains(f));
        }
    }

    #[test]
    fn reduced_basis_is_canonical_under_generator_shuffle() {
        let g1 = gens(&["x0^2 - x1*x2", "x1^2 - x0*x2", "x2^2 - x0*x1"], 3, q());
        let mut g2 = g1.clone();
        g2.reverse();
        g2[0] = g2[0].scale(&q().from_i64(7)).add(&g2[1]);
        let a = groebner_basis(&g1, MonomialOrder::Grevlex, GroebnerOptions::default()).unwrap();
        let b = groebner_basis(&g2, MonomialOrder::Grevlex, GroebnerOptions::default()).unwrap();
        assert_eq!(a.elements, b.elements);
    }

    #[test]
    fn normal_form_examples() {
        let g = gens(&["x0^2 - x1", "x1^2 - x0"], 2, q());
        let gb = groebner_basis(&g, MonomialOrder::Grevlex, GroebnerOptions::default()).unwrap();
        let f = parse_polynomial("x0^4", 2, q()).unwrap();
        // x0^4 = (x0^2)^2 -> x1^2 -> x0.
        assert_eq!(normal_form(&f, &gb.elements, MonomialOrder::Grevlex).to_text(), "x0");
        assert!(gb.contains(&parse_polynomial("x0^2 - x1", 2, q()).unwrap()));
        assert!(!gb.contains(&parse_polynomial("x0 - x1", 2, q()).unwrap()));
    }

    #[test]
    fn intersection_and_colon() {
        // <x0> ∩ <x1> = <x0*x1>
        let a = gens(&["x0"], 2, q());
        let b = gens(&["x1"], 2, q());
        let i = intersect(&a, &b).unwrap();
        assert!(ideals_equal(&i, &gens(&["x0*x1"], 2, q())).unwrap());
        // <x0*x1, x0^2> : x0 = <x0, x1>
        let c = gens(&["x0*x1", "x0^2"], 2, q());
        let f = parse_polynomial("x0", 2, q()).unwrap();
        let qt = colon_poly(&c, &f).unwrap();
        assert!(ideals_equal(&qt, &gens(&["x0", "x1"], 2, q())).unwrap());
    }

    #[test]
    fn saturation_of_primary_component() {
        // I = <x0^2*x1, x0^2*x2> = <x0^2> ∩ <x1,x2>-part; saturating by
        // <x1, x2> leaves <x0^2>.
        let i = gens(&["x0^2*x1", "x0^2*x2"], 3, q());
        let j = gens(&["x1", "x2"], 3, q());
        let (sat, steps) = saturate(&i, &j).unwrap();
        assert!(ideals_equal(&sat, &gens(&["x0^2"], 3, q())).unwrap());
        assert!(steps >= 1);
    }

    #[test]
    fn hilbert_series_of_complete_intersection() {
        // Two generic quadrics in 3 variables: numerator (1 - z^2)^2,
        // projective dim 0, degree 4.
        let g = gens(&["x0^2 + x1*x2", "x1^2 + x0*x2"], 3, FieldSpec::Prime(DEFAULT_PRIME));
        let h = hilbert_function(&g, 6).unwrap();
        assert_eq!(h.proj_dim, 0);
        assert_eq!(h.degree, 4);
        // Dense linear algebra agrees degree by degree.
        for t in 0..=6u32 {
            assert_eq!(h.values[t as usize] as usize, quotient_dim_dense(&g, t));
        }
    }

    #[test]
    fn dim_deg_examples() {
        // V(x0, x1) in P^2 is a point.
        assert_eq!(dim_deg(&gens(&["x0", "x1"], 3, q())).unwrap(), (0, 1));
        // Unit ideal: empty scheme.
        assert_eq!(dim_deg(&gens(&["1"], 3, q())).unwrap(), (-1, 0));
        // A quadric surface in P^3.
        assert_eq!(dim_deg(&gens(&["x0*x1 - x2*x3"], 4, q())).unwrap(), (2, 2));
        // Twisted cubic: dim 1, degree 3.
        let tc = gens(&["x0*x2 - x1^2", "x1*x3 - x2^2", "x0*x3 - x1*x2"], 4, q());
        assert_eq!(dim_deg(&tc).unwrap(), (1, 3));
    }

    #[test]
    fn degree_cap_aborts() {
        let g = gens(&["x0^3 - x1^3", "x0^2*x1 + x1^2*x2 + x2^3"], 3, q());
        let r = groebner_basis(&g, MonomialOrder::Grevlex, GroebnerOptions { degree_cap: Some(3) });
        match r {
            Err(CoreError::DegreeOverflow { cap: 3, .. }) => {}
            other => panic!("expected degree overflow, got {other:?}"),
        }
    }
}

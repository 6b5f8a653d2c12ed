//! Graded modules over the polynomial ring: module Groebner bases under a
//! position-over-term order, syzygies via the extended-matrix (cofactor
//! tracking) method, minimal generating sets by graded linear algebra,
//! and minimal free resolutions with Betti tables.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::CoreError;
use crate::field::{FieldSpec, K};
use crate::groebner::{groebner_basis, GroebnerOptions};
use crate::linalg::ExactMatrix;
use crate::poly::{graded_basis, Monomial, MonomialOrder, Polynomial};

/// A module monomial: a position in a free module plus a ring monomial.
/// Ordered position-over-term with *smaller positions dominating*, so an
/// element whose leading term sits at position >= m has all its terms
/// there — which is exactly what the syzygy extraction needs.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MTerm {
    pub pos: usize,
    pub mono: Monomial,
}

impl Ord for MTerm {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        other
            .pos
            .cmp(&self.pos)
            .then_with(|| self.mono.cmp(&other.mono))
    }
}

impl PartialOrd for MTerm {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// An element of a free module `R^rank`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ModPoly {
    pub field: FieldSpec,
    pub num_vars: usize,
    pub rank: usize,
    terms: BTreeMap<MTerm, K>,
}

impl ModPoly {
    pub fn zero(field: FieldSpec, num_vars: usize, rank: usize) -> Self {
        ModPoly {
            field,
            num_vars,
            rank,
            terms: BTreeMap::new(),
        }
    }

    /// Wraps a polynomial as the single component `pos` of `R^rank`.
    pub fn from_poly(p: &Polynomial, pos: usize, rank: usize) -> Self {
        let mut out = Self::zero(p.field, p.num_vars, rank);
        for (m, c) in p.terms() {
            out.terms.insert(
                MTerm {
                    pos,
                    mono: m.clone(),
                },
                c.clone(),
            );
        }
        out
    }

    pub fn component(&self, pos: usize) -> Polynomial {
        let mut p = Polynomial::zero(self.field, self.num_vars);
        for (t, c) in &self.terms {
            if t.pos == pos {
                p.add_term(t.mono.clone(), c.clone());
            }
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, t: MTerm, c: K) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(t) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get().add(&c);
                if s.is_zero() {
                    e.remove();
                } else {
                    e.insert(s);
                }
            }
        }
    }

    pub fn add(&self, other: &ModPoly) -> ModPoly {
        let mut out = self.clone();
        for (t, c) in &other.terms {
            out.add_term(t.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &ModPoly) -> ModPoly {
        let mut out = self.clone();
        for (t, c) in &other.terms {
            out.add_term(t.clone(), c.neg());
        }
        out
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &K) -> ModPoly {
        let mut out = ModPoly::zero(self.field, self.num_vars, self.rank);
        if c.is_zero() {
            return out;
        }
        for (t, cc) in &self.terms {
            out.terms.insert(
                MTerm {
                    pos: t.pos,
                    mono: t.mono.mul(m),
                },
                cc.mul(c),
            );
        }
        out
    }

    pub fn scale(&self, c: &K) -> ModPoly {
        let mut out = self.clone();
        if c.is_zero() {
            return ModPoly::zero(self.field, self.num_vars, self.rank);
        }
        for v in out.terms.values_mut() {
            *v = v.mul(c);
        }
        out
    }

    pub fn leading(&self) -> Option<(&MTerm, &K)> {
        self.terms.iter().next_back()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&MTerm, &K)> {
        self.terms.iter()
    }

    /// Degree of a homogeneous element when component `pos` carries the
    /// extra shift `shifts[pos]` (generator degrees of the ambient free
    /// module).  Panics on inhomogeneous input in debug builds.
    pub fn degree(&self, shifts: &[u32]) -> Option<u32> {
        let mut it = self
            .terms
            .keys()
            .map(|t| t.mono.degree() + shifts[t.pos]);
        let d = it.next()?;
        debug_assert!(
            self.terms
                .keys()
                .all(|t| t.mono.degree() + shifts[t.pos] == d),
            "inhomogeneous module element"
        );
        Some(d)
    }

    /// Embeds `R^rank` into `R^{rank + extra}` with positions shifted up.
    fn shift_positions(&self, shift: usize, new_rank: usize) -> ModPoly {
        let mut out = ModPoly::zero(self.field, self.num_vars, new_rank);
        for (t, c) in &self.terms {
            out.terms.insert(
                MTerm {
                    pos: t.pos + shift,
                    mono: t.mono.clone(),
                },
                c.clone(),
            );
        }
        out
    }

    fn unshift_positions(&self, shift: usize) -> ModPoly {
        let mut out = ModPoly::zero(self.field, self.num_vars, self.rank - shift);
        for (t, c) in &self.terms {
            assert!(t.pos >= shift);
            out.terms.insert(
                MTerm {
                    pos: t.pos - shift,
                    mono: t.mono.clone(),
                },
                c.clone(),
            );
        }
        out
    }
}

/// Full normal form in the module: reduce any term whose position matches
/// a reducer's leading position and whose monomial is divisible.
pub fn module_normal_form(f: &ModPoly, basis: &[ModPoly]) -> ModPoly {
    let mut h = f.clone();
    let mut rem = ModPoly::zero(f.field, f.num_vars, f.rank);
    while let Some((lt, lc)) = h.leading() {
        let lt = lt.clone();
        let lc = lc.clone();
        let mut reduced = false;
        for g in basis {
            let (gt, gc) = g.leading().unwrap();
            if gt.pos == lt.pos && gt.mono.divides(&lt.mono) {
                let m = gt.mono.quotient(&lt.mono);
                let c = lc.div(gc).unwrap();
                h = h.sub(&g.mul_monomial(&m, &c));
                reduced = true;
                break;
            }
        }
        if !reduced {
            rem.add_term(lt.clone(), lc.clone());
            h.add_term(lt, lc.neg());
        }
    }
    rem
}

/// Buchberger for submodules of a free module under the position-over-term
/// order.  Pairs form only between elements with leading terms at the same
/// position; the chain criterion applies, the coprime criterion does not
/// carry over to modules and is not used.
pub fn module_groebner(gens: &[ModPoly]) -> Vec<ModPoly> {
    let mut basis: Vec<ModPoly> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    if basis.is_empty() {
        return basis;
    }

    #[derive(Clone)]
    struct Pair {
        i: usize,
        j: usize,
        lcm: Monomial,
        pos: usize,
        sugar: u32,
    }
    let mut pairs: Vec<Pair> = Vec::new();
    let add_pairs = |pairs: &mut Vec<Pair>, basis: &[ModPoly], t: usize| {
        let (lt, _) = basis[t].leading().unwrap();
        for i in 0..t {
            let (li, _) = basis[i].leading().unwrap();
            if li.pos != lt.pos {
                continue;
            }
            let lcm = li.mono.lcm(&lt.mono);
            pairs.push(Pair {
                i,
                j: t,
                lcm: lcm.clone(),
                pos: lt.pos,
                sugar: lcm.degree(),
            });
        }
    };
    for t in 0..basis.len() {
        add_pairs(&mut pairs, &basis, t);
    }
    let mut done: std::collections::HashSet<(usize, usize)> = Default::default();

    while !pairs.is_empty() {
        let mut best = 0;
        for k in 1..pairs.len() {
            let a = &pairs[k];
            let b = &pairs[best];
            let better = match a.sugar.cmp(&b.sugar) {
                std::cmp::Ordering::Less => true,
                std::cmp::Ordering::Greater => false,
                std::cmp::Ordering::Equal => match a.lcm.cmp(&b.lcm) {
                    std::cmp::Ordering::Less => true,
                    std::cmp::Ordering::Greater => false,
                    std::cmp::Ordering::Equal => (a.pos, a.i, a.j) < (b.pos, b.i, b.j),
                },
            };
            if better {
                best = k;
            }
        }
        let pair = pairs.swap_remove(best);
        done.insert((pair.i, pair.j));

        // Chain criterion within the shared position.
        let mut skip = false;
        for k in 0..basis.len() {
            if k == pair.i || k == pair.j {
                continue;
            }
            let (lk, _) = basis[k].leading().unwrap();
            if lk.pos == pair.pos && lk.mono.divides(&pair.lcm) {
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
        let (ti, ci) = gi.leading().unwrap();
        let (tj, cj) = gj.leading().unwrap();
        let s = gi
            .mul_monomial(&ti.mono.quotient(&pair.lcm), &cj.clone())
            .sub(&gj.mul_monomial(&tj.mono.quotient(&pair.lcm), &ci.clone()));
        let h = module_normal_form(&s, &basis);
        if h.is_zero() {
            continue;
        }
        basis.push(h);
        let t = basis.len() - 1;
        add_pairs(&mut pairs, &basis, t);
    }
    basis
}

/// Syzygies of module elements `gens ⊂ R^m` (extended-matrix method):
/// append tracking components, compute a module Groebner basis in
/// `R^{m+k}` with the original components dominating, and read off the
/// elements supported entirely on the tracking block.  The result
/// generates the syzygy module but is not yet a minimal generating set.
pub fn syzygies_raw(gens: &[ModPoly]) -> Vec<ModPoly> {
    assert!(!gens.is_empty());
    let m = gens[0].rank;
    let k = gens.len();
    let field = gens[0].field;
    let nv = gens[0].num_vars;
    let extended: Vec<ModPoly> = gens
        .iter()
        .enumerate()
        .map(|(i, g)| {
            let mut e = g.shift_positions(0, m + k);
            e.add_term(
                MTerm {
                    pos: m + i,
                    mono: Monomial::one(nv),
                },
                field.one(),
            );
            e
        })
        .collect();
    let gb = module_groebner(&extended);
    gb.into_iter()
        .filter(|g| g.leading().map(|(t, _)| t.pos >= m).unwrap_or(false))
        .map(|g| g.unshift_positions(m))
        .collect()
}

/// Incremental echelon structure for extracting independent vectors.
struct Echelon {
    rows: Vec<Vec<K>>,
    pivots: Vec<usize>,
}

impl Echelon {
    fn new() -> Self {
        Echelon {
            rows: vec![],
            pivots: vec![],
        }
    }

    /// Reduces `v` against the rows; if a nonzero residue remains it is
    /// inserted and `true` returned.
    fn insert(&mut self, mut v: Vec<K>) -> bool {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !v[p].is_zero() {
                let f = v[p].clone();
                for (a, b) in v.iter_mut().zip(row) {
                    let t = b.mul(&f);
                    *a = a.sub(&t);
                }
            }
        }
        if let Some(p) = v.iter().position(|c| !c.is_zero()) {
            let inv = v[p].inv().unwrap();
            for a in v.iter_mut() {
                *a = a.mul(&inv);
            }
            self.rows.push(v);
            self.pivots.push(p);
            true
        } else {
            false
        }
    }
}

/// Extracts a minimal generating set from homogeneous generators of a
/// graded submodule of `R^m` (with generator degrees `shifts` on the
/// ambient free module).  Degree by degree, a generator is kept iff it is
/// independent modulo `m * (submodule)` and the generators already kept —
/// the graded Nakayama criterion, implemented by linear algebra only.
pub fn minimal_generators(gens: &[ModPoly], shifts: &[u32]) -> Vec<ModPoly> {
    let live: Vec<&ModPoly> = gens.iter().filter(|g| !g.is_zero()).collect();
    if live.is_empty() {
        return vec![];
    }
    let field = live[0].field;
    let nv = live[0].num_vars;
    let mut degrees: Vec<u32> = live
        .iter()
        .map(|g| g.degree(shifts).unwrap())
        .collect();
    let mut order: Vec<usize> = (0..live.len()).collect();
    order.sort_by_key(|&i| degrees[i]);
    degrees.sort();
    let distinct: Vec<u32> = {
        let mut d = degrees.clone();
        d.dedup();
        d
    };

    // Coordinates of the degree-d slice of R^m (twisted by shifts).
    let coords = |d: u32| -> Vec<MTerm> {
        let mut out = Vec::new();
        for (pos, &s) in shifts.iter().enumerate() {
            if d >= s {
                for m in graded_basis(nv, d - s) {
                    out.push(MTerm { pos, mono: m });
                }
            }
        }
        out
    };
    let to_vec = |g: &ModPoly, index: &BTreeMap<MTerm, usize>| -> Vec<K> {
        let mut v = vec![field.zero(); index.len()];
        for (t, c) in g.terms() {
            v[index[t]] = c.clone();
        }
        v
    };

    let mut kept: Vec<ModPoly> = Vec::new();
    for &d in &distinct {
        let basis = coords(d);
        let index: BTreeMap<MTerm, usize> =
            basis.into_iter().enumerate().map(|(i, t)| (t, i)).collect();
        let mut ech = Echelon::new();
        // Span of m * (submodule): all proper monomial multiples of every
        // generator landing in degree d.
        for (gi, g) in live.iter().enumerate() {
            let gd = g.degree(shifts).unwrap();
            let _ = gi;
            if gd < d {
                for m in graded_basis(nv, d - gd) {
                    let v = to_vec(&g.mul_monomial(&m, &field.one()), &index);
                    ech.insert(v);
                }
            }
        }
        // Candidates of degree d, in deterministic input order.
        for &i in &order {
            let g = live[i];
            if g.degree(shifts).unwrap() == d && ech.insert(to_vec(g, &index)) {
                kept.push(g.clone());
            }
        }
    }
    kept
}

/// A graded map between free modules, entries stored row-major
/// (`entries[row][col]`), with twists per generator (negative of the
/// generator degree).
#[derive(Clone, PartialEq, Debug)]
pub struct GradedMap {
    pub field: FieldSpec,
    pub num_vars: usize,
    pub source_twists: Vec<i64>,
    pub target_twists: Vec<i64>,
    pub entries: Vec<Vec<Polynomial>>,
}

impl GradedMap {
    /// Builds the map whose columns are `cols ⊂ R^m`, where the target
    /// generators have degrees `target_shifts`.
    pub fn from_columns(cols: &[ModPoly], target_shifts: &[u32]) -> GradedMap {
        assert!(!cols.is_empty());
        let field = cols[0].field;
        let nv = cols[0].num_vars;
        let m = cols[0].rank;
        let source_twists: Vec<i64> = cols
            .iter()
            .map(|c| -(c.degree(target_shifts).unwrap() as i64))
            .collect();
        let mut entries = vec![vec![Polynomial::zero(field, nv); cols.len()]; m];
        for (j, c) in cols.iter().enumerate() {
            for pos in 0..m {
                entries[pos][j] = c.component(pos);
            }
        }
        GradedMap {
            field,
            num_vars: nv,
            source_twists,
            target_twists: target_shifts.iter().map(|&s| -(s as i64)).collect(),
            entries,
        }
    }

    pub fn source_rank(&self) -> usize {
        self.source_twists.len()
    }

    pub fn target_rank(&self) -> usize {
        self.target_twists.len()
    }

    pub fn column(&self, j: usize) -> ModPoly {
        let mut out = ModPoly::zero(self.field, self.num_vars, self.target_rank());
        for (pos, row) in self.entries.iter().enumerate() {
            for (m, c) in row[j].terms() {
                out.add_term(
                    MTerm {
                        pos,
                        mono: m.clone(),
                    },
                    c.clone(),
                );
            }
        }
        out
    }

    /// Matrix product `self ∘ other` (other's target is self's source).
    pub fn compose(&self, other: &GradedMap) -> GradedMap {
        assert_eq!(self.source_rank(), other.target_rank());
        let mut entries =
            vec![
                vec![Polynomial::zero(self.field, self.num_vars); other.source_rank()];
                self.target_rank()
            ];
        for (i, row) in entries.iter_mut().enumerate() {
            for (j, e) in row.iter_mut().enumerate() {
                for k in 0..self.source_rank() {
                    *e = e.add(&self.entries[i][k].mul(&other.entries[k][j]));
                }
            }
        }
        GradedMap {
            field: self.field,
            num_vars: self.num_vars,
            source_twists: other.source_twists.clone(),
            target_twists: self.target_twists.clone(),
            entries,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|r| r.iter().all(|p| p.is_zero()))
    }

    /// Minimality: no entry is a nonzero constant.
    pub fn is_minimal(&self) -> bool {
        self.entries
            .iter()
            .all(|r| r.iter().all(|p| p.is_zero() || p.degree() != Some(0)))
    }

    /// Evaluates every entry at a point, producing a scalar matrix.
    pub fn evaluate(&self, point: &[K]) -> ExactMatrix {
        let mut m = ExactMatrix::zero(self.field, self.target_rank(), self.source_rank());
        for (i, row) in self.entries.iter().enumerate() {
            for (j, p) in row.iter().enumerate() {
                m.set(i, j, p.evaluate(point));
            }
        }
        m
    }
}

/// One stratum of a Betti table: `rank` generators at homological `index`
/// and internal `twist`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct BettiEntry {
    pub index: usize,
    pub twist: i64,
    pub rank: usize,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct BettiTable {
    pub entries: Vec<BettiEntry>,
}

impl BettiTable {
    fn from_twists(twists: &[Vec<i64>]) -> BettiTable {
        let mut entries = Vec::new();
        for (index, tw) in twists.iter().enumerate() {
            let mut counts: BTreeMap<i64, usize> = BTreeMap::new();
            for &t in tw {
                *counts.entry(t).or_default() += 1;
            }
            for (twist, rank) in counts.into_iter().rev() {
                entries.push(BettiEntry { index, twist, rank });
            }
        }
        BettiTable { entries }
    }

    pub fn ranks_at(&self, index: usize) -> usize {
        self.entries
            .iter()
            .filter(|e| e.index == index)
            .map(|e| e.rank)
            .sum()
    }
}

/// A minimal free resolution: `maps[k]` is the differential
/// `F_{k+1} -> F_k`, and `twists[k]` lists the twists of `F_k`.
#[derive(Clone, Debug)]
pub struct FreeResolution {
    pub twists: Vec<Vec<i64>>,
    pub maps: Vec<GradedMap>,
}

impl FreeResolution {
    pub fn betti(&self) -> BettiTable {
        BettiTable::from_twists(&self.twists)
    }

    /// Length: index of the last nonzero free module.
    pub fn length(&self) -> usize {
        self.twists.len() - 1
    }

    /// Consecutive differentials compose to zero.
    pub fn is_complex(&self) -> bool {
        self.maps
            .windows(2)
            .all(|w| w[0].compose(&w[1]).is_zero())
    }

    pub fn is_minimal(&self) -> bool {
        self.maps.iter().all(|m| m.is_minimal())
    }
}

/// Minimal free resolution of the submodule of `R^m` generated by `gens`
/// (ambient generator degrees `shifts`), by iterated syzygies.  Each
/// syzygy generating set is cut down to a minimal one before the next
/// step, so every differential is minimal by construction.
///
/// Returns the chain `F_1 -> F_0 = R^m` where `maps[0]` has the minimal
/// generators of the submodule as columns.
pub fn resolve_module(
    gens: &[ModPoly],
    shifts: &[u32],
    max_steps: usize,
) -> Result<FreeResolution, CoreError> {
    let min = minimal_generators(gens, shifts);
    if min.is_empty() {
        return Err(CoreError::Invalid("resolving the zero module".into()));
    }
    let mut twists: Vec<Vec<i64>> = vec![shifts.iter().map(|&s| -(s as i64)).collect()];
    let mut maps: Vec<GradedMap> = Vec::new();
    let mut cur = min;
    let mut cur_shifts: Vec<u32> = shifts.to_vec();
    for _ in 0..max_steps {
        let map = GradedMap::from_columns(&cur, &cur_shifts);
        let next_shifts: Vec<u32> = map
            .source_twists
            .iter()
            .map(|&t| (-t) as u32)
            .collect();
        twists.push(map.source_twists.clone());
        maps.push(map);
        let raw = syzygies_raw(&cur);
        let next = minimal_generators(&raw, &next_shifts);
        if next.is_empty() {
            break;
        }
        cur = next;
        cur_shifts = next_shifts;
    }
    Ok(FreeResolution { twists, maps })
}

/// Minimal syzygies of polynomial generators: the graded map
/// `F_1 -> ⊕ R(-deg g_i)` whose columns generate the kernel of
/// `(a_i) ↦ Σ a_i g_i` minimally (no unit entries).
pub fn syzygies(gens: &[Polynomial]) -> Result<GradedMap, CoreError> {
    if gens.is_empty() || gens.iter().any(|g| g.is_zero()) {
        return Err(CoreError::Invalid(
            "syzygies need nonzero generators".into(),
        ));
    }
    if gens.iter().any(|g| !g.is_homogeneous()) {
        return Err(CoreError::Invalid(
            "syzygies need homogeneous generators".into(),
        ));
    }
    let shifts: Vec<u32> = gens.iter().map(|g| g.degree().unwrap()).collect();
    let wrapped: Vec<ModPoly> = gens
        .iter()
        .map(|g| ModPoly::from_poly(g, 0, 1))
        .collect();
    let raw = syzygies_raw(&wrapped);
    let min = minimal_generators(&raw, &shifts);
    if min.is_empty() {
        // No syzygies: an empty graded map with the right target.
        return Ok(GradedMap {
            field: gens[0].field,
            num_vars: gens[0].num_vars,
            source_twists: vec![],
            target_twists: shifts.iter().map(|&s| -(s as i64)).collect(),
            entries: vec![vec![]; gens.len()],
        });
    }
    Ok(GradedMap::from_columns(&min, &shifts))
}

/// Minimal free resolution of `R/<gens>` for homogeneous generators of a
/// proper ideal: `F_0 = R` at twist 0, `F_1` the minimal generators, and
/// so on, stopping after `max_steps` differentials or when the kernel
/// vanishes.
pub fn minimal_free_resolution(
    gens: &[Polynomial],
    max_steps: usize,
) -> Result<FreeResolution, CoreError> {
    if gens.is_empty() {
        return Err(CoreError::Invalid("empty generator list".into()));
    }
    if gens.iter().any(|g| !g.is_homogeneous()) {
        return Err(CoreError::Invalid(
            "resolution needs homogeneous generators".into(),
        ));
    }
    if gens.iter().any(|g| g.degree() == Some(0)) {
        return Err(CoreError::Invalid(
            "resolution of the unit ideal is not supported".into(),
        ));
    }
    let wrapped: Vec<ModPoly> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| ModPoly::from_poly(g, 0, 1))
        .collect();
    if wrapped.is_empty() {
        return Err(CoreError::Invalid("all generators are zero".into()));
    }
    resolve_module(&wrapped, &[0], max_steps)
}

/// Sanity check used by tests: the Euler characteristic of the resolution
/// reproduces the Hilbert function of the quotient in every degree up to
/// `max_degree`.
pub fn euler_characteristic_matches(
    res: &FreeResolution,
    gens: &[Polynomial],
    max_degree: u32,
) -> Result<bool, CoreError> {
    let nv = gens[0].num_vars;
    let hf = crate::groebner::hilbert_function(gens, max_degree)?;
    let dim_r = |d: i64| -> i64 {
        if d < 0 {
            0
        } else {
            let mut r: i64 = 1;
            for i in 0..nv as i64 - 1 {
                r = r * (d + i + 1) / (i + 1);
            }
            r
        }
    };
    for t in 0..=max_degree as i64 {
        let mut chi: i64 = 0;
        for (k, tw) in res.twists.iter().enumerate() {
            let sign = if k % 2 == 0 { 1 } else { -1 };
            for &w in tw {
                chi += sign * dim_r(t + w);
            }
        }
        if chi != hf.values[t as usize] as i64 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Check used by tests: each column of `map` is annihilated by the
/// generators `gens` (i.e. really is a syzygy).
pub fn annihilates(map: &GradedMap, gens: &[Polynomial]) -> bool {
    for j in 0..map.source_rank() {
        let mut acc = Polynomial::zero(map.field, map.num_vars);
        for (i, g) in gens.iter().enumerate() {
            acc = acc.add(&g.mul(&map.entries[i][j]));
        }
        if !acc.is_zero() {
            return false;
        }
    }
    true
}

/// Betti tables are invariant under permutations and unimodular changes
/// of the generator list; used as a property in tests via re-resolution.
pub fn ideal_groebner(gens: &[Polynomial]) -> Result<crate::groebner::GroebnerBasis, CoreError> {
    groebner_basis(gens, MonomialOrder::Grevlex, GroebnerOptions::default())
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
    fn koszul_syzygy_of_two_variables() {
        let g = gens(&["x0", "x1"], 2, q());
        let s = syzygies(&g).unwrap();
        assert_eq!(s.source_rank(), 1);
        assert_eq!(s.source_twists, vec![-2]);
        assert_eq!(s.target_twists, vec![-1, -1]);
        assert!(annihilates(&s, &g));
        assert!(s.is_minimal());
    }

    #[test]
    fn koszul_resolution_of_four_variables() {
        let g = gens(&["x0", "x1", "x2", "x3"], 4, q());
        let res = minimal_free_resolution(&g, 8).unwrap();
        let b = res.betti();
        let ranks: Vec<usize> = (0..=4).map(|i| b.ranks_at(i)).collect();
        assert_eq!(ranks, vec![1, 4, 6, 4, 1]);
        let twists: Vec<Vec<i64>> = res.twists.clone();
        assert_eq!(twists[0], vec![0]);
        assert_eq!(twists[2], vec![-2; 6]);
        assert_eq!(twists[4], vec![-4]);
        assert!(res.is_complex());
        assert!(res.is_minimal());
        assert!(euler_characteristic_matches(&res, &g, 6).unwrap());
    }

    #[test]
    fn syzygies_of_determinant_partials_2x2() {
        // det of a generic 2x2 matrix in variables x0..x3 (x0*x3 - x1*x2);
        // its four partials are coordinates up to sign, so the syzygies
        // are the six Koszul relations in degree 2.
        let f = parse_polynomial("x0*x3 - x1*x2", 4, q()).unwrap();
        let parts: Vec<Polynomial> = (0..4).map(|i| f.differentiate(i)).collect();
        let s = syzygies(&parts).unwrap();
        assert_eq!(s.source_rank(), 6);
        assert!(s.source_twists.iter().all(|&t| t == -2));
        assert!(annihilates(&s, &parts));
        assert!(s.is_minimal());
    }

    #[test]
    fn betti_invariance_under_unimodular_change() {
        let fp = FieldSpec::Prime(DEFAULT_PRIME);
        let g1 = gens(&["x0^2 - x1*x2", "x1^2 - x0*x2", "x2^2 - x0*x1"], 3, fp);
        let mut g2 = vec![g1[2].clone(), g1[0].clone(), g1[1].clone()];
        g2[1] = g2[1].add(&g2[0].scale(&fp.from_i64(5)));
        let b1 = minimal_free_resolution(&g1, 8).unwrap().betti();
        let b2 = minimal_free_resolution(&g2, 8).unwrap().betti();
        assert_eq!(b1, b2);
    }

    #[test]
    fn minimal_generators_drops_redundant() {
        let g = gens(&["x0", "x1", "x0 + x1"], 2, q());
        let wrapped: Vec<ModPoly> = g
            .iter()
            .enumerate()
            .map(|(_i, p)| ModPoly::from_poly(p, 0, 1))
            .collect();
        let min = minimal_generators(&wrapped, &[0]);
        assert_eq!(min.len(), 2);
        // Redundant higher-degree generator: x0^2 in <x0>.
        let g2 = gens(&["x0", "x0^2"], 2, q());
        let wrapped2: Vec<ModPoly> = g2.iter().map(|p| ModPoly::from_poly(p, 0, 1)).collect();
        assert_eq!(minimal_generators(&wrapped2, &[0]).len(), 1);
    }
}

//! Multivariate polynomials with exact coefficients.
//!
//! Monomials are exponent vectors ordered by graded reverse lexicographic
//! order (grevlex) with `x0 > x1 > ...`; that order is the `Ord` instance
//! and the canonical storage/printing order throughout the crate.  The
//! only departure from grevlex lives in the elimination routines of the
//! Groebner engine.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use crate::error::CoreError;
use crate::field::{FieldSpec, K};

/// An exponent vector.  `Ord` is grevlex: higher total degree wins; on a
/// tie the monomial with the *smaller* exponent at the last differing
/// variable is the larger one.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(pub Vec<u16>);

impl Monomial {
    pub fn one(num_vars: usize) -> Self {
        Monomial(vec![0; num_vars])
    }

    pub fn var(num_vars: usize, i: usize) -> Self {
        let mut e = vec![0; num_vars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn num_vars(&self) -> usize {
        self.0.len()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.0.len(), other.0.len());
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`; caller must ensure divisibility.
    pub fn quotient(&self, other: &Monomial) -> Monomial {
        debug_assert!(self.divides(other));
        Monomial(
            other
                .0
                .iter()
                .zip(&self.0)
                .map(|(b, a)| b - a)
                .collect(),
        )
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn gcd_is_one(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        debug_assert_eq!(self.0.len(), other.0.len());
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {}
            o => return o,
        }
        for i in (0..self.0.len()).rev() {
            if self.0[i] != other.0[i] {
                // Rightmost difference: the larger exponent there loses.
                return other.0[i].cmp(&self.0[i]);
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Monomial orders understood by the Groebner engine.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MonomialOrder {
    /// Graded reverse lexicographic (the default everywhere).
    Grevlex,
    /// Block order eliminating variable 0: compare the exponent of `x0`
    /// first, then grevlex on the full vector.  Used only for colon and
    /// saturation computations.
    ElimFirst,
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Grevlex => a.cmp(b),
            MonomialOrder::ElimFirst => match a.0[0].cmp(&b.0[0]) {
                Ordering::Equal => a.cmp(b),
                o => o,
            },
        }
    }
}

/// All monomials of the given total degree, in descending grevlex order
/// (leading monomial first).  Count is `C(degree + num_vars - 1, num_vars - 1)`.
pub fn graded_basis(num_vars: usize, degree: u32) -> Vec<Monomial> {
    assert!(num_vars >= 1, "graded_basis needs at least one variable");
    let mut out = Vec::new();
    let mut current = vec![0u16; num_vars];
    fill(&mut out, &mut current, 0, degree);
    fn fill(out: &mut Vec<Monomial>, cur: &mut Vec<u16>, var: usize, left: u32) {
        if var + 1 == cur.len() {
            cur[var] = left as u16;
            out.push(Monomial(cur.clone()));
            return;
        }
        for e in (0..=left).rev() {
            cur[var] = e as u16;
            fill(out, cur, var + 1, left - e);
        }
        cur[var] = 0;
    }
    out.sort_by(|a, b| b.cmp(a));
    out
}

/// A polynomial over a fixed field in `num_vars` variables.  Terms are
/// kept in a grevlex-keyed map with no explicit zero coefficients, so
/// equality of representations is equality of polynomials.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Polynomial {
    pub field: FieldSpec,
    pub num_vars: usize,
    terms: BTreeMap<Monomial, K>,
}

impl Polynomial {
    pub fn zero(field: FieldSpec, num_vars: usize) -> Self {
        Polynomial {
            field,
            num_vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(field: FieldSpec, num_vars: usize, c: K) -> Self {
        let mut p = Self::zero(field, num_vars);
        p.add_term(Monomial::one(num_vars), c);
        p
    }

    pub fn var(field: FieldSpec, num_vars: usize, i: usize) -> Self {
        let mut p = Self::zero(field, num_vars);
        p.add_term(Monomial::var(num_vars, i), field.one());
        p
    }

    pub fn monomial(field: FieldSpec, m: Monomial, c: K) -> Self {
        let mut p = Self::zero(field, m.num_vars());
        p.add_term(m, c);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &K)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> K {
        self.terms.get(m).cloned().unwrap_or_else(|| self.field.zero())
    }

    /// Adds `c * m` in place, dropping the term if it cancels.
    pub fn add_term(&mut self, m: Monomial, c: K) {
        debug_assert_eq!(m.num_vars(), self.num_vars);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
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

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.neg());
        }
        out
    }

    pub fn neg(&self) -> Polynomial {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = c.neg();
        }
        out
    }

    pub fn scale(&self, c: &K) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.field, self.num_vars);
        }
        let mut out = self.clone();
        for v in out.terms.values_mut() {
            *v = v.mul(c);
        }
        out
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &K) -> Polynomial {
        let mut out = Polynomial::zero(self.field, self.num_vars);
        if c.is_zero() {
            return out;
        }
        for (mm, cc) in &self.terms {
            out.terms.insert(mm.mul(m), cc.mul(c));
        }
        out
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero(self.field, self.num_vars);
        for (m, c) in &other.terms {
            for (mm, cc) in &self.terms {
                out.add_term(mm.mul(m), cc.mul(c));
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::constant(self.field, self.num_vars, self.field.one());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|m| m.degree());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// Leading term under the given order.
    pub fn leading(&self, ord: MonomialOrder) -> Option<(&Monomial, &K)> {
        match ord {
            MonomialOrder::Grevlex => self.terms.iter().next_back(),
            MonomialOrder::ElimFirst => self
                .terms
                .iter()
                .max_by(|(a, _), (b, _)| ord.cmp(a, b)),
        }
    }

    /// Makes the grevlex leading coefficient 1 (no-op on zero).
    pub fn monic(&self, ord: MonomialOrder) -> Polynomial {
        match self.leading(ord) {
            None => self.clone(),
            Some((_, c)) => self.scale(&c.inv().expect("nonzero leading coefficient")),
        }
    }

    /// Partial derivative with respect to variable `i`.
    pub fn differentiate(&self, i: usize) -> Polynomial {
        assert!(i < self.num_vars);
        let mut out = Polynomial::zero(self.field, self.num_vars);
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e == 0 {
                continue;
            }
            let mut m2 = m.clone();
            m2.0[i] = e - 1;
            out.add_term(m2, c.mul(&self.field.from_i64(e as i64)));
        }
        out
    }

    /// Evaluates at a point of the coefficient field.
    pub fn evaluate(&self, point: &[K]) -> K {
        assert_eq!(point.len(), self.num_vars);
        let mut acc = self.field.zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    t = t.mul(&point[i].pow(e as u32));
                }
            }
            acc = acc.add(&t);
        }
        acc
    }

    /// Substitutes `images[i]` for variable `i`; the images share a common
    /// variable count which becomes the result's.
    pub fn substitute(&self, images: &[Polynomial]) -> Polynomial {
        assert_eq!(images.len(), self.num_vars);
        let nv = images.first().map(|p| p.num_vars).unwrap_or(0);
        let mut acc = Polynomial::zero(self.field, nv);
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(self.field, nv, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    t = t.mul(&images[i].pow(e as u32));
                }
            }
            acc = acc.add(&t);
        }
        acc
    }

    /// Widens the variable set: variable `i` becomes variable `i + shift`
    /// in a ring with `new_num_vars` variables.
    pub fn shift_vars(&self, shift: usize, new_num_vars: usize) -> Polynomial {
        assert!(self.num_vars + shift <= new_num_vars);
        let mut out = Polynomial::zero(self.field, new_num_vars);
        for (m, c) in &self.terms {
            let mut e = vec![0u16; new_num_vars];
            e[shift..shift + self.num_vars].copy_from_slice(&m.0);
            out.terms.insert(Monomial(e), c.clone());
        }
        out
    }

    /// Inverse of `shift_vars`: drops the first `shift` variables, which
    /// must not occur in any term.
    pub fn unshift_vars(&self, shift: usize) -> Polynomial {
        let nv = self.num_vars - shift;
        let mut out = Polynomial::zero(self.field, nv);
        for (m, c) in &self.terms {
            assert!(m.0[..shift].iter().all(|&e| e == 0));
            out.terms.insert(Monomial(m.0[shift..].to_vec()), c.clone());
        }
        out
    }

    /// Canonical text form; the zero polynomial prints as `0`.
    pub fn to_text(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = !c.is_nonneg_text();
            if idx == 0 {
                if neg {
                    s.push('-');
                }
            } else if neg {
                s.push_str(" - ");
            } else {
                s.push_str(" + ");
            }
            let coeff_txt = c.abs_text();
            let mut factors: Vec<String> = Vec::new();
            for (i, &e) in m.0.iter().enumerate() {
                if e == 1 {
                    factors.push(format!("x{}", i));
                } else if e > 1 {
                    factors.push(format!("x{}^{}", i, e));
                }
            }
            if factors.is_empty() {
                s.push_str(&coeff_txt);
            } else {
                if coeff_txt != "1" {
                    s.push_str(&coeff_txt);
                    s.push('*');
                }
                s.push_str(&factors.join("*"));
            }
        }
        s
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Recursive-descent parser for the polynomial grammar:
///
/// ```text
/// poly   := ['+'|'-'] term (('+'|'-') term)*
/// term   := [coeff ['*']] factor ('*'? factor)* | coeff
/// factor := 'x' index ('^' exponent)?
/// coeff  := integer | integer '/' integer
/// ```
///
/// Whitespace is ignored everywhere.  Variable indices must be below
/// `num_vars`; semantic errors carry the byte offset of the offender.
pub fn parse_polynomial(input: &str, num_vars: usize, field: FieldSpec) -> Result<Polynomial, CoreError> {
    field.validate()?;
    Parser {
        bytes: input.as_bytes(),
        pos: 0,
        num_vars,
        field,
    }
    .parse()
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
    num_vars: usize,
    field: FieldSpec,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, offset: usize, message: impl Into<String>) -> Result<T, CoreError> {
        Err(CoreError::Parse {
            offset,
            message: message.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn parse(mut self) -> Result<Polynomial, CoreError> {
        let mut acc = Polynomial::zero(self.field, self.num_vars);
        let mut sign = match self.peek() {
            Some(b'+') => {
                self.pos += 1;
                false
            }
            Some(b'-') => {
                self.pos += 1;
                true
            }
            Some(_) => false,
            None => return self.err(self.pos, "empty input"),
        };
        loop {
            let term = self.parse_term()?;
            acc = if sign { acc.sub(&term) } else { acc.add(&term) };
            match self.peek() {
                None => return Ok(acc),
                Some(b'+') => {
                    self.pos += 1;
                    sign = false;
                }
                Some(b'-') => {
                    self.pos += 1;
                    sign = true;
                }
                Some(c) => {
                    return self.err(self.pos, format!("expected '+' or '-', found {:?}", c as char))
                }
            }
        }
    }

    fn parse_term(&mut self) -> Result<Polynomial, CoreError> {
        let mut coeff = self.field.one();
        let mut mono = Monomial::one(self.num_vars);
        let mut saw_factor = false;
        let mut saw_coeff = false;

        if matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            coeff = self.parse_coeff()?;
            saw_coeff = true;
            if self.peek() == Some(b'*') {
                self.pos += 1;
            }
        }
        loop {
            match self.peek() {
                Some(b'x') => {
                    let (i, e) = self.parse_factor()?;
                    mono.0[i] += e;
                    saw_factor = true;
                    if self.peek() == Some(b'*') {
                        self.pos += 1;
                        // A '*' must be followed by another factor.
                        if self.peek() != Some(b'x') {
                            return self.err(self.pos, "expected a factor after '*'");
                        }
                    }
                }
                _ => break,
            }
        }
        if !saw_factor && !saw_coeff {
            return self.err(self.pos, "expected a term");
        }
        Ok(Polynomial::monomial(self.field, mono, coeff))
    }

    fn parse_factor(&mut self) -> Result<(usize, u16), CoreError> {
        debug_assert_eq!(self.peek(), Some(b'x'));
        self.pos += 1;
        let start = self.pos;
        let idx = self.parse_uint()?;
        if idx as usize >= self.num_vars {
            return self.err(
                start,
                format!("variable index {} out of range (num_vars = {})", idx, self.num_vars),
            );
        }
        let mut exp = 1u64;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let estart = self.pos;
            exp = self.parse_uint()?;
            if exp > u16::MAX as u64 {
                return self.err(estart, "exponent too large");
            }
        }
        Ok((idx as usize, exp as u16))
    }

    fn parse_uint(&mut self) -> Result<u64, CoreError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return self.err(start, "expected a number");
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .unwrap()
            .parse::<u64>()
            .map_err(|_| CoreError::Parse {
                offset: start,
                message: "integer literal too large".into(),
            })
    }

    fn parse_coeff(&mut self) -> Result<K, CoreError> {
        let start = self.pos;
        let n = self.parse_uint()?;
        if n > i64::MAX as u64 {
            return self.err(start, "integer literal too large");
        }
        let num = self.field.from_i64(n as i64);
        if self.peek() == Some(b'/') {
            // Disambiguate from nothing: '/' always means a fraction here.
            self.pos += 1;
            let dstart = self.pos;
            let d = self.parse_uint()?;
            if d > i64::MAX as u64 {
                return self.err(dstart, "integer literal too large");
            }
            let den = self.field.from_i64(d as i64);
            if den.is_zero() {
                return Err(CoreError::DivisionByZero);
            }
            return num.div(&den);
        }
        Ok(num)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::DEFAULT_PRIME;

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    #[test]
    fn grevlex_order_examples() {
        // In 3 variables: x0^2 > x0*x1 > x1^2 > x0*x2 > x1*x2 > x2^2.
        let ms = graded_basis(3, 2);
        let txt: Vec<String> = ms
            .iter()
            .map(|m| Polynomial::monomial(q(), m.clone(), q().one()).to_text())
            .collect();
        assert_eq!(txt, vec!["x0^2", "x0*x1", "x1^2", "x0*x2", "x1*x2", "x2^2"]);
    }

    #[test]
    fn graded_basis_counts() {
        // C(d + v - 1, v - 1)
        assert_eq!(graded_basis(4, 3).len(), 20);
        assert_eq!(graded_basis(1, 7).len(), 1);
        assert_eq!(graded_basis(9, 2).len(), 45);
    }

    #[test]
    fn parse_print_round_trip() {
        let cases = [
            "x0*x1^3 + x2^4 + x3^4",
            "0",
            "3*x0^2*x1 - 1/2*x2^3 + 7",
            "x0 - x1",
            "-x0 + x1",
            "2/3",
        ];
        for s in cases {
            let p = parse_polynomial(s, 4, q()).unwrap();
            let printed = p.to_text();
            let again = parse_polynomial(&printed, 4, q()).unwrap();
            assert_eq!(p, again, "round trip failed for {s}");
        }
        // Canonical form is stable: printing is idempotent.
        let p = parse_polynomial("x1*x0 + x0*x1 - x0 * x1", 2, q()).unwrap();
        assert_eq!(p.to_text(), "x0*x1");
    }

    #[test]
    fn parse_cancellation_to_zero() {
        let p = parse_polynomial("x0*x1 - x1*x0", 2, q()).unwrap();
        assert!(p.is_zero());
        assert_eq!(p.to_text(), "0");
    }

    #[test]
    fn parse_errors_carry_offsets() {
        match parse_polynomial("x0 + x7", 4, q()) {
            Err(CoreError::Parse { offset, .. }) => assert_eq!(offset, 6),
            other => panic!("expected parse error, got {other:?}"),
        }
        assert!(parse_polynomial("x0 + ", 4, q()).is_err());
        assert!(parse_polynomial("1/0", 4, q()).is_err());
        // 1/7 over GF(7): denominator reduces to zero.
        assert!(matches!(
            parse_polynomial("1/7*x0", 4, FieldSpec::Prime(7)),
            Err(CoreError::DivisionByZero)
        ));
    }

    #[test]
    fn derivative_and_euler() {
        let f = parse_polynomial("x0^2*x1 + x2^3", 3, q()).unwrap();
        let d = f.degree().unwrap();
        // Euler relation for homogeneous f: sum x_i * df/dx_i = d * f.
        let mut acc = Polynomial::zero(q(), 3);
        for i in 0..3 {
            acc = acc.add(&f.differentiate(i).mul(&Polynomial::var(q(), 3, i)));
        }
        assert_eq!(acc, f.scale(&q().from_i64(d as i64)));
    }

    #[test]
    fn evaluate_and_substitute() {
        let f = parse_polynomial("x0^2 + x1", 2, FieldSpec::Prime(DEFAULT_PRIME)).unwrap();
        let fp = FieldSpec::Prime(DEFAULT_PRIME);
        let v = f.evaluate(&[fp.from_i64(3), fp.from_i64(4)]);
        assert_eq!(v, fp.from_i64(13));
        // substitute x0 -> y0 + y1, x1 -> y1 (2 variables).
        let g = f.substitute(&[
            parse_polynomial("x0 + x1", 2, fp).unwrap(),
            parse_polynomial("x1", 2, fp).unwrap(),
        ]);
        let expect = parse_polynomial("x0^2 + 2*x0*x1 + x1^2 + x1", 2, fp).unwrap();
        assert_eq!(g, expect);
    }
}

//! Exact dense linear algebra: rank and kernel bases over the rationals
//! (fraction-free Bareiss forward pass to keep intermediate entries as
//! integers) and over prime fields (plain Gauss-Jordan).
//!
//! Pivoting is deterministic — first nonzero column, first nonzero row —
//! so results are bit-for-bit reproducible.

use num::{BigInt, BigRational, One, Zero};

use crate::field::{FieldSpec, K};

/// A dense matrix over a fixed field, row-major.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExactMatrix {
    pub field: FieldSpec,
    pub rows: usize,
    pub cols: usize,
    data: Vec<K>,
}

impl ExactMatrix {
    pub fn zero(field: FieldSpec, rows: usize, cols: usize) -> Self {
        ExactMatrix {
            field,
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = Self::zero(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(field: FieldSpec, rows: Vec<Vec<K>>) -> Self {
        let r = rows.len();
        let c = rows.first().map(|v| v.len()).unwrap_or(0);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend(row);
        }
        ExactMatrix {
            field,
            rows: r,
            cols: c,
            data,
        }
    }

    pub fn get(&self, i: usize, j: usize) -> &K {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: K) {
        self.data[i * self.cols + j] = v;
    }

    pub fn transpose(&self) -> ExactMatrix {
        let mut t = ExactMatrix::zero(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn row(&self, i: usize) -> &[K] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    /// Rank together with a kernel basis in reduced echelon normal form:
    /// one vector per free column, carrying 1 at that column and the
    /// solved pivot entries elsewhere.
    pub fn rank_and_kernel(&self) -> (usize, Vec<Vec<K>>) {
        let (rref, pivots) = self.rref();
        let rank = pivots.len();
        let is_pivot: Vec<bool> = {
            let mut v = vec![false; self.cols];
            for &p in &pivots {
                v[p] = true;
            }
            v
        };
        let mut kernel = Vec::new();
        for f in 0..self.cols {
            if is_pivot[f] {
                continue;
            }
            let mut v = vec![self.field.zero(); self.cols];
            v[f] = self.field.one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = rref[r][f].neg();
            }
            kernel.push(v);
        }
        (rank, kernel)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Reduced row echelon form (nonzero rows only) and its pivot columns.
    pub fn rref(&self) -> (Vec<Vec<K>>, Vec<usize>) {
        match self.field {
            FieldSpec::Prime(_) => self.rref_gauss(),
            FieldSpec::Rationals => self.rref_bareiss(),
        }
    }

    fn rref_gauss(&self) -> (Vec<Vec<K>>, Vec<usize>) {
        let mut m: Vec<Vec<K>> = (0..self.rows).map(|i| self.row(i).to_vec()).collect();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
                continue;
            };
            m.swap(r, p);
            let inv = m[r][c].inv().unwrap();
            for v in m[r].iter_mut() {
                *v = v.mul(&inv);
            }
            for i in 0..m.len() {
                if i != r && !m[i][c].is_zero() {
                    let f = m[i][c].clone();
                    for j in 0..self.cols {
                        let t = m[r][j].mul(&f);
                        m[i][j] = m[i][j].sub(&t);
                    }
                }
            }
            pivots.push(c);
            r += 1;
            if r == m.len() {
                break;
            }
        }
        m.truncate(r);
        (m, pivots)
    }

    /// Over the rationals: clear denominators per row, run fraction-free
    /// (Bareiss) forward elimination on integers, then finish the short
    /// echelon with a Jordan pass back over rationals.
    fn rref_bareiss(&self) -> (Vec<Vec<K>>, Vec<usize>) {
        let mut m: Vec<Vec<BigInt>> = (0..self.rows)
            .map(|i| {
                let row: Vec<BigRational> = self
                    .row(i)
                    .iter()
                    .map(|k| match k {
                        K::Rat(r) => r.clone(),
                        _ => unreachable!(),
                    })
                    .collect();
                let mut l = BigInt::one();
                for v in &row {
                    l = num::integer::lcm(l, v.denom().clone());
                }
                row.iter()
                    .map(|v| v.numer() * (&l / v.denom()))
                    .collect()
            })
            .collect();

        let mut pivots = Vec::new();
        let mut prev = BigInt::one();
        let mut r = 0;
        for c in 0..self.cols {
            let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
                continue;
            };
            m.swap(r, p);
            let piv = m[r][c].clone();
            for i in 0..m.len() {
                if i == r {
                    continue;
                }
                // Fraction-free update; division by the previous pivot is
                // exact below the pivot row (Bareiss); for rows above we
                // keep them untouched until the Jordan pass.
                if i > r {
                    let f = m[i][c].clone();
                    for j in 0..self.cols {
                        let t = (&piv * &m[i][j] - &f * &m[r][j]) / &prev;
                        m[i][j] = t;
                    }
                }
            }
            prev = piv;
            pivots.push(c);
            r += 1;
            if r == m.len() {
                break;
            }
        }
        m.truncate(r);

        // Jordan pass over rationals on the echelon rows.
        let mut q: Vec<Vec<BigRational>> = m
            .into_iter()
            .map(|row| row.into_iter().map(BigRational::from_integer).collect())
            .collect();
        for (ri, &pc) in pivots.iter().enumerate().rev() {
            let inv = q[ri][pc].recip();
            for v in q[ri].iter_mut() {
                *v *= &inv;
            }
            for i in 0..ri {
                if !q[i][pc].is_zero() {
                    let f = q[i][pc].clone();
                    for j in 0..self.cols {
                        let t = &q[ri][j] * &f;
                        q[i][j] -= t;
                    }
                }
            }
        }
        let out = q
            .into_iter()
            .map(|row| row.into_iter().map(K::Rat).collect())
            .collect();
        (out, pivots)
    }
}

//! Exact dense linear algebra over the rationals.
//!
//! Rank, kernel bases, pivot columns and linear solves are all computed by
//! fraction-free Gaussian elimination on integer rows: each row of a rational
//! matrix is cleared of denominators once, updates are cross-multiplications
//! `p*row - q*pivot_row`, and rows are divided by their gcd to keep growth
//! down. Every division is exact; there is no rounding anywhere.
//!
//! Pivot columns are scanned left to right, so the set of pivot columns is
//! the greedy (matroid-canonical) independent set and is deterministic
//! regardless of pivot-row tie-breaking.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::rat::Rational;

/// Dense rational matrix, row major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QMat {
    nrows: usize,
    ncols: usize,
    data: Vec<Rational>,
}

impl QMat {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        QMat { nrows, ncols, data: vec![Rational::zero(); nrows * ncols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = QMat::zeros(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = Rational::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map(|r| r.len()).unwrap_or(0);
        let mut data = Vec::with_capacity(nrows * ncols);
        for r in rows {
            assert_eq!(r.len(), ncols);
            data.extend(r);
        }
        QMat { nrows, ncols, data }
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(cols: &[Vec<Rational>]) -> Self {
        let ncols = cols.len();
        let nrows = cols.first().map(|c| c.len()).unwrap_or(0);
        let mut m = QMat::zeros(nrows, ncols);
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.len(), nrows);
            for i in 0..nrows {
                *m.at_mut(i, j) = c[i].clone();
            }
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn at(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.ncols + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut Rational {
        &mut self.data[i * self.ncols + j]
    }

    pub fn column(&self, j: usize) -> Vec<Rational> {
        (0..self.nrows).map(|i| self.at(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    /// `[self | other]` side by side.
    pub fn hcat(&self, other: &QMat) -> QMat {
        assert_eq!(self.nrows, other.nrows);
        let mut m = QMat::zeros(self.nrows, self.ncols + other.ncols);
        for i in 0..self.nrows {
            for j in 0..self.ncols {
                *m.at_mut(i, j) = self.at(i, j).clone();
            }
            for j in 0..other.ncols {
                *m.at_mut(i, self.ncols + j) = other.at(i, j).clone();
            }
        }
        m
    }

    pub fn matmul(&self, other: &QMat) -> QMat {
        assert_eq!(self.ncols, other.nrows);
        let mut m = QMat::zeros(self.nrows, other.ncols);
        for i in 0..self.nrows {
            for k in 0..self.ncols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.ncols {
                    let b = other.at(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    *m.at_mut(i, j) += a * b;
                }
            }
        }
        m
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(self.ncols, v.len());
        (0..self.nrows)
            .map(|i| {
                let mut s = Rational::zero();
                for j in 0..self.ncols {
                    let a = self.at(i, j);
                    if !a.is_zero() && !v[j].is_zero() {
                        s += a * &v[j];
                    }
                }
                s
            })
            .collect()
    }

    pub fn rank(&self) -> usize {
        IntMat::from_qmat(self).echelon(EchelonMode::Forward).rank
    }

    pub fn is_nonsingular(&self) -> bool {
        self.nrows == self.ncols && self.rank() == self.nrows
    }

    /// Indices of the leftmost maximal independent column set.
    pub fn pivot_columns(&self) -> Vec<usize> {
        IntMat::from_qmat(self).echelon(EchelonMode::Forward).pivot_cols
    }

    /// Basis of the right kernel `{x : A x = 0}` as column vectors.
    pub fn kernel_basis(&self) -> Vec<Vec<Rational>> {
        let mut im = IntMat::from_qmat(self);
        let ech = im.echelon_in_place(EchelonMode::Reduced);
        let pivots = &ech.pivot_cols;
        let mut is_pivot = vec![usize::MAX; self.ncols];
        for (r, &c) in pivots.iter().enumerate() {
            is_pivot[c] = r;
        }
        let mut basis = Vec::new();
        for f in 0..self.ncols {
            if is_pivot[f] != usize::MAX {
                continue;
            }
            let mut v = vec![Rational::zero(); self.ncols];
            v[f] = Rational::one();
            for (r, &c) in pivots.iter().enumerate() {
                let num = &im.rows[r][f];
                if !num.is_zero() {
                    let den = &im.rows[r][c];
                    v[c] = -Rational::new(num.clone(), den.clone());
                }
            }
            basis.push(v);
        }
        basis
    }

    /// Solve `A X = B` for square nonsingular `A`; `None` if singular.
    pub fn solve(&self, b: &QMat) -> Option<QMat> {
        assert_eq!(self.nrows, self.ncols);
        assert_eq!(b.nrows, self.nrows);
        let mut im = IntMat::from_qmat(&self.hcat(b));
        let ech = im.echelon_bounded(EchelonMode::Reduced, self.ncols);
        if ech.rank < self.ncols {
            return None;
        }
        let mut x = QMat::zeros(self.ncols, b.ncols);
        for (r, &c) in ech.pivot_cols.iter().enumerate() {
            let den = im.rows[r][c].clone();
            for j in 0..b.ncols {
                let num = &im.rows[r][self.ncols + j];
                if !num.is_zero() {
                    *x.at_mut(c, j) = Rational::new(num.clone(), den.clone());
                }
            }
        }
        Some(x)
    }

    /// Solve `T Y = V` where `T` is tall with full column rank. Returns `None`
    /// when some column of `V` is outside the column span of `T`.
    pub fn solve_in_span(&self, v: &QMat) -> Option<QMat> {
        assert_eq!(self.nrows, v.nrows);
        let mut im = IntMat::from_qmat(&self.hcat(v));
        let ech = im.echelon_bounded(EchelonMode::Reduced, self.ncols);
        assert_eq!(ech.rank, self.ncols, "solve_in_span: rank-deficient basis");
        // consistency: rows past the rank must have zero right-hand side
        for r in ech.rank..im.rows.len() {
            for j in 0..v.ncols {
                if !im.rows[r][self.ncols + j].is_zero() {
                    return None;
                }
            }
        }
        let mut x = QMat::zeros(self.ncols, v.ncols);
        for (r, &c) in ech.pivot_cols.iter().enumerate() {
            let den = im.rows[r][c].clone();
            for j in 0..v.ncols {
                let num = &im.rows[r][self.ncols + j];
                if !num.is_zero() {
                    *x.at_mut(c, j) = Rational::new(num.clone(), den.clone());
                }
            }
        }
        Some(x)
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
pub enum EchelonMode {
    /// Eliminate below pivots only (enough for ranks).
    Forward,
    /// Eliminate above and below (reduced form, for kernels and solves).
    Reduced,
}

pub struct EchelonInfo {
    pub rank: usize,
    pub pivot_cols: Vec<usize>,
}

/// Integer matrix with dense rows; the elimination engine.
pub struct IntMat {
    rows: Vec<Vec<BigInt>>,
    ncols: usize,
}

/// Rows are renormalized by their gcd once entries pass this many bits.
const NORMALIZE_BITS: u64 = 96;

impl IntMat {
    pub fn from_qmat(q: &QMat) -> IntMat {
        let mut rows = Vec::with_capacity(q.nrows);
        for i in 0..q.nrows {
            let mut lcm = BigInt::one();
            for j in 0..q.ncols {
                let d = q.at(i, j).denom();
                if !d.is_one() {
                    lcm = lcm.lcm(d);
                }
            }
            let row: Vec<BigInt> = (0..q.ncols)
                .map(|j| {
                    let r = q.at(i, j);
                    r.numer() * (&lcm / r.denom())
                })
                .collect();
            rows.push(row);
        }
        IntMat { rows, ncols: q.ncols }
    }

    pub fn echelon(mut self, mode: EchelonMode) -> EchelonInfo {
        self.echelon_in_place(mode)
    }

    fn echelon_in_place(&mut self, mode: EchelonMode) -> EchelonInfo {
        let ncols = self.ncols;
        self.echelon_bounded(mode, ncols)
    }

    /// Eliminate using pivots only in columns `0..pivot_limit` (the remaining
    /// columns ride along, e.g. as right-hand sides).
    fn echelon_bounded(&mut self, mode: EchelonMode, pivot_limit: usize) -> EchelonInfo {
        let nrows = self.rows.len();
        let mut rank = 0usize;
        let mut pivot_cols = Vec::new();
        for col in 0..pivot_limit {
            if rank == nrows {
                break;
            }
            // deterministic pivot: smallest bit-length, then lowest row index
            let mut best: Option<(u64, usize)> = None;
            for r in rank..nrows {
                let e = &self.rows[r][col];
                if e.is_zero() {
                    continue;
                }
                let bits = e.bits();
                match best {
                    None => best = Some((bits, r)),
                    Some((b, _)) if bits < b => best = Some((bits, r)),
                    _ => {}
                }
                if bits <= 1 {
                    break; // can't beat a unit pivot
                }
            }
            let Some((_, prow)) = best else { continue };
            self.rows.swap(rank, prow);
            let range: Vec<usize> = match mode {
                EchelonMode::Forward => ((rank + 1)..nrows).collect(),
                EchelonMode::Reduced => (0..nrows).filter(|&r| r != rank).collect(),
            };
            for r in range {
                if self.rows[r][col].is_zero() {
                    continue;
                }
                let (piv_row, tgt_row) = borrow_two(&mut self.rows, rank, r);
                eliminate(piv_row, tgt_row, col);
            }
            pivot_cols.push(col);
            rank += 1;
        }
        EchelonInfo { rank, pivot_cols }
    }
}

fn borrow_two<T>(rows: &mut [Vec<T>], a: usize, b: usize) -> (&Vec<T>, &mut Vec<T>) {
    assert_ne!(a, b);
    if a < b {
        let (lo, hi) = rows.split_at_mut(b);
        (&lo[a], &mut hi[0])
    } else {
        let (lo, hi) = rows.split_at_mut(a);
        (&hi[0], &mut lo[b])
    }
}

/// `tgt := p/g * tgt - t/g * piv` where `p, t` are the entries in `col` and
/// `g = gcd(p, t)`; afterwards `tgt[col] == 0`. Renormalizes big rows.
fn eliminate(piv: &[BigInt], tgt: &mut Vec<BigInt>, col: usize) {
    let p = &piv[col];
    let t = &tgt[col];
    let g = p.gcd(t);
    let mp = p / &g;
    let mt = t / &g;
    let mut maxbits = 0u64;
    for j in col..tgt.len() {
        let pv = &piv[j];
        let a = if mp.is_one() { core::mem::take(&mut tgt[j]) } else { &tgt[j] * &mp };
        let v = if pv.is_zero() { a } else { a - pv * &mt };
        maxbits = maxbits.max(v.bits());
        tgt[j] = v;
    }
    // entries left of `col` are already zero in both rows in forward mode;
    // in reduced mode rows above may have nonzeros left of col only in
    // pivot columns of earlier steps, which stay untouched by design of the
    // reduced sweep (their column entries in `piv` are zero there).
    for j in 0..col {
        if !tgt[j].is_zero() && !mp.is_one() {
            tgt[j] = &tgt[j] * &mp;
        }
    }
    debug_assert!(tgt[col].is_zero());
    if maxbits > NORMALIZE_BITS {
        normalize_row(tgt);
    }
}

fn normalize_row(row: &mut [BigInt]) {
    let mut g = BigInt::zero();
    for v in row.iter() {
        if !v.is_zero() {
            g = g.gcd(v);
            if g.is_one() {
                return;
            }
        }
    }
    if g.is_zero() || g.is_one() {
        return;
    }
    let g = g.abs();
    for v in row.iter_mut() {
        if !v.is_zero() {
            *v = &*v / &g;
        }
    }
}

/// Stack column vectors and return the rank of their span.
pub fn span_rank(cols: &[Vec<Rational>]) -> usize {
    QMat::from_columns(cols).rank()
}

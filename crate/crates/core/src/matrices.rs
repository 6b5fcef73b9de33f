//! Exact dense linear algebra over Q(v) (EXACT mode) and over the rationals
//! at a sample point (SAMPLED mode).
//!
//! Matrices carry optional tensor-factor structure (`site_dims`) with the
//! big-endian index convention: the first factor varies slowest.

use crate::scalars::{Rat, SampleGen, Scalar};
use crate::{Error, Result};
use num::{One, Zero};
use std::fmt;
use std::ops::{Index, IndexMut};

/// Field operations needed by the generic elimination routines.
pub trait Field: Clone + PartialEq + Send + Sync {
    fn f_zero() -> Self;
    fn f_one() -> Self;
    fn is_zero(&self) -> bool;
    fn add_ref(&self, o: &Self) -> Self;
    fn sub_ref(&self, o: &Self) -> Self;
    fn mul_ref(&self, o: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    /// None when zero.
    fn inv(&self) -> Option<Self>;
    /// Pivot-selection heuristic: smaller is simpler.
    fn complexity(&self) -> usize;
}

impl Field for Scalar {
    fn f_zero() -> Self {
        Scalar::zero()
    }
    fn f_one() -> Self {
        Scalar::one()
    }
    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
    fn add_ref(&self, o: &Self) -> Self {
        self.add(o)
    }
    fn sub_ref(&self, o: &Self) -> Self {
        self.sub(o)
    }
    fn mul_ref(&self, o: &Self) -> Self {
        self.mul(o)
    }
    fn neg_ref(&self) -> Self {
        self.neg()
    }
    fn inv(&self) -> Option<Self> {
        Scalar::inv(self).ok()
    }
    fn complexity(&self) -> usize {
        self.num().term_count() + 4 * self.den().term_count()
    }
}

impl Field for Rat {
    fn f_zero() -> Self {
        Rat::zero()
    }
    fn f_one() -> Self {
        Rat::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add_ref(&self, o: &Self) -> Self {
        self + o
    }
    fn sub_ref(&self, o: &Self) -> Self {
        self - o
    }
    fn mul_ref(&self, o: &Self) -> Self {
        self * o
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
    fn complexity(&self) -> usize {
        (self.numer().bits() + self.denom().bits()) as usize
    }
}

/// Verification mode: symbolic identities in Q(v), or evaluation at random
/// rational sample points.
#[derive(Clone)]
pub enum Mode {
    Exact,
    Sampled(SampleGen),
}

impl Mode {
    pub fn sampled(seed: u64) -> Self {
        Mode::Sampled(SampleGen::new(seed))
    }

    pub fn tag(&self) -> &'static str {
        match self {
            Mode::Exact => "EXACT",
            Mode::Sampled(_) => "SAMPLED",
        }
    }
}

// ---------------------------------------------------------------------------
// Matrix
// ---------------------------------------------------------------------------

/// Dense row-major matrix over a field.
#[derive(Clone)]
pub struct Matrix<F> {
    pub rows: usize,
    pub cols: usize,
    entries: Vec<F>,
    /// Tensor-factor dimensions (product equals `rows`), when the matrix is
    /// an operator on a tensor product. Big-endian: first factor slowest.
    pub site_dims: Option<Vec<usize>>,
}

/// Matrix over Q(v), the main exact carrier.
pub type ExactMatrix = Matrix<Scalar>;
/// Matrix over Q, used after evaluation at a sample point.
pub type RatMatrix = Matrix<Rat>;

impl<F: Field> PartialEq for Matrix<F> {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows && self.cols == other.cols && self.entries == other.entries
    }
}

impl<F: Field> Index<(usize, usize)> for Matrix<F> {
    type Output = F;
    fn index(&self, (r, c): (usize, usize)) -> &F {
        &self.entries[r * self.cols + c]
    }
}

impl<F: Field> IndexMut<(usize, usize)> for Matrix<F> {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut F {
        &mut self.entries[r * self.cols + c]
    }
}

impl<F: Field> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, entries: vec![F::f_zero(); rows * cols], site_dims: None }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = F::f_one();
        }
        m
    }

    pub fn from_entries(rows: usize, cols: usize, entries: Vec<F>) -> Self {
        assert_eq!(rows * cols, entries.len());
        Matrix { rows, cols, entries, site_dims: None }
    }

    pub fn with_site_dims(mut self, dims: Vec<usize>) -> Self {
        assert_eq!(dims.iter().product::<usize>(), self.rows);
        self.site_dims = Some(dims);
        self
    }

    pub fn entries(&self) -> &[F] {
        &self.entries
    }

    pub fn row(&self, r: usize) -> &[F] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> Matrix<G> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
            site_dims: self.site_dims.clone(),
        }
    }

    pub fn transpose(&self) -> Self {
        let mut out = Matrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out[(c, r)] = self[(r, c)].clone();
            }
        }
        out
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&o.entries)
                .map(|(a, b)| a.add_ref(b))
                .collect(),
            site_dims: self.site_dims.clone(),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&o.entries)
                .map(|(a, b)| a.sub_ref(b))
                .collect(),
            site_dims: self.site_dims.clone(),
        }
    }

    pub fn neg(&self) -> Self {
        self.map(|e| e.neg_ref())
    }

    pub fn scale(&self, c: &F) -> Self {
        self.map(|e| e.mul_ref(c))
    }

    /// Matrix product; zero entries of the left factor are skipped, so
    /// weight-block-sparse operators multiply at their block cost.
    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.cols, o.rows, "dimension mismatch in matrix product");
        let mut out = Matrix::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                let orow = o.row(k);
                let out_row: &mut [F] = &mut out.entries[i * o.cols..(i + 1) * o.cols];
                for (j, b) in orow.iter().enumerate() {
                    if b.is_zero() {
                        continue;
                    }
                    out_row[j] = out_row[j].add_ref(&a.mul_ref(b));
                }
            }
        }
        out.site_dims = self.site_dims.clone();
        out
    }

    /// Matrix-vector product with zero skipping.
    pub fn apply(&self, x: &[F]) -> Vec<F> {
        assert_eq!(self.cols, x.len());
        let mut out = vec![F::f_zero(); self.rows];
        for i in 0..self.rows {
            let row = self.row(i);
            let mut acc = F::f_zero();
            for (a, b) in row.iter().zip(x) {
                if a.is_zero() || b.is_zero() {
                    continue;
                }
                acc = acc.add_ref(&a.mul_ref(b));
            }
            out[i] = acc;
        }
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        assert!(self.is_square());
        let mut out = Matrix::identity(self.rows);
        out.site_dims = self.site_dims.clone();
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }

    /// [X, Y] = XY - YX
    pub fn commutator(&self, o: &Self) -> Self {
        self.mul(o).sub(&o.mul(self))
    }

    /// Kronecker product, big-endian; site_dims are concatenated.
    pub fn kron(&self, o: &Self) -> Self {
        let rows = self.rows * o.rows;
        let cols = self.cols * o.cols;
        let mut out = Matrix::zeros(rows, cols);
        for r1 in 0..self.rows {
            for c1 in 0..self.cols {
                let a = &self[(r1, c1)];
                if a.is_zero() {
                    continue;
                }
                for r2 in 0..o.rows {
                    for c2 in 0..o.cols {
                        let b = &o[(r2, c2)];
                        if b.is_zero() {
                            continue;
                        }
                        out[(r1 * o.rows + r2, c1 * o.cols + c2)] = a.mul_ref(b);
                    }
                }
            }
        }
        let dims = match (&self.site_dims, &o.site_dims) {
            (Some(a), Some(b)) => {
                let mut d = a.clone();
                d.extend_from_slice(b);
                Some(d)
            }
            (Some(a), None) => {
                let mut d = a.clone();
                d.push(o.rows);
                Some(d)
            }
            (None, Some(b)) => {
                let mut d = vec![self.rows];
                d.extend_from_slice(b);
                Some(d)
            }
            (None, None) => Some(vec![self.rows, o.rows]),
        };
        out.site_dims = dims;
        out
    }

    /// Gauss-Jordan inverse.
    pub fn inverse(&self) -> Result<Self> {
        assert!(self.is_square());
        let n = self.rows;
        let mut a = self.clone();
        let mut b: Matrix<F> = Matrix::identity(n);
        for col in 0..n {
            // simplest nonzero pivot in this column
            let pivot = (col..n)
                .filter(|&r| !a[(r, col)].is_zero())
                .min_by_key(|&r| a[(r, col)].complexity())
                .ok_or(Error::Singular)?;
            if pivot != col {
                for j in 0..n {
                    a.entries.swap(pivot * n + j, col * n + j);
                    b.entries.swap(pivot * n + j, col * n + j);
                }
            }
            let inv = a[(col, col)].inv().ok_or(Error::Singular)?;
            for j in 0..n {
                a[(col, j)] = a[(col, j)].mul_ref(&inv);
                b[(col, j)] = b[(col, j)].mul_ref(&inv);
            }
            for r in 0..n {
                if r == col || a[(r, col)].is_zero() {
                    continue;
                }
                let f = a[(r, col)].clone();
                for j in 0..n {
                    let t = a[(col, j)].mul_ref(&f);
                    a[(r, j)] = a[(r, j)].sub_ref(&t);
                    let t = b[(col, j)].mul_ref(&f);
                    b[(r, j)] = b[(r, j)].sub_ref(&t);
                }
            }
        }
        b.site_dims = self.site_dims.clone();
        Ok(b)
    }
}

impl ExactMatrix {
    /// q X Y - q^{-1} Y X
    pub fn qcommutator(&self, o: &Self) -> Self {
        assert_eq!(
            (self.rows, self.cols),
            (o.rows, o.cols),
            "dimension mismatch in q-commutator"
        );
        let q = Scalar::v_pow(2);
        let qi = Scalar::v_pow(-2);
        self.mul(o).scale(&q).sub(&o.mul(self).scale(&qi))
    }

    /// Evaluate entrywise at v = p.
    pub fn eval_v(&self, p: &Rat) -> Result<RatMatrix> {
        let mut entries = Vec::with_capacity(self.entries.len());
        for e in &self.entries {
            entries.push(e.eval_v(p)?);
        }
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            entries,
            site_dims: self.site_dims.clone(),
        })
    }

    /// Entrywise value at q = 1; Err when any entry has a genuine pole.
    pub fn limit_q_to_1(&self) -> Result<RatMatrix> {
        let mut entries = Vec::with_capacity(self.entries.len());
        for e in &self.entries {
            entries.push(e.limit_q_to_1()?);
        }
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            entries,
            site_dims: self.site_dims.clone(),
        })
    }
}

impl<F: Field> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix({}x{})", self.rows, self.cols)
    }
}

// ---------------------------------------------------------------------------
// Site embeddings
// ---------------------------------------------------------------------------

/// Embed an operator acting on the tensor positions `positions` (ascending,
/// 0-based) into the full product with identity elsewhere, by index
/// permutation.
pub fn embed_sites<F: Field>(
    op: &Matrix<F>,
    positions: &[usize],
    all_dims: &[usize],
) -> Result<Matrix<F>> {
    let sel_dims: Vec<usize> = positions.iter().map(|&p| all_dims[p]).collect();
    let sel_total: usize = sel_dims.iter().product();
    if op.rows != sel_total || op.cols != sel_total {
        return Err(Error::DimMismatch(format!(
            "operator is {}x{} but selected sites have total dimension {}",
            op.rows, op.cols, sel_total
        )));
    }
    if let Some(dims) = &op.site_dims {
        if dims != &sel_dims {
            return Err(Error::DimMismatch(format!(
                "operator site_dims {dims:?} do not match selected dims {sel_dims:?}"
            )));
        }
    }
    let total: usize = all_dims.iter().product();
    let n = all_dims.len();
    let mut out = Matrix::zeros(total, total);

    // decode/encode helpers, big-endian
    let decode = |mut idx: usize, dims: &[usize]| -> Vec<usize> {
        let mut out = vec![0; dims.len()];
        for i in (0..dims.len()).rev() {
            out[i] = idx % dims[i];
            idx /= dims[i];
        }
        out
    };
    let encode = |idx: &[usize], dims: &[usize]| -> usize {
        idx.iter().zip(dims).fold(0, |acc, (i, d)| acc * d + i)
    };

    for col in 0..total {
        let col_idx = decode(col, all_dims);
        let op_col = encode(
            &positions.iter().map(|&p| col_idx[p]).collect::<Vec<_>>(),
            &sel_dims,
        );
        for op_row in 0..sel_total {
            let val = &op[(op_row, op_col)];
            if val.is_zero() {
                continue;
            }
            let row_sel = decode(op_row, &sel_dims);
            let mut row_idx = col_idx.clone();
            for (k, &p) in positions.iter().enumerate() {
                row_idx[p] = row_sel[k];
            }
            let _ = n;
            out[(encode(&row_idx, all_dims), col)] = val.clone();
        }
    }
    Ok(out.with_site_dims(all_dims.to_vec()))
}

/// Conjugate a two-site operator by the flip M_a ⊗ M_b -> M_b ⊗ M_a.
pub fn flip_two_site<F: Field>(op: &Matrix<F>, da: usize, db: usize) -> Matrix<F> {
    assert_eq!(op.rows, da * db);
    let mut out = Matrix::zeros(da * db, da * db);
    for r in 0..op.rows {
        for c in 0..op.cols {
            if op[(r, c)].is_zero() {
                continue;
            }
            let (r1, r2) = (r / db, r % db);
            let (c1, c2) = (c / db, c % db);
            out[(r2 * da + r1, c2 * da + c1)] = op[(r, c)].clone();
        }
    }
    out.with_site_dims(vec![db, da])
}

// ---------------------------------------------------------------------------
// Rank / nullspace
// ---------------------------------------------------------------------------

/// Row echelon elimination in place; returns the rank.
/// Rows are given as dense vectors over the field.
pub fn row_reduce<F: Field>(rows: &mut Vec<Vec<F>>) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let cols = rows[0].len();
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows.len() {
            break;
        }
        let pivot = (rank..rows.len())
            .filter(|&r| !rows[r][col].is_zero())
            .min_by_key(|&r| rows[r][col].complexity());
        let Some(pivot) = pivot else { continue };
        rows.swap(rank, pivot);
        let inv = rows[rank][col].inv().unwrap();
        for e in rows[rank].iter_mut() {
            if !e.is_zero() {
                *e = e.mul_ref(&inv);
            }
        }
        let (head, tail) = rows.split_at_mut(rank + 1);
        let prow = &head[rank];
        for r in tail.iter_mut() {
            if r[col].is_zero() {
                continue;
            }
            let f = r[col].clone();
            for (a, b) in r.iter_mut().zip(prow) {
                if !b.is_zero() {
                    *a = a.sub_ref(&b.mul_ref(&f));
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Rank over the field by Gaussian elimination.
pub fn rank_of<F: Field>(m: &Matrix<F>) -> usize {
    let mut rows: Vec<Vec<F>> = (0..m.rows).map(|r| m.row(r).to_vec()).collect();
    row_reduce(&mut rows)
}

/// Basis of the right nullspace.
pub fn nullspace<F: Field>(m: &Matrix<F>) -> Vec<Vec<F>> {
    let mut rows: Vec<Vec<F>> = (0..m.rows).map(|r| m.row(r).to_vec()).collect();
    let rank = row_reduce(&mut rows);
    rows.truncate(rank);
    // reduced echelon: back-substitute
    let cols = m.cols;
    let mut lead = vec![usize::MAX; rank];
    for (i, row) in rows.iter().enumerate() {
        lead[i] = row.iter().position(|e| !e.is_zero()).unwrap();
    }
    for i in (0..rank).rev() {
        for r in 0..i {
            let f = rows[r][lead[i]].clone();
            if f.is_zero() {
                continue;
            }
            let (upper, lower) = rows.split_at_mut(i);
            let prow = &lower[0];
            for (a, b) in upper[r].iter_mut().zip(prow) {
                if !b.is_zero() {
                    *a = a.sub_ref(&b.mul_ref(&f));
                }
            }
        }
    }
    let lead_set: std::collections::HashSet<usize> = lead.iter().copied().collect();
    let free: Vec<usize> = (0..cols).filter(|c| !lead_set.contains(c)).collect();
    let mut basis = vec![];
    for &fc in &free {
        let mut v = vec![F::f_zero(); cols];
        v[fc] = F::f_one();
        for (i, row) in rows.iter().enumerate() {
            let c = row[fc].clone();
            if !c.is_zero() {
                v[lead[i]] = c.neg_ref();
            }
        }
        basis.push(v);
    }
    basis
}

/// Dimension of the right nullspace.
///
/// EXACT: symbolic elimination over Q(v). SAMPLED: elimination over Q at a
/// random sample point; a pole in an entry triggers a resample (up to 8),
/// and the value is exact for that sample (a lower bound on symbolic rank).
pub fn nullspace_dim(m: &ExactMatrix, mode: &Mode) -> Result<usize> {
    match mode {
        Mode::Exact => Ok(m.cols - rank_of(m)),
        Mode::Sampled(gen) => {
            let mut gen = gen.clone();
            for _ in 0..8 {
                let p = gen.next_point();
                match m.eval_v(&p.value) {
                    Ok(rm) => return Ok(rm.cols - rank_of(&rm)),
                    Err(Error::PoleAtSample) => continue,
                    Err(e) => return Err(e),
                }
            }
            Err(Error::PoleAtSample)
        }
    }
}

// ---------------------------------------------------------------------------
// Annihilating products
// ---------------------------------------------------------------------------

/// True iff prod_r (M - r I) = 0 exactly (identity in Q(v)).
///
/// Column-by-column with an early exit once a column is annihilated: the
/// factors commute (all are polynomials in M), so a vanished partial product
/// stays zero under the remaining factors. A sampled shadow picks the factor
/// order per column; the sample never affects the verdict.
pub fn annihilates(m: &ExactMatrix, roots: &[Scalar], gen: &mut SampleGen) -> bool {
    assert!(m.is_square());
    let n = m.rows;
    let shadow = sample_shadow(m, roots, gen);
    for col in 0..n {
        let mut u: Vec<Scalar> = (0..n)
            .map(|i| if i == col { Scalar::one() } else { Scalar::zero() })
            .collect();
        if let Some((ms, rs)) = &shadow {
            let mut us: Vec<Rat> = (0..n)
                .map(|i| if i == col { Rat::one() } else { Rat::zero() })
                .collect();
            let mut remaining: Vec<usize> = (0..roots.len()).collect();
            while !remaining.is_empty() {
                if u.iter().all(|e| e.is_zero()) {
                    break;
                }
                // greedy: factor whose sampled application leaves fewest nonzeros
                let (pos, &best) = remaining
                    .iter()
                    .enumerate()
                    .min_by_key(|(_, &k)| {
                        let w = apply_shifted_rat(ms, &rs[k], &us);
                        w.iter().filter(|x| !Zero::is_zero(*x)).count()
                    })
                    .unwrap();
                us = apply_shifted_rat(ms, &rs[best], &us);
                u = apply_shifted(m, &roots[best], &u);
                remaining.remove(pos);
            }
        } else {
            for r in roots {
                if u.iter().all(|e| e.is_zero()) {
                    break;
                }
                u = apply_shifted(m, r, &u);
            }
        }
        if !u.iter().all(|e| e.is_zero()) {
            return false;
        }
    }
    true
}

fn sample_shadow(
    m: &ExactMatrix,
    roots: &[Scalar],
    gen: &mut SampleGen,
) -> Option<(RatMatrix, Vec<Rat>)> {
    for _ in 0..8 {
        let p = gen.next_point();
        let ms = match m.eval_v(&p.value) {
            Ok(x) => x,
            Err(_) => continue,
        };
        let mut rs = Vec::with_capacity(roots.len());
        let mut ok = true;
        for r in roots {
            match r.eval_v(&p.value) {
                Ok(x) => rs.push(x),
                Err(_) => {
                    ok = false;
                    break;
                }
            }
        }
        if ok {
            return Some((ms, rs));
        }
    }
    None
}

/// (M - r I) u
fn apply_shifted(m: &ExactMatrix, r: &Scalar, u: &[Scalar]) -> Vec<Scalar> {
    let mut out = m.apply(u);
    for (o, x) in out.iter_mut().zip(u) {
        if !x.is_zero() {
            *o = o.sub(&r.mul(x));
        }
    }
    out
}

fn apply_shifted_rat(m: &RatMatrix, r: &Rat, u: &[Rat]) -> Vec<Rat> {
    let mut out = m.apply(u);
    for (o, x) in out.iter_mut().zip(u) {
        if !Zero::is_zero(x) {
            *o = &*o - &(r * x);
        }
    }
    out
}

/// prod_r (M - r I) at a sample point; returns None if every tried sample
/// hits a pole.
fn annihilates_at_sample(m: &ExactMatrix, roots: &[Scalar], gen: &mut SampleGen) -> Option<bool> {
    let (ms, rs) = sample_shadow(m, roots, gen)?;
    let n = ms.rows;
    for col in 0..n {
        let mut u: Vec<Rat> = (0..n)
            .map(|i| if i == col { Rat::one() } else { Rat::zero() })
            .collect();
        for r in &rs {
            if u.iter().all(|x| Zero::is_zero(x)) {
                break;
            }
            u = apply_shifted_rat(&ms, r, &u);
        }
        if !u.iter().all(|x| Zero::is_zero(x)) {
            return Some(false);
        }
    }
    Some(true)
}

/// True iff prod_{r in roots} (mat - r I) = 0; with `minimal`, additionally
/// verifies that omitting any single root breaks annihilation.
///
/// A nonzero value at a sample point is a rigorous proof of symbolic
/// nonvanishing, so the minimality side almost never needs symbolic work.
pub fn check_annihilating(
    mat: &ExactMatrix,
    roots: &[Scalar],
    minimal: bool,
    gen: &mut SampleGen,
) -> bool {
    // cheap rigorous refutation first
    if annihilates_at_sample(mat, roots, gen) == Some(false) {
        return false;
    }
    if !annihilates(mat, roots, gen) {
        return false;
    }
    if minimal {
        for omit in 0..roots.len() {
            let rest: Vec<Scalar> = roots
                .iter()
                .enumerate()
                .filter(|(i, _)| *i != omit)
                .map(|(_, r)| r.clone())
                .collect();
            // sampled-nonzero proves nonvanishing; sampled-zero falls back to exact
            let broken = match annihilates_at_sample(mat, &rest, gen) {
                Some(false) => true,
                _ => !annihilates(mat, &rest, gen),
            };
            if !broken {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::halfint::HalfInt;
    use crate::scalars::{chi, qplus, rat};

    fn sm(rows: usize, cols: usize, vals: &[i64]) -> ExactMatrix {
        Matrix::from_entries(
            rows,
            cols,
            vals.iter().map(|&v| Scalar::from_int(v)).collect(),
        )
    }

    #[test]
    fn kron_identities() {
        let i2: ExactMatrix = Matrix::identity(2);
        let i3: ExactMatrix = Matrix::identity(3);
        let k = i2.kron(&i3);
        assert_eq!(k, Matrix::identity(6));
        assert_eq!(k.site_dims, Some(vec![2, 3]));

        // diag(q, q^{-1}) ⊗ I2 has diagonal (q, q, q^{-1}, q^{-1})
        let mut d: ExactMatrix = Matrix::zeros(2, 2);
        d[(0, 0)] = Scalar::v_pow(2);
        d[(1, 1)] = Scalar::v_pow(-2);
        let k = d.kron(&i2);
        for (i, e) in [2i64, 2, -2, -2].iter().enumerate() {
            assert_eq!(k[(i, i)], Scalar::v_pow(*e));
        }
    }

    #[test]
    fn kron_mixed_product_law() {
        // kron(A,B) * kron(C,D) = kron(AC, BD)
        let a = sm(2, 2, &[1, 2, 0, 1]);
        let b = sm(2, 2, &[1, 0, 3, 1]);
        let c = sm(2, 2, &[0, 1, 1, 0]);
        let d = sm(2, 2, &[2, 0, 0, 5]);
        assert_eq!(a.kron(&b).mul(&c.kron(&d)), a.mul(&c).kron(&b.mul(&d)));
    }

    #[test]
    fn qcommutator_trivial_cases() {
        let i: ExactMatrix = Matrix::identity(3);
        // [I, I]_q = (q - q^{-1}) I
        let qc = i.qcommutator(&i);
        let qm = Scalar::v_pow(2).sub(&Scalar::v_pow(-2));
        assert_eq!(qc, Matrix::identity(3).scale(&qm));
        // [X, X]_q = (q - q^{-1}) X^2
        let x = sm(2, 2, &[1, 1, 0, 2]);
        assert_eq!(x.qcommutator(&x), x.mul(&x).scale(&qm));
    }

    #[test]
    fn embed_adjacent_and_disjoint() {
        let x = sm(4, 4, &[1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16])
            .with_site_dims(vec![2, 2]);
        let dims = [2usize, 2, 3];
        // {0,1} adjacent: kron(X, I3)
        let e = embed_sites(&x, &[0, 1], &dims).unwrap();
        let i3: ExactMatrix = Matrix::identity(3);
        assert_eq!(e, x.kron(&i3));
        // {1,2} adjacent with matching dims
        let y = sm(6, 6, &(0..36).map(|i| i as i64).collect::<Vec<_>>()).with_site_dims(vec![2, 3]);
        let e = embed_sites(&y, &[1, 2], &dims).unwrap();
        let i2: ExactMatrix = Matrix::identity(2);
        assert_eq!(e, i2.kron(&y));
        // disjoint supports commute: op on {0,2} vs op on {1}
        let z = sm(6, 6, &(0..36).map(|i| (i * i % 7) as i64).collect::<Vec<_>>())
            .with_site_dims(vec![2, 3]);
        let a = embed_sites(&z, &[0, 2], &[2, 2, 3]).unwrap();
        let w = sm(2, 2, &[0, 1, 1, 0]);
        let b = embed_sites(&w, &[1], &[2, 2, 3]).unwrap();
        assert!(a.commutator(&b).is_zero());
        // composition: embed(X)*embed(Y) = embed(XY) on {0,2}
        let z2 = sm(6, 6, &(0..36).map(|i| (3 * i % 5) as i64).collect::<Vec<_>>())
            .with_site_dims(vec![2, 3]);
        let lhs = embed_sites(&z, &[0, 2], &[2, 2, 3])
            .unwrap()
            .mul(&embed_sites(&z2, &[0, 2], &[2, 2, 3]).unwrap());
        let rhs = embed_sites(&z.mul(&z2), &[0, 2], &[2, 2, 3]).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn embed_dimension_mismatch() {
        let x = sm(3, 3, &[1, 0, 0, 0, 1, 0, 0, 0, 1]);
        assert!(embed_sites(&x, &[0], &[2, 2]).is_err());
    }

    #[test]
    fn nullspace_dims() {
        let z: ExactMatrix = Matrix::zeros(4, 4);
        assert_eq!(nullspace_dim(&z, &Mode::Exact).unwrap(), 4);
        let i: ExactMatrix = Matrix::identity(4);
        assert_eq!(nullspace_dim(&i, &Mode::Exact).unwrap(), 0);
        assert_eq!(nullspace_dim(&i, &Mode::sampled(3)).unwrap(), 0);
        // rank invariant under row scaling by nonzero scalars
        let mut m = sm(3, 4, &[1, 2, 3, 4, 2, 4, 6, 8, 0, 1, 1, 0]);
        assert_eq!(nullspace_dim(&m, &Mode::Exact).unwrap(), 2);
        for c in 0..4 {
            let e = m[(1, c)].clone();
            m[(1, c)] = e.mul(&chi(HalfInt::from_twice(3)));
        }
        assert_eq!(nullspace_dim(&m, &Mode::Exact).unwrap(), 2);
    }

    #[test]
    fn nullspace_vectors_annihilate() {
        let m = sm(3, 4, &[1, 2, 3, 4, 2, 4, 6, 8, 0, 1, 1, 0]);
        let ns = nullspace(&m);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            assert!(m.apply(v).iter().all(|e| e.is_zero()));
        }
    }

    #[test]
    fn inverse_round_trip() {
        let m = sm(3, 3, &[2, 1, 0, 1, 1, 0, 0, 3, 1]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(3));
        let s = sm(2, 2, &[1, 2, 2, 4]);
        assert!(s.inverse().is_err());
    }

    #[test]
    fn annihilating_identity() {
        let i: ExactMatrix = Matrix::identity(4);
        let mut gen = SampleGen::new(5);
        assert!(check_annihilating(&i, &[Scalar::one()], true, &mut gen));
        // diag(chi0, chi0, chi1): minimal roots {chi0, chi1}
        let mut d: ExactMatrix = Matrix::zeros(3, 3);
        d[(0, 0)] = chi(HalfInt::ZERO);
        d[(1, 1)] = chi(HalfInt::ZERO);
        d[(2, 2)] = chi(HalfInt::from_int(1));
        let roots = vec![chi(HalfInt::ZERO), chi(HalfInt::from_int(1))];
        assert!(check_annihilating(&d, &roots, true, &mut gen));
        // single root does not annihilate
        assert!(!check_annihilating(&d, &roots[..1], false, &mut gen));
        // non-minimal: extra root keeps annihilation but breaks minimality
        let extra = vec![
            chi(HalfInt::ZERO),
            chi(HalfInt::from_int(1)),
            chi(HalfInt::from_int(2)),
        ];
        assert!(check_annihilating(&d, &extra, false, &mut gen));
        assert!(!check_annihilating(&d, &extra, true, &mut gen));
        let _ = qplus();
        let _ = rat(1, 2);
    }
}

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::{RingSpec, Scalar};
use crate::{Error, Result};

/// Dense matrix over one of the coefficient rings, stored row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    ring: RingSpec,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(ring: RingSpec, rows: usize, cols: usize) -> Self {
        Matrix { ring, rows, cols, data: vec![ring.zero(); rows * cols] }
    }

    pub fn identity(ring: RingSpec, n: usize) -> Self {
        let mut m = Matrix::zeros(ring, n, n);
        for i in 0..n {
            m.set(i, i, ring.one());
        }
        m
    }

    /// Builds a matrix from rows; every row must have `cols` entries in `ring`.
    pub fn from_rows(ring: RingSpec, cols: usize, rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        let n = rows.len();
        for row in rows {
            if row.len() != cols {
                return Err(Error::DimensionMismatch { expected: cols, found: row.len() });
            }
            for x in row {
                check_ring(ring, &x)?;
                data.push(x);
            }
        }
        Ok(Matrix { ring, rows: n, cols, data })
    }

    pub fn from_i64(ring: RingSpec, rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows = rows.iter().map(|r| r.iter().map(|&v| ring.from_i64(v)).collect()).collect();
        Matrix::from_rows(ring, cols, rows).expect("rectangular input")
    }

    /// Builds a matrix whose columns are the given vectors (each of length `rows`).
    pub fn from_columns(ring: RingSpec, rows: usize, columns: &[Vec<Scalar>]) -> Self {
        let mut m = Matrix::zeros(ring, rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length");
            for (i, x) in col.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        m
    }

    pub fn ring(&self) -> RingSpec {
        self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.ring, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch { expected: self.cols, found: other.rows });
        }
        check_ring(self.ring, &other.ring.zero())?;
        let mut out = Matrix::zeros(self.ring, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let v = out.get(i, j) + &(a * b);
                        out.set(i, j, v);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch { expected: self.cols, found: v.len() });
        }
        Ok((0..self.rows)
            .map(|i| {
                let mut acc = self.ring.zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += &(a * b);
                    }
                }
                acc
            })
            .collect())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    /// Determinant of a square matrix (Bareiss elimination over ℤ, Gauss over fields).
    pub fn determinant(&self) -> Result<Scalar> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch { expected: self.rows, found: self.cols });
        }
        let n = self.rows;
        let mut a: Vec<Vec<Scalar>> = (0..n).map(|i| self.row(i).to_vec()).collect();
        let mut sign = false;
        let mut prev = self.ring.one();
        for k in 0..n {
            let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
                return Ok(self.ring.zero());
            };
            if p != k {
                a.swap(p, k);
                sign = !sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                    a[i][j] = v.checked_div(&prev).expect("Bareiss division is exact");
                }
                a[i][k] = self.ring.zero();
            }
            prev = a[k][k].clone();
        }
        let det = if n == 0 { self.ring.one() } else { a[n - 1][n - 1].clone() };
        Ok(if sign { -det } else { det })
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            f.write_str("[")?;
            for c in 0..self.cols {
                if c > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
            f.write_str("]\n")?;
        }
        Ok(())
    }
}

fn check_ring(ring: RingSpec, x: &Scalar) -> Result<()> {
    if x.ring() == ring {
        Ok(())
    } else {
        Err(Error::RingMismatch { left: alloc::format!("{ring}"), right: alloc::format!("{}", x.ring()) })
    }
}

fn int(x: &Scalar) -> &BigInt {
    x.as_integer().expect("integer scalar")
}

/// Column echelon form `M·U = H` with `U` invertible over the ring.
///
/// Rows are scanned top to bottom; pivot `k` sits at `(pivots[k], k)`, with zeros above
/// it in column `k` and pivot rows strictly increasing. Columns `pivots.len()..` of `H`
/// are zero. Over a field `H` is fully reduced (pivot 1, zeros elsewhere in pivot rows).
/// Over ℤ the pivots are positive and entries left of a pivot are reduced into
/// `0..pivot`, which is column Hermite normal form.
#[derive(Clone, Debug)]
pub struct ColumnEchelon {
    pub form: Matrix,
    pub transform: Matrix,
    pub pivots: Vec<usize>,
}

impl ColumnEchelon {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

struct Columns {
    ring: RingSpec,
    h: Vec<Vec<Scalar>>,
    u: Vec<Vec<Scalar>>,
}

impl Columns {
    fn swap(&mut self, a: usize, b: usize) {
        self.h.swap(a, b);
        self.u.swap(a, b);
    }

    fn scale(&mut self, j: usize, s: &Scalar) {
        for x in self.h[j].iter_mut().chain(self.u[j].iter_mut()) {
            if !x.is_zero() {
                *x = &*x * s;
            }
        }
    }

    /// `col[j] -= s * col[k]`
    fn axpy(&mut self, j: usize, k: usize, s: &Scalar) {
        if s.is_zero() {
            return;
        }
        for m in [&mut self.h, &mut self.u] {
            let (src, dst) = if j < k {
                let (lo, hi) = m.split_at_mut(k);
                (&hi[0], &mut lo[j])
            } else {
                let (lo, hi) = m.split_at_mut(j);
                (&lo[k], &mut hi[0])
            };
            for (d, x) in dst.iter_mut().zip(src) {
                if !x.is_zero() {
                    *d -= &(s * x);
                }
            }
        }
    }

    /// Replace `(col[k], col[j])` by `(a col[k] + b col[j], c col[k] + d col[j])`.
    fn combine(&mut self, k: usize, j: usize, coef: [&Scalar; 4]) {
        let [a, b, c, d] = coef;
        for m in [&mut self.h, &mut self.u] {
            let (lo, hi) = m.split_at_mut(j);
            let (ck, cj) = (&mut lo[k], &mut hi[0]);
            for (x, y) in ck.iter_mut().zip(cj.iter_mut()) {
                if x.is_zero() && y.is_zero() {
                    continue;
                }
                let nx = &(a * &*x) + &(b * &*y);
                let ny = &(c * &*x) + &(d * &*y);
                *x = nx;
                *y = ny;
            }
        }
    }

    fn eliminate_field(&mut self, r: usize, pc: usize) -> bool {
        let Some(j) = (pc..self.h.len()).find(|&j| !self.h[j][r].is_zero()) else {
            return false;
        };
        self.swap(j, pc);
        let inv = self.h[pc][r].inv().expect("field element");
        self.scale(pc, &inv);
        for j in 0..self.h.len() {
            if j != pc && !self.h[j][r].is_zero() {
                let s = self.h[j][r].clone();
                self.axpy(j, pc, &s);
            }
        }
        true
    }

    fn eliminate_integer(&mut self, r: usize, pc: usize) -> bool {
        let ring = self.ring;
        let n = self.h.len();
        let Some(start) = (pc..n).filter(|&j| !self.h[j][r].is_zero()).min_by_key(|&j| int(&self.h[j][r]).abs()) else {
            return false;
        };
        self.swap(start, pc);
        for j in pc + 1..n {
            if self.h[j][r].is_zero() {
                continue;
            }
            let a = int(&self.h[pc][r]).clone();
            let b = int(&self.h[j][r]).clone();
            if b.is_multiple_of(&a) {
                let q = ring.from_bigint(&(&b / &a));
                self.axpy(j, pc, &q);
                continue;
            }
            let eg = a.extended_gcd(&b);
            let g = eg.gcd;
            let coef = [
                ring.from_bigint(&eg.x),
                ring.from_bigint(&eg.y),
                ring.from_bigint(&-(&b / &g)),
                ring.from_bigint(&(&a / &g)),
            ];
            // new col[pc] = x col[pc] + y col[j], new col[j] = -b/g col[pc] + a/g col[j]
            self.combine(pc, j, [&coef[0], &coef[1], &coef[2], &coef[3]]);
        }
        if int(&self.h[pc][r]).is_negative() {
            self.scale(pc, &ring.from_i64(-1));
        }
        let piv = int(&self.h[pc][r]).clone();
        for j in 0..pc {
            let q = int(&self.h[j][r]).div_floor(&piv);
            if !q.is_zero() {
                self.axpy(j, pc, &ring.from_bigint(&q));
            }
        }
        true
    }
}

pub fn column_echelon(m: &Matrix) -> ColumnEchelon {
    let ring = m.ring;
    let n = m.cols;
    let mut work = Columns {
        ring,
        h: (0..n).map(|c| m.column(c)).collect(),
        u: (0..n).map(|c| (0..n).map(|r| if r == c { ring.one() } else { ring.zero() }).collect()).collect(),
    };
    let mut pivots = Vec::new();
    for r in 0..m.rows {
        let pc = pivots.len();
        if pc == n {
            break;
        }
        let found = if ring.is_field() { work.eliminate_field(r, pc) } else { work.eliminate_integer(r, pc) };
        if found {
            pivots.push(r);
        }
    }
    ColumnEchelon {
        form: Matrix::from_columns(ring, m.rows, &work.h),
        transform: Matrix::from_columns(ring, n, &work.u),
        pivots,
    }
}

pub fn rank(m: &Matrix) -> usize {
    column_echelon(m).rank()
}

/// Canonical basis of the row space spanned by `vectors` (each of length `dim`):
/// reduced row echelon over a field, row Hermite normal form over ℤ. Pivots are the
/// leftmost nonzero coordinates and appear in increasing order.
pub fn row_canonical(ring: RingSpec, dim: usize, vectors: &[Vec<Scalar>]) -> Vec<Vec<Scalar>> {
    let m = Matrix::from_columns(ring, dim, vectors);
    let ce = column_echelon(&m);
    (0..ce.rank()).map(|k| ce.form.column(k)).collect()
}

/// Basis of `{v : M v = 0}`.
///
/// Over a field the basis is in reduced row echelon form. Over ℤ it spans the saturated
/// kernel lattice (every integral kernel vector is an integral combination) and is
/// returned in row Hermite normal form.
pub fn kernel_basis(m: &Matrix) -> Vec<Vec<Scalar>> {
    let ce = column_echelon(m);
    let kernel: Vec<Vec<Scalar>> = (ce.rank()..m.cols).map(|c| ce.transform.column(c)).collect();
    row_canonical(m.ring, m.cols, &kernel)
}

/// A solution of `M x = b` over the ring (integrally over ℤ), or `None`.
pub fn membership(m: &Matrix, b: &[Scalar]) -> Result<Option<Vec<Scalar>>> {
    if b.len() != m.rows {
        return Err(Error::DimensionMismatch { expected: m.rows, found: b.len() });
    }
    for x in b {
        check_ring(m.ring, x)?;
    }
    let ce = column_echelon(m);
    Ok(solve_echelon(&ce, b))
}

pub(crate) fn solve_echelon(ce: &ColumnEchelon, b: &[Scalar]) -> Option<Vec<Scalar>> {
    let h = &ce.form;
    let ring = h.ring;
    let mut residual = b.to_vec();
    let mut y = vec![ring.zero(); h.cols];
    for (k, &r) in ce.pivots.iter().enumerate() {
        if residual[r].is_zero() {
            continue;
        }
        let q = residual[r].checked_div(h.get(r, k))?;
        for (i, slot) in residual.iter_mut().enumerate().skip(r) {
            let e = h.get(i, k);
            if !e.is_zero() {
                *slot -= &(&q * e);
            }
        }
        y[k] = q;
    }
    if residual.iter().any(|x| !x.is_zero()) {
        return None;
    }
    Some(ce.transform.mul_vec(&y).expect("square transform"))
}

/// Smith normal form `U·M·V = D` over ℤ.
#[derive(Clone, Debug)]
pub struct Smith {
    pub u: Matrix,
    pub d: Matrix,
    pub v: Matrix,
    /// Diagonal of `D`, `min(rows, cols)` entries, each dividing the next.
    pub divisors: Vec<BigInt>,
}

pub fn smith_form(m: &Matrix) -> Smith {
    assert_eq!(m.ring, RingSpec::Integers, "Smith form is computed over the integers");
    let ring = m.ring;
    let (rows, cols) = (m.rows, m.cols);
    let mut d: Vec<Vec<BigInt>> = (0..rows).map(|r| m.row(r).iter().map(|x| int(x).clone()).collect()).collect();
    let ident = |n: usize| -> Vec<Vec<BigInt>> {
        (0..n).map(|i| (0..n).map(|j| BigInt::from((i == j) as i32)).collect()).collect()
    };
    let mut u = ident(rows);
    let mut v = ident(cols);

    fn row_axpy(a: &mut [Vec<BigInt>], dst: usize, src: usize, q: &BigInt) {
        let s = a[src].clone();
        for (x, y) in a[dst].iter_mut().zip(&s) {
            *x -= q * y;
        }
    }
    fn col_axpy(a: &mut [Vec<BigInt>], dst: usize, src: usize, q: &BigInt) {
        for row in a.iter_mut() {
            let y = row[src].clone();
            row[dst] -= q * y;
        }
    }
    fn col_swap(a: &mut [Vec<BigInt>], i: usize, j: usize) {
        for row in a.iter_mut() {
            row.swap(i, j);
        }
    }

    let diag = rows.min(cols);
    for t in 0..diag {
        loop {
            let mut best: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    if !d[i][j].is_zero() && best.is_none_or(|(bi, bj)| d[i][j].abs() < d[bi][bj].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else { break };
            d.swap(t, pi);
            u.swap(t, pi);
            col_swap(&mut d, t, pj);
            col_swap(&mut v, t, pj);

            let mut clean = true;
            for i in t + 1..rows {
                if d[i][t].is_zero() {
                    continue;
                }
                let q = d[i][t].div_floor(&d[t][t]);
                row_axpy(&mut d, i, t, &q);
                row_axpy(&mut u, i, t, &q);
                clean &= d[i][t].is_zero();
            }
            for j in t + 1..cols {
                if d[t][j].is_zero() {
                    continue;
                }
                let q = d[t][j].div_floor(&d[t][t]);
                col_axpy(&mut d, j, t, &q);
                col_axpy(&mut v, j, t, &q);
                clean &= d[t][j].is_zero();
            }
            if !clean {
                continue;
            }
            let bad = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !d[i][j].is_multiple_of(&d[t][t])));
            match bad {
                Some(i) => {
                    let minus_one = BigInt::from(-1);
                    row_axpy(&mut d, t, i, &minus_one);
                    row_axpy(&mut u, t, i, &minus_one);
                }
                None => break,
            }
        }
        if d[t][t].is_negative() {
            for x in d[t].iter_mut().chain(u[t].iter_mut()) {
                *x = -&*x;
            }
        }
    }

    let to_matrix = |a: &[Vec<BigInt>], c: usize| {
        Matrix::from_rows(ring, c, a.iter().map(|r| r.iter().map(|x| ring.from_bigint(x)).collect()).collect())
            .expect("rectangular")
    };
    let divisors = (0..diag).map(|t| d[t][t].clone()).collect();
    Smith { u: to_matrix(&u, rows), d: to_matrix(&d, cols), v: to_matrix(&v, cols), divisors }
}

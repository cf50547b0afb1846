//! Exact dense linear algebra over prime fields `F_p` (p odd) and over the integers.
//!
//! Everything here is plain Gaussian elimination. Row reduction is incremental
//! ([`Echelon`]) so that large stacked systems such as commutant equations can be
//! fed block by block without ever materialising the full coefficient matrix.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut k = 2u64;
    while k * k <= n {
        if n % k == 0 {
            return false;
        }
        k += 1;
    }
    true
}

/// Arithmetic in `F_p` for an odd prime `p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if p == 2 || !is_prime(p) || p > u32::MAX as u64 {
            return Err(Error::InvalidCharacteristic(p));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn reduce(&self, x: i64) -> u64 {
        x.rem_euclid(self.p as i64) as u64
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    #[inline]
    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    pub fn inv(&self, a: u64) -> u64 {
        assert!(a % self.p != 0, "inverse of zero in F_{}", self.p);
        self.pow(a, self.p - 2)
    }

    pub fn pow(&self, mut a: u64, mut e: u64) -> u64 {
        let mut acc = 1;
        a %= self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        acc
    }

    /// Symmetric lift into `(-p/2, p/2]`, handy for printing.
    pub fn lift(&self, a: u64) -> i64 {
        if a > self.p / 2 {
            a as i64 - self.p as i64
        } else {
            a as i64
        }
    }
}

/// Dense row-major matrix over `F_p`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FpMatrix {
    field: PrimeField,
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

impl fmt::Debug for FpMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "FpMatrix over F_{} ({}x{})", self.field.p, self.rows, self.cols)?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", self.row(r))?;
        }
        Ok(())
    }
}

impl FpMatrix {
    pub fn zeros(field: PrimeField, rows: usize, cols: usize) -> Self {
        FpMatrix { field, rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(field: PrimeField, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    pub fn from_rows(field: PrimeField, rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut m = Self::zeros(field, r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged rows");
            for (j, &x) in row.iter().enumerate() {
                m.data[i * c + j] = field.reduce(x);
            }
        }
        m
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn modulus(&self) -> u64 {
        self.field.p
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u64 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u64) {
        self.data[r * self.cols + c] = v % self.field.p;
    }

    pub fn row(&self, r: usize) -> &[u64] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|r| (0..self.cols).all(|c| self.get(r, c) == u64::from(r == c)))
    }

    fn check_same_field(&self, other: &FpMatrix) -> Result<()> {
        if self.field != other.field {
            return Err(Error::ParameterMismatch(format!(
                "moduli {} and {}",
                self.field.p, other.field.p
            )));
        }
        Ok(())
    }

    pub fn mul(&self, other: &FpMatrix) -> Result<FpMatrix> {
        self.check_same_field(other)?;
        if self.cols != other.rows {
            return Err(Error::ParameterMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = self.field;
        let mut out = FpMatrix::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b != 0 {
                        let idx = i * other.cols + j;
                        out.data[idx] = f.add(out.data[idx], f.mul(a, b));
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &FpMatrix) -> Result<FpMatrix> {
        self.check_same_field(other)?;
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::ParameterMismatch("shape mismatch in addition".into()));
        }
        let f = self.field;
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| f.add(a, b)).collect();
        Ok(FpMatrix { field: f, rows: self.rows, cols: self.cols, data })
    }

    pub fn neg(&self) -> FpMatrix {
        let f = self.field;
        FpMatrix {
            field: f,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&a| f.neg(a)).collect(),
        }
    }

    pub fn transpose(&self) -> FpMatrix {
        let mut out = FpMatrix::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.data[c * self.rows + r] = self.get(r, c);
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[u64]) -> Vec<u64> {
        assert_eq!(v.len(), self.cols);
        let f = self.field;
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .fold(0, |acc, (&a, &b)| f.add(acc, f.mul(a, b)))
            })
            .collect()
    }

    pub fn echelon(&self) -> Echelon {
        let mut e = Echelon::new(self.field, self.cols);
        for r in 0..self.rows {
            e.push(self.row(r).to_vec());
        }
        e
    }

    pub fn rank(&self) -> usize {
        self.echelon().rank()
    }

    /// Reduced row echelon form together with the pivot columns (ascending).
    pub fn rref(&self) -> (FpMatrix, Vec<usize>) {
        let rows = self.echelon().into_reduced_rows();
        let pivots: Vec<usize> =
            rows.iter().map(|r| r.iter().position(|&x| x != 0).unwrap()).collect();
        let mut m = FpMatrix::zeros(self.field, rows.len(), self.cols);
        for (i, r) in rows.into_iter().enumerate() {
            m.data[i * self.cols..(i + 1) * self.cols].copy_from_slice(&r);
        }
        (m, pivots)
    }

    /// Basis of `{x : A x = 0}`, one vector per free column in ascending order.
    pub fn nullspace(&self) -> Vec<Vec<u64>> {
        self.echelon().nullspace()
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }
}

/// Incremental row echelon form over `F_p`.
///
/// Every stored row is normalised to have leading coefficient 1 and is zero
/// left of its pivot.
#[derive(Clone, Debug)]
pub struct Echelon {
    field: PrimeField,
    cols: usize,
    rows: Vec<Vec<u64>>,
    pivot_row: Vec<Option<usize>>,
}

impl Echelon {
    pub fn new(field: PrimeField, cols: usize) -> Self {
        Echelon { field, cols, rows: Vec::new(), pivot_row: vec![None; cols] }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.cols
    }

    /// Reduce `row` against the stored rows; returns true if it was independent.
    pub fn push(&mut self, mut row: Vec<u64>) -> bool {
        assert_eq!(row.len(), self.cols);
        let f = self.field;
        let mut lead = None;
        for c in 0..self.cols {
            let x = row[c];
            if x == 0 {
                continue;
            }
            match self.pivot_row[c] {
                Some(pr) => {
                    let prow = &self.rows[pr];
                    for k in c..self.cols {
                        if prow[k] != 0 {
                            row[k] = f.sub(row[k], f.mul(x, prow[k]));
                        }
                    }
                }
                None => {
                    lead = Some(c);
                    break;
                }
            }
        }
        let Some(c) = lead else { return false };
        // entries right of `c` may still hit existing pivots; that is fine for
        // an echelon form, full reduction happens in `into_reduced_rows`
        let inv = f.inv(row[c]);
        for x in row[c..].iter_mut() {
            *x = f.mul(*x, inv);
        }
        self.pivot_row[c] = Some(self.rows.len());
        self.rows.push(row);
        true
    }

    pub fn into_reduced_rows(self) -> Vec<Vec<u64>> {
        let f = self.field;
        let mut order: Vec<(usize, usize)> = self
            .pivot_row
            .iter()
            .enumerate()
            .filter_map(|(c, r)| r.map(|r| (c, r)))
            .collect();
        order.sort();
        let mut rows: Vec<Vec<u64>> = order.iter().map(|&(_, r)| self.rows[r].clone()).collect();
        let pivots: Vec<usize> = order.iter().map(|&(c, _)| c).collect();
        // back substitution, last pivot first
        for i in (0..rows.len()).rev() {
            let pc = pivots[i];
            let (head, tail) = rows.split_at_mut(i);
            let prow = &tail[0];
            for r in head.iter_mut() {
                let x = r[pc];
                if x != 0 {
                    for k in pc..prow.len() {
                        if prow[k] != 0 {
                            r[k] = f.sub(r[k], f.mul(x, prow[k]));
                        }
                    }
                }
            }
        }
        rows
    }

    pub fn nullspace(self) -> Vec<Vec<u64>> {
        let f = self.field;
        let cols = self.cols;
        let rows = self.into_reduced_rows();
        let pivots: Vec<usize> =
            rows.iter().map(|r| r.iter().position(|&x| x != 0).unwrap()).collect();
        let mut is_pivot = vec![false; cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        (0..cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = vec![0; cols];
                v[free] = 1;
                for (r, &pc) in rows.iter().zip(&pivots) {
                    v[pc] = f.neg(r[free]);
                }
                v
            })
            .collect()
    }
}

/// Basis of `{X : X a_i = b_i X for all i}`; `X` has shape `dim(b) x dim(a)`.
///
/// The unknown `X[r][c]` is variable `r * dim(a) + c`; each basis element is
/// returned as a matrix, in the deterministic order of [`Echelon::nullspace`].
pub fn solve_commutant(gens_a: &[FpMatrix], gens_b: &[FpMatrix]) -> Result<Vec<FpMatrix>> {
    let field = match (gens_a.first(), gens_b.first()) {
        (Some(a), _) => a.field,
        (None, Some(b)) => b.field,
        (None, None) => {
            return Err(Error::ParameterMismatch("commutant of an empty family needs a size".into()))
        }
    };
    if gens_a.len() != gens_b.len() {
        return Err(Error::ParameterMismatch("generator lists differ in length".into()));
    }
    let da = gens_a[0].rows;
    let db = gens_b[0].rows;
    for (a, b) in gens_a.iter().zip(gens_b) {
        if a.field != field || b.field != field {
            return Err(Error::ParameterMismatch("mixed moduli".into()));
        }
        if !a.is_square() || !b.is_square() || a.rows != da || b.rows != db {
            return Err(Error::ParameterMismatch("generator shapes differ".into()));
        }
    }
    let nvars = da * db;
    let mut ech = Echelon::new(field, nvars);
    'outer: for (a, b) in gens_a.iter().zip(gens_b) {
        for r in 0..db {
            for c in 0..da {
                // sum_k X[r,k] a[k,c] - sum_k b[r,k] X[k,c]
                let mut row = vec![0u64; nvars];
                for k in 0..da {
                    let x = a.get(k, c);
                    if x != 0 {
                        let v = r * da + k;
                        row[v] = field.add(row[v], x);
                    }
                }
                for k in 0..db {
                    let x = b.get(r, k);
                    if x != 0 {
                        let v = k * da + c;
                        row[v] = field.sub(row[v], x);
                    }
                }
                ech.push(row);
                if ech.is_full() {
                    break 'outer;
                }
            }
        }
    }
    Ok(ech
        .nullspace()
        .into_iter()
        .map(|v| FpMatrix { field, rows: db, cols: da, data: v })
        .collect())
}

/// Dimension of the joint commutant `{X : X g = g X}` of `size x size` matrices.
pub fn commutant_dimension(field: PrimeField, size: usize, gens: &[FpMatrix]) -> Result<usize> {
    if gens.is_empty() {
        return Ok(size * size);
    }
    if gens.iter().any(|g| g.rows != size || g.field != field) {
        return Err(Error::ParameterMismatch("generator does not match the stated size".into()));
    }
    Ok(solve_commutant(gens, gens)?.len())
}

/// Dense row-major integer matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMatrix ({}x{})", self.rows, self.cols)?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", &self.data[r * self.cols..(r + 1) * self.cols])?;
        }
        Ok(())
    }
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend_from_slice(row);
        }
        IntMatrix { rows: r, cols: c, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: i64) {
        self.data[r * self.cols + c] = v;
    }

    #[inline]
    pub fn add_at(&mut self, r: usize, c: usize, v: i64) {
        self.data[r * self.cols + c] += v;
    }

    pub fn entries(&self) -> &[i64] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != other.rows {
            return Err(Error::ParameterMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b != 0 {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn scale(&self, k: i64) -> IntMatrix {
        IntMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|&x| x * k).collect() }
    }

    pub fn add(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::ParameterMismatch("shape mismatch in addition".into()));
        }
        Ok(IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn reduce(&self, field: PrimeField) -> FpMatrix {
        FpMatrix {
            field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&x| field.reduce(x)).collect(),
        }
    }

    /// Rank over the rationals, by fraction-free (Bareiss) elimination.
    pub fn rank(&self) -> usize {
        let mut m: Vec<Vec<BigInt>> = (0..self.rows)
            .map(|r| (0..self.cols).map(|c| BigInt::from(self.get(r, c))).collect())
            .collect();
        let mut rank = 0;
        let mut prev = BigInt::from(1);
        for c in 0..self.cols {
            let Some(piv) = (rank..self.rows).find(|&r| !m[r][c].is_zero()) else {
                continue;
            };
            m.swap(rank, piv);
            for r in rank + 1..self.rows {
                for k in c + 1..self.cols {
                    let v = (&m[rank][c] * &m[r][k] - &m[r][c] * &m[rank][k]) / &prev;
                    m[r][k] = v;
                }
                m[r][c] = BigInt::zero();
            }
            prev = m[rank][c].clone();
            rank += 1;
            if rank == self.rows {
                break;
            }
        }
        rank
    }
}

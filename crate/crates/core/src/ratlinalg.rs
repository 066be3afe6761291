//! Exact rational dense linear algebra.
//!
//! Matrices here are tiny (a few dozen rows at most) so everything is dense
//! row-major storage over [`BigRational`]. Gaussian elimination always picks
//! the first nonzero pivot in column order, which makes every basis and every
//! particular solution reproducible bit-for-bit.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// Shorthand for an integral rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Integer slice lifted to rationals.
pub fn int_vector(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&x| rat(x)).collect()
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}

pub fn is_zero_vector(v: &[Rational]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub(crate) fn add_scaled(target: &mut [Rational], source: &[Rational], factor: &Rational) {
    for (t, s) in target.iter_mut().zip(source) {
        *t += s * factor;
    }
}

/// Dense matrix of exact rationals, row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix { rows, cols, data: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    /// Builds a matrix from row vectors. All rows must have equal length.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let n_rows = rows.len();
        let mut data = Vec::with_capacity(n_rows * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::DimensionMismatch {
                    context: "matrix row length",
                    expected: cols,
                    found: row.len(),
                });
            }
            data.extend(row);
        }
        Ok(RationalMatrix { rows: n_rows, cols, data })
    }

    pub fn from_int_rows<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self> {
        Self::from_rows(rows.iter().map(|r| int_vector(r.as_ref())).collect())
    }

    /// Builds a `rows x columns.len()` matrix whose j-th column is `columns[j]`.
    pub fn from_columns(rows: usize, columns: &[Vec<Rational>]) -> Result<Self> {
        let mut m = Self::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            if col.len() != rows {
                return Err(Error::DimensionMismatch {
                    context: "matrix column length",
                    expected: rows,
                    found: col.len(),
                });
            }
            for (i, x) in col.iter().enumerate() {
                m[(i, j)] = x.clone();
            }
        }
        Ok(m)
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

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<Rational>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (i + 1..self.cols).all(|j| self[(i, j)] == self[(j, i)]))
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let x = &self[(i, j)];
                    if i == j { x.is_one() } else { x.is_zero() }
                })
            })
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn checked_mul(&self, rhs: &RationalMatrix) -> Result<RationalMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch {
                context: "matrix product",
                expected: self.cols,
                found: rhs.rows,
            });
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                context: "matrix-vector product",
                expected: self.cols,
                found: v.len(),
            });
        }
        Ok((0..self.rows).map(|i| dot(self.row(i), v)).collect())
    }

    /// Exact `k`-th power by repeated squaring; `M^0` is the identity.
    pub fn pow(&self, k: u32) -> Result<RationalMatrix> {
        if !self.is_square() {
            return Err(Error::NotSquare { context: "matrix power", rows: self.rows, cols: self.cols });
        }
        let mut result = Self::identity(self.rows);
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        Ok(result)
    }

    pub fn scale(&self, factor: &Rational) -> RationalMatrix {
        RationalMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * factor).collect(),
        }
    }

    /// Block diagonal `self ⊕ other`.
    pub fn direct_sum(&self, other: &RationalMatrix) -> RationalMatrix {
        let mut m = Self::zeros(self.rows + other.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m[(i, j)] = self[(i, j)].clone();
            }
        }
        for i in 0..other.rows {
            for j in 0..other.cols {
                m[(self.rows + i, self.cols + j)] = other[(i, j)].clone();
            }
        }
        m
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hcat(&self, other: &RationalMatrix) -> Result<RationalMatrix> {
        if self.rows != other.rows {
            return Err(Error::DimensionMismatch {
                context: "horizontal concatenation",
                expected: self.rows,
                found: other.rows,
            });
        }
        let mut m = Self::zeros(self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m[(i, j)] = self[(i, j)].clone();
            }
            for j in 0..other.cols {
                m[(i, self.cols + j)] = other[(i, j)].clone();
            }
        }
        Ok(m)
    }

    /// Vertical concatenation.
    pub fn vcat(&self, other: &RationalMatrix) -> Result<RationalMatrix> {
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch {
                context: "vertical concatenation",
                expected: self.cols,
                found: other.cols,
            });
        }
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Ok(RationalMatrix { rows: self.rows + other.rows, cols: self.cols, data })
    }

    pub fn rank(&self) -> usize {
        Rref::of(self).pivots.len()
    }

    /// Basis of the null space, one vector per free column.
    pub fn kernel_basis(&self) -> Vec<Vec<Rational>> {
        Rref::of(self).kernel_basis()
    }
}

impl Index<(usize, usize)> for RationalMatrix {
    type Output = Rational;

    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of bounds");
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for RationalMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of bounds");
        &mut self.data[i * self.cols + j]
    }
}

/// Panics on a shape mismatch; use [`RationalMatrix::checked_mul`] for fallible code paths.
impl Mul for &RationalMatrix {
    type Output = RationalMatrix;

    fn mul(self, rhs: &RationalMatrix) -> RationalMatrix {
        self.checked_mul(rhs).expect("matrix product shape mismatch")
    }
}

impl Add for &RationalMatrix {
    type Output = RationalMatrix;

    fn add(self, rhs: &RationalMatrix) -> RationalMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix sum shape mismatch");
        RationalMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &RationalMatrix {
    type Output = RationalMatrix;

    fn sub(self, rhs: &RationalMatrix) -> RationalMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix difference shape mismatch");
        RationalMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &RationalMatrix {
    type Output = RationalMatrix;

    fn neg(self) -> RationalMatrix {
        RationalMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| -a).collect() }
    }
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalMatrix{}", self)
    }
}

impl fmt::Display for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for (j, x) in self.row(i).iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// Exact `k`-th power of a square matrix.
pub fn matrix_power(m: &RationalMatrix, k: u32) -> Result<RationalMatrix> {
    m.pow(k)
}

/// Reduced row echelon form together with its pivot columns.
struct Rref {
    matrix: RationalMatrix,
    pivots: Vec<usize>,
}

impl Rref {
    fn of(m: &RationalMatrix) -> Rref {
        let mut a = m.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..a.cols {
            if r == a.rows {
                break;
            }
            let Some(p) = (r..a.rows).find(|&i| !a[(i, c)].is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..a.cols {
                    a.data.swap(p * a.cols + j, r * a.cols + j);
                }
            }
            let inv = a[(r, c)].recip();
            for j in c..a.cols {
                a[(r, j)] *= &inv;
            }
            let pivot_row = a.row(r).to_vec();
            for i in 0..a.rows {
                if i != r && !a[(i, c)].is_zero() {
                    let f = -a[(i, c)].clone();
                    let start = i * a.cols;
                    add_scaled(&mut a.data[start..start + a.cols], &pivot_row, &f);
                }
            }
            pivots.push(c);
            r += 1;
        }
        Rref { matrix: a, pivots }
    }

    fn kernel_basis(&self) -> Vec<Vec<Rational>> {
        let n = self.matrix.cols;
        let free: Vec<usize> = (0..n).filter(|c| !self.pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![Rational::zero(); n];
                v[f] = Rational::one();
                for (r, &p) in self.pivots.iter().enumerate() {
                    v[p] = -self.matrix[(r, f)].clone();
                }
                v
            })
            .collect()
    }
}

/// Greedy maximal independent subset of `vectors`, in input order.
pub fn independent_subset(vectors: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    independent_indices(vectors).into_iter().map(|i| vectors[i].clone()).collect()
}

/// Indices of the vectors kept by a greedy left-to-right independence scan.
pub fn independent_indices(vectors: &[Vec<Rational>]) -> Vec<usize> {
    let mut echelon: Vec<(usize, Vec<Rational>)> = Vec::new();
    let mut kept = Vec::new();
    for (idx, v) in vectors.iter().enumerate() {
        let mut w = v.clone();
        for (p, row) in &echelon {
            if !w[*p].is_zero() {
                let f = -w[*p].clone();
                add_scaled(&mut w, row, &f);
            }
        }
        if let Some(p) = w.iter().position(|x| !x.is_zero()) {
            let inv = w[p].recip();
            w.iter_mut().for_each(|x| *x *= &inv);
            for (_, row) in echelon.iter_mut() {
                if !row[p].is_zero() {
                    let f = -row[p].clone();
                    add_scaled(row, &w, &f);
                }
            }
            echelon.push((p, w));
            kept.push(idx);
        }
    }
    kept
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolveStatus {
    Unique,
    Affine,
    Inconsistent,
}

/// Full solution set of `A x = b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    pub status: SolveStatus,
    /// Solution with all free variables set to zero; `None` when inconsistent.
    pub particular: Option<Vec<Rational>>,
    pub kernel_basis: Vec<Vec<Rational>>,
}

impl SolveResult {
    pub fn is_consistent(&self) -> bool {
        self.status != SolveStatus::Inconsistent
    }
}

pub fn solve_linear(a: &RationalMatrix, b: &[Rational]) -> Result<SolveResult> {
    if a.rows() != b.len() {
        return Err(Error::DimensionMismatch {
            context: "linear system right-hand side",
            expected: a.rows(),
            found: b.len(),
        });
    }
    let n = a.cols();
    let rhs = RationalMatrix::from_columns(a.rows(), &[b.to_vec()])?;
    let rref = Rref::of(&a.hcat(&rhs)?);
    if rref.pivots.last() == Some(&n) {
        return Ok(SolveResult {
            status: SolveStatus::Inconsistent,
            particular: None,
            kernel_basis: Vec::new(),
        });
    }
    let mut particular = vec![Rational::zero(); n];
    for (r, &p) in rref.pivots.iter().enumerate() {
        particular[p] = rref.matrix[(r, n)].clone();
    }
    // Kernel of A alone: drop the augmented column from the reduced form.
    let coeff = Rref {
        matrix: RationalMatrix::from_rows(
            (0..rref.matrix.rows()).map(|i| rref.matrix.row(i)[..n].to_vec()).collect(),
        )?,
        pivots: rref.pivots.clone(),
    };
    let kernel_basis = if n == 0 { Vec::new() } else { coeff.kernel_basis() };
    let status = if kernel_basis.is_empty() { SolveStatus::Unique } else { SolveStatus::Affine };
    Ok(SolveResult { status, particular: Some(particular), kernel_basis })
}

/// Counts of positive, negative and zero entries after congruence diagonalization.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Inertia {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
}

impl Inertia {
    pub fn signature(&self) -> i64 {
        self.positive as i64 - self.negative as i64
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.zero == 0
    }
}

/// Inertia of a symmetric matrix via symmetric Gaussian elimination.
pub fn inertia(s: &RationalMatrix) -> Result<Inertia> {
    if !s.is_square() {
        return Err(Error::NotSquare { context: "symmetric form", rows: s.rows(), cols: s.cols() });
    }
    if !s.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let n = s.rows();
    let mut a = s.clone();
    let mut out = Inertia::default();
    for i in 0..n {
        if a[(i, i)].is_zero() {
            if let Some(j) = (i + 1..n).find(|&j| !a[(j, j)].is_zero()) {
                swap_symmetric(&mut a, i, j);
            } else if let Some(j) = (i + 1..n).find(|&j| !a[(i, j)].is_zero()) {
                // all remaining diagonal entries vanish, so row_i + row_j gives pivot 2*a_ij
                add_symmetric(&mut a, i, j);
            } else {
                out.zero += 1;
                continue;
            }
        }
        let pivot = a[(i, i)].clone();
        for j in i + 1..n {
            if a[(j, i)].is_zero() {
                continue;
            }
            let f = -(&a[(j, i)] / &pivot);
            for c in i..n {
                let v = &a[(i, c)] * &f;
                a[(j, c)] += v;
            }
            for r in i..n {
                let v = &a[(r, i)] * &f;
                a[(r, j)] += v;
            }
        }
        if pivot.is_positive() {
            out.positive += 1;
        } else {
            out.negative += 1;
        }
    }
    Ok(out)
}

fn swap_symmetric(a: &mut RationalMatrix, i: usize, j: usize) {
    let n = a.rows();
    for c in 0..n {
        a.data.swap(i * n + c, j * n + c);
    }
    for r in 0..n {
        a.data.swap(r * n + i, r * n + j);
    }
}

/// Row i += row j, then column i += column j.
fn add_symmetric(a: &mut RationalMatrix, i: usize, j: usize) {
    let n = a.rows();
    for c in 0..n {
        let v = a[(j, c)].clone();
        a[(i, c)] += v;
    }
    for r in 0..n {
        let v = a[(r, j)].clone();
        a[(r, i)] += v;
    }
}

/// Signature (#positive − #negative) of an exactly symmetric matrix.
pub fn signature_symmetric(s: &RationalMatrix) -> Result<i64> {
    inertia(s).map(|i| i.signature())
}

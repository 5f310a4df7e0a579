//! Dense matrices over the field of rational functions.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};
use crate::gcd;
use crate::poly::Poly;
use crate::ratfunc::RatFunc;
use crate::space::SpaceRef;
use crate::upoly::UPoly;

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<RatFunc>,
}

pub type Vector = Vec<RatFunc>;

impl Matrix {
    pub fn new(rows: usize, cols: usize, data: Vec<RatFunc>) -> Result<Matrix> {
        if rows == 0 || cols == 0 {
            return Err(Error::Shape("dimensions must be positive".into()));
        }
        if data.len() != rows * cols {
            return Err(Error::Shape(format!("{} entries for a {rows}x{cols} matrix", data.len())));
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn from_rows(rows: Vec<Vec<RatFunc>>) -> Result<Matrix> {
        let r = rows.len();
        let c = rows.first().map(|x| x.len()).unwrap_or(0);
        if rows.iter().any(|x| x.len() != c) {
            return Err(Error::Shape("ragged rows".into()));
        }
        Matrix::new(r, c, rows.into_iter().flatten().collect())
    }

    /// Parse a matrix from rows of expressions in the standard space.
    pub fn parse(rows: &[&[&str]]) -> Result<Matrix> {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|s| RatFunc::parse(s)).collect::<Result<Vec<_>>>())
                .collect::<Result<Vec<_>>>()?,
        )
    }

    pub fn zeros(space: &SpaceRef, rows: usize, cols: usize) -> Matrix {
        Matrix { rows, cols, data: vec![RatFunc::zero(space); rows * cols] }
    }

    pub fn identity(space: &SpaceRef, n: usize) -> Matrix {
        Matrix::scalar(n, &RatFunc::one(space))
    }

    /// `c * I_n`.
    pub fn scalar(n: usize, c: &RatFunc) -> Matrix {
        let mut m = Matrix::zeros(c.space(), n, n);
        for i in 0..n {
            m.data[i * n + i] = c.clone();
        }
        m
    }

    pub fn diag(entries: &[RatFunc]) -> Matrix {
        let n = entries.len();
        let mut m = Matrix::zeros(entries[0].space(), n, n);
        for (i, e) in entries.iter().enumerate() {
            m.data[i * n + i] = e.clone();
        }
        m
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

    pub fn space(&self) -> &SpaceRef {
        self.data[0].space()
    }

    pub fn get(&self, i: usize, j: usize) -> &RatFunc {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: RatFunc) {
        self.data[i * self.cols + j] = v;
    }

    pub fn entries(&self) -> &[RatFunc] {
        &self.data
    }

    pub fn row(&self, i: usize) -> Vector {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn col(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vector> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    pub fn from_cols(cols: &[Vector]) -> Result<Matrix> {
        let c = cols.len();
        let r = cols.first().map(|x| x.len()).unwrap_or(0);
        if cols.iter().any(|x| x.len() != r) {
            return Err(Error::Shape("ragged columns".into()));
        }
        let mut data = Vec::with_capacity(r * c);
        for i in 0..r {
            for col in cols {
                data.push(col[i].clone());
            }
        }
        Matrix::new(r, c, data)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self.get(i, j).is_zero()))
    }

    pub fn map<F: FnMut(&RatFunc) -> RatFunc>(&self, f: F) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn try_map<F: FnMut(&RatFunc) -> Result<RatFunc>>(&self, f: F) -> Result<Matrix> {
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect::<Result<_>>()?,
        })
    }

    fn check_same_shape(&self, other: &Matrix) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::Shape(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Matrix) -> Result<Matrix> {
        self.check_same_shape(other)?;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a.add(b)).collect();
        Ok(Matrix { rows: self.rows, cols: self.cols, data })
    }

    pub fn checked_sub(&self, other: &Matrix) -> Result<Matrix> {
        self.check_same_shape(other)?;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a.sub(b)).collect();
        Ok(Matrix { rows: self.rows, cols: self.cols, data })
    }

    pub fn checked_mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut data = Vec::with_capacity(self.rows * other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = RatFunc::zero(self.space());
                for k in 0..self.cols {
                    let a = self.get(i, k);
                    let b = other.get(k, j);
                    if !a.is_zero() && !b.is_zero() {
                        acc = acc.add(&a.mul(b));
                    }
                }
                data.push(acc);
            }
        }
        Ok(Matrix { rows: self.rows, cols: other.cols, data })
    }

    pub fn mul_vec(&self, v: &[RatFunc]) -> Result<Vector> {
        if v.len() != self.cols {
            return Err(Error::Shape("vector length".into()));
        }
        Ok((0..self.rows)
            .map(|i| {
                (0..self.cols).fold(RatFunc::zero(self.space()), |acc, k| {
                    acc.add(&self.get(i, k).mul(&v[k]))
                })
            })
            .collect())
    }

    pub fn scale(&self, c: &RatFunc) -> Matrix {
        self.map(|x| x.mul(c))
    }

    pub fn transpose(&self) -> Matrix {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self.get(i, j).clone());
            }
        }
        Matrix { rows: self.cols, cols: self.rows, data }
    }

    fn require_square(&self) -> Result<()> {
        if !self.is_square() {
            return Err(Error::Shape(format!("{}x{} matrix is not square", self.rows, self.cols)));
        }
        Ok(())
    }

    pub fn trace(&self) -> Result<RatFunc> {
        self.require_square()?;
        Ok((0..self.rows).fold(RatFunc::zero(self.space()), |acc, i| acc.add(self.get(i, i))))
    }

    /// Submatrix of `nrows x ncols` starting at `(r0, c0)`.
    pub fn block(&self, r0: usize, c0: usize, nrows: usize, ncols: usize) -> Matrix {
        let mut data = Vec::with_capacity(nrows * ncols);
        for i in r0..r0 + nrows {
            for j in c0..c0 + ncols {
                data.push(self.get(i, j).clone());
            }
        }
        Matrix { rows: nrows, cols: ncols, data }
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, b: &Matrix) {
        for i in 0..b.rows {
            for j in 0..b.cols {
                self.set(r0 + i, c0 + j, b.get(i, j).clone());
            }
        }
    }

    /// Reduced row echelon form; pivots are taken in the first column that has
    /// a nonzero entry at or below the current row, scanning rows in order.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else { continue };
            if p != r {
                for j in 0..m.cols {
                    m.data.swap(p * m.cols + j, r * m.cols + j);
                }
            }
            let inv = m.get(r, c).inv().expect("pivot is nonzero");
            for j in c..m.cols {
                let v = m.get(r, j).mul(&inv);
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let f = m.get(i, c).clone();
                if f.is_zero() {
                    continue;
                }
                for j in c..m.cols {
                    let v = m.get(i, j).sub(&f.mul(m.get(r, j)));
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right kernel. Each vector has coprime polynomial entries
    /// and is read off the reduced echelon form (free variable set to one,
    /// then denominators cleared).
    pub fn kernel_basis(&self) -> Vec<Vector> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![RatFunc::zero(self.space()); self.cols];
                v[f] = RatFunc::one(self.space());
                for (i, &p) in pivots.iter().enumerate() {
                    v[p] = r.get(i, f).neg();
                }
                clear_denominators(&v)
            })
            .collect()
    }

    /// Inverse by Gauss-Jordan elimination.
    pub fn inverse(&self) -> Result<Matrix> {
        self.require_square()?;
        let n = self.rows;
        let mut aug = Matrix::zeros(self.space(), n, 2 * n);
        aug.set_block(0, 0, self);
        aug.set_block(0, n, &Matrix::identity(self.space(), n));
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(Error::Singular);
        }
        Ok(r.block(0, n, n, n))
    }

    pub fn det(&self) -> Result<RatFunc> {
        self.require_square()?;
        let n = self.rows;
        let mut m = self.clone();
        let mut det = RatFunc::one(self.space());
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m.get(i, c).is_zero()) else {
                return Ok(RatFunc::zero(self.space()));
            };
            if p != c {
                for j in 0..n {
                    m.data.swap(p * n + j, c * n + j);
                }
                det = det.neg();
            }
            let piv = m.get(c, c).clone();
            det = det.mul(&piv);
            let inv = piv.inv()?;
            for i in c + 1..n {
                let f = m.get(i, c).mul(&inv);
                if f.is_zero() {
                    continue;
                }
                for j in c..n {
                    let v = m.get(i, j).sub(&f.mul(m.get(c, j)));
                    m.set(i, j, v);
                }
            }
        }
        Ok(det)
    }

    /// `det(x I - M)` as a monic polynomial (Faddeev-LeVerrier recursion).
    pub fn char_poly(&self) -> Result<UPoly> {
        self.require_square()?;
        let n = self.rows;
        let sp = self.space().clone();
        let mut coeffs = vec![RatFunc::zero(&sp); n + 1];
        coeffs[n] = RatFunc::one(&sp);
        let mut mk = Matrix::zeros(&sp, n, n);
        for k in 1..=n {
            let shifted = mk.checked_add(&Matrix::scalar(n, &coeffs[n - k + 1]))?;
            mk = self.checked_mul(&shifted)?;
            let tr = mk.trace()?;
            coeffs[n - k] = tr.scale(&BigRational::new((-1).into(), (k as i64).into()));
        }
        Ok(UPoly::new(&sp, coeffs))
    }

    /// True iff `candidate` is a root of the characteristic polynomial.
    pub fn verify_eigenvalue(&self, candidate: &RatFunc) -> Result<bool> {
        Ok(self.char_poly()?.eval(candidate).is_zero())
    }

    /// True iff the characteristic polynomial equals `prod (x - e_j)`, i.e. the
    /// candidates are the eigenvalues with multiplicity.
    pub fn spectrum_matches(&self, candidates: &[RatFunc]) -> Result<bool> {
        if candidates.len() != self.rows {
            return Ok(false);
        }
        let cp = self.char_poly()?;
        Ok(cp == UPoly::from_roots(self.space(), candidates))
    }

    /// `S^-1 M S`.
    pub fn conjugate(&self, s: &Matrix) -> Result<Matrix> {
        s.inverse()?.checked_mul(self)?.checked_mul(s)
    }

    pub fn derivative(&self, v: usize) -> Matrix {
        self.map(|x| x.derivative(v))
    }

    pub fn substitute(&self, bindings: &[(usize, RatFunc)]) -> Result<Matrix> {
        self.try_map(|x| x.substitute(bindings))
    }

    pub fn subs(&self, bindings: &[(&str, &RatFunc)]) -> Result<Matrix> {
        self.try_map(|x| x.subs(bindings))
    }

    pub fn to_space(&self, target: &SpaceRef) -> Result<Matrix> {
        self.try_map(|x| x.to_space(target))
    }

    /// Commutator `self * other - other * self`.
    pub fn commutator(&self, other: &Matrix) -> Result<Matrix> {
        self.checked_mul(other)?.checked_sub(&other.checked_mul(self)?)
    }
}

/// Scale a vector so its entries are coprime polynomials with the first
/// nonzero entry having positive sign.
pub fn clear_denominators(v: &[RatFunc]) -> Vector {
    let Some(first) = v.iter().find(|x| !x.is_zero()) else { return v.to_vec() };
    let sp = first.space().clone();
    let mut den = Poly::one(&sp);
    let mut den_int = num_bigint::BigInt::one();
    for x in v.iter().filter(|x| !x.is_zero()) {
        den = gcd::lcm(&den, x.den());
        den_int = num_integer::Integer::lcm(&den_int, x.scalar().denom());
    }
    let scale = RatFunc::from_poly(&den.scale(&den_int));
    let scaled: Vec<RatFunc> = v.iter().map(|x| x.mul(&scale)).collect();
    let polys: Vec<Poly> = scaled.iter().map(|x| x.numer_denom().0).collect();
    let g = gcd::gcd_many(polys.iter()).expect("nonzero entry");
    let mut num_content = num_bigint::BigInt::from(0);
    for p in &polys {
        if !p.is_zero() {
            num_content = num_integer::Integer::gcd(&num_content, &crate::gcd::div(p, &g).content());
        }
    }
    let first_sign = scaled.iter().find(|x| !x.is_zero()).expect("nonzero").leading_sign_positive();
    let mut divisor = RatFunc::from_poly(&g.scale(&num_content));
    if !first_sign {
        divisor = divisor.neg();
    }
    let inv = divisor.inv().expect("nonzero");
    scaled.iter().map(|x| x.mul(&inv)).collect()
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix{}", self)
    }
}

/// # Panics
/// On shape mismatch; use [`Matrix::checked_add`] to handle it.
impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        self.checked_add(rhs).expect("matrix shape mismatch")
    }
}

/// # Panics
/// On shape mismatch; use [`Matrix::checked_sub`] to handle it.
impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        self.checked_sub(rhs).expect("matrix shape mismatch")
    }
}

/// # Panics
/// On shape mismatch; use [`Matrix::checked_mul`] to handle it.
impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        self.checked_mul(rhs).expect("matrix shape mismatch")
    }
}

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        self.map(|x| x.neg())
    }
}

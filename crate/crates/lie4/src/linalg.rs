//! Exact rational and float linear algebra on small matrices.
//!
//! Everything the rest of the crate touches is either a [`RatMat`] over
//! arbitrary-precision rationals (structure constants, metrics, templates,
//! stabilizer solves) or a [`FloatMat`] where a genuine exponential shows up
//! (group realizations, one-parameter subgroup sampling).

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

pub type Rat = BigRational;

/// `p/q` as an exact rational.
pub fn rat(p: i64, q: i64) -> Rat {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

pub fn rint(n: i64) -> Rat {
    BigRational::from(BigInt::from(n))
}

/// Parse "p/q" or "p" into an exact rational.
pub fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().ok()?;
            let q: BigInt = q.trim().parse().ok()?;
            if q.is_zero() {
                return None;
            }
            Some(BigRational::new(p, q))
        }
        None => {
            let p: BigInt = s.parse().ok()?;
            Some(BigRational::from(p))
        }
    }
}

pub fn rat_to_string(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn rat_to_f64(r: &Rat) -> f64 {
    let num = r.numer();
    let den = r.denom();
    // Good enough for the magnitudes in this crate.
    str_to_f64(&num.to_string()) / str_to_f64(&den.to_string())
}

fn str_to_f64(s: &str) -> f64 {
    s.parse().unwrap_or(f64::NAN)
}

/// Exact square root of a nonnegative rational, if it is rational.
pub fn rat_sqrt(r: &Rat) -> Option<Rat> {
    if r.is_negative() {
        return None;
    }
    let n = r.numer().sqrt();
    let d = r.denom().sqrt();
    if &(&n * &n) == r.numer() && &(&d * &d) == r.denom() {
        Some(BigRational::new(n, d))
    } else {
        None
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinalgError {
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("matrix is not positive definite (leading minor {0} is not positive)")]
    NotPositiveDefinite(usize),
    #[error("identically zero polynomial")]
    ZeroPolynomial,
    #[error("singular matrix")]
    Singular,
}

/// Dense row-major matrix of exact rationals.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct RatMat {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl RatMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMat {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rat::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let r = rows.len();
        let c = if r > 0 { rows[0].len() } else { 0 };
        assert!(rows.iter().all(|row| row.len() == c));
        RatMat {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| rint(v)).collect())
                .collect(),
        )
    }

    pub fn diag(entries: &[Rat]) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n, n);
        for (i, e) in entries.iter().enumerate() {
            m.set(i, i, e.clone());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rat {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rat) {
        self.data[i * self.cols + j] = v;
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows);
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = Rat::zero();
                for k in 0..self.cols {
                    acc += self.get(i, k) * other.get(k, j);
                }
                out.set(i, j, acc);
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            *a += b;
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            *a -= b;
        }
        out
    }

    pub fn scale(&self, s: &Rat) -> Self {
        let mut out = self.clone();
        for a in out.data.iter_mut() {
            *a *= s;
        }
        out
    }

    pub fn neg(&self) -> Self {
        self.scale(&rint(-1))
    }

    pub fn commutator(&self, other: &Self) -> Self {
        self.mul(other).sub(&other.mul(self))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|v| v.is_zero())
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols && *self == self.transpose()
    }

    /// Apply `x` (a column vector given as a slice) on the right.
    pub fn apply(&self, x: &[Rat]) -> Vec<Rat> {
        assert_eq!(self.cols, x.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = Rat::zero();
                for j in 0..self.cols {
                    acc += self.get(i, j) * &x[j];
                }
                acc
            })
            .collect()
    }

    /// Determinant of the leading k-by-k principal submatrix.
    pub fn leading_minor(&self, k: usize) -> Rat {
        let mut sub = Self::zeros(k, k);
        for i in 0..k {
            for j in 0..k {
                sub.set(i, j, self.get(i, j).clone());
            }
        }
        sub.det()
    }

    pub fn det(&self) -> Rat {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut m = self.clone();
        let mut det = Rat::one();
        for col in 0..n {
            let pivot = (col..n).find(|&r| !m.get(r, col).is_zero());
            let Some(p) = pivot else {
                return Rat::zero();
            };
            if p != col {
                m.swap_rows(p, col);
                det = -det;
            }
            let pv = m.get(col, col).clone();
            det *= &pv;
            for r in col + 1..n {
                let f = m.get(r, col) / &pv;
                for c in col..n {
                    let v = m.get(r, c) - &f * m.get(col, c);
                    m.set(r, c, v);
                }
            }
        }
        det
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn inverse(&self) -> Option<Self> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut m = self.clone();
        let mut inv = Self::identity(n);
        for col in 0..n {
            let p = (col..n).find(|&r| !m.get(r, col).is_zero())?;
            if p != col {
                m.swap_rows(p, col);
                inv.swap_rows(p, col);
            }
            let pv = m.get(col, col).clone();
            for j in 0..n {
                let v = m.get(col, j) / &pv;
                m.set(col, j, v);
                let v = inv.get(col, j) / &pv;
                inv.set(col, j, v);
            }
            for r in 0..n {
                if r == col || m.get(r, col).is_zero() {
                    continue;
                }
                let f = m.get(r, col).clone();
                for j in 0..n {
                    let v = m.get(r, j) - &f * m.get(col, j);
                    m.set(r, j, v);
                    let v = inv.get(r, j) - &f * inv.get(col, j);
                    inv.set(r, j, v);
                }
            }
        }
        Some(inv)
    }

    pub fn rank(&self) -> usize {
        let (_, pivots) = self.rref();
        pivots.len()
    }

    /// Reduced row echelon form together with the pivot column indices.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row >= m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(p, row);
            let pv = m.get(row, col).clone();
            for j in 0..m.cols {
                let v = m.get(row, j) / &pv;
                m.set(row, j, v);
            }
            for r in 0..m.rows {
                if r == row || m.get(r, col).is_zero() {
                    continue;
                }
                let f = m.get(r, col).clone();
                for j in 0..m.cols {
                    let v = m.get(r, j) - &f * m.get(row, j);
                    m.set(r, j, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    pub fn to_float(&self) -> FloatMat {
        FloatMat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(rat_to_f64).collect(),
        }
    }

    pub fn flatten(&self) -> &[Rat] {
        &self.data
    }

    pub fn entries_to_strings(&self) -> Vec<Vec<String>> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| rat_to_string(self.get(i, j))).collect())
            .collect()
    }
}

/// Dense row-major matrix of doubles.
#[derive(Debug, Clone, PartialEq)]
pub struct FloatMat {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl FloatMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        FloatMat {
            rows,
            cols,
            data: vec![0.0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1.0);
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<f64>>) -> Self {
        let r = rows.len();
        let c = if r > 0 { rows[0].len() } else { 0 };
        FloatMat {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        self.data[i * self.cols + j] = v;
    }

    pub fn all_finite(&self) -> bool {
        self.data.iter().all(|v| v.is_finite())
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows);
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = 0.0;
                for k in 0..self.cols {
                    acc += self.get(i, k) * other.get(k, j);
                }
                out.set(i, j, acc);
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            *a += b;
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            *a -= b;
        }
        out
    }

    pub fn scale(&self, s: f64) -> Self {
        let mut out = self.clone();
        for a in out.data.iter_mut() {
            *a *= s;
        }
        out
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |m, v| m.max(v.abs()))
    }

    pub fn apply(&self, x: &[f64]) -> Vec<f64> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j) * x[j]).sum())
            .collect()
    }
}

/// Result of the upper-triangular factorization behind the Tsup/S bijection.
#[derive(Debug, Clone, PartialEq)]
pub enum UpperFactor {
    /// All square roots came out rational; the factor is exact and
    /// `(U^-1)^t (U^-1) = M` holds as an identity of rationals.
    Rational(RatMat),
    /// At least one entry is irrational; double-precision fallback.
    Float(FloatMat),
}

/// Upper-triangular `U` with positive diagonal such that `(U^-1)^t (U^-1) = M`.
///
/// Equivalently `M^-1 = U U^t`, so this is the UL-flavored Cholesky of the
/// inverse. The rational path is attempted first and verified exactly.
pub fn cholesky_upper(m: &RatMat) -> Result<UpperFactor, LinalgError> {
    let n = m.rows();
    if !m.is_symmetric() {
        return Err(LinalgError::NotSymmetric);
    }
    for k in 1..=n {
        if !m.leading_minor(k).is_positive() {
            return Err(LinalgError::NotPositiveDefinite(k));
        }
    }
    let inv = m.inverse().expect("positive definite implies invertible");
    // Factor inv = U U^t by eliminating from the bottom-right corner up.
    match factor_uut_exact(&inv) {
        Some(u) => {
            debug_assert!({
                let ui = u.inverse().unwrap();
                ui.transpose().mul(&ui) == *m
            });
            Ok(UpperFactor::Rational(u))
        }
        None => Ok(UpperFactor::Float(factor_uut_float(&inv.to_float()))),
    }
}

fn factor_uut_exact(n_mat: &RatMat) -> Option<RatMat> {
    let n = n_mat.rows();
    let mut rem = n_mat.clone();
    let mut u = RatMat::zeros(n, n);
    for k in (0..n).rev() {
        let d = rat_sqrt(rem.get(k, k))?;
        u.set(k, k, d.clone());
        for i in 0..k {
            let v = rem.get(i, k) / &d;
            u.set(i, k, v);
        }
        for i in 0..=k {
            for j in 0..=k {
                let v = rem.get(i, j) - u.get(i, k) * u.get(j, k);
                rem.set(i, j, v);
            }
        }
    }
    Some(u)
}

fn factor_uut_float(n_mat: &FloatMat) -> FloatMat {
    let n = n_mat.rows();
    let mut rem = n_mat.clone();
    let mut u = FloatMat::zeros(n, n);
    for k in (0..n).rev() {
        let d = rem.get(k, k).sqrt();
        u.set(k, k, d);
        for i in 0..k {
            u.set(i, k, rem.get(i, k) / d);
        }
        for i in 0..=k {
            for j in 0..=k {
                let v = rem.get(i, j) - u.get(i, k) * u.get(j, k);
                rem.set(i, j, v);
            }
        }
    }
    u
}

/// Basis of the exact kernel of `a`, as column vectors.
pub fn nullspace_basis(a: &RatMat) -> Vec<Vec<Rat>> {
    let n = a.cols();
    let (r, pivots) = a.rref();
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![Rat::zero(); n];
            v[fc] = Rat::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -r.get(row, fc).clone();
            }
            v
        })
        .collect()
}

/// Solve `a x = b` exactly; `None` when inconsistent.
pub fn solve_exact(a: &RatMat, b: &[Rat]) -> Option<Vec<Rat>> {
    assert_eq!(a.rows(), b.len());
    let mut aug = RatMat::zeros(a.rows(), a.cols() + 1);
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            aug.set(i, j, a.get(i, j).clone());
        }
        aug.set(i, a.cols(), b[i].clone());
    }
    let (r, pivots) = aug.rref();
    if pivots.contains(&a.cols()) {
        return None; // pivot in the augmented column
    }
    let mut x = vec![Rat::zero(); a.cols()];
    for (row, &pc) in pivots.iter().enumerate() {
        x[pc] = r.get(row, a.cols()).clone();
    }
    Some(x)
}

/// Univariate polynomial over Q, coefficients in increasing degree order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    pub coeffs: Vec<Rat>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.len() > 1 && coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(Rat::zero());
        }
        Poly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| rint(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn leading(&self) -> &Rat {
        self.coeffs.last().unwrap()
    }

    pub fn derivative(&self) -> Poly {
        if self.coeffs.len() == 1 {
            return Poly::new(vec![Rat::zero()]);
        }
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * rint(i as i64))
                .collect(),
        )
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out = vec![Rat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }

    /// Polynomial remainder of `self` divided by `d`.
    pub fn rem(&self, d: &Poly) -> Poly {
        assert!(!d.is_zero());
        if d.degree() == 0 {
            return Poly::new(vec![Rat::zero()]);
        }
        let mut r = self.coeffs.clone();
        let dd = d.degree();
        let dl = d.leading();
        while r.len() > 1 && r.len() - 1 >= dd && !r.iter().all(|c| c.is_zero()) {
            let rd = r.len() - 1;
            if r[rd].is_zero() {
                r.pop();
                continue;
            }
            let f = &r[rd] / dl;
            for (i, c) in d.coeffs.iter().enumerate() {
                let idx = rd - dd + i;
                r[idx] = &r[idx] - &f * c;
            }
            r.pop();
        }
        Poly::new(r)
    }

    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        // monic normalization
        if !a.is_zero() {
            let l = a.leading().clone();
            a = Poly::new(a.coeffs.iter().map(|c| c / &l).collect());
        }
        a
    }

    pub fn div_exact(&self, d: &Poly) -> Poly {
        // Long division assuming zero remainder.
        let mut r = self.coeffs.clone();
        let dd = d.degree();
        let dl = d.leading();
        let mut q = vec![Rat::zero(); self.coeffs.len().saturating_sub(dd)];
        while r.len() > dd {
            let rd = r.len() - 1;
            let f = &r[rd] / dl;
            q[rd - dd] = f.clone();
            for (i, c) in d.coeffs.iter().enumerate() {
                let idx = rd - dd + i;
                r[idx] = &r[idx] - &f * c;
            }
            r.pop();
        }
        Poly::new(q)
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }
}

/// Exact characteristic polynomial `det(tI - M)` by Faddeev-LeVerrier.
pub fn char_poly(m: &RatMat) -> Poly {
    assert_eq!(m.rows(), m.cols());
    let n = m.rows();
    let mut coeffs = vec![Rat::zero(); n + 1];
    coeffs[n] = Rat::one();
    let mut aux = RatMat::identity(n);
    for k in 1..=n {
        aux = m.mul(&aux);
        let mut tr = Rat::zero();
        for i in 0..n {
            tr += aux.get(i, i);
        }
        let c = -tr / rint(k as i64);
        coeffs[n - k] = c.clone();
        for i in 0..n {
            let v = aux.get(i, i) + &c;
            aux.set(i, i, v);
        }
    }
    Poly::new(coeffs)
}

/// Number of sign variations in a sequence, zeros skipped.
fn sign_variations(signs: &[i8]) -> usize {
    let mut count = 0;
    let mut last = 0i8;
    for &s in signs {
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

fn sign_of(r: &Rat) -> i8 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

/// True iff every complex root of `p` is real; exact, via a Sturm chain of
/// the square-free part over the whole line.
pub fn all_roots_real(p: &Poly) -> Result<bool, LinalgError> {
    if p.is_zero() {
        return Err(LinalgError::ZeroPolynomial);
    }
    if p.degree() == 0 {
        return Ok(true);
    }
    let sf = p.div_exact(&p.gcd(&p.derivative()));
    let d = sf.degree();
    if d == 0 {
        return Ok(true);
    }
    // Sturm chain of the square-free part.
    let mut chain = vec![sf.clone(), sf.derivative()];
    while !chain.last().unwrap().is_zero() {
        let n = chain.len();
        let r = chain[n - 2].rem(&chain[n - 1]);
        let r = Poly::new(r.coeffs.iter().map(|c| -c).collect());
        if r.is_zero() {
            break;
        }
        chain.push(r);
    }
    // Sign at -inf: leading sign times (-1)^degree; at +inf: leading sign.
    let at_neg: Vec<i8> = chain
        .iter()
        .map(|q| {
            let s = sign_of(q.leading());
            if q.degree() % 2 == 1 {
                -s
            } else {
                s
            }
        })
        .collect();
    let at_pos: Vec<i8> = chain.iter().map(|q| sign_of(q.leading())).collect();
    let distinct_real = sign_variations(&at_neg) - sign_variations(&at_pos);
    Ok(distinct_real == d)
}

/// `exp(t D)` by scaling and squaring with a Taylor core.
pub fn mat_exp(d: &FloatMat, t: f64) -> FloatMat {
    assert!(d.all_finite());
    let n = d.rows();
    let a = d.scale(t);
    let norm = a.max_abs() * n as f64;
    let mut squarings = 0u32;
    let mut scaled = a;
    if norm > 0.5 {
        squarings = (norm / 0.5).log2().ceil() as u32;
        scaled = scaled.scale(0.5f64.powi(squarings as i32));
    }
    let mut result = FloatMat::identity(n);
    let mut term = FloatMat::identity(n);
    for k in 1..=24 {
        term = term.mul(&scaled).scale(1.0 / k as f64);
        result = result.add(&term);
    }
    for _ in 0..squarings {
        result = result.mul(&result);
    }
    result
}

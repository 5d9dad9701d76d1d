//! Exact rational scalars, vectors, and small dense matrices.
//!
//! Everything downstream that claims to be exact (root data, reflections,
//! invariant evaluation at rational points) goes through this module.
//! No tolerances anywhere here.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;

/// Exact rational scalar used throughout the crate.
pub type Q = BigRational;

/// Rational from an integer pair.
pub fn q(num: i64, den: i64) -> Q {
    Q::new(BigInt::from(num), BigInt::from(den))
}

/// Rational from an integer.
pub fn qi(num: i64) -> Q {
    Q::from_integer(BigInt::from(num))
}

/// Parse `"p/q"` or `"p"`.
pub fn parse_q(s: &str) -> Option<Q> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(Q::new(n, d))
        }
        None => {
            let n: BigInt = s.parse().ok()?;
            Some(Q::from_integer(n))
        }
    }
}

/// Render as `"p/q"`, or `"p"` when the denominator is 1.
pub fn format_q(x: &Q) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn q_to_f64(x: &Q) -> f64 {
    x.to_f64().expect("rational out of f64 range")
}

/// x^m for a non-negative integer exponent.
pub fn q_pow(x: &Q, m: u32) -> Q {
    let mut acc = Q::one();
    let mut base = x.clone();
    let mut e = m;
    while e > 0 {
        if e & 1 == 1 {
            acc *= &base;
        }
        e >>= 1;
        if e > 0 {
            base = &base * &base;
        }
    }
    acc
}

pub fn qvec_from_i64(v: &[i64]) -> Vec<Q> {
    v.iter().map(|&x| qi(x)).collect()
}

pub fn qvec_to_f64(v: &[Q]) -> Vec<f64> {
    v.iter().map(q_to_f64).collect()
}

pub fn dot(u: &[Q], v: &[Q]) -> Q {
    debug_assert_eq!(u.len(), v.len());
    let mut acc = Q::zero();
    for (a, b) in u.iter().zip(v) {
        acc += a * b;
    }
    acc
}

pub fn add(u: &[Q], v: &[Q]) -> Vec<Q> {
    u.iter().zip(v).map(|(a, b)| a + b).collect()
}

pub fn sub(u: &[Q], v: &[Q]) -> Vec<Q> {
    u.iter().zip(v).map(|(a, b)| a - b).collect()
}

pub fn neg(u: &[Q]) -> Vec<Q> {
    u.iter().map(|a| -a).collect()
}

pub fn scale(c: &Q, u: &[Q]) -> Vec<Q> {
    u.iter().map(|a| c * a).collect()
}

pub fn is_zero_vec(u: &[Q]) -> bool {
    u.iter().all(Zero::is_zero)
}

/// Reflection of `v` in the hyperplane orthogonal to `alpha`:
/// `v - (2<v,a>/<a,a>) a`.
pub fn reflect(v: &[Q], alpha: &[Q]) -> Vec<Q> {
    let c = qi(2) * dot(v, alpha) / dot(alpha, alpha);
    sub(v, &scale(&c, alpha))
}

/// Dense matrix of exact rationals, row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QMatrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<Q>,
}

impl QMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMatrix {
            rows,
            cols,
            data: vec![Q::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Q::one();
        }
        m
    }

    pub fn from_rows(rows: &[Vec<Q>]) -> Self {
        let r = rows.len();
        let c = if r == 0 { 0 } else { rows[0].len() };
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c);
            data.extend(row.iter().cloned());
        }
        QMatrix { rows: r, cols: c, data }
    }

    /// Columns are the given vectors.
    pub fn from_cols(cols: &[Vec<Q>]) -> Self {
        let c = cols.len();
        let r = if c == 0 { 0 } else { cols[0].len() };
        let mut m = Self::zeros(r, c);
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), r);
            for i in 0..r {
                m[(i, j)] = col[i].clone();
            }
        }
        m
    }

    pub fn row(&self, i: usize) -> &[Q] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn mul(&self, other: &QMatrix) -> QMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = QMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let prod = a * &other[(k, j)];
                    out[(i, j)] += prod;
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Q]) -> Vec<Q> {
        assert_eq!(self.cols, v.len());
        (0..self.rows).map(|i| dot(self.row(i), v)).collect()
    }

    pub fn transpose(&self) -> QMatrix {
        let mut out = QMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(j, i)] = self[(i, j)].clone();
            }
        }
        out
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    if i == j {
                        self[(i, j)].is_one()
                    } else {
                        self[(i, j)].is_zero()
                    }
                })
            })
    }

    pub fn is_neg_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    if i == j {
                        (-&self[(i, j)]).is_one()
                    } else {
                        self[(i, j)].is_zero()
                    }
                })
            })
    }

    /// Gauss-Jordan inverse; `None` when singular.
    pub fn inverse(&self) -> Option<QMatrix> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = QMatrix::identity(n);
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a[(r, col)].is_zero())?;
            if pivot != col {
                a.swap_rows(pivot, col);
                inv.swap_rows(pivot, col);
            }
            let p = a[(col, col)].clone();
            for j in 0..n {
                a[(col, j)] /= &p;
                inv[(col, j)] /= &p;
            }
            for r in 0..n {
                if r == col || a[(r, col)].is_zero() {
                    continue;
                }
                let f = a[(r, col)].clone();
                for j in 0..n {
                    let t = &f * &a[(col, j)];
                    a[(r, j)] -= t;
                    let t = &f * &inv[(col, j)];
                    inv[(r, j)] -= t;
                }
            }
        }
        Some(inv)
    }

    pub fn determinant(&self) -> Q {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut a = self.clone();
        let mut det = Q::one();
        for col in 0..n {
            let pivot = match (col..n).find(|&r| !a[(r, col)].is_zero()) {
                Some(p) => p,
                None => return Q::zero(),
            };
            if pivot != col {
                a.swap_rows(pivot, col);
                det = -det;
            }
            let p = a[(col, col)].clone();
            det *= &p;
            for r in col + 1..n {
                if a[(r, col)].is_zero() {
                    continue;
                }
                let f = &a[(r, col)] / &p;
                for j in col..n {
                    let t = &f * &a[(col, j)];
                    a[(r, j)] -= t;
                }
            }
        }
        det
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(i * self.cols + c, j * self.cols + c);
        }
    }

    pub fn to_f64(&self) -> Vec<Vec<f64>> {
        (0..self.rows).map(|i| qvec_to_f64(self.row(i))).collect()
    }
}

impl std::ops::Index<(usize, usize)> for QMatrix {
    type Output = Q;
    fn index(&self, (i, j): (usize, usize)) -> &Q {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for QMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Q {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for QMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(format_q).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Solve `A x = b` for square exact `A`; `None` when singular.
pub fn solve(a: &QMatrix, b: &[Q]) -> Option<Vec<Q>> {
    Some(a.inverse()?.mul_vec(b))
}

/// Rank of the matrix by exact Gaussian elimination.
pub fn rank(m: &QMatrix) -> usize {
    let mut a = m.clone();
    let mut r = 0;
    for col in 0..a.cols {
        if r == a.rows {
            break;
        }
        let pivot = match (r..a.rows).find(|&row| !a[(row, col)].is_zero()) {
            Some(p) => p,
            None => continue,
        };
        a.swap_rows(pivot, r);
        let p = a[(r, col)].clone();
        for row in r + 1..a.rows {
            if a[(row, col)].is_zero() {
                continue;
            }
            let f = &a[(row, col)] / &p;
            for j in col..a.cols {
                let t = &f * &a[(r, j)];
                a[(row, j)] -= t;
            }
        }
        r += 1;
    }
    r
}

/// Basis of the null space of `m` (solutions of `m x = 0`).
pub fn null_space(m: &QMatrix) -> Vec<Vec<Q>> {
    let mut a = m.clone();
    let n = a.cols;
    let mut pivots: Vec<usize> = Vec::new();
    let mut r = 0;
    for col in 0..n {
        if r == a.rows {
            break;
        }
        let pivot = match (r..a.rows).find(|&row| !a[(row, col)].is_zero()) {
            Some(p) => p,
            None => continue,
        };
        a.swap_rows(pivot, r);
        let p = a[(r, col)].clone();
        for j in 0..n {
            a[(r, j)] /= &p;
        }
        for row in 0..a.rows {
            if row == r || a[(row, col)].is_zero() {
                continue;
            }
            let f = a[(row, col)].clone();
            for j in 0..n {
                let t = &f * &a[(r, j)];
                a[(row, j)] -= t;
            }
        }
        pivots.push(col);
        r += 1;
    }
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    let mut basis = Vec::new();
    for &fc in &free {
        let mut v = vec![Q::zero(); n];
        v[fc] = Q::one();
        for (ri, &pc) in pivots.iter().enumerate() {
            v[pc] = -a[(ri, fc)].clone();
        }
        basis.push(v);
    }
    basis
}

/// Is `x` an integer (denominator 1 after reduction)?
pub fn is_integer(x: &Q) -> bool {
    x.denom().is_one()
}

/// Absolute value.
pub fn q_abs(x: &Q) -> Q {
    x.abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_round_trip() {
        for s in ["3/4", "-7/2", "5", "0", "-12"] {
            let v = parse_q(s).unwrap();
            assert_eq!(format_q(&v), s);
        }
        assert_eq!(parse_q("6/8").unwrap(), q(3, 4));
        assert!(parse_q("1/0").is_none());
        assert!(parse_q("x").is_none());
    }

    #[test]
    fn reflection_negates_and_fixes() {
        let alpha = qvec_from_i64(&[1, -1, 0]);
        // s_a(a) = -a
        assert_eq!(reflect(&alpha, &alpha), neg(&alpha));
        // s_a fixes vectors orthogonal to a
        let fixed = qvec_from_i64(&[1, 1, -2]);
        assert_eq!(reflect(&fixed, &alpha), fixed);
        // involution
        let v = qvec_from_i64(&[3, 1, 4]);
        assert_eq!(reflect(&reflect(&v, &alpha), &alpha), v);
    }

    #[test]
    fn inverse_and_solve() {
        let m = QMatrix::from_rows(&[
            vec![qi(2), qi(1)],
            vec![qi(1), qi(1)],
        ]);
        let inv = m.inverse().unwrap();
        assert!(m.mul(&inv).is_identity());
        let x = solve(&m, &[qi(3), qi(2)]).unwrap();
        assert_eq!(x, vec![qi(1), qi(1)]);
        let sing = QMatrix::from_rows(&[vec![qi(1), qi(2)], vec![qi(2), qi(4)]]);
        assert!(sing.inverse().is_none());
        assert!(sing.determinant().is_zero());
    }

    #[test]
    fn null_space_of_sum_functional() {
        // kernel of (1 1 1) is the trace-zero plane
        let m = QMatrix::from_rows(&[qvec_from_i64(&[1, 1, 1])]);
        let basis = null_space(&m);
        assert_eq!(basis.len(), 2);
        for v in &basis {
            assert!(dot(v, &qvec_from_i64(&[1, 1, 1])).is_zero());
        }
    }

    #[test]
    fn pow_small_cases() {
        assert_eq!(q_pow(&q(2, 3), 3), q(8, 27));
        assert_eq!(q_pow(&q(-1, 2), 2), q(1, 4));
        assert_eq!(q_pow(&qi(7), 0), qi(1));
    }
}

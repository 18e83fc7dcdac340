//! Integer matrices, matrix mutation and skew-symmetrizers.
//!
//! Directions and indices are 0-based throughout the library API; the JSON
//! and command-line layers translate to the 1-based labels used in the
//! mathematical literature.

use std::collections::VecDeque;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{check_index, Error, Result};

/// Dense rectangular matrix with arbitrary-precision entries, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

/// Sign pattern of a vector.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SignPattern {
    Zero,
    NonNegative,
    NonPositive,
    Mixed,
}

impl SignPattern {
    pub fn of<'a>(entries: impl IntoIterator<Item = &'a BigInt>) -> SignPattern {
        let (mut pos, mut neg) = (false, false);
        for e in entries {
            pos |= e.is_positive();
            neg |= e.is_negative();
        }
        match (pos, neg) {
            (false, false) => SignPattern::Zero,
            (true, false) => SignPattern::NonNegative,
            (false, true) => SignPattern::NonPositive,
            (true, true) => SignPattern::Mixed,
        }
    }

    pub fn is_nonnegative(self) -> bool {
        matches!(self, SignPattern::Zero | SignPattern::NonNegative)
    }

    pub fn is_nonpositive(self) -> bool {
        matches!(self, SignPattern::Zero | SignPattern::NonPositive)
    }

    pub fn is_coherent(self) -> bool {
        self != SignPattern::Mixed
    }
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<BigInt>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::ShapeMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(IntMatrix { rows, cols, data })
    }

    /// Builds a matrix from rows; ragged input is rejected.
    pub fn from_rows<R, T>(rows: &[R]) -> Result<Self>
    where
        R: AsRef<[T]>,
        T: Clone + Into<BigInt>,
    {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for (i, r) in rows.iter().enumerate() {
            let r = r.as_ref();
            if r.len() != cols {
                return Err(Error::ShapeMismatch(format!(
                    "row {i} has {} entries, expected {cols}",
                    r.len()
                )));
            }
            data.extend(r.iter().cloned().map(Into::into));
        }
        Ok(IntMatrix {
            rows: rows.len(),
            cols,
            data,
        })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigInt::one();
        }
        m
    }

    pub fn diagonal(d: &[i64]) -> Self {
        let n = d.len();
        let mut m = Self::zeros(n, n);
        for (i, &di) in d.iter().enumerate() {
            m.data[i * n + i] = BigInt::from(di);
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

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: BigInt) {
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    /// Entries as `i64`; `None` if any entry does not fit.
    pub fn to_i64_rows(&self) -> Option<Vec<Vec<i64>>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(|e| e.to_i64()).collect())
            .collect()
    }

    pub fn column_i64(&self, j: usize) -> Option<Vec<i64>> {
        (0..self.rows).map(|i| self.get(i, j).to_i64()).collect()
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

    pub fn mul(&self, other: &IntMatrix) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Vertical concatenation `(self; bottom)`.
    pub fn stack(&self, bottom: &IntMatrix) -> Result<Self> {
        if self.cols != bottom.cols {
            return Err(Error::ShapeMismatch(format!(
                "cannot stack {} columns over {}",
                self.cols, bottom.cols
            )));
        }
        let mut data = self.data.clone();
        data.extend(bottom.data.iter().cloned());
        Ok(IntMatrix {
            rows: self.rows + bottom.rows,
            cols: self.cols,
            data,
        })
    }

    /// Splits into the first `at` rows and the rest.
    pub fn split_rows(&self, at: usize) -> (IntMatrix, IntMatrix) {
        let at = at.min(self.rows);
        let cut = at * self.cols;
        (
            IntMatrix {
                rows: at,
                cols: self.cols,
                data: self.data[..cut].to_vec(),
            },
            IntMatrix {
                rows: self.rows - at,
                cols: self.cols,
                data: self.data[cut..].to_vec(),
            },
        )
    }

    /// Simultaneous row/column permutation of a square matrix:
    /// `out[i][j] = self[perm[i]][perm[j]]`.
    pub fn permute_square(&self, perm: &[usize]) -> Self {
        let n = perm.len();
        let mut out = Self::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                out.set(i, j, self.get(perm[i], perm[j]).clone());
            }
        }
        out
    }

    pub fn column_sign(&self, j: usize) -> SignPattern {
        SignPattern::of((0..self.rows).map(|i| self.get(i, j)))
    }

    pub fn row_sign(&self, i: usize) -> SignPattern {
        SignPattern::of(self.row(i))
    }

    pub fn is_nonnegative(&self) -> bool {
        self.data.iter().all(|e| !e.is_negative())
    }

    pub fn is_nonpositive(&self) -> bool {
        self.data.iter().all(|e| !e.is_positive())
    }

    /// Determinant by fraction-free Bareiss elimination.
    pub fn determinant(&self) -> Result<BigInt> {
        if !self.is_square() {
            return Err(Error::ShapeMismatch("determinant of a non-square matrix".into()));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(BigInt::one());
        }
        let mut a = self.to_rows();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                    Some(r) => {
                        a.swap(k, r);
                        sign = -sign;
                    }
                    None => return Ok(BigInt::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    a[i][j] = v / &prev;
                }
            }
            prev = a[k][k].clone();
        }
        Ok(sign * &a[n - 1][n - 1])
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for (j, e) in self.row(i).iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{e}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

fn pos(a: &BigInt) -> BigInt {
    if a.is_positive() {
        a.clone()
    } else {
        BigInt::zero()
    }
}

/// Matrix mutation in direction `k`:
/// `a'_ij = -a_ij` if `i = k` or `j = k`, otherwise
/// `a_ij + [a_ik]_+ [a_kj]_+ - [-a_ik]_+ [-a_kj]_+`.
pub fn mutate_matrix(a: &IntMatrix, k: usize) -> Result<IntMatrix> {
    check_index(k, a.rows.min(a.cols))?;
    let mut out = a.clone();
    for i in 0..a.rows {
        for j in 0..a.cols {
            let v = if i == k || j == k {
                -a.get(i, j)
            } else {
                let (aik, akj) = (a.get(i, k), a.get(k, j));
                a.get(i, j) + pos(aik) * pos(akj) - pos(&-aik) * pos(&-akj)
            };
            out.set(i, j, v);
        }
    }
    Ok(out)
}

/// Mutation of a stacked `2n x n` matrix `(B; C)` in direction `k < n`.
pub fn mutate_extended(btilde: &IntMatrix, k: usize) -> Result<IntMatrix> {
    let n = btilde.cols;
    if btilde.rows != 2 * n {
        return Err(Error::ShapeMismatch(format!(
            "extended matrix must be 2n x n, got {}x{}",
            btilde.rows, btilde.cols
        )));
    }
    check_index(k, n)?;
    mutate_matrix(btilde, k)
}

/// True iff `diag(d) * b` is skew-symmetric and every `d_i` is positive.
pub fn is_skew_symmetrized_by(b: &IntMatrix, d: &[i64]) -> bool {
    if !b.is_square() || d.len() != b.rows || d.iter().any(|&x| x <= 0) {
        return false;
    }
    let n = b.rows;
    (0..n).all(|i| {
        (0..n).all(|j| BigInt::from(d[i]) * b.get(i, j) == -(BigInt::from(d[j]) * b.get(j, i)))
    })
}

/// Minimal positive skew-symmetrizer, normalized to gcd 1 on each connected
/// component of the non-zero pattern (isolated indices get 1).
pub fn find_skew_symmetrizer(b: &IntMatrix) -> Option<Vec<i64>> {
    if !b.is_square() {
        return None;
    }
    let n = b.rows;
    if (0..n).any(|i| !b.get(i, i).is_zero()) {
        return None;
    }
    let mut value: Vec<Option<BigRational>> = vec![None; n];
    let mut d = vec![BigInt::zero(); n];
    for root in 0..n {
        if value[root].is_some() {
            continue;
        }
        value[root] = Some(BigRational::one());
        let mut component = vec![root];
        let mut queue = VecDeque::from([root]);
        while let Some(i) = queue.pop_front() {
            let di = value[i].clone().expect("assigned before enqueue");
            for j in 0..n {
                let (bij, bji) = (b.get(i, j), b.get(j, i));
                if bij.is_zero() && bji.is_zero() {
                    continue;
                }
                // d_i b_ij = -d_j b_ji requires both non-zero with opposite signs.
                if bij.is_zero() || bji.is_zero() || bij.signum() == bji.signum() {
                    return None;
                }
                let dj = &di * BigRational::new(-bij.clone(), bji.clone());
                match &value[j] {
                    Some(existing) if *existing != dj => return None,
                    Some(_) => {}
                    None => {
                        value[j] = Some(dj);
                        component.push(j);
                        queue.push_back(j);
                    }
                }
            }
        }
        let lcm = component.iter().fold(BigInt::one(), |acc, &i| {
            acc.lcm(value[i].as_ref().expect("component assigned").denom())
        });
        let scaled: Vec<BigInt> = component
            .iter()
            .map(|&i| (value[i].as_ref().expect("component assigned") * &lcm).to_integer())
            .collect();
        let g = scaled.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
        for (&i, s) in component.iter().zip(&scaled) {
            d[i] = s / &g;
        }
    }
    d.iter().map(|x| x.to_i64()).collect()
}

/// A skew-symmetrizable square matrix together with its fixed symmetrizer.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExchangeMatrix {
    b: IntMatrix,
    d: Vec<i64>,
}

impl ExchangeMatrix {
    /// Wraps `b` with its canonical (gcd-normalized) skew-symmetrizer.
    pub fn new(b: IntMatrix) -> Result<Self> {
        let d = find_skew_symmetrizer(&b).ok_or_else(|| {
            Error::InvalidInput(format!("matrix {b} is not skew-symmetrizable"))
        })?;
        Ok(ExchangeMatrix { b, d })
    }

    pub fn with_symmetrizer(b: IntMatrix, d: Vec<i64>) -> Result<Self> {
        if !is_skew_symmetrized_by(&b, &d) {
            return Err(Error::InvalidInput(format!(
                "{d:?} does not skew-symmetrize {b}"
            )));
        }
        Ok(ExchangeMatrix { b, d })
    }

    pub fn from_rows<R, T>(rows: &[R]) -> Result<Self>
    where
        R: AsRef<[T]>,
        T: Clone + Into<BigInt>,
    {
        Self::new(IntMatrix::from_rows(rows)?)
    }

    pub fn rank(&self) -> usize {
        self.b.rows
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.b
    }

    pub fn symmetrizer(&self) -> &[i64] {
        &self.d
    }

    /// `mu_k(B)`; the symmetrizer is shared by all mutations.
    pub fn mutate(&self, k: usize) -> Result<Self> {
        let b = mutate_matrix(&self.b, k)?;
        if !is_skew_symmetrized_by(&b, &self.d) {
            return Err(Error::Consistency(format!(
                "symmetrizer {:?} lost after mutation in direction {k}",
                self.d
            )));
        }
        Ok(ExchangeMatrix { b, d: self.d.clone() })
    }

    /// Applies mutations in order.
    pub fn mutate_along(&self, path: &[usize]) -> Result<Self> {
        path.iter().try_fold(self.clone(), |m, &k| m.mutate(k))
    }
}

/// Standard finite-type examples used across tests, examples and the CLI.
pub mod catalog {
    use super::ExchangeMatrix;

    pub fn a1() -> ExchangeMatrix {
        ExchangeMatrix::from_rows(&[[0i64]]).expect("valid")
    }

    pub fn a2() -> ExchangeMatrix {
        ExchangeMatrix::from_rows(&[[0i64, 1], [-1, 0]]).expect("valid")
    }

    pub fn a3() -> ExchangeMatrix {
        ExchangeMatrix::from_rows(&[[0i64, 1, 0], [-1, 0, 1], [0, -1, 0]]).expect("valid")
    }

    pub fn b2() -> ExchangeMatrix {
        ExchangeMatrix::from_rows(&[[0i64, 1], [-2, 0]]).expect("valid")
    }

    pub fn g2() -> ExchangeMatrix {
        ExchangeMatrix::from_rows(&[[0i64, 1], [-3, 0]]).expect("valid")
    }

    /// Affine type, infinitely many clusters.
    pub fn kronecker() -> ExchangeMatrix {
        ExchangeMatrix::from_rows(&[[0i64, 2], [-2, 0]]).expect("valid")
    }

    pub fn by_name(name: &str) -> Option<ExchangeMatrix> {
        match name.to_ascii_uppercase().as_str() {
            "A1" => Some(a1()),
            "A2" => Some(a2()),
            "A3" => Some(a3()),
            "B2" => Some(b2()),
            "G2" => Some(g2()),
            "KRONECKER" => Some(kronecker()),
            _ => None,
        }
    }

    pub const FINITE: [&str; 4] = ["A2", "A3", "B2", "G2"];
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_rows(rows).unwrap()
    }

    #[test]
    fn rank_two_mutation_flips_signs() {
        let a = m(&[&[0, 1], &[-1, 0]]);
        assert_eq!(mutate_matrix(&a, 0).unwrap(), m(&[&[0, -1], &[1, 0]]));
    }

    #[test]
    fn a3_middle_mutation() {
        let a = m(&[&[0, 1, 0], &[-1, 0, 1], &[0, -1, 0]]);
        let mu = mutate_matrix(&a, 1).unwrap();
        assert_eq!(mu, m(&[&[0, -1, 1], &[1, 0, -1], &[-1, 1, 0]]));
        assert_eq!(mutate_matrix(&mu, 1).unwrap(), a);
    }

    #[test]
    fn involution_on_b2() {
        let a = m(&[&[0, 1], &[-2, 0]]);
        assert_eq!(mutate_matrix(&mutate_matrix(&a, 0).unwrap(), 0).unwrap(), a);
    }

    #[test]
    fn out_of_range_direction() {
        let a = m(&[&[0, 1], &[-1, 0]]);
        assert_eq!(
            mutate_matrix(&a, 2),
            Err(Error::IndexOutOfRange { index: 2, bound: 2 })
        );
    }

    #[test]
    fn symmetrizers() {
        assert_eq!(find_skew_symmetrizer(&m(&[&[0, 1], &[-1, 0]])), Some(vec![1, 1]));
        assert_eq!(find_skew_symmetrizer(&m(&[&[0, 1], &[-2, 0]])), Some(vec![2, 1]));
        assert_eq!(find_skew_symmetrizer(&m(&[&[0, 1], &[1, 0]])), None);
        assert_eq!(find_skew_symmetrizer(&m(&[&[0, 1], &[-3, 0]])), Some(vec![3, 1]));
        assert_eq!(find_skew_symmetrizer(&m(&[&[0, 0], &[0, 0]])), Some(vec![1, 1]));
        assert_eq!(find_skew_symmetrizer(&m(&[&[1]])), None);
        // one-sided zero pattern
        assert_eq!(find_skew_symmetrizer(&m(&[&[0, 1], &[0, 0]])), None);
        // inconsistent cycle
        let cyc = m(&[&[0, 1, -1], &[-2, 0, 1], &[1, -1, 0]]);
        assert_eq!(find_skew_symmetrizer(&cyc), None);
    }

    #[test]
    fn extended_mutation_example() {
        let bt = m(&[&[0, 1], &[-1, 0], &[1, 0], &[0, 1]]);
        let mu = mutate_extended(&bt, 0).unwrap();
        assert_eq!(mu, m(&[&[0, -1], &[1, 0], &[-1, 1], &[0, 1]]));
        let (top, bottom) = mu.split_rows(2);
        assert_eq!(top, mutate_matrix(&m(&[&[0, 1], &[-1, 0]]), 0).unwrap());
        assert_eq!(bottom, m(&[&[-1, 1], &[0, 1]]));
        assert!(matches!(
            mutate_extended(&m(&[&[0, 1], &[-1, 0]]), 0),
            Err(Error::ShapeMismatch(_))
        ));
    }

    #[test]
    fn ragged_rows_rejected() {
        let rows: Vec<Vec<i64>> = vec![vec![0, 1], vec![1]];
        assert!(matches!(IntMatrix::from_rows(&rows), Err(Error::ShapeMismatch(_))));
    }

    #[test]
    fn determinant_small() {
        assert_eq!(m(&[&[-1, 1], &[0, 1]]).determinant().unwrap(), BigInt::from(-1));
        assert_eq!(
            m(&[&[2, 0, 1], &[1, 3, 2], &[1, 1, 2]]).determinant().unwrap(),
            BigInt::from(6)
        );
        assert_eq!(m(&[&[0, 1], &[0, 2]]).determinant().unwrap(), BigInt::zero());
    }
}

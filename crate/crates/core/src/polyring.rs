//! Sparse exact polynomials: Laurent in `x_1..x_n`, ordinary in `y_1..y_n`.
//!
//! Cluster variables with principal coefficients live in
//! `Z[x^{±1}, y]`; F-polynomials live in `Z[y]`. Both use `BTreeMap`
//! storage, so iteration is lexicographic on `(yexp, xexp)` and the zero
//! polynomial is the empty map.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{check_rank, Error, Result};

/// Default bound on the number of terms any single polynomial may reach.
pub const DEFAULT_MAX_TERMS: usize = 1_000_000;

/// A monomial `x^x y^y`. Field order makes the derived `Ord` lexicographic
/// on `(y, x)`, which is a group order on `N^n x Z^n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    pub y: Vec<u32>,
    pub x: Vec<i64>,
}

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial {
            y: vec![0; n],
            x: vec![0; n],
        }
    }

    pub fn x_only(x: Vec<i64>) -> Self {
        Monomial {
            y: vec![0; x.len()],
            x,
        }
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            y: self.y.iter().zip(&other.y).map(|(a, b)| a + b).collect(),
            x: self.x.iter().zip(&other.x).map(|(a, b)| a + b).collect(),
        }
    }

    /// `self / other`, `None` when a y-exponent would become negative.
    fn div(&self, other: &Monomial) -> Option<Monomial> {
        let y = self
            .y
            .iter()
            .zip(&other.y)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<u32>>>()?;
        Some(Monomial {
            y,
            x: self.x.iter().zip(&other.x).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn y_is_zero(&self) -> bool {
        self.y.iter().all(|&e| e == 0)
    }
}

/// Polynomial in `Z[x_1^{±1}..x_n^{±1}, y_1..y_n]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LaurentPoly {
    n: usize,
    terms: BTreeMap<Monomial, BigInt>,
}

fn insert_term<K: Ord>(map: &mut BTreeMap<K, BigInt>, key: K, coeff: BigInt) {
    if coeff.is_zero() {
        return;
    }
    match map.entry(key) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(coeff);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            *e.get_mut() += coeff;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

fn check_terms(len: usize, max_terms: usize) -> Result<()> {
    if len > max_terms {
        Err(Error::ResourceCap(format!(
            "polynomial reached {len} terms (cap {max_terms})"
        )))
    } else {
        Ok(())
    }
}

impl LaurentPoly {
    pub fn zero(n: usize) -> Self {
        LaurentPoly {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        Self::term(n, Monomial::one(n), BigInt::one())
    }

    /// The variable `x_i`.
    pub fn x(n: usize, i: usize) -> Self {
        let mut m = Monomial::one(n);
        m.x[i] = 1;
        Self::term(n, m, BigInt::one())
    }

    /// The variable `y_j`.
    pub fn y(n: usize, j: usize) -> Self {
        let mut m = Monomial::one(n);
        m.y[j] = 1;
        Self::term(n, m, BigInt::one())
    }

    pub fn term(n: usize, monomial: Monomial, coeff: BigInt) -> Self {
        let mut p = Self::zero(n);
        insert_term(&mut p.terms, monomial, coeff);
        p
    }

    /// Collects terms, merging repeated monomials and dropping zeros.
    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (Monomial, BigInt)>) -> Result<Self> {
        let mut p = Self::zero(n);
        for (m, c) in terms {
            if m.x.len() != n || m.y.len() != n {
                return Err(Error::RankMismatch {
                    left: n,
                    right: m.x.len().max(m.y.len()),
                });
            }
            insert_term(&mut p.terms, m, c);
        }
        Ok(p)
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    fn leading(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.iter().next_back()
    }

    pub fn try_add(&self, other: &LaurentPoly) -> Result<Self> {
        check_rank(self.n, other.n)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            insert_term(&mut out.terms, m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &LaurentPoly) -> Result<Self> {
        check_rank(self.n, other.n)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            insert_term(&mut out.terms, m.clone(), -c);
        }
        Ok(out)
    }

    /// Product, failing with a resource error past `max_terms` terms.
    pub fn try_mul(&self, other: &LaurentPoly, max_terms: usize) -> Result<Self> {
        check_rank(self.n, other.n)?;
        let mut out = Self::zero(self.n);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                insert_term(&mut out.terms, ma.mul(mb), ca * cb);
            }
            check_terms(out.len(), max_terms)?;
        }
        Ok(out)
    }

    pub fn try_pow(&self, e: u32, max_terms: usize) -> Result<Self> {
        let mut acc = Self::one(self.n);
        for _ in 0..e {
            acc = acc.try_mul(self, max_terms)?;
        }
        Ok(acc)
    }

    fn mul_term(&self, m: &Monomial, c: &BigInt) -> LaurentPoly {
        LaurentPoly {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(mm, cc)| (mm.mul(m), cc * c))
                .collect(),
        }
    }

    /// Division by a unit monomial (single term, coefficient ±1). Dividing
    /// by an x-monomial is always exact in the Laurent ring; a y-part that
    /// does not divide every term is reported as `InexactDivision`.
    pub fn div_monomial(&self, divisor: &LaurentPoly) -> Result<Self> {
        check_rank(self.n, divisor.n)?;
        let (m, c) = match divisor.terms.iter().collect::<Vec<_>>().as_slice() {
            [(m, c)] if c.abs().is_one() => ((*m).clone(), (*c).clone()),
            _ => return Err(Error::NonMonomialDivisor),
        };
        let mut out = Self::zero(self.n);
        for (mm, cc) in &self.terms {
            let q = mm.div(&m).ok_or(Error::InexactDivision)?;
            out.terms.insert(q, cc * &c);
        }
        Ok(out)
    }

    /// Exact division by an arbitrary non-zero divisor via leading-term
    /// elimination in the `(y, x)` lexicographic group order. Non-divisible
    /// leading terms are reported as `InexactDivision`; the loop is bounded
    /// by `max_terms` steps because Laurent orders are not well-founded.
    pub fn exact_div(&self, divisor: &LaurentPoly, max_terms: usize) -> Result<Self> {
        check_rank(self.n, divisor.n)?;
        if divisor.is_zero() {
            return Err(Error::InexactDivision);
        }
        if divisor.len() == 1 {
            let (_, c) = divisor.leading().expect("non-empty");
            if c.abs().is_one() {
                return self.div_monomial(divisor);
            }
        }
        let (lm_d, lc_d) = {
            let (m, c) = divisor.leading().expect("non-empty");
            (m.clone(), c.clone())
        };
        let mut rem = self.clone();
        let mut quot = Self::zero(self.n);
        let mut steps = 0usize;
        while let Some((lm_r, lc_r)) = rem.leading() {
            steps += 1;
            if steps > max_terms {
                return Err(Error::ResourceCap(format!(
                    "division did not terminate within {max_terms} steps"
                )));
            }
            let t = lm_r.div(&lm_d).ok_or(Error::InexactDivision)?;
            let (c, r) = lc_r.div_rem(&lc_d);
            if !r.is_zero() {
                return Err(Error::InexactDivision);
            }
            let step = divisor.mul_term(&t, &c);
            insert_term(&mut quot.terms, t, c);
            for (m, cc) in step.terms {
                insert_term(&mut rem.terms, m, -cc);
            }
            check_terms(quot.len(), max_terms)?;
        }
        Ok(quot)
    }

    /// Sets every `x_i = 1`, merging terms with equal y-exponents.
    pub fn specialize_x_to_one(&self) -> YPolynomial {
        let mut out = YPolynomial::zero(self.n);
        for (m, c) in &self.terms {
            insert_term(&mut out.terms, m.y.clone(), c.clone());
        }
        out
    }

    /// Sets every `y_j = 1`.
    pub fn specialize_y_to_one(&self) -> LaurentPoly {
        let mut out = Self::zero(self.n);
        for (m, c) in &self.terms {
            insert_term(&mut out.terms, Monomial::x_only(m.x.clone()), c.clone());
        }
        out
    }

    /// Terms with y-exponent zero.
    pub fn y_degree_zero_terms(&self) -> Vec<(&Monomial, &BigInt)> {
        self.terms.iter().filter(|(m, _)| m.y_is_zero()).collect()
    }

    /// Degree of a monomial under `deg x_i = e_i`, `deg y_j = y_weights[j]`.
    pub fn degree_of(m: &Monomial, y_weights: &[Vec<i64>]) -> Vec<i64> {
        let mut deg = m.x.clone();
        for (j, &e) in m.y.iter().enumerate() {
            for (d, w) in deg.iter_mut().zip(&y_weights[j]) {
                *d += i64::from(e) * w;
            }
        }
        deg
    }

    /// Common degree of all terms, `None` if inhomogeneous or zero.
    pub fn homogeneous_degree(&self, y_weights: &[Vec<i64>]) -> Option<Vec<i64>> {
        let mut it = self.terms.keys().map(|m| Self::degree_of(m, y_weights));
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    /// Panics on rank mismatch; use [`LaurentPoly::try_add`] to get an error.
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.try_add(rhs).expect("rank mismatch in polynomial addition")
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.try_sub(rhs).expect("rank mismatch in polynomial subtraction")
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.try_mul(rhs, usize::MAX)
            .expect("rank mismatch in polynomial multiplication")
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            n: self.n,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

fn write_factor(f: &mut fmt::Formatter<'_>, name: &str, i: usize, e: i64, first: &mut bool) -> fmt::Result {
    if e == 0 {
        return Ok(());
    }
    if !*first {
        write!(f, "*")?;
    }
    *first = false;
    if e == 1 {
        write!(f, "{name}{}", i + 1)
    } else {
        write!(f, "{name}{}^{e}", i + 1)
    }
}

fn write_signed(f: &mut fmt::Formatter<'_>, c: &BigInt, first_term: bool, constant: bool) -> fmt::Result {
    let neg = c.is_negative();
    let abs = c.abs();
    match (first_term, neg) {
        (true, true) => write!(f, "-")?,
        (true, false) => {}
        (false, true) => write!(f, " - ")?,
        (false, false) => write!(f, " + ")?,
    }
    if constant || !abs.is_one() {
        write!(f, "{abs}")?;
        if !constant {
            write!(f, "*")?;
        }
    }
    Ok(())
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            let constant = m.y_is_zero() && m.x.iter().all(|&e| e == 0);
            write_signed(f, c, idx == 0, constant)?;
            let mut first = true;
            for (i, &e) in m.x.iter().enumerate() {
                write_factor(f, "x", i, e, &mut first)?;
            }
            for (j, &e) in m.y.iter().enumerate() {
                write_factor(f, "y", j, i64::from(e), &mut first)?;
            }
        }
        Ok(())
    }
}

/// Polynomial in `Z[y_1..y_n]`, e.g. an F-polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct YPolynomial {
    n: usize,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl YPolynomial {
    pub fn zero(n: usize) -> Self {
        YPolynomial {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        Self::monomial(vec![0; n], BigInt::one())
    }

    pub fn monomial(exp: Vec<u32>, coeff: BigInt) -> Self {
        let mut p = Self::zero(exp.len());
        insert_term(&mut p.terms, exp, coeff);
        p
    }

    pub fn y(n: usize, j: usize) -> Self {
        let mut e = vec![0; n];
        e[j] = 1;
        Self::monomial(e, BigInt::one())
    }

    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (Vec<u32>, BigInt)>) -> Result<Self> {
        let mut p = Self::zero(n);
        for (e, c) in terms {
            check_rank(n, e.len())?;
            insert_term(&mut p.terms, e, c);
        }
        Ok(p)
    }

    /// Convenience constructor from small integer data.
    pub fn from_i64_terms(n: usize, terms: &[(&[u32], i64)]) -> Result<Self> {
        Self::from_terms(n, terms.iter().map(|(e, c)| (e.to_vec(), BigInt::from(*c))))
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.constant_term().is_one()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: &[u32]) -> BigInt {
        self.terms.get(e).cloned().unwrap_or_default()
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff(&vec![0; self.n])
    }

    pub fn has_nonnegative_coefficients(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Exponent vectors with non-zero coefficient, in lexicographic order.
    pub fn support(&self) -> Result<Vec<Vec<i64>>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        Ok(self
            .terms
            .keys()
            .map(|e| e.iter().map(|&v| i64::from(v)).collect())
            .collect())
    }

    pub fn try_add(&self, other: &YPolynomial) -> Result<Self> {
        check_rank(self.n, other.n)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            insert_term(&mut out.terms, e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &YPolynomial, max_terms: usize) -> Result<Self> {
        check_rank(self.n, other.n)?;
        let mut out = Self::zero(self.n);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                insert_term(&mut out.terms, e, ca * cb);
            }
            check_terms(out.len(), max_terms)?;
        }
        Ok(out)
    }

    pub fn try_pow(&self, e: u32, max_terms: usize) -> Result<Self> {
        let mut acc = Self::one(self.n);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.try_mul(&base, max_terms)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.try_mul(&base, max_terms)?;
            }
        }
        Ok(acc)
    }

    /// Sum of `(exponent, coefficient)` at `y = 1`.
    pub fn eval_at_ones(&self) -> BigInt {
        self.terms.values().sum()
    }
}

impl Add for &YPolynomial {
    type Output = YPolynomial;
    fn add(self, rhs: &YPolynomial) -> YPolynomial {
        self.try_add(rhs).expect("rank mismatch in polynomial addition")
    }
}

impl Mul for &YPolynomial {
    type Output = YPolynomial;
    fn mul(self, rhs: &YPolynomial) -> YPolynomial {
        self.try_mul(rhs, usize::MAX)
            .expect("rank mismatch in polynomial multiplication")
    }
}

impl fmt::Display for YPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (e, c)) in self.terms.iter().enumerate() {
            let constant = e.iter().all(|&v| v == 0);
            write_signed(f, c, idx == 0, constant)?;
            let mut first = true;
            for (j, &v) in e.iter().enumerate() {
                write_factor(f, "y", j, i64::from(v), &mut first)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn yp(n: usize, terms: &[(&[u32], i64)]) -> YPolynomial {
        YPolynomial::from_i64_terms(n, terms).unwrap()
    }

    fn lp(n: usize, terms: &[(&[i64], &[u32], i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(
            n,
            terms.iter().map(|(x, y, c)| {
                (
                    Monomial {
                        x: x.to_vec(),
                        y: y.to_vec(),
                    },
                    BigInt::from(*c),
                )
            }),
        )
        .unwrap()
    }

    #[test]
    fn product_of_binomials() {
        let a = yp(2, &[(&[0, 0], 1), (&[1, 0], 1)]);
        let b = yp(2, &[(&[0, 0], 1), (&[0, 1], 1)]);
        let expected = yp(2, &[(&[0, 0], 1), (&[1, 0], 1), (&[0, 1], 1), (&[1, 1], 1)]);
        assert_eq!(&a * &b, expected);
    }

    #[test]
    fn additive_inverse_is_empty() {
        let p = lp(2, &[(&[1, -1], &[0, 1], 3), (&[0, 0], &[0, 0], -2)]);
        let z = &p + &(-&p);
        assert!(z.is_zero());
        assert_eq!(z.len(), 0);
    }

    #[test]
    fn rank_mismatch_is_an_error() {
        assert_eq!(
            LaurentPoly::one(2).try_add(&LaurentPoly::one(3)),
            Err(Error::RankMismatch { left: 2, right: 3 })
        );
    }

    #[test]
    fn monomial_division() {
        let p = lp(2, &[(&[1, 0], &[0, 0], 1), (&[2, 0], &[0, 0], 1)]);
        let q = p.div_monomial(&LaurentPoly::x(2, 0)).unwrap();
        assert_eq!(q, lp(2, &[(&[0, 0], &[0, 0], 1), (&[1, 0], &[0, 0], 1)]));
        assert_eq!(p.div_monomial(&LaurentPoly::one(2)).unwrap(), p);
        let two_terms = &LaurentPoly::x(2, 0) + &LaurentPoly::one(2);
        assert_eq!(p.div_monomial(&two_terms), Err(Error::NonMonomialDivisor));
        assert_eq!(
            LaurentPoly::one(2).div_monomial(&LaurentPoly::y(2, 0)),
            Err(Error::InexactDivision)
        );
    }

    #[test]
    fn exchange_numerator_division() {
        // (y1 + x2) / x1 at the first A2 mutation
        let num = &LaurentPoly::y(2, 0) + &LaurentPoly::x(2, 1);
        let q = num.div_monomial(&LaurentPoly::x(2, 0)).unwrap();
        assert_eq!(q, lp(2, &[(&[-1, 1], &[0, 0], 1), (&[-1, 0], &[1, 0], 1)]));
        let at_ones: BigInt = q.terms().map(|(_, c)| c.clone()).sum();
        assert_eq!(at_ones, BigInt::from(2));
    }

    #[test]
    fn general_exact_division() {
        let a = lp(2, &[(&[1, 0], &[0, 0], 1), (&[0, -1], &[1, 0], 2)]);
        let b = lp(2, &[(&[0, 1], &[0, 0], 1), (&[-1, 0], &[0, 1], -1), (&[0, 0], &[0, 0], 3)]);
        let prod = &a * &b;
        assert_eq!(prod.exact_div(&b, 1000).unwrap(), a);
        assert_eq!(prod.exact_div(&a, 1000).unwrap(), b);
        // 1 + y1 does not divide 1 + y2
        let p = lp(2, &[(&[0, 0], &[0, 0], 1), (&[0, 0], &[0, 1], 1)]);
        let d = lp(2, &[(&[0, 0], &[0, 0], 1), (&[0, 0], &[1, 0], 1)]);
        assert_eq!(p.exact_div(&d, 1000), Err(Error::InexactDivision));
        // coefficient not divisible
        let two = lp(2, &[(&[0, 0], &[0, 0], 2), (&[1, 0], &[0, 0], 2)]);
        assert_eq!(LaurentPoly::one(2).exact_div(&two, 1000), Err(Error::InexactDivision));
    }

    #[test]
    fn specialization_and_support() {
        // principal-coefficient x4 of A2: (x1 y1 y2 + y1 + x2) / (x1 x2)
        let x4 = lp(
            2,
            &[(&[0, -1], &[1, 1], 1), (&[-1, -1], &[1, 0], 1), (&[-1, 0], &[0, 0], 1)],
        );
        let f = x4.specialize_x_to_one();
        assert_eq!(f, yp(2, &[(&[0, 0], 1), (&[1, 0], 1), (&[1, 1], 1)]));
        assert_eq!(f.support().unwrap(), vec![vec![0, 0], vec![1, 0], vec![1, 1]]);
        assert_eq!(lp(2, &[(&[3, -2], &[0, 0], 1)]).specialize_x_to_one(), YPolynomial::one(2));
        assert!(LaurentPoly::zero(2).specialize_x_to_one().is_zero());
        assert_eq!(YPolynomial::zero(2).support(), Err(Error::ZeroPolynomial));
        let sq = yp(1, &[(&[0], 1), (&[1], 1)]).try_pow(2, 100).unwrap();
        assert_eq!(sq, yp(1, &[(&[0], 1), (&[1], 2), (&[2], 1)]));
        assert_eq!(sq.support().unwrap(), vec![vec![0], vec![1], vec![2]]);
    }

    #[test]
    fn term_cap_is_enforced() {
        let p = lp(1, &[(&[0], &[0], 1), (&[1], &[0], 1)]);
        let big = p.try_pow(5, 100).unwrap();
        assert_eq!(big.len(), 6);
        assert!(matches!(p.try_pow(10, 5), Err(Error::ResourceCap(_))));
    }

    #[test]
    fn display() {
        let f = yp(2, &[(&[0, 0], 1), (&[1, 0], 2), (&[1, 1], 1)]);
        assert_eq!(f.to_string(), "1 + 2*y1 + y1*y2");
        let p = lp(2, &[(&[-1, 1], &[0, 0], 1), (&[-1, 0], &[1, 0], -1)]);
        assert_eq!(p.to_string(), "x1^-1*x2 - x1^-1*y1");
    }
}

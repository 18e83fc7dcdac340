//! Lattice polytopes given by generating points.
//!
//! All predicates reduce to exact hull membership (see [`crate::simplex`])
//! and to support-function values, so no facet description is ever built.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{check_rank, Error, Result};
use crate::polyring::YPolynomial;
use crate::simplex::in_convex_hull;

/// Convex hull of a finite non-empty set of integer points.
#[derive(Clone)]
pub struct LatticePolytope {
    dim: usize,
    points: Vec<Vec<i64>>,
    vertices: OnceLock<Vec<Vec<i64>>>,
}

impl PartialEq for LatticePolytope {
    /// Equality of generator sets. Use [`LatticePolytope::equals`] for hulls.
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.points == other.points
    }
}

impl Eq for LatticePolytope {}

impl fmt::Debug for LatticePolytope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("LatticePolytope")
            .field("dim", &self.dim)
            .field("points", &self.points)
            .finish()
    }
}

fn to_rational(v: &[i64]) -> Vec<BigRational> {
    v.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect()
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

impl LatticePolytope {
    /// Builds the hull of `points`; duplicates are dropped and the rest sorted.
    pub fn from_points(dim: usize, points: impl IntoIterator<Item = Vec<i64>>) -> Result<Self> {
        let set: BTreeSet<Vec<i64>> = points.into_iter().collect();
        if set.is_empty() {
            return Err(Error::ShapeMismatch("polytope needs at least one point".into()));
        }
        for p in &set {
            check_rank(dim, p.len())?;
        }
        Ok(LatticePolytope {
            dim,
            points: set.into_iter().collect(),
            vertices: OnceLock::new(),
        })
    }

    /// The single point `{0}`.
    pub fn origin(dim: usize) -> Self {
        Self::from_points(dim, [vec![0; dim]]).expect("one point")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn points(&self) -> &[Vec<i64>] {
        &self.points
    }

    /// Generators that are vertices of the hull, in lexicographic order.
    pub fn vertices(&self) -> &[Vec<i64>] {
        self.vertices.get_or_init(|| {
            if self.points.len() <= 2 {
                return self.points.clone();
            }
            let rat: Vec<Vec<BigRational>> = self.points.iter().map(|p| to_rational(p)).collect();
            (0..self.points.len())
                .filter(|&i| {
                    let rest: Vec<Vec<BigRational>> = rat
                        .iter()
                        .enumerate()
                        .filter(|&(j, _)| j != i)
                        .map(|(_, p)| p.clone())
                        .collect();
                    !in_convex_hull(&rest, &rat[i])
                })
                .map(|i| self.points[i].clone())
                .collect()
        })
    }

    /// Exact membership of a rational point.
    pub fn contains(&self, q: &[BigRational]) -> Result<bool> {
        check_rank(self.dim, q.len())?;
        let verts: Vec<Vec<BigRational>> = self.vertices().iter().map(|p| to_rational(p)).collect();
        Ok(in_convex_hull(&verts, q))
    }

    /// Membership of an integer point, with cheap exits before the LP.
    pub fn contains_point(&self, q: &[i64]) -> Result<bool> {
        check_rank(self.dim, q.len())?;
        if self.points.binary_search_by(|p| p.as_slice().cmp(q)).is_ok() {
            return Ok(true);
        }
        for d in 0..self.dim {
            let lo = self.points.iter().map(|p| p[d]).min().expect("non-empty");
            let hi = self.points.iter().map(|p| p[d]).max().expect("non-empty");
            if q[d] < lo || q[d] > hi {
                return Ok(false);
            }
        }
        self.contains(&to_rational(q))
    }

    /// `h_P(r) = max <a, r>` over the polytope.
    pub fn support_function(&self, r: &[i64]) -> Result<i64> {
        check_rank(self.dim, r.len())?;
        Ok(self.support_unchecked(r))
    }

    fn support_unchecked(&self, r: &[i64]) -> i64 {
        self.points.iter().map(|p| dot(p, r)).max().expect("non-empty")
    }

    /// Whether `self` is contained in `other`.
    pub fn is_subset_of(&self, other: &LatticePolytope) -> Result<bool> {
        check_rank(self.dim, other.dim)?;
        for p in self.vertices() {
            if !other.contains_point(p)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Hull equality by mutual containment.
    pub fn equals(&self, other: &LatticePolytope) -> Result<bool> {
        check_rank(self.dim, other.dim)?;
        if self.points == other.points {
            return Ok(true);
        }
        // differing support values on a coordinate direction settle it fast
        for d in 0..self.dim {
            let mut e = vec![0; self.dim];
            for s in [1, -1] {
                e[d] = s;
                if self.support_unchecked(&e) != other.support_unchecked(&e) {
                    return Ok(false);
                }
            }
        }
        Ok(self.is_subset_of(other)? && other.is_subset_of(self)?)
    }

    /// Minkowski sum keeping every pairwise sum of generators.
    pub fn minkowski_sum(&self, other: &LatticePolytope) -> Result<LatticePolytope> {
        check_rank(self.dim, other.dim)?;
        let sums = self.points.iter().flat_map(|a| {
            other
                .points
                .iter()
                .map(move |b| a.iter().zip(b).map(|(x, y)| x + y).collect::<Vec<i64>>())
        });
        LatticePolytope::from_points(self.dim, sums)
    }

    /// Same hull with only the vertices as generators.
    pub fn pruned(&self) -> LatticePolytope {
        let verts = self.vertices().to_vec();
        let out = LatticePolytope::from_points(self.dim, verts.clone()).expect("non-empty");
        let _ = out.vertices.set(verts);
        out
    }

    /// Support values on every direction in `{-1,0,1}^n`. Equal polytopes
    /// have equal signatures, so the signature is a sound grouping key.
    pub fn support_signature(&self) -> Vec<i64> {
        sign_directions(self.dim)
            .iter()
            .map(|r| self.support_unchecked(r))
            .collect()
    }

    /// Independent equality test: compares support values on all
    /// differences of vertices plus the coordinate directions.
    pub fn equal_by_support_sampling(&self, other: &LatticePolytope) -> Result<bool> {
        check_rank(self.dim, other.dim)?;
        let verts: Vec<&Vec<i64>> = self.vertices().iter().chain(other.vertices()).collect();
        let mut dirs: BTreeSet<Vec<i64>> = BTreeSet::new();
        for d in 0..self.dim {
            let mut e = vec![0; self.dim];
            e[d] = 1;
            dirs.insert(e.clone());
            e[d] = -1;
            dirs.insert(e);
        }
        for a in &verts {
            for b in &verts {
                dirs.insert(a.iter().zip(b.iter()).map(|(x, y)| x - y).collect());
            }
        }
        Ok(dirs
            .iter()
            .all(|r| self.support_unchecked(r) == other.support_unchecked(r)))
    }
}

impl fmt::Display for LatticePolytope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "hull{{")?;
        for (i, p) in self.vertices().iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "(")?;
            for (j, x) in p.iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, ")")?;
        }
        write!(f, "}}")
    }
}

/// All non-zero vectors in `{-1,0,1}^n`.
pub fn sign_directions(n: usize) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v| {
                [-1, 0, 1].into_iter().map(move |s| {
                    let mut w = v.clone();
                    w.push(s);
                    w
                })
            })
            .collect();
    }
    out.retain(|v| v.iter().any(|&x| x != 0));
    out
}

/// Newton polytope of a non-zero y-polynomial.
pub fn newton_polytope(f: &YPolynomial) -> Result<LatticePolytope> {
    LatticePolytope::from_points(f.rank(), f.support()?)
}

/// Tropical evaluation `F[r] = max <v, r>` over the support of `F`.
pub fn tropical_eval(f: &YPolynomial, r: &[i64]) -> Result<i64> {
    check_rank(f.rank(), r.len())?;
    f.terms()
        .map(|(e, _)| e.iter().zip(r).map(|(&a, &b)| i64::from(a) * b).sum())
        .max()
        .ok_or(Error::ZeroPolynomial)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(dim: usize, pts: &[&[i64]]) -> LatticePolytope {
        LatticePolytope::from_points(dim, pts.iter().map(|p| p.to_vec())).unwrap()
    }

    fn yp(n: usize, terms: &[&[u32]]) -> YPolynomial {
        YPolynomial::from_i64_terms(n, &terms.iter().map(|e| (*e, 1)).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn newton_polytope_examples() {
        let p = newton_polytope(&yp(2, &[&[0, 0], &[1, 0], &[1, 1]])).unwrap();
        assert_eq!(p.vertices(), &[vec![0, 0], vec![1, 0], vec![1, 1]]);
        let sq = YPolynomial::from_i64_terms(2, &[(&[0, 0], 1), (&[1, 0], 2), (&[2, 0], 1)]).unwrap();
        let seg = newton_polytope(&sq).unwrap();
        assert_eq!(seg.vertices(), &[vec![0, 0], vec![2, 0]]);
        assert_eq!(newton_polytope(&YPolynomial::one(2)).unwrap().points(), &[vec![0, 0]]);
        assert_eq!(newton_polytope(&YPolynomial::zero(2)).unwrap_err(), Error::ZeroPolynomial);
    }

    #[test]
    fn membership() {
        let seg = poly(2, &[&[0, 0], &[2, 0]]);
        assert!(seg.contains_point(&[1, 0]).unwrap());
        let tri = poly(2, &[&[0, 0], &[1, 0], &[1, 1]]);
        assert!(!tri.contains_point(&[0, 1]).unwrap());
        for p in tri.points() {
            assert!(tri.contains_point(p).unwrap());
        }
        assert!(tri.contains_point(&[1, 0, 0]).is_err());
    }

    #[test]
    fn equality() {
        let a = poly(2, &[&[0, 0], &[2, 0]]);
        let b = poly(2, &[&[0, 0], &[1, 0], &[2, 0]]);
        assert!(a.equals(&b).unwrap());
        let x3 = poly(2, &[&[0, 0], &[1, 0]]);
        let x5 = poly(2, &[&[0, 0], &[0, 1]]);
        assert!(!x3.equals(&x5).unwrap());
        assert!(x3.equals(&x3).unwrap());
    }

    #[test]
    fn minkowski() {
        let x3 = poly(2, &[&[0, 0], &[1, 0]]);
        let x5 = poly(2, &[&[0, 0], &[0, 1]]);
        let sq = x3.minkowski_sum(&x5).unwrap();
        assert_eq!(sq.vertices().len(), 4);
        assert!(LatticePolytope::origin(2).minkowski_sum(&sq).unwrap().equals(&sq).unwrap());
        let f3 = yp(2, &[&[0, 0], &[1, 0]]);
        let f4 = yp(2, &[&[0, 0], &[1, 0], &[1, 1]]);
        let lhs = newton_polytope(&(&f3 * &f4)).unwrap();
        let rhs = newton_polytope(&f3).unwrap().minkowski_sum(&newton_polytope(&f4).unwrap()).unwrap();
        assert!(lhs.equals(&rhs).unwrap());
    }

    #[test]
    fn support_and_tropical() {
        let f = yp(2, &[&[0, 0], &[1, 0], &[1, 1]]);
        let p = newton_polytope(&f).unwrap();
        assert_eq!(p.support_function(&[-2, 1]).unwrap(), 0);
        assert_eq!(tropical_eval(&f, &[-2, 1]).unwrap(), 0);
        assert_eq!(tropical_eval(&YPolynomial::one(2), &[7, -3]).unwrap(), 0);
        let g = &yp(2, &[&[0, 0], &[1, 0]]) * &yp(2, &[&[0, 0], &[0, 1]]);
        assert_eq!(tropical_eval(&g, &[3, 5]).unwrap(), 8);
        assert_eq!(LatticePolytope::origin(3).support_function(&[1, -4, 2]).unwrap(), 0);
    }

    #[test]
    fn signature_and_sampling() {
        assert_eq!(sign_directions(2).len(), 8);
        let a = poly(2, &[&[0, 0], &[2, 0], &[1, 0]]);
        let b = poly(2, &[&[2, 0], &[0, 0]]);
        assert_eq!(a.support_signature(), b.support_signature());
        assert!(a.equal_by_support_sampling(&b).unwrap());
        let c = poly(2, &[&[0, 0], &[2, 1]]);
        assert!(!a.equal_by_support_sampling(&c).unwrap());
    }
}

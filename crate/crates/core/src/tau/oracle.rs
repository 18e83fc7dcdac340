//! Brute-force linear algebra over the rationals, used to cross-check the
//! closed formulas in [`super::module`].

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::module::{Interval, LinearA};
use crate::error::{Error, Result};

/// A representation of `1 -> ... -> n`: a dimension per vertex and a matrix
/// `dims[i+1] x dims[i]` per arrow.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    pub dims: Vec<usize>,
    pub maps: Vec<Vec<Vec<BigRational>>>,
}

impl Representation {
    /// `M[a,b]` with identity maps inside the support.
    pub fn interval(alg: &LinearA, m: Interval) -> Self {
        let n = alg.rank();
        let dims: Vec<usize> = (1..=n).map(|i| usize::from(m.contains(i))).collect();
        let maps = (0..n.saturating_sub(1))
            .map(|i| {
                (0..dims[i + 1])
                    .map(|_| (0..dims[i]).map(|_| BigRational::one()).collect())
                    .collect()
            })
            .collect();
        Representation { dims, maps }
    }

    pub fn dim_vector(&self) -> Vec<i64> {
        self.dims.iter().map(|&d| d as i64).collect()
    }
}

/// Rank of a rational matrix by Gaussian elimination.
pub fn rank(mut rows: Vec<Vec<BigRational>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let pivot = rows[r][c].clone();
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = &rows[i][c] / &pivot;
                for j in c..cols {
                    let t = &f * &rows[r][j];
                    rows[i][j] -= t;
                }
            }
        }
        r += 1;
    }
    r
}

/// `dim Hom(M, N)` as the nullity of `N_α f_i - f_{i+1} M_α = 0`.
pub fn hom_dim_reps(m: &Representation, n: &Representation) -> usize {
    let verts = m.dims.len();
    // unknown (i, r, c) is entry (r, c) of f_i: N_i x M_i
    let mut offset = vec![0; verts + 1];
    for i in 0..verts {
        offset[i + 1] = offset[i] + n.dims[i] * m.dims[i];
    }
    let unknowns = offset[verts];
    if unknowns == 0 {
        return 0;
    }
    let var = |i: usize, r: usize, c: usize| offset[i] + r * m.dims[i] + c;
    let mut eqs = Vec::new();
    for i in 0..verts.saturating_sub(1) {
        for r in 0..n.dims[i + 1] {
            for c in 0..m.dims[i] {
                let mut row = vec![BigRational::zero(); unknowns];
                for k in 0..n.dims[i] {
                    row[var(i, k, c)] += &n.maps[i][r][k];
                }
                for k in 0..m.dims[i + 1] {
                    row[var(i + 1, r, k)] -= &m.maps[i][k][c];
                }
                eqs.push(row);
            }
        }
    }
    unknowns - rank(eqs)
}

pub fn hom_dim_oracle(alg: &LinearA, m: Interval, n: Interval) -> u32 {
    let d = hom_dim_reps(&Representation::interval(alg, m), &Representation::interval(alg, n));
    u32::try_from(d).expect("small")
}

/// `dim Ext^1(M, N) = hom(M, N) - <dim M, dim N>` (the algebra is hereditary).
pub fn ext_dim_oracle(alg: &LinearA, m: Interval, n: Interval) -> u32 {
    let e = i64::from(hom_dim_oracle(alg, m, n)) - alg.euler_form(&alg.dim_vector(m), &alg.dim_vector(n));
    u32::try_from(e).expect("Euler form bounded by hom")
}

/// `τM` recovered from the Auslander-Reiten formula
/// `hom(X, τM) = ext(M, X)`: the unique interval (or zero) whose
/// hom-from profile matches for every indecomposable `X`.
pub fn tau_oracle(alg: &LinearA, m: Interval) -> Result<Option<Interval>> {
    let all = alg.intervals();
    let profile: Vec<u32> = all.iter().map(|&x| ext_dim_oracle(alg, m, x)).collect();
    if profile.iter().all(|&e| e == 0) {
        return Ok(None);
    }
    let found: Vec<Interval> = all
        .iter()
        .copied()
        .filter(|&t| all.iter().zip(&profile).all(|(&x, &e)| hom_dim_oracle(alg, x, t) == e))
        .collect();
    match found.as_slice() {
        [t] => Ok(Some(*t)),
        _ => Err(Error::Consistency(format!(
            "{} intervals match the Auslander-Reiten profile of {m}",
            found.len()
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn int(v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }

    #[test]
    fn matches_formulas() {
        for n in 1..=4 {
            let alg = LinearA::new(n).unwrap();
            for m in alg.intervals() {
                assert_eq!(tau_oracle(&alg, m).unwrap(), alg.tau(m), "{m}");
                for x in alg.intervals() {
                    assert_eq!(hom_dim_oracle(&alg, m, x), alg.hom(m, x), "{m} {x}");
                    let ext = ext_dim_oracle(&alg, m, x);
                    assert_eq!(ext > 0, alg.extension(m, x).is_some(), "{m} {x}");
                }
            }
        }
    }

    #[test]
    fn rank_basics() {
        assert_eq!(rank(vec![vec![int(1), int(2)], vec![int(2), int(4)]]), 1);
        assert_eq!(rank(vec![vec![int(0), int(1)], vec![int(1), int(0)]]), 2);
        assert_eq!(rank(Vec::new()), 0);
    }
}

//! Exact phase-one simplex over arbitrary-precision rationals.
//!
//! Only feasibility is needed: all polytope predicates reduce to "is `q` a
//! convex combination of these points". Bland's rule keeps degenerate
//! pivots from cycling.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

/// Finds `λ ≥ 0` with `A λ = b`, or `None` if infeasible.
///
/// `a` is given row-major with `m` rows of equal length `k`.
pub fn find_nonnegative_solution(a: &[Vec<BigRational>], b: &[BigRational]) -> Option<Vec<BigRational>> {
    let m = a.len();
    assert_eq!(m, b.len(), "row count of A and b differ");
    let k = a.first().map_or(0, Vec::len);
    let width = k + m + 1;
    let rhs = width - 1;

    // rows with b_i < 0 are negated so the artificial basis starts feasible
    let mut tab: Vec<Vec<BigRational>> = Vec::with_capacity(m + 1);
    for (i, (row, bi)) in a.iter().zip(b).enumerate() {
        assert_eq!(row.len(), k, "ragged constraint matrix");
        let flip = bi.is_negative();
        let mut t = vec![BigRational::zero(); width];
        for (j, v) in row.iter().enumerate() {
            t[j] = if flip { -v.clone() } else { v.clone() };
        }
        t[k + i] = BigRational::from_integer(BigInt::from(1));
        t[rhs] = if flip { -bi.clone() } else { bi.clone() };
        tab.push(t);
    }
    // objective: minimise the sum of artificials, written in reduced form
    let mut obj = vec![BigRational::zero(); width];
    for row in &tab {
        for j in 0..k {
            obj[j] -= &row[j];
        }
        obj[rhs] -= &row[rhs];
    }
    tab.push(obj);
    let mut basis: Vec<usize> = (k..k + m).collect();

    loop {
        let Some(enter) = (0..k + m).find(|&j| tab[m][j].is_negative()) else {
            break;
        };
        let mut leave: Option<usize> = None;
        let mut best: Option<BigRational> = None;
        for i in 0..m {
            if tab[i][enter].is_positive() {
                let ratio = &tab[i][rhs] / &tab[i][enter];
                let better = match &best {
                    None => true,
                    Some(r) => ratio < *r || (ratio == *r && basis[i] < basis[leave.unwrap()]),
                };
                if better {
                    best = Some(ratio);
                    leave = Some(i);
                }
            }
        }
        // the phase-one objective is bounded below by zero
        let leave = leave.expect("phase-one objective is bounded");
        pivot(&mut tab, leave, enter);
        basis[leave] = enter;
    }

    if !tab[m][rhs].is_zero() {
        return None;
    }
    let mut sol = vec![BigRational::zero(); k];
    for (i, &var) in basis.iter().enumerate() {
        if var < k {
            sol[var] = tab[i][rhs].clone();
        }
    }
    Some(sol)
}

fn pivot(tab: &mut [Vec<BigRational>], r: usize, c: usize) {
    let p = tab[r][c].clone();
    for v in tab[r].iter_mut() {
        *v /= &p;
    }
    let pivot_row = tab[r].clone();
    for (i, row) in tab.iter_mut().enumerate() {
        if i == r || row[c].is_zero() {
            continue;
        }
        let f = row[c].clone();
        for (v, pv) in row.iter_mut().zip(&pivot_row) {
            if !pv.is_zero() {
                *v -= &f * pv;
            }
        }
    }
}

/// Whether `q` lies in the convex hull of `points`.
pub fn in_convex_hull(points: &[Vec<BigRational>], q: &[BigRational]) -> bool {
    if points.is_empty() {
        return false;
    }
    let n = q.len();
    let one = BigRational::from_integer(BigInt::from(1));
    let mut a: Vec<Vec<BigRational>> = (0..n)
        .map(|d| points.iter().map(|p| p[d].clone()).collect())
        .collect();
    a.push(vec![one.clone(); points.len()]);
    let mut b: Vec<BigRational> = q.to_vec();
    b.push(one);
    find_nonnegative_solution(&a, &b).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }

    fn pts(p: &[&[i64]]) -> Vec<Vec<BigRational>> {
        p.iter().map(|v| v.iter().map(|&x| r(x)).collect()).collect()
    }

    #[test]
    fn midpoint_and_outside() {
        let seg = pts(&[&[0, 0], &[2, 0]]);
        assert!(in_convex_hull(&seg, &[r(1), r(0)]));
        assert!(!in_convex_hull(&seg, &[r(3), r(0)]));
        assert!(!in_convex_hull(&seg, &[r(1), r(1)]));
        let tri = pts(&[&[0, 0], &[1, 0], &[1, 1]]);
        assert!(!in_convex_hull(&tri, &[r(0), r(1)]));
        assert!(in_convex_hull(&tri, &[BigRational::new(1.into(), 2.into()), BigRational::new(1.into(), 3.into())]));
    }

    #[test]
    fn solution_satisfies_constraints() {
        let a = vec![vec![r(1), r(2), r(-1)], vec![r(0), r(1), r(1)]];
        let b = vec![r(3), r(-1)];
        // λ3 ≥ 0 forces λ2 + λ3 = -1 impossible
        assert!(find_nonnegative_solution(&a, &b).is_none());
        let b = vec![r(3), r(2)];
        let sol = find_nonnegative_solution(&a, &b).unwrap();
        for (row, bi) in a.iter().zip(&b) {
            let lhs: BigRational = row.iter().zip(&sol).map(|(x, y)| x * y).sum();
            assert_eq!(&lhs, bi);
        }
        assert!(sol.iter().all(|v| !v.is_negative()));
    }

    #[test]
    fn degenerate_square_vertices() {
        // many repeated / collinear points; Bland's rule must terminate
        let sq = pts(&[&[0, 0], &[0, 0], &[1, 0], &[2, 0], &[0, 2], &[2, 2], &[1, 1], &[2, 1]]);
        assert!(in_convex_hull(&sq, &[r(2), r(2)]));
        assert!(!in_convex_hull(&sq, &[r(3), r(2)]));
    }
}

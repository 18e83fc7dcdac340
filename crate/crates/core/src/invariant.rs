//! Tropical F-invariants, compatibility and dominant sets.

use std::collections::BTreeSet;

use crate::error::{check_rank, Error, Result};
use crate::pattern::{data_at, ClusterMonomial, ClusterVariableId, ExchangeGraph, Seed};
use crate::polyring::YPolynomial;
use crate::polytope::tropical_eval;

/// `D g` for a diagonal `D`.
pub fn scale(d: &[i64], g: &[i64]) -> Vec<i64> {
    d.iter().zip(g).map(|(a, b)| a * b).collect()
}

/// `F[D g]`.
pub fn tropical_pairing(f: &YPolynomial, d: &[i64], g: &[i64]) -> Result<i64> {
    check_rank(f.rank(), g.len())?;
    tropical_eval(f, &scale(d, g))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FInvariantReport {
    pub value: i64,
    /// `F_u^t[D g_v^t]`
    pub left_part: i64,
    /// `F_v^t[D g_u^t]`
    pub right_part: i64,
    /// Vertex `t` the parts were computed at.
    pub vertex: Vec<usize>,
    pub d: Vec<i64>,
    /// Every vertex at which the value was recomputed.
    pub checked_vertices: Vec<Vec<usize>>,
}

/// `F_u^t[D g_v^t]` at the vertex of `at`.
pub fn partial_f_invariant(u: &ClusterMonomial, v: &ClusterMonomial, at: &Seed, max_terms: usize) -> Result<i64> {
    check_rank(u.rank(), v.rank())?;
    let (_, fu) = data_at(u, at, max_terms)?;
    let (gv, _) = data_at(v, at, max_terms)?;
    tropical_pairing(&fu, at.symmetrizer(), &gv)
}

/// Both partial invariants at one vertex.
pub fn f_invariant_at(u: &ClusterMonomial, v: &ClusterMonomial, at: &Seed, max_terms: usize) -> Result<FInvariantReport> {
    check_rank(u.rank(), v.rank())?;
    let (gu, fu) = data_at(u, at, max_terms)?;
    let (gv, fv) = data_at(v, at, max_terms)?;
    let d = at.symmetrizer();
    let left_part = tropical_pairing(&fu, d, &gv)?;
    let right_part = tropical_pairing(&fv, d, &gu)?;
    Ok(FInvariantReport {
        value: left_part + right_part,
        left_part,
        right_part,
        vertex: at.path().to_vec(),
        d: d.to_vec(),
        checked_vertices: vec![at.path().to_vec()],
    })
}

/// F-invariant at the rooted vertex, cross-checked at the given vertices.
pub fn f_invariant_checked(
    u: &ClusterMonomial,
    v: &ClusterMonomial,
    vertices: &[Vec<usize>],
    max_terms: usize,
) -> Result<FInvariantReport> {
    let root = Seed::initial(&u.b0);
    let mut report = f_invariant_at(u, v, &root, max_terms)?;
    for path in vertices {
        if path.is_empty() {
            continue;
        }
        let at = Seed::from_path(&u.b0, path, max_terms)?;
        let other = f_invariant_at(u, v, &at, max_terms)?;
        if other.value != report.value {
            return Err(Error::Consistency(format!(
                "F-invariant {} at the root but {} at vertex {path:?}",
                report.value, other.value
            )));
        }
        report.checked_vertices.push(path.clone());
    }
    Ok(report)
}

/// `(u||v)_F`, recomputed at the vertices of `u`, `v` and a neighbour of
/// the root so that at least two distinct vertices are always compared.
pub fn f_invariant(u: &ClusterMonomial, v: &ClusterMonomial, max_terms: usize) -> Result<FInvariantReport> {
    check_rank(u.rank(), v.rank())?;
    let mut vertices: Vec<Vec<usize>> = Vec::new();
    for p in [u.path.clone(), v.path.clone(), vec![0]] {
        if !p.is_empty() && !vertices.contains(&p) {
            vertices.push(p);
        }
    }
    f_invariant_checked(u, v, &vertices, max_terms)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Compatibility {
    pub compatible: bool,
    pub value: i64,
    /// A seed of the graph whose cluster contains `supp(u) ∪ supp(v)`.
    pub witness: Option<usize>,
}

/// Decides compatibility by the F-invariant and locates a common cluster.
pub fn is_compatible(u: &ClusterMonomial, v: &ClusterMonomial, graph: &ExchangeGraph) -> Result<Compatibility> {
    let value = f_invariant(u, v, graph.limits().max_terms)?.value;
    let mut support = u.support();
    support.extend(v.support());
    let witness = graph.seeds_containing(&support).first().copied();
    if graph.is_finite() {
        match (value == 0, witness.is_some()) {
            (true, false) => {
                return Err(Error::Consistency(
                    "F-invariant vanishes but no common cluster exists".into(),
                ))
            }
            (false, true) => {
                return Err(Error::Consistency(
                    "common cluster exists but the F-invariant is positive".into(),
                ))
            }
            _ => {}
        }
    }
    Ok(Compatibility {
        compatible: value == 0,
        value,
        witness,
    })
}

/// `dom(u) = { z : F_z[D g_u] = 0 }` over all cluster variables.
pub fn dominant_set(u: &ClusterMonomial, graph: &ExchangeGraph) -> Result<BTreeSet<ClusterVariableId>> {
    graph.require_finite()?;
    let d = graph.symmetrizer();
    let mut out = BTreeSet::new();
    for z in graph.variables() {
        if tropical_pairing(&z.f, d, &u.g)? == 0 {
            out.insert(z);
        }
    }
    Ok(out)
}

/// Dominant set of the full multiplicity-free monomial of a seed.
pub fn dominant_set_of_seed(s: &Seed, graph: &ExchangeGraph) -> Result<BTreeSet<ClusterVariableId>> {
    dominant_set(&s.full_monomial(), graph)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exmatrix::catalog;
    use crate::pattern::{explore, Limits};
    use crate::polyring::DEFAULT_MAX_TERMS;

    // A2: x3 = mu_1, x4 = mu_2 mu_1, x5 = mu_1 mu_2 mu_1 at position 0
    fn a2_vars() -> (ClusterMonomial, ClusterMonomial, ClusterMonomial) {
        let s0 = Seed::initial(&catalog::a2());
        let s1 = s0.mutate(0).unwrap();
        let s2 = s1.mutate(1).unwrap();
        let s3 = s2.mutate(0).unwrap();
        (
            s1.monomial(&[1, 0]).unwrap(),
            s2.monomial(&[0, 1]).unwrap(),
            s3.monomial(&[1, 0]).unwrap(),
        )
    }

    #[test]
    fn worked_example_values() {
        let (x3, x4, x5) = a2_vars();
        assert_eq!(x5.g, vec![0, -1]);
        let root = Seed::initial(&catalog::a2());
        assert_eq!(partial_f_invariant(&x3, &x4, &root, DEFAULT_MAX_TERMS).unwrap(), 0);
        assert_eq!(partial_f_invariant(&x5, &x3, &root, DEFAULT_MAX_TERMS).unwrap(), 1);
        let r34 = f_invariant(&x3, &x4, DEFAULT_MAX_TERMS).unwrap();
        assert_eq!(r34.value, 0);
        let r35 = f_invariant(&x3, &x5, DEFAULT_MAX_TERMS).unwrap();
        assert_eq!((r35.value, r35.left_part, r35.right_part), (1, 0, 1));
        assert!(r35.checked_vertices.len() >= 3);
        for u in [&x3, &x4, &x5] {
            assert_eq!(f_invariant(u, u, DEFAULT_MAX_TERMS).unwrap().value, 0);
            assert_eq!(partial_f_invariant(u, u, &root, DEFAULT_MAX_TERMS).unwrap(), 0);
        }
    }

    #[test]
    fn compatibility_witness() {
        let g = explore(&catalog::a2(), Limits::default()).unwrap();
        let (x3, x4, x5) = a2_vars();
        let c = is_compatible(&x3, &x4, &g).unwrap();
        assert!(c.compatible);
        let w = g.seed(c.witness.unwrap()).cluster();
        assert_eq!(w, x3.support().union(&x4.support()).cloned().collect());
        assert!(!is_compatible(&x3, &x5, &g).unwrap().compatible);
    }

    #[test]
    fn dominant_sets() {
        let g = explore(&catalog::a2(), Limits::default()).unwrap();
        let (x3, x4, x5) = a2_vars();
        let empty = g.initial_seed().monomial(&[0, 0]).unwrap();
        assert_eq!(dominant_set(&empty, &g).unwrap().len(), 5);
        let s = g.lookup(&Seed::initial(&catalog::a2()).mutate(0).unwrap().mutate(1).unwrap().key()).unwrap();
        let dom = dominant_set_of_seed(g.seed(s), &g).unwrap();
        assert_eq!(dom.len(), 4);
        assert!(!dom.contains(&x5.factors[0].0));
        assert!(dom.contains(&x3.factors[0].0) && dom.contains(&x4.factors[0].0));
        let dom0 = dominant_set_of_seed(g.initial_seed(), &g).unwrap();
        assert_eq!(dom0, g.initial_seed().cluster());
    }
}

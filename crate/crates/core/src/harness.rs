//! Batch verification: Newton-polytope injectivity on cluster monomials,
//! the cancellation procedure that proves it, and identity sweeps.

use std::collections::{BTreeMap, HashMap};
use std::time::{Duration, Instant};

use crate::bongartz::{left_bongartz_completion, PartialCluster};
use crate::error::{Error, Result};
use crate::invariant::{f_invariant, tropical_pairing};
use crate::pattern::{ClusterMonomial, ClusterVariableId, ExchangeGraph};
use crate::polytope::{newton_polytope, tropical_eval, LatticePolytope};

/// Cluster monomials of degree `1..=max_degree` in non-initial variables,
/// deduplicated by their factor multiset.
pub fn non_initial_monomials(graph: &ExchangeGraph, max_degree: u32) -> Result<Vec<ClusterMonomial>> {
    graph.require_finite()?;
    let mut out: BTreeMap<Vec<(ClusterVariableId, u32)>, ClusterMonomial> = BTreeMap::new();
    for seed in graph.seeds() {
        let free: Vec<usize> = (0..seed.rank()).filter(|&i| !seed.ids()[i].is_initial()).collect();
        let mut h = vec![0i64; seed.rank()];
        enumerate_exponents(&free, 0, max_degree, &mut h, &mut |h| {
            if h.iter().any(|&e| e > 0) {
                let m = seed.monomial(h)?;
                out.entry(m.factors.clone()).or_insert(m);
            }
            Ok(())
        })?;
    }
    Ok(out.into_values().collect())
}

fn enumerate_exponents(
    free: &[usize],
    at: usize,
    budget: u32,
    h: &mut Vec<i64>,
    visit: &mut dyn FnMut(&[i64]) -> Result<()>,
) -> Result<()> {
    if at == free.len() {
        return visit(h);
    }
    for e in 0..=budget {
        h[free[at]] = i64::from(e);
        enumerate_exponents(free, at + 1, budget - e, h, visit)?;
    }
    h[free[at]] = 0;
    Ok(())
}

/// Groups items with equal polytopes. Buckets by support signature first,
/// then splits buckets by exact hull equality.
pub fn group_by_polytope(polys: &[LatticePolytope]) -> Result<Vec<Vec<usize>>> {
    let mut buckets: HashMap<Vec<i64>, Vec<usize>> = HashMap::new();
    for (i, p) in polys.iter().enumerate() {
        buckets.entry(p.support_signature()).or_default().push(i);
    }
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for bucket in buckets.into_values() {
        let mut local: Vec<Vec<usize>> = Vec::new();
        for i in bucket {
            let mut placed = false;
            for g in local.iter_mut() {
                if polys[g[0]].equals(&polys[i])? {
                    g.push(i);
                    placed = true;
                    break;
                }
            }
            if !placed {
                local.push(vec![i]);
            }
        }
        groups.extend(local);
    }
    for g in groups.iter_mut() {
        g.sort_unstable();
    }
    groups.sort();
    Ok(groups)
}

#[derive(Clone, Debug)]
pub struct TheoremAReport {
    pub degree_cap: u32,
    pub monomials: usize,
    pub classes: usize,
    /// Groups of distinct monomials with equal Newton polytopes, confirmed
    /// by an independent support-function comparison.
    pub collisions: Vec<Vec<ClusterMonomial>>,
    /// Groups the LP placed together but support sampling separated.
    pub unconfirmed: usize,
    pub self_reductions: usize,
    pub self_reduction_failures: Vec<String>,
    pub elapsed: Duration,
}

impl TheoremAReport {
    pub fn injective(&self) -> bool {
        self.collisions.is_empty() && self.unconfirmed == 0
    }

    pub fn passed(&self) -> bool {
        self.injective() && self.self_reduction_failures.is_empty()
    }
}

/// Checks that `u -> P(F_u)` is injective on non-initial cluster monomials
/// of degree at most `degree_cap`, and runs the reduction on each `(u, u)`.
pub fn verify_theorem_a(graph: &ExchangeGraph, degree_cap: u32) -> Result<TheoremAReport> {
    let start = Instant::now();
    let monos = non_initial_monomials(graph, degree_cap)?;
    let polys: Vec<LatticePolytope> = monos.iter().map(|m| newton_polytope(&m.f)).collect::<Result<_>>()?;
    let groups = group_by_polytope(&polys)?;
    let mut collisions = Vec::new();
    let mut unconfirmed = 0;
    for g in groups.iter().filter(|g| g.len() > 1) {
        let confirmed = g[1..]
            .iter()
            .all(|&j| polys[g[0]].equal_by_support_sampling(&polys[j]).unwrap_or(false));
        if confirmed {
            collisions.push(g.iter().map(|&i| monos[i].clone()).collect());
        } else {
            unconfirmed += 1;
        }
    }
    let mut failures = Vec::new();
    for m in &monos {
        let trace = reduce_pair(m, m, graph)?;
        if trace.verdict != ReductionVerdict::Equal || !trace.support_strictly_decreases() {
            failures.push(format!("{m}: {}", trace.failure.unwrap_or_default()));
        }
    }
    Ok(TheoremAReport {
        degree_cap,
        monomials: monos.len(),
        classes: groups.len(),
        collisions,
        unconfirmed,
        self_reductions: monos.len(),
        self_reduction_failures: failures,
        elapsed: start.elapsed(),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReductionVerdict {
    Equal,
    CounterexampleSuspect,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionStep {
    /// Path of the left Bongartz completion of `supp(uv)`.
    pub completion_path: Vec<usize>,
    pub k: usize,
    pub exponent: u32,
    pub support_before: usize,
    pub support_after: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionTrace {
    pub steps: Vec<ReductionStep>,
    pub verdict: ReductionVerdict,
    /// Which hypothesis failed, for a suspect verdict.
    pub failure: Option<String>,
}

impl ReductionTrace {
    pub fn support_strictly_decreases(&self) -> bool {
        self.steps.iter().all(|s| s.support_after < s.support_before)
            && self.steps.windows(2).all(|w| w[1].support_before == w[0].support_after)
    }

    fn suspect(steps: Vec<ReductionStep>, why: String) -> Self {
        ReductionTrace {
            steps,
            verdict: ReductionVerdict::CounterexampleSuspect,
            failure: Some(why),
        }
    }
}

fn cancel(m: &ClusterMonomial, id: &ClusterVariableId, e: u32, graph: &ExchangeGraph) -> Result<ClusterMonomial> {
    let factors: Vec<(ClusterVariableId, u32)> = m
        .factors
        .iter()
        .map(|(x, k)| (x.clone(), if x == id { k - e } else { *k }))
        .filter(|(_, k)| *k > 0)
        .collect();
    graph
        .monomial_of(&factors)?
        .ok_or_else(|| Error::Consistency("sub-monomial left its cluster".into()))
}

/// Runs the cancellation procedure on two monomials with equal Newton
/// polytopes, peeling off one common variable per step.
pub fn reduce_pair(u: &ClusterMonomial, v: &ClusterMonomial, graph: &ExchangeGraph) -> Result<ReductionTrace> {
    graph.require_finite()?;
    if u.support().iter().chain(v.support().iter()).any(|id| id.is_initial()) {
        return Err(Error::Precondition("monomials must avoid initial variables".into()));
    }
    if !newton_polytope(&u.f)?.equals(&newton_polytope(&v.f)?)? {
        return Err(Error::Precondition("Newton polytopes differ".into()));
    }
    let d = graph.symmetrizer();
    let max_terms = graph.limits().max_terms;
    let mut u = u.clone();
    let mut v = v.clone();
    let mut steps = Vec::new();
    loop {
        let mut supp = u.support();
        supp.extend(v.support());
        if supp.is_empty() {
            break;
        }
        if u.is_empty() != v.is_empty() {
            return Ok(ReductionTrace::suspect(steps, "one side became empty before the other".into()));
        }
        let fi = f_invariant(&u, &v, max_terms)?;
        if fi.value != 0 {
            return Ok(ReductionTrace::suspect(
                steps,
                format!("product is not a cluster monomial: (u||v)_F = {}", fi.value),
            ));
        }
        if graph.seeds_containing(&supp).is_empty() {
            return Ok(ReductionTrace::suspect(steps, "no cluster contains supp(uv)".into()));
        }
        let s = left_bongartz_completion(&PartialCluster::new(supp.iter().cloned(), graph)?, graph)?.seed;
        let seed = graph.seed(s);
        let Some(k) = (0..seed.rank()).find(|&i| {
            supp.contains(&seed.ids()[i]) && seed.c_matrix().column_sign(i).is_nonpositive()
        }) else {
            return Ok(ReductionTrace::suspect(
                steps,
                "no red direction inside supp(uv) at the completion".into(),
            ));
        };
        let x = seed.ids()[k].clone();
        let z = seed.mutate_capped(k, max_terms)?.ids()[k].clone();
        let fu = tropical_pairing(&u.f, d, &z.g)?;
        let fv = tropical_pairing(&v.f, d, &z.g)?;
        let dk = d[k];
        let (a, b) = (u.multiplicity(&x), v.multiplicity(&x));
        if fu != i64::from(a) * dk || fv != i64::from(b) * dk {
            return Ok(ReductionTrace::suspect(
                steps,
                format!("tropical exponents {fu}/{dk}, {fv}/{dk} disagree with multiplicities {a}, {b}"),
            ));
        }
        if a != b {
            return Ok(ReductionTrace::suspect(steps, format!("a_k = {a} but b_k = {b}")));
        }
        let u2 = cancel(&u, &x, a, graph)?;
        let v2 = cancel(&v, &x, b, graph)?;
        if !newton_polytope(&u2.f)?.equals(&newton_polytope(&v2.f)?)? {
            return Ok(ReductionTrace::suspect(steps, "polytopes differ after cancellation".into()));
        }
        let mut after = u2.support();
        after.extend(v2.support());
        steps.push(ReductionStep {
            completion_path: seed.path().to_vec(),
            k,
            exponent: a,
            support_before: supp.len(),
            support_after: after.len(),
        });
        u = u2;
        v = v2;
    }
    Ok(ReductionTrace {
        steps,
        verdict: ReductionVerdict::Equal,
        failure: None,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityCount {
    pub name: String,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Clone, Debug)]
pub struct IdentitiesReport {
    pub seeds: usize,
    pub edges: usize,
    pub entries: Vec<IdentityCount>,
    pub elapsed: Duration,
}

impl IdentitiesReport {
    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| e.failed == 0)
    }

    pub fn get(&self, name: &str) -> Option<&IdentityCount> {
        self.entries.iter().find(|e| e.name == name)
    }
}

#[derive(Default)]
struct Tally(BTreeMap<&'static str, (usize, usize)>);

impl Tally {
    fn record(&mut self, name: &'static str, ok: bool) {
        let e = self.0.entry(name).or_default();
        if ok {
            e.0 += 1;
        } else {
            e.1 += 1;
        }
    }
}

/// Integer vectors in `[-2, 2]^n`.
fn small_directions(n: usize) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v: Vec<i64>| {
                (-2..=2).map(move |s| {
                    let mut w = v.clone();
                    w.push(s);
                    w
                })
            })
            .collect();
    }
    out
}

/// Sweeps every seed and directed edge of a finite graph.
pub fn verify_identities(graph: &ExchangeGraph) -> Result<IdentitiesReport> {
    graph.require_finite()?;
    let start = Instant::now();
    let d = graph.symmetrizer();
    let n = graph.rank();
    let mut t = Tally::default();
    for seed in graph.seeds() {
        let c = seed.c_matrix();
        let g = seed.g_matrix();
        let dm = crate::exmatrix::IntMatrix::diagonal(d);
        t.record("G^T D C = D", g.transpose().mul(&dm)?.mul(c)? == dm);
        t.record("C columns sign-coherent", (0..n).all(|i| c.column_sign(i).is_coherent()));
        t.record("G rows sign-coherent", (0..n).all(|i| g.row_sign(i).is_coherent()));
        t.record(
            "F constant term 1",
            seed.ids().iter().all(|id| id.f.constant_term() == 1.into() && id.f.has_nonnegative_coefficients()),
        );
    }
    let mut edges = 0;
    for (s, seed) in graph.seeds().iter().enumerate() {
        for k in 0..n {
            if graph.neighbor(s, k).is_none() {
                return Err(Error::Consistency("missing edge in finite graph".into()));
            }
            edges += 1;
            let x = &seed.ids()[k];
            let x2 = seed.mutate_capped(k, graph.limits().max_terms)?.ids()[k].clone();
            let left = tropical_pairing(&x.f, d, &x2.g)?;
            let right = tropical_pairing(&x2.f, d, &x.g)?;
            t.record("exchange pair = d_k", left + right == d[k]);
            if seed.c_matrix().column_sign(k).is_nonpositive() {
                t.record("exchange pair parts at red edge", right == 0 && left == d[k]);
            }
        }
    }
    let vars = graph.variables();
    let dirs = small_directions(n);
    for (i, a) in vars.iter().enumerate() {
        for b in &vars[i..] {
            let prod = &a.f * &b.f;
            let pa = newton_polytope(&a.f)?;
            let pb = newton_polytope(&b.f)?;
            t.record("P(F1 F2) = P(F1) + P(F2)", newton_polytope(&prod)?.equals(&pa.minkowski_sum(&pb)?)?);
            let mut ok = true;
            for r in &dirs {
                ok &= tropical_eval(&prod, r)? == tropical_eval(&a.f, r)? + tropical_eval(&b.f, r)?;
            }
            t.record("(F1 F2)[r] = F1[r] + F2[r]", ok);
        }
    }
    Ok(IdentitiesReport {
        seeds: graph.len(),
        edges,
        entries: t
            .0
            .into_iter()
            .map(|(name, (passed, failed))| IdentityCount {
                name: name.to_string(),
                passed,
                failed,
            })
            .collect(),
        elapsed: start.elapsed(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exmatrix::catalog;
    use crate::pattern::{explore, Limits, Seed};

    fn graph(name: &str) -> ExchangeGraph {
        explore(&catalog::by_name(name).unwrap(), Limits::default()).unwrap()
    }

    #[test]
    fn a2_theorem_a() {
        let g = graph("A2");
        let r = verify_theorem_a(&g, 2).unwrap();
        // degree 1: 3 variables; degree 2: 3 squares + 2 compatible products
        assert_eq!(r.monomials, 8);
        assert!(r.passed());
        let r0 = verify_theorem_a(&g, 0).unwrap();
        assert_eq!(r0.monomials, 0);
        assert!(r0.injective());
    }

    #[test]
    fn reductions() {
        let g = graph("A2");
        let s = Seed::initial(&catalog::a2()).mutate(0).unwrap().mutate(1).unwrap();
        let x3x4 = s.monomial(&[1, 1]).unwrap();
        let tr = reduce_pair(&x3x4, &x3x4, &g).unwrap();
        assert_eq!(tr.verdict, ReductionVerdict::Equal);
        assert_eq!(tr.steps.len(), 2);
        assert!(tr.support_strictly_decreases());
        let x3 = s.monomial(&[1, 0]).unwrap();
        let tr = reduce_pair(&x3, &x3, &g).unwrap();
        assert_eq!(tr.steps.len(), 1);
        let x5 = s.mutate(0).unwrap().monomial(&[1, 0]).unwrap();
        assert!(matches!(reduce_pair(&x3, &x5, &g), Err(Error::Precondition(_))));
        let x1 = g.initial_seed().monomial(&[1, 0]).unwrap();
        assert!(matches!(reduce_pair(&x1, &x1, &g), Err(Error::Precondition(_))));
    }

    #[test]
    fn identity_sweeps() {
        let r = verify_identities(&graph("A2")).unwrap();
        assert!(r.passed());
        assert_eq!((r.seeds, r.edges), (5, 10));
        assert_eq!(r.get("exchange pair = d_k").unwrap().passed, 10);
        let b2 = verify_identities(&graph("B2")).unwrap();
        assert!(b2.passed());
        let a1 = verify_identities(&graph("A1")).unwrap();
        assert!(a1.passed());
        assert_eq!(a1.seeds, 2);
    }
}

//! Cluster patterns with principal coefficients.
//!
//! A [`Seed`] stores its cluster variables as Laurent polynomials in
//! `x_1..x_n, y_1..y_n`. The g-vector of a variable is the x-exponent of
//! its unique y-free term and the F-polynomial is its specialization at
//! `x = 1`; the C- and G-matrix identities are checked independently.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive};

use crate::error::{check_index, check_rank, Error, Result};
use crate::exmatrix::{mutate_extended, ExchangeMatrix, IntMatrix};
use crate::polyring::{LaurentPoly, Monomial, YPolynomial, DEFAULT_MAX_TERMS};

/// Caps for exploration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub max_seeds: usize,
    pub max_terms: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_seeds: 10_000,
            max_terms: DEFAULT_MAX_TERMS,
        }
    }
}

/// A cluster variable identified by its g-vector and F-polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ClusterVariableId {
    pub g: Vec<i64>,
    pub f: YPolynomial,
}

impl ClusterVariableId {
    pub fn is_initial(&self) -> bool {
        self.f.is_one() && self.g.iter().filter(|&&v| v != 0).count() == 1 && self.g.iter().all(|&v| v >= 0)
    }
}

impl fmt::Display for ClusterVariableId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "g={:?} F={}", self.g, self.f)
    }
}

/// Seed with principal coefficients at the rooted vertex `t0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Seed {
    b0: ExchangeMatrix,
    b: ExchangeMatrix,
    vars: Vec<LaurentPoly>,
    ids: Vec<ClusterVariableId>,
    c: IntMatrix,
    path: Vec<usize>,
}

fn to_i64(v: &BigInt, what: &str) -> Result<i64> {
    v.to_i64()
        .ok_or_else(|| Error::ResourceCap(format!("{what} does not fit in 64 bits")))
}

/// Principal grading: `deg y_j = -(column j of B0)`.
fn y_weights(b0: &ExchangeMatrix) -> Result<Vec<Vec<i64>>> {
    let m = b0.matrix();
    (0..m.cols())
        .map(|j| {
            m.column(j)
                .iter()
                .map(|v| to_i64(v, "exchange matrix entry").map(|x| -x))
                .collect()
        })
        .collect()
}

/// Extracts `(g, F)` from a principal-coefficient cluster variable and
/// checks that it is homogeneous of degree `g`.
pub fn extract_id(var: &LaurentPoly, b0: &ExchangeMatrix) -> Result<ClusterVariableId> {
    let free = var.y_degree_zero_terms();
    let g = match free.as_slice() {
        [(m, c)] if c.is_one() => m.x.clone(),
        _ => {
            return Err(Error::Consistency(format!(
                "cluster variable {var} has no unique y-free term with coefficient 1"
            )))
        }
    };
    let deg = var.homogeneous_degree(&y_weights(b0)?);
    if deg.as_ref() != Some(&g) {
        return Err(Error::Consistency(format!(
            "cluster variable {var} is not homogeneous of degree {g:?}"
        )));
    }
    let f = var.specialize_x_to_one();
    if f.constant_term() != BigInt::one() || !f.has_nonnegative_coefficients() {
        return Err(Error::Consistency(format!(
            "F-polynomial {f} lacks constant term 1 or positivity"
        )));
    }
    Ok(ClusterVariableId { g, f })
}

impl Seed {
    /// The rooted seed: `x_1..x_n`, `C = G = I`.
    pub fn initial(b: &ExchangeMatrix) -> Seed {
        let n = b.rank();
        let vars: Vec<LaurentPoly> = (0..n).map(|i| LaurentPoly::x(n, i)).collect();
        let ids = (0..n)
            .map(|i| {
                let mut g = vec![0; n];
                g[i] = 1;
                ClusterVariableId {
                    g,
                    f: YPolynomial::one(n),
                }
            })
            .collect();
        Seed {
            b0: b.clone(),
            b: b.clone(),
            vars,
            ids,
            c: IntMatrix::identity(n),
            path: Vec::new(),
        }
    }

    /// Seed reached from the rooted seed of `b0` along `path`.
    pub fn from_path(b0: &ExchangeMatrix, path: &[usize], max_terms: usize) -> Result<Seed> {
        path.iter()
            .try_fold(Seed::initial(b0), |s, &k| s.mutate_capped(k, max_terms))
    }

    pub fn rank(&self) -> usize {
        self.b.rank()
    }

    pub fn initial_matrix(&self) -> &ExchangeMatrix {
        &self.b0
    }

    pub fn exchange_matrix(&self) -> &ExchangeMatrix {
        &self.b
    }

    pub fn symmetrizer(&self) -> &[i64] {
        self.b.symmetrizer()
    }

    pub fn vars(&self) -> &[LaurentPoly] {
        &self.vars
    }

    pub fn ids(&self) -> &[ClusterVariableId] {
        &self.ids
    }

    pub fn c_matrix(&self) -> &IntMatrix {
        &self.c
    }

    /// G-matrix; column `i` is the g-vector of `x_{i;t}`.
    pub fn g_matrix(&self) -> IntMatrix {
        let n = self.rank();
        let mut g = IntMatrix::zeros(n, n);
        for (j, id) in self.ids.iter().enumerate() {
            for (i, &v) in id.g.iter().enumerate() {
                g.set(i, j, BigInt::from(v));
            }
        }
        g
    }

    pub fn path(&self) -> &[usize] {
        &self.path
    }

    pub fn variable_id(&self, i: usize) -> Result<&ClusterVariableId> {
        check_index(i, self.rank())?;
        Ok(&self.ids[i])
    }

    /// Unordered cluster.
    pub fn cluster(&self) -> BTreeSet<ClusterVariableId> {
        self.ids.iter().cloned().collect()
    }

    /// Position of a variable in this seed.
    pub fn position(&self, id: &ClusterVariableId) -> Option<usize> {
        self.ids.iter().position(|x| x == id)
    }

    pub fn mutate(&self, k: usize) -> Result<Seed> {
        self.mutate_capped(k, DEFAULT_MAX_TERMS)
    }

    /// Seed mutation with the principal-coefficient exchange relation.
    pub fn mutate_capped(&self, k: usize, max_terms: usize) -> Result<Seed> {
        let n = self.rank();
        check_index(k, n)?;
        let bt = self.b.matrix().stack(&self.c)?;
        let mut plus = LaurentPoly::one(n);
        let mut minus = LaurentPoly::one(n);
        let mut y_plus = Monomial::one(n);
        let mut y_minus = Monomial::one(n);
        for j in 0..n {
            let e = to_i64(bt.get(j, k), "exchange matrix entry")?;
            let target = if e > 0 { &mut plus } else { &mut minus };
            if e != 0 {
                let p = self.vars[j].try_pow(e.unsigned_abs() as u32, max_terms)?;
                *target = target.try_mul(&p, max_terms)?;
            }
            let c = to_i64(bt.get(n + j, k), "C-matrix entry")?;
            let e = u32::try_from(c.unsigned_abs())
                .map_err(|_| Error::ResourceCap("C-matrix entry too large".into()))?;
            if c > 0 {
                y_plus.y[j] = e;
            } else {
                y_minus.y[j] = e;
            }
        }
        let plus = plus.try_mul(&LaurentPoly::term(n, y_plus, BigInt::one()), max_terms)?;
        let minus = minus.try_mul(&LaurentPoly::term(n, y_minus, BigInt::one()), max_terms)?;
        let numerator = plus.try_add(&minus)?;
        let new_var = numerator
            .exact_div(&self.vars[k], max_terms)
            .map_err(|e| match e {
                Error::InexactDivision => Error::Consistency(format!(
                    "exchange relation not divisible at path {:?} direction {k}",
                    self.path
                )),
                other => other,
            })?;
        let id = extract_id(&new_var, &self.b0)?;

        let mutated = mutate_extended(&bt, k)?;
        let (top, c) = mutated.split_rows(n);
        let b = ExchangeMatrix::with_symmetrizer(top, self.b.symmetrizer().to_vec())
            .map_err(|_| Error::Consistency("symmetrizer lost under mutation".into()))?;
        let mut vars = self.vars.clone();
        vars[k] = new_var;
        let mut ids = self.ids.clone();
        ids[k] = id;
        let mut path = self.path.clone();
        path.push(k);
        let seed = Seed {
            b0: self.b0.clone(),
            b,
            vars,
            ids,
            c,
            path,
        };
        seed.check_invariants()?;
        Ok(seed)
    }

    pub fn mutate_along(&self, path: &[usize], max_terms: usize) -> Result<Seed> {
        path.iter()
            .try_fold(self.clone(), |s, &k| s.mutate_capped(k, max_terms))
    }

    /// Sign coherence of C columns and G rows, `det C = ±1` and
    /// `G^T D C = D`.
    pub fn check_invariants(&self) -> Result<()> {
        let n = self.rank();
        let g = self.g_matrix();
        for i in 0..n {
            if !self.c.column_sign(i).is_coherent() {
                return Err(Error::Consistency(format!(
                    "column {i} of C at {:?} is not sign-coherent",
                    self.path
                )));
            }
            if !g.row_sign(i).is_coherent() {
                return Err(Error::Consistency(format!(
                    "row {i} of G at {:?} is not sign-coherent",
                    self.path
                )));
            }
        }
        if self.c.determinant()?.abs() != BigInt::one() {
            return Err(Error::Consistency(format!("C at {:?} is not unimodular", self.path)));
        }
        let d = IntMatrix::diagonal(self.symmetrizer());
        let lhs = g.transpose().mul(&d)?.mul(&self.c)?;
        if lhs != d {
            return Err(Error::Consistency(format!(
                "G^T D C != D at {:?}",
                self.path
            )));
        }
        Ok(())
    }

    /// Canonical key of the unlabeled seed.
    pub fn key(&self) -> SeedKey {
        let mut perm: Vec<usize> = (0..self.rank()).collect();
        perm.sort_by(|&i, &j| self.ids[i].cmp(&self.ids[j]));
        SeedKey {
            ids: perm.iter().map(|&i| self.ids[i].clone()).collect(),
            b: self.b.matrix().permute_square(&perm),
        }
    }

    /// Cluster monomial `x_t^h`.
    pub fn monomial(&self, h: &[i64]) -> Result<ClusterMonomial> {
        check_rank(self.rank(), h.len())?;
        if h.iter().any(|&e| e < 0) {
            return Err(Error::NegativeExponent);
        }
        let h: Vec<u32> = h
            .iter()
            .map(|&e| u32::try_from(e).map_err(|_| Error::ResourceCap("exponent too large".into())))
            .collect::<Result<_>>()?;
        let n = self.rank();
        let mut g = vec![0i64; n];
        let mut f = YPolynomial::one(n);
        let mut factors: BTreeMap<ClusterVariableId, u32> = BTreeMap::new();
        for (i, &e) in h.iter().enumerate() {
            if e == 0 {
                continue;
            }
            let id = &self.ids[i];
            for (acc, v) in g.iter_mut().zip(&id.g) {
                *acc += i64::from(e) * v;
            }
            f = f.try_mul(&id.f.try_pow(e, DEFAULT_MAX_TERMS)?, DEFAULT_MAX_TERMS)?;
            *factors.entry(id.clone()).or_default() += e;
        }
        Ok(ClusterMonomial {
            b0: self.b0.clone(),
            path: self.path.clone(),
            h,
            factors: factors.into_iter().collect(),
            g,
            f,
        })
    }

    /// Multiplicity-free monomial of the whole cluster.
    pub fn full_monomial(&self) -> ClusterMonomial {
        self.monomial(&vec![1; self.rank()]).expect("valid exponents")
    }

    /// This seed as the rooted seed of a new pattern.
    pub fn rerooted(&self) -> Seed {
        Seed::initial(&self.b)
    }
}

/// Key identifying an unlabeled seed: sorted variable ids and the
/// correspondingly permuted exchange matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SeedKey {
    pub ids: Vec<ClusterVariableId>,
    pub b: IntMatrix,
}

/// Monomial `x_t^h` in the variables of one cluster.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClusterMonomial {
    /// Exchange matrix at the rooted vertex.
    pub b0: ExchangeMatrix,
    /// Path of a vertex whose cluster contains the support.
    pub path: Vec<usize>,
    pub h: Vec<u32>,
    /// Variables with positive multiplicity, sorted.
    pub factors: Vec<(ClusterVariableId, u32)>,
    pub g: Vec<i64>,
    pub f: YPolynomial,
}

impl ClusterMonomial {
    pub fn rank(&self) -> usize {
        self.g.len()
    }

    pub fn support(&self) -> BTreeSet<ClusterVariableId> {
        self.factors.iter().map(|(id, _)| id.clone()).collect()
    }

    pub fn degree(&self) -> u32 {
        self.factors.iter().map(|(_, m)| m).sum()
    }

    pub fn multiplicity(&self, id: &ClusterVariableId) -> u32 {
        self.factors
            .iter()
            .find(|(x, _)| x == id)
            .map_or(0, |(_, m)| *m)
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }
}

impl fmt::Display for ClusterMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        for (i, (id, m)) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, " * ")?;
            }
            write!(f, "x[g={:?}]", id.g)?;
            if *m != 1 {
                write!(f, "^{m}")?;
            }
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Finite,
    CapExceeded,
}

/// Exchange graph modulo unlabeled-seed equality.
#[derive(Clone, Debug)]
pub struct ExchangeGraph {
    b0: ExchangeMatrix,
    seeds: Vec<Seed>,
    index: BTreeMap<SeedKey, usize>,
    /// `edges[s][k]` is the seed reached from `s` in direction `k`.
    edges: Vec<Vec<Option<usize>>>,
    verdict: Verdict,
    limits: Limits,
}

/// Breadth-first exploration from the rooted seed.
pub fn explore(b: &ExchangeMatrix, limits: Limits) -> Result<ExchangeGraph> {
    if limits.max_seeds == 0 {
        return Err(Error::InvalidInput("max_seeds must be at least 1".into()));
    }
    let n = b.rank();
    let init = Seed::initial(b);
    let mut g = ExchangeGraph {
        b0: b.clone(),
        index: BTreeMap::from([(init.key(), 0)]),
        seeds: vec![init],
        edges: vec![vec![None; n]],
        verdict: Verdict::Finite,
        limits,
    };
    let mut queue = VecDeque::from([0usize]);
    'bfs: while let Some(s) = queue.pop_front() {
        for k in 0..n {
            if g.edges[s][k].is_some() {
                continue;
            }
            let next = g.seeds[s].mutate_capped(k, limits.max_terms)?;
            let key = next.key();
            let t = match g.index.get(&key) {
                Some(&t) => t,
                None => {
                    if g.seeds.len() >= limits.max_seeds {
                        g.verdict = Verdict::CapExceeded;
                        break 'bfs;
                    }
                    let t = g.seeds.len();
                    g.index.insert(key, t);
                    g.seeds.push(next.clone());
                    g.edges.push(vec![None; n]);
                    queue.push_back(t);
                    t
                }
            };
            g.edges[s][k] = Some(t);
            // mutating the stored seed at the new variable returns to `s`
            let back = g.seeds[t]
                .position(&next.ids[k])
                .ok_or_else(|| Error::Consistency("exchanged variable missing".into()))?;
            match g.edges[t][back] {
                None => g.edges[t][back] = Some(s),
                Some(x) if x == s => {}
                Some(_) => return Err(Error::Consistency("inconsistent reverse edge".into())),
            }
        }
    }
    Ok(g)
}

impl ExchangeGraph {
    pub fn initial_matrix(&self) -> &ExchangeMatrix {
        &self.b0
    }

    pub fn rank(&self) -> usize {
        self.b0.rank()
    }

    pub fn symmetrizer(&self) -> &[i64] {
        self.b0.symmetrizer()
    }

    pub fn verdict(&self) -> Verdict {
        self.verdict
    }

    pub fn limits(&self) -> Limits {
        self.limits
    }

    pub fn is_finite(&self) -> bool {
        self.verdict == Verdict::Finite
    }

    pub(crate) fn require_finite(&self) -> Result<()> {
        if self.is_finite() {
            Ok(())
        } else {
            Err(Error::NotFinite)
        }
    }

    pub fn seeds(&self) -> &[Seed] {
        &self.seeds
    }

    pub fn seed(&self, i: usize) -> &Seed {
        &self.seeds[i]
    }

    pub fn initial_seed(&self) -> &Seed {
        &self.seeds[0]
    }

    pub fn len(&self) -> usize {
        self.seeds.len()
    }

    pub fn is_empty(&self) -> bool {
        self.seeds.is_empty()
    }

    pub fn neighbor(&self, s: usize, k: usize) -> Option<usize> {
        self.edges[s][k]
    }

    pub fn lookup(&self, key: &SeedKey) -> Option<usize> {
        self.index.get(key).copied()
    }

    /// Undirected edges `(s, k, t)` with `s < t` or `s == t`, each once.
    pub fn edge_list(&self) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::new();
        for (s, row) in self.edges.iter().enumerate() {
            for (k, t) in row.iter().enumerate() {
                if let Some(t) = *t {
                    if s <= t {
                        out.push((s, k, t));
                    }
                }
            }
        }
        out
    }

    /// All cluster variables that occur, sorted.
    pub fn variables(&self) -> Vec<ClusterVariableId> {
        let set: BTreeSet<ClusterVariableId> = self.seeds.iter().flat_map(|s| s.ids.iter().cloned()).collect();
        set.into_iter().collect()
    }

    /// Seeds whose cluster contains every id of `u`.
    pub fn seeds_containing(&self, u: &BTreeSet<ClusterVariableId>) -> Vec<usize> {
        (0..self.seeds.len())
            .filter(|&s| u.iter().all(|id| self.seeds[s].position(id).is_some()))
            .collect()
    }

    /// Some seed containing the given variable.
    pub fn locate(&self, id: &ClusterVariableId) -> Option<(usize, usize)> {
        self.seeds
            .iter()
            .enumerate()
            .find_map(|(s, seed)| seed.position(id).map(|i| (s, i)))
    }

    /// Cluster monomial `prod id^m` if all ids lie in a common cluster.
    pub fn monomial_of(&self, factors: &[(ClusterVariableId, u32)]) -> Result<Option<ClusterMonomial>> {
        let support: BTreeSet<ClusterVariableId> =
            factors.iter().filter(|(_, m)| *m > 0).map(|(id, _)| id.clone()).collect();
        let Some(&s) = self.seeds_containing(&support).first() else {
            return Ok(None);
        };
        let seed = &self.seeds[s];
        let mut h = vec![0i64; self.rank()];
        for (id, m) in factors {
            let i = seed.position(id).expect("support checked");
            h[i] += i64::from(*m);
        }
        seed.monomial(&h).map(Some)
    }

    /// All partial clusters (subsets of clusters), deduplicated.
    pub fn partial_clusters(&self) -> Vec<BTreeSet<ClusterVariableId>> {
        let mut out: BTreeSet<BTreeSet<ClusterVariableId>> = BTreeSet::new();
        for seed in &self.seeds {
            let n = seed.rank();
            for mask in 0u32..(1 << n) {
                out.insert(
                    (0..n)
                        .filter(|i| mask >> i & 1 == 1)
                        .map(|i| seed.ids[i].clone())
                        .collect(),
                );
            }
        }
        out.into_iter().collect()
    }
}

/// Path from `t` to `s` in the tree: `rev(path_t) ++ path_s`, with
/// adjacent repeated directions cancelled.
pub fn relative_path(path_t: &[usize], path_s: &[usize]) -> Vec<usize> {
    let mut out: Vec<usize> = Vec::new();
    for &k in path_t.iter().rev().chain(path_s) {
        if out.last() == Some(&k) {
            out.pop();
        } else {
            out.push(k);
        }
    }
    out
}

/// `(g, F)` of a monomial relative to the vertex of `at`: the pattern is
/// re-rooted at `at` and the monomial's vertex reached by the relative path.
pub fn data_at(u: &ClusterMonomial, at: &Seed, max_terms: usize) -> Result<(Vec<i64>, YPolynomial)> {
    check_rank(u.rank(), at.rank())?;
    if u.b0 != at.b0 {
        return Err(Error::Precondition("monomial and vertex belong to different patterns".into()));
    }
    if at.path.is_empty() {
        return Ok((u.g.clone(), u.f.clone()));
    }
    let rel = relative_path(at.path(), &u.path);
    let seed = at.rerooted().mutate_along(&rel, max_terms)?;
    let h: Vec<i64> = u.h.iter().map(|&e| i64::from(e)).collect();
    let m = seed.monomial(&h)?;
    Ok((m.g, m.f))
}

/// Monomial `x_s^h` reached in the pattern rooted at `b0`.
pub fn monomial_from_path(b0: &ExchangeMatrix, path: &[usize], h: &[i64], max_terms: usize) -> Result<ClusterMonomial> {
    Seed::from_path(b0, path, max_terms)?.monomial(h)
}

impl Seed {
    /// Builds a seed from serialized parts, recomputing everything from
    /// `B0 = mu_path^{-1}(B)` and rejecting disagreements.
    pub fn from_parts(
        b: ExchangeMatrix,
        path: Vec<usize>,
        c: Option<IntMatrix>,
        g: Option<IntMatrix>,
        vars: Option<Vec<LaurentPoly>>,
        max_terms: usize,
    ) -> Result<Seed> {
        let n = b.rank();
        for &k in &path {
            check_index(k, n)?;
        }
        let rev: Vec<usize> = path.iter().rev().copied().collect();
        let b0 = b.mutate_along(&rev)?;
        let seed = Seed::from_path(&b0, &path, max_terms)?;
        if seed.b != b {
            return Err(Error::InvalidInput("B does not match its path".into()));
        }
        if c.is_some_and(|c| c != seed.c) {
            return Err(Error::InvalidInput("C does not match the path".into()));
        }
        if g.is_some_and(|g| g != seed.g_matrix()) {
            return Err(Error::InvalidInput("G does not match the path".into()));
        }
        if vars.is_some_and(|v| v != seed.vars) {
            return Err(Error::InvalidInput("vars do not match the path".into()));
        }
        Ok(seed)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exmatrix::catalog;

    fn yp(n: usize, terms: &[&[u32]]) -> YPolynomial {
        YPolynomial::from_i64_terms(n, &terms.iter().map(|e| (*e, 1)).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn initial_seed_data() {
        let s = Seed::initial(&catalog::a2());
        assert_eq!(s.c_matrix(), &IntMatrix::identity(2));
        assert_eq!(s.g_matrix(), IntMatrix::identity(2));
        assert_eq!(s.variable_id(0).unwrap().g, vec![1, 0]);
        assert!(s.variable_id(1).unwrap().f.is_one());
        assert!(s.path().is_empty());
    }

    #[test]
    fn a2_first_mutations() {
        let s1 = Seed::initial(&catalog::a2()).mutate(0).unwrap();
        let x3 = s1.variable_id(0).unwrap();
        assert_eq!(x3.g, vec![-1, 1]);
        assert_eq!(x3.f, yp(2, &[&[0, 0], &[1, 0]]));
        assert_eq!(s1.vars()[0].to_string(), "x1^-1*x2 + x1^-1*y1");
        assert_eq!(s1.c_matrix(), &IntMatrix::from_rows(&[[-1i64, 1], [0, 1]]).unwrap());
        let s2 = s1.mutate(1).unwrap();
        let x4 = s2.variable_id(1).unwrap();
        assert_eq!(x4.g, vec![-1, 0]);
        assert_eq!(x4.f, yp(2, &[&[0, 0], &[1, 0], &[1, 1]]));
    }

    #[test]
    fn involution_on_keys() {
        let s = Seed::initial(&catalog::a3()).mutate(1).unwrap().mutate(0).unwrap();
        for k in 0..3 {
            assert_eq!(s.mutate(k).unwrap().mutate(k).unwrap().key(), s.key());
        }
    }

    #[test]
    fn b2_first_mutation() {
        let s = Seed::initial(&catalog::b2()).mutate(0).unwrap();
        // (y1 + x2^2) / x1
        assert_eq!(s.variable_id(0).unwrap().g, vec![-1, 2]);
        assert_eq!(s.variable_id(0).unwrap().f, yp(2, &[&[0, 0], &[1, 0]]));
        s.check_invariants().unwrap();
    }

    #[test]
    fn monomials() {
        let s = Seed::initial(&catalog::a2()).mutate(0).unwrap().mutate(1).unwrap();
        let m = s.monomial(&[1, 1]).unwrap();
        let expected = &yp(2, &[&[0, 0], &[1, 0]]) * &yp(2, &[&[0, 0], &[1, 0], &[1, 1]]);
        assert_eq!(m.f, expected);
        assert_eq!(m.g, vec![-2, 1]);
        let empty = s.monomial(&[0, 0]).unwrap();
        assert!(empty.f.is_one() && empty.g == vec![0, 0] && empty.is_empty());
        assert_eq!(s.monomial(&[-1, 0]), Err(Error::NegativeExponent));
        let single = s.monomial(&[0, 1]).unwrap();
        assert_eq!(single.factors, vec![(s.variable_id(1).unwrap().clone(), 1)]);
    }

    #[test]
    fn exploration_counts() {
        let cases = [("A2", 5, 5), ("A3", 14, 9), ("B2", 6, 6), ("G2", 8, 8), ("A1", 2, 2)];
        for (name, seeds, vars) in cases {
            let g = explore(&catalog::by_name(name).unwrap(), Limits::default()).unwrap();
            assert_eq!(g.verdict(), Verdict::Finite, "{name}");
            assert_eq!(g.len(), seeds, "{name}");
            assert_eq!(g.variables().len(), vars, "{name}");
            for s in 0..g.len() {
                for k in 0..g.rank() {
                    assert!(g.neighbor(s, k).is_some());
                }
            }
        }
    }

    #[test]
    fn infinite_type_hits_cap() {
        let g = explore(&catalog::kronecker(), Limits { max_seeds: 12, max_terms: 10_000 }).unwrap();
        assert_eq!(g.verdict(), Verdict::CapExceeded);
        assert_eq!(g.len(), 12);
        assert_eq!(g.require_finite(), Err(Error::NotFinite));
    }

    #[test]
    fn relative_paths_cancel() {
        assert_eq!(relative_path(&[0, 1], &[0, 1, 0]), vec![0]);
        assert_eq!(relative_path(&[], &[2, 1]), vec![2, 1]);
        assert_eq!(relative_path(&[1], &[]), vec![1]);
    }

    #[test]
    fn from_parts_round_trip() {
        let s = Seed::initial(&catalog::g2()).mutate_along(&[0, 1, 0], DEFAULT_MAX_TERMS).unwrap();
        let back = Seed::from_parts(
            s.exchange_matrix().clone(),
            s.path().to_vec(),
            Some(s.c_matrix().clone()),
            Some(s.g_matrix()),
            Some(s.vars().to_vec()),
            DEFAULT_MAX_TERMS,
        )
        .unwrap();
        assert_eq!(back.key(), s.key());
        let bad = Seed::from_parts(
            s.exchange_matrix().clone(),
            s.path().to_vec(),
            Some(IntMatrix::identity(2)),
            None,
            None,
            DEFAULT_MAX_TERMS,
        );
        assert!(matches!(bad, Err(Error::InvalidInput(_))));
    }
}

//! Interval modules over the path algebra of `1 -> 2 -> ... -> n`.
//!
//! Vertices are labelled `1..=n`. `M[a,b]` has quotients `M[a,c]` for
//! `a-1 <= c <= b` and submodules `M[c,b]`; `P_i = M[i,n]`.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::polyring::{YPolynomial, DEFAULT_MAX_TERMS};
use crate::polytope::{newton_polytope, tropical_eval, LatticePolytope};

/// The indecomposable `M[a,b]`, `1 <= a <= b <= n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Interval {
    pub a: usize,
    pub b: usize,
}

impl Interval {
    pub const fn new_unchecked(a: usize, b: usize) -> Self {
        Interval { a, b }
    }

    pub fn is_simple(&self) -> bool {
        self.a == self.b
    }

    /// Whether vertex `i` lies in the support.
    pub fn contains(&self, i: usize) -> bool {
        self.a <= i && i <= self.b
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "M[{},{}]", self.a, self.b)
    }
}

/// Path algebra of the linearly oriented quiver with `n` vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LinearA {
    n: usize,
}

impl LinearA {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidInput("rank must be positive".into()));
        }
        Ok(LinearA { n })
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn interval(&self, a: usize, b: usize) -> Result<Interval> {
        if 1 <= a && a <= b && b <= self.n {
            Ok(Interval { a, b })
        } else {
            Err(Error::InvalidInput(format!(
                "M[{a},{b}] is not an interval of 1..{}",
                self.n
            )))
        }
    }

    pub fn simple(&self, i: usize) -> Result<Interval> {
        self.interval(i, i)
    }

    pub fn projective(&self, i: usize) -> Result<Interval> {
        self.interval(i, self.n)
    }

    /// All indecomposables, lexicographic on `(a, b)`.
    pub fn intervals(&self) -> Vec<Interval> {
        (1..=self.n)
            .flat_map(|a| (a..=self.n).map(move |b| Interval { a, b }))
            .collect()
    }

    pub fn is_projective(&self, m: Interval) -> bool {
        m.b == self.n
    }

    pub fn dim_vector(&self, m: Interval) -> Vec<i64> {
        (1..=self.n).map(|i| i64::from(m.contains(i))).collect()
    }

    /// `dim Hom(M[a,b], M[c,d])`: 1 iff `c <= a <= d <= b`.
    pub fn hom(&self, m: Interval, n: Interval) -> u32 {
        u32::from(n.a <= m.a && m.a <= n.b && n.b <= m.b)
    }

    /// `dim Hom(P_i, N) = dim N_i`.
    pub fn hom_from_projective(&self, i: usize, n: Interval) -> u32 {
        u32::from(n.contains(i))
    }

    /// `tau M[a,b] = M[a+1,b+1]`, zero on projectives.
    pub fn tau(&self, m: Interval) -> Option<Interval> {
        (m.b < self.n).then(|| Interval { a: m.a + 1, b: m.b + 1 })
    }

    /// Quotients `M[a,c]`, `a <= c <= b` (the zero quotient omitted).
    pub fn quotients(&self, m: Interval) -> Vec<Interval> {
        (m.a..=m.b).map(|c| Interval { a: m.a, b: c }).collect()
    }

    /// Submodules `M[c,b]`, `a <= c <= b` (zero omitted).
    pub fn submodules(&self, m: Interval) -> Vec<Interval> {
        (m.a..=m.b).map(|c| Interval { a: c, b: m.b }).collect()
    }

    /// δ-vector from the minimal projective presentation.
    pub fn delta(&self, m: Interval) -> Vec<i64> {
        let mut d = vec![0; self.n];
        d[m.a - 1] += 1;
        if m.b < self.n {
            d[m.b] -= 1;
        }
        d
    }

    /// `g_M = -δ_M`.
    pub fn g_vector(&self, m: Interval) -> Vec<i64> {
        self.delta(m).into_iter().map(|x| -x).collect()
    }

    fn y_of(&self, a: usize, c: usize) -> Vec<u32> {
        (1..=self.n).map(|i| u32::from(a <= i && i <= c)).collect()
    }

    /// `F_M = sum over quotients of y^{dim}`.
    pub fn f_polynomial(&self, m: Interval) -> YPolynomial {
        let terms = (m.a - 1..=m.b).map(|c| (self.y_of(m.a, c), 1.into()));
        YPolynomial::from_terms(self.n, terms).expect("consistent rank")
    }

    /// Dual F-polynomial over submodules.
    pub fn dual_f_polynomial(&self, m: Interval) -> YPolynomial {
        let terms = (m.a..=m.b + 1).map(|c| (self.y_of(c, m.b), 1.into()));
        YPolynomial::from_terms(self.n, terms).expect("consistent rank")
    }

    /// Euler form `<u, v> = sum u_i v_i - sum u_i v_{i+1}`.
    pub fn euler_form(&self, u: &[i64], v: &[i64]) -> i64 {
        let diag: i64 = u.iter().zip(v).map(|(x, y)| x * y).sum();
        let arrows: i64 = (0..self.n.saturating_sub(1)).map(|i| u[i] * v[i + 1]).sum();
        diag - arrows
    }

    /// Middle term of the non-split extension `0 -> Y -> E -> X -> 0`, if
    /// `Ext^1(X, Y) != 0`. For intervals this is one-dimensional and
    /// happens iff `a+1 <= c <= b+1 <= d` with `X = M[a,b]`, `Y = M[c,d]`.
    pub fn extension(&self, x: Interval, y: Interval) -> Option<Vec<Interval>> {
        if x.a < y.a && y.a <= x.b + 1 && x.b + 1 <= y.b {
            let mut e = vec![Interval { a: x.a, b: y.b }];
            if y.a <= x.b {
                e.push(Interval { a: y.a, b: x.b });
            }
            Some(e)
        } else {
            None
        }
    }
}

/// Direct sum of intervals with positive multiplicities.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ModuleSum {
    mult: BTreeMap<Interval, u32>,
}

impl ModuleSum {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn single(m: Interval) -> Self {
        Self::from_pairs([(m, 1)])
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (Interval, u32)>) -> Self {
        let mut s = Self::zero();
        for (m, k) in pairs {
            s.add(m, k);
        }
        s
    }

    pub fn add(&mut self, m: Interval, k: u32) {
        if k > 0 {
            *self.mult.entry(m).or_default() += k;
        }
    }

    pub fn direct_sum(&self, other: &ModuleSum) -> ModuleSum {
        let mut s = self.clone();
        for (&m, &k) in &other.mult {
            s.add(m, k);
        }
        s
    }

    pub fn is_zero(&self) -> bool {
        self.mult.is_empty()
    }

    /// `|M|`, the number of distinct indecomposable summands.
    pub fn count(&self) -> usize {
        self.mult.len()
    }

    pub fn is_basic(&self) -> bool {
        self.mult.values().all(|&k| k == 1)
    }

    pub fn summands(&self) -> impl Iterator<Item = (Interval, u32)> + '_ {
        self.mult.iter().map(|(&m, &k)| (m, k))
    }

    pub fn multiplicity(&self, m: Interval) -> u32 {
        self.mult.get(&m).copied().unwrap_or(0)
    }

    /// The basic module with the same summands.
    pub fn basic(&self) -> ModuleSum {
        Self::from_pairs(self.mult.keys().map(|&m| (m, 1)))
    }
}

impl fmt::Display for ModuleSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, k)) in self.summands().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{m}")?;
            if k > 1 {
                write!(f, "^{k}")?;
            }
        }
        Ok(())
    }
}

/// Decorated module `(M, P)` with `P = sum P_i^{m_i}`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DecoratedModule {
    pub plus: ModuleSum,
    /// Vertex `i` of `P_i` to multiplicity.
    pub minus: BTreeMap<usize, u32>,
}

impl DecoratedModule {
    pub fn module(m: ModuleSum) -> Self {
        DecoratedModule {
            plus: m,
            minus: BTreeMap::new(),
        }
    }

    /// `(0, P_i)`.
    pub fn shifted_projective(i: usize) -> Self {
        DecoratedModule {
            plus: ModuleSum::zero(),
            minus: BTreeMap::from([(i, 1)]),
        }
    }

    pub fn direct_sum(&self, other: &DecoratedModule) -> DecoratedModule {
        let mut minus = self.minus.clone();
        for (&i, &k) in &other.minus {
            *minus.entry(i).or_default() += k;
        }
        DecoratedModule {
            plus: self.plus.direct_sum(&other.plus),
            minus,
        }
    }

    pub fn count(&self) -> usize {
        self.plus.count() + self.minus.len()
    }

    pub fn is_basic(&self) -> bool {
        self.plus.is_basic() && self.minus.values().all(|&k| k == 1)
    }
}

impl fmt::Display for DecoratedModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, ", self.plus)?;
        if self.minus.is_empty() {
            write!(f, "0")?;
        }
        for (j, (i, k)) in self.minus.iter().enumerate() {
            if j > 0 {
                write!(f, " + ")?;
            }
            write!(f, "P{i}")?;
            if *k > 1 {
                write!(f, "^{k}")?;
            }
        }
        write!(f, ")")
    }
}

impl LinearA {
    pub fn check_module(&self, m: &ModuleSum) -> Result<()> {
        for (i, _) in m.summands() {
            self.interval(i.a, i.b)?;
        }
        Ok(())
    }

    pub fn check_decorated(&self, m: &DecoratedModule) -> Result<()> {
        self.check_module(&m.plus)?;
        for &i in m.minus.keys() {
            if i == 0 || i > self.n {
                return Err(Error::InvalidInput(format!("no projective P{i} for rank {}", self.n)));
            }
        }
        Ok(())
    }

    pub fn hom_sum(&self, m: &ModuleSum, n: &ModuleSum) -> u32 {
        m.summands()
            .flat_map(|(x, p)| n.summands().map(move |(y, q)| p * q * self.hom(x, y)))
            .sum()
    }

    /// `dim Hom(P, N)` for `P = sum P_i^{m_i}`.
    pub fn hom_projective_sum(&self, p: &BTreeMap<usize, u32>, n: &ModuleSum) -> u32 {
        p.iter()
            .flat_map(|(&i, &a)| n.summands().map(move |(y, b)| a * b * self.hom_from_projective(i, y)))
            .sum()
    }

    pub fn tau_sum(&self, m: &ModuleSum) -> ModuleSum {
        ModuleSum::from_pairs(m.summands().filter_map(|(x, k)| self.tau(x).map(|t| (t, k))))
    }

    pub fn dim_vector_sum(&self, m: &ModuleSum) -> Vec<i64> {
        let mut d = vec![0; self.n];
        for (x, k) in m.summands() {
            for (acc, v) in d.iter_mut().zip(self.dim_vector(x)) {
                *acc += i64::from(k) * v;
            }
        }
        d
    }

    /// `(δ, g)` of a decorated module; `g_(0,P_k) = e_k`.
    pub fn delta_and_g(&self, m: &DecoratedModule) -> (Vec<i64>, Vec<i64>) {
        let mut delta = vec![0i64; self.n];
        for (x, k) in m.plus.summands() {
            for (acc, v) in delta.iter_mut().zip(self.delta(x)) {
                *acc += i64::from(k) * v;
            }
        }
        for (&i, &k) in &m.minus {
            delta[i - 1] -= i64::from(k);
        }
        let g = delta.iter().map(|x| -x).collect();
        (delta, g)
    }

    pub fn g_decorated(&self, m: &DecoratedModule) -> Vec<i64> {
        self.delta_and_g(m).1
    }

    fn product(&self, m: &ModuleSum, single: impl Fn(Interval) -> YPolynomial) -> YPolynomial {
        let mut f = YPolynomial::one(self.n);
        for (x, k) in m.summands() {
            let p = single(x).try_pow(k, DEFAULT_MAX_TERMS).expect("small module");
            f = f.try_mul(&p, usize::MAX).expect("consistent rank");
        }
        f
    }

    /// `F_M` by the product rule.
    pub fn f_polynomial_sum(&self, m: &ModuleSum) -> YPolynomial {
        self.product(m, |x| self.f_polynomial(x))
    }

    pub fn dual_f_polynomial_sum(&self, m: &ModuleSum) -> YPolynomial {
        self.product(m, |x| self.dual_f_polynomial(x))
    }

    /// `P(F_M)`.
    pub fn newton_polytope(&self, m: &ModuleSum) -> LatticePolytope {
        newton_polytope(&self.f_polynomial_sum(m)).expect("constant term 1")
    }

    /// Hull of quotient dimension vectors, built summand by summand.
    pub fn newton_polytope_direct(&self, m: &ModuleSum) -> LatticePolytope {
        let mut p = LatticePolytope::origin(self.n);
        for (x, k) in m.summands() {
            let mut pts = vec![vec![0; self.n]];
            pts.extend(self.quotients(x).into_iter().map(|q| self.dim_vector(q)));
            let q = LatticePolytope::from_points(self.n, pts).expect("non-empty");
            for _ in 0..k {
                p = p.minkowski_sum(&q).expect("same dim").pruned();
            }
        }
        p
    }

    pub fn is_tau_rigid_module(&self, m: &ModuleSum) -> bool {
        self.hom_sum(m, &self.tau_sum(m)) == 0
    }

    /// `Hom(M, tau M) = 0` and `Hom(P, M) = 0`.
    pub fn is_tau_rigid(&self, m: &DecoratedModule) -> bool {
        self.is_tau_rigid_module(&m.plus) && self.hom_projective_sum(&m.minus, &m.plus) == 0
    }

    pub fn is_tau_tilting(&self, m: &DecoratedModule) -> bool {
        self.is_tau_rigid(m) && m.count() == self.n
    }

    /// `E^proj(M, N) = hom(N, tau M) + hom(P, N)`.
    pub fn e_proj(&self, m: &DecoratedModule, n: &DecoratedModule) -> u32 {
        self.hom_sum(&n.plus, &self.tau_sum(&m.plus)) + self.hom_projective_sum(&m.minus, &n.plus)
    }

    pub fn e_sym(&self, m: &DecoratedModule, n: &DecoratedModule) -> u32 {
        self.e_proj(m, n) + self.e_proj(n, m)
    }

    /// `F_N[g_M]`; the module side uses `D = I`.
    pub fn partial_f_invariant(&self, m: &DecoratedModule, n: &DecoratedModule) -> i64 {
        tropical_eval(&self.f_polynomial_sum(&n.plus), &self.g_decorated(m)).expect("non-zero")
    }

    /// `(M||N)_F = F_N[g_M] + F_M[g_N]`.
    pub fn f_invariant(&self, m: &DecoratedModule, n: &DecoratedModule) -> i64 {
        self.partial_f_invariant(m, n) + self.partial_f_invariant(n, m)
    }

    /// Both identities `F_N[g_M] = hom(N, tau M)` and
    /// `F̌_N[-g_M] = hom(M, N)` for τ-rigid `M`.
    pub fn check_f_dual(&self, m: &ModuleSum, n: &ModuleSum) -> Result<(bool, bool)> {
        if !self.is_tau_rigid_module(m) {
            return Err(Error::Precondition(format!("{m} is not τ-rigid")));
        }
        let g = self.g_decorated(&DecoratedModule::module(m.clone()));
        let neg: Vec<i64> = g.iter().map(|x| -x).collect();
        let f = tropical_eval(&self.f_polynomial_sum(n), &g)?;
        let fd = tropical_eval(&self.dual_f_polynomial_sum(n), &neg)?;
        Ok((
            f == i64::from(self.hom_sum(n, &self.tau_sum(m))),
            fd == i64::from(self.hom_sum(m, n)),
        ))
    }
}

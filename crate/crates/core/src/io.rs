//! JSON parsing and canonical serialization.
//!
//! Directions, vertices and variable indices are 1-based in JSON and
//! 0-based in the library. Parse errors carry a field path such as
//! `$.B[1]`.

use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Map, Number, Value};

use crate::error::{Error, Result};
use crate::exmatrix::{ExchangeMatrix, IntMatrix};
use crate::harness::{IdentitiesReport, ReductionTrace, ReductionVerdict, TheoremAReport};
use crate::invariant::FInvariantReport;
use crate::pattern::{ClusterMonomial, ClusterVariableId, ExchangeGraph, Seed, Verdict};
use crate::polyring::{LaurentPoly, Monomial, YPolynomial};
use crate::polytope::LatticePolytope;
use crate::tau::module::{DecoratedModule, Interval, LinearA, ModuleSum};
use crate::tau::pairs::{PairMutation, Summand, TauTiltingPair};
use crate::tau::theorems::{Family, InjectivityReport, TauIdentitiesReport};

/// Parses JSON text, reporting line and column on syntax errors.
pub fn parse_json(text: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(|e| {
        Error::InvalidInput(format!("line {} column {}: {e}", e.line(), e.column()))
    })
}

/// Inline JSON if the argument starts like JSON, otherwise a file path.
pub fn read_input(arg: &str) -> Result<Value> {
    let t = arg.trim_start();
    if t.starts_with('{') || t.starts_with('[') {
        return parse_json(arg);
    }
    let text = std::fs::read_to_string(arg)
        .map_err(|e| Error::InvalidInput(format!("cannot read {arg}: {e}")))?;
    parse_json(&text)
}

/// A JSON value together with its location in the document.
#[derive(Clone, Debug)]
pub struct At<'a> {
    pub value: &'a Value,
    pub path: String,
}

impl<'a> At<'a> {
    pub fn root(value: &'a Value) -> Self {
        At {
            value,
            path: "$".into(),
        }
    }

    fn fail<T>(&self, msg: impl std::fmt::Display) -> Result<T> {
        Err(Error::InvalidInput(format!("{}: {msg}", self.path)))
    }

    pub fn object(&self) -> Result<&'a Map<String, Value>> {
        match self.value.as_object() {
            Some(m) => Ok(m),
            None => self.fail("expected an object"),
        }
    }

    pub fn opt(&self, key: &str) -> Result<Option<At<'a>>> {
        Ok(self.object()?.get(key).filter(|v| !v.is_null()).map(|value| At {
            value,
            path: format!("{}.{key}", self.path),
        }))
    }

    pub fn field(&self, key: &str) -> Result<At<'a>> {
        match self.opt(key)? {
            Some(a) => Ok(a),
            None => self.fail(format!("missing field \"{key}\"")),
        }
    }

    pub fn has(&self, key: &str) -> bool {
        self.opt(key).ok().flatten().is_some()
    }

    pub fn array(&self) -> Result<Vec<At<'a>>> {
        match self.value.as_array() {
            Some(items) => Ok(items
                .iter()
                .enumerate()
                .map(|(i, value)| At {
                    value,
                    path: format!("{}[{i}]", self.path),
                })
                .collect()),
            None => self.fail("expected an array"),
        }
    }

    pub fn int(&self) -> Result<BigInt> {
        match self.value {
            Value::Number(n) => match BigInt::from_str(n.as_str()) {
                Ok(b) => Ok(b),
                Err(_) => self.fail(format!("expected an integer, got {n}")),
            },
            _ => self.fail("expected an integer"),
        }
    }

    pub fn i64(&self) -> Result<i64> {
        match self.int()?.to_i64() {
            Some(v) => Ok(v),
            None => self.fail("integer out of range"),
        }
    }

    pub fn u32(&self) -> Result<u32> {
        match self.int()?.to_u32() {
            Some(v) => Ok(v),
            None => self.fail("expected a non-negative integer"),
        }
    }

    pub fn usize(&self) -> Result<usize> {
        match self.int()?.to_usize() {
            Some(v) => Ok(v),
            None => self.fail("expected a non-negative integer"),
        }
    }

    pub fn str(&self) -> Result<&'a str> {
        match self.value.as_str() {
            Some(s) => Ok(s),
            None => self.fail("expected a string"),
        }
    }

    pub fn i64_vec(&self) -> Result<Vec<i64>> {
        self.array()?.iter().map(At::i64).collect()
    }

    pub fn u32_vec(&self) -> Result<Vec<u32>> {
        self.array()?.iter().map(At::u32).collect()
    }

    /// A vector of exactly `n` integers.
    pub fn i64_vec_of(&self, n: usize) -> Result<Vec<i64>> {
        let v = self.i64_vec()?;
        if v.len() != n {
            return self.fail(format!("expected {n} entries, got {}", v.len()));
        }
        Ok(v)
    }

    /// 1-based index in `1..=n` to 0-based.
    pub fn index(&self, n: usize) -> Result<usize> {
        let i = self.usize()?;
        if i == 0 || i > n {
            return self.fail(format!("index {i} outside 1..={n}"));
        }
        Ok(i - 1)
    }

    /// 1-based direction list to 0-based.
    pub fn path_of(&self, n: usize) -> Result<Vec<usize>> {
        self.array()?.iter().map(|a| a.index(n)).collect()
    }
}

fn big(b: &BigInt) -> Value {
    Value::Number(Number::from_str(&b.to_string()).expect("integer literal"))
}

pub fn parse_matrix(at: &At) -> Result<IntMatrix> {
    let rows = at.array()?;
    let cols = match rows.first() {
        Some(r) => r.array()?.len(),
        None => return at.fail("matrix has no rows"),
    };
    let mut data = Vec::new();
    for r in &rows {
        let entries = r.array()?;
        if entries.len() != cols {
            return r.fail(format!("row has {} entries, expected {cols}", entries.len()));
        }
        for e in entries {
            data.push(e.int()?);
        }
    }
    IntMatrix::new(rows.len(), cols, data).map_err(|e| Error::InvalidInput(format!("{}: {e}", at.path)))
}

pub fn matrix_json(m: &IntMatrix) -> Value {
    Value::Array(
        m.to_rows()
            .iter()
            .map(|r| Value::Array(r.iter().map(big).collect()))
            .collect(),
    )
}

/// `{"B": [[..]], "D": [..]}` with `D` optional.
pub fn parse_exchange_matrix(at: &At) -> Result<ExchangeMatrix> {
    let b_at = at.field("B")?;
    let b = parse_matrix(&b_at)?;
    if b.rows() != b.cols() {
        return b_at.fail(format!("expected a square matrix, got {}x{}", b.rows(), b.cols()));
    }
    let n = b.rows();
    let r = match at.opt("D")? {
        Some(d) => ExchangeMatrix::with_symmetrizer(b, d.i64_vec_of(n)?),
        None => ExchangeMatrix::new(b),
    };
    r.map_err(|e| Error::InvalidInput(format!("{}: {e}", b_at.path)))
}

pub fn exchange_matrix_json(b: &ExchangeMatrix) -> Value {
    json!({ "B": matrix_json(b.matrix()), "D": b.symmetrizer() })
}

pub fn parse_laurent(at: &At, n: usize) -> Result<LaurentPoly> {
    let mut terms = Vec::new();
    for t in at.array()? {
        let x = match t.opt("x")? {
            Some(x) => x.i64_vec_of(n)?,
            None => vec![0; n],
        };
        let y_at = t.field("y")?;
        let y = y_at.u32_vec()?;
        if y.len() != n {
            return y_at.fail(format!("expected {n} entries, got {}", y.len()));
        }
        terms.push((Monomial { y, x }, t.field("c")?.int()?));
    }
    LaurentPoly::from_terms(n, terms).map_err(|e| Error::InvalidInput(format!("{}: {e}", at.path)))
}

pub fn laurent_json(p: &LaurentPoly) -> Value {
    Value::Array(
        p.terms()
            .map(|(m, c)| json!({ "x": m.x, "y": m.y, "c": big(c) }))
            .collect(),
    )
}

/// Y-polynomial; the rank is taken from the first term when `n` is `None`.
pub fn parse_ypoly(at: &At, n: Option<usize>) -> Result<YPolynomial> {
    let items = at.array()?;
    let n = match (n, items.first()) {
        (Some(n), _) => n,
        (None, Some(t)) => t.field("y")?.array()?.len(),
        (None, None) => return at.fail("cannot infer the rank of an empty polynomial"),
    };
    let mut terms = Vec::new();
    for t in items {
        if t.has("x") {
            return t.fail("y-polynomial terms have no \"x\"");
        }
        let y_at = t.field("y")?;
        let y = y_at.u32_vec()?;
        if y.len() != n {
            return y_at.fail(format!("expected {n} entries, got {}", y.len()));
        }
        terms.push((y, t.field("c")?.int()?));
    }
    YPolynomial::from_terms(n, terms).map_err(|e| Error::InvalidInput(format!("{}: {e}", at.path)))
}

pub fn ypoly_json(p: &YPolynomial) -> Value {
    Value::Array(p.terms().map(|(y, c)| json!({ "y": y, "c": big(c) })).collect())
}

fn one_based(path: &[usize]) -> Vec<usize> {
    path.iter().map(|k| k + 1).collect()
}

/// Full seed JSON (with `"vars"`) is validated against its path and `B` is
/// the current matrix. Without `"vars"`, `B` is the initial matrix and the
/// optional `"path"` is applied to it.
pub fn parse_seed(at: &At, max_terms: usize) -> Result<Seed> {
    let b = parse_exchange_matrix(at)?;
    let n = b.rank();
    let path = match at.opt("path")? {
        Some(p) => p.path_of(n)?,
        None => Vec::new(),
    };
    if at.has("vars") {
        let c = at.opt("C")?.map(|c| parse_matrix(&c)).transpose()?;
        let g = at.opt("G")?.map(|g| parse_matrix(&g)).transpose()?;
        let vars_at = at.field("vars")?;
        let vars = vars_at
            .array()?
            .iter()
            .map(|v| parse_laurent(v, n))
            .collect::<Result<Vec<_>>>()?;
        if vars.len() != n {
            return vars_at.fail(format!("expected {n} variables, got {}", vars.len()));
        }
        Seed::from_parts(b, path, c, g, Some(vars), max_terms).map_err(|e| match e {
            Error::InvalidInput(m) => Error::InvalidInput(format!("{}: {m}", at.path)),
            other => other,
        })
    } else {
        Seed::from_path(&b, &path, max_terms)
    }
}

pub fn seed_json(s: &Seed) -> Value {
    json!({
        "B": matrix_json(s.exchange_matrix().matrix()),
        "D": s.symmetrizer(),
        "path": one_based(s.path()),
        "C": matrix_json(s.c_matrix()),
        "G": matrix_json(&s.g_matrix()),
        "vars": s.vars().iter().map(laurent_json).collect::<Vec<_>>(),
    })
}

pub fn variable_json(id: &ClusterVariableId) -> Value {
    json!({ "g": id.g, "F": ypoly_json(&id.f) })
}

pub fn monomial_json(m: &ClusterMonomial) -> Value {
    json!({
        "path": one_based(&m.path),
        "h": m.h,
        "g": m.g,
        "F": ypoly_json(&m.f),
        "factors": m.factors.iter().map(|(id, k)| json!({ "g": id.g, "m": k })).collect::<Vec<_>>(),
    })
}

/// `{"g": [..]}` (optionally with `"F"`) looked up among the variables of
/// a finite graph, or `{"path": [..], "index": i}`.
pub fn parse_variable(at: &At, b0: &ExchangeMatrix, graph: Option<&ExchangeGraph>, max_terms: usize) -> Result<ClusterVariableId> {
    let n = b0.rank();
    if let Some(g_at) = at.opt("g")? {
        let g = g_at.i64_vec_of(n)?;
        let Some(graph) = graph else {
            return at.fail("lookup by g-vector needs a finite exchange graph");
        };
        let found = graph.variables().into_iter().find(|id| id.g == g);
        let Some(id) = found else {
            return g_at.fail(format!("no cluster variable has g-vector {g:?}"));
        };
        if let Some(f_at) = at.opt("F")? {
            if parse_ypoly(&f_at, Some(n))? != id.f {
                return f_at.fail("F does not match the variable with this g-vector");
            }
        }
        return Ok(id);
    }
    let path = at.field("path")?.path_of(n)?;
    let i = at.field("index")?.index(n)?;
    Ok(Seed::from_path(b0, &path, max_terms)?.ids()[i].clone())
}

/// `{"path": [..], "h": [..]}`, or a single variable reference.
pub fn parse_monomial(at: &At, b0: &ExchangeMatrix, graph: Option<&ExchangeGraph>, max_terms: usize) -> Result<ClusterMonomial> {
    let n = b0.rank();
    if at.has("h") {
        let path = match at.opt("path")? {
            Some(p) => p.path_of(n)?,
            None => Vec::new(),
        };
        let h_at = at.field("h")?;
        let h = h_at.i64_vec_of(n)?;
        if h.iter().any(|&e| e < 0) {
            return h_at.fail("exponents must be non-negative");
        }
        return Seed::from_path(b0, &path, max_terms)?.monomial(&h);
    }
    let id = parse_variable(at, b0, graph, max_terms)?;
    if let Some(g) = graph {
        if let Some(m) = g.monomial_of(&[(id.clone(), 1)])? {
            return Ok(m);
        }
    }
    let path = at.field("path")?.path_of(n)?;
    let seed = Seed::from_path(b0, &path, max_terms)?;
    let mut h = vec![0; n];
    h[seed.position(&id).expect("taken from this seed")] = 1;
    seed.monomial(&h)
}

pub fn parse_polytope(at: &At) -> Result<LatticePolytope> {
    let dim = at.field("dim")?.usize()?;
    let pts_at = at.field("points")?;
    let pts = pts_at
        .array()?
        .iter()
        .map(|p| p.i64_vec_of(dim))
        .collect::<Result<Vec<_>>>()?;
    LatticePolytope::from_points(dim, pts).map_err(|e| Error::InvalidInput(format!("{}: {e}", pts_at.path)))
}

pub fn polytope_json(p: &LatticePolytope) -> Value {
    json!({ "dim": p.dim(), "points": p.vertices() })
}

pub fn parse_interval(at: &At, alg: &LinearA) -> Result<Interval> {
    let (a, b) = (at.field("a")?.usize()?, at.field("b")?.usize()?);
    alg.interval(a, b).map_err(|e| Error::InvalidInput(format!("{}: {e}", at.path)))
}

pub fn interval_json(m: Interval) -> Value {
    json!({ "a": m.a, "b": m.b })
}

/// `[{"a", "b", "m"}]` with `"m"` defaulting to 1.
pub fn parse_module_sum(at: &At, alg: &LinearA) -> Result<ModuleSum> {
    let mut s = ModuleSum::zero();
    for item in at.array()? {
        let m = match item.opt("m")? {
            Some(m) => m.u32()?,
            None => 1,
        };
        s.add(parse_interval(&item, alg)?, m);
    }
    Ok(s)
}

pub fn module_json(m: &ModuleSum) -> Value {
    Value::Array(
        m.summands()
            .map(|(x, k)| json!({ "a": x.a, "b": x.b, "m": k }))
            .collect(),
    )
}

/// Decorated module, or a bare interval / module list for the positive part.
pub fn parse_decorated(at: &At, alg: &LinearA) -> Result<DecoratedModule> {
    if at.value.is_array() {
        return Ok(DecoratedModule::module(parse_module_sum(at, alg)?));
    }
    if at.has("a") {
        return Ok(DecoratedModule::module(ModuleSum::single(parse_interval(at, alg)?)));
    }
    let plus = match at.opt("plus")? {
        Some(p) => parse_module_sum(&p, alg)?,
        None => ModuleSum::zero(),
    };
    let mut dec = DecoratedModule::module(plus);
    if let Some(minus) = at.opt("minus")? {
        for item in minus.array()? {
            let i = item.field("i")?.index(alg.rank())? + 1;
            let m = match item.opt("m")? {
                Some(m) => m.u32()?,
                None => 1,
            };
            if m > 0 {
                *dec.minus.entry(i).or_default() += m;
            }
        }
    }
    Ok(dec)
}

pub fn decorated_json(m: &DecoratedModule) -> Value {
    json!({
        "plus": module_json(&m.plus),
        "minus": m.minus.iter().map(|(i, k)| json!({ "i": i, "m": k })).collect::<Vec<_>>(),
    })
}

pub fn summand_json(s: Summand) -> Value {
    match s {
        Summand::Module(m) => interval_json(m),
        Summand::Shifted(i) => json!({ "shifted": i }),
    }
}

pub fn pair_json(p: &TauTiltingPair) -> Value {
    json!({
        "pair": decorated_json(&p.dec),
        "summands": p.summands.iter().map(|&s| summand_json(s)).collect::<Vec<_>>(),
        "fac": p.fac.iter().map(|&m| interval_json(m)).collect::<Vec<_>>(),
    })
}

pub fn pair_mutation_json(m: &PairMutation) -> Value {
    json!({
        "result": pair_json(&m.pair),
        "side": format!("{:?}", m.side),
        "new_summand": summand_json(m.new_summand),
    })
}

pub fn finv_json(r: &FInvariantReport) -> Value {
    json!({
        "value": r.value,
        "left_part": r.left_part,
        "right_part": r.right_part,
        "vertex": one_based(&r.vertex),
        "D": r.d,
        "checked_vertices": r.checked_vertices.iter().map(|p| one_based(p)).collect::<Vec<_>>(),
    })
}

pub fn trace_json(t: &ReductionTrace) -> Value {
    json!({
        "verdict": match t.verdict {
            ReductionVerdict::Equal => "Equal",
            ReductionVerdict::CounterexampleSuspect => "CounterexampleSuspect",
        },
        "steps": t.steps.iter().map(|s| json!({
            "completion_path": one_based(&s.completion_path),
            "k": s.k + 1,
            "exponent": s.exponent,
            "support_before": s.support_before,
            "support_after": s.support_after,
        })).collect::<Vec<_>>(),
        "failure": t.failure,
        "support_strictly_decreases": t.support_strictly_decreases(),
    })
}

pub fn graph_summary_json(g: &ExchangeGraph) -> Value {
    json!({
        "rank": g.rank(),
        "D": g.symmetrizer(),
        "seeds": g.len(),
        "edges": g.edge_list().len(),
        "variables": g.variables().len(),
        "verdict": match g.verdict() {
            Verdict::Finite => "Finite",
            Verdict::CapExceeded => "CapExceeded",
        },
        "max_seeds": g.limits().max_seeds,
    })
}

pub fn theorem_a_json(name: &str, r: &TheoremAReport) -> Value {
    json!({
        "matrix": name,
        "degree_cap": r.degree_cap,
        "monomials": r.monomials,
        "classes": r.classes,
        "collisions": r.collisions.iter()
            .map(|c| c.iter().map(monomial_json).collect::<Vec<_>>())
            .collect::<Vec<_>>(),
        "unconfirmed": r.unconfirmed,
        "self_reductions": r.self_reductions,
        "self_reduction_failures": r.self_reduction_failures,
        "injective": r.injective(),
        "passed": r.passed(),
    })
}

fn entries_json(entries: &[crate::harness::IdentityCount]) -> Value {
    Value::Array(
        entries
            .iter()
            .map(|e| json!({ "name": e.name, "passed": e.passed, "failed": e.failed }))
            .collect(),
    )
}

pub fn identities_json(name: &str, r: &IdentitiesReport) -> Value {
    json!({
        "matrix": name,
        "seeds": r.seeds,
        "edges": r.edges,
        "entries": entries_json(&r.entries),
        "passed": r.passed(),
    })
}

pub fn tau_identities_json(r: &TauIdentitiesReport) -> Value {
    let b = &r.bijection;
    json!({
        "n": r.n,
        "rigid_pairs": r.rigid_pairs,
        "entries": entries_json(&r.entries),
        "bijection": {
            "pairs": b.pairs,
            "torsion_classes": b.torsion_classes,
            "semibricks": b.semibricks,
            "fac_bijective": b.fac_bijective,
            "labels_bijective": b.labels_bijective,
        },
        "passed": r.passed(),
    })
}

pub fn injectivity_json(r: &InjectivityReport) -> Value {
    json!({
        "theorem": match r.family {
            Family::TauRigid => "B",
            Family::MultiSemibrick => "C",
        },
        "n": r.n,
        "mult_cap": r.mult_cap,
        "candidates": r.candidates,
        "classes": r.classes,
        "collisions": r.collisions.iter()
            .map(|c| c.iter().map(module_json).collect::<Vec<_>>())
            .collect::<Vec<_>>(),
        "sum_rigid_checked": r.sum_rigid_checked,
        "sum_rigid_failures": r.sum_rigid_failures,
        "exchange_checked": r.exchange_checked,
        "exchange_failures": r.exchange_failures,
        "assumptions": r.assumptions,
        "injective": r.injective(),
        "passed": r.passed(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exmatrix::catalog;
    use crate::polyring::DEFAULT_MAX_TERMS;

    #[test]
    fn seed_round_trip() {
        let s = Seed::initial(&catalog::b2()).mutate_along(&[0, 1, 0], DEFAULT_MAX_TERMS).unwrap();
        let text = serde_json::to_string(&seed_json(&s)).unwrap();
        let v = parse_json(&text).unwrap();
        let back = parse_seed(&At::root(&v), DEFAULT_MAX_TERMS).unwrap();
        assert_eq!(back, s);
        assert_eq!(serde_json::to_string(&seed_json(&back)).unwrap(), text);
    }

    #[test]
    fn ragged_matrix_has_path() {
        let v = parse_json(r#"{"B": [[0, 1], [-1, 0, 3]]}"#).unwrap();
        let e = parse_exchange_matrix(&At::root(&v)).unwrap_err();
        assert_eq!(e.to_string(), "invalid input: $.B[1]: row has 3 entries, expected 2");
        let bad = parse_json("{\"B\": [[0,1],\n [-1, 0]").unwrap_err();
        assert!(bad.to_string().contains("line 2"));
    }

    #[test]
    fn big_coefficients_survive() {
        let v = parse_json(r#"[{"y": [1], "c": 123456789012345678901234567890}]"#).unwrap();
        let p = parse_ypoly(&At::root(&v), None).unwrap();
        assert_eq!(ypoly_json(&p), v);
    }

    #[test]
    fn decorated_forms() {
        let alg = LinearA::new(2).unwrap();
        let v = parse_json(r#"{"plus": [{"a": 1, "b": 1}], "minus": [{"i": 2, "m": 1}]}"#).unwrap();
        let d = parse_decorated(&At::root(&v), &alg).unwrap();
        assert_eq!(alg.g_decorated(&d), vec![-1, 2]);
        assert_eq!(decorated_json(&d), parse_json(r#"{"plus": [{"a": 1, "b": 1, "m": 1}], "minus": [{"i": 2, "m": 1}]}"#).unwrap());
        let bad = parse_json(r#"{"a": 2, "b": 1}"#).unwrap();
        assert!(parse_decorated(&At::root(&bad), &alg).is_err());
    }
}

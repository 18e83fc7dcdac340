//! τ-rigid and τ-tilting pairs, torsion classes and semibricks.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use super::module::{DecoratedModule, Interval, LinearA, ModuleSum};
use crate::bongartz::Side;
use crate::error::{check_index, Error, Result};
use crate::polytope::tropical_eval;

/// Indecomposable summand of a decorated module.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Summand {
    Module(Interval),
    /// `(0, P_i)`.
    Shifted(usize),
}

impl Summand {
    pub fn decorated(&self) -> DecoratedModule {
        match *self {
            Summand::Module(m) => DecoratedModule::module(ModuleSum::single(m)),
            Summand::Shifted(i) => DecoratedModule::shifted_projective(i),
        }
    }
}

impl fmt::Display for Summand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Summand::Module(m) => write!(f, "{m}"),
            Summand::Shifted(i) => write!(f, "(0,P{i})"),
        }
    }
}

impl LinearA {
    /// All indecomposable summands: intervals first, then shifted projectives.
    pub fn summands(&self) -> Vec<Summand> {
        let mut out: Vec<Summand> = self.intervals().into_iter().map(Summand::Module).collect();
        out.extend((1..=self.rank()).map(Summand::Shifted));
        out
    }

    /// Whether `x ⊕ y` is τ-rigid (for `x == y`: whether `x` is).
    pub fn compatible(&self, x: Summand, y: Summand) -> bool {
        let rigid = |m: Interval, n: Interval| self.tau(n).map_or(0, |t| self.hom(m, t)) == 0;
        match (x, y) {
            (Summand::Module(m), Summand::Module(n)) => rigid(m, n) && rigid(n, m),
            (Summand::Module(m), Summand::Shifted(i)) | (Summand::Shifted(i), Summand::Module(m)) => {
                !m.contains(i)
            }
            (Summand::Shifted(_), Summand::Shifted(_)) => true,
        }
    }

    pub fn decorated_of(&self, summands: &[Summand]) -> DecoratedModule {
        summands
            .iter()
            .fold(DecoratedModule::default(), |acc, s| acc.direct_sum(&s.decorated()))
    }

    /// Basic decorated module to its sorted summand list.
    pub fn summands_of(&self, m: &DecoratedModule) -> Result<Vec<Summand>> {
        self.check_decorated(m)?;
        if !m.is_basic() {
            return Err(Error::InvalidInput(format!("{m} is not basic")));
        }
        let mut out: Vec<Summand> = m.plus.summands().map(|(x, _)| Summand::Module(x)).collect();
        out.extend(m.minus.keys().map(|&i| Summand::Shifted(i)));
        Ok(out)
    }

    /// Every basic τ-rigid pair as a sorted summand list, including the
    /// empty one.
    pub fn tau_rigid_pairs(&self) -> Vec<Vec<Summand>> {
        let all = self.summands();
        let mut out = Vec::new();
        let mut cur = Vec::new();
        self.extend_rigid(&all, 0, &mut cur, &mut out, None);
        out
    }

    fn extend_rigid(
        &self,
        all: &[Summand],
        from: usize,
        cur: &mut Vec<Summand>,
        out: &mut Vec<Vec<Summand>>,
        size: Option<usize>,
    ) {
        if size.is_none_or(|s| s == cur.len()) {
            out.push(cur.clone());
        }
        if size.is_some_and(|s| cur.len() >= s) {
            return;
        }
        for i in from..all.len() {
            let s = all[i];
            if cur.iter().all(|&c| self.compatible(c, s)) {
                cur.push(s);
                self.extend_rigid(all, i + 1, cur, out, size);
                cur.pop();
            }
        }
    }

    /// Indecomposables `X` with a surjection from a summand of `M`.
    pub fn fac(&self, m: &ModuleSum) -> BTreeSet<Interval> {
        m.summands().flat_map(|(x, _)| self.quotients(x)).collect()
    }

    /// `⊥(τU) ∩ Q^⊥` as a set of indecomposables.
    pub fn perp_tau(&self, u: &DecoratedModule) -> BTreeSet<Interval> {
        let tu = self.tau_sum(&u.plus);
        self.intervals()
            .into_iter()
            .filter(|&x| {
                let xs = ModuleSum::single(x);
                self.hom_sum(&xs, &tu) == 0 && self.hom_projective_sum(&u.minus, &xs) == 0
            })
            .collect()
    }

    /// Closed under quotients and extensions between indecomposables.
    pub fn is_torsion_class(&self, t: &BTreeSet<Interval>) -> bool {
        let quotients = t.iter().all(|&x| self.quotients(x).iter().all(|q| t.contains(q)));
        quotients
            && t.iter().all(|&x| {
                t.iter().all(|&y| {
                    self.extension(x, y)
                        .is_none_or(|e| e.iter().all(|z| t.contains(z)))
                })
            })
    }

    /// Smallest torsion class containing `s`.
    pub fn torsion_closure(&self, s: &BTreeSet<Interval>) -> BTreeSet<Interval> {
        let mut t = s.clone();
        loop {
            let mut next = t.clone();
            for &x in &t {
                next.extend(self.quotients(x));
                for &y in &t {
                    if let Some(e) = self.extension(x, y) {
                        next.extend(e);
                    }
                }
            }
            if next == t {
                return t;
            }
            t = next;
        }
    }

    /// Every torsion class, by brute force over subsets of indecomposables.
    pub fn all_torsion_classes(&self) -> Result<Vec<BTreeSet<Interval>>> {
        let all = self.intervals();
        if all.len() > 24 {
            return Err(Error::ResourceCap(format!(
                "2^{} subsets of indecomposables",
                all.len()
            )));
        }
        Ok((0u32..1 << all.len())
            .map(|mask| {
                all.iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &x)| x)
                    .collect::<BTreeSet<_>>()
            })
            .filter(|t| self.is_torsion_class(t))
            .collect())
    }

    /// Every semibrick: sets of pairwise hom-orthogonal intervals.
    pub fn semibricks(&self) -> Vec<BTreeSet<Interval>> {
        let all = self.intervals();
        let mut out = Vec::new();
        let mut cur = Vec::new();
        self.extend_semibrick(&all, 0, &mut cur, &mut out);
        out
    }

    fn extend_semibrick(&self, all: &[Interval], from: usize, cur: &mut Vec<Interval>, out: &mut Vec<BTreeSet<Interval>>) {
        out.push(cur.iter().copied().collect());
        for i in from..all.len() {
            let x = all[i];
            if cur.iter().all(|&c| self.hom(c, x) == 0 && self.hom(x, c) == 0) {
                cur.push(x);
                self.extend_semibrick(all, i + 1, cur, out);
                cur.pop();
            }
        }
    }
}

/// Basic τ-tilting pair with its torsion class `Fac M`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TauTiltingPair {
    /// Sorted; mutation directions index into this list.
    pub summands: Vec<Summand>,
    pub dec: DecoratedModule,
    pub fac: BTreeSet<Interval>,
}

impl fmt::Display for TauTiltingPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.dec)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MutationSide {
    /// `Fac M' ⊊ Fac M`.
    Left,
    /// `Fac M ⊊ Fac M'`.
    Right,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairMutation {
    pub pair: TauTiltingPair,
    pub side: MutationSide,
    /// The summand that replaced direction `k`.
    pub new_summand: Summand,
}

/// Image of a τ-tilting pair under `(M, P) ↦ Fac M` and its labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BijectionCounts {
    pub pairs: usize,
    pub torsion_classes: usize,
    pub semibricks: usize,
    /// `Fac` maps pairs onto the torsion classes injectively.
    pub fac_bijective: bool,
    /// Labeling semibricks of the pairs are exactly the semibricks.
    pub labels_bijective: bool,
}

impl BijectionCounts {
    pub fn passed(&self) -> bool {
        self.pairs == self.torsion_classes
            && self.pairs == self.semibricks
            && self.fac_bijective
            && self.labels_bijective
    }
}

impl LinearA {
    pub fn pair_from_summands(&self, mut summands: Vec<Summand>) -> Result<TauTiltingPair> {
        summands.sort();
        summands.dedup();
        for (i, &x) in summands.iter().enumerate() {
            if let Summand::Module(m) = x {
                self.interval(m.a, m.b)?;
            } else if let Summand::Shifted(j) = x {
                check_index(j.wrapping_sub(1), self.rank())?;
            }
            for &y in &summands[i..] {
                if !self.compatible(x, y) {
                    return Err(Error::Precondition(format!("{x} ⊕ {y} is not τ-rigid")));
                }
            }
        }
        if summands.len() != self.rank() {
            return Err(Error::Precondition(format!(
                "{} summands, expected {}",
                summands.len(),
                self.rank()
            )));
        }
        let dec = self.decorated_of(&summands);
        let fac = self.fac(&dec.plus);
        Ok(TauTiltingPair { summands, dec, fac })
    }

    pub fn pair_from_decorated(&self, m: &DecoratedModule) -> Result<TauTiltingPair> {
        self.pair_from_summands(self.summands_of(m)?)
    }

    /// All basic τ-tilting pairs.
    pub fn tau_tilting_pairs(&self) -> Vec<TauTiltingPair> {
        let all = self.summands();
        let mut out = Vec::new();
        let mut cur = Vec::new();
        self.extend_rigid(&all, 0, &mut cur, &mut out, Some(self.rank()));
        out.into_iter()
            .map(|s| self.pair_from_summands(s).expect("enumerated pairs are τ-tilting"))
            .collect()
    }

    /// Replaces summand `k` by the unique other completion.
    pub fn mutate_pair(&self, pair: &TauTiltingPair, k: usize) -> Result<PairMutation> {
        check_index(k, pair.summands.len())?;
        let rest: Vec<Summand> = pair
            .summands
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != k)
            .map(|(_, &s)| s)
            .collect();
        let old = pair.summands[k];
        let found: Vec<Summand> = self
            .summands()
            .into_iter()
            .filter(|&c| c != old && !rest.contains(&c) && rest.iter().all(|&r| self.compatible(r, c)))
            .collect();
        let [new_summand] = found.as_slice() else {
            return Err(Error::Consistency(format!(
                "{} alternative completions in direction {k} of {pair}",
                found.len()
            )));
        };
        let mut summands = rest;
        summands.push(*new_summand);
        let next = self.pair_from_summands(summands)?;
        let side = if next.fac.is_subset(&pair.fac) && next.fac != pair.fac {
            MutationSide::Left
        } else if pair.fac.is_subset(&next.fac) && next.fac != pair.fac {
            MutationSide::Right
        } else {
            return Err(Error::Consistency(format!(
                "Fac of {pair} and {next} are not nested"
            )));
        };
        Ok(PairMutation {
            pair: next,
            side,
            new_summand: *new_summand,
        })
    }

    /// Left: `Fac M = Fac U`. Right: `Fac M = ⊥(τU) ∩ Q^⊥`. Also checks
    /// that every completion of `U` lies between the two.
    pub fn bongartz_pair(&self, u: &DecoratedModule, side: Side) -> Result<TauTiltingPair> {
        let us = self.summands_of(u)?;
        if !self.is_tau_rigid(u) {
            return Err(Error::Precondition(format!("{u} is not τ-rigid")));
        }
        let low = self.fac(&u.plus);
        let high = self.perp_tau(u);
        let completions: Vec<TauTiltingPair> = self
            .tau_tilting_pairs()
            .into_iter()
            .filter(|p| us.iter().all(|s| p.summands.contains(s)))
            .collect();
        for p in &completions {
            if !(low.is_subset(&p.fac) && p.fac.is_subset(&high)) {
                return Err(Error::Consistency(format!(
                    "{p} completes {u} but Fac is not between the bounds"
                )));
            }
        }
        let target = match side {
            Side::Left => &low,
            Side::Right => &high,
        };
        let found: Vec<TauTiltingPair> = completions.into_iter().filter(|p| &p.fac == target).collect();
        match <[TauTiltingPair; 1]>::try_from(found) {
            Ok([p]) => Ok(p),
            Err(found) => Err(Error::Consistency(format!(
                "{} {side:?} Bongartz completions of {u}",
                found.len()
            ))),
        }
    }

    /// Directions of left mutations.
    pub fn left_directions(&self, pair: &TauTiltingPair) -> Result<Vec<(usize, PairMutation)>> {
        let mut out = Vec::new();
        for k in 0..pair.summands.len() {
            let m = self.mutate_pair(pair, k)?;
            if m.side == MutationSide::Left {
                out.push((k, m));
            }
        }
        Ok(out)
    }

    /// Bricks `C_k` labelling the left mutations of `pair`, keyed by
    /// direction. Checks uniqueness, the vanishing pattern
    /// `F_{C_i}[g_{M_k'}] != 0` iff `i = k`, and that the bricks generate
    /// `Fac M` as a torsion class.
    pub fn labeling_semibrick(&self, pair: &TauTiltingPair) -> Result<BTreeMap<usize, Interval>> {
        let left = self.left_directions(pair)?;
        let mut bricks = BTreeMap::new();
        for (k, _) in &left {
            let Summand::Module(mk) = pair.summands[*k] else {
                return Err(Error::Consistency("left mutation at a shifted projective".into()));
            };
            let others: Vec<Interval> = pair
                .summands
                .iter()
                .enumerate()
                .filter_map(|(j, s)| match s {
                    Summand::Module(m) if j != *k => Some(*m),
                    _ => None,
                })
                .collect();
            let found: Vec<Interval> = self
                .quotients(mk)
                .into_iter()
                .filter(|&c| others.iter().all(|&m| self.hom(m, c) == 0))
                .collect();
            let [c] = found.as_slice() else {
                return Err(Error::Consistency(format!(
                    "{} brick candidates for direction {k} of {pair}",
                    found.len()
                )));
            };
            bricks.insert(*k, *c);
        }
        for (k, m) in &left {
            let g = self.g_decorated(&m.new_summand.decorated());
            for (i, &c) in &bricks {
                let v = tropical_eval(&self.f_polynomial(c), &g)?;
                if (v != 0) != (i == k) {
                    return Err(Error::Consistency(format!(
                        "F_{c}[g] = {v} for the mutation of {pair} in direction {k}"
                    )));
                }
            }
        }
        let generated = self.torsion_closure(&bricks.values().copied().collect());
        if generated != pair.fac {
            return Err(Error::Consistency(format!(
                "labeling bricks of {pair} do not generate Fac M"
            )));
        }
        Ok(bricks)
    }

    /// Pairs, torsion classes and semibricks enumerated independently.
    pub fn bijection_counts(&self) -> Result<BijectionCounts> {
        let pairs = self.tau_tilting_pairs();
        let tors: BTreeSet<BTreeSet<Interval>> = self.all_torsion_classes()?.into_iter().collect();
        let sbs: BTreeSet<BTreeSet<Interval>> = self.semibricks().into_iter().collect();
        let facs: BTreeSet<BTreeSet<Interval>> = pairs.iter().map(|p| p.fac.clone()).collect();
        let mut labels = BTreeSet::new();
        for p in &pairs {
            labels.insert(self.labeling_semibrick(p)?.into_values().collect::<BTreeSet<_>>());
        }
        Ok(BijectionCounts {
            pairs: pairs.len(),
            torsion_classes: tors.len(),
            semibricks: sbs.len(),
            fac_bijective: facs.len() == pairs.len() && facs == tors,
            labels_bijective: labels.len() == pairs.len() && labels == sbs,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two() -> (LinearA, Interval, Interval, Interval) {
        let a = LinearA::new(2).unwrap();
        (a, a.simple(1).unwrap(), a.projective(1).unwrap(), a.projective(2).unwrap())
    }

    #[test]
    fn five_pairs_and_diagram() {
        let (a, s1, p1, p2) = two();
        let pairs = a.tau_tilting_pairs();
        assert_eq!(pairs.len(), 5);
        let pp = a.pair_from_summands(vec![Summand::Shifted(1), Summand::Shifted(2)]).unwrap();
        let k = pp.summands.iter().position(|&s| s == Summand::Shifted(1)).unwrap();
        let m = a.mutate_pair(&pp, k).unwrap();
        assert_eq!(m.side, MutationSide::Right);
        assert_eq!(m.pair.summands, vec![Summand::Module(s1), Summand::Shifted(2)]);
        assert!(pp.fac.is_empty());
        let full = a.pair_from_summands(vec![Summand::Module(p1), Summand::Module(p2)]).unwrap();
        assert_eq!(full.fac, BTreeSet::from([s1, p1, p2]));
    }

    #[test]
    fn counts_are_catalan() {
        for (n, c) in [(1, 2), (2, 5), (3, 14), (4, 42)] {
            let a = LinearA::new(n).unwrap();
            let counts = a.bijection_counts().unwrap();
            assert_eq!(counts.pairs, c);
            assert!(counts.passed(), "{counts:?}");
        }
    }

    #[test]
    fn bongartz_pairs() {
        let (a, s1, _, p2) = two();
        let u = DecoratedModule::module(ModuleSum::single(s1));
        let l = a.bongartz_pair(&u, Side::Left).unwrap();
        assert_eq!(l.summands, vec![Summand::Module(s1), Summand::Shifted(2)]);
        let zero = DecoratedModule::default();
        let l0 = a.bongartz_pair(&zero, Side::Left).unwrap();
        assert_eq!(l0.summands, vec![Summand::Shifted(1), Summand::Shifted(2)]);
        let r0 = a.bongartz_pair(&zero, Side::Right).unwrap();
        assert_eq!(r0.fac.len(), 3);
        let _ = p2;
    }

    #[test]
    fn labeling_of_the_algebra() {
        let (a, s1, p1, p2) = two();
        let full = a.pair_from_summands(vec![Summand::Module(p1), Summand::Module(p2)]).unwrap();
        let bricks: BTreeSet<Interval> = a.labeling_semibrick(&full).unwrap().into_values().collect();
        assert_eq!(bricks, BTreeSet::from([s1, p2]));
        let zero = a.pair_from_summands(vec![Summand::Shifted(1), Summand::Shifted(2)]).unwrap();
        assert!(a.labeling_semibrick(&zero).unwrap().is_empty());
    }
}

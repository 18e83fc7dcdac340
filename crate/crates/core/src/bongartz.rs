//! Green/red mutations and Bongartz completion of partial clusters.

use std::collections::BTreeSet;

use crate::error::{check_index, Error, Result};
use crate::exmatrix::SignPattern;
use crate::invariant::dominant_set_of_seed;
use crate::pattern::{ClusterVariableId, ExchangeGraph, Seed};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MutationColor {
    Green,
    Red,
}

/// Green iff column `k` of the C-matrix is non-negative.
pub fn classify_mutation(s: &Seed, k: usize) -> Result<MutationColor> {
    check_index(k, s.rank())?;
    match s.c_matrix().column_sign(k) {
        SignPattern::Zero | SignPattern::NonNegative => Ok(MutationColor::Green),
        SignPattern::NonPositive => Ok(MutationColor::Red),
        SignPattern::Mixed => Err(Error::Consistency(format!(
            "column {k} of C at {:?} is not sign-coherent",
            s.path()
        ))),
    }
}

/// Whether `C >= 0`; in that case the cluster must be the initial one.
pub fn is_initial_by_c(s: &Seed) -> Result<bool> {
    if !s.c_matrix().is_nonnegative() {
        return Ok(false);
    }
    if s.cluster() != Seed::initial(s.initial_matrix()).cluster() {
        return Err(Error::Consistency(format!(
            "C is non-negative at {:?} but the cluster is not initial",
            s.path()
        )));
    }
    Ok(true)
}

/// A subset of some cluster of an explored graph.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct PartialCluster {
    ids: BTreeSet<ClusterVariableId>,
}

impl PartialCluster {
    pub fn new(ids: impl IntoIterator<Item = ClusterVariableId>, graph: &ExchangeGraph) -> Result<Self> {
        let ids: BTreeSet<ClusterVariableId> = ids.into_iter().collect();
        if graph.seeds_containing(&ids).is_empty() {
            return Err(Error::Precondition(
                "variables do not lie in a common cluster".into(),
            ));
        }
        Ok(PartialCluster { ids })
    }

    pub fn empty() -> Self {
        PartialCluster { ids: BTreeSet::new() }
    }

    pub fn ids(&self) -> &BTreeSet<ClusterVariableId> {
        &self.ids
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Completion {
    /// Index of the completing seed in the graph.
    pub seed: usize,
    /// Number of seeds inspected.
    pub checked: usize,
}

fn satisfies(s: &Seed, u: &PartialCluster, side: Side) -> bool {
    if !u.ids.iter().all(|id| s.position(id).is_some()) {
        return false;
    }
    (0..s.rank()).all(|i| {
        u.ids.contains(&s.ids()[i])
            || match side {
                Side::Left => s.c_matrix().column_sign(i).is_nonnegative(),
                Side::Right => s.c_matrix().column_sign(i).is_nonpositive(),
            }
    })
}

/// All seeds satisfying the completion conditions for `side`.
pub fn completion_candidates(u: &PartialCluster, graph: &ExchangeGraph, side: Side) -> Result<Vec<usize>> {
    graph.require_finite()?;
    Ok((0..graph.len())
        .filter(|&s| satisfies(graph.seed(s), u, side))
        .collect())
}

/// The unique seed containing `U` whose C-columns outside `U` are
/// non-negative, found by scanning every seed.
pub fn left_bongartz_completion(u: &PartialCluster, graph: &ExchangeGraph) -> Result<Completion> {
    let found = completion_candidates(u, graph, Side::Left)?;
    match found.as_slice() {
        [s] => Ok(Completion {
            seed: *s,
            checked: graph.len(),
        }),
        [] => Err(Error::Consistency("no left Bongartz completion found".into())),
        _ => Err(Error::Consistency(format!(
            "{} left Bongartz completions found",
            found.len()
        ))),
    }
}

/// Right completion, which need not exist.
pub fn right_bongartz_completion(u: &PartialCluster, graph: &ExchangeGraph) -> Result<Option<Completion>> {
    let found = completion_candidates(u, graph, Side::Right)?;
    match found.as_slice() {
        [] => Ok(None),
        [s] => Ok(Some(Completion {
            seed: *s,
            checked: graph.len(),
        })),
        _ => Err(Error::Consistency(format!(
            "{} right Bongartz completions found",
            found.len()
        ))),
    }
}

/// Experimental descent: start at a seed containing `U` and mutate at the
/// smallest red index outside `U` until none is left. Returns `None` if
/// `max_steps` is exhausted.
pub fn greedy_left_completion(u: &PartialCluster, graph: &ExchangeGraph, max_steps: usize) -> Result<Option<usize>> {
    graph.require_finite()?;
    let Some(&start) = graph.seeds_containing(&u.ids).first() else {
        return Err(Error::Precondition("not a partial cluster".into()));
    };
    let mut s = start;
    for _ in 0..=max_steps {
        let seed = graph.seed(s);
        let red = (0..seed.rank()).find(|&i| {
            !u.ids.contains(&seed.ids()[i]) && !seed.c_matrix().column_sign(i).is_nonnegative()
        });
        match red {
            None => return Ok(Some(s)),
            Some(k) => {
                s = graph
                    .neighbor(s, k)
                    .ok_or_else(|| Error::Consistency("missing edge in finite graph".into()))?;
            }
        }
    }
    Ok(None)
}

/// Dominant sets of every seed, indexed like the graph.
pub fn all_dominant_sets(graph: &ExchangeGraph) -> Result<Vec<BTreeSet<ClusterVariableId>>> {
    graph.seeds().iter().map(|s| dominant_set_of_seed(s, graph)).collect()
}

/// Outcome of checking the three dominant-set characterizations for one
/// partial cluster.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DominantSetCheck {
    pub left_minimal: bool,
    /// `None` when the right completion does not exist.
    pub right_maximal: Option<bool>,
    pub sandwich: Option<bool>,
}

impl DominantSetCheck {
    pub fn passed(&self) -> bool {
        self.left_minimal && self.right_maximal != Some(false) && self.sandwich != Some(false)
    }
}

/// Checks that the left completion is the unique seed containing `U`
/// with smallest dominant set, that the right one (if any) has the
/// largest, and that seeds containing `U` are exactly those sandwiched.
pub fn check_dominant_set_theorem(
    u: &PartialCluster,
    graph: &ExchangeGraph,
    doms: &[BTreeSet<ClusterVariableId>],
) -> Result<DominantSetCheck> {
    let left = left_bongartz_completion(u, graph)?.seed;
    let right = right_bongartz_completion(u, graph)?.map(|c| c.seed);
    let containing = graph.seeds_containing(&u.ids);
    let extremal = |smaller: bool| -> Vec<usize> {
        containing
            .iter()
            .copied()
            .filter(|&s| {
                containing.iter().all(|&t| {
                    if smaller {
                        doms[s].is_subset(&doms[t])
                    } else {
                        doms[t].is_subset(&doms[s])
                    }
                })
            })
            .collect()
    };
    let left_minimal = extremal(true) == vec![left];
    let right_maximal = right.map(|r| extremal(false) == vec![r]);
    let sandwich = right.map(|r| {
        let inside: BTreeSet<usize> = containing.iter().copied().collect();
        (0..graph.len()).all(|t| {
            let between = doms[left].is_subset(&doms[t]) && doms[t].is_subset(&doms[r]);
            between == inside.contains(&t)
        })
    });
    Ok(DominantSetCheck {
        left_minimal,
        right_maximal,
        sandwich,
    })
}

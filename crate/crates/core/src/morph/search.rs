use std::collections::BTreeMap;

use crate::degree::PfDegree;
use crate::error::{Error, Result};
use crate::graph::{PfGraph, VertexId};

use super::{verify_morphism, Mapping, MorphismKind, MorphismReport};

/// A morphism search algorithm. Implementations must return the
/// lexicographically least witness so that strategies are interchangeable.
///
/// Size checks (cap, bijective size mismatch, empty target) happen in
/// [`super::find_morphism_using`] before a strategy is called.
pub trait MorphismSearch: Send + Sync {
    fn name(&self) -> &'static str;

    fn search(&self, g1: &PfGraph, g2: &PfGraph, kind: MorphismKind) -> MorphismReport;
}

/// Index-based view of a search instance.
struct Instance<'a> {
    kind: MorphismKind,
    ids1: Vec<&'a VertexId>,
    ids2: Vec<&'a VertexId>,
    /// `q1[i][k]`: source pair degree, `(0, 0)` when absent.
    q1: Vec<Vec<PfDegree>>,
    /// `q2[j][l]`: target pair degree, `(0, 0)` on the diagonal and when absent.
    q2: Vec<Vec<PfDegree>>,
    /// Whether the pair condition applies to source pair `{i, k}`.
    checked: Vec<Vec<bool>>,
    /// Vertex-compatible targets of each source, in label order.
    candidates: Vec<Vec<usize>>,
}

fn pair_matrix(g: &PfGraph, ids: &[&VertexId]) -> Vec<Vec<PfDegree>> {
    ids.iter()
        .map(|u| ids.iter().map(|v| g.edge_or_zero(u, v)).collect())
        .collect()
}

impl<'a> Instance<'a> {
    fn new(g1: &'a PfGraph, g2: &'a PfGraph, kind: MorphismKind) -> Self {
        let ids1: Vec<_> = g1.vertex_ids().collect();
        let ids2: Vec<_> = g2.vertex_ids().collect();
        let q1 = pair_matrix(g1, &ids1);
        let q2 = pair_matrix(g2, &ids2);
        let n1 = ids1.len();
        let checked = (0..n1)
            .map(|i| {
                (0..n1)
                    .map(|k| i != k && (kind.checks_all_pairs() || g1.edge(ids1[i], ids1[k]).is_some()))
                    .collect()
            })
            .collect();
        let d2: Vec<_> = g2.vertices().map(|(_, d)| d).collect();
        let candidates = g1
            .vertices()
            .map(|(_, d1)| (0..d2.len()).filter(|&j| kind.vertex_ok(d1, d2[j])).collect())
            .collect();
        Instance {
            kind,
            ids1,
            ids2,
            q1,
            q2,
            checked,
            candidates,
        }
    }

    /// Whether mapping source `i` to target `j` agrees with every assigned
    /// source on the checked pairs.
    fn consistent(&self, assign: &[usize], i: usize, j: usize) -> bool {
        assign.iter().enumerate().all(|(k, &l)| {
            !self.checked[k][i] || self.kind.pair_ok(self.q1[k][i], self.q2[l][j])
        })
    }

    fn mapping(&self, assign: &[usize]) -> Mapping {
        assign
            .iter()
            .enumerate()
            .map(|(i, &j)| (self.ids1[i].clone(), self.ids2[j].clone()))
            .collect()
    }
}

/// Kuhn's augmenting-path test: can every row be matched to a distinct column?
fn has_perfect_matching(rows: &[Vec<usize>], n_cols: usize) -> bool {
    fn augment(r: usize, rows: &[Vec<usize>], seen: &mut [bool], owner: &mut [Option<usize>]) -> bool {
        for &c in &rows[r] {
            if seen[c] {
                continue;
            }
            seen[c] = true;
            if owner[c].is_none_or(|o| augment(o, rows, seen, owner)) {
                owner[c] = Some(r);
                return true;
            }
        }
        false
    }
    let mut owner = vec![None; n_cols];
    (0..rows.len()).all(|r| augment(r, rows, &mut vec![false; n_cols], &mut owner))
}

/// Backtracking over source vertices in label order with three prunings:
/// targets are pre-filtered by the vertex condition; every assignment is
/// checked against the pair condition on already-assigned sources; and after
/// each assignment the remaining sources must still have admissible targets
/// (for bijective kinds, a perfect matching of them onto the unused targets).
pub struct PrunedSearch;

impl PrunedSearch {
    fn dfs(inst: &Instance, assign: &mut Vec<usize>, used: &mut [bool], space: &mut u64) -> bool {
        let i = assign.len();
        if i == inst.ids1.len() {
            return true;
        }
        let bijective = inst.kind.is_bijective();
        for &j in &inst.candidates[i] {
            if bijective && used[j] {
                continue;
            }
            *space += 1;
            if !inst.consistent(assign, i, j) {
                continue;
            }
            assign.push(j);
            used[j] = true;
            if Self::completable(inst, assign, used) && Self::dfs(inst, assign, used, space) {
                return true;
            }
            used[j] = false;
            assign.pop();
        }
        false
    }

    fn completable(inst: &Instance, assign: &[usize], used: &[bool]) -> bool {
        let bijective = inst.kind.is_bijective();
        let rest: Vec<Vec<usize>> = (assign.len()..inst.ids1.len())
            .map(|m| {
                inst.candidates[m]
                    .iter()
                    .copied()
                    .filter(|&j| !(bijective && used[j]) && inst.consistent(assign, m, j))
                    .collect()
            })
            .collect();
        if rest.iter().any(Vec::is_empty) {
            return false;
        }
        !bijective || has_perfect_matching(&rest, inst.ids2.len())
    }
}

impl MorphismSearch for PrunedSearch {
    fn name(&self) -> &'static str {
        "pruned"
    }

    fn search(&self, g1: &PfGraph, g2: &PfGraph, kind: MorphismKind) -> MorphismReport {
        let inst = Instance::new(g1, g2, kind);
        let mut space = 0;
        let mut assign = Vec::with_capacity(inst.ids1.len());
        let mut used = vec![false; inst.ids2.len()];
        let feasible = !kind.is_bijective() || has_perfect_matching(&inst.candidates, inst.ids2.len());
        let found = feasible && Self::dfs(&inst, &mut assign, &mut used, &mut space);
        MorphismReport {
            kind,
            found,
            witness: found.then(|| inst.mapping(&assign)),
            search_space: space,
        }
    }
}

/// Enumerates every map (every bijection for the bijective kinds) in
/// lexicographic order and checks each one with [`verify_morphism`]. Slow;
/// kept as a reference for the pruned strategy.
pub struct ExhaustiveSearch;

impl ExhaustiveSearch {
    fn walk(
        g1: &PfGraph,
        g2: &PfGraph,
        kind: MorphismKind,
        ids1: &[&VertexId],
        ids2: &[&VertexId],
        map: &mut Mapping,
        space: &mut u64,
    ) -> bool {
        let i = map.len();
        if i == ids1.len() {
            *space += 1;
            return verify_morphism(g1, g2, kind, map).map(|c| c.ok).unwrap_or(false);
        }
        for &t in ids2 {
            if kind.is_bijective() && map.values().any(|x| x == t) {
                continue;
            }
            map.insert(ids1[i].clone(), t.clone());
            if Self::walk(g1, g2, kind, ids1, ids2, map, space) {
                return true;
            }
            map.remove(ids1[i]);
        }
        false
    }
}

impl MorphismSearch for ExhaustiveSearch {
    fn name(&self) -> &'static str {
        "exhaustive"
    }

    fn search(&self, g1: &PfGraph, g2: &PfGraph, kind: MorphismKind) -> MorphismReport {
        let ids1: Vec<_> = g1.vertex_ids().collect();
        let ids2: Vec<_> = g2.vertex_ids().collect();
        let mut map = Mapping::new();
        let mut space = 0;
        let found = Self::walk(g1, g2, kind, &ids1, &ids2, &mut map, &mut space);
        MorphismReport {
            kind,
            found,
            witness: found.then_some(map),
            search_space: space,
        }
    }
}

/// Name → search strategy table.
#[derive(Default)]
pub struct SearchRegistry {
    strategies: BTreeMap<&'static str, Box<dyn MorphismSearch>>,
}

impl SearchRegistry {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn builtin() -> Self {
        let mut r = Self::empty();
        r.register(Box::new(PrunedSearch));
        r.register(Box::new(ExhaustiveSearch));
        r
    }

    pub fn register(&mut self, s: Box<dyn MorphismSearch>) {
        self.strategies.insert(s.name(), s);
    }

    pub fn get(&self, name: &str) -> Result<&dyn MorphismSearch> {
        self.strategies
            .get(name)
            .map(|b| b.as_ref())
            .ok_or_else(|| Error::UnknownName {
                what: "search strategy",
                name: name.to_string(),
            })
    }

    pub fn names(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.strategies.keys().copied()
    }
}

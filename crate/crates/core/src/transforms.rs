//! Line digraphs, coreset partitions and coreset contraction sequences.

use serde::Serialize;

use crate::digraph::{contract, Digraph};
use crate::error::{Error, Result};
use crate::game::{cop_number, CopNumber, Variant};

#[derive(Clone, Debug)]
pub struct LineDigraph {
    pub digraph: Digraph,
    /// `arcs[i]` is the arc of the base digraph that became vertex `i`.
    pub arcs: Vec<(usize, usize)>,
}

impl LineDigraph {
    pub fn vertex_of(&self, arc: (usize, usize)) -> Option<usize> {
        self.arcs.binary_search(&arc).ok()
    }
}

/// One vertex per arc; `(a,b) -> (b,c)` for every composable pair.
pub fn line_digraph(d: &Digraph) -> Result<LineDigraph> {
    if d.arc_count() == 0 {
        return Err(Error::NoArcs);
    }
    let arcs = d.arcs().to_vec();
    let index = |a: (usize, usize)| arcs.binary_search(&a).unwrap();
    let mut out = Vec::new();
    for (i, &(_, b)) in arcs.iter().enumerate() {
        for &c in d.out_neighbors(b) {
            out.push((i, index((b, c))));
        }
    }
    let labels = arcs.iter().map(|&(a, b)| format!("{}>{}", d.name(a), d.name(b)));
    let digraph = Digraph::new(arcs.len(), out)?.with_labels(labels)?;
    Ok(LineDigraph { digraph, arcs })
}

/// Cop number of the line digraph.
pub fn edge_cop_number(d: &Digraph, k_max: usize) -> Result<CopNumber> {
    cop_number(&line_digraph(d)?.digraph, Variant::Standard, k_max)
}

/// How vertices without out-arcs are handled when forming coresets.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SinkPolicy {
    /// Sinks are an error.
    #[default]
    Reject,
    /// Each sink forms its own block.
    Singleton,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoresetBlock {
    pub members: Vec<usize>,
    /// `N+(members)`; its in-neighborhood is exactly `members`.
    pub out_neighborhood: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoresetPartition {
    /// Ordered by smallest member.
    pub blocks: Vec<CoresetBlock>,
}

impl CoresetPartition {
    pub fn member_lists(&self) -> Vec<Vec<usize>> {
        self.blocks.iter().map(|b| b.members.clone()).collect()
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn is_trivial(&self) -> bool {
        self.blocks.iter().all(|b| b.members.len() == 1)
    }
}

fn out_set(d: &Digraph, x: &[usize]) -> Vec<usize> {
    let mut s: Vec<usize> = x.iter().flat_map(|&v| d.out_neighbors(v).iter().copied()).collect();
    s.sort_unstable();
    s.dedup();
    s
}

fn in_set(d: &Digraph, x: &[usize]) -> Vec<usize> {
    let mut s: Vec<usize> = x.iter().flat_map(|&v| d.in_neighbors(v).iter().copied()).collect();
    s.sort_unstable();
    s.dedup();
    s
}

/// Least fixpoint of `X -> N-(N+(X))` above `{v}`.
fn closure(d: &Digraph, v: usize) -> Vec<usize> {
    let mut x = vec![v];
    loop {
        let next = in_set(d, &out_set(d, &x));
        if next == x {
            return x;
        }
        x = next;
    }
}

pub fn coreset_partition(d: &Digraph) -> Result<CoresetPartition> {
    coreset_partition_with(d, SinkPolicy::Reject)
}

pub fn coreset_partition_with(d: &Digraph, policy: SinkPolicy) -> Result<CoresetPartition> {
    let n = d.n();
    if policy == SinkPolicy::Reject {
        if let Some(&v) = d.sinks().first() {
            return Err(Error::SinkPresent { vertex: v, step: None });
        }
    }
    let mut block_of = vec![usize::MAX; n];
    let mut blocks: Vec<CoresetBlock> = Vec::new();
    for v in 0..n {
        if block_of[v] != usize::MAX {
            continue;
        }
        let members = if d.out_degree(v) == 0 { vec![v] } else { closure(d, v) };
        for &u in &members {
            if block_of[u] != usize::MAX {
                return Err(Error::Inconsistent(format!("coresets of {u} overlap")));
            }
            block_of[u] = blocks.len();
        }
        let out_neighborhood = out_set(d, &members);
        blocks.push(CoresetBlock { members, out_neighborhood });
    }
    // every member must generate its own block
    for b in &blocks {
        for &u in &b.members {
            if d.out_degree(u) > 0 && closure(d, u) != b.members {
                return Err(Error::Inconsistent(format!("closure of {u} differs from its block")));
            }
        }
    }
    Ok(CoresetPartition { blocks })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LimitShape {
    DirectedPath,
    CycleWithTail,
    /// A fixpoint of neither shape (possible only with sinks).
    Other,
}

/// Classifies a digraph as a directed path, a directed cycle with a
/// directed path leaving one of its vertices, or neither.
pub fn classify_limit(d: &Digraph) -> LimitShape {
    let n = d.n();
    let connected = d.underlying().is_connected();
    let max_in = (0..n).map(|v| d.in_degree(v)).max().unwrap_or(0);
    let max_out = (0..n).map(|v| d.out_degree(v)).max().unwrap_or(0);
    if connected && d.arc_count() + 1 == n && max_in <= 1 && max_out <= 1 {
        return LimitShape::DirectedPath;
    }
    let branching = (0..n).filter(|&v| d.out_degree(v) == 2).count();
    if connected && d.arc_count() == n && (0..n).all(|v| d.in_degree(v) == 1) && max_out <= 2 && branching <= 1 {
        return LimitShape::CycleWithTail;
    }
    LimitShape::Other
}

#[derive(Clone, Debug, Serialize)]
pub struct ContractionSequence {
    /// `D0, D1, ..., Dt` with `Dt` a fixpoint.
    #[serde(skip)]
    pub iterates: Vec<Digraph>,
    pub sizes: Vec<usize>,
    pub limit_shape: LimitShape,
    pub limit_cop_number: CopNumber,
}

impl ContractionSequence {
    pub fn limit(&self) -> &Digraph {
        self.iterates.last().unwrap()
    }
}

/// Contracts coresets until nothing changes. Arcless digraphs are
/// fixpoints. `max_steps` defaults to `|V(D0)| + 1`.
pub fn contraction_sequence(d: &Digraph, max_steps: Option<usize>, policy: SinkPolicy) -> Result<ContractionSequence> {
    let max_steps = max_steps.unwrap_or(d.n() + 1);
    let mut iterates = vec![d.clone().without_labels()];
    loop {
        let cur = iterates.last().unwrap();
        let step = iterates.len() - 1;
        if cur.arc_count() == 0 {
            break;
        }
        let part = coreset_partition_with(cur, policy).map_err(|e| match e {
            Error::SinkPresent { vertex, .. } => Error::SinkPresent { vertex, step: Some(step) },
            e => e,
        })?;
        if part.is_trivial() {
            break;
        }
        if step >= max_steps {
            return Err(Error::StepLimit(max_steps));
        }
        let next = contract(cur, &part.member_lists(), true)?;
        iterates.push(next);
    }
    let limit = iterates.last().unwrap();
    let limit_shape = classify_limit(limit);
    let limit_cop_number = cop_number(limit, Variant::Standard, 2)?;
    Ok(ContractionSequence { sizes: iterates.iter().map(Digraph::n).collect(), iterates, limit_shape, limit_cop_number })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::isomorphic;
    use crate::families::{directed_cycle, directed_path, out_star};

    #[test]
    fn line_digraph_of_cycle_is_a_cycle() {
        let c = directed_cycle(5).unwrap();
        let l = line_digraph(&c).unwrap();
        assert!(isomorphic(&l.digraph, &c).unwrap());
        assert_eq!(l.vertex_of((4, 0)), Some(4));
    }

    #[test]
    fn line_digraph_of_star_has_no_arcs() {
        let l = line_digraph(&out_star(5).unwrap()).unwrap();
        assert_eq!((l.digraph.n(), l.digraph.arc_count()), (4, 0));
        assert_eq!(line_digraph(&Digraph::new(2, []).unwrap()).unwrap_err(), Error::NoArcs);
    }

    #[test]
    fn cycle_coresets_are_singletons() {
        let p = coreset_partition(&directed_cycle(6).unwrap()).unwrap();
        assert_eq!(p.len(), 6);
        assert!(p.is_trivial());
        let s = contraction_sequence(&directed_cycle(6).unwrap(), None, SinkPolicy::Reject).unwrap();
        assert_eq!(s.sizes, vec![6]);
        assert_eq!(s.limit_shape, LimitShape::CycleWithTail);
        assert_eq!(s.limit_cop_number, CopNumber::Exactly(2));
    }

    #[test]
    fn sinks() {
        let p = directed_path(4).unwrap();
        assert_eq!(coreset_partition(&p).unwrap_err(), Error::SinkPresent { vertex: 3, step: None });
        let ll = line_digraph(&line_digraph(&directed_path(6).unwrap()).unwrap().digraph).unwrap().digraph;
        let s = contraction_sequence(&ll, None, SinkPolicy::Singleton).unwrap();
        assert_eq!(s.limit_shape, LimitShape::DirectedPath);
        assert_eq!(s.limit_cop_number, CopNumber::Exactly(1));
        assert!(matches!(contraction_sequence(&ll, None, SinkPolicy::Reject), Err(Error::SinkPresent { step: Some(0), .. })));
    }

    #[test]
    fn line_digraph_contracts_back() {
        // two triangles sharing vertex 0
        let d = Digraph::new(5, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)]).unwrap();
        let l = line_digraph(&d).unwrap();
        let part = coreset_partition(&l.digraph).unwrap();
        assert_eq!(part.len(), 5);
        let back = contract(&l.digraph, &part.member_lists(), true).unwrap();
        assert!(isomorphic(&back, &d).unwrap());
    }

    #[test]
    fn limit_shapes() {
        let tail = Digraph::new(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4)]).unwrap();
        assert_eq!(classify_limit(&tail), LimitShape::CycleWithTail);
        assert_eq!(classify_limit(&Digraph::new(1, []).unwrap()), LimitShape::DirectedPath);
        assert_eq!(classify_limit(&out_star(4).unwrap()), LimitShape::Other);
    }
}

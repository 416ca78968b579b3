//! Directed graphs on the dense vertex set `0..n` and their underlying
//! undirected graphs.

use std::collections::VecDeque;

use serde::Serialize;

use crate::error::{Error, Result};

/// A loopless digraph without parallel arcs.
///
/// Both `(u, v)` and `(v, u)` may be present; [`Digraph::is_oriented`] tells
/// whether the digraph is an oriented graph. Adjacency lists are sorted and
/// the value is immutable once built.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Digraph {
    n: usize,
    arcs: Vec<(usize, usize)>,
    out_adj: Vec<Vec<usize>>,
    in_adj: Vec<Vec<usize>>,
    labels: Option<Vec<String>>,
}

impl Digraph {
    /// Builds a digraph, deduplicating repeated arcs.
    pub fn new(n: usize, arcs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if n == 0 {
            return Err(Error::Empty);
        }
        let mut list = Vec::new();
        for (index, (u, v)) in arcs.into_iter().enumerate() {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { index, vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::LoopArc { index, vertex: u });
            }
            list.push((u, v));
        }
        list.sort_unstable();
        list.dedup();
        let mut out_adj = vec![Vec::new(); n];
        let mut in_adj = vec![Vec::new(); n];
        for &(u, v) in &list {
            out_adj[u].push(v);
            in_adj[v].push(u);
        }
        for l in &mut in_adj {
            l.sort_unstable();
        }
        Ok(Digraph { n, arcs: list, out_adj, in_adj, labels: None })
    }

    pub fn with_labels<S: Into<String>>(mut self, labels: impl IntoIterator<Item = S>) -> Result<Self> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.len() != self.n {
            return Err(Error::LabelCount { expected: self.n, got: labels.len() });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn without_labels(mut self) -> Self {
        self.labels = None;
        self
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    /// Arcs in lexicographic order.
    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn out_neighbors(&self, v: usize) -> &[usize] {
        &self.out_adj[v]
    }

    pub fn in_neighbors(&self, v: usize) -> &[usize] {
        &self.in_adj[v]
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.out_adj[v].len()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.in_adj[v].len()
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.out_adj[u].binary_search(&v).is_ok()
    }

    /// True iff no pair of opposite arcs is present.
    pub fn is_oriented(&self) -> bool {
        self.arcs.iter().all(|&(u, v)| !self.has_arc(v, u))
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Display name of `v`: its label if present, otherwise its index.
    pub fn name(&self, v: usize) -> String {
        match &self.labels {
            Some(l) => l[v].clone(),
            None => v.to_string(),
        }
    }

    pub fn vertex(&self, label: &str) -> Option<usize> {
        self.labels.as_ref()?.iter().position(|l| l == label)
    }

    pub fn sources(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| self.in_adj[v].is_empty()).collect()
    }

    pub fn sinks(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| self.out_adj[v].is_empty()).collect()
    }

    pub fn min_out_degree(&self) -> usize {
        (0..self.n).map(|v| self.out_degree(v)).min().unwrap_or(0)
    }

    pub fn underlying(&self) -> UndirectedView {
        let edges = self.arcs.iter().map(|&(u, v)| (u.min(v), u.max(v)));
        UndirectedView::new(self.n, edges).expect("arcs are valid edges")
    }

    /// The digraph with every arc reversed. Labels are kept.
    pub fn reversed(&self) -> Digraph {
        let mut d = Digraph::new(self.n, self.arcs.iter().map(|&(u, v)| (v, u))).expect("valid");
        d.labels = self.labels.clone();
        d
    }

    /// Relabels vertices: vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Digraph {
        assert_eq!(perm.len(), self.n);
        let mut d = Digraph::new(self.n, self.arcs.iter().map(|&(u, v)| (perm[u], perm[v])))
            .expect("permutation keeps arcs valid");
        if let Some(l) = &self.labels {
            let mut nl = vec![String::new(); self.n];
            for (v, name) in l.iter().enumerate() {
                nl[perm[v]] = name.clone();
            }
            d.labels = Some(nl);
        }
        d
    }

    /// Strongly connected components (Tarjan, iterative). Components are
    /// listed in reverse topological order of the condensation; each one is
    /// sorted.
    pub fn strong_components(&self) -> StrongComponents {
        const UNSEEN: usize = usize::MAX;
        let n = self.n;
        let mut index = vec![UNSEEN; n];
        let mut low = vec![0usize; n];
        let mut on_stack = vec![false; n];
        let mut stack = Vec::new();
        let mut components = Vec::new();
        let mut next = 0usize;
        let mut call: Vec<(usize, usize)> = Vec::new();
        for root in 0..n {
            if index[root] != UNSEEN {
                continue;
            }
            call.push((root, 0));
            index[root] = next;
            low[root] = next;
            next += 1;
            stack.push(root);
            on_stack[root] = true;
            while let Some(&mut (v, ref mut pos)) = call.last_mut() {
                if let Some(&w) = self.out_adj[v].get(*pos) {
                    *pos += 1;
                    if index[w] == UNSEEN {
                        index[w] = next;
                        low[w] = next;
                        next += 1;
                        stack.push(w);
                        on_stack[w] = true;
                        call.push((w, 0));
                    } else if on_stack[w] {
                        low[v] = low[v].min(index[w]);
                    }
                    continue;
                }
                call.pop();
                if let Some(&(parent, _)) = call.last() {
                    low[parent] = low[parent].min(low[v]);
                }
                if low[v] == index[v] {
                    let mut comp = Vec::new();
                    loop {
                        let w = stack.pop().expect("tarjan stack");
                        on_stack[w] = false;
                        comp.push(w);
                        if w == v {
                            break;
                        }
                    }
                    comp.sort_unstable();
                    components.push(comp);
                }
            }
        }
        StrongComponents { components, n }
    }

    pub fn is_strongly_connected(&self) -> bool {
        self.strong_components().is_strongly_connected()
    }

    /// BFS distances from `u`; `None` marks unreachable vertices.
    pub fn distances_from(&self, u: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[u] = Some(0);
        let mut queue = VecDeque::from([u]);
        while let Some(v) = queue.pop_front() {
            let d = dist[v].unwrap() + 1;
            for &w in &self.out_adj[v] {
                if dist[w].is_none() {
                    dist[w] = Some(d);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Length of a shortest directed path `u -> v`, or `None` if `v` is
    /// unreachable from `u`.
    pub fn directed_distance(&self, u: usize, v: usize) -> Option<usize> {
        self.distances_from(u)[v]
    }

    pub fn distance_matrix(&self) -> Vec<Vec<Option<usize>>> {
        (0..self.n).map(|u| self.distances_from(u)).collect()
    }

    pub fn structure_profile(&self) -> StructureProfile {
        let g = self.underlying();
        let outs = (0..self.n).map(|v| self.out_degree(v));
        let ins = (0..self.n).map(|v| self.in_degree(v));
        StructureProfile {
            sources: self.sources(),
            sinks: self.sinks(),
            min_out_degree: outs.clone().min().unwrap_or(0),
            max_out_degree: outs.max().unwrap_or(0),
            min_in_degree: ins.clone().min().unwrap_or(0),
            max_in_degree: ins.max().unwrap_or(0),
            underlying_diameter: g.diameter(),
            underlying_girth: g.girth(),
        }
    }

    /// True iff the digraph has no directed cycle.
    pub fn is_acyclic(&self) -> bool {
        self.strong_components().components.len() == self.n
    }
}

/// Quotient of `d` by a partition of its vertices: block `i` becomes vertex
/// `i`, with an arc between two blocks iff some arc of `d` joins them.
///
/// Arcs inside a block would become loops. With `simplify` they are dropped,
/// otherwise they are an error. Parallel arcs collapse in either case.
pub fn contract(d: &Digraph, blocks: &[Vec<usize>], simplify: bool) -> Result<Digraph> {
    let mut block_of = vec![usize::MAX; d.n()];
    for (i, b) in blocks.iter().enumerate() {
        if b.is_empty() {
            return Err(Error::NotAPartition(format!("block {i} is empty")));
        }
        for &v in b {
            if v >= d.n() {
                return Err(Error::NotAPartition(format!("vertex {v} out of range")));
            }
            if block_of[v] != usize::MAX {
                return Err(Error::NotAPartition(format!("vertex {v} lies in two blocks")));
            }
            block_of[v] = i;
        }
    }
    if let Some(v) = block_of.iter().position(|&b| b == usize::MAX) {
        return Err(Error::NotAPartition(format!("vertex {v} is not covered")));
    }
    let mut arcs = Vec::new();
    for &(u, v) in d.arcs() {
        let (a, b) = (block_of[u], block_of[v]);
        if a == b {
            if !simplify {
                return Err(Error::LoopAfterContraction(u, v));
            }
            continue;
        }
        arcs.push((a, b));
    }
    Digraph::new(blocks.len(), arcs)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StrongComponents {
    pub components: Vec<Vec<usize>>,
    #[serde(skip)]
    n: usize,
}

impl StrongComponents {
    pub fn is_strongly_connected(&self) -> bool {
        self.components.len() == 1 && self.components[0].len() == self.n
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }
}

/// Degree and distance summary. `None` stands for an infinite diameter
/// (disconnected underlying graph) or girth (forest).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StructureProfile {
    pub sources: Vec<usize>,
    pub sinks: Vec<usize>,
    pub min_out_degree: usize,
    pub max_out_degree: usize,
    pub min_in_degree: usize,
    pub max_in_degree: usize,
    pub underlying_diameter: Option<usize>,
    pub underlying_girth: Option<usize>,
}

/// A simple undirected graph, used as the underlying graph of a digraph and
/// as input to the orientation constructions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UndirectedView {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl UndirectedView {
    /// Builds a graph from unordered pairs; duplicates and both orders of the
    /// same pair collapse to one edge.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if n == 0 {
            return Err(Error::Empty);
        }
        let mut list = Vec::new();
        for (index, (u, v)) in edges.into_iter().enumerate() {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { index, vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::LoopArc { index, vertex: u });
            }
            list.push((u.min(v), u.max(v)));
        }
        list.sort_unstable();
        list.dedup();
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &list {
            adj[u].push(v);
            adj[v].push(u);
        }
        for l in &mut adj {
            l.sort_unstable();
        }
        Ok(UndirectedView { n, edges: list, adj })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn distances_from(&self, root: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[root] = Some(0);
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            let d = dist[v].unwrap() + 1;
            for &w in &self.adj[v] {
                if dist[w].is_none() {
                    dist[w] = Some(d);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.distances_from(0).iter().all(Option::is_some)
    }

    pub fn eccentricity(&self, v: usize) -> Option<usize> {
        self.distances_from(v).into_iter().try_fold(0, |m, d| d.map(|d| m.max(d)))
    }

    /// `None` when disconnected.
    pub fn diameter(&self) -> Option<usize> {
        (0..self.n).try_fold(0, |m, v| self.eccentricity(v).map(|e| m.max(e)))
    }

    /// Length of a shortest cycle, `None` for a forest.
    pub fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for root in 0..self.n {
            let mut dist = vec![usize::MAX; self.n];
            let mut parent = vec![usize::MAX; self.n];
            dist[root] = 0;
            let mut queue = VecDeque::from([root]);
            while let Some(v) = queue.pop_front() {
                for &w in &self.adj[v] {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[v] + 1;
                        parent[w] = v;
                        queue.push_back(w);
                    } else if parent[v] != w {
                        let len = dist[v] + dist[w] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            let mut comp = vec![s];
            seen[s] = true;
            let mut i = 0;
            while i < comp.len() {
                let v = comp[i];
                i += 1;
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Subgraph induced by `vertices`; vertex `vertices[i]` becomes `i`.
    pub fn induced(&self, vertices: &[usize]) -> UndirectedView {
        let mut pos = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            pos[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| pos[u] != usize::MAX && pos[v] != usize::MAX)
            .map(|&(u, v)| (pos[u], pos[v]));
        UndirectedView::new(vertices.len(), edges).expect("induced edges are valid")
    }

    /// Each edge replaced by a pair of opposite arcs; this is how undirected
    /// games are played on the digraph solver.
    pub fn bidirected(&self) -> Digraph {
        Digraph::new(self.n, self.edges.iter().flat_map(|&(u, v)| [(u, v), (v, u)])).expect("valid")
    }

    pub fn is_independent(&self, set: &[usize]) -> bool {
        set.iter().all(|&u| set.iter().all(|&v| !self.has_edge(u, v)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle3() -> Digraph {
        Digraph::new(3, [(0, 1), (1, 2), (2, 0)]).unwrap()
    }

    #[test]
    fn build_rejects_bad_arcs() {
        assert_eq!(
            Digraph::new(3, [(0, 1), (1, 3)]),
            Err(Error::VertexOutOfRange { index: 1, vertex: 3, n: 3 })
        );
        assert_eq!(Digraph::new(3, [(2, 2)]), Err(Error::LoopArc { index: 0, vertex: 2 }));
        assert_eq!(Digraph::new(0, []), Err(Error::Empty));
    }

    #[test]
    fn build_dedups() {
        let d = Digraph::new(2, [(0, 1), (0, 1)]).unwrap();
        assert_eq!(d.arc_count(), 1);
        let k1 = Digraph::new(1, []).unwrap();
        assert_eq!((k1.n(), k1.arc_count()), (1, 0));
        let c = cycle3();
        assert_eq!(c.min_out_degree(), 1);
        assert!((0..3).all(|v| c.in_degree(v) == 1));
    }

    #[test]
    fn oriented_predicate() {
        assert!(cycle3().is_oriented());
        assert!(!Digraph::new(2, [(0, 1), (1, 0)]).unwrap().is_oriented());
    }

    #[test]
    fn strong_components_examples() {
        assert!(cycle3().is_strongly_connected());
        let path = Digraph::new(3, [(0, 1), (1, 2)]).unwrap();
        let sc = path.strong_components();
        assert_eq!(sc.len(), 3);
        assert!(!sc.is_strongly_connected());
        let star = Digraph::new(5, (1..5).map(|v| (0, v))).unwrap();
        assert_eq!(star.strong_components().len(), 5);
        assert!(Digraph::new(1, []).unwrap().is_strongly_connected());
    }

    #[test]
    fn distances() {
        assert_eq!(cycle3().directed_distance(0, 2), Some(2));
        let path = Digraph::new(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(path.directed_distance(2, 0), None);
        assert_eq!(path.directed_distance(1, 1), Some(0));
    }

    #[test]
    fn profiles() {
        let p = cycle3().structure_profile();
        assert!(p.sources.is_empty());
        assert_eq!(p.underlying_girth, Some(3));
        assert_eq!(p.underlying_diameter, Some(1));
        let star = Digraph::new(5, (1..5).map(|v| (0, v))).unwrap().structure_profile();
        assert_eq!(star.sources, vec![0]);
        assert_eq!(star.sinks.len(), 4);
        assert_eq!(star.underlying_girth, None);
        let disconnected = Digraph::new(3, [(0, 1)]).unwrap().structure_profile();
        assert_eq!(disconnected.underlying_diameter, None);
    }

    #[test]
    fn girth_of_small_graphs() {
        let c5 = UndirectedView::new(5, (0..5).map(|i| (i, (i + 1) % 5))).unwrap();
        assert_eq!(c5.girth(), Some(5));
        let c4 = UndirectedView::new(4, (0..4).map(|i| (i, (i + 1) % 4))).unwrap();
        assert_eq!(c4.girth(), Some(4));
        assert_eq!(c4.diameter(), Some(2));
    }

    #[test]
    fn contraction() {
        let c4 = Digraph::new(4, (0..4).map(|i| (i, (i + 1) % 4))).unwrap();
        let q = contract(&c4, &[vec![0, 2], vec![1, 3]], true).unwrap();
        assert_eq!(q.arcs(), &[(0, 1), (1, 0)]);
        let singletons: Vec<Vec<usize>> = (0..4).map(|v| vec![v]).collect();
        assert_eq!(contract(&c4, &singletons, false).unwrap(), c4);
        assert!(matches!(contract(&c4, &[vec![0, 1], vec![2, 3]], false), Err(Error::LoopAfterContraction(0, 1))));
        assert!(matches!(contract(&c4, &[vec![0, 1], vec![1, 2, 3]], true), Err(Error::NotAPartition(_))));
        assert!(matches!(contract(&c4, &[vec![0, 1], vec![2]], true), Err(Error::NotAPartition(_))));
    }

    #[test]
    fn permute_and_reverse() {
        let c = cycle3();
        let p = c.permuted(&[2, 0, 1]);
        assert!(p.has_arc(2, 0) && p.has_arc(0, 1) && p.has_arc(1, 2));
        let r = c.reversed();
        assert!(r.has_arc(1, 0));
    }
}

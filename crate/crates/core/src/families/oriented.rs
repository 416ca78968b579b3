//! Orientations of undirected graphs built from BFS layerings.

use serde::Serialize;

use crate::digraph::{Digraph, UndirectedView};
use crate::error::{Error, Result};

/// BFS levels of a connected graph from `root`.
pub fn bfs_levels(g: &UndirectedView, root: usize) -> Result<Vec<Vec<usize>>> {
    if root >= g.n() {
        return Err(Error::VertexOutOfRange { index: 0, vertex: root, n: g.n() });
    }
    let dist = g.distances_from(root);
    if dist.iter().any(Option::is_none) {
        return Err(Error::Disconnected);
    }
    let depth = dist.iter().flatten().copied().max().unwrap_or(0);
    let mut levels = vec![Vec::new(); depth + 1];
    for (v, d) in dist.iter().enumerate() {
        levels[d.unwrap()].push(v);
    }
    Ok(levels)
}

/// Inter-level edges point away from `root`, intra-level edges from the
/// smaller to the larger index. The result is acyclic with `root` its only
/// source.
pub fn copwin_orientation(g: &UndirectedView, root: usize) -> Result<Digraph> {
    bfs_levels(g, root)?;
    let dist = g.distances_from(root);
    let key = |v: usize| (dist[v].unwrap(), v);
    Digraph::new(g.n(), g.edges().iter().map(|&(u, v)| if key(u) < key(v) { (u, v) } else { (v, u) }))
}

/// Records how an alternating BFS orientation was built.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AlternatingBfsCertificate {
    pub root: usize,
    pub levels: Vec<Vec<usize>>,
    pub recursive: bool,
}

#[derive(Clone, Debug)]
pub struct AlternatingBfs {
    pub digraph: Digraph,
    pub certificate: AlternatingBfsCertificate,
}

/// Inter-level edges point into odd levels. Intra-level edges go from the
/// smaller to the larger index, or, with `recursive`, each component of a
/// level is itself oriented this way from its smallest vertex.
pub fn alternating_bfs_orientation(g: &UndirectedView, root: usize, recursive: bool) -> Result<AlternatingBfs> {
    let rank: Vec<usize> = (0..g.n()).collect();
    alternating_bfs_orientation_ranked(g, root, recursive, &rank)
}

/// As [`alternating_bfs_orientation`], with intra-level edges ordered by
/// `rank` (lower rank is the tail) and recursive roots chosen by lowest rank.
pub fn alternating_bfs_orientation_ranked(
    g: &UndirectedView,
    root: usize,
    recursive: bool,
    rank: &[usize],
) -> Result<AlternatingBfs> {
    if rank.len() != g.n() {
        return Err(Error::InvalidParameter(format!("rank has {} entries for {} vertices", rank.len(), g.n())));
    }
    let levels = bfs_levels(g, root)?;
    let mut level_of = vec![0; g.n()];
    for (i, l) in levels.iter().enumerate() {
        for &v in l {
            level_of[v] = i;
        }
    }
    let mut arcs = Vec::new();
    for &(u, v) in g.edges() {
        let (lu, lv) = (level_of[u], level_of[v]);
        if lu != lv {
            let into_v = lv % 2 == 1;
            arcs.push(if into_v { (u, v) } else { (v, u) });
        } else if !recursive {
            arcs.push(if rank[u] < rank[v] { (u, v) } else { (v, u) });
        }
    }
    if recursive {
        for level in &levels {
            let sub = g.induced(level);
            for comp in sub.components() {
                if comp.len() < 2 {
                    continue;
                }
                let members: Vec<usize> = comp.iter().map(|&i| level[i]).collect();
                let local = sub.induced(&comp);
                let local_rank: Vec<usize> = members.iter().map(|&v| rank[v]).collect();
                let local_root = (0..members.len()).min_by_key(|&i| local_rank[i]).unwrap();
                let inner = alternating_bfs_orientation_ranked(&local, local_root, true, &local_rank)?;
                arcs.extend(inner.digraph.arcs().iter().map(|&(a, b)| (members[a], members[b])));
            }
        }
    }
    Ok(AlternatingBfs {
        digraph: Digraph::new(g.n(), arcs)?,
        certificate: AlternatingBfsCertificate { root, levels, recursive },
    })
}

/// Edges at `x` leave `x`; all other edges go from smaller to larger index.
/// Every vertex of `x` becomes a source.
pub fn independent_set_source_orientation(g: &UndirectedView, x: &[usize]) -> Result<Digraph> {
    if let Some(&v) = x.iter().find(|&&v| v >= g.n()) {
        return Err(Error::VertexOutOfRange { index: 0, vertex: v, n: g.n() });
    }
    if !g.is_independent(x) {
        let (u, v) = *g.edges().iter().find(|(u, v)| x.contains(u) && x.contains(v)).unwrap();
        return Err(Error::NotIndependent(u, v));
    }
    Digraph::new(
        g.n(),
        g.edges().iter().map(|&(u, v)| {
            if x.contains(&v) {
                (v, u)
            } else {
                (u, v)
            }
        }),
    )
}

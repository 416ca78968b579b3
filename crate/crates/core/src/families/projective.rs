//! Point-line incidence graphs of the projective planes PG(2, q), q <= 4,
//! and orientations of them.

use crate::digraph::{Digraph, UndirectedView};
use crate::error::{Error, Result};

/// Arithmetic in GF(q) for q in {2, 3, 4}. GF(4) elements are polynomials
/// over GF(2) modulo x^2 + x + 1, encoded as 2-bit integers.
#[derive(Clone, Copy, Debug)]
struct Field {
    q: usize,
}

impl Field {
    fn new(q: usize) -> Result<Self> {
        match q {
            2..=4 => Ok(Field { q }),
            _ => Err(Error::InvalidParameter(format!("projective plane order must be 2, 3 or 4, got {q}"))),
        }
    }

    fn add(self, a: usize, b: usize) -> usize {
        if self.q == 4 {
            a ^ b
        } else {
            (a + b) % self.q
        }
    }

    fn mul(self, a: usize, b: usize) -> usize {
        if self.q != 4 {
            return (a * b) % self.q;
        }
        const T: [[usize; 4]; 4] = [[0, 0, 0, 0], [0, 1, 2, 3], [0, 2, 3, 1], [0, 3, 1, 2]];
        T[a][b]
    }
}

/// Incidence graph of PG(2, q): points are `0..m`, lines `m..2m` with
/// `m = q^2 + q + 1`.
pub fn projective_incidence_graph(q: usize) -> Result<UndirectedView> {
    let f = Field::new(q)?;
    // normalized representatives: first nonzero coordinate is 1
    let mut reps = Vec::new();
    for a in 0..q {
        for b in 0..q {
            for c in 0..q {
                let v = [a, b, c];
                if v.iter().find(|&&x| x != 0) == Some(&1) {
                    reps.push(v);
                }
            }
        }
    }
    let m = reps.len();
    debug_assert_eq!(m, q * q + q + 1);
    let mut edges = Vec::new();
    for (i, p) in reps.iter().enumerate() {
        for (j, l) in reps.iter().enumerate() {
            let dot = (0..3).fold(0, |s, t| f.add(s, f.mul(p[t], l[t])));
            if dot == 0 {
                edges.push((i, m + j));
            }
        }
    }
    UndirectedView::new(2 * m, edges)
}

/// Hamiltonian cycle by backtracking, always trying the neighbor with the
/// fewest unvisited neighbors first.
pub fn hamiltonian_cycle(g: &UndirectedView, node_budget: u64) -> Result<Vec<usize>> {
    let n = g.n();
    if n < 3 {
        return Err(Error::InvalidParameter("hamiltonian cycle needs at least 3 vertices".into()));
    }
    let mut path = vec![0];
    let mut on = vec![false; n];
    on[0] = true;
    let mut nodes = 0u64;
    if extend(g, &mut path, &mut on, &mut nodes, node_budget) {
        Ok(path)
    } else if nodes >= node_budget {
        Err(Error::SearchBudget(format!("hamiltonian cycle search exceeded {node_budget} nodes")))
    } else {
        Err(Error::InvalidParameter("graph has no hamiltonian cycle".into()))
    }
}

fn extend(g: &UndirectedView, path: &mut Vec<usize>, on: &mut [bool], nodes: &mut u64, budget: u64) -> bool {
    *nodes += 1;
    if *nodes >= budget {
        return false;
    }
    let last = *path.last().unwrap();
    if path.len() == g.n() {
        return g.has_edge(last, path[0]);
    }
    let free = |v: usize, on: &[bool]| g.neighbors(v).iter().filter(|&&w| !on[w]).count();
    let mut next: Vec<usize> = g.neighbors(last).iter().copied().filter(|&w| !on[w]).collect();
    next.sort_by_key(|&w| (free(w, on), w));
    for w in next {
        on[w] = true;
        path.push(w);
        if extend(g, path, on, nodes, budget) {
            return true;
        }
        path.pop();
        on[w] = false;
    }
    false
}

/// Splits a regular bipartite graph (left side `0..m`) into perfect matchings.
fn matching_decomposition(m: usize, mut adj: Vec<Vec<usize>>) -> Result<Vec<Vec<(usize, usize)>>> {
    let mut out = Vec::new();
    while adj.iter().any(|a| !a.is_empty()) {
        let mut mate: Vec<Option<usize>> = vec![None; 2 * m];
        for u in 0..m {
            let mut seen = vec![false; 2 * m];
            if !augment(u, &adj, &mut mate, &mut seen) {
                return Err(Error::Inconsistent("remaining graph has no perfect matching".into()));
            }
        }
        let matching: Vec<(usize, usize)> = (m..2 * m).map(|l| (mate[l].unwrap(), l)).collect();
        for &(p, l) in &matching {
            adj[p].retain(|&x| x != l);
        }
        out.push(matching);
    }
    Ok(out)
}

fn augment(u: usize, adj: &[Vec<usize>], mate: &mut [Option<usize>], seen: &mut [bool]) -> bool {
    for &l in &adj[u] {
        if seen[l] {
            continue;
        }
        seen[l] = true;
        if mate[l].is_none_or(|p| augment(p, adj, mate, seen)) {
            mate[l] = Some(u);
            return true;
        }
    }
    false
}

/// Orients the incidence graph of PG(2, q): a Hamiltonian cycle cyclically,
/// then the remaining `q - 1` perfect matchings, the first `ceil((q-1)/2)`
/// from points to lines and the rest from lines to points.
pub fn projective_incidence_orientation(q: usize) -> Result<Digraph> {
    let g = projective_incidence_graph(q)?;
    let m = g.n() / 2;
    let cycle = hamiltonian_cycle(&g, 10_000_000)?;
    let mut arcs: Vec<(usize, usize)> = (0..cycle.len()).map(|i| (cycle[i], cycle[(i + 1) % cycle.len()])).collect();
    let on_cycle = |u: usize, v: usize| arcs.iter().any(|&(a, b)| (a, b) == (u, v) || (a, b) == (v, u));
    let mut rest = vec![Vec::new(); m];
    for &(p, l) in g.edges() {
        if !on_cycle(p, l) {
            rest[p].push(l);
        }
    }
    let matchings = matching_decomposition(m, rest)?;
    let forward = q / 2; // ceil((q - 1) / 2)
    for (i, mt) in matchings.iter().enumerate() {
        for &(p, l) in mt {
            arcs.push(if i < forward { (p, l) } else { (l, p) });
        }
    }
    let labels = (0..m).map(|i| format!("p{i}")).chain((0..m).map(|i| format!("L{i}")));
    Digraph::new(2 * m, arcs)?.with_labels(labels)
}

/// Four blocks `A1, A2, B1, B2`, each a copy of the points (A) or lines (B)
/// of PG(2, q). Incidences give arcs `A1 -> B1`, `B1 -> A2`, `A2 -> B2` and
/// `B2 -> A1`, so the blocks are the coresets and contract to a 4-cycle.
pub fn incidence_block_cycle(q: usize) -> Result<Digraph> {
    let g = projective_incidence_graph(q)?;
    let m = g.n() / 2;
    let a1 = 0;
    let b1 = m;
    let a2 = 2 * m;
    let b2 = 3 * m;
    let mut arcs = Vec::new();
    for &(p, l) in g.edges() {
        let l = l - m;
        arcs.push((a1 + p, b1 + l));
        arcs.push((b1 + l, a2 + p));
        arcs.push((a2 + p, b2 + l));
        arcs.push((b2 + l, a1 + p));
    }
    let labels = ["A1", "B1", "A2", "B2"].iter().flat_map(|b| (0..m).map(move |i| format!("{b}.{i}")));
    Digraph::new(4 * m, arcs)?.with_labels(labels)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn incidence_graphs_are_regular_with_girth_six() {
        for q in 2..=4 {
            let g = projective_incidence_graph(q).unwrap();
            let m = q * q + q + 1;
            assert_eq!(g.n(), 2 * m);
            assert!((0..g.n()).all(|v| g.degree(v) == q + 1));
            assert_eq!(g.girth(), Some(6));
        }
        assert!(projective_incidence_graph(5).is_err());
    }

    #[test]
    fn orientation_degrees() {
        for q in 2..=4 {
            let d = projective_incidence_orientation(q).unwrap();
            assert!(d.is_strongly_connected());
            assert_eq!(d.min_out_degree(), q.div_ceil(2));
            assert!((0..d.n()).all(|v| d.out_degree(v) + d.in_degree(v) == q + 1));
        }
    }

    #[test]
    fn block_cycle_shape() {
        let d = incidence_block_cycle(2).unwrap();
        assert_eq!(d.n(), 28);
        assert!((0..28).all(|v| d.out_degree(v) == 3 && d.in_degree(v) == 3));
        assert_eq!(d.underlying().girth(), Some(4));
    }
}

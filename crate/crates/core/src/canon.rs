//! Canonical labeling of small digraphs by individualization and colour
//! refinement, with pruning by the automorphisms discovered along the way.

use serde::Serialize;

use crate::digraph::Digraph;
use crate::error::{Error, Result};

pub const MAX_CANON_VERTICES: usize = 16;

/// Arc list of a digraph under its canonical labeling. Two digraphs have
/// equal forms iff they are isomorphic.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CanonicalForm {
    pub n: usize,
    pub arcs: Vec<(u8, u8)>,
}

/// Canonical form and the labeling `v -> position` that produces it.
pub fn canonical_labeling(d: &Digraph) -> Result<(CanonicalForm, Vec<usize>)> {
    if d.n() > MAX_CANON_VERTICES {
        return Err(Error::TooLarge { what: "canonical form vertices", size: d.n(), max: MAX_CANON_VERTICES });
    }
    let mut search = Search { d, first: None, first_prefix: Vec::new(), best: None, autos: Vec::new() };
    let mut colors = vec![0; d.n()];
    refine(d, &mut colors);
    search.descend(colors, &mut Vec::new());
    let (arcs, perm) = search.best.expect("at least one leaf");
    Ok((CanonicalForm { n: d.n(), arcs }, perm))
}

pub fn canonical_form(d: &Digraph) -> Result<CanonicalForm> {
    canonical_labeling(d).map(|(f, _)| f)
}

/// A vertex bijection `a -> b` that maps arcs onto arcs, if one exists.
pub fn isomorphism(a: &Digraph, b: &Digraph) -> Result<Option<Vec<usize>>> {
    if a.n() != b.n() || a.arc_count() != b.arc_count() {
        return Ok(None);
    }
    let (fa, pa) = canonical_labeling(a)?;
    let (fb, pb) = canonical_labeling(b)?;
    if fa != fb {
        return Ok(None);
    }
    let mut inv_b = vec![0; b.n()];
    for (v, &p) in pb.iter().enumerate() {
        inv_b[p] = v;
    }
    let map: Vec<usize> = pa.iter().map(|&p| inv_b[p]).collect();
    debug_assert!(a.arcs().iter().all(|&(u, v)| b.has_arc(map[u], map[v])));
    Ok(Some(map))
}

pub fn isomorphic(a: &Digraph, b: &Digraph) -> Result<bool> {
    Ok(isomorphism(a, b)?.is_some())
}

type Leaf = (Vec<(u8, u8)>, Vec<usize>);

struct Search<'a> {
    d: &'a Digraph,
    first: Option<Leaf>,
    first_prefix: Vec<usize>,
    best: Option<Leaf>,
    autos: Vec<Vec<usize>>,
}

impl Search<'_> {
    /// Returns `Some(depth)` when the subtree turned out to be an automorphic
    /// image of an explored one; the search resumes at that depth.
    fn descend(&mut self, colors: Vec<usize>, prefix: &mut Vec<usize>) -> Option<usize> {
        let n = colors.len();
        let cells = colors.iter().max().map_or(0, |&m| m + 1);
        if cells == n {
            return self.leaf(colors, prefix);
        }
        let depth = prefix.len();
        let mut size = vec![0usize; cells];
        for &c in &colors {
            size[c] += 1;
        }
        let target = (0..cells).find(|&c| size[c] > 1).expect("non-discrete colouring has a big cell");
        let members: Vec<usize> = (0..n).filter(|&v| colors[v] == target).collect();
        let mut explored: Vec<usize> = Vec::new();
        for &v in &members {
            if !explored.is_empty() && self.same_orbit(prefix, &explored, v) {
                continue;
            }
            let mut next = individualize(&colors, v);
            refine(self.d, &mut next);
            prefix.push(v);
            let abort = self.descend(next, prefix);
            prefix.pop();
            explored.push(v);
            if let Some(t) = abort {
                if t < depth {
                    return Some(t);
                }
            }
        }
        None
    }

    fn leaf(&mut self, perm: Vec<usize>, prefix: &[usize]) -> Option<usize> {
        let mut enc: Vec<(u8, u8)> = self.d.arcs().iter().map(|&(u, v)| (perm[u] as u8, perm[v] as u8)).collect();
        enc.sort_unstable();
        let mut abort = None;
        for (i, known) in [&self.first, &self.best].into_iter().enumerate() {
            let Some(known) = known else { continue };
            if known.0 == enc {
                if i == 0 {
                    abort = Some(prefix.iter().zip(&self.first_prefix).take_while(|(a, b)| a == b).count());
                }
                // known^-1 . perm is an automorphism
                let mut inv = vec![0; perm.len()];
                for (v, &p) in known.1.iter().enumerate() {
                    inv[p] = v;
                }
                let auto: Vec<usize> = perm.iter().map(|&p| inv[p]).collect();
                if auto.iter().enumerate().any(|(v, &w)| v != w) {
                    self.autos.push(auto);
                }
                break;
            }
        }
        if self.first.is_none() {
            self.first = Some((enc.clone(), perm.clone()));
            self.first_prefix = prefix.to_vec();
        }
        if self.best.as_ref().is_none_or(|b| enc < b.0) {
            self.best = Some((enc, perm));
        }
        abort
    }

    /// Whether `v` lies in the orbit of an already explored sibling under the
    /// known automorphisms that fix `prefix` pointwise.
    fn same_orbit(&self, prefix: &[usize], explored: &[usize], v: usize) -> bool {
        let n = self.d.n();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut any = false;
        for a in self.autos.iter().filter(|a| prefix.iter().all(|&x| a[x] == x)) {
            any = true;
            for (x, &y) in a.iter().enumerate() {
                let (rx, ry) = (find(&mut parent, x), find(&mut parent, y));
                if rx != ry {
                    parent[rx] = ry;
                }
            }
        }
        if !any {
            return false;
        }
        let rv = find(&mut parent, v);
        explored.iter().any(|&u| find(&mut parent, u) == rv)
    }
}

fn individualize(colors: &[usize], v: usize) -> Vec<usize> {
    let c = colors[v];
    colors.iter().enumerate().map(|(u, &x)| if x < c || u == v { x } else { x + 1 }).collect()
}

/// Refines `colors` to the coarsest equitable colouring below it. Colours stay
/// dense and ordered by `(old colour, out-colour multiset, in-colour multiset)`,
/// which keeps the procedure invariant under relabeling.
fn refine(d: &Digraph, colors: &mut [usize]) {
    let n = colors.len();
    let mut cells = colors.iter().max().map_or(0, |&m| m + 1);
    loop {
        let sigs: Vec<(usize, Vec<usize>, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut out: Vec<usize> = d.out_neighbors(v).iter().map(|&w| colors[w]).collect();
                let mut inn: Vec<usize> = d.in_neighbors(v).iter().map(|&w| colors[w]).collect();
                out.sort_unstable();
                inn.sort_unstable();
                (colors[v], out, inn)
            })
            .collect();
        let mut distinct = sigs.clone();
        distinct.sort();
        distinct.dedup();
        for (v, s) in sigs.iter().enumerate() {
            colors[v] = distinct.binary_search(s).expect("present");
        }
        if distinct.len() == cells {
            return;
        }
        cells = distinct.len();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Digraph {
        Digraph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn rotations_of_a_cycle_are_isomorphic() {
        let a = cycle(3);
        let b = Digraph::new(3, [(1, 0), (0, 2), (2, 1)]).unwrap();
        let map = isomorphism(&a, &b).unwrap().unwrap();
        assert!(a.arcs().iter().all(|&(u, v)| b.has_arc(map[u], map[v])));
    }

    #[test]
    fn cycle_is_not_a_path() {
        let path = Digraph::new(3, [(0, 1), (1, 2)]).unwrap();
        assert!(!isomorphic(&cycle(3), &path).unwrap());
        let other_path = Digraph::new(3, [(2, 0), (0, 1)]).unwrap();
        assert!(isomorphic(&path, &other_path).unwrap());
    }

    #[test]
    fn highly_symmetric_graphs_finish() {
        let empty = Digraph::new(16, []).unwrap();
        assert_eq!(canonical_form(&empty).unwrap().arcs.len(), 0);
        let complete = Digraph::new(16, (0..16).flat_map(|u| (0..16).filter(move |&v| v != u).map(move |v| (u, v)))).unwrap();
        assert_eq!(canonical_form(&complete).unwrap().arcs.len(), 240);
        let c16 = cycle(16);
        assert_eq!(canonical_form(&c16).unwrap(), canonical_form(&c16.permuted(&(0..16).rev().collect::<Vec<_>>())).unwrap());
    }

    #[test]
    fn too_large() {
        assert!(canonical_form(&cycle(17)).is_err());
    }
}

//! Exhaustive enumeration of the orientations of an undirected graph.

use std::ops::Range;

use crate::digraph::{Digraph, UndirectedView};
use crate::error::{Error, Result};

pub const MAX_ENUMERATION_EDGES: usize = 30;

/// Iterator over the `2^m` orientations of a graph with `m` edges.
///
/// Edges are taken in sorted order; bit `i` of the counter set means edge
/// `(u, v)` (`u < v`) is oriented `v -> u`. The counter runs upward, so the
/// order is fixed and a range of masks can be handed to each worker.
#[derive(Clone, Debug)]
pub struct Orientations<'g> {
    graph: &'g UndirectedView,
    masks: Range<u64>,
}

impl<'g> Orientations<'g> {
    pub fn new(graph: &'g UndirectedView) -> Result<Self> {
        let m = graph.edge_count();
        if m > MAX_ENUMERATION_EDGES {
            return Err(Error::TooLarge { what: "orientation enumeration edges", size: m, max: MAX_ENUMERATION_EDGES });
        }
        Ok(Orientations { graph, masks: 0..(1u64 << m) })
    }

    /// Restricts the enumeration to a sub-range of masks.
    pub fn range(graph: &'g UndirectedView, masks: Range<u64>) -> Result<Self> {
        let mut it = Self::new(graph)?;
        let end = masks.end.min(it.masks.end);
        it.masks = masks.start.min(end)..end;
        Ok(it)
    }

    pub fn total(&self) -> u64 {
        1u64 << self.graph.edge_count()
    }
}

impl Iterator for Orientations<'_> {
    type Item = Digraph;

    fn next(&mut self) -> Option<Digraph> {
        let mask = self.masks.next()?;
        Some(orientation(self.graph, mask))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        self.masks.size_hint()
    }
}

/// The orientation encoded by `mask`.
pub fn orientation(graph: &UndirectedView, mask: u64) -> Digraph {
    let arcs = graph
        .edges()
        .iter()
        .enumerate()
        .map(|(i, &(u, v))| if mask >> i & 1 == 1 { (v, u) } else { (u, v) });
    Digraph::new(graph.n(), arcs).expect("orientation of a valid graph")
}

/// All orientations accepted by `keep`, in mask order.
pub fn enumerate_orientations<'g, F>(graph: &'g UndirectedView, keep: F) -> Result<impl Iterator<Item = Digraph> + 'g>
where
    F: FnMut(&Digraph) -> bool + 'g,
{
    Ok(Orientations::new(graph)?.filter(keep))
}

pub const MAX_OGRAPH_VERTICES: usize = 7;

/// Every labeled oriented graph on `n` vertices: each pair is absent,
/// `u -> v` or `v -> u`, in base-3 counter order.
pub fn labeled_ographs(n: usize) -> Result<impl Iterator<Item = Digraph>> {
    if n == 0 {
        return Err(Error::Empty);
    }
    if n > MAX_OGRAPH_VERTICES {
        return Err(Error::TooLarge { what: "ograph enumeration vertices", size: n, max: MAX_OGRAPH_VERTICES });
    }
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let total = 3u64.pow(pairs.len() as u32);
    Ok((0..total).map(move |mut code| {
        let mut arcs = Vec::new();
        for &(u, v) in &pairs {
            match code % 3 {
                1 => arcs.push((u, v)),
                2 => arcs.push((v, u)),
                _ => {}
            }
            code /= 3;
        }
        Digraph::new(n, arcs).expect("valid pairs")
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ograph_counts() {
        assert_eq!(labeled_ographs(4).unwrap().count(), 729);
        assert!(labeled_ographs(4).unwrap().all(|d| d.is_oriented()));
        assert_eq!(labeled_ographs(3).unwrap().filter(Digraph::is_strongly_connected).count(), 2);
        assert!(labeled_ographs(8).is_err());
    }

    fn brute_force_strong(d: &Digraph) -> bool {
        (0..d.n()).all(|u| (0..d.n()).all(|v| d.directed_distance(u, v).is_some()))
    }

    #[test]
    fn triangle_has_two_strong_orientations() {
        let k3 = UndirectedView::new(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(Orientations::new(&k3).unwrap().count(), 8);
        let strong: Vec<_> = enumerate_orientations(&k3, Digraph::is_strongly_connected).unwrap().collect();
        assert_eq!(strong.len(), 2);
        assert!(strong.iter().all(brute_force_strong));
    }

    #[test]
    fn single_edge_and_four_cycle() {
        let e = UndirectedView::new(2, [(0, 1)]).unwrap();
        assert_eq!(Orientations::new(&e).unwrap().count(), 2);
        assert_eq!(enumerate_orientations(&e, Digraph::is_strongly_connected).unwrap().count(), 0);
        let c4 = UndirectedView::new(4, (0..4).map(|i| (i, (i + 1) % 4))).unwrap();
        let strong = enumerate_orientations(&c4, Digraph::is_strongly_connected).unwrap().count();
        let brute = Orientations::new(&c4).unwrap().filter(brute_force_strong).count();
        assert_eq!((strong, brute), (2, 2));
    }

    #[test]
    fn ranges_partition_the_masks() {
        let c4 = UndirectedView::new(4, (0..4).map(|i| (i, (i + 1) % 4))).unwrap();
        let all: Vec<_> = Orientations::new(&c4).unwrap().collect();
        let mut parts: Vec<_> = Orientations::range(&c4, 0..5).unwrap().collect();
        parts.extend(Orientations::range(&c4, 5..100).unwrap());
        assert_eq!(all, parts);
    }

    #[test]
    fn too_many_edges() {
        let k9 = UndirectedView::new(9, (0..9).flat_map(|u| (u + 1..9).map(move |v| (u, v)))).unwrap();
        assert!(matches!(Orientations::new(&k9), Err(Error::TooLarge { size: 36, .. })));
    }
}

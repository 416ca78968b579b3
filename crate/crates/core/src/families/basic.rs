use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::digraph::{Digraph, UndirectedView};
use crate::error::{Error, Result};

fn need(ok: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidParameter(msg()))
    }
}

/// `0 -> 1 -> .. -> n-1 -> 0`.
pub fn directed_cycle(n: usize) -> Result<Digraph> {
    need(n >= 3, || format!("directed cycle needs n >= 3, got {n}"))?;
    Digraph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// `0 -> 1 -> .. -> n-1`.
pub fn directed_path(n: usize) -> Result<Digraph> {
    need(n >= 1, || "directed path needs n >= 1".into())?;
    Digraph::new(n, (1..n).map(|i| (i - 1, i)))
}

/// Center 0 with arcs to the leaves `1..n`.
pub fn out_star(n: usize) -> Result<Digraph> {
    need(n >= 1, || "star needs n >= 1".into())?;
    Digraph::new(n, (1..n).map(|i| (0, i)))
}

/// Center 0 with arcs from the leaves `1..n`.
pub fn in_star(n: usize) -> Result<Digraph> {
    need(n >= 1, || "star needs n >= 1".into())?;
    Digraph::new(n, (1..n).map(|i| (i, 0)))
}

/// `i -> j` for all `i < j`.
pub fn transitive_tournament(n: usize) -> Result<Digraph> {
    need(n >= 1, || "tournament needs n >= 1".into())?;
    Digraph::new(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))))
}

/// Each pair oriented by a fair coin.
pub fn random_tournament(n: usize, seed: u64) -> Result<Digraph> {
    need(n >= 1, || "tournament needs n >= 1".into())?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut arcs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            arcs.push(if rng.gen_bool(0.5) { (i, j) } else { (j, i) });
        }
    }
    Digraph::new(n, arcs)
}

/// Outer 5-cycle `0..5`, spokes `i - i+5`, inner pentagram.
pub fn petersen() -> UndirectedView {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    UndirectedView::new(10, edges).expect("valid edges")
}

/// Undirected cycle on `n >= 3` vertices.
pub fn cycle_graph(n: usize) -> Result<UndirectedView> {
    need(n >= 3, || format!("cycle needs n >= 3, got {n}"))?;
    UndirectedView::new(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// Undirected path on `n >= 1` vertices.
pub fn path_graph(n: usize) -> Result<UndirectedView> {
    need(n >= 1, || "path needs n >= 1".into())?;
    UndirectedView::new(n, (1..n).map(|i| (i - 1, i)))
}

/// Random connected graph: a random spanning tree plus each other pair with
/// probability `p`.
pub fn random_connected_graph(n: usize, p: f64, seed: u64) -> Result<UndirectedView> {
    need(n >= 1, || "graph needs n >= 1".into())?;
    need((0.0..=1.0).contains(&p), || format!("edge probability {p} outside [0, 1]"))?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for v in 1..n {
        edges.push((rng.gen_range(0..v), v));
    }
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    UndirectedView::new(n, edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_and_star_shapes() {
        let c = directed_cycle(4).unwrap();
        assert_eq!(c.arc_count(), 4);
        assert!(c.is_strongly_connected());
        let s = out_star(5).unwrap();
        assert_eq!(s.sources(), vec![0]);
        assert_eq!(s.sinks().len(), 4);
        assert!(directed_cycle(2).is_err());
    }

    #[test]
    fn petersen_is_cubic() {
        let p = petersen();
        assert_eq!((p.n(), p.edge_count()), (10, 15));
        assert!((0..10).all(|v| p.degree(v) == 3));
        assert_eq!(p.girth(), Some(5));
    }

    #[test]
    fn random_tournaments_are_seeded() {
        let a = random_tournament(7, 3).unwrap();
        assert_eq!(a, random_tournament(7, 3).unwrap());
        assert_eq!(a.arc_count(), 21);
        assert!(random_connected_graph(12, 0.2, 9).unwrap().is_connected());
    }
}

//! Random strongly connected outerplanar ographs and an outerplanarity test.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::digraph::{Digraph, UndirectedView};
use crate::error::{Error, Result};

const MAX_PIECE: usize = 6;
const MAX_CHECK_BLOCK: usize = 24;

/// Glues directed cycles with random non-crossing chords, either at a
/// shared vertex or along a shared outer arc, until there are `n` vertices.
pub fn random_outerplanar_strong(n: usize, seed: u64) -> Result<Digraph> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("outerplanar generator needs n >= 3, got {n}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let d = attempt(n, &mut rng)?;
        if d.is_strongly_connected() {
            return Ok(d);
        }
    }
}

fn attempt(n: usize, rng: &mut ChaCha8Rng) -> Result<Digraph> {
    let mut arcs = Vec::new();
    let mut outer: Vec<(usize, usize)> = Vec::new();
    let m = rng.gen_range(3..=n.min(MAX_PIECE));
    let first: Vec<usize> = (0..m).collect();
    add_piece(&first, None, &mut arcs, &mut outer, rng);
    let mut size = m;
    while size < n {
        let rem = n - size;
        let along_arc = rem == 1 || rng.gen_bool(0.5);
        if along_arc {
            let m = rng.gen_range(3..=(rem + 2).min(MAX_PIECE));
            let (u, v) = outer.swap_remove(rng.gen_range(0..outer.len()));
            let mut cycle = vec![u, v];
            cycle.extend(size..size + m - 2);
            add_piece(&cycle, Some((u, v)), &mut arcs, &mut outer, rng);
            size += m - 2;
        } else {
            let m = rng.gen_range(3..=(rem + 1).min(MAX_PIECE));
            let x = rng.gen_range(0..size);
            let mut cycle = vec![x];
            cycle.extend(size..size + m - 1);
            add_piece(&cycle, None, &mut arcs, &mut outer, rng);
            size += m - 1;
        }
    }
    Digraph::new(n, arcs)
}

/// Adds the directed cycle through `cycle` (minus an already present arc)
/// and random chords.
fn add_piece(
    cycle: &[usize],
    existing: Option<(usize, usize)>,
    arcs: &mut Vec<(usize, usize)>,
    outer: &mut Vec<(usize, usize)>,
    rng: &mut ChaCha8Rng,
) {
    let m = cycle.len();
    for i in 0..m {
        let a = (cycle[i], cycle[(i + 1) % m]);
        if Some(a) != existing {
            arcs.push(a);
            outer.push(a);
        }
    }
    let mut candidates: Vec<(usize, usize)> =
        (0..m).flat_map(|i| (i + 2..m).map(move |j| (i, j))).filter(|&(i, j)| !(i == 0 && j == m - 1)).collect();
    candidates.shuffle(rng);
    let mut chords: Vec<(usize, usize)> = Vec::new();
    for (i, j) in candidates {
        if rng.gen_bool(0.5) && chords.iter().all(|&(a, b)| !crosses((a, b), (i, j))) {
            chords.push((i, j));
            arcs.push(if rng.gen_bool(0.5) { (cycle[i], cycle[j]) } else { (cycle[j], cycle[i]) });
        }
    }
}

/// Whether chords (positions `a < b` and `c < d`) on a polygon cross.
fn crosses((a, b): (usize, usize), (c, d): (usize, usize)) -> bool {
    (a < c && c < b && b < d) || (c < a && a < d && d < b)
}

/// Biconnected components as edge lists.
pub fn blocks(g: &UndirectedView) -> Vec<Vec<(usize, usize)>> {
    struct St<'a> {
        g: &'a UndirectedView,
        disc: Vec<usize>,
        low: Vec<usize>,
        time: usize,
        stack: Vec<(usize, usize)>,
        out: Vec<Vec<(usize, usize)>>,
    }
    fn dfs(s: &mut St, v: usize, parent: Option<usize>) {
        s.time += 1;
        s.disc[v] = s.time;
        s.low[v] = s.time;
        for &w in s.g.neighbors(v) {
            if Some(w) == parent {
                continue;
            }
            if s.disc[w] == 0 {
                s.stack.push((v, w));
                dfs(s, w, Some(v));
                s.low[v] = s.low[v].min(s.low[w]);
                if s.low[w] >= s.disc[v] {
                    let mut block = Vec::new();
                    while let Some(e) = s.stack.pop() {
                        block.push(e);
                        if e == (v, w) {
                            break;
                        }
                    }
                    s.out.push(block);
                }
            } else if s.disc[w] < s.disc[v] {
                s.stack.push((v, w));
                s.low[v] = s.low[v].min(s.disc[w]);
            }
        }
    }
    let n = g.n();
    let mut s = St { g, disc: vec![0; n], low: vec![0; n], time: 0, stack: Vec::new(), out: Vec::new() };
    for v in 0..n {
        if s.disc[v] == 0 {
            dfs(&mut s, v, None);
        }
    }
    s.out
}

/// Exact outerplanarity test: every block must have a Hamiltonian cycle
/// whose chords pairwise do not cross.
pub fn is_outerplanar(g: &UndirectedView) -> Result<bool> {
    if g.n() >= 2 && g.edge_count() > 2 * g.n() - 3 {
        return Ok(false);
    }
    for block in blocks(g) {
        let mut verts: Vec<usize> = block.iter().flat_map(|&(u, v)| [u, v]).collect();
        verts.sort_unstable();
        verts.dedup();
        if verts.len() < 3 {
            continue;
        }
        if verts.len() > MAX_CHECK_BLOCK {
            return Err(Error::TooLarge { what: "outerplanarity block", size: verts.len(), max: MAX_CHECK_BLOCK });
        }
        let sub = g.induced(&verts);
        if !has_outer_cycle(&sub) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn has_outer_cycle(g: &UndirectedView) -> bool {
    fn go(g: &UndirectedView, path: &mut Vec<usize>, on: &mut [bool]) -> bool {
        let last = *path.last().unwrap();
        if path.len() == g.n() {
            if !g.has_edge(last, path[0]) {
                return false;
            }
            let mut pos = vec![0; g.n()];
            for (i, &v) in path.iter().enumerate() {
                pos[v] = i;
            }
            let n = g.n();
            let chords: Vec<(usize, usize)> = g
                .edges()
                .iter()
                .map(|&(u, v)| (pos[u].min(pos[v]), pos[u].max(pos[v])))
                .filter(|&(a, b)| b - a != 1 && !(a == 0 && b == n - 1))
                .collect();
            return chords.iter().enumerate().all(|(i, &x)| chords[i + 1..].iter().all(|&y| !crosses(x, y)));
        }
        for &w in g.neighbors(last) {
            if on[w] {
                continue;
            }
            on[w] = true;
            path.push(w);
            if go(g, path, on) {
                return true;
            }
            path.pop();
            on[w] = false;
        }
        false
    }
    let mut on = vec![false; g.n()];
    on[0] = true;
    go(g, &mut vec![0], &mut on)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn three_vertices_give_a_triangle() {
        for seed in 0..5 {
            let d = random_outerplanar_strong(3, seed).unwrap();
            assert_eq!(d.arc_count(), 3);
            assert!(d.is_strongly_connected());
        }
    }

    #[test]
    fn samples_are_strong_outerplanar_ographs() {
        for seed in 0..30 {
            let n = 3 + (seed as usize % 10);
            let d = random_outerplanar_strong(n, seed).unwrap();
            assert_eq!(d.n(), n);
            assert!(d.is_oriented() && d.is_strongly_connected());
            assert!(is_outerplanar(&d.underlying()).unwrap(), "seed {seed}");
        }
    }

    #[test]
    fn k4_and_k23_are_not_outerplanar() {
        let k4 = UndirectedView::new(4, (0..4).flat_map(|u| (u + 1..4).map(move |v| (u, v)))).unwrap();
        assert!(!is_outerplanar(&k4).unwrap());
        let k23 = UndirectedView::new(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap();
        assert!(!is_outerplanar(&k23).unwrap());
        let c6 = UndirectedView::new(6, (0..6).map(|i| (i, (i + 1) % 6))).unwrap();
        assert!(is_outerplanar(&c6).unwrap());
        let two_triangles = UndirectedView::new(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]).unwrap();
        assert!(is_outerplanar(&two_triangles).unwrap());
    }
}

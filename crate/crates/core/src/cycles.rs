//! Enumeration of simple directed cycles.

use serde::Serialize;

use crate::digraph::Digraph;

pub const DEFAULT_CYCLE_CAP: usize = 100_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CycleList {
    /// Each cycle starts at its smallest vertex and follows the arcs.
    pub cycles: Vec<Vec<usize>>,
    /// Set when the cap stopped the enumeration early.
    pub truncated: bool,
}

/// Lists every simple directed cycle of length at most `max_len` once, up to
/// rotation, stopping after `cap` cycles.
///
/// Backtracking from each start vertex `s` over vertices `> s` that can still
/// reach `s`, so every cycle is found exactly from its minimum vertex.
pub fn simple_directed_cycles(d: &Digraph, max_len: usize, cap: usize) -> CycleList {
    let n = d.n();
    let mut out = CycleList { cycles: Vec::new(), truncated: false };
    let mut can_return = vec![false; n];
    let mut on_path = vec![false; n];
    for s in 0..n {
        can_return.iter_mut().for_each(|x| *x = false);
        can_return[s] = true;
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            for &u in d.in_neighbors(v) {
                if u > s && !can_return[u] {
                    can_return[u] = true;
                    stack.push(u);
                }
            }
        }
        let mut path = vec![s];
        on_path[s] = true;
        if !extend(d, s, max_len, cap, &can_return, &mut on_path, &mut path, &mut out) {
            return out;
        }
        on_path[s] = false;
    }
    out
}

#[allow(clippy::too_many_arguments)]
fn extend(
    d: &Digraph,
    s: usize,
    max_len: usize,
    cap: usize,
    can_return: &[bool],
    on_path: &mut [bool],
    path: &mut Vec<usize>,
    out: &mut CycleList,
) -> bool {
    let v = *path.last().unwrap();
    for &w in d.out_neighbors(v) {
        if w == s {
            if out.cycles.len() >= cap {
                out.truncated = true;
                return false;
            }
            out.cycles.push(path.clone());
        } else if w > s && can_return[w] && !on_path[w] && path.len() < max_len {
            on_path[w] = true;
            path.push(w);
            let go_on = extend(d, s, max_len, cap, can_return, on_path, path, out);
            path.pop();
            on_path[w] = false;
            if !go_on {
                return false;
            }
        }
    }
    true
}

/// Checks that `cycle` is a simple directed cycle of `d` (length at least 2).
pub fn is_directed_cycle(d: &Digraph, cycle: &[usize]) -> bool {
    if cycle.len() < 2 || cycle.iter().any(|&v| v >= d.n()) {
        return false;
    }
    let mut seen = vec![false; d.n()];
    for &v in cycle {
        if std::mem::replace(&mut seen[v], true) {
            return false;
        }
    }
    (0..cycle.len()).all(|i| d.has_arc(cycle[i], cycle[(i + 1) % cycle.len()]))
}

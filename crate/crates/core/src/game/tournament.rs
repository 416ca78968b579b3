use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::digraph::Digraph;
use crate::error::{Error, Result};

/// Checks that every pair of distinct vertices carries exactly one arc.
pub fn check_tournament(t: &Digraph) -> Result<()> {
    let n = t.n();
    for u in 0..n {
        for v in u + 1..n {
            if t.has_arc(u, v) == t.has_arc(v, u) {
                return Err(Error::NotATournament(format!("pair ({u},{v})")));
            }
        }
    }
    Ok(())
}

/// A vertex the robber at `r` can reach in one step (or by staying) that no
/// cop can reach in one step or occupies. Returns the smallest one.
pub fn safe_vertex_check(t: &Digraph, r: usize, cops: &[usize]) -> Result<Option<usize>> {
    check_tournament(t)?;
    let n = t.n();
    if let Some(&v) = cops.iter().chain([&r]).find(|&&v| v >= n) {
        return Err(Error::VertexOutOfRange { index: 0, vertex: v, n });
    }
    let mut candidates: Vec<usize> = t.out_neighbors(r).to_vec();
    candidates.push(r);
    candidates.sort_unstable();
    Ok(candidates.into_iter().find(|&s| cops.iter().all(|&c| c != s && !t.has_arc(c, s))))
}

#[derive(Clone, Debug, Serialize)]
pub struct SafeVertexEstimate {
    pub samples: usize,
    /// Samples where the robber had no safe vertex.
    pub failures: usize,
    pub failure_fraction: f64,
}

/// Samples robber positions and `k`-cop placements uniformly and reports how
/// often no safe vertex exists.
pub fn estimate_failure_fraction(t: &Digraph, k: usize, samples: usize, seed: u64) -> Result<SafeVertexEstimate> {
    check_tournament(t)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = t.n();
    let mut failures = 0;
    for _ in 0..samples {
        let r = rng.gen_range(0..n);
        let cops: Vec<usize> = (0..k).map(|_| rng.gen_range(0..n)).collect();
        if safe_vertex_check(t, r, &cops)?.is_none() {
            failures += 1;
        }
    }
    let failure_fraction = if samples == 0 { 0.0 } else { failures as f64 / samples as f64 };
    Ok(SafeVertexEstimate { samples, failures, failure_fraction })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn three_cycle_has_a_safe_vertex() {
        let c3 = Digraph::new(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        // cop at 1 covers 1 and 2; robber stays on 0
        assert_eq!(safe_vertex_check(&c3, 0, &[1]).unwrap(), Some(0));
    }

    #[test]
    fn dominating_cop_leaves_nothing() {
        let tt = Digraph::new(4, (0..4).flat_map(|u| (u + 1..4).map(move |v| (u, v)))).unwrap();
        assert_eq!(safe_vertex_check(&tt, 3, &[0]).unwrap(), None);
        let e = estimate_failure_fraction(&tt, 1, 100, 1).unwrap();
        assert!(e.failures > 0);
    }

    #[test]
    fn rejects_non_tournaments() {
        let p = Digraph::new(3, [(0, 1), (1, 2)]).unwrap();
        assert!(matches!(safe_vertex_check(&p, 0, &[1]), Err(Error::NotATournament(_))));
    }
}

//! Brute-force minimax reference for small games.
//!
//! Works on ordered cop tuples and generates moves straight from the rules,
//! sharing nothing with the retrograde solver beyond spec validation. Results
//! are cached per (state, remaining depth) so that the depth bound needed for
//! exactness stays affordable.

use super::solver::Outcome;
use super::spec::{GameSpec, Variant};
use crate::digraph::Digraph;
use crate::error::{Error, Result};

pub const ORACLE_MAX_VERTICES: usize = 6;
pub const ORACLE_MAX_COPS: usize = 2;

/// Capture time by exhaustive minimax with the default depth bound.
pub fn oracle_value(d: &Digraph, spec: &GameSpec) -> Result<Outcome> {
    let states = d.n().pow(spec.cops as u32) * d.n();
    oracle_value_with_depth(d, spec, states + 1)
}

/// Capture time when the cops must win within `depth` rounds after
/// placement; anything longer counts as a robber win.
pub fn oracle_value_with_depth(d: &Digraph, spec: &GameSpec, depth: usize) -> Result<Outcome> {
    if d.n() > ORACLE_MAX_VERTICES {
        return Err(Error::TooLarge { what: "oracle vertices", size: d.n(), max: ORACLE_MAX_VERTICES });
    }
    if spec.cops > ORACLE_MAX_COPS {
        return Err(Error::TooLarge { what: "oracle cops", size: spec.cops, max: ORACLE_MAX_COPS });
    }
    run(d, spec, depth)
}

/// Same minimax with the vertex limit replaced by a cap on ordered
/// states `n^k * n`, for larger one- or two-cop games.
pub fn oracle_value_capped(d: &Digraph, spec: &GameSpec, max_states: usize) -> Result<Outcome> {
    if spec.cops > ORACLE_MAX_COPS {
        return Err(Error::TooLarge { what: "oracle cops", size: spec.cops, max: ORACLE_MAX_COPS });
    }
    let states = d.n().pow(spec.cops as u32) * d.n();
    if states > max_states {
        return Err(Error::TooLarge { what: "oracle states", size: states, max: max_states });
    }
    run(d, spec, states + 1)
}

fn run(d: &Digraph, spec: &GameSpec, depth: usize) -> Result<Outcome> {
    spec.validate(d)?;
    let mut o = Oracle::new(d, spec, depth);
    let n = d.n();
    let k = spec.cops;
    let mut best: Option<u32> = None;
    let mut found = false;
    for code in 0..n.pow(k as u32) {
        let cops = decode(code, n, k);
        let mut worst = Some(0u32);
        for r in o.robber_spots.clone() {
            let v = if cops.contains(&r) { Some(0) } else { o.cop_turn(&cops, r, depth) };
            worst = match (worst, v) {
                (Some(a), Some(b)) => Some(a.max(b)),
                _ => None,
            };
            if worst.is_none() {
                break;
            }
        }
        if let Some(w) = worst {
            best = Some(best.map_or(w, |b: u32| b.min(w)));
            found = true;
        }
    }
    Ok(if found { Outcome::Capture(best.unwrap()) } else { Outcome::RobberWin })
}

fn decode(mut code: usize, n: usize, k: usize) -> Vec<usize> {
    let mut v = vec![0; k];
    for x in v.iter_mut() {
        *x = code % n;
        code /= n;
    }
    v
}

fn encode(cops: &[usize], n: usize) -> usize {
    cops.iter().rev().fold(0, |acc, &c| acc * n + c)
}

struct Oracle<'a> {
    d: &'a Digraph,
    spec: &'a GameSpec,
    robber_spots: Vec<usize>,
    depth: usize,
    /// 0 = unknown, 1 = robber survives, t + 2 = capture in t rounds.
    memo: Vec<u32>,
}

impl<'a> Oracle<'a> {
    fn new(d: &'a Digraph, spec: &'a GameSpec, depth: usize) -> Self {
        let robber_spots = match &spec.confinement {
            Some(c) => c.allowed.clone(),
            None => (0..d.n()).collect(),
        };
        let states = d.n().pow(spec.cops as u32) * d.n();
        Oracle { d, spec, robber_spots, depth, memo: vec![0; states * (depth + 1)] }
    }

    fn stays(&self) -> bool {
        self.spec.variant == Variant::Standard
    }

    fn cop_options(&self, v: usize) -> Vec<usize> {
        let mut m: Vec<usize> = self.d.out_neighbors(v).to_vec();
        if self.stays() {
            m.push(v);
        }
        m
    }

    fn robber_options(&self, r: usize) -> Vec<usize> {
        let mut m = Vec::new();
        match &self.spec.confinement {
            None => m.extend_from_slice(self.d.out_neighbors(r)),
            Some(c) => match &c.forward_cycle {
                Some(cycle) => {
                    let i = cycle.iter().position(|&x| x == r).expect("robber on its cycle");
                    m.push(cycle[(i + 1) % cycle.len()]);
                }
                None => m.extend(self.d.out_neighbors(r).iter().filter(|w| c.allowed.contains(w))),
            },
        }
        if self.stays() {
            m.push(r);
        }
        m
    }

    fn joint_cop_moves(&self, cops: &[usize]) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new()];
        for &c in cops {
            let opts = self.cop_options(c);
            out = out
                .into_iter()
                .flat_map(|prefix| {
                    opts.iter().map(move |&o| {
                        let mut p = prefix.clone();
                        p.push(o);
                        p
                    })
                })
                .collect();
        }
        out
    }

    /// Rounds the cops need from (cops, robber) with cops to move, if at most `left`.
    fn cop_turn(&mut self, cops: &[usize], robber: usize, left: usize) -> Option<u32> {
        if left == 0 {
            return None;
        }
        let key = (encode(cops, self.d.n()) * self.d.n() + robber) * (self.depth + 1) + left;
        match self.memo[key] {
            0 => {}
            1 => return None,
            t => return Some(t - 2),
        }
        let mut best: Option<u32> = None;
        for next in self.joint_cop_moves(cops) {
            let v = if next.contains(&robber) { Some(1) } else { self.robber_turn(&next, robber, left).map(|t| t + 1) };
            if let Some(t) = v {
                best = Some(best.map_or(t, |b| b.min(t)));
            }
        }
        self.memo[key] = best.map_or(1, |t| t + 2);
        best
    }

    /// Robber to move inside a round with `left` rounds available in total.
    fn robber_turn(&mut self, cops: &[usize], robber: usize, left: usize) -> Option<u32> {
        let mut worst = 0;
        for r in self.robber_options(robber) {
            if cops.contains(&r) {
                continue;
            }
            worst = worst.max(self.cop_turn(cops, r, left - 1)?);
        }
        Some(worst)
    }
}

//! Retrograde solver for the k-cop game.
//!
//! Rounds: cops are placed, then the robber is placed (round 0). Each later
//! round is a cop move followed by a robber move. The value of a state is the
//! number of further rounds the cops need against best resistance; a capture
//! during either half of a round ends the game in that round.
//!
//! Values are computed by a backward fixed point over all states. States
//! never labeled are robber wins.

use std::collections::VecDeque;

use serde::Serialize;

use super::configs::{multiset_count, CopConfigs};
use super::spec::{cop_moves, inverse_moves, robber_moves, GameSpec, Variant};
use crate::digraph::Digraph;
use crate::error::{Error, Result};

pub const DEFAULT_STATE_BUDGET: u64 = 50_000_000;

const UNRESOLVED: u32 = u32::MAX;
const ROBBER_TURN_BIT: u32 = 1 << 31;

/// Rounds to capture under optimal play, or a robber win.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    Capture(u32),
    RobberWin,
}

impl Outcome {
    fn from_raw(v: u32) -> Self {
        if v == UNRESOLVED {
            Outcome::RobberWin
        } else {
            Outcome::Capture(v)
        }
    }

    pub fn rounds(self) -> Option<u32> {
        match self {
            Outcome::Capture(t) => Some(t),
            Outcome::RobberWin => None,
        }
    }

    pub fn is_capture(self) -> bool {
        matches!(self, Outcome::Capture(_))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    Cops,
    Robber,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Winner {
    Cops,
    Robber,
}

/// A position: sorted cop tuple, robber vertex and the side to move.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct GameState {
    pub cops: Vec<usize>,
    pub robber: usize,
    pub to_move: Side,
}

impl GameState {
    pub fn new(mut cops: Vec<usize>, robber: usize, to_move: Side) -> Self {
        cops.sort_unstable();
        GameState { cops, robber, to_move }
    }

    pub fn is_capture(&self) -> bool {
        self.cops.contains(&self.robber)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SolveSummary {
    pub winner: Winner,
    pub cops: usize,
    pub capture_time: Option<u32>,
    /// Cop placements achieving the capture time (all placements when the
    /// robber wins).
    pub initial_placements: Vec<Vec<usize>>,
    /// For each listed placement, the robber placements that hold out longest.
    pub robber_responses: Vec<Vec<usize>>,
}

/// Solved values for every state of one game.
#[derive(Clone, Debug)]
pub struct GameTable {
    digraph: Digraph,
    spec: GameSpec,
    configs: CopConfigs,
    cop_single: Vec<Vec<usize>>,
    robber_next: Vec<Vec<usize>>,
    robber_allowed: Vec<bool>,
    /// Indexed `config * n + robber`, cops to move.
    cop_turn: Vec<u32>,
    /// Indexed `config * n + robber`, robber to move.
    robber_turn: Vec<u32>,
}

pub fn solve_game(d: &Digraph, spec: &GameSpec) -> Result<GameTable> {
    solve_game_with_budget(d, spec, DEFAULT_STATE_BUDGET)
}

pub fn solve_game_with_budget(d: &Digraph, spec: &GameSpec, budget: u64) -> Result<GameTable> {
    spec.validate(d)?;
    let n = d.n();
    let k = spec.cops;
    let states = multiset_count(n, k).saturating_mul(n as u128).saturating_mul(2);
    if states > budget as u128 || states >= (ROBBER_TURN_BIT as u128) {
        return Err(Error::StateBudget { states, budget });
    }
    let configs = CopConfigs::new(n, k);
    let cop_single = cop_moves(d, spec.variant);
    let cop_back = inverse_moves(&cop_single);
    let robber_next = robber_moves(d, spec);
    let robber_back = inverse_moves(&robber_next);
    let mut robber_allowed = vec![false; n];
    for v in spec.robber_vertices(d) {
        robber_allowed[v] = true;
    }

    let total = configs.len() * n;
    let mut cop_turn = vec![UNRESOLVED; total];
    let mut robber_turn = vec![UNRESOLVED; total];
    let mut pending = vec![0u32; total];
    let mut queue: VecDeque<u32> = VecDeque::new();
    let mut tuple = vec![0usize; k];

    for ci in 0..configs.len() {
        configs.unrank(ci, &mut tuple);
        for r in 0..n {
            let s = ci * n + r;
            if tuple.contains(&r) {
                cop_turn[s] = 0;
                robber_turn[s] = 0;
                queue.push_back(s as u32 | ROBBER_TURN_BIT);
            } else if robber_allowed[r] {
                let free = robber_next[r].iter().filter(|w| !tuple.contains(w)).count();
                pending[s] = free as u32;
                if free == 0 {
                    // every robber option walks into a cop
                    robber_turn[s] = 0;
                    queue.push_back(s as u32 | ROBBER_TURN_BIT);
                }
            }
        }
    }

    let mut preds: Vec<usize> = Vec::new();
    let mut scratch = vec![0usize; k];
    while let Some(item) = queue.pop_front() {
        let s = (item & !ROBBER_TURN_BIT) as usize;
        let (ci, r) = (s / n, s % n);
        if item & ROBBER_TURN_BIT != 0 {
            // robber-turn state resolved: cops who can move into it get value + 1
            let t = robber_turn[s] + 1;
            configs.unrank(ci, &mut tuple);
            predecessor_configs(&configs, &cop_back, &tuple, &mut scratch, &mut preds);
            for &pi in &preds {
                let ps = pi * n + r;
                if cop_turn[ps] == UNRESOLVED {
                    cop_turn[ps] = t;
                    queue.push_back(ps as u32);
                }
            }
        } else {
            let t = cop_turn[s];
            for &rp in &robber_back[r] {
                let qs = ci * n + rp;
                if robber_turn[qs] != UNRESOLVED || !robber_allowed[rp] {
                    continue;
                }
                pending[qs] -= 1;
                if pending[qs] == 0 {
                    robber_turn[qs] = t;
                    queue.push_back(qs as u32 | ROBBER_TURN_BIT);
                }
            }
        }
    }

    Ok(GameTable {
        digraph: d.clone(),
        spec: spec.clone(),
        configs,
        cop_single,
        robber_next,
        robber_allowed,
        cop_turn,
        robber_turn,
    })
}

/// All sorted tuples from which one joint cop move reaches `target`.
fn predecessor_configs(
    configs: &CopConfigs,
    back: &[Vec<usize>],
    target: &[usize],
    scratch: &mut [usize],
    out: &mut Vec<usize>,
) {
    out.clear();
    let k = target.len();
    let mut idx = vec![0usize; k];
    if target.iter().any(|&w| back[w].is_empty()) {
        return;
    }
    loop {
        for i in 0..k {
            scratch[i] = back[target[i]][idx[i]];
        }
        scratch.sort_unstable();
        out.push(configs.rank(scratch));
        let mut i = 0;
        loop {
            if i == k {
                out.sort_unstable();
                out.dedup();
                return;
            }
            idx[i] += 1;
            if idx[i] < back[target[i]].len() {
                break;
            }
            idx[i] = 0;
            i += 1;
        }
    }
}

impl GameTable {
    pub fn digraph(&self) -> &Digraph {
        &self.digraph
    }

    pub fn spec(&self) -> &GameSpec {
        &self.spec
    }

    pub fn state_count(&self) -> usize {
        self.cop_turn.len() * 2
    }

    fn index(&self, cops: &[usize], robber: usize) -> usize {
        let mut sorted = cops.to_vec();
        sorted.sort_unstable();
        self.configs.rank(&sorted) * self.digraph.n() + robber
    }

    /// Value of a state. Robber positions outside the confinement set are
    /// robber wins by convention (they are never reached).
    pub fn value(&self, state: &GameState) -> Outcome {
        assert_eq!(state.cops.len(), self.spec.cops, "wrong number of cops");
        let s = self.index(&state.cops, state.robber);
        match state.to_move {
            Side::Cops => Outcome::from_raw(self.cop_turn[s]),
            Side::Robber => Outcome::from_raw(self.robber_turn[s]),
        }
    }

    /// Value with the cops about to move.
    pub fn cop_turn_value(&self, cops: &[usize], robber: usize) -> Outcome {
        Outcome::from_raw(self.cop_turn[self.index(cops, robber)])
    }

    /// Cop tuples reachable by one joint move from `cops`, sorted and distinct.
    pub fn cop_successors(&self, cops: &[usize]) -> Vec<Vec<usize>> {
        let k = cops.len();
        let mut out = Vec::new();
        let mut idx = vec![0usize; k];
        if cops.iter().any(|&c| self.cop_single[c].is_empty()) {
            return out;
        }
        loop {
            let mut t: Vec<usize> = (0..k).map(|i| self.cop_single[cops[i]][idx[i]]).collect();
            t.sort_unstable();
            out.push(t);
            let mut i = 0;
            loop {
                if i == k {
                    out.sort();
                    out.dedup();
                    return out;
                }
                idx[i] += 1;
                if idx[i] < self.cop_single[cops[i]].len() {
                    break;
                }
                idx[i] = 0;
                i += 1;
            }
        }
    }

    pub fn robber_options(&self, robber: usize) -> &[usize] {
        &self.robber_next[robber]
    }

    /// Legal successor states; empty for captured states.
    pub fn successors(&self, state: &GameState) -> Vec<GameState> {
        if state.is_capture() {
            return Vec::new();
        }
        match state.to_move {
            Side::Cops => self
                .cop_successors(&state.cops)
                .into_iter()
                .map(|c| GameState { cops: c, robber: state.robber, to_move: Side::Robber })
                .collect(),
            Side::Robber => self.robber_next[state.robber]
                .iter()
                .map(|&r| GameState { cops: state.cops.clone(), robber: r, to_move: Side::Cops })
                .collect(),
        }
    }

    /// Successors that preserve the game value: for the cops those that
    /// lower it by one round, for the robber those that keep it. Sorted, so
    /// the first entry is the lexicographically smallest.
    pub fn optimal_moves(&self, state: &GameState) -> Vec<GameState> {
        let v = self.value(state);
        let Outcome::Capture(t) = v else {
            return Vec::new();
        };
        let mut out: Vec<GameState> = self
            .successors(state)
            .into_iter()
            .filter(|s| match state.to_move {
                Side::Cops => self.value(s) == Outcome::Capture(t - 1),
                Side::Robber => self.value(s) == v,
            })
            .collect();
        out.sort();
        out
    }

    /// Value of placing the cops on `cops` and letting the robber answer.
    pub fn placement_value(&self, cops: &[usize]) -> Outcome {
        let n = self.digraph.n();
        (0..n)
            .filter(|&r| self.robber_allowed[r])
            .map(|r| if cops.contains(&r) { Outcome::Capture(0) } else { self.cop_turn_value(cops, r) })
            .max()
            .unwrap_or(Outcome::Capture(0))
    }

    /// Robber placements achieving `placement_value(cops)`.
    pub fn robber_best_responses(&self, cops: &[usize]) -> Vec<usize> {
        let best = self.placement_value(cops);
        (0..self.digraph.n())
            .filter(|&r| self.robber_allowed[r])
            .filter(|&r| {
                let v = if cops.contains(&r) { Outcome::Capture(0) } else { self.cop_turn_value(cops, r) };
                v == best
            })
            .collect()
    }

    /// Best value over cop placements restricted to `starts` (each a tuple);
    /// `None` means all placements.
    pub fn capture_time_from(&self, starts: Option<&[Vec<usize>]>) -> Outcome {
        match starts {
            Some(list) => list.iter().map(|c| self.placement_value(c)).min().unwrap_or(Outcome::RobberWin),
            None => (0..self.configs.len()).map(|ci| self.placement_value(&self.configs.tuple(ci))).min().unwrap(),
        }
    }

    pub fn capture_time(&self) -> Outcome {
        self.capture_time_from(None)
    }

    pub fn all_placements(&self) -> Vec<Vec<usize>> {
        (0..self.configs.len()).map(|ci| self.configs.tuple(ci)).collect()
    }

    /// Placements achieving the capture time.
    pub fn optimal_placements(&self) -> Vec<Vec<usize>> {
        let best = self.capture_time();
        self.all_placements().into_iter().filter(|c| self.placement_value(c) == best).collect()
    }

    pub fn summary(&self) -> SolveSummary {
        let ct = self.capture_time();
        let placements = self.optimal_placements();
        let responses = placements.iter().map(|c| self.robber_best_responses(c)).collect();
        SolveSummary {
            winner: if ct.is_capture() { Winner::Cops } else { Winner::Robber },
            cops: self.spec.cops,
            capture_time: ct.rounds(),
            initial_placements: placements,
            robber_responses: responses,
        }
    }

    /// Re-derives every stored value from its successors and reports the
    /// first state where the recurrence fails.
    pub fn audit(&self) -> Result<()> {
        let n = self.digraph.n();
        for ci in 0..self.configs.len() {
            let cops = self.configs.tuple(ci);
            for r in 0..n {
                let s = ci * n + r;
                let captured = cops.contains(&r);
                let cop_expect = if captured {
                    0
                } else if !self.robber_allowed[r] {
                    continue;
                } else {
                    self.cop_successors(&cops)
                        .iter()
                        .map(|c| if c.contains(&r) { 0 } else { self.robber_turn[self.index(c, r)] })
                        .min()
                        .map_or(UNRESOLVED, |m| m.saturating_add(1))
                };
                let rob_expect = if captured {
                    0
                } else {
                    self.robber_next[r]
                        .iter()
                        .map(|&w| if cops.contains(&w) { 0 } else { self.cop_turn[ci * n + w] })
                        .max()
                        .unwrap_or(0)
                };
                if self.cop_turn[s] != cop_expect || self.robber_turn[s] != rob_expect {
                    return Err(Error::Inconsistent(format!(
                        "recurrence fails at cops {cops:?}, robber {r}: stored ({}, {}), expected ({cop_expect}, {rob_expect})",
                        self.cop_turn[s], self.robber_turn[s]
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Result of a cop-number search.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CopNumber {
    Exactly(usize),
    /// No win with up to this many cops.
    MoreThan(usize),
}

impl CopNumber {
    pub fn exact(self) -> Option<usize> {
        match self {
            CopNumber::Exactly(k) => Some(k),
            CopNumber::MoreThan(_) => None,
        }
    }

    /// Whether the true cop number is at least `k`.
    pub fn at_least(self, k: usize) -> bool {
        match self {
            CopNumber::Exactly(c) => c >= k,
            CopNumber::MoreThan(m) => m + 1 >= k,
        }
    }
}

impl std::fmt::Display for CopNumber {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CopNumber::Exactly(k) => write!(f, "{k}"),
            CopNumber::MoreThan(m) => write!(f, ">{m}"),
        }
    }
}

/// Smallest number of cops, up to `k_max`, that wins from some placement.
pub fn cop_number(d: &Digraph, variant: Variant, k_max: usize) -> Result<CopNumber> {
    cop_number_with(d, variant, k_max, DEFAULT_STATE_BUDGET)
}

pub fn cop_number_with(d: &Digraph, variant: Variant, k_max: usize, budget: u64) -> Result<CopNumber> {
    if k_max == 0 {
        return Err(Error::InvalidParameter("k_max must be at least 1".into()));
    }
    for k in 1..=k_max {
        let table = solve_game_with_budget(d, &GameSpec::with_variant(k, variant), budget)?;
        if table.capture_time().is_capture() {
            return Ok(CopNumber::Exactly(k));
        }
    }
    Ok(CopNumber::MoreThan(k_max))
}

pub fn capture_time(d: &Digraph, k: usize, variant: Variant) -> Result<Outcome> {
    Ok(solve_game(d, &GameSpec::with_variant(k, variant))?.capture_time())
}

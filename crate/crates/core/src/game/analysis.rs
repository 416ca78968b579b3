//! Optimal-play traces and properties quantified over all of them.

use std::collections::HashMap;

use serde::Serialize;

use super::solver::{solve_game, GameTable, Outcome};
use super::spec::{Confinement, GameSpec};
use crate::cycles::is_directed_cycle;
use crate::digraph::Digraph;
use crate::error::{Error, Result};

/// Positions after a round; round 0 is the placement.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TraceRecord {
    pub round: usize,
    pub cops: Vec<usize>,
    pub robber: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct PlayTrace {
    pub records: Vec<TraceRecord>,
}

impl PlayTrace {
    pub fn rounds(&self) -> usize {
        self.records.last().map_or(0, |r| r.round)
    }

    pub fn ends_in_capture(&self) -> bool {
        self.records.last().is_some_and(|r| r.cops.contains(&r.robber))
    }

    /// Directed distance from the nearest cop to the robber at each record.
    pub fn distances(&self, d: &Digraph) -> Vec<Option<usize>> {
        self.records.iter().map(|r| cop_distance(d, &r.cops, r.robber)).collect()
    }

    /// Vertices some cop occupies again after all cops had left them.
    pub fn revisited_vertices(&self) -> Vec<usize> {
        let mut left: Vec<usize> = Vec::new();
        let mut out = Vec::new();
        for w in self.records.windows(2) {
            for &v in &w[1].cops {
                if left.contains(&v) && !out.contains(&v) {
                    out.push(v);
                }
            }
            left.extend(w[0].cops.iter().filter(|v| !w[1].cops.contains(v)));
        }
        out.sort_unstable();
        out
    }
}

fn cop_distance(d: &Digraph, cops: &[usize], robber: usize) -> Option<usize> {
    cops.iter().filter_map(|&c| d.directed_distance(c, robber)).min()
}

/// Exists/forall answer for one property of optimal traces.
#[derive(Clone, Debug, Serialize)]
pub struct Quantified {
    pub exists: bool,
    pub forall: bool,
    /// Lexicographically first optimal trace with the property.
    pub witness: Option<PlayTrace>,
    /// Lexicographically first optimal trace without it.
    pub counterexample: Option<PlayTrace>,
}

#[derive(Clone, Debug, Serialize)]
pub struct TraceAnalysis {
    pub capture_time: u32,
    pub distance_increase: Quantified,
    pub revisit: Quantified,
    pub first_trace: PlayTrace,
}

/// Walks the graph of value-preserving moves from every optimal placement.
pub struct TraceExplorer<'t> {
    table: &'t GameTable,
    starts: Vec<(Vec<usize>, usize)>,
    capture_time: u32,
}

/// One half-open step in a trace: where play goes after a full round.
#[derive(Clone)]
struct Step {
    cops: Vec<usize>,
    robber: usize,
    terminal: bool,
}

impl<'t> TraceExplorer<'t> {
    pub fn new(table: &'t GameTable) -> Result<Self> {
        let Outcome::Capture(capture_time) = table.capture_time() else {
            return Err(Error::NotCopWin { k: table.spec().cops });
        };
        let mut starts = Vec::new();
        for c in table.optimal_placements() {
            for r in table.robber_best_responses(&c) {
                starts.push((c.clone(), r));
            }
        }
        starts.sort();
        Ok(TraceExplorer { table, starts, capture_time })
    }

    pub fn capture_time(&self) -> u32 {
        self.capture_time
    }

    /// Optimal (placement, robber) pairs the traces start from.
    pub fn starts(&self) -> &[(Vec<usize>, usize)] {
        &self.starts
    }

    /// Optimal full-round continuations from a cop-turn state, sorted.
    fn steps(&self, cops: &[usize], robber: usize) -> Vec<Step> {
        let t = self.table;
        let Outcome::Capture(v) = t.cop_turn_value(cops, robber) else {
            return Vec::new();
        };
        if v == 0 {
            return Vec::new();
        }
        let mut out = Vec::new();
        for c in t.cop_successors(cops) {
            if c.contains(&robber) {
                if v == 1 {
                    out.push(Step { cops: c, robber, terminal: true });
                }
                continue;
            }
            let q = super::solver::GameState::new(c.clone(), robber, super::solver::Side::Robber);
            if t.value(&q) != Outcome::Capture(v - 1) {
                continue;
            }
            for &r in t.robber_options(robber) {
                let value = if c.contains(&r) { Outcome::Capture(0) } else { t.cop_turn_value(&c, r) };
                if value == Outcome::Capture(v - 1) {
                    out.push(Step { cops: c.clone(), robber: r, terminal: c.contains(&r) });
                }
            }
        }
        out.sort_by(|a, b| (&a.cops, a.robber).cmp(&(&b.cops, b.robber)));
        out
    }

    /// Quantifies an event over consecutive records. `event` sees the
    /// previous record, the next record and an auxiliary path state, and
    /// returns whether the event fires plus the new auxiliary state.
    pub fn quantify<F>(&self, event: F) -> Quantified
    where
        F: Fn(&TraceRecord, &TraceRecord, u64) -> (bool, u64),
    {
        let mut memo: HashMap<(Vec<usize>, usize, u64), (bool, bool)> = HashMap::new();
        let mut exists = false;
        let mut forall = true;
        for (c, r) in &self.starts {
            let (e, a) = self.solve(c, *r, 0, 0, &event, &mut memo);
            exists |= e;
            forall &= a;
        }
        let witness = exists.then(|| self.extract(&event, &memo, true));
        let counterexample = (!forall).then(|| self.extract(&event, &memo, false));
        Quantified { exists, forall, witness, counterexample }
    }

    fn solve<F>(
        &self,
        cops: &[usize],
        robber: usize,
        round: usize,
        aux: u64,
        event: &F,
        memo: &mut HashMap<(Vec<usize>, usize, u64), (bool, bool)>,
    ) -> (bool, bool)
    where
        F: Fn(&TraceRecord, &TraceRecord, u64) -> (bool, u64),
    {
        let key = (cops.to_vec(), robber, aux);
        if let Some(&v) = memo.get(&key) {
            return v;
        }
        let steps = self.steps(cops, robber);
        let res = if steps.is_empty() {
            (false, false)
        } else {
            let prev = TraceRecord { round, cops: cops.to_vec(), robber };
            let mut ex = false;
            let mut fa = true;
            for s in steps {
                let next = TraceRecord { round: round + 1, cops: s.cops.clone(), robber: s.robber };
                let (fired, aux2) = event(&prev, &next, aux);
                let (e, a) =
                    if s.terminal { (false, false) } else { self.solve(&s.cops, s.robber, round + 1, aux2, event, memo) };
                ex |= fired || e;
                fa &= fired || a;
            }
            (ex, fa)
        };
        memo.insert(key, res);
        res
    }

    /// Lexicographically first trace that has (`want`) or avoids the event.
    fn extract<F>(&self, event: &F, memo: &HashMap<(Vec<usize>, usize, u64), (bool, bool)>, want: bool) -> PlayTrace
    where
        F: Fn(&TraceRecord, &TraceRecord, u64) -> (bool, u64),
    {
        // `goal` true: the rest of the trace must contain the event;
        // false: the rest must avoid it.
        let ok = |c: &[usize], r: usize, aux: u64, goal: bool| -> bool {
            let (e, a) = memo.get(&(c.to_vec(), r, aux)).copied().unwrap_or((false, false));
            if goal {
                e
            } else {
                !a
            }
        };
        let (c0, r0) = self
            .starts
            .iter()
            .find(|(c, r)| ok(c, *r, 0, want))
            .cloned()
            .expect("memo agrees with the quantifier");
        let mut records = vec![TraceRecord { round: 0, cops: c0.clone(), robber: r0 }];
        let (mut cops, mut robber, mut aux, mut need) = (c0, r0, 0u64, Some(want));
        loop {
            let steps = self.steps(&cops, robber);
            if steps.is_empty() {
                break;
            }
            let prev = records.last().unwrap().clone();
            let mut chosen = None;
            for s in steps {
                let next = TraceRecord { round: prev.round + 1, cops: s.cops.clone(), robber: s.robber };
                let (fired, aux2) = event(&prev, &next, aux);
                let fits = match need {
                    None => true,
                    Some(true) => fired || (!s.terminal && ok(&s.cops, s.robber, aux2, true)),
                    Some(false) => !fired && (s.terminal || ok(&s.cops, s.robber, aux2, false)),
                };
                if fits {
                    if need == Some(true) && fired {
                        need = None;
                    }
                    chosen = Some((s, next, aux2));
                    break;
                }
            }
            let (s, next, aux2) = chosen.expect("a consistent continuation exists");
            records.push(next);
            if s.terminal {
                break;
            }
            cops = s.cops;
            robber = s.robber;
            aux = aux2;
        }
        PlayTrace { records }
    }

    /// Lexicographically first optimal trace.
    pub fn first_trace(&self) -> PlayTrace {
        let mut memo = HashMap::new();
        let never = |_: &TraceRecord, _: &TraceRecord, a: u64| (false, a);
        for (c, r) in &self.starts {
            self.solve(c, *r, 0, 0, &never, &mut memo);
        }
        // with an event that never fires every trace is a counterexample
        self.extract(&never, &memo, false)
    }

    /// Consecutive records whose cop-to-robber distances satisfy `pred`.
    /// Unreachable robbers have distance `None`.
    pub fn distance_step<P>(&self, pred: P) -> Quantified
    where
        P: Fn(Option<usize>, Option<usize>) -> bool,
    {
        let d = self.table.digraph();
        self.quantify(|a, b, aux| {
            let da = cop_distance(d, &a.cops, a.robber);
            let db = cop_distance(d, &b.cops, b.robber);
            (pred(da, db), aux)
        })
    }

    /// Distance strictly grows between consecutive rounds.
    pub fn distance_increase(&self) -> Quantified {
        self.distance_step(|a, b| match (a, b) {
            (Some(x), Some(y)) => y > x,
            (Some(_), None) => true,
            _ => false,
        })
    }

    /// Some vertex in `only` (all vertices when `None`) is occupied by a cop,
    /// left by every cop, and occupied again.
    pub fn revisit(&self, only: Option<&[usize]>) -> Result<Quantified> {
        let n = self.table.digraph().n();
        if n > 64 {
            return Err(Error::TooLarge { what: "revisit tracking vertices", size: n, max: 64 });
        }
        let mask = |vs: &[usize]| vs.iter().fold(0u64, |m, &v| m | (1 << v));
        let filter = only.map_or(u64::MAX, mask);
        Ok(self.quantify(|a, b, left| {
            let before = mask(&a.cops);
            let after = mask(&b.cops);
            let fired = after & left & filter != 0;
            (fired, left | (before & !after))
        }))
    }
}

/// Distance-increase and revisit analysis over all optimal traces.
pub fn optimal_trace_analysis(d: &Digraph, k: usize) -> Result<TraceAnalysis> {
    let table = solve_game(d, &GameSpec::standard(k))?;
    let ex = TraceExplorer::new(&table)?;
    Ok(TraceAnalysis {
        capture_time: ex.capture_time(),
        distance_increase: ex.distance_increase(),
        revisit: ex.revisit(None)?,
        first_trace: ex.first_trace(),
    })
}

/// Whether one cop catches a robber confined to `cycle` (forward moves or
/// passes only). The cop starts on the unique source when there is one and
/// anywhere otherwise.
pub fn is_cop_dominated(d: &Digraph, cycle: &[usize]) -> Result<bool> {
    if !is_directed_cycle(d, cycle) {
        return Err(Error::NotACycle(format!("{cycle:?}")));
    }
    let spec = GameSpec::standard(1).confined(Confinement::on_cycle(cycle));
    let table = solve_game(d, &spec)?;
    let sources = d.sources();
    let outcome = if sources.len() == 1 {
        table.capture_time_from(Some(&[vec![sources[0]]]))
    } else {
        table.capture_time()
    };
    Ok(outcome.is_capture())
}

use serde::{Deserialize, Serialize};

use crate::cycles::is_directed_cycle;
use crate::digraph::Digraph;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Variant {
    /// Every agent may pass.
    Standard,
    /// Nobody may pass; every cop and the robber must take an out-arc.
    FullyActive,
}

/// Restricts where the robber may stand and how the robber moves.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Confinement {
    /// Vertices the robber may occupy, sorted.
    pub allowed: Vec<usize>,
    /// When set, the robber's only non-pass move is one step forward along
    /// this directed cycle.
    pub forward_cycle: Option<Vec<usize>>,
}

impl Confinement {
    /// Robber lives on `cycle` and only moves forward along it.
    pub fn on_cycle(cycle: &[usize]) -> Self {
        let mut allowed = cycle.to_vec();
        allowed.sort_unstable();
        Confinement { allowed, forward_cycle: Some(cycle.to_vec()) }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GameSpec {
    pub cops: usize,
    pub variant: Variant,
    pub confinement: Option<Confinement>,
}

impl GameSpec {
    pub fn standard(cops: usize) -> Self {
        GameSpec { cops, variant: Variant::Standard, confinement: None }
    }

    pub fn fully_active(cops: usize) -> Self {
        GameSpec { cops, variant: Variant::FullyActive, confinement: None }
    }

    pub fn with_variant(cops: usize, variant: Variant) -> Self {
        GameSpec { cops, variant, confinement: None }
    }

    pub fn confined(mut self, confinement: Confinement) -> Self {
        self.confinement = Some(confinement);
        self
    }

    /// Checks the game setup against `d`.
    pub fn validate(&self, d: &Digraph) -> Result<()> {
        if self.cops == 0 {
            return Err(Error::InvalidParameter("at least one cop is required".into()));
        }
        if let Some(c) = &self.confinement {
            if c.allowed.is_empty() {
                return Err(Error::InvalidParameter("robber confinement set is empty".into()));
            }
            if let Some(&v) = c.allowed.iter().find(|&&v| v >= d.n()) {
                return Err(Error::InvalidParameter(format!("confinement vertex {v} out of range")));
            }
            if let Some(cycle) = &c.forward_cycle {
                if !is_directed_cycle(d, cycle) {
                    return Err(Error::NotACycle(format!("{cycle:?}")));
                }
                if let Some(v) = cycle.iter().find(|v| c.allowed.binary_search(v).is_err()) {
                    return Err(Error::InvalidParameter(format!("cycle vertex {v} outside the confinement set")));
                }
            }
        }
        if self.variant == Variant::FullyActive {
            if let Some(v) = (0..d.n()).find(|&v| d.out_degree(v) == 0) {
                return Err(Error::StuckMover(v));
            }
            let moves = robber_moves(d, self);
            if let Some(v) = self.robber_vertices(d).into_iter().find(|&v| moves[v].is_empty()) {
                return Err(Error::StuckMover(v));
            }
        }
        Ok(())
    }

    /// Vertices the robber may be placed on.
    pub fn robber_vertices(&self, d: &Digraph) -> Vec<usize> {
        match &self.confinement {
            Some(c) => c.allowed.clone(),
            None => (0..d.n()).collect(),
        }
    }
}

/// Per-vertex robber options, including passing when allowed. Targets are
/// sorted.
pub(crate) fn robber_moves(d: &Digraph, spec: &GameSpec) -> Vec<Vec<usize>> {
    let pass = spec.variant == Variant::Standard;
    let mut moves = vec![Vec::new(); d.n()];
    match &spec.confinement {
        None => {
            for (v, m) in moves.iter_mut().enumerate() {
                m.extend(d.out_neighbors(v));
                if pass {
                    m.push(v);
                }
            }
        }
        Some(c) => {
            let allowed = |v: &usize| c.allowed.binary_search(v).is_ok();
            for &v in &c.allowed {
                let m = &mut moves[v];
                match &c.forward_cycle {
                    Some(cycle) => {
                        if let Some(i) = cycle.iter().position(|&x| x == v) {
                            m.push(cycle[(i + 1) % cycle.len()]);
                        }
                    }
                    None => m.extend(d.out_neighbors(v).iter().copied().filter(allowed)),
                }
                if pass {
                    m.push(v);
                }
            }
        }
    }
    for m in &mut moves {
        m.sort_unstable();
        m.dedup();
    }
    moves
}

/// Single-cop options from each vertex, sorted.
pub(crate) fn cop_moves(d: &Digraph, variant: Variant) -> Vec<Vec<usize>> {
    (0..d.n())
        .map(|v| {
            let mut m = d.out_neighbors(v).to_vec();
            if variant == Variant::Standard {
                m.push(v);
                m.sort_unstable();
            }
            m
        })
        .collect()
}

fn invert(moves: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut inv = vec![Vec::new(); moves.len()];
    for (v, m) in moves.iter().enumerate() {
        for &w in m {
            inv[w].push(v);
        }
    }
    inv
}

pub(crate) fn inverse_moves(moves: &[Vec<usize>]) -> Vec<Vec<usize>> {
    invert(moves)
}

//! Graph and digraph constructions.

pub mod basic;
pub mod figures;
pub mod oriented;
pub mod outerplanar;
pub mod projective;
pub mod sts;

pub use basic::{
    cycle_graph, directed_cycle, directed_path, in_star, out_star, path_graph, petersen, random_connected_graph,
    random_tournament, transitive_tournament,
};
pub use figures::{fig1_counterexample, fig2_distance, fig3_revisit, ring_digraph};
pub use oriented::{
    alternating_bfs_orientation, alternating_bfs_orientation_ranked, bfs_levels, copwin_orientation,
    independent_set_source_orientation, AlternatingBfs, AlternatingBfsCertificate,
};
pub use outerplanar::{is_outerplanar, random_outerplanar_strong};
pub use projective::{
    hamiltonian_cycle, incidence_block_cycle, projective_incidence_graph, projective_incidence_orientation,
};
pub use sts::{bose_triples, sts_tournament};

use crate::digraph::{Digraph, UndirectedView};
use crate::error::{Error, Result};

/// Parameters for [`build_family`]; unused fields are ignored.
#[derive(Clone, Copy, Debug, Default)]
pub struct FamilyParams {
    pub n: Option<usize>,
    pub k: Option<usize>,
    pub q: Option<usize>,
    pub seed: u64,
}

#[derive(Clone, Debug)]
pub enum FamilyGraph {
    Directed(Digraph),
    Undirected(UndirectedView),
}

impl FamilyGraph {
    /// Undirected graphs become digraphs with each edge pointing from the
    /// smaller to the larger endpoint.
    pub fn into_digraph(self) -> Digraph {
        match self {
            FamilyGraph::Directed(d) => d,
            FamilyGraph::Undirected(g) => Digraph::new(g.n(), g.edges().iter().copied()).expect("valid edges"),
        }
    }
}

pub const FAMILY_IDS: &[&str] = &[
    "cycle",
    "path",
    "out-star",
    "in-star",
    "transitive-tournament",
    "random-tournament",
    "petersen",
    "ring",
    "fig1",
    "fig2",
    "fig3",
    "projective",
    "incidence-block-cycle",
    "sts",
    "outerplanar",
];

fn req(v: Option<usize>, what: &str, id: &str) -> Result<usize> {
    v.ok_or_else(|| Error::InvalidParameter(format!("family `{id}` needs --{what}")))
}

/// Builds a family member by id.
pub fn build_family(id: &str, p: &FamilyParams) -> Result<FamilyGraph> {
    use FamilyGraph::*;
    let n = || req(p.n, "n", id);
    Ok(match id {
        "cycle" => Directed(directed_cycle(n()?)?),
        "path" => Directed(directed_path(n()?)?),
        "out-star" => Directed(out_star(n()?)?),
        "in-star" => Directed(in_star(n()?)?),
        "transitive-tournament" => Directed(transitive_tournament(n()?)?),
        "random-tournament" => Directed(random_tournament(n()?, p.seed)?),
        "petersen" => Undirected(petersen()),
        "ring" => Directed(ring_digraph(req(p.k, "k", id)?)?),
        "fig1" => Directed(fig1_counterexample()),
        "fig2" => Directed(fig2_distance(p.n.unwrap_or(20))?),
        "fig3" => Directed(fig3_revisit(p.n.unwrap_or(20))?),
        "projective" => Directed(projective_incidence_orientation(req(p.q, "q", id)?)?),
        "incidence-block-cycle" => Directed(incidence_block_cycle(req(p.q, "q", id)?)?),
        "sts" => Directed(sts_tournament(n()?, p.seed)?),
        "outerplanar" => Directed(random_outerplanar_strong(n()?, p.seed)?),
        _ => return Err(Error::InvalidParameter(format!("unknown family `{id}`; known: {}", FAMILY_IDS.join(", ")))),
    })
}

//! Cops and robbers on directed graphs: exact game solving, graph families,
//! transforms and structural bounds.

pub mod bounds;
pub mod canon;
pub mod claims;
pub mod cycles;
pub mod digraph;
pub mod error;
pub mod families;
pub mod game;
pub mod io;
pub mod orientations;
pub mod transforms;

pub use digraph::{contract, Digraph, StrongComponents, StructureProfile, UndirectedView};
pub use error::{Error, Result};

//! The k-cop pursuit game on digraphs.

pub mod analysis;
mod configs;
pub mod oracle;
pub mod solver;
pub mod spec;
pub mod tournament;

pub use analysis::{is_cop_dominated, optimal_trace_analysis, PlayTrace, Quantified, TraceAnalysis, TraceExplorer, TraceRecord};
pub use oracle::{oracle_value, oracle_value_capped, oracle_value_with_depth};
pub use solver::{
    capture_time, cop_number, cop_number_with, solve_game, solve_game_with_budget, CopNumber, GameState, GameTable,
    Outcome, Side, SolveSummary, Winner, DEFAULT_STATE_BUDGET,
};
pub use spec::{Confinement, GameSpec, Variant};
pub use tournament::{check_tournament, estimate_failure_fraction, safe_vertex_check, SafeVertexEstimate};

//! Graph families to sweep: exhaustive labeled connected graphs, free trees
//! and seeded random samples, plus the parallel sweep driver.

mod connected;
pub mod rng;
mod sample;
mod sweep;
mod trees;

pub use connected::{
    connected_graphs_in_range, edge_mask_count, enumerate_connected_graphs, pair_order,
    ConnectedGraphs, MAX_EXHAUSTIVE_ORDER,
};
pub use sample::{
    sample_diameter2_graphs, RandomGraphs, SampleTarget, DENSITIES_TENTHS, MAX_REJECTIONS,
    MAX_SAMPLE_ORDER,
};
pub use sweep::{
    collect_graph6, fold_sweep, run_sweep, Filter, Mode, Sample, SweepError, SweepSpec,
    SweepSummary, Target,
};
pub use trees::{
    canonical_tree_form, enumerate_trees, free_tree_sequences, tree_from_level_sequence,
    FreeTreeSequences, MAX_TREE_ORDER, MIN_TREE_ORDER,
};

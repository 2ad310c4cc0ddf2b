//! Graph-class recognition and certified partitions.

mod bisplit;
mod chain;
mod chordal;
mod convexity;
mod split;

pub use bisplit::{
    bisplit_partitions, check_chordal_bisplit, recognize_bisplit, recognize_chordal_bisplit,
    verify_bisplit_partition, BisplitPartition, BISPLIT_CAP,
};
pub use chain::{recognize_chain, verify_chain_partition, ChainPartition};
pub use chordal::{is_chordal, is_chordal_bipartite, CHORDAL_BIPARTITE_CAP};
pub use convexity::{
    check_pi_convexity, extend_comb, extend_star, find_comb_witness, find_star_witness,
    ConvexityWitness, Side, WitnessTree, COMB_SEARCH_CAP,
};
pub use split::{recognize_split, SplitPartition};

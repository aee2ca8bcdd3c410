//! Command-line front end for `hecke-core`.

pub mod commands;
pub mod pair_spec;

pub use commands::{dispatch, dispatch_with_cap, Outcome};
pub use pair_spec::{parse_pair_spec, PairSpec, PairSpecError};

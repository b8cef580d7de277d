//! Covering algorithms with provable or empirical cost guarantees.

mod bounded_degree;
mod caterpillar;
mod clique;
mod degenerate;
mod separator;

pub use bounded_degree::cover_bounded_degree;
pub use caterpillar::cover_caterpillar;
pub use clique::{clique_group_count, cover_clique};
pub use degenerate::cover_degenerate;
pub use separator::{
    bfs_level_separator, centroid_separator, cover_separator, BfsLevels, Centroid,
    SeparatorProvider,
};

use crate::error::{Error, Result};

pub(crate) fn check_k(k: usize) -> Result<()> {
    if k == 0 {
        Err(Error::Parameter("k must be at least 1".into()))
    } else {
        Ok(())
    }
}

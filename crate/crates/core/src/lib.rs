//! Continued-fraction generating functions for ordered trees, together with
//! the tree bijections to Dyck paths and 132-avoiding permutations and
//! exhaustive checks of every coefficient against direct enumeration.

pub mod cli;
pub mod contfrac;
pub mod paths;
pub mod perms;
pub mod series;
pub mod trees;
pub mod verify;

mod error;

pub use contfrac::{cf_stability_check, eval_cf, fixed_point_check, LevelWeights};
pub use error::{Error, Result};
pub use paths::{DyckPath, Step};
pub use perms::PermWord;
pub use series::{Monomial, TruncSeries};
pub use trees::{binomial, catalan, LevelProfile, OrderedTree};

//! Dynamic orthogonal range indexes over item attributes, plus balanced
//! order-statistic trees.
//!
//! The range structures combine static layered range trees with logarithmic
//! rebuilding (inserts) and a subtracted deletion shadow (deletes), giving
//! amortized polylogarithmic updates and exact counting, profit-sum and
//! width-sum queries over closed axis-aligned boxes.
//!
//! ```
//! use geoknap_index::ItemIndex2D;
//!
//! let mut idx = ItemIndex2D::new();
//! idx.insert(0, 3, 5).unwrap(); // key 0: side 3, profit 5
//! assert_eq!(idx.count((3, 3), (5, 5)), 1);
//! idx.delete(0).unwrap();
//! assert_eq!(idx.count((3, 3), (5, 5)), 0);
//! ```

pub mod dynamic;
pub mod item2d;
pub mod order_tree;
pub mod rect4d;
pub mod static_tree;

pub use dynamic::DynTree;
pub use item2d::ItemIndex2D;
pub use order_tree::{binary_search_threshold, OrderTree};
pub use rect4d::{RectAttr, RectIndex4D};
pub use static_tree::{Aggregate, Point, RangeQ};

use thiserror::Error;

/// Stable handle assigned by the caller to each indexed point.
pub type Key = u32;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum IndexError {
    #[error("delete of absent key {0}")]
    AbsentKey(Key),
    #[error("duplicate key {0}")]
    DuplicateKey(Key),
}

/// Inclusive integer range helper; `(lo, hi)` with `lo > hi` matches nothing.
pub type IntRange = (u64, u64);

/// The full integer domain.
pub const ALL: IntRange = (0, u64::MAX);

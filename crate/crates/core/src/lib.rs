//! Shared foundation for the geoknap workspace: items, instances, exact
//! `(1+ε)`-class arithmetic, box descriptions, implicit solutions, the
//! packing feasibility verifier and the newline-delimited file formats.
//!
//! All geometry is integer-valued and all boundary comparisons are done in
//! exact rational arithmetic, never floating point:
//!
//! ```
//! use geoknap_core::{ClassScale, Epsilon};
//! use geoknap_core::eps::rat_int;
//!
//! let eps = Epsilon::new(1).unwrap(); // ε = 1, classes are powers of two
//! let scale = ClassScale::new(&eps);
//! // ⌈3⌉_2 = 4: the smallest power of two strictly above 3.
//! assert_eq!(scale.ceil_pow(&rat_int(3)), (2, rat_int(4)));
//! // Exact powers round strictly up for ⌈·⌉ and to themselves for ⌊·⌋.
//! assert_eq!(scale.ceil_pow(&rat_int(4)), (3, rat_int(8)));
//! assert_eq!(scale.floor_pow(&rat_int(4)), Some((2, rat_int(4))));
//! ```

pub mod boxspec;
pub mod classify;
pub mod eps;
pub mod error;
pub mod frac;
pub mod implicit;
pub mod io;
pub mod item;
pub mod packing;

pub use boxspec::{BoxSpec, PlacedBox};
pub use classify::{classify_rect_item, enumerate_eps_pairs, EpsPair, RectClass};
pub use eps::{ClassScale, Epsilon, Rat};
pub use error::CoreError;
pub use frac::Frac;
pub use implicit::{AttrFilter, CellAssign, ImplicitSolution, MemberOrder, SelectionCell};
pub use io::{
    read_implicit, read_instance, read_packing, write_implicit, write_instance, write_packing,
};
pub use item::{Instance, Item, ItemId, Mode, Shape};
pub use packing::{verify_packing, Packing, Placement, VerifyReport, Violation};

//! Placement routines that turn a box plus an assigned item list into
//! concrete coordinates: d-dimensional NFDH shelf packing, grid placement
//! for N*-boxes, horizontal/vertical stacks, and the volume predicate under
//! which NFDH is guaranteed to succeed.

mod nfdh;
mod predicate;
mod stacks;

pub use nfdh::{nfdh_pack, NfdhFailure, ShelfRun};
pub use predicate::{nfdh_guarantee_cubes, nfdh_guarantee_rects};
pub use stacks::{hstack_pack, nstar_pack, vstack_pack};

use geoknap_core::{ItemId, Placement};
use thiserror::Error;

/// Item handed to a packer: identity, axis extents (x first) and whether the
/// extents describe the rotated orientation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PackItem {
    pub id: ItemId,
    pub extents: Vec<u64>,
    pub rotated: bool,
}

impl PackItem {
    pub fn cube(id: ItemId, side: u64, d: usize) -> Self {
        PackItem {
            id,
            extents: vec![side; d],
            rotated: false,
        }
    }

    pub fn rect(id: ItemId, h: u64, w: u64, rotated: bool) -> Self {
        let (eh, ew) = if rotated { (w, h) } else { (h, w) };
        PackItem {
            id,
            extents: vec![ew, eh],
            rotated,
        }
    }

    pub fn volume(&self) -> u128 {
        self.extents.iter().map(|&e| e as u128).product()
    }
}

/// Placements relative to the box origin, plus the shelf trace for
/// diagnostics and property tests.
#[derive(Clone, Debug, Default)]
pub struct Fragment {
    pub placements: Vec<Placement>,
    pub shelf_runs: Vec<ShelfRun>,
}

impl Fragment {
    /// Translates the fragment to absolute coordinates.
    pub fn translated(&self, box_origin: &[i64]) -> Vec<Placement> {
        self.placements
            .iter()
            .map(|p| Placement {
                id: p.id.clone(),
                origin: p
                    .origin
                    .iter()
                    .zip(box_origin)
                    .map(|(o, b)| o + b)
                    .collect(),
                rotated: p.rotated,
            })
            .collect()
    }
}

#[derive(Debug, Error)]
pub enum PackError {
    #[error("box capacity exceeded: {0}")]
    Capacity(String),
    #[error("item {id} violates the box range: {msg}")]
    OutOfRange { id: ItemId, msg: String },
}

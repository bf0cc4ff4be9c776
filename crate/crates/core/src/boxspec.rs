use crate::frac::Frac;
use serde::{Deserialize, Serialize};

/// Instantiated box description. Enumeration-time plans live in the solver;
/// by the time a `BoxSpec` exists every side length is a concrete integer.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum BoxSpec {
    /// Grid box: a d-dimensional grid of pitch `s_max` with `n_per_dim[k]`
    /// cells per axis; every assigned item side lies in [s_min, s_max].
    NStar {
        s_min: u64,
        s_max: u64,
        n_per_dim: Vec<u64>,
    },
    /// NFDH box for items that are ε-small in every dimension relative to
    /// `lengths`; per-partition area shares are tracked by the solver.
    SBox {
        lengths: Vec<u64>,
        #[serde(default, skip_serializing_if = "Vec::is_empty")]
        area_shares: Vec<(usize, Frac)>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        share_small: Option<Frac>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        share_vert: Option<Frac>,
    },
    /// Single-large-item box; `special` marks B* in rotation mode.
    LBox {
        h: u64,
        w: u64,
        #[serde(default)]
        special: bool,
    },
    /// Horizontal stack: items with widths in [w_min, w_max] piled bottom-up.
    HBox {
        h: u64,
        w_min: u64,
        w_max: u64,
    },
    /// Vertical stack: items placed left to right; `h_interval` indexes the
    /// height interval (h^{(j-1)}, h^{(j)}] this box serves.
    VBox {
        h: u64,
        w: u64,
        h_interval: usize,
    },
}

impl BoxSpec {
    /// Axis extents (x first, then y, ...) of the instantiated box.
    pub fn extents(&self, d: usize) -> Vec<u64> {
        match self {
            BoxSpec::NStar {
                s_max, n_per_dim, ..
            } => n_per_dim.iter().map(|n| n * s_max).collect(),
            BoxSpec::SBox { lengths, .. } => lengths.clone(),
            BoxSpec::LBox { h, w, .. } => {
                debug_assert_eq!(d, 2);
                vec![*w, *h]
            }
            BoxSpec::HBox { h, w_max, .. } => {
                debug_assert_eq!(d, 2);
                vec![*w_max, *h]
            }
            BoxSpec::VBox { h, w, .. } => {
                debug_assert_eq!(d, 2);
                vec![*w, *h]
            }
        }
    }

    pub fn volume(&self, d: usize) -> u128 {
        self.extents(d).iter().map(|&e| e as u128).product()
    }

    pub fn min_extent(&self, d: usize) -> u64 {
        self.extents(d).into_iter().min().unwrap_or(0)
    }
}

/// A box together with its position inside the knapsack.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlacedBox {
    pub spec: BoxSpec,
    pub origin: Vec<i64>,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nstar_extents_multiply_pitch() {
        let b = BoxSpec::NStar {
            s_min: 1,
            s_max: 3,
            n_per_dim: vec![2, 4],
        };
        assert_eq!(b.extents(2), vec![6, 12]);
        assert_eq!(b.volume(2), 72);
        assert_eq!(b.min_extent(2), 6);
    }

    #[test]
    fn rect_boxes_order_extents_x_then_y() {
        let h = BoxSpec::HBox {
            h: 10,
            w_min: 3,
            w_max: 7,
        };
        assert_eq!(h.extents(2), vec![7, 10]);
        let v = BoxSpec::VBox {
            h: 9,
            w: 4,
            h_interval: 0,
        };
        assert_eq!(v.extents(2), vec![4, 9]);
    }
}

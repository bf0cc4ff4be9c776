use crate::error::CoreError;
use crate::frac::Frac;
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::fmt;

/// Opaque stable item identifier, ordered lexicographically for all
/// deterministic tie-breaks.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ItemId(pub String);

impl ItemId {
    pub fn new(s: impl Into<String>) -> Self {
        ItemId(s.into())
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for ItemId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<&str> for ItemId {
    fn from(s: &str) -> Self {
        ItemId(s.to_owned())
    }
}

/// Geometric shape of an item: a hypercube side or a 2-D rectangle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Shape {
    Cube { side: u64 },
    Rect { h: u64, w: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Item {
    pub id: ItemId,
    pub shape: Shape,
    pub profit: u64,
}

impl Item {
    pub fn cube(id: impl Into<String>, side: u64, profit: u64) -> Self {
        Item {
            id: ItemId::new(id),
            shape: Shape::Cube { side },
            profit,
        }
    }

    pub fn rect(id: impl Into<String>, h: u64, w: u64, profit: u64) -> Self {
        Item {
            id: ItemId::new(id),
            shape: Shape::Rect { h, w },
            profit,
        }
    }

    /// Axis extents in dimension order. For rectangles dimension 0 is the
    /// x-axis (width) and dimension 1 the y-axis (height); `rotated` swaps
    /// them.
    pub fn extents(&self, d: usize, rotated: bool) -> Vec<u64> {
        match self.shape {
            Shape::Cube { side } => vec![side; d],
            Shape::Rect { h, w } => {
                debug_assert_eq!(d, 2);
                if rotated {
                    vec![h, w]
                } else {
                    vec![w, h]
                }
            }
        }
    }

    pub fn height(&self) -> u64 {
        match self.shape {
            Shape::Cube { side } => side,
            Shape::Rect { h, .. } => h,
        }
    }

    pub fn width(&self) -> u64 {
        match self.shape {
            Shape::Cube { side } => side,
            Shape::Rect { w, .. } => w,
        }
    }

    pub fn side(&self) -> u64 {
        match self.shape {
            Shape::Cube { side } => side,
            Shape::Rect { .. } => panic!("side() called on a rectangle"),
        }
    }

    pub fn max_side(&self) -> u64 {
        match self.shape {
            Shape::Cube { side } => side,
            Shape::Rect { h, w } => h.max(w),
        }
    }

    pub fn min_side(&self) -> u64 {
        match self.shape {
            Shape::Cube { side } => side,
            Shape::Rect { h, w } => h.min(w),
        }
    }

    /// Volume (area for rectangles) in `u128` to survive N^d for d ≤ 3.
    pub fn volume(&self, d: usize) -> u128 {
        match self.shape {
            Shape::Cube { side } => (side as u128).pow(d as u32),
            Shape::Rect { h, w } => h as u128 * w as u128,
        }
    }

    /// Density p_i / w_i as an exact fraction.
    pub fn density(&self) -> Frac {
        Frac::new(self.profit, self.width())
    }

    pub fn validate(&self, mode: Mode) -> Result<(), CoreError> {
        let bad = |msg: &str| CoreError::InvalidItem {
            id: self.id.0.clone(),
            msg: msg.into(),
        };
        match (mode, self.shape) {
            (Mode::Hypercube, Shape::Cube { side }) => {
                if side == 0 {
                    return Err(bad("side must be >= 1"));
                }
            }
            (Mode::Rectangle | Mode::RectangleRot, Shape::Rect { h, w }) => {
                if h == 0 || w == 0 {
                    return Err(bad("sides must be >= 1"));
                }
            }
            _ => return Err(bad("item shape does not match instance mode")),
        }
        Ok(())
    }
}

/// Problem mode as written in instance headers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Mode {
    #[serde(rename = "hypercube")]
    Hypercube,
    #[serde(rename = "rectangle")]
    Rectangle,
    #[serde(rename = "rectangle-rotating")]
    RectangleRot,
}

impl Mode {
    pub fn as_str(&self) -> &'static str {
        match self {
            Mode::Hypercube => "hypercube",
            Mode::Rectangle => "rectangle",
            Mode::RectangleRot => "rectangle-rotating",
        }
    }

    pub fn parse(s: &str) -> Result<Self, CoreError> {
        match s {
            "hypercube" => Ok(Mode::Hypercube),
            "rectangle" => Ok(Mode::Rectangle),
            "rectangle-rotating" => Ok(Mode::RectangleRot),
            other => Err(CoreError::Invalid(format!("unknown mode {other:?}"))),
        }
    }

    pub fn is_rect(&self) -> bool {
        matches!(self, Mode::Rectangle | Mode::RectangleRot)
    }

    pub fn allows_rotation(&self) -> bool {
        matches!(self, Mode::RectangleRot)
    }
}

/// A knapsack instance: side length N, dimension, mode and the item multiset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    pub n_side: u64,
    pub d: usize,
    pub mode: Mode,
    pub items: Vec<Item>,
}

impl Instance {
    pub fn new(n_side: u64, d: usize, mode: Mode) -> Result<Self, CoreError> {
        if n_side == 0 {
            return Err(CoreError::Invalid("knapsack side N must be >= 1".into()));
        }
        if d == 0 {
            return Err(CoreError::Invalid("dimension must be >= 1".into()));
        }
        if mode.is_rect() && d != 2 {
            return Err(CoreError::Invalid("rectangle mode requires d=2".into()));
        }
        Ok(Instance {
            n_side,
            d,
            mode,
            items: Vec::new(),
        })
    }

    pub fn with_items(mut self, items: Vec<Item>) -> Result<Self, CoreError> {
        for it in &items {
            it.validate(self.mode)?;
        }
        let mut seen = BTreeSet::new();
        for it in &items {
            if !seen.insert(&it.id) {
                return Err(CoreError::DuplicateItem(it.id.0.clone()));
            }
        }
        self.items = items;
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.items.len()
    }

    /// Whether an item can be placed in the knapsack at all. Rotation never
    /// helps against the square knapsack, so the test is mode-independent.
    pub fn packable(&self, item: &Item) -> bool {
        item.max_side() <= self.n_side
    }

    pub fn item(&self, id: &ItemId) -> Option<&Item> {
        self.items.iter().find(|it| &it.id == id)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rect_mode_requires_d2() {
        assert!(Instance::new(10, 3, Mode::Rectangle).is_err());
        assert!(Instance::new(10, 2, Mode::Rectangle).is_ok());
        assert!(Instance::new(10, 3, Mode::Hypercube).is_ok());
    }

    #[test]
    fn packability_uses_max_side() {
        let inst = Instance::new(10, 2, Mode::RectangleRot).unwrap();
        assert!(inst.packable(&Item::rect("a", 10, 2, 1)));
        assert!(!inst.packable(&Item::rect("b", 11, 2, 1)));
        assert!(!inst.packable(&Item::rect("c", 2, 11, 1)));
    }

    #[test]
    fn duplicate_ids_rejected() {
        let inst = Instance::new(10, 1, Mode::Hypercube).unwrap();
        let items = vec![Item::cube("a", 1, 1), Item::cube("a", 2, 2)];
        assert!(matches!(
            inst.with_items(items),
            Err(CoreError::DuplicateItem(_))
        ));
    }

    #[test]
    fn shape_mode_mismatch_rejected() {
        let inst = Instance::new(10, 2, Mode::Rectangle).unwrap();
        assert!(inst.with_items(vec![Item::cube("a", 3, 1)]).is_err());
    }
}

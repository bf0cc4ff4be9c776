use crate::boxspec::PlacedBox;
use crate::frac::Frac;
use crate::item::{Item, ItemId, Mode};
use serde::{Deserialize, Serialize};

/// Attribute predicate defining exactly which live items belong to a cell.
/// Ranges are inclusive; absent ranges are unbounded. `explicit_ids`, when
/// present, overrides the ranges entirely (used for portfolio baselines).
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct AttrFilter {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub side: Option<(u64, u64)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub height: Option<(u64, u64)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub width: Option<(u64, u64)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub profit: Option<(u64, u64)>,
    /// Admits only items with density p/w ≤ this value.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_density: Option<Frac>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub explicit_ids: Option<Vec<ItemId>>,
}

impl AttrFilter {
    pub fn matches(&self, item: &Item) -> bool {
        if let Some(ids) = &self.explicit_ids {
            return ids.contains(&item.id);
        }
        let in_range = |v: u64, r: Option<(u64, u64)>| r.map_or(true, |(lo, hi)| lo <= v && v <= hi);
        let side_ok = match self.side {
            None => true,
            Some((lo, hi)) => {
                let s = item.max_side(); // hypercube side
                lo <= s && s <= hi
            }
        };
        side_ok
            && in_range(item.height(), self.height)
            && in_range(item.width(), self.width)
            && in_range(item.profit, self.profit)
            && self.max_density.map_or(true, |d| item.density() <= d)
    }
}

/// Order in which cell members are preferred when the solution takes a
/// prefix; ties always break by ascending item id.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MemberOrder {
    /// Hypercube rule: non-decreasing side length.
    SideAsc,
    /// Rectangle rule: non-increasing profit.
    ProfitDesc,
}

impl MemberOrder {
    /// Sorts member references into selection order.
    pub fn sort_members<'a>(&self, members: &mut Vec<&'a Item>) {
        match self {
            MemberOrder::SideAsc => {
                members.sort_by(|a, b| a.max_side().cmp(&b.max_side()).then(a.id.cmp(&b.id)))
            }
            MemberOrder::ProfitDesc => {
                members.sort_by(|a, b| b.profit.cmp(&a.profit).then(a.id.cmp(&b.id)))
            }
        }
    }
}

/// Per-box share of a cell's selected items.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellAssign {
    pub box_idx: usize,
    pub count: u64,
    #[serde(default)]
    pub rotated: bool,
}

/// One (partition, class tuple) selection: after ordering the cell members,
/// skip `skip` of them and take the next `take`, distributing them over the
/// listed boxes in order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SelectionCell {
    pub filter: AttrFilter,
    pub order: MemberOrder,
    #[serde(default)]
    pub skip: u64,
    pub take: u64,
    pub assigns: Vec<CellAssign>,
    /// Rounded-profit contribution of this cell to the estimate.
    pub estimate: u128,
}

impl SelectionCell {
    pub fn assigned_total(&self) -> u64 {
        self.assigns.iter().map(|a| a.count).sum()
    }
}

/// Class-count representation of a solution: boxes with positions, resolved
/// thresholds and the selection cells that implicitly name the chosen items.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ImplicitSolution {
    pub mode: Mode,
    pub n_side: u64,
    pub d: usize,
    pub boxes: Vec<PlacedBox>,
    pub thresholds: Vec<u64>,
    pub cells: Vec<SelectionCell>,
    pub total_profit_estimate: u128,
}

impl ImplicitSolution {
    pub fn empty(mode: Mode, n_side: u64, d: usize) -> Self {
        ImplicitSolution {
            mode,
            n_side,
            d,
            boxes: Vec::new(),
            thresholds: Vec::new(),
            cells: Vec::new(),
            total_profit_estimate: 0,
        }
    }

    /// The cell an item belongs to, if any. Cells are built over disjoint
    /// item families so at most one can match.
    pub fn cell_of(&self, item: &Item) -> Option<&SelectionCell> {
        self.cells.iter().find(|c| c.filter.matches(item))
    }
}

use crate::error::CoreError;
use crate::item::{Instance, ItemId};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// One placed item: origin corner plus an optional 90° rotation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Placement {
    pub id: ItemId,
    pub origin: Vec<i64>,
    #[serde(default, rename = "rot")]
    pub rotated: bool,
}

/// Explicit axis-aligned packing, verifiable against an instance.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Packing {
    pub placements: Vec<Placement>,
}

impl Packing {
    pub fn push(&mut self, id: ItemId, origin: Vec<i64>, rotated: bool) {
        self.placements.push(Placement {
            id,
            origin,
            rotated,
        });
    }

    pub fn ids(&self) -> impl Iterator<Item = &ItemId> {
        self.placements.iter().map(|p| &p.id)
    }

    /// Total true profit of the placed items.
    pub fn profit(&self, instance: &Instance) -> Result<u128, CoreError> {
        let mut total = 0u128;
        for p in &self.placements {
            let item = instance
                .item(&p.id)
                .ok_or_else(|| CoreError::UnknownItem(p.id.0.clone()))?;
            total += item.profit as u128;
        }
        Ok(total)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    OutOfBounds { id: ItemId },
    Overlap { a: ItemId, b: ItemId },
    RotationNotAllowed { id: ItemId },
    BadDimension { id: ItemId },
}

#[derive(Clone, Debug)]
pub struct VerifyReport {
    pub feasible: bool,
    pub violations: Vec<Violation>,
}

/// Checks containment in [0,N]^d and pairwise interior-disjointness.
/// Closed boxes may share boundaries; overlap means open interiors meet.
/// Unknown or duplicate ids are errors rather than violations.
pub fn verify_packing(instance: &Instance, packing: &Packing) -> Result<VerifyReport, CoreError> {
    let mut seen: BTreeMap<&ItemId, ()> = BTreeMap::new();
    let mut boxes: Vec<(&Placement, Vec<(i64, i64)>)> = Vec::with_capacity(packing.placements.len());
    let mut violations = Vec::new();

    for p in &packing.placements {
        let item = instance
            .item(&p.id)
            .ok_or_else(|| CoreError::UnknownItem(p.id.0.clone()))?;
        if seen.insert(&p.id, ()).is_some() {
            return Err(CoreError::DuplicateItem(p.id.0.clone()));
        }
        if p.rotated && !instance.mode.allows_rotation() {
            violations.push(Violation::RotationNotAllowed { id: p.id.clone() });
            continue;
        }
        if p.origin.len() != instance.d {
            violations.push(Violation::BadDimension { id: p.id.clone() });
            continue;
        }
        let extents = item.extents(instance.d, p.rotated);
        let mut intervals = Vec::with_capacity(instance.d);
        let mut inside = true;
        for (o, e) in p.origin.iter().zip(extents.iter()) {
            let hi = o.checked_add(*e as i64);
            match hi {
                Some(hi) if *o >= 0 && hi <= instance.n_side as i64 => intervals.push((*o, hi)),
                _ => {
                    inside = false;
                    break;
                }
            }
        }
        if !inside {
            violations.push(Violation::OutOfBounds { id: p.id.clone() });
            continue;
        }
        boxes.push((p, intervals));
    }

    for i in 0..boxes.len() {
        for j in (i + 1)..boxes.len() {
            let (pa, ia) = &boxes[i];
            let (pb, ib) = &boxes[j];
            let overlap = ia
                .iter()
                .zip(ib.iter())
                .all(|((alo, ahi), (blo, bhi))| alo < bhi && blo < ahi);
            if overlap {
                violations.push(Violation::Overlap {
                    a: pa.id.clone(),
                    b: pb.id.clone(),
                });
            }
        }
    }

    Ok(VerifyReport {
        feasible: violations.is_empty(),
        violations,
    })
}

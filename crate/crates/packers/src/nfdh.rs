use crate::{Fragment, PackItem};
use geoknap_core::Placement;

/// One run of shelves opened by a single recursion level; heights are
/// recorded in packing order.
#[derive(Clone, Debug)]
pub struct ShelfRun {
    pub axis: usize,
    pub heights: Vec<u64>,
}

/// NFDH gave up: the prefix that fits plus the first item that does not.
#[derive(Clone, Debug)]
pub struct NfdhFailure {
    pub packed: Fragment,
    pub first_unplaced: geoknap_core::ItemId,
}

/// Next-Fit-Decreasing-Height in d dimensions.
///
/// Dimensions are internally permuted so box lengths are non-increasing and
/// shelving runs along the smallest one; items are sorted by non-increasing
/// extent in that axis (ties by id) and consumed as a prefix: the first item
/// that cannot be placed stops the whole run.
pub fn nfdh_pack(box_lengths: &[u64], items: Vec<PackItem>) -> Result<Fragment, NfdhFailure> {
    let d = box_lengths.len();
    assert!(d >= 1, "box must have at least one dimension");
    assert!(
        items.iter().all(|it| it.extents.len() == d),
        "item dimension mismatch"
    );

    // perm[k] = original axis stored at permuted position k, lengths non-increasing
    let mut perm: Vec<usize> = (0..d).collect();
    perm.sort_by(|&a, &b| box_lengths[b].cmp(&box_lengths[a]).then(a.cmp(&b)));
    let sorted_box: Vec<u64> = perm.iter().map(|&k| box_lengths[k]).collect();

    let mut items: Vec<(PackItem, Vec<u64>)> = items
        .into_iter()
        .map(|it| {
            let ext: Vec<u64> = perm.iter().map(|&k| it.extents[k]).collect();
            (it, ext)
        })
        .collect();
    items.sort_by(|a, b| b.1[d - 1].cmp(&a.1[d - 1]).then(a.0.id.cmp(&b.0.id)));

    let mut origins: Vec<Vec<i64>> = Vec::with_capacity(items.len());
    let mut runs: Vec<ShelfRun> = Vec::new();
    let packed_until = pack_axis(d - 1, &sorted_box, &items, 0, &mut origins, &mut runs);

    let mut fragment = Fragment::default();
    for (idx, origin) in origins.iter().enumerate() {
        let (it, _) = &items[idx];
        // un-permute coordinates back to the original axis order
        let mut unperm = vec![0i64; d];
        for (k, &orig_axis) in perm.iter().enumerate() {
            unperm[orig_axis] = origin[k];
        }
        fragment.placements.push(Placement {
            id: it.id.clone(),
            origin: unperm,
            rotated: it.rotated,
        });
    }
    fragment.shelf_runs = runs;

    if packed_until == items.len() {
        Ok(fragment)
    } else {
        Err(NfdhFailure {
            first_unplaced: items[packed_until].0.id.clone(),
            packed: fragment,
        })
    }
}

/// Packs `items[start..]` into the box restricted to axes `0..=axis`,
/// appending one origin (in permuted coordinates, length axis+1 extended by
/// the caller) per placed item. Returns the index of the first unplaced item.
fn pack_axis(
    axis: usize,
    sorted_box: &[u64],
    items: &[(PackItem, Vec<u64>)],
    start: usize,
    origins: &mut Vec<Vec<i64>>,
    runs: &mut Vec<ShelfRun>,
) -> usize {
    if axis == 0 {
        // Base case: plain next-fit along the single remaining axis.
        let cap = sorted_box[0];
        let mut off: u64 = 0;
        let mut i = start;
        while i < items.len() {
            let e = items[i].1[0];
            if e > cap || off + e > cap {
                break;
            }
            origins.push(vec![off as i64]);
            off += e;
            i += 1;
        }
        return i;
    }

    let cap = sorted_box[axis];
    let mut off: u64 = 0;
    let mut i = start;
    let mut run = ShelfRun {
        axis,
        heights: Vec::new(),
    };
    while i < items.len() {
        let shelf_h = items[i].1[axis];
        if shelf_h > cap - off {
            break;
        }
        let before = origins.len();
        let next = pack_axis(axis - 1, sorted_box, items, i, origins, runs);
        if next == i {
            // the shelf opener itself does not fit the cross-section
            origins.truncate(before);
            break;
        }
        for origin in origins[before..].iter_mut() {
            origin.push(off as i64);
        }
        run.heights.push(shelf_h);
        off += shelf_h;
        i = next;
    }
    if !run.heights.is_empty() {
        runs.push(run);
    }
    i
}

use crate::dynamic::DynTree;
use crate::static_tree::{Point, RangeQ};
use crate::{IndexError, IntRange, Key};
use geoknap_core::Frac;

/// The hypercube item data structure: points keyed by (side, profit) with
/// exact counting, reporting and order statistics over closed ranges.
pub struct ItemIndex2D {
    tree: DynTree<2>,
}

fn q2(s: IntRange, p: IntRange) -> [RangeQ; 2] {
    [RangeQ::ints(s.0, s.1), RangeQ::ints(p.0, p.1)]
}

impl Default for ItemIndex2D {
    fn default() -> Self {
        Self::new()
    }
}

impl ItemIndex2D {
    pub fn new() -> Self {
        ItemIndex2D {
            tree: DynTree::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.tree.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tree.is_empty()
    }

    pub fn insert(&mut self, key: Key, side: u64, profit: u64) -> Result<(), IndexError> {
        self.tree.insert(Point {
            coords: [Frac::int(side), Frac::int(profit)],
            profit,
            width: side,
            key,
        })
    }

    pub fn delete(&mut self, key: Key) -> Result<(), IndexError> {
        self.tree.delete(key)
    }

    pub fn count(&self, side: IntRange, profit: IntRange) -> u64 {
        self.tree.query(&q2(side, profit)).count
    }

    pub fn sum_profit(&self, side: IntRange, profit: IntRange) -> u128 {
        self.tree.query(&q2(side, profit)).sum_profit
    }

    /// Live keys in the box, ascending by key.
    pub fn report(&self, side: IntRange, profit: IntRange) -> Vec<Key> {
        self.tree.report(&q2(side, profit))
    }

    /// k-th smallest side among items in the box (1-based).
    pub fn kth_smallest_side(&self, k: u64, side: IntRange, profit: IntRange) -> Option<u64> {
        self.tree.kth_smallest_int(0, k, &q2(side, profit))
    }

    pub fn kth_smallest_profit(&self, k: u64, side: IntRange, profit: IntRange) -> Option<u64> {
        self.tree.kth_smallest_int(1, k, &q2(side, profit))
    }

    /// Lower median of sides within the box.
    pub fn median_side(&self, side: IntRange, profit: IntRange) -> Option<u64> {
        self.tree.median_int(0, &q2(side, profit))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ALL;
    use rand::{Rng, SeedableRng};

    #[test]
    fn insert_count_delete_example() {
        let mut idx = ItemIndex2D::new();
        idx.insert(1, 3, 5).unwrap();
        assert_eq!(idx.count((3, 3), (5, 5)), 1);
        idx.delete(1).unwrap();
        assert_eq!(idx.count((3, 3), (5, 5)), 0);
    }

    #[test]
    fn empty_index_answers_zero() {
        let idx = ItemIndex2D::new();
        assert_eq!(idx.count(ALL, ALL), 0);
        assert!(idx.report(ALL, ALL).is_empty());
        assert_eq!(idx.kth_smallest_side(1, ALL, ALL), None);
    }

    #[test]
    fn report_example() {
        let mut idx = ItemIndex2D::new();
        idx.insert(0, 2, 1).unwrap();
        idx.insert(1, 4, 9).unwrap();
        assert_eq!(idx.count((1, 3), ALL), 1);
        assert_eq!(idx.report((1, 3), ALL), vec![0]);
    }

    #[test]
    fn filtered_kth_matches_sort_oracle() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(31);
        let mut idx = ItemIndex2D::new();
        let mut pts = Vec::new();
        for key in 0..500u32 {
            let s = rng.gen_range(1..100u64);
            let p = rng.gen_range(1..100u64);
            idx.insert(key, s, p).unwrap();
            pts.push((s, p));
        }
        for _ in 0..100 {
            let plo = rng.gen_range(1..100u64);
            let phi = rng.gen_range(plo..=100u64);
            let mut sides: Vec<u64> = pts
                .iter()
                .filter(|(_, p)| (plo..=phi).contains(p))
                .map(|&(s, _)| s)
                .collect();
            sides.sort_unstable();
            if sides.is_empty() {
                continue;
            }
            let k = rng.gen_range(1..=sides.len() as u64);
            assert_eq!(
                idx.kth_smallest_side(k, ALL, (plo, phi)),
                Some(sides[k as usize - 1])
            );
        }
    }
}

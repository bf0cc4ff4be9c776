use crate::static_tree::{Aggregate, Point, RangeQ, StaticTree};
use crate::{IndexError, Key};
use std::collections::BTreeMap;

/// Dynamic wrapper over [`StaticTree`]: inserts go through logarithmic
/// rebuilding (a binary counter of static shells), deletes into a subtracted
/// shadow of the same form. When the shadow reaches half of the stored
/// points everything is flattened and rebuilt from the live set.
pub struct DynTree<const D: usize> {
    shells: Vec<Option<StaticTree<D>>>,
    shadow: Vec<Option<StaticTree<D>>>,
    live: BTreeMap<Key, Point<D>>,
    shadow_len: usize,
}

impl<const D: usize> Default for DynTree<D> {
    fn default() -> Self {
        Self::new()
    }
}

impl<const D: usize> DynTree<D> {
    pub fn new() -> Self {
        DynTree {
            shells: Vec::new(),
            shadow: Vec::new(),
            live: BTreeMap::new(),
            shadow_len: 0,
        }
    }

    pub fn len(&self) -> usize {
        self.live.len()
    }

    pub fn is_empty(&self) -> bool {
        self.live.is_empty()
    }

    pub fn contains_key(&self, key: Key) -> bool {
        self.live.contains_key(&key)
    }

    pub fn point(&self, key: Key) -> Option<&Point<D>> {
        self.live.get(&key)
    }

    pub fn insert(&mut self, p: Point<D>) -> Result<(), IndexError> {
        if self.live.contains_key(&p.key) {
            return Err(IndexError::DuplicateKey(p.key));
        }
        self.live.insert(p.key, p);
        Self::carry(&mut self.shells, vec![p]);
        Ok(())
    }

    pub fn delete(&mut self, key: Key) -> Result<(), IndexError> {
        let p = self.live.remove(&key).ok_or(IndexError::AbsentKey(key))?;
        Self::carry(&mut self.shadow, vec![p]);
        self.shadow_len += 1;
        if self.shadow_len * 2 >= self.live.len() + self.shadow_len {
            self.flatten();
        }
        Ok(())
    }

    /// Binary-counter merge: a new group of points cascades upward, merging
    /// with occupied slots until it lands in an empty one.
    fn carry(levels: &mut Vec<Option<StaticTree<D>>>, mut pts: Vec<Point<D>>) {
        let mut i = 0;
        loop {
            if i == levels.len() {
                levels.push(Some(StaticTree::build(pts)));
                return;
            }
            match levels[i].take() {
                None => {
                    levels[i] = Some(StaticTree::build(pts));
                    return;
                }
                Some(shell) => {
                    pts.extend_from_slice(shell.points());
                    i += 1;
                }
            }
        }
    }

    fn flatten(&mut self) {
        self.shells.clear();
        self.shadow.clear();
        self.shadow_len = 0;
        if !self.live.is_empty() {
            let pts: Vec<Point<D>> = self.live.values().copied().collect();
            self.shells.push(Some(StaticTree::build(pts)));
        }
    }

    pub fn query(&self, q: &[RangeQ; D]) -> Aggregate {
        let mut out = Aggregate::default();
        for shell in self.shells.iter().flatten() {
            out.add(&shell.query(q));
        }
        for shell in self.shadow.iter().flatten() {
            out.sub(&shell.query(q));
        }
        out
    }

    /// Keys of live points inside the box, ascending.
    pub fn report(&self, q: &[RangeQ; D]) -> Vec<Key> {
        let mut keys = Vec::new();
        for shell in self.shells.iter().flatten() {
            shell.report(q, &mut keys);
        }
        keys.retain(|k| self.live.contains_key(k));
        keys.sort_unstable();
        keys
    }

    /// k-th smallest (1-based) integer value of coordinate `dim` among live
    /// points inside the box; the box's own `dim` range is respected.
    pub fn kth_smallest_int(&self, dim: usize, k: u64, q: &[RangeQ; D]) -> Option<u64> {
        if k == 0 || self.query(q).count < k {
            return None;
        }
        debug_assert!(q[dim].lo.den == 1 && (q[dim].hi.den == 1 || q[dim].hi == geoknap_core::Frac::MAX));
        let mut lo = q[dim].lo.num; // invariant: count(<= lo-1) < k
        let mut hi = u64::MAX;
        // find smallest v with count(dim <= v) >= k
        while lo < hi {
            let mid = lo + (hi - lo) / 2;
            let mut sub = *q;
            sub[dim].hi = geoknap_core::Frac::int(mid).min(q[dim].hi);
            if self.query(&sub).count >= k {
                hi = mid;
            } else {
                lo = mid + 1;
            }
        }
        Some(lo)
    }

    /// Lower median of coordinate `dim` among live points inside the box.
    pub fn median_int(&self, dim: usize, q: &[RangeQ; D]) -> Option<u64> {
        let m = self.query(q).count;
        if m == 0 {
            return None;
        }
        self.kth_smallest_int(dim, m.div_ceil(2), q)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use geoknap_core::Frac;
    use rand::{Rng, SeedableRng};

    fn pt(key: Key, a: u64, b: u64) -> Point<2> {
        Point {
            coords: [Frac::int(a), Frac::int(b)],
            profit: b,
            width: a,
            key,
        }
    }

    #[test]
    fn insert_then_delete_round_trip() {
        let mut t = DynTree::<2>::new();
        t.insert(pt(0, 3, 5)).unwrap();
        let q = [RangeQ::ints(3, 3), RangeQ::ints(5, 5)];
        assert_eq!(t.query(&q).count, 1);
        t.delete(0).unwrap();
        assert_eq!(t.query(&q).count, 0);
        assert_eq!(t.delete(0), Err(IndexError::AbsentKey(0)));
    }

    #[test]
    fn duplicate_key_rejected() {
        let mut t = DynTree::<2>::new();
        t.insert(pt(7, 1, 1)).unwrap();
        assert_eq!(t.insert(pt(7, 2, 2)), Err(IndexError::DuplicateKey(7)));
    }

    #[test]
    fn random_interleaving_matches_naive_filter() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(42);
        let mut t = DynTree::<2>::new();
        let mut naive: Vec<Point<2>> = Vec::new();
        let mut next_key: Key = 0;
        for _ in 0..3000 {
            let roll: f64 = rng.gen();
            if roll < 0.45 || naive.is_empty() {
                let p = pt(next_key, rng.gen_range(1..60), rng.gen_range(0..60));
                next_key += 1;
                t.insert(p).unwrap();
                naive.push(p);
            } else if roll < 0.65 {
                let i = rng.gen_range(0..naive.len());
                let p = naive.swap_remove(i);
                t.delete(p.key).unwrap();
            } else {
                let mk = |rng: &mut rand_chacha::ChaCha8Rng| {
                    let a = rng.gen_range(0..70u64);
                    let b = rng.gen_range(0..70u64);
                    RangeQ::ints(a.min(b), a.max(b))
                };
                let q = [mk(&mut rng), mk(&mut rng)];
                let expect = naive
                    .iter()
                    .filter(|p| {
                        q[0].lo <= p.coords[0]
                            && p.coords[0] <= q[0].hi
                            && q[1].lo <= p.coords[1]
                            && p.coords[1] <= q[1].hi
                    })
                    .count() as u64;
                assert_eq!(t.query(&q).count, expect);
                let mut ids: Vec<Key> = naive
                    .iter()
                    .filter(|p| {
                        q[0].lo <= p.coords[0]
                            && p.coords[0] <= q[0].hi
                            && q[1].lo <= p.coords[1]
                            && p.coords[1] <= q[1].hi
                    })
                    .map(|p| p.key)
                    .collect();
                ids.sort_unstable();
                assert_eq!(t.report(&q), ids);
            }
        }
    }

    #[test]
    fn kth_smallest_matches_sorting() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(9);
        let mut t = DynTree::<2>::new();
        let mut vals = Vec::new();
        for key in 0..200u32 {
            let v = rng.gen_range(1..50u64);
            t.insert(pt(key, v, 1)).unwrap();
            vals.push(v);
        }
        vals.sort_unstable();
        let q = [RangeQ::all(), RangeQ::all()];
        for k in 1..=vals.len() as u64 {
            assert_eq!(t.kth_smallest_int(0, k, &q), Some(vals[k as usize - 1]));
        }
        assert_eq!(t.kth_smallest_int(0, vals.len() as u64 + 1, &q), None);
    }
}

use crate::dynamic::DynTree;
use crate::static_tree::{Aggregate, Point, RangeQ};
use crate::{IndexError, IntRange, Key};
use geoknap_core::Frac;

/// Integer attributes of the rectangle index (density is the fourth
/// coordinate but is queried through [`RectIndex4D::density_range`]).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RectAttr {
    Height,
    Width,
    Profit,
}

impl RectAttr {
    fn dim(self) -> usize {
        match self {
            RectAttr::Height => 0,
            RectAttr::Width => 1,
            RectAttr::Profit => 2,
        }
    }
}

/// Query box over (height, width, profit, density).
#[derive(Clone, Copy, Debug)]
pub struct RectQuery {
    pub h: IntRange,
    pub w: IntRange,
    pub p: IntRange,
    pub dens_lo: Frac,
    pub dens_hi: Frac,
}

impl Default for RectQuery {
    fn default() -> Self {
        RectQuery {
            h: (0, u64::MAX),
            w: (0, u64::MAX),
            p: (0, u64::MAX),
            dens_lo: Frac::ZERO,
            dens_hi: Frac::MAX,
        }
    }
}

impl RectQuery {
    pub fn with_h(mut self, r: IntRange) -> Self {
        self.h = r;
        self
    }
    pub fn with_w(mut self, r: IntRange) -> Self {
        self.w = r;
        self
    }
    pub fn with_p(mut self, r: IntRange) -> Self {
        self.p = r;
        self
    }
    pub fn with_dens_max(mut self, hi: Frac) -> Self {
        self.dens_hi = hi;
        self
    }

    fn ranges(&self) -> [RangeQ; 4] {
        [
            RangeQ::ints(self.h.0, self.h.1),
            RangeQ::ints(self.w.0, self.w.1),
            RangeQ::ints(self.p.0, self.p.1),
            RangeQ {
                lo: self.dens_lo,
                hi: self.dens_hi,
            },
        ]
    }
}

/// The rectangle data structure: points keyed by (h, w, p, p/w) with three
/// maintained aggregates (count, Σ profit, Σ width) over 4-D closed boxes.
pub struct RectIndex4D {
    tree: DynTree<4>,
}

impl Default for RectIndex4D {
    fn default() -> Self {
        Self::new()
    }
}

impl RectIndex4D {
    pub fn new() -> Self {
        RectIndex4D {
            tree: DynTree::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.tree.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tree.is_empty()
    }

    pub fn insert(&mut self, key: Key, h: u64, w: u64, p: u64) -> Result<(), IndexError> {
        self.tree.insert(Point {
            coords: [Frac::int(h), Frac::int(w), Frac::int(p), Frac::new(p, w)],
            profit: p,
            width: w,
            key,
        })
    }

    pub fn delete(&mut self, key: Key) -> Result<(), IndexError> {
        self.tree.delete(key)
    }

    pub fn aggregate(&self, q: &RectQuery) -> Aggregate {
        self.tree.query(&q.ranges())
    }

    pub fn count(&self, q: &RectQuery) -> u64 {
        self.aggregate(q).count
    }

    pub fn sum_profit(&self, q: &RectQuery) -> u128 {
        self.aggregate(q).sum_profit
    }

    pub fn sum_width(&self, q: &RectQuery) -> u128 {
        self.aggregate(q).sum_width
    }

    pub fn report(&self, q: &RectQuery) -> Vec<Key> {
        self.tree.report(&q.ranges())
    }

    /// k-th smallest value of an integer attribute among matching items.
    pub fn kth_smallest(&self, attr: RectAttr, k: u64, q: &RectQuery) -> Option<u64> {
        self.tree.kth_smallest_int(attr.dim(), k, &q.ranges())
    }

    pub fn median(&self, attr: RectAttr, q: &RectQuery) -> Option<u64> {
        self.tree.median_int(attr.dim(), &q.ranges())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};

    #[derive(Clone, Copy)]
    struct Rec {
        key: Key,
        h: u64,
        w: u64,
        p: u64,
    }

    fn matches(r: &Rec, q: &RectQuery) -> bool {
        let dens = Frac::new(r.p, r.w);
        (q.h.0..=q.h.1).contains(&r.h)
            && (q.w.0..=q.w.1).contains(&r.w)
            && (q.p.0..=q.p.1).contains(&r.p)
            && q.dens_lo <= dens
            && dens <= q.dens_hi
    }

    #[test]
    fn aggregates_match_naive_scan() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(23);
        let mut idx = RectIndex4D::new();
        let mut recs = Vec::new();
        for key in 0..200u32 {
            let r = Rec {
                key,
                h: rng.gen_range(1..40),
                w: rng.gen_range(1..40),
                p: rng.gen_range(0..60),
            };
            idx.insert(r.key, r.h, r.w, r.p).unwrap();
            recs.push(r);
        }
        for _ in 0..100 {
            let mk = |rng: &mut rand_chacha::ChaCha8Rng| {
                let a = rng.gen_range(0..45u64);
                let b = rng.gen_range(0..45u64);
                (a.min(b), a.max(b))
            };
            let q = RectQuery::default()
                .with_h(mk(&mut rng))
                .with_w(mk(&mut rng))
                .with_p(mk(&mut rng))
                .with_dens_max(Frac::new(rng.gen_range(0..80), rng.gen_range(1..20)));
            let agg = idx.aggregate(&q);
            let hits: Vec<&Rec> = recs.iter().filter(|r| matches(r, &q)).collect();
            assert_eq!(agg.count as usize, hits.len());
            assert_eq!(
                agg.sum_profit,
                hits.iter().map(|r| r.p as u128).sum::<u128>()
            );
            assert_eq!(agg.sum_width, hits.iter().map(|r| r.w as u128).sum::<u128>());
        }
    }

    #[test]
    fn delete_of_absent_key_errors() {
        let mut idx = RectIndex4D::new();
        idx.insert(3, 2, 2, 2).unwrap();
        assert!(idx.delete(9).is_err());
        assert!(idx.delete(3).is_ok());
        assert!(idx.delete(3).is_err());
    }

    #[test]
    fn deterministic_report_across_identical_histories() {
        let build = || {
            let mut idx = RectIndex4D::new();
            for key in 0..50u32 {
                idx.insert(key, (key as u64 % 7) + 1, (key as u64 % 5) + 1, key as u64)
                    .unwrap();
            }
            for key in (0..50u32).step_by(3) {
                idx.delete(key).unwrap();
            }
            idx
        };
        let q = RectQuery::default().with_h((1, 5));
        assert_eq!(build().report(&q), build().report(&q));
    }
}

use crate::eps::{rat_int, Epsilon, Rat};
use crate::item::Item;

/// Five-way rectangle partition relative to the thresholds ε_large·N and
/// ε_small·N.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RectClass {
    Large,
    Horizontal,
    Vertical,
    Small,
    Intermediate,
}

/// One (ε_large, ε_small) candidate from the geometric cascade.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EpsPair {
    pub large: Rat,
    pub small: Rat,
}

impl EpsPair {
    pub fn new(large: Rat, small: Rat) -> Self {
        assert!(large >= small, "eps_large must dominate eps_small");
        EpsPair { large, small }
    }
}

/// Classifies a rectangle. Comparisons are exactly as defined: strict `>`
/// against ε_large·N for large/horizontal/vertical, strict `<` against
/// ε_small·N for small, everything left over is intermediate.
pub fn classify_rect_item(item: &Item, n_side: u64, pair: &EpsPair) -> RectClass {
    let h = rat_int(item.height());
    let w = rat_int(item.width());
    let big = &pair.large * rat_int(n_side);
    let tiny = &pair.small * rat_int(n_side);
    if h > big && w > big {
        RectClass::Large
    } else if w > big && h <= tiny {
        RectClass::Horizontal
    } else if h > big && w <= tiny {
        RectClass::Vertical
    } else if h < tiny && w < tiny {
        RectClass::Small
    } else {
        RectClass::Intermediate
    }
}

/// The (ε_large, ε_small) cascade: ε_large^{(k)} = ε / c^k and
/// ε_small^{(k)} = ε / c^{k+1} for k = 0..1/ε. Exactly one of these pairs
/// leaves only an ε-fraction of profit in the intermediate band for any
/// fixed instance; the solver tries them all and keeps the best result.
pub fn enumerate_eps_pairs(eps: &Epsilon, c: u64) -> Vec<EpsPair> {
    let c = c.max(2);
    let steps = eps.inv() + 1;
    let cr = rat_int(c);
    let mut level = eps.as_rat();
    let mut out = Vec::with_capacity(steps as usize);
    for _ in 0..steps {
        let next = &level / &cr;
        out.push(EpsPair::new(level.clone(), next.clone()));
        level = next;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::BigInt;

    fn rat(n: i64, d: i64) -> Rat {
        Rat::new(BigInt::from(n), BigInt::from(d))
    }

    fn pair_100() -> EpsPair {
        // thresholds 10 and 1 on N = 100
        EpsPair::new(rat(1, 10), rat(1, 100))
    }

    #[test]
    fn classification_examples() {
        let p = pair_100();
        assert_eq!(
            classify_rect_item(&Item::rect("a", 20, 20, 1), 100, &p),
            RectClass::Large
        );
        assert_eq!(
            classify_rect_item(&Item::rect("b", 1, 20, 1), 100, &p),
            RectClass::Horizontal
        );
        assert_eq!(
            classify_rect_item(&Item::rect("c", 20, 1, 1), 100, &p),
            RectClass::Vertical
        );
        assert_eq!(
            classify_rect_item(&Item::rect("d", 5, 5, 1), 100, &p),
            RectClass::Intermediate
        );
        // strictly below the small threshold in both dimensions
        let tiny_pair = EpsPair::new(rat(1, 10), rat(1, 20)); // thresholds 10 and 5
        assert_eq!(
            classify_rect_item(&Item::rect("e", 4, 4, 1), 100, &tiny_pair),
            RectClass::Small
        );
    }

    #[test]
    fn cascade_example() {
        let eps = Epsilon::new(2).unwrap();
        let pairs = enumerate_eps_pairs(&eps, 4);
        assert_eq!(pairs.len(), 3); // 1/eps + 1
        assert_eq!(pairs[0], EpsPair::new(rat(1, 2), rat(1, 8)));
        assert_eq!(pairs[1], EpsPair::new(rat(1, 8), rat(1, 32)));
        assert_eq!(pairs[2], EpsPair::new(rat(1, 32), rat(1, 128)));
    }

    #[test]
    fn cascade_length_matches_inv_eps() {
        for inv in [1u64, 2, 3, 5, 8] {
            let eps = Epsilon::new(inv).unwrap();
            assert_eq!(enumerate_eps_pairs(&eps, 7).len() as u64, inv + 1);
        }
    }

    #[test]
    fn buckets_partition_all_items() {
        // Every item lands in exactly one bucket regardless of order.
        let p = pair_100();
        let mut items = Vec::new();
        for h in [1u64, 2, 5, 10, 11, 20, 99] {
            for w in [1u64, 2, 5, 10, 11, 20, 99] {
                items.push(Item::rect(format!("i{h}x{w}"), h, w, 1));
            }
        }
        let forward: Vec<_> = items
            .iter()
            .map(|i| classify_rect_item(i, 100, &p))
            .collect();
        items.reverse();
        let mut backward: Vec<_> = items
            .iter()
            .map(|i| classify_rect_item(i, 100, &p))
            .collect();
        backward.reverse();
        assert_eq!(forward, backward);
    }
}

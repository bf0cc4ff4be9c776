/// Weight-balanced order-statistic tree over a value multiset. Duplicate
/// values live in one node with a multiplicity; subtree weights make k-th
/// smallest and rank queries O(log n). Rebalancing rebuilds subtrees whose
/// children exceed an α-fraction of the node weight, which also purges
/// nodes whose multiplicity dropped to zero.
pub struct OrderTree<K: Ord + Clone> {
    root: Option<Box<Node<K>>>,
}

struct Node<K> {
    key: K,
    mult: u64,
    size: u64,    // Σ mult over subtree
    nodes: usize, // allocated nodes in subtree (incl. zero-mult ones)
    left: Option<Box<Node<K>>>,
    right: Option<Box<Node<K>>>,
}

const ALPHA_NUM: usize = 3;
const ALPHA_DEN: usize = 4;

fn size<K>(n: &Option<Box<Node<K>>>) -> u64 {
    n.as_ref().map_or(0, |n| n.size)
}

fn nodes<K>(n: &Option<Box<Node<K>>>) -> usize {
    n.as_ref().map_or(0, |n| n.nodes)
}

impl<K: Ord + Clone> Node<K> {
    fn refresh(&mut self) {
        self.size = self.mult + size(&self.left) + size(&self.right);
        self.nodes = 1 + nodes(&self.left) + nodes(&self.right);
    }

    fn unbalanced(&self) -> bool {
        let l = nodes(&self.left);
        let r = nodes(&self.right);
        l.max(r) * ALPHA_DEN > self.nodes * ALPHA_NUM
    }

    fn flatten(self: Box<Self>, out: &mut Vec<(K, u64)>) {
        if let Some(l) = self.left {
            l.flatten(out);
        }
        if self.mult > 0 {
            out.push((self.key.clone(), self.mult));
        }
        if let Some(r) = self.right {
            r.flatten(out);
        }
    }
}

fn build_balanced<K: Ord + Clone>(items: &[(K, u64)]) -> Option<Box<Node<K>>> {
    if items.is_empty() {
        return None;
    }
    let mid = items.len() / 2;
    let mut n = Box::new(Node {
        key: items[mid].0.clone(),
        mult: items[mid].1,
        size: 0,
        nodes: 0,
        left: build_balanced(&items[..mid]),
        right: build_balanced(&items[mid + 1..]),
    });
    n.refresh();
    Some(n)
}

fn rebuild<K: Ord + Clone>(n: Box<Node<K>>) -> Option<Box<Node<K>>> {
    let mut items = Vec::with_capacity(n.nodes);
    n.flatten(&mut items);
    build_balanced(&items)
}

impl<K: Ord + Clone> Default for OrderTree<K> {
    fn default() -> Self {
        Self::new()
    }
}

impl<K: Ord + Clone> OrderTree<K> {
    pub fn new() -> Self {
        OrderTree { root: None }
    }

    pub fn len(&self) -> u64 {
        size(&self.root)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn insert(&mut self, key: K) {
        let root = self.root.take();
        self.root = Self::insert_at(root, key);
    }

    fn insert_at(n: Option<Box<Node<K>>>, key: K) -> Option<Box<Node<K>>> {
        let mut n = match n {
            None => {
                return Some(Box::new(Node {
                    key,
                    mult: 1,
                    size: 1,
                    nodes: 1,
                    left: None,
                    right: None,
                }))
            }
            Some(n) => n,
        };
        match key.cmp(&n.key) {
            std::cmp::Ordering::Equal => n.mult += 1,
            std::cmp::Ordering::Less => n.left = Self::insert_at(n.left.take(), key),
            std::cmp::Ordering::Greater => n.right = Self::insert_at(n.right.take(), key),
        }
        n.refresh();
        if n.unbalanced() {
            rebuild(n)
        } else {
            Some(n)
        }
    }

    /// Removes one occurrence. Returns whether the key was present.
    pub fn remove(&mut self, key: &K) -> bool {
        let root = self.root.take();
        let (root, removed) = Self::remove_at(root, key);
        self.root = root;
        removed
    }

    fn remove_at(n: Option<Box<Node<K>>>, key: &K) -> (Option<Box<Node<K>>>, bool) {
        let mut n = match n {
            None => return (None, false),
            Some(n) => n,
        };
        let removed = match key.cmp(&n.key) {
            std::cmp::Ordering::Equal => {
                if n.mult == 0 {
                    false
                } else {
                    n.mult -= 1;
                    true
                }
            }
            std::cmp::Ordering::Less => {
                let (l, removed) = Self::remove_at(n.left.take(), key);
                n.left = l;
                removed
            }
            std::cmp::Ordering::Greater => {
                let (r, removed) = Self::remove_at(n.right.take(), key);
                n.right = r;
                removed
            }
        };
        n.refresh();
        // Purge when more than half of the allocated nodes are empty.
        let node = if n.size == 0 && n.nodes > 4 {
            rebuild(n)
        } else {
            Some(n)
        };
        (node, removed)
    }

    /// k-th smallest element, 1-based over multiplicities.
    pub fn kth(&self, k: u64) -> Option<&K> {
        if k == 0 || k > self.len() {
            return None;
        }
        let mut k = k;
        let mut cur = self.root.as_deref();
        while let Some(n) = cur {
            let left = size(&n.left);
            if k <= left {
                cur = n.left.as_deref();
            } else if k <= left + n.mult {
                return Some(&n.key);
            } else {
                k -= left + n.mult;
                cur = n.right.as_deref();
            }
        }
        None
    }

    /// Number of stored elements strictly smaller than `key`.
    pub fn rank_lt(&self, key: &K) -> u64 {
        let mut acc = 0;
        let mut cur = self.root.as_deref();
        while let Some(n) = cur {
            match key.cmp(&n.key) {
                std::cmp::Ordering::Greater => {
                    acc += size(&n.left) + n.mult;
                    cur = n.right.as_deref();
                }
                _ => cur = n.left.as_deref(),
            }
        }
        acc
    }

    /// Number of stored elements ≤ `key`.
    pub fn rank_le(&self, key: &K) -> u64 {
        let mut acc = 0;
        let mut cur = self.root.as_deref();
        while let Some(n) = cur {
            match key.cmp(&n.key) {
                std::cmp::Ordering::Less => cur = n.left.as_deref(),
                _ => {
                    acc += size(&n.left);
                    if *key >= n.key {
                        acc += n.mult;
                    }
                    cur = n.right.as_deref();
                }
            }
        }
        acc
    }

    pub fn min(&self) -> Option<&K> {
        self.kth(1)
    }

    pub fn max(&self) -> Option<&K> {
        self.kth(self.len())
    }

    /// Lower median (k = ⌈m/2⌉).
    pub fn median(&self) -> Option<&K> {
        self.kth(self.len().div_ceil(2))
    }

    pub fn iter_sorted(&self) -> Vec<(K, u64)> {
        fn walk<K: Clone>(n: &Option<Box<Node<K>>>, out: &mut Vec<(K, u64)>) {
            if let Some(n) = n {
                walk(&n.left, out);
                if n.mult > 0 {
                    out.push((n.key.clone(), n.mult));
                }
                walk(&n.right, out);
            }
        }
        let mut out = Vec::new();
        walk(&self.root, &mut out);
        out
    }
}

/// Least stored value `v` with rank in [lo_rank, hi_rank] (1-based, inclusive)
/// satisfying a predicate that is monotone non-decreasing in the value.
/// Invokes the predicate O(log n) times and returns `None` when nothing in
/// the window qualifies.
pub fn binary_search_threshold<K: Ord + Clone>(
    tree: &OrderTree<K>,
    lo_rank: u64,
    hi_rank: u64,
    mut pred: impl FnMut(&K) -> bool,
) -> Option<K> {
    let hi_rank = hi_rank.min(tree.len());
    if lo_rank == 0 || lo_rank > hi_rank {
        return None;
    }
    let mut lo = lo_rank;
    let mut hi = hi_rank;
    // invariant: every rank < lo fails; if any rank in window passes, the
    // least passing value is at some rank in [lo, hi].
    if !pred(tree.kth(hi)?) {
        return None;
    }
    while lo < hi {
        let mid = lo + (hi - lo) / 2;
        if pred(tree.kth(mid)?) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    tree.kth(lo).cloned()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};

    #[test]
    fn kth_examples() {
        let mut t = OrderTree::new();
        for v in [2u64, 5, 5, 9] {
            t.insert(v);
        }
        assert_eq!(t.kth(3), Some(&5));
        assert_eq!(t.kth(4), Some(&9));
        assert_eq!(t.kth(5), None);
    }

    #[test]
    fn median_examples() {
        let mut t = OrderTree::new();
        for v in [2u64, 5, 9] {
            t.insert(v);
        }
        assert_eq!(t.median(), Some(&5));
        t.insert(11);
        // lower median of {2,5,9,11}
        assert_eq!(t.median(), Some(&5));
    }

    #[test]
    fn random_ops_match_sorted_vec() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        let mut tree = OrderTree::new();
        let mut vec: Vec<u64> = Vec::new();
        for _ in 0..4000 {
            if rng.gen_bool(0.6) || vec.is_empty() {
                let v = rng.gen_range(0..200u64);
                tree.insert(v);
                vec.push(v);
                vec.sort_unstable();
            } else {
                let i = rng.gen_range(0..vec.len());
                let v = vec.remove(i);
                assert!(tree.remove(&v));
            }
            assert_eq!(tree.len() as usize, vec.len());
            if !vec.is_empty() {
                let k = rng.gen_range(1..=vec.len() as u64);
                assert_eq!(tree.kth(k), Some(&vec[k as usize - 1]));
                let probe = rng.gen_range(0..220u64);
                assert_eq!(
                    tree.rank_lt(&probe),
                    vec.iter().filter(|&&v| v < probe).count() as u64
                );
                assert_eq!(
                    tree.rank_le(&probe),
                    vec.iter().filter(|&&v| v <= probe).count() as u64
                );
            }
        }
    }

    #[test]
    fn threshold_search_examples() {
        let mut t = OrderTree::new();
        for v in [3u64, 7, 10] {
            t.insert(v);
        }
        assert_eq!(binary_search_threshold(&t, 1, 3, |&v| v >= 7), Some(7));
        assert_eq!(binary_search_threshold(&t, 1, 3, |_| false), None);
        assert_eq!(binary_search_threshold(&t, 1, 3, |_| true), Some(3));
    }

    #[test]
    fn threshold_search_matches_linear_scan() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(77);
        for _ in 0..300 {
            let n = rng.gen_range(1..40usize);
            let mut t = OrderTree::new();
            let mut vals: Vec<u64> = (0..n).map(|_| rng.gen_range(0..50)).collect();
            for &v in &vals {
                t.insert(v);
            }
            vals.sort_unstable();
            let cut = rng.gen_range(0..60u64); // random monotone step function
            let expect = vals.iter().copied().find(|&v| v >= cut);
            assert_eq!(
                binary_search_threshold(&t, 1, n as u64, |&v| v >= cut),
                expect
            );
        }
    }
}

use crate::Key;
use geoknap_core::Frac;

/// Secondary structures are only built above this node size; smaller slices
/// are scanned directly.
const BUCKET: usize = 8;

#[derive(Clone, Copy, Debug)]
pub struct Point<const D: usize> {
    pub coords: [Frac; D],
    pub profit: u64,
    pub width: u64,
    pub key: Key,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Aggregate {
    pub count: u64,
    pub sum_profit: u128,
    pub sum_width: u128,
}

impl Aggregate {
    fn add_point<const D: usize>(&mut self, p: &Point<D>) {
        self.count += 1;
        self.sum_profit += p.profit as u128;
        self.sum_width += p.width as u128;
    }

    pub fn add(&mut self, other: &Aggregate) {
        self.count += other.count;
        self.sum_profit += other.sum_profit;
        self.sum_width += other.sum_width;
    }

    pub fn sub(&mut self, other: &Aggregate) {
        self.count -= other.count;
        self.sum_profit -= other.sum_profit;
        self.sum_width -= other.sum_width;
    }

    fn diff(hi: &Aggregate, lo: &Aggregate) -> Aggregate {
        Aggregate {
            count: hi.count - lo.count,
            sum_profit: hi.sum_profit - lo.sum_profit,
            sum_width: hi.sum_width - lo.sum_width,
        }
    }
}

/// Closed query interval on one coordinate.
#[derive(Clone, Copy, Debug)]
pub struct RangeQ {
    pub lo: Frac,
    pub hi: Frac,
}

impl RangeQ {
    pub fn all() -> Self {
        RangeQ {
            lo: Frac::ZERO,
            hi: Frac::MAX,
        }
    }

    pub fn ints(lo: u64, hi: u64) -> Self {
        RangeQ {
            lo: Frac::int(lo),
            hi: Frac::int(hi),
        }
    }

    fn contains(&self, v: &Frac) -> bool {
        self.lo <= *v && *v <= self.hi
    }
}

fn in_box<const D: usize>(p: &Point<D>, q: &[RangeQ; D], from_dim: usize) -> bool {
    (from_dim..D).all(|k| q[k].contains(&p.coords[k]))
}

enum LayerKind<const D: usize> {
    /// Last dimension: prefix aggregates over the sorted order (len + 1 entries).
    Prefix(Vec<Aggregate>),
    /// Small slice: scan.
    Scan,
    Nodes(Box<Node<D>>),
}

struct Layer<const D: usize> {
    dim: usize,
    pts: Vec<Point<D>>,
    kind: LayerKind<D>,
}

struct Node<const D: usize> {
    lo: usize,
    hi: usize,
    sub: Option<Layer<D>>,
    children: Option<(Box<Node<D>>, Box<Node<D>>)>,
}

impl<const D: usize> Node<D> {
    fn build(lo: usize, hi: usize, pts: &[Point<D>], dim: usize) -> Node<D> {
        let len = hi - lo;
        let sub = if len > BUCKET {
            Some(Layer::build(dim + 1, pts[lo..hi].to_vec()))
        } else {
            None
        };
        let children = if len > BUCKET {
            let mid = lo + len / 2;
            Some((
                Box::new(Node::build(lo, mid, pts, dim)),
                Box::new(Node::build(mid, hi, pts, dim)),
            ))
        } else {
            None
        };
        Node {
            lo,
            hi,
            sub,
            children,
        }
    }
}

impl<const D: usize> Layer<D> {
    fn build(dim: usize, mut pts: Vec<Point<D>>) -> Layer<D> {
        pts.sort_by(|a, b| a.coords[dim].cmp(&b.coords[dim]).then(a.key.cmp(&b.key)));
        let kind = if dim == D - 1 {
            let mut prefix = Vec::with_capacity(pts.len() + 1);
            let mut acc = Aggregate::default();
            prefix.push(acc);
            for p in &pts {
                acc.add_point(p);
                prefix.push(acc);
            }
            LayerKind::Prefix(prefix)
        } else if pts.len() <= BUCKET {
            LayerKind::Scan
        } else {
            LayerKind::Nodes(Box::new(Node::build(0, pts.len(), &pts, dim)))
        };
        Layer { dim, pts, kind }
    }

    /// Index window [a, b) of points whose coordinate in this layer's
    /// dimension lies inside the query interval.
    fn window(&self, q: &RangeQ) -> (usize, usize) {
        let a = self.pts.partition_point(|p| p.coords[self.dim] < q.lo);
        let b = self.pts.partition_point(|p| p.coords[self.dim] <= q.hi);
        (a, b)
    }

    fn query(&self, q: &[RangeQ; D], out: &mut Aggregate) {
        match &self.kind {
            LayerKind::Prefix(prefix) => {
                let (a, b) = self.window(&q[self.dim]);
                if a < b {
                    out.add(&Aggregate::diff(&prefix[b], &prefix[a]));
                }
            }
            LayerKind::Scan => {
                for p in &self.pts {
                    if in_box(p, q, self.dim) {
                        out.add_point(p);
                    }
                }
            }
            LayerKind::Nodes(root) => {
                let (a, b) = self.window(&q[self.dim]);
                if a < b {
                    self.descend(root, a, b, q, &mut |layer_or_pts| match layer_or_pts {
                        Descend::Sub(layer) => layer.query(q, out),
                        Descend::Pts(pts) => {
                            for p in pts {
                                if in_box(p, q, self.dim + 1) {
                                    out.add_point(p);
                                }
                            }
                        }
                    });
                }
            }
        }
    }

    fn report(&self, q: &[RangeQ; D], out: &mut Vec<Key>) {
        match &self.kind {
            LayerKind::Prefix(_) => {
                let (a, b) = self.window(&q[self.dim]);
                out.extend(self.pts[a..b].iter().map(|p| p.key));
            }
            LayerKind::Scan => {
                out.extend(
                    self.pts
                        .iter()
                        .filter(|p| in_box(p, q, self.dim))
                        .map(|p| p.key),
                );
            }
            LayerKind::Nodes(root) => {
                let (a, b) = self.window(&q[self.dim]);
                if a < b {
                    self.descend(root, a, b, q, &mut |layer_or_pts| match layer_or_pts {
                        Descend::Sub(layer) => layer.report(q, out),
                        Descend::Pts(pts) => out.extend(
                            pts.iter()
                                .filter(|p| in_box(p, q, self.dim + 1))
                                .map(|p| p.key),
                        ),
                    });
                }
            }
        }
    }

    /// Canonical decomposition of the index window [a, b): full-cover nodes
    /// hand their secondary structure to `f`, bucket leaves hand raw points
    /// (already restricted to the window).
    fn descend<'a>(
        &'a self,
        node: &'a Node<D>,
        a: usize,
        b: usize,
        q: &[RangeQ; D],
        f: &mut impl FnMut(Descend<'a, D>),
    ) {
        if node.hi <= a || b <= node.lo {
            return;
        }
        if a <= node.lo && node.hi <= b {
            match &node.sub {
                Some(sub) => f(Descend::Sub(sub)),
                None => f(Descend::Pts(&self.pts[node.lo..node.hi])),
            }
            return;
        }
        match &node.children {
            Some((l, r)) => {
                self.descend(l, a, b, q, f);
                self.descend(r, a, b, q, f);
            }
            None => {
                let lo = node.lo.max(a);
                let hi = node.hi.min(b);
                if lo < hi {
                    f(Descend::Pts(&self.pts[lo..hi]));
                }
            }
        }
    }
}

enum Descend<'a, const D: usize> {
    Sub(&'a Layer<D>),
    Pts(&'a [Point<D>]),
}

/// Immutable layered range tree over D coordinates with count, Σprofit and
/// Σwidth aggregates.
pub struct StaticTree<const D: usize> {
    root: Layer<D>,
}

impl<const D: usize> StaticTree<D> {
    pub fn build(pts: Vec<Point<D>>) -> Self {
        StaticTree {
            root: Layer::build(0, pts),
        }
    }

    pub fn len(&self) -> usize {
        self.root.pts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.root.pts.is_empty()
    }

    pub fn points(&self) -> &[Point<D>] {
        &self.root.pts
    }

    pub fn query(&self, q: &[RangeQ; D]) -> Aggregate {
        let mut out = Aggregate::default();
        self.root.query(q, &mut out);
        out
    }

    pub fn report(&self, q: &[RangeQ; D], out: &mut Vec<Key>) {
        self.root.report(q, out);
    }
}

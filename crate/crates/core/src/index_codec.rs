//! The bijection between labelled graphs on `{1, ..., n}` and integers in
//! `0 ..= 2^lambda - 1`.
//!
//! Pairs `ij` (with `i < j`) are laid out in lexicographic order
//! `12, 13, ..., 1n, 23, ..., (n-1)n`; pair `ij` sits at position
//! `p = (2n - i)(i - 1)/2 + (j - i)` and carries weight `2^(lambda - p)`,
//! so pair `12` is the most significant bit of the index.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

/// Smallest supported number of vertices.
pub const MIN_ORDER: usize = 3;
/// Largest supported number of vertices; keeps `lambda <= 120` inside a `u128` index.
pub const MAX_ORDER: usize = 16;

/// Number of vertices of a graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Order(usize);

impl Order {
    pub fn new(n: usize) -> Result<Self> {
        if !(MIN_ORDER..=MAX_ORDER).contains(&n) {
            return Err(Error::Domain(format!(
                "order n = {n} outside supported range {MIN_ORDER}..={MAX_ORDER}"
            )));
        }
        Ok(Order(n))
    }

    #[inline]
    pub fn n(self) -> usize {
        self.0
    }

    /// `n (n - 1) / 2`, the number of unordered vertex pairs.
    #[inline]
    pub fn lambda(self) -> usize {
        self.0 * (self.0 - 1) / 2
    }

    /// `2^lambda - 1`, the index of the complete graph.
    #[inline]
    pub fn max_index(self) -> u128 {
        let l = self.lambda();
        if l == 128 {
            u128::MAX
        } else {
            (1u128 << l) - 1
        }
    }

    /// `n!`. Fits in a `u64` for every supported order.
    pub fn factorial(self) -> u64 {
        (1..=self.0 as u64).product()
    }

    /// All pairs in position order (position 1 first).
    pub fn pairs(self) -> impl Iterator<Item = EdgePair> {
        let n = self.0;
        (1..n).flat_map(move |i| ((i + 1)..=n).map(move |j| EdgePair { i, j }))
    }
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// `lambda = n (n - 1) / 2`.
pub fn lambda(order: Order) -> usize {
    order.lambda()
}

/// An unordered vertex pair `{i, j}`, stored normalized with `i < j`.
/// Labels are 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgePair {
    i: usize,
    j: usize,
}

impl EdgePair {
    /// Builds the pair `{a, b}` in either argument order. Rejects loops and label 0.
    pub fn new(a: usize, b: usize) -> Result<Self> {
        if a == 0 || b == 0 {
            return Err(Error::Domain(format!("vertex labels are 1-based, got {{{a},{b}}}")));
        }
        if a == b {
            return Err(Error::Domain(format!("loop {{{a},{a}}} is not a pair")));
        }
        Ok(EdgePair { i: a.min(b), j: a.max(b) })
    }

    #[inline]
    pub fn i(self) -> usize {
        self.i
    }

    #[inline]
    pub fn j(self) -> usize {
        self.j
    }

    fn check(self, order: Order) -> Result<()> {
        if self.j > order.n() {
            return Err(Error::Domain(format!(
                "pair {self} is not a pair of vertices of order {order}"
            )));
        }
        Ok(())
    }
}

impl fmt::Display for EdgePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.j < 10 {
            write!(f, "{}{}", self.i, self.j)
        } else {
            write!(f, "{{{},{}}}", self.i, self.j)
        }
    }
}

/// Position of a pair in `1 ..= lambda`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgePosition(usize);

impl EdgePosition {
    #[inline]
    pub fn get(self) -> usize {
        self.0
    }

    /// `2^(lambda - p)`.
    #[inline]
    pub fn weight(self, order: Order) -> u128 {
        1u128 << (order.lambda() - self.0)
    }
}

/// Position of `e` without validation; `e.j() <= n` is the caller's contract.
#[inline]
pub(crate) fn raw_position(n: usize, i: usize, j: usize) -> usize {
    (2 * n - i) * (i - 1) / 2 + (j - i)
}

/// Position `p_ij` of pair `e` for the given order.
pub fn edge_position(order: Order, e: EdgePair) -> Result<EdgePosition> {
    e.check(order)?;
    Ok(EdgePosition(raw_position(order.n(), e.i, e.j)))
}

/// Weight `w(ij) = 2^(lambda - p_ij)` of a pair.
pub fn pair_weight(order: Order, e: EdgePair) -> Result<u128> {
    Ok(edge_position(order, e)?.weight(order))
}

/// The integer encoding of a labelled graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct GraphIndex(pub u128);

impl GraphIndex {
    #[inline]
    pub fn get(self) -> u128 {
        self.0
    }

    /// Number of edges.
    #[inline]
    pub fn edge_count(self) -> u32 {
        self.0.count_ones()
    }

    /// Exactly `lambda` binary digits, most significant (pair `12`) first.
    pub fn to_binary(self, order: Order) -> String {
        format!("{:0width$b}", self.0, width = order.lambda())
    }
}

impl fmt::Display for GraphIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl From<u128> for GraphIndex {
    fn from(v: u128) -> Self {
        GraphIndex(v)
    }
}

/// A graph on the vertex set `{1, ..., n}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LabelledGraph {
    order: Order,
    edges: BTreeSet<EdgePair>,
}

impl LabelledGraph {
    pub fn empty(order: Order) -> Self {
        LabelledGraph { order, edges: BTreeSet::new() }
    }

    pub fn complete(order: Order) -> Self {
        LabelledGraph { order, edges: order.pairs().collect() }
    }

    /// Builds a graph from 1-based `(i, j)` tuples. Duplicates are rejected.
    pub fn from_edges(order: Order, edges: &[(usize, usize)]) -> Result<Self> {
        let mut set = BTreeSet::new();
        for &(a, b) in edges {
            let e = EdgePair::new(a, b)?;
            e.check(order)?;
            if !set.insert(e) {
                return Err(Error::Domain(format!("duplicate edge {e}")));
            }
        }
        Ok(LabelledGraph { order, edges: set })
    }

    pub fn from_pairs(order: Order, pairs: impl IntoIterator<Item = EdgePair>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for e in pairs {
            e.check(order)?;
            if !set.insert(e) {
                return Err(Error::Domain(format!("duplicate edge {e}")));
            }
        }
        Ok(LabelledGraph { order, edges: set })
    }

    #[inline]
    pub fn order(&self) -> Order {
        self.order
    }

    pub fn edges(&self) -> &BTreeSet<EdgePair> {
        &self.edges
    }

    pub fn has_edge(&self, e: EdgePair) -> bool {
        self.edges.contains(&e)
    }

    /// The graph on the same vertices whose edges are exactly the non-edges of `self`.
    pub fn complement(&self) -> LabelledGraph {
        LabelledGraph {
            order: self.order,
            edges: self.order.pairs().filter(|e| !self.edges.contains(e)).collect(),
        }
    }
}

impl fmt::Display for LabelledGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, e) in self.edges.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

/// `N(G) = sum over edges of w(ij)`; zero for the empty graph.
pub fn encode(g: &LabelledGraph) -> GraphIndex {
    let n = g.order.n();
    let lambda = g.order.lambda();
    GraphIndex(
        g.edges
            .iter()
            .map(|e| 1u128 << (lambda - raw_position(n, e.i, e.j)))
            .sum(),
    )
}

/// Inverse of [`encode`].
pub fn decode(order: Order, index: GraphIndex) -> Result<LabelledGraph> {
    check_index(order, index)?;
    let lambda = order.lambda();
    let edges = order
        .pairs()
        .enumerate()
        .filter(|&(k, _)| (index.0 >> (lambda - 1 - k)) & 1 == 1)
        .map(|(_, e)| e)
        .collect();
    Ok(LabelledGraph { order, edges })
}

/// `2^lambda - 1 - L`, the index of the complement graph.
pub fn complement_index(order: Order, index: GraphIndex) -> Result<GraphIndex> {
    check_index(order, index)?;
    Ok(GraphIndex(order.max_index() - index.0))
}

/// Digit `p_ij` of the binary expansion of `L`: 1 iff `e` is an edge.
pub fn edge_bit(order: Order, index: GraphIndex, e: EdgePair) -> Result<u8> {
    check_index(order, index)?;
    let p = edge_position(order, e)?;
    Ok(((index.0 >> (order.lambda() - p.get())) & 1) as u8)
}

fn check_index(order: Order, index: GraphIndex) -> Result<()> {
    if index.0 > order.max_index() {
        return Err(Error::IndexOutOfRange {
            n: order.n(),
            lambda: order.lambda(),
            index: index.0,
        });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ord(n: usize) -> Order {
        Order::new(n).unwrap()
    }

    fn pair(i: usize, j: usize) -> EdgePair {
        EdgePair::new(i, j).unwrap()
    }

    #[test]
    fn lambda_values() {
        assert_eq!(lambda(ord(4)), 6);
        assert_eq!(lambda(ord(7)), 21);
        assert_eq!(lambda(ord(9)), 36);
    }

    #[test]
    fn order_bounds() {
        assert!(Order::new(2).is_err());
        assert!(Order::new(17).is_err());
        assert_eq!(Order::new(16).unwrap().lambda(), 120);
    }

    #[test]
    fn positions_for_n4() {
        let o = ord(4);
        assert_eq!(edge_position(o, pair(1, 2)).unwrap().get(), 1);
        assert_eq!(edge_position(o, pair(1, 3)).unwrap().get(), 2);
        assert_eq!(edge_position(o, pair(1, 4)).unwrap().get(), 3);
        assert_eq!(edge_position(o, pair(2, 3)).unwrap().get(), 4);
        assert_eq!(edge_position(o, pair(3, 4)).unwrap().get(), 6);
    }

    #[test]
    fn invalid_pairs() {
        assert!(EdgePair::new(2, 2).is_err());
        assert!(EdgePair::new(0, 2).is_err());
        assert!(edge_position(ord(4), pair(3, 5)).is_err());
        assert!(edge_bit(ord(4), GraphIndex(0), pair(1, 5)).is_err());
    }

    #[test]
    fn position_bijection_up_to_16() {
        for n in 3..=16 {
            let o = ord(n);
            let mut seen: Vec<usize> = o
                .pairs()
                .map(|e| edge_position(o, e).unwrap().get())
                .collect();
            seen.sort_unstable();
            assert_eq!(seen, (1..=o.lambda()).collect::<Vec<_>>(), "n = {n}");
        }
    }

    #[test]
    fn encode_example() {
        let o = ord(4);
        let g = LabelledGraph::from_edges(o, &[(1, 3), (1, 4), (2, 3), (3, 4)]).unwrap();
        let l = encode(&g);
        assert_eq!(l, GraphIndex(29));
        assert_eq!(l.to_binary(o), "011101");
        assert_eq!(encode(&LabelledGraph::empty(o)), GraphIndex(0));
        assert_eq!(encode(&LabelledGraph::complete(o)), GraphIndex(63));
    }

    #[test]
    fn decode_examples() {
        let o = ord(4);
        let g = decode(o, GraphIndex(29)).unwrap();
        assert_eq!(g, LabelledGraph::from_edges(o, &[(1, 3), (1, 4), (2, 3), (3, 4)]).unwrap());
        assert!(decode(o, GraphIndex(0)).unwrap().edges().is_empty());
        let g = decode(o, GraphIndex(14)).unwrap();
        assert_eq!(g, LabelledGraph::from_edges(o, &[(1, 4), (2, 3), (2, 4)]).unwrap());
        assert_eq!(encode(&g), GraphIndex(14));
        assert!(matches!(
            decode(o, GraphIndex(64)),
            Err(Error::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn complement_examples() {
        let o = ord(4);
        assert_eq!(complement_index(o, GraphIndex(29)).unwrap(), GraphIndex(34));
        assert_eq!(complement_index(o, GraphIndex(0)).unwrap(), GraphIndex(63));
        assert_eq!(complement_index(o, GraphIndex(14)).unwrap(), GraphIndex(49));
        let g = decode(o, GraphIndex(14)).unwrap();
        assert_eq!(encode(&g.complement()), GraphIndex(49));
    }

    #[test]
    fn edge_bit_examples() {
        let o = ord(4);
        let l = GraphIndex(29);
        for (i, j) in [(1, 3), (1, 4), (2, 3), (3, 4)] {
            assert_eq!(edge_bit(o, l, pair(i, j)).unwrap(), 1);
        }
        assert_eq!(edge_bit(o, l, pair(1, 2)).unwrap(), 0);
        assert_eq!(edge_bit(o, l, pair(2, 4)).unwrap(), 0);
        for e in o.pairs() {
            assert_eq!(edge_bit(o, GraphIndex(0), e).unwrap(), 0);
        }
    }

    #[test]
    fn exhaustive_small_orders() {
        for n in 3..=5 {
            let o = ord(n);
            for l in 0..=o.max_index() {
                let g = decode(o, GraphIndex(l)).unwrap();
                assert_eq!(encode(&g).0, l);
                for e in o.pairs() {
                    assert_eq!(edge_bit(o, GraphIndex(l), e).unwrap() == 1, g.has_edge(e));
                }
                let c = complement_index(o, GraphIndex(l)).unwrap();
                assert_eq!(complement_index(o, c).unwrap().0, l);
            }
        }
    }

    #[test]
    fn duplicate_edges_rejected() {
        assert!(LabelledGraph::from_edges(ord(4), &[(1, 2), (2, 1)]).is_err());
    }
}

//! Vertex permutations and the action they induce on unordered vertex pairs.

use std::fmt;
use std::ops::Range;

use crate::error::{Error, Result};
use crate::index_codec::{raw_position, EdgePair, Order};

/// A permutation of `{1, ..., n}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    // 0-based images
    images: Vec<u8>,
}

impl Permutation {
    pub fn identity(order: Order) -> Self {
        Permutation { images: (0..order.n() as u8).collect() }
    }

    /// From 1-based images: `images[k - 1]` is the image of vertex `k`.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        Order::new(n)?;
        let mut seen = vec![false; n];
        for &v in images {
            if v == 0 || v > n || seen[v - 1] {
                return Err(Error::Domain(format!("{images:?} is not a permutation of 1..={n}")));
            }
            seen[v - 1] = true;
        }
        Ok(Permutation { images: images.iter().map(|&v| (v - 1) as u8).collect() })
    }

    /// Parses cycle notation such as `"(1 2 3 4)(5)"`. Points not mentioned are fixed.
    pub fn parse_cycles(order: Order, input: &str) -> Result<Self> {
        let n = order.n();
        let err = |reason: String| Error::Parse { input: input.to_string(), reason };
        let mut images: Vec<Option<u8>> = vec![None; n];
        let mut rest = input.trim();
        while !rest.is_empty() {
            let body = rest
                .strip_prefix('(')
                .ok_or_else(|| err("expected '('".into()))?;
            let close = body.find(')').ok_or_else(|| err("unclosed '('".into()))?;
            let cycle = body[..close]
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|s| !s.is_empty())
                .map(|s| {
                    let v: usize = s.parse().map_err(|_| err(format!("bad label {s:?}")))?;
                    if v == 0 || v > n {
                        return Err(err(format!("label {v} outside 1..={n}")));
                    }
                    Ok(v - 1)
                })
                .collect::<Result<Vec<_>>>()?;
            for (k, &v) in cycle.iter().enumerate() {
                if images[v].is_some() {
                    return Err(err(format!("label {} appears twice", v + 1)));
                }
                images[v] = Some(cycle[(k + 1) % cycle.len()] as u8);
            }
            rest = body[close + 1..].trim_start();
        }
        Ok(Permutation {
            images: images
                .into_iter()
                .enumerate()
                .map(|(v, img)| img.unwrap_or(v as u8))
                .collect(),
        })
    }

    pub fn order(&self) -> Order {
        Order::new(self.images.len()).expect("permutation built from a valid order")
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.images.len()
    }

    /// Image of the 1-based vertex `v`.
    #[inline]
    pub fn image(&self, v: usize) -> usize {
        self.images[v - 1] as usize + 1
    }

    /// 1-based image sequence.
    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&v| v as usize + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(k, &v)| k == v as usize)
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u8; self.images.len()];
        for (k, &v) in self.images.iter().enumerate() {
            inv[v as usize] = k as u8;
        }
        Permutation { images: inv }
    }

    /// `self ∘ other`: apply `other` first, then `self`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.n(), other.n(), "composing permutations of different degree");
        Permutation {
            images: other.images.iter().map(|&v| self.images[v as usize]).collect(),
        }
    }

    /// Vertex cycles (1-based), each starting at its smallest label, fixed points included.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut v = start;
            while !seen[v] {
                seen[v] = true;
                cycle.push(v + 1);
                v = self.images[v] as usize;
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_type(&self) -> CycleType {
        let mut counts = vec![0; self.n() + 1];
        for c in self.cycles() {
            counts[c.len()] += 1;
        }
        CycleType { counts }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in self.cycles() {
            write!(f, "(")?;
            for (k, v) in c.iter().enumerate() {
                if k > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{v}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

/// `m[k]`, the number of cycles of length `k`, for `k = 1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CycleType {
    counts: Vec<usize>,
}

impl CycleType {
    /// Number of cycles of length `k`; zero outside `1..=n`.
    pub fn m(&self, k: usize) -> usize {
        self.counts.get(k).copied().unwrap_or(0)
    }

    pub fn n(&self) -> usize {
        self.counts.len() - 1
    }

    /// `(length, multiplicity)` for every length that occurs.
    pub fn parts(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.counts
            .iter()
            .enumerate()
            .skip(1)
            .filter(|&(_, &m)| m > 0)
            .map(|(k, &m)| (k, m))
    }

    /// Number of permutations with this cycle type: `n! / prod(k^m_k m_k!)`.
    pub fn class_size(&self) -> u64 {
        let n = self.n() as u64;
        let mut denom: u64 = 1;
        for (k, m) in self.parts() {
            denom *= (k as u64).pow(m as u32) * (1..=m as u64).product::<u64>();
        }
        (1..=n).product::<u64>() / denom
    }

    /// At most one fixed point, and every other cycle length divisible by 4.
    pub fn is_sc_admissible(&self) -> bool {
        self.m(1) <= 1 && self.parts().all(|(k, _)| k == 1 || k % 4 == 0)
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, m) in self.parts() {
            if !first {
                write!(f, " ")?;
            }
            first = false;
            write!(f, "{k}^{m}")?;
        }
        Ok(())
    }
}

/// `alpha'{i,j} = {alpha i, alpha j}`, normalized.
pub fn apply_to_pair(alpha: &Permutation, e: EdgePair) -> EdgePair {
    EdgePair::new(alpha.image(e.i()), alpha.image(e.j())).expect("a permutation maps pairs to pairs")
}

/// Whether `n` admits self-complementary graphs.
pub fn admits_sc(order: Order) -> bool {
    order.n() >= 4 && order.n() % 4 <= 1
}

pub(crate) fn check_sc_order(order: Order) -> Result<()> {
    if !admits_sc(order) {
        return Err(Error::Domain(format!(
            "self-complementary graphs need n ≡ 0 or 1 (mod 4) and n ≥ 4, got n = {order}"
        )));
    }
    Ok(())
}

/// Whether `alpha` maps some graph onto its complement.
pub fn is_sc_admissible(order: Order, alpha: &Permutation) -> Result<bool> {
    check_sc_order(order)?;
    if alpha.n() != order.n() {
        return Err(Error::Domain(format!(
            "permutation of degree {} used with order {order}",
            alpha.n()
        )));
    }
    Ok(alpha.cycle_type().is_sc_admissible())
}

/// One cycle of the induced pair permutation, led by its maximum-weight pair
/// (equivalently, its smallest position).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PairCycle {
    elements: Vec<EdgePair>,
}

impl PairCycle {
    /// Pairs in cycle order; each is the image of its predecessor.
    pub fn elements(&self) -> &[EdgePair] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn leading(&self) -> EdgePair {
        self.elements[0]
    }

    /// Same cycle with a different starting element. Used to exercise the
    /// canonical-rotation checks.
    #[doc(hidden)]
    pub fn rotated(&self, by: usize) -> PairCycle {
        let mut elements = self.elements.clone();
        let k = elements.len();
        elements.rotate_left(by % k);
        PairCycle { elements }
    }
}

impl fmt::Display for PairCycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, e) in self.elements.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

/// All cycles of `alpha'` plus the vertex cycle type of `alpha`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairDecomposition {
    pub alpha: Permutation,
    /// Sorted by leading weight, descending.
    pub cycles: Vec<PairCycle>,
    pub cycle_type: CycleType,
}

/// Disjoint cycle decomposition of the pair permutation induced by `alpha`.
pub fn pair_decomposition(alpha: &Permutation) -> PairDecomposition {
    let order = alpha.order();
    let n = order.n();
    let pairs: Vec<EdgePair> = order.pairs().collect();
    let image_pos: Vec<usize> = pairs
        .iter()
        .map(|&e| {
            let img = apply_to_pair(alpha, e);
            raw_position(n, img.i(), img.j()) - 1
        })
        .collect();

    // Scanning positions in ascending order means each new cycle starts at its
    // smallest position, i.e. at its maximum-weight pair, and cycles come out
    // in descending order of leading weight.
    let mut visited = vec![false; pairs.len()];
    let mut cycles = Vec::new();
    for start in 0..pairs.len() {
        if visited[start] {
            continue;
        }
        let mut elements = Vec::new();
        let mut p = start;
        while !visited[p] {
            visited[p] = true;
            elements.push(pairs[p]);
            p = image_pos[p];
        }
        cycles.push(PairCycle { elements });
    }

    PairDecomposition { alpha: alpha.clone(), cycles, cycle_type: alpha.cycle_type() }
}

/// `W(z)`, `W1(z)` and `W2(z)`: weight sums over all, odd and even positions of a cycle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CycleWeights {
    pub w_full: u128,
    pub w_odd: u128,
    pub w_even: u128,
}

pub fn cycle_weights(order: Order, z: &PairCycle) -> CycleWeights {
    let n = order.n();
    let lambda = order.lambda();
    let (mut w_odd, mut w_even) = (0u128, 0u128);
    for (k, e) in z.elements.iter().enumerate() {
        let w = 1u128 << (lambda - raw_position(n, e.i(), e.j()));
        // k is 0-based, so even k is an odd (1-based) position
        if k % 2 == 0 {
            w_odd += w;
        } else {
            w_even += w;
        }
    }
    CycleWeights { w_full: w_odd + w_even, w_odd, w_even }
}

/// Lexicographic stream of permutations of `{1, ..., n}`, restricted to a
/// contiguous range of lexicographic ranks.
#[derive(Debug, Clone)]
pub struct Permutations {
    current: Vec<u8>,
    remaining: u64,
}

impl Permutations {
    /// Permutations with lexicographic rank in `ranks` (clamped to `0..n!`).
    pub fn with_ranks(order: Order, ranks: Range<u64>) -> Self {
        let total = order.factorial();
        let start = ranks.start.min(total);
        let end = ranks.end.min(total);
        Permutations {
            current: unrank(order.n(), start),
            remaining: end.saturating_sub(start),
        }
    }
}

impl Iterator for Permutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        if self.remaining == 0 {
            return None;
        }
        self.remaining -= 1;
        let out = Permutation { images: self.current.clone() };
        if self.remaining > 0 {
            next_lexicographic(&mut self.current);
        }
        Some(out)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let r = self.remaining as usize;
        (r, Some(r))
    }
}

impl ExactSizeIterator for Permutations {}

/// All `n!` permutations, identity first, in lexicographic order of image sequences.
pub fn enumerate_permutations(order: Order) -> Permutations {
    Permutations::with_ranks(order, 0..order.factorial())
}

/// The admissible permutations, in lexicographic order.
pub fn enumerate_sc_permutations(order: Order) -> Result<impl Iterator<Item = Permutation>> {
    check_sc_order(order)?;
    Ok(enumerate_permutations(order).filter(|a| a.cycle_type().is_sc_admissible()))
}

/// Splits `0..total` into `parts` contiguous ranges of near-equal length.
pub fn split_ranks(total: u64, parts: usize) -> Vec<Range<u64>> {
    let parts = parts.max(1) as u64;
    (0..parts)
        .map(|k| (total * k / parts)..(total * (k + 1) / parts))
        .filter(|r| !r.is_empty())
        .collect()
}

fn unrank(n: usize, mut rank: u64) -> Vec<u8> {
    let mut pool: Vec<u8> = (0..n as u8).collect();
    let mut out = Vec::with_capacity(n);
    for k in (0..n).rev() {
        let f: u64 = (1..=k as u64).product();
        let idx = (rank / f) as usize;
        rank %= f;
        out.push(pool.remove(idx));
    }
    out
}

fn next_lexicographic(a: &mut [u8]) -> bool {
    let n = a.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

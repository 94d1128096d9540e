//! Red/blue edge colorings of complete graphs and their file format.
//!
//! Only the red relation is stored; blue is the complement within the vertex
//! range minus the diagonal, so blue degrees and blue neighborhoods are
//! derived.

use crate::bitset::VertexSet;
use crate::graph::VertexId;
use rand::Rng;
use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EdgeColor {
    Red,
    Blue,
}

/// Parameters of a `t · F_k` blue target: `t` disjoint fans of `k` triangles.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FanSpec {
    pub k: usize,
    pub t: usize,
}

impl FanSpec {
    pub fn new(k: usize, t: usize) -> Result<Self, ColoringError> {
        if k == 0 || t == 0 {
            return Err(ColoringError::BadFanSpec { k, t });
        }
        Ok(FanSpec { k, t })
    }

    /// Vertices of one fan: `2k + 1`.
    pub fn fan_order(&self) -> usize {
        2 * self.k + 1
    }

    /// Vertices of the full target: `t (2k + 1)`.
    pub fn total_order(&self) -> usize {
        self.t * self.fan_order()
    }
}

/// A total red/blue coloring of all pairs of `[0, N)`.
#[derive(Clone, PartialEq, Eq)]
pub struct TwoColoring {
    n: usize,
    red: Vec<VertexSet>,
}

impl TwoColoring {
    /// Builds from a predicate on canonical pairs `(u, v)`, `u < v`.
    pub fn from_fn(n: usize, mut f: impl FnMut(VertexId, VertexId) -> EdgeColor) -> Self {
        let mut red: Vec<VertexSet> = (0..n).map(|_| VertexSet::new(n)).collect();
        for u in 0..n {
            for v in u + 1..n {
                if f(u, v) == EdgeColor::Red {
                    red[u].insert(v);
                    red[v].insert(u);
                }
            }
        }
        TwoColoring { n, red }
    }

    pub fn all_red(n: usize) -> Self {
        Self::from_fn(n, |_, _| EdgeColor::Red)
    }

    pub fn all_blue(n: usize) -> Self {
        Self::from_fn(n, |_, _| EdgeColor::Blue)
    }

    /// Each pair independently red with probability 1/2.
    pub fn random(n: usize, rng: &mut impl Rng) -> Self {
        Self::from_fn(n, |_, _| if rng.random_bool(0.5) { EdgeColor::Red } else { EdgeColor::Blue })
    }

    /// Construction-time mutator (colorings are shared immutably once
    /// built); exhaustive sweeps use it to step between adjacent colorings.
    pub fn set_color(&mut self, u: VertexId, v: VertexId, color: EdgeColor) {
        debug_assert_ne!(u, v);
        match color {
            EdgeColor::Red => {
                self.red[u].insert(v);
                self.red[v].insert(u);
            }
            EdgeColor::Blue => {
                self.red[u].remove(v);
                self.red[v].remove(u);
            }
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn color(&self, u: VertexId, v: VertexId) -> EdgeColor {
        debug_assert_ne!(u, v);
        if self.red[u].contains(v) {
            EdgeColor::Red
        } else {
            EdgeColor::Blue
        }
    }

    #[inline]
    pub fn is_red(&self, u: VertexId, v: VertexId) -> bool {
        debug_assert_ne!(u, v);
        self.red[u].contains(v)
    }

    #[inline]
    pub fn is_blue(&self, u: VertexId, v: VertexId) -> bool {
        !self.is_red(u, v)
    }

    pub fn red_neighbors(&self, v: VertexId) -> &VertexSet {
        &self.red[v]
    }

    pub fn red_degree(&self, v: VertexId) -> usize {
        self.red[v].len()
    }

    pub fn blue_degree(&self, v: VertexId) -> usize {
        self.n - 1 - self.red_degree(v)
    }

    /// Red neighbors of `v` within `within`.
    pub fn red_in(&self, v: VertexId, within: &VertexSet) -> VertexSet {
        let mut s = within.clone();
        s.intersect_with(&self.red[v]);
        s.remove(v);
        s
    }

    /// Blue neighbors of `v` within `within`.
    pub fn blue_in(&self, v: VertexId, within: &VertexSet) -> VertexSet {
        let mut s = within.clone();
        s.difference_with(&self.red[v]);
        s.remove(v);
        s
    }

    pub fn red_count_in(&self, v: VertexId, within: &VertexSet) -> usize {
        self.red[v].intersection_len(within) - usize::from(self.red[v].contains(v) && within.contains(v))
    }

    pub fn blue_count_in(&self, v: VertexId, within: &VertexSet) -> usize {
        within.difference_len(&self.red[v]) - usize::from(within.contains(v))
    }

    /// All vertices as a set, for arena-style bookkeeping.
    pub fn full_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }
}

impl std::fmt::Debug for TwoColoring {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "TwoColoring(N={})", self.n)
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ColoringError {
    #[error("fan spec requires k >= 1 and t >= 1, got k={k}, t={t}")]
    BadFanSpec { k: usize, t: usize },
    #[error("missing or malformed header line (expected `RBC1 N=<int>`)")]
    BadHeader,
    #[error("payload length mismatch: expected {expected} hex digits for N={n}, got {got}")]
    LengthMismatch { n: usize, expected: usize, got: usize },
    #[error("invalid hex digit {0:?} in payload")]
    BadDigit(char),
    #[error("padding bits must be zero")]
    BadPadding,
}

/// Writes the `RBC1` format: header line `RBC1 N=<int>`, then one line of
/// `ceil(C(N,2)/4)` hex digits covering the upper triangle row-major
/// (pairs `(0,1),(0,2),…,(0,N-1),(1,2),…`), bit 1 = red, MSB first.
pub fn write_coloring(c: &TwoColoring) -> String {
    let n = c.order();
    let mut out = format!("RBC1 N={n}\n");
    let mut digit = 0u8;
    let mut have = 0u8;
    for u in 0..n {
        for v in u + 1..n {
            digit = (digit << 1) | u8::from(c.is_red(u, v));
            have += 1;
            if have == 4 {
                out.push(char::from_digit(digit as u32, 16).unwrap().to_ascii_uppercase());
                digit = 0;
                have = 0;
            }
        }
    }
    if have > 0 {
        digit <<= 4 - have;
        out.push(char::from_digit(digit as u32, 16).unwrap().to_ascii_uppercase());
    }
    out.push('\n');
    out
}

/// Parses the `RBC1` format produced by [`write_coloring`].
pub fn read_coloring(text: &str) -> Result<TwoColoring, ColoringError> {
    let mut lines = text.lines();
    let header = lines.next().ok_or(ColoringError::BadHeader)?.trim();
    let n: usize = header
        .strip_prefix("RBC1 N=")
        .and_then(|s| s.trim().parse().ok())
        .ok_or(ColoringError::BadHeader)?;
    let payload: String = lines.collect::<Vec<_>>().concat();
    let payload = payload.trim();
    let nbits = n * n.saturating_sub(1) / 2;
    let expected = nbits.div_ceil(4);
    if payload.len() != expected {
        return Err(ColoringError::LengthMismatch { n, expected, got: payload.len() });
    }
    let mut bits = Vec::with_capacity(expected * 4);
    for ch in payload.chars() {
        let d = ch.to_digit(16).ok_or(ColoringError::BadDigit(ch))? as u8;
        for i in (0..4).rev() {
            bits.push((d >> i) & 1 == 1);
        }
    }
    if bits[nbits..].iter().any(|&b| b) {
        return Err(ColoringError::BadPadding);
    }
    let mut idx = 0;
    Ok(TwoColoring::from_fn(n, |_, _| {
        let c = if bits[idx] { EdgeColor::Red } else { EdgeColor::Blue };
        idx += 1;
        c
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn all_red_k3_format() {
        let c = TwoColoring::all_red(3);
        assert_eq!(write_coloring(&c), "RBC1 N=3\nE\n");
    }

    #[test]
    fn roundtrip_random_k10() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..50 {
            let c = TwoColoring::random(10, &mut rng);
            let back = read_coloring(&write_coloring(&c)).unwrap();
            assert_eq!(back, c);
        }
    }

    #[test]
    fn short_payload_is_rejected() {
        assert_eq!(
            read_coloring("RBC1 N=3\n\n"),
            Err(ColoringError::LengthMismatch { n: 3, expected: 1, got: 0 })
        );
        assert!(matches!(read_coloring("RBC1 N=5\nAB\n"), Err(ColoringError::LengthMismatch { .. })));
    }

    #[test]
    fn bad_header_is_rejected() {
        assert_eq!(read_coloring("RBC2 N=3\nE\n"), Err(ColoringError::BadHeader));
        assert_eq!(read_coloring(""), Err(ColoringError::BadHeader));
    }

    #[test]
    fn lowercase_hex_is_accepted() {
        let c = read_coloring("RBC1 N=3\ne\n").unwrap();
        assert!(c.is_red(0, 1) && c.is_red(0, 2) && c.is_red(1, 2));
    }

    #[test]
    fn degrees_sum_to_n_minus_1() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for n in [1usize, 2, 5, 13] {
            let c = TwoColoring::random(n, &mut rng);
            for v in 0..n {
                assert_eq!(c.red_degree(v) + c.blue_degree(v), n - 1);
            }
        }
    }

    #[test]
    fn restricted_neighborhood_helpers() {
        let c = TwoColoring::from_fn(5, |u, v| {
            if u == 0 || v == 0 {
                EdgeColor::Red
            } else {
                EdgeColor::Blue
            }
        });
        let within = VertexSet::from_iter(5, [0, 1, 2, 3]);
        assert_eq!(c.red_in(0, &within).to_vec(), vec![1, 2, 3]);
        assert_eq!(c.blue_in(1, &within).to_vec(), vec![2, 3]);
        assert_eq!(c.blue_count_in(1, &within), 2);
        assert_eq!(c.red_count_in(1, &within), 1);
    }
}

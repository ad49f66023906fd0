//! Cells of the n-cube and the hypercube graph.
//!
//! Every k-face of `[0,1]^n` is a product with `k` active interval factors and
//! `n - k` fixed 0/1 factors. A [`CubeCell`] stores the active coordinates as a
//! bitmask and the values of the inactive coordinates as a bit word, so
//! vertices (k = 0), edges (k = 1) and squares (k = 2) share one type.
//!
//! ## Bit layout
//!
//! Coordinates and edge colors are 1-based. Coordinate `i` of an `n`-cube lives
//! in bit `n - i` of both masks, so coordinate 1 is the most significant bit.
//! With this layout a vertex word read as an unsigned integer equals its
//! binary string read left to right: vertex `0001` of `Q_4` is the word `1`
//! and its rightmost digit is coordinate 4.
//!
//! ## Canonical order
//!
//! Cells are ordered by their sorted active coordinate list (lexicographic),
//! then by the fixed word as an unsigned integer. [`enumerate_cells`] returns
//! cells in exactly this order.
//!
//! ## Text form
//!
//! `2-face[n=4; active={1,3}; fixed=*0*1]` where `*` marks the active
//! positions and the other characters are the fixed coordinate values, read
//! from coordinate 1 to coordinate n. [`CubeCell`] implements both `Display`
//! and `FromStr` for this form.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Smallest supported cube dimension.
pub const MIN_DIMENSION: u8 = 2;
/// Largest supported cube dimension; every cell fits in a pair of 32-bit words.
pub const MAX_DIMENSION: u8 = 24;

/// Number of coordinates of the cube, `2 <= n <= 24`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "u32", into = "u32")]
pub struct Dimension(u8);

impl Dimension {
    pub fn new(n: u32) -> Result<Self> {
        if n < MIN_DIMENSION as u32 || n > MAX_DIMENSION as u32 {
            return Err(Error::DimensionOutOfRange {
                n,
                min: MIN_DIMENSION as u32,
                max: MAX_DIMENSION as u32,
            });
        }
        Ok(Dimension(n as u8))
    }

    #[inline]
    pub fn get(self) -> u8 {
        self.0
    }

    /// Mask with one bit per coordinate.
    #[inline]
    pub fn full_mask(self) -> u32 {
        (1u32 << self.0) - 1
    }

    #[inline]
    pub fn coordinate_bit(self, coord: u8) -> u32 {
        debug_assert!((1..=self.0).contains(&coord));
        1u32 << (self.0 - coord)
    }

    /// Number of vertices of `Q_n`.
    pub fn vertex_count(self) -> u64 {
        1u64 << self.0
    }

    /// Number of edges of `Q_n`, `n 2^(n-1)`.
    pub fn edge_count(self) -> u64 {
        self.0 as u64 * (1u64 << (self.0 - 1))
    }

    /// Number of squares of the full 2-skeleton, `C(n,2) 2^(n-2)`.
    pub fn square_count(self) -> u64 {
        binomial(self.0 as u64, 2) * (1u64 << (self.0 - 2))
    }
}

impl TryFrom<u32> for Dimension {
    type Error = Error;
    fn try_from(n: u32) -> Result<Self> {
        Dimension::new(n)
    }
}

impl From<Dimension> for u32 {
    fn from(d: Dimension) -> u32 {
        d.0 as u32
    }
}

impl fmt::Display for Dimension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

pub(crate) fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// Number of k-faces of the n-cube, `C(n,k) 2^(n-k)`.
pub fn cell_count(n: Dimension, k: usize) -> Result<u64> {
    let n_val = n.get() as usize;
    if k > n_val {
        return Err(Error::CellDimensionOutOfRange { n: n.get(), k });
    }
    Ok(binomial(n_val as u64, k as u64) << (n_val - k))
}

/// A k-face of the n-cube in canonical form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CubeCell {
    n: u8,
    active: u32,
    fixed: u32,
}

/// Color of an edge: the coordinate in which its endpoints differ.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EdgeColor(pub u8);

/// Unordered pair of distinct colors carried by the edges of a square.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Bicolor {
    low: u8,
    high: u8,
}

impl Bicolor {
    pub fn new(a: u8, b: u8) -> Result<Self> {
        if a == b || a == 0 || b == 0 {
            return Err(Error::Domain(format!(
                "bicolor needs two distinct colors >= 1, got {{{a},{b}}}"
            )));
        }
        Ok(Bicolor {
            low: a.min(b),
            high: a.max(b),
        })
    }

    #[inline]
    pub fn low(self) -> u8 {
        self.low
    }

    #[inline]
    pub fn high(self) -> u8 {
        self.high
    }

    pub fn contains(self, color: u8) -> bool {
        self.low == color || self.high == color
    }
}

impl fmt::Display for Bicolor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.low, self.high)
    }
}

/// Bipartition class of a vertex of `Q_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    /// Odd number of ones.
    Black,
    /// Even number of ones.
    White,
}

impl CubeCell {
    /// Builds a cell from raw masks in the documented bit layout.
    ///
    /// Fails if either mask has bits beyond the `n` coordinates or if `fixed`
    /// carries a 1 at an active position.
    pub fn from_masks(n: Dimension, active: u32, fixed: u32) -> Result<Self> {
        let full = n.full_mask();
        if active & !full != 0 || fixed & !full != 0 {
            return Err(Error::InvalidCell(format!(
                "masks {active:#b}/{fixed:#b} exceed {} coordinates",
                n.get()
            )));
        }
        if active & fixed != 0 {
            return Err(Error::InvalidCell(
                "fixed word has a 1 at an active coordinate".to_string(),
            ));
        }
        Ok(CubeCell {
            n: n.get(),
            active,
            fixed,
        })
    }

    /// Builds a cell from its 1-based active coordinates and a fixed word.
    pub fn new(n: Dimension, active: &[u8], fixed: u32) -> Result<Self> {
        let mut mask = 0u32;
        for &c in active {
            if c == 0 || c > n.get() {
                return Err(Error::InvalidCell(format!("coordinate {c} outside 1..={}", n.get())));
            }
            let bit = n.coordinate_bit(c);
            if mask & bit != 0 {
                return Err(Error::InvalidCell(format!("coordinate {c} repeated")));
            }
            mask |= bit;
        }
        Self::from_masks(n, mask, fixed)
    }

    /// The vertex with the given word.
    pub fn vertex(n: Dimension, word: u32) -> Result<Self> {
        Self::from_masks(n, 0, word)
    }

    /// Parses a vertex written as a binary string, coordinate 1 first.
    pub fn vertex_from_bits(bits: &str) -> Result<Self> {
        let n = Dimension::new(bits.len() as u32)?;
        let mut word = 0u32;
        for ch in bits.chars() {
            word <<= 1;
            match ch {
                '0' => {}
                '1' => word |= 1,
                _ => return Err(Error::InvalidCell(format!("bad vertex string {bits:?}"))),
            }
        }
        Self::vertex(n, word)
    }

    pub(crate) fn from_raw(n: u8, active: u32, fixed: u32) -> Self {
        debug_assert_eq!(active & fixed, 0);
        CubeCell { n, active, fixed }
    }

    #[inline]
    pub fn n(&self) -> Dimension {
        Dimension(self.n)
    }

    /// Cell dimension `k = |active|`.
    #[inline]
    pub fn dim(&self) -> usize {
        self.active.count_ones() as usize
    }

    #[inline]
    pub fn active_mask(&self) -> u32 {
        self.active
    }

    #[inline]
    pub fn fixed_word(&self) -> u32 {
        self.fixed
    }

    /// Active coordinates in increasing order.
    pub fn active_coords(&self) -> impl Iterator<Item = u8> + '_ {
        let n = self.n;
        (1..=n).filter(move |&c| self.active & (1u32 << (n - c)) != 0)
    }

    pub fn is_active(&self, coord: u8) -> bool {
        coord >= 1 && coord <= self.n && self.active & (1u32 << (self.n - coord)) != 0
    }

    /// Value of an inactive coordinate, `None` when the coordinate is active.
    pub fn coordinate(&self, coord: u8) -> Option<bool> {
        if self.is_active(coord) {
            None
        } else {
            Some(self.fixed & (1u32 << (self.n - coord)) != 0)
        }
    }

    fn require_dim(&self, k: usize, what: &str) -> Result<()> {
        if self.dim() != k {
            return Err(Error::CellDimension {
                expected: what.to_string(),
                found: self.dim(),
            });
        }
        Ok(())
    }

    /// Facets of the cell as (k-1)-cells.
    ///
    /// For a square with active coordinates `i < j` the four edges come in
    /// cyclic order starting at the corner where `x_i = x_j = 0`: the color `i`
    /// edge with `x_j = 0`, the color `j` edge with `x_i = 1`, the color `i`
    /// edge with `x_j = 1`, the color `j` edge with `x_i = 0`. Other
    /// dimensions list, for each active coordinate in increasing order, the
    /// facet at 0 and then the facet at 1.
    pub fn boundary(&self) -> Result<Vec<CubeCell>> {
        if self.dim() == 0 {
            return Err(Error::CellDimension {
                expected: "k >= 1".to_string(),
                found: 0,
            });
        }
        if self.dim() == 2 {
            return Ok(self.square_edges().to_vec());
        }
        let mut out = Vec::with_capacity(2 * self.dim());
        for c in self.active_coords() {
            let bit = 1u32 << (self.n - c);
            let active = self.active & !bit;
            out.push(CubeCell::from_raw(self.n, active, self.fixed));
            out.push(CubeCell::from_raw(self.n, active, self.fixed | bit));
        }
        Ok(out)
    }

    /// The two active bits of a square, `(bit of i, bit of j)` with `i < j`.
    #[inline]
    fn square_bits(&self) -> (u32, u32) {
        debug_assert_eq!(self.dim(), 2);
        // coordinate i < j sits at the higher bit
        let hi = 1u32 << (31 - self.active.leading_zeros());
        let lo = self.active & !hi;
        (hi, lo)
    }

    /// Boundary edges of a square in canonical cyclic order. Callers must pass a square.
    pub(crate) fn square_edges(&self) -> [CubeCell; 4] {
        let (bi, bj) = self.square_bits();
        let n = self.n;
        let f = self.fixed;
        [
            CubeCell::from_raw(n, bi, f),
            CubeCell::from_raw(n, bj, f | bi),
            CubeCell::from_raw(n, bi, f | bj),
            CubeCell::from_raw(n, bj, f),
        ]
    }

    /// Corner words of a square in canonical cyclic order:
    /// `(0,0), (1,0), (1,1), (0,1)` in the `(x_i, x_j)` coordinates, `i < j`.
    pub fn square_corners(&self) -> Result<[u32; 4]> {
        self.require_dim(2, "square (k = 2)")?;
        Ok(self.square_corner_words())
    }

    pub(crate) fn square_corner_words(&self) -> [u32; 4] {
        let (bi, bj) = self.square_bits();
        let f = self.fixed;
        [f, f | bi, f | bi | bj, f | bj]
    }

    /// Endpoint words of an edge, the 0 end first.
    pub fn edge_endpoints(&self) -> Result<[u32; 2]> {
        self.require_dim(1, "edge (k = 1)")?;
        Ok([self.fixed, self.fixed | self.active])
    }

    pub fn edge_color(&self) -> Result<EdgeColor> {
        self.require_dim(1, "edge (k = 1)")?;
        Ok(EdgeColor(self.n - self.active.trailing_zeros() as u8))
    }

    pub fn face_bicolor(&self) -> Result<Bicolor> {
        self.require_dim(2, "square (k = 2)")?;
        let mut coords = self.active_coords();
        let (a, b) = (coords.next().unwrap(), coords.next().unwrap());
        Ok(Bicolor { low: a, high: b })
    }

    pub fn vertex_parity(&self) -> Result<Parity> {
        self.require_dim(0, "vertex (k = 0)")?;
        Ok(word_parity(self.fixed))
    }

    /// Whether `other` is a face of `self` (including `self`).
    pub fn contains(&self, other: &CubeCell) -> bool {
        self.n == other.n && other.active & !self.active == 0 && (other.fixed & !self.active) == self.fixed
    }

    /// Whether the vertex word is a corner of this cell.
    pub fn contains_word(&self, word: u32) -> bool {
        word & !self.active == self.fixed
    }

    /// Binary string of a vertex word, coordinate 1 first.
    pub fn word_string(n: Dimension, word: u32) -> String {
        (1..=n.get())
            .map(|c| if word & n.coordinate_bit(c) != 0 { '1' } else { '0' })
            .collect()
    }

    /// Image of the cell when coordinate `k` is sent to coordinate `images[k - 1]`.
    pub(crate) fn map_coordinates(&self, images: &[u8]) -> CubeCell {
        let n = self.n;
        let mut active = 0u32;
        let mut fixed = 0u32;
        for c in 1..=n {
            let src = 1u32 << (n - c);
            let dst = 1u32 << (n - images[c as usize - 1]);
            if self.active & src != 0 {
                active |= dst;
            }
            if self.fixed & src != 0 {
                fixed |= dst;
            }
        }
        CubeCell::from_raw(n, active, fixed)
    }
}

/// Parity of a vertex word: black iff it has an odd number of ones.
#[inline]
pub fn word_parity(word: u32) -> Parity {
    if word.count_ones() % 2 == 1 {
        Parity::Black
    } else {
        Parity::White
    }
}

impl Ord for CubeCell {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n
            .cmp(&other.n)
            .then_with(|| self.active_coords().cmp(other.active_coords()))
            .then_with(|| self.fixed.cmp(&other.fixed))
    }
}

impl PartialOrd for CubeCell {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for CubeCell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let active = self.active_coords().join(",");
        let fixed: String = (1..=self.n)
            .map(|c| match self.coordinate(c) {
                None => '*',
                Some(true) => '1',
                Some(false) => '0',
            })
            .collect();
        write!(
            f,
            "{}-face[n={}; active={{{}}}; fixed={}]",
            self.dim(),
            self.n,
            active,
            fixed
        )
    }
}

impl FromStr for CubeCell {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidCell(format!("cannot parse cell {s:?}"));
        let (k_part, rest) = s.split_once("-face[").ok_or_else(bad)?;
        let body = rest.strip_suffix(']').ok_or_else(bad)?;
        let k: usize = k_part.trim().parse().map_err(|_| bad())?;
        let mut fields = body.split(';').map(str::trim);
        let n_field = fields.next().and_then(|f| f.strip_prefix("n=")).ok_or_else(bad)?;
        let active_field = fields
            .next()
            .and_then(|f| f.strip_prefix("active={"))
            .and_then(|f| f.strip_suffix('}'))
            .ok_or_else(bad)?;
        let fixed_field = fields.next().and_then(|f| f.strip_prefix("fixed=")).ok_or_else(bad)?;
        if fields.next().is_some() {
            return Err(bad());
        }
        let n = Dimension::new(n_field.parse().map_err(|_| bad())?)?;
        let active: Vec<u8> = if active_field.is_empty() {
            Vec::new()
        } else {
            active_field
                .split(',')
                .map(|c| c.trim().parse::<u8>().map_err(|_| bad()))
                .collect::<Result<_>>()?
        };
        if fixed_field.chars().count() != n.get() as usize {
            return Err(Error::InvalidCell(format!(
                "fixed field of {s:?} must have {n} characters"
            )));
        }
        let mut fixed = 0u32;
        let mut stars = 0u32;
        for (idx, ch) in fixed_field.chars().enumerate() {
            let bit = n.coordinate_bit(idx as u8 + 1);
            match ch {
                '0' => {}
                '1' => fixed |= bit,
                '*' => stars |= bit,
                _ => return Err(bad()),
            }
        }
        let cell = CubeCell::new(n, &active, fixed)?;
        if cell.active != stars || cell.dim() != k {
            return Err(Error::InvalidCell(format!(
                "inconsistent dimension, active set and '*' positions in {s:?}"
            )));
        }
        Ok(cell)
    }
}

impl Serialize for CubeCell {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for CubeCell {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Ascending iteration over all subsets of `mask`.
pub(crate) fn submasks_ascending(mask: u32) -> impl Iterator<Item = u32> {
    let mut next = Some(0u32);
    std::iter::from_fn(move || {
        let cur = next?;
        let succ = (cur | !mask).wrapping_add(1) & mask;
        next = if succ == 0 { None } else { Some(succ) };
        Some(cur)
    })
}

/// All cells with the given active mask, ascending fixed word.
pub(crate) fn cells_with_active(n: Dimension, active: u32) -> impl Iterator<Item = CubeCell> {
    let inactive = n.full_mask() & !active;
    let n = n.get();
    submasks_ascending(inactive).map(move |fixed| CubeCell::from_raw(n, active, fixed))
}

/// All k-faces of the n-cube in canonical order.
pub fn enumerate_cells(n: Dimension, k: usize) -> Result<Vec<CubeCell>> {
    let count = cell_count(n, k)?;
    let mut out = Vec::with_capacity(count as usize);
    for coords in (1..=n.get()).combinations(k) {
        let active = coords.iter().fold(0u32, |m, &c| m | n.coordinate_bit(c));
        out.extend(cells_with_active(n, active));
    }
    Ok(out)
}

/// Squares carrying the given bicolor, in canonical order. There are `2^(n-2)` of them.
pub fn squares_with_bicolor(n: Dimension, bicolor: Bicolor) -> Result<Vec<CubeCell>> {
    if bicolor.high > n.get() {
        return Err(Error::Domain(format!("bicolor {bicolor} exceeds n = {n}")));
    }
    let active = n.coordinate_bit(bicolor.low) | n.coordinate_bit(bicolor.high);
    Ok(cells_with_active(n, active).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::{BTreeMap, HashSet};

    fn dim(n: u32) -> Dimension {
        Dimension::new(n).unwrap()
    }

    #[test]
    fn dimension_bounds() {
        assert!(Dimension::new(1).is_err());
        assert!(Dimension::new(25).is_err());
        assert_eq!(Dimension::new(24).unwrap().get(), 24);
        assert_eq!(dim(24).full_mask(), 0x00ff_ffff);
    }

    #[test]
    fn enumerate_counts_from_examples() {
        assert_eq!(enumerate_cells(dim(3), 2).unwrap().len(), 6);
        assert_eq!(enumerate_cells(dim(4), 1).unwrap().len(), 32);
        assert_eq!(enumerate_cells(dim(5), 2).unwrap().len(), 80);
        let verts: Vec<String> = enumerate_cells(dim(2), 0)
            .unwrap()
            .iter()
            .map(|v| CubeCell::word_string(dim(2), v.fixed_word()))
            .collect();
        assert_eq!(verts, ["00", "01", "10", "11"]);
        assert!(matches!(
            enumerate_cells(dim(3), 4),
            Err(Error::CellDimensionOutOfRange { .. })
        ));
    }

    #[test]
    fn cell_count_identity_and_canonical_order() {
        for n in 2..=10 {
            for k in 0..=n as usize {
                let cells = enumerate_cells(dim(n), k).unwrap();
                assert_eq!(cells.len() as u64, binomial(n as u64, k as u64) << (n as usize - k));
                assert!(cells.windows(2).all(|w| w[0] < w[1]), "order n={n} k={k}");
                assert!(cells
                    .iter()
                    .all(|c| c.dim() == k && c.active_mask() & c.fixed_word() == 0));
            }
        }
    }

    #[test]
    fn square_boundary_cyclic_order() {
        let n = dim(3);
        let sq = CubeCell::new(n, &[1, 2], 0).unwrap();
        let b = sq.boundary().unwrap();
        let colors: Vec<u8> = b.iter().map(|e| e.edge_color().unwrap().0).collect();
        assert_eq!(colors, [1, 2, 1, 2]);
        // first edge leaves corner 000 along coordinate 1
        assert_eq!(b[0].edge_endpoints().unwrap(), [0b000, 0b100]);
        assert_eq!(b[1].edge_endpoints().unwrap(), [0b100, 0b110]);
        assert_eq!(b[2].edge_endpoints().unwrap(), [0b010, 0b110]);
        assert_eq!(b[3].edge_endpoints().unwrap(), [0b000, 0b010]);

        // each boundary edge is in this square and exactly one other square of H_3
        let squares = enumerate_cells(n, 2).unwrap();
        for e in &b {
            let holders: Vec<_> = squares.iter().filter(|s| s.contains(e)).collect();
            assert_eq!(holders.len(), 2);
            assert!(holders.contains(&&sq));
        }
    }

    #[test]
    fn square_boundaries_are_closed_for_small_n() {
        for n in 2..=6 {
            for sq in enumerate_cells(dim(n), 2).unwrap() {
                let b = sq.boundary().unwrap();
                assert_eq!(b.len(), 4);
                for i in 0..4 {
                    let a = b[i].edge_endpoints().unwrap();
                    let c = b[(i + 1) % 4].edge_endpoints().unwrap();
                    assert!(a.iter().any(|w| c.contains(w)), "{sq}: {} / {}", b[i], b[(i + 1) % 4]);
                    assert!(sq.contains(&b[i]));
                }
                let corners = sq.square_corners().unwrap();
                for i in 0..4 {
                    let mut pair = b[i].edge_endpoints().unwrap();
                    let mut want = [corners[i], corners[(i + 1) % 4]];
                    pair.sort();
                    want.sort();
                    assert_eq!(pair, want);
                }
            }
        }
    }

    #[test]
    fn edge_and_vertex_boundaries() {
        let n = dim(2);
        let e = CubeCell::new(n, &[1], 0).unwrap();
        let b = e.boundary().unwrap();
        let words: Vec<String> = b.iter().map(|v| CubeCell::word_string(n, v.fixed_word())).collect();
        assert_eq!(words, ["00", "10"]);
        let v = CubeCell::vertex(n, 0).unwrap();
        assert!(matches!(v.boundary(), Err(Error::CellDimension { .. })));
        let cube = CubeCell::new(dim(4), &[1, 2, 4], 0b0000).unwrap();
        assert_eq!(cube.boundary().unwrap().len(), 6);
    }

    #[test]
    fn edge_colors() {
        let n3 = dim(3);
        let e = CubeCell::new(n3, &[2], 0).unwrap();
        assert_eq!(e.edge_endpoints().unwrap(), [0b000, 0b010]);
        assert_eq!(e.edge_color().unwrap(), EdgeColor(2));
        let n4 = dim(4);
        let e = CubeCell::new(n4, &[4], 0).unwrap();
        assert_eq!(e.edge_endpoints().unwrap(), [0b0000, 0b0001]);
        assert_eq!(e.edge_color().unwrap(), EdgeColor(4));
        assert!(CubeCell::new(n4, &[1, 2], 0).unwrap().edge_color().is_err());

        for n in 2..=7 {
            let mut per_vertex: BTreeMap<u32, Vec<u8>> = BTreeMap::new();
            for e in enumerate_cells(dim(n), 1).unwrap() {
                let c = e.edge_color().unwrap().0;
                for w in e.edge_endpoints().unwrap() {
                    per_vertex.entry(w).or_default().push(c);
                }
            }
            for colors in per_vertex.values() {
                let distinct: HashSet<_> = colors.iter().collect();
                assert_eq!(colors.len(), n as usize);
                assert_eq!(distinct.len(), n as usize);
            }
        }
    }

    #[test]
    fn bicolors() {
        let n = dim(4);
        let sq = CubeCell::new(n, &[3, 2], 0b1000).unwrap();
        assert_eq!(sq.face_bicolor().unwrap(), Bicolor::new(2, 3).unwrap());
        assert!(CubeCell::vertex(n, 0).unwrap().face_bicolor().is_err());
        for n in 3..=7 {
            let n = dim(n);
            let mut groups: BTreeMap<Bicolor, usize> = BTreeMap::new();
            for sq in enumerate_cells(n, 2).unwrap() {
                *groups.entry(sq.face_bicolor().unwrap()).or_default() += 1;
            }
            assert_eq!(groups.len() as u64, binomial(n.get() as u64, 2));
            assert!(groups.values().all(|&c| c == 1 << (n.get() - 2)));
        }
        let n5 = dim(5);
        let b = Bicolor::new(4, 2).unwrap();
        let squares = squares_with_bicolor(n5, b).unwrap();
        assert_eq!(squares.len(), 8);
        assert!(squares.iter().all(|s| s.face_bicolor().unwrap() == b));
    }

    #[test]
    fn parity_and_bipartition() {
        let p = |s: &str| CubeCell::vertex_from_bits(s).unwrap().vertex_parity().unwrap();
        assert_eq!(p("000"), Parity::White);
        assert_eq!(p("101"), Parity::White);
        assert_eq!(p("100"), Parity::Black);
        assert!(CubeCell::new(dim(3), &[1], 0).unwrap().vertex_parity().is_err());
        for n in 2..=8 {
            for e in enumerate_cells(dim(n), 1).unwrap() {
                let [a, b] = e.edge_endpoints().unwrap();
                assert_ne!(word_parity(a), word_parity(b));
            }
        }
    }

    #[test]
    fn edge_incidence_degree_in_full_skeleton() {
        for n in 2..=8 {
            let n = dim(n);
            let mut degree: BTreeMap<CubeCell, usize> = BTreeMap::new();
            for sq in enumerate_cells(n, 2).unwrap() {
                for e in sq.boundary().unwrap() {
                    *degree.entry(e).or_default() += 1;
                }
            }
            assert_eq!(degree.len() as u64, n.edge_count());
            assert!(degree.values().all(|&d| d == n.get() as usize - 1));
        }
    }

    #[test]
    fn text_form() {
        let n = dim(5);
        let c = CubeCell::new(n, &[1, 3], 0b01010).unwrap();
        let s = c.to_string();
        assert_eq!(s, "2-face[n=5; active={1,3}; fixed=*1*10]");
        assert_eq!(s.parse::<CubeCell>().unwrap(), c);
        let v = CubeCell::vertex(n, 0b10110).unwrap();
        assert_eq!(v.to_string(), "0-face[n=5; active={}; fixed=10110]");
        assert_eq!(v.to_string().parse::<CubeCell>().unwrap(), v);
        for bad in [
            "2-face[n=5; active={1,3}; fixed=01*0*]",
            "1-face[n=5; active={1,3}; fixed=*1*10]",
            "2-face[n=5; active={1,3}; fixed=*1*1]",
            "face[n=5]",
        ] {
            assert!(bad.parse::<CubeCell>().is_err(), "{bad}");
        }
    }

    #[test]
    fn rejects_non_canonical_masks() {
        let n = dim(3);
        assert!(CubeCell::from_masks(n, 0b100, 0b100).is_err());
        assert!(CubeCell::from_masks(n, 0b1000, 0).is_err());
        assert!(CubeCell::new(n, &[1, 1], 0).is_err());
        assert!(CubeCell::new(n, &[4], 0).is_err());
    }

    #[test]
    fn submask_iteration_is_ascending_and_complete() {
        let mask = 0b101101;
        let subs: Vec<u32> = submasks_ascending(mask).collect();
        assert_eq!(subs.len(), 16);
        assert!(subs.windows(2).all(|w| w[0] < w[1]));
        assert!(subs.iter().all(|s| s & !mask == 0));
        assert_eq!(submasks_ascending(0).collect::<Vec<_>>(), [0]);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn any_cell() -> impl Strategy<Value = CubeCell> {
            (2u32..=12)
                .prop_flat_map(|n| (Just(n), 0u32..(1 << n), 0u32..(1 << n)))
                .prop_map(|(n, active, word)| {
                    CubeCell::from_masks(Dimension::new(n).unwrap(), active, word & !active).unwrap()
                })
        }

        proptest! {
            #[test]
            fn text_round_trip(c in any_cell()) {
                let parsed: CubeCell = c.to_string().parse().unwrap();
                prop_assert_eq!(parsed, c);
            }

            #[test]
            fn ordering_agrees_with_equality(a in any_cell(), b in any_cell()) {
                prop_assert_eq!(a.cmp(&b) == Ordering::Equal, a == b);
                prop_assert_eq!(a.to_string() == b.to_string(), a == b);
            }
        }
    }
}

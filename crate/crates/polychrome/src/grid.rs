//! The grid of color classes: cells, shapes, and shape sequences.
//!
//! Under a simple coloring, every `i`-dimensional subcube of an embedded
//! `Q_d` lands in the cell of the `(i+1)`-dimensional grid given by its gap
//! vector. Grouping the subcubes by which `i` of the host's stars they use
//! partitions them into `C(d, i)` parallelepiped-shaped [`MultiShape`]s,
//! whose multiplicities record how many subcubes share a cell. Punctures
//! (deleting one vertex or edge of the embedded cube) decrement exactly one
//! multiplicity per affected shape.

use std::collections::BTreeMap;
use std::fmt;

use crate::coloring::Coloring;
use crate::pattern::{GapVector, PunctureSpec};
use crate::util::binomial;
use crate::{Error, Result};

/// A cell of the `(i+1)`-dimensional grid: the gap vector of a colored
/// subcube. Its level is the coordinate sum; for edge colorings a cell is
/// the pair `(l, r)` with column `l` and row `l + r`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell(pub Vec<u64>);

impl Cell {
    pub fn new(coords: Vec<u64>) -> Self {
        assert!(!coords.is_empty(), "cells need at least one coordinate");
        Cell(coords)
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn level(&self) -> u64 {
        self.0.iter().sum()
    }

    pub fn coords(&self) -> &[u64] {
        &self.0
    }
}

impl From<&GapVector> for Cell {
    fn from(g: &GapVector) -> Self {
        Cell(g.entries().to_vec())
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, c) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// The support of a parallelepiped: `{origin + a : 0 <= a_k < dims_k}`,
/// in lexicographic offset order. Multiplicities are the caller's business.
pub fn parallelepiped(origin: &Cell, dims: &[u64]) -> Result<Vec<Cell>> {
    if dims.len() != origin.arity() {
        return Err(Error::ArityMismatch {
            expected: origin.arity(),
            got: dims.len(),
        });
    }
    if dims.iter().any(|&d| d == 0) {
        return Err(Error::InvalidArgument(
            "parallelepiped dimensions must be positive".into(),
        ));
    }
    let mut cells = Vec::new();
    let mut offset = vec![0u64; dims.len()];
    loop {
        cells.push(Cell(
            origin
                .coords()
                .iter()
                .zip(&offset)
                .map(|(o, a)| o + a)
                .collect(),
        ));
        if !advance_odometer(&mut offset, dims) {
            break;
        }
    }
    Ok(cells)
}

fn advance_odometer(offset: &mut [u64], dims: &[u64]) -> bool {
    for j in (0..offset.len()).rev() {
        offset[j] += 1;
        if offset[j] < dims[j] {
            return true;
        }
        offset[j] = 0;
    }
    false
}

/// One shape of a shape sequence: the cells covered by the subcubes of an
/// embedding that use one particular set of `i` stars, with multiplicities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiShape {
    /// Kept star indices (0-based, ascending) within the host's `d` stars.
    stars: Vec<u32>,
    origin: Cell,
    dims: Vec<u64>,
    /// Offset (relative to origin) -> number of subcubes in that cell.
    counts: BTreeMap<Vec<u64>, u64>,
}

impl MultiShape {
    pub fn stars(&self) -> &[u32] {
        &self.stars
    }

    pub fn origin(&self) -> &Cell {
        &self.origin
    }

    /// Parallelepiped dimension vector; `sum(dims) = d + 1`.
    pub fn dims(&self) -> &[u64] {
        &self.dims
    }

    /// Surviving (offset, multiplicity) pairs in lexicographic offset order.
    pub fn offsets(&self) -> impl Iterator<Item = (&[u64], u64)> {
        self.counts.iter().map(|(o, &m)| (o.as_slice(), m))
    }

    /// Surviving absolute cells with multiplicities.
    pub fn cells(&self) -> impl Iterator<Item = (Cell, u64)> + '_ {
        self.counts.iter().map(|(o, &m)| {
            (
                Cell(
                    self.origin
                        .coords()
                        .iter()
                        .zip(o)
                        .map(|(a, b)| a + b)
                        .collect(),
                ),
                m,
            )
        })
    }

    pub fn total_multiplicity(&self) -> u64 {
        self.counts.values().sum()
    }

    /// Number of distinct surviving cells at an absolute level.
    pub fn distinct_at_level(&self, level: u64) -> u64 {
        let base = self.origin.level();
        self.counts
            .keys()
            .filter(|o| base + o.iter().sum::<u64>() == level)
            .count() as u64
    }

    /// Label like `S12` (stars displayed 1-based).
    pub fn label(&self) -> String {
        let mut s = String::from("S");
        for t in &self.stars {
            s.push_str(&(t + 1).to_string());
        }
        s
    }

    fn decrement(&mut self, offset: &[u64]) {
        let m = self
            .counts
            .get_mut(offset)
            .expect("puncture offset must lie inside the shape");
        *m -= 1;
        if *m == 0 {
            self.counts.remove(offset);
        }
    }
}

/// The shape sequence of an embedding with the given gap vector: one shape
/// per `i`-subset of the `d` stars, in lexicographic star-subset order
/// (for `i = 1` that is left-to-right by star).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShapeSequence {
    d: usize,
    i: u32,
    gaps: GapVector,
    shapes: Vec<MultiShape>,
}

impl ShapeSequence {
    pub fn d(&self) -> usize {
        self.d
    }

    pub fn i(&self) -> u32 {
        self.i
    }

    pub fn gaps(&self) -> &GapVector {
        &self.gaps
    }

    pub fn shapes(&self) -> &[MultiShape] {
        &self.shapes
    }

    /// Span of levels with at least one surviving cell, or None if the
    /// sequence has been emptied.
    pub fn level_span(&self) -> Option<(u64, u64)> {
        let mut span: Option<(u64, u64)> = None;
        for shape in &self.shapes {
            let base = shape.origin.level();
            for offset in shape.counts.keys() {
                let lvl = base + offset.iter().sum::<u64>();
                span = Some(match span {
                    None => (lvl, lvl),
                    Some((lo, hi)) => (lo.min(lvl), hi.max(lvl)),
                });
            }
        }
        span
    }

    /// Maximum coordinate extent over shapes (number of steps, not cells).
    pub fn width(&self) -> u64 {
        self.shapes
            .iter()
            .flat_map(|s| s.dims.iter().map(|&d| d - 1))
            .max()
            .unwrap_or(0)
    }

    /// Structured text rendering: one record per shape with star set,
    /// origin, dims, and the surviving cell/multiplicity list.
    pub fn to_text(&self) -> String {
        use std::fmt::Write;
        let mut out = String::new();
        let levels = match self.level_span() {
            Some((lo, hi)) => format!("{lo}..{hi}"),
            None => "empty".into(),
        };
        writeln!(
            out,
            "shape-sequence d={} i={} gaps={} levels={levels}",
            self.d, self.i, self.gaps
        )
        .unwrap();
        for shape in &self.shapes {
            write!(out, "shape {} origin={} dims=(", shape.label(), shape.origin).unwrap();
            for (k, dim) in shape.dims.iter().enumerate() {
                if k > 0 {
                    out.push(',');
                }
                write!(out, "{dim}").unwrap();
            }
            writeln!(out, ")").unwrap();
            for (cell, mult) in shape.cells() {
                writeln!(out, "  {cell} x{mult}").unwrap();
            }
        }
        out
    }

    /// SVG rendering of an edge-coloring (`i = 1`) sequence: columns are the
    /// first cell coordinate, rows are levels, shaded cells belong to some
    /// shape. When a coloring is supplied each visible cell shows its color.
    pub fn to_svg(&self, coloring: Option<&Coloring>) -> Result<String> {
        use std::fmt::Write;
        if self.i != 1 {
            return Err(Error::Unsupported(
                "SVG rendering is defined for edge colorings (i = 1) only".into(),
            ));
        }
        let (lvl_lo, lvl_hi) = self.level_span().ok_or(Error::EmptySequence)?;
        let mut covered: BTreeMap<(u64, u64), u64> = BTreeMap::new();
        let mut col_hi = 0u64;
        for shape in &self.shapes {
            for (cell, mult) in shape.cells() {
                let col = cell.coords()[0];
                col_hi = col_hi.max(col);
                *covered.entry((col, cell.level())).or_insert(0) += mult;
            }
        }
        let cols = col_hi + 2;
        let rows = lvl_hi - lvl_lo + 1;
        let sz = 24u64;
        let mut svg = String::new();
        writeln!(
            svg,
            "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{}\" height=\"{}\" \
             font-family=\"monospace\" font-size=\"12\">",
            cols * sz + 2,
            rows * sz + 2
        )
        .unwrap();
        for row in 0..rows {
            let level = lvl_lo + row;
            for col in 0..cols {
                let x = col * sz + 1;
                let y = row * sz + 1;
                let shaded = covered.contains_key(&(col, level));
                let fill = if shaded { "#cccccc" } else { "#ffffff" };
                writeln!(
                    svg,
                    "<rect x=\"{x}\" y=\"{y}\" width=\"{sz}\" height=\"{sz}\" \
                     fill=\"{fill}\" stroke=\"#333333\"/>"
                )
                .unwrap();
                if level >= col {
                    if let Some(c) = coloring {
                        let color = c.color_of(&[col, level - col])?;
                        writeln!(
                            svg,
                            "<text x=\"{}\" y=\"{}\" text-anchor=\"middle\">{color}</text>",
                            x + sz / 2,
                            y + sz / 2 + 4
                        )
                        .unwrap();
                    }
                }
            }
        }
        writeln!(svg, "</svg>").unwrap();
        Ok(svg)
    }
}

/// Builds the shape sequence for an embedding of `Q_d` (described by its
/// gap vector) when `Q_i`'s are colored.
///
/// For each `i`-subset `T` of the host's stars, the shape's `j`-th origin
/// coordinate is the sum of the host gaps inside the `j`-th `T`-gap, its
/// `j`-th dimension is one more than the number of free stars there, and
/// the multiplicity at offset `s` is the product of `C(dims_j - 1, s_j)`.
pub fn shape_sequence(gaps: &GapVector, i: u32) -> Result<ShapeSequence> {
    let d = gaps.dim();
    if i == 0 || i as usize > d {
        return Err(Error::InvalidArgument(format!(
            "need 1 <= i <= d, got i={i} d={d}"
        )));
    }
    let g = gaps.entries();
    let mut shapes = Vec::with_capacity(binomial(d as u64, i as u64) as usize);
    let mut kept: Vec<u32> = (0..i).collect();
    loop {
        let arity = i as usize + 1;
        let mut origin = vec![0u64; arity];
        let mut dims = vec![0u64; arity];
        for j in 0..arity {
            let gap_lo = if j == 0 { 0 } else { kept[j - 1] as usize + 1 };
            let gap_hi = if j == arity - 1 {
                d
            } else {
                kept[j] as usize
            };
            origin[j] = g[gap_lo..=gap_hi].iter().sum();
            let free = if j == 0 {
                kept[0] as usize
            } else if j == arity - 1 {
                d - 1 - kept[i as usize - 1] as usize
            } else {
                (kept[j] - kept[j - 1]) as usize - 1
            };
            dims[j] = free as u64 + 1;
        }
        let mut counts = BTreeMap::new();
        let mut offset = vec![0u64; arity];
        loop {
            let mult: u64 = offset
                .iter()
                .zip(&dims)
                .map(|(&s, &dim)| binomial(dim - 1, s))
                .product();
            counts.insert(offset.clone(), mult);
            if !advance_odometer(&mut offset, &dims) {
                break;
            }
        }
        shapes.push(MultiShape {
            stars: kept.clone(),
            origin: Cell(origin),
            dims,
            counts,
        });
        if !advance_kept(&mut kept, d as u32) {
            break;
        }
    }
    Ok(ShapeSequence {
        d,
        i,
        gaps: gaps.clone(),
        shapes,
    })
}

fn advance_kept(combo: &mut [u32], n: u32) -> bool {
    let k = combo.len();
    let mut j = k;
    while j > 0 {
        j -= 1;
        if combo[j] < n - (k as u32 - j as u32) {
            combo[j] += 1;
            for l in j + 1..k {
                combo[l] = combo[l - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Applies a puncture to a shape sequence.
///
/// Deleting a vertex removes one subcube from every shape: the one whose
/// free-star bits agree with the deletion word, i.e. the offset counting
/// the word's 1s per `T`-gap. Deleting an edge affects only the shapes
/// whose star set contains the edge's star.
pub fn apply_puncture(seq: &ShapeSequence, puncture: &PunctureSpec) -> Result<ShapeSequence> {
    puncture.validate(seq.d)?;
    let mut out = seq.clone();
    match puncture {
        PunctureSpec::None => {}
        PunctureSpec::DeleteVertex(word) => {
            for shape in &mut out.shapes {
                let offset = puncture_offset(&shape.stars, seq.d, word.ones_mask());
                shape.decrement(&offset);
            }
        }
        PunctureSpec::DeleteEdge(word) => {
            let star = word.star_positions()[0];
            for shape in &mut out.shapes {
                if shape.stars.contains(&star) {
                    let offset = puncture_offset(&shape.stars, seq.d, word.ones_mask());
                    shape.decrement(&offset);
                }
            }
        }
    }
    Ok(out)
}

/// Offset of the cell a deletion word selects in the shape with the given
/// kept stars: per region, the count of the word's 1-bits on free stars.
fn puncture_offset(kept: &[u32], d: usize, word_ones: u64) -> Vec<u64> {
    let mut offset = vec![0u64; kept.len() + 1];
    for s in 0..d as u32 {
        if kept.contains(&s) {
            continue;
        }
        if word_ones >> s & 1 == 1 {
            let region = kept.iter().filter(|&&t| t < s).count();
            offset[region] += 1;
        }
    }
    offset
}

/// Per-level maxima of distinct surviving cells across shapes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RowProfile {
    /// Lowest occupied level.
    pub base_level: u64,
    /// `xs[k]` is the profile value at level `base_level + k`; entries at
    /// the ends are nonzero.
    pub xs: Vec<u64>,
}

impl RowProfile {
    pub fn sum(&self) -> u64 {
        self.xs.iter().sum()
    }
}

/// For each occupied level, the maximum over shapes of the number of
/// distinct surviving cells at that level.
pub fn row_profile(seq: &ShapeSequence) -> Result<RowProfile> {
    let (lo, hi) = seq.level_span().ok_or(Error::EmptySequence)?;
    let mut xs = Vec::with_capacity((hi - lo + 1) as usize);
    for level in lo..=hi {
        let x = seq
            .shapes
            .iter()
            .map(|s| s.distinct_at_level(level))
            .max()
            .unwrap_or(0);
        xs.push(x);
    }
    while xs.last() == Some(&0) {
        xs.pop();
    }
    Ok(RowProfile {
        base_level: lo,
        xs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pattern::{sub_subcubes, StarPattern};

    fn gv(entries: &[u64]) -> GapVector {
        GapVector::new(entries.to_vec())
    }

    fn pat(s: &str) -> StarPattern {
        s.parse().unwrap()
    }

    #[test]
    fn parallelepiped_examples() {
        let cells = parallelepiped(&Cell::new(vec![3, 7]), &[1, 4]).unwrap();
        let want: Vec<Cell> = [(3, 7), (3, 8), (3, 9), (3, 10)]
            .iter()
            .map(|&(a, b)| Cell::new(vec![a, b]))
            .collect();
        assert_eq!(cells, want);

        let cells = parallelepiped(&Cell::new(vec![9, 2, 1]), &[3, 1, 1]).unwrap();
        let want: Vec<Cell> = [(9, 2, 1), (10, 2, 1), (11, 2, 1)]
            .iter()
            .map(|&(a, b, c)| Cell::new(vec![a, b, c]))
            .collect();
        assert_eq!(cells, want);

        let origin = Cell::new(vec![0, 0, 0]);
        assert_eq!(
            parallelepiped(&origin, &[1, 1, 1]).unwrap(),
            vec![origin.clone()]
        );
        assert!(parallelepiped(&origin, &[1, 0, 1]).is_err());
    }

    #[test]
    fn q4_edge_shapes_match_known_parallelograms() {
        // Gap vector of [1101*100010*111*00101*].
        let seq = shape_sequence(&gv(&[3, 2, 3, 2, 0]), 1).unwrap();
        assert_eq!(seq.shapes().len(), 4);
        let expect = [
            (vec![3u64, 7], vec![1u64, 4]),
            (vec![5, 5], vec![2, 3]),
            (vec![8, 2], vec![3, 2]),
            (vec![10, 0], vec![4, 1]),
        ];
        for (shape, (origin, dims)) in seq.shapes().iter().zip(&expect) {
            assert_eq!(shape.origin().coords(), origin.as_slice());
            assert_eq!(shape.dims(), dims.as_slice());
        }
    }

    #[test]
    fn q4_subcube_shapes_match_known_parallelepipeds() {
        // Gap vector of [1111*011*10110*101*001]; the six shapes, keyed by
        // star pair, with origins and dims as tabulated for that embedding.
        let seq = shape_sequence(&gv(&[4, 2, 3, 2, 1]), 2).unwrap();
        assert_eq!(seq.shapes().len(), 6);
        let mut by_stars = BTreeMap::new();
        for s in seq.shapes() {
            by_stars.insert(s.stars().to_vec(), (s.origin().clone(), s.dims().to_vec()));
        }
        let expect: &[(&[u32], &[u64], &[u64])] = &[
            (&[2, 3], &[9, 2, 1], &[3, 1, 1]),
            (&[1, 3], &[6, 5, 1], &[2, 2, 1]),
            (&[0, 3], &[4, 7, 1], &[1, 3, 1]),
            (&[0, 2], &[4, 5, 3], &[1, 2, 2]),
            (&[1, 2], &[6, 3, 3], &[2, 1, 2]),
            (&[0, 1], &[4, 2, 6], &[1, 1, 3]),
        ];
        for (stars, origin, dims) in expect {
            let (o, dm) = &by_stars[&stars.to_vec()];
            assert_eq!(o.coords(), *origin, "stars {stars:?}");
            assert_eq!(dm.as_slice(), *dims, "stars {stars:?}");
        }
        // All six occupy the same d - i + 1 levels.
        assert_eq!(seq.level_span(), Some((12, 14)));
    }

    #[test]
    fn shape_dims_sum_and_total_multiplicity() {
        for (d, i) in [(3usize, 1u32), (4, 2), (5, 3), (6, 1), (6, 3)] {
            let gaps = gv(&vec![1; d + 1]);
            let seq = shape_sequence(&gaps, i).unwrap();
            assert_eq!(seq.shapes().len() as u64, binomial(d as u64, i as u64));
            for shape in seq.shapes() {
                assert_eq!(shape.dims().iter().sum::<u64>(), d as u64 + 1);
                assert_eq!(shape.total_multiplicity(), 1 << (d - i as usize));
            }
        }
    }

    #[test]
    fn all_zero_q3_covers_the_four_base_cells() {
        let seq = shape_sequence(&gv(&[0, 0, 0, 0]), 1).unwrap();
        let mut cells = std::collections::BTreeSet::new();
        for shape in seq.shapes() {
            for (c, _) in shape.cells() {
                cells.insert(c);
            }
        }
        let want: std::collections::BTreeSet<Cell> =
            [(0u64, 0u64), (1, 0), (2, 0), (0, 1), (1, 1), (0, 2)]
                .iter()
                .map(|&(a, b)| Cell::new(vec![a, b]))
                .collect();
        assert_eq!(cells, want);
    }

    /// Classifies every surviving sub-subcube of a concrete host and
    /// compares the multiset of cells with the algebraic shape sequence.
    fn assert_matches_concrete(host: &StarPattern, i: u32, puncture: &PunctureSpec) {
        let mut concrete: BTreeMap<(u64, Vec<u64>), u64> = BTreeMap::new();
        for sub in sub_subcubes(host, i, puncture).unwrap() {
            let mask = sub.stars_mask();
            let gaps = sub.gap_vector();
            *concrete.entry((mask, gaps.entries().to_vec())).or_insert(0) += 1;
        }
        let seq = apply_puncture(&shape_sequence(&host.gap_vector(), i).unwrap(), puncture)
            .unwrap();
        let mut algebraic: BTreeMap<(u64, Vec<u64>), u64> = BTreeMap::new();
        let host_stars = host.star_positions();
        for shape in seq.shapes() {
            let mask = shape
                .stars()
                .iter()
                .fold(0u64, |m, &j| m | 1 << host_stars[j as usize]);
            for (cell, mult) in shape.cells() {
                *algebraic.entry((mask, cell.coords().to_vec())).or_insert(0) += mult;
            }
        }
        assert_eq!(concrete, algebraic, "host {host} i={i} puncture {puncture}");
    }

    #[test]
    fn sequence_matches_concrete_classification() {
        let host = pat("[1101*100010*111*00101*]");
        assert_matches_concrete(&host, 1, &PunctureSpec::None);
        assert_matches_concrete(&host, 2, &PunctureSpec::None);
        assert_matches_concrete(&host, 1, &PunctureSpec::DeleteVertex(pat("[1010]")));
        assert_matches_concrete(&host, 2, &PunctureSpec::DeleteEdge(pat("[1*01]")));
        let host = pat("[01*0**]");
        assert_matches_concrete(&host, 1, &PunctureSpec::DeleteVertex(pat("[011]")));
        assert_matches_concrete(&host, 2, &PunctureSpec::DeleteVertex(pat("[111]")));
    }

    #[test]
    fn vertex_puncture_at_all_ones_removes_top_cells() {
        let seq = shape_sequence(&gv(&[0, 1, 2, 0, 3]), 1).unwrap();
        let punct = PunctureSpec::DeleteVertex(pat("[1111]"));
        let after = apply_puncture(&seq, &punct).unwrap();
        let (lo, hi) = seq.level_span().unwrap();
        assert_eq!(after.level_span(), Some((lo, hi - 1)));
        for (before, now) in seq.shapes().iter().zip(after.shapes()) {
            assert_eq!(before.distinct_at_level(hi) - 1, now.distinct_at_level(hi));
        }
    }

    #[test]
    fn edge_puncture_touches_only_its_star_shape() {
        let seq = shape_sequence(&gv(&[2, 0, 1, 0, 0, 1]), 1).unwrap();
        let punct = PunctureSpec::DeleteEdge(pat("[11*00]"));
        let after = apply_puncture(&seq, &punct).unwrap();
        for (k, (before, now)) in seq.shapes().iter().zip(after.shapes()).enumerate() {
            if k == 2 {
                // Loses the offset-(2,0) cell, a single-subcube cell two
                // levels above the shape's base.
                assert_eq!(before.total_multiplicity() - 1, now.total_multiplicity());
                let base = before.origin().level();
                assert_eq!(
                    before.distinct_at_level(base + 2) - 1,
                    now.distinct_at_level(base + 2)
                );
            } else {
                assert_eq!(before, now);
            }
        }
    }

    #[test]
    fn none_puncture_is_identity() {
        let seq = shape_sequence(&gv(&[1, 0, 2, 1]), 1).unwrap();
        assert_eq!(apply_puncture(&seq, &PunctureSpec::None).unwrap(), seq);
    }

    #[test]
    fn qd_row_profile_is_min_of_ends() {
        for d in 1..=8usize {
            let gaps = gv(&vec![2; d + 1]);
            let seq = shape_sequence(&gaps, 1).unwrap();
            let profile = row_profile(&seq).unwrap();
            let want: Vec<u64> = (0..d as u64)
                .map(|t| (t + 1).min(d as u64 - t))
                .collect();
            assert_eq!(profile.xs, want, "d={d}");
        }
    }

    #[test]
    fn q3_minus_vertex_profile() {
        let seq = shape_sequence(&gv(&[0, 0, 0, 0]), 1).unwrap();
        let after =
            apply_puncture(&seq, &PunctureSpec::DeleteVertex(pat("[111]"))).unwrap();
        let profile = row_profile(&after).unwrap();
        // Levels 0 and 1 survive with at most 1 and 2 distinct cells; the
        // top level is gone from every shape. The bound sums to 3.
        assert_eq!(profile.xs, vec![1, 2]);
        assert_eq!(profile.sum(), 3);
    }

    #[test]
    fn single_cell_profile() {
        let seq = shape_sequence(&gv(&[0, 0]), 1).unwrap();
        let profile = row_profile(&seq).unwrap();
        assert_eq!(profile.xs, vec![1]);
    }

    #[test]
    fn text_rendering_lists_shapes() {
        let seq = shape_sequence(&gv(&[3, 2, 3, 2, 0]), 1).unwrap();
        let text = seq.to_text();
        assert!(text.starts_with("shape-sequence d=4 i=1 gaps=(3,2,3,2,0)"));
        assert!(text.contains("shape S1 origin=(3,7) dims=(1,4)"));
        assert!(text.contains("  (3,10) x1"));
    }
}

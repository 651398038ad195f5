//! Grid bounds on polychromatic numbers.
//!
//! * [`pig_bound`]: the level-profile bound — sum over occupied levels of
//!   the per-level maximum of distinct cells across shapes.
//! * [`qd_closed_form`]: the exact edge polychromatic number of `Q_d`.
//! * [`binomial_upper`] / [`max_product_lower`]: the subcube-coloring
//!   bounds `C(d+1, i+1)` and the largest product of `i+1` positive parts
//!   summing to `d+1`.
//! * [`partition_intervals`]: the constructive interval partition behind
//!   the level-profile bound, which doubles as a violation finder.

use std::fmt;

use crate::coloring::Coloring;
use crate::grid::{row_profile, ShapeSequence};
use crate::util::binomial;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundKind {
    Pig,
    BinomialUpper,
    MaxProductLower,
    ClosedForm,
}

impl fmt::Display for BoundKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            BoundKind::Pig => "pig",
            BoundKind::BinomialUpper => "binomial-upper",
            BoundKind::MaxProductLower => "max-product-lower",
            BoundKind::ClosedForm => "closed-form",
        };
        f.write_str(s)
    }
}

/// A computed bound with enough context to print or tabulate it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundReport {
    pub kind: BoundKind,
    pub value: u64,
    /// `(d, i, puncture-or-sequence description)`.
    pub inputs: (u64, u32, String),
    /// Per-level profile values when `kind` is `Pig`.
    pub detail: Option<Vec<(u64, u64)>>,
}

impl BoundReport {
    /// Single-line record form.
    pub fn line(&self) -> String {
        let (d, i, ref subject) = self.inputs;
        format!("{} d={d} i={i} {subject} value={}", self.kind, self.value)
    }

    /// Row for the summary CSV (`d,i,puncture,kind,value`).
    pub fn csv_row(&self) -> String {
        let (d, i, ref subject) = self.inputs;
        format!("{d},{i},{subject},{},{}", self.kind, self.value)
    }
}

/// Sum over occupied levels of the row profile: an upper bound on the
/// number of colors every instance of the sequence can be forced to meet.
pub fn pig_bound(seq: &ShapeSequence) -> Result<BoundReport> {
    let profile = row_profile(seq)?;
    let detail: Vec<(u64, u64)> = profile
        .xs
        .iter()
        .enumerate()
        .map(|(k, &x)| (profile.base_level + k as u64, x))
        .collect();
    Ok(BoundReport {
        kind: BoundKind::Pig,
        value: profile.sum(),
        inputs: (seq.d() as u64, seq.i(), format!("gaps={}", seq.gaps())),
        detail: Some(detail),
    })
}

/// `(d+1)^2/4` for odd `d`, `d(d+2)/4` for even `d`; equals the pig bound
/// of any `Q_d` edge shape sequence.
pub fn qd_closed_form(d: u32) -> Result<u64> {
    if d < 1 {
        return Err(Error::InvalidArgument("need d >= 1".into()));
    }
    Ok(crate::coloring::qd_palette(d) as u64)
}

/// `C(d+1, i+1)`: the number of cells covered by the all-zeros embedding.
pub fn binomial_upper(d: u32, i: u32) -> Result<u64> {
    if i < 1 || i > d {
        return Err(Error::InvalidArgument(format!(
            "need 1 <= i <= d, got i={i} d={d}"
        )));
    }
    Ok(binomial(d as u64 + 1, i as u64 + 1))
}

/// Largest product of `i+1` positive integers summing to `d+1`, found by
/// exhaustive composition search (the best split is near-equal parts).
pub fn max_product_lower(d: u32, i: u32) -> Result<u64> {
    if i < 1 || i > d {
        return Err(Error::InvalidArgument(format!(
            "need 1 <= i <= d, got i={i} d={d}"
        )));
    }
    fn best(remaining: u64, parts: u64) -> u64 {
        if parts == 1 {
            return remaining;
        }
        let mut max = 0;
        for first in 1..=remaining - (parts - 1) {
            max = max.max(first * best(remaining - first, parts - 1));
        }
        max
    }
    Ok(best(d as u64 + 1, i as u64 + 1))
}

/// Outcome of the interval-partition procedure for one color.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PartitionOutcome {
    /// Half-open column intervals `[start, end)`, one per shape prefix,
    /// jointly covering `[0, columns)`: every copy of shape `j` located in
    /// the `j`-th interval contains the color.
    Partition(Vec<(u64, u64)>),
    /// A sequence instance in which every shape misses the color: the
    /// column of each shape, in order.
    Violation { shape_columns: Vec<u64>, color: u32 },
}

/// Runs the interval-partition procedure for `color` over a region of
/// `columns` columns and the sequence's own levels, colored by `coloring`.
///
/// The region's rows are anchored at base level `columns`, so every cell
/// `(column, level)` corresponds to the valid grid cell
/// `(column, level - column)`. Shape copies are horizontal translations.
///
/// Starting from the leftmost shape, each step finds the leftmost copy of
/// the current shape (at or right of the previous cut) that misses the
/// color and cuts there; if no such copy exists the interval runs to the
/// right edge and the procedure stops. Falling off the last shape exhibits
/// a violating instance.
pub fn partition_intervals(
    coloring: &Coloring,
    seq: &ShapeSequence,
    columns: u64,
    color: u32,
) -> Result<PartitionOutcome> {
    if seq.i() != 1 {
        return Err(Error::Unsupported(
            "the interval partition works on edge-coloring (i = 1) sequences".into(),
        ));
    }
    if coloring.arity() != 2 {
        return Err(Error::ArityMismatch {
            expected: 2,
            got: coloring.arity(),
        });
    }
    let (seq_lo, _) = seq.level_span().ok_or(Error::EmptySequence)?;
    let base_level = columns;
    // Whether the copy of `shape` located at column `c` contains `color`.
    let copy_contains = |shape: &crate::grid::MultiShape, c: u64| -> Result<bool> {
        for (cell, _) in shape.cells() {
            let col = c + (cell.coords()[0] - shape.origin().coords()[0]);
            let level = base_level + (cell.level() - seq_lo);
            debug_assert!(level >= col);
            if coloring.color_of(&[col, level - col])? == color {
                return Ok(true);
            }
        }
        Ok(false)
    };
    let shapes = seq.shapes();
    let mut cuts: Vec<u64> = Vec::new();
    let mut prev = 0u64;
    for (idx, shape) in shapes.iter().enumerate() {
        let extent = shape.dims()[0];
        let last_column = columns.saturating_sub(extent);
        let mut found = None;
        let mut c = prev;
        while c <= last_column {
            if !copy_contains(shape, c)? {
                found = Some(c);
                break;
            }
            c += 1;
        }
        match found {
            None => {
                // Every remaining copy of this shape contains the color.
                let mut intervals = Vec::with_capacity(cuts.len() + 1);
                let mut start = 0u64;
                for &cut in &cuts {
                    intervals.push((start, cut));
                    start = cut;
                }
                intervals.push((start, columns));
                return Ok(PartitionOutcome::Partition(intervals));
            }
            Some(cut) => {
                if idx + 1 == shapes.len() {
                    let mut shape_columns = cuts;
                    shape_columns.push(cut);
                    return Ok(PartitionOutcome::Violation {
                        shape_columns,
                        color,
                    });
                }
                cuts.push(cut);
                prev = cut;
            }
        }
    }
    unreachable!("the loop always returns at the last shape");
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::catalog;
    use crate::grid::{apply_puncture, shape_sequence};
    use crate::pattern::{GapVector, PunctureSpec};
    use std::collections::BTreeMap;

    fn gv(entries: &[u64]) -> GapVector {
        GapVector::new(entries.to_vec())
    }

    #[test]
    fn closed_form_values() {
        assert_eq!(qd_closed_form(1).unwrap(), 1);
        assert_eq!(qd_closed_form(4).unwrap(), 6);
        assert_eq!(qd_closed_form(7).unwrap(), 16);
        assert!(qd_closed_form(0).is_err());
    }

    #[test]
    fn pig_bound_of_q5() {
        let seq = shape_sequence(&gv(&[1, 0, 3, 2, 0, 1]), 1).unwrap();
        let report = pig_bound(&seq).unwrap();
        assert_eq!(report.value, 9);
        let xs: Vec<u64> = report.detail.unwrap().iter().map(|&(_, x)| x).collect();
        assert_eq!(xs, vec![1, 2, 3, 2, 1]);
    }

    #[test]
    fn pig_bound_matches_closed_form_for_any_gaps() {
        for d in 1..=12u32 {
            let gaps: Vec<u64> = (0..=d as u64).map(|k| k % 3).collect();
            let seq = shape_sequence(&gv(&gaps), 1).unwrap();
            assert_eq!(
                pig_bound(&seq).unwrap().value,
                qd_closed_form(d).unwrap(),
                "d={d}"
            );
        }
    }

    #[test]
    fn pig_bound_of_punctured_odd_cube_edge() {
        // Deleting the centered edge with 0s left and 1s right costs the
        // middle level one cell: k^2 - 1 for Q_{2k-1}.
        for k in [2u32, 3, 4] {
            let d = 2 * k - 1;
            let gaps = gv(&vec![0; d as usize + 1]);
            let seq = shape_sequence(&gaps, 1).unwrap();
            let stars = 1u64 << (k - 1);
            let ones = ((1u64 << d) - 1) & !((1 << k) - 1);
            let word = crate::pattern::StarPattern::from_masks(d, ones, stars).unwrap();
            let after = apply_puncture(&seq, &PunctureSpec::DeleteEdge(word)).unwrap();
            assert_eq!(pig_bound(&after).unwrap().value, (k * k - 1) as u64);
        }
    }

    #[test]
    fn pig_bound_of_q3_minus_vertex() {
        let seq = shape_sequence(&gv(&[0, 0, 0, 0]), 1).unwrap();
        let word: crate::pattern::StarPattern = "[111]".parse().unwrap();
        let after = apply_puncture(&seq, &PunctureSpec::DeleteVertex(word)).unwrap();
        assert_eq!(pig_bound(&after).unwrap().value, 3);
    }

    #[test]
    fn binomial_and_max_product_values() {
        assert_eq!(binomial_upper(3, 2).unwrap(), 4);
        assert_eq!(binomial_upper(4, 2).unwrap(), 10);
        assert_eq!(binomial_upper(4, 4).unwrap(), 1);
        assert!(binomial_upper(3, 0).is_err());
        assert_eq!(max_product_lower(5, 2).unwrap(), 8);
        assert_eq!(max_product_lower(6, 2).unwrap(), 12);
        assert_eq!(max_product_lower(4, 2).unwrap(), 4);
        assert_eq!(max_product_lower(3, 2).unwrap(), 2);
    }

    #[test]
    fn binomial_upper_counts_all_zero_cells() {
        for d in 1..=8u32 {
            for i in 1..=d.min(3) {
                let seq = shape_sequence(&gv(&vec![0; d as usize + 1]), i).unwrap();
                let mut cells = std::collections::BTreeSet::new();
                for shape in seq.shapes() {
                    for (c, _) in shape.cells() {
                        cells.insert(c);
                    }
                }
                assert_eq!(cells.len() as u64, binomial_upper(d, i).unwrap(), "d={d} i={i}");
            }
        }
    }

    #[test]
    fn max_product_matches_largest_shape() {
        for d in 1..=8u32 {
            for i in 1..=d.min(3) {
                let seq = shape_sequence(&gv(&vec![1; d as usize + 1]), i).unwrap();
                let largest = seq
                    .shapes()
                    .iter()
                    .map(|s| s.dims().iter().product::<u64>())
                    .max()
                    .unwrap();
                assert_eq!(largest, max_product_lower(d, i).unwrap(), "d={d} i={i}");
            }
        }
    }

    #[test]
    fn partition_for_polychromatic_coloring_has_few_intervals() {
        let coloring = catalog("pd_lower", &BTreeMap::from([("d".to_string(), 3)])).unwrap();
        let seq = shape_sequence(&gv(&[0, 0, 0, 0]), 1).unwrap();
        for color in 0..4u32 {
            match partition_intervals(&coloring, &seq, 40, color).unwrap() {
                PartitionOutcome::Partition(intervals) => {
                    assert!(intervals.len() <= 3, "color {color}: {intervals:?}");
                    assert_eq!(intervals.first().unwrap().0, 0);
                    assert_eq!(intervals.last().unwrap().1, 40);
                }
                PartitionOutcome::Violation { .. } => panic!("color {color} violated"),
            }
        }
    }

    #[test]
    fn partition_detects_missing_color() {
        // Palette padded to 5: color 4 never appears, so the first shape
        // fails everywhere and the violating instance sits at column 0.
        let base = match catalog("pd_lower", &BTreeMap::from([("d".to_string(), 3)])).unwrap() {
            Coloring::Formula(f) => f,
            _ => unreachable!(),
        };
        let padded = Coloring::Formula(base.with_palette(5).unwrap());
        let seq = shape_sequence(&gv(&[0, 0, 0, 0]), 1).unwrap();
        match partition_intervals(&padded, &seq, 30, 4).unwrap() {
            PartitionOutcome::Violation {
                shape_columns,
                color,
            } => {
                assert_eq!(color, 4);
                assert_eq!(shape_columns, vec![0, 0, 0]);
            }
            other => panic!("expected violation, got {other:?}"),
        }
    }

    #[test]
    fn single_shape_partition_is_one_interval() {
        let trivial = catalog("pd_lower", &BTreeMap::from([("d".to_string(), 1)])).unwrap();
        let seq = shape_sequence(&gv(&[0, 0]), 1).unwrap();
        match partition_intervals(&trivial, &seq, 25, 0).unwrap() {
            PartitionOutcome::Partition(intervals) => {
                assert_eq!(intervals, vec![(0, 25)]);
            }
            other => panic!("expected single interval, got {other:?}"),
        }
    }

    #[test]
    fn report_formats() {
        let seq = shape_sequence(&gv(&[0, 0, 0, 0]), 1).unwrap();
        let report = pig_bound(&seq).unwrap();
        assert_eq!(report.line(), "pig d=3 i=1 gaps=(0,0,0,0) value=4");
        assert_eq!(report.csv_row(), "3,1,gaps=(0,0,0,0),pig,4");
    }
}

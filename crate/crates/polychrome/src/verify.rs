//! Polychromaticity verifiers.
//!
//! [`verify_concrete`] enumerates every embedding of `Q_d` in a concrete
//! `Q_n` (and every deletion choice for punctured targets) and checks that
//! the surviving subcube colors cover the palette. It is the brute-force
//! oracle: slow but assumption-free.
//!
//! [`verify_residues`] checks a periodic formula coloring against *all*
//! hypercubes at once: any violating embedding anywhere reduces, gap by
//! gap, to a violating gap vector with entries below the coloring's period
//! lcm, so enumerating those residues is sound and complete. For edge
//! colorings the check is factored further: each shape's colors depend
//! only on the prefix sum of the gaps up to its star, so shapes can be
//! tested independently per (total, deletion, color) triple. That keeps
//! targets like `Q_8` with an 18-color palette well inside a second.
//!
//! Both verifiers report the lexicographically least failure witness
//! regardless of worker count.

use std::fmt::Write as _;

use crate::coloring::{Coloring, FormulaColoring};
use crate::exec::find_first_finding;
use crate::grid::{apply_puncture, shape_sequence, ShapeSequence};
use crate::pattern::{
    edge_deletions, subcube_count, subcube_rank, subcube_unrank, sub_subcubes, vertex_deletions,
    GapVector, PunctureSpec, StarPattern,
};
use crate::util::{binomial, lcm};
use crate::{Error, Result};

/// What to verify: embeddings of `Q_d`, colored on their `Q_i`'s, with a
/// puncture kind quantified over all deletion choices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TargetSpec {
    pub d: u32,
    pub i: u32,
    pub puncture: PunctureKind,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PunctureKind {
    None,
    Vertex,
    Edge,
}

impl TargetSpec {
    pub fn new(d: u32, i: u32, puncture: PunctureKind) -> Result<Self> {
        let t = Self { d, i, puncture };
        t.validate()?;
        Ok(t)
    }

    pub fn validate(&self) -> Result<()> {
        if self.i < 1 || self.i > self.d {
            return Err(Error::InvalidArgument(format!(
                "need 1 <= i <= d, got i={} d={}",
                self.i, self.d
            )));
        }
        Ok(())
    }

    /// All deletion choices the puncture kind quantifies over: one trivial
    /// choice, `2^d` vertex words, or `d * 2^(d-1)` edge words.
    pub fn deletion_choices(&self) -> Vec<PunctureSpec> {
        match self.puncture {
            PunctureKind::None => vec![PunctureSpec::None],
            PunctureKind::Vertex => vertex_deletions(self.d).collect(),
            PunctureKind::Edge => edge_deletions(self.d).collect(),
        }
    }
}

impl std::fmt::Display for PunctureKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            PunctureKind::None => "none",
            PunctureKind::Vertex => "vertex",
            PunctureKind::Edge => "edge",
        };
        f.write_str(s)
    }
}

/// A failing instance, in the mode's native coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    Concrete {
        embedding: StarPattern,
        deletion: PunctureSpec,
        colors_found: Vec<u32>,
    },
    Residue {
        gaps: GapVector,
        deletion: PunctureSpec,
        colors_found: Vec<u32>,
    },
}

/// The verifier's answer. A witness is present exactly when the coloring
/// is not polychromatic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub polychromatic: bool,
    pub palette: u32,
    /// Number of (instance, deletion) pairs covered. The residue verifier
    /// counts covered residue classes, which can exceed what it literally
    /// iterates when the factored check applies.
    pub instances: u128,
    pub witness: Option<Witness>,
}

impl Verdict {
    /// Structured text report.
    pub fn report(&self) -> String {
        let mut out = String::new();
        writeln!(
            out,
            "verdict {}",
            if self.polychromatic {
                "polychromatic"
            } else {
                "not-polychromatic"
            }
        )
        .unwrap();
        writeln!(out, "palette {}", self.palette).unwrap();
        writeln!(out, "instances {}", self.instances).unwrap();
        if let Some(w) = &self.witness {
            match w {
                Witness::Concrete {
                    embedding,
                    deletion,
                    colors_found,
                } => {
                    writeln!(
                        out,
                        "witness embedding {embedding} deletion {deletion} colors {}",
                        color_set(colors_found)
                    )
                    .unwrap();
                }
                Witness::Residue {
                    gaps,
                    deletion,
                    colors_found,
                } => {
                    writeln!(
                        out,
                        "witness gaps {gaps} deletion {deletion} colors {}",
                        color_set(colors_found)
                    )
                    .unwrap();
                }
            }
        }
        out
    }
}

fn color_set(colors: &[u32]) -> String {
    let mut s = String::from("{");
    for (k, c) in colors.iter().enumerate() {
        if k > 0 {
            s.push(',');
        }
        s.push_str(&c.to_string());
    }
    s.push('}');
    s
}

fn mask_to_colors(mut mask: u128) -> Vec<u32> {
    let mut out = Vec::new();
    while mask != 0 {
        out.push(mask.trailing_zeros());
        mask &= mask - 1;
    }
    out
}

const MAX_PALETTE: u32 = 128;

/// A color per `Q_i` of a concrete `Q_n`, indexed by subcube rank. This is
/// how non-simple colorings (e.g. search results) reach the verifier.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawAssignment {
    n: u32,
    i: u32,
    palette: u32,
    colors: Vec<u32>,
}

impl RawAssignment {
    pub fn new(n: u32, i: u32, palette: u32, colors: Vec<u32>) -> Result<Self> {
        if palette == 0 {
            return Err(Error::EmptyPalette);
        }
        if colors.len() as u64 != subcube_count(n, i) {
            return Err(Error::InvalidArgument(format!(
                "raw assignment must cover all {} subcubes, got {}",
                subcube_count(n, i),
                colors.len()
            )));
        }
        if colors.iter().any(|&c| c >= palette) {
            return Err(Error::InvalidArgument(
                "raw assignment uses a color outside the palette".into(),
            ));
        }
        Ok(Self {
            n,
            i,
            palette,
            colors,
        })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn i(&self) -> u32 {
        self.i
    }

    pub fn palette(&self) -> u32 {
        self.palette
    }

    pub fn color_of(&self, sub: &StarPattern) -> u32 {
        self.colors[subcube_rank(sub) as usize]
    }
}

/// What the concrete verifier colors subcubes with.
#[derive(Debug, Clone, Copy)]
pub enum ColorSource<'a> {
    Simple(&'a Coloring),
    Raw(&'a RawAssignment),
}

impl ColorSource<'_> {
    fn palette(&self) -> u32 {
        match self {
            ColorSource::Simple(c) => c.palette(),
            ColorSource::Raw(r) => r.palette,
        }
    }
}

/// Brute-force verification over every embedding of `Q_d` in `Q_n`.
///
/// Deterministic: embeddings are scanned in enumeration order, deletion
/// choices in their documented order, and the reported witness is the
/// first failure under that order regardless of worker count.
pub fn verify_concrete(n: u32, target: &TargetSpec, source: ColorSource) -> Result<Verdict> {
    target.validate()?;
    if n < target.d {
        return Err(Error::InvalidArgument(format!(
            "n={n} cannot host a Q_{}",
            target.d
        )));
    }
    let palette = source.palette();
    if palette == 0 {
        return Err(Error::EmptyPalette);
    }
    if palette > MAX_PALETTE {
        return Err(Error::PaletteTooLarge(palette, MAX_PALETTE));
    }
    match source {
        ColorSource::Simple(c) => {
            if c.arity() != target.i as usize + 1 {
                return Err(Error::ArityMismatch {
                    expected: target.i as usize + 1,
                    got: c.arity(),
                });
            }
        }
        ColorSource::Raw(r) => {
            if r.n != n || r.i != target.i {
                return Err(Error::InvalidArgument(
                    "raw assignment does not match n or i".into(),
                ));
            }
        }
    }
    let deletions = target.deletion_choices();
    let emb_count = subcube_count(n, target.d);
    let full: u128 = if palette as usize == 128 {
        !0
    } else {
        (1u128 << palette) - 1
    };
    let witness = find_first_finding(emb_count, |rank| {
        let host = subcube_unrank(n, target.d, rank);
        let mut gaps_buf = vec![0u64; target.i as usize + 1];
        for deletion in &deletions {
            let mut seen: u128 = 0;
            for sub in sub_subcubes(&host, target.i, deletion)? {
                let color = match source {
                    ColorSource::Simple(c) => {
                        sub.fill_gaps(&mut gaps_buf);
                        c.color_of(&gaps_buf)?
                    }
                    ColorSource::Raw(r) => r.color_of(&sub),
                };
                seen |= 1 << color;
                if seen == full {
                    break;
                }
            }
            if seen != full {
                return Ok(Some(Witness::Concrete {
                    embedding: host,
                    deletion: *deletion,
                    colors_found: mask_to_colors(seen),
                }));
            }
        }
        Ok(None)
    })?;
    Ok(Verdict {
        polychromatic: witness.is_none(),
        palette,
        instances: emb_count as u128 * deletions.len() as u128,
        witness,
    })
}

/// Strategy selector for [`verify_residues`]; `Auto` picks the factored
/// path for edge colorings and the generic enumeration otherwise.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ResidueStrategy {
    Auto,
    Generic,
    PrefixFactored,
}

/// Residue verification: sound and complete for periodic formula colorings.
///
/// Enumerates gap vectors with every entry below the lcm of the coloring's
/// period vector; with `wlog` set the first and last gaps are pinned to 0,
/// justified by the uniform color shift of the outer coordinates (an error
/// if the coloring's offset coordinate is first or last, where that shift
/// argument breaks).
pub fn verify_residues(target: &TargetSpec, coloring: &Coloring, wlog: bool) -> Result<Verdict> {
    verify_residues_with(target, coloring, wlog, ResidueStrategy::Auto)
}

#[doc(hidden)]
pub fn verify_residues_with(
    target: &TargetSpec,
    coloring: &Coloring,
    wlog: bool,
    strategy: ResidueStrategy,
) -> Result<Verdict> {
    target.validate()?;
    let formula = coloring.as_formula().ok_or(Error::NonPeriodic)?;
    if formula.arity() != target.i as usize + 1 {
        return Err(Error::ArityMismatch {
            expected: target.i as usize + 1,
            got: formula.arity(),
        });
    }
    let palette = formula.palette();
    if palette > MAX_PALETTE {
        return Err(Error::PaletteTooLarge(palette, MAX_PALETTE));
    }
    if wlog {
        if let Some(rule) = formula.offsets() {
            if rule.coord == 0 || rule.coord == formula.arity() - 1 {
                return Err(Error::UnsoundWlog);
            }
        }
    }
    let ell = formula.period().iter().fold(1u64, |a, &p| lcm(a, p));
    match strategy {
        ResidueStrategy::PrefixFactored => residues_prefix(target, formula, wlog, ell),
        ResidueStrategy::Generic => residues_generic(target, formula, wlog, ell),
        ResidueStrategy::Auto => {
            if target.i == 1 {
                residues_prefix(target, formula, wlog, ell)
            } else {
                residues_generic(target, formula, wlog, ell)
            }
        }
    }
}

/// Union of surviving colors of a punctured sequence, as a bitmask.
fn sequence_color_mask(seq: &ShapeSequence, formula: &FormulaColoring) -> Result<u128> {
    let mut seen = 0u128;
    for shape in seq.shapes() {
        for (cell, _) in shape.cells() {
            seen |= 1 << formula.color_of(cell.coords())?;
        }
    }
    Ok(seen)
}

fn residues_generic(
    target: &TargetSpec,
    formula: &FormulaColoring,
    wlog: bool,
    ell: u64,
) -> Result<Verdict> {
    let d = target.d as usize;
    let palette = formula.palette();
    let full: u128 = (1u128 << palette) - 1;
    let free: Vec<usize> = if wlog {
        (1..d).collect()
    } else {
        (0..=d).collect()
    };
    let deletions = target.deletion_choices();
    let combos = (ell as u128).saturating_pow(free.len() as u32);
    let instances = combos * deletions.len() as u128;
    // Work estimate: instances times cells per sequence.
    let cells: u128 = binomial(d as u64, target.i as u64) as u128 * (1 << (d - target.i as usize));
    if instances.saturating_mul(cells) > 1u128 << 33 {
        return Err(Error::ResidueSpaceTooLarge(instances));
    }
    let outer = if free.is_empty() { 1 } else { ell };
    let witness = find_first_finding(outer, |first| {
        let mut gaps = vec![0u64; d + 1];
        if let Some(&idx) = free.first() {
            gaps[idx] = first;
        }
        let rest = &free[free.len().min(1)..];
        let mut odo = vec![0u64; rest.len()];
        loop {
            for (slot, &idx) in odo.iter().zip(rest) {
                gaps[idx] = *slot;
            }
            let gv = GapVector::new(gaps.clone());
            let seq = shape_sequence(&gv, target.i)?;
            for deletion in &deletions {
                let punctured = apply_puncture(&seq, deletion)?;
                let seen = sequence_color_mask(&punctured, formula)?;
                if seen != full {
                    return Ok(Some(Witness::Residue {
                        gaps: gv,
                        deletion: *deletion,
                        colors_found: mask_to_colors(seen),
                    }));
                }
            }
            if !advance_base(&mut odo, ell) {
                break;
            }
        }
        Ok(None)
    })?;
    Ok(Verdict {
        polychromatic: witness.is_none(),
        palette,
        instances,
        witness,
    })
}

fn advance_base(odo: &mut [u64], base: u64) -> bool {
    for j in (0..odo.len()).rev() {
        odo[j] += 1;
        if odo[j] < base {
            return true;
        }
        odo[j] = 0;
    }
    false
}

/// Edge-coloring residue check factored over shapes.
///
/// Shape `t`'s cells are `(q_t + a, (S - q_t) + b)` for offsets `(a, b)`,
/// where `q_t` is the prefix sum of the gaps up to star `t` and `S` the
/// total. Since the prefix residues are independent coordinates, a
/// violating gap vector exists for a given (total residue, deletion,
/// color) exactly when every shape can individually miss the color at
/// some prefix residue. Witnesses are rebuilt exactly as the
/// lexicographically least violating gap vector.
fn residues_prefix(
    target: &TargetSpec,
    formula: &FormulaColoring,
    wlog: bool,
    ell: u64,
) -> Result<Verdict> {
    debug_assert_eq!(target.i, 1);
    let d = target.d as u64;
    let palette = formula.palette();
    let full: u128 = (1u128 << palette) - 1;
    let deletions = target.deletion_choices();
    // Colors present in shape t at prefix residue q, total residue sigma,
    // minus a deleted single-multiplicity offset.
    let shape_mask = |t: u64, q: u64, sigma: u64, deleted: Option<(u64, u64)>| -> Result<u128> {
        let mut mask = 0u128;
        let base_r = (sigma + ell - q) % ell;
        for a in 0..=t {
            for b in 0..d - 1 - t + 1 {
                if deleted == Some((a, b)) && binomial(t, a) * binomial(d - 1 - t, b) == 1 {
                    continue;
                }
                mask |= 1 << formula.color_of(&[q + a, base_r + b])?;
            }
        }
        Ok(mask)
    };
    let deleted_offset = |t: u64, deletion: &PunctureSpec| -> Option<(u64, u64)> {
        match deletion {
            PunctureSpec::None => None,
            PunctureSpec::DeleteVertex(w) => {
                let ones = w.ones_mask();
                let below = (ones & ((1 << t) - 1)).count_ones() as u64;
                let above = (ones >> (t + 1)).count_ones() as u64;
                Some((below, above))
            }
            PunctureSpec::DeleteEdge(w) => {
                if w.star_positions()[0] as u64 != t {
                    return None;
                }
                let ones = w.ones_mask();
                let below = (ones & ((1 << t) - 1)).count_ones() as u64;
                let above = (ones >> (t + 1)).count_ones() as u64;
                Some((below, above))
            }
        }
    };
    // A shape's prefix residues: everything, except that with the ends
    // pinned the first shape sits at prefix 0 and the last at sigma.
    let prefix_range = |t: u64, sigma: u64| -> std::ops::Range<u64> {
        if wlog && t == 0 && t == d - 1 {
            if sigma == 0 {
                0..1
            } else {
                0..0
            }
        } else if wlog && t == 0 {
            0..1
        } else if wlog && t == d - 1 {
            sigma..sigma + 1
        } else {
            0..ell
        }
    };
    let violation = find_first_finding(ell, |sigma| {
        for (del_idx, deletion) in deletions.iter().enumerate() {
            let mut acc = full;
            for t in 0..d {
                let deleted = deleted_offset(t, deletion);
                let mut miss = 0u128;
                for q in prefix_range(t, sigma) {
                    miss |= !shape_mask(t, q, sigma, deleted)? & full;
                    if miss == acc {
                        break;
                    }
                }
                acc &= miss;
                if acc == 0 {
                    break;
                }
            }
            if acc != 0 {
                return Ok(Some((sigma, del_idx)));
            }
        }
        Ok(None)
    })?;
    let free = if wlog { d - 1 } else { d + 1 };
    let instances = (ell as u128).saturating_pow(free as u32) * deletions.len() as u128;
    if violation.is_none() {
        return Ok(Verdict {
            polychromatic: true,
            palette,
            instances,
            witness: None,
        });
    }
    // Reconstruct the lexicographically least witness: for each feasible
    // (total, deletion, color), greedily choose minimal gaps shape by
    // shape, then take the least (gaps, deletion-index) pair overall.
    let mut best: Option<(Vec<u64>, usize)> = None;
    for sigma in 0..ell {
        for (del_idx, deletion) in deletions.iter().enumerate() {
            'color: for color in 0..palette {
                let bit = 1u128 << color;
                let mut gaps = vec![0u64; d as usize + 1];
                let mut prefix = 0u64;
                for t in 0..d {
                    let deleted = deleted_offset(t, deletion);
                    let mut chosen = None;
                    let candidates: Box<dyn Iterator<Item = u64>> =
                        if wlog && t == 0 && t == d - 1 {
                            if sigma == 0 {
                                Box::new(std::iter::once(0))
                            } else {
                                Box::new(std::iter::empty())
                            }
                        } else if wlog && t == 0 {
                            Box::new(std::iter::once(0))
                        } else if wlog && t == d - 1 {
                            Box::new(std::iter::once((sigma + ell - prefix) % ell))
                        } else {
                            Box::new(0..ell)
                        };
                    for g in candidates {
                        let q = (prefix + g) % ell;
                        if shape_mask(t, q, sigma, deleted)? & bit == 0 {
                            chosen = Some(g);
                            break;
                        }
                    }
                    match chosen {
                        Some(g) => {
                            gaps[t as usize] = g;
                            prefix = (prefix + g) % ell;
                        }
                        None => continue 'color,
                    }
                }
                gaps[d as usize] = if wlog { 0 } else { (sigma + ell - prefix) % ell };
                let candidate = (gaps, del_idx);
                if best.as_ref().map_or(true, |b| candidate < *b) {
                    best = Some(candidate);
                }
            }
        }
    }
    let (gaps, del_idx) = best.expect("a violation was detected, so some color is avoidable");
    let gv = GapVector::new(gaps);
    let deletion = deletions[del_idx];
    let punctured = apply_puncture(&shape_sequence(&gv, 1)?, &deletion)?;
    let seen = sequence_color_mask(&punctured, formula)?;
    debug_assert_ne!(seen & full, full);
    Ok(Verdict {
        polychromatic: false,
        palette,
        instances,
        witness: Some(Witness::Residue {
            gaps: gv,
            deletion,
            colors_found: mask_to_colors(seen),
        }),
    })
}

/// Per-residue color sets of each shape: the machine-checked analogue of
/// the paper-style tables for unpunctured targets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColorTable {
    pub d: u32,
    pub i: u32,
    /// Residues of the middle gaps run modulo this.
    pub row_modulus: u64,
    /// One label per shape, `S12`-style, in lexicographic star order.
    pub headers: Vec<String>,
    pub rows: Vec<ColorTableRow>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColorTableRow {
    /// Residues of the middle gaps `a_2 .. a_d` (paper numbering).
    pub residues: Vec<u64>,
    /// Sorted color set of each shape, aligned with `headers`.
    pub shape_colors: Vec<Vec<u32>>,
}

impl ColorTable {
    /// CSV with one row per residue vector and one column per shape; color
    /// sets are space-joined.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for k in 2..2 + self.d as usize - 1 {
            write!(out, "a{k},").unwrap();
        }
        writeln!(out, "{}", self.headers.join(",")).unwrap();
        for row in &self.rows {
            for r in &row.residues {
                write!(out, "{r},").unwrap();
            }
            let sets: Vec<String> = row
                .shape_colors
                .iter()
                .map(|set| {
                    set.iter()
                        .map(|c| c.to_string())
                        .collect::<Vec<_>>()
                        .join(" ")
                })
                .collect();
            writeln!(out, "{}", sets.join(",")).unwrap();
        }
        out
    }
}

/// Tabulates, per residue row, the color set of each shape of the target's
/// sequence.
///
/// Rows run over the middle gaps modulo the offset period (or the modulus,
/// when the coloring has no offset term). Within each row the concrete
/// representative has first and last gaps zero and, when a solution
/// exists, total gap sum divisible by the modulus — the same normal form
/// the published tables use, so they can be compared row by row.
pub fn sequence_color_table(target: &TargetSpec, coloring: &Coloring) -> Result<ColorTable> {
    target.validate()?;
    if target.puncture != PunctureKind::None {
        return Err(Error::Unsupported(
            "color tables are defined for unpunctured targets".into(),
        ));
    }
    let formula = coloring.as_formula().ok_or(Error::NonPeriodic)?;
    if formula.arity() != target.i as usize + 1 {
        return Err(Error::ArityMismatch {
            expected: target.i as usize + 1,
            got: formula.arity(),
        });
    }
    let d = target.d as usize;
    let m = formula.modulus() as u64;
    let row_modulus = formula
        .offsets()
        .map(|r| r.period as u64)
        .unwrap_or(m);
    let middle = d - 1;
    let row_count = (row_modulus as u128).saturating_pow(middle as u32);
    if row_count > 1 << 20 {
        return Err(Error::ResidueSpaceTooLarge(row_count));
    }
    let mut rows = Vec::with_capacity(row_count as usize);
    let mut residues = vec![0u64; middle];
    let mut headers: Option<Vec<String>> = None;
    loop {
        let mut gaps = vec![0u64; d + 1];
        gaps[1..d].copy_from_slice(&residues);
        // Normalize the representative so the total is divisible by the
        // modulus, without disturbing the row residues.
        if middle > 0 {
            let partial: u64 = gaps.iter().sum();
            for k in 0..m {
                if (partial + row_modulus * k) % m == 0 {
                    gaps[d - 1] += row_modulus * k;
                    break;
                }
            }
        }
        let seq = shape_sequence(&GapVector::new(gaps), target.i)?;
        if headers.is_none() {
            headers = Some(seq.shapes().iter().map(|s| s.label()).collect());
        }
        let mut shape_colors = Vec::with_capacity(seq.shapes().len());
        for shape in seq.shapes() {
            let mut colors: Vec<u32> = Vec::new();
            for (cell, _) in shape.cells() {
                let c = formula.color_of(cell.coords())?;
                if !colors.contains(&c) {
                    colors.push(c);
                }
            }
            colors.sort_unstable();
            shape_colors.push(colors);
        }
        rows.push(ColorTableRow {
            residues: residues.clone(),
            shape_colors,
        });
        if !advance_base(&mut residues, row_modulus) {
            break;
        }
    }
    Ok(ColorTable {
        d: target.d,
        i: target.i,
        row_modulus,
        headers: headers.unwrap_or_default(),
        rows,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::catalog;
    use std::collections::BTreeMap;

    fn cat(name: &str) -> Coloring {
        catalog(name, &BTreeMap::new()).unwrap()
    }

    fn cat1(name: &str, key: &str, value: u64) -> Coloring {
        let mut p = BTreeMap::new();
        p.insert(key.to_string(), value);
        catalog(name, &p).unwrap()
    }

    fn target(d: u32, i: u32, puncture: PunctureKind) -> TargetSpec {
        TargetSpec::new(d, i, puncture).unwrap()
    }

    #[test]
    fn concrete_odd_punctured_cube_spot_check() {
        let verdict = verify_concrete(
            7,
            &target(3, 1, PunctureKind::Vertex),
            ColorSource::Simple(&cat1("qmv", "k", 2)),
        )
        .unwrap();
        assert!(verdict.polychromatic, "{:?}", verdict.witness);
        assert_eq!(verdict.palette, 3);
        // C(7,3) * 2^4 embeddings times 2^3 deletions.
        assert_eq!(verdict.instances, 560 * 8);
    }

    #[test]
    fn concrete_subcube_coloring_spot_check() {
        let verdict = verify_concrete(
            5,
            &target(3, 2, PunctureKind::None),
            ColorSource::Simple(&cat("p233")),
        )
        .unwrap();
        assert!(verdict.polychromatic, "{:?}", verdict.witness);
    }

    #[test]
    fn constant_coloring_is_trivially_polychromatic() {
        let constant =
            Coloring::Formula(crate::coloring::FormulaColoring::new(vec![0, 0], 1).unwrap());
        let verdict = verify_concrete(
            4,
            &target(4, 1, PunctureKind::None),
            ColorSource::Simple(&constant),
        )
        .unwrap();
        assert!(verdict.polychromatic);
        assert_eq!(verdict.palette, 1);
    }

    #[test]
    fn residues_pass_for_catalog_targets() {
        for (coloring, t) in [
            (cat("p233"), target(3, 2, PunctureKind::None)),
            (cat("p24"), target(4, 2, PunctureKind::None)),
            (cat("p4mv"), target(4, 1, PunctureKind::Vertex)),
            (cat("p4me"), target(4, 1, PunctureKind::Edge)),
            (cat1("qmv", "k", 2), target(3, 1, PunctureKind::Vertex)),
            (cat1("pd_lower", "d", 5), target(5, 1, PunctureKind::None)),
        ] {
            let verdict = verify_residues(&t, &coloring, true).unwrap();
            assert!(verdict.polychromatic, "target {t:?}: {:?}", verdict.witness);
        }
    }

    #[test]
    fn forced_palette_fails_with_witness() {
        let padded = match cat1("qmv", "k", 2) {
            Coloring::Formula(f) => Coloring::Formula(f.with_palette(4).unwrap()),
            _ => unreachable!(),
        };
        let verdict =
            verify_residues(&target(3, 1, PunctureKind::Vertex), &padded, true).unwrap();
        assert!(!verdict.polychromatic);
        let w = verdict.witness.expect("failing verdict carries a witness");
        match &w {
            Witness::Residue { colors_found, .. } => {
                assert!(!colors_found.contains(&3));
            }
            _ => panic!("expected residue witness"),
        }
    }

    #[test]
    fn prefix_and_generic_agree_including_witnesses() {
        let cases: Vec<(Coloring, TargetSpec, bool)> = vec![
            (cat1("qmv", "k", 2), target(3, 1, PunctureKind::Vertex), true),
            (cat1("qmv", "k", 2), target(3, 1, PunctureKind::Vertex), false),
            (cat("p4mv"), target(4, 1, PunctureKind::Vertex), true),
            (cat("p4me"), target(4, 1, PunctureKind::Edge), true),
            (cat1("pd_lower", "d", 4), target(4, 1, PunctureKind::None), false),
            // Failing cases must produce identical lexicographically
            // least witnesses.
            (
                match cat1("qmv", "k", 2) {
                    Coloring::Formula(f) => Coloring::Formula(f.with_palette(4).unwrap()),
                    _ => unreachable!(),
                },
                target(3, 1, PunctureKind::Vertex),
                true,
            ),
            (cat("p4me"), target(4, 1, PunctureKind::Vertex), true),
            (cat1("qmv", "k", 2), target(4, 1, PunctureKind::Vertex), false),
        ];
        for (coloring, t, wlog) in cases {
            let a =
                verify_residues_with(&t, &coloring, wlog, ResidueStrategy::PrefixFactored)
                    .unwrap();
            let b = verify_residues_with(&t, &coloring, wlog, ResidueStrategy::Generic).unwrap();
            assert_eq!(a.polychromatic, b.polychromatic, "{t:?} wlog={wlog}");
            assert_eq!(a.witness, b.witness, "{t:?} wlog={wlog}");
        }
    }

    #[test]
    fn wlog_flag_does_not_change_catalog_verdicts() {
        for (coloring, t) in [
            (cat1("qmv", "k", 2), target(3, 1, PunctureKind::Vertex)),
            (cat("p4mv"), target(4, 1, PunctureKind::Vertex)),
            (cat("p4me"), target(4, 1, PunctureKind::Edge)),
            (cat("p233"), target(3, 2, PunctureKind::None)),
            (cat("p24"), target(4, 2, PunctureKind::None)),
            (cat1("pd_lower", "d", 5), target(5, 1, PunctureKind::None)),
        ] {
            let with = verify_residues(&t, &coloring, true).unwrap();
            let without = verify_residues(&t, &coloring, false).unwrap();
            assert_eq!(with.polychromatic, without.polychromatic, "{t:?}");
        }
    }

    #[test]
    fn wlog_rejected_when_offset_sits_on_an_outer_coordinate() {
        let f = crate::coloring::FormulaColoring::new(vec![1, 1], 3)
            .unwrap()
            .with_offsets(0, 2, vec![0, 1])
            .unwrap();
        let c = Coloring::Formula(f);
        assert!(matches!(
            verify_residues(&target(3, 1, PunctureKind::None), &c, true),
            Err(Error::UnsoundWlog)
        ));
        assert!(verify_residues(&target(3, 1, PunctureKind::None), &c, false).is_ok());
    }

    #[test]
    fn monotone_in_the_puncture_order() {
        // Passing with every vertex deletion implies passing with every
        // edge deletion implies passing unpunctured: survivors only grow.
        let cases = [
            (cat1("qmv", "k", 2), 3),
            (cat1("qmv", "k", 3), 5),
            (cat("p4mv"), 4),
            (cat("p4me"), 4),
            (cat1("pq2kmv", "k", 3), 6),
            (cat1("pd_lower", "d", 4), 4),
        ];
        for (coloring, d) in cases {
            let pass = |kind| {
                verify_residues(&target(d, 1, kind), &coloring, true)
                    .unwrap()
                    .polychromatic
            };
            let vertex = pass(PunctureKind::Vertex);
            let edge = pass(PunctureKind::Edge);
            let none = pass(PunctureKind::None);
            if vertex {
                assert!(edge, "vertex pass must imply edge pass (d={d})");
            }
            if edge {
                assert!(none, "edge pass must imply unpunctured pass (d={d})");
            }
        }
    }

    #[test]
    fn table_for_p233_matches_the_published_rows() {
        let table =
            sequence_color_table(&target(3, 2, PunctureKind::None), &cat("p233")).unwrap();
        assert_eq!(table.headers, vec!["S12", "S13", "S23"]);
        assert_eq!(table.rows.len(), 4);
        let expected: &[(&[u64], &[&[u32]])] = &[
            (&[0, 0], &[&[0, 1], &[0, 2], &[0, 1]]),
            (&[0, 1], &[&[0, 1], &[1], &[1, 2]]),
            (&[1, 0], &[&[1, 2], &[1], &[0, 1]]),
            (&[1, 1], &[&[1, 2], &[0, 2], &[1, 2]]),
        ];
        for (residues, sets) in expected {
            let row = table
                .rows
                .iter()
                .find(|r| r.residues == *residues)
                .expect("row present");
            for (got, want) in row.shape_colors.iter().zip(*sets) {
                assert_eq!(got.as_slice(), *want, "residues {residues:?}");
            }
        }
    }

    #[test]
    fn constant_coloring_table_is_all_zero() {
        let constant =
            Coloring::Formula(crate::coloring::FormulaColoring::new(vec![0, 0, 0], 1).unwrap());
        let table =
            sequence_color_table(&target(3, 2, PunctureKind::None), &constant).unwrap();
        assert_eq!(table.rows.len(), 1);
        for set in &table.rows[0].shape_colors {
            assert_eq!(set, &vec![0]);
        }
    }

    #[test]
    fn csv_has_one_row_per_residue() {
        let table =
            sequence_color_table(&target(4, 2, PunctureKind::None), &cat("p24")).unwrap();
        let csv = table.to_csv();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines.len(), 28);
        assert_eq!(lines[0], "a2,a3,a4,S12,S13,S14,S23,S24,S34");
    }

    #[test]
    fn deletion_counts_match_the_quantification() {
        let t = target(4, 1, PunctureKind::Vertex);
        assert_eq!(t.deletion_choices().len(), 16);
        let t = target(4, 1, PunctureKind::Edge);
        assert_eq!(t.deletion_choices().len(), 32);
    }

    #[test]
    fn verdict_report_shapes() {
        let verdict = verify_residues(
            &target(3, 1, PunctureKind::None),
            &cat1("pd_lower", "d", 3),
            true,
        )
        .unwrap();
        let report = verdict.report();
        assert!(report.starts_with("verdict polychromatic\npalette 4\n"));
    }
}

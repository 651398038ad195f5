//! Periodic simple colorings of grid cells.
//!
//! A simple coloring assigns a palette color to every cell of the
//! `(i+1)`-dimensional grid; the color of a subcube is then the color of
//! its gap-vector cell. Two concrete families are supported:
//!
//! * [`FormulaColoring`]: `color(x) = (sum_j c_j x_j + off[x_k mod t]) mod m`,
//!   with an optional offset table indexed by one coordinate's residue.
//!   Everything in [`catalog`] is of this form.
//! * [`TableColoring`]: an explicit table on all cells up to a level
//!   window. Evaluating outside the window is a hard error, never a
//!   default color.
//!
//! Palette colors are canonical `0..m-1`.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::util::lcm;
use crate::{Error, Result};

/// Offset term of a formula coloring: adds `values[x_coord mod period]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OffsetRule {
    /// 0-based coordinate index the rule keys on.
    pub coord: usize,
    pub period: u32,
    pub values: Vec<i64>,
}

/// `color(x) = (sum_j coeffs[j] * x_j + offset term) mod modulus`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormulaColoring {
    coeffs: Vec<i64>,
    modulus: u32,
    offsets: Option<OffsetRule>,
    /// Declared palette size when larger than the modulus; the formula then
    /// never emits the extra colors, which is occasionally useful for
    /// forcing failure witnesses.
    palette_override: Option<u32>,
}

impl FormulaColoring {
    pub fn new(coeffs: Vec<i64>, modulus: u32) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::InvalidArgument("coeffs must be nonempty".into()));
        }
        if modulus == 0 {
            return Err(Error::EmptyPalette);
        }
        Ok(Self {
            coeffs,
            modulus,
            offsets: None,
            palette_override: None,
        })
    }

    pub fn with_offsets(mut self, coord: usize, period: u32, values: Vec<i64>) -> Result<Self> {
        if coord >= self.coeffs.len() {
            return Err(Error::InvalidArgument(format!(
                "offset coordinate {coord} out of range"
            )));
        }
        if period == 0 || values.len() != period as usize {
            return Err(Error::InvalidArgument(
                "offset table must have exactly `period` entries".into(),
            ));
        }
        self.offsets = Some(OffsetRule {
            coord,
            period,
            values,
        });
        Ok(self)
    }

    pub fn with_palette(mut self, palette: u32) -> Result<Self> {
        if palette < self.modulus {
            return Err(Error::InvalidArgument(
                "palette override must not be smaller than the modulus".into(),
            ));
        }
        self.palette_override = Some(palette);
        Ok(self)
    }

    pub fn arity(&self) -> usize {
        self.coeffs.len()
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn offsets(&self) -> Option<&OffsetRule> {
        self.offsets.as_ref()
    }

    pub fn palette(&self) -> u32 {
        self.palette_override.unwrap_or(self.modulus)
    }

    pub fn color_of(&self, coords: &[u64]) -> Result<u32> {
        if coords.len() != self.coeffs.len() {
            return Err(Error::ArityMismatch {
                expected: self.coeffs.len(),
                got: coords.len(),
            });
        }
        let m = self.modulus as i64;
        let mut acc: i64 = 0;
        for (&c, &x) in self.coeffs.iter().zip(coords) {
            acc += c.rem_euclid(m) * (x % self.modulus as u64) as i64;
            acc %= m;
        }
        if let Some(rule) = &self.offsets {
            let idx = (coords[rule.coord] % rule.period as u64) as usize;
            acc += rule.values[idx].rem_euclid(m);
        }
        Ok(acc.rem_euclid(m) as u32)
    }

    /// Per-coordinate periods: the modulus everywhere, stretched to
    /// `lcm(modulus, offset period)` on the offset coordinate. Shifting any
    /// coordinate by its period leaves every color fixed.
    pub fn period(&self) -> Vec<u64> {
        let mut p = vec![self.modulus as u64; self.coeffs.len()];
        if let Some(rule) = &self.offsets {
            p[rule.coord] = lcm(self.modulus as u64, rule.period as u64);
        }
        p
    }
}

/// An explicit coloring of every cell with level at most `window`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableColoring {
    arity: usize,
    window: u64,
    palette: u32,
    entries: BTreeMap<Vec<u64>, u32>,
}

impl TableColoring {
    /// The table must be total on the window and use colors below the
    /// palette size.
    pub fn new(
        arity: usize,
        window: u64,
        palette: u32,
        entries: BTreeMap<Vec<u64>, u32>,
    ) -> Result<Self> {
        if arity == 0 {
            return Err(Error::InvalidArgument("arity must be positive".into()));
        }
        if palette == 0 {
            return Err(Error::EmptyPalette);
        }
        let expected = crate::util::binomial(window + arity as u64, arity as u64);
        if entries.len() as u64 != expected {
            return Err(Error::InvalidArgument(format!(
                "table must cover the window: expected {expected} cells, got {}",
                entries.len()
            )));
        }
        for (cell, &color) in &entries {
            if cell.len() != arity || cell.iter().sum::<u64>() > window || color >= palette {
                return Err(Error::InvalidArgument(format!(
                    "bad table entry {cell:?} -> {color}"
                )));
            }
        }
        Ok(Self {
            arity,
            window,
            palette,
            entries,
        })
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn window(&self) -> u64 {
        self.window
    }

    pub fn palette(&self) -> u32 {
        self.palette
    }

    pub fn entries(&self) -> &BTreeMap<Vec<u64>, u32> {
        &self.entries
    }

    pub fn color_of(&self, coords: &[u64]) -> Result<u32> {
        if coords.len() != self.arity {
            return Err(Error::ArityMismatch {
                expected: self.arity,
                got: coords.len(),
            });
        }
        let level: u64 = coords.iter().sum();
        if level > self.window {
            return Err(Error::OutsideWindow {
                cell: format!("{coords:?}"),
                level,
                window: self.window,
            });
        }
        Ok(*self
            .entries
            .get(coords)
            .expect("validated table is total on its window"))
    }
}

/// A simple coloring in one of the supported representations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Coloring {
    Formula(FormulaColoring),
    Table(TableColoring),
    /// A table evaluated through extra ignored trailing coordinates.
    ProjectedTable { base: TableColoring, extra: usize },
}

impl Coloring {
    pub fn arity(&self) -> usize {
        match self {
            Coloring::Formula(f) => f.arity(),
            Coloring::Table(t) => t.arity(),
            Coloring::ProjectedTable { base, extra } => base.arity() + extra,
        }
    }

    pub fn palette(&self) -> u32 {
        match self {
            Coloring::Formula(f) => f.palette(),
            Coloring::Table(t) => t.palette(),
            Coloring::ProjectedTable { base, .. } => base.palette(),
        }
    }

    pub fn color_of(&self, coords: &[u64]) -> Result<u32> {
        match self {
            Coloring::Formula(f) => f.color_of(coords),
            Coloring::Table(t) => t.color_of(coords),
            Coloring::ProjectedTable { base, extra } => {
                if coords.len() != base.arity() + extra {
                    return Err(Error::ArityMismatch {
                        expected: base.arity() + extra,
                        got: coords.len(),
                    });
                }
                base.color_of(&coords[..base.arity()])
            }
        }
    }

    /// The period vector of a formula coloring; table colorings have none.
    pub fn period(&self) -> Result<Vec<u64>> {
        match self {
            Coloring::Formula(f) => Ok(f.period()),
            _ => Err(Error::NonPeriodic),
        }
    }

    pub fn as_formula(&self) -> Option<&FormulaColoring> {
        match self {
            Coloring::Formula(f) => Some(f),
            _ => None,
        }
    }

    /// The coloring of arity `i + extra + 1` that ignores its last `extra`
    /// coordinates and delegates to `self`.
    pub fn project(&self, extra: usize) -> Coloring {
        if extra == 0 {
            return self.clone();
        }
        match self {
            Coloring::Formula(f) => {
                let mut coeffs = f.coeffs.clone();
                coeffs.extend(std::iter::repeat(0).take(extra));
                Coloring::Formula(FormulaColoring {
                    coeffs,
                    modulus: f.modulus,
                    offsets: f.offsets.clone(),
                    palette_override: f.palette_override,
                })
            }
            Coloring::Table(t) => Coloring::ProjectedTable {
                base: t.clone(),
                extra,
            },
            Coloring::ProjectedTable { base, extra: e } => Coloring::ProjectedTable {
                base: base.clone(),
                extra: e + extra,
            },
        }
    }

    /// Canonical spec-file text; parse/print round-trips byte-identically.
    pub fn to_spec_text(&self) -> Result<String> {
        let mut out = String::new();
        match self {
            Coloring::Formula(f) => {
                writeln!(out, "kind formula").unwrap();
                writeln!(out, "arity {}", f.arity()).unwrap();
                write!(out, "coeffs").unwrap();
                for c in &f.coeffs {
                    write!(out, " {c}").unwrap();
                }
                writeln!(out).unwrap();
                writeln!(out, "modulus {}", f.modulus).unwrap();
                if let Some(rule) = &f.offsets {
                    writeln!(out, "offset-coord {}", rule.coord + 1).unwrap();
                    writeln!(out, "offset-period {}", rule.period).unwrap();
                    write!(out, "offsets").unwrap();
                    for v in &rule.values {
                        write!(out, " {v}").unwrap();
                    }
                    writeln!(out).unwrap();
                }
                if let Some(p) = f.palette_override {
                    writeln!(out, "palette {p}").unwrap();
                }
            }
            Coloring::Table(t) => {
                writeln!(out, "kind table").unwrap();
                writeln!(out, "arity {}", t.arity).unwrap();
                writeln!(out, "window {}", t.window).unwrap();
                writeln!(out, "palette {}", t.palette).unwrap();
                for (cell, color) in &t.entries {
                    write!(out, "cell").unwrap();
                    for c in cell {
                        write!(out, " {c}").unwrap();
                    }
                    writeln!(out, " = {color}").unwrap();
                }
            }
            Coloring::ProjectedTable { .. } => {
                return Err(Error::Unsupported(
                    "projected table colorings have no spec-file form".into(),
                ))
            }
        }
        Ok(out)
    }

    /// Parses the spec-file format produced by [`Coloring::to_spec_text`].
    pub fn parse_spec(text: &str) -> Result<Coloring> {
        let mut lines = text.lines().enumerate().peekable();
        let mut next_field = |name: &str| -> Result<(usize, String)> {
            match lines.next() {
                Some((ln, line)) => {
                    let rest = line.strip_prefix(name).ok_or_else(|| Error::Parse {
                        line: ln + 1,
                        reason: format!("expected `{name} ...`, got `{line}`"),
                    })?;
                    Ok((ln, rest.trim().to_string()))
                }
                None => Err(Error::Parse {
                    line: 0,
                    reason: format!("missing `{name}` line"),
                }),
            }
        };
        let (_, kind) = next_field("kind")?;
        match kind.as_str() {
            "formula" => {
                let (ln_a, arity_s) = next_field("arity")?;
                let arity: usize = parse_num(&arity_s, ln_a)?;
                let (ln_c, coeffs_s) = next_field("coeffs")?;
                let coeffs = parse_nums::<i64>(&coeffs_s, ln_c)?;
                if coeffs.len() != arity {
                    return Err(Error::Parse {
                        line: ln_c + 1,
                        reason: format!("expected {arity} coefficients"),
                    });
                }
                let (ln_m, modulus_s) = next_field("modulus")?;
                let modulus: u32 = parse_num(&modulus_s, ln_m)?;
                let mut f = FormulaColoring::new(coeffs, modulus)?;
                let mut rest: Vec<(usize, String)> = Vec::new();
                for (ln, line) in lines {
                    rest.push((ln, line.to_string()));
                }
                let mut idx = 0;
                if idx < rest.len() && rest[idx].1.starts_with("offset-coord") {
                    let coord: usize =
                        parse_num(rest[idx].1.trim_start_matches("offset-coord").trim(), rest[idx].0)?;
                    idx += 1;
                    let (ln_p, line_p) = rest.get(idx).cloned().ok_or(Error::Parse {
                        line: 0,
                        reason: "missing offset-period".into(),
                    })?;
                    let period: u32 =
                        parse_num(line_p.trim_start_matches("offset-period").trim(), ln_p)?;
                    idx += 1;
                    let (ln_v, line_v) = rest.get(idx).cloned().ok_or(Error::Parse {
                        line: 0,
                        reason: "missing offsets".into(),
                    })?;
                    let values = parse_nums::<i64>(line_v.trim_start_matches("offsets").trim(), ln_v)?;
                    idx += 1;
                    if coord == 0 {
                        return Err(Error::Parse {
                            line: ln_p + 1,
                            reason: "offset-coord is 1-based".into(),
                        });
                    }
                    f = f.with_offsets(coord - 1, period, values)?;
                }
                if idx < rest.len() && rest[idx].1.starts_with("palette") {
                    let p: u32 =
                        parse_num(rest[idx].1.trim_start_matches("palette").trim(), rest[idx].0)?;
                    idx += 1;
                    f = f.with_palette(p)?;
                }
                if let Some((ln, line)) = rest.get(idx) {
                    if !line.trim().is_empty() {
                        return Err(Error::Parse {
                            line: ln + 1,
                            reason: format!("unexpected line `{line}`"),
                        });
                    }
                }
                Ok(Coloring::Formula(f))
            }
            "table" => {
                let (ln_a, arity_s) = next_field("arity")?;
                let arity: usize = parse_num(&arity_s, ln_a)?;
                let (ln_w, window_s) = next_field("window")?;
                let window: u64 = parse_num(&window_s, ln_w)?;
                let (ln_p, palette_s) = next_field("palette")?;
                let palette: u32 = parse_num(&palette_s, ln_p)?;
                let mut entries = BTreeMap::new();
                for (ln, line) in lines {
                    if line.trim().is_empty() {
                        continue;
                    }
                    let rest = line.strip_prefix("cell ").ok_or_else(|| Error::Parse {
                        line: ln + 1,
                        reason: format!("expected `cell ... = color`, got `{line}`"),
                    })?;
                    let (cell_s, color_s) = rest.split_once(" = ").ok_or_else(|| Error::Parse {
                        line: ln + 1,
                        reason: "expected ` = ` separator".into(),
                    })?;
                    let cell = parse_nums::<u64>(cell_s, ln)?;
                    let color: u32 = parse_num(color_s.trim(), ln)?;
                    entries.insert(cell, color);
                }
                Ok(Coloring::Table(TableColoring::new(
                    arity, window, palette, entries,
                )?))
            }
            other => Err(Error::Parse {
                line: 1,
                reason: format!("unknown kind `{other}`"),
            }),
        }
    }
}

fn parse_num<T: std::str::FromStr>(s: &str, line: usize) -> Result<T> {
    s.parse().map_err(|_| Error::Parse {
        line: line + 1,
        reason: format!("bad number `{s}`"),
    })
}

fn parse_nums<T: std::str::FromStr>(s: &str, line: usize) -> Result<Vec<T>> {
    s.split_whitespace().map(|w| parse_num(w, line)).collect()
}

/// Closed form for the edge polychromatic number of `Q_d`:
/// `(d+1)^2 / 4` for odd `d`, `d(d+2) / 4` for even `d`.
pub fn qd_palette(d: u32) -> u32 {
    if d % 2 == 1 {
        (d + 1) * (d + 1) / 4
    } else {
        d * (d + 2) / 4
    }
}

/// Named constructors for the built-in coloring constructions.
///
/// Unknown parameter keys are errors, not warnings.
pub fn catalog(name: &str, params: &BTreeMap<String, u64>) -> Result<Coloring> {
    let take = |keys: &[&str]| -> Result<()> {
        for k in params.keys() {
            if !keys.contains(&k.as_str()) {
                return Err(Error::BadCatalogParams(format!(
                    "unknown parameter `{k}` for `{name}`"
                )));
            }
        }
        Ok(())
    };
    let get = |key: &str| -> Result<u64> {
        params
            .get(key)
            .copied()
            .ok_or_else(|| Error::BadCatalogParams(format!("`{name}` requires `{key}`")))
    };
    match name {
        // ceil((d+1)/2) * l + r mod the Q_d palette; polychromatic for Q_d.
        "pd_lower" => {
            take(&["d"])?;
            let d = get("d")?;
            if d < 1 || d > 1000 {
                return Err(Error::BadCatalogParams("pd_lower needs 1 <= d".into()));
            }
            let m = qd_palette(d as u32);
            Ok(Coloring::Formula(FormulaColoring::new(
                vec![((d + 1).div_ceil(2)) as i64, 1],
                m,
            )?))
        }
        // k*l + r mod k^2-1; polychromatic for odd punctured cubes.
        "qmv" => {
            take(&["k"])?;
            let k = get("k")?;
            if k < 2 {
                return Err(Error::BadCatalogParams("qmv needs k >= 2".into()));
            }
            Ok(Coloring::Formula(FormulaColoring::new(
                vec![k as i64, 1],
                (k * k - 1) as u32,
            )?))
        }
        // 3*l + r mod 5; polychromatic for Q_4 minus a vertex.
        "p4mv" => {
            take(&[])?;
            Ok(Coloring::Formula(FormulaColoring::new(vec![3, 1], 5)?))
        }
        // 4*l + r mod 6; polychromatic for Q_4 minus an edge.
        "p4me" => {
            take(&[])?;
            Ok(Coloring::Formula(FormulaColoring::new(vec![4, 1], 6)?))
        }
        // k*l + r mod (k-1)(k+2); polychromatic for Q_2k minus a vertex.
        "pq2kmv" => {
            take(&["k"])?;
            let k = get("k")?;
            if k < 3 {
                return Err(Error::BadCatalogParams("pq2kmv needs k >= 3".into()));
            }
            Ok(Coloring::Formula(FormulaColoring::new(
                vec![k as i64, 1],
                ((k - 1) * (k + 2)) as u32,
            )?))
        }
        // x1+x2+x3 (+1 when x2 is odd) mod 3; Q_3-polychromatic on Q_2's.
        "p233" => {
            take(&[])?;
            Ok(Coloring::Formula(
                FormulaColoring::new(vec![1, 1, 1], 3)?.with_offsets(1, 2, vec![0, 1])?,
            ))
        }
        // x1+x2+x3 + (x2 mod 3) mod 5; Q_4-polychromatic on Q_2's.
        "p24" => {
            take(&[])?;
            Ok(Coloring::Formula(
                FormulaColoring::new(vec![1, 1, 1], 5)?.with_offsets(1, 3, vec![0, 1, 2])?,
            ))
        }
        other => Err(Error::UnknownCatalog(other.into())),
    }
}

/// Names and one-line descriptions of the built-in colorings.
pub fn catalog_names() -> Vec<(&'static str, &'static str)> {
    vec![
        ("pd_lower", "edges, ceil((d+1)/2)*l + r mod ((d+1)^2/4 or d(d+2)/4); params: d"),
        ("qmv", "edges, k*l + r mod k^2-1; params: k >= 2"),
        ("p4mv", "edges, 3*l + r mod 5"),
        ("p4me", "edges, 4*l + r mod 6"),
        ("pq2kmv", "edges, k*l + r mod (k-1)(k+2); params: k >= 3"),
        ("p233", "2-subcubes, x1+x2+x3 + [x2 odd] mod 3"),
        ("p24", "2-subcubes, x1+x2+x3 + (x2 mod 3) mod 5"),
    ]
}

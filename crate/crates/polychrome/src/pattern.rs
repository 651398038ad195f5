//! Star-patterns: vertices, edges, and subcube embeddings of `Q_n`.
//!
//! A subcube of `Q_n` is written as an `n`-symbol word over `{0, 1, *}`,
//! with stars marking the free coordinates. Position 0 is the leftmost
//! symbol. An edge is a pattern with exactly one star, a vertex one with
//! none. Reducing a pattern to its [`GapVector`] — the counts of 1s in the
//! gaps delimited by the stars — is what makes simple colorings tractable.
//!
//! # Enumeration order
//!
//! All enumerations in this module are deterministic:
//!
//! * [`enumerate_subcubes`] yields star-position sets in lexicographic
//!   order; for each set the fixed bits count upward in binary, with the
//!   leftmost fixed position as the most significant bit.
//! * [`sub_subcubes`] yields kept-star subsets in lexicographic order; the
//!   bits assigned to the remaining stars count upward in binary, with the
//!   leftmost such star as the most significant bit.

use std::fmt;
use std::str::FromStr;

use crate::util::binomial;
use crate::{Error, Result};

/// One position of a star-pattern.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Symbol {
    Zero,
    One,
    Star,
}

/// An embedding of a subcube in `Q_n`: `n` symbols over `{0, 1, *}`.
///
/// Packed as two bitmasks, so patterns are cheap to copy; `n` is limited to
/// 64 positions, well beyond the guaranteed minimum of 24.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StarPattern {
    len: u32,
    ones: u64,
    stars: u64,
}

impl StarPattern {
    /// Builds a pattern from symbols, leftmost first.
    pub fn from_symbols(symbols: &[Symbol]) -> Result<Self> {
        if symbols.is_empty() || symbols.len() > 64 {
            return Err(Error::BadPattern {
                text: format!("<{} symbols>", symbols.len()),
                reason: "length must be between 1 and 64".into(),
            });
        }
        let mut ones = 0u64;
        let mut stars = 0u64;
        for (p, s) in symbols.iter().enumerate() {
            match s {
                Symbol::Zero => {}
                Symbol::One => ones |= 1 << p,
                Symbol::Star => stars |= 1 << p,
            }
        }
        Ok(Self {
            len: symbols.len() as u32,
            ones,
            stars,
        })
    }

    /// Builds a pattern directly from bitmasks (bit `p` = position `p`).
    pub fn from_masks(len: u32, ones: u64, stars: u64) -> Result<Self> {
        if len == 0 || len > 64 {
            return Err(Error::BadPattern {
                text: format!("<len {len}>"),
                reason: "length must be between 1 and 64".into(),
            });
        }
        let in_range = if len == 64 { !0 } else { (1u64 << len) - 1 };
        if ones & !in_range != 0 || stars & !in_range != 0 || ones & stars != 0 {
            return Err(Error::BadPattern {
                text: format!("<len {len}, ones {ones:#x}, stars {stars:#x}>"),
                reason: "masks overlap or exceed the length".into(),
            });
        }
        Ok(Self { len, ones, stars })
    }

    /// The all-zero vertex of `Q_n`.
    pub fn zero_vertex(n: u32) -> Self {
        Self::from_masks(n, 0, 0).expect("valid length")
    }

    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Number of stars; the dimension of the embedded subcube.
    pub fn dim(&self) -> usize {
        self.stars.count_ones() as usize
    }

    /// An edge is a pattern with exactly one star.
    pub fn is_edge(&self) -> bool {
        self.dim() == 1
    }

    /// A vertex is a pattern with no stars.
    pub fn is_vertex(&self) -> bool {
        self.dim() == 0
    }

    pub fn symbol(&self, pos: usize) -> Symbol {
        debug_assert!(pos < self.len());
        if self.stars >> pos & 1 == 1 {
            Symbol::Star
        } else if self.ones >> pos & 1 == 1 {
            Symbol::One
        } else {
            Symbol::Zero
        }
    }

    pub fn ones_mask(&self) -> u64 {
        self.ones
    }

    pub fn stars_mask(&self) -> u64 {
        self.stars
    }

    /// Star positions, ascending.
    pub fn star_positions(&self) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.dim());
        let mut m = self.stars;
        while m != 0 {
            out.push(m.trailing_zeros());
            m &= m - 1;
        }
        out
    }

    /// Count of 1 symbols.
    pub fn ones_count(&self) -> u64 {
        self.ones.count_ones() as u64
    }

    /// The gap vector: `dim + 1` counts of 1s strictly between consecutive
    /// stars (first entry: before the first star; last: after the last).
    /// A vertex reduces to the single total count of 1s.
    pub fn gap_vector(&self) -> GapVector {
        let mut gaps = vec![0u64; self.dim() + 1];
        self.fill_gaps(&mut gaps);
        GapVector(gaps)
    }

    /// Writes the gap vector into `gaps`, which must have length `dim + 1`.
    /// Allocation-free companion of [`StarPattern::gap_vector`].
    pub fn fill_gaps(&self, gaps: &mut [u64]) {
        debug_assert_eq!(gaps.len(), self.dim() + 1);
        let mut from = 0u32;
        let mut idx = 0;
        let mut stars = self.stars;
        while stars != 0 {
            let star = stars.trailing_zeros();
            gaps[idx] = self.count_ones_in(from, star);
            idx += 1;
            from = star + 1;
            stars &= stars - 1;
        }
        gaps[idx] = self.count_ones_in(from, self.len);
    }

    fn count_ones_in(&self, from: u32, to: u32) -> u64 {
        if from >= to {
            return 0;
        }
        let hi = if to == 64 { !0 } else { (1u64 << to) - 1 };
        let lo = (1u64 << from) - 1;
        (self.ones & hi & !lo).count_ones() as u64
    }
}

impl fmt::Display for StarPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for p in 0..self.len() {
            let c = match self.symbol(p) {
                Symbol::Zero => '0',
                Symbol::One => '1',
                Symbol::Star => '*',
            };
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for StarPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for StarPattern {
    type Err = Error;

    /// Parses `010*` or `[010*]`; printing always uses brackets, and
    /// parse/print round-trips exactly.
    fn from_str(s: &str) -> Result<Self> {
        let inner = match (s.strip_prefix('['), s.strip_suffix(']')) {
            (Some(rest), Some(_)) => &rest[..rest.len() - 1],
            (None, None) => s,
            _ => {
                return Err(Error::BadPattern {
                    text: s.into(),
                    reason: "unbalanced brackets".into(),
                })
            }
        };
        let mut symbols = Vec::with_capacity(inner.len());
        for c in inner.chars() {
            symbols.push(match c {
                '0' => Symbol::Zero,
                '1' => Symbol::One,
                '*' => Symbol::Star,
                other => {
                    return Err(Error::BadPattern {
                        text: s.into(),
                        reason: format!("unexpected symbol `{other}`"),
                    })
                }
            });
        }
        Self::from_symbols(&symbols).map_err(|_| Error::BadPattern {
            text: s.into(),
            reason: "length must be between 1 and 64".into(),
        })
    }
}

/// Counts of 1s in the star-delimited gaps of a pattern: `dim + 1` entries.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GapVector(pub Vec<u64>);

impl GapVector {
    pub fn new(entries: Vec<u64>) -> Self {
        assert!(!entries.is_empty(), "gap vector needs at least one entry");
        GapVector(entries)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Dimension of the originating pattern: one less than the entry count.
    pub fn dim(&self) -> usize {
        self.0.len() - 1
    }

    pub fn total(&self) -> u64 {
        self.0.iter().sum()
    }

    pub fn entries(&self) -> &[u64] {
        &self.0
    }
}

impl fmt::Display for GapVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, g) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

/// Which vertex or edge is deleted from an embedded `Q_d`.
///
/// The deletion word is expressed in the coordinates of the embedded cube:
/// a `d`-bit word for a vertex, a `d`-symbol word with exactly one star for
/// an edge. Position `j` of the word refers to the host's `j`-th star.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PunctureSpec {
    None,
    DeleteVertex(StarPattern),
    DeleteEdge(StarPattern),
}

impl PunctureSpec {
    /// Validates the deletion word against a host of dimension `d`.
    pub fn validate(&self, d: usize) -> Result<()> {
        match self {
            PunctureSpec::None => Ok(()),
            PunctureSpec::DeleteVertex(w) => {
                if w.len() != d || !w.is_vertex() {
                    Err(Error::PunctureMismatch {
                        expected: d,
                        got: w.len(),
                    })
                } else {
                    Ok(())
                }
            }
            PunctureSpec::DeleteEdge(w) => {
                if w.len() != d || !w.is_edge() {
                    Err(Error::PunctureMismatch {
                        expected: d,
                        got: w.len(),
                    })
                } else {
                    Ok(())
                }
            }
        }
    }
}

impl fmt::Display for PunctureSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PunctureSpec::None => write!(f, "none"),
            PunctureSpec::DeleteVertex(w) => write!(f, "vertex {w}"),
            PunctureSpec::DeleteEdge(w) => write!(f, "edge {w}"),
        }
    }
}

/// Number of `i`-dimensional subcubes of `Q_n`: `C(n, i) * 2^(n-i)`.
pub fn subcube_count(n: u32, i: u32) -> u64 {
    debug_assert!(i <= n);
    binomial(n as u64, i as u64) << (n - i)
}

/// Iterator over every `i`-dimensional subcube of `Q_n`, in the documented
/// deterministic order.
pub fn enumerate_subcubes(n: u32, i: u32) -> Subcubes {
    assert!(i <= n && n >= 1 && n <= 64, "need 1 <= n <= 64 and i <= n");
    Subcubes {
        n,
        stars: (0..i).collect(),
        bits: 0,
        bits_end: 1u64 << (n - i),
        done: false,
    }
}

pub struct Subcubes {
    n: u32,
    stars: Vec<u32>,
    bits: u64,
    bits_end: u64,
    done: bool,
}

impl Iterator for Subcubes {
    type Item = StarPattern;

    fn next(&mut self) -> Option<StarPattern> {
        if self.done {
            return None;
        }
        let stars_mask = self.stars.iter().fold(0u64, |m, &p| m | 1 << p);
        let ones = spread_bits(self.n, stars_mask, self.bits);
        let item = StarPattern {
            len: self.n,
            ones,
            stars: stars_mask,
        };
        self.bits += 1;
        if self.bits == self.bits_end {
            self.bits = 0;
            if !advance_combination(&mut self.stars, self.n) {
                self.done = true;
            }
        }
        Some(item)
    }
}

/// Scatters counter bits over the positions *not* in `skip_mask`, leftmost
/// such position taking the most significant bit.
fn spread_bits(n: u32, skip_mask: u64, mut counter: u64) -> u64 {
    let mut out = 0u64;
    for pos in (0..n).rev() {
        if skip_mask >> pos & 1 == 0 {
            out |= (counter & 1) << pos;
            counter >>= 1;
        }
    }
    out
}

/// Advances a lexicographic combination of positions in `[0, n)`. Returns
/// false when the last combination has been passed.
fn advance_combination(combo: &mut [u32], n: u32) -> bool {
    let k = combo.len();
    if k == 0 {
        return false;
    }
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

/// Rank of a subcube in the [`enumerate_subcubes`] order.
pub fn subcube_rank(p: &StarPattern) -> u64 {
    let n = p.len as u64;
    let stars = p.star_positions();
    let i = stars.len() as u64;
    // Lexicographic rank of the star combination.
    let mut combo_rank = 0u64;
    let mut next = 0u64;
    for (j, &s) in stars.iter().enumerate() {
        for pos in next..s as u64 {
            combo_rank += binomial(n - 1 - pos, i - 1 - j as u64);
        }
        next = s as u64 + 1;
    }
    // Value of the fixed bits, leftmost fixed position most significant.
    let mut bits = 0u64;
    for pos in 0..p.len {
        if p.stars >> pos & 1 == 0 {
            bits = bits << 1 | (p.ones >> pos & 1);
        }
    }
    combo_rank * (1u64 << (n - i)) + bits
}

/// Inverse of [`subcube_rank`] for the given `n` and `i`.
pub fn subcube_unrank(n: u32, i: u32, rank: u64) -> StarPattern {
    let free = 1u64 << (n - i);
    let mut combo_rank = rank / free;
    let bits = rank % free;
    let mut stars_mask = 0u64;
    let mut pos = 0u64;
    for j in 0..i as u64 {
        loop {
            let below = binomial(n as u64 - 1 - pos, i as u64 - 1 - j);
            if combo_rank < below {
                stars_mask |= 1 << pos;
                pos += 1;
                break;
            }
            combo_rank -= below;
            pos += 1;
        }
    }
    let ones = spread_bits(n, stars_mask, bits);
    StarPattern {
        len: n,
        ones,
        stars: stars_mask,
    }
}

/// Iterator over the `i`-dimensional subcubes of the embedded cube `host`
/// that survive the puncture.
///
/// Each sub-subcube keeps `i` of the host's stars and fixes the remaining
/// stars to bits. A sub-subcube is excluded when it contains the deleted
/// vertex (its fixed star bits match the deletion word on every non-kept
/// star) or the deleted edge (the edge's star is kept and the fixed star
/// bits match the word on every non-kept star).
pub fn sub_subcubes<'a>(
    host: &StarPattern,
    i: u32,
    puncture: &'a PunctureSpec,
) -> Result<SubSubcubes<'a>> {
    let d = host.dim();
    if (i as usize) > d {
        return Err(Error::InvalidArgument(format!(
            "sub-subcube dimension {i} exceeds host dimension {d}"
        )));
    }
    puncture.validate(d)?;
    Ok(SubSubcubes {
        host: *host,
        star_positions: host.star_positions(),
        puncture,
        kept: (0..i).collect(),
        bits: 0,
        bits_end: 1u64 << (d as u32 - i),
        done: false,
    })
}

pub struct SubSubcubes<'a> {
    host: StarPattern,
    star_positions: Vec<u32>,
    puncture: &'a PunctureSpec,
    kept: Vec<u32>,
    bits: u64,
    bits_end: u64,
    done: bool,
}

impl SubSubcubes<'_> {
    fn advance(&mut self) {
        self.bits += 1;
        if self.bits == self.bits_end {
            self.bits = 0;
            if !advance_combination(&mut self.kept, self.star_positions.len() as u32) {
                self.done = true;
            }
        }
    }

    /// Deletion-word bits of the non-kept stars, in the counting layout of
    /// `self.bits` (leftmost non-kept star most significant).
    fn word_bits_on_free(&self, word: &StarPattern) -> u64 {
        let d = self.star_positions.len() as u32;
        let kept_mask = self.kept.iter().fold(0u64, |m, &j| m | 1 << j);
        let mut out = 0u64;
        for j in 0..d {
            if kept_mask >> j & 1 == 0 {
                out = out << 1 | (word.ones_mask() >> j & 1);
            }
        }
        out
    }

    fn excluded(&self) -> bool {
        match self.puncture {
            PunctureSpec::None => false,
            PunctureSpec::DeleteVertex(v) => self.bits == self.word_bits_on_free(v),
            PunctureSpec::DeleteEdge(e) => {
                let star_idx = e.star_positions()[0];
                self.kept.contains(&star_idx) && self.bits == self.word_bits_on_free(e)
            }
        }
    }

    fn current(&self) -> StarPattern {
        let mut stars_mask = 0u64;
        for &j in &self.kept {
            stars_mask |= 1 << self.star_positions[j as usize];
        }
        // Non-kept stars, ascending, receive the counter bits MSB-first.
        let free = self.star_positions.len() - self.kept.len();
        let mut ones = self.host.ones;
        let mut taken = 0;
        for &pos in &self.star_positions {
            if stars_mask >> pos & 1 == 0 {
                let bit = self.bits >> (free - 1 - taken) & 1;
                ones |= bit << pos;
                taken += 1;
            }
        }
        StarPattern {
            len: self.host.len,
            ones,
            stars: stars_mask,
        }
    }
}

impl Iterator for SubSubcubes<'_> {
    type Item = StarPattern;

    fn next(&mut self) -> Option<StarPattern> {
        while !self.done {
            if self.excluded() {
                self.advance();
                continue;
            }
            let item = self.current();
            self.advance();
            return Some(item);
        }
        None
    }
}

/// All `2^d` vertex deletion words for a `Q_d`, in binary counting order
/// (leftmost position most significant).
pub fn vertex_deletions(d: u32) -> impl Iterator<Item = PunctureSpec> {
    (0..1u64 << d).map(move |c| {
        PunctureSpec::DeleteVertex(StarPattern {
            len: d,
            ones: spread_bits(d, 0, c),
            stars: 0,
        })
    })
}

/// All `d * 2^(d-1)` edge deletion words for a `Q_d`: star position
/// ascending, then fixed bits in binary counting order.
pub fn edge_deletions(d: u32) -> impl Iterator<Item = PunctureSpec> {
    (0..d).flat_map(move |s| {
        (0..1u64 << (d - 1)).map(move |c| {
            let stars = 1u64 << s;
            PunctureSpec::DeleteEdge(StarPattern {
                len: d,
                ones: spread_bits(d, stars, c),
                stars,
            })
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pat(s: &str) -> StarPattern {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_print_round_trip() {
        for s in ["[010*]", "[0]", "[1101*100010*111*00101*]", "[***]"] {
            let p = pat(s);
            assert_eq!(p.to_string(), s);
            assert_eq!(pat(&p.to_string()), p);
        }
        // Brackets are optional on input.
        assert_eq!(pat("010*"), pat("[010*]"));
        assert!("[01x]".parse::<StarPattern>().is_err());
        assert!("".parse::<StarPattern>().is_err());
        assert!("[01".parse::<StarPattern>().is_err());
    }

    #[test]
    fn gap_vector_of_edge() {
        assert_eq!(pat("[010*]").gap_vector(), GapVector::new(vec![1, 0]));
    }

    #[test]
    fn gap_vector_of_q4_embedding() {
        // Edges on the leftmost star of this embedding sit in classes
        // (3,7)..(3,10), which pins the final gap at 0.
        let p = pat("[1101*100010*111*00101*]");
        assert_eq!(p.gap_vector(), GapVector::new(vec![3, 2, 3, 2, 0]));
    }

    #[test]
    fn gap_vector_of_colored_q4() {
        let p = pat("[01110*0*11*01001*11011]");
        assert_eq!(p.gap_vector(), GapVector::new(vec![3, 0, 2, 2, 4]));
    }

    #[test]
    fn gap_vector_of_all_zero_patterns() {
        for s in ["[0*00]", "[**0]", "[0000]"] {
            assert!(pat(s).gap_vector().entries().iter().all(|&g| g == 0));
        }
    }

    #[test]
    fn gap_vector_total_matches_ones_count() {
        for s in ["[010*]", "[1101*100010*111*00101*]", "[*1*]", "[1111]"] {
            let p = pat(s);
            assert_eq!(p.gap_vector().total(), p.ones_count());
        }
    }

    #[test]
    fn enumerate_q2_edges_in_documented_order() {
        let all: Vec<String> = enumerate_subcubes(2, 1).map(|p| p.to_string()).collect();
        assert_eq!(all, vec!["[*0]", "[*1]", "[0*]", "[1*]"]);
    }

    #[test]
    fn enumerate_counts() {
        assert_eq!(enumerate_subcubes(5, 2).count() as u64, 80);
        assert_eq!(enumerate_subcubes(5, 3).count() as u64, 40);
        assert_eq!(subcube_count(5, 2), 80);
        assert_eq!(subcube_count(5, 3), 40);
        for n in 1..=6 {
            for i in 0..=n {
                assert_eq!(
                    enumerate_subcubes(n, i).count() as u64,
                    subcube_count(n, i),
                    "n={n} i={i}"
                );
            }
        }
    }

    #[test]
    fn enumerate_is_distinct() {
        let mut seen = std::collections::HashSet::new();
        for p in enumerate_subcubes(6, 2) {
            assert!(seen.insert(p));
        }
        assert_eq!(seen.len() as u64, subcube_count(6, 2));
    }

    #[test]
    fn rank_matches_enumeration_order() {
        for (n, i) in [(5, 2), (6, 3), (4, 0), (4, 4), (7, 1)] {
            for (idx, p) in enumerate_subcubes(n, i).enumerate() {
                assert_eq!(subcube_rank(&p), idx as u64, "n={n} i={i} p={p}");
                assert_eq!(subcube_unrank(n, i, idx as u64), p);
            }
        }
    }

    #[test]
    fn sub_subcubes_without_puncture_is_full() {
        let host = pat("[1111*011*10110*101*001]");
        let subs: Vec<_> = sub_subcubes(&host, 2, &PunctureSpec::None)
            .unwrap()
            .collect();
        assert_eq!(subs.len(), 24);
        // Six star-pair groups of four.
        let mut by_stars = std::collections::BTreeMap::new();
        for s in &subs {
            *by_stars.entry(s.stars_mask()).or_insert(0u32) += 1;
        }
        assert_eq!(by_stars.len(), 6);
        assert!(by_stars.values().all(|&c| c == 4));
    }

    #[test]
    fn sub_subcubes_identity_at_full_dimension() {
        let host = pat("[01*0**]");
        let subs: Vec<_> = sub_subcubes(&host, 3, &PunctureSpec::None)
            .unwrap()
            .collect();
        assert_eq!(subs, vec![host]);
    }

    #[test]
    fn vertex_puncture_removes_incident_edges() {
        let host = pat("[***00]");
        let punct = PunctureSpec::DeleteVertex(pat("[111]"));
        let subs: Vec<_> = sub_subcubes(&host, 1, &punct).unwrap().collect();
        // Q_3 has 12 edges; the deleted vertex is incident to 3.
        assert_eq!(subs.len(), 9);
        let v = pat("[11100]");
        for s in &subs {
            // A subcube contains a vertex iff they agree on every fixed
            // position of the subcube.
            let contains = v.ones_mask() & !s.stars_mask() == s.ones_mask();
            assert!(!contains, "{s} contains the deleted vertex");
        }
    }

    #[test]
    fn exclusion_counts_by_brute_force() {
        // Vertex punctures exclude C(d, i) subcubes, edge punctures
        // C(d-1, i-1), independent of the deletion word.
        for d in 1..=6u32 {
            let host = StarPattern::from_masks(d + 2, 1 << (d + 1), (1 << d) - 1).unwrap();
            for i in 1..=d {
                let total = sub_subcubes(&host, i, &PunctureSpec::None).unwrap().count();
                for punct in vertex_deletions(d).take(3) {
                    let kept = sub_subcubes(&host, i, &punct).unwrap().count();
                    assert_eq!(total - kept, binomial(d as u64, i as u64) as usize);
                }
                for punct in edge_deletions(d).take(3) {
                    let kept = sub_subcubes(&host, i, &punct).unwrap().count();
                    assert_eq!(
                        total - kept,
                        binomial(d as u64 - 1, i as u64 - 1) as usize
                    );
                }
            }
        }
    }

    #[test]
    fn puncture_word_length_is_checked() {
        let host = pat("[***00]");
        let bad = PunctureSpec::DeleteVertex(pat("[11]"));
        assert!(sub_subcubes(&host, 1, &bad).is_err());
        let bad_edge = PunctureSpec::DeleteEdge(pat("[1*00]"));
        assert!(sub_subcubes(&host, 1, &bad_edge).is_err());
    }

    #[test]
    fn deletion_enumerations_have_documented_sizes() {
        assert_eq!(vertex_deletions(4).count(), 16);
        assert_eq!(edge_deletions(4).count(), 32);
        let first: Vec<String> = vertex_deletions(2).map(|p| p.to_string()).collect();
        assert_eq!(first, vec!["vertex [00]", "vertex [01]", "vertex [10]", "vertex [11]"]);
        let edges: Vec<String> = edge_deletions(2).map(|p| p.to_string()).collect();
        assert_eq!(edges, vec!["edge [*0]", "edge [*1]", "edge [0*]", "edge [1*]"]);
    }
}

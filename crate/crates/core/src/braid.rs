//! Braid words, their closures, cabling, and the knot table.
//!
//! A braid on `n` strands is written `"n | g1 g2 ..."`, where `g = ±i` stands
//! for the generator `σ_i^{±1}` crossing the strands at positions `i` and
//! `i+1`.  Words are read left to right as bottom to top.

use std::fmt;
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::laurent::LaurentPoly;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BraidError {
    #[error("syntax error in braid {text:?}: {reason}")]
    Syntax { text: String, reason: String },
    #[error("generator {generator} out of range for {strands} strands")]
    GeneratorOutOfRange { generator: i32, strands: usize },
    #[error("closure has {components} components, expected a knot")]
    NotAKnot { components: usize },
    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },
    #[error("line {line}: {reason}")]
    Validation { line: usize, reason: String },
    #[error("cannot read knot table: {0}")]
    Io(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    word: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, word: Vec<i32>) -> Result<Self, BraidError> {
        if strands == 0 {
            return Err(BraidError::Syntax { text: String::new(), reason: "zero strands".into() });
        }
        for &g in &word {
            if g == 0 || g.unsigned_abs() as usize >= strands {
                return Err(BraidError::GeneratorOutOfRange { generator: g, strands });
            }
        }
        Ok(BraidWord { strands, word })
    }

    pub fn unknot() -> Self {
        BraidWord { strands: 1, word: Vec::new() }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn word(&self) -> &[i32] {
        &self.word
    }

    pub fn writhe(&self) -> i32 {
        self.word.iter().map(|g| g.signum()).sum()
    }

    /// Maps the bottom position of every strand to its top position.
    pub fn permutation(&self) -> Vec<usize> {
        let mut at: Vec<usize> = (0..self.strands).collect(); // at[position] = strand
        for &g in &self.word {
            let i = g.unsigned_abs() as usize - 1;
            at.swap(i, i + 1);
        }
        let mut perm = vec![0; self.strands];
        for (pos, &strand) in at.iter().enumerate() {
            perm[strand] = pos;
        }
        perm
    }

    /// Cycles of the closure permutation, each sorted, ordered by least strand.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let perm = self.permutation();
        let mut seen = vec![false; self.strands];
        let mut out = Vec::new();
        for start in 0..self.strands {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                cycle.push(p);
                p = perm[p];
            }
            cycle.sort_unstable();
            out.push(cycle);
        }
        out
    }

    pub fn is_knot(&self) -> bool {
        self.components().len() == 1
    }

    /// Component index of every starting position.
    pub fn component_of_strand(&self) -> Vec<usize> {
        let mut owner = vec![0; self.strands];
        for (c, cycle) in self.components().iter().enumerate() {
            for &p in cycle {
                owner[p] = c;
            }
        }
        owner
    }

    /// Symmetric matrix whose diagonal holds each component's blackboard
    /// self-framing (signed count of crossings within the component) and
    /// whose off-diagonal entries are pairwise linking numbers.
    pub fn framing_matrix(&self) -> Vec<Vec<i32>> {
        let owner = self.component_of_strand();
        let k = self.components().len();
        let mut twice = vec![vec![0i32; k]; k];
        let mut at: Vec<usize> = (0..self.strands).collect();
        for &g in &self.word {
            let i = g.unsigned_abs() as usize - 1;
            let (a, b) = (owner[at[i]], owner[at[i + 1]]);
            if a == b {
                twice[a][a] += 2 * g.signum();
            } else {
                twice[a][b] += g.signum();
                twice[b][a] += g.signum();
            }
            at.swap(i, i + 1);
        }
        for (a, row) in twice.iter_mut().enumerate() {
            for (b, v) in row.iter_mut().enumerate() {
                debug_assert!(a == b || *v % 2 == 0);
                *v /= 2;
            }
        }
        twice
    }

    pub fn self_framings(&self) -> Vec<i32> {
        let m = self.framing_matrix();
        (0..m.len()).map(|i| m[i][i]).collect()
    }

    /// Replaces every strand by `n` parallel strands.
    pub fn cable(&self, n: usize) -> BraidWord {
        assert!(n >= 1, "cable width must be positive");
        if n == 1 {
            return self.clone();
        }
        let mut word = Vec::with_capacity(self.word.len() * n * n);
        for &g in &self.word {
            let i = g.unsigned_abs() as usize;
            let block: Vec<i32> = (0..n)
                .flat_map(|r| (0..n).map(move |c| (n * i - r + c) as i32))
                .collect();
            if g > 0 {
                word.extend(block);
            } else {
                word.extend(block.iter().rev().map(|x| -x));
            }
        }
        BraidWord { strands: self.strands * n, word }
    }

    /// The `(n, extra)` parallel: the `n`-cable with its blackboard framing
    /// untwisted by full twists on the first block, followed by `extra`
    /// positive block half-twists `σ_1 … σ_{n-1}`.
    pub fn parallel(&self, n: usize, extra_half_twists: i32) -> Result<BraidWord, BraidError> {
        if !self.is_knot() {
            return Err(BraidError::NotAKnot { components: self.components().len() });
        }
        let mut out = self.cable(n);
        let half: Vec<i32> = (1..n as i32).collect();
        let w = self.writhe();
        let reps = (w.unsigned_abs() as usize) * n;
        for _ in 0..reps {
            if w > 0 {
                out.word.extend(half.iter().rev().map(|x| -x));
            } else {
                out.word.extend(half.iter().copied());
            }
        }
        for _ in 0..extra_half_twists.max(0) {
            out.word.extend(half.iter().copied());
        }
        for _ in 0..(-extra_half_twists).max(0) {
            out.word.extend(half.iter().rev().map(|x| -x));
        }
        Ok(out)
    }

    /// Conjugate `g b g^{-1}`.
    pub fn conjugate(&self, g: &[i32]) -> Result<BraidWord, BraidError> {
        let mut word = g.to_vec();
        word.extend_from_slice(&self.word);
        word.extend(g.iter().rev().map(|x| -x));
        BraidWord::new(self.strands, word)
    }

    /// Markov stabilisation `b σ_n^{±1}` on one more strand.
    pub fn stabilize(&self, positive: bool) -> BraidWord {
        let mut word = self.word.clone();
        let g = self.strands as i32;
        word.push(if positive { g } else { -g });
        BraidWord { strands: self.strands + 1, word }
    }
}

impl FromStr for BraidWord {
    type Err = BraidError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let syntax = |reason: &str| BraidError::Syntax { text: text.to_string(), reason: reason.to_string() };
        let (head, tail) = text.split_once('|').ok_or_else(|| syntax("missing '|'"))?;
        let strands: usize = head.trim().parse().map_err(|_| syntax("bad strand count"))?;
        let word = tail
            .split_whitespace()
            .map(|t| t.parse::<i32>().map_err(|_| syntax(&format!("bad generator {t:?}"))))
            .collect::<Result<Vec<_>, _>>()?;
        if strands == 0 {
            return Err(syntax("zero strands"));
        }
        BraidWord::new(strands, word)
    }
}

pub fn parse_braid(text: &str) -> Result<BraidWord, BraidError> {
    text.parse()
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} |", self.strands)?;
        for g in &self.word {
            write!(f, " {g}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
struct KnotLine {
    name: String,
    strands: usize,
    word: Vec<i32>,
    crossings: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    genus: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    alexander: Option<LaurentPoly>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    aliases: Vec<String>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct KnotRecord {
    pub name: String,
    pub aliases: Vec<String>,
    pub braid: BraidWord,
    pub crossings: u32,
    pub genus: Option<u32>,
    /// Alexander polynomial in the `s` slot, symmetric, `Δ(1) = 1`.
    pub alexander: Option<LaurentPoly>,
}

impl KnotRecord {
    pub fn matches(&self, name: &str) -> bool {
        self.name == name || self.aliases.iter().any(|a| a == name)
    }
}

/// Parses and validates a JSON-lines knot table.
pub fn parse_knot_table(text: &str) -> Result<Vec<KnotRecord>, BraidError> {
    let mut out = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        if raw.trim().is_empty() {
            continue;
        }
        let rec: KnotLine =
            serde_json::from_str(raw).map_err(|e| BraidError::Parse { line, reason: e.to_string() })?;
        let braid = BraidWord::new(rec.strands, rec.word)
            .map_err(|e| BraidError::Validation { line, reason: e.to_string() })?;
        let comps = braid.components().len();
        if comps != 1 {
            return Err(BraidError::Validation {
                line,
                reason: format!("{}: closure has {comps} components", rec.name),
            });
        }
        if let Some(expected) = &rec.alexander {
            let got = crate::colored::alexander_burau(&braid)
                .map_err(|e| BraidError::Validation { line, reason: e.to_string() })?;
            if &got != expected {
                return Err(BraidError::Validation {
                    line,
                    reason: format!("{}: Alexander polynomial {got} differs from table {expected}", rec.name),
                });
            }
        }
        out.push(KnotRecord {
            name: rec.name,
            aliases: rec.aliases,
            braid,
            crossings: rec.crossings,
            genus: rec.genus,
            alexander: rec.alexander,
        });
    }
    Ok(out)
}

pub fn load_knot_table(path: impl AsRef<Path>) -> Result<Vec<KnotRecord>, BraidError> {
    let text = std::fs::read_to_string(path.as_ref()).map_err(|e| BraidError::Io(e.to_string()))?;
    parse_knot_table(&text)
}

/// The census of prime knots up to eight crossings shipped with the crate.
pub fn builtin_knot_table() -> Vec<KnotRecord> {
    parse_knot_table(include_str!("../data/knots.jsonl")).expect("shipped knot table is valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display_roundtrip() {
        let b: BraidWord = "3 | 1 -2 1 -2".parse().unwrap();
        assert_eq!(b.to_string(), "3 | 1 -2 1 -2");
        assert_eq!(b.writhe(), 0);
        assert_eq!("1 |".parse::<BraidWord>().unwrap(), BraidWord::unknot());
        assert!(matches!("2 | 2".parse::<BraidWord>(), Err(BraidError::GeneratorOutOfRange { .. })));
        assert!(matches!("2 1 1".parse::<BraidWord>(), Err(BraidError::Syntax { .. })));
        assert!(matches!("2 | 1 x".parse::<BraidWord>(), Err(BraidError::Syntax { .. })));
    }

    #[test]
    fn cable_of_single_crossing_swaps_blocks() {
        let c = "2 | 1".parse::<BraidWord>().unwrap().cable(2);
        assert_eq!(c.word(), &[2, 3, 1, 2]);
        assert_eq!(c.permutation(), vec![2, 3, 0, 1]);
    }

    #[test]
    fn trefoil_cable_framings() {
        let t: BraidWord = "2 | 1 1 1".parse().unwrap();
        let c = t.cable(2);
        assert_eq!(c.word().len(), 12);
        let m = c.framing_matrix();
        assert_eq!(m, vec![vec![3, 3], vec![3, 3]]);
        let p = t.parallel(2, 0).unwrap();
        let m = p.framing_matrix();
        assert_eq!(m[0][1], 0);
        let p1 = t.parallel(2, 1).unwrap();
        assert_eq!(&p1.word()[..p.word().len()], p.word());
        assert_eq!(p1.word()[p.word().len()..], [1]);
        assert!(p1.is_knot());
    }
}

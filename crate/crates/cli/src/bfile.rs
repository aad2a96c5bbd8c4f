//! OEIS b-files (`n a(n)` per line) and prefix comparison against the
//! sequences this crate computes.

use std::fmt;
use std::path::Path;
use std::str::FromStr;

use borel_core::triangles::{a_entry, borel_row, catalan_row, generalized_catalan, half_row_max};
use borel_core::{BigInt, BigUint};

use crate::error::{CliError, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BFile {
    pub entries: Vec<(i64, BigInt)>,
}

impl BFile {
    /// Ignores blank lines and lines starting with `#`; indices must
    /// strictly increase.
    pub fn parse(text: &str) -> Result<Self> {
        let mut entries: Vec<(i64, BigInt)> = Vec::new();
        for (no, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |message: &str| CliError::BFile {
                line: no + 1,
                message: message.to_string(),
            };
            let mut parts = line.split_whitespace();
            let (Some(i), Some(v), None) = (parts.next(), parts.next(), parts.next()) else {
                return Err(err("expected two fields \"n a(n)\""));
            };
            let i: i64 = i.parse().map_err(|_| err("index is not an integer"))?;
            let v: BigInt = v.parse().map_err(|_| err("value is not an integer"))?;
            if entries.last().is_some_and(|&(prev, _)| prev >= i) {
                return Err(err("indices must strictly increase"));
            }
            entries.push((i, v));
        }
        Ok(BFile { entries })
    }

    pub fn read(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
            path: path.to_path_buf(),
            source,
        })?;
        BFile::parse(&text)
    }
}

/// Sequences with a known OEIS number.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OeisSeq {
    /// Catalan's triangle by rows.
    A009766,
    /// Borel's triangle by rows.
    A234950,
    /// Generalized Catalan numbers.
    A064062,
    /// Binary trees by vertices and leaves, by rows, with a row 0 of `1`.
    A091894,
}

impl OeisSeq {
    pub const ALL: [OeisSeq; 4] = [
        OeisSeq::A009766,
        OeisSeq::A234950,
        OeisSeq::A064062,
        OeisSeq::A091894,
    ];

    pub fn offset(self) -> i64 {
        0
    }

    /// Terms from the offset up to and including index `last`.
    pub fn terms(self, last: i64) -> Vec<BigUint> {
        let count = usize::try_from(last - self.offset() + 1).unwrap_or(0);
        let mut out = Vec::with_capacity(count);
        let mut row = 0;
        while out.len() < count {
            match self {
                OeisSeq::A009766 => out.extend(catalan_row(row)),
                OeisSeq::A234950 => out.extend(borel_row(row)),
                OeisSeq::A064062 => out.push(generalized_catalan(row)),
                OeisSeq::A091894 if row == 0 => out.push(BigUint::from(1u8)),
                OeisSeq::A091894 => out
                    .extend((0..=half_row_max(row)).map(|k| a_entry(row, k).expect("k in range"))),
            }
            row += 1;
        }
        out.truncate(count);
        out
    }
}

impl fmt::Display for OeisSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl FromStr for OeisSeq {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().to_ascii_uppercase();
        OeisSeq::ALL
            .into_iter()
            .find(|q| q.to_string() == s)
            .ok_or_else(|| CliError::Usage(format!("unsupported sequence {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Comparison {
    /// Every overlapping index agrees.
    Match {
        first: i64,
        last: i64,
    },
    Mismatch {
        index: i64,
        expected: BigInt,
        computed: BigInt,
    },
    NoOverlap,
}

/// Compares the b-file against the computed sequence on the indices both
/// cover.
pub fn compare(bfile: &BFile, seq: OeisSeq) -> Comparison {
    let overlap: Vec<&(i64, BigInt)> = bfile
        .entries
        .iter()
        .filter(|(i, _)| *i >= seq.offset())
        .collect();
    let Some(&&(last, _)) = overlap.last() else {
        return Comparison::NoOverlap;
    };
    let terms = seq.terms(last);
    for (i, v) in &overlap {
        let computed = BigInt::from(terms[(i - seq.offset()) as usize].clone());
        if &computed != v {
            return Comparison::Mismatch {
                index: *i,
                expected: v.clone(),
                computed,
            };
        }
    }
    Comparison::Match {
        first: overlap[0].0,
        last,
    }
}

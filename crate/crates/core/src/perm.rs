//! Permutations of `1..=m`, flattening, complement and classical pattern
//! containment.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Permutation {
    values: Vec<usize>,
}

impl Permutation {
    pub fn new(values: Vec<usize>) -> Result<Self> {
        let m = values.len();
        let mut seen = alloc::vec![false; m + 1];
        for &v in &values {
            if v == 0 || v > m || seen[v] {
                return Err(Error::domain(alloc::format!(
                    "{values:?} is not a permutation of 1..={m}"
                )));
            }
            seen[v] = true;
        }
        Ok(Permutation { values })
    }

    pub(crate) fn from_vec_unchecked(values: Vec<usize>) -> Self {
        Permutation { values }
    }

    pub fn identity(m: usize) -> Self {
        Permutation {
            values: (1..=m).collect(),
        }
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `m + 1 - π(i)` entrywise.
    pub fn complement(&self) -> Permutation {
        let m = self.len();
        Permutation {
            values: self.values.iter().map(|&v| m + 1 - v).collect(),
        }
    }

    pub fn contains_pattern(&self, pattern: &Permutation) -> bool {
        occurs(&self.values, &pattern.values, false)
    }

    pub fn avoids_all(&self, patterns: &[Permutation]) -> bool {
        patterns.iter().all(|p| !self.contains_pattern(p))
    }
}

/// The permutation order-isomorphic to `w`.
pub fn flatten(w: &[usize]) -> Result<Permutation> {
    let mut sorted: Vec<usize> = w.to_vec();
    sorted.sort_unstable();
    if sorted.windows(2).any(|p| p[0] == p[1]) {
        return Err(Error::domain(alloc::format!("{w:?} has repeated entries")));
    }
    Ok(Permutation {
        values: w
            .iter()
            .map(|v| sorted.binary_search(v).expect("present") + 1)
            .collect(),
    })
}

/// Whether some subsequence of `w` is order-isomorphic to `pattern`; with
/// `at_end` the occurrence must use the last entry of `w`.
pub(crate) fn occurs(w: &[usize], pattern: &[usize], at_end: bool) -> bool {
    fn go(
        w: &[usize],
        pattern: &[usize],
        chosen: &mut Vec<usize>,
        start: usize,
        at_end: bool,
    ) -> bool {
        let r = chosen.len();
        if r == pattern.len() {
            return true;
        }
        let need = pattern.len() - r;
        let last = if at_end && need == 1 {
            // The final choice is forced.
            w.len().saturating_sub(1).max(start)..w.len()
        } else {
            start..w.len()
        };
        for j in last {
            if w.len() - j < need {
                break;
            }
            let fits = chosen
                .iter()
                .enumerate()
                .all(|(s, &c)| (w[c] < w[j]) == (pattern[s] < pattern[r]));
            if fits {
                chosen.push(j);
                if go(w, pattern, chosen, j + 1, at_end) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    if pattern.is_empty() {
        return true;
    }
    go(
        w,
        pattern,
        &mut Vec::with_capacity(pattern.len()),
        0,
        at_end,
    )
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.len() <= 9 { "" } else { "," };
        let parts: Vec<String> = self.values.iter().map(|v| alloc::format!("{v}")).collect();
        f.write_str(&parts.join(sep))
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let values: Result<Vec<usize>> = if s.contains(',') {
            s.split(',')
                .map(|p| {
                    p.trim()
                        .parse()
                        .map_err(|_| Error::parse(alloc::format!("bad entry {p:?}")))
                })
                .collect()
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| Error::parse(alloc::format!("bad character {c:?}")))
                })
                .collect()
        };
        Permutation::new(values?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn flatten_and_complement() {
        assert_eq!(flatten(&[5, 8, 6]).unwrap(), p("132"));
        assert!(flatten(&[2, 2]).is_err());
        assert_eq!(p("2143").complement(), p("3412"));
        assert_eq!(p("2143").complement().complement(), p("2143"));
        assert_eq!(p("2413").complement(), p("3142"));
        assert_eq!(p("3142").complement(), p("2413"));
    }

    #[test]
    fn containment() {
        assert!(!p("4213").contains_pattern(&p("2413")));
        assert!(p("364215").contains_pattern(&p("2413")));
        assert!(p("4213").contains_pattern(&p("1")));
        assert!(p("123").contains_pattern(&p("12")));
        assert!(!p("321").contains_pattern(&p("12")));
        assert!(occurs(&[3, 6, 1, 5], &[2, 4, 1, 3], true));
        assert!(!occurs(&[3, 6, 1, 5, 2], &[2, 4, 1, 3], true));
    }

    #[test]
    fn text_form() {
        assert_eq!(p("364215").to_string(), "364215");
        let long = Permutation::new((1..=10).rev().collect()).unwrap();
        assert_eq!(long.to_string(), "10,9,8,7,6,5,4,3,2,1");
        assert_eq!(long.to_string().parse::<Permutation>().unwrap(), long);
        assert!("1134".parse::<Permutation>().is_err());
        assert!("12a".parse::<Permutation>().is_err());
    }
}

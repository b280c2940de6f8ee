//! Partitions serving double duty as factorization types and cycle types.
//!
//! A squarefree polynomial's multiset of irreducible-factor degrees is a
//! partition of its degree; so is the cycle type of a permutation. Reports
//! print partitions in descending dash form, e.g. `"3-1-1"`.

use alloc::string::String;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// A partition: positive parts stored sorted descending.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct CycleType {
    parts: Vec<u32>,
}

impl CycleType {
    /// Builds a partition from arbitrary-order parts; zero parts are invalid.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::invalid(String::from("partition parts must be positive")));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(CycleType { parts })
    }

    /// The partition `[n]` with a single part.
    pub fn single(n: u32) -> Self {
        CycleType {
            parts: alloc::vec![n],
        }
    }

    /// The empty partition of 0.
    pub fn empty() -> Self {
        CycleType { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Sum of parts.
    pub fn total(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Multiplicity of each distinct part, largest part first.
    pub fn multiplicities(&self) -> Vec<(u32, u32)> {
        let mut out: Vec<(u32, u32)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((v, m)) if *v == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// `true` when the partition is `[n]` itself — a full cycle.
    pub fn is_full_cycle(&self) -> bool {
        self.parts.len() == 1
    }

    /// Transposition shape `[2, 1, 1, …]`.
    pub fn is_transposition_type(&self) -> bool {
        self.parts.first() == Some(&2) && self.parts.iter().skip(1).all(|&p| p == 1)
    }

    /// Parses the dash form, e.g. `"3-1-1"`.
    pub fn parse(s: &str) -> Result<Self> {
        let parts = s
            .split('-')
            .map(|tok| {
                tok.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::invalid(alloc::format!("bad partition token {tok:?}")))
            })
            .collect::<Result<Vec<u32>>>()?;
        CycleType::new(parts)
    }
}

impl core::fmt::Display for CycleType {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, "-")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl From<CycleType> for String {
    fn from(t: CycleType) -> String {
        alloc::format!("{t}")
    }
}

impl TryFrom<String> for CycleType {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        CycleType::parse(&s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn sorts_descending() {
        let t = CycleType::new(vec![1, 3, 1]).unwrap();
        assert_eq!(t.parts(), &[3, 1, 1]);
        assert_eq!(t.total(), 5);
    }

    #[test]
    fn dash_display_and_parse() {
        let t = CycleType::new(vec![2, 1, 1]).unwrap();
        assert_eq!(alloc::format!("{t}"), "2-1-1");
        assert_eq!(CycleType::parse("2-1-1").unwrap(), t);
    }

    #[test]
    fn rejects_zero_part() {
        assert!(CycleType::new(vec![2, 0]).is_err());
    }

    #[test]
    fn shape_predicates() {
        assert!(CycleType::single(4).is_full_cycle());
        assert!(CycleType::new(vec![2, 1, 1]).unwrap().is_transposition_type());
        assert!(CycleType::new(vec![2]).unwrap().is_transposition_type());
        assert!(!CycleType::new(vec![2, 2]).unwrap().is_transposition_type());
    }

    #[test]
    fn multiplicities() {
        let t = CycleType::new(vec![3, 3, 1]).unwrap();
        assert_eq!(t.multiplicities(), vec![(3, 2), (1, 1)]);
    }
}

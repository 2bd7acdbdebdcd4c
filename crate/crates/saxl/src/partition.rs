//! Integer partitions, the dominance order, staircases and hooks.

use std::fmt;
use std::str::FromStr;

use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

use crate::{Error, Result};

/// Hard cap on a single part and on the number of boxes of one partition.
pub const MAX_BOXES: u64 = 1 << 31;

/// Largest box count accepted by [`enumerate_partitions`].
pub const ENUMERATION_CAP: u64 = 30;

/// A weakly decreasing sequence of positive integers.
///
/// Trailing zeros are stripped at construction, so the empty partition is the
/// empty part list and equality is structural equality.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition, normalizing away trailing zeros.
    pub fn new(parts: impl Into<Vec<u32>>) -> Result<Self> {
        let mut parts = parts.into();
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(
                "zero part before the end of the sequence".into(),
            ));
        }
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(Error::InvalidPartition(format!(
                "parts are not weakly decreasing: {parts:?}"
            )));
        }
        let size: u64 = parts.iter().map(|&p| u64::from(p)).sum();
        if size > MAX_BOXES {
            return Err(Error::CapExceeded {
                what: "partition box count",
                value: size,
                cap: MAX_BOXES,
            });
        }
        Ok(Self { parts })
    }

    pub fn empty() -> Self {
        Self { parts: Vec::new() }
    }

    /// The staircase ϱ(n) = (n, n−1, …, 1) with n(n+1)/2 boxes.
    pub fn staircase(n: u32) -> Self {
        Self {
            parts: (1..=n).rev().collect(),
        }
    }

    /// A single row of `n` boxes.
    pub fn row(n: u32) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Self { parts: vec![n] }
        }
    }

    /// A single column of `n` boxes.
    pub fn column(n: u32) -> Self {
        Self {
            parts: vec![1; n as usize],
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// The `i`-th part (0-based), reading 0 past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Number of (nonzero) rows.
    pub fn rows(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of boxes.
    pub fn size(&self) -> u64 {
        self.parts.iter().map(|&p| u64::from(p)).sum()
    }

    /// Flips the Young diagram at the main diagonal.
    pub fn transpose(&self) -> Partition {
        let cols = self.part(0) as usize;
        let mut parts = Vec::with_capacity(cols);
        for c in 1..=cols as u32 {
            let height = self.parts.iter().take_while(|&&p| p >= c).count() as u32;
            parts.push(height);
        }
        Partition { parts }
    }

    /// Column lengths of the Young diagram, left to right.
    pub fn column_lengths(&self) -> Vec<u32> {
        self.transpose().parts
    }

    /// Dominance: every prefix sum of `self` is ≥ the corresponding prefix
    /// sum of `other`. Only defined for equal box counts.
    pub fn dominates(&self, other: &Partition) -> Result<bool> {
        if self.size() != other.size() {
            return Err(Error::SizeMismatch {
                left: self.size(),
                right: other.size(),
            });
        }
        let mut acc_self = 0u64;
        let mut acc_other = 0u64;
        for i in 0..self.rows().max(other.rows()) {
            acc_self += u64::from(self.part(i));
            acc_other += u64::from(other.part(i));
            if acc_self < acc_other {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// True when one of the two partitions dominates the other.
    pub fn comparable(&self, other: &Partition) -> Result<bool> {
        Ok(self.dominates(other)? || other.dominates(self)?)
    }

    /// Partwise sum, the shorter sequence padded with zeros.
    pub fn add(&self, other: &Partition) -> Partition {
        let len = self.rows().max(other.rows());
        let parts: Vec<u32> = (0..len)
            .map(|i| {
                self.part(i)
                    .checked_add(other.part(i))
                    .expect("partition part overflow")
            })
            .collect();
        Partition::new(parts).expect("sum of partitions is a partition")
    }

    /// Decomposes a hook into (first-row length, length of the column below
    /// the corner box); `None` when more than one part exceeds 1.
    pub fn as_hook(&self) -> Option<(u32, u32)> {
        if self.part(1) > 1 {
            return None;
        }
        let row_len = self.part(0);
        let col_len = self.rows().saturating_sub(1) as u32;
        Some((row_len, col_len))
    }
}

impl fmt::Display for Partition {
    /// Text form used by the CLI and all JSON documents: comma-separated
    /// parts, no spaces; the empty partition renders as the empty string.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition({})", self)
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts: std::result::Result<Vec<u32>, _> = s
            .split(',')
            .map(|piece| {
                if piece.is_empty() || !piece.bytes().all(|b| b.is_ascii_digit()) {
                    return Err(());
                }
                piece.parse::<u32>().map_err(|_| ())
            })
            .collect();
        match parts {
            Ok(parts) if !parts.contains(&0) => Partition::new(parts),
            _ => Err(Error::InvalidPartition(format!(
                "cannot parse {s:?}: expected comma-separated decreasing positive integers"
            ))),
        }
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(de::Error::custom)
    }
}

/// All partitions of `d`, in reverse lexicographic order, each exactly once.
pub fn enumerate_partitions(d: u64) -> Result<Vec<Partition>> {
    if d > ENUMERATION_CAP {
        return Err(Error::CapExceeded {
            what: "partition enumeration box count",
            value: d,
            cap: ENUMERATION_CAP,
        });
    }
    if d == 0 {
        return Ok(vec![Partition::empty()]);
    }
    let mut out = Vec::new();
    let mut current: Vec<u32> = vec![d as u32];
    loop {
        out.push(Partition {
            parts: current.clone(),
        });
        // Next partition in reverse lexicographic order: shrink the last
        // part that exceeds 1 and redistribute the freed boxes greedily.
        let Some(i) = current.iter().rposition(|&p| p > 1) else {
            break;
        };
        let rem: u32 = current[i..].iter().sum();
        let v = current[i] - 1;
        current.truncate(i);
        let mut left = rem;
        while left > 0 {
            let p = left.min(v);
            current.push(p);
            left -= p;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    /// Independent prefix-sum comparison, kept deliberately separate from the
    /// implementation under test.
    fn dominates_oracle(a: &Partition, b: &Partition) -> bool {
        let len = a.rows().max(b.rows());
        let mut sa = 0i64;
        let mut sb = 0i64;
        for i in 0..len {
            sa += i64::from(a.part(i));
            sb += i64::from(b.part(i));
            if sa < sb {
                return false;
            }
        }
        true
    }

    /// p(d) from the two-variable counting recurrence, independent of the
    /// enumerator.
    fn partition_count(d: usize) -> u64 {
        // count[k][n] = partitions of n with parts <= k
        let mut count = vec![vec![0u64; d + 1]; d + 1];
        for row in count.iter_mut() {
            row[0] = 1;
        }
        for k in 1..=d {
            for n in 1..=d {
                count[k][n] = count[k - 1][n] + if n >= k { count[k][n - k] } else { 0 };
            }
        }
        count[d][d]
    }

    #[test]
    fn transpose_examples() {
        assert_eq!(p(&[5, 3, 1, 1]).transpose(), p(&[4, 2, 2, 1, 1]));
        assert_eq!(p(&[3, 2, 1]).transpose(), p(&[3, 2, 1]));
        assert_eq!(Partition::empty().transpose(), Partition::empty());
    }

    #[test]
    fn transpose_is_involution() {
        for d in 0..=10 {
            for q in enumerate_partitions(d).unwrap() {
                assert_eq!(q.transpose().transpose(), q);
            }
        }
    }

    #[test]
    fn dominates_examples() {
        assert!(p(&[5, 3, 1, 1]).dominates(&p(&[4, 3, 2, 1])).unwrap());
        assert!(!p(&[3, 3]).dominates(&p(&[4, 2])).unwrap());
        let q = p(&[4, 2, 1]);
        assert!(q.dominates(&q).unwrap());
    }

    #[test]
    fn dominates_requires_equal_sizes() {
        let err = p(&[3]).dominates(&p(&[2, 2])).unwrap_err();
        assert_eq!(err, Error::SizeMismatch { left: 3, right: 4 });
    }

    #[test]
    fn dominates_matches_prefix_sum_oracle() {
        for d in 0..=8 {
            let all = enumerate_partitions(d).unwrap();
            for a in &all {
                for b in &all {
                    assert_eq!(a.dominates(b).unwrap(), dominates_oracle(a, b));
                }
            }
        }
    }

    #[test]
    fn comparable_examples() {
        assert!(p(&[2, 2, 2]).comparable(&p(&[3, 2, 1])).unwrap());
        assert!(!p(&[4, 1, 1]).comparable(&p(&[3, 3])).unwrap());
        assert!(p(&[6]).comparable(&p(&[1, 1, 1, 1, 1, 1])).unwrap());
    }

    #[test]
    fn dominance_is_a_partial_order() {
        for d in 0..=8 {
            let all = enumerate_partitions(d).unwrap();
            for a in &all {
                assert!(a.dominates(a).unwrap());
            }
            for a in &all {
                for b in &all {
                    if a.dominates(b).unwrap() && b.dominates(a).unwrap() {
                        assert_eq!(a, b);
                    }
                }
            }
            for a in &all {
                for b in &all {
                    if !a.dominates(b).unwrap() {
                        continue;
                    }
                    for c in &all {
                        if b.dominates(c).unwrap() {
                            assert!(a.dominates(c).unwrap());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn transpose_reverses_dominance() {
        for d in 0..=10 {
            let all = enumerate_partitions(d).unwrap();
            for a in &all {
                for b in &all {
                    assert_eq!(
                        a.dominates(b).unwrap(),
                        b.transpose().dominates(&a.transpose()).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn staircase_examples() {
        assert_eq!(Partition::staircase(4), p(&[4, 3, 2, 1]));
        assert_eq!(Partition::staircase(1), p(&[1]));
        assert_eq!(Partition::staircase(2).size(), 3);
    }

    #[test]
    fn staircase_is_self_transpose() {
        for n in 1..=10 {
            let s = Partition::staircase(n);
            assert_eq!(s.transpose(), s);
            assert_eq!(s.size(), u64::from(n) * u64::from(n + 1) / 2);
        }
    }

    #[test]
    fn add_examples() {
        assert_eq!(
            p(&[1, 1, 1, 1]).add(&p(&[3, 2, 1])),
            Partition::staircase(4)
        );
        assert_eq!(p(&[3]).add(&p(&[2, 1])), p(&[5, 1]));
        let q = p(&[4, 2]);
        assert_eq!(q.add(&Partition::empty()), q);
    }

    #[test]
    fn hook_examples() {
        assert_eq!(p(&[5, 1, 1, 1]).as_hook(), Some((5, 3)));
        assert_eq!(p(&[3, 2, 1]).as_hook(), None);
        assert_eq!(p(&[1]).as_hook(), Some((1, 0)));
        assert_eq!(p(&[1, 1, 1]).as_hook(), Some((1, 2)));
        assert_eq!(p(&[7]).as_hook(), Some((7, 0)));
        assert_eq!(Partition::empty().as_hook(), Some((0, 0)));
    }

    #[test]
    fn enumerate_small() {
        let three = enumerate_partitions(3).unwrap();
        assert_eq!(three, vec![p(&[3]), p(&[2, 1]), p(&[1, 1, 1])]);
        assert_eq!(enumerate_partitions(6).unwrap().len(), 11);
        assert_eq!(enumerate_partitions(0).unwrap(), vec![Partition::empty()]);
    }

    #[test]
    fn enumerate_matches_counting_recurrence() {
        for d in 0..=20 {
            let all = enumerate_partitions(d as u64).unwrap();
            assert_eq!(all.len() as u64, partition_count(d));
            let set: BTreeSet<_> = all.iter().cloned().collect();
            assert_eq!(set.len(), all.len(), "duplicate partition at d={d}");
            for q in &all {
                assert_eq!(q.size(), d as u64);
            }
            // reverse lexicographic: strictly decreasing in part-sequence order
            for w in all.windows(2) {
                assert!(w[0].parts() > w[1].parts());
            }
        }
    }

    #[test]
    fn enumerate_cap() {
        assert!(matches!(
            enumerate_partitions(31),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn construction_normalizes_and_validates() {
        assert_eq!(Partition::new(vec![3, 2, 0, 0]).unwrap(), p(&[3, 2]));
        assert!(Partition::new(vec![2, 3]).is_err());
        assert_eq!(Partition::new(vec![]).unwrap(), Partition::empty());
    }

    #[test]
    fn text_format_round_trip() {
        assert_eq!(p(&[5, 3, 1, 1]).to_string(), "5,3,1,1");
        assert_eq!(Partition::empty().to_string(), "");
        assert_eq!("5,3,1,1".parse::<Partition>().unwrap(), p(&[5, 3, 1, 1]));
        assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
        assert!("5, 3".parse::<Partition>().is_err());
        assert!("3,5".parse::<Partition>().is_err());
        assert!("+5,3".parse::<Partition>().is_err());
        assert!("5,".parse::<Partition>().is_err());
        assert!("1,0".parse::<Partition>().is_err());
    }

    #[test]
    fn serde_uses_text_format() {
        let q = p(&[4, 2, 1]);
        let json = serde_json::to_string(&q).unwrap();
        assert_eq!(json, "\"4,2,1\"");
        let back: Partition = serde_json::from_str(&json).unwrap();
        assert_eq!(back, q);
    }
}

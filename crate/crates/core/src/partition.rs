//! Young diagrams in three notations: weakly decreasing parts, part
//! multiplicities, and strictly decreasing Maya sequences with tail `-j`,
//! plus Frobenius coordinates and enumeration.

use crate::{Error, Result};
use std::fmt;

/// A partition: weakly decreasing positive parts; the empty list is the zero
/// partition.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Partition> {
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::invalid("partition", "zero part"));
        }
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(Error::invalid("partition", "parts not weakly decreasing"));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Partition {
        Partition { parts: Vec::new() }
    }

    /// Sorts and drops zeros; always valid.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Partition {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// |lambda|, the sum of the parts.
    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// The conjugate diagram (columns become rows).
    pub fn conjugate(&self) -> Partition {
        if self.parts.is_empty() {
            return Partition::empty();
        }
        let cols = self.parts[0] as usize;
        let mut parts = vec![0u32; cols];
        for &p in &self.parts {
            for c in 0..p as usize {
                parts[c] += 1;
            }
        }
        Partition { parts }
    }

    /// Part multiplicities: entry `j-1` counts parts equal to `j`.
    pub fn to_multiplicities(&self) -> Multiplicities {
        let max = self.parts.first().copied().unwrap_or(0) as usize;
        let mut m = vec![0u32; max];
        for &p in &self.parts {
            m[(p - 1) as usize] += 1;
        }
        Multiplicities { m }
    }

    /// The Maya sequence with entries `lambda_j - j`.
    pub fn to_maya(&self) -> MayaIndex {
        let head: Vec<i64> = self
            .parts
            .iter()
            .enumerate()
            .map(|(i, &p)| p as i64 - (i as i64 + 1))
            .collect();
        MayaIndex::from_decreasing_head(head).expect("partition Maya head is valid")
    }

    /// All partitions of `n` in reverse-lexicographic order: `(n)` first,
    /// `(1^n)` last.
    pub fn enumerate(n: u32) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut current: Vec<u32> = Vec::new();
        fn rec(remaining: u32, max: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if remaining == 0 {
                out.push(Partition {
                    parts: current.clone(),
                });
                return;
            }
            let top = remaining.min(max);
            for next in (1..=top).rev() {
                current.push(next);
                rec(remaining - next, next, current, out);
                current.pop();
            }
        }
        rec(n, n, &mut current, &mut out);
        out
    }

    /// All partitions of weight at most `n`, by ascending weight.
    pub fn enumerate_up_to(n: u32) -> Vec<Partition> {
        (0..=n).flat_map(Partition::enumerate).collect()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Multiplicity vector: `m[j-1]` parts equal to `j`, trailing zeros trimmed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Multiplicities {
    m: Vec<u32>,
}

impl Multiplicities {
    pub fn new(mut m: Vec<u32>) -> Multiplicities {
        while m.last() == Some(&0) {
            m.pop();
        }
        Multiplicities { m }
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.m
    }

    /// Multiplicity of the part `j` (1-based).
    pub fn of(&self, j: usize) -> u32 {
        assert!(j >= 1);
        self.m.get(j - 1).copied().unwrap_or(0)
    }

    pub fn max_part(&self) -> usize {
        self.m.len()
    }

    pub fn weight(&self) -> u32 {
        self.m
            .iter()
            .enumerate()
            .map(|(i, &c)| (i as u32 + 1) * c)
            .sum()
    }

    pub fn to_partition(&self) -> Partition {
        let mut parts = Vec::new();
        for (i, &count) in self.m.iter().enumerate().rev() {
            for _ in 0..count {
                parts.push(i as u32 + 1);
            }
        }
        Partition { parts }
    }
}

/// A charge-zero Maya index: strictly decreasing integers `k_1 > k_2 > ...`
/// with `k_j = -j` past the stored head. The head is minimal: trailing
/// entries already equal to `-j` are trimmed, so equality is structural.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct MayaIndex {
    head: Vec<i64>,
}

impl MayaIndex {
    pub fn vacuum() -> MayaIndex {
        MayaIndex { head: Vec::new() }
    }

    /// Builds from an already strictly decreasing head; trims the implied
    /// tail. Errors when the head is not strictly decreasing or collides with
    /// the tail.
    pub fn from_decreasing_head(mut head: Vec<i64>) -> Result<MayaIndex> {
        if !head.windows(2).all(|w| w[0] > w[1]) {
            return Err(Error::invalid("maya", "head not strictly decreasing"));
        }
        if let Some(&last) = head.last() {
            // Entries below the tail start would collide with implied -j.
            let len = head.len() as i64;
            if last < -len {
                return Err(Error::invalid(
                    "maya",
                    "head collides with the implied tail",
                ));
            }
        }
        while let Some(&last) = head.last() {
            if last == -(head.len() as i64) {
                head.pop();
            } else {
                break;
            }
        }
        Ok(MayaIndex { head })
    }

    pub fn head(&self) -> &[i64] {
        &self.head
    }

    /// `k_j` (1-based), including the implied tail.
    pub fn entry(&self, j: usize) -> i64 {
        assert!(j >= 1);
        self.head
            .get(j - 1)
            .copied()
            .unwrap_or_else(|| -(j as i64))
    }

    /// Sum of `k_j + j`; equals the weight of the associated partition.
    pub fn energy(&self) -> u32 {
        let e: i64 = self
            .head
            .iter()
            .enumerate()
            .map(|(i, &k)| k + i as i64 + 1)
            .sum();
        u32::try_from(e).expect("charge-zero Maya index has nonnegative energy")
    }

    /// Number of nonnegative entries (equals the number of absent negatives).
    pub fn charge_witness(&self) -> usize {
        self.head.iter().filter(|&&k| k >= 0).count()
    }

    pub fn to_partition(&self) -> Partition {
        let parts: Vec<u32> = self
            .head
            .iter()
            .enumerate()
            .map(|(i, &k)| {
                u32::try_from(k + i as i64 + 1).expect("maya entry gives nonnegative part")
            })
            .collect();
        Partition::from_unsorted(parts)
    }

    /// True when `value` occurs in the full sequence (head plus tail).
    pub fn contains(&self, value: i64) -> bool {
        if let Some(pos) = self.head.iter().position(|&k| k <= value) {
            self.head[pos] == value
        } else {
            // Beyond the head: tail values are -j for j > head.len().
            value < 0 && (-value) as usize > self.head.len()
        }
    }

    /// Frobenius coordinates: `u` the nonnegative entries, `v` the negated
    /// absent negatives. Both strictly decreasing of equal length.
    pub fn to_frobenius(&self) -> FrobeniusCoords {
        let u: Vec<i64> = self.head.iter().copied().filter(|&k| k >= 0).collect();
        let mut v = Vec::new();
        let bound = self.head.len() as i64 + 1;
        for l in 1..bound + 1 {
            if !self.contains(-l) {
                v.push(l);
            }
        }
        v.sort_unstable_by(|a, b| b.cmp(a));
        debug_assert_eq!(u.len(), v.len(), "charge-zero index has balanced coordinates");
        FrobeniusCoords { u, v }
    }
}

impl fmt::Display for MayaIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, k) in self.head.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{k}")?;
        }
        write!(f, ";...]")
    }
}

/// Frobenius coordinates of a charge-zero Maya index: `u_1 > ... > u_n >= 0`
/// and `v_1 > ... > v_n >= 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrobeniusCoords {
    u: Vec<i64>,
    v: Vec<i64>,
}

impl FrobeniusCoords {
    pub fn new(u: Vec<i64>, v: Vec<i64>) -> Result<FrobeniusCoords> {
        if u.len() != v.len() {
            return Err(Error::invalid("frobenius", "unequal lengths"));
        }
        if !u.windows(2).all(|w| w[0] > w[1]) || u.last().map(|&x| x < 0).unwrap_or(false) {
            return Err(Error::invalid("frobenius", "u not strictly decreasing >= 0"));
        }
        if !v.windows(2).all(|w| w[0] > w[1]) || v.last().map(|&x| x < 1).unwrap_or(false) {
            return Err(Error::invalid("frobenius", "v not strictly decreasing >= 1"));
        }
        Ok(FrobeniusCoords { u, v })
    }

    pub fn arms(&self) -> &[i64] {
        &self.u
    }

    pub fn legs(&self) -> &[i64] {
        &self.v
    }

    pub fn rank(&self) -> usize {
        self.u.len()
    }

    /// Reconstructs the unique charge-zero Maya index: the nonnegative slots
    /// `u_i` together with all negatives except `-v_i`.
    pub fn to_maya(&self) -> MayaIndex {
        let absent: std::collections::HashSet<i64> = self.v.iter().map(|&v| -v).collect();
        let mut head: Vec<i64> = self.u.clone();
        let depth = self.v.first().copied().unwrap_or(0);
        for l in 1..=depth {
            if !absent.contains(&-l) {
                head.push(-l);
            }
        }
        MayaIndex::from_decreasing_head(head).expect("frobenius data reconstructs a valid index")
    }
}

/// p(n) by Euler's pentagonal-number recurrence; enumeration oracle in tests.
pub fn partition_count(n: u32) -> u64 {
    let n = n as usize;
    let mut p = vec![0u64; n + 1];
    p[0] = 1;
    for m in 1..=n {
        let mut total: i128 = 0;
        let mut k: i64 = 1;
        loop {
            let g1 = k * (3 * k - 1) / 2;
            let g2 = k * (3 * k + 1) / 2;
            if g1 as usize > m && g2 as usize > m {
                break;
            }
            let sign = if k % 2 == 0 { -1i128 } else { 1i128 };
            if g1 as usize <= m {
                total += sign * p[m - g1 as usize] as i128;
            }
            if g2 as usize <= m {
                total += sign * p[m - g2 as usize] as i128;
            }
            k += 1;
        }
        p[m] = u64::try_from(total).expect("partition counts are nonnegative");
    }
    p[n]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn multiplicities_roundtrip() {
        assert_eq!(pt(&[2, 1]).to_multiplicities().as_slice(), &[1, 1]);
        assert_eq!(pt(&[3, 3, 1]).to_multiplicities().as_slice(), &[1, 0, 2]);
        assert_eq!(Partition::empty().to_multiplicities().as_slice(), &[] as &[u32]);
        for n in 0..=12u32 {
            for lam in Partition::enumerate(n) {
                assert_eq!(lam.to_multiplicities().to_partition(), lam);
            }
        }
    }

    #[test]
    fn maya_examples_and_energy() {
        assert_eq!(Partition::empty().to_maya(), MayaIndex::vacuum());
        assert_eq!(pt(&[1]).to_maya().head(), &[0]);
        assert_eq!(pt(&[3, 1]).to_maya().head(), &[2, -1]);
        for n in 0..=12u32 {
            for lam in Partition::enumerate(n) {
                let maya = lam.to_maya();
                assert_eq!(maya.energy(), lam.weight());
                assert_eq!(maya.to_partition(), lam);
                // charge-zero invariant
                let fr = maya.to_frobenius();
                assert_eq!(fr.arms().len(), fr.legs().len());
            }
        }
    }

    #[test]
    fn frobenius_examples() {
        let fr = MayaIndex::vacuum().to_frobenius();
        assert!(fr.arms().is_empty() && fr.legs().is_empty());

        let m1 = pt(&[1]).to_maya();
        let fr = m1.to_frobenius();
        assert_eq!(fr.arms(), &[0]);
        assert_eq!(fr.legs(), &[1]);

        let m31 = pt(&[3, 1]).to_maya();
        let fr = m31.to_frobenius();
        assert_eq!(fr.arms(), &[2]);
        assert_eq!(fr.legs(), &[2]);

        for n in 0..=12u32 {
            for lam in Partition::enumerate(n) {
                let maya = lam.to_maya();
                assert_eq!(maya.to_frobenius().to_maya(), maya);
            }
        }
    }

    #[test]
    fn enumeration_counts_and_order() {
        assert_eq!(Partition::enumerate(0), vec![Partition::empty()]);
        assert_eq!(Partition::enumerate(4).len(), 5);
        assert_eq!(Partition::enumerate(8).len(), 22);
        for n in 0..=14u32 {
            assert_eq!(Partition::enumerate(n).len() as u64, partition_count(n));
        }
        // reverse-lexicographic: (n) first, (1^n) last
        let parts = Partition::enumerate(4);
        assert_eq!(parts[0], pt(&[4]));
        assert_eq!(parts[4], pt(&[1, 1, 1, 1]));
    }

    #[test]
    fn maya_rejects_bad_heads() {
        assert!(MayaIndex::from_decreasing_head(vec![0, 0]).is_err());
        assert!(MayaIndex::from_decreasing_head(vec![-5]).is_err());
        // (2, -1) is fine and trims nothing
        assert!(MayaIndex::from_decreasing_head(vec![2, -1]).is_ok());
        // trailing tail entries are trimmed
        let m = MayaIndex::from_decreasing_head(vec![0, -2, -3]).unwrap();
        assert_eq!(m.head(), &[0]);
    }

    #[test]
    fn conjugate_involution() {
        assert_eq!(pt(&[3, 1]).conjugate(), pt(&[2, 1, 1]));
        for lam in Partition::enumerate(9) {
            assert_eq!(lam.conjugate().conjugate(), lam);
        }
    }
}

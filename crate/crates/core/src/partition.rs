//! Partition value types and the exhaustive enumerators for `E(n)` and the
//! odd overpartitions of `n`.
//!
//! A [`TwoColorPartition`] keeps its blue parts split by parity: the even blue
//! parts live in `evens`, the odd blue parts in `blues`. Green parts are
//! always odd. Within each list parts are strictly decreasing, so a value may
//! appear at most once per color but may appear once as green and once as
//! blue.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Type used for a single part.
pub type Part = u32;

/// Largest weight accepted from external input.
pub const MAX_WEIGHT: u64 = 1_000_000;

/// An element of `E(n)`: distinct two-color parts, even parts only blue.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawTwoColor")]
pub struct TwoColorPartition {
    evens: Vec<Part>,
    greens: Vec<Part>,
    blues: Vec<Part>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawTwoColor {
    #[serde(default)]
    evens: Vec<Part>,
    #[serde(default)]
    greens: Vec<Part>,
    #[serde(default)]
    blues: Vec<Part>,
}

impl TryFrom<RawTwoColor> for TwoColorPartition {
    type Error = Error;

    fn try_from(raw: RawTwoColor) -> Result<Self> {
        Self::new(raw.evens, raw.greens, raw.blues)
    }
}

impl TwoColorPartition {
    pub fn new(evens: Vec<Part>, greens: Vec<Part>, blues: Vec<Part>) -> Result<Self> {
        check_strictly_decreasing("evens", &evens)?;
        check_strictly_decreasing("greens", &greens)?;
        check_strictly_decreasing("blues", &blues)?;
        check_parity("evens", &evens, 0)?;
        check_parity("greens", &greens, 1)?;
        check_parity("blues", &blues, 1)?;
        let p = TwoColorPartition { evens, greens, blues };
        checked_weight(p.all_parts())?;
        Ok(p)
    }

    /// Skips validation; callers guarantee the invariants.
    pub(crate) fn from_parts_unchecked(evens: Vec<Part>, greens: Vec<Part>, blues: Vec<Part>) -> Self {
        TwoColorPartition { evens, greens, blues }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn evens(&self) -> &[Part] {
        &self.evens
    }

    pub fn greens(&self) -> &[Part] {
        &self.greens
    }

    pub fn blues(&self) -> &[Part] {
        &self.blues
    }

    pub fn into_parts(self) -> (Vec<Part>, Vec<Part>, Vec<Part>) {
        (self.evens, self.greens, self.blues)
    }

    pub fn num_parts(&self) -> usize {
        self.evens.len() + self.greens.len() + self.blues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.num_parts() == 0
    }

    pub fn weight(&self) -> u64 {
        self.all_parts().map(u64::from).sum()
    }

    /// Largest even part, with `max ∅ = 0`.
    pub fn max_even(&self) -> Part {
        self.evens.first().copied().unwrap_or(0)
    }

    fn all_parts(&self) -> impl Iterator<Item = Part> + '_ {
        self.evens.iter().chain(&self.greens).chain(&self.blues).copied()
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::InvalidInput(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("partition serializes")
    }
}

impl fmt::Display for TwoColorPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "evens={:?} greens={:?} blues={:?}", self.evens, self.greens, self.blues)
    }
}

/// An overpartition of `n` into odd parts.
///
/// `overlined` holds the overlined parts (distinct), `plain` the remaining
/// parts as a weakly decreasing multiset.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawOverpartition")]
pub struct OddOverpartition {
    overlined: Vec<Part>,
    plain: Vec<Part>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawOverpartition {
    #[serde(default)]
    overlined: Vec<Part>,
    #[serde(default)]
    plain: Vec<Part>,
}

impl TryFrom<RawOverpartition> for OddOverpartition {
    type Error = Error;

    fn try_from(raw: RawOverpartition) -> Result<Self> {
        Self::new(raw.overlined, raw.plain)
    }
}

impl OddOverpartition {
    pub fn new(overlined: Vec<Part>, plain: Vec<Part>) -> Result<Self> {
        check_strictly_decreasing("overlined", &overlined)?;
        if let Some(w) = plain.windows(2).find(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "plain must be weakly decreasing, found {} before {}",
                w[0], w[1]
            )));
        }
        check_parity("overlined", &overlined, 1)?;
        check_parity("plain", &plain, 1)?;
        let op = OddOverpartition { overlined, plain };
        checked_weight(op.overlined.iter().chain(&op.plain).copied())?;
        Ok(op)
    }

    pub(crate) fn from_parts_unchecked(overlined: Vec<Part>, plain: Vec<Part>) -> Self {
        OddOverpartition { overlined, plain }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn overlined(&self) -> &[Part] {
        &self.overlined
    }

    pub fn plain(&self) -> &[Part] {
        &self.plain
    }

    pub fn weight(&self) -> u64 {
        self.overlined.iter().chain(&self.plain).map(|&p| u64::from(p)).sum()
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::InvalidInput(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("overpartition serializes")
    }
}

impl fmt::Display for OddOverpartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "overlined={:?} plain={:?}", self.overlined, self.plain)
    }
}

fn check_strictly_decreasing(name: &str, parts: &[Part]) -> Result<()> {
    if let Some(&p) = parts.iter().find(|&&p| p == 0) {
        return Err(Error::InvalidPartition(format!("{name} must hold positive parts, found {p}")));
    }
    if let Some(w) = parts.windows(2).find(|w| w[0] <= w[1]) {
        return Err(Error::InvalidPartition(format!(
            "{name} must be strictly decreasing, found {} before {}",
            w[0], w[1]
        )));
    }
    Ok(())
}

fn check_parity(name: &str, parts: &[Part], residue: Part) -> Result<()> {
    let want = if residue == 0 { "even" } else { "odd" };
    match parts.iter().find(|&&p| p % 2 != residue) {
        Some(p) => Err(Error::InvalidPartition(format!("{name} must all be {want}, found {p}"))),
        None => Ok(()),
    }
}

fn checked_weight(parts: impl Iterator<Item = Part>) -> Result<u64> {
    let mut total: u64 = 0;
    for p in parts {
        total += u64::from(p);
        if total > MAX_WEIGHT {
            return Err(Error::InvalidPartition(format!("weight exceeds the limit of {MAX_WEIGHT}")));
        }
    }
    Ok(total)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of(count: usize) -> Self {
        if count.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

/// Which of `E0/E1` and `E2/E3` a partition is counted by.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ParityClass {
    pub evens_count_parity: Parity,
    pub total_parts_parity: Parity,
}

pub fn classify(p: &TwoColorPartition) -> ParityClass {
    ParityClass { evens_count_parity: Parity::of(p.evens().len()), total_parts_parity: Parity::of(p.num_parts()) }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SquareWitness {
    pub is_square: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<u64>,
}

pub fn square_witness(n: u64) -> SquareWitness {
    let k = n.isqrt();
    if k * k == n {
        SquareWitness { is_square: true, k: Some(k) }
    } else {
        SquareWitness { is_square: false, k: None }
    }
}

/// `table[w]` lists every strictly decreasing sequence of parts congruent to
/// `residue` mod 2 with sum `w`, for `w <= n`.
fn distinct_table(n: usize, residue: usize) -> Vec<Vec<Vec<Part>>> {
    fn descend(remaining: usize, max_part: usize, residue: usize, prefix: &mut Vec<Part>, out: &mut Vec<Vec<Part>>) {
        if remaining == 0 {
            out.push(prefix.clone());
            return;
        }
        let mut part = max_part.min(remaining);
        if part % 2 != residue {
            part = part.saturating_sub(1);
        }
        while part >= 1 {
            let reachable = max_distinct_sum(part, residue);
            if reachable < remaining {
                break;
            }
            prefix.push(part as Part);
            descend(remaining - part, part.saturating_sub(2), residue, prefix, out);
            prefix.pop();
            if part < 2 {
                break;
            }
            part -= 2;
        }
    }

    (0..=n)
        .map(|w| {
            let mut out = Vec::new();
            descend(w, n, residue, &mut Vec::new(), &mut out);
            out
        })
        .collect()
}

/// Sum of `top, top-2, top-4, ...` down to the smallest positive term.
fn max_distinct_sum(top: usize, residue: usize) -> usize {
    debug_assert_eq!(top % 2, residue);
    let terms = if residue == 0 { top / 2 } else { top.div_ceil(2) };
    // arithmetic series with first term `top`, `terms` terms, step 2
    terms * (top + top + 2 - 2 * terms) / 2
}

/// Weakly decreasing sequences of odd parts with sum `remaining`.
fn odd_multisets(remaining: usize, max_part: usize, prefix: &mut Vec<Part>, out: &mut Vec<Vec<Part>>) {
    if remaining == 0 {
        out.push(prefix.clone());
        return;
    }
    let mut part = max_part.min(remaining);
    if part.is_multiple_of(2) {
        part -= 1;
    }
    loop {
        prefix.push(part as Part);
        odd_multisets(remaining - part, part, prefix, out);
        prefix.pop();
        if part <= 1 {
            break;
        }
        part -= 2;
    }
}

/// Every element of `E(n)` exactly once, in descending lexicographic order of
/// `(evens, greens, blues)`.
pub fn enumerate_two_color(n: usize) -> Vec<TwoColorPartition> {
    let evens = distinct_table(n, 0);
    let odds = distinct_table(n, 1);
    let mut out = Vec::new();
    for e in (0..=n).step_by(2) {
        for g in 0..=n - e {
            let b = n - e - g;
            for ev in &evens[e] {
                for gr in &odds[g] {
                    for bl in &odds[b] {
                        out.push(TwoColorPartition::from_parts_unchecked(ev.clone(), gr.clone(), bl.clone()));
                    }
                }
            }
        }
    }
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

/// Every odd overpartition of `n` exactly once, in descending lexicographic
/// order of `(overlined, plain)`.
pub fn enumerate_odd_overpartitions(n: usize) -> Vec<OddOverpartition> {
    let odds = distinct_table(n, 1);
    let mut out = Vec::new();
    for (o, overlined) in odds.iter().enumerate() {
        let mut plains = Vec::new();
        odd_multisets(n - o, n, &mut Vec::new(), &mut plains);
        for ov in overlined {
            for pl in &plains {
                out.push(OddOverpartition::from_parts_unchecked(ov.clone(), pl.clone()));
            }
        }
    }
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tc(e: &[Part], g: &[Part], b: &[Part]) -> TwoColorPartition {
        TwoColorPartition::new(e.to_vec(), g.to_vec(), b.to_vec()).unwrap()
    }

    #[test]
    fn weights() {
        assert_eq!(TwoColorPartition::empty().weight(), 0);
        assert_eq!(tc(&[12, 6], &[13, 9, 5, 3], &[5, 1]).weight(), 54);
        assert_eq!(OddOverpartition::new(vec![3], vec![3, 1, 1]).unwrap().weight(), 8);
    }

    #[test]
    fn rejects_invalid_parts() {
        let err = TwoColorPartition::new(vec![3], vec![], vec![]).unwrap_err();
        assert!(err.to_string().contains("evens must all be even"), "{err}");
        let err = TwoColorPartition::new(vec![], vec![3, 3], vec![]).unwrap_err();
        assert!(err.to_string().contains("strictly decreasing"), "{err}");
        let err = TwoColorPartition::new(vec![], vec![1, 3], vec![]).unwrap_err();
        assert!(err.to_string().contains("strictly decreasing"), "{err}");
        let err = TwoColorPartition::new(vec![], vec![], vec![0]).unwrap_err();
        assert!(err.to_string().contains("positive"), "{err}");
        let err = OddOverpartition::new(vec![], vec![1, 3]).unwrap_err();
        assert!(err.to_string().contains("weakly decreasing"), "{err}");
        let err = OddOverpartition::new(vec![2], vec![]).unwrap_err();
        assert!(err.to_string().contains("odd"), "{err}");
        let err = TwoColorPartition::new(vec![], vec![999_999, 1], vec![3]).unwrap_err();
        assert!(err.to_string().contains("limit"), "{err}");
    }

    #[test]
    fn same_value_in_both_colors_is_allowed() {
        let p = tc(&[], &[3, 1], &[3, 1]);
        assert_eq!(p.weight(), 8);
    }

    #[test]
    fn small_enumerations() {
        assert_eq!(enumerate_two_color(0), vec![TwoColorPartition::empty()]);
        assert_eq!(enumerate_two_color(1), vec![tc(&[], &[1], &[]), tc(&[], &[], &[1])]);
        assert_eq!(
            enumerate_two_color(4),
            vec![
                tc(&[4], &[], &[]),
                tc(&[2], &[1], &[1]),
                tc(&[], &[3, 1], &[]),
                tc(&[], &[3], &[1]),
                tc(&[], &[1], &[3]),
                tc(&[], &[], &[3, 1]),
            ]
        );
        assert_eq!(enumerate_odd_overpartitions(0).len(), 1);
        let three: Vec<_> = enumerate_odd_overpartitions(3);
        assert_eq!(
            three,
            vec![
                OddOverpartition::new(vec![3], vec![]).unwrap(),
                OddOverpartition::new(vec![1], vec![1, 1]).unwrap(),
                OddOverpartition::new(vec![], vec![3]).unwrap(),
                OddOverpartition::new(vec![], vec![1, 1, 1]).unwrap(),
            ]
        );
        assert_eq!(enumerate_odd_overpartitions(5).len(), 8);
    }

    #[test]
    fn classification() {
        let c = classify(&tc(&[12, 6], &[13, 9, 5, 3], &[5, 1]));
        assert_eq!((c.evens_count_parity, c.total_parts_parity), (Parity::Even, Parity::Even));
        let c = classify(&TwoColorPartition::empty());
        assert_eq!((c.evens_count_parity, c.total_parts_parity), (Parity::Even, Parity::Even));
        let c = classify(&tc(&[4], &[], &[1]));
        assert_eq!((c.evens_count_parity, c.total_parts_parity), (Parity::Odd, Parity::Even));
    }

    #[test]
    fn squares() {
        assert_eq!(square_witness(0), SquareWitness { is_square: true, k: Some(0) });
        assert_eq!(square_witness(9), SquareWitness { is_square: true, k: Some(3) });
        assert_eq!(square_witness(12), SquareWitness { is_square: false, k: None });
        assert!(square_witness(1 << 40).is_square);
        assert!(!square_witness((1 << 40) - 1).is_square);
    }

    #[test]
    fn json_shapes() {
        let p = tc(&[2], &[3], &[3]);
        assert_eq!(p.to_json(), r#"{"evens":[2],"greens":[3],"blues":[3]}"#);
        assert_eq!(TwoColorPartition::from_json(&p.to_json()).unwrap(), p);
        assert_eq!(TwoColorPartition::from_json("{}").unwrap(), TwoColorPartition::empty());
        let err = TwoColorPartition::from_json(r#"{"evens":[6,8]}"#).unwrap_err();
        assert!(matches!(err, Error::InvalidInput(ref m) if m.contains("strictly decreasing")), "{err}");
        let err = TwoColorPartition::from_json(r#"{"reds":[1]}"#).unwrap_err();
        assert!(matches!(err, Error::InvalidInput(_)));
        let op = OddOverpartition::new(vec![3], vec![3, 1, 1]).unwrap();
        assert_eq!(op.to_json(), r#"{"overlined":[3],"plain":[3,1,1]}"#);
        assert_eq!(OddOverpartition::from_json(&op.to_json()).unwrap(), op);
    }
}

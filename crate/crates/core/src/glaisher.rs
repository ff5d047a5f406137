//! Glaisher's binary-expansion bijection between partitions into odd parts
//! and partitions into distinct parts, and the resulting bijection between
//! odd overpartitions and `E(n)`.
//!
//! Overlined parts become green parts unchanged. The plain odd parts are sent
//! through [`glaisher_split`], and the distinct parts it produces are stored
//! as blue parts, the even ones in `evens` and the odd ones in `blues`.

use crate::partition::{OddOverpartition, Part, TwoColorPartition};

/// Odd multiset to distinct parts: a part `m` of multiplicity `mu` yields
/// `m * 2^e` for every bit `e` set in `mu`.
pub fn glaisher_split(odd_multiset: &[Part]) -> Vec<Part> {
    let mut out = Vec::new();
    let mut i = 0;
    while i < odd_multiset.len() {
        let m = odd_multiset[i];
        debug_assert!(m % 2 == 1, "glaisher_split expects odd parts, got {m}");
        let run = odd_multiset[i..].iter().take_while(|&&x| x == m).count();
        let mut bits = run;
        let mut scale: Part = 1;
        while bits > 0 {
            if bits & 1 == 1 {
                out.push(m * scale);
            }
            bits >>= 1;
            scale *= 2;
        }
        i += run;
    }
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

/// Inverse of [`glaisher_split`]: `2^e * m` (with `m` odd) becomes `2^e`
/// copies of `m`.
pub fn glaisher_merge(distinct: &[Part]) -> Vec<Part> {
    let mut out = Vec::new();
    for &d in distinct {
        let e = d.trailing_zeros();
        let odd = d >> e;
        out.extend(std::iter::repeat_n(odd, 1usize << e));
    }
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

pub fn overpartition_to_twocolor(op: &OddOverpartition) -> TwoColorPartition {
    let (evens, blues): (Vec<Part>, Vec<Part>) = glaisher_split(op.plain()).into_iter().partition(|&p| p % 2 == 0);
    TwoColorPartition::from_parts_unchecked(evens, op.overlined().to_vec(), blues)
}

pub fn twocolor_to_overpartition(p: &TwoColorPartition) -> OddOverpartition {
    let mut blue: Vec<Part> = p.evens().iter().chain(p.blues()).copied().collect();
    blue.sort_unstable_by(|a, b| b.cmp(a));
    OddOverpartition::from_parts_unchecked(p.greens().to_vec(), glaisher_merge(&blue))
}

//! Brute-force oracles that share no code with the library enumerators.

use std::collections::BTreeSet;

use twocolor_core::glaisher::{glaisher_merge, glaisher_split};
use twocolor_core::partition::{enumerate_odd_overpartitions, enumerate_two_color, Part};
use twocolor_core::{OddOverpartition, TwoColorPartition};

/// Every subset of the labelled parts `{2, 4, ..}_blue ∪ {1, 3, ..}_green ∪
/// {1, 3, ..}_blue` whose sum is `n`.
fn subset_oracle(n: usize) -> BTreeSet<TwoColorPartition> {
    let mut labelled: Vec<(u8, Part)> = Vec::new();
    for v in 1..=n as Part {
        if v % 2 == 0 {
            labelled.push((0, v));
        } else {
            labelled.push((1, v));
            labelled.push((2, v));
        }
    }
    let mut out = BTreeSet::new();
    for mask in 0u64..(1 << labelled.len()) {
        let chosen: Vec<(u8, Part)> =
            labelled.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &x)| x).collect();
        if chosen.iter().map(|&(_, v)| v as usize).sum::<usize>() != n {
            continue;
        }
        let color = |c: u8| {
            let mut v: Vec<Part> = chosen.iter().filter(|x| x.0 == c).map(|x| x.1).collect();
            v.sort_unstable_by(|a, b| b.cmp(a));
            v
        };
        out.insert(TwoColorPartition::new(color(0), color(1), color(2)).unwrap());
    }
    out
}

/// Multiplicity vectors over the odd values, each value optionally overlined
/// when it occurs.
fn overpartition_oracle(n: usize) -> BTreeSet<OddOverpartition> {
    let odds: Vec<usize> = (1..=n).step_by(2).collect();
    let mut out = BTreeSet::new();
    let mut mult = vec![0usize; odds.len()];
    loop {
        let total: usize = odds.iter().zip(&mult).map(|(v, m)| v * m).sum();
        if total == n {
            let present: Vec<usize> = (0..odds.len()).filter(|&i| mult[i] > 0).collect();
            for bar in 0u32..(1 << present.len()) {
                let mut overlined = Vec::new();
                let mut plain = Vec::new();
                for (j, &i) in present.iter().enumerate() {
                    let mut copies = mult[i];
                    if bar >> j & 1 == 1 {
                        overlined.push(odds[i] as Part);
                        copies -= 1;
                    }
                    plain.extend(std::iter::repeat_n(odds[i] as Part, copies));
                }
                overlined.reverse();
                plain.sort_unstable_by(|a, b| b.cmp(a));
                out.insert(OddOverpartition::new(overlined, plain).unwrap());
            }
        }
        // odometer over multiplicities bounded by n / value
        let mut i = 0;
        loop {
            if i == odds.len() {
                return out;
            }
            mult[i] += 1;
            if mult[i] * odds[i] <= n {
                break;
            }
            mult[i] = 0;
            i += 1;
        }
    }
}

#[test]
fn two_color_enumeration_matches_subset_oracle() {
    for n in 0..=14 {
        let oracle = subset_oracle(n);
        let listed = enumerate_two_color(n);
        let as_set: BTreeSet<_> = listed.iter().cloned().collect();
        assert_eq!(as_set.len(), listed.len(), "duplicates at n={n}");
        assert_eq!(as_set, oracle, "n={n}");
        assert!(listed.windows(2).all(|w| w[0] > w[1]), "not in descending order at n={n}");
    }
}

#[test]
fn frozen_two_color_counts() {
    // subset oracle, n = 0..=10
    let counts: Vec<usize> = (0..=10).map(|n| enumerate_two_color(n).len()).collect();
    assert_eq!(counts, vec![1, 2, 2, 4, 6, 8, 12, 16, 22, 30, 40]);
}

#[test]
fn overpartition_enumeration_matches_oracle() {
    for n in 0..=16 {
        let oracle = overpartition_oracle(n);
        let listed = enumerate_odd_overpartitions(n);
        let as_set: BTreeSet<_> = listed.iter().cloned().collect();
        assert_eq!(as_set.len(), listed.len(), "duplicates at n={n}");
        assert_eq!(as_set, oracle, "n={n}");
        assert!(listed.windows(2).all(|w| w[0] > w[1]));
        assert!(listed.iter().all(|op| op.weight() == n as u64));
    }
}

/// Partitions of `n` into odd parts against partitions of `n` into distinct
/// parts: the split is a bijection between the two sets.
#[test]
fn glaisher_split_is_a_bijection_on_small_weights() {
    fn partitions(n: usize, max: usize) -> Vec<Vec<Part>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for first in (1..=max.min(n)).rev() {
            for mut rest in partitions(n - first, first) {
                rest.insert(0, first as Part);
                out.push(rest);
            }
        }
        out
    }
    for n in 0..=20 {
        let all = partitions(n, n);
        let odd: Vec<_> = all.iter().filter(|p| p.iter().all(|x| x % 2 == 1)).cloned().collect();
        let distinct: BTreeSet<_> = all.iter().filter(|p| p.windows(2).all(|w| w[0] > w[1])).cloned().collect();
        let images: BTreeSet<_> = odd.iter().map(|p| glaisher_split(p)).collect();
        assert_eq!(images.len(), odd.len(), "split not injective at n={n}");
        assert_eq!(images, distinct, "split not onto at n={n}");
        for p in &odd {
            assert_eq!(&glaisher_merge(&glaisher_split(p)), p);
        }
    }
}

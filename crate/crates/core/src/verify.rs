//! Exhaustive checks of the counting identities, the involution and the
//! overpartition bijection, plus the power-series cross-check.
//!
//! All audits are deterministic: per-`n` work may run in parallel, but reports
//! come back in ascending `n` and failures in enumeration order.

use std::fmt::Write as _;

use serde::Serialize;

use crate::error::Result;
use crate::exec::Execution;
use crate::glaisher::{overpartition_to_twocolor, twocolor_to_overpartition};
use crate::involution::{is_exceptional, transform};
use crate::partition::{
    classify, enumerate_odd_overpartitions, enumerate_two_color, square_witness, Parity, Part, SquareWitness,
    TwoColorPartition,
};
use crate::series::{series_e, series_podd};

/// Default truncation order for the series oracle.
pub const DEFAULT_SERIES_DEPTH: usize = 200;
/// Default largest weight for full-enumeration audits.
pub const DEFAULT_ENUMERATION_LIMIT: usize = 40;

/// Outcome per identity: (a) `E = p̄_o`, (b)/(c) the `E0`/`E1` formulas,
/// (d)/(e) the `E2`/`E3` formulas.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TheoremChecks {
    pub a: bool,
    pub b: bool,
    pub c: bool,
    pub d: bool,
    pub e: bool,
}

impl TheoremChecks {
    pub fn all(&self) -> bool {
        self.a && self.b && self.c && self.d && self.e
    }

    pub fn failed_parts(&self) -> Vec<char> {
        [('a', self.a), ('b', self.b), ('c', self.c), ('d', self.d), ('e', self.e)]
            .into_iter()
            .filter(|(_, ok)| !ok)
            .map(|(part, _)| part)
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub n: usize,
    #[serde(rename = "E")]
    pub e: u64,
    #[serde(rename = "E0")]
    pub e0: u64,
    #[serde(rename = "E1")]
    pub e1: u64,
    #[serde(rename = "E2")]
    pub e2: u64,
    #[serde(rename = "E3")]
    pub e3: u64,
    pub p_o_bar: u64,
    pub square: SquareWitness,
    /// `None` at `n = 0`, where the halving formulas do not apply.
    pub checks: Option<TheoremChecks>,
    pub pass: Option<bool>,
}

/// Counts by enumeration and checks the five identities at weight `n`.
pub fn identity_report(n: usize) -> IdentityReport {
    let members = enumerate_two_color(n);
    let (mut e0, mut e2) = (0u64, 0u64);
    for p in &members {
        let class = classify(p);
        e0 += u64::from(class.evens_count_parity == Parity::Even);
        e2 += u64::from(class.total_parts_parity == Parity::Even);
    }
    let e = members.len() as u64;
    let p_o_bar = enumerate_odd_overpartitions(n).len() as u64;
    let square = square_witness(n as u64);

    let checks = (n >= 1).then(|| {
        // twice each formula, to stay in integers
        let (e, e0, e1, e2, e3, p) = (e as i64, e0 as i64, (e - e0) as i64, e2 as i64, (e - e2) as i64, p_o_bar as i64);
        let sq = i64::from(square.is_square);
        let sign = if n.is_multiple_of(2) { 1 } else { -1 };
        TheoremChecks {
            a: e == p,
            b: 2 * e0 == p + 2 * sq,
            c: 2 * e1 == p - 2 * sq,
            d: 2 * e2 == p + 2 * sign * sq,
            e: 2 * e3 == p - 2 * sign * sq,
        }
    });
    IdentityReport { n, e, e0, e1: e - e0, e2, e3: e - e2, p_o_bar, square, checks, pass: checks.map(|c| c.all()) }
}

/// Reports for `1 ..= n_max`.
pub fn verify_theorem(n_max: usize, exec: Execution) -> Vec<IdentityReport> {
    if n_max == 0 {
        return Vec::new();
    }
    exec.map_range(1..=n_max, identity_report)
}

pub fn reports_pass(reports: &[IdentityReport]) -> bool {
    reports.iter().all(|r| r.pass != Some(false))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub partition: String,
    pub reason: String,
}

impl Failure {
    fn new(partition: impl ToString, reason: impl Into<String>) -> Self {
        Failure { partition: partition.to_string(), reason: reason.into() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvolutionAudit {
    pub n: usize,
    pub members: usize,
    pub orbits: usize,
    pub exceptional: Vec<TwoColorPartition>,
    pub census_ok: bool,
    pub failures: Vec<Failure>,
}

impl InvolutionAudit {
    pub fn passed(&self) -> bool {
        self.census_ok && self.failures.is_empty()
    }
}

fn staircase(k: u64) -> Vec<Part> {
    (1..=k).rev().map(|i| (2 * i - 1) as Part).collect()
}

/// The inputs the transformation must skip at weight `n`, in canonical order.
pub fn expected_exceptional(n: usize) -> Vec<TwoColorPartition> {
    match square_witness(n as u64).k {
        Some(0) => vec![TwoColorPartition::empty()],
        Some(k) => vec![
            TwoColorPartition::from_parts_unchecked(vec![], staircase(k), vec![]),
            TwoColorPartition::from_parts_unchecked(vec![], vec![], staircase(k)),
        ],
        None => vec![],
    }
}

fn audit_member(p: &TwoColorPartition, n: usize) -> Option<Failure> {
    let out = match transform(p) {
        Ok(out) => out,
        Err(err) => return Some(Failure::new(p, format!("transform failed: {err}"))),
    };
    let image = &out.result;
    if image == p {
        return Some(Failure::new(p, "fixed point"));
    }
    if image.weight() != n as u64 {
        return Some(Failure::new(p, format!("image {image} has weight {}", image.weight())));
    }
    let (before, after) = (classify(p), classify(image));
    if before.evens_count_parity == after.evens_count_parity {
        return Some(Failure::new(p, format!("image {image} in the same E0/E1 class")));
    }
    if before.total_parts_parity == after.total_parts_parity {
        return Some(Failure::new(p, format!("image {image} in the same E2/E3 class")));
    }
    let diff = |q: &TwoColorPartition| q.greens().len() as isize - q.blues().len() as isize;
    if diff(p) != diff(image) {
        return Some(Failure::new(p, format!("image {image} changes |greens| - |blues|")));
    }
    match transform(image) {
        Ok(back) if back.result == *p => None,
        Ok(back) => Some(Failure::new(p, format!("not an involution: {image} maps to {}", back.result))),
        Err(err) => Some(Failure::new(p, format!("image {image} cannot be transformed back: {err}"))),
    }
}

/// Applies the transformation to every non-exceptional member of `E(n)`.
pub fn verify_involution(n: usize, exec: Execution) -> InvolutionAudit {
    let members = enumerate_two_color(n);
    let exceptional: Vec<TwoColorPartition> = members.iter().filter(|p| is_exceptional(p)).cloned().collect();
    let results = exec.map(&members, |p| if is_exceptional(p) { None } else { audit_member(p, n) });
    let failures: Vec<Failure> = results.into_iter().flatten().collect();
    let census_ok = exceptional == expected_exceptional(n);
    InvolutionAudit {
        n,
        members: members.len(),
        orbits: (members.len() - exceptional.len()) / 2,
        exceptional,
        census_ok,
        failures,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BijectionAudit {
    pub n: usize,
    pub overpartitions: usize,
    pub two_color: usize,
    pub failures: Vec<Failure>,
}

impl BijectionAudit {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Round trips both ways, and the image of the odd overpartitions of `n`
/// equals `E(n)` as a set.
pub fn verify_bijection(n: usize, exec: Execution) -> BijectionAudit {
    let overpartitions = enumerate_odd_overpartitions(n);
    let members = enumerate_two_color(n);
    let mut failures = Vec::new();

    let forward = exec.map(&overpartitions, |op| {
        let image = overpartition_to_twocolor(op);
        let (e, g, b) = image.clone().into_parts();
        let failure = if let Err(err) = TwoColorPartition::new(e, g, b) {
            Some(Failure::new(op, format!("image is invalid: {err}")))
        } else if image.weight() != n as u64 {
            Some(Failure::new(op, format!("image {image} has weight {}", image.weight())))
        } else if twocolor_to_overpartition(&image) != *op {
            Some(Failure::new(op, format!("round trip through {image} fails")))
        } else {
            None
        };
        (image, failure)
    });
    let mut images = Vec::with_capacity(forward.len());
    for (image, failure) in forward {
        failures.extend(failure);
        images.push(image);
    }

    failures.extend(
        exec.map(&members, |p| {
            let back = overpartition_to_twocolor(&twocolor_to_overpartition(p));
            (back != *p).then(|| Failure::new(p, format!("reverse round trip gives {back}")))
        })
        .into_iter()
        .flatten(),
    );

    images.sort_unstable_by(|a, b| b.cmp(a));
    if let Some(w) = images.windows(2).find(|w| w[0] == w[1]) {
        failures.push(Failure::new(&w[0], "hit twice by the map"));
    }
    if images != members {
        failures.push(Failure::new(
            format!("n={n}"),
            format!("image has {} elements, E(n) has {}", images.len(), members.len()),
        ));
    }
    BijectionAudit { n, overpartitions: overpartitions.len(), two_color: members.len(), failures }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SeriesMismatch {
    pub n: usize,
    pub series_e: i64,
    pub series_podd: i64,
    pub enumerated_e: Option<u64>,
    pub enumerated_podd: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SeriesAudit {
    pub depth: usize,
    pub enumeration_limit: usize,
    pub mismatches: Vec<SeriesMismatch>,
}

impl SeriesAudit {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Compares the two product formulas up to `depth`, and both against
/// enumeration up to `enumeration_limit`.
pub fn verify_series(depth: usize, enumeration_limit: usize, exec: Execution) -> Result<SeriesAudit> {
    let e = series_e(depth)?;
    let p = series_podd(depth)?;
    let limit = enumeration_limit.min(depth);
    let counted = exec
        .map_range(0..=limit, |n| (enumerate_two_color(n).len() as u64, enumerate_odd_overpartitions(n).len() as u64));
    let mismatches = (0..=depth)
        .filter_map(|n| {
            let enumerated = counted.get(n).copied();
            let agrees = e.coeff(n) == p.coeff(n)
                && enumerated.is_none_or(|(ce, cp)| ce as i64 == e.coeff(n) && cp as i64 == p.coeff(n));
            (!agrees).then(|| SeriesMismatch {
                n,
                series_e: e.coeff(n),
                series_podd: p.coeff(n),
                enumerated_e: enumerated.map(|c| c.0),
                enumerated_podd: enumerated.map(|c| c.1),
            })
        })
        .collect();
    Ok(SeriesAudit { depth, enumeration_limit: limit, mismatches })
}

pub fn reports_to_csv(reports: &[IdentityReport]) -> String {
    let mut out = String::from("n,E,E0,E1,E2,E3,p_o_bar,is_square,pass\n");
    for r in reports {
        let pass = r.pass.map_or("exempt".to_string(), |p| p.to_string());
        writeln!(
            out,
            "{},{},{},{},{},{},{},{},{}",
            r.n, r.e, r.e0, r.e1, r.e2, r.e3, r.p_o_bar, r.square.is_square, pass
        )
        .unwrap();
    }
    out
}

pub fn reports_to_markdown(reports: &[IdentityReport]) -> String {
    let mut out = String::from("| n | E | E0 | E1 | E2 | E3 | p_o_bar | square | pass |\n");
    out.push_str("|---:|---:|---:|---:|---:|---:|---:|:---:|:---:|\n");
    for r in reports {
        let square = r.square.k.map_or("-".to_string(), |k| format!("{k}²"));
        let pass = match r.pass {
            Some(true) => "yes".to_string(),
            Some(false) => {
                format!("NO ({})", r.checks.map(|c| c.failed_parts()).unwrap_or_default().iter().collect::<String>())
            }
            None => "exempt".to_string(),
        };
        writeln!(
            out,
            "| {} | {} | {} | {} | {} | {} | {} | {} | {} |",
            r.n, r.e, r.e0, r.e1, r.e2, r.e3, r.p_o_bar, square, pass
        )
        .unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(r: &IdentityReport) -> (u64, u64, u64, u64, u64, u64) {
        (r.e, r.e0, r.e1, r.e2, r.e3, r.p_o_bar)
    }

    #[test]
    fn spot_rows() {
        let r = identity_report(4);
        assert_eq!(row(&r), (6, 4, 2, 4, 2, 6));
        assert_eq!(r.square.k, Some(2));
        assert_eq!(r.pass, Some(true));
        assert_eq!(row(&identity_report(5)), (8, 4, 4, 4, 4, 8));
        assert_eq!(row(&identity_report(2)), (2, 1, 1, 1, 1, 2));
    }

    #[test]
    fn zero_is_exempt() {
        let r = identity_report(0);
        assert_eq!(row(&r), (1, 1, 0, 1, 0, 1));
        assert_eq!(r.checks, None);
        assert_eq!(r.pass, None);
        assert!(verify_theorem(0, Execution::Sequential).is_empty());
    }

    #[test]
    fn small_involution_audits() {
        let a = verify_involution(0, Execution::Sequential);
        assert_eq!((a.members, a.orbits, a.exceptional.len()), (1, 0, 1));
        assert!(a.passed());
        let a = verify_involution(1, Execution::Sequential);
        assert_eq!((a.orbits, a.exceptional.len()), (0, 2));
        assert!(a.passed());
        let a = verify_involution(2, Execution::Sequential);
        assert_eq!((a.members, a.orbits, a.exceptional.len()), (2, 1, 0));
        assert!(a.passed());
    }

    #[test]
    fn small_bijection_audits() {
        let a = verify_bijection(0, Execution::Sequential);
        assert!(a.passed());
        let a = verify_bijection(3, Execution::Sequential);
        assert_eq!((a.overpartitions, a.two_color), (4, 4));
        assert!(a.passed());
    }

    #[test]
    fn series_audit_small() {
        let a = verify_series(30, 12, Execution::Sequential).unwrap();
        assert!(a.passed(), "{:?}", a.mismatches);
        assert_eq!(a.enumeration_limit, 12);
    }

    #[test]
    fn table_formats() {
        let reports = verify_theorem(2, Execution::Sequential);
        assert_eq!(
            reports_to_csv(&reports),
            "n,E,E0,E1,E2,E3,p_o_bar,is_square,pass\n1,2,2,0,0,2,2,true,true\n2,2,1,1,1,1,2,false,true\n"
        );
        let md = reports_to_markdown(&reports);
        assert!(md.contains("| 1 | 2 | 2 | 0 | 0 | 2 | 2 | 1² | yes |"), "{md}");
    }
}

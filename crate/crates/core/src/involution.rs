//! The parity-flipping transformation on `E(n)`.
//!
//! Outside the two single-color staircases `{2k-1, ..., 3, 1}` (and the empty
//! partition) the map is a fixed-point-free involution that changes the number
//! of even parts by one and keeps `|greens| - |blues|`, which pairs `E0(n)`
//! with `E1(n)` and `E2(n)` with `E3(n)`.

use serde::{Deserialize, Serialize};

pub use crate::diagram::StripReport;
use crate::diagram::{
    build_diagram, far_edge, insert_strip, longest_all_square_strip, merge_adjoined, remove_strip, split_and_read,
    Cell, Orientation, StripAction,
};
use crate::error::{Error, Result};
use crate::partition::{Part, TwoColorPartition};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Direction {
    EvensGrew,
    EvensShrank,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TransformOutcome {
    pub result: TwoColorPartition,
    pub strip: StripReport,
    pub direction: Direction,
}

fn is_staircase(parts: &[Part]) -> bool {
    parts.iter().rev().zip((1..).step_by(2)).all(|(&p, odd)| p == odd)
}

/// True for the inputs the transformation does not apply to.
pub fn is_exceptional(p: &TwoColorPartition) -> bool {
    if !p.evens().is_empty() {
        return false;
    }
    match (p.greens().is_empty(), p.blues().is_empty()) {
        (true, true) => true,
        (false, true) => is_staircase(p.greens()),
        (true, false) => is_staircase(p.blues()),
        (false, false) => false,
    }
}

pub fn transform(p: &TwoColorPartition) -> Result<TransformOutcome> {
    if is_exceptional(p) {
        return Err(Error::ExceptionalPartition(p.to_json()));
    }
    let merged = merge_adjoined(&build_diagram(p.greens(), p.blues())?);
    let orientation = if p.greens().len() > p.blues().len() { Orientation::Column } else { Orientation::Row };
    let mut strip = longest_all_square_strip(&merged, orientation);
    let max_even = p.max_even() as usize;
    let mut evens = p.evens().to_vec();

    let (edited, direction) = if 2 * strip.length_l > max_even {
        strip.action = StripAction::Removed;
        evens.insert(0, (2 * strip.length_l) as Part);
        (remove_strip(&merged, orientation, strip.position)?, Direction::EvensGrew)
    } else {
        evens.remove(0);
        if strip.length_l > 0 {
            strip.action = StripAction::Inserted;
        } else {
            strip.action = StripAction::FarEdgeInserted;
            strip.position = far_edge(&merged, orientation);
        }
        (insert_strip(&merged, orientation, strip.position, max_even / 2), Direction::EvensShrank)
    };

    let (greens, blues) = split_and_read(&edited)?;
    let result = TwoColorPartition::from_parts_unchecked(evens, greens, blues);
    check_postconditions(p, &result)?;
    Ok(TransformOutcome { result, strip, direction })
}

fn check_postconditions(input: &TwoColorPartition, output: &TwoColorPartition) -> Result<()> {
    let violation = |reason: String| Err(Error::MalformedDiagram { cell: Cell::new(0, 0), reason });
    let (e, g, b) = output.clone().into_parts();
    if let Err(err) = TwoColorPartition::new(e, g, b) {
        return violation(format!("image is not a valid partition: {err}"));
    }
    if input.weight() != output.weight() {
        return violation(format!("weight changed from {} to {}", input.weight(), output.weight()));
    }
    if input.evens().len().abs_diff(output.evens().len()) != 1 {
        return violation("number of even parts did not change by one".into());
    }
    let diff = |q: &TwoColorPartition| q.greens().len() as isize - q.blues().len() as isize;
    if diff(input) != diff(output) {
        return violation("|greens| - |blues| changed".into());
    }
    Ok(())
}

//! Zero-class 321-avoiders of `[n]` and Dyck `(n-1)`-paths with no short
//! descent, through Motzkin paths of length `n - 1` with no flat step on
//! the axis.
//!
//! A zero-class 321-avoider has the shape
//! `1 M_1 / x_2 M_2 / ... / x_{m-1} M_{m-1} / x_m` where the `M_i` are
//! nonempty runs of left-to-right maxima and `x_{i+1} < min M_i`. Reading
//! the values `2..=n` in order, each `x_i` becomes an up step, the last
//! entry of each `M_i` a down step and every other `M` entry a flat step.
//!
//! The Motzkin side is then carried to Dyck paths by first-return
//! decomposition on both sides:
//!
//! * no-short-descent paths `U Q D R` (Q nonempty) ↔ `U w D v`, where `w`
//!   is an arbitrary Motzkin path and `v` again has no flat on the axis;
//! * paths whose descents are all long except possibly the last, of
//!   semilength `s + 1` ↔ arbitrary Motzkin paths of length `s`:
//!   `UD ↔ ε`, `U Q D ↔ F w`, `U Q D R ↔ U w D v`.

use std::fmt;

use crate::dyck::{DyckPath, Step};
use crate::enumerate::statistic_m;
use crate::error::{Error, Result};
use crate::partition::SetPartition;
use crate::pattern::Pattern;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MotzkinStep {
    Up,
    Flat,
    Down,
}

/// A Motzkin path with no flat step at height 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AxisFreeMotzkin {
    steps: Vec<MotzkinStep>,
}

impl AxisFreeMotzkin {
    pub fn new(steps: Vec<MotzkinStep>) -> Result<Self> {
        let mut height = 0i64;
        for (i, s) in steps.iter().enumerate() {
            match s {
                MotzkinStep::Up => height += 1,
                MotzkinStep::Down => height -= 1,
                MotzkinStep::Flat if height == 0 => {
                    return Err(Error::Domain(format!("flat step {} on the axis", i + 1)))
                }
                MotzkinStep::Flat => {}
            }
            if height < 0 {
                return Err(Error::Domain(format!("step {} goes below the axis", i + 1)));
            }
        }
        if height != 0 {
            return Err(Error::Domain(format!("ends at height {height}")));
        }
        Ok(AxisFreeMotzkin { steps })
    }

    pub fn steps(&self) -> &[MotzkinStep] {
        &self.steps
    }
}

impl fmt::Display for AxisFreeMotzkin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            f.write_str(match s {
                MotzkinStep::Up => "U",
                MotzkinStep::Flat => "F",
                MotzkinStep::Down => "D",
            })?;
        }
        Ok(())
    }
}

fn check_zero_class_321(p: &SetPartition) -> Result<()> {
    if Pattern::P321.is_contained_in(p.flatten().word()) {
        return Err(Error::Domain("flattening contains 321".into()));
    }
    let m = statistic_m(p);
    if !m.is_empty() {
        return Err(Error::Domain(format!(
            "M is nonempty: {}",
            crate::partition::format_set(&m)
        )));
    }
    Ok(())
}

pub fn zero321_to_motzkin(p: &SetPartition) -> Result<AxisFreeMotzkin> {
    check_zero_class_321(p)?;
    let n = p.n();
    let mut kind = vec![MotzkinStep::Flat; n + 1];
    for (bi, block) in p.blocks().iter().enumerate() {
        if bi > 0 {
            kind[block[0]] = MotzkinStep::Up;
        }
        if block.len() > 1 {
            kind[*block.last().expect("nonempty")] = MotzkinStep::Down;
        }
    }
    AxisFreeMotzkin::new(kind[2..].to_vec())
        .map_err(|e| Error::Internal(format!("zero-class reading gave {e}")))
}

pub fn motzkin_to_zero321(w: &AxisFreeMotzkin) -> Result<SetPartition> {
    if w.steps().is_empty() {
        return Ok(SetPartition::new(vec![vec![1]]).expect("singleton"));
    }
    let mut initiators = Vec::new();
    let mut chunks: Vec<Vec<usize>> = vec![Vec::new()];
    for (i, s) in w.steps().iter().enumerate() {
        let v = i + 2;
        match s {
            MotzkinStep::Up => initiators.push(v),
            MotzkinStep::Flat => chunks.last_mut().expect("nonempty").push(v),
            MotzkinStep::Down => {
                chunks.last_mut().expect("nonempty").push(v);
                chunks.push(Vec::new());
            }
        }
    }
    // the final chunk is empty: after the last down step only flats could
    // follow, and those would sit on the axis
    chunks.pop();
    let mut blocks = Vec::with_capacity(chunks.len() + 1);
    for (i, chunk) in chunks.into_iter().enumerate() {
        let head = if i == 0 { 1 } else { initiators[i - 1] };
        let mut block = vec![head];
        block.extend(chunk);
        blocks.push(block);
    }
    blocks.push(vec![*initiators
        .last()
        .expect("a nonempty axis-free path has an up step")]);
    let p = SetPartition::new(blocks)
        .map_err(|e| Error::Internal(format!("Motzkin reading gave {e}")))?;
    check_zero_class_321(&p)
        .map_err(|e| Error::Internal(format!("Motzkin reading left the zero class: {e}")))?;
    Ok(p)
}

/// Index of the step that brings a walk starting with an up step at `0`
/// back to height 0.
fn first_return<T: Copy + PartialEq>(steps: &[T], up: T, down: T) -> Option<usize> {
    let mut height = 0i64;
    for (i, &s) in steps.iter().enumerate() {
        if s == up {
            height += 1;
        } else if s == down {
            height -= 1;
        }
        if height == 0 {
            return Some(i);
        }
    }
    None
}

fn short_descent() -> Error {
    Error::Domain("path has a short descent".into())
}

/// No-short-descent Dyck word to an axis-free Motzkin word.
fn nsd_to_motzkin(steps: &[Step], out: &mut Vec<MotzkinStep>) -> Result<()> {
    if steps.is_empty() {
        return Ok(());
    }
    let j = first_return(steps, Step::Up, Step::Down)
        .ok_or_else(|| Error::Internal("unbalanced".into()))?;
    let (q, r) = (&steps[1..j], &steps[j + 1..]);
    if q.is_empty() {
        return Err(short_descent());
    }
    out.push(MotzkinStep::Up);
    last_short_to_motzkin(q, out)?;
    out.push(MotzkinStep::Down);
    nsd_to_motzkin(r, out)
}

/// Nonempty Dyck word whose descents are all long except possibly the last,
/// to an arbitrary Motzkin word one step shorter than its semilength.
fn last_short_to_motzkin(steps: &[Step], out: &mut Vec<MotzkinStep>) -> Result<()> {
    let j = first_return(steps, Step::Up, Step::Down)
        .ok_or_else(|| Error::Internal("unbalanced".into()))?;
    let (q, r) = (&steps[1..j], &steps[j + 1..]);
    match (q.is_empty(), r.is_empty()) {
        (true, true) => Ok(()),
        (false, true) => {
            out.push(MotzkinStep::Flat);
            last_short_to_motzkin(q, out)
        }
        (true, false) => Err(short_descent()),
        (false, false) => {
            out.push(MotzkinStep::Up);
            last_short_to_motzkin(q, out)?;
            out.push(MotzkinStep::Down);
            last_short_to_motzkin(r, out)
        }
    }
}

fn motzkin_to_nsd(steps: &[MotzkinStep], out: &mut Vec<Step>) -> Result<()> {
    if steps.is_empty() {
        return Ok(());
    }
    if steps[0] != MotzkinStep::Up {
        return Err(Error::Domain("flat step on the axis".into()));
    }
    let j = first_return(steps, MotzkinStep::Up, MotzkinStep::Down)
        .ok_or_else(|| Error::Domain("Motzkin path does not return to the axis".into()))?;
    out.push(Step::Up);
    motzkin_to_last_short(&steps[1..j], out)?;
    out.push(Step::Down);
    motzkin_to_nsd(&steps[j + 1..], out)
}

fn motzkin_to_last_short(steps: &[MotzkinStep], out: &mut Vec<Step>) -> Result<()> {
    match steps.first() {
        None => {
            out.extend([Step::Up, Step::Down]);
            Ok(())
        }
        Some(MotzkinStep::Flat) => {
            out.push(Step::Up);
            motzkin_to_last_short(&steps[1..], out)?;
            out.push(Step::Down);
            Ok(())
        }
        Some(MotzkinStep::Up) => {
            let j = first_return(steps, MotzkinStep::Up, MotzkinStep::Down)
                .ok_or_else(|| Error::Domain("Motzkin path does not return to its level".into()))?;
            out.push(Step::Up);
            motzkin_to_last_short(&steps[1..j], out)?;
            out.push(Step::Down);
            motzkin_to_last_short(&steps[j + 1..], out)
        }
        Some(MotzkinStep::Down) => Err(Error::Domain("Motzkin path goes below its level".into())),
    }
}

pub fn motzkin_to_dyck(w: &AxisFreeMotzkin) -> DyckPath {
    let mut out = Vec::with_capacity(2 * w.steps().len());
    motzkin_to_nsd(w.steps(), &mut out).expect("axis-free Motzkin paths decompose");
    DyckPath::new(out).expect("decomposition builds Dyck paths")
}

pub fn dyck_to_motzkin(d: &DyckPath) -> Result<AxisFreeMotzkin> {
    let mut out = Vec::with_capacity(d.semilength());
    nsd_to_motzkin(d.steps(), &mut out)?;
    AxisFreeMotzkin::new(out).map_err(|e| Error::Internal(format!("decomposition gave {e}")))
}

/// Zero-class 321-avoider of `[n]` to a Dyck `(n-1)`-path with no short
/// descent.
pub fn u321zero_to_dyck(p: &SetPartition) -> Result<DyckPath> {
    Ok(motzkin_to_dyck(&zero321_to_motzkin(p)?))
}

/// Inverse of [`u321zero_to_dyck`]; the partition is of `[semilength + 1]`.
pub fn dyck_to_u321zero(d: &DyckPath) -> Result<SetPartition> {
    if !d.has_no_short_descent() {
        return Err(short_descent());
    }
    motzkin_to_zero321(&dyck_to_motzkin(d)?)
}

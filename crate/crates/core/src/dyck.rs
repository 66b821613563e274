//! Dyck paths and the bounded increasing sequences that encode them.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    Up,
    Down,
}

/// A lattice word in up/down steps that never goes below its start and
/// ends at its start.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DyckPath {
    steps: Vec<Step>,
}

impl DyckPath {
    pub fn new(steps: Vec<Step>) -> Result<Self> {
        let mut height: i64 = 0;
        for (i, s) in steps.iter().enumerate() {
            height += if *s == Step::Up { 1 } else { -1 };
            if height < 0 {
                return Err(Error::InvalidDyckPath(format!(
                    "goes below the axis at step {}",
                    i + 1
                )));
            }
        }
        if height != 0 {
            return Err(Error::InvalidDyckPath(format!("ends at height {height}")));
        }
        Ok(DyckPath { steps })
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    /// Number of up steps.
    pub fn semilength(&self) -> usize {
        self.steps.len() / 2
    }

    /// Lengths of the maximal runs of down steps, left to right.
    pub fn descent_lengths(&self) -> Vec<usize> {
        let mut out = Vec::new();
        let mut run = 0;
        for s in &self.steps {
            match s {
                Step::Down => run += 1,
                Step::Up => {
                    if run > 0 {
                        out.push(run);
                    }
                    run = 0;
                }
            }
        }
        if run > 0 {
            out.push(run);
        }
        out
    }

    /// No maximal down run of length exactly 1.
    pub fn has_no_short_descent(&self) -> bool {
        self.descent_lengths().iter().all(|&d| d != 1)
    }

    /// 1-based position of the down step matching the up step at 1-based
    /// `pos`: the end of the shortest Dyck subpath that starts there.
    pub fn matching_downstep(&self, pos: usize) -> Result<usize> {
        matching_downstep(&self.steps, pos)
    }

    /// All Dyck paths of semilength `r`, in lexicographic order with `Up`
    /// before `Down`.
    pub fn all(r: usize) -> Vec<DyckPath> {
        fn go(r: usize, ups: usize, downs: usize, cur: &mut Vec<Step>, out: &mut Vec<DyckPath>) {
            if ups == r && downs == r {
                out.push(DyckPath { steps: cur.clone() });
                return;
            }
            if ups < r {
                cur.push(Step::Up);
                go(r, ups + 1, downs, cur, out);
                cur.pop();
            }
            if downs < ups {
                cur.push(Step::Down);
                go(r, ups, downs + 1, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(r, 0, 0, &mut Vec::with_capacity(2 * r), &mut out);
        out
    }
}

/// Matching for an arbitrary up/down word. The word need not be balanced;
/// an up step with no match is an error.
pub(crate) fn matching_downstep(steps: &[Step], pos: usize) -> Result<usize> {
    if pos == 0 || pos > steps.len() || steps[pos - 1] != Step::Up {
        return Err(Error::Domain(format!("position {pos} is not an up step")));
    }
    let mut height = 0i64;
    for (i, s) in steps.iter().enumerate().skip(pos - 1) {
        height += if *s == Step::Up { 1 } else { -1 };
        if height == 0 {
            return Ok(i + 1);
        }
    }
    Err(Error::Domain(format!(
        "up step at {pos} has no matching down step"
    )))
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            f.write_str(if *s == Step::Up { "U" } else { "D" })?;
        }
        Ok(())
    }
}

impl FromStr for DyckPath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let steps = s
            .trim()
            .char_indices()
            .map(|(pos, ch)| match ch {
                'U' | 'u' => Ok(Step::Up),
                'D' | 'd' => Ok(Step::Down),
                _ => Err(Error::Parse {
                    pos,
                    msg: format!("expected U or D, found {ch:?}"),
                }),
            })
            .collect::<Result<Vec<_>>>()?;
        DyckPath::new(steps)
    }
}

/// `1 <= c_1 < c_2 < ... < c_{r-1}` with `c_i <= 2i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CSeq {
    r: usize,
    values: Vec<usize>,
}

impl CSeq {
    /// `r` is `values.len() + 1`.
    pub fn new(values: Vec<usize>) -> Result<Self> {
        for (idx, &c) in values.iter().enumerate() {
            let i = idx + 1;
            if c < 1 {
                return Err(Error::InvalidCSeq(format!("c_{i} = {c} is below 1")));
            }
            if c > 2 * i {
                return Err(Error::InvalidCSeq(format!("c_{i} = {c} exceeds 2*{i}")));
            }
            if idx > 0 && values[idx - 1] >= c {
                return Err(Error::InvalidCSeq(format!(
                    "not strictly increasing at c_{i}"
                )));
            }
        }
        Ok(CSeq {
            r: values.len() + 1,
            values,
        })
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }
}

impl fmt::Display for CSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.values.iter().map(usize::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for CSeq {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return CSeq::new(Vec::new());
        }
        let mut pos = 0;
        let mut values = Vec::new();
        for entry in s.split(',') {
            let t = entry.trim();
            let v = t.parse::<usize>().map_err(|_| Error::Parse {
                pos,
                msg: format!("expected a nonnegative integer, found {t:?}"),
            })?;
            values.push(v);
            pos += entry.len() + 1;
        }
        CSeq::new(values)
    }
}

//! Set partitions in standard increasing form and permutations in one-line
//! notation.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A partition of `{1..n}` written in standard increasing form: entries
/// increase within each block and blocks are ordered by their first entry.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetPartition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl SetPartition {
    /// Validates the blocks. `n` is inferred as the total number of entries.
    pub fn new(blocks: Vec<Vec<usize>>) -> Result<Self> {
        let n: usize = blocks.iter().map(Vec::len).sum();
        if n == 0 {
            return Err(Error::EmptyGroundSet);
        }
        let mut seen = vec![false; n + 1];
        let mut prev_first = 0;
        for (bi, block) in blocks.iter().enumerate() {
            let Some(&first) = block.first() else {
                return Err(Error::InvalidPartition(format!(
                    "block {} is empty",
                    bi + 1
                )));
            };
            if first <= prev_first {
                return Err(Error::InvalidPartition(format!(
                    "block {} starts with {first}, not after the previous block's first entry {prev_first}",
                    bi + 1
                )));
            }
            prev_first = first;
            for (i, &x) in block.iter().enumerate() {
                if x == 0 || x > n {
                    return Err(Error::InvalidPartition(format!(
                        "entry {x} outside 1..={n}"
                    )));
                }
                if seen[x] {
                    return Err(Error::InvalidPartition(format!("entry {x} repeated")));
                }
                seen[x] = true;
                if i > 0 && block[i - 1] >= x {
                    return Err(Error::InvalidPartition(format!(
                        "block {} is not increasing at {x}",
                        bi + 1
                    )));
                }
            }
        }
        // n distinct entries in 1..=n: the union is the whole ground set
        Ok(SetPartition { n, blocks })
    }

    /// Builds the partition induced by a restricted growth function: entry
    /// `i + 1` goes into block `rgf[i]`.
    pub fn from_rgf(rgf: &[usize]) -> Result<Self> {
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        for (i, &label) in rgf.iter().enumerate() {
            if label > blocks.len() {
                return Err(Error::InvalidPartition(format!(
                    "restricted growth violated at position {}",
                    i + 1
                )));
            }
            if label == blocks.len() {
                blocks.push(Vec::new());
            }
            blocks[label].push(i + 1);
        }
        SetPartition::new(blocks)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn into_blocks(self) -> Vec<Vec<usize>> {
        self.blocks
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    /// Concatenation of the blocks in order.
    pub fn flatten(&self) -> Permutation {
        Permutation {
            word: self.blocks.concat(),
        }
    }

    /// First entries of the blocks.
    pub fn block_initiators(&self) -> BTreeSet<usize> {
        self.blocks.iter().map(|b| b[0]).collect()
    }

    /// The remaining blocks after deleting the first one, relabelled
    /// order-isomorphically onto `{1..m}`. `None` when the first block is
    /// everything.
    pub fn standardized_tail(&self) -> Option<SetPartition> {
        if self.blocks.len() == 1 {
            return None;
        }
        Some(
            standardize(self.blocks[1..].to_vec()).expect("tail of a valid partition standardizes"),
        )
    }
}

/// Relabels the entries of a list of blocks onto `{1..m}` preserving their
/// relative order. Block order is kept as given, so the result is only a
/// valid partition if that order is already standard.
pub fn standardize(mut blocks: Vec<Vec<usize>>) -> Result<SetPartition> {
    let mut entries: Vec<usize> = blocks.iter().flatten().copied().collect();
    entries.sort_unstable();
    for block in &mut blocks {
        for x in block.iter_mut() {
            *x = entries.binary_search(x).expect("entry present") + 1;
        }
    }
    SetPartition::new(blocks)
}

impl fmt::Display for SetPartition {
    /// Blocks separated by `/`, entries by `,`: `1,3,6/2,7,9/4/5,8`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (bi, block) in self.blocks.iter().enumerate() {
            if bi > 0 {
                f.write_str("/")?;
            }
            for (i, x) in block.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{x}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for SetPartition {
    type Err = Error;

    /// Accepts `1,3,6/2,7,9/4/5,8`, or the compact digit form `136-279-4-58`
    /// when every entry is a single digit.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse {
                pos: 0,
                msg: "empty partition".into(),
            });
        }
        let blocks = if s.contains(',') || s.contains('/') {
            parse_slashed(s)?
        } else {
            parse_compact(s)?
        };
        SetPartition::new(blocks)
    }
}

fn parse_slashed(s: &str) -> Result<Vec<Vec<usize>>> {
    let mut blocks = Vec::new();
    let mut offset = 0;
    for block_text in s.split('/') {
        let mut block = Vec::new();
        let mut pos = offset;
        for entry in block_text.split(',') {
            block.push(parse_entry(entry, pos)?);
            pos += entry.len() + 1;
        }
        blocks.push(block);
        offset += block_text.len() + 1;
    }
    Ok(blocks)
}

fn parse_compact(s: &str) -> Result<Vec<Vec<usize>>> {
    let mut blocks = vec![Vec::new()];
    for (pos, ch) in s.char_indices() {
        match ch {
            '-' => {
                if blocks.last().is_some_and(Vec::is_empty) {
                    return Err(Error::Parse {
                        pos,
                        msg: "empty block".into(),
                    });
                }
                blocks.push(Vec::new());
            }
            '1'..='9' => blocks
                .last_mut()
                .expect("at least one block")
                .push(ch as usize - '0' as usize),
            _ => {
                return Err(Error::Parse {
                    pos,
                    msg: format!(
                        "unexpected character {ch:?} in compact form (digits 1-9 and '-' only)"
                    ),
                })
            }
        }
    }
    if blocks.last().is_some_and(Vec::is_empty) {
        return Err(Error::Parse {
            pos: s.len(),
            msg: "empty block".into(),
        });
    }
    Ok(blocks)
}

fn parse_entry(text: &str, pos: usize) -> Result<usize> {
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Err(Error::Parse {
            pos,
            msg: "missing entry".into(),
        });
    }
    trimmed.parse::<usize>().map_err(|_| Error::Parse {
        pos,
        msg: format!("expected a positive integer, found {trimmed:?}"),
    })
}

/// A permutation of `{1..len}` in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    word: Vec<usize>,
}

impl Permutation {
    pub fn new(word: Vec<usize>) -> Result<Self> {
        let n = word.len();
        let mut seen = vec![false; n + 1];
        for &x in &word {
            if x == 0 || x > n {
                return Err(Error::InvalidPermutation(format!(
                    "entry {x} outside 1..={n}"
                )));
            }
            if seen[x] {
                return Err(Error::InvalidPermutation(format!("entry {x} repeated")));
            }
            seen[x] = true;
        }
        Ok(Permutation { word })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            word: (1..=n).collect(),
        }
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.word.iter().enumerate().all(|(i, &x)| x == i + 1)
    }
}

impl fmt::Display for Permutation {
    /// Digits are concatenated when every entry is a single digit, otherwise
    /// entries are comma separated.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.word.len() <= 9 { "" } else { "," };
        for (i, x) in self.word.iter().enumerate() {
            if i > 0 {
                f.write_str(sep)?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let word = if s.contains(',') {
            let mut pos = 0;
            let mut word = Vec::new();
            for entry in s.split(',') {
                word.push(parse_entry(entry, pos)?);
                pos += entry.len() + 1;
            }
            word
        } else {
            s.char_indices()
                .map(|(pos, ch)| {
                    ch.to_digit(10)
                        .filter(|&d| d > 0)
                        .map(|d| d as usize)
                        .ok_or_else(|| Error::Parse {
                            pos,
                            msg: format!("unexpected character {ch:?}"),
                        })
                })
                .collect::<Result<Vec<_>>>()?
        };
        Permutation::new(word)
    }
}

/// Renders a set of entries as `{2,6,8}`.
pub fn format_set(set: &BTreeSet<usize>) -> String {
    let inner: Vec<String> = set.iter().map(usize::to_string).collect();
    format!("{{{}}}", inner.join(","))
}

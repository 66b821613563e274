//! The `(K, L, inner)` decomposition of 231- and 321-avoiders.
//!
//! `K` is the M-statistic, `L` the part of `K` that starts a block, and
//! `inner` what is left after deleting `K` (gluing a block onto its
//! predecessor when its initiator was deleted), standardized.

use std::collections::BTreeSet;
use std::fmt;

use crate::enumerate::statistic_m;
use crate::error::{Error, Result};
use crate::partition::{format_set, standardize, SetPartition};
use crate::pattern::Pattern;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct KLTriple {
    n: usize,
    k: BTreeSet<usize>,
    l: BTreeSet<usize>,
    inner: SetPartition,
}

impl KLTriple {
    /// Checks `L ⊆ K ⊆ {2..n}` with `n = |K| + inner.n()`, and that `inner`
    /// lies in the zero class of `pat`.
    pub fn new(
        k: BTreeSet<usize>,
        l: BTreeSet<usize>,
        inner: SetPartition,
        pat: Pattern,
    ) -> Result<Self> {
        check_kl_pattern(pat)?;
        let n = k.len() + inner.n();
        if let Some(&x) = k.iter().find(|&&x| x < 2 || x > n) {
            return Err(Error::InvalidTriple(format!(
                "K contains {x}, outside 2..={n}"
            )));
        }
        if let Some(&x) = l.difference(&k).next() {
            return Err(Error::InvalidTriple(format!(
                "L contains {x}, which is not in K"
            )));
        }
        if !statistic_m(&inner).is_empty() {
            return Err(Error::InvalidTriple(
                "inner partition has nonempty M".into(),
            ));
        }
        if pat.is_contained_in(inner.flatten().word()) {
            return Err(Error::InvalidTriple(format!(
                "inner partition contains {pat}"
            )));
        }
        Ok(KLTriple { n, k, l, inner })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> &BTreeSet<usize> {
        &self.k
    }

    pub fn l(&self) -> &BTreeSet<usize> {
        &self.l
    }

    pub fn inner(&self) -> &SetPartition {
        &self.inner
    }
}

impl fmt::Display for KLTriple {
    /// `K={2,6,8} L={2} inner=1,3/2,5/4`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "K={} L={} inner={}",
            format_set(&self.k),
            format_set(&self.l),
            self.inner
        )
    }
}

/// Parses the [`Display`](fmt::Display) form back, validating against `pat`.
pub fn parse_triple(s: &str, pat: Pattern) -> Result<KLTriple> {
    let s = s.trim();
    let mut k = None;
    let mut l = None;
    let mut inner = None;
    let mut pos = 0;
    for field in s.split(' ') {
        if field.is_empty() {
            pos += 1;
            continue;
        }
        let (key, value) = field.split_once('=').ok_or_else(|| Error::Parse {
            pos,
            msg: format!("expected key=value, found {field:?}"),
        })?;
        let vpos = pos + key.len() + 1;
        match key {
            "K" => k = Some(parse_set(value, vpos)?),
            "L" => l = Some(parse_set(value, vpos)?),
            "inner" => {
                inner = Some(value.parse::<SetPartition>().map_err(|e| match e {
                    Error::Parse { pos, msg } => Error::Parse {
                        pos: vpos + pos,
                        msg,
                    },
                    other => other,
                })?)
            }
            _ => {
                return Err(Error::Parse {
                    pos,
                    msg: format!("unknown field {key:?}"),
                })
            }
        }
        pos += field.len() + 1;
    }
    let missing = |name: &str| Error::Parse {
        pos: s.len(),
        msg: format!("missing field {name}"),
    };
    KLTriple::new(
        k.ok_or_else(|| missing("K"))?,
        l.ok_or_else(|| missing("L"))?,
        inner.ok_or_else(|| missing("inner"))?,
        pat,
    )
}

fn parse_set(text: &str, pos: usize) -> Result<BTreeSet<usize>> {
    let body = text
        .strip_prefix('{')
        .and_then(|t| t.strip_suffix('}'))
        .ok_or_else(|| Error::Parse {
            pos,
            msg: format!("expected {{...}}, found {text:?}"),
        })?;
    if body.is_empty() {
        return Ok(BTreeSet::new());
    }
    let mut out = BTreeSet::new();
    let mut p = pos + 1;
    for entry in body.split(',') {
        let v = entry.parse::<usize>().map_err(|_| Error::Parse {
            pos: p,
            msg: format!("expected a positive integer, found {entry:?}"),
        })?;
        out.insert(v);
        p += entry.len() + 1;
    }
    Ok(out)
}

fn check_kl_pattern(pat: Pattern) -> Result<()> {
    match pat {
        Pattern::P231 | Pattern::P321 => Ok(()),
        other => Err(Error::UnsupportedPattern(format!(
            "{other} has no (K, L, inner) decomposition"
        ))),
    }
}

pub fn decompose_kl(p: &SetPartition, pat: Pattern) -> Result<KLTriple> {
    check_kl_pattern(pat)?;
    if pat.is_contained_in(p.flatten().word()) {
        return Err(Error::Domain(format!("partition contains {pat}")));
    }
    let k = statistic_m(p);
    let l: BTreeSet<usize> = p.block_initiators().intersection(&k).copied().collect();
    let mut reduced: Vec<Vec<usize>> = Vec::with_capacity(p.num_blocks());
    for block in p.blocks() {
        let rest: Vec<usize> = block.iter().copied().filter(|x| !k.contains(x)).collect();
        if l.contains(&block[0]) {
            // 1 is never in K, so a predecessor exists
            reduced
                .last_mut()
                .ok_or_else(|| Error::Internal("first block initiator in L".into()))?
                .extend(rest);
        } else {
            reduced.push(rest);
        }
    }
    let inner = standardize(reduced)
        .map_err(|e| Error::Internal(format!("deletion left a malformed partition: {e}")))?;
    KLTriple::new(k, l, inner, pat)
        .map_err(|e| Error::Internal(format!("decomposition produced {e}")))
}

/// Inverse of [`decompose_kl`]: insert each `a` in `K` from smallest to
/// largest into the last block whose first entry is below `a` (after
/// shifting entries `>= a` up by one), then start a new block at each
/// element of `L`.
pub fn compose_kl(t: &KLTriple) -> Result<SetPartition> {
    let mut blocks = t.inner.blocks().to_vec();
    for &a in &t.k {
        let target = blocks
            .iter()
            .rposition(|b| b[0] < a)
            .ok_or_else(|| Error::Internal(format!("no block starts below {a}")))?;
        for x in blocks.iter_mut().flatten() {
            if *x >= a {
                *x += 1;
            }
        }
        let block = &mut blocks[target];
        let at = block.partition_point(|&x| x < a);
        block.insert(at, a);
    }
    for &a in &t.l {
        let (bi, at) = blocks
            .iter()
            .enumerate()
            .find_map(|(bi, b)| b.iter().position(|&x| x == a).map(|at| (bi, at)))
            .ok_or_else(|| Error::Internal(format!("{a} missing after insertion")))?;
        if at == 0 {
            return Err(Error::Internal(format!("{a} already starts a block")));
        }
        let tail = blocks[bi].split_off(at);
        blocks.insert(bi + 1, tail);
    }
    SetPartition::new(blocks).map_err(|e| Error::Internal(format!("composition produced {e}")))
}

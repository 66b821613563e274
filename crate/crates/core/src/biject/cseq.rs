//! c-sequences, Dyck paths and the zero class of 231-avoiders.
//!
//! A partition of `[2r + 1]` in the 231 zero class has the shape
//! `a_1 b_1 / a_2 b_2 / ... / a_r b_r / a_{r+1}` and is determined by its
//! block initiators, which are in turn determined by `c_i = a_{i+2} - 2`.

use crate::dyck::{matching_downstep, CSeq, DyckPath, Step};
use crate::enumerate::statistic_m;
use crate::error::{Error, Result};
use crate::partition::SetPartition;
use crate::pattern::Pattern;

/// `c_i` = number of steps before the `(i + 1)`st up step.
pub fn dyck_to_cseq(d: &DyckPath) -> Result<CSeq> {
    if d.semilength() == 0 {
        return Err(Error::Domain(
            "the empty path has no c-sequence (r >= 1)".into(),
        ));
    }
    let values = d
        .steps()
        .iter()
        .enumerate()
        .filter(|(_, s)| **s == Step::Up)
        .skip(1)
        .map(|(i, _)| i)
        .collect();
    CSeq::new(values)
}

pub fn cseq_to_dyck(c: &CSeq) -> DyckPath {
    let r = c.r();
    let mut steps = vec![Step::Down; 2 * r];
    steps[0] = Step::Up;
    for &pos in c.values() {
        steps[pos] = Step::Up;
    }
    DyckPath::new(steps).expect("c_i <= 2i keeps the path above the axis")
}

/// The interleaved form `a_1 b_1 a_2 b_2 ... a_r b_r a_{r+1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PairForm {
    a: Vec<usize>,
    b: Vec<usize>,
}

impl PairForm {
    pub fn new(a: Vec<usize>, b: Vec<usize>) -> Result<Self> {
        let r = b.len();
        if a.len() != r + 1 {
            return Err(Error::Domain(format!(
                "need {} block initiators for {r} pairs, got {}",
                r + 1,
                a.len()
            )));
        }
        let mut seen = vec![false; 2 * r + 2];
        for &x in a.iter().chain(&b) {
            if x == 0 || x > 2 * r + 1 || std::mem::replace(&mut seen[x], true) {
                return Err(Error::Domain(format!(
                    "entries are not a permutation of 1..={}",
                    2 * r + 1
                )));
            }
        }
        for i in 0..r {
            if !(a[i] < b[i] && b[i] > a[i + 1] && a[i] < a[i + 1]) {
                return Err(Error::Domain(format!(
                    "pair {} breaks a_i < b_i > a_(i+1)",
                    i + 1
                )));
            }
        }
        Ok(PairForm { a, b })
    }

    pub fn r(&self) -> usize {
        self.b.len()
    }

    pub fn a(&self) -> &[usize] {
        &self.a
    }

    pub fn b(&self) -> &[usize] {
        &self.b
    }

    pub fn to_partition(&self) -> SetPartition {
        let mut blocks: Vec<Vec<usize>> = self
            .a
            .iter()
            .zip(&self.b)
            .map(|(&x, &y)| vec![x, y])
            .collect();
        blocks.push(vec![*self.a.last().expect("r + 1 >= 1 initiators")]);
        SetPartition::new(blocks).expect("pair form is in standard increasing form")
    }
}

fn initiators_from_cseq(c: &CSeq) -> Vec<usize> {
    let mut a = vec![1, 2];
    a.extend(c.values().iter().map(|&ci| ci + 2));
    a
}

/// Right-to-left fill: `b_i` is the smallest unused element of
/// `[2r + 1] \ {a}` exceeding `a_{i+1}`.
pub fn fill_by_rule(c: &CSeq) -> Result<Vec<usize>> {
    let r = c.r();
    let a = initiators_from_cseq(c);
    let mut available = vec![true; 2 * r + 2];
    available[0] = false;
    for &x in &a {
        available[x] = false;
    }
    let mut b = vec![0; r];
    for i in (0..r).rev() {
        let pick = (a[i + 1] + 1..=2 * r + 1)
            .find(|&x| available[x])
            .ok_or_else(|| {
                Error::Internal(format!("no element left above a_{} = {}", i + 2, a[i + 1]))
            })?;
        available[pick] = false;
        b[i] = pick;
    }
    Ok(b)
}

/// Reading on the path with an extra up step prepended and steps numbered
/// `1..=2r+1`: `b_i` labels the down step matching the up step after `a_i`.
pub fn fill_by_matching(c: &CSeq) -> Result<Vec<usize>> {
    let mut steps = vec![Step::Up];
    steps.extend_from_slice(cseq_to_dyck(c).steps());
    let ups: Vec<usize> = steps
        .iter()
        .enumerate()
        .filter(|(_, s)| **s == Step::Up)
        .map(|(i, _)| i + 1)
        .collect();
    ups[1..]
        .iter()
        .map(|&u| matching_downstep(&steps, u))
        .collect()
}

pub fn cseq_to_pairform(c: &CSeq) -> Result<PairForm> {
    let b = fill_by_rule(c)?;
    PairForm::new(initiators_from_cseq(c), b)
        .map_err(|e| Error::Internal(format!("fill produced {e}")))
}

/// Zero-class 231-avoider of `[2r + 1]` built from `c`.
pub fn cseq_to_partition(c: &CSeq) -> Result<SetPartition> {
    Ok(cseq_to_pairform(c)?.to_partition())
}

/// Reads off `c_i = a_{i+2} - 2`, after checking the zero-class shape.
pub fn partition_to_cseq(p: &SetPartition) -> Result<CSeq> {
    let blocks = p.blocks();
    let (last, pairs) = blocks.split_last().expect("partitions have a block");
    if last.len() != 1 {
        return Err(Error::Domain(format!(
            "last block has length {}, expected a singleton",
            last.len()
        )));
    }
    if let Some((i, b)) = pairs.iter().enumerate().find(|(_, b)| b.len() != 2) {
        return Err(Error::Domain(format!(
            "block {} has length {}, expected every non-last block to have length 2",
            i + 1,
            b.len()
        )));
    }
    let m = statistic_m(p);
    if !m.is_empty() {
        return Err(Error::Domain(format!(
            "M is nonempty: {}",
            crate::partition::format_set(&m)
        )));
    }
    if Pattern::P231.is_contained_in(p.flatten().word()) {
        return Err(Error::Domain("flattening contains 231".into()));
    }
    let a: Vec<usize> = blocks.iter().map(|b| b[0]).collect();
    CSeq::new(a.iter().skip(2).map(|&x| x - 2).collect())
        .map_err(|e| Error::Internal(format!("zero-class shape gave {e}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(s: &str) -> DyckPath {
        s.parse().unwrap()
    }

    fn c(v: &[usize]) -> CSeq {
        CSeq::new(v.to_vec()).unwrap()
    }

    fn p(s: &str) -> SetPartition {
        s.parse().unwrap()
    }

    #[test]
    fn dyck_cseq_examples() {
        assert_eq!(dyck_to_cseq(&d("UUDD")).unwrap(), c(&[1]));
        assert_eq!(dyck_to_cseq(&d("UDUD")).unwrap(), c(&[2]));
        assert_eq!(dyck_to_cseq(&d("UDUDUDUD")).unwrap(), c(&[2, 4, 6]));
        assert_eq!(cseq_to_dyck(&c(&[1])), d("UUDD"));
        assert_eq!(cseq_to_dyck(&c(&[])), d("UD"));
        assert!(dyck_to_cseq(&d("")).is_err());
    }

    #[test]
    fn running_example() {
        let seq = c(&[1, 2, 4, 5, 7, 12, 13, 15]);
        let pf = cseq_to_pairform(&seq).unwrap();
        assert_eq!(pf.a(), &[1, 2, 3, 4, 6, 7, 9, 14, 15, 17]);
        assert_eq!(pf.b(), &[13, 12, 5, 11, 8, 10, 19, 16, 18]);
        assert_eq!(fill_by_matching(&seq).unwrap(), pf.b());
        let part = pf.to_partition();
        assert_eq!(
            part.to_string(),
            "1,13/2,12/3,5/4,11/6,8/7,10/9,19/14,16/15,18/17"
        );
        assert_eq!(partition_to_cseq(&part).unwrap(), seq);
        assert_eq!(cseq_to_dyck(&seq).to_string(), "UUUDUUDUDDDDUUDUDD");
    }

    #[test]
    fn small_cases() {
        assert_eq!(cseq_to_partition(&c(&[])).unwrap(), p("13-2"));
        // a = (1,2,3), B = {4,5}: b_2 = 4 (smallest above a_3 = 3), then b_1 = 5
        assert_eq!(cseq_to_partition(&c(&[1])).unwrap(), p("15-24-3"));
        assert!(Pattern::P231.is_contained_in(p("14-25-3").flatten().word()));
        assert_eq!(partition_to_cseq(&p("13-2")).unwrap(), c(&[]));
        assert_eq!(partition_to_cseq(&p("15-24-3")).unwrap(), c(&[1]));
    }

    #[test]
    fn partition_to_cseq_names_the_clause() {
        let msg = |s: &str| partition_to_cseq(&p(s)).unwrap_err().to_string();
        assert!(msg("13-24").contains("last block"));
        assert!(msg("134-2-5").contains("length 2"));
        assert!(msg("12-3").contains("M is nonempty"));
    }
}

//! Bijections: c-sequences, Dyck paths and the 231 zero class; the
//! `(K, L, inner)` decomposition; and the 321 zero class against Dyck paths
//! with no short descent.

pub mod cseq;
pub mod kl;
pub mod riordan;

pub use cseq::{
    cseq_to_dyck, cseq_to_pairform, cseq_to_partition, dyck_to_cseq, fill_by_matching,
    fill_by_rule, partition_to_cseq, PairForm,
};
pub use kl::{compose_kl, decompose_kl, parse_triple, KLTriple};
pub use riordan::{dyck_to_u321zero, u321zero_to_dyck, AxisFreeMotzkin, MotzkinStep};

use crate::dyck::DyckPath;
use crate::error::Result;

pub fn matching_downstep(d: &DyckPath, upstep: usize) -> Result<usize> {
    d.matching_downstep(upstep)
}

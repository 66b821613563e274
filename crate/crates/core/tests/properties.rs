//! Cross-module invariants: exhaustive where the space is small, randomized
//! with proptest where it is not.

use std::collections::BTreeSet;

use proptest::prelude::*;
use proptest::sample::subsequence;

use flatpart::biject::{
    compose_kl, cseq_to_dyck, cseq_to_pairform, cseq_to_partition, decompose_kl, dyck_to_cseq,
    dyck_to_u321zero, fill_by_matching, fill_by_rule, parse_triple, partition_to_cseq,
    u321zero_to_dyck, KLTriple,
};
use flatpart::enumerate::{
    bell, block_initiators, count_avoiders, count_avoiders_all, count_avoiders_all_parallel,
    descent_terminators, enumerate_partitions, refined_distribution, rl_minima, statistic_m,
    RgfCursor,
};
use flatpart::pattern::contains_generic;
use flatpart::{CSeq, DyckPath, Pattern, Permutation, Refinement, SetPartition, Step};

fn rgf_strategy(max_n: usize) -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(any::<u32>(), 1..=max_n).prop_map(|raw| {
        let mut rgf = Vec::with_capacity(raw.len());
        let mut m = 0usize;
        for (i, x) in raw.into_iter().enumerate() {
            let v = if i == 0 { 0 } else { x as usize % (m + 2) };
            m = m.max(v);
            rgf.push(v);
        }
        rgf
    })
}

fn partition_strategy(max_n: usize) -> impl Strategy<Value = SetPartition> {
    rgf_strategy(max_n).prop_map(|rgf| SetPartition::from_rgf(&rgf).unwrap())
}

/// Random Dyck path of semilength `r`: a coin decides each step that is not forced.
fn dyck_strategy(r: usize) -> impl Strategy<Value = DyckPath> {
    prop::collection::vec(any::<bool>(), 2 * r).prop_map(move |coins| {
        let (mut ups, mut downs) = (0, 0);
        let steps = coins
            .into_iter()
            .map(|coin| {
                let up = ups < r && (ups == downs || coin);
                if up {
                    ups += 1;
                    Step::Up
                } else {
                    downs += 1;
                    Step::Down
                }
            })
            .collect();
        DyckPath::new(steps).unwrap()
    })
}

fn permutation_strategy(max_n: usize) -> impl Strategy<Value = Vec<usize>> {
    (1..=max_n).prop_flat_map(|n| Just((1..=n).collect::<Vec<_>>()).prop_shuffle())
}

/// A 231 triple: zero-class inner from a random Dyck path, K a random subset
/// of `[2, n]`, L a random subset of K.
fn triple_231_strategy() -> impl Strategy<Value = KLTriple> {
    (0usize..=5, 0usize..=5)
        .prop_flat_map(|(r, k)| {
            let n = 2 * r + 1 + k;
            (
                dyck_strategy(r),
                subsequence((2..=n).collect::<Vec<_>>(), k),
                prop::collection::vec(any::<bool>(), k),
            )
        })
        .prop_map(|(d, kset, mask)| {
            let inner = if d.semilength() == 0 {
                "1".parse().unwrap()
            } else {
                cseq_to_partition(&dyck_to_cseq(&d).unwrap()).unwrap()
            };
            let l: BTreeSet<usize> = kset
                .iter()
                .zip(&mask)
                .filter(|(_, &b)| b)
                .map(|(&x, _)| x)
                .collect();
            KLTriple::new(kset.into_iter().collect(), l, inner, Pattern::P231).unwrap()
        })
}

#[test]
fn enumeration_sizes_are_bell_numbers() {
    let expected = [
        1u64, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975, 678570, 4213597,
    ];
    for (i, &b) in expected.iter().enumerate() {
        let n = i + 1;
        assert_eq!(bell(n), b);
        let mut cursor = RgfCursor::new(n).unwrap();
        let mut count = 0u64;
        while cursor.advance() {
            count += 1;
        }
        assert_eq!(count, b, "n = {n}");
    }
    assert_eq!(enumerate_partitions(7).unwrap().count(), 877);
}

#[test]
fn enumerated_partitions_are_distinct_and_standard() {
    for n in 1..=8 {
        let all: Vec<SetPartition> = enumerate_partitions(n).unwrap().collect();
        let distinct: BTreeSet<String> = all.iter().map(ToString::to_string).collect();
        assert_eq!(distinct.len(), all.len());
        for q in &all {
            assert_eq!(q.flatten().word()[0], 1);
            assert_eq!(SetPartition::new(q.blocks().to_vec()).as_ref(), Ok(q));
        }
    }
}

#[test]
fn parallel_count_agrees_with_serial() {
    for n in 1..=9 {
        let serial = count_avoiders_all(n).unwrap();
        for depth in [1, 2, 4] {
            assert_eq!(
                count_avoiders_all_parallel(n, depth).unwrap(),
                serial,
                "n = {n}, depth {depth}"
            );
        }
    }
}

#[test]
fn generic_count_agrees_with_specialised_scans() {
    for n in 1..=8 {
        let fast = count_avoiders_all(n).unwrap();
        for (pat, &f) in Pattern::ALL.iter().zip(&fast) {
            assert_eq!(count_avoiders(n, &pat.permutation()).unwrap(), f);
        }
    }
}

#[test]
fn refined_distributions_sum_to_totals() {
    for n in 1..=9 {
        let totals = count_avoiders_all(n).unwrap();
        for (pat, &t) in Pattern::ALL.iter().zip(&totals) {
            for stat in [Refinement::MSize, Refinement::FirstBlockLength] {
                let dist = refined_distribution(n, *pat, stat).unwrap();
                assert_eq!(dist.iter().sum::<u64>(), t, "{pat} n = {n} {stat:?}");
            }
        }
    }
}

#[test]
fn pair_form_structure_for_all_small_cseqs() {
    for r in 1..=7 {
        for d in DyckPath::all(r) {
            let c = dyck_to_cseq(&d).unwrap();
            let pf = cseq_to_pairform(&c).unwrap();
            assert_eq!(pf.r(), r);
            assert_eq!(pf.a()[0], 1);
            assert!(pf.a().windows(2).all(|w| w[0] < w[1]));
            let q = pf.to_partition();
            assert_eq!(q.n(), 2 * r + 1);
            assert_eq!(q.blocks().last().map(Vec::len), Some(1));
            assert_eq!(fill_by_rule(&c).unwrap(), fill_by_matching(&c).unwrap());
        }
    }
}

proptest! {
    #[test]
    fn partition_text_round_trips(q in partition_strategy(14)) {
        let slashed = q.to_string();
        prop_assert_eq!(&slashed.parse::<SetPartition>().unwrap(), &q);
        if q.n() <= 9 {
            let compact: String = q
                .blocks()
                .iter()
                .map(|b| b.iter().map(usize::to_string).collect::<String>())
                .collect::<Vec<_>>()
                .join("-");
            prop_assert_eq!(&compact.parse::<SetPartition>().unwrap(), &q);
        }
    }

    #[test]
    fn flatten_is_a_permutation_with_nested_statistics(q in partition_strategy(16)) {
        let w = q.flatten();
        let mut sorted = w.word().to_vec();
        sorted.sort_unstable();
        prop_assert_eq!(sorted, (1..=q.n()).collect::<Vec<_>>());
        prop_assert_eq!(w.word()[0], 1);
        let desc = descent_terminators(w.word());
        let init = block_initiators(&q);
        let rl = rl_minima(w.word());
        prop_assert!(desc.is_subset(&init));
        prop_assert!(init.is_subset(&rl));
        let m = statistic_m(&q);
        prop_assert_eq!(m, rl.difference(&desc).copied().collect::<BTreeSet<_>>());
    }

    #[test]
    fn fast_scans_agree_with_backtracking(w in permutation_strategy(12)) {
        for pat in Pattern::ALL {
            prop_assert_eq!(pat.is_contained_in(&w), contains_generic(&w, &pat.word()), "{}", pat);
        }
    }

    #[test]
    fn permutation_text_round_trips(w in permutation_strategy(14)) {
        let p = Permutation::new(w).unwrap();
        prop_assert_eq!(p.to_string().parse::<Permutation>().unwrap(), p);
    }

    #[test]
    fn dyck_cseq_partition_round_trip(d in (1usize..=14).prop_flat_map(dyck_strategy)) {
        let c = dyck_to_cseq(&d).unwrap();
        prop_assert_eq!(&cseq_to_dyck(&c), &d);
        prop_assert_eq!(&c.to_string().parse::<CSeq>().unwrap(), &c);
        prop_assert_eq!(&d.to_string().parse::<DyckPath>().unwrap(), &d);
        prop_assert_eq!(fill_by_rule(&c).unwrap(), fill_by_matching(&c).unwrap());
        let q = cseq_to_partition(&c).unwrap();
        prop_assert!(statistic_m(&q).is_empty());
        prop_assert!(!Pattern::P231.is_contained_in(q.flatten().word()));
        prop_assert_eq!(partition_to_cseq(&q).unwrap(), c);
    }

    #[test]
    fn kl_round_trip_from_triples(t in triple_231_strategy()) {
        let q = compose_kl(&t).unwrap();
        prop_assert_eq!(q.n(), t.n());
        prop_assert!(!Pattern::P231.is_contained_in(q.flatten().word()));
        prop_assert_eq!(statistic_m(&q).len(), t.k().len());
        prop_assert_eq!(&decompose_kl(&q, Pattern::P231).unwrap(), &t);
        prop_assert_eq!(parse_triple(&t.to_string(), Pattern::P231).unwrap(), t);
    }

    #[test]
    fn kl_round_trip_from_random_avoiders(q in partition_strategy(13)) {
        for pat in [Pattern::P231, Pattern::P321] {
            if pat.is_contained_in(q.flatten().word()) {
                prop_assert!(decompose_kl(&q, pat).is_err());
                continue;
            }
            let t = decompose_kl(&q, pat).unwrap();
            prop_assert_eq!(&compose_kl(&t).unwrap(), &q);
        }
    }

    #[test]
    fn u321_round_trip_on_random_zero_class(q in partition_strategy(14)) {
        let zero = statistic_m(&q).is_empty() && !Pattern::P321.is_contained_in(q.flatten().word());
        match u321zero_to_dyck(&q) {
            Ok(d) => {
                prop_assert!(zero);
                prop_assert!(d.has_no_short_descent());
                prop_assert_eq!(d.semilength(), q.n() - 1);
                prop_assert_eq!(dyck_to_u321zero(&d).unwrap(), q);
            }
            Err(_) => prop_assert!(!zero),
        }
    }
}

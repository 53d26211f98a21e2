use proptest::prelude::*;

use dskp::pareto::{ParetoSet, WpPair};

fn pairs() -> impl Strategy<Value = Vec<(u64, u64)>> {
    prop::collection::vec((0u64..40, 0u64..40), 0..12)
}

fn set(ps: &[(u64, u64)]) -> ParetoSet {
    ParetoSet::from_pairs(ps.iter().map(|&(w, a)| WpPair::new(w, a)).collect())
}

/// Undominated pairs of a raw list, by definition.
fn maxima(raw: &[(u64, u64)]) -> Vec<(u64, u64)> {
    let mut out: Vec<(u64, u64)> = raw
        .iter()
        .copied()
        .filter(|&(w, a)| {
            !raw.iter()
                .any(|&(w2, a2)| w2 <= w && a2 >= a && (w2 < w || a2 > a))
        })
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

#[derive(Debug, Clone)]
enum Op {
    Insert(u64, u64),
    Merge(Vec<(u64, u64)>),
    CrossSum(Vec<(u64, u64)>, u64),
    Shift(u64, u64, u64),
    Filter(u64),
}

fn op() -> impl Strategy<Value = Op> {
    prop_oneof![
        (0u64..60, 0u64..60).prop_map(|(w, a)| Op::Insert(w, a)),
        pairs().prop_map(Op::Merge),
        (pairs(), 0u64..80).prop_map(|(p, c)| Op::CrossSum(p, c)),
        (0u64..10, 0u64..10, 0u64..80).prop_map(|(w, a, c)| Op::Shift(w, a, c)),
        (0u64..80).prop_map(Op::Filter),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 10_000, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn operation_sequences_keep_an_exact_antichain(ops in prop::collection::vec(op(), 1..8)) {
        let mut s = ParetoSet::new();
        let mut model: Vec<(u64, u64)> = Vec::new();
        for op in ops {
            match op {
                Op::Insert(w, a) => {
                    s.insert(WpPair::new(w, a));
                    model.push((w, a));
                }
                Op::Merge(p) => {
                    s.merge_into(&set(&p));
                    model.extend(p);
                }
                Op::CrossSum(p, cap) => {
                    s = s.cross_sum(&set(&p), cap);
                    let mut next = Vec::new();
                    for &(w, a) in &model {
                        for &(w2, a2) in &p {
                            if w + w2 <= cap {
                                next.push((w + w2, a + a2));
                            }
                        }
                    }
                    model = next;
                }
                Op::Shift(dw, da, cap) => {
                    s = s.shifted(dw, da, None, cap);
                    model = model
                        .iter()
                        .map(|&(w, a)| (w + dw, a + da))
                        .filter(|&(w, _)| w <= cap)
                        .collect();
                }
                Op::Filter(cap) => {
                    s.filter_capacity(cap);
                    model.retain(|&(w, _)| w <= cap);
                }
            }
            prop_assert!(s.is_antichain());
            prop_assert_eq!(s.pairs(), maxima(&model));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 500, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn cross_sum_is_commutative_and_associative(a in pairs(), b in pairs(), c in pairs(), cap in 0u64..120) {
        let (a, b, c) = (set(&a), set(&b), set(&c));
        prop_assert_eq!(a.cross_sum(&b, cap).pairs(), b.cross_sum(&a, cap).pairs());
        prop_assert_eq!(
            a.cross_sum(&b, cap).cross_sum(&c, cap).pairs(),
            a.cross_sum(&b.cross_sum(&c, cap), cap).pairs()
        );
    }

    #[test]
    fn merge_is_union_of_maxima(a in pairs(), b in pairs()) {
        let mut all = a.clone();
        all.extend(&b);
        prop_assert_eq!(set(&a).merge(&set(&b)).pairs(), maxima(&all));
    }

    #[test]
    fn large_cross_sums_match_maxima(a in prop::collection::vec((0u64..30, 0u64..30), 0..30),
                                     b in prop::collection::vec((0u64..30, 0u64..30), 0..30)) {
        // enough pairs to take the dense-table path
        let (sa, sb) = (set(&a), set(&b));
        let mut raw = Vec::new();
        for x in sa.iter() {
            for y in sb.iter() {
                if x.weight + y.weight <= 45 {
                    raw.push((x.weight + y.weight, x.profit + y.profit));
                }
            }
        }
        prop_assert_eq!(sa.cross_sum(&sb, 45).pairs(), maxima(&raw));
    }
}

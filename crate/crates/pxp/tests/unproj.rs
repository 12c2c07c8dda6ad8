use proptest::prelude::*;

use pxp::unproj::{
    euler_chain, node_count, node_count_raw, solve_b, tj_classes, Divisor, FamilyFormat, PfaffianModel,
    RefKind, TJFormat,
};
use pxp::{rat, Rational};

fn divisor() -> Divisor {
    Divisor {
        plane_weights: [1, 1, 1],
        generator_degrees: [1, 1, 2, 2],
    }
}

/// `b` with all entries integers or all half-integers, some repeated.
fn grading() -> impl Strategy<Value = [Rational; 5]> {
    (prop::bool::ANY, prop::collection::vec(-2i64..=5, 3), prop::collection::vec(0usize..3, 5)).prop_map(
        |(half, pool, pick)| {
            let mut b: [Rational; 5] = std::array::from_fn(|i| {
                let v = pool[pick[i]];
                if half {
                    rat(2 * v + 1, 2)
                } else {
                    rat(v, 1)
                }
            });
            b.sort();
            b
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn solve_b_recovers_grading(b in grading()) {
        let m = PfaffianModel::new(b.clone(), vec![1; 7], divisor()).unwrap();
        let known: Vec<((usize, usize), i64)> = (1..=5)
            .flat_map(|i| (i + 1..=5).map(move |j| (i, j)))
            .map(|(i, j)| ((i, j), m.m(i, j)))
            .collect();
        prop_assert_eq!(solve_b(&known).unwrap(), b.clone());
        // the eight entries a projection provides are enough
        let eight: Vec<_> = known.iter().copied().filter(|((i, j), _)| !((*i, *j) == (2, 3) || (*i, *j) == (4, 5))).collect();
        prop_assert_eq!(solve_b(&eight).unwrap(), b);
    }

    #[test]
    fn degree_identities(b in grading()) {
        let m = PfaffianModel::new(b, vec![1; 7], divisor()).unwrap();
        for i in 1..=5 {
            prop_assert_eq!(m.sigma(i) + m.pf(i), m.adjunction());
        }
        let pf_sum: i64 = m.pf_degrees().iter().sum();
        prop_assert_eq!(2 * pf_sum, 4 * m.adjunction());
    }

    #[test]
    fn node_counts_constant_on_classes(b in grading()) {
        let m = PfaffianModel::new(b, vec![1; 7], divisor()).unwrap();
        for class in tj_classes(&m) {
            let first = node_count_raw(&m, class[0]);
            for f in &class {
                prop_assert_eq!(node_count_raw(&m, *f), first.clone());
            }
        }
    }

    #[test]
    fn classes_partition_formats(b in grading()) {
        let m = PfaffianModel::new(b, vec![1; 7], divisor()).unwrap();
        let mut all: Vec<TJFormat> = tj_classes(&m).into_iter().flatten().collect();
        all.sort();
        prop_assert_eq!(all, { let mut v = TJFormat::all(); v.sort(); v });
    }

    #[test]
    fn euler_differences(e in -300i64..0, nodes in prop::collection::vec(0u64..60, 2..6), n0 in 0u64..40) {
        let recs: Vec<_> = nodes.iter().map(|&n| (FamilyFormat::LowCodim("f".into()), n)).collect();
        for kind in [RefKind::GenericY, RefKind::KnownFamily { nodes: n0 }] {
            let chain = euler_chain(e, kind, &recs);
            for a in &chain {
                for c in &chain {
                    prop_assert_eq!(a.euler - c.euler, 2 * (a.nodes as i64 - c.nodes as i64));
                }
            }
        }
        let known = euler_chain(e, RefKind::KnownFamily { nodes: n0 }, &[(FamilyFormat::LowCodim("x".into()), n0)]);
        prop_assert_eq!(known[0].euler, e);
    }
}

#[test]
fn straight_model_counts() {
    // all b = 1/2 on P(1^7): Y_{2^5}, and every Tom has the same count, as does every Jerry
    let b: [Rational; 5] = std::array::from_fn(|_| rat(1, 2));
    let d = Divisor {
        plane_weights: [1, 1, 1],
        generator_degrees: [1, 1, 1, 1],
    };
    let m = PfaffianModel::new(b, vec![1; 7], d).unwrap();
    assert_eq!(m.pf_degrees(), [2; 5]);
    let toms: Vec<u64> = (1..=5).map(|i| node_count(&m, TJFormat::Tom(i)).unwrap()).collect();
    assert!(toms.windows(2).all(|w| w[0] == w[1]));
    assert!(pxp::unproj::higher_embedding_diagnostic(&m, TJFormat::Tom(1)).is_empty());
}

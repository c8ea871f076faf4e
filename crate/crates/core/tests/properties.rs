use hsig_core::combinat::{dominance_leq, kostka, partitions};
use hsig_core::{CharacterTable, Multisegment, Rational, Segment};
use proptest::prelude::*;

/// Up to six segments, half-integral starts in `[-3, 3]`, total size <= 12.
fn multisegment() -> impl Strategy<Value = Multisegment> {
    prop::collection::vec((-6i64..=6, 1usize..=4), 1..=6).prop_map(|raw| {
        let mut size = 0;
        let segs = raw
            .into_iter()
            .filter(|&(_, len)| {
                size += len;
                size <= 12
            })
            .map(|(num, len)| Segment::new(Rational::new(num, 2).unwrap(), len))
            .collect();
        Multisegment::new(segs)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn zelevinsky_is_an_involution(m in multisegment()) {
        let dual = m.zelevinsky();
        prop_assert_eq!(dual.content(), m.content());
        prop_assert_eq!(dual.zelevinsky(), m);
    }

    #[test]
    fn rendering_round_trips(m in multisegment()) {
        prop_assert_eq!(m.to_string().parse::<Multisegment>().unwrap(), m);
    }
}

#[test]
fn orthogonality() {
    for n in 1..=10 {
        let t = CharacterTable::new(n).unwrap();
        let labels = t.labels();
        let order: i128 = (1..=n as i128).product();
        let k = labels.len();
        for a in 0..k {
            for b in 0..k {
                let rows: i128 = (0..k)
                    .map(|c| {
                        labels[c].class_size() as i128
                            * t.value(a, c) as i128
                            * t.value(b, c) as i128
                    })
                    .sum();
                assert_eq!(rows, if a == b { order } else { 0 }, "rows N={n}");
                let cols: i128 = (0..k)
                    .map(|l| t.value(l, a) as i128 * t.value(l, b) as i128)
                    .sum();
                let expect = if a == b {
                    labels[a].centralizer_order() as i128
                } else {
                    0
                };
                assert_eq!(cols, expect, "columns N={n}");
            }
        }
    }
}

#[test]
fn kostka_support_is_dominance() {
    for n in 1..=8 {
        let ps = partitions(n).unwrap();
        for l in &ps {
            for m in &ps {
                let positive = kostka(l, m).unwrap() > 0;
                assert_eq!(positive, dominance_leq(m, l).unwrap(), "K_{l},{m}");
            }
        }
    }
}

#[test]
fn dimensions_square_to_the_group_order() {
    for n in 1..=12 {
        let total: u128 = partitions(n)
            .unwrap()
            .iter()
            .map(|p| (p.dim() as u128).pow(2))
            .sum();
        assert_eq!(total, (1..=n as u128).product::<u128>(), "N={n}");
    }
}

use std::cmp::Ordering;

use num_integer::Integer;
use proptest::prelude::*;
use zigzag_core::farey::{enumerate_tree, frac, fractions_up_to, parents, relatives};
use zigzag_core::kneading::{
    decorate, edge_body, farey_concat, itinerary_of_one, principal_from_body, principal_kneading,
    twisted_compare, Decoration, Law, SignData, Symbol,
};
use zigzag_core::Fraction;

fn interior(max_den: u64) -> impl Strategy<Value = Fraction> {
    (3u64..max_den)
        .prop_flat_map(|b| (1..b, Just(b)))
        .prop_filter("reduced", |(a, b)| a.gcd(b) == 1)
        .prop_map(|(a, b)| frac(a, b))
}

#[test]
fn both_laws_rebuild_the_depth_ten_tree() {
    for m in 2..=4 {
        for row in enumerate_tree(10).unwrap() {
            for q in row {
                let direct = principal_kneading(m, &q).unwrap();
                let (l, r) = parents(&q).unwrap();
                if !(l.is_interior() && r.is_interior()) {
                    let body = edge_body(m, &q).unwrap();
                    let rebuilt = principal_from_body(m, body.entries(), Some(q.clone())).unwrap();
                    assert_eq!(rebuilt.entries(), direct.entries(), "m={m} q={q}");
                    continue;
                }
                let f = principal_kneading(m, &l).unwrap();
                let g = principal_kneading(m, &r).unwrap();
                for law in [Law::First, Law::Second] {
                    let cat = farey_concat(&f, &g, law).unwrap();
                    assert_eq!(cat.entries(), direct.entries(), "m={m} q={q} {law:?}");
                    assert_eq!(cat.q(), Some(&q));
                }
            }
        }
    }
}

#[test]
fn length_and_suffix() {
    for m in 2..=6u32 {
        for q in fractions_up_to(25) {
            let nu = principal_kneading(m, &q).unwrap();
            let b = q.den_usize().unwrap();
            assert_eq!(nu.len(), b + 1 + (m as usize % 2));
            assert_eq!(nu.entries()[0], Symbol::Interval(m));
            assert_eq!(nu.entries()[b - 1], Symbol::Interval(m - 1));
            assert_eq!(nu.entries()[b], Symbol::Critical(1));
        }
    }
}

/// `Φ(f) < Φ(g)` exactly when `It_f(1) <_E It_g(1)`.
#[test]
fn itineraries_are_ordered_like_q() {
    for m in 2..=5 {
        let signs = SignData::new(m).unwrap();
        let qs = fractions_up_to(14);
        let its: Vec<_> = qs
            .iter()
            .map(|q| itinerary_of_one(&principal_kneading(m, q).unwrap()).unwrap())
            .collect();
        for i in 0..qs.len() {
            for j in i + 1..qs.len() {
                let len = 4 * (qs[i].den_usize().unwrap() + qs[j].den_usize().unwrap());
                let order = twisted_compare(&its[i].prefix(len), &its[j].prefix(len), &signs);
                assert_eq!(order, Ok(Ordering::Less), "m={m} {} vs {}", qs[i], qs[j]);
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn concatenation_laws_hold(q in interior(200), m in 2u32..7) {
        let (l, r) = parents(&q).unwrap();
        prop_assume!(l.is_interior() && r.is_interior());
        let direct = principal_kneading(m, &q).unwrap();
        let f = principal_kneading(m, &l).unwrap();
        let g = principal_kneading(m, &r).unwrap();
        for law in [Law::First, Law::Second] {
            let cat = farey_concat(&f, &g, law).unwrap();
            prop_assert_eq!(cat.entries(), direct.entries());
        }
    }

    /// `hat(ν) <_E (m) w (m-1) <_E overline(ν)` on their common length.
    #[test]
    fn decorations_bracket_the_principal_word(q in interior(200), m in 2u32..7) {
        let signs = SignData::new(m).unwrap();
        let nu = principal_kneading(m, &q).unwrap();
        let b = q.den_usize().unwrap();
        let hat = decorate(&nu, Decoration::Hat).unwrap();
        let over = decorate(&nu, Decoration::Overline).unwrap();
        let mid = &nu.entries()[..b];
        prop_assert_eq!(twisted_compare(&hat.entries()[..b], mid, &signs), Ok(Ordering::Less));
        prop_assert_eq!(twisted_compare(mid, &over.entries()[..b], &signs), Ok(Ordering::Less));
    }

    /// The children of `q` bracket it in the twisted order.
    #[test]
    fn children_bracket_the_parent(q in interior(60), m in 2u32..6) {
        let signs = SignData::new(m).unwrap();
        let rel = relatives(&q).unwrap();
        let it = |x: &Fraction| itinerary_of_one(&principal_kneading(m, x).unwrap()).unwrap();
        let len = 4 * rel.right_child.den_usize().unwrap().max(rel.left_child.den_usize().unwrap());
        let (l, c, r) = (it(&rel.left_child).prefix(len), it(&q).prefix(len), it(&rel.right_child).prefix(len));
        prop_assert_eq!(twisted_compare(&l, &c, &signs), Ok(Ordering::Less));
        prop_assert_eq!(twisted_compare(&c, &r, &signs), Ok(Ordering::Less));
    }
}

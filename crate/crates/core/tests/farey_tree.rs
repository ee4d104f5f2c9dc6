use num_integer::Integer;
use proptest::prelude::*;
use zigzag_core::farey::{
    enumerate_level, enumerate_tree, frac, fractions_up_to, level, mediant, parents, path_to_root,
    relatives, Turn,
};
use zigzag_core::Fraction;

fn interior() -> impl Strategy<Value = Fraction> {
    (2u64..500)
        .prop_flat_map(|b| (1..b, Just(b)))
        .prop_filter("reduced", |(a, b)| a.gcd(b) == 1)
        .prop_map(|(a, b)| frac(a, b))
}

proptest! {
    #[test]
    fn parents_are_compatible_and_sum_to_q(q in interior()) {
        let (l, r) = parents(&q).unwrap();
        prop_assert!(l < q && q < r);
        prop_assert!(l.is_compatible(&r));
        prop_assert_eq!(mediant(&l, &r).unwrap(), q);
    }

    #[test]
    fn path_length_is_the_level(q in interior()) {
        let path = path_to_root(&q).unwrap();
        prop_assert_eq!(path.len(), level(&q).unwrap());
        prop_assert_eq!(&path[0].vertex, &frac(1, 2));
        prop_assert_eq!(&path.last().unwrap().vertex, &q);
        prop_assert!(path.last().unwrap().turn.is_none());
        // a left turn goes down, a right turn goes up
        for w in path.windows(2) {
            match w[0].turn {
                Some(Turn::L) => prop_assert!(w[1].vertex < w[0].vertex),
                Some(Turn::R) => prop_assert!(w[1].vertex > w[0].vertex),
                None => prop_assert!(false),
            }
        }
    }

    #[test]
    fn children_have_q_as_a_parent(q in interior()) {
        let rel = relatives(&q).unwrap();
        prop_assert_eq!(parents(&rel.left_child).unwrap().1, q.clone());
        prop_assert_eq!(parents(&rel.right_child).unwrap().0, q.clone());
        prop_assert_eq!(level(&rel.left_child).unwrap(), rel.level + 1);
    }

    #[test]
    fn parent_denominators_are_smaller(q in interior()) {
        let (l, r) = parents(&q).unwrap();
        prop_assert!(l.den() < q.den() && r.den() < q.den());
        // the ancestor denominators of q are bounded by den(q) - 1
        prop_assert_eq!(l.den() + r.den(), q.den().clone());
    }
}

#[test]
fn levels_partition_the_tree() {
    let tree = enumerate_tree(10).unwrap();
    let total: usize = tree.iter().map(Vec::len).sum();
    assert_eq!(total, 1023);
    for (i, row) in tree.iter().enumerate() {
        assert_eq!(row.len(), 1 << i);
        assert!(row.windows(2).all(|w| w[0] < w[1]));
        assert!(row.iter().all(|q| level(q).unwrap() == i + 1));
    }
}

#[test]
fn every_small_fraction_appears_in_the_tree() {
    let tree = enumerate_tree(12).unwrap();
    for q in fractions_up_to(13) {
        let l = level(&q).unwrap();
        assert!(tree[l - 1].contains(&q), "{q}");
    }
}

#[test]
fn level_caps() {
    assert!(enumerate_level(0).is_err());
    assert!(enumerate_level(25).is_err());
}

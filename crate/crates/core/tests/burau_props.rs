use num_traits::One;
use proptest::prelude::*;
use zigzag_core::burau::{
    burau_at_minus_one, full_twist, match_digit, reduced_burau, search_braid, symplectic_poly,
    BraidWord, DigitMatch, LaurentMatrix,
};
use zigzag_core::farey::frac;
use zigzag_core::{IntPolynomial, LaurentPoly, SmallMatrix};

fn word(n: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    let gen = (1..n as i32).prop_flat_map(|i| prop_oneof![Just(i), Just(-i)]);
    prop::collection::vec(gen, 0..max_len).prop_map(move |l| BraidWord::new(n, l).unwrap())
}

fn sandwich(n: usize, pre: &BraidWord, mid: &[i32], post: &BraidWord) -> LaurentMatrix {
    let w = pre
        .then(&BraidWord::new(n, mid.to_vec()).unwrap())
        .unwrap()
        .then(post)
        .unwrap();
    reduced_burau(&w)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn adjacent_braid_relation(n in 3usize..7, i in 1i32..5, pre in word(6, 4), post in word(6, 4)) {
        prop_assume!((i as usize) < n - 1);
        let (pre, post) = (BraidWord::new(n, clip(pre.letters(), n)).unwrap(), BraidWord::new(n, clip(post.letters(), n)).unwrap());
        prop_assert_eq!(
            sandwich(n, &pre, &[i, i + 1, i], &post),
            sandwich(n, &pre, &[i + 1, i, i + 1], &post)
        );
    }

    #[test]
    fn distant_generators_commute(n in 4usize..7, i in 1i32..6, j in 1i32..6, pre in word(6, 3)) {
        prop_assume!((i - j).abs() >= 2 && (i.max(j) as usize) < n);
        let pre = BraidWord::new(n, clip(pre.letters(), n)).unwrap();
        let empty = BraidWord::new(n, vec![]).unwrap();
        prop_assert_eq!(sandwich(n, &pre, &[i, j], &empty), sandwich(n, &pre, &[j, i], &empty));
    }

    #[test]
    fn inverse_words_give_inverse_matrices(w in word(5, 8)) {
        let both = w.then(&w.inverse()).unwrap();
        prop_assert_eq!(reduced_burau(&both), LaurentMatrix::identity(4));
    }

    #[test]
    fn determinant_is_a_signed_monomial(w in word(4, 8)) {
        let det = reduced_burau(&w).det().unwrap();
        prop_assert!(det.is_signed_monomial(), "{}", det);
    }

    #[test]
    fn specialization_commutes_with_products(w in word(5, 8)) {
        let full = reduced_burau(&w);
        let at = burau_at_minus_one(&w);
        for i in 0..4 {
            for j in 0..4 {
                let v: i64 = full.get(i, j).at_minus_one().try_into().unwrap();
                prop_assert_eq!(v, *at.get(i, j));
            }
        }
    }

    #[test]
    fn symplectic_poly_shape(w in word(6, 10)) {
        let chi = symplectic_poly(&w);
        prop_assert_eq!(chi.degree(), Some(5));
        prop_assert!(chi.coeff(0) == 1.into() || chi.coeff(0) == (-1).into());
    }

    #[test]
    fn full_twist_is_central(w in word(5, 6)) {
        let tw = full_twist(5).unwrap();
        prop_assert_eq!(
            reduced_burau(&tw.then(&w).unwrap()),
            reduced_burau(&w.then(&tw).unwrap())
        );
    }
}

fn clip(letters: &[i32], n: usize) -> Vec<i32> {
    letters
        .iter()
        .copied()
        .filter(|l| (l.unsigned_abs() as usize) < n)
        .collect()
}

#[test]
fn full_twist_is_a_scalar() {
    for n in 2..=8 {
        let b = reduced_burau(&full_twist(n).unwrap());
        let zn = LaurentPoly::monomial(1.into(), n as i64);
        let expected = LaurentMatrix::identity(n - 1).map(|x| x.clone() * zn.clone());
        assert_eq!(b, expected, "n={n}");
    }
}

#[test]
fn full_twist_at_minus_one_for_odd_strands() {
    for n in [3, 5, 7] {
        let b = burau_at_minus_one(&full_twist(n).unwrap());
        assert_eq!(b, SmallMatrix::identity(n - 1).map(|x| -x));
    }
}

#[test]
fn search_fixture_for_the_golden_map() {
    let w = search_braid(2, &frac(1, 2), 8).unwrap().unwrap();
    assert_eq!(w.to_string(), "1,1,1,1,1,2");
    assert_eq!(match_digit(&w, 2, &frac(1, 2)).unwrap(), DigitMatch::Minus);
    assert_eq!(
        symplectic_poly(&w),
        IntPolynomial::from_i64s(&[-1, -2, 2, 1])
    );
}

#[test]
fn odd_strand_twist_flips_the_match() {
    // (2, 1/3) lives on five strands, where the full twist is -I
    let w = search_braid(2, &frac(1, 3), 6).unwrap().unwrap();
    let before = match_digit(&w, 2, &frac(1, 3)).unwrap();
    assert_ne!(before, DigitMatch::None);
    let after = match_digit(&full_twist(5).unwrap().then(&w).unwrap(), 2, &frac(1, 3)).unwrap();
    assert_eq!(after, before.flipped());
}

#[test]
fn laurent_identity() {
    assert!(LaurentPoly::one().is_signed_monomial());
}

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use zigzag_core::farey::{enumerate_tree, frac, fractions_up_to, parents};
use zigzag_core::intpoly::digit_polynomial;
use zigzag_core::invariants::{
    double_cover, double_cover_for, edge_family_check, monotonicity_scan,
    rotation_additivity_check, singularity_report, surface_polynomials, zeta_prefix,
    zeta_prefix_with_oracle, SignBranch,
};
use zigzag_core::IntPolynomial;

#[test]
fn golden_zeta_series() {
    let z = zeta_prefix(2, &frac(1, 2), 6).unwrap();
    let c: Vec<i64> = z
        .series
        .coeffs()
        .iter()
        .map(|x| x.to_i64().unwrap())
        .collect();
    assert_eq!(&c[..5], &[1, 2, 6, 15, 40]);
    assert_eq!(z.fixed_counts[..4], [2, 8, 17, 48]);
}

#[test]
fn zeta_matches_traces_and_fixed_points() {
    for m in [2, 3] {
        for q in fractions_up_to(7) {
            let z = zeta_prefix_with_oracle(m, &q, 10, 4).unwrap();
            assert_eq!(z.traces.len(), 10);
            assert_eq!(z.fixed_counts.len(), 4);
            assert!(z.series.coeff(0) == &BigInt::from(1));
        }
    }
}

#[test]
fn surface_polynomials_factor() {
    for m in 2..=4 {
        for q in fractions_up_to(12) {
            let s = surface_polynomials(m, &q).unwrap();
            assert_eq!(&s.symplectic * &s.puncture, s.homology);
            assert_eq!(
                s.chi_minus,
                s.chi_plus.negate_variable().normalize_sign_unit()
            );
            let n = q.den_usize().unwrap() + 2;
            if n % 2 == 0 {
                assert!(s.homology.eval(&BigInt::from(-1)).is_zero());
            }
            assert!(!s.homology.eval(&BigInt::from(1)).is_zero());
        }
    }
}

#[test]
fn signed_branch_follows_the_sign_at_zero() {
    // f(0) = 0 exactly for even m, where the signed matrix keeps D_f(t)
    for m in 2..=5 {
        for q in fractions_up_to(9) {
            let s = surface_polynomials(m, &q).unwrap();
            let expected = if m % 2 == 0 {
                SignBranch::Plus
            } else {
                SignBranch::Minus
            };
            if s.chi_plus != s.chi_minus {
                assert_eq!(s.signed_branch, expected, "m={m} q={q}");
            }
        }
    }
}

#[test]
fn golden_surface_data() {
    let s = surface_polynomials(2, &frac(1, 2)).unwrap();
    assert_eq!(s.symplectic, IntPolynomial::from_i64s(&[1, -3, 1]));
    let cover = double_cover(2, &frac(1, 2)).unwrap();
    assert_eq!((cover.genus, cover.punctures), (1, 6));
    let cover = double_cover(2, &frac(1, 3)).unwrap();
    assert_eq!((cover.genus, cover.punctures), (2, 6));
    for n in 3..40 {
        let c = double_cover_for(n);
        // Riemann-Hurwitz for a double cover of the sphere branched at the
        // odd-pronged points
        let branch = if n % 2 == 1 { n + 1 } else { n };
        assert_eq!(2 * c.genus + 2, branch);
        assert_eq!(c.homology_rank_split, (n, n - 1));
    }
}

#[test]
fn rotation_routes_agree() {
    for m in 2..=5 {
        for q in fractions_up_to(20) {
            let r = singularity_report(m, &q).unwrap();
            assert_eq!(r.permutation_rotation, r.rotation_at_infinity);
            assert_eq!(r.euler_poincare_sum, 4);
        }
    }
}

#[test]
fn additivity_on_the_tree() {
    for row in enumerate_tree(6).unwrap() {
        for q in row {
            let (l, r) = parents(&q).unwrap();
            if l.is_interior() && r.is_interior() {
                assert!(rotation_additivity_check(3, &l, &r).unwrap().holds, "{q}");
            }
        }
    }
}

#[test]
fn small_scans_are_monotone() {
    for m in 2..=4 {
        let r = monotonicity_scan(m, 12).unwrap();
        assert!(r.violations.is_empty(), "{:?}", r.violations);
        assert_eq!(r.points.len(), fractions_up_to(12).len());
        assert!(r.gaps().iter().all(|g| *g > 0.0));
    }
}

#[test]
fn edge_families_approach_the_bounds() {
    let r = edge_family_check(2, 30).unwrap();
    assert!(r.holds());
    assert!(r.last_left > r.infimum && r.last_right < r.supremum);
    let d = digit_polynomial(2, &frac(1, 2)).unwrap();
    assert_eq!(d.degree(), Some(3));
}

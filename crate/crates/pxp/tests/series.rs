use proptest::prelude::*;

use pxp::format::{format_numerator, segre_oracle, weight_matrix, FormatWeights};
use pxp::qseries::{degree_d3, expand, h2_coefficient, palindrome_check, recover_numerator, RationalForm, STABILIZATION_MARGIN};
use pxp::{int, rat, Poly, Rational};

fn small_format() -> impl Strategy<Value = FormatWeights> {
    (1u32..=2, 0u32..=2, 0u32..=2, 0u32..=2, 0u32..=2)
        .prop_map(|(a, r2, r3, c2, c3)| FormatWeights::new(a, (r2, r3), (c2, c3)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn recover_inverts_expand(cs in prop::collection::vec(-4i64..=4, 1..7), denom in prop::collection::vec(1u32..=4, 1..5)) {
        let p = Poly::from_ints(&cs);
        let f = RationalForm::new(p.clone(), denom.clone());
        let bound = cs.len();
        let s = expand(&f, bound + STABILIZATION_MARGIN + 2);
        prop_assert_eq!(recover_numerator(&s, &f.denom, bound).unwrap(), p);
    }

    #[test]
    fn oracle_agrees_with_numerator(fw in small_format()) {
        let wm = weight_matrix(&fw);
        let denom = wm.entries();
        let num = format_numerator(&fw).unwrap();
        let order = 25;
        let direct = segre_oracle(&fw, order);
        let via = expand(&RationalForm::new(num, denom), order);
        prop_assert_eq!(direct.coeffs(), via.coeffs());
    }

    #[test]
    fn format_numerators_are_palindromic(fw in small_format()) {
        let wm = weight_matrix(&fw);
        let num = format_numerator(&fw).unwrap();
        let s: u32 = wm.entries().iter().sum();
        prop_assert!(palindrome_check(&num, (2 * s / 3) as usize));
    }

    #[test]
    fn h2_ignores_cancellation(shared in prop::collection::vec(1i64..=9, 0..4),
                               n in prop::collection::vec(1i64..=9, 0..5),
                               d in prop::collection::vec(1i64..=9, 0..5)) {
        let to = |v: &[i64]| v.iter().map(|&x| int(x)).collect::<Vec<Rational>>();
        let mut nn = n.clone();
        nn.extend(&shared);
        let mut dd = d.clone();
        dd.extend(&shared);
        prop_assert_eq!(h2_coefficient(&to(&nn), &to(&dd)), h2_coefficient(&to(&n), &to(&d)));
    }
}

#[test]
fn hypersurface_degrees() {
    // X_d in P^4 has degree d; X_6 in P(1^4, 2) has degree 6/2
    for d in 1..8 {
        let f = RationalForm::new(Poly::from_ints(&[1]).mul_one_minus(d), vec![1; 5]);
        assert_eq!(degree_d3(&f).unwrap(), int(d as i64));
    }
    let f = RationalForm::new(Poly::from_ints(&[1]).mul_one_minus(6), vec![1, 1, 1, 1, 2]);
    assert_eq!(degree_d3(&f).unwrap(), int(3));
    // X_{2,2} in P^5 has degree 4, X_{3,3} in P(1^4,2,2) has 9/4
    let f = RationalForm::new(Poly::one().mul_one_minus(2).mul_one_minus(2), vec![1; 6]);
    assert_eq!(degree_d3(&f).unwrap(), int(4));
    let f = RationalForm::new(Poly::one().mul_one_minus(3).mul_one_minus(3), vec![1, 1, 1, 1, 2, 2]);
    assert_eq!(degree_d3(&f).unwrap(), rat(9, 4));
}

#[test]
fn segre_degree_six() {
    // P2 x P2 in P^8 has degree 6 and dimension 4; X = F cut by one more
    // hyperplane has degree 6 as a 3-fold
    let fw = FormatWeights::new(1, (0, 0), (0, 0));
    let num = format_numerator(&fw).unwrap().mul_one_minus(1);
    let f = RationalForm::new(num, vec![1; 9]);
    assert_eq!(degree_d3(&f).unwrap(), int(6));
}

use optseq::constructions::half_shift;
use optseq::correlation::{
    auto_corr_via_support, auto_spectrum, cross_corr, cross_spectrum, fast_auto_spectrum, interleaved_corr_decompose,
};
use optseq::search::canonical_form;
use optseq::seq::{deinterleave, interleave, interleave2};
use optseq::verify::{
    predict_lemma10, predict_lemma10_half, predict_lemma11, predict_lemma11_half, predict_lemma12, predict_lemma8,
    predict_v, predict_w,
};
use optseq::BinarySequence;
use proptest::prelude::*;

fn sequence(periods: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = BinarySequence> {
    prop::collection::vec(0u8..2, periods).prop_map(|bits| BinarySequence::new(bits).unwrap())
}

fn pair(periods: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = (BinarySequence, BinarySequence)> {
    periods.prop_flat_map(|n| (sequence(n..=n), sequence(n..=n)))
}

fn odd_pair(max: usize) -> impl Strategy<Value = (BinarySequence, BinarySequence)> {
    (1..=max / 2).prop_flat_map(|h| pair(2 * h + 1..=2 * h + 1))
}

fn columns(t: usize, k: usize) -> impl Strategy<Value = Vec<BinarySequence>> {
    prop::collection::vec(sequence(k..=k), t..=t)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn shift_moves_correlation_argument((a, b) in pair(1..=64), m in -80i64..80, tau in -80i64..80) {
        prop_assert_eq!(cross_corr(&a.shift(m), &b, tau).unwrap(), cross_corr(&a, &b, tau - m).unwrap());
        prop_assert_eq!(cross_corr(&a, &b.shift(m), tau).unwrap(), cross_corr(&a, &b, tau + m).unwrap());
    }

    #[test]
    fn periodicity_and_reversal((a, b) in pair(1..=64), tau in 0i64..64) {
        let n = a.period() as i64;
        prop_assert_eq!(cross_corr(&a, &b, tau).unwrap(), cross_corr(&a, &b, tau + n).unwrap());
        prop_assert_eq!(cross_corr(&a, &b, tau).unwrap(), cross_corr(&b, &a, n - tau).unwrap());
    }

    #[test]
    fn complement_negates((a, b) in pair(1..=64), tau in 0i64..64) {
        let r = cross_corr(&a, &b, tau).unwrap();
        prop_assert_eq!(cross_corr(&a, &b.complement(), tau).unwrap(), -r);
        prop_assert_eq!(cross_corr(&a.complement(), &b, tau).unwrap(), -r);
    }

    #[test]
    fn auto_spectrum_is_shift_and_complement_invariant(a in sequence(1..=64), m in -70i64..70) {
        let r = auto_spectrum(&a);
        prop_assert_eq!(auto_spectrum(&a.shift(m)).values().to_vec(), r.values().to_vec());
        prop_assert_eq!(auto_spectrum(&a.complement()).values().to_vec(), r.values().to_vec());
    }

    #[test]
    fn spectrum_parity_and_bounds((a, b) in pair(1..=64)) {
        let n = a.period() as i64;
        for &r in cross_spectrum(&a, &b).unwrap().values() {
            prop_assert_eq!((r - n).rem_euclid(2), 0);
            prop_assert!(r.abs() <= n);
        }
        prop_assert_eq!(auto_spectrum(&a).values()[0], n);
    }

    #[test]
    fn support_formula_matches_direct(a in sequence(1..=96), tau in -100i64..100) {
        prop_assert_eq!(auto_corr_via_support(&a, tau), cross_corr(&a, &a, tau).unwrap());
    }

    #[test]
    fn difference_function_counts(a in sequence(1..=64)) {
        let report = optseq::classify::ads_of_sequence(&a);
        let k = report.k;
        prop_assert_eq!(report.diff_counts.iter().sum::<usize>(), k * k.saturating_sub(1));
        let r = auto_spectrum(&a);
        for w in 1..a.period() {
            prop_assert_eq!(r.values()[w], a.period() as i64 - 4 * (k as i64 - report.count(w) as i64));
        }
    }

    #[test]
    fn interleave_round_trip(t in 1usize..6, k in 1usize..12, seed in any::<u64>()) {
        let cols: Vec<BinarySequence> = (0..t)
            .map(|j| BinarySequence::from_word(seed.rotate_left(7 * j as u32), k).unwrap())
            .collect();
        let u = interleave(&cols).unwrap();
        prop_assert_eq!(u.period(), t * k);
        prop_assert_eq!(deinterleave(&u, t).unwrap(), cols);
    }

    #[test]
    fn pair_interleave_is_two_column_interleave((a, b) in pair(1..=40)) {
        prop_assert_eq!(interleave2(&a, &b).unwrap(), interleave(&[a, b]).unwrap());
    }

    #[test]
    fn column_decomposition_matches_brute_force(cols in (1usize..6, 1usize..10).prop_flat_map(|(t, k)| columns(t, k))) {
        let u = interleave(&cols).unwrap();
        let r = auto_spectrum(&u);
        for tau in 0..u.period() {
            prop_assert_eq!(interleaved_corr_decompose(&cols, tau as i64).unwrap(), r.values()[tau]);
        }
    }

    #[test]
    fn pair_cross_correlation(cols in (1usize..20).prop_flat_map(|k| columns(4, k))) {
        let [a, b, c, d] = <[BinarySequence; 4]>::try_from(cols).unwrap();
        let p = predict_lemma8(
            &cross_spectrum(&a, &c).unwrap(),
            &cross_spectrum(&b, &d).unwrap(),
            &cross_spectrum(&a, &d).unwrap(),
            &cross_spectrum(&b, &c).unwrap(),
        ).unwrap();
        let computed = cross_spectrum(&interleave2(&a, &b).unwrap(), &interleave2(&c, &d).unwrap()).unwrap();
        prop_assert_eq!(p.variants()[0].values.clone(), computed.values().to_vec());
    }

    #[test]
    fn shifted_self_pairs(a in sequence(1..=31), m in -40i64..40) {
        let ra = auto_spectrum(&a);
        let plain = auto_spectrum(&interleave2(&a, &a.shift(m)).unwrap());
        prop_assert_eq!(predict_lemma10(&ra, m).variants()[0].values.clone(), plain.values().to_vec());
        let flipped = auto_spectrum(&interleave2(&a, &a.complement().shift(m)).unwrap());
        prop_assert_eq!(predict_lemma11(&ra, m).variants()[0].values.clone(), flipped.values().to_vec());
    }

    #[test]
    fn half_shift_pairs((a, b) in odd_pair(31)) {
        let n = a.period();
        let m = half_shift(n);
        let ra = auto_spectrum(&a);
        let plain = auto_spectrum(&interleave2(&a, &a.shift(m)).unwrap());
        prop_assert_eq!(predict_lemma10_half(&ra).unwrap().variants()[0].values.clone(), plain.values().to_vec());
        let left = interleave2(&a, &a.complement().shift(m)).unwrap();
        prop_assert_eq!(predict_lemma11_half(&ra).unwrap().variants()[0].values.clone(), auto_spectrum(&left).values().to_vec());
        let right = interleave2(&b, &b.shift(m)).unwrap();
        let zero = predict_lemma12(n).unwrap();
        prop_assert_eq!(zero.variants()[0].values.clone(), cross_spectrum(&left, &right).unwrap().values().to_vec());
        prop_assert_eq!(zero.variants()[0].values.clone(), cross_spectrum(&right, &left).unwrap().values().to_vec());
    }

    #[test]
    fn v_prediction_is_exact((a, b) in odd_pair(31)) {
        let v = optseq::constructions::construct_v(&a, &b).unwrap();
        let p = predict_v(&auto_spectrum(&a), &auto_spectrum(&b)).unwrap();
        prop_assert_eq!(p.variants()[0].values.clone(), auto_spectrum(&v).values().to_vec());
    }

    #[test]
    fn w_decomposition_branch_is_exact((a, b) in odd_pair(15), eta in -20i64..20) {
        let w = optseq::constructions::construct_w(&a, &b, optseq::constructions::WParams::new(eta)).unwrap();
        let p = predict_w(
            &auto_spectrum(&a),
            &auto_spectrum(&b),
            &cross_spectrum(&a, &b).unwrap(),
            &cross_spectrum(&b, &a).unwrap(),
            eta,
        ).unwrap();
        let branch = p.variant_where("branch", "decomposition").unwrap();
        prop_assert_eq!(branch.values.clone(), auto_spectrum(&w).values().to_vec());
    }

    #[test]
    fn canonical_form_is_an_invariant(a in sequence(1..=24), m in 0i64..24) {
        let c = canonical_form(&a);
        prop_assert_eq!(canonical_form(&c), c.clone());
        prop_assert_eq!(canonical_form(&a.shift(m)), c.clone());
        prop_assert_eq!(auto_spectrum(&c).values().to_vec(), auto_spectrum(&a).values().to_vec());
    }

    #[test]
    fn fast_path_agrees(a in sequence(1..=700)) {
        prop_assert_eq!(fast_auto_spectrum(&a).values().to_vec(), auto_spectrum(&a).values().to_vec());
    }
}

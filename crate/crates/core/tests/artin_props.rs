mod common;

use artin_convex::artin::{
    abelianized_image, check_convexity, oracle_for, project_word, scramble, theta, ArtinLetter, ArtinWord,
};
use artin_convex::coxeter::{CoxeterSystem, GeneratorId, GeneratorSet};
use artin_convex::Sign;
use common::*;
use proptest::prelude::*;

fn systems() -> Vec<CoxeterSystem> {
    [A3, B3, H3, A2_AFFINE, MIXED_INF, FREE3].into_iter().map(system).collect()
}

fn artin_word(max: usize) -> impl Strategy<Value = ArtinWord> {
    prop::collection::vec((0..3u8, any::<bool>()), 0..=max).prop_map(|v| {
        ArtinWord(
            v.into_iter()
                .map(|(g, pos)| ArtinLetter::new(GeneratorId(g), if pos { Sign::Positive } else { Sign::Negative }))
                .collect(),
        )
    })
}

fn over(target: GeneratorSet, max: usize) -> impl Strategy<Value = ArtinWord> {
    artin_word(max).prop_map(move |w| ArtinWord(w.0.into_iter().filter(|l| target.contains(l.generator)).collect()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn theta_is_a_homomorphism(which in 0..6usize, a in artin_word(12), b in artin_word(12)) {
        let sys = &systems()[which];
        let lhs = theta(sys, &a.concat(&b)).unwrap();
        let rhs = sys.multiply(&theta(sys, &a).unwrap(), &theta(sys, &b).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(theta(sys, &a.inverse()).unwrap(), sys.invert(&theta(sys, &a).unwrap()).unwrap());
    }

    #[test]
    fn scramble_preserves_invariants(which in 0..6usize, w in artin_word(12), steps in 0..40usize, seed: u64) {
        let sys = &systems()[which];
        let g = sys.graph();
        let out = scramble(g, &w, steps, seed);
        prop_assert_eq!(theta(sys, &out).unwrap(), theta(sys, &w).unwrap());
        prop_assert_eq!(abelianized_image(g, &out), abelianized_image(g, &w));
        prop_assert!(out.len() <= w.len() + 2 * steps);
        if let Some(o) = oracle_for(g) {
            prop_assert!(o.equal(&out, &w));
        }
    }

    #[test]
    fn words_over_target_are_fixed(which in 0..6usize, bits in 0..8u64, w in artin_word(20)) {
        let sys = &systems()[which];
        let t = GeneratorSet(bits);
        let w = ArtinWord(w.0.into_iter().filter(|l| t.contains(l.generator)).collect());
        let (p, _) = project_word(sys, &w, t).unwrap();
        prop_assert_eq!(p, w);
    }

    #[test]
    fn length_contract_and_idempotence(which in 0..6usize, bits in 0..8u64, w in artin_word(24)) {
        let sys = &systems()[which];
        let t = GeneratorSet(bits);
        let (p, trace) = project_word(sys, &w, t).unwrap();
        prop_assert!(p.len() <= w.len());
        prop_assert!(p.lies_in(t));
        if p.len() == w.len() {
            prop_assert!(w.lies_in(t));
        }
        prop_assert_eq!(project_word(sys, &p, t).unwrap().0, p.clone());
        prop_assert_eq!(trace.steps.len(), w.len());
        let mut prev = sys.identity();
        for (step, letter) in trace.steps.iter().zip(&w.0) {
            prop_assert_eq!(&step.prefix, &sys.mul_generator(&prev, letter.generator).unwrap());
            prop_assert!(step.v.lies_in(t));
            prop_assert!(sys.left_descents(&step.w).unwrap().intersection(t).is_empty());
            prop_assert_eq!(&sys.multiply(&step.v, &step.w).unwrap(), &step.prefix);
            prev = step.prefix.clone();
        }
        let emitted: Vec<ArtinLetter> = trace.steps.iter().filter_map(|s| s.emitted).collect();
        prop_assert_eq!(emitted, p.0);
    }

    /// When `θ(w) ∈ W_T`, the projection has the same image in `W`.
    #[test]
    fn projection_keeps_theta_in_parabolic(which in 0..6usize, bits in 0..8u64, w in artin_word(16)) {
        let sys = &systems()[which];
        let t = GeneratorSet(bits);
        let report = check_convexity(sys, &w, t, None, None).unwrap();
        if report.theta_in_parabolic {
            prop_assert_eq!(report.theta_agrees, Some(true));
        }
        prop_assert!(report.passes());
    }

    #[test]
    fn scrambled_target_words_project_back(which in 0..6usize, bits in 0..8u64, w in over(GeneratorSet(7), 12), steps in 0..30usize, seed: u64) {
        let sys = &systems()[which];
        let t = GeneratorSet(bits);
        let w = ArtinWord(w.0.into_iter().filter(|l| t.contains(l.generator)).collect());
        let g = sys.graph();
        let y = scramble(g, &w, steps, seed);
        let oracle = oracle_for(g);
        let report = check_convexity(sys, &y, t, oracle.as_deref(), Some(&w)).unwrap();
        prop_assert!(report.passes(), "{:?}", report);
        if oracle.is_some() {
            prop_assert_eq!(report.claim2, Some(true));
        }
        prop_assert_eq!(report.abelian_agrees, Some(true));
    }
}

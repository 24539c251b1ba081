use artin_convex::braid::{delete_strands, embed, garside_nf, perm_of, words_equal, BraidWord};
use artin_convex::Sign;
use proptest::prelude::*;

/// Reduced free-group word; letter `±(k+1)` is `x_k^{±1}`.
type Free = Vec<i32>;

fn reduce(w: impl IntoIterator<Item = i32>) -> Free {
    let mut out: Free = Vec::new();
    for l in w {
        if out.last() == Some(&-l) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

fn invert(w: &Free) -> Free {
    w.iter().rev().map(|l| -l).collect()
}

/// The Artin action of `B_n` on `F_n`, as the images of `x_1, …, x_n`.
fn action(w: &BraidWord) -> Vec<Free> {
    let n = w.strands();
    let mut images: Vec<Free> = (1..=n as i32).map(|k| vec![k]).collect();
    for &(i, sign) in w.letters() {
        let (a, b) = (i as i32, i as i32 + 1);
        let sub = |x: i32| -> Free {
            let g = x.abs();
            let img = match sign {
                Sign::Positive if g == a => vec![a, b, -a],
                Sign::Positive if g == b => vec![a],
                Sign::Negative if g == a => vec![b],
                Sign::Negative if g == b => vec![-b, a, b],
                _ => vec![g],
            };
            if x > 0 {
                img
            } else {
                invert(&img)
            }
        };
        images = images.iter().map(|img| reduce(img.iter().flat_map(|&x| sub(x)))).collect();
    }
    images
}

fn braid(n: usize, max: usize) -> impl Strategy<Value = BraidWord> {
    prop::collection::vec((1..n, any::<bool>()), 0..=max).prop_map(move |v| {
        BraidWord::new(n, v.into_iter().map(|(i, p)| (i, if p { Sign::Positive } else { Sign::Negative })).collect())
            .unwrap()
    })
}

/// Applies one random braid relation or inverse-pair insertion.
fn perturb(w: &BraidWord, pos: usize, pick: usize) -> BraidWord {
    let n = w.strands();
    let mut letters = w.letters().to_vec();
    let pos = pos % (letters.len() + 1);
    let i = 1 + pick % (n - 1);
    match pick % 3 {
        0 => {
            letters.splice(pos..pos, [(i, Sign::Positive), (i, Sign::Negative)]);
        }
        1 if i + 1 < n => {
            letters.splice(pos..pos, [(i, Sign::Positive), (i + 1, Sign::Positive), (i, Sign::Positive)]);
            letters.splice(pos + 3..pos + 3, [(i + 1, Sign::Negative), (i, Sign::Negative), (i + 1, Sign::Negative)]);
        }
        _ if n > 3 && i + 2 < n => {
            letters.splice(pos..pos, [(i, Sign::Positive), (i + 2, Sign::Positive), (i, Sign::Negative), (i + 2, Sign::Negative)]);
        }
        _ => {}
    }
    BraidWord::new(n, letters).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn garside_agrees_with_free_group_action(a in braid(4, 8), b in braid(4, 8)) {
        prop_assert_eq!(words_equal(&a, &b), action(&a) == action(&b));
    }

    #[test]
    fn garside_is_a_congruence(w in braid(4, 10), pos in 0..20usize, picks in prop::collection::vec(0..30usize, 1..6)) {
        let mut v = w.clone();
        for p in picks {
            v = perturb(&v, pos, p);
        }
        prop_assert!(words_equal(&v, &w));
        prop_assert_eq!(action(&v), action(&w));
        prop_assert_eq!(perm_of(&v), perm_of(&w));
    }

    #[test]
    fn normal_form_is_left_weighted_and_canonical(w in braid(5, 12)) {
        let nf = garside_nf(&w);
        let delta = artin_convex::braid::Permutation::longest(5);
        prop_assert!(nf.simples.iter().all(|s| *s != delta && s.length() > 0));
        // Rebuild a word from the normal form and compare.
        let mut letters = Vec::new();
        let delta_word = positive_word(&delta);
        let power = nf.infimum.unsigned_abs() as usize;
        for _ in 0..power {
            if nf.infimum > 0 {
                letters.extend(delta_word.iter().map(|&i| (i, Sign::Positive)));
            } else {
                letters.extend(delta_word.iter().rev().map(|&i| (i, Sign::Negative)));
            }
        }
        for s in &nf.simples {
            letters.extend(positive_word(s).into_iter().map(|i| (i, Sign::Positive)));
        }
        let rebuilt = BraidWord::new(5, letters).unwrap();
        prop_assert_eq!(garside_nf(&rebuilt), nf);
        prop_assert_eq!(action(&rebuilt), action(&w));
    }

    #[test]
    fn deletion_inverts_embedding(w in braid(3, 10), n in 3..6usize) {
        let big = embed(&w, n).unwrap();
        prop_assert_eq!(delete_strands(&big, &[1, 2, 3]).unwrap(), w);
    }

    #[test]
    fn deletion_after_scrambling_in_larger_group(w in braid(3, 8), n in 4..6usize, pos in 0..20usize, picks in prop::collection::vec(0..30usize, 1..6)) {
        let mut big = embed(&w, n).unwrap();
        for p in picks {
            big = perturb(&big, pos, p);
        }
        // Perturbations never change the permutation, so strands 1..3 still end in 1..3.
        prop_assert_eq!(perm_of(&big).images()[..3].iter().filter(|&&v| v < 3).count(), 3);
        let d = delete_strands(&big, &[1, 2, 3]).unwrap();
        prop_assert!(d.len() <= big.len());
        prop_assert!(words_equal(&d, &w));
    }
}

/// A positive word for a permutation braid, by bubble sort.
fn positive_word(p: &artin_convex::braid::Permutation) -> Vec<usize> {
    let mut images: Vec<u8> = p.images().to_vec();
    let mut word = Vec::new();
    // Sort the one-line array; the swaps, read backwards, spell the permutation.
    while let Some(i) = (0..images.len() - 1).find(|&i| images[i] > images[i + 1]) {
        images.swap(i, i + 1);
        word.push(i + 1);
    }
    word.reverse();
    word
}

#[test]
fn delta_squared_is_central() {
    let d2 = BraidWord::positive(3, &[1, 2, 1, 1, 2, 1]).unwrap();
    for i in 1..3 {
        let s = BraidWord::positive(3, &[i]).unwrap();
        assert!(words_equal(&d2.concat(&s), &s.concat(&d2)));
        assert_eq!(action(&d2.concat(&s)), action(&s.concat(&d2)));
    }
}

#[test]
fn action_detects_distinct_small_braids() {
    let s1 = BraidWord::positive(3, &[1]).unwrap();
    let s2 = BraidWord::positive(3, &[2]).unwrap();
    assert!(!words_equal(&s1, &s2));
    assert_ne!(action(&s1), action(&s2));
    let a = BraidWord::positive(3, &[1, 2, 1]).unwrap();
    let b = BraidWord::positive(3, &[2, 1, 2]).unwrap();
    assert_eq!(action(&a), action(&b));
}

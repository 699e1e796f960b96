mod common;

use common::{group_word, letter, nontrivial_group_word, word};
use fga_core::exactnum::CoefficientRing;
use fga_core::fox::{fox_embed_word, magnus_compare, magnus_sign, LetterImages};
use fga_core::freeobj::{enumerate_reduced, enumerate_words, reduced_word_count, word_count, GroupWord, Letter};
use proptest::prelude::*;
use std::cmp::Ordering;

/// Oracle: stack-based free reduction, independent of `GroupWord::reduce`.
fn stack_reduce(ls: &[Letter]) -> Vec<Letter> {
    let mut out: Vec<Letter> = Vec::new();
    for &l in ls {
        if out.last().is_some_and(|&t| t.gen == l.gen && t.inv != l.inv) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

proptest! {
    #[test]
    fn reduction_matches_stack_oracle(ls in prop::collection::vec(letter(3), 0..30)) {
        let (ours, oracle) = (GroupWord::reduce(&ls), stack_reduce(&ls));
        prop_assert_eq!(ours.letters(), oracle.as_slice());
    }

    #[test]
    fn group_laws(a in group_word(3, 8), b in group_word(3, 8), c in group_word(3, 8)) {
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert!(a.mul(&a.inv()).is_identity());
        prop_assert_eq!(a.mul(&GroupWord::identity()), a.clone());
        prop_assert_eq!(a.pow(3), a.mul(&a).mul(&a));
        prop_assert_eq!(a.pow(-2), a.inv().mul(&a.inv()));
    }

    #[test]
    fn display_round_trips(a in group_word(3, 10), w in word(3, 8)) {
        prop_assert_eq!(a.to_string().parse::<GroupWord>().unwrap(), a);
        prop_assert_eq!(w.to_string().parse::<fga_core::Word>().unwrap(), w);
    }

    #[test]
    fn fox_embedding_is_multiplicative(a in group_word(2, 4), b in group_word(2, 4)) {
        let images = LetterImages::new(2, CoefficientRing::integers(), 5).unwrap();
        let lhs = images.embed_word(&a.mul(&b)).unwrap();
        let rhs = images.embed_word(&a).unwrap().mul(&images.embed_word(&b).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn fox_image_of_nontrivial_word_is_not_one(a in nontrivial_group_word(2, 5)) {
        // the first nonzero Fox coefficient sits in degree at most |a|
        let image = fox_embed_word(&a, 2, a.len() as u64).unwrap();
        prop_assert!(image.terms().len() > 1);
    }

    #[test]
    fn magnus_order_is_a_bi_order(a in group_word(2, 4), b in group_word(2, 4), c in group_word(2, 3)) {
        let ab = magnus_compare(&a, &b);
        prop_assert_eq!(ab == Ordering::Equal, a == b);
        prop_assert_eq!(magnus_compare(&b, &a), ab.reverse());
        prop_assert_eq!(magnus_compare(&c.mul(&a), &c.mul(&b)), ab);
        prop_assert_eq!(magnus_compare(&a.mul(&c), &b.mul(&c)), ab);
    }

    #[test]
    fn magnus_positive_cone(a in nontrivial_group_word(2, 4), b in nontrivial_group_word(2, 4)) {
        prop_assert_eq!(magnus_sign(&a.inv()), magnus_sign(&a).reverse());
        if magnus_sign(&a) == Ordering::Greater && magnus_sign(&b) == Ordering::Greater {
            prop_assert_eq!(magnus_sign(&a.mul(&b)), Ordering::Greater);
        }
    }
}

#[test]
fn enumeration_counts() {
    for n in 1..=3 {
        for l in 0..=4 {
            assert_eq!(enumerate_words(n, l).len(), word_count(n, l));
            let reduced = enumerate_reduced(n, l);
            assert_eq!(reduced.len(), reduced_word_count(n, l));
            let mut sorted = reduced.clone();
            sorted.sort();
            sorted.dedup();
            assert_eq!(sorted.len(), reduced.len());
        }
    }
    assert_eq!(reduced_word_count(2, 3), 53);
}

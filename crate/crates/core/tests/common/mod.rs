#![allow(dead_code)]

use fga_core::freeobj::{GroupWord, Letter, Word};
use fga_core::ogroup::OrderedGroupElement;
use fga_core::Rational;
use proptest::prelude::*;

pub fn small_rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=6).prop_map(|(n, d)| Rational::new(n.into(), d.into()))
}

pub fn nonzero_rational() -> impl Strategy<Value = Rational> {
    small_rational().prop_filter("nonzero", |r| *r != Rational::from_integer(0.into()))
}

pub fn letter(n: usize) -> impl Strategy<Value = Letter> {
    (0..n, any::<bool>()).prop_map(|(gen, inv)| Letter { gen, inv })
}

/// Possibly unreduced input, reduced on construction.
pub fn group_word(n: usize, max_len: usize) -> impl Strategy<Value = GroupWord> {
    prop::collection::vec(letter(n), 0..=max_len).prop_map(|ls| GroupWord::reduce(&ls))
}

pub fn nontrivial_group_word(n: usize, max_len: usize) -> impl Strategy<Value = GroupWord> {
    group_word(n, max_len).prop_filter("nontrivial", |w| !w.is_identity())
}

pub fn word(n: usize, max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(0..n, 0..=max_len).prop_map(Word::new)
}

pub fn zlex(n: usize, bound: i64) -> impl Strategy<Value = OrderedGroupElement> {
    prop::collection::vec(-bound..=bound, n).prop_map(|c| OrderedGroupElement::zlex(&c))
}

pub fn nonzero_zlex(n: usize, bound: i64) -> impl Strategy<Value = OrderedGroupElement> {
    zlex(n, bound).prop_filter("nonzero", |g| !g.is_zero())
}

pub fn magnus(max_len: usize) -> impl Strategy<Value = OrderedGroupElement> {
    group_word(2, max_len).prop_map(OrderedGroupElement::FreeMagnus)
}

pub fn nonzero_magnus(max_len: usize) -> impl Strategy<Value = OrderedGroupElement> {
    nontrivial_group_word(2, max_len).prop_map(OrderedGroupElement::FreeMagnus)
}

pub fn q_element() -> impl Strategy<Value = OrderedGroupElement> {
    small_rational().prop_map(OrderedGroupElement::Q)
}

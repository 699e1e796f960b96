mod common;

use common::{nonzero_rational, word};
use fga_core::exactnum::{CoefficientRing, Eta};
use fga_core::ncseries::{NcSeries, SeriesParams, Weights};
use fga_core::{BigInt, Extended, Rational, Word};
use num_traits::One;
use proptest::prelude::*;
use std::sync::Arc;

fn params_q(d: u64) -> Arc<SeriesParams> {
    SeriesParams::unit(2, CoefficientRing::rationals(), d)
}

fn series(params: Arc<SeriesParams>, min_deg: usize, max_deg: usize) -> impl Strategy<Value = NcSeries> {
    prop::collection::vec((word(2, max_deg), nonzero_rational()), 1..5).prop_map(move |ts| {
        let ts: Vec<_> = ts.into_iter().filter(|(w, _)| w.len() >= min_deg).collect();
        NcSeries::from_terms(&params, ts).unwrap()
    })
}

fn int_series(params: Arc<SeriesParams>) -> impl Strategy<Value = NcSeries> {
    prop::collection::vec((word(2, 3), -40i64..=40, 0u32..4), 1..5)
        .prop_map(move |ts| {
            let ts = ts.into_iter().map(|(w, c, k)| (w, Rational::from_integer(BigInt::from(c) * BigInt::from(2).pow(k))));
            NcSeries::from_terms(&params, ts).unwrap()
        })
        .prop_filter("nonzero", |s| !s.is_zero())
}

/// Oracle: the product computed term by term with explicit truncation.
fn naive_mul(f: &NcSeries, g: &NcSeries) -> NcSeries {
    let p = f.params();
    let mut terms = Vec::new();
    for (u, a) in f.terms() {
        for (v, b) in g.terms() {
            let w: Word = u.concat(v);
            if p.weights().wed(&w) <= *p.truncation() {
                terms.push((w, a * b));
            }
        }
    }
    NcSeries::from_terms(p, terms).unwrap()
}

proptest! {
    #[test]
    fn ring_axioms(f in series(params_q(4), 0, 3), g in series(params_q(4), 0, 3), h in series(params_q(4), 0, 3)) {
        prop_assert_eq!(f.mul(&g).unwrap().mul(&h).unwrap(), f.mul(&g.mul(&h).unwrap()).unwrap());
        prop_assert_eq!(f.mul(&g.add(&h).unwrap()).unwrap(), f.mul(&g).unwrap().add(&f.mul(&h).unwrap()).unwrap());
        prop_assert!(f.sub(&f).unwrap().is_zero());
        prop_assert_eq!(f.mul(&g).unwrap(), naive_mul(&f, &g));
    }

    #[test]
    fn geometric_inverse(f in series(params_q(6), 1, 3)) {
        let one = NcSeries::one(f.params());
        let back = one.add(&f).unwrap().mul(&f.inv_one_plus().unwrap()).unwrap();
        prop_assert_eq!(back, one);
    }

    #[test]
    fn wed_eta_is_additive_with_padic_eta((f, g) in padic_pair()) {
        prop_assert_eq!(f.mul(&g).unwrap().wed_eta(), f.wed_eta() + g.wed_eta());
    }

    #[test]
    fn json_round_trip(f in series(params_q(4), 0, 4)) {
        prop_assert_eq!(NcSeries::from_json(&f.to_json()).unwrap(), f);
    }
}

/// Weights from {1/2, 1, 2}, 2-adic η with value 1, truncation high enough
/// that no product is cut.
fn padic_pair() -> impl Strategy<Value = (NcSeries, NcSeries)> {
    prop::collection::vec(prop::sample::select(vec![(1, 2), (1, 1), (2, 1)]), 2).prop_flat_map(|ws| {
        let weights = Weights::new(ws.iter().map(|&(n, d)| Rational::new(n.into(), d.into())).collect()).unwrap();
        let ring = CoefficientRing::integers()
            .with_eta(Eta::PAdic { p: BigInt::from(2), g: Rational::one() })
            .unwrap();
        let params = SeriesParams::new(weights, ring, Rational::from_integer(20.into())).unwrap();
        (int_series(params.clone()), int_series(params))
    })
}

#[test]
fn wed_eta_of_zero_is_infinite() {
    assert_eq!(NcSeries::zero(&params_q(3)).wed_eta(), Extended::Infinity);
}

//! Seeded random elements and the property sweep behind `fga properties`.

use fga_core::exactnum::{multiplicity, padic_value, CoefficientRing};
use fga_core::filtered::{
    check_valuationsum, pf_violations, ConvexReduction, FilteredModel, MnModel, MnSeries, NcSeriesModel, QmModel,
};
use fga_core::freeobj::{GroupWord, Letter, Word};
use fga_core::metab::{m_eval_group_word, MGroupAlgebraElement};
use fga_core::ncseries::{NcSeries, SeriesParams, Weights};
use fga_core::ogroup::{ConvexJump, GroupTag, OrderedGroupElement};
use fga_core::{BigInt, Certificate, Extended, Rational, Result};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;
use std::sync::Arc;

pub type Rng8 = ChaCha8Rng;

pub fn rng(seed: u64) -> Rng8 {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Nonzero rational with numerator in `±1..=num` and denominator in `1..=den`.
pub fn nonzero_rational(rng: &mut Rng8, num: i64, den: i64) -> Rational {
    let n = rng.gen_range(1..=num) * if rng.gen_bool(0.5) { 1 } else { -1 };
    Rational::new(n.into(), rng.gen_range(1..=den).into())
}

pub fn nonzero_int(rng: &mut Rng8, bound: i64) -> Rational {
    nonzero_rational(rng, bound, 1)
}

pub fn word(rng: &mut Rng8, n: usize, len: usize) -> Word {
    Word::new((0..len).map(|_| rng.gen_range(0..n)).collect())
}

pub fn group_word(rng: &mut Rng8, n: usize, max_len: usize) -> GroupWord {
    let len = rng.gen_range(0..=max_len);
    let letters: Vec<Letter> =
        (0..len).map(|_| Letter { gen: rng.gen_range(0..n), inv: rng.gen_bool(0.5) }).collect();
    GroupWord::reduce(&letters)
}

pub fn nonidentity_group_word(rng: &mut Rng8, n: usize, max_len: usize) -> GroupWord {
    loop {
        let w = group_word(rng, n, max_len.max(1));
        if !w.is_identity() {
            return w;
        }
    }
}

/// The number of leading zeros is uniform in `0..=n`, so every Archimedean
/// class (and zero) is drawn with equal probability.
pub fn zlex(rng: &mut Rng8, n: usize, bound: i64) -> OrderedGroupElement {
    let zeros = rng.gen_range(0..=n);
    let coords: Vec<i64> = (0..n)
        .map(|i| match i.cmp(&zeros) {
            std::cmp::Ordering::Less => 0,
            std::cmp::Ordering::Equal => rng.gen_range(1..=bound) * if rng.gen_bool(0.5) { 1 } else { -1 },
            std::cmp::Ordering::Greater => rng.gen_range(-bound..=bound),
        })
        .collect();
    OrderedGroupElement::zlex(&coords)
}

/// A random element of the group: ℚ with small fractions, ℤⁿ with
/// coordinates in `±4`, or a word of length ≤ 4.
pub fn group_element(rng: &mut Rng8, tag: GroupTag) -> OrderedGroupElement {
    match tag {
        GroupTag::Q => OrderedGroupElement::Q(Rational::new(rng.gen_range(-12..=12).into(), rng.gen_range(1..=4).into())),
        GroupTag::ZLex(n) => zlex(rng, n, 4),
        GroupTag::FreeMagnus => OrderedGroupElement::FreeMagnus(group_word(rng, 2, 4)),
    }
}

pub fn nonzero_group_element(rng: &mut Rng8, tag: GroupTag) -> OrderedGroupElement {
    loop {
        let g = group_element(rng, tag);
        if !g.is_zero() {
            return g;
        }
    }
}

/// Nonzero series with up to `terms` terms of degree ≤ `max_deg`.
pub fn nc_element(rng: &mut Rng8, params: &Arc<SeriesParams>, terms: usize, min_deg: usize, max_deg: usize) -> NcSeries {
    let integral = params.ring().kind() == &fga_core::exactnum::RingKind::Integers;
    loop {
        let k = rng.gen_range(1..=terms);
        let ts: Vec<(Word, Rational)> = (0..k)
            .map(|_| {
                let len = rng.gen_range(min_deg..=max_deg);
                let c = if integral { nonzero_int(rng, 12) } else { nonzero_rational(rng, 6, 4) };
                (word(rng, params.vars(), len), c)
            })
            .collect();
        if let Ok(s) = NcSeries::from_terms(params, ts) {
            if !s.is_zero() {
                return s;
            }
        }
    }
}

pub fn mn_element(rng: &mut Rng8, model: &MnModel, terms: usize) -> MnSeries {
    loop {
        let k = rng.gen_range(1..=terms);
        let ts: Vec<_> =
            (0..k).map(|_| (group_element(rng, model.group()), nonzero_rational(rng, 5, 3))).collect();
        let f = model.from_terms(ts).expect("tags agree");
        if !f.is_empty() {
            return f;
        }
    }
}

/// A sum of products `c · Π (gᵢ − 1)` with up to two factors each.
pub fn qm_element(rng: &mut Rng8, terms: usize) -> MGroupAlgebraElement {
    loop {
        let mut f = MGroupAlgebraElement::zero();
        for _ in 0..rng.gen_range(1..=terms) {
            let mut t = MGroupAlgebraElement::constant(nonzero_int(rng, 5));
            for _ in 0..rng.gen_range(0..=2) {
                let g = m_eval_group_word(&nonidentity_group_word(rng, 2, 3)).expect("two letters");
                t = t.mul(&MGroupAlgebraElement::group_minus_one(g));
            }
            f = f.add(&t);
        }
        if !f.is_zero() {
            return f;
        }
    }
}

/// Weights drawn from `{1/2, 1, 2}`.
pub fn half_one_two_weights(rng: &mut Rng8, n: usize) -> Weights {
    let choices = [Rational::new(1.into(), 2.into()), Rational::from_integer(1.into()), Rational::from_integer(2.into())];
    Weights::new((0..n).map(|_| choices.choose(rng).expect("nonempty").clone()).collect()).expect("positive")
}

fn sweep<E>(
    kind: &str,
    statement: &str,
    samples: usize,
    mut case: impl FnMut(&mut Rng8) -> Result<Option<E>>,
    rng: &mut Rng8,
) -> Result<Certificate>
where
    E: Into<serde_json::Value>,
{
    let mut witness = None;
    for i in 0..samples {
        if let Some(w) = case(rng)? {
            witness = Some(json!({ "sample": i, "detail": w.into() }));
            break;
        }
    }
    Ok(Certificate::from_witness(kind, statement, witness).count(samples))
}

fn axioms_case<M: FilteredModel>(
    model: &M,
    x: &M::Elem,
    y: &M::Elem,
    a: i64,
) -> Result<Option<serde_json::Value>> {
    let bad = pf_violations(model, x, y, a)?;
    Ok((!bad.is_empty()).then(|| json!({ "x": x.to_string(), "y": y.to_string(), "a": a, "violated": bad })))
}

fn valuationsum_case<M: FilteredModel>(model: &M, fs: &[M::Elem]) -> Result<Option<serde_json::Value>> {
    let r = check_valuationsum(model, fs)?;
    Ok((!r.holds()).then(|| json!({ "inputs": fs.iter().map(ToString::to_string).collect::<Vec<_>>() })))
}

/// The desk-scale model used by the sweep: ℤ⟨x1,x2⟩ with weights (1, 2),
/// 2-adic η of value 1, truncated at degree 6.
pub fn sweep_nc_model() -> NcSeriesModel {
    let q = |n: i64| OrderedGroupElement::Q(Rational::from_integer(n.into()));
    NcSeriesModel::new(CoefficientRing::integers(), vec![q(1), q(2)], Some((BigInt::from(2), q(1))), 6)
        .expect("valid model")
}

/// Random checks of the filtration axioms, the leading-term lemma, the convex
/// reduction and the p-adic valuation laws. Identical seeds give identical
/// certificates.
pub fn property_report(seed: u64, samples: usize) -> Result<Certificate> {
    let mut r = rng(seed);
    let nc = sweep_nc_model();
    let mn_z = MnModel::new(GroupTag::ZLex(2), CoefficientRing::rationals())?;
    let mn_f = MnModel::new(GroupTag::FreeMagnus, CoefficientRing::rationals())?;
    let qm = QmModel::default();
    let mut checks = Vec::new();

    checks.push(sweep(
        "axioms-nc",
        "PF.1-PF.4 for the weighted 2-adic degree on truncated Z<x1,x2>",
        samples,
        |r| {
            let (x, y) = (nc_element(r, nc.params(), 3, 0, 3), nc_element(r, nc.params(), 3, 0, 3));
            axioms_case(&nc, &x, &y, r.gen_range(-50..=50))
        },
        &mut r,
    )?);
    for (name, model) in [("axioms-mn-zlex2", &mn_z), ("axioms-mn-freemagnus", &mn_f)] {
        checks.push(sweep(
            name,
            "PF.1-PF.4 and V.3 for the support minimum on Malcev-Neumann series",
            samples,
            |r| {
                let (x, y) = (mn_element(r, model, 3), mn_element(r, model, 3));
                axioms_case(model, &x, &y, r.gen_range(-50..=50))
            },
            &mut r,
        )?);
    }
    checks.push(sweep(
        "axioms-qm",
        "PF.1-PF.4 for the augmentation degree lower bound on Q[M]",
        samples.min(50),
        |r| {
            let (x, y) = (qm_element(r, 2), qm_element(r, 2));
            axioms_case(&qm, &x, &y, r.gen_range(-50..=50))
        },
        &mut r,
    )?);
    checks.push(sweep(
        "valuationsum-nc",
        "product and sum equivalences of the leading-term lemma on truncated Z<x1,x2>",
        samples,
        |r| {
            let k = r.gen_range(1..=3);
            let fs: Vec<_> = (0..k).map(|_| nc_element(r, nc.params(), 3, 0, 2)).collect();
            valuationsum_case(&nc, &fs)
        },
        &mut r,
    )?);
    checks.push(sweep(
        "valuationsum-mn",
        "product and sum equivalences of the leading-term lemma on Malcev-Neumann series over Z^2",
        samples,
        |r| {
            let k = r.gen_range(1..=3);
            let fs: Vec<_> = (0..k).map(|_| mn_element(r, &mn_z, 3)).collect();
            valuationsum_case(&mn_z, &fs)
        },
        &mut r,
    )?);
    let red = ConvexReduction::new(&mn_z, ConvexJump::ZLex { n: 2, axis: 0 })?;
    checks.push(sweep(
        "convex-reduction",
        "the reduced real value on O/T over Z^2 satisfies PF.1-PF.4",
        samples,
        |r| {
            let (x, y) = (o_element(r, &red)?, o_element(r, &red)?);
            let bad = red.pf_violations(&x, &y, r.gen_range(-50..=50))?;
            Ok((!bad.is_empty()).then(|| json!({ "x": x.to_string(), "y": y.to_string(), "violated": bad })))
        },
        &mut r,
    )?);
    checks.push(sweep(
        "padic-valuation",
        "V.1-V.3 for the p-adic value on Z, p in {2, 3, 5}",
        samples,
        |r| {
            let p = BigInt::from(*[2, 3, 5].choose(r).expect("nonempty"));
            Ok(padic_case(r, &p)?.map(serde_json::Value::from))
        },
        &mut r,
    )?);

    Ok(Certificate::pass("properties", "randomized property sweep")
        .param("seed", seed.to_string())
        .param("samples", samples)
        .with_checks(checks))
}

/// A random element of `O` for the reduction.
pub fn o_element(r: &mut Rng8, red: &ConvexReduction<'_, MnModel>) -> Result<MnSeries> {
    loop {
        let f = mn_element(r, red.model(), 3);
        if red.in_o(&f)? {
            return Ok(f);
        }
    }
}

/// Random integers, half of them multiplied by a power of `p`.
pub fn padic_integer(r: &mut Rng8, p: &BigInt) -> BigInt {
    let mut z = BigInt::from(r.gen_range(-10_000i64..=10_000));
    if r.gen_bool(0.5) {
        z *= p.pow(r.gen_range(1..=6));
    }
    z
}

/// `Some(description)` when V.1-V.3 fail for a random pair.
pub fn padic_case(r: &mut Rng8, p: &BigInt) -> Result<Option<String>> {
    let (a, b) = (padic_integer(r, p), padic_integer(r, p));
    let one = Rational::from_integer(1.into());
    let v = |z: &BigInt| padic_value(z, p, &one);
    let (va, vb) = (v(&a)?, v(&b)?);
    let mut bad = Vec::new();
    if va.is_infinite() != (a == BigInt::from(0)) {
        bad.push("V.1");
    }
    if v(&(&a + &b))? < va.clone().min(vb.clone()) {
        bad.push("V.2");
    }
    if v(&(&a * &b))? != va.clone() + vb.clone() {
        bad.push("V.3");
    }
    // independent oracle: repeated division
    if let Extended::Finite(k) = &va {
        let mut m = 0u64;
        let mut z = a.clone();
        while &z % p == BigInt::from(0) {
            z /= p;
            m += 1;
        }
        if *k != Rational::from_integer(m.into()) || multiplicity(&a, p) != m {
            bad.push("oracle");
        }
    }
    Ok((!bad.is_empty()).then(|| format!("p={p} a={a} b={b}: {}", bad.join(","))))
}

//! Positive filtrations `υ: R → G ∪ {∞}` on three concrete rings, their
//! leading terms, the reduction to real values along a convex jump, and the
//! bounded certifiers for free objects built from generators with positive
//! value.
//!
//! Shipped models:
//!
//! * [`NcSeriesModel`]: truncated noncommutative polynomials, valued by a
//!   weighted degree with group-valued weights plus an optional p-adic value
//!   on the integer coefficients. A positive filtration; truncation kills
//!   products, so it is not a valuation.
//! * [`MnModel`]: finitely supported Malcev–Neumann series over an ordered
//!   group, valued by the minimum of the support. A valuation.
//! * [`QmModel`]: the group algebra `ℚ[M]` of the free metabelian group, valued
//!   by a certified lower bound on the augmentation-ideal degree.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use serde_json::json;

use crate::certificate::Certificate;
use crate::error::{Error, Result};
use crate::exactnum::{is_prime, multiplicity, CoefficientRing, Eta, Extended, Field, Rational, RingKind};
use crate::freeobj::{enumerate_reduced, enumerate_words, GroupWord, Word};
use crate::linalg::{independence_by_key, Dependency};
use crate::metab::{chi_lower_bound, m_inv, MGroupAlgebraElement, MetabelianElement, CHI_CAP};
use crate::ncseries::{NcSeries, SeriesParams};
use crate::ogroup::{archimedean_relation, og_add, og_cmp, og_times, Archimedean, GroupTag, OrderedGroupElement};

use std::sync::Arc;

/// A value in `G ∪ {∞}`.
pub type FiltrationValue = Extended<OrderedGroupElement>;

/// `a + b` in `G ∪ {∞}`.
pub fn fv_add(a: &FiltrationValue, b: &FiltrationValue) -> Result<FiltrationValue> {
    match (a, b) {
        (Extended::Finite(x), Extended::Finite(y)) => Ok(Extended::Finite(og_add(x, y)?)),
        _ => Ok(Extended::Infinity),
    }
}

fn fv_string(v: &FiltrationValue) -> String {
    v.to_string()
}

/// A ring with a positive filtration, exposed through the operations the
/// certifiers need.
pub trait FilteredModel: Sync {
    type Elem: Clone + PartialEq + fmt::Display + Send + Sync;
    type Key: Ord + Clone + fmt::Display + Send + Sync;

    fn describe(&self) -> String;
    fn value_group(&self) -> GroupTag;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    /// The image of an integer (the prime subring).
    fn scalar(&self, z: i64) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem>;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem>;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn value(&self, a: &Self::Elem) -> Result<FiltrationValue>;
    /// Coordinates over [`FilteredModel::field`].
    fn coordinates(&self, a: &Self::Elem) -> Vec<(Self::Key, Rational)>;
    fn field(&self) -> Field;
    /// The sub-sum of `a` at minimal value, representing `a + R_{>υ(a)}`.
    fn leading_term(&self, a: &Self::Elem) -> Result<Self::Elem>;
    /// Coordinates of a homogeneous element inside its graded component,
    /// over [`FilteredModel::graded_field`].
    fn graded_coordinates(&self, homogeneous: &Self::Elem) -> Result<Vec<(Self::Key, Rational)>>;
    fn graded_field(&self) -> Field;
    /// `(1 + x)⁻¹`, exact or truncated after `budget` factors of `x`.
    fn inv_one_plus(&self, x: &Self::Elem, budget: usize) -> Result<Self::Elem>;
    fn inverse(&self, x: &Self::Elem, budget: usize) -> Result<Self::Elem>;
    fn is_valuation(&self) -> bool;
    /// Whether [`FilteredModel::value`] is only a certified lower bound.
    fn value_is_lower_bound(&self) -> bool {
        false
    }

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem> {
        self.add(a, &self.neg(b))
    }

    fn value_zero(&self) -> OrderedGroupElement {
        self.value_group().zero()
    }
}

/// Structural total order on group elements, cheap to compute; used for
/// storage keys, never for values.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Structural(pub OrderedGroupElement);

impl Ord for Structural {
    fn cmp(&self, other: &Self) -> Ordering {
        use OrderedGroupElement as E;
        match (&self.0, &other.0) {
            (E::Q(a), E::Q(b)) => a.cmp(b),
            (E::ZLex(a), E::ZLex(b)) => a.cmp(b),
            (E::FreeMagnus(a), E::FreeMagnus(b)) => a.cmp(b),
            (a, b) => a.cmp(b),
        }
    }
}

impl PartialOrd for Structural {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Structural {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

fn check_positive_group_value(g: &OrderedGroupElement, what: &str) -> Result<()> {
    if g.sign() != Ordering::Greater {
        return Err(Error::Precondition(format!("{what} {g} is not positive")));
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Noncommutative polynomials with a group-valued weighted degree

/// Truncated `Z⟨X₁,…,Xₙ⟩` (words of length ≤ `d`) with
/// `υ(Σ c_w w) = min η(c_w) + Σ weight(letter)`.
#[derive(Debug, Clone)]
pub struct NcSeriesModel {
    params: Arc<SeriesParams>,
    weights: Vec<OrderedGroupElement>,
    padic: Option<(BigInt, OrderedGroupElement)>,
}

impl NcSeriesModel {
    /// `padic = Some((p, g))` puts `υ(p^r b) = r·g` on integer coefficients.
    pub fn new(
        ring: CoefficientRing,
        weights: Vec<OrderedGroupElement>,
        padic: Option<(BigInt, OrderedGroupElement)>,
        d: u64,
    ) -> Result<Self> {
        let tag = weights.first().ok_or(Error::Precondition("at least one variable".into()))?.tag();
        for w in &weights {
            if w.tag() != tag {
                return Err(Error::TagMismatch(tag.to_string(), w.tag().to_string()));
            }
            check_positive_group_value(w, "weight")?;
        }
        if *ring.eta() != Eta::Trivial {
            return Err(Error::Precondition("pass the coefficient value through `padic`".into()));
        }
        if let Some((p, g)) = &padic {
            if *ring.kind() != RingKind::Integers {
                return Err(Error::Precondition("a p-adic coefficient value needs integer coefficients".into()));
            }
            if !is_prime(p) {
                return Err(Error::NotPrime(p.clone()));
            }
            if g.tag() != tag {
                return Err(Error::TagMismatch(tag.to_string(), g.tag().to_string()));
            }
            check_positive_group_value(g, "coefficient value")?;
        }
        let params = SeriesParams::unit(weights.len(), ring, d);
        Ok(Self { params, weights, padic })
    }

    /// Rational weights; a p-adic η on the ring is carried over.
    pub fn rational(ring: CoefficientRing, weights: Vec<Rational>, d: u64) -> Result<Self> {
        let padic = match ring.eta() {
            Eta::Trivial => None,
            Eta::PAdic { p, g } => Some((p.clone(), OrderedGroupElement::Q(g.clone()))),
        };
        let plain = match ring.kind() {
            RingKind::Integers => CoefficientRing::integers(),
            RingKind::Rationals => CoefficientRing::rationals(),
            RingKind::PrimeField(p) => CoefficientRing::prime_field(p.clone())?,
        };
        Self::new(plain, weights.into_iter().map(OrderedGroupElement::Q).collect(), padic, d)
    }

    pub fn params(&self) -> &Arc<SeriesParams> {
        &self.params
    }

    pub fn var(&self, i: usize) -> Result<NcSeries> {
        NcSeries::var(&self.params, i)
    }

    pub fn element(&self, terms: impl IntoIterator<Item = (Word, Rational)>) -> Result<NcSeries> {
        NcSeries::from_terms(&self.params, terms)
    }

    fn coeff_value(&self, c: &Rational) -> OrderedGroupElement {
        match &self.padic {
            None => self.value_zero(),
            Some((p, g)) => og_times(g, multiplicity(&c.to_integer(), p) as i64),
        }
    }

    fn term_value(&self, w: &Word, c: &Rational) -> Result<OrderedGroupElement> {
        let mut v = self.coeff_value(c);
        for &l in w.letters() {
            v = og_add(&v, &self.weights[l])?;
        }
        Ok(v)
    }
}

impl FilteredModel for NcSeriesModel {
    type Elem = NcSeries;
    type Key = Word;

    fn describe(&self) -> String {
        let ws: Vec<String> = self.weights.iter().map(ToString::to_string).collect();
        let eta = match &self.padic {
            None => "trivial".to_string(),
            Some((p, g)) => format!("{p}-adic, g = {g}"),
        };
        format!(
            "noncommutative polynomials over {} in {} variables, weights [{}], eta {eta}, degree <= {}",
            self.params.ring().tag(),
            self.weights.len(),
            ws.join(", "),
            self.params.truncation()
        )
    }

    fn value_group(&self) -> GroupTag {
        self.weights[0].tag()
    }

    fn zero(&self) -> NcSeries {
        NcSeries::zero(&self.params)
    }

    fn one(&self) -> NcSeries {
        NcSeries::one(&self.params)
    }

    fn scalar(&self, z: i64) -> NcSeries {
        NcSeries::constant(&self.params, self.params.ring().from_int(z))
    }

    fn add(&self, a: &NcSeries, b: &NcSeries) -> Result<NcSeries> {
        a.add(b)
    }

    fn neg(&self, a: &NcSeries) -> NcSeries {
        a.neg()
    }

    fn mul(&self, a: &NcSeries, b: &NcSeries) -> Result<NcSeries> {
        a.mul(b)
    }

    fn is_zero(&self, a: &NcSeries) -> bool {
        a.is_zero()
    }

    fn value(&self, a: &NcSeries) -> Result<FiltrationValue> {
        let mut best: Option<OrderedGroupElement> = None;
        for (w, c) in a.terms() {
            let v = self.term_value(w, c)?;
            if best.as_ref().is_none_or(|b| og_cmp(&v, b) == Ok(Ordering::Less)) {
                best = Some(v);
            }
        }
        Ok(best.map_or(Extended::Infinity, Extended::Finite))
    }

    fn coordinates(&self, a: &NcSeries) -> Vec<(Word, Rational)> {
        a.terms().iter().map(|(w, c)| (w.clone(), c.clone())).collect()
    }

    fn field(&self) -> Field {
        self.params.ring().field()
    }

    fn leading_term(&self, a: &NcSeries) -> Result<NcSeries> {
        let Extended::Finite(v) = self.value(a)? else {
            return Err(Error::ZeroArgument("leading term of 0"));
        };
        let mut terms = Vec::new();
        for (w, c) in a.terms() {
            if self.term_value(w, c)? == v {
                terms.push((w.clone(), c.clone()));
            }
        }
        NcSeries::from_terms(&self.params, terms)
    }

    fn graded_coordinates(&self, h: &NcSeries) -> Result<Vec<(Word, Rational)>> {
        Ok(match &self.padic {
            None => self.coordinates(h),
            // p^r b + p^{r+1}ℤ ↦ b mod p
            Some((p, _)) => h
                .terms()
                .iter()
                .filter_map(|(w, c)| {
                    let z = c.to_integer();
                    let r = multiplicity(&z, p);
                    let unit = z / p.pow(r as u32);
                    let residue = ((unit % p) + p) % p;
                    (!residue.is_zero()).then(|| (w.clone(), Rational::from_integer(residue)))
                })
                .collect(),
        })
    }

    fn graded_field(&self) -> Field {
        match &self.padic {
            None => self.field(),
            Some((p, _)) => Field::Prime(p.clone()),
        }
    }

    fn inv_one_plus(&self, x: &NcSeries, _budget: usize) -> Result<NcSeries> {
        x.inv_one_plus()
    }

    fn inverse(&self, x: &NcSeries, _budget: usize) -> Result<NcSeries> {
        let c = x.constant_term();
        let ring = self.params.ring();
        let inv_c = self.field().inv(&c).filter(|i| ring.contains(i));
        let inv_c = inv_c.ok_or_else(|| Error::NotInvertible(format!("{x}: constant term {c} is not a unit")))?;
        let y = x.scale(&inv_c).sub(&self.one())?;
        Ok(y.inv_one_plus()?.scale(&inv_c))
    }

    fn is_valuation(&self) -> bool {
        false
    }
}

// ---------------------------------------------------------------------------
// Finitely supported Malcev–Neumann series

/// Finite sum `Σ c_g g` over an ordered group.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MnSeries {
    group: GroupTag,
    terms: BTreeMap<Structural, Rational>,
}

impl MnSeries {
    pub fn terms(&self) -> impl Iterator<Item = (&OrderedGroupElement, &Rational)> {
        self.terms.iter().map(|(k, c)| (&k.0, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn group(&self) -> GroupTag {
        self.group
    }
}

impl fmt::Display for MnSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(g, c)| format!("{c}*[{g}]")).collect();
        f.write_str(&parts.join(" + "))
    }
}

/// Malcev–Neumann series with finite support over `ℚ` or `F_p` and trivial
/// coefficient value; `υ(f)` is the least element of the support.
#[derive(Debug, Clone)]
pub struct MnModel {
    group: GroupTag,
    ring: CoefficientRing,
}

impl MnModel {
    pub fn new(group: GroupTag, ring: CoefficientRing) -> Result<Self> {
        if *ring.kind() == RingKind::Integers || *ring.eta() != Eta::Trivial {
            return Err(Error::Precondition("Malcev-Neumann coefficients must be Q or F_p with trivial value".into()));
        }
        Ok(Self { group, ring })
    }

    pub fn group(&self) -> GroupTag {
        self.group
    }

    pub fn from_terms(&self, terms: impl IntoIterator<Item = (OrderedGroupElement, Rational)>) -> Result<MnSeries> {
        let mut acc: BTreeMap<Structural, Rational> = BTreeMap::new();
        for (g, c) in terms {
            if g.tag() != self.group {
                return Err(Error::TagMismatch(self.group.to_string(), g.tag().to_string()));
            }
            let c = self.ring.element(c)?;
            *acc.entry(Structural(g)).or_insert_with(Rational::zero) += c;
        }
        Ok(self.normalized(acc))
    }

    pub fn monomial(&self, g: OrderedGroupElement, c: Rational) -> Result<MnSeries> {
        self.from_terms([(g, c)])
    }

    fn normalized(&self, raw: BTreeMap<Structural, Rational>) -> MnSeries {
        let terms = raw
            .into_iter()
            .filter_map(|(g, c)| {
                let c = self.ring.normalize(c);
                (!c.is_zero()).then_some((g, c))
            })
            .collect();
        MnSeries { group: self.group, terms }
    }

    fn check(&self, a: &MnSeries) -> Result<()> {
        if a.group != self.group {
            return Err(Error::TagMismatch(self.group.to_string(), a.group.to_string()));
        }
        Ok(())
    }

    /// Support convolution.
    pub fn mn_mul(&self, a: &MnSeries, b: &MnSeries) -> Result<MnSeries> {
        self.check(a)?;
        self.check(b)?;
        let mut acc: BTreeMap<Structural, Rational> = BTreeMap::new();
        for (g, x) in &a.terms {
            for (h, y) in &b.terms {
                *acc.entry(Structural(og_add(&g.0, &h.0)?)).or_insert_with(Rational::zero) += x * y;
            }
        }
        Ok(self.normalized(acc))
    }

    /// `Σ_{k=0..e} (−x)^k`, which agrees with `(1+x)⁻¹` up to products of
    /// more than `e` factors of `x`.
    pub fn mn_inv_one_plus(&self, x: &MnSeries, e: usize) -> Result<MnSeries> {
        self.check(x)?;
        match self.value(x)? {
            Extended::Infinity => return Ok(self.one()),
            Extended::Finite(v) if v.sign() != Ordering::Greater => {
                return Err(Error::NotInvertible(format!("1 + ({x}) is not invertible by expansion: value {v} <= 0")));
            }
            _ => {}
        }
        let one = self.one();
        let mut acc = one.clone();
        for _ in 0..e {
            acc = self.sub(&one, &self.mn_mul(x, &acc)?)?;
        }
        Ok(acc)
    }
}

impl FilteredModel for MnModel {
    type Elem = MnSeries;
    type Key = Structural;

    fn describe(&self) -> String {
        format!("finitely supported Malcev-Neumann series over {} with {} coefficients", self.group, self.ring.tag())
    }

    fn value_group(&self) -> GroupTag {
        self.group
    }

    fn zero(&self) -> MnSeries {
        MnSeries { group: self.group, terms: BTreeMap::new() }
    }

    fn one(&self) -> MnSeries {
        self.scalar(1)
    }

    fn scalar(&self, z: i64) -> MnSeries {
        self.normalized(BTreeMap::from([(Structural(self.group.zero()), Rational::from_integer(z.into()))]))
    }

    fn add(&self, a: &MnSeries, b: &MnSeries) -> Result<MnSeries> {
        self.check(a)?;
        self.check(b)?;
        let mut acc = a.terms.clone();
        for (g, c) in &b.terms {
            *acc.entry(g.clone()).or_insert_with(Rational::zero) += c;
        }
        Ok(self.normalized(acc))
    }

    fn neg(&self, a: &MnSeries) -> MnSeries {
        self.normalized(a.terms.iter().map(|(g, c)| (g.clone(), -c)).collect())
    }

    fn mul(&self, a: &MnSeries, b: &MnSeries) -> Result<MnSeries> {
        self.mn_mul(a, b)
    }

    fn is_zero(&self, a: &MnSeries) -> bool {
        a.terms.is_empty()
    }

    fn value(&self, a: &MnSeries) -> Result<FiltrationValue> {
        let mut best: Option<&OrderedGroupElement> = None;
        for g in a.terms.keys() {
            if best.is_none_or(|b| og_cmp(&g.0, b) == Ok(Ordering::Less)) {
                best = Some(&g.0);
            }
        }
        Ok(best.cloned().map_or(Extended::Infinity, Extended::Finite))
    }

    fn coordinates(&self, a: &MnSeries) -> Vec<(Structural, Rational)> {
        a.terms.iter().map(|(g, c)| (g.clone(), c.clone())).collect()
    }

    fn field(&self) -> Field {
        self.ring.field()
    }

    fn leading_term(&self, a: &MnSeries) -> Result<MnSeries> {
        let Extended::Finite(v) = self.value(a)? else {
            return Err(Error::ZeroArgument("leading term of 0"));
        };
        let key = Structural(v);
        let c = a.terms[&key].clone();
        Ok(MnSeries { group: self.group, terms: BTreeMap::from([(key, c)]) })
    }

    fn graded_coordinates(&self, h: &MnSeries) -> Result<Vec<(Structural, Rational)>> {
        Ok(self.coordinates(h))
    }

    fn graded_field(&self) -> Field {
        self.field()
    }

    fn inv_one_plus(&self, x: &MnSeries, budget: usize) -> Result<MnSeries> {
        self.mn_inv_one_plus(x, budget)
    }

    /// `x = c·g·(1 + y)` with `c·g` the leading term, so `x⁻¹ = (1+y)⁻¹ c⁻¹ g⁻¹`.
    fn inverse(&self, x: &MnSeries, budget: usize) -> Result<MnSeries> {
        let lt = self.leading_term(x)?;
        let (g, c) = lt.terms.iter().next().expect("one term");
        let inv_c = self.field().inv(c).expect("nonzero coefficient");
        let lt_inv = self.monomial(crate::ogroup::og_neg(&g.0), inv_c)?;
        let y = self.sub(&self.mn_mul(&lt_inv, x)?, &self.one())?;
        self.mn_mul(&self.mn_inv_one_plus(&y, budget)?, &lt_inv)
    }

    fn is_valuation(&self) -> bool {
        true
    }
}

// ---------------------------------------------------------------------------
// The rational group algebra of the free metabelian group

/// `ℚ[M]` with `υ(f)` a certified lower bound on the largest `i` with
/// `f ∈ ωⁱ`. The exact filtration is not computed, so leading terms are
/// unavailable.
#[derive(Debug, Clone)]
pub struct QmModel {
    cap: usize,
}

impl Default for QmModel {
    fn default() -> Self {
        Self { cap: CHI_CAP }
    }
}

impl QmModel {
    pub fn new(cap: usize) -> Self {
        Self { cap }
    }

    /// `g − 1` for a word in `u, v`.
    pub fn group_minus_one(&self, w: &GroupWord) -> Result<MGroupAlgebraElement> {
        Ok(MGroupAlgebraElement::group_minus_one(crate::metab::m_eval_group_word(w)?))
    }

    pub fn group_element(&self, w: &GroupWord) -> Result<MGroupAlgebraElement> {
        Ok(MGroupAlgebraElement::group(crate::metab::m_eval_group_word(w)?))
    }

    fn monomial_inverse(&self, x: &MGroupAlgebraElement) -> Result<MGroupAlgebraElement> {
        let mut it = x.terms().iter();
        match (it.next(), it.next()) {
            (Some((g, c)), None) => Ok(MGroupAlgebraElement::group(m_inv(g)).scale(&c.recip())),
            _ => Err(Error::NotInvertible(format!("{x} is not a multiple of a group element"))),
        }
    }
}

impl FilteredModel for QmModel {
    type Elem = MGroupAlgebraElement;
    type Key = MetabelianElement;

    fn describe(&self) -> String {
        format!("Q[M], M free metabelian of rank 2, augmentation degree lower bound (cap {})", self.cap)
    }

    fn value_group(&self) -> GroupTag {
        GroupTag::Q
    }

    fn zero(&self) -> MGroupAlgebraElement {
        MGroupAlgebraElement::zero()
    }

    fn one(&self) -> MGroupAlgebraElement {
        MGroupAlgebraElement::one()
    }

    fn scalar(&self, z: i64) -> MGroupAlgebraElement {
        MGroupAlgebraElement::constant(Rational::from_integer(z.into()))
    }

    fn add(&self, a: &MGroupAlgebraElement, b: &MGroupAlgebraElement) -> Result<MGroupAlgebraElement> {
        Ok(a.add(b))
    }

    fn neg(&self, a: &MGroupAlgebraElement) -> MGroupAlgebraElement {
        a.neg()
    }

    fn mul(&self, a: &MGroupAlgebraElement, b: &MGroupAlgebraElement) -> Result<MGroupAlgebraElement> {
        Ok(a.mul(b))
    }

    fn is_zero(&self, a: &MGroupAlgebraElement) -> bool {
        a.is_zero()
    }

    fn value(&self, a: &MGroupAlgebraElement) -> Result<FiltrationValue> {
        if a.is_zero() {
            return Ok(Extended::Infinity);
        }
        let chi = chi_lower_bound(a, self.cap)?;
        Ok(Extended::Finite(OrderedGroupElement::Q(Rational::from_integer(chi.into()))))
    }

    fn coordinates(&self, a: &MGroupAlgebraElement) -> Vec<(MetabelianElement, Rational)> {
        a.terms().iter().map(|(g, c)| (g.clone(), c.clone())).collect()
    }

    fn field(&self) -> Field {
        Field::Rationals
    }

    fn leading_term(&self, _: &MGroupAlgebraElement) -> Result<MGroupAlgebraElement> {
        Err(Error::Precondition("leading terms need the exact filtration; only a lower bound is available".into()))
    }

    fn graded_coordinates(&self, _: &MGroupAlgebraElement) -> Result<Vec<(MetabelianElement, Rational)>> {
        Err(Error::Precondition("the graded ring needs the exact filtration; only a lower bound is available".into()))
    }

    fn graded_field(&self) -> Field {
        Field::Rationals
    }

    fn inv_one_plus(&self, x: &MGroupAlgebraElement, _budget: usize) -> Result<MGroupAlgebraElement> {
        self.monomial_inverse(&self.one().add(x))
    }

    fn inverse(&self, x: &MGroupAlgebraElement, _budget: usize) -> Result<MGroupAlgebraElement> {
        self.monomial_inverse(x)
    }

    fn is_valuation(&self) -> bool {
        false
    }

    fn value_is_lower_bound(&self) -> bool {
        true
    }
}

// ---------------------------------------------------------------------------
// Axioms and the leading-term lemma

/// Names of the axioms violated by `x, y` and the integer `a`: `PF.1`–`PF.4`,
/// plus `V.3` when the model claims to be a valuation.
pub fn pf_violations<M: FilteredModel>(model: &M, x: &M::Elem, y: &M::Elem, a: i64) -> Result<Vec<&'static str>> {
    let mut bad = Vec::new();
    let (vx, vy) = (model.value(x)?, model.value(y)?);
    if vx.is_infinite() != model.is_zero(x) || vy.is_infinite() != model.is_zero(y) {
        bad.push("PF.1");
    }
    let vs = model.value(&model.add(x, y)?)?;
    if vs < vx.clone().min(vy.clone()) {
        bad.push("PF.2");
    }
    let vp = model.value(&model.mul(x, y)?)?;
    let sum = fv_add(&vx, &vy)?;
    if vp < sum {
        bad.push("PF.3");
    }
    if model.is_valuation() && vp != sum {
        bad.push("V.3");
    }
    if model.value(&model.scalar(a))? < Extended::Finite(model.value_zero()) {
        bad.push("PF.4");
    }
    Ok(bad)
}

/// Both sides of the two equivalences of the leading-term lemma for one tuple.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValuationSumReport {
    /// `Π (f_i + R_{>υ(f_i)}) ≠ 0` in the graded ring.
    pub graded_product_nonzero: bool,
    /// `υ(Π f_i) = Σ υ(f_i)`.
    pub product_value_additive: bool,
    /// The summands of least value `g`, and whether their leading terms sum
    /// to a nonzero element of `R_g`.
    pub min_summands: usize,
    pub graded_sum_nonzero: bool,
    /// `υ(Σ f_i) = g` over those summands.
    pub sum_value_equal: bool,
}

impl ValuationSumReport {
    pub fn holds(&self) -> bool {
        self.graded_product_nonzero == self.product_value_additive && self.graded_sum_nonzero == self.sum_value_equal
    }
}

fn homogeneous_nonzero<M: FilteredModel>(model: &M, h: &M::Elem, g: &FiltrationValue) -> Result<bool> {
    if model.is_zero(h) || model.value(h)? != *g {
        return Ok(false);
    }
    Ok(!model.graded_coordinates(h)?.is_empty())
}

/// Checks the product and sum equivalences for nonzero `fs`. The sum
/// equivalence is applied to the summands of least value.
pub fn check_valuationsum<M: FilteredModel>(model: &M, fs: &[M::Elem]) -> Result<ValuationSumReport> {
    if fs.is_empty() {
        return Err(Error::Precondition("at least one element".into()));
    }
    let mut values = Vec::with_capacity(fs.len());
    for f in fs {
        let v = model.value(f)?;
        if v.is_infinite() {
            return Err(Error::ZeroArgument("leading-term lemma input"));
        }
        values.push(v);
    }
    let mut sum = Extended::Finite(model.value_zero());
    let mut prod = model.one();
    let mut lt_prod = model.one();
    for (f, v) in fs.iter().zip(&values) {
        sum = fv_add(&sum, v)?;
        prod = model.mul(&prod, f)?;
        lt_prod = model.mul(&lt_prod, &model.leading_term(f)?)?;
    }
    let graded_product_nonzero = homogeneous_nonzero(model, &lt_prod, &sum)?;
    let product_value_additive = model.value(&prod)? == sum;

    let g = values.iter().min().expect("nonempty").clone();
    let mut total = model.zero();
    let mut lt_total = model.zero();
    let mut min_summands = 0;
    for (f, v) in fs.iter().zip(&values) {
        if *v == g {
            min_summands += 1;
            total = model.add(&total, f)?;
            lt_total = model.add(&lt_total, &model.leading_term(f)?)?;
        }
    }
    let graded_sum_nonzero = homogeneous_nonzero(model, &lt_total, &g)?;
    let sum_value_equal = model.value(&total)? == g;
    Ok(ValuationSumReport {
        graded_product_nonzero,
        product_value_additive,
        min_summands,
        graded_sum_nonzero,
        sum_value_equal,
    })
}

// ---------------------------------------------------------------------------
// Reduction along a convex jump

/// `O/T → ℝ ∪ {∞}` obtained from a convex jump `(N, C)` of the value group:
/// `O = {f : υ(f) ≥ n for some n ∈ N}`, `T = {f ∈ O : υ(f) > C}`, and
/// `χ(f + T) = π(υ(f))` with `π: C → C/N ⊂ ℝ`.
pub struct ConvexReduction<'a, M: FilteredModel> {
    model: &'a M,
    jump: crate::ogroup::ConvexJump,
}

impl<'a, M: FilteredModel> ConvexReduction<'a, M> {
    pub fn new(model: &'a M, jump: crate::ogroup::ConvexJump) -> Result<Self> {
        if jump.tag() != model.value_group() {
            return Err(Error::TagMismatch(model.value_group().to_string(), jump.tag().to_string()));
        }
        Ok(Self { model, jump })
    }

    pub fn model(&self) -> &M {
        self.model
    }

    /// `υ ≥ 0` or `υ ∈ N`; convexity of `N` makes this equivalent to the
    /// definition.
    pub fn in_o(&self, f: &M::Elem) -> Result<bool> {
        Ok(match self.model.value(f)? {
            Extended::Infinity => true,
            Extended::Finite(v) => v.sign() != Ordering::Less || self.jump.in_n(&v),
        })
    }

    /// `υ = ∞`, or `υ > 0` outside `C`.
    pub fn in_t(&self, f: &M::Elem) -> Result<bool> {
        Ok(match self.model.value(f)? {
            Extended::Infinity => true,
            Extended::Finite(v) => v.sign() == Ordering::Greater && !self.jump.in_c(&v),
        })
    }

    pub fn value(&self, f: &M::Elem) -> Result<Extended<Rational>> {
        if !self.in_o(f)? {
            return Err(Error::NotInSubset(format!("{f} is not in the subring O")));
        }
        if self.in_t(f)? {
            return Ok(Extended::Infinity);
        }
        let Extended::Finite(v) = self.model.value(f)? else { unreachable!("T contains 0") };
        Ok(Extended::Finite(crate::ogroup::jump_quotient_to_reals(&self.jump, &v)?))
    }

    /// Axioms violated on `O/T` by the classes of `x, y` and the integer `a`.
    pub fn pf_violations(&self, x: &M::Elem, y: &M::Elem, a: i64) -> Result<Vec<&'static str>> {
        let m = self.model;
        let mut bad = Vec::new();
        let (vx, vy) = (self.value(x)?, self.value(y)?);
        if vx.is_infinite() != self.in_t(x)? || vy.is_infinite() != self.in_t(y)? {
            bad.push("PF.1");
        }
        if self.value(&m.add(x, y)?)? < vx.clone().min(vy.clone()) {
            bad.push("PF.2");
        }
        if self.value(&m.mul(x, y)?)? < vx + vy {
            bad.push("PF.3");
        }
        if self.value(&m.scalar(a))? < Extended::Finite(Rational::zero()) {
            bad.push("PF.4");
        }
        Ok(bad)
    }
}

// ---------------------------------------------------------------------------
// Certifiers

fn word_values<M: FilteredModel>(model: &M, gens: &[M::Elem], words: &[Word]) -> Result<Vec<M::Elem>> {
    let mut cache: BTreeMap<Word, M::Elem> = BTreeMap::new();
    let mut out = Vec::with_capacity(words.len());
    for w in words {
        let value = match w.letters().split_last() {
            None => model.one(),
            Some((&last, init)) => {
                let prefix = Word::new(init.to_vec());
                let head = match cache.get(&prefix) {
                    Some(h) => h.clone(),
                    None => word_values(model, gens, &[prefix])?.remove(0),
                };
                model.mul(&head, &gens[last])?
            }
        };
        cache.insert(w.clone(), value.clone());
        out.push(value);
    }
    Ok(out)
}

fn group_word_values<M: FilteredModel>(
    model: &M,
    gens: &[M::Elem],
    inverses: &[M::Elem],
    words: &[GroupWord],
) -> Result<Vec<M::Elem>> {
    let mut cache: BTreeMap<GroupWord, M::Elem> = BTreeMap::new();
    let mut out = Vec::with_capacity(words.len());
    for w in words {
        let value = match w.letters().split_last() {
            None => model.one(),
            Some((last, init)) => {
                let prefix = GroupWord::reduce(init);
                let head = match cache.get(&prefix) {
                    Some(h) => h.clone(),
                    None => group_word_values(model, gens, inverses, &[prefix])?.remove(0),
                };
                let letter = if last.inv { &inverses[last.gen] } else { &gens[last.gen] };
                model.mul(&head, letter)?
            }
        };
        cache.insert(w.clone(), value.clone());
        out.push(value);
    }
    Ok(out)
}

fn witness_from_dependency(labels: &[String], dep: &Dependency) -> serde_json::Value {
    let entries: Vec<_> = dep.iter().map(|(i, c)| json!({ "word": labels[*i], "coeff": c.to_string() })).collect();
    json!({ "dependency": entries })
}

fn letter_names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("x{i}")).collect()
}

fn label_word(w: &Word) -> String {
    w.to_string()
}

/// Linear independence of the leading terms of `values` in the graded ring;
/// components of different value are independent, so coordinates are keyed
/// by value as well.
fn graded_independence<M: FilteredModel>(
    model: &M,
    values: &[M::Elem],
    labels: &[String],
) -> Result<(usize, Option<serde_json::Value>)> {
    let mut rows = Vec::with_capacity(values.len());
    for v in values {
        let fv = model.value(v)?;
        let row: Vec<((Structural, M::Key), Rational)> = match &fv {
            Extended::Infinity => Vec::new(),
            Extended::Finite(g) => model
                .graded_coordinates(&model.leading_term(v)?)?
                .into_iter()
                .map(|(k, c)| ((Structural(g.clone()), k), c))
                .collect(),
        };
        rows.push(row);
    }
    let res = independence_by_key(&model.graded_field(), &rows);
    Ok((res.rank, res.dependency.as_ref().map(|d| witness_from_dependency(labels, d))))
}

fn linear_independence<M: FilteredModel>(
    model: &M,
    values: &[M::Elem],
    labels: &[String],
) -> (usize, Option<serde_json::Value>) {
    let rows: Vec<Vec<(M::Key, Rational)>> = values.iter().map(|v| model.coordinates(v)).collect();
    let res = independence_by_key(&model.field(), &rows);
    (res.rank, res.dependency.as_ref().map(|d| witness_from_dependency(labels, d)))
}

/// Checks the four hypotheses of the division-ring theorem for `xs`:
/// (1) `υ(x − y) = min(υ(x), υ(y))` for `x ≠ y`, (2) `υ(x) > 0`,
/// (3) `υ(x) ∼ υ(y)`, (4) leading terms of all words of length ≤ `d` in `xs`
/// are linearly independent in the graded ring.
pub fn certify_theorem_hypotheses<M: FilteredModel>(model: &M, xs: &[M::Elem], d: usize) -> Result<Certificate> {
    if xs.is_empty() {
        return Err(Error::Precondition("empty generator set".into()));
    }
    let values: Vec<FiltrationValue> = xs.iter().map(|x| model.value(x)).collect::<Result<_>>()?;

    let mut w1 = None;
    'pairs: for i in 0..xs.len() {
        for j in i + 1..xs.len() {
            let v = model.value(&model.sub(&xs[i], &xs[j])?)?;
            let m = values[i].clone().min(values[j].clone());
            if v != m {
                w1 = Some(json!({ "i": i + 1, "j": j + 1, "value_of_difference": fv_string(&v), "min": fv_string(&m) }));
                break 'pairs;
            }
        }
    }
    let c1 = Certificate::from_witness("hypothesis-injective", "v(x - y) = min(v(x), v(y)) for distinct generators", w1);

    let zero = Extended::Finite(model.value_zero());
    let w2 = values
        .iter()
        .position(|v| *v <= zero)
        .map(|i| json!({ "i": i + 1, "value": fv_string(&values[i]) }));
    let c2 = Certificate::from_witness("hypothesis-positive", "v(x) > 0 for every generator", w2);

    let mut w3 = None;
    'arch: for i in 0..xs.len() {
        for j in i + 1..xs.len() {
            let rel = match (&values[i], &values[j]) {
                (Extended::Finite(a), Extended::Finite(b)) if !a.is_zero() && !b.is_zero() => {
                    Some(archimedean_relation(a, b)?)
                }
                _ => None,
            };
            if rel != Some(Archimedean::Equivalent) {
                w3 = Some(json!({
                    "i": i + 1,
                    "j": j + 1,
                    "relation": rel.map_or("undefined".to_string(), |r| r.to_string()),
                }));
                break 'arch;
            }
        }
    }
    let c3 = Certificate::from_witness("hypothesis-archimedean", "v(x) ~ v(y) for all generators", w3);

    let words = enumerate_words(xs.len(), d);
    let labels: Vec<String> = words.iter().map(label_word).collect();
    let c4 = match word_values(model, xs, &words).and_then(|vals| graded_independence(model, &vals, &labels)) {
        Ok((rank, witness)) => Certificate::from_witness(
            "hypothesis-graded-free",
            format!("leading terms of the {} words of length <= {d} are linearly independent", words.len()),
            witness,
        )
        .rank(rank)
        .count(words.len()),
        Err(e) => Certificate::fail(
            "hypothesis-graded-free",
            "leading terms of words are linearly independent",
            json!({ "unavailable": e.to_string() }),
        ),
    };

    Ok(Certificate::pass("theorem-hypotheses", "hypotheses (1)-(4) hold at the given scale")
        .param("model", model.describe())
        .param("generators", xs.len())
        .param("d", d)
        .with_checks(vec![c1, c2, c3, c4]))
}

/// Checks that the reduced group words of length ≤ `max_len` in
/// `1 + x`, `x ∈ xs`, are linearly independent; inverses come from
/// [`FilteredModel::inv_one_plus`] with budget `e`.
pub fn certify_free_group_algebra<M: FilteredModel>(
    model: &M,
    xs: &[M::Elem],
    max_len: usize,
    e: usize,
) -> Result<Certificate> {
    let one = model.one();
    let gens: Vec<M::Elem> = xs.iter().map(|x| model.add(&one, x)).collect::<Result<_>>()?;
    let inverses: Vec<M::Elem> = xs.iter().map(|x| model.inv_one_plus(x, e)).collect::<Result<_>>()?;
    let words = enumerate_reduced(xs.len(), max_len);
    let values = group_word_values(model, &gens, &inverses, &words)?;
    let labels: Vec<String> = words.iter().map(ToString::to_string).collect();
    let (rank, witness) = linear_independence(model, &values, &labels);
    Ok(Certificate::from_witness(
        "free-group-algebra",
        format!(
            "the {} reduced words of length <= {max_len} in y_i = 1 + x_i are linearly independent",
            words.len()
        ),
        witness,
    )
    .param("model", model.describe())
    .param("generators", letter_names(xs.len()).join(","))
    .param("L", max_len)
    .param("e", e)
    .rank(rank)
    .count(words.len()))
}

/// Which case of the division-ring theorem applies.
#[derive(Debug, Clone, PartialEq)]
pub enum TheoremCase<E> {
    /// No integer has value infinitely larger than every generator.
    A,
    /// `υ(z) ≫ υ(x)` for all `x`; the generators become `z·x`.
    B { z: i64, generators: Vec<E> },
}

/// Largest integer tried by [`theorem_case_select`].
pub const CASE_SCAN_LIMIT: i64 = 64;

pub fn theorem_case_select<M: FilteredModel>(model: &M, xs: &[M::Elem]) -> Result<TheoremCase<M::Elem>> {
    let mut xvals = Vec::with_capacity(xs.len());
    for x in xs {
        match model.value(x)? {
            Extended::Finite(v) if !v.is_zero() => xvals.push(v),
            _ => return Ok(TheoremCase::A),
        }
    }
    for z in 2..=CASE_SCAN_LIMIT {
        let zs = model.scalar(z);
        let Extended::Finite(vz) = model.value(&zs)? else { continue };
        if vz.is_zero() {
            continue;
        }
        let mut dominates = true;
        for v in &xvals {
            if archimedean_relation(v, &vz)? != Archimedean::Below {
                dominates = false;
                break;
            }
        }
        if dominates {
            let generators = xs.iter().map(|x| model.mul(&zs, x)).collect::<Result<_>>()?;
            return Ok(TheoremCase::B { z, generators });
        }
    }
    Ok(TheoremCase::A)
}

/// Largest exponent tried by [`adjust_by_power`].
pub const ADJUST_CAP: usize = 64;

/// For each `x`, the least `n ≥ 0` with `υ(x·x₀ⁿ) > 0` and `υ(x·x₀ⁿ) ∼ υ(x₀)`,
/// together with `x·x₀ⁿ`.
pub fn adjust_by_power<M: FilteredModel>(model: &M, xs: &[M::Elem], x0: &M::Elem) -> Result<Vec<(usize, M::Elem)>> {
    let Extended::Finite(v0) = model.value(x0)? else {
        return Err(Error::ZeroArgument("x0"));
    };
    if v0.sign() != Ordering::Greater {
        return Err(Error::Precondition(format!("v(x0) = {v0} is not positive")));
    }
    let mut out = Vec::with_capacity(xs.len());
    for x in xs {
        let mut y = x.clone();
        let mut found = None;
        for n in 0..=ADJUST_CAP {
            if let Extended::Finite(v) = model.value(&y)? {
                if v.sign() == Ordering::Greater && archimedean_relation(&v, &v0)? == Archimedean::Equivalent {
                    found = Some(n);
                    break;
                }
            } else {
                return Err(Error::ZeroArgument("generator"));
            }
            y = model.mul(&y, x0)?;
        }
        let n = found.ok_or_else(|| {
            Error::Precondition(format!("Archimedean precondition violated: no n <= {ADJUST_CAP} works for {x}"))
        })?;
        out.push((n, y));
    }
    Ok(out)
}

/// Kind of free object for [`lift_freeness_from_graded`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FreeKind {
    Monoid,
    Group,
    Algebra,
    GroupAlgebra,
}

impl std::str::FromStr for FreeKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "monoid" => Ok(FreeKind::Monoid),
            "group" => Ok(FreeKind::Group),
            "algebra" => Ok(FreeKind::Algebra),
            "group-algebra" => Ok(FreeKind::GroupAlgebra),
            _ => Err(Error::Parse(format!("unknown kind '{s}'"))),
        }
    }
}

impl fmt::Display for FreeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FreeKind::Monoid => "monoid",
            FreeKind::Group => "group",
            FreeKind::Algebra => "algebra",
            FreeKind::GroupAlgebra => "group-algebra",
        })
    }
}

fn first_collision<M: FilteredModel>(model: &M, values: &[M::Elem], labels: &[String]) -> Option<serde_json::Value> {
    let mut seen: BTreeMap<Vec<(M::Key, Rational)>, usize> = BTreeMap::new();
    for (i, v) in values.iter().enumerate() {
        if let Some(&j) = seen.get(&model.coordinates(v)) {
            return Some(json!({ "left": labels[j], "right": labels[i], "equation": format!("{} = {}", labels[j], labels[i]) }));
        }
        seen.insert(model.coordinates(v), i);
    }
    None
}

fn graded_collision<M: FilteredModel>(model: &M, values: &[M::Elem]) -> Result<bool> {
    let mut seen = std::collections::BTreeSet::new();
    for v in values {
        let Extended::Finite(g) = model.value(v)? else { return Ok(true) };
        let key = (Structural(g), model.graded_coordinates(&model.leading_term(v)?)?);
        if !seen.insert(key) {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Re-verifies in the ring itself that `xs` generate a free object of the
/// given kind up to word length `bound`, next to the corresponding check on
/// leading terms. A graded PASS with a lifted FAIL is flagged as a
/// contradiction.
pub fn lift_freeness_from_graded<M: FilteredModel>(
    model: &M,
    xs: &[M::Elem],
    kind: FreeKind,
    bound: usize,
    e: usize,
) -> Result<Certificate> {
    let n = xs.len();
    let (values, labels, is_group) = match kind {
        FreeKind::Monoid => {
            let words: Vec<Word> = enumerate_words(n, bound);
            let vals = word_values(model, xs, &words)?;
            (vals, words.iter().map(label_word).collect::<Vec<_>>(), false)
        }
        FreeKind::Algebra => {
            let words = enumerate_words(n, bound);
            let vals = word_values(model, xs, &words)?;
            (vals, words.iter().map(label_word).collect(), false)
        }
        FreeKind::Group | FreeKind::GroupAlgebra => {
            let inverses: Vec<M::Elem> = xs.iter().map(|x| model.inverse(x, e)).collect::<Result<_>>()?;
            let words = enumerate_reduced(n, bound);
            let vals = group_word_values(model, xs, &inverses, &words)?;
            (vals, words.iter().map(ToString::to_string).collect(), true)
        }
    };
    let (lifted_witness, rank, graded_ok) = match kind {
        FreeKind::Monoid | FreeKind::Group => {
            // the empty word is the identity, which is not in the generated
            // monoid's nonempty part but does belong to the group
            let skip = usize::from(!is_group);
            let w = first_collision(model, &values[skip..], &labels[skip..]);
            let graded = graded_collision(model, &values[skip..]).map(|c| !c);
            (w, None, graded.ok())
        }
        FreeKind::Algebra | FreeKind::GroupAlgebra => {
            let (rank, w) = linear_independence(model, &values, &labels);
            let graded = graded_independence(model, &values, &labels).map(|(_, w)| w.is_none());
            (w, Some(rank), graded.ok())
        }
    };
    let contradiction = graded_ok == Some(true) && lifted_witness.is_some();
    let mut cert = Certificate::from_witness(
        "lifted-freeness",
        format!("the {kind} generated by {n} elements is free up to length {bound}"),
        lifted_witness,
    )
    .param("model", model.describe())
    .param("kind", kind.to_string())
    .param("bound", bound)
    .param("graded", graded_ok.map_or("unavailable".to_string(), |g| if g { "free" } else { "not free" }.to_string()))
    .param("contradiction", contradiction)
    .count(values.len());
    if let Some(r) = rank {
        cert = cert.rank(r);
    }
    if is_group {
        cert = cert.param("e", e);
    }
    Ok(cert)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{int, rational};
    use crate::ogroup::{normalize_free_monoid_pair, ConvexJump};

    fn z2(a: i64, b: i64) -> OrderedGroupElement {
        OrderedGroupElement::zlex(&[a, b])
    }

    fn mn_zlex() -> MnModel {
        MnModel::new(GroupTag::ZLex(2), CoefficientRing::rationals()).unwrap()
    }

    fn mn_magnus() -> MnModel {
        MnModel::new(GroupTag::FreeMagnus, CoefficientRing::rationals()).unwrap()
    }

    fn fm(s: &str) -> OrderedGroupElement {
        OrderedGroupElement::magnus(s).unwrap()
    }

    fn normalized_pair() -> (MnModel, Vec<MnSeries>) {
        let m = mn_magnus();
        let p = normalize_free_monoid_pair(&fm("x"), &fm("y"), 6).unwrap();
        let xs = vec![m.monomial(p.a, int(1)).unwrap(), m.monomial(p.b, int(1)).unwrap()];
        (m, xs)
    }

    #[test]
    fn value_examples() {
        let m = mn_zlex();
        let f = m.from_terms([(z2(0, 1), int(3)), (z2(1, 0), int(1))]).unwrap();
        assert_eq!(m.value(&f).unwrap(), Extended::Finite(z2(0, 1)));
        assert_eq!(m.value(&m.zero()).unwrap(), Extended::Infinity);
        assert_eq!(m.leading_term(&f).unwrap(), m.monomial(z2(0, 1), int(3)).unwrap());

        let nc = NcSeriesModel::rational(CoefficientRing::integers(), vec![int(1), int(2)], 4).unwrap();
        let x1x2 = nc.element([("x1 x2".parse().unwrap(), int(1))]).unwrap();
        assert_eq!(nc.value(&x1x2).unwrap(), Extended::Finite(OrderedGroupElement::Q(int(3))));
        let nc = NcSeriesModel::rational(CoefficientRing::integers(), vec![int(1), int(1)], 4).unwrap();
        let f = nc.element([("x1".parse().unwrap(), int(2)), ("x1 x2".parse().unwrap(), int(1))]).unwrap();
        assert_eq!(nc.leading_term(&f).unwrap(), nc.element([("x1".parse().unwrap(), int(2))]).unwrap());
        assert!(nc.leading_term(&nc.zero()).is_err());
    }

    #[test]
    fn valuationsum_examples() {
        let m = mn_zlex();
        let f = m.from_terms([(z2(0, 1), int(3)), (z2(1, 0), int(1))]).unwrap();
        let g = m.from_terms([(z2(0, -2), int(1)), (z2(0, 5), int(-2))]).unwrap();
        let r = check_valuationsum(&m, &[f.clone(), g]).unwrap();
        assert!(r.holds() && r.graded_product_nonzero && r.product_value_additive);

        let nc = NcSeriesModel::rational(CoefficientRing::integers(), vec![int(1), int(1)], 4).unwrap();
        let x = nc.var(0).unwrap();
        let r = check_valuationsum(&nc, &[x.clone(), x.neg()]).unwrap();
        assert!(r.holds());
        assert_eq!(r.min_summands, 2);
        assert!(!r.graded_sum_nonzero && !r.sum_value_equal);
        assert!(check_valuationsum(&m, &[f]).unwrap().holds());
        assert!(check_valuationsum(&m, &[m.zero()]).is_err());
    }

    #[test]
    fn mn_arithmetic() {
        let m = mn_magnus();
        let a = m.monomial(fm("x"), int(1)).unwrap();
        let b = m.monomial(fm("y"), int(1)).unwrap();
        assert_eq!(m.mn_mul(&a, &b).unwrap(), m.monomial(fm("x y"), int(1)).unwrap());
        let inv = m.mn_inv_one_plus(&a, 2).unwrap();
        let expected = m.from_terms([(fm("1"), int(1)), (fm("x"), int(-1)), (fm("x^2"), int(1))]).unwrap();
        assert_eq!(inv, expected);
        let back = m.mn_mul(&m.add(&m.one(), &a).unwrap(), &m.mn_inv_one_plus(&a, 5).unwrap()).unwrap();
        let residual = m.sub(&back, &m.one()).unwrap();
        assert_eq!(residual, m.monomial(fm("x^6"), int(-1)).unwrap());
        assert!(matches!(m.mn_inv_one_plus(&m.monomial(fm("x^-1"), int(1)).unwrap(), 2), Err(Error::NotInvertible(_))));
        let g = m.from_terms([(fm("x"), int(2)), (fm("x y"), int(1))]).unwrap();
        let gi = m.inverse(&g, 6).unwrap();
        let prod = m.mul(&g, &gi).unwrap();
        assert_eq!(m.leading_term(&prod).unwrap(), m.one());
    }

    #[test]
    fn convex_reduction_examples() {
        let m = mn_zlex();
        let red = ConvexReduction::new(&m, ConvexJump::ZLex { n: 2, axis: 0 }).unwrap();
        let f = m.monomial(z2(0, 3), int(1)).unwrap();
        assert_eq!(red.value(&f).unwrap(), Extended::Finite(rational(0, 1)));
        let f = m.monomial(z2(2, -7), int(5)).unwrap();
        assert_eq!(red.value(&f).unwrap(), Extended::Finite(rational(2, 1)));
        assert!(matches!(red.value(&m.monomial(z2(-1, 0), int(1)).unwrap()), Err(Error::NotInSubset(_))));
        let red = ConvexReduction::new(&m, ConvexJump::ZLex { n: 2, axis: 1 }).unwrap();
        assert_eq!(red.value(&m.monomial(z2(1, -4), int(1)).unwrap()).unwrap(), Extended::Infinity);
        assert_eq!(red.value(&m.zero()).unwrap(), Extended::Infinity);
    }

    #[test]
    fn hypotheses_examples() {
        let (m, xs) = normalized_pair();
        assert!(certify_theorem_hypotheses(&m, &xs, 4).unwrap().is_pass());
        let dup = vec![xs[0].clone(), xs[0].clone()];
        let c = certify_theorem_hypotheses(&m, &dup, 2).unwrap();
        assert!(!c.is_pass() && !c.checks[0].is_pass());
        let neg = vec![m.monomial(crate::ogroup::og_neg(&fm("y x")), int(1)).unwrap()];
        let c = certify_theorem_hypotheses(&m, &neg, 2).unwrap();
        assert!(!c.checks[1].is_pass());
    }

    #[test]
    fn free_group_algebra_examples() {
        let (m, xs) = normalized_pair();
        let c = certify_free_group_algebra(&m, &xs, 2, 6).unwrap();
        assert!(c.is_pass());
        assert_eq!(c.rank, Some(17));
        assert_eq!(certify_free_group_algebra(&m, &xs, 0, 6).unwrap().rank, Some(1));
    }

    #[test]
    fn case_selection() {
        let (m, xs) = normalized_pair();
        assert_eq!(theorem_case_select(&m, &xs).unwrap(), TheoremCase::A);
        let nc = NcSeriesModel::new(
            CoefficientRing::integers(),
            vec![z2(0, 1), z2(0, 1)],
            Some((BigInt::from(2), z2(1, 0))),
            3,
        )
        .unwrap();
        let xs = vec![nc.var(0).unwrap(), nc.var(1).unwrap()];
        match theorem_case_select(&nc, &xs).unwrap() {
            TheoremCase::B { z, generators } => {
                assert_eq!(z, 2);
                assert_eq!(generators[0], nc.var(0).unwrap().scale(&int(2)));
            }
            other => panic!("expected case b, got {other:?}"),
        }
        assert_eq!(theorem_case_select(&m, &[]).unwrap(), TheoremCase::A);
    }

    #[test]
    fn adjust_examples() {
        let m = mn_zlex();
        let x0 = m.monomial(z2(0, 1), int(1)).unwrap();
        let x = m.monomial(z2(0, -3), int(1)).unwrap();
        let out = adjust_by_power(&m, &[x, x0.clone()], &x0).unwrap();
        assert_eq!(out[0].0, 4);
        assert_eq!(m.value(&out[0].1).unwrap(), Extended::Finite(z2(0, 1)));
        assert_eq!(out[1].0, 0);
        let big = m.monomial(z2(1, 0), int(1)).unwrap();
        assert!(adjust_by_power(&m, &[big], &x0).is_err());
    }

    #[test]
    fn lifted_examples() {
        let (m, xs) = normalized_pair();
        assert!(lift_freeness_from_graded(&m, &xs, FreeKind::Monoid, 5, 8).unwrap().is_pass());
        let nc = NcSeriesModel::rational(CoefficientRing::integers(), vec![int(1), int(1)], 4).unwrap();
        let xs = vec![nc.var(0).unwrap(), nc.var(1).unwrap()];
        assert!(lift_freeness_from_graded(&nc, &xs, FreeKind::Algebra, 3, 8).unwrap().is_pass());
    }
}

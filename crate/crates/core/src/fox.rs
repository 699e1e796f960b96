//! The Magnus–Fox embedding `Ψ: Z[F] → Z⟨⟨X₁,…,Xₙ⟩⟩`, `Xᵢ ↦ 1 + Xᵢ`, and the
//! Magnus bi-ordering of the free group read off from it.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, LazyLock, RwLock};

use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde_json::json;

use crate::certificate::Certificate;
use crate::error::{Error, Result};
use crate::exactnum::{CoefficientRing, Extended, Rational};
use crate::freeobj::{enumerate_reduced, GroupWord, Word};
use crate::linalg::{independence_by_key, Dependency};
use crate::ncseries::{NcSeries, SeriesParams};

/// Finite linear combination of free-group elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupAlgebraElement {
    n: usize,
    ring: CoefficientRing,
    terms: BTreeMap<GroupWord, Rational>,
}

impl GroupAlgebraElement {
    pub fn zero(n: usize, ring: CoefficientRing) -> Self {
        Self { n, ring, terms: BTreeMap::new() }
    }

    pub fn from_terms(
        n: usize,
        ring: CoefficientRing,
        terms: impl IntoIterator<Item = (GroupWord, Rational)>,
    ) -> Result<Self> {
        let mut acc: BTreeMap<GroupWord, Rational> = BTreeMap::new();
        for (w, c) in terms {
            if let Some(g) = w.max_gen() {
                if g >= n {
                    return Err(Error::AlphabetMismatch { letter: g + 1, size: n });
                }
            }
            let c = ring.element(c)?;
            *acc.entry(w).or_insert_with(Rational::zero) += c;
        }
        Ok(Self::from_raw(n, ring, acc))
    }

    pub fn group_element(n: usize, ring: CoefficientRing, w: GroupWord) -> Result<Self> {
        Self::from_terms(n, ring, [(w, Rational::one())])
    }

    fn from_raw(n: usize, ring: CoefficientRing, raw: BTreeMap<GroupWord, Rational>) -> Self {
        let terms = raw
            .into_iter()
            .filter_map(|(w, c)| {
                let c = ring.normalize(c);
                (!c.is_zero()).then_some((w, c))
            })
            .collect();
        Self { n, ring, terms }
    }

    pub fn terms(&self) -> &BTreeMap<GroupWord, Rational> {
        &self.terms
    }

    pub fn vars(&self) -> usize {
        self.n
    }

    pub fn ring(&self) -> &CoefficientRing {
        &self.ring
    }

    fn ensure_same(&self, other: &Self) -> Result<()> {
        if self.n != other.n || self.ring != other.ring {
            return Err(Error::ParameterMismatch("group algebra elements over different data".into()));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.ensure_same(other)?;
        let mut acc = self.terms.clone();
        for (w, c) in &other.terms {
            *acc.entry(w.clone()).or_insert_with(Rational::zero) += c;
        }
        Ok(Self::from_raw(self.n, self.ring.clone(), acc))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.ensure_same(other)?;
        let mut acc: BTreeMap<GroupWord, Rational> = BTreeMap::new();
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                *acc.entry(u.mul(v)).or_insert_with(Rational::zero) += a * b;
            }
        }
        Ok(Self::from_raw(self.n, self.ring.clone(), acc))
    }

    /// Sum of coefficients.
    pub fn augmentation(&self) -> Rational {
        self.ring.normalize(self.terms.values().fold(Rational::zero(), |a, c| a + c))
    }
}

impl fmt::Display for GroupAlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(w, c)| format!("{c}*({w})")).collect();
        f.write_str(&parts.join(" + "))
    }
}

/// Images of the generators and their inverses at the given truncation.
pub struct LetterImages {
    params: Arc<SeriesParams>,
    pos: Vec<NcSeries>,
    neg: Vec<NcSeries>,
}

impl LetterImages {
    pub fn new(n: usize, ring: CoefficientRing, d: u64) -> Result<Self> {
        let params = SeriesParams::unit(n, ring, d);
        let one = NcSeries::one(&params);
        let mut pos = Vec::with_capacity(n);
        let mut neg = Vec::with_capacity(n);
        for i in 0..n {
            let x = NcSeries::var(&params, i)?;
            pos.push(one.add(&x)?);
            neg.push(x.inv_one_plus()?);
        }
        Ok(Self { params, pos, neg })
    }

    pub fn params(&self) -> &Arc<SeriesParams> {
        &self.params
    }

    pub fn embed_word(&self, w: &GroupWord) -> Result<NcSeries> {
        let mut acc = NcSeries::one(&self.params);
        for l in w.letters() {
            let img = if l.inv { self.neg.get(l.gen) } else { self.pos.get(l.gen) };
            let img = img.ok_or(Error::AlphabetMismatch { letter: l.gen + 1, size: self.pos.len() })?;
            acc = acc.mul(img)?;
        }
        Ok(acc)
    }
}

/// `Ψ(a)` truncated at total degree `d`.
pub fn fox_embed(a: &GroupAlgebraElement, d: u64) -> Result<NcSeries> {
    let images = LetterImages::new(a.n, a.ring.clone(), d)?;
    let mut acc = NcSeries::zero(images.params());
    for (w, c) in &a.terms {
        acc = acc.add(&images.embed_word(w)?.scale(c))?;
    }
    Ok(acc)
}

pub fn fox_embed_word(w: &GroupWord, n: usize, d: u64) -> Result<NcSeries> {
    LetterImages::new(n, CoefficientRing::integers(), d)?.embed_word(w)
}

fn dependency_witness<K: fmt::Display>(keys: &[K], dep: &Dependency) -> serde_json::Value {
    let entries: Vec<_> =
        dep.iter().map(|(i, c)| json!({ "word": keys[*i].to_string(), "coeff": c.to_string() })).collect();
    json!({ "dependency": entries })
}

/// Certifies that the Fox images of all reduced words of length ≤ `max_len`
/// are linearly independent at truncation `d`.
///
/// A FAIL with `d < 2·max_len` can come from the truncation being too coarse
/// (with one letter, `x^{-L},…,x^{L}` need degree `2L`); with larger `d` it
/// would contradict injectivity of `Ψ`.
pub fn certify_group_algebra_freeness(
    ring: &CoefficientRing,
    n: usize,
    max_len: usize,
    d: u64,
) -> Result<Certificate> {
    if d < max_len as u64 {
        return Err(Error::Precondition(format!("truncation {d} is below the word length {max_len}")));
    }
    let words = enumerate_reduced(n, max_len);
    let images = LetterImages::new(n, ring.clone(), d)?;
    let vectors: Vec<Vec<(Word, Rational)>> = words
        .par_iter()
        .map(|w| images.embed_word(w).map(|s| s.terms().iter().map(|(k, c)| (k.clone(), c.clone())).collect()))
        .collect::<Result<_>>()?;
    let res = independence_by_key(&ring.field(), &vectors);
    let witness = res.dependency.as_ref().map(|dep| dependency_witness(&words, dep));
    Ok(Certificate::from_witness(
        "fox-freeness",
        format!(
            "images under X_i -> 1+X_i of the {} reduced words of length <= {max_len} in {n} letters are linearly independent modulo degree > {d}",
            words.len()
        ),
        witness,
    )
    .param("n", n)
    .param("L", max_len)
    .param("d", d)
    .param("ring", ring.tag())
    .rank(res.rank)
    .count(words.len()))
}

/// First nonzero term, in deglex order, of `Ψ(g) − 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MagnusLeading {
    pub monomial: Word,
    pub coeff: Rational,
}

const CACHE_LIMIT: usize = 1 << 16;

static LEADING_CACHE: LazyLock<RwLock<HashMap<GroupWord, Option<MagnusLeading>>>> =
    LazyLock::new(|| RwLock::new(HashMap::new()));

/// Leading term of `Ψ(g) − 1`; `None` exactly for the identity.
///
/// The truncation starts at degree one and doubles; the first nonzero Fox
/// coefficient of a reduced word of length ℓ appears at degree at most ℓ, and
/// the search gives up with an internal error past `4ℓ`.
pub fn magnus_leading(g: &GroupWord) -> Result<Option<MagnusLeading>> {
    if g.is_identity() {
        return Ok(None);
    }
    if let Some(hit) = LEADING_CACHE.read().expect("cache lock").get(g) {
        return Ok(hit.clone());
    }
    let n = g.max_gen().expect("nonempty word") + 1;
    let cap = 4 * g.len() as u64;
    let mut d = 1u64;
    let found = loop {
        let s = fox_embed_word(g, n, d)?;
        let first = s.terms().iter().find(|(w, _)| !w.is_empty());
        if let Some((w, c)) = first {
            break MagnusLeading { monomial: w.clone(), coeff: c.clone() };
        }
        if d >= cap {
            return Err(Error::Internal(format!("no nonzero Fox coefficient for {g} up to degree {d}")));
        }
        d = (2 * d).min(cap);
    };
    let mut cache = LEADING_CACHE.write().expect("cache lock");
    if cache.len() >= CACHE_LIMIT {
        cache.clear();
    }
    cache.insert(g.clone(), Some(found.clone()));
    Ok(Some(found))
}

fn leading(g: &GroupWord) -> Option<MagnusLeading> {
    magnus_leading(g).expect("the Fox embedding is injective")
}

/// Sign of `g` in the Magnus order.
pub fn magnus_sign(g: &GroupWord) -> Ordering {
    match leading(g) {
        None => Ordering::Equal,
        Some(l) if l.coeff.is_positive() => Ordering::Greater,
        Some(_) => Ordering::Less,
    }
}

/// `g < h` iff the leading coefficient of `Ψ(h g⁻¹) − 1` is positive.
pub fn magnus_compare(g: &GroupWord, h: &GroupWord) -> Ordering {
    magnus_sign(&h.mul(&g.inv())).reverse()
}

/// Smallest degree of a nonzero term of `Ψ(g) − 1`; infinite for `g = 1`.
pub fn magnus_lowest_degree(g: &GroupWord) -> Extended<usize> {
    match leading(g) {
        None => Extended::Infinity,
        Some(l) => Extended::Finite(l.monomial.len()),
    }
}

/// Leading monomial of `Ψ(g) − 1`. It is unchanged under inversion, and
/// determines the Archimedean class of `g` in the Magnus order.
pub fn magnus_leading_monomial(g: &GroupWord) -> Option<Word> {
    leading(g).map(|l| l.monomial)
}

//! Noncommutative polynomials and truncated power series `Z⟨⟨X₁,…,Xₙ⟩⟩`.
//!
//! Each variable carries a positive rational weight. A series is stored modulo
//! the words whose weighted degree exceeds the truncation bound `d`, so every
//! stored word has `wed(ω) ≤ d`. The filtration value of a series is
//! `wed_η(f) = min { η(z_ω) + wed(ω) }` over its terms.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::{parse_bigint, parse_rational, CoefficientRing, Eta, Extended, Rational};
use crate::freeobj::Word;

/// Positive rational weights p₁, …, pₙ.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Weights(Vec<Rational>);

impl Weights {
    pub fn new(weights: Vec<Rational>) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::Precondition("at least one weight is required".into()));
        }
        if let Some(w) = weights.iter().find(|w| !w.is_positive()) {
            return Err(Error::Precondition(format!("weights must be positive, got {w}")));
        }
        Ok(Weights(weights))
    }

    pub fn unit(n: usize) -> Self {
        Weights(vec![Rational::one(); n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[Rational] {
        &self.0
    }

    /// Weighted degree `Σ p_{i_j}`; zero for the empty word.
    pub fn wed(&self, w: &Word) -> Rational {
        w.letters().iter().fold(Rational::zero(), |acc, &i| acc + &self.0[i])
    }

    pub fn min_weight(&self) -> &Rational {
        self.0.iter().min().expect("weights are nonempty")
    }
}

pub fn wed(w: &Word, weights: &Weights) -> Rational {
    weights.wed(w)
}

/// Shape shared by all series that may be combined with each other.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SeriesParams {
    weights: Weights,
    ring: CoefficientRing,
    truncation: Rational,
}

impl SeriesParams {
    pub fn new(weights: Weights, ring: CoefficientRing, truncation: Rational) -> Result<Arc<Self>> {
        if truncation.is_negative() {
            return Err(Error::Precondition(format!("truncation must be nonnegative, got {truncation}")));
        }
        Ok(Arc::new(Self { weights, ring, truncation }))
    }

    /// Unit weights over `ring`, truncated at total degree `d`.
    pub fn unit(n: usize, ring: CoefficientRing, d: u64) -> Arc<Self> {
        Arc::new(Self { weights: Weights::unit(n), ring, truncation: Rational::from_integer(d.into()) })
    }

    pub fn vars(&self) -> usize {
        self.weights.len()
    }

    pub fn weights(&self) -> &Weights {
        &self.weights
    }

    pub fn ring(&self) -> &CoefficientRing {
        &self.ring
    }

    pub fn truncation(&self) -> &Rational {
        &self.truncation
    }

    pub fn with_truncation(&self, truncation: Rational) -> Result<Arc<Self>> {
        Self::new(self.weights.clone(), self.ring.clone(), truncation)
    }
}

/// A truncated noncommutative series. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NcSeries {
    params: Arc<SeriesParams>,
    terms: BTreeMap<Word, Rational>,
}

impl NcSeries {
    pub fn zero(params: &Arc<SeriesParams>) -> Self {
        Self { params: params.clone(), terms: BTreeMap::new() }
    }

    pub fn one(params: &Arc<SeriesParams>) -> Self {
        Self::constant(params, Rational::one())
    }

    pub fn constant(params: &Arc<SeriesParams>, c: Rational) -> Self {
        let mut s = Self::zero(params);
        let c = params.ring.normalize(c);
        if !c.is_zero() {
            s.terms.insert(Word::one(), c);
        }
        s
    }

    /// The variable `X_{i+1}` (zero-based index `i`).
    pub fn var(params: &Arc<SeriesParams>, i: usize) -> Result<Self> {
        Self::monomial(params, Word::letter(i), Rational::one())
    }

    pub fn monomial(params: &Arc<SeriesParams>, w: Word, c: Rational) -> Result<Self> {
        Self::from_terms(params, [(w, c)])
    }

    /// Builds a series, validating letters and coefficients and dropping
    /// words above the truncation bound.
    pub fn from_terms(
        params: &Arc<SeriesParams>,
        terms: impl IntoIterator<Item = (Word, Rational)>,
    ) -> Result<Self> {
        let mut acc: BTreeMap<Word, Rational> = BTreeMap::new();
        for (w, c) in terms {
            if let Some(i) = w.max_letter() {
                if i >= params.vars() {
                    return Err(Error::AlphabetMismatch { letter: i + 1, size: params.vars() });
                }
            }
            let c = params.ring.element(c)?;
            if params.weights.wed(&w) > params.truncation {
                continue;
            }
            *acc.entry(w).or_insert_with(Rational::zero) += c;
        }
        Ok(Self::from_raw(params, acc))
    }

    fn from_raw(params: &Arc<SeriesParams>, raw: BTreeMap<Word, Rational>) -> Self {
        let ring = &params.ring;
        let terms = raw
            .into_iter()
            .filter_map(|(w, c)| {
                let c = ring.normalize(c);
                (!c.is_zero()).then_some((w, c))
            })
            .collect();
        Self { params: params.clone(), terms }
    }

    pub fn params(&self) -> &Arc<SeriesParams> {
        &self.params
    }

    pub fn terms(&self) -> &BTreeMap<Word, Rational> {
        &self.terms
    }

    pub fn coeff(&self, w: &Word) -> Rational {
        self.terms.get(w).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(&Word::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    fn ensure_same(&self, other: &NcSeries) -> Result<()> {
        if self.params != other.params {
            return Err(Error::ParameterMismatch(
                "series differ in variables, weights, ring or truncation".into(),
            ));
        }
        Ok(())
    }

    pub fn add(&self, other: &NcSeries) -> Result<NcSeries> {
        self.ensure_same(other)?;
        let mut acc = self.terms.clone();
        for (w, c) in &other.terms {
            *acc.entry(w.clone()).or_insert_with(Rational::zero) += c;
        }
        Ok(Self::from_raw(&self.params, acc))
    }

    pub fn neg(&self) -> NcSeries {
        let raw = self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect();
        Self::from_raw(&self.params, raw)
    }

    pub fn sub(&self, other: &NcSeries) -> Result<NcSeries> {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Rational) -> NcSeries {
        let raw = self.terms.iter().map(|(w, a)| (w.clone(), a * c)).collect();
        Self::from_raw(&self.params, raw)
    }

    /// Truncated product. Pairs whose combined weight exceeds `d` are skipped.
    pub fn mul(&self, other: &NcSeries) -> Result<NcSeries> {
        self.ensure_same(other)?;
        let weights = &self.params.weights;
        let d = &self.params.truncation;
        let mut rhs: Vec<(Rational, &Word, &Rational)> =
            other.terms.iter().map(|(w, c)| (weights.wed(w), w, c)).collect();
        rhs.sort_by(|a, b| a.0.cmp(&b.0));
        let mut acc: BTreeMap<Word, Rational> = BTreeMap::new();
        for (u, a) in &self.terms {
            let budget = d - weights.wed(u);
            for (wv, v, b) in &rhs {
                if *wv > budget {
                    break;
                }
                *acc.entry(u.concat(v)).or_insert_with(Rational::zero) += a * *b;
            }
        }
        Ok(Self::from_raw(&self.params, acc))
    }

    /// `wed_η(f)`; infinity exactly for the zero series.
    pub fn wed_eta(&self) -> Extended<Rational> {
        let ring = &self.params.ring;
        self.terms
            .iter()
            .map(|(w, c)| ring.eta_value(c) + Extended::Finite(self.params.weights.wed(w)))
            .min()
            .unwrap_or(Extended::Infinity)
    }

    /// `(1 + f)^{-1} = Σ_{k=0}^{K} (-f)^k` with `K = ⌈d / m⌉`, where `m` is the
    /// least weighted degree of a term of `f`. `f` must have zero constant term:
    /// constant terms are never removed by weighted-degree truncation, so the
    /// geometric series would not terminate.
    pub fn inv_one_plus(&self) -> Result<NcSeries> {
        let c0 = self.constant_term();
        if !c0.is_zero() {
            return Err(Error::NotInvertible(format!("constant term {c0} is nonzero")));
        }
        let one = NcSeries::one(&self.params);
        let weights = &self.params.weights;
        let Some(m) = self.terms.keys().map(|w| weights.wed(w)).min() else {
            return Ok(one);
        };
        let k = geometric_length(&self.params.truncation, &m);
        let minus_f = self.neg();
        let mut acc = one.clone();
        let mut i = num_bigint::BigInt::zero();
        while i < k {
            acc = one.add(&minus_f.mul(&acc)?)?;
            i += 1;
        }
        Ok(acc)
    }

    /// Re-truncate at a smaller bound.
    pub fn truncate_to(&self, d: &Rational) -> Result<NcSeries> {
        if d > &self.params.truncation {
            return Err(Error::Precondition(format!(
                "cannot raise truncation from {} to {d}",
                self.params.truncation
            )));
        }
        let params = self.params.with_truncation(d.clone())?;
        let weights = &self.params.weights;
        let terms = self.terms.iter().filter(|(w, _)| &weights.wed(w) <= d).map(|(w, c)| (w.clone(), c.clone()));
        Ok(Self { params, terms: terms.collect() })
    }

    /// Terms of least filtration value.
    pub fn leading_part(&self) -> NcSeries {
        let v = self.wed_eta();
        let ring = &self.params.ring;
        let terms = self
            .terms
            .iter()
            .filter(|(w, c)| ring.eta_value(c) + Extended::Finite(self.params.weights.wed(w)) == v)
            .map(|(w, c)| (w.clone(), c.clone()))
            .collect();
        Self { params: self.params.clone(), terms }
    }

    pub fn to_json(&self) -> SeriesJson {
        let eta = match self.params.ring.eta() {
            Eta::Trivial => None,
            Eta::PAdic { p, g } => Some(EtaJson { p: p.to_string(), g: g.to_string() }),
        };
        SeriesJson {
            vars: self.params.vars(),
            weights: self.params.weights.0.iter().map(|w| w.to_string()).collect(),
            truncation: self.params.truncation.to_string(),
            ring: self.params.ring.tag(),
            eta,
            terms: self
                .terms
                .iter()
                .map(|(w, c)| TermJson { word: w.to_string(), coeff: c.to_string() })
                .collect(),
        }
    }

    pub fn from_json(j: &SeriesJson) -> Result<NcSeries> {
        let weights = Weights::new(j.weights.iter().map(|w| parse_rational(w)).collect::<Result<_>>()?)?;
        if weights.len() != j.vars {
            return Err(Error::Parse(format!("{} weights given for {} variables", weights.len(), j.vars)));
        }
        let mut ring = CoefficientRing::from_tag(&j.ring)?;
        if let Some(e) = &j.eta {
            ring = ring.with_eta(Eta::PAdic { p: parse_bigint(&e.p)?, g: parse_rational(&e.g)? })?;
        }
        let params = SeriesParams::new(weights, ring, parse_rational(&j.truncation)?)?;
        let terms = j
            .terms
            .iter()
            .map(|t| Ok((t.word.parse::<Word>()?, parse_rational(&t.coeff)?)))
            .collect::<Result<Vec<_>>>()?;
        Self::from_terms(&params, terms)
    }
}

impl fmt::Display for NcSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (w, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if w.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{w}")?;
            } else {
                write!(f, "{abs} {w}")?;
            }
        }
        Ok(())
    }
}

/// Wire form of a series.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesJson {
    pub vars: usize,
    pub weights: Vec<String>,
    pub truncation: String,
    pub ring: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub eta: Option<EtaJson>,
    pub terms: Vec<TermJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EtaJson {
    pub p: String,
    pub g: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub word: String,
    pub coeff: String,
}

/// Least `k` with `k·m ≥ d` for positive `m`.
pub fn geometric_length(d: &Rational, m: &Rational) -> num_bigint::BigInt {
    let q = d / m;
    let (n, r) = q.numer().div_rem(q.denom());
    if r.is_zero() {
        n
    } else {
        n + 1
    }
}

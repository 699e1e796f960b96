//! The free metabelian group `M = F/F''` of rank two, realised through the
//! Magnus embedding
//!
//! ```text
//! g ↦ [ x^a y^b   P·t₁ + Q·t₂ ]
//!     [ 0         1           ]
//! ```
//!
//! over the Laurent ring `ℤ[x^±, y^±]`, and its rational group algebra.

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use num_traits::{One, Signed, Zero};
use serde_json::json;

use crate::certificate::{Certificate, Status};
use crate::error::{Error, Result};
use crate::exactnum::{Field, Rational};
use crate::freeobj::{enumerate_words, Alphabet, GroupWord, Word};
use crate::linalg::independence_by_key;

/// Finite Laurent polynomial in two commuting variables.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LaurentPoly2 {
    terms: BTreeMap<(i64, i64), Rational>,
}

impl LaurentPoly2 {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(i: i64, j: i64, c: Rational) -> Self {
        let mut p = Self::zero();
        p.add_term((i, j), c);
        p
    }

    pub fn one() -> Self {
        Self::monomial(0, 0, Rational::one())
    }

    pub fn from_terms(terms: impl IntoIterator<Item = ((i64, i64), Rational)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn terms(&self) -> &BTreeMap<(i64, i64), Rational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, e: (i64, i64), c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut r = self.clone();
        for (e, c) in &other.terms {
            r.add_term(*e, c.clone());
        }
        r
    }

    pub fn neg(&self) -> Self {
        Self { terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut r = Self::zero();
        for ((i, j), a) in &self.terms {
            for ((k, l), b) in &other.terms {
                r.add_term((i + k, j + l), a * b);
            }
        }
        r
    }

    /// Multiplication by `x^i y^j`.
    pub fn shift(&self, i: i64, j: i64) -> Self {
        Self { terms: self.terms.iter().map(|((a, b), c)| ((a + i, b + j), c.clone())).collect() }
    }

    /// `R` with `self = R·(y − 1)`, if it exists.
    pub fn div_y_minus_one(&self) -> Option<Self> {
        let mut rows: BTreeMap<i64, BTreeMap<i64, Rational>> = BTreeMap::new();
        for ((i, j), c) in &self.terms {
            rows.entry(*i).or_default().insert(*j, c.clone());
        }
        let mut r = Self::zero();
        for (i, row) in rows {
            // coefficient of y^j in R(y)(y-1) is r_{j-1} - r_j
            let (&lo, _) = row.first_key_value().expect("nonempty row");
            let (&hi, _) = row.last_key_value().expect("nonempty row");
            let mut acc = Rational::zero();
            for j in lo..hi {
                acc -= row.get(&j).cloned().unwrap_or_else(Rational::zero);
                r.add_term((i, j), acc.clone());
            }
            if acc != row[&hi] {
                return None;
            }
        }
        Some(r)
    }
}

impl fmt::Display for LaurentPoly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, ((i, j), c)) in self.terms.iter().enumerate() {
            let mono: Vec<String> = [("x", *i), ("y", *j)]
                .into_iter()
                .filter(|(_, e)| *e != 0)
                .map(|(v, e)| if e == 1 { v.to_string() } else { format!("{v}^{e}") })
                .collect();
            let mag = c.abs();
            let sign = if c.is_negative() { "-" } else { "+" };
            if k == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            match (mono.is_empty(), mag.is_one()) {
                (true, _) => write!(f, "{mag}")?,
                (false, true) => write!(f, "{}", mono.join(" "))?,
                (false, false) => write!(f, "{mag} {}", mono.join(" "))?,
            }
        }
        Ok(())
    }
}

/// Normal form `(x^a y^b, P·t₁ + Q·t₂)` of an element of `M`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MetabelianElement {
    pub a: i64,
    pub b: i64,
    pub p: LaurentPoly2,
    pub q: LaurentPoly2,
}

impl MetabelianElement {
    pub fn identity() -> Self {
        Self { a: 0, b: 0, p: LaurentPoly2::zero(), q: LaurentPoly2::zero() }
    }

    pub fn u() -> Self {
        Self { a: 1, b: 0, p: LaurentPoly2::one(), q: LaurentPoly2::zero() }
    }

    pub fn v() -> Self {
        Self { a: 0, b: 1, p: LaurentPoly2::zero(), q: LaurentPoly2::one() }
    }

    pub fn generator(i: usize) -> Result<Self> {
        match i {
            0 => Ok(Self::u()),
            1 => Ok(Self::v()),
            _ => Err(Error::AlphabetMismatch { letter: i + 1, size: 2 }),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.a == 0 && self.b == 0 && self.p.is_zero() && self.q.is_zero()
    }

    /// `P(x−1) + Q(y−1) = x^a y^b − 1`, which characterises the image of `M`.
    pub fn satisfies_membership(&self) -> bool {
        let x1 = LaurentPoly2::from_terms([((1, 0), Rational::one()), ((0, 0), -Rational::one())]);
        let y1 = LaurentPoly2::from_terms([((0, 1), Rational::one()), ((0, 0), -Rational::one())]);
        let lhs = self.p.mul(&x1).add(&self.q.mul(&y1));
        let rhs = LaurentPoly2::from_terms([((self.a, self.b), Rational::one()), ((0, 0), -Rational::one())]);
        lhs == rhs
    }

    /// A reduced word in `u, v` representing this element: `u^a v^b` followed
    /// by conjugates of `[u⁻¹, v⁻¹] = u v u⁻¹ v⁻¹`.
    pub fn canonical_word(&self) -> Result<GroupWord> {
        let u = GroupWord::generator(0);
        let v = GroupWord::generator(1);
        let head = u.pow(self.a).mul(&v.pow(self.b));
        let rest = m_mul(&m_eval_group_word(&head.inv())?, self);
        let r = rest
            .p
            .div_y_minus_one()
            .ok_or_else(|| Error::Internal(format!("{self} does not lie in the Magnus image")))?;
        let k = u.mul(&v).mul(&u.inv()).mul(&v.inv());
        let mut w = head;
        // k has P = 1 - y, i.e. R = -1; conjugation by x^i y^j multiplies R by x^i y^j
        for ((i, j), c) in r.terms() {
            if !c.is_integer() {
                return Err(Error::Internal(format!("non-integral commutator exponent {c}")));
            }
            let e: i64 = (-c.to_integer())
                .try_into()
                .map_err(|_| Error::Internal("commutator exponent out of range".into()))?;
            let h = u.pow(*i).mul(&v.pow(*j));
            w = w.mul(&h).mul(&k.pow(e)).mul(&h.inv());
        }
        Ok(w)
    }
}

impl fmt::Display for MetabelianElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[x^{} y^{} | {} ; {}]", self.a, self.b, self.p, self.q)
    }
}

pub fn m_mul(g: &MetabelianElement, h: &MetabelianElement) -> MetabelianElement {
    MetabelianElement {
        a: g.a + h.a,
        b: g.b + h.b,
        p: h.p.shift(g.a, g.b).add(&g.p),
        q: h.q.shift(g.a, g.b).add(&g.q),
    }
}

pub fn m_inv(g: &MetabelianElement) -> MetabelianElement {
    MetabelianElement { a: -g.a, b: -g.b, p: g.p.shift(-g.a, -g.b).neg(), q: g.q.shift(-g.a, -g.b).neg() }
}

/// Image of a free group word under `x₁ ↦ u`, `x₂ ↦ v`.
pub fn m_eval_group_word(w: &GroupWord) -> Result<MetabelianElement> {
    let mut acc = MetabelianElement::identity();
    for l in w.letters() {
        let g = MetabelianElement::generator(l.gen)?;
        acc = m_mul(&acc, &if l.inv { m_inv(&g) } else { g });
    }
    Ok(acc)
}

pub fn m_eval_word(w: &Word) -> Result<MetabelianElement> {
    m_eval_group_word(&w.to_group_word())
}

fn uv_alphabet() -> Alphabet {
    Alphabet::with_names(vec!["u".into(), "v".into()]).expect("two names")
}

/// Checks that the positive words of length ≤ `max_len` in `u, v` have
/// pairwise distinct images in `M`.
pub fn verify_moufang_free_monoid(max_len: usize) -> Result<Certificate> {
    if max_len == 0 {
        return Err(Error::Precondition("length bound must be at least 1".into()));
    }
    let gens = [MetabelianElement::u(), MetabelianElement::v()];
    let mut seen: HashSet<MetabelianElement> = HashSet::new();
    let mut level = vec![(Word::one(), MetabelianElement::identity())];
    let mut witness = None;
    'outer: for _ in 0..max_len {
        let mut next = Vec::with_capacity(2 * level.len());
        for (w, g) in &level {
            for (i, gen) in gens.iter().enumerate() {
                let word = w.concat(&Word::letter(i));
                let value = m_mul(g, gen);
                if !seen.insert(value.clone()) {
                    witness = Some(json!({ "word": uv_alphabet().format_word(&word), "value": value.to_string() }));
                    break 'outer;
                }
                next.push((word, value));
            }
        }
        level = next;
    }
    Ok(Certificate::from_witness(
        "metabelian-free-monoid",
        format!("the positive words of length <= {max_len} in u, v have pairwise distinct images in M"),
        witness,
    )
    .param("L", max_len)
    .count(seen.len()))
}

/// The relator `[[x,y],[x²,y]]`, with `[a,b] = a⁻¹b⁻¹ab`.
pub fn metabelian_relator() -> GroupWord {
    let x = GroupWord::generator(0);
    let y = GroupWord::generator(1);
    GroupWord::commutator(&GroupWord::commutator(&x, &y), &GroupWord::commutator(&x.pow(2), &y))
}

/// A nontrivial reduced word together with its image at `(u, v)`, which is
/// the identity of `M`.
pub fn nonfree_group_witness() -> Result<(GroupWord, MetabelianElement)> {
    let r = metabelian_relator();
    let value = m_eval_group_word(&r)?;
    if r.is_identity() || !value.is_identity() {
        return Err(Error::Internal(format!("relator {r} evaluates to {value}")));
    }
    Ok((r, value))
}

/// Element of `ℚ[M]`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MGroupAlgebraElement {
    terms: BTreeMap<MetabelianElement, Rational>,
}

impl MGroupAlgebraElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::group(MetabelianElement::identity())
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_terms([(MetabelianElement::identity(), c)])
    }

    pub fn group(g: MetabelianElement) -> Self {
        Self::from_terms([(g, Rational::one())])
    }

    /// `g − 1`.
    pub fn group_minus_one(g: MetabelianElement) -> Self {
        Self::group(g).sub(&Self::one())
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (MetabelianElement, Rational)>) -> Self {
        let mut r = Self::zero();
        for (g, c) in terms {
            r.add_term(g, c);
        }
        r
    }

    fn add_term(&mut self, g: MetabelianElement, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(g) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> &BTreeMap<MetabelianElement, Rational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut r = self.clone();
        for (g, c) in &other.terms {
            r.add_term(g.clone(), c.clone());
        }
        r
    }

    pub fn neg(&self) -> Self {
        Self { terms: self.terms.iter().map(|(g, c)| (g.clone(), -c)).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(g, a)| (g.clone(), a * c)).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut r = Self::zero();
        for (g, a) in &self.terms {
            for (h, b) in &other.terms {
                r.add_term(m_mul(g, h), a * b);
            }
        }
        r
    }

    /// The coefficient sum `ε(f)`.
    pub fn augmentation(&self) -> Rational {
        self.terms.values().fold(Rational::zero(), |a, c| a + c)
    }

    /// Left Fox derivatives `(∂f/∂u, ∂f/∂v)`, computed term by term on
    /// canonical words, so that `f − ε(f) = ∂_u f·(u−1) + ∂_v f·(v−1)`.
    pub fn fox_derivatives(&self) -> Result<(Self, Self)> {
        let mut parts = [Self::zero(), Self::zero()];
        for (g, c) in &self.terms {
            let w = g.canonical_word()?;
            let mut prefix = MetabelianElement::identity();
            for l in w.letters() {
                let gen = MetabelianElement::generator(l.gen)?;
                if l.inv {
                    // x⁻¹ − 1 = −x⁻¹(x − 1)
                    prefix = m_mul(&prefix, &m_inv(&gen));
                    parts[l.gen].add_term(prefix.clone(), -c.clone());
                } else {
                    parts[l.gen].add_term(prefix.clone(), c.clone());
                    prefix = m_mul(&prefix, &gen);
                }
            }
        }
        let [du, dv] = parts;
        Ok((du, dv))
    }
}

impl fmt::Display for MGroupAlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let names = uv_alphabet();
        for (k, (g, c)) in self.terms.iter().enumerate() {
            let word = g.canonical_word().map(|w| names.format_group_word(&w)).unwrap_or_else(|_| g.to_string());
            let mag = c.abs();
            if k == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            match (g.is_identity(), mag.is_one()) {
                (true, _) => write!(f, "{mag}")?,
                (false, true) => write!(f, "{word}")?,
                (false, false) => write!(f, "{mag} {word}")?,
            }
        }
        Ok(())
    }
}

/// Checks that the products `ω(u−1, v−1)` over all words `ω` of length ≤ `d`
/// are linearly independent in `ℚ[M]`.
pub fn verify_spade_freeness(d: usize) -> Result<Certificate> {
    let gens = [
        MGroupAlgebraElement::group_minus_one(MetabelianElement::u()),
        MGroupAlgebraElement::group_minus_one(MetabelianElement::v()),
    ];
    let words = enumerate_words(2, d);
    let mut values: BTreeMap<Word, MGroupAlgebraElement> = BTreeMap::new();
    for w in &words {
        let value = match w.letters().split_last() {
            None => MGroupAlgebraElement::one(),
            Some((&last, init)) => values[&Word::new(init.to_vec())].mul(&gens[last]),
        };
        values.insert(w.clone(), value);
    }
    let vectors: Vec<Vec<(MetabelianElement, Rational)>> = words
        .iter()
        .map(|w| values[w].terms().iter().map(|(g, c)| (g.clone(), c.clone())).collect())
        .collect();
    let res = independence_by_key(&Field::Rationals, &vectors);
    let names = uv_alphabet();
    let witness = res.dependency.as_ref().map(|dep| {
        let entries: Vec<_> = dep
            .iter()
            .map(|(i, c)| json!({ "word": names.format_word(&words[*i]), "coeff": c.to_string() }))
            .collect();
        json!({ "dependency": entries })
    });
    Ok(Certificate::from_witness(
        "metabelian-algebra-freeness",
        format!("the {} products w(u-1, v-1) with |w| <= {d} are linearly independent in Q[M]", words.len()),
        witness,
    )
    .param("d", d)
    .rank(res.rank)
    .count(words.len()))
}

/// Default recursion depth for [`chi_lower_bound`].
pub const CHI_CAP: usize = 6;

/// A lower bound, at most `cap`, on the largest `i` with `f ∈ ωⁱ`, where `ω`
/// is the augmentation ideal of `ℚ[M]`.
///
/// Writes `f = A(u−1) + B(v−1)` with Fox derivatives when `ε(f) = 0`, checks
/// the identity exactly, and recurses: `χ(f) ≥ 1 + min(χ(A), χ(B))`.
pub fn chi_lower_bound(f: &MGroupAlgebraElement, cap: usize) -> Result<usize> {
    if f.is_zero() {
        return Ok(cap);
    }
    if cap == 0 || !f.augmentation().is_zero() {
        return Ok(0);
    }
    let (a, b) = f.fox_derivatives()?;
    let u1 = MGroupAlgebraElement::group_minus_one(MetabelianElement::u());
    let v1 = MGroupAlgebraElement::group_minus_one(MetabelianElement::v());
    if a.mul(&u1).add(&b.mul(&v1)) != *f {
        return Err(Error::Internal(format!("Fox decomposition of {f} does not reassemble")));
    }
    let la = chi_lower_bound(&a, cap - 1)?;
    if la == 0 {
        return Ok(1);
    }
    let lb = chi_lower_bound(&b, cap - 1)?;
    Ok(1 + la.min(lb))
}

/// The full counterexample at scale `(max_len, d)`, as one certificate with
/// five sub-checks.
pub fn counterexample_report(max_len: usize, d: usize) -> Result<Certificate> {
    if max_len == 0 || d == 0 {
        return Err(Error::Precondition("scale parameters must be at least 1".into()));
    }
    let monoid = verify_moufang_free_monoid(max_len)?;
    let spade = verify_spade_freeness(d)?;
    let mut chis = Vec::new();
    for (name, g) in [("u", MetabelianElement::u()), ("v", MetabelianElement::v())] {
        let bound = chi_lower_bound(&MGroupAlgebraElement::group_minus_one(g), CHI_CAP)?;
        let status = if bound >= 1 { Status::Pass } else { Status::Fail };
        let mut c = Certificate::pass("chi-lower-bound", format!("chi({name} - 1) >= 1")).param("bound", bound);
        c.status = status;
        chis.push(c);
    }
    let relator = match nonfree_group_witness() {
        Ok((r, value)) => Certificate::pass(
            "metabelian-relator",
            format!("the nontrivial reduced word r = {} maps to the identity of M", uv_alphabet().format_group_word(&r)),
        )
        .param("relator", uv_alphabet().format_group_word(&r))
        .param("reduced_length", r.len())
        .param("image", value.to_string()),
        Err(e) => Certificate::fail("metabelian-relator", "the relator maps to the identity of M", json!(e.to_string())),
    };
    let checks = vec![monoid, spade, chis.remove(0), chis.remove(0), relator];
    Ok(Certificate::pass(
        "counterexample",
        format!(
            "at scale (L = {max_len}, d = {d}) u, v generate a free monoid, u-1, v-1 generate a free algebra and lie in the augmentation ideal, yet 1 + (u-1) = u and 1 + (v-1) = v satisfy a group relation, so they do not generate a free group algebra"
        ),
    )
    .param("L", max_len)
    .param("d", d)
    .with_checks(checks))
}

//! Three concrete bi-ordered groups, written additively: `(ℚ, +)`, `ℤⁿ` with
//! the lexicographic order, and the free group of rank two with the Magnus
//! order. Archimedean classes and convex jumps are computed per group.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;
use serde_json::json;

use crate::certificate::Certificate;
use crate::error::{Error, Result};
use crate::exactnum::{parse_bigint, parse_rational, Rational};
use crate::fox::{fox_embed_word, magnus_compare, magnus_leading_monomial, magnus_sign};
use crate::freeobj::{GroupWord, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GroupTag {
    Q,
    ZLex(usize),
    FreeMagnus,
}

impl GroupTag {
    pub fn zero(self) -> OrderedGroupElement {
        match self {
            GroupTag::Q => OrderedGroupElement::Q(Rational::zero()),
            GroupTag::ZLex(n) => OrderedGroupElement::ZLex(vec![BigInt::zero(); n]),
            GroupTag::FreeMagnus => OrderedGroupElement::FreeMagnus(GroupWord::identity()),
        }
    }

    /// `"3/4"` for ℚ, `"0,2,-5"` for ℤⁿ, word syntax for the free group.
    pub fn parse_element(self, s: &str) -> Result<OrderedGroupElement> {
        match self {
            GroupTag::Q => Ok(OrderedGroupElement::Q(parse_rational(s)?)),
            GroupTag::ZLex(n) => {
                let coords = s.split(',').map(|c| parse_bigint(c.trim())).collect::<Result<Vec<_>>>()?;
                if coords.len() != n {
                    return Err(Error::Arity { expected: n, found: coords.len() });
                }
                Ok(OrderedGroupElement::ZLex(coords))
            }
            GroupTag::FreeMagnus => {
                let w: GroupWord = s.parse()?;
                if let Some(g) = w.max_gen().filter(|&g| g >= 2) {
                    return Err(Error::AlphabetMismatch { letter: g + 1, size: 2 });
                }
                Ok(OrderedGroupElement::FreeMagnus(w))
            }
        }
    }
}

impl fmt::Display for GroupTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupTag::Q => f.write_str("q"),
            GroupTag::ZLex(n) => write!(f, "zlex:{n}"),
            GroupTag::FreeMagnus => f.write_str("freemagnus"),
        }
    }
}

impl FromStr for GroupTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().to_ascii_lowercase();
        match s.as_str() {
            "q" => Ok(GroupTag::Q),
            "freemagnus" => Ok(GroupTag::FreeMagnus),
            _ => {
                let n = s
                    .strip_prefix("zlex:")
                    .and_then(|n| n.parse::<usize>().ok())
                    .filter(|&n| n > 0)
                    .ok_or_else(|| Error::Parse(format!("unknown group '{s}'")))?;
                Ok(GroupTag::ZLex(n))
            }
        }
    }
}

/// Element of one of the three groups.
///
/// Equality is structural. `Ord` is the group order within a tag and orders
/// tags Q < ZLex < FreeMagnus otherwise, so mixed collections stay sortable.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum OrderedGroupElement {
    Q(Rational),
    ZLex(Vec<BigInt>),
    FreeMagnus(GroupWord),
}

use OrderedGroupElement as E;

impl OrderedGroupElement {
    pub fn tag(&self) -> GroupTag {
        match self {
            E::Q(_) => GroupTag::Q,
            E::ZLex(v) => GroupTag::ZLex(v.len()),
            E::FreeMagnus(_) => GroupTag::FreeMagnus,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            E::Q(q) => q.is_zero(),
            E::ZLex(v) => v.iter().all(Zero::is_zero),
            E::FreeMagnus(w) => w.is_identity(),
        }
    }

    pub fn sign(&self) -> Ordering {
        match self {
            E::Q(q) => q.cmp(&Rational::zero()),
            E::ZLex(v) => v.iter().find(|c| !c.is_zero()).map_or(Ordering::Equal, |c| c.cmp(&BigInt::zero())),
            E::FreeMagnus(w) => magnus_sign(w),
        }
    }

    pub fn zlex(coords: &[i64]) -> Self {
        E::ZLex(coords.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn magnus(s: &str) -> Result<Self> {
        GroupTag::FreeMagnus.parse_element(s)
    }
}

impl fmt::Display for OrderedGroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            E::Q(q) => write!(f, "{q}"),
            E::ZLex(v) => {
                let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
                write!(f, "({})", parts.join(","))
            }
            E::FreeMagnus(w) => write!(f, "{w}"),
        }
    }
}

fn check_tags(g: &OrderedGroupElement, h: &OrderedGroupElement) -> Result<()> {
    if g.tag() != h.tag() {
        return Err(Error::TagMismatch(g.tag().to_string(), h.tag().to_string()));
    }
    Ok(())
}

pub fn og_add(g: &OrderedGroupElement, h: &OrderedGroupElement) -> Result<OrderedGroupElement> {
    check_tags(g, h)?;
    Ok(match (g, h) {
        (E::Q(a), E::Q(b)) => E::Q(a + b),
        (E::ZLex(a), E::ZLex(b)) => E::ZLex(a.iter().zip(b).map(|(x, y)| x + y).collect()),
        (E::FreeMagnus(a), E::FreeMagnus(b)) => E::FreeMagnus(a.mul(b)),
        _ => unreachable!("tags checked"),
    })
}

pub fn og_neg(g: &OrderedGroupElement) -> OrderedGroupElement {
    match g {
        E::Q(a) => E::Q(-a),
        E::ZLex(a) => E::ZLex(a.iter().map(|x| -x).collect()),
        E::FreeMagnus(a) => E::FreeMagnus(a.inv()),
    }
}

pub fn og_sub(g: &OrderedGroupElement, h: &OrderedGroupElement) -> Result<OrderedGroupElement> {
    og_add(g, &og_neg(h))
}

/// `k·g` for an integer `k`.
pub fn og_times(g: &OrderedGroupElement, k: i64) -> OrderedGroupElement {
    match g {
        E::Q(a) => E::Q(a * Rational::from_integer(k.into())),
        E::ZLex(a) => E::ZLex(a.iter().map(|x| x * k).collect()),
        E::FreeMagnus(a) => E::FreeMagnus(a.pow(k)),
    }
}

pub fn og_cmp(g: &OrderedGroupElement, h: &OrderedGroupElement) -> Result<Ordering> {
    check_tags(g, h)?;
    Ok(match (g, h) {
        (E::Q(a), E::Q(b)) => a.cmp(b),
        (E::ZLex(a), E::ZLex(b)) => a.cmp(b),
        (E::FreeMagnus(a), E::FreeMagnus(b)) => magnus_compare(a, b),
        _ => unreachable!("tags checked"),
    })
}

pub fn og_abs(g: &OrderedGroupElement) -> OrderedGroupElement {
    if g.sign() == Ordering::Less {
        og_neg(g)
    } else {
        g.clone()
    }
}

fn tag_rank(t: GroupTag) -> (u8, usize) {
    match t {
        GroupTag::Q => (0, 0),
        GroupTag::ZLex(n) => (1, n),
        GroupTag::FreeMagnus => (2, 0),
    }
}

impl Ord for OrderedGroupElement {
    fn cmp(&self, other: &Self) -> Ordering {
        og_cmp(self, other).unwrap_or_else(|_| tag_rank(self.tag()).cmp(&tag_rank(other.tag())))
    }
}

impl PartialOrd for OrderedGroupElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// How `g` relates to `h` under `n|g| < |h|` for all `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Archimedean {
    /// `g ≪ h`
    Below,
    /// `g ∼ h`
    Equivalent,
    /// `h ≪ g`
    Above,
}

impl fmt::Display for Archimedean {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Archimedean::Below => "<<",
            Archimedean::Equivalent => "~",
            Archimedean::Above => ">>",
        })
    }
}

/// Archimedean class of a nonzero element, as a key whose order is the
/// reverse of the class order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
enum ClassKey {
    Top,
    Index(usize),
    Monomial(Word),
}

fn class_key(g: &OrderedGroupElement) -> Result<ClassKey> {
    match g {
        E::Q(q) if q.is_zero() => Err(Error::ZeroArgument("archimedean class of 0")),
        E::Q(_) => Ok(ClassKey::Top),
        E::ZLex(v) => {
            v.iter().position(|c| !c.is_zero()).map(ClassKey::Index).ok_or(Error::ZeroArgument("archimedean class of 0"))
        }
        // The leading monomial of Ψ(g) - 1 is shared by g, g^k and g^-1, and a
        // deglex-earlier leading monomial dominates every power.
        E::FreeMagnus(w) => {
            magnus_leading_monomial(w).map(ClassKey::Monomial).ok_or(Error::ZeroArgument("archimedean class of 1"))
        }
    }
}

pub fn archimedean_relation(g: &OrderedGroupElement, h: &OrderedGroupElement) -> Result<Archimedean> {
    check_tags(g, h)?;
    let (kg, kh) = (class_key(g)?, class_key(h)?);
    Ok(match kg.cmp(&kh) {
        Ordering::Equal => Archimedean::Equivalent,
        Ordering::Greater => Archimedean::Below,
        Ordering::Less => Archimedean::Above,
    })
}

/// A pair `N ⊊ C` of adjacent convex subgroups.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ConvexJump {
    /// `{0} ⊂ ℚ`
    Q,
    /// `C` = vectors vanishing before `axis`, `N` = vectors vanishing through
    /// `axis` (0-based).
    ZLex { n: usize, axis: usize },
    /// `C` = elements whose leading Fox monomial is `monomial` or later in
    /// deglex order, together with 1; `N` = strictly later, together with 1.
    FreeMagnus { monomial: Word },
}

impl ConvexJump {
    pub fn tag(&self) -> GroupTag {
        match self {
            ConvexJump::Q => GroupTag::Q,
            ConvexJump::ZLex { n, .. } => GroupTag::ZLex(*n),
            ConvexJump::FreeMagnus { .. } => GroupTag::FreeMagnus,
        }
    }

    pub fn in_c(&self, g: &OrderedGroupElement) -> bool {
        self.position(g).is_some_and(|o| o != Ordering::Less)
    }

    pub fn in_n(&self, g: &OrderedGroupElement) -> bool {
        self.position(g) == Some(Ordering::Greater)
    }

    /// Where `g`'s class sits relative to the jump: `Less` outside `C`,
    /// `Equal` in `C \ N`, `Greater` in `N` (including 0).
    fn position(&self, g: &OrderedGroupElement) -> Option<Ordering> {
        if g.tag() != self.tag() {
            return None;
        }
        if g.is_zero() {
            return Some(Ordering::Greater);
        }
        let key = class_key(g).ok()?;
        let own = match self {
            ConvexJump::Q => ClassKey::Top,
            ConvexJump::ZLex { axis, .. } => ClassKey::Index(*axis),
            ConvexJump::FreeMagnus { monomial } => ClassKey::Monomial(monomial.clone()),
        };
        Some(key.cmp(&own))
    }

    fn pattern(n: usize, zeros: usize) -> String {
        let parts: Vec<&str> = (0..n).map(|i| if i < zeros { "0" } else { "*" }).collect();
        format!("{{({})}}", parts.join(","))
    }

    /// Human-readable descriptions of `N` and `C`.
    pub fn describe(&self) -> (String, String) {
        match self {
            ConvexJump::Q => ("{0}".into(), "Q".into()),
            ConvexJump::ZLex { n, axis } => (Self::pattern(*n, axis + 1), Self::pattern(*n, *axis)),
            ConvexJump::FreeMagnus { monomial } => (
                format!("{{g : lead(g) > {monomial}}}"),
                format!("{{g : lead(g) >= {monomial}}}"),
            ),
        }
    }
}

impl fmt::Display for ConvexJump {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (n, c) = self.describe();
        write!(f, "N = {n}, C = {c}")
    }
}

/// The jump `(N_g, C_g)` with `C_g` the smallest convex subgroup containing
/// `g` and `N_g` the largest one not containing it.
pub fn convex_jump_of(g: &OrderedGroupElement) -> Result<ConvexJump> {
    Ok(match (g, class_key(g)?) {
        (E::Q(_), _) => ConvexJump::Q,
        (E::ZLex(v), ClassKey::Index(axis)) => ConvexJump::ZLex { n: v.len(), axis },
        (E::FreeMagnus(_), ClassKey::Monomial(monomial)) => ConvexJump::FreeMagnus { monomial },
        _ => unreachable!("class key matches tag"),
    })
}

/// The order-preserving homomorphism `C → ℚ` with kernel `N`.
pub fn jump_quotient_to_reals(jump: &ConvexJump, c: &OrderedGroupElement) -> Result<Rational> {
    if !jump.in_c(c) {
        return Err(Error::NotInSubset(format!("{c} is not in {}", jump.describe().1)));
    }
    Ok(match (jump, c) {
        (ConvexJump::Q, E::Q(q)) => q.clone(),
        (ConvexJump::ZLex { axis, .. }, E::ZLex(v)) => Rational::from_integer(v[*axis].clone()),
        // Products of two terms of degree ≥ |w| have degree > |w|, so this
        // coefficient is additive on C.
        (ConvexJump::FreeMagnus { monomial }, E::FreeMagnus(w)) => {
            fox_embed_word(w, 2, monomial.len() as u64)?.coeff(monomial)
        }
        _ => unreachable!("membership checked the tag"),
    })
}

/// Checks that all nonempty words of length ≤ `max_len` in `g, h` evaluate to
/// distinct group elements.
pub fn certify_free_monoid(g: &OrderedGroupElement, h: &OrderedGroupElement, max_len: usize) -> Result<Certificate> {
    check_tags(g, h)?;
    if max_len == 0 {
        return Err(Error::Precondition("length bound must be at least 1".into()));
    }
    let gens = [g, h];
    let names = ["g", "h"];
    let mut seen: HashMap<OrderedGroupElement, String> = HashMap::new();
    let mut level: Vec<(String, OrderedGroupElement)> = vec![(String::new(), g.tag().zero())];
    let mut count = 0usize;
    let mut witness = None;
    'outer: for _ in 0..max_len {
        let mut next = Vec::with_capacity(level.len() * 2);
        for (name, value) in &level {
            for (gen, letter) in gens.iter().zip(names) {
                let word = format!("{name}{letter}");
                let v = og_add(value, gen)?;
                count += 1;
                if let Some(prev) = seen.get(&v) {
                    witness = Some(json!({ "left": prev, "right": word, "equation": format!("{prev} = {word}") }));
                    break 'outer;
                }
                seen.insert(v.clone(), word.clone());
                next.push((word, v));
            }
        }
        level = next;
    }
    let total = (1usize << (max_len + 1)) - 2;
    Ok(Certificate::from_witness(
        "free-monoid",
        format!("the {total} nonempty words of length <= {max_len} in g = {g}, h = {h} are pairwise distinct"),
        witness,
    )
    .param("group", g.tag().to_string())
    .param("g", g.to_string())
    .param("h", h.to_string())
    .param("L", max_len)
    .count(count))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalizedPair {
    pub a: OrderedGroupElement,
    pub b: OrderedGroupElement,
    pub branch: &'static str,
}

/// Replaces free monoid generators `g, h` by positive, Archimedean-equivalent
/// generators `a, b` of a free submonoid, then re-checks freeness up to
/// `check_len`.
pub fn normalize_free_monoid_pair(
    g: &OrderedGroupElement,
    h: &OrderedGroupElement,
    check_len: usize,
) -> Result<NormalizedPair> {
    check_tags(g, h)?;
    if g.is_zero() || h.is_zero() {
        return Err(Error::ZeroArgument("free monoid generator"));
    }
    let (mut g, mut h) = match og_cmp(&og_abs(g), &og_abs(h))? {
        Ordering::Less => (g.clone(), h.clone()),
        Ordering::Greater => (h.clone(), g.clone()),
        Ordering::Equal => return Err(Error::Precondition(format!("|{g}| = |{h}|, so g, h commute"))),
    };
    if h.sign() == Ordering::Less {
        g = og_neg(&g);
        h = og_neg(&h);
    }
    let (a, branch) = if g.sign() == Ordering::Greater {
        match archimedean_relation(&g, &h)? {
            Archimedean::Equivalent => (g, "0 < g ~ h"),
            _ => (og_add(&g, &h)?, "0 < g << h"),
        }
    } else {
        // |g| < h forces g + h > 0
        let s = og_add(&g, &h)?;
        match archimedean_relation(&s, &h)? {
            Archimedean::Equivalent => (s, "g < 0, g + h ~ h"),
            _ => (og_add(&s, &h)?, "g < 0, g + h << h"),
        }
    };
    let check = certify_free_monoid(&a, &h, check_len)?;
    if !check.is_pass() {
        return Err(Error::Precondition(format!(
            "normalised pair ({a}, {h}) fails the free monoid check at length {check_len}: {}",
            check.witness.map(|w| w.to_string()).unwrap_or_default()
        )));
    }
    Ok(NormalizedPair { a, b: h, branch })
}

/// Whether `n|g| < |h|` holds for `n = 1..=bound`; a finite witness of `g ≪ h`.
pub fn dominated_up_to(g: &OrderedGroupElement, h: &OrderedGroupElement, bound: i64) -> Result<bool> {
    let (ag, ah) = (og_abs(g), og_abs(h));
    for n in 1..=bound {
        if og_cmp(&og_times(&ag, n), &ah)? != Ordering::Less {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rational;

    fn fm(s: &str) -> OrderedGroupElement {
        OrderedGroupElement::magnus(s).unwrap()
    }

    fn z(c: &[i64]) -> OrderedGroupElement {
        OrderedGroupElement::zlex(c)
    }

    #[test]
    fn group_law_examples() {
        assert_eq!(og_cmp(&z(&[0, 2, -5]), &z(&[0, 2, -4])).unwrap(), Ordering::Less);
        assert_eq!(og_add(&E::Q(rational(1, 3)), &E::Q(rational(1, 6))).unwrap(), E::Q(rational(1, 2)));
        let one = GroupTag::FreeMagnus.zero();
        assert_eq!(og_cmp(&fm("x"), &one).unwrap(), Ordering::Greater);
        assert_eq!(og_cmp(&fm("y"), &one).unwrap(), Ordering::Greater);
        assert!(matches!(og_add(&z(&[1]), &E::Q(rational(1, 1))), Err(Error::TagMismatch(..))));
    }

    #[test]
    fn abs_examples() {
        assert_eq!(og_abs(&z(&[-1, 5])), z(&[1, -5]));
        assert_eq!(og_abs(&E::Q(rational(-3, 2))), E::Q(rational(3, 2)));
        assert_eq!(og_abs(&z(&[0, 0])), z(&[0, 0]));
        assert_eq!(og_abs(&fm("x^-1")), fm("x"));
    }

    #[test]
    fn archimedean_examples() {
        assert_eq!(archimedean_relation(&z(&[0, 0, 7]), &z(&[0, -2, 0])).unwrap(), Archimedean::Below);
        assert_eq!(archimedean_relation(&E::Q(rational(1, 1000)), &E::Q(rational(1000, 1))).unwrap(), Archimedean::Equivalent);
        assert_eq!(archimedean_relation(&fm("x^-1 y^-1 x y"), &fm("x")).unwrap(), Archimedean::Below);
        // every power of y stays below x
        assert_eq!(archimedean_relation(&fm("y"), &fm("x")).unwrap(), Archimedean::Below);
        assert!(dominated_up_to(&fm("y"), &fm("x"), 20).unwrap());
        assert_eq!(archimedean_relation(&fm("x y"), &fm("x^-3")).unwrap(), Archimedean::Equivalent);
        assert!(archimedean_relation(&z(&[0]), &z(&[1])).is_err());
    }

    #[test]
    fn convex_jump_examples() {
        let j = convex_jump_of(&z(&[0, 2, -5])).unwrap();
        assert_eq!(j, ConvexJump::ZLex { n: 3, axis: 1 });
        assert_eq!(j.describe(), ("{(0,0,*)}".to_string(), "{(0,*,*)}".to_string()));
        assert_eq!(convex_jump_of(&E::Q(rational(7, 1))).unwrap(), ConvexJump::Q);
        let j = convex_jump_of(&z(&[1, 0])).unwrap();
        assert_eq!(j.describe(), ("{(0,*)}".to_string(), "{(*,*)}".to_string()));
        assert!(convex_jump_of(&z(&[0, 0])).is_err());
    }

    #[test]
    fn quotient_examples() {
        let j = ConvexJump::ZLex { n: 3, axis: 1 };
        assert_eq!(jump_quotient_to_reals(&j, &z(&[0, 5, -9])).unwrap(), rational(5, 1));
        assert_eq!(jump_quotient_to_reals(&j, &z(&[0, 0, -9])).unwrap(), rational(0, 1));
        assert!(matches!(jump_quotient_to_reals(&j, &z(&[1, 0, 0])), Err(Error::NotInSubset(_))));
        assert_eq!(jump_quotient_to_reals(&ConvexJump::Q, &E::Q(rational(2, 3))).unwrap(), rational(2, 3));
        let j = convex_jump_of(&fm("x^-1 y^-1 x y")).unwrap();
        let c = fm("x^-1 y^-1 x y x^-1 y^-1 x y");
        assert_eq!(jump_quotient_to_reals(&j, &c).unwrap(), rational(2, 1));
        assert!(jump_quotient_to_reals(&j, &fm("y")).is_err());
    }

    #[test]
    fn free_monoid_examples() {
        let c = certify_free_monoid(&z(&[1, 0]), &z(&[0, 1]), 4).unwrap();
        assert!(!c.is_pass());
        assert_eq!(c.witness.unwrap()["equation"], "gh = hg");
        assert!(certify_free_monoid(&fm("x"), &fm("y"), 6).unwrap().is_pass());
        assert!(certify_free_monoid(&fm("x^2"), &fm("x y x"), 5).unwrap().is_pass());
        assert_eq!(certify_free_monoid(&fm("x"), &fm("y"), 6).unwrap().count, Some(126));
    }

    #[test]
    fn normalize_examples() {
        let p = normalize_free_monoid_pair(&fm("x"), &fm("y"), 6).unwrap();
        assert_eq!((p.a, p.b), (fm("y x"), fm("x")));
        let p = normalize_free_monoid_pair(&fm("x^-1 y^-1 x y"), &fm("y"), 6).unwrap();
        assert_eq!((p.a, p.b), (fm("x^-1 y^-1 x y y"), fm("y")));
        let p = normalize_free_monoid_pair(&fm("x^-1"), &fm("y^2"), 6).unwrap();
        assert!(p.a.sign() == Ordering::Greater && p.b.sign() == Ordering::Greater);
        assert_eq!(archimedean_relation(&p.a, &p.b).unwrap(), Archimedean::Equivalent);
        assert!(normalize_free_monoid_pair(&z(&[1, 0]), &z(&[0, 1]), 4).is_err());
    }

    #[test]
    fn parsing() {
        assert_eq!("zlex:3".parse::<GroupTag>().unwrap(), GroupTag::ZLex(3));
        assert_eq!(GroupTag::ZLex(3).parse_element("0,2,-5").unwrap(), z(&[0, 2, -5]));
        assert!(GroupTag::ZLex(2).parse_element("0,2,-5").is_err());
        assert!(GroupTag::FreeMagnus.parse_element("x3").is_err());
        assert!("zlex:0".parse::<GroupTag>().is_err());
    }
}

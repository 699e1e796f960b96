//! Exact integers, rationals and prime fields, and valuations on the integers.
//!
//! Values of valuations live in `Extended<T>`, which adjoins a top element
//! `Infinity` to an ordered type. The derived order puts every finite value
//! below `Infinity`.

use std::fmt;
use std::ops::Add;
use std::str::FromStr;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub use num_bigint::BigInt;
pub type Rational = num_rational::BigRational;

/// An ordered value set with a largest element adjoined.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Extended<T> {
    Finite(T),
    Infinity,
}

impl<T> Extended<T> {
    pub fn is_infinite(&self) -> bool {
        matches!(self, Extended::Infinity)
    }

    pub fn finite(&self) -> Option<&T> {
        match self {
            Extended::Finite(v) => Some(v),
            Extended::Infinity => None,
        }
    }

    pub fn map<U>(self, f: impl FnOnce(T) -> U) -> Extended<U> {
        match self {
            Extended::Finite(v) => Extended::Finite(f(v)),
            Extended::Infinity => Extended::Infinity,
        }
    }
}

impl<T: Add<Output = T>> Add for Extended<T> {
    type Output = Extended<T>;

    fn add(self, rhs: Self) -> Self::Output {
        match (self, rhs) {
            (Extended::Finite(a), Extended::Finite(b)) => Extended::Finite(a + b),
            _ => Extended::Infinity,
        }
    }
}

impl<T: fmt::Display> fmt::Display for Extended<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Extended::Finite(v) => v.fmt(f),
            Extended::Infinity => f.write_str("inf"),
        }
    }
}

pub fn rational(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    Rational::from_str(s.trim()).map_err(|_| Error::Parse(format!("not a rational number: {s:?}")))
}

pub fn parse_bigint(s: &str) -> Result<BigInt> {
    BigInt::from_str(s.trim()).map_err(|_| Error::Parse(format!("not an integer: {s:?}")))
}

/// Trial-division primality test.
pub fn is_prime(n: &BigInt) -> bool {
    if n < &BigInt::from(2) {
        return false;
    }
    let two = BigInt::from(2);
    if n == &two {
        return true;
    }
    if n.is_even() {
        return false;
    }
    let mut d = BigInt::from(3);
    while &d * &d <= *n {
        if (n % &d).is_zero() {
            return false;
        }
        d += 2;
    }
    true
}

/// Exponent `r` with `z = p^r * b`, `b` coprime to `p`. `z` must be nonzero.
pub fn multiplicity(z: &BigInt, p: &BigInt) -> u64 {
    debug_assert!(!z.is_zero());
    let mut r = 0;
    let mut m = z.abs();
    loop {
        let (q, rem) = m.div_rem(p);
        if !rem.is_zero() {
            return r;
        }
        m = q;
        r += 1;
    }
}

/// The valuation `z = p^r b  ↦  r·g` on the integers. Zero maps to infinity.
pub fn padic_value(z: &BigInt, p: &BigInt, g: &Rational) -> Result<Extended<Rational>> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p.clone()));
    }
    if !g.is_positive() {
        return Err(Error::Precondition(format!("p-adic weight must be positive, got {g}")));
    }
    if z.is_zero() {
        return Ok(Extended::Infinity);
    }
    Ok(Extended::Finite(g * Rational::from_integer(BigInt::from(multiplicity(z, p)))))
}

/// Element of the prime field Z/pZ.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PrimeFieldElement {
    residue: BigInt,
    modulus: BigInt,
}

impl PrimeFieldElement {
    pub fn new(value: BigInt, modulus: &BigInt) -> Result<Self> {
        if !is_prime(modulus) {
            return Err(Error::NotPrime(modulus.clone()));
        }
        Ok(Self { residue: value.mod_floor(modulus), modulus: modulus.clone() })
    }

    pub fn residue(&self) -> &BigInt {
        &self.residue
    }

    pub fn modulus(&self) -> &BigInt {
        &self.modulus
    }

    pub fn is_zero(&self) -> bool {
        self.residue.is_zero()
    }

    fn check(&self, other: &Self) {
        assert_eq!(self.modulus, other.modulus, "prime field elements over different moduli");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check(other);
        Self { residue: (&self.residue + &other.residue).mod_floor(&self.modulus), modulus: self.modulus.clone() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.check(other);
        Self { residue: (&self.residue - &other.residue).mod_floor(&self.modulus), modulus: self.modulus.clone() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check(other);
        Self { residue: (&self.residue * &other.residue).mod_floor(&self.modulus), modulus: self.modulus.clone() }
    }

    pub fn neg(&self) -> Self {
        Self { residue: (-&self.residue).mod_floor(&self.modulus), modulus: self.modulus.clone() }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let e = self.residue.extended_gcd(&self.modulus);
        Some(Self { residue: e.x.mod_floor(&self.modulus), modulus: self.modulus.clone() })
    }
}

impl fmt::Display for PrimeFieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod {}", self.residue, self.modulus)
    }
}

/// Which exact ring the coefficients live in.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum RingKind {
    Integers,
    Rationals,
    PrimeField(BigInt),
}

/// A coefficient filtration η with η(a) ≥ 0 everywhere.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub enum Eta {
    #[default]
    Trivial,
    /// `p^r b ↦ r·g` on the integers.
    PAdic { p: BigInt, g: Rational },
}

/// Exact field used for linear algebra over a coefficient ring.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Field {
    Rationals,
    Prime(BigInt),
}

impl Field {
    pub fn normalize(&self, a: Rational) -> Rational {
        match self {
            Field::Rationals => a,
            Field::Prime(p) => Rational::from_integer(reduce_mod(&a, p)),
        }
    }

    pub fn add(&self, a: &Rational, b: &Rational) -> Rational {
        self.normalize(a + b)
    }

    pub fn sub(&self, a: &Rational, b: &Rational) -> Rational {
        self.normalize(a - b)
    }

    pub fn mul(&self, a: &Rational, b: &Rational) -> Rational {
        self.normalize(a * b)
    }

    pub fn inv(&self, a: &Rational) -> Option<Rational> {
        if a.is_zero() {
            return None;
        }
        match self {
            Field::Rationals => Some(a.recip()),
            Field::Prime(p) => PrimeFieldElement::new(a.to_integer(), p)
                .ok()
                .and_then(|e| e.inv())
                .map(|e| Rational::from_integer(e.residue)),
        }
    }
}

/// Residue of a p-integral rational modulo `p`.
fn reduce_mod(a: &Rational, p: &BigInt) -> BigInt {
    if a.denom().is_one() {
        a.numer().mod_floor(p)
    } else {
        let den = PrimeFieldElement::new(a.denom().clone(), p).expect("modulus checked prime");
        let inv = den.inv().expect("denominator is a unit mod p");
        (a.numer() * inv.residue()).mod_floor(p)
    }
}

/// A commutative coefficient ring with its filtration η.
///
/// Ring elements are stored as `Rational`: integers with denominator one,
/// rationals, or residues in `[0, p)` for a prime field.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CoefficientRing {
    kind: RingKind,
    eta: Eta,
}

impl CoefficientRing {
    pub fn integers() -> Self {
        Self { kind: RingKind::Integers, eta: Eta::Trivial }
    }

    pub fn rationals() -> Self {
        Self { kind: RingKind::Rationals, eta: Eta::Trivial }
    }

    pub fn prime_field(p: BigInt) -> Result<Self> {
        if !is_prime(&p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Self { kind: RingKind::PrimeField(p), eta: Eta::Trivial })
    }

    /// Integers with the p-adic valuation of weight `g`.
    pub fn padic_integers(p: BigInt, g: Rational) -> Result<Self> {
        Self::integers().with_eta(Eta::PAdic { p, g })
    }

    /// Attach a coefficient filtration. p-adic values are only nonnegative on
    /// the integers, so other rings accept the trivial filtration only.
    pub fn with_eta(self, eta: Eta) -> Result<Self> {
        if let Eta::PAdic { p, g } = &eta {
            if !is_prime(p) {
                return Err(Error::NotPrime(p.clone()));
            }
            if !g.is_positive() {
                return Err(Error::Precondition(format!("p-adic weight must be positive, got {g}")));
            }
            if self.kind != RingKind::Integers {
                return Err(Error::Precondition(
                    "a p-adic coefficient filtration needs integer coefficients".into(),
                ));
            }
        }
        Ok(Self { eta, ..self })
    }

    pub fn kind(&self) -> &RingKind {
        &self.kind
    }

    pub fn eta(&self) -> &Eta {
        &self.eta
    }

    pub fn field(&self) -> Field {
        match &self.kind {
            RingKind::Integers | RingKind::Rationals => Field::Rationals,
            RingKind::PrimeField(p) => Field::Prime(p.clone()),
        }
    }

    pub fn contains(&self, a: &Rational) -> bool {
        match &self.kind {
            RingKind::Integers => a.is_integer(),
            RingKind::Rationals => true,
            RingKind::PrimeField(p) => a.is_integer() && !a.is_negative() && a.numer() < p,
        }
    }

    /// Map an integer or rational literal into the ring.
    pub fn element(&self, a: Rational) -> Result<Rational> {
        match &self.kind {
            RingKind::Integers if !a.is_integer() => {
                Err(Error::Parse(format!("{a} is not an integer coefficient")))
            }
            RingKind::PrimeField(p) => {
                if !a.is_integer() && (a.denom() % p).is_zero() {
                    return Err(Error::Parse(format!("{a} has no image modulo {p}")));
                }
                Ok(Rational::from_integer(reduce_mod(&a, p)))
            }
            _ => Ok(a),
        }
    }

    pub fn from_int(&self, n: i64) -> Rational {
        self.element(int(n)).expect("integers map into every ring")
    }

    pub fn normalize(&self, a: Rational) -> Rational {
        match &self.kind {
            RingKind::PrimeField(p) => Rational::from_integer(reduce_mod(&a, p)),
            _ => a,
        }
    }

    pub fn add(&self, a: &Rational, b: &Rational) -> Rational {
        self.normalize(a + b)
    }

    pub fn sub(&self, a: &Rational, b: &Rational) -> Rational {
        self.normalize(a - b)
    }

    pub fn mul(&self, a: &Rational, b: &Rational) -> Rational {
        self.normalize(a * b)
    }

    pub fn neg(&self, a: &Rational) -> Rational {
        self.normalize(-a)
    }

    /// η(a); infinity exactly for zero.
    pub fn eta_value(&self, a: &Rational) -> Extended<Rational> {
        if a.is_zero() {
            return Extended::Infinity;
        }
        match &self.eta {
            Eta::Trivial => Extended::Finite(Rational::zero()),
            Eta::PAdic { p, g } => padic_value(&a.to_integer(), p, g).expect("checked at construction"),
        }
    }

    /// Short tag used in JSON: `Z`, `Q` or `Fp:p`.
    pub fn tag(&self) -> String {
        match &self.kind {
            RingKind::Integers => "Z".into(),
            RingKind::Rationals => "Q".into(),
            RingKind::PrimeField(p) => format!("Fp:{p}"),
        }
    }

    pub fn from_tag(tag: &str) -> Result<Self> {
        match tag.trim() {
            "Z" => Ok(Self::integers()),
            "Q" => Ok(Self::rationals()),
            t => match t.strip_prefix("Fp:") {
                Some(p) => Self::prime_field(parse_bigint(p)?),
                None => Err(Error::Parse(format!("unknown ring {t:?}; expected Z, Q or Fp:p"))),
            },
        }
    }
}

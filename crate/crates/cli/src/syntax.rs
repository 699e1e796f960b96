//! Text syntax for generators and elements given on the command line.
//!
//! An element is a `+`-separated list of terms. A term is `c*m`, a bare
//! monomial `m` (coefficient 1) or a bare rational (a constant). Monomials
//! are group elements for `mn`, monoid words for `nc` and group words in
//! `u, v` for `qm`. Generator lists are `;`-separated.

use fga_core::exactnum::parse_rational;
use fga_core::filtered::{MnModel, MnSeries, NcSeriesModel};
use fga_core::freeobj::{GroupWord, Word};
use fga_core::metab::{m_eval_group_word, MGroupAlgebraElement};
use fga_core::ncseries::NcSeries;
use fga_core::ogroup::OrderedGroupElement;
use fga_core::{Error, Rational, Result};

fn terms(s: &str) -> Result<Vec<(Rational, &str)>> {
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::Parse("empty element".into()));
    }
    s.split('+')
        .map(|t| {
            let t = t.trim();
            match t.split_once('*') {
                Some((c, m)) => Ok((parse_rational(c.trim())?, m.trim())),
                None => Ok((Rational::from_integer(1.into()), t)),
            }
        })
        .collect()
}

pub fn split_list(s: &str) -> Vec<&str> {
    s.split(';').map(str::trim).filter(|p| !p.is_empty()).collect()
}

pub fn mn_element(model: &MnModel, s: &str) -> Result<MnSeries> {
    let mut out: Vec<(OrderedGroupElement, Rational)> = Vec::new();
    for (c, m) in terms(s)? {
        match model.group().parse_element(m) {
            Ok(g) => out.push((g, c)),
            Err(e) => match parse_rational(m) {
                Ok(k) => out.push((model.group().zero(), c * k)),
                Err(_) => return Err(e),
            },
        }
    }
    model.from_terms(out)
}

pub fn nc_element(model: &NcSeriesModel, s: &str) -> Result<NcSeries> {
    let mut out: Vec<(Word, Rational)> = Vec::new();
    for (c, m) in terms(s)? {
        match m.parse::<Word>() {
            Ok(w) => out.push((w, c)),
            Err(e) => match parse_rational(m) {
                Ok(k) => out.push((Word::one(), c * k)),
                Err(_) => return Err(e),
            },
        }
    }
    model.element(out)
}

pub fn qm_element(s: &str) -> Result<MGroupAlgebraElement> {
    let mut out = MGroupAlgebraElement::zero();
    for (c, m) in terms(s)? {
        let t = match m.parse::<GroupWord>() {
            Ok(w) => MGroupAlgebraElement::group(m_eval_group_word(&w)?).scale(&c),
            Err(e) => match parse_rational(m) {
                Ok(k) => MGroupAlgebraElement::constant(c * k),
                Err(_) => return Err(e),
            },
        };
        out = out.add(&t);
    }
    Ok(out)
}

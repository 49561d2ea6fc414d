//! Text and JSON forms.
//!
//! Words: `e`, or tokens `y` and `r<k>^<exp>` joined by `*`
//! (for example `r0^1*y*r1^-1`). A bare `r<k>` is read as exponent 1.
//! Group-algebra elements: a JSON list of `{"word": .., "re": .., "im": ..}`.

use std::str::FromStr;

use num_complex::Complex64;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::element::GroupAlgebraElement;
use super::word::{Generator, Syllable, Word};
use crate::error::Error;

fn parse_error(input: &str, reason: impl Into<String>) -> Error {
    Error::WordParse {
        input: input.to_string(),
        reason: reason.into(),
    }
}

fn parse_token(input: &str, token: &str) -> Result<Syllable, Error> {
    if token == "y" {
        return Ok(Syllable::new(Generator::Y, 1));
    }
    let body = token
        .strip_prefix('r')
        .ok_or_else(|| parse_error(input, format!("unexpected token {token:?}")))?;
    let (index, exp) = match body.split_once('^') {
        Some((i, e)) => (i, e),
        None => (body, "1"),
    };
    let index: u32 = index
        .parse()
        .map_err(|_| parse_error(input, format!("bad generator index in {token:?}")))?;
    let exp: i64 = exp
        .parse()
        .map_err(|_| parse_error(input, format!("bad exponent in {token:?}")))?;
    Ok(Syllable::new(Generator::R(index), exp))
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let trimmed = s.trim();
        if trimmed.is_empty() {
            return Err(parse_error(s, "empty input"));
        }
        if trimmed == "e" {
            return Ok(Word::identity());
        }
        let syllables = trimmed
            .split('*')
            .map(|t| parse_token(s, t.trim()))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Word::reduce(syllables))
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Serialize, Deserialize)]
struct JsonTerm {
    word: Word,
    re: f64,
    im: f64,
}

impl Serialize for GroupAlgebraElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.terms().map(|(w, c)| JsonTerm {
            word: w.clone(),
            re: c.re,
            im: c.im,
        }))
    }
}

impl<'de> Deserialize<'de> for GroupAlgebraElement {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let terms = Vec::<JsonTerm>::deserialize(deserializer)?;
        Ok(GroupAlgebraElement::from_terms(
            terms
                .into_iter()
                .map(|t| (t.word, Complex64::new(t.re, t.im))),
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_reduces() {
        let w: Word = "r0^1*y*r1^-1".parse().unwrap();
        assert_eq!(w, Word::r(0).mul(&Word::y()).mul(&Word::r_pow(1, -1)));
        assert!("y*y".parse::<Word>().unwrap().is_identity());
        assert!("e".parse::<Word>().unwrap().is_identity());
        assert_eq!("r3".parse::<Word>().unwrap(), Word::r(3));
    }

    #[test]
    fn display_parse_round_trip() {
        let w = Word::r_pow(12, -3).mul(&Word::y()).mul(&Word::r(0));
        assert_eq!(w.to_string().parse::<Word>().unwrap(), w);
    }

    #[test]
    fn rejects_garbage() {
        for bad in ["", "x", "r", "r1^", "ra^1", "r1^b", "y**r1^1"] {
            assert!(bad.parse::<Word>().is_err(), "{bad:?} should not parse");
        }
    }

    #[test]
    fn json_shape() {
        let a = GroupAlgebraElement::term(Complex64::new(0.5, -1.0), Word::r(0).mul(&Word::y()))
            + GroupAlgebraElement::one();
        let text = serde_json::to_string(&a).unwrap();
        assert_eq!(
            text,
            r#"[{"word":"e","re":1.0,"im":0.0},{"word":"r0^1*y","re":0.5,"im":-1.0}]"#
        );
        let back: GroupAlgebraElement = serde_json::from_str(&text).unwrap();
        assert_eq!(back, a);
    }
}

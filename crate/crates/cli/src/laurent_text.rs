//! Text syntax for Laurent polynomials: sums of terms like `2*t^-1`, `-t`,
//! `3/2*t^2`, `5`.

use concord_core::algebra::laurent::LaurentPoly;
use concord_core::{QLaurent, Rational};
use num_bigint::BigInt;
use std::str::FromStr;

pub fn parse(input: &str) -> Result<QLaurent, String> {
    let s: String = input.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err("empty Laurent polynomial".into());
    }
    let mut terms = Vec::new();
    let mut start = 0usize;
    let bytes = s.as_bytes();
    for i in 1..=bytes.len() {
        if i == bytes.len()
            || ((bytes[i] == b'+' || bytes[i] == b'-') && bytes[i - 1] != b'^' && bytes[i - 1] != b'/')
        {
            terms.push(&s[start..i]);
            start = i;
        }
    }
    let mut out = LaurentPoly::zero();
    for t in terms {
        let (coeff, exp) = parse_term(t)?;
        out = out + LaurentPoly::monomial(coeff, exp);
    }
    Ok(out)
}

fn parse_term(term: &str) -> Result<(Rational, i64), String> {
    let (sign, body) = match term.strip_prefix('-') {
        Some(rest) => (-1i64, rest),
        None => (1i64, term.strip_prefix('+').unwrap_or(term)),
    };
    if body.is_empty() {
        return Err(format!("dangling sign in '{}'", term));
    }
    let (coeff_str, exp) = match body.find('t') {
        None => (body, 0i64),
        Some(pos) => {
            let coeff = body[..pos].strip_suffix('*').unwrap_or(&body[..pos]);
            let after = &body[pos + 1..];
            let exp = if after.is_empty() {
                1i64
            } else if let Some(e) = after.strip_prefix('^') {
                e.parse::<i64>().map_err(|_| format!("bad exponent '{}'", after))?
            } else {
                return Err(format!("unexpected '{}' after t", after));
            };
            (coeff, exp)
        }
    };
    let coeff = if coeff_str.is_empty() {
        Rational::from_integer(1.into())
    } else {
        parse_rational(coeff_str)?
    };
    Ok((coeff * Rational::from_integer(sign.into()), exp))
}

pub fn parse_rational(s: &str) -> Result<Rational, String> {
    match s.split_once('/') {
        Some((n, d)) => {
            let num = BigInt::from_str(n).map_err(|_| format!("bad numerator '{}'", n))?;
            let den = BigInt::from_str(d).map_err(|_| format!("bad denominator '{}'", d))?;
            if den == BigInt::from(0) {
                return Err("zero denominator".into());
            }
            Ok(Rational::new(num, den))
        }
        None => BigInt::from_str(s)
            .map(Rational::from_integer)
            .map_err(|_| format!("bad rational '{}'", s)),
    }
}

//! Ring spec strings such as `GR(4,2)xGR(9)` or `GR(2^2,2)xGR(3^2)`.

use crate::cgring::CGRing;
use crate::error::{Error, Result};
use crate::galois::{GaloisRing, DEFAULT_MAX_ORDER};
use crate::numtheory::prime_power;

/// `(p, n, d)` for each component of a spec.
pub fn parse_components(spec: &str) -> Result<Vec<(u64, u32, u32)>> {
    let compact: String = spec.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(Error::Parse("empty ring spec".into()));
    }
    compact.split('x').map(parse_component).collect()
}

fn parse_number(s: &str, what: &str) -> Result<u64> {
    s.parse::<u64>()
        .map_err(|_| Error::Parse(format!("expected a number for {what}, found {s:?}")))
}

fn parse_component(s: &str) -> Result<(u64, u32, u32)> {
    let inner = s
        .strip_prefix("GR(")
        .and_then(|t| t.strip_suffix(')'))
        .ok_or_else(|| Error::Parse(format!("expected GR(...), found {s:?}")))?;
    let (char_part, d) = match inner.split_once(',') {
        Some((c, d)) => (c, parse_number(d, "the degree")?),
        None => (inner, 1),
    };
    let value = match char_part.split_once('^') {
        Some((base, exp)) => {
            let base = parse_number(base, "the base")?;
            let exp = parse_number(exp, "the exponent")?;
            u32::try_from(exp)
                .ok()
                .and_then(|e| base.checked_pow(e))
                .ok_or_else(|| Error::Parse(format!("{char_part} is too large")))?
        }
        None => parse_number(char_part, "the characteristic")?,
    };
    let (p, n) = prime_power(value).ok_or(Error::NotPrimePower(value))?;
    let d = u32::try_from(d).map_err(|_| Error::Parse(format!("degree {d} is too large")))?;
    if d == 0 {
        return Err(Error::InvalidParameters("degree must be positive".into()));
    }
    Ok((p, n, d))
}

pub fn parse_ring(spec: &str) -> Result<CGRing> {
    parse_ring_with_limit(spec, DEFAULT_MAX_ORDER)
}

pub fn parse_ring_with_limit(spec: &str, limit: u64) -> Result<CGRing> {
    let comps = parse_components(spec)?
        .into_iter()
        .map(|(p, n, d)| GaloisRing::with_limit(p, n, d, limit))
        .collect::<Result<Vec<_>>>()?;
    CGRing::with_limit(comps, limit)
}

/// Like [`parse_ring_with_limit`] but with explicit moduli, one per component.
pub fn parse_ring_with_moduli(spec: &str, moduli: &[Vec<u64>], limit: u64) -> Result<CGRing> {
    let parts = parse_components(spec)?;
    if parts.len() != moduli.len() {
        return Err(Error::Parse(format!(
            "{} components but {} moduli",
            parts.len(),
            moduli.len()
        )));
    }
    let comps = parts
        .into_iter()
        .zip(moduli)
        .map(|((p, n, d), m)| {
            if m.len() != d as usize + 1 {
                return Err(Error::BadModulus(format!(
                    "modulus {m:?} does not have degree {d}"
                )));
            }
            GaloisRing::with_modulus(p, n, m.clone(), limit)
        })
        .collect::<Result<Vec<_>>>()?;
    CGRing::with_limit(comps, limit)
}

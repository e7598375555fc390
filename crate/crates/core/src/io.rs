//! Text serialization for vertex sets, rationals, and grid CSV.
//!
//! Set format: the first non-comment line is `t n`; every following
//! non-empty line is one vertex, `n` space-separated integers in `1..=t`.
//! `#` starts a comment that runs to the end of the line. Duplicate
//! vertices are rejected.

use crate::cube::{Params, Vertex, VertexSet};
use crate::error::Error;
use crate::profile::GridRow;
use crate::Result;
use num::{BigInt, BigRational, One};
use std::path::Path;

/// Parse a vertex set from text under a dense-representation cap.
pub fn parse_set(text: &str, cap: u64) -> Result<VertexSet> {
    let mut header: Option<Params> = None;
    let mut set: Option<VertexSet> = None;
    for (lineno, raw) in text.lines().enumerate() {
        let line = match raw.find('#') {
            Some(k) => &raw[..k],
            None => raw,
        };
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks.is_empty() {
            continue;
        }
        let nums: Vec<u32> = toks
            .iter()
            .map(|s| {
                s.parse::<u32>().map_err(|_| {
                    Error::Parse(format!("line {}: `{}` is not a positive integer", lineno + 1, s))
                })
            })
            .collect::<Result<_>>()?;
        match header {
            None => {
                if nums.len() != 2 {
                    return Err(Error::Parse(format!(
                        "line {}: header must be `t n`, got {} numbers",
                        lineno + 1,
                        nums.len()
                    )));
                }
                let p = Params::with_cap(nums[0], nums[1], cap)?;
                set = Some(VertexSet::empty(p));
                header = Some(p);
            }
            Some(p) => {
                if nums.len() != p.n() as usize {
                    return Err(Error::Parse(format!(
                        "line {}: expected {} coordinates, got {}",
                        lineno + 1,
                        p.n(),
                        nums.len()
                    )));
                }
                let v = Vertex::new(nums);
                let s = set.as_mut().expect("set exists once header is parsed");
                if s.contains(&v).map_err(|e| {
                    Error::Parse(format!("line {}: {}", lineno + 1, e))
                })? {
                    return Err(Error::Parse(format!(
                        "line {}: duplicate vertex `{}`",
                        lineno + 1,
                        v
                    )));
                }
                s.insert(&v)
                    .map_err(|e| Error::Parse(format!("line {}: {}", lineno + 1, e)))?;
            }
        }
    }
    set.ok_or_else(|| Error::Parse("missing `t n` header line".into()))
}

/// Serialize a vertex set in the format accepted by [`parse_set`].
pub fn format_set(s: &VertexSet) -> String {
    let p = s.params();
    let mut out = String::new();
    out.push_str(&format!("# {} vertices of [{}]^{}\n", s.size(), p.t(), p.n()));
    out.push_str(&format!("{} {}\n", p.t(), p.n()));
    for v in s.members() {
        out.push_str(&v.to_string());
        out.push('\n');
    }
    out
}

pub fn read_set(path: &Path, cap: u64) -> Result<VertexSet> {
    let text = std::fs::read_to_string(path)?;
    parse_set(&text, cap)
}

pub fn write_set(path: &Path, s: &VertexSet) -> Result<()> {
    std::fs::write(path, format_set(s))?;
    Ok(())
}

/// Parse `p/q` or a bare integer `p` as an exact rational.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = |_| Error::Parse(format!("`{s}` is not a rational (expected `p/q` or an integer)"));
    match s.split_once('/') {
        Some((num, den)) => {
            let n: BigInt = num.trim().parse().map_err(bad)?;
            let d: BigInt = den.trim().parse().map_err(bad)?;
            if d == BigInt::from(0) {
                return Err(Error::Parse(format!("`{s}` has denominator zero")));
            }
            Ok(BigRational::new(n, d))
        }
        None => {
            let n: BigInt = s.parse().map_err(bad)?;
            Ok(BigRational::from(n))
        }
    }
}

/// `p/q` in lowest terms; a bare integer when the denominator is 1.
pub fn format_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// CSV for a profile grid: exact rational bounds plus the decimal power
/// lower bound, one row per grid point.
pub fn grid_to_csv(rows: &[GridRow]) -> String {
    let mut out = String::from("nu,phi_lo,phi_hi,phi_exact,power_lower\n");
    for row in rows {
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            format_rational(&row.nu),
            format_rational(&row.phi.lo),
            format_rational(&row.phi.hi),
            row.phi.exact,
            row.power.to_f64()
        ));
    }
    out
}

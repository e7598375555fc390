//! The isoperimetric profile recursion for cliques' tensor powers, the
//! exponent η(t), the power-function lower bound ν^{1/η(t)}, and the two
//! supporting algebraic inequalities.
//!
//! `phi` evaluates the profile Φ_t by the two-branch affine recursion
//!     Φ_t(ν) = (t−1)/t · Φ_t(tν)                      for ν < 1/t,
//!     Φ_t(ν) = (t−1)/t + 1/t · Φ_t((tν−1)/(t−1))      for ν ≥ 1/t,
//! carried exactly in rationals: the value is a·1 + b·Φ_t(ν_cur) for an
//! affine state (a, b), so stopping at any point encloses Φ_t(ν) in
//! [a, a+b]. The state contracts by at least (t−1)/t per step, hence
//! `bits` of width cost O(bits) steps. Orbits hitting 0 or 1 give exact
//! values (Φ_t(0) = 0, Φ_t(1) = 1).

use crate::error::Error;
use crate::real::Real;
use crate::Result;
use num::{BigInt, BigRational, One, Zero};

/// Enclosure of a profile value: `lo ≤ Φ ≤ hi`; `exact` means `lo == hi`
/// (the recursion terminated); `steps` is the number of recursion steps
/// taken.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhiInterval {
    pub lo: BigRational,
    pub hi: BigRational,
    pub exact: bool,
    pub steps: usize,
}

impl PhiInterval {
    /// Interval width `hi - lo` (zero when exact).
    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }
}

/// One row of the profile grid: exact argument, profile enclosure, and the
/// power lower bound ν^{1/η(t)}.
#[derive(Clone, Debug)]
pub struct GridRow {
    pub nu: BigRational,
    pub phi: PhiInterval,
    pub power: Real,
}

fn check_t(t: u32, min: u32) -> Result<()> {
    if t < min {
        return Err(Error::InvalidInput(format!("t must be >= {min}, got {t}")));
    }
    Ok(())
}

fn check_unit_interval(nu: &BigRational) -> Result<()> {
    if nu < &BigRational::zero() || nu > &BigRational::one() {
        return Err(Error::InvalidInput(format!(
            "nu must lie in [0, 1], got {nu}"
        )));
    }
    Ok(())
}

/// η(t) = log t / (log t − log(t−1)), the isoperimetric exponent.
pub fn eta(t: u32, bits: usize) -> Result<Real> {
    check_t(t, 2)?;
    let ln_t = Real::from_u64(t as u64, bits).ln();
    let ln_t1 = Real::from_u64((t - 1) as u64, bits).ln();
    Ok(ln_t.div(&ln_t.sub(&ln_t1)))
}

/// 1/η(t) = (log t − log(t−1)) / log t, computed directly.
pub fn eta_inv(t: u32, bits: usize) -> Result<Real> {
    check_t(t, 2)?;
    let ln_t = Real::from_u64(t as u64, bits).ln();
    let ln_t1 = Real::from_u64((t - 1) as u64, bits).ln();
    Ok(ln_t.sub(&ln_t1).div(&ln_t))
}

/// True iff `0 < r <= 2^-bits`.
fn at_most_pow2_neg(r: &BigRational, bits: usize) -> bool {
    // r = p/q with p, q > 0:  p/q <= 2^-bits  <=>  p << bits <= q
    (r.numer().clone() << bits) <= *r.denom()
}

enum Stop {
    WidthBits(usize),
    // step-aligned evaluation is exercised by the consistency tests
    #[cfg_attr(not(test), allow(dead_code))]
    Steps(usize),
}

fn phi_impl(t: u32, nu: &BigRational, stop: Stop) -> PhiInterval {
    let tq = BigRational::from(BigInt::from(t));
    let shrink = BigRational::new(BigInt::from(t - 1), BigInt::from(t)); // (t-1)/t
    let inv_t = BigRational::new(BigInt::from(1), BigInt::from(t));
    let tm1 = BigRational::from(BigInt::from(t - 1));

    let mut a = BigRational::zero();
    let mut b = BigRational::one();
    let mut v = nu.clone();
    let mut steps = 0usize;
    loop {
        if v.is_zero() {
            return PhiInterval {
                hi: a.clone(),
                lo: a,
                exact: true,
                steps,
            };
        }
        if v.is_one() {
            let val = a + b;
            return PhiInterval {
                lo: val.clone(),
                hi: val,
                exact: true,
                steps,
            };
        }
        let done = match stop {
            Stop::WidthBits(bits) => at_most_pow2_neg(&b, bits),
            Stop::Steps(k) => steps >= k,
        };
        if done {
            return PhiInterval {
                lo: a.clone(),
                hi: a + b,
                exact: false,
                steps,
            };
        }
        steps += 1;
        if v < inv_t {
            b *= &shrink;
            v *= &tq;
        } else {
            a += &b * &shrink;
            b /= &tq;
            v = (v * &tq - BigRational::one()) / &tm1;
        }
    }
}

/// Profile enclosure of width at most `2^-bits` (exact when the orbit of ν
/// reaches 0 or 1).
pub fn phi(t: u32, nu: &BigRational, bits: usize) -> Result<PhiInterval> {
    check_t(t, 3)?;
    check_unit_interval(nu)?;
    Ok(phi_impl(t, nu, Stop::WidthBits(bits)))
}

/// Profile enclosure after exactly `steps` recursion steps (fewer if the
/// orbit terminates); used for step-aligned self-consistency checks.
#[cfg_attr(not(test), allow(dead_code))]
pub(crate) fn phi_steps(t: u32, nu: &BigRational, steps: usize) -> Result<PhiInterval> {
    check_t(t, 3)?;
    check_unit_interval(nu)?;
    Ok(phi_impl(t, nu, Stop::Steps(steps)))
}

/// The power lower bound ν^{1/η(t)} (satisfies Φ_t(ν) ≥ ν^{1/η(t)}, with
/// equality at ν = t^-k).
pub fn phi_power_lower(t: u32, nu: &BigRational, bits: usize) -> Result<Real> {
    check_t(t, 3)?;
    check_unit_interval(nu)?;
    let alpha = eta_inv(t, bits)?;
    Ok(Real::from_rational(nu, bits).powr(&alpha))
}

/// Verifies the two-variable inequality
///   y^{1/η(t)} + (t−1)·x^{1/η(t)} ≥ (t−1)·(x + (t−1)y)^{1/η(t)}
/// for x ≥ y ≥ 0 (equality at y = 0 and at x = y). Checked with slack
/// `(1+|rhs|)·2^{-p/2}` at working precision p, and re-checked at doubled
/// precision before reporting a failure.
pub fn check_claim_a1(t: u32, x: &Real, y: &Real) -> Result<bool> {
    check_t(t, 2)?;
    if y.is_negative() || x.cmp(y) == std::cmp::Ordering::Less {
        return Err(Error::InvalidInput(
            "claim requires x >= y >= 0".to_string(),
        ));
    }
    let p = x.bits().max(y.bits());
    if claim_a1_holds(t, &x.with_bits(p), &y.with_bits(p))? {
        return Ok(true);
    }
    claim_a1_holds(t, &x.with_bits(2 * p), &y.with_bits(2 * p))
}

fn claim_a1_holds(t: u32, x: &Real, y: &Real) -> Result<bool> {
    let p = x.bits().max(y.bits());
    let alpha = eta_inv(t, p)?;
    let tm1 = Real::from_u64((t - 1) as u64, p);
    let lhs = y.powr(&alpha).add(&tm1.mul(&x.powr(&alpha)));
    let rhs = tm1.mul(&x.add(&tm1.mul(y)).powr(&alpha));
    let tol = Real::one(p).add(&rhs.abs()).mul(&Real::pow2(-((p / 2) as i32), p));
    Ok(lhs.cmp(&rhs.sub(&tol)) != std::cmp::Ordering::Less)
}

/// Verifies ((t−1)³/((t−1)³ − t))^{η(t)} ≤ 4 at 128-bit precision.
pub fn check_claim_a2(t: u32) -> Result<bool> {
    check_t(t, 3)?;
    let bits = 128;
    let c = BigInt::from(t - 1).pow(3);
    let num = BigRational::from(c.clone());
    let den = BigRational::from(c - BigInt::from(t));
    let ratio = Real::from_rational(&(num / den), bits);
    let v = ratio.powr(&eta(t, bits)?);
    let four = Real::from_u64(4, bits);
    let tol = Real::pow2(-64, bits);
    Ok(v.cmp(&four.add(&tol)) != std::cmp::Ordering::Greater)
}

/// Profile grid at ν = k/points, k = 0..=points, with the power bound
/// column. Validates monotonicity of both enclosure rails and domination
/// of the power column (with 2^-bits slack) before returning.
pub fn profile_grid(t: u32, points: usize, bits: usize) -> Result<Vec<GridRow>> {
    check_t(t, 3)?;
    if points < 2 {
        return Err(Error::InvalidInput(format!(
            "grid needs at least 2 points, got {points}"
        )));
    }
    let slack = Real::pow2(-(bits as i32), bits);
    let mut rows = Vec::with_capacity(points + 1);
    for k in 0..=points {
        let nu = BigRational::new(BigInt::from(k), BigInt::from(points));
        let phi_v = phi(t, &nu, bits)?;
        let power = phi_power_lower(t, &nu, bits)?;
        let lo_r = Real::from_rational(&phi_v.lo, bits.max(64));
        if lo_r.cmp(&power.sub(&slack)) == std::cmp::Ordering::Less {
            return Err(Error::Violation(format!(
                "profile fails power lower bound at nu = {nu}: lo = {}, power = {}",
                phi_v.lo, power
            )));
        }
        if let Some(prev) = rows.last() {
            let prev: &GridRow = prev;
            if phi_v.lo < prev.phi.lo || phi_v.hi < prev.phi.hi {
                return Err(Error::Violation(format!(
                    "profile enclosure not monotone at nu = {nu}"
                )));
            }
        }
        rows.push(GridRow {
            nu,
            phi: phi_v,
            power,
        });
    }
    Ok(rows)
}

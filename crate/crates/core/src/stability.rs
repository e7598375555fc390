//! Stability analysis of independent sets: how far a sparse independent
//! set sits from the nearest dictator, whether the power-law bound
//! `δ ≤ 4ε^η(t)` applies and holds, the per-coordinate deviation
//! dichotomy, and the collapse witness that locates a near-dictator
//! coordinate.

use crate::compress;
use crate::constructions::max_independent;
use crate::cube::{self, VertexSet};
use crate::error::Error;
use crate::io::format_rational;
use crate::profile;
use crate::real::Real;
use crate::Result;
use num::{BigInt, BigRational, One};

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn t_pow(t: u32, e: u32) -> BigInt {
    BigInt::from(t).pow(e)
}

/// `lhs ≤ rhs` where `rhs` is evaluated in floating point at a chosen
/// precision: decide by sign when the gap exceeds the precision slack,
/// refine once from 128 to 256 bits, and treat a still-ambiguous gap as
/// equality (the comparison holds).
fn leq_with_refinement<F: Fn(usize) -> Real>(lhs: &BigRational, rhs: F) -> bool {
    for (bits, slack_exp) in [(128usize, -64i32), (256, -128)] {
        let l = Real::from_rational(lhs, bits);
        let diff = l.sub(&rhs(bits));
        let slack = Real::pow2(slack_exp, bits);
        if diff.cmp(&slack) == std::cmp::Ordering::Greater {
            return false;
        }
        if diff.cmp(&slack.neg()) == std::cmp::Ordering::Less {
            return true;
        }
    }
    true
}

/// `4 · eps^{η(t)}` at the given precision.
fn power_bound(eps: &BigRational, t: u32, bits: usize) -> Real {
    let eta = profile::eta(t, bits).expect("t >= 2 checked by Params");
    Real::from_rational(eps, bits)
        .powr(&eta)
        .mul(&Real::from_u64(4, bits))
}

/// Full stability diagnostics for one independent set.
#[derive(Clone, Debug)]
pub struct StabilityReport {
    pub t: u32,
    pub n: u32,
    pub size: u64,
    /// Density μ(I).
    pub mu: BigRational,
    /// Sparsity deficit ε = 1 − t·μ(I).
    pub eps: BigRational,
    /// Deviation δ = μ(I ∖ J*) at the best dictator J*.
    pub delta: BigRational,
    /// Best dictator as (value i, coordinate j).
    pub best: (u32, u32),
    /// The power-law bound 4ε^{η(t)} (128-bit evaluation).
    pub bound: Real,
    /// Regime threshold 1 − 3/t + 2/t².
    pub eps_threshold: BigRational,
    /// Whether ε < threshold (strict; equality is out of regime).
    pub within_regime: bool,
    /// Whether δ ≤ 4ε^{η(t)} up to the precision slack.
    pub bound_holds: bool,
    /// Symmetric-difference density μ(I Δ J*); equals ε/t + 2δ.
    pub sym_diff: BigRational,
}

impl StabilityReport {
    /// Flat key=value view (exact rationals; the bound as decimal).
    pub fn to_pairs(&self) -> Vec<(&'static str, String)> {
        vec![
            ("t", self.t.to_string()),
            ("n", self.n.to_string()),
            ("size", self.size.to_string()),
            ("mu", format_rational(&self.mu)),
            ("eps", format_rational(&self.eps)),
            ("delta", format_rational(&self.delta)),
            ("best_i", self.best.0.to_string()),
            ("best_j", self.best.1.to_string()),
            ("bound", format!("{}", self.bound.to_f64())),
            ("eps_threshold", format_rational(&self.eps_threshold)),
            ("within_regime", self.within_regime.to_string()),
            ("bound_holds", self.bound_holds.to_string()),
            ("sym_diff", format_rational(&self.sym_diff)),
        ]
    }
}

/// Analyze an independent set: sparsity ε, best-dictator deviation δ,
/// the power-law bound with its regime flag, and the symmetric
/// difference to the best dictator. Label sorting is not assumed — all
/// `t·n` dictators are scanned.
pub fn stability_report(i: &VertexSet) -> Result<StabilityReport> {
    if !cube::is_independent(i) {
        return Err(Error::InvalidInput(
            "stability analysis requires an independent set".into(),
    ));
    }
    let p = *i.params();
    let (t, n) = (p.t(), p.n());
    let mu = i.density();
    let eps = BigRational::one() - BigRational::from(BigInt::from(t)) * &mu;
    let (best_j, best_i, delta) = crate::oracle::best_dictator(i);
    let jstar = max_independent(&p, best_i, best_j)?;
    let sym_diff_size = i.difference(&jstar).size() + jstar.difference(i).size();
    let sym_diff = BigRational::new(sym_diff_size.into(), t_pow(t, n));
    debug_assert_eq!(
        sym_diff,
        &eps / BigRational::from(BigInt::from(t)) + rat(2, 1) * &delta
    );
    let eps_threshold =
        BigRational::one() - rat(3, t as i64) + BigRational::new(2.into(), t_pow(t, 2));
    let within_regime = eps < eps_threshold;
    let bound = power_bound(&eps, t, 128);
    let bound_holds = leq_with_refinement(&delta, |bits| power_bound(&eps, t, bits));
    Ok(StabilityReport {
        t,
        n,
        size: i.size() as u64,
        mu,
        eps,
        delta,
        best: (best_i, best_j),
        bound,
        eps_threshold,
        within_regime,
        bound_holds,
        sym_diff,
    })
}

/// Identify a set as a dictator `J_{i,j}`, returning `(i, j)`.
fn identify_dictator(j: &VertexSet) -> Result<(u32, u32)> {
    let p = j.params();
    let t = p.t() as usize;
    if j.size() * t != p.len() {
        return Err(Error::InvalidInput(
            "not a dictator: wrong cardinality".into(),
        ));
    }
    let counts = cube::slice_counts_all(j);
    for (jc, per_value) in counts.iter().enumerate() {
        for (iv, &c) in per_value.iter().enumerate() {
            if c as usize == j.size() {
                return Ok((iv as u32 + 1, jc as u32 + 1));
            }
        }
    }
    Err(Error::InvalidInput(
        "not a dictator: no coordinate is constant".into(),
    ))
}

/// Amplification step: given independent `I` and a dictator `J` with
/// small deviation `μ(I∖J) < 1/t³`, check the power-law bound
/// `μ(I∖J) ≤ 4ε^{η(t)}`. Deviation at or above `1/t³` is outside the
/// amplification regime and is an error, not a failure.
pub fn amplify_check(i: &VertexSet, j: &VertexSet) -> Result<bool> {
    if i.params() != j.params() {
        return Err(Error::InvalidInput("mismatched parameters".into()));
    }
    if !cube::is_independent(i) {
        return Err(Error::InvalidInput(
            "amplification requires an independent set".into(),
        ));
    }
    identify_dictator(j)?;
    let p = i.params();
    let t = p.t();
    let dev = i.difference(j).density();
    let gate = BigRational::new(One::one(), t_pow(t, 3));
    if dev >= gate {
        return Err(Error::Regime(format!(
            "deviation {} is not below 1/t^3 = {}; amplification does not apply",
            format_rational(&dev),
            format_rational(&gate)
        )));
    }
    let eps = BigRational::one() - BigRational::from(BigInt::from(t)) * i.density();
    Ok(leq_with_refinement(&dev, |bits| power_bound(&eps, t, bits)))
}

/// Which side of the forbidden deviation band a coordinate lands on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BandSide {
    /// Deviation below `(t−1)/t⁴`: the coordinate is nearly a dictator.
    Low,
    /// Deviation above `(2t−1)(t−1)/t⁴`: far from this dictator.
    High,
}

/// Per-coordinate dichotomy verdict.
#[derive(Clone, Debug)]
pub struct CoordinateVerdict {
    /// Coordinate index (1-based).
    pub j: u32,
    /// Deviation μ(I ∖ J_{1,j}).
    pub deviation: BigRational,
    pub side: BandSide,
    /// Whether the deviation also avoids the narrower band
    /// `((t−1)/t⁴, (t−1)/t³)`.
    pub outside_weak_band: bool,
}

fn check_sorted_independent(i: &VertexSet) -> Result<Vec<Vec<u64>>> {
    if !cube::is_independent(i) {
        return Err(Error::InvalidInput("requires an independent set".into()));
    }
    let counts = cube::slice_counts_all(i);
    let sorted = counts
        .iter()
        .all(|per_value| per_value.windows(2).all(|w| w[0] >= w[1]));
    if !sorted {
        return Err(Error::InvalidInput(
            "requires sorted labels (heaviest value first in every coordinate)".into(),
        ));
    }
    Ok(counts)
}

fn check_density_regime(i: &VertexSet) -> Result<()> {
    let p = i.params();
    let t = p.t();
    let gate = BigRational::new((3 * t as i64 - 2).into(), t_pow(t, 3));
    if i.density() <= gate {
        return Err(Error::Regime(format!(
            "density {} is not above (3t-2)/t^3 = {}; dichotomy does not apply",
            format_rational(&i.density()),
            format_rational(&gate)
        )));
    }
    Ok(())
}

fn violation_with_set(context: String, i: &VertexSet) -> Error {
    Error::Violation(format!(
        "{context}\ncounterexample set:\n{}",
        crate::io::format_set(i)
    ))
}

/// For a sorted independent set of density above `(3t−2)/t³`, classify
/// every coordinate's deviation from `J_{1,j}` as strictly below
/// `(t−1)/t⁴` or strictly above `(2t−1)(t−1)/t⁴`. A deviation inside the
/// band (endpoints included) is a violation and carries the serialized
/// set in the error.
pub fn dichotomy_check(i: &VertexSet) -> Result<Vec<CoordinateVerdict>> {
    let counts = check_sorted_independent(i)?;
    check_density_regime(i)?;
    let p = i.params();
    let (t, n) = (p.t(), p.n());
    let lo = BigRational::new((t as i64 - 1).into(), t_pow(t, 4));
    let hi = BigRational::new(((2 * t as i64 - 1) * (t as i64 - 1)).into(), t_pow(t, 4));
    let weak_hi = BigRational::new((t as i64 - 1).into(), t_pow(t, 3));
    let total = t_pow(t, n);
    let mut verdicts = Vec::with_capacity(n as usize);
    for j in 1..=n {
        let inside = counts[j as usize - 1][0];
        let deviation = BigRational::new((i.size() as u64 - inside).into(), total.clone());
        let side = if deviation < lo {
            BandSide::Low
        } else if deviation > hi {
            BandSide::High
        } else {
            return Err(violation_with_set(
                format!(
                    "coordinate {j}: deviation {} lies in the forbidden band [{}, {}]",
                    format_rational(&deviation),
                    format_rational(&lo),
                    format_rational(&hi)
                ),
                i,
            ));
        };
        let outside_weak_band = !(deviation > lo && deviation < weak_hi);
        verdicts.push(CoordinateVerdict {
            j,
            deviation,
            side,
            outside_weak_band,
        });
    }
    Ok(verdicts)
}

/// For a sorted independent set of density above `(3t−2)/t³`, return the
/// first coordinate whose deviation from `J_{1,j}` is below `(t−1)/t⁴`.
/// Absence of a witness is a violation carrying the serialized set.
pub fn collapse_witness(i: &VertexSet) -> Result<u32> {
    let counts = check_sorted_independent(i)?;
    check_density_regime(i)?;
    let p = i.params();
    let (t, n) = (p.t(), p.n());
    let lo = BigRational::new((t as i64 - 1).into(), t_pow(t, 4));
    let total = t_pow(t, n);
    for j in 1..=n {
        let inside = counts[j as usize - 1][0];
        let deviation = BigRational::new((i.size() as u64 - inside).into(), total.clone());
        if deviation < lo {
            return Ok(j);
        }
    }
    Err(violation_with_set(
        format!(
            "no coordinate deviates below (t-1)/t^4 = {}",
            format_rational(&BigRational::new((t as i64 - 1).into(), t_pow(t, 4)))
        ),
        i,
    ))
}

/// Sort labels, then report: convenience for end-to-end pipelines.
pub fn sorted_report(i: &VertexSet) -> Result<(VertexSet, StabilityReport)> {
    let sorted = compress::sort_labels(i);
    let report = stability_report(&sorted)?;
    Ok((sorted, report))
}

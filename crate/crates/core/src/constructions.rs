//! Named extremal families: dictator prefixes, maximum independent sets,
//! the phase-transition union of three lines, the near-extremal family
//! with vanishing dictator deviation, and the small counterexample to
//! strict outer-boundary monotonicity under compression.
//!
//! Closed-form sizes and densities are asserted exactly (rational
//! equality) at construction time where stated.

use crate::cube::{self, Params, VertexSet};
use crate::error::Error;
use crate::oracle::best_dictator;
use crate::Result;
use num::{BigInt, BigRational, One};

fn big_pow(base: u32, exp: u32) -> BigInt {
    BigInt::from(base).pow(exp)
}

/// `{1}^k × [t]^{n−k}`: the first `k` coordinates pinned to 1.
///
/// Size `t^{n−k}`; its boundary is `{2,…,t}^k × [t]^{n−k}` of density
/// `((t−1)/t)^k`, so the log-density ratio equals the exponent
/// `ln t / (ln t − ln(t−1))` for every `k ≥ 1`.
pub fn dictator(p: &Params, k: u32) -> Result<VertexSet> {
    if k > p.n() {
        return Err(Error::InvalidInput(format!(
            "k = {k} exceeds n = {}",
            p.n()
        )));
    }
    let step = (p.t() as usize).pow(k);
    let s = VertexSet::from_ranks(*p, (0..p.len()).step_by(step));
    assert_eq!(s.size(), p.len() / step);
    Ok(s)
}

/// `J_{i,j} = [t]^{j−1} × {i} × [t]^{n−j}`: coordinate `j` pinned to `i`.
/// Independent of density exactly `1/t`.
pub fn max_independent(p: &Params, i: u32, j: u32) -> Result<VertexSet> {
    if i < 1 || i > p.t() {
        return Err(Error::InvalidInput(format!(
            "value i = {i} outside [1, {}]",
            p.t()
        )));
    }
    if j < 1 || j > p.n() {
        return Err(Error::InvalidInput(format!(
            "coordinate j = {j} outside [1, {}]",
            p.n()
        )));
    }
    let stride = p.stride(j);
    let t = p.t() as usize;
    let mut s = VertexSet::empty(*p);
    for hi in 0..p.len() / (stride * t) {
        let base = hi * stride * t + (i as usize - 1) * stride;
        for r in base..base + stride {
            s.insert_rank(r);
        }
    }
    assert_eq!(s.size() * t, p.len());
    Ok(s)
}

/// Three lines through the all-ones point, padded by free coordinates:
/// `{(1,1,a), (1,a,1), (a,1,1) : a ∈ [t]} × [t]^{n−3}`.
///
/// Independent of density `(3t−2)/t³` — above the threshold where
/// maximum-size independent sets stop being the only near-extremal shape.
pub fn phase_transition_set(p: &Params) -> Result<VertexSet> {
    if p.n() < 3 {
        return Err(Error::InvalidInput(format!(
            "needs n >= 3, got n = {}",
            p.n()
        )));
    }
    let t = p.t() as usize;
    let cube3 = t * t * t;
    let mut core_ranks: Vec<usize> = Vec::with_capacity(3 * t - 2);
    for a in 0..t {
        core_ranks.push(a * t * t); // (1, 1, a)
        core_ranks.push(a * t); // (1, a, 1)
        core_ranks.push(a); // (a, 1, 1)
    }
    let mut s = VertexSet::empty(*p);
    for block in 0..p.len() / cube3 {
        for &r in &core_ranks {
            s.insert_rank(block * cube3 + r);
        }
    }
    assert_eq!(s.size(), (3 * t - 2) * (p.len() / cube3));
    assert!(cube::is_independent(&s));
    Ok(s)
}

/// Independent family with near-threshold measure and deviation from the
/// nearest dictator shrinking like `t^{−n}`:
/// `([t] × {1}^{n−1}  ∪  {1} × [t]^{n−1})  ∖  ({1} × {2,…,t}^{n−1})`.
///
/// Returns `(I, eps, delta)` where `eps = 1 − t·μ(I)` and `delta` is the
/// deviation from the best dictator; both are validated exactly against
/// the built set:
/// `eps = ((t−1)^{n−1} − (t−1)) / t^{n−1}`, `delta = (t−1)/t^n`.
pub fn appendix_c_family(p: &Params) -> Result<(VertexSet, BigRational, BigRational)> {
    if p.n() < 3 {
        return Err(Error::InvalidInput(format!(
            "needs n >= 3, got n = {}",
            p.n()
        )));
    }
    let t = p.t() as usize;
    let n = p.n();
    let mut s = VertexSet::empty(*p);
    // {1} x [t]^{n-1}: coordinate 1 pinned to 1
    for r in (0..p.len()).step_by(t) {
        s.insert_rank(r);
    }
    // remove {1} x {2,..,t}^{n-1}: tail digits all nonzero
    let mut tail = vec![1usize; n as usize - 1];
    loop {
        let m: usize = tail.iter().rev().fold(0, |acc, &d| acc * t + d);
        s.remove_rank(m * t);
        let mut pos = 0;
        loop {
            if pos == tail.len() {
                break;
            }
            tail[pos] += 1;
            if tail[pos] < t {
                break;
            }
            tail[pos] = 1;
            pos += 1;
        }
        if pos == tail.len() {
            break;
        }
    }
    // union [t] x {1}^{n-1}: ranks 0..t
    for r in 0..t {
        s.insert_rank(r);
    }
    assert!(cube::is_independent(&s));

    let tn = big_pow(p.t(), n);
    let tn1 = big_pow(p.t(), n - 1);
    let t1n1 = big_pow(p.t() - 1, n - 1);
    // (t-1)/t^n + 1/t - (t-1)^{n-1}/t^n over the common denominator t^n
    let mu_expected = BigRational::new(BigInt::from(p.t() - 1) + &tn1 - &t1n1, tn.clone());
    assert_eq!(s.density(), mu_expected);

    let eps = BigRational::new(&t1n1 - BigInt::from(p.t() - 1), tn1);
    assert_eq!(
        eps,
        BigRational::one() - BigRational::from(BigInt::from(p.t())) * s.density()
    );

    let delta = BigRational::new(BigInt::from(p.t() - 1), tn);
    let (_, _, observed) = best_dictator(&s);
    assert_eq!(observed, delta);

    Ok((s, eps, delta))
}

/// The 4-point set `{(1,2),(1,3),(2,1),(3,1)}` in `[3]²` whose
/// single-coordinate compression preserves total boundary size (8) while
/// strictly growing the boundary part outside the set (4 → 5).
pub fn remark_counterexample() -> VertexSet {
    let p = Params::new(3, 2).expect("3^2 is tiny");
    VertexSet::from_ranks(p, [3, 6, 1, 2])
}

//! Named self-check suites for the command-line `verify` subcommand.
//!
//! Each suite runs a list of invariant checks at desk scale and reports
//! one result per check. A failed law produces a failed check (carrying
//! the counterexample in its detail text); infrastructure problems
//! (capacity, unknown suite name) surface as errors instead.

use crate::compress;
use crate::constructions;
use crate::cube::{self, Params, VertexSet};
use crate::error::Error;
use crate::io::format_rational;
use crate::oracle;
use crate::profile;
use crate::real::Real;
use crate::stability;
use crate::Result;
use num::{BigInt, BigRational, One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Options shared by all suites.
#[derive(Clone, Copy, Debug, Default)]
pub struct SuiteOptions {
    /// Override for the independent-set enumeration node guard.
    pub max_nodes: Option<u64>,
}

/// Outcome of one named check.
#[derive(Clone, Debug)]
pub struct CheckResult {
    pub suite: &'static str,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

/// All valid suite names, in execution order for `all`.
pub const SUITE_NAMES: [&str; 6] = [
    "core",
    "compress",
    "profile",
    "oracle",
    "stability",
    "constructions",
];

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Violation(msg()))
    }
}

fn random_set(p: &Params, rng: &mut ChaCha8Rng, fill_pct: u32) -> VertexSet {
    VertexSet::from_ranks(
        *p,
        (0..p.len()).filter(|_| rng.random_range(0..100) < fill_pct),
    )
}

type CheckFn = fn(&SuiteOptions) -> Result<String>;

struct Check {
    suite: &'static str,
    name: &'static str,
    run: CheckFn,
}

// ---------------------------------------------------------------- core

fn core_rank_bijection(_: &SuiteOptions) -> Result<String> {
    let mut verified = 0usize;
    for (t, n) in [(3u32, 3u32), (4, 2), (2, 5)] {
        let p = Params::new(t, n)?;
        for r in 0..p.len() {
            let v = cube::unrank(r, &p)?;
            ensure(cube::rank(&v, &p)? == r, || {
                format!("rank/unrank mismatch at r={r} in [{t}]^{n}")
            })?;
            verified += 1;
        }
    }
    Ok(format!("{verified} ranks round-tripped"))
}

fn core_boundary_paths_agree(_: &SuiteOptions) -> Result<String> {
    let p = Params::new(3, 3)?;
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for i in 0..200 {
        let pct = rng.random_range(0..60);
        let s = random_set(&p, &mut rng, pct);
        let a = cube::boundary_by_members(&s);
        let b = cube::boundary_by_sweep(&s);
        ensure(a == b, || format!("boundary paths disagree on sample {i}"))?;
    }
    Ok("200 random sets: member and sweep boundaries identical".into())
}

fn core_dictator_boundaries(_: &SuiteOptions) -> Result<String> {
    let p = Params::new(3, 3)?;
    for k in 0..=3u32 {
        let s = constructions::dictator(&p, k)?;
        let expect = BigRational::new(BigInt::from(2).pow(k), BigInt::from(3).pow(k));
        let got = cube::vertex_boundary(&s).density();
        ensure(got == expect, || {
            format!(
                "prefix k={k}: boundary density {} != {}",
                format_rational(&got),
                format_rational(&expect)
            )
        })?;
    }
    Ok("boundary densities ((t-1)/t)^k for k=0..3".into())
}

fn core_append_one_identity(_: &SuiteOptions) -> Result<String> {
    let p = Params::new(3, 2)?;
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..50 {
        let pct = rng.random_range(0..80);
        let s = random_set(&p, &mut rng, pct);
        let lifted = cube::append_one(&s)?;
        let lifted_boundary = cube::vertex_boundary(&lifted);
        // boundary of S x {1} is (boundary of S) x {2..t}
        let base_boundary = cube::vertex_boundary(&s);
        let expect = VertexSet::from_ranks(
            *lifted.params(),
            (1..3usize).flat_map(|v| base_boundary.iter_ranks().map(move |r| r + v * 9)),
        );
        ensure(lifted_boundary == expect, || {
            "appending a pinned coordinate broke the boundary identity".into()
        })?;
    }
    Ok("50 random sets: cylinder boundary identity".into())
}

fn core_density_exact(_: &SuiteOptions) -> Result<String> {
    let p = Params::new(3, 3)?;
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..50 {
        let pct = rng.random_range(0..=100);
        let s = random_set(&p, &mut rng, pct);
        let lhs = s.density() * BigRational::from(BigInt::from(27));
        ensure(lhs == BigRational::from(BigInt::from(s.size() as u64)), || {
            "density is not exactly |S|/t^n".into()
        })?;
    }
    Ok("density numerators exact on 50 samples".into())
}

// ------------------------------------------------------------ compress

fn compress_remark_numbers(_: &SuiteOptions) -> Result<String> {
    let s = constructions::remark_counterexample();
    let b = cube::vertex_boundary(&s);
    let c1 = compress::compress(&s, 1)?;
    let b1 = cube::vertex_boundary(&c1);
    ensure(b.size() == 8, || format!("|bd S| = {}, want 8", b.size()))?;
    ensure(b1.size() == 8, || format!("|bd c1 S| = {}, want 8", b1.size()))?;
    ensure(b.difference(&s).size() == 4, || "outer boundary of S".into())?;
    ensure(b1.difference(&c1).size() == 5, || {
        "outer boundary of c1(S)".into()
    })?;
    Ok("compression kept |bd| = 8 while outer part grew 4 -> 5".into())
}

fn compress_exhaustive_laws(_: &SuiteOptions) -> Result<String> {
    let p = Params::new(3, 2)?;
    for mask in 0u32..512 {
        let s = VertexSet::from_ranks(p, (0..9).filter(|&r| mask >> r & 1 == 1));
        let before = cube::vertex_boundary(&s).size();
        let ind_before = cube::is_independent(&s);
        let sig_before = compress::sigma_sum(&s);
        for coord in 1..=2u32 {
            let c = compress::compress(&s, coord)?;
            ensure(c.size() == s.size(), || "compression changed |S|".into())?;
            ensure(
                compress::compress(&c, coord)? == c,
                || "compression is not idempotent".into(),
            )?;
            ensure(cube::vertex_boundary(&c).size() <= before, || {
                format!("boundary grew under compression of mask {mask}")
            })?;
            if ind_before {
                ensure(cube::is_independent(&c), || {
                    "compression broke independence".into()
                })?;
            }
            let changed = c != s;
            let sig_after = compress::sigma_sum(&c);
            ensure((sig_after < sig_before) == changed, || {
                "potential must drop exactly when the set moves".into()
            })?;
        }
        let fully = compress::compress_fully(&s);
        ensure(compress::is_compressed(&fully), || {
            "full compression did not reach a fixed point".into()
        })?;
    }
    Ok("all 512 subsets of [3]^2: cardinality, idempotence, boundary, independence, potential".into())
}

fn compress_projection_laws(_: &SuiteOptions) -> Result<String> {
    let p = Params::new(3, 3)?;
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    let mut fill_checked = 0usize;
    for _ in 0..120 {
        let pct = rng.random_range(0..70);
        let s = compress::compress_fully(&random_set(&p, &mut rng, pct));
        let filled = compress::fill(&s);
        ensure(
            cube::vertex_boundary(&filled) == cube::vertex_boundary(&s),
            || "fill changed the boundary of a compressed set".into(),
        )?;
        ensure(compress::is_fill_fixed(&filled), || {
            "fill output is not fill-fixed".into()
        })?;
        if compress::is_fill_fixed(&s) {
            let direct = cube::vertex_boundary(&s).density();
            let formula = compress::projected_boundary_density(&s)?;
            ensure(direct == formula, || {
                "projected boundary formula mismatch".into()
            })?;
            fill_checked += 1;
        }
    }
    Ok(format!(
        "fill laws on 120 samples; closed-form boundary on {fill_checked} fill-fixed sets"
    ))
}

fn compress_fold_laws(_: &SuiteOptions) -> Result<String> {
    let p = Params::new(3, 3)?;
    let mut rng = ChaCha8Rng::seed_from_u64(22);
    let mut effective = 0usize;
    let mut boundary_checked = 0usize;
    for _ in 0..80 {
        let pct = rng.random_range(0..70);
        let s = compress::fill(&compress::compress_fully(&random_set(&p, &mut rng, pct)));
        // the empty mask never moves anything
        let id = compress::fold(&s, compress::FoldMask::new(&p, 0)?)?;
        ensure(id == s, || "empty-mask fold moved a compressed set".into())?;
        for mask in 1u64..4 {
            let folded = compress::fold(&s, compress::FoldMask::new(&p, mask)?)?;
            ensure(folded.density() >= s.density(), || {
                "fold reduced density".into()
            })?;
            if folded != s {
                effective += 1;
            }
            // when every proper submask is already fixed, folding keeps
            // the set compressed and never grows the boundary
            let mut fixed_below = true;
            for b in 0..mask {
                if b & mask == b
                    && compress::fold(&s, compress::FoldMask::new(&p, b)?)? != s
                {
                    fixed_below = false;
                    break;
                }
            }
            if fixed_below {
                ensure(compress::is_compressed(&folded), || {
                    "fold with all proper submasks fixed must stay compressed".into()
                })?;
                ensure(
                    cube::vertex_boundary(&folded).density()
                        <= cube::vertex_boundary(&s).density(),
                    || "fold with all proper submasks fixed grew the boundary".into(),
                )?;
                boundary_checked += 1;
            }
        }
    }
    Ok(format!(
        "80 samples: density monotone ({effective} effective folds, {boundary_checked} boundary checks)"
    ))
}

fn compress_canonicalize_exhaustive(_: &SuiteOptions) -> Result<String> {
    let p = Params::new(3, 2)?;
    let j_block = 3usize; // |J| = t^{n-1}
    for mask in 0u32..512 {
        let s = VertexSet::from_ranks(p, (0..9).filter(|&r| mask >> r & 1 == 1));
        let before = cube::vertex_boundary(&s).size();
        let canon = compress::canonicalize_extremal(&s)?;
        ensure(canon.size() == s.size(), || "canonicalization changed |S|".into())?;
        ensure(cube::vertex_boundary(&canon).size() <= before, || {
            format!("canonicalization grew the boundary of mask {mask}")
        })?;
        let j = VertexSet::from_ranks(p, 0..j_block);
        ensure(canon.is_subset_of(&j) || j.is_subset_of(&canon), || {
            format!("mask {mask}: output is neither inside nor containing the slab")
        })?;
    }
    Ok("all 512 subsets of [3]^2 canonicalized: size, boundary, slab nesting".into())
}

// ------------------------------------------------------------- profile

fn profile_exact_anchors(_: &SuiteOptions) -> Result<String> {
    let cases = [
        (3u32, (5i64, 9i64), (8i64, 9i64)),
        (3, (1, 3), (2, 3)),
        (3, (5, 81), (32, 81)),
        (3, (0, 1), (0, 1)),
        (3, (1, 1), (1, 1)),
    ];
    for (t, (np, dp), (ne, de)) in cases {
        let nu = BigRational::new(np.into(), dp.into());
        let out = profile::phi(t, &nu, 64)?;
        ensure(out.exact, || format!("phi_{t}({np}/{dp}) not exact"))?;
        ensure(out.lo == BigRational::new(ne.into(), de.into()), || {
            format!("phi_{t}({np}/{dp}) = {}, want {ne}/{de}", out.lo)
        })?;
    }
    for t in 3u32..=6 {
        for k in 0..=6u32 {
            let nu = BigRational::new(One::one(), BigInt::from(t).pow(k));
            let out = profile::phi(t, &nu, 64)?;
            let expect = BigRational::new(
                BigInt::from(t - 1).pow(k),
                BigInt::from(t).pow(k),
            );
            ensure(out.exact && out.lo == expect, || {
                format!("phi_{t}(t^-{k}) != ((t-1)/t)^{k}")
            })?;
        }
    }
    Ok("closed-form anchor values exact".into())
}

fn profile_width_and_steps(_: &SuiteOptions) -> Result<String> {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    let mut max_steps = 0usize;
    for _ in 0..100 {
        let d = rng.random_range(2u64..10_000);
        let n = rng.random_range(1..d);
        let nu = BigRational::new(n.into(), d.into());
        let out = profile::phi(3, &nu, 64)?;
        if !out.exact {
            let width = out.width();
            let bound = BigRational::new(One::one(), BigInt::from(2).pow(64));
            ensure(width <= bound, || format!("width {} too wide", width))?;
        }
        max_steps = max_steps.max(out.steps);
        ensure(out.steps <= 110, || format!("{} steps > 110", out.steps))?;
    }
    Ok(format!("100 random inputs: max {max_steps} steps"))
}

fn profile_power_law_bound(_: &SuiteOptions) -> Result<String> {
    let rows = profile::profile_grid(3, 27, 40)?;
    ensure(rows.len() == 28, || "grid row count".into())?;
    Ok("grid of 28 rows passed the built-in dominance and monotonicity checks".into())
}

fn profile_concavity_claim(_: &SuiteOptions) -> Result<String> {
    let mut rng = ChaCha8Rng::seed_from_u64(32);
    for i in 0..500 {
        let t = rng.random_range(2u32..30);
        let y = BigRational::new(rng.random_range(0i64..1000).into(), 1000.into());
        let extra = BigRational::new(rng.random_range(0i64..1000).into(), 1000.into());
        let x = Real::from_rational(&(&y + extra), 96);
        let y = Real::from_rational(&y, 96);
        let holds = profile::check_claim_a1(t, &x, &y)?;
        ensure(holds, || format!("superadditivity failed on sample {i}"))?;
    }
    for t in 3u32..=200 {
        ensure(profile::check_claim_a2(t)?, || {
            format!("constant bound failed at t={t}")
        })?;
    }
    Ok("500 superadditivity samples; constant bound for t=3..200".into())
}

// -------------------------------------------------------------- oracle

fn oracle_ideal_counts(_: &SuiteOptions) -> Result<String> {
    for (t, n, expect) in [(3u32, 1u32, 4usize), (3, 2, 20), (3, 3, 980), (4, 2, 70)] {
        let p = Params::new(t, n)?;
        let e = oracle::enumerate_order_ideals(&p)?;
        ensure(e.total() == expect, || {
            format!("[{t}]^{n}: {} ideals, want {expect}", e.total())
        })?;
    }
    Ok("ideal counts 4 / 20 / 980 / 70".into())
}

fn oracle_phi_dominance(_: &SuiteOptions) -> Result<String> {
    for n in 1u32..=3 {
        let p = Params::new(3, n)?;
        let total = p.len() as u64;
        for m in 0..=total {
            let got = oracle::phi_oracle(&p, m)?;
            let nu = BigRational::new(m.into(), total.into());
            let enclosure = profile::phi(3, &nu, 64)?;
            let observed = BigRational::new(got.min_boundary.into(), total.into());
            ensure(observed >= enclosure.lo, || {
                format!("n={n} m={m}: exhaustive minimum beats the lower bound")
            })?;
        }
        for k in 0..=n {
            let m = 3u64.pow(n - k);
            let got = oracle::phi_oracle(&p, m)?;
            let expect = BigRational::new(BigInt::from(2).pow(k), BigInt::from(3).pow(k));
            let observed = BigRational::new(got.min_boundary.into(), total.into());
            ensure(observed == expect, || {
                format!("n={n} k={k}: dictator size not extremal")
            })?;
        }
    }
    Ok("exhaustive minima dominate the recursion; equality at dictator sizes (n=1..3)".into())
}

fn oracle_eta_match(_: &SuiteOptions) -> Result<String> {
    let eta3 = profile::eta(3, 128)?;
    for n in 1u32..=2 {
        let p = Params::new(3, n)?;
        let v = oracle::eta_oracle(&p, &BigRational::one())?;
        let diff = v.sub(&eta3).abs().to_f64();
        ensure(diff < 1e-9, || format!("n={n}: exponent off by {diff}"))?;
    }
    let p2 = Params::new(3, 2)?;
    let base = oracle::eta_oracle(&p2, &BigRational::one())?;
    for (num, den) in [(1i64, 2i64), (1, 4)] {
        let v = oracle::eta_oracle(&p2, &BigRational::new(num.into(), den.into()))?;
        ensure(v.sub(&base).abs().to_f64() < 1e-30, || {
            format!("eps={num}/{den} changed the exhaustive exponent")
        })?;
    }
    Ok("exhaustive exponent equals the closed form; threshold-invariant".into())
}

fn oracle_independent_enumeration(opts: &SuiteOptions) -> Result<String> {
    let p = Params::new(3, 2)?;
    let mut stream = oracle::enumerate_independent_sets(&p, 3)?;
    if let Some(limit) = opts.max_nodes {
        stream = stream.with_node_limit(limit);
    }
    let sets: Vec<VertexSet> = stream.collect::<Result<_>>()?;
    ensure(sets.len() == 6, || {
        format!("{} maximum independent sets, want 6", sets.len())
    })?;
    for s in &sets {
        ensure(cube::is_independent(s), || "non-independent yield".into())?;
        ensure(
            s.density() == BigRational::new(1.into(), 3.into()),
            || "maximum independent set is not a dictator slice".into(),
        )?;
    }
    // guard must trip when the limit is tiny
    let tripped = oracle::enumerate_independent_sets(&p, 0)?
        .with_node_limit(5)
        .any(|r| matches!(r, Err(Error::NodeGuard { .. })));
    ensure(tripped, || "node guard failed to trip at limit 5".into())?;
    Ok("6 maximum independent sets; node guard trips on demand".into())
}

// ----------------------------------------------------------- stability

fn stability_dictator_clean(_: &SuiteOptions) -> Result<String> {
    let p = Params::new(3, 2)?;
    let j = constructions::max_independent(&p, 1, 1)?;
    let r = stability::stability_report(&j)?;
    ensure(r.eps.is_zero() && r.delta.is_zero(), || {
        "dictator should have eps = delta = 0".into()
    })?;
    ensure(r.within_regime && r.bound_holds, || {
        "dictator must satisfy the bound inside the regime".into()
    })?;
    Ok("dictator report: eps = delta = 0, bound holds".into())
}

fn stability_sym_diff_identity(_: &SuiteOptions) -> Result<String> {
    let p = Params::new(3, 2)?;
    let mut checked = 0usize;
    for s in oracle::enumerate_independent_sets(&p, 0)? {
        let s = s?;
        let r = stability::stability_report(&s)?;
        let expect = &r.eps / BigRational::from(BigInt::from(3))
            + BigRational::from(BigInt::from(2)) * &r.delta;
        ensure(r.sym_diff == expect, || {
            "symmetric difference identity failed".into()
        })?;
        checked += 1;
    }
    Ok(format!(
        "mu(I xor J) = eps/t + 2 delta on all {checked} independent sets of [3]^2"
    ))
}

fn stability_end_to_end(opts: &SuiteOptions) -> Result<String> {
    let p = Params::new(3, 3)?;
    let mut stream = oracle::enumerate_independent_sets(&p, 8)?;
    if let Some(limit) = opts.max_nodes {
        stream = stream.with_node_limit(limit);
    }
    let mut inside_regime = 0usize;
    let mut total = 0usize;
    for s in stream {
        let s = s?;
        let r = stability::stability_report(&s)?;
        total += 1;
        if r.within_regime {
            inside_regime += 1;
            ensure(r.bound_holds, || {
                format!(
                    "bound failed inside the regime:\n{}",
                    crate::io::format_set(&s)
                )
            })?;
        }
        let sorted = compress::sort_labels(&s);
        if sorted.density() > BigRational::new(7.into(), 27.into()) {
            let verdicts = stability::dichotomy_check(&sorted)?;
            ensure(verdicts.iter().all(|v| v.outside_weak_band), || {
                "weak band violated".into()
            })?;
            stability::collapse_witness(&sorted)?;
        }
    }
    Ok(format!(
        "{total} independent sets with >= 8 members analyzed; bound held on all {inside_regime} in-regime sets"
    ))
}

fn stability_dichotomy_sides(_: &SuiteOptions) -> Result<String> {
    let p = Params::new(3, 3)?;
    let sorted = compress::sort_labels(&constructions::max_independent(&p, 3, 3)?);
    let verdicts = stability::dichotomy_check(&sorted)?;
    for v in &verdicts {
        let want = if v.j == 3 {
            stability::BandSide::Low
        } else {
            stability::BandSide::High
        };
        ensure(v.side == want, || format!("coordinate {} wrong side", v.j))?;
    }
    ensure(stability::collapse_witness(&sorted)? == 3, || {
        "collapse witness should be the pinned coordinate".into()
    })?;
    Ok("sorted dictator: low at its own coordinate, high elsewhere".into())
}

fn stability_regime_gates(_: &SuiteOptions) -> Result<String> {
    let p = Params::new(3, 3)?;
    let pt = constructions::phase_transition_set(&p)?;
    let gated = matches!(
        stability::dichotomy_check(&compress::sort_labels(&pt)),
        Err(Error::Regime(_))
    );
    ensure(gated, || {
        "density exactly at (3t-2)/t^3 must be out of regime".into()
    })?;
    let best = constructions::max_independent(&p, 1, 1)?;
    let amp = matches!(
        stability::amplify_check(&pt, &best),
        Err(Error::Regime(_))
    );
    ensure(amp, || "amplification must reject deviation >= 1/t^3".into())?;
    let (i4, _, _) = constructions::appendix_c_family(&Params::new(3, 4)?)?;
    let (jv, ji, _) = oracle::best_dictator(&i4);
    let jset = constructions::max_independent(&Params::new(3, 4)?, ji, jv)?;
    ensure(stability::amplify_check(&i4, &jset)?, || {
        "bound must hold for the deep family".into()
    })?;
    Ok("regime gates strict; amplification holds where applicable".into())
}

// ------------------------------------------------------- constructions

fn constructions_log_ratio(_: &SuiteOptions) -> Result<String> {
    let p = Params::new(3, 3)?;
    let eta = profile::eta(3, 128)?;
    for k in 1..=3u32 {
        let s = constructions::dictator(&p, k)?;
        let num = Real::from_rational(&s.density(), 128).ln();
        let den = Real::from_rational(&cube::vertex_boundary(&s).density(), 128).ln();
        let diff = num.div(&den).sub(&eta).abs().to_f64();
        ensure(diff < 1e-30, || format!("k={k}: log-ratio off by {diff}"))?;
    }
    Ok("log-density ratio equals the exponent for k=1..3".into())
}

fn constructions_families_validate(_: &SuiteOptions) -> Result<String> {
    let p = Params::new(3, 3)?;
    for j in 1..=3u32 {
        for i in 1..=3u32 {
            let s = constructions::max_independent(&p, i, j)?;
            ensure(cube::is_independent(&s), || "slice not independent".into())?;
        }
    }
    let pt = constructions::phase_transition_set(&p)?;
    ensure(pt.density() == BigRational::new(7.into(), 27.into()), || {
        "phase-transition density".into()
    })?;
    let (j, i, dev) = oracle::best_dictator(&pt);
    ensure(
        (j, i) == (1, 1) && dev == BigRational::new(2.into(), 27.into()),
        || "phase-transition deviation must be (t-1)/t^3".into(),
    )?;
    Ok("slices independent; phase-transition density and deviation exact".into())
}

fn constructions_appendix_grid(_: &SuiteOptions) -> Result<String> {
    for t in 3u32..=4 {
        for n in 3u32..=6 {
            let p = Params::new(t, n)?;
            // closed forms asserted inside the constructor
            let (s, eps, delta) = constructions::appendix_c_family(&p)?;
            ensure(cube::is_independent(&s), || format!("t={t} n={n}"))?;
            ensure(eps > BigRational::zero() && delta > BigRational::zero(), || {
                format!("degenerate family at t={t} n={n}")
            })?;
        }
    }
    Ok("deep family t=3..4, n=3..6: closed forms exact (asserted at build)".into())
}

fn constructions_remark(_: &SuiteOptions) -> Result<String> {
    compress_remark_numbers(&SuiteOptions::default())?;
    Ok("counterexample numbers (8, 8, 4, 5) reproduced".into())
}

// ------------------------------------------------------------ dispatch

fn checks_for(suite: &str) -> Result<Vec<Check>> {
    let core = || -> Vec<Check> {
        vec![
            Check { suite: "core", name: "rank-bijection", run: core_rank_bijection },
            Check { suite: "core", name: "boundary-paths-agree", run: core_boundary_paths_agree },
            Check { suite: "core", name: "dictator-boundaries", run: core_dictator_boundaries },
            Check { suite: "core", name: "cylinder-boundary", run: core_append_one_identity },
            Check { suite: "core", name: "density-exact", run: core_density_exact },
        ]
    };
    let compress_suite = || -> Vec<Check> {
        vec![
            Check { suite: "compress", name: "remark-numbers", run: compress_remark_numbers },
            Check { suite: "compress", name: "exhaustive-laws", run: compress_exhaustive_laws },
            Check { suite: "compress", name: "projection-laws", run: compress_projection_laws },
            Check { suite: "compress", name: "fold-laws", run: compress_fold_laws },
            Check { suite: "compress", name: "canonicalize", run: compress_canonicalize_exhaustive },
        ]
    };
    let profile_suite = || -> Vec<Check> {
        vec![
            Check { suite: "profile", name: "exact-anchors", run: profile_exact_anchors },
            Check { suite: "profile", name: "width-and-steps", run: profile_width_and_steps },
            Check { suite: "profile", name: "power-law-grid", run: profile_power_law_bound },
            Check { suite: "profile", name: "inequality-claims", run: profile_concavity_claim },
        ]
    };
    let oracle_suite = || -> Vec<Check> {
        vec![
            Check { suite: "oracle", name: "ideal-counts", run: oracle_ideal_counts },
            Check { suite: "oracle", name: "phi-dominance", run: oracle_phi_dominance },
            Check { suite: "oracle", name: "eta-match", run: oracle_eta_match },
            Check { suite: "oracle", name: "independent-enumeration", run: oracle_independent_enumeration },
        ]
    };
    let stability_suite = || -> Vec<Check> {
        vec![
            Check { suite: "stability", name: "dictator-clean", run: stability_dictator_clean },
            Check { suite: "stability", name: "sym-diff-identity", run: stability_sym_diff_identity },
            Check { suite: "stability", name: "stability-end-to-end", run: stability_end_to_end },
            Check { suite: "stability", name: "dichotomy-sides", run: stability_dichotomy_sides },
            Check { suite: "stability", name: "regime-gates", run: stability_regime_gates },
        ]
    };
    let constructions_suite = || -> Vec<Check> {
        vec![
            Check { suite: "constructions", name: "log-ratio", run: constructions_log_ratio },
            Check { suite: "constructions", name: "families-validate", run: constructions_families_validate },
            Check { suite: "constructions", name: "appendix-grid", run: constructions_appendix_grid },
            Check { suite: "constructions", name: "remark-numbers", run: constructions_remark },
        ]
    };
    Ok(match suite {
        "core" => core(),
        "compress" => compress_suite(),
        "profile" => profile_suite(),
        "oracle" => oracle_suite(),
        "stability" => stability_suite(),
        "constructions" => constructions_suite(),
        "all" => {
            let mut v = core();
            v.extend(compress_suite());
            v.extend(profile_suite());
            v.extend(oracle_suite());
            v.extend(stability_suite());
            v.extend(constructions_suite());
            v
        }
        other => {
            return Err(Error::InvalidInput(format!(
                "unknown suite '{other}'; valid: {} or all",
                SUITE_NAMES.join(", ")
            )))
        }
    })
}

/// Run a named suite. Law violations mark their check failed; capacity
/// or regime problems abort the run as errors.
pub fn run_suite(suite: &str, opts: &SuiteOptions) -> Result<Vec<CheckResult>> {
    let checks = checks_for(suite)?;
    let mut out = Vec::with_capacity(checks.len());
    for c in checks {
        match (c.run)(opts) {
            Ok(detail) => out.push(CheckResult {
                suite: c.suite,
                name: c.name,
                passed: true,
                detail,
            }),
            Err(Error::Violation(msg)) => out.push(CheckResult {
                suite: c.suite,
                name: c.name,
                passed: false,
                detail: msg,
            }),
            Err(other) => return Err(other),
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_suite_is_invalid() {
        assert!(matches!(
            run_suite("nonsense", &SuiteOptions::default()),
            Err(Error::InvalidInput(_))
        ));
    }

    #[test]
    fn quick_suites_pass() {
        for suite in ["core", "profile", "constructions"] {
            let results = run_suite(suite, &SuiteOptions::default()).unwrap();
            assert!(!results.is_empty());
            for r in &results {
                assert!(r.passed, "{}/{}: {}", r.suite, r.name, r.detail);
            }
        }
    }

    #[test]
    fn oracle_and_compress_suites_pass() {
        for suite in ["oracle", "compress"] {
            for r in run_suite(suite, &SuiteOptions::default()).unwrap() {
                assert!(r.passed, "{}/{}: {}", r.suite, r.name, r.detail);
            }
        }
    }

    #[test]
    fn stability_suite_passes() {
        for r in run_suite("stability", &SuiteOptions::default()).unwrap() {
            assert!(r.passed, "{}/{}: {}", r.suite, r.name, r.detail);
        }
    }

    #[test]
    fn tiny_node_limit_aborts_stability() {
        let opts = SuiteOptions { max_nodes: Some(3) };
        assert!(matches!(
            run_suite("stability", &opts),
            Err(Error::NodeGuard { .. })
        ));
    }
}

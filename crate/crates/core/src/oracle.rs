//! Brute-force ground truth: order-ideal enumeration, the exhaustive
//! isoperimetric minimum, the exhaustive exponent, independent-set
//! enumeration with a node guard, and the best-dictator scan.
//!
//! Minimizing boundary size over sets of a given cardinality may be
//! restricted to downward-closed sets (order ideals): compression
//! preserves cardinality and never grows the boundary, and its fixed
//! points are exactly the ideals. Ideals of `[t]^n` are enumerated as
//! weakly-decreasing stacks of ideals of `[t]^{n-1}` along coordinate n.

use crate::bits::BitVec;
use crate::cube::{self, Params, VertexSet};
use crate::error::Error;
use crate::real::Real;
use crate::Result;
use num::{BigRational, One, Zero};

/// Cap on materialized order ideals.
const IDEAL_LIMIT: usize = 2_000_000;

/// Default ceiling on visited search nodes for independent-set
/// enumeration; override with [`IndependentSets::with_node_limit`].
pub const DEFAULT_NODE_LIMIT: u64 = 1_000_000_000;

/// Largest vertex count for which the adjacency table is built.
const ADJACENCY_LIMIT: usize = 4096;

fn ideal_bitvecs(t: usize, n: u32, limit: usize) -> Result<Vec<BitVec>> {
    if n == 1 {
        return Ok((0..=t)
            .map(|k| {
                let mut b = BitVec::new(t);
                for r in 0..k {
                    b.set(r);
                }
                b
            })
            .collect());
    }
    let parents = ideal_bitvecs(t, n - 1, limit)?;
    let slice_len = parents[0].len();
    let mut out: Vec<BitVec> = Vec::new();
    // DFS over weakly-decreasing chains I_1 ⊇ I_2 ⊇ … ⊇ I_t of parent
    // ideals, candidates in parent order: lexicographic in index tuples.
    let mut chain: Vec<usize> = Vec::with_capacity(t);
    let mut cursor: Vec<usize> = vec![0];
    while let Some(&start) = cursor.last() {
        let depth = cursor.len() - 1;
        let mut found = None;
        for idx in start..parents.len() {
            let ok = match depth {
                0 => true,
                _ => parents[idx].is_subset_of(&parents[chain[depth - 1]]),
            };
            if ok {
                found = Some(idx);
                break;
            }
        }
        match found {
            None => {
                cursor.pop();
                chain.pop();
                if let Some(last) = cursor.last_mut() {
                    *last += 1;
                }
            }
            Some(idx) => {
                *cursor.last_mut().expect("nonempty") = idx;
                chain.push(idx);
                if chain.len() == t {
                    let mut bits = BitVec::new(slice_len * t);
                    for (v, &pi) in chain.iter().enumerate() {
                        for r in parents[pi].iter_ones() {
                            bits.set(v * slice_len + r);
                        }
                    }
                    out.push(bits);
                    if out.len() > limit {
                        return Err(Error::NodeGuard {
                            visited: out.len() as u64,
                            limit: limit as u64,
                        });
                    }
                    chain.pop();
                    *cursor.last_mut().expect("nonempty") += 1;
                } else {
                    cursor.push(0);
                }
            }
        }
    }
    Ok(out)
}

pub(crate) fn ideal_sets(p: &Params) -> Result<Vec<VertexSet>> {
    let bitvecs = ideal_bitvecs(p.t() as usize, p.n(), IDEAL_LIMIT)?;
    Ok(bitvecs
        .into_iter()
        .map(|b| VertexSet::from_bits(*p, b))
        .collect())
}

/// Stream of every order ideal (downward-closed set) of `[t]^n`, each
/// exactly once, in a fixed deterministic order.
pub struct IdealEnumerator {
    total: usize,
    inner: std::vec::IntoIter<VertexSet>,
}

impl IdealEnumerator {
    /// Number of ideals the stream will yield in total.
    pub fn total(&self) -> usize {
        self.total
    }
}

impl Iterator for IdealEnumerator {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        self.inner.next()
    }
}

pub fn enumerate_order_ideals(p: &Params) -> Result<IdealEnumerator> {
    let sets = ideal_sets(p)?;
    Ok(IdealEnumerator {
        total: sets.len(),
        inner: sets.into_iter(),
    })
}

/// Result of the exhaustive isoperimetric minimum.
#[derive(Clone, Debug)]
pub struct OracleResult {
    /// Minimum boundary cardinality over qualifying sets.
    pub min_boundary: u64,
    /// First minimizer in enumeration order (always downward-closed).
    pub witness: VertexSet,
    /// Number of candidate sets examined.
    pub instances_scanned: u64,
}

/// Minimum of `|∂S|` over all `S` with `|S| ≥ m`, computed exhaustively
/// over order ideals (sufficient: compression fixes cardinality and never
/// grows the boundary). `m = 0` returns 0 with the empty witness.
pub fn phi_oracle(p: &Params, m: u64) -> Result<OracleResult> {
    if m > p.len() as u64 {
        return Err(Error::InvalidInput(format!(
            "m = {m} exceeds the number of vertices {}",
            p.len()
        )));
    }
    if m == 0 {
        return Ok(OracleResult {
            min_boundary: 0,
            witness: VertexSet::empty(*p),
            instances_scanned: 0,
        });
    }
    let mut best: Option<(u64, VertexSet)> = None;
    let mut scanned = 0u64;
    for s in ideal_sets(p)? {
        scanned += 1;
        if (s.size() as u64) < m {
            continue;
        }
        let b = cube::vertex_boundary(&s).size() as u64;
        if best.as_ref().is_none_or(|(cur, _)| b < *cur) {
            best = Some((b, s));
        }
    }
    let (min_boundary, witness) = best.expect("some ideal has size >= m when m <= t^n");
    Ok(OracleResult {
        min_boundary,
        witness,
        instances_scanned: scanned,
    })
}

/// Exhaustive isoperimetric exponent: the infimum of
/// `log μ(S) / log μ(∂S)` over nonempty downward-closed `S` with
/// `μ(S) < eps` and proper boundary (`μ(∂S) < 1`; a full boundary has
/// `log μ(∂S) = 0`). Restriction to downward-closed sets loses nothing:
/// compression preserves `μ(S)` and never increases `μ(∂S)`, which can
/// only lower the ratio's denominator magnitude. Errors with an
/// empty-domain error when no set qualifies.
pub fn eta_oracle(p: &Params, eps: &BigRational) -> Result<Real> {
    if eps <= &BigRational::zero() || eps > &BigRational::one() {
        return Err(Error::InvalidInput(format!(
            "eps must lie in (0, 1], got {eps}"
        )));
    }
    let bits = 128;
    let one = BigRational::one();
    let mut best: Option<Real> = None;
    for s in ideal_sets(p)? {
        if s.is_empty() {
            continue;
        }
        let mu_s = s.density();
        if &mu_s >= eps {
            continue;
        }
        let mu_b = cube::vertex_boundary(&s).density();
        if mu_b >= one {
            continue;
        }
        let ratio = Real::from_rational(&mu_s, bits)
            .ln()
            .div(&Real::from_rational(&mu_b, bits).ln());
        if best
            .as_ref()
            .is_none_or(|b| ratio.cmp(b) == std::cmp::Ordering::Less)
        {
            best = Some(ratio);
        }
    }
    best.ok_or_else(|| {
        Error::EmptyDomain(format!(
            "no nonempty downward-closed subset of [{}]^{} has density < {eps} and proper boundary",
            p.t(),
            p.n()
        ))
    })
}

/// Stream of every independent set with at least `min_size` members, each
/// exactly once, in lexicographic order of the sorted member ranks.
/// Construction builds the adjacency table (vertex count ≤ 4096); a node
/// guard aborts runaway enumerations by yielding an error item.
pub struct IndependentSets {
    params: Params,
    adj: Vec<BitVec>,
    min_size: usize,
    node_limit: u64,
    visited: u64,
    frames: Vec<Frame>,
    chosen: Vec<usize>,
    pending_empty: bool,
    finished: bool,
}

struct Frame {
    avail: BitVec,
    cursor: usize,
}

pub fn enumerate_independent_sets(p: &Params, min_size: u64) -> Result<IndependentSets> {
    let n_vertices = p.len();
    if n_vertices > ADJACENCY_LIMIT {
        return Err(Error::Regime(format!(
            "independent-set enumeration supports at most {ADJACENCY_LIMIT} vertices, got t^n = {n_vertices}"
        )));
    }
    let adj: Vec<BitVec> = (0..n_vertices)
        .map(|r| {
            let single = VertexSet::from_ranks(*p, [r]);
            let mut b = cube::boundary_by_members(&single).into_bits();
            b.unset(r); // a vertex is never its own neighbor (loops are irrelevant here)
            b
        })
        .collect();
    let mut all = BitVec::new(n_vertices);
    all.set_all();
    Ok(IndependentSets {
        params: *p,
        adj,
        min_size: min_size as usize,
        node_limit: DEFAULT_NODE_LIMIT,
        visited: 0,
        frames: vec![Frame {
            avail: all,
            cursor: 0,
        }],
        chosen: Vec::new(),
        pending_empty: min_size == 0,
        finished: false,
    })
}

impl IndependentSets {
    /// Override the visited-node ceiling (default 10^9).
    pub fn with_node_limit(mut self, limit: u64) -> IndependentSets {
        self.node_limit = limit;
        self
    }

    /// Search nodes visited so far.
    pub fn visited(&self) -> u64 {
        self.visited
    }

    fn count_from(avail: &BitVec, from: usize) -> usize {
        avail.iter_ones().skip_while(|&r| r < from).count()
    }
}

impl Iterator for IndependentSets {
    type Item = Result<VertexSet>;

    fn next(&mut self) -> Option<Result<VertexSet>> {
        if self.finished {
            return None;
        }
        if self.pending_empty {
            self.pending_empty = false;
            return Some(Ok(VertexSet::empty(self.params)));
        }
        loop {
            let depth = self.frames.len();
            let Some(frame) = self.frames.last_mut() else {
                self.finished = true;
                return None;
            };
            // Prune: even taking every remaining candidate cannot reach
            // min_size.
            let remaining = Self::count_from(&frame.avail, frame.cursor);
            if self.chosen.len() + remaining < self.min_size {
                self.frames.pop();
                if depth > 1 {
                    self.chosen.pop();
                }
                continue;
            }
            let next_v = frame.avail.iter_ones().find(|&r| r >= frame.cursor);
            match next_v {
                None => {
                    self.frames.pop();
                    if depth > 1 {
                        self.chosen.pop();
                    }
                }
                Some(v) => {
                    frame.cursor = v + 1;
                    self.visited += 1;
                    if self.visited > self.node_limit {
                        self.finished = true;
                        return Some(Err(Error::NodeGuard {
                            visited: self.visited,
                            limit: self.node_limit,
                        }));
                    }
                    let mut child = frame.avail.clone();
                    child.subtract(&self.adj[v]);
                    for r in 0..=v {
                        child.unset(r);
                    }
                    self.chosen.push(v);
                    self.frames.push(Frame {
                        avail: child,
                        cursor: v + 1,
                    });
                    if self.chosen.len() >= self.min_size {
                        return Some(Ok(VertexSet::from_ranks(
                            self.params,
                            self.chosen.iter().copied(),
                        )));
                    }
                }
            }
        }
    }
}

/// The dictator `J_{i,j}` (coordinate j pinned to value i) minimizing
/// `μ(I ∖ J_{i,j})`, scanning all `t·n` dictators; ties resolve to the
/// smallest `j`, then the smallest `i`. Returns `(j, i, deviation)`.
pub fn best_dictator(s: &VertexSet) -> (u32, u32, BigRational) {
    let p = s.params();
    let counts = cube::slice_counts_all(s);
    let mut best: Option<(u32, u32, u64)> = None;
    for j in 1..=p.n() {
        for i in 1..=p.t() {
            let inside = counts[j as usize - 1][i as usize - 1];
            if best.is_none_or(|(_, _, cur)| inside > cur) {
                best = Some((j, i, inside));
            }
        }
    }
    let (j, i, inside) = best.expect("t, n >= 1");
    let deviation = BigRational::new(
        (s.size() as u64 - inside).into(),
        (p.len() as u64).into(),
    );
    (j, i, deviation)
}

//! Vertices, dense subsets, densities, adjacency, and vertex boundaries of
//! the tensor power `K_t^n`.
//!
//! Vertices are strings in `[t]^n` (coordinates run 1..=t); two vertices are
//! adjacent exactly when they differ in *every* coordinate. Sets are dense
//! bitmaps indexed by mixed-radix rank with coordinate 1 least significant:
//! `rank(x) = sum_i (x_i - 1) * t^(i-1)`.

use crate::bits::{cyclic_block_or, BitVec};
use crate::error::Error;
use crate::Result;
use num::BigRational;

/// Default cap on `t^n` for the dense representation (~16 MB of bits).
pub const DEFAULT_CAP: u64 = 1 << 27;

/// The pair `(t, n)` defining `K_t^n`, plus the dense-representation cap.
#[derive(Clone, Copy, Debug)]
pub struct Params {
    t: u32,
    n: u32,
    cap: u64,
    len: usize,
}

impl PartialEq for Params {
    /// Caps are operational, not part of the graph's identity.
    fn eq(&self, other: &Self) -> bool {
        self.t == other.t && self.n == other.n
    }
}

impl Eq for Params {}

impl Params {
    pub fn new(t: u32, n: u32) -> Result<Params> {
        Params::with_cap(t, n, DEFAULT_CAP)
    }

    pub fn with_cap(t: u32, n: u32, cap: u64) -> Result<Params> {
        if t < 2 {
            return Err(Error::InvalidInput(format!("t must be >= 2, got {t}")));
        }
        if n < 1 {
            return Err(Error::InvalidInput(format!("n must be >= 1, got {n}")));
        }
        let mut len: u128 = 1;
        for _ in 0..n {
            len *= t as u128;
            if len > cap as u128 {
                return Err(Error::Capacity { needed: len, cap });
            }
        }
        Ok(Params {
            t,
            n,
            cap,
            len: len as usize,
        })
    }

    pub fn t(&self) -> u32 {
        self.t
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn cap(&self) -> u64 {
        self.cap
    }

    /// Number of vertices, `t^n`.
    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// `t^(coord-1)`, the rank weight of `coord` (1-based).
    pub fn stride(&self, coord: u32) -> usize {
        debug_assert!(coord >= 1 && coord <= self.n);
        (self.t as usize).pow(coord - 1)
    }

    /// Parameters of `[t]^(n-1)` (for slices).
    pub fn parent(&self) -> Result<Params> {
        if self.n < 2 {
            return Err(Error::InvalidInput(
                "slice requires n >= 2 (a slice of [t]^1 would have no coordinates)".into(),
            ));
        }
        Params::with_cap(self.t, self.n - 1, self.cap)
    }

    /// Parameters of `[t]^(n+1)` (for append_one), cap-checked.
    pub fn extended(&self) -> Result<Params> {
        Params::with_cap(self.t, self.n + 1, self.cap)
    }
}

/// A point of `[t]^n`; `coords[k]` is coordinate `k+1`, in `1..=t`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Vertex {
    pub coords: Vec<u32>,
}

impl Vertex {
    pub fn new(coords: Vec<u32>) -> Vertex {
        Vertex { coords }
    }

    /// Number of coordinates not equal to 1.
    pub fn level(&self) -> u32 {
        self.coords.iter().filter(|&&c| c != 1).count() as u32
    }

    fn validate(&self, p: &Params) -> Result<()> {
        if self.coords.len() != p.n as usize {
            return Err(Error::InvalidInput(format!(
                "vertex has {} coordinates, expected {}",
                self.coords.len(),
                p.n
            )));
        }
        for (k, &c) in self.coords.iter().enumerate() {
            if c < 1 || c > p.t {
                return Err(Error::InvalidInput(format!(
                    "coordinate {} is {}, outside 1..={}",
                    k + 1,
                    c,
                    p.t
                )));
            }
        }
        Ok(())
    }
}

impl std::fmt::Display for Vertex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut first = true;
        for c in &self.coords {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{c}")?;
            first = false;
        }
        Ok(())
    }
}

/// Mixed-radix rank of `v`, coordinate 1 least significant.
pub fn rank(v: &Vertex, p: &Params) -> Result<usize> {
    v.validate(p)?;
    let mut r = 0usize;
    let mut w = 1usize;
    for &c in &v.coords {
        r += (c as usize - 1) * w;
        w *= p.t as usize;
    }
    Ok(r)
}

/// Inverse of [`rank`].
pub fn unrank(r: usize, p: &Params) -> Result<Vertex> {
    if r >= p.len {
        return Err(Error::InvalidInput(format!(
            "rank {r} out of range for t^n = {}",
            p.len
        )));
    }
    let mut coords = Vec::with_capacity(p.n as usize);
    let mut r = r;
    for _ in 0..p.n {
        coords.push((r % p.t as usize) as u32 + 1);
        r /= p.t as usize;
    }
    Ok(Vertex { coords })
}

/// Exact density, always a reduced rational with denominator dividing `t^n`.
pub type Density = BigRational;

/// Dense subset of the vertices of `K_t^n`.
#[derive(Clone, PartialEq, Eq)]
pub struct VertexSet {
    params: Params,
    bits: BitVec,
    size: usize,
}

impl VertexSet {
    pub fn empty(params: Params) -> VertexSet {
        VertexSet {
            bits: BitVec::new(params.len),
            params,
            size: 0,
        }
    }

    pub fn full(params: Params) -> VertexSet {
        let mut bits = BitVec::new(params.len);
        bits.set_all();
        VertexSet {
            size: params.len,
            params,
            bits,
        }
    }

    pub(crate) fn from_bits(params: Params, bits: BitVec) -> VertexSet {
        debug_assert_eq!(bits.len(), params.len);
        let size = bits.count_ones();
        VertexSet { params, bits, size }
    }

    pub fn from_ranks<I: IntoIterator<Item = usize>>(params: Params, ranks: I) -> VertexSet {
        let mut s = VertexSet::empty(params);
        for r in ranks {
            s.insert_rank(r);
        }
        s
    }

    pub fn params(&self) -> &Params {
        &self.params
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn is_empty(&self) -> bool {
        self.size == 0
    }

    pub(crate) fn into_bits(self) -> BitVec {
        self.bits
    }

    #[inline]
    pub fn contains_rank(&self, r: usize) -> bool {
        self.bits.get(r)
    }

    pub fn insert_rank(&mut self, r: usize) {
        if !self.bits.get(r) {
            self.bits.set(r);
            self.size += 1;
        }
    }

    pub fn remove_rank(&mut self, r: usize) {
        if self.bits.get(r) {
            self.bits.unset(r);
            self.size -= 1;
        }
    }

    pub fn insert(&mut self, v: &Vertex) -> Result<()> {
        let r = rank(v, &self.params)?;
        self.insert_rank(r);
        Ok(())
    }

    pub fn contains(&self, v: &Vertex) -> Result<bool> {
        Ok(self.contains_rank(rank(v, &self.params)?))
    }

    pub fn iter_ranks(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.iter_ones()
    }

    pub fn members(&self) -> Vec<Vertex> {
        self.iter_ranks()
            .map(|r| unrank(r, &self.params).expect("rank in range"))
            .collect()
    }

    /// `|S| / t^n` in lowest terms.
    pub fn density(&self) -> Density {
        BigRational::new(self.size.into(), self.params.len.into())
    }

    pub fn is_subset_of(&self, other: &VertexSet) -> bool {
        assert_eq!(self.params, other.params);
        self.bits.is_subset_of(&other.bits)
    }

    pub fn is_disjoint_from(&self, other: &VertexSet) -> bool {
        assert_eq!(self.params, other.params);
        self.bits.is_disjoint_from(&other.bits)
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        assert_eq!(self.params, other.params);
        let mut bits = self.bits.clone();
        bits.union_with(&other.bits);
        VertexSet::from_bits(self.params, bits)
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        assert_eq!(self.params, other.params);
        let mut bits = self.bits.clone();
        bits.intersect_with(&other.bits);
        VertexSet::from_bits(self.params, bits)
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        assert_eq!(self.params, other.params);
        let mut bits = self.bits.clone();
        bits.subtract(&other.bits);
        VertexSet::from_bits(self.params, bits)
    }
}

impl std::fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "VertexSet(t={}, n={}, size={}, {{",
            self.params.t, self.params.n, self.size
        )?;
        for (k, v) in self.members().iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "({v})")?;
        }
        write!(f, "}})")
    }
}

/// Inclusive vertex boundary: all vertices adjacent to some member of `S`
/// (which may include members of `S` itself).
///
/// Two strategies with identical results: a union of per-member boundary
/// boxes when `S` is small, and otherwise `n` word-parallel passes that OR
/// the set over every nonzero shift of one coordinate at a time.
pub fn vertex_boundary(s: &VertexSet) -> VertexSet {
    let p = s.params;
    let t = p.t as usize;
    let n = p.n as usize;
    // Estimated work: member path touches |S|*(t-1)^n cells, the sweep about
    // (t-1)*n*len bits via word ops. Prefer members when clearly cheaper.
    let member_cost = (s.size as u128).saturating_mul(((t - 1) as u128).saturating_pow(n as u32));
    if member_cost <= (p.len as u128) / 4 {
        boundary_by_members(s)
    } else {
        boundary_by_sweep(s)
    }
}

/// Per-member strategy: the boundary of one vertex `y` is the box of all
/// `(t-1)^n` strings differing from `y` everywhere.
pub fn boundary_by_members(s: &VertexSet) -> VertexSet {
    let p = s.params;
    let t = p.t as usize;
    let n = p.n as usize;
    let mut out = BitVec::new(p.len);
    let mut digits = vec![0usize; n]; // y's coordinates, 0-based
    for r in s.iter_ranks() {
        let mut x = r;
        for d in digits.iter_mut() {
            *d = x % t;
            x /= t;
        }
        // DFS over the product of [t] minus y's value per coordinate.
        let mut choice = vec![0usize; n]; // 0-based candidate value per level
        let mut acc = vec![0usize; n + 1]; // partial rank per level
        let mut lvl = 0usize;
        loop {
            if choice[lvl] == digits[lvl] {
                choice[lvl] += 1; // skip the equal value
            }
            if choice[lvl] >= t {
                choice[lvl] = 0;
                if lvl == 0 {
                    break;
                }
                lvl -= 1;
                choice[lvl] += 1;
                continue;
            }
            let w = p.stride(lvl as u32 + 1);
            let partial = acc[lvl] + choice[lvl] * w;
            if lvl + 1 == n {
                out.set(partial);
                choice[lvl] += 1;
            } else {
                acc[lvl + 1] = partial;
                lvl += 1;
            }
        }
    }
    VertexSet::from_bits(p, out)
}

/// Word-parallel strategy: compose per-coordinate transforms
/// `(T_i h)(x) = OR over b != x_i of h(x with coordinate i set to b)`,
/// each realized as `t-1` cyclic block-rotated ORs.
pub fn boundary_by_sweep(s: &VertexSet) -> VertexSet {
    let p = s.params;
    let t = p.t as usize;
    let mut cur = s.bits.clone();
    let mut next = BitVec::new(p.len);
    for coord in 1..=p.n {
        let stride = p.stride(coord);
        let block = stride * t;
        next.clear_all();
        for d in 1..t {
            cyclic_block_or(&mut next, &cur, block, d * stride);
        }
        std::mem::swap(&mut cur, &mut next);
    }
    VertexSet::from_bits(p, cur)
}

/// True iff no two members are adjacent; equivalently `S` and its vertex
/// boundary are disjoint.
pub fn is_independent(s: &VertexSet) -> bool {
    let p = s.params;
    if s.size <= 96 {
        // Direct pairwise check for small sets.
        let ranks: Vec<usize> = s.iter_ranks().collect();
        let t = p.t as usize;
        for (k, &a) in ranks.iter().enumerate() {
            'pair: for &b in &ranks[k + 1..] {
                let (mut x, mut y) = (a, b);
                for _ in 0..p.n {
                    if x % t == y % t {
                        continue 'pair;
                    }
                    x /= t;
                    y /= t;
                }
                return false; // a and b differ everywhere
            }
        }
        true
    } else {
        s.is_disjoint_from(&boundary_by_sweep(s))
    }
}

/// Count of coordinates of `v` not equal to 1.
pub fn level(v: &Vertex) -> u32 {
    v.level()
}

/// `{ x without coordinate `coord` : x in S, x_coord = value }` over `[t]^(n-1)`.
pub fn slice(s: &VertexSet, coord: u32, value: u32) -> Result<VertexSet> {
    let p = s.params;
    let sub = p.parent()?;
    if coord < 1 || coord > p.n {
        return Err(Error::InvalidInput(format!(
            "coordinate {coord} out of range 1..={}",
            p.n
        )));
    }
    if value < 1 || value > p.t {
        return Err(Error::InvalidInput(format!(
            "value {value} out of range 1..={}",
            p.t
        )));
    }
    let stride = p.stride(coord);
    let block = stride * p.t as usize;
    let mut out = VertexSet::empty(sub);
    for r in s.iter_ranks() {
        let lo = r % stride;
        let v = (r / stride) % p.t as usize;
        let hi = r / block;
        if v == value as usize - 1 {
            out.insert_rank(lo + hi * stride);
        }
    }
    Ok(out)
}

/// `S x {1}` over `[t]^(n+1)`. With coordinate n+1 most significant and set
/// to 1, every member keeps its rank; the universe just grows.
pub fn append_one(s: &VertexSet) -> Result<VertexSet> {
    let p = s.params.extended()?;
    let mut out = VertexSet::empty(p);
    for r in s.iter_ranks() {
        out.insert_rank(r);
    }
    Ok(out)
}

/// `counts[i-1] = |S ∩ {x : x_coord = i}|` for each value `i`.
pub fn slice_counts(s: &VertexSet, coord: u32) -> Vec<u64> {
    let p = s.params;
    let t = p.t as usize;
    let stride = p.stride(coord);
    let mut counts = vec![0u64; t];
    for r in s.iter_ranks() {
        counts[(r / stride) % t] += 1;
    }
    counts
}

/// All slice counts at once: `result[j-1][i-1] = |S ∩ {x : x_j = i}|`.
/// One pass over the members.
pub fn slice_counts_all(s: &VertexSet) -> Vec<Vec<u64>> {
    let p = s.params;
    let t = p.t as usize;
    let n = p.n as usize;
    let mut counts = vec![vec![0u64; t]; n];
    for r in s.iter_ranks() {
        let mut x = r as u64;
        for row in counts.iter_mut() {
            row[(x % t as u64) as usize] += 1;
            x /= t as u64;
        }
    }
    counts
}

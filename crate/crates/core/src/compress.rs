//! Coordinate compressions, the Σ potential, label sorting, the Boolean
//! projection Π, the fill/fold operators, and extremal canonicalization.
//!
//! Compression `c_i` repacks every line in direction `i` onto its lowest
//! values, preserving cardinality. A set fixed by every `c_i` is exactly a
//! downward-closed set (order ideal) of the product order on `[t]^n`.
//! The projection Π maps `x` to the Boolean pattern of its coordinates
//! that are ≠ 1; `fill` saturates a set to full Π-fibers, and `fold_A`
//! moves Π-points out of the top slice (bit `n` set) into the slice marked
//! by `A`, driving mass toward the block `J = [t]^{n-1} × {1}`.

use crate::bits::BitVec;
use crate::cube::{self, Params, VertexSet};
use crate::error::Error;
use crate::Result;

/// Dense subset of the Boolean cube `{0,1}^n`, indexed by bitmask.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoolCube {
    n: u32,
    bits: BitVec,
}

impl BoolCube {
    pub fn empty(n: u32) -> BoolCube {
        assert!(n <= 32, "Boolean cube dimension {n} too large");
        BoolCube {
            n,
            bits: BitVec::new(1usize << n),
        }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Number of patterns in the set.
    pub fn size(&self) -> usize {
        self.bits.count_ones()
    }

    pub fn contains(&self, z: u64) -> bool {
        self.bits.get(z as usize)
    }

    pub fn insert(&mut self, z: u64) {
        self.bits.set(z as usize);
    }

    pub fn remove(&mut self, z: u64) {
        self.bits.unset(z as usize);
    }

    pub fn iter_members(&self) -> impl Iterator<Item = u64> + '_ {
        self.bits.iter_ones().map(|z| z as u64)
    }

    /// Downward closure: every submask of a member is a member.
    pub fn is_downward_closed(&self) -> bool {
        self.iter_members().all(|z| {
            let mut rest = z;
            loop {
                if rest == 0 {
                    return true;
                }
                let bit = rest & rest.wrapping_neg();
                if !self.contains(z & !bit) {
                    return false;
                }
                rest &= rest - 1;
            }
        })
    }
}

/// Subset `A ⊆ [n−1]` of coordinates, as a bitmask (bit `i−1` for
/// coordinate `i`); coordinate `n` is excluded by construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FoldMask {
    mask: u64,
}

impl FoldMask {
    pub fn new(p: &Params, mask: u64) -> Result<FoldMask> {
        let allowed: u64 = (1u64 << (p.n() - 1)) - 1;
        if mask & !allowed != 0 {
            return Err(Error::InvalidInput(format!(
                "fold mask {mask:#b} not a subset of coordinates 1..={}",
                p.n() - 1
            )));
        }
        Ok(FoldMask { mask })
    }

    pub fn mask(&self) -> u64 {
        self.mask
    }
}

/// Which reading of the fold membership condition to use. `Literal` tests
/// `σ(z) ∈ Π(S)`, which discards mass when replacing F_A by σ(F_A); the
/// mass-preserving reading (`σ(z) ∉ Π(S)`, the default) is the one
/// consistent with the density-increase property, and is what every
/// pipeline here uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum FoldVariant {
    #[default]
    MassPreserving,
    Literal,
}

fn check_coord(p: &Params, coord: u32) -> Result<()> {
    if coord < 1 || coord > p.n() {
        return Err(Error::InvalidInput(format!(
            "coordinate {coord} out of range 1..={}",
            p.n()
        )));
    }
    Ok(())
}

/// Compression in coordinate `i`: each line in direction `i` keeps its
/// count of members but they are repacked onto the smallest values.
/// `|c_i(S)| = |S|`.
pub fn compress(s: &VertexSet, coord: u32) -> Result<VertexSet> {
    let p = *s.params();
    check_coord(&p, coord)?;
    let t = p.t() as usize;
    let stride = p.stride(coord);
    let block = stride * t;
    let mut out = VertexSet::empty(p);
    for base in (0..p.len()).step_by(block) {
        for lo in 0..stride {
            let line = base + lo;
            let mut count = 0usize;
            for v in 0..t {
                if s.contains_rank(line + v * stride) {
                    count += 1;
                }
            }
            for v in 0..count {
                out.insert_rank(line + v * stride);
            }
        }
    }
    debug_assert_eq!(out.size(), s.size());
    Ok(out)
}

/// Potential Σ(S) = sum of all coordinates over all members; strictly
/// decreases under any effective compression.
pub fn sigma_sum(s: &VertexSet) -> u64 {
    let p = s.params();
    let t = p.t() as u64;
    let n = p.n();
    let mut total = 0u64;
    for r in s.iter_ranks() {
        let mut x = r as u64;
        for _ in 0..n {
            total += x % t + 1;
            x /= t;
        }
    }
    total
}

/// Round-robin compression in coordinates 1..n until a full pass changes
/// nothing; the Σ potential strictly decreases on each effective pass, so
/// this terminates. The result is compressed (downward-closed).
pub fn compress_fully(s: &VertexSet) -> VertexSet {
    let n = s.params().n();
    let mut cur = s.clone();
    loop {
        let mut changed = false;
        for coord in 1..=n {
            let next = compress(&cur, coord).expect("coordinate in range");
            if next != cur {
                changed = true;
                cur = next;
            }
        }
        if !changed {
            return cur;
        }
    }
}

/// True iff `S` is downward-closed in the coordinatewise order;
/// equivalently, a fixed point of every `c_i`.
pub fn is_compressed(s: &VertexSet) -> bool {
    let p = s.params();
    let t = p.t() as usize;
    let n = p.n();
    for r in s.iter_ranks() {
        let mut x = r;
        let mut w = 1usize;
        for _ in 0..n {
            if x % t != 0 && !s.contains_rank(r - w) {
                return false;
            }
            x /= t;
            w *= t;
        }
    }
    true
}

/// Per-coordinate relabeling placing the heaviest slice at label 1: after
/// sorting, `|S ∩ {x_j = i}|` is non-increasing in `i` for every `j`
/// (ties keep the original label order). Cardinality and each
/// coordinate's multiset of slice counts are preserved; relabelings are
/// graph automorphisms, so independence is preserved too.
pub fn sort_labels(s: &VertexSet) -> VertexSet {
    let p = *s.params();
    let t = p.t() as usize;
    let n = p.n() as usize;
    let counts = cube::slice_counts_all(s);
    let mut perms: Vec<Vec<usize>> = Vec::with_capacity(n);
    for row in counts.iter() {
        let mut order: Vec<usize> = (0..t).collect();
        order.sort_by(|&a, &b| row[b].cmp(&row[a]).then(a.cmp(&b)));
        let mut perm = vec![0usize; t];
        for (new_v, &old_v) in order.iter().enumerate() {
            perm[old_v] = new_v;
        }
        perms.push(perm);
    }
    let mut out = VertexSet::empty(p);
    for r in s.iter_ranks() {
        let mut x = r;
        let mut new_rank = 0usize;
        let mut w = 1usize;
        for perm in perms.iter() {
            new_rank += perm[x % t] * w;
            x /= t;
            w *= t;
        }
        out.insert_rank(new_rank);
    }
    debug_assert_eq!(out.size(), s.size());
    out
}

/// Boolean projection: Π(x) has bit `i−1` set iff `x_i ≠ 1`.
pub fn pi_project(s: &VertexSet) -> BoolCube {
    let p = s.params();
    let t = p.t() as usize;
    let n = p.n();
    let mut cube = BoolCube::empty(n);
    for r in s.iter_ranks() {
        let mut x = r;
        let mut z = 0u64;
        for i in 0..n {
            if x % t != 0 {
                z |= 1 << i;
            }
            x /= t;
        }
        cube.insert(z);
    }
    cube
}

/// Π^{-1} of a pattern set: all vertices whose projection lies in `cube`.
pub fn unproject(cube: &BoolCube, p: &Params) -> VertexSet {
    assert_eq!(cube.n(), p.n());
    let t = p.t() as usize;
    let n = p.n();
    let mut bits = BitVec::new(p.len());
    for r in 0..p.len() {
        let mut x = r;
        let mut z = 0u64;
        for i in 0..n {
            if x % t != 0 {
                z |= 1 << i;
            }
            x /= t;
        }
        if cube.contains(z) {
            bits.set(r);
        }
    }
    VertexSet::from_bits(*p, bits)
}

/// Saturation to full Π-fibers: the union of Π^{-1}(z) over z ∈ Π(S).
/// Contains `S`, is idempotent, and preserves the boundary of compressed
/// sets.
pub fn fill(s: &VertexSet) -> VertexSet {
    unproject(&pi_project(s), s.params())
}

/// True iff `S` consists of full Π-fibers (`S = fill(S)`), decided by the
/// exact fiber-size count `Σ_{z∈Π(S)} (t−1)^{|z|}`.
pub fn is_fill_fixed(s: &VertexSet) -> bool {
    let t = s.params().t() as u128;
    let total: u128 = pi_project(s)
        .iter_members()
        .map(|z| (t - 1).pow(z.count_ones()))
        .sum();
    total == s.size() as u128
}

/// Boundary density of a compressed, fill-fixed set straight from its
/// projection: μ(∂S) = t^{-n} Σ_{z∈Π(S)} (t−1)^{n−|z|}. (For downward-
/// closed patterns the boundary is exactly the fibers of the complemented
/// patterns; requires t ≥ 3.)
pub fn projected_boundary_density(s: &VertexSet) -> Result<num::BigRational> {
    let p = s.params();
    if p.t() < 3 {
        return Err(Error::InvalidInput(
            "projected boundary formula requires t >= 3".into(),
        ));
    }
    if !is_compressed(s) || !is_fill_fixed(s) {
        return Err(Error::InvalidInput(
            "projected boundary formula requires a compressed, fill-fixed set".into(),
        ));
    }
    let n = p.n();
    let t = p.t();
    let total: num::BigInt = pi_project(s)
        .iter_members()
        .map(|z| num::BigInt::from(t - 1).pow(n - z.count_ones()))
        .sum();
    Ok(num::BigRational::new(total, num::BigInt::from(t).pow(n)))
}

/// Mass-preserving fold (see [`FoldVariant`] for the alternative reading).
pub fn fold(s: &VertexSet, a: FoldMask) -> Result<VertexSet> {
    fold_with(s, a, FoldVariant::MassPreserving)
}

/// Fold `S` along `A`: patterns `z` with `z_A = 0` and `z_n = 1` whose
/// image `σ_{A∪{n}}(z)` (set bits `A`, clear bit `n`) is missing are
/// replaced by their images; the result is lifted back through Π^{-1}.
/// Requires `S` compressed and fill-fixed. Density never decreases; if
/// additionally every proper submask of `A` already fixes `S`, the result
/// is compressed and its boundary does not grow.
pub fn fold_with(s: &VertexSet, a: FoldMask, variant: FoldVariant) -> Result<VertexSet> {
    let p = *s.params();
    if !is_compressed(s) {
        return Err(Error::InvalidInput("fold requires a compressed set".into()));
    }
    if !is_fill_fixed(s) {
        return Err(Error::InvalidInput(
            "fold requires a fill-fixed set (apply fill first)".into(),
        ));
    }
    let top = 1u64 << (p.n() - 1);
    let mut cube = pi_project(s);
    let moved: Vec<u64> = cube
        .iter_members()
        .filter(|&z| {
            if z & a.mask() != 0 || z & top == 0 {
                return false;
            }
            let image = (z | a.mask()) & !top;
            match variant {
                FoldVariant::MassPreserving => !cube.contains(image),
                FoldVariant::Literal => cube.contains(image),
            }
        })
        .collect();
    for z in moved {
        cube.remove(z);
        cube.insert((z | a.mask()) & !top);
    }
    Ok(unproject(&cube, &p))
}

/// The low block `J = [t]^{n-1} × {1}` (coordinate n pinned to 1); with
/// coordinate n most significant this is the contiguous rank range
/// `[0, t^{n-1})`.
fn low_block(p: &Params) -> VertexSet {
    VertexSet::from_ranks(*p, 0..p.len() / p.t() as usize)
}

/// Remove `excess` members, taking highest level first and highest rank
/// within a level; this keeps downward-closed sets downward-closed. The
/// `keep` filter restricts which members are candidates for removal.
fn trim_descending<F: Fn(usize) -> bool>(s: &mut VertexSet, target: usize, removable: F) {
    let p = *s.params();
    let mut candidates: Vec<(u32, usize)> = s
        .iter_ranks()
        .filter(|&r| removable(r))
        .map(|r| {
            (
                cube::unrank(r, &p).expect("member rank valid").level(),
                r,
            )
        })
        .collect();
    candidates.sort_unstable_by(|x, y| y.cmp(x));
    for (_, r) in candidates {
        if s.size() == target {
            break;
        }
        s.remove_rank(r);
    }
}

/// Canonicalize toward the extremal shape around `J = [t]^{n-1} × {1}`:
/// compress fully, saturate with `fill`, exhaust the folds over
/// `A ⊆ [n-1]` in inclusion (cardinality, then mask) order — restarting
/// the scan whenever a fold acts, so every applied fold sees all proper
/// submasks already fixed — and finally trim back to the input size by
/// descending level and rank. The output S′ satisfies |S′| = |S|,
/// μ(∂S′) ≤ μ(∂S), and S′ ⊆ J or J ⊆ S′. Terminates because every
/// effective fold strictly increases μ(S′ ∩ J).
pub fn canonicalize_extremal(s: &VertexSet) -> Result<VertexSet> {
    let p = *s.params();
    let target = s.size();
    let mut cur = fill(&compress_fully(s));
    let n_sub = p.n() - 1;
    'scan: loop {
        let mut masks: Vec<u64> = (0..(1u64 << n_sub)).collect();
        masks.sort_unstable_by_key(|&m| (m.count_ones(), m));
        for m in masks {
            let a = FoldMask::new(&p, m)?;
            let next = fold(&cur, a)?;
            if next != cur {
                cur = next;
                continue 'scan;
            }
        }
        break;
    }
    let j = low_block(&p);
    let j_size = j.size();
    if cur.is_subset_of(&j) {
        trim_descending(&mut cur, target, |_| true);
    } else {
        debug_assert!(j.is_subset_of(&cur), "fully folded set must contain J");
        if target <= j_size {
            cur = cur.intersection(&j);
            trim_descending(&mut cur, target, |_| true);
        } else {
            trim_descending(&mut cur, target, |r| !j.contains_rank(r));
        }
    }
    debug_assert_eq!(cur.size(), target);
    Ok(cur)
}

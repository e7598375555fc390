//! Dense bit vectors plus the unaligned and strided word operations the
//! vertex-boundary transform is built on.

/// Fixed-length bit vector backed by `u64` words, little-endian bit order:
/// bit `i` lives in word `i / 64` at position `i % 64`. Bits past `len` are
/// kept zero so whole-vector comparisons and popcounts stay meaningful.
#[derive(Clone, PartialEq, Eq)]
pub struct BitVec {
    len: usize,
    words: Vec<u64>,
}

impl BitVec {
    pub fn new(len: usize) -> Self {
        BitVec {
            len,
            words: vec![0u64; len.div_ceil(64)],
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.words[i / 64] |= 1u64 << (i % 64);
    }

    #[inline]
    pub fn unset(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.words[i / 64] &= !(1u64 << (i % 64));
    }

    #[inline]
    pub fn assign(&mut self, i: usize, v: bool) {
        if v {
            self.set(i)
        } else {
            self.unset(i)
        }
    }

    pub fn clear_all(&mut self) {
        self.words.fill(0);
    }

    pub fn set_all(&mut self) {
        self.words.fill(u64::MAX);
        self.mask_tail();
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn any(&self) -> bool {
        self.words.iter().any(|&w| w != 0)
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    pub fn words_mut(&mut self) -> &mut [u64] {
        &mut self.words
    }

    /// Zero any bits at positions >= len (restores the tail invariant after
    /// raw word-level writes).
    pub fn mask_tail(&mut self) {
        let tail = self.len % 64;
        if tail != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << tail) - 1;
            }
        }
    }

    pub fn union_with(&mut self, other: &BitVec) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &BitVec) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn subtract(&mut self, other: &BitVec) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    pub fn is_subset_of(&self, other: &BitVec) -> bool {
        debug_assert_eq!(self.len, other.len);
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint_from(&self, other: &BitVec) -> bool {
        debug_assert_eq!(self.len, other.len);
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    /// Iterate indices of set bits in increasing order.
    pub fn iter_ones(&self) -> Ones<'_> {
        Ones {
            words: &self.words,
            word_idx: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }
}

impl std::fmt::Debug for BitVec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "BitVec[{}; ", self.len)?;
        let ones: Vec<usize> = self.iter_ones().collect();
        write!(f, "{ones:?}]")
    }
}

pub struct Ones<'a> {
    words: &'a [u64],
    word_idx: usize,
    current: u64,
}

impl Iterator for Ones<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        while self.current == 0 {
            self.word_idx += 1;
            if self.word_idx >= self.words.len() {
                return None;
            }
            self.current = self.words[self.word_idx];
        }
        let bit = self.current.trailing_zeros() as usize;
        self.current &= self.current - 1;
        Some(self.word_idx * 64 + bit)
    }
}

/// `dst[dst_off .. dst_off+len) |= src[src_off .. src_off+len)`, all offsets
/// in bits. The ranges must lie inside the respective slices.
pub fn or_bits(dst: &mut [u64], dst_off: usize, src: &[u64], src_off: usize, len: usize) {
    debug_assert!(dst_off + len <= dst.len() * 64);
    debug_assert!(src_off + len <= src.len() * 64);
    let mut remaining = len;
    let mut d = dst_off;
    let mut s = src_off;
    while remaining > 0 {
        let db = d % 64;
        let chunk = (64 - db).min(remaining);
        let sw = s / 64;
        let sb = s % 64;
        let mut bits = src[sw] >> sb;
        if sb != 0 && sb + chunk > 64 {
            bits |= src[sw + 1] << (64 - sb);
        }
        let mask = if chunk == 64 {
            u64::MAX
        } else {
            (1u64 << chunk) - 1
        };
        dst[d / 64] |= (bits & mask) << db;
        d += chunk;
        s += chunk;
        remaining -= chunk;
    }
}

/// For every aligned block of `block` bits, OR into `dst` the source block
/// cyclically rotated down by `shift` bits: bit `q` of a dst block receives
/// bit `(q + shift) mod block` of the matching src block. Requires
/// `0 < shift < block` and `len` a multiple of `block`.
///
/// This is the per-coordinate step of the vertex-boundary transform: with
/// `block = t * stride` and `shift = d * stride` it ORs over the coordinate
/// values shifted by `d`.
pub fn cyclic_block_or(dst: &mut BitVec, src: &BitVec, block: usize, shift: usize) {
    assert_eq!(dst.len, src.len);
    assert!(0 < shift && shift < block);
    assert_eq!(dst.len % block, 0);
    if block <= 64 {
        cyclic_small_block(dst, src, block, shift);
    } else {
        for base in (0..dst.len).step_by(block) {
            or_bits(&mut dst.words, base, &src.words, base + shift, block - shift);
            or_bits(&mut dst.words, base + block - shift, &src.words, base, shift);
        }
    }
    dst.mask_tail();
}

/// Sub-word path: blocks repeat with period lcm(block, 64) bits, so two
/// periodic masks turn the rotation into a few shifts per word.
fn cyclic_small_block(dst: &mut BitVec, src: &BitVec, block: usize, shift: usize) {
    let unit_words = block / gcd(block, 64); // lcm(block, 64) / 64
    // m_main marks bits with block-local position < block-shift (they receive
    // src >> shift); m_wrap marks the rest (they receive src << (block-shift)).
    let mut m_main = vec![0u64; unit_words];
    let mut m_wrap = vec![0u64; unit_words];
    for j in 0..unit_words * 64 {
        if j % block < block - shift {
            m_main[j / 64] |= 1u64 << (j % 64);
        } else {
            m_wrap[j / 64] |= 1u64 << (j % 64);
        }
    }
    let back = block - shift; // in 1..=63
    let n_words = dst.words.len();
    for w in 0..n_words {
        let cur = src.words[w];
        let next = if w + 1 < n_words { src.words[w + 1] } else { 0 };
        let prev = if w > 0 { src.words[w - 1] } else { 0 };
        // 64-bit windows of src >> shift and src << back with cross-word carry.
        let r = (cur >> shift) | (next << (64 - shift));
        let l = (cur << back) | (prev >> (64 - back));
        let u = w % unit_words;
        dst.words[w] |= (r & m_main[u]) | (l & m_wrap[u]);
    }
}

fn gcd(a: usize, b: usize) -> usize {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

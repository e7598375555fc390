//! Arbitrary-precision binary floating point used for all transcendental
//! arithmetic (logs, exponentials, real powers).
//!
//! A thin wrapper over a correctly rounded multi-precision float. Every
//! operation rounds to the larger operand precision with round-to-even;
//! precision is at least [`MIN_BITS`] everywhere.

use astro_float::{BigFloat, Consts, RoundingMode, Sign};
use num::bigint::Sign as IntSign;
use num::{BigInt, BigRational};
use std::cell::RefCell;
use std::cmp::Ordering;

pub const DEFAULT_BITS: usize = 128;
pub const MIN_BITS: usize = 64;

const RM: RoundingMode = RoundingMode::ToEven;

thread_local! {
    static CONSTS: RefCell<Consts> = RefCell::new(
        Consts::new().expect("constants cache allocation"),
    );
}

/// Multi-precision real with an attached working precision in bits.
#[derive(Clone, Debug)]
pub struct Real {
    v: BigFloat,
    bits: usize,
}

fn norm_bits(bits: usize) -> usize {
    bits.max(MIN_BITS)
}

impl Real {
    pub fn bits(&self) -> usize {
        self.bits
    }

    pub fn zero(bits: usize) -> Real {
        Real {
            v: BigFloat::new(norm_bits(bits)),
            bits: norm_bits(bits),
        }
    }

    pub fn one(bits: usize) -> Real {
        Real::from_u64(1, bits)
    }

    pub fn from_u64(x: u64, bits: usize) -> Real {
        let bits = norm_bits(bits);
        Real {
            v: BigFloat::from_u64(x, bits),
            bits,
        }
    }

    /// Exact conversion (never rounds, whatever `bits` is).
    pub fn from_bigint(x: &BigInt, bits: usize) -> Real {
        let bits = norm_bits(bits);
        let (sign, mag) = x.clone().into_parts();
        if mag == 0u32.into() {
            return Real::zero(bits);
        }
        let bit_len = mag.bits() as usize;
        let word_len = bit_len.div_ceil(64);
        // Left-align the magnitude so the top bit of the top word is set,
        // then the exponent is exactly the bit length.
        let aligned = mag << (word_len * 64 - bit_len);
        let mut words = aligned.to_u64_digits();
        words.resize(word_len, 0);
        let s = match sign {
            IntSign::Minus => Sign::Neg,
            _ => Sign::Pos,
        };
        Real {
            v: BigFloat::from_words(&words, s, bit_len as i32),
            bits,
        }
    }

    /// `numer / denom`, rounded to `bits`.
    pub fn from_rational(r: &BigRational, bits: usize) -> Real {
        let bits = norm_bits(bits);
        let n = Real::from_bigint(r.numer(), bits);
        let d = Real::from_bigint(r.denom(), bits);
        n.div(&d)
    }

    /// Exact power of two `2^e`.
    pub fn pow2(e: i32, bits: usize) -> Real {
        let bits = norm_bits(bits);
        Real {
            v: BigFloat::from_words(&[1u64 << 63], Sign::Pos, e + 1),
            bits,
        }
    }

    /// Same value, new working precision for subsequent operations.
    pub fn with_bits(&self, bits: usize) -> Real {
        Real {
            v: self.v.clone(),
            bits: norm_bits(bits),
        }
    }

    fn join(&self, other: &Real) -> usize {
        self.bits.max(other.bits)
    }

    pub fn add(&self, other: &Real) -> Real {
        let p = self.join(other);
        Real {
            v: self.v.add(&other.v, p, RM),
            bits: p,
        }
    }

    pub fn sub(&self, other: &Real) -> Real {
        let p = self.join(other);
        Real {
            v: self.v.sub(&other.v, p, RM),
            bits: p,
        }
    }

    pub fn mul(&self, other: &Real) -> Real {
        let p = self.join(other);
        Real {
            v: self.v.mul(&other.v, p, RM),
            bits: p,
        }
    }

    pub fn div(&self, other: &Real) -> Real {
        let p = self.join(other);
        Real {
            v: self.v.div(&other.v, p, RM),
            bits: p,
        }
    }

    pub fn neg(&self) -> Real {
        Real {
            v: self.v.neg(),
            bits: self.bits,
        }
    }

    pub fn abs(&self) -> Real {
        Real {
            v: self.v.abs(),
            bits: self.bits,
        }
    }

    /// Natural logarithm; the argument must be strictly positive.
    pub fn ln(&self) -> Real {
        assert!(
            self.is_positive(),
            "ln domain: argument must be > 0, got {}",
            self.to_f64()
        );
        let v = CONSTS.with(|c| self.v.ln(self.bits, RM, &mut c.borrow_mut()));
        Real { v, bits: self.bits }
    }

    pub fn exp(&self) -> Real {
        let v = CONSTS.with(|c| self.v.exp(self.bits, RM, &mut c.borrow_mut()));
        Real { v, bits: self.bits }
    }

    /// Real power `self^e` for `self >= 0`; `0^e = 0` for `e > 0`.
    pub fn powr(&self, e: &Real) -> Real {
        let p = self.join(e);
        if self.is_zero() {
            assert!(
                e.is_positive(),
                "powr domain: 0^e needs e > 0, got e = {}",
                e.to_f64()
            );
            return Real::zero(p);
        }
        assert!(
            self.is_positive(),
            "powr domain: base must be >= 0, got {}",
            self.to_f64()
        );
        let v = CONSTS.with(|c| self.v.pow(&e.v, p, RM, &mut c.borrow_mut()));
        Real { v, bits: p }
    }

    pub fn is_zero(&self) -> bool {
        self.v.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.v.is_positive() && !self.v.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.v.is_negative() && !self.v.is_zero()
    }

    // An inherent `cmp` rather than `Ord`: the backing float admits NaN,
    // so a trait implementation would promise a total order the type
    // cannot honor. NaN is unreachable from this crate's constructors and
    // panics here if it ever appears.
    #[allow(clippy::should_implement_trait)]
    pub fn cmp(&self, other: &Real) -> Ordering {
        match self.v.cmp(&other.v) {
            Some(c) => c.cmp(&0),
            None => panic!("comparison with NaN"),
        }
    }

    /// Nearest f64 (for display and CSV only; comparisons use [`Real::cmp`]).
    pub fn to_f64(&self) -> f64 {
        if self.v.is_zero() {
            return 0.0;
        }
        if self.v.is_inf_pos() {
            return f64::INFINITY;
        }
        if self.v.is_inf_neg() {
            return f64::NEG_INFINITY;
        }
        if self.v.is_nan() {
            return f64::NAN;
        }
        let s = format!("{}", self.v);
        s.parse::<f64>()
            .unwrap_or_else(|_| panic!("unparseable float repr `{s}`"))
    }
}

impl std::fmt::Display for Real {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.to_f64())
    }
}

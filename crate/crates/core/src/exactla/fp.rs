use crate::error::arg;
use crate::Result;

/// The prime field `F_p`. Primes are capped so that four products `(p-1)^2` plus a
/// residue fit in a `u32` accumulator, which the elimination kernels rely on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Fp {
    p: u32,
    // floor(2^32 / p), for division-free reduction of whole slices
    barrett: u64,
}

impl Fp {
    pub const MAX_PRIME: u32 = 32749;

    pub fn new(p: u32) -> Result<Self> {
        if !(2..=Self::MAX_PRIME).contains(&p) {
            return arg(format!("prime {p} outside the supported range 2..={}", Self::MAX_PRIME));
        }
        if (2..).take_while(|d| d * d <= p).any(|d| p.is_multiple_of(d)) {
            return arg(format!("{p} is not prime"));
        }
        Ok(Fp { p, barrett: (1u64 << 32) / p as u64 })
    }

    #[inline]
    pub fn p(self) -> u32 {
        self.p
    }

    #[inline]
    pub fn from_i64(self, x: i64) -> u32 {
        x.rem_euclid(self.p as i64) as u32
    }

    #[inline]
    pub fn from_i128(self, x: i128) -> u32 {
        x.rem_euclid(self.p as i128) as u32
    }

    /// Symmetric representative in `(-p/2, p/2]`.
    #[inline]
    pub fn signed(self, x: u32) -> i64 {
        let x = x as i64;
        let p = self.p as i64;
        if x > p / 2 {
            x - p
        } else {
            x
        }
    }

    #[inline]
    pub fn add(self, a: u32, b: u32) -> u32 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(self, a: u32, b: u32) -> u32 {
        a * b % self.p
    }

    pub fn pow(self, mut a: u32, mut e: u32) -> u32 {
        let mut r = 1 % self.p;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        r
    }

    /// Inverse of a nonzero residue.
    #[inline]
    pub fn inv(self, a: u32) -> u32 {
        debug_assert!(!a.is_multiple_of(self.p));
        self.pow(a, self.p - 2)
    }

    /// Reduce every entry of `xs` mod p. The quotient estimate `x·floor(2^32/p) >> 32`
    /// is short by at most 2, fixed by two conditional subtractions; this vectorizes.
    #[inline]
    pub fn reduce_slice(self, xs: &mut [u32]) {
        let (p, m) = (self.p, self.barrett);
        for x in xs.iter_mut() {
            let q = ((*x as u64 * m) >> 32) as u32;
            let mut r = *x - q * p;
            if r >= p {
                r -= p;
            }
            if r >= p {
                r -= p;
            }
            *x = r;
        }
    }

    /// How many products `(p-1)^2` can be added to a residue before a `u32` overflows.
    pub(crate) fn lazy_bound(self) -> usize {
        let sq = (self.p as u64 - 1).pow(2).max(1);
        ((u32::MAX as u64 - self.p as u64) / sq) as usize
    }
}

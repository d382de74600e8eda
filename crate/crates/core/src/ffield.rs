//! Prime field arithmetic and quadratic residues.
//!
//! Values are stored as canonical representatives in `[0, p)` with `p < 2^31`,
//! so every product fits in a `u64` before reduction.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Upper bound (exclusive) on the characteristic.
pub const MAX_P: u64 = 1 << 31;

/// Below this characteristic square roots are found by scanning.
const EXHAUSTIVE_SQRT_LIMIT: u64 = 1000;

/// The field `F_q`, `q = p^f`. Only the prime subfield is ever materialized;
/// `f` matters for squareness decisions and block bookkeeping.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FieldSpec {
    p: u64,
    f: u32,
}

impl FieldSpec {
    pub fn new(p: u64, f: u32) -> Result<Self> {
        if f == 0 {
            return Err(Error::InvalidField("extension degree must be at least 1".into()));
        }
        if p == 2 {
            return Err(Error::InvalidField("characteristic 2 is not supported".into()));
        }
        if p >= MAX_P {
            return Err(Error::InvalidField(format!("p = {p} does not fit below 2^31")));
        }
        if !is_prime(p) {
            return Err(Error::InvalidField(format!("{p} is not prime")));
        }
        Ok(FieldSpec { p, f })
    }

    /// Shorthand for the prime field `F_p`.
    pub fn prime(p: u64) -> Result<Self> {
        Self::new(p, 1)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn f(&self) -> u32 {
        self.f
    }

    /// `q = p^f`, saturating on overflow.
    pub fn q(&self) -> u128 {
        (self.p as u128).saturating_pow(self.f)
    }

    /// Fails unless `p > n`, the semisimplicity condition for `S_n` and `A_n`.
    pub fn require_above(&self, n: usize) -> Result<()> {
        if self.p as usize > n {
            Ok(())
        } else {
            Err(Error::UnsupportedCharacteristic { p: self.p, n })
        }
    }

    pub fn element(&self, value: i64) -> Fp {
        Fp::new(value, self.p)
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.f == 1 {
            write!(f, "F_{}", self.p)
        } else {
            write!(f, "F_{}^{}", self.p, self.f)
        }
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FpOp {
    Add,
    Sub,
    Mul,
}

/// An element of `F_p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fp {
    value: u64,
    p: u64,
}

impl Fp {
    /// Reduces any integer (negative included) into `[0, p)`.
    pub fn new(value: i64, p: u64) -> Self {
        Fp { value: reduce(value, p), p }
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    pub fn apply(self, op: FpOp, rhs: Fp) -> Result<Fp> {
        if self.p != rhs.p {
            return Err(Error::ModulusMismatch(self.p, rhs.p));
        }
        let p = self.p;
        let value = match op {
            FpOp::Add => add_mod(self.value, rhs.value, p),
            FpOp::Sub => sub_mod(self.value, rhs.value, p),
            FpOp::Mul => mul_mod(self.value, rhs.value, p),
        };
        Ok(Fp { value, p })
    }

    pub fn inv(self) -> Result<Fp> {
        Ok(Fp { value: inv_mod(self.value, self.p)?, p: self.p })
    }

    pub fn pow(self, e: u64) -> Fp {
        Fp { value: pow_mod(self.value, e, self.p), p: self.p }
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

macro_rules! fp_binop {
    ($tr:ident, $method:ident, $op:expr) => {
        impl $tr for Fp {
            type Output = Fp;

            /// Panics when the moduli differ; use [`Fp::apply`] for a checked form.
            fn $method(self, rhs: Fp) -> Fp {
                self.apply($op, rhs).expect("Fp operands over different primes")
            }
        }
    };
}

fp_binop!(Add, add, FpOp::Add);
fp_binop!(Sub, sub, FpOp::Sub);
fp_binop!(Mul, mul, FpOp::Mul);

impl Neg for Fp {
    type Output = Fp;

    fn neg(self) -> Fp {
        Fp { value: sub_mod(0, self.value, self.p), p: self.p }
    }
}

pub fn reduce(value: i64, p: u64) -> u64 {
    value.rem_euclid(p as i64) as u64
}

#[inline]
pub fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

#[inline]
pub fn sub_mod(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

#[inline]
pub fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    a * b % p
}

pub fn pow_mod(mut base: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        e >>= 1;
    }
    acc
}

/// Inverse by the extended Euclidean algorithm.
pub fn inv_mod(a: u64, p: u64) -> Result<u64> {
    let a = a % p;
    if a == 0 {
        return Err(Error::DivisionByZero(p));
    }
    let (mut r0, mut r1) = (p as i64, a as i64);
    let (mut t0, mut t1) = (0i64, 1i64);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    debug_assert_eq!(r0, 1);
    Ok(reduce(t0, p))
}

/// Whether `a` (already reduced mod p) is a square in `F_{p^f}`.
///
/// For even `f` the prime field sits inside the squares of `F_{p^f}`, since
/// `(p^f - 1) / (p - 1)` is even.
pub fn is_square(a: u64, spec: &FieldSpec) -> bool {
    let p = spec.p();
    let a = a % p;
    if a == 0 || spec.f().is_multiple_of(2) {
        return true;
    }
    pow_mod(a, (p - 1) / 2, p) == 1
}

/// The smaller of the two square roots of `a` modulo `p`.
pub fn sqrt_mod_p(a: u64, p: u64) -> Result<u64> {
    let a = a % p;
    if a == 0 {
        return Ok(0);
    }
    if pow_mod(a, (p - 1) / 2, p) != 1 {
        return Err(Error::NonResidue { value: a, p });
    }
    let root = if p < EXHAUSTIVE_SQRT_LIMIT {
        (1..p).find(|&r| mul_mod(r, r, p) == a).expect("residue has a root")
    } else {
        tonelli_shanks(a, p)
    };
    Ok(root.min(p - root))
}

/// Tonelli–Shanks for an odd prime `p` and a nonzero residue `a`.
fn tonelli_shanks(a: u64, p: u64) -> u64 {
    let mut q = p - 1;
    let mut s = 0u32;
    while q.is_multiple_of(2) {
        q /= 2;
        s += 1;
    }
    let z = (2..p).find(|&z| pow_mod(z, (p - 1) / 2, p) == p - 1).expect("odd prime has a non-residue");
    let mut m = s;
    let mut c = pow_mod(z, q, p);
    let mut t = pow_mod(a, q, p);
    let mut r = pow_mod(a, q.div_ceil(2), p);
    while t != 1 {
        let mut i = 0;
        let mut tt = t;
        while tt != 1 {
            tt = mul_mod(tt, tt, p);
            i += 1;
        }
        let b = pow_mod(c, 1 << (m - i - 1), p);
        m = i;
        c = mul_mod(b, b, p);
        t = mul_mod(t, c, p);
        r = mul_mod(r, b, p);
    }
    r
}

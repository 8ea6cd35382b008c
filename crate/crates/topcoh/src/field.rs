//! Coefficient fields: the rationals with arbitrary-precision arithmetic and
//! prime fields `F_p` with word-sized modular arithmetic (`p < 2^63`).

use crate::error::{Error, Result};
use num::{BigInt, BigRational, One, Signed, Zero};
use std::fmt;

/// Which coefficient field a computation context works over.
///
/// `characteristic == 0` means the rationals; otherwise it is a prime `p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FieldSpec {
    characteristic: u64,
}

impl FieldSpec {
    pub fn rationals() -> Self {
        FieldSpec { characteristic: 0 }
    }

    pub fn prime_field(p: u64) -> Result<Self> {
        if p >= (1u64 << 63) || !is_prime_u64(p) {
            return Err(Error::InvalidCharacteristic(p));
        }
        Ok(FieldSpec { characteristic: p })
    }

    pub fn characteristic(&self) -> u64 {
        self.characteristic
    }

    pub fn is_rationals(&self) -> bool {
        self.characteristic == 0
    }

    pub fn zero(&self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        if self.is_rationals() {
            Scalar::Rat(BigRational::from(BigInt::from(n)))
        } else {
            let p = self.characteristic;
            let r = n.rem_euclid(p as i64) as u64;
            Scalar::Fp { val: r % p, modulus: p }
        }
    }

    pub fn from_fraction(&self, num: i64, den: i64) -> Result<Scalar> {
        if den == 0 {
            return Err(Error::Other("zero denominator".into()));
        }
        if self.is_rationals() {
            Ok(Scalar::Rat(BigRational::new(BigInt::from(num), BigInt::from(den))))
        } else {
            let d = self.from_i64(den);
            if d.is_zero() {
                return Err(Error::Other(format!(
                    "denominator {den} vanishes in characteristic {}",
                    self.characteristic
                )));
            }
            Ok(self.from_i64(num).div(&d))
        }
    }
}

/// An exact field element. `Fp` values are always reduced to `0..p`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rat(BigRational),
    Fp { val: u64, modulus: u64 },
}

impl Scalar {
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_zero(),
            Scalar::Fp { val, .. } => *val == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_one(),
            Scalar::Fp { val, .. } => *val == 1,
        }
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a + b),
            (Scalar::Fp { val: a, modulus: p }, Scalar::Fp { val: b, modulus: q }) => {
                debug_assert_eq!(p, q);
                let s = a.wrapping_add(*b);
                let s = if s >= *p || s < *a { s.wrapping_sub(*p) } else { s };
                Scalar::Fp { val: s, modulus: *p }
            }
            _ => panic!("mixed-field scalar arithmetic"),
        }
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rat(a) => Scalar::Rat(-a),
            Scalar::Fp { val, modulus } => Scalar::Fp {
                val: if *val == 0 { 0 } else { modulus - val },
                modulus: *modulus,
            },
        }
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a * b),
            (Scalar::Fp { val: a, modulus: p }, Scalar::Fp { val: b, modulus: q }) => {
                debug_assert_eq!(p, q);
                Scalar::Fp {
                    val: ((*a as u128 * *b as u128) % *p as u128) as u64,
                    modulus: *p,
                }
            }
            _ => panic!("mixed-field scalar arithmetic"),
        }
    }

    /// Multiplicative inverse. Panics on zero (callers guard).
    pub fn inv(&self) -> Scalar {
        match self {
            Scalar::Rat(a) => {
                assert!(!a.is_zero(), "inverse of zero");
                Scalar::Rat(a.recip())
            }
            Scalar::Fp { val, modulus } => {
                assert!(*val != 0, "inverse of zero");
                Scalar::Fp { val: mod_inv(*val, *modulus), modulus: *modulus }
            }
        }
    }

    pub fn div(&self, other: &Scalar) -> Scalar {
        self.mul(&other.inv())
    }

    /// True when the scalar is an integer (always in `F_p`).
    pub fn is_integral(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.denom().is_one(),
            Scalar::Fp { .. } => true,
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Fp { val, .. } => write!(f, "{val}"),
        }
    }
}

pub(crate) fn scalar_is_negative(s: &Scalar) -> bool {
    match s {
        Scalar::Rat(r) => r.is_negative(),
        Scalar::Fp { .. } => false,
    }
}

fn mod_inv(a: u64, p: u64) -> u64 {
    // extended Euclid on signed 128-bit, p < 2^63
    let (mut t, mut new_t): (i128, i128) = (0, 1);
    let (mut r, mut new_r): (i128, i128) = (p as i128, a as i128);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    debug_assert_eq!(r, 1, "inverse of non-unit mod p");
    (t.rem_euclid(p as i128)) as u64
}

/// Deterministic Miller-Rabin for u64.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a % n, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = ((x as u128 * x as u128) % n as u128) as u64;
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = ((acc as u128 * b as u128) % m as u128) as u64;
        }
        b = ((b as u128 * b as u128) % m as u128) as u64;
        e >>= 1;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_validation() {
        assert!(FieldSpec::prime_field(101).is_ok());
        assert!(FieldSpec::prime_field(2).is_ok());
        assert!(FieldSpec::prime_field(6).is_err());
        assert!(FieldSpec::prime_field(1).is_err());
        assert!(FieldSpec::prime_field(0).is_err());
        assert!(FieldSpec::prime_field(1u64 << 63).is_err());
    }

    #[test]
    fn fp_arithmetic() {
        let f = FieldSpec::prime_field(101).unwrap();
        let a = f.from_i64(77);
        let b = f.from_i64(50);
        assert_eq!(a.add(&b), f.from_i64(26)); // 127 mod 101
        assert_eq!(a.mul(&b), f.from_i64((77 * 50) % 101));
        assert!(a.mul(&a.inv()).is_one());
        assert_eq!(f.from_i64(-1), f.from_i64(100));
    }

    #[test]
    fn char_two_cancels() {
        let f = FieldSpec::prime_field(2).unwrap();
        assert!(f.one().add(&f.one()).is_zero());
    }

    #[test]
    fn rational_arithmetic_is_exact() {
        let f = FieldSpec::rationals();
        let third = f.from_fraction(1, 3).unwrap();
        let sum = third.add(&third).add(&third);
        assert!(sum.is_one());
    }

    #[test]
    fn large_prime_accepted() {
        // 2^61 - 1 is prime
        assert!(FieldSpec::prime_field((1u64 << 61) - 1).is_ok());
    }
}

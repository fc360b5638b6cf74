//! Scalar commutative quaternions `q = t + ix + jy + kz`.
//!
//! The basis obeys `i² = k² = -1`, `j² = 1`, `ij = ji = k`, `jk = kj = i`
//! and `ki = ik = -j`, so multiplication is commutative but the algebra
//! has zero divisors such as `1 + j`.
//!
//! Every element splits as `q = c1 + j c2` with complex `c1 = t + ix` and
//! `c2 = y + iz`. In the idempotent coordinates `p = c1 + c2`,
//! `m = c1 - c2` the product is componentwise, which is what the inverse
//! and the zero-divisor test are built on.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Relative threshold on `min(|p|, |m|)` below which a quaternion is
/// treated as non-invertible.
pub const ZERO_DIVISOR_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct CQuat {
    pub t: f64,
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

/// `q = c1 + j c2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CplxPair {
    pub c1: Complex64,
    pub c2: Complex64,
}

/// `p = c1 + c2`, `m = c1 - c2`. Multiplication is componentwise here.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IdempotentPair {
    pub p: Complex64,
    pub m: Complex64,
}

/// One of the three principal conjugations.
///
/// `First` flips the signs of `x` and `z`, `Second` flips `y` and `z`,
/// `Third` flips `x` and `y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Conjugation {
    First,
    Second,
    Third,
}

impl Conjugation {
    pub const ALL: [Conjugation; 3] = [Conjugation::First, Conjugation::Second, Conjugation::Third];

    pub fn index(self) -> u8 {
        match self {
            Conjugation::First => 1,
            Conjugation::Second => 2,
            Conjugation::Third => 3,
        }
    }

    /// Applying `self` then `other`. `None` means the identity map.
    pub fn then(self, other: Conjugation) -> Option<Conjugation> {
        if self == other {
            return None;
        }
        Conjugation::ALL
            .into_iter()
            .find(|&c| c != self && c != other)
    }
}

impl TryFrom<u8> for Conjugation {
    type Error = Error;

    fn try_from(i: u8) -> Result<Self> {
        match i {
            1 => Ok(Conjugation::First),
            2 => Ok(Conjugation::Second),
            3 => Ok(Conjugation::Third),
            other => Err(Error::InvalidConjugation(other)),
        }
    }
}

impl fmt::Display for Conjugation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.index())
    }
}

impl CQuat {
    pub const ZERO: CQuat = CQuat::new(0.0, 0.0, 0.0, 0.0);
    pub const ONE: CQuat = CQuat::new(1.0, 0.0, 0.0, 0.0);
    pub const I: CQuat = CQuat::new(0.0, 1.0, 0.0, 0.0);
    pub const J: CQuat = CQuat::new(0.0, 0.0, 1.0, 0.0);
    pub const K: CQuat = CQuat::new(0.0, 0.0, 0.0, 1.0);

    /// Builds from components without validation; see [`CQuat::try_new`].
    pub const fn new(t: f64, x: f64, y: f64, z: f64) -> Self {
        CQuat { t, x, y, z }
    }

    pub fn try_new(t: f64, x: f64, y: f64, z: f64) -> Result<Self> {
        let q = CQuat::new(t, x, y, z);
        if q.is_finite() {
            Ok(q)
        } else {
            Err(Error::NonFinite)
        }
    }

    pub fn from_array(a: [f64; 4]) -> Self {
        CQuat::new(a[0], a[1], a[2], a[3])
    }

    pub fn to_array(self) -> [f64; 4] {
        [self.t, self.x, self.y, self.z]
    }

    pub const fn from_real(t: f64) -> Self {
        CQuat::new(t, 0.0, 0.0, 0.0)
    }

    /// Embeds a complex number as `re + i im`.
    pub fn from_complex(c: Complex64) -> Self {
        CQuat::new(c.re, c.im, 0.0, 0.0)
    }

    pub fn is_finite(self) -> bool {
        self.to_array().iter().all(|v| v.is_finite())
    }

    pub fn is_zero(self) -> bool {
        self == CQuat::ZERO || self.to_array().iter().all(|&v| v == 0.0)
    }

    /// Largest absolute component.
    pub fn magnitude(self) -> f64 {
        self.to_array().iter().fold(0.0, |acc, v| acc.max(v.abs()))
    }

    pub fn scale(self, s: f64) -> Self {
        CQuat::new(s * self.t, s * self.x, s * self.y, s * self.z)
    }

    pub fn conj(self, c: Conjugation) -> Self {
        let CQuat { t, x, y, z } = self;
        match c {
            Conjugation::First => CQuat::new(t, -x, y, -z),
            Conjugation::Second => CQuat::new(t, x, -y, -z),
            Conjugation::Third => CQuat::new(t, -x, -y, z),
        }
    }

    /// `‖q‖⁴ = |[(t+y)² + (x+z)²]·[(t−y)² + (x−z)²]|`.
    pub fn norm4(self) -> f64 {
        let CQuat { t, x, y, z } = self;
        let plus = (t + y).powi(2) + (x + z).powi(2);
        let minus = (t - y).powi(2) + (x - z).powi(2);
        (plus * minus).abs()
    }

    fn singular_indicator(self) -> f64 {
        let ip = self.to_idempotent();
        ip.p.norm().min(ip.m.norm())
    }

    fn singular_threshold(self) -> f64 {
        ZERO_DIVISOR_TOL * self.magnitude().max(1.0)
    }

    pub fn is_invertible(self) -> bool {
        self.singular_indicator() > self.singular_threshold()
    }

    /// Nonzero and annihilated by some nonzero element. Zero is not a zero
    /// divisor under this convention.
    pub fn is_zero_divisor(self) -> bool {
        !self.is_zero() && !self.is_invertible()
    }

    /// Multiplicative inverse, computed as `(1/p, 1/m)` in idempotent
    /// coordinates.
    pub fn inverse(self) -> Result<Self> {
        if !self.is_invertible() {
            return Err(Error::NotInvertible {
                magnitude: self.norm4(),
            });
        }
        let ip = self.to_idempotent();
        Ok(CQuat::from_idempotent(IdempotentPair {
            p: ip.p.inv(),
            m: ip.m.inv(),
        }))
    }

    pub fn decompose(self) -> CplxPair {
        CplxPair {
            c1: Complex64::new(self.t, self.x),
            c2: Complex64::new(self.y, self.z),
        }
    }

    pub fn recompose(pair: CplxPair) -> Self {
        CQuat::new(pair.c1.re, pair.c1.im, pair.c2.re, pair.c2.im)
    }

    pub fn to_idempotent(self) -> IdempotentPair {
        let CplxPair { c1, c2 } = self.decompose();
        IdempotentPair {
            p: c1 + c2,
            m: c1 - c2,
        }
    }

    pub fn from_idempotent(ip: IdempotentPair) -> Self {
        CQuat::recompose(CplxPair {
            c1: (ip.p + ip.m) * 0.5,
            c2: (ip.p - ip.m) * 0.5,
        })
    }
}

impl From<f64> for CQuat {
    fn from(t: f64) -> Self {
        CQuat::from_real(t)
    }
}

impl From<Complex64> for CQuat {
    fn from(c: Complex64) -> Self {
        CQuat::from_complex(c)
    }
}

impl From<CplxPair> for CQuat {
    fn from(p: CplxPair) -> Self {
        CQuat::recompose(p)
    }
}

impl From<IdempotentPair> for CQuat {
    fn from(p: IdempotentPair) -> Self {
        CQuat::from_idempotent(p)
    }
}

impl Add for CQuat {
    type Output = CQuat;

    fn add(self, o: CQuat) -> CQuat {
        CQuat::new(self.t + o.t, self.x + o.x, self.y + o.y, self.z + o.z)
    }
}

impl AddAssign for CQuat {
    fn add_assign(&mut self, o: CQuat) {
        *self = *self + o;
    }
}

impl Sub for CQuat {
    type Output = CQuat;

    fn sub(self, o: CQuat) -> CQuat {
        CQuat::new(self.t - o.t, self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

impl Neg for CQuat {
    type Output = CQuat;

    fn neg(self) -> CQuat {
        CQuat::new(-self.t, -self.x, -self.y, -self.z)
    }
}

impl Mul for CQuat {
    type Output = CQuat;

    fn mul(self, o: CQuat) -> CQuat {
        let CQuat { t, x, y, z } = self;
        let CQuat {
            t: t1,
            x: x1,
            y: y1,
            z: z1,
        } = o;
        // Terms are grouped in swap-symmetric pairs so that q*q1 and q1*q
        // round identically.
        CQuat::new(
            (t * t1 - x * x1) + (y * y1 - z * z1),
            (x * t1 + t * x1) + (z * y1 + y * z1),
            (t * y1 + y * t1) - (x * z1 + z * x1),
            (z * t1 + t * z1) + (x * y1 + y * x1),
        )
    }
}

impl Mul<f64> for CQuat {
    type Output = CQuat;

    fn mul(self, s: f64) -> CQuat {
        self.scale(s)
    }
}

impl Mul<CQuat> for f64 {
    type Output = CQuat;

    fn mul(self, q: CQuat) -> CQuat {
        q.scale(self)
    }
}

impl std::iter::Sum for CQuat {
    fn sum<I: Iterator<Item = CQuat>>(iter: I) -> CQuat {
        iter.fold(CQuat::ZERO, Add::add)
    }
}

impl fmt::Display for CQuat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}i + {}j + {}k", self.t, self.x, self.y, self.z)
    }
}

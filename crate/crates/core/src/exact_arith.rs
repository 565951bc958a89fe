//! Exact arithmetic on the circle `R/Z` and the torus `T^2`.
//!
//! Circle values live in `Q + Z*theta` with `theta = (sqrt(5) - 1) / 2`, so
//! every identity the groupoid code checks is decided by exact equality.
//! The circle is written additively: multiplication `z*w` in `T` becomes
//! [`Angle`] addition and conjugation becomes negation.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Approximation of `theta` used only to seed exact floor searches.
const THETA_F64: f64 = 0.618_033_988_749_894_9;

/// An arbitrary-precision rational in lowest terms with positive denominator.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Rational(BigRational);

impl Rational {
    /// Panics if `den` is zero.
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Self {
        Rational(BigRational::new(num.into(), den.into()))
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn floor(&self) -> BigInt {
        self.0.floor().to_integer()
    }

    /// The representative of `self mod 1` in `[0, 1)`.
    pub fn fract_unit(&self) -> Rational {
        let floor = self.0.floor();
        Rational(&self.0 - floor)
    }

    pub fn abs(&self) -> Rational {
        Rational(self.0.abs())
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    pub fn mul_int(&self, k: i64) -> Rational {
        Rational(&self.0 * BigInt::from(k))
    }

    fn square(&self) -> Rational {
        Rational(&self.0 * &self.0)
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_integer(n)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

macro_rules! rational_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational($trait::$method(&self.0, &rhs.0))
            }
        }
        impl $trait<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational($trait::$method(self.0, rhs.0))
            }
        }
        impl $trait<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational($trait::$method(self.0, &rhs.0))
            }
        }
    };
}

rational_binop!(Add, add);
rational_binop!(Sub, sub);
rational_binop!(Mul, mul);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

/// Exact sign of `u + v*sqrt(5)`.
fn sign_with_sqrt5(u: &Rational, v: &Rational) -> Ordering {
    let su = u.0.cmp(&BigRational::zero());
    let sv = v.0.cmp(&BigRational::zero());
    match (su, sv) {
        (_, Ordering::Equal) => su,
        (Ordering::Equal, _) => sv,
        (a, b) if a == b => a,
        (Ordering::Greater, _) => u.square().cmp(&v.square().mul_int(5)),
        _ => v.square().mul_int(5).cmp(&u.square()),
    }
}

/// Exact sign of the real number `a + m*theta`.
pub fn sign_of(a: &Rational, m: i64) -> Ordering {
    // a + m(sqrt5 - 1)/2 = (a - m/2) + (m/2) sqrt5
    let half_m = Rational::new(m, 2);
    sign_with_sqrt5(&(a - &half_m), &half_m)
}

/// Exact floor of the real number `a + m*theta`.
pub fn floor_of(a: &Rational, m: i64) -> BigInt {
    let estimate = a.to_f64() + (m as f64) * THETA_F64;
    let mut k = if estimate.is_finite() {
        BigInt::from(estimate.floor() as i64)
    } else {
        a.floor()
    };
    while sign_of(&(a - &Rational::from_integer(k.clone())), m) == Ordering::Less {
        k -= 1;
    }
    loop {
        let next: BigInt = &k + 1;
        if sign_of(&(a - &Rational::from_integer(next.clone())), m) == Ordering::Less {
            break;
        }
        k = next;
    }
    k
}

/// A point of the circle `R/Z`, denoting `q + m*theta mod 1`.
///
/// Only `q` is ever reduced mod 1; the `theta`-coefficient is kept whole so
/// that equality is exact (`theta` is irrational).
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Angle {
    q: Rational,
    m: i64,
}

impl Angle {
    pub fn new(q: Rational, m: i64) -> Self {
        Angle {
            q: q.fract_unit(),
            m,
        }
    }

    pub fn zero() -> Self {
        Angle::default()
    }

    pub fn rational(q: Rational) -> Self {
        Angle::new(q, 0)
    }

    /// `num/den` as a purely rational angle.
    pub fn frac(num: i64, den: i64) -> Self {
        Angle::new(Rational::new(num, den), 0)
    }

    pub fn theta_multiple(m: i64) -> Self {
        Angle::new(Rational::zero(), m)
    }

    pub fn q(&self) -> &Rational {
        &self.q
    }

    pub fn m(&self) -> i64 {
        self.m
    }

    pub fn is_zero(&self) -> bool {
        self.m == 0 && self.q.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.m == 0
    }

    pub fn scale(&self, k: i64) -> Angle {
        Angle::new(self.q.mul_int(k), self.m * k)
    }

    /// The integer `k` with `q + m*theta - k` in `[0, 1)`.
    fn unit_floor(&self) -> BigInt {
        floor_of(&self.q, self.m)
    }

    /// Compares the representative of `self` in `[0, 1)` with `r`.
    pub fn cmp_representative(&self, r: &Rational) -> Ordering {
        let shifted = &self.q - r - Rational::from_integer(self.unit_floor());
        sign_of(&shifted, self.m)
    }

    /// Lift to `[-1/2, 1/2)`, returned as the rational part of
    /// `lift = rational_part + m*theta`.
    pub fn centered_rational_part(&self) -> Rational {
        let half = Rational::new(1, 2);
        let k = floor_of(&(&self.q + &half), self.m);
        &self.q - &Rational::from_integer(k)
    }

    /// `|lift| < bound` for the lift in `[-1/2, 1/2)`.
    pub fn centered_abs_lt(&self, bound: &Rational) -> bool {
        let part = self.centered_rational_part();
        sign_of(&(&part - bound), self.m) == Ordering::Less
            && sign_of(&(&part + bound), self.m) == Ordering::Greater
    }
}

impl fmt::Display for Angle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.m.cmp(&0) {
            Ordering::Equal => write!(f, "{}", self.q),
            Ordering::Greater => write!(f, "{} + {}*theta", self.q, self.m),
            Ordering::Less => write!(f, "{} - {}*theta", self.q, -(self.m as i128)),
        }
    }
}

impl Add<&Angle> for &Angle {
    type Output = Angle;
    fn add(self, rhs: &Angle) -> Angle {
        Angle::new(&self.q + &rhs.q, self.m + rhs.m)
    }
}

impl Add for Angle {
    type Output = Angle;
    fn add(self, rhs: Angle) -> Angle {
        &self + &rhs
    }
}

impl Sub<&Angle> for &Angle {
    type Output = Angle;
    fn sub(self, rhs: &Angle) -> Angle {
        self + &(-rhs)
    }
}

impl Sub for Angle {
    type Output = Angle;
    fn sub(self, rhs: Angle) -> Angle {
        &self - &rhs
    }
}

impl Neg for &Angle {
    type Output = Angle;
    fn neg(self) -> Angle {
        Angle::new(-&self.q, -self.m)
    }
}

impl Neg for Angle {
    type Output = Angle;
    fn neg(self) -> Angle {
        -&self
    }
}

pub fn angle_add(a: &Angle, b: &Angle) -> Angle {
    a + b
}

pub fn angle_neg(a: &Angle) -> Angle {
    -a
}

/// A point `(x, y)` of `X = T^2`. The second coordinate is always rational.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct BasePoint {
    pub x: Angle,
    y: Rational,
}

impl BasePoint {
    pub fn new(x: Angle, y: Rational) -> Self {
        BasePoint {
            x,
            y: y.fract_unit(),
        }
    }

    pub fn y(&self) -> &Rational {
        &self.y
    }

    /// Rotation by `k*theta` in the first coordinate.
    pub fn rotate_by(&self, k: i64) -> BasePoint {
        BasePoint {
            x: &self.x + &Angle::theta_multiple(k),
            y: self.y.clone(),
        }
    }
}

impl fmt::Display for BasePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} ; {})", self.x, self.y)
    }
}

/// The minimal homeomorphism `sigma`: irrational rotation of the x-circle.
pub fn rotate_x(p: &BasePoint) -> BasePoint {
    p.rotate_by(1)
}

pub fn rotate_x_inv(p: &BasePoint) -> BasePoint {
    p.rotate_by(-1)
}

/// A dyadic fixed-point number `mantissa / 2^bits` in `[0, 1)`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct FixedPoint {
    mantissa: BigUint,
    bits: u32,
}

impl FixedPoint {
    pub fn mantissa(&self) -> &BigUint {
        &self.mantissa
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn to_f64(&self) -> f64 {
        if self.bits <= 64 {
            self.mantissa.to_f64().unwrap_or(f64::NAN) / 2f64.powi(self.bits as i32)
        } else {
            let top = &self.mantissa >> (self.bits - 64);
            top.to_f64().unwrap_or(f64::NAN) / 2f64.powi(64)
        }
    }

    /// Circular distance `min(|a - b|, 1 - |a - b|)` as a fixed-point value.
    pub fn circle_distance(&self, other: &FixedPoint) -> FixedPoint {
        assert_eq!(self.bits, other.bits, "precision mismatch");
        let modulus = BigUint::one() << self.bits;
        let d = if self.mantissa >= other.mantissa {
            &self.mantissa - &other.mantissa
        } else {
            &other.mantissa - &self.mantissa
        };
        let wrapped = &modulus - &d;
        FixedPoint {
            mantissa: d.min(wrapped),
            bits: self.bits,
        }
    }

    /// `(self + other) mod 1`.
    pub fn add_mod_one(&self, other: &FixedPoint) -> FixedPoint {
        assert_eq!(self.bits, other.bits, "precision mismatch");
        let modulus = BigUint::one() << self.bits;
        FixedPoint {
            mantissa: (&self.mantissa + &other.mantissa) % modulus,
            bits: self.bits,
        }
    }
}

/// Evaluates `q + m*theta mod 1` to `precision_bits` fractional bits.
///
/// The error is below `2^(-precision_bits + 1)`. Panics if
/// `precision_bits < 64`.
pub fn angle_to_float(a: &Angle, precision_bits: u32) -> FixedPoint {
    assert!(precision_bits >= 64, "precision_bits must be at least 64");
    let p = precision_bits as usize;
    let m = BigInt::from(a.m);
    // |m| sqrt(5) 2^p, floored
    let radicand: BigUint = (m.magnitude() * m.magnitude() * 5u32) << (2 * p);
    let root = BigInt::from_biguint(Sign::Plus, radicand.sqrt());
    let signed_root = if a.m < 0 { -root } else { root };
    // 2^(p+1) * value ~= 2^(p+1) q - m 2^p + m sqrt5 2^p
    let two_p = BigInt::one() << p;
    let scaled = Rational::from_integer(two_p.clone()).mul_int(2) * &a.q
        + Rational::from_integer(signed_root - &m * &two_p);
    let doubled = scaled.floor();
    let (half, _) = doubled.div_mod_floor(&BigInt::from(2));
    let reduced = half.mod_floor(&two_p);
    FixedPoint {
        mantissa: reduced
            .to_biguint()
            .expect("reduced mod 2^p is non-negative"),
        bits: precision_bits,
    }
}

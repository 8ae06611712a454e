//! Exact scalars: rationals and Gaussian rationals `re + im·i`.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision fraction, always in lowest terms with a positive denominator.
pub type Rational = BigRational;

/// Builds the rational `num/den`.
///
/// Panics if `den == 0`.
pub fn rational(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Element of the Gaussian rationals. `im == 0` is the rational subfield.
///
/// The derived ordering is lexicographic on `(re, im)`; it is a total order
/// used for canonical sorting, not a field ordering.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct FieldElem {
    pub re: Rational,
    pub im: Rational,
}

impl FieldElem {
    pub fn new(re: Rational, im: Rational) -> Self {
        FieldElem { re, im }
    }

    pub fn real(re: Rational) -> Self {
        FieldElem {
            re,
            im: Rational::zero(),
        }
    }

    pub fn int(n: i64) -> Self {
        FieldElem::real(Rational::from_integer(BigInt::from(n)))
    }

    pub fn frac(num: i64, den: i64) -> Self {
        FieldElem::real(rational(num, den))
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        FieldElem::new(Rational::zero(), Rational::one())
    }

    pub fn zero() -> Self {
        FieldElem::default()
    }

    pub fn one() -> Self {
        FieldElem::int(1)
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        FieldElem::new(self.re.clone(), -self.im.clone())
    }

    /// `|z|² = re² + im²`.
    pub fn norm_sq(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if self.is_real() {
            return Some(FieldElem::real(self.re.recip()));
        }
        let n = self.norm_sq();
        Some(FieldElem::new(&self.re / &n, -(&self.im / &n)))
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut result = FieldElem::one();
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }
}

/// Lossy conversion used by rendering only.
pub fn rational_to_f64(r: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}

impl From<Rational> for FieldElem {
    fn from(r: Rational) -> Self {
        FieldElem::real(r)
    }
}

impl From<i64> for FieldElem {
    fn from(n: i64) -> Self {
        FieldElem::int(n)
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", self.re)
        } else if self.re.is_zero() {
            write!(f, "{}*i", self.im)
        } else if self.im.is_negative() {
            write!(f, "({} - {}*i)", self.re, -self.im.clone())
        } else {
            write!(f, "({} + {}*i)", self.re, self.im)
        }
    }
}

impl fmt::Debug for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<'a> Add<&'a FieldElem> for &'a FieldElem {
    type Output = FieldElem;
    fn add(self, rhs: &FieldElem) -> FieldElem {
        FieldElem::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl<'a> Sub<&'a FieldElem> for &'a FieldElem {
    type Output = FieldElem;
    fn sub(self, rhs: &FieldElem) -> FieldElem {
        FieldElem::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl<'a> Mul<&'a FieldElem> for &'a FieldElem {
    type Output = FieldElem;
    fn mul(self, rhs: &FieldElem) -> FieldElem {
        if self.im.is_zero() && rhs.im.is_zero() {
            return FieldElem::real(&self.re * &rhs.re);
        }
        FieldElem::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

impl<'a> Div<&'a FieldElem> for &'a FieldElem {
    type Output = FieldElem;
    /// Panics on division by zero, like the rational division it wraps.
    fn div(self, rhs: &FieldElem) -> FieldElem {
        if rhs.im.is_zero() {
            return FieldElem::new(&self.re / &rhs.re, &self.im / &rhs.re);
        }
        self * &rhs.inv().expect("division by zero field element")
    }
}

impl Neg for &FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        FieldElem::new(-self.re.clone(), -self.im.clone())
    }
}

impl Neg for FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        FieldElem::new(-self.re, -self.im)
    }
}

macro_rules! forward_owned_binop {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr<FieldElem> for FieldElem {
            type Output = FieldElem;
            fn $method(self, rhs: FieldElem) -> FieldElem {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $tr<&'a FieldElem> for FieldElem {
            type Output = FieldElem;
            fn $method(self, rhs: &FieldElem) -> FieldElem {
                (&self).$method(rhs)
            }
        }
        impl<'a> $tr<FieldElem> for &'a FieldElem {
            type Output = FieldElem;
            fn $method(self, rhs: FieldElem) -> FieldElem {
                self.$method(&rhs)
            }
        }
    )*};
}

forward_owned_binop!(Add add, Sub sub, Mul mul, Div div);

impl AddAssign<&FieldElem> for FieldElem {
    fn add_assign(&mut self, rhs: &FieldElem) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl SubAssign<&FieldElem> for FieldElem {
    fn sub_assign(&mut self, rhs: &FieldElem) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

impl MulAssign<&FieldElem> for FieldElem {
    fn mul_assign(&mut self, rhs: &FieldElem) {
        *self = &*self * rhs;
    }
}

/// A point in the plane with exact coordinates.
pub type Point = (FieldElem, FieldElem);

/// Shorthand for a point with rational coordinates `num/den`.
pub fn pt(x: (i64, i64), y: (i64, i64)) -> Point {
    (FieldElem::frac(x.0, x.1), FieldElem::frac(y.0, y.1))
}

/// Shorthand for an integer point.
pub fn ipt(x: i64, y: i64) -> Point {
    (FieldElem::int(x), FieldElem::int(y))
}

pub fn point_to_string(p: &Point) -> String {
    format!("({}, {})", p.0, p.1)
}

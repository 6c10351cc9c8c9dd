//! Scalar backends: exact rationals and binary floats behind one trait.
//!
//! Pointwise identities in this crate are algebraic, so they can be checked
//! exactly over the rationals; the spectral layers run on `f64`. Both backends
//! expose the same interface, including *exact* square and ninth roots, which
//! succeed on rationals only when the root is again rational.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};

/// Common interface for the coefficient field.
pub trait Scalar:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + AddAssign
    + SubAssign
    + Send
    + Sync
    + 'static
{
    /// True when arithmetic is exact (rational backend).
    const EXACT: bool;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(n: i64) -> Self;
    fn from_ratio(num: i64, den: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn is_positive(&self) -> bool;
    fn abs(&self) -> Self;
    fn to_f64(&self) -> f64;

    /// Exact square root when one exists in the field.
    fn sqrt_exact(&self) -> Option<Self>;

    /// Exact n-th root of a positive scalar when one exists in the field.
    fn nth_root_exact(&self, n: u32) -> Option<Self>;

    /// Reciprocal; panics on zero for rationals, returns inf for floats.
    fn recip(&self) -> Self {
        Self::one() / self.clone()
    }
}

impl Scalar for f64 {
    const EXACT: bool = false;

    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn from_i64(n: i64) -> Self {
        n as f64
    }
    fn from_ratio(num: i64, den: i64) -> Self {
        num as f64 / den as f64
    }
    fn is_zero(&self) -> bool {
        *self == 0.0
    }
    fn is_positive(&self) -> bool {
        *self > 0.0
    }
    fn abs(&self) -> Self {
        f64::abs(*self)
    }
    fn to_f64(&self) -> f64 {
        *self
    }
    fn sqrt_exact(&self) -> Option<Self> {
        if *self < 0.0 {
            None
        } else {
            Some(self.sqrt())
        }
    }
    fn nth_root_exact(&self, n: u32) -> Option<Self> {
        if *self < 0.0 {
            None
        } else {
            Some(self.powf(1.0 / n as f64))
        }
    }
}

/// Arbitrary-precision rational scalar.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Rat(pub BigRational);

impl Rat {
    pub fn new(num: i64, den: i64) -> Self {
        Rat(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

macro_rules! rat_binop {
    ($tr:ident, $m:ident) => {
        impl $tr for Rat {
            type Output = Rat;
            fn $m(self, rhs: Rat) -> Rat {
                Rat(self.0.$m(rhs.0))
            }
        }
    };
}

rat_binop!(Add, add);
rat_binop!(Sub, sub);
rat_binop!(Mul, mul);
rat_binop!(Div, div);

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-self.0)
    }
}

impl AddAssign for Rat {
    fn add_assign(&mut self, rhs: Rat) {
        self.0 += rhs.0;
    }
}

impl SubAssign for Rat {
    fn sub_assign(&mut self, rhs: Rat) {
        self.0 -= rhs.0;
    }
}

/// Exact n-th root of a big rational, if it exists.
fn rational_nth_root(x: &BigRational, n: u32) -> Option<BigRational> {
    if x.is_negative() {
        return None;
    }
    let num = x.numer();
    let den = x.denom();
    let rn = num.nth_root(n);
    let rd = den.nth_root(n);
    if &rn.pow(n) == num && &rd.pow(n) == den {
        Some(BigRational::new(rn, rd))
    } else {
        None
    }
}

impl Scalar for Rat {
    const EXACT: bool = true;

    fn zero() -> Self {
        Rat(BigRational::zero())
    }
    fn one() -> Self {
        Rat(BigRational::one())
    }
    fn from_i64(n: i64) -> Self {
        Rat(BigRational::from_integer(BigInt::from(n)))
    }
    fn from_ratio(num: i64, den: i64) -> Self {
        Rat::new(num, den)
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
    fn is_positive(&self) -> bool {
        self.0.is_positive()
    }
    fn abs(&self) -> Self {
        Rat(self.0.abs())
    }
    fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }
    fn sqrt_exact(&self) -> Option<Self> {
        rational_nth_root(&self.0, 2).map(Rat)
    }
    fn nth_root_exact(&self, n: u32) -> Option<Self> {
        rational_nth_root(&self.0, n).map(Rat)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_roots() {
        let x = Rat::new(4, 9);
        assert_eq!(x.sqrt_exact(), Some(Rat::new(2, 3)));
        let c = Rat::from_i64(512);
        assert_eq!(c.nth_root_exact(9), Some(Rat::from_i64(2)));
        assert_eq!(Rat::from_i64(10).sqrt_exact(), None);
        assert_eq!(Rat::from_i64(-4).sqrt_exact(), None);
    }

    #[test]
    fn float_roots() {
        assert_eq!(4.0f64.sqrt_exact(), Some(2.0));
        assert!((512.0f64.nth_root_exact(9).unwrap() - 2.0).abs() < 1e-14);
    }
}

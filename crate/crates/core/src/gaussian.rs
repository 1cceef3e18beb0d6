//! Exact Gaussian integers `a + b i`.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Zero};

use crate::error::Result;
use crate::scalar::Coeff;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct GaussianInt<T> {
    pub re: T,
    pub im: T,
}

impl<T: Coeff> GaussianInt<T> {
    pub fn new(re: T, im: T) -> Self {
        Self { re, im }
    }

    pub fn real(re: T) -> Self {
        Self { re, im: T::zero() }
    }

    pub fn i() -> Self {
        Self::new(T::zero(), T::one())
    }

    pub fn conj(&self) -> Self {
        Self::new(self.re.clone(), -self.im.clone())
    }

    /// `re^2 + im^2`.
    pub fn norm(&self) -> T {
        self.re.clone() * self.re.clone() + self.im.clone() * self.im.clone()
    }

    pub fn norm_checked(&self) -> Result<T> {
        let r = self.re.mul_checked(&self.re, "gaussian norm")?;
        let i = self.im.mul_checked(&self.im, "gaussian norm")?;
        r.add_checked(&i, "gaussian norm")
    }

    /// `self * i`.
    pub fn mul_i(&self) -> Self {
        Self::new(-self.im.clone(), self.re.clone())
    }

    /// `self * i^k`; only coordinate swaps and sign flips.
    pub fn mul_i_pow(&self, k: u32) -> Self {
        match k % 4 {
            0 => self.clone(),
            1 => self.mul_i(),
            2 => -self.clone(),
            _ => Self::new(self.im.clone(), -self.re.clone()),
        }
    }

    pub fn scale(&self, k: &T) -> Self {
        Self::new(self.re.clone() * k.clone(), self.im.clone() * k.clone())
    }
}

impl<T: Coeff> Add for GaussianInt<T> {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        Self::new(self.re + rhs.re, self.im + rhs.im)
    }
}

impl<T: Coeff> AddAssign for GaussianInt<T> {
    fn add_assign(&mut self, rhs: Self) {
        self.re = self.re.clone() + rhs.re;
        self.im = self.im.clone() + rhs.im;
    }
}

impl<T: Coeff> Sub for GaussianInt<T> {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        Self::new(self.re - rhs.re, self.im - rhs.im)
    }
}

impl<T: Coeff> SubAssign for GaussianInt<T> {
    fn sub_assign(&mut self, rhs: Self) {
        self.re = self.re.clone() - rhs.re;
        self.im = self.im.clone() - rhs.im;
    }
}

impl<T: Coeff> Neg for GaussianInt<T> {
    type Output = Self;

    fn neg(self) -> Self {
        Self::new(-self.re, -self.im)
    }
}

impl<T: Coeff> Mul for GaussianInt<T> {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        let re = self.re.clone() * rhs.re.clone() - self.im.clone() * rhs.im.clone();
        let im = self.re * rhs.im + self.im * rhs.re;
        Self::new(re, im)
    }
}

impl<T: Coeff> Zero for GaussianInt<T> {
    fn zero() -> Self {
        Self::new(T::zero(), T::zero())
    }

    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl<T: Coeff> One for GaussianInt<T> {
    fn one() -> Self {
        Self::real(T::one())
    }
}

impl<T: Coeff> fmt::Display for GaussianInt<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_negative() {
            write!(f, "{}-{}i", self.re, self.im.abs())
        } else {
            write!(f, "{}+{}i", self.re, self.im)
        }
    }
}

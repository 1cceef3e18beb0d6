//! All character sums of a group-ring element at once.
//!
//! The character group of `Z_{n_1} x ... x Z_{n_k}` is a tensor product, so
//! the full table `y -> chi_y(A)` is computed with one length-`n_j` DFT pass
//! per cyclic factor: `O(|G| * sum_j n_j)` work instead of `O(|G|^2)`.
//!
//! When the exponent divides 4 every root of unity is a power of `i` and the
//! passes run exactly over `Z[i]` with radix-2 and radix-4 butterflies. Other
//! groups go through a floating-point path generic over [`Float`].

use num_complex::Complex;
use num_traits::{Float, FloatConst, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::gaussian::GaussianInt;
use crate::group::{GroupElement, GroupSpec};
use crate::ring::{GroupRingElement, Spectrum};
use crate::scalar::Coeff;

/// Relative tolerance on norms computed by the float path.
pub const FLOAT_NORM_RELATIVE_TOLERANCE: f64 = 1e-9;
/// Largest allowed distance between a float norm and its nearest integer.
pub const FLOAT_ROUNDING_RESIDUAL: f64 = 1e-6;

const PARALLEL_THRESHOLD: usize = 1 << 14;

/// `chi_y(A)` for every `y`, indexed like the group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterTable<T> {
    group: GroupSpec,
    sums: Vec<GaussianInt<T>>,
}

impl<T: Coeff> CharacterTable<T> {
    pub fn from_sums(group: &GroupSpec, sums: Vec<GaussianInt<T>>) -> Result<Self> {
        if sums.len() != group.cardinality() {
            return Err(Error::Format(format!(
                "{} character sums for a group of order {}",
                sums.len(),
                group.cardinality()
            )));
        }
        Ok(Self {
            group: group.clone(),
            sums,
        })
    }

    pub fn group(&self) -> &GroupSpec {
        &self.group
    }

    pub fn sums(&self) -> &[GaussianInt<T>] {
        &self.sums
    }

    pub fn sum_at(&self, y: &GroupElement) -> Result<&GaussianInt<T>> {
        Ok(&self.sums[self.group.index_of(y)?])
    }

    /// `|chi_y(A)|^2` for every `y`.
    pub fn norms(&self) -> Result<Vec<T>> {
        self.sums.iter().map(|s| s.norm_checked()).collect()
    }

    /// The character spectrum: multiset of `|chi_y(A)|^2`.
    pub fn norm_spectrum(&self) -> Result<Spectrum<T>> {
        Ok(Spectrum::from_values(self.norms()?))
    }

    /// Pointwise product, the transform of a convolution.
    pub fn pointwise_mul(&self, other: &Self) -> Result<Self> {
        if self.group != other.group {
            return Err(Error::GroupMismatch {
                left: self.group.orders().to_vec(),
                right: other.group.orders().to_vec(),
            });
        }
        let sums = self
            .sums
            .iter()
            .zip(&other.sums)
            .map(|(a, b)| a.clone() * b.clone())
            .collect();
        Ok(Self {
            group: self.group.clone(),
            sums,
        })
    }
}

/// Norm spectrum of a character table.
pub fn norm_spectrum<T: Coeff>(table: &CharacterTable<T>) -> Result<Spectrum<T>> {
    table.norm_spectrum()
}

fn ensure_exact(group: &GroupSpec) -> Result<()> {
    if 4 % group.exponent() != 0 {
        return Err(Error::UnsupportedExponent(group.exponent()));
    }
    Ok(())
}

/// Exact `chi_y(A)` for all `y`; the group exponent must divide 4.
pub fn full_character_sums<T: Coeff>(a: &GroupRingElement<T>) -> Result<CharacterTable<T>> {
    let group = a.group();
    ensure_exact(group)?;
    let mut data: Vec<GaussianInt<T>> = a
        .coeffs()
        .iter()
        .map(|c| GaussianInt::real(c.clone()))
        .collect();
    for (&n, &stride) in group.orders().iter().zip(group.strides()) {
        exact_pass(&mut data, n, stride, false);
    }
    Ok(CharacterTable {
        group: group.clone(),
        sums: data,
    })
}

/// Recover `A` from its table, checking that every entry is divisible by `|G|`.
pub fn inverse_transform<T: Coeff>(table: &CharacterTable<T>) -> Result<GroupRingElement<T>> {
    let group = table.group();
    ensure_exact(group)?;
    let mut data = table.sums.clone();
    for (&n, &stride) in group.orders().iter().zip(group.strides()) {
        exact_pass(&mut data, n, stride, true);
    }
    let order = T::from_usize_checked(group.cardinality())?;
    let coeffs = data
        .into_iter()
        .enumerate()
        .map(|(i, z)| {
            if !z.im.is_zero() {
                return Err(Error::Inconsistent(format!(
                    "inverse transform has imaginary part {} at index {i}",
                    z.im
                )));
            }
            let (q, r) = z.re.div_rem(&order);
            if !r.is_zero() {
                return Err(Error::Inconsistent(format!(
                    "inverse transform entry {} at index {i} is not divisible by {order}",
                    z.re
                )));
            }
            Ok(q)
        })
        .collect::<Result<Vec<_>>>()?;
    GroupRingElement::from_coeffs(group, coeffs)
}

/// `AB` through transform, pointwise product and inverse transform.
pub fn convolve_fast<T: Coeff>(
    a: &GroupRingElement<T>,
    b: &GroupRingElement<T>,
) -> Result<GroupRingElement<T>> {
    if a.group() != b.group() {
        return Err(Error::GroupMismatch {
            left: a.group().orders().to_vec(),
            right: b.group().orders().to_vec(),
        });
    }
    let product = full_character_sums(a)?.pointwise_mul(&full_character_sums(b)?)?;
    inverse_transform(&product)
}

/// Direct `O(|G|^2)` evaluation of every character sum, exact path only.
pub fn naive_character_sums<T: Coeff>(a: &GroupRingElement<T>) -> Result<CharacterTable<T>> {
    let group = a.group();
    ensure_exact(group)?;
    let shift = 4 / group.exponent();
    let support: Vec<(Vec<u32>, &T)> = a
        .support()
        .into_iter()
        .map(|i| (group.element_at(i).coords, a.coeff_at(i)))
        .collect();
    let sums = (0..group.cardinality())
        .into_par_iter()
        .map(|yi| {
            let y = group.element_at(yi).coords;
            let mut acc = GaussianInt::zero();
            for (x, c) in &support {
                let e = group.character_exponent_unchecked(&y, x) * shift;
                acc += GaussianInt::real((*c).clone()).mul_i_pow(e);
            }
            acc
        })
        .collect();
    Ok(CharacterTable {
        group: group.clone(),
        sums,
    })
}

fn exact_pass<T: Coeff>(data: &mut [GaussianInt<T>], order: u32, stride: usize, inverse: bool) {
    let block = stride * order as usize;
    let run = |chunk: &mut [GaussianInt<T>]| match order {
        2 => radix2_block(chunk, stride),
        4 => radix4_block(chunk, stride, inverse),
        _ => unreachable!("exact path only sees orders 2 and 4"),
    };
    if data.len() >= PARALLEL_THRESHOLD && data.len() / block > 1 {
        data.par_chunks_mut(block).for_each(run);
    } else {
        data.chunks_mut(block).for_each(run);
    }
}

fn radix2_block<T: Coeff>(chunk: &mut [GaussianInt<T>], stride: usize) {
    let (lo, hi) = chunk.split_at_mut(stride);
    for (a, b) in lo.iter_mut().zip(hi.iter_mut()) {
        let (x, y) = (a.clone(), b.clone());
        *a = x.clone() + y.clone();
        *b = x - y;
    }
}

/// `X_y = sum_t x_t i^{+-yt}` on each of the `stride` interleaved lines.
fn radix4_block<T: Coeff>(chunk: &mut [GaussianInt<T>], stride: usize, inverse: bool) {
    let (q0, rest) = chunk.split_at_mut(stride);
    let (q1, rest) = rest.split_at_mut(stride);
    let (q2, q3) = rest.split_at_mut(stride);
    for r in 0..stride {
        let (x0, x1, x2, x3) = (
            q0[r].clone(),
            q1[r].clone(),
            q2[r].clone(),
            q3[r].clone(),
        );
        let s02 = x0.clone() + x2.clone();
        let d02 = x0 - x2;
        let s13 = x1.clone() + x3.clone();
        let mut d13 = (x1 - x3).mul_i();
        if inverse {
            d13 = -d13;
        }
        q0[r] = s02.clone() + s13.clone();
        q2[r] = s02 - s13;
        q1[r] = d02.clone() + d13.clone();
        q3[r] = d02 - d13;
    }
}

/// `|chi_y(A)|^2` for every `y`: exact over `Z[i]` when the exponent divides 4,
/// otherwise through the `f64` path with norms rounded to integers.
pub fn character_norms<T: Coeff>(a: &GroupRingElement<T>) -> Result<Vec<T>> {
    if 4 % a.group().exponent() == 0 {
        return full_character_sums(a)?.norms();
    }
    full_character_sums_float::<T, f64>(a)?
        .rounded_norms()?
        .into_iter()
        .map(|n| T::from_i128(n).ok_or(Error::Overflow("norm conversion")))
        .collect()
}

/// Floating-point character table for groups of arbitrary exponent.
#[derive(Clone, Debug, PartialEq)]
pub struct ComplexTable<F> {
    group: GroupSpec,
    sums: Vec<Complex<F>>,
}

impl<F: Float + FloatConst + Send + Sync> ComplexTable<F> {
    pub fn group(&self) -> &GroupSpec {
        &self.group
    }

    pub fn sums(&self) -> &[Complex<F>] {
        &self.sums
    }

    pub fn norms(&self) -> Vec<F> {
        self.sums.iter().map(|z| z.norm_sqr()).collect()
    }

    /// Norms rounded to integers; fails if any norm sits further than
    /// [`FLOAT_ROUNDING_RESIDUAL`] from an integer.
    pub fn rounded_norms(&self) -> Result<Vec<i128>> {
        self.norms()
            .into_iter()
            .map(|n| {
                let n = n.to_f64().unwrap_or(f64::NAN);
                let r = n.round();
                let residual = (n - r).abs();
                if residual.is_nan() || residual >= FLOAT_ROUNDING_RESIDUAL {
                    return Err(Error::Numerical {
                        residual,
                        limit: FLOAT_ROUNDING_RESIDUAL,
                    });
                }
                Ok(r as i128)
            })
            .collect()
    }
}

/// `chi_y(A)` for all `y` in floating point, any group.
pub fn full_character_sums_float<T, F>(a: &GroupRingElement<T>) -> Result<ComplexTable<F>>
where
    T: Coeff,
    F: Float + FloatConst + Send + Sync,
{
    let group = a.group();
    let mut data = a
        .coeffs()
        .iter()
        .map(|c| {
            c.to_f64()
                .and_then(F::from)
                .map(|re| Complex::new(re, F::zero()))
                .ok_or(Error::Overflow("float conversion"))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut scratch = Vec::new();
    for (&n, &stride) in group.orders().iter().zip(group.strides()) {
        let n = n as usize;
        let roots: Vec<Complex<F>> = (0..n)
            .map(|k| {
                let angle = F::TAU() * F::from(k).unwrap() / F::from(n).unwrap();
                Complex::new(angle.cos(), angle.sin())
            })
            .collect();
        for chunk in data.chunks_mut(stride * n) {
            for r in 0..stride {
                scratch.clear();
                scratch.extend((0..n).map(|t| chunk[r + t * stride]));
                for y in 0..n {
                    let mut acc = Complex::zero();
                    for (t, &x) in scratch.iter().enumerate() {
                        acc = acc + x * roots[(y * t) % n];
                    }
                    chunk[r + y * stride] = acc;
                }
            }
        }
    }
    Ok(ComplexTable {
        group: group.clone(),
        sums: data,
    })
}

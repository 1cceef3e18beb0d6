//! Closed-form coefficient and spectrum formulas for the direct construction.
//!
//! All arithmetic is exact: binomials come from Pascal's rule and powers
//! are computed with checked multiplication in the target scalar.

use crate::constructions::{classify_stratum, Stratum, I, N22, Y};
use crate::error::{Error, Result};
use crate::group::GroupElement;
use crate::ring::Spectrum;
use crate::scalar::Coeff;

/// Row `n` of Pascal's triangle.
pub fn binomial_row(n: usize) -> Vec<u128> {
    let mut row = vec![1u128];
    for _ in 0..n {
        let mut next = vec![1u128; row.len() + 1];
        for k in 1..row.len() {
            next[k] = row[k - 1] + row[k];
        }
        row = next;
    }
    row
}

/// `C(n, k)`, zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        0
    } else {
        binomial_row(n)[k]
    }
}

fn pow_u128(base: u128, exp: usize) -> Result<u128> {
    (0..exp).try_fold(1u128, |acc, _| acc.checked_mul(base).ok_or(Error::Overflow("closed form")))
}

fn to_coeff<T: Coeff>(x: u128) -> Result<T> {
    T::from_u128(x).ok_or(Error::Overflow("closed form"))
}

/// The difference spectrum of `T'` for a given `m`, as predicted in closed form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedFormSpectrum<T: Coeff> {
    pub m: usize,
    pub spectrum: Spectrum<T>,
}

impl<T: Coeff> ClosedFormSpectrum<T> {
    /// `2^{4m+1}`, the order of `Z_2 x Z_4^{2m}`.
    pub fn expected_total(&self) -> u128 {
        1u128 << (4 * self.m + 1)
    }

    /// `|T'|^2 = 2^{4m+2}`.
    pub fn expected_weight(&self) -> Result<T> {
        to_coeff(1u128 << (4 * self.m + 2))
    }

    /// Whether frequencies sum to `|G|` and `sum value * freq = |T'|^2`.
    pub fn identities_hold(&self) -> Result<bool> {
        Ok(self.spectrum.total() as u128 == self.expected_total()
            && self.spectrum.weighted_sum()? == self.expected_weight()?)
    }
}

/// Frequencies of `0` and of each `2^l` in `[[T'T'^{(-1)}]_g]`.
pub fn tprime_spectrum_closed_form<T: Coeff>(m: usize) -> Result<ClosedFormSpectrum<T>> {
    if m == 0 {
        return Err(Error::OutOfRange("m must be at least 1".into()));
    }
    let row = binomial_row(m);
    let c = |k: usize| row.get(k).copied().unwrap_or(0);
    let group_order = 1u128 << (4 * m + 1);
    let zero = group_order
        .checked_sub(pow_u128(10, m)? + pow_u128(13, m)?)
        .ok_or(Error::Overflow("closed form"))?;

    // 12^{m-(l-1)/2} C(m, (l-1)/2) for odd l.
    let odd_part = |l: usize| -> Result<u128> {
        let k = (l - 1) / 2;
        Ok(pow_u128(12, m - k)? * c(k))
    };
    // 2^{2m-l+1} 3^{l-1} C(m, l-1) for l <= m + 1.
    let low_part = |l: usize| -> Result<u128> {
        Ok(pow_u128(2, 2 * m + 1 - l)? * pow_u128(3, l - 1)? * c(l - 1))
    };

    let mut freqs: Vec<(usize, u128)> = Vec::new();
    for l in 1..=2 * m + 1 {
        let f = if l <= m + 1 {
            if l % 2 == 1 {
                odd_part(l)? + low_part(l)?
            } else {
                low_part(l)?
            }
        } else if l % 2 == 1 {
            odd_part(l)?
        } else {
            0
        };
        freqs.push((l, f));
    }

    let mut spectrum = Spectrum::new();
    let freq = |x: u128| u64::try_from(x).map_err(|_| Error::Overflow("closed form frequency"));
    spectrum.insert(T::zero(), freq(zero)?);
    let two = to_coeff::<T>(2)?;
    for (l, f) in freqs {
        spectrum.insert(two.pow_checked(l as u32, "closed form value")?, freq(f)?);
    }
    Ok(ClosedFormSpectrum { m, spectrum })
}

fn blocks(x: &GroupElement) -> Vec<[u32; 2]> {
    x.coords.chunks(2).map(|c| [c[0], c[1]]).collect()
}

/// `[TT^{(-1)}]_x` for `T = L^m`: zero on `M_m`, else `4^l` with `l` zero blocks.
pub fn tt_inv_coefficient<T: Coeff>(x: &GroupElement) -> Result<T> {
    if classify_stratum(x)? == Stratum::M {
        return Ok(T::zero());
    }
    let l = blocks(x).iter().filter(|b| N22.contains(b)).count();
    to_coeff::<T>(4)?.pow_checked(l as u32, "tt_inv")
}

/// `[TT]_x` for `T = L^m`: zero if some block is outside `Y u I`, else `2^l` with `l` blocks in `I`.
pub fn tt_coefficient<T: Coeff>(x: &GroupElement) -> Result<T> {
    classify_stratum(x)?;
    let bs = blocks(x);
    if bs.iter().any(|b| !Y.contains(b) && !I.contains(b)) {
        return Ok(T::zero());
    }
    let l = bs.iter().filter(|b| I.contains(b)).count();
    to_coeff::<T>(2)?.pow_checked(l as u32, "tt")
}

/// `[T'T'^{(-1)}]_g` for `g = (a, x)` in `Z_2 x Z_4^{2m}`.
pub fn tprime_diff_element<T: Coeff>(g: &GroupElement) -> Result<T> {
    let (&a, x) = g
        .coords
        .split_first()
        .ok_or(Error::ElementMismatch { expected: 3, found: 0 })?;
    let x = GroupElement::new(x.to_vec());
    let two = to_coeff::<T>(2)?;
    let inner = match a {
        0 => tt_inv_coefficient::<T>(&x)?,
        1 => tt_coefficient::<T>(&x)?,
        _ => {
            return Err(Error::CoordinateOutOfRange {
                index: 0,
                value: a,
                order: 2,
            })
        }
    };
    inner.mul_checked(&two, "tprime diff")
}

/// `[E_{m,u+h} E_{m,v+h}^{(-1)}]_z = 3^h C(m-u-v+w, h)` for `z` in `F_{m,u,v,w}`.
pub fn e_cross_coefficient<T: Coeff>(m: usize, stratum: Stratum, h: usize) -> Result<T> {
    let free = stratum
        .free_blocks(m)
        .ok_or_else(|| Error::OutOfRange("the cross-coefficient formula needs an F stratum".into()))?;
    if h > free {
        return Err(Error::OutOfRange(format!("h = {h} exceeds {free}")));
    }
    to_coeff(pow_u128(3, h)? * binomial(free, h))
}

/// `[S0 S0^{(-1)} + S1 S1^{(-1)}]_z`: zero on `M_m` and odd `u+v`, else `4^{m-u-v+w}`.
pub fn partition_difference_closed_form<T: Coeff>(m: usize, stratum: Stratum) -> Result<T> {
    match stratum {
        Stratum::F { u, v, .. } if (u + v) % 2 == 0 => {
            let free = stratum.free_blocks(m).expect("F stratum");
            to_coeff(pow_u128(4, free)?)
        }
        _ => Ok(T::zero()),
    }
}

/// `|chi_z(T + T^{(-1)})|^2`: zero on `M_m` and odd `u+v`, else `4^{2m-u-v+w+1}`.
pub fn t_sym_norm_closed_form<T: Coeff>(m: usize, stratum: Stratum) -> Result<T> {
    match stratum {
        Stratum::F { u, v, .. } if (u + v) % 2 == 0 => {
            let free = stratum.free_blocks(m).expect("F stratum");
            to_coeff(pow_u128(4, free + m + 1)?)
        }
        _ => Ok(T::zero()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(c: &[u32]) -> GroupElement {
        GroupElement::new(c.to_vec())
    }

    fn spectrum(pairs: &[(i64, u64)]) -> Spectrum<i64> {
        pairs.iter().copied().collect()
    }

    #[test]
    fn closed_form_small_m() {
        let s1 = tprime_spectrum_closed_form::<i64>(1).unwrap();
        assert_eq!(s1.spectrum, spectrum(&[(0, 9), (2, 16), (4, 6), (8, 1)]));
        let s2 = tprime_spectrum_closed_form::<i64>(2).unwrap();
        assert_eq!(
            s2.spectrum,
            spectrum(&[(0, 243), (2, 160), (4, 48), (8, 60), (32, 1)])
        );
        assert!(tprime_spectrum_closed_form::<i64>(0).is_err());
    }

    #[test]
    fn closed_form_identities() {
        for m in 1..=12 {
            let s = tprime_spectrum_closed_form::<i128>(m).unwrap();
            assert!(s.identities_hold().unwrap(), "m = {m}");
        }
    }

    #[test]
    fn pascal() {
        assert_eq!(binomial_row(4), vec![1, 4, 6, 4, 1]);
        assert_eq!(binomial(5, 7), 0);
        assert_eq!(binomial(30, 15), 155117520);
    }

    #[test]
    fn tt_values_m1() {
        assert_eq!(tt_inv_coefficient::<i64>(&el(&[0, 0])).unwrap(), 4);
        assert_eq!(tt_coefficient::<i64>(&el(&[0, 0])).unwrap(), 1);
        assert_eq!(tt_inv_coefficient::<i64>(&el(&[0, 2])).unwrap(), 0);
        assert_eq!(tt_coefficient::<i64>(&el(&[1, 1])).unwrap(), 2);
        assert_eq!(tt_inv_coefficient::<i64>(&el(&[0, 0, 0, 0])).unwrap(), 16);
    }

    #[test]
    fn tprime_values() {
        assert_eq!(tprime_diff_element::<i64>(&el(&[0, 0, 0])).unwrap(), 8);
        assert_eq!(tprime_diff_element::<i64>(&el(&[0, 0, 0, 0, 0])).unwrap(), 32);
        assert_eq!(tprime_diff_element::<i64>(&el(&[0, 2, 2, 0, 1])).unwrap(), 0);
        assert!(tprime_diff_element::<i64>(&el(&[2, 0, 0])).is_err());
    }

    #[test]
    fn lemma_values() {
        let f = Stratum::f(3, 1, 1, 1).unwrap();
        assert_eq!(e_cross_coefficient::<i64>(3, f, 2).unwrap(), 9);
        assert!(e_cross_coefficient::<i64>(3, f, 3).is_err());
        assert!(e_cross_coefficient::<i64>(3, Stratum::M, 0).is_err());
        assert_eq!(partition_difference_closed_form::<i64>(3, f).unwrap(), 16);
        assert_eq!(t_sym_norm_closed_form::<i64>(3, f).unwrap(), 4i64.pow(6));
        assert_eq!(t_sym_norm_closed_form::<i64>(1, Stratum::f(1, 0, 0, 0).unwrap()).unwrap(), 64);
        assert_eq!(partition_difference_closed_form::<i64>(2, Stratum::f(2, 1, 0, 0).unwrap()).unwrap(), 0);
    }
}

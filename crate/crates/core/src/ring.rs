//! Dense integer group rings `Z[G]`.

use std::collections::BTreeMap;
use std::fmt;

use serde::ser::{Serialize, SerializeMap, Serializer};

use crate::error::{Error, Result};
use crate::group::{GroupElement, GroupSpec};
use crate::scalar::Coeff;

/// An element `sum_g a_g g` of `Z[G]`, coefficients stored by canonical index.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GroupRingElement<T> {
    group: GroupSpec,
    coeffs: Vec<T>,
}

impl<T: Coeff> GroupRingElement<T> {
    pub fn zero(group: &GroupSpec) -> Self {
        Self {
            group: group.clone(),
            coeffs: vec![T::zero(); group.cardinality()],
        }
    }

    pub fn from_coeffs(group: &GroupSpec, coeffs: Vec<T>) -> Result<Self> {
        if coeffs.len() != group.cardinality() {
            return Err(Error::Format(format!(
                "{} coefficients for a group of order {}",
                coeffs.len(),
                group.cardinality()
            )));
        }
        Ok(Self {
            group: group.clone(),
            coeffs,
        })
    }

    /// Indicator of a set of element indices. Repeated indices are rejected.
    pub fn from_indices<I>(group: &GroupSpec, indices: I) -> Result<Self>
    where
        I: IntoIterator<Item = usize>,
    {
        let mut out = Self::zero(group);
        for i in indices {
            if i >= group.cardinality() {
                return Err(Error::OutOfRange(format!("element index {i}")));
            }
            if out.coeffs[i].is_one() {
                return Err(Error::Format(format!("element index {i} listed twice")));
            }
            out.coeffs[i] = T::one();
        }
        Ok(out)
    }

    pub fn from_elements<'a, I>(group: &GroupSpec, elements: I) -> Result<Self>
    where
        I: IntoIterator<Item = &'a GroupElement>,
    {
        let indices = elements
            .into_iter()
            .map(|e| group.index_of(e))
            .collect::<Result<Vec<_>>>()?;
        Self::from_indices(group, indices)
    }

    pub fn from_coords(group: &GroupSpec, coords: &[&[u32]]) -> Result<Self> {
        let elements: Vec<GroupElement> =
            coords.iter().map(|c| GroupElement::new(c.to_vec())).collect();
        Self::from_elements(group, &elements)
    }

    pub fn group(&self) -> &GroupSpec {
        &self.group
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    pub fn coeff(&self, g: &GroupElement) -> Result<&T> {
        Ok(&self.coeffs[self.group.index_of(g)?])
    }

    pub fn coeff_at(&self, index: usize) -> &T {
        &self.coeffs[index]
    }

    /// Indices with nonzero coefficient, ascending.
    pub fn support(&self) -> Vec<usize> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, _)| i)
            .collect()
    }

    pub fn is_subset(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero() || c.is_one())
    }

    pub fn ensure_subset(&self) -> Result<()> {
        match self.coeffs.iter().find(|c| !(c.is_zero() || c.is_one())) {
            Some(c) => Err(Error::NotASubset(c.to_string())),
            None => Ok(()),
        }
    }

    /// `|A|` for a subset, or more generally the augmentation `sum_g a_g`.
    pub fn weight(&self) -> Result<T> {
        self.coeffs
            .iter()
            .try_fold(T::zero(), |acc, c| acc.add_checked(c, "augmentation"))
    }

    pub fn elements(&self) -> Vec<GroupElement> {
        self.support()
            .into_iter()
            .map(|i| self.group.element_at(i))
            .collect()
    }

    fn same_group(&self, other: &Self) -> Result<()> {
        if self.group != other.group {
            return Err(Error::GroupMismatch {
                left: self.group.orders().to_vec(),
                right: other.group.orders().to_vec(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_group(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a.add_checked(b, "group-ring sum"))
            .collect::<Result<_>>()?;
        Ok(Self {
            group: self.group.clone(),
            coeffs,
        })
    }

    /// The product `AB` with `[AB]_g = sum_h a_{g-h} b_h`, walking supports pairwise.
    pub fn convolve(&self, other: &Self) -> Result<Self> {
        self.same_group(other)?;
        let mut out = Self::zero(&self.group);
        let rhs: Vec<(usize, &T)> = other
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .collect();
        for (i, a) in self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for &(j, b) in &rhs {
                let k = self.group.add_indices(i, j);
                let prod = a.mul_checked(b, "convolution")?;
                out.coeffs[k] = out.coeffs[k].add_checked(&prod, "convolution")?;
            }
        }
        Ok(out)
    }

    /// `A^{(-1)} = sum_g a_g (-g)`.
    pub fn involution(&self) -> Self {
        let mut coeffs = vec![T::zero(); self.coeffs.len()];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[self.group.neg_index(i)] = c.clone();
        }
        Self {
            group: self.group.clone(),
            coeffs,
        }
    }

    /// `g + A`.
    pub fn translate(&self, g: &GroupElement) -> Result<Self> {
        let shift = self.group.index_of(g)?;
        let mut coeffs = vec![T::zero(); self.coeffs.len()];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[self.group.add_indices(i, shift)] = c.clone();
        }
        Ok(Self {
            group: self.group.clone(),
            coeffs,
        })
    }

    /// `A x B` in `G1 x G2` with coefficient `a_g b_h` at `(g, h)`.
    pub fn tensor(&self, other: &Self) -> Result<Self> {
        let group = self.group.product(&other.group);
        let mut coeffs = Vec::with_capacity(group.cardinality());
        for b in &other.coeffs {
            for a in &self.coeffs {
                coeffs.push(a.mul_checked(b, "tensor product")?);
            }
        }
        Ok(Self { group, coeffs })
    }

    /// `A A^{(-1)}`.
    pub fn difference_element(&self) -> Result<Self> {
        self.convolve(&self.involution())
    }

    /// Multiset of `[A A^{(-1)}]_g` over all `g`.
    pub fn difference_spectrum(&self) -> Result<Spectrum<T>> {
        Ok(Spectrum::from_values(self.difference_element()?.coeffs))
    }

    /// Reinterpret the coefficients in another scalar type.
    pub fn cast<U: Coeff>(&self) -> Result<GroupRingElement<U>> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| {
                c.to_i128()
                    .and_then(U::from_i128)
                    .ok_or(Error::Overflow("coefficient cast"))
            })
            .collect::<Result<_>>()?;
        Ok(GroupRingElement {
            group: self.group.clone(),
            coeffs,
        })
    }
}

/// Weight enumerator `nu_{A1,A2}(y) = #{(a1, a2) : y = a1 - a2}` for subsets.
pub fn weight_enumerator<T: Coeff>(
    a1: &GroupRingElement<T>,
    a2: &GroupRingElement<T>,
    y: &GroupElement,
) -> Result<T> {
    a1.ensure_subset()?;
    a2.ensure_subset()?;
    let prod = a1.convolve(&a2.involution())?;
    Ok(prod.coeff(y)?.clone())
}

impl<T: fmt::Debug> fmt::Debug for GroupRingElement<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GroupRingElement")
            .field("group", &self.group)
            .field("coeffs", &self.coeffs)
            .finish()
    }
}

/// A finite multiset of integers, `value -> frequency`, ordered by value.
///
/// Zero values are kept like any other value, so comparing two spectra
/// compares the full multiset rather than the support.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Spectrum<T: Ord> {
    entries: BTreeMap<T, u64>,
}

impl<T: Coeff> Spectrum<T> {
    pub fn new() -> Self {
        Self {
            entries: BTreeMap::new(),
        }
    }

    pub fn from_values<I: IntoIterator<Item = T>>(values: I) -> Self {
        let mut s = Self::new();
        for v in values {
            s.insert(v, 1);
        }
        s
    }

    /// Add `count` copies of `value`; a zero count is ignored.
    pub fn insert(&mut self, value: T, count: u64) {
        if count > 0 {
            *self.entries.entry(value).or_insert(0) += count;
        }
    }

    pub fn frequency(&self, value: &T) -> u64 {
        self.entries.get(value).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> &BTreeMap<T, u64> {
        &self.entries
    }

    pub fn iter(&self) -> impl Iterator<Item = (&T, u64)> {
        self.entries.iter().map(|(k, &v)| (k, v))
    }

    /// Number of elements counted with multiplicity.
    pub fn total(&self) -> u64 {
        self.entries.values().sum()
    }

    /// `sum value * frequency`.
    pub fn weighted_sum(&self) -> Result<T> {
        self.entries.iter().try_fold(T::zero(), |acc, (v, &f)| {
            let f = T::from_u64(f).ok_or(Error::Overflow("spectrum weight"))?;
            acc.add_checked(&v.mul_checked(&f, "spectrum weight")?, "spectrum weight")
        })
    }

    pub fn cast<U: Coeff>(&self) -> Result<Spectrum<U>> {
        let mut out = Spectrum::new();
        for (v, f) in self.iter() {
            let v = v
                .to_i128()
                .and_then(U::from_i128)
                .ok_or(Error::Overflow("spectrum cast"))?;
            out.insert(v, f);
        }
        Ok(out)
    }
}

impl<T: Coeff> Default for Spectrum<T> {
    fn default() -> Self {
        Self::new()
    }
}

impl<T: Coeff> FromIterator<(T, u64)> for Spectrum<T> {
    fn from_iter<I: IntoIterator<Item = (T, u64)>>(iter: I) -> Self {
        let mut s = Self::new();
        for (v, f) in iter {
            s.insert(v, f);
        }
        s
    }
}

/// Serialises as a JSON object with keys in ascending numeric order.
impl<T: Coeff> Serialize for Spectrum<T> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.entries.len()))?;
        for (v, f) in &self.entries {
            map.serialize_entry(&v.to_string(), f)?;
        }
        map.end()
    }
}

//! Finite abelian groups presented as products of cyclic groups.
//!
//! A [`GroupSpec`] `Z_{n_1} x ... x Z_{n_k}` fixes a mixed-radix
//! little-endian indexing of its elements: coordinate 0 is the fastest
//! varying digit. With that convention a Cartesian product `G1 x G2`
//! places `G1` in the low digits, so the product of two subsets is a
//! contiguous block operation on index vectors.
//!
//! Characters use the canonical pairing
//! `chi_y(x) = zeta^{sum_j (e / n_j) y_j x_j}` with `zeta = exp(2 pi i / e)`
//! and `e` the group exponent.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct GroupSpec {
    orders: Vec<u32>,
    strides: Vec<usize>,
    cardinality: usize,
    exponent: u32,
}

impl GroupSpec {
    pub fn new(orders: Vec<u32>) -> Result<Self> {
        if orders.is_empty() {
            return Err(Error::InvalidGroup("no cyclic factors".into()));
        }
        if let Some(bad) = orders.iter().find(|&&n| n < 2) {
            return Err(Error::InvalidGroup(format!("cyclic factor of order {bad}")));
        }
        let mut strides = Vec::with_capacity(orders.len());
        let mut cardinality: usize = 1;
        for &n in &orders {
            strides.push(cardinality);
            cardinality = cardinality
                .checked_mul(n as usize)
                .ok_or_else(|| Error::InvalidGroup("cardinality overflows usize".into()))?;
        }
        let exponent = orders.iter().fold(1u32, |acc, &n| acc.lcm(&n));
        Ok(Self {
            orders,
            strides,
            cardinality,
            exponent,
        })
    }

    /// `Z_2 x Z_4^{2m}`, the Z_2 factor first.
    pub fn z2_z4(m: usize) -> Result<Self> {
        let mut orders = vec![2];
        orders.extend(std::iter::repeat_n(4, 2 * m));
        Self::new(orders)
    }

    /// `Z_4^n`.
    pub fn z4(n: usize) -> Result<Self> {
        Self::new(vec![4; n])
    }

    pub fn orders(&self) -> &[u32] {
        &self.orders
    }

    pub fn rank(&self) -> usize {
        self.orders.len()
    }

    pub fn cardinality(&self) -> usize {
        self.cardinality
    }

    pub fn exponent(&self) -> u32 {
        self.exponent
    }

    pub fn strides(&self) -> &[usize] {
        &self.strides
    }

    /// The direct product `self x other`; `self` occupies the low digits.
    pub fn product(&self, other: &GroupSpec) -> GroupSpec {
        let mut orders = self.orders.clone();
        orders.extend_from_slice(&other.orders);
        GroupSpec::new(orders).expect("product of valid groups is valid")
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement {
            coords: vec![0; self.rank()],
        }
    }

    pub fn element(&self, coords: Vec<u32>) -> Result<GroupElement> {
        let e = GroupElement { coords };
        self.check(&e)?;
        Ok(e)
    }

    pub fn check(&self, e: &GroupElement) -> Result<()> {
        if e.coords.len() != self.rank() {
            return Err(Error::ElementMismatch {
                expected: self.rank(),
                found: e.coords.len(),
            });
        }
        for (index, (&value, &order)) in e.coords.iter().zip(&self.orders).enumerate() {
            if value >= order {
                return Err(Error::CoordinateOutOfRange {
                    index,
                    value,
                    order,
                });
            }
        }
        Ok(())
    }

    pub fn index_of(&self, e: &GroupElement) -> Result<usize> {
        self.check(e)?;
        Ok(self.index_unchecked(&e.coords))
    }

    pub(crate) fn index_unchecked(&self, coords: &[u32]) -> usize {
        coords
            .iter()
            .zip(&self.strides)
            .map(|(&c, &s)| c as usize * s)
            .sum()
    }

    pub fn element_at(&self, mut index: usize) -> GroupElement {
        assert!(index < self.cardinality, "index {index} out of range");
        let coords = self
            .orders
            .iter()
            .map(|&n| {
                let (q, r) = index.div_rem(&(n as usize));
                index = q;
                r as u32
            })
            .collect();
        GroupElement { coords }
    }

    pub fn elements(&self) -> impl Iterator<Item = GroupElement> + '_ {
        (0..self.cardinality).map(|i| self.element_at(i))
    }

    pub fn add(&self, a: &GroupElement, b: &GroupElement) -> Result<GroupElement> {
        self.check(a)?;
        self.check(b)?;
        let coords = a
            .coords
            .iter()
            .zip(&b.coords)
            .zip(&self.orders)
            .map(|((&x, &y), &n)| (x + y) % n)
            .collect();
        Ok(GroupElement { coords })
    }

    pub fn neg(&self, a: &GroupElement) -> Result<GroupElement> {
        self.check(a)?;
        let coords = a
            .coords
            .iter()
            .zip(&self.orders)
            .map(|(&x, &n)| (n - x) % n)
            .collect();
        Ok(GroupElement { coords })
    }

    pub fn sub(&self, a: &GroupElement, b: &GroupElement) -> Result<GroupElement> {
        self.add(a, &self.neg(b)?)
    }

    /// Index of `a + b`, digit by digit without materialising coordinates.
    pub fn add_indices(&self, mut a: usize, mut b: usize) -> usize {
        let mut out = 0;
        for (&n, &s) in self.orders.iter().zip(&self.strides) {
            let n = n as usize;
            let d = (a % n + b % n) % n;
            out += d * s;
            a /= n;
            b /= n;
        }
        out
    }

    pub fn neg_index(&self, mut a: usize) -> usize {
        let mut out = 0;
        for (&n, &s) in self.orders.iter().zip(&self.strides) {
            let n = n as usize;
            out += ((n - a % n) % n) * s;
            a /= n;
        }
        out
    }

    pub fn sub_indices(&self, a: usize, b: usize) -> usize {
        self.add_indices(a, self.neg_index(b))
    }

    /// `e` such that `chi_y(x) = zeta^e`, `zeta` a primitive exponent-th root of unity.
    pub fn character_exponent(&self, y: &GroupElement, x: &GroupElement) -> Result<u32> {
        self.check(y)?;
        self.check(x)?;
        Ok(self.character_exponent_unchecked(&y.coords, &x.coords))
    }

    pub(crate) fn character_exponent_unchecked(&self, y: &[u32], x: &[u32]) -> u32 {
        let e = self.exponent as u64;
        let total: u64 = y
            .iter()
            .zip(x)
            .zip(&self.orders)
            .map(|((&yj, &xj), &n)| (e / n as u64) * ((yj as u64 * xj as u64) % n as u64))
            .sum();
        (total % e) as u32
    }

    /// Sorted indices of the subgroup generated by `gens`.
    pub fn subgroup_generated<'a, I>(&self, gens: I) -> Result<Vec<usize>>
    where
        I: IntoIterator<Item = &'a GroupElement>,
    {
        let mut indices = Vec::new();
        for g in gens {
            indices.push(self.index_of(g)?);
        }
        Ok(self.subgroup_generated_by_indices(indices))
    }

    pub fn subgroup_generated_by_indices<I>(&self, gens: I) -> Vec<usize>
    where
        I: IntoIterator<Item = usize>,
    {
        let mut member = vec![false; self.cardinality];
        member[0] = true;
        let mut list = vec![0usize];
        for g in gens {
            if member[g] {
                continue;
            }
            // H <- H + <g>, walking multiples of g until they fall back into H.
            let base = list.clone();
            let in_base = member.clone();
            let mut step = g;
            while !in_base[step] {
                for &h in &base {
                    let x = self.add_indices(h, step);
                    if !member[x] {
                        member[x] = true;
                        list.push(x);
                    }
                }
                step = self.add_indices(step, g);
            }
        }
        list.sort_unstable();
        list
    }
}

impl TryFrom<Vec<u32>> for GroupSpec {
    type Error = Error;

    fn try_from(orders: Vec<u32>) -> Result<Self> {
        GroupSpec::new(orders)
    }
}

impl From<GroupSpec> for Vec<u32> {
    fn from(g: GroupSpec) -> Self {
        g.orders
    }
}

impl fmt::Debug for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroupSpec{:?}", self.orders)
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.orders.iter().map(|n| format!("Z{n}")).collect();
        f.write_str(&parts.join("x"))
    }
}

/// A tuple of residues, one per cyclic factor of its group.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GroupElement {
    pub coords: Vec<u32>,
}

impl GroupElement {
    pub fn new(coords: Vec<u32>) -> Self {
        Self { coords }
    }
}

impl From<Vec<u32>> for GroupElement {
    fn from(coords: Vec<u32>) -> Self {
        Self { coords }
    }
}

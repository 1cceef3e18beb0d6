//! The explicit objects of the direct construction in `Z_2 x Z_4^{2m}`.
//!
//! Elements of `Z_4^{2m}` are read as `m` blocks in `Z_4^2`: block `j` is
//! coordinates `(2j, 2j+1)`. Products of block sets are built with
//! [`GroupRingElement::tensor`], so block 0 occupies the lowest digits.

use crate::duality::{ensure_partition, is_primitive_subset, verify_formal_dual, DualPair};
use crate::error::{Error, Result};
use crate::group::{GroupElement, GroupSpec};
use crate::ring::GroupRingElement;
use crate::scalar::Coeff;

pub const L: [[u32; 2]; 4] = [[0, 0], [0, 1], [1, 0], [3, 3]];
pub const L1: [[u32; 2]; 3] = [[0, 0], [0, 1], [1, 0]];
pub const L2: [[u32; 2]; 1] = [[3, 3]];
pub const Z: [[u32; 2]; 3] = [[0, 2], [2, 0], [2, 2]];
pub const N11: [[u32; 2]; 6] = [[0, 1], [0, 3], [1, 0], [3, 0], [1, 3], [3, 1]];
pub const N12: [[u32; 2]; 3] = [[1, 1], [1, 2], [2, 1]];
pub const N21: [[u32; 2]; 3] = [[3, 3], [3, 2], [2, 3]];
pub const N22: [[u32; 2]; 1] = [[0, 0]];
pub const I: [[u32; 2]; 6] = [[0, 1], [0, 3], [1, 0], [3, 0], [1, 1], [3, 3]];
pub const Y: [[u32; 2]; 4] = [[0, 2], [2, 0], [2, 2], [0, 0]];

/// The constant subsets of `Z_4^2` the construction is assembled from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BaseSets<T> {
    pub l: GroupRingElement<T>,
    pub l1: GroupRingElement<T>,
    pub l2: GroupRingElement<T>,
    pub z: GroupRingElement<T>,
    pub n11: GroupRingElement<T>,
    pub n12: GroupRingElement<T>,
    pub n21: GroupRingElement<T>,
    pub n22: GroupRingElement<T>,
    pub i: GroupRingElement<T>,
    pub y: GroupRingElement<T>,
}

fn block_set<T: Coeff>(coords: &[[u32; 2]]) -> GroupRingElement<T> {
    let g = GroupSpec::z4(2).expect("Z_4^2");
    let elements: Vec<GroupElement> = coords
        .iter()
        .map(|c| GroupElement::new(c.to_vec()))
        .collect();
    GroupRingElement::from_elements(&g, &elements).expect("constant block sets are valid")
}

pub fn base_sets<T: Coeff>() -> BaseSets<T> {
    BaseSets {
        l: block_set(&L),
        l1: block_set(&L1),
        l2: block_set(&L2),
        z: block_set(&Z),
        n11: block_set(&N11),
        n12: block_set(&N12),
        n21: block_set(&N21),
        n22: block_set(&N22),
        i: block_set(&I),
        y: block_set(&Y),
    }
}

/// Membership of a single `Z_4^2` block in `Z_4^2 = N11 u N12 u N21 u N22 u Z`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BlockClass {
    N11,
    N12,
    N21,
    N22,
    Z,
}

pub fn classify_block(block: [u32; 2]) -> BlockClass {
    if N22.contains(&block) {
        BlockClass::N22
    } else if N11.contains(&block) {
        BlockClass::N11
    } else if N12.contains(&block) {
        BlockClass::N12
    } else if N21.contains(&block) {
        BlockClass::N21
    } else {
        debug_assert!(Z.contains(&block), "{block:?} is not in Z_4^2");
        BlockClass::Z
    }
}

/// The half of the partition `L = L1 u L2` a block of `E_{m,i}` is drawn from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Block {
    L1,
    L2,
}

/// A sequence of `m` block choices naming a Cartesian product in `Z_4^{2m}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BlockWord {
    pub blocks: Vec<Block>,
}

impl BlockWord {
    /// All words of length `m` with exactly `i` blocks equal to `L1`, in
    /// increasing order of the bitmask of `L1` positions.
    pub fn with_l1_count(m: usize, i: usize) -> Vec<BlockWord> {
        assert!(m < usize::BITS as usize);
        (0usize..1 << m)
            .filter(|mask| mask.count_ones() as usize == i)
            .map(|mask| BlockWord {
                blocks: (0..m)
                    .map(|j| if mask >> j & 1 == 1 { Block::L1 } else { Block::L2 })
                    .collect(),
            })
            .collect()
    }

    pub fn materialize<T: Coeff>(&self, base: &BaseSets<T>) -> Result<GroupRingElement<T>> {
        let parts: Vec<&GroupRingElement<T>> = self
            .blocks
            .iter()
            .map(|b| match b {
                Block::L1 => &base.l1,
                Block::L2 => &base.l2,
            })
            .collect();
        cartesian_product(&parts)
    }
}

/// `A_1 x A_2 x ... x A_k`, the first factor in the lowest digits.
pub fn cartesian_product<T: Coeff>(parts: &[&GroupRingElement<T>]) -> Result<GroupRingElement<T>> {
    let (first, rest) = parts
        .split_first()
        .ok_or_else(|| Error::OutOfRange("empty Cartesian product".into()))?;
    rest.iter()
        .try_fold((*first).clone(), |acc, p| acc.tensor(p))
}

/// `A x ... x A` (`m` factors).
pub fn cartesian_power<T: Coeff>(a: &GroupRingElement<T>, m: usize) -> Result<GroupRingElement<T>> {
    cartesian_product(&vec![a; m])
}

/// How much to trust the inputs of [`product_pair`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Inputs {
    /// Check duality and primitivity of both inputs first.
    Verify,
    /// The caller vouches for both inputs.
    Trusted,
}

/// `(S1 x S2, T1 x T2)` in `G1 x G2`.
pub fn product_pair<T: Coeff>(p1: &DualPair<T>, p2: &DualPair<T>, inputs: Inputs) -> Result<DualPair<T>> {
    if inputs == Inputs::Verify {
        for (k, p) in [p1, p2].into_iter().enumerate() {
            if !verify_formal_dual(p)?.holds {
                return Err(Error::Precondition(format!("input pair {} is not formally dual", k + 1)));
            }
            if !is_primitive_subset(&p.s)?.is_primitive() || !is_primitive_subset(&p.t)?.is_primitive() {
                return Err(Error::Precondition(format!("input pair {} is not primitive", k + 1)));
            }
        }
    }
    DualPair::new(p1.s.tensor(&p2.s)?, p1.t.tensor(&p2.t)?)
}

/// `E_{m,i}`: the union of all block words with `i` blocks `L1` and `m - i` blocks `L2`.
pub fn e_set<T: Coeff>(m: usize, i: usize) -> Result<GroupRingElement<T>> {
    if m == 0 || i > m {
        return Err(Error::OutOfRange(format!("E(m = {m}, i = {i})")));
    }
    let base = base_sets::<T>();
    let mut out = GroupRingElement::zero(&GroupSpec::z4(2 * m)?);
    for word in BlockWord::with_l1_count(m, i) {
        out = out.add(&word.materialize(&base)?)?;
    }
    debug_assert!(out.is_subset(), "block words overlap");
    Ok(out)
}

/// `(S0, S1)`: `S0` collects the `E_{m,i}` with `i = m (mod 2)`, `S1` the rest.
pub fn build_partition<T: Coeff>(m: usize) -> Result<(GroupRingElement<T>, GroupRingElement<T>)> {
    if m == 0 {
        return Err(Error::OutOfRange("m must be at least 1".into()));
    }
    let g = GroupSpec::z4(2 * m)?;
    let mut s0 = GroupRingElement::zero(&g);
    let mut s1 = GroupRingElement::zero(&g);
    for i in 0..=m {
        let e = e_set(m, i)?;
        if i % 2 == m % 2 {
            s0 = s0.add(&e)?;
        } else {
            s1 = s1.add(&e)?;
        }
    }
    Ok((s0, s1))
}

/// `S' = {0} x S0 u {1} x S1` and `T' = {0} x T u {1} x T^{(-1)}` in `Z_2 x G`.
pub fn lift<T: Coeff>(
    s0: &GroupRingElement<T>,
    s1: &GroupRingElement<T>,
    t: &GroupRingElement<T>,
) -> Result<(GroupRingElement<T>, GroupRingElement<T>)> {
    ensure_partition(s0, s1)?;
    t.ensure_subset()?;
    if t.group() != s0.group() {
        return Err(Error::GroupMismatch {
            left: s0.group().orders().to_vec(),
            right: t.group().orders().to_vec(),
        });
    }
    let z2 = GroupSpec::new(vec![2])?;
    let at = |a: usize| GroupRingElement::<T>::from_indices(&z2, [a]);
    let s = at(0)?.tensor(s0)?.add(&at(1)?.tensor(s1)?)?;
    let t = at(0)?.tensor(t)?.add(&at(1)?.tensor(&t.involution())?)?;
    Ok((s, t))
}

/// Whether [`direct_construction_with`] re-verifies its output.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SelfCheck {
    On,
    Off,
}

/// The primitive formally dual pair `(S', T')` in `Z_2 x Z_4^{2m}`, verified.
pub fn direct_construction<T: Coeff>(m: usize) -> Result<DualPair<T>> {
    direct_construction_with(m, SelfCheck::On)
}

pub fn direct_construction_with<T: Coeff>(m: usize, check: SelfCheck) -> Result<DualPair<T>> {
    if m == 0 {
        return Err(Error::OutOfRange("m must be at least 1".into()));
    }
    let base = base_sets::<T>();
    let t = cartesian_power(&base.l, m)?;
    let (s0, s1) = build_partition(m)?;
    let (s_lift, t_lift) = lift(&s0, &s1, &t)?;
    let pair = DualPair::new(s_lift, t_lift)?;
    if check == SelfCheck::On {
        let report = verify_formal_dual(&pair)?;
        if !report.holds {
            return Err(Error::Inconsistent(format!(
                "constructed pair for m = {m} fails duality at {:?}",
                report.first_failure.map(|f| f.y.coords)
            )));
        }
        for (name, set) in [("S'", &pair.s), ("T'", &pair.t)] {
            let verdict = is_primitive_subset(set)?;
            if !verdict.is_primitive() {
                return Err(Error::Inconsistent(format!(
                    "constructed {name} for m = {m} is not primitive: {verdict:?}"
                )));
            }
        }
    }
    Ok(pair)
}

/// The piece of the partition `Z_4^{2m} = (u F_{m,u,v,w}) u M_m` holding an element.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Stratum {
    /// Some block lies in `Z`.
    M,
    /// `w` blocks in N11, `u - w` in N12, `v - w` in N21, `m - u - v + w` in N22.
    F { u: usize, v: usize, w: usize },
}

impl Stratum {
    /// `F_{m,u,v,w}`, rejecting parameters outside `max(0, u+v-m) <= w <= min(u, v)`.
    pub fn f(m: usize, u: usize, v: usize, w: usize) -> Result<Self> {
        let lower = (u + v).saturating_sub(m);
        if u > m || v > m || w < lower || w > u.min(v) {
            return Err(Error::OutOfRange(format!(
                "F(m = {m}, u = {u}, v = {v}, w = {w})"
            )));
        }
        Ok(Stratum::F { u, v, w })
    }

    /// Every `F` stratum of `Z_4^{2m}`.
    pub fn all_f(m: usize) -> Vec<Stratum> {
        let mut out = Vec::new();
        for u in 0..=m {
            for v in 0..=m {
                for w in (u + v).saturating_sub(m)..=u.min(v) {
                    out.push(Stratum::F { u, v, w });
                }
            }
        }
        out
    }

    /// `m - u - v + w`, the number of N22 blocks.
    pub fn free_blocks(&self, m: usize) -> Option<usize> {
        match *self {
            Stratum::M => None,
            Stratum::F { u, v, w } => Some(m + w - u - v),
        }
    }
}

fn blocks_of(z: &GroupElement) -> Result<Vec<[u32; 2]>> {
    let g = GroupSpec::z4(z.coords.len().max(2))?;
    g.check(z)?;
    if !z.coords.len().is_multiple_of(2) {
        return Err(Error::ElementMismatch {
            expected: z.coords.len() + 1,
            found: z.coords.len(),
        });
    }
    Ok(z.coords.chunks(2).map(|c| [c[0], c[1]]).collect())
}

/// Stratum of `z` in `Z_4^{2m}`.
pub fn classify_stratum(z: &GroupElement) -> Result<Stratum> {
    let blocks = blocks_of(z)?;
    let m = blocks.len();
    let (mut n11, mut n12, mut n21) = (0, 0, 0);
    for b in blocks {
        match classify_block(b) {
            BlockClass::Z => return Ok(Stratum::M),
            BlockClass::N11 => n11 += 1,
            BlockClass::N12 => n12 += 1,
            BlockClass::N21 => n21 += 1,
            BlockClass::N22 => {}
        }
    }
    Stratum::f(m, n11 + n12, n11 + n21, n11)
}

/// `sigma(z) = (z_{sigma(1)}, ..., z_{sigma(m)})` on blocks.
pub fn permute_blocks(z: &GroupElement, sigma: &[usize]) -> Result<GroupElement> {
    let blocks = blocks_of(z)?;
    if sigma.len() != blocks.len() {
        return Err(Error::OutOfRange(format!(
            "permutation of length {} on {} blocks",
            sigma.len(),
            blocks.len()
        )));
    }
    let coords = sigma.iter().flat_map(|&j| blocks[j]).collect();
    Ok(GroupElement::new(coords))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::GroupElement;

    fn el(c: &[u32]) -> GroupElement {
        GroupElement::new(c.to_vec())
    }

    #[test]
    fn n_sets_match_their_definitions() {
        let b = base_sets::<i64>();
        let support = |a: &GroupRingElement<i64>| a.support();
        let mut n11 = b.l1.convolve(&b.l1.involution()).unwrap();
        n11 = GroupRingElement::from_indices(n11.group(), n11.support().into_iter().filter(|&i| i != 0)).unwrap();
        assert_eq!(support(&n11), support(&b.n11));
        assert_eq!(support(&b.l1.convolve(&b.l2.involution()).unwrap()), support(&b.n12));
        assert_eq!(support(&b.l2.convolve(&b.l1.involution()).unwrap()), support(&b.n21));
        assert_eq!(support(&b.l2.convolve(&b.l2.involution()).unwrap()), support(&b.n22));
        let total = [&b.n11, &b.n12, &b.n21, &b.n22, &b.z]
            .iter()
            .map(|a| a.weight().unwrap())
            .sum::<i64>();
        assert_eq!(total, 16);
        let union = b.n11.add(&b.n12).unwrap().add(&b.n21).unwrap().add(&b.n22).unwrap().add(&b.z).unwrap();
        assert!(union.coeffs().iter().all(|&c| c == 1));
    }

    #[test]
    fn n12_n21_union() {
        let b = base_sets::<i64>();
        let u = b.n12.add(&b.n21).unwrap();
        let expected = GroupRingElement::from_coords(
            b.l.group(),
            &[&[1, 1], &[3, 3], &[1, 2], &[3, 2], &[2, 1], &[2, 3]],
        )
        .unwrap();
        assert_eq!(u, expected);
    }

    #[test]
    fn e_sets() {
        let b = base_sets::<i64>();
        assert_eq!(e_set::<i64>(1, 1).unwrap(), b.l1);
        assert_eq!(e_set::<i64>(1, 0).unwrap(), b.l2);
        assert_eq!(e_set::<i64>(2, 1).unwrap().weight().unwrap(), 6);
        assert!(matches!(e_set::<i64>(2, 3), Err(Error::OutOfRange(_))));
        for m in 1..=3 {
            let mut union = GroupRingElement::zero(&GroupSpec::z4(2 * m).unwrap());
            for i in 0..=m {
                let e = e_set::<i64>(m, i).unwrap();
                let binom = (0..i).fold(1i64, |acc, k| acc * (m - k) as i64 / (k + 1) as i64);
                assert_eq!(e.weight().unwrap(), binom * 3i64.pow(i as u32));
                union = union.add(&e).unwrap();
            }
            assert_eq!(union, cartesian_power(&b.l, m).unwrap());
        }
    }

    #[test]
    fn partitions() {
        let b = base_sets::<i64>();
        let (s0, s1) = build_partition::<i64>(1).unwrap();
        assert_eq!((s0.clone(), s1.clone()), (b.l1.clone(), b.l2.clone()));
        let (s0, s1) = build_partition::<i64>(2).unwrap();
        assert_eq!((s0.weight().unwrap(), s1.weight().unwrap()), (10, 6));
        for m in 1..=4 {
            let (s0, s1) = build_partition::<i64>(m).unwrap();
            assert_eq!(s0.weight().unwrap() + s1.weight().unwrap(), 4i64.pow(m as u32));
            assert_eq!(s0.add(&s1).unwrap(), cartesian_power(&b.l, m).unwrap());
        }
    }

    #[test]
    fn lift_m1() {
        let b = base_sets::<i64>();
        let (s, t) = lift(&b.l1, &b.l2, &b.l).unwrap();
        let g = GroupSpec::new(vec![2, 4, 4]).unwrap();
        let expected =
            GroupRingElement::from_coords(&g, &[&[0, 0, 0], &[0, 0, 1], &[0, 1, 0], &[1, 3, 3]]).unwrap();
        assert_eq!(s, expected);
        assert_eq!(t.weight().unwrap(), 8);
        assert_eq!(lift(&b.l, &b.l1, &b.l), Err(Error::Overlap(0)));
    }

    #[test]
    fn degenerate_lifts_are_not_primitive() {
        let b = base_sets::<i64>();
        let empty = GroupRingElement::zero(b.l.group());
        let (s, _) = lift(&b.l, &empty, &b.l).unwrap();
        assert!(!is_primitive_subset(&s).unwrap().spans_group());
        let sym = GroupRingElement::<i64>::from_coords(b.l.group(), &[&[0, 0], &[2, 2], &[0, 1], &[0, 3]]).unwrap();
        let (_, t) = lift(&b.l, &empty, &sym).unwrap();
        assert_eq!(
            is_primitive_subset(&t).unwrap().period,
            Some(el(&[1, 0, 0]))
        );
    }

    #[test]
    fn product_pair_of_base() {
        let b = base_sets::<i64>();
        let p = DualPair::new(b.l.clone(), b.l.clone()).unwrap();
        let q = product_pair(&p, &p, Inputs::Verify).unwrap();
        assert_eq!(q.group().orders(), &[4, 4, 4, 4]);
        assert_eq!(q.s.weight().unwrap(), 16);
        assert!(verify_formal_dual(&q).unwrap().holds);
        let bad = DualPair::new(b.l1.clone(), b.l.clone()).unwrap();
        assert!(matches!(product_pair(&p, &bad, Inputs::Verify), Err(Error::Precondition(_))));
        assert!(product_pair(&p, &bad, Inputs::Trusted).is_ok());
    }

    #[test]
    fn direct_construction_sizes() {
        for (m, s, t, g) in [(1usize, 4i64, 8i64, 32usize), (2, 16, 32, 512)] {
            let pair = direct_construction::<i64>(m).unwrap();
            assert_eq!(pair.s.weight().unwrap(), s);
            assert_eq!(pair.t.weight().unwrap(), t);
            assert_eq!(pair.group().cardinality(), g);
        }
        assert!(direct_construction::<i64>(0).is_err());
    }

    #[test]
    fn strata() {
        assert_eq!(classify_stratum(&el(&[0, 0])).unwrap(), Stratum::F { u: 0, v: 0, w: 0 });
        assert_eq!(classify_stratum(&el(&[0, 0, 0, 0, 0, 0])).unwrap(), Stratum::F { u: 0, v: 0, w: 0 });
        assert_eq!(classify_stratum(&el(&[1, 2])).unwrap(), Stratum::F { u: 1, v: 0, w: 0 });
        assert_eq!(classify_stratum(&el(&[0, 2, 0, 0])).unwrap(), Stratum::M);
        assert!(Stratum::f(2, 2, 2, 1).is_err());
        assert!(Stratum::f(2, 1, 1, 2).is_err());
        assert!(Stratum::f(2, 2, 1, 1).is_ok());
        assert!(classify_stratum(&el(&[0, 0, 1])).is_err());
    }

    #[test]
    fn strata_partition_the_group() {
        for m in 1..=3 {
            let g = GroupSpec::z4(2 * m).unwrap();
            let mut counts = std::collections::HashMap::new();
            for z in g.elements() {
                *counts.entry(classify_stratum(&z).unwrap()).or_insert(0usize) += 1;
            }
            for s in Stratum::all_f(m) {
                let Stratum::F { u, v, w } = s else { unreachable!() };
                // |F| = multinomial(m; w, u-w, v-w, rest) * 6^w * 3^{u-w} * 3^{v-w}.
                let fact = |n: usize| (1..=n).product::<usize>();
                let rest = m + w - u - v;
                let words = fact(m) / (fact(w) * fact(u - w) * fact(v - w) * fact(rest));
                let size = words * 6usize.pow(w as u32) * 3usize.pow((u + v - 2 * w) as u32);
                assert_eq!(counts.get(&s).copied().unwrap_or(0), size, "{s:?}");
            }
            let f_total: usize = Stratum::all_f(m).iter().map(|s| counts[s]).sum();
            assert_eq!(f_total + counts.get(&Stratum::M).copied().unwrap_or(0), g.cardinality());
            assert_eq!(f_total, 13usize.pow(m as u32));
        }
    }
}

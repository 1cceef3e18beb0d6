//! Formal duality, primitivity, the lifting criterion and equivalence invariants.
//!
//! `S` and `T` form a formally dual pair in `G` when
//! `|chi_y(S)|^2 = (|S|^2 / |T|) nu_T(y)` for every `y`, with characters
//! taken under the canonical pairing of [`GroupSpec`]. In exponent-4 groups
//! both sides are compared as exact integers.

use crate::error::{Error, Result};
use crate::group::{GroupElement, GroupSpec};
use crate::ring::{GroupRingElement, Spectrum};
use crate::scalar::Coeff;
use crate::transform::character_norms;

/// A candidate pair of subsets of one group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualPair<T> {
    pub s: GroupRingElement<T>,
    pub t: GroupRingElement<T>,
}

impl<T: Coeff> DualPair<T> {
    pub fn new(s: GroupRingElement<T>, t: GroupRingElement<T>) -> Result<Self> {
        if s.group() != t.group() {
            return Err(Error::GroupMismatch {
                left: s.group().orders().to_vec(),
                right: t.group().orders().to_vec(),
            });
        }
        for a in [&s, &t] {
            a.ensure_subset()?;
            if a.support().is_empty() {
                return Err(Error::EmptySubset);
            }
        }
        Ok(Self { s, t })
    }

    pub fn group(&self) -> &GroupSpec {
        self.s.group()
    }

    pub fn swapped(&self) -> Self {
        Self {
            s: self.t.clone(),
            t: self.s.clone(),
        }
    }
}

/// The first character at which the defining equation breaks.
///
/// `rhs_numer / rhs_denom` is `(|S|^2 / |T|) nu_T(y)` in lowest terms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualityFailure<T> {
    pub y: GroupElement,
    pub lhs: T,
    pub rhs_numer: T,
    pub rhs_denom: T,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualityReport<T> {
    pub holds: bool,
    pub first_failure: Option<DualityFailure<T>>,
    /// Characters examined, in canonical index order, up to and including a failure.
    pub checked: usize,
}

/// Check `|chi_y(S)|^2 = (|S|^2/|T|) nu_T(y)` for every `y`.
pub fn verify_formal_dual<T: Coeff>(pair: &DualPair<T>) -> Result<DualityReport<T>> {
    let group = pair.group();
    let lhs = character_norms(&pair.s)?;
    let nu_t = pair.t.difference_element()?;
    let s_size = pair.s.weight()?;
    let t_size = pair.t.weight()?;
    let s_sq = s_size.mul_checked(&s_size, "|S|^2")?;
    for (yi, l) in lhs.into_iter().enumerate() {
        let numer = s_sq.mul_checked(nu_t.coeff_at(yi), "duality rhs")?;
        let (rhs, rem) = numer.div_rem(&t_size);
        if !rem.is_zero() || rhs != l {
            let g = numer.gcd(&t_size);
            return Ok(DualityReport {
                holds: false,
                first_failure: Some(DualityFailure {
                    y: group.element_at(yi),
                    lhs: l,
                    rhs_numer: numer / g.clone(),
                    rhs_denom: t_size / g,
                }),
                checked: yi + 1,
            });
        }
    }
    Ok(DualityReport {
        holds: true,
        first_failure: None,
        checked: group.cardinality(),
    })
}

/// The same check with the roles of `S` and `T` exchanged.
pub fn verify_dual_symmetric<T: Coeff>(pair: &DualPair<T>) -> Result<bool> {
    Ok(verify_formal_dual(&pair.swapped())?.holds)
}

/// Outcome of both primitivity conditions for one subset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Primitivity {
    /// Order of the subgroup generated by the differences `s - s0`.
    pub generated_order: usize,
    pub group_order: usize,
    /// A nonzero `h` with `S + h = S`, if one exists.
    pub period: Option<GroupElement>,
}

impl Primitivity {
    /// `S` is not contained in a coset of a proper subgroup.
    pub fn spans_group(&self) -> bool {
        self.generated_order == self.group_order
    }

    /// `S` is not a union of cosets of a nontrivial subgroup.
    pub fn aperiodic(&self) -> bool {
        self.period.is_none()
    }

    pub fn is_primitive(&self) -> bool {
        self.spans_group() && self.aperiodic()
    }
}

/// Primitivity via the subgroup generated by differences and the stabiliser of `S`.
pub fn is_primitive_subset<T: Coeff>(s: &GroupRingElement<T>) -> Result<Primitivity> {
    s.ensure_subset()?;
    let group = s.group();
    let support = s.support();
    let &s0 = support.first().ok_or(Error::EmptySubset)?;
    let diffs: Vec<usize> = support.iter().map(|&x| group.sub_indices(x, s0)).collect();
    let generated = group.subgroup_generated_by_indices(diffs.iter().copied());
    // Any period h maps s0 into S, so h is one of the differences.
    let member: Vec<bool> = s.coeffs().iter().map(|c| c.is_one()).collect();
    let period = diffs
        .iter()
        .copied()
        .filter(|&h| h != 0)
        .find(|&h| support.iter().all(|&x| member[group.add_indices(x, h)]))
        .map(|h| group.element_at(h));
    Ok(Primitivity {
        generated_order: generated.len(),
        group_order: group.cardinality(),
        period,
    })
}

/// Whether `S' = {0} x S0 u {1} x S1` and `T' = {0} x T u {1} x T^{(-1)}` pass the
/// lifting criterion `|chi_z(T + T^{(-1)})|^2 = (4|T|^2/|S|)(nu_{S0}(z) + nu_{S1}(z))`.
pub fn check_lifting_condition<T: Coeff>(
    t: &GroupRingElement<T>,
    s0: &GroupRingElement<T>,
    s1: &GroupRingElement<T>,
) -> Result<bool> {
    ensure_partition(s0, s1)?;
    t.ensure_subset()?;
    if s0.group() != t.group() {
        return Err(Error::GroupMismatch {
            left: t.group().orders().to_vec(),
            right: s0.group().orders().to_vec(),
        });
    }
    let s_size = s0.weight()?.add_checked(&s1.weight()?, "|S|")?;
    if s_size.is_zero() {
        return Err(Error::EmptySubset);
    }
    let t_size = t.weight()?;
    let lhs = character_norms(&t.add(&t.involution())?)?;
    let nu = s0.difference_element()?.add(&s1.difference_element()?)?;
    let four = T::from_u8(4).expect("4 fits");
    let scale = four.mul_checked(&t_size.mul_checked(&t_size, "|T|^2")?, "lifting rhs")?;
    for (l, n) in lhs.iter().zip(nu.coeffs()) {
        let left = l.mul_checked(&s_size, "lifting lhs")?;
        let right = scale.mul_checked(n, "lifting rhs")?;
        if left != right {
            return Ok(false);
        }
    }
    Ok(true)
}

pub(crate) fn ensure_partition<T: Coeff>(
    s0: &GroupRingElement<T>,
    s1: &GroupRingElement<T>,
) -> Result<()> {
    if s0.group() != s1.group() {
        return Err(Error::GroupMismatch {
            left: s0.group().orders().to_vec(),
            right: s1.group().orders().to_vec(),
        });
    }
    s0.ensure_subset()?;
    s1.ensure_subset()?;
    match s0
        .coeffs()
        .iter()
        .zip(s1.coeffs())
        .position(|(a, b)| a.is_one() && b.is_one())
    {
        Some(i) => Err(Error::Overlap(i)),
        None => Ok(()),
    }
}

/// Difference and character spectra; equal for equivalent sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivalenceInvariants<T: Coeff> {
    pub difference: Spectrum<T>,
    pub character: Spectrum<T>,
}

pub fn equivalence_invariants<T: Coeff>(s: &GroupRingElement<T>) -> Result<EquivalenceInvariants<T>> {
    s.ensure_subset()?;
    Ok(EquivalenceInvariants {
        difference: s.difference_spectrum()?,
        character: Spectrum::from_values(character_norms(s)?),
    })
}

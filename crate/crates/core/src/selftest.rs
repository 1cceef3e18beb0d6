//! Oracle-versus-closed-form checks over the direct construction for small `m`.
//!
//! Every closed form is compared against brute-force convolution or direct
//! character-sum evaluation at every group element. The fast transform is
//! injected so a deliberately broken transform can be shown to fail.

use std::fmt;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::constructions::{
    base_sets, build_partition, cartesian_power, classify_stratum, direct_construction_with, e_set,
    SelfCheck, Stratum,
};
use crate::duality::{check_lifting_condition, is_primitive_subset, verify_dual_symmetric, verify_formal_dual};
use crate::error::Result;
use crate::group::GroupSpec;
use crate::ring::GroupRingElement;
use crate::spectra::{
    e_cross_coefficient, partition_difference_closed_form, t_sym_norm_closed_form, tprime_diff_element,
    tprime_spectrum_closed_form, tt_coefficient, tt_inv_coefficient,
};
use crate::transform::{full_character_sums, inverse_transform, naive_character_sums, CharacterTable};

pub type CharacterSumsFn = fn(&GroupRingElement<i64>) -> Result<CharacterTable<i64>>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: String,
    pub m: usize,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Default)]
pub struct SelftestReport {
    pub checks: Vec<CheckOutcome>,
    pub elapsed: Duration,
}

impl SelftestReport {
    pub fn passed(&self) -> bool {
        !self.checks.is_empty() && self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckOutcome> {
        self.checks.iter().filter(|c| !c.passed)
    }

    fn record(&mut self, name: &str, m: usize, outcome: Result<std::result::Result<(), String>>) {
        let (passed, detail) = match outcome {
            Ok(Ok(())) => (true, String::new()),
            Ok(Err(why)) => (false, why),
            Err(e) => (false, format!("error: {e}")),
        };
        self.checks.push(CheckOutcome {
            name: name.to_string(),
            m,
            passed,
            detail,
        });
    }
}

impl fmt::Display for SelftestReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let status = if c.passed { "PASS" } else { "FAIL" };
            write!(f, "{status} m={} {}", c.m, c.name)?;
            if !c.detail.is_empty() {
                write!(f, " ({})", c.detail)?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

type Check = std::result::Result<(), String>;

fn expect_eq<V: PartialEq + fmt::Debug>(what: &str, got: V, want: V) -> Check {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: got {got:?}, expected {want:?}"))
    }
}

pub fn run_selftest(max_m: usize) -> SelftestReport {
    run_selftest_with(max_m, full_character_sums::<i64>)
}

pub fn run_selftest_with(max_m: usize, sums: CharacterSumsFn) -> SelftestReport {
    let start = Instant::now();
    let mut report = SelftestReport::default();
    report.record("transform on random subsets", 0, check_transform(sums));
    for m in 1..=max_m {
        report.record("construction is formally dual", m, check_duality(m));
        report.record("T' difference spectrum", m, check_tprime_spectrum(m));
        report.record("T' difference coefficients", m, check_tprime_elements(m));
        report.record("TT and TT^(-1) coefficients", m, check_tt(m));
        report.record("E cross-difference coefficients", m, check_e_lemma(m));
        report.record("S0/S1 difference sum", m, check_partition(m));
        report.record("|chi(T + T^(-1))|^2", m, check_t_sym(m, sums));
        report.record("lifting criterion", m, check_lifting(m));
    }
    report.elapsed = start.elapsed();
    report
}

fn check_transform(sums: CharacterSumsFn) -> Result<Check> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for orders in [vec![4, 4], vec![2, 4, 4], vec![2, 4, 4, 4, 4], vec![4, 2, 2, 4]] {
        let g = GroupSpec::new(orders)?;
        for _ in 0..8 {
            let coeffs: Vec<i64> = (0..g.cardinality()).map(|_| rng.gen_range(0..2)).collect();
            let a = GroupRingElement::from_coeffs(&g, coeffs)?;
            let fast = sums(&a)?;
            if fast != naive_character_sums(&a)? {
                return Ok(Err(format!("fast and naive character sums differ on {g}")));
            }
            match inverse_transform(&fast) {
                Ok(back) if back == a => {}
                _ => return Ok(Err(format!("inverse transform does not round-trip on {g}"))),
            }
        }
    }
    Ok(Ok(()))
}

fn check_duality(m: usize) -> Result<Check> {
    let pair = direct_construction_with::<i64>(m, SelfCheck::Off)?;
    let report = verify_formal_dual(&pair)?;
    if !report.holds {
        return Ok(Err(format!("fails at {:?}", report.first_failure)));
    }
    if !verify_dual_symmetric(&pair)? {
        return Ok(Err("swapped equation fails".into()));
    }
    for (name, set) in [("S'", &pair.s), ("T'", &pair.t)] {
        let p = is_primitive_subset(set)?;
        if !p.is_primitive() {
            return Ok(Err(format!("{name} not primitive: {p:?}")));
        }
    }
    let sizes = pair.s.weight()? * pair.t.weight()?;
    Ok(expect_eq("|S'||T'|", sizes, pair.group().cardinality() as i64))
}

fn check_tprime_spectrum(m: usize) -> Result<Check> {
    let pair = direct_construction_with::<i64>(m, SelfCheck::Off)?;
    let brute = pair.t.difference_spectrum()?;
    let closed = tprime_spectrum_closed_form::<i64>(m)?;
    Ok(expect_eq("spectrum", brute, closed.spectrum))
}

fn check_tprime_elements(m: usize) -> Result<Check> {
    let pair = direct_construction_with::<i64>(m, SelfCheck::Off)?;
    let d = pair.t.difference_element()?;
    let g = pair.group();
    for (i, c) in d.coeffs().iter().enumerate() {
        let x = g.element_at(i);
        let closed = tprime_diff_element::<i64>(&x)?;
        if closed != *c {
            return Ok(Err(format!("at {:?}: convolution {c}, closed form {closed}", x.coords)));
        }
    }
    Ok(Ok(()))
}

fn check_tt(m: usize) -> Result<Check> {
    let t = cartesian_power(&base_sets::<i64>().l, m)?;
    let tt_inv = t.difference_element()?;
    let tt = t.convolve(&t)?;
    let tinv = t.involution();
    if tt != tinv.convolve(&tinv)? {
        return Ok(Err("TT differs from T^(-1)T^(-1)".into()));
    }
    let g = t.group();
    for i in 0..g.cardinality() {
        let x = g.element_at(i);
        if *tt_inv.coeff_at(i) != tt_inv_coefficient::<i64>(&x)? {
            return Ok(Err(format!("[TT^(-1)] at {:?}", x.coords)));
        }
        if *tt.coeff_at(i) != tt_coefficient::<i64>(&x)? {
            return Ok(Err(format!("[TT] at {:?}", x.coords)));
        }
    }
    Ok(Ok(()))
}

fn check_e_lemma(m: usize) -> Result<Check> {
    let es: Vec<GroupRingElement<i64>> = (0..=m).map(|i| e_set(m, i)).collect::<Result<_>>()?;
    let g = GroupSpec::z4(2 * m)?;
    let strata: Vec<Stratum> = g.elements().map(|z| classify_stratum(&z)).collect::<Result<_>>()?;
    for i in 0..=m {
        for j in 0..=m {
            let prod = es[i].convolve(&es[j].involution())?;
            for (k, stratum) in strata.iter().enumerate() {
                let c = *prod.coeff_at(k);
                let expected = match *stratum {
                    Stratum::M => 0,
                    Stratum::F { u, v, .. } => {
                        let free = stratum.free_blocks(m).expect("F");
                        if i >= u && j >= v && i - u == j - v && i - u <= free {
                            e_cross_coefficient::<i64>(m, *stratum, i - u)?
                        } else {
                            0
                        }
                    }
                };
                if c != expected {
                    return Ok(Err(format!(
                        "[E_{i} E_{j}^(-1)] at {:?} in {stratum:?}: {c} vs {expected}",
                        g.element_at(k).coords
                    )));
                }
            }
        }
    }
    Ok(Ok(()))
}

fn check_partition(m: usize) -> Result<Check> {
    let (s0, s1) = build_partition::<i64>(m)?;
    let sum = s0.difference_element()?.add(&s1.difference_element()?)?;
    let g = sum.group();
    for (k, c) in sum.coeffs().iter().enumerate() {
        let z = g.element_at(k);
        let expected = partition_difference_closed_form::<i64>(m, classify_stratum(&z)?)?;
        if *c != expected {
            return Ok(Err(format!("at {:?}: {c} vs {expected}", z.coords)));
        }
    }
    Ok(Ok(()))
}

fn check_t_sym(m: usize, sums: CharacterSumsFn) -> Result<Check> {
    let t = cartesian_power(&base_sets::<i64>().l, m)?;
    let table = sums(&t.add(&t.involution())?)?;
    let g = t.group();
    for (k, s) in table.sums().iter().enumerate() {
        let z = g.element_at(k);
        let expected = t_sym_norm_closed_form::<i64>(m, classify_stratum(&z)?)?;
        if s.norm() != expected {
            return Ok(Err(format!("at {:?}: {} vs {expected}", z.coords, s.norm())));
        }
    }
    Ok(Ok(()))
}

fn check_lifting(m: usize) -> Result<Check> {
    let t = cartesian_power(&base_sets::<i64>().l, m)?;
    let (s0, s1) = build_partition::<i64>(m)?;
    if check_lifting_condition(&t, &s0, &s1)? {
        Ok(Ok(()))
    } else {
        Ok(Err("criterion fails on the constructed partition".into()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn selftest_m2_passes() {
        let report = run_selftest(2);
        assert!(report.passed(), "{report}");
        assert_eq!(report.checks.len(), 1 + 2 * 8);
    }

    fn sign_flipped(a: &GroupRingElement<i64>) -> Result<CharacterTable<i64>> {
        let t = full_character_sums(a)?;
        let sums = t.sums().iter().map(|s| s.conj()).collect();
        CharacterTable::from_sums(a.group(), sums)
    }

    #[test]
    fn broken_transform_is_caught() {
        let report = run_selftest_with(1, sign_flipped);
        assert!(!report.passed());
        assert!(report.failures().any(|c| c.name == "transform on random subsets"));
    }
}

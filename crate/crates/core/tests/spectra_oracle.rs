mod common;

use std::collections::BTreeMap;

use fdk_core::{
    direct_construction, tprime_diff_element, tprime_spectrum_closed_form, tt_coefficient, tt_inv_coefficient,
    GroupSpec, Pair,
};

fn frozen(entries: &[(i64, u64)]) -> BTreeMap<i64, u64> {
    entries.iter().copied().collect()
}

fn pair(m: usize) -> (Vec<u32>, Vec<i64>, Vec<i64>) {
    let p: Pair = direct_construction(m).unwrap();
    let orders = p.group().orders().to_vec();
    (orders, p.s.coeffs().to_vec(), p.t.coeffs().to_vec())
}

#[test]
fn lifted_spectra_match_frozen_tables() {
    let tables = [
        (
            1,
            frozen(&[(0, 9), (2, 16), (4, 6), (8, 1)]),
            frozen(&[(0, 19), (16, 12), (64, 1)]),
            frozen(&[(0, 19), (1, 12), (4, 1)]),
            frozen(&[(0, 9), (4, 16), (8, 6), (16, 1)]),
        ),
        (
            2,
            frozen(&[(0, 243), (2, 160), (4, 48), (8, 60), (32, 1)]),
            frozen(&[(0, 343), (64, 144), (256, 24), (1024, 1)]),
            frozen(&[(0, 343), (1, 144), (4, 24), (16, 1)]),
            frozen(&[(0, 243), (16, 160), (32, 48), (64, 60), (256, 1)]),
        ),
    ];
    for (m, t_diff, t_char, s_diff, s_char) in tables {
        let (orders, s, t) = pair(m);
        assert_eq!(common::diff_spectrum(&orders, &t), t_diff, "T' diff, m={m}");
        assert_eq!(common::char_spectrum(&orders, &t), t_char, "T' char, m={m}");
        assert_eq!(common::diff_spectrum(&orders, &s), s_diff, "S' diff, m={m}");
        assert_eq!(common::char_spectrum(&orders, &s), s_char, "S' char, m={m}");
    }
}

#[test]
fn library_spectra_agree_with_oracle() {
    for m in 1..=2 {
        let p: Pair = direct_construction(m).unwrap();
        let orders = p.group().orders().to_vec();
        for set in [&p.s, &p.t] {
            let lib = set.difference_spectrum().unwrap();
            assert_eq!(lib.entries(), &common::diff_spectrum(&orders, set.coeffs()));
            let norms = fdk_core::character_norms(set).unwrap();
            assert_eq!(norms, common::char_norms(&orders, set.coeffs()));
        }
    }
}

#[test]
fn duality_read_as_spectra() {
    for m in 1..=2 {
        let (orders, s, t) = pair(m);
        let s_size: i64 = s.iter().sum();
        let t_size: i64 = t.iter().sum();
        let nu = common::convolve(&orders, &t, &common::involution(&orders, &t));
        let scaled = common::multiset(nu.iter().map(|n| s_size * s_size * n / t_size));
        assert_eq!(common::char_spectrum(&orders, &s), scaled, "m={m}");
        assert!(common::is_formally_dual(&orders, &s, &t));
        assert!(common::is_formally_dual(&orders, &t, &s));
    }
}

#[test]
fn closed_form_matches_independent_evaluation() {
    for m in 1..=12usize {
        let lib = tprime_spectrum_closed_form::<i128>(m).unwrap();
        let got: BTreeMap<u128, u128> = lib
            .spectrum
            .iter()
            .filter(|(_, f)| *f > 0)
            .map(|(v, f)| (*v as u128, f as u128))
            .collect();
        let want = common::tprime_closed_form(m as u64);
        assert_eq!(got, want, "m={m}");
        let total: u128 = want.values().sum();
        let weight: u128 = want.iter().map(|(v, f)| v * f).sum();
        assert_eq!(total, 1u128 << (4 * m + 1));
        assert_eq!(weight, 1u128 << (4 * m + 2));
    }
}

#[test]
fn closed_form_equals_convolution_up_to_three() {
    for m in 1..=3 {
        let (orders, _, t) = pair(m);
        let conv = common::convolve(&orders, &t, &common::involution(&orders, &t));
        let closed = tprime_spectrum_closed_form::<i64>(m).unwrap();
        let mut want = common::multiset(conv.iter().copied());
        want.retain(|_, f| *f > 0);
        let mut got: BTreeMap<i64, u64> = closed.spectrum.entries().clone();
        got.retain(|_, f| *f > 0);
        assert_eq!(got, want, "m={m}");
        for (k, &c) in conv.iter().enumerate() {
            let g = fdk_core::GroupElement::new(common::coords(&orders, k));
            assert_eq!(tprime_diff_element::<i64>(&g).unwrap(), c, "m={m} at {:?}", g.coords);
        }
    }
}

#[test]
fn tt_closed_forms_equal_brute_force() {
    let l = [vec![0, 0], vec![0, 1], vec![1, 0], vec![3, 3]];
    for m in 1..=3usize {
        let g = GroupSpec::z4(2 * m).unwrap();
        let orders = g.orders().to_vec();
        // all concatenations of m elements of L
        let mut points = vec![Vec::new()];
        for _ in 0..m {
            points = points
                .iter()
                .flat_map(|p: &Vec<u32>| l.iter().map(move |b| [p.clone(), b.clone()].concat()))
                .collect();
        }
        let t = common::indicator(&orders, &points);
        let tt = common::convolve(&orders, &t, &t);
        let tt_inv = common::convolve(&orders, &t, &common::involution(&orders, &t));
        for k in 0..g.cardinality() {
            let x = g.element_at(k);
            assert_eq!(tt_coefficient::<i64>(&x).unwrap(), tt[k], "[TT] at {:?}", x.coords);
            assert_eq!(tt_inv_coefficient::<i64>(&x).unwrap(), tt_inv[k], "[TT^-1] at {:?}", x.coords);
        }
    }
}

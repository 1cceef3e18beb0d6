// Brute-force reference implementations. Apart from `images`, nothing here
// touches the library beyond the little-endian index convention.
#![allow(dead_code, clippy::needless_range_loop)]

pub mod images;

use std::collections::BTreeMap;

use rand::Rng;

pub fn cardinality(orders: &[u32]) -> usize {
    orders.iter().map(|&n| n as usize).product()
}

pub fn coords(orders: &[u32], mut index: usize) -> Vec<u32> {
    orders
        .iter()
        .map(|&n| {
            let d = (index % n as usize) as u32;
            index /= n as usize;
            d
        })
        .collect()
}

pub fn index(orders: &[u32], x: &[u32]) -> usize {
    let mut out = 0;
    for (&n, &d) in orders.iter().zip(x).rev() {
        out = out * n as usize + d as usize;
    }
    out
}

/// `(sum_a c_a chi_y(a))` as `(re, im)`, each character value computed as a power of i.
pub fn char_sum(orders: &[u32], a: &[i64], y: &[u32]) -> (i64, i64) {
    assert!(orders.iter().all(|n| 4 % n == 0), "oracle handles exponent | 4 only");
    let (mut re, mut im) = (0i64, 0i64);
    for (k, &c) in a.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let x = coords(orders, k);
        let mut phase = 0u32;
        for ((&n, &yj), &xj) in orders.iter().zip(y).zip(&x) {
            phase += (4 / n) * yj * xj;
        }
        match phase % 4 {
            0 => re += c,
            1 => im += c,
            2 => re -= c,
            _ => im -= c,
        }
    }
    (re, im)
}

pub fn char_norms(orders: &[u32], a: &[i64]) -> Vec<i64> {
    (0..cardinality(orders))
        .map(|k| {
            let (re, im) = char_sum(orders, a, &coords(orders, k));
            re * re + im * im
        })
        .collect()
}

/// `[AB]_z = sum_{x + y = z} a_x b_y` over every ordered pair.
pub fn convolve(orders: &[u32], a: &[i64], b: &[i64]) -> Vec<i64> {
    let n = cardinality(orders);
    let mut out = vec![0i64; n];
    for x in 0..n {
        if a[x] == 0 {
            continue;
        }
        let cx = coords(orders, x);
        for y in 0..n {
            if b[y] == 0 {
                continue;
            }
            let cy = coords(orders, y);
            let z: Vec<u32> = cx.iter().zip(&cy).zip(orders).map(|((p, q), n)| (p + q) % n).collect();
            out[index(orders, &z)] += a[x] * b[y];
        }
    }
    out
}

pub fn involution(orders: &[u32], a: &[i64]) -> Vec<i64> {
    let mut out = vec![0i64; a.len()];
    for (k, &c) in a.iter().enumerate() {
        let x: Vec<u32> = coords(orders, k).iter().zip(orders).map(|(d, n)| (n - d) % n).collect();
        out[index(orders, &x)] = c;
    }
    out
}

pub fn multiset(values: impl IntoIterator<Item = i64>) -> BTreeMap<i64, u64> {
    let mut m = BTreeMap::new();
    for v in values {
        *m.entry(v).or_insert(0) += 1;
    }
    m
}

pub fn diff_spectrum(orders: &[u32], a: &[i64]) -> BTreeMap<i64, u64> {
    multiset(convolve(orders, a, &involution(orders, a)))
}

pub fn char_spectrum(orders: &[u32], a: &[i64]) -> BTreeMap<i64, u64> {
    multiset(char_norms(orders, a))
}

pub fn indicator(orders: &[u32], points: &[Vec<u32>]) -> Vec<i64> {
    let mut a = vec![0i64; cardinality(orders)];
    for p in points {
        a[index(orders, p)] = 1;
    }
    a
}

/// `|chi_y(S)|^2 |T| = |S|^2 nu_T(y)` for every `y`.
pub fn is_formally_dual(orders: &[u32], s: &[i64], t: &[i64]) -> bool {
    let s_size: i64 = s.iter().sum();
    let t_size: i64 = t.iter().sum();
    let nu = convolve(orders, t, &involution(orders, t));
    char_norms(orders, s)
        .iter()
        .zip(&nu)
        .all(|(lhs, n)| lhs * t_size == s_size * s_size * n)
}

fn choose(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let mut r: u128 = 1;
    for j in 0..k {
        r = r * (n - j) as u128 / (j + 1) as u128;
    }
    r
}

/// Difference spectrum of the lifted set in `Z_2 x Z_4^{2m}`, evaluated branch by branch.
pub fn tprime_closed_form(m: u64) -> BTreeMap<u128, u128> {
    let mut out = BTreeMap::new();
    out.insert(0, 2u128.pow(4 * m as u32 + 1) - 10u128.pow(m as u32) - 13u128.pow(m as u32));
    for l in 1..=2 * m + 1 {
        let mut f = 0u128;
        if l % 2 == 1 {
            f += 12u128.pow((m - (l - 1) / 2) as u32) * choose(m, (l - 1) / 2);
        }
        if l <= m + 1 {
            f += 2u128.pow((2 * m + 1 - l) as u32) * 3u128.pow((l - 1) as u32) * choose(m, l - 1);
        }
        if f > 0 {
            out.insert(1u128 << l, f);
        }
    }
    out
}

pub fn random_subset<R: Rng>(rng: &mut R, n: usize, size: usize) -> Vec<usize> {
    rand::seq::index::sample(rng, n, size).into_vec()
}

/// Invertible matrix over Z_4 with its inverse transpose, from random elementary operations.
pub fn random_automorphism<R: Rng>(rng: &mut R, dim: usize) -> (Vec<Vec<u32>>, Vec<Vec<u32>>) {
    let id = |d: usize| -> Vec<Vec<u32>> {
        (0..d).map(|i| (0..d).map(|j| u32::from(i == j)).collect()).collect()
    };
    let (mut a, mut b) = (id(dim), id(dim));
    for _ in 0..4 * dim {
        let i = rng.gen_range(0..dim);
        let j = rng.gen_range(0..dim);
        match rng.gen_range(0..3) {
            0 if i != j => {
                // row_i += c row_j; inverse transpose does row_j -= c row_i
                let c = rng.gen_range(1..4u32);
                for k in 0..dim {
                    a[i][k] = (a[i][k] + c * a[j][k]) % 4;
                    b[j][k] = (b[j][k] + (4 - c) * b[i][k]) % 4;
                }
            }
            1 => {
                for k in 0..dim {
                    a[i][k] = 3 * a[i][k] % 4;
                    b[i][k] = 3 * b[i][k] % 4;
                }
            }
            _ => {
                a.swap(i, j);
                b.swap(i, j);
            }
        }
    }
    (a, b)
}

pub fn apply(matrix: &[Vec<u32>], x: &[u32]) -> Vec<u32> {
    matrix
        .iter()
        .map(|row| row.iter().zip(x).map(|(r, v)| r * v).sum::<u32>() % 4)
        .collect()
}

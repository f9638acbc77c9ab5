//! Independent oracles shared by the property and acceptance suites. None of
//! them calls into the engine routine it is used to check.
#![allow(dead_code)]

use std::collections::BTreeMap;

use gorenstein::series::{int, Rat, TruncatedSeries};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::Rng;

/// Determinant by the permutation expansion `sum sign(s) prod m[i][s(i)]`.
pub fn leibniz_det(m: &[Vec<TruncatedSeries>]) -> TruncatedSeries {
    let n = m.len();
    let precision = m
        .iter()
        .flatten()
        .map(TruncatedSeries::precision)
        .min()
        .unwrap_or(1);
    let mut total = TruncatedSeries::zero(precision);
    let mut perm: Vec<usize> = (0..n).collect();
    permutations(&mut perm, 0, &mut |p| {
        let inversions = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|&(i, j)| p[i] > p[j])
            .count();
        let mut term = TruncatedSeries::one(precision);
        for (i, &j) in p.iter().enumerate() {
            term = &term * &m[i][j];
        }
        total = if inversions % 2 == 0 {
            &total + &term
        } else {
            &total - &term
        };
    });
    total
}

fn permutations(p: &mut Vec<usize>, k: usize, f: &mut dyn FnMut(&[usize])) {
    if k == p.len() {
        f(p);
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permutations(p, k + 1, f);
        p.swap(k, i);
    }
}

/// Membership in `<gens>` for `0..=bound`, by enumerating every combination
/// `sum c_i g_i <= bound`.
pub fn brute_members(gens: &[u64], bound: u64) -> Vec<bool> {
    fn go(gens: &[u64], acc: u64, bound: u64, out: &mut Vec<bool>) {
        match gens.split_first() {
            None => out[acc as usize] = true,
            Some((&g, rest)) => {
                let mut x = acc;
                while x <= bound {
                    go(rest, x, bound, out);
                    x += g;
                }
            }
        }
    }
    let mut out = vec![false; bound as usize + 1];
    go(gens, 0, bound, &mut out);
    out
}

/// `(delta, conductor, symmetric)` from brute-force membership up to `2 max^2`.
pub fn brute_semigroup(gens: &[u64]) -> (u64, u64, bool) {
    let hi = *gens.iter().max().unwrap();
    let bound = 2 * hi * hi;
    let member = brute_members(gens, bound);
    let gaps: Vec<u64> = (0..=bound).filter(|&x| !member[x as usize]).collect();
    let conductor = gaps.last().map_or(0, |&g| g + 1);
    let symmetric =
        (0..conductor).all(|x| member[x as usize] != member[(conductor - 1 - x) as usize]);
    (gaps.len() as u64, conductor, symmetric)
}

/// Coefficients `(A, B, C)` of `x^2` in `prod_{j=0..=k} (1 + (zeta + j eta) x)`,
/// i.e. `c_2 = A eta^2 + B eta zeta + C zeta^2`, by expanding the product
/// as a polynomial in three variables.
pub fn jet_c2_expansion(k: u64) -> (BigInt, BigInt, BigInt) {
    // key (x power, eta power, zeta power)
    let mut poly: BTreeMap<(u32, u32, u32), BigInt> = BTreeMap::new();
    poly.insert((0, 0, 0), BigInt::one());
    for j in 0..=k {
        let mut next: BTreeMap<(u32, u32, u32), BigInt> = BTreeMap::new();
        for ((x, e, z), c) in &poly {
            *next.entry((*x, *e, *z)).or_insert_with(BigInt::zero) += c;
            *next.entry((x + 1, *e, z + 1)).or_insert_with(BigInt::zero) += c;
            *next.entry((x + 1, e + 1, *z)).or_insert_with(BigInt::zero) += c * j;
        }
        poly = next;
    }
    let get = |e, z| poly.get(&(2, e, z)).cloned().unwrap_or_default();
    (get(2, 0), get(1, 1), get(0, 2))
}

/// A random polynomial with nonzero constant term and small integer
/// coefficients.
pub fn random_unit<R: Rng>(rng: &mut R, degree: usize, precision: usize) -> TruncatedSeries {
    let mut c: Vec<i64> = (0..=degree).map(|_| rng.gen_range(-4..=4)).collect();
    if c[0] == 0 {
        c[0] = if rng.gen() { 1 } else { -1 };
    }
    TruncatedSeries::from_integers(&c, precision)
}

/// Sections `t^{a_i} u_i` with distinct `a_i`, mixed by a random
/// unitriangular matrix so no section is a pure monomial times a unit of the
/// expected order. Returns the sections and the vanishing weight
/// `sum a_i - r(r+1)/2` known by construction.
pub fn smooth_instance<R: Rng>(
    rng: &mut R,
    r: usize,
    precision: usize,
) -> (Vec<TruncatedSeries>, usize) {
    let mut orders: Vec<usize> = Vec::new();
    while orders.len() < r + 1 {
        let a = rng.gen_range(0..3 * (r + 1));
        if !orders.contains(&a) {
            orders.push(a);
        }
    }
    orders.sort_unstable();
    let pure: Vec<TruncatedSeries> = orders
        .iter()
        .map(|&a| {
            let u = random_unit(rng, 3, precision);
            &TruncatedSeries::monomial(int(1), a, precision) * &u
        })
        .collect();
    // v_i = p_i + sum_{j > i} c_ij p_j keeps ord v_i = a_i and the span
    let mut sections = Vec::with_capacity(r + 1);
    for i in 0..=r {
        let mut v = pure[i].clone();
        for p in &pure[i + 1..] {
            let c = int(rng.gen_range(-3..=3));
            v = &v + &p.scale(&c);
        }
        sections.push(v);
    }
    let weight = orders.iter().sum::<usize>() - r * (r + 1) / 2;
    (sections, weight)
}

/// Every coefficient of `a` and `b` agrees on the common window.
pub fn agree(a: &TruncatedSeries, b: &TruncatedSeries) -> bool {
    let n = a.precision().min(b.precision());
    a.coeffs()[..n] == b.coeffs()[..n]
}

pub fn rat_from(n: i64, d: i64) -> Rat {
    Rat::new(n.into(), d.into())
}

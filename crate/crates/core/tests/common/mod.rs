//! Brute-force oracles and generators shared by the integration tests.
//!
//! Everything here works from the basis list alone, so it stays independent of the library's
//! rank tables, complexes and Tutte code.

#![allow(dead_code)]

use matx::corpus::{generate, CorpusSpec, Instance};
use matx::{Graph, Matroid};
use proptest::prelude::*;

pub fn masks(m: &Matroid) -> Vec<u32> {
    m.bases().map(|b| b.bits()).collect()
}

pub fn rank(m: &Matroid, a: u32) -> u32 {
    masks(m).iter().map(|b| (b & a).count_ones()).max().unwrap_or(0)
}

pub fn independent(m: &Matroid, a: u32) -> bool {
    masks(m).iter().any(|b| b & a == a)
}

/// Minimal dependent sets, by exhaustive search.
pub fn circuits(m: &Matroid) -> Vec<u32> {
    let n = m.n();
    let bases = masks(m);
    let indep = |a: u32| bases.iter().any(|b| b & a == a);
    (1u32..1 << n)
        .filter(|&a| !indep(a) && (0..n).filter(|i| a >> i & 1 == 1).all(|i| indep(a & !(1 << i))))
        .collect()
}

pub fn binom(a: i64, b: i64) -> i128 {
    if b < 0 || a < 0 || a < b {
        return 0;
    }
    (0..b).fold(1i128, |acc, j| acc * (a - j) as i128 / (j + 1) as i128)
}

pub fn h_from_f(f: &[i128], r: usize) -> Vec<i128> {
    (0..=r)
        .map(|i| {
            (0..=i)
                .map(|j| {
                    let sign = if (i - j) % 2 == 0 { 1 } else { -1 };
                    sign * binom((r - j) as i64, (r - i) as i64) * f.get(j).copied().unwrap_or(0)
                })
                .sum()
        })
        .collect()
}

/// Face counts of the independence complex.
pub fn f_independent(m: &Matroid) -> Vec<i128> {
    let mut f = vec![0i128; m.rank() + 1];
    for a in 0u32..1 << m.n() {
        if independent(m, a) {
            f[a.count_ones() as usize] += 1;
        }
    }
    f
}

pub fn h_independent(m: &Matroid) -> Vec<i128> {
    h_from_f(&f_independent(m), m.rank())
}

/// Face counts of the broken circuit complex under label order; `m` must be loopless.
pub fn f_broken_circuit(m: &Matroid) -> Vec<i128> {
    let broken: Vec<u32> = circuits(m).into_iter().map(|c| c & (c - 1)).collect();
    let mut f = vec![0i128; m.rank() + 1];
    for a in 0u32..1 << m.n() {
        if broken.iter().all(|&bc| a & bc != bc) {
            f[a.count_ones() as usize] += 1;
        }
    }
    f
}

pub fn to_i128(v: &[matx::arith::Int]) -> Vec<i128> {
    v.iter().map(|x| x.to_string().parse().unwrap()).collect()
}

/// The default corpus (seed 42, n <= 12), generated once per test binary.
pub fn corpus() -> &'static [Instance] {
    use std::sync::OnceLock;
    static C: OnceLock<Vec<Instance>> = OnceLock::new();
    C.get_or_init(|| generate(&CorpusSpec::default()).unwrap())
}

/// Random small matroids: cycle matroids of multigraphs, uniform matroids, their duals.
pub fn arb_matroid(max_n: usize) -> impl Strategy<Value = Matroid> {
    let graphs = (2usize..=6)
        .prop_flat_map(move |v| prop::collection::vec((0..v, 0..v), 1..=max_n))
        .prop_map(|pairs| Graph::from_pairs(&pairs).unwrap().cycle_matroid());
    let uniform = (1usize..=max_n.min(8)).prop_flat_map(|n| (0..=n, Just(n))).prop_map(|(r, n)| Matroid::uniform(r, n).unwrap());
    (prop_oneof![3 => graphs, 1 => uniform], any::<bool>()).prop_map(|(m, d)| if d { m.dual() } else { m })
}

/// Corank-nullity expansion `Σ_A (x-1)^{r-r(A)} (y-1)^{|A|-r(A)}`; `t[i][j]` is the
/// coefficient of `x^i y^j`.
pub fn tutte_oracle(m: &Matroid) -> Vec<Vec<i128>> {
    let (n, r) = (m.n(), m.rank());
    let mut t = vec![vec![0i128; n - r + 1]; r + 1];
    let sign = |k: i64| if k % 2 == 0 { 1 } else { -1 };
    for a in 0u32..1 << n {
        let ra = rank(m, a) as usize;
        let (p, q) = (r - ra, a.count_ones() as usize - ra);
        for i in 0..=p {
            for j in 0..=q {
                t[i][j] += binom(p as i64, i as i64) * binom(q as i64, j as i64) * sign((p - i + q - j) as i64);
            }
        }
    }
    t
}

pub fn tutte_terms(m: &Matroid) -> Vec<(usize, usize, i128)> {
    let mut out = Vec::new();
    for (i, row) in tutte_oracle(m).iter().enumerate() {
        for (j, &c) in row.iter().enumerate() {
            if c != 0 {
                out.push((i, j, c));
            }
        }
    }
    out
}

pub fn terms_i128(t: &matx::poly::BivarPolynomial) -> Vec<(usize, usize, i128)> {
    let mut v: Vec<_> = t.terms().into_iter().map(|(i, j, c)| (i, j, c.to_string().parse().unwrap())).collect();
    v.sort();
    v
}

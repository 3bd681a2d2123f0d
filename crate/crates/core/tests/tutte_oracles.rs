mod common;

use common::{
    arb_matroid, binom, corpus, f_broken_circuit, f_independent, h_from_f, rank, terms_i128, to_i128, tutte_terms,
};
use matx::arith::int;
use matx::graph::{complete_graph, cycle_graph, theta_graph};
use matx::tutte::{
    beta_invariant, characteristic_polynomial, coefficient_families, graph_reliability, reliability_polynomial,
    series_normalization_check, tutte_dc, tutte_sum,
};
use matx::{Graph, Matroid};
use proptest::prelude::*;

/// Spanning-set expansion of the reliability polynomial in the failure probability `p`.
fn reliability_oracle(m: &Matroid) -> Vec<i128> {
    let n = m.n();
    let mut out = vec![0i128; n + 1];
    for s in 0u32..1 << n {
        if rank(m, s) as usize != m.rank() {
            continue;
        }
        // (1-p)^k p^(n-k)
        let k = s.count_ones() as usize;
        for j in 0..=k {
            let sign = if j % 2 == 0 { 1 } else { -1 };
            out[n - k + j] += sign * binom(k as i64, j as i64);
        }
    }
    while out.len() > 1 && *out.last().unwrap() == 0 {
        out.pop();
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn both_algorithms_match_the_oracle(m in arb_matroid(9)) {
        let want = tutte_terms(&m);
        prop_assert_eq!(terms_i128(&tutte_sum(&m).unwrap()), want.clone());
        prop_assert_eq!(terms_i128(&tutte_dc(&m)), want);
    }

    #[test]
    fn dual_transposes(m in arb_matroid(9)) {
        prop_assert_eq!(tutte_dc(&m.dual()), tutte_dc(&m).transpose());
    }

    #[test]
    fn evaluations_count_sets(m in arb_matroid(9)) {
        let t = tutte_dc(&m);
        let n = m.n();
        let spanning = (0u32..1 << n).filter(|&a| rank(&m, a) as usize == m.rank()).count();
        prop_assert_eq!(t.eval(&int(1), &int(1)), int(m.num_bases() as i64));
        prop_assert_eq!(t.eval(&int(2), &int(1)), int(f_independent(&m).iter().sum::<i128>() as i64));
        prop_assert_eq!(t.eval(&int(1), &int(2)), int(spanning as i64));
        prop_assert_eq!(t.eval(&int(2), &int(2)), int(1 << n));
    }

    #[test]
    fn families_match_complexes(m in arb_matroid(9)) {
        let fam = coefficient_families(&m);
        let r = m.rank();
        prop_assert_eq!(to_i128(&fam.h), h_from_f(&f_independent(&m), r));
        if m.loops().bits() == 0 {
            let f_bc = f_broken_circuit(&m);
            let h_bc = h_from_f(&f_bc, r);
            let b: Vec<i128> = (0..=r).map(|i| h_bc[r - i]).collect();
            prop_assert_eq!(to_i128(fam.b().unwrap()), b);
            prop_assert_eq!(to_i128(fam.w().unwrap()), f_bc);
        } else {
            prop_assert!(fam.b().is_err() && fam.w().is_err());
        }
        if m.coloops().bits() == 0 {
            let dual = coefficient_families(&m.dual());
            prop_assert_eq!(dual.b().unwrap(), fam.b_star.as_slice());
        }
    }

    #[test]
    fn direct_sum_multiplies(a in arb_matroid(5), b in arb_matroid(5)) {
        let s = a.direct_sum(&b).unwrap();
        prop_assert_eq!(tutte_dc(&s), &tutte_dc(&a) * &tutte_dc(&b));
    }

    #[test]
    fn reliability_matches_spanning_sets(m in arb_matroid(8)) {
        let got = to_i128(reliability_polynomial(&m).coeffs());
        prop_assert_eq!(got, reliability_oracle(&m));
    }
}

#[test]
fn uniform_u23() {
    let t = tutte_dc(&Matroid::uniform(2, 3).unwrap());
    assert_eq!(terms_i128(&t), vec![(0, 1, 1), (1, 0, 1), (2, 0, 1)]);
}

#[test]
fn beta_is_one_on_series_parallel_graphs() {
    for m in [
        cycle_graph(5).unwrap().cycle_matroid(),
        theta_graph(3, 2).unwrap().cycle_matroid(),
        theta_graph(4, 3).unwrap().cycle_matroid(),
    ] {
        assert_eq!(beta_invariant(&m), int(1));
    }
    // K4 is not series-parallel
    assert_eq!(beta_invariant(&complete_graph(4).unwrap().cycle_matroid()), int(2));
}

#[test]
fn charpoly_of_complete_graph_is_falling_factorial() {
    // chromatic polynomial of K4 is q(q-1)(q-2)(q-3); charpoly drops one factor of q
    let p = characteristic_polynomial(&complete_graph(4).unwrap().cycle_matroid()).unwrap();
    assert_eq!(to_i128(p.coeffs()), vec![-6, 11, -6, 1]);
    let loopy = Graph::from_pairs(&[(0, 0), (0, 1)]).unwrap().cycle_matroid();
    assert!(characteristic_polynomial(&loopy).is_err());
}

#[test]
fn graph_reliability_examples() {
    let tri = graph_reliability(&cycle_graph(3).unwrap()).unwrap();
    assert_eq!(to_i128(tri.coeffs()), vec![1, 0, -3, 2]);
    let two = Graph::from_pairs(&[(0, 1), (2, 3)]).unwrap();
    assert!(graph_reliability(&two).is_err());
}

#[test]
fn series_normalization_holds_on_corpus() {
    let mut checked = 0;
    for inst in corpus().iter().filter(|i| i.matroid.n() <= 8) {
        for i in 1..=3 {
            if let Ok(rep) = series_normalization_check(&inst.matroid, i) {
                if rep.normalized.n() <= 12 {
                    assert!(rep.holds(), "{} i={i}: {} vs {}", inst.id, rep.lhs, rep.rhs);
                    checked += 1;
                }
            }
        }
    }
    assert!(checked > 20, "only {checked} checks ran");
}

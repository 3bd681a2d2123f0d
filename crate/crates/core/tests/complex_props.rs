mod common;

use common::{arb_matroid, binom, corpus, f_broken_circuit, f_independent, h_independent, to_i128};
use matx::arith::{int, Int};
use matx::complex::{
    broken_circuit_complex, cm_level, deletion_sum_check, f_from_h, h_from_f, independence_complex,
    is_cohen_macaulay, reduced_homology, short_h, KcmLimits, SimplicialComplex,
};
use matx::Matroid;
use proptest::prelude::*;

fn loopless(m: &Matroid) -> bool {
    m.loops().bits() == 0
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn h_and_f_are_inverse(f in prop::collection::vec(-50i64..50, 1..8)) {
        let r = f.len() - 1;
        let f: Vec<Int> = f.into_iter().map(int).collect();
        prop_assert_eq!(f_from_h(&h_from_f(&f, r), r), f);
    }

    #[test]
    fn independence_f_matches_oracle(m in arb_matroid(9)) {
        let c = independence_complex(&m).unwrap();
        prop_assert_eq!(to_i128(&c.f_vector()), f_independent(&m));
        let h = to_i128(&c.h_vector());
        prop_assert_eq!(&h, &h_independent(&m));
        prop_assert_eq!(h.iter().sum::<i128>(), m.num_bases() as i128);
    }

    #[test]
    fn broken_circuit_f_matches_oracle(m in arb_matroid(9)) {
        prop_assume!(loopless(&m));
        let c = broken_circuit_complex(&m, None).unwrap();
        prop_assert_eq!(to_i128(&c.f_vector()), f_broken_circuit(&m));
    }

    #[test]
    fn broken_circuit_f_ignores_ordering(m in arb_matroid(9)) {
        prop_assume!(loopless(&m));
        let rev: Vec<usize> = (0..m.n()).rev().collect();
        let a = broken_circuit_complex(&m, None).unwrap();
        let b = broken_circuit_complex(&m, Some(&rev)).unwrap();
        prop_assert_eq!(a.f_vector(), b.f_vector());
    }

    #[test]
    fn h_splits_over_deletion_and_contraction(m in arb_matroid(9), e in 0usize..9) {
        prop_assume!(e < m.n() && m.n() >= 2);
        let bit = 1u32 << e;
        prop_assume!((m.loops().bits() | m.coloops().bits()) & bit == 0);
        let h = h_independent(&m);
        let d = h_independent(&m.delete_element(e).unwrap());
        let c = h_independent(&m.contract_element(e).unwrap());
        for i in 0..h.len() {
            let di = d.get(i).copied().unwrap_or(0);
            let ci = if i == 0 { 0 } else { c.get(i - 1).copied().unwrap_or(0) };
            prop_assert_eq!(h[i], di + ci);
        }
    }

    #[test]
    fn matroid_complexes_are_cm(m in arb_matroid(8)) {
        prop_assert!(is_cohen_macaulay(&independence_complex(&m).unwrap()));
        if loopless(&m) {
            prop_assert!(is_cohen_macaulay(&broken_circuit_complex(&m, None).unwrap()));
        }
    }

    #[test]
    fn independence_homology_is_top_h(m in arb_matroid(8)) {
        let betti = reduced_homology(&independence_complex(&m).unwrap());
        let r = m.rank();
        let top = *h_independent(&m).last().unwrap() as usize;
        for (k, &b) in betti.iter().enumerate() {
            prop_assert_eq!(b, if k == r { top } else { 0 });
        }
    }

    #[test]
    fn broken_circuit_complexes_are_cones(m in arb_matroid(8)) {
        prop_assume!(loopless(&m) && m.n() > 0);
        let c = broken_circuit_complex(&m, None).unwrap();
        prop_assert!(c.facets().iter().all(|f| f & 1 == 1));
        prop_assert!(reduced_homology(&c).iter().all(|&b| b == 0));
    }
}

#[test]
fn uniform_h_vectors() {
    for n in 1..=9i64 {
        for r in 0..=n {
            let h = to_i128(&independence_complex(&Matroid::uniform(r as usize, n as usize).unwrap()).unwrap().h_vector());
            let f: Vec<i128> = (0..=r).map(|j| binom(n, j)).collect();
            let want = common::h_from_f(&f, r as usize);
            assert_eq!(h, want, "U({r},{n})");
        }
    }
}

#[test]
fn short_h_and_deletion_sum_on_corpus() {
    let mut checked = 0;
    for inst in corpus().iter().filter(|i| i.matroid.n() <= 10).step_by(3) {
        let m = &inst.matroid;
        let c = independence_complex(m).unwrap();
        let s = short_h(&c).unwrap();
        assert!(s.agree(), "{}: {s:?}", inst.id);
        if m.coloops().bits() == 0 && m.loops().bits() == 0 {
            let d = deletion_sum_check(&c).unwrap();
            assert!(d.holds(), "{}: {d:?}", inst.id);
            checked += 1;
        }
        if loopless(m) {
            assert!(short_h(&broken_circuit_complex(m, None).unwrap()).unwrap().agree(), "{}", inst.id);
        }
    }
    assert!(checked > 50);
}

#[test]
fn small_homology_examples() {
    let circle = SimplicialComplex::from_named_facets(&["a", "b", "c"], &[vec!["a", "b"], vec!["b", "c"], vec!["c", "a"]]).unwrap();
    assert_eq!(reduced_homology(&circle), vec![0, 0, 1]);
    assert!(is_cohen_macaulay(&circle));

    let points = SimplicialComplex::from_named_facets(&["a", "b", "c"], &[vec!["a"], vec!["b"], vec!["c"]]).unwrap();
    assert_eq!(reduced_homology(&points), vec![0, 2]);

    let sphere = SimplicialComplex::from_facets((0..4).map(|i| i.to_string()).collect(), &[0b0111, 0b1011, 0b1101, 0b1110]).unwrap();
    assert_eq!(reduced_homology(&sphere), vec![0, 0, 0, 1]);

    // two triangles glued at a vertex: pure, but the link of the cut vertex is disconnected
    let bowtie = SimplicialComplex::from_named_facets(
        &["o", "a", "b", "c", "d"],
        &[vec!["o", "a", "b"], vec!["o", "c", "d"]],
    )
    .unwrap();
    assert!(!is_cohen_macaulay(&bowtie));
    assert_eq!(cm_level(&bowtie, 4, KcmLimits::default()).unwrap(), 0);
}

#[test]
fn cm_level_of_uniform_is_cocircuit_size() {
    for r in 1..=3 {
        for n in r..=r + 4 {
            let c = independence_complex(&Matroid::uniform(r, n).unwrap()).unwrap();
            assert_eq!(cm_level(&c, 4, KcmLimits::default()).unwrap(), (n - r + 1).min(4), "U({r},{n})");
        }
    }
}

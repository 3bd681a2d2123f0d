mod common;

use std::collections::BTreeSet;

use common::{arb_matroid, circuits, corpus, masks, rank};
use matx::matroid::{parallel_connection, series_connection};
use matx::{ElementSet, Matroid, PointedMatroid};
use proptest::prelude::*;

fn named_bases(m: &Matroid) -> BTreeSet<BTreeSet<String>> {
    m.bases().map(|b| m.names(b.bits()).into_iter().collect()).collect()
}

fn set(m: &Matroid, bits: u32) -> ElementSet {
    ElementSet::new(bits, m.n()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn dual_is_an_involution(m in arb_matroid(9)) {
        prop_assert_eq!(m.dual().dual(), m);
    }

    #[test]
    fn deletion_is_dual_to_contraction(m in arb_matroid(9), a in any::<u32>()) {
        let a = a & ((1 << m.n()) - 1);
        prop_assume!(a != (1 << m.n()) - 1);
        let a = set(&m, a);
        prop_assert_eq!(m.delete(a).unwrap(), m.dual().contract(a).unwrap().dual());
    }

    #[test]
    fn minor_ranks(m in arb_matroid(9), a in any::<u32>()) {
        let a = a & ((1 << m.n()) - 1);
        prop_assume!(a != (1 << m.n()) - 1);
        let full = (1 << m.n()) - 1;
        prop_assert_eq!(m.delete(set(&m, a)).unwrap().rank() as u32, rank(&m, full & !a));
        prop_assert_eq!(m.contract(set(&m, a)).unwrap().rank() as u32, m.rank() as u32 - rank(&m, a));
    }

    #[test]
    fn rank_matches_basis_oracle(m in arb_matroid(9), a in any::<u32>()) {
        let a = a & ((1 << m.n()) - 1);
        prop_assert_eq!(m.rank_of(set(&m, a)) as u32, rank(&m, a));
    }

    #[test]
    fn circuits_match_minimal_dependent_sets(m in arb_matroid(8)) {
        let mut got: Vec<u32> = m.circuits().iter().map(|c| c.bits()).collect();
        got.sort_unstable();
        prop_assert_eq!(got, circuits(&m));
    }

    #[test]
    fn single_element_minors_keep_or_drop_rank(m in arb_matroid(9), e in 0usize..9) {
        prop_assume!(e < m.n());
        let bit = 1u32 << e;
        prop_assume!(m.loops().bits() & bit == 0 && m.coloops().bits() & bit == 0);
        prop_assert_eq!(m.delete_element(e).unwrap().rank(), m.rank());
        prop_assert_eq!(m.contract_element(e).unwrap().rank(), m.rank() - 1);
    }

    #[test]
    fn components_reassemble(m in arb_matroid(9)) {
        let parts: Vec<Matroid> = m.components().iter().map(|c| m.restrict(*c).unwrap()).collect();
        let sum = parts.iter().fold(Matroid::empty(), |acc, p| acc.direct_sum(p).unwrap());
        prop_assert_eq!(named_bases(&sum), named_bases(&m));
        prop_assert!(parts.iter().all(Matroid::is_connected));
    }

    #[test]
    fn series_class_rest_becomes_coloops(m in arb_matroid(9)) {
        prop_assume!(m.n() >= 2 && m.coloops().bits() == 0);
        for class in m.series_classes().unwrap() {
            let e = class.iter().next().unwrap();
            let del = m.delete_element(e).unwrap();
            let rest: Vec<String> = m.names(class.bits() & !(1 << e));
            let coloops = del.names(del.coloops().bits());
            prop_assert!(rest.iter().all(|l| coloops.contains(l)));
        }
    }

    #[test]
    fn free_coextension_contracts_back(m in arb_matroid(8)) {
        prop_assume!(m.n() < 24);
        let x = m.free_coextension().unwrap();
        prop_assert_eq!((x.n(), x.rank()), (m.n() + 1, m.rank() + 1));
        prop_assert_eq!(x.contract_element(m.n()).unwrap(), m);
    }
}

#[test]
fn corpus_instances_satisfy_exchange() {
    for inst in corpus() {
        inst.matroid.check_exchange().unwrap_or_else(|e| panic!("{}: {e}", inst.id));
    }
}

#[test]
fn parallel_connections_of_connected_are_connected() {
    let connected: Vec<&Matroid> =
        corpus().iter().map(|i| &i.matroid).filter(|m| m.is_connected() && m.n() >= 2 && m.n() <= 5).collect();
    for (k, a) in connected.iter().enumerate().step_by(7) {
        let b = connected[(k * 13 + 5) % connected.len()];
        let (pa, pb) = (PointedMatroid::new((*a).clone(), 0).unwrap(), PointedMatroid::new(b.clone(), 0).unwrap());
        let p = parallel_connection(&pa, &pb).unwrap().into_matroid();
        assert!(p.is_connected());
        assert_eq!(p.rank(), a.rank() + b.rank() - 1);
        assert_eq!(p.n(), a.n() + b.n() - 1);
        let s = series_connection(&pa, &pb).unwrap().into_matroid();
        assert!(s.is_connected());
        assert_eq!(s.rank(), a.rank() + b.rank());
    }
}

#[test]
fn rejects_bases_without_exchange() {
    let err = Matroid::from_bases(&["a", "b", "c", "d"], &[vec!["a", "b"], vec!["c", "d"]]).unwrap_err();
    assert!(matches!(err, matx::MatxError::NotAMatroid { .. }));
}

#[test]
fn two_parallel_edges_and_triangle() {
    let g = matx::Graph::from_pairs(&[(0, 1), (0, 1)]).unwrap().cycle_matroid();
    assert_eq!(masks(&g), masks(&Matroid::uniform(1, 2).unwrap()));
    let t = matx::Graph::from_pairs(&[(0, 1), (1, 2), (2, 0)]).unwrap().cycle_matroid();
    assert_eq!(masks(&t), masks(&Matroid::uniform(2, 3).unwrap()));
}

#[test]
fn min_cocircuit_of_uniform_family() {
    for r in 1..=4 {
        for k in 1..=4 {
            assert_eq!(Matroid::uniform(r, r + k - 1).unwrap().min_cocircuit_size(), Some(k));
        }
    }
    assert_eq!(Matroid::uniform(0, 3).unwrap().min_cocircuit_size(), None);
}

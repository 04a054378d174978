use foulis::effect::{chain_product, lukasiewicz, mv_isomorphic, Axiom, AxiomOutcome, FiniteMvAlgebra, PartialAlgebra};
use foulis::quotient::{invariant_mean_check, quotient_mv, SemisimpleView};
use foulis::semisimple::Signature;
use num_rational::BigRational;
use num_traits::One;
use proptest::prelude::*;

fn names(n: usize) -> Vec<String> {
    (0..n).map(|i| i.to_string()).collect()
}

#[test]
fn three_element_chain() {
    let l3 = PartialAlgebra::from_fn(names(3), 0, Some(2), |a, b| (a + b <= 2).then_some(a + b)).unwrap();
    for axiom in Axiom::ALL {
        assert_eq!(l3.check(axiom).unwrap(), AxiomOutcome::Pass, "{axiom}");
    }
    assert_eq!(l3.refinement_witness(1, 1, 2, 0), Some([1, 0, 1, 0]));
}

#[test]
fn unit_absorption_failure_is_witnessed() {
    let broken = PartialAlgebra::from_fn(names(3), 0, Some(2), |a, b| match (a, b) {
        (0, x) | (x, 0) => Some(x),
        (1, 2) | (2, 1) => Some(2),
        (1, 1) => Some(2),
        _ => None,
    })
    .unwrap();
    assert_eq!(broken.check(Axiom::E7).unwrap(), AxiomOutcome::Fail(vec![1]));
    assert!(!broken.is_effect_algebra().unwrap());
}

#[test]
fn chain_operations() {
    let l6 = lukasiewicz(5).unwrap();
    assert_eq!(l6.boxplus(3, 4), 5);
    assert_eq!(l6.boxplus(2, 2), 4);
    assert_eq!(l6.complement(2), 3);
    assert!(l6.leq(2, 3) && !l6.leq(3, 2));
    assert_eq!((l6.meet(2, 4), l6.join(2, 4)), (2, 4));
}

#[test]
fn products_and_isomorphisms() {
    assert_eq!(lukasiewicz(1).unwrap().len(), 2);
    let p = lukasiewicz(1).unwrap().product(&lukasiewicz(2).unwrap());
    assert_eq!(p.len(), 6);
    assert!(p.base().is_effect_algebra().unwrap());
    assert_eq!(p, chain_product(&[1, 2]).unwrap());

    let l3 = lukasiewicz(2).unwrap();
    assert_eq!(mv_isomorphic(l3.base(), l3.base()), Some(vec![0, 1, 2]));
    assert_eq!(mv_isomorphic(chain_product(&[1, 1]).unwrap().base(), lukasiewicz(3).unwrap().base()), None);
    let q = quotient_mv(&SemisimpleView::new(Signature::new(vec![3]).unwrap())).unwrap();
    assert_eq!(mv_isomorphic(&q.algebra, lukasiewicz(3).unwrap().base()), Some(vec![0, 1, 2, 3]));
}

#[test]
fn quotients_of_small_monoids() {
    let q = quotient_mv(&SemisimpleView::new(Signature::new(vec![2]).unwrap())).unwrap();
    assert_eq!(q.keys, vec![vec![0], vec![1], vec![2]]);
    for a in 0..3 {
        for b in 0..3 {
            assert_eq!(q.algebra.oplus(a, b), (a + b <= 2).then_some(a + b));
        }
    }
    let five = quotient_mv(&SemisimpleView::new(Signature::new(vec![5]).unwrap())).unwrap();
    assert!(mv_isomorphic(&five.algebra, lukasiewicz(5).unwrap().base()).is_some());
    let mixed = quotient_mv(&SemisimpleView::new(Signature::new(vec![1, 2]).unwrap())).unwrap();
    assert!(mv_isomorphic(&mixed.algebra, chain_product(&[1, 2]).unwrap().base()).is_some());
}

#[test]
fn invariant_means_on_i3_and_i2() {
    let v = SemisimpleView::new(Signature::new(vec![3]).unwrap());
    let report = invariant_mean_check(&v, |e| v.letter_mean(e, &[BigRational::one()])).unwrap();
    assert!(report.all_pass());
    let v2 = SemisimpleView::new(Signature::new(vec![2]).unwrap());
    let constant = invariant_mean_check(&v2, |_| BigRational::one()).unwrap();
    assert!(!constant.im3);
}

#[test]
fn file_round_trip() {
    let json = r#"{"elements":["0","1","2"],"zero":0,"one":2,"oplus":[[0,1,2],[1,2,null],[2,null,null]],"complement":[2,1,0]}"#;
    let m = FiniteMvAlgebra::from_json(json).unwrap();
    assert_eq!(m.to_json(), json);
    let bad = json.replace("[2,1,0]", "[2,0,0]");
    assert!(FiniteMvAlgebra::from_json(&bad).is_err());
    let not_mv = json.replace("[1,2,null]", "[1,null,null]");
    assert!(FiniteMvAlgebra::from_json(&not_mv).is_err());
}

proptest! {
    #[test]
    fn chain_products_are_mv_algebras(ns in proptest::collection::vec(1usize..=3, 1..=3)) {
        let p = chain_product(&ns).unwrap();
        let rebuilt = FiniteMvAlgebra::new(p.base().clone()).unwrap();
        prop_assert_eq!(&rebuilt, &p);
        let mut sorted = ns.clone();
        sorted.sort_unstable();
        prop_assert!(mv_isomorphic(p.base(), chain_product(&sorted).unwrap().base()).is_some());
        for a in 0..p.len() {
            prop_assert_eq!(p.complement(p.complement(a)), a);
            for b in 0..p.len() {
                let expected = p.oplus(a, p.meet(p.complement(a), b));
                prop_assert_eq!(Some(p.boxplus(a, b)), expected);
                prop_assert_eq!(p.boxplus(a, b), p.boxplus(b, a));
            }
        }
    }
}

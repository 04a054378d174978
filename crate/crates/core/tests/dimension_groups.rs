use foulis::bratteli::BratteliDiagram;
use foulis::coordinatize::report_interval;
use foulis::dimension::{
    dyadic_value, interpolation_counterexample, interval_algebra, intertwine_check, pi_mean,
    unperforation_counterexample, PositiveHom, SimplicialGroup, DEFAULT_BOX,
};
use foulis::effect::{chain_product, lukasiewicz, mv_isomorphic, preserves_oplus};
use foulis::partial_bijections::PartialBijection;
use foulis::semisimple::{SemisimpleElement, Signature, StandardMorphism};
use foulis::Error;
use num_rational::BigRational;

#[test]
fn rank_vectors() {
    let e = SemisimpleElement::new(vec![PartialBijection::partial_identity(3, &[1, 2]).unwrap()]).unwrap();
    assert_eq!(pi_mean(&e).unwrap(), vec![2]);
    let sig = Signature::new(vec![2, 3]).unwrap();
    assert_eq!(pi_mean(&sig.identity()).unwrap(), vec![2, 3]);
    assert_eq!(pi_mean(&sig.zero()).unwrap(), vec![0, 0]);
    let swap = SemisimpleElement::new(vec![PartialBijection::parse(2, "1->2,2->1").unwrap()]).unwrap();
    assert_eq!(pi_mean(&swap), Err(Error::NotIdempotent));
}

#[test]
fn intervals() {
    let chain = interval_algebra(&SimplicialGroup::new(vec![5]).unwrap());
    assert!(mv_isomorphic(chain.base(), lukasiewicz(5).unwrap().base()).is_some());
    let mixed = interval_algebra(&SimplicialGroup::new(vec![1, 2]).unwrap());
    assert!(mv_isomorphic(mixed.base(), chain_product(&[1, 2]).unwrap().base()).is_some());
    let boolean = interval_algebra(&SimplicialGroup::new(vec![1, 1, 1]).unwrap());
    assert_eq!(boolean.len(), 8);
    assert!((0..8).all(|a| boolean.boxplus(a, a) == a));
    assert!(SimplicialGroup::new(vec![0]).is_err());
}

#[test]
fn intertwining() {
    let car = BratteliDiagram::car(2);
    assert!(intertwine_check(&car.level_morphism(0).unwrap()).unwrap());
    assert!(intertwine_check(&StandardMorphism::identity(Signature::new(vec![2, 1]).unwrap())).unwrap());
    for d in [BratteliDiagram::pascal(3), BratteliDiagram::irregular()] {
        for level in 0..d.depth() {
            assert!(intertwine_check(&d.level_morphism(level).unwrap()).unwrap());
        }
    }
}

#[test]
fn interval_maps_between_levels() {
    let d = BratteliDiagram::irregular();
    for level in 0..d.depth() {
        let hom = PositiveHom::from_level(&d, level).unwrap();
        let map = hom.interval_map().unwrap();
        let (src, tgt) = (interval_algebra(hom.source()), interval_algebra(hom.target()));
        assert!(preserves_oplus(&map, src.base(), tgt.base()));
        assert_eq!(map[src.one()], tgt.one());
    }
    let unnormalized = PositiveHom::new(
        vec![vec![1]],
        SimplicialGroup::new(vec![1]).unwrap(),
        SimplicialGroup::new(vec![2]).unwrap(),
    )
    .unwrap();
    assert!(unnormalized.interval_map().is_err());
}

#[test]
fn dyadic_values() {
    assert_eq!(dyadic_value(3, 3).unwrap(), BigRational::new(3.into(), 8.into()));
    assert_eq!(dyadic_value(4, 0).unwrap(), BigRational::from_integer(0.into()));
    assert_eq!(dyadic_value(4, 16).unwrap(), BigRational::from_integer(1.into()));
    assert_eq!(dyadic_value(1, 1).unwrap(), dyadic_value(2, 2).unwrap());
    assert!(dyadic_value(2, 5).is_err());
}

#[test]
fn interval_reports() {
    let r = report_interval(&BratteliDiagram::car(3), 3).unwrap();
    assert_eq!((r.unit.clone(), r.interval_size, r.verified), (vec![8], 9, Some(true)));
    let r = report_interval(&BratteliDiagram::pascal(2), 1).unwrap();
    assert_eq!((r.unit.clone(), r.interval_size), (vec![1, 1], 4));
    let r = report_interval(&BratteliDiagram::car(3), 0).unwrap();
    assert_eq!((r.interval_size, r.verified), (2, Some(true)));
}

#[test]
fn simplicial_orders_are_unperforated_with_interpolation() {
    let cone = |g: &[i64]| g.iter().all(|&x| x >= 0);
    assert_eq!(unperforation_counterexample(2, DEFAULT_BOX, cone), None);
    assert_eq!(interpolation_counterexample(2, 2, cone), None);
    let semigroup = |g: &[i64]| g[0] == 0 || g[0] >= 2;
    assert!(unperforation_counterexample(1, DEFAULT_BOX, semigroup).is_some());
}

use foulis::cuntz::{good_witness, CuntzElement, DyadicView, PolyElement, Side};
use foulis::partial_bijections::PartialBijection;
use foulis::prefix::{PrefixCode, Word};
use foulis::quotient::{invariant_mean_check, quotient_mv};
use foulis::Error;
use num_rational::BigRational;
use proptest::prelude::*;

fn w(s: &str) -> Word {
    Word::parse(2, s).unwrap()
}

fn pair(y: &str, x: &str) -> PolyElement {
    PolyElement::new(w(y), w(x)).unwrap()
}

fn el(s: &str) -> CuntzElement {
    CuntzElement::parse(2, s).unwrap()
}

fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

#[test]
fn polycyclic_products() {
    let one = PolyElement::identity(2);
    assert_eq!(pair("", "a").multiply(&pair("a", "")), one);
    assert_eq!(pair("", "a").multiply(&pair("b", "")), PolyElement::Zero);
    assert_eq!(pair("a", "b").multiply(&pair("ba", "a")), pair("aa", "a"));
    assert!(pair("a", "a").is_idempotent());
    assert!(pair("aa", "ba").natural_leq(&pair("a", "b")));
    assert_eq!(pair("a", "b").inverse(), pair("b", "a"));
}

#[test]
fn element_algebra() {
    let swap = el("a->b, b->a");
    assert_eq!(swap.multiply(&swap).unwrap(), CuntzElement::identity(2));
    assert!(el("a->a").multiply(&el("b->b")).unwrap().is_zero());
    assert!(el("aa->ba").natural_leq(&el("a->b")).unwrap());
    assert!(!el("a->b").natural_leq(&el("aa->ba")).unwrap());
    assert_eq!(el("a->b").join(&el("b->a")).unwrap(), Some(swap.clone()));
    assert_eq!(el("a->a").join(&el("a->b")).unwrap(), None);
    assert!(el("a->a").meet(&el("a->b")).unwrap().is_zero());
    assert_eq!(el("aa->aa, ab->ab, b->b"), CuntzElement::identity(2));
    assert!(CuntzElement::parse(2, "a->a, a->b").is_err());
    assert!(CuntzElement::parse(2, "a->a, ab->b").is_err());
}

#[test]
fn gauge_and_units() {
    assert!(!el("a->ba").is_gauge());
    assert!(el("a->b").is_gauge());
    assert!(el("aa->ab, ab->aa, b->b").is_unit());
    assert!(!el("a->b").is_unit());
    assert_eq!(el("a->ba").dyadic_mean(Side::Domain), Err(Error::NotGauge));
}

#[test]
fn dyadic_means() {
    assert_eq!(el("a->b").dyadic_mean(Side::Domain).unwrap(), ratio(1, 2));
    assert_eq!(CuntzElement::identity(2).dyadic_mean(Side::Range).unwrap(), ratio(1, 1));
    assert_eq!(el("aa->ab, ab->aa").dyadic_mean(Side::Domain).unwrap(), ratio(1, 2));
    assert_eq!(CuntzElement::Zero.dyadic_mean(Side::Domain).unwrap(), ratio(0, 1));
}

#[test]
fn witnesses_for_smaller_measures() {
    let a = PrefixCode::parse(2, "a").unwrap();
    let b = PrefixCode::parse(2, "b").unwrap();
    let (e_prime, g) = good_witness(&a, &b).unwrap().unwrap();
    assert!(e_prime.clopen_equal(&b).unwrap());
    assert_eq!(g.domain_code(), Some(a.clone()));
    assert!(g.is_gauge());

    let small = PrefixCode::parse(2, "aa").unwrap();
    let (e_prime, g) = good_witness(&small, &b).unwrap().unwrap();
    assert!(e_prime.clopen_subset(&b).unwrap());
    assert_eq!(e_prime.bernoulli(), ratio(1, 4));
    assert_eq!(g.range_code(), Some(e_prime));
    assert_eq!(good_witness(&b, &small).unwrap(), None);
}

#[test]
fn symmetric_levels() {
    let swap = el("a->b, b->a");
    let one = swap.to_symmetric(2, 1).unwrap();
    assert_eq!(one, PartialBijection::parse(2, "1->2,2->1").unwrap());
    let two = swap.to_symmetric(2, 2).unwrap();
    assert_eq!(two.rank(), 4);
    assert_eq!(CuntzElement::from_symmetric(2, 2, &two).unwrap(), swap);
    assert_eq!(el("aa->aa").to_symmetric(2, 1), Err(Error::NotRepresentable(1)));
    assert_eq!(el("a->ba").to_symmetric(2, 3), Err(Error::NotGauge));
}

#[test]
fn level_quotients_are_dyadic_chains() {
    for level in 0..=3 {
        let view = DyadicView::new(2, level).unwrap();
        let q = quotient_mv(&view).unwrap();
        let expected: Vec<BigRational> = (0..=1 << level).map(|k| ratio(k, 1 << level)).collect();
        assert_eq!(q.keys, expected);
        let report = invariant_mean_check(&view, |e| e.dyadic_mean(Side::Domain).unwrap()).unwrap();
        assert!(report.all_pass());
    }
}

fn arb_gauge(level: usize) -> impl Strategy<Value = CuntzElement> {
    let degree = 1usize << level;
    (Just((0..degree).collect::<Vec<_>>()).prop_shuffle(), prop::collection::vec(any::<bool>(), degree))
        .prop_map(move |(perm, keep)| {
            let images = perm.into_iter().zip(keep).map(|(i, k)| k.then_some(i)).collect();
            let p = PartialBijection::from_images(images).unwrap();
            CuntzElement::from_symmetric(2, level, &p).unwrap()
        })
}

proptest! {
    #[test]
    fn symmetric_representation_is_multiplicative(f in arb_gauge(3), g in arb_gauge(3)) {
        let fg = f.multiply(&g).unwrap();
        let product = f.to_symmetric(2, 3).unwrap().compose(&g.to_symmetric(2, 3).unwrap()).unwrap();
        prop_assert_eq!(fg.to_symmetric(2, 3).unwrap(), product);
        prop_assert_eq!(f.to_symmetric(2, 4).unwrap(), {
            let p = f.to_symmetric(2, 3).unwrap();
            CuntzElement::from_symmetric(2, 3, &p).unwrap().to_symmetric(2, 4).unwrap()
        });
    }

    #[test]
    fn inverse_monoid_laws(f in arb_gauge(2), g in arb_gauge(2)) {
        let finv = f.inverse();
        prop_assert_eq!(f.multiply(&finv).unwrap().multiply(&f).unwrap(), f.clone());
        prop_assert_eq!(f.multiply(&g).unwrap().inverse(), g.inverse().multiply(&finv).unwrap());
        prop_assert_eq!(
            f.dyadic_mean(Side::Domain).unwrap(),
            f.dyadic_mean(Side::Range).unwrap()
        );
        let m = f.meet(&g).unwrap();
        prop_assert!(m.natural_leq(&f).unwrap() && m.natural_leq(&g).unwrap());
    }
}

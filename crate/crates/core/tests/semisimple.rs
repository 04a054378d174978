use foulis::partial_bijections::PartialBijection;
use foulis::semisimple::{
    apply_standard, compose_standard, composition_letter_isomorphism, elementwise, is_injective_standard,
    morphism_exists, BinaryOp, SemisimpleElement, Signature, StandardMorphism,
};
use proptest::prelude::*;

fn sig(sizes: &[usize]) -> Signature {
    Signature::new(sizes.to_vec()).unwrap()
}

fn elem(parts: &[(usize, &str)]) -> SemisimpleElement {
    SemisimpleElement::new(parts.iter().map(|&(n, s)| PartialBijection::parse(n, s).unwrap()).collect()).unwrap()
}

fn morphism(source: &[usize], mult: &[&[usize]]) -> StandardMorphism {
    StandardMorphism::from_matrix(sig(source), mult.iter().map(|r| r.to_vec()).collect()).unwrap()
}

#[test]
fn elementwise_examples() {
    let s = sig(&[2, 3]);
    let id = s.identity();
    assert_eq!(elementwise(BinaryOp::Product, &id, &id).unwrap(), Some(id.clone()));
    let x = elem(&[(2, "2->1"), (1, "")]);
    let y = elem(&[(2, "1->2"), (1, "")]);
    assert_eq!(elementwise(BinaryOp::Join, &x, &y).unwrap(), Some(elem(&[(2, "1->2,2->1"), (1, "")])));
    let a = elem(&[(1, "1->1"), (1, "")]);
    let b = elem(&[(1, ""), (1, "1->1")]);
    assert!(a.compatible(&b).unwrap() && a.orthogonal(&b).unwrap());
}

#[test]
fn apply_examples() {
    let double = morphism(&[2], &[&[2]]);
    assert_eq!(double.target(), &sig(&[4]));
    assert_eq!(apply_standard(&double, &elem(&[(2, "1->2")])).unwrap(), elem(&[(4, "1->2,3->4")]));

    let merge = morphism(&[1, 2], &[&[1, 1]]);
    assert_eq!(merge.target(), &sig(&[3]));
    let x = elem(&[(1, "1->1"), (2, "1->2")]);
    assert_eq!(apply_standard(&merge, &x).unwrap(), elem(&[(3, "1->1,2->3")]));
    assert_eq!(apply_standard(&merge, &sig(&[1, 2]).identity()).unwrap(), sig(&[3]).identity());
}

#[test]
fn invalid_morphisms_are_rejected() {
    assert!(StandardMorphism::new(sig(&[2]), sig(&[3]), vec![vec![1]]).is_err());
    assert!(StandardMorphism::new(sig(&[2]), sig(&[4]), vec![vec![2, 1]]).is_err());
}

#[test]
fn composition_examples() {
    let double = morphism(&[2], &[&[2]]);
    let again = morphism(&[4], &[&[2]]);
    assert_eq!(compose_standard(&again, &double).unwrap().mult(), &[vec![4]]);

    let id = StandardMorphism::identity(sig(&[1, 2]));
    let sigma = morphism(&[1, 2], &[&[1, 1], &[0, 1]]);
    assert_eq!(compose_standard(&sigma, &id).unwrap().mult(), sigma.mult());

    let split = morphism(&[1], &[&[1], &[1]]);
    let merge = morphism(&[1, 1], &[&[1, 1]]);
    let rho = compose_standard(&merge, &split).unwrap();
    assert_eq!(rho.mult(), &[vec![2]]);
    for x in sig(&[1]).elements() {
        assert_eq!(rho.apply(&x).unwrap(), merge.apply(&split.apply(&x).unwrap()).unwrap());
    }
}

#[test]
fn letter_isomorphism_relates_the_two_layouts() {
    let sigma = morphism(&[1, 2], &[&[1, 1], &[0, 1]]);
    let tau = StandardMorphism::from_matrix(sigma.target().clone(), vec![vec![1, 1]]).unwrap();
    let rho = compose_standard(&tau, &sigma).unwrap();
    let beta = composition_letter_isomorphism(&tau, &sigma).unwrap();
    for x in sigma.source().elements() {
        let two_step = tau.apply(&sigma.apply(&x).unwrap()).unwrap();
        let one_step = rho.apply(&x).unwrap();
        let conj = beta[0].compose(&one_step.parts()[0]).unwrap().compose(&beta[0].inverse()).unwrap();
        assert_eq!(two_step.parts()[0], conj);
    }
}

#[test]
fn existence_and_injectivity() {
    assert!(morphism_exists(2, 4));
    assert!(!morphism_exists(2, 3));
    assert!((1..=12).all(|m| morphism_exists(m, m)));
    assert!(is_injective_standard(&morphism(&[1], &[&[2]])));
    assert!(!is_injective_standard(&morphism(&[1, 2], &[&[0, 1]])));
    assert!(is_injective_standard(&morphism(&[1], &[&[1], &[1]])));
}

#[test]
fn signature_orders() {
    assert_eq!(sig(&[3]).order(), 34);
    assert_eq!(sig(&[1, 2]).order(), 14);
    assert_eq!(sig(&[2, 2]).elements().len(), 49);
    assert!(Signature::new(vec![]).is_err());
    assert!(Signature::new(vec![0]).is_err());
}

fn arb_element(sizes: Vec<usize>) -> impl Strategy<Value = SemisimpleElement> {
    sizes
        .into_iter()
        .map(|n| {
            (Just((0..n).collect::<Vec<usize>>()).prop_shuffle(), proptest::collection::vec(any::<bool>(), n))
                .prop_map(|(perm, keep)| {
                    PartialBijection::from_images(perm.into_iter().zip(keep).map(|(i, k)| k.then_some(i)).collect())
                        .unwrap()
                })
        })
        .collect::<Vec<_>>()
        .prop_map(|parts| SemisimpleElement::new(parts).unwrap())
}

fn arb_case() -> impl Strategy<Value = (StandardMorphism, SemisimpleElement, SemisimpleElement)> {
    proptest::collection::vec(1usize..=3, 1..=3)
        .prop_flat_map(|sizes| {
            let k = sizes.len();
            (
                Just(sizes.clone()),
                proptest::collection::vec(proptest::collection::vec(0usize..=2, k), 1..=3),
                arb_element(sizes.clone()),
                arb_element(sizes),
            )
        })
        .prop_map(|(sizes, mut mult, x, y)| {
            for row in &mut mult {
                if row.iter().all(|&c| c == 0) {
                    row[0] = 1;
                }
            }
            (StandardMorphism::from_matrix(Signature::new(sizes).unwrap(), mult).unwrap(), x, y)
        })
}

proptest! {
    #[test]
    fn standard_morphisms_are_homomorphisms((sigma, x, y) in arb_case()) {
        let (sx, sy) = (sigma.apply(&x).unwrap(), sigma.apply(&y).unwrap());
        prop_assert_eq!(sigma.apply(&x.multiply(&y).unwrap()).unwrap(), sx.multiply(&sy).unwrap());
        prop_assert_eq!(sigma.apply(&x.meet(&y).unwrap()).unwrap(), sx.meet(&sy).unwrap());
        prop_assert_eq!(sigma.apply(&x.inverse()).unwrap(), sx.inverse());
        if let Some(j) = x.join(&y).unwrap() {
            prop_assert_eq!(sx.join(&sy).unwrap(), Some(sigma.apply(&j).unwrap()));
        }
        let e = x.domain_idem();
        let ranks: Vec<usize> = sigma.mult().iter()
            .map(|row| row.iter().zip(e.rank_vector()).map(|(a, r)| a * r).sum())
            .collect();
        prop_assert_eq!(sigma.apply(&e).unwrap().rank_vector(), ranks);
    }
}

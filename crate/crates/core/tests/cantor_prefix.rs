use foulis::prefix::{all_codes, prefix_comparable, PrefixCode, Word};
use num_rational::BigRational;
use proptest::prelude::*;

fn w(s: &str) -> Word {
    Word::parse(2, s).unwrap()
}

fn code(s: &str) -> PrefixCode {
    PrefixCode::parse(2, s).unwrap()
}

#[test]
fn comparability() {
    assert!(prefix_comparable(&w("a"), &w("ab")).unwrap());
    assert!(!prefix_comparable(&w("ab"), &w("ba")).unwrap());
    assert!(prefix_comparable(&w("bab"), &w("ε")).unwrap());
    assert!(prefix_comparable(&w("a"), &Word::parse(3, "a").unwrap()).is_err());
}

#[test]
fn codes_and_maximality() {
    assert_eq!(PrefixCode::max_of(2, &[w("a"), w("ab"), w("b")]).unwrap(), code("a+b"));
    assert!(PrefixCode::parse(2, "a+ab").is_err());
    assert!(code("a+b").is_maximal());
    assert!(code("aa+ab+b").is_maximal());
    let partial = code("aa+b");
    assert!(!partial.is_maximal());
    assert_eq!(partial.bernoulli(), BigRational::new(3.into(), 4.into()));
    assert_eq!(code("a+ba+bba").bernoulli(), BigRational::new(7.into(), 8.into()));
    assert_eq!(code("0").bernoulli(), BigRational::from_integer(0.into()));
}

#[test]
fn extensions_and_reductions() {
    assert_eq!(code("a+b").extend(&w("a"), 1).unwrap(), code("aa+ab+b"));
    assert_eq!(code("a+b").extend(&w("b"), 2).unwrap(), code("a+baa+bab+bba+bbb"));
    assert_eq!(code("aa+ab+b").reduce(&w("a"), 1).unwrap(), code("a+b"));
    assert!(code("aa+b").reduce(&w("a"), 1).is_err());
    assert!(code("a+b").extend(&w("ab"), 1).is_err());
    assert!(code("a+b").extend(&w("a"), 0).is_err());
    assert_eq!(code("aa+ab+b").reductions(), vec![(w("a"), 1)]);
}

#[test]
fn normal_forms() {
    assert_eq!(code("a").uniformize(2).unwrap(), code("aa+ab"));
    assert!(code("aa").uniformize(1).is_err());
    assert_eq!(code("aa+ab+b").minimize(), PrefixCode::full(2));
    assert_eq!(code("aa+ab").minimize(), code("a"));
    assert!(code("a").clopen_equal(&code("aa+ab")).unwrap());
    assert!(!code("a").clopen_equal(&code("aa")).unwrap());
}

#[test]
fn clopen_set_operations() {
    assert_eq!(code("a").union(&code("b")).unwrap(), PrefixCode::full(2));
    assert_eq!(code("a").intersection(&code("ab+b")).unwrap(), code("ab"));
    assert_eq!(code("ε").difference(&code("aa")).unwrap(), code("ab+b"));
    assert_eq!(code("a").intersection(&code("b")).unwrap(), code("0"));
    assert!(code("ab").clopen_subset(&code("a")).unwrap());
    assert!(!code("a").clopen_subset(&code("ab")).unwrap());
}

#[test]
fn enumerated_codes_agree_with_oracle() {
    let codes = all_codes(2, 3).unwrap();
    assert!(codes.iter().all(|c| c.is_maximal() == c.is_maximal_oracle()));
    assert!(codes.iter().all(|c| c.minimize().reductions().iter().all(|(_, r)| *r > 1)));
}

/// A maximal code grown from `{ε}` by depth-one extensions, then thinned.
fn arb_code() -> impl Strategy<Value = PrefixCode> {
    (prop::collection::vec(any::<prop::sample::Index>(), 0..7), any::<u64>()).prop_map(|(steps, keep)| {
        let mut c = PrefixCode::full(2);
        for i in steps {
            let u = i.get(c.words()).clone();
            if u.len() < 4 {
                c = c.extend(&u, 1).unwrap();
            }
        }
        let kept: Vec<Word> = c
            .words()
            .iter()
            .enumerate()
            .filter(|(i, _)| keep >> (i % 64) & 1 == 1)
            .map(|(_, w)| w.clone())
            .collect();
        PrefixCode::new(2, kept).unwrap()
    })
}

proptest! {
    #[test]
    fn extend_then_reduce_round_trips(c in arb_code(), i in any::<prop::sample::Index>(), r in 1usize..3) {
        prop_assume!(!c.is_empty());
        let u = i.get(c.words()).clone();
        let e = c.extend(&u, r).unwrap();
        prop_assert_eq!(e.reduce(&u, r).unwrap(), c.clone());
        prop_assert!(e.clopen_equal(&c).unwrap());
        prop_assert_eq!(e.bernoulli(), c.bernoulli());
    }

    #[test]
    fn minimal_forms_are_canonical(c in arb_code(), extra in 0usize..2) {
        let m = c.minimize();
        prop_assert_eq!(m.minimize(), m.clone());
        prop_assert_eq!(c.uniformize(c.length() + extra).unwrap().minimize(), m);
        prop_assert_eq!(c.is_maximal(), c.is_maximal_oracle());
    }

    #[test]
    fn set_operations_respect_measure(x in arb_code(), y in arb_code()) {
        let union = x.union(&y).unwrap();
        let meet = x.intersection(&y).unwrap();
        prop_assert_eq!(union.bernoulli() + meet.bernoulli(), x.bernoulli() + y.bernoulli());
        let diff = x.difference(&y).unwrap();
        prop_assert_eq!(diff.bernoulli() + meet.bernoulli(), x.bernoulli());
        prop_assert!(meet.clopen_subset(&x).unwrap() && x.clopen_subset(&union).unwrap());
        prop_assert!(diff.intersection(&y).unwrap().is_empty());
    }
}

// The MV-algebra of 𝒟-classes of idempotents, and invariant means.

use num_rational::BigRational;

use foulis::effect::{lukasiewicz, mv_isomorphic};
use foulis::quotient::{invariant_mean_check, quotient_mv, SemisimpleView};
use foulis::semisimple::Signature;

fn run_example() {
    let view = SemisimpleView::new(Signature::new(vec![3]).unwrap());
    let q = quotient_mv(&view).unwrap();
    let mv = q.mv().unwrap();
    println!("classes of I_3: {:?}", q.keys);
    for r in 0..=3 {
        let row: Vec<usize> = (0..=3).map(|s| mv.boxplus(r, s)).collect();
        println!("{r} ⊞ · = {row:?}, {r}′ = {}", mv.complement(r));
    }
    assert!(mv_isomorphic(&q.algebra, lukasiewicz(3).unwrap().base()).is_some());

    // The single component carries all the weight, so each letter counts 1/3.
    let weights = vec![BigRational::from_integer(1.into())];
    let report = invariant_mean_check(&view, |e| view.letter_mean(e, &weights)).unwrap();
    println!("letter mean: {report:?}");
    assert!(report.all_pass());

    let two = quotient_mv(&SemisimpleView::new(Signature::new(vec![1, 2]).unwrap())).unwrap();
    println!("I_1 × I_2 has {} classes: {}", two.keys.len(), two.algebra.names().join(" "));
}

fn main() {
    run_example();
}

// The Cuntz inverse monoid, its gauge part, and the dyadic mean.

use foulis::cuntz::{CuntzElement, DyadicView, Side};
use foulis::quotient::{invariant_mean_check, quotient_mv};

fn run_example() {
    let f = CuntzElement::parse(2, "aa->ab, ab->aa, b->b").unwrap();
    let g = CuntzElement::parse(2, "a->b, b->a").unwrap();
    println!("f = {f}\ng = {g}");
    println!("fg = {}", f.multiply(&g).unwrap());
    println!("f⁻¹ = {}, gauge: {}", f.inverse(), f.is_gauge());
    println!("f at level 2: {}", f.to_symmetric(2, 2).unwrap());

    let e = CuntzElement::parse(2, "aa->aa, b->b").unwrap();
    println!("mean of {e}: {}", e.dyadic_mean(Side::Domain).unwrap());

    let view = DyadicView::new(2, 3).unwrap();
    let q = quotient_mv(&view).unwrap();
    let keys: Vec<String> = q.keys.iter().map(|k| k.to_string()).collect();
    println!("classes at level 3: {}", keys.join(" < "));
    let report = invariant_mean_check(&view, |e| e.dyadic_mean(Side::Domain).unwrap()).unwrap();
    assert!(report.all_pass());
}

fn main() {
    run_example();
}

// Partial bijections of a finite set: composition, inverses, the natural
// order, compatible joins and rook matrices.

use foulis::partial_bijections::{enumerate, order, PartialBijection};

fn run_example() {
    let f = PartialBijection::parse(3, "1->2,3->3").unwrap();
    let g = PartialBijection::parse(3, "2->1").unwrap();
    println!("f = {f}, g = {g}");
    println!("f ∘ g = {}", f.compose(&g).unwrap());
    println!("f⁻¹ = {}, d(f) = {}, r(f) = {}", f.inverse(), f.domain_idem(), f.range_idem());

    let a = PartialBijection::parse(2, "2->1").unwrap();
    let b = PartialBijection::parse(2, "1->2").unwrap();
    assert!(a.orthogonal(&b).unwrap());
    println!("{a} ∨ {b} = {}", a.join(&b).unwrap().unwrap());

    let c = PartialBijection::parse(2, "1->1").unwrap();
    assert_eq!(c.join(&a).unwrap(), None);
    println!("{c} and {a} are not compatible");

    println!("rook matrix of {b}: {:?}", b.to_rook().entries());
    for n in 0..=4 {
        assert_eq!(enumerate(n).count() as u128, order(n));
        println!("|I_{n}| = {}", order(n));
    }
}

fn main() {
    run_example();
}

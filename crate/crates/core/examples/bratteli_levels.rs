// Bratteli diagrams, their level monoids, and elements of the limit.

use foulis::bratteli::BratteliDiagram;
use foulis::partial_bijections::PartialBijection;
use foulis::semisimple::SemisimpleElement;

fn run_example() {
    let text = r#"{"levels":[2,2],"mults":[[[1],[1]],[[1,1],[1,0]]]}"#;
    let d = BratteliDiagram::from_json(text).unwrap();
    assert_eq!(d.to_json(), text);
    for level in 0..=d.depth() {
        let sig = d.level_monoid_signature(level).unwrap();
        println!("level {level}: sizes {:?}, |S| = {}", d.size_vector(level).unwrap(), sig.order());
    }

    let car = BratteliDiagram::car(3);
    let swap = SemisimpleElement::new(vec![PartialBijection::parse(2, "1->2,2->1").unwrap()]).unwrap();
    let a = car.element(1, swap).unwrap();
    let top = a.push_to_level(3).unwrap();
    println!("CAR: {} at level 1 is {} at level 3", a.value(), top.value());
    assert!(a.af_equal(&top).unwrap());
    assert!(a.af_multiply(&a).unwrap().is_unit());
}

fn main() {
    run_example();
}

// Path pairs in a Bratteli diagram and their refinement to the next level.

use foulis::bratteli::BratteliDiagram;
use foulis::graph_inverse::GraphInverseMonoid;
use foulis::partial_bijections::PartialBijection;
use foulis::semisimple::{apply_standard, SemisimpleElement};

fn run_example() {
    let d = BratteliDiagram::pascal(2);
    let g = GraphInverseMonoid::new(&d);
    println!("{} elements, {} idempotents", g.elements().len(), g.idempotents().len());

    let s = SemisimpleElement::new(vec![PartialBijection::identity(1), PartialBijection::identity(1)]).unwrap();
    let pairs = g.from_semisimple(1, &s).unwrap();
    let refined = g.epsilon_level_map(1, &pairs).unwrap();
    let shown: Vec<String> = refined.iter().map(|p| p.to_string()).collect();
    println!("ε({s}) = {}", shown.join(" ∨ "));

    let direct = apply_standard(&d.level_morphism(1).unwrap(), &s).unwrap();
    assert_eq!(g.to_semisimple(2, &refined).unwrap(), direct);
    println!("agrees with the standard morphism: {direct}");
    assert_eq!(g.j_class_hasse(), g.diagram_edges());
}

fn main() {
    run_example();
}

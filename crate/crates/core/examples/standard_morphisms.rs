// Semisimple monoids and the block-diagonal maps between them.

use foulis::semisimple::{
    apply_standard, compose_standard, composition_letter_isomorphism, morphism_exists, SemisimpleElement,
    Signature, StandardMorphism,
};
use foulis::partial_bijections::PartialBijection;

fn run_example() {
    let source = Signature::new(vec![1, 2]).unwrap();
    // Target sizes follow from the matrix: (1·1 + 1·2, 0·1 + 1·2) = (3, 2).
    let sigma = StandardMorphism::from_matrix(source, vec![vec![1, 1], vec![0, 1]]).unwrap();
    println!("σ = {sigma}, target {}", sigma.target());

    let x = SemisimpleElement::new(vec![
        PartialBijection::identity(1),
        PartialBijection::parse(2, "1->2").unwrap(),
    ])
    .unwrap();
    let y = apply_standard(&sigma, &x).unwrap();
    println!("σ({x}) = {y}");
    println!("rank vector {:?} ↦ {:?}", x.rank_vector(), y.rank_vector());

    let tau = StandardMorphism::from_matrix(sigma.target().clone(), vec![vec![1, 2]]).unwrap();
    let rho = compose_standard(&tau, &sigma).unwrap();
    println!("τ ∘ σ has matrix {:?}", rho.mult());
    let beta = composition_letter_isomorphism(&tau, &sigma).unwrap();
    println!("letter isomorphism per component: {}", beta[0]);

    let table: Vec<String> = (1..=6)
        .map(|m| (1..=12).map(|n| if morphism_exists(m, n) { '#' } else { '.' }).collect())
        .collect();
    println!("I_m → I_n exists (m = 1..6, n = 1..12):\n{}", table.join("\n"));
}

fn main() {
    run_example();
}

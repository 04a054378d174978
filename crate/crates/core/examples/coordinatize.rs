// Recover a semisimple monoid from a finite MV-algebra.

use foulis::coordinatize::coordinatize;
use foulis::effect::{chain_product, FiniteMvAlgebra};

fn run_example() {
    let json = chain_product(&[1, 2]).unwrap().to_json();
    println!("input tables: {json}");
    let m = FiniteMvAlgebra::from_json(&json).unwrap();
    let c = coordinatize(&m).unwrap();
    println!("chains {:?}, signature {}", c.chains, c.signature);
    for (name, ranks) in m.base().names().iter().zip(&c.witness) {
        println!("  {name} ↦ ranks {ranks:?}");
    }
    assert_eq!(c.signature.sizes(), &[1, 2]);
}

fn main() {
    run_example();
}

// Simplicial groups, positive maps between levels, and the intervals
// `[0, u]` matching level quotients.

use foulis::bratteli::BratteliDiagram;
use foulis::coordinatize::report_interval;
use foulis::dimension::{dyadic_value, interval_algebra, intertwine_check, PositiveHom, SimplicialGroup};

fn run_example() {
    let d = BratteliDiagram::pascal(3);
    for level in 0..=d.depth() {
        let r = report_interval(&d, level).unwrap();
        println!(
            "level {level}: unit {:?}, |[0,u]| = {}, quotient ≅ interval: {:?}",
            r.unit, r.interval_size, r.verified
        );
    }
    for level in 0..d.depth() {
        let hom = PositiveHom::from_level(&d, level).unwrap();
        assert!(hom.is_normalized());
        assert!(intertwine_check(&d.level_morphism(level).unwrap()).unwrap());
        println!("level {level} → {}: {:?}", level + 1, hom.matrix());
    }

    let g = SimplicialGroup::new(vec![2, 1]).unwrap();
    let mv = interval_algebra(&g);
    println!("[0,(2,1)] has {} elements: {}", mv.len(), mv.base().names().join(" "));
    println!("3/8 = {}", dyadic_value(3, 3).unwrap());
}

fn main() {
    run_example();
}

// Prefix codes over a finite alphabet as clopen subsets of Cantor space.

use foulis::prefix::{PrefixCode, Word};

fn run_example() {
    let x = PrefixCode::parse(2, "aa+aba+b").unwrap();
    println!("X = {x}, length {}, measure {}", x.length(), x.bernoulli());
    println!("maximal: {}", x.is_maximal());

    let u = x.uniformize(3).unwrap();
    println!("uniformized: {u} ({} words)", u.len());
    assert!(u.clopen_equal(&x).unwrap());
    assert_eq!(u.minimize(), x);

    let b = Word::parse(2, "b").unwrap();
    let wide = x.extend(&b, 2).unwrap();
    println!("extend at b by 2: {wide}");
    println!("reduce back: {}", wide.reduce(&b, 2).unwrap());

    let y = PrefixCode::parse(2, "a+bb").unwrap();
    println!("X ∩ Y = {}", x.intersection(&y).unwrap());
    println!("X ∪ Y = {}", x.union(&y).unwrap());
    println!("X \\ Y = {}", x.difference(&y).unwrap());
}

fn main() {
    run_example();
}

//! Pipe dreams of a permutation, reduction of non-reduced dreams, and the
//! beta-Grothendieck polynomial they generate, cross-checked against the
//! divided-difference recursion.

use glidepoly::grothendieck::{
    grothendieck_poly, grothendieck_via_divided_difference, schubert_poly, AscentChoice,
};
use glidepoly::pipedream::enumerate_pd;
use glidepoly::Permutation;

fn main() {
    let w: Permutation = "1432".parse().unwrap();
    let pds = enumerate_pd(&w);
    println!("{} pipe dreams for w = {w}:", pds.len());
    for p in &pds {
        println!(
            "excess {}  weight ({})  reduced: {}",
            p.excess(),
            p.weight(),
            p.is_reduced()
        );
        println!("{}", p.render());
    }

    let k = grothendieck_poly(&w);
    println!("K_{w} = {k}");
    println!("S_{w} = {}", schubert_poly(&w));

    let via_ops = grothendieck_via_divided_difference(&w, AscentChoice::First);
    assert_eq!(k, via_ops);
    println!("\npipe dream sum agrees with the divided-difference recursion");
}

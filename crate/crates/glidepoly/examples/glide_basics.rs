//! Glides of a weak composition, the glide polynomial they sum to, and the
//! generic expansion of a polynomial in the glide basis.

use glidepoly::basis::{expand_in_glide, glide_poly, slide_poly};
use glidepoly::WeakComposition;

fn main() {
    let a = WeakComposition::new(vec![0, 1, 0, 2]);
    println!("glides of ({a}):");
    for b in a.glides() {
        println!("  {b}   excess {}", b.excess());
    }

    let g = glide_poly(&a);
    println!("\nG_({a}) = {g}");
    println!("F_({a}) = {}", slide_poly(&a));

    // Any polynomial expands uniquely; a glide polynomial is its own expansion.
    let product = g.mul(&glide_poly(&WeakComposition::new(vec![1, 0, 0, 0])));
    println!("\nG_(0,1,0,2) * G_(1,0,0,0) in the glide basis:");
    for (idx, c) in expand_in_glide(&product) {
        println!("  {c} * b^{} * G_({})", idx.beta_power, idx.shape);
    }
}

//! Littlewood-Richardson coefficients: the glide expansion of a product of
//! two beta-Grothendieck polynomials.

use glidepoly::basis::reassemble_glide;
use glidepoly::genomic::lr_coefficients;
use glidepoly::grothendieck::grothendieck_poly;
use glidepoly::Permutation;

fn main() {
    let u: Permutation = "132".parse().unwrap();
    let v: Permutation = "213".parse().unwrap();
    println!("K_{u} = {}", grothendieck_poly(&u));
    println!("K_{v} = {}", grothendieck_poly(&v));

    println!("\nK_{u} * K_{v} in the glide basis:");
    let exp = lr_coefficients(&u, &v);
    for (idx, c) in &exp {
        println!("  {c} * b^{} * G_({})", idx.beta_power, idx.shape);
    }

    let product = grothendieck_poly(&u).mul(&grothendieck_poly(&v));
    assert_eq!(reassemble_glide(exp.iter(), u.n()), product);
    println!("\nreassembly recovers the polynomial product");
}

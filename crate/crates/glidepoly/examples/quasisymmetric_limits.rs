//! Fundamental and multi-fundamental quasisymmetric polynomials, the
//! quasisymmetric glide basis, and stable limits of glide polynomials.

use glidepoly::basis::{
    expand_unsplit, fundamental_qs, glide_poly, multifundamental_truncated, quasisym_glide,
    stable_limit_check,
};
use glidepoly::{StrongComposition, WeakComposition};

fn main() {
    let a = StrongComposition::new(vec![1, 2]);
    println!("F_({a})(x1..x3) = {}", fundamental_qs(&a, 3));
    println!("L~_({a})(x1..x3) = {}", multifundamental_truncated(&a, 3));
    println!("quasisymmetric glide G_({a}) in 4 vars = {}", quasisym_glide(&a, 4));

    println!("\nunsplit glides of (0,0,1,2):");
    let shape = WeakComposition::new(vec![0, 0, 1, 2]);
    for b in shape.unsplit_glides() {
        println!("  {b}");
    }

    println!("\nmulti-fundamental expansion of the quasisymmetric glide G_(1,2) in 4 vars:");
    for ((c, k), coeff) in expand_unsplit(&a, 4) {
        println!("  {coeff} * b^{k} * L~_({c})");
    }

    // Prepending zeros and truncating approaches the multi-fundamental limit.
    for m in 2..=4 {
        let a = WeakComposition::new(vec![2, 1]);
        assert!(stable_limit_check(&a, m));
        println!("stable limit check passes for (2,1) truncated to {m} variables");
    }
    let padded = WeakComposition::new(vec![2, 1]).prepend_zeros(3);
    println!(
        "\nG^(1)_(0,0,0,2,1) restricted to x1..x3 = {}",
        glide_poly(&padded).specialize_beta(1).restrict_vars(3)
    );
}

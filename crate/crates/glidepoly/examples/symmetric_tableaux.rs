//! Set-valued tableaux, the Buch formula for symmetric beta-Grothendieck
//! polynomials, and the compacted quasi-Yamanouchi expansion in glide
//! polynomials.

use glidepoly::basis::reassemble_glide;
use glidepoly::tableau::{
    buch_poly, enumerate_qsv, enumerate_svt, grassmannian_of, symmetric_glide_expansion,
};
use glidepoly::Partition;

fn main() {
    let lam = Partition::new(vec![2, 1]);
    let n = 3;
    let svt = enumerate_svt(&lam, n);
    let qsv = enumerate_qsv(&lam, n);
    println!("shape ({lam}), entries <= {n}: {} set-valued tableaux", svt.len());
    println!("{} of them are quasi-Yamanouchi:", qsv.len());
    for t in &qsv {
        println!("  {t}   excess {}", t.excess());
    }

    let k = buch_poly(&lam, n);
    println!("\nK_({lam})(x1..x{n}) = {k}");
    println!("Grassmannian permutation: {}", grassmannian_of(&lam, n));

    println!("\nglide expansion via quasi-Yamanouchi tableaux:");
    let exp = symmetric_glide_expansion(&lam, n);
    for (idx, c) in &exp {
        println!("  {c} * b^{} * G_({})", idx.beta_power, idx.shape);
    }
    assert_eq!(reassemble_glide(exp.iter(), n), k);
    println!("reassembly recovers the Buch sum");
}

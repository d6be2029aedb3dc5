//! Destandardization of pipe dreams, quasi-Yamanouchi representatives, and
//! the glide expansion of a beta-Grothendieck polynomial they index.

use glidepoly::basis::reassemble_glide;
use glidepoly::grothendieck::{glide_expansion, grothendieck_poly};
use glidepoly::pipedream::{enumerate_pd, enumerate_qpd};
use glidepoly::Permutation;

fn main() {
    let w: Permutation = "13524".parse().unwrap();
    let pds = enumerate_pd(&w);
    let qpds = enumerate_qpd(&w);
    println!("w = {w}: {} pipe dreams, {} quasi-Yamanouchi", pds.len(), qpds.len());

    for q in &qpds {
        println!("excess {}  weight ({})", q.excess(), q.weight());
    }

    // dst sends each pipe dream to a quasi-Yamanouchi one for the same w.
    for p in pds.iter().take(3) {
        let d = p.destandardize();
        assert_eq!(d.permutation(), w);
        assert!(d.is_quasi_yamanouchi());
    }

    println!("\nK_{w} in the glide basis:");
    let exp = glide_expansion(&w);
    for (idx, c) in &exp {
        println!("  {c} * b^{} * G_({})", idx.beta_power, idx.shape);
    }
    assert_eq!(reassemble_glide(exp.iter(), w.n()), grothendieck_poly(&w));
    println!("reassembling the expansion recovers K_{w}");
}

//! The genomic shuffle product, genomic shuffle sets, bump runs, and glide
//! structure constants for products of glide polynomials.

use glidepoly::basis::{glide_poly, reassemble_glide, GlideIndex};
use glidepoly::genomic::{bump_runs, genomic_shuffle, glide_product, gss, runs};
use glidepoly::WeakComposition;

fn main() {
    let by_len = |l: usize| {
        genomic_shuffle(&[3, 3, 1], &[6, 2], 8)
            .iter()
            .filter(|w| w.0.len() == l)
            .count()
    };
    println!("331 genomic-shuffle 62: {} words of length 6, {} of length 7, {} of length 8",
        by_len(6), by_len(7), by_len(8));

    let a = WeakComposition::new(vec![0, 2, 1]);
    let b = WeakComposition::new(vec![1, 0, 1]);
    let set = gss(&a, &b);
    println!("\nGSS(({a}), ({b})): {} words", set.len());
    for w in set.iter().take(6) {
        println!("  {w}");
    }

    let c: glidepoly::genomic::GenWord = "3^1 3^2 6^1 1^1 2^1".parse().unwrap();
    println!("\nRuns({c}) = {}", runs(&c));
    println!("BumpRuns = {}", bump_runs(&c, &a, &b));

    println!("\nglide product G_({a}) * G_({b}):");
    let prod = glide_product(&a, &b);
    for (shape, mult) in &prod {
        println!("  g^({shape}) = {mult}");
    }

    // The structure constants reassemble the honest polynomial product.
    let offset = (a.size() + b.size()) as i64;
    let lhs = glide_poly(&a).mul(&glide_poly(&b));
    let terms: std::collections::BTreeMap<GlideIndex, i64> = prod
        .iter()
        .map(|(c, &m)| (GlideIndex::new((c.size() as i64 - offset) as u32, c.clone()), m))
        .collect();
    assert_eq!(lhs, reassemble_glide(terms.iter(), a.len()));
    println!("\nstructure constants reassemble the product exactly");
}

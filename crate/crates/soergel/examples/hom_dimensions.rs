//! Degreewise hom-space dimensions solved exactly, checked against the
//! Hecke pairing convolved with the Hilbert series of the polynomial ring.

use soergel::homsolve::{self, hom_basis, HomQuery};

fn main() {
    let n = 2;

    // The start dot spans the degree-1 maps from the empty word to (1).
    assert_eq!(homsolve::hom_dimension(n + 1, &HomQuery::new(&[], &[1], 1)), 1);
    assert_eq!(homsolve::hom_dimension(n + 1, &HomQuery::new(&[], &[1], -1)), 0);

    // B_1 B_1 = B_1{1} + B_1{-1} shows up as dimensions.
    let (lines, ok) = homsolve::compare(n, &[1, 1], &[1], -3..=3);
    for l in &lines {
        println!("{l}");
    }
    assert!(ok);

    // The braid-move isomorphism B_121 = B_212 (+) correction, degreewise.
    let (lines, ok) = homsolve::compare(n, &[1, 2, 1], &[2, 1, 2], -3..=3);
    for l in &lines {
        println!("{l}");
    }
    assert!(ok);

    // Solved maps are honest bimodule maps of the right degree.
    for m in hom_basis(n + 1, &HomQuery::new(&[1], &[2, 1], 1)) {
        assert!(m.check_bimodule());
        assert_eq!(m.degree(), Some(1));
    }
    println!("solved bases pass the bimodule check");
}

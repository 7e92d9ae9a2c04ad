//! Hecke algebra arithmetic in the b-generator basis: defining relations,
//! the bar involution, the omega twist, the trace, and the pairing.

use soergel::hecke::HeckeElt;
use soergel::laurent::Laurent;

fn main() {
    // S_4: permutations of degree 4, generators b_1, b_2, b_3.
    let k = 4;
    let b1 = HeckeElt::b_gen(k, 1);
    let b2 = HeckeElt::b_gen(k, 2);

    // b_i^2 = (t + t^-1) b_i.
    let lhs = b1.mul(&b1);
    let rhs = b1.scale(&(&Laurent::t_pow(1) + &Laurent::t_pow(-1)));
    assert_eq!(lhs, rhs);
    println!("b1 * b1            = {lhs}");

    // The one-sided braid relation b1 b2 b1 + b2 = b2 b1 b2 + b1.
    let l = b1.mul(&b2).mul(&b1).add(&b2);
    let r = b2.mul(&b1).mul(&b2).add(&b1);
    assert_eq!(l, r);
    println!("b1 b2 b1 + b2      = {l}");

    // bar fixes every b-monomial; omega composes bar with the flip.
    let b121 = HeckeElt::b_monomial(k, &[1, 2, 1]);
    assert_eq!(b121.bar(), b121);
    println!("omega(b121)        = {}", b121.omega());

    // The trace picks out the identity coefficient; the pairing of 1 with
    // an increasing monomial is a pure power of t.
    println!("tau(b121)          = {}", b121.tau());
    let one = HeckeElt::one(k);
    let b123 = HeckeElt::b_monomial(k, &[1, 2, 3]);
    let p = one.pairing(&b123);
    assert_eq!(p, Laurent::t_pow(3));
    println!("(1, b123)          = {p}");
    println!("(b121, b121)       = {}", b121.pairing(&b121));
}

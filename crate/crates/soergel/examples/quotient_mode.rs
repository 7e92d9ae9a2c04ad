//! Quotient mode: all polynomial coefficients reduced modulo the ideal of
//! positive-degree symmetric polynomials. The whole relation suite still
//! holds, and a few identities become available that are false upstairs.

use soergel::morphism::poly_box;
use soergel::poly::{parse_poly, Poly};
use soergel::relations;

fn main() {
    let n = 3;
    let rep = relations::verify_quotient_mode(n);
    println!("{}", rep.summary());
    assert!(rep.all_passed());

    // With one color and two variables, x1 = (x1 - x2)/2 in the quotient,
    // so a box with x1 is half a barbell.
    let barbell = soergel::diagram::parse_diagram("dot_s:1 ; dot_e:1").unwrap();
    let half = num::BigRational::new(1.into(), 2.into());
    let half_barbell = barbell.evaluate(2).scale(&half);
    assert!(poly_box(2, &Poly::var(2, 1)).eq_mod_quotient(&half_barbell));
    assert_eq!(
        Poly::var(2, 1).quotient_reduce(),
        parse_poly(2, "x1 - x2").unwrap().scale(&half).quotient_reduce()
    );
    println!("box(x1) = barbell/2 in the quotient");
}

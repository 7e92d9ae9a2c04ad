//! Exact polynomial arithmetic over the rationals: Demazure operators, the
//! invariant/linear split they induce, and the symmetric-ideal quotient.

use soergel::poly::{parse_poly, Poly};

fn main() {
    let nvars = 3;
    let f = parse_poly(nvars, "x1^2*x2 + x3").unwrap();
    println!("f          = {f}");

    // Demazure lowers degree by one x-power and lands in s_i-invariants.
    let df = f.demazure(1);
    println!("d_1 f      = {df}");
    assert_eq!(df.act_simple(1), df);

    // f = P_1 f + x_1 d_1 f splits off the invariant part.
    let pf = f.p_part(1);
    let reassembled = &pf + &(&Poly::var(nvars, 1) * &df);
    assert_eq!(reassembled, f);
    println!("P_1 f      = {pf}");

    // d_i squared vanishes.
    assert!(df.demazure(1).is_zero());

    // In the quotient modulo positive-degree symmetric polynomials, the
    // elementary symmetric e1 disappears.
    let e1 = parse_poly(nvars, "x1 + x2 + x3").unwrap();
    assert!(e1.quotient_reduce().is_zero());
    println!("e1 reduces to {}", e1.quotient_reduce());
    println!("x3 reduces to {}", Poly::var(nvars, 3).quotient_reduce());
}

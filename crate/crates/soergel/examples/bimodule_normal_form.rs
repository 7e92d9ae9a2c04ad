//! Bott–Samelson bimodule elements: raw tensors, the canonical normal form,
//! and the two-sided polynomial action.

use soergel::bimodule::{BSElement, Shape};
use soergel::poly::Poly;

fn main() {
    let nvars = 3;
    let shape = Shape::bs(&[1, 2]);
    println!("shape B(1,2): rank {}", shape.rank());

    // A raw tensor: slots are the regions between strands, left to right.
    let x2 = Poly::var(nvars, 2);
    let raw = BSElement::from_raw(
        shape.clone(),
        nvars,
        &[Poly::one(nvars), x2.clone(), Poly::one(nvars)],
    );
    println!("1 (x) x2 (x) 1 normalizes to:");
    for (tuple, p) in raw.coords() {
        println!("  basis {tuple:?} coefficient {p}");
    }

    // Variables that are invariant for every strand to their left slide all
    // the way out and become left coefficients.
    let x2_right = BSElement::one_tensor(shape.clone(), nvars).right_mul(&x2);
    let x2_left = BSElement::one_tensor(shape, nvars).left_mul(&x2);
    println!("right action equals left action here: {}", x2_right == x2_left);
    assert_ne!(x2_right, x2_left);
    println!("degree of the 1-tensor: {:?}", BSElement::one_tensor(Shape::bs(&[1]), 2).degree());
}

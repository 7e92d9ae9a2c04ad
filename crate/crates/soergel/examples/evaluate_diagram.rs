//! Parsing and evaluating string diagrams: every diagram becomes an exact
//! matrix of bimodule elements, graded by its combinatorial degree.

use soergel::diagram::parse_diagram;

fn main() {
    let nvars = 3;

    // A start dot followed by an end dot is a double dot: the "barbell".
    let barbell = parse_diagram("dot_s:1 ; dot_e:1").unwrap();
    println!("barbell degree {}", barbell.degree());
    println!("{}", barbell.evaluate(nvars));

    // The 6-valent vertex relating (1,2,1) and (2,1,2).
    let six = parse_diagram("six:1").unwrap();
    let m = six.evaluate(nvars);
    println!("six: degree {} homogeneous {:?}", six.degree(), m.degree());
    assert!(m.check_bimodule());
    assert_eq!(m.degree(), Some(0));

    // Stacking composes; juxtaposition tensors. Both are functorial.
    let cap = parse_diagram("cap:1").unwrap();
    let cup = parse_diagram("cup:1").unwrap();
    let circle = cup.stack(&cap).unwrap();
    println!("circle evaluates to zero: {}", circle.evaluate(nvars).is_zero());
    assert!(circle.evaluate(nvars).is_zero());

    let pair = cup.beside(&cap).unwrap();
    assert_eq!(
        pair.evaluate(nvars),
        cup.evaluate(nvars).compose_h(&cap.evaluate(nvars))
    );
    println!("juxtaposition matches horizontal composition");
}

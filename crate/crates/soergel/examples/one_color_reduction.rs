//! One-color planar graphs reduce to simple forests: circles vanish,
//! polygons open up, and double edges collapse, independent of evaluation.

use soergel::rewrite::{random_graph, OneColorGraph};

fn main() {
    // A lone circle reduces to the empty graph.
    let circle = OneColorGraph::parse("circles: 1").unwrap();
    let reduced = circle.reduce_to_simple_forest();
    println!("circle reduces to: {reduced}");
    assert!(reduced.is_empty());

    // A polygon: three trivalent vertices in a triangle with three legs.
    let triangle = OneColorGraph::parse(
        "vertices: a(tri) b(tri) c(tri) p(dot) q(dot) r(dot); \
         edges: a-b b-c c-a a-p b-q c-r; boundary: []",
    )
    .unwrap();
    let forest = triangle.reduce_to_simple_forest();
    println!("triangle with legs reduces to: {forest}");
    assert!(forest.is_simple_forest());

    // Random closed graphs all normalize.
    let mut kept = 0;
    for seed in 0..25u64 {
        let g = random_graph(seed, 12);
        let f = g.reduce_to_simple_forest();
        assert!(f.is_simple_forest());
        kept += usize::from(!f.is_empty());
    }
    println!("25 random graphs reduced; {kept} nonempty forests");
}

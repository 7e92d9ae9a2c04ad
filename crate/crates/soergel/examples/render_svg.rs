//! Rendering a diagram to SVG: colored strands, vertex marks, and labeled
//! polynomial boxes.

use soergel::diagram::parse_diagram;

fn main() {
    let d = parse_diagram("six:1 ; id:2 id:1 dot_e:2 ; split:2 id:1 ; merge:2 id:1 ; id:2 dot_e:1 ; box:(x1 - x2) id:2").unwrap();
    let svg = d.render_svg();
    assert!(svg.starts_with("<svg"));
    let path = std::env::temp_dir().join("soergel_six.svg");
    std::fs::write(&path, &svg).unwrap();
    println!("wrote {} ({} bytes)", path.display(), svg.len());
}

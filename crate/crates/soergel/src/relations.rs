//! A machine-checkable library of the defining relations of the one-color
//! diagrammatic calculus and their derived consequences.
//!
//! Every relation is stored as data — a pair of [`LinearCombo`]s over a
//! common boundary — so the suite doubles as machine-readable documentation.
//! Verification is by exact evaluation: both sides are turned into
//! [`MorphismMatrix`] values over `Q[x_1..x_{n+1}]` and compared entrywise.
//!
//! [`builtin_relations`] instantiates every family for every admissible color
//! tuple within `1..=n`, including the color-swapped variants of the
//! two-color relations, the derived dot/needle consequences (circle removal,
//! polygon reduction, needle with a polynomial in the eye), the twist-derived
//! Frobenius relations, biadjointness composites, and color-elimination spot
//! checks. The full suite needs `n >= 5` (the R3 move wants three mutually
//! distant colors); for smaller `n` the admissible subset is produced along
//! with a report of skipped families.

use std::fmt::Write as _;

use num::One;

use crate::bimodule::{BSElement, Shape};
use crate::diagram::{parse_diagram, Diagram, LinearCombo};
use crate::linalg::Q;
use crate::poly::Poly;

/// A single relation instance: two rational linear combinations of diagrams
/// sharing a domain, codomain and combinatorial degree.
#[derive(Clone, Debug)]
pub struct Relation {
    pub name: String,
    /// Human-readable color assignment, e.g. `"i=2 j=4"`.
    pub colors: String,
    pub dom: Vec<usize>,
    pub cod: Vec<usize>,
    pub lhs: LinearCombo,
    pub rhs: LinearCombo,
}

fn pd(s: &str) -> Diagram {
    parse_diagram(s).unwrap_or_else(|e| panic!("bad diagram {s:?}: {e}"))
}

fn combo(terms: &[(i64, Diagram)]) -> LinearCombo {
    LinearCombo::new(
        terms
            .iter()
            .map(|(c, d)| (Q::from_integer((*c).into()), d.clone()))
            .collect(),
    )
    .expect("mixed boundaries in a relation side")
}

impl Relation {
    /// Builds a relation from coefficient/diagram pairs, checking that all
    /// terms on both sides share boundaries and combinatorial degree. At
    /// least one side must be nonempty; an empty side denotes the zero map.
    pub fn from_diagrams(
        name: &str,
        colors: String,
        lhs: &[(i64, Diagram)],
        rhs: &[(i64, Diagram)],
    ) -> Relation {
        let first = lhs
            .first()
            .or_else(|| rhs.first())
            .unwrap_or_else(|| panic!("{name}: both sides empty"));
        let (dom, cod) = (first.1.domain(), first.1.codomain());
        let deg = first.1.degree();
        for (_, d) in lhs.iter().chain(rhs.iter()) {
            assert_eq!(d.domain(), dom, "{name}: domain mismatch");
            assert_eq!(d.codomain(), cod, "{name}: codomain mismatch");
            assert_eq!(d.degree(), deg, "{name}: degree mismatch");
        }
        Relation {
            name: name.to_string(),
            colors,
            dom,
            cod,
            lhs: combo(lhs),
            rhs: combo(rhs),
        }
    }

    /// Builds a relation from diagram source strings.
    pub fn new(name: &str, colors: String, lhs: &[(i64, &str)], rhs: &[(i64, &str)]) -> Relation {
        let parse = |side: &[(i64, &str)]| -> Vec<(i64, Diagram)> {
            side.iter().map(|(c, s)| (*c, pd(s))).collect()
        };
        Relation::from_diagrams(name, colors, &parse(lhs), &parse(rhs))
    }

    /// Common combinatorial degree of all terms.
    pub fn degree(&self) -> Option<i64> {
        self.lhs
            .terms
            .iter()
            .chain(self.rhs.terms.iter())
            .next()
            .map(|(_, d)| d.degree())
    }

    /// Evaluates both sides over `nvars` variables and compares. In quotient
    /// mode the comparison is performed after `quotient_reduce`. On failure
    /// returns a diff of mismatching matrix entries.
    pub fn verify(&self, nvars: usize, quotient: bool) -> Result<(), String> {
        let l = self.lhs.evaluate(nvars, &self.dom, &self.cod);
        let r = self.rhs.evaluate(nvars, &self.dom, &self.cod);
        let (l, r) = if quotient {
            (l.quotient_reduce(), r.quotient_reduce())
        } else {
            (l, r)
        };
        if l == r {
            return Ok(());
        }
        let mut diff = String::new();
        for (k, (cl, cr)) in l.columns().iter().zip(r.columns().iter()).enumerate() {
            if cl != cr {
                let _ = write!(diff, " col {k}: lhs {} vs rhs {};", dump_el(cl), dump_el(cr));
            }
        }
        Err(format!("mismatch:{diff}"))
    }
}

fn dump_el(e: &BSElement) -> String {
    let mut s = String::new();
    for (tuple, p) in e.coords() {
        let _ = write!(s, "[{tuple:?}]({p}) ");
    }
    if s.is_empty() {
        s.push('0');
    }
    s
}

/// Result of running a batch of relation checks.
#[derive(Clone, Debug, Default)]
pub struct SuiteReport {
    /// One line per instance: `PASS|FAIL <name> <colors>`.
    pub lines: Vec<String>,
    pub passed: usize,
    pub failed: usize,
    /// Families left out because `n` was too small.
    pub skipped_families: Vec<String>,
}

impl SuiteReport {
    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }

    fn record(&mut self, name: &str, colors: &str, outcome: Result<(), String>) {
        match outcome {
            Ok(()) => {
                self.passed += 1;
                self.lines.push(format!("PASS {name} {colors}"));
            }
            Err(e) => {
                self.failed += 1;
                self.lines.push(format!("FAIL {name} {colors} {e}"));
            }
        }
    }

    /// Machine-readable one-line summary with counts.
    pub fn summary(&self) -> String {
        format!(
            "passed={} failed={} skipped_families={}",
            self.passed,
            self.failed,
            self.skipped_families.join(",")
        )
    }
}

/// Runs `builtin_relations(n)` and verifies every instance; `quotient`
/// reruns the identical suite with all polynomials reduced modulo the
/// symmetric-ideal quotient.
pub fn run_suite(n: usize, quotient: bool) -> SuiteReport {
    let nvars = n + 1;
    let (rels, skipped) = builtin_relations(n);
    let mut rep = SuiteReport {
        skipped_families: skipped,
        ..SuiteReport::default()
    };
    for r in &rels {
        rep.record(&r.name, &r.colors, r.verify(nvars, quotient));
    }
    rep
}

/// A deliberately wrong relation (sign flipped in `doubleDot`); used as a
/// negative control to show the verifier can fail.
pub fn negative_control() -> Relation {
    Relation::new(
        "doubleDotMutated",
        "i=1".into(),
        &[(1, "dot_s:1 ; dot_e:1")],
        &[(1, "box:(x2 - x1)")],
    )
}

// --- family constructors -------------------------------------------------

/// One-color relations for color `i` over `nvars` variables.
fn one_color(i: usize, nvars: usize, out: &mut Vec<Relation>) {
    let c = format!("i={i}");
    let (xi, xp) = (format!("x{i}"), format!("x{}", i + 1));
    let r = |name: &str, lhs: &[(i64, &str)], rhs: &[(i64, &str)]| {
        Relation::new(name, c.clone(), lhs, rhs)
    };

    // Polynomial slides: the symmetric combinations x_i + x_{i+1} and
    // x_i x_{i+1} pass through an i-line, and any other variable slides
    // freely.
    out.push(r(
        "slideSum",
        &[
            (1, &format!("box:({xi}) id:{i}")),
            (1, &format!("box:({xp}) id:{i}")),
        ],
        &[
            (1, &format!("id:{i} box:({xi})")),
            (1, &format!("id:{i} box:({xp})")),
        ],
    ));
    out.push(r(
        "slideProd",
        &[(1, &format!("box:({xi}*{xp}) id:{i}"))],
        &[(1, &format!("id:{i} box:({xi}*{xp})"))],
    ));
    for j in 1..=nvars {
        if j == i || j == i + 1 {
            continue;
        }
        out.push(Relation::new(
            "slideDistantVar",
            format!("i={i} j={j}"),
            &[(1, &format!("box:(x{j}) id:{i}"))],
            &[(1, &format!("id:{i} box:(x{j})"))],
        ));
    }
    // General slides: f on the right of a line equals P_i(f) on the left
    // plus a Demazure correction, and symmetrically.
    for (tag, f) in [
        ("xi^2", &Poly::var(nvars, i) * &Poly::var(nvars, i)),
        ("xi*xp", &Poly::var(nvars, i) * &Poly::var(nvars, i + 1)),
        ("xp^2", &Poly::var(nvars, i + 1) * &Poly::var(nvars, i + 1)),
    ] {
        out.push(slide_general(i, nvars, tag, &f));
    }

    // Frobenius structure: (co)associativity, (co)unit, self-biadjointness,
    // the square/H law, and the twist-derived forms.
    out.push(r(
        "frobAssoc",
        &[(1, &format!("merge:{i} id:{i} ; merge:{i}"))],
        &[(1, &format!("id:{i} merge:{i} ; merge:{i}"))],
    ));
    out.push(r(
        "frobCoassoc",
        &[(1, &format!("split:{i} ; split:{i} id:{i}"))],
        &[(1, &format!("split:{i} ; id:{i} split:{i}"))],
    ));
    out.push(r(
        "frobUnitL",
        &[(1, &format!("dot_s:{i} id:{i} ; merge:{i}"))],
        &[(1, &format!("id:{i}"))],
    ));
    out.push(r(
        "frobUnitR",
        &[(1, &format!("id:{i} dot_s:{i} ; merge:{i}"))],
        &[(1, &format!("id:{i}"))],
    ));
    out.push(r(
        "frobCounitL",
        &[(1, &format!("split:{i} ; dot_e:{i} id:{i}"))],
        &[(1, &format!("id:{i}"))],
    ));
    out.push(r(
        "frobCounitR",
        &[(1, &format!("split:{i} ; id:{i} dot_e:{i}"))],
        &[(1, &format!("id:{i}"))],
    ));
    out.push(r(
        "biadjointR",
        &[(1, &format!("id:{i} cup:{i} ; cap:{i} id:{i}"))],
        &[(1, &format!("id:{i}"))],
    ));
    out.push(r(
        "biadjointL",
        &[(1, &format!("cup:{i} id:{i} ; id:{i} cap:{i}"))],
        &[(1, &format!("id:{i}"))],
    ));
    out.push(r(
        "frobLawL",
        &[(1, &format!("id:{i} split:{i} ; merge:{i} id:{i}"))],
        &[(1, &format!("merge:{i} ; split:{i}"))],
    ));
    out.push(r(
        "frobLawR",
        &[(1, &format!("split:{i} id:{i} ; id:{i} merge:{i}"))],
        &[(1, &format!("merge:{i} ; split:{i}"))],
    ));
    out.push(r(
        "twistMergeR",
        &[(1, &format!("split:{i} id:{i} ; id:{i} cap:{i}"))],
        &[(1, &format!("merge:{i}"))],
    ));
    out.push(r(
        "twistMergeL",
        &[(1, &format!("id:{i} split:{i} ; cap:{i} id:{i}"))],
        &[(1, &format!("merge:{i}"))],
    ));
    out.push(r(
        "twistSplitR",
        &[(1, &format!("cup:{i} id:{i} ; id:{i} merge:{i}"))],
        &[(1, &format!("split:{i}"))],
    ));
    out.push(r(
        "twistSplitL",
        &[(1, &format!("id:{i} cup:{i} ; merge:{i} id:{i}"))],
        &[(1, &format!("split:{i}"))],
    ));
    out.push(r(
        "twistDot1L",
        &[(1, &format!("dot_s:{i} id:{i} ; cap:{i}"))],
        &[(1, &format!("dot_e:{i}"))],
    ));
    out.push(r(
        "twistDot1R",
        &[(1, &format!("id:{i} dot_s:{i} ; cap:{i}"))],
        &[(1, &format!("dot_e:{i}"))],
    ));
    out.push(r(
        "twistDot2L",
        &[(1, &format!("cup:{i} ; dot_e:{i} id:{i}"))],
        &[(1, &format!("dot_s:{i}"))],
    ));
    out.push(r(
        "twistDot2R",
        &[(1, &format!("cup:{i} ; id:{i} dot_e:{i}"))],
        &[(1, &format!("dot_s:{i}"))],
    ));

    // Dot and needle relations, plus their derived consequences.
    out.push(r(
        "dotSpaceDot",
        &[(1, &format!("dot_e:{i} ; dot_s:{i}"))],
        &[
            (1, &format!("box:({xi}) id:{i}")),
            (-1, &format!("id:{i} box:({xp})")),
        ],
    ));
    out.push(r(
        "doubleDot",
        &[(1, &format!("dot_s:{i} ; dot_e:{i}"))],
        &[(1, &format!("box:({xi} - {xp})"))],
    ));
    out.push(r("needle", &[(1, &format!("cup:{i} ; merge:{i}"))], &[]));
    out.push(r("circle", &[(1, &format!("cup:{i} ; cap:{i}"))], &[]));
    // Circle and needle with a polynomial f in the eye: both reduce via the
    // Demazure of f.
    for (tag, f) in [
        ("xi", Poly::var(nvars, i)),
        ("xp", Poly::var(nvars, i + 1)),
        ("xi^2", &Poly::var(nvars, i) * &Poly::var(nvars, i)),
    ] {
        let df = f.demazure(i);
        let alpha = &Poly::var(nvars, i) - &Poly::var(nvars, i + 1);
        out.push(Relation::from_diagrams(
            "circleWithPoly",
            format!("i={i} f={tag}"),
            &[(1, mid_box_diagram(i, &f, "cap"))],
            &[(1, box_diagram(&(&df * &alpha)))],
        ));
        out.push(Relation::from_diagrams(
            "needleWithPoly",
            format!("i={i} f={tag}"),
            &[(1, mid_box_diagram(i, &f, "merge"))],
            &[(1, boxed_start_dot(i, &df))],
        ));
    }
    // Polygon reduction: a closed polygon all of whose regions are empty
    // vanishes (the needle opens it).
    out.push(r(
        "polygonZero",
        &[(
            1,
            &format!("cup:{i} ; split:{i} id:{i} ; id:{i} merge:{i} ; cap:{i}"),
        )],
        &[],
    ));
    // Biadjointness composites: cap/cup are the dotted composites, and a
    // double zigzag returns the cup.
    out.push(r(
        "capComposite",
        &[(1, &format!("merge:{i} ; dot_e:{i}"))],
        &[(1, &format!("cap:{i}"))],
    ));
    out.push(r(
        "cupComposite",
        &[(1, &format!("dot_s:{i} ; split:{i}"))],
        &[(1, &format!("cup:{i}"))],
    ));
    out.push(r(
        "cupDoubleZigzag",
        &[(
            1,
            &format!("cup:{i} ; id:{i} cup:{i} id:{i} ; id:{i} id:{i} cap:{i}"),
        )],
        &[(1, &format!("cup:{i}"))],
    ));
    // Two parallel lines decompose through a single line.
    out.push(r(
        "twoLines",
        &[(1, &format!("id:{i} id:{i}"))],
        &[
            (
                1,
                &format!("merge:{i} ; split:{i} ; id:{i} box:({xi}) id:{i}"),
            ),
            (
                -1,
                &format!("id:{i} box:({xp}) id:{i} ; merge:{i} ; split:{i}"),
            ),
        ],
    ));
}

/// `f` on the right of an `i`-line equals the invariant part on the left
/// plus the Demazure correction (and the mirrored version).
fn slide_general(i: usize, nvars: usize, tag: &str, f: &Poly) -> Relation {
    let pf = f.p_part(i);
    let df = f.demazure(i);
    let xi = Poly::var(nvars, i);
    use crate::diagram::Token;
    let lhs = Diagram::new(vec![vec![Token::Id(i), Token::Box(f.clone())]]).unwrap();
    let mut rhs = vec![(
        1,
        Diagram::new(vec![vec![Token::Box(pf), Token::Id(i)]]).unwrap(),
    )];
    if !df.is_zero() {
        rhs.push((
            1,
            Diagram::new(vec![vec![Token::Box(df), Token::Id(i), Token::Box(xi)]]).unwrap(),
        ));
    }
    Relation::from_diagrams("slideGeneral", format!("i={i} f={tag}"), &[(1, lhs)], &rhs)
}

/// `cup ; (f in the middle) ; close`, where `close` is `cap` or `merge`.
fn mid_box_diagram(i: usize, f: &Poly, close: &str) -> Diagram {
    use crate::diagram::Token;
    let mid = vec![Token::Id(i), Token::Box(f.clone()), Token::Id(i)];
    let close = match close {
        "cap" => Token::Cap(i),
        _ => Token::Merge(i),
    };
    Diagram::new(vec![vec![Token::Cup(i)], mid, vec![close]]).unwrap()
}

fn box_diagram(f: &Poly) -> Diagram {
    use crate::diagram::Token;
    Diagram::new(vec![vec![Token::Box(f.clone())]]).unwrap()
}

/// `box(f) ; dot_s` — a start dot premultiplied by a polynomial.
fn boxed_start_dot(i: usize, f: &Poly) -> Diagram {
    use crate::diagram::Token;
    Diagram::new(vec![vec![Token::Box(f.clone())], vec![Token::StartDot(i)]]).unwrap()
}

/// Two-color (adjacent) relations for colors `(i, i+1)`, in both color
/// variants.
fn adjacent_pair(i: usize, out: &mut Vec<Relation>) {
    let p = i + 1;
    let c = format!("i={i} p={p}");
    let cs = format!("i={i} p={p} swapped");
    let r = |name: &str, colors: &String, lhs: &[(i64, &str)], rhs: &[(i64, &str)]| {
        Relation::new(name, colors.clone(), lhs, rhs)
    };

    // Three parallel lines (i, i+1, i) decompose through the 6-valent
    // vertex and a dotted correction.
    out.push(r(
        "threeLines",
        &c,
        &[(1, &format!("id:{i} id:{p} id:{i}"))],
        &[
            (1, &format!("six:{i} ; sixr:{i}")),
            (
                -1,
                &format!(
                    "id:{i} dot_e:{p} id:{i} ; merge:{i} ; split:{i} ; id:{i} dot_s:{p} id:{i}"
                ),
            ),
        ],
    ));
    out.push(r(
        "threeLines",
        &cs,
        &[(1, &format!("id:{p} id:{i} id:{p}"))],
        &[
            (1, &format!("sixr:{i} ; six:{i}")),
            (
                -1,
                &format!(
                    "id:{p} dot_e:{i} id:{p} ; merge:{p} ; split:{p} ; id:{p} dot_s:{i} id:{p}"
                ),
            ),
        ],
    ));

    // Rotating the 6-valent vertex by 180 degrees (a full bend with nested
    // cups and caps) yields the opposite 6-valent vertex.
    out.push(r(
        "sixRot180",
        &c,
        &[(
            1,
            &format!(
                "id:{p} id:{i} id:{p} cup:{i} ; \
                 id:{p} id:{i} id:{p} id:{i} cup:{p} id:{i} ; \
                 id:{p} id:{i} id:{p} id:{i} id:{p} cup:{i} id:{p} id:{i} ; \
                 id:{p} id:{i} id:{p} six:{i} id:{i} id:{p} id:{i} ; \
                 id:{p} id:{i} cap:{p} id:{i} id:{p} id:{i} id:{p} id:{i} ; \
                 id:{p} cap:{i} id:{p} id:{i} id:{p} id:{i} ; \
                 cap:{p} id:{i} id:{p} id:{i}"
            ),
        )],
        &[(1, &format!("sixr:{i}"))],
    ));
    out.push(r(
        "sixRot180",
        &cs,
        &[(
            1,
            &format!(
                "id:{i} id:{p} id:{i} cup:{p} ; \
                 id:{i} id:{p} id:{i} id:{p} cup:{i} id:{p} ; \
                 id:{i} id:{p} id:{i} id:{p} id:{i} cup:{p} id:{i} id:{p} ; \
                 id:{i} id:{p} id:{i} sixr:{i} id:{p} id:{i} id:{p} ; \
                 id:{i} id:{p} cap:{i} id:{p} id:{i} id:{p} id:{i} id:{p} ; \
                 id:{i} cap:{p} id:{i} id:{p} id:{i} id:{p} ; \
                 cap:{i} id:{p} id:{i} id:{p}"
            ),
        )],
        &[(1, &format!("six:{i}"))],
    ));

    // A dot on one leg of the 6-valent vertex resolves into simpler terms.
    out.push(r(
        "sixDot",
        &c,
        &[(1, &format!("six:{i} ; id:{p} id:{i} dot_e:{p}"))],
        &[
            (
                1,
                &format!("dot_s:{p} id:{i} dot_e:{p} id:{i} ; id:{p} merge:{i}"),
            ),
            (1, &format!("dot_e:{i} id:{p} id:{i}")),
        ],
    ));
    out.push(r(
        "sixDot",
        &cs,
        &[(1, &format!("sixr:{i} ; id:{i} id:{p} dot_e:{i}"))],
        &[
            (
                1,
                &format!("dot_s:{i} id:{p} dot_e:{i} id:{p} ; id:{i} merge:{p}"),
            ),
            (1, &format!("dot_e:{p} id:{i} id:{p}")),
        ],
    ));

    // Double overlap associativity: a merge slides across the 6-valent
    // vertex, in merge and split forms.
    out.push(r(
        "doubleOverlapMerge",
        &c,
        &[(1, &format!("id:{i} id:{p} merge:{i} ; six:{i}"))],
        &[(
            1,
            &format!("six:{i} id:{i} ; id:{p} six:{i} ; merge:{p} id:{i} id:{p}"),
        )],
    ));
    out.push(r(
        "doubleOverlapMerge",
        &cs,
        &[(1, &format!("id:{p} id:{i} merge:{p} ; sixr:{i}"))],
        &[(
            1,
            &format!("sixr:{i} id:{p} ; id:{i} sixr:{i} ; merge:{i} id:{p} id:{i}"),
        )],
    ));
    out.push(r(
        "doubleOverlapSplit",
        &c,
        &[(
            1,
            &format!("six:{i} id:{i} ; split:{p} id:{i} id:{p} id:{i}"),
        )],
        &[(
            1,
            &format!(
                "id:{i} id:{p} split:{i} id:{i} ; six:{i} id:{i} id:{i} ; id:{p} six:{i} id:{i}"
            ),
        )],
    ));
    out.push(r(
        "doubleOverlapSplit",
        &cs,
        &[(
            1,
            &format!("sixr:{i} id:{p} ; split:{i} id:{p} id:{i} id:{p}"),
        )],
        &[(
            1,
            &format!(
                "id:{p} id:{i} split:{p} id:{p} ; sixr:{i} id:{p} id:{p} ; id:{i} sixr:{i} id:{p}"
            ),
        )],
    ));

    // Associativity with a dot: capping the extra strand of the double
    // overlap recovers the plain 6-valent vertex.
    out.push(r(
        "dotAssoc",
        &c,
        &[(1, &format!("six:{i}"))],
        &[(
            1,
            &format!("six:{i} dot_s:{i} ; id:{p} six:{i} ; merge:{p} id:{i} id:{p}"),
        )],
    ));
    out.push(r(
        "dotAssoc",
        &cs,
        &[(1, &format!("sixr:{i}"))],
        &[(
            1,
            &format!("sixr:{i} dot_s:{p} ; id:{i} sixr:{i} ; merge:{i} id:{p} id:{i}"),
        )],
    ));
}

/// Distant-color relations for an ordered pair `(i, j)` with `|i-j| >= 2`.
fn distant_pair(i: usize, j: usize, out: &mut Vec<Relation>) {
    let c = format!("i={i} j={j}");
    let r = |name: &str, lhs: &[(i64, &str)], rhs: &[(i64, &str)]| {
        Relation::new(name, c.clone(), lhs, rhs)
    };
    out.push(r(
        "R2",
        &[(1, &format!("cross:{i}:{j} ; cross:{j}:{i}"))],
        &[(1, &format!("id:{i} id:{j}"))],
    ));
    out.push(r(
        "crossDotEnd",
        &[(1, &format!("cross:{i}:{j} ; id:{j} dot_e:{i}"))],
        &[(1, &format!("dot_e:{i} id:{j}"))],
    ));
    out.push(r(
        "crossDotStart",
        &[(1, &format!("dot_s:{i} id:{j} ; cross:{i}:{j}"))],
        &[(1, &format!("id:{j} dot_s:{i}"))],
    ));
    out.push(r(
        "crossRot",
        &[(1, &format!("cross:{i}:{j} id:{i} ; id:{j} cap:{i}"))],
        &[(1, &format!("id:{i} cross:{j}:{i} ; cap:{i} id:{j}"))],
    ));
    out.push(r(
        "pullCrossThruTrivalent",
        &[(
            1,
            &format!("id:{i} cross:{i}:{j} ; cross:{i}:{j} id:{i} ; id:{j} merge:{i}"),
        )],
        &[(1, &format!("merge:{i} id:{j} ; cross:{i}:{j}"))],
    ));
}

/// A distant line pulls through the 6-valent vertex on colors `(i, i+1)`.
fn pull_thru_six(i: usize, j: usize, out: &mut Vec<Relation>) {
    let p = i + 1;
    out.push(Relation::new(
        "pullCrossThruSix",
        format!("i={i} p={p} j={j}"),
        &[(
            1,
            &format!(
                "id:{i} id:{p} cross:{i}:{j} ; id:{i} cross:{p}:{j} id:{i} ; \
                 cross:{i}:{j} id:{p} id:{i} ; id:{j} six:{i}"
            ),
        )],
        &[(
            1,
            &format!(
                "six:{i} id:{j} ; id:{p} id:{i} cross:{p}:{j} ; \
                 id:{p} cross:{i}:{j} id:{p} ; cross:{p}:{j} id:{i} id:{p}"
            ),
        )],
    ));
}

/// The R3 move for three mutually distant colors.
fn r3(i: usize, j: usize, k: usize, out: &mut Vec<Relation>) {
    out.push(Relation::new(
        "R3",
        format!("i={i} j={j} k={k}"),
        &[(
            1,
            &format!("cross:{i}:{j} id:{k} ; id:{j} cross:{i}:{k} ; cross:{j}:{k} id:{i}"),
        )],
        &[(
            1,
            &format!("id:{i} cross:{j}:{k} ; cross:{i}:{k} id:{j} ; id:{k} cross:{i}:{j}"),
        )],
    ));
}

/// The triple overlap associativity on colors `(a, a+1, a+2)`: two
/// move-by-move paths through the reduced-word graph of the longest element
/// of the parabolic S4, from `(a, a+2, a+1, a+2, a, a+1)` to
/// `(a+1, a+2, a, a+1, a, a+2)`.
fn triple_overlap_diagrams(off: usize) -> (Diagram, Diagram) {
    let (a, b, c) = (1 + off, 2 + off, 3 + off);
    let lhs = pd(&format!(
        "cross:{a}:{c} id:{b} id:{c} id:{a} id:{b} ; \
         id:{c} id:{a} id:{b} cross:{c}:{a} id:{b} ; \
         id:{c} six:{a} id:{c} id:{b} ; \
         id:{c} id:{b} id:{a} six:{b} ; \
         id:{c} id:{b} cross:{a}:{c} id:{b} id:{c} ; \
         sixr:{b} id:{a} id:{b} id:{c} ; \
         id:{b} id:{c} sixr:{a} id:{c}"
    ));
    let rhs = pd(&format!(
        "id:{a} sixr:{b} id:{a} id:{b} ; \
         id:{a} id:{b} id:{c} sixr:{a} ; \
         id:{a} id:{b} cross:{c}:{a} id:{b} id:{a} ; \
         six:{a} id:{c} id:{b} id:{a} ; \
         id:{b} id:{a} six:{b} id:{a} ; \
         id:{b} cross:{a}:{c} id:{b} id:{c} id:{a} ; \
         id:{b} id:{c} id:{a} id:{b} cross:{c}:{a}"
    ));
    (lhs, rhs)
}

fn triple_overlap(off: usize, out: &mut Vec<Relation>) {
    let (lhs, rhs) = triple_overlap_diagrams(off);
    out.push(Relation::from_diagrams(
        "tripleOverlap",
        format!("i={}", 2 + off),
        &[(1, lhs)],
        &[(1, rhs)],
    ));
}

/// Color-elimination spot checks: hand-built diagrams whose boundary omits a
/// color present in the interior evaluate to a diagram free of that color.
fn color_elimination(i: usize, j: usize, out: &mut Vec<Relation>) {
    // i and j distant; the interior color being eliminated is j.
    let c = format!("i={i} j={j}");
    let (xj, xq) = (format!("x{j}"), format!("x{}", j + 1));
    let r = |name: &str, lhs: &[(i64, &str)], rhs: &[(i64, &str)]| {
        Relation::new(name, c.clone(), lhs, rhs)
    };
    out.push(r(
        "colorElimBarbell",
        &[(1, &format!("dot_s:{j} ; dot_e:{j}"))],
        &[(1, &format!("box:({xj} - {xq})"))],
    ));
    out.push(r(
        "colorElimCircle",
        &[(1, &format!("cup:{j} ; cap:{j}"))],
        &[],
    ));
    out.push(r(
        "colorElimBarbellBesideLine",
        &[(1, &format!("dot_s:{j} id:{i} ; dot_e:{j} id:{i}"))],
        &[(1, &format!("box:({xj} - {xq}) id:{i}"))],
    ));
    out.push(r(
        "colorElimCircleBesideLine",
        &[(1, &format!("id:{i} cup:{j} ; id:{i} cap:{j}"))],
        &[],
    ));
    out.push(r(
        "colorElimNeedleBesideLine",
        &[(1, &format!("cup:{j} id:{i} ; merge:{j} id:{i}"))],
        &[],
    ));
    out.push(r(
        "colorElimBarbellAcrossLine",
        &[(
            1,
            &format!("dot_s:{j} id:{i} ; cross:{j}:{i} ; id:{i} dot_e:{j}"),
        )],
        &[(1, &format!("id:{i} box:({xj} - {xq})"))],
    ));
    out.push(r(
        "colorElimCircleWithVar",
        &[(
            1,
            &format!("cup:{j} ; id:{j} box:({xj}) id:{j} ; cap:{j}"),
        )],
        &[(1, &format!("box:({xj} - {xq})"))],
    ));
    out.push(r(
        "colorElimCappedNeedle",
        &[(1, &format!("cup:{j} ; merge:{j} ; dot_e:{j}"))],
        &[],
    ));
    out.push(r(
        "colorElimDottedEye",
        &[(
            1,
            &format!("dot_s:{j} ; split:{j} ; merge:{j} ; dot_e:{j}"),
        )],
        &[],
    ));
    out.push(r(
        "colorElimPolygonBesideLine",
        &[(
            1,
            &format!(
                "id:{i} cup:{j} ; id:{i} split:{j} id:{j} ; id:{i} id:{j} merge:{j} ; id:{i} cap:{j}"
            ),
        )],
        &[],
    ));
}

/// Instantiates every relation family for every admissible color tuple in
/// `1..=n` (with `n + 1` variables). Returns the relations plus the names of
/// families skipped because `n` is too small.
pub fn builtin_relations(n: usize) -> (Vec<Relation>, Vec<String>) {
    let nvars = n + 1;
    let mut rels = Vec::new();
    let mut skipped = Vec::new();
    for i in 1..=n {
        one_color(i, nvars, &mut rels);
    }
    if n >= 2 {
        for i in 1..n {
            adjacent_pair(i, &mut rels);
        }
    } else {
        skipped.push("adjacent".into());
    }
    if n >= 3 {
        for i in 1..=n {
            for j in 1..=n {
                if i.abs_diff(j) >= 2 {
                    distant_pair(i, j, &mut rels);
                    color_elimination(i, j, &mut rels);
                }
            }
        }
        for i in 1..n {
            for j in 1..=n {
                if j.abs_diff(i) >= 2 && j.abs_diff(i + 1) >= 2 {
                    pull_thru_six(i, j, &mut rels);
                }
            }
        }
        for off in 0..=(n - 3) {
            triple_overlap(off, &mut rels);
        }
    } else {
        skipped.push("distant".into());
        skipped.push("colorElimination".into());
        skipped.push("tripleOverlap".into());
    }
    if n >= 5 {
        for i in 1..=n {
            for j in (i + 2)..=n {
                for k in (j + 2)..=n {
                    r3(i, j, k, &mut rels);
                    r3(j, i, k, &mut rels);
                }
            }
        }
    } else {
        skipped.push("R3".into());
    }
    (rels, skipped)
}

// --- triple overlap generator check --------------------------------------

/// Checks the triple overlap move on the eight generators of the source
/// bimodule: both sides agree as matrices, and each generator maps to its
/// expected image (1-tensor to 1-tensor, the paired-strand generators to
/// single variables in the first or last region).
pub fn verify_triple_overlap_generators() -> SuiteReport {
    let nvars = 4;
    let (lhs, rhs) = triple_overlap_diagrams(0);
    let ml = lhs.evaluate(nvars);
    let mr = rhs.evaluate(nvars);
    let mut rep = SuiteReport::default();
    rep.record(
        "tripleOverlapSidesEqual",
        "i=2",
        if ml == mr {
            Ok(())
        } else {
            Err("matrices differ".into())
        },
    );

    let dom = Shape::bs(&lhs.domain());
    let cod = Shape::bs(&lhs.codomain());
    let x = |k: usize| Poly::var(nvars, k);
    // Source tensors in raw-slot form (slot k is the region right of strand
    // k; 7 slots for a 6-strand word) and their expected images.
    let src = |entries: &[(usize, Poly)]| -> Vec<Poly> {
        let mut slots = vec![Poly::one(nvars); 7];
        for (k, p) in entries {
            slots[*k] = &slots[*k] * p;
        }
        slots
    };
    let tgt = |entries: &[(usize, Poly)]| -> BSElement {
        let mut slots = vec![Poly::one(nvars); 7];
        for (k, p) in entries {
            slots[*k] = &slots[*k] * p;
        }
        BSElement::from_raw(cod.clone(), nvars, &slots)
    };
    let cases: Vec<(&str, Vec<Poly>, BSElement)> = vec![
        ("g1 oneTensor", src(&[]), tgt(&[])),
        ("g2 firstPair", src(&[(1, x(2))]), tgt(&[(6, x(4))])),
        ("g3 thirdPair", src(&[(2, x(3))]), tgt(&[(6, x(1))])),
        ("g4 middlePair", src(&[(3, x(3))]), tgt(&[(6, x(4))])),
        (
            "g5",
            src(&[(1, x(2)), (2, x(3))]),
            tgt(&[(6, &x(1) * &x(4))]),
        ),
        (
            "g6",
            src(&[(1, x(1)), (3, x(3))]),
            tgt(&[(0, &x(2) * &x(1))]),
        ),
        (
            "g7",
            src(&[(2, x(3)), (4, x(3))]),
            tgt(&[(0, &x(3) * &x(4))]),
        ),
        (
            "g8",
            src(&[(1, x(1)), (3, &x(2) * &x(3))]),
            tgt(&[(0, &x(2) * &x(1)), (6, x(1))]),
        ),
    ];
    for (name, slots, expected) in &cases {
        let e = BSElement::from_raw(dom.clone(), nvars, slots);
        let got_l = ml.apply(&e);
        let got_r = mr.apply(&e);
        let ok = got_l == *expected && got_r == *expected;
        rep.record(
            name,
            "i=2",
            if ok {
                Ok(())
            } else {
                Err(format!(
                    "image lhs {} rhs {} expected {}",
                    dump_el(&got_l),
                    dump_el(&got_r),
                    dump_el(expected)
                ))
            },
        );
    }
    rep
}

// --- quotient mode --------------------------------------------------------

/// Reruns the whole builtin suite with all polynomials reduced modulo the
/// ideal of positive-degree symmetric polynomials, plus the quotient-only
/// identities: the first elementary symmetric polynomial becomes the zero
/// box, and for a single color `x_1` is half a double dot.
pub fn verify_quotient_mode(n: usize) -> SuiteReport {
    let mut rep = run_suite(n, true);

    // e1 = x_1 + ... + x_{n+1} reduces to the empty (zero) polynomial.
    let nvars = n + 1;
    let mut e1 = Poly::zero(nvars);
    for k in 1..=nvars {
        e1 = &e1 + &Poly::var(nvars, k);
    }
    let e1_box = crate::morphism::poly_box(nvars, &e1).quotient_reduce();
    rep.record(
        "quotientE1Vanishes",
        "",
        if e1_box.is_zero() {
            Ok(())
        } else {
            Err("e1 box did not reduce to zero".into())
        },
    );

    // For n = 1: x_1 = (x_1 - x_2)/2 in the quotient, so a box(x_1) is half
    // a double dot.
    let dd = pd("dot_s:1 ; dot_e:1").evaluate(2);
    let half = Q::new(One::one(), 2.into());
    let box_x1 = crate::morphism::poly_box(2, &Poly::var(2, 1));
    rep.record(
        "quotientHalfDoubleDot",
        "n=1",
        if box_x1.eq_mod_quotient(&dd.scale(&half)) {
            Ok(())
        } else {
            Err("box(x1) != double dot / 2 in the quotient".into())
        },
    );
    rep
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suite_passes() {
        let rep = run_suite(2, false);
        for l in &rep.lines {
            assert!(l.starts_with("PASS"), "{l}");
        }
        assert!(rep.passed > 0);
    }

    #[test]
    fn negative_control_fails() {
        let r = negative_control();
        assert!(r.verify(2, false).is_err());
        assert!(r.verify(2, true).is_err());
    }

    #[test]
    fn triple_overlap_generator_images() {
        let rep = verify_triple_overlap_generators();
        for l in &rep.lines {
            assert!(l.starts_with("PASS"), "{l}");
        }
        assert_eq!(rep.passed, 9);
    }

    #[test]
    fn quotient_mode_small() {
        let rep = verify_quotient_mode(2);
        for l in &rep.lines {
            assert!(l.starts_with("PASS"), "{l}");
        }
    }

    #[test]
    fn skipped_families_reported_for_small_n() {
        let (_, skipped) = builtin_relations(2);
        assert!(skipped.contains(&"R3".to_string()));
        let (_, skipped) = builtin_relations(5);
        assert!(skipped.is_empty());
    }
}

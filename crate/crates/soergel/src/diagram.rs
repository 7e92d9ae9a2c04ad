//! Sliced term language for planar diagrams.
//!
//! A diagram is a stack of slices read bottom to top; each slice is a
//! left-to-right word of generator tokens. The text grammar separates
//! slices with `;` and tokens with whitespace; colors are integers:
//!
//! ```text
//! id:1 dot_s:2 ; merge:1 id:2   (ill-formed example, colors must match)
//! dot_s:1 ; split:1             (the cup as a two-slice diagram)
//! cross:1:3                     (4-valent crossing of distant colors)
//! six:2                         (6-valent vertex, (2,3,2) -> (3,2,3))
//! sixr:2                        (6-valent vertex, (3,2,3) -> (2,3,2))
//! box:(x1 - x2)                 (polynomial box on zero strands)
//! ```
//!
//! Terms are not canonical: equality of the morphisms they denote is
//! decided by evaluation, which mirrors the generator-by-generator
//! definition in [`crate::morphism`].

use std::fmt;

use num::Zero;
use thiserror::Error;

use crate::bimodule::Shape;
use crate::linalg::Q;
use crate::morphism::{
    cap, cup, end_dot, four_valent, merge, poly_box, six_valent_down, six_valent_up, split,
    start_dot, MorphismMatrix,
};
use crate::poly::{parse_poly, Poly};
use crate::rewrite::{GraphAssembler, OneColorGraph, VertexKind};

#[derive(Debug, Error)]
pub enum DiagramError {
    #[error("unknown token `{0}`")]
    UnknownToken(String),
    #[error("bad color in token `{0}`")]
    BadColor(String),
    #[error("boundary mismatch between slices: {0:?} vs {1:?}")]
    BoundaryMismatch(Vec<usize>, Vec<usize>),
    #[error("mixed boundaries in linear combination")]
    MixedBoundaries,
    #[error("polynomial: {0}")]
    Poly(String),
}

/// A single generator token with its color data.
#[derive(Clone, PartialEq, Debug)]
pub enum Token {
    Id(usize),
    EndDot(usize),
    StartDot(usize),
    Merge(usize),
    Split(usize),
    Cup(usize),
    Cap(usize),
    Box(Poly),
    FourValent(usize, usize),
    /// `(i, i+1, i) -> (i+1, i, i+1)`.
    SixUp(usize),
    /// `(i+1, i, i+1) -> (i, i+1, i)`.
    SixDown(usize),
}

impl Token {
    /// Colors along the lower boundary of the token.
    pub fn lower(&self) -> Vec<usize> {
        match self {
            Token::Id(i) => vec![*i],
            Token::EndDot(i) => vec![*i],
            Token::StartDot(_) => vec![],
            Token::Merge(i) => vec![*i, *i],
            Token::Split(i) => vec![*i],
            Token::Cup(_) => vec![],
            Token::Cap(i) => vec![*i, *i],
            Token::Box(_) => vec![],
            Token::FourValent(i, j) => vec![*i, *j],
            Token::SixUp(i) => vec![*i, *i + 1, *i],
            Token::SixDown(i) => vec![*i + 1, *i, *i + 1],
        }
    }

    /// Colors along the upper boundary of the token.
    pub fn upper(&self) -> Vec<usize> {
        match self {
            Token::Id(i) => vec![*i],
            Token::EndDot(_) => vec![],
            Token::StartDot(i) => vec![*i],
            Token::Merge(i) => vec![*i],
            Token::Split(i) => vec![*i, *i],
            Token::Cup(i) => vec![*i, *i],
            Token::Cap(_) => vec![],
            Token::Box(_) => vec![],
            Token::FourValent(i, j) => vec![*j, *i],
            Token::SixUp(i) => vec![*i + 1, *i, *i + 1],
            Token::SixDown(i) => vec![*i, *i + 1, *i],
        }
    }

    /// Combinatorial degree: dots +1, trivalent vertices -1, boxes +2 per
    /// polynomial degree step, crossings and cups/caps 0.
    pub fn degree(&self) -> i64 {
        match self {
            Token::EndDot(_) | Token::StartDot(_) => 1,
            Token::Merge(_) | Token::Split(_) => -1,
            Token::Box(p) => p.degree().unwrap_or(0),
            _ => 0,
        }
    }

    /// The matrix of the token under the evaluation functor.
    pub fn matrix(&self, nvars: usize) -> MorphismMatrix {
        match self {
            Token::Id(i) => MorphismMatrix::identity(Shape::bs(&[*i]), nvars),
            Token::EndDot(i) => end_dot(nvars, *i),
            Token::StartDot(i) => start_dot(nvars, *i),
            Token::Merge(i) => merge(nvars, *i),
            Token::Split(i) => split(nvars, *i),
            Token::Cup(i) => cup(nvars, *i),
            Token::Cap(i) => cap(nvars, *i),
            Token::Box(p) => poly_box(nvars, &p.with_nvars(nvars)),
            Token::FourValent(i, j) => four_valent(nvars, *i, *j),
            Token::SixUp(i) => six_valent_up(nvars, *i),
            Token::SixDown(i) => six_valent_down(nvars, *i),
        }
    }
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Token::Id(i) => write!(f, "id:{i}"),
            Token::EndDot(i) => write!(f, "dot_e:{i}"),
            Token::StartDot(i) => write!(f, "dot_s:{i}"),
            Token::Merge(i) => write!(f, "merge:{i}"),
            Token::Split(i) => write!(f, "split:{i}"),
            Token::Cup(i) => write!(f, "cup:{i}"),
            Token::Cap(i) => write!(f, "cap:{i}"),
            Token::Box(p) => write!(f, "box:({p})"),
            Token::FourValent(i, j) => write!(f, "cross:{i}:{j}"),
            Token::SixUp(i) => write!(f, "six:{i}"),
            Token::SixDown(i) => write!(f, "sixr:{i}"),
        }
    }
}

/// A planar diagram as a bottom-to-top stack of slices.
#[derive(Clone, PartialEq, Debug)]
pub struct Diagram {
    slices: Vec<Vec<Token>>,
}

impl Diagram {
    /// Builds a diagram, checking that adjacent slices' boundaries match.
    pub fn new(slices: Vec<Vec<Token>>) -> Result<Diagram, DiagramError> {
        let d = Diagram { slices };
        for w in d.slices.windows(2) {
            let up: Vec<usize> = w[0].iter().flat_map(|t| t.upper()).collect();
            let lo: Vec<usize> = w[1].iter().flat_map(|t| t.lower()).collect();
            if up != lo {
                return Err(DiagramError::BoundaryMismatch(up, lo));
            }
        }
        Ok(d)
    }

    pub fn slices(&self) -> &[Vec<Token>] {
        &self.slices
    }

    /// Colors along the lower boundary (the source).
    pub fn domain(&self) -> Vec<usize> {
        self.slices
            .first()
            .map(|s| s.iter().flat_map(|t| t.lower()).collect())
            .unwrap_or_default()
    }

    /// Colors along the upper boundary (the target).
    pub fn codomain(&self) -> Vec<usize> {
        self.slices
            .last()
            .map(|s| s.iter().flat_map(|t| t.upper()).collect())
            .unwrap_or_default()
    }

    /// Sum of token degrees.
    pub fn degree(&self) -> i64 {
        self.slices
            .iter()
            .flat_map(|s| s.iter())
            .map(Token::degree)
            .sum()
    }

    /// Vertical stacking: `self` below, `top` above.
    pub fn stack(&self, top: &Diagram) -> Result<Diagram, DiagramError> {
        let mut slices = self.slices.clone();
        slices.extend(top.slices.iter().cloned());
        Diagram::new(slices)
    }

    /// Horizontal juxtaposition: `self` left of `right`. The shorter
    /// factor is padded above with identity slices.
    pub fn beside(&self, right: &Diagram) -> Result<Diagram, DiagramError> {
        let h = self.slices.len().max(right.slices.len());
        let pad = |d: &Diagram, k: usize| -> Vec<Token> {
            if k < d.slices.len() {
                d.slices[k].clone()
            } else {
                d.codomain().into_iter().map(Token::Id).collect()
            }
        };
        let mut slices = Vec::with_capacity(h);
        for k in 0..h {
            let mut s = pad(self, k);
            s.extend(pad(right, k));
            slices.push(s);
        }
        Diagram::new(slices)
    }

    /// The evaluation functor: the vertical composite of the horizontal
    /// tensors of the token matrices.
    pub fn evaluate(&self, nvars: usize) -> MorphismMatrix {
        let mut acc: Option<MorphismMatrix> = None;
        for slice in &self.slices {
            let mut row = MorphismMatrix::identity(Shape::empty(), nvars);
            for tok in slice {
                row = row.compose_h(&tok.matrix(nvars));
            }
            acc = Some(match acc {
                None => row,
                Some(prev) => row.compose_v(&prev),
            });
        }
        acc.unwrap_or_else(|| MorphismMatrix::identity(Shape::empty(), nvars))
    }

    /// Extracts the subgraph of `i`-colored strands: 6-valent vertices
    /// with color `i` outside degenerate to trivalent vertices, crossings
    /// become through-strands, other colors vanish.
    pub fn i_graph(&self, color: usize) -> OneColorGraph {
        let mut asm = GraphAssembler::new();
        // Open ends of the current i-colored strands, left to right.
        let mut open: Vec<usize> = Vec::new();
        for &c in &self.domain() {
            if c == color {
                let b = asm.graph.add_vertex(VertexKind::Boundary);
                open.push(asm.strand_from_vertex(b));
            }
        }
        for slice in &self.slices {
            let mut next: Vec<usize> = Vec::new();
            let mut pos = 0usize; // index into `open`
            for tok in slice {
                let ins = tok.lower().iter().filter(|&&c| c == color).count();
                let ends: Vec<usize> = open[pos..pos + ins].to_vec();
                pos += ins;
                match tok {
                    Token::Id(c) | Token::FourValent(c, _) | Token::FourValent(_, c)
                        if *c == color =>
                    {
                        next.extend(ends);
                    }
                    Token::EndDot(c) if *c == color => {
                        let d = asm.graph.add_vertex(VertexKind::Dot);
                        asm.attach(ends[0], d);
                    }
                    Token::StartDot(c) if *c == color => {
                        let d = asm.graph.add_vertex(VertexKind::Dot);
                        next.push(asm.strand_from_vertex(d));
                    }
                    Token::Merge(c) if *c == color => {
                        let t = asm.graph.add_vertex(VertexKind::Trivalent);
                        asm.attach(ends[0], t);
                        asm.attach(ends[1], t);
                        next.push(asm.strand_from_vertex(t));
                    }
                    Token::Split(c) if *c == color => {
                        let t = asm.graph.add_vertex(VertexKind::Trivalent);
                        asm.attach(ends[0], t);
                        next.push(asm.strand_from_vertex(t));
                        next.push(asm.strand_from_vertex(t));
                    }
                    Token::Cup(c) if *c == color => {
                        let (a, b) = asm.bare_strand();
                        next.push(a);
                        next.push(b);
                    }
                    Token::Cap(c) if *c == color => {
                        asm.join(ends[0], ends[1]);
                    }
                    Token::SixUp(c) if *c == color => {
                        // (i, i+1, i) -> (i+1, i, i+1): two lower i-strands
                        // merge into one upper i-strand.
                        let t = asm.graph.add_vertex(VertexKind::Trivalent);
                        asm.attach(ends[0], t);
                        asm.attach(ends[1], t);
                        next.push(asm.strand_from_vertex(t));
                    }
                    Token::SixUp(c) if *c + 1 == color => {
                        // One lower (i+1)-strand splits into two.
                        let t = asm.graph.add_vertex(VertexKind::Trivalent);
                        asm.attach(ends[0], t);
                        next.push(asm.strand_from_vertex(t));
                        next.push(asm.strand_from_vertex(t));
                    }
                    Token::SixDown(c) if *c == color => {
                        let t = asm.graph.add_vertex(VertexKind::Trivalent);
                        asm.attach(ends[0], t);
                        next.push(asm.strand_from_vertex(t));
                        next.push(asm.strand_from_vertex(t));
                    }
                    Token::SixDown(c) if *c + 1 == color => {
                        let t = asm.graph.add_vertex(VertexKind::Trivalent);
                        asm.attach(ends[0], t);
                        asm.attach(ends[1], t);
                        next.push(asm.strand_from_vertex(t));
                    }
                    _ => {
                        // Tokens not involving the color contribute nothing.
                        debug_assert!(ends.is_empty());
                    }
                }
            }
            open = next;
        }
        asm.finish_to_boundary(&open)
    }

    /// Deterministic SVG rendering: slices as horizontal bands, strands as
    /// colored lines, vertices as marks, boxes as labeled rectangles.
    pub fn render_svg(&self) -> String {
        const XSTEP: f64 = 40.0;
        const YSTEP: f64 = 60.0;
        const MARGIN: f64 = 30.0;
        let palette = [
            "#c0392b", "#2980b9", "#27ae60", "#8e44ad", "#d35400", "#16a085", "#7f8c8d",
        ];
        let color_of = |c: usize| palette[(c - 1) % palette.len()];
        let width = self
            .slices
            .iter()
            .map(|s| {
                s.iter()
                    .map(|t| t.lower().len().max(t.upper().len()).max(1))
                    .sum::<usize>()
            })
            .max()
            .unwrap_or(1) as f64
            * XSTEP
            + 2.0 * MARGIN;
        let height = self.slices.len().max(1) as f64 * YSTEP + 2.0 * MARGIN;
        let mut body = String::new();
        // y grows downward in SVG; diagrams read bottom to top.
        let y_of = |slice_idx: f64| height - MARGIN - slice_idx * YSTEP;
        for (k, slice) in self.slices.iter().enumerate() {
            let y0 = y_of(k as f64);
            let y1 = y_of(k as f64 + 1.0);
            let ym = (y0 + y1) / 2.0;
            let mut lo_x = MARGIN;
            let mut up_x = MARGIN;
            for tok in slice {
                let nlo = tok.lower().len();
                let nup = tok.upper().len();
                let span = nlo.max(nup).max(1) as f64 * XSTEP;
                let lo_xs: Vec<f64> = (0..nlo)
                    .map(|p| lo_x + span * (p as f64 + 0.5) / nlo.max(1) as f64)
                    .collect();
                let up_xs: Vec<f64> = (0..nup)
                    .map(|p| up_x + span * (p as f64 + 0.5) / nup.max(1) as f64)
                    .collect();
                let cx = lo_x + span / 2.0;
                let line = |x0: f64, ya: f64, x1: f64, yb: f64, c: usize| {
                    format!(
                        "<path d=\"M {x0:.1} {ya:.1} C {x0:.1} {:.1}, {x1:.1} {:.1}, {x1:.1} {yb:.1}\" stroke=\"{}\" fill=\"none\" stroke-width=\"2\"/>\n",
                        (ya + yb) / 2.0,
                        (ya + yb) / 2.0,
                        color_of(c)
                    )
                };
                let dot = |x: f64, y: f64, c: usize| {
                    format!(
                        "<circle cx=\"{x:.1}\" cy=\"{y:.1}\" r=\"4\" fill=\"{}\"/>\n",
                        color_of(c)
                    )
                };
                match tok {
                    Token::Id(c) => body.push_str(&line(lo_xs[0], y0, up_xs[0], y1, *c)),
                    Token::EndDot(c) => {
                        body.push_str(&line(lo_xs[0], y0, cx, ym, *c));
                        body.push_str(&dot(cx, ym, *c));
                    }
                    Token::StartDot(c) => {
                        body.push_str(&line(cx, ym, up_xs[0], y1, *c));
                        body.push_str(&dot(cx, ym, *c));
                    }
                    Token::Merge(c) => {
                        body.push_str(&line(lo_xs[0], y0, cx, ym, *c));
                        body.push_str(&line(lo_xs[1], y0, cx, ym, *c));
                        body.push_str(&line(cx, ym, up_xs[0], y1, *c));
                    }
                    Token::Split(c) => {
                        body.push_str(&line(lo_xs[0], y0, cx, ym, *c));
                        body.push_str(&line(cx, ym, up_xs[0], y1, *c));
                        body.push_str(&line(cx, ym, up_xs[1], y1, *c));
                    }
                    Token::Cup(c) => {
                        body.push_str(&line(up_xs[0], y1, cx, ym, *c));
                        body.push_str(&line(cx, ym, up_xs[1], y1, *c));
                    }
                    Token::Cap(c) => {
                        body.push_str(&line(lo_xs[0], y0, cx, ym, *c));
                        body.push_str(&line(cx, ym, lo_xs[1], y0, *c));
                    }
                    Token::Box(p) => {
                        body.push_str(&format!(
                            "<rect x=\"{:.1}\" y=\"{:.1}\" width=\"{:.1}\" height=\"20\" fill=\"white\" stroke=\"black\"/>\n",
                            lo_x + 4.0,
                            ym - 10.0,
                            span - 8.0
                        ));
                        body.push_str(&format!(
                            "<text x=\"{cx:.1}\" y=\"{:.1}\" font-size=\"11\" text-anchor=\"middle\">{p}</text>\n",
                            ym + 4.0
                        ));
                    }
                    Token::FourValent(i, j) => {
                        body.push_str(&line(lo_xs[0], y0, up_xs[1], y1, *i));
                        body.push_str(&line(lo_xs[1], y0, up_xs[0], y1, *j));
                    }
                    Token::SixUp(i) => {
                        for p in 0..3 {
                            let c = if p == 1 { *i + 1 } else { *i };
                            body.push_str(&line(lo_xs[p], y0, cx, ym, c));
                        }
                        for p in 0..3 {
                            let c = if p == 1 { *i } else { *i + 1 };
                            body.push_str(&line(cx, ym, up_xs[p], y1, c));
                        }
                    }
                    Token::SixDown(i) => {
                        for p in 0..3 {
                            let c = if p == 1 { *i } else { *i + 1 };
                            body.push_str(&line(lo_xs[p], y0, cx, ym, c));
                        }
                        for p in 0..3 {
                            let c = if p == 1 { *i + 1 } else { *i };
                            body.push_str(&line(cx, ym, up_xs[p], y1, c));
                        }
                    }
                }
                lo_x += span;
                up_x += span;
            }
        }
        format!(
            "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width:.0}\" height=\"{height:.0}\" viewBox=\"0 0 {width:.0} {height:.0}\">\n{body}</svg>\n"
        )
    }
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let slices: Vec<String> = self
            .slices
            .iter()
            .map(|s| {
                s.iter()
                    .map(Token::to_string)
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect();
        write!(f, "{}", slices.join(" ; "))
    }
}

/// Parses the slice grammar: slices separated by `;`, tokens by
/// whitespace, e.g. `dot_s:1 ; split:1`.
pub fn parse_diagram(text: &str) -> Result<Diagram, DiagramError> {
    let mut slices = Vec::new();
    for chunk in split_slices(text) {
        let mut toks = Vec::new();
        for word in split_tokens(&chunk) {
            toks.push(parse_token(&word)?);
        }
        slices.push(toks);
    }
    Diagram::new(slices)
}

/// Splits on `;` outside parentheses.
fn split_slices(text: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    for ch in text.chars() {
        match ch {
            '(' => {
                depth += 1;
                cur.push(ch);
            }
            ')' => {
                depth -= 1;
                cur.push(ch);
            }
            ';' if depth == 0 => {
                out.push(std::mem::take(&mut cur));
            }
            _ => cur.push(ch),
        }
    }
    out.push(cur);
    out.into_iter()
        .map(|s| s.trim().to_string())
        .filter(|s| !s.is_empty())
        .collect()
}

/// Splits on whitespace outside parentheses.
fn split_tokens(text: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    for ch in text.chars() {
        match ch {
            '(' => {
                depth += 1;
                cur.push(ch);
            }
            ')' => {
                depth -= 1;
                cur.push(ch);
            }
            c if c.is_whitespace() && depth == 0 => {
                if !cur.is_empty() {
                    out.push(std::mem::take(&mut cur));
                }
            }
            _ => cur.push(ch),
        }
    }
    if !cur.is_empty() {
        out.push(cur);
    }
    out
}

fn parse_token(word: &str) -> Result<Token, DiagramError> {
    let (name, rest) = match word.split_once(':') {
        Some(p) => p,
        None => return Err(DiagramError::UnknownToken(word.to_string())),
    };
    let color = |s: &str| -> Result<usize, DiagramError> {
        s.parse::<usize>()
            .ok()
            .filter(|&c| c >= 1)
            .ok_or_else(|| DiagramError::BadColor(word.to_string()))
    };
    match name {
        "id" => Ok(Token::Id(color(rest)?)),
        "dot_e" => Ok(Token::EndDot(color(rest)?)),
        "dot_s" => Ok(Token::StartDot(color(rest)?)),
        "merge" => Ok(Token::Merge(color(rest)?)),
        "split" => Ok(Token::Split(color(rest)?)),
        "cup" => Ok(Token::Cup(color(rest)?)),
        "cap" => Ok(Token::Cap(color(rest)?)),
        "six" => Ok(Token::SixUp(color(rest)?)),
        "sixr" => Ok(Token::SixDown(color(rest)?)),
        "cross" => {
            let (a, b) = rest
                .split_once(':')
                .ok_or_else(|| DiagramError::BadColor(word.to_string()))?;
            let (i, j) = (color(a)?, color(b)?);
            if i.abs_diff(j) < 2 {
                return Err(DiagramError::BadColor(word.to_string()));
            }
            Ok(Token::FourValent(i, j))
        }
        "box" => {
            let inner = rest
                .strip_prefix('(')
                .and_then(|r| r.strip_suffix(')'))
                .unwrap_or(rest);
            // Variable count is refined at evaluation; parse with a
            // generous bound and let `Poly` carry it.
            let p = parse_poly(MAX_PARSE_VARS, inner)
                .map_err(|e| DiagramError::Poly(e.to_string()))?;
            Ok(Token::Box(p))
        }
        _ => Err(DiagramError::UnknownToken(word.to_string())),
    }
}

/// Upper bound on variable indices accepted in `box:(..)` tokens.
const MAX_PARSE_VARS: usize = 16;

/// A rational linear combination of diagrams with common boundaries.
#[derive(Clone, Debug)]
pub struct LinearCombo {
    pub terms: Vec<(Q, Diagram)>,
}

impl LinearCombo {
    pub fn new(terms: Vec<(Q, Diagram)>) -> Result<LinearCombo, DiagramError> {
        if let Some((_, first)) = terms.first() {
            let (dom, cod) = (first.domain(), first.codomain());
            for (_, d) in &terms[1..] {
                if d.domain() != dom || d.codomain() != cod {
                    return Err(DiagramError::MixedBoundaries);
                }
            }
        }
        Ok(LinearCombo { terms })
    }

    /// Evaluates the combination; the empty combination over the given
    /// boundaries is the zero map.
    pub fn evaluate(&self, nvars: usize, dom: &[usize], cod: &[usize]) -> MorphismMatrix {
        let mut acc = MorphismMatrix::zero(Shape::bs(dom), Shape::bs(cod), nvars);
        for (c, d) in &self.terms {
            if c.is_zero() {
                continue;
            }
            acc = acc.add(&d.evaluate(nvars).scale(c));
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::morphism;
    use crate::poly::Poly;

    #[test]
    fn parse_and_boundaries() {
        let d = parse_diagram("dot_s:1 ; split:1").unwrap();
        assert_eq!(d.domain(), Vec::<usize>::new());
        assert_eq!(d.codomain(), vec![1, 1]);
        assert_eq!(d.degree(), 0);
        assert!(parse_diagram("merge:1 ; merge:1").is_err());
        assert!(parse_diagram("wat:1").is_err());
    }

    #[test]
    fn cup_equals_its_defining_composite() {
        let nv = 2;
        let d = parse_diagram("dot_s:1 ; split:1").unwrap();
        assert_eq!(d.evaluate(nv), morphism::cup(nv, 1));
        let d2 = parse_diagram("merge:1 ; dot_e:1").unwrap();
        assert_eq!(d2.evaluate(nv), morphism::cap(nv, 1));
    }

    #[test]
    fn double_dot_is_box() {
        let nv = 2;
        let d = parse_diagram("dot_s:1 ; dot_e:1").unwrap();
        let p = &Poly::var(nv, 1) - &Poly::var(nv, 2);
        assert_eq!(d.evaluate(nv), morphism::poly_box(nv, &p));
        assert_eq!(d.degree(), 2);
    }

    #[test]
    fn functoriality() {
        let nv = 3;
        let d1 = parse_diagram("split:1 id:2").unwrap();
        let d2 = parse_diagram("id:1 merge:1 ; dot_e:1 id:1").unwrap();
        // Wrong: d1 codomain (1,1,2), d2 domain (1,1,1): mismatch; use
        // compatible pair instead.
        assert!(d1.stack(&d2).is_err());
        let d3 = parse_diagram("id:1 id:1 id:2").unwrap();
        let stacked = d1.stack(&d3).unwrap();
        assert_eq!(
            stacked.evaluate(nv),
            d3.evaluate(nv).compose_v(&d1.evaluate(nv))
        );
        let beside = d1.beside(&d3).unwrap();
        assert_eq!(
            beside.evaluate(nv),
            d1.evaluate(nv).compose_h(&d3.evaluate(nv))
        );
    }

    #[test]
    fn degree_matches_evaluation() {
        let nv = 3;
        for text in [
            "dot_s:1",
            "split:1",
            "dot_s:1 ; split:1",
            "cup:1 ; id:1 split:1 ; cap:1 id:1",
            "six:1",
            "box:(x1^2) ; dot_s:2",
        ] {
            let d = parse_diagram(text).unwrap();
            let m = d.evaluate(nv);
            if !m.is_zero() {
                assert_eq!(m.degree(), Some(d.degree()), "{text}");
            }
            assert!(m.check_bimodule(), "{text}");
        }
    }

    #[test]
    fn i_graph_shapes() {
        // Crossing: just a strand for each color.
        let d = parse_diagram("cross:1:3").unwrap();
        let g = d.i_graph(1);
        assert_eq!(g.component_count(), (1, 0));
        assert!(g
            .live_vertices()
            .all(|(_, k)| k == VertexKind::Boundary));
        // 6-valent: one trivalent vertex per involved color.
        let d = parse_diagram("six:1").unwrap();
        for c in [1, 2] {
            let g = d.i_graph(c);
            assert_eq!(
                g.live_vertices()
                    .filter(|&(_, k)| k == VertexKind::Trivalent)
                    .count(),
                1,
                "color {c}"
            );
        }
        // A color not present: empty graph.
        assert!(d.i_graph(5).is_empty());
        // A closed circle: cup then cap.
        let d = parse_diagram("cup:1 ; cap:1").unwrap();
        let g = d.i_graph(1);
        assert_eq!(g.circles(), 1);
    }

    #[test]
    fn svg_smoke() {
        let d = parse_diagram("cup:1 ; id:1 dot_e:1").unwrap();
        let svg = d.render_svg();
        assert!(svg.starts_with("<svg"));
        assert!(svg.ends_with("</svg>\n"));
        assert!(svg.contains("<path"));
    }

    #[test]
    fn display_roundtrip() {
        let text = "cup:1 ; id:1 split:1 ; cap:1 id:1";
        let d = parse_diagram(text).unwrap();
        let again = parse_diagram(&d.to_string()).unwrap();
        assert_eq!(d, again);
    }
}

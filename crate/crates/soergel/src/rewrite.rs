//! One-color planar graphs with boundary and their reduction to simple
//! forests.
//!
//! A one-color graph has univalent internal vertices (dots), trivalent
//! internal vertices, boundary attachment points, and a count of free
//! circles. The reduction engine applies four moves — associativity
//! (H-flip), needle, double-dot removal, dot contraction — until the graph
//! is a simple forest: every component is either a boundary dot, a single
//! boundary-to-boundary strand, or a trivalent tree with `m` boundary
//! lines and `m - 2` internal vertices. A fifth move, connecting, merges
//! two boundary-touching trees and is used only by
//! [`OneColorGraph::reduce_to_simple_tree`].
//!
//! All moves are purely combinatorial; polynomial decorations never enter
//! this module.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum GraphError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("vertex {0} has valence {1}, expected {2}")]
    Valence(String, usize, usize),
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum VertexKind {
    Dot,
    Trivalent,
    Boundary,
}

impl VertexKind {
    fn valence(self) -> usize {
        match self {
            VertexKind::Dot | VertexKind::Boundary => 1,
            VertexKind::Trivalent => 3,
        }
    }
}

/// A planar one-color graph with boundary. Vertices and edges are stored
/// in slot maps with tombstones so that identities survive rewrites; the
/// rotation system lists the incident edges of each internal vertex in
/// cyclic order.
#[derive(Clone, Debug)]
pub struct OneColorGraph {
    vertices: Vec<Option<VertexKind>>,
    /// Edge endpoints; a self-loop repeats the vertex.
    edges: Vec<Option<(usize, usize)>>,
    /// Cyclic incident-edge order per vertex (parallel to `vertices`).
    rotation: Vec<Vec<usize>>,
    /// Boundary attachment points in order along the boundary.
    boundary: Vec<usize>,
    /// Free loops not touching any vertex.
    circles: usize,
}

impl Default for OneColorGraph {
    fn default() -> Self {
        Self::new()
    }
}

impl OneColorGraph {
    pub fn new() -> Self {
        OneColorGraph {
            vertices: Vec::new(),
            edges: Vec::new(),
            rotation: Vec::new(),
            boundary: Vec::new(),
            circles: 0,
        }
    }

    pub fn add_vertex(&mut self, kind: VertexKind) -> usize {
        self.vertices.push(Some(kind));
        self.rotation.push(Vec::new());
        if kind == VertexKind::Boundary {
            self.boundary.push(self.vertices.len() - 1);
        }
        self.vertices.len() - 1
    }

    pub fn add_edge(&mut self, a: usize, b: usize) -> usize {
        self.edges.push(Some((a, b)));
        let e = self.edges.len() - 1;
        self.rotation[a].push(e);
        if a != b {
            self.rotation[b].push(e);
        } else {
            self.rotation[a].push(e);
        }
        e
    }

    pub fn add_circles(&mut self, k: usize) {
        self.circles += k;
    }

    pub fn circles(&self) -> usize {
        self.circles
    }

    pub fn boundary_points(&self) -> &[usize] {
        &self.boundary
    }

    pub fn vertex_kind(&self, v: usize) -> Option<VertexKind> {
        self.vertices.get(v).copied().flatten()
    }

    pub fn live_vertices(&self) -> impl Iterator<Item = (usize, VertexKind)> + '_ {
        self.vertices
            .iter()
            .enumerate()
            .filter_map(|(i, k)| k.map(|k| (i, k)))
    }

    pub fn live_edges(&self) -> impl Iterator<Item = (usize, (usize, usize))> + '_ {
        self.edges
            .iter()
            .enumerate()
            .filter_map(|(i, e)| e.map(|e| (i, e)))
    }

    pub fn is_empty(&self) -> bool {
        self.live_vertices().next().is_none() && self.circles == 0
    }

    fn incident(&self, v: usize) -> Vec<usize> {
        self.rotation[v]
            .iter()
            .copied()
            .filter(|&e| self.edges[e].is_some())
            .collect()
    }

    fn other_end(&self, e: usize, v: usize) -> usize {
        let (a, b) = self.edges[e].unwrap();
        if a == v {
            b
        } else {
            a
        }
    }

    /// Checks valences against kinds.
    pub fn validate(&self) -> Result<(), GraphError> {
        for (v, kind) in self.live_vertices() {
            let mut val = 0;
            for (_, (a, b)) in self.live_edges() {
                if a == v {
                    val += 1;
                }
                if b == v {
                    val += 1;
                }
            }
            if val != kind.valence() {
                return Err(GraphError::Valence(format!("v{v}"), val, kind.valence()));
            }
        }
        Ok(())
    }

    /// Connected components as vertex sets, ignoring circles.
    fn components(&self) -> Vec<Vec<usize>> {
        let mut seen: HashSet<usize> = HashSet::new();
        let mut out = Vec::new();
        for (v, _) in self.live_vertices() {
            if seen.contains(&v) {
                continue;
            }
            let mut comp = Vec::new();
            let mut queue = VecDeque::from([v]);
            seen.insert(v);
            while let Some(u) = queue.pop_front() {
                comp.push(u);
                for e in self.incident(u) {
                    let w = self.other_end(e, u);
                    if seen.insert(w) {
                        queue.push_back(w);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    /// Counts components `(touching boundary, boundaryless)`; circles
    /// count as boundaryless components.
    pub fn component_count(&self) -> (usize, usize) {
        let mut with = 0;
        let mut without = self.circles;
        for comp in self.components() {
            if comp
                .iter()
                .any(|&v| self.vertices[v] == Some(VertexKind::Boundary))
            {
                with += 1;
            } else {
                without += 1;
            }
        }
        (with, without)
    }

    /// First Betti number of the underlying multigraph plus circles.
    fn cycle_rank(&self) -> usize {
        let v = self.live_vertices().count();
        let e = self.live_edges().count();
        let c = self.components().len();
        e + c - v + self.circles
    }

    /// Length of a shortest cycle through live edges (self-loop = 1,
    /// parallel pair = 2), or 0 if the graph is acyclic. Returns the edge
    /// list of one shortest cycle.
    fn shortest_cycle(&self) -> Option<Vec<usize>> {
        // Self-loops first.
        for (e, (a, b)) in self.live_edges() {
            if a == b {
                return Some(vec![e]);
            }
        }
        // BFS from each edge: remove it, find shortest path between its
        // endpoints.
        let mut best: Option<Vec<usize>> = None;
        for (e, (a, b)) in self.live_edges() {
            let mut prev: HashMap<usize, (usize, usize)> = HashMap::new();
            let mut queue = VecDeque::from([a]);
            let mut seen = HashSet::from([a]);
            'bfs: while let Some(u) = queue.pop_front() {
                for e2 in self.incident(u) {
                    if e2 == e {
                        continue;
                    }
                    let w = self.other_end(e2, u);
                    if seen.insert(w) {
                        prev.insert(w, (u, e2));
                        if w == b {
                            break 'bfs;
                        }
                        queue.push_back(w);
                    }
                }
            }
            if !seen.contains(&b) {
                continue;
            }
            let mut path = vec![e];
            let mut cur = b;
            while cur != a {
                let (p, pe) = prev[&cur];
                path.push(pe);
                cur = p;
            }
            if best.as_ref().map_or(true, |c| path.len() < c.len()) {
                best = Some(path);
            }
        }
        best
    }

    /// The lexicographic termination measure:
    /// `(circles + cycle rank, shortest cycle length, internal vertices)`.
    fn measure(&self) -> (usize, usize, usize) {
        let internal = self
            .live_vertices()
            .filter(|&(_, k)| k != VertexKind::Boundary)
            .count();
        let girth = self.shortest_cycle().map_or(0, |c| c.len());
        (self.cycle_rank(), girth, internal)
    }

    fn remove_edge(&mut self, e: usize) {
        self.edges[e] = None;
    }

    fn remove_vertex(&mut self, v: usize) {
        self.vertices[v] = None;
    }

    /// Needle: a self-loop at a trivalent vertex collapses, the vertex
    /// becoming a dot on its remaining edge.
    fn apply_needle(&mut self, loop_edge: usize) {
        let (v, _) = self.edges[loop_edge].unwrap();
        self.remove_edge(loop_edge);
        self.vertices[v] = Some(VertexKind::Dot);
    }

    /// Double-dot removal: an edge whose two endpoints are dots vanishes
    /// with its endpoints.
    fn apply_double_dot(&mut self, e: usize) {
        let (a, b) = self.edges[e].unwrap();
        self.remove_edge(e);
        self.remove_vertex(a);
        self.remove_vertex(b);
    }

    /// Dot contraction: a dot on an edge into a trivalent vertex is
    /// absorbed, smoothing the trivalent vertex into a single edge.
    fn apply_dot_contraction(&mut self, e: usize, dot: usize) {
        let t = self.other_end(e, dot);
        self.remove_edge(e);
        self.remove_vertex(dot);
        let rest = self.incident(t);
        assert_eq!(rest.len(), 2);
        let o1 = self.other_end(rest[0], t);
        let o2 = self.other_end(rest[1], t);
        self.remove_edge(rest[0]);
        self.remove_edge(rest[1]);
        self.remove_vertex(t);
        self.add_edge(o1, o2);
    }

    /// Associativity (H-flip) at edge `e = (u, v)`, pairing the given
    /// incident edges of `u` and `v` onto the new top vertex. The old
    /// vertices are replaced by fresh ones; the bar edge is reused.
    fn apply_assoc(&mut self, e: usize, at_u: usize, at_v: usize) {
        let (u, v) = self.edges[e].unwrap();
        assert_ne!(u, v);
        let iu = self.incident(u);
        let iv = self.incident(v);
        let bu: Vec<usize> = iu.iter().copied().filter(|&x| x != e && x != at_u).collect();
        let bv: Vec<usize> = iv.iter().copied().filter(|&x| x != e && x != at_v).collect();
        // A digon: `at_u == at_v` is the parallel edge; flipping turns it
        // into a self-loop at the top vertex.
        let top = self.add_vertex(VertexKind::Trivalent);
        let bot = self.add_vertex(VertexKind::Trivalent);
        self.remove_edge(e);
        let mut reattach = |old: usize, from: usize, to: usize| {
            let (a, b) = self.edges[old].unwrap();
            let na = if a == from { to } else { a };
            let nb = if b == from { to } else { b };
            self.edges[old] = Some((na, nb));
            self.rotation[to].push(old);
        };
        if at_u == at_v {
            // Parallel edge becomes a self-loop at `top`.
            reattach(at_u, u, top);
            reattach(at_u, v, top);
        } else {
            reattach(at_u, u, top);
            reattach(at_v, v, top);
        }
        for &x in &bu {
            reattach(x, u, bot);
        }
        for &x in &bv {
            reattach(x, v, bot);
        }
        self.remove_vertex(u);
        self.remove_vertex(v);
        self.add_edge(top, bot);
    }

    /// Connecting: replaces edges `e1`, `e2` (in different components) by
    /// an H joining them.
    fn apply_connecting(&mut self, e1: usize, e2: usize) {
        let (a1, b1) = self.edges[e1].unwrap();
        let (a2, b2) = self.edges[e2].unwrap();
        self.remove_edge(e1);
        self.remove_edge(e2);
        let t1 = self.add_vertex(VertexKind::Trivalent);
        let t2 = self.add_vertex(VertexKind::Trivalent);
        self.add_edge(a1, t1);
        self.add_edge(t1, b1);
        self.add_edge(a2, t2);
        self.add_edge(t2, b2);
        self.add_edge(t1, t2);
    }

    /// One pass of the move scheduler: returns `true` if a move fired.
    /// Priority: discard circles, needle, double-dot, dot contraction,
    /// boundaryless-tree cleanup, then associativity on a shortest cycle.
    fn reduce_step(&mut self) -> bool {
        if self.circles > 0 {
            // A circle reduces to a double dot (needle) and vanishes.
            self.circles -= 1;
            return true;
        }
        // Needle.
        let loops: Vec<usize> = self
            .live_edges()
            .filter(|&(_, (a, b))| a == b)
            .map(|(e, _)| e)
            .collect();
        if let Some(&e) = loops.first() {
            self.apply_needle(e);
            return true;
        }
        // Double-dot removal and dot contraction.
        for (e, (a, b)) in self.live_edges().collect::<Vec<_>>() {
            let ka = self.vertices[a];
            let kb = self.vertices[b];
            if ka == Some(VertexKind::Dot) && kb == Some(VertexKind::Dot) {
                self.apply_double_dot(e);
                return true;
            }
            if ka == Some(VertexKind::Dot) && kb == Some(VertexKind::Trivalent) {
                self.apply_dot_contraction(e, a);
                return true;
            }
            if kb == Some(VertexKind::Dot) && ka == Some(VertexKind::Trivalent) {
                self.apply_dot_contraction(e, b);
                return true;
            }
        }
        // Associativity on a shortest cycle.
        if let Some(cycle) = self.shortest_cycle() {
            if cycle.len() >= 2 {
                // Flip at the first cycle edge, pairing its endpoints'
                // cycle-neighbor edges onto the top vertex; the cycle
                // shortens by one.
                let e = cycle[0];
                let (u, v) = self.edges[e].unwrap();
                let at_u = *cycle
                    .iter()
                    .find(|&&x| x != e && {
                        let (a, b) = self.edges[x].unwrap();
                        a == u || b == u
                    })
                    .unwrap();
                let at_v = *cycle
                    .iter()
                    .find(|&&x| x != e && {
                        let (a, b) = self.edges[x].unwrap();
                        a == v || b == v
                    })
                    .unwrap();
                self.apply_assoc(e, at_u, at_v);
                return true;
            }
        }
        false
    }

    /// Reduces to a simple forest: removes every boundaryless component
    /// and rewrites the rest into simple trees. Asserts the termination
    /// measure strictly decreases at each step.
    pub fn reduce_to_simple_forest(&self) -> OneColorGraph {
        let mut g = self.clone();
        let mut m = g.measure_with_circles();
        loop {
            if !g.reduce_step() {
                break;
            }
            let m2 = g.measure_with_circles();
            assert!(m2 < m, "termination measure failed to decrease");
            m = m2;
        }
        g.compact()
    }

    fn measure_with_circles(&self) -> (usize, usize, usize) {
        self.measure()
    }

    /// Reduces to a simple forest, then applies connecting moves (with
    /// re-reduction) until at most one component remains.
    pub fn reduce_to_simple_tree(&self) -> OneColorGraph {
        let mut g = self.reduce_to_simple_forest();
        loop {
            let comps = g.components();
            if comps.len() <= 1 {
                return g;
            }
            let pick = |comp: &[usize]| -> usize {
                for &v in comp {
                    if let Some(&e) = g.incident(v).first() {
                        return e;
                    }
                }
                unreachable!("component without edges")
            };
            let e1 = pick(&comps[0]);
            let e2 = pick(&comps[1]);
            g.apply_connecting(e1, e2);
            // The H may have introduced dots adjacent to trivalent
            // vertices; re-simplify.
            g = g.reduce_to_simple_forest();
        }
    }

    /// True when every component is a simple tree: a boundary dot
    /// (`m = 1`), a boundary-to-boundary strand (`m = 2`, no internal
    /// vertices), or an acyclic all-trivalent interior with `m >= 2`
    /// boundary lines and exactly `m - 2` trivalent vertices. Circles and
    /// boundaryless components disqualify.
    pub fn is_simple_forest(&self) -> bool {
        if self.circles > 0 {
            return false;
        }
        if self.cycle_rank() > 0 {
            return false;
        }
        for comp in self.components() {
            let m = comp
                .iter()
                .filter(|&&v| self.vertices[v] == Some(VertexKind::Boundary))
                .count();
            let dots = comp
                .iter()
                .filter(|&&v| self.vertices[v] == Some(VertexKind::Dot))
                .count();
            let tri = comp
                .iter()
                .filter(|&&v| self.vertices[v] == Some(VertexKind::Trivalent))
                .count();
            let ok = match m {
                0 => false,
                1 => dots == 1 && tri == 0,
                _ => dots == 0 && tri == m - 2,
            };
            if !ok {
                return false;
            }
        }
        true
    }

    /// Renumbers vertices and edges densely, dropping tombstones.
    pub fn compact(&self) -> OneColorGraph {
        let mut g = OneColorGraph::new();
        let mut map = HashMap::new();
        // Preserve boundary order.
        for (v, kind) in self.live_vertices() {
            if kind != VertexKind::Boundary {
                map.insert(v, g.add_vertex(kind));
            }
        }
        for &b in &self.boundary {
            if self.vertices[b].is_some() {
                map.insert(b, g.add_vertex(VertexKind::Boundary));
            }
        }
        for (_, (a, b)) in self.live_edges() {
            g.add_edge(map[&a], map[&b]);
        }
        g.circles = self.circles;
        g
    }

    /// Parses the text format
    /// `vertices: d1(dot) t1(tri) b1(bnd); edges: d1-t1; boundary: [b1]; circles: 0`.
    pub fn parse(text: &str) -> Result<OneColorGraph, GraphError> {
        let mut g = OneColorGraph::new();
        let mut names: HashMap<String, usize> = HashMap::new();
        let mut boundary_names: Vec<String> = Vec::new();
        for part in text.split(';') {
            let part = part.trim();
            if part.is_empty() {
                continue;
            }
            let (key, rest) = part
                .split_once(':')
                .ok_or_else(|| GraphError::Parse(format!("missing ':' in `{part}`")))?;
            let rest = rest.trim();
            match key.trim() {
                "vertices" => {
                    for tok in rest.split_whitespace() {
                        let (name, kind) = tok
                            .strip_suffix(')')
                            .and_then(|t| t.split_once('('))
                            .ok_or_else(|| {
                                GraphError::Parse(format!("bad vertex token `{tok}`"))
                            })?;
                        let kind = match kind {
                            "dot" => VertexKind::Dot,
                            "tri" => VertexKind::Trivalent,
                            "bnd" => VertexKind::Boundary,
                            other => {
                                return Err(GraphError::Parse(format!(
                                    "unknown vertex kind `{other}`"
                                )))
                            }
                        };
                        if kind == VertexKind::Boundary {
                            // Boundary order is set by the boundary list.
                            g.vertices.push(Some(kind));
                            g.rotation.push(Vec::new());
                            names.insert(name.to_string(), g.vertices.len() - 1);
                        } else {
                            names.insert(name.to_string(), g.add_vertex(kind));
                        }
                    }
                }
                "edges" => {
                    for tok in rest.split_whitespace() {
                        let (a, b) = tok.split_once('-').ok_or_else(|| {
                            GraphError::Parse(format!("bad edge token `{tok}`"))
                        })?;
                        let va = *names
                            .get(a)
                            .ok_or_else(|| GraphError::Parse(format!("unknown vertex `{a}`")))?;
                        let vb = *names
                            .get(b)
                            .ok_or_else(|| GraphError::Parse(format!("unknown vertex `{b}`")))?;
                        g.add_edge(va, vb);
                    }
                }
                "boundary" => {
                    let inner = rest
                        .strip_prefix('[')
                        .and_then(|r| r.strip_suffix(']'))
                        .ok_or_else(|| GraphError::Parse("boundary needs [..]".into()))?;
                    for name in inner.split(',').map(str::trim).filter(|s| !s.is_empty()) {
                        boundary_names.push(name.to_string());
                    }
                }
                "circles" => {
                    g.circles = rest
                        .parse()
                        .map_err(|_| GraphError::Parse(format!("bad circle count `{rest}`")))?;
                }
                other => return Err(GraphError::Parse(format!("unknown section `{other}`"))),
            }
        }
        for name in boundary_names {
            let v = *names
                .get(&name)
                .ok_or_else(|| GraphError::Parse(format!("unknown boundary vertex `{name}`")))?;
            g.boundary.push(v);
        }
        g.validate()?;
        Ok(g)
    }
}

impl fmt::Display for OneColorGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut names: HashMap<usize, String> = HashMap::new();
        let (mut nd, mut nt, mut nb) = (0, 0, 0);
        let mut vtoks = Vec::new();
        for (v, kind) in self.live_vertices() {
            let name = match kind {
                VertexKind::Dot => {
                    nd += 1;
                    format!("d{nd}")
                }
                VertexKind::Trivalent => {
                    nt += 1;
                    format!("t{nt}")
                }
                VertexKind::Boundary => {
                    nb += 1;
                    format!("b{nb}")
                }
            };
            let tag = match kind {
                VertexKind::Dot => "dot",
                VertexKind::Trivalent => "tri",
                VertexKind::Boundary => "bnd",
            };
            vtoks.push(format!("{name}({tag})"));
            names.insert(v, name);
        }
        let etoks: Vec<String> = self
            .live_edges()
            .map(|(_, (a, b))| format!("{}-{}", names[&a], names[&b]))
            .collect();
        let btoks: Vec<String> = self
            .boundary
            .iter()
            .filter(|&&b| self.vertices[b].is_some())
            .map(|b| names[b].clone())
            .collect();
        write!(
            f,
            "vertices: {}; edges: {}; boundary: [{}]; circles: {}",
            vtoks.join(" "),
            etoks.join(" "),
            btoks.join(", "),
            self.circles
        )
    }
}

// ---------------------------------------------------------------------------
// Strand assembly
// ---------------------------------------------------------------------------

/// Incrementally builds a [`OneColorGraph`] by creating strands and
/// attaching their ends to vertices or to each other; closing a strand
/// onto itself records a circle. Used by diagram strand tracing and by
/// the random graph generator.
pub struct GraphAssembler {
    pub graph: OneColorGraph,
    /// Each open end maps to its strand.
    end_strand: HashMap<usize, usize>,
    /// Strand endpoint pair; `None` = the open end with that id.
    strands: HashMap<usize, [StrandEnd; 2]>,
    next_end: usize,
    next_strand: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum StrandEnd {
    Vertex(usize),
    Open(usize),
}

impl Default for GraphAssembler {
    fn default() -> Self {
        Self::new()
    }
}

impl GraphAssembler {
    pub fn new() -> Self {
        GraphAssembler {
            graph: OneColorGraph::new(),
            end_strand: HashMap::new(),
            strands: HashMap::new(),
            next_end: 0,
            next_strand: 0,
        }
    }

    /// New strand with one end attached to `v`; returns the open end.
    pub fn strand_from_vertex(&mut self, v: usize) -> usize {
        let end = self.next_end;
        self.next_end += 1;
        let s = self.next_strand;
        self.next_strand += 1;
        self.strands
            .insert(s, [StrandEnd::Vertex(v), StrandEnd::Open(end)]);
        self.end_strand.insert(end, s);
        end
    }

    /// New bare strand (e.g. a cup); returns both open ends.
    pub fn bare_strand(&mut self) -> (usize, usize) {
        let (e1, e2) = (self.next_end, self.next_end + 1);
        self.next_end += 2;
        let s = self.next_strand;
        self.next_strand += 1;
        self.strands
            .insert(s, [StrandEnd::Open(e1), StrandEnd::Open(e2)]);
        self.end_strand.insert(e1, s);
        self.end_strand.insert(e2, s);
        (e1, e2)
    }

    fn set_end(&mut self, strand: usize, end: usize, to: StrandEnd) {
        let pair = self.strands.get_mut(&strand).unwrap();
        for slot in pair.iter_mut() {
            if *slot == StrandEnd::Open(end) {
                *slot = to;
            }
        }
    }

    fn finish_if_closed(&mut self, strand: usize) {
        let pair = self.strands[&strand];
        if let [StrandEnd::Vertex(a), StrandEnd::Vertex(b)] = pair {
            self.graph.add_edge(a, b);
            self.strands.remove(&strand);
        }
    }

    /// Attaches an open end to a vertex.
    pub fn attach(&mut self, end: usize, v: usize) {
        let s = self.end_strand.remove(&end).expect("unknown open end");
        self.set_end(s, end, StrandEnd::Vertex(v));
        self.finish_if_closed(s);
    }

    /// Joins two open ends; if they belong to the same strand the strand
    /// closes into a circle.
    pub fn join(&mut self, e1: usize, e2: usize) {
        let s1 = self.end_strand.remove(&e1).expect("unknown open end");
        let s2 = self.end_strand.remove(&e2).expect("unknown open end");
        if s1 == s2 {
            self.strands.remove(&s1);
            self.graph.add_circles(1);
            return;
        }
        // Merge s2 into s1: the surviving strand keeps the strands' other
        // endpoints.
        let p1 = self.strands.remove(&s1).unwrap();
        let p2 = self.strands.remove(&s2).unwrap();
        let other = |pair: [StrandEnd; 2], end: usize| -> StrandEnd {
            if pair[0] == StrandEnd::Open(end) {
                pair[1]
            } else {
                pair[0]
            }
        };
        let a = other(p1, e1);
        let b = other(p2, e2);
        let s = self.next_strand;
        self.next_strand += 1;
        self.strands.insert(s, [a, b]);
        for x in [a, b] {
            if let StrandEnd::Open(e) = x {
                self.end_strand.insert(e, s);
            }
        }
        self.finish_if_closed(s);
    }

    /// Attaches every remaining open end (in the given order) to a fresh
    /// boundary vertex and returns the finished graph.
    pub fn finish_to_boundary(mut self, ends: &[usize]) -> OneColorGraph {
        for &e in ends {
            let b = self.graph.add_vertex(VertexKind::Boundary);
            self.attach(e, b);
        }
        assert!(self.strands.is_empty(), "dangling open strand ends");
        self.graph
    }
}

/// Generates a random valid one-color graph with at most `max_edges`
/// edges, by running a random bottom-to-top strand machine.
pub fn random_graph(seed: u64, max_edges: usize) -> OneColorGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut asm = GraphAssembler::new();
    // Bottom boundary strands.
    let bottom = rng.gen_range(0..3usize);
    let mut open: Vec<usize> = Vec::new();
    for _ in 0..bottom {
        let b = asm.graph.add_vertex(VertexKind::Boundary);
        open.push(asm.strand_from_vertex(b));
    }
    let mut edges_budget = max_edges.saturating_sub(bottom);
    let steps = rng.gen_range(3..12usize);
    for _ in 0..steps {
        if edges_budget < 3 {
            break;
        }
        let op = rng.gen_range(0..6u32);
        match op {
            // Start dot: a new strand from a fresh dot.
            0 => {
                let d = asm.graph.add_vertex(VertexKind::Dot);
                let pos = rng.gen_range(0..=open.len());
                open.insert(pos, asm.strand_from_vertex(d));
                edges_budget -= 1;
            }
            // End dot.
            1 if !open.is_empty() => {
                let pos = rng.gen_range(0..open.len());
                let d = asm.graph.add_vertex(VertexKind::Dot);
                let e = open.remove(pos);
                asm.attach(e, d);
            }
            // Cup: a bare strand.
            2 => {
                let (a, b) = asm.bare_strand();
                let pos = rng.gen_range(0..=open.len());
                open.insert(pos, a);
                open.insert(pos + 1, b);
                edges_budget -= 1;
            }
            // Cap: join adjacent ends.
            3 if open.len() >= 2 => {
                let pos = rng.gen_range(0..open.len() - 1);
                let a = open.remove(pos);
                let b = open.remove(pos);
                asm.join(a, b);
            }
            // Merge: two adjacent ends into a trivalent vertex.
            4 if open.len() >= 2 => {
                let pos = rng.gen_range(0..open.len() - 1);
                let t = asm.graph.add_vertex(VertexKind::Trivalent);
                let a = open.remove(pos);
                let b = open.remove(pos);
                asm.attach(a, t);
                asm.attach(b, t);
                open.insert(pos, asm.strand_from_vertex(t));
                edges_budget -= 2;
            }
            // Split: one end into two through a trivalent vertex.
            5 if !open.is_empty() => {
                let pos = rng.gen_range(0..open.len());
                let t = asm.graph.add_vertex(VertexKind::Trivalent);
                let e = open.remove(pos);
                asm.attach(e, t);
                open.insert(pos, asm.strand_from_vertex(t));
                open.insert(pos + 1, asm.strand_from_vertex(t));
                edges_budget -= 2;
            }
            _ => {}
        }
    }
    let ends = open.clone();
    asm.finish_to_boundary(&ends)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn circle_graph() -> OneColorGraph {
        let mut g = OneColorGraph::new();
        g.add_circles(1);
        g
    }

    #[test]
    fn circle_reduces_to_empty() {
        let g = circle_graph().reduce_to_simple_forest();
        assert!(g.is_empty());
        assert!(g.is_simple_forest());
    }

    #[test]
    fn double_dot_component_removed() {
        let mut g = OneColorGraph::new();
        let d1 = g.add_vertex(VertexKind::Dot);
        let d2 = g.add_vertex(VertexKind::Dot);
        g.add_edge(d1, d2);
        let r = g.reduce_to_simple_forest();
        assert!(r.is_empty());
    }

    #[test]
    fn needle_becomes_dot() {
        // A trivalent vertex with a self-loop, third leg to the boundary.
        let mut g = OneColorGraph::new();
        let t = g.add_vertex(VertexKind::Trivalent);
        let b = g.add_vertex(VertexKind::Boundary);
        g.add_edge(t, t);
        g.add_edge(t, b);
        let r = g.reduce_to_simple_forest();
        assert!(r.is_simple_forest());
        assert_eq!(r.component_count(), (1, 0));
        assert_eq!(
            r.live_vertices()
                .filter(|&(_, k)| k == VertexKind::Dot)
                .count(),
            1
        );
    }

    #[test]
    fn polygon_reduces_to_simple_tree() {
        // A square: 4 trivalent vertices in a cycle, each with a boundary
        // leg.
        let mut g = OneColorGraph::new();
        let ts: Vec<usize> = (0..4).map(|_| g.add_vertex(VertexKind::Trivalent)).collect();
        for k in 0..4 {
            g.add_edge(ts[k], ts[(k + 1) % 4]);
        }
        for k in 0..4 {
            let b = g.add_vertex(VertexKind::Boundary);
            g.add_edge(ts[k], b);
        }
        let r = g.reduce_to_simple_forest();
        assert!(r.is_simple_forest());
        assert_eq!(r.component_count(), (1, 0));
        // m = 4 boundary lines: exactly 2 trivalent vertices, no dots.
        assert_eq!(
            r.live_vertices()
                .filter(|&(_, k)| k == VertexKind::Trivalent)
                .count(),
            2
        );
    }

    #[test]
    fn connecting_two_boundary_dots() {
        let mut g = OneColorGraph::new();
        for _ in 0..2 {
            let d = g.add_vertex(VertexKind::Dot);
            let b = g.add_vertex(VertexKind::Boundary);
            g.add_edge(d, b);
        }
        let t = g.reduce_to_simple_tree();
        assert!(t.is_simple_forest());
        assert_eq!(t.component_count(), (1, 0));
        // Two boundary lines, zero internal vertices: a bare strand.
        assert_eq!(
            t.live_vertices()
                .filter(|&(_, k)| k != VertexKind::Boundary)
                .count(),
            0
        );
    }

    #[test]
    fn random_graphs_reduce() {
        for seed in 0..50 {
            let g = random_graph(seed, 12);
            g.validate().unwrap();
            let before = g.component_count().0;
            let r = g.reduce_to_simple_forest();
            assert!(r.is_simple_forest(), "seed {seed}: {r}");
            assert_eq!(r.component_count().1, 0, "seed {seed}");
            assert_eq!(r.component_count().0, before, "seed {seed}");
            assert_eq!(
                r.boundary_points().len(),
                g.boundary_points().len(),
                "seed {seed}"
            );
        }
    }

    #[test]
    fn parse_display_roundtrip() {
        let text = "vertices: d1(dot) t1(tri) b1(bnd) b2(bnd); \
                    edges: d1-t1 t1-b1 t1-b2; boundary: [b1, b2]; circles: 1";
        let g = OneColorGraph::parse(text).unwrap();
        let again = OneColorGraph::parse(&g.to_string()).unwrap();
        assert_eq!(g.to_string(), again.to_string());
        assert_eq!(g.circles(), 1);
        assert_eq!(g.boundary_points().len(), 2);
    }
}

//! Bott–Samelson bimodules in left-basis normal form.
//!
//! A shape is a sequence of parabolic separators: `B(i_1, ..., i_d)` is
//! `R (x)_{i_1} R (x)_{i_2} ... (x)_{i_d} R`, graded so the 1-tensor of a
//! `d`-fold singleton shape sits in degree `-d` (each `Single` separator
//! contributes a shift of -1, `Distant` -2, `Adjacent` -3).
//!
//! `R` is free over each parabolic invariant subring, so every element has
//! a unique normal form: a left polynomial coefficient for each choice of
//! basis monomial per separator. Normalization slides invariant parts
//! leftward, separator by separator, from the right.

use std::collections::BTreeMap;
use std::fmt;

use num::Zero;

use crate::linalg::Q;
use crate::poly::{ParabolicSubgroup, Poly};

/// A tensor shape: an ordered list of parabolic separators.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Shape {
    seps: Vec<ParabolicSubgroup>,
}

impl Shape {
    /// The regular bimodule `R` (no separators).
    pub fn empty() -> Self {
        Shape { seps: Vec::new() }
    }

    /// `B(i_1, ..., i_d)` with singleton separators.
    pub fn bs(colors: &[usize]) -> Self {
        Shape {
            seps: colors.iter().map(|&i| ParabolicSubgroup::Single(i)).collect(),
        }
    }

    pub fn from_seps(seps: Vec<ParabolicSubgroup>) -> Self {
        Shape { seps }
    }

    /// The auxiliary bimodule `R (x)_{R^{i,j}} R` for distant `i`, `j`.
    pub fn aux_distant(i: usize, j: usize) -> Self {
        Shape {
            seps: vec![ParabolicSubgroup::Distant(i, j)],
        }
    }

    /// The auxiliary bimodule `R (x)_{R^{i,i+1}} R`.
    pub fn aux_adjacent(i: usize) -> Self {
        Shape {
            seps: vec![ParabolicSubgroup::Adjacent(i)],
        }
    }

    pub fn seps(&self) -> &[ParabolicSubgroup] {
        &self.seps
    }

    pub fn len(&self) -> usize {
        self.seps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.seps.is_empty()
    }

    /// Color sequence, for all-singleton shapes.
    pub fn colors(&self) -> Option<Vec<usize>> {
        self.seps
            .iter()
            .map(|s| match s {
                ParabolicSubgroup::Single(i) => Some(*i),
                _ => None,
            })
            .collect()
    }

    /// The grading shift: -1 per singleton, -2 per distant pair, -3 per
    /// adjacent pair.
    pub fn shift(&self) -> i64 {
        -self
            .seps
            .iter()
            .map(|s| match s {
                ParabolicSubgroup::Single(_) => 1i64,
                ParabolicSubgroup::Distant(_, _) => 2,
                ParabolicSubgroup::Adjacent(_) => 3,
            })
            .sum::<i64>()
    }

    pub fn concat(&self, rhs: &Shape) -> Shape {
        let mut seps = self.seps.clone();
        seps.extend(rhs.seps.iter().cloned());
        Shape { seps }
    }

    pub fn is_valid(&self, nvars: usize) -> bool {
        self.seps.iter().all(|s| s.is_valid(nvars))
    }

    /// Free left-module rank: the product of separator basis sizes.
    pub fn rank(&self) -> usize {
        self.seps
            .iter()
            .map(|s| match s {
                ParabolicSubgroup::Single(_) => 2usize,
                ParabolicSubgroup::Distant(_, _) => 4,
                ParabolicSubgroup::Adjacent(_) => 6,
            })
            .product()
    }

    fn basis_sizes(&self) -> Vec<usize> {
        self.seps
            .iter()
            .map(|s| match s {
                ParabolicSubgroup::Single(_) => 2usize,
                ParabolicSubgroup::Distant(_, _) => 4,
                ParabolicSubgroup::Adjacent(_) => 6,
            })
            .collect()
    }

    /// All basis index tuples in lexicographic order.
    pub fn basis_tuples(&self) -> Vec<Vec<usize>> {
        let sizes = self.basis_sizes();
        let mut out = vec![vec![]];
        for &s in &sizes {
            let mut next = Vec::with_capacity(out.len() * s);
            for t in &out {
                for v in 0..s {
                    let mut t2 = t.clone();
                    t2.push(v);
                    next.push(t2);
                }
            }
            out = next;
        }
        out
    }

    /// The basis monomials named by an index tuple.
    pub fn basis_monomials(&self, nvars: usize, tuple: &[usize]) -> Vec<Poly> {
        assert_eq!(tuple.len(), self.seps.len());
        tuple
            .iter()
            .zip(&self.seps)
            .map(|(&b, s)| s.basis(nvars)[b].clone())
            .collect()
    }

    /// Degree of the basis vector named by `tuple`, including the shift.
    pub fn basis_degree(&self, nvars: usize, tuple: &[usize]) -> i64 {
        self.basis_monomials(nvars, tuple)
            .iter()
            .map(|m| m.degree().expect("basis monomials are homogeneous"))
            .sum::<i64>()
            + self.shift()
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "B(")?;
        for (k, s) in self.seps.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            match s {
                ParabolicSubgroup::Single(i) => write!(f, "{i}")?,
                ParabolicSubgroup::Distant(i, j) => write!(f, "w{{{i},{j}}}")?,
                ParabolicSubgroup::Adjacent(i) => write!(f, "w{{{},{}}}", i, i + 1)?,
            }
        }
        write!(f, ")")
    }
}

/// An element of a Bott–Samelson bimodule in left-basis normal form: a
/// polynomial coefficient per basis index tuple.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BSElement {
    shape: Shape,
    nvars: usize,
    coords: BTreeMap<Vec<usize>, Poly>,
}

impl BSElement {
    pub fn zero(shape: Shape, nvars: usize) -> Self {
        assert!(shape.is_valid(nvars), "shape {shape} invalid for n+1={nvars}");
        BSElement {
            shape,
            nvars,
            coords: BTreeMap::new(),
        }
    }

    /// The 1-tensor `1 (x) 1 (x) ... (x) 1`.
    pub fn one_tensor(shape: Shape, nvars: usize) -> Self {
        let d = shape.len();
        let mut e = BSElement::zero(shape, nvars);
        e.insert(vec![0; d], Poly::one(nvars));
        e
    }

    /// Normalizes a raw pure tensor `s_0 (x) s_1 (x) ... (x) s_d`.
    ///
    /// Working from the rightmost slot, each slot is decomposed over its
    /// separator; the invariant coefficients slide one slot to the left and
    /// the basis monomial stays as the residue.
    pub fn from_raw(shape: Shape, nvars: usize, slots: &[Poly]) -> Self {
        assert_eq!(slots.len(), shape.len() + 1, "raw tensor slot count");
        let mut out = BSElement::zero(shape.clone(), nvars);
        let mut stack: Vec<(Vec<Poly>, Vec<usize>)> = vec![(slots.to_vec(), Vec::new())];
        while let Some((mut cur, tail)) = stack.pop() {
            if cur.len() == 1 {
                let mut tuple = tail.clone();
                tuple.reverse();
                out.insert(tuple, cur.pop().unwrap());
                continue;
            }
            let last = cur.pop().unwrap();
            let sep = shape.seps[cur.len() - 1];
            if last.is_zero() {
                continue;
            }
            let gs = sep.decompose(&last).expect("free module decomposition");
            for (bidx, g) in gs.into_iter().enumerate() {
                if g.is_zero() {
                    continue;
                }
                let mut next = cur.clone();
                let slot = next.last_mut().unwrap();
                *slot = &*slot * &g;
                let mut t = tail.clone();
                t.push(bidx);
                stack.push((next, t));
            }
        }
        out
    }

    pub fn shape(&self) -> &Shape {
        &self.shape
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn coords(&self) -> impl Iterator<Item = (&Vec<usize>, &Poly)> {
        self.coords.iter()
    }

    pub fn coord(&self, tuple: &[usize]) -> Poly {
        self.coords
            .get(tuple)
            .cloned()
            .unwrap_or_else(|| Poly::zero(self.nvars))
    }

    fn insert(&mut self, tuple: Vec<usize>, p: Poly) {
        if p.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.coords.entry(tuple) {
            Entry::Vacant(v) => {
                v.insert(p);
            }
            Entry::Occupied(mut o) => {
                let s = &*o.get() + &p;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, rhs: &BSElement) -> BSElement {
        assert_eq!(self.shape, rhs.shape);
        let mut out = self.clone();
        for (t, p) in rhs.coords() {
            out.insert(t.clone(), p.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &BSElement) -> BSElement {
        self.add(&rhs.scale_q(&-Q::from_integer(1.into())))
    }

    pub fn scale_q(&self, c: &Q) -> BSElement {
        let mut out = BSElement::zero(self.shape.clone(), self.nvars);
        if c.is_zero() {
            return out;
        }
        for (t, p) in self.coords() {
            out.insert(t.clone(), p.scale(c));
        }
        out
    }

    /// Left action of `f`: multiplies every coefficient.
    pub fn left_mul(&self, f: &Poly) -> BSElement {
        let mut out = BSElement::zero(self.shape.clone(), self.nvars);
        for (t, p) in self.coords() {
            out.insert(t.clone(), p * f);
        }
        out
    }

    /// Right action of `f`: multiplies into the last slot, then
    /// renormalizes.
    pub fn right_mul(&self, f: &Poly) -> BSElement {
        let mut out = BSElement::zero(self.shape.clone(), self.nvars);
        for (t, p) in self.coords() {
            let mut slots = Vec::with_capacity(self.shape.len() + 1);
            slots.push(p.clone());
            slots.extend(self.shape.basis_monomials(self.nvars, t));
            let last = slots.last_mut().unwrap();
            *last = &*last * f;
            out = out.add(&BSElement::from_raw(self.shape.clone(), self.nvars, &slots));
        }
        out
    }

    /// Tensor product over `R`: concatenates shapes, multiplying the right
    /// factor's left coefficient into the junction slot.
    pub fn tensor(&self, rhs: &BSElement) -> BSElement {
        assert_eq!(self.nvars, rhs.nvars);
        let shape = self.shape.concat(&rhs.shape);
        let mut out = BSElement::zero(shape.clone(), self.nvars);
        for (ta, pa) in self.coords() {
            let mut slots_a = vec![pa.clone()];
            slots_a.extend(self.shape.basis_monomials(self.nvars, ta));
            for (tb, pb) in rhs.coords() {
                let mut slots = slots_a.clone();
                {
                    let junction = slots.last_mut().unwrap();
                    *junction = &*junction * pb;
                }
                slots.extend(rhs.shape.basis_monomials(self.nvars, tb));
                out = out.add(&BSElement::from_raw(shape.clone(), self.nvars, &slots));
            }
        }
        out
    }

    /// Degree if homogeneous (including the shape shift), else `None`.
    /// The zero element reports `None`.
    pub fn degree(&self) -> Option<i64> {
        let mut deg = None;
        for (t, p) in self.coords() {
            let dp = p.degree()?;
            let d = dp + self.shape.basis_degree(self.nvars, t);
            match deg {
                None => deg = Some(d),
                Some(prev) if prev != d => return None,
                _ => {}
            }
        }
        deg
    }
}

impl fmt::Display for BSElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (t, p)) in self.coords.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            let ps = p.to_string();
            if ps.contains(' ') {
                write!(f, "({ps})")?;
            } else {
                write!(f, "{ps}")?;
            }
            write!(f, " * <")?;
            for (j, m) in self
                .shape
                .basis_monomials(self.nvars, t)
                .iter()
                .enumerate()
            {
                if j > 0 {
                    write!(f, "|")?;
                }
                write!(f, "{m}")?;
            }
            write!(f, ">")?;
        }
        Ok(())
    }
}

/// One term of a generator-form expression: `left * (pure tensor with the
/// given interior slots) * right`.
#[derive(Clone, Debug, PartialEq)]
pub struct GeneratorTerm {
    pub left: Poly,
    pub interior: Vec<Poly>,
    pub right: Poly,
}

impl GeneratorTerm {
    /// Evaluates the term back to a normalized element of `shape`.
    pub fn assemble(&self, shape: &Shape, nvars: usize) -> BSElement {
        let mut slots = Vec::with_capacity(shape.len() + 1);
        slots.push(self.left.clone());
        slots.extend(self.interior.iter().cloned());
        slots.push(self.right.clone());
        BSElement::from_raw(shape.clone(), nvars, &slots)
    }
}

/// Rewrites an element as a combination `sum left * T * right` where the
/// pure tensors `T` have interior entries that cannot slide outward: the
/// greedy spanning form with at most `2^m` distinct tensors for a shape
/// with `m` repeated-color pairs.
///
/// Pass 1 (left to right) slides separator-invariant parts rightward out of
/// the interior; pass 2 (right to left) slides invariant parts leftward,
/// leaving only basis residues of the separator to the left of each slot.
pub fn generator_form(elem: &BSElement) -> Vec<GeneratorTerm> {
    let shape = elem.shape().clone();
    let nvars = elem.nvars();
    let d = shape.len();
    let mut terms: Vec<GeneratorTerm> = Vec::new();
    for (t, p) in elem.coords() {
        let monos = shape.basis_monomials(nvars, t);
        if d == 0 {
            terms.push(GeneratorTerm {
                left: p.clone(),
                interior: vec![],
                right: Poly::one(nvars),
            });
            continue;
        }
        terms.push(GeneratorTerm {
            left: p.clone(),
            interior: monos[..d - 1].to_vec(),
            right: monos[d - 1].clone(),
        });
    }
    if d == 0 {
        return combine_terms(terms, nvars);
    }

    // Pass 1: for each interior slot p (between sep p+1 and sep p+2,
    // 0-based), slide the part invariant under the right separator into the
    // next slot.
    for pslot in 0..d - 1 {
        let sep_right = shape.seps()[pslot + 1];
        let mut next = Vec::new();
        for term in terms {
            let gs = sep_right
                .decompose(&term.interior[pslot])
                .expect("decompose in generator form");
            for (bidx, g) in gs.into_iter().enumerate() {
                if g.is_zero() {
                    continue;
                }
                let residue = sep_right.basis(nvars)[bidx].clone();
                let mut t2 = term.clone();
                t2.interior[pslot] = residue;
                if pslot + 1 < d - 1 {
                    t2.interior[pslot + 1] = &t2.interior[pslot + 1] * &g;
                } else {
                    t2.right = &t2.right * &g;
                }
                next.push(t2);
            }
        }
        terms = next;
    }

    // Pass 2: right to left, slide parts invariant under the left separator
    // outward to the left, leaving that separator's basis residue.
    for pslot in (0..d - 1).rev() {
        let sep_left = shape.seps()[pslot];
        let mut next = Vec::new();
        for term in terms {
            let gs = sep_left
                .decompose(&term.interior[pslot])
                .expect("decompose in generator form");
            for (bidx, g) in gs.into_iter().enumerate() {
                if g.is_zero() {
                    continue;
                }
                let residue = sep_left.basis(nvars)[bidx].clone();
                let mut t2 = term.clone();
                t2.interior[pslot] = residue;
                if pslot > 0 {
                    t2.interior[pslot - 1] = &t2.interior[pslot - 1] * &g;
                } else {
                    t2.left = &t2.left * &g;
                }
                next.push(t2);
            }
        }
        terms = next;
    }
    combine_terms(terms, nvars)
}

/// Merges terms sharing the same pure tensor and right coefficient.
fn combine_terms(terms: Vec<GeneratorTerm>, nvars: usize) -> Vec<GeneratorTerm> {
    let mut map: BTreeMap<(Vec<Poly>, Poly), Poly> = BTreeMap::new();
    for t in terms {
        let key = (t.interior.clone(), t.right.clone());
        let entry = map.entry(key).or_insert_with(|| Poly::zero(nvars));
        *entry = &*entry + &t.left;
    }
    map.into_iter()
        .filter(|(_, left)| !left.is_zero())
        .map(|((interior, right), left)| GeneratorTerm {
            left,
            interior,
            right,
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;

    #[test]
    fn sliding_rule() {
        // f (x) g = P_i(g) f (x) 1 + d_i(g) f (x) x_i in B_i.
        let nv = 3;
        let shape = Shape::bs(&[1]);
        let g = parse_poly(nv, "x1^2 + x2*x3").unwrap();
        let raw = BSElement::from_raw(
            shape.clone(),
            nv,
            &[Poly::one(nv), g.clone()],
        );
        assert_eq!(raw.coord(&[0]), g.p_part(1));
        assert_eq!(raw.coord(&[1]), g.demazure(1));
    }

    #[test]
    fn bimodule_axioms() {
        let nv = 3;
        let shape = Shape::bs(&[1, 2, 1]);
        let one = BSElement::one_tensor(shape.clone(), nv);
        let f = parse_poly(nv, "x1*x3 - x2^2").unwrap();
        let g = parse_poly(nv, "x2 + 2*x3").unwrap();
        // Left and right actions commute.
        assert_eq!(
            one.left_mul(&f).right_mul(&g),
            one.right_mul(&g).left_mul(&f)
        );
        // Right action is a ring action.
        assert_eq!(
            one.right_mul(&f).right_mul(&g),
            one.right_mul(&(&f * &g))
        );
        // Central (symmetric) polynomials act the same on both sides.
        let e1 = parse_poly(nv, "x1 + x2 + x3").unwrap();
        assert_eq!(one.left_mul(&e1), one.right_mul(&e1));
    }

    #[test]
    fn degrees_and_shift() {
        let nv = 3;
        let shape = Shape::bs(&[1, 2]);
        let one = BSElement::one_tensor(shape.clone(), nv);
        assert_eq!(one.degree(), Some(-2));
        let x1 = Poly::var(nv, 1);
        assert_eq!(one.left_mul(&x1).degree(), Some(0));
        assert_eq!(Shape::aux_adjacent(1).shift(), -3);
        assert_eq!(Shape::aux_distant(1, 3).shift(), -2);
    }

    #[test]
    fn tensor_matches_raw() {
        let nv = 3;
        let a = BSElement::from_raw(
            Shape::bs(&[1]),
            nv,
            &[Poly::var(nv, 2), Poly::var(nv, 1)],
        );
        let b = BSElement::from_raw(
            Shape::bs(&[2]),
            nv,
            &[Poly::var(nv, 3), Poly::one(nv)],
        );
        let t = a.tensor(&b);
        let direct = BSElement::from_raw(
            Shape::bs(&[1, 2]),
            nv,
            &[
                Poly::var(nv, 2),
                &Poly::var(nv, 1) * &Poly::var(nv, 3),
                Poly::one(nv),
            ],
        );
        assert_eq!(t, direct);
    }

    #[test]
    fn generator_form_counts() {
        let nv = 4;
        // B(1,3): no repeated pair, one spanning tensor.
        let e = BSElement::from_raw(
            Shape::bs(&[1, 3]),
            nv,
            &[Poly::one(nv), Poly::var(nv, 1), Poly::var(nv, 3)],
        );
        let gf = generator_form(&e);
        assert!(gf.iter().all(|t| t.interior.iter().all(|m| {
            m == &Poly::one(nv)
        })));
        // B(1,2,1): one repeated pair, at most two tensor patterns.
        let shape = Shape::bs(&[1, 2, 1]);
        let mut patterns = std::collections::BTreeSet::new();
        for tuple in shape.basis_tuples() {
            let mut slots = vec![Poly::one(nv)];
            slots.extend(shape.basis_monomials(nv, &tuple));
            let e = BSElement::from_raw(shape.clone(), nv, &slots);
            for t in generator_form(&e) {
                patterns.insert(t.interior.clone());
                // Round trip.
            }
            let back = generator_form(&e)
                .iter()
                .map(|t| t.assemble(&shape, nv))
                .fold(BSElement::zero(shape.clone(), nv), |a, b| a.add(&b));
            assert_eq!(back, e);
        }
        assert!(patterns.len() <= 2, "patterns: {patterns:?}");
    }
}

//! The polynomial ring `R = Q[x_1, ..., x_{n+1}]` with its symmetric group
//! action, Demazure operators, parabolic invariant decompositions and the
//! `e_1 = 0` quotient.
//!
//! Every variable has degree 2, so a monomial of exponent sum `s` has
//! degree `2s`. Exactness is non-negotiable: coefficients are
//! `BigRational`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{FromPrimitive, One, Signed, Zero};
use thiserror::Error;

use crate::linalg::{self, Mat, Q};
use crate::perm::Perm;

#[derive(Debug, Error)]
pub enum PolyError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("variable index {0} out of range for {1} variables")]
    BadVariable(usize, usize),
    #[error("polynomial is not invariant under the required subgroup")]
    NotInvariant,
    #[error("invariant decomposition failed (free module solve inconsistent)")]
    DecompositionFailed,
}

/// A polynomial in `nvars` variables over `Q`, stored sparsely with
/// exponent vectors as keys.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Vec<u16>, Q>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Poly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Poly::constant(nvars, Q::one())
    }

    pub fn constant(nvars: usize, c: Q) -> Self {
        let mut p = Poly::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    pub fn int(nvars: usize, c: i64) -> Self {
        Poly::constant(nvars, Q::from_i64(c).unwrap())
    }

    /// The variable `x_i`, 1-based.
    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i >= 1 && i <= nvars, "variable x{i} out of range");
        let mut e = vec![0u16; nvars];
        e[i - 1] = 1;
        Poly::monomial(e, Q::one())
    }

    pub fn monomial(exps: Vec<u16>, c: Q) -> Self {
        let nvars = exps.len();
        let mut p = Poly::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(exps, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u16>, &Q)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    fn insert(&mut self, exps: Vec<u16>, c: Q) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exps) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Q) -> Poly {
        let mut out = Poly::zero(self.nvars);
        for (e, v) in self.terms() {
            out.insert(e.clone(), v * c);
        }
        out
    }

    /// True if all terms share one exponent sum (zero counts as
    /// homogeneous of any degree).
    pub fn is_homogeneous(&self) -> bool {
        let mut sums = self
            .terms
            .keys()
            .map(|e| e.iter().map(|&x| x as i64).sum::<i64>());
        match sums.next() {
            None => true,
            Some(first) => sums.all(|s| s == first),
        }
    }

    /// Degree in the grading where `deg x_i = 2`. `None` for the zero
    /// polynomial or an inhomogeneous one.
    pub fn degree(&self) -> Option<i64> {
        if self.is_zero() || !self.is_homogeneous() {
            return None;
        }
        let e = self.terms.keys().next().unwrap();
        Some(2 * e.iter().map(|&x| x as i64).sum::<i64>())
    }

    /// The homogeneous component of exponent sum `s`.
    pub fn component(&self, s: i64) -> Poly {
        let mut out = Poly::zero(self.nvars);
        for (e, c) in self.terms() {
            if e.iter().map(|&x| x as i64).sum::<i64>() == s {
                out.insert(e.clone(), c.clone());
            }
        }
        out
    }

    /// Exponent sums present in this polynomial.
    pub fn exponent_sums(&self) -> Vec<i64> {
        let mut sums: Vec<i64> = self
            .terms
            .keys()
            .map(|e| e.iter().map(|&x| x as i64).sum())
            .collect();
        sums.sort_unstable();
        sums.dedup();
        sums
    }

    /// Action of a permutation by substituting `x_j -> x_{w(j)}`.
    pub fn act(&self, w: &Perm) -> Poly {
        assert_eq!(w.degree(), self.nvars);
        let mut out = Poly::zero(self.nvars);
        for (e, c) in self.terms() {
            let mut ne = vec![0u16; self.nvars];
            for (j, &exp) in e.iter().enumerate() {
                ne[w.apply(j + 1) - 1] = exp;
            }
            out.insert(ne, c.clone());
        }
        out
    }

    /// Action of the simple transposition `s_i` (swap `x_i`, `x_{i+1}`).
    pub fn act_simple(&self, i: usize) -> Poly {
        self.act(&Perm::simple(self.nvars, i))
    }

    /// The Demazure operator `d_i(f) = (f - s_i f) / (x_i - x_{i+1})`,
    /// computed termwise by the exact telescoping formula.
    pub fn demazure(&self, i: usize) -> Poly {
        assert!(i >= 1 && i < self.nvars);
        let mut out = Poly::zero(self.nvars);
        for (e, c) in self.terms() {
            let (a, b) = (e[i - 1], e[i]);
            if a == b {
                continue;
            }
            // (x^a y^b - x^b y^a) / (x - y)
            //   = sign(a - b) * sum_{k=min(a,b)}^{max(a,b)-1} x^k y^{a+b-1-k}.
            let (lo, hi) = (a.min(b), a.max(b));
            let sign = if a > b { c.clone() } else { -c.clone() };
            for k in lo..hi {
                let mut ne = e.clone();
                ne[i - 1] = k;
                ne[i] = (a + b) - 1 - k;
                out.insert(ne, sign.clone());
            }
        }
        out
    }

    /// The invariant part `P_i(f) = f - x_i d_i(f)`, so that
    /// `f = P_i(f) + x_i d_i(f)` with both `P_i(f)` and `d_i(f)`
    /// `s_i`-invariant.
    pub fn p_part(&self, i: usize) -> Poly {
        let xi = Poly::var(self.nvars, i);
        self - &(&xi * &self.demazure(i))
    }

    /// Reduction modulo `e_1 = x_1 + ... + x_{n+1}`: substitutes
    /// `x_{n+1} -> -(x_1 + ... + x_n)`.
    /// Re-targets the polynomial to a different variable count. Panics if
    /// a variable with index above `nvars` actually occurs.
    pub fn with_nvars(&self, nvars: usize) -> Poly {
        let mut out = Poly::zero(nvars);
        for (exps, c) in &self.terms {
            let mut e = exps.clone();
            while e.len() > nvars {
                assert_eq!(
                    e.pop(),
                    Some(0),
                    "variable index exceeds the requested count"
                );
            }
            e.resize(nvars, 0);
            out.insert(e, c.clone());
        }
        out
    }

    pub fn quotient_reduce(&self) -> Poly {
        let nv = self.nvars;
        let mut neg_sum = Poly::zero(nv);
        for j in 1..nv {
            neg_sum = &neg_sum - &Poly::var(nv, j);
        }
        let mut out = Poly::zero(nv);
        for (e, c) in self.terms() {
            let mut base = Poly::monomial(
                {
                    let mut ne = e.clone();
                    ne[nv - 1] = 0;
                    ne
                },
                c.clone(),
            );
            for _ in 0..e[nv - 1] {
                base = &base * &neg_sum;
            }
            out = &out + &base;
        }
        out
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.insert(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.insert(e.clone(), -c.clone());
        }
        out
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = Poly::zero(self.nvars);
        for (e1, c1) in self.terms() {
            for (e2, c2) in rhs.terms() {
                let ne: Vec<u16> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.insert(ne, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.scale(&-Q::one())
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        // Sort by exponent sum descending, then lex descending, so leading
        // terms come first.
        let mut terms: Vec<(&Vec<u16>, &Q)> = self.terms().collect();
        terms.sort_by(|(e1, _), (e2, _)| {
            let s1: u32 = e1.iter().map(|&x| x as u32).sum();
            let s2: u32 = e2.iter().map(|&x| x as u32).sum();
            s2.cmp(&s1).then(e2.cmp(e1))
        });
        for (idx, (e, c)) in terms.iter().enumerate() {
            let neg = c.is_negative();
            let mag = if neg { -(*c).clone() } else { (*c).clone() };
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            let is_const = e.iter().all(|&x| x == 0);
            if !mag.is_one() || is_const {
                write!(f, "{mag}")?;
                if !is_const {
                    write!(f, "*")?;
                }
            }
            let mut first = true;
            for (j, &exp) in e.iter().enumerate() {
                if exp == 0 {
                    continue;
                }
                if !first {
                    write!(f, "*")?;
                }
                first = false;
                if exp == 1 {
                    write!(f, "x{}", j + 1)?;
                } else {
                    write!(f, "x{}^{}", j + 1, exp)?;
                }
            }
        }
        Ok(())
    }
}

/// Parses polynomials like `x1^2*x2 - 3/2*x3 + 1`.
pub fn parse_poly(nvars: usize, input: &str) -> Result<Poly, PolyError> {
    let mut p = PolyParser {
        nvars,
        chars: input.chars().collect(),
        pos: 0,
    };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos != p.chars.len() {
        return Err(PolyError::Parse(format!("trailing input at {}", p.pos)));
    }
    Ok(e)
}

struct PolyParser {
    nvars: usize,
    chars: Vec<char>,
    pos: usize,
}

impl PolyParser {
    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn uint(&mut self) -> Result<u64, PolyError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        s.parse()
            .map_err(|_| PolyError::Parse(format!("expected integer at {start}")))
    }

    fn expr(&mut self) -> Result<Poly, PolyError> {
        let mut acc = if self.peek() == Some('-') {
            self.pos += 1;
            -&self.term()?
        } else {
            self.term()?
        };
        loop {
            match self.peek() {
                Some('+') => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some('-') => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Poly, PolyError> {
        let mut acc = self.factor()?;
        while self.peek() == Some('*') {
            self.pos += 1;
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Poly, PolyError> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(PolyError::Parse("expected ')'".into()));
                }
                self.pos += 1;
                self.maybe_pow(e)
            }
            Some('x') => {
                self.pos += 1;
                let i = self.uint()? as usize;
                if i < 1 || i > self.nvars {
                    return Err(PolyError::BadVariable(i, self.nvars));
                }
                self.maybe_pow(Poly::var(self.nvars, i))
            }
            Some(c) if c.is_ascii_digit() => {
                let num = self.uint()? as i64;
                let q = if self.peek() == Some('/') {
                    self.pos += 1;
                    let den = self.uint()? as i64;
                    Q::new(num.into(), den.into())
                } else {
                    Q::from_i64(num).unwrap()
                };
                Ok(Poly::constant(self.nvars, q))
            }
            other => Err(PolyError::Parse(format!("unexpected token {other:?}"))),
        }
    }

    fn maybe_pow(&mut self, base: Poly) -> Result<Poly, PolyError> {
        if self.peek() == Some('^') {
            self.pos += 1;
            let e = self.uint()?;
            let mut acc = Poly::one(self.nvars);
            for _ in 0..e {
                acc = &acc * &base;
            }
            Ok(acc)
        } else {
            Ok(base)
        }
    }
}

// ---------------------------------------------------------------------------
// Parabolic subgroups and invariant decompositions
// ---------------------------------------------------------------------------

/// A rank-one or rank-two parabolic subgroup of `S_{n+1}` used as a tensor
/// separator.
///
/// * `Single(i)` — the subgroup generated by `s_i`.
/// * `Distant(i, j)` — generated by `s_i`, `s_j` with `j >= i + 2`.
/// * `Adjacent(i)` — generated by `s_i`, `s_{i+1}` (a copy of `S_3`).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum ParabolicSubgroup {
    Single(usize),
    Distant(usize, usize),
    Adjacent(usize),
}

impl ParabolicSubgroup {
    /// Simple reflection indices generating the subgroup.
    pub fn generators(&self) -> Vec<usize> {
        match *self {
            ParabolicSubgroup::Single(i) => vec![i],
            ParabolicSubgroup::Distant(i, j) => vec![i, j],
            ParabolicSubgroup::Adjacent(i) => vec![i, i + 1],
        }
    }

    /// Largest variable index the subgroup moves.
    pub fn max_var(&self) -> usize {
        match *self {
            ParabolicSubgroup::Single(i) => i + 1,
            ParabolicSubgroup::Distant(_, j) => j + 1,
            ParabolicSubgroup::Adjacent(i) => i + 2,
        }
    }

    pub fn is_valid(&self, nvars: usize) -> bool {
        let ok = match *self {
            ParabolicSubgroup::Single(i) => i >= 1,
            ParabolicSubgroup::Distant(i, j) => i >= 1 && j >= i + 2,
            ParabolicSubgroup::Adjacent(i) => i >= 1,
        };
        ok && self.max_var() <= nvars
    }

    /// The free-module basis of `R` over `R^W`:
    ///
    /// * `Single(i)`: `{1, x_i}`;
    /// * `Distant(i, j)`: `{1, x_i, x_j, x_i x_j}`;
    /// * `Adjacent(i)`: the staircase `{x_i^a x_{i+1}^b : a <= 2, b <= 1}`.
    pub fn basis(&self, nvars: usize) -> Vec<Poly> {
        assert!(self.is_valid(nvars), "{self:?} invalid for {nvars} vars");
        match *self {
            ParabolicSubgroup::Single(i) => vec![Poly::one(nvars), Poly::var(nvars, i)],
            ParabolicSubgroup::Distant(i, j) => {
                let (xi, xj) = (Poly::var(nvars, i), Poly::var(nvars, j));
                vec![Poly::one(nvars), xi.clone(), xj.clone(), &xi * &xj]
            }
            ParabolicSubgroup::Adjacent(i) => {
                let (xi, xn) = (Poly::var(nvars, i), Poly::var(nvars, i + 1));
                // Ordered by total degree, then by power of x_i.
                vec![
                    Poly::one(nvars),
                    xi.clone(),
                    xn.clone(),
                    &xi * &xi,
                    &xi * &xn,
                    &(&xi * &xi) * &xn,
                ]
            }
        }
    }

    /// True iff `f` is invariant under every generator.
    pub fn is_invariant(&self, f: &Poly) -> bool {
        self.generators().iter().all(|&i| f.act_simple(i) == *f)
    }

    /// A basis of the `W`-invariant polynomials of exponent sum `s`:
    /// monomials in the elementary symmetric polynomials of each moved
    /// block times monomials in the untouched variables.
    pub fn invariant_basis(&self, nvars: usize, s: i64) -> Vec<Poly> {
        // Blocks of variables permuted among themselves (1-based).
        let blocks: Vec<Vec<usize>> = match *self {
            ParabolicSubgroup::Single(i) => vec![vec![i, i + 1]],
            ParabolicSubgroup::Distant(i, j) => vec![vec![i, i + 1], vec![j, j + 1]],
            ParabolicSubgroup::Adjacent(i) => vec![vec![i, i + 1, i + 2]],
        };
        let moved: Vec<usize> = blocks.iter().flatten().copied().collect();
        let fixed: Vec<usize> = (1..=nvars).filter(|v| !moved.contains(v)).collect();

        // Elementary symmetric polynomials per block, with their degrees.
        let mut gens: Vec<(Poly, i64)> = Vec::new();
        for block in &blocks {
            for r in 1..=block.len() {
                let mut e = Poly::zero(nvars);
                for combo in combinations(block, r) {
                    let mut m = Poly::one(nvars);
                    for v in combo {
                        m = &m * &Poly::var(nvars, v);
                    }
                    e = &e + &m;
                }
                gens.push((e, r as i64));
            }
        }
        for &v in &fixed {
            gens.push((Poly::var(nvars, v), 1));
        }

        // All products of generators with total exponent sum s.
        let mut out = Vec::new();
        let mut exps = vec![0i64; gens.len()];
        enumerate_products(&gens, &mut exps, 0, s, nvars, &mut out);
        out
    }

    /// Expresses `f = sum_b b * g_b` over the free-module basis, with each
    /// `g_b` a `W`-invariant polynomial, by exact degreewise linear solve.
    pub fn decompose(&self, f: &Poly) -> Result<Vec<Poly>, PolyError> {
        let nvars = f.nvars();
        // Rank-one and distant separators have closed forms via Demazure
        // operators; only the adjacent (S_3) case needs a linear solve.
        match *self {
            ParabolicSubgroup::Single(i) => {
                return Ok(vec![f.p_part(i), f.demazure(i)]);
            }
            ParabolicSubgroup::Distant(i, j) => {
                // The operators for i and j commute, so coefficients over
                // {1, x_i, x_j, x_i x_j} are the four mixed P/d images.
                let pj = f.p_part(j);
                let dj = f.demazure(j);
                return Ok(vec![
                    pj.p_part(i),
                    pj.demazure(i),
                    dj.p_part(i),
                    dj.demazure(i),
                ]);
            }
            ParabolicSubgroup::Adjacent(_) => {}
        }
        let basis = self.basis(nvars);
        let mut out = vec![Poly::zero(nvars); basis.len()];
        for s in f.exponent_sums() {
            let fs = f.component(s);
            // Unknowns: coefficients of each g_b over the invariant basis
            // in the matching degree.
            let mut columns: Vec<Poly> = Vec::new(); // b * (invariant basis elt)
            let mut owners: Vec<(usize, Poly)> = Vec::new();
            for (bi, b) in basis.iter().enumerate() {
                let db = b
                    .degree()
                    .expect("basis monomials are homogeneous")
                    / 2;
                if s - db < 0 {
                    continue;
                }
                for inv in self.invariant_basis(nvars, s - db) {
                    columns.push(b * &inv);
                    owners.push((bi, inv));
                }
            }
            // Row space: all monomials of exponent sum s occurring anywhere.
            let mut monos: Vec<Vec<u16>> = Vec::new();
            for p in columns.iter().chain(std::iter::once(&fs)) {
                for (e, _) in p.terms() {
                    if !monos.contains(e) {
                        monos.push(e.clone());
                    }
                }
            }
            monos.sort();
            let mut a = Mat::zeros(monos.len(), columns.len());
            for (c, col) in columns.iter().enumerate() {
                for (e, v) in col.terms() {
                    let r = monos.binary_search(e).unwrap();
                    *a.at_mut(r, c) = v.clone();
                }
            }
            let rhs: Vec<Q> = monos
                .iter()
                .map(|e| fs.terms.get(e).cloned().unwrap_or_else(Q::zero))
                .collect();
            let x = linalg::solve(&a, &rhs).ok_or(PolyError::DecompositionFailed)?;
            for (xi, (bi, inv)) in x.iter().zip(&owners) {
                out[*bi] = &out[*bi] + &inv.scale(xi);
            }
        }
        // Sanity: reassemble.
        let mut check = Poly::zero(nvars);
        for (b, g) in basis.iter().zip(&out) {
            check = &check + &(b * g);
        }
        if &check != f {
            return Err(PolyError::DecompositionFailed);
        }
        Ok(out)
    }
}

fn combinations(items: &[usize], r: usize) -> Vec<Vec<usize>> {
    if r == 0 {
        return vec![vec![]];
    }
    if items.len() < r {
        return vec![];
    }
    let mut out = Vec::new();
    for rest in combinations(&items[1..], r - 1) {
        let mut v = vec![items[0]];
        v.extend(rest);
        out.push(v);
    }
    out.extend(combinations(&items[1..], r));
    out
}

fn enumerate_products(
    gens: &[(Poly, i64)],
    exps: &mut Vec<i64>,
    idx: usize,
    remaining: i64,
    nvars: usize,
    out: &mut Vec<Poly>,
) {
    if idx == gens.len() {
        if remaining == 0 {
            let mut p = Poly::one(nvars);
            for (e, (g, _)) in exps.iter().zip(gens) {
                for _ in 0..*e {
                    p = &p * g;
                }
            }
            out.push(p);
        }
        return;
    }
    let d = gens[idx].1;
    let mut e = 0;
    while e * d <= remaining {
        exps[idx] = e;
        enumerate_products(gens, exps, idx + 1, remaining - e * d, nvars, out);
        e += 1;
    }
    exps[idx] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn demazure_basics() {
        let nv = 3;
        let x1 = Poly::var(nv, 1);
        let x2 = Poly::var(nv, 2);
        assert_eq!(x1.demazure(1), Poly::one(nv));
        assert_eq!(x2.demazure(1), -&Poly::one(nv));
        // Twisted Leibniz consequence: d_i(f) is s_i-invariant and
        // f = P_i(f) + x_i d_i(f).
        let f = parse_poly(nv, "x1^3*x2 - 2*x3*x1 + x2^2").unwrap();
        let d = f.demazure(1);
        assert_eq!(d.act_simple(1), d);
        let p = f.p_part(1);
        assert_eq!(p.act_simple(1), p);
        assert_eq!(&p + &(&x1 * &d), f);
        // d_i^2 = 0.
        assert!(f.demazure(1).demazure(1).is_zero());
    }

    #[test]
    fn single_decompose_matches_demazure() {
        let nv = 3;
        let f = parse_poly(nv, "x1^2*x2 + x3^3 - 1/2*x1*x2*x3").unwrap();
        let w = ParabolicSubgroup::Single(1);
        let g = w.decompose(&f).unwrap();
        assert_eq!(g[0], f.p_part(1));
        assert_eq!(g[1], f.demazure(1));
    }

    #[test]
    fn adjacent_decompose_staircase() {
        let nv = 4;
        let w = ParabolicSubgroup::Adjacent(1);
        let f = parse_poly(nv, "x1^3 + x2^2*x3 - x4*x1 + 2").unwrap();
        let g = w.decompose(&f).unwrap();
        let basis = w.basis(nv);
        assert_eq!(basis.len(), 6);
        let mut back = Poly::zero(nv);
        for (b, gb) in basis.iter().zip(&g) {
            assert!(w.is_invariant(gb), "coefficient not invariant");
            back = &back + &(b * gb);
        }
        assert_eq!(back, f);
    }

    #[test]
    fn distant_decompose() {
        let nv = 5;
        let w = ParabolicSubgroup::Distant(1, 3);
        let f = parse_poly(nv, "x1*x3^2 + x2*x4 - x5^2*x1").unwrap();
        let g = w.decompose(&f).unwrap();
        let basis = w.basis(nv);
        let mut back = Poly::zero(nv);
        for (b, gb) in basis.iter().zip(&g) {
            assert!(w.is_invariant(gb));
            back = &back + &(b * gb);
        }
        assert_eq!(back, f);
    }

    #[test]
    fn quotient_reduce() {
        let nv = 3;
        let e1 = parse_poly(nv, "x1 + x2 + x3").unwrap();
        assert!(e1.quotient_reduce().is_zero());
        // n = 1: x1 and (x1 - x2)/2 agree in the quotient.
        let f = parse_poly(2, "x1").unwrap();
        let g = parse_poly(2, "1/2*x1 - 1/2*x2").unwrap();
        assert_eq!(f.quotient_reduce(), g.quotient_reduce());
    }

    #[test]
    fn parse_display_roundtrip() {
        let nv = 3;
        for s in ["x1^2*x2 - 3/2*x3 + 1", "0", "-x1 + x2", "2/3"] {
            let p = parse_poly(nv, s).unwrap();
            let q = parse_poly(nv, &p.to_string()).unwrap();
            assert_eq!(p, q);
        }
    }
}

//! Quivers, paths and linear combinations of paths.
//!
//! Paths compose left to right: `p*q` traverses `p` and then `q`.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::exactla::{Field, Matrix};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub name: String,
    pub src: usize,
    pub tgt: usize,
}

/// A finite quiver.  Vertices carry labels; internally they are indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Quiver {
    pub vertices: Vec<String>,
    pub arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn new<S: ToString>(labels: impl IntoIterator<Item = S>) -> Self {
        Quiver { vertices: labels.into_iter().map(|s| s.to_string()).collect(), arrows: vec![] }
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertex(&self, label: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == label)
    }

    pub fn arrow_index(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }

    /// Adds an arrow between labelled vertices.
    pub fn add_arrow(&mut self, name: &str, src: &str, tgt: &str) -> Result<usize> {
        if self.arrow_index(name).is_some() {
            return Err(Error::Input(format!("duplicate arrow name {name}")));
        }
        let s = self.vertex(src).ok_or_else(|| Error::Input(format!("unknown vertex {src}")))?;
        let t = self.vertex(tgt).ok_or_else(|| Error::Input(format!("unknown vertex {tgt}")))?;
        self.arrows.push(Arrow { name: name.to_string(), src: s, tgt: t });
        Ok(self.arrows.len() - 1)
    }

    /// Builder shorthand used by tests and fixtures.
    pub fn with_arrows(mut self, arrows: &[(&str, &str, &str)]) -> Self {
        for (n, s, t) in arrows {
            self.add_arrow(n, s, t).expect("valid arrow");
        }
        self
    }

    pub fn out_arrows(&self, v: usize) -> Vec<usize> {
        (0..self.arrows.len()).filter(|&a| self.arrows[a].src == v).collect()
    }

    pub fn in_arrows(&self, v: usize) -> Vec<usize> {
        (0..self.arrows.len()).filter(|&a| self.arrows[a].tgt == v).collect()
    }

    pub fn has_loops(&self) -> bool {
        self.arrows.iter().any(|a| a.src == a.tgt)
    }

    /// Number of arrows `i -> j`.
    pub fn adjacency<F: Field>(&self) -> Matrix<F> {
        let n = self.num_vertices();
        let mut m: Matrix<F> = Matrix::zeros(n, n);
        for a in &self.arrows {
            m[(a.src, a.tgt)] = m[(a.src, a.tgt)].add(&F::one());
        }
        m
    }

    /// All paths of length `len` from `i` to `j`, ordered lexicographically by
    /// the sequence of arrow names.
    pub fn paths_between(&self, i: usize, j: usize, len: usize) -> Vec<Path> {
        let mut cur = vec![Path::trivial(i)];
        for _ in 0..len {
            let mut next = vec![];
            for p in &cur {
                for a in self.out_arrows(p.tgt) {
                    next.push(p.then_arrow(self, a));
                }
            }
            cur = next;
        }
        let mut out: Vec<Path> = cur.into_iter().filter(|p| p.tgt == j).collect();
        out.sort_by_key(|p| self.arrow_names(p));
        out
    }

    pub fn arrow_names(&self, p: &Path) -> Vec<String> {
        p.arrows.iter().map(|&a| self.arrows[a].name.clone()).collect()
    }

    /// Length of the longest path, or `None` when the quiver has a cycle.
    pub fn longest_path(&self, keep: impl Fn(usize) -> bool) -> Option<usize> {
        let n = self.num_vertices();
        let mut best = vec![0usize; n];
        for round in 0..=n {
            let mut changed = false;
            for (ai, a) in self.arrows.iter().enumerate() {
                if keep(ai) && best[a.tgt] < best[a.src] + 1 {
                    best[a.tgt] = best[a.src] + 1;
                    changed = true;
                }
            }
            if !changed {
                return Some(best.into_iter().max().unwrap_or(0));
            }
            if round == n {
                break;
            }
        }
        None
    }

    /// Quiver with all arrows reversed (same names).
    pub fn opposite(&self) -> Quiver {
        Quiver {
            vertices: self.vertices.clone(),
            arrows: self.arrows.iter().map(|a| Arrow { name: a.name.clone(), src: a.tgt, tgt: a.src }).collect(),
        }
    }

    pub fn fmt_path(&self, p: &Path) -> String {
        if p.arrows.is_empty() {
            format!("e_{}", self.vertices[p.src])
        } else {
            self.arrow_names(p).join("*")
        }
    }

    /// Sorted `name: src -> tgt` lines.
    pub fn arrow_lines(&self) -> Vec<String> {
        let mut v: Vec<String> = self
            .arrows
            .iter()
            .map(|a| format!("{}: {} -> {}", a.name, self.vertices[a.src], self.vertices[a.tgt]))
            .collect();
        v.sort();
        v
    }

    /// Multiset of `(src, tgt)` label pairs, sorted.
    pub fn arrow_shape(&self) -> Vec<(String, String)> {
        let mut v: Vec<(String, String)> =
            self.arrows.iter().map(|a| (self.vertices[a.src].clone(), self.vertices[a.tgt].clone())).collect();
        v.sort();
        v
    }
}

/// A path; the empty arrow list is the stationary path at `src`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    pub src: usize,
    pub tgt: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn trivial(v: usize) -> Path {
        Path { src: v, tgt: v, arrows: vec![] }
    }

    pub fn arrow(q: &Quiver, a: usize) -> Path {
        Path { src: q.arrows[a].src, tgt: q.arrows[a].tgt, arrows: vec![a] }
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn then_arrow(&self, q: &Quiver, a: usize) -> Path {
        debug_assert_eq!(q.arrows[a].src, self.tgt);
        let mut arrows = self.arrows.clone();
        arrows.push(a);
        Path { src: self.src, tgt: q.arrows[a].tgt, arrows }
    }

    /// `self` followed by `o`.
    pub fn compose(&self, o: &Path) -> Result<Path> {
        if self.tgt != o.src {
            return Err(Error::NotComposable);
        }
        let mut arrows = self.arrows.clone();
        arrows.extend_from_slice(&o.arrows);
        Ok(Path { src: self.src, tgt: o.tgt, arrows })
    }

    pub fn degree(&self, deg: &[usize]) -> usize {
        self.arrows.iter().map(|&a| deg[a]).sum()
    }
}

/// A finite linear combination of paths with nonzero coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PathSum<F: Field> {
    pub terms: BTreeMap<Path, F>,
}

impl<F: Field> fmt::Debug for PathSum<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.terms)
    }
}

impl<F: Field> Default for PathSum<F> {
    fn default() -> Self {
        PathSum { terms: BTreeMap::new() }
    }
}

impl<F: Field> PathSum<F> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_path(p: Path) -> Self {
        Self::term(p, F::one())
    }

    pub fn term(p: Path, c: F) -> Self {
        let mut s = Self::zero();
        s.add_term(p, c);
        s
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, p: Path, c: F) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(p.clone()).or_insert_with(F::zero);
        *e = e.add(&c);
        if e.is_zero() {
            self.terms.remove(&p);
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut s = self.clone();
        for (p, c) in &o.terms {
            s.add_term(p.clone(), c.clone());
        }
        s
    }

    pub fn scale(&self, c: &F) -> Self {
        let mut s = Self::zero();
        for (p, x) in &self.terms {
            s.add_term(p.clone(), x.mul(c));
        }
        s
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(&F::one().neg()))
    }

    /// Bilinear extension of composition.
    pub fn multiply(&self, o: &Self) -> Self {
        let mut s = Self::zero();
        for (p, a) in &self.terms {
            for (q, b) in &o.terms {
                if let Ok(pq) = p.compose(q) {
                    s.add_term(pq, a.mul(b));
                }
            }
        }
        s
    }

    /// Common `(source, target)` if every term shares it.
    pub fn endpoints(&self) -> Option<(usize, usize)> {
        let mut it = self.terms.keys();
        let first = it.next()?;
        let e = (first.src, first.tgt);
        it.all(|p| (p.src, p.tgt) == e).then_some(e)
    }

    /// Common degree of all terms, if homogeneous.
    pub fn homogeneous_degree(&self, deg: &[usize]) -> Option<usize> {
        let mut it = self.terms.keys();
        let d = it.next()?.degree(deg);
        it.all(|p| p.degree(deg) == d).then_some(d)
    }

    pub fn display(&self, q: &Quiver) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (p, c)) in self.terms.iter().enumerate() {
            let neg = c.neg();
            let (sign, mag) = if is_negative_repr(c) { ("-", neg) } else { ("+", c.clone()) };
            if i == 0 {
                if sign == "-" {
                    out.push('-');
                }
            } else {
                out.push_str(&format!(" {sign} "));
            }
            if !mag.is_one() {
                out.push_str(&format!("{mag}*"));
            }
            out.push_str(&q.fmt_path(p));
        }
        out
    }
}

fn is_negative_repr<F: Field>(c: &F) -> bool {
    c.to_string().starts_with('-')
}

/// Parses a sum like `x3*x2*x1 - 2*y3*x2*y1 + e_1`.
pub fn parse_path_sum<F: Field>(q: &Quiver, text: &str) -> Result<PathSum<F>> {
    let mut out = PathSum::zero();
    let mut sign = F::one();
    let mut cur = String::new();
    let flush = |cur: &mut String, sign: &F, out: &mut PathSum<F>| -> Result<()> {
        let t = cur.trim().to_string();
        cur.clear();
        if t.is_empty() {
            return Ok(());
        }
        let (p, c) = parse_term::<F>(q, &t)?;
        out.add_term(p, c.mul(sign));
        Ok(())
    };
    for ch in text.chars() {
        match ch {
            '+' | '-' => {
                if !cur.trim().is_empty() {
                    flush(&mut cur, &sign, &mut out)?;
                    sign = F::one();
                }
                if ch == '-' {
                    sign = sign.neg();
                }
            }
            _ => cur.push(ch),
        }
    }
    flush(&mut cur, &sign, &mut out)?;
    Ok(out)
}

fn parse_term<F: Field>(q: &Quiver, t: &str) -> Result<(Path, F)> {
    let mut coef = F::one();
    let mut path: Option<Path> = None;
    for f in t.split('*').map(str::trim) {
        if f.is_empty() {
            return Err(Error::Input(format!("empty factor in '{t}'")));
        }
        if f.chars().next().is_some_and(|c| c.is_ascii_digit()) {
            let c = F::parse(f).ok_or_else(|| Error::Input(format!("bad coefficient '{f}'")))?;
            coef = coef.mul(&c);
            continue;
        }
        let step = if let Some(v) = f.strip_prefix("e_") {
            let v = q.vertex(v).ok_or_else(|| Error::Input(format!("unknown vertex in '{f}'")))?;
            Path::trivial(v)
        } else {
            let a = q.arrow_index(f).ok_or_else(|| Error::Input(format!("unknown arrow '{f}'")))?;
            Path::arrow(q, a)
        };
        path = Some(match path {
            None => step,
            Some(p) => p.compose(&step).map_err(|_| Error::Input(format!("'{t}' is not a path")))?,
        });
    }
    let p = path.ok_or_else(|| Error::Input(format!("term '{t}' has no path")))?;
    Ok((p, coef))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::Rational;
    use proptest::prelude::*;

    type Q = Rational;

    fn ex1() -> Quiver {
        Quiver::new(["1", "2", "3", "4"]).with_arrows(&[("a", "3", "4"), ("b", "4", "1"), ("c", "3", "2"), ("d", "2", "1")])
    }

    fn kronecker() -> Quiver {
        Quiver::new(["1", "2"]).with_arrows(&[("a", "1", "2"), ("b", "1", "2")])
    }

    #[test]
    fn stationary_path_is_identity() {
        let q = ex1();
        let p = Path::arrow(&q, 0);
        assert_eq!(Path::trivial(p.src).compose(&p).unwrap(), p);
        assert_eq!(p.compose(&Path::trivial(p.tgt)).unwrap(), p);
    }

    #[test]
    fn compose_consecutive_arrows() {
        let q = Quiver::new(["1", "2", "3"]).with_arrows(&[("a", "1", "2"), ("b", "2", "3"), ("c", "3", "1")]);
        let ab = Path::arrow(&q, 0).compose(&Path::arrow(&q, 1)).unwrap();
        assert_eq!((ab.src, ab.tgt), (0, 2));
        assert_eq!(q.fmt_path(&ab), "a*b");
        assert_eq!(Path::arrow(&q, 0).compose(&Path::arrow(&q, 2)), Err(Error::NotComposable));
    }

    #[test]
    fn paths_of_length_zero() {
        let q = ex1();
        assert_eq!(q.paths_between(2, 2, 0), vec![Path::trivial(2)]);
        assert!(q.paths_between(2, 0, 0).is_empty());
    }

    #[test]
    fn two_routes_from_three_to_one() {
        let q = ex1();
        let ps = q.paths_between(q.vertex("3").unwrap(), q.vertex("1").unwrap(), 2);
        let names: Vec<String> = ps.iter().map(|p| q.fmt_path(p)).collect();
        assert_eq!(names, vec!["a*b", "c*d"]);
    }

    #[test]
    fn kronecker_arrows() {
        let q = kronecker();
        let ps = q.paths_between(0, 1, 1);
        assert_eq!(ps.iter().map(|p| q.fmt_path(p)).collect::<Vec<_>>(), vec!["a", "b"]);
    }

    #[test]
    fn multiply_by_zero() {
        let q = ex1();
        let x = PathSum::<Q>::from_path(Path::arrow(&q, 0));
        assert!(x.multiply(&PathSum::zero()).is_zero());
    }

    #[test]
    fn vertex_idempotents_act_orthogonally() {
        let q = Quiver::new(["1", "2"]).with_arrows(&[("a", "1", "2")]);
        let e = PathSum::<Q>::from_path(Path::trivial(0)).add(&PathSum::from_path(Path::trivial(1)));
        let a = PathSum::from_path(Path::arrow(&q, 0));
        assert_eq!(e.multiply(&a), a);
    }

    #[test]
    fn only_composable_terms_survive() {
        let q = Quiver::new(["1", "2", "3", "4"]).with_arrows(&[("a", "1", "2"), ("b", "3", "4"), ("c", "2", "3")]);
        let ab = PathSum::<Q>::from_path(Path::arrow(&q, 0)).add(&PathSum::from_path(Path::arrow(&q, 1)));
        let c = PathSum::from_path(Path::arrow(&q, 2));
        let want = PathSum::from_path(Path::arrow(&q, 0).compose(&Path::arrow(&q, 2)).unwrap());
        assert_eq!(ab.multiply(&c), want);
    }

    #[test]
    fn parse_and_display_round_trip() {
        let q = ex1();
        let s = parse_path_sum::<Q>(&q, "a*b - 2*c*d").unwrap();
        assert_eq!(s.display(&q), "a*b - 2*c*d");
        assert_eq!(parse_path_sum::<Q>(&q, &s.display(&q)).unwrap(), s);
        assert!(parse_path_sum::<Q>(&q, "a*d").is_err());
    }

    #[test]
    fn longest_path_detects_cycles() {
        assert_eq!(ex1().longest_path(|_| true), Some(2));
        let c = Quiver::new(["1", "2"]).with_arrows(&[("a", "1", "2"), ("b", "2", "1")]);
        assert_eq!(c.longest_path(|_| true), None);
        assert_eq!(c.longest_path(|a| a == 0), Some(1));
    }

    fn arb_quiver() -> impl Strategy<Value = Quiver> {
        (1usize..5, proptest::collection::vec((0usize..5, 0usize..5), 0..8)).prop_map(|(n, arrows)| {
            let mut q = Quiver::new((1..=n).map(|i| i.to_string()));
            for (k, (s, t)) in arrows.into_iter().enumerate() {
                let (s, t) = (s % n, t % n);
                q.arrows.push(Arrow { name: format!("a{k}"), src: s, tgt: t });
            }
            q
        })
    }

    fn random_sum(q: &Quiver, seeds: &[(usize, usize, usize, i64)]) -> PathSum<Q> {
        let mut s = PathSum::zero();
        for &(i, j, l, c) in seeds {
            let n = q.num_vertices();
            let ps = q.paths_between(i % n, j % n, l % 3);
            if let Some(p) = ps.first() {
                s.add_term(p.clone(), Q::from_i64(c));
            }
            if let Some(p) = ps.last() {
                s.add_term(p.clone(), Q::from_i64(c + 1));
            }
        }
        s
    }

    proptest! {
        #[test]
        fn multiplication_is_associative(q in arb_quiver(),
            a in proptest::collection::vec((0usize..5, 0usize..5, 0usize..3, -3i64..4), 1..4),
            b in proptest::collection::vec((0usize..5, 0usize..5, 0usize..3, -3i64..4), 1..4),
            c in proptest::collection::vec((0usize..5, 0usize..5, 0usize..3, -3i64..4), 1..4)) {
            let (x, y, z) = (random_sum(&q, &a), random_sum(&q, &b), random_sum(&q, &c));
            prop_assert_eq!(x.multiply(&y).multiply(&z), x.multiply(&y.multiply(&z)));
        }

        #[test]
        fn sum_of_idempotents_is_identity(q in arb_quiver(),
            a in proptest::collection::vec((0usize..5, 0usize..5, 0usize..3, -3i64..4), 1..4)) {
            let x = random_sum(&q, &a);
            let mut one = PathSum::zero();
            for v in 0..q.num_vertices() {
                one.add_term(Path::trivial(v), Q::from_i64(1));
            }
            prop_assert_eq!(one.multiply(&x), x.clone());
            prop_assert_eq!(x.multiply(&one), x);
        }

        #[test]
        fn path_count_matches_adjacency_power(q in arb_quiver(), l in 0usize..4) {
            let a = q.adjacency::<Q>().pow(l);
            for i in 0..q.num_vertices() {
                for j in 0..q.num_vertices() {
                    prop_assert_eq!(Q::from_i64(q.paths_between(i, j, l).len() as i64), a[(i, j)].clone());
                }
            }
        }
    }
}

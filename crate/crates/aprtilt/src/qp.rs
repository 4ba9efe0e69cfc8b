//! Quivers with potentials: cyclic derivatives, Jacobian and truncated Jacobian
//! presentations, cuts, and mutation with reduction.
//!
//! Cycles are written left to right like every path in this crate, so the
//! cycle `x4*x3*x2*x1` starts with `x4`.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::exactla::Field;
use crate::preproj::GradedTruncation;
use crate::presalg::{degreewise_basis, Presentation};
use crate::quiver::{parse_path_sum, Path, PathSum, Quiver};

/// Default bound on reduction passes.
pub const REDUCTION_PASSES: usize = 10;

/// A finite linear combination of cycles up to rotation.  Each cycle is stored
/// as its lexicographically least rotation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Potential<F: Field> {
    pub terms: BTreeMap<Vec<usize>, F>,
}

impl<F: Field> Default for Potential<F> {
    fn default() -> Self {
        Potential { terms: BTreeMap::new() }
    }
}

/// Least rotation of a nonempty arrow word.
pub fn canonical_rotation(c: &[usize]) -> Vec<usize> {
    (0..c.len()).map(|i| [&c[i..], &c[..i]].concat()).min().unwrap_or_default()
}

impl<F: Field> Potential<F> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Adds `c` times the cycle `word`, which must close up in `q`.
    pub fn add_cycle(&mut self, q: &Quiver, word: &[usize], c: F) -> Result<()> {
        if word.is_empty() {
            return Err(Error::Input("a potential term needs at least one arrow".into()));
        }
        for w in word.windows(2) {
            if q.arrows[w[0]].tgt != q.arrows[w[1]].src {
                return Err(Error::Input(format!("{} is not a path", names(q, word))));
            }
        }
        if q.arrows[word[word.len() - 1]].tgt != q.arrows[word[0]].src {
            return Err(Error::Input(format!("{} is not a cycle", names(q, word))));
        }
        let key = canonical_rotation(word);
        let e = self.terms.entry(key.clone()).or_insert_with(F::zero);
        *e = e.add(&c);
        if e.is_zero() {
            self.terms.remove(&key);
        }
        Ok(())
    }

    pub fn from_path_sum(q: &Quiver, s: &PathSum<F>) -> Result<Self> {
        let mut w = Self::zero();
        for (p, c) in &s.terms {
            w.add_cycle(q, &p.arrows, c.clone())?;
        }
        Ok(w)
    }

    pub fn add(&self, q: &Quiver, o: &Self) -> Self {
        let mut w = self.clone();
        for (c, x) in &o.terms {
            w.add_cycle(q, c, x.clone()).expect("cycles of the same quiver");
        }
        w
    }

    pub fn display(&self, q: &Quiver) -> String {
        let mut s = PathSum::zero();
        for (c, x) in &self.terms {
            s.add_term(cycle_path(q, c), x.clone());
        }
        s.display(q)
    }

    /// Arrows occurring in some term.
    pub fn support(&self) -> BTreeSet<usize> {
        self.terms.keys().flatten().cloned().collect()
    }
}

fn names(q: &Quiver, word: &[usize]) -> String {
    word.iter().map(|&a| q.arrows[a].name.as_str()).collect::<Vec<_>>().join("*")
}

fn cycle_path(q: &Quiver, c: &[usize]) -> Path {
    Path { src: q.arrows[c[0]].src, tgt: q.arrows[c[c.len() - 1]].tgt, arrows: c.to_vec() }
}

/// Parses `x4*x3*x2*x1 - y4*y3*y2*y1 + ...`.
pub fn parse_potential<F: Field>(q: &Quiver, text: &str) -> Result<Potential<F>> {
    Potential::from_path_sum(q, &parse_path_sum(q, text)?)
}

/// `∂_a W`: for every occurrence of `a`, the rotation starting at it with `a`
/// removed.  The result runs from the target of `a` to its source.
pub fn cyclic_derivative<F: Field>(q: &Quiver, w: &Potential<F>, a: usize) -> PathSum<F> {
    let mut out = PathSum::zero();
    for (c, x) in &w.terms {
        for (p, _) in c.iter().enumerate().filter(|(_, &b)| b == a) {
            let rest: Vec<usize> = c[p + 1..].iter().chain(&c[..p]).cloned().collect();
            let path = if rest.is_empty() {
                Path::trivial(q.arrows[a].tgt)
            } else {
                Path { src: q.arrows[a].tgt, tgt: q.arrows[a].src, arrows: rest }
            };
            out.add_term(path, x.clone());
        }
    }
    out
}

/// A set of arrows.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Cut {
    pub arrows: BTreeSet<usize>,
}

impl Cut {
    pub fn from_names(q: &Quiver, names: &[&str]) -> Result<Cut> {
        let arrows = names
            .iter()
            .map(|n| q.arrow_index(n).ok_or_else(|| Error::Input(format!("unknown arrow '{n}' in cut"))))
            .collect::<Result<_>>()?;
        Ok(Cut { arrows })
    }

    /// Degree 1 on cut arrows, 0 elsewhere.
    pub fn grading(&self, q: &Quiver) -> Vec<usize> {
        (0..q.arrows.len()).map(|a| self.arrows.contains(&a) as usize).collect()
    }

    pub fn names(&self, q: &Quiver) -> Vec<String> {
        self.arrows.iter().map(|&a| q.arrows[a].name.clone()).collect()
    }
}

/// Every cycle of `w` must meet the cut exactly once.
pub fn check_cut<F: Field>(q: &Quiver, w: &Potential<F>, cut: &Cut) -> Result<()> {
    for c in w.terms.keys() {
        let k = c.iter().filter(|a| cut.arrows.contains(a)).count();
        if k != 1 {
            return Err(Error::NotACut(names(q, c), k));
        }
    }
    Ok(())
}

/// Relations `∂_a W` for every arrow, in arrow order, optionally graded by a cut.
pub fn jacobian_presentation<F: Field>(q: &Quiver, w: &Potential<F>, cut: Option<&Cut>) -> Result<Presentation<F>> {
    let relations = (0..q.arrows.len()).map(|a| cyclic_derivative(q, w, a)).collect();
    let p = Presentation::new(q.clone(), relations);
    Ok(match cut {
        Some(c) => {
            check_cut(q, w, c)?;
            p.with_degrees(c.grading(q))
        }
        None => p,
    })
}

/// Quiver without the cut arrows and relations `∂_c W` for `c` in the cut.
pub fn truncated_jacobian<F: Field>(q: &Quiver, w: &Potential<F>, cut: &Cut) -> Result<Presentation<F>> {
    check_cut(q, w, cut)?;
    let keep: Vec<usize> = (0..q.arrows.len()).filter(|a| !cut.arrows.contains(a)).collect();
    let (sub, new_index) = restrict_arrows(q, &keep);
    let relations = cut
        .arrows
        .iter()
        .map(|&c| reindex(&cyclic_derivative(q, w, c), &new_index))
        .collect();
    Ok(Presentation::new(sub, relations))
}

fn restrict_arrows(q: &Quiver, keep: &[usize]) -> (Quiver, Vec<Option<usize>>) {
    let mut sub = Quiver { vertices: q.vertices.clone(), arrows: vec![] };
    let mut idx = vec![None; q.arrows.len()];
    for &a in keep {
        idx[a] = Some(sub.arrows.len());
        sub.arrows.push(q.arrows[a].clone());
    }
    (sub, idx)
}

fn reindex<F: Field>(s: &PathSum<F>, idx: &[Option<usize>]) -> PathSum<F> {
    let mut out = PathSum::zero();
    for (p, c) in &s.terms {
        let arrows = p.arrows.iter().map(|&a| idx[a].expect("arrow kept")).collect();
        out.add_term(Path { src: p.src, tgt: p.tgt, arrows }, c.clone());
    }
    out
}

/// Result of mutating a quiver with potential.
#[derive(Clone, Debug)]
pub struct Mutation<F: Field> {
    pub quiver: Quiver,
    pub potential: Potential<F>,
    /// Arrow degrees when the input was graded and a consistent assignment exists.
    pub degrees: Option<Vec<usize>>,
    /// Set when the input was graded but no nonnegative assignment was found.
    pub degree_conflict: Option<String>,
    /// 2-cycles removed by reduction.
    pub removed_two_cycles: usize,
}

fn reversed_name(name: &str) -> String {
    match name.strip_suffix('\'') {
        Some(s) => s.to_string(),
        None => format!("{name}'"),
    }
}

/// Premutation at `k` followed by reduction.
///
/// Arrows at `k` are reversed (`a` becomes `a'`, and `a'` becomes `a` again),
/// each path `a*b` through `k` gets a composite arrow `[ab]`, and
/// `W' = [W] + Σ [ab]*b'*a'`.  With `degrees`, composites get `deg a + deg b`
/// and the reversed arrows complementary degrees so that `W'` stays
/// homogeneous of degree 1.
pub fn qp_mutate<F: Field>(q: &Quiver, w: &Potential<F>, k: usize, degrees: Option<&[usize]>) -> Result<Mutation<F>> {
    if k >= q.num_vertices() {
        return Err(Error::Input(format!("no vertex with index {k}")));
    }
    let label = &q.vertices[k];
    let ins = q.in_arrows(k);
    let outs = q.out_arrows(k);
    if ins.iter().any(|a| q.arrows[*a].src == k) {
        return Err(Error::Precondition(format!("loop at vertex {label}")));
    }
    for &a in &ins {
        if let Some(&b) = outs.iter().find(|&&b| q.arrows[b].tgt == q.arrows[a].src) {
            return Err(Error::Precondition(format!(
                "2-cycle {}*{} at vertex {label}",
                q.arrows[a].name, q.arrows[b].name
            )));
        }
    }

    let mut nq = Quiver { vertices: q.vertices.clone(), arrows: vec![] };
    let mut image = vec![0; q.arrows.len()];
    for (a, arr) in q.arrows.iter().enumerate() {
        let mut arr = arr.clone();
        if arr.src == k || arr.tgt == k {
            arr = crate::quiver::Arrow { name: reversed_name(&arr.name), src: arr.tgt, tgt: arr.src };
        }
        image[a] = nq.arrows.len();
        nq.arrows.push(arr);
    }
    let mut composite = BTreeMap::new();
    for &a in &ins {
        for &b in &outs {
            let name = format!("[{}{}]", q.arrows[a].name, q.arrows[b].name);
            let src = q.vertices[q.arrows[a].src].clone();
            let tgt = q.vertices[q.arrows[b].tgt].clone();
            composite.insert((a, b), nq.add_arrow(&name, &src, &tgt)?);
        }
    }

    let mut nw = Potential::zero();
    for (c, x) in &w.terms {
        let start = c.iter().position(|&a| q.arrows[a].src != k).expect("no loops at k");
        let rot: Vec<usize> = c[start..].iter().chain(&c[..start]).cloned().collect();
        let mut word = vec![];
        let mut i = 0;
        while i < rot.len() {
            if q.arrows[rot[i]].tgt == k {
                word.push(composite[&(rot[i], rot[i + 1])]);
                i += 2;
            } else {
                word.push(image[rot[i]]);
                i += 1;
            }
        }
        nw.add_cycle(&nq, &word, x.clone())?;
    }
    for (&(a, b), &ab) in &composite {
        nw.add_cycle(&nq, &[ab, image[b], image[a]], F::one())?;
    }

    let (degrees, degree_conflict) = match degrees {
        None => (None, None),
        Some(deg) => match mutated_degrees(q, k, deg, &ins, &outs, &image, &composite, nq.arrows.len()) {
            Some(d) => (Some(d), None),
            None => (None, Some(format!("no nonnegative degree assignment at vertex {label}"))),
        },
    };
    let (quiver, potential, degrees, removed) = reduce(nq, nw, degrees, REDUCTION_PASSES)?;
    Ok(Mutation { quiver, potential, degrees, degree_conflict, removed_two_cycles: removed })
}

#[allow(clippy::too_many_arguments)]
fn mutated_degrees(
    q: &Quiver,
    k: usize,
    deg: &[usize],
    ins: &[usize],
    outs: &[usize],
    image: &[usize],
    composite: &BTreeMap<(usize, usize), usize>,
    len: usize,
) -> Option<Vec<usize>> {
    for (c_in, c_out) in [(0i64, 1i64), (1, 0)] {
        let mut d = vec![0i64; len];
        for (a, arr) in q.arrows.iter().enumerate() {
            d[image[a]] = if arr.tgt == k && ins.contains(&a) {
                c_in - deg[a] as i64
            } else if arr.src == k && outs.contains(&a) {
                c_out - deg[a] as i64
            } else {
                deg[a] as i64
            };
        }
        for (&(a, b), &ab) in composite {
            d[ab] = (deg[a] + deg[b]) as i64;
        }
        if d.iter().all(|&x| x >= 0) {
            return Some(d.into_iter().map(|x| x as usize).collect());
        }
    }
    None
}

/// Splits off 2-cycles `λ c d` whose arrows occur at most once per term.  With
/// `W = λcd + cU + dV + W0`, the substitution `c ↦ c - λ⁻¹V`, `d ↦ d - λ⁻¹U`
/// gives `λcd + W0 - λ⁻¹UV`, after which `c` and `d` are dropped.
fn reduce<F: Field>(
    mut q: Quiver,
    mut w: Potential<F>,
    mut degrees: Option<Vec<usize>>,
    passes: usize,
) -> Result<(Quiver, Potential<F>, Option<Vec<usize>>, usize)> {
    let mut removed = 0;
    for _ in 0..passes {
        let mut progress = false;
        loop {
            let quad: Vec<(Vec<usize>, F)> =
                w.terms.iter().filter(|(c, _)| c.len() == 2).map(|(c, x)| (c.clone(), x.clone())).collect();
            let Some((c, d, lambda)) = quad.into_iter().find_map(|(t, x)| linear_pair(&w, t[0], t[1]).then(|| (t[0], t[1], x)))
            else {
                break;
            };
            w = eliminate(&q, &w, c, d, &lambda);
            let keep: Vec<usize> = (0..q.arrows.len()).filter(|&a| a != c && a != d).collect();
            let (sub, idx) = restrict_arrows(&q, &keep);
            let mut nw = Potential::zero();
            for (t, x) in &w.terms {
                let word: Vec<usize> = t.iter().map(|&a| idx[a].expect("eliminated arrows are gone")).collect();
                nw.add_cycle(&sub, &word, x.clone())?;
            }
            degrees = degrees.map(|d| keep.iter().map(|&a| d[a]).collect());
            q = sub;
            w = nw;
            removed += 1;
            progress = true;
        }
        if !w.terms.keys().any(|c| c.len() == 2) {
            return Ok((q, w, degrees, removed));
        }
        if !progress {
            break;
        }
    }
    Err(Error::ReductionIncomplete(passes))
}

fn linear_pair<F: Field>(w: &Potential<F>, c: usize, d: usize) -> bool {
    if c == d {
        return false;
    }
    w.terms.keys().all(|t| {
        let n = t.iter().filter(|&&a| a == c || a == d).count();
        n <= 1 || (t.len() == 2 && n == 2)
    })
}

fn eliminate<F: Field>(q: &Quiver, w: &Potential<F>, c: usize, d: usize, lambda: &F) -> Potential<F> {
    let mut w0 = Potential::zero();
    let mut u = PathSum::zero();
    let mut v = PathSum::zero();
    for (t, x) in &w.terms {
        if t.len() == 2 && t.contains(&c) && t.contains(&d) {
            continue;
        }
        if t.contains(&c) {
            u = u.add(&cyclic_derivative(q, &single(t, x), c));
        } else if t.contains(&d) {
            v = v.add(&cyclic_derivative(q, &single(t, x), d));
        } else {
            w0.terms.insert(t.clone(), x.clone());
        }
    }
    let uv = u.multiply(&v).scale(&lambda.inv().neg());
    w0.add(q, &Potential::from_path_sum(q, &uv).expect("cycles"))
}

fn single<F: Field>(t: &[usize], x: &F) -> Potential<F> {
    Potential { terms: BTreeMap::from([(t.to_vec(), x.clone())]) }
}

/// Degreewise comparison of a preprojective truncation with a cut-graded
/// Jacobian presentation on the same vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JacobianComparison {
    pub bound: usize,
    pub preproj_dims: Vec<usize>,
    pub jacobian_dims: Vec<usize>,
    /// First `(degree, i, j)` whose blocks differ.
    pub first_mismatch: Option<(usize, usize, usize)>,
}

impl JacobianComparison {
    pub fn passed(&self) -> bool {
        self.first_mismatch.is_none()
    }
}

pub fn compare_preproj_jacobian<F: Field>(gt: &GradedTruncation<F>, jac: &Presentation<F>, d: usize) -> Result<JacobianComparison> {
    if gt.bound <= d {
        return Err(Error::TruncationTooSmall(format!("truncation holds degrees below {}, need {d}", gt.bound)));
    }
    let n = gt.algebra().num_vertices();
    if jac.quiver.num_vertices() != n {
        return Err(Error::Precondition("vertex counts differ".into()));
    }
    let basis = degreewise_basis(jac, d)?;
    let mut first_mismatch = None;
    'outer: for k in 0..=d {
        for i in 0..n {
            for j in 0..n {
                if gt.block_dim(k, i, j) != basis.dim_between(k, i, j) {
                    first_mismatch = Some((k, i, j));
                    break 'outer;
                }
            }
        }
    }
    Ok(JacobianComparison {
        bound: d,
        preproj_dims: gt.dims()[..=d].to_vec(),
        jacobian_dims: basis.dims(),
        first_mismatch,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{Fp, Rational};
    use crate::preproj::preprojective_truncation;
    use crate::presalg::as_fd_algebra;
    use proptest::prelude::*;

    type Q = Rational;
    type P = Fp<2147483647>;

    fn ex2_qp<F: Field>() -> (Quiver, Potential<F>, Cut) {
        let q = Quiver::new(["1", "2", "3", "4"]).with_arrows(&[
            ("x1", "2", "1"),
            ("y1", "2", "1"),
            ("x2", "3", "2"),
            ("y2", "3", "2"),
            ("x3", "4", "3"),
            ("y3", "4", "3"),
            ("x4", "1", "4"),
            ("y4", "1", "4"),
        ]);
        let w = parse_potential(&q, "x4*x3*x2*x1 - y4*y3*y2*y1 + y4*x3*y2*x1 - x4*y3*x2*y1").unwrap();
        let cut = Cut::from_names(&q, &["x4", "y4"]).unwrap();
        (q, w, cut)
    }

    fn ex3_qp<F: Field>() -> (Quiver, Potential<F>, Cut) {
        let q = Quiver::new(["1", "2", "3", "4"]).with_arrows(&[
            ("x3", "4", "3"),
            ("y3", "4", "3"),
            ("x4", "4", "1"),
            ("y4", "4", "1"),
            ("x1", "1", "2"),
            ("y1", "1", "2"),
            ("x2", "3", "2"),
            ("y2", "3", "2"),
            ("r1", "2", "4"),
            ("r2", "2", "4"),
            ("r3", "2", "4"),
            ("r4", "2", "4"),
        ]);
        let w = parse_potential(
            &q,
            "r1*x4*x1 - r1*x3*x2 + r2*y4*x1 - r2*x3*y2 + r3*x4*y1 - r3*y3*x2 + r4*y4*y1 - r4*y3*y2",
        )
        .unwrap();
        let cut = Cut::from_names(&q, &["r1", "r2", "r3", "r4"]).unwrap();
        (q, w, cut)
    }

    fn ps<F: Field>(q: &Quiver, s: &str) -> PathSum<F> {
        parse_path_sum(q, s).unwrap()
    }

    #[test]
    fn derivative_of_absent_arrow_is_zero() {
        let (q, w, _) = ex2_qp::<Q>();
        let q2 = q.clone().with_arrows(&[("z", "1", "2")]);
        assert!(cyclic_derivative(&q2, &w, q2.arrow_index("z").unwrap()).is_zero());
    }

    #[test]
    fn derivative_of_single_cycle() {
        let q = Quiver::new(["1", "2", "3", "4"]).with_arrows(&[("x1", "1", "2"), ("x2", "2", "3"), ("x3", "3", "4"), ("x4", "4", "1")]);
        let w: Potential<Q> = parse_potential(&q, "x1*x2*x3*x4").unwrap();
        assert_eq!(cyclic_derivative(&q, &w, 3), ps(&q, "x1*x2*x3"));
        assert_eq!(cyclic_derivative(&q, &w, 1), ps(&q, "x3*x4*x1"));
    }

    #[test]
    fn derivative_counts_repeated_occurrences() {
        let q = Quiver::new(["1", "2"]).with_arrows(&[("a", "1", "2"), ("b", "2", "1")]);
        let w: Potential<Q> = parse_potential(&q, "a*b*a*b").unwrap();
        assert_eq!(cyclic_derivative(&q, &w, 0), ps(&q, "2*b*a*b"));
    }

    #[test]
    fn ex3_derivative_at_r1() {
        let (q, w, _) = ex3_qp::<Q>();
        let r1 = q.arrow_index("r1").unwrap();
        assert_eq!(cyclic_derivative(&q, &w, r1), ps(&q, "x4*x1 - x3*x2"));
    }

    #[test]
    fn jacobian_relation_counts() {
        let (q, w, _) = ex2_qp::<Q>();
        assert_eq!(jacobian_presentation(&q, &w, None).unwrap().relations.len(), 8);
        let (q, w, _) = ex3_qp::<Q>();
        assert_eq!(jacobian_presentation(&q, &w, None).unwrap().relations.len(), 12);
        let p = jacobian_presentation(&q, &Potential::<Q>::zero(), None).unwrap();
        assert!(p.relations.iter().all(|r| r.is_zero()));
    }

    #[test]
    fn ex2_truncation() {
        let (q, w, cut) = ex2_qp::<Q>();
        let t = truncated_jacobian(&q, &w, &cut).unwrap();
        assert_eq!(
            t.quiver.arrow_lines(),
            ["x1: 2 -> 1", "x2: 3 -> 2", "x3: 4 -> 3", "y1: 2 -> 1", "y2: 3 -> 2", "y3: 4 -> 3"]
        );
        let tq = &t.quiver;
        assert_eq!(t.relations, vec![ps(tq, "x3*x2*x1 - y3*x2*y1"), ps(tq, "x3*y2*x1 - y3*y2*y1")]);
        let a = as_fd_algebra(&t, 20).unwrap();
        assert_eq!(crate::homalg::global_dimension(&a, 4).unwrap(), 2);
    }

    #[test]
    fn ex3_truncation() {
        let (q, w, cut) = ex3_qp::<Q>();
        let t = truncated_jacobian(&q, &w, &cut).unwrap();
        assert_eq!(t.quiver.arrows.len(), 8);
        let tq = &t.quiver;
        let want: Vec<PathSum<Q>> =
            ["x4*x1 - x3*x2", "y4*x1 - x3*y2", "x4*y1 - y3*x2", "y4*y1 - y3*y2"].iter().map(|s| ps(tq, s)).collect();
        assert_eq!(t.relations, want);
    }

    #[test]
    fn empty_cut_of_empty_potential_is_path_algebra() {
        let q = Quiver::new(["1", "2"]).with_arrows(&[("a", "1", "2")]);
        let t = truncated_jacobian(&q, &Potential::<Q>::zero(), &Cut::default()).unwrap();
        assert_eq!(t, Presentation::hereditary(q));
    }

    #[test]
    fn non_cut_names_the_cycle() {
        let (q, w, _) = ex2_qp::<Q>();
        let bad = Cut::from_names(&q, &["x4", "y4", "x1"]).unwrap();
        match truncated_jacobian(&q, &w, &bad).unwrap_err() {
            Error::NotACut(cycle, 2) => assert!(cycle.contains("x1") && cycle.contains("x4"), "{cycle}"),
            e => panic!("{e:?}"),
        }
        let none = Cut::from_names(&q, &["x1"]).unwrap();
        assert!(matches!(truncated_jacobian(&q, &w, &none), Err(Error::NotACut(_, 0))));
    }

    #[test]
    fn ex2_mutation_at_1() {
        let (q, w, cut) = ex2_qp::<Q>();
        let m = qp_mutate(&q, &w, 0, Some(&cut.grading(&q))).unwrap();
        assert_eq!(m.removed_two_cycles, 0);
        assert_eq!(
            m.quiver.arrow_lines(),
            [
                "[x1x4]: 2 -> 4",
                "[x1y4]: 2 -> 4",
                "[y1x4]: 2 -> 4",
                "[y1y4]: 2 -> 4",
                "x1': 1 -> 2",
                "x2: 3 -> 2",
                "x3: 4 -> 3",
                "x4': 4 -> 1",
                "y1': 1 -> 2",
                "y2: 3 -> 2",
                "y3: 4 -> 3",
                "y4': 4 -> 1",
            ]
        );
        let deg = m.degrees.unwrap();
        for (a, arr) in m.quiver.arrows.iter().enumerate() {
            assert_eq!(deg[a], arr.name.starts_with('[') as usize, "{}", arr.name);
        }
        assert_eq!(m.potential.terms.len(), 8);
    }

    #[test]
    fn mutation_without_paths_reverses_arrows() {
        let q = Quiver::new(["1", "2", "3"]).with_arrows(&[("a", "1", "2"), ("b", "3", "2")]);
        let m = qp_mutate(&q, &Potential::<Q>::zero(), 1, None).unwrap();
        assert_eq!(m.quiver.arrow_lines(), ["a': 2 -> 1", "b': 2 -> 3"]);
        assert!(m.potential.is_zero());
    }

    #[test]
    fn mutation_rejects_two_cycles() {
        let q = Quiver::new(["1", "2"]).with_arrows(&[("a", "1", "2"), ("b", "2", "1")]);
        assert!(matches!(qp_mutate(&q, &Potential::<Q>::zero(), 0, None), Err(Error::Precondition(_))));
    }

    #[test]
    fn reduction_failure_is_reported() {
        let q = Quiver::new(["1", "2"]).with_arrows(&[("a", "1", "2"), ("b", "2", "1")]);
        let w: Potential<Q> = parse_potential(&q, "a*b + a*b*a*b").unwrap();
        assert_eq!(reduce(q, w, None, 3).unwrap_err(), Error::ReductionIncomplete(3));
    }

    #[test]
    fn reduction_splits_trivial_part() {
        let q = Quiver::new(["1", "2"]).with_arrows(&[("c", "1", "2"), ("d", "2", "1"), ("u", "2", "1"), ("v", "1", "2")]);
        let w: Potential<Q> = parse_potential(&q, "c*d + c*u*v*u + d*v*u*v").unwrap();
        let (rq, rw, _, n) = reduce(q, w, None, 10).unwrap();
        assert_eq!(n, 1);
        assert_eq!(rq.arrow_lines(), ["u: 2 -> 1", "v: 1 -> 2"]);
        assert_eq!(rw, parse_potential(&rq, "-1*u*v*u*v*u*v").unwrap());
    }

    fn graded_dims<F: Field>(q: &Quiver, w: &Potential<F>, deg: &[usize], d: usize) -> Vec<Vec<Vec<usize>>> {
        let p = Presentation::new(q.clone(), (0..q.arrows.len()).map(|a| cyclic_derivative(q, w, a)).collect())
            .with_degrees(deg.to_vec());
        let b = degreewise_basis(&p, d).unwrap();
        let n = q.num_vertices();
        (0..=d).map(|k| (0..n).map(|i| (0..n).map(|j| b.dim_between(k, i, j)).collect()).collect()).collect()
    }

    #[test]
    fn ex2_double_mutation_keeps_dimensions() {
        let (q, w, cut) = ex2_qp::<P>();
        let deg = cut.grading(&q);
        let m1 = qp_mutate(&q, &w, 0, Some(&deg)).unwrap();
        let m2 = qp_mutate(&m1.quiver, &m1.potential, 0, m1.degrees.as_deref()).unwrap();
        assert_eq!(m2.removed_two_cycles, 4);
        assert_eq!(m2.quiver.arrow_shape(), q.arrow_shape());
        let cut2 = Cut::from_names(&m2.quiver, &["x4", "y4"]).unwrap();
        check_cut(&m2.quiver, &m2.potential, &cut2).unwrap();
        let deg2 = cut2.grading(&m2.quiver);
        assert_eq!(graded_dims(&m2.quiver, &m2.potential, &deg2, 4), graded_dims(&q, &w, &deg, 4));
    }

    #[test]
    fn jacobian_matches_preprojective_ex2() {
        let (q, w, cut) = ex2_qp::<P>();
        let lam = as_fd_algebra(&truncated_jacobian(&q, &w, &cut).unwrap(), 20).unwrap();
        let gt = preprojective_truncation(&lam, 2, 5).unwrap();
        let jac = jacobian_presentation(&q, &w, Some(&cut)).unwrap();
        let r = compare_preproj_jacobian(&gt, &jac, 4).unwrap();
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.jacobian_dims, [24, 152, 408, 792, 1304]);
    }

    #[test]
    fn jacobian_matches_preprojective_ex3() {
        let (q, w, cut) = ex3_qp::<P>();
        let lam = as_fd_algebra(&truncated_jacobian(&q, &w, &cut).unwrap(), 20).unwrap();
        let gt = preprojective_truncation(&lam, 2, 5).unwrap();
        let jac = jacobian_presentation(&q, &w, Some(&cut)).unwrap();
        let r = compare_preproj_jacobian(&gt, &jac, 4).unwrap();
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.jacobian_dims, [16, 144, 400, 784, 1296]);
    }

    #[test]
    fn display_round_trips() {
        let (q, w, _) = ex3_qp::<Q>();
        assert_eq!(parse_potential::<Q>(&q, &w.display(&q)).unwrap(), w);
    }

    proptest! {
        #[test]
        fn derivative_is_rotation_invariant(r in 0usize..4, coef in -5i64..5) {
            let (q, _, _) = ex2_qp::<Q>();
            let cyc = [6usize, 4, 2, 0];
            let rot: Vec<usize> = cyc[r..].iter().chain(&cyc[..r]).cloned().collect();
            let mut a = Potential::zero();
            a.add_cycle(&q, &cyc, Q::from_i64(coef)).unwrap();
            let mut b = Potential::zero();
            b.add_cycle(&q, &rot, Q::from_i64(coef)).unwrap();
            prop_assert_eq!(&a, &b);
            for x in 0..q.arrows.len() {
                prop_assert_eq!(cyclic_derivative(&q, &a, x), cyclic_derivative(&q, &b, x));
            }
        }

        #[test]
        fn canonical_rotation_is_least(word in proptest::collection::vec(0usize..3, 1..8), r in 0usize..8) {
            let r = r % word.len();
            let rot: Vec<usize> = word[r..].iter().chain(&word[..r]).cloned().collect();
            prop_assert_eq!(canonical_rotation(&word), canonical_rotation(&rot));
            let c = canonical_rotation(&word);
            for i in 0..word.len() {
                prop_assert!(c <= [&word[i..], &word[..i]].concat());
            }
        }
    }
}

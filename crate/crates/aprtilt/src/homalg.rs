//! Ext groups, global dimension, the higher Auslander-Reiten translations
//! `τ_n = D Ext^n(-, A)` and `τ_n^- = Ext^n(DA, -)`, bounded membership tests
//! for `N^-` and `N^+`, and a Serre duality check.

use crate::error::{Error, Result};
use crate::exactla::{Field, Matrix};
use crate::presalg::{Elem, FDAlgebra};
use crate::proj::{min_resolution, ProjMap, ProjSum, Resolution};
use crate::quiver::{Path, PathSum};
use crate::repmod::{hom_space, Module, RepMap};

pub use crate::proj::projective_dimension;

/// Cohomology of a cochain complex at one spot: representatives and a
/// projection from cocycles onto their coordinates.
#[derive(Clone, Debug)]
pub struct Cohomology<F: Field> {
    /// `dim C x e`, cocycles whose classes form a basis.
    pub reps: Matrix<F>,
    /// `e x dim C`, correct on cocycles.
    pub quot: Matrix<F>,
}

impl<F: Field> Cohomology<F> {
    pub fn dim(&self) -> usize {
        self.reps.cols()
    }

    /// `prev: C^{k-1} -> C^k` and `next: C^k -> C^{k+1}`, each optional.
    pub fn compute(dim: usize, prev: Option<&Matrix<F>>, next: Option<&Matrix<F>>) -> Self {
        let (z, free) = match next {
            Some(d) if d.rows() > 0 => d.kernel_with_free(),
            _ => (Matrix::identity(dim), (0..dim).collect()),
        };
        // cocycles are determined by their free coordinates
        let bz = match prev {
            Some(d) => d.select_rows(&free),
            None => Matrix::zeros(free.len(), 0),
        };
        let c = bz.cokernel();
        let reps = z.mul(&c.section);
        let mut quot = Matrix::zeros(c.dim(), dim);
        for (i, &f) in free.iter().enumerate() {
            for r in 0..c.dim() {
                quot[(r, f)] = c.proj[(r, i)].clone();
            }
        }
        Cohomology { reps, quot }
    }

    /// Dimension only, from ranks.
    pub fn dim_of(dim: usize, prev: Option<&Matrix<F>>, next: Option<&Matrix<F>>) -> usize {
        let r = |m: Option<&Matrix<F>>| m.map_or(0, |m| if m.rows() == 0 || m.cols() == 0 { 0 } else { m.rank() });
        dim - r(prev) - r(next)
    }

    /// Matrix of the map induced by a cochain map `h` into `o`.
    pub fn induced(&self, o: &Cohomology<F>, h: &Matrix<F>) -> Matrix<F> {
        o.quot.mul(&h.mul(&self.reps))
    }
}

/// The cochain complex `Hom(P_•, X)`: `C^k = ⊕_g X_{v_g}`.
pub struct HomComplex<F: Field> {
    pub dims: Vec<usize>,
    /// `delta[k]: C^k -> C^{k+1}`.
    pub delta: Vec<Matrix<F>>,
}

impl<F: Field> HomComplex<F> {
    pub fn new(alg: &FDAlgebra<F>, r: &Resolution<F>, x: &Module<F>, acts: &[Matrix<F>]) -> Self {
        let dims: Vec<usize> = r.terms.iter().map(|t| *t.hom_offsets(x).last().unwrap()).collect();
        let delta = r.diffs.iter().map(|d| d.hom_matrix(alg, x, acts)).collect();
        HomComplex { dims, delta }
    }

    pub fn dim(&self, k: usize) -> usize {
        self.dims.get(k).cloned().unwrap_or(0)
    }

    pub fn cohomology(&self, k: usize) -> Cohomology<F> {
        let prev = if k == 0 { None } else { self.delta.get(k - 1) };
        Cohomology::compute(self.dim(k), prev, self.delta.get(k))
    }

    pub fn cohomology_dim(&self, k: usize) -> usize {
        let prev = if k == 0 { None } else { self.delta.get(k - 1) };
        Cohomology::dim_of(self.dim(k), prev, self.delta.get(k))
    }
}

/// Cochain map `Hom(P_k, X) -> Hom(P_k, Y)` induced by `f: X -> Y`.
pub fn push_cochains<F: Field>(p: &ProjSum, f: &RepMap<F>) -> Matrix<F> {
    Matrix::block_diag(&p.gens.iter().map(|&v| f.comps[v].clone()).collect::<Vec<_>>())
}

/// `Ext^k(M, N)`: its dimension and cocycle representatives in `Hom(P_k(M), N)`.
#[derive(Clone, Debug)]
pub struct ExtGroup<F: Field> {
    pub degree: usize,
    pub dim: usize,
    pub cocycles: Matrix<F>,
}

pub fn ext<F: Field>(alg: &FDAlgebra<F>, m: &Module<F>, n: &Module<F>, k: usize) -> ExtGroup<F> {
    let r = min_resolution(alg, m, k + 1);
    let hc = HomComplex::new(alg, &r, n, &n.basis_actions(alg));
    let c = hc.cohomology(k);
    ExtGroup { degree: k, dim: c.dim(), cocycles: c.reps }
}

/// Dimensions of `Ext^k(M, N)` for `k = 0..=top`.
pub fn ext_dims<F: Field>(alg: &FDAlgebra<F>, m: &Module<F>, n: &Module<F>, top: usize) -> Vec<usize> {
    let r = min_resolution(alg, m, top + 1);
    let hc = HomComplex::new(alg, &r, n, &n.basis_actions(alg));
    (0..=top).map(|k| hc.cohomology_dim(k)).collect()
}

/// Largest projective dimension of a simple module, or `ExceedsBound`.
pub fn global_dimension<F: Field>(alg: &FDAlgebra<F>, bound: usize) -> Result<usize> {
    let mut g = 0;
    for i in 0..alg.num_vertices() {
        g = g.max(projective_dimension(alg, &alg.simple(i), bound)?);
    }
    Ok(g)
}

/// Checks exactness and minimality of a resolution.
pub fn check_resolution<F: Field>(alg: &FDAlgebra<F>, r: &Resolution<F>) -> Result<()> {
    let q = alg.quiver();
    for k in 0..r.terms.len() {
        let out = if k == 0 { &r.augmentation } else { &r.diff_maps[k - 1] };
        let pk = r.terms[k].module(alg);
        let rad = pk.radical_basis(q);
        for w in 0..alg.num_vertices() {
            let ker = out.comps[w].kernel_basis();
            let im = match r.diff_maps.get(k) {
                Some(d) => d.comps[w].column_space(),
                None => Matrix::zeros(pk.dims[w], 0),
            };
            if (im.cols() != ker.cols() || !ker.contains_columns(&im))
                && (k + 1 < r.terms.len() || r.complete) {
                    return Err(Error::CheckFailed(format!("resolution not exact at P_{k}, vertex {w}")));
                }
            if !rad[w].contains_columns(&im) {
                return Err(Error::CheckFailed(format!("differential into P_{k} not radical at vertex {w}")));
            }
        }
    }
    if r.augmentation.comps.iter().zip(&r.module.dims).any(|(c, &d)| c.rank() != d) {
        return Err(Error::CheckFailed("augmentation not surjective".into()));
    }
    Ok(())
}

/// `λ_a: I_l -> I_j` for an arrow `a: j -> l`, dual to right multiplication.
pub fn injective_arrow_map<F: Field>(alg: &FDAlgebra<F>, a: usize) -> RepMap<F> {
    let x = alg.arrow_elem(a);
    RepMap { comps: (0..alg.num_vertices()).map(|w| alg.right_mul_matrix(w, &x).transpose()).collect() }
}

/// `Ext^k(DA, X)` as a right module, one cohomology per vertex.
#[derive(Clone, Debug)]
pub struct ExtModule<F: Field> {
    pub degree: usize,
    pub module: Module<F>,
    pub cohom: Vec<Cohomology<F>>,
}

/// Precomputed resolutions of the indecomposable injectives and lifts of the
/// maps between them, for evaluating `Ext^k(DA, -)`.
pub struct TauMinus<'a, F: Field> {
    pub alg: &'a FDAlgebra<F>,
    pub n: usize,
    pub res: Vec<Resolution<F>>,
    /// `lifts[a][k]`: degree `k` part of the lift of `λ_a`.
    pub lifts: Vec<Vec<ProjMap<F>>>,
}

impl<'a, F: Field> TauMinus<'a, F> {
    pub fn new(alg: &'a FDAlgebra<F>, n: usize) -> Result<Self> {
        let nv = alg.num_vertices();
        let inj: Vec<Module<F>> = (0..nv).map(|j| alg.injective(j)).collect();
        let res: Vec<Resolution<F>> = inj.iter().map(|i| min_resolution(alg, i, n + 1)).collect();
        for (j, r) in res.iter().enumerate() {
            if !r.complete || r.length() > n {
                return Err(Error::Precondition(format!("projective dimension of I_{} exceeds {n}", alg.quiver().vertices[j])));
            }
        }
        let q = alg.quiver();
        let mut lifts = vec![];
        for (a, arr) in q.arrows.iter().enumerate() {
            let f = injective_arrow_map(alg, a);
            lifts.push(crate::proj::lift_chain_map(alg, &res[arr.tgt], &res[arr.src], &f, n)?);
        }
        Ok(TauMinus { alg, n, res, lifts })
    }

    /// `Ext^k(DA, X)` with its module structure.
    pub fn ext_module(&self, x: &Module<F>, k: usize) -> ExtModule<F> {
        let acts = x.basis_actions(self.alg);
        let hcs: Vec<HomComplex<F>> = self.res.iter().map(|r| HomComplex::new(self.alg, r, x, &acts)).collect();
        self.ext_module_from(x, &acts, &hcs, k)
    }

    /// `Ext^n(DA, X)` together with the dimension vectors of `Ext^k(DA, X)`
    /// for `k < n`, sharing one set of Hom complexes.
    pub fn ext_module_checked(&self, x: &Module<F>) -> (ExtModule<F>, Vec<Vec<usize>>) {
        let acts = x.basis_actions(self.alg);
        let hcs: Vec<HomComplex<F>> = self.res.iter().map(|r| HomComplex::new(self.alg, r, x, &acts)).collect();
        let below = (0..self.n).map(|k| hcs.iter().map(|h| h.cohomology_dim(k)).collect()).collect();
        (self.ext_module_from(x, &acts, &hcs, self.n), below)
    }

    fn ext_module_from(&self, x: &Module<F>, acts: &[Matrix<F>], hcs: &[HomComplex<F>], k: usize) -> ExtModule<F> {
        let alg = self.alg;
        let cohom: Vec<Cohomology<F>> = hcs.iter().map(|h| h.cohomology(k)).collect();
        let dims: Vec<usize> = cohom.iter().map(|c| c.dim()).collect();
        let mats = alg
            .quiver()
            .arrows
            .iter()
            .enumerate()
            .map(|(a, arr)| {
                let (j, l) = (arr.src, arr.tgt);
                if dims[j] == 0 || dims[l] == 0 || k >= self.lifts[a].len() {
                    return Matrix::zeros(dims[l], dims[j]);
                }
                let h = self.lifts[a][k].hom_matrix(alg, x, acts);
                cohom[j].induced(&cohom[l], &h)
            })
            .collect();
        ExtModule { degree: k, module: Module { dims, mats }, cohom }
    }

    /// Dimension vectors of `Ext^k(DA, X)` for `k = 0..=n`.
    pub fn ext_dims(&self, x: &Module<F>) -> Vec<Vec<usize>> {
        let acts = x.basis_actions(self.alg);
        let hcs: Vec<HomComplex<F>> = self.res.iter().map(|r| HomComplex::new(self.alg, r, x, &acts)).collect();
        (0..=self.n).map(|k| hcs.iter().map(|h| h.cohomology_dim(k)).collect()).collect()
    }

    /// Dimension vectors of `Ext^k(DA, X)` for `k < n`.
    pub fn ext_dims_below_top(&self, x: &Module<F>) -> Vec<Vec<usize>> {
        let acts = x.basis_actions(self.alg);
        let hcs: Vec<HomComplex<F>> = self.res.iter().map(|r| HomComplex::new(self.alg, r, x, &acts)).collect();
        (0..self.n).map(|k| hcs.iter().map(|h| h.cohomology_dim(k)).collect()).collect()
    }

    pub fn apply(&self, x: &Module<F>) -> Module<F> {
        self.ext_module(x, self.n).module
    }

    /// `τ_n^-(f)` for `f: X -> Y`.
    pub fn apply_map(&self, x: &Module<F>, y: &Module<F>, f: &RepMap<F>) -> RepMap<F> {
        self.apply_map_with(&self.ext_module(x, self.n), &self.ext_module(y, self.n), f)
    }

    /// `τ_n^-(f)` from precomputed `Ext^n(DA, X)` and `Ext^n(DA, Y)`.
    pub fn apply_map_with(&self, ex: &ExtModule<F>, ey: &ExtModule<F>, f: &RepMap<F>) -> RepMap<F> {
        let comps = (0..self.alg.num_vertices())
            .map(|j| {
                let p = self.res[j].term(self.n);
                ex.cohom[j].induced(&ey.cohom[j], &push_cochains(&p, f))
            })
            .collect();
        RepMap { comps }
    }
}

/// `τ_n(M) = D Ext^n(M, A)`, with `Ext^n(M, P_i)` at vertex `i`.
pub fn tau_n<F: Field>(alg: &FDAlgebra<F>, m: &Module<F>, n: usize) -> Module<F> {
    let r = min_resolution(alg, m, n + 1);
    tau_n_from(alg, &r, n).0
}

fn tau_n_from<F: Field>(alg: &FDAlgebra<F>, r: &Resolution<F>, n: usize) -> (Module<F>, Vec<Cohomology<F>>) {
    let nv = alg.num_vertices();
    let proj: Vec<Module<F>> = (0..nv).map(|i| alg.projective(i)).collect();
    let cohom: Vec<Cohomology<F>> = proj
        .iter()
        .map(|p| HomComplex::new(alg, r, p, &p.basis_actions(alg)).cohomology(n))
        .collect();
    let dims: Vec<usize> = cohom.iter().map(|c| c.dim()).collect();
    let pk = r.term(n);
    let mats = alg
        .quiver()
        .arrows
        .iter()
        .enumerate()
        .map(|(a, arr)| {
            let (i, j) = (arr.src, arr.tgt);
            let left = ProjMap { src: ProjSum::new(vec![j]), tgt: ProjSum::new(vec![i]), entries: vec![vec![alg.arrow_elem(a)]] };
            let h = push_cochains(&pk, &left.to_repmap(alg));
            cohom[j].induced(&cohom[i], &h).transpose()
        })
        .collect();
    (Module { dims, mats }, cohom)
}

/// `τ_n(f)` for `f: M -> M'`.
pub fn tau_n_map<F: Field>(alg: &FDAlgebra<F>, m: &Module<F>, m2: &Module<F>, f: &RepMap<F>, n: usize) -> Result<RepMap<F>> {
    let r = min_resolution(alg, m, n + 1);
    let r2 = min_resolution(alg, m2, n + 1);
    let (_, c) = tau_n_from(alg, &r, n);
    let (_, c2) = tau_n_from(alg, &r2, n);
    let lift = crate::proj::lift_chain_map(alg, &r, &r2, f, n)?;
    let comps = (0..alg.num_vertices())
        .map(|i| {
            let p = alg.projective(i);
            let h = lift[n].hom_matrix(alg, &p, &p.basis_actions(alg));
            c2[i].induced(&c[i], &h).transpose()
        })
        .collect();
    Ok(RepMap { comps })
}

/// Converts an element of the opposite algebra to the reversed element of `alg`.
fn reverse_elem<F: Field>(alg: &FDAlgebra<F>, op: &FDAlgebra<F>, x: &Elem<F>) -> Elem<F> {
    let mut s = PathSum::zero();
    for (k, c) in x.coords.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let p = &op.basis[op.block[x.src][x.tgt][k]];
        s.add_term(Path { src: p.tgt, tgt: p.src, arrows: p.arrows.iter().rev().cloned().collect() }, c.clone());
    }
    alg.pathsum_elem(&s, x.tgt, x.src)
}

/// Kernel modulo image at a spot of a complex of modules.
pub fn subquotient<F: Field>(alg: &FDAlgebra<F>, m: &Module<F>, out: Option<&RepMap<F>>, inc: Option<&RepMap<F>>) -> Module<F> {
    let q = alg.quiver();
    let ker: Vec<Matrix<F>> = (0..m.dims.len())
        .map(|v| match out {
            Some(f) => f.comps[v].kernel_basis(),
            None => Matrix::identity(m.dims[v]),
        })
        .collect();
    let (sub, _) = m.submodule(q, &ker);
    let im: Vec<Matrix<F>> = (0..m.dims.len())
        .map(|v| match inc {
            Some(g) => ker[v].solve_matrix(&g.comps[v].column_space()).expect("complex"),
            None => Matrix::zeros(ker[v].cols(), 0),
        })
        .collect();
    sub.quotient(q, &im).0
}

/// `τ_n^-(X)` computed as `Ext^n_{A^op}(DX, A^op)` from a resolution of `DX`
/// over the opposite algebra.
pub fn tau_n_inverse_via_opposite<F: Field>(alg: &FDAlgebra<F>, op: &FDAlgebra<F>, x: &Module<F>, n: usize) -> Module<F> {
    let r = min_resolution(op, &x.dual(), n + 1);
    // Hom(Q_k, A^op) is ⊕_{g} P_{v_g} over A; transpose each differential
    let transpose = |k: usize| -> ProjMap<F> {
        let d = &r.diffs[k - 1];
        let entries = d.src.gens.iter().enumerate().map(|(g, _)| (0..d.tgt.len()).map(|h| reverse_elem(alg, op, &d.entries[h][g])).collect()).collect();
        ProjMap { src: d.tgt.clone(), tgt: d.src.clone(), entries }
    };
    let term = r.term(n).module(alg);
    let out = if n < r.diffs.len() { Some(transpose(n + 1).to_repmap(alg)) } else { None };
    let inc = if n >= 1 && n <= r.diffs.len() { Some(transpose(n).to_repmap(alg)) } else { None };
    subquotient(alg, &term, out.as_ref(), inc.as_ref())
}

/// Result of one step of iterating `ν_n^-`.
#[derive(Clone, Debug)]
pub struct NuStep<F: Field> {
    pub step: usize,
    /// `(j, dim vector of H^j)` for the nonzero cohomology in degree `j <= 0`.
    pub cohomology: Vec<(i64, Vec<usize>)>,
    /// The module in degree zero, when the cohomology is concentrated there.
    pub module: Option<Module<F>>,
}

/// Iterates `ν_n^-` up to `steps` times from `X`, stopping at the first step
/// whose cohomology leaves degree zero.
pub fn nakayama_nu_n_inverse<F: Field>(t: &TauMinus<F>, x: &Module<F>, steps: usize) -> Vec<NuStep<F>> {
    let mut out = vec![];
    let mut cur = x.clone();
    for s in 1..=steps {
        let dims = t.ext_dims_below_top(&cur);
        let cohomology: Vec<(i64, Vec<usize>)> = dims
            .iter()
            .enumerate()
            .filter(|(_, d)| d.iter().any(|&x| x > 0))
            .map(|(k, d)| (k as i64 - t.n as i64, d.clone()))
            .collect();
        let concentrated = cohomology.is_empty();
        let module = if concentrated { Some(t.apply(&cur)) } else { None };
        let mut cohomology = cohomology;
        if let Some(m) = module.as_ref().filter(|m| !m.is_zero()) {
            cohomology.push((0, m.dims.clone()));
        }
        let stop = module.is_none();
        out.push(NuStep { step: s, cohomology, module: module.clone() });
        if stop {
            break;
        }
        cur = module.unwrap();
    }
    out
}

/// A bounded-depth certificate: `passed` means no violation up to `depth`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundedCheck {
    pub depth: usize,
    pub passed: bool,
    pub first_failure: Option<usize>,
    /// Dimension vectors of the iterates `τ^{∓i}(X)`, `i = 0..`.
    pub iterates: Vec<Vec<usize>>,
}

/// Bounded check of `X ∈ N^-`: every iterate `τ_n^{-i}(X)` has
/// `Ext^k(DA, -) = 0` for `k < n`.
pub fn in_n_minus<F: Field>(t: &TauMinus<F>, x: &Module<F>, depth: usize) -> BoundedCheck {
    let steps = nakayama_nu_n_inverse(t, x, depth);
    let mut iterates = vec![x.dims.clone()];
    let mut first_failure = None;
    for s in &steps {
        match &s.module {
            Some(m) => iterates.push(m.dims.clone()),
            None => {
                first_failure = Some(s.step);
                break;
            }
        }
    }
    BoundedCheck { depth, passed: first_failure.is_none(), first_failure, iterates }
}

/// Bounded check of `X ∈ N^+`: every iterate `τ_n^i(X)` has `Ext^k(-, A) = 0`
/// for `k < n`.
pub fn in_n_plus<F: Field>(alg: &FDAlgebra<F>, x: &Module<F>, n: usize, depth: usize) -> BoundedCheck {
    let nv = alg.num_vertices();
    let proj: Vec<Module<F>> = (0..nv).map(|i| alg.projective(i)).collect();
    let a = Module::sum_of(alg.quiver(), &proj);
    let mut cur = x.clone();
    let mut iterates = vec![x.dims.clone()];
    let mut first_failure = None;
    for s in 1..=depth {
        let d = ext_dims(alg, &cur, &a, n);
        if d[..n].iter().any(|&k| k > 0) {
            first_failure = Some(s);
            break;
        }
        cur = tau_n(alg, &cur, n);
        iterates.push(cur.dims.clone());
    }
    BoundedCheck { depth, passed: first_failure.is_none(), first_failure, iterates }
}

/// `ν` applied to a map of projectives: the induced map of injectives.
pub fn nakayama_on_projmap<F: Field>(alg: &FDAlgebra<F>, d: &ProjMap<F>) -> RepMap<F> {
    let nv = alg.num_vertices();
    let off = |p: &ProjSum, w: usize| -> Vec<usize> {
        let mut o = vec![0];
        for &g in &p.gens {
            o.push(o.last().unwrap() + alg.block_dim(w, g));
        }
        o
    };
    let comps = (0..nv)
        .map(|w| {
            let so = off(&d.src, w);
            let to = off(&d.tgt, w);
            let mut m = Matrix::zeros(*to.last().unwrap(), *so.last().unwrap());
            for (h, row) in d.entries.iter().enumerate() {
                for (g, x) in row.iter().enumerate() {
                    if alg.block_dim(w, d.tgt.gens[h]) == 0 || alg.block_dim(w, d.src.gens[g]) == 0 {
                        continue;
                    }
                    m.set_block(to[h], so[g], &alg.right_mul_matrix(w, x).transpose());
                }
            }
            m
        })
        .collect();
    RepMap { comps }
}

pub fn injective_sum<F: Field>(alg: &FDAlgebra<F>, p: &ProjSum) -> Module<F> {
    Module::sum_of(alg.quiver(), &p.gens.iter().map(|&g| alg.injective(g)).collect::<Vec<_>>())
}

/// Matrix of `φ ↦ post ∘ φ` from `Hom(Y, N)` to `Hom(Y, N')` in the given bases.
pub fn postcompose_matrix<F: Field>(src: &[RepMap<F>], tgt: &[RepMap<F>], post: &RepMap<F>, tgt_len: usize) -> Matrix<F> {
    let b = Matrix::from_columns(tgt_len, &tgt.iter().map(RepMap::flat).collect::<Vec<_>>());
    let imgs = Matrix::from_columns(tgt_len, &src.iter().map(|f| post.after(f).flat()).collect::<Vec<_>>());
    b.solve_matrix(&imgs).expect("image lies in the Hom space")
}

/// Compares `dim Ext^k(X, Y)` with `dim Hom_D(Y, νX[-k])`, the latter from the
/// complex of injectives `ν P_•(X)`.
pub fn serre_duality_check<F: Field>(alg: &FDAlgebra<F>, x: &Module<F>, y: &Module<F>, k: usize) -> (usize, usize) {
    let lhs = ext(alg, x, y, k).dim;
    let r = min_resolution(alg, x, k + 2);
    let nu_term = |j: usize| injective_sum(alg, &r.term(j));
    let flat_len = |n: &Module<F>| -> usize { y.dims.iter().zip(&n.dims).map(|(a, b)| a * b).sum() };
    let nk = nu_term(k);
    let hk = hom_space(alg, y, &nk);
    // outgoing: Hom(Y, ν P_k) -> Hom(Y, ν P_{k-1})
    let out = if k >= 1 && k <= r.diffs.len() {
        let nk1 = nu_term(k - 1);
        let h1 = hom_space(alg, y, &nk1);
        Some(postcompose_matrix(&hk, &h1, &nakayama_on_projmap(alg, &r.diffs[k - 1]), flat_len(&nk1)))
    } else {
        None
    };
    let inc = if k < r.diffs.len() {
        let np = nu_term(k + 1);
        let hp = hom_space(alg, y, &np);
        Some(postcompose_matrix(&hp, &hk, &nakayama_on_projmap(alg, &r.diffs[k]), flat_len(&nk)))
    } else {
        None
    };
    let rhs = Cohomology::compute(hk.len(), inc.as_ref(), out.as_ref()).dim();
    (lhs, rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{Fp, Rational};
    use crate::presalg::{as_fd_algebra, Presentation};
    use crate::quiver::{parse_path_sum, Quiver};
    use crate::repmod::{decompose, hom_space_direct, isomorphic};
    use proptest::prelude::*;

    type Q = Rational;

    fn a2() -> FDAlgebra<Q> {
        as_fd_algebra(&Presentation::hereditary(Quiver::new(["1", "2"]).with_arrows(&[("alpha", "2", "1")])), 20).unwrap()
    }

    fn ex1<F: Field>() -> FDAlgebra<F> {
        let q = Quiver::new(["1", "2", "3", "4"]).with_arrows(&[("a", "3", "4"), ("b", "4", "1"), ("c", "3", "2"), ("d", "2", "1")]);
        as_fd_algebra(&Presentation::hereditary(q), 20).unwrap()
    }

    /// Truncated Jacobian algebra of the cyclic quiver with doubled arrows.
    fn ex2_lambda<F: Field>() -> FDAlgebra<F> {
        let q = Quiver::new(["1", "2", "3", "4"]).with_arrows(&[
            ("x1", "2", "1"),
            ("y1", "2", "1"),
            ("x2", "3", "2"),
            ("y2", "3", "2"),
            ("x3", "4", "3"),
            ("y3", "4", "3"),
        ]);
        let rels = ["x3*x2*x1 - y3*x2*y1", "x3*y2*x1 - y3*y2*y1"].iter().map(|s| parse_path_sum::<F>(&q, s).unwrap()).collect();
        as_fd_algebra(&Presentation::new(q, rels), 20).unwrap()
    }

    fn sum_of_projectives<F: Field>(a: &FDAlgebra<F>) -> Module<F> {
        Module::sum_of(a.quiver(), &(0..a.num_vertices()).map(|i| a.projective(i)).collect::<Vec<_>>())
    }

    #[test]
    fn ext_zero_is_hom() {
        let a = ex1::<Q>();
        for i in 0..4 {
            for j in 0..4 {
                let (m, n) = (a.injective(i), a.projective(j));
                assert_eq!(ext(&a, &m, &n, 0).dim, hom_space_direct(a.quiver(), &m, &n).len());
            }
        }
    }

    #[test]
    fn ext_from_projective_vanishes() {
        let a = ex1::<Q>();
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(ext(&a, &a.projective(i), &a.simple(j), 1).dim, 0);
            }
        }
    }

    #[test]
    fn a2_ext_one() {
        let a = a2();
        assert_eq!(ext(&a, &a.simple(1), &a.simple(0), 1).dim, 1);
        assert_eq!(ext(&a, &a.simple(0), &a.simple(1), 1).dim, 0);
    }

    #[test]
    fn global_dimensions() {
        let ss = as_fd_algebra(&Presentation::<Q>::hereditary(Quiver::new(["1", "2"])), 3).unwrap();
        assert_eq!(global_dimension(&ss, 5), Ok(0));
        assert_eq!(global_dimension(&a2(), 5), Ok(1));
        assert_eq!(global_dimension(&ex1::<Q>(), 5), Ok(1));
        assert_eq!(global_dimension(&ex2_lambda::<Q>(), 5), Ok(2));
        assert_eq!(global_dimension(&ex2_lambda::<Q>(), 1), Err(Error::ExceedsBound(1)));
    }

    #[test]
    fn resolutions_are_exact_and_minimal() {
        let a = ex2_lambda::<Q>();
        for i in 0..4 {
            for m in [a.simple(i), a.injective(i)] {
                check_resolution(&a, &min_resolution(&a, &m, 4)).unwrap();
            }
        }
    }

    #[test]
    fn a2_tau_inverse_of_s1() {
        let a = a2();
        let t = TauMinus::new(&a, 1).unwrap();
        let m = t.apply(&a.simple(0));
        assert!(isomorphic(&a, &m, &a.simple(1)));
        assert!(t.apply(&a.simple(1)).is_zero());
        assert!(isomorphic(&a, &tau_n(&a, &a.simple(1), 1), &a.simple(0)));
    }

    #[test]
    fn a2_nu_inverse_escapes_at_step_two() {
        let a = a2();
        let t = TauMinus::new(&a, 1).unwrap();
        let steps = nakayama_nu_n_inverse(&t, &a.projective(0), 5);
        assert_eq!(steps.len(), 2);
        assert!(isomorphic(&a, steps[0].module.as_ref().unwrap(), &a.simple(1)));
        assert!(steps[1].module.is_none());
        assert_eq!(steps[1].cohomology[0].0, -1);
        let c = in_n_minus(&t, &sum_of_projectives(&a), 8);
        assert!(!c.passed);
        // P_2 = I_1 is injective, so Hom(DA, Λ) is nonzero already
        assert_eq!(c.first_failure, Some(1));
    }

    #[test]
    fn zero_module_in_both_classes() {
        let a = ex1::<Q>();
        let t = TauMinus::new(&a, 1).unwrap();
        let z = Module::zero(a.quiver());
        assert!(in_n_minus(&t, &z, 8).passed);
        assert!(in_n_plus(&a, &z, 1, 8).passed);
        assert!(nakayama_nu_n_inverse(&t, &z, 0).is_empty());
    }

    #[test]
    fn ex1_tau_inverse_of_sink_simple() {
        let a = ex1::<Q>();
        let t = TauMinus::new(&a, 1).unwrap();
        let m = t.apply(&a.simple(0));
        assert_eq!(m.dims, vec![1, 1, 0, 1]);
        let r = min_resolution(&a, &m, 3);
        assert!(r.complete);
        assert_eq!(r.length(), 1);
        let mut p0 = r.terms[0].gens.clone();
        p0.sort();
        assert_eq!(p0, vec![1, 3]);
        assert_eq!(r.terms[1].gens, vec![0]);
    }

    #[test]
    fn ex1_is_one_representation_infinite_to_depth_eight() {
        let a = ex1::<Q>();
        let t = TauMinus::new(&a, 1).unwrap();
        for i in 0..4 {
            let c = in_n_minus(&t, &a.projective(i), 8);
            assert!(c.passed, "P_{} fails at {:?}", i + 1, c.first_failure);
            assert_eq!(c.iterates.len(), 9);
        }
        for i in 0..4 {
            assert!(in_n_plus(&a, &a.injective(i), 1, 8).passed);
        }
    }

    #[test]
    fn tau_inverse_routes_agree() {
        let a = ex1::<Q>();
        let op = a.opposite().unwrap();
        let t = TauMinus::new(&a, 1).unwrap();
        let mut x = a.projective(2);
        for _ in 0..4 {
            let y = tau_n_inverse_via_opposite(&a, &op, &x, 1);
            let z = t.apply(&x);
            assert!(isomorphic(&a, &y, &z));
            x = z;
        }
    }

    #[test]
    fn tau_inverse_on_identity() {
        let a = ex1::<Q>();
        let t = TauMinus::new(&a, 1).unwrap();
        let x = a.projective(2);
        let tx = t.apply(&x);
        assert_eq!(t.apply_map(&x, &x, &RepMap::identity(&x)), RepMap::identity(&tx));
        assert_eq!(tau_n_map(&a, &tx, &tx, &RepMap::identity(&tx), 1).unwrap(), RepMap::identity(&tau_n(&a, &tx, 1)));
    }

    #[test]
    fn tau_inverse_map_is_a_module_map() {
        let a = ex1::<Q>();
        let t = TauMinus::new(&a, 1).unwrap();
        let (x, y) = (a.projective(0), a.projective(2));
        let (tx, ty) = (t.apply(&x), t.apply(&y));
        for f in hom_space(&a, &x, &y) {
            let g = t.apply_map(&x, &y, &f);
            assert!(g.commutes(a.quiver(), &tx, &ty));
            assert!(!g.is_zero());
        }
    }

    #[test]
    fn tau_and_tau_inverse_are_inverse_on_nonprojectives() {
        let a = ex1::<Q>();
        let t = TauMinus::new(&a, 1).unwrap();
        let x = t.apply(&a.projective(1));
        let back = tau_n(&a, &x, 1);
        assert!(isomorphic(&a, &back, &a.projective(1)));
    }

    #[test]
    fn ex1_injectives_tau_inverse_consistent() {
        // τ^-(DA) through both the iteration and the direct functor
        let a = ex1::<Q>();
        let t = TauMinus::new(&a, 1).unwrap();
        for i in 0..4 {
            let inj = a.injective(i);
            let s = nakayama_nu_n_inverse(&t, &inj, 1);
            if let Some(m) = &s[0].module {
                assert_eq!(m, &t.apply(&inj));
            }
        }
    }

    #[test]
    fn ex2_is_two_representation_infinite_to_depth_three() {
        let a = ex2_lambda::<Fp<2147483647>>();
        let t = TauMinus::new(&a, 2).unwrap();
        for i in 0..4 {
            let c = in_n_minus(&t, &a.projective(i), 3);
            assert!(c.passed, "P_{} fails at {:?}", i + 1, c.first_failure);
        }
    }

    #[test]
    fn serre_duality_examples() {
        let a = ex1::<Q>();
        let l = sum_of_projectives(&a);
        let (x, y) = serre_duality_check(&a, &l, &l, 0);
        assert_eq!(x, y);
        assert_eq!(x, a.dim());
        let (x, y) = serre_duality_check(&a, &a.projective(2), &a.simple(0), 1);
        assert_eq!(x, y);
    }

    #[test]
    fn ext_above_global_dimension_vanishes() {
        let a = ex2_lambda::<Q>();
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(ext(&a, &a.injective(i), &a.simple(j), 3).dim, 0);
            }
        }
    }

    #[test]
    fn summands_of_tau_inverse_are_indecomposable() {
        let a = ex1::<Q>();
        let t = TauMinus::new(&a, 1).unwrap();
        let m = t.apply(&t.apply(&a.projective(2)));
        assert_eq!(decompose(&a, &m).unwrap().len(), 1);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(12))]

        #[test]
        fn serre_duality_on_ex2(i in 0usize..4, j in 0usize..4, k in 0usize..3, kinds in (0usize..3, 0usize..3)) {
            let a = ex2_lambda::<Q>();
            let pick = |t: usize, v: usize| match t { 0 => a.simple(v), 1 => a.projective(v), _ => a.injective(v) };
            let (x, y) = (pick(kinds.0, i), pick(kinds.1, j));
            let (l, r) = serre_duality_check(&a, &x, &y, k);
            prop_assert_eq!(l, r);
        }

        #[test]
        fn ext_vanishes_above_two(i in 0usize..4, j in 0usize..4) {
            let a = ex2_lambda::<Q>();
            prop_assert_eq!(ext(&a, &a.simple(i), &a.injective(j), 3).dim, 0);
        }
    }
}

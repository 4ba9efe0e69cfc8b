//! Direct sums of indecomposable projectives, maps between them given by
//! algebra elements, minimal projective resolutions and lifts of maps.

use crate::error::{Error, Result};
use crate::exactla::{Field, Matrix};
use crate::presalg::{Elem, FDAlgebra};
use crate::repmod::{Module, RepMap};

/// `⊕_g P_{gens[g]}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct ProjSum {
    pub gens: Vec<usize>,
}

impl ProjSum {
    pub fn new(gens: Vec<usize>) -> Self {
        ProjSum { gens }
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    /// Multiplicity of each vertex.
    pub fn multiplicities(&self, n: usize) -> Vec<usize> {
        let mut m = vec![0; n];
        for &g in &self.gens {
            m[g] += 1;
        }
        m
    }

    /// `off[w][g]`: where generator `g`'s block starts in the space at `w`.
    pub fn offsets<F: Field>(&self, alg: &FDAlgebra<F>) -> Vec<Vec<usize>> {
        (0..alg.num_vertices())
            .map(|w| {
                let mut o = vec![0];
                for &g in &self.gens {
                    o.push(o.last().unwrap() + alg.block_dim(g, w));
                }
                o
            })
            .collect()
    }

    pub fn dims<F: Field>(&self, alg: &FDAlgebra<F>) -> Vec<usize> {
        (0..alg.num_vertices()).map(|w| self.gens.iter().map(|&g| alg.block_dim(g, w)).sum()).collect()
    }

    pub fn module<F: Field>(&self, alg: &FDAlgebra<F>) -> Module<F> {
        let ps: Vec<Module<F>> = self.gens.iter().map(|&g| alg.projective(g)).collect();
        Module::sum_of(alg.quiver(), &ps)
    }

    /// Hom into `X` is `⊕_g X_{gens[g]}`; offsets of that space.
    pub fn hom_offsets<F: Field>(&self, x: &Module<F>) -> Vec<usize> {
        let mut o = vec![0];
        for &g in &self.gens {
            o.push(o.last().unwrap() + x.dims[g]);
        }
        o
    }

    /// Splits a vector of the space at `w` into per-generator elements.
    pub fn split<F: Field>(&self, alg: &FDAlgebra<F>, w: usize, v: &[F]) -> Vec<Elem<F>> {
        let mut k = 0;
        self.gens
            .iter()
            .map(|&g| {
                let d = alg.block_dim(g, w);
                let e = Elem { src: g, tgt: w, coords: v[k..k + d].to_vec() };
                k += d;
                e
            })
            .collect()
    }
}

/// A map `⊕_g P_{src_g} -> ⊕_h P_{tgt_h}`; `entries[h][g]` lies in
/// `e_{tgt_h} A e_{src_g}` and is the image of generator `g` in summand `h`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ProjMap<F: Field> {
    pub src: ProjSum,
    pub tgt: ProjSum,
    pub entries: Vec<Vec<Elem<F>>>,
}

impl<F: Field> ProjMap<F> {
    pub fn zero(alg: &FDAlgebra<F>, src: &ProjSum, tgt: &ProjSum) -> Self {
        let entries = tgt.gens.iter().map(|&h| src.gens.iter().map(|&g| alg.zero_elem(h, g)).collect()).collect();
        ProjMap { src: src.clone(), tgt: tgt.clone(), entries }
    }

    pub fn identity(alg: &FDAlgebra<F>, p: &ProjSum) -> Self {
        let mut m = Self::zero(alg, p, p);
        for (g, &v) in p.gens.iter().enumerate() {
            m.entries[g][g] = alg.idempotent(v);
        }
        m
    }

    /// From the images of the generators, given as vectors of the target space.
    pub fn from_images(alg: &FDAlgebra<F>, src: &ProjSum, tgt: &ProjSum, imgs: &[Vec<F>]) -> Self {
        let mut m = Self::zero(alg, src, tgt);
        for (g, &v) in src.gens.iter().enumerate() {
            for (h, e) in tgt.split(alg, v, &imgs[g]).into_iter().enumerate() {
                m.entries[h][g] = e;
            }
        }
        m
    }

    /// Image of generator `g` as a vector of the target space at `src_g`.
    pub fn image_of(&self, g: usize) -> Vec<F> {
        self.entries.iter().flat_map(|row| row[g].coords.iter().cloned()).collect()
    }

    /// `self ∘ o`.
    pub fn after(&self, alg: &FDAlgebra<F>, o: &ProjMap<F>) -> ProjMap<F> {
        assert_eq!(self.src, o.tgt);
        let mut m = Self::zero(alg, &o.src, &self.tgt);
        for c in 0..self.tgt.len() {
            for a in 0..o.src.len() {
                let mut acc = alg.zero_elem(self.tgt.gens[c], o.src.gens[a]);
                for b in 0..self.src.len() {
                    let p = alg.mul(&self.entries[c][b], &o.entries[b][a]);
                    for (x, y) in acc.coords.iter_mut().zip(&p.coords) {
                        *x = x.add(y);
                    }
                }
                m.entries[c][a] = acc;
            }
        }
        m
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().all(|e| e.coords.iter().all(|c| c.is_zero()))
    }

    /// The vertexwise matrices.
    pub fn to_repmap(&self, alg: &FDAlgebra<F>) -> RepMap<F> {
        let so = self.src.offsets(alg);
        let to = self.tgt.offsets(alg);
        let comps = (0..alg.num_vertices())
            .map(|w| {
                let mut m = Matrix::zeros(*to[w].last().unwrap(), *so[w].last().unwrap());
                for (h, row) in self.entries.iter().enumerate() {
                    for (g, x) in row.iter().enumerate() {
                        if x.coords.iter().all(|c| c.is_zero()) || alg.block_dim(self.src.gens[g], w) == 0 {
                            continue;
                        }
                        m.set_block(to[w][h], so[w][g], &alg.left_mul_matrix(x, w));
                    }
                }
                m
            })
            .collect();
        RepMap { comps }
    }

    /// `Hom(self, X): Hom(tgt, X) -> Hom(src, X)` on `⊕ X_{gen}` coordinates.
    pub fn hom_matrix(&self, alg: &FDAlgebra<F>, x: &Module<F>, acts: &[Matrix<F>]) -> Matrix<F> {
        let so = self.src.hom_offsets(x);
        let to = self.tgt.hom_offsets(x);
        let mut m = Matrix::zeros(*so.last().unwrap(), *to.last().unwrap());
        for (h, row) in self.entries.iter().enumerate() {
            for (g, e) in row.iter().enumerate() {
                if e.coords.iter().all(|c| c.is_zero()) {
                    continue;
                }
                m.set_block(so[g], to[h], &x.elem_action(alg, acts, e));
            }
        }
        m
    }
}

/// The map `⊕_g P_{v_g} -> X` sending generator `g` to `imgs[g]`.
pub fn map_from_projectives<F: Field>(alg: &FDAlgebra<F>, p: &ProjSum, x: &Module<F>, acts: &[Matrix<F>], imgs: &[Vec<F>]) -> RepMap<F> {
    let comps = (0..alg.num_vertices())
        .map(|w| {
            let mut cols: Vec<Vec<F>> = vec![];
            for (g, &v) in p.gens.iter().enumerate() {
                for &b in &alg.block[v][w] {
                    cols.push(acts[b].mul_vec(&imgs[g]));
                }
            }
            Matrix::from_columns(x.dims[w], &cols)
        })
        .collect();
    RepMap { comps }
}

/// Generators of a projective cover: vertex and vector per generator.
#[derive(Clone, Debug)]
pub struct Cover<F: Field> {
    pub gens: ProjSum,
    pub images: Vec<Vec<F>>,
}

impl<F: Field> Cover<F> {
    pub fn as_repmap(&self, alg: &FDAlgebra<F>, m: &Module<F>) -> RepMap<F> {
        map_from_projectives(alg, &self.gens, m, &m.basis_actions(alg), &self.images)
    }
}

/// Columns of `cand` extending `base` to a basis of `span(base, cand)`.
pub fn complement_columns<F: Field>(base: &Matrix<F>, cand: &Matrix<F>) -> Vec<Vec<F>> {
    if cand.cols() == 0 {
        return vec![];
    }
    let b = base.cols();
    let pivots = base.hstack(cand).rref().pivots;
    pivots.into_iter().filter(|&p| p >= b).map(|p| cand.column(p - b)).collect()
}

/// Generators of a submodule `U ⊆ M` given vertexwise by column bases, lifting
/// a basis of its top.
fn top_generators<F: Field>(alg: &FDAlgebra<F>, m: &Module<F>, sub: &[Matrix<F>]) -> (ProjSum, Vec<Vec<F>>) {
    let q = alg.quiver();
    let mut gens = vec![];
    let mut imgs = vec![];
    for v in 0..alg.num_vertices() {
        let mut rad = Matrix::zeros(m.dims[v], 0);
        for a in q.in_arrows(v) {
            rad = rad.hstack(&m.mats[a].mul(&sub[q.arrows[a].src]));
        }
        for c in complement_columns(&rad, &sub[v]) {
            gens.push(v);
            imgs.push(c);
        }
    }
    (ProjSum::new(gens), imgs)
}

/// Projective cover of `M` lifting a basis of its top.
pub fn top_cover<F: Field>(alg: &FDAlgebra<F>, m: &Module<F>) -> Cover<F> {
    let all: Vec<Matrix<F>> = m.dims.iter().map(|&d| Matrix::identity(d)).collect();
    let (gens, images) = top_generators(alg, m, &all);
    Cover { gens, images }
}

/// A minimal projective resolution `... -> P_1 -> P_0 -> M`.
#[derive(Clone, Debug)]
pub struct Resolution<F: Field> {
    pub module: Module<F>,
    pub terms: Vec<ProjSum>,
    /// `diffs[k]` is `d_{k+1}: P_{k+1} -> P_k`.
    pub diffs: Vec<ProjMap<F>>,
    pub cover: Cover<F>,
    pub augmentation: RepMap<F>,
    /// Vertexwise matrices of each differential.
    pub diff_maps: Vec<RepMap<F>>,
    /// Whether the last syzygy was zero, so the resolution is complete.
    pub complete: bool,
}

impl<F: Field> Resolution<F> {
    pub fn length(&self) -> usize {
        self.terms.len().saturating_sub(1)
    }

    /// `P_k`, empty beyond the computed range.
    pub fn term(&self, k: usize) -> ProjSum {
        self.terms.get(k).cloned().unwrap_or_default()
    }

    /// `d_k: P_k -> P_{k-1}` for `k >= 1`, zero where absent.
    pub fn diff(&self, alg: &FDAlgebra<F>, k: usize) -> ProjMap<F> {
        match self.diffs.get(k - 1) {
            Some(d) => d.clone(),
            None => ProjMap::zero(alg, &self.term(k), &self.term(k - 1)),
        }
    }

    /// Vertexwise matrix of `d_k` at `w`, or of the augmentation for `k = 0`.
    fn diff_at(&self, k: usize, w: usize) -> &Matrix<F> {
        if k == 0 {
            &self.augmentation.comps[w]
        } else {
            &self.diff_maps[k - 1].comps[w]
        }
    }
}

/// Minimal projective resolution truncated after `P_max_len`.
pub fn min_resolution<F: Field>(alg: &FDAlgebra<F>, m: &Module<F>, max_len: usize) -> Resolution<F> {
    let cover = top_cover(alg, m);
    let augmentation = cover.as_repmap(alg, m);
    let mut terms = vec![cover.gens.clone()];
    let mut diffs = vec![];
    let mut diff_maps = vec![];
    let mut last = augmentation.clone();
    let mut complete = false;
    loop {
        let k = terms.len() - 1;
        let p = terms[k].module(alg);
        let ker: Vec<Matrix<F>> = last.comps.iter().map(|c| c.kernel_basis()).collect();
        if ker.iter().all(|b| b.cols() == 0) {
            complete = true;
            break;
        }
        if k >= max_len {
            break;
        }
        let (gens, imgs) = top_generators(alg, &p, &ker);
        let d = ProjMap::from_images(alg, &gens, &terms[k], &imgs);
        let dm = d.to_repmap(alg);
        terms.push(gens);
        diffs.push(d);
        diff_maps.push(dm.clone());
        last = dm;
    }
    Resolution { module: m.clone(), terms, diffs, cover, augmentation, diff_maps, complete }
}

/// Projective dimension, or `ExceedsBound`.
pub fn projective_dimension<F: Field>(alg: &FDAlgebra<F>, m: &Module<F>, bound: usize) -> Result<usize> {
    let r = min_resolution(alg, m, bound);
    if r.complete {
        Ok(r.length())
    } else {
        Err(Error::ExceedsBound(bound))
    }
}

/// Lifts `f: M -> M'` to a chain map `P_k -> P'_k` for `k = 0..=upto`.
pub fn lift_chain_map<F: Field>(alg: &FDAlgebra<F>, r: &Resolution<F>, r2: &Resolution<F>, f: &RepMap<F>, upto: usize) -> Result<Vec<ProjMap<F>>> {
    let mut out: Vec<ProjMap<F>> = vec![];
    let mut prev: Option<RepMap<F>> = None;
    for k in 0..=upto {
        let src = r.term(k);
        let tgt = r2.term(k);
        if src.is_empty() || tgt.is_empty() {
            out.push(ProjMap::zero(alg, &src, &tgt));
            prev = Some(out.last().unwrap().to_repmap(alg));
            continue;
        }
        let mut imgs = vec![];
        for (g, &v) in src.gens.iter().enumerate() {
            let target = if k == 0 {
                f.comps[v].mul_vec(&r.cover.images[g])
            } else {
                let z = r.diffs[k - 1].image_of(g);
                prev.as_ref().unwrap().comps[v].mul_vec(&z)
            };
            let y = r2
                .diff_at(k, v)
                .solve(&target)
                .ok_or_else(|| Error::CheckFailed(format!("no lift in degree {k}")))?;
            imgs.push(y);
        }
        let fk = ProjMap::from_images(alg, &src, &tgt, &imgs);
        prev = Some(fk.to_repmap(alg));
        out.push(fk);
    }
    Ok(out)
}

/// A module `M` with a projective presentation, for computing `Hom(M, -)`.
pub struct Presented<F: Field> {
    pub module: Module<F>,
    pub cover: Cover<F>,
    pub relations: ProjMap<F>,
}

impl<F: Field> Presented<F> {
    pub fn new(alg: &FDAlgebra<F>, m: &Module<F>) -> Self {
        let r = min_resolution(alg, m, 1);
        let relations = r.diff(alg, 1);
        Presented { module: m.clone(), cover: r.cover, relations }
    }

    /// Basis of `Hom(M, N)`.
    pub fn hom_basis(&self, alg: &FDAlgebra<F>, n: &Module<F>) -> Vec<RepMap<F>> {
        let acts = n.basis_actions(alg);
        let h = self.relations.hom_matrix(alg, n, &acts);
        let k = if h.rows() == 0 { Matrix::identity(h.cols()) } else { h.kernel_basis() };
        let off = self.cover.gens.hom_offsets(n);
        let aug = self.cover.as_repmap(alg, &self.module);
        let rinv: Vec<Matrix<F>> = aug
            .comps
            .iter()
            .map(|c| c.solve_matrix(&Matrix::identity(c.rows())).expect("cover is surjective"))
            .collect();
        (0..k.cols())
            .map(|j| {
                let col = k.column(j);
                let imgs: Vec<Vec<F>> = (0..self.cover.gens.len()).map(|g| col[off[g]..off[g + 1]].to_vec()).collect();
                let fp = map_from_projectives(alg, &self.cover.gens, n, &acts, &imgs);
                RepMap { comps: fp.comps.iter().zip(&rinv).map(|(a, b)| a.mul(b)).collect() }
            })
            .collect()
    }
}

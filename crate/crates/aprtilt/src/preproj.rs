//! Degree truncations of the `(n+1)`-preprojective algebra
//! `Λ̂ = T_Λ Ext^n(DΛ, Λ)` and the graded constructions built on it.
//!
//! The degree `i` piece is realized as `τ_n^{-i}(Λ)`, with `e_j Λ̂_i` the
//! module `τ_n^{-i}(P_j)`.  An element `x ∈ e_j Λ̂_s e_v` is the same as a map
//! `x̃: P_v -> τ_n^{-s}(P_j)`, and for `y ∈ e_v Λ̂_t e_w` the product is
//! `x·y = τ_n^{-t}(x̃)(y)`.  Graded Hom spaces over `Λ̂` are computed through
//! `Hom_Λ̂(X̂, Ŷ)_i = Hom_Λ(X, τ_n^{-i}Y)`.

use std::cell::OnceCell;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::apr::{AprContext, EndoPresentation};
use crate::error::{Error, Result};
use crate::exactla::{Field, Matrix};
use crate::homalg::{ext_dims, global_dimension, ExtModule, TauMinus};
use crate::presalg::FDAlgebra;
use crate::proj::{complement_columns, map_from_projectives, ProjSum};
use crate::repmod::{hom_space, image, Module, RepMap};

/// The iterates `X, τ_n^-(X), ..., τ_n^{-len}(X)` with the `Ext^n(DA, -)` data
/// needed to push maps between iterates forward.
#[derive(Clone, Debug)]
pub struct Orbit<F: Field> {
    pub mods: Vec<Module<F>>,
    ext: Vec<ExtModule<F>>,
    acts: Vec<OnceCell<Vec<Matrix<F>>>>,
}

impl<F: Field> Orbit<F> {
    /// Fails when some iterate before `len` has `Ext^k(DA, -) ≠ 0` for `k < n`.
    pub fn new(t: &TauMinus<F>, x: &Module<F>, len: usize) -> Result<Self> {
        let mut o = Orbit { mods: vec![x.clone()], ext: vec![], acts: vec![OnceCell::new()] };
        o.extend_to(t, len)?;
        Ok(o)
    }

    pub fn extend_to(&mut self, t: &TauMinus<F>, len: usize) -> Result<()> {
        while self.mods.len() <= len {
            let s = self.mods.len() - 1;
            let (e, below) = t.ext_module_checked(&self.mods[s]);
            if below.iter().flatten().any(|&d| d > 0) {
                return Err(Error::Precondition(format!("not in N^-: τ_n^-{s}(X) has nonzero Ext^k(DA, -) for some k < n")));
            }
            self.mods.push(e.module.clone());
            self.ext.push(e);
            self.acts.push(OnceCell::new());
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.mods.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.mods.iter().all(|m| m.is_zero())
    }

    pub fn acts(&self, alg: &FDAlgebra<F>, i: usize) -> &[Matrix<F>] {
        self.acts[i].get_or_init(|| self.mods[i].basis_actions(alg))
    }

    /// `τ_n^-(f)` for `f: mods[a] -> to.mods[b]`.
    pub fn shift(&self, t: &TauMinus<F>, a: usize, to: &Orbit<F>, b: usize, f: &RepMap<F>) -> RepMap<F> {
        t.apply_map_with(&self.ext[a], &to.ext[b], f)
    }

    /// `τ_n^{-k}(f)` for `f: mods[a] -> to.mods[b]`.
    pub fn shift_by(&self, t: &TauMinus<F>, a: usize, to: &Orbit<F>, b: usize, f: &RepMap<F>, k: usize) -> RepMap<F> {
        let mut g = f.clone();
        for e in 0..k {
            g = self.shift(t, a + e, to, b + e, &g);
        }
        g
    }
}

/// `Λ̂_0, ..., Λ̂_d`, one orbit per indecomposable projective.
pub struct GradedTruncation<'a, F: Field> {
    pub tau: TauMinus<'a, F>,
    pub bound: usize,
    /// `orbits[j].mods[i]` is `e_j Λ̂_i`.
    pub orbits: Vec<Orbit<F>>,
}

pub fn preprojective_truncation<F: Field>(alg: &FDAlgebra<F>, n: usize, d: usize) -> Result<GradedTruncation<'_, F>> {
    if n == 0 {
        return Err(Error::Precondition("n must be positive".into()));
    }
    if global_dimension(alg, n).is_err() {
        return Err(Error::Precondition(format!("global dimension exceeds {n}")));
    }
    let tau = TauMinus::new(alg, n)?;
    let orbits = (0..alg.num_vertices()).map(|j| Orbit::new(&tau, &alg.projective(j), d)).collect::<Result<Vec<_>>>()?;
    Ok(GradedTruncation { tau, bound: d, orbits })
}

impl<'a, F: Field> GradedTruncation<'a, F> {
    pub fn algebra(&self) -> &'a FDAlgebra<F> {
        self.tau.alg
    }

    pub fn n(&self) -> usize {
        self.tau.n
    }

    /// `dim e_a Λ̂_i e_b`.
    pub fn block_dim(&self, i: usize, a: usize, b: usize) -> usize {
        self.orbits[a].mods[i].dims[b]
    }

    pub fn block_dims(&self, i: usize) -> Vec<Vec<usize>> {
        self.orbits.iter().map(|o| o.mods[i].dims.clone()).collect()
    }

    /// `dim Λ̂_i` for `i = 0..=d`.
    pub fn dims(&self) -> Vec<usize> {
        (0..=self.bound).map(|i| self.orbits.iter().map(|o| o.mods[i].total_dim()).sum()).collect()
    }

    pub fn extend_to(&mut self, d: usize) -> Result<()> {
        for o in &mut self.orbits {
            o.extend_to(&self.tau, d)?;
        }
        self.bound = self.bound.max(d);
        Ok(())
    }

    /// `x̃: P_v -> e_j Λ̂_s` for `x ∈ e_j Λ̂_s e_v`.
    pub fn element_map(&self, s: usize, j: usize, v: usize, x: &[F]) -> RepMap<F> {
        let o = &self.orbits[j];
        map_from_projectives(self.algebra(), &ProjSum::new(vec![v]), &o.mods[s], o.acts(self.algebra(), s), &[x.to_vec()])
    }

    /// `x·y` for `x ∈ e_j Λ̂_s e_v` and `y ∈ e_v Λ̂_t e_w`.
    #[allow(clippy::too_many_arguments)]
    pub fn mul(&self, s: usize, j: usize, v: usize, x: &[F], t: usize, w: usize, y: &[F]) -> Vec<F> {
        let f = self.element_map(s, j, v, x);
        let g = self.orbits[v].shift_by(&self.tau, 0, &self.orbits[j], s, &f, t);
        g.comps[w].mul_vec(y)
    }

    /// First degree `i + 1 <= d` with `Λ̂_1 · Λ̂_i ≠ Λ̂_{i+1}`.
    pub fn generation_failure(&self) -> Option<usize> {
        let nv = self.orbits.len();
        let d = self.bound;
        if d < 2 {
            return None;
        }
        // span[i][j][w]: image of e_j Λ̂_1 ⊗ Λ̂_i inside (e_j Λ̂_{i+1})_w
        let mut span: Vec<Vec<Vec<Vec<Vec<F>>>>> = vec![vec![vec![vec![]; nv]; nv]; d];
        for j in 0..nv {
            for v in 0..nv {
                for c in 0..self.block_dim(1, j, v) {
                    let mut x = vec![F::zero(); self.block_dim(1, j, v)];
                    x[c] = F::one();
                    let mut g = self.element_map(1, j, v, &x);
                    for i in 1..d {
                        g = self.orbits[v].shift(&self.tau, i - 1, &self.orbits[j], i, &g);
                        for w in 0..nv {
                            span[i][j][w].extend(g.comps[w].columns());
                        }
                    }
                }
            }
        }
        for i in 1..d {
            for j in 0..nv {
                for w in 0..nv {
                    let want = self.block_dim(i + 1, j, w);
                    let got = Matrix::from_columns(want, &span[i][j][w]);
                    if want > 0 && got.cols() == 0 || got.cols() > 0 && got.rank() < want {
                        return Some(i + 1);
                    }
                }
            }
        }
        None
    }

    /// Checks `(xy)z = x(yz)` for all basis elements `x, y` and all `z` at once,
    /// over degrees with `s + t + u <= max_degree`.
    pub fn associativity_failure(&self, max_degree: usize) -> Option<(usize, usize, usize)> {
        let nv = self.orbits.len();
        let top = max_degree.min(self.bound);
        for s in 0..=top {
            for t in 0..=top - s {
                for u in 0..=top - s - t {
                    for j in 0..nv {
                        for v in 0..nv {
                            for cx in 0..self.block_dim(s, j, v) {
                                let x = unit(self.block_dim(s, j, v), cx);
                                let fx = self.element_map(s, j, v, &x);
                                let sx = self.orbits[v].shift_by(&self.tau, 0, &self.orbits[j], s, &fx, t);
                                let sxx = self.orbits[v].shift_by(&self.tau, t, &self.orbits[j], s + t, &sx, u);
                                for w in 0..nv {
                                    for cy in 0..self.block_dim(t, v, w) {
                                        let y = unit(self.block_dim(t, v, w), cy);
                                        let xy = sx.comps[w].mul_vec(&y);
                                        let left = self.orbits[w].shift_by(&self.tau, 0, &self.orbits[j], s + t, &self.element_map(s + t, j, w, &xy), u);
                                        let fy = self.element_map(t, v, w, &y);
                                        let sy = self.orbits[w].shift_by(&self.tau, 0, &self.orbits[v], t, &fy, u);
                                        if left != sxx.after(&sy) {
                                            return Some((s, t, u));
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        None
    }

    /// `dim Hom_Λ(Λ, τ_n^{-i}Λ)` for `i = 0..=upto`, iterating `τ_n^-` on the
    /// regular module as a whole rather than per projective.
    pub fn regular_hom_dims(&self, upto: usize) -> Vec<usize> {
        let alg = self.algebra();
        let q = alg.quiver();
        let reg = Module::sum_of(q, &(0..alg.num_vertices()).map(|j| alg.projective(j)).collect::<Vec<_>>());
        let mut cur = reg.clone();
        let mut out = vec![];
        for i in 0..=upto {
            if i > 0 {
                cur = self.tau.apply(&cur);
            }
            out.push(hom_space(alg, &reg, &cur).len());
        }
        out
    }
}

fn unit<F: Field>(len: usize, i: usize) -> Vec<F> {
    let mut v = vec![F::zero(); len];
    v[i] = F::one();
    v
}

/// `X̂` up to degree `d`: pieces `τ_n^{-i}(X)`.
pub struct GradedModuleTruncation<F: Field> {
    pub bound: usize,
    pub orbit: Orbit<F>,
}

pub fn hat<F: Field>(gt: &GradedTruncation<F>, x: &Module<F>, d: usize) -> Result<GradedModuleTruncation<F>> {
    Ok(GradedModuleTruncation { bound: d, orbit: Orbit::new(&gt.tau, x, d)? })
}

impl<F: Field> GradedModuleTruncation<F> {
    /// `X̂_i`, zero for `i < 0` or beyond the bound.
    pub fn piece(&self, i: i64) -> Option<&Module<F>> {
        if i < 0 {
            return None;
        }
        self.orbit.mods.get(i as usize)
    }

    pub fn dims(&self) -> Vec<Vec<usize>> {
        self.orbit.mods.iter().map(|m| m.dims.clone()).collect()
    }

    /// `x·y` for `x ∈ (X̂_i)_v` and `y ∈ e_v Λ̂_s e_w`.
    #[allow(clippy::too_many_arguments)]
    pub fn act(&self, gt: &GradedTruncation<F>, i: usize, v: usize, x: &[F], s: usize, w: usize, y: &[F]) -> Vec<F> {
        let alg = gt.algebra();
        let f = map_from_projectives(alg, &ProjSum::new(vec![v]), &self.orbit.mods[i], self.orbit.acts(alg, i), &[x.to_vec()]);
        let g = gt.orbits[v].shift_by(&gt.tau, 0, &self.orbit, i, &f, s);
        g.comps[w].mul_vec(y)
    }
}

/// Coordinates of maps `src -> tgt` with respect to a basis of a subspace of
/// `Hom(src, tgt)`, read off from a fixed set of pivot entries.
#[derive(Clone, Debug)]
struct Coords<F: Field> {
    rows: Vec<usize>,
    /// `(vertex, row, column)` of each pivot entry.
    pos: Vec<(usize, usize, usize)>,
    inv: Matrix<F>,
}

impl<F: Field> Coords<F> {
    fn new(src: &Module<F>, tgt: &Module<F>, basis: &[RepMap<F>]) -> Self {
        if basis.is_empty() {
            return Coords { rows: vec![], pos: vec![], inv: Matrix::zeros(0, 0) };
        }
        let len: usize = src.dims.iter().zip(&tgt.dims).map(|(c, r)| c * r).sum();
        let b = Matrix::from_columns(len, &basis.iter().map(|f| f.flat()).collect::<Vec<_>>());
        let rows = b.transpose().rref().pivots;
        let inv = b.select_rows(&rows).inverse().expect("basis is independent");
        let mut starts = vec![0];
        for (c, r) in src.dims.iter().zip(&tgt.dims) {
            starts.push(starts.last().unwrap() + c * r);
        }
        let pos = rows
            .iter()
            .map(|&k| {
                let w = starts.partition_point(|&x| x <= k) - 1;
                let (off, cols) = (k - starts[w], src.dims[w]);
                (w, off / cols, off % cols)
            })
            .collect();
        Coords { rows, pos, inv }
    }

    fn of(&self, v: &[F]) -> Vec<F> {
        let sel: Vec<F> = self.rows.iter().map(|&r| v[r].clone()).collect();
        self.inv.mul_vec(&sel)
    }

    /// Coordinates of `a ∘ b`, computing only the pivot entries.
    fn of_composite(&self, a: &RepMap<F>, b: &RepMap<F>) -> Vec<F> {
        let sel: Vec<F> = self
            .pos
            .iter()
            .map(|&(w, p, q)| {
                let (am, bm) = (&a.comps[w], &b.comps[w]);
                let mut acc = F::zero();
                for (k, x) in am.row(p).iter().enumerate() {
                    acc.add_mul(x, &bm[(k, q)]);
                }
                acc
            })
            .collect();
        self.inv.mul_vec(&sel)
    }
}

/// `Υ(X)_i = Hom_Λ(X, τ_n^{-i}X)` for `X = ⊕ X_a`, with product
/// `g·f = τ_n^{-j}(g) ∘ f` for `g ∈ Υ_i`, `f ∈ Υ_j`.
pub struct UpsilonAlgebra<F: Field> {
    pub bound: usize,
    pub orbits: Vec<Orbit<F>>,
    /// `basis[i][a][b]`: basis of `Hom(X_b, τ_n^{-i}X_a)`.
    pub basis: Vec<Vec<Vec<Vec<RepMap<F>>>>>,
    coords: Vec<Vec<Vec<Coords<F>>>>,
}

pub fn upsilon<F: Field>(t: &TauMinus<F>, summands: &[Module<F>], d: usize) -> Result<UpsilonAlgebra<F>> {
    let orbits = summands.iter().map(|x| Orbit::new(t, x, d)).collect::<Result<Vec<_>>>()?;
    let r = summands.len();
    let mut basis = vec![];
    let mut coords = vec![];
    for i in 0..=d {
        let mut bi = vec![];
        let mut ci = vec![];
        for a in 0..r {
            let mut ba = vec![];
            let mut ca = vec![];
            for x in summands {
                let h = hom_space(t.alg, x, &orbits[a].mods[i]);
                ca.push(Coords::new(x, &orbits[a].mods[i], &h));
                ba.push(h);
            }
            bi.push(ba);
            ci.push(ca);
        }
        basis.push(bi);
        coords.push(ci);
    }
    Ok(UpsilonAlgebra { bound: d, orbits, basis, coords })
}

impl<F: Field> UpsilonAlgebra<F> {
    pub fn block_dims(&self, i: usize) -> Vec<Vec<usize>> {
        self.basis[i].iter().map(|r| r.iter().map(|b| b.len()).collect()).collect()
    }

    pub fn dims(&self) -> Vec<usize> {
        (0..=self.bound).map(|i| self.block_dims(i).iter().flatten().sum()).collect()
    }

    /// Coordinates of `h: X_b -> τ_n^{-i}X_a`.
    pub fn coords(&self, i: usize, a: usize, b: usize, h: &RepMap<F>) -> Vec<F> {
        self.coords[i][a][b].of(&h.flat())
    }

    /// Coordinates of `h ∘ f` in `Υ_i(a, b)`.
    pub fn coords_of_composite(&self, i: usize, a: usize, b: usize, h: &RepMap<F>, f: &RepMap<F>) -> Vec<F> {
        self.coords[i][a][b].of_composite(h, f)
    }

    /// `τ_n^{-j}(g)` for `g: X_b -> τ_n^{-i}X_a`.
    pub fn shift(&self, t: &TauMinus<F>, i: usize, a: usize, b: usize, g: &RepMap<F>, j: usize) -> RepMap<F> {
        self.orbits[b].shift_by(t, 0, &self.orbits[a], i, g, j)
    }

    /// `g·f` for `g ∈ Υ_i(a, b)` and `f ∈ Υ_j(b, c)`, in `Υ_{i+j}(a, c)`.
    #[allow(clippy::too_many_arguments)]
    pub fn product(&self, t: &TauMinus<F>, i: usize, a: usize, b: usize, g: &RepMap<F>, j: usize, f: &RepMap<F>) -> RepMap<F> {
        self.shift(t, i, a, b, g, j).after(f)
    }

    /// Structure constants: coordinates of the product of basis elements
    /// `basis[i][a][b][k] · basis[j][b][c][l]`.
    #[allow(clippy::too_many_arguments)]
    pub fn structure_constant(&self, t: &TauMinus<F>, i: usize, a: usize, b: usize, k: usize, j: usize, c: usize, l: usize) -> Vec<F> {
        let p = self.product(t, i, a, b, &self.basis[i][a][b][k], j, &self.basis[j][b][c][l]);
        self.coords(i + j, a, c, &p)
    }

    /// Checks `(gf)h = g(fh)` on all basis triples with degrees summing to at
    /// most `max_degree`.
    pub fn associativity_failure(&self, t: &TauMinus<F>, max_degree: usize) -> Option<(usize, usize, usize)> {
        let r = self.orbits.len();
        let top = max_degree.min(self.bound);
        for i in 0..=top {
            for j in 0..=top - i {
                for k in 0..=top - i - j {
                    for a in 0..r {
                        for b in 0..r {
                            for g in &self.basis[i][a][b] {
                                for c in 0..r {
                                    for f in &self.basis[j][b][c] {
                                        let gf = self.product(t, i, a, b, g, j, f);
                                        for e in 0..r {
                                            for h in &self.basis[k][c][e] {
                                                let left = self.product(t, i + j, a, c, &gf, k, h);
                                                let fh = self.product(t, j, b, c, f, k, h);
                                                let right = self.product(t, i, a, b, g, j + k, &fh);
                                                if left != right {
                                                    return Some((i, j, k));
                                                }
                                            }
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        None
    }
}

/// Exactness of `0 -> τ_n^{-i}M_0 -> ... -> τ_n^{-i}M_L -> 0` for
/// `i = 0..=d`, given `maps[l]: M_l -> M_{l+1}`.  Returns the first failing
/// `(degree, spot)`.
pub fn hatted_exactness<F: Field>(t: &TauMinus<F>, mods: &[Module<F>], maps: &[RepMap<F>], d: usize) -> Result<Option<(usize, usize)>> {
    let orbits = mods.iter().map(|m| Orbit::new(t, m, d)).collect::<Result<Vec<_>>>()?;
    let mut cur: Vec<RepMap<F>> = maps.to_vec();
    for i in 0..=d {
        if i > 0 {
            cur = cur.iter().enumerate().map(|(l, f)| orbits[l].shift(t, i - 1, &orbits[l + 1], i - 1, f)).collect();
        }
        let pieces: Vec<&Module<F>> = orbits.iter().map(|o| &o.mods[i]).collect();
        if let Some(l) = first_inexact_spot(&pieces, &cur) {
            return Ok(Some((i, l)));
        }
    }
    Ok(None)
}

/// First spot `l` where `0 -> M_0 -> ... -> M_L -> 0` is not exact.
fn first_inexact_spot<F: Field>(mods: &[&Module<F>], maps: &[RepMap<F>]) -> Option<usize> {
    let nv = mods.first().map_or(0, |m| m.dims.len());
    let rank = |m: &Matrix<F>| if m.rows() == 0 || m.cols() == 0 { 0 } else { m.rank() };
    for l in 0..mods.len() {
        for w in 0..nv {
            let inn = if l == 0 { 0 } else { rank(&maps[l - 1].comps[w]) };
            let out = if l == mods.len() - 1 { 0 } else { rank(&maps[l].comps[w]) };
            if inn + out != mods[l].dims[w] {
                return Some(l);
            }
            if l > 0 && l < mods.len() - 1 && !maps[l].comps[w].mul(&maps[l - 1].comps[w]).is_zero() {
                return Some(l);
            }
        }
    }
    None
}

/// Degree range and first failure of a degreewise exactness check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactnessReport {
    pub bound: usize,
    /// Lowest graded degree examined.
    pub from_degree: i64,
    pub first_failure: Option<(i64, usize)>,
}

impl ExactnessReport {
    pub fn passed(&self) -> bool {
        self.first_failure.is_none()
    }
}

/// `M_0 = S, M_l = P_l, M_{n+1} = τ_n^-(S)`, with the maps of the resolution.
fn resolution_sequence<F: Field>(alg: &FDAlgebra<F>, ctx: &AprContext<F>) -> (Vec<Module<F>>, Vec<RepMap<F>>) {
    let r = &ctx.resolution;
    let n = ctx.n;
    let mut mods: Vec<Module<F>> = (0..=n).map(|l| r.terms[n - l].module(alg)).collect();
    mods.push(ctx.tau_s.clone());
    let mut maps: Vec<RepMap<F>> = (0..n).map(|l| r.diff_maps[n - l - 1].clone()).collect();
    maps.push(r.augmentation.clone());
    (mods, maps)
}

/// Degreewise exactness of `0 -> Ŝ -> P̂_1 -> ... -> P̂_n -> Ŝ(1) -> S(1) -> 0`.
/// In degree `-1` only `Ŝ(1)_{-1} = S -> S(1)_{-1} = S` survives; in degree
/// `i >= 0` the sequence is `τ_n^{-i}` of the resolution of `τ_n^-(S)`
/// augmented by `S`.
pub fn graded_resolution_of_simple<F: Field>(gt: &GradedTruncation<F>, ctx: &AprContext<F>, d: usize) -> Result<ExactnessReport> {
    let alg = gt.algebra();
    let s = alg.simple(ctx.vertex);
    let id = RepMap::identity(&s);
    if first_inexact_spot(&[&s, &s], &[id]).is_some() {
        return Ok(ExactnessReport { bound: d, from_degree: -1, first_failure: Some((-1, 0)) });
    }
    let (mods, maps) = resolution_sequence(alg, ctx);
    let failure = hatted_exactness(&gt.tau, &mods, &maps, d)?;
    Ok(ExactnessReport { bound: d, from_degree: -1, first_failure: failure.map(|(i, l)| (i as i64, l)) })
}

/// Degreewise verdicts on `T̂` being tilting.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HatTiltingReport {
    pub bound: usize,
    pub m: usize,
    /// Exactness of the hatted `0 -> S -> P_1 -> ... -> P_m -> K_m -> 0`.
    pub t1: bool,
    pub t1_failure: Option<(usize, usize)>,
    /// First `(degree, j)` with `Ext^j_Λ̂(T̂, T̂)_degree ≠ 0`, `1 <= j <= n+1`.
    pub t2_failure: Option<(usize, usize)>,
    /// The hatted sequence is a coresolution of `Ŝ` inside `add T̂`.
    pub t3: bool,
}

impl HatTiltingReport {
    pub fn passed(&self) -> bool {
        self.t1 && self.t2_failure.is_none() && self.t3
    }
}

/// `S -> P_1 -> ... -> P_m -> K_m` with the corestriction onto `K_m` at the end.
fn syzygy_sequence<F: Field>(alg: &FDAlgebra<F>, ctx: &AprContext<F>) -> (Vec<Module<F>>, Vec<RepMap<F>>) {
    let r = &ctx.resolution;
    let (n, m) = (ctx.n, ctx.m);
    let mut mods: Vec<Module<F>> = (0..=m).map(|l| r.terms[n - l].module(alg)).collect();
    let mut maps: Vec<RepMap<F>> = (0..m).map(|l| r.diff_maps[n - l - 1].clone()).collect();
    if m == n {
        mods.push(ctx.tau_s.clone());
        maps.push(r.augmentation.clone());
    } else {
        let f = &r.diff_maps[n - m - 1];
        let tgt = r.terms[n - m - 1].module(alg);
        let (k, incl) = image(alg.quiver(), &tgt, f);
        let comps = incl.comps.iter().zip(&f.comps).map(|(i, c)| i.solve_matrix(c).expect("image contains the columns")).collect();
        mods.push(k);
        maps.push(RepMap { comps });
    }
    (mods, maps)
}

/// `Ext^j_Λ̂(T̂, T̂)_i` is `Ext^j_Λ(T, τ_n^{-i}T)`, since the hatted projective
/// resolution of `T` stays exact and `Hom_Λ̂(P̂, X̂)_i = Hom_Λ(P, X̂_i)`.
pub fn hat_tilting_check<F: Field>(gt: &GradedTruncation<F>, ctx: &AprContext<F>, d: usize) -> Result<HatTiltingReport> {
    let alg = gt.algebra();
    let n = ctx.n;
    let (mods, maps) = syzygy_sequence(alg, ctx);
    let t1_failure = hatted_exactness(&gt.tau, &mods, &maps, d)?;
    let t1 = t1_failure.is_none();
    let orbits = ctx.summands.iter().map(|x| Orbit::new(&gt.tau, x, d)).collect::<Result<Vec<_>>>()?;
    let mut t2_failure = None;
    'outer: for i in 0..=d {
        let target = Module::sum_of(alg.quiver(), &orbits.iter().map(|o| o.mods[i].clone()).collect::<Vec<_>>());
        let e = ext_dims(alg, &ctx.tilting, &target, n + 1);
        for (j, &dim) in e.iter().enumerate().skip(1) {
            if dim != 0 {
                t2_failure = Some((i, j));
                break 'outer;
            }
        }
    }
    let free_of_s = (1..=ctx.m).all(|l| !ctx.resolution.terms[n - l].gens.contains(&ctx.vertex));
    Ok(HatTiltingReport { bound: d, m: ctx.m, t1, t1_failure, t2_failure, t3: t1 && free_of_s })
}

/// Solution space of a homogeneous linear system in blocks of unknowns,
/// refined one constraint at a time.
struct BlockSystem<F: Field> {
    offs: Vec<usize>,
    sol: Matrix<F>,
}

impl<F: Field> BlockSystem<F> {
    fn new(sizes: &[usize]) -> Self {
        let mut offs = vec![0];
        for s in sizes {
            offs.push(offs.last().unwrap() + s);
        }
        let total = *offs.last().unwrap();
        BlockSystem { offs, sol: Matrix::identity(total) }
    }

    /// Imposes `Σ_p C_p x_p = 0`, each `C_p` given by its columns.
    fn impose(&mut self, rows: usize, parts: &[(usize, Vec<Vec<F>>)]) {
        let r = self.sol.cols();
        if r == 0 {
            return;
        }
        let mut acc = Matrix::zeros(rows, r);
        for (p, cols) in parts {
            if cols.is_empty() {
                continue;
            }
            let c = Matrix::from_columns(rows, cols);
            let sub = self.sol.block(self.offs[*p], 0, cols.len(), r);
            acc = acc.add(&c.mul(&sub));
        }
        if !acc.is_zero() {
            self.sol = self.sol.mul(&acc.kernel_basis());
        }
    }

    fn sample(&self, rng: &mut StdRng) -> Vec<F> {
        let c: Vec<F> = (0..self.sol.cols()).map(|_| F::from_i64(rng.gen_range(1..1000))).collect();
        self.sol.mul_vec(&c)
    }

    fn block<'v>(&self, x: &'v [F], p: usize) -> &'v [F] {
        &x[self.offs[p]..self.offs[p + 1]]
    }
}

/// Verdicts of comparing `Υ_Λ(T)` with `Γ̂` degree by degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EndoComparisonReport {
    pub bound: usize,
    pub upsilon_dims: Vec<usize>,
    pub gamma_hat_dims: Vec<usize>,
    pub first_dim_mismatch: Option<usize>,
    /// Every block `Hom(T_b, τ^{-i}T_a)` has the dimension of `e_a Γ̂_i e_b`.
    pub blocks_match: bool,
    /// A solution of the naturality equations for `φ` with every component
    /// invertible was found.
    pub phi_found: bool,
    pub phi_bijective: bool,
    pub first_mult_mismatch: Option<(usize, usize)>,
    pub pairs_checked: usize,
    /// For `m = n`: `dim Λ̂_i`, and whether every block matches `Υ_Λ(T)`
    /// regraded by `T̂' = Q̂ ⊕ K̂_n(-1)`.
    pub lambda_hat_dims: Option<Vec<usize>>,
    pub regraded_match: Option<bool>,
}

impl EndoComparisonReport {
    pub fn passed(&self) -> bool {
        self.first_dim_mismatch.is_none()
            && self.blocks_match
            && self.phi_found
            && self.phi_bijective
            && self.first_mult_mismatch.is_none()
            && self.regraded_match != Some(false)
    }
}

/// `Hom_Λ(T, Y)` as a right `Γ`-module for `Y = τ^{-k}T_a`, in the bases of
/// `ups`; an arrow `i -> j` of `Γ` acts by precomposition with `T_j -> T_i`.
fn hom_functor_module<F: Field>(ups: &UpsilonAlgebra<F>, gamma: &EndoPresentation<F>, k: usize, a: usize) -> Module<F> {
    let q = gamma.algebra.quiver();
    let dims: Vec<usize> = ups.basis[k][a].iter().map(|b| b.len()).collect();
    let mats = q
        .arrows
        .iter()
        .enumerate()
        .map(|(al, arr)| {
            let cols: Vec<Vec<F>> = ups.basis[k][a][arr.src].iter().map(|f| ups.coords_of_composite(k, a, arr.tgt, f, &gamma.arrow_maps[al])).collect();
            Matrix::from_columns(dims[arr.tgt], &cols)
        })
        .collect();
    Module { dims, mats }
}

/// `Hom_Λ(T, h)` for `h: τ^{-k}T_b -> τ^{-l}T_a`.
fn hom_functor_map<F: Field>(ups: &UpsilonAlgebra<F>, k: usize, b: usize, l: usize, a: usize, h: &RepMap<F>) -> RepMap<F> {
    let r = ups.orbits.len();
    let comps = (0..r)
        .map(|v| {
            let cols: Vec<Vec<F>> = ups.basis[k][b][v].iter().map(|f| ups.coords_of_composite(l, a, v, h, f)).collect();
            Matrix::from_columns(ups.basis[l][a][v].len(), &cols)
        })
        .collect();
    RepMap { comps }
}

/// Compares `Υ_Λ(T)` with `Γ̂ = Υ_Γ(Γ)` up to degree `d`.
///
/// Dimensions are compared with an independently computed truncation of `Γ̂`.
/// The isomorphism `Φ_i = φ^{(i)} ∘ Hom_Λ(T, -)` is built from maps
/// `φ: Hom_Λ(T, τ_n^- Y) -> τ_n^-(Hom_Λ(T, Y))` on the orbit objects, found by
/// solving the naturality equations for shifts of `Γ`'s arrows and of a basis
/// of `Υ_1`.  `Φ` is then checked to be bijective and multiplicative on every
/// pair of basis elements of total degree `<= d`.
pub fn graded_endo_comparison<F: Field>(gt: &GradedTruncation<F>, ctx: &AprContext<F>, gamma: &EndoPresentation<F>, d: usize) -> Result<EndoComparisonReport> {
    let n = ctx.n;
    let t = &gt.tau;
    let r = gamma.summands.len();
    let ups = upsilon(t, &gamma.summands, d)?;
    let gt_g = preprojective_truncation(&gamma.algebra, n, d)?;
    let tg = &gt_g.tau;
    let upsilon_dims = ups.dims();
    let gamma_hat_dims = gt_g.dims();
    let first_dim_mismatch = (0..=d).find(|&i| upsilon_dims[i] != gamma_hat_dims[i]);
    let blocks_match = (0..=d).all(|i| (0..r).all(|a| (0..r).all(|b| ups.basis[i][a][b].len() == gt_g.block_dim(i, a, b))));

    let (lambda_hat_dims, regraded_match) = if ctx.m == n && gt.bound >= d {
        let sh = |v: usize| usize::from(v == ctx.vertex) as i64;
        let ok = (0..d).all(|i| {
            (0..r).all(|a| {
                (0..r).all(|b| {
                    let k = i as i64 + sh(b) - sh(a);
                    let u = if k < 0 { 0 } else { ups.basis[k as usize][a][b].len() };
                    u == gt.block_dim(i, a, b)
                })
            })
        });
        (Some(gt.dims()[..=d].to_vec()), Some(ok))
    } else {
        (None, None)
    };

    let mut report = EndoComparisonReport {
        bound: d,
        upsilon_dims,
        gamma_hat_dims,
        first_dim_mismatch,
        blocks_match,
        phi_found: false,
        phi_bijective: false,
        first_mult_mismatch: None,
        pairs_checked: 0,
        lambda_hat_dims,
        regraded_match,
    };
    if first_dim_mismatch.is_some() || !blocks_match {
        return Ok(report);
    }

    // F(τ^{-k}T_a) and τ_Γ^- of it
    let fy: Vec<Vec<Module<F>>> = (0..=d).map(|k| (0..r).map(|a| hom_functor_module(&ups, gamma, k, a)).collect()).collect();
    let ext: Vec<Vec<ExtModule<F>>> = (0..d).map(|k| (0..r).map(|a| tg.ext_module(&fy[k][a], n)).collect()).collect();
    let blk = |k: usize, a: usize| k * r + a;
    let mut hs: Vec<Vec<RepMap<F>>> = vec![];
    for k in 0..d {
        for a in 0..r {
            hs.push(hom_space(&gamma.algebra, &fy[k + 1][a], &ext[k][a].module));
        }
    }
    let mut sys = BlockSystem::new(&hs.iter().map(|h| h.len()).collect::<Vec<_>>());
    let flat_len = |src: &Module<F>, tgt: &Module<F>| -> usize { src.dims.iter().zip(&tgt.dims).map(|(c, r)| c * r).sum() };
    let gq = gamma.algebra.quiver();
    // naturality for shifts of the arrows of Γ
    for k in 0..d {
        for (al, arr) in gq.arrows.iter().enumerate() {
            let (i, j) = (arr.src, arr.tgt);
            let g = &gamma.arrow_maps[al];
            let hk = ups.orbits[j].shift_by(t, 0, &ups.orbits[i], 0, g, k);
            let hk1 = ups.orbits[j].shift(t, k, &ups.orbits[i], k, &hk);
            let a_map = hom_functor_map(&ups, k + 1, j, k + 1, i, &hk1);
            let b_map = tg.apply_map_with(&ext[k][j], &ext[k][i], &hom_functor_map(&ups, k, j, k, i, &hk));
            let rows = flat_len(&fy[k + 1][j], &ext[k][i].module);
            let left: Vec<Vec<F>> = hs[blk(k, i)].iter().map(|h| h.after(&a_map).flat()).collect();
            let right: Vec<Vec<F>> = hs[blk(k, j)].iter().map(|h| b_map.after(h).flat().iter().map(|x| x.neg()).collect()).collect();
            sys.impose(rows, &[(blk(k, i), left), (blk(k, j), right)]);
        }
    }
    // naturality for shifts of a basis of Υ_1
    for k in 0..d.saturating_sub(1) {
        for a in 0..r {
            for b in 0..r {
                for g in &ups.basis[1][a][b] {
                    let hk = ups.orbits[b].shift_by(t, 0, &ups.orbits[a], 1, g, k);
                    let hk1 = ups.orbits[b].shift(t, k, &ups.orbits[a], k + 1, &hk);
                    let a_map = hom_functor_map(&ups, k + 1, b, k + 2, a, &hk1);
                    let b_map = tg.apply_map_with(&ext[k][b], &ext[k + 1][a], &hom_functor_map(&ups, k, b, k + 1, a, &hk));
                    let rows = flat_len(&fy[k + 1][b], &ext[k + 1][a].module);
                    let left: Vec<Vec<F>> = hs[blk(k + 1, a)].iter().map(|h| h.after(&a_map).flat()).collect();
                    let right: Vec<Vec<F>> = hs[blk(k, b)].iter().map(|h| b_map.after(h).flat().iter().map(|x| x.neg()).collect()).collect();
                    sys.impose(rows, &[(blk(k + 1, a), left), (blk(k, b), right)]);
                }
            }
        }
    }
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let mut phi: Option<Vec<RepMap<F>>> = None;
    for _ in 0..8 {
        let x = sys.sample(&mut rng);
        let cand: Vec<RepMap<F>> = (0..d * r)
            .map(|p| {
                let c = sys.block(&x, p);
                let (k, a) = (p / r, p % r);
                let mut m = RepMap::zero(&fy[k + 1][a], &ext[k][a].module);
                for (ci, h) in c.iter().zip(&hs[p]) {
                    m = m.add(&h.scale(ci));
                }
                m
            })
            .collect();
        if cand.iter().all(|m| m.is_iso()) {
            phi = Some(cand);
            break;
        }
    }
    let Some(phi) = phi else {
        return Ok(report);
    };
    report.phi_found = true;

    let ups_g = upsilon(tg, &fy[0], d)?;
    // φ^{(i)}_a: F(τ^{-i}T_a) -> τ_Γ^{-i}F(T_a)
    let mut phis: Vec<Vec<RepMap<F>>> = vec![(0..r).map(|a| RepMap::identity(&fy[0][a])).collect()];
    for i in 1..=d {
        let row = (0..r)
            .map(|a| {
                let prev = &phis[i - 1][a];
                let lifted = tg.apply_map_with(&ext[i - 1][a], &ups_g.orbits[a].ext[i - 1], prev);
                lifted.after(&phi[blk(i - 1, a)])
            })
            .collect();
        phis.push(row);
    }
    // Φ(g) = φ^{(i)}_a ∘ F(g) on every basis element
    let images: Vec<Vec<Vec<Vec<RepMap<F>>>>> = (0..=d)
        .map(|i| (0..r).map(|a| (0..r).map(|b| ups.basis[i][a][b].iter().map(|g| phis[i][a].after(&hom_functor_map(&ups, 0, b, i, a, g))).collect()).collect()).collect())
        .collect();
    let mut mats: Vec<Vec<Vec<Matrix<F>>>> = vec![];
    let mut bij = true;
    for i in 0..=d {
        let mut mi = vec![];
        for a in 0..r {
            let mut ma = vec![];
            for b in 0..r {
                let cols: Vec<Vec<F>> = images[i][a][b].iter().map(|pg| ups_g.coords(i, a, b, pg)).collect();
                let m = Matrix::from_columns(ups_g.basis[i][a][b].len(), &cols);
                if m.rows() != m.cols() || (m.rows() > 0 && m.rank() < m.rows()) {
                    bij = false;
                }
                ma.push(m);
            }
            mi.push(ma);
        }
        mats.push(mi);
    }
    report.phi_bijective = bij;
    if !bij {
        return Ok(report);
    }
    let mut pairs = 0;
    'outer: for i in 0..=d {
        for a in 0..r {
            for b in 0..r {
                for (g, pg) in ups.basis[i][a][b].iter().zip(&images[i][a][b]) {
                    let (mut sg, mut spg) = (g.clone(), pg.clone());
                    for j in 0..=d - i {
                        if j > 0 {
                            sg = ups.orbits[b].shift(t, j - 1, &ups.orbits[a], i + j - 1, &sg);
                            spg = ups_g.orbits[b].shift(tg, j - 1, &ups_g.orbits[a], i + j - 1, &spg);
                        }
                        for c in 0..r {
                            for (f, pf) in ups.basis[j][b][c].iter().zip(&images[j][b][c]) {
                                let left = mats[i + j][a][c].mul_vec(&ups.coords_of_composite(i + j, a, c, &sg, f));
                                let right = ups_g.coords_of_composite(i + j, a, c, &spg, pf);
                                pairs += 1;
                                if left != right {
                                    report.first_mult_mismatch = Some((i, j));
                                    break 'outer;
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    report.pairs_checked = pairs;
    Ok(report)
}

/// Degreewise verdicts on `0 -> T̂' -> Λ̂ -> S -> 0` for an `n`-APR tilt, with
/// `T̂' = Q̂ ⊕ K̂_n(-1)` and `K_n = τ_n^-(S)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NAprIsoReport {
    pub bound: usize,
    pub sequence_exact: bool,
    /// `Hom_Λ̂(T̂', f)` bijective in each degree.
    pub hom_t_f: Vec<bool>,
    /// `Hom_Λ̂(f, Λ̂)` bijective in each degree.
    pub hom_f_lambda: Vec<bool>,
    pub end_dims: Vec<usize>,
    pub lambda_dims: Vec<usize>,
}

impl NAprIsoReport {
    pub fn passed(&self) -> bool {
        self.sequence_exact && self.hom_t_f.iter().all(|&b| b) && self.hom_f_lambda.iter().all(|&b| b) && self.end_dims == self.lambda_dims
    }
}

/// In degree `k >= 1` the piece `T̂'_k` equals `Λ̂_k` and `f_k` is the
/// identity, so the content lies in degree 0 and in the `S` summand, where
/// `Hom(f, Λ̂)` sends `g ∈ Hom(S, Λ̂_i)` to `τ_n^-(g) ∈ Hom(K_n, Λ̂_{i+1})`.
pub fn n_apr_iso_check<F: Field>(gt: &GradedTruncation<F>, ctx: &AprContext<F>, d: usize) -> Result<NAprIsoReport> {
    if ctx.m != ctx.n {
        return Err(Error::Precondition(format!("needs m = n, got m = {} and n = {}", ctx.m, ctx.n)));
    }
    if gt.bound < d + 1 {
        return Err(Error::TruncationTooSmall(format!("need Λ̂ up to degree {}", d + 1)));
    }
    let alg = gt.algebra();
    let q = alg.quiver();
    let nv = alg.num_vertices();
    let s = ctx.vertex;
    if gt.orbits[s].mods[1] != ctx.tau_s {
        return Err(Error::CheckFailed("τ_n^-(S) differs from the orbit of P_S".into()));
    }
    // degree 0: 0 -> Q -> Λ -> S -> 0
    let lambda = Module::sum_of(q, &gt.orbits.iter().map(|o| o.mods[0].clone()).collect::<Vec<_>>());
    let qpart: Vec<Module<F>> = (0..nv).filter(|&v| v != s).map(|v| gt.orbits[v].mods[0].clone()).collect();
    let qmod = Module::sum_of(q, &qpart);
    let offs: Vec<Vec<usize>> = {
        let mut acc = vec![vec![0; nv]];
        for o in &gt.orbits {
            let last = acc.last().unwrap().clone();
            acc.push(last.iter().zip(&o.mods[0].dims).map(|(a, b)| a + b).collect());
        }
        acc
    };
    let incl = RepMap {
        comps: (0..nv)
            .map(|w| {
                let mut m = Matrix::zeros(lambda.dims[w], qmod.dims[w]);
                let mut c = 0;
                for v in (0..nv).filter(|&v| v != s) {
                    for k in 0..gt.orbits[v].mods[0].dims[w] {
                        m[(offs[v][w] + k, c)] = F::one();
                        c += 1;
                    }
                }
                m
            })
            .collect(),
    };
    let simple = alg.simple(s);
    let proj = RepMap {
        comps: (0..nv)
            .map(|w| {
                let mut m = Matrix::zeros(simple.dims[w], lambda.dims[w]);
                if w == s {
                    m[(0, offs[s][w])] = F::one();
                }
                m
            })
            .collect(),
    };
    let sequence_exact = incl.commutes(q, &qmod, &lambda) && proj.commutes(q, &lambda, &simple) && first_inexact_spot(&[&qmod, &lambda, &simple], &[incl, proj]).is_none();

    let kn = &gt.orbits[s].mods[1];
    let mut hom_t_f = vec![];
    let mut hom_f_lambda = vec![];
    let mut end_dims = vec![];
    let mut lambda_dims = vec![];
    for i in 0..=d {
        // Hom(T', T̂'_{i+a}) -> Hom(T', Λ̂_{i+a}) by postcomposition with f
        let q_dims: usize = (0..nv).filter(|&v| v != s).map(|v| if i == 0 { qmod.dims[v] } else { (0..nv).map(|a| gt.block_dim(i, a, v)).sum() }).sum();
        let q_lambda: usize = (0..nv).filter(|&v| v != s).map(|v| (0..nv).map(|a| gt.block_dim(i, a, v)).sum::<usize>()).sum();
        let k_hom: usize = (0..nv).map(|a| hom_space(alg, kn, &gt.orbits[a].mods[i + 1]).len()).sum();
        hom_t_f.push(q_dims == q_lambda);
        // Hom(S, Λ̂_i) -> Hom(K_n, Λ̂_{i+1}) by τ_n^-
        let mut flats = vec![];
        let mut len = 0;
        for a in 0..nv {
            let tgt = &gt.orbits[a].mods[i + 1];
            for c in 0..gt.block_dim(i, a, s) {
                let x = unit(gt.block_dim(i, a, s), c);
                let g = gt.element_map(i, a, s, &x);
                let sg = gt.orbits[s].shift(&gt.tau, 0, &gt.orbits[a], i, &g);
                let mut v = vec![F::zero(); len];
                v.extend(sg.flat());
                flats.push(v);
            }
            len += kn.dims.iter().zip(&tgt.dims).map(|(c, r)| c * r).sum::<usize>();
        }
        let cols: Vec<Vec<F>> = flats
            .into_iter()
            .map(|mut v| {
                v.resize(len, F::zero());
                v
            })
            .collect();
        let src_dim: usize = (0..nv).map(|a| gt.block_dim(i, a, s)).sum();
        let rank = if cols.is_empty() { 0 } else { Matrix::from_columns(len, &cols).rank() };
        hom_f_lambda.push(rank == src_dim && rank == k_hom);
        end_dims.push(q_dims + k_hom);
        lambda_dims.push(q_lambda + src_dim);
    }
    Ok(NAprIsoReport { bound: d, sequence_exact, hom_t_f, hom_f_lambda, end_dims, lambda_dims })
}

/// Generators `(vertex, degree)` of a minimal graded projective resolution of
/// a vertex simple over `Λ̂`, one list per homological degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedResolution {
    pub vertex: usize,
    pub bound: usize,
    pub gens: Vec<Vec<(usize, usize)>>,
}

impl GradedResolution {
    /// `dim Ext^k(S_vertex, S_j)`.
    pub fn ext_dim(&self, k: usize, j: usize) -> usize {
        self.gens.get(k).map_or(0, |g| g.iter().filter(|(v, _)| *v == j).count())
    }
}

/// A graded free module `⊕_c P̂_{v_c}(-g_c)` and its pieces up to the bound.
struct GradedFree<F: Field> {
    gens: Vec<(usize, usize)>,
    /// `pieces[r]`: the module `⊕_{g_c <= r} τ_n^{-(r-g_c)}P_{v_c}`.
    pieces: Vec<Module<F>>,
    /// `offs[r][c][w]`: offset of component `c` at vertex `w`, if present.
    offs: Vec<Vec<Option<Vec<usize>>>>,
}

impl<F: Field> GradedFree<F> {
    fn new(gt: &GradedTruncation<F>, gens: Vec<(usize, usize)>) -> Self {
        let q = gt.algebra().quiver();
        let nv = q.num_vertices();
        let mut pieces = vec![];
        let mut offs = vec![];
        for r in 0..=gt.bound {
            let mut parts = vec![];
            let mut o = vec![];
            let mut acc = vec![0; nv];
            for &(v, g) in &gens {
                if g <= r {
                    let m = &gt.orbits[v].mods[r - g];
                    o.push(Some(acc.clone()));
                    for w in 0..nv {
                        acc[w] += m.dims[w];
                    }
                    parts.push(m.clone());
                } else {
                    o.push(None);
                }
            }
            pieces.push(Module::sum_of(q, &parts));
            offs.push(o);
        }
        GradedFree { gens, pieces, offs }
    }
}

/// The minimal graded projective resolution of `S_i` over `Λ̂`, computed
/// inside the truncation, with terms `0..=len`.  Fails with
/// `TruncationTooSmall` when a generator sits at the truncation boundary.
pub fn graded_simple_resolution<F: Field>(gt: &GradedTruncation<F>, i: usize, len: usize) -> Result<GradedResolution> {
    let alg = gt.algebra();
    let q = alg.quiver();
    let nv = alg.num_vertices();
    let d = gt.bound;
    let t = &gt.tau;
    let mut cur = GradedFree::new(gt, vec![(i, 0)]);
    // kernel of F^0 -> S_i, degreewise
    let mut ker: Vec<(Module<F>, RepMap<F>)> = (0..=d)
        .map(|r| {
            let p = &cur.pieces[r];
            let basis = if r == 0 { p.radical_basis(q) } else { p.dims.iter().map(|&x| Matrix::identity(x)).collect() };
            p.submodule(q, &basis)
        })
        .collect();
    let mut all_gens = vec![cur.gens.clone()];
    for k in 1..=len {
        // minimal generators of the kernel
        let mut gens = vec![];
        let mut vecs = vec![];
        for r in 0..=d {
            let ki = &ker[r].1;
            let p = &cur.pieces[r];
            let mut base: Vec<Matrix<F>> = (0..nv).map(|w| Matrix::zeros(p.dims[w], 0)).collect();
            for (a, arr) in q.arrows.iter().enumerate() {
                base[arr.tgt] = base[arr.tgt].hstack(&p.mats[a].mul(&ki.comps[arr.src]));
            }
            if r > 0 && !ker[r - 1].0.is_zero() {
                let (kp, kpi) = &ker[r - 1];
                let ek = t.ext_module(kp, t.n);
                let mut img: Vec<Matrix<F>> = (0..nv).map(|w| Matrix::zeros(p.dims[w], ek.module.dims[w])).collect();
                for (c, &(v, g)) in cur.gens.iter().enumerate() {
                    if g > r - 1 {
                        continue;
                    }
                    let src_off = cur.offs[r - 1][c].as_ref().unwrap();
                    let dst_off = cur.offs[r][c].as_ref().unwrap();
                    let piece = &gt.orbits[v].mods[r - 1 - g];
                    let pi = RepMap { comps: (0..nv).map(|w| kpi.comps[w].block(src_off[w], 0, piece.dims[w], kp.dims[w])).collect() };
                    let sh = t.apply_map_with(&ek, &gt.orbits[v].ext[r - 1 - g], &pi);
                    for w in 0..nv {
                        img[w].set_block(dst_off[w], 0, &sh.comps[w]);
                    }
                }
                for w in 0..nv {
                    base[w] = base[w].hstack(&img[w]);
                }
            }
            for w in 0..nv {
                for c in complement_columns(&base[w], &ki.comps[w]) {
                    gens.push((w, r));
                    vecs.push(c);
                }
            }
        }
        if let Some(&(_, g)) = gens.iter().find(|(_, g)| *g >= d) {
            return Err(Error::TruncationTooSmall(format!("term {k} of the resolution of S_{i} needs a generator in degree {g} with bound {d}")));
        }
        all_gens.push(gens.clone());
        if k == len || gens.is_empty() {
            break;
        }
        // base maps P_w -> τ^{-(g-h)}P_v for each new generator and old component
        let next = GradedFree::new(gt, gens.clone());
        let mut shifted: Vec<Vec<Option<Vec<RepMap<F>>>>> = vec![];
        for (a, &(w, g)) in gens.iter().enumerate() {
            let mut row = vec![];
            for (c, &(v, h)) in cur.gens.iter().enumerate() {
                if h > g {
                    row.push(None);
                    continue;
                }
                let off = cur.offs[g][c].as_ref().unwrap();
                let piece = &gt.orbits[v].mods[g - h];
                let sub = vecs[a][off[w]..off[w] + piece.dims[w]].to_vec();
                let base = map_from_projectives(alg, &ProjSum::new(vec![w]), piece, gt.orbits[v].acts(alg, g - h), &[sub]);
                let mut list = vec![base];
                for e in 1..=d - g {
                    let prev = list.last().unwrap();
                    list.push(gt.orbits[w].shift(t, e - 1, &gt.orbits[v], g - h + e - 1, prev));
                }
                row.push(Some(list));
            }
            shifted.push(row);
        }
        ker = (0..=d)
            .map(|r| {
                let src = &next.pieces[r];
                let tgt = &cur.pieces[r];
                let comps: Vec<Matrix<F>> = (0..nv)
                    .map(|w| {
                        let mut m = Matrix::zeros(tgt.dims[w], src.dims[w]);
                        for (a, &(_, g)) in next.gens.iter().enumerate() {
                            if g > r {
                                continue;
                            }
                            let so = next.offs[r][a].as_ref().unwrap()[w];
                            for (c, _) in cur.gens.iter().enumerate() {
                                if let Some(list) = &shifted[a][c] {
                                    let to = cur.offs[r][c].as_ref().unwrap()[w];
                                    m.set_block(to, so, &list[r - g].comps[w]);
                                }
                            }
                        }
                        m
                    })
                    .collect();
                let basis: Vec<Matrix<F>> = comps.iter().map(|c| c.kernel_basis()).collect();
                src.submodule(q, &basis)
            })
            .collect();
        cur = next;
    }
    Ok(GradedResolution { vertex: i, bound: d, gens: all_gens })
}

/// `Ext^k_Λ̂(S_i, S_j)` for all vertex pairs and `k = 0..=n+1`:
/// `table[k][i][j]`.
pub fn graded_ext_table<F: Field>(gt: &GradedTruncation<F>) -> Result<Vec<Vec<Vec<usize>>>> {
    let nv = gt.orbits.len();
    let n = gt.n();
    let res = (0..nv).map(|i| graded_simple_resolution(gt, i, n + 1)).collect::<Result<Vec<_>>>()?;
    Ok((0..=n + 1).map(|k| (0..nv).map(|i| (0..nv).map(|j| res[i].ext_dim(k, j)).collect()).collect()).collect())
}

/// `dim Ext^k(S_i, S_j) = dim Ext^{n+1-k}(S_j, S_i)`.
pub fn cy_symmetry_spotcheck<F: Field>(gt: &GradedTruncation<F>, i: usize, j: usize, k: usize) -> Result<bool> {
    let n = gt.n();
    if k > n + 1 {
        return Err(Error::Input(format!("k = {k} exceeds n + 1 = {}", n + 1)));
    }
    let ri = graded_simple_resolution(gt, i, n + 1)?;
    let rj = graded_simple_resolution(gt, j, n + 1)?;
    Ok(ri.ext_dim(k, j) == rj.ext_dim(n + 1 - k, i))
}

/// First `(k, i, j)` violating the symmetry, over all pairs and degrees.
pub fn cy_symmetry_failure(table: &[Vec<Vec<usize>>]) -> Option<(usize, usize, usize)> {
    let top = table.len() - 1;
    let nv = table[0].len();
    for k in 0..=top {
        for i in 0..nv {
            for j in 0..nv {
                if table[k][i][j] != table[top - k][j][i] {
                    return Some((k, i, j));
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::apr::{build_apr, gamma_of};
    use crate::exactla::Rational;
    use crate::presalg::{as_fd_algebra, Presentation};
    use crate::quiver::Quiver;

    type Q = Rational;

    fn ex1() -> FDAlgebra<Q> {
        let q = Quiver::new(["1", "2", "3", "4"]).with_arrows(&[("a", "3", "4"), ("b", "4", "1"), ("c", "3", "2"), ("d", "2", "1")]);
        as_fd_algebra(&Presentation::hereditary(q), 20).unwrap()
    }

    fn a2() -> FDAlgebra<Q> {
        as_fd_algebra(&Presentation::hereditary(Quiver::new(["1", "2"]).with_arrows(&[("alpha", "2", "1")])), 20).unwrap()
    }

    /// `x ↦ -x C^{-T} C` on dimension vectors, from path counts alone.
    fn inverse_coxeter(alg: &FDAlgebra<Q>) -> Matrix<Q> {
        let nv = alg.num_vertices();
        let c = Matrix::from_fn(nv, nv, |i, j| Q::from_i64(alg.block_dim(i, j) as i64));
        let cit = c.inverse().unwrap().transpose();
        cit.mul(&c).scale(&Q::from_i64(-1))
    }

    fn apply_row(m: &Matrix<Q>, x: &[usize]) -> Vec<usize> {
        let row = Matrix::from_fn(1, x.len(), |_, j| Q::from_i64(x[j] as i64)).mul(m);
        (0..x.len()).map(|j| row[(0, j)].to_string().parse::<usize>().unwrap()).collect()
    }

    #[test]
    fn degree_zero_truncation_is_the_algebra() {
        let a = ex1();
        let gt = preprojective_truncation(&a, 1, 0).unwrap();
        assert_eq!(gt.dims(), vec![a.dim()]);
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(gt.block_dim(0, i, j), a.block_dim(i, j));
            }
        }
    }

    #[test]
    fn ex1_pieces_follow_inverse_coxeter() {
        let a = ex1();
        let phi = inverse_coxeter(&a);
        let gt = preprojective_truncation(&a, 1, 5).unwrap();
        for j in 0..4 {
            let mut x = a.projective(j).dims;
            for i in 1..=5 {
                x = apply_row(&phi, &x);
                assert_eq!(gt.orbits[j].mods[i].dims, x, "τ^-{i} P_{j}");
            }
        }
        let sum: usize = (0..4).map(|j| apply_row(&phi, &a.projective(j).dims).iter().sum::<usize>()).sum();
        assert_eq!(gt.dims()[1], sum);
    }

    #[test]
    fn ex1_hat_of_simple_follows_coxeter_orbit() {
        let a = ex1();
        let phi = inverse_coxeter(&a);
        let gt = preprojective_truncation(&a, 1, 1).unwrap();
        let h = hat(&gt, &a.simple(0), 6).unwrap();
        let mut x = vec![1, 0, 0, 0];
        for i in 0..=6 {
            assert_eq!(h.dims()[i], x);
            x = apply_row(&phi, &x);
        }
        assert!(h.piece(-1).is_none());
        assert_eq!(h.piece(0).unwrap(), &a.simple(0));
    }

    #[test]
    fn ex1_two_routes_agree() {
        let a = ex1();
        let gt = preprojective_truncation(&a, 1, 4).unwrap();
        assert_eq!(gt.regular_hom_dims(4), gt.dims());
        let proj: Vec<Module<Q>> = (0..4).map(|j| a.projective(j)).collect();
        let ups = upsilon(&gt.tau, &proj, 4).unwrap();
        assert_eq!(ups.dims(), gt.dims());
    }

    #[test]
    fn ex1_generated_in_degree_one_and_associative() {
        let a = ex1();
        let gt = preprojective_truncation(&a, 1, 4).unwrap();
        assert_eq!(gt.generation_failure(), None);
        assert_eq!(gt.associativity_failure(3), None);
    }

    #[test]
    fn hat_of_regular_module_matches_truncation() {
        let a = ex1();
        let gt = preprojective_truncation(&a, 1, 3).unwrap();
        for j in 0..4 {
            let h = hat(&gt, &a.projective(j), 3).unwrap();
            assert_eq!(h.orbit.mods, gt.orbits[j].mods);
            // the module action agrees with the multiplication of the algebra
            for v in 0..4 {
                for c in 0..gt.block_dim(1, j, v) {
                    let x = unit(gt.block_dim(1, j, v), c);
                    for w in 0..4 {
                        for e in 0..gt.block_dim(1, v, w) {
                            let y = unit(gt.block_dim(1, v, w), e);
                            assert_eq!(h.act(&gt, 1, v, &x, 1, w, &y), gt.mul(1, j, v, &x, 1, w, &y));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn representation_finite_fixture_is_rejected() {
        let a = a2();
        assert!(preprojective_truncation(&a, 1, 3).is_err());
        let gt = preprojective_truncation(&a, 1, 0).unwrap();
        let ctx = build_apr(&a, 1, 0, 1).unwrap();
        assert!(hat(&gt, &ctx.tilting, 3).is_err());
    }

    #[test]
    fn ex1_graded_resolution_of_simple_is_exact_to_degree_six() {
        let a = ex1();
        let gt = preprojective_truncation(&a, 1, 7).unwrap();
        let ctx = build_apr(&a, 1, 0, 1).unwrap();
        let r = graded_resolution_of_simple(&gt, &ctx, 6).unwrap();
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.from_degree, -1);
    }

    #[test]
    fn degree_zero_slice_is_the_ungraded_resolution() {
        let a = ex1();
        let gt = preprojective_truncation(&a, 1, 1).unwrap();
        let ctx = build_apr(&a, 1, 0, 1).unwrap();
        let (mods, maps) = resolution_sequence(&a, &ctx);
        assert_eq!(hatted_exactness(&gt.tau, &mods, &maps, 0).unwrap(), None);
        assert_eq!(mods.last().unwrap(), &ctx.tau_s);
    }

    #[test]
    fn ex1_hat_tilting_for_each_m() {
        let a = ex1();
        let gt = preprojective_truncation(&a, 1, 1).unwrap();
        for m in 0..=1 {
            let ctx = build_apr(&a, 1, 0, m).unwrap();
            let r = hat_tilting_check(&gt, &ctx, 5).unwrap();
            assert!(r.passed(), "m = {m}: {r:?}");
        }
    }

    #[test]
    fn ex1_upsilon_of_tilting_module() {
        let a = ex1();
        let gt = preprojective_truncation(&a, 1, 1).unwrap();
        let ctx = build_apr(&a, 1, 0, 1).unwrap();
        let g = gamma_of(&a, &ctx).unwrap();
        let ups = upsilon(&gt.tau, &ctx.summands, 3).unwrap();
        assert_eq!(ups.dims()[0], g.dim);
        assert_eq!(ups.associativity_failure(&gt.tau, 3), None);
    }

    #[test]
    fn ex1_graded_endo_comparison_to_degree_five() {
        let a = ex1();
        let gt = preprojective_truncation(&a, 1, 5).unwrap();
        let ctx = build_apr(&a, 1, 0, 1).unwrap();
        let g = gamma_of(&a, &ctx).unwrap();
        let r = graded_endo_comparison(&gt, &ctx, &g, 5).unwrap();
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.upsilon_dims, r.gamma_hat_dims);
        assert_eq!(r.upsilon_dims[0], 8);
        assert_eq!(r.regraded_match, Some(true));
        assert!(r.pairs_checked > 0);
    }

    #[test]
    fn ex1_n_apr_iso_to_degree_six() {
        let a = ex1();
        let gt = preprojective_truncation(&a, 1, 7).unwrap();
        let ctx = build_apr(&a, 1, 0, 1).unwrap();
        let r = n_apr_iso_check(&gt, &ctx, 6).unwrap();
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.end_dims, gt.dims()[..=6].to_vec());
    }

    #[test]
    fn n_apr_iso_rejects_m_below_n() {
        let a = ex1();
        let gt = preprojective_truncation(&a, 1, 3).unwrap();
        let ctx = build_apr(&a, 1, 0, 0).unwrap();
        assert!(matches!(n_apr_iso_check(&gt, &ctx, 2), Err(Error::Precondition(_))));
    }

    #[test]
    fn ex1_ext_between_simples_is_the_double_quiver() {
        let a = ex1();
        let gt = preprojective_truncation(&a, 1, 2).unwrap();
        let table = graded_ext_table(&gt).unwrap();
        let q = a.quiver();
        for i in 0..4 {
            for j in 0..4 {
                let arrows = q.arrows.iter().filter(|x| (x.src, x.tgt) == (i, j) || (x.src, x.tgt) == (j, i)).count();
                assert_eq!(table[1][i][j], arrows);
                assert_eq!(table[0][i][j], usize::from(i == j));
                assert_eq!(table[2][i][j], usize::from(i == j));
            }
        }
        assert_eq!(cy_symmetry_failure(&table), None);
        assert!(cy_symmetry_spotcheck(&gt, 0, 1, 1).unwrap());
        assert!(cy_symmetry_spotcheck(&gt, 2, 2, 0).unwrap());
    }

    #[test]
    fn resolution_needs_room_in_the_truncation() {
        let a = ex1();
        let gt = preprojective_truncation(&a, 1, 1).unwrap();
        assert!(matches!(graded_simple_resolution(&gt, 0, 2), Err(Error::TruncationTooSmall(_))));
    }
}

//! Helpers shared by the integration tests.
#![allow(dead_code)]

use aprtilt::cli::{load, parse, Loaded};
use aprtilt::presalg::FDAlgebra;
use aprtilt::repmod::{cokernel, hom_space, image, kernel, Module, RepMap};
use aprtilt::{Field, Fp, Matrix};
use rand::rngs::StdRng;
use rand::Rng;

pub type Big = Fp<2147483647>;

pub fn fixture<F: Field>(text: &str) -> Loaded<F> {
    load(&parse(text).expect("fixture parses")).expect("fixture loads")
}

pub fn order(text: &str) -> usize {
    parse(text).unwrap().n.expect("fixture declares n")
}

pub fn random_scalar<F: Field>(rng: &mut StdRng) -> F {
    F::from_i64(rng.gen_range(-3..=3))
}

/// A random linear combination of `basis`.
pub fn random_map<F: Field>(rng: &mut StdRng, m: &Module<F>, n: &Module<F>, basis: &[RepMap<F>]) -> RepMap<F> {
    let mut f = RepMap::zero(m, n);
    for b in basis {
        f = f.add(&b.scale(&random_scalar(rng)));
    }
    f
}

fn random_projective_sum<F: Field>(alg: &FDAlgebra<F>, rng: &mut StdRng) -> Module<F> {
    let k = rng.gen_range(1..=2);
    let parts: Vec<Module<F>> = (0..k).map(|_| alg.projective(rng.gen_range(0..alg.num_vertices()))).collect();
    Module::sum_of(alg.quiver(), &parts)
}

/// Kernel, image or cokernel of a random map between sums of projectives.
pub fn random_module<F: Field>(alg: &FDAlgebra<F>, rng: &mut StdRng) -> Module<F> {
    let q = alg.quiver();
    let p = random_projective_sum(alg, rng);
    let p2 = random_projective_sum(alg, rng);
    let f = random_map(rng, &p, &p2, &hom_space(alg, &p, &p2));
    let m = match rng.gen_range(0..3) {
        0 => cokernel(q, &p2, &f).0,
        1 => image(q, &p2, &f).0,
        _ => kernel(q, &p, &f).0,
    };
    if m.is_zero() {
        alg.simple(rng.gen_range(0..alg.num_vertices()))
    } else {
        m
    }
}

/// `g` with `f = inc ∘ g`, for `inc` injective with image containing that of `f`.
pub fn corestrict<F: Field>(f: &RepMap<F>, inc: &RepMap<F>) -> RepMap<F> {
    let comps = f
        .comps
        .iter()
        .zip(&inc.comps)
        .map(|(fw, iw)| {
            if iw.cols() == 0 || fw.cols() == 0 {
                Matrix::zeros(iw.cols(), fw.cols())
            } else {
                iw.solve_matrix(fw).expect("image contains the image of f")
            }
        })
        .collect();
    RepMap { comps }
}

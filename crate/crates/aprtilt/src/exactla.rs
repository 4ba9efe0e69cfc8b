//! Exact linear algebra over the rationals and prime fields.
//!
//! Row reduction always takes the leftmost pivot column and the first row with
//! a nonzero entry in it, so every result is reproducible.

use std::fmt;
use std::hash::Hash;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::error::{Error, Result};

/// An exact field.
pub trait Field:
    Clone + PartialEq + Eq + Hash + fmt::Debug + fmt::Display + Send + Sync + 'static
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplicative inverse; panics on zero.
    fn inv(&self) -> Self;
    fn from_i64(v: i64) -> Self;
    fn characteristic() -> u64;
    fn name() -> String;
    /// Parses `a` or `a/b`.
    fn parse(s: &str) -> Option<Self>;
    /// Distinct roots in the field of the polynomial with coefficients `c`
    /// (lowest degree first).
    fn roots(c: &[Self]) -> Vec<Self>;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }
    fn div(&self, o: &Self) -> Self {
        self.mul(&o.inv())
    }
    /// `self += a * b`
    fn add_mul(&mut self, a: &Self, b: &Self) {
        if !a.is_zero() && !b.is_zero() {
            *self = self.add(&a.mul(b));
        }
    }
}

/// Rational numbers with arbitrary-precision numerator and denominator.
pub type Rational = BigRational;

impl Field for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Self {
        assert!(!Zero::is_zero(self), "inverse of zero");
        self.recip()
    }
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
    fn characteristic() -> u64 {
        0
    }
    fn name() -> String {
        "Q".into()
    }
    fn parse(s: &str) -> Option<Self> {
        let s = s.trim();
        if let Some((a, b)) = s.split_once('/') {
            let a: BigInt = a.trim().parse().ok()?;
            let b: BigInt = b.trim().parse().ok()?;
            if b.is_zero() {
                return None;
            }
            Some(BigRational::new(a, b))
        } else {
            Some(BigRational::from_integer(s.parse().ok()?))
        }
    }
    fn add_mul(&mut self, a: &Self, b: &Self) {
        if !Zero::is_zero(a) && !Zero::is_zero(b) {
            *self += a * b;
        }
    }
    fn roots(c: &[Self]) -> Vec<Self> {
        rational_roots(c)
    }
}

fn rational_roots(c: &[BigRational]) -> Vec<BigRational> {
    let mut c: Vec<BigRational> = c.to_vec();
    while c.last().is_some_and(Zero::is_zero) {
        c.pop();
    }
    if c.len() <= 1 {
        return vec![];
    }
    let mut out = vec![];
    if Zero::is_zero(&c[0]) {
        out.push(<BigRational as Zero>::zero());
        while !c.is_empty() && Zero::is_zero(&c[0]) {
            c.remove(0);
        }
        if c.len() <= 1 {
            return out;
        }
    }
    let mut den = BigInt::one();
    for x in &c {
        den = den.lcm(x.denom());
    }
    let ints: Vec<BigInt> = c.iter().map(|x| (x * &den).to_integer()).collect();
    let a0 = ints[0].abs();
    let an = ints.last().unwrap().abs();
    let (Some(ps), Some(qs)) = (small_divisors(&a0), small_divisors(&an)) else {
        return out;
    };
    let mut cands: Vec<BigRational> = vec![];
    for p in &ps {
        for q in &qs {
            for s in [1i64, -1] {
                let r = BigRational::new(BigInt::from(*p) * s, BigInt::from(*q));
                if !cands.contains(&r) {
                    cands.push(r);
                }
            }
        }
    }
    for r in cands {
        if Zero::is_zero(&poly_eval(&c, &r)) {
            out.push(r);
        }
    }
    out.sort();
    out
}

fn small_divisors(n: &BigInt) -> Option<Vec<u64>> {
    let n = n.to_u64()?;
    if n > 1_000_000_000_000 {
        return None;
    }
    let mut d = vec![];
    let mut i = 1u64;
    while i * i <= n {
        if n % i == 0 {
            d.push(i);
            if i * i != n {
                d.push(n / i);
            }
        }
        i += 1;
    }
    d.sort();
    Some(d)
}

/// Residues modulo the prime `P`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Fp<const P: u64>(pub u64);

impl<const P: u64> Fp<P> {
    pub fn new(v: i64) -> Self {
        Fp(v.rem_euclid(P as i64) as u64)
    }
    fn pow(self, mut e: u64) -> Self {
        let mut b = self;
        let mut r = Fp(1 % P);
        while e > 0 {
            if e & 1 == 1 {
                r = Field::mul(&r, &b);
            }
            b = Field::mul(&b, &b);
            e >>= 1;
        }
        r
    }
}

impl<const P: u64> fmt::Debug for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> fmt::Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> Field for Fp<P> {
    fn zero() -> Self {
        Fp(0)
    }
    fn one() -> Self {
        Fp(1 % P)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
    fn add(&self, o: &Self) -> Self {
        let s = self.0 + o.0;
        Fp(if s >= P { s - P } else { s })
    }
    fn sub(&self, o: &Self) -> Self {
        Fp(if self.0 >= o.0 { self.0 - o.0 } else { self.0 + P - o.0 })
    }
    fn mul(&self, o: &Self) -> Self {
        if P < 1 << 32 {
            Fp((self.0 * o.0) % P)
        } else {
            Fp(((self.0 as u128 * o.0 as u128) % P as u128) as u64)
        }
    }
    fn neg(&self) -> Self {
        Fp(if self.0 == 0 { 0 } else { P - self.0 })
    }
    fn inv(&self) -> Self {
        assert!(self.0 != 0, "inverse of zero");
        self.pow(P - 2)
    }
    fn from_i64(v: i64) -> Self {
        Fp::new(v)
    }
    fn characteristic() -> u64 {
        P
    }
    fn name() -> String {
        format!("F{}", P)
    }
    fn parse(s: &str) -> Option<Self> {
        let s = s.trim();
        if let Some((a, b)) = s.split_once('/') {
            let a = Fp::<P>::new(a.trim().parse::<i64>().ok()?);
            let b = Fp::<P>::new(b.trim().parse::<i64>().ok()?);
            if b.0 == 0 {
                return None;
            }
            Some(a.div(&b))
        } else {
            Some(Fp::new(s.parse::<i64>().ok()?))
        }
    }
    fn add_mul(&mut self, a: &Self, b: &Self) {
        if P < 1 << 31 {
            self.0 = (self.0 + a.0 * b.0) % P;
        } else {
            self.0 = ((self.0 as u128 + a.0 as u128 * b.0 as u128) % P as u128) as u64;
        }
    }
    fn roots(c: &[Self]) -> Vec<Self> {
        fp_roots(c)
    }
}

fn fp_roots<const P: u64>(c: &[Fp<P>]) -> Vec<Fp<P>> {
    let f = poly_trim(c.to_vec());
    if f.len() <= 1 {
        return vec![];
    }
    if P <= 200_000 {
        return (0..P).map(Fp).filter(|x| poly_eval(&f, x).is_zero()).collect();
    }
    // gcd with x^P - x isolates the product of the distinct linear factors
    let xp = poly_powmod(&[Fp(0), Fp(1)], P, &f);
    let mut g = xp;
    if g.len() < 2 {
        g.resize(2, Fp(0));
    }
    g[1] = g[1].sub(&Fp(1));
    let g = poly_gcd(&poly_trim(g), &f);
    let mut out = vec![];
    split_linear(&g, &mut out, 1);
    out.sort_by_key(|x| x.0);
    out
}

fn split_linear<const P: u64>(g: &[Fp<P>], out: &mut Vec<Fp<P>>, mut delta: u64) {
    let deg = g.len().saturating_sub(1);
    if deg == 0 {
        return;
    }
    if deg == 1 {
        out.push(g[0].neg().div(&g[1]));
        return;
    }
    loop {
        let h = poly_powmod(&[Fp(delta % P), Fp(1)], (P - 1) / 2, g);
        let mut h = h;
        if h.is_empty() {
            h.push(Fp(0));
        }
        h[0] = h[0].sub(&Fp(1));
        let d = poly_gcd(&poly_trim(h), g);
        delta += 1;
        let dd = d.len().saturating_sub(1);
        if dd > 0 && dd < deg {
            let (q, _) = poly_divrem(g, &d);
            split_linear(&d, out, delta);
            split_linear(&q, out, delta);
            return;
        }
    }
}

/// Evaluates a polynomial (lowest coefficient first).
pub fn poly_eval<F: Field>(c: &[F], x: &F) -> F {
    let mut r = F::zero();
    for a in c.iter().rev() {
        r = r.mul(x).add(a);
    }
    r
}

fn poly_trim<F: Field>(mut c: Vec<F>) -> Vec<F> {
    while c.last().is_some_and(|x| x.is_zero()) {
        c.pop();
    }
    c
}

fn poly_divrem<F: Field>(a: &[F], b: &[F]) -> (Vec<F>, Vec<F>) {
    let b = poly_trim(b.to_vec());
    let mut r = poly_trim(a.to_vec());
    if r.len() < b.len() {
        return (vec![], r);
    }
    let lead = b.last().unwrap().inv();
    let mut q = vec![F::zero(); r.len() - b.len() + 1];
    while r.len() >= b.len() && !r.is_empty() {
        let shift = r.len() - b.len();
        let c = r.last().unwrap().mul(&lead);
        for (i, bi) in b.iter().enumerate() {
            r[shift + i] = r[shift + i].sub(&c.mul(bi));
        }
        q[shift] = c;
        r = poly_trim(r);
    }
    (q, r)
}

fn poly_gcd<F: Field>(a: &[F], b: &[F]) -> Vec<F> {
    let mut a = poly_trim(a.to_vec());
    let mut b = poly_trim(b.to_vec());
    while !b.is_empty() {
        let (_, r) = poly_divrem(&a, &b);
        a = b;
        b = r;
    }
    if let Some(l) = a.last().cloned() {
        let li = l.inv();
        for x in a.iter_mut() {
            *x = x.mul(&li);
        }
    }
    a
}

fn poly_mulmod<F: Field>(a: &[F], b: &[F], m: &[F]) -> Vec<F> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut p = vec![F::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            p[i + j].add_mul(x, y);
        }
    }
    poly_divrem(&p, m).1
}

fn poly_powmod<F: Field>(base: &[F], mut e: u64, m: &[F]) -> Vec<F> {
    let mut r = poly_divrem(&[F::one()], m).1;
    let mut b = poly_divrem(base, m).1;
    while e > 0 {
        if e & 1 == 1 {
            r = poly_mulmod(&r, &b, m);
        }
        b = poly_mulmod(&b, &b, m);
        e >>= 1;
    }
    r
}

/// Dense matrix stored row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<F: Field> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: Field> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self[(i, j)])?;
            }
        }
        write!(f, "] ({}x{})", self.rows, self.cols)
    }
}

impl<F: Field> std::ops::Index<(usize, usize)> for Matrix<F> {
    type Output = F;
    fn index(&self, (i, j): (usize, usize)) -> &F {
        &self.data[i * self.cols + j]
    }
}

impl<F: Field> std::ops::IndexMut<(usize, usize)> for Matrix<F> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut F {
        &mut self.data[i * self.cols + j]
    }
}

/// Result of a row reduction.
#[derive(Clone, Debug)]
pub struct Rref<F: Field> {
    pub mat: Matrix<F>,
    pub pivots: Vec<usize>,
}

/// A cokernel `K^r / im(B)` with a projection onto it and a section back.
#[derive(Clone, Debug)]
pub struct Cokernel<F: Field> {
    /// `dim x r`
    pub proj: Matrix<F>,
    /// `r x dim`, with `proj * section = id`
    pub section: Matrix<F>,
}

impl<F: Field> Cokernel<F> {
    pub fn dim(&self) -> usize {
        self.proj.rows()
    }
}

impl<F: Field> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![F::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = F::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> F) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<F>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend(row);
        }
        Matrix { rows: r, cols: c, data }
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| F::from_i64(x)).collect()).collect())
    }

    /// Matrix whose columns are the given vectors; `rows` is needed when empty.
    pub fn from_columns(rows: usize, cols: &[Vec<F>]) -> Self {
        let mut m = Self::zeros(rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.len(), rows);
            for (i, x) in c.iter().enumerate() {
                m[(i, j)] = x.clone();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<F> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<F>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.cols, o.rows, "dimension mismatch in product");
        let mut out = Self::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self.data[i * self.cols + k];
                if a.is_zero() {
                    continue;
                }
                let orow = &o.data[k * o.cols..(k + 1) * o.cols];
                let outrow = &mut out.data[i * o.cols..(i + 1) * o.cols];
                for (x, b) in outrow.iter_mut().zip(orow) {
                    x.add_mul(a, b);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[F]) -> Vec<F> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut s = F::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    s.add_mul(a, b);
                }
                s
            })
            .collect()
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a.add(b)).collect(),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a.sub(b)).collect(),
        }
    }

    pub fn scale(&self, c: &F) -> Self {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| a.mul(c)).collect() }
    }

    /// `self += c * o`
    pub fn add_scaled(&mut self, c: &F, o: &Self) {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        if c.is_zero() {
            return;
        }
        for (a, b) in self.data.iter_mut().zip(&o.data) {
            a.add_mul(c, b);
        }
    }

    pub fn hstack(&self, o: &Self) -> Self {
        assert_eq!(self.rows, o.rows);
        Self::from_fn(self.rows, self.cols + o.cols, |i, j| {
            if j < self.cols {
                self[(i, j)].clone()
            } else {
                o[(i, j - self.cols)].clone()
            }
        })
    }

    pub fn vstack(&self, o: &Self) -> Self {
        assert_eq!(self.cols, o.cols);
        let mut data = self.data.clone();
        data.extend(o.data.iter().cloned());
        Matrix { rows: self.rows + o.rows, cols: self.cols, data }
    }

    pub fn select_columns(&self, idx: &[usize]) -> Self {
        Self::from_fn(self.rows, idx.len(), |i, j| self[(i, idx[j])].clone())
    }

    pub fn select_rows(&self, idx: &[usize]) -> Self {
        Self::from_fn(idx.len(), self.cols, |i, j| self[(idx[i], j)].clone())
    }

    /// Copies `b` into the block starting at `(r0, c0)`.
    pub fn set_block(&mut self, r0: usize, c0: usize, b: &Self) {
        for i in 0..b.rows {
            for j in 0..b.cols {
                self[(r0 + i, c0 + j)] = b[(i, j)].clone();
            }
        }
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |i, j| self[(r0 + i, c0 + j)].clone())
    }

    /// Block-diagonal sum.
    pub fn block_diag(blocks: &[Self]) -> Self {
        let r = blocks.iter().map(|b| b.rows).sum();
        let c = blocks.iter().map(|b| b.cols).sum();
        let mut m = Self::zeros(r, c);
        let (mut i, mut j) = (0, 0);
        for b in blocks {
            m.set_block(i, j, b);
            i += b.rows;
            j += b.cols;
        }
        m
    }

    /// Reduced row echelon form.
    pub fn rref(&self) -> Rref<F> {
        let mut m = self.clone();
        let pivots = m.rref_in_place(self.cols);
        Rref { mat: m, pivots }
    }

    /// Row reduces in place, choosing pivots only among the first `limit`
    /// columns.  Returns the pivot columns.
    pub fn rref_in_place(&mut self, limit: usize) -> Vec<usize> {
        let (rows, cols) = (self.rows, self.cols);
        let mut pivots = vec![];
        let mut r = 0;
        for c in 0..limit.min(cols) {
            if r == rows {
                break;
            }
            let Some(p) = (r..rows).find(|&i| !self.data[i * cols + c].is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..cols {
                    self.data.swap(p * cols + j, r * cols + j);
                }
            }
            let inv = self.data[r * cols + c].inv();
            if !inv.is_one() {
                for j in c..cols {
                    let v = self.data[r * cols + j].mul(&inv);
                    self.data[r * cols + j] = v;
                }
            }
            let prow: Vec<(usize, F)> = (c..cols)
                .filter_map(|j| {
                    let v = &self.data[r * cols + j];
                    (!v.is_zero()).then(|| (j, v.clone()))
                })
                .collect();
            for i in 0..rows {
                if i == r {
                    continue;
                }
                let f = self.data[i * cols + c].clone();
                if f.is_zero() {
                    continue;
                }
                let f = f.neg();
                let row = &mut self.data[i * cols..(i + 1) * cols];
                for (j, y) in &prow {
                    row[*j].add_mul(&f, y);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.rref().pivots.len()
    }

    /// Columns form a basis of the null space.
    pub fn kernel_basis(&self) -> Self {
        self.kernel_with_free().0
    }

    /// Kernel basis together with the free columns; the rows of the basis at
    /// those indices form an identity matrix.
    pub fn kernel_with_free(&self) -> (Self, Vec<usize>) {
        let Rref { mat, pivots } = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let free: Vec<usize> = (0..self.cols).filter(|&c| !is_pivot[c]).collect();
        let mut k = Self::zeros(self.cols, free.len());
        for (j, &f) in free.iter().enumerate() {
            k[(f, j)] = F::one();
            for (r, &p) in pivots.iter().enumerate() {
                k[(p, j)] = mat[(r, f)].neg();
            }
        }
        (k, free)
    }

    /// Rows form a basis of the left null space `{y : y M = 0}`.
    pub fn left_kernel_basis(&self) -> Self {
        self.transpose().kernel_basis().transpose()
    }

    /// Solves `M x = b`, taking free variables zero.
    pub fn solve(&self, b: &[F]) -> Option<Vec<F>> {
        assert_eq!(b.len(), self.rows, "right-hand side length");
        let aug = self.hstack(&Self::from_columns(self.rows, &[b.to_vec()]));
        let Rref { mat, pivots } = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![F::zero(); self.cols];
        for (r, &p) in pivots.iter().enumerate() {
            x[p] = mat[(r, self.cols)].clone();
        }
        Some(x)
    }

    /// Solves `M X = B` column by column in one reduction.
    pub fn solve_matrix(&self, b: &Self) -> Option<Self> {
        assert_eq!(b.rows, self.rows);
        let mut aug = self.hstack(b);
        let pivots = aug.rref_in_place(self.cols);
        let rank = pivots.len();
        for i in rank..self.rows {
            if aug.row(i)[self.cols..].iter().any(|x| !x.is_zero()) {
                return None;
            }
        }
        let mut x = Self::zeros(self.cols, b.cols);
        for (r, &p) in pivots.iter().enumerate() {
            for j in 0..b.cols {
                x[(p, j)] = aug[(r, self.cols + j)].clone();
            }
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<Self> {
        if !self.is_square() {
            return None;
        }
        let x = self.solve_matrix(&Self::identity(self.rows))?;
        if self.rank() == self.rows {
            Some(x)
        } else {
            None
        }
    }

    /// Column-reduced basis of the column space (canonical for the span).
    pub fn column_space(&self) -> Self {
        let Rref { mat, pivots } = self.transpose().rref();
        mat.select_rows(&(0..pivots.len()).collect::<Vec<_>>()).transpose()
    }

    /// Whether every column of `o` lies in the column space of `self`.
    pub fn contains_columns(&self, o: &Self) -> bool {
        self.hstack(o).rank() == self.rank()
    }

    /// Cokernel of `self` viewed as a map into `K^rows`.
    pub fn cokernel(&self) -> Cokernel<F> {
        let r = self.rows;
        let Rref { mat, pivots } = self.transpose().rref();
        let mut is_pivot = vec![false; r];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let non: Vec<usize> = (0..r).filter(|&i| !is_pivot[i]).collect();
        let mut proj = Self::zeros(non.len(), r);
        for (k, &n) in non.iter().enumerate() {
            proj[(k, n)] = F::one();
            for (row, &p) in pivots.iter().enumerate() {
                proj[(k, p)] = mat[(row, n)].neg();
            }
        }
        let mut section = Self::zeros(r, non.len());
        for (k, &n) in non.iter().enumerate() {
            section[(n, k)] = F::one();
        }
        Cokernel { proj, section }
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut r = Self::identity(self.rows);
        for _ in 0..e {
            r = r.mul(self);
        }
        r
    }

    pub fn is_nilpotent(&self) -> bool {
        self.pow(self.rows).is_zero()
    }

    pub fn trace(&self) -> F {
        let mut t = F::zero();
        for i in 0..self.rows.min(self.cols) {
            t = t.add(&self[(i, i)]);
        }
        t
    }

    fn flatten(&self) -> Vec<F> {
        self.data.clone()
    }

    /// Minimal polynomial, monic, lowest coefficient first.
    pub fn min_poly(&self) -> Vec<F> {
        assert!(self.is_square());
        let n = self.rows;
        let mut powers = vec![Self::identity(n).flatten()];
        let mut cur = Self::identity(n);
        loop {
            cur = cur.mul(self);
            let k = powers.len();
            let a = Self::from_columns(n * n, &powers);
            if let Some(c) = a.solve(&cur.flatten()) {
                let mut p: Vec<F> = c.iter().map(|x| x.neg()).collect();
                p.push(F::one());
                return p;
            }
            powers.push(cur.flatten());
            assert!(k <= n, "minimal polynomial degree exceeds dimension");
        }
    }
}

/// Column space intersection.
pub fn intersect_columns<F: Field>(a: &Matrix<F>, b: &Matrix<F>) -> Matrix<F> {
    assert_eq!(a.rows(), b.rows());
    let k = a.hstack(&b.scale(&F::one().neg())).kernel_basis();
    let top = k.block(0, 0, a.cols(), k.cols());
    a.mul(&top).column_space()
}

/// Basis (as matrices) of the unital algebra generated by `gens` inside
/// `End(K^dim)`.
pub fn algebra_span<F: Field>(gens: &[Matrix<F>], dim: usize) -> Vec<Matrix<F>> {
    let mut basis: Vec<Matrix<F>> = vec![];
    let mut ech = Matrix::<F>::zeros(0, dim * dim);
    let push = |m: &Matrix<F>, basis: &mut Vec<Matrix<F>>, ech: &mut Matrix<F>| -> bool {
        let row = Matrix::from_rows(vec![m.flatten()]);
        let cand = ech.vstack(&row);
        if cand.rank() > ech.rows() {
            *ech = cand.rref().mat.select_rows(&(0..ech.rows() + 1).collect::<Vec<_>>());
            basis.push(m.clone());
            true
        } else {
            false
        }
    };
    push(&Matrix::identity(dim), &mut basis, &mut ech);
    for g in gens {
        push(g, &mut basis, &mut ech);
    }
    let mut i = 0;
    while i < basis.len() {
        let gl: Vec<Matrix<F>> = basis.clone();
        for g in gens {
            let p = gl[i].mul(g);
            push(&p, &mut basis, &mut ech);
        }
        i += 1;
    }
    basis
}

/// Restriction of `y` to the image of the idempotent `e`, in the basis `b`
/// of that image, together with the coordinate map.
fn restrict<F: Field>(y: &Matrix<F>, b: &Matrix<F>, coord: &Matrix<F>) -> Matrix<F> {
    coord.mul(&y.mul(b))
}

/// Splits the identity into primitive orthogonal idempotents of the algebra
/// generated by `gens` in `End(K^dim)`.
pub fn split_idempotent_search<F: Field>(gens: &[Matrix<F>], dim: usize) -> Result<Vec<Matrix<F>>> {
    if dim == 0 {
        return Ok(vec![]);
    }
    let alg = algebra_span(gens, dim);
    let mut todo = vec![Matrix::identity(dim)];
    let mut done = vec![];
    while let Some(e) = todo.pop() {
        match split_once(&alg, &e)? {
            None => done.push(e),
            Some(f) => {
                let g = e.sub(&f);
                todo.push(g);
                todo.push(f);
            }
        }
    }
    done.sort_by_key(|e| {
        let r = e.rank();
        let first = (0..e.rows()).find(|&i| !e.row(i).iter().all(|x| x.is_zero())).unwrap_or(0);
        (first, r)
    });
    Ok(done)
}

/// Whether the algebra spanned by `basis` (matrices on an `r`-dimensional
/// space, containing the identity) is local with residue field the base field.
pub fn is_local_algebra<F: Field>(basis: &[Matrix<F>]) -> Result<bool> {
    let Some(first) = basis.first() else { return Ok(false) };
    let r = first.rows();
    if r == 0 {
        return Ok(false);
    }
    let mut nil = vec![];
    for y in basis {
        let mp = y.min_poly();
        let roots = F::roots(&mp);
        if roots.len() > 1 {
            return Ok(false);
        }
        if roots.is_empty() {
            return Err(Error::FieldExtensionNeeded("endomorphism without eigenvalue in the base field".into()));
        }
        let n = y.sub(&Matrix::identity(r).scale(&roots[0]));
        if !n.is_nilpotent() {
            return Err(Error::FieldExtensionNeeded("eigenvalue outside the base field".into()));
        }
        nil.push(n);
    }
    let span = span_basis(&nil);
    if span.len() + 1 != span_basis(basis).len() {
        return Ok(false);
    }
    // the nilpotent parts must form a nilpotent ideal
    let mut power = span.clone();
    for _ in 0..=r {
        if power.is_empty() {
            return Ok(true);
        }
        let mut next = vec![];
        for a in &power {
            for b in &span {
                next.push(a.mul(b));
            }
        }
        let all = span_basis(&next);
        if all.iter().any(|m| !span_contains(&span, m)) {
            return Ok(false);
        }
        power = all;
    }
    Ok(power.is_empty())
}

fn span_basis<F: Field>(ms: &[Matrix<F>]) -> Vec<Matrix<F>> {
    let mut out: Vec<Matrix<F>> = vec![];
    let mut rows: Vec<Vec<F>> = vec![];
    for m in ms {
        if m.is_zero() {
            continue;
        }
        let mut cand = rows.clone();
        cand.push(m.flatten());
        if Matrix::from_rows(cand.clone()).rank() > rows.len() {
            rows = cand;
            out.push(m.clone());
        }
    }
    out
}

fn span_contains<F: Field>(span: &[Matrix<F>], m: &Matrix<F>) -> bool {
    if m.is_zero() {
        return true;
    }
    let mut rows: Vec<Vec<F>> = span.iter().map(|s| s.flatten()).collect();
    let before = Matrix::from_rows(rows.clone()).rank();
    rows.push(m.flatten());
    Matrix::from_rows(rows).rank() == before
}

fn split_once<F: Field>(alg: &[Matrix<F>], e: &Matrix<F>) -> Result<Option<Matrix<F>>> {
    let b = e.column_space();
    let r = b.cols();
    let coord = b.solve_matrix(e).expect("idempotent image");
    let local: Vec<Matrix<F>> = span_basis(&alg.iter().map(|a| e.mul(a).mul(e)).collect::<Vec<_>>())
        .iter()
        .map(|y| restrict(y, &b, &coord))
        .collect();
    let mut cands: Vec<Matrix<F>> = local.clone();
    for i in 0..local.len() {
        for j in 0..local.len() {
            cands.push(local[i].mul(&local[j]));
        }
    }
    for i in 0..local.len() {
        for j in i + 1..local.len() {
            for c in 1..=3 {
                let mut m = local[i].clone();
                m.add_scaled(&F::from_i64(c), &local[j]);
                cands.push(m);
            }
        }
    }
    let mut rng = StdRng::seed_from_u64(0x9e37_79b9);
    for _ in 0..8 {
        let mut m = Matrix::zeros(r, r);
        for y in &local {
            m.add_scaled(&F::from_i64(rng.gen_range(-3..=3)), y);
        }
        cands.push(m);
    }
    for y in &cands {
        let roots = F::roots(&y.min_poly());
        let id = Matrix::identity(r);
        for lam in &roots {
            let n = y.sub(&id.scale(lam)).pow(r);
            let ker = n.kernel_basis();
            if ker.cols() > 0 && ker.cols() < r {
                // Fitting decomposition: project onto the generalized eigenspace
                let im = n.column_space();
                let basis = ker.hstack(&im);
                let inv = basis.inverse().expect("Fitting decomposition");
                let mut d = Matrix::zeros(r, r);
                for i in 0..ker.cols() {
                    d[(i, i)] = F::one();
                }
                let p = basis.mul(&d).mul(&inv);
                return Ok(Some(b.mul(&p).mul(&coord)));
            }
        }
    }
    if is_local_algebra(&local)? {
        return Ok(None);
    }
    Err(Error::FieldExtensionNeeded("semisimple quotient does not split over the base field".into()))
}

//! The `.alg` file format, the shipped fixtures and the commands behind the
//! `aprtilt` binary.
//!
//! Every command returns a [`Report`].  The binary prints [`Report::render`]
//! and exits with [`Report::exit_code`]; input errors exit with 2.

use std::fmt;

use sha2::{Digest, Sha256};

use crate::apr::{apr_admissible, build_apr, gamma_of, theorem_check_nri, verify_tilting, AprContext, EndoPresentation};
use crate::error::Error;
use crate::exactla::{Field, Fp, Rational};
use crate::homalg::global_dimension;
use crate::preproj::{
    graded_endo_comparison, graded_ext_table, graded_resolution_of_simple, hat_tilting_check, n_apr_iso_check,
    cy_symmetry_failure, preprojective_truncation,
};
use crate::presalg::{as_fd_algebra, degreewise_basis, FDAlgebra, Presentation};
use crate::qp::{
    check_cut, compare_preproj_jacobian, jacobian_presentation, parse_potential, qp_mutate, truncated_jacobian, Cut,
    Mutation, Potential, REDUCTION_PASSES,
};
use crate::quiver::{parse_path_sum, Quiver};

pub const EXAMPLE1: &str = include_str!("../fixtures/example1.alg");
pub const EXAMPLE2: &str = include_str!("../fixtures/example2.alg");
pub const EXAMPLE3: &str = include_str!("../fixtures/example3.alg");
pub const A2: &str = include_str!("../fixtures/a2.alg");

pub const DEFAULT_DEPTH: usize = 8;
pub const DEFAULT_DEGREE: usize = 5;
/// Primes accepted by `field F <p>`.
pub const SUPPORTED_PRIMES: [u64; 6] = [2, 3, 5, 7, 32003, 2147483647];

const LOEWY_BOUND: usize = 64;
const GLDIM_BOUND: usize = 8;

type Big = Fp<2147483647>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    Parse { line: usize, column: usize, message: String },
    Input(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Parse { line, column, message } => write!(f, "line {line}, column {column}: {message}"),
            CliError::Input(m) => write!(f, "{m}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Input(e.to_string())
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum FieldDecl {
    #[default]
    Rational,
    Prime(u64),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArrowDecl {
    pub name: String,
    pub src: String,
    pub tgt: String,
    pub deg: Option<usize>,
}

/// A parsed `.alg` file.  Relations and the potential are kept as text; their
/// names are checked against the quiver at parse time.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct AlgebraFile {
    pub field: FieldDecl,
    pub vertices: Vec<String>,
    pub arrows: Vec<ArrowDecl>,
    pub relations: Vec<String>,
    pub potential: Option<String>,
    pub cut: Option<Vec<String>>,
    pub n: Option<usize>,
}

fn perr(line: usize, column: usize, message: impl Into<String>) -> CliError {
    CliError::Parse { line, column, message: message.into() }
}

/// 1-based column of `sub` inside `line`; `sub` must be a subslice.
fn column(line: &str, sub: &str) -> usize {
    let off = (sub.as_ptr() as usize).saturating_sub(line.as_ptr() as usize).min(line.len());
    line[..off].chars().count() + 1
}

fn valid_name(s: &str) -> bool {
    !s.is_empty()
        && !s.starts_with(|c: char| c.is_ascii_digit())
        && !s.starts_with("e_")
        && !s.chars().any(|c| c.is_whitespace() || "*+-:#".contains(c))
}

/// Parses the line-oriented format:
///
/// ```text
/// field Q | field F <p>
/// vertices 1 2 3 4
/// arrow <name> : <src> -> <tgt> [deg <d>]
/// relation <path sum>
/// potential <cycle sum>      (or: W = <cycle sum>)
/// cut <names...>
/// n <int>
/// # comment
/// ```
pub fn parse(text: &str) -> CliResult<AlgebraFile> {
    let mut f = AlgebraFile::default();
    let mut seen = std::collections::HashSet::new();
    let mut rel_at = vec![];
    let mut pot_at = None;
    let mut cut_at = None;
    for (i, raw) in text.lines().enumerate() {
        let ln = i + 1;
        let line = raw.split('#').next().unwrap_or("");
        let body = line.trim();
        if body.is_empty() {
            continue;
        }
        let kw = body.split_whitespace().next().unwrap_or("");
        let rest = body[kw.len()..].trim();
        let kcol = column(raw, body);
        let rcol = if rest.is_empty() { kcol + kw.len() } else { column(raw, rest) };
        let single = ["field", "vertices", "potential", "W", "cut", "n"];
        if single.contains(&kw) {
            let key = if kw == "W" { "potential" } else { kw };
            if !seen.insert(key) {
                return Err(perr(ln, kcol, format!("'{key}' declared twice")));
            }
        }
        match kw {
            "field" => {
                let toks: Vec<&str> = rest.split_whitespace().collect();
                f.field = match toks.as_slice() {
                    ["Q"] => FieldDecl::Rational,
                    ["F", p] => {
                        let pc = column(raw, p);
                        let p: u64 = p.parse().map_err(|_| perr(ln, pc, format!("bad prime '{p}'")))?;
                        if !SUPPORTED_PRIMES.contains(&p) {
                            return Err(perr(ln, pc, format!("unsupported prime {p}; supported: {SUPPORTED_PRIMES:?}")));
                        }
                        FieldDecl::Prime(p)
                    }
                    _ => return Err(perr(ln, rcol, "expected 'Q' or 'F <p>'")),
                };
            }
            "vertices" => {
                for v in rest.split_whitespace() {
                    if f.vertices.iter().any(|w| w == v) {
                        return Err(perr(ln, column(raw, v), format!("duplicate vertex {v}")));
                    }
                    if v.contains(|c: char| "*+-:#".contains(c)) {
                        return Err(perr(ln, column(raw, v), format!("bad vertex label '{v}'")));
                    }
                    f.vertices.push(v.to_string());
                }
                if f.vertices.is_empty() {
                    return Err(perr(ln, rcol, "no vertices listed"));
                }
            }
            "arrow" => f.arrows.push(parse_arrow(raw, rest, ln, rcol, &f)?),
            "relation" => {
                if rest.is_empty() {
                    return Err(perr(ln, rcol, "empty relation"));
                }
                rel_at.push((ln, rcol));
                f.relations.push(rest.to_string());
            }
            "potential" | "W" => {
                let (text, col) = if kw == "W" {
                    let t = rest.strip_prefix('=').ok_or_else(|| perr(ln, rcol, "expected 'W = ...'"))?.trim();
                    (t, if t.is_empty() { rcol + 1 } else { column(raw, t) })
                } else {
                    (rest, rcol)
                };
                if text.is_empty() {
                    return Err(perr(ln, col, "empty potential"));
                }
                pot_at = Some((ln, col));
                f.potential = Some(text.to_string());
            }
            "cut" => {
                cut_at = Some((ln, rcol));
                f.cut = Some(rest.split_whitespace().map(str::to_string).collect());
            }
            "n" => {
                f.n = Some(rest.parse().map_err(|_| perr(ln, rcol, format!("bad integer '{rest}'")))?);
            }
            _ => return Err(perr(ln, kcol, format!("unknown keyword '{kw}'"))),
        }
    }
    if f.vertices.is_empty() {
        return Err(perr(1, 1, "no 'vertices' line"));
    }
    let q = f.quiver();
    for (r, &(ln, col)) in f.relations.iter().zip(&rel_at) {
        parse_path_sum::<Rational>(&q, r).map_err(|e| perr(ln, col, e.to_string()))?;
    }
    if let (Some(w), Some((ln, col))) = (&f.potential, pot_at) {
        parse_potential::<Rational>(&q, w).map_err(|e| perr(ln, col, e.to_string()))?;
    }
    if let (Some(c), Some((ln, col))) = (&f.cut, cut_at) {
        let names: Vec<&str> = c.iter().map(String::as_str).collect();
        Cut::from_names(&q, &names).map_err(|e| perr(ln, col, e.to_string()))?;
        if f.potential.is_none() {
            return Err(perr(ln, col, "a cut needs a potential"));
        }
    }
    Ok(f)
}

fn parse_arrow(raw: &str, rest: &str, ln: usize, rcol: usize, f: &AlgebraFile) -> CliResult<ArrowDecl> {
    let (name, rhs) = rest.split_once(':').ok_or_else(|| perr(ln, rcol, "expected 'arrow <name> : <src> -> <tgt>'"))?;
    let name = name.trim();
    if !valid_name(name) {
        return Err(perr(ln, rcol, format!("bad arrow name '{name}'")));
    }
    if f.arrows.iter().any(|a| a.name == name) {
        return Err(perr(ln, rcol, format!("duplicate arrow {name}")));
    }
    let (src, tail) = rhs.split_once("->").ok_or_else(|| perr(ln, column(raw, rhs), "expected '<src> -> <tgt>'"))?;
    let src = src.trim();
    let toks: Vec<&str> = tail.split_whitespace().collect();
    let tgt = *toks.first().ok_or_else(|| perr(ln, column(raw, tail), "missing target"))?;
    for v in [src, tgt] {
        if !f.vertices.iter().any(|w| w == v) {
            let col = if v.is_empty() { column(raw, rhs) } else { column(raw, v) };
            return Err(perr(ln, col, format!("unknown vertex '{v}'")));
        }
    }
    let deg = match &toks[1..] {
        [] => None,
        ["deg", d] => Some(d.parse().map_err(|_| perr(ln, column(raw, d), format!("bad degree '{d}'")))?),
        [t, ..] => return Err(perr(ln, column(raw, t), format!("unexpected '{t}'"))),
    };
    Ok(ArrowDecl { name: name.to_string(), src: src.to_string(), tgt: tgt.to_string(), deg })
}

impl AlgebraFile {
    pub fn quiver(&self) -> Quiver {
        let mut q = Quiver::new(self.vertices.iter());
        for a in &self.arrows {
            q.add_arrow(&a.name, &a.src, &a.tgt).expect("checked while parsing");
        }
        q
    }

    pub fn field_name(&self) -> String {
        match self.field {
            FieldDecl::Rational => "Q".into(),
            FieldDecl::Prime(p) => format!("F_{p}"),
        }
    }

    /// Arrow degrees from `deg` annotations, if any arrow carries one.
    pub fn degrees(&self) -> Option<Vec<usize>> {
        self.arrows.iter().any(|a| a.deg.is_some()).then(|| self.arrows.iter().map(|a| a.deg.unwrap_or(1)).collect())
    }

    /// A QP as a file, with the degree-1 arrows as cut when degrees are given.
    pub fn from_qp<F: Field>(field: FieldDecl, q: &Quiver, w: &Potential<F>, degrees: Option<&[usize]>, n: Option<usize>) -> Self {
        let arrows = q
            .arrows
            .iter()
            .map(|a| ArrowDecl { name: a.name.clone(), src: q.vertices[a.src].clone(), tgt: q.vertices[a.tgt].clone(), deg: None })
            .collect();
        let cut = degrees.map(|d| (0..q.arrows.len()).filter(|&a| d[a] == 1).map(|a| q.arrows[a].name.clone()).collect());
        AlgebraFile {
            field,
            vertices: q.vertices.clone(),
            arrows,
            relations: vec![],
            potential: (!w.is_zero()).then(|| w.display(q)),
            cut,
            n,
        }
    }
}

impl fmt::Display for AlgebraFile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.field {
            FieldDecl::Rational => writeln!(f, "field Q")?,
            FieldDecl::Prime(p) => writeln!(f, "field F {p}")?,
        }
        writeln!(f, "vertices {}", self.vertices.join(" "))?;
        for a in &self.arrows {
            write!(f, "arrow {} : {} -> {}", a.name, a.src, a.tgt)?;
            if let Some(d) = a.deg {
                write!(f, " deg {d}")?;
            }
            writeln!(f)?;
        }
        for r in &self.relations {
            writeln!(f, "relation {r}")?;
        }
        if let Some(w) = &self.potential {
            writeln!(f, "potential {w}")?;
        }
        if let Some(c) = &self.cut {
            writeln!(f, "cut {}", c.join(" "))?;
        }
        if let Some(n) = self.n {
            writeln!(f, "n {n}")?;
        }
        Ok(())
    }
}

/// One verdict of a report.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub bound: Option<String>,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub command: String,
    pub digest: String,
    pub text: Vec<String>,
    pub checks: Vec<Check>,
    /// Key-value pairs of the machine-readable block, in insertion order.
    pub data: Vec<(String, String)>,
}

impl Report {
    pub fn new(command: impl Into<String>, input: &str) -> Self {
        let digest = Sha256::digest(input.as_bytes()).iter().map(|b| format!("{b:02x}")).collect();
        Report { command: command.into(), digest, ..Default::default() }
    }

    pub fn say(&mut self, s: impl Into<String>) {
        self.text.push(s.into());
    }

    pub fn check(&mut self, name: impl Into<String>, bound: Option<String>, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check { name: name.into(), bound, passed, detail: detail.into() });
    }

    pub fn put(&mut self, key: impl Into<String>, value: impl ToString) {
        self.data.push((key.into(), value.to_string()));
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            0
        } else {
            1
        }
    }

    pub fn get_check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn value(&self, key: &str) -> Option<&str> {
        self.data.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.passed)
    }

    pub fn render(&self) -> String {
        let mut out = format!("aprtilt {}\ninput sha256 {}\n", self.command, self.digest);
        if !self.text.is_empty() {
            out.push('\n');
            for l in &self.text {
                out.push_str(l);
                out.push('\n');
            }
        }
        out.push_str("\nchecks\n");
        for c in &self.checks {
            let bound = c.bound.as_deref().map(|b| format!(" [{b}]")).unwrap_or_default();
            let verdict = if c.passed { "pass" } else { "FAIL" };
            out.push_str(&format!("  {verdict} {}{bound}: {}\n", c.name, c.detail));
        }
        out.push_str(&format!("result: {}\n", if self.passed() { "pass" } else { "fail" }));
        out.push_str("\n```report\n");
        out.push_str(&format!("command = {}\ninput = {}\n", self.command, self.digest));
        for c in &self.checks {
            out.push_str(&format!("check.{} = {}\n", c.name, if c.passed { "pass" } else { "fail" }));
            if let Some(b) = &c.bound {
                out.push_str(&format!("bound.{} = {b}\n", c.name));
            }
        }
        for (k, v) in &self.data {
            out.push_str(&format!("{k} = {v}\n"));
        }
        out.push_str(&format!("result = {}\n```\n", if self.passed() { "pass" } else { "fail" }));
        out
    }
}

pub fn dims_str(v: &[usize]) -> String {
    v.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(" ")
}

pub fn table_str(t: &[Vec<usize>]) -> String {
    t.iter().map(|r| dims_str(r)).collect::<Vec<_>>().join("; ")
}

fn shape_str(s: &[(String, String)]) -> String {
    s.iter().map(|(a, b)| format!("{a}->{b}")).collect::<Vec<_>>().join(" ")
}

fn pairs(v: &[(&str, &str)]) -> Vec<(String, String)> {
    let mut v: Vec<(String, String)> = v.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect();
    v.sort();
    v
}

macro_rules! dispatch {
    ($field:expr, $f:ident ( $($arg:expr),* )) => {
        match $field {
            FieldDecl::Rational => $f::<Rational>($($arg),*),
            FieldDecl::Prime(2) => $f::<Fp<2>>($($arg),*),
            FieldDecl::Prime(3) => $f::<Fp<3>>($($arg),*),
            FieldDecl::Prime(5) => $f::<Fp<5>>($($arg),*),
            FieldDecl::Prime(7) => $f::<Fp<7>>($($arg),*),
            FieldDecl::Prime(32003) => $f::<Fp<32003>>($($arg),*),
            FieldDecl::Prime(2147483647) => $f::<Big>($($arg),*),
            FieldDecl::Prime(p) => Err(CliError::Input(format!("unsupported prime {p}"))),
        }
    };
}

/// The algebra described by a file: the truncated Jacobian algebra when a
/// potential and a cut are given, otherwise the quiver with its relations.
pub struct Loaded<F: Field> {
    /// The quiver as written, cut arrows included.
    pub quiver: Quiver,
    pub potential: Option<Potential<F>>,
    pub cut: Option<Cut>,
    pub alg: FDAlgebra<F>,
}

pub fn load<F: Field>(file: &AlgebraFile) -> CliResult<Loaded<F>> {
    let quiver = file.quiver();
    let potential = file.potential.as_deref().map(|w| parse_potential::<F>(&quiver, w)).transpose()?;
    let cut = match &file.cut {
        Some(c) => Some(Cut::from_names(&quiver, &c.iter().map(String::as_str).collect::<Vec<_>>())?),
        None => None,
    };
    let pres = match (&potential, &cut) {
        (Some(w), Some(c)) => {
            let mut p = truncated_jacobian(&quiver, w, c)?;
            for r in &file.relations {
                p.relations.push(parse_path_sum(&p.quiver, r)?);
            }
            p
        }
        _ => {
            let rels = file.relations.iter().map(|r| parse_path_sum(&quiver, r)).collect::<crate::Result<Vec<_>>>()?;
            let p = Presentation::new(quiver.clone(), rels);
            match file.degrees() {
                Some(d) => p.with_degrees(d),
                None => p,
            }
        }
    };
    let alg = as_fd_algebra(&pres, LOEWY_BOUND)?;
    Ok(Loaded { quiver, potential, cut, alg })
}

fn vertex_index(q: &Quiver, label: &str) -> CliResult<usize> {
    q.vertex(label).ok_or_else(|| CliError::Input(format!("unknown vertex '{label}'")))
}

fn order<F: Field>(file: &AlgebraFile, alg: &FDAlgebra<F>, rep: &mut Report) -> CliResult<usize> {
    let gd = global_dimension(alg, GLDIM_BOUND).ok();
    rep.put("gldim", gd.map_or(format!("> {GLDIM_BOUND}"), |g| g.to_string()));
    match (file.n, gd) {
        (Some(n), _) => Ok(n),
        (None, Some(g)) => Ok(g.max(1)),
        (None, None) => Err(CliError::Input(format!("global dimension exceeds {GLDIM_BOUND}; give 'n'"))),
    }
}

fn describe<F: Field>(rep: &mut Report, key: &str, alg: &FDAlgebra<F>) {
    let q = alg.quiver();
    rep.say(format!("{key}: {} vertices, {} arrows, {} relations, dimension {}", q.num_vertices(), q.arrows.len(), alg.pres.relations.iter().filter(|r| !r.is_zero()).count(), alg.dim()));
    rep.put(format!("{key}.dim"), alg.dim());
}

fn nri_checks<F: Field>(rep: &mut Report, key: &str, alg: &FDAlgebra<F>, n: usize, depth: usize) -> CliResult<bool> {
    let nri = theorem_check_nri(alg, n, depth)?;
    let gd = nri.global_dimension.map_or("unknown".to_string(), |g| g.to_string());
    rep.check(format!("{key}.gldim"), Some(format!("n = {n}")), nri.gldim_ok, format!("global dimension {gd}"));
    let labels = &alg.quiver().vertices;
    for (v, c) in nri.checks.iter().enumerate() {
        let detail = match c.first_failure {
            Some(s) => format!("τ^-{s} leaves N^- (Ext^k(DA, -) ≠ 0 for some k < n)"),
            None => format!("dims of τ^-i P_{}: {}", labels[v], c.iterates.iter().map(|d| format!("({})", dims_str(d))).collect::<Vec<_>>().join(" ")),
        };
        rep.check(format!("{key}.n_minus.P{}", labels[v]), Some(format!("depth {}", c.depth)), c.passed, detail);
    }
    Ok(nri.passed())
}

fn tilt_and_gamma<F: Field>(rep: &mut Report, alg: &FDAlgebra<F>, n: usize, s: usize, m: usize) -> CliResult<Option<(AprContext<F>, EndoPresentation<F>)>> {
    let label = alg.quiver().vertices[s].clone();
    if let Err(i) = apr_admissible(alg, n, s)? {
        rep.check("apr.admissible", None, false, format!("Ext^{i}(DA, S_{label}) ≠ 0"));
        return Ok(None);
    }
    let ctx = build_apr(alg, n, s, m)?;
    rep.check("apr.admissible", None, true, format!("S_{label} simple projective, Ext^i(DA, S) = 0 for i < {n}"));
    rep.say(format!("τ_{n}^-(S_{label}) has dimension vector ({})", dims_str(&ctx.tau_s.dims)));
    rep.put("tau_s.dims", dims_str(&ctx.tau_s.dims));
    let tr = verify_tilting(alg, &ctx.tilting, m)?;
    let pd = tr.projective_dimension.map_or("unknown".into(), |p| p.to_string());
    rep.check("tilting.T1", Some(format!("pd <= {m}")), tr.t1, format!("projective dimension {pd}"));
    rep.check("tilting.T2", None, tr.t2, tr.t2_failure.map_or("Ext^i(T, T) = 0 for i >= 1".into(), |i| format!("Ext^{i}(T, T) ≠ 0")));
    let cl = tr.coresolution_length.map_or("none".into(), |l| l.to_string());
    rep.check("tilting.T3", None, tr.t3, format!("coresolution of A in add T of length {cl}"));
    rep.check("tilting.pd_exact", None, tr.projective_dimension == Some(m), format!("pd T = {pd}, m = {m}"));
    let g = gamma_of(alg, &ctx)?;
    let gq = &g.presentation.quiver;
    rep.say(format!("Gamma = End(T), dimension {}:", g.dim));
    for l in gq.arrow_lines() {
        rep.say(format!("  {l}"));
    }
    for r in &g.presentation.relations {
        rep.say(format!("  relation {}", r.display(gq)));
    }
    rep.put("gamma.arrows", gq.arrow_lines().join(", "));
    rep.put("gamma.shape", shape_str(&gq.arrow_shape()));
    rep.put("gamma.dim", g.dim);
    Ok(Some((ctx, g)))
}

/// `check-nri`: global dimension and bounded `N^-` membership of every
/// indecomposable projective.
pub fn check_nri(input: &str, depth: usize) -> CliResult<Report> {
    let file = parse(input)?;
    let mut rep = Report::new(format!("check-nri --depth {depth}"), input);
    dispatch!(file.field, check_nri_in(&file, depth, &mut rep))?;
    Ok(rep)
}

fn check_nri_in<F: Field>(file: &AlgebraFile, depth: usize, rep: &mut Report) -> CliResult<()> {
    let l = load::<F>(file)?;
    describe(rep, "lambda", &l.alg);
    let n = order(file, &l.alg, rep)?;
    rep.put("n", n);
    nri_checks(rep, "lambda", &l.alg, n, depth)?;
    Ok(())
}

/// `apr-tilt`: the m-APR tilting module at a vertex, the tilting axioms, the
/// quiver with relations of `Γ`, and the bounded n-representation-infinite
/// check of `Γ`.
pub fn apr_tilt(input: &str, vertex: &str, m: Option<usize>, depth: usize) -> CliResult<Report> {
    let file = parse(input)?;
    let mut cmd = format!("apr-tilt --vertex {vertex}");
    if let Some(m) = m {
        cmd.push_str(&format!(" --m {m}"));
    }
    let mut rep = Report::new(format!("{cmd} --depth {depth}"), input);
    dispatch!(file.field, apr_tilt_in(&file, vertex, m, depth, &mut rep))?;
    Ok(rep)
}

fn apr_tilt_in<F: Field>(file: &AlgebraFile, vertex: &str, m: Option<usize>, depth: usize, rep: &mut Report) -> CliResult<()> {
    let l = load::<F>(file)?;
    describe(rep, "lambda", &l.alg);
    let n = order(file, &l.alg, rep)?;
    let s = vertex_index(l.alg.quiver(), vertex)?;
    let m = m.unwrap_or(n);
    rep.put("n", n);
    rep.put("m", m);
    let Some((_, g)) = tilt_and_gamma(rep, &l.alg, n, s, m)? else {
        return Ok(());
    };
    if m == 0 {
        let same = g.presentation.quiver.arrow_shape() == l.alg.quiver().arrow_shape() && g.dim == l.alg.dim();
        rep.check("gamma.equals_lambda", None, same, "m = 0 gives T = A");
    }
    nri_checks(rep, "gamma", &g.algebra, n, depth)?;
    Ok(())
}

/// `preproj`: degreewise dimensions of `Λ̂` up to `degree`, generation and
/// associativity, the second route through `Hom(Λ, τ^-i Λ)`, the comparison
/// with a cut-graded Jacobian when the file has a potential, and graded CY
/// symmetry of simples.
pub fn preproj(input: &str, degree: usize) -> CliResult<Report> {
    let file = parse(input)?;
    let mut rep = Report::new(format!("preproj --degree {degree}"), input);
    dispatch!(file.field, preproj_in(&file, degree, &mut rep))?;
    Ok(rep)
}

fn preproj_in<F: Field>(file: &AlgebraFile, d: usize, rep: &mut Report) -> CliResult<()> {
    let l = load::<F>(file)?;
    describe(rep, "lambda", &l.alg);
    let n = order(file, &l.alg, rep)?;
    rep.put("n", n);
    let gt = preprojective_truncation(&l.alg, n, d + 1)?;
    let dims = gt.dims()[..=d].to_vec();
    rep.say(format!("dim Λ̂_i, i = 0..{d}: {}", dims_str(&dims)));
    rep.put("dims.lambda_hat", dims_str(&dims));
    for i in 0..=d {
        rep.put(format!("blocks.lambda_hat.{i}"), table_str(&gt.block_dims(i)));
    }
    let bound = Some(format!("degree {d}"));
    let gen = gt.generation_failure();
    rep.check("generation", bound.clone(), gen.is_none(), gen.map_or("generated in degrees 0 and 1".into(), |k| format!("degree {k} not generated")));
    let a = d.min(2);
    let assoc = gt.associativity_failure(a);
    rep.check("associativity", Some(format!("degree {a}")), assoc.is_none(), assoc.map_or("associative on bases".into(), |t| format!("fails at {t:?}")));
    let k = d.min(4);
    let reg = gt.regular_hom_dims(k);
    rep.put("dims.hom_lambda_tau", dims_str(&reg));
    rep.check("two_routes", Some(format!("degree {k}")), reg == dims[..=k], format!("Hom(Λ, τ^-i Λ): {}", dims_str(&reg)));
    if let (Some(w), Some(c)) = (&l.potential, &l.cut) {
        let jac = jacobian_presentation(&l.quiver, w, Some(c))?;
        let cmp = compare_preproj_jacobian(&gt, &jac, d)?;
        rep.put("dims.jacobian", dims_str(&cmp.jacobian_dims));
        let detail = cmp.first_mismatch.map_or(format!("Jacobian slices: {}", dims_str(&cmp.jacobian_dims)), |(k, i, j)| format!("degree {k}, block ({i}, {j}) differs"));
        rep.check("jacobian", bound, cmp.passed(), detail);
    }
    cy_check(rep, &l.alg, n)?;
    Ok(())
}

fn cy_check<F: Field>(rep: &mut Report, alg: &FDAlgebra<F>, n: usize) -> CliResult<()> {
    let gt = preprojective_truncation(alg, n, 2)?;
    let table = graded_ext_table(&gt)?;
    for (k, t) in table.iter().enumerate() {
        rep.put(format!("ext.simples.{k}"), table_str(t));
    }
    let fail = cy_symmetry_failure(&table);
    rep.check(
        "cy_symmetry",
        Some(format!("0 <= k <= {}", n + 1)),
        fail.is_none(),
        fail.map_or(format!("Ext^k(S_i, S_j) = Ext^{}-k(S_j, S_i)", n + 1), |(k, i, j)| format!("fails at k = {k}, ({i}, {j})")),
    );
    Ok(())
}

/// `verify-lift`: the hatted sequence, `T̂` tilting, `End(T̂)` against `Γ̂`,
/// and for `m = n` the isomorphism with `Λ̂`.
pub fn verify_lift(input: &str, vertex: &str, m: Option<usize>, degree: usize) -> CliResult<Report> {
    let file = parse(input)?;
    let mut cmd = format!("verify-lift --vertex {vertex}");
    if let Some(m) = m {
        cmd.push_str(&format!(" --m {m}"));
    }
    let mut rep = Report::new(format!("{cmd} --degree {degree}"), input);
    dispatch!(file.field, verify_lift_in(&file, vertex, m, degree, &mut rep))?;
    Ok(rep)
}

fn verify_lift_in<F: Field>(file: &AlgebraFile, vertex: &str, m: Option<usize>, d: usize, rep: &mut Report) -> CliResult<()> {
    let l = load::<F>(file)?;
    describe(rep, "lambda", &l.alg);
    let n = order(file, &l.alg, rep)?;
    let s = vertex_index(l.alg.quiver(), vertex)?;
    let m = m.unwrap_or(n);
    rep.put("n", n);
    rep.put("m", m);
    let Some((ctx, g)) = tilt_and_gamma(rep, &l.alg, n, s, m)? else {
        return Ok(());
    };
    lift_checks(rep, &l.alg, &ctx, &g, d, d, d)?;
    Ok(())
}

/// Graded checks with separate degree bounds for the hatted sequence and
/// `T̂` tilting (`d_tilt`), `End(T̂)` (`d_end`) and `Λ̂` for `m = n` (`d_iso`).
fn lift_checks<F: Field>(
    rep: &mut Report,
    alg: &FDAlgebra<F>,
    ctx: &AprContext<F>,
    g: &EndoPresentation<F>,
    d_tilt: usize,
    d_end: usize,
    d_iso: usize,
) -> CliResult<()> {
    let n = ctx.n;
    let top = d_tilt.max(d_end).max(d_iso);
    let gt = preprojective_truncation(alg, n, top + 1)?;
    rep.put("dims.lambda_hat", dims_str(&gt.dims()));
    let bound = Some(format!("degree {d_tilt}"));
    let ex = graded_resolution_of_simple(&gt, ctx, d_tilt)?;
    rep.check("hat.sequence", bound.clone(), ex.passed(), ex.first_failure.map_or("S -> P̂_1 -> ... -> P̂_n -> τ^-S exact".into(), |(k, i)| format!("inexact in degree {k} at spot {i}")));
    let ht = hat_tilting_check(&gt, ctx, d_tilt)?;
    rep.check("hat.T1", bound.clone(), ht.t1, ht.t1_failure.map_or(format!("pd T̂ <= {}", ctx.m), |(k, i)| format!("inexact in degree {k} at spot {i}")));
    rep.check("hat.T2", bound.clone(), ht.t2_failure.is_none(), ht.t2_failure.map_or("Ext^j(T̂, T̂) = 0 for j >= 1".into(), |(k, j)| format!("Ext^{j} ≠ 0 in degree {k}")));
    rep.check("hat.T3", bound, ht.t3, "Λ̂ has a coresolution in add T̂");
    let ec = graded_endo_comparison(&gt, ctx, g, d_end)?;
    let bound = Some(format!("degree {d_end}"));
    rep.put("dims.end_that", dims_str(&ec.upsilon_dims));
    rep.put("dims.gamma_hat", dims_str(&ec.gamma_hat_dims));
    rep.say(format!("dim End(T̂)_i: {}", dims_str(&ec.upsilon_dims)));
    rep.say(format!("dim Γ̂_i:      {}", dims_str(&ec.gamma_hat_dims)));
    rep.check("end.dims", bound.clone(), ec.first_dim_mismatch.is_none() && ec.blocks_match, ec.first_dim_mismatch.map_or("blockwise equal".into(), |k| format!("differ in degree {k}")));
    rep.check("end.phi", bound.clone(), ec.phi_found && ec.phi_bijective, if ec.phi_found { "Φ found" } else { "no invertible solution of the naturality equations" });
    rep.check("end.multiplication", bound.clone(), ec.first_mult_mismatch.is_none(), format!("{} basis pairs checked", ec.pairs_checked));
    if let (Some(lh), Some(ok)) = (&ec.lambda_hat_dims, ec.regraded_match) {
        rep.put("dims.lambda_hat_compared", dims_str(lh));
        rep.check("end.regraded_lambda_hat", bound, ok, "End(T̂) regraded by T̂' = Q̂ ⊕ K̂_n(-1) matches Λ̂ blockwise");
    }
    if ctx.m == n {
        let iso = n_apr_iso_check(&gt, ctx, d_iso)?;
        rep.put("dims.end_tprime", dims_str(&iso.end_dims));
        rep.say(format!("dim End(T̂')_i: {}", dims_str(&iso.end_dims)));
        rep.say(format!("dim Λ̂_i:       {}", dims_str(&iso.lambda_dims)));
        let detail = if iso.sequence_exact { "0 -> T̂' -> Λ̂ -> S -> 0 exact, Hom maps bijective" } else { "sequence not exact" };
        rep.check("n_apr_iso", Some(format!("degree {d_iso}")), iso.passed(), detail);
    }
    Ok(())
}

/// `qp-mutate`: mutation at a vertex, graded by the cut or by `deg`
/// annotations when present.
pub fn qp_mutate_file(input: &str, vertex: &str) -> CliResult<Report> {
    let file = parse(input)?;
    let mut rep = Report::new(format!("qp-mutate --vertex {vertex}"), input);
    dispatch!(file.field, qp_mutate_in(&file, vertex, &mut rep))?;
    Ok(rep)
}

fn mutate_graded<F: Field>(file: &AlgebraFile, vertex: &str) -> CliResult<(Quiver, Potential<F>, Option<Vec<usize>>, crate::Result<Mutation<F>>)> {
    let q = file.quiver();
    let w = match &file.potential {
        Some(w) => parse_potential::<F>(&q, w)?,
        None => return Err(CliError::Input("the file has no potential".into())),
    };
    let degrees = match &file.cut {
        Some(c) => {
            let cut = Cut::from_names(&q, &c.iter().map(String::as_str).collect::<Vec<_>>())?;
            check_cut(&q, &w, &cut)?;
            Some(cut.grading(&q))
        }
        None => file.degrees(),
    };
    let k = vertex_index(&q, vertex)?;
    let m = qp_mutate(&q, &w, k, degrees.as_deref());
    Ok((q, w, degrees, m))
}

fn qp_mutate_in<F: Field>(file: &AlgebraFile, vertex: &str, rep: &mut Report) -> CliResult<()> {
    let (_, _, degrees, m) = mutate_graded::<F>(file, vertex)?;
    let m = match m {
        Ok(m) => m,
        Err(Error::ReductionIncomplete(p)) => {
            rep.check("reduction", Some(format!("{p} passes")), false, "2-cycles remain");
            return Ok(());
        }
        Err(e) => return Err(e.into()),
    };
    report_mutation(rep, file.field, &m, degrees.is_some(), file.n);
    Ok(())
}

fn report_mutation<F: Field>(rep: &mut Report, field: FieldDecl, m: &Mutation<F>, graded: bool, n: Option<usize>) {
    rep.say("mutated quiver:");
    for l in m.quiver.arrow_lines() {
        rep.say(format!("  {l}"));
    }
    rep.say(format!("mutated potential: {}", m.potential.display(&m.quiver)));
    rep.put("mutated.arrows", m.quiver.arrow_lines().join(", "));
    rep.put("mutated.shape", shape_str(&m.quiver.arrow_shape()));
    rep.put("mutated.potential", m.potential.display(&m.quiver));
    rep.check("reduction", Some(format!("{REDUCTION_PASSES} passes")), true, format!("{} 2-cycles removed", m.removed_two_cycles));
    if graded {
        rep.check("grading", None, m.degree_conflict.is_none(), m.degree_conflict.clone().unwrap_or_else(|| "W' homogeneous of degree 1".into()));
    }
    if let Some(d) = &m.degrees {
        let cut: Vec<&str> = (0..m.quiver.arrows.len()).filter(|&a| d[a] == 1).map(|a| m.quiver.arrows[a].name.as_str()).collect();
        rep.put("mutated.cut", cut.join(" "));
    }
    rep.say("as a file:");
    for l in AlgebraFile::from_qp(field, &m.quiver, &m.potential, m.degrees.as_deref(), n).to_string().lines() {
        rep.say(format!("  {l}"));
    }
}

const EX1_GAMMA: [(&str, &str); 4] = [("3", "4"), ("3", "2"), ("1", "4"), ("1", "2")];
const EX2_LAMBDA: [(&str, &str); 6] = [("2", "1"), ("2", "1"), ("3", "2"), ("3", "2"), ("4", "3"), ("4", "3")];
const EX2_GAMMA: [(&str, &str); 8] = [("4", "3"), ("4", "3"), ("4", "1"), ("4", "1"), ("1", "2"), ("1", "2"), ("3", "2"), ("3", "2")];
const EX2_MUTATED: [&str; 12] = [
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
];
const EX3_LAMBDA: [(&str, &str); 8] = [("4", "3"), ("4", "3"), ("4", "1"), ("4", "1"), ("1", "2"), ("1", "2"), ("3", "2"), ("3", "2")];
const EX3_GAMMA: [(&str, &str); 8] = [("4", "3"), ("4", "3"), ("4", "1"), ("4", "1"), ("2", "4"), ("2", "4"), ("2", "4"), ("2", "4")];

fn shape_check(rep: &mut Report, name: &str, q: &Quiver, want: &[(&str, &str)]) {
    let got = q.arrow_shape();
    let ok = got == pairs(want);
    rep.check(name, None, ok, format!("arrows {}", shape_str(&got)));
}

/// `verify-example k`: the full set of checks for one shipped example.
pub fn verify_example(k: u8) -> CliResult<Report> {
    let src = match k {
        1 => EXAMPLE1,
        2 => EXAMPLE2,
        3 => EXAMPLE3,
        _ => return Err(CliError::Input(format!("no example {k}; choose 1, 2 or 3"))),
    };
    let file = parse(src)?;
    let mut rep = Report::new(format!("verify-example {k}"), src);
    match k {
        1 => example1::<Rational>(&file, &mut rep)?,
        2 => example2::<Big>(&file, &mut rep)?,
        _ => example3::<Big>(&file, &mut rep)?,
    }
    Ok(rep)
}

fn example1<F: Field>(file: &AlgebraFile, rep: &mut Report) -> CliResult<()> {
    let l = load::<F>(file)?;
    let alg = &l.alg;
    describe(rep, "lambda", alg);
    nri_checks(rep, "lambda", alg, 1, 8)?;
    let s = vertex_index(alg.quiver(), "1")?;
    let Some((ctx, g)) = tilt_and_gamma(rep, alg, 1, s, 1)? else {
        return Ok(());
    };
    shape_check(rep, "gamma.quiver", &g.presentation.quiver, &EX1_GAMMA);
    nri_checks(rep, "gamma", &g.algebra, 1, 8)?;
    lift_checks(rep, alg, &ctx, &g, 5, 5, 6)?;
    let gt = preprojective_truncation(alg, 1, 2)?;
    let table = graded_ext_table(&gt)?;
    let q = alg.quiver();
    let nv = q.num_vertices();
    let mut double = vec![vec![0; nv]; nv];
    for a in &q.arrows {
        double[a.src][a.tgt] += 1;
        double[a.tgt][a.src] += 1;
    }
    rep.check("lambda_hat.double_quiver", None, table[1] == double, format!("Ext^1 of simples: {}", table_str(&table[1])));
    cy_check(rep, alg, 1)?;
    Ok(())
}

fn example2<F: Field>(file: &AlgebraFile, rep: &mut Report) -> CliResult<()> {
    let l = load::<F>(file)?;
    let alg = &l.alg;
    describe(rep, "lambda", alg);
    shape_check(rep, "lambda.quiver", alg.quiver(), &EX2_LAMBDA);
    let gd = global_dimension(alg, GLDIM_BOUND).ok();
    rep.check("lambda.gldim_is_2", None, gd == Some(2), format!("global dimension {gd:?}"));
    nri_checks(rep, "lambda", alg, 2, 6)?;
    let s = vertex_index(alg.quiver(), "1")?;
    let Some((ctx, g)) = tilt_and_gamma(rep, alg, 2, s, 1)? else {
        return Ok(());
    };
    shape_check(rep, "gamma.quiver", &g.presentation.quiver, &EX2_GAMMA);
    nri_checks(rep, "gamma", &g.algebra, 2, 6)?;
    lift_checks(rep, alg, &ctx, &g, 5, 4, 0)?;

    let (q, w, _, m) = mutate_graded::<F>(file, "1")?;
    let m = m?;
    report_mutation(rep, file.field, &m, true, file.n);
    let lines = m.quiver.arrow_lines();
    rep.check("qp.mutated_quiver", None, lines == EX2_MUTATED, format!("{} arrows", lines.len()));
    match &m.degrees {
        Some(deg) => {
            let cut = Cut { arrows: (0..deg.len()).filter(|&a| deg[a] == 1).collect() };
            let tj = as_fd_algebra(&truncated_jacobian(&m.quiver, &m.potential, &cut)?, LOEWY_BOUND)?;
            let same = tj.quiver().arrow_shape() == g.presentation.quiver.arrow_shape() && tj.dim() == g.dim;
            rep.check("qp.truncation_is_gamma", None, same, format!("truncated Jacobian of the mutation: dimension {}", tj.dim()));
            let jac = jacobian_presentation(&m.quiver, &m.potential, Some(&cut))?;
            let dims = degreewise_basis(&jac, 4)?.dims();
            let end: Vec<usize> = rep.value("dims.end_that").unwrap_or("").split(' ').filter_map(|x| x.parse().ok()).collect();
            rep.put("dims.mutated_jacobian", dims_str(&dims));
            rep.check("qp.jacobian_is_end_that", Some("degree 4".into()), end.len() >= 5 && dims == end[..5], format!("Jacobian slices {}", dims_str(&dims)));
        }
        None => rep.check("qp.grading", None, false, "no degree assignment"),
    }

    let gt = preprojective_truncation(alg, 2, 5)?;
    let cut = l.cut.clone().expect("fixture has a cut");
    let cmp = compare_preproj_jacobian(&gt, &jacobian_presentation(&q, &w, Some(&cut))?, 4)?;
    rep.put("dims.jacobian", dims_str(&cmp.jacobian_dims));
    rep.check("jacobian", Some("degree 4".into()), cmp.passed(), format!("Jacobian slices {}", dims_str(&cmp.jacobian_dims)));
    cy_check(rep, alg, 2)?;
    Ok(())
}

fn example3<F: Field>(file: &AlgebraFile, rep: &mut Report) -> CliResult<()> {
    let l = load::<F>(file)?;
    let alg = &l.alg;
    describe(rep, "lambda", alg);
    shape_check(rep, "lambda.quiver", alg.quiver(), &EX3_LAMBDA);
    let gd = global_dimension(alg, GLDIM_BOUND).ok();
    rep.check("lambda.gldim_is_2", None, gd == Some(2), format!("global dimension {gd:?}"));
    nri_checks(rep, "lambda", alg, 2, 6)?;
    let s = vertex_index(alg.quiver(), "2")?;
    let Some((ctx, g)) = tilt_and_gamma(rep, alg, 2, s, 2)? else {
        return Ok(());
    };
    shape_check(rep, "gamma.quiver", &g.presentation.quiver, &EX3_GAMMA);
    nri_checks(rep, "gamma", &g.algebra, 2, 6)?;
    lift_checks(rep, alg, &ctx, &g, 4, 4, 4)?;
    let gt = preprojective_truncation(alg, 2, 5)?;
    let cut = l.cut.clone().expect("fixture has a cut");
    let w = l.potential.clone().expect("fixture has a potential");
    let cmp = compare_preproj_jacobian(&gt, &jacobian_presentation(&l.quiver, &w, Some(&cut))?, 4)?;
    rep.put("dims.jacobian", dims_str(&cmp.jacobian_dims));
    rep.check("jacobian", Some("degree 4".into()), cmp.passed(), format!("Jacobian slices {}", dims_str(&cmp.jacobian_dims)));
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_round_trip() {
        for src in [EXAMPLE1, EXAMPLE2, EXAMPLE3, A2] {
            let f = parse(src).unwrap();
            assert_eq!(parse(&f.to_string()).unwrap(), f);
        }
    }

    #[test]
    fn one_vertex_is_semisimple() {
        let f = parse("vertices 1\n").unwrap();
        let l = load::<Rational>(&f).unwrap();
        assert_eq!(l.alg.dim(), 1);
        assert_eq!(global_dimension(&l.alg, 3), Ok(0));
    }

    #[test]
    fn example1_quiver() {
        let f = parse(EXAMPLE1).unwrap();
        assert_eq!(f.quiver().arrow_lines(), ["a: 3 -> 4", "b: 4 -> 1", "c: 3 -> 2", "d: 2 -> 1"]);
        assert_eq!(f.n, Some(1));
    }

    #[test]
    fn example2_carries_potential_and_cut() {
        let f = parse(EXAMPLE2).unwrap();
        assert_eq!(f.cut, Some(vec!["x4".to_string(), "y4".to_string()]));
        assert!(f.potential.as_deref().unwrap().starts_with("x4*x3*x2*x1"));
        assert_eq!(f.field, FieldDecl::Prime(2147483647));
    }

    #[test]
    fn parse_errors_have_positions() {
        let e = parse("vertices 1 2\narrow a : 1 -> 3\n").unwrap_err();
        assert_eq!(e, perr(2, 16, "unknown vertex '3'"));
        let e = parse("vertices 1 2\narrow a : 1 -> 2\nrelation a*b\n").unwrap_err();
        assert!(matches!(e, CliError::Parse { line: 3, column: 10, .. }), "{e}");
        let e = parse("vertices 1\n  frobnicate\n").unwrap_err();
        assert_eq!(e, perr(2, 3, "unknown keyword 'frobnicate'"));
        let e = parse("field F 4\nvertices 1\n").unwrap_err();
        assert!(matches!(e, CliError::Parse { line: 1, column: 9, .. }), "{e}");
        assert!(matches!(parse("vertices 1 2\narrow a : 1 -> 2\ncut a\n"), Err(CliError::Parse { line: 3, .. })));
    }

    #[test]
    fn comments_and_w_syntax() {
        let f = parse("# c\nvertices 1 2 # trailing\narrow a : 1 -> 2 deg 1\narrow b : 2 -> 1\nW = a*b\n").unwrap();
        assert_eq!(f.potential.as_deref(), Some("a*b"));
        assert_eq!(f.degrees(), Some(vec![1, 1]));
    }

    #[test]
    fn a2_fails_check_nri() {
        let r = check_nri(A2, 8).unwrap();
        assert!(!r.passed());
        let f = r.first_failure().unwrap();
        assert!(f.name.starts_with("lambda.n_minus"), "{f:?}");
        assert!(f.detail.contains("τ^-"));
    }

    #[test]
    fn reports_are_deterministic() {
        let a = check_nri(EXAMPLE1, 4).unwrap().render();
        let b = check_nri(EXAMPLE1, 4).unwrap().render();
        assert_eq!(a, b);
        assert!(a.contains("```report\ncommand = check-nri --depth 4\n"));
    }

    #[test]
    fn apr_tilt_with_m_zero_keeps_lambda() {
        let r = apr_tilt(EXAMPLE1, "1", Some(0), 4).unwrap();
        assert!(r.passed(), "{}", r.render());
        assert_eq!(r.get_check("gamma.equals_lambda").map(|c| c.passed), Some(true));
    }

    #[test]
    fn mutated_qp_file_parses() {
        let r = qp_mutate_file(EXAMPLE2, "1").unwrap();
        assert!(r.passed());
        let text: Vec<&str> = r.text.iter().skip_while(|l| *l != "as a file:").skip(1).map(|l| l.trim_start()).collect();
        let f = parse(&text.join("\n")).unwrap();
        assert_eq!(f.cut.as_ref().map(|c| c.len()), Some(4));
        let l = load::<Big>(&f).unwrap();
        assert_eq!(l.alg.quiver().arrow_shape(), pairs(&EX2_GAMMA));
    }

    #[test]
    fn unknown_example() {
        assert!(matches!(verify_example(4), Err(CliError::Input(_))));
    }
}

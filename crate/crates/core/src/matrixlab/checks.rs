//! Exact membership tests, triple completion, and the fiber, component and image checks.

use super::realize::{Ambient, PairKind, PairRealization};
use super::M;
use crate::error::{Error, Result};
use crate::linalg::{ci, jordan_partition, solve, Echelon, Mat, Qi};
use num_traits::{One, Zero};
use serde::Serialize;

/// ad(x)^k (y), from the powers x^0..=x^k.
pub fn ad_pow(powers: &[M], y: &M, k: usize) -> M {
    let mut out = Mat::zeros(y.rows, y.cols);
    let mut binom: i64 = 1;
    for j in 0..=k {
        // x^{k-j} y first keeps sparse y cheap
        let term = powers[k - j].mul(y).mul(&powers[j]);
        let c = if j % 2 == 0 { binom } else { -binom };
        out = out.add(&term.scale(&ci(c)));
        binom = binom * (k - j) as i64 / (j + 1) as i64;
    }
    out
}

pub fn powers(x: &M, k: usize) -> Vec<M> {
    let mut out = vec![Mat::identity(x.rows)];
    for i in 0..k {
        out.push(out[i].mul(x));
    }
    out
}

/// Im (ad x)² = ⟨x⟩, tested on a basis of g.
pub fn is_minimal_nilpotent(r: &PairRealization, x: &M) -> bool {
    let Some(p) = x.data.iter().position(|v| !v.is_zero()) else {
        return false;
    };
    let pw = powers(x, 2);
    let mut nonzero = false;
    for b in &r.g {
        let v = ad_pow(&pw, b, 2);
        let c = v.data[p].clone() / x.data[p].clone();
        if v != x.scale(&c) {
            return false;
        }
        nonzero |= !c.is_zero();
    }
    nonzero
}

/// Rank description of O_min: rank 1 and square zero in sl and sp, rank 2 and square zero in so.
pub fn classical_minimal(r: &PairRealization, x: &M) -> bool {
    let want = match r.ambient {
        Ambient::Sl(_) | Ambient::Sp(_) => 1,
        Ambient::So(_) => 2,
    };
    r.in_g(x) && x.rank() == want && x.mul(x).is_zero()
}

/// dim of the span of the given elements of g.
pub fn span_dim(r: &PairRealization, xs: impl IntoIterator<Item = M>) -> usize {
    let mut e = Echelon::new(r.coord_pos.len());
    for x in xs {
        e.insert(&r.coords(&x));
    }
    e.rank()
}

/// dim [space, x].
pub fn bracket_dim(r: &PairRealization, space: &[M], x: &M) -> usize {
    span_dim(r, space.iter().map(|b| b.commutator(x)))
}

/// Whether `x` lies in [space, y].
pub fn in_bracket_span(r: &PairRealization, space: &[M], y: &M, x: &M) -> bool {
    let mut e = Echelon::new(r.coord_pos.len());
    for b in space {
        e.insert(&r.coords(&b.commutator(y)));
    }
    e.contains(&r.coords(x))
}

/// Finds a combination z of `space` with Σ L_i(z) = targets, each L_i given on the basis.
fn solve_in(
    r: &PairRealization,
    space: &[M],
    maps: &[&dyn Fn(&M) -> M],
    targets: &[M],
) -> Option<M> {
    let cols: Vec<Vec<Qi>> = space
        .iter()
        .map(|b| maps.iter().flat_map(|f| r.coords(&f(b))).collect())
        .collect();
    let rhs: Vec<Qi> = targets.iter().flat_map(|t| r.coords(t)).collect();
    let rows: Vec<Vec<Qi>> = (0..rhs.len())
        .map(|i| cols.iter().map(|c| c[i].clone()).collect())
        .collect();
    let x = solve(&rows, space.len(), &rhs)?;
    let n = r.size();
    Some(space.iter().zip(&x).fold(Mat::zeros(n, n), |acc, (b, c)| {
        if c.is_zero() {
            acc
        } else {
            acc.add(&b.scale(c))
        }
    }))
}

#[derive(Clone, Debug, PartialEq)]
pub struct Triple {
    pub e: M,
    pub h: M,
    pub f: M,
}

impl Triple {
    pub fn holds(&self) -> bool {
        let two = ci(2);
        self.h.commutator(&self.e) == self.e.scale(&two)
            && self.e.commutator(&self.f) == self.h
            && self.h.commutator(&self.f) == self.f.scale(&-two)
    }
}

type LinearMap<'a> = Box<dyn Fn(&M) -> M + 'a>;

/// Completes `e` to an sl2-triple with h ∈ [e, space] and f ∈ space. Each `y` in `extra`
/// is additionally required to satisfy [h, y] = 2y.
pub fn complete_triple(r: &PairRealization, space: &[M], e: &M, extra: &[M]) -> Option<Triple> {
    let two = ci(2);
    let mut maps: Vec<LinearMap> = vec![Box::new(|z: &M| e.commutator(z).commutator(e))];
    let mut targets = vec![e.scale(&two)];
    for y in extra {
        maps.push(Box::new(move |z: &M| e.commutator(z).commutator(y)));
        targets.push(y.scale(&two));
    }
    let refs: Vec<&dyn Fn(&M) -> M> = maps.iter().map(|b| b.as_ref()).collect();
    let z = solve_in(r, space, &refs, &targets)?;
    let h = e.commutator(&z);
    let n = r.size();
    let f = solve_in(
        r,
        space,
        &[&|w: &M| e.commutator(w), &|w: &M| {
            h.commutator(w).add(&w.scale(&two))
        }],
        &[h.clone(), Mat::zeros(n, n)],
    )?;
    let t = Triple { e: e.clone(), h, f };
    t.holds().then_some(t)
}

/// A normal triple: e, f ∈ g1 and h ∈ g0.
#[derive(Clone, Debug, PartialEq)]
pub struct NormalTriple(pub Triple);

pub fn complete_normal_triple(r: &PairRealization, e: &M) -> Result<NormalTriple> {
    if e.is_zero() || !r.in_g1(e) {
        return Err(Error::Precondition(format!(
            "{}: e must be a nonzero element of g1",
            r.kind
        )));
    }
    let t = complete_triple(r, &r.g1, e, &[]).ok_or_else(|| {
        Error::Soundness(format!(
            "{}: no normal triple through a nilpotent element of g1",
            r.kind
        ))
    })?;
    if !(r.in_g0(&t.h) && r.in_g1(&t.f) && r.sigma(&t.e) == t.e.neg() && r.sigma(&t.h) == t.h) {
        return Err(Error::Soundness(format!(
            "{}: completed triple is not normal",
            r.kind
        )));
    }
    Ok(NormalTriple(t))
}

/// Outcome of one named check.
#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<Vec<String>>>,
}

impl Check {
    pub fn new(name: &str, passed: bool, detail: impl Into<String>) -> Check {
        Check {
            name: name.to_string(),
            passed,
            detail: detail.into(),
            witness: None,
        }
    }

    /// Attaches the matrix when the check failed.
    pub fn with_witness(mut self, x: &M) -> Check {
        if !self.passed {
            self.witness = Some(mat_strings(x));
        }
        self
    }
}

pub fn mat_strings(x: &M) -> Vec<Vec<String>> {
    x.row_vectors()
        .iter()
        .map(|row| row.iter().map(qi_string).collect())
        .collect()
}

fn qi_string(z: &Qi) -> String {
    match (z.re.is_zero(), z.im.is_zero()) {
        (_, true) => z.re.to_string(),
        (true, false) => format!("{}i", z.im),
        _ => format!("{}+{}i", z.re, z.im),
    }
}

/// ψ-fiber over h1 = e - f and the φ-fiber family through h, for a normal triple.
pub fn verify_fibers(r: &PairRealization, t: &NormalTriple) -> Vec<Check> {
    let Triple { e, h, f } = &t.0;
    let h1 = e.sub(f);
    let mut out = Vec::new();
    for (name, v) in [("psi-fiber h1+h", h1.add(h)), ("psi-fiber h1-h", h1.sub(h))] {
        let ok = is_minimal_nilpotent(r, &v) && r.p1(&v) == h1;
        out.push(Check::new(name, ok, "in O_min with ψ = e - f").with_witness(&v));
    }
    for (num, den) in [(1, 1), (2, 1), (-1, 1), (1, 3)] {
        let t = ci(num) / ci(den);
        let w = f.scale(&(Qi::one() / t.clone())).add(h).sub(&e.scale(&t));
        let ok = is_minimal_nilpotent(r, &w) && r.p0(&w) == *h;
        let label = if den == 1 {
            num.to_string()
        } else {
            format!("{num}/{den}")
        };
        out.push(Check::new("phi-fiber family", ok, format!("t = {label}")).with_witness(&w));
    }
    out
}

/// Components a = φ(e), b = ψ(e) of an element of O_min for a pair with O_min ∩ g1 = ∅.
pub fn split(r: &PairRealization, e: &M) -> (M, M) {
    (r.p0(e), r.p1(e))
}

/// φ-fiber {a + b, a - b} and the three-lines exclusion on the pencil a + ηb.
pub fn verify_split_fibers(r: &PairRealization, e: &M) -> Vec<Check> {
    let (a, b) = split(r, e);
    let mut out = Vec::new();
    let plus = a.add(&b);
    let minus = a.sub(&b);
    out.push(
        Check::new(
            "phi-fiber a+b",
            is_minimal_nilpotent(r, &plus),
            "a + b in O_min",
        )
        .with_witness(&plus),
    );
    out.push(
        Check::new(
            "phi-fiber a-b",
            is_minimal_nilpotent(r, &minus),
            "a - b in O_min",
        )
        .with_witness(&minus),
    );
    for (num, den) in [(2, 1), (-2, 1), (1, 2), (3, 1)] {
        let eta = ci(num) / ci(den);
        let x = a.add(&b.scale(&eta));
        let ok = !is_minimal_nilpotent(r, &x);
        let label = if den == 1 {
            num.to_string()
        } else {
            format!("{num}/{den}")
        };
        out.push(
            Check::new(
                "three-lines exclusion",
                ok,
                format!("a + ({label})b not in O_min"),
            )
            .with_witness(&x),
        );
    }
    out
}

/// Commuting components, height two, a characteristic of a acting by 2 on b, and Jordan types
/// compared with the curated co0 and tilde partitions.
pub fn component_properties(r: &PairRealization, e: &M) -> Vec<Check> {
    let (a, b) = split(r, e);
    let mut out = Vec::new();
    out.push(
        Check::new("[a,b] = 0", a.commutator(&b).is_zero(), "").with_witness(&a.commutator(&b)),
    );
    let pa = powers(&a, 3);
    let pb = powers(&b, 3);
    let nilpotent = jordan_partition(&a).is_some() && jordan_partition(&b).is_some();
    out.push(Check::new("a, b nilpotent", nilpotent, ""));
    let cubed = |p: &[M]| r.g.iter().all(|y| ad_pow(p, y, 3).is_zero());
    out.push(Check::new("(ad a)^3 = 0", cubed(&pa), "").with_witness(&a));
    out.push(Check::new("(ad b)^3 = 0", cubed(&pb), "").with_witness(&b));
    match complete_triple(r, &r.g0, &a, std::slice::from_ref(&b)) {
        Some(t) => {
            out.push(Check::new(
                "[h_a,b] = 2b",
                true,
                "characteristic of a in g0",
            ));
            let two = ci(2);
            let rank = span_dim(
                r,
                r.g1.iter().map(|y| t.h.commutator(y).sub(&y.scale(&two))),
            );
            let eig2 = r.g1.len() - rank;
            out.push(Check::new("dim g1(2) = 1", eig2 == 1, format!("{eig2}")));
        }
        None => out.push(
            Check::new(
                "[h_a,b] = 2b",
                false,
                "no characteristic of a in g0 acts by 2 on b",
            )
            .with_witness(&a),
        ),
    }
    if let Some(pair) = &r.pair {
        match crate::involutions::empty_row(pair) {
            Ok(row) => {
                let parts_a: Vec<Option<Vec<usize>>> = r
                    .blocks
                    .iter()
                    .map(|blk| jordan_partition(&a.submatrix(blk, blk)))
                    .collect();
                let want_a: Vec<Option<Vec<usize>>> =
                    row.co0.iter().map(|o| o.partition.clone()).collect();
                out.push(Check::new(
                    "partition(a) = co0",
                    parts_a == want_a,
                    format!("{} vs {}", fmt_parts(&parts_a), fmt_parts(&want_a)),
                ));
                let part_b = jordan_partition(&b);
                out.push(Check::new(
                    "partition(b) = tilde",
                    part_b == row.tilde.partition,
                    format!(
                        "{} vs {}",
                        fmt_parts(std::slice::from_ref(&part_b)),
                        fmt_parts(std::slice::from_ref(&row.tilde.partition))
                    ),
                ));
            }
            Err(err) => out.push(Check::new("table row", false, err.to_string())),
        }
    }
    out
}

fn fmt_parts(ps: &[Option<Vec<usize>>]) -> String {
    ps.iter()
        .map(|p| match p {
            Some(p) => format!(
                "({})",
                p.iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            ),
            None => "(not nilpotent)".into(),
        })
        .collect::<Vec<_>>()
        .join(" x ")
}

/// rank [g0, x] = ½ rank [g, x] for x ∈ g1.
pub fn kostant_rallis(r: &PairRealization, x: &M, what: &str) -> Check {
    let d0 = bracket_dim(r, &r.g0, x);
    let d = bracket_dim(r, &r.g, x);
    Check::new(
        "Kostant-Rallis half dimension",
        r.in_g1(x) && 2 * d0 == d,
        format!("{what}: {d0} vs {d}"),
    )
    .with_witness(x)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Projection {
    /// φ onto g0, or onto the subalgebra for a masked realization.
    Phi,
    /// ψ onto g1.
    Psi,
}

/// Rank of the projected tangent space p([g, x]).
pub fn projection_rank(r: &PairRealization, x: &M, p: Projection) -> usize {
    span_dim(
        r,
        r.g.iter().map(|b| {
            let t = b.commutator(x);
            match p {
                Projection::Phi => r.p0(&t),
                Projection::Psi => r.p1(&t),
            }
        }),
    )
}

/// ψ-images of O_min for (sl_n, so_n) and (sp_2n, gl_n).
pub fn image_checks(r: &PairRealization, x: &M) -> Vec<Check> {
    let y = r.p1(x);
    let mut out = Vec::new();
    let back = r.p1(&r.sigma(x).neg());
    out.push(Check::new("psi(x) = psi(-sigma x)", y == back, "").with_witness(x));
    match r.kind {
        PairKind::SlSo { .. } => {
            let ok = y.transpose() == y && y.trace().is_zero() && y.rank() <= 2;
            out.push(
                Check::new("psi image in Sym°2", ok, format!("rank {}", y.rank())).with_witness(&y),
            );
        }
        PairKind::SpGl { n } => {
            let top: Vec<usize> = (0..n).collect();
            let bottom: Vec<usize> = (n..2 * n).collect();
            let bb = y.submatrix(&top, &bottom);
            let cc = y.submatrix(&bottom, &top);
            let ok =
                bb.transpose() == bb && cc.transpose() == cc && bb.rank() <= 1 && cc.rank() <= 1;
            out.push(
                Check::new(
                    "psi image in Sym1 x Sym1",
                    ok,
                    format!("ranks {} {}", bb.rank(), cc.rank()),
                )
                .with_witness(&y),
            );
        }
        _ => return out,
    }
    let rank = projection_rank(r, x, Projection::Psi);
    out.push(Check::new(
        "psi image dimension",
        rank == r.dim_omin,
        format!("{rank} vs dim O_min {}", r.dim_omin),
    ));
    out
}

/// Computed answer to "does O_min meet g0", with the method used.
#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct G0Evidence {
    pub pair: String,
    pub computed: bool,
    pub curated: Option<bool>,
    pub method: String,
}

/// Decides whether O_min meets g0 by rank arguments on explicit matrices.
pub fn meets_g0_evidence(r: &PairRealization) -> G0Evidence {
    let curated = r.intersections().map(|i| i.meets_g0);
    let pair = r.kind.to_string();
    let even_rank_blocks = |r: &PairRealization| match r.kind {
        // so_n is skew: every element has even rank, O_min(sl_n) is rank 1
        PairKind::SlSo { .. } => r.g0.iter().all(|x| x.transpose() == x.neg()),
        // gl_n sits as diag(A, -Aᵀ): rank is 2 rank A, O_min(sp_2n) is rank 1
        PairKind::SpGl { n } => r.g0.iter().all(|x| {
            let top: Vec<usize> = (0..n).collect();
            let bottom: Vec<usize> = (n..2 * n).collect();
            x.submatrix(&top, &bottom).is_zero()
                && x.submatrix(&bottom, &top).is_zero()
                && x.submatrix(&bottom, &bottom) == x.submatrix(&top, &top).transpose().neg()
        }),
        _ => false,
    };
    if even_rank_blocks(r) {
        return G0Evidence {
            pair,
            computed: false,
            curated,
            method: "g0 has only even-rank elements".into(),
        };
    }
    let mut candidates: Vec<M> = r.g0.clone();
    candidates.push(super::sample::base_minimal(r));
    for x in candidates {
        if r.in_g0(&x) && is_minimal_nilpotent(r, &x) {
            return G0Evidence {
                pair,
                computed: true,
                curated,
                method: format!("witness of rank {}", x.rank()),
            };
        }
    }
    G0Evidence {
        pair,
        computed: false,
        curated,
        method: "no witness among the candidates".into(),
    }
}

/// Highest root vector for a Borel b with g0 + b = g, for the maximal-rank models. Such a b
/// contains a Cartan subspace t ⊂ g1; it is cut out by a regular s ∈ t with rational spectrum,
/// and e_θ spans the top eigenspace of ad s.
pub fn e_theta(r: &PairRealization) -> Option<M> {
    let (s, top) = match r.kind {
        PairKind::SlSo { n } => {
            let s = Mat::from_fn(n, n, |i, j| {
                if i == j {
                    ci(2 * i as i64 - (n as i64 - 1))
                } else {
                    Qi::zero()
                }
            });
            (s, ci(2 * (n as i64 - 1)))
        }
        PairKind::SpGl { n } => {
            let s = Mat::from_fn(2 * n, 2 * n, |i, j| {
                if i % n == j % n && i != j {
                    ci((i % n) as i64 + 1)
                } else {
                    Qi::zero()
                }
            });
            (s, ci(2 * n as i64))
        }
        _ => return None,
    };
    if !r.in_g1(&s) {
        return None;
    }
    let rows: Vec<Vec<Qi>> = {
        let cols: Vec<Vec<Qi>> =
            r.g.iter()
                .map(|b| r.coords(&s.commutator(b).sub(&b.scale(&top))))
                .collect();
        (0..r.coord_pos.len())
            .map(|i| cols.iter().map(|c| c[i].clone()).collect())
            .collect()
    };
    let ker = crate::linalg::kernel(&rows, r.g.len());
    if ker.len() != 1 {
        return None;
    }
    let n = r.size();
    Some(
        r.g.iter()
            .zip(&ker[0])
            .fold(Mat::zeros(n, n), |acc, (b, c)| acc.add(&b.scale(c))),
    )
}

/// Conicality of G0·e_θ and its dimension: not conical and of codimension one when O_min meets g1.
pub fn e_theta_checks(r: &PairRealization) -> Vec<Check> {
    let Some(e) = e_theta(r) else {
        return Vec::new();
    };
    let d0 = bracket_dim(r, &r.g0, &e);
    let conical = in_bracket_span(r, &r.g0, &e, &e);
    vec![
        Check::new("e_theta in O_min", is_minimal_nilpotent(r, &e), "").with_witness(&e),
        Check::new(
            "G0 e_theta not conical",
            !conical,
            format!("dim [g0,e_theta] = {d0}, dim O_min = {}", r.dim_omin),
        ),
        Check::new(
            "dim [g0,e_theta] = dim O_min - 1",
            d0 + 1 == r.dim_omin,
            format!("{d0}"),
        ),
    ]
}

//! Involutions of simple Lie algebras through their Satake diagrams, and the
//! way the minimal nilpotent orbit meets g0 and g1.

use crate::catalog::{resolve_ref, Algebra, Catalog, ResolvedOrbit};
use crate::error::{Error, Result};
use crate::orbits::{grading_summary, minimal_orbit_diagram, sl2_decomposition, WeightedDiagram};
use crate::rootsys::{identify_subsystem, Letter, RootSystem, SimpleType};
use crate::template::Env;
use num_traits::Zero;
use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt;

/// Node colours and arrows, in the library's numbering (0-based).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SatakeDiagram {
    pub stype: SimpleType,
    pub black: Vec<usize>,
    pub arrows: Vec<(usize, usize)>,
    pub inner: bool,
    /// For inner involutions: node labels of a grading whose parity is σ.
    pub grading: Option<Vec<u8>>,
}

impl SatakeDiagram {
    pub fn is_black(&self, i: usize) -> bool {
        self.black.contains(&i)
    }

    pub fn white(&self) -> Vec<usize> {
        (0..self.stype.rank)
            .filter(|i| !self.is_black(*i))
            .collect()
    }

    pub fn is_maximal_rank(&self) -> bool {
        self.black.is_empty() && self.arrows.is_empty()
    }

    fn validate(&self) -> std::result::Result<(), String> {
        let r = self.stype.rank;
        if self.black.iter().any(|&b| b >= r) {
            return Err("black node out of range".into());
        }
        let mut used = Vec::new();
        for &(a, b) in &self.arrows {
            if a == b || a >= r || b >= r {
                return Err(format!("bad arrow {}-{}", a + 1, b + 1));
            }
            if self.is_black(a) || self.is_black(b) {
                return Err(format!("arrow {}-{} touches a black node", a + 1, b + 1));
            }
            if used.contains(&a) || used.contains(&b) {
                return Err("arrows do not form a matching".into());
            }
            used.extend([a, b]);
        }
        match &self.grading {
            Some(g) if g.len() != r => Err("grading has the wrong length".into()),
            Some(_) if !self.inner => Err("outer involution with a grading".into()),
            None if self.inner => Err("inner involution without a grading".into()),
            _ => Ok(()),
        }
    }
}

impl fmt::Display for SatakeDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let nodes: String = (0..self.stype.rank)
            .map(|i| if self.is_black(i) { '●' } else { '○' })
            .collect();
        write!(f, "{nodes}")?;
        for (a, b) in &self.arrows {
            write!(f, " {}↔{}", a + 1, b + 1)?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SymmetricPair {
    /// `g/g0`, e.g. `E6/F4` or `D5/A1+B3`.
    pub id: String,
    /// Family descriptor shared by all ranks, e.g. `D(n+1) ⊃ B(n)`.
    pub family: String,
    /// Values of the family parameters for this member.
    pub params: Vec<(char, i64)>,
    pub g: SimpleType,
    pub g0_components: Vec<SimpleType>,
    pub g0_center: usize,
    pub dim_g0: usize,
    pub dim_g1: usize,
    pub satake: SatakeDiagram,
    pub meets_g0_curated: Option<bool>,
}

impl SymmetricPair {
    pub fn g0_name(&self) -> String {
        g0_label(&self.g0_components, self.g0_center)
    }

    pub fn symmetric_rank(&self) -> usize {
        self.satake.white().len() - self.satake.arrows.len()
    }

    pub fn is_maximal_rank(&self) -> bool {
        self.satake.is_maximal_rank()
    }

    pub fn g0_is_semisimple(&self) -> bool {
        self.g0_center == 0
    }

    pub fn env(&self) -> Env {
        self.params.iter().copied().collect()
    }
}

impl fmt::Display for SymmetricPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.g, self.g0_name())
    }
}

pub fn g0_label(components: &[SimpleType], center: usize) -> String {
    let mut parts: Vec<String> = components.iter().map(|t| t.to_string()).collect();
    if center > 0 {
        parts.push(if center == 1 {
            "T1".into()
        } else {
            format!("T{center}")
        });
    }
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join("+")
    }
}

/// Simple components and centre of so_m, sp_m or sl_m, with low-rank coincidences
/// rewritten the way subsystem identification reports them.
#[derive(Default)]
struct Reductive {
    comps: Vec<SimpleType>,
    center: usize,
}

impl Reductive {
    fn so(mut self, m: usize) -> Self {
        use Letter::*;
        match m {
            0 | 1 => {}
            2 => self.center += 1,
            3 => self.comps.push(SimpleType::new(A, 1)),
            4 => self.comps.extend([SimpleType::new(A, 1); 2]),
            5 => self.comps.push(SimpleType::new(C, 2)),
            6 => self.comps.push(SimpleType::new(A, 3)),
            m if m % 2 == 1 => self.comps.push(SimpleType::new(B, m / 2)),
            m => self.comps.push(SimpleType::new(D, m / 2)),
        }
        self
    }

    fn sp(mut self, m: usize) -> Self {
        match m {
            0 => {}
            2 => self.comps.push(SimpleType::new(Letter::A, 1)),
            m => self.comps.push(SimpleType::new(Letter::C, m / 2)),
        }
        self
    }

    fn sl(mut self, m: usize) -> Self {
        if m >= 2 {
            self.comps.push(SimpleType::new(Letter::A, m - 1));
        }
        self
    }

    fn torus(mut self) -> Self {
        self.center += 1;
        self
    }

    fn dim(&self) -> usize {
        self.comps.iter().map(|t| t.algebra_dim()).sum::<usize>() + self.center
    }
}

fn parse_g0(s: &str) -> std::result::Result<(Vec<SimpleType>, usize), String> {
    let mut comps = Vec::new();
    let mut center = 0;
    for part in s.split('+') {
        let part = part.trim();
        if let Some(k) = part.strip_prefix('T') {
            center += k
                .parse::<usize>()
                .map_err(|_| format!("bad torus {part:?}"))?;
        } else {
            comps.push(crate::catalog::parse_simple_type(part)?);
        }
    }
    comps.sort();
    Ok((comps, center))
}

struct Draft {
    family: String,
    params: Vec<(char, i64)>,
    g0: Reductive,
    black: Vec<usize>,
    arrows: Vec<(usize, usize)>,
    grading: Option<usize>,
    meets_g0: Option<bool>,
}

fn draft(family: &str, params: &[(char, i64)], g0: Reductive) -> Draft {
    Draft {
        family: family.to_string(),
        params: params.to_vec(),
        g0,
        black: Vec::new(),
        arrows: Vec::new(),
        grading: None,
        meets_g0: None,
    }
}

impl Draft {
    fn inner(mut self, node: usize) -> Self {
        self.grading = Some(node);
        self
    }
    fn outer(mut self, meets_g0: bool) -> Self {
        self.meets_g0 = Some(meets_g0);
        self
    }
    fn black(mut self, nodes: impl IntoIterator<Item = usize>) -> Self {
        self.black.extend(nodes);
        self
    }
    fn arrow(mut self, a: usize, b: usize) -> Self {
        self.arrows.push((a, b));
        self
    }
}

// Classical families; node numbers are 0-based here.
fn classical_drafts(t: SimpleType) -> Vec<Draft> {
    let n = t.rank;
    let ni = n as i64;
    let r = Reductive::default;
    let mut out = Vec::new();
    match t.letter {
        Letter::A if n == 1 => out.push(draft("A(n) ⊃ so(n+1)", &[('n', 1)], r().torus()).inner(0)),
        Letter::A => {
            out.push(draft("A(n) ⊃ so(n+1)", &[('n', ni)], r().so(n + 1)).outer(false));
            if n % 2 == 1 {
                let m = n.div_ceil(2);
                out.push(
                    draft("A(2n-1) ⊃ C(n)", &[('n', m as i64)], r().sp(n + 1))
                        .outer(true)
                        .black((0..n).step_by(2)),
                );
            }
            for p in 1..=n.div_ceil(2) {
                let q = n + 1 - p;
                let mut d = draft(
                    "A(p+q-1) ⊃ A(p-1)+A(q-1)+T1",
                    &[('p', p as i64), ('q', q as i64)],
                    r().sl(p).sl(q).torus(),
                )
                .inner(p - 1)
                .black(p..n - p);
                let paired = if p == q { p - 1 } else { p };
                for i in 0..paired {
                    d = d.arrow(i, n - 1 - i);
                }
                out.push(d);
            }
        }
        Letter::B => {
            for k in 1..=n {
                let white = (2 * k).min(2 * n + 1 - 2 * k);
                let (family, params) = if k == n {
                    ("B(n) ⊃ D(n)", vec![('n', ni)])
                } else {
                    (
                        "B(n) ⊃ so(2k)+so(2n-2k+1)",
                        vec![('n', ni), ('k', k as i64)],
                    )
                };
                out.push(
                    draft(family, &params, r().so(2 * k).so(2 * n + 1 - 2 * k))
                        .inner(k - 1)
                        .black(white..n),
                );
            }
        }
        Letter::C => {
            out.push(draft("C(n) ⊃ gl(n)", &[('n', ni)], r().sl(n).torus()).inner(n - 1));
            for k in 1..=n / 2 {
                out.push(
                    draft(
                        "C(n) ⊃ C(k)+C(n-k)",
                        &[('n', ni), ('k', k as i64)],
                        r().sp(2 * k).sp(2 * n - 2 * k),
                    )
                    .inner(k - 1)
                    .black((0..2 * k).step_by(2))
                    .black(2 * k..n),
                );
            }
        }
        Letter::D => {
            for p in 1..=n {
                let g0 = r().so(p).so(2 * n - p);
                let d = if p == 1 {
                    draft("D(n+1) ⊃ B(n)", &[('n', ni - 1)], g0)
                } else {
                    draft("D(n) ⊃ so(p)+so(2n-p)", &[('n', ni), ('p', p as i64)], g0)
                };
                let d = if p % 2 == 1 {
                    d.outer(true)
                } else {
                    d.inner(p / 2 - 1)
                };
                let d = if p + 2 <= n {
                    d.black(p..n)
                } else if p + 1 == n {
                    d.arrow(n - 2, n - 1)
                } else {
                    d
                };
                out.push(d);
            }
            // for D4 this pair is conjugate to so2+so6 under triality
            if n > 4 {
                let mut d = draft("D(n) ⊃ gl(n)", &[('n', ni)], r().sl(n).torus()).inner(n - 1);
                if n.is_multiple_of(2) {
                    d = d.black((0..n).step_by(2));
                } else {
                    d = d.black((0..n - 2).step_by(2)).arrow(n - 2, n - 1);
                }
                out.push(d);
            }
        }
        _ => {}
    }
    out
}

fn build_pair(rs: &RootSystem, d: Draft, grading: Option<Vec<u8>>) -> Result<SymmetricPair> {
    let t = rs.stype;
    let satake = SatakeDiagram {
        stype: t,
        black: d.black,
        arrows: d.arrows,
        inner: grading.is_some(),
        grading,
    };
    let bad = |reason: String| Error::Catalog {
        source_name: format!("{t} involutions"),
        line: 0,
        reason,
    };
    satake.validate().map_err(bad)?;
    let declared_dim = d.g0.dim();
    let mut comps = d.g0.comps;
    comps.sort();
    let center = d.g0.center;
    let dim_g0 = match &satake.grading {
        Some(g) => {
            let even: Vec<Vec<i64>> = rs
                .positive_roots
                .iter()
                .filter(|r| r.iter().zip(g).map(|(c, &l)| c * l as i64).sum::<i64>() % 2 == 0)
                .cloned()
                .collect();
            let found = identify_subsystem(rs, &even);
            let found_center = rs.rank() - found.iter().map(|c| c.rank).sum::<usize>();
            if found != comps || found_center != center {
                return Err(bad(format!(
                    "{}: grading gives g0 = {}, declared {}",
                    d.family,
                    g0_label(&found, found_center),
                    g0_label(&comps, center)
                )));
            }
            rs.rank() + 2 * even.len()
        }
        None => declared_dim,
    };
    if dim_g0 != declared_dim {
        return Err(bad(format!(
            "{}: dim g0 {dim_g0} vs {declared_dim}",
            d.family
        )));
    }
    let dim_g1 = rs.dim() - dim_g0;
    let pair = SymmetricPair {
        id: format!("{t}/{}", g0_label(&comps, center)),
        family: d.family,
        params: d.params,
        g: t,
        g0_components: comps,
        g0_center: center,
        dim_g0,
        dim_g1,
        satake,
        meets_g0_curated: d.meets_g0,
    };
    validate_pair(rs, &pair).map_err(bad)?;
    Ok(pair)
}

/// Checks the pair invariants that tie the Satake diagram to the dimensions.
fn validate_pair(rs: &RootSystem, p: &SymmetricPair) -> std::result::Result<(), String> {
    let rank = rs.rank() as i64;
    let a = p.symmetric_rank() as i64;
    let diff = p.dim_g1 as i64 - p.dim_g0 as i64;
    if diff > rank || (diff == rank) != p.is_maximal_rank() {
        return Err(format!(
            "{}: dim g1 - dim g0 = {diff} against rank {rank}",
            p.id
        ));
    }
    if (a == rank) != p.is_maximal_rank() {
        return Err(format!("{}: symmetric rank {a} against rank {rank}", p.id));
    }
    // dim g1 - dim g0 = dim a - dim m, with m ⊕ a the centraliser of a
    let black: Vec<Vec<i64>> = rs
        .positive_roots
        .iter()
        .filter(|r| {
            r.iter()
                .enumerate()
                .all(|(i, &c)| c == 0 || p.satake.is_black(i))
        })
        .cloned()
        .collect();
    let expected = 2 * a - rank - 2 * black.len() as i64;
    if diff != expected {
        return Err(format!(
            "{}: dim g1 - dim g0 = {diff}, Satake diagram gives {expected}",
            p.id
        ));
    }
    if let Some(false) = p.meets_g0_curated {
        if p.satake.black.iter().any(|&b| {
            let mut e = vec![0; rs.rank()];
            e[b] = 1;
            rs.is_long(&e)
        }) {
            return Err(format!(
                "{}: a long black node contradicts the curated g0 flag",
                p.id
            ));
        }
    }
    Ok(())
}

/// All involutions of `g` up to conjugacy.
pub fn catalog(rs: &RootSystem) -> Result<Vec<SymmetricPair>> {
    let t = rs.stype;
    let mut out = Vec::new();
    match t.letter {
        Letter::E | Letter::F | Letter::G => {
            let cat = Catalog::get()?;
            for row in cat.exceptional.iter().filter(|r| r.g == t) {
                let (comps, center) = parse_g0(&row.g0).map_err(|reason| Error::Catalog {
                    source_name: "involutions.txt".into(),
                    line: 0,
                    reason,
                })?;
                let d = Draft {
                    family: row.family.clone(),
                    params: Vec::new(),
                    g0: Reductive { comps, center },
                    black: row.black.clone(),
                    arrows: row.arrows.clone(),
                    grading: None,
                    meets_g0: row.meets_g0,
                };
                out.push(build_pair(rs, d, row.grading.clone())?);
            }
            if out.is_empty() {
                return Err(Error::NoData(format!("involutions of {t}")));
            }
        }
        _ => {
            for d in classical_drafts(t) {
                let grading = d.grading.map(|node| {
                    let mut g = vec![0; t.rank];
                    g[node] = 1;
                    g
                });
                out.push(build_pair(rs, d, grading)?);
            }
        }
    }
    Ok(out)
}

/// Looks a pair up by id (`E6/F4`) or by `type/g0` written loosely (`e6/f4`).
pub fn find_pair(id: &str) -> Result<(RootSystem, SymmetricPair)> {
    let (g, _) = id
        .split_once('/')
        .ok_or_else(|| Error::Precondition(format!("pair id {id:?} lacks '/'")))?;
    let t = crate::catalog::parse_simple_type(&g.to_uppercase()).map_err(Error::Precondition)?;
    let rs = RootSystem::from_type(t)?;
    let pair = catalog(&rs)?
        .into_iter()
        .find(|p| p.id.eq_ignore_ascii_case(id))
        .ok_or_else(|| Error::NoData(format!("pair {id}")))?;
    Ok((rs, pair))
}

/// Antonyan's criterion: the orbit with diagram `d` meets g1.
pub fn orbit_meets_g1(pair: &SymmetricPair, d: &WeightedDiagram) -> bool {
    assert_eq!(
        pair.g, d.stype,
        "diagram and pair live on different algebras"
    );
    pair.satake.black.iter().all(|&b| d.labels[b] == 0)
        && pair
            .satake
            .arrows
            .iter()
            .all(|&(a, b)| d.labels[a] == d.labels[b])
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Intersections {
    pub meets_g0: bool,
    pub meets_g1: bool,
    /// Black nodes α with (α, θ) ≠ 0.
    pub obstructing_black: Vec<usize>,
    /// How meets_g0 was obtained.
    pub g0_evidence: String,
}

pub fn omin_intersections(rs: &RootSystem, pair: &SymmetricPair) -> Intersections {
    let theta = rs.highest_root().to_vec();
    let obstructing_black: Vec<usize> = pair
        .satake
        .black
        .iter()
        .copied()
        .filter(|&b| {
            let mut e = vec![0; rs.rank()];
            e[b] = 1;
            !rs.root_inner(&e, &theta).is_zero()
        })
        .collect();
    let (meets_g0, g0_evidence) = match (&pair.satake.grading, pair.meets_g0_curated) {
        (Some(g), _) => {
            let long = rs.positive_roots.iter().find(|r| {
                rs.is_long(r) && r.iter().zip(g).map(|(c, &l)| c * l as i64).sum::<i64>() % 2 == 0
            });
            match long {
                Some(r) => (true, format!("long root {r:?} lies in g0")),
                None => (false, "no long root has even grading".to_string()),
            }
        }
        (None, Some(v)) => (v, "curated for outer involution".to_string()),
        (None, None) => unreachable!("validated pairs carry a grading or a curated flag"),
    };
    Intersections {
        meets_g0,
        meets_g1: obstructing_black.is_empty(),
        obstructing_black,
        g0_evidence,
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Classification {
    pub g1_empty: Vec<String>,
    pub g0_empty: Vec<String>,
    /// Families whose members disagree; empty when the criterion is family-stable.
    pub mixed: Vec<String>,
    pub evidence: Vec<(String, String, Intersections)>,
}

/// Simple types swept by default: the ranges where each letter has no
/// coincidence with a smaller series.
pub fn sweep_types(max_rank: usize) -> Vec<SimpleType> {
    let mut out = Vec::new();
    for (l, lo) in [
        (Letter::A, 1),
        (Letter::B, 3),
        (Letter::C, 2),
        (Letter::D, 4),
    ] {
        for n in lo..=max_rank {
            out.push(SimpleType::new(l, n));
        }
    }
    for (l, n) in [
        (Letter::E, 6),
        (Letter::E, 7),
        (Letter::E, 8),
        (Letter::F, 4),
        (Letter::G, 2),
    ] {
        out.push(SimpleType::new(l, n));
    }
    out
}

pub fn classify_empty(max_rank: usize) -> Result<Classification> {
    let mut fams: BTreeMap<String, (bool, bool, bool, bool)> = BTreeMap::new();
    let mut order: Vec<String> = Vec::new();
    let mut evidence = Vec::new();
    for t in sweep_types(max_rank) {
        let rs = RootSystem::from_type(t)?;
        for p in catalog(&rs)? {
            let x = omin_intersections(&rs, &p);
            let e = fams.entry(p.family.clone()).or_insert_with(|| {
                order.push(p.family.clone());
                (true, true, false, false)
            });
            // (all g1 empty, all g0 empty, some g1 empty, some g0 empty)
            e.0 &= !x.meets_g1;
            e.1 &= !x.meets_g0;
            e.2 |= !x.meets_g1;
            e.3 |= !x.meets_g0;
            evidence.push((p.id.clone(), p.family.clone(), x));
        }
    }
    let mut g1_empty = Vec::new();
    let mut g0_empty = Vec::new();
    let mut mixed = Vec::new();
    for f in order {
        let (all1, all0, some1, some0) = fams[&f];
        if all1 {
            g1_empty.push(f.clone());
        }
        if all0 {
            g0_empty.push(f.clone());
        }
        if all1 != some1 || all0 != some0 {
            mixed.push(f);
        }
    }
    Ok(Classification {
        g1_empty,
        g0_empty,
        mixed,
        evidence,
    })
}

/// Data row for a pair with g1 ∩ O_min = ∅, instantiated at the pair's parameters.
#[derive(Clone, Debug)]
pub struct EmptyRow {
    pub row: usize,
    pub tilde: ResolvedOrbit,
    pub co0: Vec<ResolvedOrbit>,
    pub stored_dim_g1: i64,
    pub stored_dim_omin: i64,
    pub stored_dim_tilde: i64,
    pub branching: Option<Vec<usize>>,
}

pub fn empty_row(pair: &SymmetricPair) -> Result<EmptyRow> {
    let cat = Catalog::get()?;
    let row = cat
        .pair_row(&pair.family)
        .ok_or_else(|| Error::NoData(format!("row for {}", pair.family)))?;
    let env = pair.env();
    if !row.range.holds(&env).unwrap_or(false) {
        return Err(Error::NoData(format!(
            "{} outside the range of row {}",
            pair.id, row.row
        )));
    }
    let res = |r| {
        resolve_ref(r, &env, cat).map_err(|e| Error::Catalog {
            source_name: "pairs.txt".into(),
            line: row.row,
            reason: e,
        })
    };
    let ev = |e: &crate::template::Expr| {
        e.eval(&env).map_err(|x| Error::Catalog {
            source_name: "pairs.txt".into(),
            line: row.row,
            reason: x.0,
        })
    };
    let tilde = res(&row.tilde)?;
    if tilde.rs.stype != pair.g {
        return Err(Error::Catalog {
            source_name: "pairs.txt".into(),
            line: row.row,
            reason: format!("tilde orbit lives in {}, not {}", tilde.rs.stype, pair.g),
        });
    }
    Ok(EmptyRow {
        row: row.row,
        tilde,
        co0: row.co0.iter().map(res).collect::<Result<_>>()?,
        stored_dim_g1: ev(&row.dim_g1)?,
        stored_dim_omin: ev(&row.dim_omin)?,
        stored_dim_tilde: ev(&row.dim_tilde)?,
        branching: row.branching.clone(),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum FiniteMap {
    Phi,
    Psi,
}

#[derive(Clone, Debug, Serialize)]
pub struct ProjectionSummary {
    pub finite_map: FiniteMap,
    pub degree: usize,
    pub dim_omin: usize,
    pub dim_phi_image: usize,
    pub dim_psi_image: usize,
    pub phi_image: String,
    pub psi_image: String,
}

pub fn projection_summary(rs: &RootSystem, pair: &SymmetricPair) -> Result<ProjectionSummary> {
    let dmin = grading_summary(rs, &minimal_orbit_diagram(rs)).orbit_dim;
    let x = omin_intersections(rs, pair);
    if x.meets_g1 {
        let psi_image = match (pair.g.letter, pair.family.as_str()) {
            (Letter::A, "A(n) ⊃ so(n+1)") => {
                "symmetric traceless matrices of rank ≤ 2".to_string()
            }
            (Letter::C, "C(n) ⊃ gl(n)") => "pairs of symmetric matrices of rank ≤ 1".to_string(),
            _ => "closure of ψ(O_min), of full dimension".to_string(),
        };
        Ok(ProjectionSummary {
            finite_map: FiniteMap::Psi,
            degree: 2,
            dim_omin: dmin,
            dim_phi_image: dmin - 1,
            dim_psi_image: dmin,
            phi_image: "cone over the G0-orbit of h".into(),
            psi_image,
        })
    } else {
        let row = empty_row(pair)?;
        let tilde_dim = grading_summary(&row.tilde.rs, &row.tilde.diagram).orbit_dim;
        let co0: Vec<String> = row
            .co0
            .iter()
            .map(|o| format!("{} in {}", o.label, o.algebra))
            .collect();
        Ok(ProjectionSummary {
            finite_map: FiniteMap::Phi,
            degree: 2,
            dim_omin: dmin,
            dim_phi_image: dmin,
            dim_psi_image: tilde_dim / 2,
            phi_image: format!("closure of {}", co0.join(" × ")),
            psi_image: format!("closure of {} ∩ g1", row.tilde.label),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SecantDefect {
    pub delta: usize,
    pub cs_dim: usize,
    pub dim_g1: usize,
    pub fills_g1: bool,
    pub symmetric_rank: usize,
}

/// Secant defect of the minimal orbit of g1, as a G0-module.
pub fn secant_defect_g1(rs: &RootSystem, pair: &SymmetricPair) -> Result<SecantDefect> {
    if !pair.g0_is_semisimple() {
        return Err(Error::Unsupported(
            pair.id.clone(),
            "g0 has a centre, so g1 is not a simple g0-module".into(),
        ));
    }
    let x = omin_intersections(rs, pair);
    let (trs, d) = if x.meets_g1 {
        (rs.clone(), minimal_orbit_diagram(rs))
    } else {
        let row = empty_row(pair)?;
        (row.tilde.rs, row.tilde.diagram)
    };
    let s = grading_summary(&trs, &d);
    let delta = s.dim(2) - 1;
    let cs_dim = s.orbit_dim - delta;
    Ok(SecantDefect {
        delta,
        cs_dim,
        dim_g1: pair.dim_g1,
        fills_g1: cs_dim == pair.dim_g1,
        symmetric_rank: pair.symmetric_rank(),
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct SaturationCheck {
    pub pair: String,
    pub method: &'static str,
    pub lhs: String,
    pub rhs: String,
    pub holds: bool,
}

/// Checks that G saturates the co0-orbit of g0 to the tilde orbit of g.
pub fn saturation_check(pair: &SymmetricPair) -> Result<SaturationCheck> {
    let row = empty_row(pair)?;
    let tilde = &row.tilde;
    match &row.branching {
        Some(g1_branch) => {
            if row.co0.len() != 1 {
                return Err(Error::Precondition(
                    "branching data needs a simple g0".into(),
                ));
            }
            let co0 = &row.co0[0];
            let c = sl2_decomposition(&grading_summary(&co0.rs, &co0.diagram))?;
            let t = sl2_decomposition(&grading_summary(&tilde.rs, &tilde.diagram))?;
            let len = c.len().max(g1_branch.len()).max(t.len());
            let pad = |v: &[usize]| {
                (0..len)
                    .map(|i| v.get(i).copied().unwrap_or(0))
                    .collect::<Vec<_>>()
            };
            let sum: Vec<usize> = pad(&c)
                .iter()
                .zip(pad(g1_branch))
                .map(|(a, b)| a + b)
                .collect();
            Ok(SaturationCheck {
                pair: pair.id.clone(),
                method: "sl2-decomposition",
                lhs: format!("{:?}+{:?}={:?}", c, g1_branch, sum),
                rhs: format!("{t:?}"),
                holds: sum == pad(&t),
            })
        }
        None => {
            let Algebra::Classical(gc) = tilde.algebra else {
                return Err(Error::Precondition(
                    "classical rule needs a classical g".into(),
                ));
            };
            let mut parts = Vec::new();
            for o in &row.co0 {
                parts.extend(
                    o.partition
                        .clone()
                        .ok_or_else(|| Error::Precondition("co0 lacks a partition".into()))?,
                );
            }
            let used: usize = parts.iter().sum();
            if used > gc.size() {
                return Err(Error::Precondition(
                    "g0 partitions exceed the defining module of g".into(),
                ));
            }
            // restriction of the defining module of g to g0 adds trivial summands
            parts.extend(std::iter::repeat_n(1, gc.size() - used));
            parts.sort_unstable_by(|a, b| b.cmp(a));
            let t = tilde
                .partition
                .clone()
                .ok_or_else(|| Error::Precondition("tilde lacks a partition".into()))?;
            Ok(SaturationCheck {
                pair: pair.id.clone(),
                method: "partition",
                lhs: crate::orbits::format_partition(&parts),
                rhs: crate::orbits::format_partition(&t),
                holds: parts == t,
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(l: Letter, n: usize) -> RootSystem {
        RootSystem::build(l, n).unwrap()
    }

    fn pair(r: &RootSystem, family: &str) -> SymmetricPair {
        catalog(r)
            .unwrap()
            .into_iter()
            .find(|p| p.family == family)
            .unwrap()
    }

    #[test]
    fn small_catalogs() {
        let a1 = catalog(&rs(Letter::A, 1)).unwrap();
        assert_eq!(a1.len(), 1);
        assert!(a1[0].is_maximal_rank());
        let e6 = rs(Letter::E, 6);
        let pairs = catalog(&e6).unwrap();
        assert_eq!(pairs.len(), 4);
        let f4 = pair(&e6, "E6 ⊃ F4");
        assert_eq!((f4.dim_g1, f4.symmetric_rank()), (26, 2));
        assert!(pairs.iter().any(|p| p.id == "E6/C4"));
    }

    #[test]
    fn ranks() {
        let c4 = rs(Letter::C, 4);
        assert_eq!(pair(&c4, "C(n) ⊃ C(k)+C(n-k)").symmetric_rank(), 1);
        for t in sweep_types(6) {
            let r = RootSystem::from_type(t).unwrap();
            let max: Vec<_> = catalog(&r)
                .unwrap()
                .into_iter()
                .filter(|p| p.is_maximal_rank())
                .collect();
            assert_eq!(max.len(), 1, "{t}");
            assert_eq!(max[0].symmetric_rank(), t.rank);
        }
    }

    #[test]
    fn intersections() {
        let a3 = rs(Letter::A, 3);
        let so = omin_intersections(&a3, &pair(&a3, "A(n) ⊃ so(n+1)"));
        assert_eq!((so.meets_g0, so.meets_g1), (false, true));
        let sp = omin_intersections(&a3, &pair(&a3, "A(2n-1) ⊃ C(n)"));
        assert_eq!((sp.meets_g0, sp.meets_g1), (true, false));
        let e6 = rs(Letter::E, 6);
        let f4 = omin_intersections(&e6, &pair(&e6, "E6 ⊃ F4"));
        assert_eq!((f4.meets_g0, f4.meets_g1), (true, false));
    }

    #[test]
    fn antonyan_filter() {
        let e6 = rs(Letter::E, 6);
        let p = pair(&e6, "E6 ⊃ F4");
        assert!(!orbit_meets_g1(&p, &minimal_orbit_diagram(&e6)));
        assert!(orbit_meets_g1(
            &p,
            &WeightedDiagram::new(&e6, vec![1, 0, 0, 0, 1, 0]).unwrap()
        ));
        for q in catalog(&e6).unwrap() {
            if q.is_maximal_rank() {
                assert!(orbit_meets_g1(
                    &q,
                    &WeightedDiagram::new(&e6, vec![0, 1, 0, 2, 1, 0]).unwrap()
                ));
            }
        }
    }

    #[test]
    fn defects() {
        let f4 = rs(Letter::F, 4);
        let d = secant_defect_g1(&f4, &pair(&f4, "F4 ⊃ B4")).unwrap();
        assert_eq!((d.delta, d.cs_dim, d.fills_g1), (6, 16, true));
        let e6 = rs(Letter::E, 6);
        let d = secant_defect_g1(&e6, &pair(&e6, "E6 ⊃ F4")).unwrap();
        assert_eq!((d.delta, d.cs_dim, d.fills_g1), (7, 25, false));
        let c3 = rs(Letter::C, 3);
        assert!(secant_defect_g1(&c3, &pair(&c3, "C(n) ⊃ gl(n)")).is_err());
    }

    #[test]
    fn saturation() {
        let e6 = rs(Letter::E, 6);
        let s = saturation_check(&pair(&e6, "E6 ⊃ F4")).unwrap();
        assert!(s.holds, "{s:?}");
        let c5 = rs(Letter::C, 5);
        for p in catalog(&c5)
            .unwrap()
            .into_iter()
            .filter(|p| p.family == "C(n) ⊃ C(k)+C(n-k)")
        {
            assert!(saturation_check(&p).unwrap().holds);
        }
    }

    #[test]
    fn lookup_by_id() {
        let (_, p) = find_pair("f4/b4").unwrap();
        assert_eq!(p.family, "F4 ⊃ B4");
        assert!(find_pair("F4/Z9").is_err());
    }
}

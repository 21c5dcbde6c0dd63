//! Plain-text data shipped with the library: curated orbit lists, the rows
//! describing pairs with g1 ∩ O_min = ∅, and the exceptional involutions.
//!
//! The files live in `data/` and are compiled in; setting `MINORBIT_DATA_DIR`
//! makes the loader read `orbits.txt`, `pairs.txt`, `involutions.txt` and
//! `modules.txt` from that directory instead.

use crate::error::{Error, Result};
use crate::orbits::{diagram_from_partition, format_partition, Classical, WeightedDiagram};
use crate::rootsys::{Letter, RootSystem, SimpleType};
use crate::template::{Constraint, Env, Expr, PartitionTemplate};
use std::fmt;
use std::sync::OnceLock;

pub const DATA_DIR_VAR: &str = "MINORBIT_DATA_DIR";

const ORBITS: &str = include_str!("../data/orbits.txt");
const PAIRS: &str = include_str!("../data/pairs.txt");
const INVOLUTIONS: &str = include_str!("../data/involutions.txt");
const MODULES: &str = include_str!("../data/modules.txt");

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClassicalKind {
    Sl,
    So,
    Sp,
}

/// An algebra named in a data file, possibly depending on parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlgebraTemplate {
    Simple(SimpleType),
    Classical(ClassicalKind, Expr),
}

/// A concrete algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Algebra {
    Simple(SimpleType),
    Classical(Classical),
}

impl Algebra {
    pub fn root_system(self) -> Result<RootSystem> {
        match self {
            Algebra::Simple(t) => RootSystem::from_type(t),
            Algebra::Classical(c) => c.root_system(),
        }
    }

    /// The classical matrix algebra with this root system, if any.
    pub fn classical_of(t: SimpleType) -> Option<Classical> {
        let n = t.rank;
        match t.letter {
            Letter::A => Some(Classical::Sl(n + 1)),
            Letter::B => Some(Classical::So(2 * n + 1)),
            Letter::C => Some(Classical::Sp(2 * n)),
            Letter::D => Some(Classical::So(2 * n)),
            _ => None,
        }
    }
}

impl fmt::Display for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Algebra::Simple(t) => write!(f, "{t}"),
            Algebra::Classical(c) => write!(f, "{c}"),
        }
    }
}

impl AlgebraTemplate {
    fn parse(s: &str) -> std::result::Result<Self, String> {
        let s = s.trim();
        for (prefix, kind) in [
            ("sl(", ClassicalKind::Sl),
            ("so(", ClassicalKind::So),
            ("sp(", ClassicalKind::Sp),
        ] {
            if let Some(rest) = s.strip_prefix(prefix) {
                let inner = rest.strip_suffix(')').ok_or("unclosed algebra size")?;
                return Ok(AlgebraTemplate::Classical(
                    kind,
                    Expr::parse(inner).map_err(|e| e.0)?,
                ));
            }
        }
        parse_simple_type(s).map(AlgebraTemplate::Simple)
    }

    pub fn instantiate(&self, env: &Env) -> std::result::Result<Algebra, String> {
        match self {
            AlgebraTemplate::Simple(t) => Ok(Algebra::Simple(*t)),
            AlgebraTemplate::Classical(kind, size) => {
                let n = size.eval(env).map_err(|e| e.0)?;
                if n < 2 {
                    return Err(format!("matrix size {n}"));
                }
                let n = n as usize;
                Ok(Algebra::Classical(match kind {
                    ClassicalKind::Sl => Classical::Sl(n),
                    ClassicalKind::So => Classical::So(n),
                    ClassicalKind::Sp => Classical::Sp(n),
                }))
            }
        }
    }

    /// Parameter value `n` for which this template names `alg`.
    fn solve(&self, alg: Algebra) -> Option<Env> {
        match (self, alg) {
            (AlgebraTemplate::Simple(t), Algebra::Simple(u)) if *t == u => Some(Env::new()),
            (AlgebraTemplate::Classical(kind, size), Algebra::Classical(c)) => {
                let same = matches!(
                    (kind, c),
                    (ClassicalKind::Sl, Classical::Sl(_))
                        | (ClassicalKind::So, Classical::So(_))
                        | (ClassicalKind::Sp, Classical::Sp(_))
                );
                if !same {
                    return None;
                }
                let n = size.solve_affine('n', c.size() as i64, &Env::new())?;
                Some(crate::template::env(&[('n', n)]))
            }
            _ => None,
        }
    }
}

pub fn parse_simple_type(s: &str) -> std::result::Result<SimpleType, String> {
    let mut chars = s.trim().chars();
    let letter = chars
        .next()
        .and_then(Letter::from_char)
        .ok_or_else(|| format!("unknown type {s:?}"))?;
    let rank: usize = chars
        .as_str()
        .parse()
        .map_err(|_| format!("bad rank in {s:?}"))?;
    Ok(SimpleType::new(letter, rank))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OrbitSpec {
    Label(String),
    Partition(PartitionTemplate),
    Diagram(Vec<u8>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitRef {
    pub algebra: AlgebraTemplate,
    pub spec: OrbitSpec,
}

impl OrbitRef {
    fn parse(s: &str) -> std::result::Result<Self, String> {
        let s = s.trim();
        let (alg, rest) = s
            .split_once(':')
            .ok_or_else(|| format!("orbit reference {s:?} lacks an algebra"))?;
        Ok(OrbitRef {
            algebra: AlgebraTemplate::parse(alg)?,
            spec: parse_orbit_spec(rest)?,
        })
    }
}

fn parse_orbit_spec(s: &str) -> std::result::Result<OrbitSpec, String> {
    let s = s.trim();
    if let Some(p) = s.strip_prefix("p:") {
        Ok(OrbitSpec::Partition(
            PartitionTemplate::parse(p).map_err(|e| e.0)?,
        ))
    } else if let Some(d) = s.strip_prefix("d:") {
        d.chars()
            .map(|c| {
                c.to_digit(10)
                    .map(|x| x as u8)
                    .ok_or_else(|| format!("bad diagram digit {c:?}"))
            })
            .collect::<std::result::Result<Vec<u8>, String>>()
            .map(OrbitSpec::Diagram)
    } else if s.is_empty() {
        Err("empty orbit".into())
    } else {
        Ok(OrbitSpec::Label(s.to_string()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub enum Role {
    Min,
    Tilde,
    Other,
}

#[derive(Clone, Debug)]
pub struct OrbitRow {
    pub algebra: AlgebraTemplate,
    pub range: Constraint,
    pub label: Option<String>,
    pub role: Role,
    pub spec: OrbitSpec,
    pub dim: Expr,
}

#[derive(Clone, Debug)]
pub struct PairRow {
    pub row: usize,
    pub family: String,
    pub range: Constraint,
    pub dim_g1: Expr,
    pub dim_omin: Expr,
    pub tilde: OrbitRef,
    pub dim_tilde: Expr,
    pub co0: Vec<OrbitRef>,
    pub branching: Option<Vec<usize>>,
}

#[derive(Clone, Debug)]
pub struct ExceptionalRow {
    pub g: SimpleType,
    pub family: String,
    pub g0: String,
    pub inner: bool,
    pub black: Vec<usize>,
    pub arrows: Vec<(usize, usize)>,
    pub grading: Option<Vec<u8>>,
    pub meets_g0: Option<bool>,
}

/// A fully resolved orbit: its algebra, root system and weighted diagram.
#[derive(Clone, Debug)]
pub struct ResolvedOrbit {
    pub algebra: Algebra,
    pub rs: RootSystem,
    pub label: String,
    pub diagram: WeightedDiagram,
    pub partition: Option<Vec<usize>>,
}

/// One row of the module tables: a type (or series) and the modules listed with it.
#[derive(Clone, Debug)]
pub struct ModuleRow {
    pub table: String,
    pub letter: Letter,
    pub rank: Expr,
    pub range: Constraint,
    /// Alternatives; each is a list of (coefficient, node) terms.
    pub weights: Vec<Vec<(i64, Expr)>>,
    pub dim_v: Expr,
    pub dim_omin: Expr,
    pub delta: Expr,
    pub duality: String,
    pub quotient_dim: String,
}

impl ModuleRow {
    pub fn simple_type(&self, env: &Env) -> Result<SimpleType> {
        let r = self.rank.eval(env).map_err(|e| Error::Precondition(e.0))?;
        SimpleType::new(self.letter, r.max(0) as usize).validate()
    }

    pub fn weights_at(&self, env: &Env, rank: usize) -> Result<Vec<crate::rootsys::Weight>> {
        let mut out = Vec::new();
        for alt in &self.weights {
            let mut w = vec![0i64; rank];
            for (c, node) in alt {
                let i = node.eval(env).map_err(|e| Error::Precondition(e.0))?;
                if i < 1 || i as usize > rank {
                    return Err(Error::Precondition(format!("node {i} outside rank {rank}")));
                }
                w[i as usize - 1] += c;
            }
            out.push(crate::rootsys::Weight(w));
        }
        Ok(out)
    }
}

#[derive(Debug)]
pub struct Catalog {
    pub orbits: Vec<OrbitRow>,
    pub pairs: Vec<PairRow>,
    pub exceptional: Vec<ExceptionalRow>,
    pub modules: Vec<ModuleRow>,
}

fn fields(line: &str) -> Vec<&str> {
    line.split('|').map(str::trim).collect()
}

fn data_lines(src: &str) -> impl Iterator<Item = (usize, &str)> {
    src.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn catalog_err(source_name: &str, line: usize, reason: impl Into<String>) -> Error {
    Error::Catalog {
        source_name: source_name.to_string(),
        line,
        reason: reason.into(),
    }
}

fn expect_fields<'a>(name: &str, line: usize, text: &'a str, n: usize) -> Result<Vec<&'a str>> {
    let f = fields(text);
    if f.len() != n {
        return Err(catalog_err(
            name,
            line,
            format!("expected {n} columns, found {}", f.len()),
        ));
    }
    Ok(f)
}

fn dash(s: &str) -> Option<&str> {
    (s != "-").then_some(s)
}

fn parse_orbits(src: &str) -> Result<Vec<OrbitRow>> {
    let name = "orbits.txt";
    let mut out = Vec::new();
    for (ln, text) in data_lines(src) {
        let f = expect_fields(name, ln, text, 6)?;
        let e = |r: String| catalog_err(name, ln, r);
        out.push(OrbitRow {
            algebra: AlgebraTemplate::parse(f[0]).map_err(e)?,
            range: Constraint::parse(f[1]).map_err(|x| e(x.0))?,
            label: dash(f[2]).map(str::to_string),
            role: match f[3] {
                "min" => Role::Min,
                "tilde" => Role::Tilde,
                "other" => Role::Other,
                r => return Err(e(format!("unknown role {r:?}"))),
            },
            spec: parse_orbit_spec(f[4]).map_err(e)?,
            dim: Expr::parse(f[5]).map_err(|x| e(x.0))?,
        });
    }
    Ok(out)
}

fn parse_pairs(src: &str) -> Result<Vec<PairRow>> {
    let name = "pairs.txt";
    let mut out = Vec::new();
    for (ln, text) in data_lines(src) {
        let f = expect_fields(name, ln, text, 9)?;
        let e = |r: String| catalog_err(name, ln, r);
        let ex = |s: &str| Expr::parse(s).map_err(|x| catalog_err(name, ln, x.0));
        let branching = match dash(f[8]) {
            None => None,
            Some(b) => Some(
                b.split(',')
                    .map(|x| {
                        x.trim()
                            .parse::<usize>()
                            .map_err(|_| e(format!("bad branching {b:?}")))
                    })
                    .collect::<Result<Vec<_>>>()?,
            ),
        };
        out.push(PairRow {
            row: f[0]
                .parse()
                .map_err(|_| e(format!("bad row number {:?}", f[0])))?,
            family: f[1].to_string(),
            range: Constraint::parse(f[2]).map_err(|x| e(x.0))?,
            dim_g1: ex(f[3])?,
            dim_omin: ex(f[4])?,
            tilde: OrbitRef::parse(f[5]).map_err(e)?,
            dim_tilde: ex(f[6])?,
            co0: f[7]
                .split(" x ")
                .map(OrbitRef::parse)
                .collect::<std::result::Result<_, _>>()
                .map_err(e)?,
            branching,
        });
    }
    Ok(out)
}

fn parse_nodes(s: &str) -> std::result::Result<Vec<usize>, String> {
    match dash(s) {
        None => Ok(Vec::new()),
        Some(s) => s
            .split(',')
            .map(|x| match x.trim().parse::<usize>() {
                Ok(v) if v >= 1 => Ok(v - 1),
                _ => Err(format!("bad node {x:?}")),
            })
            .collect(),
    }
}

fn parse_exceptional(src: &str) -> Result<Vec<ExceptionalRow>> {
    let name = "involutions.txt";
    let mut out = Vec::new();
    for (ln, text) in data_lines(src) {
        let f = expect_fields(name, ln, text, 8)?;
        let e = |r: String| catalog_err(name, ln, r);
        let arrows = match dash(f[5]) {
            None => Vec::new(),
            Some(a) => a
                .split(',')
                .map(|p| {
                    let (x, y) = p
                        .split_once('-')
                        .ok_or_else(|| e(format!("bad arrow {p:?}")))?;
                    let v = parse_nodes(&format!("{x},{y}")).map_err(e)?;
                    Ok((v[0], v[1]))
                })
                .collect::<Result<Vec<_>>>()?,
        };
        let inner = match f[3] {
            "inner" => true,
            "outer" => false,
            k => return Err(e(format!("unknown kind {k:?}"))),
        };
        let grading = match dash(f[6]) {
            None => None,
            Some(g) => match parse_orbit_spec(&format!("d:{g}")).map_err(e)? {
                OrbitSpec::Diagram(d) => Some(d),
                _ => unreachable!(),
            },
        };
        let meets_g0 = match f[7] {
            "yes" => Some(true),
            "no" => Some(false),
            "-" => None,
            m => return Err(e(format!("bad flag {m:?}"))),
        };
        if inner != grading.is_some() || inner == meets_g0.is_some() {
            return Err(e(
                "inner involutions need a grading, outer ones a g0 flag".into()
            ));
        }
        out.push(ExceptionalRow {
            g: parse_simple_type(f[0]).map_err(e)?,
            family: f[1].to_string(),
            g0: f[2].to_string(),
            inner,
            black: parse_nodes(f[4]).map_err(e)?,
            arrows,
            grading,
            meets_g0,
        });
    }
    Ok(out)
}

fn parse_family_type(s: &str) -> std::result::Result<(Letter, Expr), String> {
    let s = s.trim();
    let mut chars = s.chars();
    let letter = chars
        .next()
        .and_then(Letter::from_char)
        .ok_or_else(|| format!("unknown type {s:?}"))?;
    let rest = chars.as_str();
    let rank = match rest.strip_prefix('(').and_then(|r| r.strip_suffix(')')) {
        Some(inner) => inner,
        None => rest,
    };
    Ok((letter, Expr::parse(rank).map_err(|e| e.0)?))
}

fn parse_weight_term(t: &str) -> std::result::Result<(i64, Expr), String> {
    let (c, node) = t
        .split_once('w')
        .ok_or_else(|| format!("bad weight term {t:?}"))?;
    let c = if c.trim().is_empty() {
        1
    } else {
        c.trim()
            .trim_end_matches('*')
            .parse()
            .map_err(|_| format!("bad coefficient in {t:?}"))?
    };
    Ok((c, Expr::parse(node).map_err(|e| e.0)?))
}

fn parse_modules(src: &str) -> Result<Vec<ModuleRow>> {
    let name = "modules.txt";
    let mut out = Vec::new();
    for (ln, text) in data_lines(src) {
        let f = expect_fields(name, ln, text, 9)?;
        let e = |r: String| catalog_err(name, ln, r);
        let ex = |s: &str| Expr::parse(s).map_err(|x| catalog_err(name, ln, x.0));
        let (letter, rank) = parse_family_type(f[1]).map_err(e)?;
        let weights = f[3]
            .split(';')
            .map(|alt| {
                alt.split('+')
                    .map(|t| parse_weight_term(t.trim()))
                    .collect::<std::result::Result<Vec<_>, _>>()
            })
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(e)?;
        if !matches!(f[7], "no" | "orth" | "sympl") {
            return Err(e(format!("unknown duality {:?}", f[7])));
        }
        out.push(ModuleRow {
            table: f[0].to_string(),
            letter,
            rank,
            range: Constraint::parse(f[2]).map_err(|x| e(x.0))?,
            weights,
            dim_v: ex(f[4])?,
            dim_omin: ex(f[5])?,
            delta: ex(f[6])?,
            duality: f[7].to_string(),
            quotient_dim: f[8].to_string(),
        });
    }
    Ok(out)
}

fn read_override(file: &str) -> Result<Option<String>> {
    match std::env::var_os(DATA_DIR_VAR) {
        None => Ok(None),
        Some(dir) => {
            let path = std::path::Path::new(&dir).join(file);
            std::fs::read_to_string(&path)
                .map(Some)
                .map_err(|e| catalog_err(file, 0, format!("cannot read {}: {e}", path.display())))
        }
    }
}

static CATALOG: OnceLock<std::result::Result<Catalog, Error>> = OnceLock::new();

impl Catalog {
    pub fn parse(orbits: &str, pairs: &str, involutions: &str, modules: &str) -> Result<Catalog> {
        let cat = Catalog {
            orbits: parse_orbits(orbits)?,
            pairs: parse_pairs(pairs)?,
            exceptional: parse_exceptional(involutions)?,
            modules: parse_modules(modules)?,
        };
        cat.validate_orbits()?;
        Ok(cat)
    }

    /// The shared catalog, loaded on first use.
    pub fn get() -> Result<&'static Catalog> {
        CATALOG
            .get_or_init(|| {
                let orbits = read_override("orbits.txt")?.unwrap_or_else(|| ORBITS.to_string());
                let pairs = read_override("pairs.txt")?.unwrap_or_else(|| PAIRS.to_string());
                let inv =
                    read_override("involutions.txt")?.unwrap_or_else(|| INVOLUTIONS.to_string());
                let modules = read_override("modules.txt")?.unwrap_or_else(|| MODULES.to_string());
                Catalog::parse(&orbits, &pairs, &inv, &modules)
            })
            .as_ref()
            .map_err(Clone::clone)
    }

    pub fn builtin() -> Result<Catalog> {
        Catalog::parse(ORBITS, PAIRS, INVOLUTIONS, MODULES)
    }

    // Exceptional orbit rows are checked now; family rows are checked whenever instantiated.
    fn validate_orbits(&self) -> Result<()> {
        for (i, row) in self.orbits.iter().enumerate() {
            if let AlgebraTemplate::Simple(t) = row.algebra {
                let o = resolve(
                    &row.algebra,
                    row.label.as_deref(),
                    &row.spec,
                    &Env::new(),
                    self,
                )
                .map_err(|r| catalog_err("orbits.txt", i + 1, r))?;
                check_dim(&o, &row.dim, &Env::new())
                    .map_err(|r| catalog_err("orbits.txt", i + 1, format!("{t}: {r}")))?;
            }
        }
        Ok(())
    }

    /// Curated secant-cone orbits for `alg`, in file order.
    pub fn secant_cone_orbits(&self, alg: Algebra) -> Result<Vec<(Role, ResolvedOrbit, usize)>> {
        let mut out = Vec::new();
        for row in &self.orbits {
            let Some(env) = row.algebra.solve(alg) else {
                continue;
            };
            if !row.range.holds(&env).unwrap_or(false) {
                continue;
            }
            let o = resolve(&row.algebra, row.label.as_deref(), &row.spec, &env, self)
                .map_err(|r| Error::NoData(format!("{alg}: {r}")))?;
            let stored = check_dim(&o, &row.dim, &env)
                .map_err(|r| Error::Soundness(format!("{alg}: {r}")))?;
            out.push((row.role, o, stored));
        }
        if out.is_empty() {
            return Err(Error::NoData(alg.to_string()));
        }
        Ok(out)
    }

    pub fn lookup_label(
        &self,
        alg: Algebra,
        label: &str,
    ) -> std::result::Result<ResolvedOrbit, String> {
        for row in &self.orbits {
            if row.label.as_deref() != Some(label) {
                continue;
            }
            if let Some(env) = row.algebra.solve(alg) {
                return resolve(&row.algebra, Some(label), &row.spec, &env, self);
            }
        }
        Err(format!("no orbit {label} for {alg}"))
    }

    pub fn pair_row(&self, family: &str) -> Option<&PairRow> {
        self.pairs.iter().find(|r| r.family == family)
    }
}

fn check_dim(o: &ResolvedOrbit, dim: &Expr, env: &Env) -> std::result::Result<usize, String> {
    let stored = dim.eval(env).map_err(|e| e.0)?;
    let computed = crate::orbits::grading_summary(&o.rs, &o.diagram).orbit_dim;
    if stored != computed as i64 {
        return Err(format!(
            "orbit {} has dimension {computed}, data says {stored}",
            o.label
        ));
    }
    Ok(computed)
}

pub fn resolve_ref(
    r: &OrbitRef,
    env: &Env,
    cat: &Catalog,
) -> std::result::Result<ResolvedOrbit, String> {
    resolve(&r.algebra, None, &r.spec, env, cat)
}

fn resolve(
    alg: &AlgebraTemplate,
    label: Option<&str>,
    spec: &OrbitSpec,
    env: &Env,
    cat: &Catalog,
) -> std::result::Result<ResolvedOrbit, String> {
    let algebra = alg.instantiate(env)?;
    match spec {
        OrbitSpec::Label(l) => cat.lookup_label(algebra, l),
        OrbitSpec::Diagram(d) => {
            let rs = algebra.root_system().map_err(|e| e.to_string())?;
            let diagram = WeightedDiagram::new(&rs, d.clone()).map_err(|e| e.to_string())?;
            Ok(ResolvedOrbit {
                algebra,
                rs,
                label: label
                    .map(str::to_string)
                    .unwrap_or_else(|| diagram.to_string()),
                diagram,
                partition: None,
            })
        }
        OrbitSpec::Partition(p) => {
            let Algebra::Classical(c) = algebra else {
                return Err(format!("partition given for {algebra}"));
            };
            let parts = p.eval(env).map_err(|e| e.0)?;
            let (rs, diagram) = diagram_from_partition(c, &parts).map_err(|e| e.to_string())?;
            Ok(ResolvedOrbit {
                algebra,
                rs,
                label: label
                    .map(str::to_string)
                    .unwrap_or_else(|| format_partition(&parts)),
                diagram,
                partition: Some(parts),
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_catalog_loads() {
        let c = Catalog::builtin().unwrap();
        assert_eq!(c.pairs.len(), 6);
        assert_eq!(c.exceptional.len(), 12);
        assert_eq!(c.modules.len(), 17);
        let d4 = &c.modules[10];
        assert_eq!(d4.weights_at(&Env::new(), 4).unwrap().len(), 3);
    }

    #[test]
    fn corrupt_rows_are_named() {
        let bad = "E6 | - | A1 | min | d:000001 | 23\n";
        match Catalog::parse(bad, "", "", "") {
            Err(Error::Catalog {
                source_name, line, ..
            }) => assert_eq!((source_name.as_str(), line), ("orbits.txt", 1)),
            other => panic!("{other:?}"),
        }
        assert!(
            Catalog::parse("", "", "E6 | x | F4 | outer | - | - | 000001 | yes\n", "").is_err()
        );
        assert!(Catalog::parse("E6 | - | A1 | min | d:0001 | 22\n", "", "", "").is_err());
        assert!(Catalog::parse(
            "",
            "",
            "",
            "serial | A(n) | n>=1 | w1 | n+1 | n+1 | n+1 | maybe | 0\n"
        )
        .is_err());
    }

    #[test]
    fn classical_rows_instantiate() {
        let c = Catalog::builtin().unwrap();
        let rows = c
            .secant_cone_orbits(Algebra::Classical(Classical::Sp(8)))
            .unwrap();
        let dims: Vec<usize> = rows.iter().map(|r| r.2).collect();
        assert_eq!(dims, vec![8, 14]);
        assert!(c
            .secant_cone_orbits(Algebra::Classical(Classical::Sl(5)))
            .is_err());
        assert!(c
            .secant_cone_orbits(Algebra::Simple(SimpleType::new(Letter::E, 7)))
            .is_err());
    }
}

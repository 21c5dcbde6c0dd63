//! Reproduction of the module tables, the table of pairs with g1 ∩ O_min = ∅,
//! the orbit lists of secant cones, and the oracle sweep over fundamental weights.
//!
//! Every number shown is recomputed; the data files are only compared against.

use crate::catalog::{Algebra, Catalog, ModuleRow, Role};
use crate::error::{Error, Result};
use crate::exec::{self, Mode};
use crate::hwmod::{cs_report, delta_sign_tests, HWModule, DEFAULT_CAP};
use crate::involutions::{
    catalog, empty_row, omin_intersections, orbit_meets_g1, saturation_check, sweep_types,
    SaturationCheck, SymmetricPair,
};
use crate::orbits::{
    format_partition, grading_summary, minimal_orbit_diagram, partition_orbit_dim,
};
use crate::rootsys::{RootSystem, SimpleType, Weight};
use crate::template::{env, Env};
use serde::Serialize;
use std::collections::BTreeMap;

const MAX_PARAM: i64 = 64;

fn smallest_n(holds: impl Fn(&Env) -> bool) -> Option<i64> {
    (1..=MAX_PARAM).find(|&n| holds(&env(&[('n', n)])))
}

fn mismatch(out: &mut Vec<String>, what: &str, expected: impl ToString, computed: impl ToString) {
    let (e, c) = (expected.to_string(), computed.to_string());
    if e != c {
        out.push(format!("{what}: expected {e}, computed {c}"));
    }
}

fn weight_label(w: &Weight) -> String {
    let terms: Vec<String> =
        w.0.iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| {
                if c == 1 {
                    format!("w{}", i + 1)
                } else {
                    format!("{c}w{}", i + 1)
                }
            })
            .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join("+")
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ModuleCheck {
    pub table: String,
    pub algebra: String,
    pub weights: Vec<String>,
    pub dim_v: usize,
    pub dim_omin: usize,
    pub delta: usize,
    pub duality: String,
    pub quotient_dim: String,
    pub cs_fills: bool,
    pub mismatches: Vec<String>,
}

impl ModuleCheck {
    pub fn ok(&self) -> bool {
        self.mismatches.is_empty()
    }
}

fn check_module_row(row: &ModuleRow, e: &Env) -> Result<ModuleCheck> {
    let t = row.simple_type(e)?;
    let rs = RootSystem::from_type(t)?;
    let weights = row.weights_at(e, t.rank)?;
    let ev = |x: &crate::template::Expr| x.eval(e).map_err(|p| Error::Precondition(p.0));
    let (dim_v, dim_omin, delta) = (ev(&row.dim_v)?, ev(&row.dim_omin)?, ev(&row.delta)?);
    let mut mismatches = Vec::new();
    let mut first: Option<(usize, usize, usize, String, bool)> = None;
    for w in &weights {
        let m = HWModule::build(&rs, w, DEFAULT_CAP)?;
        let cs = cs_report(&m)?;
        let d = &cs.defect;
        let label = weight_label(w);
        mismatch(
            &mut mismatches,
            &format!("{label} Weyl dimension"),
            m.dim(),
            rs.weyl_dim(w)?,
        );
        mismatch(
            &mut mismatches,
            &format!("{label} orbit dimension by tangents"),
            rs.min_orbit_dim(w)?,
            d.orbit_dim,
        );
        mismatch(
            &mut mismatches,
            &format!("{label} δ by rank"),
            d.delta,
            d.delta_by_rank,
        );
        let vals = (
            m.dim(),
            d.orbit_dim,
            d.delta,
            rs.duality_type(w)?.to_string(),
            cs.fills_module,
        );
        mismatch(&mut mismatches, &format!("{label} dim V"), dim_v, vals.0);
        mismatch(
            &mut mismatches,
            &format!("{label} dim O_min"),
            dim_omin,
            vals.1,
        );
        mismatch(&mut mismatches, &format!("{label} δ"), delta, vals.2);
        mismatch(
            &mut mismatches,
            &format!("{label} self-dual"),
            &row.duality,
            &vals.3,
        );
        if !vals.4 {
            mismatches.push(format!("{label}: secant cone does not fill V"));
        }
        first.get_or_insert(vals);
    }
    let (dv, dom, dl, du, fills) =
        first.ok_or_else(|| Error::Precondition("row lists no module".into()))?;
    Ok(ModuleCheck {
        table: row.table.clone(),
        algebra: t.to_string(),
        weights: weights.iter().map(weight_label).collect(),
        dim_v: dv,
        dim_omin: dom,
        delta: dl,
        duality: du,
        quotient_dim: row.quotient_dim.clone(),
        cs_fills: fills,
        mismatches,
    })
}

/// Rows of a module table. Serial rows are instantiated at every `n` in `ns`
/// that lies in the row's range; with `clamp`, an `n` below the range is
/// raised to the smallest admissible value instead of being skipped.
pub fn module_table(table: &str, ns: &[i64], clamp: bool, mode: Mode) -> Result<Vec<ModuleCheck>> {
    let cat = Catalog::get()?;
    let rows: Vec<&ModuleRow> = cat.modules.iter().filter(|r| r.table == table).collect();
    if rows.is_empty() {
        return Err(Error::NoData(format!("module table {table:?}")));
    }
    let mut jobs: Vec<(&ModuleRow, Env)> = Vec::new();
    for row in rows {
        let mut vars = Vec::new();
        row.rank.vars(&mut vars);
        if vars.is_empty() {
            jobs.push((row, Env::new()));
            continue;
        }
        let holds = |e: &Env| row.range.holds(e).unwrap_or(false);
        let mut seen = Vec::new();
        for &n in ns {
            let n = match smallest_n(holds) {
                Some(lo) if clamp => n.max(lo),
                _ => n,
            };
            if holds(&env(&[('n', n)])) && !seen.contains(&n) {
                seen.push(n);
                jobs.push((row, env(&[('n', n)])));
            }
        }
    }
    exec::map(mode, &jobs, |(row, e)| check_module_row(row, e))
        .into_iter()
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct PairCheck {
    pub row: usize,
    pub pair: String,
    pub family: String,
    pub params: Vec<(char, i64)>,
    pub dim_g1: usize,
    pub dim_omin: usize,
    pub tilde: String,
    pub dim_tilde: usize,
    pub co0: Vec<String>,
    pub dim_co0: usize,
    pub dim_psi_image: usize,
    pub mismatches: Vec<String>,
}

impl PairCheck {
    pub fn ok(&self) -> bool {
        self.mismatches.is_empty()
    }
}

fn check_pair(rs: &RootSystem, pair: &SymmetricPair) -> Result<PairCheck> {
    let row = empty_row(pair)?;
    let mut mm = Vec::new();
    let dim_omin = grading_summary(rs, &minimal_orbit_diagram(rs)).orbit_dim;
    mismatch(
        &mut mm,
        "dim O_min from θ",
        rs.min_orbit_dim(&rs.theta_weight())?,
        dim_omin,
    );
    let t = &row.tilde;
    let dim_tilde = grading_summary(&t.rs, &t.diagram).orbit_dim;
    if let (Algebra::Classical(c), Some(p)) = (t.algebra, &t.partition) {
        mismatch(
            &mut mm,
            "dim tilde from partition",
            partition_orbit_dim(c, p)?,
            dim_tilde,
        );
    }
    let mut dim_co0 = 0;
    for o in &row.co0 {
        let d = grading_summary(&o.rs, &o.diagram).orbit_dim;
        if let (Algebra::Classical(c), Some(p)) = (o.algebra, &o.partition) {
            mismatch(
                &mut mm,
                "dim co0 from partition",
                partition_orbit_dim(c, p)?,
                d,
            );
        }
        dim_co0 += d;
    }
    mismatch(&mut mm, "dim g1", row.stored_dim_g1, pair.dim_g1);
    mismatch(&mut mm, "dim O_min", row.stored_dim_omin, dim_omin);
    mismatch(&mut mm, "dim tilde", row.stored_dim_tilde, dim_tilde);
    mismatch(&mut mm, "dim co0 (finiteness of φ)", dim_omin, dim_co0);
    if omin_intersections(rs, pair).meets_g1 {
        mm.push("O_min meets g1".into());
    }
    if !orbit_meets_g1(pair, &t.diagram) {
        mm.push("tilde orbit misses g1".into());
    }
    if !dim_tilde.is_multiple_of(2) {
        mm.push(format!("dim tilde {dim_tilde} is odd"));
    }
    let psi = dim_tilde / 2;
    if !(psi < dim_omin && dim_omin < dim_tilde) {
        mm.push(format!(
            "expected dim ψ(O) {psi} < dim O_min {dim_omin} < dim tilde {dim_tilde}"
        ));
    }
    let name = |o: &crate::catalog::ResolvedOrbit| format!("{}:{}", o.algebra, o.label);
    Ok(PairCheck {
        row: row.row,
        pair: pair.id.clone(),
        family: pair.family.clone(),
        params: pair.params.clone(),
        dim_g1: pair.dim_g1,
        dim_omin,
        tilde: name(t),
        dim_tilde,
        co0: row.co0.iter().map(name).collect(),
        dim_co0,
        dim_psi_image: psi,
        mismatches: mm,
    })
}

/// The members of every row of the pairs data at parameter `n` (all `k`),
/// with `n` clamped to each row's range.
pub fn empty_pairs(n: i64) -> Result<Vec<(RootSystem, SymmetricPair)>> {
    let cat = Catalog::get()?;
    let mut out = Vec::new();
    for row in &cat.pairs {
        let mut vars = Vec::new();
        row.dim_g1.vars(&mut vars);
        row.dim_tilde.vars(&mut vars);
        let algebra = if vars.is_empty() {
            row.tilde.algebra.instantiate(&Env::new())
        } else {
            let holds = |e: &Env| {
                // the range may involve k; any admissible k will do here
                (1..=MAX_PARAM).any(|k| {
                    let mut e = e.clone();
                    e.insert('k', k);
                    row.range.holds(&e).unwrap_or(false)
                })
            };
            let lo = smallest_n(holds)
                .ok_or_else(|| Error::NoData(format!("row {} has an empty range", row.row)))?;
            row.tilde.algebra.instantiate(&env(&[('n', n.max(lo))]))
        }
        .map_err(|r| Error::Catalog {
            source_name: "pairs.txt".into(),
            line: row.row,
            reason: r,
        })?;
        let rs = algebra.root_system()?;
        let members: Vec<SymmetricPair> = catalog(&rs)?
            .into_iter()
            .filter(|p| p.family == row.family && row.range.holds(&p.env()).unwrap_or(false))
            .collect();
        if members.is_empty() {
            return Err(Error::NoData(format!(
                "no member of {} in {}",
                row.family,
                rs.name()
            )));
        }
        out.extend(members.into_iter().map(|p| (rs.clone(), p)));
    }
    Ok(out)
}

pub fn pairs_table(n: i64, mode: Mode) -> Result<Vec<PairCheck>> {
    let jobs = empty_pairs(n)?;
    exec::map(mode, &jobs, |(rs, p)| check_pair(rs, p))
        .into_iter()
        .collect()
}

pub fn saturation_table(n: i64, mode: Mode) -> Result<Vec<SaturationCheck>> {
    let jobs = empty_pairs(n)?;
    exec::map(mode, &jobs, |(_, p)| saturation_check(p))
        .into_iter()
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct ConeOrbit {
    pub role: Role,
    pub label: String,
    pub diagram: String,
    pub partition: Option<String>,
    pub dim: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct FilterResult {
    pub pair: String,
    /// Non-minimal orbits of the list that meet g1.
    pub meeting_g1: Vec<String>,
    pub tilde: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct ConeTable {
    pub algebra: String,
    pub orbits: Vec<ConeOrbit>,
    pub filters: Vec<FilterResult>,
    pub mismatches: Vec<String>,
}

impl ConeTable {
    pub fn ok(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// The orbit list for `alg` with recomputed dimensions, and for every pair
/// with g1 ∩ O_min = ∅ on `alg` the orbits picked out by Antonyan's criterion.
pub fn secant_cone_table(alg: Algebra) -> Result<ConeTable> {
    let cat = Catalog::get()?;
    let list = cat.secant_cone_orbits(alg)?;
    let rs = alg.root_system()?;
    let mut mm = Vec::new();
    let orbits: Vec<ConeOrbit> = list
        .iter()
        .map(|(role, o, dim)| ConeOrbit {
            role: *role,
            label: o.label.clone(),
            diagram: o.diagram.to_string(),
            partition: o.partition.as_deref().map(format_partition),
            dim: *dim,
        })
        .collect();
    let mins: Vec<_> = list.iter().filter(|(r, _, _)| *r == Role::Min).collect();
    match mins.as_slice() {
        [(_, o, _)] if o.diagram == minimal_orbit_diagram(&rs) => {}
        _ => mm.push("the list must contain the minimal orbit exactly once".into()),
    }
    let mut filters = Vec::new();
    for p in catalog(&rs)? {
        if cat.pair_row(&p.family).is_none() || omin_intersections(&rs, &p).meets_g1 {
            continue;
        }
        let row = empty_row(&p)?;
        let meeting: Vec<String> = list
            .iter()
            .filter(|(r, o, _)| *r != Role::Min && orbit_meets_g1(&p, &o.diagram))
            .map(|(_, o, _)| o.label.clone())
            .collect();
        let tildes: Vec<&String> = list
            .iter()
            .filter(|(_, o, _)| o.diagram == row.tilde.diagram)
            .map(|(_, o, _)| &o.label)
            .collect();
        if meeting.len() != 1 || tildes.len() != 1 || &meeting[0] != tildes[0] {
            mm.push(format!(
                "{}: orbits meeting g1 {:?}, tilde {:?}",
                p.id, meeting, tildes
            ));
        }
        let tag: Vec<&String> = list
            .iter()
            .filter(|(r, _, _)| *r == Role::Tilde)
            .map(|(_, o, _)| &o.label)
            .collect();
        if tag != tildes {
            mm.push(format!(
                "{}: list marks {:?} as tilde, pair data gives {:?}",
                p.id, tag, tildes
            ));
        }
        filters.push(FilterResult {
            pair: p.id.clone(),
            meeting_g1: meeting,
            tilde: row.tilde.label.clone(),
        });
    }
    Ok(ConeTable {
        algebra: alg.to_string(),
        orbits,
        filters,
        mismatches: mm,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct OracleRow {
    pub algebra: String,
    pub node: usize,
    pub dim: usize,
    pub delta: usize,
    pub delta_by_rank: usize,
    pub dual_node: usize,
    pub theta_pairing: String,
    pub necessary_condition_holds: bool,
    /// Experimental predicate, reported next to the computed sign of δ.
    pub experimental_prediction: Option<bool>,
}

#[derive(Clone, Debug, Serialize)]
pub struct OracleSweep {
    pub rows: Vec<OracleRow>,
    pub skipped: Vec<(String, usize, u128)>,
    pub failures: Vec<String>,
    /// Rows where the experimental predicate applies and disagrees with δ > 0.
    /// Informational only.
    pub experimental_disagreements: Vec<String>,
    pub experimental_checked: usize,
}

/// δ two ways and the necessary condition on (λ, θ^∨), for every fundamental
/// weight of rank ≤ `max_rank` whose module has dimension ≤ `max_dim`.
pub fn oracle_sweep(max_rank: usize, max_dim: u128, mode: Mode) -> Result<OracleSweep> {
    let mut types: Vec<SimpleType> = sweep_types(max_rank)
        .into_iter()
        .filter(|t| t.rank <= max_rank)
        .collect();
    types.sort();
    let mut jobs = Vec::new();
    let mut skipped = Vec::new();
    for t in types {
        let rs = RootSystem::from_type(t)?;
        for i in 0..t.rank {
            let w = Weight::fundamental(t.rank, i);
            let d = rs.weyl_dim(&w)?;
            if d <= max_dim {
                jobs.push((rs.clone(), i, w));
            } else {
                skipped.push((t.to_string(), i + 1, d));
            }
        }
    }
    let rows: Vec<OracleRow> = exec::map(mode, &jobs, |(rs, i, w)| -> Result<OracleRow> {
        let m = HWModule::build(rs, w, max_dim as usize)?;
        let s = delta_sign_tests(&m)?;
        let d = crate::hwmod::secant_defect(&m);
        let dual = rs.dual_weight(w)?;
        Ok(OracleRow {
            algebra: rs.stype.to_string(),
            node: i + 1,
            dim: m.dim(),
            delta: d.delta,
            delta_by_rank: d.delta_by_rank,
            dual_node: dual.0.iter().position(|&c| c == 1).map_or(0, |p| p + 1),
            theta_pairing: s.theta_pairing,
            necessary_condition_holds: s.necessary_condition_holds,
            experimental_prediction: s.experimental_prediction,
        })
    })
    .into_iter()
    .collect::<Result<_>>()?;
    let mut failures = Vec::new();
    let by_key: BTreeMap<(String, usize), usize> = rows
        .iter()
        .map(|r| ((r.algebra.clone(), r.node), r.delta))
        .collect();
    for r in &rows {
        if r.delta != r.delta_by_rank {
            failures.push(format!(
                "{} w{}: δ {} by intersection, {} by rank",
                r.algebra, r.node, r.delta, r.delta_by_rank
            ));
        }
        if !r.necessary_condition_holds {
            failures.push(format!(
                "{} w{}: δ = {} with (λ,θ^∨) = {}",
                r.algebra, r.node, r.delta, r.theta_pairing
            ));
        }
        if let Some(&dd) = by_key.get(&(r.algebra.clone(), r.dual_node)) {
            if dd != r.delta {
                failures.push(format!(
                    "{} w{}: δ differs from its dual",
                    r.algebra, r.node
                ));
            }
        }
    }
    let mut experimental_disagreements = Vec::new();
    let mut experimental_checked = 0;
    for r in &rows {
        if let Some(p) = r.experimental_prediction {
            experimental_checked += 1;
            if p != (r.delta > 0) {
                experimental_disagreements.push(format!(
                    "{} w{}: predicted {p}, δ = {}",
                    r.algebra, r.node, r.delta
                ));
            }
        }
    }
    Ok(OracleSweep {
        rows,
        skipped,
        failures,
        experimental_disagreements,
        experimental_checked,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orbits::Classical;
    use crate::rootsys::Letter;

    #[test]
    fn serial_rows_clamp() {
        let rows = module_table("serial", &[4], true, Mode::Sequential).unwrap();
        let names: Vec<&str> = rows.iter().map(|r| r.algebra.as_str()).collect();
        assert_eq!(names, ["A4", "B4", "C4", "D5"]);
        assert!(rows.iter().all(|r| r.ok()), "{rows:#?}");
    }

    #[test]
    fn sporadic_rows() {
        let rows = module_table("sporadic", &[], false, Mode::default()).unwrap();
        assert_eq!(rows.len(), 13);
        for r in &rows {
            assert!(r.ok(), "{r:#?}");
        }
        let e7 = rows.iter().find(|r| r.algebra == "E7").unwrap();
        assert_eq!(
            (e7.dim_v, e7.dim_omin, e7.delta, e7.duality.as_str()),
            (56, 28, 0, "sympl")
        );
    }

    #[test]
    fn pairs_rows() {
        let rows = pairs_table(3, Mode::default()).unwrap();
        assert_eq!(rows.iter().map(|r| r.row).max(), Some(6));
        for r in &rows {
            assert!(r.ok(), "{r:#?}");
        }
        let e6 = rows.iter().find(|r| r.pair == "E6/F4").unwrap();
        assert_eq!((e6.dim_g1, e6.dim_omin, e6.dim_tilde), (26, 22, 32));
    }

    #[test]
    fn cones() {
        let e6 = secant_cone_table(Algebra::Simple(SimpleType::new(Letter::E, 6))).unwrap();
        assert!(e6.ok(), "{e6:#?}");
        let dims: Vec<usize> = e6.orbits.iter().map(|o| o.dim).collect();
        assert_eq!(dims, [22, 32, 40, 42]);
        let sp = secant_cone_table(Algebra::Classical(Classical::Sp(8))).unwrap();
        assert!(sp.ok(), "{sp:#?}");
        assert_eq!(sp.filters.len(), 2);
    }
}

//! The eight acceptance criteria, one line each. Exits nonzero if any fails.

use minorbit::catalog::Algebra;
use minorbit::exec::Mode;
use minorbit::hwmod::{cs_report, HWModule, DEFAULT_CAP};
use minorbit::involutions::{
    catalog, classify_empty, find_pair, omin_intersections, secant_defect_g1, sweep_types,
};
use minorbit::matrixlab::checks::span_dim;
use minorbit::matrixlab::sample::{g1_min_sample_with, rng_for};
use minorbit::matrixlab::{default_pairs, realize_pair, run_suite, PairKind};
use minorbit::orbits::Classical;
use minorbit::rootsys::{Letter, RootSystem, SimpleType, Weight};
use minorbit::tables;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn e<T, E: std::fmt::Display>(r: Result<T, E>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn within(t: Instant, limit: Duration, what: &str) -> Result<(), String> {
    let took = t.elapsed();
    ensure!(took < limit, "{what} took {took:?}, limit {limit:?}");
    Ok(())
}

fn module_tables() -> Outcome {
    let t = Instant::now();
    let ns: Vec<i64> = (2..=6).collect();
    let mut rows = e(tables::module_table("serial", &ns, false, Mode::default()))?;
    rows.extend(e(tables::module_table(
        "sporadic",
        &ns,
        false,
        Mode::default(),
    ))?);
    for r in &rows {
        ensure!(r.ok(), "{} {:?}: {:?}", r.algebra, r.weights, r.mismatches);
    }
    let find = |alg: &str, w: &str| {
        rows.iter()
            .find(|r| r.algebra == alg && r.weights.iter().any(|x| x == w))
    };
    for (alg, w, want) in [
        ("E7", "w1", (56, 28, 0, "sympl")),
        ("G2", "w1", (7, 6, 5, "orth")),
        ("A3", "w2", (6, 5, 4, "orth")),
    ] {
        let r = find(alg, w).ok_or(format!("no row ({alg},{w})"))?;
        let got = (r.dim_v, r.dim_omin, r.delta, r.duality.as_str());
        ensure!(got == want, "({alg},{w}): {got:?} != {want:?}");
    }
    // every serial row appears once per n in range
    for (alg, n) in [("B2", 2), ("C6", 6), ("D5", 5), ("A6", 6)] {
        ensure!(
            rows.iter().any(|r| r.algebra == alg),
            "serial row for n = {n} missing ({alg})"
        );
    }
    within(t, Duration::from_secs(120), "tables")?;
    Ok(format!("{} rows, {:.1?}", rows.len(), t.elapsed()))
}

fn classification() -> Outcome {
    let t = Instant::now();
    let c = e(classify_empty(8))?;
    let sorted = |v: &[&str]| {
        let mut v: Vec<String> = v.iter().map(|s| s.to_string()).collect();
        v.sort();
        v
    };
    let mut g1 = c.g1_empty.clone();
    g1.sort();
    let mut g0 = c.g0_empty.clone();
    g0.sort();
    let want_g1 = sorted(&[
        "E6 ⊃ F4",
        "F4 ⊃ B4",
        "D(n+1) ⊃ B(n)",
        "B(n) ⊃ D(n)",
        "A(2n-1) ⊃ C(n)",
        "C(n) ⊃ C(k)+C(n-k)",
    ]);
    ensure!(g1 == want_g1, "g1-empty {g1:?}");
    ensure!(
        g0 == sorted(&["A(n) ⊃ so(n+1)", "C(n) ⊃ gl(n)"]),
        "g0-empty {g0:?}"
    );
    ensure!(
        c.mixed.is_empty(),
        "families with members on both sides: {:?}",
        c.mixed
    );
    within(t, Duration::from_secs(30), "classification")?;
    Ok(format!(
        "{} pairs swept, {:.1?}",
        c.evidence.len(),
        t.elapsed()
    ))
}

/// Orbit dimension from a partition, by the classical formulas.
fn partition_dim(alg: Classical, label: &str) -> usize {
    let mut parts = Vec::new();
    for term in label.trim_matches(|c| c == '(' || c == ')').split(',') {
        let (p, m) = term.split_once('^').unwrap_or((term, "1"));
        parts.extend(std::iter::repeat_n(
            p.parse::<usize>().unwrap(),
            m.parse().unwrap(),
        ));
    }
    let dual_sq: usize = (1..=parts[0])
        .map(|i| parts.iter().filter(|&&p| p >= i).count().pow(2))
        .sum();
    let odd = parts.iter().filter(|&&p| p % 2 == 1).count();
    match alg {
        Classical::Sl(n) => n * n - dual_sq,
        Classical::Sp(n) => n * (n + 1) / 2 - (dual_sq + odd) / 2,
        Classical::So(n) => n * (n - 1) / 2 - (dual_sq - odd) / 2,
    }
}

fn cone_orbits() -> Outcome {
    let mut algebras = vec![
        (
            Algebra::Simple(SimpleType::new(Letter::E, 6)),
            vec![22, 32, 40, 42],
        ),
        (
            Algebra::Simple(SimpleType::new(Letter::F, 4)),
            vec![16, 22, 28, 30],
        ),
    ];
    for n in 2..=5 {
        algebras.push((Algebra::Classical(Classical::Sl(2 * n)), vec![]));
        algebras.push((Algebra::Classical(Classical::Sp(2 * n)), vec![]));
    }
    let mut pairs = 0;
    for (alg, want) in &algebras {
        let t = e(tables::secant_cone_table(*alg))?;
        ensure!(t.ok(), "{alg}: {:?}", t.mismatches);
        let dims: Vec<usize> = t.orbits.iter().map(|o| o.dim).collect();
        match alg {
            Algebra::Classical(c) => {
                for o in &t.orbits {
                    let p = o
                        .partition
                        .as_deref()
                        .ok_or(format!("{alg} {} has no partition", o.label))?;
                    ensure!(
                        partition_dim(*c, p) == o.dim,
                        "{alg} {p}: {} vs formula {}",
                        o.dim,
                        partition_dim(*c, p)
                    );
                }
            }
            Algebra::Simple(_) => ensure!(&dims == want, "{alg}: {dims:?}"),
        }
        ensure!(!t.filters.is_empty(), "{alg}: no pair with g1 ∩ O_min = ∅");
        for f in &t.filters {
            ensure!(
                f.meeting_g1 == [f.tilde.clone()],
                "{}: {:?} vs tilde {}",
                f.pair,
                f.meeting_g1,
                f.tilde
            );
        }
        pairs += t.filters.len();
    }
    Ok(format!(
        "{} algebras, {pairs} pairs each with one selected orbit",
        algebras.len()
    ))
}

fn pairs_table() -> Outcome {
    let want = [
        ("E6/F4", 26, 22, 32),
        ("F4/B4", 16, 16, 22),
        ("D4/B3", 7, 10, 12),
        ("B3/A3", 6, 8, 10),
        ("A5/C3", 14, 10, 16),
        ("C3/A1+C2", 8, 6, 10),
    ];
    let rows = e(tables::pairs_table(3, Mode::default()))?;
    ensure!(rows.len() == 6, "{} rows", rows.len());
    for (r, w) in rows.iter().zip(want) {
        ensure!(r.ok(), "{}: {:?}", r.pair, r.mismatches);
        let got = (r.pair.as_str(), r.dim_g1, r.dim_omin, r.dim_tilde);
        ensure!(got == w, "{got:?} != {w:?}");
        ensure!(
            r.dim_co0 == r.dim_omin,
            "{}: dim co0 {} != {}",
            r.pair,
            r.dim_co0,
            r.dim_omin
        );
    }
    let mut checked = rows.len();
    for n in 4..=6 {
        for r in e(tables::pairs_table(n, Mode::default()))? {
            ensure!(
                r.ok() && r.dim_co0 == r.dim_omin,
                "{} at n = {n}: {:?}",
                r.pair,
                r.mismatches
            );
            checked += 1;
        }
    }
    Ok(format!("{checked} members over n = 3..6"))
}

fn saturation() -> Outcome {
    let checks = e(tables::saturation_table(3, Mode::default()))?;
    ensure!(checks.len() == 6, "{} checks", checks.len());
    for c in &checks {
        ensure!(c.holds, "{}: {} vs {}", c.pair, c.lhs, c.rhs);
    }
    let lhs = |id: &str| {
        checks
            .iter()
            .find(|c| c.pair == id)
            .map(|c| (c.lhs.clone(), c.rhs.clone()))
    };
    ensure!(
        lhs("E6/F4")
            == Some((
                "[15, 8, 7]+[7, 8, 1]=[22, 16, 8]".into(),
                "[22, 16, 8]".into()
            )),
        "E6/F4: {:?}",
        lhs("E6/F4")
    );
    ensure!(
        lhs("F4/B4")
            == Some((
                "[10, 4, 6]+[5, 4, 1]=[15, 8, 7]".into(),
                "[15, 8, 7]".into()
            )),
        "F4/B4: {:?}",
        lhs("F4/B4")
    );
    let partitions = checks.iter().filter(|c| c.method == "partition").count();
    ensure!(partitions == 4, "{partitions} partition identities");
    Ok("2 decomposition and 4 partition identities".into())
}

/// δ of the g0-module g1 directly from the highest-weight construction.
fn module_delta(letter: Letter, rank: usize, w: &[i64]) -> Result<(usize, usize), String> {
    let rs = e(RootSystem::from_type(SimpleType::new(letter, rank)))?;
    let m = e(HWModule::build(&rs, &Weight(w.to_vec()), DEFAULT_CAP))?;
    let r = e(cs_report(&m))?;
    Ok((r.defect.delta, r.cs_dim))
}

/// 2 dim X − dim ([g0,x] + [g0,y]) for two random points of X = G0·e, e ∈ O_min ∩ g1.
fn terracini_in_g1(kind: PairKind) -> Result<usize, String> {
    let r = e(realize_pair(kind))?;
    let mut rng = rng_for(11);
    let x = g1_min_sample_with(&r, &mut rng).ok_or("no point of O_min in g1")?;
    let y = g1_min_sample_with(&r, &mut rng).ok_or("no point of O_min in g1")?;
    let dx = span_dim(&r, r.g0.iter().map(|b| b.commutator(&x)));
    let dxy = span_dim(
        &r,
        r.g0.iter()
            .map(|b| b.commutator(&x))
            .chain(r.g0.iter().map(|b| b.commutator(&y))),
    );
    Ok(2 * dx - dxy)
}

fn secant_defects() -> Outcome {
    let (rs, f4b4) = e(find_pair("F4/B4"))?;
    let d = e(secant_defect_g1(&rs, &f4b4))?;
    ensure!(d.delta == 6 && d.fills_g1 && d.cs_dim == 16, "F4/B4: {d:?}");
    ensure!(
        module_delta(Letter::B, 4, &[0, 0, 0, 1])? == (6, 16),
        "B4 spin module disagrees"
    );
    let (rs, e6f4) = e(find_pair("E6/F4"))?;
    let d = e(secant_defect_g1(&rs, &e6f4))?;
    ensure!(
        d.delta == 7 && d.cs_dim == 25 && d.dim_g1 == 26 && !d.fills_g1,
        "E6/F4: {d:?}"
    );
    ensure!(
        module_delta(Letter::F, 4, &[1, 0, 0, 0])? == (7, 25),
        "F4 26-dimensional module disagrees"
    );
    let mut zero = 0;
    for t in sweep_types(8) {
        let rs = e(RootSystem::from_type(t))?;
        for p in e(catalog(&rs))? {
            if !omin_intersections(&rs, &p).meets_g1 || !p.g0_is_semisimple() {
                continue;
            }
            let d = e(secant_defect_g1(&rs, &p))?;
            ensure!(d.delta == 0, "{}: δ = {}", p.id, d.delta);
            zero += 1;
        }
    }
    for kind in [
        PairKind::SlSo { n: 3 },
        PairKind::SlSo { n: 4 },
        PairKind::SlSo { n: 5 },
    ] {
        let delta = terracini_in_g1(kind)?;
        ensure!(delta == 0, "{kind}: matrix model gives δ = {delta}");
    }
    Ok(format!(
        "F4/B4 δ=6, E6/F4 δ=7, δ=0 on {zero} pairs meeting g1"
    ))
}

fn matrix_suite() -> Outcome {
    let t = Instant::now();
    let report = e(run_suite(&default_pairs(), 100, 7, Mode::default()))?;
    let failures = report.failures();
    let tally = report.tally();
    let count = |name: &str| tally.iter().find(|x| x.0 == name).map_or(0, |x| x.1);
    for name in [
        "[a,b] = 0",
        "(ad a)^3 = 0",
        "(ad b)^3 = 0",
        "psi-fiber h1+h",
        "psi-fiber h1-h",
        "phi-fiber family",
        "phi-fiber a+b",
        "phi-fiber a-b",
        "Kostant-Rallis half dimension",
        "psi image in Sym°2",
    ] {
        ensure!(count(name) > 0, "check {name:?} never ran");
    }
    for p in &report.pairs {
        ensure!(
            p.samples.len() == 100,
            "{}: {} samples",
            p.pair,
            p.samples.len()
        );
    }
    if failures > 0 {
        let bad: Vec<String> = tally
            .iter()
            .filter(|x| x.2 > 0)
            .map(|x| format!("{} ({}/{})", x.0, x.2, x.1))
            .collect();
        return Err(format!("{failures} failures: {}", bad.join(", ")));
    }
    within(t, Duration::from_secs(300), "matrix suite")?;
    let checks: usize = tally.iter().map(|x| x.1).sum();
    Ok(format!(
        "{} pairs x 100 samples, {checks} checks, {:.1?}",
        report.pairs.len(),
        t.elapsed()
    ))
}

fn oracle() -> Outcome {
    let s = e(tables::oracle_sweep(5, 300, Mode::default()))?;
    ensure!(s.failures.is_empty(), "{:?}", s.failures);
    for r in &s.rows {
        ensure!(
            r.delta == r.delta_by_rank,
            "{} node {}: {} vs {}",
            r.algebra,
            r.node,
            r.delta,
            r.delta_by_rank
        );
        ensure!(
            r.dim <= 300,
            "{} node {} exceeds the bound",
            r.algebra,
            r.node
        );
        ensure!(
            r.necessary_condition_holds,
            "{} node {}: δ = {}, (λ,θ∨) = {}",
            r.algebra,
            r.node,
            r.delta,
            r.theta_pairing
        );
    }
    let positive = s.rows.iter().filter(|r| r.delta > 0).count();
    Ok(format!(
        "{} modules ({positive} with δ > 0), {} above the bound",
        s.rows.len(),
        s.skipped.len()
    ))
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("module tables at n = 2..6", module_tables),
        ("classification of empty intersections", classification),
        ("secant cone orbit data", cone_orbits),
        ("pairs with O_min ∩ g1 empty", pairs_table),
        ("orbit saturation identities", saturation),
        ("secant defects of O_min(g1)", secant_defects),
        ("matrix property suite", matrix_suite),
        ("oracle consistency sweep", oracle),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let outcome = match catch_unwind(AssertUnwindSafe(f)) {
            Ok(o) => o,
            Err(p) => Err(format!(
                "panicked: {}",
                p.downcast_ref::<String>()
                    .cloned()
                    .or(p.downcast_ref::<&str>().map(|s| s.to_string()))
                    .unwrap_or_default()
            )),
        };
        match outcome {
            Ok(detail) => println!("criterion {}: PASS  {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}: {why}", i + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}

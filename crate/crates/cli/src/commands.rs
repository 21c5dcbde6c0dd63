//! The subcommands.

use crate::render::{emit, yes_no, Format, Table};
use crate::{CheckId, Cli, Command, Numbering, Outcome, TableId};
use minorbit::catalog::{parse_simple_type, Algebra};
use minorbit::exec::Mode;
use minorbit::hwmod::{cs_report, delta_sign_tests, HWModule};
use minorbit::involutions::{classify_empty, SaturationCheck};
use minorbit::matrixlab::{default_pairs, run_suite, PairKind, SuiteReport};
use minorbit::orbits::Classical;
use minorbit::rootsys::{Letter, RootSystem, SimpleType, Weight};
use minorbit::tables;
use serde::Serialize;
use std::io::Write;

/// Families whose g1 misses O_min, as listed in the classification.
pub const G1_EMPTY: [&str; 6] = [
    "E6 ⊃ F4",
    "F4 ⊃ B4",
    "D(n+1) ⊃ B(n)",
    "B(n) ⊃ D(n)",
    "A(2n-1) ⊃ C(n)",
    "C(n) ⊃ C(k)+C(n-k)",
];
/// Families whose g0 misses O_min.
pub const G0_EMPTY: [&str; 2] = ["A(n) ⊃ so(n+1)", "C(n) ⊃ gl(n)"];

const MAX_SWEEP_RANK: usize = 8;

pub enum Failure {
    Usage(String),
    Math(String),
    /// The reader closed stdout.
    Closed,
}

impl From<minorbit::Error> for Failure {
    fn from(e: minorbit::Error) -> Self {
        match e {
            minorbit::Error::Soundness(_) | minorbit::Error::Catalog { .. } => {
                Failure::Math(e.to_string())
            }
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            return Failure::Closed;
        }
        Failure::Usage(format!("i/o: {e}"))
    }
}

type Res = Result<Outcome, Failure>;

fn outcome(ok: bool) -> Outcome {
    if ok {
        Outcome::Pass
    } else {
        Outcome::Mismatch
    }
}

pub fn run(cli: &Cli, out: &mut impl Write) -> Res {
    let mode = if cli.sequential {
        Mode::Sequential
    } else {
        Mode::default()
    };
    let ctx = Ctx {
        format: cli.format,
        numbering: cli.numbering,
        mode,
    };
    match &cli.command {
        Command::Tables {
            id,
            n,
            g,
            max_rank,
            max_dim,
        } => match id {
            TableId::Serial => module_table(&ctx, "serial", *n, out),
            TableId::Sporadic => module_table(&ctx, "sporadic", *n, out),
            TableId::Pairs => pairs_table(&ctx, n.unwrap_or(3), out),
            TableId::SecantCone => cone_table(&ctx, g.as_deref(), out),
            TableId::Oracle => oracle_table(&ctx, *max_rank, *max_dim, out),
        },
        Command::Classify {
            max_rank,
            show_criterion,
        } => classify(&ctx, *max_rank, *show_criterion, out),
        Command::Defect {
            letter,
            rank,
            weight,
            cap,
        } => defect(&ctx, letter, *rank, weight, *cap, out),
        Command::Verify {
            pairs,
            pair,
            samples,
            seed,
            check,
            report,
        } => {
            let names = pair.clone().unwrap_or_else(|| pairs.clone());
            verify(&ctx, &names, *samples, *seed, *check, report, out)
        }
        Command::Catalog { max_rank } => catalog(&ctx, *max_rank, out),
        Command::Dump {
            letter,
            rank,
            weight,
            cap,
        } => dump(&ctx, letter, *rank, weight, *cap, out),
    }
}

struct Ctx {
    format: Format,
    numbering: Numbering,
    mode: Mode,
}

impl Ctx {
    /// 1-based label of the 0-based node `i`.
    fn node(&self, rs: &RootSystem, i: usize) -> usize {
        match self.numbering {
            Numbering::Native => i + 1,
            Numbering::Bourbaki => rs.bourbaki_index(i) + 1,
        }
    }

    /// Rewrites a label such as `w1+2w3` (native numbering) in the selected numbering.
    fn weight_label(&self, rs: &RootSystem, label: &str) -> String {
        if self.numbering == Numbering::Native {
            return label.to_string();
        }
        label
            .split('+')
            .map(|term| match term.split_once('w') {
                Some((c, i)) => match i.parse::<usize>() {
                    Ok(i) if i >= 1 && i <= rs.rank() => format!("{c}w{}", self.node(rs, i - 1)),
                    _ => term.to_string(),
                },
                None => term.to_string(),
            })
            .collect::<Vec<_>>()
            .join("+")
    }

    /// A weight given on the command line, converted to native numbering.
    fn input_weight(&self, rs: &RootSystem, w: &[i64]) -> Weight {
        match self.numbering {
            Numbering::Native => Weight(w.to_vec()),
            Numbering::Bourbaki => Weight((0..w.len()).map(|i| w[rs.bourbaki_index(i)]).collect()),
        }
    }
}

fn simple_rs(name: &str) -> Result<RootSystem, Failure> {
    let t = parse_simple_type(name).map_err(Failure::Usage)?;
    Ok(RootSystem::from_type(t)?)
}

fn module_table(ctx: &Ctx, id: &str, n: Option<i64>, out: &mut impl Write) -> Res {
    let ns: Vec<i64> = match n {
        Some(n) if n < 1 => return Err(Failure::Usage("--n must be positive".into())),
        Some(n) => vec![n],
        None => (2..=6).collect(),
    };
    let rows = tables::module_table(id, &ns, n.is_some(), ctx.mode)?;
    let mut t = Table::new(
        format!("{id} modules"),
        &[
            "algebra",
            "weights",
            "dim V",
            "dim O_min(V)",
            "delta",
            "self-dual",
            "dim V//G",
            "CS fills V",
            "status",
        ],
    );
    for r in &rows {
        let rs = simple_rs(&r.algebra)?;
        let weights: Vec<String> = r.weights.iter().map(|w| ctx.weight_label(&rs, w)).collect();
        t.push(vec![
            r.algebra.clone(),
            weights.join("; "),
            r.dim_v.to_string(),
            r.dim_omin.to_string(),
            r.delta.to_string(),
            r.duality.clone(),
            r.quotient_dim.clone(),
            yes_no(r.cs_fills),
            status(&r.mismatches),
        ]);
    }
    emit(ctx.format, &t, &rows, out)?;
    report_mismatches(rows.iter().flat_map(|r| {
        r.mismatches
            .iter()
            .map(move |m| format!("{}: {m}", r.algebra))
    }));
    Ok(outcome(rows.iter().all(|r| r.ok())))
}

fn status(mismatches: &[String]) -> String {
    if mismatches.is_empty() {
        "ok".into()
    } else {
        format!("MISMATCH ({})", mismatches.len())
    }
}

fn report_mismatches(lines: impl Iterator<Item = String>) {
    for l in lines {
        eprintln!("mismatch: {l}");
    }
}

fn pairs_table(ctx: &Ctx, n: i64, out: &mut impl Write) -> Res {
    if n < 1 {
        return Err(Failure::Usage("--n must be positive".into()));
    }
    let rows = tables::pairs_table(n, ctx.mode)?;
    let mut t = Table::new(
        "pairs with O_min ∩ g1 empty",
        &[
            "row",
            "pair",
            "dim g1",
            "dim O_min",
            "tilde",
            "dim tilde",
            "co0",
            "dim co0",
            "dim psi(O_min)",
            "status",
        ],
    );
    for r in &rows {
        t.push(vec![
            r.row.to_string(),
            r.pair.clone(),
            r.dim_g1.to_string(),
            r.dim_omin.to_string(),
            r.tilde.clone(),
            r.dim_tilde.to_string(),
            r.co0.join(" x "),
            r.dim_co0.to_string(),
            r.dim_psi_image.to_string(),
            status(&r.mismatches),
        ]);
    }
    emit(ctx.format, &t, &rows, out)?;
    report_mismatches(
        rows.iter()
            .flat_map(|r| r.mismatches.iter().map(move |m| format!("{}: {m}", r.pair))),
    );
    Ok(outcome(rows.iter().all(|r| r.ok())))
}

/// Parses E6, F4, sl6, sl(6), sp8, so9 and the like.
pub fn parse_algebra(s: &str) -> Result<Algebra, Failure> {
    let t = s.trim().to_ascii_lowercase().replace(['(', ')'], "");
    for (prefix, make) in [
        ("sl", Classical::Sl as fn(usize) -> Classical),
        ("so", Classical::So),
        ("sp", Classical::Sp),
    ] {
        if let Some(n) = t.strip_prefix(prefix).and_then(|r| r.parse::<usize>().ok()) {
            return Ok(Algebra::Classical(make(n)));
        }
    }
    let st = parse_simple_type(&t.to_uppercase()).map_err(Failure::Usage)?;
    Ok(Algebra::Simple(st.validate()?))
}

/// Algebras with a stored secant-cone list.
pub fn cone_algebras() -> Vec<Algebra> {
    let mut out = vec![
        Algebra::Simple(SimpleType::new(Letter::E, 6)),
        Algebra::Simple(SimpleType::new(Letter::F, 4)),
    ];
    for n in 2..=5 {
        out.push(Algebra::Classical(Classical::Sl(2 * n)));
    }
    for n in 2..=5 {
        out.push(Algebra::Classical(Classical::Sp(2 * n)));
    }
    out.push(Algebra::Classical(Classical::So(8)));
    out.push(Algebra::Classical(Classical::So(7)));
    out
}

fn cone_table(ctx: &Ctx, g: Option<&str>, out: &mut impl Write) -> Res {
    let algebras = match g {
        Some(g) => vec![parse_algebra(g)?],
        None => cone_algebras(),
    };
    let tabs: Vec<tables::ConeTable> = algebras
        .iter()
        .map(|&a| tables::secant_cone_table(a))
        .collect::<minorbit::Result<_>>()?;
    let mut t = Table::new(
        "orbits in the secant cone of O_min",
        &[
            "algebra",
            "orbit",
            "role",
            "diagram",
            "partition",
            "dim",
            "selected for",
            "status",
        ],
    );
    for c in &tabs {
        for o in &c.orbits {
            let selected: Vec<&str> = c
                .filters
                .iter()
                .filter(|f| f.meeting_g1.contains(&o.label))
                .map(|f| f.pair.as_str())
                .collect();
            t.push(vec![
                c.algebra.clone(),
                o.label.clone(),
                format!("{:?}", o.role).to_lowercase(),
                o.diagram.clone(),
                o.partition.clone().unwrap_or_else(|| "-".into()),
                o.dim.to_string(),
                if selected.is_empty() {
                    "-".into()
                } else {
                    selected.join(" ")
                },
                status(&c.mismatches),
            ]);
        }
    }
    emit(ctx.format, &t, &tabs, out)?;
    report_mismatches(tabs.iter().flat_map(|c| {
        c.mismatches
            .iter()
            .map(move |m| format!("{}: {m}", c.algebra))
    }));
    Ok(outcome(tabs.iter().all(|c| c.ok())))
}

fn oracle_table(ctx: &Ctx, max_rank: usize, max_dim: u128, out: &mut impl Write) -> Res {
    if max_rank > MAX_SWEEP_RANK {
        return Err(Failure::Usage(format!(
            "--max-rank is bounded by {MAX_SWEEP_RANK}"
        )));
    }
    let sweep = tables::oracle_sweep(max_rank, max_dim, ctx.mode)?;
    let mut t = Table::new(
        format!("fundamental modules of rank <= {max_rank} and dimension <= {max_dim}"),
        &[
            "algebra",
            "node",
            "dim V",
            "delta",
            "delta by rank",
            "dual node",
            "(λ,θ∨)",
            "necessary condition",
            "experimental",
        ],
    );
    for r in &sweep.rows {
        let rs = simple_rs(&r.algebra)?;
        let dual = if r.dual_node == 0 {
            "-".into()
        } else {
            ctx.node(&rs, r.dual_node - 1).to_string()
        };
        t.push(vec![
            r.algebra.clone(),
            ctx.node(&rs, r.node - 1).to_string(),
            r.dim.to_string(),
            r.delta.to_string(),
            r.delta_by_rank.to_string(),
            dual,
            r.theta_pairing.clone(),
            yes_no(r.necessary_condition_holds),
            r.experimental_prediction
                .map_or("-".into(), |p| if p { "δ>0" } else { "δ=0" }.to_string()),
        ]);
    }
    emit(ctx.format, &t, &sweep, out)?;
    if ctx.format == Format::Text {
        for (alg, node, dim) in &sweep.skipped {
            writeln!(out, "skipped {alg} node {node}: dimension {dim}")?;
        }
        writeln!(
            out,
            "experimental predicate: {} rows checked, {} disagreements (reported only)",
            sweep.experimental_checked,
            sweep.experimental_disagreements.len()
        )?;
    }
    report_mismatches(sweep.failures.iter().cloned());
    Ok(outcome(sweep.failures.is_empty()))
}

#[derive(Serialize)]
struct ClassifyOutput {
    g1_empty: Vec<String>,
    g0_empty: Vec<String>,
    mixed: Vec<String>,
    matches_expected: bool,
}

fn classify(ctx: &Ctx, max_rank: usize, show: bool, out: &mut impl Write) -> Res {
    if !(1..=MAX_SWEEP_RANK).contains(&max_rank) {
        return Err(Failure::Usage(format!(
            "--max-rank must lie in 1..={MAX_SWEEP_RANK}"
        )));
    }
    let c = classify_empty(max_rank)?;
    let sorted = |v: &[String]| {
        let mut v = v.to_vec();
        v.sort();
        v
    };
    let expect = |v: &[&str]| sorted(&v.iter().map(|s| s.to_string()).collect::<Vec<_>>());
    let ok = sorted(&c.g1_empty) == expect(&G1_EMPTY)
        && sorted(&c.g0_empty) == expect(&G0_EMPTY)
        && c.mixed.is_empty();
    if show {
        let mut t = Table::new(
            "per-pair criterion",
            &[
                "pair",
                "family",
                "black nodes",
                "black nodes with (α,θ) ≠ 0",
                "meets g1",
                "meets g0",
                "g0 evidence",
            ],
        );
        for (id, family, x) in &c.evidence {
            let rs = simple_rs(id.split('/').next().unwrap_or(""))?;
            let pair = minorbit::involutions::find_pair(id)?.1;
            let nodes = |v: &[usize]| {
                if v.is_empty() {
                    "-".into()
                } else {
                    v.iter()
                        .map(|&i| ctx.node(&rs, i).to_string())
                        .collect::<Vec<_>>()
                        .join(",")
                }
            };
            t.push(vec![
                id.clone(),
                family.clone(),
                nodes(&pair.satake.black),
                nodes(&x.obstructing_black),
                yes_no(x.meets_g1),
                yes_no(x.meets_g0),
                x.g0_evidence.clone(),
            ]);
        }
        emit(ctx.format, &t, &c.evidence, out)?;
    } else {
        let mut t = Table::new(
            format!("classification over ranks <= {max_rank}"),
            &["family", "misses", "expected"],
        );
        for f in &c.g1_empty {
            t.push(vec![
                f.clone(),
                "g1".into(),
                yes_no(G1_EMPTY.contains(&f.as_str())),
            ]);
        }
        for f in &c.g0_empty {
            t.push(vec![
                f.clone(),
                "g0".into(),
                yes_no(G0_EMPTY.contains(&f.as_str())),
            ]);
        }
        let value = ClassifyOutput {
            g1_empty: c.g1_empty.clone(),
            g0_empty: c.g0_empty.clone(),
            mixed: c.mixed.clone(),
            matches_expected: ok,
        };
        emit(ctx.format, &t, &value, out)?;
    }
    if !ok {
        eprintln!("mismatch: computed lists differ from the expected families");
    }
    Ok(outcome(ok))
}

fn module_for(
    ctx: &Ctx,
    letter: &str,
    rank: usize,
    weight: &[i64],
    cap: usize,
) -> Result<HWModule, Failure> {
    let mut chars = letter.trim().chars();
    let l = match (
        chars
            .next()
            .and_then(|c| Letter::from_char(c.to_ascii_uppercase())),
        chars.next(),
    ) {
        (Some(l), None) => l,
        _ => return Err(Failure::Usage(format!("unknown type letter {letter:?}"))),
    };
    let t = SimpleType::new(l, rank).validate()?;
    let rs = RootSystem::from_type(t)?;
    if weight.len() != rank {
        return Err(Failure::Usage(format!(
            "--weight needs {rank} coefficients, got {}",
            weight.len()
        )));
    }
    let w = ctx.input_weight(&rs, weight);
    Ok(HWModule::build(&rs, &w, cap)?)
}

#[derive(Serialize)]
struct DefectOutput {
    algebra: String,
    weight: Vec<i64>,
    report: minorbit::hwmod::CsReport,
    signs: minorbit::hwmod::SignTests,
}

fn defect(
    ctx: &Ctx,
    letter: &str,
    rank: usize,
    weight: &[i64],
    cap: usize,
    out: &mut impl Write,
) -> Res {
    let m = module_for(ctx, letter, rank, weight, cap)?;
    let cs = cs_report(&m)?;
    let signs = delta_sign_tests(&m)?;
    let d = &cs.defect;
    let mut t = Table::new(
        format!("{} with highest weight {:?}", m.rs.name(), weight),
        &["quantity", "value"],
    );
    let witness = match &cs.nullcone_witness {
        Some(w) => format!(
            "xi = {:?}, (λ,xi) = {}, (μ,xi) = {}",
            w.xi, w.lambda_pairing, w.mu_pairing
        ),
        None => "-".into(),
    };
    for (k, v) in [
        ("dim V", d.module_dim.to_string()),
        ("dim O_min(V)", d.orbit_dim.to_string()),
        ("delta", d.delta.to_string()),
        ("delta by rank", d.delta_by_rank.to_string()),
        ("dim CS", cs.cs_dim.to_string()),
        ("CS fills V", yes_no(cs.fills_module)),
        ("G_lambda-orbit conical", yes_no(cs.h_orbit_conical)),
        ("null-cone witness", witness),
        ("(λ,θ∨)", signs.theta_pairing.clone()),
        (
            "necessary condition",
            yes_no(signs.necessary_condition_holds),
        ),
    ] {
        t.push(vec![k.into(), v]);
    }
    let value = DefectOutput {
        algebra: m.rs.name(),
        weight: m.lambda.0.clone(),
        report: cs.clone(),
        signs: signs.clone(),
    };
    emit(ctx.format, &t, &value, out)?;
    let ok = d.delta == d.delta_by_rank && signs.necessary_condition_holds;
    Ok(outcome(ok))
}

#[derive(Serialize)]
struct VerifyReport {
    #[serde(skip_serializing_if = "Option::is_none")]
    matrix: Option<SuiteReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    orbit_saturation: Option<Vec<SaturationCheck>>,
    failures: usize,
}

fn verify(
    ctx: &Ctx,
    names: &str,
    samples: usize,
    seed: u64,
    check: CheckId,
    path: &std::path::Path,
    out: &mut impl Write,
) -> Res {
    if samples == 0 {
        return Err(Failure::Usage("--samples must be positive".into()));
    }
    let kinds: Vec<PairKind> = if names == "classical" {
        default_pairs()
    } else {
        names
            .split(',')
            .map(PairKind::parse)
            .collect::<minorbit::Result<_>>()?
    };
    let matrix = match check {
        CheckId::Matrix | CheckId::All => Some(run_suite(&kinds, samples, seed, ctx.mode)?),
        CheckId::OrbitSaturation => None,
    };
    let saturation = match check {
        CheckId::OrbitSaturation | CheckId::All => Some(tables::saturation_table(3, ctx.mode)?),
        CheckId::Matrix => None,
    };
    let failures = matrix.as_ref().map_or(0, |m| m.failures())
        + saturation
            .as_ref()
            .map_or(0, |s| s.iter().filter(|c| !c.holds).count());
    let report = VerifyReport {
        matrix,
        orbit_saturation: saturation,
        failures,
    };
    let mut t = Table::new(
        format!("verification, seed {seed}"),
        &["suite", "item", "checks", "failures"],
    );
    if let Some(m) = &report.matrix {
        for p in &m.pairs {
            let checks: usize =
                p.samples.iter().map(|s| s.checks.len()).sum::<usize>() + p.checks.len() + 1;
            t.push(vec![
                "matrix".into(),
                p.pair.clone(),
                checks.to_string(),
                p.failures().to_string(),
            ]);
        }
        for (name, count, failed) in m.tally() {
            t.push(vec![
                "matrix".into(),
                name,
                count.to_string(),
                failed.to_string(),
            ]);
        }
    }
    if let Some(s) = &report.orbit_saturation {
        for c in s {
            t.push(vec![
                "orbit-saturation".into(),
                format!("{} ({}: {} = {})", c.pair, c.method, c.lhs, c.rhs),
                "1".into(),
                usize::from(!c.holds).to_string(),
            ]);
        }
    }
    emit(ctx.format, &t, &report, out)?;
    std::fs::write(
        path,
        serde_json::to_string_pretty(&report).map_err(|e| Failure::Usage(e.to_string()))?,
    )?;
    if ctx.format == Format::Text {
        writeln!(out, "report written to {}", path.display())?;
        writeln!(
            out,
            "{}",
            if failures == 0 {
                "all checks passed"
            } else {
                "FAILURES"
            }
        )?;
    }
    Ok(outcome(failures == 0))
}

fn dump(
    ctx: &Ctx,
    letter: &str,
    rank: usize,
    weight: &[i64],
    cap: usize,
    out: &mut impl Write,
) -> Res {
    let m = module_for(ctx, letter, rank, weight, cap)?;
    m.check_relations()
        .map_err(|e| Failure::Math(format!("module relations fail: {e}")))?;
    let d = m.dump();
    let mut t = Table::new(
        format!(
            "{} with highest weight {:?}, dim {}",
            d.algebra, weight, d.dim
        ),
        &["weight", "first index", "multiplicity"],
    );
    for (w, first, mult) in &d.weights {
        let shown = match ctx.numbering {
            Numbering::Native => w.clone(),
            Numbering::Bourbaki => (0..w.len()).map(|b| w[m.rs.native_index(b)]).collect(),
        };
        t.push(vec![
            format!("{shown:?}"),
            first.to_string(),
            mult.to_string(),
        ]);
    }
    emit(ctx.format, &t, &d, out)?;
    Ok(Outcome::Pass)
}

#[derive(Serialize)]
struct CatalogEntry {
    id: String,
    family: String,
    black: Vec<usize>,
    arrows: Vec<(usize, usize)>,
    inner: bool,
    dim_g0: usize,
    dim_g1: usize,
    meets_g0: bool,
    meets_g1: bool,
}

fn catalog(ctx: &Ctx, max_rank: usize, out: &mut impl Write) -> Res {
    if !(1..=MAX_SWEEP_RANK).contains(&max_rank) {
        return Err(Failure::Usage(format!(
            "--max-rank must lie in 1..={MAX_SWEEP_RANK}"
        )));
    }
    let mut entries = Vec::new();
    for t in minorbit::involutions::sweep_types(max_rank) {
        let rs = RootSystem::from_type(t)?;
        for p in minorbit::involutions::catalog(&rs)? {
            let x = minorbit::involutions::omin_intersections(&rs, &p);
            let node = |i: usize| ctx.node(&rs, i);
            entries.push(CatalogEntry {
                id: p.id.clone(),
                family: p.family.clone(),
                black: p.satake.black.iter().map(|&i| node(i)).collect(),
                arrows: p
                    .satake
                    .arrows
                    .iter()
                    .map(|&(a, b)| (node(a), node(b)))
                    .collect(),
                inner: p.satake.inner,
                dim_g0: p.dim_g0,
                dim_g1: p.dim_g1,
                meets_g0: x.meets_g0,
                meets_g1: x.meets_g1,
            });
        }
    }
    let mut t = Table::new(
        "symmetric pairs",
        &[
            "pair",
            "family",
            "black nodes",
            "arrows",
            "inner",
            "dim g0",
            "dim g1",
            "O_min meets g0",
            "O_min meets g1",
        ],
    );
    let list = |v: &[usize]| v.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
    for e in &entries {
        t.push(vec![
            e.id.clone(),
            e.family.clone(),
            list(&e.black),
            e.arrows
                .iter()
                .map(|(a, b)| format!("{a}<->{b}"))
                .collect::<Vec<_>>()
                .join(","),
            yes_no(e.inner),
            e.dim_g0.to_string(),
            e.dim_g1.to_string(),
            yes_no(e.meets_g0),
            yes_no(e.meets_g1),
        ]);
    }
    emit(ctx.format, &t, &entries, out)?;
    Ok(Outcome::Pass)
}

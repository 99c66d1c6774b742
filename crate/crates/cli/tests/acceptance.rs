//! Acceptance criteria 1-10. Runs without the libtest harness so every
//! criterion prints exactly one PASS/FAIL line; exits nonzero on any FAIL.
//!
//! Oracle values below were computed independently (numpy, double precision)
//! from the Gell-Mann matrices and frozen here.

use std::process::Command;
use std::time::{Duration, Instant};

use su3st::check::{worst, Relation};
use su3st::invariants;
use su3st::ninerep;
use su3st::numerics::{Backend, Complex64, ExactScalar, RealSurd, Scalar};
use su3st::par::ExecMode;
use su3st::sixrep::{self, SixRepConfig};
use su3st::su3::{self, Branch, StructureConstants};
use su3st::suite::{self, Bound, CheckRecord, Corruption, FloatContext, Suite, SuiteConfig};
use su3st::transforms::NineVector;

// Pinned tolerances and budgets.
const C1_BUDGET: Duration = Duration::from_secs(1);
const C2_FLOAT_TOL: f64 = 1e-13;
const C6_TOL: f64 = 1e-10;
const C6_BUDGET: Duration = Duration::from_secs(10);
const C7_QUAD_TOL: f64 = 1e-10;
const C7_CUBIC_TOL: f64 = 1e-9;
const C7_TIME_TOL: f64 = 1e-12;
const C7_BOOST_TOL: f64 = 1e-8;
const C7_CROSS_MIN: f64 = 1e-4;
const C8_BAND: f64 = 0.4;
const C8_ORACLE_RATIO: f64 = 4.008;
const C8_ORACLE_TOL: f64 = 1e-3;
const C9_EX1_TOL: f64 = 1e-10;
const C9_EX2_TOL: f64 = 1e-9;
const C9_EX4_TOL: f64 = 1e-9;
const SEED: u64 = suite::DEFAULT_SEED;

/// Canonical nonzero f entries (i<j<k): exact rendering and numpy value.
const F_ORACLE: [(usize, usize, usize, &str, f64); 9] = [
    (1, 2, 3, "1", 1.0),
    (1, 4, 7, "1/2", 0.5),
    (1, 5, 6, "-1/2", -0.5),
    (2, 4, 6, "1/2", 0.5),
    (2, 5, 7, "1/2", 0.5),
    (3, 4, 5, "1/2", 0.5),
    (3, 6, 7, "-1/2", -0.5),
    (4, 5, 8, "1/2√3", 0.8660254037844386),
    (6, 7, 8, "1/2√3", 0.8660254037844386),
];

/// Canonical nonzero d entries (i≤j≤k).
const D_ORACLE: [(usize, usize, usize, &str, f64); 16] = [
    (1, 1, 8, "1/3√3", 0.5773502691896258),
    (1, 4, 6, "1/2", 0.5),
    (1, 5, 7, "1/2", 0.5),
    (2, 2, 8, "1/3√3", 0.5773502691896258),
    (2, 4, 7, "-1/2", -0.5),
    (2, 5, 6, "1/2", 0.5),
    (3, 3, 8, "1/3√3", 0.5773502691896258),
    (3, 4, 4, "1/2", 0.5),
    (3, 5, 5, "1/2", 0.5),
    (3, 6, 6, "-1/2", -0.5),
    (3, 7, 7, "-1/2", -0.5),
    (4, 4, 8, "-1/6√3", -0.28867513459481287),
    (5, 5, 8, "-1/6√3", -0.28867513459481287),
    (6, 6, 8, "-1/6√3", -0.28867513459481287),
    (7, 7, 8, "-1/6√3", -0.28867513459481287),
    (8, 8, 8, "-1/3√3", -0.5773502691896258),
];

struct Outcome {
    passed: bool,
    detail: String,
}

impl Outcome {
    fn new(passed: bool, detail: impl Into<String>) -> Self {
        Self {
            passed,
            detail: detail.into(),
        }
    }
}

fn all_zero(rels: &[Relation]) -> Result<(), String> {
    match rels.iter().find(|r| r.residual != 0.0) {
        Some(r) => Err(format!("{} residual {:e}", r.id, r.residual)),
        None => Ok(()),
    }
}

fn permutations((i, j, k): (usize, usize, usize)) -> [((usize, usize, usize), i64); 6] {
    [
        ((i, j, k), 1),
        ((j, k, i), 1),
        ((k, i, j), 1),
        ((j, i, k), -1),
        ((i, k, j), -1),
        ((k, j, i), -1),
    ]
}

/// Every one of the 729 entries of the extracted f, d equals the oracle.
fn oracle_mismatch(sc: &StructureConstants<ExactScalar>) -> Option<String> {
    for (name, table, antisym) in [("f", &F_ORACLE[..], true), ("d", &D_ORACLE[..], false)] {
        let t = if antisym { &sc.f } else { &sc.d };
        let mut want = vec![ExactScalar::zero(); 729];
        let at = |i: usize, j: usize, k: usize| ((i - 1) * 9 + (j - 1)) * 9 + (k - 1);
        for &(i, j, k, exact, float) in table {
            let v: RealSurd = exact.parse().unwrap();
            if (v.to_f64() - float).abs() > 1e-15 {
                return Some(format!("oracle {name}{i}{j}{k}: {exact} vs {float}"));
            }
            for (p, s) in permutations((i, j, k)) {
                let sign = if antisym { s } else { 1 };
                want[at(p.0, p.1, p.2)] = ExactScalar::real(v.clone()).times(&ExactScalar::from_i64(sign));
            }
        }
        for i in 1..=9 {
            for j in 1..=9 {
                for k in 1..=9 {
                    if *t.get(i, j, k) != want[at(i, j, k)] {
                        return Some(format!("{name}({i},{j},{k}) = {} (oracle {})", t.get(i, j, k), want[at(i, j, k)]));
                    }
                }
            }
        }
    }
    None
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let g = su3::gellmann::<ExactScalar>();
    let bar = su3::antitriplet::<ExactScalar>();
    let sc = StructureConstants::<ExactScalar>::from_generators(&g).expect("normalized");
    let mut rels = su3::generator_relations(&g).expect("square");
    rels.extend(su3::closure_relations(&g, &sc, 1, ExecMode::Parallel));
    rels.extend(su3::closure_relations(&bar, &sc, -1, ExecMode::Parallel));
    let elapsed = start.elapsed();
    if let Some(m) = oracle_mismatch(&sc) {
        return Outcome::new(false, format!("extraction disagrees with oracle: {m}"));
    }
    match all_zero(&rels) {
        Err(e) => Outcome::new(false, e),
        Ok(()) => Outcome::new(
            elapsed < C1_BUDGET,
            format!(
                "{} generator and closure relations exactly zero, f/d match oracle, {:.3}s (budget {:?})",
                rels.len(),
                elapsed.as_secs_f64(),
                C1_BUDGET
            ),
        ),
    }
}

fn criterion_2() -> Outcome {
    let exact = su3::verify_fd_identities(&StructureConstants::<ExactScalar>::fundamental(), ExecMode::Parallel);
    let float = su3::verify_fd_identities(&StructureConstants::<Complex64>::fundamental(), ExecMode::Parallel);
    let f = worst(&float);
    match all_zero(&exact) {
        Err(e) => Outcome::new(false, e),
        Ok(()) => Outcome::new(
            f <= C2_FLOAT_TOL && exact.iter().all(|r| r.cases == 4096),
            format!("3 identities x 4096 tuples exact 0; float worst {f:e} (tol {C2_FLOAT_TOL:e})"),
        ),
    }
}

fn criterion_3() -> Outcome {
    let one = ExactScalar::one();
    let trip = sixrep::triplet_vk(&one, &one);
    let rels = sixrep::triplet_failure_check(&trip).expect("V and K present");
    let sym = rels.iter().find(|r| r.id.ends_with("symmetric-part")).unwrap();
    Outcome::new(
        sym.residual == 0.0 && sym.cases == 64,
        format!("symmetric part of [V3,K3] over 64 pairs: {}", sym.residual),
    )
}

fn criterion_4() -> Outcome {
    let sc = StructureConstants::<ExactScalar>::fundamental();
    let one = ExactScalar::one();
    let mut notes = Vec::new();
    for branch in Branch::BOTH {
        let cfg = SixRepConfig::branch(branch, &one, &one).unwrap();
        let dm = sixrep::delta_mismatch(&cfg, &sc, ExecMode::Parallel);
        if dm.max_norm() != 0.0 || dm.disagreement() != 0.0 {
            return Outcome::new(false, format!("branch {branch}: Delta {:e}", dm.max_norm()));
        }
        let rels = sixrep::verify_poincare6(&sc, branch, &one, &one, ExecMode::Parallel).unwrap();
        if let Err(e) = all_zero(&rels) {
            return Outcome::new(false, format!("branch {branch}: {e}"));
        }
        if !rels.iter().any(|r| r.id.ends_with("abelian-ideal")) {
            return Outcome::new(false, "abelian-ideal check missing");
        }
        notes.push(format!("{branch}: Delta=0, {} relations exact", rels.len()));
    }
    let bad = SixRepConfig {
        c_plus: one.clone(),
        c9_plus: ExactScalar::zero(),
        c_minus: one.clone(),
        c9_minus: ExactScalar::zero(),
        alpha: one.clone(),
        beta: one.clone(),
    };
    let off = sixrep::delta_mismatch(&bad, &sc, ExecMode::Parallel).max_norm();
    Outcome::new(off > 0.0, format!("{}; violating config Delta {off}", notes.join("; ")))
}

fn criterion_5() -> Outcome {
    let sc = StructureConstants::<ExactScalar>::fundamental();
    let mut n = 0;
    for branch in Branch::BOTH {
        let rels = ninerep::verify_lorentz9(&sc, branch, ExecMode::Parallel).unwrap();
        if let Err(e) = all_zero(&rels) {
            return Outcome::new(false, e);
        }
        if !rels.iter().any(|r| r.id.ends_with("adjoint-extraction")) {
            return Outcome::new(false, "extraction check missing");
        }
        n += rels.len();
    }
    Outcome::new(true, format!("adjoint extraction = closed-form J9, K9+-; {n} relations exact"))
}

fn find<'a>(checks: &'a [(Relation, f64, Bound)], id: &str) -> &'a (Relation, f64, Bound) {
    checks.iter().find(|c| c.0.id == id).unwrap_or_else(|| panic!("missing check {id}"))
}

fn criterion_6() -> Outcome {
    let ctx = FloatContext::new(&StructureConstants::fundamental());
    let start = Instant::now();
    let checks = suite::exponential_sanity(&ctx, SEED, ExecMode::Parallel);
    let elapsed = start.elapsed();
    let mut ok = elapsed < C6_BUDGET;
    let mut parts = Vec::new();
    for id in ["exp:rotation-orthogonal", "exp:boost-symmetric", "exp:one-parameter"] {
        let (r, _, _) = find(&checks, id);
        ok &= r.residual <= C6_TOL && r.cases >= 200;
        parts.push(format!("{} {:.1e}", id.trim_start_matches("exp:"), r.residual));
    }
    let (pd, _, _) = find(&checks, "exp:boost-positive");
    ok &= pd.residual > 0.0;
    parts.push(format!("min boost eigenvalue {:.3}", pd.residual));
    Outcome::new(ok, format!("{}; 200 draws, {:.2}s", parts.join(", "), elapsed.as_secs_f64()))
}

fn criterion_7() -> Outcome {
    let ctx = FloatContext::new(&StructureConstants::fundamental());
    let checks = suite::invariance_probes(&ctx, SEED, ExecMode::Parallel);
    let quad = &find(&checks, "rot:quad-space").0;
    let cubic = &find(&checks, "rot:cubic-sym").0;
    let time = &find(&checks, "rot:time").0;
    let bp = &find(&checks, "boost:I+").0;
    let bm = &find(&checks, "boost:I-").0;
    let cross = &find(&checks, "boost:I+-under-minus").0;
    let ok = quad.residual <= C7_QUAD_TOL
        && cubic.residual <= C7_CUBIC_TOL
        && time.residual <= C7_TIME_TOL
        && bp.residual <= C7_BOOST_TOL
        && bm.residual <= C7_BOOST_TOL
        && cross.residual > C7_CROSS_MIN
        && [quad, cubic, time, bp, bm].iter().all(|r| r.cases >= 500);
    Outcome::new(
        ok,
        format!(
            "rotation drifts {:.1e}/{:.1e}/{:.1e}; I+ {:.1e}, I- {:.1e}; cross-branch drift {:.3}",
            quad.residual, cubic.residual, time.residual, bp.residual, bm.residual, cross.residual
        ),
    )
}

fn criterion_8() -> Outcome {
    let oracle = invariants::boost_defect_check(&NineVector::unit(1), 8, suite::DEFECT_STEP, Branch::Plus).unwrap();
    if (oracle.ratio - C8_ORACLE_RATIO).abs() > C8_ORACLE_TOL {
        return Outcome::new(false, format!("x=e1, m=8 ratio {} (oracle {C8_ORACLE_RATIO})", oracle.ratio));
    }
    let ctx = FloatContext::new(&StructureConstants::fundamental());
    let checks = suite::invariance_probes(&ctx, SEED, ExecMode::Parallel);
    let (r, _, _) = find(&checks, "boost:interval-defect-order");
    Outcome::new(
        r.residual <= C8_BAND && r.cases == 200,
        format!(
            "{} probes: max |r(h)/r(h/2) - 4| = {:.4} (band {C8_BAND}); e1/m=8 ratio {:.4}",
            r.cases, r.residual, oracle.ratio
        ),
    )
}

fn record<'a>(recs: &'a [CheckRecord], id: &str) -> Option<&'a CheckRecord> {
    recs.iter().find(|r| r.id == id)
}

fn criterion_9() -> Outcome {
    let report = suite::run(&SuiteConfig::new(Suite::Exercises, Backend::Exact));
    let recs = &report.records;
    let mut problems = Vec::new();
    let mut need = |id: &str, tol: f64, backend: Backend| match record(recs, id) {
        Some(r) if r.residual <= tol && r.backend == backend => {}
        Some(r) => problems.push(format!("{id} {:e}", r.residual)),
        None => problems.push(format!("{id} missing")),
    };
    need("ex1:scalar-products", C9_EX1_TOL, Backend::Float);
    for b in ["+", "-"] {
        need(&format!("ex2:g{b}-invariant"), C9_EX2_TOL, Backend::Float);
        need(&format!("ex2:g{b}(x,x,x)=I{b}(x)"), 0.0, Backend::Exact);
        for rel in ["[J,J]", "[J,K]", "[K,K]", "[P,K]", "[aP9,K]", "[P,J]", "[P,P]"] {
            need(&format!("ex3:10{b}:{rel}"), 0.0, Backend::Exact);
        }
    }
    for rep in ["6+", "6-", "10+", "10-"] {
        need(&format!("ex4:{rep}"), C9_EX4_TOL, Backend::Float);
    }
    if let Some(r) = record(recs, "ex1:scalar-products") {
        if r.cases < 100 {
            problems.push("ex1 needs 100 draws".into());
        }
    }
    if let Some(r) = record(recs, "ex4:6+") {
        if r.cases < 50 {
            problems.push("ex4 needs 50 draws".into());
        }
    }
    let ex4 = ["6+", "6-", "10+", "10-"]
        .iter()
        .filter_map(|r| record(recs, &format!("ex4:{r}")))
        .map(|r| r.residual)
        .fold(0.0, f64::max);
    Outcome::new(
        problems.is_empty() && report.passed,
        if problems.is_empty() {
            format!("Ex1-Ex4 pass ({} checks); Ex3 exact; Ex4 worst {ex4:.1e}", recs.len())
        } else {
            problems.join("; ")
        },
    )
}

fn cli_verify(args: &[&str]) -> Option<i32> {
    Command::new(env!("CARGO_BIN_EXE_su3st"))
        .arg("verify")
        .args(args)
        .env_remove("SU3ST_SEED")
        .env_remove("SU3ST_TOLERANCE")
        .output()
        .expect("binary runs")
        .status
        .code()
}

fn criterion_10() -> Outcome {
    let clean = cli_verify(&["--suite", "all"]);
    if clean != Some(0) {
        return Outcome::new(false, format!("clean `verify --suite all` exit {clean:?}"));
    }
    let clean_float = cli_verify(&["--suite", "all", "--backend", "float"]);
    if clean_float != Some(0) {
        return Outcome::new(false, format!("clean float run exit {clean_float:?}"));
    }
    // Exhaustive: every one of the 1458 f/d slots, through the suite that
    // `all` runs first.
    let all = Corruption::all();
    let missed: Vec<String> = su3st::par::map_indices(all.len(), ExecMode::Parallel, |i| {
        let mut cfg = SuiteConfig::new(Suite::Fundamental, Backend::Float);
        cfg.corrupt = Some(all[i]);
        cfg.mode = ExecMode::Sequential;
        suite::run(&cfg).failures().next().is_none().then(|| all[i].to_string())
    })
    .into_iter()
    .flatten()
    .collect();
    if !missed.is_empty() {
        return Outcome::new(false, format!("undetected corruptions: {missed:?}"));
    }
    // Full suite through the binary on a spread of entries, both backends.
    let sample = ["f:1,2,3", "f:4,5,8", "d:1,1,8", "d:8,8,8", "d:3,4,4", "f:2,1,3", "f:9,1,2", "d:1,2,3"];
    for (i, c) in sample.iter().enumerate() {
        let backend = if i % 2 == 0 { "float" } else { "exact" };
        let code = cli_verify(&["--suite", "all", "--backend", backend, "--corrupt", c]);
        if code != Some(1) {
            return Outcome::new(false, format!("--corrupt {c} ({backend}) exit {code:?}"));
        }
    }
    Outcome::new(
        true,
        format!("clean runs exit 0; all 1458 single-entry corruptions detected; {} CLI corruptions exit 1", sample.len()),
    )
}

fn main() {
    type Criterion = (&'static str, fn() -> Outcome);
    let criteria: [Criterion; 10] = [
        ("fundamental algebra exact", criterion_1),
        ("f/d identities", criterion_2),
        ("triplet cannot host symmetric [V,K]", criterion_3),
        ("6-rep branches and Poincare relations", criterion_4),
        ("9-rep extraction and Lorentz relations", criterion_5),
        ("exponential sanity", criterion_6),
        ("rotation and boost invariance", criterion_7),
        ("boost defect is second order", criterion_8),
        ("exercises 1-4", criterion_9),
        ("CLI exit codes and mutation sensitivity", criterion_10),
    ];
    let mut failed = 0;
    for (n, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let out = std::panic::catch_unwind(check).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Outcome::new(false, format!("panicked: {msg}"))
        });
        if !out.passed {
            failed += 1;
        }
        println!(
            "criterion {:>2} {} {name}: {} [{:.2}s]",
            n + 1,
            if out.passed { "PASS" } else { "FAIL" },
            out.detail,
            start.elapsed().as_secs_f64()
        );
    }
    println!("acceptance: {}/10 criteria passed", 10 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}

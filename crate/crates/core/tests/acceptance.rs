//! Acceptance suite: one line per criterion, exact equalities throughout.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see the lines.

mod common;

use std::collections::BTreeSet;
use std::process::Command;
use std::time::{Duration, Instant};

use geode::checks::verify_bijections;
use geode::cli::run_captured;
use geode::geode::{series_g, verify_factorization};
use geode::hypercatalan::{hyper_catalan, verify_functional_equation};
use geode::series::{enumerate_types, BigCount, TypeVector};
use geode::subdigons::{count_marked_subdigons, subdigon_to_tree};
use geode::trees::{count_marked_trees, enumerate_trees};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(limit: Duration, start: Instant) -> Result<Duration, String> {
    let took = start.elapsed();
    ensure(took < limit, || format!("took {took:?}, budget {limit:?}"))?;
    Ok(took)
}

fn catalan_specialization() -> Outcome {
    let start = Instant::now();
    let expected: [u32; 7] = [1, 1, 2, 5, 14, 42, 132];
    for (k, &c) in expected.iter().enumerate() {
        let got = hyper_catalan(&TypeVector::new(vec![0, k]));
        ensure(got == BigCount::from(c), || format!("C_(0,{k}) = {got}, expected {c}"))?;
    }
    let took = within(Duration::from_secs(1), start)?;
    Ok(format!("C_(0,k) = 1,1,2,5,14,42,132 for k=0..6 in {took:?}"))
}

fn counting_theorem() -> Outcome {
    let start = Instant::now();
    let types = enumerate_types(10);
    let mut trees = 0usize;
    for m in &types {
        let listed = enumerate_trees(m);
        let c = hyper_catalan(m);
        ensure(BigCount::from(listed.len()) == c, || format!("|T_{m:?}| = {} but C = {c}", listed.len()))?;
        trees += listed.len();
    }
    let took = within(Duration::from_secs(300), start)?;
    Ok(format!("{} types, {trees} trees through weight 10 in {took:?}", types.len()))
}

fn functional_equation() -> Outcome {
    let start = Instant::now();
    let report = verify_functional_equation(12);
    ensure(report.passed(), || report.to_string())?;
    let took = within(Duration::from_secs(60), start)?;
    Ok(format!("{} monomials, 0 mismatches at weight 12 in {took:?}", report.compared()))
}

fn factorization() -> Outcome {
    let start = Instant::now();
    let report = verify_factorization(12).map_err(|e| e.to_string())?;
    ensure(report.passed(), || report.to_string())?;
    let consistency = report.section("m1=0 (consistency)").ok_or("missing m1=0 section")?;
    // Monomials of weight <= 12 with m_1 = 0, excluding 0: partitions with no part 1.
    let expected = enumerate_types(12).iter().filter(|m| !m.is_zero() && m.get(1) == 0).count();
    ensure(consistency.compared == expected, || {
        format!("{} consistency equations checked, expected {expected}", consistency.compared)
    })?;
    let took = within(Duration::from_secs(60), start)?;
    Ok(format!(
        "{} equations hold ({} overdetermined m1=0) in {took:?}",
        report.compared(),
        consistency.compared
    ))
}

fn geode_nonnegative() -> Outcome {
    // series_g fails on any negative intermediate; values are unsigned after.
    let g = series_g(12).map_err(|e| e.to_string())?;
    ensure(g.len() == enumerate_types(12).len(), || "missing coefficients".into())?;
    let zeros = g.iter().filter(|(_, c)| **c == BigCount::default()).count();
    Ok(format!("{} coefficients, all >= 0 ({zeros} zero)", g.len()))
}

fn main_theorem() -> Outcome {
    let start = Instant::now();
    let g = series_g(10).map_err(|e| e.to_string())?;
    let mut checked = 0;
    for m in enumerate_types(10) {
        let l = count_marked_trees(&m);
        let gm = g.get(&m).cloned().unwrap_or_default();
        ensure(gm == l, || format!("G_{m:?} = {gm} but L = {l}"))?;
        checked += 1;
    }
    let took = within(Duration::from_secs(300), start)?;
    Ok(format!("G_m = L_m on all {checked} monomials through weight 10 in {took:?}"))
}

fn lemma_equivalence() -> Outcome {
    let mut checked = 0;
    for m in enumerate_types(8) {
        let s = count_marked_subdigons(&m);
        let l = count_marked_trees(&m);
        ensure(s == l, || format!("|S̄_{m:?}| = {s} but L = {l}"))?;
        checked += 1;
    }
    Ok(format!("|S̄_m| = L_m on all {checked} monomials through weight 8"))
}

fn bijection_roundtrips() -> Outcome {
    let report = verify_bijections(8);
    ensure(report.passed(), || report.to_string())?;
    let needed = [
        "subdigon<->tree roundtrip",
        "tree decompose<->compose",
        "subdigon decompose<->compose",
        "decomposition square commutes",
    ];
    for label in needed {
        let s = report.section(label).ok_or_else(|| format!("missing section {label}"))?;
        ensure(s.compared > 0, || format!("{label}: nothing compared"))?;
    }
    // Cardinalities of T_m = ⋃_n {n} × T̄_{m-e_n}, from C and L directly.
    for m in enumerate_types(8).into_iter().filter(|m| !m.is_zero()) {
        let rhs: BigCount = m.support().map(|(n, _)| count_marked_trees(&m.bumped(n, -1).unwrap())).sum();
        ensure(rhs == hyper_catalan(&m), || format!("Σ_n L_(m-e_n) != C_m at {m:?}"))?;
    }
    let parts: Vec<String> = report.sections.iter().map(|s| format!("{}={}", s.label, s.compared)).collect();
    Ok(parts.join("; "))
}

fn figure_spot_checks() -> Outcome {
    let target = TypeVector::new(vec![2, 3, 2, 1]);
    let (sub, shapes) = common::example_subdigon();
    let (tree, pos) = common::example_tree();
    ensure(sub.subdigon_type() == target, || format!("subdigon type {:?}", sub.subdigon_type()))?;
    ensure(tree.tree_type() == target, || format!("tree type {:?}", tree.tree_type()))?;
    ensure(subdigon_to_tree(&sub) == tree, || "the two drawings are not matched by the bijection".into())?;

    let faces: BTreeSet<common::FaceShape> =
        sub.external_faces().iter().map(|f| shapes[&f.path().to_vec()]).collect();
    let shaded: BTreeSet<common::FaceShape> = common::example_subdigon_shaded().into_iter().collect();
    ensure(faces == shaded, || format!("external faces {faces:?}, shaded {shaded:?}"))?;
    let clawed: BTreeSet<common::Point> = tree.clawed_nodes().iter().map(|id| pos[id]).collect();
    let shaded: BTreeSet<common::Point> = common::example_tree_shaded().into_iter().collect();
    ensure(clawed == shaded, || format!("clawed {clawed:?}, shaded {shaded:?}"))?;

    let mut counts = Vec::new();
    for (segments, circled) in common::theorem_figure_trees() {
        let (t, pos) = common::tree_from_drawing(&segments);
        let k = t.count_initial_leaves();
        let initial: BTreeSet<common::Point> = t.post_order_leaves()[..k].iter().map(|id| pos[id]).collect();
        let circled: BTreeSet<common::Point> = circled.into_iter().collect();
        ensure(initial == circled, || format!("{t}: initial leaves {initial:?}, circled {circled:?}"))?;
        counts.push(k);
    }
    ensure(counts == [2, 4, 2, 4], || format!("initial-leaf counts {counts:?}"))?;
    Ok(format!(
        "type (2,3,2,1) both; initial leaves {counts:?}; {} external faces, {} clawed nodes",
        faces.len(),
        clawed.len()
    ))
}

fn determinism() -> Outcome {
    let commands: [&[&str]; 3] = [
        &["s-table", "--max-weight", "10", "--format", "csv"],
        &["s-table", "--max-weight", "10", "--format", "json"],
        &["g-table", "--max-weight", "8", "--with-counts", "--format", "json"],
    ];
    let mut runs = 0;
    for cmd in commands {
        let mut outputs = Vec::new();
        for jobs in ["1", "2", "4", "1", "4"] {
            let args = ["geode", "--jobs", jobs].into_iter().chain(cmd.iter().copied());
            let (code, out, err) = run_captured(args);
            ensure(code == 0, || format!("{cmd:?} exited {code}: {err}"))?;
            outputs.push(out);
            runs += 1;
        }
        ensure(outputs.windows(2).all(|w| w[0] == w[1]), || format!("{cmd:?} output differs across runs"))?;

        let exe = env!("CARGO_BIN_EXE_geode");
        for _ in 0..2 {
            let proc = Command::new(exe).args(cmd).output().map_err(|e| e.to_string())?;
            ensure(proc.status.code() == Some(0), || format!("binary {cmd:?} failed"))?;
            ensure(proc.stdout == outputs[0].as_bytes(), || format!("binary {cmd:?} differs"))?;
            runs += 1;
        }
    }
    // G table without counts, at the full algebraic bound.
    let a = run_captured(["geode", "--jobs", "1", "g-table", "--max-weight", "12"]);
    let b = run_captured(["geode", "--jobs", "8", "g-table", "--max-weight", "12"]);
    ensure(a == b && a.0 == 0, || "g-table --max-weight 12 differs across thread counts".into())?;
    Ok(format!("{} byte-identical runs", runs + 2))
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 10] = [
        ("Catalan specialization", catalan_specialization),
        ("counting theorem |T_m| = C_m, weight <= 10", counting_theorem),
        ("functional equation, weight 12", functional_equation),
        ("factorization S = 1 + (t_1+t_2+...)G, weight 12", factorization),
        ("Geode nonnegativity, weight 12", geode_nonnegative),
        ("G_m = L_m, weight <= 10", main_theorem),
        ("marked subdigons = L_m, weight <= 8", lemma_equivalence),
        ("bijection roundtrips, weight <= 8", bijection_roundtrips),
        ("figure spot checks", figure_spot_checks),
        ("CLI determinism", determinism),
    ];
    let mut failed = Vec::new();
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("[PASS] {:>2}. {name}: {detail}", i + 1),
            Err(why) => {
                println!("[FAIL] {:>2}. {name}: {why}", i + 1);
                failed.push(i + 1);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}

//! Acceptance criteria, one line each. Runs without the libtest harness so
//! the PASS/FAIL lines always reach stdout.

mod common;

use std::fs;
use std::path::Path;
use std::time::{Duration, Instant};

use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use its_meter::metrics::MetricsSummary;
use its_meter::probability::{
    expected_unique, p_at_least_one_unique, simulate_code_space, SimulationConfig,
};
use its_meter::reporting::{load_run, read_unique_csv, render_heatmap};
use its_meter::similarity::{
    cosine, embed_codes, similarity_matrix, validate_uniqueness, EmbeddingVector, FileEmbeddings,
    HARD_THRESHOLD,
};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn metrics(run: &Path) -> MetricsSummary {
    serde_json::from_str(&fs::read_to_string(run.join("metrics.json")).unwrap()).unwrap()
}

fn replay(dataset: &str, out: &Path, run_id: &str) -> Result<(String, Duration), String> {
    let start = Instant::now();
    let (printed, result) = common::replay_run(dataset, out, run_id);
    result.map_err(|e| format!("{dataset} run failed: {e}"))?;
    Ok((printed, start.elapsed()))
}

fn scrum_replay(out: &Path) -> Outcome {
    let (printed, elapsed) = replay("scrum", out, "scrum-a")?;
    let line = printed.lines().next().unwrap_or_default();
    ensure(
        line == "total=534 unique=66 ITS=0.12",
        format!("printed {line:?}"),
    )?;
    let m = metrics(&out.join("scrum-a"));
    ensure(
        m.total_codes == 534 && m.unique_codes == 66 && m.its_slope_ratio == 66.0 / 534.0,
        format!(
            "{}/{} ratio {}",
            m.unique_codes, m.total_codes, m.its_slope_ratio
        ),
    )?;
    ensure(
        elapsed < Duration::from_secs(5),
        format!("took {elapsed:?}"),
    )?;
    Ok(format!("{line} in {:.0} ms", elapsed.as_secs_f64() * 1e3))
}

fn teaching_replay(out: &Path) -> Outcome {
    let (printed, _) = replay("teaching", out, "teaching-a")?;
    let line = printed.lines().next().unwrap_or_default();
    ensure(
        line == "total=135 unique=53 ITS=0.39",
        format!("printed {line:?}"),
    )?;
    let m = metrics(&out.join("teaching-a"));
    ensure(
        m.its_slope_ratio == 53.0 / 135.0,
        format!("ratio {}", m.its_slope_ratio),
    )?;
    Ok(line.to_string())
}

fn ratio_series(out: &Path) -> Outcome {
    let scrum = metrics(&out.join("scrum-a")).ratio_series;
    let teaching = metrics(&out.join("teaching-a")).ratio_series;
    ensure(
        scrum.first() == Some(&1.0),
        "scrum series does not start at 1",
    )?;
    ensure(
        teaching.first() == Some(&1.0),
        "teaching series does not start at 1",
    )?;
    let (s, t) = (*scrum.last().unwrap(), *teaching.last().unwrap());
    ensure((0.10..=0.15).contains(&s), format!("scrum final {s}"))?;
    ensure((0.35..=0.45).contains(&t), format!("teaching final {t}"))?;
    Ok(format!("scrum 1.0 -> {s:.4}, teaching 1.0 -> {t:.4}"))
}

fn probability_closed_form() -> Outcome {
    let p = |space| p_at_least_one_unique(66, space, 15).unwrap();
    ensure(p(66) == 0.0, format!("p(66,66,15) = {}", p(66)))?;
    let p90 = p(90);
    ensure(
        (0.985..=0.995).contains(&p90),
        format!("p(66,90,15) = {p90}"),
    )?;
    for s in 66..500 {
        ensure(p(s + 1) > p(s), format!("not increasing at {s}"))?;
    }
    let half = p(132);
    let exact = 1.0 - 2f64.powi(-15);
    ensure(
        (half - exact).abs() <= 1e-12,
        format!("p(66,132,15) = {half}"),
    )?;
    Ok(format!(
        "p(66,90,15) = {p90:.4}; p(66,132,15) - (1 - 2^-15) = {:.1e}",
        half - exact
    ))
}

fn simulation_vs_oracle() -> Outcome {
    let start = Instant::now();
    let mut notes = Vec::new();
    for (space, iterations, draw) in [(100u64, 10u32, 15u64), (1000, 10, 15), (1000, 100, 15)] {
        let oracle = common::markov_mean_unique(space as usize, iterations as usize, draw as usize);
        let config = SimulationConfig::new(space, iterations, draw, 1000, 20240517);
        let result = simulate_code_space(&config).map_err(|e| e.to_string())?;
        for (i, o) in oracle.iter().enumerate() {
            let closed = expected_unique(space, i as u32 + 1, draw).unwrap();
            ensure(
                (closed - o).abs() <= 1e-9 * o.max(1.0),
                format!("closed form {closed} vs oracle {o} at {space}/{}", i + 1),
            )?;
        }
        let last = result.per_iteration.last().unwrap();
        let target = *oracle.last().unwrap();
        let se = last.std_error(config.replications);
        let z = (last.mean_unique - target) / se;
        ensure(
            z.abs() <= 3.0,
            format!(
                "({space},{iterations},{draw}): mean {} vs {target}, z = {z:.2}",
                last.mean_unique
            ),
        )?;
        if (space, iterations) == (100, 10) {
            let gap = last.mean_total - last.mean_unique;
            ensure(gap >= 50.0, format!("separation {gap}"))?;
        }
        notes.push(format!("({space},{iterations},{draw}) z={z:+.2}"));
    }
    let elapsed = start.elapsed();
    ensure(
        elapsed < Duration::from_secs(30),
        format!("took {elapsed:?}"),
    )?;
    Ok(format!(
        "{} in {:.1} s",
        notes.join(", "),
        elapsed.as_secs_f64()
    ))
}

fn codebook_invariants() -> Outcome {
    let plans = prop::collection::vec(prop::collection::vec(0u8..40, 1..=16), 1..=12);
    let mut runner = TestRunner::new(Config {
        cases: 64,
        failure_persistence: None,
        ..Config::default()
    });
    runner
        .run(&(plans.clone(), 0u64..4), |(plan, salt)| {
            common::check_monotone(&plan, salt).map_err(TestCaseError::fail)
        })
        .map_err(|e| format!("monotonicity: {e}"))?;
    runner
        .run(
            &(plans.clone(), 0u64..4, any::<u64>()),
            |(plan, salt, seed)| {
                common::check_permutation(&plan, salt, seed).map_err(TestCaseError::fail)
            },
        )
        .map_err(|e| format!("permutation: {e}"))?;
    runner
        .run(&(plans, 1u64..1000), |(plan, salt)| {
            common::check_replay_determinism(&plan, salt).map_err(TestCaseError::fail)
        })
        .map_err(|e| format!("replay determinism: {e}"))?;
    Ok("3 properties x 64 random corpora".into())
}

fn similarity(out: &Path) -> Outcome {
    let v = |id: &str, values: &[f64]| EmbeddingVector::new(id, values.to_vec());
    let same = cosine(&v("a", &[1.0, 2.0, 3.0]), &v("b", &[2.0, 4.0, 6.0])).unwrap();
    let ortho = cosine(&v("a", &[1.0, 0.0]), &v("b", &[0.0, 3.0])).unwrap();
    let diag = cosine(&v("a", &[1.0, 0.0]), &v("b", &[1.0, 1.0])).unwrap();
    ensure((same - 1.0).abs() <= 1e-9, format!("parallel {same}"))?;
    ensure(ortho.abs() <= 1e-9, format!("orthogonal {ortho}"))?;
    ensure(
        (diag - 0.5f64.sqrt()).abs() <= 1e-9,
        format!("45 degrees {diag}"),
    )?;

    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for trial in 0..50 {
        let n = rng.random_range(2..30);
        let dim = rng.random_range(1..64);
        let vectors: Vec<EmbeddingVector> = (0..n)
            .map(|i| {
                let mut values: Vec<f64> = (0..dim).map(|_| rng.random_range(-1.0..1.0)).collect();
                values[0] += 1e-3; // keep norms away from zero
                EmbeddingVector::new(format!("c{i}"), values)
            })
            .collect();
        let m = similarity_matrix(&vectors).map_err(|e| format!("trial {trial}: {e}"))?;
        for i in 0..n {
            ensure(
                (m.get(i, i) - 1.0).abs() <= 1e-6,
                format!("trial {trial}: diagonal {}", m.get(i, i)),
            )?;
            for j in 0..n {
                ensure(
                    (m.get(i, j) - m.get(j, i)).abs() <= 1e-9,
                    format!("trial {trial}: asymmetric"),
                )?;
            }
        }
    }

    let unique =
        read_unique_csv(&out.join("scrum-a/cumulative_unique.csv")).map_err(|e| e.to_string())?;
    let items: Vec<(String, String)> = unique
        .iter()
        .map(|(c, _)| (c.code_id(), c.codebook_text()))
        .collect();
    let provider = FileEmbeddings::open(&common::fixtures().join("scrum/vectors.json"))
        .map_err(|e| e.to_string())?;
    let mut vectors = embed_codes(&items, &provider).map_err(|e| e.to_string())?;
    let matrix = similarity_matrix(&vectors).map_err(|e| e.to_string())?;
    let report = validate_uniqueness(&matrix, HARD_THRESHOLD).map_err(|e| e.to_string())?;
    ensure(
        matrix.n() == 66 && report.passed,
        format!("{} codes, passed={}", matrix.n(), report.passed),
    )?;
    let start = Instant::now();
    let svg = render_heatmap(&matrix, "scrum");
    ensure(
        start.elapsed() < Duration::from_secs(1) && svg.matches("<rect x=").count() == 66 * 66,
        "heatmap",
    )?;

    let dup = EmbeddingVector::new("injected#0", vectors[10].values.clone());
    vectors.push(dup);
    let matrix = similarity_matrix(&vectors).map_err(|e| e.to_string())?;
    let report = validate_uniqueness(&matrix, HARD_THRESHOLD).map_err(|e| e.to_string())?;
    let flagged: Vec<_> = report
        .flagged_pairs
        .iter()
        .map(|p| (p.code_id_a.as_str(), p.code_id_b.as_str()))
        .collect();
    ensure(
        !report.passed && flagged == vec![(vectors[10].code_id.as_str(), "injected#0")],
        format!("injected duplicate: {flagged:?}"),
    )?;
    Ok(format!(
        "hand values, 50 random matrices, 66-code fixture passes (max off-diagonal {:.3}), injected duplicate flagged",
        similarity_matrix(&vectors[..66]).unwrap().max_off_diagonal().unwrap()
    ))
}

fn parser_robustness() -> Outcome {
    let cases = common::parser_cases();
    ensure(cases.len() >= 10, "fewer than 10 cases")?;
    for case in &cases {
        let got = common::classify(case);
        ensure(
            got == case.expect,
            format!("{}: expected {:?}, got {:?}", case.label, case.expect, got),
        )?;
    }
    let sixteen = cases.iter().find(|c| c.label == "sixteen entries").unwrap();
    ensure(
        common::classify(sixteen) == common::Expect::Codes(16),
        "16-entry case rejected",
    )?;
    Ok(format!(
        "{} completions mapped, 16-entry response accepted",
        cases.len()
    ))
}

fn files_under(dir: &Path, exts: &[&str]) -> Vec<std::path::PathBuf> {
    let mut files = Vec::new();
    for entry in fs::read_dir(dir).unwrap() {
        let p = entry.unwrap().path();
        if p.is_dir() {
            files.extend(files_under(&p, exts));
        } else if p
            .extension()
            .and_then(|e| e.to_str())
            .is_some_and(|e| exts.contains(&e))
        {
            files.push(p);
        }
    }
    files.sort();
    files
}

fn round_trip(out: &Path) -> Outcome {
    for (dataset, run) in [("scrum", "scrum-a"), ("teaching", "teaching-a")] {
        let dir = out.join(run);
        let loaded = load_run(&dir).map_err(|e| e.to_string())?;
        let m = metrics(&dir);
        ensure(
            loaded.state.total_count() == m.total_codes
                && loaded.state.unique_count() == m.unique_codes,
            format!("{dataset}: reloaded counts differ"),
        )?;
        ensure(
            loaded.state.series() == loaded.series,
            format!("{dataset}: reloaded series differ"),
        )?;
        ensure(
            loaded.series.len() == m.interviews,
            format!("{dataset}: series length"),
        )?;
    }
    replay("scrum", out, "scrum-b")?;
    let (a, b) = (out.join("scrum-a"), out.join("scrum-b"));
    let files = files_under(&a, &["csv", "svg"]);
    ensure(files.len() > 40, "too few artifacts")?;
    for f in &files {
        let rel = f.strip_prefix(&a).unwrap();
        ensure(
            fs::read(f).ok() == fs::read(b.join(rel)).ok(),
            format!("{} differs", rel.display()),
        )?;
    }
    Ok(format!(
        "counts and series reload exactly; {} CSV/SVG files byte-identical across runs",
        files.len()
    ))
}

type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

fn main() {
    let tmp = tempfile::tempdir().expect("temp dir");
    let out = tmp.path();
    let criteria: Vec<Criterion<'_>> = vec![
        (
            "scrum replay 534/66 ITS 0.12 under 5 s",
            Box::new(|| scrum_replay(out)),
        ),
        (
            "teaching replay 135/53 ITS 0.39",
            Box::new(|| teaching_replay(out)),
        ),
        ("ratio series endpoints", Box::new(|| ratio_series(out))),
        ("probability closed form", Box::new(probability_closed_form)),
        ("simulation vs oracle", Box::new(simulation_vs_oracle)),
        ("codebook invariants", Box::new(codebook_invariants)),
        ("similarity", Box::new(|| similarity(out))),
        ("parser robustness", Box::new(parser_robustness)),
        (
            "round trip and byte-identical replays",
            Box::new(|| round_trip(out)),
        ),
    ];
    let mut failed = 0;
    for (name, check) in &criteria {
        let outcome = std::panic::catch_unwind(std::panic::AssertUnwindSafe(check))
            .unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(detail) => println!("PASS  {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL  {name}: {detail}");
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}

//! One line per acceptance criterion; exits nonzero if any fails.

use std::process::Command;
use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use starinv::fixtures::{self, Fixture};
use starinv::text::{parse_ring, ring_spec};
use starinv_core::inverse::jacobson_partner;
use starinv_core::lab::{random_pair, sweep, Sampler, SweepConfig, SweepSummary, TheoremId};
use starinv_core::ring::{RingContext, RingElement};

struct Outcome {
    pass: bool,
    detail: String,
}

fn finite_contexts() -> Vec<RingContext> {
    let mut specs: Vec<String> = (2..=24).map(|n| format!("zmod:{n}")).collect();
    specs.extend(["mat:2:F2:transpose", "mat:2:F3:transpose", "mat:2:F2^2:ctranspose"].map(String::from));
    specs.iter().map(|s| parse_ring(s).unwrap()).collect()
}

fn char_zero_contexts() -> Vec<RingContext> {
    let mut out = Vec::new();
    for k in 2..=4 {
        out.push(parse_ring(&format!("mat:{k}:Q:transpose")).unwrap());
        out.push(parse_ring(&format!("mat:{k}:Qi:ctranspose")).unwrap());
    }
    out
}

fn fixture_outcome(list: Vec<Fixture>, elapsed: Duration, limit: Option<Duration>) -> Outcome {
    let failed: Vec<&str> = list.iter().filter(|f| !f.pass).map(|f| f.name.as_str()).collect();
    let in_time = limit.is_none_or(|l| elapsed < l);
    let mut detail = format!("{}/{} claims hold", list.len() - failed.len(), list.len());
    if !failed.is_empty() {
        detail += &format!("; failing: {}", failed.join("; "));
    }
    if let Some(l) = limit {
        detail += &format!("; limit {:.0?}", l);
    }
    Outcome { pass: failed.is_empty() && in_time, detail }
}

fn describe_failures(summaries: &[(String, SweepSummary<RingElement>)]) -> String {
    summaries
        .iter()
        .filter(|(_, s)| s.failures() > 0)
        .map(|(name, s)| {
            let first = s
                .theorems
                .iter()
                .map(|(_, t)| t)
                .chain([&s.engine])
                .find_map(|t| t.first_failure.as_ref())
                .map(|i| starinv::report::ReportRecord::item(i).to_line())
                .unwrap_or_default();
            format!("{name}: {} failures, first {first}", s.failures())
        })
        .collect::<Vec<_>>()
        .join("; ")
}

fn idempotent_regression() -> Outcome {
    let t = Instant::now();
    let list = fixtures::idempotent_example();
    fixture_outcome(list, t.elapsed(), Some(Duration::from_secs(1)))
}

fn exhaustive_sweeps() -> Outcome {
    let t = Instant::now();
    let cfg = SweepConfig::new(TheoremId::ALL.to_vec(), Sampler::Exhaustive);
    let mut summaries = Vec::new();
    let mut elements = 0;
    let mut verdicts = 0;
    let mut oracle_missing = Vec::new();
    for ctx in finite_contexts() {
        let s = sweep(&ctx, &cfg, &mut |_| {}).expect("finite rings enumerate");
        elements += s.elements;
        verdicts += s.theorems.iter().map(|(_, t)| t.checked).sum::<usize>();
        // routes, ep, oracle and projections per element.
        if s.engine.checked != 4 * s.elements {
            oracle_missing.push(ring_spec(&ctx));
        }
        summaries.push((ring_spec(&ctx), s));
    }
    let failures: usize = summaries.iter().map(|(_, s)| s.failures()).sum();
    let elapsed = t.elapsed();
    let mut detail = format!(
        "{} rings, {elements} elements, {verdicts} verdicts, {failures} failures; limit 60s",
        summaries.len()
    );
    if !oracle_missing.is_empty() {
        detail += &format!("; no oracle for {}", oracle_missing.join(", "));
    }
    if failures > 0 {
        detail += &format!("; {}", describe_failures(&summaries));
    }
    Outcome {
        pass: failures == 0 && oracle_missing.is_empty() && elapsed < Duration::from_secs(60),
        detail,
    }
}

fn random_sweeps() -> Outcome {
    let t = Instant::now();
    let mut cfg = SweepConfig::new(vec![TheoremId::BothCores], Sampler::Random { count: 500, entry_bound: 5 });
    cfg.seed = 0;
    let contexts = char_zero_contexts();
    let summaries: Vec<(String, SweepSummary<RingElement>)> = std::thread::scope(|scope| {
        let handles: Vec<_> = contexts
            .iter()
            .map(|ctx| {
                let cfg = &cfg;
                scope.spawn(move || (ring_spec(ctx), sweep(ctx, cfg, &mut |_| {}).expect("sampling never fails")))
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("sweep thread")).collect()
    });
    let failures: usize = summaries.iter().map(|(_, s)| s.failures()).sum();
    let checks: usize = summaries.iter().map(|(_, s)| s.engine.checked + s.theorems[0].1.checked).sum();
    let elapsed = t.elapsed();
    let mut detail = format!(
        "{} rings x 500 elements, {checks} checks, {failures} failures; limit 120s",
        summaries.len()
    );
    if failures > 0 {
        detail += &format!("; {}", describe_failures(&summaries));
    }
    Outcome { pass: failures == 0 && elapsed < Duration::from_secs(120), detail }
}

fn jacobson_pairs() -> Outcome {
    let mut pairs = 0;
    let mut invertible = 0;
    let mut bad = Vec::new();
    for ctx in finite_contexts().into_iter().chain(char_zero_contexts()) {
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        for _ in 0..1000 {
            let (a, b) = random_pair(&ctx, 5, &mut rng);
            let v = jacobson_partner(&ctx, &a, &b);
            pairs += 1;
            let ok = v.agree() && (v.ab_inverse.is_none() || v.partner_ok == Some(true));
            if v.ab_inverse.is_some() {
                invertible += 1;
            }
            if !ok && bad.len() < 3 {
                bad.push(format!("{} a = {} b = {}", ring_spec(&ctx), starinv::text::format_element(&a), starinv::text::format_element(&b)));
            }
        }
    }
    let mut detail = format!("{pairs} pairs, {invertible} with 1 + ab invertible");
    if !bad.is_empty() {
        detail += &format!("; failing: {}", bad.join("; "));
    }
    Outcome { pass: bad.is_empty(), detail }
}

fn negative_cases() -> Outcome {
    let t = Instant::now();
    fixture_outcome(fixtures::negative(), t.elapsed(), None)
}

fn determinism() -> Outcome {
    let dir = std::env::temp_dir().join(format!("starinv-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let runs: [&[&str]; 3] = [
        &["--ring", "zmod:12"],
        &["--ring", "mat:2:F2^2:ctranspose"],
        &["--ring", "mat:3:Qi:ctranspose", "--random", "--count", "60", "--seed", "11"],
    ];
    let mut compared = Vec::new();
    let mut pass = true;
    for (i, args) in runs.iter().enumerate() {
        let mut bytes = Vec::new();
        for rep in 0..2 {
            let path = dir.join(format!("run{i}-{rep}.jsonl"));
            let status = Command::new(env!("CARGO_BIN_EXE_starinv"))
                .arg("sweep")
                .args(*args)
                .arg("--output")
                .arg(&path)
                .env_remove("STARINV_SEED")
                .stdout(std::process::Stdio::null())
                .status()
                .expect("binary runs");
            pass &= status.success();
            bytes.push(std::fs::read(&path).unwrap_or_default());
        }
        let same = !bytes[0].is_empty() && bytes[0] == bytes[1];
        pass &= same;
        compared.push(format!("{} ({} bytes, {})", args[1], bytes[0].len(), if same { "identical" } else { "differ" }));
    }
    let _ = std::fs::remove_dir_all(&dir);
    Outcome { pass, detail: compared.join(", ") }
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 6] = [
        ("idempotent example regression", idempotent_regression),
        ("exhaustive finite sweeps", exhaustive_sweeps),
        ("randomized characteristic-0 sweeps", random_sweeps),
        ("Jacobson pairs", jacobson_pairs),
        ("negative cases", negative_cases),
        ("determinism of report files", determinism),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let o = run();
        if !o.pass {
            failed += 1;
        }
        println!(
            "criterion {} {} {name} ({:.2}s): {}",
            i + 1,
            if o.pass { "PASS" } else { "FAIL" },
            t.elapsed().as_secs_f64(),
            o.detail
        );
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}

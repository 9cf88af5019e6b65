//! Acceptance suite: one line per criterion, nonzero exit if any fails.

use std::collections::BTreeMap;
use std::process::{Command, ExitCode};

use trigroup::config::random::rng;
use trigroup::config::scene::random_central_scene;
use trigroup::config::{verify_quartic_fact, CentralScene};
use trigroup::group::*;
use trigroup::kernel::{int, join};
use trigroup_harness::campaign::{run_campaign, trial_seed, CampaignSpec, Theorem, VerificationReport};
use trigroup_harness::figure::{emit_figure, FigureName};

const SEED: u64 = 42;

type Criterion = (&'static str, fn() -> Verdict);

struct Verdict {
    ok: bool,
    detail: String,
}

fn verdict(ok: bool, detail: impl Into<String>) -> Verdict {
    Verdict { ok, detail: detail.into() }
}

fn jobs() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

fn campaign(theorem: Theorem, trials: usize) -> Result<VerificationReport, String> {
    run_campaign(&CampaignSpec { theorem, trials, seed: SEED, jobs: jobs() }).map_err(|e| e.to_string())
}

fn clean(report: &VerificationReport) -> bool {
    report.failures == 0 && report.passes == report.trials
}

fn describe(r: &VerificationReport) -> String {
    let mut s = format!("{} {}/{} passed, {} skips", r.theorem.name(), r.passes, r.trials, r.skips);
    if let Some(f) = &r.first_failure {
        s += &format!("; first failure at trial {}: {}", f.index, f.reason);
    }
    s
}

/// Central scenes drawn the way campaigns draw them, skipping degenerate
/// seeds.
fn scenes(count: usize, check: impl Fn(&CentralScene) -> trigroup::Result<bool>) -> (usize, usize, usize) {
    let (mut pass, mut fail, mut skips) = (0, 0, 0);
    for index in 0..count {
        for attempt in 0.. {
            let Ok(scene) = random_central_scene(trial_seed(SEED, index, attempt)) else {
                skips += 1;
                continue;
            };
            match check(&scene) {
                Ok(true) => pass += 1,
                Ok(false) => fail += 1,
                Err(_) => {
                    skips += 1;
                    continue;
                }
            }
            break;
        }
    }
    (pass, fail, skips)
}

fn criterion1() -> Verdict {
    let (d, g) = match (campaign(Theorem::Desargues, 1000), campaign(Theorem::GenDesargues, 1000)) {
        (Ok(d), Ok(g)) => (d, g),
        (Err(e), _) | (_, Err(e)) => return verdict(false, e),
    };
    let ok = clean(&d) && clean(&g) && g.skips * 20 < g.trials && d.skips * 20 < d.trials;
    verdict(ok, format!("{}; {}", describe(&g), describe(&d)))
}

fn criterion2() -> Verdict {
    match (campaign(Theorem::Proof1, 200), campaign(Theorem::Proof2, 200)) {
        (Ok(a), Ok(b)) => verdict(clean(&a) && clean(&b), format!("{}; {} (C' equals C checked per scene)", describe(&a), describe(&b))),
        (Err(e), _) | (_, Err(e)) => verdict(false, e),
    }
}

fn criterion3() -> Verdict {
    let (pass, fail, skips) = scenes(100, verify_quartic_fact);
    verdict(fail == 0 && pass == 100, format!("{pass}/100 scenes, {fail} failures, {skips} resamples"))
}

fn criterion4() -> Verdict {
    let mut ok = true;
    let mut parts = Vec::new();
    for t in [Theorem::GenPappus, Theorem::GenPascal, Theorem::AnotherPascal, Theorem::Pappus, Theorem::Pascal] {
        match campaign(t, 1000) {
            Ok(r) => {
                ok &= clean(&r);
                parts.push(describe(&r));
            }
            Err(e) => {
                ok = false;
                parts.push(e);
            }
        }
    }
    verdict(ok, parts.join("; "))
}

fn criterion5() -> Verdict {
    let frame = Frame::standard();
    let mut per_class: BTreeMap<String, usize> = BTreeMap::new();
    let mut mismatches = 0;
    for index in 0..1000 {
        let class = PairClass::ALL[index % PairClass::ALL.len()];
        let mut r = rng(trial_seed(SEED, index, 0));
        let Ok((x, y)) = random_pair(&mut r, &frame, class) else {
            mismatches += 1;
            continue;
        };
        match presum_geometric(&frame, &x, &y) {
            Ok(p) if p.element == presum_coords(&x, &y) => *per_class.entry(format!("{class:?}")).or_default() += 1,
            _ => mismatches += 1,
        }
    }
    let campaign_ok = campaign(Theorem::PresumEquivalence, 1000).map(|r| clean(&r)).unwrap_or(false);
    let min = per_class.values().copied().min().unwrap_or(0);
    let ok = mismatches == 0 && per_class.len() == PairClass::ALL.len() && min >= 50 && campaign_ok;
    verdict(ok, format!("1000 pairs, {mismatches} mismatches, per class {per_class:?}"))
}

fn criterion6() -> Verdict {
    let mut kinds: BTreeMap<String, usize> = BTreeMap::new();
    for index in 0..1000 {
        let mut r = rng(trial_seed(SEED, index, 0));
        for _ in 0..3 {
            *kinds.entry(format!("{:?}", random_any(&mut r).kind())).or_default() += 1;
        }
    }
    match campaign(Theorem::GroupAxioms, 1000) {
        Ok(r) => verdict(clean(&r) && kinds.len() == 3, format!("{}; element kinds {kinds:?}", describe(&r))),
        Err(e) => verdict(false, e),
    }
}

fn criterion7() -> Verdict {
    const N: usize = 120;
    let frame = Frame::standard();
    let mut counts = [0usize; 4];
    let mut bad = Vec::new();
    for index in 0..N {
        let mut r = rng(trial_seed(SEED, index, 0));
        let x = random_element(&mut r, Kind::Geometric);
        let a = frame.triangle_from_bary(&x).expect("geometric");

        // Medial triangle.
        let p = presum_geometric(&frame, &x, &x).expect("defined");
        let medial = (0..3).all(|k| {
            let (i, j) = ((k + 1) % 3, (k + 2) % 3);
            let (ix, iy) = a.vertices[i].to_affine().unwrap();
            let (jx, jy) = a.vertices[j].to_affine().unwrap();
            p.vertices[k].as_ref().and_then(|v| v.to_affine()) == Some(((ix + jx) / int(2), (iy + jy) / int(2)))
        });
        if medial && p.element == x.scale(&int(-2)) {
            counts[0] += 1;
        } else {
            bad.push(format!("medial #{index}"));
        }

        // Central reflection.
        let z = presum_geometric(&frame, &x, &TriangleElement::zero()).expect("defined");
        let (cx, cy) = a.centroid().to_affine().unwrap();
        let reflected = (0..3).all(|k| {
            let (vx, vy) = a.vertices[k].to_affine().unwrap();
            z.vertices[k].as_ref().and_then(|v| v.to_affine()) == Some((int(2) * &cx - vx, int(2) * &cy - vy))
        });
        if reflected && z.element == -&x {
            counts[1] += 1;
        } else {
            bad.push(format!("reflection #{index}"));
        }

        // Symmetric about a general point: A_iB_j parallel to A_jB_i.
        let (sx, sy) = random_pair(&mut r, &frame, PairClass::SymmetricPoint).expect("pair");
        let sa = frame.triangle_from_bary(&sx).unwrap().vertices;
        let sb = frame.triangle_from_bary(&sy).unwrap().vertices;
        let sp = presum_geometric(&frame, &sx, &sy).expect("defined");
        let parallel = (0..3).all(|k| {
            let (i, j) = ((k + 1) % 3, (k + 2) % 3);
            match (join(&sa[i], &sb[j]), join(&sa[j], &sb[i])) {
                (Ok(l1), Ok(l2)) => {
                    l1 != l2 && l1.point_at_infinity().ok() == l2.point_at_infinity().ok()
                        && sp.vertices[k].as_ref() == l1.point_at_infinity().ok().as_ref()
                }
                _ => false,
            }
        });
        let directions = sp.vertices == frame.vertices_of(&sp.element);
        if parallel && directions && sp.element.kind() == Kind::Pseudo && sp.element == presum_coords(&sx, &sy) {
            counts[2] += 1;
        } else {
            bad.push(format!("symmetric point #{index}"));
        }
    }
    let (pass, fail, _) = scenes(N, |s| verify_central_half(&s.s, &s.a));
    counts[3] = pass;
    if fail > 0 {
        bad.push(format!("{fail} harmonic failures"));
    }
    let ok = bad.is_empty() && counts.iter().all(|&c| c >= 100);
    verdict(
        ok,
        format!(
            "medial {}, zero reflection {}, symmetric point {}, harmonic half {}{}",
            counts[0],
            counts[1],
            counts[2],
            counts[3],
            if bad.is_empty() { String::new() } else { format!("; failures: {}", bad.join(", ")) }
        ),
    )
}

fn criterion8() -> Verdict {
    match campaign(Theorem::LemmaPseudo, 500) {
        Ok(r) => verdict(clean(&r), describe(&r)),
        Err(e) => verdict(false, e),
    }
}

fn criterion9() -> Verdict {
    match campaign(Theorem::ReyeCounts, 200) {
        Ok(r) => verdict(clean(&r), describe(&r) + ", expecting (16, 3, 12, 4)"),
        Err(e) => verdict(false, e),
    }
}

fn cli(args: &[&str]) -> Vec<u8> {
    let out = Command::new(env!("CARGO_BIN_EXE_trigroup")).args(args).env_remove("TG_SEED").output().expect("binary runs");
    out.stdout
}

fn criterion10() -> Verdict {
    let all = [
        Theorem::Desargues,
        Theorem::GenDesargues,
        Theorem::Proof1,
        Theorem::Proof2,
        Theorem::Pappus,
        Theorem::GenPappus,
        Theorem::Pascal,
        Theorem::GenPascal,
        Theorem::AnotherPascal,
        Theorem::ReyeCounts,
        Theorem::GroupAxioms,
        Theorem::PresumEquivalence,
        Theorem::LemmaPseudo,
    ];
    let mut differing = Vec::new();
    for t in all {
        let run = |jobs| run_campaign(&CampaignSpec { theorem: t, trials: 60, seed: 7, jobs }).map(|r| r.to_json()).ok();
        let (a, b, c) = (run(1), run(1), run(jobs().max(3)));
        if a.is_none() || a != b || a != c {
            differing.push(t.name());
        }
    }
    for f in FigureName::ALL {
        let (a, b) = (emit_figure(f, None).ok(), emit_figure(f, None).ok());
        if a.is_none() || a != b {
            differing.push(f.name());
        }
    }
    let r1 = cli(&["verify", "gen_desargues", "--trials", "100", "--seed", "5", "--jobs", "1", "--json"]);
    let r2 = cli(&["verify", "gen_desargues", "--trials", "100", "--seed", "5", "--jobs", "4", "--json"]);
    let f1 = cli(&["figure", "fig1_desargues"]);
    let f2 = cli(&["figure", "fig1_desargues"]);
    if r1.is_empty() || r1 != r2 {
        differing.push("cli report".into());
    }
    if f1.is_empty() || f1 != f2 {
        differing.push("cli figure".into());
    }
    verdict(
        differing.is_empty(),
        if differing.is_empty() {
            "13 campaigns across worker counts, 7 figures, CLI report and SVG byte-identical".to_string()
        } else {
            format!("non-reproducible: {}", differing.join(", "))
        },
    )
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("generalized Desargues on 1000 scenes", criterion1),
        ("proof paths agree on 200 scenes", criterion2),
        ("quartic through the grid on 100 scenes", criterion3),
        ("generalized Pappus and Pascal, 1000 each", criterion4),
        ("geometric pre-sum equals coordinates on 1000 pairs", criterion5),
        ("group axioms on 1000 triples", criterion6),
        ("degenerate landmarks", criterion7),
        ("pseudo pre-sum through midpoint triangles on 500 pairs", criterion8),
        ("Reye-dual counts on 200 scenes", criterion9),
        ("determinism", criterion10),
    ];
    let mut failed = 0;
    for (n, (name, run)) in criteria.iter().enumerate() {
        let v = run();
        println!("[{}] criterion {}: {name}: {}", if v.ok { "PASS" } else { "FAIL" }, n + 1, v.detail);
        if !v.ok {
            failed += 1;
        }
    }
    println!("acceptance: {} of 10 criteria passed", 10 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

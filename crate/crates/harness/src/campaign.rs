//! Seeded verification campaigns.
//!
//! Trial `i` draws instances from seeds `trial_seed(seed, i, attempt)`,
//! retrying on degenerate instances. Trials run on a worker pool but are
//! collected by index, so reports depend only on `(theorem, trials, seed)`.

use clap::ValueEnum;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use trigroup::config::hexagon::{verify_another_pascal_step, verify_pappus_reduction};
use trigroup::config::quartic::Proof2Grid;
use trigroup::config::random::rng;
use trigroup::config::*;
use trigroup::group::*;
use trigroup::Error;

use crate::HarnessError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "snake_case")]
#[value(rename_all = "snake_case")]
pub enum Theorem {
    Desargues,
    GenDesargues,
    Proof1,
    Proof2,
    Pappus,
    GenPappus,
    Pascal,
    GenPascal,
    AnotherPascal,
    ReyeCounts,
    GroupAxioms,
    PresumEquivalence,
    LemmaPseudo,
}

impl Theorem {
    pub fn name(self) -> String {
        self.to_possible_value().expect("named").get_name().to_string()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CampaignSpec {
    pub theorem: Theorem,
    pub trials: usize,
    pub seed: u64,
    pub jobs: usize,
}

/// What one attempt of one trial produced.
#[derive(Clone, Debug, PartialEq)]
pub enum Trial {
    Pass,
    /// Degenerate instance; the trial is resampled.
    Skip(String),
    Fail { reason: String, instance: Value },
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FirstFailure {
    pub index: usize,
    pub seed: u64,
    pub reason: String,
    pub instance: Value,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub theorem: Theorem,
    pub trials: usize,
    pub seed: u64,
    /// How per-trial seeds are derived from `seed`.
    pub seeds: String,
    pub passes: usize,
    pub failures: usize,
    pub skips: usize,
    pub first_failure: Option<FirstFailure>,
}

pub const SEED_DERIVATION: &str = "splitmix64(seed ^ splitmix64(index) ^ splitmix64(attempt << 32))";

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }

    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }

    pub fn summary(&self) -> String {
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        format!(
            "{verdict} {}: {} trials, {} passed, {} failed, {} skipped (seed {})",
            self.theorem.name(),
            self.trials,
            self.passes,
            self.failures,
            self.skips,
            self.seed
        )
    }
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

pub fn trial_seed(seed: u64, index: usize, attempt: usize) -> u64 {
    splitmix64(seed ^ splitmix64(index as u64) ^ splitmix64((attempt as u64) << 32))
}

pub fn run_campaign(spec: &CampaignSpec) -> Result<VerificationReport, HarnessError> {
    run_campaign_with(spec, |index, seed| run_trial(spec.theorem, index, seed))
}

/// Runs a campaign with a caller-supplied trial function `(index, seed)`.
pub fn run_campaign_with<F>(spec: &CampaignSpec, trial: F) -> Result<VerificationReport, HarnessError>
where
    F: Fn(usize, u64) -> Trial + Sync,
{
    if spec.trials == 0 {
        return Err(HarnessError::Usage("trials must be at least 1".into()));
    }
    let budget = 10 * spec.trials;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(spec.jobs.max(1))
        .build()
        .map_err(|e| HarnessError::Usage(format!("worker pool: {e}")))?;
    let results: Vec<(Trial, u64, usize)> = pool.install(|| {
        (0..spec.trials)
            .into_par_iter()
            .map(|index| {
                let mut skips = 0;
                loop {
                    let seed = trial_seed(spec.seed, index, skips);
                    match trial(index, seed) {
                        Trial::Skip(_) if skips < budget => skips += 1,
                        outcome => return (outcome, seed, skips),
                    }
                }
            })
            .collect()
    });
    let skips: usize = results.iter().map(|r| r.2).sum();
    if skips > budget || results.iter().any(|r| matches!(r.0, Trial::Skip(_))) {
        return Err(HarnessError::GeneratorHealth { theorem: spec.theorem.name(), skips, trials: spec.trials });
    }
    let mut report = VerificationReport {
        theorem: spec.theorem,
        trials: spec.trials,
        seed: spec.seed,
        seeds: SEED_DERIVATION.into(),
        passes: 0,
        failures: 0,
        skips,
        first_failure: None,
    };
    for (index, (outcome, seed, _)) in results.into_iter().enumerate() {
        match outcome {
            Trial::Pass => report.passes += 1,
            Trial::Fail { reason, instance } => {
                report.failures += 1;
                report.first_failure.get_or_insert(FirstFailure { index, seed, reason, instance });
            }
            Trial::Skip(_) => unreachable!("skips are resampled"),
        }
    }
    Ok(report)
}

/// A verifier result: `Ok(true)` passes, `Ok(false)` and the "theorem does
/// not hold" errors fail, every other error marks a degenerate instance.
fn judge(result: trigroup::Result<bool>, instance: impl FnOnce() -> Value) -> Trial {
    match result {
        Ok(true) => Trial::Pass,
        Ok(false) => Trial::Fail { reason: "verifier returned false".into(), instance: instance() },
        Err(e @ (Error::NotCollinear | Error::NotConcurrent)) => Trial::Fail { reason: e.to_string(), instance: instance() },
        Err(e) => Trial::Skip(e.to_string()),
    }
}

fn points_json(points: &[&trigroup::HomPoint]) -> Value {
    serde_json::to_value(points).expect("points serialize")
}

fn elements_json(elements: &[(&str, &TriangleElement)]) -> Value {
    Value::Object(elements.iter().map(|(k, v)| (k.to_string(), serde_json::to_value(v).expect("element"))).collect())
}

fn check(ok: bool, what: &str) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(what.to_string())
    }
}

fn group_axioms(seed: u64) -> Trial {
    let mut r = rng(seed);
    let (x, y, z) = (random_any(&mut r), random_any(&mut r), random_any(&mut r));
    let frame = Frame::standard();
    let zero = TriangleElement::zero();
    let run = || -> Result<(), String> {
        check(sum(&x, &y) == sum(&y, &x), "commutativity")?;
        check(sum(&sum(&x, &y), &z) == sum(&x, &sum(&y, &z)), "associativity")?;
        check(sum(&x, &zero) == x, "identity")?;
        check(sum(&x, &-&x) == zero, "inverse")?;
        check(presum_coords(&x, &presum_coords(&x, &y)) == y, "pre-sum involution")?;
        for (p, q) in [(&x, &y), (&y, &z), (&x, &z)] {
            match presum_geometric(&frame, p, q) {
                Ok(g) => {
                    check(g.element == presum_coords(p, q), "geometric pre-sum")?;
                    if let Ok(back) = presum_geometric(&frame, p, &g.element) {
                        check(back.element == *q, "geometric pre-sum involution")?;
                    }
                }
                Err(Error::Unsupported(_)) => {}
                Err(e) => return Err(format!("geometric pre-sum: {e}")),
            }
            if let Ok(s) = sum_geometric(&frame, p, q) {
                check(s == sum(p, q), "geometric sum")?;
            }
        }
        Ok(())
    };
    match run() {
        Ok(()) => Trial::Pass,
        Err(reason) => Trial::Fail { reason, instance: elements_json(&[("x", &x), ("y", &y), ("z", &z)]) },
    }
}

fn presum_equivalence(index: usize, seed: u64) -> Trial {
    let class = PairClass::ALL[index % PairClass::ALL.len()];
    let frame = Frame::standard();
    let mut r = rng(seed);
    let (x, y) = match random_pair(&mut r, &frame, class) {
        Ok(p) => p,
        Err(e) => return Trial::Skip(e.to_string()),
    };
    let instance = || {
        let mut v = elements_json(&[("x", &x), ("y", &y)]);
        v["class"] = serde_json::to_value(class).expect("class");
        v
    };
    match presum_geometric(&frame, &x, &y) {
        Ok(p) if p.element == presum_coords(&x, &y) => Trial::Pass,
        Ok(p) => Trial::Fail { reason: format!("geometric pre-sum gave {}", p.element), instance: instance() },
        Err(e) => Trial::Fail { reason: e.to_string(), instance: instance() },
    }
}

fn lemma_pseudo(seed: u64) -> Trial {
    let frame = Frame::standard();
    let mut r = rng(seed);
    let x = random_element(&mut r, Kind::Pseudo);
    let y = random_element(&mut r, Kind::Pseudo);
    let expected = presum_coords(&x, &y);
    match pseudo_presum_via_lemma(&frame, &x, &y) {
        Ok(p) if p.element == expected => Trial::Pass,
        Ok(p) => Trial::Fail {
            reason: format!("midpoint route gave {}, coordinates give {expected}", p.element),
            instance: elements_json(&[("x", &x), ("y", &y)]),
        },
        Err(e) => Trial::Skip(e.to_string()),
    }
}

pub fn run_trial(theorem: Theorem, index: usize, seed: u64) -> Trial {
    use Theorem::*;
    match theorem {
        Desargues | GenDesargues | Proof1 | Proof2 | ReyeCounts => {
            let scene = match random_central_scene(seed) {
                Ok(s) => s,
                Err(e) => return Trial::Skip(e.to_string()),
            };
            let instance = || serde_json::to_value(scene.to_json()).expect("scene");
            let result = match theorem {
                Desargues => verify_desargues(&scene),
                GenDesargues => verify_generalized_desargues(&scene),
                Proof1 => verify_proof1_path(&scene),
                Proof2 => verify_proof2_path(&scene).and_then(|ok| {
                    let grid = Proof2Grid::build(&scene)?;
                    Ok(ok && grid.c_prime == main_construction_central(&scene)?.c)
                }),
                _ => reye_dual_counts(&scene).map(|c| c.as_tuple() == (16, 3, 12, 4)),
            };
            judge(result, instance)
        }
        Pappus | GenPappus => {
            let (a, b) = match random_pappus_triples(seed) {
                Ok(t) => t,
                Err(e) => return Trial::Skip(e.to_string()),
            };
            let instance = || json!({ "a": points_json(&[&a[0], &a[1], &a[2]]), "b": points_json(&[&b[0], &b[1], &b[2]]) });
            let result = if theorem == Pappus {
                pappus_line(&a, &b).map(|_| true)
            } else {
                generalized_pappus_center(&a, &b).and_then(|_| verify_pappus_reduction(&a, &b))
            };
            judge(result, instance)
        }
        Pascal | GenPascal | AnotherPascal => {
            let h = match random_conic_hexagon(seed) {
                Ok(h) => h,
                Err(e) => return Trial::Skip(e.to_string()),
            };
            let instance = || json!({ "hexagon": points_json(&h.iter().collect::<Vec<_>>()) });
            let result = match theorem {
                Pascal => pascal_line(&h).map(|_| true),
                GenPascal => generalized_pascal_center(&h).map(|_| true),
                _ => another_pascal_center(&h).and_then(|_| verify_another_pascal_step(&h)),
            };
            judge(result, instance)
        }
        GroupAxioms => group_axioms(seed),
        PresumEquivalence => presum_equivalence(index, seed),
        LemmaPseudo => lemma_pseudo(seed),
    }
}

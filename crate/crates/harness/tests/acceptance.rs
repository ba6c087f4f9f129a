//! One PASS/FAIL line per acceptance criterion. Runtime bounds are wall-clock
//! limits on the scenario runs of each criterion.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use homalg_harness::report::{Report, Status};
use homalg_harness::scenarios::{run_all, run_scenario, Overrides};

type Outcome = Result<(), String>;

fn run(id: &str) -> Result<Report, String> {
    run_scenario(id, Overrides::default()).map_err(|e| format!("{id}: {e}"))
}

fn status(r: &Report, id: &str) -> Result<Status, String> {
    r.claim(id)
        .map(|c| c.status)
        .ok_or_else(|| format!("{}: no claim {id}", r.scenario))
}

fn verified(r: &Report, ids: &[&str]) -> Outcome {
    for id in ids {
        if status(r, id)? != Status::Verified {
            let c = r.claim(id).expect("claim exists");
            return Err(format!("{}/{id}: expected {} computed {}", r.scenario, c.expected, c.computed));
        }
    }
    Ok(())
}

fn all_verified(r: &Report) -> Outcome {
    match r.claims.iter().find(|c| c.status == Status::Failed) {
        Some(c) => Err(format!("{}/{}: expected {} computed {}", r.scenario, c.id, c.expected, c.computed)),
        None => Ok(()),
    }
}

fn asserted_only(r: &Report, id: &str) -> Outcome {
    match status(r, id)? {
        Status::AssertedNotComputed => Ok(()),
        s => Err(format!("{}/{id} has status {}", r.scenario, s.as_str())),
    }
}

fn computed(r: &Report, id: &str) -> Result<String, String> {
    r.claim(id)
        .map(|c| c.computed.clone())
        .ok_or_else(|| format!("{}: no claim {id}", r.scenario))
}

fn criterion(n: usize, name: &str, limit_s: u64, f: impl FnOnce() -> Outcome) -> bool {
    let start = Instant::now();
    let outcome = f();
    let elapsed = start.elapsed();
    let outcome = outcome.and_then(|()| {
        if elapsed > Duration::from_secs(limit_s) {
            Err(format!("took {:.2}s, limit {limit_s}s", elapsed.as_secs_f64()))
        } else {
            Ok(())
        }
    });
    match &outcome {
        Ok(()) => println!("PASS criterion {n}: {name} ({:.2}s)", elapsed.as_secs_f64()),
        Err(e) => println!("FAIL criterion {n}: {name}: {e}"),
    }
    outcome.is_ok()
}

fn main() -> ExitCode {
    let results = [
        criterion(1, "Koszul counterexample p=2", 1, || {
            let r = run("koszul-counterexample-p2")?;
            verified(&r, &["witness-nonzero", "witness-image"])?;
            all_verified(&r)
        }),
        criterion(2, "Koszul counterexample p=3", 10, || {
            let r = run("koszul-counterexample-p3")?;
            verified(&r, &["witness-nonzero", "witness-image"])?;
            all_verified(&r)
        }),
        criterion(3, "Koszul complexes over Z are pure acyclic", 60, || {
            let a = run("koszul-pid-acyclic")?;
            let p = run("purity-probes")?;
            verified(&a, &["acyclic-k1", "acyclic-k2", "acyclic-k3", "acyclic-k4"])?;
            verified(&p, &["pure-k1", "pure-k2", "pure-k3", "pure-k4"])?;
            all_verified(&a)?;
            all_verified(&p)
        }),
        criterion(4, "Koszul homotopy identity", 10, || {
            let r = run("koszul-homotopy")?;
            verified(&r, &["identity-k1", "identity-k4", "contracts-k1", "contracts-k3"])?;
            all_verified(&r)
        }),
        criterion(5, "Tor of the main example", 30, || {
            let r = run("main-example-tor")?;
            verified(&r, &["resolution-exact", "H1", "H2", "H3", "H4"])?;
            for (id, want) in [("H1", "(Z/2)^2"), ("H2", "0"), ("H3", "(Z/2)^4"), ("H4", "0")] {
                let got = computed(&r, id)?;
                if got != want {
                    return Err(format!("{id} = {got}, want {want}"));
                }
            }
            all_verified(&r)
        }),
        criterion(6, "free Lie algebra over F2 has no CE H2, H3", 30, || {
            let r = run("free-f2-ce-vanishing")?;
            verified(&r, &["H2-weights-1..4", "H3-weights-1..4"])?;
            all_verified(&r)
        }),
        criterion(7, "Hopf formula agrees with CE H2", 30, || {
            let r = run("hopf-agreement")?;
            verified(&r, &["heisenberg-w3", "heisenberg-redundant-w3", "free-w4", "abelian-w2"])?;
            let h = computed(&r, "heisenberg-w3-value")?;
            if h != "Z^2" {
                return Err(format!("Heisenberg weight 3 = {h}"));
            }
            all_verified(&r)
        }),
        criterion(8, "structure of H^CE_{2,1} for the free Lie algebra mod 2", 30, || {
            let r = run("h21-main-example")?;
            verified(&r, &["epsilon-phi-zero", "coker-surjects-onto-g", "phi-homogeneous"])?;
            asserted_only(&r, "h3s-abstract-type")?;
            all_verified(&r)
        }),
        criterion(9, "second CE homology of F'(M) is nonzero", 10, || {
            let r = run("fprime-h2")?;
            verified(&r, &["ce-h2-weight2"])?;
            asserted_only(&r, "rt-h2")?;
            all_verified(&r)
        }),
        criterion(10, "third CE homology of F(M) is nonzero", 10, || {
            let r = run("koszul-counterexample-p3")?;
            verified(&r, &["kernel-dim-L3M-to-MxL2M", "ce-h3-weight3"])?;
            asserted_only(&r, "rs-h3")
        }),
        criterion(11, "PBW map is not injective", 10, || {
            let r = run("class2-pbw")?;
            verified(&r, &["kernel-nonzero", "kernel-contains-witness", "free-kernel"])?;
            all_verified(&r)
        }),
        criterion(12, "full-suite reports are byte-identical across runs", 120, || {
            let json = || -> Result<String, String> {
                let reports = run_all(Overrides::default()).map_err(|e| e.to_string())?;
                serde_json::to_string_pretty(&reports).map_err(|e| e.to_string())
            };
            let (a, b) = (json()?, json()?);
            if a == b {
                Ok(())
            } else {
                Err("reports differ".into())
            }
        }),
    ];
    let failed = results.iter().filter(|ok| !**ok).count();
    println!("{} of {} criteria passed", results.len() - failed, results.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

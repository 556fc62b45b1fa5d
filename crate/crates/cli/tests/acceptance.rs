//! End-to-end acceptance run. Prints one line per criterion and exits
//! non-zero if any criterion fails.

use std::process::Command;
use std::time::Instant;

use kostka_core::exactalg::CycRational;
use kostka_core::hall::hall_g;
use kostka_core::multisym::EngineConfig;
use kostka_core::partitions::part;
use kostka_core::verify::{run, Report, Suite};

struct Outcome {
    ok: bool,
    detail: String,
}

fn suites(runs: &[(Suite, u32, usize)]) -> Outcome {
    let mut detail = Vec::new();
    let mut ok = true;
    for &(suite, n, r) in runs {
        match run(suite, n, r, EngineConfig::default()) {
            Ok(rep) => {
                ok &= rep.passed();
                detail.push(summary(&rep));
            }
            Err(e) => {
                ok = false;
                detail.push(format!("{suite} n<={n} r={r}: error {e}"));
            }
        }
    }
    Outcome { ok, detail: detail.join("; ") }
}

fn summary(rep: &Report) -> String {
    let mut s = format!("{} n<={} r={}: {}/{} ok", rep.identity, rep.n, rep.r, rep.checked - rep.failed, rep.checked);
    if let Some(w) = &rep.witness {
        s.push_str(&format!(" first failure {w}"));
    }
    for note in &rep.notes {
        s.push_str(&format!(" ({note})"));
    }
    s
}

fn each_level(suite: Suite, n: u32) -> Vec<(Suite, u32, usize)> {
    (1..=3).map(|r| (suite, n, r)).collect()
}

fn hall_bridge() -> Outcome {
    let mut out = suites(&each_level(Suite::HallFlag, 3));
    let g = hall_g(&[part(&[1]), part(&[1])], &part(&[1, 1])).expect("hall polynomial");
    let at_two = g.eval(&CycRational::from_int(1, 2));
    let anchor = at_two == CycRational::from_int(1, 3);
    out.ok &= anchor;
    out.detail.push_str(&format!("; g^(1,1)_(1),(1)(2) = {at_two}"));
    out
}

fn determinism() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_kostka");
    let commands: [&[&str]; 5] = [
        &["kostka", "--n", "3", "--r", "2", "--sign", "-"],
        &["kostka", "--n", "3", "--r", "3", "--sign", "+", "--format", "latex"],
        &["kostka", "--n", "2", "--r", "2", "--format", "csv", "--order", "lex-c-reversed"],
        &["verify", "thm314", "--n", "3", "--r", "2"],
        &["tableaux", "--shape", "[[2,1],[1]]", "--weight", "[2,1,1]", "--format", "text"],
    ];
    let mut ok = true;
    let mut detail = Vec::new();
    for args in commands {
        let runs: Vec<_> = (0..3)
            .map(|_| Command::new(bin).args(args).output().expect("run binary"))
            .collect();
        let same = runs.iter().all(|o| o.status.success() && o.stdout == runs[0].stdout && !o.stdout.is_empty());
        ok &= same;
        detail.push(format!("{}: {}", args.join(" "), if same { "identical" } else { "DIFFERENT" }));
    }
    Outcome { ok, detail: detail.join("; ") }
}

fn main() {
    let criteria: Vec<(&str, Box<dyn Fn() -> Outcome>)> = vec![
        ("classical calibration, charge = orthogonalization, n<=6", Box::new(|| suites(&[(Suite::ChargeLs, 6, 1)]))),
        ("triangularity and degree of K_{lambda,mu}(t), n<=6", Box::new(|| suites(&[(Suite::KostkaDegree, 6, 1)]))),
        ("r=2: P- = P+, integral monic K of degree a(mu)-a(lambda), n<=4", Box::new(|| suites(&[(Suite::R2Polynomial, 4, 2)]))),
        ("biorthogonality and realness, n<=4, r<=3", Box::new(|| suites(&each_level(Suite::Prop13, 4)))),
        ("K- on (-,...,-,xi) equals the charge sum, n<=4, r<=3", Box::new(|| suites(&each_level(Suite::Thm314, 4)))),
        ("K-(1) counts semistandard tableaux, n<=4, r<=3", Box::new(|| suites(&each_level(Suite::Cor315, 4)))),
        ("lattice fillings count LR coefficients, n<=5, r<=3", Box::new(|| suites(&each_level(Suite::Cor312, 5)))),
        ("Hall polynomials count stable flags over F_2, F_3, n<=3, r<=3", Box::new(hall_bridge)),
        (
            "f-form = LR form = K-, and h = t^{a(mu)-a(nu)} g(t^-r), n<=4, r<=3",
            Box::new(|| {
                let mut runs = each_level(Suite::Lemma39, 4);
                runs.extend(each_level(Suite::Prop317, 4));
                suites(&runs)
            }),
        ),
        (
            "IC candidates are polynomials in t^r, non-negative for r=1",
            Box::new(|| suites(&[(Suite::IcPositivity, 5, 1), (Suite::IcPositivity, 4, 2), (Suite::IcPositivity, 4, 3)])),
        ),
        ("repeated CLI runs are byte-identical", Box::new(determinism)),
    ];
    let mut failures = 0;
    for (k, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let out = check();
        let secs = start.elapsed().as_secs_f64();
        if !out.ok {
            failures += 1;
        }
        println!("{} {:>2}. {name} [{secs:.1}s]", if out.ok { "PASS" } else { "FAIL" }, k + 1);
        println!("        {}", out.detail);
    }
    println!("\n{} of {} criteria passed", criteria.len() - failures, criteria.len());
    if failures > 0 {
        std::process::exit(1);
    }
}

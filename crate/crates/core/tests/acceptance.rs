mod common;

use common::{alg_num, one_form};
use girdled::verify::{Check, Report};
use girdled::{run_suite, AlgNum, Fixtures, Status, Suite};
use proptest::test_runner::{Config, TestCaseError, TestRunner};

struct Outcome {
    number: usize,
    title: &'static str,
    failures: Vec<String>,
}

impl Outcome {
    fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Failing ids among checks with the given prefixes, plus a note when the
/// number of matching checks differs from `expected`.
fn gather(report: &Report, prefixes: &[&str], expected: Option<usize>) -> Vec<String> {
    let selected: Vec<&Check> = report
        .checks
        .iter()
        .filter(|c| prefixes.iter().any(|p| c.id.starts_with(p)))
        .collect();
    let mut out: Vec<String> = selected
        .iter()
        .filter(|c| c.status != Status::Pass)
        .map(|c| format!("{} {}", c.id, c.witness))
        .collect();
    if selected.is_empty() {
        out.push(format!("no checks under {prefixes:?}"));
    }
    if let Some(n) = expected {
        if selected.len() != n {
            out.push(format!("expected {n} checks under {prefixes:?}, found {}", selected.len()));
        }
    }
    out
}

fn property_failures() -> Vec<String> {
    let mut runner = TestRunner::new_with_rng(
        Config {
            cases: 64,
            failure_persistence: None,
            ..Config::default()
        },
        proptest::test_runner::TestRng::deterministic_rng(proptest::test_runner::RngAlgorithm::ChaCha),
    );
    let mut out = Vec::new();
    let field = runner.run(&(alg_num(), alg_num(), alg_num()), |(a, b, c)| {
        let ok = &a + &b == &b + &a
            && &a * &b == &b * &a
            && &(&a * &b) * &c == &a * &(&b * &c)
            && &a * &(&b + &c) == &a * &b + &a * &c
            && (a.is_zero() || (&a * &a.inv().unwrap()) == AlgNum::one());
        if ok {
            Ok(())
        } else {
            Err(TestCaseError::fail("field axiom"))
        }
    });
    if let Err(e) = field {
        out.push(format!("field axioms: {e}"));
    }
    let wedge = runner.run(&(one_form(), one_form()), |(a, b)| {
        if a.wedge(&a).is_zero() && a.wedge(&b) == -&b.wedge(&a) {
            Ok(())
        } else {
            Err(TestCaseError::fail("wedge"))
        }
    });
    if let Err(e) = wedge {
        out.push(format!("wedge antisymmetry: {e}"));
    }
    out
}

#[test]
fn acceptance() {
    let fixtures = Fixtures::embedded().expect("embedded fixtures parse");
    let report = run_suite(Suite::All, &fixtures).expect("suites run");

    let mut c9 = gather(
        &report,
        &[
            "algebra.field-axioms",
            "algebra.maurer-cartan.d-squared",
            "structeq.involution",
            "algebra.pairing-consistency",
        ],
        Some(4),
    );
    c9.extend(property_failures());

    let outcomes = vec![
        Outcome {
            number: 1,
            title: "Killing matrix on the f-basis (100 entries)",
            failures: gather(&report, &["killing.entry."], Some(100)),
        },
        Outcome {
            number: 2,
            title: "grading dims, 25 inclusions, Jacobi on 120 triples",
            failures: gather(
                &report,
                &["algebra.grading.dims", "algebra.grading.inclusion.", "algebra.jacobi"],
                Some(27),
            ),
        },
        Outcome {
            number: 3,
            title: "codifferential kernels (0,0,6), degree-2 system, reduced degree-3 relations",
            failures: gather(
                &report,
                &["kernels.dim.", "kernels.system.2", "kernels.reduced.3", "kernels.linear-forms."],
                Some(9),
            ),
        },
        Outcome {
            number: 4,
            title: "torsion complement and witnesses",
            failures: gather(&report, &["torsion."], Some(6)),
        },
        Outcome {
            number: 5,
            title: "final curvature equalities on the degree-3 kernel",
            failures: gather(
                &report,
                &["kernels.curvature-relation.", "kernels.conversion."],
                Some(11),
            ),
        },
        Outcome {
            number: 6,
            title: "structure equations match fixture; every constraint removal breaks it",
            failures: gather(
                &report,
                &["structeq.fixture-diff", "structeq.free-symbols", "structeq.negative-control."],
                None,
            ),
        },
        Outcome {
            number: 7,
            title: "frame comparison residuals vanish; negative control fires",
            failures: gather(&report, &["iz."], Some(3)),
        },
        Outcome {
            number: 8,
            title: "model membership, Levi kernel dimension 1, 60 tangency checks",
            failures: {
                let mut f = gather(&report, &["model.membership."], Some(3));
                f.extend(gather(&report, &["model.tangency."], Some(60)));
                f.extend(gather(&report, &["model.levi."], Some(5)));
                f
            },
        },
        Outcome {
            number: 9,
            title: "field axioms, d∘d = 0, reality involution, pairing consistency",
            failures: c9,
        },
    ];

    for o in &outcomes {
        println!(
            "criterion {}: {} - {}",
            o.number,
            if o.passed() { "PASS" } else { "FAIL" },
            o.title
        );
        for f in &o.failures {
            println!("    {f}");
        }
    }
    let failed: Vec<usize> = outcomes.iter().filter(|o| !o.passed()).map(|o| o.number).collect();
    assert!(failed.is_empty(), "failing criteria: {failed:?}");
}

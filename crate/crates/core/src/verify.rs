//! Verification suites and their reports.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::Serialize;
use serde_json::{json, Value};

use crate::cohomology::{
    codifferential_kernel, conversion_checks, degree2_system_check, degree3_reduced_check, hat_duality,
    linear_form_discrepancies, system_check, torsion_complement,
};
use crate::error::{Error, Result};
use crate::fixtures::Fixtures;
use crate::liealg::{
    basis, grading_decomposition, jacobi_check, killing_matrix, membership_so32, BasisDoc, BasisKind, QuadraticForm,
    DIM,
};
use crate::model::{
    infinitesimal_action, levi_form_tube, levi_kernel_distribution_check, membership_model, model_samples,
    pythagorean_samples, ProjectivePoint, TubePoint,
};
use crate::numfield::AlgNum;
use crate::structeq::constraints::printed_symbols;
use crate::structeq::equations::{d_squared_failures, free_symbol_sets, involution_failures, negative_control};
use crate::structeq::{
    diff_against_fixture, fixture_equations, generate_structure_equations, iz_negative_control,
    verify_iz_change_of_frame, ConstraintTable,
};

pub const SCHEMA_VERSION: u32 = 1;

/// Shifting degrees and the kernel dimensions the reference claims for them.
pub const EXPECTED_KERNEL_DIMS: [(i32, usize); 3] = [(1, 0), (2, 0), (3, 6)];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub id: String,
    pub locus: String,
    pub status: Status,
    pub witness: Value,
}

fn check(id: impl Into<String>, locus: &str, pass: bool, witness: Value) -> Check {
    Check {
        id: id.into(),
        locus: locus.to_string(),
        status: if pass { Status::Pass } else { Status::Fail },
        witness,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Algebra,
    Killing,
    Kernels,
    Torsion,
    StructureEquations,
    IzComparison,
    Model,
    All,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Algebra,
        Suite::Killing,
        Suite::Kernels,
        Suite::Torsion,
        Suite::StructureEquations,
        Suite::IzComparison,
        Suite::Model,
        Suite::All,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Algebra => "algebra",
            Suite::Killing => "killing",
            Suite::Kernels => "kernels",
            Suite::Torsion => "torsion",
            Suite::StructureEquations => "structure-equations",
            Suite::IzComparison => "iz-comparison",
            Suite::Model => "model",
            Suite::All => "all",
        }
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::UnknownSuite(s.to_string()))
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skip: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct Timing {
    pub elapsed_ms: u128,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub schema: u32,
    pub suite: String,
    pub version: String,
    pub summary: Summary,
    pub checks: Vec<Check>,
    pub timing: Timing,
}

impl Report {
    pub fn all_pass(&self) -> bool {
        self.summary.fail == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn get(&self, id: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.id == id)
    }

    /// Checks whose id starts with `prefix`.
    pub fn with_prefix<'a>(&'a self, prefix: &'a str) -> impl Iterator<Item = &'a Check> {
        self.checks.iter().filter(move |c| c.id.starts_with(prefix))
    }
}

pub fn run_suite(suite: Suite, fixtures: &Fixtures) -> Result<Report> {
    let start = Instant::now();
    let mut checks = match suite {
        Suite::Algebra => algebra()?,
        Suite::Killing => killing(fixtures)?,
        Suite::Kernels => kernels(fixtures)?,
        Suite::Torsion => torsion(fixtures)?,
        Suite::StructureEquations => structure_equations(fixtures)?,
        Suite::IzComparison => iz_comparison(fixtures)?,
        Suite::Model => model()?,
        Suite::All => {
            let mut all = Vec::new();
            for s in &Suite::ALL[..7] {
                all.extend(run_suite(*s, fixtures)?.checks);
            }
            all
        }
    };
    checks.sort_by(|a, b| a.id.cmp(&b.id));
    let count = |s: Status| checks.iter().filter(|c| c.status == s).count();
    let summary = Summary {
        pass: count(Status::Pass),
        fail: count(Status::Fail),
        skip: count(Status::Skip),
    };
    Ok(Report {
        schema: SCHEMA_VERSION,
        suite: suite.name().to_string(),
        version: env!("CARGO_PKG_VERSION").to_string(),
        summary,
        checks,
        timing: Timing {
            elapsed_ms: start.elapsed().as_millis(),
        },
    })
}

fn field_sample() -> Vec<AlgNum> {
    ["0", "1", "-3/7", "i*(1/2)", "1+r2", "r3-2*r6", "1/6*r6+i*(r2)", "-1/3*r3+i*(5-r6)"]
        .iter()
        .map(|s| s.parse().expect("valid literal"))
        .collect()
}

fn field_axioms() -> (usize, usize) {
    let xs = field_sample();
    let mut count = 0;
    let mut bad = 0;
    for a in &xs {
        for b in &xs {
            count += 3;
            bad += usize::from(a + b != b + a) + usize::from(a * b != b * a);
            if !b.is_zero() {
                let q = a.checked_div(b).expect("nonzero divisor");
                bad += usize::from(&q * b != *a);
            }
            for c in &xs {
                count += 3;
                bad += usize::from((a + b) + c.clone() != a + &(b + c))
                    + usize::from((a * b) * c.clone() != a * &(b * c))
                    + usize::from(a * &(b + c) != a * b + a * c);
            }
        }
    }
    (count, bad)
}

fn algebra() -> Result<Vec<Check>> {
    let mut out = Vec::new();
    let q = QuadraticForm::cal_i();
    for kind in BasisKind::ALL {
        let b = basis(kind);
        let members = b.elements().iter().all(|x| membership_so32(x.matrix(), &q));
        let coords_ok = b.elements().iter().enumerate().all(|(k, x)| {
            b.coords(x)
                .map(|v| v.iter().enumerate().all(|(j, c)| *c == AlgNum::from_int(i64::from(j == k))))
                .unwrap_or(false)
        });
        out.push(check(
            format!("algebra.basis.{}", kind.name()),
            "bases of so(3,2)",
            members && coords_ok && b.len() == DIM,
            json!({"elements": b.len(), "in_so32": members, "independent": coords_ok}),
        ));
        let doc = BasisDoc::from_basis(b);
        let text = serde_json::to_string(&doc)?;
        let back: BasisDoc = serde_json::from_str(&text)?;
        let round = back.clone().into_basis().map(|x| BasisDoc::from_basis(&x) == doc).unwrap_or(false);
        out.push(check(
            format!("algebra.basis.{}.round-trip", kind.name()),
            "basis serialization",
            round,
            json!({"bytes": text.len()}),
        ));
    }

    let cr = basis(BasisKind::Cr);
    let g = grading_decomposition(cr)?;
    out.push(check(
        "algebra.grading.dims",
        "grading by ad(Z)",
        g.dims == [1, 2, 4, 2, 1],
        json!({"dims": g.dims, "degrees": g.degrees}),
    ));
    for (i, j, holds) in &g.inclusions {
        out.push(check(
            format!("algebra.grading.inclusion.{:+}.{:+}", i, j),
            "graded brackets",
            *holds,
            json!({"i": i, "j": j}),
        ));
    }
    out.push(check(
        "algebra.grading.h-subalgebra",
        "isotropy subalgebra",
        g.h_is_subalgebra,
        json!(g.h),
    ));
    let (count, failures) = jacobi_check(basis(BasisKind::Standard));
    out.push(check(
        "algebra.jacobi",
        "Jacobi identity on basis triples",
        count == 120 && failures.is_empty(),
        json!({"triples": count, "failures": failures}),
    ));
    let sc = cr.structure_constants()?;
    let half_i = AlgNum::frac(1, 2) * AlgNum::i();
    out.push(check(
        "algebra.cr.bracket-m1",
        "[e_{-1(10)}, e_{-1(01)}] = (i/2) e_{-2}",
        *sc.get(0, 1, 2) == half_i,
        json!({"value": sc.get(0, 1, 2)}),
    ));
    let hd = hat_duality()?;
    let bad = hd.pairing_consistency()?;
    out.push(check(
        "algebra.pairing-consistency",
        "f^a = eps_a <hat f_a, .>",
        bad.is_empty(),
        json!({"hat": hd.hat.map(|h| h + 1), "sign": hd.sign, "failures": bad}),
    ));
    let dd = d_squared_failures()?;
    out.push(check(
        "algebra.maurer-cartan.d-squared",
        "d(d(g)) = 0 on the flat coframe",
        dd.is_empty(),
        json!({"failures": dd}),
    ));
    let (count, bad) = field_axioms();
    out.push(check(
        "algebra.field-axioms",
        "field axioms on a fixed sample",
        bad == 0,
        json!({"identities": count, "failures": bad}),
    ));
    Ok(out)
}

fn killing(fx: &Fixtures) -> Result<Vec<Check>> {
    let f = basis(BasisKind::F);
    let k = killing_matrix(f)?;
    let printed = &fx.appendix.killing_matrix_f;
    let mut out = Vec::new();
    for r in 0..DIM {
        for c in 0..DIM {
            let p = printed.get(r).and_then(|row| row.get(c)).copied();
            let ok = p.map(|p| k[(r, c)] == AlgNum::from_int(p)).unwrap_or(false);
            out.push(check(
                format!("killing.entry.{:02}.{:02}", r + 1, c + 1),
                "Killing matrix on the f-basis",
                ok,
                json!({"computed": k[(r, c)], "printed": p}),
            ));
        }
    }
    let three = AlgNum::from_int(3);
    let mut bad = Vec::new();
    for (r, x) in f.elements().iter().enumerate() {
        for (c, y) in f.elements().iter().enumerate() {
            if k[(r, c)] != &three * &x.matrix().mul(y.matrix()).trace() {
                bad.push((r + 1, c + 1));
            }
        }
    }
    out.push(check(
        "killing.three-trace",
        "trace(ad x ad y) = 3 trace(xy)",
        bad.is_empty(),
        json!({"failures": bad}),
    ));
    Ok(out)
}

fn kernels(fx: &Fixtures) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for (d, expected) in EXPECTED_KERNEL_DIMS {
        let k = codifferential_kernel(d)?;
        out.push(check(
            format!("kernels.dim.{d}"),
            "codifferential kernel dimension",
            k.dimension == expected,
            json!({
                "degree": d,
                "expected": expected,
                "computed": k.dimension,
                "rank": k.rank,
                "system": [k.system_rows, k.system_cols],
                "components": k.components,
                "basis": k.basis,
            }),
        ));
        let disc = linear_form_discrepancies(d, &fx.appendix)?;
        let recorded: Vec<(String, String, AlgNum, AlgNum)> = fx
            .appendix
            .linear_forms(d)
            .map(|g| {
                g.errata
                    .iter()
                    .map(|e| (e.tau.clone(), e.a.clone(), e.printed.clone(), e.computed.clone()))
                    .collect()
            })
            .unwrap_or_default();
        let found: Vec<(String, String, AlgNum, AlgNum)> = disc
            .iter()
            .map(|e| (e.tau.clone(), e.a.clone(), e.printed.clone(), e.computed.clone()))
            .collect();
        out.push(check(
            format!("kernels.linear-forms.{d}"),
            "pairing coefficients against the printed forms",
            found == recorded,
            json!({"discrepancies": disc, "recorded_errata": recorded.len()}),
        ));
    }
    let s2 = degree2_system_check(&fx.appendix)?;
    out.push(check(
        "kernels.system.2",
        "degree-2 system assembled from scratch",
        s2.residual_is_zero(),
        serde_json::to_value(&s2)?,
    ));
    let s3 = system_check(3, &fx.appendix.degree3_system)?;
    out.push(check(
        "kernels.system.3",
        "degree-3 system assembled from scratch",
        s3.residual_is_zero(),
        serde_json::to_value(&s3)?,
    ));
    let red = degree3_reduced_check(&fx.appendix)?;
    out.push(check(
        "kernels.reduced.3",
        "reduced degree-3 relations",
        red.same_space,
        serde_json::to_value(&red)?,
    ));
    let k3 = codifferential_kernel(3)?;
    let idx = |l: &str| k3.components.iter().position(|c| c == l);
    let (i8, i6) = (idx("8_23"), idx("6_12"));
    let relation = match (i8, i6) {
        (Some(a), Some(b)) => k3
            .basis
            .iter()
            .all(|v| (&v[a] + &(AlgNum::sqrt2() * v[b].clone())).is_zero()),
        _ => false,
    };
    out.push(check(
        "kernels.reduced.3.tau8-tau6",
        "tau^8_23 = -sqrt2 tau^6_12 on the kernel",
        relation,
        json!({}),
    ));
    for c in conversion_checks(&fx.appendix)? {
        out.push(check(
            format!("kernels.conversion.{}", c.component),
            "CR conversion formulas",
            c.holds(),
            serde_json::to_value(&c)?,
        ));
    }
    let comps = k3.cr_components.clone().unwrap_or_default();
    let names = ["c1", "c2", "conj-c1", "conj-c2", "r1-from-r0", "t-from-r0"];
    for (n, name) in names.iter().enumerate() {
        let values: Vec<AlgNum> = comps.iter().map(|c| c.residuals()[n].clone()).collect();
        out.push(check(
            format!("kernels.curvature-relation.{name}"),
            "final curvature equalities on the degree-3 kernel",
            !values.is_empty() && values.iter().all(AlgNum::is_zero),
            json!({"residuals": values}),
        ));
    }
    Ok(out)
}

fn torsion(fx: &Fixtures) -> Result<Vec<Check>> {
    let t = torsion_complement()?;
    let mut out = Vec::new();
    for w in &fx.appendix.torsion_witnesses {
        let got = t.component(w.generator, &w.component).cloned();
        out.push(check(
            format!("torsion.witness.B{}.{}", w.generator, w.component),
            "components of the differential of l1 generators",
            got.as_ref() == Some(&w.value),
            json!({"expected": w.value, "computed": got}),
        ));
    }
    out.push(check(
        "torsion.generators",
        "l1 generators real and independent",
        t.generators_real && t.generators_rank == 8,
        json!({"real": t.generators_real, "rank": t.generators_rank}),
    ));
    out.push(check(
        "torsion.complement",
        "orthogonal complement of the image of l1",
        t.complement_dimension == 0,
        json!({"image_rank": t.image_rank, "complement_dimension": t.complement_dimension, "components": t.components}),
    ));
    Ok(out)
}

fn structure_equations(fx: &Fixtures) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    let table = ConstraintTable::from_fixture(&fx.constraints)?;
    let eqs = generate_structure_equations(&table)?;
    let printed = fixture_equations(&fx.structure_equations)?;
    let diffs = diff_against_fixture(&eqs, &printed);
    out.push(check(
        "structeq.fixture-diff",
        "generated structure equations against the printed list",
        diffs.is_empty(),
        serde_json::to_value(&diffs)?,
    ));
    let (g, f) = free_symbol_sets(&eqs, &printed);
    out.push(check(
        "structeq.free-symbols",
        "surviving symbols equal the printed right-hand sides",
        g == f,
        json!({"generated": g.len(), "printed": f.len(),
               "missing": f.difference(&g).collect::<Vec<_>>(), "extra": g.difference(&f).collect::<Vec<_>>()}),
    ));
    let counts: Vec<usize> = eqs.iter().map(|e| e.rhs.len()).collect();
    out.push(check(
        "structeq.rhs-counts",
        "number of right-hand terms per generator",
        counts == [0, 2, 2, 6, 6, 7, 7, 10, 10, 10],
        json!(counts),
    ));
    let inv = involution_failures(&eqs);
    out.push(check(
        "structeq.involution",
        "reality involution maps equations to conjugate equations",
        inv.is_empty(),
        json!({"failures": inv}),
    ));
    let neg = negative_control(&table, &printed)?;
    for (label, n) in &neg {
        out.push(check(
            format!("structeq.negative-control.{label}"),
            "removing one constraint breaks the match",
            *n > 0,
            json!({"nonempty_diffs": n}),
        ));
    }
    let names = printed_symbols(&fx.constraints)?;
    let listed: std::collections::BTreeSet<_> = table
        .vanishing()
        .filter(|e| !e.implied_by_conjugation)
        .map(|e| e.symbol)
        .collect();
    out.push(check(
        "structeq.constraint-table.names",
        "constraint table lists the printed components",
        names == listed,
        json!({"printed": names.len(), "emitted": listed.len(), "closed": table.vanishing().count()}),
    ));
    let r1 = table.determined_symbols().into_iter().next();
    let inconsistent = match r1 {
        Some(s) => matches!(table.with_vanishing(s, "probe"), Err(Error::InconsistentConstraint(_))),
        None => false,
    };
    out.push(check(
        "structeq.inconsistent-constraint",
        "zeroing a related symbol is rejected",
        inconsistent,
        json!({}),
    ));
    Ok(out)
}

fn iz_comparison(fx: &Fixtures) -> Result<Vec<Check>> {
    let table = ConstraintTable::from_fixture(&fx.constraints)?;
    let eqs = generate_structure_equations(&table)?;
    let r = verify_iz_change_of_frame(&eqs)?;
    let n = iz_negative_control(&eqs)?;
    Ok(vec![
        check(
            "iz.residual.omega",
            "d omega identity",
            r.omega.is_zero(),
            serde_json::to_value(&r.omega)?,
        ),
        check(
            "iz.residual.omega1",
            "d omega^1 identity",
            r.omega1.is_zero(),
            serde_json::to_value(&r.omega1)?,
        ),
        check(
            "iz.negative-control",
            "torsion terms removed",
            !n.omega1.is_zero(),
            json!({"omega_zero": n.omega.is_zero(), "omega1_terms": n.omega1.terms().count()}),
        ),
    ])
}

fn model() -> Result<Vec<Check>> {
    let mut out = Vec::new();
    let (i, n) = (AlgNum::i, AlgNum::from_int);
    let pts: [(&str, Vec<AlgNum>, bool); 3] = [
        ("on", vec![n(1), i(), n(0), n(1), -i()], true),
        ("off-hermitian", vec![n(1), n(0), n(0), n(0), n(0)], false),
        ("off-orientation", vec![n(1), i(), n(0), n(1), i()], false),
    ];
    for (name, c, expected) in pts {
        let p = ProjectivePoint::new(c, crate::liealg::FormTag::I32)?;
        let m = membership_model(&p);
        let chart = membership_model(&p.to_cal_i()) == m;
        out.push(check(
            format!("model.membership.{name}"),
            "membership in M_o",
            m.on_model == expected && chart,
            serde_json::to_value(&m)?,
        ));
    }
    let std = basis(BasisKind::Standard);
    for (k, p) in model_samples().iter().enumerate() {
        for (j, x) in std.elements().iter().enumerate() {
            let r = infinitesimal_action(x.matrix(), p)?;
            out.push(check(
                format!("model.tangency.p{}.x{:02}.bilinear", k + 1, j + 1),
                "infinitesimal so(3,2) action",
                r.bilinear.is_zero(),
                json!({"value": r.bilinear}),
            ));
            out.push(check(
                format!("model.tangency.p{}.x{:02}.hermitian", k + 1, j + 1),
                "infinitesimal so(3,2) action",
                r.hermitian.is_zero(),
                json!({"value": r.hermitian}),
            ));
        }
    }
    let report = levi_kernel_distribution_check(&pythagorean_samples());
    for p in &report.points {
        let x = p.point.real_parts();
        out.push(check(
            format!("model.levi.{}-{}-{}", x[0], x[1], x[2]),
            "Levi kernel on the tube",
            p.kernel_dimension == Some(1) && p.hermitian == Some(true) && p.radial_kernel == Some(true),
            serde_json::to_value(p)?,
        ));
    }
    let imag = TubePoint::new(AlgNum::one() + AlgNum::i(), AlgNum::frac(-5, 2) * AlgNum::i(), AlgNum::one());
    let dim = levi_form_tube(&imag).map(|l| l.kernel_dimension).ok();
    out.push(check(
        "model.levi.imaginary-parts",
        "Levi kernel independent of imaginary parts",
        dim == Some(1),
        json!({"kernel_dimension": dim}),
    ));
    let apex = levi_form_tube(&TubePoint::real(0, 0, 0));
    out.push(check(
        "model.levi.apex",
        "apex is rejected",
        matches!(apex, Err(Error::Apex)),
        json!({"error": apex.err().map(|e| e.to_string())}),
    ));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!(matches!("nope".parse::<Suite>(), Err(Error::UnknownSuite(_))));
    }

    #[test]
    fn ids_are_unique_and_sorted() {
        let r = run_suite(Suite::Model, &Fixtures::embedded().unwrap()).unwrap();
        let ids: Vec<&String> = r.checks.iter().map(|c| &c.id).collect();
        let mut sorted = ids.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(ids, sorted);
    }
}

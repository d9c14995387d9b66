//! Acceptance suite: every criterion runs at its stated tolerance (exact,
//! zero tolerance unless noted) and prints one pass/fail line.

use std::time::{Duration, Instant};


use webcalc_core::ak::{self, AkConfig};
use webcalc_core::rep::coil::{essential_circle_value, predicted_circle_value, Side};
use webcalc_core::rep::gens::{self, CrossKind};
use webcalc_core::rep::LeviDatum;
use webcalc_core::scalar::{quantum_binomial, FieldElem};
use webcalc_core::suites::{compositions, run_suite, Bounds};
use webcalc_core::web::ast::WebTerm;
use webcalc_core::web::eval::{evaluate, hopf_tensor, skein_tensor, EvalMode};
use webcalc_core::rep::coil::Direction;

struct Criterion {
    name: &'static str,
    budget: Duration,
}

impl Criterion {
    fn finish(self, start: Instant, pass: bool, detail: String) {
        let elapsed = start.elapsed();
        println!(
            "criterion {:<28} {}  ({:.1}s, budget {:.0}s)",
            self.name,
            if pass { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64(),
            self.budget.as_secs_f64(),
        );
        assert!(pass, "criterion {} failed: {detail}", self.name);
        assert!(
            elapsed <= self.budget,
            "criterion {} overran its budget: {elapsed:?}",
            self.name
        );
    }
}

/// Criterion 1: closed planar k-loop, digon scalar, Reidemeister-I closure
/// scalar, and the skein difference; exact for all n <= 4.
#[test]
fn criterion_1_scalar_anchors() {
    let c = Criterion {
        name: "1 scalar anchors",
        budget: Duration::from_secs(60),
    };
    let start = Instant::now();
    let mut detail = String::new();
    let mut pass = true;
    for n in 1..=4u8 {
        let ctx = LeviDatum::full(n);
        // loop value [n choose k]
        for k in 1..=n as u32 {
            let val = gens::cap_r(&ctx, k)
                .compose(&gens::cup_l(&ctx, k))
                .unwrap()
                .get(0, 0);
            if val != quantum_binomial(n as i64, k) {
                pass = false;
                detail = format!("loop n={n} k={k}: {val}");
            }
        }
        // digon scalar [k+l choose k]
        for k in 0..=n as u32 {
            for l in 0..=(n as u32 - k) {
                let digon = gens::merge(&ctx, k, l)
                    .compose(&gens::split(&ctx, k, l))
                    .unwrap();
                let expect = gens::identity(&ctx, &[(k + l) as i32])
                    .scale(&quantum_binomial((k + l) as i64, k));
                if !digon.equals(&expect) {
                    pass = false;
                    detail = format!("digon n={n} k={k} l={l}");
                }
            }
        }
        // Reidemeister-I closure scalar v^{k(-k+n+1)}
        for k in 1..=n as u32 {
            let ki = k as i32;
            let curl = gens::embed(&ctx, &[ki], &gens::cap_r(&ctx, k), &[])
                .compose(
                    &gens::embed(&ctx, &[], &gens::thick_crossing(&ctx, k, k, CrossKind::Over), &[-ki])
                        .compose(&gens::embed(&ctx, &[ki], &gens::cup_l(&ctx, k), &[]))
                        .unwrap(),
                )
                .unwrap();
            let e = k as i64 * (-(k as i64) + n as i64 + 1);
            let expect = gens::identity(&ctx, &[ki]).scale(&FieldElem::v(e as i32));
            if !curl.equals(&expect) {
                pass = false;
                detail = format!("RM1 n={n} k={k}");
            }
        }
        // skein difference (q - q^{-1}) id
        let over = gens::thin_crossing(&ctx, CrossKind::Over);
        let under = gens::thin_crossing(&ctx, CrossKind::Under);
        let diff = over.sub_mat(&under).unwrap();
        let expect =
            gens::identity(&ctx, &[1, 1]).scale(&(&FieldElem::v(1) - &FieldElem::v(-1)));
        if !diff.equals(&expect) {
            pass = false;
            detail = format!("skein n={n}");
        }
    }
    c.finish(start, pass, detail);
}

/// Criterion 2: essential circles evaluate to the predicted elementary
/// symmetric polynomials for every composition of n <= 4, both sides, with
/// the d = 1 closed form reproduced exactly.
#[test]
fn criterion_2_circle_evaluation() {
    let c = Criterion {
        name: "2 circle evaluation",
        budget: Duration::from_secs(120),
    };
    let start = Instant::now();
    let mut pass = true;
    let mut detail = String::new();
    for n in 1..=4u8 {
        for comp in compositions(n) {
            let ctx = LeviDatum::new(n, comp.clone()).unwrap();
            for k in 0..=n as u32 {
                for side in [Side::Left, Side::Right] {
                    let got = essential_circle_value(&ctx, k, side).unwrap();
                    let expect = predicted_circle_value(&ctx, k, side);
                    if got != expect {
                        pass = false;
                        detail = format!("n={n} comp={comp:?} k={k} side={side:?}");
                    }
                }
            }
        }
        // d = 1 closed form: v^{-+kn} [n choose k] u_1^{+-k}
        let ctx = LeviDatum::full(n);
        for k in 0..=n as u32 {
            let left = essential_circle_value(&ctx, k, Side::Left).unwrap();
            let expect = FieldElem::v(-(k as i32) * n as i32)
                * quantum_binomial(n as i64, k)
                * FieldElem::u(1, k as i32);
            if left != expect {
                pass = false;
                detail = format!("closed form left n={n} k={k}");
            }
            let right = essential_circle_value(&ctx, k, Side::Right).unwrap();
            let expect = FieldElem::v(k as i32 * n as i32)
                * quantum_binomial(n as i64, k)
                * FieldElem::u(1, -(k as i32));
            if right != expect {
                pass = false;
                detail = format!("closed form right n={n} k={k}");
            }
        }
    }
    c.finish(start, pass, detail);
}

/// Criterion 3: the defining and derived relation suites pass exactly at the
/// default bounds.
#[test]
fn criterion_3_relation_suites() {
    let c = Criterion {
        name: "3 relation suites",
        budget: Duration::from_secs(600),
    };
    let start = Instant::now();
    let mut pass = true;
    let mut detail = String::new();
    for name in [
        "planar_relations",
        "derived_planar",
        "annular_relations",
        "proof_lemmas",
    ] {
        let report = run_suite(name, &Bounds::default(), 0).unwrap();
        if !report.pass {
            pass = false;
            let fails: Vec<String> = report
                .instances
                .iter()
                .filter(|i| i.status != "pass")
                .map(|i| format!("{} {}", i.instance, i.params))
                .collect();
            detail = format!("{name}: {fails:?}");
        }
    }
    c.finish(start, pass, detail);
}

/// Criterion 4: planar generator images commute with the full quantum group,
/// coil/Levi-crossing/projector images with the Levi action, and some coil
/// breaks full equivariance whenever d >= 2.
#[test]
fn criterion_4_equivariance() {
    let c = Criterion {
        name: "4 equivariance",
        budget: Duration::from_secs(300),
    };
    let start = Instant::now();
    let report = run_suite("equivariance", &Bounds::default(), 0).unwrap();
    let detail = report
        .instances
        .iter()
        .filter(|i| i.status != "pass")
        .map(|i| format!("{} {}", i.instance, i.params))
        .collect::<Vec<_>>()
        .join("; ");
    // the failure witness must have been recorded for every d >= 2 context
    let witnesses = report
        .instances
        .iter()
        .filter(|i| i.instance == "coil_breaks_full_action")
        .count();
    c.finish(start, report.pass && witnesses > 0, detail);
}

/// Criterion 5: Ariki-Koike package; includes the frozen Cartan n = 2
/// dimensions m = 1 -> 2 and m = 2 -> 6, and the n = 2, m = 4 rank check.
#[test]
fn criterion_5_ariki_koike() {
    let c = Criterion {
        name: "5 ariki-koike",
        budget: Duration::from_secs(600),
    };
    let start = Instant::now();
    let mut pass = true;
    let mut detail = String::new();
    let report = run_suite("ariki_koike", &Bounds::deep(), 0).unwrap();
    if !report.pass {
        pass = false;
        detail = report
            .instances
            .iter()
            .filter(|i| i.status != "pass")
            .map(|i| format!("{} {}", i.instance, i.params))
            .collect::<Vec<_>>()
            .join("; ");
    }
    // frozen examples
    let ctx = LeviDatum::cartan(2);
    let cfg = AkConfig::default();
    if ak::blob_dimension(&ctx, 1) != 2 || ak::image_rank(&ctx, &cfg, 1, 0, false).unwrap() != 2 {
        pass = false;
        detail = "cartan n=2 m=1 dimension".into();
    }
    if ak::blob_dimension(&ctx, 2) != 6 || ak::image_rank(&ctx, &cfg, 2, 0, false).unwrap() != 6 {
        pass = false;
        detail = "cartan n=2 m=2 dimension".into();
    }
    c.finish(start, pass, detail);
}

/// Criterion 6: the (coil (x) id) witness separates the skein and Hopf
/// products at generic q and agrees after v -> 1.
#[test]
fn criterion_6_monoidality_dichotomy() {
    let c = Criterion {
        name: "6 monoidality dichotomy",
        budget: Duration::from_secs(10),
    };
    let start = Instant::now();
    let ctx = LeviDatum::new(2, vec![1, 1]).unwrap();
    let f = WebTerm::CoilSlice(vec![1], Direction::Winding);
    let g = WebTerm::Id(vec![1]);
    let skein = skein_tensor(&f, &g, &ctx).unwrap();
    let hopf = hopf_tensor(&f, &g);
    let generic_differs = {
        let a = evaluate(&skein, &ctx, &EvalMode::Exact).unwrap();
        let b = evaluate(&hopf, &ctx, &EvalMode::Exact).unwrap();
        !a.equals(&b)
    };
    let v1_agrees = {
        let a = evaluate(&skein, &ctx, &EvalMode::V1).unwrap();
        let b = evaluate(&hopf, &ctx, &EvalMode::V1).unwrap();
        a.equals(&b)
    };
    c.finish(
        start,
        generic_differs && v1_agrees,
        format!("generic_differs={generic_differs} v1_agrees={v1_agrees}"),
    );
}

/// Criterion 7: the colored-permutation count equals the image rank at
/// v -> 1 for the Cartan subalgebra, n <= 3 and m <= 3.
#[test]
fn criterion_7_q1_basis() {
    let c = Criterion {
        name: "7 q=1 basis",
        budget: Duration::from_secs(120),
    };
    let start = Instant::now();
    let report = run_suite("q1_basis", &Bounds::default(), 0).unwrap();
    let detail = report
        .instances
        .iter()
        .filter(|i| i.status != "pass")
        .map(|i| format!("{} {} {}", i.instance, i.params, i.detail))
        .collect::<Vec<_>>()
        .join("; ");
    c.finish(start, report.pass, detail);
}

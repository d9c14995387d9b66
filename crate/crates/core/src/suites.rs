//! Named verification suites: each binds a family of identities to
//! executable checks over configurable bounds.

use std::time::Instant;

use num_traits::One;
use serde::Serialize;

use crate::ak::{self, AkConfig};
use crate::combinatorics::all_permutations;
use crate::error::{Error, Result};
use crate::rep::coil::{
    coil_matrix, essential_circle_value, explosion_image_invariant, predicted_circle_value,
    Direction, Side,
};
use crate::rep::gens::{self, CrossKind};
use crate::rep::levi::{
    block_projector, full_twist, levi_braid_lift, levi_thick_crossing, longest_word,
};
use crate::rep::qg::{self, Algebra};
use crate::rep::LeviDatum;
use crate::scalar::{quantum_binomial, quantum_factorial_elem, FieldElem};
use crate::web::ast::{Gen, WebTerm};
use crate::web::eval::{evaluate, hopf_tensor, skein_tensor, EvalMode};
use crate::LinMap;

/// Parameter ranges for a suite run.
#[derive(Clone, Copy, Debug)]
pub struct Bounds {
    pub n_max: u8,
    pub label_max: u32,
    pub width_max: usize,
    pub m_max: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            n_max: 3,
            label_max: 3,
            width_max: 3,
            m_max: 3,
        }
    }
}

impl Bounds {
    /// Raised bounds where dimensions stay within 4^4.
    pub fn deep() -> Self {
        Bounds {
            n_max: 4,
            label_max: 4,
            width_max: 3,
            m_max: 4,
        }
    }
}

#[derive(Serialize, Clone, Debug)]
pub struct InstanceReport {
    pub suite: String,
    pub instance: String,
    pub params: String,
    pub status: String,
    pub elapsed_ms: u64,
    pub detail: String,
}

#[derive(Serialize, Clone, Debug)]
pub struct SuiteReport {
    pub name: String,
    pub pass: bool,
    pub instances: Vec<InstanceReport>,
}

pub const SUITE_NAMES: [&str; 9] = [
    "planar_relations",
    "derived_planar",
    "annular_relations",
    "circle_evaluation",
    "equivariance",
    "proof_lemmas",
    "monoidality",
    "ariki_koike",
    "q1_basis",
];

struct Recorder {
    suite: String,
    instances: Vec<InstanceReport>,
}

impl Recorder {
    fn new(suite: &str) -> Self {
        Recorder {
            suite: suite.to_string(),
            instances: Vec::new(),
        }
    }

    fn record<F: FnOnce() -> Result<(bool, String)>>(&mut self, instance: &str, params: String, f: F) {
        let start = Instant::now();
        let (status, detail) = match f() {
            Ok((true, _)) => ("pass".to_string(), String::new()),
            Ok((false, detail)) => ("fail".to_string(), detail),
            Err(e) => ("error".to_string(), e.to_string()),
        };
        self.instances.push(InstanceReport {
            suite: self.suite.clone(),
            instance: instance.to_string(),
            params,
            status,
            elapsed_ms: start.elapsed().as_millis() as u64,
            detail,
        });
    }

    fn finish(self) -> SuiteReport {
        let pass = self.instances.iter().all(|i| i.status == "pass");
        SuiteReport {
            name: self.suite,
            pass,
            instances: self.instances,
        }
    }
}

fn mat_eq(lhs: &LinMap, rhs: &LinMap) -> (bool, String) {
    if lhs.equals(rhs) {
        (true, String::new())
    } else {
        let diff = lhs
            .sub_mat(rhs)
            .map(|d| serde_json::to_string(&d.to_json()).unwrap_or_default())
            .unwrap_or_else(|_| {
                format!(
                    "shape mismatch: {:?}->{:?} vs {:?}->{:?}",
                    lhs.domain.word, lhs.codomain.word, rhs.domain.word, rhs.codomain.word
                )
            });
        (false, format!("difference: {diff}"))
    }
}

fn term_eq(ctx: &LeviDatum, lhs: &WebTerm, rhs: &WebTerm, mode: &EvalMode) -> Result<(bool, String)> {
    let ml = evaluate(lhs, ctx, mode)?;
    let mr = evaluate(rhs, ctx, mode)?;
    Ok(mat_eq(&ml, &mr))
}

/// All compositions of `n` into positive parts.
pub fn compositions(n: u8) -> Vec<Vec<u8>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in 1..=n {
        for rest in compositions(n - first) {
            let mut c = vec![first];
            c.extend(rest);
            out.push(c);
        }
    }
    out
}

fn qfac(k: u32) -> FieldElem {
    quantum_factorial_elem(k)
}

// ---------------------------------------------------------------- planar

fn suite_planar(bounds: &Bounds) -> SuiteReport {
    let mut rec = Recorder::new("planar_relations");
    for n in 1..=bounds.n_max {
        let ctx = LeviDatum::full(n);
        // exterior relation: labels above n give the zero space
        rec.record("exterior_zero", format!("n={n}"), || {
            let dim = ctx.space(&[n as i32 + 1]).dim();
            Ok((dim == 0, format!("dim = {dim}")))
        });
        // associativity and coassociativity of merges and splits
        for k in 0..=bounds.label_max {
            for l in 0..=bounds.label_max {
                for m in 0..=bounds.label_max {
                    if k + l + m > n as u32 || k + l + m == 0 {
                        continue;
                    }
                    let (ki, li, mi) = (k as i32, l as i32, m as i32);
                    if k > 0 && m > 0 {
                        rec.record("associativity", format!("n={n} k={k} l={l} m={m}"), || {
                            let lhs = WebTerm::compose(
                                WebTerm::Gen(Gen::Merge(ki + li, mi)),
                                WebTerm::tensor(
                                    WebTerm::Gen(Gen::Merge(ki, li)),
                                    WebTerm::Id(vec![mi]),
                                ),
                            );
                            let rhs = WebTerm::compose(
                                WebTerm::Gen(Gen::Merge(ki, li + mi)),
                                WebTerm::tensor(
                                    WebTerm::Id(vec![ki]),
                                    WebTerm::Gen(Gen::Merge(li, mi)),
                                ),
                            );
                            term_eq(&ctx, &lhs, &rhs, &EvalMode::Exact)
                        });
                    }
                    if k == 0 || m == 0 {
                        continue;
                    }
                    rec.record("coassociativity", format!("n={n} k={k} l={l} m={m}"), || {
                        let lhs = WebTerm::compose(
                            WebTerm::tensor(WebTerm::Gen(Gen::Split(ki, li)), WebTerm::Id(vec![mi])),
                            WebTerm::Gen(Gen::Split(ki + li, mi)),
                        );
                        let rhs = WebTerm::compose(
                            WebTerm::tensor(WebTerm::Id(vec![ki]), WebTerm::Gen(Gen::Split(li, mi))),
                            WebTerm::Gen(Gen::Split(ki, li + mi)),
                        );
                        term_eq(&ctx, &lhs, &rhs, &EvalMode::Exact)
                    });
                }
            }
        }
        // digon removal and its dual
        for k in 0..=bounds.label_max {
            for l in 0..=bounds.label_max {
                if k + l > n as u32 || k + l == 0 {
                    continue;
                }
                let (ki, li) = (k as i32, l as i32);
                rec.record("digon", format!("n={n} k={k} l={l}"), || {
                    let lhs = WebTerm::compose(
                        WebTerm::Gen(Gen::Merge(ki, li)),
                        WebTerm::Gen(Gen::Split(ki, li)),
                    );
                    let rhs = WebTerm::Scale(
                        quantum_binomial((k + l) as i64, k),
                        Box::new(WebTerm::Id(vec![ki + li])),
                    );
                    term_eq(&ctx, &lhs, &rhs, &EvalMode::Exact)
                });
                rec.record("digon_dual", format!("n={n} k={k} l={l}"), || {
                    let lhs = WebTerm::compose(
                        WebTerm::Gen(Gen::DMerge(ki, li)),
                        WebTerm::Gen(Gen::DSplit(ki, li)),
                    );
                    let rhs = WebTerm::Scale(
                        quantum_binomial((k + l) as i64, k),
                        Box::new(WebTerm::Id(vec![-(ki + li)])),
                    );
                    term_eq(&ctx, &lhs, &rhs, &EvalMode::Exact)
                });
            }
        }
        // categorical dimension: closed k-loop
        for k in 1..=n as u32 {
            rec.record("loop_value", format!("n={n} k={k}"), || {
                let lhs = WebTerm::compose(
                    WebTerm::Gen(Gen::CapR(k as i32)),
                    WebTerm::Gen(Gen::CupL(k as i32)),
                );
                let rhs = WebTerm::Scale(
                    quantum_binomial(n as i64, k),
                    Box::new(WebTerm::Id(vec![])),
                );
                term_eq(&ctx, &lhs, &rhs, &EvalMode::Exact)
            });
        }
        // dumbbell-crossing (Schur) relation, both expansions
        let lab2 = bounds.label_max.min(2);
        for k in 1..=lab2 {
            for l in 1..=lab2 {
                if k + l > n as u32 {
                    continue;
                }
                for r in 0..=(k + l) {
                    let s = k + l - r;
                    rec.record("dumbbell", format!("n={n} k={k} l={l} r={r} s={s}"), || {
                        dumbbell_check(&ctx, k, l, r, s)
                    });
                }
            }
        }
        // crossing expansion into ladders
        for k in 1..=lab2 {
            for l in 1..=lab2 {
                if k.max(l) > n as u32 {
                    continue;
                }
                for kind in [CrossKind::Over, CrossKind::Under] {
                    rec.record(
                        "crossing_expansion",
                        format!("n={n} k={k} l={l} kind={kind:?}"),
                        || crossing_expansion_check(&ctx, k, l, kind),
                    );
                }
            }
        }
    }
    rec.finish()
}

/// One crossed-rung diagram of the dumbbell relation.
fn crossed_ladder(ctx: &LeviDatum, k: u32, l: u32, a: u32, b: u32, over: bool) -> Result<LinMap> {
    let (ki, li, ai, bi) = (k as i32, l as i32, a as i32, b as i32);
    let bottom = gens::split(ctx, k - a, a).kron(&gens::split(ctx, b, l - b));
    let kind = if over { CrossKind::Over } else { CrossKind::Under };
    let mid = gens::embed(
        ctx,
        &[ki - ai],
        &gens::thick_crossing(ctx, a, b, kind),
        &[li - bi],
    );
    let top = gens::merge(ctx, k - a, b).kron(&gens::merge(ctx, a, l - b));
    top.compose(&mid.compose(&bottom)?)
}

fn dumbbell_check(ctx: &LeviDatum, k: u32, l: u32, r: u32, s: u32) -> Result<(bool, String)> {
    let lhs = gens::split(ctx, r, s).compose(&gens::merge(ctx, k, l))?;
    // sum over a - b = k - r with 0 <= a <= k, 0 <= b <= l; per-term sign
    // (-1)^{ab} in this crate's ladder normalization
    for over in [true, false] {
        let mut acc = LinMap::zero_map(lhs.domain.clone(), lhs.codomain.clone());
        for a in 0..=k {
            for b in 0..=l {
                if a as i64 - b as i64 != k as i64 - r as i64 {
                    continue;
                }
                let e = ((k - a) * (l - b)) as i64;
                let mut coeff = if over { FieldElem::v(e as i32) } else { FieldElem::v(-e as i32) };
                if (a * b) % 2 == 1 {
                    coeff = -coeff;
                }
                let term = crossed_ladder(ctx, k, l, a, b, over)?.scale(&coeff);
                acc = acc.add_mat(&term)?;
            }
        }
        let (ok, detail) = mat_eq(&lhs, &acc);
        if !ok {
            return Ok((false, format!("({}) {detail}", if over { "over" } else { "under" })));
        }
    }
    Ok((true, String::new()))
}

fn neg_v_pow(e: i64) -> FieldElem {
    let sign = if e.rem_euclid(2) == 1 { -1 } else { 1 };
    FieldElem::constant(sign) * FieldElem::v(e as i32)
}

/// Two-rung ladder of the crossing expansion: transfer `b` rightward, then
/// `a` leftward.
fn seq_ladder(ctx: &LeviDatum, k: u32, l: u32, a: u32, b: u32) -> Result<LinMap> {
    let (ki, bi) = (k as i32, b as i32);
    let mut m = gens::split(ctx, k - b, b).kron(&gens::identity(ctx, &[l as i32]));
    m = gens::embed(ctx, &[ki - bi], &gens::merge(ctx, b, l), &[]).compose(&m)?;
    m = gens::embed(ctx, &[ki - bi], &gens::split(ctx, a, l + b - a), &[]).compose(&m)?;
    let rest = (l + b - a) as i32;
    m = gens::embed(ctx, &[], &gens::merge(ctx, k - b, a), &[rest]).compose(&m)?;
    Ok(m)
}

fn crossing_expansion_check(
    ctx: &LeviDatum,
    k: u32,
    l: u32,
    kind: CrossKind,
) -> Result<(bool, String)> {
    let lhs = gens::thick_crossing(ctx, k, l, kind);
    let sign = if (k * l) % 2 == 1 {
        -FieldElem::one()
    } else {
        FieldElem::one()
    };
    let mut acc = LinMap::zero_map(lhs.domain.clone(), lhs.codomain.clone());
    // b - a = k - l with 0 <= b <= k (transfer cannot exceed the strand)
    for b in 0..=k.min(l + k) {
        let a_i = b as i64 - (k as i64 - l as i64);
        if a_i < 0 {
            continue;
        }
        let a = a_i as u32;
        if a > l + b {
            continue;
        }
        let e = k as i64 - b as i64;
        let coeff = match kind {
            CrossKind::Over => neg_v_pow(e),
            CrossKind::Under => neg_v_pow(-e),
        };
        let term = seq_ladder(ctx, k, l, a, b)?.scale(&(&sign * &coeff));
        acc = acc.add_mat(&term)?;
    }
    Ok(mat_eq(&lhs, &acc))
}

// ---------------------------------------------------------------- derived

fn suite_derived(bounds: &Bounds) -> SuiteReport {
    let mut rec = Recorder::new("derived_planar");
    for n in 1..=bounds.n_max {
        let ctx = LeviDatum::full(n);
        for k in 1..=(bounds.label_max.min(n as u32)) {
            let ki = k as i32;
            rec.record("reidemeister1_over", format!("n={n} k={k}"), || {
                let lhs = WebTerm::compose(
                    WebTerm::tensor(WebTerm::Id(vec![ki]), WebTerm::Gen(Gen::CapR(ki))),
                    WebTerm::compose(
                        WebTerm::tensor(WebTerm::Gen(Gen::Over(ki, ki)), WebTerm::Id(vec![-ki])),
                        WebTerm::tensor(WebTerm::Id(vec![ki]), WebTerm::Gen(Gen::CupL(ki))),
                    ),
                );
                let e = k as i64 * (-(k as i64) + n as i64 + 1);
                let rhs = WebTerm::Scale(
                    FieldElem::v(e as i32),
                    Box::new(WebTerm::Id(vec![ki])),
                );
                term_eq(&ctx, &lhs, &rhs, &EvalMode::Exact)
            });
            rec.record("reidemeister1_under", format!("n={n} k={k}"), || {
                let lhs = WebTerm::compose(
                    WebTerm::tensor(WebTerm::Id(vec![ki]), WebTerm::Gen(Gen::CapR(ki))),
                    WebTerm::compose(
                        WebTerm::tensor(WebTerm::Gen(Gen::Under(ki, ki)), WebTerm::Id(vec![-ki])),
                        WebTerm::tensor(WebTerm::Id(vec![ki]), WebTerm::Gen(Gen::CupL(ki))),
                    ),
                );
                let e = k as i64 * (k as i64 - n as i64 - 1);
                let rhs = WebTerm::Scale(
                    FieldElem::v(e as i32),
                    Box::new(WebTerm::Id(vec![ki])),
                );
                term_eq(&ctx, &lhs, &rhs, &EvalMode::Exact)
            });
        }
        rec.record("skein_relation", format!("n={n}"), || {
            let lhs = WebTerm::Sum(
                Box::new(WebTerm::Gen(Gen::Over(1, 1))),
                Box::new(WebTerm::Scale(
                    -FieldElem::one(),
                    Box::new(WebTerm::Gen(Gen::Under(1, 1))),
                )),
            );
            let rhs = WebTerm::Scale(
                &FieldElem::v(1) - &FieldElem::v(-1),
                Box::new(WebTerm::Id(vec![1, 1])),
            );
            term_eq(&ctx, &lhs, &rhs, &EvalMode::Exact)
        });
        // explosion projector is idempotent
        for k in 1..=bounds.label_max {
            for l in 1..=bounds.label_max {
                if k + l > n as u32 {
                    continue;
                }
                rec.record("explosion_idempotent", format!("n={n} k={k} l={l}"), || {
                    let e = gens::split(&ctx, k, l)
                        .compose(&gens::merge(&ctx, k, l))?
                        .scale(&quantum_binomial((k + l) as i64, k).recip());
                    let (ok, detail) = mat_eq(&e.compose(&e)?, &e);
                    Ok((ok, detail))
                });
            }
        }
        // thick Reidemeister II
        for k in 1..=(bounds.label_max.min(n as u32)) {
            for l in 1..=(bounds.label_max.min(n as u32)) {
                rec.record("reidemeister2_thick", format!("n={n} k={k} l={l}"), || {
                    let over = gens::thick_crossing(&ctx, k, l, CrossKind::Over);
                    let under = gens::thick_crossing(&ctx, l, k, CrossKind::Under);
                    let rii = under.compose(&over)?;
                    Ok(mat_eq(&rii, &gens::identity(&ctx, &[k as i32, l as i32])))
                });
            }
        }
        rec.record("reidemeister3_thin", format!("n={n}"), || {
            let over = gens::thin_crossing(&ctx, CrossKind::Over);
            let b1 = gens::embed(&ctx, &[], &over, &[1]);
            let b2 = gens::embed(&ctx, &[1], &over, &[]);
            let lhs = b1.compose(&b2.compose(&b1)?)?;
            let rhs = b2.compose(&b1.compose(&b2)?)?;
            Ok(mat_eq(&lhs, &rhs))
        });
    }
    // Levi crossings are diagonal on the block decomposition
    for n in 1..=bounds.n_max.min(3) {
        for comp in compositions(n) {
            let ctx = LeviDatum::new(n, comp.clone()).unwrap();
            for k in 1..=(n as u32).min(bounds.label_max) {
                rec.record(
                    "levi_curl_diagonal",
                    format!("n={n} comp={comp:?} k={k}"),
                    || {
                        let ki = k as i32;
                        let cross = levi_thick_crossing(&ctx, k, k, CrossKind::Over);
                        let curl = gens::embed(&ctx, &[ki], &gens::cap_r(&ctx, k), &[])
                            .compose(
                                &gens::embed(&ctx, &[], &cross, &[-ki])
                                    .compose(&gens::embed(&ctx, &[ki], &gens::cup_l(&ctx, k), &[]))?,
                            )?;
                        let diagonal = curl.entries().all(|(r, c, _)| r == c);
                        Ok((diagonal, "curl has off-diagonal entries".into()))
                    },
                );
            }
        }
    }
    rec.finish()
}

// ---------------------------------------------------------------- annular

fn coil_term(word: &[i32], dir: Direction) -> WebTerm {
    WebTerm::CoilSlice(word.to_vec(), dir)
}

/// Words for the annular relation checks: every word of length `1..=width`
/// over labels up to 2 in both signs.
fn annular_words(width: usize, n: u8) -> Vec<Vec<i32>> {
    let labels: Vec<i32> = match n {
        1 => vec![1, -1],
        _ => vec![1, -1, 2, -2],
    };
    let mut out = Vec::new();
    let mut frontier: Vec<Vec<i32>> = vec![vec![]];
    for _ in 0..width {
        let mut next = Vec::new();
        for w in &frontier {
            for &l in &labels {
                let mut w2 = w.clone();
                w2.push(l);
                next.push(w2);
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

fn suite_annular(bounds: &Bounds) -> SuiteReport {
    let mut rec = Recorder::new("annular_relations");
    for n in 1..=bounds.n_max.min(3) {
        for comp in compositions(n) {
            let ctx = LeviDatum::new(n, comp.clone()).unwrap();
            let tag = format!("n={n} comp={comp:?}");
            // Rel 1: winding and inverse winding cancel, both orders
            for word in annular_words(bounds.width_max.min(3), n) {
                if word.len() > 2 && word.iter().any(|k| k.abs() > 1) {
                    continue; // keep the widest checks to thin strands
                }
                rec.record("coil_inverse", format!("{tag} word={word:?}"), || {
                    let lhs = WebTerm::compose(
                        coil_term(&word, Direction::Inverse),
                        coil_term(&word, Direction::Winding),
                    );
                    let rhs = WebTerm::Id(word.clone());
                    let (ok1, d1) = term_eq(&ctx, &lhs, &rhs, &EvalMode::Exact)?;
                    if !ok1 {
                        return Ok((false, d1));
                    }
                    let mut rotated = word[1..].to_vec();
                    rotated.push(word[0]);
                    let lhs = WebTerm::compose(
                        coil_term(&word, Direction::Winding),
                        coil_term(&word, Direction::Inverse),
                    );
                    let rhs = WebTerm::Id(rotated);
                    term_eq(&ctx, &lhs, &rhs, &EvalMode::Exact)
                });
            }
            // Rel 2: merges slide through coils
            let lab = 2u32.min(n as u32);
            for k in 1..=lab {
                for l in 1..=lab {
                    if k + l > n as u32 {
                        continue;
                    }
                    for spect in spectators(n) {
                        rec.record(
                            "merge_slide",
                            format!("{tag} k={k} l={l} spect={spect:?}"),
                            || merge_slide_check(&ctx, k as i32, l as i32, &spect, Flip::None),
                        );
                        rec.record(
                            "merge_slide_updown",
                            format!("{tag} k={k} l={l} spect={spect:?}"),
                            || merge_slide_check(&ctx, k as i32, l as i32, &spect, Flip::UpDown),
                        );
                        rec.record(
                            "merge_slide_leftright",
                            format!("{tag} k={k} l={l} spect={spect:?}"),
                            || merge_slide_check(&ctx, k as i32, l as i32, &spect, Flip::LeftRight),
                        );
                    }
                }
            }
            // Rel 3: caps and cups slide through coils, with flips and
            // half-slides
            for k in 1..=lab {
                for spect in spectators(n) {
                    for flip in [Flip::None, Flip::UpDown, Flip::LeftRight] {
                        rec.record(
                            "cap_slide",
                            format!("{tag} k={k} spect={spect:?} flip={flip:?}"),
                            || cap_slide_check(&ctx, k as i32, &spect, flip),
                        );
                        rec.record(
                            "cup_slide",
                            format!("{tag} k={k} spect={spect:?} flip={flip:?}"),
                            || cup_slide_check(&ctx, k as i32, &spect, flip),
                        );
                    }
                    rec.record(
                        "cap_half_slide",
                        format!("{tag} k={k} spect={spect:?}"),
                        || cap_half_slide_check(&ctx, k as i32, &spect),
                    );
                    rec.record(
                        "cup_half_slide",
                        format!("{tag} k={k} spect={spect:?}"),
                        || cup_half_slide_check(&ctx, k as i32, &spect),
                    );
                }
            }
            // annular digon removal
            for k in 1..=lab {
                for l in 1..=lab {
                    if k + l > n as u32 {
                        continue;
                    }
                    for spect in [vec![], vec![1]] {
                        rec.record(
                            "annular_digon",
                            format!("{tag} k={k} l={l} spect={spect:?}"),
                            || annular_digon_check(&ctx, k as i32, l as i32, &spect),
                        );
                    }
                }
            }
            // half-slide of a split through the coil
            for k in 1..=lab {
                for l in 1..=lab {
                    if k + l > n as u32 {
                        continue;
                    }
                    for spect in [vec![], vec![1]] {
                        rec.record(
                            "split_half_slide",
                            format!("{tag} k={k} l={l} spect={spect:?}"),
                            || split_half_slide_check(&ctx, k as i32, l as i32, &spect, false),
                        );
                        rec.record(
                            "split_half_slide_flip",
                            format!("{tag} k={k} l={l} spect={spect:?}"),
                            || split_half_slide_check(&ctx, k as i32, l as i32, &spect, true),
                        );
                    }
                }
            }
            // thick coils from thin ones (annular explosion)
            for k in 2..=(n as u32).min(bounds.label_max) {
                for spect in [vec![], vec![1]] {
                    rec.record(
                        "coil_explosion",
                        format!("{tag} k={k} spect={spect:?}"),
                        || coil_explosion_check(&ctx, k, &spect),
                    );
                }
            }
        }
    }
    rec.finish()
}

#[derive(Clone, Copy, Debug)]
enum Flip {
    None,
    UpDown,
    LeftRight,
}

fn apply_flip(flip: Flip, lhs: WebTerm, rhs: WebTerm) -> (WebTerm, WebTerm) {
    match flip {
        Flip::None => (lhs, rhs),
        Flip::UpDown => (lhs.flip_updown(), rhs.flip_updown()),
        Flip::LeftRight => (lhs.flip_leftright(), rhs.flip_leftright()),
    }
}

/// Spectator words of width one, both signs, labels up to 2.
fn spectators(n: u8) -> Vec<Vec<i32>> {
    if n == 1 {
        vec![vec![], vec![1], vec![-1]]
    } else {
        vec![vec![], vec![1], vec![-1], vec![2], vec![-2]]
    }
}

fn merge_slide_check(
    ctx: &LeviDatum,
    k: i32,
    l: i32,
    spect: &[i32],
    flip: Flip,
) -> Result<(bool, String)> {
    // coil(k+l, K) . (merge (x) id) = (id (x) merge) . coil(l, (K,k)) . coil(k, (l,K))
    let mut w_kl = vec![k + l];
    w_kl.extend_from_slice(spect);
    let mut bottom = WebTerm::Gen(Gen::Merge(k, l));
    if !spect.is_empty() {
        bottom = WebTerm::tensor(bottom, WebTerm::Id(spect.to_vec()));
    }
    let lhs = WebTerm::compose(coil_term(&w_kl, Direction::Winding), bottom);

    let mut w_k = vec![k, l];
    w_k.extend_from_slice(spect);
    let mut w_l = vec![l];
    w_l.extend_from_slice(spect);
    w_l.push(k);
    let mut top = WebTerm::Gen(Gen::Merge(k, l));
    if !spect.is_empty() {
        top = WebTerm::tensor(WebTerm::Id(spect.to_vec()), top);
    }
    let rhs = WebTerm::compose(
        top,
        WebTerm::compose(
            coil_term(&w_l, Direction::Winding),
            coil_term(&w_k, Direction::Winding),
        ),
    );
    let (lhs, rhs) = apply_flip(flip, lhs, rhs);
    term_eq(ctx, &lhs, &rhs, &EvalMode::Exact)
}

fn cap_slide_check(ctx: &LeviDatum, k: i32, spect: &[i32], flip: Flip) -> Result<(bool, String)> {
    // capR (x) id = (id (x) capR) . coil(-k, (K,k)) . coil(k, (-k,K))
    let mut bottom = WebTerm::Gen(Gen::CapR(k));
    if !spect.is_empty() {
        bottom = WebTerm::tensor(bottom, WebTerm::Id(spect.to_vec()));
    }
    let lhs = bottom;
    let mut w1 = vec![k, -k];
    w1.extend_from_slice(spect);
    let mut w2 = vec![-k];
    w2.extend_from_slice(spect);
    w2.push(k);
    let mut top = WebTerm::Gen(Gen::CapR(k));
    if !spect.is_empty() {
        top = WebTerm::tensor(WebTerm::Id(spect.to_vec()), top);
    }
    let rhs = WebTerm::compose(
        top,
        WebTerm::compose(
            coil_term(&w2, Direction::Winding),
            coil_term(&w1, Direction::Winding),
        ),
    );
    let (lhs, rhs) = apply_flip(flip, lhs, rhs);
    term_eq(ctx, &lhs, &rhs, &EvalMode::Exact)
}

fn cup_slide_check(ctx: &LeviDatum, k: i32, spect: &[i32], flip: Flip) -> Result<(bool, String)> {
    // (id (x) cupR) = coil . coil . (cupR (x) id)
    let mut lhs = WebTerm::Gen(Gen::CupR(k));
    if !spect.is_empty() {
        lhs = WebTerm::tensor(WebTerm::Id(spect.to_vec()), lhs);
    }
    let mut bottom = WebTerm::Gen(Gen::CupR(k));
    if !spect.is_empty() {
        bottom = WebTerm::tensor(bottom, WebTerm::Id(spect.to_vec()));
    }
    let mut w1 = vec![-k, k];
    w1.extend_from_slice(spect);
    let mut w2 = vec![k];
    w2.extend_from_slice(spect);
    w2.push(-k);
    let rhs = WebTerm::compose(
        WebTerm::compose(
            coil_term(&w2, Direction::Winding),
            coil_term(&w1, Direction::Winding),
        ),
        bottom,
    );
    let (lhs, rhs) = apply_flip(flip, lhs, rhs);
    term_eq(ctx, &lhs, &rhs, &EvalMode::Exact)
}

/// Half-slide of a cap: unwinding the capped pair's first strand on one side
/// matches winding its partner on the other.
fn cap_half_slide_check(ctx: &LeviDatum, k: i32, spect: &[i32]) -> Result<(bool, String)> {
    // (capR (x) id) . coil_inv(k, (-k,K)) = (id (x) capR) . coil(-k, (K,k))
    let mut w1 = vec![k, -k];
    w1.extend_from_slice(spect);
    let mut cap_low = WebTerm::Gen(Gen::CapR(k));
    if !spect.is_empty() {
        cap_low = WebTerm::tensor(cap_low, WebTerm::Id(spect.to_vec()));
    }
    let lhs = WebTerm::compose(cap_low, coil_term(&w1, Direction::Inverse));
    let mut w2 = vec![-k];
    w2.extend_from_slice(spect);
    w2.push(k);
    let mut cap_high = WebTerm::Gen(Gen::CapR(k));
    if !spect.is_empty() {
        cap_high = WebTerm::tensor(WebTerm::Id(spect.to_vec()), cap_high);
    }
    let rhs = WebTerm::compose(cap_high, coil_term(&w2, Direction::Winding));
    term_eq(ctx, &lhs, &rhs, &EvalMode::Exact)
}

/// Half-slide of a cup, dual to the cap half-slide.
fn cup_half_slide_check(ctx: &LeviDatum, k: i32, spect: &[i32]) -> Result<(bool, String)> {
    // coil_inv(k, (K,-k)) . (id (x) cupR) = coil(-k, (k,K)) . (cupR (x) id)
    let mut w1 = vec![k];
    w1.extend_from_slice(spect);
    w1.push(-k);
    let mut cup_high = WebTerm::Gen(Gen::CupR(k));
    if !spect.is_empty() {
        cup_high = WebTerm::tensor(WebTerm::Id(spect.to_vec()), cup_high);
    }
    let lhs = WebTerm::compose(coil_term(&w1, Direction::Inverse), cup_high);
    let mut w2 = vec![-k, k];
    w2.extend_from_slice(spect);
    let mut cup_low = WebTerm::Gen(Gen::CupR(k));
    if !spect.is_empty() {
        cup_low = WebTerm::tensor(cup_low, WebTerm::Id(spect.to_vec()));
    }
    let rhs = WebTerm::compose(coil_term(&w2, Direction::Winding), cup_low);
    term_eq(ctx, &lhs, &rhs, &EvalMode::Exact)
}

fn annular_digon_check(ctx: &LeviDatum, k: i32, l: i32, spect: &[i32]) -> Result<(bool, String)> {
    // split at the bottom, wind both outputs, merge on the far side
    // equals [k+l choose k] * coil(k+l, K)
    let mut bottom = WebTerm::Gen(Gen::Split(k, l));
    if !spect.is_empty() {
        bottom = WebTerm::tensor(bottom, WebTerm::Id(spect.to_vec()));
    }
    let mut w_k = vec![k, l];
    w_k.extend_from_slice(spect);
    let mut w_l = vec![l];
    w_l.extend_from_slice(spect);
    w_l.push(k);
    let mut top = WebTerm::Gen(Gen::Merge(k, l));
    if !spect.is_empty() {
        top = WebTerm::tensor(WebTerm::Id(spect.to_vec()), top);
    }
    let lhs = WebTerm::compose(
        top,
        WebTerm::compose(
            WebTerm::compose(
                coil_term(&w_l, Direction::Winding),
                coil_term(&w_k, Direction::Winding),
            ),
            bottom,
        ),
    );
    let mut w_kl = vec![k + l];
    w_kl.extend_from_slice(spect);
    let rhs = WebTerm::Scale(
        quantum_binomial((k + l) as i64, k as u32),
        Box::new(coil_term(&w_kl, Direction::Winding)),
    );
    term_eq(ctx, &lhs, &rhs, &EvalMode::Exact)
}

fn split_half_slide_check(
    ctx: &LeviDatum,
    k: i32,
    l: i32,
    spect: &[i32],
    flipped: bool,
) -> Result<(bool, String)> {
    // coil(k, (l,K)) . (split (x) id) =
    //   coil_inv(l, (K,k)) . (id (x) split) . coil(k+l, K)
    let mut bottom = WebTerm::Gen(Gen::Split(k, l));
    if !spect.is_empty() {
        bottom = WebTerm::tensor(bottom, WebTerm::Id(spect.to_vec()));
    }
    let mut w_k = vec![k, l];
    w_k.extend_from_slice(spect);
    let lhs = WebTerm::compose(coil_term(&w_k, Direction::Winding), bottom);

    let mut w_kl = vec![k + l];
    w_kl.extend_from_slice(spect);
    let mut mid = WebTerm::Gen(Gen::Split(k, l));
    if !spect.is_empty() {
        mid = WebTerm::tensor(WebTerm::Id(spect.to_vec()), mid);
    }
    let mut w_l = vec![l];
    w_l.extend_from_slice(spect);
    w_l.push(k);
    let rhs = WebTerm::compose(
        coil_term(&w_l, Direction::Inverse),
        WebTerm::compose(mid, coil_term(&w_kl, Direction::Winding)),
    );
    let (lhs, rhs) = if flipped {
        (lhs.flip_updown(), rhs.flip_updown())
    } else {
        (lhs, rhs)
    };
    term_eq(ctx, &lhs, &rhs, &EvalMode::Exact)
}

fn coil_explosion_check(ctx: &LeviDatum, k: u32, spect: &[i32]) -> Result<(bool, String)> {
    // the thick coil equals [k]!^{-1} times: explode, wind each thin strand,
    // merge on the far side
    let mut word = vec![k as i32];
    word.extend_from_slice(spect);
    let lhs = coil_matrix(ctx, &word, Direction::Winding)?;

    let mut expl = gens::explode(ctx, k);
    if !spect.is_empty() {
        expl = expl.kron(&gens::identity(ctx, spect));
    }
    let mut acc = expl;
    // wind the leading thin strand k times
    for j in 0..k {
        let mut w = vec![1i32; (k - j) as usize];
        w.extend_from_slice(spect);
        w.extend(vec![1i32; j as usize]);
        let coil = coil_matrix(ctx, &w, Direction::Winding)?;
        acc = coil.compose(&acc)?;
    }
    let mut impl_ = gens::implode(ctx, k);
    if !spect.is_empty() {
        impl_ = gens::identity(ctx, spect).kron(&impl_);
    }
    let rhs = impl_.compose(&acc)?.scale(&qfac(k).recip());
    Ok(mat_eq(&lhs, &rhs))
}

// ---------------------------------------------------------------- circles

fn suite_circles(bounds: &Bounds) -> SuiteReport {
    let mut rec = Recorder::new("circle_evaluation");
    for n in 1..=bounds.n_max {
        for comp in compositions(n) {
            let ctx = LeviDatum::new(n, comp.clone()).unwrap();
            for k in 0..=n as u32 {
                for side in [Side::Left, Side::Right] {
                    rec.record(
                        "circle_vs_prediction",
                        format!("n={n} comp={comp:?} k={k} side={side:?}"),
                        || {
                            let got = essential_circle_value(&ctx, k, side)?;
                            let expect = predicted_circle_value(&ctx, k, side);
                            let ok = got == expect;
                            Ok((ok, format!("computed {got}, predicted {expect}")))
                        },
                    );
                }
            }
        }
        // the d = 1 closed form
        let ctx = LeviDatum::full(n);
        for k in 0..=n as u32 {
            rec.record("circle_gln_closed_form", format!("n={n} k={k}"), || {
                let left = essential_circle_value(&ctx, k, Side::Left)?;
                let expect_left = FieldElem::v(-(k as i32) * n as i32)
                    * quantum_binomial(n as i64, k)
                    * FieldElem::u(1, k as i32);
                if left != expect_left {
                    return Ok((false, format!("left: {left} vs {expect_left}")));
                }
                let right = essential_circle_value(&ctx, k, Side::Right)?;
                let expect_right = FieldElem::v(k as i32 * n as i32)
                    * quantum_binomial(n as i64, k)
                    * FieldElem::u(1, -(k as i32));
                Ok((
                    right == expect_right,
                    format!("right: {right} vs {expect_right}"),
                ))
            });
        }
    }
    rec.finish()
}

// ------------------------------------------------------------ equivariance

fn suite_equivariance(bounds: &Bounds) -> SuiteReport {
    let mut rec = Recorder::new("equivariance");
    for n in 1..=bounds.n_max.min(3) {
        for comp in compositions(n) {
            let ctx = LeviDatum::new(n, comp.clone()).unwrap();
            let tag = format!("n={n} comp={comp:?}");
            let lab = bounds.label_max.min(2);
            // planar generators commute with the full action
            let mut planar: Vec<(String, LinMap)> = Vec::new();
            for k in 1..=lab {
                for l in 1..=lab {
                    if k + l <= n as u32 {
                        planar.push((format!("merge({k},{l})"), gens::merge(&ctx, k, l)));
                        planar.push((format!("split({k},{l})"), gens::split(&ctx, k, l)));
                        planar.push((format!("dmerge({k},{l})"), gens::dmerge(&ctx, k, l)));
                        planar.push((format!("dsplit({k},{l})"), gens::dsplit(&ctx, k, l)));
                    }
                    if k.max(l) <= n as u32 {
                        planar.push((
                            format!("over({k},{l})"),
                            gens::thick_crossing(&ctx, k, l, CrossKind::Over),
                        ));
                    }
                }
            }
            for k in 1..=(bounds.label_max.min(n as u32)) {
                planar.push((format!("capL({k})"), gens::cap_l(&ctx, k)));
                planar.push((format!("capR({k})"), gens::cap_r(&ctx, k)));
                planar.push((format!("cupL({k})"), gens::cup_l(&ctx, k)));
                planar.push((format!("cupR({k})"), gens::cup_r(&ctx, k)));
            }
            for (name, f) in &planar {
                rec.record("planar_full_equivariance", format!("{tag} {name}"), || {
                    let failures = qg::check_equivariance(&ctx, f, Algebra::Full)?;
                    Ok((failures.is_empty(), format!("failing: {failures:?}")))
                });
            }
            // coils, Levi crossings and projectors commute with the Levi action
            let mut levi_maps: Vec<(String, LinMap)> = Vec::new();
            for word in [vec![1], vec![1, 1], vec![1, -1]] {
                if let Ok(coil) = coil_matrix(&ctx, &word, Direction::Winding) {
                    levi_maps.push((format!("coil({word:?})"), coil));
                }
            }
            if n >= 2 {
                if let Ok(coil) = coil_matrix(&ctx, &[2], Direction::Winding) {
                    levi_maps.push(("coil([2])".into(), coil));
                }
            }
            levi_maps.push((
                "levi_crossing(1,1)".into(),
                levi_thick_crossing(&ctx, 1, 1, CrossKind::Over),
            ));
            if n >= 2 {
                levi_maps.push((
                    "levi_crossing(1,2)".into(),
                    levi_thick_crossing(&ctx, 1, 2, CrossKind::Over),
                ));
            }
            for i in 1..=ctx.d() {
                levi_maps.push((format!("projector({i})"), block_projector(&ctx, i)));
            }
            for (name, f) in &levi_maps {
                rec.record("levi_equivariance", format!("{tag} {name}"), || {
                    let failures = qg::check_equivariance(&ctx, f, Algebra::Levi)?;
                    Ok((failures.is_empty(), format!("failing: {failures:?}")))
                });
            }
            // when d >= 2 the coil must fail full equivariance
            if ctx.d() >= 2 {
                rec.record("coil_breaks_full_action", tag.clone(), || {
                    let coil = coil_matrix(&ctx, &[1], Direction::Winding)?;
                    let failures = qg::check_equivariance(&ctx, &coil, Algebra::Full)?;
                    Ok((
                        !failures.is_empty(),
                        format!("witness generators: {failures:?}"),
                    ))
                });
            }
        }
    }
    rec.finish()
}

// ------------------------------------------------------------ proof lemmas

fn suite_proof_lemmas(bounds: &Bounds) -> SuiteReport {
    let mut rec = Recorder::new("proof_lemmas");
    for n in 2..=bounds.n_max.min(3) {
        for comp in compositions(n) {
            let ctx = LeviDatum::new(n, comp.clone()).unwrap();
            let tag = format!("n={n} comp={comp:?}");
            // full-twist transport between explosions
            for k in 1..=2u32 {
                for l in 1..=2u32 {
                    if k + l > n as u32 || k + l > 3 {
                        continue;
                    }
                    rec.record("full_twist_transport", format!("{tag} k={k} l={l}"), || {
                        full_twist_transport_check(&ctx, k, l)
                    });
                    rec.record(
                        "full_twist_transport_down",
                        format!("{tag} k={k} l={l}"),
                        || full_twist_transport_down_check(&ctx, k, l),
                    );
                }
            }
            // the explosion embedding is invariant under ft . u
            for k in 2..=(n as u32).min(3) {
                rec.record("explosion_invariance", format!("{tag} k={k}"), || {
                    Ok((
                        explosion_image_invariant(&ctx, k),
                        "image moved off itself".into(),
                    ))
                });
            }
            // alternative reduced word for the k = 3 full twist
            if n >= 3 {
                rec.record("full_twist_word", tag.clone(), || {
                    let fixed = levi_braid_lift(&ctx, 3, &longest_word(3), CrossKind::Over);
                    let alt = levi_braid_lift(&ctx, 3, &[1, 0, 1], CrossKind::Over);
                    Ok(mat_eq(&fixed, &alt))
                });
            }
            // the full antisymmetrizer vanishes at v -> 1
            for (i, &l) in ctx.comp.iter().enumerate() {
                let strands = l as usize + 1;
                if strands > 4 {
                    continue;
                }
                rec.record(
                    "antisymmetrizer_zero",
                    format!("{tag} block={} strands={strands}", i + 1),
                    || antisymmetrizer_check(&ctx, i + 1, strands),
                );
            }
        }
    }
    rec.finish()
}

fn full_twist_transport_check(ctx: &LeviDatum, k: u32, l: u32) -> Result<(bool, String)> {
    let kl = k + l;
    let ft = full_twist(ctx, kl);
    let core = ft.compose(&gens::explode(ctx, kl))?;
    let lhs = gens::implode(ctx, k)
        .kron(&gens::implode(ctx, l))
        .compose(&core)?
        .scale(&(&qfac(k) * &qfac(l)).recip());
    let rhs = gens::split(ctx, k, l)
        .compose(&gens::implode(ctx, kl).compose(&core)?)?
        .scale(&qfac(kl).recip());
    Ok(mat_eq(&lhs, &rhs))
}

/// 180-degree rotation of a map between upward words, realized by caps and
/// cups.
fn mate_rotate180(ctx: &LeviDatum, f: &LinMap) -> Result<LinMap> {
    let dom = f.domain.word.clone();
    let cod = f.codomain.word.clone();
    let dual = |w: &[i32]| -> Vec<i32> { w.iter().rev().map(|k| -k).collect() };
    let dual_cod = dual(&cod);
    let dual_dom = dual(&dom);
    // nested coevaluations 1 -> (dom, dual_dom)
    let mut coev = gens::identity(ctx, &[]);
    for &a in dom.iter().rev() {
        // wrap: 1 -> (a, prev, -a)
        let cup = gens::cup_l(ctx, a.unsigned_abs());
        let layer = if a > 0 { cup } else { gens::cup_r(ctx, a.unsigned_abs()) };
        // place prev inside
        let mid = gens::identity(ctx, &[a]).kron(&coev).kron(&gens::identity(ctx, &[-a]));
        let _ = mid;
        coev = splice_cup(ctx, &coev, a, &layer)?;
    }
    // nested evaluations (dual_cod, cod) -> 1
    let mut ev = gens::identity(ctx, &[]);
    for &b in cod.iter().rev() {
        let cap = if b > 0 {
            gens::cap_l(ctx, b.unsigned_abs())
        } else {
            gens::cap_r(ctx, b.unsigned_abs())
        };
        ev = splice_cap(ctx, &ev, b, &cap)?;
    }
    let step1 = gens::identity(ctx, &dual_cod).kron(&coev);
    let step2 = gens::identity(ctx, &dual_cod)
        .kron(f)
        .kron(&gens::identity(ctx, &dual_dom));
    let step3 = ev.kron(&gens::identity(ctx, &dual_dom));
    step3.compose(&step2.compose(&step1)?)
}

fn splice_cup(ctx: &LeviDatum, inner: &LinMap, a: i32, cup: &LinMap) -> Result<LinMap> {
    // 1 -> (a, -a), then insert `inner` between the two new strands
    let grown = gens::identity(ctx, &[a]).kron(inner).kron(&gens::identity(ctx, &[-a]));
    grown.compose(cup)
}

fn splice_cap(ctx: &LeviDatum, inner: &LinMap, b: i32, cap: &LinMap) -> Result<LinMap> {
    let grown = gens::identity(ctx, &[-b]).kron(inner).kron(&gens::identity(ctx, &[b]));
    cap.compose(&grown)
}

fn dual_explode(ctx: &LeviDatum, k: u32) -> LinMap {
    if k <= 1 {
        return gens::identity(ctx, &[-(k as i32)]);
    }
    let inner = dual_explode(ctx, k - 1);
    gens::embed(ctx, &[-1], &inner, &[])
        .compose(&gens::dsplit(ctx, 1, k - 1))
        .expect("dual explode shapes")
}

fn dual_implode(ctx: &LeviDatum, k: u32) -> LinMap {
    if k <= 1 {
        return gens::identity(ctx, &[-(k as i32)]);
    }
    let inner = dual_implode(ctx, k - 1);
    gens::dmerge(ctx, 1, k - 1)
        .compose(&gens::embed(ctx, &[-1], &inner, &[]))
        .expect("dual implode shapes")
}

fn full_twist_transport_down_check(ctx: &LeviDatum, k: u32, l: u32) -> Result<(bool, String)> {
    let kl = k + l;
    let dft = mate_rotate180(ctx, &full_twist(ctx, kl))?;
    let core = dft.compose(&dual_explode(ctx, kl))?;
    let lhs = dual_implode(ctx, k)
        .kron(&dual_implode(ctx, l))
        .compose(&core)?
        .scale(&(&qfac(k) * &qfac(l)).recip());
    let rhs = gens::dsplit(ctx, k, l)
        .compose(&dual_implode(ctx, kl).compose(&core)?)?
        .scale(&qfac(kl).recip());
    Ok(mat_eq(&lhs, &rhs))
}

fn permutation_matrix(ctx: &LeviDatum, perm: &[usize]) -> LinMap {
    let m = perm.len();
    let space = ctx.space(&vec![1; m]);
    let n = ctx.n as usize;
    let mut mat = LinMap::zero_map(space.clone(), space);
    for col in 0..n.pow(m as u32) {
        // digits of the column in base n, most significant first
        let mut digits = vec![0usize; m];
        let mut rem = col;
        for i in (0..m).rev() {
            digits[i] = rem % n;
            rem /= n;
        }
        // strand r carries digits[r] to position perm[r]
        let mut target = vec![0usize; m];
        for r in 0..m {
            target[perm[r]] = digits[r];
        }
        let row = target.iter().fold(0usize, |acc, &d| acc * n + d);
        mat.set(row, col, FieldElem::one());
    }
    mat
}

fn antisymmetrizer_check(ctx: &LeviDatum, block: usize, strands: usize) -> Result<(bool, String)> {
    // at v -> 1 the signed sum of permutations composed with block projectors
    // vanishes as soon as strands exceed the block size
    let proj = block_projector(ctx, block);
    let mut projs = proj.clone();
    for _ in 1..strands {
        projs = projs.kron(&proj);
    }
    let mut acc: Option<LinMap> = None;
    for perm in all_permutations(strands) {
        let sign = crate::combinatorics::inversions(&perm) % 2;
        let mut term = permutation_matrix(ctx, &perm).compose(&projs)?;
        if sign == 1 {
            term = term.scale(&(-FieldElem::one()));
        }
        acc = Some(match acc {
            None => term,
            Some(a) => a.add_mat(&term)?,
        });
    }
    let total = acc.unwrap().spec_v1();
    Ok((total.is_zero_map(), "antisymmetrizer nonzero".into()))
}

// ------------------------------------------------------------- monoidality

fn suite_monoidality(_bounds: &Bounds) -> SuiteReport {
    let mut rec = Recorder::new("monoidality");
    let ctx = LeviDatum::new(2, vec![1, 1]).unwrap();
    let f = WebTerm::CoilSlice(vec![1], Direction::Winding);
    let g = WebTerm::Id(vec![1]);
    rec.record("witness_differs_generic", "n=2 comp=[1,1]".into(), || {
        let skein = skein_tensor(&f, &g, &ctx)?;
        let hopf = hopf_tensor(&f, &g);
        let ms = evaluate(&skein, &ctx, &EvalMode::Exact)?;
        let mh = evaluate(&hopf, &ctx, &EvalMode::Exact)?;
        Ok((!ms.equals(&mh), "products agreed at generic q".into()))
    });
    rec.record("witness_agrees_at_v1", "n=2 comp=[1,1]".into(), || {
        let skein = skein_tensor(&f, &g, &ctx)?;
        let hopf = hopf_tensor(&f, &g);
        let ms = evaluate(&skein, &ctx, &EvalMode::V1)?;
        let mh = evaluate(&hopf, &ctx, &EvalMode::V1)?;
        Ok(mat_eq(&ms, &mh))
    });
    rec.record("planar_pair_agrees", "n=2".into(), || {
        let ctx = LeviDatum::full(2);
        let f = WebTerm::Gen(Gen::Merge(1, 1));
        let g = WebTerm::Gen(Gen::Split(1, 1));
        let ms = evaluate(&skein_tensor(&f, &g, &ctx)?, &ctx, &EvalMode::Exact)?;
        let mh = evaluate(&hopf_tensor(&f, &g), &ctx, &EvalMode::Exact)?;
        Ok(mat_eq(&ms, &mh))
    });
    // the skein product is associative and functorial in both arguments
    let coil11 = WebTerm::CoilSlice(vec![1, 1], Direction::Winding);
    let chain = WebTerm::compose(
        WebTerm::CoilSlice(vec![1], Direction::Inverse),
        WebTerm::CoilSlice(vec![1], Direction::Winding),
    );
    let triples: Vec<(&str, WebTerm, WebTerm, WebTerm)> = vec![
        ("coil,id,coil", f.clone(), g.clone(), f.clone()),
        ("coil,coil,id", f.clone(), f.clone(), g.clone()),
        ("coil11,id,coil", coil11.clone(), g.clone(), f.clone()),
        ("chain,coil,id", chain.clone(), f.clone(), g.clone()),
    ];
    for (name, a, b, cterm) in triples {
        rec.record("skein_associative", name.into(), || {
            let ab = skein_tensor(&a, &b, &ctx)?;
            let left = skein_tensor(&ab, &cterm, &ctx)?;
            let bc = skein_tensor(&b, &cterm, &ctx)?;
            let right = skein_tensor(&a, &bc, &ctx)?;
            let ml = evaluate(&left, &ctx, &EvalMode::Exact)?;
            let mr = evaluate(&right, &ctx, &EvalMode::Exact)?;
            Ok(mat_eq(&ml, &mr))
        });
    }
    rec.record("skein_functorial", "coil chain vs merge-split".into(), || {
        let f1 = WebTerm::CoilSlice(vec![1], Direction::Winding);
        let f2 = WebTerm::CoilSlice(vec![1], Direction::Inverse);
        let g1 = WebTerm::Gen(Gen::Merge(1, 1));
        let g2 = WebTerm::Gen(Gen::Split(1, 1));
        let lhs = skein_tensor(
            &WebTerm::compose(f2.clone(), f1.clone()),
            &WebTerm::compose(g2.clone(), g1.clone()),
            &ctx,
        )?;
        let top = skein_tensor(&f2, &g2, &ctx)?;
        let bottom = skein_tensor(&f1, &g1, &ctx)?;
        let ml = evaluate(&lhs, &ctx, &EvalMode::Exact)?;
        let mr = evaluate(&WebTerm::compose(top, bottom), &ctx, &EvalMode::Exact)?;
        Ok(mat_eq(&ml, &mr))
    });
    rec.record("v1_agreement_coil_pairs", "n=2 comp=[1,1]".into(), || {
        for (a, b) in [(coil11.clone(), f.clone()), (chain.clone(), f.clone())] {
            let sk = skein_tensor(&a, &b, &ctx)?;
            let ho = hopf_tensor(&a, &b);
            let ms = evaluate(&sk, &ctx, &EvalMode::V1)?;
            let mh = evaluate(&ho, &ctx, &EvalMode::V1)?;
            let (ok, detail) = mat_eq(&ms, &mh);
            if !ok {
                return Ok((false, detail));
            }
        }
        Ok((true, String::new()))
    });
    rec.finish()
}

// -------------------------------------------------------------- ariki-koike

fn suite_ariki_koike(bounds: &Bounds, seed: u64) -> SuiteReport {
    let mut rec = Recorder::new("ariki_koike");
    let cfg = AkConfig::default();
    for n in 1..=bounds.n_max.min(3) {
        for comp in compositions(n) {
            let ctx = LeviDatum::new(n, comp.clone()).unwrap();
            let tag = format!("n={n} comp={comp:?}");
            for m in 1..=bounds.m_max.min(3) {
                rec.record("defining_relations", format!("{tag} m={m}"), || {
                    let failures = ak::check_ak_relations(&ctx, &cfg, m)?;
                    Ok((failures.is_empty(), format!("{failures:?}")))
                });
                rec.record("jm_package", format!("{tag} m={m}"), || {
                    let failures = ak::check_jm(&ctx, &cfg, m)?;
                    Ok((failures.is_empty(), format!("{failures:?}")))
                });
                rec.record("rank_equals_dimension", format!("{tag} m={m}"), || {
                    let rank = ak::image_rank(&ctx, &cfg, m, seed, false)?;
                    let dim = ak::blob_dimension(&ctx, m);
                    Ok((rank == dim, format!("rank {rank}, dimension {dim}")))
                });
            }
            // kernel elements in the Cartan case
            if ctx.comp.iter().all(|&l| l == 1) {
                for m in 2..=bounds.m_max.min(3) {
                    rec.record("r2_kernel", format!("{tag} m={m}"), || {
                        let r2 = ak::r_element_image(&ctx, &cfg, 2, m)?;
                        Ok((r2.is_zero_map(), "R_2 image nonzero".into()))
                    });
                    rec.record("r1_kernel", format!("{tag} m={m}"), || {
                        let r1 = ak::r_element_image(&ctx, &cfg, 1, m)?;
                        Ok((r1.is_zero_map(), "R_1 image nonzero".into()))
                    });
                }
            }
        }
    }
    // the deep profile adds n = 2, m = 4
    if bounds.m_max >= 4 {
        let ctx = LeviDatum::cartan(2);
        rec.record("rank_equals_dimension", "n=2 comp=[1,1] m=4".into(), || {
            let rank = ak::image_rank(&ctx, &cfg, 4, seed, false)?;
            let dim = ak::blob_dimension(&ctx, 4);
            Ok((rank == dim, format!("rank {rank}, dimension {dim}")))
        });
    }
    rec.finish()
}

// ---------------------------------------------------------------- q1 basis

fn suite_q1_basis(bounds: &Bounds, seed: u64) -> SuiteReport {
    let mut rec = Recorder::new("q1_basis");
    let cfg = AkConfig::default();
    for n in 1..=bounds.n_max.min(3) {
        for comp in compositions(n) {
            let ctx = LeviDatum::new(n, comp.clone()).unwrap();
            for m in 1..=bounds.m_max.min(3) {
                rec.record(
                    "colored_count_equals_rank",
                    format!("n={n} comp={comp:?} m={m}"),
                    || {
                        let count = ak::q1_basis_count(&ctx, m)?;
                        let rank = ak::image_rank(&ctx, &cfg, m, seed, true)?;
                        let dim = ak::blob_dimension(&ctx, m);
                        Ok((
                            count == rank && rank == dim,
                            format!("count {count}, rank {rank}, dimension {dim}"),
                        ))
                    },
                );
            }
        }
    }
    rec.finish()
}

/// Run a named suite at the given bounds; the seed drives every random
/// specialization point.
pub fn run_suite(name: &str, bounds: &Bounds, seed: u64) -> Result<SuiteReport> {
    match name {
        "planar_relations" => Ok(suite_planar(bounds)),
        "derived_planar" => Ok(suite_derived(bounds)),
        "annular_relations" => Ok(suite_annular(bounds)),
        "circle_evaluation" => Ok(suite_circles(bounds)),
        "equivariance" => Ok(suite_equivariance(bounds)),
        "proof_lemmas" => Ok(suite_proof_lemmas(bounds)),
        "monoidality" => Ok(suite_monoidality(bounds)),
        "ariki_koike" => Ok(suite_ariki_koike(bounds, seed)),
        "q1_basis" => Ok(suite_q1_basis(bounds, seed)),
        _ => Err(Error::UnknownSuite(name.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small_bounds() -> Bounds {
        Bounds {
            n_max: 2,
            label_max: 2,
            width_max: 2,
            m_max: 2,
        }
    }

    #[test]
    fn unknown_suite_errors() {
        assert!(matches!(
            run_suite("nope", &Bounds::default(), 1),
            Err(Error::UnknownSuite(_))
        ));
    }

    #[test]
    fn planar_suite_small() {
        let report = run_suite("planar_relations", &small_bounds(), 1).unwrap();
        assert!(report.pass, "{:#?}", failing(&report));
    }

    #[test]
    fn derived_suite_small() {
        let report = run_suite("derived_planar", &small_bounds(), 1).unwrap();
        assert!(report.pass, "{:#?}", failing(&report));
    }

    #[test]
    fn annular_suite_small() {
        let report = run_suite("annular_relations", &small_bounds(), 1).unwrap();
        assert!(report.pass, "{:#?}", failing(&report));
    }

    #[test]
    fn circle_suite_small() {
        let report = run_suite("circle_evaluation", &small_bounds(), 1).unwrap();
        assert!(report.pass, "{:#?}", failing(&report));
    }

    #[test]
    fn equivariance_suite_small() {
        let report = run_suite("equivariance", &small_bounds(), 1).unwrap();
        assert!(report.pass, "{:#?}", failing(&report));
    }

    #[test]
    fn proof_lemmas_suite_small() {
        let report = run_suite("proof_lemmas", &small_bounds(), 1).unwrap();
        assert!(report.pass, "{:#?}", failing(&report));
    }

    #[test]
    fn monoidality_suite() {
        let report = run_suite("monoidality", &Bounds::default(), 1).unwrap();
        assert!(report.pass, "{:#?}", failing(&report));
    }

    #[test]
    fn ak_suite_small() {
        let report = run_suite("ariki_koike", &small_bounds(), 1).unwrap();
        assert!(report.pass, "{:#?}", failing(&report));
    }

    #[test]
    fn q1_suite_small() {
        let report = run_suite("q1_basis", &small_bounds(), 1).unwrap();
        assert!(report.pass, "{:#?}", failing(&report));
    }

    #[test]
    fn reports_are_deterministic() {
        let a = run_suite("circle_evaluation", &small_bounds(), 5).unwrap();
        let b = run_suite("circle_evaluation", &small_bounds(), 5).unwrap();
        let strip = |r: &SuiteReport| {
            r.instances
                .iter()
                .map(|i| (i.instance.clone(), i.params.clone(), i.status.clone(), i.detail.clone()))
                .collect::<Vec<_>>()
        };
        assert_eq!(strip(&a), strip(&b));
    }

    fn failing(report: &SuiteReport) -> Vec<&InstanceReport> {
        report
            .instances
            .iter()
            .filter(|i| i.status != "pass")
            .collect()
    }
}

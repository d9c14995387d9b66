//! The evaluation functor: web terms to exact matrices, together with the
//! two monoidal products on annular terms.

use crate::error::{Error, Result};
use crate::rep::coil::{coil_matrix, Direction};
use crate::rep::gens::{self, CrossKind};
use crate::rep::{LeviDatum, Mode};
use crate::scalar::{specialize, Assignment};
use crate::LinMap;

use super::ast::{Gen, WebTerm};
use super::typecheck::typecheck;

/// How to evaluate: exact in `v`, at `v -> 1`, or at an explicit assignment.
#[derive(Clone, Debug, Default)]
pub enum EvalMode {
    #[default]
    Exact,
    V1,
    Specialized(Assignment),
}

impl EvalMode {
    pub fn from_ctx(ctx: &LeviDatum) -> EvalMode {
        match ctx.mode {
            Mode::QGeneric => EvalMode::Exact,
            Mode::V1 => EvalMode::V1,
        }
    }
}

/// Matrix of a single named generator. Edge labels must be nonnegative;
/// crossing labels may be signed (mates).
pub fn generator_matrix(ctx: &LeviDatum, g: &Gen) -> Result<LinMap> {
    super::typecheck::typecheck(&WebTerm::Gen(g.clone()), ctx)?;
    gen_matrix(ctx, g)
}

fn gen_matrix(ctx: &LeviDatum, g: &Gen) -> Result<LinMap> {
    Ok(match *g {
        Gen::Merge(k, l) => gens::merge(ctx, k as u32, l as u32),
        Gen::Split(k, l) => gens::split(ctx, k as u32, l as u32),
        Gen::DMerge(k, l) => gens::dmerge(ctx, k as u32, l as u32),
        Gen::DSplit(k, l) => gens::dsplit(ctx, k as u32, l as u32),
        Gen::CapL(k) => gens::cap_l(ctx, k as u32),
        Gen::CapR(k) => gens::cap_r(ctx, k as u32),
        Gen::CupL(k) => gens::cup_l(ctx, k as u32),
        Gen::CupR(k) => gens::cup_r(ctx, k as u32),
        Gen::Over(a, b) => gens::crossing(ctx, a, b, CrossKind::Over)?,
        Gen::Under(a, b) => gens::crossing(ctx, a, b, CrossKind::Under)?,
    })
}

fn eval_exact(term: &WebTerm, ctx: &LeviDatum) -> Result<LinMap> {
    match term {
        WebTerm::Gen(g) => gen_matrix(ctx, g),
        WebTerm::Id(w) => Ok(gens::identity(ctx, w)),
        WebTerm::HTensor(a, b) => {
            let ma = eval_exact(a, ctx)?;
            let mb = eval_exact(b, ctx)?;
            Ok(ma.kron(&mb))
        }
        WebTerm::VCompose(top, bottom) => {
            let mb = eval_exact(bottom, ctx)?;
            let mt = eval_exact(top, ctx)?;
            mt.compose(&mb)
        }
        WebTerm::CoilSlice(w, dir) => coil_matrix(ctx, w, *dir),
        WebTerm::SkeinTensor(a, b) => {
            let lowered = skein_tensor(a, b, ctx)?;
            eval_exact(&lowered, ctx)
        }
        WebTerm::Scale(c, t) => Ok(eval_exact(t, ctx)?.scale(c)),
        WebTerm::Sum(a, b) => eval_exact(a, ctx)?.add_mat(&eval_exact(b, ctx)?),
    }
}

/// Evaluate a term, functorially: composition to composition, tensor to
/// Kronecker product, coils to coil matrices.
pub fn evaluate(term: &WebTerm, ctx: &LeviDatum, mode: &EvalMode) -> Result<LinMap> {
    typecheck(term, ctx)?;
    let exact = eval_exact(term, ctx)?;
    match mode {
        EvalMode::Exact => Ok(exact),
        EvalMode::V1 => Ok(exact.spec_v1()),
        EvalMode::Specialized(assignment) => {
            let mut out = LinMap::zero_map(exact.domain.clone(), exact.codomain.clone());
            for (r, c, v) in exact.entries() {
                let s = specialize(v, assignment)?;
                out.set(r, c, s);
            }
            Ok(out)
        }
    }
}

/// The Hopf-side monoidal product: plain juxtaposition of the terms.
pub fn hopf_tensor(f: &WebTerm, g: &WebTerm) -> WebTerm {
    WebTerm::tensor(f.clone(), g.clone())
}

/// Which way coils pass relative to the annulus in the skein product. The
/// inverse-braiding convention corresponds to coils passing behind.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum SkeinConvention {
    #[default]
    FrontOfAnnulus,
    BehindAnnulus,
}

fn flatten_slices(term: &WebTerm, out: &mut Vec<WebTerm>) {
    match term {
        WebTerm::VCompose(top, bottom) => {
            flatten_slices(bottom, out);
            flatten_slices(top, out);
        }
        other => out.push(other.clone()),
    }
}

fn contains_coil(term: &WebTerm) -> bool {
    match term {
        WebTerm::CoilSlice(..) => true,
        WebTerm::Gen(_) | WebTerm::Id(_) => false,
        WebTerm::HTensor(a, b) | WebTerm::VCompose(a, b) | WebTerm::SkeinTensor(a, b) => {
            contains_coil(a) || contains_coil(b)
        }
        WebTerm::Scale(_, t) => contains_coil(t),
        WebTerm::Sum(a, b) => contains_coil(a) || contains_coil(b),
    }
}

/// Chain moving the strand of label `a` (currently rightmost after `mid`,
/// beyond the spectators `spect`) leftward across the spectators. `front`
/// says whether the moving strand passes in front.
fn return_chain_left(mid: &[i32], spect: &[i32], a: i32, front: bool) -> WebTerm {
    // word: (mid, spect, a) -> (mid, a, spect), one crossing per spectator
    let mut term: Option<WebTerm> = None;
    for t in (0..spect.len()).rev() {
        // current word: (mid, spect[..t+1], a, spect[t+1..])
        let cross = if front {
            WebTerm::Gen(Gen::Under(spect[t], a))
        } else {
            WebTerm::Gen(Gen::Over(spect[t], a))
        };
        let mut layer = cross;
        let mut left: Vec<i32> = mid.to_vec();
        left.extend(&spect[..t]);
        if !left.is_empty() {
            layer = WebTerm::tensor(WebTerm::Id(left), layer);
        }
        if t + 1 < spect.len() {
            layer = WebTerm::tensor(layer, WebTerm::Id(spect[t + 1..].to_vec()));
        }
        term = Some(match term {
            None => layer,
            Some(acc) => WebTerm::compose(layer, acc),
        });
    }
    term.unwrap_or(WebTerm::Id({
        let mut w = mid.to_vec();
        w.push(a);
        w
    }))
}

/// Inverse of `return_chain_left`: carry `a` rightward across the spectators.
fn return_chain_right(mid: &[i32], spect: &[i32], a: i32, front: bool) -> WebTerm {
    // word: (mid, a, spect) -> (mid, spect, a)
    let mut term: Option<WebTerm> = None;
    for t in 0..spect.len() {
        let cross = if front {
            WebTerm::Gen(Gen::Over(a, spect[t]))
        } else {
            WebTerm::Gen(Gen::Under(a, spect[t]))
        };
        let mut layer = cross;
        let mut left: Vec<i32> = mid.to_vec();
        left.extend(&spect[..t]);
        if !left.is_empty() {
            layer = WebTerm::tensor(WebTerm::Id(left), layer);
        }
        if t + 1 < spect.len() {
            layer = WebTerm::tensor(layer, WebTerm::Id(spect[t + 1..].to_vec()));
        }
        term = Some(match term {
            None => layer,
            Some(acc) => WebTerm::compose(layer, acc),
        });
    }
    term.unwrap_or(WebTerm::Id({
        let mut w = mid.to_vec();
        w.push(a);
        w
    }))
}

/// One slice of the front term, with the back term's domain as spectators
/// passing behind it on the right.
fn front_slice(slice: &WebTerm, spect: &[i32], ctx: &LeviDatum, front: bool) -> Result<WebTerm> {
    match slice {
        WebTerm::CoilSlice(w, Direction::Winding) => {
            let (first, rest) = w.split_first().ok_or_else(|| {
                Error::ShapeMismatch("empty coil in skein product".into())
            })?;
            let mut big = w.clone();
            big.extend_from_slice(spect);
            let coil = WebTerm::CoilSlice(big, Direction::Winding);
            // after the full coil the strand sits past the spectators; bring
            // it back left
            let chain = return_chain_left(rest, spect, *first, front);
            Ok(WebTerm::compose(chain, coil))
        }
        WebTerm::CoilSlice(w, Direction::Inverse) => {
            let (first, rest) = w.split_first().ok_or_else(|| {
                Error::ShapeMismatch("empty coil in skein product".into())
            })?;
            let mut big = w.clone();
            big.extend_from_slice(spect);
            let coil = WebTerm::CoilSlice(big, Direction::Inverse);
            let chain = return_chain_right(rest, spect, *first, front);
            Ok(WebTerm::compose(coil, chain))
        }
        WebTerm::Scale(c, t) => Ok(WebTerm::Scale(
            c.clone(),
            Box::new(front_slice(t, spect, ctx, front)?),
        )),
        planar if !contains_coil(planar) => {
            if spect.is_empty() {
                Ok(planar.clone())
            } else {
                Ok(WebTerm::tensor(planar.clone(), WebTerm::Id(spect.to_vec())))
            }
        }
        _ => Err(Error::ShapeMismatch(
            "coil buried inside a slice cannot be skein-composed".into(),
        )),
    }
}

/// One slice of the back term, with the front term's codomain as spectators
/// passing in front of it on the left.
fn back_slice(slice: &WebTerm, spect: &[i32], ctx: &LeviDatum, front: bool) -> Result<WebTerm> {
    match slice {
        WebTerm::CoilSlice(w, Direction::Winding) => {
            let (first, rest) = w.split_first().ok_or_else(|| {
                Error::ShapeMismatch("empty coil in skein product".into())
            })?;
            // move the winding strand left across the spectators first
            let chain = return_chain_left(&[], spect, *first, front);
            // word before the coil: (first, spect, rest)
            let mut big = vec![*first];
            big.extend_from_slice(spect);
            big.extend_from_slice(rest);
            let coil = WebTerm::CoilSlice(big, Direction::Winding);
            let chain = attach_right(chain, rest);
            Ok(WebTerm::compose(coil, chain))
        }
        WebTerm::CoilSlice(w, Direction::Inverse) => {
            let (first, rest) = w.split_first().ok_or_else(|| {
                Error::ShapeMismatch("empty coil in skein product".into())
            })?;
            let mut big = vec![*first];
            big.extend_from_slice(spect);
            big.extend_from_slice(rest);
            let coil = WebTerm::CoilSlice(big, Direction::Inverse);
            let chain = attach_right(return_chain_right(&[], spect, *first, front), rest);
            Ok(WebTerm::compose(chain, coil))
        }
        WebTerm::Scale(c, t) => Ok(WebTerm::Scale(
            c.clone(),
            Box::new(back_slice(t, spect, ctx, front)?),
        )),
        planar if !contains_coil(planar) => {
            if spect.is_empty() {
                Ok(planar.clone())
            } else {
                Ok(WebTerm::tensor(WebTerm::Id(spect.to_vec()), planar.clone()))
            }
        }
        _ => Err(Error::ShapeMismatch(
            "coil buried inside a slice cannot be skein-composed".into(),
        )),
    }
}

fn attach_right(term: WebTerm, rest: &[i32]) -> WebTerm {
    if rest.is_empty() {
        term
    } else {
        WebTerm::tensor(term, WebTerm::Id(rest.to_vec()))
    }
}

/// The skein-side monoidal product: `f` in front, `g` in back, with the
/// crossings the layering dictates.
pub fn skein_tensor(f: &WebTerm, g: &WebTerm, ctx: &LeviDatum) -> Result<WebTerm> {
    skein_tensor_with(f, g, ctx, SkeinConvention::FrontOfAnnulus)
}

/// Skein product with an explicit layering convention.
pub fn skein_tensor_with(
    f: &WebTerm,
    g: &WebTerm,
    ctx: &LeviDatum,
    convention: SkeinConvention,
) -> Result<WebTerm> {
    let (_fd, fc) = typecheck(f, ctx)?;
    let (gd, _gc) = typecheck(g, ctx)?;
    // sums distribute through the product
    if let WebTerm::Sum(a, b) = f {
        return Ok(WebTerm::Sum(
            Box::new(skein_tensor_with(a, g, ctx, convention)?),
            Box::new(skein_tensor_with(b, g, ctx, convention)?),
        ));
    }
    if let WebTerm::Sum(a, b) = g {
        return Ok(WebTerm::Sum(
            Box::new(skein_tensor_with(f, a, ctx, convention)?),
            Box::new(skein_tensor_with(f, b, ctx, convention)?),
        ));
    }
    let f_front = convention == SkeinConvention::FrontOfAnnulus;
    let mut f_slices = Vec::new();
    flatten_slices(f, &mut f_slices);
    let mut g_slices = Vec::new();
    flatten_slices(g, &mut g_slices);

    let mut acc: Option<WebTerm> = None;
    for slice in &f_slices {
        let lowered = front_slice(slice, &gd, ctx, f_front)?;
        acc = Some(match acc {
            None => lowered,
            Some(t) => WebTerm::compose(lowered, t),
        });
    }
    for slice in &g_slices {
        let lowered = back_slice(slice, &fc, ctx, !f_front)?;
        acc = Some(match acc {
            None => lowered,
            Some(t) => WebTerm::compose(lowered, t),
        });
    }
    acc.ok_or_else(|| Error::ShapeMismatch("empty skein product".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rep::gens::identity;
    use crate::scalar::{parse_scalar, FieldElem};
    use crate::web::parse::parse;
    use num_traits::One;

    fn eval(src: &str, ctx: &LeviDatum) -> Result<LinMap> {
        evaluate(&parse(src).unwrap(), ctx, &EvalMode::Exact)
    }

    #[test]
    fn digon_scalar() {
        let ctx = LeviDatum::full(2);
        let m = eval("split(1,1) ; merge(1,1)", &ctx).unwrap();
        let expect = identity(&ctx, &[2]).scale(&parse_scalar("v + v^-1").unwrap());
        assert!(m.equals(&expect));
    }

    #[test]
    fn closed_loop_scalar() {
        let ctx = LeviDatum::full(2);
        let m = eval("cupL(1) ; capR(1)", &ctx).unwrap();
        assert_eq!(m.get(0, 0), parse_scalar("v + v^-1").unwrap());
    }

    #[test]
    fn coil_inverse_pair() {
        let ctx = LeviDatum::new(2, vec![1, 1]).unwrap();
        let m = eval("coil([1]) ; coil_inv([1])", &ctx).unwrap();
        assert!(m.equals(&identity(&ctx, &[1])));
        let m = eval("coil([1,1]) ; coil_inv([1,1])", &ctx).unwrap();
        assert!(m.equals(&identity(&ctx, &[1, 1])));
    }

    #[test]
    fn typecheck_failure_propagates() {
        let ctx = LeviDatum::full(2);
        assert!(eval("merge(1,1) ; capR(1)", &ctx).is_err());
    }

    #[test]
    fn interchange_law() {
        let ctx = LeviDatum::full(2);
        let a = eval("merge(1,1) * id([2]) ; id([2]) * split(1,1)", &ctx).unwrap();
        let b = eval("id([1,1]) * split(1,1) ; merge(1,1) * id([1,1])", &ctx).unwrap();
        assert!(a.equals(&b));
    }

    #[test]
    fn monoidality_witness() {
        // coil (x) id: skein and Hopf products differ at generic q, agree at v=1
        let ctx = LeviDatum::new(2, vec![1, 1]).unwrap();
        let f = parse("coil([1])").unwrap();
        let g = parse("id([1])").unwrap();
        let skein = skein_tensor(&f, &g, &ctx).unwrap();
        let hopf = hopf_tensor(&f, &g);
        let ms = evaluate(&skein, &ctx, &EvalMode::Exact).unwrap();
        let mh = evaluate(&hopf, &ctx, &EvalMode::Exact).unwrap();
        assert!(!ms.equals(&mh));
        let ms1 = evaluate(&skein, &ctx, &EvalMode::V1).unwrap();
        let mh1 = evaluate(&hopf, &ctx, &EvalMode::V1).unwrap();
        assert!(ms1.equals(&mh1));
    }

    #[test]
    fn behind_convention_also_collapses_at_v1() {
        let ctx = LeviDatum::new(2, vec![1, 1]).unwrap();
        let f = parse("coil([1])").unwrap();
        let g = parse("id([1])").unwrap();
        let front = skein_tensor_with(&f, &g, &ctx, SkeinConvention::FrontOfAnnulus).unwrap();
        let behind = skein_tensor_with(&f, &g, &ctx, SkeinConvention::BehindAnnulus).unwrap();
        let mf = evaluate(&front, &ctx, &EvalMode::Exact).unwrap();
        let mb = evaluate(&behind, &ctx, &EvalMode::Exact).unwrap();
        assert!(!mf.equals(&mb));
        let mf1 = evaluate(&front, &ctx, &EvalMode::V1).unwrap();
        let mb1 = evaluate(&behind, &ctx, &EvalMode::V1).unwrap();
        assert!(mf1.equals(&mb1));
    }

    #[test]
    fn planar_pair_products_agree() {
        let ctx = LeviDatum::full(2);
        let f = parse("merge(1,1)").unwrap();
        let g = parse("split(1,1)").unwrap();
        let skein = skein_tensor(&f, &g, &ctx).unwrap();
        let hopf = hopf_tensor(&f, &g);
        let ms = evaluate(&skein, &ctx, &EvalMode::Exact).unwrap();
        let mh = evaluate(&hopf, &ctx, &EvalMode::Exact).unwrap();
        assert!(ms.equals(&mh));
    }

    #[test]
    fn skein_at_sign_in_dsl() {
        let ctx = LeviDatum::new(2, vec![1, 1]).unwrap();
        let m = eval("(coil([1])) @ (id([1]))", &ctx).unwrap();
        assert_eq!(m.domain.word, vec![1, 1]);
        assert_eq!(m.codomain.word, vec![1, 1]);
    }

    #[test]
    fn specialized_mode() {
        let ctx = LeviDatum::full(2);
        let asn = Assignment {
            v: FieldElem::constant(3),
            u: vec![FieldElem::one()],
        };
        let m = evaluate(
            &parse("split(1,1) ; merge(1,1)").unwrap(),
            &ctx,
            &EvalMode::Specialized(asn),
        )
        .unwrap();
        // [2] at v=3 is 3 + 1/3 = 10/3
        let ten_thirds = &FieldElem::constant(10) * &FieldElem::constant(3).recip();
        assert_eq!(m.get(0, 0), ten_thirds);
    }
}

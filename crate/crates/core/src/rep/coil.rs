//! Coil images: the maps transporting a boundary strand once around the
//! annulus, and the essential-circle evaluations.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::{elementary_symmetric, FieldElem};
use crate::LinMap;

use super::gens::{cap_l, cap_r, cup_l, cup_r, embed, explode, identity, implode, CrossKind};
use super::levi::{full_twist, levi_braid_past, levi_braid_past_inv, u_map_signed};
use super::LeviDatum;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Direction {
    Winding,
    Inverse,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Side {
    Left,
    Right,
}

/// The once-around monodromy on one thick strand of label `k >= 0`:
/// `[k]!^{-1} implode . ft . u . explode`.
pub fn monodromy(ctx: &LeviDatum, k: u32) -> LinMap {
    if k == 0 {
        return identity(ctx, &[]);
    }
    let start = u_map_signed(ctx, k, 1)
        .compose(&explode(ctx, k))
        .expect("monodromy shapes");
    let mut word = crate::rep::levi::longest_word(k);
    let copy = word.clone();
    word.extend(copy);
    let moved = crate::rep::gens::apply_braid_layers(
        ctx,
        k as usize,
        &word,
        &crate::rep::levi::levi_thin_crossing(ctx, super::gens::CrossKind::Over),
        start,
    );
    let composite = implode(ctx, k).compose(&moved).expect("monodromy shapes");
    divide_by_qfac(composite, k)
}

/// Inverse monodromy: `[k]!^{-1} implode . u^{-1} . ft^{-1} . explode`.
pub fn monodromy_inv(ctx: &LeviDatum, k: u32) -> LinMap {
    if k == 0 {
        return identity(ctx, &[]);
    }
    let mut word = crate::rep::levi::longest_word(k);
    word.reverse();
    let copy = word.clone();
    word.extend(copy);
    let moved = crate::rep::gens::apply_braid_layers(
        ctx,
        k as usize,
        &word,
        &crate::rep::levi::levi_thin_crossing(ctx, super::gens::CrossKind::Under),
        explode(ctx, k),
    );
    let composite = implode(ctx, k)
        .compose(&u_map_signed(ctx, k, -1))
        .and_then(|m| m.compose(&moved))
        .expect("monodromy shapes");
    divide_by_qfac(composite, k)
}

fn divide_by_qfac(mut m: LinMap, k: u32) -> LinMap {
    for i in 2..=k as i64 {
        m = m.scale(&FieldElem::one().div_qint(i));
    }
    m
}

/// `ft . u` preserves the image of the explosion embedding; checked directly
/// for the given `k`.
pub fn explosion_image_invariant(ctx: &LeviDatum, k: u32) -> bool {
    if k <= 1 {
        return true;
    }
    let expl = explode(ctx, k);
    let impl_ = implode(ctx, k);
    let tu = full_twist(ctx, k)
        .compose(&u_map_signed(ctx, k, 1))
        .unwrap();
    // e = [k]!^{-1} explode . implode is the projector onto the image
    let moved = tu.compose(&expl).unwrap();
    let projected = divide_by_qfac(
        expl.compose(&impl_).unwrap().compose(&moved).unwrap(),
        k,
    );
    projected.equals(&moved)
}

/// Image of the coil generator on the word `(first, rest...)`:
/// `winding: (k_1, K') -> (K', k_1)` or its inverse `(K', k_1) -> (k_1, K')`.
pub fn coil_matrix(ctx: &LeviDatum, word: &[i32], direction: Direction) -> Result<LinMap> {
    let Some((&first, rest)) = word.split_first() else {
        return Ok(identity(ctx, &[]));
    };
    if first == 0 || rest.contains(&0) {
        return Err(Error::NegativeLabel);
    }
    if first.unsigned_abs() > ctx.n as u32 {
        // zero-dimensional strand space; the coil is the empty matrix
        let mut rotated: Vec<i32> = rest.to_vec();
        rotated.push(first);
        let (dom, cod) = match direction {
            Direction::Winding => (ctx.space(word), ctx.space(&rotated)),
            Direction::Inverse => (ctx.space(&rotated), ctx.space(word)),
        };
        return Ok(LinMap::zero_map(dom, cod));
    }
    match (first > 0, direction) {
        (true, Direction::Winding) => {
            let chain = levi_braid_past(ctx, first, rest, CrossKind::Over)?;
            let mono = embed(ctx, &[], &monodromy(ctx, first as u32), rest);
            chain.compose(&mono)
        }
        (true, Direction::Inverse) => {
            let chain = levi_braid_past_inv(ctx, first, rest, CrossKind::Under)?;
            let mono = embed(ctx, &[], &monodromy_inv(ctx, first as u32), rest);
            mono.compose(&chain)
        }
        (false, Direction::Winding) => {
            // bend: cup a dual pair on the right, wind the positive strand
            // backwards through the enlarged word, cap on the left
            let k = first.unsigned_abs();
            let ki = k as i32;
            let mut enlarged = vec![first];
            enlarged.extend_from_slice(rest);
            enlarged.push(-ki);
            let inner_word: Vec<i32> = std::iter::once(ki).chain(enlarged.iter().copied()).collect();
            let step1 = embed(ctx, &[first], &identity(ctx, rest), &[]).kron(&cup_r(ctx, k));
            let step2 = coil_matrix(ctx, &inner_word, Direction::Inverse)?;
            let mut tail = rest.to_vec();
            tail.push(first);
            let step3 = embed(ctx, &[], &cap_r(ctx, k), &tail);
            step3.compose(&step2.compose(&step1)?)
        }
        (false, Direction::Inverse) => {
            let k = first.unsigned_abs();
            let ki = k as i32;
            let mut enlarged = vec![first];
            enlarged.extend_from_slice(rest);
            enlarged.push(-ki);
            let inner_word: Vec<i32> = std::iter::once(ki).chain(enlarged.iter().copied()).collect();
            let mut dom = rest.to_vec();
            dom.push(first);
            let step1 = embed(ctx, &[], &cup_l(ctx, k), &dom);
            let step2 = coil_matrix(ctx, &inner_word, Direction::Winding)?;
            let step3 = embed(ctx, &[first], &identity(ctx, rest), &[])
                .kron(&cap_l(ctx, k));
            step3.compose(&step2.compose(&step1)?)
        }
    }
}

/// Closure of the coil: the scalar value of an essential `k`-circle.
pub fn essential_circle_value(ctx: &LeviDatum, k: u32, side: Side) -> Result<FieldElem> {
    if k == 0 {
        return Ok(FieldElem::one());
    }
    if k > ctx.n as u32 {
        return Ok(FieldElem::zero());
    }
    let ki = k as i32;
    let closure = match side {
        Side::Left => {
            let coil = coil_matrix(ctx, &[ki, -ki], Direction::Winding)?;
            cap_l(ctx, k).compose(&coil.compose(&cup_l(ctx, k))?)?
        }
        Side::Right => {
            let coil = coil_matrix(ctx, &[ki, -ki], Direction::Inverse)?;
            cap_r(ctx, k).compose(&coil.compose(&cup_r(ctx, k))?)?
        }
    };
    Ok(closure.get(0, 0))
}

/// The Levi evaluation: the elementary symmetric polynomial the circle must
/// equal.
pub fn predicted_circle_value(ctx: &LeviDatum, k: u32, side: Side) -> FieldElem {
    let mut args = Vec::with_capacity(ctx.n as usize);
    for (i, &l) in ctx.comp.iter().enumerate() {
        for j in 1..=l as i32 {
            let arg = match side {
                Side::Left => FieldElem::v(-2 * j + 1) * FieldElem::u(i + 1, 1),
                Side::Right => FieldElem::v(2 * j - 1) * FieldElem::u(i + 1, -1),
            };
            args.push(arg);
        }
    }
    elementary_symmetric(k as usize, &args)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::quantum_binomial;

    #[test]
    fn single_strand_coil_is_u_diagonal() {
        let ctx = LeviDatum::new(3, vec![2, 1]).unwrap();
        let coil = coil_matrix(&ctx, &[1], Direction::Winding).unwrap();
        for flat in 1..=3u8 {
            let idx = (flat - 1) as usize;
            assert_eq!(coil.get(idx, idx), FieldElem::u(ctx.block_of(flat), 1));
        }
        assert_eq!(coil.nnz(), 3);
    }

    #[test]
    fn winding_then_inverse_is_identity() {
        for comp in [vec![2], vec![1, 1]] {
            let ctx = LeviDatum::new(2, comp).unwrap();
            for word in [vec![1, 1], vec![1, -1], vec![2, 1], vec![-1, 1]] {
                let w = coil_matrix(&ctx, &word, Direction::Winding).unwrap();
                let i = coil_matrix(&ctx, &word, Direction::Inverse).unwrap();
                let round = i.compose(&w).unwrap();
                assert!(
                    round.equals(&identity(&ctx, &word)),
                    "word {word:?} comp {:?}",
                    ctx.comp
                );
                let round2 = w.compose(&i).unwrap();
                let mut rotated: Vec<i32> = word[1..].to_vec();
                rotated.push(word[0]);
                assert!(round2.equals(&identity(&ctx, &rotated)));
            }
        }
    }

    #[test]
    fn thick_coil_single_block() {
        // d = 1: the coil on the wedge square scales by u_1^2 times the
        // square of the braiding eigenvalue -q^{-1} on the wedge part
        let ctx = LeviDatum::full(2);
        let coil = coil_matrix(&ctx, &[2], Direction::Winding).unwrap();
        assert_eq!(coil.nnz(), 1);
        assert_eq!(coil.get(0, 0), FieldElem::u(1, 2) * FieldElem::v(-2));
        // independent of the ambient rank
        let ctx3 = LeviDatum::full(3);
        let coil3 = coil_matrix(&ctx3, &[2], Direction::Winding).unwrap();
        let expect = identity(&ctx3, &[2]).scale(&(FieldElem::u(1, 2) * FieldElem::v(-2)));
        assert!(coil3.equals(&expect));
    }

    #[test]
    fn explosion_image_invariance() {
        for comp in [vec![2], vec![1, 1]] {
            let ctx = LeviDatum::new(2, comp).unwrap();
            assert!(explosion_image_invariant(&ctx, 2));
        }
        let ctx = LeviDatum::new(3, vec![2, 1]).unwrap();
        assert!(explosion_image_invariant(&ctx, 3));
    }

    #[test]
    fn circle_value_gln() {
        // d = 1: left circle evaluates to v^{-kn} [n choose k] u_1^k
        for n in 1..=3u8 {
            let ctx = LeviDatum::full(n);
            for k in 0..=n as u32 {
                let got = essential_circle_value(&ctx, k, Side::Left).unwrap();
                let expect = FieldElem::v(-(k as i32) * n as i32)
                    * quantum_binomial(n as i64, k)
                    * FieldElem::u(1, k as i32);
                assert_eq!(got, expect, "left n={n} k={k}");
                let got = essential_circle_value(&ctx, k, Side::Right).unwrap();
                let expect = FieldElem::v(k as i32 * n as i32)
                    * quantum_binomial(n as i64, k)
                    * FieldElem::u(1, -(k as i32));
                assert_eq!(got, expect, "right n={n} k={k}");
            }
        }
    }

    #[test]
    fn circle_value_cartan_k1() {
        let ctx = LeviDatum::cartan(3);
        let got = essential_circle_value(&ctx, 1, Side::Left).unwrap();
        let expect = FieldElem::v(-1)
            * (&(&FieldElem::u(1, 1) + &FieldElem::u(2, 1)) + &FieldElem::u(3, 1));
        assert_eq!(got, expect);
        assert_eq!(got, predicted_circle_value(&ctx, 1, Side::Left));
    }

    #[test]
    fn circle_matches_prediction_mixed_composition() {
        let ctx = LeviDatum::new(3, vec![2, 1]).unwrap();
        for k in 0..=3u32 {
            for side in [Side::Left, Side::Right] {
                let got = essential_circle_value(&ctx, k, side).unwrap();
                let expect = predicted_circle_value(&ctx, k, side);
                assert_eq!(got, expect, "k={k} side={side:?}");
            }
        }
    }
}

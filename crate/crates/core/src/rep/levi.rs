//! Block-respecting braiding, block projectors, the Levi full twist and the
//! diagonal u-map.

use num_traits::One;

use crate::error::Result;
use crate::linalg::{BasisSpace, SparseMat};
use crate::scalar::FieldElem;
use crate::LinMap;

use super::gens::{crossing_with, embed, explode, identity, implode, shuffle_arrangement, CrossKind};
use super::LeviDatum;

fn q_pow(e: i64) -> FieldElem {
    FieldElem::v(e as i32)
}

/// Levi `(1,1)`-crossing: the `gl_{l_i}` braiding within a block, the plain
/// swap across blocks.
pub fn levi_thin_crossing(ctx: &LeviDatum, kind: CrossKind) -> LinMap {
    let space = BasisSpace::new(ctx.n, vec![1, 1]);
    let mut m = SparseMat::zero_map(space.clone(), space);
    let n = ctx.n as usize;
    for a in 1..=n as u8 {
        for b in 1..=n as u8 {
            let col = (a as usize - 1) * n + (b as usize - 1);
            let swapped = (b as usize - 1) * n + (a as usize - 1);
            if ctx.block_of(a) != ctx.block_of(b) {
                m.set(swapped, col, FieldElem::one());
                continue;
            }
            match (a == b, kind) {
                (true, CrossKind::Over) => m.set(col, col, q_pow(1)),
                (true, CrossKind::Under) => m.set(col, col, q_pow(-1)),
                (false, CrossKind::Over) => {
                    m.set(swapped, col, FieldElem::one());
                    if a > b {
                        m.set(col, col, &q_pow(1) - &q_pow(-1));
                    }
                }
                (false, CrossKind::Under) => {
                    m.set(swapped, col, FieldElem::one());
                    if a < b {
                        m.set(col, col, &q_pow(-1) - &q_pow(1));
                    }
                }
            }
        }
    }
    m
}

/// Composite of Levi thin crossings realizing an arrangement on `V^{(x) m}`.
pub fn levi_thin_braid(ctx: &LeviDatum, target: &[usize], kind: CrossKind) -> LinMap {
    let m = target.len();
    super::gens::apply_braid_layers(
        ctx,
        m,
        &super::gens::braid_word_for_arrangement(target),
        &levi_thin_crossing(ctx, kind),
        identity(ctx, &vec![1; m]),
    )
}

/// Levi `(k,l)`-crossing by explosion with Levi thin crossings inside.
pub fn levi_thick_crossing(ctx: &LeviDatum, k: u32, l: u32, kind: CrossKind) -> LinMap {
    if k == 0 || l == 0 {
        let w: Vec<i32> = [k as i32, l as i32].iter().copied().filter(|&x| x != 0).collect();
        return identity(ctx, &w);
    }
    if k == 1 && l == 1 {
        return levi_thin_crossing(ctx, kind);
    }
    let expl = explode(ctx, k).kron(&explode(ctx, l));
    let moved = super::gens::apply_braid_layers(
        ctx,
        (k + l) as usize,
        &super::gens::braid_word_for_arrangement(&shuffle_arrangement(
            k as usize,
            l as usize,
        )),
        &levi_thin_crossing(ctx, kind),
        expl,
    );
    let impl_ = implode(ctx, l).kron(&implode(ctx, k));
    let mut m = impl_.compose(&moved).expect("cross shapes");
    for i in 2..=k {
        m = m.scale(&FieldElem::one().div_qint(i as i64));
    }
    for i in 2..=l {
        m = m.scale(&FieldElem::one().div_qint(i as i64));
    }
    m
}

/// Levi crossing for arbitrary nonzero labels, via bending.
pub fn levi_crossing(ctx: &LeviDatum, a: i32, b: i32, kind: CrossKind) -> Result<LinMap> {
    crossing_with(ctx, a, b, kind, &levi_thick_crossing)
}

/// Chain of Levi crossings carrying a strand of label `a` from the left of
/// the word `rest` to its right: `(a, rest) -> (rest, a)`.
pub fn levi_braid_past(ctx: &LeviDatum, a: i32, rest: &[i32], kind: CrossKind) -> Result<LinMap> {
    let full: Vec<i32> = std::iter::once(a).chain(rest.iter().copied()).collect();
    let mut acc = identity(ctx, &full);
    for j in 0..rest.len() {
        let layer = embed(
            ctx,
            &rest[..j],
            &levi_crossing(ctx, a, rest[j], kind)?,
            &rest[j + 1..],
        );
        acc = layer.compose(&acc)?;
    }
    Ok(acc)
}

/// Inverse chain: `(rest, a) -> (a, rest)`.
pub fn levi_braid_past_inv(
    ctx: &LeviDatum,
    a: i32,
    rest: &[i32],
    kind: CrossKind,
) -> Result<LinMap> {
    let full: Vec<i32> = rest.iter().copied().chain(std::iter::once(a)).collect();
    let mut acc = identity(ctx, &full);
    for j in (0..rest.len()).rev() {
        let layer = embed(
            ctx,
            &rest[..j],
            &levi_crossing(ctx, rest[j], a, kind)?,
            &rest[j + 1..],
        );
        acc = layer.compose(&acc)?;
    }
    Ok(acc)
}

/// Diagonal map scaling each tensor factor `v_{i,j}` by `u_i`.
pub fn u_map(ctx: &LeviDatum, k: u32) -> LinMap {
    u_map_signed(ctx, k, 1)
}

pub fn u_map_signed(ctx: &LeviDatum, k: u32, exp: i32) -> LinMap {
    let space = BasisSpace::new(ctx.n, vec![1; k as usize]);
    let mut m = SparseMat::zero_map(space.clone(), space.clone());
    let n = ctx.n as usize;
    for idx in 0..space.dim() {
        let mut scalar = FieldElem::one();
        let mut rem = idx;
        for _ in 0..k {
            let flat = (rem % n) as u8 + 1;
            rem /= n;
            scalar = scalar * FieldElem::u(ctx.block_of(flat), exp);
        }
        m.set(idx, idx, scalar);
    }
    m
}

/// The fixed reduced word `s_1 (s_2 s_1) (s_3 s_2 s_1) ...` for the longest
/// element of `S_k`, 0-based positions.
pub fn longest_word(k: u32) -> Vec<usize> {
    let mut out = Vec::new();
    for i in 1..k as usize {
        for j in (0..i).rev() {
            out.push(j);
        }
    }
    out
}

/// Positive lift, in Levi overcrossings, of a word of adjacent transpositions
/// on `V^{(x) k}` (bottom to top).
pub fn levi_braid_lift(ctx: &LeviDatum, k: u32, word: &[usize], kind: CrossKind) -> LinMap {
    let beta = levi_thin_crossing(ctx, kind);
    let mut acc = identity(ctx, &vec![1; k as usize]);
    for &pos in word {
        let layer = embed(ctx, &vec![1; pos], &beta, &vec![1; k as usize - pos - 2]);
        acc = layer.compose(&acc).expect("lift shapes");
    }
    acc
}

/// The positive Levi full twist on `k` thin strands: the square of the
/// positive lift of the longest word.
pub fn full_twist(ctx: &LeviDatum, k: u32) -> LinMap {
    if k <= 1 {
        return identity(ctx, &vec![1; k as usize]);
    }
    let half = levi_braid_lift(ctx, k, &longest_word(k), CrossKind::Over);
    half.compose(&half).expect("full twist shapes")
}

/// Inverse full twist: square of the negative lift along the reversed word.
pub fn full_twist_inv(ctx: &LeviDatum, k: u32) -> LinMap {
    if k <= 1 {
        return identity(ctx, &vec![1; k as usize]);
    }
    let mut word = longest_word(k);
    word.reverse();
    let half = levi_braid_lift(ctx, k, &word, CrossKind::Under);
    half.compose(&half).expect("full twist shapes")
}

/// Levi block projector `p_i` on `V`: Lagrange interpolation of the
/// single-strand coil at `u_i`.
pub fn block_projector(ctx: &LeviDatum, block: usize) -> LinMap {
    let w1 = u_map(ctx, 1);
    let id = identity(ctx, &[1]);
    let mut acc = id.clone();
    for j in 1..=ctx.d() {
        if j == block {
            continue;
        }
        let factor = w1.sub_mat(&id.scale(&FieldElem::u(j, 1))).expect("shapes");
        acc = factor.compose(&acc).expect("shapes");
        acc = acc.scale(&FieldElem::one().div_udiff(block, j));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::all_permutations;
    use crate::rep::gens::thin_crossing;
    use num_traits::Zero;

    #[test]
    fn cartan_crossing_is_swap_off_diagonal() {
        let ctx = LeviDatum::cartan(3);
        let c = levi_thin_crossing(&ctx, CrossKind::Over);
        let n = 3usize;
        for a in 0..n {
            for b in 0..n {
                let col = a * n + b;
                let swapped = b * n + a;
                if a != b {
                    assert_eq!(c.get(swapped, col), FieldElem::one());
                    assert!(c.get(col, col).is_zero());
                } else {
                    assert_eq!(c.get(col, col), FieldElem::v(1));
                }
            }
        }
        // at v -> 1 it is exactly the swap
        let c1 = c.spec_v1();
        let mut swap = SparseMat::zero_map(c.domain.clone(), c.codomain.clone());
        for a in 0..n {
            for b in 0..n {
                swap.set(b * n + a, a * n + b, FieldElem::one());
            }
        }
        assert!(c1.equals(&swap));
    }

    #[test]
    fn single_block_is_plain_crossing() {
        let ctx = LeviDatum::full(3);
        assert!(levi_thin_crossing(&ctx, CrossKind::Over)
            .equals(&thin_crossing(&ctx, CrossKind::Over)));
    }

    #[test]
    fn levi_reidemeister_two() {
        let ctx = LeviDatum::new(3, vec![2, 1]).unwrap();
        for (k, l) in [(1, 1), (1, 2), (2, 1), (2, 2)] {
            let over = levi_thick_crossing(&ctx, k, l, CrossKind::Over);
            let under = levi_thick_crossing(&ctx, l, k, CrossKind::Under);
            let rii = under.compose(&over).unwrap();
            assert!(rii.equals(&identity(&ctx, &[k as i32, l as i32])), "k={k} l={l}");
        }
    }

    #[test]
    fn levi_reidemeister_three() {
        let ctx = LeviDatum::new(3, vec![1, 2]).unwrap();
        let over = levi_thin_crossing(&ctx, CrossKind::Over);
        let b1 = embed(&ctx, &[], &over, &[1]);
        let b2 = embed(&ctx, &[1], &over, &[]);
        let lhs = b1.compose(&b2.compose(&b1).unwrap()).unwrap();
        let rhs = b2.compose(&b1.compose(&b2).unwrap()).unwrap();
        assert!(lhs.equals(&rhs));
    }

    #[test]
    fn projector_identities() {
        for comp in [vec![1, 1], vec![2, 1], vec![1, 1, 1]] {
            let n: u8 = comp.iter().sum();
            let ctx = LeviDatum::new(n, comp).unwrap();
            let d = ctx.d();
            let projs: Vec<LinMap> = (1..=d).map(|i| block_projector(&ctx, i)).collect();
            // p_i p_j = delta_ij p_i
            for i in 0..d {
                for j in 0..d {
                    let prod = projs[i].compose(&projs[j]).unwrap();
                    if i == j {
                        assert!(prod.equals(&projs[i]));
                    } else {
                        assert!(prod.is_zero_map());
                    }
                }
            }
            // sum p_i = id
            let mut total = projs[0].clone();
            for p in &projs[1..] {
                total = total.add_mat(p).unwrap();
            }
            assert!(total.equals(&identity(&ctx, &[1])));
            // p_i is the indicator of block i
            for i in 0..d {
                for flat in 1..=n {
                    let idx = (flat - 1) as usize;
                    let expect = if ctx.block_of(flat) == i + 1 {
                        FieldElem::one()
                    } else {
                        FieldElem::zero()
                    };
                    assert_eq!(projs[i].get(idx, idx), expect);
                }
            }
        }
    }

    #[test]
    fn full_twist_small() {
        let ctx = LeviDatum::cartan(2);
        assert!(full_twist(&ctx, 1).equals(&identity(&ctx, &[1])));
        // Cartan at v -> 1: swaps square to the identity
        for k in [2u32, 3] {
            let ft = full_twist(&ctx, k).spec_v1();
            assert!(ft.equals(&identity(&ctx, &vec![1; k as usize])), "k={k}");
        }
        let ft = full_twist(&ctx, 2);
        let fti = full_twist_inv(&ctx, 2);
        assert!(ft.compose(&fti).unwrap().equals(&identity(&ctx, &[1, 1])));
    }

    #[test]
    fn full_twist_word_independence() {
        // the alternative reduced word s_2 s_1 s_2 for the k = 3 longest element
        let ctx = LeviDatum::new(3, vec![2, 1]).unwrap();
        let fixed = levi_braid_lift(&ctx, 3, &longest_word(3), CrossKind::Over);
        let alt = levi_braid_lift(&ctx, 3, &[1, 0, 1], CrossKind::Over);
        assert!(fixed.equals(&alt));
    }

    #[test]
    fn u_map_example() {
        let ctx = LeviDatum::new(3, vec![2, 1]).unwrap();
        let u2 = u_map(&ctx, 2);
        // v_{1,1} (x) v_{2,1} = flat (1, 3): scaled by u_1 u_2
        let idx = 0 * 3 + 2;
        assert_eq!(u2.get(idx, idx), FieldElem::u(1, 1) * FieldElem::u(2, 1));
    }

    #[test]
    fn longest_word_is_reversal() {
        for k in 2..=4u32 {
            let w = longest_word(k);
            assert_eq!(w.len(), (k as usize * (k as usize - 1)) / 2);
            let mut arr: Vec<usize> = (0..k as usize).collect();
            for &i in &w {
                arr.swap(i, i + 1);
            }
            let rev: Vec<usize> = (0..k as usize).rev().collect();
            assert_eq!(arr, rev);
        }
        let _ = all_permutations(3);
    }
}

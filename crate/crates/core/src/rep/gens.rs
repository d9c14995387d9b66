//! Planar web generators: merges, splits, caps, cups, crossings, explosion,
//! and the mates giving downward merges and splits.

use num_traits::One;

use crate::combinatorics::{cross_count, n_weight, reduced_word, SubsetLabel};
use crate::error::{Error, Result};
use crate::linalg::{BasisSpace, SparseMat};
use crate::scalar::FieldElem;
use crate::LinMap;

use super::LeviDatum;

/// `(-q)^e` as a field element.
fn neg_q_pow(e: i64) -> FieldElem {
    let sign = if e.rem_euclid(2) == 1 { -1 } else { 1 };
    FieldElem::constant(sign) * FieldElem::v(e as i32)
}

fn q_pow(e: i64) -> FieldElem {
    FieldElem::v(e as i32)
}

/// Strip zero labels from a word; label-0 edges are omitted.
fn word(entries: &[i32]) -> Vec<i32> {
    entries.iter().copied().filter(|&k| k != 0).collect()
}

/// Merge: `(k, l) -> (k+l)` with coefficient `delta_{S cap T, 0} (-q)^{-|T<S|}`.
pub fn merge(ctx: &LeviDatum, k: u32, l: u32) -> LinMap {
    let n = ctx.n;
    let dom = BasisSpace::new(n, word(&[k as i32, l as i32]));
    let cod = BasisSpace::new(n, word(&[(k + l) as i32]));
    let mut m = SparseMat::zero_map(dom.clone(), cod.clone());
    if cod.dim() == 0 {
        return m;
    }
    if k == 0 || l == 0 {
        return SparseMat::identity(cod);
    }
    for c in 0..dom.dim() {
        let lbl = dom.label(c);
        let (s, t) = (&lbl[0], &lbl[1]);
        if !s.is_disjoint(t) {
            continue;
        }
        let u = s.union(t);
        let r = cod.index_of(&[u]);
        m.set(r, c, neg_q_pow(-(cross_count(t, s) as i64)));
    }
    m
}

/// Split: `(k+l) -> (k, l)` with coefficient `(-1)^{kl} (-q)^{|S<T|}`.
pub fn split(ctx: &LeviDatum, k: u32, l: u32) -> LinMap {
    let n = ctx.n;
    let dom = BasisSpace::new(n, word(&[(k + l) as i32]));
    let cod = BasisSpace::new(n, word(&[k as i32, l as i32]));
    let mut m = SparseMat::zero_map(dom.clone(), cod.clone());
    if dom.dim() == 0 || cod.dim() == 0 {
        return m;
    }
    if k == 0 || l == 0 {
        return SparseMat::identity(dom);
    }
    let sign = if (k as u64 * l as u64) % 2 == 1 { -1 } else { 1 };
    for c in 0..dom.dim() {
        let ulbl = &dom.label(c)[0];
        let elems: Vec<u8> = ulbl.iter().collect();
        for s_elems in subsets_of(&elems, k as usize) {
            let s = SubsetLabel::new(s_elems.clone());
            let t_elems: Vec<u8> = elems.iter().copied().filter(|x| !s.contains(*x)).collect();
            let t = SubsetLabel::new(t_elems);
            let coeff = FieldElem::constant(sign) * neg_q_pow(cross_count(&s, &t) as i64);
            let r = cod.index_of(&[s, t]);
            m.set(r, c, coeff);
        }
    }
    m
}

fn subsets_of(elems: &[u8], k: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    fn rec(elems: &[u8], k: usize, start: usize, cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..elems.len() {
            cur.push(elems[i]);
            rec(elems, k, i + 1, cur, out);
            cur.pop();
        }
    }
    rec(elems, k, 0, &mut Vec::new(), &mut out);
    out
}

/// `capL: (-k, k) -> 1`, `v_S^* (x) v_T -> delta_{S,T}`.
pub fn cap_l(ctx: &LeviDatum, k: u32) -> LinMap {
    let n = ctx.n;
    let dom = BasisSpace::new(n, word(&[-(k as i32), k as i32]));
    let cod = BasisSpace::unit(n);
    let mut m = SparseMat::zero_map(dom.clone(), cod);
    for c in 0..dom.dim() {
        let lbl = dom.label(c);
        if lbl.is_empty() || lbl[0] == lbl[1] {
            m.set(0, c, FieldElem::one());
        }
    }
    m
}

/// `capR: (k, -k) -> 1`, `v_S (x) v_T^* -> q^{|S,N|} delta_{S,T}`.
pub fn cap_r(ctx: &LeviDatum, k: u32) -> LinMap {
    let n = ctx.n;
    let dom = BasisSpace::new(n, word(&[k as i32, -(k as i32)]));
    let cod = BasisSpace::unit(n);
    let mut m = SparseMat::zero_map(dom.clone(), cod);
    for c in 0..dom.dim() {
        let lbl = dom.label(c);
        if lbl.is_empty() {
            m.set(0, c, FieldElem::one());
        } else if lbl[0] == lbl[1] {
            m.set(0, c, q_pow(n_weight(&lbl[0], n)));
        }
    }
    m
}

/// `cupL: 1 -> (k, -k)`, `1 -> sum_S v_S (x) v_S^*`.
pub fn cup_l(ctx: &LeviDatum, k: u32) -> LinMap {
    let n = ctx.n;
    let dom = BasisSpace::unit(n);
    let cod = BasisSpace::new(n, word(&[k as i32, -(k as i32)]));
    let mut m = SparseMat::zero_map(dom, cod.clone());
    for r in 0..cod.dim() {
        let lbl = cod.label(r);
        if lbl.is_empty() || lbl[0] == lbl[1] {
            m.set(r, 0, FieldElem::one());
        }
    }
    m
}

/// `cupR: 1 -> (-k, k)`, `1 -> sum_S q^{-|S,N|} v_S^* (x) v_S`.
pub fn cup_r(ctx: &LeviDatum, k: u32) -> LinMap {
    let n = ctx.n;
    let dom = BasisSpace::unit(n);
    let cod = BasisSpace::new(n, word(&[-(k as i32), k as i32]));
    let mut m = SparseMat::zero_map(dom, cod.clone());
    for r in 0..cod.dim() {
        let lbl = cod.label(r);
        if lbl.is_empty() {
            m.set(r, 0, FieldElem::one());
        } else if lbl[0] == lbl[1] {
            m.set(r, 0, q_pow(-n_weight(&lbl[0], n)));
        }
    }
    m
}

/// Identity on a word.
pub fn identity(ctx: &LeviDatum, w: &[i32]) -> LinMap {
    SparseMat::identity(BasisSpace::new(ctx.n, word(w)))
}

/// `id_left (x) f (x) id_right`.
pub fn embed(ctx: &LeviDatum, left: &[i32], f: &LinMap, right: &[i32]) -> LinMap {
    let mut out = f.clone();
    if !word(left).is_empty() {
        out = identity(ctx, left).kron(&out);
    }
    if !word(right).is_empty() {
        out = out.kron(&identity(ctx, right));
    }
    out
}

/// Iterated split of `(k)` into `k` thin strands, peeling from the left.
pub fn explode(ctx: &LeviDatum, k: u32) -> LinMap {
    if k <= 1 {
        return identity(ctx, &[k as i32]);
    }
    let inner = explode(ctx, k - 1);
    embed(ctx, &[1], &inner, &[])
        .compose(&split(ctx, 1, k - 1))
        .expect("explode shapes")
}

/// Iterated merge of `k` thin strands into `(k)`.
pub fn implode(ctx: &LeviDatum, k: u32) -> LinMap {
    if k <= 1 {
        return identity(ctx, &[k as i32]);
    }
    let inner = implode(ctx, k - 1);
    merge(ctx, 1, k - 1)
        .compose(&embed(ctx, &[1], &inner, &[]))
        .expect("implode shapes")
}

/// Crossing flavor: which strand passes in front.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CrossKind {
    /// The strand moving left-to-right is in front.
    Over,
    /// The strand moving right-to-left is in front.
    Under,
}

impl CrossKind {
    pub fn flip(self) -> CrossKind {
        match self {
            CrossKind::Over => CrossKind::Under,
            CrossKind::Under => CrossKind::Over,
        }
    }
}

/// Thin `(1,1)`-crossings: `over = q*id - split.merge`, `under = q^{-1}*id - split.merge`.
pub fn thin_crossing(ctx: &LeviDatum, kind: CrossKind) -> LinMap {
    let id = identity(ctx, &[1, 1]);
    let dumbbell = split(ctx, 1, 1)
        .compose(&merge(ctx, 1, 1))
        .expect("dumbbell shapes");
    let scalar = match kind {
        CrossKind::Over => q_pow(1),
        CrossKind::Under => q_pow(-1),
    };
    id.scale(&scalar).sub_mat(&dumbbell).expect("same shape")
}

/// Adjacent-swap positions (0-based, bottom to top) turning the identity
/// arrangement into `target`, where `target[p]` is the incoming strand index
/// that ends at position `p`.
pub fn braid_word_for_arrangement(target: &[usize]) -> Vec<usize> {
    reduced_word(target)
}

/// Composite of thin crossings of the given kind realizing the arrangement,
/// on `V^{(x) m}`.
pub fn thin_braid(ctx: &LeviDatum, target: &[usize], kind: CrossKind) -> LinMap {
    let m = target.len();
    apply_braid_layers(
        ctx,
        m,
        &braid_word_for_arrangement(target),
        &thin_crossing(ctx, kind),
        identity(ctx, &vec![1; m]),
    )
}

/// Fold crossing layers onto an incoming (usually skinny) matrix, bottom to
/// top, without materializing the full braid.
pub fn apply_braid_layers(
    ctx: &LeviDatum,
    m: usize,
    word: &[usize],
    beta: &LinMap,
    onto: LinMap,
) -> LinMap {
    let mut acc = onto;
    for &pos in word {
        let layer = embed(ctx, &vec![1; pos], beta, &vec![1; m - pos - 2]);
        acc = layer.compose(&acc).expect("braid shapes");
    }
    acc
}

/// Arrangement moving the first `k` strands past the last `l` strands.
pub fn shuffle_arrangement(k: usize, l: usize) -> Vec<usize> {
    let mut t: Vec<usize> = (k..k + l).collect();
    t.extend(0..k);
    t
}

/// Thick `(k,l)`-crossing by explosion, divided by `[k]! [l]!`.
pub fn thick_crossing(ctx: &LeviDatum, k: u32, l: u32, kind: CrossKind) -> LinMap {
    if k == 0 || l == 0 {
        return identity(ctx, &word(&[k as i32, l as i32]));
    }
    if k == 1 && l == 1 {
        return thin_crossing(ctx, kind);
    }
    let expl = explode(ctx, k).kron(&explode(ctx, l));
    let moved = apply_braid_layers(
        ctx,
        (k + l) as usize,
        &braid_word_for_arrangement(&shuffle_arrangement(k as usize, l as usize)),
        &thin_crossing(ctx, kind),
        expl,
    );
    let impl_ = implode(ctx, l).kron(&implode(ctx, k));
    let mut m = impl_.compose(&moved).expect("cross shapes");
    for i in 2..=k.max(l) {
        if i <= k {
            m = m.scale(&FieldElem::one().div_qint(i as i64));
        }
        if i <= l {
            m = m.scale(&FieldElem::one().div_qint(i as i64));
        }
    }
    m
}

/// Crossing `(a, b) -> (b, a)` for arbitrary nonzero labels; negative labels
/// are handled by bending the positive crossing with caps and cups. The
/// positive-labels case is delegated so that both plain and Levi crossings
/// share the bending.
pub fn crossing_with(
    ctx: &LeviDatum,
    a: i32,
    b: i32,
    kind: CrossKind,
    positive: &dyn Fn(&LeviDatum, u32, u32, CrossKind) -> LinMap,
) -> Result<LinMap> {
    if a == 0 || b == 0 {
        return Err(Error::NegativeLabel);
    }
    if a > 0 && b > 0 {
        return Ok(positive(ctx, a as u32, b as u32, kind));
    }
    if a > 0 {
        // (a, -l) -> (-l, a)
        let l = (-b) as u32;
        let inner = crossing_with(ctx, b.abs(), a, kind.flip(), positive)?;
        let step1 = embed(ctx, &[], &cup_r(ctx, l), &[a, b]);
        let step2 = embed(ctx, &[b], &inner, &[b]);
        let step3 = embed(ctx, &[b, a], &cap_r(ctx, l), &[]);
        return step3.compose(&step2.compose(&step1)?);
    }
    // (-k, b) -> (b, -k)
    let k = (-a) as u32;
    let inner = crossing_with(ctx, b, a.abs(), kind.flip(), positive)?;
    let step1 = embed(ctx, &[a, b], &cup_l(ctx, k), &[]);
    let step2 = embed(ctx, &[a], &inner, &[a]);
    let step3 = embed(ctx, &[], &cap_l(ctx, k), &[b, a]);
    step3.compose(&step2.compose(&step1)?)
}

/// Plain `gl_n` crossing for arbitrary nonzero labels.
pub fn crossing(ctx: &LeviDatum, a: i32, b: i32, kind: CrossKind) -> Result<LinMap> {
    crossing_with(ctx, a, b, kind, &thick_crossing)
}

/// Downward merge `(-k, -l) -> (-(k+l))` as a mate of the upward split.
pub fn dmerge(ctx: &LeviDatum, k: u32, l: u32) -> LinMap {
    if k == 0 || l == 0 {
        return identity(ctx, &word(&[-(k as i32), -(l as i32)]));
    }
    let kl = (k + l) as i32;
    let step1 = embed(ctx, &[-(k as i32), -(l as i32)], &cup_l(ctx, k + l), &[]);
    let step2 = embed(
        ctx,
        &[-(k as i32), -(l as i32)],
        &split(ctx, l, k),
        &[-kl],
    );
    let step3 = embed(ctx, &[-(k as i32)], &cap_l(ctx, l), &[k as i32, -kl]);
    let step4 = embed(ctx, &[], &cap_l(ctx, k), &[-kl]);
    step4
        .compose(&step3.compose(&step2.compose(&step1).expect("dmerge")).expect("dmerge"))
        .expect("dmerge")
}

/// Downward split `(-(k+l)) -> (-k, -l)` as a mate of the upward merge.
pub fn dsplit(ctx: &LeviDatum, k: u32, l: u32) -> LinMap {
    if k == 0 || l == 0 {
        return identity(ctx, &word(&[-((k + l) as i32)]));
    }
    let kl = (k + l) as i32;
    let step1 = embed(ctx, &[], &cup_r(ctx, k), &[-kl]);
    let step2 = embed(ctx, &[-(k as i32)], &cup_r(ctx, l), &[k as i32, -kl]);
    let step3 = embed(
        ctx,
        &[-(k as i32), -(l as i32)],
        &merge(ctx, l, k),
        &[-kl],
    );
    let step4 = embed(ctx, &[-(k as i32), -(l as i32)], &cap_r(ctx, k + l), &[]);
    step4
        .compose(&step3.compose(&step2.compose(&step1).expect("dsplit")).expect("dsplit"))
        .expect("dsplit")
}

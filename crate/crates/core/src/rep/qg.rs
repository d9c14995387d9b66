//! Quantum group generator actions on tensor products of exterior powers,
//! used for equivariance checking.

use num_traits::One;

use crate::linalg::{BasisSpace, SparseMat};
use crate::scalar::FieldElem;
use crate::LinMap;

use super::gens::explode;
use super::LeviDatum;

/// A tensor-slot element: a generator or the grouplike `K_i = L_i L_{i+1}^{-1}`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SlotOp {
    E(u8),
    F(u8),
    /// `L_i^{e}`
    L(u8, i32),
    /// `K_i^{e} = (L_i L_{i+1}^{-1})^{e}`
    K(u8, i32),
}

impl SlotOp {
    /// Antipode, as a signed word of slot elements (matrix product order).
    fn antipode(self) -> (i64, Vec<SlotOp>) {
        match self {
            SlotOp::E(i) => (-1, vec![SlotOp::E(i), SlotOp::K(i, -1)]),
            SlotOp::F(i) => (-1, vec![SlotOp::K(i, 1), SlotOp::F(i)]),
            SlotOp::L(i, e) => (1, vec![SlotOp::L(i, -e)]),
            SlotOp::K(i, e) => (1, vec![SlotOp::K(i, -e)]),
        }
    }
}

/// A generator of the quantum group, in flat indexing.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum QGGenerator {
    E(u8),
    F(u8),
    L(u8, i32),
}

impl QGGenerator {
    pub fn name(&self) -> String {
        match self {
            QGGenerator::E(i) => format!("E{i}"),
            QGGenerator::F(i) => format!("F{i}"),
            QGGenerator::L(i, 1) => format!("L{i}"),
            QGGenerator::L(i, e) => format!("L{i}^{e}"),
        }
    }
}

fn q_pow(e: i32) -> FieldElem {
    FieldElem::v(e)
}

/// Matrix of a slot element on the vector representation.
fn slot_on_vector(ctx: &LeviDatum, op: SlotOp) -> LinMap {
    let n = ctx.n;
    let space = BasisSpace::new(n, vec![1]);
    let mut m = SparseMat::zero_map(space.clone(), space);
    match op {
        SlotOp::E(i) => {
            // E_i v_j = delta_{i, j-1} v_{j-1}
            if i < n {
                m.set(i as usize - 1, i as usize, FieldElem::one());
            }
        }
        SlotOp::F(i) => {
            // F_i v_j = delta_{i, j} v_{j+1}
            if i < n {
                m.set(i as usize, i as usize - 1, FieldElem::one());
            }
        }
        SlotOp::L(i, e) => {
            for j in 1..=n {
                let s = if j == i { q_pow(e) } else { FieldElem::one() };
                m.set(j as usize - 1, j as usize - 1, s);
            }
        }
        SlotOp::K(i, e) => {
            for j in 1..=n {
                let exp = if j == i {
                    e
                } else if j == i + 1 {
                    -e
                } else {
                    0
                };
                m.set(j as usize - 1, j as usize - 1, q_pow(exp));
            }
        }
    }
    m
}

/// Iterated-coproduct action of a generator on `V^{(x) m}`.
fn generator_on_tensor(ctx: &LeviDatum, gen: QGGenerator, m: usize) -> LinMap {
    let space = BasisSpace::new(ctx.n, vec![1; m]);
    if m == 0 {
        return match gen {
            QGGenerator::L(..) => SparseMat::identity(space),
            _ => SparseMat::zero_map(space.clone(), space),
        };
    }
    match gen {
        QGGenerator::L(i, e) => {
            let factor = slot_on_vector(ctx, SlotOp::L(i, e));
            let mut acc = factor.clone();
            for _ in 1..m {
                acc = acc.kron(&factor);
            }
            acc
        }
        QGGenerator::E(i) => {
            // sum_j 1 (x) .. (x) E_i (x) K_i (x) .. (x) K_i
            let id = slot_on_vector(ctx, SlotOp::L(1, 0));
            let e = slot_on_vector(ctx, SlotOp::E(i));
            let k = slot_on_vector(ctx, SlotOp::K(i, 1));
            let mut total: Option<LinMap> = None;
            for j in 0..m {
                let mut term = if j == 0 { e.clone() } else { id.clone() };
                for r in 1..m {
                    let factor = if r < j {
                        &id
                    } else if r == j {
                        &e
                    } else {
                        &k
                    };
                    term = term.kron(factor);
                }
                total = Some(match total {
                    None => term,
                    Some(t) => t.add_mat(&term).expect("same shape"),
                });
            }
            total.unwrap()
        }
        QGGenerator::F(i) => {
            // sum_j K_i^{-1} (x) .. (x) F_i (x) 1 (x) .. (x) 1
            let id = slot_on_vector(ctx, SlotOp::L(1, 0));
            let f = slot_on_vector(ctx, SlotOp::F(i));
            let kinv = slot_on_vector(ctx, SlotOp::K(i, -1));
            let mut total: Option<LinMap> = None;
            for j in 0..m {
                let mut term = if j == 0 {
                    f.clone()
                } else {
                    kinv.clone()
                };
                for r in 1..m {
                    let factor = if r < j {
                        &kinv
                    } else if r == j {
                        &f
                    } else {
                        &id
                    };
                    term = term.kron(factor);
                }
                total = Some(match total {
                    None => term,
                    Some(t) => t.add_mat(&term).expect("same shape"),
                });
            }
            total.unwrap()
        }
    }
}

/// Matrix of a slot element on one exterior-power factor, by restriction
/// along the explosion embedding (positive labels) or dually via the
/// antipode (negative labels).
fn slot_on_factor(ctx: &LeviDatum, op: SlotOp, k: i32) -> LinMap {
    if k > 0 {
        restrict_to_wedge(ctx, op, k as u32)
    } else {
        let (sign, word) = op.antipode();
        let kk = (-k) as u32;
        let mut m: Option<LinMap> = None;
        for w in word {
            let factor = restrict_to_wedge(ctx, w, kk);
            m = Some(match m {
                None => factor,
                Some(acc) => acc.compose(&factor).expect("antipode shapes"),
            });
        }
        let mut t = m.unwrap().transpose();
        if sign < 0 {
            t = t.scale(&(-FieldElem::one()));
        }
        // relabel the spaces as the dual factor
        let dual = BasisSpace::new(ctx.n, vec![k]);
        t.with_spaces(dual.clone(), dual)
    }
}

fn restrict_to_wedge(ctx: &LeviDatum, op: SlotOp, k: u32) -> LinMap {
    let wedge = BasisSpace::new(ctx.n, vec![k as i32]);
    if k == 0 {
        return SparseMat::identity(BasisSpace::unit(ctx.n));
    }
    if k == 1 {
        return slot_on_vector(ctx, op);
    }
    let expl = explode(ctx, k);
    let single = slot_on_vector(ctx, op);
    // slot elements act on V^{(x)k} by the iterated coproduct
    let tensor_action = match op {
        SlotOp::E(i) => generator_on_tensor(ctx, QGGenerator::E(i), k as usize),
        SlotOp::F(i) => generator_on_tensor(ctx, QGGenerator::F(i), k as usize),
        SlotOp::L(_, _) | SlotOp::K(_, _) => {
            let mut acc = single.clone();
            for _ in 1..k {
                acc = acc.kron(&single);
            }
            acc
        }
    };
    let moved = tensor_action.compose(&expl).expect("restrict shapes");
    // solve moved = explode . A using the strictly increasing tensor
    // coordinate that identifies each wedge basis vector
    let mut a = SparseMat::zero_map(wedge.clone(), wedge.clone());
    let n = ctx.n as usize;
    let inc_coord = |label: &crate::combinatorics::SubsetLabel| -> usize {
        label
            .iter()
            .fold(0usize, |acc, x| acc * n + (x as usize - 1))
    };
    // gamma_S: coefficient of the increasing word inside explode(v_S)
    let mut gammas = Vec::with_capacity(wedge.dim());
    for s_idx in 0..wedge.dim() {
        let lbl = &wedge.label(s_idx)[0];
        let coord = inc_coord(lbl);
        gammas.push(expl.get(coord, s_idx));
    }
    for s_idx in 0..wedge.dim() {
        for t_idx in 0..wedge.dim() {
            let lbl = &wedge.label(t_idx)[0];
            let coord = inc_coord(lbl);
            let w = moved.get(coord, s_idx);
            if !w.is_zero() {
                a.set(t_idx, s_idx, &w * &gammas[t_idx].recip());
            }
        }
    }
    // verify the image is invariant: explode . A must reproduce the action
    let check = expl.compose(&a).expect("restrict shapes");
    assert!(
        check.equals(&moved),
        "explosion image not invariant under slot element {op:?}"
    );
    a
}

/// Action of a generator on the space of an object word, via the iterated
/// coproduct over the factors.
pub fn qg_action(ctx: &LeviDatum, gen: QGGenerator, word: &[i32]) -> LinMap {
    let space = BasisSpace::new(ctx.n, word.to_vec());
    let m = word.len();
    if m == 0 {
        return match gen {
            QGGenerator::L(..) => SparseMat::identity(space),
            _ => SparseMat::zero_map(space.clone(), space),
        };
    }
    match gen {
        QGGenerator::L(i, e) => {
            let mut acc: Option<LinMap> = None;
            for &k in word {
                let factor = slot_on_factor(ctx, SlotOp::L(i, e), k);
                acc = Some(match acc {
                    None => factor,
                    Some(t) => t.kron(&factor),
                });
            }
            acc.unwrap()
        }
        QGGenerator::E(i) => {
            let mut total: Option<LinMap> = None;
            for j in 0..m {
                let mut term: Option<LinMap> = None;
                for (r, &k) in word.iter().enumerate() {
                    let op = if r < j {
                        SlotOp::L(1, 0)
                    } else if r == j {
                        SlotOp::E(i)
                    } else {
                        SlotOp::K(i, 1)
                    };
                    let factor = slot_on_factor(ctx, op, k);
                    term = Some(match term {
                        None => factor,
                        Some(t) => t.kron(&factor),
                    });
                }
                let term = term.unwrap();
                total = Some(match total {
                    None => term,
                    Some(t) => t.add_mat(&term).expect("same shape"),
                });
            }
            total.unwrap()
        }
        QGGenerator::F(i) => {
            let mut total: Option<LinMap> = None;
            for j in 0..m {
                let mut term: Option<LinMap> = None;
                for (r, &k) in word.iter().enumerate() {
                    let op = if r < j {
                        SlotOp::K(i, -1)
                    } else if r == j {
                        SlotOp::F(i)
                    } else {
                        SlotOp::L(1, 0)
                    };
                    let factor = slot_on_factor(ctx, op, k);
                    term = Some(match term {
                        None => factor,
                        Some(t) => t.kron(&factor),
                    });
                }
                let term = term.unwrap();
                total = Some(match total {
                    None => term,
                    Some(t) => t.add_mat(&term).expect("same shape"),
                });
            }
            total.unwrap()
        }
    }
}

/// Which algebra to test equivariance against.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Algebra {
    Full,
    Levi,
}

/// Generators of the chosen algebra, in flat indexing.
pub fn generators(ctx: &LeviDatum, algebra: Algebra) -> Vec<QGGenerator> {
    let mut gens = Vec::new();
    for i in 1..ctx.n {
        let within_block = ctx.block_of(i) == ctx.block_of(i + 1);
        if algebra == Algebra::Full || within_block {
            gens.push(QGGenerator::E(i));
            gens.push(QGGenerator::F(i));
        }
    }
    for i in 1..=ctx.n {
        gens.push(QGGenerator::L(i, 1));
    }
    gens
}

/// Names of the generators that fail to commute with `f`.
pub fn check_equivariance(
    ctx: &LeviDatum,
    f: &LinMap,
    algebra: Algebra,
) -> crate::error::Result<Vec<String>> {
    let mut failures = Vec::new();
    for gen in generators(ctx, algebra) {
        let dom_act = qg_action(ctx, gen, &f.domain.word);
        let cod_act = qg_action(ctx, gen, &f.codomain.word);
        let lhs = f.compose(&dom_act)?;
        let rhs = cod_act.compose(f)?;
        if !lhs.equals(&rhs) {
            failures.push(gen.name());
        }
    }
    Ok(failures)
}

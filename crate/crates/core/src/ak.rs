//! The Ariki-Koike algebra through its image on thin annular strands:
//! generator images, Jucys-Murphy elements, the epsilon/R recursion, and
//! generalized blob dimension arithmetic.

use num_traits::One;
use serde::Serialize;

use crate::combinatorics::{
    all_permutations, bounded_dpartitions, colored_permutations, reduced_word, standard_tableaux,
};
use crate::error::{Error, Result};
use crate::linalg::rank_specialized;
use crate::rep::coil::{coil_matrix, Direction};
use crate::rep::gens::{embed, identity, thin_crossing, CrossKind};
use crate::rep::LeviDatum;
use crate::scalar::{elementary_symmetric, FieldElem};
use crate::LinMap;

/// Which way the returning strand of the cyclic generator crosses the others.
/// `Front` matches the picture where the return strand is drawn on top.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum ReturnConvention {
    #[default]
    Front,
    Behind,
}

#[derive(Clone, Debug)]
pub struct AkConfig {
    pub return_convention: ReturnConvention,
}

impl Default for AkConfig {
    fn default() -> Self {
        AkConfig {
            return_convention: ReturnConvention::Front,
        }
    }
}

/// Word in the generators `T_0, ..., T_{m-1}`.
#[derive(Clone, Debug, PartialEq)]
pub struct AKWord(pub Vec<usize>);

/// Formal linear combination of generator words, realized only through its
/// image matrix; no abstract rewriting happens on these.
#[derive(Clone, Debug, PartialEq)]
pub struct AKElement(pub Vec<(FieldElem, AKWord)>);

impl AKElement {
    pub fn image(&self, ctx: &LeviDatum, cfg: &AkConfig, m: usize) -> Result<LinMap> {
        let mut acc = LinMap::zero_map(
            ctx.space(&vec![1; m]),
            ctx.space(&vec![1; m]),
        );
        for (coeff, word) in &self.0 {
            let img = ak_word_image(ctx, cfg, word, m)?.scale(coeff);
            acc = acc.add_mat(&img)?;
        }
        Ok(acc)
    }
}

/// A normal monomial `J_1^{c_1} ... J_m^{c_m} T_w`.
#[derive(Clone, Debug)]
pub struct AKBasisMonomial {
    pub jm_exponents: Vec<u8>,
    pub perm: Vec<usize>,
}

/// Image of `T_i` on `V^{(x) m}`. `T_0` is the coil on the first strand
/// followed by the return crossings; `T_i` for `i >= 1` is the thin
/// overcrossing at strands `(i, i+1)`.
pub fn ak_generator_image(
    ctx: &LeviDatum,
    cfg: &AkConfig,
    i: usize,
    m: usize,
) -> Result<LinMap> {
    if m == 0 || i >= m {
        return Err(Error::IndexOutOfRange);
    }
    if i >= 1 {
        let beta = thin_crossing(ctx, CrossKind::Over);
        return Ok(embed(ctx, &vec![1; i - 1], &beta, &vec![1; m - i - 1]));
    }
    // T_0: wind the first strand, then bring it back to the front
    let word = vec![1i32; m];
    let coil = coil_matrix(ctx, &word, Direction::Winding)?;
    let kind = match cfg.return_convention {
        ReturnConvention::Front => CrossKind::Under,
        ReturnConvention::Behind => CrossKind::Over,
    };
    let beta = thin_crossing(ctx, kind);
    let mut acc = coil;
    for t in (0..m - 1).rev() {
        let layer = embed(ctx, &vec![1; t], &beta, &vec![1; m - t - 2]);
        acc = layer.compose(&acc)?;
    }
    Ok(acc)
}

/// Image of a word in the generators.
pub fn ak_word_image(ctx: &LeviDatum, cfg: &AkConfig, word: &AKWord, m: usize) -> Result<LinMap> {
    let mut acc = identity(ctx, &vec![1; m]);
    for &i in &word.0 {
        acc = ak_generator_image(ctx, cfg, i, m)?.compose(&acc)?;
    }
    Ok(acc)
}

/// Positive lift `T_w` of a permutation, as a product of `T_i` along a
/// reduced word.
pub fn ak_perm_image(ctx: &LeviDatum, cfg: &AkConfig, perm: &[usize], m: usize) -> Result<LinMap> {
    let mut acc = identity(ctx, &vec![1; m]);
    for pos in reduced_word(perm) {
        acc = ak_generator_image(ctx, cfg, pos + 1, m)?.compose(&acc)?;
    }
    Ok(acc)
}

/// Jucys-Murphy image: `J_1 = T_0` and `J_i = T_{i-1} J_{i-1} T_{i-1}`.
pub fn jm_image(ctx: &LeviDatum, cfg: &AkConfig, i: usize, m: usize) -> Result<LinMap> {
    if i == 0 || i > m {
        return Err(Error::IndexOutOfRange);
    }
    let mut acc = ak_generator_image(ctx, cfg, 0, m)?;
    for j in 2..=i {
        let t = ak_generator_image(ctx, cfg, j - 1, m)?;
        acc = t.compose(&acc)?.compose(&t)?;
    }
    Ok(acc)
}

/// Predicted `J_i` eigenvalues `u_a v^{2(b - c)}` over the entries `i` of
/// standard d-tableaux of row-bounded shapes.
pub fn jm_predicted_eigenvalues(ctx: &LeviDatum, i: usize, m: usize) -> Vec<FieldElem> {
    let limits: Vec<usize> = ctx.comp.iter().map(|&l| l as usize).collect();
    let mut out: Vec<FieldElem> = Vec::new();
    for shape in bounded_dpartitions(m, &limits) {
        for tab in standard_tableaux(&shape) {
            let (a, row, col) = tab.position_of(i).expect("standard tableau holds i");
            let val = FieldElem::u(a, 1) * FieldElem::v(2 * (col as i32 - row as i32));
            if !out.contains(&val) {
                out.push(val);
            }
        }
    }
    out
}

/// `epsilon_k^{(i)}`: scalars `e_k(u_1..u_d)` for `i = 1`, then the
/// recursion adding `(q^2 - 1) sum_t (-1)^{t-1} J_{i-1}^t epsilon_{k-t}^{(i-1)}`.
pub fn epsilon_image(
    ctx: &LeviDatum,
    cfg: &AkConfig,
    k: usize,
    i: usize,
    m: usize,
) -> Result<LinMap> {
    if i == 0 || i > m {
        return Err(Error::IndexOutOfRange);
    }
    let id = identity(ctx, &vec![1; m]);
    if k == 0 {
        return Ok(id);
    }
    if i == 1 {
        let us: Vec<FieldElem> = (1..=ctx.d()).map(|j| FieldElem::u(j, 1)).collect();
        return Ok(id.scale(&elementary_symmetric(k, &us)));
    }
    let prev = epsilon_image(ctx, cfg, k, i - 1, m)?;
    let jm = jm_image(ctx, cfg, i - 1, m)?;
    let q2m1 = &(&FieldElem::v(2) - &FieldElem::one());
    let mut correction: Option<LinMap> = None;
    let mut jm_pow = jm.clone();
    for t in 1..=k {
        let eps_lower = epsilon_image(ctx, cfg, k - t, i - 1, m)?;
        let mut term = jm_pow.compose(&eps_lower)?;
        if t % 2 == 0 {
            term = term.scale(&(-FieldElem::one()));
        }
        correction = Some(match correction {
            None => term,
            Some(acc) => acc.add_mat(&term)?,
        });
        if t < k {
            jm_pow = jm_pow.compose(&jm)?;
        }
    }
    prev.add_mat(&correction.unwrap().scale(q2m1))
}

/// `R_i = J_i^d - eps_1^{(i)} J_i^{d-1} + ... +- eps_d^{(i)}`, signs `(-1)^k`
/// on the `eps_k` term.
pub fn r_element_image(ctx: &LeviDatum, cfg: &AkConfig, i: usize, m: usize) -> Result<LinMap> {
    let d = ctx.d();
    let jm = jm_image(ctx, cfg, i, m)?;
    let id = identity(ctx, &vec![1; m]);
    let mut acc: Option<LinMap> = None;
    for k in 0..=d {
        let eps = epsilon_image(ctx, cfg, k, i, m)?;
        let mut jpow = id.clone();
        for _ in 0..(d - k) {
            jpow = jpow.compose(&jm)?;
        }
        let mut term = eps.compose(&jpow)?;
        if k % 2 == 1 {
            term = term.scale(&(-FieldElem::one()));
        }
        acc = Some(match acc {
            None => term,
            Some(a) => a.add_mat(&term)?,
        });
    }
    Ok(acc.unwrap())
}

/// Dimension of the generalized blob algebra:
/// `sum over bounded d-partitions of |Std|^2`.
pub fn blob_dimension(ctx: &LeviDatum, m: usize) -> usize {
    let limits: Vec<usize> = ctx.comp.iter().map(|&l| l as usize).collect();
    bounded_dpartitions(m, &limits)
        .iter()
        .map(|p| standard_tableaux(p).len().pow(2))
        .sum()
}

/// All normal monomials `J^c T_w`.
pub fn basis_monomials(d: usize, m: usize) -> Vec<AKBasisMonomial> {
    let mut out = Vec::new();
    let perms = all_permutations(m);
    let mut exps = vec![0u8; m];
    loop {
        for w in &perms {
            out.push(AKBasisMonomial {
                jm_exponents: exps.clone(),
                perm: w.clone(),
            });
        }
        let mut j = 0;
        loop {
            if j == m {
                return out;
            }
            exps[j] += 1;
            if (exps[j] as usize) < d {
                break;
            }
            exps[j] = 0;
            j += 1;
        }
        if m == 0 {
            return out;
        }
    }
}

/// Rank of the span of the images of all normal monomials, over random
/// prime-field points. `v1` restricts to the `v -> 1` specialization.
pub fn image_rank(ctx: &LeviDatum, cfg: &AkConfig, m: usize, seed: u64, v1: bool) -> Result<usize> {
    if m == 0 {
        return Ok(1);
    }
    let monomials = basis_monomials(ctx.d(), m);
    let jms: Vec<LinMap> = (1..=m)
        .map(|i| jm_image(ctx, cfg, i, m))
        .collect::<Result<_>>()?;
    let mut images = Vec::with_capacity(monomials.len());
    for mono in &monomials {
        let mut acc = ak_perm_image(ctx, cfg, &mono.perm, m)?;
        for (i, &e) in mono.jm_exponents.iter().enumerate() {
            for _ in 0..e {
                acc = jms[i].compose(&acc)?;
            }
        }
        if v1 {
            acc = acc.spec_v1();
        }
        images.push(acc);
    }
    rank_specialized(&images, 3, seed)
}

/// Count of the colored-permutation basis at `v -> 1`, summed over all pairs
/// of color words.
pub fn q1_basis_count(ctx: &LeviDatum, m: usize) -> Result<usize> {
    let d = ctx.d();
    let limits: Vec<usize> = ctx.comp.iter().map(|&l| l as usize).collect();
    let mut words: Vec<Vec<usize>> = vec![vec![]];
    for _ in 0..m {
        let mut next = Vec::new();
        for w in &words {
            for c in 1..=d {
                let mut w2 = w.clone();
                w2.push(c);
                next.push(w2);
            }
        }
        words = next;
    }
    let mut total = 0;
    for s in &words {
        for t in &words {
            match colored_permutations(s, t, &limits) {
                Ok(perms) => total += perms.len(),
                Err(Error::ColorMismatch) => {}
                Err(e) => return Err(e),
            }
        }
    }
    Ok(total)
}

/// Check all defining relations on the generator images.
pub fn check_ak_relations(ctx: &LeviDatum, cfg: &AkConfig, m: usize) -> Result<Vec<String>> {
    let mut failures = Vec::new();
    if m == 0 {
        return Ok(failures);
    }
    let gens: Vec<LinMap> = (0..m)
        .map(|i| ak_generator_image(ctx, cfg, i, m))
        .collect::<Result<_>>()?;
    let id = identity(ctx, &vec![1; m]);
    // cyclotomic: prod_k (T_0 - u_k) = 0
    let roots: Vec<FieldElem> = (1..=ctx.d()).map(|j| FieldElem::u(j, 1)).collect();
    if !gens[0].annihilates(&roots)? {
        failures.push("cyclotomic".into());
    }
    // quadratic: (T_i - q)(T_i + q^{-1}) = 0 for i > 0
    for (i, t) in gens.iter().enumerate().skip(1) {
        let a = t.sub_mat(&id.scale(&FieldElem::v(1)))?;
        let b = t.add_mat(&id.scale(&FieldElem::v(-1)))?;
        if !a.compose(&b)?.is_zero_map() {
            failures.push(format!("quadratic T_{i}"));
        }
    }
    // braid: T_i T_j T_i = T_j T_i T_j for |i-j| = 1, i,j >= 1
    for i in 1..m {
        for j in 1..m {
            if i.abs_diff(j) == 1 {
                let lhs = gens[i].compose(&gens[j])?.compose(&gens[i])?;
                let rhs = gens[j].compose(&gens[i])?.compose(&gens[j])?;
                if !lhs.equals(&rhs) {
                    failures.push(format!("braid T_{i} T_{j}"));
                }
            }
        }
    }
    // commuting: T_i T_j = T_j T_i for |i-j| > 1
    for i in 0..m {
        for j in 0..m {
            if i < j && j - i > 1 {
                let lhs = gens[i].compose(&gens[j])?;
                let rhs = gens[j].compose(&gens[i])?;
                if !lhs.equals(&rhs) {
                    failures.push(format!("commuting T_{i} T_{j}"));
                }
            }
        }
    }
    // quartic: T_0 T_1 T_0 T_1 = T_1 T_0 T_1 T_0
    if m >= 2 {
        let lhs = gens[0]
            .compose(&gens[1])?
            .compose(&gens[0])?
            .compose(&gens[1])?;
        let rhs = gens[1]
            .compose(&gens[0])?
            .compose(&gens[1])?
            .compose(&gens[0])?;
        if !lhs.equals(&rhs) {
            failures.push("quartic T_0 T_1".into());
        }
    }
    Ok(failures)
}

/// Check the JM package: pairwise commutation and minimal-polynomial
/// divisibility against the tableau prediction.
pub fn check_jm(ctx: &LeviDatum, cfg: &AkConfig, m: usize) -> Result<Vec<String>> {
    let mut failures = Vec::new();
    let jms: Vec<LinMap> = (1..=m)
        .map(|i| jm_image(ctx, cfg, i, m))
        .collect::<Result<_>>()?;
    for i in 0..m {
        for j in 0..i {
            let lhs = jms[i].compose(&jms[j])?;
            let rhs = jms[j].compose(&jms[i])?;
            if !lhs.equals(&rhs) {
                failures.push(format!("commute J_{} J_{}", i + 1, j + 1));
            }
        }
    }
    for i in 1..=m {
        let roots = jm_predicted_eigenvalues(ctx, i, m);
        if !jms[i - 1].annihilates(&roots)? {
            failures.push(format!("minpoly J_{i}"));
        }
    }
    Ok(failures)
}

/// Summary of the Ariki-Koike checks for one `(levi, m)`.
#[derive(Serialize, Debug)]
pub struct AkReport {
    pub m: usize,
    pub levi: Vec<u8>,
    pub blob_dimension: usize,
    pub image_rank: usize,
    pub relations_ok: bool,
    pub jm_minpoly_ok: bool,
    pub r2_kernel_ok: bool,
}

pub fn ak_report(ctx: &LeviDatum, cfg: &AkConfig, m: usize, seed: u64) -> Result<AkReport> {
    let relations_ok = check_ak_relations(ctx, cfg, m)?.is_empty();
    let jm_minpoly_ok = check_jm(ctx, cfg, m)?.is_empty();
    let cartan = ctx.comp.iter().all(|&l| l == 1);
    let r2_kernel_ok = if cartan && m >= 2 {
        r_element_image(ctx, cfg, 2, m)?.is_zero_map()
    } else if cartan && m >= 1 {
        r_element_image(ctx, cfg, 1, m)?.is_zero_map()
    } else {
        true
    };
    Ok(AkReport {
        m,
        levi: ctx.comp.clone(),
        blob_dimension: blob_dimension(ctx, m),
        image_rank: image_rank(ctx, cfg, m, seed, false)?,
        relations_ok,
        jm_minpoly_ok,
        r2_kernel_ok,
    })
}

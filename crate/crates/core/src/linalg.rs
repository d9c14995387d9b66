//! Exact sparse matrices over labeled basis spaces, generic over the scalar
//! ring, plus probabilistic rank via prime-field specialization.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::combinatorics::{subsets, SubsetLabel};
use crate::error::{Error, Result};
use crate::scalar::{parse_scalar, FieldElem, Fp, FpPoint, PRIMES};

/// Scalars a sparse matrix can hold. `num_traits::Zero`/`One` are required
/// only on the operations that need literals, since a prime-field element
/// carries its modulus and has no context-free constants.
pub trait Scalar:
    Clone
    + PartialEq
    + fmt::Debug
    + Neg<Output = Self>
    + Sub<Output = Self>
    + Add<Output = Self>
    + Mul<Output = Self>
{
    fn is_zero_scalar(&self) -> bool;
}

impl Scalar for FieldElem {
    fn is_zero_scalar(&self) -> bool {
        Zero::is_zero(self)
    }
}

impl Scalar for Fp {
    fn is_zero_scalar(&self) -> bool {
        self.is_zero()
    }
}

/// Object word: nonzero entries `k` with `|k| <= n` giving nonzero dimension.
pub type Word = Vec<i32>;

fn binom(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let mut acc: u64 = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Labeled basis of a tensor product of exterior powers. Basis labels are
/// tuples of subsets, ordered lexicographically; negative word entries mean
/// dual (starred) factors over the same subsets.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BasisSpace {
    pub n: u8,
    pub word: Word,
}

impl BasisSpace {
    pub fn new(n: u8, word: Word) -> Self {
        debug_assert!(word.iter().all(|&k| k != 0), "object words have no zeros");
        BasisSpace { n, word }
    }

    pub fn unit(n: u8) -> Self {
        BasisSpace { n, word: vec![] }
    }

    pub fn dim(&self) -> usize {
        self.word
            .iter()
            .map(|&k| binom(self.n as u64, k.unsigned_abs() as u64) as usize)
            .product()
    }

    fn factor_dims(&self) -> Vec<usize> {
        self.word
            .iter()
            .map(|&k| binom(self.n as u64, k.unsigned_abs() as u64) as usize)
            .collect()
    }

    /// The label of basis vector `idx` as one subset per factor.
    pub fn label(&self, idx: usize) -> Vec<SubsetLabel> {
        let dims = self.factor_dims();
        let mut rem = idx;
        let mut digits = vec![0usize; dims.len()];
        for i in (0..dims.len()).rev() {
            digits[i] = rem % dims[i];
            rem /= dims[i];
        }
        digits
            .iter()
            .zip(&self.word)
            .map(|(&digit, &k)| {
                let subs = subsets(self.n, k.unsigned_abs() as usize);
                subs[digit].clone()
            })
            .collect()
    }

    /// Index of a label tuple.
    pub fn index_of(&self, label: &[SubsetLabel]) -> usize {
        let mut idx = 0;
        for (sub, &k) in label.iter().zip(&self.word) {
            let subs = subsets(self.n, k.unsigned_abs() as usize);
            let digit = subs.binary_search(sub).expect("label not in basis");
            idx = idx * subs.len() + digit;
        }
        idx
    }

    pub fn concat(&self, other: &BasisSpace) -> BasisSpace {
        let mut word = self.word.clone();
        word.extend(&other.word);
        BasisSpace::new(self.n, word)
    }
}

/// Sparse matrix between labeled basis spaces, column-major, generic over the
/// scalar ring.
#[derive(Clone, PartialEq, Debug)]
pub struct SparseMat<R: Scalar> {
    pub domain: BasisSpace,
    pub codomain: BasisSpace,
    cols: Vec<Vec<(u32, R)>>,
}

impl<R: Scalar> SparseMat<R> {
    pub fn zero_map(domain: BasisSpace, codomain: BasisSpace) -> Self {
        let cols = vec![Vec::new(); domain.dim()];
        SparseMat {
            domain,
            codomain,
            cols,
        }
    }

    pub fn identity(space: BasisSpace) -> Self
    where
        R: One,
    {
        let mut m = Self::zero_map(space.clone(), space);
        for c in 0..m.cols.len() {
            m.cols[c].push((c as u32, R::one()));
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.codomain.dim()
    }

    pub fn ncols(&self) -> usize {
        self.domain.dim()
    }

    pub fn col(&self, c: usize) -> &[(u32, R)] {
        &self.cols[c]
    }

    pub fn set(&mut self, r: usize, c: usize, val: R) {
        debug_assert!(r < self.nrows() && c < self.ncols());
        let col = &mut self.cols[c];
        match col.binary_search_by_key(&(r as u32), |e| e.0) {
            Ok(pos) => {
                if val.is_zero_scalar() {
                    col.remove(pos);
                } else {
                    col[pos].1 = val;
                }
            }
            Err(pos) => {
                if !val.is_zero_scalar() {
                    col.insert(pos, (r as u32, val));
                }
            }
        }
    }

    pub fn get(&self, r: usize, c: usize) -> R
    where
        R: Zero,
    {
        match self.cols[c].binary_search_by_key(&(r as u32), |e| e.0) {
            Ok(pos) => self.cols[c][pos].1.clone(),
            Err(_) => R::zero(),
        }
    }

    pub fn add_to(&mut self, r: usize, c: usize, val: R) {
        if val.is_zero_scalar() {
            return;
        }
        let col = &mut self.cols[c];
        match col.binary_search_by_key(&(r as u32), |e| e.0) {
            Ok(pos) => {
                let new = col[pos].1.clone() + val;
                if new.is_zero_scalar() {
                    col.remove(pos);
                } else {
                    col[pos].1 = new;
                }
            }
            Err(pos) => col.insert(pos, (r as u32, val)),
        }
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &R)> {
        self.cols
            .iter()
            .enumerate()
            .flat_map(|(c, col)| col.iter().map(move |(r, v)| (*r as usize, c, v)))
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(|c| c.len()).sum()
    }

    pub fn is_zero_map(&self) -> bool {
        self.cols.iter().all(|c| c.is_empty())
    }

    /// `self` after `rhs`: matrix product `self * rhs`.
    pub fn compose(&self, rhs: &SparseMat<R>) -> Result<SparseMat<R>> {
        if rhs.codomain != self.domain {
            return Err(Error::ShapeMismatch(format!(
                "compose: inner words {:?} vs {:?}",
                rhs.codomain.word, self.domain.word
            )));
        }
        let mut out = SparseMat::zero_map(rhs.domain.clone(), self.codomain.clone());
        for c in 0..rhs.cols.len() {
            let mut acc: BTreeMap<u32, R> = BTreeMap::new();
            for (mid, a) in &rhs.cols[c] {
                for (r, b) in &self.cols[*mid as usize] {
                    let term = b.clone() * a.clone();
                    if term.is_zero_scalar() {
                        continue;
                    }
                    match acc.entry(*r) {
                        std::collections::btree_map::Entry::Occupied(mut o) => {
                            let new = o.get().clone() + term;
                            if new.is_zero_scalar() {
                                o.remove();
                            } else {
                                *o.get_mut() = new;
                            }
                        }
                        std::collections::btree_map::Entry::Vacant(v) => {
                            v.insert(term);
                        }
                    }
                }
            }
            out.cols[c] = acc.into_iter().collect();
        }
        Ok(out)
    }

    /// Kronecker product on the ordered tensor basis.
    pub fn kron(&self, rhs: &SparseMat<R>) -> SparseMat<R> {
        let domain = self.domain.concat(&rhs.domain);
        let codomain = self.codomain.concat(&rhs.codomain);
        let rrows = rhs.nrows();
        let rcols = rhs.ncols();
        let mut out = SparseMat::zero_map(domain, codomain);
        for c1 in 0..self.cols.len() {
            for (r1, v1) in &self.cols[c1] {
                for c2 in 0..rcols {
                    for (r2, v2) in &rhs.cols[c2] {
                        let val = v1.clone() * v2.clone();
                        if !val.is_zero_scalar() {
                            let r = *r1 as usize * rrows + *r2 as usize;
                            let c = c1 * rcols + c2;
                            out.cols[c].push((r as u32, val));
                        }
                    }
                }
            }
        }
        for col in &mut out.cols {
            col.sort_by_key(|e| e.0);
        }
        out
    }

    pub fn add_mat(&self, rhs: &SparseMat<R>) -> Result<SparseMat<R>> {
        if self.domain != rhs.domain || self.codomain != rhs.codomain {
            return Err(Error::ShapeMismatch("add: shapes differ".into()));
        }
        let mut out = self.clone();
        for (r, c, v) in rhs.entries() {
            out.add_to(r, c, v.clone());
        }
        Ok(out)
    }

    pub fn sub_mat(&self, rhs: &SparseMat<R>) -> Result<SparseMat<R>> {
        if self.domain != rhs.domain || self.codomain != rhs.codomain {
            return Err(Error::ShapeMismatch("sub: shapes differ".into()));
        }
        let mut out = self.clone();
        for (r, c, v) in rhs.entries() {
            out.add_to(r, c, -v.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, s: &R) -> SparseMat<R> {
        let mut out = SparseMat::zero_map(self.domain.clone(), self.codomain.clone());
        if s.is_zero_scalar() {
            return out;
        }
        for (c, col) in self.cols.iter().enumerate() {
            out.cols[c] = col
                .iter()
                .filter_map(|(r, v)| {
                    let val = v.clone() * s.clone();
                    if val.is_zero_scalar() {
                        None
                    } else {
                        Some((*r, val))
                    }
                })
                .collect();
        }
        out
    }

    /// Reinterpret the matrix between different spaces of the same dimensions.
    pub fn with_spaces(mut self, domain: BasisSpace, codomain: BasisSpace) -> SparseMat<R> {
        assert_eq!(self.domain.dim(), domain.dim());
        assert_eq!(self.codomain.dim(), codomain.dim());
        self.domain = domain;
        self.codomain = codomain;
        self
    }

    pub fn transpose(&self) -> SparseMat<R> {
        let mut out = SparseMat::zero_map(self.codomain.clone(), self.domain.clone());
        for (r, c, v) in self.entries() {
            out.cols[r].push((c as u32, v.clone()));
        }
        for col in &mut out.cols {
            col.sort_by_key(|e| e.0);
        }
        out
    }

    /// Exact equality of the linear maps (entrywise; zero entries never stored).
    pub fn equals(&self, rhs: &SparseMat<R>) -> bool {
        if self.domain != rhs.domain || self.codomain != rhs.codomain {
            return false;
        }
        for c in 0..self.cols.len() {
            let a = &self.cols[c];
            let b = &rhs.cols[c];
            if a.len() != b.len() {
                return false;
            }
            for ((r1, v1), (r2, v2)) in a.iter().zip(b.iter()) {
                if r1 != r2 || v1 != v2 {
                    return false;
                }
            }
        }
        true
    }
}

/// Exact matrices over the calculus scalars.
impl SparseMat<FieldElem> {
    /// Specialize every entry at a prime-field point.
    pub fn eval_fp(&self, pt: &FpPoint) -> Result<SparseMat<Fp>> {
        let mut out = SparseMat::zero_map(self.domain.clone(), self.codomain.clone());
        for (c, col) in self.cols.iter().enumerate() {
            for (r, v) in col {
                let x = v.eval_fp(pt)?;
                if !x.is_zero() {
                    out.cols[c].push((*r, x));
                }
            }
        }
        Ok(out)
    }

    /// Substitute `v -> 1` in every entry.
    pub fn spec_v1(&self) -> SparseMat<FieldElem> {
        let mut out = SparseMat::zero_map(self.domain.clone(), self.codomain.clone());
        for (c, col) in self.cols.iter().enumerate() {
            out.cols[c] = col
                .iter()
                .filter_map(|(r, v)| {
                    let x = v.spec_v1();
                    if x.is_zero() {
                        None
                    } else {
                        Some((*r, x))
                    }
                })
                .collect();
        }
        out
    }

    /// `true` iff the product over `roots` of `(self - root * id)` is zero.
    pub fn annihilates(&self, roots: &[FieldElem]) -> Result<bool> {
        if self.domain != self.codomain {
            return Err(Error::ShapeMismatch("annihilates: map not square".into()));
        }
        let id = SparseMat::identity(self.domain.clone());
        let mut acc = id.clone();
        for root in roots {
            let factor = self.sub_mat(&id.scale(root))?;
            acc = factor.compose(&acc)?;
        }
        Ok(acc.is_zero_map())
    }
}

/// Row-reduce a dense `F_p` matrix in place, returning the rank.
fn fp_rank_dense(rows: &mut Vec<Vec<u64>>, p: u64) -> usize {
    let nrows = rows.len();
    if nrows == 0 {
        return 0;
    }
    let ncols = rows[0].len();
    let mut rank = 0;
    let mut pivot_col = 0;
    while rank < nrows && pivot_col < ncols {
        let Some(pivot_row) = (rank..nrows).find(|&r| rows[r][pivot_col] != 0) else {
            pivot_col += 1;
            continue;
        };
        rows.swap(rank, pivot_row);
        let inv = Fp {
            val: rows[rank][pivot_col],
            p,
        }
        .inv()
        .val;
        for c in pivot_col..ncols {
            rows[rank][c] = ((rows[rank][c] as u128 * inv as u128) % p as u128) as u64;
        }
        for r in 0..nrows {
            if r != rank && rows[r][pivot_col] != 0 {
                let factor = rows[r][pivot_col];
                for c in pivot_col..ncols {
                    let sub = (rows[rank][c] as u128 * factor as u128) % p as u128;
                    rows[r][c] = ((rows[r][c] as u128 + p as u128 - sub) % p as u128) as u64;
                }
            }
        }
        rank += 1;
        pivot_col += 1;
    }
    rank
}

/// Maximum rank of the span of the given maps over `points` random
/// prime-field specializations. Each map is vectorized into one row.
/// Points with vanishing denominators are retried (bounded).
pub fn rank_specialized(maps: &[SparseMat<FieldElem>], points: usize, seed: u64) -> Result<usize> {
    assert!(points >= 1);
    if maps.is_empty() {
        return Ok(0);
    }
    let d = maps
        .iter()
        .flat_map(|m| m.entries().map(|(_, _, v)| v.numerator().width()))
        .max()
        .unwrap_or(1)
        .saturating_sub(1)
        .max(1);
    let ncols = maps[0].nrows() * maps[0].ncols();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best = 0;
    for i in 0..points {
        let p = PRIMES[i % PRIMES.len()];
        let mut attempts = 0;
        let rank = loop {
            let pt = FpPoint::random(&mut rng, d, p);
            let specialized: Result<Vec<Vec<u64>>> = maps
                .iter()
                .map(|m| {
                    let fp = m.eval_fp(&pt)?;
                    let mut row = vec![0u64; ncols];
                    for (r, c, v) in fp.entries() {
                        row[r * m.ncols() + c] = v.val;
                    }
                    Ok(row)
                })
                .collect();
            match specialized {
                Ok(mut rows) => break fp_rank_dense(&mut rows, p),
                Err(Error::DenominatorVanishes) => {
                    attempts += 1;
                    if attempts > 16 {
                        return Err(Error::DenominatorVanishes);
                    }
                }
                Err(e) => return Err(e),
            }
        };
        best = best.max(rank);
    }
    Ok(best)
}

/// Rank of a single map via specialization.
pub fn rank_of_map(map: &SparseMat<FieldElem>, points: usize, seed: u64) -> Result<usize> {
    assert!(points >= 1);
    let d = map
        .entries()
        .map(|(_, _, v)| v.numerator().width())
        .max()
        .unwrap_or(1)
        .saturating_sub(1)
        .max(1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best = 0;
    for i in 0..points {
        let p = PRIMES[i % PRIMES.len()];
        let mut attempts = 0;
        let rank = loop {
            let pt = FpPoint::random(&mut rng, d, p);
            match map.eval_fp(&pt) {
                Ok(fp) => {
                    let mut rows = vec![vec![0u64; fp.ncols()]; fp.nrows()];
                    for (r, c, v) in fp.entries() {
                        rows[r][c] = v.val;
                    }
                    break fp_rank_dense(&mut rows, p);
                }
                Err(Error::DenominatorVanishes) => {
                    attempts += 1;
                    if attempts > 16 {
                        return Err(Error::DenominatorVanishes);
                    }
                }
                Err(e) => return Err(e),
            }
        };
        best = best.max(rank);
    }
    Ok(best)
}

/// Serialized matrix format.
#[derive(Serialize, Deserialize)]
pub struct MatrixJson {
    pub n: u8,
    pub domain: Word,
    pub codomain: Word,
    pub entries: Vec<(usize, usize, String)>,
}

impl SparseMat<FieldElem> {
    pub fn to_json(&self) -> MatrixJson {
        let mut entries: Vec<(usize, usize, String)> = self
            .entries()
            .map(|(r, c, v)| (r, c, v.to_string()))
            .collect();
        entries.sort_by_key(|&(r, c, _)| (r, c));
        MatrixJson {
            n: self.domain.n,
            domain: self.domain.word.clone(),
            codomain: self.codomain.word.clone(),
            entries,
        }
    }

    pub fn from_json(j: &MatrixJson) -> Result<SparseMat<FieldElem>> {
        let domain = BasisSpace::new(j.n, j.domain.clone());
        let codomain = BasisSpace::new(j.n, j.codomain.clone());
        let mut m = SparseMat::zero_map(domain, codomain);
        for (r, c, s) in &j.entries {
            if *r >= m.nrows() || *c >= m.ncols() {
                return Err(Error::ShapeMismatch("entry outside matrix".into()));
            }
            m.set(*r, *c, parse_scalar(s)?);
        }
        Ok(m)
    }
}

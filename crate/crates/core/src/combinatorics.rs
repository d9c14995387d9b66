//! Index sets and statistics: subsets, the `|S<T|` and `|S,N|` statistics,
//! d-partitions, standard d-tableaux, and colored permutations.

use crate::error::{Error, Result};

/// Strictly increasing sequence of integers in `1..=n`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct SubsetLabel(pub Vec<u8>);

impl SubsetLabel {
    pub fn new(elements: Vec<u8>) -> Self {
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        SubsetLabel(elements)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, x: u8) -> bool {
        self.0.binary_search(&x).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = u8> + '_ {
        self.0.iter().copied()
    }

    pub fn is_disjoint(&self, other: &SubsetLabel) -> bool {
        self.0.iter().all(|x| !other.contains(*x))
    }

    pub fn union(&self, other: &SubsetLabel) -> SubsetLabel {
        let mut v: Vec<u8> = self.0.iter().chain(other.0.iter()).copied().collect();
        v.sort_unstable();
        SubsetLabel(v)
    }
}

/// All size-`k` subsets of `1..=n` in lexicographic order.
pub fn subsets(n: u8, k: usize) -> Vec<SubsetLabel> {
    let mut out = Vec::new();
    let mut cur: Vec<u8> = Vec::with_capacity(k);
    fn rec(n: u8, k: usize, start: u8, cur: &mut Vec<u8>, out: &mut Vec<SubsetLabel>) {
        if cur.len() == k {
            out.push(SubsetLabel(cur.clone()));
            return;
        }
        for x in start..=n {
            cur.push(x);
            rec(n, k, x + 1, cur, out);
            cur.pop();
        }
    }
    rec(n, k, 1, &mut cur, &mut out);
    out
}

/// `|S<T|`: number of pairs `(s, t) in S x T` with `s < t`.
pub fn cross_count(s: &SubsetLabel, t: &SubsetLabel) -> usize {
    s.iter()
        .map(|x| t.iter().filter(|&y| x < y).count())
        .sum()
}

/// `|S,N| = |S<N| - |N<S|` with `N = (1, ..., n)`.
pub fn n_weight(s: &SubsetLabel, n: u8) -> i64 {
    let nn = SubsetLabel((1..=n).collect());
    cross_count(s, &nn) as i64 - cross_count(&nn, s) as i64
}

/// A partition in English convention: weakly decreasing row lengths.
pub type Partition = Vec<usize>;

/// A d-tuple of partitions.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct DPartition(pub Vec<Partition>);

impl DPartition {
    pub fn size(&self) -> usize {
        self.0.iter().map(|p| p.iter().sum::<usize>()).sum()
    }
}

/// Standard d-tableau: each cell holds one of `1..=m`, rows and columns
/// increase within each component.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DTableau {
    pub shape: DPartition,
    /// `rows[comp][row][col]` = entry
    pub rows: Vec<Vec<Vec<usize>>>,
}

impl DTableau {
    /// Position of entry `i`: (component, row, column), all 1-based.
    pub fn position_of(&self, i: usize) -> Option<(usize, usize, usize)> {
        for (c, comp) in self.rows.iter().enumerate() {
            for (r, row) in comp.iter().enumerate() {
                for (col, &e) in row.iter().enumerate() {
                    if e == i {
                        return Some((c + 1, r + 1, col + 1));
                    }
                }
            }
        }
        None
    }
}

fn partitions_bounded(m: usize, max_rows: usize, max_first: usize) -> Vec<Partition> {
    if m == 0 {
        return vec![vec![]];
    }
    if max_rows == 0 {
        return vec![];
    }
    let mut out = Vec::new();
    for first in (1..=m.min(max_first)).rev() {
        for rest in partitions_bounded(m - first, max_rows - 1, first) {
            let mut p = vec![first];
            p.extend(rest);
            out.push(p);
        }
    }
    out
}

/// All d-partitions of `m` whose `i`-th component has at most `limits[i]` rows.
pub fn bounded_dpartitions(m: usize, limits: &[usize]) -> Vec<DPartition> {
    fn rec(m: usize, limits: &[usize], acc: &mut Vec<Partition>, out: &mut Vec<DPartition>) {
        if limits.is_empty() {
            if m == 0 {
                out.push(DPartition(acc.clone()));
            }
            return;
        }
        for sz in 0..=m {
            for p in partitions_bounded(sz, limits[0], sz.max(1)) {
                acc.push(p);
                rec(m - sz, &limits[1..], acc, out);
                acc.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(m, limits, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// All standard fillings of a d-partition by `1..=m`.
pub fn standard_tableaux(shape: &DPartition) -> Vec<DTableau> {
    let m = shape.size();
    let empty: Vec<Vec<Vec<usize>>> = shape
        .0
        .iter()
        .map(|p| p.iter().map(|_| Vec::new()).collect())
        .collect();
    let mut out = Vec::new();
    fn rec(
        shape: &DPartition,
        next: usize,
        m: usize,
        rows: &mut Vec<Vec<Vec<usize>>>,
        out: &mut Vec<DTableau>,
    ) {
        if next > m {
            out.push(DTableau {
                shape: shape.clone(),
                rows: rows.clone(),
            });
            return;
        }
        for c in 0..shape.0.len() {
            for r in 0..shape.0[c].len() {
                let filled = rows[c][r].len();
                if filled >= shape.0[c][r] {
                    continue;
                }
                // column condition: cell above (same column, previous row) filled
                if r > 0 && rows[c][r - 1].len() <= filled {
                    continue;
                }
                rows[c][r].push(next);
                rec(shape, next + 1, m, rows, out);
                rows[c][r].pop();
            }
        }
    }
    let mut rows = empty;
    rec(shape, 1, m, &mut rows, &mut out);
    out
}

/// A colored permutation: `perm[r]` is the (0-based) target position of the
/// strand starting at (0-based) position `r`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ColoredPermutation(pub Vec<usize>);

fn has_decreasing_subseq(vals: &[usize], len: usize) -> bool {
    if len == 0 {
        return true;
    }
    if vals.len() < len {
        return false;
    }
    // longest strictly decreasing subsequence via patience on reversed order
    let mut tails: Vec<usize> = Vec::new(); // tails[i] = largest tail of a decreasing subseq of length i+1
    for &x in vals {
        // find first tail <= x, replace; else push
        let pos = tails.partition_point(|&t| t > x);
        if pos == tails.len() {
            tails.push(x);
        } else {
            tails[pos] = x;
        }
        if tails.len() >= len {
            return true;
        }
    }
    false
}

/// Color-preserving permutations from color word `s` to color word `t` whose
/// color-`i` subpermutation avoids the decreasing pattern of length
/// `limits[i-1] + 1`. Errors when the color multisets differ.
pub fn colored_permutations(
    s: &[usize],
    t: &[usize],
    limits: &[usize],
) -> Result<Vec<ColoredPermutation>> {
    let k = s.len();
    if t.len() != k {
        return Err(Error::ColorMismatch);
    }
    let d = limits.len();
    let mut count_s = vec![0usize; d + 1];
    let mut count_t = vec![0usize; d + 1];
    for &c in s {
        if c == 0 || c > d {
            return Err(Error::ColorMismatch);
        }
        count_s[c] += 1;
    }
    for &c in t {
        if c == 0 || c > d {
            return Err(Error::ColorMismatch);
        }
        count_t[c] += 1;
    }
    if count_s != count_t {
        return Err(Error::ColorMismatch);
    }

    // positions of each color in s and t
    let mut s_pos: Vec<Vec<usize>> = vec![Vec::new(); d + 1];
    let mut t_pos: Vec<Vec<usize>> = vec![Vec::new(); d + 1];
    for (i, &c) in s.iter().enumerate() {
        s_pos[c].push(i);
    }
    for (i, &c) in t.iter().enumerate() {
        t_pos[c].push(i);
    }

    // enumerate per-color bijections as sub-permutations, filter by pattern,
    // then splice together
    let mut per_color: Vec<Vec<Vec<usize>>> = Vec::with_capacity(d + 1);
    per_color.push(Vec::new());
    for c in 1..=d {
        let mc = s_pos[c].len();
        let mut all: Vec<Vec<usize>> = Vec::new();
        let mut idx: Vec<usize> = (0..mc).collect();
        permutations(&mut idx, 0, &mut |perm| {
            if !has_decreasing_subseq(perm, limits[c - 1] + 1) {
                all.push(perm.to_vec());
            }
        });
        all.sort();
        per_color.push(all);
    }

    let mut out = Vec::new();
    let mut choice = vec![0usize; d + 1];
    loop {
        let mut perm = vec![0usize; k];
        for c in 1..=d {
            if s_pos[c].is_empty() {
                continue;
            }
            let sub = &per_color[c][choice[c]];
            for (r, &img) in sub.iter().enumerate() {
                perm[s_pos[c][r]] = t_pos[c][img];
            }
        }
        out.push(ColoredPermutation(perm));
        // odometer over per-color choices
        let mut c = 1;
        loop {
            if c > d {
                return Ok(out);
            }
            if per_color[c].is_empty() {
                c += 1;
                continue;
            }
            choice[c] += 1;
            if choice[c] < per_color[c].len() {
                break;
            }
            choice[c] = 0;
            c += 1;
        }
    }
}

fn permutations(vals: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == vals.len() {
        f(vals);
        return;
    }
    for i in k..vals.len() {
        vals.swap(k, i);
        permutations(vals, k + 1, f);
        vals.swap(k, i);
    }
}

/// All permutations of `0..k` (as target-position vectors), sorted.
pub fn all_permutations(k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..k).collect();
    permutations(&mut idx, 0, &mut |p| out.push(p.to_vec()));
    out.sort();
    out
}

/// Coxeter length (inversion count) of a permutation given as target positions.
pub fn inversions(perm: &[usize]) -> usize {
    let mut inv = 0;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                inv += 1;
            }
        }
    }
    inv
}

/// A reduced word (as adjacent transposition indices, 0-based) for the
/// permutation, peeled off from the left.
pub fn reduced_word(perm: &[usize]) -> Vec<usize> {
    let mut p = perm.to_vec();
    let mut word = Vec::new();
    loop {
        // find a descent p[i] > p[i+1]; applying s_i on positions reduces length
        match (0..p.len().saturating_sub(1)).find(|&i| p[i] > p[i + 1]) {
            Some(i) => {
                p.swap(i, i + 1);
                word.push(i);
            }
            None => break,
        }
    }
    word.reverse();
    word
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cross_count_examples() {
        let s1 = SubsetLabel::new(vec![1]);
        let s2 = SubsetLabel::new(vec![2]);
        assert_eq!(cross_count(&s1, &s2), 1);
        assert_eq!(cross_count(&s1, &s1), 0);
        let s13 = SubsetLabel::new(vec![1, 3]);
        assert_eq!(cross_count(&s13, &s2), 1);
    }

    #[test]
    fn cross_count_symmetry() {
        // |S<T| + |T<S| = |S|*|T| - |S cap T| on arbitrary subsets
        for n in 1u8..=5 {
            for s in subsets(n, 2) {
                for t in subsets(n, 3.min(n as usize)) {
                    let cap = s.iter().filter(|x| t.contains(*x)).count();
                    assert_eq!(
                        cross_count(&s, &t) + cross_count(&t, &s),
                        s.len() * t.len() - cap
                    );
                }
            }
        }
    }

    #[test]
    fn n_weight_examples() {
        assert_eq!(n_weight(&SubsetLabel::new(vec![1]), 2), 1);
        assert_eq!(n_weight(&SubsetLabel::new(vec![2]), 2), -1);
        for n in 1..=5u8 {
            let full = SubsetLabel::new((1..=n).collect());
            assert_eq!(n_weight(&full, n), 0);
        }
    }

    #[test]
    fn dpartitions_examples() {
        let got = bounded_dpartitions(2, &[1, 1]);
        let expect = vec![
            DPartition(vec![vec![], vec![2]]),
            DPartition(vec![vec![1], vec![1]]),
            DPartition(vec![vec![2], vec![]]),
        ];
        assert_eq!(got, expect);
        assert_eq!(bounded_dpartitions(0, &[2, 3]).len(), 1);
        let std = standard_tableaux(&DPartition(vec![vec![1], vec![1]]));
        assert_eq!(std.len(), 2);
    }

    #[test]
    fn robinson_schensted_sanity() {
        // d=1 unbounded: sum of |Std|^2 over partitions of m equals m!
        for m in 0..=5usize {
            let total: usize = bounded_dpartitions(m, &[m.max(1)])
                .iter()
                .map(|p| standard_tableaux(p).len().pow(2))
                .sum();
            let fact: usize = (1..=m).product::<usize>().max(1);
            assert_eq!(total, fact, "m={m}");
        }
    }

    #[test]
    fn tableau_positions() {
        let shape = DPartition(vec![vec![2], vec![1]]);
        let tabs = standard_tableaux(&shape);
        assert_eq!(tabs.len(), 3);
        for t in &tabs {
            for i in 1..=3 {
                assert!(t.position_of(i).is_some());
            }
        }
    }

    #[test]
    fn colored_permutation_examples() {
        // s = t = (1,2): only the identity is color-preserving
        let got = colored_permutations(&[1, 2], &[1, 2], &[5, 5]).unwrap();
        assert_eq!(got.len(), 1);
        assert_eq!(got[0].0, vec![0, 1]);
        // s = t = (1,1), l_1 = 1: transposition excluded
        let got = colored_permutations(&[1, 1], &[1, 1], &[1]).unwrap();
        assert_eq!(got.len(), 1);
        // mismatch
        assert!(matches!(
            colored_permutations(&[1], &[2], &[1, 1]),
            Err(Error::ColorMismatch)
        ));
        // vacuous when the color appears at most l_i times
        let got = colored_permutations(&[1, 1], &[1, 1], &[2]).unwrap();
        assert_eq!(got.len(), 2);
    }

    #[test]
    fn decreasing_subseq_detector() {
        assert!(has_decreasing_subseq(&[3, 1, 2], 2));
        assert!(!has_decreasing_subseq(&[1, 2, 3], 2));
        assert!(has_decreasing_subseq(&[4, 5, 3, 1], 3));
        assert!(!has_decreasing_subseq(&[2, 4, 1, 3], 3));
    }

    #[test]
    fn reduced_word_roundtrip() {
        for perm in all_permutations(4) {
            let w = reduced_word(&perm);
            assert_eq!(w.len(), inversions(&perm));
            // rebuild: apply transpositions to the identity
            let mut p: Vec<usize> = (0..4).collect();
            for &i in &w {
                p.swap(i, i + 1);
            }
            assert_eq!(p, perm);
        }
    }
}

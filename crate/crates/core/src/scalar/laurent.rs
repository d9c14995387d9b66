//! Multivariate Laurent polynomials over the integers.
//!
//! Variables are `v` (slot 0) and `u_1, u_2, ...` (slots 1, 2, ...).
//! Exponent vectors are stored with trailing zeros trimmed, and compared
//! as if zero-padded, so `v*u1^0` and `v` are the same key.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_traits::{One, Zero};

/// Exponent vector: slot 0 is the `v` exponent, slot `i >= 1` the `u_i` exponent.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Expo(Vec<i32>);

impl Expo {
    pub fn new(mut exps: Vec<i32>) -> Self {
        while exps.last() == Some(&0) {
            exps.pop();
        }
        Expo(exps)
    }

    pub fn v_pow(e: i32) -> Self {
        Expo::new(vec![e])
    }

    /// Exponent vector of `u_i` (1-based index).
    pub fn u_pow(i: usize, e: i32) -> Self {
        let mut exps = vec![0; i + 1];
        exps[i] = e;
        Expo::new(exps)
    }

    pub fn get(&self, slot: usize) -> i32 {
        self.0.get(slot).copied().unwrap_or(0)
    }

    pub fn width(&self) -> usize {
        self.0.len()
    }

    fn combine(&self, other: &Expo, f: impl Fn(i32, i32) -> i32) -> Expo {
        let w = self.0.len().max(other.0.len());
        Expo::new((0..w).map(|i| f(self.get(i), other.get(i))).collect())
    }

    pub fn add(&self, other: &Expo) -> Expo {
        self.combine(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Expo) -> Expo {
        self.combine(other, |a, b| a - b)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }
}

impl PartialOrd for Expo {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Expo {
    fn cmp(&self, other: &Self) -> Ordering {
        let w = self.0.len().max(other.0.len());
        for i in 0..w {
            match self.get(i).cmp(&other.get(i)) {
                Ordering::Equal => continue,
                ord => return ord,
            }
        }
        Ordering::Equal
    }
}

/// Integer Laurent polynomial in `v` and the `u_i`. No zero coefficients stored.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<Expo, i128>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { terms: BTreeMap::new() }
    }

    pub fn constant(c: i128) -> Self {
        let mut terms = BTreeMap::new();
        if c != 0 {
            terms.insert(Expo::default(), c);
        }
        LaurentPoly { terms }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn monomial(expo: Expo, coeff: i128) -> Self {
        let mut terms = BTreeMap::new();
        if coeff != 0 {
            terms.insert(expo, coeff);
        }
        LaurentPoly { terms }
    }

    /// `v^e`
    pub fn v(e: i32) -> Self {
        Self::monomial(Expo::v_pow(e), 1)
    }

    /// `u_i^e` with `i` 1-based.
    pub fn u(i: usize, e: i32) -> Self {
        Self::monomial(Expo::u_pow(i, e), 1)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&Expo::default()) == Some(&1)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms.keys().next().unwrap().is_zero())
    }

    pub fn constant_value(&self) -> Option<i128> {
        if self.terms.is_empty() {
            Some(0)
        } else if self.is_constant() {
            self.terms.values().next().copied()
        } else {
            None
        }
    }

    pub fn nterms(&self) -> usize {
        self.terms.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Expo, &i128)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, expo: Expo, coeff: i128) {
        if coeff == 0 {
            return;
        }
        match self.terms.entry(expo) {
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if *o.get() == 0 {
                    o.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
        }
    }

    /// Largest variable slot in use (0 = only `v`).
    pub fn width(&self) -> usize {
        self.terms.keys().map(|e| e.width()).max().unwrap_or(0)
    }

    /// Is the polynomial a single monomial with coefficient +/-1?
    pub fn as_unit_monomial(&self) -> Option<(Expo, i128)> {
        if self.terms.len() == 1 {
            let (e, &c) = self.terms.iter().next().unwrap();
            if c == 1 || c == -1 {
                return Some((e.clone(), c));
            }
        }
        None
    }

    pub fn as_monomial(&self) -> Option<(Expo, i128)> {
        if self.terms.len() == 1 {
            let (e, &c) = self.terms.iter().next().unwrap();
            Some((e.clone(), c))
        } else {
            None
        }
    }

    /// Leading term in the padded-lexicographic order.
    pub fn lead(&self) -> Option<(&Expo, &i128)> {
        self.terms.iter().next_back()
    }

    /// Componentwise minimum of the exponent vectors in the support.
    fn trail_shift(&self) -> Expo {
        let w = self.width();
        let mut mins = vec![i32::MAX; w];
        for e in self.terms.keys() {
            for (slot, m) in mins.iter_mut().enumerate() {
                *m = (*m).min(e.get(slot));
            }
        }
        Expo::new(mins)
    }

    /// Exact division; returns `None` if `self` is not a multiple of `rhs`.
    ///
    /// Both operands are shifted to ordinary polynomials (all exponents
    /// nonnegative); lex monomial division then decides divisibility.
    pub fn div_exact(&self, rhs: &LaurentPoly) -> Option<LaurentPoly> {
        if rhs.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(LaurentPoly::zero());
        }
        if let Some((e, c)) = rhs.as_monomial() {
            let mut out = LaurentPoly::zero();
            for (te, tc) in &self.terms {
                if tc % c != 0 {
                    return None;
                }
                out.add_term(te.sub(&e), tc / c);
            }
            return Some(out);
        }
        let shift = self.trail_shift().sub(&rhs.trail_shift());
        let lead_e = rhs.lead().unwrap().0.clone();
        let lead_c = *rhs.lead().unwrap().1;
        let mut rem = self.clone();
        let mut quot = LaurentPoly::zero();
        // exponents of the true quotient are bounded below by `shift`
        while !rem.is_zero() {
            let (re, rc) = {
                let (e, c) = rem.lead().unwrap();
                (e.clone(), *c)
            };
            if rc % lead_c != 0 {
                return None;
            }
            let qe = re.sub(&lead_e);
            if (0..qe.width().max(shift.width())).any(|s| qe.get(s) < shift.get(s)) {
                return None;
            }
            let qc = rc / lead_c;
            quot.add_term(qe.clone(), qc);
            rem -= &(rhs * &LaurentPoly::monomial(qe, qc));
        }
        Some(quot)
    }

    /// Substitute `v -> 1`, keeping the `u_i` symbolic.
    pub fn spec_v1(&self) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e, c) in &self.terms {
            let mut exps: Vec<i32> = (0..e.width()).map(|i| e.get(i)).collect();
            if !exps.is_empty() {
                exps[0] = 0;
            }
            out.add_term(Expo::new(exps), *c);
        }
        out
    }
}

impl Zero for LaurentPoly {
    fn zero() -> Self {
        LaurentPoly::zero()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for LaurentPoly {
    fn one() -> Self {
        LaurentPoly::one()
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.terms {
            let entry = self.terms.entry(e.clone()).or_insert(0);
            *entry += c;
            if *entry == 0 {
                self.terms.remove(e);
            }
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.terms {
            let entry = self.terms.entry(e.clone()).or_insert(0);
            *entry -= c;
            if *entry == 0 {
                self.terms.remove(e);
            }
        }
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self += &rhs;
        self
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self -= &rhs;
        self
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect(),
        }
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -self.clone()
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(e1.add(e2), c1 * c2);
            }
        }
        out
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl MulAssign<&LaurentPoly> for LaurentPoly {
    fn mul_assign(&mut self, rhs: &LaurentPoly) {
        *self = &*self * rhs;
    }
}

impl MulAssign<i128> for LaurentPoly {
    fn mul_assign(&mut self, rhs: i128) {
        if rhs == 0 {
            self.terms.clear();
            return;
        }
        for c in self.terms.values_mut() {
            *c *= rhs;
        }
    }
}

fn fmt_monomial(f: &mut fmt::Formatter<'_>, e: &Expo, c: i128, leading: bool) -> fmt::Result {
    let coeff = if leading {
        if c < 0 {
            write!(f, "-")?;
        }
        c.unsigned_abs()
    } else {
        if c < 0 {
            write!(f, " - ")?;
        } else {
            write!(f, " + ")?;
        }
        c.unsigned_abs()
    };
    let mut parts: Vec<String> = Vec::new();
    for slot in 0..e.width() {
        let exp = e.get(slot);
        if exp == 0 {
            continue;
        }
        let name = if slot == 0 {
            "v".to_string()
        } else {
            format!("u{slot}")
        };
        if exp == 1 {
            parts.push(name);
        } else {
            parts.push(format!("{name}^{exp}"));
        }
    }
    if parts.is_empty() {
        write!(f, "{coeff}")
    } else if coeff == 1 {
        write!(f, "{}", parts.join("*"))
    } else {
        write!(f, "{coeff}*{}", parts.join("*"))
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            fmt_monomial(f, e, *c, i == 0)?;
        }
        Ok(())
    }
}

/// Quantum integer `[a]` as a Laurent polynomial in `v`.
pub fn quantum_int(a: i64) -> LaurentPoly {
    if a == 0 {
        return LaurentPoly::zero();
    }
    if a < 0 {
        return -quantum_int(-a);
    }
    let mut p = LaurentPoly::zero();
    let mut e = a - 1;
    for _ in 0..a {
        p.add_term(Expo::v_pow(e as i32), 1);
        e -= 2;
    }
    p
}

/// Quantum factorial `[b]!`.
pub fn quantum_factorial(b: u32) -> LaurentPoly {
    let mut p = LaurentPoly::one();
    for i in 1..=b as i64 {
        p = &p * &quantum_int(i);
    }
    p
}

/// Gaussian binomial as a Laurent polynomial; the division is always exact.
pub fn quantum_binomial_poly(a: i64, b: u32) -> LaurentPoly {
    let mut num = LaurentPoly::one();
    for i in 0..b as i64 {
        num = &num * &quantum_int(a - i);
    }
    num.div_exact(&quantum_factorial(b))
        .expect("Gaussian binomial numerator is divisible by [b]!")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn expo_padded_order() {
        // v > v*u1^-1 under padded lexicographic comparison
        assert!(Expo::v_pow(1) > Expo::new(vec![1, -1]));
        assert!(Expo::new(vec![1, 1]) > Expo::v_pow(1));
        assert_eq!(Expo::new(vec![1, 0, 0]), Expo::v_pow(1));
    }

    #[test]
    fn quantum_int_values() {
        assert_eq!(quantum_int(0), LaurentPoly::zero());
        assert_eq!(quantum_int(1), LaurentPoly::one());
        let two = &LaurentPoly::v(1) + &LaurentPoly::v(-1);
        assert_eq!(quantum_int(2), two);
        assert_eq!(quantum_int(-2), -two);
        let three = &(&LaurentPoly::v(2) + &LaurentPoly::one()) + &LaurentPoly::v(-2);
        assert_eq!(quantum_int(3), three);
    }

    #[test]
    fn binomial_poly() {
        assert_eq!(quantum_binomial_poly(2, 1), quantum_int(2));
        assert_eq!(quantum_binomial_poly(5, 0), LaurentPoly::one());
        assert_eq!(quantum_binomial_poly(3, 1), quantum_int(3));
        // [4 choose 2] = [4][3]/[2] = v^4 + v^2 + 2 + v^-2 + v^-4
        let mut expect = LaurentPoly::zero();
        for (e, c) in [(4, 1), (2, 1), (0, 2), (-2, 1), (-4, 1)] {
            expect.add_term(Expo::v_pow(e), c);
        }
        assert_eq!(quantum_binomial_poly(4, 2), expect);
    }

    #[test]
    fn div_exact_roundtrip() {
        let a = &quantum_int(3) + &LaurentPoly::u(1, 2);
        let b = &quantum_int(2) - &LaurentPoly::u(2, -1);
        let prod = &a * &b;
        assert_eq!(prod.div_exact(&a), Some(b.clone()));
        assert_eq!(prod.div_exact(&b), Some(a.clone()));
        let off = &prod + &LaurentPoly::one();
        assert_eq!(off.div_exact(&a), None);
    }

    #[test]
    fn display_canonical() {
        let p = &(&LaurentPoly::monomial(Expo::new(vec![-2, 2]), 3) + &LaurentPoly::u(2, 1))
            - &LaurentPoly::one();
        assert_eq!(p.to_string(), "3*v^-2*u1^2 - 1 + u2");
    }

    #[test]
    fn spec_v1() {
        assert_eq!(quantum_int(4).spec_v1(), LaurentPoly::constant(4));
        let p = &LaurentPoly::v(3) * &LaurentPoly::u(1, 2);
        assert_eq!(p.spec_v1(), LaurentPoly::u(1, 2));
    }
}

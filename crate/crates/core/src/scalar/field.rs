//! Scalars of the calculus: fractions of Laurent polynomials whose
//! denominators are kept as factored multisets of atoms.
//!
//! The calculus only ever divides by quantum integers `[m]`, by differences
//! `u_i - u_j`, and by unit monomials; a general polynomial atom exists as a
//! fallback. Cancellation is by exact division against the numerator, so no
//! multivariate gcd is needed.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_traits::{One, Zero};

use super::fp::{Fp, FpPoint};
use super::laurent::{quantum_int, Expo, LaurentPoly};
use crate::error::Error;

/// A denominator atom. `QInt(m)` is the quantum integer `[m]` (`m >= 2`),
/// `UDiff(i, j)` is `u_i - u_j` with `i < j` (1-based).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum Atom {
    QInt(i64),
    UDiff(usize, usize),
    Poly(LaurentPoly),
}

impl Atom {
    pub fn poly(&self) -> LaurentPoly {
        match self {
            Atom::QInt(m) => quantum_int(*m),
            Atom::UDiff(i, j) => &LaurentPoly::u(*i, 1) - &LaurentPoly::u(*j, 1),
            Atom::Poly(p) => p.clone(),
        }
    }

    fn spec_v1(&self) -> Atom {
        match self {
            Atom::QInt(m) => Atom::Poly(LaurentPoly::constant(*m as i128)),
            Atom::UDiff(i, j) => Atom::UDiff(*i, *j),
            Atom::Poly(p) => Atom::Poly(p.spec_v1()),
        }
    }
}

/// Exact scalar in the fraction field of `Z[v^{+-1}, u_i^{+-1}]`.
#[derive(Clone, Debug)]
pub struct FieldElem {
    num: LaurentPoly,
    den: Vec<Atom>,
}

impl FieldElem {
    pub fn from_poly(num: LaurentPoly) -> Self {
        FieldElem { num, den: Vec::new() }
    }

    pub fn constant(c: i128) -> Self {
        Self::from_poly(LaurentPoly::constant(c))
    }

    pub fn v(e: i32) -> Self {
        Self::from_poly(LaurentPoly::v(e))
    }

    pub fn u(i: usize, e: i32) -> Self {
        Self::from_poly(LaurentPoly::u(i, e))
    }

    pub fn qint(a: i64) -> Self {
        Self::from_poly(quantum_int(a))
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denominator_atoms(&self) -> &[Atom] {
        &self.den
    }

    fn reduced(num: LaurentPoly, den: Vec<Atom>) -> Self {
        let mut num = num;
        let mut keep: Vec<Atom> = Vec::with_capacity(den.len());
        if num.is_zero() {
            return FieldElem { num, den: Vec::new() };
        }
        for atom in den {
            let ap = atom.poly();
            debug_assert!(!ap.is_zero(), "zero denominator atom");
            match num.div_exact(&ap) {
                Some(q) => num = q,
                None => keep.push(atom),
            }
        }
        // divide out a common unit monomial with any remaining Poly atoms
        keep.sort();
        FieldElem { num, den: keep }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.den.is_empty() && self.num.is_one()
    }

    /// Denominator as one polynomial.
    pub fn denominator_poly(&self) -> LaurentPoly {
        let mut p = LaurentPoly::one();
        for a in &self.den {
            p = &p * &a.poly();
        }
        p
    }

    /// Divide by the quantum integer `[m]`, `m != 0`.
    pub fn div_qint(&self, m: i64) -> Self {
        assert!(m != 0, "division by [0]");
        if m == 1 {
            return self.clone();
        }
        let mut out = self.clone();
        if m < 0 {
            out.num = -out.num;
            out.den.push(Atom::QInt(-m));
        } else {
            out.den.push(Atom::QInt(m));
        }
        Self::reduced(out.num, out.den)
    }

    /// Divide by `u_i - u_j`, `i != j`.
    pub fn div_udiff(&self, i: usize, j: usize) -> Self {
        assert!(i != j, "u_i - u_i vanishes");
        let mut out = self.clone();
        if i < j {
            out.den.push(Atom::UDiff(i, j));
        } else {
            out.num = -out.num;
            out.den.push(Atom::UDiff(j, i));
        }
        Self::reduced(out.num, out.den)
    }

    /// Multiplicative inverse. The numerator becomes a fallback atom unless it
    /// is a unit monomial.
    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero");
        let num = self.denominator_poly();
        if let Some((e, c)) = self.num.as_unit_monomial() {
            // 1/(c*x^e) = c*x^{-e} since c is a sign
            let inv_mono = LaurentPoly::monomial(Expo::default().sub(&e), c);
            return Self::reduced(&num * &inv_mono, Vec::new());
        }
        Self::reduced(num, vec![Atom::Poly(self.num.clone())])
    }

    pub fn pow(&self, e: i64) -> Self {
        if e < 0 {
            return self.recip().pow(-e);
        }
        let mut acc = FieldElem::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Exact equality `a/b = c/d  <=>  a*d - c*b = 0`.
    pub fn equals(&self, other: &FieldElem) -> bool {
        if self.den == other.den {
            return self.num == other.num;
        }
        let lhs = &self.num * &other.denominator_poly();
        let rhs = &other.num * &self.denominator_poly();
        lhs == rhs
    }

    /// Substitute `v -> 1`. Denominator atoms stay nonzero since `[m]` maps
    /// to the integer `m`.
    pub fn spec_v1(&self) -> FieldElem {
        let den = self.den.iter().map(|a| a.spec_v1()).collect();
        Self::reduced(self.num.spec_v1(), den)
    }

    /// Evaluate at a prime-field point.
    pub fn eval_fp(&self, pt: &FpPoint) -> Result<Fp, Error> {
        let mut acc = pt.eval_poly(&self.num);
        for a in &self.den {
            let d = pt.eval_nonzero(&a.poly())?;
            acc = acc * d.inv();
        }
        Ok(acc)
    }
}

impl PartialEq for FieldElem {
    fn eq(&self, other: &Self) -> bool {
        self.equals(other)
    }
}

impl Eq for FieldElem {}

impl Zero for FieldElem {
    fn zero() -> Self {
        FieldElem::from_poly(LaurentPoly::zero())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for FieldElem {
    fn one() -> Self {
        FieldElem::from_poly(LaurentPoly::one())
    }
    fn is_one(&self) -> bool {
        FieldElem::is_one(self)
    }
}

impl Add for &FieldElem {
    type Output = FieldElem;
    fn add(self, rhs: &FieldElem) -> FieldElem {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return FieldElem::reduced(&self.num + &rhs.num, self.den.clone());
        }
        // common denominator: union of the two multisets
        let mut shared: Vec<Atom> = Vec::new();
        let mut only_l = self.den.clone();
        let mut only_r = rhs.den.clone();
        let mut i = 0;
        while i < only_l.len() {
            if let Some(j) = only_r.iter().position(|a| *a == only_l[i]) {
                shared.push(only_r.remove(j));
                only_l.remove(i);
            } else {
                i += 1;
            }
        }
        let mut lnum = self.num.clone();
        for a in &only_r {
            lnum = &lnum * &a.poly();
        }
        let mut rnum = rhs.num.clone();
        for a in &only_l {
            rnum = &rnum * &a.poly();
        }
        let mut den = shared;
        den.extend(only_l);
        den.extend(only_r);
        FieldElem::reduced(&lnum + &rnum, den)
    }
}

impl Add for FieldElem {
    type Output = FieldElem;
    fn add(self, rhs: FieldElem) -> FieldElem {
        &self + &rhs
    }
}

impl AddAssign<&FieldElem> for FieldElem {
    fn add_assign(&mut self, rhs: &FieldElem) {
        *self = &*self + rhs;
    }
}

impl Sub for &FieldElem {
    type Output = FieldElem;
    fn sub(self, rhs: &FieldElem) -> FieldElem {
        self + &(-rhs)
    }
}

impl Sub for FieldElem {
    type Output = FieldElem;
    fn sub(self, rhs: FieldElem) -> FieldElem {
        &self - &rhs
    }
}

impl SubAssign<&FieldElem> for FieldElem {
    fn sub_assign(&mut self, rhs: &FieldElem) {
        *self = &*self - rhs;
    }
}

impl Neg for &FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        FieldElem {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        FieldElem {
            num: -self.num,
            den: self.den,
        }
    }
}

impl Mul for &FieldElem {
    type Output = FieldElem;
    fn mul(self, rhs: &FieldElem) -> FieldElem {
        if self.is_zero() || rhs.is_zero() {
            return FieldElem::zero();
        }
        let mut den = self.den.clone();
        den.extend(rhs.den.iter().cloned());
        FieldElem::reduced(&self.num * &rhs.num, den)
    }
}

impl Mul for FieldElem {
    type Output = FieldElem;
    fn mul(self, rhs: FieldElem) -> FieldElem {
        &self * &rhs
    }
}

impl MulAssign<&FieldElem> for FieldElem {
    fn mul_assign(&mut self, rhs: &FieldElem) {
        *self = &*self * rhs;
    }
}

impl Div for &FieldElem {
    type Output = FieldElem;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &FieldElem) -> FieldElem {
        self * &rhs.recip()
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_empty() {
            return write!(f, "{}", self.num);
        }
        let atoms: Vec<String> = self
            .den
            .iter()
            .map(|a| match a {
                Atom::QInt(m) => format!("[{m}]"),
                Atom::UDiff(i, j) => format!("(u{i}-u{j})"),
                Atom::Poly(p) => format!("({p})"),
            })
            .collect();
        if self.num.nterms() > 1 {
            write!(f, "({}) / {}", self.num, atoms.join("*"))
        } else {
            write!(f, "{} / {}", self.num, atoms.join("*"))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduce_cancels_qint() {
        let x = FieldElem::qint(2) * FieldElem::qint(3);
        let y = x.div_qint(2);
        assert_eq!(y, FieldElem::qint(3));
        assert!(y.denominator_atoms().is_empty());
    }

    #[test]
    fn add_with_common_denominator() {
        let a = FieldElem::one().div_qint(2);
        let b = FieldElem::one().div_qint(3);
        let s = &a + &b;
        // ([3]+[2]) / [2][3]
        let expect_num = &quantum_int(3) + &quantum_int(2);
        assert_eq!(s.numerator(), &expect_num);
        assert_eq!(s.denominator_atoms().len(), 2);
        let twice = &a + &a;
        assert_eq!(twice, FieldElem::constant(2).div_qint(2));
    }

    #[test]
    fn recip_of_monomial() {
        let m = FieldElem::v(2) * FieldElem::u(1, -1);
        let r = m.recip();
        assert_eq!(r, FieldElem::v(-2) * FieldElem::u(1, 1));
        assert!((&m * &r).is_one());
    }

    #[test]
    fn recip_general() {
        let x = FieldElem::qint(2).div_udiff(1, 2);
        let r = x.recip();
        assert!((&x * &r).is_one());
    }

    #[test]
    fn cross_equality() {
        // [2]/[2] == 1 even though shapes differ
        let a = FieldElem::qint(2).div_qint(2);
        assert!(a.is_one());
        let b = FieldElem::qint(6).div_qint(2).div_qint(3);
        let c = FieldElem::qint(6).div_qint(3).div_qint(2);
        assert_eq!(b, c);
    }

    #[test]
    fn udiff_sign_normalization() {
        let a = FieldElem::one().div_udiff(2, 1);
        let b = FieldElem::constant(-1).div_udiff(1, 2);
        assert_eq!(a, b);
    }

    #[test]
    fn display_fraction() {
        let x = FieldElem::qint(3).div_qint(2).div_udiff(1, 2);
        assert_eq!(x.to_string(), "(v^-2 + 1 + v^2) / [2]*(u1-u2)");
    }
}

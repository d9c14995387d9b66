//! Exact arithmetic over `Z[v^{+-1}, u_1^{+-1}, ..., u_d^{+-1}]` and its
//! fraction field, plus quantum-number and symmetric-polynomial helpers.

pub mod field;
pub mod fp;
pub mod laurent;
pub mod parse;

pub use field::{Atom, FieldElem};
pub use fp::{Fp, FpPoint, PRIMES};
pub use laurent::{quantum_binomial_poly, quantum_factorial, quantum_int, Expo, LaurentPoly};
pub use parse::parse_scalar;

use num_traits::{One, Zero};

use crate::error::Error;

/// Quantum integer `[a]` as a field element.
pub fn quantum_integer(a: i64) -> FieldElem {
    FieldElem::qint(a)
}

/// Quantum factorial `[b]!` as a field element.
pub fn quantum_factorial_elem(b: u32) -> FieldElem {
    FieldElem::from_poly(quantum_factorial(b))
}

/// Gaussian binomial; a Laurent polynomial in `v` after cancellation.
pub fn quantum_binomial(a: i64, b: u32) -> FieldElem {
    FieldElem::from_poly(quantum_binomial_poly(a, b))
}

/// `k`-th elementary symmetric polynomial of the arguments.
/// `e_0 = 1`; `k` exceeding the arity gives `0`.
pub fn elementary_symmetric(k: usize, args: &[FieldElem]) -> FieldElem {
    if k > args.len() {
        return FieldElem::zero();
    }
    // row k of the Newton triangle built one argument at a time
    let mut row: Vec<FieldElem> = vec![FieldElem::zero(); k + 1];
    row[0] = FieldElem::one();
    for x in args {
        for j in (1..=k).rev() {
            let bump = &row[j - 1] * x;
            row[j] = &row[j] + &bump;
        }
    }
    row[k].clone()
}

/// Assignment of exact values to `v` and the `u_i` (1-based slots).
#[derive(Clone, Debug)]
pub struct Assignment {
    pub v: FieldElem,
    pub u: Vec<FieldElem>,
}

impl Assignment {
    fn slot(&self, i: usize) -> Result<&FieldElem, Error> {
        if i == 0 {
            Ok(&self.v)
        } else {
            self.u.get(i - 1).ok_or(Error::IndexOutOfRange)
        }
    }
}

/// Substitute exact values for the variables; a ring homomorphism. Fails with
/// `DenominatorVanishes` when a denominator atom maps to zero.
pub fn specialize(x: &FieldElem, assignment: &Assignment) -> Result<FieldElem, Error> {
    let eval_poly = |p: &LaurentPoly| -> Result<FieldElem, Error> {
        let mut acc = FieldElem::zero();
        for (e, c) in p.iter() {
            let mut term = FieldElem::constant(*c);
            for slot in 0..e.width() {
                let exp = e.get(slot);
                if exp != 0 {
                    term = &term * &assignment.slot(slot)?.pow(exp as i64);
                }
            }
            acc = &acc + &term;
        }
        Ok(acc)
    };
    let mut acc = eval_poly(x.numerator())?;
    for atom in x.denominator_atoms() {
        let d = eval_poly(&atom.poly())?;
        if d.is_zero() {
            return Err(Error::DenominatorVanishes);
        }
        acc = &acc * &d.recip();
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int_binomial(n: i64, k: i64) -> i128 {
        if k < 0 || k > n {
            return 0;
        }
        let mut acc: i128 = 1;
        for i in 0..k {
            acc = acc * (n - i) as i128 / (i + 1) as i128;
        }
        acc
    }

    #[test]
    fn binomial_examples() {
        // (2,1) -> v + v^-1
        assert_eq!(quantum_binomial(2, 1), parse_scalar("v + v^-1").unwrap());
        // (a,0) -> 1
        assert!(quantum_binomial(7, 0).is_one());
        // (3,1) -> v^2 + 1 + v^-2
        assert_eq!(
            quantum_binomial(3, 1),
            parse_scalar("v^2 + 1 + v^-2").unwrap()
        );
    }

    #[test]
    fn binomial_classical_limit() {
        for n in 0..=8i64 {
            for k in 0..=n {
                let q = quantum_binomial(n, k as u32).spec_v1();
                assert_eq!(
                    q,
                    FieldElem::constant(int_binomial(n, k)),
                    "[{n} choose {k}] at v=1"
                );
            }
        }
    }

    #[test]
    fn elementary_symmetric_basics() {
        let x = FieldElem::u(1, 1);
        let y = FieldElem::u(2, 1);
        assert_eq!(elementary_symmetric(1, &[x.clone(), y.clone()]), &x + &y);
        assert!(elementary_symmetric(3, &[x.clone(), y.clone()]).is_zero());
        assert!(elementary_symmetric(0, &[]).is_one());
        assert_eq!(elementary_symmetric(2, &[x.clone(), y.clone()]), &x * &y);
    }

    #[test]
    fn elementary_symmetric_extreme_case() {
        // e_k(v^-1 u1, v^-3 u1, ..., v^{-2n+1} u1) = v^{-kn} [n choose k] u1^k
        for n in 1..=4i32 {
            for k in 0..=n as usize {
                let args: Vec<FieldElem> = (1..=n)
                    .map(|j| FieldElem::v(-2 * j + 1) * FieldElem::u(1, 1))
                    .collect();
                let got = elementary_symmetric(k, &args);
                let expect = FieldElem::v(-(k as i32) * n)
                    * quantum_binomial(n as i64, k as u32)
                    * FieldElem::u(1, k as i32);
                assert_eq!(got, expect, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn specialize_v1() {
        let x = parse_scalar("v + v^-1").unwrap();
        let a = Assignment {
            v: FieldElem::one(),
            u: vec![],
        };
        assert_eq!(specialize(&x, &a).unwrap(), FieldElem::constant(2));
    }

    #[test]
    fn specialize_denominator_vanishes() {
        let x = FieldElem::one().div_udiff(1, 2);
        let a = Assignment {
            v: FieldElem::one(),
            u: vec![FieldElem::constant(5), FieldElem::constant(5)],
        };
        assert!(matches!(
            specialize(&x, &a),
            Err(Error::DenominatorVanishes)
        ));
    }

    #[test]
    fn specialize_is_ring_hom() {
        let a = parse_scalar("v^2 - u1 + 3").unwrap();
        let b = parse_scalar("u2 + v^-1*u1").unwrap();
        let asn = Assignment {
            v: FieldElem::constant(2),
            u: vec![FieldElem::constant(3), FieldElem::constant(-7)],
        };
        let lhs = specialize(&(&a * &b), &asn).unwrap();
        let rhs = &specialize(&a, &asn).unwrap() * &specialize(&b, &asn).unwrap();
        assert_eq!(lhs, rhs);
        let lhs = specialize(&(&a + &b), &asn).unwrap();
        let rhs = &specialize(&a, &asn).unwrap() + &specialize(&b, &asn).unwrap();
        assert_eq!(lhs, rhs);
    }
}

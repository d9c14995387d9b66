//! Prime field arithmetic for probabilistic rank computations.

use rand::Rng;
use std::ops::{Add, Mul, Neg, Sub};

use super::laurent::LaurentPoly;
use crate::error::Error;

/// Primes larger than 2^30 used round-robin for specialization points.
pub const PRIMES: [u64; 3] = [2_147_483_647, 4_294_967_291, 34_359_738_337];

/// Element of `F_p`. The modulus travels with the value.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Fp {
    pub val: u64,
    pub p: u64,
}

impl Fp {
    pub fn new(val: i128, p: u64) -> Self {
        Fp {
            val: val.rem_euclid(p as i128) as u64,
            p,
        }
    }

    pub fn pow(self, mut e: i64) -> Self {
        if e < 0 {
            return self.inv().pow(-e);
        }
        let mut base = self;
        let mut acc = Fp { val: 1, p: self.p };
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }

    pub fn inv(self) -> Self {
        assert!(self.val != 0, "division by zero in F_p");
        self.pow(self.p as i64 - 2)
    }

    pub fn is_zero(&self) -> bool {
        self.val == 0
    }
}

impl Add for Fp {
    type Output = Fp;
    fn add(self, rhs: Fp) -> Fp {
        debug_assert_eq!(self.p, rhs.p);
        Fp {
            val: (self.val + rhs.val) % self.p,
            p: self.p,
        }
    }
}

impl Sub for Fp {
    type Output = Fp;
    fn sub(self, rhs: Fp) -> Fp {
        debug_assert_eq!(self.p, rhs.p);
        Fp {
            val: (self.val + self.p - rhs.val) % self.p,
            p: self.p,
        }
    }
}

impl Mul for Fp {
    type Output = Fp;
    fn mul(self, rhs: Fp) -> Fp {
        debug_assert_eq!(self.p, rhs.p);
        Fp {
            val: ((self.val as u128 * rhs.val as u128) % self.p as u128) as u64,
            p: self.p,
        }
    }
}

impl Neg for Fp {
    type Output = Fp;
    fn neg(self) -> Fp {
        Fp {
            val: (self.p - self.val) % self.p,
            p: self.p,
        }
    }
}

/// A specialization point: values for `v` and `u_1..u_d` in `F_p`.
#[derive(Clone, Debug)]
pub struct FpPoint {
    pub p: u64,
    pub v: u64,
    pub u: Vec<u64>,
}

impl FpPoint {
    /// Draw a random point with `v` not a low-order root of unity and the
    /// `u_i` pairwise distinct and nonzero.
    pub fn random<R: Rng>(rng: &mut R, d: usize, p: u64) -> FpPoint {
        let v = loop {
            let cand = rng.gen_range(2..p - 1);
            let fv = Fp { val: cand, p };
            let low_order = (1..=24).any(|j| fv.pow(j).val == 1);
            if !low_order {
                break cand;
            }
        };
        let mut u = Vec::with_capacity(d);
        while u.len() < d {
            let cand = rng.gen_range(1..p);
            if !u.contains(&cand) {
                u.push(cand);
            }
        }
        FpPoint { p, v, u }
    }

    pub fn eval_poly(&self, poly: &LaurentPoly) -> Fp {
        let mut acc = Fp { val: 0, p: self.p };
        let v = Fp { val: self.v, p: self.p };
        for (e, c) in poly.iter() {
            let mut term = Fp::new(*c, self.p);
            let ev = e.get(0);
            if ev != 0 {
                term = term * v.pow(ev as i64);
            }
            for (i, &uval) in self.u.iter().enumerate() {
                let eu = e.get(i + 1);
                if eu != 0 {
                    term = term * Fp { val: uval, p: self.p }.pow(eu as i64);
                }
            }
            acc = acc + term;
        }
        acc
    }

    /// Evaluate, failing with `DenominatorVanishes` when a denominator atom
    /// maps to zero.
    pub fn eval_nonzero(&self, poly: &LaurentPoly) -> Result<Fp, Error> {
        let x = self.eval_poly(poly);
        if x.is_zero() {
            Err(Error::DenominatorVanishes)
        } else {
            Ok(x)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn field_ops() {
        let p = PRIMES[0];
        let a = Fp::new(-3, p);
        assert_eq!(a.val, p - 3);
        assert_eq!((a * a.inv()).val, 1);
        assert_eq!(a.pow(0).val, 1);
        assert_eq!((a + (-a)).val, 0);
    }

    #[test]
    fn random_point_constraints() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let pt = FpPoint::random(&mut rng, 4, PRIMES[0]);
        assert_eq!(pt.u.len(), 4);
        for i in 0..4 {
            assert_ne!(pt.u[i], 0);
            for j in 0..i {
                assert_ne!(pt.u[i], pt.u[j]);
            }
        }
        let v = Fp { val: pt.v, p: pt.p };
        for j in 1..=24 {
            assert_ne!(v.pow(j).val, 1);
        }
    }
}

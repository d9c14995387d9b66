//! Matrices of the web and coil generators acting on tensor products of
//! exterior powers of the vector representation.

pub mod coil;
pub mod gens;
pub mod levi;
pub mod qg;

use crate::error::{Error, Result};
use crate::linalg::BasisSpace;

/// Whether matrices are taken at generic `v` or after `v -> 1`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum Mode {
    #[default]
    QGeneric,
    V1,
}

/// The rank `n` together with the composition `(l_1, ..., l_d)` cutting
/// `gl_n` into diagonal blocks.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LeviDatum {
    pub n: u8,
    pub comp: Vec<u8>,
    pub mode: Mode,
}

impl LeviDatum {
    pub fn new(n: u8, comp: Vec<u8>) -> Result<Self> {
        if comp.iter().map(|&l| l as u64).sum::<u64>() != n as u64 || comp.is_empty() {
            return Err(Error::ShapeMismatch(format!(
                "composition {comp:?} does not sum to n={n}"
            )));
        }
        Ok(LeviDatum {
            n,
            comp,
            mode: Mode::QGeneric,
        })
    }

    /// gl_n itself: a single block.
    pub fn full(n: u8) -> Self {
        LeviDatum::new(n, vec![n]).unwrap()
    }

    /// The Cartan subalgebra: all blocks of size one.
    pub fn cartan(n: u8) -> Self {
        LeviDatum::new(n, vec![1; n as usize]).unwrap()
    }

    pub fn d(&self) -> usize {
        self.comp.len()
    }

    /// Block of the flat basis index (both 1-based).
    pub fn block_of(&self, flat: u8) -> usize {
        debug_assert!(flat >= 1 && flat <= self.n);
        let mut acc = 0u8;
        for (i, &l) in self.comp.iter().enumerate() {
            acc += l;
            if flat <= acc {
                return i + 1;
            }
        }
        unreachable!("flat index out of range")
    }

    /// Flat index of `(block, position)` (all 1-based).
    pub fn flat_of(&self, block: usize, pos: u8) -> u8 {
        let offset: u8 = self.comp[..block - 1].iter().sum();
        offset + pos
    }

    pub fn space(&self, word: &[i32]) -> BasisSpace {
        BasisSpace::new(self.n, word.to_vec())
    }

    pub fn unit_space(&self) -> BasisSpace {
        BasisSpace::unit(self.n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn block_lookup() {
        let ctx = LeviDatum::new(8, vec![3, 3, 2]).unwrap();
        assert_eq!(ctx.block_of(1), 1);
        assert_eq!(ctx.block_of(3), 1);
        assert_eq!(ctx.block_of(4), 2);
        assert_eq!(ctx.block_of(7), 3);
        assert_eq!(ctx.flat_of(2, 1), 4);
        assert_eq!(ctx.flat_of(3, 2), 8);
    }

    #[test]
    fn composition_must_sum() {
        assert!(LeviDatum::new(3, vec![1, 1]).is_err());
        assert!(LeviDatum::new(3, vec![2, 1]).is_ok());
    }
}

//! Finite bigraded blocks of `δ: C² → C³`.
//!
//! Fixing a bigrade `(a, b)` fixes `a₀ = (a+b)/2` and the slot sum
//! `Σa_s = (b−a)/2`, so the 2- and 3-cochains of that bigrade are indexed
//! by ordered compositions of the slot sum. `δ` preserves bigrade, which
//! makes each block a finite linear system.

use std::collections::HashMap;

use crate::cochain::{BasisTerm, Cochain};
use crate::error::{Error, Result};
use crate::grading::Bigrade;
use crate::mc::linalg::Matrix;
use crate::ops::hochschild_delta;
use crate::poly::compositions;

#[derive(Debug, Clone)]
pub struct BlockSystem {
    pub bigrade: Bigrade,
    pub basis2: Vec<BasisTerm>,
    pub basis3: Vec<BasisTerm>,
    /// Column `j` holds the coordinates of `δ(basis2[j])` in `basis3`.
    pub matrix: Matrix,
    index3: HashMap<BasisTerm, usize>,
}

impl BlockSystem {
    /// Coordinates of an arity-3 cochain of this bigrade in `basis3`.
    pub fn coordinates3(&self, c: &Cochain) -> Result<Vec<crate::Rational>> {
        let mut v = vec![num::Zero::zero(); self.basis3.len()];
        for (t, k) in c.terms() {
            let i = self.index3.get(t).ok_or_else(|| {
                Error::Invalid(format!("term {t} is outside block {}", self.bigrade))
            })?;
            v[*i] = k.clone();
        }
        Ok(v)
    }

    /// The arity-2 cochain with the given coordinates in `basis2`.
    pub fn cochain2(&self, x: &[crate::Rational]) -> Cochain {
        let dim = self.bigrade.a.dim();
        Cochain::from_terms(dim, self.basis2.iter().cloned().zip(x.iter().cloned()))
            .expect("block terms share the dimension")
    }
}

fn basis(bg: &Bigrade, arity: usize) -> Vec<BasisTerm> {
    let x = bg.x_part();
    compositions(&bg.slot_sum(), arity)
        .into_iter()
        .map(|slots| BasisTerm::new(x.clone(), slots))
        .collect()
}

pub fn build_block(bg: &Bigrade, dim: usize) -> Result<BlockSystem> {
    crate::error::check_dim(dim, bg.a.dim())?;
    let bg = Bigrade::new(bg.a.clone(), bg.b.clone())?;
    let basis2 = basis(&bg, 2);
    let basis3 = basis(&bg, 3);
    let index3: HashMap<BasisTerm, usize> =
        basis3.iter().cloned().enumerate().map(|(i, t)| (t, i)).collect();
    let mut matrix = Matrix::zeros(basis3.len(), basis2.len());
    for (j, e) in basis2.iter().enumerate() {
        let d = hochschild_delta(&Cochain::from_term(e.clone(), num::One::one()));
        for (t, k) in d.terms() {
            let i = index3[t];
            matrix.set(i, j, k.clone());
        }
    }
    Ok(BlockSystem {
        bigrade: bg,
        basis2,
        basis3,
        matrix,
        index3,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symplectic_square_block_sizes() {
        let bg = Bigrade::new([-2, -2].into(), [2, 2].into()).unwrap();
        let b = build_block(&bg, 2).unwrap();
        assert_eq!(b.basis2.len(), 9);
        assert_eq!(b.basis3.len(), 36);
        assert!(b.basis2.iter().all(|t| t.x_part().is_zero()));
    }

    #[test]
    fn diagonal_block_is_one_dimensional() {
        let bg = Bigrade::new([1, 2].into(), [1, 2].into()).unwrap();
        let b = build_block(&bg, 2).unwrap();
        assert_eq!(b.basis2.len(), 1);
        assert_eq!(b.basis2[0], BasisTerm::new([1, 2].into(), vec![[0, 0].into(), [0, 0].into()]));
    }

    #[test]
    fn columns_are_coboundaries() {
        let bg = Bigrade::new([-1, -2].into(), [3, 2].into()).unwrap();
        let b = build_block(&bg, 2).unwrap();
        for (j, e) in b.basis2.iter().enumerate() {
            let d = hochschild_delta(&Cochain::from_term(e.clone(), num::One::one()));
            assert_eq!(b.coordinates3(&d).unwrap(), b.matrix.column(j));
        }
    }

    #[test]
    fn invalid_bigrade() {
        let bad = Bigrade { a: [0, 0].into(), b: [1, 0].into() };
        assert!(build_block(&bad, 2).is_err());
        let ok = Bigrade::new([0, 0].into(), [0, 0].into()).unwrap();
        assert!(build_block(&ok, 3).is_err());
    }
}

//! Integer lattices `ℤg₁ + … + ℤg_m ⊂ ℤⁿ` via Hermite-style row reduction.

use crate::index::IntIndex;

/// Echelon basis of the lattice spanned by a list of generators, with the
/// unimodular transform expressing each basis row in the generators.
#[derive(Debug, Clone)]
pub struct Lattice {
    dim: usize,
    // (row, pivot column, coefficients of the row in the generators)
    rows: Vec<(Vec<i128>, usize, Vec<i128>)>,
}

impl Lattice {
    pub fn new(dim: usize, generators: &[IntIndex]) -> Self {
        let m = generators.len();
        let mut work: Vec<(Vec<i128>, Vec<i128>)> = generators
            .iter()
            .enumerate()
            .map(|(i, g)| {
                let mut t = vec![0i128; m];
                t[i] = 1;
                (g.entries().iter().map(|&e| i128::from(e)).collect(), t)
            })
            .collect();

        let mut rows = Vec::new();
        for col in 0..dim {
            // Euclid on column `col` among the remaining rows
            loop {
                let mut nz: Vec<usize> = (0..work.len()).filter(|&i| work[i].0[col] != 0).collect();
                if nz.len() <= 1 {
                    if let Some(&i) = nz.first() {
                        let (mut v, mut t) = work.swap_remove(i);
                        if v[col] < 0 {
                            v.iter_mut().for_each(|e| *e = -*e);
                            t.iter_mut().for_each(|e| *e = -*e);
                        }
                        rows.push((v, col, t));
                    }
                    break;
                }
                nz.sort_by_key(|&i| work[i].0[col].abs());
                let p = nz[0];
                let pv = work[p].0[col];
                for &i in &nz[1..] {
                    let f = work[i].0[col].div_euclid(pv);
                    let (pr, pt) = (work[p].0.clone(), work[p].1.clone());
                    for (e, x) in work[i].0.iter_mut().zip(&pr) {
                        *e -= f * x;
                    }
                    for (e, x) in work[i].1.iter_mut().zip(&pt) {
                        *e -= f * x;
                    }
                }
            }
        }
        Lattice { dim, rows }
    }

    /// Integer coefficients `z` with `Σ zᵢ gᵢ = a`, if `a` lies in the lattice.
    pub fn coefficients(&self, a: &IntIndex) -> Option<Vec<i128>> {
        debug_assert_eq!(a.dim(), self.dim);
        let mut rest: Vec<i128> = a.entries().iter().map(|&e| i128::from(e)).collect();
        let m = self.rows.first().map_or(0, |r| r.2.len());
        let mut z = vec![0i128; m];
        for (row, col, t) in &self.rows {
            if rest[..*col].iter().any(|&e| e != 0) {
                return None;
            }
            let pv = row[*col];
            if rest[*col] % pv != 0 {
                return None;
            }
            let y = rest[*col] / pv;
            for (e, x) in rest.iter_mut().zip(row) {
                *e -= y * x;
            }
            for (e, x) in z.iter_mut().zip(t) {
                *e += y * x;
            }
        }
        rest.iter().all(|&e| e == 0).then_some(z)
    }

    pub fn contains(&self, a: &IntIndex) -> bool {
        self.coefficients(a).is_some()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }
}

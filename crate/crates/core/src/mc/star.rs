use std::fmt;

use crate::error::{check_dim, Result};
use crate::mc::Deformation;
use crate::poly::Polynomial;

/// A polynomial in `t` with polynomial coefficients, truncated at `t^N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TSeries {
    dim: usize,
    coeffs: Vec<Polynomial>,
}

impl TSeries {
    pub fn zero(dim: usize, order: usize) -> Self {
        TSeries {
            dim,
            coeffs: vec![Polynomial::zero(dim); order + 1],
        }
    }

    /// The constant series `u`.
    pub fn constant(u: &Polynomial, order: usize) -> Self {
        let mut s = TSeries::zero(u.dim(), order);
        s.coeffs[0] = u.clone();
        s
    }

    pub fn from_coeffs(dim: usize, coeffs: Vec<Polynomial>) -> Result<Self> {
        for c in &coeffs {
            check_dim(dim, c.dim())?;
        }
        Ok(TSeries { dim, coeffs })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Truncation order `N`.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `t^k`.
    pub fn coeff(&self, k: usize) -> &Polynomial {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[Polynomial] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Polynomial::is_zero)
    }

    pub fn sub(&self, other: &TSeries) -> Result<TSeries> {
        check_dim(self.dim, other.dim)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a.sub(b))
            .collect::<Result<_>>()?;
        Ok(TSeries { dim: self.dim, coeffs })
    }
}

impl fmt::Display for TSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, c) in self.coeffs.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "t^{k}·({c})")?;
        }
        Ok(())
    }
}

/// `F ∗ G = Σ_{i,j} t^{i+j} (F_i G_j + Σ_k t^k p_k(F_i, G_j))` mod `t^{N+1}`.
pub fn star_series(def: &Deformation, f: &TSeries, g: &TSeries) -> Result<TSeries> {
    check_dim(def.dim(), f.dim)?;
    check_dim(def.dim(), g.dim)?;
    let n = def.order();
    let mut out = TSeries::zero(def.dim(), n);
    for (i, fi) in f.coeffs.iter().enumerate().take(n + 1) {
        for (j, gj) in g.coeffs.iter().enumerate().take(n + 1 - i) {
            if fi.is_zero() || gj.is_zero() {
                continue;
            }
            let args = [fi.clone(), gj.clone()];
            out.coeffs[i + j] = out.coeffs[i + j].add(&fi.mul(gj)?)?;
            for k in 1..=n - i - j {
                let v = def.p(k).apply(&args)?;
                out.coeffs[i + j + k] = out.coeffs[i + j + k].add(&v)?;
            }
        }
    }
    Ok(out)
}

/// `f ∗ g = fg + Σ_{k=1}^N t^k p_k(f, g)`.
pub fn star_apply(def: &Deformation, f: &Polynomial, g: &Polynomial) -> Result<TSeries> {
    let n = def.order();
    star_series(def, &TSeries::constant(f, n), &TSeries::constant(g, n))
}

/// `(f ∗ g) ∗ h − f ∗ (g ∗ h)` mod `t^{N+1}`.
pub fn associativity_defect(
    def: &Deformation,
    f: &Polynomial,
    g: &Polynomial,
    h: &Polynomial,
) -> Result<TSeries> {
    let n = def.order();
    let hs = TSeries::constant(h, n);
    let fs = TSeries::constant(f, n);
    let left = star_series(def, &star_apply(def, f, g)?, &hs)?;
    let right = star_series(def, &fs, &star_apply(def, g, h)?)?;
    left.sub(&right)
}

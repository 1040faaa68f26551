//! Cup product, slot insertion, Gerstenhaber bracket and the Hochschild
//! coboundary on polydifferential cochains.

use num::One;

use crate::cochain::{BasisTerm, Cochain};
use crate::error::{check_dim, Error, Result};
use crate::index::NatIndex;
use crate::poly::{derive_monomial, leibniz_split, multinomial_split};
use crate::Rational;

fn sign(exponent: i64) -> Rational {
    if exponent.rem_euclid(2) == 0 {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// The multiplication 2-cochain `m(u₁,u₂) = u₁u₂`, i.e. `x⁰∂⁰⊗∂⁰`.
pub fn multiplication(dim: usize) -> Cochain {
    let z = NatIndex::zero(dim);
    Cochain::from_term(BasisTerm::new(z.clone(), vec![z.clone(), z]), Rational::one())
}

fn cup_terms(f: &BasisTerm, g: &BasisTerm) -> BasisTerm {
    let mut slots = f.slots().to_vec();
    slots.extend_from_slice(g.slots());
    BasisTerm::new(f.x_part() + g.x_part(), slots)
}

/// `(f ⌣ g)(u₁,…,u_{p+q}) = f(u₁,…,u_p)·g(u_{p+1},…,u_{p+q})`, extended
/// bilinearly to inhomogeneous cochains.
pub fn cup(f: &Cochain, g: &Cochain) -> Result<Cochain> {
    check_dim(f.dim(), g.dim())?;
    let mut out = Cochain::zero(f.dim());
    for (tf, kf) in f.terms() {
        for (tg, kg) in g.terms() {
            out.add_term(cup_terms(tf, tg), kf * kg);
        }
    }
    Ok(out)
}

/// Substitute basis term `g` into slot `k` (1-based) of basis term `f`.
///
/// `∂^{a_k}` hits the output of `g`, so it is distributed over `x^{b₀}` and
/// each of `g`'s slots by the multinomial Leibniz rule.
fn insert_terms(f: &BasisTerm, k: usize, g: &BasisTerm, out: &mut Cochain, scale: &Rational) {
    let ak = &f.slots()[k - 1];
    let q = g.arity();
    for (parts, mult) in multinomial_split(ak, q + 1) {
        let Some((ff, rest)) = derive_monomial(g.x_part(), &parts[0]) else {
            continue;
        };
        let mut slots = Vec::with_capacity(f.arity() + q - 1);
        slots.extend_from_slice(&f.slots()[..k - 1]);
        slots.extend(g.slots().iter().zip(&parts[1..]).map(|(b, c)| b + c));
        slots.extend_from_slice(&f.slots()[k..]);
        let coeff = scale * Rational::from_integer(mult * ff);
        out.add_term(BasisTerm::new(f.x_part() + &rest, slots), coeff);
    }
}

/// The composition `f(u₁,…,u_{k−1}, g(u_k,…,u_{k+q−1}), …)` as a
/// `(p+q−1)`-cochain. Both inputs must be arity-homogeneous.
pub fn insert(f: &Cochain, k: usize, g: &Cochain) -> Result<Cochain> {
    check_dim(f.dim(), g.dim())?;
    let p = f.homogeneous_arity()?;
    g.homogeneous_arity()?;
    if let Some(p) = p {
        if k == 0 || k > p {
            return Err(Error::SlotOutOfRange { k, arity: p });
        }
    }
    let mut out = Cochain::zero(f.dim());
    for (tf, kf) in f.terms() {
        for (tg, kg) in g.terms() {
            insert_terms(tf, k, tg, &mut out, &(kf * kg));
        }
    }
    Ok(out)
}

// signed sum Σ_k (−1)^{(k−1)(q−1)} f ∘_k g on homogeneous parts
fn pre_lie(f: &Cochain, p: usize, g: &Cochain, q: usize, scale: &Rational, out: &mut Cochain) {
    for k in 1..=p {
        let s = scale * sign((k as i64 - 1) * (q as i64 - 1));
        for (tf, kf) in f.terms() {
            for (tg, kg) in g.terms() {
                insert_terms(tf, k, tg, out, &(&s * kf * kg));
            }
        }
    }
}

/// The Gerstenhaber bracket
/// `[f,g] = f∘g − (−1)^{(p−1)(q−1)} g∘f` with
/// `f∘g = Σ_k (−1)^{(k−1)(q−1)} f(…, g(…), …)`, extended bilinearly.
pub fn bracket(f: &Cochain, g: &Cochain) -> Result<Cochain> {
    check_dim(f.dim(), g.dim())?;
    let mut out = Cochain::zero(f.dim());
    let gs = g.by_arity();
    for (p, fp) in f.by_arity() {
        for (&q, gq) in &gs {
            pre_lie(&fp, p, gq, q, &Rational::one(), &mut out);
            let s = -sign((p as i64 - 1) * (q as i64 - 1));
            pre_lie(gq, q, &fp, p, &s, &mut out);
        }
    }
    Ok(out)
}

/// The Hochschild coboundary
/// `δφ(u₁,…,u_{p+1}) = u₁φ(u₂,…) + Σ_k (−1)^k φ(…,u_k u_{k+1},…) + (−1)^{p+1} φ(u₁,…,u_p)u_{p+1}`.
pub fn hochschild_delta(f: &Cochain) -> Cochain {
    let dim = f.dim();
    let zero = NatIndex::zero(dim);
    let mut out = Cochain::zero(dim);
    for (t, c) in f.terms() {
        let p = t.arity();
        let mut head = Vec::with_capacity(p + 1);
        head.push(zero.clone());
        head.extend_from_slice(t.slots());
        out.add_term(BasisTerm::new(t.x_part().clone(), head), c.clone());

        for k in 1..=p {
            let s = sign(k as i64);
            for (b, rest, m) in leibniz_split(&t.slots()[k - 1]) {
                let mut slots = Vec::with_capacity(p + 1);
                slots.extend_from_slice(&t.slots()[..k - 1]);
                slots.push(b);
                slots.push(rest);
                slots.extend_from_slice(&t.slots()[k..]);
                out.add_term(BasisTerm::new(t.x_part().clone(), slots), &s * &m * c);
            }
        }

        let mut tail = t.slots().to_vec();
        tail.push(zero.clone());
        out.add_term(
            BasisTerm::new(t.x_part().clone(), tail),
            sign(p as i64 + 1) * c,
        );
    }
    out
}

/// `δf = −[f, m]`, an independent route to the coboundary.
pub fn delta_via_bracket(f: &Cochain) -> Cochain {
    let m = multiplication(f.dim());
    -&bracket(f, &m).expect("m has the dimension of f")
}

/// A vector field is an arity-1 cochain whose slots all have order one.
pub fn is_vector_field(c: &Cochain) -> bool {
    c.terms().all(|(t, _)| t.arity() == 1 && t.slots()[0].total() == 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Polynomial;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    fn term(x: [u32; 2], slots: &[[u32; 2]]) -> BasisTerm {
        BasisTerm::new(x.into(), slots.iter().map(|&s| s.into()).collect())
    }

    fn single(x: [u32; 2], slots: &[[u32; 2]]) -> Cochain {
        Cochain::from_term(term(x, slots), q(1))
    }

    fn symplectic() -> Cochain {
        &single([0, 0], &[[1, 0], [0, 1]]) - &single([0, 0], &[[0, 1], [1, 0]])
    }

    #[test]
    fn cup_concatenates_slots() {
        let c = cup(&single([1, 0], &[[1, 0]]), &single([0, 0], &[[0, 1]])).unwrap();
        assert_eq!(c, single([1, 0], &[[1, 0], [0, 1]]));
    }

    #[test]
    fn cup_with_unit() {
        let f = symplectic();
        assert_eq!(cup(&single([0, 0], &[]), &f).unwrap(), f);
        assert_eq!(cup(&f, &single([0, 0], &[])).unwrap(), f);
    }

    #[test]
    fn cup_of_coordinate_and_derivative_is_euler_field() {
        let c = cup(&single([1, 0], &[]), &single([0, 0], &[[1, 0]])).unwrap();
        assert_eq!(c, Cochain::euler_field(2, 0));
    }

    #[test]
    fn insert_constant_derivatives_composes() {
        let c = insert(&single([0, 0], &[[1, 0]]), 1, &single([0, 0], &[[0, 1]])).unwrap();
        assert_eq!(c, single([0, 0], &[[1, 1]]));
    }

    #[test]
    fn insert_with_polynomial_coefficients() {
        // x₂∂₁ ∘ x₁∂₂ = x₂∂₂ + x₁x₂∂₁∂₂
        let c = insert(&single([0, 1], &[[1, 0]]), 1, &single([1, 0], &[[0, 1]])).unwrap();
        let expected = &single([0, 1], &[[0, 1]]) + &single([1, 1], &[[1, 1]]);
        assert_eq!(c, expected);
    }

    #[test]
    fn insert_identity_slot() {
        let f = &single([1, 2], &[[2, 0]]) + &single([0, 1], &[[0, 1]]);
        assert_eq!(insert(&f, 1, &single([0, 0], &[[0, 0]])).unwrap(), f);
    }

    #[test]
    fn insert_arity_zero_consumes_slot() {
        // ∂₁(x₁²) = 2x₁
        let c = insert(&single([0, 0], &[[1, 0]]), 1, &single([2, 0], &[])).unwrap();
        assert_eq!(c, Cochain::from_term(term([1, 0], &[]), q(2)));
    }

    #[test]
    fn insert_errors() {
        let f = single([0, 0], &[[1, 0]]);
        assert!(matches!(insert(&f, 2, &f), Err(Error::SlotOutOfRange { k: 2, arity: 1 })));
        let mixed = &f + &symplectic();
        assert!(matches!(insert(&mixed, 1, &f), Err(Error::NotHomogeneous)));
    }

    #[test]
    fn euler_field_eigenvalue() {
        let t = single([2, 0], &[[1, 0]]);
        assert_eq!(bracket(&Cochain::euler_field(2, 0), &t).unwrap(), t);
    }

    #[test]
    fn euler_fields_commute() {
        for i in 0..2 {
            for j in 0..2 {
                let b = bracket(&Cochain::euler_field(2, i), &Cochain::euler_field(2, j)).unwrap();
                assert!(b.is_zero());
            }
        }
    }

    #[test]
    fn bracket_of_linear_vector_fields() {
        let b = bracket(&single([1, 0], &[[0, 1]]), &single([0, 1], &[[1, 0]])).unwrap();
        let expected = &Cochain::euler_field(2, 0) - &Cochain::euler_field(2, 1);
        assert_eq!(b, expected);
    }

    #[test]
    fn delta_of_arity_zero_vanishes() {
        let c = &single([3, 1], &[]) + &single([0, 0], &[]);
        assert!(hochschild_delta(&c).is_zero());
        assert!(delta_via_bracket(&c).is_zero());
    }

    #[test]
    fn delta_of_multiplication_vanishes() {
        assert!(hochschild_delta(&multiplication(2)).is_zero());
        assert!(delta_via_bracket(&multiplication(2)).is_zero());
    }

    #[test]
    fn delta_of_mixed_second_derivative() {
        let f = single([0, 0], &[[1, 1]]);
        let expected = -&(&single([0, 0], &[[1, 0], [0, 1]]) + &single([0, 0], &[[0, 1], [1, 0]]));
        assert_eq!(hochschild_delta(&f), expected);
        assert_eq!(delta_via_bracket(&f), expected);
    }

    #[test]
    fn delta_evaluates_like_definition() {
        // δφ(u,v) = uφ(v) − φ(uv) + φ(u)v for φ = x₁²∂₁∂₂
        let f = single([2, 0], &[[1, 1]]);
        let u = Polynomial::from_terms(2, [([1, 2].into(), q(1)), ([0, 1].into(), q(3))]).unwrap();
        let v = Polynomial::from_terms(2, [([2, 1].into(), q(-2)), ([1, 0].into(), q(1))]).unwrap();
        let direct = u
            .mul(&f.apply(std::slice::from_ref(&v)).unwrap())
            .unwrap()
            .sub(&f.apply(&[u.mul(&v).unwrap()]).unwrap())
            .unwrap()
            .add(&f.apply(std::slice::from_ref(&u)).unwrap().mul(&v).unwrap())
            .unwrap();
        assert_eq!(hochschild_delta(&f).apply(&[u, v]).unwrap(), direct);
    }

    #[test]
    fn dimension_mismatch() {
        let a = Cochain::euler_field(2, 0);
        let b = Cochain::euler_field(3, 0);
        assert!(cup(&a, &b).is_err());
        assert!(bracket(&a, &b).is_err());
    }

    #[test]
    fn vector_field_detection() {
        assert!(is_vector_field(&Cochain::euler_field(2, 1)));
        assert!(!is_vector_field(&symplectic()));
        assert!(!is_vector_field(&single([0, 0], &[[0, 0]])));
    }
}

use gerstenhaber::grading::{homogeneous_weight, in_ideal, Decision, SemigroupSpec};
use gerstenhaber::mc::{
    associativity_defect, build_block, obstruction, solve_delta, solve_maurer_cartan,
    solve_maurer_cartan_with, star_apply, Deformation, SolverOptions,
};
use gerstenhaber::random::CochainSampler;
use gerstenhaber::{bracket, hochschild_delta, BasisTerm, Cochain, Error, Polynomial, Rational};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

fn term(x: [u32; 2], slots: &[[u32; 2]], k: Rational) -> Cochain {
    Cochain::from_term(BasisTerm::new(x.into(), slots.iter().map(|&s| s.into()).collect()), k)
}

fn symplectic() -> Cochain {
    &term([0, 0], &[[1, 0], [0, 1]], q(1, 1)) - &term([0, 0], &[[0, 1], [1, 0]], q(1, 1))
}

fn linear_poisson() -> Cochain {
    &term([1, 0], &[[1, 0], [0, 1]], q(1, 1)) - &term([1, 0], &[[0, 1], [1, 0]], q(1, 1))
}

fn moyal_p2() -> Cochain {
    let e = q(1, 8);
    let a = term([0, 0], &[[2, 0], [0, 2]], e.clone());
    let b = term([0, 0], &[[1, 1], [1, 1]], e.clone() * q(-2, 1));
    let c = term([0, 0], &[[0, 2], [2, 0]], e);
    &(&a + &b) + &c
}

#[test]
fn symplectic_solves_to_order_four_with_expected_weights() {
    let def = solve_maurer_cartan(&symplectic(), 4, None).unwrap();
    assert_eq!(def.order(), 4);
    for k in 2..=4 {
        let b = obstruction(&def, k).unwrap().value;
        assert_eq!(hochschild_delta(def.p(k)), b, "order {k}");
        if !def.p(k).is_zero() {
            let w = -(k as i64);
            assert_eq!(homogeneous_weight(def.p(k)), Some([w, w].into()));
        }
    }
}

#[test]
fn first_order_obstruction_matches_half_bracket() {
    let def = solve_maurer_cartan(&symplectic(), 2, None).unwrap();
    let p1 = def.p(1);
    assert_eq!(p1, &symplectic().scale(&q(1, 2)));
    let b2 = obstruction(&def, 2).unwrap().value;
    assert_eq!(b2, bracket(p1, p1).unwrap().scale(&q(1, 2)));
}

#[test]
fn obstructions_are_cocycles() {
    let def = solve_maurer_cartan(&linear_poisson(), 4, None).unwrap();
    for k in 2..=4 {
        assert!(hochschild_delta(&obstruction(&def, k).unwrap().value).is_zero());
    }
}

#[test]
fn zero_bivector_gives_zero_deformation() {
    let def = solve_maurer_cartan(&Cochain::zero(2), 3, None).unwrap();
    assert!(def.cochains().iter().all(Cochain::is_zero));
    let zero_def = Deformation::new(2, vec![Cochain::zero(2)]).unwrap();
    assert!(obstruction(&zero_def, 2).unwrap().value.is_zero());
}

#[test]
fn linear_poisson_stays_in_the_ideal() {
    let delta = SemigroupSpec::with_generators(2, vec![[0, -1].into()]).unwrap();
    let def = solve_maurer_cartan(&linear_poisson(), 4, Some(&delta)).unwrap();
    for k in 2..=4 {
        assert_eq!(in_ideal(def.p(k), &delta, 2).unwrap(), Decision::Yes);
        if let Some(w) = homogeneous_weight(def.p(k)) {
            assert_eq!(w, [0, -(k as i64)].into());
        }
    }
}

#[test]
fn solve_delta_round_trip() {
    let sampler = CochainSampler::standard(2);
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..20 {
        let y = sampler.homogeneous(&mut rng, 2);
        let b = hochschild_delta(&y);
        let x = solve_delta(&b).unwrap();
        assert_eq!(hochschild_delta(&x), b);
    }
    assert!(solve_delta(&Cochain::zero(2)).unwrap().is_zero());
}

#[test]
fn corrupted_coboundary_is_rejected() {
    let b = hochschild_delta(&moyal_p2());
    let (t, k) = b.terms().next().map(|(t, k)| (t.clone(), k.clone())).unwrap();
    let bad = &b + &Cochain::from_term(t, k + q(1, 1));
    assert!(matches!(solve_delta(&bad), Err(Error::NotCoboundary { .. })));
}

#[test]
fn solve_delta_needs_arity_three() {
    assert!(matches!(solve_delta(&symplectic()), Err(Error::ArityMismatch { .. })));
}

#[test]
fn moyal_cross_check() {
    let def = solve_maurer_cartan(&symplectic(), 2, None).unwrap();
    let b2 = obstruction(&def, 2).unwrap().value;
    assert_eq!(hochschild_delta(&moyal_p2()), b2);
    assert_eq!(hochschild_delta(def.p(2)), b2);
    assert!(hochschild_delta(&(def.p(2) - &moyal_p2())).is_zero());
}

#[test]
fn canonical_commutation_relation() {
    let def = solve_maurer_cartan(&symplectic(), 3, None).unwrap();
    let x1 = Polynomial::var(2, 0);
    let x2 = Polynomial::var(2, 1);
    let lhs = star_apply(&def, &x1, &x2).unwrap();
    let rhs = star_apply(&def, &x2, &x1).unwrap();
    let diff = lhs.sub(&rhs).unwrap();
    assert!(diff.coeff(0).is_zero());
    assert_eq!(diff.coeff(1), &Polynomial::one(2));
    assert!(diff.coeff(2).is_zero() && diff.coeff(3).is_zero());
}

#[test]
fn zeroth_order_is_the_product() {
    let def = solve_maurer_cartan(&linear_poisson(), 2, None).unwrap();
    let s = CochainSampler::standard(2);
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let f = s.polynomial(&mut rng, 3, 4);
    let g = s.polynomial(&mut rng, 3, 4);
    let r = star_apply(&def, &f, &g).unwrap();
    assert_eq!(r.coeff(0), &f.mul(&g).unwrap());
    let one = Polynomial::one(2);
    let u = star_apply(&def, &one, &g).unwrap();
    // only ∂⁰-free operators appear here, so 1 is a unit
    if def.cochains().iter().all(|c| c.terms().all(|(t, _)| !t.slots()[0].is_zero())) {
        assert_eq!(u.coeff(0), &g);
        assert!(u.coeffs()[1..].iter().all(Polynomial::is_zero));
    }
}

#[test]
fn solver_output_is_associative() {
    let def = solve_maurer_cartan(&symplectic(), 3, None).unwrap();
    let s = CochainSampler::standard(2);
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for _ in 0..5 {
        let [f, g, h] = [0; 3].map(|_| s.polynomial(&mut rng, 3, 4));
        assert!(associativity_defect(&def, &f, &g, &h).unwrap().is_zero());
    }
}

#[test]
fn dropping_second_order_breaks_associativity_by_the_obstruction() {
    let def = solve_maurer_cartan(&symplectic(), 2, None).unwrap();
    let b2 = obstruction(&def, 2).unwrap().value;
    let broken = def.with_p(2, Cochain::zero(2)).unwrap();
    let s = CochainSampler::standard(2);
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let mut saw_nonzero = false;
    for _ in 0..5 {
        let [f, g, h] = [0; 3].map(|_| s.polynomial(&mut rng, 3, 4));
        let d = associativity_defect(&broken, &f, &g, &h).unwrap();
        assert!(d.coeff(0).is_zero() && d.coeff(1).is_zero());
        assert_eq!(d.coeff(2), &b2.apply(&[f, g, h]).unwrap());
        saw_nonzero |= !d.coeff(2).is_zero();
    }
    assert!(saw_nonzero);
}

#[test]
fn precondition_failures() {
    // not a cocycle: ∂₁∂₂ ⊗ ∂⁰
    let bad = term([0, 0], &[[1, 1], [0, 0]], q(1, 1));
    assert!(matches!(solve_maurer_cartan(&bad, 2, None), Err(Error::Precondition(_))));
    let delta = SemigroupSpec::with_generators(2, vec![[1, 1].into()]).unwrap();
    assert!(matches!(
        solve_maurer_cartan(&symplectic(), 2, Some(&delta)),
        Err(Error::Precondition(_))
    ));
    let three = Cochain::from_term(
        BasisTerm::new([0, 0, 0].into(), vec![[1, 0, 0].into(), [0, 1, 0].into()]),
        q(1, 1),
    );
    assert!(matches!(solve_maurer_cartan(&three, 2, None), Err(Error::Precondition(_))));
    assert!(matches!(
        solve_maurer_cartan(&Cochain::euler_field(2, 0), 2, None),
        Err(Error::ArityMismatch { .. })
    ));
}

#[test]
fn slot_order_cap_fails_loudly() {
    let opts = SolverOptions { slot_order_per_step: 1 };
    assert!(matches!(
        solve_maurer_cartan_with(&symplectic(), 2, None, &opts),
        Err(Error::OrderCapExceeded { order: 2, .. })
    ));
}

#[test]
fn gauge_is_deterministic() {
    let a = solve_maurer_cartan(&linear_poisson(), 3, None).unwrap();
    let b = solve_maurer_cartan(&linear_poisson(), 3, None).unwrap();
    assert_eq!(a, b);
}

#[test]
fn block_matrix_matches_delta() {
    let bg = gerstenhaber::grading::Bigrade::new([-2, -2].into(), [2, 2].into()).unwrap();
    let block = build_block(&bg, 2).unwrap();
    assert_eq!(block.basis2.len(), 9);
    for (j, e) in block.basis2.iter().enumerate() {
        let d = hochschild_delta(&Cochain::from_term(e.clone(), q(1, 1)));
        assert_eq!(block.coordinates3(&d).unwrap(), block.matrix.column(j));
    }
}

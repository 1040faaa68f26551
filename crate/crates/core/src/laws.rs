//! Seeded verification suites for the algebraic laws: Gerstenhaber axioms,
//! the differential, weight and bigrade bookkeeping, semigroup subalgebras
//! and ideals, involutions, the complement criterion and the filtration.
//!
//! Every law returns a [`LawResult`]; failures carry the offending inputs.

use num::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cochain::{BasisTerm, Cochain};
use crate::error::Result;
use crate::grading::{
    bigrade_of, filtration_contains, filtration_index, homogeneous_weight,
    in_c_delta, in_ideal, subgroup_complement_check, theta_apply, theta_split, weight_of, Decision,
    FiltrationIndex, FiltrationMode, MultiIndexSet, SemigroupSpec,
};
use crate::index::IntIndex;
use crate::ops::{bracket, cup, delta_via_bracket, hochschild_delta, multiplication};
use crate::poly::Polynomial;
use crate::random::CochainSampler;
use crate::Rational;

#[derive(Debug, Clone, PartialEq)]
pub struct LawResult {
    pub name: String,
    pub trials: usize,
    pub passed: bool,
    pub detail: String,
    /// Inputs of the first failing trial.
    pub counterexample: Vec<Cochain>,
}

impl LawResult {
    fn pass(name: impl Into<String>, trials: usize, detail: impl Into<String>) -> Self {
        LawResult {
            name: name.into(),
            trials,
            passed: true,
            detail: detail.into(),
            counterexample: Vec::new(),
        }
    }

    fn fail(name: impl Into<String>, trials: usize, detail: impl Into<String>, cx: Vec<Cochain>) -> Self {
        LawResult {
            name: name.into(),
            trials,
            passed: false,
            detail: detail.into(),
            counterexample: cx,
        }
    }
}

type Trial<'a> = dyn FnMut(&mut ChaCha8Rng) -> Result<Option<(String, Vec<Cochain>)>> + 'a;

fn run(name: &str, seed: u64, trials: usize, trial: &mut Trial<'_>) -> Result<LawResult> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for i in 0..trials {
        if let Some((why, cx)) = trial(&mut rng)? {
            return Ok(LawResult::fail(name, i + 1, why, cx));
        }
    }
    Ok(LawResult::pass(name, trials, "exact equality on every trial"))
}

fn sign(e: i64) -> Rational {
    if e.rem_euclid(2) == 0 {
        Rational::one()
    } else {
        -Rational::one()
    }
}

fn check(ok: bool, why: &str, cx: &[&Cochain]) -> Option<(String, Vec<Cochain>)> {
    (!ok).then(|| (why.to_string(), cx.iter().map(|c| (*c).clone()).collect()))
}

fn sampler() -> CochainSampler {
    CochainSampler::standard(2)
}

/// `(f ⌣ g) ⌣ h = f ⌣ (g ⌣ h)`.
pub fn cup_associativity(seed: u64, trials: usize) -> Result<LawResult> {
    let s = sampler();
    run("cup associativity", seed, trials, &mut |rng| {
        let (f, g, h) = (s.mixed(rng), s.mixed(rng), s.mixed(rng));
        let l = cup(&cup(&f, &g)?, &h)?;
        let r = cup(&f, &cup(&g, &h)?)?;
        Ok(check(l == r, "cup is not associative", &[&f, &g, &h]))
    })
}

/// `[f,g] = −(−1)^{(p+1)(q+1)}[g,f]`.
pub fn graded_antisymmetry(seed: u64, trials: usize) -> Result<LawResult> {
    let s = sampler();
    run("graded antisymmetry", seed, trials, &mut |rng| {
        let ((p, f), (q, g)) = (s.cochain(rng), s.cochain(rng));
        let l = bracket(&f, &g)?;
        let r = bracket(&g, &f)?.scale(&-sign((p as i64 + 1) * (q as i64 + 1)));
        Ok(check(l == r, "bracket is not graded antisymmetric", &[&f, &g]))
    })
}

/// `(−1)^{(p+1)(r+1)}[f,[g,h]] + cyclic permutations = 0`.
pub fn jacobi_identity(seed: u64, trials: usize) -> Result<LawResult> {
    let s = sampler();
    run("jacobi identity", seed, trials, &mut |rng| {
        let ((p, f), (q, g), (r, h)) = (s.cochain(rng), s.cochain(rng), s.cochain(rng));
        let (p, q, r) = (p as i64, q as i64, r as i64);
        let a = bracket(&f, &bracket(&g, &h)?)?.scale(&sign((p + 1) * (r + 1)));
        let b = bracket(&g, &bracket(&h, &f)?)?.scale(&sign((q + 1) * (p + 1)));
        let c = bracket(&h, &bracket(&f, &g)?)?.scale(&sign((r + 1) * (q + 1)));
        let total = &(&a + &b) + &c;
        Ok(check(total.is_zero(), "jacobiator is nonzero", &[&f, &g, &h]))
    })
}

/// `δ∘δ = 0` on cochains of arity at most 2.
pub fn delta_squared(seed: u64, trials: usize) -> Result<LawResult> {
    let s = sampler().with_max_arity(2);
    run("delta squared", seed, trials, &mut |rng| {
        let f = s.mixed(rng);
        let dd = hochschild_delta(&hochschild_delta(&f));
        Ok(check(dd.is_zero(), "δδf ≠ 0", &[&f]))
    })
}

/// `δf = −[f, m]` through two independent code paths, and `δm = 0`.
pub fn delta_bracket_agreement(seed: u64, trials: usize) -> Result<LawResult> {
    let m = multiplication(2);
    if !hochschild_delta(&m).is_zero() || !delta_via_bracket(&m).is_zero() {
        return Ok(LawResult::fail("delta via bracket", 0, "δm ≠ 0", vec![m]));
    }
    let s = sampler();
    run("delta via bracket", seed, trials, &mut |rng| {
        let f = s.mixed(rng);
        Ok(check(
            hochschild_delta(&f) == delta_via_bracket(&f),
            "δf ≠ −[f, m]",
            &[&f],
        ))
    })
}

/// `[χ, f ⌣ g] = [χ,f] ⌣ g + f ⌣ [χ,g]` for vector fields `χ`.
pub fn vector_field_leibniz(seed: u64, trials: usize) -> Result<LawResult> {
    let s = sampler();
    run("vector field leibniz", seed, trials, &mut |rng| {
        let chi = s.vector_field(rng);
        let (f, g) = (s.mixed(rng), s.mixed(rng));
        let l = bracket(&chi, &cup(&f, &g)?)?;
        let r = &cup(&bracket(&chi, &f)?, &g)? + &cup(&f, &bracket(&chi, &g)?)?;
        Ok(check(l == r, "[χ,·] is not a derivation of cup", &[&chi, &f, &g]))
    })
}

fn random_weight(rng: &mut ChaCha8Rng, radius: i64) -> IntIndex {
    IntIndex::new((0..2).map(|_| rng.gen_range(-radius..=radius)).collect())
}

fn has_weight(c: &Cochain, w: &IntIndex) -> bool {
    c.is_zero() || homogeneous_weight(c).as_ref() == Some(w)
}

/// Weights add under cup and bracket; `δ` preserves them.
pub fn weight_additivity(seed: u64, trials: usize) -> Result<LawResult> {
    let s = sampler().with_max_arity(2);
    run("weight additivity", seed, trials, &mut |rng| {
        let (a, b) = (random_weight(rng, 2), random_weight(rng, 2));
        let f = s.with_weight(rng, &a);
        let g = s.with_weight(rng, &b);
        let sum = &a + &b;
        let ok = has_weight(&cup(&f, &g)?, &sum)
            && has_weight(&bracket(&f, &g)?, &sum)
            && has_weight(&hochschild_delta(&f), &a);
        Ok(check(ok, "weights are not additive", &[&f, &g]))
    })
}

/// `[hⁱ,hʲ] = 0` and `[hⁱ, t] = (a₀ⁱ − Σ a_sⁱ) t` on basis terms.
pub fn euler_eigenvalues(seed: u64, trials: usize) -> Result<LawResult> {
    let s = sampler();
    let h: Vec<Cochain> = (0..2).map(|i| Cochain::euler_field(2, i)).collect();
    for hi in &h {
        for hj in &h {
            if !bracket(hi, hj)?.is_zero() {
                return Ok(LawResult::fail("euler eigenvalues", 0, "[hⁱ,hʲ] ≠ 0", vec![hi.clone(), hj.clone()]));
            }
        }
    }
    run("euler eigenvalues", seed, trials, &mut |rng| {
        let p = rng.gen_range(0..=s.max_arity);
        let t = Cochain::from_term(s.term(rng, p), Rational::one());
        let w = weight_of(t.terms().next().expect("one term").0);
        for (i, hi) in h.iter().enumerate() {
            let expected = t.scale(&Rational::from_integer(w.entries()[i].into()));
            if bracket(hi, &t)? != expected {
                return Ok(check(false, "basis term is not an eigenvector", &[hi, &t]));
            }
        }
        Ok(None)
    })
}

/// Every term of `δ(t)` has the bigrade of `t`.
pub fn delta_preserves_bigrade(seed: u64, trials: usize) -> Result<LawResult> {
    let s = sampler();
    run("delta preserves bigrade", seed, trials, &mut |rng| {
        let p = rng.gen_range(0..=s.max_arity);
        let t = s.term(rng, p);
        let g = bigrade_of(&t);
        let c = Cochain::from_term(t, Rational::one());
        let ok = hochschild_delta(&c).terms().all(|(u, _)| bigrade_of(u) == g);
        Ok(check(ok, "δ changed the bigrade", &[&c]))
    })
}

/// `apply(f ⌣ g)` and `apply([f,g])` agree with direct evaluation of the
/// defining formulas on polynomial arguments.
pub fn evaluation_coherence(seed: u64, trials: usize) -> Result<LawResult> {
    let s = sampler().with_max_arity(2).with_max_terms(3);
    run("evaluation coherence", seed, trials, &mut |rng| {
        let ((p, f), (q, g)) = (s.cochain(rng), s.cochain(rng));
        let args: Vec<Polynomial> = (0..(p + q).max(1)).map(|_| s.polynomial(rng, 3, 3)).collect();
        let cup_direct = f.apply(&args[..p])?.mul(&g.apply(&args[p..p + q])?)?;
        if cup(&f, &g)?.apply(&args[..p + q])? != cup_direct {
            return Ok(check(false, "cup evaluation mismatch", &[&f, &g]));
        }
        if p + q == 0 {
            return Ok(None);
        }
        let n = p + q - 1;
        let direct = nested_bracket_value(&f, p, &g, q, &args[..n])?;
        let via = bracket(&f, &g)?.apply(&args[..n])?;
        Ok(check(via == direct, "bracket evaluation mismatch", &[&f, &g]))
    })
}

// Σ_k ± f(u₁,…,g(u_k,…),…) − (−1)^{(p−1)(q−1)} Σ_k ± g(…,f(…),…), evaluated
fn nested_bracket_value(f: &Cochain, p: usize, g: &Cochain, q: usize, args: &[Polynomial]) -> Result<Polynomial> {
    fn compose(f: &Cochain, p: usize, g: &Cochain, q: usize, args: &[Polynomial]) -> Result<Polynomial> {
        let mut acc = Polynomial::zero(f.dim());
        for k in 1..=p {
            let inner = g.apply(&args[k - 1..k - 1 + q])?;
            let mut outer: Vec<Polynomial> = args[..k - 1].to_vec();
            outer.push(inner);
            outer.extend_from_slice(&args[k - 1 + q..]);
            let v = f.apply(&outer)?;
            acc = acc.add(&v.scale(&sign((k as i64 - 1) * (q as i64 - 1))))?;
        }
        Ok(acc)
    }
    let first = compose(f, p, g, q, args)?;
    let second = compose(g, q, f, p, args)?;
    first.sub(&second.scale(&sign((p as i64 - 1) * (q as i64 - 1))))
}

/// `apply` is linear in each argument.
pub fn apply_multilinearity(seed: u64, trials: usize) -> Result<LawResult> {
    let s = sampler().with_max_terms(3);
    run("apply multilinearity", seed, trials, &mut |rng| {
        let p = rng.gen_range(1..=s.max_arity);
        let c = s.homogeneous(rng, p);
        let mut args: Vec<Polynomial> = (0..p).map(|_| s.polynomial(rng, 3, 3)).collect();
        let slot = rng.gen_range(0..p);
        let other = s.polynomial(rng, 3, 3);
        let (a, b) = (s.coefficient(rng), s.coefficient(rng));
        let base = c.apply(&args)?;
        let orig = args[slot].clone();
        args[slot] = other;
        let alt = c.apply(&args)?;
        args[slot] = orig.scale(&a).add(&args[slot].scale(&b))?;
        let combined = c.apply(&args)?;
        let ok = combined == base.scale(&a).add(&alt.scale(&b))?;
        Ok(check(ok, "apply is not multilinear", &[&c]))
    })
}

fn random_member_weight(rng: &mut ChaCha8Rng, delta: &SemigroupSpec, min: u64, max: u64) -> IntIndex {
    let n = rng.gen_range(min..=max);
    let gens = delta.generators();
    (0..n).fold(IntIndex::zero(delta.dim()), |acc, _| &acc + &gens[rng.gen_range(0..gens.len())])
}

// sum of 1..=2 weight-homogeneous parts, each weight an r-fold sum
fn random_member(rng: &mut ChaCha8Rng, s: &CochainSampler, delta: &SemigroupSpec, r: u64) -> Cochain {
    let parts = rng.gen_range(1..=2);
    (0..parts).fold(Cochain::zero(delta.dim()), |acc, _| {
        let w = random_member_weight(rng, delta, r, r + 1);
        &acc + &s.with_weight(rng, &w)
    })
}

fn closure_sampler() -> CochainSampler {
    CochainSampler::standard(2).with_max_arity(2).with_max_terms(2)
}

/// `C_Δ` is closed under cup, bracket and `δ`.
pub fn semigroup_closure(delta: &SemigroupSpec, seed: u64, trials: usize) -> Result<LawResult> {
    let s = closure_sampler();
    let name = format!("C_Delta closure {}", describe(delta));
    run(&name, seed, trials, &mut |rng| {
        let f = random_member(rng, &s, delta, 1);
        let g = random_member(rng, &s, delta, 1);
        let d = in_c_delta(&cup(&f, &g)?, delta)?
            .and(in_c_delta(&bracket(&f, &g)?, delta)?)
            .and(in_c_delta(&hochschild_delta(&f), delta)?);
        Ok(check(d == Decision::Yes, "C_Δ is not closed", &[&f, &g]))
    })
}

/// `I^(r)_Δ` absorbs `C_Δ` under cup and bracket.
pub fn ideal_absorption(delta: &SemigroupSpec, r: u64, seed: u64, trials: usize) -> Result<LawResult> {
    let s = closure_sampler();
    let name = format!("I^({r}) absorption {}", describe(delta));
    run(&name, seed, trials, &mut |rng| {
        let f = random_member(rng, &s, delta, r);
        let g = random_member(rng, &s, delta, 1);
        let d = in_ideal(&cup(&f, &g)?, delta, r)?
            .and(in_ideal(&cup(&g, &f)?, delta, r)?)
            .and(in_ideal(&bracket(&f, &g)?, delta, r)?)
            .and(in_ideal(&bracket(&g, &f)?, delta, r)?);
        Ok(check(d == Decision::Yes, "ideal does not absorb C_Δ", &[&f, &g]))
    })
}

/// `I^(2)_Δ = C_Δ` exactly when `Δ + Δ = Δ`, both sides checked on the box
/// `[-3, 3]ⁿ` of weights.
pub fn ideal_equivalence(delta: &SemigroupSpec) -> Result<LawResult> {
    let name = format!("I^(2) = C_Delta iff Delta+Delta = Delta {}", describe(delta));
    let stable = delta.sumset_stable_on_box(3);
    let mut equal = Decision::Yes;
    let mut witness = None;
    for w in crate::grading::box_points(delta.dim(), 3) {
        let (pos, neg) = w.split_signs();
        let c = Cochain::from_term(BasisTerm::new(pos, vec![neg]), Rational::one());
        if in_c_delta(&c, delta)? != Decision::Yes {
            continue;
        }
        let d = in_ideal(&c, delta, 2)?;
        if d == Decision::No && witness.is_none() {
            witness = Some(c);
        }
        equal = equal.and(d);
    }
    let detail = format!("Δ+Δ=Δ: {stable}; I^(2)=C_Δ: {equal}");
    match (stable.definite(), equal.definite()) {
        (Some(a), Some(b)) if a == b => Ok(LawResult::pass(name, 1, detail)),
        _ => Ok(LawResult::fail(name, 1, detail, witness.into_iter().collect())),
    }
}

fn describe(delta: &SemigroupSpec) -> String {
    let gens: Vec<String> = delta.generators().iter().map(|g| g.to_string()).collect();
    format!("<{}>", gens.join(","))
}

/// `θ_I` is an involutive automorphism of cup and bracket, the `±` parts
/// multiply by the sign table, and `δ C_I⁺ ⊂ C_I⁺`.
pub fn theta_laws(set: &MultiIndexSet, seed: u64, trials: usize) -> Result<LawResult> {
    let s = closure_sampler();
    let name = format!("theta involution {:?}", set.indices());
    run(&name, seed, trials, &mut |rng| {
        let (f, g) = (s.mixed(rng), s.mixed(rng));
        let th = |c: &Cochain| theta_apply(c, set);
        if th(&th(&f)?)? != f {
            return Ok(check(false, "θ is not an involution", &[&f]));
        }
        if th(&cup(&f, &g)?)? != cup(&th(&f)?, &th(&g)?)? {
            return Ok(check(false, "θ does not respect cup", &[&f, &g]));
        }
        if th(&bracket(&f, &g)?)? != bracket(&th(&f)?, &th(&g)?)? {
            return Ok(check(false, "θ does not respect the bracket", &[&f, &g]));
        }
        let (fp, fm) = theta_split(&f, set)?;
        let (gp, gm) = theta_split(&g, set)?;
        if &fp + &fm != f || th(&fp)? != fp || th(&fm)? != -&fm {
            return Ok(check(false, "± split is wrong", &[&f]));
        }
        let parity = |c: &Cochain, plus: bool| -> Result<bool> {
            let t = th(c)?;
            Ok(if plus { t == *c } else { t == -c })
        };
        for (a, ap) in [(&fp, true), (&fm, false)] {
            for (b, bp) in [(&gp, true), (&gm, false)] {
                let target = ap == bp;
                if !parity(&cup(a, b)?, target)? || !parity(&bracket(a, b)?, target)? {
                    return Ok(check(false, "± multiplication table violated", &[a, b]));
                }
            }
        }
        Ok(check(parity(&hochschild_delta(&fp), true)?, "δ leaves C_I⁺", &[&fp]))
    })
}

/// The complement criterion: a subgroup passes, a non-subgroup semigroup
/// yields a counterexample.
pub fn complement_criterion(subgroup: &SemigroupSpec, semigroup: &SemigroupSpec, seed: u64, trials: usize) -> Result<LawResult> {
    let name = "subgroup complement criterion";
    let good = subgroup_complement_check(subgroup, trials, seed)?;
    if !good.passed() || good.is_subgroup != Decision::Yes {
        let cx = good
            .violations
            .first()
            .map(|(f, g, _)| vec![f.clone(), g.clone()])
            .or_else(|| good.counterexample.as_ref().map(|c| vec![c.f.clone(), c.g.clone()]))
            .unwrap_or_default();
        return Ok(LawResult::fail(name, good.samples_checked, format!("{} failed", describe(subgroup)), cx));
    }
    let bad = subgroup_complement_check(semigroup, trials, seed)?;
    match bad.counterexample {
        Some(cx) => Ok(LawResult {
            name: name.into(),
            trials: good.samples_checked,
            passed: true,
            detail: format!(
                "{} passes; {} fails: {} + {} = {} lies in H",
                describe(subgroup),
                describe(semigroup),
                cx.h,
                cx.k,
                cx.sum
            ),
            counterexample: vec![cx.f, cx.g, cx.product],
        }),
        None => Ok(LawResult::fail(name, good.samples_checked, format!("no counterexample for {}", describe(semigroup)), vec![])),
    }
}

/// Cumulative filtration: products land in `S_{α+β}`, `δ S_α ⊂ S_α`,
/// `S_α ⊂ S_β` for `α < β`. Also checks that the literal reading is not
/// monotone on a stored counterexample.
pub fn filtration_laws(seed: u64, trials: usize) -> Result<LawResult> {
    let m = multiplication(2);
    let alpha = FiltrationIndex::new([0, 0].into(), [0, 0].into())?;
    let beta = FiltrationIndex::new([1, 0].into(), [1, 0].into())?;
    let literal_breaks = alpha < beta
        && filtration_contains(&m, &alpha, FiltrationMode::Literal)
        && !filtration_contains(&m, &beta, FiltrationMode::Literal);
    if !literal_breaks {
        return Ok(LawResult::fail("filtration", 0, "stored literal-mode counterexample no longer fails", vec![m]));
    }
    let s = sampler().with_max_arity(2);
    let mode = FiltrationMode::Cumulative;
    let mut result = run("filtration", seed, trials, &mut |rng| {
        let (wf, wg) = (random_weight(rng, 2), random_weight(rng, 2));
        let f = s.with_weight(rng, &wf);
        let g = s.with_weight(rng, &wg);
        let a = filtration_index(&f, mode)?;
        let b = filtration_index(&g, mode)?;
        let ab = a.add(&b);
        let ok = filtration_contains(&cup(&f, &g)?, &ab, mode)
            && filtration_contains(&bracket(&f, &g)?, &ab, mode)
            && filtration_contains(&hochschild_delta(&f), &a, mode);
        if !ok {
            return Ok(check(false, "filtration is not multiplicative", &[&f, &g]));
        }
        // α < β ⇒ S_α ⊂ S_β
        let bump = FiltrationIndex {
            a: IntIndex::new(vec![rng.gen_range(0..=2), rng.gen_range(-2..=2)]),
            b: IntIndex::new(vec![rng.gen_range(0..=2), rng.gen_range(-2..=2)]),
        };
        let larger = a.add(&bump);
        let ok = larger < a || filtration_contains(&f, &larger, mode);
        Ok(check(ok, "filtration is not monotone", &[&f]))
    })?;
    if result.passed {
        result.detail = format!(
            "cumulative mode exact; literal mode fails monotonicity: m ∈ S_{alpha} but m ∉ S_{beta}"
        );
    }
    Ok(result)
}

fn ray(g: [i64; 2]) -> SemigroupSpec {
    SemigroupSpec::with_generators(2, vec![g.into()]).expect("dimension 2")
}

fn gens(v: &[[i64; 2]]) -> SemigroupSpec {
    SemigroupSpec::with_generators(2, v.iter().map(|&g| g.into()).collect()).expect("dimension 2")
}

/// The semigroups used by the default suite.
pub fn standard_semigroups() -> Vec<SemigroupSpec> {
    vec![ray([-1, -1]), ray([0, -1]), gens(&[[1, 0], [-1, 0]])]
}

/// Run every law with the given seed and trial count.
pub fn verify_all(seed: u64, trials: usize) -> Result<Vec<LawResult>> {
    let mut out = vec![
        cup_associativity(seed, trials)?,
        graded_antisymmetry(seed.wrapping_add(1), trials)?,
        jacobi_identity(seed.wrapping_add(2), trials)?,
        delta_squared(seed.wrapping_add(3), trials)?,
        delta_bracket_agreement(seed.wrapping_add(4), trials)?,
        vector_field_leibniz(seed.wrapping_add(5), trials)?,
        weight_additivity(seed.wrapping_add(6), trials)?,
        euler_eigenvalues(seed.wrapping_add(7), trials)?,
        delta_preserves_bigrade(seed.wrapping_add(8), trials)?,
        evaluation_coherence(seed.wrapping_add(9), trials)?,
        apply_multilinearity(seed.wrapping_add(10), trials)?,
    ];
    for (i, d) in standard_semigroups().iter().enumerate() {
        out.push(semigroup_closure(d, seed.wrapping_add(20 + i as u64), trials)?);
        out.push(ideal_absorption(d, 2, seed.wrapping_add(30 + i as u64), trials.div_ceil(2))?);
    }
    out.push(ideal_equivalence(&gens(&[[1, 0], [-1, 0], [0, 1], [0, -1]]))?);
    out.push(ideal_equivalence(&ray([-1, -1]))?);
    for (i, idx) in [vec![1], vec![2], vec![1, 2]].into_iter().enumerate() {
        let set = MultiIndexSet::new(2, idx)?;
        out.push(theta_laws(&set, seed.wrapping_add(40 + i as u64), trials)?);
    }
    out.push(complement_criterion(
        &gens(&[[2, 0], [-2, 0], [0, 1], [0, -1]]),
        &ray([1, 0]),
        seed.wrapping_add(50),
        trials.min(50),
    )?);
    out.push(filtration_laws(seed.wrapping_add(60), trials)?);
    Ok(out)
}

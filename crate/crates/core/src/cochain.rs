//! Polydifferential cochains `x^{a₀}∂^{a₁}⊗…⊗∂^{a_p}` with rational
//! coefficients, kept in canonical sparse form.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num::{One, Zero};

use crate::error::{check_dim, Error, Result};
use crate::index::NatIndex;
use crate::poly::Polynomial;
use crate::Rational;

/// One monomial operator `x^{a₀}∂^{a₁}⊗…⊗∂^{a_p}`.
///
/// A zero multi-index in a slot is a legal `∂⁰` slot acting as the identity
/// on its argument; it still counts toward the arity.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BasisTerm {
    x: NatIndex,
    slots: Vec<NatIndex>,
}

impl BasisTerm {
    /// Panics if the slot dimensions disagree with `x`.
    pub fn new(x: NatIndex, slots: Vec<NatIndex>) -> Self {
        let dim = x.dim();
        assert!(
            slots.iter().all(|s| s.dim() == dim),
            "basis term slots must share the x-part dimension"
        );
        BasisTerm { x, slots }
    }

    pub fn try_new(x: NatIndex, slots: Vec<NatIndex>) -> Result<Self> {
        for s in &slots {
            check_dim(x.dim(), s.dim())?;
        }
        Ok(BasisTerm { x, slots })
    }

    pub fn dim(&self) -> usize {
        self.x.dim()
    }

    pub fn arity(&self) -> usize {
        self.slots.len()
    }

    pub fn x_part(&self) -> &NatIndex {
        &self.x
    }

    pub fn slots(&self) -> &[NatIndex] {
        &self.slots
    }

    /// `Σ_s a_s`, the total derivative multi-index.
    pub fn slot_sum(&self) -> NatIndex {
        self.slots
            .iter()
            .fold(NatIndex::zero(self.dim()), |acc, s| &acc + s)
    }

    /// Evaluate on `args`, returning the polynomial without the coefficient.
    pub fn apply(&self, args: &[Polynomial]) -> Result<Polynomial> {
        if args.len() != self.arity() {
            return Err(Error::ArityMismatch {
                expected: self.arity(),
                found: args.len(),
            });
        }
        let mut acc = Polynomial::monomial(self.x.clone(), Rational::one());
        for (slot, u) in self.slots.iter().zip(args) {
            check_dim(self.dim(), u.dim())?;
            acc = acc.mul(&u.derive(slot)?)?;
            if acc.is_zero() {
                break;
            }
        }
        Ok(acc)
    }
}

impl Ord for BasisTerm {
    fn cmp(&self, other: &Self) -> Ordering {
        self.arity()
            .cmp(&other.arity())
            .then_with(|| self.x.cmp(&other.x))
            .then_with(|| self.slots.cmp(&other.slots))
    }
}

impl PartialOrd for BasisTerm {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for BasisTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x^{}", self.x)?;
        for (i, s) in self.slots.iter().enumerate() {
            f.write_str(if i == 0 { " ∂^" } else { "⊗∂^" })?;
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

/// A finite rational combination of basis terms, an element of `C = ⊕ Cᵖ`.
///
/// The representation is always canonical: no zero coefficients and terms
/// ordered by arity, then by `a₀`, then slot by slot.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Cochain {
    dim: usize,
    terms: BTreeMap<BasisTerm, Rational>,
}

impl Cochain {
    pub fn zero(dim: usize) -> Self {
        Cochain {
            dim,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_term(term: BasisTerm, coeff: Rational) -> Self {
        let mut c = Cochain::zero(term.dim());
        c.add_term(term, coeff);
        c
    }

    /// Merge like terms and drop zeros; rejects terms of the wrong dimension.
    pub fn from_terms(
        dim: usize,
        terms: impl IntoIterator<Item = (BasisTerm, Rational)>,
    ) -> Result<Self> {
        let mut c = Cochain::zero(dim);
        for (t, k) in terms {
            check_dim(dim, t.dim())?;
            c.add_term(t, k);
        }
        Ok(c)
    }

    /// The arity-0 cochain whose value is `u`.
    pub fn from_polynomial(u: &Polynomial) -> Self {
        let mut c = Cochain::zero(u.dim());
        for (e, k) in u.terms() {
            c.add_term(BasisTerm::new(e.clone(), Vec::new()), k.clone());
        }
        c
    }

    /// The vector field `hⁱ = xᵢ∂ᵢ` (0-based `i`).
    pub fn euler_field(dim: usize, i: usize) -> Self {
        let e = NatIndex::unit(dim, i);
        Cochain::from_term(BasisTerm::new(e.clone(), vec![e]), Rational::one())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BasisTerm, &Rational)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (BasisTerm, Rational)> {
        self.terms.into_iter()
    }

    pub fn coeff(&self, t: &BasisTerm) -> Rational {
        self.terms.get(t).cloned().unwrap_or_else(Rational::zero)
    }

    /// The common arity of all terms, `None` if empty or mixed.
    pub fn arity(&self) -> Option<usize> {
        let mut it = self.terms.keys().map(BasisTerm::arity);
        let first = it.next()?;
        it.all(|a| a == first).then_some(first)
    }

    /// Arity of a homogeneous cochain; the zero cochain is accepted as any
    /// arity and reported as `None`.
    pub(crate) fn homogeneous_arity(&self) -> Result<Option<usize>> {
        if self.is_zero() {
            return Ok(None);
        }
        self.arity().map(Some).ok_or(Error::NotHomogeneous)
    }

    /// The component in `C^p`.
    pub fn component(&self, p: usize) -> Cochain {
        self.filter(|t| t.arity() == p)
    }

    /// Split into arity-homogeneous components, keyed by arity.
    pub fn by_arity(&self) -> BTreeMap<usize, Cochain> {
        let mut out: BTreeMap<usize, Cochain> = BTreeMap::new();
        for (t, k) in &self.terms {
            out.entry(t.arity())
                .or_insert_with(|| Cochain::zero(self.dim))
                .terms
                .insert(t.clone(), k.clone());
        }
        out
    }

    pub fn filter(&self, mut keep: impl FnMut(&BasisTerm) -> bool) -> Cochain {
        Cochain {
            dim: self.dim,
            terms: self
                .terms
                .iter()
                .filter(|(t, _)| keep(t))
                .map(|(t, k)| (t.clone(), k.clone()))
                .collect(),
        }
    }

    pub(crate) fn add_term(&mut self, t: BasisTerm, k: Rational) {
        if k.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(t) {
            Entry::Vacant(v) => {
                v.insert(k);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += k;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn checked_add(&self, other: &Cochain) -> Result<Cochain> {
        check_dim(self.dim, other.dim)?;
        let mut out = self.clone();
        for (t, k) in &other.terms {
            out.add_term(t.clone(), k.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Cochain) -> Result<Cochain> {
        self.checked_add(&-other)
    }

    pub fn scale(&self, k: &Rational) -> Cochain {
        if k.is_zero() {
            return Cochain::zero(self.dim);
        }
        Cochain {
            dim: self.dim,
            terms: self.terms.iter().map(|(t, c)| (t.clone(), c * k)).collect(),
        }
    }

    /// Largest slot order `|a_s|` among all terms.
    pub fn max_slot_total(&self) -> u64 {
        self.terms
            .keys()
            .map(|t| t.slot_sum().total())
            .max()
            .unwrap_or(0)
    }

    /// Evaluate `Σ φ x^{a₀}(∂^{a₁}u₁)…(∂^{a_p}u_p)`.
    pub fn apply(&self, args: &[Polynomial]) -> Result<Polynomial> {
        for u in args {
            check_dim(self.dim, u.dim())?;
        }
        let mut out = Polynomial::zero(self.dim);
        for (t, k) in &self.terms {
            let v = t.apply(args)?;
            out = out.add(&v.scale(k))?;
        }
        Ok(out)
    }
}

/// Re-normalize a cochain. Values of [`Cochain`] are canonical by
/// construction, so this is the identity on them; the raw-term form lives
/// in [`Cochain::from_terms`].
pub fn canonicalize(c: &Cochain) -> Cochain {
    Cochain::from_terms(c.dim, c.terms().map(|(t, k)| (t.clone(), k.clone())))
        .expect("terms of a cochain share its dimension")
}

pub fn apply(c: &Cochain, args: &[Polynomial]) -> Result<Polynomial> {
    c.apply(args)
}

impl Add for &Cochain {
    type Output = Cochain;

    /// Panics on dimension mismatch; see [`Cochain::checked_add`].
    fn add(self, rhs: &Cochain) -> Cochain {
        self.checked_add(rhs).expect("cochain dimensions must agree")
    }
}

impl Sub for &Cochain {
    type Output = Cochain;

    fn sub(self, rhs: &Cochain) -> Cochain {
        self.checked_sub(rhs).expect("cochain dimensions must agree")
    }
}

impl Neg for &Cochain {
    type Output = Cochain;

    fn neg(self) -> Cochain {
        Cochain {
            dim: self.dim,
            terms: self.terms.iter().map(|(t, k)| (t.clone(), -k)).collect(),
        }
    }
}

impl fmt::Display for Cochain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (t, k)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{k}·{t}")?;
        }
        Ok(())
    }
}

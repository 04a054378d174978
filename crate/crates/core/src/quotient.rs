//! The effect algebra of `𝒟`-classes of idempotents of a Boolean inverse
//! monoid, and invariant means on such monoids.
//!
//! Monoids are accessed through [`BooleanInverseMonoidView`]. A view either
//! enumerates all of its idempotents, in which case every precondition is
//! checked exhaustively, or supplies class representatives together with a
//! constructive [`below_in_class`](BooleanInverseMonoidView::below_in_class)
//! for monoids too large to enumerate.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Debug;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::effect::{FiniteMvAlgebra, PartialAlgebra};
use crate::error::{Error, Result};
use crate::semisimple::{SemisimpleElement, Signature, StandardMorphism};

pub trait BooleanInverseMonoidView {
    type Idem: Clone + Eq + Debug;
    /// Canonical label of a `𝒟`-class.
    type Key: Ord + Clone + Debug;

    /// Every idempotent, or `None` when the semilattice is too large.
    fn idempotents(&self) -> Option<Vec<Self::Idem>>;
    fn zero(&self) -> Self::Idem;
    fn one(&self) -> Self::Idem;
    fn leq(&self, e: &Self::Idem, f: &Self::Idem) -> bool;
    fn meet(&self, e: &Self::Idem, f: &Self::Idem) -> Self::Idem;
    fn join(&self, e: &Self::Idem, f: &Self::Idem) -> Self::Idem;
    /// The Boolean complement `1 \ e`.
    fn complement(&self, e: &Self::Idem) -> Self::Idem;
    fn d_related(&self, e: &Self::Idem, f: &Self::Idem) -> bool;
    fn class_key(&self, e: &Self::Idem) -> Self::Key;

    fn orthogonal(&self, e: &Self::Idem, f: &Self::Idem) -> bool {
        self.meet(e, f) == self.zero()
    }

    fn key_label(&self, key: &Self::Key) -> String {
        format!("{key:?}")
    }

    /// One idempotent per class, if the view knows canonical ones.
    fn class_representatives(&self) -> Option<Vec<Self::Idem>> {
        None
    }

    /// Constructive search for `e′ 𝒟 e` with `e′ ≤ bound`. The outer `None`
    /// means the view has no such shortcut.
    fn below_in_class(&self, _e: &Self::Idem, _bound: &Self::Idem) -> Option<Option<Self::Idem>> {
        None
    }
}

/// The quotient algebra together with its class labels and representatives.
#[derive(Debug, Clone)]
pub struct Quotient<K, E> {
    pub algebra: PartialAlgebra,
    pub keys: Vec<K>,
    pub representatives: Vec<E>,
}

impl<K: Ord, E> Quotient<K, E> {
    pub fn index_of(&self, key: &K) -> Option<usize> {
        self.keys.binary_search(key).ok()
    }

    pub fn mv(&self) -> Result<FiniteMvAlgebra> {
        FiniteMvAlgebra::new(self.algebra.clone())
    }
}

/// Checks the preconditions (Boolean semilattice, keys label exactly the
/// `𝒟`-classes, complete semisimplicity, `𝒟` preserves complementation)
/// and builds `[e] ⊕ [f] = [e′ ∨ f]` for `e′ 𝒟 e` below the complement of
/// `f`, undefined when no such `e′` exists.
pub fn quotient_mv<V: BooleanInverseMonoidView>(view: &V) -> Result<Quotient<V::Key, V::Idem>> {
    let all = view.idempotents();
    let reps: Vec<V::Idem> = match (view.class_representatives(), &all) {
        (Some(r), _) => r,
        (None, Some(all)) => {
            let mut seen = BTreeMap::new();
            for e in all {
                seen.entry(view.class_key(e)).or_insert_with(|| e.clone());
            }
            seen.into_values().collect()
        }
        (None, None) => {
            return Err(Error::NotFoulis(
                "view neither enumerates idempotents nor names class representatives".into(),
            ))
        }
    };
    let mut keyed: Vec<(V::Key, V::Idem)> = reps.into_iter().map(|e| (view.class_key(&e), e)).collect();
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    if keyed.windows(2).any(|w| w[0].0 == w[1].0) {
        return Err(Error::NotFoulis("two representatives share a class key".into()));
    }
    let (keys, reps): (Vec<V::Key>, Vec<V::Idem>) = keyed.into_iter().unzip();

    let members: Option<Vec<Vec<V::Idem>>> = match &all {
        Some(all) => {
            check_foulis_exhaustive(view, all, &keys)?;
            let mut by_class = vec![Vec::new(); keys.len()];
            for e in all {
                let i = keys.binary_search(&view.class_key(e)).map_err(|_| {
                    Error::NotFoulis(format!("idempotent {e:?} has no representative"))
                })?;
                by_class[i].push(e.clone());
            }
            Some(by_class)
        }
        None => {
            check_foulis_sampled(view, &reps, &keys)?;
            None
        }
    };

    let index = |e: &V::Idem| -> Result<usize> {
        keys.binary_search(&view.class_key(e))
            .map_err(|_| Error::NotFoulis(format!("{e:?} lies outside the known classes")))
    };
    let n = keys.len();
    let mut table = vec![vec![None; n]; n];
    for (j, f) in reps.iter().enumerate() {
        let room = view.complement(f);
        for i in 0..n {
            let found = match view.below_in_class(&reps[i], &room) {
                Some(found) => found,
                None => {
                    let class = members.as_ref().ok_or_else(|| {
                        Error::NotFoulis("no way to search a class below a bound".into())
                    })?;
                    class[i].iter().find(|e| view.leq(e, &room)).cloned()
                }
            };
            if let Some(e) = found {
                table[i][j] = Some(index(&view.join(&e, f))?);
            }
        }
    }
    let names = keys.iter().map(|k| view.key_label(k)).collect();
    let zero = index(&view.zero())?;
    let one = index(&view.one())?;
    let algebra = PartialAlgebra::new(names, zero, Some(one), table)?;
    Ok(Quotient {
        algebra,
        keys,
        representatives: reps,
    })
}

fn check_foulis_exhaustive<V: BooleanInverseMonoidView>(
    view: &V,
    all: &[V::Idem],
    keys: &[V::Key],
) -> Result<()> {
    let zero = view.zero();
    let one = view.one();
    let ks: Vec<V::Key> = all.iter().map(|e| view.class_key(e)).collect();
    let comp_keys: Vec<V::Key> = all.iter().map(|e| view.class_key(&view.complement(e))).collect();
    for (a, e) in all.iter().enumerate() {
        let c = view.complement(e);
        if view.meet(e, &c) != zero || view.join(e, &c) != one {
            return Err(Error::NotFoulis(format!("{e:?} has no Boolean complement")));
        }
        if keys.binary_search(&ks[a]).is_err() {
            return Err(Error::NotFoulis(format!("{e:?} has no representative")));
        }
        for (b, f) in all.iter().enumerate() {
            let related = view.d_related(e, f);
            if related != (ks[a] == ks[b]) {
                return Err(Error::NotFoulis(format!(
                    "class keys disagree with 𝒟 on {e:?}, {f:?}"
                )));
            }
            if related && a != b && view.leq(e, f) {
                return Err(Error::NotFoulis(format!(
                    "not completely semisimple: {e:?} < {f:?} are 𝒟-related"
                )));
            }
            if related && comp_keys[a] != comp_keys[b] {
                return Err(Error::NotFoulis(format!(
                    "𝒟 does not preserve complementation at {e:?}, {f:?}"
                )));
            }
        }
    }
    Ok(())
}

/// Without an enumeration, checks the preconditions on every idempotent the
/// view produces as a class member below another representative.
fn check_foulis_sampled<V: BooleanInverseMonoidView>(
    view: &V,
    reps: &[V::Idem],
    keys: &[V::Key],
) -> Result<()> {
    for (i, e) in reps.iter().enumerate() {
        let c = view.complement(e);
        if view.meet(e, &c) != view.zero() || view.join(e, &c) != view.one() {
            return Err(Error::NotFoulis(format!("{e:?} has no Boolean complement")));
        }
        let ck = view.class_key(&c);
        for (j, f) in reps.iter().enumerate() {
            if (i == j) != view.d_related(e, f) {
                return Err(Error::NotFoulis(format!(
                    "class keys disagree with 𝒟 on {e:?}, {f:?}"
                )));
            }
            let Some(Some(moved)) = view.below_in_class(e, f) else {
                continue;
            };
            if view.class_key(&moved) != keys[i] || !view.d_related(&moved, e) {
                return Err(Error::NotFoulis(format!("{moved:?} is not in the class of {e:?}")));
            }
            if i == j && moved != *f {
                return Err(Error::NotFoulis(format!(
                    "not completely semisimple: {moved:?} < {f:?} are 𝒟-related"
                )));
            }
            if view.class_key(&view.complement(&moved)) != ck {
                return Err(Error::NotFoulis(format!(
                    "𝒟 does not preserve complementation at {e:?}, {moved:?}"
                )));
            }
        }
    }
    Ok(())
}

/// Outcome of [`invariant_mean_check`]; `failures` lists the first few
/// violations of each property.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct MeanReport {
    pub im1: bool,
    pub im2: bool,
    pub im3: bool,
    pub good: bool,
    pub reflects_d: bool,
    /// The `𝒥`-order on `𝒟`-classes is a chain.
    pub linear_j_order: bool,
    pub failures: Vec<String>,
}

impl MeanReport {
    pub fn is_invariant_mean(&self) -> bool {
        self.im1 && self.im2 && self.im3
    }

    pub fn all_pass(&self) -> bool {
        self.is_invariant_mean() && self.good && self.reflects_d && self.linear_j_order
    }
}

const REPORTED_FAILURES: usize = 5;

/// Exhaustively checks the invariant-mean axioms, goodness, reflection of
/// `𝒟`, and linearity of the induced order on `𝒟`-classes. The second axiom
/// is checked on every `𝒟`-related pair, which covers every `s⁻¹s`, `ss⁻¹`.
pub fn invariant_mean_check<V, F>(view: &V, mean: F) -> Result<MeanReport>
where
    V: BooleanInverseMonoidView,
    F: Fn(&V::Idem) -> BigRational,
{
    let all = view
        .idempotents()
        .ok_or_else(|| Error::Precondition("invariant means are checked on enumerable views".into()))?;
    let mu: Vec<BigRational> = all.iter().map(&mean).collect();
    let mut report = MeanReport {
        im1: mean(&view.one()).is_one(),
        im2: true,
        im3: true,
        good: true,
        reflects_d: true,
        linear_j_order: true,
        failures: Vec::new(),
    };
    if !report.im1 {
        report.failures.push(format!("IM1: μ(1) = {}", mean(&view.one())));
    }
    let mut counts = [0usize; 4];
    let mut note = |slot: usize, flag: &mut bool, msg: String, failures: &mut Vec<String>| {
        *flag = false;
        if counts[slot] < REPORTED_FAILURES {
            failures.push(msg);
        }
        counts[slot] += 1;
    };
    let position = |e: &V::Idem| all.iter().position(|x| x == e);
    // Measures realized below each idempotent.
    let below: Vec<BTreeSet<&BigRational>> = all
        .iter()
        .map(|f| {
            all.iter()
                .zip(&mu)
                .filter(|(e, _)| view.leq(e, f))
                .map(|(_, m)| m)
                .collect()
        })
        .collect();
    let mut failures = Vec::new();
    for (a, e) in all.iter().enumerate() {
        for (b, f) in all.iter().enumerate() {
            let related = view.d_related(e, f);
            if related && mu[a] != mu[b] {
                note(0, &mut report.im2, format!("IM2: {e:?} 𝒟 {f:?} but μ differs"), &mut failures);
            }
            if a <= b && view.orthogonal(e, f) {
                let j = view.join(e, f);
                let mj = match position(&j) {
                    Some(k) => mu[k].clone(),
                    None => mean(&j),
                };
                if mj != &mu[a] + &mu[b] {
                    note(1, &mut report.im3, format!("IM3: μ({e:?} ∨ {f:?}) ≠ μ(e) + μ(f)"), &mut failures);
                }
            }
            if mu[a] <= mu[b] && !below[b].contains(&mu[a]) {
                note(2, &mut report.good, format!("good: nothing of measure μ({e:?}) below {f:?}"), &mut failures);
            }
            if mu[a] == mu[b] && !related {
                note(3, &mut report.reflects_d, format!("reflects 𝒟: {e:?}, {f:?}"), &mut failures);
            }
        }
    }
    report.failures.extend(failures);

    // Classes below each idempotent, then the induced order on classes.
    let keys: Vec<V::Key> = all.iter().map(|e| view.class_key(e)).collect();
    let classes: BTreeSet<&V::Key> = keys.iter().collect();
    let classes: Vec<&V::Key> = classes.into_iter().collect();
    let cidx = |k: &V::Key| classes.binary_search(&k).unwrap();
    let c = classes.len();
    let mut j_leq = vec![vec![false; c]; c];
    for (b, f) in all.iter().enumerate() {
        for (a, e) in all.iter().enumerate() {
            if view.leq(e, f) {
                j_leq[cidx(&keys[a])][cidx(&keys[b])] = true;
            }
        }
    }
    for x in 0..c {
        for y in 0..c {
            if !j_leq[x][y] && !j_leq[y][x] {
                report.linear_j_order = false;
                report
                    .failures
                    .push(format!("classes {:?} and {:?} are incomparable", classes[x], classes[y]));
            }
        }
    }
    if mu.iter().any(|m| m < &BigRational::zero()) {
        report.im1 = false;
        report.failures.push("μ takes a negative value".into());
    }
    Ok(report)
}

/// Exhaustive view of a semisimple monoid; classes are keyed by rank vector.
#[derive(Debug, Clone)]
pub struct SemisimpleView {
    signature: Signature,
    enumeration_limit: usize,
}

impl SemisimpleView {
    /// Views with more than `enumeration_limit` letters skip enumeration.
    pub const DEFAULT_ENUMERATION_LIMIT: usize = 10;

    pub fn new(signature: Signature) -> Self {
        SemisimpleView {
            signature,
            enumeration_limit: Self::DEFAULT_ENUMERATION_LIMIT,
        }
    }

    pub fn with_enumeration_limit(mut self, letters: usize) -> Self {
        self.enumeration_limit = letters;
        self
    }

    pub fn signature(&self) -> &Signature {
        &self.signature
    }

    /// Partial identity on the first `r_i` letters of each component.
    pub fn initial_idempotent(&self, ranks: &[usize]) -> SemisimpleElement {
        let parts = self
            .signature
            .sizes()
            .iter()
            .zip(ranks)
            .map(|(&m, &r)| {
                let letters: Vec<usize> = (1..=r).collect();
                crate::partial_bijections::PartialBijection::partial_identity(m, &letters)
                    .expect("rank within degree")
            })
            .collect();
        SemisimpleElement::from_parts_unchecked(parts)
    }

    /// The uniform mean: each letter of component `i` weighs `w_i / m_i`.
    pub fn letter_mean(&self, e: &SemisimpleElement, weights: &[BigRational]) -> BigRational {
        e.rank_vector()
            .iter()
            .zip(self.signature.sizes())
            .zip(weights)
            .map(|((&r, &m), w)| w * BigRational::new(r.into(), m.into()))
            .sum()
    }
}

impl BooleanInverseMonoidView for SemisimpleView {
    type Idem = SemisimpleElement;
    type Key = Vec<usize>;

    fn idempotents(&self) -> Option<Vec<SemisimpleElement>> {
        (self.signature.total_letters() <= self.enumeration_limit).then(|| self.signature.idempotents())
    }

    fn zero(&self) -> SemisimpleElement {
        self.signature.zero()
    }

    fn one(&self) -> SemisimpleElement {
        self.signature.identity()
    }

    fn leq(&self, e: &SemisimpleElement, f: &SemisimpleElement) -> bool {
        e.natural_leq(f).expect("same signature")
    }

    fn meet(&self, e: &SemisimpleElement, f: &SemisimpleElement) -> SemisimpleElement {
        e.meet(f).expect("same signature")
    }

    fn join(&self, e: &SemisimpleElement, f: &SemisimpleElement) -> SemisimpleElement {
        e.join(f)
            .expect("same signature")
            .expect("idempotents are compatible")
    }

    fn complement(&self, e: &SemisimpleElement) -> SemisimpleElement {
        e.complement_idem().expect("idempotent")
    }

    fn d_related(&self, e: &SemisimpleElement, f: &SemisimpleElement) -> bool {
        e.d_related(f).expect("same signature")
    }

    fn class_key(&self, e: &SemisimpleElement) -> Vec<usize> {
        e.rank_vector()
    }

    fn key_label(&self, key: &Vec<usize>) -> String {
        rank_label(key)
    }

    fn class_representatives(&self) -> Option<Vec<SemisimpleElement>> {
        let ranges: Vec<Vec<usize>> = self.signature.sizes().iter().map(|&m| (0..=m).collect()).collect();
        Some(
            crate::semisimple::cartesian(&ranges)
                .iter()
                .map(|r| self.initial_idempotent(r))
                .collect(),
        )
    }

    fn below_in_class(
        &self,
        e: &SemisimpleElement,
        bound: &SemisimpleElement,
    ) -> Option<Option<SemisimpleElement>> {
        let mut parts = Vec::new();
        for (p, b) in e.parts().iter().zip(bound.parts()) {
            let room: Vec<usize> = b.pairs().into_iter().map(|(j, _)| j).collect();
            if room.len() < p.rank() {
                return Some(None);
            }
            parts.push(
                crate::partial_bijections::PartialBijection::partial_identity(b.degree(), &room[..p.rank()])
                    .expect("letters in range"),
            );
        }
        Some(Some(SemisimpleElement::from_parts_unchecked(parts)))
    }
}

/// `"r"` for one component, `"(r1,…,rk)"` otherwise.
pub fn rank_label(ranks: &[usize]) -> String {
    if ranks.len() == 1 {
        ranks[0].to_string()
    } else {
        let s: Vec<String> = ranks.iter().map(|r| r.to_string()).collect();
        format!("({})", s.join(","))
    }
}

/// The map `[e] ↦ [σ(e)]` between quotients of the source and target of a
/// standard morphism, computed on class representatives.
pub fn induced_quotient_map(
    sigma: &StandardMorphism,
    source: &Quotient<Vec<usize>, SemisimpleElement>,
    target: &Quotient<Vec<usize>, SemisimpleElement>,
) -> Result<Vec<usize>> {
    source
        .representatives
        .iter()
        .map(|e| {
            let image = sigma.apply(e)?;
            target
                .index_of(&image.rank_vector())
                .ok_or_else(|| Error::InvalidMorphism("image class missing from target".into()))
        })
        .collect()
}

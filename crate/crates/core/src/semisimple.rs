//! Semisimple inverse monoids `I_{m(1)} × … × I_{m(k)}` and the standard
//! morphisms between them.
//!
//! A [`StandardMorphism`] with multiplicity matrix `M` (`l × k`, `M m = n`)
//! sends `(A_1, …, A_k)` to the tuple whose `i`-th coordinate is the block
//! diagonal rook matrix `s_{i1}A_1 ⊕ … ⊕ s_{ik}A_k`. Blocks are laid out by
//! source component ascending and then by copy index ascending; letters
//! inside a block keep their source order.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partial_bijections::{self, PartialBijection};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Signature(Vec<usize>);

impl Signature {
    pub fn new(sizes: Vec<usize>) -> Result<Self> {
        if sizes.is_empty() {
            return Err(Error::InvalidMorphism("empty signature".into()));
        }
        if sizes.contains(&0) {
            return Err(Error::InvalidMorphism(format!("signature {sizes:?} has a zero entry")));
        }
        Ok(Signature(sizes))
    }

    pub fn sizes(&self) -> &[usize] {
        &self.0
    }

    pub fn components(&self) -> usize {
        self.0.len()
    }

    pub fn total_letters(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn identity(&self) -> SemisimpleElement {
        SemisimpleElement {
            parts: self.0.iter().map(|&m| PartialBijection::identity(m)).collect(),
        }
    }

    pub fn zero(&self) -> SemisimpleElement {
        SemisimpleElement {
            parts: self.0.iter().map(|&m| PartialBijection::zero(m)).collect(),
        }
    }

    /// `𝐞_i`: identity in component `i`, zero elsewhere.
    pub fn unit_idempotent(&self, i: usize) -> SemisimpleElement {
        SemisimpleElement {
            parts: self
                .0
                .iter()
                .enumerate()
                .map(|(j, &m)| {
                    if i == j {
                        PartialBijection::identity(m)
                    } else {
                        PartialBijection::zero(m)
                    }
                })
                .collect(),
        }
    }

    /// Every element, in lexicographic order of the per-component enumerations.
    pub fn elements(&self) -> Vec<SemisimpleElement> {
        let per: Vec<Vec<PartialBijection>> = self
            .0
            .iter()
            .map(|&m| partial_bijections::enumerate(m).collect())
            .collect();
        cartesian(&per)
            .into_iter()
            .map(|parts| SemisimpleElement { parts })
            .collect()
    }

    pub fn idempotents(&self) -> Vec<SemisimpleElement> {
        let per: Vec<Vec<PartialBijection>> = self
            .0
            .iter()
            .map(|&m| partial_bijections::idempotents(m))
            .collect();
        cartesian(&per)
            .into_iter()
            .map(|parts| SemisimpleElement { parts })
            .collect()
    }

    /// Number of elements of the monoid.
    pub fn order(&self) -> u128 {
        self.0.iter().map(|&m| partial_bijections::order(m)).product()
    }
}

impl TryFrom<Vec<usize>> for Signature {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Signature::new(v)
    }
}

impl From<Signature> for Vec<usize> {
    fn from(s: Signature) -> Self {
        s.0
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

pub(crate) fn cartesian<T: Clone>(lists: &[Vec<T>]) -> Vec<Vec<T>> {
    let mut out: Vec<Vec<T>> = vec![Vec::new()];
    for list in lists {
        let mut next = Vec::with_capacity(out.len() * list.len());
        for prefix in &out {
            for x in list {
                let mut v = prefix.clone();
                v.push(x.clone());
                next.push(v);
            }
        }
        out = next;
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SemisimpleElement {
    parts: Vec<PartialBijection>,
}

/// Binary operations lifted coordinatewise by [`elementwise`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BinaryOp {
    Product,
    Meet,
    Join,
}

impl SemisimpleElement {
    pub fn new(parts: Vec<PartialBijection>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidMorphism("empty tuple".into()));
        }
        if parts.iter().any(|p| p.degree() == 0) {
            return Err(Error::InvalidMorphism("component of degree 0".into()));
        }
        Ok(SemisimpleElement { parts })
    }

    pub(crate) fn from_parts_unchecked(parts: Vec<PartialBijection>) -> Self {
        SemisimpleElement { parts }
    }

    pub fn parts(&self) -> &[PartialBijection] {
        &self.parts
    }

    pub fn signature(&self) -> Signature {
        Signature(self.parts.iter().map(PartialBijection::degree).collect())
    }

    fn check(&self, other: &Self) -> Result<()> {
        let (a, b) = (self.signature(), other.signature());
        if a != b {
            return Err(Error::SignatureMismatch(a.0, b.0));
        }
        Ok(())
    }

    fn zip_with(
        &self,
        other: &Self,
        f: impl Fn(&PartialBijection, &PartialBijection) -> Result<PartialBijection>,
    ) -> Result<Self> {
        self.check(other)?;
        let parts = self
            .parts
            .iter()
            .zip(&other.parts)
            .map(|(a, b)| f(a, b))
            .collect::<Result<_>>()?;
        Ok(SemisimpleElement { parts })
    }

    /// Coordinatewise `self ∘ other`.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a.compose(b))
    }

    pub fn meet(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a.meet(b))
    }

    pub fn join(&self, other: &Self) -> Result<Option<Self>> {
        self.check(other)?;
        let mut parts = Vec::with_capacity(self.parts.len());
        for (a, b) in self.parts.iter().zip(&other.parts) {
            match a.join(b)? {
                Some(j) => parts.push(j),
                None => return Ok(None),
            }
        }
        Ok(Some(SemisimpleElement { parts }))
    }

    pub fn inverse(&self) -> Self {
        SemisimpleElement {
            parts: self.parts.iter().map(PartialBijection::inverse).collect(),
        }
    }

    pub fn domain_idem(&self) -> Self {
        SemisimpleElement {
            parts: self.parts.iter().map(PartialBijection::domain_idem).collect(),
        }
    }

    pub fn range_idem(&self) -> Self {
        SemisimpleElement {
            parts: self.parts.iter().map(PartialBijection::range_idem).collect(),
        }
    }

    pub fn complement_idem(&self) -> Result<Self> {
        Ok(SemisimpleElement {
            parts: self
                .parts
                .iter()
                .map(PartialBijection::complement_idem)
                .collect::<Result<_>>()?,
        })
    }

    pub fn is_idempotent(&self) -> bool {
        self.parts.iter().all(PartialBijection::is_idempotent)
    }

    pub fn is_zero(&self) -> bool {
        self.parts.iter().all(PartialBijection::is_zero)
    }

    pub fn is_unit(&self) -> bool {
        self.parts.iter().all(PartialBijection::is_permutation)
    }

    pub fn natural_leq(&self, other: &Self) -> Result<bool> {
        self.check(other)?;
        for (a, b) in self.parts.iter().zip(&other.parts) {
            if !a.natural_leq(b)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn compatible(&self, other: &Self) -> Result<bool> {
        self.check(other)?;
        for (a, b) in self.parts.iter().zip(&other.parts) {
            if !a.compatible(b)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn orthogonal(&self, other: &Self) -> Result<bool> {
        self.check(other)?;
        for (a, b) in self.parts.iter().zip(&other.parts) {
            if !a.orthogonal(b)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Ranks of the domain idempotent, one per component.
    pub fn rank_vector(&self) -> Vec<usize> {
        self.parts.iter().map(PartialBijection::rank).collect()
    }

    pub fn d_related(&self, other: &Self) -> Result<bool> {
        self.check(other)?;
        Ok(self.rank_vector() == other.rank_vector())
    }
}

impl fmt::Display for SemisimpleElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(|p| format!("[{p}]")).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// Applies `op` in every coordinate. `Ok(None)` signals an undefined join.
pub fn elementwise(
    op: BinaryOp,
    x: &SemisimpleElement,
    y: &SemisimpleElement,
) -> Result<Option<SemisimpleElement>> {
    match op {
        BinaryOp::Product => x.multiply(y).map(Some),
        BinaryOp::Meet => x.meet(y).map(Some),
        BinaryOp::Join => x.join(y),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct StandardMorphism {
    source: Signature,
    target: Signature,
    mult: Vec<Vec<usize>>,
}

impl StandardMorphism {
    /// Validates `M m = n` and the matrix shape.
    pub fn new(source: Signature, target: Signature, mult: Vec<Vec<usize>>) -> Result<Self> {
        if mult.len() != target.components() {
            return Err(Error::InvalidMorphism(format!(
                "matrix has {} rows, target has {} components",
                mult.len(),
                target.components()
            )));
        }
        for (i, row) in mult.iter().enumerate() {
            if row.len() != source.components() {
                return Err(Error::InvalidMorphism(format!(
                    "row {} has {} entries, source has {} components",
                    i + 1,
                    row.len(),
                    source.components()
                )));
            }
            let n: usize = row.iter().zip(source.sizes()).map(|(s, m)| s * m).sum();
            if n != target.sizes()[i] {
                return Err(Error::InvalidMorphism(format!(
                    "combinatorial condition fails in row {}: {} != {}",
                    i + 1,
                    n,
                    target.sizes()[i]
                )));
            }
        }
        Ok(StandardMorphism { source, target, mult })
    }

    /// The target signature is computed as `M m`.
    pub fn from_matrix(source: Signature, mult: Vec<Vec<usize>>) -> Result<Self> {
        let sizes = mult
            .iter()
            .map(|row| row.iter().zip(source.sizes()).map(|(s, m)| s * m).sum())
            .collect();
        let target = Signature::new(sizes)?;
        Self::new(source, target, mult)
    }

    pub fn identity(signature: Signature) -> Self {
        let k = signature.components();
        let mult = (0..k)
            .map(|i| (0..k).map(|j| usize::from(i == j)).collect())
            .collect();
        StandardMorphism {
            source: signature.clone(),
            target: signature,
            mult,
        }
    }

    pub fn source(&self) -> &Signature {
        &self.source
    }

    pub fn target(&self) -> &Signature {
        &self.target
    }

    pub fn mult(&self) -> &[Vec<usize>] {
        &self.mult
    }

    pub fn apply(&self, x: &SemisimpleElement) -> Result<SemisimpleElement> {
        apply_standard(self, x)
    }

    /// Every column nonzero.
    pub fn is_injective(&self) -> bool {
        is_injective_standard(self)
    }
}

impl fmt::Display for StandardMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -> {} by {:?}", self.source, self.target, self.mult)
    }
}

pub fn apply_standard(sigma: &StandardMorphism, x: &SemisimpleElement) -> Result<SemisimpleElement> {
    let sig = x.signature();
    if sig != sigma.source {
        return Err(Error::SignatureMismatch(sig.0, sigma.source.0.clone()));
    }
    let parts = sigma
        .mult
        .iter()
        .zip(sigma.target.sizes())
        .map(|(row, &n)| {
            let mut images = vec![None; n];
            let mut offset = 0;
            for (part, &copies) in x.parts.iter().zip(row) {
                let m = part.degree();
                for _ in 0..copies {
                    for (l, img) in part.images().iter().enumerate() {
                        images[offset + l] = img.map(|t| offset + t);
                    }
                    offset += m;
                }
            }
            PartialBijection::from_images_unchecked(images)
        })
        .collect();
    Ok(SemisimpleElement { parts })
}

/// `τ ∘ σ`, classified by the matrix product `τ.mult · σ.mult`.
///
/// The functional composite equals this standard morphism up to the letter
/// isomorphism returned by [`composition_letter_isomorphism`].
pub fn compose_standard(tau: &StandardMorphism, sigma: &StandardMorphism) -> Result<StandardMorphism> {
    if sigma.target != tau.source {
        return Err(Error::SignatureMismatch(
            sigma.target.0.clone(),
            tau.source.0.clone(),
        ));
    }
    let l = tau.mult.len();
    let k = sigma.source.components();
    let mid = tau.source.components();
    let mult = (0..l)
        .map(|i| {
            (0..k)
                .map(|j| (0..mid).map(|p| tau.mult[i][p] * sigma.mult[p][j]).sum())
                .collect()
        })
        .collect();
    StandardMorphism::new(sigma.source.clone(), tau.target.clone(), mult)
}

/// Per target component, the permutation `β_i` of letters with
/// `τ(σ(x))_i = β_i ∘ ρ(x)_i ∘ β_i⁻¹`, where `ρ = compose_standard(τ, σ)`.
///
/// In the two-step layout the copies of source component `j` inside target
/// component `i` are indexed by `(p, c₁, c₂)`: intermediate component `p`,
/// copy `c₁ < τ_{ip}`, copy `c₂ < σ_{pj}`. Enumerating those triples
/// lexicographically numbers the copies of the one-step layout.
pub fn composition_letter_isomorphism(
    tau: &StandardMorphism,
    sigma: &StandardMorphism,
) -> Result<Vec<PartialBijection>> {
    let rho = compose_standard(tau, sigma)?;
    let m = sigma.source.sizes();
    let mid = tau.source.sizes();
    let mut result = Vec::with_capacity(tau.target.components());
    for (i, &n) in tau.target.sizes().iter().enumerate() {
        // Two-step positions: (j, copy-in-order-of-appearance) -> offset.
        let mut two_step: Vec<Vec<usize>> = vec![Vec::new(); m.len()];
        let mut offset = 0;
        for (p, &copies_tau) in tau.mult[i].iter().enumerate() {
            for _ in 0..copies_tau {
                let mut inner = 0;
                for (j, &copies_sigma) in sigma.mult[p].iter().enumerate() {
                    for _ in 0..copies_sigma {
                        two_step[j].push(offset + inner);
                        inner += m[j];
                    }
                }
                offset += mid[p];
            }
        }
        debug_assert_eq!(offset, n);
        let mut images = vec![None; n];
        let mut one_step = 0;
        for (j, &copies) in rho.mult[i].iter().enumerate() {
            for c in 0..copies {
                for l in 0..m[j] {
                    images[one_step + l] = Some(two_step[j][c] + l);
                }
                one_step += m[j];
            }
        }
        result.push(PartialBijection::from_images(images)?);
    }
    Ok(result)
}

/// Standard morphisms `I_m → I_n` exist iff `m | n`.
pub fn morphism_exists(m: usize, n: usize) -> bool {
    m > 0 && n.is_multiple_of(m)
}

pub fn is_injective_standard(sigma: &StandardMorphism) -> bool {
    (0..sigma.source.components()).all(|j| sigma.mult.iter().any(|row| row[j] > 0))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sig(v: &[usize]) -> Signature {
        Signature::new(v.to_vec()).unwrap()
    }

    fn pb(n: usize, pairs: &[(usize, usize)]) -> PartialBijection {
        PartialBijection::from_pairs(n, pairs).unwrap()
    }

    #[test]
    fn elementwise_examples() {
        let s = sig(&[2, 1]);
        let id = s.identity();
        assert_eq!(elementwise(BinaryOp::Product, &id, &id).unwrap(), Some(id.clone()));
        let x = SemisimpleElement::new(vec![pb(2, &[(2, 1)]), pb(1, &[])]).unwrap();
        let y = SemisimpleElement::new(vec![pb(2, &[(1, 2)]), pb(1, &[])]).unwrap();
        let j = elementwise(BinaryOp::Join, &x, &y).unwrap().unwrap();
        assert_eq!(j.parts()[0], pb(2, &[(1, 2), (2, 1)]));
        let t = sig(&[1, 1]);
        let (a, b) = (t.unit_idempotent(0), t.unit_idempotent(1));
        assert!(a.compatible(&b).unwrap());
        assert!(a.orthogonal(&b).unwrap());
        assert!(x.multiply(&t.identity()).is_err());
    }

    #[test]
    fn apply_standard_examples() {
        let s = StandardMorphism::new(sig(&[2]), sig(&[4]), vec![vec![2]]).unwrap();
        let x = SemisimpleElement::new(vec![pb(2, &[(1, 2)])]).unwrap();
        assert_eq!(s.apply(&x).unwrap().parts()[0], pb(4, &[(1, 2), (3, 4)]));

        let s = StandardMorphism::new(sig(&[1, 2]), sig(&[3]), vec![vec![1, 1]]).unwrap();
        let x = SemisimpleElement::new(vec![pb(1, &[(1, 1)]), pb(2, &[(1, 2)])]).unwrap();
        assert_eq!(s.apply(&x).unwrap().parts()[0], pb(3, &[(1, 1), (2, 3)]));
        assert_eq!(s.apply(&sig(&[1, 2]).identity()).unwrap(), sig(&[3]).identity());
    }

    #[test]
    fn combinatorial_conditions_are_enforced() {
        assert!(StandardMorphism::new(sig(&[2]), sig(&[5]), vec![vec![2]]).is_err());
        assert!(StandardMorphism::new(sig(&[2]), sig(&[4]), vec![vec![2, 1]]).is_err());
        assert!(StandardMorphism::from_matrix(sig(&[1, 2]), vec![vec![0, 0]]).is_err());
    }

    #[test]
    fn composition_examples() {
        let s = StandardMorphism::from_matrix(sig(&[2]), vec![vec![2]]).unwrap();
        let t = StandardMorphism::from_matrix(sig(&[4]), vec![vec![2]]).unwrap();
        assert_eq!(compose_standard(&t, &s).unwrap().mult(), &[vec![4]]);
        let id = StandardMorphism::identity(sig(&[4]));
        assert_eq!(compose_standard(&id, &s).unwrap().mult(), s.mult());

        let split = StandardMorphism::from_matrix(sig(&[1]), vec![vec![1], vec![1]]).unwrap();
        let merge = StandardMorphism::from_matrix(sig(&[1, 1]), vec![vec![1, 1]]).unwrap();
        let c = compose_standard(&merge, &split).unwrap();
        assert_eq!(c.mult(), &[vec![2]]);
        for x in sig(&[1]).elements() {
            assert_eq!(c.apply(&x).unwrap(), merge.apply(&split.apply(&x).unwrap()).unwrap());
        }
        assert!(compose_standard(&split, &split).is_err());
    }

    #[test]
    fn composition_needs_a_letter_isomorphism_in_general() {
        // (A, B) ↦ A ⊕ B ↦ A ⊕ B ⊕ A ⊕ B, whereas the standard layout of
        // [[2, 2]] is A ⊕ A ⊕ B ⊕ B.
        let s = StandardMorphism::from_matrix(sig(&[1, 1]), vec![vec![1, 1]]).unwrap();
        let t = StandardMorphism::from_matrix(sig(&[2]), vec![vec![2]]).unwrap();
        let rho = compose_standard(&t, &s).unwrap();
        assert_eq!(rho.mult(), &[vec![2, 2]]);
        let beta = composition_letter_isomorphism(&t, &s).unwrap();
        assert_eq!(beta[0], pb(4, &[(1, 1), (2, 3), (3, 2), (4, 4)]));
        let mut differs = false;
        for x in sig(&[1, 1]).elements() {
            let two = t.apply(&s.apply(&x).unwrap()).unwrap();
            let one = rho.apply(&x).unwrap();
            differs |= two != one;
            let conj = beta[0]
                .compose(&one.parts()[0])
                .unwrap()
                .compose(&beta[0].inverse())
                .unwrap();
            assert_eq!(two.parts()[0], conj);
        }
        assert!(differs);
    }

    #[test]
    fn divisibility_and_injectivity() {
        assert!(morphism_exists(2, 4));
        assert!(!morphism_exists(2, 3));
        assert!(morphism_exists(5, 5));
        let s = StandardMorphism::from_matrix(sig(&[2]), vec![vec![2]]).unwrap();
        assert!(is_injective_standard(&s));
        let s = StandardMorphism::from_matrix(sig(&[1, 2]), vec![vec![0, 1]]).unwrap();
        assert!(!is_injective_standard(&s));
        let s = StandardMorphism::from_matrix(sig(&[1]), vec![vec![1], vec![1]]).unwrap();
        assert!(is_injective_standard(&s));
    }

    #[test]
    fn signature_serializes_as_list() {
        let s = sig(&[1, 2]);
        assert_eq!(serde_json::to_string(&s).unwrap(), "[1,2]");
        assert!(serde_json::from_str::<Signature>("[0]").is_err());
    }
}

//! The polycyclic monoid, the Cuntz inverse monoid of pairs of equinumerous
//! prefix codes, its gauge submonoid, and the level isomorphisms of the
//! gauge monoid truncated at length `l` onto `I_{n^l}`.
//!
//! A [`CuntzElement`] is a list of rows `x → y` acting on infinite strings
//! by `x w ↦ y w`.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::partial_bijections::PartialBijection;
use crate::prefix::{PrefixCode, Word};
use crate::quotient::BooleanInverseMonoidView;

/// `Pair { y, x }` stands for `y x⁻¹`, the map `x w ↦ y w`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum PolyElement {
    Zero,
    Pair { y: Word, x: Word },
}

impl PolyElement {
    pub fn new(y: Word, x: Word) -> Result<Self> {
        if y.arity() != x.arity() {
            return Err(Error::AlphabetMismatch(y.arity(), x.arity()));
        }
        Ok(PolyElement::Pair { y, x })
    }

    pub fn identity(arity: usize) -> Self {
        PolyElement::Pair {
            y: Word::empty(arity),
            x: Word::empty(arity),
        }
    }

    /// `yx⁻¹ · vu⁻¹` is `yzu⁻¹` if `v = xz`, `y(uz)⁻¹` if `x = vz`, else 0.
    pub fn multiply(&self, other: &Self) -> Self {
        let (PolyElement::Pair { y, x }, PolyElement::Pair { y: v, x: u }) = (self, other) else {
            return PolyElement::Zero;
        };
        if let Some(z) = v.strip_prefix(x) {
            PolyElement::Pair { y: y.concat(&z), x: u.clone() }
        } else if let Some(z) = x.strip_prefix(v) {
            PolyElement::Pair { y: y.clone(), x: u.concat(&z) }
        } else {
            PolyElement::Zero
        }
    }

    pub fn inverse(&self) -> Self {
        match self {
            PolyElement::Zero => PolyElement::Zero,
            PolyElement::Pair { y, x } => PolyElement::Pair { y: x.clone(), x: y.clone() },
        }
    }

    pub fn is_idempotent(&self) -> bool {
        match self {
            PolyElement::Zero => true,
            PolyElement::Pair { y, x } => x == y,
        }
    }

    /// `yx⁻¹ ≤ vu⁻¹` iff `y = vp` and `x = up` for a common `p`.
    pub fn natural_leq(&self, other: &Self) -> bool {
        match (self, other) {
            (PolyElement::Zero, _) => true,
            (_, PolyElement::Zero) => false,
            (PolyElement::Pair { y, x }, PolyElement::Pair { y: v, x: u }) => {
                match (y.strip_prefix(v), x.strip_prefix(u)) {
                    (Some(p), Some(q)) => p == q,
                    _ => false,
                }
            }
        }
    }

    pub fn compatible(&self, other: &Self) -> bool {
        self.inverse().multiply(other).is_idempotent() && self.multiply(&other.inverse()).is_idempotent()
    }
}

impl fmt::Display for PolyElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PolyElement::Zero => f.write_str("0"),
            PolyElement::Pair { y, x } => write!(f, "{y}·{x}⁻¹"),
        }
    }
}

/// How an element acts on a finite word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WordAction {
    /// The word has a domain word as prefix; this is its image.
    Image(Word),
    /// The cylinder of the word misses the domain.
    Outside,
    /// The word is a proper prefix of a domain word, so it is too short.
    TooShort,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CuntzElement {
    Zero,
    /// Rows `(domain word, range word)`, sorted by domain word.
    Rows { arity: usize, rows: Vec<(Word, Word)> },
}

impl CuntzElement {
    /// Validates that domain and range words form prefix codes, then
    /// canonicalizes. An empty row list gives zero.
    pub fn new(arity: usize, rows: Vec<(Word, Word)>) -> Result<Self> {
        for (x, y) in &rows {
            if x.arity() != arity {
                return Err(Error::AlphabetMismatch(arity, x.arity()));
            }
            if y.arity() != arity {
                return Err(Error::AlphabetMismatch(arity, y.arity()));
            }
        }
        PrefixCode::new(arity, rows.iter().map(|r| r.0.clone()).collect())?;
        PrefixCode::new(arity, rows.iter().map(|r| r.1.clone()).collect())?;
        let distinct = |f: fn(&(Word, Word)) -> &Word| {
            let mut v: Vec<&Word> = rows.iter().map(f).collect();
            v.sort();
            v.windows(2).all(|p| p[0] != p[1])
        };
        if !distinct(|r| &r.0) || !distinct(|r| &r.1) {
            return Err(Error::NotPrefixCode("a word appears in two rows".into()));
        }
        Ok(Self::canonical(arity, rows))
    }

    pub fn identity(arity: usize) -> Self {
        CuntzElement::Rows {
            arity,
            rows: vec![(Word::empty(arity), Word::empty(arity))],
        }
    }

    /// The idempotent acting as the identity on the clopen set of `code`.
    pub fn idempotent(code: &PrefixCode) -> Self {
        Self::canonical(
            code.arity(),
            code.words().iter().map(|w| (w.clone(), w.clone())).collect(),
        )
    }

    pub fn from_poly(p: &PolyElement) -> Self {
        match p {
            PolyElement::Zero => CuntzElement::Zero,
            PolyElement::Pair { y, x } => Self::canonical(x.arity(), vec![(x.clone(), y.clone())]),
        }
    }

    /// Parses `"aa->ab, ab->aa"`; `"0"` is zero.
    pub fn parse(arity: usize, text: &str) -> Result<Self> {
        let text = text.trim();
        if text == "0" || text.is_empty() {
            return Ok(CuntzElement::Zero);
        }
        let rows = text
            .split(',')
            .map(|item| {
                let (x, y) = item
                    .split_once("->")
                    .ok_or_else(|| Error::Parse(format!("expected x->y, got {item:?}")))?;
                Ok((Word::parse(arity, x)?, Word::parse(arity, y)?))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(arity, rows)
    }

    /// Collapses sibling blocks `(u a, v a)` over all letters `a` into
    /// `(u, v)` until none remains, then sorts by domain word.
    fn canonical(arity: usize, rows: Vec<(Word, Word)>) -> Self {
        if rows.is_empty() {
            return CuntzElement::Zero;
        }
        let mut map: BTreeMap<Word, Word> = rows.into_iter().collect();
        'outer: loop {
            for (x, y) in &map {
                let (Some(&a), Some(&b)) = (x.letters().last(), y.letters().last()) else {
                    continue;
                };
                if a != b {
                    continue;
                }
                let u = x.truncate(x.len() - 1);
                let v = y.truncate(y.len() - 1);
                if (0..arity as u8).all(|l| map.get(&u.push(l)) == Some(&v.push(l))) {
                    for l in 0..arity as u8 {
                        map.remove(&u.push(l));
                    }
                    map.insert(u, v);
                    continue 'outer;
                }
            }
            break;
        }
        CuntzElement::Rows {
            arity,
            rows: map.into_iter().collect(),
        }
    }

    pub fn rows(&self) -> &[(Word, Word)] {
        match self {
            CuntzElement::Zero => &[],
            CuntzElement::Rows { rows, .. } => rows,
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, CuntzElement::Zero)
    }

    fn arity_with(&self, other: &Self) -> Result<Option<usize>> {
        match (self, other) {
            (CuntzElement::Rows { arity: a, .. }, CuntzElement::Rows { arity: b, .. }) if a != b => {
                Err(Error::AlphabetMismatch(*a, *b))
            }
            (CuntzElement::Rows { arity, .. }, _) | (_, CuntzElement::Rows { arity, .. }) => Ok(Some(*arity)),
            _ => Ok(None),
        }
    }

    pub fn domain_code(&self) -> Option<PrefixCode> {
        match self {
            CuntzElement::Zero => None,
            CuntzElement::Rows { arity, rows } => {
                Some(PrefixCode::new(*arity, rows.iter().map(|r| r.0.clone()).collect()).expect("valid rows"))
            }
        }
    }

    pub fn range_code(&self) -> Option<PrefixCode> {
        self.inverse().domain_code()
    }

    /// `self · other`: apply `other` first.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        let Some(arity) = self.arity_with(other)? else {
            return Ok(CuntzElement::Zero);
        };
        let mut rows = Vec::new();
        for (x1, y1) in other.rows() {
            for (x2, y2) in self.rows() {
                if let Some(z) = x2.strip_prefix(y1) {
                    rows.push((x1.concat(&z), y2.clone()));
                } else if let Some(z) = y1.strip_prefix(x2) {
                    rows.push((x1.clone(), y2.concat(&z)));
                }
            }
        }
        Ok(Self::canonical(arity, rows))
    }

    pub fn inverse(&self) -> Self {
        match self {
            CuntzElement::Zero => CuntzElement::Zero,
            CuntzElement::Rows { arity, rows } => {
                Self::canonical(*arity, rows.iter().map(|(x, y)| (y.clone(), x.clone())).collect())
            }
        }
    }

    pub fn domain_idem(&self) -> Self {
        self.inverse().multiply(self).expect("same alphabet")
    }

    pub fn range_idem(&self) -> Self {
        self.multiply(&self.inverse()).expect("same alphabet")
    }

    pub fn is_idempotent(&self) -> bool {
        self.rows().iter().all(|(x, y)| x == y)
    }

    /// Every row of `self` is a row of `other` with a common suffix
    /// appended to both sides.
    pub fn natural_leq(&self, other: &Self) -> Result<bool> {
        self.arity_with(other)?;
        Ok(self.rows().iter().all(|(x, y)| {
            other.rows().iter().any(|(u, v)| match (x.strip_prefix(u), y.strip_prefix(v)) {
                (Some(p), Some(q)) => p == q,
                _ => false,
            })
        }))
    }

    /// The largest element below both: rows on which the two maps agree.
    pub fn meet(&self, other: &Self) -> Result<Self> {
        let Some(arity) = self.arity_with(other)? else {
            return Ok(CuntzElement::Zero);
        };
        let mut rows = Vec::new();
        for (x1, y1) in self.rows() {
            for (x2, y2) in other.rows() {
                if let Some(z) = x2.strip_prefix(x1) {
                    if y1.concat(&z) == *y2 {
                        rows.push((x2.clone(), y2.clone()));
                    }
                } else if let Some(z) = x1.strip_prefix(x2) {
                    if y2.concat(&z) == *y1 {
                        rows.push((x1.clone(), y1.clone()));
                    }
                }
            }
        }
        rows.sort();
        rows.dedup();
        Ok(Self::canonical(arity, rows))
    }

    pub fn compatible(&self, other: &Self) -> Result<bool> {
        Ok(self.inverse().multiply(other)?.is_idempotent() && self.multiply(&other.inverse())?.is_idempotent())
    }

    pub fn orthogonal(&self, other: &Self) -> Result<bool> {
        Ok(self.inverse().multiply(other)?.is_zero() && self.multiply(&other.inverse())?.is_zero())
    }

    /// The join of compatible elements; `None` when incompatible.
    pub fn join(&self, other: &Self) -> Result<Option<Self>> {
        let Some(arity) = self.arity_with(other)? else {
            return Ok(Some(CuntzElement::Zero));
        };
        if !self.compatible(other)? {
            return Ok(None);
        }
        let all: Vec<(Word, Word)> = self.rows().iter().chain(other.rows()).cloned().collect();
        let mut rows: Vec<(Word, Word)> = Vec::new();
        for (i, (x, y)) in all.iter().enumerate() {
            let dominated = all.iter().enumerate().any(|(j, (u, v))| {
                let below = match (x.strip_prefix(u), y.strip_prefix(v)) {
                    (Some(p), Some(q)) => p == q,
                    _ => false,
                };
                below && ((u, v) != (x, y) || j < i)
            });
            if !dominated {
                rows.push((x.clone(), y.clone()));
            }
        }
        Ok(Some(Self::canonical(arity, rows)))
    }

    /// Every row preserves length.
    pub fn is_gauge(&self) -> bool {
        self.rows().iter().all(|(x, y)| x.len() == y.len())
    }

    /// Both codes are maximal.
    pub fn is_unit(&self) -> bool {
        match (self.domain_code(), self.range_code()) {
            (Some(d), Some(r)) => d.is_maximal() && r.is_maximal(),
            _ => false,
        }
    }

    /// Longest word appearing in any row.
    pub fn max_len(&self) -> usize {
        self.rows()
            .iter()
            .map(|(x, y)| x.len().max(y.len()))
            .max()
            .unwrap_or(0)
    }

    pub fn act(&self, w: &Word) -> WordAction {
        for (x, y) in self.rows() {
            if let Some(rest) = w.strip_prefix(x) {
                return WordAction::Image(y.concat(&rest));
            }
            if x.strip_prefix(w).is_some() {
                return WordAction::TooShort;
            }
        }
        WordAction::Outside
    }

    /// Bernoulli measure of the domain or range code of a gauge element.
    pub fn dyadic_mean(&self, side: Side) -> Result<BigRational> {
        if !self.is_gauge() {
            return Err(Error::NotGauge);
        }
        let code = match side {
            Side::Domain => self.domain_code(),
            Side::Range => self.range_code(),
        };
        Ok(code.map_or_else(|| BigRational::from_integer(0.into()), |c| c.bernoulli()))
    }

    /// The partial bijection of `A^level` given by a gauge element, letters
    /// indexed by [`Word::colex_index`].
    pub fn to_symmetric(&self, arity: usize, level: usize) -> Result<PartialBijection> {
        if !self.is_gauge() {
            return Err(Error::NotGauge);
        }
        if self.max_len() > level {
            return Err(Error::NotRepresentable(level));
        }
        if let CuntzElement::Rows { arity: a, .. } = self {
            if *a != arity {
                return Err(Error::AlphabetMismatch(arity, *a));
            }
        }
        let degree = arity.pow(level as u32);
        let mut images = vec![None; degree];
        for (x, y) in self.rows() {
            for s in Word::all_of_length(arity, level - x.len()) {
                images[x.concat(&s).colex_index()] = Some(y.concat(&s).colex_index());
            }
        }
        PartialBijection::from_images(images)
    }

    pub fn from_symmetric(arity: usize, level: usize, p: &PartialBijection) -> Result<Self> {
        let degree = arity.pow(level as u32);
        if p.degree() != degree {
            return Err(Error::DegreeMismatch(degree, p.degree()));
        }
        let rows = p
            .images()
            .iter()
            .enumerate()
            .filter_map(|(j, img)| {
                img.map(|i| {
                    (
                        Word::from_colex_index(arity, level, j),
                        Word::from_colex_index(arity, level, i),
                    )
                })
            })
            .collect();
        Ok(Self::canonical(arity, rows))
    }
}

impl fmt::Display for CuntzElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CuntzElement::Zero => f.write_str("0"),
            CuntzElement::Rows { rows, .. } => {
                let parts: Vec<String> = rows.iter().map(|(x, y)| format!("{x}->{y}")).collect();
                f.write_str(&parts.join(", "))
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Domain,
    Range,
}

/// For `μ(e) ≤ μ(f)`, a code `e′` below `f` with `μ(e′) = μ(e)` and a gauge
/// element with domain `e` and range `e′`. Both codes are uniformized to a
/// common length and the lexicographically first words under `f` are used.
pub fn good_witness(e: &PrefixCode, f: &PrefixCode) -> Result<Option<(PrefixCode, CuntzElement)>> {
    if e.arity() != f.arity() {
        return Err(Error::AlphabetMismatch(e.arity(), f.arity()));
    }
    if e.bernoulli() > f.bernoulli() {
        return Ok(None);
    }
    let l = e.length().max(f.length());
    let eu = e.uniformize(l)?;
    let fu = f.uniformize(l)?;
    let chosen: Vec<Word> = fu.words()[..eu.len()].to_vec();
    let rows: Vec<(Word, Word)> = eu.words().iter().cloned().zip(chosen.iter().cloned()).collect();
    let g = CuntzElement::new(e.arity(), rows)?;
    let e_prime = PrefixCode::new(e.arity(), chosen)?.minimize();
    Ok(Some((e_prime, g)))
}

/// The gauge monoid truncated at word length `level`, viewed through its
/// idempotents: `{ε}`-relative clopen sets that are unions of length-`level`
/// cylinders. Classes are keyed by Bernoulli measure and `𝒟` is decided by
/// constructing a gauge witness.
#[derive(Debug, Clone)]
pub struct DyadicView {
    arity: usize,
    level: usize,
}

impl DyadicView {
    pub fn new(arity: usize, level: usize) -> Result<Self> {
        Word::new(arity, Vec::new())?;
        Ok(DyadicView { arity, level })
    }

    pub fn level(&self) -> usize {
        self.level
    }

    fn code(&self, e: &CuntzElement) -> PrefixCode {
        e.domain_code().unwrap_or_else(|| PrefixCode::empty(self.arity))
    }

    /// A gauge element `g` with `g⁻¹g = e` and `gg⁻¹ = f`, when one exists.
    pub fn d_witness(&self, e: &CuntzElement, f: &CuntzElement) -> Option<CuntzElement> {
        let (ce, cf) = (self.code(e), self.code(f));
        let l = ce.length().max(cf.length());
        let (eu, fu) = (ce.uniformize(l).ok()?, cf.uniformize(l).ok()?);
        if eu.len() != fu.len() {
            return None;
        }
        let rows = eu.words().iter().cloned().zip(fu.words().iter().cloned()).collect();
        let g = CuntzElement::new(self.arity, rows).ok()?;
        (g.domain_idem() == *e && g.range_idem() == *f && g.is_gauge()).then_some(g)
    }
}

impl BooleanInverseMonoidView for DyadicView {
    type Idem = CuntzElement;
    type Key = BigRational;

    fn idempotents(&self) -> Option<Vec<CuntzElement>> {
        let degree = self.arity.pow(self.level as u32);
        (degree <= 8).then(|| {
            crate::partial_bijections::idempotents(degree)
                .iter()
                .map(|p| CuntzElement::from_symmetric(self.arity, self.level, p).expect("degree matches"))
                .collect()
        })
    }

    fn zero(&self) -> CuntzElement {
        CuntzElement::Zero
    }

    fn one(&self) -> CuntzElement {
        CuntzElement::identity(self.arity)
    }

    fn leq(&self, e: &CuntzElement, f: &CuntzElement) -> bool {
        e.natural_leq(f).expect("same alphabet")
    }

    fn meet(&self, e: &CuntzElement, f: &CuntzElement) -> CuntzElement {
        e.meet(f).expect("same alphabet")
    }

    fn join(&self, e: &CuntzElement, f: &CuntzElement) -> CuntzElement {
        e.join(f).expect("same alphabet").expect("idempotents are compatible")
    }

    fn complement(&self, e: &CuntzElement) -> CuntzElement {
        let rest = PrefixCode::full(self.arity)
            .difference(&self.code(e))
            .expect("same alphabet");
        CuntzElement::idempotent(&rest)
    }

    fn d_related(&self, e: &CuntzElement, f: &CuntzElement) -> bool {
        self.d_witness(e, f).is_some() || (e.is_zero() && f.is_zero())
    }

    fn class_key(&self, e: &CuntzElement) -> BigRational {
        e.dyadic_mean(Side::Domain).expect("idempotents are gauge")
    }

    fn key_label(&self, key: &BigRational) -> String {
        key.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word::parse(2, s).unwrap()
    }

    fn c(s: &str) -> CuntzElement {
        CuntzElement::parse(2, s).unwrap()
    }

    #[test]
    fn polycyclic_products() {
        let a_inv = PolyElement::new(w(""), w("a")).unwrap();
        let a = PolyElement::new(w("a"), w("")).unwrap();
        let b = PolyElement::new(w("b"), w("")).unwrap();
        assert_eq!(a_inv.multiply(&a), PolyElement::identity(2));
        assert_eq!(a_inv.multiply(&b), PolyElement::Zero);
        let p = PolyElement::new(w("a"), w("b")).unwrap();
        let q = PolyElement::new(w("ba"), w("a")).unwrap();
        assert_eq!(p.multiply(&q), PolyElement::new(w("aa"), w("a")).unwrap());
    }

    #[test]
    fn cuntz_products_and_inverse() {
        let swap = c("a->b, b->a");
        assert_eq!(swap.multiply(&swap).unwrap(), CuntzElement::identity(2));
        let f = c("aa->b, ab->ab");
        assert_eq!(f.multiply(&CuntzElement::identity(2)).unwrap(), f);
        assert_eq!(c("a->a").multiply(&c("b->b")).unwrap(), CuntzElement::Zero);
        assert_eq!(f.inverse().to_string(), "ab->ab, b->aa");
        assert_eq!(f.multiply(&f.inverse()).unwrap().multiply(&f).unwrap(), f);
    }

    #[test]
    fn order_meet_join() {
        assert!(c("aa->ba").natural_leq(&c("a->b")).unwrap());
        assert!(!c("a->b").natural_leq(&c("aa->ba")).unwrap());
        assert_eq!(c("a->b").join(&c("b->a")).unwrap(), Some(c("a->b, b->a")));
        assert_eq!(c("a->a").meet(&c("a->b")).unwrap(), CuntzElement::Zero);
        assert_eq!(c("a->b").join(&c("a->a")).unwrap(), None);
        assert_eq!(c("a->b").join(&c("aa->ba")).unwrap(), Some(c("a->b")));
        let f = c("a->b, b->a");
        let g = c("aa->ba, b->bb");
        assert_eq!(f.meet(&g).unwrap(), c("aa->ba"));
        for (x, y) in [(c("aa->ba"), c("a->b")), (c("a->a"), c("ε->ε")), (f.clone(), g.clone())] {
            let leq = x.natural_leq(&y).unwrap();
            assert_eq!(leq, y.multiply(&x.domain_idem()).unwrap() == x);
        }
    }

    #[test]
    fn gauge_and_units() {
        let swap = c("a->b, b->a");
        assert!(swap.is_gauge() && swap.is_unit());
        assert!(!c("a->ba").is_gauge());
        let id = c("aa->aa, ab->ab, b->b");
        assert_eq!(id, CuntzElement::identity(2));
        assert!(id.is_unit());
    }

    #[test]
    fn means() {
        let half = BigRational::new(1.into(), 2.into());
        assert_eq!(c("a->b").dyadic_mean(Side::Domain).unwrap(), half);
        assert_eq!(CuntzElement::identity(2).dyadic_mean(Side::Domain).unwrap(), BigRational::from_integer(1.into()));
        let f = c("aa->ab, ab->aa");
        assert_eq!(f, c("a->a").multiply(&c("aa->ab, ab->aa")).unwrap());
        assert_eq!(f.dyadic_mean(Side::Domain).unwrap(), half);
        assert_eq!(f.dyadic_mean(Side::Range).unwrap(), half);
        assert_eq!(c("a->ba").dyadic_mean(Side::Domain), Err(Error::NotGauge));
    }

    #[test]
    fn witnesses() {
        let a = PrefixCode::parse(2, "a").unwrap();
        let (e1, g1) = good_witness(&a, &PrefixCode::full(2)).unwrap().unwrap();
        assert_eq!(e1, a);
        assert_eq!(g1, CuntzElement::idempotent(&a));
        let b = PrefixCode::parse(2, "b").unwrap();
        let (e2, g2) = good_witness(&a, &b).unwrap().unwrap();
        assert!(e2.clopen_equal(&PrefixCode::parse(2, "ba+bb").unwrap()).unwrap());
        assert_eq!(g2, c("a->b"));
        assert!(good_witness(&PrefixCode::full(2), &a).unwrap().is_none());
    }

    #[test]
    fn symmetric_levels() {
        let id1 = CuntzElement::identity(2).to_symmetric(2, 1).unwrap();
        assert_eq!(id1, PartialBijection::identity(2));
        let swap = c("a->b, b->a").to_symmetric(2, 1).unwrap();
        assert_eq!(swap, PartialBijection::from_pairs(2, &[(1, 2), (2, 1)]).unwrap());
        assert_eq!(c("aa->ab").to_symmetric(2, 1), Err(Error::NotRepresentable(1)));
        let p = PartialBijection::from_pairs(4, &[(1, 3), (2, 2)]).unwrap();
        let f = CuntzElement::from_symmetric(2, 2, &p).unwrap();
        assert_eq!(f.to_symmetric(2, 2).unwrap(), p);
    }

    #[test]
    fn word_action() {
        let f = c("a->ba, b->a");
        assert_eq!(f.act(&w("ab")), WordAction::Image(w("bab")));
        assert_eq!(f.act(&w("")), WordAction::TooShort);
        assert_eq!(c("a->a").act(&w("b")), WordAction::Outside);
    }
}

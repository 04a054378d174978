//! The finite symmetric inverse monoid `I_n`.
//!
//! A [`PartialBijection`] of degree `n` is an injective partial map on the
//! letters `1..=n`. Letters are 1-based at every public boundary (pairs,
//! text form, rook matrices are indexed `M[i-1][j-1]`) and 0-based inside.
//!
//! Composition follows the rook-matrix convention: `f.compose(&g)` applies
//! `g` first and then `f`, so that `M(f ∘ g) = M(f) M(g)`.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartialBijection {
    images: Vec<Option<usize>>,
}

impl PartialBijection {
    /// Builds an element from 1-based `(letter, image)` pairs.
    pub fn from_pairs(degree: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut images = vec![None; degree];
        for &(j, i) in pairs {
            if j == 0 || j > degree || i == 0 || i > degree {
                return Err(Error::InvalidPartialBijection(format!(
                    "pair {j}->{i} outside 1..={degree}"
                )));
            }
            if images[j - 1].is_some() {
                return Err(Error::InvalidPartialBijection(format!(
                    "letter {j} mapped twice"
                )));
            }
            images[j - 1] = Some(i - 1);
        }
        Self::from_images(images)
    }

    /// Builds an element from a dense 0-based image table.
    pub fn from_images(images: Vec<Option<usize>>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for (j, img) in images.iter().enumerate() {
            if let Some(i) = *img {
                if i >= n {
                    return Err(Error::InvalidPartialBijection(format!(
                        "image {} of letter {} outside 1..={n}",
                        i + 1,
                        j + 1
                    )));
                }
                if seen[i] {
                    return Err(Error::InvalidPartialBijection(format!(
                        "image {} hit twice",
                        i + 1
                    )));
                }
                seen[i] = true;
            }
        }
        Ok(PartialBijection { images })
    }

    pub(crate) fn from_images_unchecked(images: Vec<Option<usize>>) -> Self {
        debug_assert!(Self::from_images(images.clone()).is_ok());
        PartialBijection { images }
    }

    pub fn identity(degree: usize) -> Self {
        PartialBijection {
            images: (0..degree).map(Some).collect(),
        }
    }

    pub fn zero(degree: usize) -> Self {
        PartialBijection {
            images: vec![None; degree],
        }
    }

    /// The partial identity `1_A` on a set of 1-based letters.
    pub fn partial_identity(degree: usize, letters: &[usize]) -> Result<Self> {
        let pairs: Vec<_> = letters.iter().map(|&l| (l, l)).collect();
        Self::from_pairs(degree, &pairs)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// 0-based image table.
    pub fn images(&self) -> &[Option<usize>] {
        &self.images
    }

    /// 0-based image of a 0-based letter.
    pub fn image(&self, letter: usize) -> Option<usize> {
        self.images.get(letter).copied().flatten()
    }

    /// 1-based `(letter, image)` pairs, ordered by letter.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.images
            .iter()
            .enumerate()
            .filter_map(|(j, img)| img.map(|i| (j + 1, i + 1)))
            .collect()
    }

    fn check_degree(&self, other: &Self) -> Result<()> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch(self.degree(), other.degree()));
        }
        Ok(())
    }

    /// `self ∘ other`: apply `other`, then `self`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        self.check_degree(other)?;
        let images = other
            .images
            .iter()
            .map(|img| img.and_then(|k| self.images[k]))
            .collect();
        Ok(PartialBijection { images })
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![None; self.degree()];
        for (j, img) in self.images.iter().enumerate() {
            if let Some(i) = *img {
                images[i] = Some(j);
            }
        }
        PartialBijection { images }
    }

    /// `d(f) = f⁻¹f`, the partial identity on the domain.
    pub fn domain_idem(&self) -> Self {
        let images = self
            .images
            .iter()
            .enumerate()
            .map(|(j, img)| img.map(|_| j))
            .collect();
        PartialBijection { images }
    }

    /// `r(f) = ff⁻¹`, the partial identity on the image.
    pub fn range_idem(&self) -> Self {
        self.inverse().domain_idem()
    }

    pub fn is_idempotent(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(j, img)| img.is_none_or(|i| i == j))
    }

    pub fn is_zero(&self) -> bool {
        self.images.iter().all(Option::is_none)
    }

    /// Total permutation, i.e. a unit of `I_n`.
    pub fn is_permutation(&self) -> bool {
        self.images.iter().all(Option::is_some)
    }

    /// Number of defined positions.
    pub fn rank(&self) -> usize {
        self.images.iter().filter(|i| i.is_some()).count()
    }

    /// The natural partial order; in `I_n` this is graph containment.
    pub fn natural_leq(&self, other: &Self) -> Result<bool> {
        self.check_degree(other)?;
        Ok(self
            .images
            .iter()
            .zip(&other.images)
            .all(|(a, b)| a.is_none() || a == b))
    }

    pub fn compatible(&self, other: &Self) -> Result<bool> {
        self.check_degree(other)?;
        let left = self.inverse().compose(other)?;
        let right = self.compose(&other.inverse())?;
        Ok(left.is_idempotent() && right.is_idempotent())
    }

    pub fn orthogonal(&self, other: &Self) -> Result<bool> {
        self.check_degree(other)?;
        let left = self.inverse().compose(other)?;
        let right = self.compose(&other.inverse())?;
        Ok(left.is_zero() && right.is_zero())
    }

    /// Intersection of graphs.
    pub fn meet(&self, other: &Self) -> Result<Self> {
        self.check_degree(other)?;
        let images = self
            .images
            .iter()
            .zip(&other.images)
            .map(|(a, b)| if a == b { *a } else { None })
            .collect();
        Ok(PartialBijection { images })
    }

    /// Union of graphs, defined only for compatible pairs.
    pub fn join(&self, other: &Self) -> Result<Option<Self>> {
        if !self.compatible(other)? {
            return Ok(None);
        }
        let images = self
            .images
            .iter()
            .zip(&other.images)
            .map(|(a, b)| a.or(*b))
            .collect();
        Ok(Some(PartialBijection { images }))
    }

    /// Equal ranks of domain idempotents.
    pub fn d_related(&self, other: &Self) -> Result<bool> {
        self.check_degree(other)?;
        Ok(self.rank() == other.rank())
    }

    /// The partial identity on the letters outside the domain of `self`.
    pub fn complement_idem(&self) -> Result<Self> {
        if !self.is_idempotent() {
            return Err(Error::NotIdempotent);
        }
        let images = self
            .images
            .iter()
            .enumerate()
            .map(|(j, img)| if img.is_some() { None } else { Some(j) })
            .collect();
        Ok(PartialBijection { images })
    }

    pub fn to_rook(&self) -> RookMatrix {
        let n = self.degree();
        let mut entries = vec![vec![0u8; n]; n];
        for (j, img) in self.images.iter().enumerate() {
            if let Some(i) = *img {
                entries[i][j] = 1;
            }
        }
        RookMatrix { entries }
    }

    pub fn from_rook(matrix: &RookMatrix) -> Self {
        let n = matrix.degree();
        let mut images = vec![None; n];
        for (i, row) in matrix.entries.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                if x == 1 {
                    images[j] = Some(i);
                }
            }
        }
        PartialBijection { images }
    }

    /// Parses the `"j->i,j->i"` text form; `""` and `"0"` denote the zero.
    pub fn parse(degree: usize, text: &str) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() || text == "0" {
            return Ok(Self::zero(degree));
        }
        let mut pairs = Vec::new();
        for item in text.split(',') {
            let (j, i) = item
                .split_once("->")
                .ok_or_else(|| Error::Parse(format!("expected j->i, got {item:?}")))?;
            let j = j
                .trim()
                .parse::<usize>()
                .map_err(|e| Error::Parse(format!("{item:?}: {e}")))?;
            let i = i
                .trim()
                .parse::<usize>()
                .map_err(|e| Error::Parse(format!("{item:?}: {e}")))?;
            pairs.push((j, i));
        }
        Self::from_pairs(degree, &pairs)
    }
}

impl fmt::Display for PartialBijection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pairs = self.pairs();
        if pairs.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = pairs.iter().map(|(j, i)| format!("{j}->{i}")).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// A square 0/1 matrix with at most one 1 in every row and column.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RookMatrix {
    entries: Vec<Vec<u8>>,
}

impl RookMatrix {
    pub fn new(entries: Vec<Vec<u8>>) -> Result<Self> {
        let n = entries.len();
        for (i, row) in entries.iter().enumerate() {
            if row.len() != n {
                return Err(Error::NotRookMatrix(format!("row {} has length {}", i + 1, row.len())));
            }
            if row.iter().any(|&x| x > 1) {
                return Err(Error::NotRookMatrix(format!("row {} has a non 0/1 entry", i + 1)));
            }
            if row.iter().filter(|&&x| x == 1).count() > 1 {
                return Err(Error::NotRookMatrix(format!("row {} has two ones", i + 1)));
            }
        }
        for j in 0..n {
            if entries.iter().filter(|row| row[j] == 1).count() > 1 {
                return Err(Error::NotRookMatrix(format!("column {} has two ones", j + 1)));
            }
        }
        Ok(RookMatrix { entries })
    }

    pub fn identity(n: usize) -> Self {
        let entries = (0..n)
            .map(|i| (0..n).map(|j| u8::from(i == j)).collect())
            .collect();
        RookMatrix { entries }
    }

    pub fn degree(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Vec<u8>] {
        &self.entries
    }

    /// Ordinary matrix product. The product of rook matrices is again one.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        let n = self.degree();
        if other.degree() != n {
            return Err(Error::DegreeMismatch(n, other.degree()));
        }
        let mut entries = vec![vec![0u8; n]; n];
        for i in 0..n {
            for j in 0..n {
                let s: u32 = (0..n)
                    .map(|k| u32::from(self.entries[i][k]) * u32::from(other.entries[k][j]))
                    .sum();
                entries[i][j] = s as u8;
            }
        }
        Ok(RookMatrix { entries })
    }

    /// Entrywise product.
    pub fn freshman_product(&self, other: &Self) -> Result<Self> {
        let n = self.degree();
        if other.degree() != n {
            return Err(Error::DegreeMismatch(n, other.degree()));
        }
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(r, s)| r.iter().zip(s).map(|(a, b)| a * b).collect())
            .collect();
        Ok(RookMatrix { entries })
    }
}

/// `|I_n| = Σ_k C(n,k)² k!`.
pub fn order(n: usize) -> u128 {
    let mut total = 0u128;
    for k in 0..=n {
        let c = binomial(n, k);
        let f: u128 = (1..=k as u128).product();
        total += c * c * f;
    }
    total
}

pub(crate) fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let mut c = 1u128;
    for i in 0..k {
        c = c * (n - i) as u128 / (i + 1) as u128;
    }
    c
}

/// All elements of `I_n`: by rank ascending, then lexicographically on
/// (domain set, image tuple).
pub fn enumerate(n: usize) -> impl Iterator<Item = PartialBijection> {
    (0..=n).flat_map(move |k| {
        combinations(n, k).into_iter().flat_map(move |domain| {
            arrangements(n, k).into_iter().map(move |imgs| {
                let mut images = vec![None; n];
                for (&j, &i) in domain.iter().zip(&imgs) {
                    images[j] = Some(i);
                }
                PartialBijection { images }
            })
        })
    })
}

/// All idempotents of `I_n`, by rank then domain set.
pub fn idempotents(n: usize) -> Vec<PartialBijection> {
    (0..=n)
        .flat_map(|k| combinations(n, k))
        .map(|domain| {
            let mut images = vec![None; n];
            for j in domain {
                images[j] = Some(j);
            }
            PartialBijection { images }
        })
        .collect()
}

/// `k`-subsets of `0..n` in lexicographic order.
pub(crate) fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in start..n {
            if n - x < k - cur.len() {
                break;
            }
            cur.push(x);
            go(x + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Injective `k`-tuples over `0..n` in lexicographic order.
fn arrangements(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, k: usize, used: &mut [bool], cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in 0..n {
            if !used[x] {
                used[x] = true;
                cur.push(x);
                go(n, k, used, cur, out);
                cur.pop();
                used[x] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(n, k, &mut vec![false; n], &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pb(n: usize, pairs: &[(usize, usize)]) -> PartialBijection {
        PartialBijection::from_pairs(n, pairs).unwrap()
    }

    #[test]
    fn compose_examples() {
        assert_eq!(pb(3, &[(2, 1)]).compose(&pb(3, &[(3, 2)])).unwrap(), pb(3, &[(3, 1)]));
        let g = pb(2, &[(1, 2)]);
        assert_eq!(PartialBijection::identity(2).compose(&g).unwrap(), g);
        assert_eq!(pb(2, &[(2, 1)]).compose(&pb(2, &[(1, 2)])).unwrap(), pb(2, &[(1, 1)]));
        assert!(matches!(
            pb(2, &[]).compose(&pb(3, &[])),
            Err(Error::DegreeMismatch(2, 3))
        ));
    }

    #[test]
    fn inverse_and_idempotents() {
        let f = pb(2, &[(2, 1)]);
        assert_eq!(f.inverse(), pb(2, &[(1, 2)]));
        assert_eq!(f.domain_idem(), pb(2, &[(2, 2)]));
        assert_eq!(f.range_idem(), pb(2, &[(1, 1)]));
        let id = PartialBijection::identity(3);
        assert_eq!(id.inverse(), id);
        assert_eq!(id.domain_idem(), id);
        let swap = pb(2, &[(1, 2), (2, 1)]);
        assert_eq!(swap.inverse(), swap);
        assert_eq!(swap.domain_idem(), PartialBijection::identity(2));
    }

    #[test]
    fn order_relations() {
        let a = pb(2, &[(2, 1)]);
        let b = pb(2, &[(1, 2)]);
        assert!(a.orthogonal(&b).unwrap());
        assert!(a.compatible(&b).unwrap());
        let c = pb(2, &[(1, 1)]);
        assert!(!c.compatible(&a).unwrap());
        assert!(a.natural_leq(&a).unwrap());
    }

    #[test]
    fn meet_and_join() {
        assert_eq!(
            pb(2, &[(2, 1)]).join(&pb(2, &[(1, 2)])).unwrap(),
            Some(pb(2, &[(1, 2), (2, 1)]))
        );
        assert_eq!(pb(2, &[(1, 1)]).join(&pb(2, &[(2, 1)])).unwrap(), None);
        assert_eq!(
            PartialBijection::identity(2).meet(&pb(2, &[(1, 1)])).unwrap(),
            pb(2, &[(1, 1)])
        );
    }

    #[test]
    fn rank_and_complement() {
        assert_eq!(pb(3, &[(1, 1), (3, 3)]).rank(), 2);
        assert!(pb(2, &[(1, 1)]).d_related(&pb(2, &[(2, 2)])).unwrap());
        assert_eq!(
            pb(3, &[(1, 1)]).complement_idem().unwrap(),
            pb(3, &[(2, 2), (3, 3)])
        );
        assert_eq!(pb(2, &[(1, 2)]).complement_idem(), Err(Error::NotIdempotent));
    }

    #[test]
    fn rook_matrices() {
        let m = pb(2, &[(1, 2)]).to_rook();
        assert_eq!(m.entries(), &[vec![0, 0], vec![1, 0]]);
        assert_eq!(PartialBijection::identity(2).to_rook(), RookMatrix::identity(2));
        assert!(RookMatrix::new(vec![vec![1, 1], vec![0, 0]]).is_err());
        assert!(RookMatrix::new(vec![vec![1, 0], vec![1, 0]]).is_err());
    }

    #[test]
    fn enumeration_counts_and_order() {
        assert_eq!(enumerate(3).count(), 34);
        assert_eq!(order(3), 34);
        assert_eq!(order(4), 209);
        for n in 0..=4 {
            let all: Vec<_> = enumerate(n).collect();
            assert_eq!(all.len() as u128, order(n));
            let set: std::collections::HashSet<_> = all.iter().cloned().collect();
            assert_eq!(set.len(), all.len());
        }
        let first: Vec<String> = enumerate(2).take(4).map(|f| f.to_string()).collect();
        assert_eq!(first, ["0", "1->1", "1->2", "2->1"]);
    }

    #[test]
    fn text_form() {
        let f = PartialBijection::parse(3, "1->2, 3->3").unwrap();
        assert_eq!(f, pb(3, &[(1, 2), (3, 3)]));
        assert_eq!(f.to_string(), "1->2,3->3");
        assert_eq!(PartialBijection::parse(3, "0").unwrap(), PartialBijection::zero(3));
        assert!(PartialBijection::parse(3, "1->2,2->2").is_err());
        assert!(PartialBijection::parse(3, "1-2").is_err());
    }
}

//! Simplicial groups `Z^r` with an order unit, positive homomorphisms read
//! off multiplicity matrices, interval MV-algebras `[0, u]`, and the
//! rank-vector mean on semisimple monoids.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::bratteli::BratteliDiagram;
use crate::effect::FiniteMvAlgebra;
use crate::error::{Error, Result};
use crate::semisimple::{SemisimpleElement, StandardMorphism};

/// `Z^r` ordered coordinatewise, with a strictly positive order unit.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SimplicialGroup {
    unit: Vec<usize>,
}

impl SimplicialGroup {
    pub fn new(unit: Vec<usize>) -> Result<Self> {
        if unit.is_empty() || unit.contains(&0) {
            return Err(Error::OutOfRange(format!(
                "order unit {unit:?} must be non-empty and strictly positive"
            )));
        }
        Ok(SimplicialGroup { unit })
    }

    pub fn rank(&self) -> usize {
        self.unit.len()
    }

    pub fn unit(&self) -> &[usize] {
        &self.unit
    }

    pub fn is_positive(g: &[i64]) -> bool {
        g.iter().all(|&x| x >= 0)
    }

    /// `∏ (u_i + 1)`.
    pub fn interval_size(&self) -> u128 {
        self.unit.iter().map(|&u| u as u128 + 1).product()
    }

    pub fn in_interval(&self, p: &[usize]) -> bool {
        p.len() == self.rank() && p.iter().zip(&self.unit).all(|(x, u)| x <= u)
    }

    /// Mixed-radix position of `p` in the interval, first coordinate most
    /// significant.
    pub fn interval_index(&self, p: &[usize]) -> Result<usize> {
        if !self.in_interval(p) {
            return Err(Error::OutOfRange(format!("{p:?} is not in [0, {:?}]", self.unit)));
        }
        Ok(p.iter().zip(&self.unit).fold(0, |acc, (&x, &u)| acc * (u + 1) + x))
    }

    pub fn interval_elements(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new()];
        for &u in &self.unit {
            out = out
                .into_iter()
                .flat_map(|v| {
                    (0..=u).map(move |x| {
                        let mut w = v.clone();
                        w.push(x);
                        w
                    })
                })
                .collect();
        }
        out
    }
}

/// `[0, u]` with `p ⊕ q = p + q` when `p + q ≤ u` and `p′ = u − p`.
pub fn interval_algebra(group: &SimplicialGroup) -> FiniteMvAlgebra {
    FiniteMvAlgebra::chain_product(group.unit())
}

/// A homomorphism `Z^k → Z^l` given by a non-negative integer matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PositiveHom {
    matrix: Vec<Vec<usize>>,
    source: SimplicialGroup,
    target: SimplicialGroup,
}

impl PositiveHom {
    pub fn new(matrix: Vec<Vec<usize>>, source: SimplicialGroup, target: SimplicialGroup) -> Result<Self> {
        if matrix.len() != target.rank() || matrix.iter().any(|r| r.len() != source.rank()) {
            return Err(Error::InvalidMorphism(format!(
                "matrix shape does not map Z^{} to Z^{}",
                source.rank(),
                target.rank()
            )));
        }
        Ok(PositiveHom {
            matrix,
            source,
            target,
        })
    }

    /// The connecting map from `level` to `level + 1`, with size vectors as
    /// order units.
    pub fn from_level(diagram: &BratteliDiagram, level: usize) -> Result<Self> {
        let source = SimplicialGroup::new(diagram.size_vector(level)?.to_vec())?;
        let target = SimplicialGroup::new(diagram.size_vector(level + 1)?.to_vec())?;
        Self::new(diagram.mult(level)?.to_vec(), source, target)
    }

    pub fn from_morphism(sigma: &StandardMorphism) -> Self {
        PositiveHom {
            matrix: sigma.mult().to_vec(),
            source: SimplicialGroup::new(sigma.source().sizes().to_vec()).expect("sizes are positive"),
            target: SimplicialGroup::new(sigma.target().sizes().to_vec()).expect("sizes are positive"),
        }
    }

    pub fn matrix(&self) -> &[Vec<usize>] {
        &self.matrix
    }

    pub fn source(&self) -> &SimplicialGroup {
        &self.source
    }

    pub fn target(&self) -> &SimplicialGroup {
        &self.target
    }

    pub fn apply(&self, g: &[usize]) -> Vec<usize> {
        self.matrix
            .iter()
            .map(|row| row.iter().zip(g).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// Sends the source order unit to the target order unit.
    pub fn is_normalized(&self) -> bool {
        self.apply(self.source.unit()) == self.target.unit()
    }

    /// The induced map `[0, u_source] → [0, u_target]` on interval indices.
    pub fn interval_map(&self) -> Result<Vec<usize>> {
        if !self.is_normalized() {
            return Err(Error::Precondition("interval maps need a normalized homomorphism".into()));
        }
        self.source
            .interval_elements()
            .iter()
            .map(|p| self.target.interval_index(&self.apply(p)))
            .collect()
    }
}

/// The rank vector of an idempotent.
pub fn pi_mean(e: &SemisimpleElement) -> Result<Vec<usize>> {
    if !e.is_idempotent() {
        return Err(Error::NotIdempotent);
    }
    Ok(e.rank_vector())
}

/// `β π(e) = π(σ(e))` for every idempotent `e` of the source.
pub fn intertwine_check(sigma: &StandardMorphism) -> Result<bool> {
    let beta = PositiveHom::from_morphism(sigma);
    for e in sigma.source().idempotents() {
        if beta.apply(&pi_mean(&e)?) != pi_mean(&sigma.apply(&e)?)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `k / 2^level`.
pub fn dyadic_value(level: u32, k: u64) -> Result<BigRational> {
    let denom = BigInt::from(2u8).pow(level);
    if BigInt::from(k) > denom {
        return Err(Error::OutOfRange(format!("{k} exceeds 2^{level}")));
    }
    Ok(BigRational::new(k.into(), denom))
}

/// Default half-width of the boxes searched by the bounded checkers.
pub const DEFAULT_BOX: i64 = 3;

fn box_points(rank: usize, bound: i64) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for _ in 0..rank {
        out = out
            .into_iter()
            .flat_map(|v| {
                (-bound..=bound).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out
}

fn diff(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// Searches `[−bound, bound]^rank` for `a1, a2 ≤ b1, b2` with no `c` in the
/// box satisfying `a1, a2 ≤ c ≤ b1, b2`, for the order with the given
/// positive cone. A bounded check, not a proof.
pub fn interpolation_counterexample(
    rank: usize,
    bound: i64,
    is_positive: impl Fn(&[i64]) -> bool,
) -> Option<[Vec<i64>; 4]> {
    let pts = box_points(rank, bound);
    let n = pts.len();
    let le: Vec<Vec<bool>> = (0..n)
        .map(|x| (0..n).map(|y| is_positive(&diff(&pts[y], &pts[x]))).collect())
        .collect();
    for a1 in 0..n {
        for a2 in 0..n {
            let uppers: Vec<usize> = (0..n).filter(|&c| le[a1][c] && le[a2][c]).collect();
            for &b1 in &uppers {
                for &b2 in &uppers {
                    if !uppers.iter().any(|&c| le[c][b1] && le[c][b2]) {
                        return Some([a1, a2, b1, b2].map(|i| pts[i].clone()));
                    }
                }
            }
        }
    }
    None
}

/// Searches the box for `g` not positive with `k g` positive for some
/// `1 ≤ k ≤ 2·bound + 1`.
pub fn unperforation_counterexample(
    rank: usize,
    bound: i64,
    is_positive: impl Fn(&[i64]) -> bool,
) -> Option<(Vec<i64>, i64)> {
    for g in box_points(rank, bound) {
        if is_positive(&g) {
            continue;
        }
        for k in 1..=2 * bound + 1 {
            let kg: Vec<i64> = g.iter().map(|x| k * x).collect();
            if is_positive(&kg) {
                return Some((g, k));
            }
        }
    }
    None
}

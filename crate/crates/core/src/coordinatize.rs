//! Recovering a semisimple monoid from a finite MV-algebra, and per-level
//! interval reports for Bratteli diagrams.

use crate::bratteli::BratteliDiagram;
use crate::dimension::{interval_algebra, SimplicialGroup};
use crate::effect::{chain_product, mv_isomorphic, preserves_oplus, FiniteMvAlgebra};
use crate::error::{Error, Result};
use crate::quotient::{quotient_mv, SemisimpleView};
use crate::semisimple::Signature;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coordinatization {
    /// Sizes `n_i + 1` of the Łukasiewicz chains, non-decreasing.
    pub chains: Vec<usize>,
    /// `(n_1, …, n_k)`: the algebra is the quotient of `I_{n_1} × … × I_{n_k}`.
    pub signature: Signature,
    /// For each element of the input, the rank vector of its class.
    pub witness: Vec<Vec<usize>>,
}

/// Multisets of integers `≥ 2` with product `n`, by length then
/// lexicographically, each non-decreasing.
pub fn factorizations(n: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, min: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 1 {
            if !prefix.is_empty() {
                out.push(prefix.clone());
            }
            return;
        }
        for f in min..=n {
            if n.is_multiple_of(f) {
                prefix.push(f);
                go(n / f, f, prefix, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(n, 2, &mut Vec::new(), &mut out);
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

/// Finds chains with `M ≅ ∏ L_{n_i+1}` and the semisimple monoid whose
/// quotient realizes it, with an explicit element-to-rank-vector witness.
pub fn coordinatize(m: &FiniteMvAlgebra) -> Result<Coordinatization> {
    for chains in factorizations(m.len()) {
        let ns: Vec<usize> = chains.iter().map(|c| c - 1).collect();
        let target = chain_product(&ns)?;
        let Some(to_chains) = mv_isomorphic(m.base(), target.base()) else {
            continue;
        };
        let signature = Signature::new(ns)?;
        let q = quotient_mv(&SemisimpleView::new(signature.clone()))?;
        let to_quotient = mv_isomorphic(target.base(), &q.algebra).ok_or_else(|| {
            Error::NotFoulis(format!("quotient of {signature} does not match its chains"))
        })?;
        let composite: Vec<usize> = to_chains.iter().map(|&t| to_quotient[t]).collect();
        if !preserves_oplus(&composite, m.base(), &q.algebra) {
            return Err(Error::NotFoulis("composite witness fails to preserve ⊕".into()));
        }
        return Ok(Coordinatization {
            chains,
            signature,
            witness: composite.iter().map(|&i| q.keys[i].clone()).collect(),
        });
    }
    Err(Error::NoFactorization(m.len()))
}

/// Interval algebras above this size are reported without verification.
pub const INTERVAL_VERIFY_LIMIT: u128 = 1024;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalReport {
    pub level: usize,
    pub rank: usize,
    pub unit: Vec<usize>,
    /// Matrix to the next level, if any.
    pub connecting: Option<Vec<Vec<usize>>>,
    pub interval_size: u128,
    /// `Some(true)` when the quotient of the level monoid was shown
    /// isomorphic to `[0, u]`; `None` when skipped for size.
    pub verified: Option<bool>,
    /// Whether the isomorphism found is the identity on rank vectors.
    pub identity_witness: Option<bool>,
}

pub fn report_interval(diagram: &BratteliDiagram, level: usize) -> Result<IntervalReport> {
    let unit = diagram.size_vector(level)?.to_vec();
    let group = SimplicialGroup::new(unit.clone())?;
    let connecting = diagram.mult(level).ok().map(|m| m.to_vec());
    let interval_size = group.interval_size();
    let (verified, identity_witness) = if interval_size <= INTERVAL_VERIFY_LIMIT {
        let q = quotient_mv(&SemisimpleView::new(Signature::new(unit.clone())?))?;
        let interval = interval_algebra(&group);
        match mv_isomorphic(&q.algebra, interval.base()) {
            Some(map) => {
                let identity = q
                    .keys
                    .iter()
                    .zip(&map)
                    .all(|(k, &i)| group.interval_index(k).ok() == Some(i));
                (Some(true), Some(identity))
            }
            None => (Some(false), None),
        }
    } else {
        (None, None)
    };
    Ok(IntervalReport {
        level,
        rank: group.rank(),
        unit,
        connecting,
        interval_size,
        verified,
        identity_witness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::effect::lukasiewicz;

    #[test]
    fn factorization_order() {
        assert_eq!(factorizations(12), vec![vec![12], vec![2, 6], vec![3, 4], vec![2, 2, 3]]);
        assert!(factorizations(1).is_empty());
    }

    #[test]
    fn coordinatize_examples() {
        let c = coordinatize(&lukasiewicz(3).unwrap()).unwrap();
        assert_eq!(c.chains, vec![4]);
        assert_eq!(c.signature.sizes(), &[3]);
        assert_eq!(c.witness, vec![vec![0], vec![1], vec![2], vec![3]]);

        let c = coordinatize(&chain_product(&[1, 2]).unwrap()).unwrap();
        assert_eq!(c.chains, vec![2, 3]);
        assert_eq!(c.signature.sizes(), &[1, 2]);

        let c = coordinatize(&lukasiewicz(1).unwrap()).unwrap();
        assert_eq!(c.signature.sizes(), &[1]);
    }

    #[test]
    fn interval_reports() {
        let car = BratteliDiagram::car(3);
        let r = report_interval(&car, 3).unwrap();
        assert_eq!(r.unit, vec![8]);
        assert_eq!(r.interval_size, 9);
        assert_eq!(r.verified, Some(true));
        assert_eq!(r.identity_witness, Some(true));
        assert_eq!(r.connecting, None);

        let two = report_interval(&BratteliDiagram::pascal(3), 1).unwrap();
        assert_eq!(two.unit, vec![1, 1]);
        assert_eq!(two.interval_size, 4);
        assert_eq!(two.verified, Some(true));

        let root = report_interval(&car, 0).unwrap();
        assert_eq!(root.interval_size, 2);
        assert_eq!(root.verified, Some(true));
        assert!(report_interval(&car, 4).is_err());
    }
}

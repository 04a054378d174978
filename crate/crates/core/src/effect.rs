//! Finite partial algebras `(E, ⊕, 0, 1)`: effect algebras, MV-algebras,
//! Łukasiewicz chains and their products, plus an exact isomorphism search.
//!
//! Partial operations are stored as tables of `Option<usize>`; `None`
//! marks an undefined sum.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Axiom {
    /// Commutativity, with definedness.
    E1,
    /// Associativity, with definedness.
    E2,
    /// `0` is neutral.
    E3,
    /// Refinement.
    E4,
    /// Positivity.
    E5,
    /// Cancellation.
    E6,
    /// `a ⊕ 1` is defined only for `a = 0`.
    E7,
    /// Unique orthocomplement.
    E8,
}

impl Axiom {
    pub const ALL: [Axiom; 8] = [
        Axiom::E1,
        Axiom::E2,
        Axiom::E3,
        Axiom::E4,
        Axiom::E5,
        Axiom::E6,
        Axiom::E7,
        Axiom::E8,
    ];

    fn label(self) -> &'static str {
        match self {
            Axiom::E1 => "E1",
            Axiom::E2 => "E2",
            Axiom::E3 => "E3",
            Axiom::E4 => "E4",
            Axiom::E5 => "E5",
            Axiom::E6 => "E6",
            Axiom::E7 => "E7",
            Axiom::E8 => "E8",
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for Axiom {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Axiom::ALL
            .into_iter()
            .find(|a| a.label().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Parse(format!("unknown axiom {s:?}")))
    }
}

/// Result of checking one axiom. A failure carries the offending tuple of
/// element indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AxiomOutcome {
    Pass,
    Fail(Vec<usize>),
}

impl AxiomOutcome {
    pub fn passed(&self) -> bool {
        matches!(self, AxiomOutcome::Pass)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialAlgebra {
    names: Vec<String>,
    zero: usize,
    one: Option<usize>,
    table: Vec<Option<usize>>,
}

impl PartialAlgebra {
    pub fn new(
        names: Vec<String>,
        zero: usize,
        one: Option<usize>,
        table: Vec<Vec<Option<usize>>>,
    ) -> Result<Self> {
        let n = names.len();
        if n == 0 {
            return Err(Error::InvalidAlgebra("empty carrier".into()));
        }
        if zero >= n || one.is_some_and(|o| o >= n) {
            return Err(Error::InvalidAlgebra("zero or one outside the carrier".into()));
        }
        if table.len() != n || table.iter().any(|row| row.len() != n) {
            return Err(Error::InvalidAlgebra(format!("table must be {n}×{n}")));
        }
        let flat: Vec<Option<usize>> = table.into_iter().flatten().collect();
        if let Some(bad) = flat.iter().flatten().find(|&&x| x >= n) {
            return Err(Error::InvalidAlgebra(format!("table entry {bad} outside the carrier")));
        }
        Ok(PartialAlgebra {
            names,
            zero,
            one,
            table: flat,
        })
    }

    /// Builds the table by evaluating `op` on every ordered pair.
    pub fn from_fn(
        names: Vec<String>,
        zero: usize,
        one: Option<usize>,
        op: impl Fn(usize, usize) -> Option<usize>,
    ) -> Result<Self> {
        let n = names.len();
        let table = (0..n).map(|a| (0..n).map(|b| op(a, b)).collect()).collect();
        Self::new(names, zero, one, table)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, a: usize) -> &str {
        &self.names[a]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|x| x == name)
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn one(&self) -> Option<usize> {
        self.one
    }

    pub fn oplus(&self, a: usize, b: usize) -> Option<usize> {
        self.table[a * self.len() + b]
    }

    pub fn table(&self) -> Vec<Vec<Option<usize>>> {
        self.table.chunks(self.len()).map(|r| r.to_vec()).collect()
    }

    /// All ordered pairs `(c, d)` with `c ⊕ d = x`, indexed by `x`, each list
    /// in lexicographic order.
    fn decompositions(&self) -> Vec<Vec<(usize, usize)>> {
        let n = self.len();
        let mut dec = vec![Vec::new(); n];
        for c in 0..n {
            for d in 0..n {
                if let Some(x) = self.oplus(c, d) {
                    dec[x].push((c, d));
                }
            }
        }
        dec
    }

    pub fn check(&self, axiom: Axiom) -> Result<AxiomOutcome> {
        let n = self.len();
        let fail = |v: Vec<usize>| Ok(AxiomOutcome::Fail(v));
        match axiom {
            Axiom::E1 => {
                for a in 0..n {
                    for b in 0..n {
                        if self.oplus(a, b) != self.oplus(b, a) {
                            return fail(vec![a, b]);
                        }
                    }
                }
            }
            Axiom::E2 => {
                for a in 0..n {
                    for b in 0..n {
                        let ab = self.oplus(a, b);
                        for c in 0..n {
                            let left = ab.and_then(|x| self.oplus(x, c));
                            let right = self.oplus(b, c).and_then(|y| self.oplus(a, y));
                            if left != right {
                                return fail(vec![a, b, c]);
                            }
                        }
                    }
                }
            }
            Axiom::E3 => {
                for a in 0..n {
                    if self.oplus(a, self.zero) != Some(a) {
                        return fail(vec![a]);
                    }
                }
            }
            Axiom::E4 => {
                let dec = self.decompositions();
                for sums in &dec {
                    for &(a1, a2) in sums {
                        for &(b1, b2) in sums {
                            if self.refine_with(&dec, a1, a2, b1, b2).is_none() {
                                return fail(vec![a1, a2, b1, b2]);
                            }
                        }
                    }
                }
            }
            Axiom::E5 => {
                for a in 0..n {
                    for b in 0..n {
                        if self.oplus(a, b) == Some(self.zero) && (a != self.zero || b != self.zero)
                        {
                            return fail(vec![a, b]);
                        }
                    }
                }
            }
            Axiom::E6 => {
                for a in 0..n {
                    for b in 0..n {
                        let Some(x) = self.oplus(a, b) else { continue };
                        for c in 0..n {
                            if c != b && self.oplus(a, c) == Some(x) {
                                return fail(vec![a, b, c]);
                            }
                        }
                    }
                }
            }
            Axiom::E7 => {
                let one = self.one.ok_or(Error::MissingUnit("E7"))?;
                for a in 0..n {
                    if self.oplus(a, one).is_some() != (a == self.zero) {
                        return fail(vec![a]);
                    }
                }
            }
            Axiom::E8 => {
                let one = self.one.ok_or(Error::MissingUnit("E8"))?;
                for a in 0..n {
                    if (0..n).filter(|&c| self.oplus(a, c) == Some(one)).count() != 1 {
                        return fail(vec![a]);
                    }
                }
            }
        }
        Ok(AxiomOutcome::Pass)
    }

    /// Checks E1–E8 in order.
    pub fn check_all(&self) -> Result<Vec<(Axiom, AxiomOutcome)>> {
        Axiom::ALL
            .into_iter()
            .map(|ax| Ok((ax, self.check(ax)?)))
            .collect()
    }

    /// Checks the effect-algebra axioms E1, E2, E7, E8.
    pub fn is_effect_algebra(&self) -> Result<bool> {
        for ax in [Axiom::E1, Axiom::E2, Axiom::E7, Axiom::E8] {
            if !self.check(ax)?.passed() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The lexicographically first `(c11, c12, c21, c22)` refining
    /// `a1 ⊕ a2 = b1 ⊕ b2`, if any.
    pub fn refinement_witness(&self, a1: usize, a2: usize, b1: usize, b2: usize) -> Option<[usize; 4]> {
        self.refine_with(&self.decompositions(), a1, a2, b1, b2)
    }

    fn refine_with(
        &self,
        dec: &[Vec<(usize, usize)>],
        a1: usize,
        a2: usize,
        b1: usize,
        b2: usize,
    ) -> Option<[usize; 4]> {
        for &(c11, c12) in &dec[a1] {
            for &(c21, c22) in &dec[a2] {
                if self.oplus(c11, c21) == Some(b1) && self.oplus(c12, c22) == Some(b2) {
                    return Some([c11, c12, c21, c22]);
                }
            }
        }
        None
    }

    /// `leq[a][b]` iff `b = a ⊕ c` for some `c`.
    pub fn order_table(&self) -> Vec<Vec<bool>> {
        let n = self.len();
        let mut leq = vec![vec![false; n]; n];
        for a in 0..n {
            for c in 0..n {
                if let Some(b) = self.oplus(a, c) {
                    leq[a][b] = true;
                }
            }
        }
        leq
    }

    /// The unique `c` with `a ⊕ c = 1`, when it exists and is unique.
    pub fn orthocomplement(&self, a: usize) -> Option<usize> {
        let one = self.one?;
        let mut found = (0..self.len()).filter(|&c| self.oplus(a, c) == Some(one));
        let c = found.next()?;
        found.next().is_none().then_some(c)
    }

    /// Coordinatewise product; elements are pairs in row-major order.
    pub fn product(&self, other: &PartialAlgebra) -> PartialAlgebra {
        let m = other.len();
        let names = self
            .names
            .iter()
            .flat_map(|a| other.names.iter().map(move |b| format!("({a},{b})")))
            .collect();
        let one = self.one.zip(other.one).map(|(a, b)| a * m + b);
        PartialAlgebra::from_fn(names, self.zero * m + other.zero, one, |x, y| {
            let a = self.oplus(x / m, y / m)?;
            let b = other.oplus(x % m, y % m)?;
            Some(a * m + b)
        })
        .expect("product of valid algebras is valid")
    }
}

/// An MV-algebra presented as a lattice-ordered effect algebra with
/// refinement, carrying its derived order, lattice and complement tables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteMvAlgebra {
    base: PartialAlgebra,
    one: usize,
    complement: Vec<usize>,
    leq: Vec<Vec<bool>>,
    meet: Vec<Vec<usize>>,
    join: Vec<Vec<usize>>,
}

/// On-disk JSON form of a finite MV-algebra.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MvFile {
    pub elements: Vec<String>,
    pub zero: usize,
    pub one: usize,
    pub oplus: Vec<Vec<Option<usize>>>,
    pub complement: Vec<usize>,
}

impl FiniteMvAlgebra {
    /// Verifies E1–E8 (including refinement) and the lattice property.
    pub fn new(base: PartialAlgebra) -> Result<Self> {
        let one = base.one.ok_or(Error::MissingUnit("E7"))?;
        for (ax, outcome) in base.check_all()? {
            if let AxiomOutcome::Fail(w) = outcome {
                let names: Vec<&str> = w.iter().map(|&i| base.name(i)).collect();
                return Err(Error::NotMvAlgebra(format!("{ax} fails at {names:?}")));
            }
        }
        let n = base.len();
        let complement: Vec<usize> = (0..n)
            .map(|a| base.orthocomplement(a).expect("E8 holds"))
            .collect();
        let leq = base.order_table();
        let down: Vec<usize> = (0..n).map(|a| (0..n).filter(|&c| leq[c][a]).count()).collect();
        let mut meet = vec![vec![0; n]; n];
        let mut join = vec![vec![0; n]; n];
        for a in 0..n {
            for b in a..n {
                let lower: Vec<usize> = (0..n).filter(|&c| leq[c][a] && leq[c][b]).collect();
                let upper: Vec<usize> = (0..n).filter(|&c| leq[a][c] && leq[b][c]).collect();
                let glb = lower.iter().copied().find(|&m| lower.iter().all(|&c| leq[c][m]));
                let lub = upper.iter().copied().find(|&j| upper.iter().all(|&c| leq[j][c]));
                let (Some(m), Some(j)) = (glb, lub) else {
                    return Err(Error::NotMvAlgebra(format!(
                        "{} and {} have no meet or join",
                        base.name(a),
                        base.name(b)
                    )));
                };
                debug_assert!(down[m] <= down[a].min(down[b]));
                meet[a][b] = m;
                meet[b][a] = m;
                join[a][b] = j;
                join[b][a] = j;
            }
        }
        Ok(FiniteMvAlgebra {
            base,
            one,
            complement,
            leq,
            meet,
            join,
        })
    }

    /// Builds the tables of a product of chains directly: the order and
    /// lattice are coordinatewise, so no verification pass is needed.
    pub(crate) fn chain_product(ns: &[usize]) -> Self {
        let digits = |mut x: usize| {
            let mut v = vec![0; ns.len()];
            for (i, &n) in ns.iter().enumerate().rev() {
                v[i] = x % (n + 1);
                x /= n + 1;
            }
            v
        };
        let index = |v: &[usize]| v.iter().zip(ns).fold(0, |acc, (&d, &n)| acc * (n + 1) + d);
        let size: usize = ns.iter().map(|n| n + 1).product();
        let vecs: Vec<Vec<usize>> = (0..size).map(digits).collect();
        let names = vecs
            .iter()
            .map(|v| {
                if v.len() == 1 {
                    v[0].to_string()
                } else {
                    let s: Vec<String> = v.iter().map(|d| d.to_string()).collect();
                    format!("({})", s.join(","))
                }
            })
            .collect();
        let table = (0..size)
            .map(|a| {
                (0..size)
                    .map(|b| {
                        let s: Option<Vec<usize>> = vecs[a]
                            .iter()
                            .zip(&vecs[b])
                            .zip(ns)
                            .map(|((x, y), &n)| (x + y <= n).then_some(x + y))
                            .collect();
                        s.map(|v| index(&v))
                    })
                    .collect()
            })
            .collect();
        let top: Vec<usize> = ns.to_vec();
        let base = PartialAlgebra::new(names, 0, Some(index(&top)), table)
            .expect("chain product tables are well formed");
        let coord = |a: usize, b: usize, f: fn(usize, usize) -> usize| {
            let v: Vec<usize> = vecs[a].iter().zip(&vecs[b]).map(|(&x, &y)| f(x, y)).collect();
            index(&v)
        };
        let complement = (0..size)
            .map(|a| {
                let v: Vec<usize> = vecs[a].iter().zip(ns).map(|(&x, &n)| n - x).collect();
                index(&v)
            })
            .collect();
        let leq = (0..size)
            .map(|a| {
                (0..size)
                    .map(|b| vecs[a].iter().zip(&vecs[b]).all(|(x, y)| x <= y))
                    .collect()
            })
            .collect();
        let meet = (0..size)
            .map(|a| (0..size).map(|b| coord(a, b, usize::min)).collect())
            .collect();
        let join = (0..size)
            .map(|a| (0..size).map(|b| coord(a, b, usize::max)).collect())
            .collect();
        FiniteMvAlgebra {
            one: index(&top),
            base,
            complement,
            leq,
            meet,
            join,
        }
    }

    pub fn base(&self) -> &PartialAlgebra {
        &self.base
    }

    pub fn into_base(self) -> PartialAlgebra {
        self.base
    }

    pub fn len(&self) -> usize {
        self.base.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn zero(&self) -> usize {
        self.base.zero
    }

    pub fn one(&self) -> usize {
        self.one
    }

    pub fn oplus(&self, a: usize, b: usize) -> Option<usize> {
        self.base.oplus(a, b)
    }

    pub fn complement(&self, a: usize) -> usize {
        self.complement[a]
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a][b]
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a][b]
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a][b]
    }

    /// Truncated sum `a ⊕ (a′ ∧ b)`; always defined.
    pub fn boxplus(&self, a: usize, b: usize) -> usize {
        self.oplus(a, self.meet(self.complement(a), b))
            .expect("a ⊕ (a′ ∧ b) is defined in an MV-algebra")
    }

    pub fn product(&self, other: &FiniteMvAlgebra) -> FiniteMvAlgebra {
        let m = other.len();
        let n = self.len();
        let pair = |x: usize| (x / m, x % m);
        let base = self.base.product(&other.base);
        let complement = (0..n * m)
            .map(|x| {
                let (a, b) = pair(x);
                self.complement(a) * m + other.complement(b)
            })
            .collect();
        let table2 = |f: &dyn Fn(usize, usize, usize, usize) -> usize| -> Vec<Vec<usize>> {
            (0..n * m)
                .map(|x| {
                    (0..n * m)
                        .map(|y| {
                            let ((a, b), (c, d)) = (pair(x), pair(y));
                            f(a, b, c, d)
                        })
                        .collect()
                })
                .collect()
        };
        let meet = table2(&|a, b, c, d| self.meet(a, c) * m + other.meet(b, d));
        let join = table2(&|a, b, c, d| self.join(a, c) * m + other.join(b, d));
        let leq = (0..n * m)
            .map(|x| {
                (0..n * m)
                    .map(|y| {
                        let ((a, b), (c, d)) = (pair(x), pair(y));
                        self.leq(a, c) && other.leq(b, d)
                    })
                    .collect()
            })
            .collect();
        FiniteMvAlgebra {
            one: self.one * m + other.one,
            base,
            complement,
            leq,
            meet,
            join,
        }
    }

    pub fn to_file(&self) -> MvFile {
        MvFile {
            elements: self.base.names.clone(),
            zero: self.base.zero,
            one: self.one,
            oplus: self.base.table(),
            complement: self.complement.clone(),
        }
    }

    pub fn from_file(file: MvFile) -> Result<Self> {
        let base = PartialAlgebra::new(file.elements, file.zero, Some(file.one), file.oplus)?;
        let mv = Self::new(base)?;
        if file.complement != mv.complement {
            return Err(Error::InvalidAlgebra(
                "complement table disagrees with the orthocomplement".into(),
            ));
        }
        Ok(mv)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: MvFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_file(file)
    }

    /// Compact JSON, the canonical serialization.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_file()).expect("MV-algebra serializes")
    }
}

/// The chain `{0, …, n}` with `r ⊕ s = r + s` when `r + s ≤ n`.
pub fn lukasiewicz(n: usize) -> Result<FiniteMvAlgebra> {
    if n == 0 {
        return Err(Error::OutOfRange("a Łukasiewicz chain needs n ≥ 1".into()));
    }
    Ok(FiniteMvAlgebra::chain_product(&[n]))
}

/// `L_{n_1+1} × … × L_{n_k+1}` with mixed-radix element order, first
/// coordinate most significant.
pub fn chain_product(ns: &[usize]) -> Result<FiniteMvAlgebra> {
    if ns.is_empty() || ns.contains(&0) {
        return Err(Error::OutOfRange("chain lengths must be positive".into()));
    }
    Ok(FiniteMvAlgebra::chain_product(ns))
}

/// Whether `map` sends `0`, `1` and every defined sum of `a` to the
/// corresponding data of `b`.
pub fn preserves_oplus(map: &[usize], a: &PartialAlgebra, b: &PartialAlgebra) -> bool {
    if map.len() != a.len() || map[a.zero] != b.zero {
        return false;
    }
    if let (Some(x), Some(y)) = (a.one, b.one) {
        if map[x] != y {
            return false;
        }
    }
    (0..a.len()).all(|x| {
        (0..a.len()).all(|y| match a.oplus(x, y) {
            Some(z) => b.oplus(map[x], map[y]) == Some(map[z]),
            None => true,
        })
    })
}

/// Isomorphism-invariant data of an element used to prune the search.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
struct Profile {
    below: usize,
    above: usize,
    summands: usize,
    defined_with: usize,
    self_sum_defined: bool,
    sharp: bool,
}

fn profiles(a: &PartialAlgebra) -> Vec<Profile> {
    let n = a.len();
    let leq = a.order_table();
    let dec = a.decompositions();
    let comp: Vec<Option<usize>> = (0..n).map(|x| a.orthocomplement(x)).collect();
    (0..n)
        .map(|x| {
            // x is sharp when nothing but 0 lies below both x and x′.
            let sharp = comp[x].is_some_and(|c| {
                (0..n).all(|y| !(leq[y][x] && leq[y][c]) || y == a.zero)
            });
            Profile {
                below: (0..n).filter(|&y| leq[y][x]).count(),
                above: (0..n).filter(|&y| leq[x][y]).count(),
                summands: dec[x].len(),
                defined_with: (0..n).filter(|&y| a.oplus(x, y).is_some()).count(),
                self_sum_defined: a.oplus(x, x).is_some(),
                sharp,
            }
        })
        .collect()
}

/// Searches for a bijection preserving `0`, `1`, definedness and values of
/// `⊕`. Returns the image of each element of `a`. The search order is
/// deterministic: elements of `a` by height, candidates by index.
pub fn mv_isomorphic(a: &PartialAlgebra, b: &PartialAlgebra) -> Option<Vec<usize>> {
    let n = a.len();
    if n != b.len() || a.one.is_some() != b.one.is_some() {
        return None;
    }
    let pa = profiles(a);
    let pb = profiles(b);
    let mut ca: BTreeMap<&Profile, usize> = BTreeMap::new();
    let mut cb: BTreeMap<&Profile, usize> = BTreeMap::new();
    for p in &pa {
        *ca.entry(p).or_default() += 1;
    }
    for p in &pb {
        *cb.entry(p).or_default() += 1;
    }
    if ca != cb {
        return None;
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&x| (pa[x].below, x));
    let dec = a.decompositions();
    let mut search = IsoSearch {
        a,
        b,
        pa: &pa,
        pb: &pb,
        dec: &dec,
        order: &order,
        map: vec![None; n],
        inv: vec![None; n],
    };
    if !search.assign(a.zero, b.zero) {
        return None;
    }
    if let (Some(x), Some(y)) = (a.one, b.one) {
        if search.map[x].is_none() && !search.assign(x, y) {
            return None;
        }
        if search.map[x] != Some(y) {
            return None;
        }
    }
    if search.run(0) {
        let map: Vec<usize> = search.map.iter().map(|m| m.unwrap()).collect();
        debug_assert!(preserves_oplus(&map, a, b));
        Some(map)
    } else {
        None
    }
}

struct IsoSearch<'a> {
    a: &'a PartialAlgebra,
    b: &'a PartialAlgebra,
    pa: &'a [Profile],
    pb: &'a [Profile],
    dec: &'a [Vec<(usize, usize)>],
    order: &'a [usize],
    map: Vec<Option<usize>>,
    inv: Vec<Option<usize>>,
}

impl IsoSearch<'_> {
    /// Assigns `x ↦ y` if consistent with every pair already assigned.
    fn assign(&mut self, x: usize, y: usize) -> bool {
        if self.pa[x] != self.pb[y] || self.inv[y].is_some() || self.map[x].is_some() {
            return false;
        }
        self.map[x] = Some(y);
        self.inv[y] = Some(x);
        let n = self.a.len();
        for z in 0..n {
            let Some(w) = self.map[z] else { continue };
            for (p, q, pp, qq) in [(x, z, y, w), (z, x, w, y)] {
                let ra = self.a.oplus(p, q);
                let rb = self.b.oplus(pp, qq);
                let ok = match (ra, rb) {
                    (None, None) => true,
                    (Some(r), Some(s)) => {
                        self.map[r].is_none_or(|m| m == s) && self.inv[s].is_none_or(|m| m == r)
                    }
                    _ => false,
                };
                if !ok {
                    self.map[x] = None;
                    self.inv[y] = None;
                    return false;
                }
            }
        }
        true
    }

    fn unassign(&mut self, x: usize) {
        if let Some(y) = self.map[x].take() {
            self.inv[y] = None;
        }
    }

    fn run(&mut self, pos: usize) -> bool {
        let Some(&x) = self.order.get(pos) else {
            return true;
        };
        if self.map[x].is_some() {
            return self.run(pos + 1);
        }
        // A proper decomposition with both parts already placed forces the image.
        let forced = self.dec[x].iter().find_map(|&(c, d)| {
            if c == x || d == x {
                return None;
            }
            let (mc, md) = (self.map[c]?, self.map[d]?);
            Some(self.b.oplus(mc, md))
        });
        let candidates: Vec<usize> = match forced {
            Some(Some(y)) => vec![y],
            Some(None) => return false,
            None => (0..self.b.len()).collect(),
        };
        for y in candidates {
            if self.assign(x, y) {
                if self.run(pos + 1) {
                    return true;
                }
                self.unassign(x);
            }
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chain_axioms_and_refinement() {
        let l3 = lukasiewicz(2).unwrap();
        for (ax, outcome) in l3.base().check_all().unwrap() {
            assert!(outcome.passed(), "{ax}");
        }
        assert_eq!(l3.base().refinement_witness(1, 1, 2, 0), Some([1, 0, 1, 0]));
    }

    #[test]
    fn e7_failure_and_missing_unit() {
        let names = vec!["0".to_string(), "a".into(), "1".into()];
        let bad = PartialAlgebra::from_fn(names.clone(), 0, Some(2), |x, y| match (x, y) {
            (0, z) | (z, 0) => Some(z),
            (1, 2) | (2, 1) => Some(2),
            (1, 1) => Some(2),
            _ => None,
        })
        .unwrap();
        assert_eq!(bad.check(Axiom::E7).unwrap(), AxiomOutcome::Fail(vec![1]));
        let no_one = PartialAlgebra::from_fn(names, 0, None, |_, _| None).unwrap();
        assert_eq!(no_one.check(Axiom::E8), Err(Error::MissingUnit("E8")));
    }

    #[test]
    fn mv_operations_on_chain() {
        let l6 = lukasiewicz(5).unwrap();
        assert_eq!(l6.boxplus(3, 4), 5);
        assert_eq!(l6.boxplus(2, 2), 4);
        assert_eq!(l6.complement(2), 3);
        assert!(l6.leq(1, 4) && !l6.leq(4, 1));
        assert_eq!(l6.meet(2, 4), 2);
        assert_eq!(l6.join(2, 4), 4);
    }

    #[test]
    fn direct_constructions_match_verified_ones() {
        for ns in [vec![1], vec![3], vec![1, 2], vec![2, 1, 1]] {
            let direct = chain_product(&ns).unwrap();
            let checked = FiniteMvAlgebra::new(direct.base().clone()).unwrap();
            assert_eq!(direct, checked);
        }
        let p = lukasiewicz(1).unwrap().product(&lukasiewicz(2).unwrap());
        assert_eq!(p.len(), 6);
        assert_eq!(FiniteMvAlgebra::new(p.base().clone()).unwrap(), p);
        assert_eq!(p, chain_product(&[1, 2]).unwrap());
    }

    #[test]
    fn isomorphism_search() {
        let l3 = lukasiewicz(2).unwrap();
        assert_eq!(mv_isomorphic(l3.base(), l3.base()), Some(vec![0, 1, 2]));
        let b4 = chain_product(&[1, 1]).unwrap();
        let l4 = lukasiewicz(3).unwrap();
        assert_eq!(mv_isomorphic(b4.base(), l4.base()), None);
        let swapped = chain_product(&[2, 1]).unwrap();
        let map = mv_isomorphic(swapped.base(), chain_product(&[1, 2]).unwrap().base()).unwrap();
        assert!(preserves_oplus(&map, swapped.base(), chain_product(&[1, 2]).unwrap().base()));
    }

    #[test]
    fn json_round_trip() {
        let l3 = lukasiewicz(2).unwrap();
        let text = l3.to_json();
        assert_eq!(
            text,
            r#"{"elements":["0","1","2"],"zero":0,"one":2,"oplus":[[0,1,2],[1,2,null],[2,null,null]],"complement":[2,1,0]}"#
        );
        let back = FiniteMvAlgebra::from_json(&text).unwrap();
        assert_eq!(back.to_json(), text);
        let wrong = text.replace("\"complement\":[2,1,0]", "\"complement\":[2,0,0]");
        assert!(FiniteMvAlgebra::from_json(&wrong).is_err());
    }

    #[test]
    fn non_lattice_is_rejected() {
        // Effect algebra on {0, a, b, 1} with a ⊕ a = b ⊕ b = 1 only: E4 fails.
        let names = ["0", "a", "b", "1"].map(String::from).to_vec();
        let alg = PartialAlgebra::from_fn(names, 0, Some(3), |x, y| match (x, y) {
            (0, z) | (z, 0) => Some(z),
            (1, 1) | (2, 2) => Some(3),
            _ => None,
        })
        .unwrap();
        assert!(FiniteMvAlgebra::new(alg).is_err());
    }
}

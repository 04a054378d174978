//! Deterministic invariant suites, one per capability, run against
//! independent brute-force oracles.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::time::{Duration, Instant};

use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bratteli::BratteliDiagram;
use crate::coordinatize::{coordinatize, report_interval};
use crate::cuntz::{CuntzElement, DyadicView, PolyElement, Side};
use crate::dimension::{intertwine_check, PositiveHom};
use crate::effect::{lukasiewicz, mv_isomorphic, preserves_oplus, Axiom, FiniteMvAlgebra};
use crate::error::Error;
use crate::graph_inverse::{GraphInverseMonoid, PathPair};
use crate::partial_bijections::{self as pb, PartialBijection};
use crate::prefix::{all_codes, PrefixCode, Word};
use crate::quotient::{induced_quotient_map, invariant_mean_check, quotient_mv, SemisimpleView};
use crate::semisimple::{
    apply_standard, compose_standard, composition_letter_isomorphism, is_injective_standard,
    morphism_exists, SemisimpleElement, Signature, StandardMorphism,
};

pub const SUITES: [&str; 9] = [
    "partial_bijections",
    "quotient",
    "coordinatize",
    "semisimple",
    "compose",
    "bratteli",
    "cantor_prefix",
    "cuntz_gauge",
    "graph_inverse",
];

pub const DEFAULT_SEED: u64 = 0x5eed;

#[derive(Debug, Clone)]
pub struct SelftestOptions {
    /// Run only the named suite.
    pub filter: Option<String>,
    pub seed: u64,
    /// Extra diagram fixtures `(name, json)` checked by the `bratteli` suite.
    pub fixtures: Vec<(String, String)>,
}

impl Default for SelftestOptions {
    fn default() -> Self {
        SelftestOptions {
            filter: None,
            seed: DEFAULT_SEED,
            fixtures: Vec::new(),
        }
    }
}

#[derive(Debug, Clone)]
pub struct Check {
    pub suite: &'static str,
    pub name: String,
    pub passed: bool,
    pub detail: Option<String>,
    pub elapsed: Duration,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{status} {}::{} ({:.2?})", self.suite, self.name, self.elapsed)?;
        if let Some(d) = &self.detail {
            write!(f, ": {d}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Default)]
pub struct SelftestReport {
    pub seed: u64,
    pub checks: Vec<Check>,
    pub elapsed: Duration,
}

impl SelftestReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn suite_elapsed(&self, suite: &str) -> Duration {
        self.checks.iter().filter(|c| c.suite == suite).map(|c| c.elapsed).sum()
    }
}

pub fn run_selftest(options: &SelftestOptions) -> crate::Result<SelftestReport> {
    let suites: Vec<&'static str> = match &options.filter {
        Some(name) => vec![*SUITES
            .iter()
            .find(|s| **s == name.as_str())
            .ok_or_else(|| Error::Parse(format!("unknown suite `{name}`; expected one of {}", SUITES.join(", "))))?],
        None => SUITES.to_vec(),
    };
    let start = Instant::now();
    let mut checks = Vec::new();
    for suite in suites {
        checks.extend(run_suite(suite, options)?);
    }
    Ok(SelftestReport {
        seed: options.seed,
        checks,
        elapsed: start.elapsed(),
    })
}

pub fn run_suite(suite: &str, options: &SelftestOptions) -> crate::Result<Vec<Check>> {
    let mut rec = match SUITES.iter().find(|s| **s == suite) {
        Some(name) => Recorder::new(name),
        None => return Err(Error::Parse(format!("unknown suite `{suite}`"))),
    };
    let mut rng = ChaCha8Rng::seed_from_u64(options.seed);
    match suite {
        "partial_bijections" => partial_bijection_suite(&mut rec),
        "quotient" => quotient_suite(&mut rec),
        "coordinatize" => coordinatize_suite(&mut rec),
        "semisimple" => semisimple_suite(&mut rec, &mut rng),
        "compose" => compose_suite(&mut rec, &mut rng),
        "bratteli" => bratteli_suite(&mut rec, &mut rng, &options.fixtures),
        "cantor_prefix" => prefix_suite(&mut rec, &mut rng),
        "cuntz_gauge" => cuntz_suite(&mut rec, &mut rng),
        _ => graph_inverse_suite(&mut rec),
    }
    Ok(rec.checks)
}

#[derive(Debug)]
struct Failure(String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(format!("error: {e}"))
    }
}

type Outcome = std::result::Result<(), Failure>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(Failure(format!($($msg)+)));
        }
    };
}

struct Recorder {
    suite: &'static str,
    checks: Vec<Check>,
}

impl Recorder {
    fn new(suite: &'static str) -> Self {
        Recorder { suite, checks: Vec::new() }
    }

    fn check(&mut self, name: impl Into<String>, f: impl FnOnce() -> Outcome) {
        let start = Instant::now();
        let outcome = f();
        self.checks.push(Check {
            suite: self.suite,
            name: name.into(),
            passed: outcome.is_ok(),
            detail: outcome.err().map(|Failure(m)| m),
            elapsed: start.elapsed(),
        });
    }
}

/// Brute-force reference computations that share no code paths with the
/// library operations they validate.
pub mod oracles {
    use std::collections::BTreeSet;

    use crate::prefix::{PrefixCode, Word};
    use crate::semisimple::{SemisimpleElement, StandardMorphism};

    /// `Σ_k C(n,k)² k!` from factorials.
    pub fn symmetric_inverse_order(n: usize) -> u128 {
        let fact = |k: usize| (1..=k as u128).product::<u128>();
        (0..=n)
            .map(|k| {
                let c = fact(n) / (fact(k) * fact(n - k));
                c * c * fact(k)
            })
            .sum()
    }

    /// Composite of graphs given as 0-based `(from, to)` pair sets.
    pub fn compose_graphs(f: &BTreeSet<(usize, usize)>, g: &BTreeSet<(usize, usize)>) -> BTreeSet<(usize, usize)> {
        g.iter()
            .flat_map(|&(a, b)| f.iter().filter(move |&&(c, _)| c == b).map(move |&(_, d)| (a, d)))
            .collect()
    }

    /// A union of graphs is a partial bijection.
    pub fn is_injective_graph(g: &BTreeSet<(usize, usize)>) -> bool {
        let sources: BTreeSet<usize> = g.iter().map(|p| p.0).collect();
        let targets: BTreeSet<usize> = g.iter().map(|p| p.1).collect();
        sources.len() == g.len() && targets.len() == g.len()
    }

    pub fn integer_matrix_product(a: &[Vec<u8>], b: &[Vec<u8>]) -> Vec<Vec<u32>> {
        let n = b.first().map_or(0, Vec::len);
        a.iter()
            .map(|row| {
                (0..n)
                    .map(|j| row.iter().zip(b).map(|(&x, r)| x as u32 * r[j] as u32).sum())
                    .collect()
            })
            .collect()
    }

    /// `∃ a ≥ 0: a m = n`, by search.
    pub fn divides_by_search(m: usize, n: usize) -> bool {
        (0..=n).any(|a| a * m == n)
    }

    /// No nonzero element of the source is sent to zero.
    pub fn kernel_is_trivial(sigma: &StandardMorphism) -> bool {
        sigma
            .source()
            .elements()
            .iter()
            .filter(|x| !x.is_zero())
            .all(|x| !sigma.apply(x).expect("source element").is_zero())
    }

    /// The multiplicity matrix of a composite map, read off from the ranks of
    /// the images of the component units.
    pub fn functional_mult(
        map: impl Fn(&SemisimpleElement) -> SemisimpleElement,
        source: &crate::semisimple::Signature,
    ) -> Vec<Vec<usize>> {
        let images: Vec<Vec<usize>> = (0..source.components())
            .map(|j| map(&source.unit_idempotent(j)).rank_vector())
            .collect();
        let rows = images.first().map_or(0, Vec::len);
        (0..rows)
            .map(|i| (0..source.components()).map(|j| images[j][i] / source.sizes()[j]).collect())
            .collect()
    }

    /// Bitmask over the words of length `l` (colex index) covered by a code.
    pub fn cylinder_mask(code: &PrefixCode, l: usize) -> u128 {
        let mut mask = 0u128;
        for w in Word::all_of_length(code.arity(), l) {
            if code.words().iter().any(|x| w.letters().starts_with(x.letters())) {
                mask |= 1 << w.colex_index();
            }
        }
        mask
    }

    /// Every code reachable by exhausting reductions in every possible
    /// order; confluence means exactly one terminal code.
    pub fn reduction_normal_forms(code: &PrefixCode) -> BTreeSet<PrefixCode> {
        let mut seen = BTreeSet::new();
        let mut terminal = BTreeSet::new();
        let mut stack = vec![code.clone()];
        while let Some(c) = stack.pop() {
            if !seen.insert(c.clone()) {
                continue;
            }
            let steps = c.reductions();
            if steps.is_empty() {
                terminal.insert(c);
                continue;
            }
            for (u, r) in steps {
                stack.push(c.reduce(&u, r).expect("listed reduction applies"));
            }
        }
        terminal
    }

    /// Action of a row list `x ↦ y` on a single word, by definition.
    pub fn row_action(rows: &[(Word, Word)], w: &Word) -> Option<Word> {
        rows.iter().find_map(|(x, y)| w.strip_prefix(x).map(|rest| y.concat(&rest)))
    }
}

fn graph(f: &PartialBijection) -> BTreeSet<(usize, usize)> {
    f.images()
        .iter()
        .enumerate()
        .filter_map(|(j, i)| i.map(|i| (j, i)))
        .collect()
}

fn compositions(total: usize) -> Vec<Vec<usize>> {
    if total == 0 {
        return vec![Vec::new()];
    }
    (1..=total)
        .flat_map(|first| {
            compositions(total - first).into_iter().map(move |mut rest| {
                rest.insert(0, first);
                rest
            })
        })
        .collect()
}

/// Signatures with between 1 and `max` letters in total.
fn small_signatures(max: usize) -> Vec<Signature> {
    (1..=max)
        .flat_map(compositions)
        .map(|c| Signature::new(c).expect("positive sizes"))
        .collect()
}

fn partial_bijection_suite(rec: &mut Recorder) {
    let all: Vec<Vec<PartialBijection>> = (0..=4).map(|n| pb::enumerate(n).collect()).collect();

    rec.check("enumeration matches the counting formula", || {
        for (n, elems) in all.iter().enumerate() {
            let distinct: BTreeSet<_> = elems.iter().collect();
            ensure!(
                elems.len() as u128 == oracles::symmetric_inverse_order(n) && distinct.len() == elems.len(),
                "I_{n}: {} elements, {} distinct",
                elems.len(),
                distinct.len()
            );
            ensure!(pb::order(n) == elems.len() as u128, "order({n}) disagrees");
        }
        ensure!(all[4].len() == 209, "|I_4| = {}", all[4].len());
        Ok(())
    });

    rec.check("composition agrees with graph composition (n ≤ 4)", || {
        for elems in &all {
            for f in elems {
                for g in elems {
                    ensure!(graph(&f.compose(g)?) == oracles::compose_graphs(&graph(f), &graph(g)), "{f} ∘ {g}");
                }
            }
        }
        Ok(())
    });

    rec.check("associativity (exhaustive, n ≤ 4)", || {
        for elems in &all {
            let products: Vec<Vec<PartialBijection>> = elems
                .iter()
                .map(|a| elems.iter().map(|b| a.compose(b)).collect::<crate::Result<_>>())
                .collect::<crate::Result<_>>()?;
            let index: BTreeMap<&PartialBijection, usize> = elems.iter().enumerate().map(|(i, e)| (e, i)).collect();
            for (a, row) in products.iter().enumerate() {
                for (b, ab) in row.iter().enumerate() {
                    let ab = index[ab];
                    for c in 0..elems.len() {
                        let bc = index[&products[b][c]];
                        ensure!(products[ab][c] == products[a][bc], "({a}·{b})·{c}");
                    }
                }
            }
        }
        Ok(())
    });

    rec.check("inverse-semigroup laws and commuting idempotents (n ≤ 4)", || {
        for elems in &all {
            for a in elems {
                let inv = a.inverse();
                ensure!(a.compose(&inv)?.compose(a)? == *a, "a a⁻¹ a ≠ a for {a}");
                ensure!(inv.compose(a)?.compose(&inv)? == inv, "a⁻¹ a a⁻¹ ≠ a⁻¹ for {a}");
                ensure!(inv.compose(a)? == a.domain_idem() && a.compose(&inv)? == a.range_idem(), "d/r of {a}");
            }
            let idems: Vec<&PartialBijection> = elems.iter().filter(|e| e.is_idempotent()).collect();
            for e in &idems {
                for f in &idems {
                    ensure!(e.compose(f)? == f.compose(e)?, "{e} and {f} do not commute");
                }
            }
        }
        Ok(())
    });

    rec.check("order, compatibility and orthogonality by definition (n ≤ 4)", || {
        for elems in &all {
            for a in elems {
                for b in elems {
                    let leq = a.natural_leq(b)?;
                    ensure!(leq == (*a == b.compose(&a.domain_idem())?), "natural order {a} {b}");
                    ensure!(leq == graph(a).is_subset(&graph(b)), "graph containment {a} {b}");
                    let l = a.inverse().compose(b)?;
                    let r = a.compose(&b.inverse())?;
                    ensure!(a.compatible(b)? == (l.is_idempotent() && r.is_idempotent()), "compatible {a} {b}");
                    ensure!(a.orthogonal(b)? == (l.is_zero() && r.is_zero()), "orthogonal {a} {b}");
                    ensure!(!a.orthogonal(b)? || a.compatible(b)?, "orthogonal but not compatible {a} {b}");
                    let union: BTreeSet<_> = graph(a).union(&graph(b)).copied().collect();
                    ensure!(a.compatible(b)? == oracles::is_injective_graph(&union), "join existence {a} {b}");
                }
            }
        }
        Ok(())
    });

    rec.check("meets and joins: domain/range laws and distributivity (n ≤ 4)", || {
        for elems in &all {
            for s in elems {
                for t in elems {
                    let m = s.meet(t)?;
                    let laws = m.domain_idem() == s.domain_idem().meet(&t.domain_idem())?
                        && m.range_idem() == s.range_idem().meet(&t.range_idem())?;
                    ensure!(s.compatible(t)? == laws, "compatibility via meets fails for {s}, {t}");
                    match s.join(t)? {
                        Some(j) => {
                            ensure!(
                                j.domain_idem() == s.domain_idem().join(&t.domain_idem())?.expect("idempotents")
                                    && j.range_idem() == s.range_idem().join(&t.range_idem())?.expect("idempotents"),
                                "domain/range of {s} ∨ {t}"
                            );
                        }
                        None => ensure!(!s.compatible(t)?, "join missing for compatible {s}, {t}"),
                    }
                }
            }
        }
        for elems in &all {
            let joins: Vec<(&PartialBijection, &PartialBijection, PartialBijection)> = elems
                .iter()
                .flat_map(|a| elems.iter().map(move |b| (a, b)))
                .filter_map(|(a, b)| a.join(b).ok().flatten().map(|j| (a, b, j)))
                .collect();
            for (a, b, j) in &joins {
                for c in elems {
                    let (ca, cb) = (c.meet(a)?, c.meet(b)?);
                    let rhs = ca.join(&cb)?;
                    ensure!(rhs == Some(c.meet(j)?), "c ∧ (a ∨ b) for a={a}, b={b}, c={c}");
                }
            }
        }
        Ok(())
    });

    rec.check("rook matrices form an isomorphic monoid (n ≤ 4)", || {
        for elems in &all {
            for f in elems {
                ensure!(PartialBijection::from_rook(&f.to_rook()) == *f, "round trip {f}");
                for g in elems {
                    let prod = oracles::integer_matrix_product(f.to_rook().entries(), g.to_rook().entries());
                    let fg = f.compose(g)?.to_rook();
                    let expected: Vec<Vec<u32>> = fg
                        .entries()
                        .iter()
                        .map(|r| r.iter().map(|&x| x as u32).collect())
                        .collect();
                    ensure!(prod == expected, "M(fg) ≠ M(f)M(g) for {f}, {g}");
                    ensure!(
                        f.to_rook().freshman_product(&g.to_rook())? == f.meet(g)?.to_rook(),
                        "meet vs freshman product {f}, {g}"
                    );
                }
            }
        }
        Ok(())
    });

    rec.check("𝒟 is rank equality and has explicit witnesses (n ≤ 4)", || {
        for elems in &all {
            let idems: Vec<&PartialBijection> = elems.iter().filter(|e| e.is_idempotent()).collect();
            for e in &idems {
                for f in &idems {
                    let witnessed = elems.iter().any(|x| x.domain_idem() == **e && x.range_idem() == **f);
                    ensure!(e.d_related(f)? == witnessed, "𝒟 witness for {e}, {f}");
                    ensure!(e.d_related(f)? == (e.rank() == f.rank()), "𝒟 vs rank for {e}, {f}");
                }
            }
            for a in elems {
                ensure!(a.d_related(a)?, "reflexivity at {a}");
                for b in elems {
                    ensure!(a.d_related(b)? == b.d_related(a)?, "symmetry at {a}, {b}");
                }
            }
        }
        Ok(())
    });

    rec.check("complements and complete semisimplicity (n ≤ 4)", || {
        for n in 0..=4 {
            let idems = pb::idempotents(n);
            for e in &idems {
                let c = e.complement_idem()?;
                ensure!(e.meet(&c)?.is_zero(), "e ∧ ē ≠ 0 for {e}");
                ensure!(e.join(&c)? == Some(PartialBijection::identity(n)), "e ∨ ē ≠ 1 for {e}");
                for f in &idems {
                    if e.d_related(f)? {
                        ensure!(c.d_related(&f.complement_idem()?)?, "𝒟 does not preserve complements at {e}, {f}");
                        ensure!(!e.natural_leq(f)? || e == f, "{e} < {f} inside one 𝒟-class");
                    }
                }
            }
        }
        Ok(())
    });
}

fn quotient_suite(rec: &mut Recorder) {
    rec.check("quotient of I_n is the Łukasiewicz chain with n+1 elements (n ≤ 5)", || {
        for n in 1..=5 {
            let q = quotient_mv(&SemisimpleView::new(Signature::new(vec![n])?))?;
            let keys: Vec<Vec<usize>> = (0..=n).map(|r| vec![r]).collect();
            ensure!(q.keys == keys, "classes of I_{n}: {:?}", q.keys);
            let mv = q.mv()?;
            for r in 0..=n {
                ensure!(mv.complement(r) == n - r, "complement of {r} in I_{n}");
                for s in 0..=n {
                    ensure!(mv.boxplus(r, s) == (r + s).min(n), "{r} ⊞ {s} in I_{n}");
                    ensure!(mv.boxplus(r, s) == r + (n - r).min(s), "{r} ⊞ {s} ≠ r + min(r′, s)");
                    ensure!(mv.oplus(r, s) == (r + s <= n).then_some(r + s), "{r} ⊕ {s} in I_{n}");
                }
            }
            let chain = lukasiewicz(n)?;
            let iso = mv_isomorphic(&q.algebra, chain.base());
            ensure!(iso == Some((0..=n).collect()), "I_{n} quotient vs L_{}: {iso:?}", n + 1);
        }
        Ok(())
    });

    rec.check("quotients of semisimple monoids are MV-algebras (≤ 5 letters)", || {
        for sig in small_signatures(5) {
            let view = SemisimpleView::new(sig.clone());
            let q = quotient_mv(&view)?;
            let alg = &q.algebra;
            for axiom in Axiom::ALL {
                ensure!(alg.check(axiom)?.passed(), "{axiom} fails for {sig}");
            }
            FiniteMvAlgebra::new(alg.clone())?;
            let order = alg.order_table();
            let idems = sig.idempotents();
            for (i, ki) in q.keys.iter().enumerate() {
                for (j, kj) in q.keys.iter().enumerate() {
                    let f = view.initial_idempotent(kj);
                    let below = idems
                        .iter()
                        .any(|e| e.rank_vector() == *ki && e.natural_leq(&f).expect("same signature"));
                    ensure!(order[i][j] == below, "order {ki:?} ≤ {kj:?} in {sig}");
                }
            }
        }
        Ok(())
    });

    rec.check("standard morphisms induce ⊕- and complement-preserving maps", || {
        let cases: [(&[usize], &[&[usize]]); 4] = [
            (&[1], &[&[2]]),
            (&[2], &[&[1], &[2]]),
            (&[1, 1], &[&[1, 1], &[1, 0]]),
            (&[1, 2], &[&[1, 1], &[0, 1]]),
        ];
        for (sizes, mult) in cases {
            let sigma = StandardMorphism::from_matrix(
                Signature::new(sizes.to_vec())?,
                mult.iter().map(|r| r.to_vec()).collect(),
            )?;
            let src = quotient_mv(&SemisimpleView::new(sigma.source().clone()))?;
            let tgt = quotient_mv(&SemisimpleView::new(sigma.target().clone()))?;
            let map = induced_quotient_map(&sigma, &src, &tgt)?;
            ensure!(preserves_oplus(&map, &src.algebra, &tgt.algebra), "⊕ not preserved by {sigma}");
            let (smv, tmv) = (src.mv()?, tgt.mv()?);
            for a in 0..smv.len() {
                ensure!(map[smv.complement(a)] == tmv.complement(map[a]), "complement not preserved by {sigma}");
            }
        }
        Ok(())
    });
}

fn coordinatize_suite(rec: &mut Recorder) {
    rec.check("L_4 gives chains {4} and signature (3)", || {
        let c = coordinatize(&lukasiewicz(3)?)?;
        ensure!(c.chains == [4] && c.signature.sizes() == [3], "got {:?} / {}", c.chains, c.signature);
        ensure!(c.witness == (0..=3).map(|r| vec![r]).collect::<Vec<_>>(), "witness {:?}", c.witness);
        Ok(())
    });

    rec.check("L_2 × L_3 gives chains {2,3} and signature (1,2)", || {
        let c = coordinatize(&lukasiewicz(1)?.product(&lukasiewicz(2)?))?;
        ensure!(c.chains == [2, 3] && c.signature.sizes() == [1, 2], "got {:?} / {}", c.chains, c.signature);
        Ok(())
    });

    rec.check("two-element Boolean algebra gives I_1", || {
        let c = coordinatize(&lukasiewicz(1)?)?;
        ensure!(c.signature.sizes() == [1], "got {}", c.signature);
        Ok(())
    });

    rec.check("round trip through emitted tables (≤ 6 letters)", || {
        for sig in small_signatures(6) {
            let q = quotient_mv(&SemisimpleView::new(sig.clone()))?;
            let json = q.mv()?.to_json();
            let parsed = FiniteMvAlgebra::from_json(&json)?;
            ensure!(parsed.to_json() == json, "tables for {sig} do not round-trip");
            let c = coordinatize(&parsed)?;
            let mut want = sig.sizes().to_vec();
            want.sort_unstable();
            ensure!(c.signature.sizes() == want, "{sig} recovered as {}", c.signature);
            let back = quotient_mv(&SemisimpleView::new(c.signature.clone()))?;
            ensure!(mv_isomorphic(&back.algebra, parsed.base()).is_some(), "{sig}: recovered quotient differs");
            let map: Vec<usize> = c
                .witness
                .iter()
                .map(|key| back.index_of(key).ok_or_else(|| Failure(format!("{sig}: witness key {key:?}"))))
                .collect::<std::result::Result<_, _>>()?;
            let distinct: BTreeSet<&usize> = map.iter().collect();
            ensure!(distinct.len() == map.len(), "{sig}: witness is not injective");
            ensure!(preserves_oplus(&map, parsed.base(), &back.algebra), "{sig}: witness does not preserve ⊕");
        }
        Ok(())
    });
}

fn random_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize, max: usize) -> Vec<Vec<usize>> {
    (0..rows)
        .map(|_| {
            let mut row: Vec<usize> = (0..cols).map(|_| rng.gen_range(0..=max)).collect();
            if row.iter().all(|&x| x == 0) {
                row[rng.gen_range(0..cols)] = 1;
            }
            row
        })
        .collect()
}

fn semisimple_suite(rec: &mut Recorder, rng: &mut ChaCha8Rng) {
    rec.check("morphisms I_m → I_n exist iff m | n (1 ≤ m, n ≤ 12)", || {
        for m in 1..=12 {
            for n in 1..=12 {
                let constructible = (0..=n).any(|a| {
                    StandardMorphism::new(
                        Signature::new(vec![m]).expect("positive"),
                        Signature::new(vec![n]).expect("positive"),
                        vec![vec![a]],
                    )
                    .is_ok()
                });
                ensure!(morphism_exists(m, n) == oracles::divides_by_search(m, n), "table at ({m}, {n})");
                ensure!(morphism_exists(m, n) == constructible, "construction at ({m}, {n})");
            }
        }
        Ok(())
    });

    let mut family = Vec::new();
    for sig in small_signatures(6) {
        let k = sig.components();
        let mut mats = vec![vec![vec![1; k]], random_matrix(rng, 2, k, 2)];
        if k > 1 {
            let mut killed = vec![vec![1; k]];
            killed[0][0] = 0;
            mats.push(killed);
        }
        for m in mats {
            family.push(StandardMorphism::from_matrix(sig.clone(), m).expect("nonzero rows"));
        }
    }

    rec.check("injectivity iff trivial kernel (sources ≤ 6 letters)", || {
        for sigma in &family {
            ensure!(
                is_injective_standard(sigma) == oracles::kernel_is_trivial(sigma),
                "{sigma}: predicate {}",
                is_injective_standard(sigma)
            );
        }
        Ok(())
    });

    rec.check("standard morphisms are ∧-monoid homomorphisms preserving joins (≤ 3 letters)", || {
        for sigma in family.iter().filter(|s| s.source().total_letters() <= 3) {
            let elems = sigma.source().elements();
            let img: Vec<SemisimpleElement> = elems.iter().map(|x| apply_standard(sigma, x)).collect::<crate::Result<_>>()?;
            ensure!(apply_standard(sigma, &sigma.source().identity())? == sigma.target().identity(), "{sigma}: unit");
            for (i, x) in elems.iter().enumerate() {
                ensure!(apply_standard(sigma, &x.inverse())? == img[i].inverse(), "{sigma}: inverse of {x}");
                ensure!(x.is_idempotent() == img[i].is_idempotent() || !x.is_idempotent(), "{sigma}: idempotent {x}");
                for (j, y) in elems.iter().enumerate() {
                    ensure!(apply_standard(sigma, &x.multiply(y)?)? == img[i].multiply(&img[j])?, "{sigma}: product");
                    ensure!(apply_standard(sigma, &x.meet(y)?)? == img[i].meet(&img[j])?, "{sigma}: meet");
                    if x.natural_leq(y)? {
                        ensure!(img[i].natural_leq(&img[j])?, "{sigma}: order");
                    }
                    if let Some(j_xy) = x.join(y)? {
                        ensure!(img[i].join(&img[j])? == Some(apply_standard(sigma, &j_xy)?), "{sigma}: join");
                    }
                }
            }
        }
        Ok(())
    });

    rec.check("rank vectors transform by the multiplicity matrix (≤ 4 letters)", || {
        for sigma in family.iter().filter(|s| s.source().total_letters() <= 4) {
            for e in sigma.source().idempotents() {
                let v = e.rank_vector();
                let expected: Vec<usize> = sigma
                    .mult()
                    .iter()
                    .map(|row| row.iter().zip(&v).map(|(a, b)| a * b).sum())
                    .collect();
                ensure!(apply_standard(sigma, &e)?.rank_vector() == expected, "{sigma}: rank of image of {e}");
            }
        }
        Ok(())
    });
}

fn conjugate(beta: &[PartialBijection], x: &SemisimpleElement) -> crate::Result<SemisimpleElement> {
    SemisimpleElement::new(
        beta.iter()
            .zip(x.parts())
            .map(|(b, p)| b.compose(p)?.compose(&b.inverse()))
            .collect::<crate::Result<_>>()?,
    )
}

fn compose_suite(rec: &mut Recorder, rng: &mut ChaCha8Rng) {
    let sources: [&[usize]; 8] = [&[6], &[1, 2, 3], &[2, 2], &[1, 1, 1], &[3, 3], &[5, 1], &[2, 4], &[1]];
    let mut pairs = Vec::new();
    for sizes in sources {
        let sig = Signature::new(sizes.to_vec()).expect("positive");
        for _ in 0..2 {
            let sigma = StandardMorphism::from_matrix(sig.clone(), random_matrix(rng, 2, sig.components(), 2))
                .expect("nonzero rows");
            let rows = rng.gen_range(1..=2);
            let tau = StandardMorphism::from_matrix(
                sigma.target().clone(),
                random_matrix(rng, rows, sigma.target().components(), 2),
            )
            .expect("nonzero rows");
            pairs.push((sigma, tau));
        }
    }

    rec.check("composite matrix equals the matrix of the functional composite", || {
        for (sigma, tau) in &pairs {
            let rho = compose_standard(tau, sigma)?;
            let functional = oracles::functional_mult(
                |x| tau.apply(&sigma.apply(x).expect("source")).expect("middle"),
                sigma.source(),
            );
            ensure!(rho.mult() == functional.as_slice(), "{tau} ∘ {sigma}: {:?} vs {functional:?}", rho.mult());
        }
        Ok(())
    });

    rec.check("functional composite agrees elementwise (sources ≤ 6 letters)", || {
        for (sigma, tau) in &pairs {
            let rho = compose_standard(tau, sigma)?;
            let beta = composition_letter_isomorphism(tau, sigma)?;
            let single = sigma.source().components() == 1;
            for x in sigma.source().elements() {
                let two_step = tau.apply(&sigma.apply(&x)?)?;
                let one_step = rho.apply(&x)?;
                ensure!(two_step == conjugate(&beta, &one_step)?, "{tau} ∘ {sigma} at {x}");
                if single {
                    ensure!(two_step == one_step, "{tau} ∘ {sigma} differs from the product at {x}");
                }
            }
        }
        Ok(())
    });

    rec.check("CAR chain composites have matrix [2^k]", || {
        let car = BratteliDiagram::car(6);
        for start in 0..=2 {
            let mut acc = car.level_morphism(start)?;
            for level in start + 1..6 {
                acc = compose_standard(&car.level_morphism(level)?, &acc)?;
                let k = level + 1 - start;
                ensure!(acc.mult() == [vec![1usize << k]], "levels {start}..{}: {:?}", level + 1, acc.mult());
            }
            if start <= 2 {
                let steps: Vec<StandardMorphism> = (start..start + 3).map(|l| car.level_morphism(l)).collect::<crate::Result<_>>()?;
                let composite = compose_standard(&steps[2], &compose_standard(&steps[1], &steps[0])?)?;
                for x in steps[0].source().elements() {
                    let mut y = x.clone();
                    for s in &steps {
                        y = s.apply(&y)?;
                    }
                    ensure!(composite.apply(&x)? == y, "three-step chain from level {start} at {x}");
                }
            }
        }
        Ok(())
    });
}

fn fixture_diagrams() -> Vec<(String, BratteliDiagram)> {
    vec![
        ("car".into(), BratteliDiagram::car(5)),
        ("pascal".into(), BratteliDiagram::pascal(4)),
        ("irregular".into(), BratteliDiagram::irregular()),
    ]
}

fn bratteli_suite(rec: &mut Recorder, rng: &mut ChaCha8Rng, extra: &[(String, String)]) {
    let mut diagrams = fixture_diagrams();
    for (name, text) in extra {
        let mut parsed = None;
        rec.check(format!("fixture {name} parses"), || {
            parsed = Some(BratteliDiagram::from_json(text)?);
            Ok(())
        });
        if let Some(d) = parsed {
            diagrams.push((name.clone(), d));
        }
    }
    for (name, d) in &diagrams {
        rec.check(format!("{name}: size vectors count root paths"), || {
            fn paths(d: &BratteliDiagram, level: usize, v: usize) -> usize {
                if level == 0 {
                    return 1;
                }
                let m = d.mult(level - 1).expect("level in range");
                m[v].iter().enumerate().map(|(u, &c)| c * paths(d, level - 1, u)).sum()
            }
            for level in 0..=d.depth() {
                let s = d.size_vector(level)?;
                for (v, &size) in s.iter().enumerate() {
                    ensure!(size == paths(d, level, v), "level {level} vertex {v}");
                }
            }
            Ok(())
        });

        rec.check(format!("{name}: level maps intertwine rank vectors"), || {
            for level in 0..d.depth() {
                ensure!(intertwine_check(&d.level_morphism(level)?)?, "level {level}");
            }
            Ok(())
        });

        rec.check(format!("{name}: quotients match the interval algebras"), || {
            for level in 0..=d.depth() {
                let r = report_interval(d, level)?;
                ensure!(r.verified == Some(true), "level {level}: {:?}", r.verified);
                ensure!(r.identity_witness == Some(true), "level {level}: witness is not the rank-vector map");
            }
            Ok(())
        });

        rec.check(format!("{name}: interval maps preserve ⊕"), || {
            for level in 0..d.depth() {
                let hom = PositiveHom::from_level(d, level)?;
                let map = hom.interval_map()?;
                let src = crate::dimension::interval_algebra(hom.source());
                let tgt = crate::dimension::interval_algebra(hom.target());
                if src.len() * tgt.len() <= 1 << 16 {
                    ensure!(preserves_oplus(&map, src.base(), tgt.base()), "level {level}");
                }
            }
            Ok(())
        });

        rec.check(format!("{name}: levels are completely semisimple Boolean ∧-monoids"), || {
            for level in 0..=d.depth() {
                let sig = d.level_monoid_signature(level)?;
                if sig.total_letters() <= 8 {
                    let idems = sig.idempotents();
                    for e in &idems {
                        let c = e.complement_idem()?;
                        ensure!(e.meet(&c)?.is_zero() && e.join(&c)? == Some(sig.identity()), "complement at {e}");
                        for f in &idems {
                            if e.d_related(f)? {
                                ensure!(c.d_related(&f.complement_idem()?)?, "complements at {e}, {f}");
                                ensure!(!e.natural_leq(f)? || e == f, "{e} < {f} in one class");
                            }
                        }
                    }
                }
                if sig.total_letters() <= 4 {
                    let elems = sig.elements();
                    let units = elems.iter().filter(|x| x.is_unit()).count() as u128;
                    let expected: u128 = sig.sizes().iter().map(|&s| (1..=s as u128).product::<u128>()).product();
                    ensure!(units == expected, "level {level}: {units} units");
                    for a in &elems {
                        for b in &elems {
                            let Some(j) = a.join(b)? else { continue };
                            for c in &elems {
                                let left = c.multiply(a)?.join(&c.multiply(b)?)?;
                                let right = a.multiply(c)?.join(&b.multiply(c)?)?;
                                ensure!(left == Some(c.multiply(&j)?), "c(a ∨ b) at level {level}");
                                ensure!(right == Some(j.multiply(c)?), "(a ∨ b)c at level {level}");
                                ensure!(c.meet(a)?.join(&c.meet(b)?)? == Some(c.meet(&j)?), "c ∧ (a ∨ b)");
                            }
                        }
                    }
                }
            }
            Ok(())
        });

        rec.check(format!("{name}: limit operations are compatible with pushing"), || {
            let top = d.depth();
            for _ in 0..50 {
                let la = rng.gen_range(0..=top);
                let lb = rng.gen_range(0..=top);
                let a = d.element(la, random_semisimple(rng, &d.level_monoid_signature(la)?))?;
                let b = d.element(lb, random_semisimple(rng, &d.level_monoid_signature(lb)?))?;
                let (pa, pb) = (a.push_to_level(top)?, b.push_to_level(top)?);
                let prod = a.af_multiply(&b)?;
                ensure!(prod.level() == la.max(lb), "product level");
                ensure!(prod.push_to_level(top)?.value() == &pa.value().multiply(pb.value())?, "product");
                ensure!(a.af_meet(&b)?.push_to_level(top)?.value() == &pa.value().meet(pb.value())?, "meet");
                ensure!(a.af_natural_leq(&b)? == pa.value().natural_leq(pb.value())?, "order");
                ensure!(a.af_inverse().push_to_level(top)?.value() == &pa.value().inverse(), "inverse");
            }
            Ok(())
        });
    }
}

fn random_partial_bijection(rng: &mut ChaCha8Rng, n: usize) -> PartialBijection {
    let mut targets: Vec<usize> = (0..n).collect();
    targets.shuffle(rng);
    let images = (0..n)
        .map(|j| rng.gen_bool(0.7).then_some(targets[j]))
        .collect();
    PartialBijection::from_images(images).expect("injective by construction")
}

fn random_semisimple(rng: &mut ChaCha8Rng, sig: &Signature) -> SemisimpleElement {
    SemisimpleElement::new(sig.sizes().iter().map(|&n| random_partial_bijection(rng, n)).collect())
        .expect("well-formed parts")
}

fn prefix_suite(rec: &mut Recorder, rng: &mut ChaCha8Rng) {
    let code = |s: &str| PrefixCode::parse(2, s).expect("fixture code");

    rec.check("worked example uniformizes to seven words", || {
        let x = code("aa+aba+b");
        let u = x.uniformize(3)?;
        ensure!(u == code("aaa+aab+aba+baa+bab+bba+bbb"), "got {u}");
        ensure!(u.len() == 7 && u.to_string() == "aaa+aab+aba+baa+bab+bba+bbb", "printed {u}");
        let b = Word::parse(2, "b")?;
        let aa = Word::parse(2, "aa")?;
        ensure!(x.extend(&b, 2)?.extend(&aa, 1)? == u, "stepwise extension");
        ensure!(x.bernoulli() == BigRational::new(7.into(), 8.into()), "measure {}", x.bernoulli());
        Ok(())
    });

    let binary = all_codes(2, 4).unwrap_or_default();
    let ternary = all_codes(3, 2).unwrap_or_default();

    rec.check("code enumeration counts", || {
        let counts: Vec<usize> = (0..=3).map(|l| all_codes(2, l).map(|c| c.len())).collect::<crate::Result<_>>()?;
        ensure!(counts == [2, 5, 26, 677], "binary counts {counts:?}");
        ensure!(binary.len() == 458_330, "binary length 4: {}", binary.len());
        ensure!(ternary.len() == 730, "ternary length 2: {}", ternary.len());
        Ok(())
    });

    rec.check("measure ≤ 1, with equality exactly for maximal codes (exhaustive to length 4)", || {
        for (codes, l) in [(&binary, 4), (&ternary, 2)] {
            for c in codes.iter() {
                let mu = c.bernoulli();
                let full = oracles::cylinder_mask(c, l) == (1u128 << c.arity().pow(l as u32)) - 1;
                ensure!(mu <= BigRational::one(), "μ({c}) = {mu}");
                ensure!(mu.is_one() == c.is_maximal() && full == c.is_maximal_oracle() && full == mu.is_one(), "maximality of {c}");
            }
        }
        Ok(())
    });

    rec.check("minimal-weight generators are unique (exhaustive to length 4)", || {
        let mut best: BTreeMap<u128, Vec<&PrefixCode>> = BTreeMap::new();
        for c in &binary {
            let entry = best.entry(oracles::cylinder_mask(c, 4)).or_default();
            match entry.first().map(|b| b.weight()) {
                Some(w) if w < c.weight() => {}
                Some(w) if w == c.weight() => entry.push(c),
                _ => *entry = vec![c],
            }
        }
        for minimal in best.values() {
            ensure!(minimal.len() == 1, "ties: {}", minimal.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(", "));
            ensure!(minimal[0].minimize() == *minimal[0], "{} is not reduced", minimal[0]);
        }
        for c in &binary {
            ensure!(best[&oracles::cylinder_mask(c, 4)][0] == &c.minimize(), "minimize({c})");
        }
        Ok(())
    });

    rec.check("uniform codes of equal length and measure have equal size", || {
        let mut sizes: BTreeMap<(usize, BigRational), usize> = BTreeMap::new();
        for c in binary.iter().filter(|c| c.is_uniform()) {
            let size = *sizes.entry((c.length(), c.bernoulli())).or_insert(c.len());
            ensure!(size == c.len(), "{c}");
        }
        Ok(())
    });

    rec.check("reduction is confluent over every order (≤ 10 words)", || {
        let mut pool: Vec<&PrefixCode> = binary.iter().filter(|c| c.length() <= 3).collect();
        pool.extend(ternary.iter());
        let long: Vec<&PrefixCode> = binary.iter().filter(|c| c.length() == 4 && c.len() <= 10).collect();
        pool.extend(long.choose_multiple(rng, 400).copied());
        for c in pool.into_iter().filter(|c| c.len() <= 10) {
            let forms = oracles::reduction_normal_forms(c);
            ensure!(forms.len() == 1 && forms.contains(&c.minimize()), "{c} reaches {forms:?}");
        }
        Ok(())
    });

    rec.check("extension then reduction is the identity and preserves the clopen set", || {
        for c in binary.iter().filter(|c| c.length() <= 3).chain(ternary.iter()) {
            for u in c.words() {
                for r in 1..=2 {
                    let ext = c.extend(u, r)?;
                    ensure!(ext.reduce(u, r)? == *c, "{c} via {u}, {r}");
                    ensure!(ext.bernoulli() == c.bernoulli() && ext.clopen_equal(c)?, "{c} extended at {u}");
                }
            }
        }
        Ok(())
    });

    rec.check("clopen equality agrees with cylinder sets", || {
        let sample: Vec<&PrefixCode> = binary.choose_multiple(rng, 300).collect();
        for a in &sample {
            for b in sample.iter().take(60) {
                let same = oracles::cylinder_mask(a, 4) == oracles::cylinder_mask(b, 4);
                ensure!(a.clopen_equal(b)? == same, "{a} vs {b}");
                let sub = oracles::cylinder_mask(a, 4) & !oracles::cylinder_mask(b, 4) == 0;
                ensure!(a.clopen_subset(b)? == sub, "{a} ⊆ {b}");
                let (ma, mb) = (oracles::cylinder_mask(a, 4), oracles::cylinder_mask(b, 4));
                ensure!(oracles::cylinder_mask(&a.intersection(b)?, 4) == ma & mb, "{a} ∩ {b}");
                ensure!(oracles::cylinder_mask(&a.union(b)?, 4) == ma | mb, "{a} ∪ {b}");
                ensure!(oracles::cylinder_mask(&a.difference(b)?, 4) == ma & !mb, "{a} \\ {b}");
            }
        }
        Ok(())
    });
}

/// A random prefix code with at most `max_words` words of length ≤ `max_len`.
fn random_code(rng: &mut ChaCha8Rng, arity: usize, max_len: usize, max_words: usize) -> Vec<Word> {
    let mut words: Vec<Word> = Vec::new();
    for _ in 0..20 {
        if words.len() >= max_words {
            break;
        }
        let len = rng.gen_range(0..=max_len);
        let w = Word::new(arity, (0..len).map(|_| rng.gen_range(0..arity as u8)).collect()).expect("letters in range");
        if words.iter().all(|x| !x.is_prefix_of(&w) && !w.is_prefix_of(x)) {
            words.push(w);
        }
    }
    words
}

fn random_cuntz(rng: &mut ChaCha8Rng) -> CuntzElement {
    if rng.gen_bool(0.5) {
        let level = rng.gen_range(1..=3);
        let p = random_partial_bijection(rng, 1 << level);
        return CuntzElement::from_symmetric(2, level, &p).expect("degree matches");
    }
    let mut dom = random_code(rng, 2, 3, 4);
    let mut ran = random_code(rng, 2, 3, 4);
    let k = dom.len().min(ran.len());
    dom.truncate(k);
    ran.truncate(k);
    ran.shuffle(rng);
    CuntzElement::new(2, dom.into_iter().zip(ran).collect()).expect("prefix codes of equal size")
}

fn action_on(f: &CuntzElement, l: usize) -> Vec<Option<Word>> {
    Word::all_of_length(2, l)
        .iter()
        .map(|w| oracles::row_action(f.rows(), w))
        .collect()
}

fn cuntz_suite(rec: &mut Recorder, rng: &mut ChaCha8Rng) {
    let elements: Vec<CuntzElement> = (0..240).map(|_| random_cuntz(rng)).collect();
    let gauge: Vec<&CuntzElement> = elements.iter().filter(|f| f.is_gauge()).collect();

    rec.check(format!("inverse-semigroup laws on {} random elements", elements.len()), || {
        for f in &elements {
            let inv = f.inverse();
            ensure!(f.multiply(&inv)?.multiply(f)? == *f, "f f⁻¹ f ≠ f for {f}");
            ensure!(inv.multiply(f)?.multiply(&inv)? == inv, "f⁻¹ f f⁻¹ ≠ f⁻¹ for {f}");
            ensure!(inv.multiply(f)? == f.domain_idem(), "f⁻¹ f for {f}");
        }
        let idems: Vec<CuntzElement> = elements.iter().map(|f| f.domain_idem()).collect();
        for e in &idems {
            for g in &idems {
                ensure!(e.multiply(g)? == g.multiply(e)?, "{e} and {g} do not commute");
            }
        }
        for (i, f) in elements.iter().enumerate().take(60) {
            for g in elements.iter().skip(i).take(30) {
                for h in elements.iter().take(10) {
                    ensure!(f.multiply(g)?.multiply(h)? == f.multiply(&g.multiply(h)?)?, "associativity");
                }
            }
        }
        Ok(())
    });

    rec.check("operations agree with the action on finite words", || {
        for f in &elements {
            for g in elements.iter().take(80) {
                let l = 1 + f.max_len() + g.max_len();
                let (af, ag) = (action_on(f, l), action_on(g, l));
                let fg = action_on(&f.multiply(g)?, l);
                for (i, w) in Word::all_of_length(2, l).iter().enumerate() {
                    let expected = ag[i].as_ref().and_then(|v| oracles::row_action(f.rows(), v));
                    ensure!(fg[i] == expected, "({f})({g}) at {w}");
                    let meet = oracles::row_action(f.meet(g)?.rows(), w);
                    let agree = (af[i].is_some() && af[i] == ag[i]).then(|| af[i].clone()).flatten();
                    ensure!(meet == agree, "{f} ∧ {g} at {w}");
                }
                let graph_leq = af.iter().zip(&ag).all(|(a, b)| a.is_none() || a == b);
                ensure!(f.natural_leq(g)? == graph_leq, "{f} ≤ {g}");
                if let Some(j) = f.join(g)? {
                    let aj = action_on(&j, l);
                    for i in 0..aj.len() {
                        ensure!(aj[i] == af[i].clone().or_else(|| ag[i].clone()), "{f} ∨ {g}");
                    }
                } else {
                    ensure!(!f.compatible(g)?, "missing join of compatible {f}, {g}");
                }
            }
            let l = 1 + f.max_len();
            let inv = f.inverse();
            for (w, image) in Word::all_of_length(2, l).iter().zip(action_on(f, l)) {
                if let Some(v) = image {
                    ensure!(oracles::row_action(inv.rows(), &v).as_ref() == Some(w), "inverse of {f} at {w}");
                }
            }
        }
        Ok(())
    });

    rec.check("compatible non-orthogonal polycyclic pairs are comparable (lengths ≤ 3)", || {
        let words: Vec<Word> = (0..=3).flat_map(|l| Word::all_of_length(2, l)).collect();
        let poly: Vec<PolyElement> = words
            .iter()
            .flat_map(|y| words.iter().map(move |x| PolyElement::new(y.clone(), x.clone()).expect("same alphabet")))
            .collect();
        for a in &poly {
            for b in &poly {
                let orthogonal = a.inverse().multiply(b) == PolyElement::Zero && a.multiply(&b.inverse()) == PolyElement::Zero;
                if a.compatible(b) && !orthogonal {
                    ensure!(a.natural_leq(b) || b.natural_leq(a), "{a} and {b}");
                }
            }
        }
        Ok(())
    });

    rec.check("canonical forms are stable under refinement", || {
        for f in &elements {
            let rows: Vec<(Word, Word)> = f
                .rows()
                .iter()
                .flat_map(|(x, y)| (0..2u8).map(move |l| (x.push(l), y.push(l))))
                .collect();
            let refined = CuntzElement::new(2, rows)?;
            ensure!(refined == *f, "refining {f} gives {refined}");
            ensure!(refined.is_gauge() == f.is_gauge(), "gauge flag of {f}");
        }
        Ok(())
    });

    rec.check(format!("gauge elements are closed under the operations ({} elements)", gauge.len()), || {
        for f in &gauge {
            ensure!(f.inverse().is_gauge(), "inverse of {f}");
            for g in &gauge {
                ensure!(f.multiply(g)?.is_gauge() && f.meet(g)?.is_gauge(), "{f}, {g}");
                if let Some(j) = f.join(g)? {
                    ensure!(j.is_gauge(), "{f} ∨ {g}");
                }
            }
        }
        Ok(())
    });

    rec.check("levels 1–3 are isomorphic to I_2, I_4, I_8 and refine by [2]", || {
        for level in 1..=3usize {
            let degree = 1 << level;
            let sigma = StandardMorphism::from_matrix(Signature::new(vec![degree])?, vec![vec![2]])?;
            let elems: Vec<PartialBijection> = pb::enumerate(degree).collect();
            let mut lifted = Vec::with_capacity(elems.len());
            let mut seen = BTreeSet::new();
            for p in &elems {
                let f = CuntzElement::from_symmetric(2, level, p)?;
                ensure!(f.is_gauge() && f.max_len() <= level, "{p} lifts to {f}");
                ensure!(f.to_symmetric(2, level)? == *p, "round trip of {p}");
                let refined = f.to_symmetric(2, level + 1)?;
                let standard = apply_standard(&sigma, &SemisimpleElement::new(vec![p.clone()])?)?;
                ensure!(refined == standard.parts()[0], "refinement of {p}");
                if level < 3 {
                    seen.insert(f.clone());
                    lifted.push(f);
                }
            }
            if level < 3 {
                ensure!(seen.len() == elems.len(), "level {level} lift is not injective");
                for (i, f) in lifted.iter().enumerate() {
                    for (j, g) in lifted.iter().enumerate() {
                        ensure!(f.multiply(g)?.to_symmetric(2, level)? == elems[i].compose(&elems[j])?, "product");
                    }
                }
            } else {
                for _ in 0..20_000 {
                    let (p, q) = (random_partial_bijection(rng, 8), random_partial_bijection(rng, 8));
                    let (f, g) = (CuntzElement::from_symmetric(2, 3, &p)?, CuntzElement::from_symmetric(2, 3, &q)?);
                    ensure!(f.multiply(&g)?.to_symmetric(2, 3)? == p.compose(&q)?, "product {p}, {q}");
                    ensure!(f.meet(&g)?.to_symmetric(2, 3)? == p.meet(&q)?, "meet {p}, {q}");
                }
            }
        }
        Ok(())
    });

    rec.check("dyadic mean on level 3: invariant, good, reflects 𝒟, linear in k/8", || {
        let view = DyadicView::new(2, 3)?;
        let report = invariant_mean_check(&view, |e| e.dyadic_mean(Side::Domain).expect("gauge idempotent"))?;
        ensure!(report.all_pass(), "{report:?}");
        let q = quotient_mv(&view)?;
        let eighths: Vec<BigRational> = (0..=8).map(|k| BigRational::new(k.into(), 8.into())).collect();
        ensure!(q.keys == eighths, "classes {:?}", q.keys);
        let mv = q.mv()?;
        for i in 0..mv.len() {
            for j in 0..mv.len() {
                ensure!(mv.leq(i, j) == (q.keys[i] <= q.keys[j]), "order of {} and {}", q.keys[i], q.keys[j]);
            }
        }
        ensure!(mv_isomorphic(mv.base(), lukasiewicz(8)?.base()).is_some(), "not L_9");
        ensure!(q.keys[0].is_zero(), "zero class");
        Ok(())
    });
}

fn graph_inverse_suite(rec: &mut Recorder) {
    let diagrams = [
        ("car(1)", BratteliDiagram::car(1)),
        ("car(2)", BratteliDiagram::car(2)),
        ("car(3)", BratteliDiagram::car(3)),
        ("pascal(3)", BratteliDiagram::pascal(3)),
        ("irregular", BratteliDiagram::irregular()),
    ];
    for (name, d) in &diagrams {
        let g = GraphInverseMonoid::new(d);
        rec.check(format!("{name}: commuting square with the standard morphisms"), || {
            for level in 0..d.depth() {
                let sigma = d.level_morphism(level)?;
                for s in sigma.source().elements() {
                    let lifted = g.from_semisimple(level, &s)?;
                    ensure!(g.to_semisimple(level, &lifted)? == s, "path bijection at {s}");
                    let refined = g.epsilon_level_map(level, &lifted)?;
                    ensure!(g.to_semisimple(level + 1, &refined)? == apply_standard(&sigma, &s)?, "level {level} at {s}");
                }
            }
            Ok(())
        });

        rec.check(format!("{name}: lengthened idempotents are orthogonal covers"), || {
            for e in g.idempotents().iter().filter(|e| !e.is_zero()) {
                let PathPair::Pair { x, .. } = e else { continue };
                if x.len() == d.depth() {
                    continue;
                }
                let cover = g.lengthen_cover(e)?;
                ensure!(g.is_cover(e, &cover), "cover of {e}");
                for (i, a) in cover.iter().enumerate() {
                    for b in &cover[i + 1..] {
                        ensure!(a.multiply(b).is_zero() && b.multiply(a).is_zero(), "{a} and {b} overlap");
                    }
                }
            }
            Ok(())
        });

        rec.check(format!("{name}: E*-unitary, combinatorial, unambiguous, Hasse diagram"), || {
            ensure!(g.is_e_star_unitary(), "not E*-unitary");
            ensure!(g.is_combinatorial(), "not combinatorial");
            ensure!(g.is_unambiguous(), "idempotent order is ambiguous");
            ensure!(g.is_completely_semisimple(), "not completely semisimple");
            ensure!(g.j_class_hasse() == g.diagram_edges(), "Hasse diagram differs from the diagram");
            Ok(())
        });
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn oracle_counts() {
        assert_eq!(oracles::symmetric_inverse_order(3), 34);
        assert_eq!(oracles::symmetric_inverse_order(4), 209);
        assert!(oracles::divides_by_search(3, 12));
        assert!(!oracles::divides_by_search(5, 12));
    }

    #[test]
    fn unknown_filter_is_rejected() {
        let options = SelftestOptions {
            filter: Some("nope".into()),
            ..SelftestOptions::default()
        };
        assert!(run_selftest(&options).is_err());
    }

    #[test]
    fn corrupted_fixture_names_the_check() {
        let mut options = SelftestOptions::default();
        options.fixtures.push(("broken".into(), r#"{"levels":[1],"mults":[[[0]]]}"#.into()));
        let checks = run_suite("bratteli", &options).unwrap();
        let failed: Vec<&Check> = checks.iter().filter(|c| !c.passed).collect();
        assert_eq!(failed.len(), 1);
        assert_eq!(failed[0].name, "fixture broken parses");
    }
}

//! The inverse monoid of pairs of root paths in a Bratteli diagram,
//! truncated at the diagram depth, and its agreement with the level
//! standard morphisms.
//!
//! Paths run from the root downwards and are stored as edge indices per
//! level. Edges between level `i` and `i + 1` are numbered by target
//! vertex, then source vertex, then copy. Paths ending at a vertex are
//! ordered lexicographically when read from the vertex back to the root;
//! with this numbering that order is exactly the block layout of the
//! level standard morphisms, so the `k`-th path is letter `k`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::bratteli::BratteliDiagram;
use crate::error::{Error, Result};
use crate::partial_bijections::PartialBijection;
use crate::semisimple::SemisimpleElement;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub source: usize,
    pub target: usize,
    pub copy: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Path {
    edges: Vec<usize>,
}

impl Path {
    pub fn root() -> Self {
        Path { edges: Vec::new() }
    }

    pub fn edges(&self) -> &[usize] {
        &self.edges
    }

    /// The level the path ends at.
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    fn extended(&self, edge: usize) -> Path {
        let mut edges = self.edges.clone();
        edges.push(edge);
        Path { edges }
    }

    fn concat(&self, tail: &[usize]) -> Path {
        let mut edges = self.edges.clone();
        edges.extend_from_slice(tail);
        Path { edges }
    }

    fn strip_prefix(&self, prefix: &Path) -> Option<&[usize]> {
        self.edges.strip_prefix(prefix.edges.as_slice())
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.edges.iter().map(|e| e.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// `Pair { x, y }` stands for `x y⁻¹`, sending `y z` to `x z`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PathPair {
    Zero,
    Pair { x: Path, y: Path },
}

impl PathPair {
    pub fn idempotent(x: Path) -> Self {
        PathPair::Pair { y: x.clone(), x }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, PathPair::Zero)
    }

    pub fn inverse(&self) -> Self {
        match self {
            PathPair::Zero => PathPair::Zero,
            PathPair::Pair { x, y } => PathPair::Pair { x: y.clone(), y: x.clone() },
        }
    }

    pub fn is_idempotent(&self) -> bool {
        match self {
            PathPair::Zero => true,
            PathPair::Pair { x, y } => x == y,
        }
    }

    /// Path length; zero has no weight.
    pub fn weight(&self) -> Option<usize> {
        match self {
            PathPair::Zero => None,
            PathPair::Pair { x, .. } => Some(x.len()),
        }
    }

    /// `x y⁻¹ · u v⁻¹` is `x z v⁻¹` if `u = y z`, `x (v z)⁻¹` if `y = u z`,
    /// else zero.
    pub fn multiply(&self, other: &Self) -> Self {
        let (PathPair::Pair { x, y }, PathPair::Pair { x: u, y: v }) = (self, other) else {
            return PathPair::Zero;
        };
        if let Some(z) = u.strip_prefix(y) {
            PathPair::Pair { x: x.concat(z), y: v.clone() }
        } else if let Some(z) = y.strip_prefix(u) {
            PathPair::Pair { x: x.clone(), y: v.concat(z) }
        } else {
            PathPair::Zero
        }
    }

    /// `x y⁻¹ ≤ u v⁻¹` iff `x = u p` and `y = v p`.
    pub fn natural_leq(&self, other: &Self) -> bool {
        match (self, other) {
            (PathPair::Zero, _) => true,
            (_, PathPair::Zero) => false,
            (PathPair::Pair { x, y }, PathPair::Pair { x: u, y: v }) => {
                matches!((x.strip_prefix(u), y.strip_prefix(v)), (Some(p), Some(q)) if p == q)
            }
        }
    }

    pub fn domain_idem(&self) -> Self {
        self.inverse().multiply(self)
    }

    pub fn range_idem(&self) -> Self {
        self.multiply(&self.inverse())
    }
}

impl fmt::Display for PathPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PathPair::Zero => f.write_str("0"),
            PathPair::Pair { x, y } => write!(f, "{x}·{y}⁻¹"),
        }
    }
}

/// The truncated path-pair monoid of a diagram.
#[derive(Debug, Clone)]
pub struct GraphInverseMonoid {
    diagram: BratteliDiagram,
    /// `edges[i]`: edges from level `i` to level `i + 1`.
    edges: Vec<Vec<Edge>>,
}

impl GraphInverseMonoid {
    pub fn new(diagram: &BratteliDiagram) -> Self {
        let edges = (0..diagram.depth())
            .map(|i| {
                let m = diagram.mult(i).expect("level in range");
                let mut list = Vec::new();
                for (target, row) in m.iter().enumerate() {
                    for (source, &count) in row.iter().enumerate() {
                        for copy in 0..count {
                            list.push(Edge { source, target, copy });
                        }
                    }
                }
                list
            })
            .collect();
        GraphInverseMonoid {
            diagram: diagram.clone(),
            edges,
        }
    }

    pub fn diagram(&self) -> &BratteliDiagram {
        &self.diagram
    }

    pub fn edges(&self, level: usize) -> Result<&[Edge]> {
        self.edges
            .get(level)
            .map(Vec::as_slice)
            .ok_or(Error::LevelOutOfRange {
                level,
                depth: self.diagram.depth(),
            })
    }

    pub fn path(&self, edges: Vec<usize>) -> Result<Path> {
        if edges.len() > self.diagram.depth() {
            return Err(Error::LevelOutOfRange {
                level: edges.len(),
                depth: self.diagram.depth(),
            });
        }
        let mut at = 0;
        for (level, &e) in edges.iter().enumerate() {
            let edge = self.edges[level]
                .get(e)
                .ok_or_else(|| Error::InvalidDiagram(format!("no edge {e} below level {level}")))?;
            if edge.source != at {
                return Err(Error::InvalidDiagram(format!(
                    "edge {e} below level {level} does not start at vertex {at}"
                )));
            }
            at = edge.target;
        }
        Ok(Path { edges })
    }

    pub fn pair(&self, x: Path, y: Path) -> Result<PathPair> {
        if x.len() != y.len() || self.end_vertex(&x) != self.end_vertex(&y) {
            return Err(Error::InvalidDiagram(format!("{x} and {y} end at different vertices")));
        }
        Ok(PathPair::Pair { x, y })
    }

    /// Vertex (within its level) at which the path ends.
    pub fn end_vertex(&self, p: &Path) -> usize {
        p.edges
            .last()
            .map_or(0, |&e| self.edges[p.len() - 1][e].target)
    }

    /// Position of the path among the paths ending at the same vertex.
    pub fn letter(&self, p: &Path) -> usize {
        let mut idx = 0;
        for (level, &e) in p.edges.iter().enumerate() {
            let edge = self.edges[level][e];
            let sizes = self.diagram.size_vector(level).expect("level in range");
            let m = &self.diagram.mult(level).expect("level in range")[edge.target];
            let offset: usize = (0..edge.source).map(|v| m[v] * sizes[v]).sum();
            idx += offset + edge.copy * sizes[edge.source];
        }
        idx
    }

    /// Paths from the root to each vertex of the level, in letter order.
    pub fn paths_to(&self, level: usize) -> Result<Vec<Vec<Path>>> {
        let mut paths = vec![vec![Path::root()]];
        for i in 0..level {
            let edges = self.edges(i)?;
            let count = self.diagram.vertex_count(i + 1)?;
            let mut next = vec![Vec::new(); count];
            for (e, edge) in edges.iter().enumerate() {
                for p in &paths[edge.source] {
                    next[edge.target].push(p.extended(e));
                }
            }
            paths = next;
        }
        Ok(paths)
    }

    /// Every element of the truncated monoid, zero first.
    pub fn elements(&self) -> Vec<PathPair> {
        let mut out = vec![PathPair::Zero];
        for level in 0..=self.diagram.depth() {
            for paths in self.paths_to(level).expect("level in range") {
                for x in &paths {
                    for y in &paths {
                        out.push(PathPair::Pair { x: x.clone(), y: y.clone() });
                    }
                }
            }
        }
        out
    }

    pub fn idempotents(&self) -> Vec<PathPair> {
        self.elements().into_iter().filter(PathPair::is_idempotent).collect()
    }

    /// `{(x e, x e)}` over the edges `e` leaving the end vertex of `x`.
    pub fn lengthen_cover(&self, e: &PathPair) -> Result<Vec<PathPair>> {
        let PathPair::Pair { x, y } = e else {
            return Err(Error::Precondition("cannot lengthen zero".into()));
        };
        if x != y {
            return Err(Error::NotIdempotent);
        }
        let v = self.end_vertex(x);
        let edges = self.edges(x.len())?;
        Ok(edges
            .iter()
            .enumerate()
            .filter(|(_, edge)| edge.source == v)
            .map(|(i, _)| PathPair::idempotent(x.extended(i)))
            .collect())
    }

    /// Pairwise orthogonal, below `e`, and meeting every nonzero
    /// idempotent below `e`.
    pub fn is_cover(&self, e: &PathPair, cover: &[PathPair]) -> bool {
        let all_below = cover.iter().all(|c| c.natural_leq(e) && !c.is_zero());
        let orthogonal = cover.iter().enumerate().all(|(i, a)| {
            cover[i + 1..].iter().all(|b| a.multiply(b).is_zero())
        });
        let meets = self
            .idempotents()
            .iter()
            .filter(|f| !f.is_zero() && f.natural_leq(e))
            .all(|f| cover.iter().any(|c| !c.multiply(f).is_zero()));
        all_below && orthogonal && meets
    }

    /// The one-step refinements `(x e, y e)` of a nonzero element.
    pub fn epsilon(&self, s: &PathPair) -> Result<Vec<PathPair>> {
        let PathPair::Pair { x, y } = s else {
            return Ok(Vec::new());
        };
        let v = self.end_vertex(x);
        let edges = self.edges(x.len())?;
        Ok(edges
            .iter()
            .enumerate()
            .filter(|(_, edge)| edge.source == v)
            .map(|(i, _)| PathPair::Pair { x: x.extended(i), y: y.extended(i) })
            .collect())
    }

    /// Applies [`epsilon`](Self::epsilon) to every term of an orthogonal
    /// join of weight-`level` elements.
    pub fn epsilon_level_map(&self, level: usize, join: &[PathPair]) -> Result<Vec<PathPair>> {
        if level >= self.diagram.depth() {
            return Err(Error::LevelOutOfRange {
                level,
                depth: self.diagram.depth(),
            });
        }
        let mut out = Vec::new();
        for s in join {
            if s.weight().is_some_and(|w| w != level) {
                return Err(Error::Precondition(format!("{s} does not have weight {level}")));
            }
            out.extend(self.epsilon(s)?);
        }
        out.sort();
        Ok(out)
    }

    /// The level-`level` monoid element whose component `v` sends letter
    /// `letter(y)` to `letter(x)` for every term `x y⁻¹` ending at `v`.
    pub fn to_semisimple(&self, level: usize, join: &[PathPair]) -> Result<SemisimpleElement> {
        let sizes = self.diagram.size_vector(level)?;
        let mut images: Vec<Vec<Option<usize>>> = sizes.iter().map(|&s| vec![None; s]).collect();
        for s in join {
            let PathPair::Pair { x, y } = s else { continue };
            if x.len() != level {
                return Err(Error::Precondition(format!("{s} does not have weight {level}")));
            }
            let slot = &mut images[self.end_vertex(x)][self.letter(y)];
            if slot.is_some() {
                return Err(Error::Precondition("terms of the join are not orthogonal".into()));
            }
            *slot = Some(self.letter(x));
        }
        let parts = images
            .into_iter()
            .map(PartialBijection::from_images)
            .collect::<Result<Vec<_>>>()
            .map_err(|_| Error::Precondition("terms of the join are not orthogonal".into()))?;
        SemisimpleElement::new(parts)
    }

    pub fn from_semisimple(&self, level: usize, s: &SemisimpleElement) -> Result<Vec<PathPair>> {
        let sig = self.diagram.level_monoid_signature(level)?;
        if s.signature() != sig {
            return Err(Error::SignatureMismatch(s.signature().sizes().to_vec(), sig.sizes().to_vec()));
        }
        let paths = self.paths_to(level)?;
        let mut out = Vec::new();
        for (v, part) in s.parts().iter().enumerate() {
            for (j, i) in part.pairs() {
                out.push(PathPair::Pair {
                    x: paths[v][i - 1].clone(),
                    y: paths[v][j - 1].clone(),
                });
            }
        }
        out.sort();
        Ok(out)
    }

    /// `s ≥ e ≠ 0` with `e` idempotent forces `s` idempotent.
    pub fn is_e_star_unitary(&self) -> bool {
        let elements = self.elements();
        let idems: Vec<&PathPair> = elements.iter().filter(|e| e.is_idempotent() && !e.is_zero()).collect();
        elements
            .iter()
            .all(|s| s.is_idempotent() || !idems.iter().any(|e| e.natural_leq(s)))
    }

    /// Equal domain and range idempotents force equality.
    pub fn is_combinatorial(&self) -> bool {
        let mut seen: BTreeMap<(PathPair, PathPair), PathPair> = BTreeMap::new();
        for s in self.elements() {
            let key = (s.domain_idem(), s.range_idem());
            if let Some(t) = seen.get(&key) {
                if *t != s {
                    return false;
                }
            } else {
                seen.insert(key, s);
            }
        }
        true
    }

    /// Idempotents with a common nonzero lower bound are comparable.
    pub fn is_unambiguous(&self) -> bool {
        let idems: Vec<PathPair> = self.idempotents().into_iter().filter(|e| !e.is_zero()).collect();
        idems.iter().all(|e| {
            idems.iter().all(|f| {
                let meet = e.multiply(f);
                meet.is_zero() || e.natural_leq(f) || f.natural_leq(e)
            })
        })
    }

    /// `e 𝒟 f ≤ e` forces `e = f` for idempotents.
    pub fn is_completely_semisimple(&self) -> bool {
        let elements = self.elements();
        elements.iter().all(|s| {
            let (d, r) = (s.domain_idem(), s.range_idem());
            !(r.natural_leq(&d) && r != d)
        })
    }

    /// Covering pairs between the nonzero `𝒥`-classes, each class named by
    /// the `(level, vertex)` of one of its idempotents.
    pub fn j_class_hasse(&self) -> BTreeSet<((usize, usize), (usize, usize))> {
        let idems: Vec<PathPair> = self.idempotents().into_iter().filter(|e| !e.is_zero()).collect();
        let label = |e: &PathPair| match e {
            PathPair::Pair { x, .. } => (x.len(), self.end_vertex(x)),
            PathPair::Zero => unreachable!(),
        };
        // 𝒟-classes from the elements linking domain and range idempotents.
        let mut class: BTreeMap<PathPair, usize> = BTreeMap::new();
        let mut labels: Vec<(usize, usize)> = Vec::new();
        for s in self.elements().iter().filter(|s| !s.is_zero()) {
            let (d, r) = (s.domain_idem(), s.range_idem());
            match (class.get(&d).copied(), class.get(&r).copied()) {
                (Some(a), Some(b)) if a != b => {
                    for c in class.values_mut() {
                        if *c == b {
                            *c = a;
                        }
                    }
                }
                (Some(_), Some(_)) => {}
                (Some(a), None) => {
                    class.insert(r, a);
                }
                (None, Some(b)) => {
                    class.insert(d, b);
                }
                (None, None) => {
                    class.insert(d.clone(), labels.len());
                    class.insert(r, labels.len());
                    labels.push(label(&d));
                }
            }
        }
        let used: BTreeSet<usize> = class.values().copied().collect();
        let k = labels.len();
        let mut below = vec![vec![false; k]; k];
        for e in &idems {
            for f in &idems {
                if e.natural_leq(f) {
                    below[class[e]][class[f]] = true;
                }
            }
        }
        let mut covers = BTreeSet::new();
        for &a in &used {
            for &b in &used {
                if a == b || !below[a][b] {
                    continue;
                }
                let between = used.iter().any(|&c| c != a && c != b && below[a][c] && below[c][b]);
                if !between {
                    covers.insert((labels[b], labels[a]));
                }
            }
        }
        covers
    }

    /// The covering pairs the diagram itself predicts: `(v at level i)`
    /// above `(w at level i + 1)` whenever an edge joins them.
    pub fn diagram_edges(&self) -> BTreeSet<((usize, usize), (usize, usize))> {
        self.edges
            .iter()
            .enumerate()
            .flat_map(|(i, es)| es.iter().map(move |e| ((i, e.source), (i + 1, e.target))))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semisimple::apply_standard;

    #[test]
    fn multiplication_and_weight() {
        let g = GraphInverseMonoid::new(&BratteliDiagram::car(3));
        let x = g.path(vec![0]).unwrap();
        let y = g.path(vec![1]).unwrap();
        let z = g.path(vec![1, 0]).unwrap();
        let e = PathPair::idempotent(x.clone());
        assert_eq!(e.multiply(&e), e);
        let xy = g.pair(x.clone(), y.clone()).unwrap();
        let yx = g.pair(y.clone(), x.clone()).unwrap();
        assert_eq!(xy.multiply(&yx), e);
        let deep = PathPair::idempotent(z);
        let prod = xy.multiply(&deep);
        assert_eq!(prod.weight(), Some(2));
        assert_eq!(prod, g.pair(g.path(vec![0, 0]).unwrap(), g.path(vec![1, 0]).unwrap()).unwrap());
        assert!(g.path(vec![2]).is_err());
    }

    #[test]
    fn order() {
        let g = GraphInverseMonoid::new(&BratteliDiagram::car(2));
        let s = g.pair(g.path(vec![0]).unwrap(), g.path(vec![1]).unwrap()).unwrap();
        let t = g.pair(g.path(vec![0, 1]).unwrap(), g.path(vec![1, 1]).unwrap()).unwrap();
        assert!(t.natural_leq(&s));
        assert!(!s.natural_leq(&t));
    }

    #[test]
    fn letters_follow_block_layout() {
        let g = GraphInverseMonoid::new(&BratteliDiagram::irregular());
        for level in 0..=3 {
            for paths in g.paths_to(level).unwrap() {
                for (k, p) in paths.iter().enumerate() {
                    assert_eq!(g.letter(p), k);
                }
            }
        }
    }

    #[test]
    fn covers() {
        let car = GraphInverseMonoid::new(&BratteliDiagram::car(3));
        let e = PathPair::idempotent(car.path(vec![0]).unwrap());
        let cover = car.lengthen_cover(&e).unwrap();
        assert_eq!(cover.len(), 2);
        assert!(car.is_cover(&e, &cover));
        let leaf = PathPair::idempotent(car.path(vec![0, 0, 0]).unwrap());
        assert!(car.lengthen_cover(&leaf).is_err());

        let p = GraphInverseMonoid::new(&BratteliDiagram::pascal(3));
        // Vertex 1 of level 1 has a single edge down.
        let x = p.path(vec![1]).unwrap();
        let cover = p.lengthen_cover(&PathPair::idempotent(x)).unwrap();
        assert_eq!(cover.len(), 1);
    }

    #[test]
    fn epsilon_on_car() {
        let g = GraphInverseMonoid::new(&BratteliDiagram::car(3));
        let one = PathPair::idempotent(Path::root());
        let image = g.epsilon_level_map(0, &[one]).unwrap();
        let s = g.to_semisimple(1, &image).unwrap();
        assert_eq!(s, g.diagram().level_monoid_signature(1).unwrap().identity());
    }

    #[test]
    fn commuting_square_small() {
        for d in [BratteliDiagram::car(2), BratteliDiagram::pascal(3)] {
            let g = GraphInverseMonoid::new(&d);
            for level in 0..d.depth() {
                let sigma = d.level_morphism(level).unwrap();
                for s in sigma.source().elements() {
                    let pairs = g.from_semisimple(level, &s).unwrap();
                    assert_eq!(g.to_semisimple(level, &pairs).unwrap(), s);
                    let lifted = g.epsilon_level_map(level, &pairs).unwrap();
                    assert_eq!(
                        g.to_semisimple(level + 1, &lifted).unwrap(),
                        apply_standard(&sigma, &s).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn structure() {
        let g = GraphInverseMonoid::new(&BratteliDiagram::pascal(2));
        assert!(g.is_e_star_unitary());
        assert!(g.is_combinatorial());
        assert!(g.is_unambiguous());
        assert!(g.is_completely_semisimple());
        assert_eq!(g.j_class_hasse(), g.diagram_edges());
    }
}

//! Bratteli diagrams, their level monoids, and the AF inverse monoid
//! truncated at the diagram's finite depth.
//!
//! Level 0 is the root. `mults[i]` is the multiplicity matrix from level
//! `i` to level `i + 1`, rows indexed by level-`(i+1)` vertices and columns
//! by level-`i` vertices, so `mults[0]` has a single column.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::semisimple::{SemisimpleElement, Signature, StandardMorphism};

/// On-disk JSON form: `{"levels": [c1, ...], "mults": [M0, M1, ...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramFile {
    pub levels: Vec<usize>,
    pub mults: Vec<Vec<Vec<usize>>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BratteliDiagram {
    levels: Vec<usize>,
    mults: Vec<Vec<Vec<usize>>>,
    sizes: Vec<Vec<usize>>,
}

impl BratteliDiagram {
    pub fn new(levels: Vec<usize>, mults: Vec<Vec<Vec<usize>>>) -> Result<Self> {
        if levels.is_empty() {
            return Err(Error::InvalidDiagram("no levels below the root".into()));
        }
        if mults.len() != levels.len() {
            return Err(Error::InvalidDiagram(format!(
                "{} levels need {} matrices, got {}",
                levels.len(),
                levels.len(),
                mults.len()
            )));
        }
        if let Some(i) = levels.iter().position(|&c| c == 0) {
            return Err(Error::InvalidDiagram(format!("level {} is empty", i + 1)));
        }
        let mut above = 1;
        for (i, m) in mults.iter().enumerate() {
            if m.len() != levels[i] {
                return Err(Error::InvalidDiagram(format!(
                    "M{i} has {} rows, level {} has {} vertices",
                    m.len(),
                    i + 1,
                    levels[i]
                )));
            }
            for (r, row) in m.iter().enumerate() {
                if row.len() != above {
                    return Err(Error::InvalidDiagram(format!(
                        "M{i} row {} has {} entries, level {i} has {above} vertices",
                        r + 1,
                        row.len()
                    )));
                }
                if row.iter().all(|&x| x == 0) {
                    return Err(Error::InvalidDiagram(format!(
                        "vertex {} of level {} is not the target of an edge",
                        r + 1,
                        i + 1
                    )));
                }
            }
            for c in 0..above {
                if m.iter().all(|row| row[c] == 0) {
                    return Err(Error::InvalidDiagram(format!(
                        "vertex {} of level {i} is not the source of an edge",
                        c + 1
                    )));
                }
            }
            above = levels[i];
        }
        let mut sizes = vec![vec![1]];
        for m in &mults {
            let prev = sizes.last().unwrap();
            let next = m
                .iter()
                .map(|row| row.iter().zip(prev).map(|(a, b)| a * b).sum())
                .collect();
            sizes.push(next);
        }
        Ok(BratteliDiagram { levels, mults, sizes })
    }

    pub fn from_file(file: DiagramFile) -> Result<Self> {
        Self::new(file.levels, file.mults)
    }

    pub fn to_file(&self) -> DiagramFile {
        DiagramFile {
            levels: self.levels.clone(),
            mults: self.mults.clone(),
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: DiagramFile =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_file(file)
    }

    /// Compact JSON, the canonical serialization.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_file()).expect("diagram serializes")
    }

    /// `depth`: number of levels below the root.
    pub fn depth(&self) -> usize {
        self.levels.len()
    }

    /// Vertex count of a level (the root level has one vertex).
    pub fn vertex_count(&self, level: usize) -> Result<usize> {
        self.check_level(level)?;
        Ok(if level == 0 { 1 } else { self.levels[level - 1] })
    }

    /// Multiplicity matrix from `level` to `level + 1`.
    pub fn mult(&self, level: usize) -> Result<&[Vec<usize>]> {
        if level >= self.depth() {
            return Err(Error::LevelOutOfRange {
                level,
                depth: self.depth(),
            });
        }
        Ok(&self.mults[level])
    }

    fn check_level(&self, level: usize) -> Result<()> {
        if level > self.depth() {
            return Err(Error::LevelOutOfRange {
                level,
                depth: self.depth(),
            });
        }
        Ok(())
    }

    /// Number of root paths to each vertex of the level.
    pub fn size_vector(&self, level: usize) -> Result<&[usize]> {
        self.check_level(level)?;
        Ok(&self.sizes[level])
    }

    pub fn level_monoid_signature(&self, level: usize) -> Result<Signature> {
        Signature::new(self.size_vector(level)?.to_vec())
    }

    pub fn level_morphism(&self, level: usize) -> Result<StandardMorphism> {
        let m = self.mult(level)?.to_vec();
        StandardMorphism::new(
            self.level_monoid_signature(level)?,
            self.level_monoid_signature(level + 1)?,
            m,
        )
    }

    pub fn element(&self, level: usize, value: SemisimpleElement) -> Result<AfElement<'_>> {
        let sig = self.level_monoid_signature(level)?;
        if value.signature() != sig {
            return Err(Error::SignatureMismatch(
                value.signature().sizes().to_vec(),
                sig.sizes().to_vec(),
            ));
        }
        Ok(AfElement {
            diagram: self,
            level,
            value,
        })
    }

    pub fn identity(&self) -> AfElement<'_> {
        AfElement {
            diagram: self,
            level: 0,
            value: Signature::new(vec![1]).unwrap().identity(),
        }
    }

    pub fn zero(&self) -> AfElement<'_> {
        AfElement {
            diagram: self,
            level: 0,
            value: Signature::new(vec![1]).unwrap().zero(),
        }
    }

    /// The CAR diagram: one vertex per level, two edges between levels.
    pub fn car(depth: usize) -> Self {
        Self::new(vec![1; depth], vec![vec![vec![2]]; depth]).expect("CAR diagram is valid")
    }

    /// Two vertices per level; level sizes (1,1), (2,1), (3,2), (5,3), ...
    pub fn pascal(depth: usize) -> Self {
        let mut mults = vec![vec![vec![1], vec![1]]];
        mults.extend(std::iter::repeat_n(vec![vec![1, 1], vec![1, 0]], depth.saturating_sub(1)));
        Self::new(vec![2; depth], mults).expect("two-vertex diagram is valid")
    }

    /// An irregular three-level diagram with sizes (1,2), (1,2,3), (3,5).
    pub fn irregular() -> Self {
        Self::new(
            vec![2, 3, 2],
            vec![
                vec![vec![1], vec![2]],
                vec![vec![1, 0], vec![0, 1], vec![1, 1]],
                vec![vec![1, 1, 0], vec![0, 1, 1]],
            ],
        )
        .expect("irregular diagram is valid")
    }
}

/// An element of the truncated direct limit: a level and a value of the
/// level monoid. Elements are pushed forward lazily when combined.
#[derive(Debug, Clone)]
pub struct AfElement<'d> {
    diagram: &'d BratteliDiagram,
    level: usize,
    value: SemisimpleElement,
}

impl<'d> AfElement<'d> {
    pub fn level(&self) -> usize {
        self.level
    }

    pub fn value(&self) -> &SemisimpleElement {
        &self.value
    }

    pub fn diagram(&self) -> &'d BratteliDiagram {
        self.diagram
    }

    fn same_diagram(&self, other: &Self) -> Result<()> {
        if std::ptr::eq(self.diagram, other.diagram) || self.diagram == other.diagram {
            Ok(())
        } else {
            Err(Error::DiagramMismatch)
        }
    }

    pub fn push_to_level(&self, level: usize) -> Result<AfElement<'d>> {
        if level < self.level {
            return Err(Error::BackwardPush {
                from: self.level,
                to: level,
            });
        }
        self.diagram.check_level(level)?;
        let mut value = self.value.clone();
        for l in self.level..level {
            value = self.diagram.level_morphism(l)?.apply(&value)?;
        }
        Ok(AfElement {
            diagram: self.diagram,
            level,
            value,
        })
    }

    fn align(&self, other: &Self) -> Result<(SemisimpleElement, SemisimpleElement, usize)> {
        self.same_diagram(other)?;
        let level = self.level.max(other.level);
        Ok((
            self.push_to_level(level)?.value,
            other.push_to_level(level)?.value,
            level,
        ))
    }

    fn at(&self, level: usize, value: SemisimpleElement) -> AfElement<'d> {
        AfElement {
            diagram: self.diagram,
            level,
            value,
        }
    }

    pub fn af_equal(&self, other: &Self) -> Result<bool> {
        let (a, b, _) = self.align(other)?;
        Ok(a == b)
    }

    pub fn af_multiply(&self, other: &Self) -> Result<AfElement<'d>> {
        let (a, b, level) = self.align(other)?;
        Ok(self.at(level, a.multiply(&b)?))
    }

    pub fn af_meet(&self, other: &Self) -> Result<AfElement<'d>> {
        let (a, b, level) = self.align(other)?;
        Ok(self.at(level, a.meet(&b)?))
    }

    pub fn af_join(&self, other: &Self) -> Result<Option<AfElement<'d>>> {
        let (a, b, level) = self.align(other)?;
        Ok(a.join(&b)?.map(|v| self.at(level, v)))
    }

    pub fn af_inverse(&self) -> AfElement<'d> {
        self.at(self.level, self.value.inverse())
    }

    pub fn af_natural_leq(&self, other: &Self) -> Result<bool> {
        let (a, b, _) = self.align(other)?;
        a.natural_leq(&b)
    }

    pub fn is_idempotent(&self) -> bool {
        self.value.is_idempotent()
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    /// Invertible iff every component is a full permutation.
    pub fn is_unit(&self) -> bool {
        self.value.is_unit()
    }
}

impl PartialEq for AfElement<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.af_equal(other).unwrap_or(false)
    }
}

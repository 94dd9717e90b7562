//! The equivalence `~` on paths generated by minimal relations, the poset of
//! clean classes, and the coherence and compatibility conditions.
//!
//! Only paths of length below the bound `m` are tracked. A rule step whose
//! other side would reach length `m` lands in `F^m ⊆ I`, so it marks the
//! tracked side's class as touching the ideal instead of merging.

mod family;
mod sigma;

pub use family::{find_compatible_family, CompatibleFamily, Side};
pub use sigma::AssociatedPoset;

use std::collections::{BTreeMap, HashMap};

use crate::algebra::blocks::{find, union};
use crate::algebra::{BoundAlgebra, MinimalRelationBlocks};
use crate::error::Result;
use crate::linalg::Field;
use crate::quiver::{Path, Quiver};

/// Equivalence classes of paths of length `< m`.
#[derive(Clone, Debug)]
pub struct PathClasses {
    quiver: Quiver,
    paths: Vec<Path>,
    index: HashMap<Path, usize>,
    in_ideal: Vec<bool>,
    class_of: Vec<usize>,
    members: Vec<Vec<usize>>,
    touches_ideal: Vec<bool>,
    /// A path in `I` equivalent to the class members, when the class touches `I`.
    evidence: Vec<Option<Path>>,
}

/// Outcome of the coherence check. On failure `witness` holds a path in `I`
/// and an equivalent path outside `I`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoherenceReport {
    pub coherent: bool,
    pub witness: Option<(Path, Path)>,
}

struct Builder<'a> {
    q: &'a Quiver,
    bound: usize,
    index: &'a HashMap<Path, usize>,
    parent: Vec<usize>,
    flag: Vec<bool>,
    evidence: Vec<Option<Path>>,
}

impl Builder<'_> {
    fn root(&mut self, i: usize) -> usize {
        find(&mut self.parent, i)
    }

    fn merge(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.root(a), self.root(b));
        if ra == rb {
            return false;
        }
        let flag = self.flag[ra] || self.flag[rb];
        let evidence = self.evidence[ra].clone().or_else(|| self.evidence[rb].clone());
        union(&mut self.parent, ra, rb);
        let r = self.root(ra);
        self.flag[r] = flag;
        self.evidence[r] = evidence;
        true
    }

    fn mark(&mut self, i: usize, evidence: Path) -> bool {
        let r = self.root(i);
        if self.flag[r] {
            return false;
        }
        self.flag[r] = true;
        self.evidence[r] = Some(evidence);
        true
    }

    /// One-arrow extensions `(a·p, a)` on the left and `(p·a, a)` on the right.
    fn extensions(&self, p: &Path) -> Vec<(bool, Path)> {
        let mut out = Vec::new();
        for a in self.q.arrows_into(p.source()) {
            out.push((true, self.q.arrow_path(a)));
        }
        for a in self.q.arrows_from(p.target()) {
            out.push((false, self.q.arrow_path(a)));
        }
        out
    }

    fn extend(p: &Path, left: bool, arrow: &Path) -> Path {
        if left {
            arrow.concat(p)
        } else {
            p.concat(arrow)
        }
        .expect("extension arrows compose")
    }

    fn tracked(&self, p: &Path) -> Option<usize> {
        (p.len() < self.bound).then(|| self.index[p])
    }
}

impl PathClasses {
    /// Closes the block seeds under two-sided concatenation.
    pub fn compute<F: Field>(a: &BoundAlgebra<F>, blocks: &MinimalRelationBlocks) -> Result<Self> {
        let q = a.quiver();
        let bound = a.bound();
        let paths = q.enumerate_paths(bound - 1, None, None)?;
        let index: HashMap<Path, usize> = paths.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let in_ideal: Vec<bool> = paths.iter().map(|p| a.is_path_in_ideal(p)).collect();
        let n = paths.len();
        let mut b = Builder {
            q,
            bound,
            index: &index,
            parent: (0..n).collect(),
            flag: vec![false; n],
            evidence: vec![None; n],
        };

        for block in blocks.nontrivial() {
            for pair in block.windows(2) {
                b.merge(index[&pair[0]], index[&pair[1]]);
            }
        }
        for (i, p) in paths.iter().enumerate() {
            if in_ideal[i] {
                b.mark(i, p.clone());
            }
        }

        loop {
            let mut changed = false;
            let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
            for i in 0..n {
                let r = b.root(i);
                groups.entry(r).or_default().push(i);
            }
            for (root, group) in &groups {
                if b.flag[*root] {
                    let evidence = b.evidence[*root].clone().expect("flagged classes carry evidence");
                    for &i in group {
                        for (left, arrow) in b.extensions(&paths[i]) {
                            let ext = Builder::extend(&paths[i], left, &arrow);
                            if let Some(j) = b.tracked(&ext) {
                                changed |= b.mark(j, Builder::extend(&evidence, left, &arrow));
                            }
                        }
                    }
                }
                let first = &paths[group[0]];
                for &i in &group[1..] {
                    for (left, arrow) in b.extensions(first) {
                        let x = Builder::extend(first, left, &arrow);
                        let y = Builder::extend(&paths[i], left, &arrow);
                        changed |= match (b.tracked(&x), b.tracked(&y)) {
                            (Some(xi), Some(yi)) => b.merge(xi, yi),
                            (Some(xi), None) => b.mark(xi, y),
                            (None, Some(yi)) => b.mark(yi, x),
                            (None, None) => false,
                        };
                    }
                }
            }
            if !changed {
                break;
            }
        }

        let mut by_root: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for i in 0..n {
            let r = b.root(i);
            by_root.entry(r).or_default().push(i);
        }
        let mut groups: Vec<(usize, Vec<usize>)> = by_root.into_iter().collect();
        groups.sort_by_key(|(_, g)| g[0]);
        let mut class_of = vec![0; n];
        let mut members = Vec::new();
        let mut touches_ideal = Vec::new();
        let mut evidence = Vec::new();
        for (c, (root, group)) in groups.into_iter().enumerate() {
            for &i in &group {
                class_of[i] = c;
            }
            members.push(group);
            touches_ideal.push(b.flag[root]);
            evidence.push(b.evidence[root].clone());
        }
        Ok(PathClasses {
            quiver: q.clone(),
            paths,
            index,
            in_ideal,
            class_of,
            members,
            touches_ideal,
            evidence,
        })
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    /// Number of classes.
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// All tracked paths in path order.
    pub fn paths(&self) -> &[Path] {
        &self.paths
    }

    /// Class of a path, or `None` when it is too long to be tracked.
    pub fn class_of(&self, p: &Path) -> Option<usize> {
        self.index.get(p).map(|&i| self.class_of[i])
    }

    pub fn members(&self, c: usize) -> impl Iterator<Item = &Path> + '_ {
        self.members[c].iter().map(move |&i| &self.paths[i])
    }

    pub fn size(&self, c: usize) -> usize {
        self.members[c].len()
    }

    /// The largest member in path order.
    pub fn representative(&self, c: usize) -> &Path {
        &self.paths[*self.members[c].last().unwrap()]
    }

    pub fn touches_ideal(&self, c: usize) -> bool {
        self.touches_ideal[c]
    }

    pub fn is_clean(&self, c: usize) -> bool {
        !self.touches_ideal[c]
    }

    /// Class id of `p` when it is tracked and clean.
    pub fn clean_class(&self, p: &Path) -> Option<usize> {
        self.class_of(p).filter(|&c| self.is_clean(c))
    }

    pub fn equivalent(&self, p: &Path, q: &Path) -> bool {
        p == q || matches!((self.class_of(p), self.class_of(q)), (Some(a), Some(b)) if a == b)
    }

    pub fn ideal_evidence(&self, c: usize) -> Option<&Path> {
        self.evidence[c].as_ref()
    }

    /// Homotopy coherence: every class touching `I` lies inside `I`.
    pub fn check_coherent(&self) -> CoherenceReport {
        for c in 0..self.len() {
            if !self.touches_ideal[c] {
                continue;
            }
            if let Some(&outside) = self.members[c].iter().find(|&&i| !self.in_ideal[i]) {
                let inside = self.evidence[c].clone().expect("flagged classes carry evidence");
                return CoherenceReport {
                    coherent: false,
                    witness: Some((inside, self.paths[outside].clone())),
                };
            }
        }
        CoherenceReport {
            coherent: true,
            witness: None,
        }
    }

    pub fn describe_witness(&self, report: &CoherenceReport) -> Option<String> {
        report.witness.as_ref().map(|(w, w2)| {
            format!(
                "{} lies in I, the equivalent path {} does not",
                self.quiver.path_name(w),
                self.quiver.path_name(w2)
            )
        })
    }
}

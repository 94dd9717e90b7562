use std::collections::HashMap;

use super::PathClasses;
use crate::error::{Error, Result};
use crate::poset::Poset;
use crate::quiver::Path;

/// The poset `Σ` of clean path classes, ordered by factorization:
/// `[w] >= [w']` when some member of `[w']` is `u·w·v` with `[u]`, `[v]` clean.
///
/// Elements are sorted by representative (the largest member in path
/// order) and named after it, so the vertex classes `[e_x]` come first.
#[derive(Clone, Debug)]
pub struct AssociatedPoset {
    poset: Poset,
    members: Vec<Vec<Path>>,
    element_of: HashMap<Path, usize>,
}

impl AssociatedPoset {
    pub fn build(classes: &PathClasses) -> Result<Self> {
        let report = classes.check_coherent();
        if !report.coherent {
            return Err(Error::NotCoherent(classes.describe_witness(&report).unwrap()));
        }
        let q = classes.quiver();
        let mut clean: Vec<usize> = (0..classes.len()).filter(|&c| classes.is_clean(c)).collect();
        clean.sort_by(|&a, &b| classes.representative(a).cmp(classes.representative(b)));
        let element_of_class: HashMap<usize, usize> = clean.iter().enumerate().map(|(e, &c)| (c, e)).collect();
        let n = clean.len();

        let mut geq = vec![vec![false; n]; n];
        for (lower, &c) in clean.iter().enumerate() {
            for p in classes.members(c) {
                for i in 0..=p.len() {
                    for j in i..=p.len() {
                        let parts = [q.subpath(p, 0, i), q.subpath(p, i, j), q.subpath(p, j, p.len())];
                        let ids: Vec<Option<usize>> = parts
                            .iter()
                            .map(|s| classes.clean_class(s).map(|k| element_of_class[&k]))
                            .collect();
                        if let [Some(_), Some(upper), Some(_)] = ids[..] {
                            geq[upper][lower] = true;
                        }
                    }
                }
            }
        }

        let names: Vec<String> = clean.iter().map(|&c| q.path_name(classes.representative(c))).collect();
        for a in 0..n {
            for b in 0..n {
                if a != b && geq[a][b] && geq[b][a] {
                    return Err(Error::NotCoherent(format!(
                        "[{}] and [{}] lie above each other",
                        names[a], names[b]
                    )));
                }
            }
        }
        let greater: Vec<Vec<bool>> = (0..n).map(|a| (0..n).map(|b| a != b && geq[a][b]).collect()).collect();
        let poset = Poset::from_relation(names, greater).map_err(|e| Error::Verification(e.to_string()))?;

        let members: Vec<Vec<Path>> = clean.iter().map(|&c| classes.members(c).cloned().collect()).collect();
        let element_of = members
            .iter()
            .enumerate()
            .flat_map(|(e, ms)| ms.iter().map(move |p| (p.clone(), e)))
            .collect();
        Ok(AssociatedPoset {
            poset,
            members,
            element_of,
        })
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Element containing `p`, or `None` when `[p]` touches the ideal or `p` is too long.
    pub fn element_of(&self, p: &Path) -> Option<usize> {
        self.element_of.get(p).copied()
    }

    pub fn members(&self, e: usize) -> &[Path] {
        &self.members[e]
    }

    pub fn representative(&self, e: usize) -> &Path {
        self.members[e].last().unwrap()
    }

    /// Name of the representative, e.g. `beta.gamma` or `e_1`.
    pub fn name(&self, e: usize) -> &str {
        self.poset.name(e)
    }

    pub fn greater(&self, a: usize, b: usize) -> bool {
        self.poset.greater(a, b)
    }

    /// Covering pairs `(upper, lower)`, sorted.
    pub fn hasse(&self) -> Vec<(usize, usize)> {
        self.poset.covers()
    }
}

use std::collections::BTreeMap;

use super::BoundAlgebra;
use crate::linalg::Field;
use crate::quiver::{Path, VertexId};

/// Per vertex pair, the partition of the support of `Ī(x, y)` into the
/// supports of its minimal relations.
///
/// The blocks are the connected components of the graph on support paths
/// where two paths are adjacent when they occur in a common row of the
/// reduced row-echelon basis of `Ī(x, y)`.
///
/// These components are the finest decomposition of `Ī(x, y)` into
/// subspaces with disjoint supports. Projecting an ideal element onto a part
/// of any such decomposition stays in the ideal, and an RREF row is pinned
/// by its pivot, so each row lives inside one part; hence the components
/// refine every decomposition and form one themselves. A minimal relation
/// (no proper sub-sum in the ideal) has support inside one component, and
/// any two paths of a component are linked through minimal relations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinimalRelationBlocks {
    blocks: BTreeMap<(VertexId, VertexId), Vec<Vec<Path>>>,
}

impl MinimalRelationBlocks {
    pub(super) fn from_algebra<F: Field>(a: &BoundAlgebra<F>) -> Self {
        let f = a.field();
        let mut blocks = BTreeMap::new();
        for x in a.quiver().vertices() {
            for y in a.quiver().vertices() {
                let (coords, rref) = a.ideal_rref(x, y);
                let n = coords.len();
                let mut parent: Vec<usize> = (0..n).collect();
                let mut in_support = vec![false; n];
                for r in 0..rref.rank {
                    let support: Vec<usize> = (0..n).filter(|&c| !f.is_zero(rref.reduced.get(r, c))).collect();
                    for &c in &support {
                        in_support[c] = true;
                    }
                    for w in support.windows(2) {
                        union(&mut parent, w[0], w[1]);
                    }
                }
                let mut groups: BTreeMap<usize, Vec<Path>> = BTreeMap::new();
                for c in (0..n).filter(|&c| in_support[c]) {
                    let root = find(&mut parent, c);
                    groups.entry(root).or_default().push(coords[c].clone());
                }
                let mut list: Vec<Vec<Path>> = groups.into_values().collect();
                list.sort();
                if !list.is_empty() {
                    blocks.insert((x, y), list);
                }
            }
        }
        MinimalRelationBlocks { blocks }
    }

    /// Blocks at `(x, y)`, each sorted by the path order; empty when `Ī(x, y) = 0`.
    pub fn at(&self, x: VertexId, y: VertexId) -> &[Vec<Path>] {
        self.blocks.get(&(x, y)).map_or(&[], |v| v.as_slice())
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(VertexId, VertexId), &Vec<Vec<Path>>)> {
        self.blocks.iter()
    }

    /// Blocks with at least two paths, across all vertex pairs.
    pub fn nontrivial(&self) -> impl Iterator<Item = &Vec<Path>> {
        self.blocks.values().flatten().filter(|b| b.len() >= 2)
    }
}

pub(crate) fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

pub(crate) fn union(parent: &mut [usize], a: usize, b: usize) {
    let (ra, rb) = (find(parent, a), find(parent, b));
    if ra != rb {
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        parent[hi] = lo;
    }
}

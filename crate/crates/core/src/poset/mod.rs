//! Finite posets, their order complexes and incidence algebras.

mod incidence;

pub use incidence::incidence_presentation;

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::linalg::{Field, Matrix};
use crate::quiver::format::content_lines;

/// A finite poset stored as a dense strict-order relation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poset {
    names: Vec<String>,
    greater: Vec<Vec<bool>>,
}

impl Poset {
    /// Builds the poset generated by `covers` (pairs `(a, b)` meaning `a > b`).
    pub fn from_covers(names: Vec<String>, covers: &[(usize, usize)]) -> Result<Self> {
        let n = names.len();
        let mut greater = vec![vec![false; n]; n];
        for &(a, b) in covers {
            if a >= n || b >= n {
                return Err(Error::InvalidPoset(format!("cover ({a}, {b}) out of range")));
            }
            greater[a][b] = true;
        }
        // Warshall closure.
        for k in 0..n {
            for i in 0..n {
                if greater[i][k] {
                    for j in 0..n {
                        if greater[k][j] {
                            greater[i][j] = true;
                        }
                    }
                }
            }
        }
        Self::from_relation(names, greater)
    }

    /// Validates a strict order given as a dense relation `greater[a][b] = (a > b)`.
    pub fn from_relation(names: Vec<String>, greater: Vec<Vec<bool>>) -> Result<Self> {
        let n = names.len();
        let mut seen = HashMap::new();
        for (i, name) in names.iter().enumerate() {
            if seen.insert(name.clone(), i).is_some() {
                return Err(Error::InvalidPoset(format!("duplicate element `{name}`")));
            }
        }
        if greater.len() != n || greater.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidPoset("relation matrix has the wrong shape".into()));
        }
        for i in 0..n {
            if greater[i][i] {
                return Err(Error::InvalidPoset(format!("`{}` lies strictly above itself", names[i])));
            }
            for j in 0..n {
                if greater[i][j] && greater[j][i] {
                    return Err(Error::InvalidPoset(format!(
                        "`{}` and `{}` lie above each other",
                        names[i], names[j]
                    )));
                }
                for k in 0..n {
                    if greater[i][j] && greater[j][k] && !greater[i][k] {
                        return Err(Error::InvalidPoset("relation is not transitive".into()));
                    }
                }
            }
        }
        Ok(Poset { names, greater })
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

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Strict comparison `a > b`.
    pub fn greater(&self, a: usize, b: usize) -> bool {
        self.greater[a][b]
    }

    pub fn comparable_pairs(&self) -> usize {
        self.greater.iter().flatten().filter(|&&g| g).count()
    }

    /// Covering relations `(a, b)` with `a > b`, sorted.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut out = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if self.greater[a][b] && !(0..n).any(|c| self.greater[a][c] && self.greater[c][b]) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    pub fn is_maximal(&self, x: usize) -> bool {
        (0..self.len()).all(|y| !self.greater[y][x])
    }

    pub fn is_minimal(&self, x: usize) -> bool {
        (0..self.len()).all(|y| !self.greater[x][y])
    }

    /// Length (edge count) of the longest chain; zero for antichains and the empty poset.
    pub fn height(&self) -> usize {
        let n = self.len();
        let mut memo: Vec<Option<usize>> = vec![None; n];
        fn down(p: &Poset, x: usize, memo: &mut Vec<Option<usize>>) -> usize {
            if let Some(h) = memo[x] {
                return h;
            }
            let h = (0..p.len())
                .filter(|&y| p.greater[x][y])
                .map(|y| 1 + down(p, y, memo))
                .max()
                .unwrap_or(0);
            memo[x] = Some(h);
            h
        }
        (0..n).map(|x| down(self, x, &mut memo)).max().unwrap_or(0)
    }

    /// The subposet on `keep` (indices into `self`), in the given order.
    pub fn restrict(&self, keep: &[usize]) -> Poset {
        let names = keep.iter().map(|&i| self.names[i].clone()).collect();
        let greater = keep
            .iter()
            .map(|&i| keep.iter().map(|&j| self.greater[i][j]).collect())
            .collect();
        Poset { names, greater }
    }

    /// Strict chains `s_0 > s_1 > ... > s_n`, lexicographic in element indices.
    pub fn chains(&self, n: usize) -> ChainBasis {
        let mut out = Vec::new();
        let mut current = Vec::with_capacity(n + 1);
        for start in 0..self.len() {
            current.push(start);
            self.extend_chains(&mut current, n + 1, &mut out);
            current.pop();
        }
        ChainBasis::new(out)
    }

    fn extend_chains(&self, current: &mut Vec<usize>, target: usize, out: &mut Vec<Vec<usize>>) {
        if current.len() == target {
            out.push(current.clone());
            return;
        }
        let last = *current.last().unwrap();
        for next in 0..self.len() {
            if self.greater[last][next] {
                current.push(next);
                self.extend_chains(current, target, out);
                current.pop();
            }
        }
    }

    /// Matrix of the chain boundary `δ_{n+1}: SC_{n+1} -> SC_n`,
    /// `δ(s_0 > ... > s_{n+1}) = Σ (-1)^i (s_0 > ... ŝ_i ... > s_{n+1})`.
    /// Its transpose is the coboundary `B^n` on cochains.
    pub fn simplicial_boundary<F: Field>(&self, field: &F, n: usize) -> Matrix<F> {
        let rows = self.chains(n);
        let cols = self.chains(n + 1);
        boundary_matrix(field, &rows, &cols)
    }

    /// `dim SH^k` for `0 <= k <= max_degree`.
    pub fn simplicial_cohomology_dims<F: Field>(&self, field: &F, max_degree: usize) -> Vec<usize> {
        let bases: Vec<ChainBasis> = (0..=max_degree + 1).map(|k| self.chains(k)).collect();
        // rank of δ_{k+1}: SC_{k+1} -> SC_k
        let ranks: Vec<usize> = (0..=max_degree)
            .map(|k| boundary_matrix(field, &bases[k], &bases[k + 1]).rank())
            .collect();
        (0..=max_degree)
            .map(|k| {
                let below = if k == 0 { 0 } else { ranks[k - 1] };
                bases[k].len() - ranks[k] - below
            })
            .collect()
    }

    /// Connected components of the comparability graph.
    pub fn component_count(&self) -> usize {
        let n = self.len();
        let mut parent: Vec<usize> = (0..n).collect();
        for a in 0..n {
            for b in 0..n {
                if self.greater[a][b] {
                    crate::algebra::blocks::union(&mut parent, a, b);
                }
            }
        }
        (0..n).filter(|&x| crate::algebra::blocks::find(&mut parent, x) == x).count()
    }

    /// Igusa–Zacharia reduction: repeatedly delete the first element that is
    /// neither minimal nor maximal and whose strict up-set has fewer than two
    /// minimal elements or whose strict down-set has fewer than two maximal
    /// elements.
    pub fn iz_reduce(&self) -> Poset {
        let mut keep: Vec<usize> = (0..self.len()).collect();
        loop {
            let current = self.restrict(&keep);
            let victim = (0..current.len()).find(|&x| current.is_reducible(x));
            match victim {
                Some(x) => {
                    keep.remove(x);
                }
                None => return current,
            }
        }
    }

    fn is_reducible(&self, x: usize) -> bool {
        if self.is_minimal(x) || self.is_maximal(x) {
            return false;
        }
        let n = self.len();
        let up: Vec<usize> = (0..n).filter(|&y| self.greater[y][x]).collect();
        let down: Vec<usize> = (0..n).filter(|&z| self.greater[x][z]).collect();
        let minimal_up = up.iter().filter(|&&a| !up.iter().any(|&b| self.greater[a][b])).count();
        let maximal_down = down.iter().filter(|&&a| !down.iter().any(|&b| self.greater[b][a])).count();
        minimal_up < 2 || maximal_down < 2
    }

    /// Parses the `.poset` format: `element <name>` and `cover <a> <b>` (a > b).
    pub fn parse(text: &str) -> Result<Poset> {
        let mut names: Vec<String> = Vec::new();
        let mut covers = Vec::new();
        let mut last_line = 1;
        for (line, content) in content_lines(text) {
            last_line = line;
            let args: Vec<&str> = content.split_whitespace().collect();
            match args[..] {
                ["element", name] => {
                    if names.iter().any(|n| n == name) {
                        return Err(Error::parse(line, format!("duplicate element `{name}`")));
                    }
                    names.push(name.to_string());
                }
                ["cover", a, b] => {
                    let find = |n: &str| {
                        names
                            .iter()
                            .position(|x| x == n)
                            .ok_or_else(|| Error::parse(line, format!("unknown element `{n}`")))
                    };
                    covers.push((find(a)?, find(b)?));
                }
                _ => return Err(Error::parse(line, format!("unrecognized line `{content}`"))),
            }
        }
        Poset::from_covers(names, &covers).map_err(|e| Error::parse(last_line, e.to_string()))
    }

    /// `.poset` text listing the elements and the Hasse covers.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for n in &self.names {
            writeln!(out, "element {n}").unwrap();
        }
        for (a, b) in self.covers() {
            writeln!(out, "cover {} {}", self.names[a], self.names[b]).unwrap();
        }
        out
    }
}

/// Ordered basis of `SC_n`: strict chains as element-index sequences.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ChainBasis {
    chains: Vec<Vec<usize>>,
    index: HashMap<Vec<usize>, usize>,
}

impl ChainBasis {
    pub fn new(chains: Vec<Vec<usize>>) -> Self {
        let index = chains.iter().cloned().enumerate().map(|(i, c)| (c, i)).collect();
        ChainBasis { chains, index }
    }

    pub fn len(&self) -> usize {
        self.chains.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chains.is_empty()
    }

    pub fn chains(&self) -> &[Vec<usize>] {
        &self.chains
    }

    pub fn get(&self, i: usize) -> &[usize] {
        &self.chains[i]
    }

    pub fn index_of(&self, chain: &[usize]) -> Option<usize> {
        self.index.get(chain).copied()
    }
}

/// Boundary matrix between consecutive chain bases (rows: faces, columns: chains).
pub fn boundary_matrix<F: Field>(field: &F, faces: &ChainBasis, chains: &ChainBasis) -> Matrix<F> {
    let mut m = Matrix::zeros(field, faces.len(), chains.len());
    let (one, minus) = (field.one(), field.neg(&field.one()));
    for (col, chain) in chains.chains().iter().enumerate() {
        for omit in 0..chain.len() {
            let face: Vec<usize> = chain
                .iter()
                .enumerate()
                .filter(|(i, _)| *i != omit)
                .map(|(_, &s)| s)
                .collect();
            let row = faces.index_of(&face).expect("faces of chains are chains");
            m.add_to(row, col, if omit % 2 == 0 { &one } else { &minus });
        }
    }
    m
}

//! The finite-dimensional algebra `A = kQ/I` as explicit linear data.
//!
//! For every vertex pair `(x, y)` the paths `x -> y` of length `1..m` (with
//! `m` the asserted bound) are the coordinates of a vector space; the ideal
//! part `Ī(x, y)` is the span of all `u·g·v` for generators `g`, truncated
//! below length `m`, stored in reduced row-echelon form. Non-pivot
//! coordinates give the path basis of `A(x, y)`.

mod admissibility;
pub(crate) mod blocks;

pub use admissibility::AdmissibilityReport;
pub use blocks::MinimalRelationBlocks;

use std::collections::HashMap;

use crate::error::Result;
use crate::linalg::{reduce_against_rref, Field, Matrix, Rref};
use crate::quiver::{LinComb, Path, Presentation, Quiver, VertexId};

/// Sparse algebra element: `(basis index, coefficient)` pairs sorted by index.
pub type AlgElem<F> = Vec<(usize, <F as Field>::Elem)>;

/// Coordinates and ideal subspace for one vertex pair.
#[derive(Clone, Debug)]
pub(crate) struct PairSpace<F: Field> {
    pub(crate) coords: Vec<Path>,
    pub(crate) coord_index: HashMap<Path, usize>,
    pub(crate) ideal: Rref<F>,
}

impl<F: Field> PairSpace<F> {
    fn pivot_of(&self) -> Vec<Option<usize>> {
        let mut out = vec![None; self.coords.len()];
        for (row, &c) in self.ideal.pivot_cols.iter().enumerate() {
            out[c] = Some(row);
        }
        out
    }
}

/// Builds the truncated ideal subspaces of a presentation: coordinates are
/// paths of length `1..bound`, generator multiples keep terms shorter than `bound`.
pub(crate) fn ideal_spaces<F: Field>(field: &F, p: &Presentation, bound: usize) -> Result<HashMap<(VertexId, VertexId), PairSpace<F>>> {
    let q = p.quiver();
    let all = q.enumerate_paths(bound - 1, None, None)?;
    let mut coords: HashMap<(VertexId, VertexId), Vec<Path>> = HashMap::new();
    for x in q.vertices() {
        for y in q.vertices() {
            coords.insert((x, y), Vec::new());
        }
    }
    for path in all.iter().filter(|p| !p.is_trivial()) {
        coords.get_mut(&(path.source(), path.target())).unwrap().push(path.clone());
    }

    let mut rows: HashMap<(VertexId, VertexId), Vec<Vec<(Path, F::Elem)>>> = HashMap::new();
    for rel in p.relations() {
        let (a, b) = rel.endpoints().expect("relations are nonzero");
        let min_len = rel.terms().iter().map(|(_, t)| t.len()).min().unwrap();
        let terms: Vec<(F::Elem, &Path)> = rel
            .terms()
            .iter()
            .map(|(c, t)| Ok((field.from_rational(c)?, t)))
            .collect::<Result<_>>()?;
        let lefts = all.iter().filter(|u| u.target() == a && u.len() + min_len < bound);
        for u in lefts {
            let rights = all
                .iter()
                .filter(|v| v.source() == b && u.len() + min_len + v.len() < bound);
            for v in rights {
                let row: Vec<(Path, F::Elem)> = terms
                    .iter()
                    .filter(|(_, t)| u.len() + t.len() + v.len() < bound)
                    .map(|(c, t)| {
                        let full = u.concat(t).and_then(|ut| ut.concat(v)).expect("composable");
                        (full, c.clone())
                    })
                    .collect();
                if !row.is_empty() {
                    rows.entry((u.source(), v.target())).or_default().push(row);
                }
            }
        }
    }

    let mut out = HashMap::new();
    for ((x, y), paths) in coords {
        let coord_index: HashMap<Path, usize> = paths.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let dense: Vec<Vec<F::Elem>> = rows
            .remove(&(x, y))
            .unwrap_or_default()
            .into_iter()
            .map(|sparse| {
                let mut v = vec![field.zero(); paths.len()];
                for (path, c) in sparse {
                    let i = coord_index[&path];
                    v[i] = field.add(&v[i], &c);
                }
                v
            })
            .collect();
        let ideal = Matrix::from_rows(field, paths.len(), dense)?.rref();
        let ideal = Rref {
            reduced: trim_rows(field, &ideal.reduced, ideal.rank),
            pivot_cols: ideal.pivot_cols,
            rank: ideal.rank,
        };
        out.insert(
            (x, y),
            PairSpace {
                coords: paths,
                coord_index,
                ideal,
            },
        );
    }
    Ok(out)
}

fn trim_rows<F: Field>(field: &F, m: &Matrix<F>, keep: usize) -> Matrix<F> {
    let rows = (0..keep).map(|r| m.row(r).to_vec()).collect();
    Matrix::from_rows(field, m.cols(), rows).expect("consistent width")
}

/// The algebra `kQ/(I + F^m)` with a path basis and structure constants.
#[derive(Clone, Debug)]
pub struct BoundAlgebra<F: Field> {
    field: F,
    presentation: Presentation,
    spaces: HashMap<(VertexId, VertexId), PairSpace<F>>,
    basis: Vec<Path>,
    basis_index: HashMap<Path, usize>,
    pair_basis: HashMap<(VertexId, VertexId), Vec<usize>>,
    products: HashMap<(usize, usize), AlgElem<F>>,
}

impl<F: Field> BoundAlgebra<F> {
    pub fn build(field: &F, presentation: &Presentation) -> Result<Self> {
        let q = presentation.quiver();
        let spaces = ideal_spaces(field, presentation, presentation.bound())?;

        let mut basis: Vec<Path> = q.vertices().map(Path::trivial).collect();
        for space in spaces.values() {
            let pivots = space.pivot_of();
            basis.extend(
                space
                    .coords
                    .iter()
                    .zip(&pivots)
                    .filter(|(_, piv)| piv.is_none())
                    .map(|(p, _)| p.clone()),
            );
        }
        basis.sort();
        let basis_index: HashMap<Path, usize> = basis.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let mut pair_basis: HashMap<(VertexId, VertexId), Vec<usize>> = HashMap::new();
        for x in q.vertices() {
            for y in q.vertices() {
                pair_basis.insert((x, y), Vec::new());
            }
        }
        for (i, p) in basis.iter().enumerate() {
            pair_basis.get_mut(&(p.source(), p.target())).unwrap().push(i);
        }

        let mut algebra = BoundAlgebra {
            field: field.clone(),
            presentation: presentation.clone(),
            spaces,
            basis,
            basis_index,
            pair_basis,
            products: HashMap::new(),
        };
        let mut products = HashMap::new();
        for (i, a) in algebra.basis.iter().enumerate() {
            for j in algebra.pair_basis_from(a.target()) {
                let prod = a.concat(&algebra.basis[j]).expect("composable");
                products.insert((i, j), algebra.normal_form(&prod));
            }
        }
        algebra.products = products;
        Ok(algebra)
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    pub fn quiver(&self) -> &Quiver {
        self.presentation.quiver()
    }

    pub fn bound(&self) -> usize {
        self.presentation.bound()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Basis paths in the global path order.
    pub fn basis(&self) -> &[Path] {
        &self.basis
    }

    pub fn basis_path(&self, i: usize) -> &Path {
        &self.basis[i]
    }

    pub fn basis_index(&self, p: &Path) -> Option<usize> {
        self.basis_index.get(p).copied()
    }

    /// Basis indices of `A(x, y)` in increasing order.
    pub fn pair_basis(&self, x: VertexId, y: VertexId) -> &[usize] {
        &self.pair_basis[&(x, y)]
    }

    pub fn dim_pair(&self, x: VertexId, y: VertexId) -> usize {
        self.pair_basis(x, y).len()
    }

    fn pair_basis_from(&self, x: VertexId) -> Vec<usize> {
        (0..self.basis.len()).filter(|&i| self.basis[i].source() == x).collect()
    }

    /// Basis indices of positive-length basis paths, i.e. a basis of the radical.
    pub fn radical_basis(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.basis.len()).filter(|&i| !self.basis[i].is_trivial())
    }

    pub fn unit_index(&self, x: VertexId) -> usize {
        self.basis_index[&Path::trivial(x)]
    }

    /// Coordinates (paths `x -> y` of length `1..m`) and the RREF of `Ī(x, y)`.
    pub fn ideal_rref(&self, x: VertexId, y: VertexId) -> (&[Path], &Rref<F>) {
        let s = &self.spaces[&(x, y)];
        (&s.coords, &s.ideal)
    }

    /// The class of a path written in the basis of `A`. Paths of length at
    /// least `m` lie in `F^m ⊆ I` and reduce to zero.
    pub fn normal_form(&self, p: &Path) -> AlgElem<F> {
        let f = &self.field;
        if p.is_trivial() {
            return vec![(self.basis_index[p], f.one())];
        }
        if p.len() >= self.bound() {
            return Vec::new();
        }
        let space = &self.spaces[&(p.source(), p.target())];
        let mut v = vec![f.zero(); space.coords.len()];
        v[space.coord_index[p]] = f.one();
        reduce_against_rref(f, &mut v, &space.ideal);
        let mut out: AlgElem<F> = space
            .coords
            .iter()
            .zip(v)
            .filter(|(_, c)| !f.is_zero(c))
            .map(|(path, c)| (self.basis_index[path], c))
            .collect();
        out.sort_by_key(|(i, _)| *i);
        out
    }

    /// Normal form of a linear combination given over the field.
    pub fn normal_form_terms(&self, terms: &[(F::Elem, Path)]) -> AlgElem<F> {
        let mut acc: AlgElem<F> = Vec::new();
        for (c, p) in terms {
            let nf: AlgElem<F> = self.normal_form(p).into_iter().map(|(i, v)| (i, self.field.mul(c, &v))).collect();
            acc = add_elems(&self.field, &acc, &nf);
        }
        acc
    }

    /// Product of two basis elements.
    pub fn mul_basis(&self, i: usize, j: usize) -> &[(usize, F::Elem)] {
        self.products.get(&(i, j)).map_or(&[], |v| v.as_slice())
    }

    pub fn mul(&self, a: &[(usize, F::Elem)], b: &[(usize, F::Elem)]) -> AlgElem<F> {
        let f = &self.field;
        let mut acc = Vec::new();
        for (i, ca) in a {
            for (j, cb) in b {
                let c = f.mul(ca, cb);
                let term: AlgElem<F> = self.mul_basis(*i, *j).iter().map(|(k, v)| (*k, f.mul(&c, v))).collect();
                acc = add_elems(f, &acc, &term);
            }
        }
        acc
    }

    /// Ideal membership for a parallel combination. Terms of length at least
    /// `m` are in `I` by the admissibility contract and are ignored.
    pub fn is_in_ideal(&self, v: &LinComb) -> Result<bool> {
        let f = &self.field;
        let Some((x, y)) = v.endpoints() else {
            return Ok(true);
        };
        let space = &self.spaces[&(x, y)];
        let mut coords = vec![f.zero(); space.coords.len()];
        for (c, p) in v.terms() {
            if p.len() >= self.bound() {
                continue;
            }
            let Some(&i) = space.coord_index.get(p) else {
                // trivial paths are never in an ideal contained in F^2
                return Ok(false);
            };
            coords[i] = f.from_rational(c)?;
        }
        reduce_against_rref(f, &mut coords, &space.ideal);
        Ok(coords.iter().all(|c| f.is_zero(c)))
    }

    pub fn is_path_in_ideal(&self, p: &Path) -> bool {
        if p.is_trivial() {
            return false;
        }
        p.len() >= self.bound() || self.normal_form(p).is_empty()
    }

    /// `dim A(x, y) <= 1` for all pairs.
    pub fn is_schurian(&self) -> bool {
        self.pair_basis.values().all(|b| b.len() <= 1)
    }

    /// `dim A(x, x) = 1` for every vertex.
    pub fn local_algebras_trivial(&self) -> bool {
        self.quiver().vertices().all(|x| self.dim_pair(x, x) == 1)
    }

    pub fn minimal_relation_blocks(&self) -> MinimalRelationBlocks {
        MinimalRelationBlocks::from_algebra(self)
    }

    pub fn check_admissibility(&self) -> Result<AdmissibilityReport> {
        AdmissibilityReport::compute(&self.field, &self.presentation)
    }

    /// Display name of a basis element.
    pub fn basis_name(&self, i: usize) -> String {
        self.quiver().path_name(&self.basis[i])
    }
}

/// Sum of two sparse elements.
pub fn add_elems<F: Field>(f: &F, a: &[(usize, F::Elem)], b: &[(usize, F::Elem)]) -> AlgElem<F> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i].clone());
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            out.push(b[j].clone());
            j += 1;
        } else {
            let v = f.add(&a[i].1, &b[j].1);
            if !f.is_zero(&v) {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

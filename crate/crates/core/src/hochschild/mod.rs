//! The reduced Hochschild complex `Hom_{E^e}(rad A^{⊗n}, A)` of a bound
//! quiver algebra, with tensors taken over the vertex span `E`.

mod bar;

pub use bar::{oracle_bar_dims, ORACLE_MAX_DEGREE, ORACLE_MAX_DIM};

use std::collections::HashMap;

use rayon::prelude::*;

use crate::algebra::BoundAlgebra;
use crate::linalg::{Field, Matrix};
use crate::quiver::VertexId;

/// Composable tuples of radical basis elements of one degree.
///
/// Degree 0 holds one tuple per vertex, made of the unit `e_x` alone.
#[derive(Clone, Debug)]
pub struct TensorBasis {
    degree: usize,
    tuples: Vec<Vec<usize>>,
    ends: Vec<(VertexId, VertexId)>,
    index: HashMap<Vec<usize>, usize>,
}

impl TensorBasis {
    pub fn new<F: Field>(a: &BoundAlgebra<F>, degree: usize) -> Self {
        let mut tuples = Vec::new();
        if degree == 0 {
            tuples.extend(a.quiver().vertices().map(|x| vec![a.unit_index(x)]));
        } else {
            let radical: Vec<usize> = a.radical_basis().collect();
            let mut current = Vec::with_capacity(degree);
            extend(a, &radical, degree, &mut current, &mut tuples);
        }
        let ends = tuples
            .iter()
            .map(|t| (a.basis_path(t[0]).source(), a.basis_path(*t.last().unwrap()).target()))
            .collect();
        let index = tuples.iter().cloned().enumerate().map(|(i, t)| (t, i)).collect();
        TensorBasis {
            degree,
            tuples,
            ends,
            index,
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.tuples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tuples.is_empty()
    }

    pub fn tuples(&self) -> &[Vec<usize>] {
        &self.tuples
    }

    pub fn get(&self, i: usize) -> &[usize] {
        &self.tuples[i]
    }

    /// `(s(τ), t(τ))`.
    pub fn ends(&self, i: usize) -> (VertexId, VertexId) {
        self.ends[i]
    }

    pub fn index_of(&self, tuple: &[usize]) -> Option<usize> {
        self.index.get(tuple).copied()
    }
}

fn extend<F: Field>(a: &BoundAlgebra<F>, radical: &[usize], degree: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if current.len() == degree {
        out.push(current.clone());
        return;
    }
    for &r in radical {
        let fits = current
            .last()
            .is_none_or(|&p| a.basis_path(p).target() == a.basis_path(r).source());
        if fits {
            current.push(r);
            extend(a, radical, degree, current, out);
            current.pop();
        }
    }
}

/// Basis of `C^n`: pairs `(τ, a)` with `a` a basis element of `A(s(τ), t(τ))`,
/// ordered by `τ` and then `a`.
#[derive(Clone, Debug)]
pub struct CochainSpace {
    tensors: TensorBasis,
    offsets: Vec<usize>,
    dim: usize,
}

impl CochainSpace {
    pub fn new<F: Field>(a: &BoundAlgebra<F>, degree: usize) -> Self {
        let tensors = TensorBasis::new(a, degree);
        let mut offsets = Vec::with_capacity(tensors.len());
        let mut dim = 0;
        for i in 0..tensors.len() {
            offsets.push(dim);
            let (s, t) = tensors.ends(i);
            dim += a.dim_pair(s, t);
        }
        CochainSpace { tensors, offsets, dim }
    }

    pub fn tensors(&self) -> &TensorBasis {
        &self.tensors
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// First coordinate of the block belonging to tensor `i`.
    pub fn offset(&self, i: usize) -> usize {
        self.offsets[i]
    }

    /// Coordinate of `(τ_i, basis element b)`; `b` must lie in `A(s(τ_i), t(τ_i))`.
    pub fn coordinate<F: Field>(&self, a: &BoundAlgebra<F>, i: usize, b: usize) -> usize {
        let (s, t) = self.tensors.ends(i);
        let pos = a.pair_basis(s, t).iter().position(|&x| x == b).expect("basis element in block");
        self.offsets[i] + pos
    }

    /// Inverse of [`CochainSpace::coordinate`].
    pub fn split<F: Field>(&self, a: &BoundAlgebra<F>, coord: usize) -> (usize, usize) {
        let i = self.offsets.partition_point(|&o| o <= coord) - 1;
        let (s, t) = self.tensors.ends(i);
        (i, a.pair_basis(s, t)[coord - self.offsets[i]])
    }
}

/// Matrix of `b^n: C^n -> C^{n+1}`,
/// `(b f)(a_0, ..., a_n) = a_0 f(a_1, ..., a_n) + Σ (-1)^i f(..., a_{i-1} a_i, ...) + (-1)^{n+1} f(a_0, ..., a_{n-1}) a_n`.
/// In degree 0 the outer terms read `a_0 f(e_{t(a_0)})` and `f(e_{s(a_0)}) a_0`.
pub fn hochschild_differential<F: Field>(a: &BoundAlgebra<F>, source: &CochainSpace, target: &CochainSpace) -> Matrix<F> {
    let f = a.field();
    let n = source.tensors.degree;
    assert_eq!(target.tensors.degree, n + 1);
    let unit_tuple = |x: VertexId| vec![a.unit_index(x)];
    let minus = |c: &F::Elem, negate: bool| if negate { f.neg(c) } else { c.clone() };

    let blocks: Vec<Vec<(usize, usize, F::Elem)>> = (0..target.tensors.len())
        .into_par_iter()
        .map(|row_tuple| {
            let sigma = target.tensors.get(row_tuple);
            let mut entries = Vec::new();
            // a_0 · f(a_1, ..., a_n)
            let rest = if n == 0 {
                unit_tuple(a.basis_path(sigma[0]).target())
            } else {
                sigma[1..].to_vec()
            };
            let tau = source.tensors.index_of(&rest).expect("tails of tuples are tuples");
            let (s, t) = source.tensors.ends(tau);
            for &b in a.pair_basis(s, t) {
                for (c, v) in a.mul_basis(sigma[0], b) {
                    entries.push((target.coordinate(a, row_tuple, *c), source.coordinate(a, tau, b), v.clone()));
                }
            }
            // interior products
            for i in 1..=n {
                for (k, v) in a.mul_basis(sigma[i - 1], sigma[i]) {
                    let mut merged = sigma[..i - 1].to_vec();
                    merged.push(*k);
                    merged.extend_from_slice(&sigma[i + 1..]);
                    let tau = source.tensors.index_of(&merged).expect("products of radical elements are radical");
                    let (s, t) = source.tensors.ends(tau);
                    for &b in a.pair_basis(s, t) {
                        entries.push((
                            target.coordinate(a, row_tuple, b),
                            source.coordinate(a, tau, b),
                            minus(v, i % 2 == 1),
                        ));
                    }
                }
            }
            // f(a_0, ..., a_{n-1}) · a_n
            let init = if n == 0 {
                unit_tuple(a.basis_path(sigma[0]).source())
            } else {
                sigma[..n].to_vec()
            };
            let tau = source.tensors.index_of(&init).expect("heads of tuples are tuples");
            let (s, t) = source.tensors.ends(tau);
            for &b in a.pair_basis(s, t) {
                for (c, v) in a.mul_basis(b, sigma[n]) {
                    entries.push((
                        target.coordinate(a, row_tuple, *c),
                        source.coordinate(a, tau, b),
                        minus(v, n.is_multiple_of(2)),
                    ));
                }
            }
            entries
        })
        .collect();

    let mut m = Matrix::zeros(f, target.dim, source.dim);
    for (r, c, v) in blocks.into_iter().flatten() {
        m.add_to(r, c, &v);
    }
    m
}

/// Cochain spaces `C^0..=C^{N+1}`, differentials `b^0..=b^N` and their ranks.
#[derive(Clone, Debug)]
pub struct HochschildComplex<F: Field> {
    spaces: Vec<CochainSpace>,
    differentials: Vec<Matrix<F>>,
    ranks: Vec<usize>,
}

impl<F: Field> HochschildComplex<F> {
    pub fn build(a: &BoundAlgebra<F>, max_degree: usize) -> Self {
        let spaces: Vec<CochainSpace> = (0..=max_degree + 1).map(|n| CochainSpace::new(a, n)).collect();
        let differentials: Vec<Matrix<F>> = (0..=max_degree)
            .map(|n| hochschild_differential(a, &spaces[n], &spaces[n + 1]))
            .collect();
        let ranks = differentials.par_iter().map(|m| m.rank()).collect();
        HochschildComplex {
            spaces,
            differentials,
            ranks,
        }
    }

    pub fn max_degree(&self) -> usize {
        self.differentials.len() - 1
    }

    pub fn space(&self, n: usize) -> &CochainSpace {
        &self.spaces[n]
    }

    /// `b^n`.
    pub fn differential(&self, n: usize) -> &Matrix<F> {
        &self.differentials[n]
    }

    pub fn rank(&self, n: usize) -> usize {
        self.ranks[n]
    }

    /// `dim HH^n = dim C^n - rank b^n - rank b^{n-1}`.
    pub fn cohomology_dim(&self, n: usize) -> usize {
        let below = if n == 0 { 0 } else { self.ranks[n - 1] };
        self.spaces[n].dim() - self.ranks[n] - below
    }

    pub fn cohomology_dims(&self) -> Vec<usize> {
        (0..=self.max_degree()).map(|n| self.cohomology_dim(n)).collect()
    }

    /// Basis of the cocycles `ker b^n`.
    pub fn cocycles(&self, n: usize) -> Vec<Vec<F::Elem>> {
        self.differentials[n].kernel_basis()
    }
}

/// `dim HH^n(A)` for `0 <= n <= max_degree`.
pub fn hochschild_dims<F: Field>(a: &BoundAlgebra<F>, max_degree: usize) -> Vec<usize> {
    HochschildComplex::build(a, max_degree).cohomology_dims()
}

/// Basis of `ker b^n`.
pub fn hochschild_cocycles<F: Field>(a: &BoundAlgebra<F>, n: usize) -> Vec<Vec<F::Elem>> {
    let source = CochainSpace::new(a, n);
    let target = CochainSpace::new(a, n + 1);
    hochschild_differential(a, &source, &target).kernel_basis()
}

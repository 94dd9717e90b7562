//! For an incidence algebra `A(P)` the tuples of `C^n(A)` correspond to the
//! chains of `P`, giving an isomorphism `ε: Hom(SC_*(P), k) -> C^*(A)`.

use super::Check;
use crate::algebra::BoundAlgebra;
use crate::error::Result;
use crate::hochschild::{CochainSpace, HochschildComplex};
use crate::linalg::{Field, Matrix};
use crate::poset::{incidence_presentation, Poset};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EpsilonReport {
    /// Whether `ε_n` is invertible, for `0 <= n <= max_degree + 1`.
    pub isomorphism: Vec<bool>,
    /// `ε_{n+1} B^n = b^n ε_n`.
    pub commutes: Check,
}

impl EpsilonReport {
    pub fn passed(&self) -> bool {
        self.isomorphism.iter().all(|&b| b) && self.commutes.passed()
    }
}

fn epsilon_matrix<F: Field>(a: &BoundAlgebra<F>, p: &Poset, space: &CochainSpace) -> Matrix<F> {
    let f = a.field();
    let tensors = space.tensors();
    let chains = p.chains(tensors.degree());
    let mut m = Matrix::zeros(f, space.dim(), chains.len());
    for (i, tuple) in tensors.tuples().iter().enumerate() {
        let paths: Vec<_> = tuple.iter().map(|&b| a.basis_path(b)).collect();
        let mut chain = vec![paths[0].source().0];
        if tensors.degree() > 0 {
            chain.extend(paths.iter().map(|w| w.target().0));
        }
        let Some(col) = chains.index_of(&chain) else {
            continue;
        };
        let product = paths[1..]
            .iter()
            .fold(paths[0].clone(), |acc, w| acc.concat(w).expect("tuples compose"));
        for (b, lambda) in a.normal_form(&product) {
            m.add_to(space.coordinate(a, i, b), col, &lambda);
        }
    }
    m
}

/// Builds the incidence algebra of `p` and checks that `ε` is an
/// isomorphism of complexes up to degree `max_degree`.
pub fn epsilon_check<F: Field>(field: &F, p: &Poset, max_degree: usize) -> Result<EpsilonReport> {
    let a = BoundAlgebra::build(field, &incidence_presentation(p)?)?;
    let complex = HochschildComplex::build(&a, max_degree);
    let eps: Vec<Matrix<F>> = (0..=max_degree + 1)
        .map(|n| epsilon_matrix(&a, p, complex.space(n)))
        .collect();
    let isomorphism = eps.iter().map(|m| m.rows() == m.cols() && m.rank() == m.rows()).collect();
    let mut commutes = Check::default();
    for n in 0..=max_degree {
        let coboundary = p.simplicial_boundary(field, n).transpose();
        let lhs = eps[n + 1].mul(&coboundary)?;
        let rhs = complex.differential(n).mul(&eps[n])?;
        commutes.record(lhs == rhs, || format!("ε does not commute with the differentials in degree {n}"));
    }
    Ok(EpsilonReport { isomorphism, commutes })
}

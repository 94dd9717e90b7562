//! Hochschild cohomology from the full bar cochain complex `Hom_k(A^{⊗n}, A)`,
//! tensors over the base field and units included. Independent of the reduced
//! complex and only feasible for very small algebras.

use rayon::prelude::*;

use crate::algebra::BoundAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{merge_duplicates, Field, SparseEchelon, SparseRow};

pub const ORACLE_MAX_DIM: usize = 8;
pub const ORACLE_MAX_DEGREE: usize = 3;

fn encode(tuple: &[usize], d: usize) -> usize {
    tuple.iter().fold(0, |acc, &x| acc * d + x)
}

fn decode(mut code: usize, len: usize, d: usize) -> Vec<usize> {
    let mut out = vec![0; len];
    for slot in out.iter_mut().rev() {
        *slot = code % d;
        code /= d;
    }
    out
}

/// Rank of `b^n` on the bar complex, from the images of the basis cochains.
fn bar_rank<F: Field>(a: &BoundAlgebra<F>, n: usize, coefficient_of: &[Vec<(usize, usize, F::Elem)>]) -> usize {
    let f = a.field();
    let d = a.dim();
    let signed = |v: &F::Elem, negate: bool| if negate { f.neg(v) } else { v.clone() };
    let sources = d.pow(n as u32) * d;
    let rows: Vec<SparseRow<F>> = (0..sources)
        .into_par_iter()
        .map(|col| {
            let (tau, value) = (decode(col / d, n, d), col % d);
            let coord = |sigma: &[usize], c: usize| encode(sigma, d) * d + c;
            let mut row: SparseRow<F> = Vec::new();
            for x in 0..d {
                let mut sigma = vec![x];
                sigma.extend_from_slice(&tau);
                for (c, v) in a.mul_basis(x, value) {
                    row.push((coord(&sigma, *c), v.clone()));
                }
            }
            for i in 1..=n {
                for (x, y, lambda) in &coefficient_of[tau[i - 1]] {
                    let mut sigma = tau[..i - 1].to_vec();
                    sigma.extend([*x, *y]);
                    sigma.extend_from_slice(&tau[i..]);
                    row.push((coord(&sigma, value), signed(lambda, i % 2 == 1)));
                }
            }
            for y in 0..d {
                let mut sigma = tau.clone();
                sigma.push(y);
                for (c, v) in a.mul_basis(value, y) {
                    row.push((coord(&sigma, *c), signed(v, n.is_multiple_of(2))));
                }
            }
            row.sort_by_key(|(c, _)| *c);
            merge_duplicates(f, row)
        })
        .collect();
    let mut echelon = SparseEchelon::new(f);
    for row in rows {
        echelon.insert(row);
    }
    echelon.rank()
}

/// `dim HH^n(A)` for `0 <= n <= max_degree` from the unnormalized bar complex.
/// Refuses algebras of dimension above [`ORACLE_MAX_DIM`] and degrees above
/// [`ORACLE_MAX_DEGREE`].
pub fn oracle_bar_dims<F: Field>(a: &BoundAlgebra<F>, max_degree: usize) -> Result<Vec<usize>> {
    let d = a.dim();
    if d > ORACLE_MAX_DIM {
        return Err(Error::SizeGate {
            dim: d,
            max: ORACLE_MAX_DIM,
        });
    }
    if max_degree > ORACLE_MAX_DEGREE {
        return Err(Error::Verification(format!(
            "bar-complex oracle supports degrees up to {ORACLE_MAX_DEGREE}, requested {max_degree}"
        )));
    }
    let mut coefficient_of: Vec<Vec<(usize, usize, F::Elem)>> = vec![Vec::new(); d];
    for x in 0..d {
        for y in 0..d {
            for (k, v) in a.mul_basis(x, y) {
                coefficient_of[*k].push((x, y, v.clone()));
            }
        }
    }
    let ranks: Vec<usize> = (0..=max_degree).map(|n| bar_rank(a, n, &coefficient_of)).collect();
    Ok((0..=max_degree)
        .map(|n| {
            let below = if n == 0 { 0 } else { ranks[n - 1] };
            d.pow(n as u32) * d - ranks[n] - below
        })
        .collect())
}

use super::ideal_spaces;
use crate::error::Result;
use crate::linalg::{reduce_against_rref, Field};
use crate::quiver::Presentation;

/// Outcome of the admissibility checks on a presentation.
///
/// `syntactic` confirms `I ⊆ F^2` on the generators. `necessary` confirms
/// that every path of length exactly `m` agrees modulo `F^(m+1)` with an
/// element of the generated ideal. The second test is necessary for
/// `F^m ⊆ I` but not sufficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdmissibilityReport {
    pub syntactic: bool,
    pub necessary: bool,
    /// Length-`m` paths that failed the necessary test.
    pub failing_paths: Vec<String>,
}

impl AdmissibilityReport {
    pub const CAVEAT: &'static str =
        "necessary condition only; F^m ⊆ I is asserted by the bound and not decided";

    pub(super) fn compute<F: Field>(field: &F, p: &Presentation) -> Result<Self> {
        let q = p.quiver();
        let m = p.bound();
        let syntactic = p
            .relations()
            .iter()
            .all(|r| r.terms().iter().all(|(_, path)| path.len() >= 2));
        let spaces = ideal_spaces(field, p, m + 1)?;
        let mut failing_paths = Vec::new();
        for space in spaces.values() {
            for (i, path) in space.coords.iter().enumerate() {
                if path.len() != m {
                    continue;
                }
                let mut v = vec![field.zero(); space.coords.len()];
                v[i] = field.one();
                reduce_against_rref(field, &mut v, &space.ideal);
                if v.iter().any(|c| !field.is_zero(c)) {
                    failing_paths.push(path.clone());
                }
            }
        }
        failing_paths.sort();
        Ok(AdmissibilityReport {
            syntactic,
            necessary: failing_paths.is_empty(),
            failing_paths: failing_paths.iter().map(|p| q.path_name(p)).collect(),
        })
    }

    pub fn passed(&self) -> bool {
        self.syntactic && self.necessary
    }
}

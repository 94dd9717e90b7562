use std::collections::BTreeMap;

use super::{AssociatedPoset, PathClasses};
use crate::quiver::Path;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Right,
    Left,
}

/// A choice of path for every comparable pair `s > s'` of `Σ`.
///
/// On the right side the path `u(s, s')` ends at `t(s')` and some member of
/// `s'` is `v·w·u` with `w ∈ s`; the chosen paths satisfy
/// `u(s, s'') ~ u(s, s')·u(s', s'')`. The left side chooses prefixes `v`
/// with `v(s, s'') ~ v(s', s'')·v(s, s')`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompatibleFamily {
    side: Side,
    choices: BTreeMap<(usize, usize), Path>,
}

impl CompatibleFamily {
    pub fn side(&self) -> Side {
        self.side
    }

    /// The path chosen for `s > s'`.
    pub fn get(&self, s: usize, s2: usize) -> Option<&Path> {
        self.choices.get(&(s, s2))
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(usize, usize), &Path)> {
        self.choices.iter()
    }

    pub fn len(&self) -> usize {
        self.choices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.choices.is_empty()
    }
}

/// Candidate paths for `s > s2`, one per class, in path order.
fn candidates(classes: &PathClasses, sigma: &AssociatedPoset, s: usize, s2: usize, side: Side) -> Vec<(Path, usize)> {
    let q = classes.quiver();
    let mut out: BTreeMap<Path, usize> = BTreeMap::new();
    for p in sigma.members(s2) {
        for i in 0..=p.len() {
            for j in i..=p.len() {
                if sigma.element_of(&q.subpath(p, i, j)) != Some(s) {
                    continue;
                }
                let (v, u) = (q.subpath(p, 0, i), q.subpath(p, j, p.len()));
                let (Some(cv), Some(cu)) = (classes.clean_class(&v), classes.clean_class(&u)) else {
                    continue;
                };
                match side {
                    Side::Right => out.insert(u, cu),
                    Side::Left => out.insert(v, cv),
                };
            }
        }
    }
    let mut seen = Vec::new();
    out.into_iter()
        .filter(|(_, c)| {
            let fresh = !seen.contains(c);
            seen.push(*c);
            fresh
        })
        .collect()
}

struct Search<'a> {
    classes: &'a PathClasses,
    side: Side,
    pairs: Vec<(usize, usize)>,
    options: Vec<Vec<(Path, usize)>>,
    /// For each pair index, the 2-chains whose last-assigned pair it is,
    /// given as the pair indices of `(s, s')`, `(s', s'')`, `(s, s'')`.
    checks: Vec<Vec<[usize; 3]>>,
    chosen: Vec<usize>,
}

impl Search<'_> {
    fn holds(&self, [first, second, outer]: [usize; 3]) -> bool {
        let pick = |k: usize| &self.options[k][self.chosen[k]];
        let (a, b) = (&pick(first).0, &pick(second).0);
        let composite = match self.side {
            Side::Right => a.concat(b),
            Side::Left => b.concat(a),
        };
        let Some(composite) = composite else {
            return false;
        };
        self.classes.class_of(&composite) == Some(pick(outer).1)
    }

    fn run(&mut self, k: usize) -> bool {
        if k == self.pairs.len() {
            return true;
        }
        for option in 0..self.options[k].len() {
            self.chosen[k] = option;
            if self.checks[k].iter().all(|&c| self.holds(c)) && self.run(k + 1) {
                return true;
            }
        }
        false
    }
}

/// Backtracking search for the lexicographically first compatible family,
/// with pairs in lexicographic order and candidates in path order.
pub fn find_compatible_family(classes: &PathClasses, sigma: &AssociatedPoset, side: Side) -> Option<CompatibleFamily> {
    let n = sigma.len();
    let mut pairs = Vec::new();
    for s in 0..n {
        for s2 in 0..n {
            if sigma.greater(s, s2) {
                pairs.push((s, s2));
            }
        }
    }
    let pair_index: BTreeMap<(usize, usize), usize> = pairs.iter().enumerate().map(|(i, &p)| (p, i)).collect();
    let options: Vec<Vec<(Path, usize)>> = pairs
        .iter()
        .map(|&(s, s2)| candidates(classes, sigma, s, s2, side))
        .collect();
    if options.iter().any(|o| o.is_empty()) {
        return None;
    }
    let mut checks = vec![Vec::new(); pairs.len()];
    for &(s, s1) in &pairs {
        for s2 in 0..n {
            if sigma.greater(s1, s2) {
                let trio = [pair_index[&(s, s1)], pair_index[&(s1, s2)], pair_index[&(s, s2)]];
                let last = *trio.iter().max().unwrap();
                checks[last].push(trio);
            }
        }
    }
    let mut search = Search {
        classes,
        side,
        chosen: vec![0; pairs.len()],
        pairs,
        options,
        checks,
    };
    if !search.run(0) {
        return None;
    }
    let choices = search
        .pairs
        .iter()
        .enumerate()
        .map(|(k, &pair)| (pair, search.options[k][search.chosen[k]].0.clone()))
        .collect();
    Some(CompatibleFamily { side, choices })
}

//! Reference computations that share no algorithmic code with the library.
//! Presentations and posets are read with the library parsers; everything
//! after that (paths, ideals, quotient bases, complexes, ranks) is redone
//! here from scratch over F_p with p = 32003.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_traits::{Signed, ToPrimitive};
use quiverhh::poset::Poset;
use quiverhh::quiver::Presentation;

pub const P: u64 = 32003;

fn inv(a: u64) -> u64 {
    let (mut base, mut exp, mut acc) = (a % P, P - 2, 1u64);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % P;
        }
        base = base * base % P;
        exp >>= 1;
    }
    acc
}

fn neg(a: u64) -> u64 {
    (P - a % P) % P
}

/// Rank of a dense matrix over F_p.
pub fn dense_rank(mut rows: Vec<Vec<u64>>) -> usize {
    let cols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&r| rows[r][c] != 0) else {
            continue;
        };
        rows.swap(rank, p);
        let scale = inv(rows[rank][c]);
        let pivot: Vec<u64> = rows[rank].iter().map(|v| v * scale % P).collect();
        for r in 0..rows.len() {
            if r != rank && rows[r][c] != 0 {
                let factor = rows[r][c];
                for k in 0..cols {
                    rows[r][k] = (rows[r][k] + P * P - factor * pivot[k] % P) % P;
                }
            }
        }
        rows[rank] = pivot;
        rank += 1;
    }
    rank
}

/// Reduced echelon basis of the row space, as (pivot column, row) pairs.
fn echelon(rows: &[Vec<u64>], cols: usize) -> Vec<(usize, Vec<u64>)> {
    let mut basis: Vec<(usize, Vec<u64>)> = Vec::new();
    for row in rows {
        let mut v = row.clone();
        for (pc, b) in &basis {
            if v[*pc] != 0 {
                let f = v[*pc];
                for k in 0..cols {
                    v[k] = (v[k] + P * P - f * b[k] % P) % P;
                }
            }
        }
        let Some(pc) = (0..cols).find(|&k| v[k] != 0) else {
            continue;
        };
        let s = inv(v[pc]);
        for x in v.iter_mut() {
            *x = *x * s % P;
        }
        for (_, b) in basis.iter_mut() {
            if b[pc] != 0 {
                let f = b[pc];
                for k in 0..cols {
                    b[k] = (b[k] + P * P - f * v[k] % P) % P;
                }
            }
        }
        basis.push((pc, v));
    }
    basis
}

fn reduce(v: &mut [u64], basis: &[(usize, Vec<u64>)]) {
    for (pc, b) in basis {
        if v[*pc] != 0 {
            let f = v[*pc];
            for k in 0..v.len() {
                v[k] = (v[k] + P * P - f * b[k] % P) % P;
            }
        }
    }
}

/// Incremental sparse elimination for ranks of large sparse matrices.
#[derive(Default)]
pub struct Sparse {
    pivots: HashMap<usize, BTreeMap<usize, u64>>,
}

impl Sparse {
    pub fn insert(&mut self, mut row: BTreeMap<usize, u64>) {
        row.retain(|_, v| *v != 0);
        while let Some((&lead, &val)) = row.iter().next() {
            match self.pivots.get(&lead) {
                None => {
                    let s = inv(val);
                    for v in row.values_mut() {
                        *v = *v * s % P;
                    }
                    self.pivots.insert(lead, row);
                    return;
                }
                Some(p) => {
                    for (&c, &pv) in p {
                        let e = row.entry(c).or_insert(0);
                        *e = (*e + P * P - val * pv % P) % P;
                    }
                    row.retain(|_, v| *v != 0);
                }
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OPath {
    pub source: usize,
    pub target: usize,
    pub arrows: Vec<usize>,
}

/// A bound quiver algebra rebuilt from its presentation by explicit linear algebra.
pub struct OracleAlgebra {
    pub arrow_names: Vec<String>,
    pub vertex_names: Vec<String>,
    pub arrow_ends: Vec<(usize, usize)>,
    pub bound: usize,
    /// All paths of length below the bound.
    pub paths: Vec<OPath>,
    pub path_index: HashMap<OPath, usize>,
    /// Echelon basis of the truncated ideal, coordinates over `paths`.
    pub ideal: Vec<(usize, Vec<u64>)>,
    /// Indices into `paths` of the quotient basis.
    pub basis: Vec<usize>,
    pub mul: Vec<Vec<Vec<(usize, u64)>>>,
    /// Generators of the truncated ideal, grouped by endpoints.
    pub generators: BTreeMap<(usize, usize), Vec<Vec<u64>>>,
}

fn to_fp(q: &num_rational::BigRational) -> u64 {
    let n = q.numer().abs().to_u64().unwrap() % P;
    let d = q.denom().to_u64().unwrap() % P;
    let v = n * inv(d) % P;
    if q.is_negative() {
        neg(v)
    } else {
        v
    }
}

impl OracleAlgebra {
    pub fn new(pr: &Presentation) -> Self {
        let q = pr.quiver();
        let vertex_names: Vec<String> = q.vertices().map(|v| q.vertex_name(v).to_string()).collect();
        let arrow_names: Vec<String> = q.arrows().iter().map(|a| a.name.clone()).collect();
        let arrow_ends: Vec<(usize, usize)> = q.arrows().iter().map(|a| (a.source.0, a.target.0)).collect();
        let bound = pr.bound();
        let mut paths: Vec<OPath> = (0..vertex_names.len())
            .map(|v| OPath {
                source: v,
                target: v,
                arrows: vec![],
            })
            .collect();
        let mut frontier: Vec<OPath> = paths.clone();
        for _ in 1..bound {
            let mut next = Vec::new();
            for p in &frontier {
                for (a, &(s, t)) in arrow_ends.iter().enumerate() {
                    if s == p.target {
                        let mut arrows = p.arrows.clone();
                        arrows.push(a);
                        next.push(OPath {
                            source: p.source,
                            target: t,
                            arrows,
                        });
                    }
                }
            }
            paths.extend(next.iter().cloned());
            frontier = next;
        }
        let path_index: HashMap<OPath, usize> = paths.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let n = paths.len();

        let mut gens: Vec<Vec<u64>> = Vec::new();
        let mut generators: BTreeMap<(usize, usize), Vec<Vec<u64>>> = BTreeMap::new();
        for rel in pr.relations() {
            let terms: Vec<(u64, OPath)> = rel
                .terms()
                .iter()
                .map(|(c, p)| {
                    (
                        to_fp(c),
                        OPath {
                            source: p.source().0,
                            target: p.target().0,
                            arrows: p.arrows().iter().map(|a| a.0).collect(),
                        },
                    )
                })
                .collect();
            let (x, y) = (terms[0].1.source, terms[0].1.target);
            for u in paths.iter().filter(|u| u.target == x) {
                for v in paths.iter().filter(|v| v.source == y) {
                    let mut vec = vec![0u64; n];
                    for (c, p) in &terms {
                        let mut arrows = u.arrows.clone();
                        arrows.extend(&p.arrows);
                        arrows.extend(&v.arrows);
                        let full = OPath {
                            source: u.source,
                            target: v.target,
                            arrows,
                        };
                        if let Some(&i) = path_index.get(&full) {
                            vec[i] = (vec[i] + c) % P;
                        }
                    }
                    if vec.iter().any(|&c| c != 0) {
                        generators.entry((u.source, v.target)).or_default().push(vec.clone());
                        gens.push(vec);
                    }
                }
            }
        }
        let ideal = echelon(&gens, n);
        let pivots: BTreeSet<usize> = ideal.iter().map(|(c, _)| *c).collect();
        let basis: Vec<usize> = (0..n).filter(|i| !pivots.contains(i)).collect();
        let mut alg = OracleAlgebra {
            arrow_names,
            vertex_names,
            arrow_ends,
            bound,
            paths,
            path_index,
            ideal,
            basis,
            mul: Vec::new(),
            generators,
        };
        let d = alg.basis.len();
        let mut mul = vec![vec![Vec::new(); d]; d];
        for i in 0..d {
            for j in 0..d {
                let (p, q) = (&alg.paths[alg.basis[i]], &alg.paths[alg.basis[j]]);
                if p.target != q.source {
                    continue;
                }
                let mut arrows = p.arrows.clone();
                arrows.extend(&q.arrows);
                let prod = OPath {
                    source: p.source,
                    target: q.target,
                    arrows,
                };
                mul[i][j] = alg.normal_form(&prod);
            }
        }
        alg.mul = mul;
        alg
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Coordinates over the quotient basis; zero for paths of length `>= m`.
    pub fn normal_form(&self, p: &OPath) -> Vec<(usize, u64)> {
        let Some(&i) = self.path_index.get(p) else {
            return Vec::new();
        };
        let mut v = vec![0u64; self.paths.len()];
        v[i] = 1;
        reduce(&mut v, &self.ideal);
        self.basis
            .iter()
            .enumerate()
            .filter(|(_, &b)| v[b] != 0)
            .map(|(k, &b)| (k, v[b]))
            .collect()
    }

    pub fn in_ideal(&self, p: &OPath) -> bool {
        p.arrows.len() >= self.bound || self.normal_form(p).is_empty()
    }

    pub fn name(&self, p: &OPath) -> String {
        if p.arrows.is_empty() {
            format!("e_{}", self.vertex_names[p.source])
        } else {
            let names: Vec<&str> = p.arrows.iter().map(|&a| self.arrow_names[a].as_str()).collect();
            names.join(".")
        }
    }
}

/// `dim HH^n` for `0 <= n <= max` from the unnormalized bar complex `Hom_k(A^{⊗n}, A)`.
pub fn bar_hh(a: &OracleAlgebra, max: usize) -> Vec<usize> {
    let d = a.dim();
    let decode = |mut code: usize, len: usize| {
        let mut t = vec![0; len];
        for slot in t.iter_mut().rev() {
            *slot = code % d;
            code /= d;
        }
        t
    };
    let encode = |t: &[usize]| t.iter().fold(0, |acc, &x| acc * d + x);
    let mut factors: Vec<Vec<(usize, usize, u64)>> = vec![Vec::new(); d];
    for x in 0..d {
        for y in 0..d {
            for &(k, c) in &a.mul[x][y] {
                factors[k].push((x, y, c));
            }
        }
    }
    let rank = |n: usize| -> usize {
        let mut e = Sparse::default();
        for tau_code in 0..d.pow(n as u32) {
            let tau = decode(tau_code, n);
            for value in 0..d {
                let mut row: BTreeMap<usize, u64> = BTreeMap::new();
                let mut add = |sigma: &[usize], c: usize, v: u64| {
                    let key = encode(sigma) * d + c;
                    let e = row.entry(key).or_insert(0);
                    *e = (*e + v) % P;
                };
                for x in 0..d {
                    let mut sigma = vec![x];
                    sigma.extend(&tau);
                    for &(c, v) in &a.mul[x][value] {
                        add(&sigma, c, v);
                    }
                }
                for i in 1..=n {
                    for &(x, y, lambda) in &factors[tau[i - 1]] {
                        let mut sigma = tau[..i - 1].to_vec();
                        sigma.push(x);
                        sigma.push(y);
                        sigma.extend(&tau[i..]);
                        add(&sigma, value, if i % 2 == 1 { neg(lambda) } else { lambda });
                    }
                }
                for y in 0..d {
                    let mut sigma = tau.clone();
                    sigma.push(y);
                    for &(c, v) in &a.mul[value][y] {
                        add(&sigma, c, if n.is_multiple_of(2) { neg(v) } else { v });
                    }
                }
                e.insert(row);
            }
        }
        e.rank()
    };
    let ranks: Vec<usize> = (0..=max).map(rank).collect();
    (0..=max)
        .map(|n| d.pow(n as u32 + 1) - ranks[n] - if n == 0 { 0 } else { ranks[n - 1] })
        .collect()
}

/// Strict chains with `k + 1` elements, enumerated from the order relation.
fn chains(p: &Poset, k: usize) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = (0..p.len()).map(|x| vec![x]).collect();
    for _ in 0..k {
        out = out
            .into_iter()
            .flat_map(|c| {
                let last = *c.last().unwrap();
                (0..p.len()).filter(move |&y| p.greater(last, y)).map(move |y| {
                    let mut longer = c.clone();
                    longer.push(y);
                    longer
                })
            })
            .collect();
    }
    out
}

/// `dim SH^n(P)` for `0 <= n <= max` from the order complex.
pub fn simplicial(p: &Poset, max: usize) -> Vec<usize> {
    let bases: Vec<Vec<Vec<usize>>> = (0..=max + 1).map(|k| chains(p, k)).collect();
    let ranks: Vec<usize> = (0..=max)
        .map(|k| {
            let index: HashMap<&Vec<usize>, usize> = bases[k].iter().enumerate().map(|(i, c)| (c, i)).collect();
            let rows: Vec<Vec<u64>> = bases[k + 1]
                .iter()
                .map(|c| {
                    let mut row = vec![0u64; bases[k].len()];
                    for omit in 0..c.len() {
                        let mut face = c.clone();
                        face.remove(omit);
                        let i = index[&face];
                        row[i] = (row[i] + if omit % 2 == 0 { 1 } else { P - 1 }) % P;
                    }
                    row
                })
                .collect();
            if rows.is_empty() || bases[k].is_empty() {
                0
            } else {
                dense_rank(rows)
            }
        })
        .collect();
    (0..=max)
        .map(|k| bases[k].len() - ranks[k] - if k == 0 { 0 } else { ranks[k - 1] })
        .collect()
}

/// Blocks of the truncated ideal at each vertex pair: connected components
/// of the union of all minimal supports (circuits), found by testing every
/// subset of the support. `None` when some support exceeds `max_support`.
pub fn blocks_by_subsets(a: &OracleAlgebra, max_support: usize) -> Option<BTreeMap<(usize, usize), Vec<Vec<String>>>> {
    let mut out = BTreeMap::new();
    for (&(x, y), gens) in &a.generators {
        let n = a.paths.len();
        let basis = echelon(gens, n);
        if basis.is_empty() {
            continue;
        }
        let support: Vec<usize> = (0..n).filter(|&c| basis.iter().any(|(_, b)| b[c] != 0)).collect();
        if support.len() > max_support {
            return None;
        }
        let dim = basis.len();
        // dim(Ī ∩ span S) = dim Ī - rank of Ī restricted to the coordinates outside S
        let meet = |mask: u32| -> usize {
            let outside: Vec<usize> = (0..support.len()).filter(|i| mask & (1 << i) == 0).map(|i| support[i]).collect();
            if outside.is_empty() {
                return dim;
            }
            let rows: Vec<Vec<u64>> = basis.iter().map(|(_, b)| outside.iter().map(|&c| b[c]).collect()).collect();
            dim - dense_rank(rows)
        };
        let s = support.len();
        let mut parent: Vec<usize> = (0..s).collect();
        fn root(parent: &mut [usize], mut i: usize) -> usize {
            while parent[i] != i {
                i = parent[i];
            }
            i
        }
        let mut covered = vec![false; s];
        for mask in 1u32..(1 << s) {
            if meet(mask) == 0 {
                continue;
            }
            let minimal = (0..s)
                .filter(|i| mask & (1 << i) != 0)
                .all(|i| meet(mask & !(1 << i)) == 0);
            if !minimal {
                continue;
            }
            let members: Vec<usize> = (0..s).filter(|i| mask & (1 << i) != 0).collect();
            for &m in &members {
                covered[m] = true;
            }
            for w in members.windows(2) {
                let (ra, rb) = (root(&mut parent, w[0]), root(&mut parent, w[1]));
                parent[ra.max(rb)] = ra.min(rb);
            }
        }
        let mut groups: BTreeMap<usize, Vec<String>> = BTreeMap::new();
        for i in (0..s).filter(|&i| covered[i]) {
            let r = root(&mut parent, i);
            groups.entry(r).or_default().push(a.name(&a.paths[support[i]]));
        }
        let mut list: Vec<Vec<String>> = groups.into_values().collect();
        for g in list.iter_mut() {
            g.sort();
        }
        list.sort();
        out.insert((x, y), list);
    }
    Some(out)
}

/// Path classes by brute-force rewriting: paths up to length `m + 1`,
/// `u p v ~ u q v` for `p, q` in a common block, transitively closed.
/// Returns the clean classes (no member in `I`) restricted to paths of
/// length below `m`, as sorted lists of path names.
pub fn clean_classes_by_rewriting(a: &OracleAlgebra, blocks: &BTreeMap<(usize, usize), Vec<Vec<String>>>) -> BTreeSet<Vec<String>> {
    let limit = a.bound + 1;
    let mut all: Vec<OPath> = a.paths.clone();
    let mut frontier: Vec<OPath> = a.paths.iter().filter(|p| p.arrows.len() + 1 == a.bound).cloned().collect();
    for _ in a.bound..=limit {
        let mut next = Vec::new();
        for p in &frontier {
            for (k, &(s, t)) in a.arrow_ends.iter().enumerate() {
                if s == p.target {
                    let mut arrows = p.arrows.clone();
                    arrows.push(k);
                    next.push(OPath {
                        source: p.source,
                        target: t,
                        arrows,
                    });
                }
            }
        }
        all.extend(next.iter().cloned());
        frontier = next;
    }
    let by_name: HashMap<String, usize> = all.iter().enumerate().map(|(i, p)| (a.name(p), i)).collect();
    let mut parent: Vec<usize> = (0..all.len()).collect();
    fn root(parent: &mut [usize], mut i: usize) -> usize {
        while parent[i] != i {
            i = parent[i];
        }
        i
    }
    for block in blocks.values().flatten().filter(|b| b.len() > 1) {
        let members: Vec<&OPath> = block.iter().map(|n| &all[by_name[n]]).collect();
        let (x, y) = (members[0].source, members[0].target);
        for u in all.iter().filter(|u| u.target == x) {
            for v in all.iter().filter(|v| v.source == y) {
                let ids: Vec<usize> = members
                    .iter()
                    .filter_map(|p| {
                        let mut arrows = u.arrows.clone();
                        arrows.extend(&p.arrows);
                        arrows.extend(&v.arrows);
                        let full = OPath {
                            source: u.source,
                            target: v.target,
                            arrows,
                        };
                        (full.arrows.len() <= limit).then(|| by_name[&a.name(&full)])
                    })
                    .collect();
                for w in ids.windows(2) {
                    let (ra, rb) = (root(&mut parent, w[0]), root(&mut parent, w[1]));
                    parent[ra.max(rb)] = ra.min(rb);
                }
            }
        }
    }
    let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for i in 0..all.len() {
        let r = root(&mut parent, i);
        groups.entry(r).or_default().push(i);
    }
    groups
        .into_values()
        .filter(|g| g.iter().all(|&i| !a.in_ideal(&all[i])))
        .map(|g| {
            let mut names: Vec<String> = g.iter().map(|&i| a.name(&all[i])).collect();
            names.sort();
            names
        })
        .collect()
}

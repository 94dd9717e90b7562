//! Quivers, paths and presentations by generators and a nilpotency bound.

pub mod format;
mod path;
mod presentation;

pub use format::{parse_presentation, write_presentation};
pub use path::{ArrowId, Path, VertexId};
pub use presentation::{LinComb, Presentation};

use std::collections::HashMap;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub source: VertexId,
    pub target: VertexId,
}

/// A finite quiver. Arrow identifiers follow the lexicographic order of the
/// arrow names, so comparing identifiers compares names.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
    vertex_index: HashMap<String, VertexId>,
    arrow_index: HashMap<String, ArrowId>,
}

impl Quiver {
    /// Builds a quiver from vertex names and `(name, source, target)` arrow triples.
    pub fn new<V, A>(vertices: V, arrows: A) -> Result<Self>
    where
        V: IntoIterator,
        V::Item: Into<String>,
        A: IntoIterator<Item = (String, String, String)>,
    {
        let vertices: Vec<String> = vertices.into_iter().map(Into::into).collect();
        if vertices.is_empty() {
            return Err(Error::InvalidPresentation("quiver has no vertices".into()));
        }
        let mut vertex_index = HashMap::new();
        for (i, v) in vertices.iter().enumerate() {
            if vertex_index.insert(v.clone(), VertexId(i)).is_some() {
                return Err(Error::InvalidPresentation(format!("duplicate vertex `{v}`")));
            }
        }
        let mut list = Vec::new();
        for (name, s, t) in arrows {
            let source = *vertex_index.get(&s).ok_or_else(|| Error::UnknownVertex(s.clone()))?;
            let target = *vertex_index.get(&t).ok_or_else(|| Error::UnknownVertex(t.clone()))?;
            list.push(Arrow { name, source, target });
        }
        list.sort_by(|a, b| a.name.cmp(&b.name));
        let mut arrow_index = HashMap::new();
        for (i, a) in list.iter().enumerate() {
            if arrow_index.insert(a.name.clone(), ArrowId(i)).is_some() {
                return Err(Error::InvalidPresentation(format!("duplicate arrow `{}`", a.name)));
            }
        }
        Ok(Quiver {
            vertices,
            arrows: list,
            vertex_index,
            arrow_index,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        (0..self.vertices.len()).map(VertexId)
    }

    pub fn vertex_name(&self, v: VertexId) -> &str {
        &self.vertices[v.0]
    }

    pub fn vertex(&self, name: &str) -> Result<VertexId> {
        self.vertex_index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownVertex(name.to_string()))
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow(&self, id: ArrowId) -> &Arrow {
        &self.arrows[id.0]
    }

    pub fn arrow_id(&self, name: &str) -> Result<ArrowId> {
        self.arrow_index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownArrow(name.to_string()))
    }

    pub fn arrows_from(&self, v: VertexId) -> impl Iterator<Item = ArrowId> + '_ {
        self.arrows
            .iter()
            .enumerate()
            .filter(move |(_, a)| a.source == v)
            .map(|(i, _)| ArrowId(i))
    }

    pub fn arrows_into(&self, v: VertexId) -> impl Iterator<Item = ArrowId> + '_ {
        self.arrows
            .iter()
            .enumerate()
            .filter(move |(_, a)| a.target == v)
            .map(|(i, _)| ArrowId(i))
    }

    pub fn trivial(&self, v: VertexId) -> Path {
        Path::trivial(v)
    }

    pub fn arrow_path(&self, id: ArrowId) -> Path {
        let a = &self.arrows[id.0];
        Path::from_parts(a.source, a.target, vec![id])
    }

    /// Vertex reached after the first `i` arrows of `p`.
    pub fn vertex_at(&self, p: &Path, i: usize) -> VertexId {
        if i == 0 {
            p.source()
        } else {
            self.arrows[p.arrows()[i - 1].0].target
        }
    }

    /// The subpath of `p` made of arrows `start..end`; an empty range gives
    /// the trivial path at the corresponding vertex.
    pub fn subpath(&self, p: &Path, start: usize, end: usize) -> Path {
        Path::from_parts(
            self.vertex_at(p, start),
            self.vertex_at(p, end),
            p.arrows()[start..end].to_vec(),
        )
    }

    /// Parses a dotted arrow sequence such as `alpha.gamma`.
    pub fn path_from_names(&self, dotted: &str) -> Result<Path> {
        let mut path: Option<Path> = None;
        for name in dotted.split('.') {
            let step = self.arrow_path(self.arrow_id(name)?);
            path = Some(match path {
                None => step,
                Some(p) => self.compose(&p, &step)?,
            });
        }
        path.ok_or_else(|| Error::UnknownArrow(dotted.to_string()))
    }

    /// Concatenation `p` then `q`; trivial paths act as identities.
    pub fn compose(&self, p: &Path, q: &Path) -> Result<Path> {
        p.concat(q).ok_or_else(|| {
            Error::NotComposable(
                self.path_name(p),
                self.vertex_name(p.target()).to_string(),
                self.path_name(q),
                self.vertex_name(q.source()).to_string(),
            )
        })
    }

    /// `e_<vertex>` for trivial paths, dotted arrow names otherwise.
    pub fn path_name(&self, p: &Path) -> String {
        if p.is_trivial() {
            format!("e_{}", self.vertex_name(p.source()))
        } else {
            p.arrows()
                .iter()
                .map(|a| self.arrows[a.0].name.as_str())
                .collect::<Vec<_>>()
                .join(".")
        }
    }

    /// All paths of length at most `max_len` with the given optional
    /// endpoints, in the global path order.
    pub fn enumerate_paths(&self, max_len: usize, from: Option<&str>, to: Option<&str>) -> Result<Vec<Path>> {
        let from = from.map(|n| self.vertex(n)).transpose()?;
        let to = to.map(|n| self.vertex(n)).transpose()?;
        let mut layer: Vec<Path> = self
            .vertices()
            .filter(|v| from.is_none_or(|f| f == *v))
            .map(Path::trivial)
            .collect();
        let mut out = Vec::new();
        for len in 0..=max_len {
            out.extend(layer.iter().filter(|p| to.is_none_or(|t| t == p.target())).cloned());
            if len == max_len {
                break;
            }
            layer = layer
                .iter()
                .flat_map(|p| {
                    self.arrows_from(p.target())
                        .map(move |a| p.concat(&self.arrow_path(a)).expect("composable by construction"))
                })
                .collect();
        }
        out.sort();
        Ok(out)
    }

    /// Connectedness of the underlying undirected graph.
    pub fn is_connected(&self) -> bool {
        let n = self.vertices.len();
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for a in &self.arrows {
                for (x, y) in [(a.source.0, a.target.0), (a.target.0, a.source.0)] {
                    if x == v && !seen[y] {
                        seen[y] = true;
                        stack.push(y);
                    }
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Whether some oriented cycle exists.
    pub fn has_oriented_cycle(&self) -> bool {
        // Kahn's algorithm: a cycle leaves vertices with positive in-degree.
        let n = self.vertices.len();
        let mut indeg = vec![0usize; n];
        for a in &self.arrows {
            indeg[a.target.0] += 1;
        }
        let mut queue: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
        let mut removed = 0;
        while let Some(v) = queue.pop() {
            removed += 1;
            for a in &self.arrows {
                if a.source.0 == v {
                    indeg[a.target.0] -= 1;
                    if indeg[a.target.0] == 0 {
                        queue.push(a.target.0);
                    }
                }
            }
        }
        removed < n
    }
}

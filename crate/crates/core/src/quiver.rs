//! Finite quivers and their directed paths, the monomials of the path algebra.

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuiverError {
    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(String),
    #[error("duplicate arrow `{0}`")]
    DuplicateArrow(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("unknown arrow `{0}`")]
    UnknownArrow(String),
    #[error("arrows `{0}` and `{1}` do not compose")]
    NotComposable(String, String),
    #[error("path is not a prefix of the given path")]
    NotADivisor,
    #[error("a nontrivial path needs at least one arrow")]
    EmptyPath,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub u32);

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ArrowId(pub u32);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub source: VertexId,
    pub target: VertexId,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
    vertex_index: HashMap<String, VertexId>,
    arrow_index: HashMap<String, ArrowId>,
}

impl Quiver {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_vertex(&mut self, name: &str) -> Result<VertexId, QuiverError> {
        if self.vertex_index.contains_key(name) {
            return Err(QuiverError::DuplicateVertex(name.to_string()));
        }
        let id = VertexId(self.vertices.len() as u32);
        self.vertices.push(name.to_string());
        self.vertex_index.insert(name.to_string(), id);
        Ok(id)
    }

    pub fn add_arrow(&mut self, name: &str, source: &str, target: &str) -> Result<ArrowId, QuiverError> {
        if self.arrow_index.contains_key(name) {
            return Err(QuiverError::DuplicateArrow(name.to_string()));
        }
        let source = self.vertex(source)?;
        let target = self.vertex(target)?;
        let id = ArrowId(self.arrows.len() as u32);
        self.arrows.push(Arrow { name: name.to_string(), source, target });
        self.arrow_index.insert(name.to_string(), id);
        Ok(id)
    }

    pub fn vertex(&self, name: &str) -> Result<VertexId, QuiverError> {
        self.vertex_index
            .get(name)
            .copied()
            .ok_or_else(|| QuiverError::UnknownVertex(name.to_string()))
    }

    pub fn arrow_id(&self, name: &str) -> Result<ArrowId, QuiverError> {
        self.arrow_index
            .get(name)
            .copied()
            .ok_or_else(|| QuiverError::UnknownArrow(name.to_string()))
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn num_arrows(&self) -> usize {
        self.arrows.len()
    }

    pub fn vertex_name(&self, v: VertexId) -> &str {
        &self.vertices[v.0 as usize]
    }

    pub fn arrow(&self, a: ArrowId) -> &Arrow {
        &self.arrows[a.0 as usize]
    }

    pub fn vertex_ids(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.vertices.len() as u32).map(VertexId)
    }

    pub fn arrow_ids(&self) -> impl Iterator<Item = ArrowId> + '_ {
        (0..self.arrows.len() as u32).map(ArrowId)
    }

    /// Arrows starting at `v`, in declaration order.
    pub fn arrows_from(&self, v: VertexId) -> impl Iterator<Item = ArrowId> + '_ {
        self.arrow_ids().filter(move |&a| self.arrow(a).source == v)
    }

    pub fn trivial_path(&self, v: VertexId) -> Path {
        Path::trivial(v)
    }

    pub fn arrow_path(&self, a: ArrowId) -> Path {
        let arr = self.arrow(a);
        Path { start: arr.source, end: arr.target, arrows: vec![a] }
    }

    /// Builds the path through the given arrows, which must compose.
    pub fn path(&self, arrows: &[ArrowId]) -> Result<Path, QuiverError> {
        let (first, rest) = arrows.split_first().ok_or(QuiverError::EmptyPath)?;
        let mut p = self.arrow_path(*first);
        for &a in rest {
            p = p.extend(self, a).ok_or_else(|| {
                QuiverError::NotComposable(
                    self.arrow(*p.arrows.last().unwrap()).name.clone(),
                    self.arrow(a).name.clone(),
                )
            })?;
        }
        Ok(p)
    }

    /// All paths of exactly `degree` arrows starting at `v`, in lexicographic
    /// order of arrow ids.
    pub fn paths_of_degree_from(&self, v: VertexId, degree: usize) -> Vec<Path> {
        let mut layer = vec![Path::trivial(v)];
        for _ in 0..degree {
            layer = layer
                .iter()
                .flat_map(|p| self.arrows_from(p.end).map(move |a| (p, a)))
                .map(|(p, a)| p.extend(self, a).expect("arrow leaves the path end"))
                .collect();
        }
        layer
    }

    pub fn paths_of_degree(&self, degree: usize) -> Vec<Path> {
        self.vertex_ids().flat_map(|v| self.paths_of_degree_from(v, degree)).collect()
    }

    pub fn display_path<'a>(&'a self, p: &'a Path) -> PathDisplay<'a> {
        PathDisplay { quiver: self, path: p }
    }
}

/// A directed path. The empty arrow sequence is the trivial path `1_v`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    start: VertexId,
    end: VertexId,
    arrows: Vec<ArrowId>,
}

impl Path {
    pub fn trivial(v: VertexId) -> Self {
        Self { start: v, end: v, arrows: Vec::new() }
    }

    pub fn start(&self) -> VertexId {
        self.start
    }

    pub fn end(&self) -> VertexId {
        self.end
    }

    pub fn arrows(&self) -> &[ArrowId] {
        &self.arrows
    }

    pub fn degree(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }

    /// Concatenation; `None` is the zero of the path algebra.
    pub fn compose(&self, other: &Path) -> Option<Path> {
        if self.end != other.start {
            return None;
        }
        let mut arrows = Vec::with_capacity(self.arrows.len() + other.arrows.len());
        arrows.extend_from_slice(&self.arrows);
        arrows.extend_from_slice(&other.arrows);
        Some(Path { start: self.start, end: other.end, arrows })
    }

    pub fn extend(&self, quiver: &Quiver, a: ArrowId) -> Option<Path> {
        let arr = quiver.arrow(a);
        if arr.source != self.end {
            return None;
        }
        let mut arrows = self.arrows.clone();
        arrows.push(a);
        Some(Path { start: self.start, end: arr.target, arrows })
    }

    /// Whether `self` is a left factor of `other`, i.e. `self * r = other`
    /// for some path `r`.
    pub fn is_prefix_of(&self, other: &Path) -> bool {
        self.start == other.start
            && other.arrows.starts_with(&self.arrows)
            && (self.arrows.len() < other.arrows.len() || self.end == other.end)
    }

    /// The unique `r` with `self * r = other`.
    pub fn complement_in(&self, quiver: &Quiver, other: &Path) -> Result<Path, QuiverError> {
        if !self.is_prefix_of(other) {
            return Err(QuiverError::NotADivisor);
        }
        let rest = &other.arrows[self.arrows.len()..];
        if rest.is_empty() {
            Ok(Path::trivial(self.end))
        } else {
            quiver.path(rest)
        }
    }

    /// The prefix made of the first `len` arrows.
    pub fn prefix(&self, quiver: &Quiver, len: usize) -> Path {
        assert!(len <= self.arrows.len());
        if len == 0 {
            return Path::trivial(self.start);
        }
        let end = quiver.arrow(self.arrows[len - 1]).target;
        Path { start: self.start, end, arrows: self.arrows[..len].to_vec() }
    }
}

pub struct PathDisplay<'a> {
    quiver: &'a Quiver,
    path: &'a Path,
}

impl fmt::Display for PathDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.path.is_trivial() {
            return write!(f, "id({})", self.quiver.vertex_name(self.path.start));
        }
        for (k, a) in self.path.arrows.iter().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            f.write_str(&self.quiver.arrow(*a).name)?;
        }
        Ok(())
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use proptest::prelude::*;

    pub fn q1() -> Quiver {
        let mut q = Quiver::new();
        q.add_vertex("v").unwrap();
        q.add_arrow("x", "v", "v").unwrap();
        q
    }

    pub fn q2() -> Quiver {
        let mut q = Quiver::new();
        q.add_vertex("u").unwrap();
        q.add_vertex("v").unwrap();
        q.add_arrow("a", "u", "v").unwrap();
        q.add_arrow("b", "v", "u").unwrap();
        q
    }

    fn p(q: &Quiver, names: &[&str]) -> Path {
        let ids: Vec<_> = names.iter().map(|n| q.arrow_id(n).unwrap()).collect();
        q.path(&ids).unwrap()
    }

    #[test]
    fn compose_examples() {
        let q = q1();
        let x = p(&q, &["x"]);
        let xx = x.compose(&x).unwrap();
        assert_eq!(xx.degree(), 2);
        let v = q.vertex("v").unwrap();
        assert_eq!(Path::trivial(v).compose(&x).unwrap(), x);

        let q = q2();
        let a = p(&q, &["a"]);
        assert!(a.compose(&a).is_none());
    }

    #[test]
    fn prefix_examples() {
        let q = q1();
        let x = p(&q, &["x"]);
        let xx = p(&q, &["x", "x"]);
        assert!(x.is_prefix_of(&xx));
        assert_eq!(x.complement_in(&q, &xx).unwrap(), x);
        assert!(!xx.is_prefix_of(&x));
        assert_eq!(xx.complement_in(&q, &x), Err(QuiverError::NotADivisor));

        let q = q2();
        let aba = p(&q, &["a", "b", "a"]);
        let a = p(&q, &["a"]);
        assert!(a.is_prefix_of(&aba));
        assert_eq!(a.complement_in(&q, &aba).unwrap(), p(&q, &["b", "a"]));
    }

    #[test]
    fn trivial_paths_as_prefixes() {
        let q = q2();
        let u = q.vertex("u").unwrap();
        let v = q.vertex("v").unwrap();
        let a = p(&q, &["a"]);
        assert!(Path::trivial(u).is_prefix_of(&a));
        assert!(!Path::trivial(v).is_prefix_of(&a));
        assert!(!Path::trivial(v).is_prefix_of(&Path::trivial(u)));
        assert_eq!(a.complement_in(&q, &a).unwrap(), Path::trivial(v));
    }

    #[test]
    fn non_composable_arrows_are_rejected() {
        let q = q2();
        let a = q.arrow_id("a").unwrap();
        assert!(matches!(q.path(&[a, a]), Err(QuiverError::NotComposable(..))));
        let mut q = q2();
        assert!(q.add_vertex("u").is_err());
        assert!(q.add_arrow("c", "u", "w").is_err());
    }

    fn two_loop_quiver() -> Quiver {
        let mut q = Quiver::new();
        q.add_vertex("u").unwrap();
        q.add_vertex("v").unwrap();
        q.add_arrow("a", "u", "v").unwrap();
        q.add_arrow("b", "v", "u").unwrap();
        q.add_arrow("c", "v", "v").unwrap();
        q
    }

    fn random_path(q: &Quiver, start: u32, choices: &[usize]) -> Path {
        let mut path = Path::trivial(VertexId(start));
        for &c in choices {
            let out: Vec<_> = q.arrows_from(path.end()).collect();
            if out.is_empty() {
                break;
            }
            path = path.extend(q, out[c % out.len()]).unwrap();
        }
        path
    }

    proptest! {
        #[test]
        fn compose_is_associative(s in 0u32..2, c1 in prop::collection::vec(0usize..3, 0..4),
                                  c2 in prop::collection::vec(0usize..3, 0..4),
                                  c3 in prop::collection::vec(0usize..3, 0..4)) {
            let q = two_loop_quiver();
            let a = random_path(&q, s, &c1);
            let b = random_path(&q, a.end().0, &c2);
            let c = random_path(&q, b.end().0, &c3);
            let left = a.compose(&b).unwrap().compose(&c).unwrap();
            let right = a.compose(&b.compose(&c).unwrap()).unwrap();
            prop_assert_eq!(left, right);
        }

        #[test]
        fn unique_factorization(s in 0u32..2, c in prop::collection::vec(0usize..3, 0..6)) {
            let q = two_loop_quiver();
            let target = random_path(&q, s, &c);
            let mut prefixes = Vec::new();
            for d in 0..=target.degree() {
                for cand in q.paths_of_degree_from(target.start(), d) {
                    if cand.is_prefix_of(&target) {
                        let rest = cand.complement_in(&q, &target).unwrap();
                        prop_assert_eq!(cand.compose(&rest).unwrap(), target.clone());
                        prefixes.push(cand);
                    }
                }
            }
            prop_assert_eq!(prefixes.len(), target.degree() + 1);
        }
    }
}

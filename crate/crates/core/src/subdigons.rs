//! Subdigons: polygons with a designated roof edge, dissected into faces by
//! noncrossing arcs (parallel arcs allowed, so bigon faces occur).
//!
//! A subdigon is stored recursively. The central face is the face containing
//! the roof; its remaining edges, read counterclockwise from the roof, are
//! slots. A slot is either a boundary edge of the whole polygon or an arc
//! along which a smaller subdigon is glued, with that arc as its roof.
//!
//! Text form mirrors the tree bracket form: a face is `(` + slots + `)`, a
//! boundary slot is `()`, and the trivial subdigon (a lone roofed edge) is
//! `*e*`.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::series::{ordered_splits, BigCount, TypeVector};
use crate::trees::{OrderedTree, TreeError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SubdigonError {
    #[error("the trivial subdigon has no faces")]
    Trivial,
    #[error("a face needs at least one non-roof edge")]
    EmptyFace,
    #[error("a composed face needs at least one non-roof edge")]
    ZeroArity,
    #[error("mark {mark} lies past the first external face ({limit} markable edges)")]
    InvalidMark { mark: usize, limit: usize },
    #[error(transparent)]
    Parse(#[from] TreeError),
}

/// Address of a face: the glued-slot indices on the way from the central face.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct FaceId(Vec<usize>);

/// Address of a boundary edge: its face's path followed by its slot index.
/// The lone edge of the trivial subdigon has the empty path.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct EdgeId(Vec<usize>);

impl FaceId {
    pub fn central() -> Self {
        FaceId(Vec::new())
    }

    pub fn path(&self) -> &[usize] {
        &self.0
    }
}

impl EdgeId {
    pub fn path(&self) -> &[usize] {
        &self.0
    }

    /// The face this edge bounds, or `None` for the lone trivial edge.
    pub fn face(&self) -> Option<FaceId> {
        let (_, parent) = self.0.split_last()?;
        Some(FaceId(parent.to_vec()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Slot {
    Boundary,
    Glued(Face),
}

/// A face with `slots.len() + 1` edges: the roof and its slots.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Face {
    slots: Vec<Slot>,
}

impl Face {
    pub fn new(slots: Vec<Slot>) -> Result<Self, SubdigonError> {
        if slots.is_empty() {
            return Err(SubdigonError::EmptyFace);
        }
        Ok(Face { slots })
    }

    /// A face whose non-roof edges are all boundary edges.
    pub fn external(n: usize) -> Result<Self, SubdigonError> {
        Face::new(vec![Slot::Boundary; n])
    }

    pub fn slots(&self) -> &[Slot] {
        &self.slots
    }

    /// Number of non-roof edges.
    pub fn arity(&self) -> usize {
        self.slots.len()
    }

    pub fn sides(&self) -> usize {
        self.slots.len() + 1
    }

    /// Only the roof is internal.
    pub fn is_external(&self) -> bool {
        self.slots.iter().all(|s| matches!(s, Slot::Boundary))
    }

    fn accumulate_type(&self, counts: &mut Vec<usize>) {
        let n = self.arity();
        if counts.len() < n {
            counts.resize(n, 0);
        }
        counts[n - 1] += 1;
        for s in &self.slots {
            if let Slot::Glued(f) = s {
                f.accumulate_type(counts);
            }
        }
    }

    fn get(&self, path: &[usize]) -> Option<&Face> {
        path.iter().try_fold(self, |f, &i| match f.slots.get(i)? {
            Slot::Glued(g) => Some(g),
            Slot::Boundary => None,
        })
    }

    fn slot_mut(&mut self, path: &[usize]) -> Option<&mut Slot> {
        let (last, parent) = path.split_last()?;
        let mut f = self;
        for &i in parent {
            f = match f.slots.get_mut(i)? {
                Slot::Glued(g) => g,
                Slot::Boundary => return None,
            };
        }
        f.slots.get_mut(*last)
    }

    fn write_text(
        &self,
        f: &mut impl fmt::Write,
        mark: Option<usize>,
        edge_index: &mut usize,
    ) -> fmt::Result {
        f.write_char('(')?;
        for s in &self.slots {
            match s {
                Slot::Boundary => {
                    let is_mark = mark == Some(*edge_index);
                    *edge_index += 1;
                    f.write_str(if is_mark { "*" } else { "()" })?;
                }
                Slot::Glued(g) => g.write_text(f, mark, edge_index)?,
            }
        }
        f.write_char(')')
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Subdigon {
    /// The lone roofed edge, type `0`.
    Trivial,
    Polygon(Face),
}

impl Subdigon {
    /// Face counts: `m_n` is the number of faces with `n + 1` edges.
    pub fn subdigon_type(&self) -> TypeVector {
        match self {
            Subdigon::Trivial => TypeVector::zero(),
            Subdigon::Polygon(f) => {
                let mut counts = Vec::new();
                f.accumulate_type(&mut counts);
                TypeVector::new(counts)
            }
        }
    }

    pub fn face(&self, id: &FaceId) -> Option<&Face> {
        match self {
            Subdigon::Trivial => None,
            Subdigon::Polygon(f) => f.get(&id.0),
        }
    }

    /// All faces, central face first, then depth-first in slot order.
    pub fn faces(&self) -> Vec<FaceId> {
        fn go(f: &Face, path: &mut Vec<usize>, out: &mut Vec<FaceId>) {
            out.push(FaceId(path.clone()));
            for (i, s) in f.slots.iter().enumerate() {
                if let Slot::Glued(g) = s {
                    path.push(i);
                    go(g, path, out);
                    path.pop();
                }
            }
        }
        let mut out = Vec::new();
        if let Subdigon::Polygon(f) = self {
            go(f, &mut Vec::new(), &mut out);
        }
        out
    }

    /// Boundary edges in counterclockwise order starting beside the roof.
    pub fn external_edges_ccw(&self) -> Vec<EdgeId> {
        fn go(f: &Face, path: &mut Vec<usize>, out: &mut Vec<EdgeId>) {
            for (i, s) in f.slots.iter().enumerate() {
                path.push(i);
                match s {
                    Slot::Boundary => out.push(EdgeId(path.clone())),
                    Slot::Glued(g) => go(g, path, out),
                }
                path.pop();
            }
        }
        match self {
            Subdigon::Trivial => vec![EdgeId(Vec::new())],
            Subdigon::Polygon(f) => {
                let mut out = Vec::new();
                go(f, &mut Vec::new(), &mut out);
                out
            }
        }
    }

    /// External faces in the order they are met travelling counterclockwise
    /// along the boundary from the roof.
    pub fn external_faces(&self) -> Vec<FaceId> {
        let mut out: Vec<FaceId> = Vec::new();
        for e in self.external_edges_ccw() {
            let Some(fid) = e.face() else { continue };
            let external = self.face(&fid).is_some_and(Face::is_external);
            if external && out.last() != Some(&fid) {
                out.push(fid);
            }
        }
        out
    }

    pub fn first_external_face(&self) -> Option<FaceId> {
        let edges = self.external_edges_ccw();
        edges.iter().filter_map(EdgeId::face).find(|fid| self.face(fid).is_some_and(Face::is_external))
    }

    /// Number of external edges at or before the end of the first external
    /// face; 1 for the trivial subdigon.
    pub fn markable_edge_count(&self) -> usize {
        let Some(first) = self.first_external_face() else {
            return 1;
        };
        let edges = self.external_edges_ccw();
        let last = edges
            .iter()
            .rposition(|e| e.face().as_ref() == Some(&first))
            .expect("an external face owns boundary edges");
        last + 1
    }
}

impl fmt::Display for Subdigon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Subdigon::Trivial => f.write_str("*e*"),
            Subdigon::Polygon(face) => face.write_text(f, None, &mut 0),
        }
    }
}

impl FromStr for Subdigon {
    type Err = SubdigonError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.trim() == "*e*" {
            return Ok(Subdigon::Trivial);
        }
        let tree: OrderedTree = s.parse()?;
        if tree.is_leaf() {
            // "()" is the tree form of the trivial subdigon, not a subdigon text.
            return Err(SubdigonError::Parse(TreeError::Parse {
                input: s.to_string(),
                position: 0,
                reason: "the trivial subdigon is written *e*",
            }));
        }
        Ok(tree_to_subdigon(&tree))
    }
}

/// Subdigon with a marked external edge at or before the first external face.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MarkedSubdigon {
    subdigon: Subdigon,
    mark: usize,
}

impl MarkedSubdigon {
    /// `mark` indexes [`Subdigon::external_edges_ccw`].
    pub fn new(subdigon: Subdigon, mark: usize) -> Result<Self, SubdigonError> {
        let limit = subdigon.markable_edge_count();
        if mark >= limit {
            return Err(SubdigonError::InvalidMark { mark, limit });
        }
        Ok(MarkedSubdigon { subdigon, mark })
    }

    pub fn subdigon(&self) -> &Subdigon {
        &self.subdigon
    }

    pub fn mark(&self) -> usize {
        self.mark
    }

    pub fn marked_edge(&self) -> EdgeId {
        self.subdigon.external_edges_ccw().swap_remove(self.mark)
    }
}

impl fmt::Display for MarkedSubdigon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.subdigon {
            Subdigon::Trivial => f.write_str("*"),
            Subdigon::Polygon(face) => face.write_text(f, Some(self.mark), &mut 0),
        }
    }
}

/// Central face becomes the root; slots become children in counterclockwise
/// order.
pub fn subdigon_to_tree(s: &Subdigon) -> OrderedTree {
    fn face_to_tree(f: &Face) -> OrderedTree {
        OrderedTree::node(
            f.slots
                .iter()
                .map(|s| match s {
                    Slot::Boundary => OrderedTree::leaf(),
                    Slot::Glued(g) => face_to_tree(g),
                })
                .collect(),
        )
    }
    match s {
        Subdigon::Trivial => OrderedTree::leaf(),
        Subdigon::Polygon(f) => face_to_tree(f),
    }
}

/// Inverse of [`subdigon_to_tree`].
pub fn tree_to_subdigon(t: &OrderedTree) -> Subdigon {
    fn tree_to_face(t: &OrderedTree) -> Face {
        Face {
            slots: t
                .children()
                .iter()
                .map(|c| if c.is_leaf() { Slot::Boundary } else { Slot::Glued(tree_to_face(c)) })
                .collect(),
        }
    }
    if t.is_leaf() {
        Subdigon::Trivial
    } else {
        Subdigon::Polygon(tree_to_face(t))
    }
}

/// Every subdigon of type `m`, generated directly from the face recursion.
pub fn enumerate_subdigons(m: &TypeVector) -> Vec<Subdigon> {
    if m.is_zero() {
        return vec![Subdigon::Trivial];
    }
    faces_of_type(m).into_iter().map(Subdigon::Polygon).collect()
}

fn faces_of_type(m: &TypeVector) -> Vec<Face> {
    let mut out = Vec::new();
    for (n, _) in m.support() {
        let rest = m.bumped(n, -1).expect("m_n >= 1");
        for split in ordered_splits(&rest, n) {
            let mut partial: Vec<Vec<Slot>> = vec![Vec::new()];
            for part in &split {
                let options: Vec<Slot> = if part.is_zero() {
                    vec![Slot::Boundary]
                } else {
                    faces_of_type(part).into_iter().map(Slot::Glued).collect()
                };
                let mut next = Vec::with_capacity(partial.len() * options.len());
                for prefix in &partial {
                    for o in &options {
                        let mut p = prefix.clone();
                        p.push(o.clone());
                        next.push(p);
                    }
                }
                partial = next;
            }
            out.extend(partial.into_iter().map(|slots| Face { slots }));
        }
    }
    out
}

/// All marked subdigons of type `m`.
pub fn enumerate_marked_subdigons(m: &TypeVector) -> Vec<MarkedSubdigon> {
    enumerate_subdigons(m)
        .into_iter()
        .flat_map(|s| {
            let k = s.markable_edge_count();
            (0..k).map(move |mark| MarkedSubdigon { subdigon: s.clone(), mark })
        })
        .collect()
}

/// `|S̄_m|`: valid mark positions summed over subdigons of type `m`.
pub fn count_marked_subdigons(m: &TypeVector) -> BigCount {
    enumerate_subdigons(m).iter().map(|s| BigCount::from(s.markable_edge_count())).sum()
}

/// Deletes the first external face and marks the arc it was glued along.
pub fn decompose_subdigon(s: &Subdigon) -> Result<(usize, MarkedSubdigon), SubdigonError> {
    let first = s.first_external_face().ok_or(SubdigonError::Trivial)?;
    let n = s.face(&first).expect("face exists").arity();
    let reduced = match s {
        Subdigon::Trivial => unreachable!("trivial subdigons have no faces"),
        Subdigon::Polygon(_) if first.0.is_empty() => Subdigon::Trivial,
        Subdigon::Polygon(face) => {
            let mut face = face.clone();
            *face.slot_mut(&first.0).expect("glued slot exists") = Slot::Boundary;
            Subdigon::Polygon(face)
        }
    };
    // The arc `f` hung from is addressed by `f`'s own path.
    let arc = EdgeId(first.0);
    let mark =
        reduced.external_edges_ccw().iter().position(|e| *e == arc).expect("the arc is now a boundary edge");
    Ok((n, MarkedSubdigon::new(reduced, mark)?))
}

/// Inverse of [`decompose_subdigon`]: glues an `(n+1)`-gon to the marked edge.
pub fn compose_subdigon(n: usize, marked: &MarkedSubdigon) -> Result<Subdigon, SubdigonError> {
    if n == 0 {
        return Err(SubdigonError::ZeroArity);
    }
    let new_face = Face::external(n)?;
    let edge = marked.marked_edge();
    match &marked.subdigon {
        Subdigon::Trivial => Ok(Subdigon::Polygon(new_face)),
        Subdigon::Polygon(face) => {
            let mut face = face.clone();
            *face.slot_mut(&edge.0).expect("marked edge exists") = Slot::Glued(new_face);
            Ok(Subdigon::Polygon(face))
        }
    }
}

//! Figure transcriptions shared by the integration tests.
//!
//! Trees are given as drawn: node coordinates and the segments joining them,
//! root at the top, children ordered left to right. Subdigons are given as a
//! polygon with vertices `0..n` counterclockwise, roof `0–1`, and a list of
//! arcs (repeat an arc to draw parallel copies).

#![allow(dead_code)]

use std::collections::{BTreeMap, HashMap};

use geode::subdigons::{Face, Slot};
use geode::trees::NodeId;
use geode::{OrderedTree, Subdigon};

pub type Point = (i32, i32);
pub type Drawing = Vec<(Point, Point)>;

/// Builds an ordered tree from a drawing and returns each node's position.
pub fn tree_from_drawing(segments: &[(Point, Point)]) -> (OrderedTree, HashMap<NodeId, Point>) {
    let mut adj: BTreeMap<Point, Vec<Point>> = BTreeMap::new();
    for &(a, b) in segments {
        adj.entry(a).or_default().push(b);
        adj.entry(b).or_default().push(a);
    }
    let root = *adj.keys().max_by_key(|p| (p.1, -p.0)).expect("non-empty drawing");
    fn build(
        p: Point,
        parent: Option<Point>,
        id: NodeId,
        adj: &BTreeMap<Point, Vec<Point>>,
        pos: &mut HashMap<NodeId, Point>,
    ) -> OrderedTree {
        pos.insert(id.clone(), p);
        let mut kids: Vec<Point> = adj[&p].iter().copied().filter(|&q| Some(q) != parent).collect();
        kids.sort_by_key(|q| q.0);
        let children =
            kids.into_iter().enumerate().map(|(i, q)| build(q, Some(p), id.child(i), adj, pos)).collect();
        OrderedTree::node(children)
    }
    let mut pos = HashMap::new();
    let tree = build(root, None, NodeId::root(), &adj, &mut pos);
    (tree, pos)
}

/// Face geometry recorded by [`subdigon_from_arcs`]: the two roof vertices in
/// original labels and the number of sides.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct FaceShape {
    pub roof: (usize, usize),
    pub sides: usize,
}

pub fn subdigon_from_arcs(
    vertices: usize,
    arcs: &[(usize, usize)],
) -> (Subdigon, BTreeMap<Vec<usize>, FaceShape>) {
    // Relabel so that the non-roof boundary runs 0, 1, ..., vertices-1.
    let lin = |v: usize| (v + vertices - 1) % vertices;
    let orig = |l: usize| (l + 1) % vertices;
    let mut multiset: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for &(a, b) in arcs {
        let (x, y) = (lin(a).min(lin(b)), lin(a).max(lin(b)));
        *multiset.entry((x, y)).or_default() += 1;
    }

    struct Ctx<'a> {
        arcs: &'a BTreeMap<(usize, usize), usize>,
        shapes: BTreeMap<Vec<usize>, FaceShape>,
        orig: &'a dyn Fn(usize) -> usize,
    }

    fn region(lo: usize, hi: usize, parallel: usize, path: Vec<usize>, ctx: &mut Ctx) -> Face {
        let roof = ((ctx.orig)(lo), (ctx.orig)(hi));
        if parallel > 0 {
            let inner = region(lo, hi, parallel - 1, [path.clone(), vec![0]].concat(), ctx);
            ctx.shapes.insert(path, FaceShape { roof, sides: 2 });
            return Face::new(vec![Slot::Glued(inner)]).unwrap();
        }
        let mut slots = Vec::new();
        let mut p = lo;
        while p < hi {
            let arc = (p + 1..=hi)
                .rev()
                .find(|&j| (p, j) != (lo, hi) && ctx.arcs.get(&(p, j)).copied().unwrap_or(0) > 0);
            match arc {
                Some(j) => {
                    let copies = ctx.arcs[&(p, j)];
                    let child_path = [path.clone(), vec![slots.len()]].concat();
                    slots.push(Slot::Glued(region(p, j, copies - 1, child_path, ctx)));
                    p = j;
                }
                None => {
                    slots.push(Slot::Boundary);
                    p += 1;
                }
            }
        }
        ctx.shapes.insert(path, FaceShape { roof, sides: slots.len() + 1 });
        Face::new(slots).unwrap()
    }

    let top = vertices - 1;
    let roof_parallels = multiset.get(&(0, top)).copied().unwrap_or(0);
    let mut ctx = Ctx { arcs: &multiset, shapes: BTreeMap::new(), orig: &orig };
    let face = region(0, top, roof_parallels, Vec::new(), &mut ctx);
    (Subdigon::Polygon(face), ctx.shapes)
}

/// The 12-gon of type (2,3,2,1) drawn in the definitions section.
pub fn example_subdigon() -> (Subdigon, BTreeMap<Vec<usize>, FaceShape>) {
    subdigon_from_arcs(12, &[(1, 5), (2, 5), (2, 4), (0, 7), (7, 10), (7, 10), (10, 11)])
}

/// External faces shaded in the figure: triangle 2-3-4, quadrilateral
/// 7-8-9-10, bigon 10-11.
pub fn example_subdigon_shaded() -> Vec<FaceShape> {
    vec![
        FaceShape { roof: (2, 4), sides: 3 },
        FaceShape { roof: (7, 10), sides: 4 },
        FaceShape { roof: (10, 11), sides: 2 },
    ]
}

/// The ordered tree of type (2,3,2,1) drawn next to the subdigon.
pub fn example_tree() -> (OrderedTree, HashMap<NodeId, Point>) {
    tree_from_drawing(&[
        ((0, 4), (-3, 2)),
        ((0, 4), (-1, 2)),
        ((0, 4), (1, 2)),
        ((0, 4), (3, 2)),
        ((-3, 2), (-4, 0)),
        ((-3, 2), (-2, 0)),
        ((3, 2), (1, 0)),
        ((3, 2), (3, 0)),
        ((3, 2), (5, 0)),
        ((-2, 0), (-3, -2)),
        ((-2, 0), (-1, -2)),
        ((1, 0), (1, -2)),
        ((3, 0), (3, -2)),
        ((-3, -2), (-4, -4)),
        ((-3, -2), (-2, -4)),
        ((1, -2), (-1, -4)),
        ((1, -2), (1, -4)),
        ((1, -2), (3, -4)),
    ])
}

/// Clawed nodes shaded in the tree figure.
pub fn example_tree_shaded() -> Vec<Point> {
    vec![(3, 0), (-3, -2), (1, -2)]
}

/// The four trees drawn under the Geode theorem, with their circled nodes.
pub fn theorem_figure_trees() -> Vec<(Drawing, Vec<Point>)> {
    vec![
        (
            vec![
                ((0, 8), (-1, 6)),
                ((-1, 6), (-2, 4)),
                ((-2, 4), (-3, 2)),
                ((-2, 4), (-1, 2)),
                ((-1, 6), (0, 4)),
                ((0, 8), (1, 6)),
            ],
            vec![(-3, 2), (-1, 2)],
        ),
        (
            vec![
                ((5, 8), (6, 6)),
                ((6, 6), (7, 4)),
                ((7, 4), (8, 2)),
                ((7, 4), (6, 2)),
                ((6, 6), (5, 4)),
                ((5, 8), (4, 6)),
            ],
            vec![(6, 2), (8, 2), (5, 4), (4, 6)],
        ),
        (
            vec![
                ((10, 6), (11, 8)),
                ((11, 8), (12, 6)),
                ((12, 6), (11, 4)),
                ((11, 4), (11, 2)),
                ((12, 6), (13, 4)),
            ],
            vec![(10, 6), (11, 2)],
        ),
        (
            vec![
                ((15, 6), (17, 8)),
                ((17, 8), (19, 6)),
                ((15, 2), (17, 4)),
                ((17, 4), (19, 2)),
                ((17, 8), (17, 6)),
                ((17, 6), (17, 4)),
                ((17, 4), (17, 2)),
            ],
            vec![(15, 6), (15, 2), (17, 2), (19, 2)],
        ),
    ]
}

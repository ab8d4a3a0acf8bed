//! Combinatorial diagrams of oriented spatial trivalent graphs: rotation
//! systems with crossings and trivalent vertices, and the derived arcs,
//! regions, crossing signs and weight corners.
//!
//! Conventions, fixed once here and relied on everywhere:
//! - Node slots are stored in counterclockwise planar order.
//! - The normal of a directed strand is its direction rotated
//!   counterclockwise by pi/2, i.e. the normal points to the strand's left.
//! - Faces are traced on the left of each dart: arriving at slot `j`, the
//!   trace leaves through the clockwise-next slot.

mod derive;
mod parse;
mod transform;

pub use derive::{Arc, CrossingInfo, Region, Skeleton, VertexInfo};
pub use parse::parse_diagram;

pub type NodeId = usize;
pub type SemiArcId = usize;
pub type HalfEdgeId = usize;
pub type ArcId = usize;
pub type RegionId = usize;

/// A dart is a directed traversal of a semi-arc: `2 * id` forward
/// (tail to head), `2 * id + 1` backward.
pub type Dart = usize;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Node {
    /// Three half-edge slots in counterclockwise order.
    Vertex { slots: [HalfEdgeId; 3] },
    /// Four half-edge slots in counterclockwise order; the over strand
    /// occupies slots {0,2} or {1,3}.
    Crossing { slots: [HalfEdgeId; 4], over_even: bool },
}

impl Node {
    pub fn slots(&self) -> &[HalfEdgeId] {
        match self {
            Node::Vertex { slots } => slots,
            Node::Crossing { slots, .. } => slots,
        }
    }
}

/// A directed semi-arc: a strand segment between two node incidences.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SemiArc {
    pub tail: HalfEdgeId,
    pub head: HalfEdgeId,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// A closed curve component with no crossings or vertices. It has no
/// half-edges; `reversed` flips which side counts as its left.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Circle {
    pub name: String,
    pub reversed: bool,
}

/// A validated diagram plus its derived combinatorics.
#[derive(Clone, Debug)]
pub struct Diagram {
    pub(crate) node_names: Vec<String>,
    pub(crate) nodes: Vec<Node>,
    pub(crate) semiarc_names: Vec<String>,
    pub(crate) semi_arcs: Vec<SemiArc>,
    pub(crate) circles: Vec<Circle>,
    pub(crate) he_names: Vec<String>,
    pub(crate) outer_hint: Option<(HalfEdgeId, Side)>,
    pub(crate) name: Option<String>,
    pub(crate) expect: Option<String>,
    pub(crate) skeleton: Skeleton,
}

impl Diagram {
    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn expect(&self) -> Option<&str> {
        self.expect.as_deref()
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn crossing_count(&self) -> usize {
        self.skeleton.crossings.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.skeleton.vertices.len()
    }

    pub fn semi_arc_count(&self) -> usize {
        self.semi_arcs.len()
    }

    pub fn circle_count(&self) -> usize {
        self.circles.len()
    }

    pub fn skeleton(&self) -> &Skeleton {
        &self.skeleton
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.skeleton.arcs
    }

    pub fn regions(&self) -> &[Region] {
        &self.skeleton.regions
    }

    pub fn outer_region(&self) -> RegionId {
        self.skeleton.outer_region
    }

    /// Maximal strands through crossings; they end only at trivalent
    /// vertices or close up.
    pub fn graph_edges(&self) -> &[Vec<SemiArcId>] {
        &self.skeleton.graph_edges
    }

    pub fn semi_arc_name(&self, id: SemiArcId) -> &str {
        &self.semiarc_names[id]
    }

    pub fn node_name(&self, id: NodeId) -> &str {
        &self.node_names[id]
    }

    /// Sign of a crossing, indexed by position in `skeleton().crossings`.
    pub fn crossing_sign(&self, crossing: usize) -> i8 {
        self.skeleton.crossings[crossing].sign
    }
}

#[cfg(test)]
pub(crate) mod fixtures {
    /// Planar theta: two vertices, three parallel edges directed A -> B.
    pub const THETA: &str = "\
vertex A am at ab
vertex B bt bm bb
edge t at bt
edge m am bm
edge b ab bb
";

    /// One-crossing kink on a closed curve; the over strand exits west.
    pub const KINK: &str = "\
crossing X hE hN hW hS over=0,2
edge loop hN hE
edge big hW hS
";

    /// Planar unknotted circle with no nodes.
    pub const CIRCLE: &str = "edge c1\n";

    /// Planar handcuff graph: two loops joined by a bar.
    pub const HANDCUFF: &str = "\
vertex P pm pl1 pl2
vertex Q ql2 qm ql1
edge l1 pl1 pl2
edge m pm qm
edge l2 ql1 ql2
";
}

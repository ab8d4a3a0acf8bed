use super::*;
use crate::error::ParseError;

/// An arc: a maximal strand whose endpoints are undercrossings or
/// vertices, composed of semi-arcs joined across over-passes. A nodeless
/// circle is its own (closed) arc with no semi-arcs.
#[derive(Clone, Debug)]
pub struct Arc {
    /// Semi-arcs in traversal order; empty for a nodeless circle.
    pub semi_arcs: Vec<SemiArcId>,
    /// Index into the diagram's circle list when this arc is a circle.
    pub circle: Option<usize>,
    /// True when the arc closes up (no endpoints).
    pub closed: bool,
}

/// A complementary region, as the boundary cycle of darts it was traced
/// from. Inner regions of nodeless circles have an empty boundary.
#[derive(Clone, Debug)]
pub struct Region {
    pub boundary: Vec<Dart>,
}

/// Everything the coloring and weight machinery needs at one crossing,
/// resolved to arc and region indices.
#[derive(Clone, Debug)]
pub struct CrossingInfo {
    pub node: NodeId,
    /// Over-strand arc (chi_3).
    pub over_arc: ArcId,
    /// Under arc on the side the over-normal points from (chi_1).
    pub under_src: ArcId,
    /// Under arc the over-normal points to (chi_2); satisfies
    /// C(chi_2) = C(chi_1) * C(chi_3).
    pub under_dst: ArcId,
    pub sign: i8,
    /// The region R at the corner from which the normals of chi_1 and the
    /// incoming over semi-arc both point.
    pub weight_region: RegionId,
}

#[derive(Clone, Debug)]
pub struct VertexInfo {
    pub node: NodeId,
    /// Incident legs in clockwise cyclic order: (arc, points toward vertex).
    pub legs_cw: [(ArcId, bool); 3],
}

/// Derived combinatorics of a validated diagram.
#[derive(Clone, Debug)]
pub struct Skeleton {
    pub arcs: Vec<Arc>,
    /// semi-arc -> containing arc
    pub arc_of: Vec<ArcId>,
    pub regions: Vec<Region>,
    /// dart -> region on its left
    pub face_of_dart: Vec<RegionId>,
    /// semi-arc -> (left region, right region) relative to its direction
    pub semiarc_faces: Vec<(RegionId, RegionId)>,
    /// circle index -> (left region, right region); the inner region sits
    /// on the left unless the circle is reversed
    pub circle_faces: Vec<(RegionId, RegionId)>,
    /// circle index -> its arc
    pub circle_arc: Vec<ArcId>,
    pub outer_region: RegionId,
    pub graph_edges: Vec<Vec<SemiArcId>>,
    pub crossings: Vec<CrossingInfo>,
    pub vertices: Vec<VertexInfo>,
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, a: usize) -> usize {
        if self.parent[a] != a {
            let root = self.find(self.parent[a]);
            self.parent[a] = root;
        }
        self.parent[a]
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// Over slots of a crossing: (incoming half-edge slot, outgoing slot).
fn over_in_out(
    slots: &[HalfEdgeId; 4],
    over_even: bool,
    he_sa: &[(SemiArcId, bool)],
) -> ((usize, usize), (usize, usize)) {
    let (a, b) = if over_even { (0, 2) } else { (1, 3) };
    let (ua, ub) = if over_even { (1, 3) } else { (2, 0) };
    let over = if he_sa[slots[a]].1 { (b, a) } else { (a, b) }; // (in, out)
    let under = if he_sa[slots[ua]].1 { (ub, ua) } else { (ua, ub) };
    (over, under)
}

pub(crate) fn build(
    node_names: Vec<String>,
    nodes: Vec<Node>,
    semiarc_names: Vec<String>,
    semi_arcs: Vec<SemiArc>,
    circles: Vec<Circle>,
    he_names: Vec<String>,
    outer_hint: Option<(HalfEdgeId, Side)>,
    name: Option<String>,
    expect: Option<String>,
) -> Result<Diagram, ParseError> {
    let n_he = he_names.len();
    // half-edge incidence tables, each half-edge exactly once on each side
    let mut he_node = vec![(usize::MAX, usize::MAX); n_he];
    for (ni, node) in nodes.iter().enumerate() {
        for (slot, &he) in node.slots().iter().enumerate() {
            if he_node[he].0 != usize::MAX {
                return Err(ParseError::new(format!(
                    "duplicate half-edge `{}` in node slots",
                    he_names[he]
                )));
            }
            he_node[he] = (ni, slot);
        }
    }
    let mut he_sa = vec![(usize::MAX, false); n_he];
    for (ei, sa) in semi_arcs.iter().enumerate() {
        for (he, is_tail) in [(sa.tail, true), (sa.head, false)] {
            if he_sa[he].0 != usize::MAX {
                return Err(ParseError::new(format!(
                    "duplicate half-edge `{}` in edge records",
                    he_names[he]
                )));
            }
            he_sa[he] = (ei, is_tail);
        }
    }
    for he in 0..n_he {
        if he_node[he].0 == usize::MAX {
            return Err(ParseError::new(format!(
                "dangling half-edge `{}`: not attached to any node",
                he_names[he]
            )));
        }
        if he_sa[he].0 == usize::MAX {
            return Err(ParseError::new(format!(
                "dangling half-edge `{}`: not attached to any edge",
                he_names[he]
            )));
        }
    }

    // strand continuity at crossings: each strand passes through
    for (ni, node) in nodes.iter().enumerate() {
        if let Node::Crossing { slots, over_even } = node {
            let (a, b) = if *over_even { (0, 2) } else { (1, 3) };
            for (s1, s2, which) in [(a, b, "over"), ((a + 1) % 4, (b + 1) % 4, "under")] {
                let t1 = he_sa[slots[s1]].1;
                let t2 = he_sa[slots[s2]].1;
                if t1 == t2 {
                    return Err(ParseError::new(format!(
                        "inconsistent orientation of the {which} strand at crossing `{}`",
                        node_names[ni]
                    )));
                }
            }
        }
    }

    // the node-bearing part must be connected for face tracing to give
    // a single sphere
    if !nodes.is_empty() {
        let mut uf = UnionFind::new(nodes.len());
        for sa in &semi_arcs {
            uf.union(he_node[sa.tail].0, he_node[sa.head].0);
        }
        let root = uf.find(0);
        for ni in 1..nodes.len() {
            if uf.find(ni) != root {
                return Err(ParseError::new(format!(
                    "diagram is disconnected: node `{}` is not reachable",
                    node_names[ni]
                )));
            }
        }
    }

    // face tracing: the face on the left of each dart; from arrival slot j
    // the trace exits through the clockwise-next slot
    let n_darts = 2 * semi_arcs.len();
    let next_dart = |d: Dart| -> Dart {
        let sa = d / 2;
        let fwd = d % 2 == 0;
        let arrive = if fwd { semi_arcs[sa].head } else { semi_arcs[sa].tail };
        let (node, slot) = he_node[arrive];
        let k = nodes[node].slots().len();
        let exit = nodes[node].slots()[(slot + k - 1) % k];
        let (sa2, is_tail) = he_sa[exit];
        if is_tail {
            2 * sa2
        } else {
            2 * sa2 + 1
        }
    };
    let mut face_of_dart = vec![usize::MAX; n_darts];
    let mut regions: Vec<Region> = Vec::new();
    for start in 0..n_darts {
        if face_of_dart[start] != usize::MAX {
            continue;
        }
        let id = regions.len();
        let mut boundary = Vec::new();
        let mut d = start;
        loop {
            debug_assert_eq!(face_of_dart[d], usize::MAX, "dart traced twice");
            face_of_dart[d] = id;
            boundary.push(d);
            d = next_dart(d);
            if d == start {
                break;
            }
        }
        regions.push(Region { boundary });
    }

    // sphere Euler check for the node-bearing part
    if !nodes.is_empty() {
        let v = nodes.len() as i64;
        let e = semi_arcs.len() as i64;
        let f = regions.len() as i64;
        if v - e + f != 2 {
            return Err(ParseError::new(format!(
                "Euler check failed: V - E + F = {v} - {e} + {f} = {}; rotation data is not planar",
                v - e + f
            )));
        }
    }

    // outer region
    let outer_region = if nodes.is_empty() {
        regions.push(Region { boundary: Vec::new() });
        regions.len() - 1
    } else {
        match outer_hint {
            Some((he, side)) => {
                let (sa, _) = he_sa[he];
                match side {
                    Side::Left => face_of_dart[2 * sa],
                    Side::Right => face_of_dart[2 * sa + 1],
                }
            }
            None => face_of_dart[0],
        }
    };

    // one inner region per nodeless circle
    let mut circle_faces = Vec::with_capacity(circles.len());
    for circle in &circles {
        let inner = regions.len();
        regions.push(Region { boundary: Vec::new() });
        if circle.reversed {
            circle_faces.push((outer_region, inner));
        } else {
            circle_faces.push((inner, outer_region));
        }
    }

    // arcs: join the two over semi-arcs at each crossing
    let mut arc_uf = UnionFind::new(semi_arcs.len());
    // graph edges: additionally join the under semi-arcs
    let mut edge_uf = UnionFind::new(semi_arcs.len());
    for node in &nodes {
        if let Node::Crossing { slots, over_even } = node {
            let ((oin, oout), (uin, uout)) = over_in_out(slots, *over_even, &he_sa);
            let over_in_sa = he_sa[slots[oin]].0;
            let over_out_sa = he_sa[slots[oout]].0;
            arc_uf.union(over_in_sa, over_out_sa);
            edge_uf.union(over_in_sa, over_out_sa);
            let under_in_sa = he_sa[slots[uin]].0;
            let under_out_sa = he_sa[slots[uout]].0;
            edge_uf.union(under_in_sa, under_out_sa);
        }
    }
    let group_classes = |uf: &mut UnionFind| -> Vec<Vec<SemiArcId>> {
        let mut classes: Vec<Vec<SemiArcId>> = Vec::new();
        let mut class_of = vec![usize::MAX; semi_arcs.len()];
        for sa in 0..semi_arcs.len() {
            let root = uf.find(sa);
            if class_of[root] == usize::MAX {
                class_of[root] = classes.len();
                classes.push(Vec::new());
            }
            classes[class_of[root]].push(sa);
        }
        classes
    };
    let graph_edges = group_classes(&mut edge_uf);
    let arc_classes = group_classes(&mut arc_uf);

    // order each arc's semi-arcs along the strand; detect closed arcs
    let mut over_next = vec![usize::MAX; semi_arcs.len()]; // successor across an over-pass
    let mut over_prev = vec![usize::MAX; semi_arcs.len()];
    for node in &nodes {
        if let Node::Crossing { slots, over_even } = node {
            let ((oin, oout), _) = over_in_out(slots, *over_even, &he_sa);
            let sin = he_sa[slots[oin]].0;
            let sout = he_sa[slots[oout]].0;
            over_next[sin] = sout;
            over_prev[sout] = sin;
        }
    }
    let mut arcs: Vec<Arc> = Vec::new();
    let mut arc_of = vec![usize::MAX; semi_arcs.len()];
    for class in &arc_classes {
        // find the start: a semi-arc whose tail is not an over-continuation
        let start = class
            .iter()
            .copied()
            .find(|&sa| over_prev[sa] == usize::MAX)
            .unwrap_or(class[0]);
        let mut ordered = Vec::with_capacity(class.len());
        let mut cur = start;
        loop {
            ordered.push(cur);
            let nxt = over_next[cur];
            if nxt == usize::MAX || nxt == start {
                break;
            }
            cur = nxt;
        }
        debug_assert_eq!(ordered.len(), class.len(), "arc chain covers its class");
        let closed = over_prev[start] != usize::MAX;
        let id = arcs.len();
        for &sa in &ordered {
            arc_of[sa] = id;
        }
        arcs.push(Arc { semi_arcs: ordered, circle: None, closed });
    }
    let mut circle_arc = Vec::with_capacity(circles.len());
    for ci in 0..circles.len() {
        circle_arc.push(arcs.len());
        arcs.push(Arc { semi_arcs: Vec::new(), circle: Some(ci), closed: true });
    }

    let semiarc_faces: Vec<(RegionId, RegionId)> = (0..semi_arcs.len())
        .map(|sa| (face_of_dart[2 * sa], face_of_dart[2 * sa + 1]))
        .collect();

    // region at the corner between slot s and slot s+1 (counterclockwise):
    // the face on the left of the dart leaving through slot s
    let corner_region = |node: NodeId, s: usize| -> RegionId {
        let he = nodes[node].slots()[s];
        let (sa, is_tail) = he_sa[he];
        if is_tail {
            face_of_dart[2 * sa]
        } else {
            face_of_dart[2 * sa + 1]
        }
    };

    let mut crossings = Vec::new();
    let mut vertices = Vec::new();
    for (ni, node) in nodes.iter().enumerate() {
        match node {
            Node::Crossing { slots, over_even } => {
                let ((_, oout), (_, uout)) = over_in_out(slots, *over_even, &he_sa);
                let sign: i8 = if uout == (oout + 1) % 4 { 1 } else { -1 };
                let under_dst = arc_of[he_sa[slots[(oout + 1) % 4]].0];
                let under_src = arc_of[he_sa[slots[(oout + 3) % 4]].0];
                let over_arc = arc_of[he_sa[slots[oout]].0];
                let corner = if sign == 1 { (oout + 3) % 4 } else { (oout + 2) % 4 };
                crossings.push(CrossingInfo {
                    node: ni,
                    over_arc,
                    under_src,
                    under_dst,
                    sign,
                    weight_region: corner_region(ni, corner),
                });
            }
            Node::Vertex { slots } => {
                let leg = |s: usize| -> (ArcId, bool) {
                    let (sa, is_tail) = he_sa[slots[s]];
                    (arc_of[sa], !is_tail)
                };
                // stored counterclockwise; clockwise cyclic order reverses
                vertices.push(VertexInfo {
                    node: ni,
                    legs_cw: [leg(0), leg(2), leg(1)],
                });
            }
        }
    }

    let skeleton = Skeleton {
        arcs,
        arc_of,
        regions,
        face_of_dart,
        semiarc_faces,
        circle_faces,
        circle_arc,
        outer_region,
        graph_edges,
        crossings,
        vertices,
    };
    Ok(Diagram {
        node_names,
        nodes,
        semiarc_names,
        semi_arcs,
        circles,
        he_names,
        outer_hint,
        name,
        expect,
        skeleton,
    })
}

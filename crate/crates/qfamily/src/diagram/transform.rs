use super::*;
use crate::error::ParseError;

impl Diagram {
    /// Plane reflection: reverses the counterclockwise slot order at every
    /// node, preserving over/under designations and edge directions.
    /// Every crossing sign flips.
    pub fn mirror(&self) -> Diagram {
        let nodes = self
            .nodes
            .iter()
            .map(|node| match node {
                Node::Vertex { slots } => Node::Vertex { slots: [slots[2], slots[1], slots[0]] },
                Node::Crossing { slots, over_even } => Node::Crossing {
                    slots: [slots[3], slots[2], slots[1], slots[0]],
                    over_even: !over_even,
                },
            })
            .collect();
        let circles = self
            .circles
            .iter()
            .map(|c| Circle { name: c.name.clone(), reversed: !c.reversed })
            .collect();
        let outer_hint = self.outer_hint.map(|(he, side)| {
            let flipped = match side {
                Side::Left => Side::Right,
                Side::Right => Side::Left,
            };
            (he, flipped)
        });
        derive::build(
            self.node_names.clone(),
            nodes,
            self.semiarc_names.clone(),
            self.semi_arcs.clone(),
            circles,
            self.he_names.clone(),
            outer_hint,
            self.name.clone(),
            self.expect.clone(),
        )
        .expect("mirror of a valid diagram is valid")
    }

    /// Number of graph edges: strand edges through crossings, then
    /// nodeless circles.
    pub fn edge_count(&self) -> usize {
        self.skeleton.graph_edges.len() + self.circles.len()
    }

    /// Reverses the orientation of one graph edge: tail and head of every
    /// semi-arc belonging to it are swapped (for a circle, its side flag).
    pub fn reverse_edge(&self, edge: usize) -> Result<Diagram, ParseError> {
        let n_strand = self.skeleton.graph_edges.len();
        if edge >= n_strand + self.circles.len() {
            return Err(ParseError::new(format!("edge id {edge} unknown")));
        }
        let mut semi_arcs = self.semi_arcs.clone();
        let mut circles = self.circles.clone();
        if edge < n_strand {
            for &sa in &self.skeleton.graph_edges[edge] {
                let rec = semi_arcs[sa];
                semi_arcs[sa] = SemiArc { tail: rec.head, head: rec.tail };
            }
        } else {
            let c = &mut circles[edge - n_strand];
            c.reversed = !c.reversed;
        }
        derive::build(
            self.node_names.clone(),
            self.nodes.clone(),
            self.semiarc_names.clone(),
            semi_arcs,
            circles,
            self.he_names.clone(),
            self.outer_hint,
            self.name.clone(),
            self.expect.clone(),
        )
    }

    /// The graph edge containing a named semi-arc, if any.
    pub fn edge_of_semi_arc(&self, name: &str) -> Option<usize> {
        let sa = self.semiarc_names.iter().position(|n| n == name)?;
        self.skeleton
            .graph_edges
            .iter()
            .position(|group| group.contains(&sa))
    }
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::{KINK, THETA};
    use super::super::parse_diagram;

    #[test]
    fn theta_regions_and_arcs() {
        let d = parse_diagram(THETA).unwrap();
        assert_eq!(d.node_count(), 2);
        assert_eq!(d.semi_arc_count(), 3);
        assert_eq!(d.regions().len(), 3);
        assert_eq!(d.arcs().len(), 3);
        assert_eq!(d.graph_edges().len(), 3);
        assert_eq!(d.vertex_count(), 2);
        assert_eq!(d.crossing_count(), 0);
    }

    #[test]
    fn circle_is_its_own_arc() {
        let d = parse_diagram("edge c1\n").unwrap();
        assert_eq!(d.arcs().len(), 1);
        assert!(d.arcs()[0].closed);
        assert_eq!(d.regions().len(), 2);
    }

    #[test]
    fn kink_has_one_arc_three_regions() {
        let d = parse_diagram(KINK).unwrap();
        assert_eq!(d.crossing_count(), 1);
        assert_eq!(d.arcs().len(), 1);
        assert_eq!(d.regions().len(), 3);
        assert_eq!(d.graph_edges().len(), 1);
    }

    #[test]
    fn duplicate_half_edge_rejected() {
        let text = "\
vertex A am at ab
vertex B at bm bb
edge t at am
edge u ab bm
edge v bb at
";
        let err = parse_diagram(text).unwrap_err();
        assert!(err.message.contains("duplicate half-edge"), "{err}");
    }

    #[test]
    fn dangling_half_edge_rejected() {
        let text = "\
vertex A am at ab
";
        let err = parse_diagram(text).unwrap_err();
        assert!(err.message.contains("dangling half-edge"), "{err}");
    }

    #[test]
    fn bad_over_pair_rejected() {
        let text = "crossing X a b c d over=0,1\n";
        let err = parse_diagram(text).unwrap_err();
        assert!(err.message.contains("over pair"), "{err}");
    }

    #[test]
    fn every_dart_traced_once_and_sides_paired() {
        let d = parse_diagram(THETA).unwrap();
        let sk = d.skeleton();
        assert_eq!(sk.face_of_dart.len(), 2 * d.semi_arc_count());
        let mut dart_uses = vec![0usize; sk.face_of_dart.len()];
        for (rid, r) in sk.regions.iter().enumerate() {
            for &dart in &r.boundary {
                assert_eq!(sk.face_of_dart[dart], rid);
                dart_uses[dart] += 1;
            }
        }
        assert!(dart_uses.iter().all(|&n| n == 1));
        for (l, r) in &sk.semiarc_faces {
            assert_ne!(l, r, "a semi-arc separates two distinct regions here");
        }
    }

    #[test]
    fn mirror_is_an_involution_and_flips_signs() {
        let d = parse_diagram(KINK).unwrap();
        let m = d.mirror();
        assert_eq!(m.crossing_sign(0), -d.crossing_sign(0));
        let mm = m.mirror();
        assert_eq!(mm.to_text(), d.to_text());
        assert_eq!(mm.crossing_sign(0), d.crossing_sign(0));
    }

    #[test]
    fn reverse_edge_round_trip_preserves_arcs_regions() {
        let d = parse_diagram(KINK).unwrap();
        let r = d.reverse_edge(0).unwrap();
        assert_eq!(r.arcs().len(), d.arcs().len());
        assert_eq!(r.regions().len(), d.regions().len());
        // reversing the strand flips the crossing sign (both strands here
        // belong to the same edge, so the sign flips twice: once per pass)
        let rr = r.reverse_edge(0).unwrap();
        assert_eq!(rr.to_text(), d.to_text());
        assert!(d.reverse_edge(7).is_err());
    }

    #[test]
    fn crossing_sign_slot_rule() {
        // KINK: slots ccw [hE, hN, hW, hS], over = {hE(0), hW(2)};
        // over-out = hW (tail of `big`), slot 2; under-out = hN (tail of
        // `loop`), slot 1 = over-out + 3 mod 4, so the sign is -1.
        let d = parse_diagram(KINK).unwrap();
        assert_eq!(d.crossing_sign(0), -1);
        // flipping which pair is over swaps the roles: over-out becomes
        // hN (slot 1), under-out hW (slot 2) = over-out + 1: sign +1.
        let flipped = KINK.replace("over=0,2", "over=1,3");
        let d2 = parse_diagram(&flipped).unwrap();
        assert_eq!(d2.crossing_sign(0), 1);
    }
}

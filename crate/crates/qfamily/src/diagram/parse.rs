use std::collections::HashMap;

use super::*;
use crate::error::ParseError;

/// Parses the line-oriented diagram format.
///
/// ```text
/// # comment
/// name     5_2
/// expect   {{0_9}_76}
/// vertex   <id> <h1> <h2> <h3>                 # half-edges, counterclockwise
/// crossing <id> <h0> <h1> <h2> <h3> over=1,3   # ccw slots; over pair 0,2 or 1,3
/// edge     <id> <tail-half-edge> <head-half-edge>
/// edge     <id>                                # closed circle component
/// circle   <id> [reversed]                     # same, explicit form
/// outer    <half-edge> <L|R>                   # outer-region hint
/// ```
pub fn parse_diagram(text: &str) -> Result<Diagram, ParseError> {
    let mut node_names = Vec::new();
    let mut nodes = Vec::new();
    let mut semiarc_names = Vec::new();
    let mut raw_semi_arcs: Vec<(String, String)> = Vec::new();
    let mut circles = Vec::new();
    let mut he_names: Vec<String> = Vec::new();
    let mut he_index: HashMap<String, HalfEdgeId> = HashMap::new();
    let mut outer_raw: Option<(String, Side)> = None;
    let mut name = None;
    let mut expect = None;

    let mut intern = |token: &str, he_names: &mut Vec<String>| -> HalfEdgeId {
        *he_index.entry(token.to_string()).or_insert_with(|| {
            he_names.push(token.to_string());
            he_names.len() - 1
        })
    };

    for (lineno, raw) in text.lines().enumerate() {
        let lno = lineno + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        match tokens[0] {
            "name" => {
                if tokens.len() != 2 {
                    return Err(ParseError::at_line(lno, "name takes one token"));
                }
                name = Some(tokens[1].to_string());
            }
            "expect" => {
                if tokens.len() != 2 {
                    return Err(ParseError::at_line(lno, "expect takes one token"));
                }
                expect = Some(tokens[1].to_string());
            }
            "vertex" => {
                if tokens.len() != 5 {
                    return Err(ParseError::at_line(lno, "vertex takes an id and 3 half-edges"));
                }
                node_names.push(tokens[1].to_string());
                let slots = [
                    intern(tokens[2], &mut he_names),
                    intern(tokens[3], &mut he_names),
                    intern(tokens[4], &mut he_names),
                ];
                nodes.push(Node::Vertex { slots });
            }
            "crossing" => {
                if tokens.len() != 7 {
                    return Err(ParseError::at_line(
                        lno,
                        "crossing takes an id, 4 half-edges and over=",
                    ));
                }
                node_names.push(tokens[1].to_string());
                let slots = [
                    intern(tokens[2], &mut he_names),
                    intern(tokens[3], &mut he_names),
                    intern(tokens[4], &mut he_names),
                    intern(tokens[5], &mut he_names),
                ];
                let over_even = match tokens[6] {
                    "over=0,2" => true,
                    "over=1,3" => false,
                    other => {
                        return Err(ParseError::at_line(
                            lno,
                            format!("over pair must be opposite slots 0,2 or 1,3, got `{other}`"),
                        ))
                    }
                };
                nodes.push(Node::Crossing { slots, over_even });
            }
            "edge" => match tokens.len() {
                2 => circles.push(Circle { name: tokens[1].to_string(), reversed: false }),
                4 => {
                    semiarc_names.push(tokens[1].to_string());
                    raw_semi_arcs.push((tokens[2].to_string(), tokens[3].to_string()));
                }
                _ => {
                    return Err(ParseError::at_line(
                        lno,
                        "edge takes an id plus tail and head half-edges, or an id alone",
                    ))
                }
            },
            "circle" => {
                let reversed = match tokens.len() {
                    2 => false,
                    3 if tokens[2] == "reversed" => true,
                    _ => return Err(ParseError::at_line(lno, "circle takes an id [reversed]")),
                };
                circles.push(Circle { name: tokens[1].to_string(), reversed });
            }
            "outer" => {
                if tokens.len() != 3 {
                    return Err(ParseError::at_line(lno, "outer takes a half-edge and L|R"));
                }
                let side = match tokens[2] {
                    "L" => Side::Left,
                    "R" => Side::Right,
                    other => {
                        return Err(ParseError::at_line(lno, format!("bad side `{other}`")))
                    }
                };
                outer_raw = Some((tokens[1].to_string(), side));
            }
            other => {
                return Err(ParseError::at_line(lno, format!("unrecognized record `{other}`")));
            }
        }
    }

    let semi_arcs: Vec<SemiArc> = raw_semi_arcs
        .iter()
        .map(|(t, h)| {
            let lookup = |tok: &str| {
                he_index.get(tok).copied().ok_or_else(|| {
                    ParseError::new(format!("half-edge `{tok}` is not attached to any node"))
                })
            };
            Ok(SemiArc { tail: lookup(t)?, head: lookup(h)? })
        })
        .collect::<Result<_, ParseError>>()?;
    let outer_hint = match outer_raw {
        None => None,
        Some((tok, side)) => {
            let he = he_index
                .get(&tok)
                .copied()
                .ok_or_else(|| ParseError::new(format!("unknown half-edge `{tok}` in outer")))?;
            Some((he, side))
        }
    };

    super::derive::build(
        node_names,
        nodes,
        semiarc_names,
        semi_arcs,
        circles,
        he_names,
        outer_hint,
        name,
        expect,
    )
}

impl Diagram {
    /// Serializes back to the line format; a parse round-trip reproduces
    /// the same combinatorics.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        if let Some(name) = &self.name {
            out.push_str(&format!("name {name}\n"));
        }
        if let Some(expect) = &self.expect {
            out.push_str(&format!("expect {expect}\n"));
        }
        for (ni, node) in self.nodes.iter().enumerate() {
            match node {
                Node::Vertex { slots } => {
                    out.push_str(&format!(
                        "vertex {} {} {} {}\n",
                        self.node_names[ni],
                        self.he_names[slots[0]],
                        self.he_names[slots[1]],
                        self.he_names[slots[2]],
                    ));
                }
                Node::Crossing { slots, over_even } => {
                    out.push_str(&format!(
                        "crossing {} {} {} {} {} over={}\n",
                        self.node_names[ni],
                        self.he_names[slots[0]],
                        self.he_names[slots[1]],
                        self.he_names[slots[2]],
                        self.he_names[slots[3]],
                        if *over_even { "0,2" } else { "1,3" },
                    ));
                }
            }
        }
        for (ei, sa) in self.semi_arcs.iter().enumerate() {
            out.push_str(&format!(
                "edge {} {} {}\n",
                self.semiarc_names[ei], self.he_names[sa.tail], self.he_names[sa.head],
            ));
        }
        for circle in &self.circles {
            if circle.reversed {
                out.push_str(&format!("circle {} reversed\n", circle.name));
            } else {
                out.push_str(&format!("circle {}\n", circle.name));
            }
        }
        if let Some((he, side)) = self.outer_hint {
            out.push_str(&format!(
                "outer {} {}\n",
                self.he_names[he],
                match side {
                    Side::Left => "L",
                    Side::Right => "R",
                },
            ));
        }
        out
    }
}

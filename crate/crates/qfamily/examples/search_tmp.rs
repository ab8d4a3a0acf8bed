//! Temporary search: 4-strand plat knots/links with two trivalent
//! vertices inserted mid-braid and a bar routed horizontally between
//! them, possibly crossing intermediate columns.

use std::collections::{BTreeMap, HashMap};
use std::sync::Mutex;

use rayon::prelude::*;

use qfamily::algebra::{gfamily_linear, special_linear_group, xset_trivial};
use qfamily::chains::nosaka_theta;
use qfamily::coloring::GroupMode;
use qfamily::diagram::parse_diagram;
use qfamily::invariants::phi;

struct Builder {
    nodes: String,
    segments: Vec<(String, String)>,
    through: HashMap<String, String>,
    vertex_slots: Vec<String>,
}

impl Builder {
    fn new() -> Self {
        Builder {
            nodes: String::new(),
            segments: Vec::new(),
            through: HashMap::new(),
            vertex_slots: Vec::new(),
        }
    }

    fn finish(self) -> Option<String> {
        let mut seg_at: HashMap<String, (usize, bool)> = HashMap::new();
        for (i, (a, b)) in self.segments.iter().enumerate() {
            seg_at.insert(a.clone(), (i, true));
            seg_at.insert(b.clone(), (i, false));
        }
        let mut emitted = vec![false; self.segments.len()];
        let mut edges = String::new();
        let mut n = 0usize;
        for start in &self.vertex_slots {
            let mut at = start.clone();
            loop {
                let &(seg, forward) = seg_at.get(&at)?;
                if emitted[seg] {
                    break;
                }
                emitted[seg] = true;
                let other = if forward {
                    self.segments[seg].1.clone()
                } else {
                    self.segments[seg].0.clone()
                };
                edges.push_str(&format!("edge s{n} {at} {other}\n"));
                n += 1;
                match self.through.get(&other) {
                    Some(next) => at = next.clone(),
                    None => break,
                }
            }
        }
        if !emitted.iter().all(|&e| e) {
            return None; // a component carries no vertex
        }
        Some(format!("{}{}", self.nodes, edges))
    }
}

/// 4-plat with caps (1,2), (3,4) top and bottom, trivalent vertices on
/// columns `i` and `j` at height `level` (before that letter index), and
/// the bar crossing intermediate columns per `mask` (bit set = bar over).
fn tunnel_plat(word: &[i32], level: usize, i: usize, j: usize, mask: usize) -> Option<String> {
    let mut b = Builder::new();
    let mut pending: Vec<String> = Vec::new();
    b.segments.push(("t1".into(), "t2".into()));
    b.segments.push(("t3".into(), "t4".into()));
    for k in 1..=4 {
        pending.push(format!("t{k}"));
    }
    let mut place_vertex_row = |b: &mut Builder, pending: &mut Vec<String>| {
        b.nodes.push_str("vertex V1 v1bar v1top v1bot\n");
        b.nodes.push_str("vertex V2 v2top v2bar v2bot\n");
        for s in ["v1bar", "v1top", "v1bot", "v2top", "v2bar", "v2bot"] {
            b.vertex_slots.push(s.to_string());
        }
        b.segments.push((pending[i - 1].clone(), "v1top".into()));
        pending[i - 1] = "v1bot".into();
        b.segments.push((pending[j - 1].clone(), "v2top".into()));
        pending[j - 1] = "v2bot".into();
        let mut bar_end = String::from("v1bar");
        for (bit, k) in (i + 1..j).enumerate() {
            let c = format!("bc{k}");
            let over = if mask & (1 << bit) != 0 { "0,2" } else { "1,3" };
            b.nodes
                .push_str(&format!("crossing {c} {c}E {c}T {c}W {c}B over={over}\n"));
            b.segments.push((bar_end.clone(), format!("{c}W")));
            b.segments.push((pending[k - 1].clone(), format!("{c}T")));
            pending[k - 1] = format!("{c}B");
            b.through.insert(format!("{c}W"), format!("{c}E"));
            b.through.insert(format!("{c}E"), format!("{c}W"));
            b.through.insert(format!("{c}T"), format!("{c}B"));
            b.through.insert(format!("{c}B"), format!("{c}T"));
            bar_end = format!("{c}E");
        }
        b.segments.push((bar_end, "v2bar".into()));
    };
    for (t, &letter) in word.iter().enumerate() {
        if t == level {
            place_vertex_row(&mut b, &mut pending);
        }
        let col = letter.unsigned_abs() as usize; // 1..3, crossing columns (col, col+1)
        let c = format!("c{t}");
        let over = if letter > 0 { "1,3" } else { "0,2" };
        b.nodes
            .push_str(&format!("crossing {c} {c}ne {c}nw {c}sw {c}se over={over}\n"));
        b.segments.push((pending[col - 1].clone(), format!("{c}nw")));
        b.segments.push((pending[col].clone(), format!("{c}ne")));
        b.through.insert(format!("{c}nw"), format!("{c}se"));
        b.through.insert(format!("{c}se"), format!("{c}nw"));
        b.through.insert(format!("{c}ne"), format!("{c}sw"));
        b.through.insert(format!("{c}sw"), format!("{c}ne"));
        pending[col - 1] = format!("{c}sw");
        pending[col] = format!("{c}se");
    }
    if word.len() == level {
        place_vertex_row(&mut b, &mut pending);
    }
    b.segments.push((pending[0].clone(), pending[1].clone()));
    b.segments.push((pending[2].clone(), pending[3].clone()));
    b.finish()
}

fn main() {
    let f = gfamily_linear(special_linear_group(3).unwrap()).unwrap();
    let ys = xset_trivial(&f);
    let theta = nosaka_theta(&f, &ys).unwrap();

    let max_len: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(4);
    let max_crossings: usize = std::env::args()
        .nth(2)
        .and_then(|s| s.parse().ok())
        .unwrap_or(6);
    let letters = [1i32, -1, 2, -2, 3, -3];
    let mut words: Vec<Vec<i32>> = vec![vec![]];
    let mut last: Vec<Vec<i32>> = vec![vec![]];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &last {
            for &l in &letters {
                if *w.last().unwrap_or(&0) == -l {
                    continue;
                }
                let mut w2 = w.clone();
                w2.push(l);
                next.push(w2);
            }
        }
        words.extend(next.iter().cloned());
        last = next;
    }

    let mut configs: Vec<(Vec<i32>, usize, usize, usize, usize)> = Vec::new();
    for w in &words {
        for level in 0..=w.len() {
            for (i, j) in [(1, 2), (2, 3), (3, 4), (1, 3), (2, 4), (1, 4)] {
                if w.len() + (j - i - 1) > max_crossings {
                    continue;
                }
                for mask in 0..(1usize << (j - i - 1)) {
                    configs.push((w.clone(), level, i, j, mask));
                }
            }
        }
    }
    eprintln!("searching {} configurations", configs.len());

    let by_value: Mutex<BTreeMap<String, Vec<String>>> = Mutex::new(BTreeMap::new());
    configs.par_iter().for_each(|(w, level, i, j, mask)| {
        let Some(text) = tunnel_plat(w, *level, *i, *j, *mask) else {
            return;
        };
        let d = match parse_diagram(&text) {
            Ok(d) => d,
            Err(_) => return,
        };
        let v = phi(&d, &f, &ys, &theta, GroupMode::ByConj).to_string();
        let mut map = by_value.lock().unwrap();
        let entry = map.entry(v).or_default();
        if entry.len() < 3 {
            entry.push(format!("w={w:?},l={level},i={i},j={j},m={mask}"));
        }
    });

    for (v, examples) in by_value.into_inner().unwrap() {
        println!("{v}\n    {}", examples.join("\n    "));
    }
}

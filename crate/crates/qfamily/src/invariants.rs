//! Crossing weights, the state 2-cycle, and the Phi invariants in plain,
//! per-homomorphism and per-conjugacy-class flavors, with a canonical
//! multiset serialization.

use std::collections::BTreeMap;
use std::fmt;

use crate::algebra::{GFamily, XSet};
use crate::chains::{Chain, Cocycle2};
use crate::coloring::{
    conj_key, enumerate_homs, region_colors, x_assignments_for_hom, Coloring, GroupMode,
};
use crate::diagram::Diagram;

/// A multiset over Z_p in canonical form: ascending (value, count) pairs.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ValueMultiset(pub Vec<(u64, u64)>);

impl ValueMultiset {
    pub fn from_values(values: impl IntoIterator<Item = u64>) -> Self {
        let mut counts: BTreeMap<u64, u64> = BTreeMap::new();
        for v in values {
            *counts.entry(v).or_insert(0) += 1;
        }
        ValueMultiset(counts.into_iter().collect())
    }

    pub fn total(&self) -> u64 {
        self.0.iter().map(|&(_, c)| c).sum()
    }

    pub fn negate(&self, p: u64) -> ValueMultiset {
        let mut counts: BTreeMap<u64, u64> = BTreeMap::new();
        for &(v, c) in &self.0 {
            *counts.entry((p - v) % p).or_insert(0) += c;
        }
        ValueMultiset(counts.into_iter().collect())
    }

    /// Ordering used for outer multisets: distinct-value sequences first,
    /// then count sequences, both lexicographically. This puts {0_9},
    /// {0_27}, {0_81} ahead of {0_9,1_18} the way the published tables do.
    fn table_order(&self, other: &Self) -> std::cmp::Ordering {
        let values = |m: &Self| m.0.iter().map(|&(v, _)| v).collect::<Vec<_>>();
        let counts = |m: &Self| m.0.iter().map(|&(_, c)| c).collect::<Vec<_>>();
        values(self)
            .cmp(&values(other))
            .then_with(|| counts(self).cmp(&counts(other)))
    }
}

impl fmt::Display for ValueMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (v, c)) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}_{c}")?;
        }
        write!(f, "}}")
    }
}

/// The value of a Phi invariant: a multiset of cocycle evaluations, or a
/// multiset of such multisets keyed per homomorphism or conjugacy class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InvariantValue {
    Plain { p: u64, values: ValueMultiset },
    Grouped { p: u64, mode: GroupMode, entries: Vec<(ValueMultiset, u64)> },
}

impl InvariantValue {
    fn canonicalize(p: u64, mode: GroupMode, inners: Vec<ValueMultiset>) -> InvariantValue {
        let mut counts: Vec<(ValueMultiset, u64)> = Vec::new();
        let mut sorted = inners;
        sorted.sort_by(|a, b| a.table_order(b));
        for inner in sorted {
            match counts.last_mut() {
                Some((prev, c)) if *prev == inner => *c += 1,
                _ => counts.push((inner, 1)),
            }
        }
        InvariantValue::Grouped { p, mode, entries: counts }
    }

    pub fn p(&self) -> u64 {
        match self {
            InvariantValue::Plain { p, .. } | InvariantValue::Grouped { p, .. } => *p,
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        match self {
            InvariantValue::Plain { p, values } => serde_json::json!({
                "mode": "plain",
                "p": p,
                "values": values.0,
            }),
            InvariantValue::Grouped { p, mode, entries } => serde_json::json!({
                "mode": match mode {
                    GroupMode::Plain => "plain",
                    GroupMode::ByHom => "hom",
                    GroupMode::ByConj => "conj",
                },
                "p": p,
                "outer": entries
                    .iter()
                    .map(|(inner, mult)| serde_json::json!({
                        "inner": inner.0,
                        "mult": mult,
                    }))
                    .collect::<Vec<_>>(),
            }),
        }
    }
}

impl fmt::Display for InvariantValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InvariantValue::Plain { values, .. } => write!(f, "{values}"),
            InvariantValue::Grouped { entries, .. } => {
                write!(f, "{{")?;
                for (i, (inner, mult)) in entries.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{inner}_{mult}")?;
                }
                write!(f, "}}")
            }
        }
    }
}

/// Elementwise negation mod p at the innermost level, re-canonicalized.
pub fn negate(v: &InvariantValue) -> InvariantValue {
    match v {
        InvariantValue::Plain { p, values } => {
            InvariantValue::Plain { p: *p, values: values.negate(*p) }
        }
        InvariantValue::Grouped { p, mode, entries } => {
            let mut inners = Vec::new();
            for (inner, mult) in entries {
                for _ in 0..*mult {
                    inners.push(inner.negate(*p));
                }
            }
            InvariantValue::canonicalize(*p, *mode, inners)
        }
    }
}

/// The signed weight of one crossing under a coloring, as a degree-2 chain
/// generator: sign * (C(R), C(chi_1), C(chi_3)).
pub fn weight(d: &Diagram, crossing: usize, c: &Coloring, f: &GFamily) -> Chain {
    let info = &d.skeleton().crossings[crossing];
    let key = vec![
        c.region_colors[info.weight_region],
        f.q_index(c.arc_colors[info.under_src]),
        f.q_index(c.arc_colors[info.over_arc]),
    ];
    let mut chain = Chain::zero(2);
    chain.add_term(key, info.sign as i64);
    chain
}

/// The state cycle W(D; C): the sum of the crossing weights.
pub fn state_cycle(d: &Diagram, c: &Coloring, f: &GFamily) -> Chain {
    let mut out = Chain::zero(2);
    for crossing in 0..d.skeleton().crossings.len() {
        out = out.add(&weight(d, crossing, c, f));
    }
    out
}

fn eval_state_sum(d: &Diagram, c: &Coloring, f: &GFamily, theta: &Cocycle2) -> u64 {
    let mut acc: i64 = 0;
    for info in &d.skeleton().crossings {
        let y = c.region_colors[info.weight_region];
        let q1 = f.q_index(c.arc_colors[info.under_src]);
        let q3 = f.q_index(c.arc_colors[info.over_arc]);
        acc += info.sign as i64 * theta.eval(y, q1, q3) as i64;
    }
    acc.rem_euclid(theta.p as i64) as u64
}

/// Per-homomorphism inner multisets of state-sum evaluations, keyed by the
/// group-label tuple. The building block for all three Phi modes.
pub fn phi_by_hom(
    d: &Diagram,
    f: &GFamily,
    ys: &XSet,
    theta: &Cocycle2,
) -> BTreeMap<Vec<usize>, ValueMultiset> {
    let mut out = BTreeMap::new();
    for hom in enumerate_homs(d, f.group()) {
        let mut values = Vec::new();
        for xs in x_assignments_for_hom(d, f, &hom) {
            let arc_colors: Vec<_> = xs
                .iter()
                .zip(&hom.0)
                .map(|(&x, &g)| crate::algebra::QElem { x, g })
                .collect();
            for y0 in 0..ys.y_size() {
                let regions = region_colors(d, f, ys, &arc_colors, y0)
                    .expect("region colors extend every valid arc coloring");
                let coloring = Coloring { arc_colors: arc_colors.clone(), region_colors: regions };
                values.push(eval_state_sum(d, &coloring, f, theta));
            }
        }
        out.insert(hom.0, ValueMultiset::from_values(values));
    }
    out
}

/// The Phi invariant of a diagram in the requested mode.
///
/// In conjugacy mode the inner multiset of each class is computed from a
/// single representative homomorphism; conjugate representatives give equal
/// multisets, and the test suites assert that equality separately.
pub fn phi(
    d: &Diagram,
    f: &GFamily,
    ys: &XSet,
    theta: &Cocycle2,
    mode: GroupMode,
) -> InvariantValue {
    let by_hom = phi_by_hom(d, f, ys, theta);
    match mode {
        GroupMode::Plain => {
            let mut values = Vec::new();
            for inner in by_hom.values() {
                for &(v, c) in &inner.0 {
                    for _ in 0..c {
                        values.push(v);
                    }
                }
            }
            InvariantValue::Plain { p: theta.p, values: ValueMultiset::from_values(values) }
        }
        GroupMode::ByHom => {
            InvariantValue::canonicalize(theta.p, mode, by_hom.into_values().collect())
        }
        GroupMode::ByConj => {
            // representative = the least hom label in each class
            let mut class_rep: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
            for hom in by_hom.keys() {
                let key = conj_key(&crate::coloring::HomLabel(hom.clone()), f.group()).0;
                class_rep.entry(key).or_insert_with(|| hom.clone());
            }
            let inners = class_rep
                .into_values()
                .map(|rep| by_hom[&rep].clone())
                .collect();
            InvariantValue::canonicalize(theta.p, mode, inners)
        }
    }
}

/// Coloring-count invariants over the trivial X-set: the total count, or
/// the multiset of per-homomorphism or per-class counts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ColoringCensus {
    Total(u64),
    Counts(Vec<(u64, u64)>),
}

impl fmt::Display for ColoringCensus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ColoringCensus::Total(n) => write!(f, "{n}"),
            ColoringCensus::Counts(counts) => {
                write!(f, "{{")?;
                for (i, (v, c)) in counts.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{v}_{c}")?;
                }
                write!(f, "}}")
            }
        }
    }
}

pub fn col_counts(d: &Diagram, f: &GFamily, mode: GroupMode) -> ColoringCensus {
    let homs = enumerate_homs(d, f.group());
    let per_hom: Vec<(Vec<usize>, u64)> = homs
        .into_iter()
        .map(|hom| {
            let n = x_assignments_for_hom(d, f, &hom).len() as u64;
            (hom.0, n)
        })
        .collect();
    match mode {
        GroupMode::Plain => ColoringCensus::Total(per_hom.iter().map(|&(_, n)| n).sum()),
        GroupMode::ByHom => {
            ColoringCensus::Counts(ValueMultiset::from_values(per_hom.iter().map(|&(_, n)| n)).0)
        }
        GroupMode::ByConj => {
            let mut class_count: BTreeMap<Vec<usize>, u64> = BTreeMap::new();
            for (hom, n) in per_hom {
                let key = conj_key(&crate::coloring::HomLabel(hom), f.group()).0;
                class_count.entry(key).or_insert(n);
            }
            ColoringCensus::Counts(
                ValueMultiset::from_values(class_count.into_values()).0,
            )
        }
    }
}

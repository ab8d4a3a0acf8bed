use std::collections::BTreeMap;
use std::fmt;

use crate::algebra::{GFamily, QElem, XSet};

/// A formal integer combination of generators (y, q_1, ..., q_n) of B_n(X)_Y.
/// Keys are index tuples `[y, q_1, ..., q_n]` with q's indexed in the
/// associated quandle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chain {
    degree: usize,
    terms: BTreeMap<Vec<usize>, i64>,
}

impl Chain {
    pub fn zero(degree: usize) -> Self {
        Chain { degree, terms: BTreeMap::new() }
    }

    pub fn generator(degree: usize, key: Vec<usize>) -> Self {
        assert_eq!(key.len(), degree + 1);
        let mut terms = BTreeMap::new();
        terms.insert(key, 1);
        Chain { degree, terms }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[usize], i64)> {
        self.terms.iter().map(|(k, &c)| (k.as_slice(), c))
    }

    pub fn coefficient(&self, key: &[usize]) -> i64 {
        self.terms.get(key).copied().unwrap_or(0)
    }

    pub fn add_term(&mut self, key: Vec<usize>, coeff: i64) {
        assert_eq!(key.len(), self.degree + 1);
        if coeff == 0 {
            return;
        }
        match self.terms.entry(key) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if *o.get() == 0 {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Chain) -> Chain {
        assert_eq!(self.degree, other.degree);
        let mut out = self.clone();
        for (k, c) in other.terms() {
            out.add_term(k.to_vec(), c);
        }
        out
    }

    pub fn sub(&self, other: &Chain) -> Chain {
        self.add(&other.scale(-1))
    }

    pub fn scale(&self, factor: i64) -> Chain {
        if factor == 0 {
            return Chain::zero(self.degree);
        }
        Chain {
            degree: self.degree,
            terms: self.terms.iter().map(|(k, c)| (k.clone(), c * factor)).collect(),
        }
    }
}

impl fmt::Display for Chain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (key, coeff)) in self.terms.iter().enumerate() {
            if i > 0 || *coeff < 0 {
                write!(f, " {} ", if *coeff >= 0 { "+" } else { "-" })?;
            }
            let mag = coeff.abs();
            if mag != 1 {
                write!(f, "{mag}")?;
            }
            write!(f, "{key:?}")?;
        }
        Ok(())
    }
}

/// Prefix action: ((y, q_1, ..., q_i) * q, q_{i+1}, ..., q_n).
/// `key` is a full generator key; entries `0..=i` are acted on by `q`.
fn act_prefix(f: &GFamily, ys: &XSet, key: &[usize], i: usize, q: QElem) -> Vec<usize> {
    let mut out = key.to_vec();
    out[0] = ys.act_q(key[0], q);
    for slot in 1..=i {
        out[slot] = f.q_index(f.q_op(f.q_elem(key[slot]), q));
    }
    out
}

/// The boundary homomorphism of B_*(X)_Y applied generator-wise:
/// the alternating omit/act two-sum formula, zero in degree <= 0.
pub fn boundary(c: &Chain, f: &GFamily, ys: &XSet) -> Chain {
    let n = c.degree();
    if n == 0 {
        return Chain::zero(0);
    }
    let mut out = Chain::zero(n - 1);
    for (key, coeff) in c.terms() {
        for i in 1..=n {
            let sign = if i % 2 == 0 { 1 } else { -1 };
            // omit q_i
            let mut omitted = Vec::with_capacity(n);
            omitted.extend_from_slice(&key[..i]);
            omitted.extend_from_slice(&key[i + 1..]);
            out.add_term(omitted, sign * coeff);
            // act on the prefix by q_i, then drop it
            let qi = f.q_elem(key[i]);
            let acted = act_prefix(f, ys, key, i - 1, qi);
            let mut acted_key = Vec::with_capacity(n);
            acted_key.extend_from_slice(&acted[..i]);
            acted_key.extend_from_slice(&acted[i + 1..]);
            out.add_term(acted_key, -sign * coeff);
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DKind {
    /// (y, ..., (x,g), (x,h), ...) with a repeated x in adjacent slots.
    RepeatedPair,
    /// (y, ..., (x,gh), ...) - (y, ..., (x,g), ...) - ((y, ...)*(x,g), (x,h), ...)
    GroupSplit,
}

/// A generator of the degeneracy subgroup D_n(X)_Y.
#[derive(Clone, Debug)]
pub struct DGenerator {
    pub kind: DKind,
    pub chain: Chain,
}

/// All degree-n generators of D_n(X)_Y, streamed lazily.
pub fn d_generators<'a>(
    f: &'a GFamily,
    ys: &'a XSet,
    n: usize,
) -> impl Iterator<Item = DGenerator> + 'a {
    let repeated = repeated_pair_generators(f, ys, n);
    let split = group_split_generators(f, ys, n);
    repeated.chain(split)
}

/// Degree-2 generators of D_2(X)_Y.
pub fn d2_generators<'a>(
    f: &'a GFamily,
    ys: &'a XSet,
) -> impl Iterator<Item = DGenerator> + 'a {
    d_generators(f, ys, 2)
}

fn odometer(radices: Vec<usize>) -> impl Iterator<Item = Vec<usize>> {
    let total: usize = radices.iter().product();
    (0..total).map(move |mut t| {
        let mut out = vec![0usize; radices.len()];
        for (slot, &r) in radices.iter().enumerate().rev() {
            out[slot] = t % r;
            t /= r;
        }
        out
    })
}

fn repeated_pair_generators<'a>(
    f: &'a GFamily,
    ys: &'a XSet,
    n: usize,
) -> impl Iterator<Item = DGenerator> + 'a {
    let ny = ys.y_size();
    let nx = f.x_size();
    let ng = f.group().order();
    let nq = f.q_size();
    (1..n).flat_map(move |i| {
        // free slots: all but positions i, i+1
        let mut radices = vec![ny, nx, ng, ng];
        radices.extend(std::iter::repeat(nq).take(n - 2));
        odometer(radices).map(move |digits| {
            let (y, x, g, h) = (digits[0], digits[1], digits[2], digits[3]);
            let mut key = vec![0usize; n + 1];
            key[0] = y;
            let mut free = digits[4..].iter();
            for slot in 1..=n {
                if slot == i {
                    key[slot] = f.q_index(QElem { x, g });
                } else if slot == i + 1 {
                    key[slot] = f.q_index(QElem { x, g: h });
                } else {
                    key[slot] = *free.next().expect("free slot digit");
                }
            }
            DGenerator { kind: DKind::RepeatedPair, chain: Chain::generator(n, key) }
        })
    })
}

fn group_split_generators<'a>(
    f: &'a GFamily,
    ys: &'a XSet,
    n: usize,
) -> impl Iterator<Item = DGenerator> + 'a {
    let ny = ys.y_size();
    let nx = f.x_size();
    let ng = f.group().order();
    let nq = f.q_size();
    (1..=n).flat_map(move |i| {
        let mut radices = vec![ny, nx, ng, ng];
        radices.extend(std::iter::repeat(nq).take(n - 1));
        odometer(radices).map(move |digits| {
            let (y, x, g, h) = (digits[0], digits[1], digits[2], digits[3]);
            let mut key = vec![0usize; n + 1];
            key[0] = y;
            let mut free = digits[4..].iter();
            for slot in 1..=n {
                if slot != i {
                    key[slot] = *free.next().expect("free slot digit");
                }
            }
            let gh = f.group().mul(g, h);
            let mut chain = Chain::zero(n);
            let with = |slot_val: usize, key: &[usize], sign: i64| {
                let mut k = key.to_vec();
                k[i] = slot_val;
                (k, sign)
            };
            let (k1, s1) = with(f.q_index(QElem { x, g: gh }), &key, 1);
            chain.add_term(k1, s1);
            let (k2, s2) = with(f.q_index(QElem { x, g }), &key, -1);
            chain.add_term(k2, s2);
            // prefix before slot i acted by (x, g), slot i replaced by (x, h)
            let acted = act_prefix(f, ys, &key, i - 1, QElem { x, g });
            let (k3, s3) = with(f.q_index(QElem { x, g: h }), &acted, -1);
            chain.add_term(k3, s3);
            DGenerator { kind: DKind::GroupSplit, chain }
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{gfamily_from_quandle, dihedral_quandle, xset_self, xset_trivial};

    fn small_family() -> GFamily {
        gfamily_from_quandle(&dihedral_quandle(3), 2).unwrap()
    }

    #[test]
    fn boundary_degree_two_expansion() {
        // d2(y, q1, q2) = -(y,q2) + (y,q1) + (y*q1, q2) - (y*q2, q1*q2)
        let f = small_family();
        let ys = xset_self(&f);
        for y in 0..ys.y_size() {
            for q1i in 0..f.q_size() {
                for q2i in 0..f.q_size() {
                    let q1 = f.q_elem(q1i);
                    let q2 = f.q_elem(q2i);
                    let gen = Chain::generator(2, vec![y, q1i, q2i]);
                    let got = boundary(&gen, &f, &ys);
                    let mut want = Chain::zero(1);
                    want.add_term(vec![y, q2i], -1);
                    want.add_term(vec![y, q1i], 1);
                    want.add_term(vec![ys.act_q(y, q1), q2i], 1);
                    want.add_term(
                        vec![ys.act_q(y, q2), f.q_index(f.q_op(q1, q2))],
                        -1,
                    );
                    assert_eq!(got, want);
                }
            }
        }
    }

    #[test]
    fn boundary_degree_one() {
        // d1(y, q) = -(y) + (y*q)
        let f = small_family();
        let ys = xset_self(&f);
        for y in 0..ys.y_size() {
            for qi in 0..f.q_size() {
                let got = boundary(&Chain::generator(1, vec![y, qi]), &f, &ys);
                let mut want = Chain::zero(0);
                want.add_term(vec![y], -1);
                want.add_term(vec![ys.act_q(y, f.q_elem(qi))], 1);
                assert_eq!(got, want);
            }
        }
    }

    #[test]
    fn boundary_squares_to_zero_small() {
        let f = small_family();
        let ys = xset_self(&f);
        for y in 0..ys.y_size() {
            for q1 in 0..f.q_size() {
                for q2 in 0..f.q_size() {
                    for q3 in 0..f.q_size() {
                        let gen = Chain::generator(3, vec![y, q1, q2, q3]);
                        let dd = boundary(&boundary(&gen, &f, &ys), &f, &ys);
                        assert!(dd.is_zero(), "dd != 0 at {:?}", (y, q1, q2, q3));
                    }
                }
            }
        }
    }

    #[test]
    fn d2_generator_shapes_and_count() {
        let f = small_family();
        let ys = xset_trivial(&f);
        let gens: Vec<_> = d2_generators(&f, &ys).collect();
        let type1 = gens.iter().filter(|g| g.kind == DKind::RepeatedPair).count();
        // |Y| |X| |G|^2 = 1 * 3 * 4
        assert_eq!(type1, 12);
        let type2 = gens.iter().filter(|g| g.kind == DKind::GroupSplit).count();
        // two positions, |Y| |X| |G|^2 |Q| each
        assert_eq!(type2, 2 * 12 * 6);
        for g in &gens {
            assert_eq!(g.chain.degree(), 2);
        }
    }
}

use std::collections::BTreeMap;

use super::chain::Chain;
use crate::algebra::{GFamily, QElem, XSet};
use crate::error::AlgebraError;

/// A formal integer combination of generators (y, x_1, ..., x_n) of the
/// cyclic-family complex B^I_n(X)_Y. Keys are `[y, x_1, ..., x_n]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IChain {
    degree: usize,
    terms: BTreeMap<Vec<usize>, i64>,
}

impl IChain {
    pub fn zero(degree: usize) -> Self {
        IChain { degree, terms: BTreeMap::new() }
    }

    pub fn generator(degree: usize, key: Vec<usize>) -> Self {
        assert_eq!(key.len(), degree + 1);
        let mut terms = BTreeMap::new();
        terms.insert(key, 1);
        IChain { degree, terms }
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

    pub fn add(&self, other: &IChain) -> IChain {
        assert_eq!(self.degree, other.degree);
        let mut out = self.clone();
        for (k, c) in other.terms() {
            out.add_term(k.to_vec(), c);
        }
        out
    }
}

fn require_cyclic(f: &GFamily) -> Result<usize, AlgebraError> {
    f.group().as_cyclic().ok_or(AlgebraError::NotCyclic)
}

/// Prefix action for the cyclic complex:
/// ((y, x_1, ..., x_i) *^j x, x_{i+1}, ..., x_n).
fn i_act_prefix(f: &GFamily, ys: &XSet, key: &[usize], i: usize, j: usize, x: usize) -> Vec<usize> {
    let mut out = key.to_vec();
    out[0] = ys.act(key[0], j, x);
    for slot in 1..=i {
        out[slot] = f.op(key[slot], j, x);
    }
    out
}

/// Boundary of the cyclic-family complex: the alternating omit/act sum
/// with the action `*^1 x_i`. Rejects families over non-cyclic groups.
pub fn i_boundary(c: &IChain, f: &GFamily, ys: &XSet) -> Result<IChain, AlgebraError> {
    let m = require_cyclic(f)?;
    let n = c.degree();
    if n == 0 {
        return Ok(IChain::zero(0));
    }
    let one = 1 % m;
    let mut out = IChain::zero(n - 1);
    for (key, coeff) in c.terms() {
        for i in 1..=n {
            let sign = if i % 2 == 0 { 1 } else { -1 };
            let mut omitted = Vec::with_capacity(n);
            omitted.extend_from_slice(&key[..i]);
            omitted.extend_from_slice(&key[i + 1..]);
            out.add_term(omitted, sign * coeff);
            let acted = i_act_prefix(f, ys, key, i - 1, one, key[i]);
            let mut acted_key = Vec::with_capacity(n);
            acted_key.extend_from_slice(&acted[..i]);
            acted_key.extend_from_slice(&acted[i + 1..]);
            out.add_term(acted_key, -sign * coeff);
        }
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IDKind {
    /// (y, ..., x, x, ...) with a repeated adjacent entry.
    RepeatedPair,
    /// sum_{j=0}^{m-1} ((y, x_1, ..., x_{i-1}) *^j x_i, x_i, ..., x_n)
    CyclicSum,
}

#[derive(Clone, Debug)]
pub struct IDGenerator {
    pub kind: IDKind,
    pub chain: IChain,
}

/// Degree-n generators of D^I_n(X)_Y, streamed.
pub fn i_d_generators(
    f: &GFamily,
    ys: &XSet,
    n: usize,
) -> Result<Vec<IDGenerator>, AlgebraError> {
    let m = require_cyclic(f)?;
    let ny = ys.y_size();
    let nx = f.x_size();
    let mut out = Vec::new();
    // repeated pairs: slots i, i+1 carry the same x, the rest are free
    for i in 1..n {
        let free: Vec<usize> = (1..=n).filter(|&s| s != i && s != i + 1).collect();
        let count = nx.pow(free.len() as u32);
        for y in 0..ny {
            for x in 0..nx {
                for t in 0..count {
                    let mut key = vec![0usize; n + 1];
                    key[0] = y;
                    key[i] = x;
                    key[i + 1] = x;
                    let mut rem = t;
                    for &slot in free.iter().rev() {
                        key[slot] = rem % nx;
                        rem /= nx;
                    }
                    out.push(IDGenerator {
                        kind: IDKind::RepeatedPair,
                        chain: IChain::generator(n, key),
                    });
                }
            }
        }
    }
    // cyclic sums: all n slots free, summed over the m prefix actions
    for i in 1..=n {
        let count = nx.pow(n as u32);
        for y in 0..ny {
            for t in 0..count {
                let mut key = vec![0usize; n + 1];
                key[0] = y;
                let mut rem = t;
                for slot in (1..=n).rev() {
                    key[slot] = rem % nx;
                    rem /= nx;
                }
                let mut chain = IChain::zero(n);
                for j in 0..m {
                    let acted = i_act_prefix(f, ys, &key, i - 1, j, key[i]);
                    chain.add_term(acted, 1);
                }
                out.push(IDGenerator { kind: IDKind::CyclicSum, chain });
            }
        }
    }
    Ok(out)
}

/// f_n(y, x_1, ..., x_n) = (y, (x_1, 1), ..., (x_n, 1)), extended linearly.
pub fn chain_map_f(c: &IChain, f: &GFamily) -> Result<Chain, AlgebraError> {
    let m = require_cyclic(f)?;
    let one = 1 % m;
    let mut out = Chain::zero(c.degree());
    for (key, coeff) in c.terms() {
        let mut k = Vec::with_capacity(key.len());
        k.push(key[0]);
        for &x in &key[1..] {
            k.push(f.q_index(QElem { x, g: one }));
        }
        out.add_term(k, coeff);
    }
    Ok(out)
}

/// g_n(y, (x_1, s_1), ..., (x_n, s_n)) as the nested sum over exponent
/// residues 0 <= i_k < s_k, extended linearly. Empty ranges give zero.
pub fn chain_map_g(c: &Chain, f: &GFamily, ys: &XSet) -> Result<IChain, AlgebraError> {
    require_cyclic(f)?;
    let n = c.degree();
    let mut out = IChain::zero(n);
    for (key, coeff) in c.terms() {
        // partial tuples (current key prefix), expanded slot by slot
        let mut partial: Vec<Vec<usize>> = vec![vec![key[0]]];
        for slot in 1..=n {
            let q = f.q_elem(key[slot]);
            let mut next = Vec::new();
            for prefix in &partial {
                for j in 0..q.g {
                    let mut acted = Vec::with_capacity(prefix.len() + 1);
                    acted.push(ys.act(prefix[0], j, q.x));
                    for &xv in &prefix[1..] {
                        acted.push(f.op(xv, j, q.x));
                    }
                    acted.push(q.x);
                    next.push(acted);
                }
            }
            partial = next;
            if partial.is_empty() {
                break;
            }
        }
        for term in partial {
            out.add_term(term, coeff);
        }
    }
    Ok(out)
}

/// A 2-cochain on Y x X^2 with values in Z_p for a cyclic family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ICocycle2 {
    pub p: u64,
    y_size: usize,
    x_size: usize,
    table: Vec<u8>,
}

impl ICocycle2 {
    pub fn new(p: u64, y_size: usize, x_size: usize, table: Vec<u8>) -> Self {
        assert!(p >= 2 && p <= 251);
        assert_eq!(table.len(), y_size * x_size * x_size);
        ICocycle2 { p, y_size, x_size, table }
    }

    #[inline]
    pub fn eval(&self, y: usize, x1: usize, x2: usize) -> u64 {
        self.table[(y * self.x_size + x1) * self.x_size + x2] as u64
    }

    pub fn eval_chain(&self, c: &IChain) -> u64 {
        assert_eq!(c.degree(), 2);
        let mut acc: i64 = 0;
        for (key, coeff) in c.terms() {
            acc += coeff * self.eval(key[0], key[1], key[2]) as i64;
        }
        acc.rem_euclid(self.p as i64) as u64
    }

    /// Vanishing on degree-3 boundaries and on D^I_2 generators.
    pub fn check(&self, f: &GFamily, ys: &XSet) -> Result<bool, AlgebraError> {
        let m = require_cyclic(f)?;
        let ny = ys.y_size();
        let nx = f.x_size();
        let p = self.p as i64;
        let one = 1 % m;
        for y in 0..ny {
            for x1 in 0..nx {
                for x2 in 0..nx {
                    for x3 in 0..nx {
                        let total = -(self.eval(y, x2, x3) as i64)
                            + self.eval(ys.act(y, one, x1), x2, x3) as i64
                            + self.eval(y, x1, x3) as i64
                            - self.eval(ys.act(y, one, x2), f.op(x1, one, x2), x3) as i64
                            - self.eval(y, x1, x2) as i64
                            + self.eval(
                                ys.act(y, one, x3),
                                f.op(x1, one, x3),
                                f.op(x2, one, x3),
                            ) as i64;
                        if total.rem_euclid(p) != 0 {
                            return Ok(false);
                        }
                    }
                }
            }
        }
        for gen in i_d_generators(f, ys, 2)? {
            if self.eval_chain(&gen.chain) != 0 {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// theta^I . g_2 as a value table on Y x Q^2. Errors when theta^I fails
/// its own cocycle check.
pub fn pullback_cocycle(
    theta_i: &ICocycle2,
    f: &GFamily,
    ys: &XSet,
) -> Result<super::cocycle::Cocycle2, AlgebraError> {
    if !theta_i.check(f, ys)? {
        return Err(AlgebraError::AxiomFailure(
            "input table fails the cyclic-complex cocycle check".into(),
        ));
    }
    let ny = ys.y_size();
    let nq = f.q_size();
    let mut table = vec![0u8; ny * nq * nq];
    for y in 0..ny {
        for q1 in 0..nq {
            for q2 in 0..nq {
                let gen = Chain::generator(2, vec![y, q1, q2]);
                let image = chain_map_g(&gen, f, ys)?;
                table[(y * nq + q1) * nq + q2] = theta_i.eval_chain(&image) as u8;
            }
        }
    }
    Ok(super::cocycle::Cocycle2::new(theta_i.p, ny, nq, table))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{dihedral_quandle, gfamily_from_quandle, xset_self, xset_trivial};

    fn z2_family() -> GFamily {
        gfamily_from_quandle(&dihedral_quandle(3), 2).unwrap()
    }

    #[test]
    fn i_boundary_degree_two_expansion() {
        let f = z2_family();
        let ys = xset_self(&f);
        for y in 0..3 {
            for x1 in 0..3 {
                for x2 in 0..3 {
                    let got =
                        i_boundary(&IChain::generator(2, vec![y, x1, x2]), &f, &ys).unwrap();
                    let mut want = IChain::zero(1);
                    want.add_term(vec![y, x2], -1);
                    want.add_term(vec![y, x1], 1);
                    want.add_term(vec![ys.act(y, 1, x1), x2], 1);
                    want.add_term(vec![ys.act(y, 1, x2), f.op(x1, 1, x2)], -1);
                    assert_eq!(got, want);
                }
            }
        }
    }

    #[test]
    fn i_boundary_requires_cyclic_group() {
        let f = crate::algebra::gfamily_linear(
            crate::algebra::special_linear_group(2).unwrap(),
        )
        .unwrap();
        let ys = xset_trivial(&f);
        let gen = IChain::generator(2, vec![0, 0, 1]);
        assert!(i_boundary(&gen, &f, &ys).is_err());
    }

    #[test]
    fn g_after_f_is_identity_on_generators() {
        let f = z2_family();
        let ys = xset_self(&f);
        for y in 0..3 {
            for x1 in 0..3 {
                for x2 in 0..3 {
                    let gen = IChain::generator(2, vec![y, x1, x2]);
                    let image = chain_map_f(&gen, &f).unwrap();
                    let back = chain_map_g(&image, &f, &ys).unwrap();
                    assert_eq!(back, gen);
                }
            }
        }
    }

    #[test]
    fn g_expands_exponents() {
        // m = 2 family: g_2(y, (x1, 1), (x2, 1)) is a single term;
        // a zero exponent gives the empty sum.
        let f = z2_family();
        let ys = xset_self(&f);
        let q_zero = f.q_index(QElem { x: 1, g: 0 });
        let q_one = f.q_index(QElem { x: 2, g: 1 });
        let zero_term = chain_map_g(&Chain::generator(2, vec![0, q_zero, q_one]), &f, &ys)
            .unwrap();
        assert!(zero_term.is_zero());
        let single = chain_map_g(
            &Chain::generator(2, vec![0, f.q_index(QElem { x: 1, g: 1 }), q_one]),
            &f,
            &ys,
        )
        .unwrap();
        let mut want = IChain::zero(2);
        want.add_term(vec![0, 1, 2], 1);
        assert_eq!(single, want);
    }

    #[test]
    fn repeated_pair_boundary_lands_in_degree_one_degeneracies() {
        // d2(y, x, x) lies in the span of D^I_1 generators, checked mod 3 and 5
        let f = z2_family();
        let ys = xset_self(&f);
        for p in [3u64, 5] {
            let n = ys.y_size() * f.x_size();
            let idx = |y: usize, x: usize| y * f.x_size() + x;
            let mut span = crate::chains::solve::ModMatrix::new(p, n).unwrap();
            for gen in i_d_generators(&f, &ys, 1).unwrap() {
                let mut row = vec![0u8; n];
                for (key, coeff) in gen.chain.terms() {
                    let v = coeff.rem_euclid(p as i64) as u64;
                    row[idx(key[0], key[1])] =
                        ((row[idx(key[0], key[1])] as u64 + v) % p) as u8;
                }
                span.insert(row);
            }
            for y in 0..3 {
                for x in 0..3 {
                    let b = i_boundary(&IChain::generator(2, vec![y, x, x]), &f, &ys).unwrap();
                    let mut row = vec![0u8; n];
                    for (key, coeff) in b.terms() {
                        let v = coeff.rem_euclid(p as i64) as u64;
                        row[idx(key[0], key[1])] =
                            ((row[idx(key[0], key[1])] as u64 + v) % p) as u8;
                    }
                    assert!(span.contains(row));
                }
            }
        }
    }

    #[test]
    fn trivial_period_cyclic_sum_is_single_term() {
        // m = 1 family: every cyclic sum has exactly one summand
        let trivial = crate::algebra::Quandle::from_fn(2, |x, _| x);
        let f = gfamily_from_quandle(&trivial, 1).unwrap();
        let ys = xset_trivial(&f);
        for gen in i_d_generators(&f, &ys, 2).unwrap() {
            if gen.kind == IDKind::CyclicSum {
                assert_eq!(gen.chain.terms().count(), 1);
            }
        }
    }
}

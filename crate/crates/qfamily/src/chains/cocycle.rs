use std::fmt;

use rayon::prelude::*;

use super::chain::Chain;
use crate::algebra::{GFamily, Mat2, QElem, XSet};
use crate::error::{AlgebraError, ParseError};

/// A 2-cochain on Y x Q^2 with values in Z_p, stored as a flat table.
/// It is a 2-cocycle of C^*(X; Z_p)_Y when `check_cocycle2` passes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cocycle2 {
    pub p: u64,
    y_size: usize,
    q_size: usize,
    table: Vec<u8>,
}

impl Cocycle2 {
    pub fn new(p: u64, y_size: usize, q_size: usize, table: Vec<u8>) -> Self {
        assert!(p >= 2 && p <= 251);
        assert_eq!(table.len(), y_size * q_size * q_size);
        assert!(table.iter().all(|&v| (v as u64) < p));
        Cocycle2 { p, y_size, q_size, table }
    }

    pub fn zero(p: u64, ys: &XSet, f: &GFamily) -> Self {
        Cocycle2::new(p, ys.y_size(), f.q_size(), vec![0; ys.y_size() * f.q_size() * f.q_size()])
    }

    pub fn y_size(&self) -> usize {
        self.y_size
    }

    pub fn q_size(&self) -> usize {
        self.q_size
    }

    #[inline]
    pub fn eval(&self, y: usize, q1: usize, q2: usize) -> u64 {
        self.table[(y * self.q_size + q1) * self.q_size + q2] as u64
    }

    pub fn set(&mut self, y: usize, q1: usize, q2: usize, v: u64) {
        self.table[(y * self.q_size + q1) * self.q_size + q2] = (v % self.p) as u8;
    }

    /// Linear extension to chains, reduced into 0..p.
    pub fn eval_chain(&self, c: &Chain) -> u64 {
        assert_eq!(c.degree(), 2);
        let mut acc: i64 = 0;
        for (key, coeff) in c.terms() {
            acc += coeff * self.eval(key[0], key[1], key[2]) as i64;
        }
        acc.rem_euclid(self.p as i64) as u64
    }

    /// Plain-text serialization: one `(y, q1, q2) -> value` triple per line.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str("cocycle2\n");
        out.push_str(&format!("p {}\n", self.p));
        out.push_str(&format!("ysize {}\n", self.y_size));
        out.push_str(&format!("qsize {}\n", self.q_size));
        for y in 0..self.y_size {
            for q1 in 0..self.q_size {
                for q2 in 0..self.q_size {
                    let v = self.eval(y, q1, q2);
                    if v != 0 {
                        out.push_str(&format!("({y}, {q1}, {q2}) -> {v}\n"));
                    }
                }
            }
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Cocycle2, ParseError> {
        let mut p = None;
        let mut y_size = None;
        let mut q_size = None;
        let mut triples: Vec<(usize, usize, usize, u64)> = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() || line == "cocycle2" {
                continue;
            }
            let lno = lineno + 1;
            if let Some(rest) = line.strip_prefix("p ") {
                p = Some(rest.trim().parse().map_err(|_| ParseError::at_line(lno, "bad p"))?);
            } else if let Some(rest) = line.strip_prefix("ysize ") {
                y_size =
                    Some(rest.trim().parse().map_err(|_| ParseError::at_line(lno, "bad ysize"))?);
            } else if let Some(rest) = line.strip_prefix("qsize ") {
                q_size =
                    Some(rest.trim().parse().map_err(|_| ParseError::at_line(lno, "bad qsize"))?);
            } else if line.starts_with('(') {
                let (lhs, rhs) = line
                    .split_once("->")
                    .ok_or_else(|| ParseError::at_line(lno, "missing `->`"))?;
                let inner = lhs
                    .trim()
                    .strip_prefix('(')
                    .and_then(|s| s.trim_end().strip_suffix(')'))
                    .ok_or_else(|| ParseError::at_line(lno, "malformed triple"))?;
                let parts: Vec<&str> = inner.split(',').map(str::trim).collect();
                if parts.len() != 3 {
                    return Err(ParseError::at_line(lno, "triple must have three entries"));
                }
                let y = parts[0].parse().map_err(|_| ParseError::at_line(lno, "bad y"))?;
                let q1 = parts[1].parse().map_err(|_| ParseError::at_line(lno, "bad q1"))?;
                let q2 = parts[2].parse().map_err(|_| ParseError::at_line(lno, "bad q2"))?;
                let v = rhs.trim().parse().map_err(|_| ParseError::at_line(lno, "bad value"))?;
                triples.push((y, q1, q2, v));
            } else {
                return Err(ParseError::at_line(lno, format!("unrecognized line `{line}`")));
            }
        }
        let p = p.ok_or_else(|| ParseError::new("missing `p` header"))?;
        let y_size = y_size.ok_or_else(|| ParseError::new("missing `ysize` header"))?;
        let q_size = q_size.ok_or_else(|| ParseError::new("missing `qsize` header"))?;
        let mut out = Cocycle2::new(p, y_size, q_size, vec![0; y_size * q_size * q_size]);
        for (y, q1, q2, v) in triples {
            if y >= y_size || q1 >= q_size || q2 >= q_size {
                return Err(ParseError::new(format!("triple ({y}, {q1}, {q2}) out of range")));
            }
            out.set(y, q1, q2, v);
        }
        Ok(out)
    }
}

/// Where a cocycle check failed, with the offending generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CocycleReport {
    Pass,
    Fail { condition: &'static str, witness: Vec<usize> },
}

impl CocycleReport {
    pub fn is_pass(&self) -> bool {
        matches!(self, CocycleReport::Pass)
    }
}

impl fmt::Display for CocycleReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CocycleReport::Pass => write!(f, "PASS"),
            CocycleReport::Fail { condition, witness } => {
                write!(f, "FAIL: {condition} at generator {witness:?}")
            }
        }
    }
}

/// Verifies that theta vanishes on every boundary of a degree-3 generator
/// and on every generator of D_2(X)_Y. Parallel over generator ranges;
/// the reported witness is the lexicographically first failure.
pub fn check_cocycle2(theta: &Cocycle2, f: &GFamily, ys: &XSet) -> CocycleReport {
    assert_eq!(theta.y_size(), ys.y_size());
    assert_eq!(theta.q_size(), f.q_size());
    let nq = f.q_size();
    let ny = ys.y_size();
    let p = theta.p as i64;

    // theta(d3(y, q1, q2, q3)) = 0:
    //   -theta(y,q2,q3) + theta(y*q1,q2,q3) + theta(y,q1,q3)
    //   -theta(y*q2,q1*q2,q3) - theta(y,q1,q2) + theta(y*q3,q1*q3,q2*q3)
    let coboundary_witness = (0..ny * nq).into_par_iter().find_map_first(|yq1| {
        let y = yq1 / nq;
        let q1i = yq1 % nq;
        let q1 = f.q_elem(q1i);
        let y_q1 = ys.act_q(y, q1);
        for q2i in 0..nq {
            let q2 = f.q_elem(q2i);
            let y_q2 = ys.act_q(y, q2);
            let q1_q2 = f.q_index(f.q_op(q1, q2));
            for q3i in 0..nq {
                let q3 = f.q_elem(q3i);
                let total = -(theta.eval(y, q2i, q3i) as i64)
                    + theta.eval(y_q1, q2i, q3i) as i64
                    + theta.eval(y, q1i, q3i) as i64
                    - theta.eval(y_q2, q1_q2, q3i) as i64
                    - theta.eval(y, q1i, q2i) as i64
                    + theta.eval(
                        ys.act_q(y, q3),
                        f.q_index(f.q_op(q1, q3)),
                        f.q_index(f.q_op(q2, q3)),
                    ) as i64;
                if total.rem_euclid(p) != 0 {
                    return Some(vec![y, q1i, q2i, q3i]);
                }
            }
        }
        None
    });
    if let Some(witness) = coboundary_witness {
        return CocycleReport::Fail { condition: "theta . d3 = 0", witness };
    }

    let nx = f.x_size();
    let ng = f.group().order();
    // repeated-pair generators: theta(y, (x,g), (x,h)) = 0
    for y in 0..ny {
        for x in 0..nx {
            for g in 0..ng {
                let q1 = f.q_index(QElem { x, g });
                for h in 0..ng {
                    let q2 = f.q_index(QElem { x, g: h });
                    if theta.eval(y, q1, q2) != 0 {
                        return CocycleReport::Fail {
                            condition: "theta = 0 on repeated pairs",
                            witness: vec![y, x, g, h],
                        };
                    }
                }
            }
        }
    }
    // group-splitting generators, slot 1:
    //   theta(y,(x,gh),q) - theta(y,(x,g),q) - theta(y*(x,g),(x,h),q) = 0
    let split1 = (0..ny * nx).into_par_iter().find_map_first(|yx| {
        let y = yx / nx;
        let x = yx % nx;
        for g in 0..ng {
            let xg = f.q_index(QElem { x, g });
            let y_xg = ys.act_q(y, QElem { x, g });
            for h in 0..ng {
                let xh = f.q_index(QElem { x, g: h });
                let xgh = f.q_index(QElem { x, g: f.group().mul(g, h) });
                for q in 0..nq {
                    let total = theta.eval(y, xgh, q) as i64
                        - theta.eval(y, xg, q) as i64
                        - theta.eval(y_xg, xh, q) as i64;
                    if total.rem_euclid(p) != 0 {
                        return Some(vec![y, x, g, h, q]);
                    }
                }
            }
        }
        None
    });
    if let Some(witness) = split1 {
        return CocycleReport::Fail { condition: "theta = 0 on group splits (slot 1)", witness };
    }
    // group-splitting generators, slot 2:
    //   theta(y,q,(x,gh)) - theta(y,q,(x,g)) - theta((y,q)*(x,g),(x,h)) = 0
    let split2 = (0..ny * nx).into_par_iter().find_map_first(|yx| {
        let y = yx / nx;
        let x = yx % nx;
        for g in 0..ng {
            let xg_elem = QElem { x, g };
            let xg = f.q_index(xg_elem);
            let y_xg = ys.act_q(y, xg_elem);
            for h in 0..ng {
                let xh = f.q_index(QElem { x, g: h });
                let xgh = f.q_index(QElem { x, g: f.group().mul(g, h) });
                for q in 0..nq {
                    let q_xg = f.q_index(f.q_op(f.q_elem(q), xg_elem));
                    let total = theta.eval(y, q, xgh) as i64
                        - theta.eval(y, q, xg) as i64
                        - theta.eval(y_xg, q_xg, xh) as i64;
                    if total.rem_euclid(p) != 0 {
                        return Some(vec![y, x, g, h, q]);
                    }
                }
            }
        }
        None
    });
    if let Some(witness) = split2 {
        return CocycleReport::Fail { condition: "theta = 0 on group splits (slot 2)", witness };
    }
    CocycleReport::Pass
}

/// The abelianization SL(2; Z_3) -> Z_3:
/// lambda([[a,b],[c,d]]) = (a+d)(b-c)(1-bc) mod 3.
pub fn lambda_ab(g: Mat2) -> u64 {
    assert_eq!(g.modulus, 3, "lambda is defined on SL(2; Z_3)");
    let (a, b, c, d) = (g.a as i64, g.b as i64, g.c as i64, g.d as i64);
    ((a + d) * (b - c) * (1 - b * c)).rem_euclid(3) as u64
}

/// Nosaka's 2-cocycle on the linear family over (Z_3)^2 with trivial Y:
/// theta(y, (x1,g1), (x2,g2)) = lambda(g1) det(x1 - x2, x2 (1 - g2^{-1})).
pub fn nosaka_theta(f: &GFamily, ys: &XSet) -> Result<Cocycle2, AlgebraError> {
    if f.vector_modulus() != Some(3) {
        return Err(AlgebraError::WrongFamily { expected: 3 });
    }
    if !ys.is_trivial() {
        return Err(AlgebraError::AxiomFailure(
            "the Nosaka cocycle is defined over the trivial X-set".into(),
        ));
    }
    let group = f.group();
    let nq = f.q_size();
    let decode = |x: usize| ((x / 3) as i64, (x % 3) as i64);
    let id = Mat2::identity(3);
    let mut table = vec![0u8; nq * nq];
    for q1 in 0..nq {
        let e1 = f.q_elem(q1);
        let lam = lambda_ab(group.matrix(e1.g).expect("matrix group")) as i64;
        if lam == 0 {
            continue;
        }
        let (x1a, x1b) = decode(e1.x);
        for q2 in 0..nq {
            let e2 = f.q_elem(q2);
            let (x2a, x2b) = decode(e2.x);
            // first row: x1 - x2
            let r1 = (x1a - x2a, x1b - x2b);
            // second row: x2 (1 - g2^{-1})
            let inv = group.matrix(group.inv(e2.g)).expect("matrix group");
            let m = id.sub(&inv);
            let r2 = m.apply_row((x2a.rem_euclid(3) as u32, x2b.rem_euclid(3) as u32));
            let det = (r1.0 * r2.1 as i64 - r1.1 * r2.0 as i64).rem_euclid(3);
            table[q1 * nq + q2] = (lam * det).rem_euclid(3) as u8;
        }
    }
    Ok(Cocycle2::new(3, 1, nq, table))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{
        gfamily_linear, special_linear_group, xset_trivial, GFamily,
    };

    fn sl2z3_family() -> GFamily {
        gfamily_linear(special_linear_group(3).unwrap()).unwrap()
    }

    #[test]
    fn lambda_values_and_homomorphy() {
        let group = special_linear_group(3).unwrap();
        assert_eq!(lambda_ab(Mat2::identity(3)), 0);
        assert_eq!(lambda_ab(Mat2::new(3, 1, 1, 0, 1)), 2);
        for g in 0..group.order() {
            let mg = group.matrix(g).unwrap();
            for h in 0..group.order() {
                let mh = group.matrix(h).unwrap();
                assert_eq!(
                    lambda_ab(mg.mul(&mh)),
                    (lambda_ab(mg) + lambda_ab(mh)) % 3,
                    "lambda not additive at ({g}, {h})"
                );
            }
        }
    }

    #[test]
    fn nosaka_vanishing_slices() {
        let f = sl2z3_family();
        let ys = xset_trivial(&f);
        let theta = nosaka_theta(&f, &ys).unwrap();
        let e = f.group().id();
        for x1 in 0..9 {
            for g1 in 0..24 {
                let q1 = f.q_index(QElem { x: x1, g: g1 });
                for g2 in 0..24 {
                    // x1 = x2 kills the first det row
                    let q2 = f.q_index(QElem { x: x1, g: g2 });
                    assert_eq!(theta.eval(0, q1, q2), 0);
                }
                for x2 in 0..9 {
                    // g2 = e kills the second det row
                    let q2 = f.q_index(QElem { x: x2, g: e });
                    assert_eq!(theta.eval(0, q1, q2), 0);
                }
            }
        }
        for x1 in 0..9 {
            let q1 = f.q_index(QElem { x: x1, g: e });
            for q2 in 0..f.q_size() {
                // lambda(e) = 0
                assert_eq!(theta.eval(0, q1, q2), 0);
            }
        }
    }

    #[test]
    fn nosaka_rejects_wrong_family() {
        let f = crate::algebra::gfamily_from_quandle(&crate::algebra::dihedral_quandle(3), 2)
            .unwrap();
        let ys = xset_trivial(&f);
        assert!(nosaka_theta(&f, &ys).is_err());
    }

    #[test]
    fn zero_cocycle_passes_small() {
        let f = crate::algebra::gfamily_from_quandle(&crate::algebra::dihedral_quandle(3), 2)
            .unwrap();
        let ys = xset_trivial(&f);
        let theta = Cocycle2::zero(3, &ys, &f);
        assert!(check_cocycle2(&theta, &f, &ys).is_pass());
    }

    #[test]
    fn perturbed_cocycle_fails() {
        let f = crate::algebra::gfamily_from_quandle(&crate::algebra::dihedral_quandle(3), 2)
            .unwrap();
        let ys = xset_trivial(&f);
        let mut theta = Cocycle2::zero(3, &ys, &f);
        theta.set(0, 1, 2, 1);
        assert!(!check_cocycle2(&theta, &f, &ys).is_pass());
    }

    #[test]
    fn text_round_trip() {
        let f = sl2z3_family();
        let ys = xset_trivial(&f);
        let theta = nosaka_theta(&f, &ys).unwrap();
        let text = theta.to_text();
        let back = Cocycle2::from_text(&text).unwrap();
        assert_eq!(theta, back);
    }
}

use super::group::FiniteGroup;
use super::report::AxiomReport;
use crate::error::AlgebraError;

/// A finite quandle as a dense operation table `(x, y) -> x * y`.
#[derive(Clone, Debug)]
pub struct Quandle {
    size: usize,
    op: Vec<usize>,
}

impl Quandle {
    pub fn from_table(size: usize, op: Vec<usize>) -> Self {
        assert_eq!(op.len(), size * size);
        Quandle { size, op }
    }

    pub fn from_fn(size: usize, f: impl Fn(usize, usize) -> usize) -> Self {
        let mut op = vec![0usize; size * size];
        for x in 0..size {
            for y in 0..size {
                op[x * size + y] = f(x, y);
            }
        }
        Quandle { size, op }
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn op(&self, x: usize, y: usize) -> usize {
        self.op[x * self.size + y]
    }

    pub fn table(&self) -> &[usize] {
        &self.op
    }

    /// Inverse of each right translation, `inv_op(w, y) = z` with `z * y = w`,
    /// or `None` when some `S_y` is not a bijection.
    pub fn right_inverse_table(&self) -> Option<Vec<usize>> {
        let n = self.size;
        let mut inv = vec![usize::MAX; n * n];
        for y in 0..n {
            for x in 0..n {
                let w = self.op(x, y);
                if inv[w * n + y] != usize::MAX {
                    return None;
                }
                inv[w * n + y] = x;
            }
        }
        Some(inv)
    }

    /// Idempotence, bijective right translations, right self-distributivity.
    pub fn check_axioms(&self) -> AxiomReport {
        let n = self.size;
        for x in 0..n {
            if self.op(x, x) != x {
                return AxiomReport::fail("idempotence", vec![x]);
            }
        }
        for y in 0..n {
            let mut seen = vec![false; n];
            for x in 0..n {
                let w = self.op(x, y);
                if seen[w] {
                    return AxiomReport::fail("right translation bijective", vec![x, y]);
                }
                seen[w] = true;
            }
        }
        for x in 0..n {
            for y in 0..n {
                let xy = self.op(x, y);
                for z in 0..n {
                    if self.op(xy, z) != self.op(self.op(x, z), self.op(y, z)) {
                        return AxiomReport::fail("right self-distributivity", vec![x, y, z]);
                    }
                }
            }
        }
        AxiomReport::pass()
    }
}

/// Dihedral quandle R_m: `x * y = 2y - x (mod m)`.
pub fn dihedral_quandle(m: usize) -> Quandle {
    Quandle::from_fn(m, |x, y| (2 * y + m - x % m) % m)
}

/// Conjugation quandle on a group: `x * y = y^{-1} x y`.
pub fn conjugation_quandle(g: &FiniteGroup) -> Quandle {
    Quandle::from_fn(g.order(), |x, y| g.conj(x, y))
}

/// A family of binary operations on X indexed by the elements of a quandle Q,
/// the input to the product-quandle construction.
#[derive(Clone, Debug)]
pub struct QuandleOpFamily {
    pub x_size: usize,
    pub q_size: usize,
    /// (x, a, y) -> x *^a y
    pub op: Vec<usize>,
}

impl QuandleOpFamily {
    pub fn from_fn(x_size: usize, q_size: usize, f: impl Fn(usize, usize, usize) -> usize) -> Self {
        let mut op = vec![0usize; x_size * q_size * x_size];
        for x in 0..x_size {
            for a in 0..q_size {
                for y in 0..x_size {
                    op[(x * q_size + a) * x_size + y] = f(x, a, y);
                }
            }
        }
        QuandleOpFamily { x_size, q_size, op }
    }

    #[inline]
    pub fn op(&self, x: usize, a: usize, y: usize) -> usize {
        self.op[(x * self.q_size + a) * self.x_size + y]
    }

    /// The three Q-family axioms, exhaustively.
    pub fn check_axioms(&self, q: &Quandle) -> AxiomReport {
        assert_eq!(self.q_size, q.size());
        let nx = self.x_size;
        let nq = self.q_size;
        for x in 0..nx {
            for a in 0..nq {
                if self.op(x, a, x) != x {
                    return AxiomReport::fail("x *^a x = x", vec![x, a]);
                }
            }
        }
        for a in 0..nq {
            for x in 0..nx {
                let mut seen = vec![false; nx];
                for y in 0..nx {
                    let w = self.op(y, a, x);
                    if seen[w] {
                        return AxiomReport::fail("S_{x,a} bijective", vec![y, a, x]);
                    }
                    seen[w] = true;
                }
            }
        }
        for x in 0..nx {
            for y in 0..nx {
                for a in 0..nq {
                    let xy = self.op(x, a, y);
                    for z in 0..nx {
                        for b in 0..nq {
                            let lhs = self.op(xy, b, z);
                            let rhs = self.op(
                                self.op(x, b, z),
                                q.op(a, b),
                                self.op(y, b, z),
                            );
                            if lhs != rhs {
                                return AxiomReport::fail(
                                    "(x *^a y) *^b z = (x *^b z) *^{a<b} (y *^b z)",
                                    vec![x, y, z, a, b],
                                );
                            }
                        }
                    }
                }
            }
        }
        AxiomReport::pass()
    }
}

/// Product quandle on X x Q with `(x,a) * (y,b) = (x *^b y, a <| b)`.
/// Element index is `x * q_size + b`.
pub fn qfamily_product_quandle(
    q: &Quandle,
    ops: &QuandleOpFamily,
) -> Result<Quandle, AlgebraError> {
    let report = ops.check_axioms(q);
    if let AxiomReport::Fail { axiom, witness } = &report {
        return Err(AlgebraError::AxiomFailure(format!(
            "{axiom} at witness {witness:?}"
        )));
    }
    let nx = ops.x_size;
    let nq = q.size();
    let n = nx * nq;
    Ok(Quandle::from_fn(n, |p, r| {
        let (x, a) = (p / nq, p % nq);
        let (y, b) = (r / nq, r % nq);
        ops.op(x, b, y) * nq + q.op(a, b)
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::group::special_linear_group;

    #[test]
    fn dihedral_is_a_quandle() {
        for m in 1..8 {
            assert!(dihedral_quandle(m).check_axioms().is_pass(), "R_{m}");
        }
    }

    #[test]
    fn conjugation_is_a_quandle() {
        let g = special_linear_group(2).unwrap();
        assert!(conjugation_quandle(&g).check_axioms().is_pass());
    }

    #[test]
    fn mutated_table_fails_with_witness() {
        let q = dihedral_quandle(3);
        let mut table = q.table().to_vec();
        table[1] = (table[1] + 1) % 3; // corrupt op(0, 1)
        let bad = Quandle::from_table(3, table);
        assert!(!bad.check_axioms().is_pass());
    }

    #[test]
    fn right_inverse_table_inverts() {
        let q = dihedral_quandle(5);
        let inv = q.right_inverse_table().unwrap();
        for x in 0..5 {
            for y in 0..5 {
                assert_eq!(inv[q.op(x, y) * 5 + y], x);
            }
        }
    }

    #[test]
    fn singleton_x_product_is_the_base_quandle() {
        let q = dihedral_quandle(3);
        let ops = QuandleOpFamily::from_fn(1, 3, |x, _, _| x);
        let prod = qfamily_product_quandle(&q, &ops).unwrap();
        assert_eq!(prod.size(), 3);
        for a in 0..3 {
            for b in 0..3 {
                assert_eq!(prod.op(a, b), q.op(a, b));
            }
        }
    }
}

use super::group::FiniteGroup;
use super::quandle::Quandle;
use super::report::AxiomReport;
use crate::error::AlgebraError;

/// An element of the associated quandle Q = X x G.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QElem {
    pub x: usize,
    pub g: usize,
}

/// A G-family of quandles: a set X with one binary operation `*^g` per
/// group element, tabulated as `(x, g, y) -> x *^g y`.
#[derive(Clone, Debug)]
pub struct GFamily {
    x_size: usize,
    group: FiniteGroup,
    op: Vec<usize>,
    /// Set when X is (Z_m)^2 with the linear operation; lets consumers
    /// decode x-indices back to row vectors.
    vector_modulus: Option<u32>,
}

impl GFamily {
    pub fn from_fn(
        x_size: usize,
        group: FiniteGroup,
        f: impl Fn(usize, usize, usize) -> usize,
    ) -> Self {
        let order = group.order();
        let mut op = vec![0usize; x_size * order * x_size];
        for x in 0..x_size {
            for g in 0..order {
                for y in 0..x_size {
                    op[(x * order + g) * x_size + y] = f(x, g, y);
                }
            }
        }
        GFamily { x_size, group, op, vector_modulus: None }
    }

    pub fn from_table(x_size: usize, group: FiniteGroup, op: Vec<usize>) -> Self {
        assert_eq!(op.len(), x_size * group.order() * x_size);
        GFamily { x_size, group, op, vector_modulus: None }
    }

    #[inline]
    pub fn x_size(&self) -> usize {
        self.x_size
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    /// x *^g y
    #[inline]
    pub fn op(&self, x: usize, g: usize, y: usize) -> usize {
        self.op[(x * self.group.order() + g) * self.x_size + y]
    }

    pub fn table_mut(&mut self) -> &mut [usize] {
        &mut self.op
    }

    pub fn vector_modulus(&self) -> Option<u32> {
        self.vector_modulus
    }

    /// Number of elements of the associated quandle.
    #[inline]
    pub fn q_size(&self) -> usize {
        self.x_size * self.group.order()
    }

    #[inline]
    pub fn q_index(&self, q: QElem) -> usize {
        q.x * self.group.order() + q.g
    }

    #[inline]
    pub fn q_elem(&self, idx: usize) -> QElem {
        QElem { x: idx / self.group.order(), g: idx % self.group.order() }
    }

    /// (x,g) * (y,h) = (x *^h y, h^{-1} g h) in the associated quandle.
    #[inline]
    pub fn q_op(&self, a: QElem, b: QElem) -> QElem {
        QElem {
            x: self.op(a.x, b.g, b.x),
            g: self.group.conj(a.g, b.g),
        }
    }

    /// Inverse right translation: the unique z with z * b = a,
    /// namely a * (y, h^{-1}).
    #[inline]
    pub fn q_op_inv(&self, a: QElem, b: QElem) -> QElem {
        self.q_op(a, QElem { x: b.x, g: self.group.inv(b.g) })
    }

    /// The three G-family axioms, exhaustively, lexicographic first witness
    /// in the order (x, g), (x, y, g, h), (x, y, z, g, h).
    pub fn check_axioms(&self) -> AxiomReport {
        let nx = self.x_size;
        let ng = self.group.order();
        let e = self.group.id();
        for x in 0..nx {
            for g in 0..ng {
                if self.op(x, g, x) != x {
                    return AxiomReport::fail("x *^g x = x", vec![x, g]);
                }
            }
        }
        for x in 0..nx {
            for y in 0..nx {
                if self.op(x, e, y) != x {
                    return AxiomReport::fail("x *^e y = x", vec![x, y]);
                }
                for g in 0..ng {
                    let xg = self.op(x, g, y);
                    for h in 0..ng {
                        if self.op(x, self.group.mul(g, h), y) != self.op(xg, h, y) {
                            return AxiomReport::fail(
                                "x *^{gh} y = (x *^g y) *^h y",
                                vec![x, y, g, h],
                            );
                        }
                    }
                }
            }
        }
        for x in 0..nx {
            for y in 0..nx {
                for z in 0..nx {
                    for g in 0..ng {
                        let xy = self.op(x, g, y);
                        for h in 0..ng {
                            let lhs = self.op(xy, h, z);
                            let rhs = self.op(
                                self.op(x, h, z),
                                self.group.conj(g, h),
                                self.op(y, h, z),
                            );
                            if lhs != rhs {
                                return AxiomReport::fail(
                                    "(x *^g y) *^h z = (x *^h z) *^{h^-1 g h} (y *^h z)",
                                    vec![x, y, z, g, h],
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

/// The linear G-family on X = (Z_m)^2: `x *^g y = x g + y (e - g)`,
/// row vectors acting on the right. Requires a matrix-realized group.
/// The x-index of the vector (a, b) is `a * m + b`.
pub fn gfamily_linear(group: FiniteGroup) -> Result<GFamily, AlgebraError> {
    let m = group.matrix_modulus().ok_or(AlgebraError::MissingMatrices)?;
    let x_size = (m * m) as usize;
    let decode = |x: usize| ((x as u32 / m), (x as u32 % m));
    let id = super::mat2::Mat2::identity(m);
    let order = group.order();
    let mut op = vec![0usize; x_size * order * x_size];
    for g in 0..order {
        let mat = group.matrix(g).expect("matrix realization present");
        let complement = id.sub(&mat);
        for x in 0..x_size {
            let xv = decode(x);
            let xg = mat.apply_row(xv);
            for y in 0..x_size {
                let yv = decode(y);
                let yc = complement.apply_row(yv);
                let r = ((xg.0 + yc.0) % m, (xg.1 + yc.1) % m);
                op[(x * order + g) * x_size + y] = (r.0 * m + r.1) as usize;
            }
        }
    }
    let mut family = GFamily::from_table(x_size, group, op);
    family.vector_modulus = Some(m);
    Ok(family)
}

/// The Z_m-family obtained from a quandle by `x *^i y = S_y^i(x)`,
/// valid when every right translation has order dividing m.
pub fn gfamily_from_quandle(q: &Quandle, m: usize) -> Result<GFamily, AlgebraError> {
    let group = crate::algebra::group::cyclic_group(m)?;
    let n = q.size();
    // power tables S_y^i
    let mut power = vec![0usize; n * m * n];
    for y in 0..n {
        for x in 0..n {
            power[y * m * n + x] = x; // i = 0
        }
        for i in 1..m {
            for x in 0..n {
                let prev = power[(y * m + i - 1) * n + x];
                power[(y * m + i) * n + x] = q.op(prev, y);
            }
        }
        // S_y^m must be the identity
        for x in 0..n {
            let last = power[(y * m + m - 1) * n + x];
            let full = q.op(last, y);
            if full != x {
                return Err(AlgebraError::BadPeriod { period: m, x: y, y: x, image: full });
            }
        }
    }
    Ok(GFamily::from_fn(n, group, |x, i, y| power[(y * m + i) * n + x]))
}

/// The associated quandle on X x G with `(x,g)*(y,h) = (x *^h y, h^{-1}gh)`.
pub fn associated_quandle(f: &GFamily) -> Quandle {
    let order = f.group().order();
    Quandle::from_fn(f.q_size(), |p, r| {
        let a = QElem { x: p / order, g: p % order };
        let b = QElem { x: r / order, g: r % order };
        f.q_index(f.q_op(a, b))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::group::special_linear_group;
    use crate::algebra::mat2::Mat2;
    use crate::algebra::quandle::{dihedral_quandle, qfamily_product_quandle, QuandleOpFamily};

    fn sl2z3_family() -> GFamily {
        gfamily_linear(special_linear_group(3).unwrap()).unwrap()
    }

    #[test]
    fn linear_family_passes_axioms() {
        let f = sl2z3_family();
        assert_eq!(f.x_size(), 9);
        assert_eq!(f.group().order(), 24);
        assert!(f.check_axioms().is_pass());
    }

    #[test]
    fn linear_family_pointwise_values() {
        let f = sl2z3_family();
        let e = f.group().id();
        for x in 0..9 {
            for g in 0..24 {
                assert_eq!(f.op(x, g, x), x);
            }
            for y in 0..9 {
                assert_eq!(f.op(x, e, y), x);
            }
        }
        // x = (1,0), y = (0,0), g = [[1,1],[0,1]]: x * g = (1,1)
        let g = (0..24)
            .find(|&i| f.group().matrix(i) == Some(Mat2::new(3, 1, 1, 0, 1)))
            .unwrap();
        let x = 3; // (1,0)
        let y = 0; // (0,0)
        assert_eq!(f.op(x, g, y), 4); // (1,1)
    }

    #[test]
    fn mutated_family_fails_with_witness() {
        let mut f = gfamily_from_quandle(&dihedral_quandle(3), 2).unwrap();
        let idx = 1 * f.x_size() + 2; // op(0, 1, 2)
        f.table_mut()[idx] = (f.table_mut()[idx] + 1) % 3;
        assert!(!f.check_axioms().is_pass());
    }

    #[test]
    fn dihedral_family_period_check() {
        let q = dihedral_quandle(3);
        let f = gfamily_from_quandle(&q, 2).unwrap();
        assert!(f.check_axioms().is_pass());
        // exponent 1 recovers the quandle operation
        for x in 0..3 {
            for y in 0..3 {
                assert_eq!(f.op(x, 1, y), q.op(x, y));
                assert_eq!(f.op(x, 0, y), x);
            }
        }
        // S_y has order 2, which does not divide 3
        assert!(matches!(
            gfamily_from_quandle(&q, 3),
            Err(AlgebraError::BadPeriod { .. })
        ));
    }

    #[test]
    fn associated_quandle_small_properties() {
        let f = gfamily_from_quandle(&dihedral_quandle(3), 2).unwrap();
        let q = associated_quandle(&f);
        assert_eq!(q.size(), 6);
        assert!(q.check_axioms().is_pass());
        // right translation by b then by (b_x, b_g^{-1}) is the identity
        for a in 0..6 {
            for b in 0..6 {
                let ae = f.q_elem(a);
                let be = f.q_elem(b);
                let fwd = f.q_op(ae, be);
                assert_eq!(f.q_op_inv(fwd, be), ae);
                assert_eq!(f.q_index(fwd), q.op(a, b));
            }
        }
    }

    #[test]
    fn product_quandle_reproduces_associated_quandle() {
        // conjugation quandle on G as Q, with ops taken from the G-family
        let f = gfamily_from_quandle(&dihedral_quandle(3), 2).unwrap();
        let conj = crate::algebra::quandle::conjugation_quandle(f.group());
        let ops = QuandleOpFamily::from_fn(f.x_size(), f.group().order(), |x, a, y| {
            f.op(x, a, y)
        });
        let prod = qfamily_product_quandle(&conj, &ops).unwrap();
        let assoc = associated_quandle(&f);
        assert_eq!(prod.size(), assoc.size());
        for a in 0..prod.size() {
            for b in 0..prod.size() {
                assert_eq!(prod.op(a, b), assoc.op(a, b));
            }
        }
    }
}

use super::family::{GFamily, QElem};
use super::report::AxiomReport;

/// An X-set: a set Y with maps `*^g : Y x X -> Y` compatible with the
/// G-family structure, tabulated as `(y, g, x) -> y *^g x`.
#[derive(Clone, Debug)]
pub struct XSet {
    y_size: usize,
    g_order: usize,
    x_size: usize,
    act: Vec<usize>,
}

impl XSet {
    pub fn from_fn(
        y_size: usize,
        g_order: usize,
        x_size: usize,
        f: impl Fn(usize, usize, usize) -> usize,
    ) -> Self {
        let mut act = vec![0usize; y_size * g_order * x_size];
        for y in 0..y_size {
            for g in 0..g_order {
                for x in 0..x_size {
                    act[(y * g_order + g) * x_size + x] = f(y, g, x);
                }
            }
        }
        XSet { y_size, g_order, x_size, act }
    }

    #[inline]
    pub fn y_size(&self) -> usize {
        self.y_size
    }

    pub fn is_trivial(&self) -> bool {
        self.y_size == 1
    }

    /// y *^g x
    #[inline]
    pub fn act(&self, y: usize, g: usize, x: usize) -> usize {
        self.act[(y * self.g_order + g) * self.x_size + x]
    }

    /// y * (x, g) for an associated-quandle element.
    #[inline]
    pub fn act_q(&self, y: usize, q: QElem) -> usize {
        self.act(y, q.g, q.x)
    }

    /// The unique z with z * (x, g) = y, namely y *^{g^{-1}} x.
    #[inline]
    pub fn act_q_inv(&self, y: usize, q: QElem, f: &GFamily) -> usize {
        self.act(y, f.group().inv(q.g), q.x)
    }

    /// The two X-set axioms, exhaustively.
    pub fn check_axioms(&self, f: &GFamily) -> AxiomReport {
        assert_eq!(self.g_order, f.group().order());
        assert_eq!(self.x_size, f.x_size());
        let ny = self.y_size;
        let ng = self.g_order;
        let nx = self.x_size;
        let e = f.group().id();
        for y in 0..ny {
            for x in 0..nx {
                if self.act(y, e, x) != y {
                    return AxiomReport::fail("y *^e x = y", vec![y, x]);
                }
                for g in 0..ng {
                    let yg = self.act(y, g, x);
                    for h in 0..ng {
                        if self.act(y, f.group().mul(g, h), x) != self.act(yg, h, x) {
                            return AxiomReport::fail(
                                "y *^{gh} x = (y *^g x) *^h x",
                                vec![y, x, g, h],
                            );
                        }
                    }
                }
            }
        }
        for y in 0..ny {
            for x1 in 0..nx {
                for x2 in 0..nx {
                    for g in 0..ng {
                        let yg = self.act(y, g, x1);
                        for h in 0..ng {
                            let lhs = self.act(yg, h, x2);
                            let rhs = self.act(
                                self.act(y, h, x2),
                                f.group().conj(g, h),
                                f.op(x1, h, x2),
                            );
                            if lhs != rhs {
                                return AxiomReport::fail(
                                    "(y *^g x1) *^h x2 = (y *^h x2) *^{h^-1 g h} (x1 *^h x2)",
                                    vec![y, x1, x2, g, h],
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

/// The trivial X-set: a singleton with `y *^g x = y`.
pub fn xset_trivial(f: &GFamily) -> XSet {
    XSet::from_fn(1, f.group().order(), f.x_size(), |y, _, _| y)
}

/// The G-family acting on itself: Y = X with the family's own operations.
pub fn xset_self(f: &GFamily) -> XSet {
    XSet::from_fn(f.x_size(), f.group().order(), f.x_size(), |y, g, x| {
        f.op(y, g, x)
    })
}

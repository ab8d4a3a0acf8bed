use super::cocycle::Cocycle2;
use super::iso::ICocycle2;
use crate::algebra::{GFamily, XSet};
use crate::error::SolveError;

/// Default cap on the number of unknowns for cocycle solving.
pub const DEFAULT_SOLVE_BOUND: usize = 10_000;

fn require_prime(p: u64) -> Result<(), SolveError> {
    if !(2..=251).contains(&p) || (2..p).any(|d| p % d == 0) {
        return Err(SolveError::BadModulus(p));
    }
    Ok(())
}

fn inv_mod(a: u64, p: u64) -> u64 {
    // p is prime and a != 0 mod p
    let mut result = 1u64;
    let mut base = a % p;
    let mut exp = p - 2;
    while exp > 0 {
        if exp & 1 == 1 {
            result = result * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    result
}

/// Dense row-reduction workspace over Z_p.
pub struct ModMatrix {
    p: u64,
    cols: usize,
    /// rows in reduced echelon form
    rows: Vec<Vec<u8>>,
    /// pivot column of each stored row
    pivots: Vec<usize>,
}

impl ModMatrix {
    pub fn new(p: u64, cols: usize) -> Result<Self, SolveError> {
        require_prime(p)?;
        Ok(ModMatrix { p, cols, rows: Vec::new(), pivots: Vec::new() })
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `row` against the stored rows, in place.
    /// Returns the reduced residual.
    pub fn reduce(&self, mut row: Vec<u8>) -> Vec<u8> {
        assert_eq!(row.len(), self.cols);
        for (r, &pc) in self.rows.iter().zip(&self.pivots) {
            let factor = row[pc] as u64;
            if factor != 0 {
                for j in pc..self.cols {
                    let v = (row[j] as u64 + (self.p - factor) * r[j] as u64) % self.p;
                    row[j] = v as u8;
                }
            }
        }
        row
    }

    /// Inserts a row, keeping echelon form. Returns true when the row was
    /// independent of the existing span.
    pub fn insert(&mut self, row: Vec<u8>) -> bool {
        let mut row = self.reduce(row);
        let Some(pivot) = row.iter().position(|&v| v != 0) else {
            return false;
        };
        let scale = inv_mod(row[pivot] as u64, self.p);
        for v in row.iter_mut() {
            *v = ((*v as u64) * scale % self.p) as u8;
        }
        // back-substitute into earlier rows
        for (r, &pc) in self.rows.iter_mut().zip(&self.pivots) {
            debug_assert!(pc != pivot);
            let factor = r[pivot] as u64;
            if factor != 0 {
                for j in 0..self.cols {
                    let v = (r[j] as u64 + (self.p - factor) * row[j] as u64) % self.p;
                    r[j] = v as u8;
                }
            }
        }
        let at = self.pivots.iter().position(|&pc| pc > pivot).unwrap_or(self.rows.len());
        self.rows.insert(at, row);
        self.pivots.insert(at, pivot);
        true
    }

    pub fn contains(&self, row: Vec<u8>) -> bool {
        self.reduce(row).iter().all(|&v| v == 0)
    }

    /// A basis of the null space { v : row . v = 0 for every inserted row },
    /// one vector per non-pivot column.
    pub fn kernel_basis(&self) -> Vec<Vec<u8>> {
        let mut is_pivot = vec![false; self.cols];
        for &pc in &self.pivots {
            is_pivot[pc] = true;
        }
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if is_pivot[free] {
                continue;
            }
            let mut v = vec![0u8; self.cols];
            v[free] = 1;
            for (r, &pc) in self.rows.iter().zip(&self.pivots) {
                // pivot entry is 1, so v[pc] = -r[free]
                v[pc] = ((self.p - r[free] as u64) % self.p) as u8;
            }
            basis.push(v);
        }
        basis
    }
}

/// A basis of { theta : theta . d3 = 0 and theta vanishes on D_2(X)_Y },
/// found by elimination mod p over the constraint rows.
pub fn solve_cocycles2(
    f: &GFamily,
    ys: &XSet,
    p: u64,
    bound: usize,
) -> Result<Vec<Cocycle2>, SolveError> {
    let ny = ys.y_size();
    let nq = f.q_size();
    let unknowns = ny * nq * nq;
    if unknowns > bound {
        return Err(SolveError::BoundExceeded { unknowns, bound });
    }
    let mut m = ModMatrix::new(p, unknowns)?;
    let idx = |y: usize, q1: usize, q2: usize| (y * nq + q1) * nq + q2;
    let one = 1u8;
    let neg = (p - 1) as u8;
    let addm = |row: &mut Vec<u8>, col: usize, val: u8| {
        row[col] = ((row[col] as u64 + val as u64) % p) as u8;
    };
    // cocycle condition rows
    for y in 0..ny {
        for q1i in 0..nq {
            let q1 = f.q_elem(q1i);
            for q2i in 0..nq {
                let q2 = f.q_elem(q2i);
                for q3i in 0..nq {
                    let q3 = f.q_elem(q3i);
                    let mut row = vec![0u8; unknowns];
                    addm(&mut row, idx(y, q2i, q3i), neg);
                    addm(&mut row, idx(ys.act_q(y, q1), q2i, q3i), one);
                    addm(&mut row, idx(y, q1i, q3i), one);
                    addm(
                        &mut row,
                        idx(ys.act_q(y, q2), f.q_index(f.q_op(q1, q2)), q3i),
                        neg,
                    );
                    addm(&mut row, idx(y, q1i, q2i), neg);
                    addm(
                        &mut row,
                        idx(
                            ys.act_q(y, q3),
                            f.q_index(f.q_op(q1, q3)),
                            f.q_index(f.q_op(q2, q3)),
                        ),
                        one,
                    );
                    m.insert(row);
                }
            }
        }
    }
    // degeneracy rows
    for gen in super::chain::d2_generators(f, ys) {
        let mut row = vec![0u8; unknowns];
        for (key, coeff) in gen.chain.terms() {
            let v = coeff.rem_euclid(p as i64) as u8;
            addm(&mut row, idx(key[0], key[1], key[2]), v);
        }
        m.insert(row);
    }
    let basis = m
        .kernel_basis()
        .into_iter()
        .map(|table| Cocycle2::new(p, ny, nq, table))
        .collect();
    Ok(basis)
}

/// Same solver for the cyclic-family complex on Y x X^2.
pub fn solve_icocycles2(
    f: &GFamily,
    ys: &XSet,
    p: u64,
    bound: usize,
) -> Result<Vec<ICocycle2>, SolveError> {
    let m_period = f
        .group()
        .as_cyclic()
        .expect("solve_icocycles2 requires a cyclic-group family");
    let ny = ys.y_size();
    let nx = f.x_size();
    let unknowns = ny * nx * nx;
    if unknowns > bound {
        return Err(SolveError::BoundExceeded { unknowns, bound });
    }
    let mut m = ModMatrix::new(p, unknowns)?;
    let idx = |y: usize, x1: usize, x2: usize| (y * nx + x1) * nx + x2;
    let one = 1u8;
    let neg = (p - 1) as u8;
    let addm = |row: &mut Vec<u8>, col: usize, val: u8| {
        row[col] = ((row[col] as u64 + val as u64) % p) as u8;
    };
    let act1 = |y: usize, x: usize| ys.act(y, 1 % m_period, x);
    let op1 = |a: usize, b: usize| f.op(a, 1 % m_period, b);
    // cocycle condition rows from the degree-3 boundary
    for y in 0..ny {
        for x1 in 0..nx {
            for x2 in 0..nx {
                for x3 in 0..nx {
                    let mut row = vec![0u8; unknowns];
                    addm(&mut row, idx(y, x2, x3), neg);
                    addm(&mut row, idx(act1(y, x1), x2, x3), one);
                    addm(&mut row, idx(y, x1, x3), one);
                    addm(&mut row, idx(act1(y, x2), op1(x1, x2), x3), neg);
                    addm(&mut row, idx(y, x1, x2), neg);
                    addm(&mut row, idx(act1(y, x3), op1(x1, x3), op1(x2, x3)), one);
                    m.insert(row);
                }
            }
        }
    }
    // repeated-pair rows
    for y in 0..ny {
        for x in 0..nx {
            let mut row = vec![0u8; unknowns];
            addm(&mut row, idx(y, x, x), one);
            m.insert(row);
        }
    }
    // cyclic-sum rows at both slots
    for y in 0..ny {
        for x1 in 0..nx {
            for x2 in 0..nx {
                // slot 1: sum_j (y *^j x1, x1, x2)
                let mut row = vec![0u8; unknowns];
                for j in 0..m_period {
                    addm(&mut row, idx(ys.act(y, j, x1), x1, x2), one);
                }
                m.insert(row);
                // slot 2: sum_j (y *^j x2, x1 *^j x2, x2)
                let mut row = vec![0u8; unknowns];
                for j in 0..m_period {
                    addm(&mut row, idx(ys.act(y, j, x2), f.op(x1, j, x2), x2), one);
                }
                m.insert(row);
            }
        }
    }
    let basis = m
        .kernel_basis()
        .into_iter()
        .map(|table| ICocycle2::new(p, ny, nx, table))
        .collect();
    Ok(basis)
}

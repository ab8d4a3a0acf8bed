use std::collections::HashMap;

use super::mat2::Mat2;
use super::report::AxiomReport;
use crate::error::AlgebraError;

/// Default cap on generator closure; hitting it signals wrong modulus or
/// generators rather than a legitimately huge group.
pub const DEFAULT_CLOSURE_BOUND: usize = 10_000;

/// A finite group on dense indices `0..order` with precomputed tables.
///
/// Index 0 is always the identity. When the group was built from matrix
/// generators, every element keeps its `Mat2` realization.
#[derive(Clone, Debug)]
pub struct FiniteGroup {
    order: usize,
    mul: Vec<usize>,
    inv: Vec<usize>,
    names: Vec<String>,
    matrices: Option<Vec<Mat2>>,
}

impl FiniteGroup {
    pub fn from_tables(
        order: usize,
        mul: Vec<usize>,
        inv: Vec<usize>,
        names: Vec<String>,
        matrices: Option<Vec<Mat2>>,
    ) -> Self {
        assert_eq!(mul.len(), order * order);
        assert_eq!(inv.len(), order);
        assert_eq!(names.len(), order);
        FiniteGroup { order, mul, inv, names, matrices }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn id(&self) -> usize {
        0
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    /// b^{-1} a b.
    #[inline]
    pub fn conj(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(self.inv(b), a), b)
    }

    pub fn name(&self, a: usize) -> &str {
        &self.names[a]
    }

    pub fn matrix(&self, a: usize) -> Option<Mat2> {
        self.matrices.as_ref().map(|ms| ms[a])
    }

    pub fn matrix_modulus(&self) -> Option<u32> {
        self.matrices.as_ref().map(|ms| ms[0].modulus)
    }

    /// Returns `Some(order)` when index multiplication is addition mod order.
    pub fn as_cyclic(&self) -> Option<usize> {
        let n = self.order;
        for a in 0..n {
            for b in 0..n {
                if self.mul(a, b) != (a + b) % n {
                    return None;
                }
            }
        }
        Some(n)
    }

    pub fn centralizer_size(&self, a: usize) -> usize {
        (0..self.order).filter(|&b| self.mul(a, b) == self.mul(b, a)).count()
    }

    pub fn conjugacy_class_count(&self) -> usize {
        let mut seen = vec![false; self.order];
        let mut count = 0;
        for a in 0..self.order {
            if seen[a] {
                continue;
            }
            count += 1;
            for b in 0..self.order {
                seen[self.conj(a, b)] = true;
            }
        }
        count
    }

    /// Identity, inverses and associativity, exhaustively. Reports the
    /// lexicographically first witness on failure.
    pub fn check_axioms(&self) -> AxiomReport {
        let n = self.order;
        for a in 0..n {
            if self.mul(0, a) != a || self.mul(a, 0) != a {
                return AxiomReport::fail("identity", vec![a]);
            }
            if self.mul(a, self.inv(a)) != 0 || self.mul(self.inv(a), a) != 0 {
                return AxiomReport::fail("inverse", vec![a]);
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                        return AxiomReport::fail("associativity", vec![a, b, c]);
                    }
                }
            }
        }
        AxiomReport::pass()
    }
}

/// Additive group of residues mod `m`; element index is the residue.
pub fn cyclic_group(m: usize) -> Result<FiniteGroup, AlgebraError> {
    if m == 0 {
        return Err(AlgebraError::ZeroOrder);
    }
    let mut mul = vec![0usize; m * m];
    for a in 0..m {
        for b in 0..m {
            mul[a * m + b] = (a + b) % m;
        }
    }
    let inv = (0..m).map(|a| (m - a) % m).collect();
    let names = (0..m).map(|a| a.to_string()).collect();
    Ok(FiniteGroup::from_tables(m, mul, inv, names, None))
}

/// Closes a set of unimodular generators under multiplication,
/// breadth-first from the identity, and tabulates the resulting group.
pub fn group_from_matrix_generators(
    modulus: u32,
    gens: &[Mat2],
    bound: usize,
) -> Result<FiniteGroup, AlgebraError> {
    for g in gens {
        assert_eq!(g.modulus, modulus, "generator modulus mismatch");
        if !g.is_unimodular() {
            return Err(AlgebraError::NonInvertibleGenerator(g.to_string(), modulus));
        }
    }
    let identity = Mat2::identity(modulus);
    let mut elements = vec![identity];
    let mut index: HashMap<Mat2, usize> = HashMap::new();
    index.insert(identity, 0);
    let mut frontier = 0;
    while frontier < elements.len() {
        let current = elements[frontier];
        frontier += 1;
        for g in gens {
            let next = current.mul(g);
            if !index.contains_key(&next) {
                if elements.len() >= bound {
                    return Err(AlgebraError::ClosureBound(bound));
                }
                index.insert(next, elements.len());
                elements.push(next);
            }
        }
    }
    let n = elements.len();
    let mut mul = vec![0usize; n * n];
    for a in 0..n {
        for b in 0..n {
            let prod = elements[a].mul(&elements[b]);
            mul[a * n + b] = *index
                .get(&prod)
                .expect("closure is complete; product must be known");
        }
    }
    let mut inv = vec![usize::MAX; n];
    for a in 0..n {
        for b in 0..n {
            if mul[a * n + b] == 0 {
                inv[a] = b;
                break;
            }
        }
    }
    let names = elements.iter().map(|e| e.to_string()).collect();
    Ok(FiniteGroup::from_tables(n, mul, inv, names, Some(elements)))
}

/// The group SL(2; Z_m) generated by the two elementary transvections.
pub fn special_linear_group(modulus: u32) -> Result<FiniteGroup, AlgebraError> {
    let gens = [
        Mat2::new(modulus, 1, 1, 0, 1),
        Mat2::new(modulus, 1, 0, 1, 1),
    ];
    group_from_matrix_generators(modulus, &gens, DEFAULT_CLOSURE_BOUND)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    /// Independent closure oracle: saturate a HashSet of matrices by
    /// repeated pairwise products, with no BFS or indexing.
    fn closure_size_oracle(modulus: u32, gens: &[Mat2]) -> usize {
        let mut set: HashSet<Mat2> = HashSet::new();
        set.insert(Mat2::identity(modulus));
        for g in gens {
            set.insert(*g);
        }
        loop {
            let snapshot: Vec<Mat2> = set.iter().copied().collect();
            let before = set.len();
            for a in &snapshot {
                for b in &snapshot {
                    set.insert(a.mul(b));
                }
            }
            if set.len() == before {
                return set.len();
            }
        }
    }

    #[test]
    fn sl2_z3_has_order_24() {
        let gens = [Mat2::new(3, 1, 1, 0, 1), Mat2::new(3, 1, 0, 1, 1)];
        let g = group_from_matrix_generators(3, &gens, DEFAULT_CLOSURE_BOUND).unwrap();
        assert_eq!(g.order(), 24);
        assert_eq!(closure_size_oracle(3, &gens), 24);
        assert!(g.check_axioms().is_pass());
    }

    #[test]
    fn sl2_z2_has_order_6() {
        let gens = [Mat2::new(2, 1, 1, 0, 1), Mat2::new(2, 1, 0, 1, 1)];
        let g = group_from_matrix_generators(2, &gens, DEFAULT_CLOSURE_BOUND).unwrap();
        assert_eq!(g.order(), 6);
        assert_eq!(closure_size_oracle(2, &gens), 6);
        assert!(g.check_axioms().is_pass());
    }

    #[test]
    fn identity_generator_gives_trivial_group() {
        let g = group_from_matrix_generators(3, &[Mat2::identity(3)], 16).unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.inv(0), 0);
    }

    #[test]
    fn non_invertible_generator_rejected() {
        let bad = Mat2::new(3, 1, 1, 1, 1);
        let err = group_from_matrix_generators(3, &[bad], 16).unwrap_err();
        assert!(matches!(err, AlgebraError::NonInvertibleGenerator(..)));
    }

    #[test]
    fn closure_bound_trips() {
        let gens = [Mat2::new(5, 1, 1, 0, 1), Mat2::new(5, 1, 0, 1, 1)];
        let err = group_from_matrix_generators(5, &gens, 10).unwrap_err();
        assert!(matches!(err, AlgebraError::ClosureBound(10)));
    }

    #[test]
    fn cyclic_group_tables() {
        assert!(matches!(cyclic_group(0), Err(AlgebraError::ZeroOrder)));
        let z1 = cyclic_group(1).unwrap();
        assert_eq!(z1.order(), 1);
        let z2 = cyclic_group(2).unwrap();
        assert_eq!(z2.inv(1), 1);
        let z6 = cyclic_group(6).unwrap();
        assert_eq!(z6.mul(4, 5), 3);
        assert!(z6.check_axioms().is_pass());
        assert_eq!(z6.as_cyclic(), Some(6));
    }

    #[test]
    fn sl2_z3_is_not_cyclic_and_has_seven_classes() {
        let g = special_linear_group(3).unwrap();
        assert_eq!(g.as_cyclic(), None);
        assert_eq!(g.conjugacy_class_count(), 7);
    }
}

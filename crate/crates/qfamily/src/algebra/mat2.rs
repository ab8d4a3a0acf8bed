use std::fmt;

use crate::error::ParseError;

/// A 2x2 matrix with entries reduced modulo `m`.
///
/// Row-vector convention throughout: vectors act on the left, `v * M`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Mat2 {
    pub modulus: u32,
    pub a: u32,
    pub b: u32,
    pub c: u32,
    pub d: u32,
}

impl Mat2 {
    pub fn new(modulus: u32, a: u32, b: u32, c: u32, d: u32) -> Self {
        assert!(modulus > 0, "modulus must be positive");
        Mat2 {
            modulus,
            a: a % modulus,
            b: b % modulus,
            c: c % modulus,
            d: d % modulus,
        }
    }

    pub fn identity(modulus: u32) -> Self {
        Mat2::new(modulus, 1, 0, 0, 1)
    }

    pub fn det(&self) -> u32 {
        let m = self.modulus as u64;
        let ad = (self.a as u64) * (self.d as u64) % m;
        let bc = (self.b as u64) * (self.c as u64) % m;
        ((ad + m - bc) % m) as u32
    }

    /// Group membership for SL(2; Z_m): determinant 1.
    pub fn is_unimodular(&self) -> bool {
        self.det() % self.modulus == 1 % self.modulus
    }

    pub fn mul(&self, other: &Mat2) -> Mat2 {
        assert_eq!(self.modulus, other.modulus);
        let m = self.modulus as u64;
        let e = |x: u64| (x % m) as u32;
        Mat2 {
            modulus: self.modulus,
            a: e(self.a as u64 * other.a as u64 + self.b as u64 * other.c as u64),
            b: e(self.a as u64 * other.b as u64 + self.b as u64 * other.d as u64),
            c: e(self.c as u64 * other.a as u64 + self.d as u64 * other.c as u64),
            d: e(self.c as u64 * other.b as u64 + self.d as u64 * other.d as u64),
        }
    }

    pub fn sub(&self, other: &Mat2) -> Mat2 {
        assert_eq!(self.modulus, other.modulus);
        let m = self.modulus;
        Mat2 {
            modulus: m,
            a: (self.a + m - other.a) % m,
            b: (self.b + m - other.b) % m,
            c: (self.c + m - other.c) % m,
            d: (self.d + m - other.d) % m,
        }
    }

    /// Row vector times matrix: `(v0, v1) * M` mod m.
    pub fn apply_row(&self, v: (u32, u32)) -> (u32, u32) {
        let m = self.modulus as u64;
        (
            ((v.0 as u64 * self.a as u64 + v.1 as u64 * self.c as u64) % m) as u32,
            ((v.0 as u64 * self.b as u64 + v.1 as u64 * self.d as u64) % m) as u32,
        )
    }

    /// Parses the `[[a,b],[c,d]]` notation used in family files.
    pub fn parse(text: &str, modulus: u32) -> Result<Mat2, ParseError> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let inner = compact
            .strip_prefix("[[")
            .and_then(|s| s.strip_suffix("]]"))
            .ok_or_else(|| ParseError::new(format!("malformed matrix `{text}`")))?;
        let rows: Vec<&str> = inner.split("],[").collect();
        if rows.len() != 2 {
            return Err(ParseError::new(format!("malformed matrix `{text}`")));
        }
        let mut entries = [0u32; 4];
        for (i, row) in rows.iter().enumerate() {
            let cols: Vec<&str> = row.split(',').collect();
            if cols.len() != 2 {
                return Err(ParseError::new(format!("malformed matrix `{text}`")));
            }
            for (j, col) in cols.iter().enumerate() {
                let v: i64 = col
                    .parse()
                    .map_err(|_| ParseError::new(format!("bad matrix entry `{col}`")))?;
                entries[2 * i + j] = v.rem_euclid(modulus as i64) as u32;
            }
        }
        Ok(Mat2::new(
            modulus, entries[0], entries[1], entries[2], entries[3],
        ))
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{},{}],[{},{}]]", self.a, self.b, self.c, self.d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn det_and_unimodular() {
        let g = Mat2::new(3, 1, 1, 0, 1);
        assert_eq!(g.det(), 1);
        assert!(g.is_unimodular());
        let h = Mat2::new(3, 1, 1, 1, 1);
        assert_eq!(h.det(), 0);
        assert!(!h.is_unimodular());
    }

    #[test]
    fn row_action() {
        let g = Mat2::new(3, 1, 1, 0, 1);
        assert_eq!(g.apply_row((1, 0)), (1, 1));
        assert_eq!(g.apply_row((0, 1)), (0, 1));
    }

    #[test]
    fn parse_round_trip() {
        let g = Mat2::parse("[[1,2],[0,1]]", 3).unwrap();
        assert_eq!(g, Mat2::new(3, 1, 2, 0, 1));
        assert_eq!(Mat2::parse(&g.to_string(), 3).unwrap(), g);
        assert!(Mat2::parse("[[1,2],[0]]", 3).is_err());
        // negative entries reduce mod m
        assert_eq!(Mat2::parse("[[-1,0],[0,-1]]", 3).unwrap(), Mat2::new(3, 2, 0, 0, 2));
    }
}

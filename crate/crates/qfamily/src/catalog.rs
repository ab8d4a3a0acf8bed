//! Builtin families and cocycles, and the text formats for loading both
//! from files (`.gfam`, `.coc2`).

use crate::algebra::{
    cyclic_group, dihedral_quandle, gfamily_from_quandle, gfamily_linear,
    group_from_matrix_generators, special_linear_group, xset_self, xset_trivial, FiniteGroup,
    GFamily, Mat2, Quandle, XSet,
};
use crate::chains::{nosaka_theta, Cocycle2};
use crate::error::ParseError;

/// Resolves a builtin family name (`sl2z3-linear`, `dihedral-<m>`) or
/// parses a `.gfam` file's contents.
pub fn resolve_family(spec: &str, closure_bound: usize) -> Result<GFamily, ParseError> {
    match spec {
        "sl2z3-linear" => {
            let group = special_linear_group(3)
                .map_err(|e| ParseError::new(e.to_string()))?;
            gfamily_linear(group).map_err(|e| ParseError::new(e.to_string()))
        }
        name => {
            if let Some(m) = name.strip_prefix("dihedral-") {
                let m: usize = m
                    .parse()
                    .map_err(|_| ParseError::new(format!("bad dihedral order in `{name}`")))?;
                if m == 0 {
                    return Err(ParseError::new("dihedral order must be positive"));
                }
                return gfamily_from_quandle(&dihedral_quandle(m), 2)
                    .map_err(|e| ParseError::new(e.to_string()));
            }
            let text = std::fs::read_to_string(name).map_err(|e| {
                ParseError::new(format!("unknown family `{name}` and no such file: {e}"))
            })?;
            parse_gfamily(&text, closure_bound)
        }
    }
}

/// Parses the `.gfam` family format.
///
/// ```text
/// family linear            # x *^g y = x g + y (e - g) on (Z_m)^2
/// modulus 3
/// gen [[1,1],[0,1]]
/// gen [[1,0],[1,1]]
/// ```
/// ```text
/// family cyclic            # x *^i y = S_y^i(x) from a named quandle
/// period 2
/// quandle dihedral 3
/// ```
/// ```text
/// family explicit          # full operation table
/// group cyclic 2           # or: group matrix <m> with gen lines
/// xsize 3
/// op <x> <g> <y> <result>  # one line per entry, all required
/// ```
pub fn parse_gfamily(text: &str, closure_bound: usize) -> Result<GFamily, ParseError> {
    let mut kind: Option<String> = None;
    let mut modulus: Option<u32> = None;
    let mut period: Option<usize> = None;
    let mut quandle: Option<Quandle> = None;
    let mut group_spec: Option<(String, usize)> = None;
    let mut gens: Vec<String> = Vec::new();
    let mut xsize: Option<usize> = None;
    let mut ops: Vec<(usize, usize, usize, usize)> = Vec::new();

    for (lineno, raw) in text.lines().enumerate() {
        let lno = lineno + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        let arg = |n: usize| -> Result<&str, ParseError> {
            tokens
                .get(n)
                .copied()
                .ok_or_else(|| ParseError::at_line(lno, "missing argument"))
        };
        match tokens[0] {
            "family" => kind = Some(arg(1)?.to_string()),
            "modulus" => {
                modulus = Some(
                    arg(1)?
                        .parse()
                        .map_err(|_| ParseError::at_line(lno, "bad modulus"))?,
                )
            }
            "period" => {
                period = Some(
                    arg(1)?
                        .parse()
                        .map_err(|_| ParseError::at_line(lno, "bad period"))?,
                )
            }
            "quandle" => match arg(1)? {
                "dihedral" => {
                    let m: usize = arg(2)?
                        .parse()
                        .map_err(|_| ParseError::at_line(lno, "bad quandle order"))?;
                    quandle = Some(dihedral_quandle(m));
                }
                other => {
                    return Err(ParseError::at_line(lno, format!("unknown quandle `{other}`")))
                }
            },
            "group" => {
                let n: usize = arg(2)?
                    .parse()
                    .map_err(|_| ParseError::at_line(lno, "bad group parameter"))?;
                group_spec = Some((arg(1)?.to_string(), n));
            }
            "gen" => gens.push(arg(1)?.to_string()),
            "xsize" => {
                xsize = Some(
                    arg(1)?
                        .parse()
                        .map_err(|_| ParseError::at_line(lno, "bad xsize"))?,
                )
            }
            "op" => {
                let parse = |n: usize| -> Result<usize, ParseError> {
                    arg(n)?
                        .parse()
                        .map_err(|_| ParseError::at_line(lno, "bad op entry"))
                };
                ops.push((parse(1)?, parse(2)?, parse(3)?, parse(4)?));
            }
            other => return Err(ParseError::at_line(lno, format!("unrecognized record `{other}`"))),
        }
    }

    match kind.as_deref() {
        Some("linear") => {
            let m = modulus.ok_or_else(|| ParseError::new("linear family needs `modulus`"))?;
            let mats: Vec<Mat2> = gens
                .iter()
                .map(|g| Mat2::parse(g, m))
                .collect::<Result<_, _>>()?;
            let group = group_from_matrix_generators(m, &mats, closure_bound)
                .map_err(|e| ParseError::new(e.to_string()))?;
            gfamily_linear(group).map_err(|e| ParseError::new(e.to_string()))
        }
        Some("cyclic") => {
            let m = period.ok_or_else(|| ParseError::new("cyclic family needs `period`"))?;
            let q = quandle.ok_or_else(|| ParseError::new("cyclic family needs `quandle`"))?;
            gfamily_from_quandle(&q, m).map_err(|e| ParseError::new(e.to_string()))
        }
        Some("explicit") => {
            let group = build_group(group_spec, &gens, closure_bound)?;
            let nx = xsize.ok_or_else(|| ParseError::new("explicit family needs `xsize`"))?;
            let order = group.order();
            let mut table = vec![usize::MAX; nx * order * nx];
            for (x, g, y, r) in ops {
                if x >= nx || g >= order || y >= nx || r >= nx {
                    return Err(ParseError::new(format!(
                        "op entry ({x}, {g}, {y}) -> {r} out of range"
                    )));
                }
                table[(x * order + g) * nx + y] = r;
            }
            if let Some(missing) = table.iter().position(|&v| v == usize::MAX) {
                let x = missing / (order * nx);
                let g = missing / nx % order;
                let y = missing % nx;
                return Err(ParseError::new(format!(
                    "incomplete op table: missing ({x}, {g}, {y})"
                )));
            }
            Ok(GFamily::from_table(nx, group, table))
        }
        Some(other) => Err(ParseError::new(format!("unknown family kind `{other}`"))),
        None => Err(ParseError::new("missing `family` record")),
    }
}

fn build_group(
    spec: Option<(String, usize)>,
    gens: &[String],
    closure_bound: usize,
) -> Result<FiniteGroup, ParseError> {
    match spec {
        Some((kind, n)) if kind == "cyclic" => {
            cyclic_group(n).map_err(|e| ParseError::new(e.to_string()))
        }
        Some((kind, n)) if kind == "matrix" => {
            let m = n as u32;
            let mats: Vec<Mat2> = gens
                .iter()
                .map(|g| Mat2::parse(g, m))
                .collect::<Result<_, _>>()?;
            group_from_matrix_generators(m, &mats, closure_bound)
                .map_err(|e| ParseError::new(e.to_string()))
        }
        Some((kind, _)) => Err(ParseError::new(format!("unknown group kind `{kind}`"))),
        None => Err(ParseError::new("explicit family needs `group`")),
    }
}

/// Resolves a builtin X-set name: `trivial` or `self`.
pub fn resolve_xset(name: &str, f: &GFamily) -> Result<XSet, ParseError> {
    match name {
        "trivial" => Ok(xset_trivial(f)),
        "self" => Ok(xset_self(f)),
        other => Err(ParseError::new(format!("unknown X-set `{other}`"))),
    }
}

/// Resolves a builtin cocycle name (`nosaka-sl2z3`, `zero`) or loads a
/// `.coc2` table.
pub fn resolve_cocycle(
    spec: &str,
    f: &GFamily,
    ys: &XSet,
    p: u64,
) -> Result<Cocycle2, ParseError> {
    match spec {
        "nosaka-sl2z3" => nosaka_theta(f, ys).map_err(|e| ParseError::new(e.to_string())),
        "zero" => Ok(Cocycle2::zero(p, ys, f)),
        name => {
            let text = std::fs::read_to_string(name).map_err(|e| {
                ParseError::new(format!("unknown cocycle `{name}` and no such file: {e}"))
            })?;
            let theta = Cocycle2::from_text(&text)?;
            if theta.y_size() != ys.y_size() || theta.q_size() != f.q_size() {
                return Err(ParseError::new(format!(
                    "cocycle table is {}x{}^2 but the family needs {}x{}^2",
                    theta.y_size(),
                    theta.q_size(),
                    ys.y_size(),
                    f.q_size()
                )));
            }
            Ok(theta)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::DEFAULT_CLOSURE_BOUND;

    #[test]
    fn builtin_families() {
        let f = resolve_family("sl2z3-linear", DEFAULT_CLOSURE_BOUND).unwrap();
        assert_eq!(f.x_size(), 9);
        assert_eq!(f.group().order(), 24);
        let d = resolve_family("dihedral-5", DEFAULT_CLOSURE_BOUND).unwrap();
        assert_eq!(d.x_size(), 5);
        assert_eq!(d.group().order(), 2);
        assert!(resolve_family("no-such-family", DEFAULT_CLOSURE_BOUND).is_err());
    }

    #[test]
    fn gfam_linear_round_trip() {
        let text = "\
family linear
modulus 3
gen [[1,1],[0,1]]
gen [[1,0],[1,1]]
";
        let f = parse_gfamily(text, DEFAULT_CLOSURE_BOUND).unwrap();
        assert_eq!(f.q_size(), 216);
        assert!(f.check_axioms().is_pass());
    }

    #[test]
    fn gfam_cyclic_and_explicit() {
        let cyclic = "\
family cyclic
period 2
quandle dihedral 3
";
        let f = parse_gfamily(cyclic, DEFAULT_CLOSURE_BOUND).unwrap();
        assert!(f.check_axioms().is_pass());

        // the same family written as an explicit table
        let mut explicit = String::from("family explicit\ngroup cyclic 2\nxsize 3\n");
        for x in 0..3 {
            for g in 0..2 {
                for y in 0..3 {
                    explicit.push_str(&format!("op {x} {g} {y} {}\n", f.op(x, g, y)));
                }
            }
        }
        let g = parse_gfamily(&explicit, DEFAULT_CLOSURE_BOUND).unwrap();
        assert!(g.check_axioms().is_pass());

        // a mutated entry must fail the axiom check with a witness
        let mutated = explicit.replace("op 0 1 2 1", "op 0 1 2 0");
        assert_ne!(mutated, explicit, "mutation target must exist");
        let bad = parse_gfamily(&mutated, DEFAULT_CLOSURE_BOUND).unwrap();
        assert!(!bad.check_axioms().is_pass());
    }

    #[test]
    fn incomplete_table_rejected() {
        let text = "family explicit\ngroup cyclic 1\nxsize 2\nop 0 0 0 0\n";
        assert!(parse_gfamily(text, DEFAULT_CLOSURE_BOUND)
            .unwrap_err()
            .message
            .contains("incomplete"));
    }
}

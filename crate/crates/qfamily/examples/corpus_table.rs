//! Compute the conjugacy-mode invariant for every bundled diagram and
//! check the files' expected values, like `qf table` does.

use qfamily::algebra::{gfamily_linear, special_linear_group, xset_trivial};
use qfamily::chains::nosaka_theta;
use qfamily::coloring::GroupMode;
use qfamily::diagram::parse_diagram;
use qfamily::invariants::phi;

fn main() {
    let family = gfamily_linear(special_linear_group(3).unwrap()).unwrap();
    let ys = xset_trivial(&family);
    let theta = nosaka_theta(&family, &ys).unwrap();

    let root = concat!(env!("CARGO_MANIFEST_DIR"), "/../../corpus");
    let mut files = Vec::new();
    for dir in [root.to_string(), format!("{root}/moves")] {
        for entry in std::fs::read_dir(dir).unwrap() {
            let path = entry.unwrap().path();
            if path.extension().is_some_and(|e| e == "hkd") {
                files.push(path);
            }
        }
    }
    files.sort();

    let mut mismatches = 0;
    for path in files {
        let d = parse_diagram(&std::fs::read_to_string(&path).unwrap()).unwrap();
        let value = phi(&d, &family, &ys, &theta, GroupMode::ByConj).to_string();
        let name = d
            .name()
            .map(str::to_string)
            .unwrap_or_else(|| path.file_stem().unwrap().to_string_lossy().into_owned());
        let status = match d.expect() {
            None => "-",
            Some(e) if e == value => "ok",
            Some(_) => {
                mismatches += 1;
                "MISMATCH"
            }
        };
        println!("{name:8} {value}  {status}");
    }
    std::process::exit(if mismatches == 0 { 0 } else { 1 });
}

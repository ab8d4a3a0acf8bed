//! Mirror behavior: the invariant of the mirror image is the elementwise
//! negation, so any diagram whose value is not fixed by negation is
//! chiral. Runs over the bundled corpus and reports which values are
//! symmetric.

use qfamily::algebra::{gfamily_linear, special_linear_group, xset_trivial};
use qfamily::chains::nosaka_theta;
use qfamily::coloring::GroupMode;
use qfamily::diagram::parse_diagram;
use qfamily::invariants::{negate, phi};

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

    for path in files {
        let d = parse_diagram(&std::fs::read_to_string(&path).unwrap()).unwrap();
        let name = d
            .name()
            .map(str::to_string)
            .unwrap_or_else(|| path.file_stem().unwrap().to_string_lossy().into_owned());
        let value = phi(&d, &family, &ys, &theta, GroupMode::ByConj);
        let mirrored = phi(&d.mirror(), &family, &ys, &theta, GroupMode::ByConj);
        assert_eq!(mirrored, negate(&value), "mirror antisymmetry violated");
        let verdict = if negate(&value) == value {
            "value symmetric under negation; chirality not detected"
        } else {
            "value changes under negation: CHIRAL"
        };
        println!("{name:8} {value}  ({verdict})");
    }
}

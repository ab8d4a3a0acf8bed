//! Color the bundled theta-curve diagram and compute its invariant in all
//! three modes, together with the coloring census.

use qfamily::algebra::{gfamily_linear, special_linear_group, xset_trivial};
use qfamily::chains::nosaka_theta;
use qfamily::coloring::{count_colorings, enumerate_homs, GroupMode};
use qfamily::diagram::parse_diagram;
use qfamily::invariants::{col_counts, phi};

fn main() {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/../../corpus/0_1.hkd");
    let d = parse_diagram(&std::fs::read_to_string(path).unwrap()).unwrap();
    println!(
        "diagram 0_1: {} vertices, {} crossings, {} arcs, {} regions",
        d.vertex_count(),
        d.crossing_count(),
        d.arcs().len(),
        d.regions().len()
    );

    let family = gfamily_linear(special_linear_group(3).unwrap()).unwrap();
    let ys = xset_trivial(&family);
    let theta = nosaka_theta(&family, &ys).unwrap();

    println!("homomorphisms: {}", enumerate_homs(&d, family.group()).len());
    println!("colorings:     {}", count_colorings(&d, &family, &ys));
    println!("census (hom):  {}", col_counts(&d, &family, GroupMode::ByHom));
    println!("census (conj): {}", col_counts(&d, &family, GroupMode::ByConj));
    for (label, mode) in [
        ("plain", GroupMode::Plain),
        ("hom  ", GroupMode::ByHom),
        ("conj ", GroupMode::ByConj),
    ] {
        println!("phi {label}: {}", phi(&d, &family, &ys, &theta, mode));
    }
}

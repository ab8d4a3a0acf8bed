//! Build the linear G-family on (Z_3)^2 over SL(2; Z_3) and run every
//! exhaustive axiom check, reporting the scale of each sweep.

use qfamily::algebra::{
    associated_quandle, gfamily_linear, special_linear_group, xset_self, xset_trivial,
};

fn main() {
    let group = special_linear_group(3).expect("closure of the two transvections");
    println!("group: order {} from 2 generators", group.order());
    println!("  axioms: {}", group.check_axioms());

    let family = gfamily_linear(group).expect("matrix realization present");
    let (nx, ng) = (family.x_size(), family.group().order());
    println!(
        "family: |X| = {nx}, |G| = {ng} ({} operation-table entries)",
        nx * ng * nx
    );
    println!(
        "  axioms ({} distributivity instances): {}",
        nx * nx * nx * ng * ng,
        family.check_axioms()
    );

    let quandle = associated_quandle(&family);
    let n = quandle.size();
    println!("associated quandle: {n} elements");
    println!(
        "  axioms ({} distributivity instances): {}",
        n * n * n,
        quandle.check_axioms()
    );

    for (name, xs) in [("trivial", xset_trivial(&family)), ("self", xset_self(&family))] {
        println!("x-set {name}: {}", xs.check_axioms(&family));
    }
}

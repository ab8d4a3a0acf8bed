//! Verify the builtin 2-cocycle on the SL(2; Z_3) family, then corrupt a
//! single table entry and watch the checker locate a witness.

use qfamily::algebra::{gfamily_linear, special_linear_group, xset_trivial};
use qfamily::chains::{check_cocycle2, nosaka_theta};

fn main() {
    let family = gfamily_linear(special_linear_group(3).unwrap()).unwrap();
    let ys = xset_trivial(&family);
    let theta = nosaka_theta(&family, &ys).unwrap();

    let nq = family.q_size();
    println!(
        "verifying nosaka-sl2z3 over {} degree-3 generators and the degeneracy families",
        nq * nq * nq
    );
    println!("  {}", check_cocycle2(&theta, &family, &ys));

    let mut corrupted = theta.clone();
    let old = corrupted.eval(0, 1, 2);
    corrupted.set(0, 1, 2, (old + 1) % 3);
    println!("after corrupting one entry:");
    println!("  {}", check_cocycle2(&corrupted, &family, &ys));
}

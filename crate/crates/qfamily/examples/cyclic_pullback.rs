//! The cyclic-family complex on Y x X^n: solve for its 2-cocycles over a
//! Z_2-family, pull them back through g_2, and confirm the round trip.

use qfamily::algebra::{dihedral_quandle, gfamily_from_quandle, xset_trivial};
use qfamily::chains::{
    chain_map_f, chain_map_g, check_cocycle2, pullback_cocycle, solve_cocycles2,
    solve_icocycles2, Chain, IChain, DEFAULT_SOLVE_BOUND,
};

fn main() {
    let family = gfamily_from_quandle(&dihedral_quandle(3), 2).unwrap();
    let ys = xset_trivial(&family);
    println!(
        "Z_2-family on the dihedral quandle R_3: |X| = {}, |Q| = {}",
        family.x_size(),
        family.q_size()
    );

    // g_2(f_2(-)) is the identity on cyclic-complex generators
    let mut checked = 0;
    for x1 in 0..family.x_size() {
        for x2 in 0..family.x_size() {
            let gen = IChain::generator(2, vec![0, x1, x2]);
            let image = chain_map_f(&gen, &family).unwrap();
            assert_eq!(chain_map_g(&image, &family, &ys).unwrap(), gen);
            checked += 1;
        }
    }
    println!("g2 . f2 = id on {checked} generators");

    for p in [2u64, 3] {
        let cyclic_basis = solve_icocycles2(&family, &ys, p, DEFAULT_SOLVE_BOUND).unwrap();
        let direct_basis = solve_cocycles2(&family, &ys, p, DEFAULT_SOLVE_BOUND).unwrap();
        println!(
            "mod {p}: cyclic-complex solution space has dimension {}, direct space {}",
            cyclic_basis.len(),
            direct_basis.len()
        );
        for theta_i in &cyclic_basis {
            let theta = pullback_cocycle(theta_i, &family, &ys).unwrap();
            assert!(check_cocycle2(&theta, &family, &ys).is_pass());
            // theta is insensitive to the f2 . g2 round trip
            for q1 in 0..family.q_size() {
                for q2 in 0..family.q_size() {
                    let gen = Chain::generator(2, vec![0, q1, q2]);
                    let round =
                        chain_map_f(&chain_map_g(&gen, &family, &ys).unwrap(), &family).unwrap();
                    assert_eq!(theta.eval_chain(&round), theta.eval_chain(&gen));
                }
            }
        }
        println!("  all pullbacks verified");
    }
}

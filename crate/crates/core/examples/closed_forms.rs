//! Closed-form characteristics and their direct counterparts.
//!
//! cargo run --release --example closed_forms

use equihom::complex::{matching_complex, pcycle_complex};
use equihom::formulas::{
    bouc_homology, carre_form, cycle_complex_char, direct_d_table, euler_poincare_char,
    inflation_block, odd_parts_top, top_conjecture_value, vanishing_floor,
};
use equihom::homology::{equivariant_decomposition, HomologyOptions};

fn main() {
    println!("e_1[f_5 - h_5] = {}", inflation_block(1, 5).unwrap());
    println!(
        "Euler-Poincaré, p=3 n=7: {}",
        euler_poincare_char(3, 7).unwrap()
    );
    println!("vanishing floor p=3 n=13: {}", vanishing_floor(3, 13));

    for k in 1..=4 {
        println!(
            "k = {k}: odd parts {}  |  top value {}  |  carre {}",
            odd_parts_top(k),
            top_conjecture_value(k, 3).unwrap(),
            carre_form(k, 3).unwrap()
        );
    }

    // M_2(2k+1) against the self-conjugate formula
    for k in 1..=3 {
        let n = 2 * k + 1;
        let d = equivariant_decomposition(&matching_complex(2, n).unwrap()).unwrap();
        println!(
            "M_2({n}) top: {}  vs  {}",
            d.ch(k as i64 - 1),
            bouc_homology(n, k)
        );
    }

    let opts = HomologyOptions::default();
    for n in 5..=7 {
        let d = direct_d_table(n, 5, 0, &opts).unwrap();
        let c = pcycle_complex(5, n).unwrap();
        let direct = equivariant_decomposition(&c).unwrap().ch(c.dim());
        println!(
            "C_5({n}): formula {}  direct {}",
            cycle_complex_char(n, 5, &d).unwrap(),
            direct
        );
    }
}

//! Schur-basis arithmetic: products, plethysm and the γ operator.
//!
//! cargo run --example symmetric_functions

use equihom::symfunc::SymmetricFunction;

fn main() {
    let h = SymmetricFunction::from_h;
    let e = SymmetricFunction::from_e;

    println!("h2·h1      = {}", h(2).multiply(&h(1)));
    println!("e2[h2]     = {}", e(2).plethysm(&h(2)).unwrap());
    println!("h3[h2]     = {}", h(3).plethysm(&h(2)).unwrap());
    println!("e2[h3]     = {}", e(2).plethysm(&h(3)).unwrap());

    let f = e(3).plethysm(&h(3)).unwrap();
    println!("e3[h3]|_3  = {}", f.restrict_length(3));
    let g = h(3).plethysm(&h(2)).unwrap().gamma(3).unwrap();
    println!("γ3(h3[h2]) = {}", g);

    let parsed: SymmetricFunction = "s[5,1,1] + s[3,3,1]".parse().unwrap();
    println!("dimension of {parsed} is {}", parsed.dimension());
    println!("{}", serde_json::to_string_pretty(&parsed).unwrap());
}

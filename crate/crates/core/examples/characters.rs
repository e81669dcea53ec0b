//! Character tables of S_n and the Sylow normalizer character.
//!
//! cargo run --example characters -- 5

use equihom::characters::{normalizer_character, CharacterTable};
use equihom::formulas::{fp, fp_via_maj};

fn main() {
    let n: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(5);
    let table = CharacterTable::get(n);
    let parts = table.partitions();
    print!("{:>14}", "");
    for mu in parts {
        print!("{:>12}", mu.to_string());
    }
    println!();
    for lambda in parts {
        print!("{:>14}", lambda.to_string());
        for mu in parts {
            print!("{:>12}", table.value(lambda, mu));
        }
        println!();
    }

    for p in [2, 3, 5, 7] {
        let chi = normalizer_character(p).unwrap();
        println!("p = {p}: ch 1↑ = {}", chi.frobenius_ch());
        assert_eq!(fp(p).unwrap(), fp_via_maj(p).unwrap());
    }
}

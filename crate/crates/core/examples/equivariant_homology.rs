//! Specht decomposition of the homology of M_p(n).
//!
//! cargo run --release --example equivariant_homology -- 3 8

use equihom::complex::matching_complex;
use equihom::homology::{equivariant_decomposition, homology_representatives};

fn main() {
    let mut args = std::env::args()
        .skip(1)
        .map(|s| s.parse::<usize>().unwrap());
    let p = args.next().unwrap_or(3);
    let n = args.next().unwrap_or(8);
    let c = matching_complex(p, n).unwrap();
    let d = equivariant_decomposition(&c).unwrap();
    print!("{}", d.to_text());
    println!("{}", d.to_json());

    if c.face_count() < 500 {
        for deg in &d.degrees {
            let reps = homology_representatives(&c, deg.degree);
            assert_eq!(reps.len(), deg.betti);
        }
        println!("representative counts agree with the Betti numbers");
    }
}

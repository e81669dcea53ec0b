//! Reduced Betti numbers of M_3(n) by exact sparse elimination.
//!
//! cargo run --release --example betti_numbers -- 11

use std::time::Instant;

use equihom::complex::matching_complex;
use equihom::homology::{betti_with, HomologyOptions};

fn main() {
    let top: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(10);
    let opts =
        HomologyOptions::with_threads(std::thread::available_parallelism().map_or(1, |n| n.get()));
    for n in 3..=top {
        let c = matching_complex(3, n).unwrap();
        let t = Instant::now();
        let b = betti_with(&c, &opts).unwrap();
        println!(
            "M_3({n:>2})  f = {:?}  b~ = {:?}  ({:.2?})",
            c.f_vector(),
            b,
            t.elapsed()
        );
    }
}

//! Top homology of the Quillen complex against the p-cycle complex.
//!
//! cargo run --release --example quillen_vs_cycle

use equihom::complex::{matching_complex, pcycle_complex, quillen_complex};
use equihom::homology::equivariant_decomposition;

fn main() {
    for n in 4..=8 {
        let q = quillen_complex(3, n, false).unwrap();
        let m = matching_complex(3, n).unwrap();
        let dq = equivariant_decomposition(&q).unwrap();
        let dm = equivariant_decomposition(&m).unwrap();
        println!(
            "n = {n}: {} has f = {:?}; top {} (M_3: {})",
            q.name(),
            q.f_vector(),
            dq.ch(q.dim()),
            dm.ch(m.dim())
        );
    }
    for n in [5, 6, 7] {
        let q = quillen_complex(5, n, false).unwrap();
        let c = pcycle_complex(5, n).unwrap();
        let same = equivariant_decomposition(&q)
            .unwrap()
            .degrees
            .iter()
            .map(|d| d.ch.clone())
            .collect::<Vec<_>>()
            == equivariant_decomposition(&c)
                .unwrap()
                .degrees
                .iter()
                .map(|d| d.ch.clone())
                .collect::<Vec<_>>();
        println!(
            "QA_5(S_{n}) vs C_5({n}): {}",
            if same { "same homology" } else { "different" }
        );
    }
}

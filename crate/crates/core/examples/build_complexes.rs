//! Matching, p-cycle and Quillen complexes.
//!
//! cargo run --example build_complexes

use equihom::complex::{
    barycentric_subdivision, link, matching_complex, pcycle_complex, quillen_complex,
    SimplicialComplex,
};

fn show(c: &SimplicialComplex) {
    println!(
        "{:<14} dim {:>2}  f = {:?}",
        c.name(),
        c.dim(),
        c.f_vector()
    );
}

fn main() {
    for n in 4..=9 {
        show(&matching_complex(3, n).unwrap());
    }
    show(&pcycle_complex(5, 7).unwrap());
    show(&quillen_complex(3, 7, false).unwrap());
    show(&quillen_complex(5, 6, false).unwrap());

    let m = matching_complex(2, 5).unwrap();
    show(&barycentric_subdivision(&m));
    show(&link(&m, &[0]).unwrap());

    let text = matching_complex(3, 6).unwrap().to_facet_text();
    println!("facet list of M_3(6):\n{text}");
}

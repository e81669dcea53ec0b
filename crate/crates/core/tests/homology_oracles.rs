use equihom::complex::{matching_complex, pcycle_complex, quillen_complex, SimplicialComplex};
use equihom::homology::{
    betti, boundary_matrix, chain_character, chain_class_function, equivariant_decomposition,
    equivariant_decomposition_via_representatives, homology_representatives, is_cycle,
    reduced_euler_characteristic,
};
use num_rational::BigRational;
use num_traits::{Signed, Zero};

/// Plain Gaussian elimination over the rationals.
fn dense_rank(nrows: usize, ncols: usize, triples: impl Iterator<Item = (u32, u32, i64)>) -> usize {
    let mut m = vec![vec![BigRational::zero(); ncols]; nrows];
    for (r, c, v) in triples {
        m[r as usize][c as usize] = BigRational::from_integer(v.into());
    }
    let mut rank = 0;
    for col in 0..ncols {
        let Some(piv) = (rank..nrows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, piv);
        for r in 0..nrows {
            if r != rank && !m[r][col].is_zero() {
                let f = &m[r][col] / &m[rank][col];
                let pivot = m[rank].clone();
                for (x, y) in m[r][col..].iter_mut().zip(&pivot[col..]) {
                    *x -= &f * y;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn dense_betti(c: &SimplicialComplex) -> Vec<usize> {
    let f = c.f_vector();
    let rank = |i: i64| {
        if i < 0 || i as usize >= f.len() {
            return 0;
        }
        let b = boundary_matrix(c, i);
        dense_rank(b.nrows, b.ncols, b.triples())
    };
    (0..f.len())
        .map(|k| {
            let i = k as i64 - 1;
            f[k] - rank(i) - rank(i + 1)
        })
        .collect()
}

fn small_complexes() -> Vec<SimplicialComplex> {
    let mut v = Vec::new();
    for n in 0..=7 {
        v.push(matching_complex(2, n).unwrap());
    }
    for n in 3..=7 {
        v.push(matching_complex(3, n).unwrap());
    }
    v.push(pcycle_complex(5, 5).unwrap());
    v.push(pcycle_complex(5, 6).unwrap());
    v.push(quillen_complex(3, 6, false).unwrap());
    v
}

#[test]
fn sparse_betti_matches_dense_elimination() {
    for c in small_complexes() {
        assert_eq!(betti(&c), dense_betti(&c), "{}", c.name());
    }
}

#[test]
fn euler_characteristic_from_betti() {
    for c in small_complexes() {
        let alt: i64 = betti(&c)
            .iter()
            .enumerate()
            .map(|(k, &b)| if k % 2 == 1 { b as i64 } else { -(b as i64) })
            .sum();
        assert_eq!(alt, reduced_euler_characteristic(&c), "{}", c.name());
    }
}

#[test]
fn chain_character_matches_plethysm() {
    for p in [2, 3] {
        for n in 0..=8 {
            let c = matching_complex(p, n).unwrap();
            for r in 0..=n / p {
                let observed = chain_class_function(&c, r as i64 - 1)
                    .unwrap()
                    .frobenius_ch();
                let expected = chain_character(p, n, r).unwrap();
                assert_eq!(observed, expected, "p = {p}, n = {n}, r = {r}");
            }
        }
    }
}

#[test]
fn both_trace_routes_agree() {
    for c in [
        matching_complex(2, 4).unwrap(),
        matching_complex(2, 5).unwrap(),
        matching_complex(3, 6).unwrap(),
        matching_complex(3, 7).unwrap(),
        pcycle_complex(5, 6).unwrap(),
    ] {
        let a = equivariant_decomposition(&c).unwrap();
        let b = equivariant_decomposition_via_representatives(&c).unwrap();
        assert_eq!(a.to_json(), b.to_json(), "{}", c.name());
    }
}

#[test]
fn representatives_are_cycles() {
    let c = matching_complex(3, 7).unwrap();
    let reps = homology_representatives(&c, 1);
    assert_eq!(reps.len(), 36);
    assert!(reps.iter().all(|z| is_cycle(&c, 1, z)));
    assert!(reps
        .iter()
        .all(|z| z.values().any(|x| x.is_positive() || x.is_negative())));
}

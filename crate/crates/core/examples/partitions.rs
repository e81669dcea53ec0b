//! Partitions, hook lengths and major-index counts.
//!
//! cargo run --example partitions

use equihom::partition::{maj_count, partitions_of, Partition, PartitionFilter};

fn main() {
    let lambda: Partition = "5+3+1".parse().unwrap();
    println!(
        "λ = {lambda}, conjugate {}, durfee {}",
        lambda.conjugate(),
        lambda.durfee()
    );
    println!(
        "f^λ = {} by the hook length formula",
        lambda.hook_dimension()
    );
    for row in lambda.hook_lengths() {
        println!("  {row:?}");
    }

    let odd = partitions_of(
        10,
        PartitionFilter::default().exact_length(4).all_parts_odd(),
    );
    let odd: Vec<String> = odd.iter().map(ToString::to_string).collect();
    println!("partitions of 10 into 4 odd parts: {}", odd.join(", "));

    // M_{m,k,λ}: tableaux of shape λ with maj ≡ m (mod k)
    for shape in ["4+1", "3+2", "3+1+1"] {
        let l: Partition = shape.parse().unwrap();
        println!(
            "{l}: M_(0,4) = {}, M_(1,5) = {}",
            maj_count(0, 4, &l),
            maj_count(1, 5, &l)
        );
    }
}

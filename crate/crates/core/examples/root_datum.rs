//! Root data, Weyl groups and reduced words.
//!
//! `cargo run --example root_datum -- B2`

use ksbim::root_datum::{RootDatum, Weight, WeylGroup};

fn main() -> Result<(), ksbim::Error> {
    let label = std::env::args().nth(1).unwrap_or_else(|| "B2".to_string());
    let datum = RootDatum::from_type(&label)?;
    let group = WeylGroup::new(&datum)?;
    println!("{label}: rank {}, |W| = {}", datum.rank(), group.order());
    println!("cartan matrix: {:?}", datum.cartan().rows());

    println!("positive roots (fundamental-weight coordinates):");
    for root in datum.positive_roots() {
        println!("  {}  height {}", root.weight, root.height());
    }

    println!("elements in ShortLex order, with Bruhat cell characters:");
    for w in group.elements() {
        let chars: Vec<String> = group.cell_characters(w).iter().map(Weight::to_string).collect();
        println!("  {:<16} length {}  [{}]", w.to_string(), w.length(), chars.join(" "));
    }

    let w0 = group.longest();
    println!("reduced words of w0 = {w0}:");
    for word in group.reduced_words(w0) {
        let labels: Vec<String> = word.iter().map(|i| format!("s{}", i + 1)).collect();
        println!("  {}", labels.join(" "));
    }

    let lambda = Weight::new(vec![1; datum.rank()]);
    println!("dot action of w0 on {lambda}: {}", w0.dot_act(&lambda)?);
    Ok(())
}

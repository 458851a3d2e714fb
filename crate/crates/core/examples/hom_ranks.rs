//! Hom-space ranks: subsequence prediction, specialized commutants,
//! generated morphisms and twisted bimodules.

use ksbim::bimodule::BSWord;
use ksbim::homspace::{
    bs_square_idempotents, generate_hom, hom_rank_specialized, hom_to_twisted_rank, span_rank,
    specialized_rank, subsequence_products, DEFAULT_BUDGET,
};
use ksbim::root_datum::{RootDatum, WeylGroup};

fn main() -> Result<(), ksbim::Error> {
    let group = WeylGroup::new(&RootDatum::from_type("A2")?)?;
    let datum = group.datum();
    let pairs: [(&[usize], &[usize]); 3] = [(&[0], &[1]), (&[0, 1], &[1, 0]), (&[0, 1, 0], &[0, 1, 0])];
    for (x, y) in pairs {
        let x = BSWord::new(datum, x.to_vec())?;
        let y = BSWord::new(datum, y.to_vec())?;
        println!("subsequence products of {x}: {}", subsequence_products(&group, &x)?);
        let report = hom_rank_specialized(&group, &x, &y, 0, 3, DEFAULT_BUDGET)?;
        let nullities: Vec<usize> = report.trials.iter().map(|t| t.nullity).collect();
        println!("Hom(B{x}, B{y}): predicted {}, nullities {nullities:?}", report.predicted);
    }

    for w in group.elements() {
        println!("rank Hom(R, R_{w}) = {}", hom_to_twisted_rank(datum, w, 0)?);
    }

    let a1 = RootDatum::from_type("A1")?;
    let s = BSWord::new(&a1, vec![0])?;
    let ss = BSWord::new(&a1, vec![0, 0])?;
    let maps = generate_hom(&a1, &ss, &s, 4)?;
    println!("{} generated maps B(s,s) -> B(s) span rank {}", maps.len(), span_rank(&a1, &maps, 0)?);

    let (e, c) = bs_square_idempotents(&a1, 0)?;
    println!("B(s,s) splits with idempotents of ranks {} and {}", specialized_rank(&a1, &e, 0)?, specialized_rank(&a1, &c, 0)?);
    Ok(())
}

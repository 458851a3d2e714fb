//! The Frobenius object B_s: unit, counit, multiplication, comultiplication
//! and the identities they satisfy.

use ksbim::bimodule::{
    comult, counit, is_bimodule_map, morphism_compose, morphism_tensor, mult, unit, BSWord,
    BimoduleMorphism,
};
use ksbim::root_datum::RootDatum;

fn main() -> Result<(), ksbim::Error> {
    let datum = RootDatum::from_type("B2")?;
    for s in 0..datum.rank() {
        let id = BimoduleMorphism::identity(2, BSWord::new(&datum, vec![s])?);
        let (eta, eps, mu, delta) = (unit(&datum, s)?, counit(&datum, s)?, mult(&datum, s)?, comult(&datum, s)?);
        println!("s{}:", s + 1);
        for (name, f) in [("unit", &eta), ("counit", &eps), ("mult", &mu), ("comult", &delta)] {
            println!("  {name}: B{} -> B{}, bimodule map: {}", f.source(), f.target(), is_bimodule_map(&datum, f)?);
        }
        let counit_law = morphism_compose(&morphism_tensor(&datum, &eps, &id)?, &delta)?;
        let unit_law = morphism_compose(&mu, &morphism_tensor(&datum, &id, &eta)?)?;
        let frob_left = morphism_compose(&morphism_tensor(&datum, &id, &mu)?, &morphism_tensor(&datum, &delta, &id)?)?;
        let frob_mid = morphism_compose(&delta, &mu)?;
        println!("  (counit⊗id)∘comult = id: {}", counit_law.matrix().is_identity());
        println!("  mult∘(id⊗unit) = id: {}", unit_law.matrix().is_identity());
        println!("  (id⊗mult)∘(comult⊗id) = comult∘mult: {}", frob_left == frob_mid);
        let bubble = morphism_compose(&eps, &eta)?;
        println!("  counit∘unit = multiplication by {}", bubble.matrix().get(0, 0));
    }
    Ok(())
}

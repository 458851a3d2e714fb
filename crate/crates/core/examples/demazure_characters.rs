//! Demazure operators, induction and Weyl characters.

use ksbim::demazure::{demazure, demazure_word, induction, irr_character, weyl_dim, InductionMethod};
use ksbim::laurent::LaurentPoly;
use ksbim::root_datum::{RootDatum, Weight, WeylGroup};

fn main() -> Result<(), ksbim::Error> {
    let a1 = RootDatum::from_type("A1")?;
    for k in -3..=3 {
        let f = LaurentPoly::var_pow(1, 0, k);
        println!("Δ_s({f}) = {}", demazure(&a1, 0, &f)?);
    }

    let datum = RootDatum::from_type("A2")?;
    let group = WeylGroup::new(&datum)?;
    let f = LaurentPoly::parse("x1^2*x2^-1 + 3*x2", 2)?;
    println!("f = {f}");
    println!("Δ_1 Δ_2 f = {}", demazure_word(&datum, &[0, 1], &f)?);
    println!("Ind f (Demazure operators) = {}", induction(&group, &f, InductionMethod::Demazure)?);
    println!("Ind f (Weyl formula)       = {}", induction(&group, &f, InductionMethod::WeylFormula)?);

    for lambda in [vec![1, 0], vec![0, 1], vec![1, 1], vec![2, 1]] {
        let lambda = Weight::new(lambda);
        let chi = irr_character(&group, &lambda)?;
        println!("dim V{lambda} = {}: {chi}", weyl_dim(&group, &lambda)?);
    }
    Ok(())
}

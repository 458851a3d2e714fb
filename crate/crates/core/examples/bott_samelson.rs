//! Bott–Samelson bimodules as free left modules with a computed right action.

use ksbim::bimodule::{basis_label, right_mul, right_mul_matrix, BSElement, BSWord, TwistedBimodule};
use ksbim::laurent::LaurentPoly;
use ksbim::root_datum::{RootDatum, WeylGroup};

fn main() -> Result<(), ksbim::Error> {
    let datum = RootDatum::from_type("A2")?;
    let word = BSWord::new(&datum, vec![0, 1])?;
    println!("B{word} has left basis:");
    for i in 0..word.basis_size() {
        println!("  b{i} = {}", basis_label(&datum, &word, i));
    }

    let x1 = LaurentPoly::var_pow(2, 0, 1);
    println!("right multiplication by {x1}:\n{}", right_mul_matrix(&datum, &word, &x1)?);

    let b0 = BSElement::basis(2, word.clone(), 0);
    let r = LaurentPoly::parse("x1*x2 - x2^2", 2)?;
    let m = right_mul(&datum, &b0, &r)?;
    println!("b0 · ({r}) =");
    for (i, c) in m.coeffs().iter().enumerate() {
        if !c.is_zero() {
            println!("  ({c}) b{i}");
        }
    }

    let group = WeylGroup::new(&datum)?;
    let twisted = TwistedBimodule::new(group.from_word(&[0])?);
    println!("in R_s1: 1 · x1 = {}", twisted.right_mul(&LaurentPoly::one(2), &x1)?);
    Ok(())
}

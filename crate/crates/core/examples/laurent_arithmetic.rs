//! Exact Laurent polynomial arithmetic in the representation ring of a torus.

use ksbim::laurent::{LaurentPoly, SpecializationPoint};
use ksbim::root_datum::{RootDatum, WeylGroup};

fn main() -> Result<(), ksbim::Error> {
    let f = LaurentPoly::parse("x1^2*x2^-1 - 3/2*x2 + 1", 2)?;
    let g = LaurentPoly::parse("1 - x1^-2*x2", 2)?;
    let fg = f.try_mul(&g)?;
    println!("f = {f}\ng = {g}\nf·g = {fg}");
    println!("(f·g)/g = {}", fg.exact_divide(&g)?);
    match f.exact_divide(&g) {
        Ok(q) => println!("f/g = {q}"),
        Err(e) => println!("f/g: {e} [{}]", e.code()),
    }

    let group = WeylGroup::new(&RootDatum::from_type("A2")?)?;
    for w in group.elements() {
        println!("{w}: {}", f.weyl_act(w)?);
    }
    let p = SpecializationPoint::from_integers(&[2, 3])?;
    println!("f(2, 3) = {}", f.specialize(&p)?);
    println!("json: {}", serde_json::to_string(&f.to_json()).expect("serializable"));
    Ok(())
}

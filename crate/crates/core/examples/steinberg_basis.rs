//! Steinberg basis of R over R^W and expansion of a polynomial in it.

use ksbim::frobenius::{expand_in_steinberg, steinberg};
use ksbim::laurent::LaurentPoly;
use ksbim::root_datum::{RootDatum, WeylGroup};

fn main() -> Result<(), ksbim::Error> {
    for label in ["A1", "A2", "B2"] {
        let group = WeylGroup::new(&RootDatum::from_type(label)?)?;
        let sd = steinberg(&group)?;
        println!("{label}: Gram determinant {}", sd.det());
        for ((w, e), d) in sd.elements().iter().zip(sd.basis()).zip(sd.dual()) {
            println!("  e[{w}] = {e}    e*[{w}] = {d}");
        }
    }

    let group = WeylGroup::new(&RootDatum::from_type("A2")?)?;
    let sd = steinberg(&group)?;
    let f = LaurentPoly::parse("x1^2 - 2*x2^-1 + 1/2", 2)?;
    println!("expansion of {f}:");
    for (w, c) in sd.elements().iter().zip(expand_in_steinberg(&group, &f, &sd)?) {
        if !c.is_zero() {
            println!("  ({c}) · e[{w}]");
        }
    }
    Ok(())
}

//! Exact arithmetic in cyclotomic fields.

use supercharacters::{Cyclotomic, Rational};

fn main() -> supercharacters::Result<()> {
    let z3 = Cyclotomic::root(3, 1)?;
    let z3b = z3.conj();
    println!("ζ3 = {z3}");
    println!("ζ3 + ζ3⁻¹ = {}", &z3 + &z3b);
    println!("ζ3 · ζ3⁻¹ = {}", &z3 * &z3b);

    // sums of roots of unity collapse to rationals when they should
    let i = Cyclotomic::root(4, 1)?;
    let sum = &(&Cyclotomic::one() + &i) + &(&(&i * &i) + &(&i * &(&i * &i)));
    println!("1 + i + i² + i³ = {sum}");

    let z8 = Cyclotomic::root(8, 1)?;
    let sqrt2 = &z8 + &z8.conj();
    println!("ζ8 + ζ8⁻¹ = {sqrt2}, squared = {}", &sqrt2 * &sqrt2);
    println!("galois(3) sends it to {}", sqrt2.galois(3)?);

    let half = Rational::new(1.into(), 2.into());
    println!(
        "(ζ5 + 1)/2 = {}",
        (&Cyclotomic::root(5, 1)? + &Cyclotomic::one()).scale(&half)
    );
    Ok(())
}

//! Theories of A × B from theories of A and B.

use supercharacters::products::{direct_product, sring_dot_product, DirectProduct};
use supercharacters::sct::sct_to_sring;
use supercharacters::{enumerate_sup, CharacterTable, FiniteGroup};

fn main() -> supercharacters::Result<()> {
    let a = CharacterTable::shared(&FiniteGroup::symmetric(3)?)?;
    let b = CharacterTable::shared(&FiniteGroup::cyclic(2)?)?;
    let dp = DirectProduct::new(&a, &b)?;
    let all = enumerate_sup(dp.table())?;
    println!("S3 × C2 has {} theories", all.len());

    for c in enumerate_sup(&a)?.theories() {
        for d in enumerate_sup(&b)?.theories() {
            let e = direct_product(c, d, &dp)?;
            let dot = sring_dot_product(&sct_to_sring(c)?, &sct_to_sring(d)?)?;
            assert_eq!(dot, sct_to_sring(&e)?);
            println!("{} × {} -> {} superclasses", c.classes(), d.classes(), e.len());
        }
    }
    Ok(())
}

//! Supercharacter theories and central Schur rings determine each other.

use supercharacters::partition::Partition;
use supercharacters::schur::{check_schur, structure_constants};
use supercharacters::sct::{sct_to_sring, sring_to_sct};
use supercharacters::{enumerate_sup, CharacterTable, FiniteGroup};

fn main() -> supercharacters::Result<()> {
    let g = FiniteGroup::cyclic(6)?;
    let t = CharacterTable::shared(&g)?;

    for c in enumerate_sup(&t)?.theories() {
        let s = sct_to_sring(c)?;
        let back = sring_to_sct(&s, &t)?;
        assert_eq!(&back, c);
        let k = structure_constants(&s);
        println!("{}  central: {}  X = {}", s.blocks(), s.is_central(), back.chars());
        println!("    K1·K1 = {:?}", k[1][1]);
    }

    // a partition that is not closed under multiplication
    let bad = Partition::from_blocks(6, vec![vec![0], vec![1, 2], vec![3, 4, 5]])?;
    match check_schur(&g, &bad) {
        Ok(_) => println!("{bad} is a Schur ring"),
        Err(e) => println!("{bad} rejected: {e}"),
    }
    Ok(())
}

//! Superinduce a function from a subgroup and check reciprocity.

use supercharacters::sct::theory_m;
use supercharacters::superinduction::{check_reciprocity, superinduce, SuperclassFunction};
use supercharacters::{enumerate_sup, CharacterTable, Cyclotomic, FiniteGroup};

fn main() -> supercharacters::Result<()> {
    let g = FiniteGroup::symmetric(3)?;
    let t = CharacterTable::shared(&g)?;
    let s = (0..g.order()).find(|&x| g.element_order(x) == 2).unwrap();
    let h = g.subgroup_closure(&[s]);
    let phi = vec![Cyclotomic::one(); h.order()];

    // with the finest theory this is ordinary induction of the trivial character
    let m = theory_m(&t);
    let f = superinduce(&m, &h, &phi)?;
    let values: Vec<String> = f.values().iter().map(ToString::to_string).collect();
    println!("1 induced from <{s}> on classes: {}", values.join(", "));

    for c in enumerate_sup(&t)?.theories() {
        let f = superinduce(c, &h, &phi)?;
        for x in 0..c.len() {
            let chi = SuperclassFunction::supercharacter(c, x);
            assert!(check_reciprocity(c, &h, &phi, &chi)?);
            println!("K = {}  <φ^G, χ_{x}> = {}", c.classes(), f.inner_product(&chi)?);
        }
    }
    Ok(())
}

//! Build supercharacter theories of S4 from theories of a normal subgroup and its quotient.

use supercharacters::products::star_product;
use supercharacters::{enumerate_sup, CharacterTable, FiniteGroup, NormalContext};

fn main() -> supercharacters::Result<()> {
    let g = FiniteGroup::symmetric(4)?;
    let t = CharacterTable::shared(&g)?;

    for n in g
        .normal_subgroups()
        .iter()
        .filter(|n| n.order() > 1 && n.order() < g.order())
    {
        let ctx = NormalContext::new(&t, n)?;
        let c = ctx.conj_theory()?;
        println!(
            "N of order {}, G/N of order {}",
            n.order(),
            ctx.quotient().cosets().len()
        );
        for d in enumerate_sup(ctx.quotient_table())?.theories() {
            let e = star_product(&c, d, &ctx)?;
            println!(
                "  D = {}  ->  C*D has {} superclasses: {}",
                d.classes(),
                e.len(),
                e.classes()
            );
            assert_eq!(ctx.restrict(&e)?, c);
            assert_eq!(&ctx.deflate(&e)?, d);
        }
    }
    Ok(())
}

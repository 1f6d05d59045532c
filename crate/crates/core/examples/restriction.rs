//! Restrict a theory to a normal subgroup and deflate it to the quotient.

use supercharacters::products::star_product;
use supercharacters::sct::{is_sct_normal, sct_join};
use supercharacters::{enumerate_sup, CharacterTable, FiniteGroup, NormalContext};

fn main() -> supercharacters::Result<()> {
    let g = FiniteGroup::quaternion();
    let t = CharacterTable::shared(&g)?;
    let lattice = enumerate_sup(&t)?;

    for n in g.normal_subgroups().into_iter().filter(|n| n.order() > 1) {
        let ctx = NormalContext::new(&t, &n)?;
        for c in lattice.theories().iter().filter(|c| is_sct_normal(c, &n)) {
            let r = ctx.restrict(c)?;
            let d = ctx.deflate(c)?;
            let rebuilt = star_product(&r, &d, &ctx)?;
            assert_eq!(rebuilt, sct_join(c, &ctx.m_ng()?)?);
            println!(
                "|N| = {}  K = {}  K_N = {}  K^(G/N) = {}",
                n.order(),
                c.classes(),
                r.classes(),
                d.classes()
            );
        }
    }
    Ok(())
}

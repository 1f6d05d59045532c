//! Wedge products along a chain 1 < N < M < G of normal subgroups.

use supercharacters::products::{wedge_product, wedge_recognize, WedgeContext};
use supercharacters::{enumerate_sup, CharacterTable, Error, FiniteGroup};

fn main() -> supercharacters::Result<()> {
    let g = FiniteGroup::dihedral(4)?;
    let t = CharacterTable::shared(&g)?;
    let normals = g.normal_subgroups();

    for n in normals.iter().filter(|n| n.order() > 1) {
        for m in normals
            .iter()
            .filter(|m| m.order() > n.order() && m.order() < g.order() && n.is_subset_of(m))
        {
            let w = WedgeContext::new(&t, n, m)?;
            println!("|N| = {}, |M| = {}", n.order(), m.order());
            let cs = enumerate_sup(w.upper().normal_table())?;
            let ds = enumerate_sup(w.lower().quotient_table())?;
            for c in cs.theories() {
                if !w.upper().is_g_invariant(c)? {
                    continue;
                }
                for d in ds.theories() {
                    match wedge_product(c, d, &w) {
                        Ok(e) => {
                            let recognized = wedge_recognize(&e, &w)?.is_some();
                            println!(
                                "  {} ∧ {} = {} (recognized: {recognized})",
                                c.classes(),
                                d.classes(),
                                e.classes()
                            );
                        }
                        Err(Error::Precondition(why)) => println!("  {} ∧ {}: {why}", c.classes(), d.classes()),
                        Err(e) => return Err(e),
                    }
                }
            }
        }
    }
    Ok(())
}

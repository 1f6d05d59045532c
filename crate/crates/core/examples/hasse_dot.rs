//! Write the Hasse diagram of the lattice in Graphviz format.
//!
//! ```bash
//! cargo run --example hasse_dot -- cyclic:8 | dot -Tsvg > c8.svg
//! ```

use supercharacters::{enumerate_sup, CharacterTable, GroupSpec};

fn main() -> supercharacters::Result<()> {
    let spec = std::env::args().nth(1).unwrap_or_else(|| "cyclic:8".into());
    let g = GroupSpec::parse_shorthand(&spec)?.build()?;
    let lattice = enumerate_sup(&CharacterTable::shared(&g)?)?;
    print!("{}", lattice.to_dot());
    Ok(())
}

//! Enumerate every supercharacter theory of a group.
//!
//! ```bash
//! cargo run --release --example enumerate_lattice -- dihedral:4
//! ```

use supercharacters::{enumerate_sup, CharacterTable, GroupSpec};

fn main() -> supercharacters::Result<()> {
    let spec = std::env::args().nth(1).unwrap_or_else(|| "dihedral:4".into());
    let g = GroupSpec::parse_shorthand(&spec)?.build()?;
    let t = CharacterTable::shared(&g)?;
    let lattice = enumerate_sup(&t)?;

    println!("{spec} has {} supercharacter theories", lattice.len());
    for (i, c) in lattice.theories().iter().enumerate() {
        println!("{i:>3}: K = {}  X = {}", c.classes(), c.chars());
    }
    println!("{} covering pairs", lattice.hasse().len());
    Ok(())
}

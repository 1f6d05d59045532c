//! Print the character table of a small group.
//!
//! ```bash
//! cargo run --example character_table -- symmetric:4
//! ```

use supercharacters::{CharacterTable, GroupSpec};

fn main() -> supercharacters::Result<()> {
    let spec = std::env::args().nth(1).unwrap_or_else(|| "symmetric:4".into());
    let g = GroupSpec::parse_shorthand(&spec)?.build()?;
    let t = CharacterTable::compute(&g)?;

    println!("{spec}: order {}, {} classes", g.order(), g.num_classes());
    let sizes: Vec<String> = (0..g.num_classes()).map(|c| g.class_size(c).to_string()).collect();
    println!("class sizes: {}", sizes.join(" "));
    for chi in 0..t.num_irr() {
        let row: Vec<String> = t.row(chi).iter().map(|v| format!("{v:>8}")).collect();
        println!("χ{chi:<2} {}", row.join(" "));
    }
    let sum: usize = t.degrees().iter().map(|d| d * d).sum();
    println!("sum of squared degrees = {sum}");
    Ok(())
}

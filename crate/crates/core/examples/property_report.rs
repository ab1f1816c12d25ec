//! Reflexivity, symmetry and transitivity of each relation, plus the
//! inclusion checks between relations.

use gamesym::fixtures::fixture;
use gamesym::relations::{diagnostics, property_report};
use gamesym::report::{diagnostics_table, properties_table};

fn main() -> gamesym::Result<()> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "notrans3".into());
    let g = fixture(&name)?;
    print!("{}", properties_table(&property_report(&g)));
    print!("{}", diagnostics_table(&diagnostics(&g)));
    Ok(())
}

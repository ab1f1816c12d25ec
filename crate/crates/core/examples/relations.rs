//! Player-level relation matrices with witnesses.

use gamesym::fixtures::fixture;
use gamesym::relations::{relation_matrix, Relation};
use gamesym::report::matrix_table;

fn main() -> gamesym::Result<()> {
    let g = fixture("g4")?;
    for rel in [Relation::B, Relation::R, Relation::T, Relation::M, Relation::PT, Relation::QB] {
        print!("{}", matrix_table(&g, &relation_matrix(&g, rel)));
        println!();
    }
    Ok(())
}

//! Run the five symmetry predicates on every bundled game.

use gamesym::fixtures::{describe, fixture, FIXTURE_NAMES};
use gamesym::symmetry::{classify, Predicate};

fn main() -> gamesym::Result<()> {
    for name in FIXTURE_NAMES {
        let g = fixture(name)?;
        let c = classify(&g);
        println!("{name}: {}", describe(name)?);
        for p in Predicate::ALL {
            let v = c.get(p);
            match &v.counterexample {
                None => println!("  {:<15} yes", p.name()),
                Some(cx) => println!("  {:<15} no   {}", p.name(), cx.describe(&g)),
            }
        }
    }
    Ok(())
}

//! The group of player permutations that leave a game unchanged.

use gamesym::fixtures::fixture;
use gamesym::symmetry::{invariance_group, is_invariant};
use gamesym::Permutation;

fn main() -> gamesym::Result<()> {
    let g = fixture("exsym4")?;
    let group = invariance_group(&g);
    println!("order {} of {}!", group.len(), group.degree());
    for p in group.elements() {
        println!("  {p}");
    }

    let swap = Permutation::transposition(4, 0, 1)?;
    let v = is_invariant(&g, &swap)?;
    if let Some(cx) = v.counterexample {
        println!("{swap} is not a symmetry: {}", cx.describe(&g));
    }
    Ok(())
}

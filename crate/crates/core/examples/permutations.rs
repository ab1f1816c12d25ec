//! Composition, inverses, cycle notation and pinned enumeration.

use gamesym::permutation::{enumerate_constrained, Permutation};

fn main() -> gamesym::Result<()> {
    let sigma = Permutation::parse_cycles("(1 2 3)", 4)?;
    let tau = Permutation::transposition(4, 0, 3)?;
    let st = sigma.compose(&tau)?;
    println!("σ = {sigma}, τ = {tau}, στ = {st}, order {}", st.order());
    println!("(στ)⁻¹ = {}", st.inverse());

    // every permutation of 4 players sending 1 to 3 and 2 to 1
    for p in enumerate_constrained(4, &[(0, 2), (1, 0)])? {
        println!("  {p}  images {:?}", p.images());
    }
    Ok(())
}

//! Profiles grouped by how many players pick each action.

use gamesym::fixtures::fixture;
use gamesym::symmetry::orbits;

fn main() -> gamesym::Result<()> {
    let g = fixture("notrans3")?;
    let o = orbits(&g);
    println!("{} profiles fall into {} orbits", g.num_profiles(), o.len());
    for (c, class) in o.classes().iter().enumerate() {
        let members: Vec<String> = class.iter().map(|a| g.format_profile(a)).collect();
        println!("  {:?}: {}", o.image(c).counts(), members.join(" "));
    }
    Ok(())
}

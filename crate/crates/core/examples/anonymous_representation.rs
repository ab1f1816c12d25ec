//! Recover the utility-per-action-count form of an anonymous game.

use gamesym::fixtures::fixture;
use gamesym::report::anonymous_table;
use gamesym::symmetry::anonymous_representation;

fn main() -> gamesym::Result<()> {
    for name in ["overdet3", "notrans3"] {
        let g = fixture(name)?;
        match anonymous_representation(&g) {
            Ok(u) => {
                print!("{name}\n{}", anonymous_table(&u));
                assert_eq!(u.to_game()?, g);
            }
            Err(cx) => println!("{name}: none, {}", cx.describe(&g)),
        }
    }
    Ok(())
}

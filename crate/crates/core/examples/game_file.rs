//! Build a game in code, write it to disk and read it back.

use gamesym::game::{int, parse_game, serialize_game};
use gamesym::Game;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // prisoner's dilemma
    let pd = Game::from_fn(2, vec!["c".into(), "d".into()], |a| {
        let u = |me: usize, other: usize| int([[3, 0], [5, 1]][me][other]);
        let c = a.coords();
        vec![u(c[0], c[1]), u(c[1], c[0])]
    })?;
    let text = serialize_game(&pd);
    print!("{text}");

    let path = std::env::temp_dir().join("gamesym_pd.json");
    std::fs::write(&path, &text)?;
    let back = parse_game(&std::fs::read(&path)?)?;
    assert_eq!(back, pd);

    let d = pd.parse_profile("d,c")?;
    let payoffs: Vec<String> = pd.payoff(&d)?.iter().map(ToString::to_string).collect();
    println!("payoffs at {} = ({})", pd.format_profile(&d), payoffs.join(","));
    Ok(())
}

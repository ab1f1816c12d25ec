//! Cross-check the fast paths against brute force on random games.

use gamesym::oracle::{differential, generate, GeneratorConfig, Mode};

fn main() -> gamesym::Result<()> {
    let mut checked = 0;
    for seed in 0..40 {
        let mut cfg = GeneratorConfig::new(3, 2, seed, Mode::Anonymous);
        cfg.low = gamesym::game::int(0);
        cfg.high = gamesym::game::int(1);
        let g = generate(&cfg)?;
        for d in differential(&g)? {
            println!("seed {seed}: {d:?}");
        }
        checked += 1;
    }
    println!("{checked} games checked");
    Ok(())
}

//! Seeded random games in each mode.

use gamesym::oracle::{emit, generate, GeneratorConfig, Mode};
use gamesym::symmetry::classify;

fn main() -> gamesym::Result<()> {
    for mode in [Mode::General, Mode::Anonymous, Mode::SelfSymmetric] {
        let cfg = GeneratorConfig::new(3, 2, 7, mode);
        let c = classify(&generate(&cfg)?);
        println!(
            "{:<15} anonymous={} symmetric={} self_symmetric={}",
            mode.name(),
            c.anonymous.holds,
            c.symmetric.holds,
            c.self_symmetric.holds
        );
    }
    print!("{}", emit(&GeneratorConfig::new(2, 2, 7, Mode::Anonymous))?);
    Ok(())
}

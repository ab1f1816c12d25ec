//! Recompute the stated verdicts for the bundled games.

use gamesym::fixtures::verify_fixtures;
use gamesym::report::fixture_report_table;

fn main() -> gamesym::Result<()> {
    let r = verify_fixtures()?;
    print!("{}", fixture_report_table(&r));
    if !r.all_pass() {
        std::process::exit(1);
    }
    Ok(())
}

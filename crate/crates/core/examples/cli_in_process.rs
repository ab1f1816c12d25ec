//! Drive the command-line front end without spawning a process.

fn main() {
    let out = gamesym::cli::run(["gamesym", "relations", "--fixture", "notrans3", "--relation", "B", "--format", "json"]);
    println!("exit {}", out.code);
    print!("{}", out.stdout);
}

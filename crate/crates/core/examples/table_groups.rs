//! Finite factors given by Cayley tables in a config file.

use qmcode::parser::{format_config, parse_config};
use qmcode::{code, parse_reduced, Side};

const CONFIG: &str = r#"
[factors.a]
kind = "table"
elements = ["e", "r", "rr", "s", "sr", "srr"]
identity = "e"
table = [
  ["e", "r", "rr", "s", "sr", "srr"],
  ["r", "rr", "e", "srr", "s", "sr"],
  ["rr", "e", "r", "sr", "srr", "s"],
  ["s", "sr", "srr", "e", "r", "rr"],
  ["sr", "srr", "s", "rr", "e", "r"],
  ["srr", "s", "sr", "r", "rr", "e"],
]

[factors.b]
kind = "cyclic"
order = 2
"#;

fn main() -> qmcode::Result<()> {
    let g = parse_config(CONFIG)?.into_shared();
    let w = parse_reduced("a[r] a[s] b a[s] b a[s] b a[sr] b a[r]", &g)?;
    println!("w = {w}");
    println!("Acode = {}", code(&w, Side::A));

    let broken = CONFIG.replace(r#"["r", "rr", "e", "srr", "s", "sr"]"#, r#"["r", "e", "rr", "srr", "s", "sr"]"#);
    match parse_config(&broken) {
        Ok(_) => println!("unexpectedly accepted"),
        Err(e) => println!("rejected: {e}"),
    }
    print!("{}", format_config(&g));
    Ok(())
}

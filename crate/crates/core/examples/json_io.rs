// Seeds and reports as JSON, plus the same calls through the CLI entry point.

use cluster_newton::cli::run as cli;
use cluster_newton::exmatrix::catalog;
use cluster_newton::io::{parse_json, parse_seed, seed_json, At};
use cluster_newton::pattern::Seed;
use cluster_newton::polyring::DEFAULT_MAX_TERMS;

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let seed = Seed::initial(&catalog::g2()).mutate_along(&[0, 1], DEFAULT_MAX_TERMS)?;
    let text = serde_json::to_string(&seed_json(&seed))?;
    println!("{text}");
    let back = parse_seed(&At::root(&parse_json(&text)?), DEFAULT_MAX_TERMS)?;
    assert_eq!(seed_json(&back), seed_json(&seed));

    let out = cli(["cluster-newton", "explore", "--input", r#"{"name": "G2"}"#, "--format", "text"]);
    print!("{}", out.stdout_str());
    let out = cli(["cluster-newton", "explore", "--input", r#"{"B": [[0, 1], [-1]]}"#]);
    println!("exit {}: {}", out.code, String::from_utf8_lossy(&out.stderr).trim());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}

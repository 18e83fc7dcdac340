// Distinct cluster monomials have distinct Newton polytopes; equal
// polytopes reduce step by step to the empty monomial.
//
// ```text
// cargo run --example theorem_a -- G2 4
// ```

use cluster_newton::exmatrix::catalog;
use cluster_newton::harness::{reduce_pair, verify_identities, verify_theorem_a};
use cluster_newton::pattern::{explore, Limits};

pub fn run_with(name: &str, degree: u32) -> Result<(), Box<dyn std::error::Error>> {
    let b = catalog::by_name(name).ok_or("unknown matrix")?;
    let graph = explore(&b, Limits::default())?;
    let ids = verify_identities(&graph)?;
    println!("{name}: {} seeds, {} directed edges, identities hold: {}", ids.seeds, ids.edges, ids.passed());

    let report = verify_theorem_a(&graph, degree)?;
    println!(
        "degree <= {degree}: {} monomials, {} polytopes, injective: {}",
        report.monomials,
        report.classes,
        report.injective()
    );

    let seed = graph.seed(graph.len() - 1);
    let h = vec![1; graph.rank()];
    let u = seed.monomial(&h)?;
    if u.support().iter().all(|id| !id.is_initial()) {
        let trace = reduce_pair(&u, &u, &graph)?;
        println!("reducing {u} against itself: {:?}", trace.verdict);
        for s in &trace.steps {
            println!("  direction {} exponent {}: support {} -> {}", s.k + 1, s.exponent, s.support_before, s.support_after);
        }
    }
    Ok(())
}

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    run_with("A3", 3)
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().collect();
    match args.as_slice() {
        [_, name, d] => run_with(name, d.parse()?),
        [_, name] => run_with(name, 3),
        _ => run(),
    }
}

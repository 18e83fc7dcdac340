// Mutating the A2 seed by hand, then exploring the whole exchange graph.
//
// ```text
// cargo run --example a2_walkthrough
// ```

use cluster_newton::exmatrix::catalog;
use cluster_newton::pattern::{explore, Limits, Seed};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let b = catalog::a2();
    let mut seed = Seed::initial(&b);
    println!("initial B =\n{}", b.matrix());

    // alternate directions until the initial cluster comes back
    for step in 0..5 {
        let k = step % 2;
        seed = seed.mutate(k)?;
        let id = seed.variable_id(k)?;
        println!("mu_{} -> x = {}", k + 1, seed.vars()[k]);
        println!("   g = {:?}, F = {}", id.g, id.f);
    }
    seed.check_invariants()?;

    let graph = explore(&b, Limits::default())?;
    println!("{} seeds, {:?}", graph.len(), graph.verdict());
    for id in graph.variables() {
        println!("  g = {:?}  F = {}", id.g, id.f);
    }
    assert_eq!(graph.len(), 5);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}

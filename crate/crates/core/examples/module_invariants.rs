// E- and F-invariants of decorated modules, and injectivity of the
// Newton polytope map on τ-rigid modules and multi-semibricks.

use cluster_newton::tau::theorems::{verify_tau_identities, verify_theorem_b, verify_theorem_c};
use cluster_newton::tau::{DecoratedModule, LinearA, ModuleSum};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let alg = LinearA::new(2)?;
    let s1 = DecoratedModule::module(ModuleSum::single(alg.simple(1)?));
    let p1 = DecoratedModule::module(ModuleSum::single(alg.projective(1)?));
    let p2 = DecoratedModule::module(ModuleSum::single(alg.projective(2)?));
    let shifted = DecoratedModule::shifted_projective(2);
    for (a, b) in [(&s1, &shifted), (&s1, &p2), (&s1, &p1)] {
        println!("({a} || {b})_F = {}, E_sym = {}", alg.f_invariant(a, b), alg.e_sym(a, b));
    }
    println!("P(S1 + P2) = {}", alg.newton_polytope(&s1.plus.direct_sum(&p2.plus)));

    let r = verify_tau_identities(3)?;
    for e in &r.entries {
        println!("  {}: {}/{}", e.name, e.passed, e.passed + e.failed);
    }
    for n in 2..=4 {
        let b = verify_theorem_b(n, 3)?;
        let c = verify_theorem_c(n, 3)?;
        println!(
            "n = {n}: {} τ-rigid modules injective: {}, {} multi-semibricks injective: {}",
            b.candidates,
            b.injective(),
            c.candidates,
            c.injective()
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}

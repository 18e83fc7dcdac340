// Tropical F-invariants decide compatibility of cluster monomials.

use cluster_newton::exmatrix::catalog;
use cluster_newton::invariant::{dominant_set, f_invariant, is_compatible};
use cluster_newton::pattern::{explore, Limits, Seed};
use cluster_newton::polyring::DEFAULT_MAX_TERMS;

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let b = catalog::a2();
    let s1 = Seed::initial(&b).mutate(0)?;
    let s2 = s1.mutate(1)?;
    let s3 = s2.mutate(0)?;
    let x3 = s1.monomial(&[1, 0])?;
    let x4 = s2.monomial(&[0, 1])?;
    let x5 = s3.monomial(&[1, 0])?;

    for (name, u, v) in [("x3, x4", &x3, &x4), ("x3, x5", &x3, &x5)] {
        let r = f_invariant(u, v, DEFAULT_MAX_TERMS)?;
        println!(
            "({name})_F = {} = {} + {}, same at {} vertices",
            r.value,
            r.left_part,
            r.right_part,
            r.checked_vertices.len()
        );
    }

    let graph = explore(&b, Limits::default())?;
    let c = is_compatible(&x3, &x4, &graph)?;
    println!("x3 x4 compatible: {} (witness seed {:?})", c.compatible, c.witness);

    // B2 carries D = (2, 1), which enters the pairing
    let b2 = catalog::b2();
    let g2 = explore(&b2, Limits::default())?;
    let u = Seed::initial(&b2).mutate(0)?.monomial(&[1, 0])?;
    let v = Seed::initial(&b2).mutate(1)?.monomial(&[0, 1])?;
    let r = f_invariant(&u, &v, DEFAULT_MAX_TERMS)?;
    println!("B2: D = {:?}, (u||v)_F = {}", r.d, r.value);
    println!("B2: dom(u) has {} of {} variables", dominant_set(&u, &g2)?.len(), g2.variables().len());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}

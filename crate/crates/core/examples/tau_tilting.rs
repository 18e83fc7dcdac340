// τ-tilting pairs of the path algebra of 1 -> 2 -> 3.

use cluster_newton::bongartz::Side;
use cluster_newton::tau::{DecoratedModule, LinearA, ModuleSum};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let alg = LinearA::new(3)?;
    for m in alg.intervals() {
        let dm = DecoratedModule::module(ModuleSum::single(m));
        let tau = alg.tau(m).map_or("0".to_string(), |t| t.to_string());
        println!("{m}: tau = {tau}, g = {:?}, F = {}", alg.g_decorated(&dm), alg.f_polynomial(m));
    }

    let pairs = alg.tau_tilting_pairs();
    println!("{} basic τ-tilting pairs", pairs.len());
    let top = pairs.iter().find(|p| p.fac.len() == alg.intervals().len()).ok_or("no top pair")?;
    println!("top: {top}");
    for (k, m) in alg.left_directions(top)? {
        println!("  left mutation at {}: {} ({:?})", top.summands[k], m.pair, m.side);
    }
    for (k, brick) in alg.labeling_semibrick(top)? {
        println!("  brick for direction {}: {brick}", k + 1);
    }

    let u = DecoratedModule::module(ModuleSum::single(alg.interval(2, 2)?));
    println!("left completion of {u}: {}", alg.bongartz_pair(&u, Side::Left)?);
    println!("right completion of {u}: {}", alg.bongartz_pair(&u, Side::Right)?);

    let c = alg.bijection_counts()?;
    println!("pairs {}, torsion classes {}, semibricks {}", c.pairs, c.torsion_classes, c.semibricks);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}

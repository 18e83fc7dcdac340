// Newton polytopes, support functions and Minkowski sums.

use cluster_newton::polyring::YPolynomial;
use cluster_newton::polytope::{newton_polytope, tropical_eval, LatticePolytope};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    // F of the variable x4 in A2
    let f = YPolynomial::from_i64_terms(2, &[(&[0, 0], 1), (&[1, 0], 1), (&[1, 1], 1)])?;
    let p = newton_polytope(&f)?;
    println!("P(F) = {p}");
    for r in [[-2, 1], [1, 1], [0, -1]] {
        println!("F[{r:?}] = {} = h_P({r:?}) = {}", tropical_eval(&f, &r)?, p.support_function(&r)?);
    }

    let g = YPolynomial::from_i64_terms(2, &[(&[0, 0], 1), (&[0, 1], 1)])?;
    let fg = &f * &g;
    let sum = p.minkowski_sum(&newton_polytope(&g)?)?;
    println!("P(F G) = {}", newton_polytope(&fg)?);
    println!("P(F) + P(G) = {}, equal: {}", sum, newton_polytope(&fg)?.equals(&sum)?);

    let square = LatticePolytope::from_points(2, vec![vec![0, 0], vec![2, 0], vec![0, 2], vec![2, 2], vec![1, 1]])?;
    println!("{} generators, vertices {:?}", square.points().len(), square.vertices());
    println!("(1, 1) inside: {}", square.contains_point(&[1, 1])?);
    println!("(3, 0) inside: {}", square.contains_point(&[3, 0])?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}

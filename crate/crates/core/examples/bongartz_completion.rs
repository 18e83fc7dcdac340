// Left and right Bongartz completions of every partial cluster of A3.

use cluster_newton::bongartz::{
    all_dominant_sets, check_dominant_set_theorem, greedy_left_completion, left_bongartz_completion,
    right_bongartz_completion, PartialCluster,
};
use cluster_newton::exmatrix::catalog;
use cluster_newton::pattern::{explore, Limits};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let graph = explore(&catalog::a3(), Limits::default())?;
    let doms = all_dominant_sets(&graph)?;
    let (mut partials, mut with_right, mut greedy_hits) = (0, 0, 0);
    for u in graph.partial_clusters() {
        let u = PartialCluster::new(u, &graph)?;
        let left = left_bongartz_completion(&u, &graph)?;
        if right_bongartz_completion(&u, &graph)?.is_some() {
            with_right += 1;
        }
        if greedy_left_completion(&u, &graph, 64)? == Some(left.seed) {
            greedy_hits += 1;
        }
        assert!(check_dominant_set_theorem(&u, &graph, &doms)?.passed());
        partials += 1;
    }
    println!("{partials} partial clusters, all with a unique left completion");
    println!("{with_right} have a right completion");
    println!("greedy descent agrees with the scan on {greedy_hits}/{partials}");

    let empty = left_bongartz_completion(&PartialCluster::empty(), &graph)?;
    println!("completion of the empty set: path {:?}", graph.seed(empty.seed).path());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}

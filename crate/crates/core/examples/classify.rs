// Chromatic numbers of a few distance triples, with the case that decides each.
//
//     cargo run --example classify
//     cargo run --example classify -- 4 10 14

use zhu_chromatic::{chi_formula, is_bipartite, DistanceTriple};

fn triples_from_args(args: &[String]) -> Result<Vec<DistanceTriple>, Box<dyn std::error::Error>> {
    let args: Vec<u64> = args.iter().map(|a| a.parse()).collect::<Result<_, _>>()?;
    if args.len() == 3 {
        return Ok(vec![DistanceTriple::new(args[0], args[1], args[2])?]);
    }
    [
        (1, 3, 5),
        (1, 2, 6),
        (2, 3, 5),
        (3, 4, 7),
        (1, 2, 4),
        (2, 4, 6),
    ]
    .into_iter()
    .map(|(a, b, c)| DistanceTriple::new(a, b, c).map_err(Into::into))
    .collect()
}

pub fn run_example(args: &[String]) -> Result<(), Box<dyn std::error::Error>> {
    for t in triples_from_args(args)? {
        let (chi, branch) = chi_formula(&t);
        print!("{t:<14} chi = {chi}  [{}]", branch.describe());
        if t.scale() > 1 {
            print!("  (divided by {})", t.scale());
        }
        if is_bipartite(&t) {
            print!("  bipartite");
        }
        println!();
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example(&std::env::args().skip(1).collect::<Vec<_>>())
}

// Exact chromatic numbers of small circulants.

use zhu_chromatic::{chromatic_number, exists_coloring, make_circulant};

pub fn run_example(_args: &[String]) -> Result<(), Box<dyn std::error::Error>> {
    let cases: [(u64, &[i64]); 6] = [
        (5, &[1, 2]),
        (4, &[1, 2, 3]),
        (7, &[1, 2]),
        (8, &[1, 2, 6]),
        (9, &[1]),
        (13, &[1, 5]),
    ];
    for (n, gens) in cases {
        let c = make_circulant(n, gens)?;
        let (k, witness) = chromatic_number(&c);
        println!(
            "C_{n}{gens:?}: conn {:?}, chi = {k}, coloring {:?}",
            c.conn(),
            witness.colors
        );
        assert!(exists_coloring(&c, k - 1).is_none());
    }
    match make_circulant(3, &[1, 2, 3]) {
        Err(e) => println!("C_3(1, 2, 3): {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example(&std::env::args().skip(1).collect::<Vec<_>>())
}

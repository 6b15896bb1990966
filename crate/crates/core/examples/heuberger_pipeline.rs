// The relation-matrix view of one triple: orientation, the 3×2 matrix, one
// division step, and every row collapse onto a circulant quotient.
//
//     cargo run --example heuberger_pipeline -- 1 2 6

use zhu_chromatic::intmat::{collapse_diagram_holds, distance_matrix};
use zhu_chromatic::zhu::heuberger_matrix;
use zhu_chromatic::{make_circulant, orient_for_matrix, CollapseSign, DistanceTriple};

pub fn run_example(args: &[String]) -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<u64> = args.iter().map(|a| a.parse()).collect::<Result<_, _>>()?;
    let t = match args.as_slice() {
        [a, b, c] => DistanceTriple::new(*a, *b, *c)?,
        _ => DistanceTriple::new(1, 2, 6)?,
    };

    let (a1, a2, a3) = orient_for_matrix(&t);
    println!("{t}: oriented as ({a1}, {a2}, {a3}), 3 | {}", a1 + a2);

    let m = heuberger_matrix(&t);
    println!("M  = {m}");
    println!("     column sums {:?}", m.column_sums());
    let step = m.eq2_reduce()?;
    println!("M1 = {}   (q = {}, r = {})", step.reduced, step.q, step.r);
    assert!(step.reduced.annihilates());

    // label (a, b, c): each collapse is reduction mod a sum or difference
    let [a, b, c] = t.distances().map(|d| d as i64);
    let x = distance_matrix(a, b, c)?;
    println!("X  = {x}");
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        for sign in CollapseSign::BOTH {
            match x.collapse_rows(i, j, sign) {
                Ok(y) => {
                    let circ = make_circulant(y.modulus() as u64, y.label())?;
                    let commutes = collapse_diagram_holds(&x, i, j, sign)?;
                    println!(
                        "  row{} {sign} row{}: {y}  ->  C_{}{:?}  diagram {}",
                        i + 1,
                        j + 1,
                        circ.order(),
                        circ.conn(),
                        if commutes { "commutes" } else { "BROKEN" }
                    );
                }
                Err(e) => println!("  row{} {sign} row{}: {e}", i + 1, j + 1),
            }
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example(&std::env::args().skip(1).collect::<Vec<_>>())
}

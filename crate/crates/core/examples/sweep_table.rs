// Cross-check the closed form against certificates for every triple up to a
// bound, and compare certified periods with `c * chi^c`.
//
//     cargo run --release --example sweep_table -- 12

use zhu_chromatic::cli::sweep_rows;

pub fn run_example(args: &[String]) -> Result<(), Box<dyn std::error::Error>> {
    let max = args.first().map(|s| s.parse()).transpose()?.unwrap_or(8);
    let rows = sweep_rows(max)?;
    println!(
        "{:>12}  {:>3}  {:>6}  {:>5}  {:>24}",
        "triple", "chi", "period", "b+c", "c*chi^c"
    );
    for r in rows.iter().filter(|r| r.chi_certified == 4 || r.c == max) {
        println!(
            "{:>12}  {:>3}  {:>6}  {:>5}  {:>24}",
            format!("{{{},{},{}}}", r.a, r.b, r.c),
            r.chi_certified,
            r.period,
            r.b + r.c,
            r.ees_bound
        );
    }
    let disagree = rows.iter().filter(|r| !r.agree).count();
    println!("{} triples, {disagree} disagreements", rows.len());
    if disagree > 0 {
        return Err("closed form and certificates disagree".into());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example(&std::env::args().skip(1).collect::<Vec<_>>())
}

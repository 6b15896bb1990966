// Certify the chromatic number of one triple and print the certificate as JSON.
//
//     cargo run --example periodic_certificate -- 3 4 7

use zhu_chromatic::periodic::check_certificate;
use zhu_chromatic::{certify, segment_colorable, DistanceTriple, LowerBound};

pub fn run_example(args: &[String]) -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<u64> = args.iter().map(|a| a.parse()).collect::<Result<_, _>>()?;
    let t = match args.as_slice() {
        [a, b, c] => DistanceTriple::new(*a, *b, *c)?,
        _ => DistanceTriple::new(3, 4, 7)?,
    };
    let cert = certify(&t)?;
    check_certificate(&cert)?;

    println!("{t}: chi = {} ({})", cert.chi, cert.branch.describe());
    println!(
        "upper: period {} <= b + c = {}, colors {:?}",
        cert.upper.period,
        t.b() + t.c(),
        cert.upper.colors
    );
    let row: Vec<String> = (-6..=18)
        .map(|n| cert.upper.color_of(n).to_string())
        .collect();
    println!("       n = -6..18 -> {}", row.join(""));
    match cert.lower {
        LowerBound::Trivial => println!("lower: the graph has edges"),
        LowerBound::Parity => println!("lower: an even distance closes an odd walk"),
        LowerBound::Segment { length } => {
            println!("lower: {{0..{length}}} is not {}-colorable", cert.chi - 1);
            let shortest = (0..=length).find(|&l| !segment_colorable(&t, l, cert.chi as usize - 1));
            println!(
                "       shortest such segment: {{0..{}}}",
                shortest.unwrap_or(length)
            );
        }
    }
    println!("{}", serde_json::to_string_pretty(&cert)?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example(&std::env::args().skip(1).collect::<Vec<_>>())
}

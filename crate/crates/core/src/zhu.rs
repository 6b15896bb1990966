//! Distance triples and the closed-form chromatic number of `Cay(ℤ, {±a, ±b, ±c})`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::intmat::{self, LabeledMatrix};

/// A normalized distance set `a <= b <= c` with `gcd(a, b, c) = 1`.
///
/// `scale` is the common factor divided out of the raw input. Scaling every
/// distance by `d` yields `d` disjoint copies of the same graph, so the
/// chromatic number does not depend on it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DistanceTriple {
    a: u64,
    b: u64,
    c: u64,
    scale: u64,
}

impl DistanceTriple {
    pub fn new(raw_a: u64, raw_b: u64, raw_c: u64) -> Result<Self> {
        normalize_triple(raw_a, raw_b, raw_c)
    }

    /// Same triple, recorded as having been divided by `scale`.
    pub fn with_scale(self, scale: u64) -> Result<Self> {
        if scale == 0 {
            return Err(Error::InvalidInput("scale must be positive".into()));
        }
        Ok(DistanceTriple { scale, ..self })
    }

    pub fn a(&self) -> u64 {
        self.a
    }

    pub fn b(&self) -> u64 {
        self.b
    }

    pub fn c(&self) -> u64 {
        self.c
    }

    pub fn scale(&self) -> u64 {
        self.scale
    }

    pub fn distances(&self) -> [u64; 3] {
        [self.a, self.b, self.c]
    }

    /// The bound on the period of an optimal periodic coloring.
    pub fn period_bound(&self) -> u64 {
        self.b + self.c
    }

    pub fn all_odd(&self) -> bool {
        self.distances().iter().all(|d| d % 2 == 1)
    }

    /// Every normalized triple `1 <= a <= b <= c <= max` with gcd 1, in
    /// lexicographic order.
    pub fn enumerate(max: u64) -> impl Iterator<Item = DistanceTriple> {
        (1..=max).flat_map(move |c| {
            (1..=c).flat_map(move |b| {
                (1..=b).filter_map(move |a| {
                    (gcd3(a, b, c) == 1).then_some(DistanceTriple { a, b, c, scale: 1 })
                })
            })
        })
    }
}

impl fmt::Display for DistanceTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}, {}, {}}}", self.a, self.b, self.c)
    }
}

fn gcd3(a: u64, b: u64, c: u64) -> u64 {
    fn gcd(mut x: u64, mut y: u64) -> u64 {
        while y != 0 {
            (x, y) = (y, x % y);
        }
        x
    }
    gcd(gcd(a, b), c)
}

pub fn normalize_triple(raw_a: u64, raw_b: u64, raw_c: u64) -> Result<DistanceTriple> {
    if raw_a < 1 || raw_b < 1 || raw_c < 1 {
        return Err(Error::InvalidInput(format!(
            "distances must be positive, got ({raw_a}, {raw_b}, {raw_c})"
        )));
    }
    let mut d = [raw_a, raw_b, raw_c];
    d.sort_unstable();
    let g = gcd3(d[0], d[1], d[2]);
    Ok(DistanceTriple {
        a: d[0] / g,
        b: d[1] / g,
        c: d[2] / g,
        scale: g,
    })
}

const PERMUTATIONS: [[usize; 3]; 6] = [
    [0, 1, 2],
    [0, 2, 1],
    [1, 0, 2],
    [1, 2, 0],
    [2, 0, 1],
    [2, 1, 0],
];

/// Signed ordering `(a1, a2, a3)` of the triple with `3 | a1 + a2`,
/// `-a1 <= a2` and `|a1| <= |a2|`.
///
/// Permutations are scanned in lexicographic order, and for each one the
/// sign patterns in binary order with `+` before `-`. The first hit wins.
pub fn orient_for_matrix(t: &DistanceTriple) -> (i64, i64, i64) {
    let d = t.distances().map(|v| v as i64);
    for perm in PERMUTATIONS {
        for pattern in 0..8u8 {
            let sign = |k: usize| if pattern & (4 >> k) != 0 { -1 } else { 1 };
            let a1 = sign(0) * d[perm[0]];
            let a2 = sign(1) * d[perm[1]];
            let a3 = sign(2) * d[perm[2]];
            if (a1 + a2) % 3 == 0 && -a1 <= a2 && a1.abs() <= a2.abs() {
                return (a1, a2, a3);
            }
        }
    }
    // Among any three integers two have a sum or difference divisible by 3,
    // and a pair (x, y) with |x| <= |y| can always be signed so -x <= y.
    unreachable!("no valid orientation for {t}")
}

/// The relation matrix of the oriented triple.
pub fn heuberger_matrix(t: &DistanceTriple) -> LabeledMatrix {
    let (a1, a2, a3) = orient_for_matrix(t);
    intmat::build_heuberger_matrix(a1, a2, a3).expect("normalized triples have gcd 1")
}

/// Which case of the classification decided the chromatic number.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum ChiBranch {
    /// `a, b, c` all odd.
    AllOdd,
    /// `a = 1, b = 2, 3 | c`.
    #[serde(rename = "A1_B2_3DIVC")]
    A1B2ThreeDivC,
    /// `a + b = c` and `a ≢ b (mod 3)`.
    SumNotCongMod3,
    Otherwise,
}

impl ChiBranch {
    pub fn tag(self) -> &'static str {
        match self {
            ChiBranch::AllOdd => "ALL_ODD",
            ChiBranch::A1B2ThreeDivC => "A1_B2_3DIVC",
            ChiBranch::SumNotCongMod3 => "SUM_NOT_CONG_MOD3",
            ChiBranch::Otherwise => "OTHERWISE",
        }
    }

    pub fn describe(self) -> &'static str {
        match self {
            ChiBranch::AllOdd => "all odd",
            ChiBranch::A1B2ThreeDivC => "a=1, b=2, 3|c",
            ChiBranch::SumNotCongMod3 => "a+b=c, a≢b (mod 3)",
            ChiBranch::Otherwise => "otherwise",
        }
    }

    pub fn chi(self) -> u32 {
        match self {
            ChiBranch::AllOdd => 2,
            ChiBranch::A1B2ThreeDivC | ChiBranch::SumNotCongMod3 => 4,
            ChiBranch::Otherwise => 3,
        }
    }
}

impl fmt::Display for ChiBranch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// The classification, evaluated as an if-else chain in the listed order.
pub fn chi_formula(t: &DistanceTriple) -> (u32, ChiBranch) {
    let (a, b, c) = (t.a, t.b, t.c);
    let branch = if t.all_odd() {
        ChiBranch::AllOdd
    } else if a == 1 && b == 2 && c % 3 == 0 {
        ChiBranch::A1B2ThreeDivC
    } else if a + b == c && a % 3 != b % 3 {
        ChiBranch::SumNotCongMod3
    } else {
        ChiBranch::Otherwise
    };
    (branch.chi(), branch)
}

pub fn is_bipartite(t: &DistanceTriple) -> bool {
    t.all_odd()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(a: u64, b: u64, c: u64) -> DistanceTriple {
        normalize_triple(a, b, c).unwrap()
    }

    #[test]
    fn normalize_examples() {
        let n = t(3, 1, 5);
        assert_eq!((n.a(), n.b(), n.c(), n.scale()), (1, 3, 5, 1));
        let n = t(2, 4, 6);
        assert_eq!((n.a(), n.b(), n.c(), n.scale()), (1, 2, 3, 2));
        let n = t(7, 7, 7);
        assert_eq!((n.a(), n.b(), n.c(), n.scale()), (1, 1, 1, 7));
    }

    #[test]
    fn normalize_rejects_zero() {
        assert!(matches!(
            normalize_triple(0, 2, 3),
            Err(Error::InvalidInput(_))
        ));
        assert!(normalize_triple(1, 0, 3).is_err());
    }

    fn orientation_ok(t: &DistanceTriple, (a1, a2, a3): (i64, i64, i64)) -> bool {
        let mut abs = [a1.unsigned_abs(), a2.unsigned_abs(), a3.unsigned_abs()];
        abs.sort_unstable();
        abs == t.distances() && (a1 + a2) % 3 == 0 && -a1 <= a2 && a1.abs() <= a2.abs()
    }

    #[test]
    fn orient_examples() {
        assert_eq!(orient_for_matrix(&t(1, 2, 3)), (1, 2, 3));
        assert_eq!(orient_for_matrix(&t(1, 3, 5)), (1, 5, 3));
        // the scan hits the zero-sum pair before (-2, 5, 2); both are valid
        assert_eq!(orient_for_matrix(&t(2, 2, 5)), (2, -2, 5));
        assert!(orientation_ok(&t(2, 2, 5), (-2, 5, 2)));
    }

    #[test]
    fn orient_is_valid_for_all_small_triples() {
        for tr in DistanceTriple::enumerate(25) {
            assert!(orientation_ok(&tr, orient_for_matrix(&tr)), "{tr}");
        }
    }

    #[test]
    fn chi_examples() {
        assert_eq!(chi_formula(&t(1, 3, 5)), (2, ChiBranch::AllOdd));
        assert_eq!(chi_formula(&t(1, 2, 6)), (4, ChiBranch::A1B2ThreeDivC));
        assert_eq!(chi_formula(&t(2, 3, 5)), (4, ChiBranch::SumNotCongMod3));
        assert_eq!(chi_formula(&t(1, 2, 4)), (3, ChiBranch::Otherwise));
        assert_eq!(chi_formula(&t(3, 4, 7)), (4, ChiBranch::SumNotCongMod3));
        // satisfies both 4-cases; the earlier one is reported
        assert_eq!(chi_formula(&t(1, 2, 3)), (4, ChiBranch::A1B2ThreeDivC));
    }

    #[test]
    fn bipartite_examples() {
        assert!(is_bipartite(&t(1, 3, 5)));
        assert!(!is_bipartite(&t(1, 2, 3)));
        assert!(is_bipartite(&t(3, 5, 7)));
    }

    #[test]
    fn bipartite_matches_column_sum_parity() {
        for tr in DistanceTriple::enumerate(30) {
            let sums = heuberger_matrix(&tr).column_sums();
            let even = sums.iter().all(|s| s % 2 == 0);
            assert_eq!(is_bipartite(&tr), even, "{tr}: column sums {sums:?}");
        }
    }

    #[test]
    fn enumerate_small() {
        let v: Vec<_> = DistanceTriple::enumerate(2)
            .map(|t| t.distances())
            .collect();
        assert_eq!(v, vec![[1, 1, 1], [1, 1, 2], [1, 2, 2]]);
    }

    #[test]
    fn branch_serializes_as_tag() {
        for b in [
            ChiBranch::AllOdd,
            ChiBranch::A1B2ThreeDivC,
            ChiBranch::SumNotCongMod3,
            ChiBranch::Otherwise,
        ] {
            assert_eq!(
                serde_json::to_string(&b).unwrap(),
                format!("\"{}\"", b.tag())
            );
        }
    }
}

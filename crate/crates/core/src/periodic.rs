//! Periodic colorings of `Cay(ℤ, {±a, ±b, ±c})`.
//!
//! A coloring with period `p` is the same thing as a coloring of the
//! circulant `C_p(a, b, c)` pulled back along `n ↦ n mod p`. Upper bounds
//! come from searching small circulant quotients; lower bounds from parity
//! (odd closed walks) or from a finite segment of ℤ that cannot be colored.

use serde::{Deserialize, Serialize};

use crate::circulant::{exists_coloring, make_circulant};
use crate::error::{Error, Result};
use crate::zhu::{chi_formula, ChiBranch, DistanceTriple};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PeriodicColoring {
    pub period: u64,
    pub colors: Vec<usize>,
    /// Palette size; every entry of `colors` is below it.
    pub k: usize,
    /// Order of the circulant the coloring was pulled back from.
    pub modulus_origin: u64,
}

impl PeriodicColoring {
    /// Wraps a raw color word. `k` is taken as one more than the largest
    /// color.
    pub fn from_word(period: u64, colors: Vec<usize>) -> Result<Self> {
        if period == 0 || colors.len() as u64 != period {
            return Err(Error::InvalidInput(format!(
                "period {period} does not match a color word of length {}",
                colors.len()
            )));
        }
        let k = colors.iter().max().map_or(0, |m| m + 1);
        Ok(PeriodicColoring {
            period,
            colors,
            k,
            modulus_origin: period,
        })
    }

    /// Color of the integer `n` under the induced coloring of ℤ.
    pub fn color_of(&self, n: i64) -> usize {
        self.colors[n.rem_euclid(self.period as i64) as usize]
    }
}

/// Why the chromatic number is at least the claimed value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum LowerBound {
    /// The graph has an edge.
    Trivial,
    /// Some distance is even, so `a_i + a_j` is odd for a pair and the graph
    /// has an odd closed walk.
    Parity,
    /// `{0, ..., L}` admits no `(chi - 1)`-coloring.
    Segment {
        #[serde(rename = "L")]
        length: u64,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "CertificateJson", try_from = "CertificateJson")]
pub struct ChiCertificate {
    pub triple: DistanceTriple,
    pub chi: u32,
    pub branch: ChiBranch,
    pub upper: PeriodicColoring,
    pub lower: LowerBound,
}

#[derive(Serialize, Deserialize)]
struct CertificateJson {
    a: u64,
    b: u64,
    c: u64,
    scale: u64,
    chi: u32,
    branch: ChiBranch,
    period: u64,
    colors: Vec<usize>,
    lower: LowerBound,
}

impl From<ChiCertificate> for CertificateJson {
    fn from(cert: ChiCertificate) -> Self {
        CertificateJson {
            a: cert.triple.a(),
            b: cert.triple.b(),
            c: cert.triple.c(),
            scale: cert.triple.scale(),
            chi: cert.chi,
            branch: cert.branch,
            period: cert.upper.period,
            colors: cert.upper.colors,
            lower: cert.lower,
        }
    }
}

impl TryFrom<CertificateJson> for ChiCertificate {
    type Error = Error;

    fn try_from(j: CertificateJson) -> Result<Self> {
        let triple = DistanceTriple::new(j.a, j.b, j.c)?;
        if triple.distances() != [j.a, j.b, j.c] {
            return Err(Error::InvalidInput(format!(
                "({}, {}, {}) is not a normalized triple",
                j.a, j.b, j.c
            )));
        }
        let triple = triple.with_scale(j.scale)?;
        let mut upper = PeriodicColoring::from_word(j.period, j.colors)?;
        if upper.k > j.chi as usize {
            return Err(Error::InvalidInput(format!(
                "coloring uses {} colors but chi is {}",
                upper.k, j.chi
            )));
        }
        upper.k = j.chi as usize;
        Ok(ChiCertificate {
            triple,
            chi: j.chi,
            branch: j.branch,
            upper,
            lower: j.lower,
        })
    }
}

fn loop_free(t: &DistanceTriple, m: u64) -> bool {
    m >= 2 && t.distances().iter().all(|d| d % m != 0)
}

/// Quotient orders to try, in search order.
///
/// Pairwise sums and differences of the distances come first (ascending),
/// then every other loop-free order up to `b + c`.
pub fn candidate_moduli(t: &DistanceTriple) -> Vec<u64> {
    let [a, b, c] = t.distances();
    let mut pairs: Vec<u64> = [a + b, a + c, b + c, b - a, c - a, c - b]
        .into_iter()
        .filter(|&m| loop_free(t, m))
        .collect();
    pairs.sort_unstable();
    pairs.dedup();
    let rest: Vec<u64> = (2..=t.period_bound())
        .filter(|m| loop_free(t, *m) && !pairs.contains(m))
        .collect();
    pairs.extend(rest);
    pairs
}

/// First `k`-coloring of a circulant quotient `C_m(a, b, c)` over
/// [`candidate_moduli`], pulled back to a periodic coloring of period `m`.
pub fn find_periodic_coloring(t: &DistanceTriple, k: usize) -> Option<PeriodicColoring> {
    let gens = t.distances().map(|d| d as i64);
    candidate_moduli(t).into_iter().find_map(|m| {
        let quotient = make_circulant(m, &gens).ok()?;
        exists_coloring(&quotient, k).map(|w| PeriodicColoring {
            period: m,
            colors: w.colors,
            k,
            modulus_origin: m,
        })
    })
}

/// Checks properness over one period window, which covers all of ℤ.
pub fn verify_periodic(t: &DistanceTriple, pc: &PeriodicColoring) -> bool {
    let p = pc.period as usize;
    if p == 0 || pc.colors.len() != p {
        return false;
    }
    (0..p).all(|i| {
        t.distances()
            .iter()
            .all(|&s| pc.colors[i] != pc.colors[(i + s as usize) % p])
    })
}

/// Whether the induced subgraph on `{0, ..., length}` is `k`-colorable.
pub fn segment_colorable(t: &DistanceTriple, length: u64, k: usize) -> bool {
    if k == 0 {
        return false;
    }
    let n = length as usize + 1;
    let dist = t.distances().map(|d| d as usize);
    let mut colors = vec![usize::MAX; n];
    colors[0] = 0;
    extend_segment(&dist, k, &mut colors, 1, 0)
}

fn extend_segment(
    dist: &[usize; 3],
    k: usize,
    colors: &mut [usize],
    v: usize,
    max_used: usize,
) -> bool {
    if v == colors.len() {
        return true;
    }
    for col in 0..k.min(max_used + 2) {
        if dist.iter().all(|&s| s > v || colors[v - s] != col) {
            colors[v] = col;
            if extend_segment(dist, k, colors, v + 1, max_used.max(col)) {
                return true;
            }
        }
    }
    colors[v] = usize::MAX;
    false
}

/// Segment lengths tried when certifying chi = 4.
pub fn segment_schedule(t: &DistanceTriple) -> [u64; 4] {
    let base = t.period_bound();
    [base, 2 * base, 4 * base, 6 * base]
}

/// First length in [`segment_schedule`] whose segment is not `k`-colorable.
pub fn find_uncolorable_segment(t: &DistanceTriple, k: usize) -> Option<u64> {
    segment_schedule(t)
        .into_iter()
        .find(|&len| !segment_colorable(t, len, k))
}

/// Computes chi and certifies it from both sides.
///
/// Fails loudly rather than returning a weaker certificate: a missing upper
/// witness with period `<= b + c`, or no uncolorable segment within the
/// schedule, is reported as [`Error::Inconsistency`].
pub fn certify(t: &DistanceTriple) -> Result<ChiCertificate> {
    let (chi, branch) = chi_formula(t);
    let upper = find_periodic_coloring(t, chi as usize).ok_or_else(|| {
        Error::Inconsistency(format!(
            "{t}: no periodic {chi}-coloring with period <= {}",
            t.period_bound()
        ))
    })?;
    let lower = match chi {
        2 => LowerBound::Trivial,
        3 => LowerBound::Parity,
        _ => find_uncolorable_segment(t, chi as usize - 1)
            .map(|length| LowerBound::Segment { length })
            .ok_or_else(|| {
                Error::Inconsistency(format!(
                    "{t}: every segment up to length {} is {}-colorable",
                    6 * t.period_bound(),
                    chi - 1
                ))
            })?,
    };
    let cert = ChiCertificate {
        triple: *t,
        chi,
        branch,
        upper,
        lower,
    };
    check_certificate(&cert)?;
    Ok(cert)
}

/// Re-checks both witnesses of a certificate from scratch.
pub fn check_certificate(cert: &ChiCertificate) -> Result<()> {
    let t = &cert.triple;
    let fail = |what: &str| Err(Error::Inconsistency(format!("{t}: {what}")));
    if cert.upper.k != cert.chi as usize || cert.upper.colors.iter().any(|&c| c >= cert.upper.k) {
        return fail("upper witness uses the wrong palette");
    }
    if cert.upper.period > t.period_bound() {
        return fail("upper witness period exceeds b + c");
    }
    if !verify_periodic(t, &cert.upper) {
        return fail("upper witness is not a proper coloring");
    }
    match (cert.chi, cert.lower) {
        (2, LowerBound::Trivial) => Ok(()),
        (3, LowerBound::Parity) if !t.all_odd() => Ok(()),
        (4, LowerBound::Segment { length })
            if length <= 6 * t.period_bound() && !segment_colorable(t, length, 3) =>
        {
            Ok(())
        }
        _ => fail("lower witness does not certify chi"),
    }
}

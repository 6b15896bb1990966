//! Circulant graphs `C_n(S) = Cay(ℤ_n, ±S)` and exact coloring.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A loop-free circulant: `conn` is symmetric under negation mod `n` and
/// does not contain 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawCirculant")]
pub struct Circulant {
    n: u64,
    conn: Vec<u64>,
}

#[derive(Deserialize)]
struct RawCirculant {
    n: u64,
    conn: Vec<u64>,
}

impl TryFrom<RawCirculant> for Circulant {
    type Error = Error;

    fn try_from(raw: RawCirculant) -> Result<Self> {
        let gens: Vec<i64> = raw.conn.iter().map(|&s| s as i64).collect();
        let c = make_circulant(raw.n, &gens)?;
        if c.conn != raw.conn {
            return Err(Error::InvalidInput(
                "conn must be sorted and closed under negation".into(),
            ));
        }
        Ok(c)
    }
}

/// Reduces every generator mod `n` and closes the set under negation.
pub fn make_circulant(n: u64, gens: &[i64]) -> Result<Circulant> {
    if n < 2 {
        return Err(Error::InvalidInput(format!(
            "circulant order must be at least 2, got {n}"
        )));
    }
    let m = n as i64;
    let mut conn = BTreeSet::new();
    for &g in gens {
        let r = g.rem_euclid(m);
        if r == 0 {
            return Err(Error::QuotientHasLoops { modulus: m });
        }
        conn.insert(r as u64);
        conn.insert((m - r) as u64);
    }
    Ok(Circulant {
        n,
        conn: conn.into_iter().collect(),
    })
}

impl Circulant {
    pub fn order(&self) -> u64 {
        self.n
    }

    /// Connection set, sorted ascending.
    pub fn conn(&self) -> &[u64] {
        &self.conn
    }

    pub fn is_complete(&self) -> bool {
        self.conn.len() as u64 == self.n - 1
    }

    pub fn is_proper(&self, colors: &[usize]) -> bool {
        let n = self.n as usize;
        colors.len() == n
            && (0..n).all(|v| {
                self.conn
                    .iter()
                    .all(|&s| colors[v] != colors[(v + s as usize) % n])
            })
    }
}

/// A proper coloring of a circulant with colors in `[0, k)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    pub colors: Vec<usize>,
    pub k: usize,
}

/// Exact search for a proper `k`-coloring.
///
/// Vertices are colored in index order, vertex 0 gets color 0 and a vertex
/// may only open the next unused color. The witness is re-checked by
/// [`Circulant::is_proper`] before it is returned.
pub fn exists_coloring(c: &Circulant, k: usize) -> Option<Coloring> {
    if k == 0 {
        return None;
    }
    let n = c.n as usize;
    // Only edges back to already-colored vertices matter.
    let back: Vec<Vec<usize>> = (0..n)
        .map(|v| {
            c.conn
                .iter()
                .map(|&s| (v + n - s as usize) % n)
                .filter(|&u| u < v)
                .collect()
        })
        .collect();
    let mut colors = vec![usize::MAX; n];
    colors[0] = 0;
    if !extend(&back, k, &mut colors, 1, 0) {
        return None;
    }
    assert!(c.is_proper(&colors), "search produced an improper coloring");
    Some(Coloring { colors, k })
}

fn extend(back: &[Vec<usize>], k: usize, colors: &mut [usize], v: usize, max_used: usize) -> bool {
    if v == colors.len() {
        return true;
    }
    for col in 0..k.min(max_used + 2) {
        if back[v].iter().all(|&u| colors[u] != col) {
            colors[v] = col;
            if extend(back, k, colors, v + 1, max_used.max(col)) {
                return true;
            }
        }
    }
    colors[v] = usize::MAX;
    false
}

/// Smallest `k` admitting a proper coloring, with its witness. Every `k`
/// below the answer was refuted by exhaustive search.
pub fn chromatic_number(c: &Circulant) -> (usize, Coloring) {
    let start = if c.conn.is_empty() { 1 } else { 2 };
    (start..=c.n as usize)
        .find_map(|k| exists_coloring(c, k).map(|w| (k, w)))
        .expect("n colors always suffice")
}

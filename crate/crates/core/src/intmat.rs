//! Exact integer-matrix core.
//!
//! A [`LabeledMatrix`] is a small integer matrix (3×2 or 2×2, occasionally a
//! single column) together with the label vector that maps each standard
//! generator `e_i` to a group element, and the modulus of that group (`0`
//! for ℤ, `n >= 2` for ℤ_n). The columns span the relations among the
//! labels, so every column is annihilated by the label. All operations here
//! keep that property and carry the label along so it can be re-checked at
//! any stage.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Extended gcd: returns `(g, u, v)` with `x*u + y*v = g = gcd(x, y) > 0`.
///
/// Coefficients come from the classical iterative Euclidean recursion, so
/// `|u| <= |y|/(2g)` and `|v| <= |x|/(2g)` whenever both are nonzero. When
/// `x` already divides `y` the answer is `(|x|, sign(x), 0)`.
pub fn egcd(x: i64, y: i64) -> Result<(i64, i64, i64)> {
    if x == 0 && y == 0 {
        return Err(Error::InvalidInput("egcd(0, 0) is undefined".into()));
    }
    if x != 0 && y % x == 0 {
        return Ok((x.abs(), x.signum(), 0));
    }
    let (mut old_r, mut r) = (x, y);
    let (mut old_s, mut s) = (1i64, 0i64);
    let (mut old_t, mut t) = (0i64, 1i64);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
        (old_t, t) = (t, old_t - q * t);
    }
    if old_r < 0 {
        Ok((-old_r, -old_s, -old_t))
    } else {
        Ok((old_r, old_s, old_t))
    }
}

pub(crate) fn gcd(x: i64, y: i64) -> i64 {
    let (mut x, mut y) = (x.unsigned_abs(), y.unsigned_abs());
    while y != 0 {
        (x, y) = (y, x % y);
    }
    x as i64
}

/// A solution of `a1*u12 + a2*u22 = a3*g2` with `g2 = gcd(a1, a2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Eq1Solution {
    pub g2: i64,
    pub u12: i64,
    pub u22: i64,
}

/// Solves the Bézout-type relation linking the three oriented distances.
///
/// The solution set is infinite; this picks `a3 * (u, v)` where `(u, v)`
/// comes from [`egcd`]`(a1, a2)`.
pub fn solve_eq1(a1: i64, a2: i64, a3: i64) -> Result<Eq1Solution> {
    if a1 == 0 || a2 == 0 || a3 == 0 {
        return Err(Error::InvalidInput(format!(
            "oriented distances must be nonzero, got ({a1}, {a2}, {a3})"
        )));
    }
    let (g2, u, v) = egcd(a1, a2)?;
    Ok(Eq1Solution {
        g2,
        u12: checked(a3.checked_mul(u))?,
        u22: checked(a3.checked_mul(v))?,
    })
}

fn checked(v: Option<i64>) -> Result<i64> {
    v.ok_or_else(|| Error::InvalidInput("integer overflow".into()))
}

/// Row-collapse direction: `row_i + row_j` or `row_i - row_j`.
///
/// Subtracting the rows reduces modulo `label_i + label_j`; adding them
/// reduces modulo `|label_i - label_j|`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CollapseSign {
    Add,
    Subtract,
}

impl CollapseSign {
    pub fn as_i64(self) -> i64 {
        match self {
            CollapseSign::Add => 1,
            CollapseSign::Subtract => -1,
        }
    }

    pub const BOTH: [CollapseSign; 2] = [CollapseSign::Subtract, CollapseSign::Add];
}

impl fmt::Display for CollapseSign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CollapseSign::Add => "+",
            CollapseSign::Subtract => "-",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawMatrix")]
pub struct LabeledMatrix {
    entries: Vec<Vec<i64>>,
    label: Vec<i64>,
    modulus: i64,
}

#[derive(Deserialize)]
struct RawMatrix {
    entries: Vec<Vec<i64>>,
    label: Vec<i64>,
    modulus: i64,
}

impl TryFrom<RawMatrix> for LabeledMatrix {
    type Error = Error;

    fn try_from(raw: RawMatrix) -> Result<Self> {
        LabeledMatrix::new(raw.entries, raw.label, raw.modulus)
    }
}

impl LabeledMatrix {
    /// Validates shape, label reduction and label annihilation.
    pub fn new(entries: Vec<Vec<i64>>, label: Vec<i64>, modulus: i64) -> Result<Self> {
        let rows = entries.len();
        if !(2..=3).contains(&rows) {
            return Err(Error::InvalidShape(format!("{rows} rows, expected 2 or 3")));
        }
        let cols = entries[0].len();
        if !(1..=2).contains(&cols) || entries.iter().any(|r| r.len() != cols) {
            return Err(Error::InvalidShape(
                "rows must all have 1 or 2 columns".into(),
            ));
        }
        if label.len() != rows {
            return Err(Error::InvalidShape(format!(
                "label has length {}, matrix has {rows} rows",
                label.len()
            )));
        }
        if modulus < 0 || modulus == 1 {
            return Err(Error::InvalidInput(format!(
                "modulus must be 0 or at least 2, got {modulus}"
            )));
        }
        if modulus >= 2 && label.iter().any(|&l| !(0..modulus).contains(&l)) {
            return Err(Error::InvalidInput(format!(
                "label entries must be reduced into [0, {modulus})"
            )));
        }
        let m = LabeledMatrix {
            entries,
            label,
            modulus,
        };
        if !m.annihilates() {
            return Err(Error::InvalidInput(
                "label does not annihilate every column".into(),
            ));
        }
        Ok(m)
    }

    pub fn entries(&self) -> &[Vec<i64>] {
        &self.entries
    }

    pub fn label(&self) -> &[i64] {
        &self.label
    }

    pub fn modulus(&self) -> i64 {
        self.modulus
    }

    pub fn rows(&self) -> usize {
        self.entries.len()
    }

    pub fn cols(&self) -> usize {
        self.entries[0].len()
    }

    pub fn entry(&self, row: usize, col: usize) -> i64 {
        self.entries[row][col]
    }

    pub fn column_sums(&self) -> Vec<i64> {
        (0..self.cols())
            .map(|j| self.entries.iter().map(|r| r[j]).sum())
            .collect()
    }

    pub fn has_zero_row(&self) -> bool {
        self.entries.iter().any(|r| r.iter().all(|&v| v == 0))
    }

    /// `Σ_i label_i * entries[i][j]` for each column, reduced mod the modulus
    /// (left unreduced when the modulus is 0).
    pub fn annihilation_residues(&self) -> Vec<i128> {
        (0..self.cols())
            .map(|j| {
                let s: i128 = self
                    .label
                    .iter()
                    .zip(&self.entries)
                    .map(|(&l, row)| l as i128 * row[j] as i128)
                    .sum();
                if self.modulus == 0 {
                    s
                } else {
                    s.rem_euclid(self.modulus as i128)
                }
            })
            .collect()
    }

    pub fn annihilates(&self) -> bool {
        self.annihilation_residues().iter().all(|&r| r == 0)
    }

    /// Replaces column `dst` by `dst + factor * src`. Label and modulus are
    /// untouched, so the represented graph is unchanged.
    pub fn col_combine(&self, src: usize, dst: usize, factor: i64) -> Result<LabeledMatrix> {
        let cols = self.cols();
        for index in [src, dst] {
            if index >= cols {
                return Err(Error::IndexOutOfRange {
                    what: "columns",
                    index,
                    len: cols,
                });
            }
        }
        if src == dst {
            return Err(Error::InvalidInput(
                "col_combine needs distinct columns".into(),
            ));
        }
        let mut out = self.clone();
        for row in &mut out.entries {
            row[dst] = checked(
                factor
                    .checked_mul(row[src])
                    .and_then(|v| v.checked_add(row[dst])),
            )?;
        }
        Ok(out)
    }

    /// One division step toward modified Hermite normal form.
    ///
    /// Writes `entries[1][0] = q * entries[1][1] + r` with
    /// `-|entries[1][1]| < r <= 0`, then adds `-q` times column 2 to
    /// column 1, leaving `r` in position (2, 1).
    pub fn eq2_reduce(&self) -> Result<Eq2Step> {
        if self.rows() != 3 || self.cols() != 2 {
            return Err(Error::InvalidShape(format!(
                "eq2_reduce needs a 3x2 matrix, got {}x{}",
                self.rows(),
                self.cols()
            )));
        }
        let divisor = self.entries[1][1];
        if divisor == 0 {
            return Err(Error::InvalidShape(
                "entry (2, 2) is zero, nothing to divide by".into(),
            ));
        }
        let (q, r) = window_division(self.entries[1][0], divisor);
        let reduced = self.col_combine(1, 0, -q)?;
        debug_assert_eq!(reduced.entries[1][0], r);
        Ok(Eq2Step { q, r, reduced })
    }

    /// Collapses rows `i` and `j` of a 3-row matrix over ℤ into a 2-row
    /// matrix over ℤ_n.
    ///
    /// Row `i` becomes `row_i ± row_j`, row `j` is deleted, and the
    /// surviving labels are reduced mod `n = |label_i ∓ label_j|`. The
    /// quotient must be loop-free: `n >= 2` and no label vanishes mod `n`.
    pub fn collapse_rows(&self, i: usize, j: usize, sign: CollapseSign) -> Result<LabeledMatrix> {
        let n = self.collapse_modulus(i, j, sign)?;
        if n < 2 || self.label.iter().any(|&l| l.rem_euclid(n.max(1)) == 0) {
            return Err(Error::QuotientHasLoops { modulus: n });
        }
        let s = sign.as_i64();
        let mut entries = Vec::with_capacity(2);
        let mut label = Vec::with_capacity(2);
        for (k, row) in self.entries.iter().enumerate() {
            if k == j {
                continue;
            }
            if k == i {
                let merged = row
                    .iter()
                    .zip(&self.entries[j])
                    .map(|(&x, &y)| checked(s.checked_mul(y).and_then(|v| v.checked_add(x))))
                    .collect::<Result<Vec<_>>>()?;
                entries.push(merged);
            } else {
                entries.push(row.clone());
            }
            label.push(self.label[k].rem_euclid(n));
        }
        Ok(LabeledMatrix {
            entries,
            label,
            modulus: n,
        })
    }

    /// The modulus a collapse of rows `i`, `j` would produce, before the
    /// loop check.
    pub fn collapse_modulus(&self, i: usize, j: usize, sign: CollapseSign) -> Result<i64> {
        if self.rows() != 3 || self.modulus != 0 {
            return Err(Error::InvalidShape(
                "row collapse needs a 3-row matrix over the integers".into(),
            ));
        }
        for index in [i, j] {
            if index >= 3 {
                return Err(Error::IndexOutOfRange {
                    what: "rows",
                    index,
                    len: 3,
                });
            }
        }
        if i == j {
            return Err(Error::InvalidInput("collapse needs distinct rows".into()));
        }
        let n = self.label[i] - sign.as_i64() * self.label[j];
        Ok(n.abs())
    }
}

impl fmt::Display for LabeledMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .entries
            .iter()
            .map(|r| {
                r.iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect();
        let label: Vec<String> = self.label.iter().map(|v| v.to_string()).collect();
        write!(f, "({}), label ({})", rows.join(" / "), label.join(","))?;
        if self.modulus != 0 {
            write!(f, " mod {}", self.modulus)?;
        }
        Ok(())
    }
}

/// `(q, r)` with `x = q*d + r` and `-|d| < r <= 0`.
fn window_division(x: i64, d: i64) -> (i64, i64) {
    let m = d.abs();
    let r0 = x.rem_euclid(m);
    let r = if r0 == 0 { 0 } else { r0 - m };
    ((x - r) / d, r)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Eq2Step {
    pub q: i64,
    pub r: i64,
    pub reduced: LabeledMatrix,
}

/// Builds the 3×2 relation matrix for oriented distances `(a1, a2, a3)`:
///
/// ```text
///   (  g2        0      )
///   ( -u22   -a1 / g2   )     label (a3, a2, a1)
///   ( -u12    a2 / g2   )
/// ```
pub fn build_heuberger_matrix(a1: i64, a2: i64, a3: i64) -> Result<LabeledMatrix> {
    if a1 == 0 || a2 == 0 || a3 == 0 {
        return Err(Error::InvalidInput(format!(
            "oriented distances must be nonzero, got ({a1}, {a2}, {a3})"
        )));
    }
    if gcd(gcd(a1, a2), a3) != 1 {
        return Err(Error::InvalidInput(format!(
            "gcd({a1}, {a2}, {a3}) must be 1"
        )));
    }
    let Eq1Solution { g2, u12, u22 } = solve_eq1(a1, a2, a3)?;
    let m = LabeledMatrix {
        entries: vec![vec![g2, 0], vec![-u22, -a1 / g2], vec![-u12, a2 / g2]],
        label: vec![a3, a2, a1],
        modulus: 0,
    };
    debug_assert!(m.annihilates());
    Ok(m)
}

/// Relation matrix whose label is `(a, b, c)` in that order, i.e. with
/// `φ(e₁) = a, φ(e₂) = b, φ(e₃) = c`.
pub fn distance_matrix(a: i64, b: i64, c: i64) -> Result<LabeledMatrix> {
    build_heuberger_matrix(c, b, a)
}

/// Checks the commutative square for a row collapse on the three standard
/// generators: reducing `φ_X(e_k)` mod `n` must equal `φ_Y(τ₁(e_k))`, where
/// `τ₁` fixes every kept row and sends `e_j` to `±e_i`.
pub fn collapse_diagram_holds(
    x: &LabeledMatrix,
    i: usize,
    j: usize,
    sign: CollapseSign,
) -> Result<bool> {
    let y = x.collapse_rows(i, j, sign)?;
    let n = y.modulus();
    let y_index = |k: usize| if k > j { k - 1 } else { k };
    Ok((0..3).all(|k| {
        let down = x.label()[k].rem_euclid(n);
        let across = if k == j {
            sign.as_i64() * y.label()[y_index(i)]
        } else {
            y.label()[y_index(k)]
        };
        down == across.rem_euclid(n)
    }))
}

//! Brute-force oracles shared by the integration tests. None of these call
//! into the search code they are used to check.

#![allow(dead_code)]

/// Whether `Cay(ℤ, {±d})` admits a proper `k`-coloring.
///
/// States are proper colorings of a window of `max(d)` consecutive
/// integers; a coloring of ℤ exists iff the window-shift graph has a cycle.
pub fn line_colorable(dist: &[u64], k: usize) -> bool {
    let w = *dist.iter().max().unwrap() as usize;
    let total = k.pow(w as u32);
    let decode = |mut code: usize| {
        let mut word = vec![0usize; w];
        for slot in word.iter_mut().rev() {
            *slot = code % k;
            code /= k;
        }
        word
    };
    let proper = |word: &[usize]| {
        (0..word.len()).all(|i| {
            dist.iter()
                .all(|&s| i < s as usize || word[i] != word[i - s as usize])
        })
    };
    let states: Vec<usize> = (0..total).filter(|&c| proper(&decode(c))).collect();
    let mut alive = vec![false; total];
    for &s in &states {
        alive[s] = true;
    }
    let succ = |code: usize| -> Vec<usize> {
        let word = decode(code);
        (0..k)
            .filter(|&x| dist.iter().all(|&s| word[w - s as usize] != x))
            .map(|x| (code * k + x) % total)
            .collect()
    };
    // peel states without an alive successor until stable
    loop {
        let mut changed = false;
        for &s in &states {
            if alive[s] && !succ(s).into_iter().any(|t| alive[t]) {
                alive[s] = false;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    states.iter().any(|&s| alive[s])
}

pub fn line_chromatic_number(dist: &[u64]) -> usize {
    (1..=6).find(|&k| line_colorable(dist, k)).unwrap()
}

/// Every `k`-coloring of `{0, ..., len}`, tried one by one.
pub fn segment_colorable_enum(dist: &[u64], len: usize, k: usize) -> bool {
    let n = len + 1;
    let mut colors = vec![0usize; n];
    loop {
        let ok = (0..n).all(|i| {
            dist.iter()
                .all(|&s| i < s as usize || colors[i] != colors[i - s as usize])
        });
        if ok {
            return true;
        }
        let mut pos = 0;
        loop {
            if pos == n {
                return false;
            }
            colors[pos] += 1;
            if colors[pos] < k {
                break;
            }
            colors[pos] = 0;
            pos += 1;
        }
    }
}

/// Chromatic number of `C_n(gens)` by enumerating all colorings.
pub fn circulant_chi_enum(n: usize, gens: &[i64]) -> usize {
    let conn: Vec<usize> = gens
        .iter()
        .flat_map(|&g| {
            [
                g.rem_euclid(n as i64) as usize,
                (-g).rem_euclid(n as i64) as usize,
            ]
        })
        .collect();
    (1..=n)
        .find(|&k| {
            let mut colors = vec![0usize; n];
            loop {
                if (0..n).all(|v| conn.iter().all(|&s| colors[v] != colors[(v + s) % n])) {
                    return true;
                }
                let mut pos = 0;
                loop {
                    if pos == n {
                        return false;
                    }
                    colors[pos] += 1;
                    if colors[pos] < k {
                        break;
                    }
                    colors[pos] = 0;
                    pos += 1;
                }
            }
        })
        .unwrap()
}

/// Properness of a coloring of `ℤ_n` under the given connection set.
pub fn circulant_proper(n: usize, conn: &[u64], colors: &[usize]) -> bool {
    colors.len() == n
        && (0..n).all(|v| {
            conn.iter()
                .all(|&s| colors[v] != colors[(v + s as usize) % n])
        })
}

/// Properness of the induced coloring of ℤ, checked on `[-span, span]`
/// rather than one period.
pub fn periodic_proper_on_window(dist: &[u64], colors: &[usize], span: i64) -> bool {
    let p = colors.len() as i64;
    let col = |x: i64| colors[x.rem_euclid(p) as usize];
    (-span..=span).all(|x| dist.iter().all(|&s| col(x) != col(x + s as i64)))
}

//! Lexicographic enumeration of index tuples (0-based).

/// All tuples in `{0..base}^len`, lexicographically.
pub fn all_tuples(len: usize, base: usize) -> AllTuples {
    AllTuples {
        current: if base == 0 && len > 0 {
            None
        } else {
            Some(vec![0; len])
        },
        base,
    }
}

pub struct AllTuples {
    current: Option<Vec<usize>>,
    base: usize,
}

impl Iterator for AllTuples {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.current.clone()?;
        let cur = self.current.as_mut().unwrap();
        let mut pos = cur.len();
        loop {
            if pos == 0 {
                self.current = None;
                break;
            }
            pos -= 1;
            cur[pos] += 1;
            if cur[pos] < self.base {
                break;
            }
            cur[pos] = 0;
        }
        Some(out)
    }
}

/// Non-decreasing tuples `t_1 <= ... <= t_len` over `{0..base}`,
/// lexicographically.
pub fn nondecreasing_tuples(len: usize, base: usize) -> NonDecreasing {
    NonDecreasing {
        current: if base == 0 && len > 0 {
            None
        } else {
            Some(vec![0; len])
        },
        base,
    }
}

pub struct NonDecreasing {
    current: Option<Vec<usize>>,
    base: usize,
}

impl Iterator for NonDecreasing {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.current.clone()?;
        let cur = self.current.as_mut().unwrap();
        // rightmost position that can still grow
        match (0..cur.len()).rev().find(|&p| cur[p] + 1 < self.base) {
            None => self.current = None,
            Some(p) => {
                let v = cur[p] + 1;
                for x in cur[p..].iter_mut() {
                    *x = v;
                }
            }
        }
        Some(out)
    }
}

/// Decodes `index` as a base-`base` numeral with `len` digits, most
/// significant first. Matches the order of [`all_tuples`].
pub fn decode(mut index: u128, len: usize, base: usize) -> Vec<usize> {
    let mut out = vec![0; len];
    for slot in out.iter_mut().rev() {
        *slot = (index % base as u128) as usize;
        index /= base as u128;
    }
    out
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut p: Vec<usize> = (0..n).collect();
    let mut out = vec![p.clone()];
    loop {
        let Some(i) = (1..n).rev().find(|&i| p[i - 1] < p[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| p[j] > p[i - 1]).unwrap();
        p.swap(i - 1, j);
        p[i..].reverse();
        out.push(p.clone());
    }
}

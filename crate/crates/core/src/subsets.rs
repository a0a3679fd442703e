//! Lexicographic enumeration of fixed-size index subsets.

/// Iterator over all `k`-element subsets of `{0, .., n-1}`, each emitted as a
/// sorted index vector, in lexicographic order. `k = 0` yields exactly one
/// empty subset; `k > n` yields nothing.
pub(crate) fn combinations(n: usize, k: usize) -> Combinations {
    let current = if k <= n {
        Some((0..k).collect())
    } else {
        None
    };
    Combinations { n, k, current }
}

pub(crate) struct Combinations {
    n: usize,
    k: usize,
    current: Option<Vec<usize>>,
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let current = self.current.as_mut()?;
        let out = current.clone();

        // Advance to the lexicographic successor.
        let mut advanced = false;
        for i in (0..self.k).rev() {
            if current[i] < self.n - (self.k - i) {
                current[i] += 1;
                for j in i + 1..self.k {
                    current[j] = current[j - 1] + 1;
                }
                advanced = true;
                break;
            }
        }
        if !advanced {
            self.current = None;
        }
        Some(out)
    }
}

/// Binomial coefficient in u128 to stay exact at the dimensions we allow.
#[cfg(test)]
pub(crate) fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

//! Ranking of sorted cop tuples (multisets of size `k` over `0..n`).
//!
//! A sorted tuple `c_0 <= .. <= c_{k-1}` maps to the strictly increasing
//! `c_i + i` in `0..n+k-1`, which is ranked in colex order by the
//! combinatorial number system.

#[derive(Clone, Debug)]
pub(crate) struct CopConfigs {
    n: usize,
    k: usize,
    binom: Vec<Vec<u64>>,
    count: usize,
}

/// Number of sorted `k`-tuples over `n` vertices, saturating.
pub(crate) fn multiset_count(n: usize, k: usize) -> u128 {
    let mut r: u128 = 1;
    for i in 0..k as u128 {
        r = r.saturating_mul(n as u128 + i) / (i + 1);
    }
    r
}

impl CopConfigs {
    pub fn new(n: usize, k: usize) -> Self {
        let top = n + k;
        let mut binom = vec![vec![0u64; k + 2]; top + 1];
        for row in binom.iter_mut() {
            row[0] = 1;
        }
        for m in 1..=top {
            for j in 1..=k + 1 {
                binom[m][j] = binom[m - 1][j - 1].saturating_add(binom[m - 1][j]);
            }
        }
        let count = binom[n + k - 1][k] as usize;
        CopConfigs { n, k, binom, count }
    }

    pub fn len(&self) -> usize {
        self.count
    }

    /// Rank of a sorted tuple.
    pub fn rank(&self, sorted: &[usize]) -> usize {
        debug_assert!(sorted.windows(2).all(|w| w[0] <= w[1]));
        sorted.iter().enumerate().map(|(i, &c)| self.binom[c + i][i + 1] as usize).sum()
    }

    /// Writes the tuple of rank `r` into `out`.
    pub fn unrank(&self, mut r: usize, out: &mut [usize]) {
        for i in (0..self.k).rev() {
            // largest d with C(d, i+1) <= r
            let mut d = i;
            while d < self.n + self.k - 2 && (self.binom[d + 1][i + 1] as usize) <= r {
                d += 1;
            }
            r -= self.binom[d][i + 1] as usize;
            out[i] = d - i;
        }
    }

    pub fn tuple(&self, r: usize) -> Vec<usize> {
        let mut v = vec![0; self.k];
        self.unrank(r, &mut v);
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_is_a_bijection() {
        for (n, k) in [(1, 1), (4, 1), (4, 2), (5, 3), (3, 4)] {
            let c = CopConfigs::new(n, k);
            assert_eq!(c.len() as u128, multiset_count(n, k));
            let mut seen = vec![false; c.len()];
            let mut t = vec![0; k];
            for r in 0..c.len() {
                c.unrank(r, &mut t);
                assert!(t.windows(2).all(|w| w[0] <= w[1]) && t.iter().all(|&x| x < n));
                assert_eq!(c.rank(&t), r);
                assert!(!std::mem::replace(&mut seen[r], true));
            }
        }
    }
}

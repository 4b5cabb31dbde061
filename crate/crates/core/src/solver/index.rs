//! Dense ranking of k-multisets over `0..n` by the combinatorial number
//! system. A sorted multiset `c_0 <= .. <= c_{k-1}` maps to the strictly
//! increasing `d_i = c_i + i`, whose colex rank is `sum C(d_i, i + 1)`.

#[derive(Clone, Debug)]
pub struct Multisets {
    n: usize,
    k: usize,
    // binom[a][b] = C(a, b) for a < n + k, b <= k
    binom: Vec<Vec<u64>>,
    count: usize,
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    acc as u64
}

/// Number of k-multisets over n symbols, saturating at `u64::MAX`.
pub fn multiset_count(n: usize, k: usize) -> u64 {
    if n == 0 {
        return u64::from(k == 0);
    }
    binomial((n + k - 1) as u64, k as u64)
}

impl Multisets {
    pub fn new(n: usize, k: usize) -> Multisets {
        assert!(n >= 1, "need at least one symbol");
        let rows = n + k;
        let mut binom = vec![vec![0u64; k + 2]; rows];
        for a in 0..rows {
            binom[a][0] = 1;
            for b in 1..=(k + 1).min(a) {
                binom[a][b] = binom[a - 1][b - 1].saturating_add(binom[a - 1][b]);
            }
        }
        let count = multiset_count(n, k) as usize;
        Multisets { n, k, binom, count }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn count(&self) -> usize {
        self.count
    }

    pub fn rank(&self, sorted: &[usize]) -> usize {
        debug_assert_eq!(sorted.len(), self.k);
        debug_assert!(sorted.windows(2).all(|w| w[0] <= w[1]));
        sorted
            .iter()
            .enumerate()
            .map(|(i, &c)| self.binom[c + i][i + 1] as usize)
            .sum()
    }

    pub fn unrank(&self, mut rank: usize, out: &mut [usize]) {
        debug_assert_eq!(out.len(), self.k);
        for i in (0..self.k).rev() {
            // largest d with C(d, i + 1) <= rank
            let mut d = i;
            while d + 1 < self.n + self.k && (self.binom[d + 1][i + 1] as usize) <= rank {
                d += 1;
            }
            rank -= self.binom[d][i + 1] as usize;
            out[i] = d - i;
        }
    }

    pub fn get(&self, rank: usize) -> Vec<usize> {
        let mut out = vec![0; self.k];
        self.unrank(rank, &mut out);
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use itertools::Itertools;

    #[test]
    fn rank_is_a_bijection_onto_a_dense_range() {
        for n in 1..=6 {
            for k in 0..=4 {
                let ms = Multisets::new(n, k);
                let mut seen = vec![false; ms.count()];
                for c in (0..n).combinations_with_replacement(k) {
                    let r = ms.rank(&c);
                    assert!(!seen[r]);
                    seen[r] = true;
                    assert_eq!(ms.get(r), c);
                }
                assert!(seen.iter().all(|&s| s));
            }
        }
    }

    #[test]
    fn counts() {
        assert_eq!(multiset_count(16, 6), 54264);
        assert_eq!(multiset_count(10, 3), 220);
        assert_eq!(multiset_count(5, 0), 1);
        assert_eq!(binomial(200, 100), u64::MAX);
    }
}

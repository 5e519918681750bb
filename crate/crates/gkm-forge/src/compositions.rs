/// Compositions of `total` into `parts` positive parts, in lexicographic order.
///
/// There are `C(total − 1, parts − 1)` of them, and none when `parts` is 0 or exceeds `total`.
#[derive(Clone, Debug)]
pub struct Compositions {
    total: i64,
    current: Option<Vec<i64>>,
}

pub fn enumerate_compositions(total: i64, parts: usize) -> Compositions {
    let current = (parts > 0 && parts as i64 <= total).then(|| {
        let mut d = vec![1; parts];
        d[parts - 1] = total - parts as i64 + 1;
        d
    });
    Compositions { total, current }
}

impl Iterator for Compositions {
    type Item = Vec<i64>;

    fn next(&mut self) -> Option<Vec<i64>> {
        let out = self.current.take()?;
        let m = out.len();
        // Bump the rightmost position whose tail still has room, then reset the tail.
        let mut tail = 0;
        for i in (0..m.saturating_sub(1)).rev() {
            tail += out[i + 1];
            if tail > (m - 1 - i) as i64 {
                let mut next = out[..=i].to_vec();
                next[i] += 1;
                next.resize(m - 1, 1);
                let used: i64 = next.iter().sum();
                next.push(self.total - used);
                self.current = Some(next);
                break;
            }
        }
        Some(out)
    }
}

/// Binomial coefficient, for counting compositions.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k.min(n - k)).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases_are_lexicographic() {
        let all: Vec<_> = enumerate_compositions(4, 2).collect();
        assert_eq!(all, vec![vec![1, 3], vec![2, 2], vec![3, 1]]);
        assert_eq!(enumerate_compositions(3, 3).collect::<Vec<_>>(), vec![vec![1, 1, 1]]);
        assert_eq!(enumerate_compositions(5, 1).collect::<Vec<_>>(), vec![vec![5]]);
        assert_eq!(enumerate_compositions(5, 0).count(), 0);
    }

    #[test]
    fn counts_match_stars_and_bars() {
        assert_eq!(enumerate_compositions(24, 24).collect::<Vec<_>>(), vec![vec![1; 24]]);
        assert_eq!(enumerate_compositions(24, 25).count(), 0);
        let six: Vec<_> = enumerate_compositions(24, 6).collect();
        assert_eq!(six.len(), 33_649);
        assert_eq!(binomial(23, 5), 33_649);
        assert!(six.windows(2).all(|w| w[0] < w[1]));
        assert!(six.iter().all(|d| d.iter().sum::<i64>() == 24 && d.iter().all(|&x| x > 0)));
        for parts in 1..=9 {
            assert_eq!(enumerate_compositions(24, parts).count() as u64, binomial(23, parts as u64 - 1));
        }
    }
}

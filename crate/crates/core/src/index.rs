//! Canonical indexing of unordered pairs and triples of basis indices.

/// Number of pairs `a < b` with entries below `n`.
pub fn num_pairs(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

pub fn num_triples(n: usize) -> usize {
    n * n.saturating_sub(1) * n.saturating_sub(2) / 6
}

/// Index of the pair `a < b` in lexicographic order.
pub fn pair_id(n: usize, a: usize, b: usize) -> usize {
    debug_assert!(a < b && b < n);
    a * (2 * n - a - 1) / 2 + (b - a - 1)
}

/// Canonical form of an ordered pair: `(sign, id)`, or `None` when `a == b`.
pub fn signed_pair(n: usize, a: usize, b: usize) -> Option<(i32, usize)> {
    match a.cmp(&b) {
        std::cmp::Ordering::Less => Some((1, pair_id(n, a, b))),
        std::cmp::Ordering::Greater => Some((-1, pair_id(n, b, a))),
        std::cmp::Ordering::Equal => None,
    }
}

/// All pairs `a < b`, in id order.
pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::with_capacity(num_pairs(n));
    for a in 0..n {
        for b in a + 1..n {
            out.push((a, b));
        }
    }
    out
}

/// All triples `i < j < k`, in id order.
pub fn triples(n: usize) -> Vec<[usize; 3]> {
    let mut out = Vec::with_capacity(num_triples(n));
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                out.push([i, j, k]);
            }
        }
    }
    out
}

/// Lookup table from ordered triples to `(sign, id)`; sign 0 on repeats.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TripleTable {
    n: usize,
    table: Vec<(i8, u32)>,
}

impl TripleTable {
    pub fn new(n: usize) -> Self {
        let mut table = vec![(0i8, 0u32); n * n * n];
        for (id, [i, j, k]) in triples(n).into_iter().enumerate() {
            let perms = [
                ([i, j, k], 1),
                ([j, k, i], 1),
                ([k, i, j], 1),
                ([j, i, k], -1),
                ([i, k, j], -1),
                ([k, j, i], -1),
            ];
            for ([a, b, c], s) in perms {
                table[(a * n + b) * n + c] = (s, id as u32);
            }
        }
        TripleTable { n, table }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn lookup(&self, a: usize, b: usize, c: usize) -> Option<(i32, usize)> {
        let (s, id) = self.table[(a * self.n + b) * self.n + c];
        (s != 0).then_some((s as i32, id as usize))
    }
}

/// Sign of the permutation listing `first` then `second`.
pub fn concat_sign(first: &[usize], second: &[usize]) -> i32 {
    let seq: Vec<usize> = first.iter().chain(second).copied().collect();
    let mut inversions = 0;
    for i in 0..seq.len() {
        for j in i + 1..seq.len() {
            if seq[i] > seq[j] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// All `k`-element subsets of `0..n` in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pair_ids_are_dense() {
        for n in 0..7 {
            let ps = pairs(n);
            assert_eq!(ps.len(), num_pairs(n));
            for (id, &(a, b)) in ps.iter().enumerate() {
                assert_eq!(pair_id(n, a, b), id);
                assert_eq!(signed_pair(n, b, a), Some((-1, id)));
            }
        }
    }

    #[test]
    fn triple_table_signs() {
        let t = TripleTable::new(4);
        assert_eq!(t.lookup(0, 1, 2), Some((1, 0)));
        assert_eq!(t.lookup(2, 1, 0), Some((-1, 0)));
        assert_eq!(t.lookup(1, 2, 0), Some((1, 0)));
        assert_eq!(t.lookup(1, 1, 3), None);
        assert_eq!(num_triples(4), 4);
    }

    #[test]
    fn unshuffle_signs() {
        assert_eq!(concat_sign(&[1], &[0]), -1);
        assert_eq!(concat_sign(&[1, 2], &[0]), 1);
        assert_eq!(concat_sign(&[0, 2], &[1]), -1);
        assert_eq!(subsets(4, 2).len(), 6);
    }
}

//! Integer partitions, set partitions, the refinement order, and Stirling /
//! Bell combinatorics.

use crate::numbers::factorial;
use crate::ring::{int, CoeffRing, Int};
use num_traits::{One, Zero};
use std::cmp::Ordering;
use std::fmt;

/// An integer partition: weakly decreasing positive parts.
///
/// Ordering is by (weight, then lexicographic on parts), so collections keyed
/// by partitions iterate degree by degree in a deterministic order.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct IntPartition {
    parts: Vec<u32>,
}

impl IntPartition {
    pub fn new(mut parts: Vec<u32>) -> Self {
        assert!(
            parts.iter().all(|&p| p >= 1),
            "partition parts must be >= 1"
        );
        parts.sort_unstable_by(|a, b| b.cmp(a));
        IntPartition { parts }
    }

    pub fn empty() -> Self {
        IntPartition { parts: Vec::new() }
    }

    /// The one-part partition (n), or the empty partition for n = 0.
    pub fn single(n: u32) -> Self {
        if n == 0 {
            IntPartition::empty()
        } else {
            IntPartition { parts: vec![n] }
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Multiplicity vector (a_1, a_2, ...) with a_j = #parts equal to j;
    /// sized to the largest part.
    pub fn multiplicities(&self) -> Vec<u32> {
        let max = self.parts.first().copied().unwrap_or(0) as usize;
        let mut mult = vec![0u32; max];
        for &p in &self.parts {
            mult[(p - 1) as usize] += 1;
        }
        mult
    }

    /// The symmetry factor z_lambda = prod_j j^{a_j} a_j!.
    pub fn z_factor(&self) -> Int {
        let mut z = Int::one();
        for (j, &a) in self.multiplicities().iter().enumerate() {
            let j = (j + 1) as i64;
            for _ in 0..a {
                z *= int(j);
            }
            z *= factorial(a);
        }
        z
    }

    /// Concatenation: sorted union of parts (the cycle type of a disjoint
    /// product, and the exponent vector of p_lambda * p_mu).
    pub fn merge(&self, other: &Self) -> Self {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        IntPartition::new(parts)
    }

    /// All parts multiplied by d (the effect of psi_d on p_lambda).
    pub fn stretch(&self, d: u32) -> Self {
        IntPartition {
            parts: self.parts.iter().map(|&p| p * d).collect(),
        }
    }
}

impl Ord for IntPartition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| self.parts.cmp(&other.parts))
    }
}

impl PartialOrd for IntPartition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for IntPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

/// All partitions of n, in increasing `IntPartition` order.
pub fn partitions_of(n: u32) -> Vec<IntPartition> {
    fn rec(remaining: u32, max_part: u32, prefix: &mut Vec<u32>, out: &mut Vec<IntPartition>) {
        if remaining == 0 {
            out.push(IntPartition {
                parts: prefix.clone(),
            });
            return;
        }
        let top = remaining.min(max_part);
        for p in (1..=top).rev() {
            prefix.push(p);
            rec(remaining - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n.max(1), &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// A set partition of {1..n} in canonical form: blocks internally sorted,
/// blocks ordered by minimum element.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SetPartition {
    n: u32,
    blocks: Vec<Vec<u32>>,
}

impl SetPartition {
    pub fn new(n: u32, mut blocks: Vec<Vec<u32>>) -> Self {
        let mut seen = vec![false; n as usize + 1];
        for b in blocks.iter_mut() {
            assert!(!b.is_empty(), "set partition blocks must be nonempty");
            b.sort_unstable();
            for &x in b.iter() {
                assert!(x >= 1 && x <= n, "element out of range");
                assert!(!seen[x as usize], "element {x} repeated");
                seen[x as usize] = true;
            }
        }
        assert!(seen[1..].iter().all(|&s| s), "blocks must cover 1..=n");
        blocks.sort_by_key(|b| b[0]);
        SetPartition { n, blocks }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<u32>] {
        &self.blocks
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    /// Block index of each element, 1-indexed by element.
    pub fn block_of(&self) -> Vec<usize> {
        let mut idx = vec![usize::MAX; self.n as usize + 1];
        for (b, block) in self.blocks.iter().enumerate() {
            for &x in block {
                idx[x as usize] = b;
            }
        }
        idx
    }

    /// The integer partition of block sizes.
    pub fn shape(&self) -> IntPartition {
        IntPartition::new(self.blocks.iter().map(|b| b.len() as u32).collect())
    }

    /// True iff self refines other: i ~_self j implies i ~_other j
    /// (other is coarser). Both partitions must be of the same n.
    pub fn refines(&self, other: &SetPartition) -> bool {
        assert_eq!(
            self.n, other.n,
            "refines requires partitions of the same set"
        );
        let coarse = other.block_of();
        self.blocks.iter().all(|b| {
            b.iter()
                .all(|&x| coarse[x as usize] == coarse[b[0] as usize])
        })
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 {
                write!(f, "|")?;
            }
            for (j, x) in b.iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{x}")?;
            }
        }
        write!(f, "}}")
    }
}

/// Enumerate all set partitions of {1..n} with exactly k blocks, in
/// restricted-growth-string order (which is canonical-form order).
pub fn set_partitions(n: u32, k: u32) -> Vec<SetPartition> {
    if n == 0 || k == 0 || k > n {
        return Vec::new();
    }
    // Restricted growth strings: rgs[0] = 0, rgs[i] <= max(rgs[..i]) + 1.
    let n_us = n as usize;
    let mut out = Vec::new();
    let mut rgs = vec![0u32; n_us];
    fn rec(i: usize, maxv: u32, n: usize, k: u32, rgs: &mut Vec<u32>, out: &mut Vec<SetPartition>) {
        if i == n {
            if maxv + 1 == k {
                let mut blocks = vec![Vec::new(); k as usize];
                for (pos, &b) in rgs.iter().enumerate() {
                    blocks[b as usize].push(pos as u32 + 1);
                }
                out.push(SetPartition::new(n as u32, blocks));
            }
            return;
        }
        // Remaining positions must still be able to reach k blocks.
        let remaining = (n - i) as u32;
        for v in 0..=(maxv + 1).min(k - 1) {
            let new_max = maxv.max(v);
            if new_max + 1 + remaining - 1 < k {
                continue;
            }
            rgs[i] = v;
            rec(i + 1, new_max, n, k, rgs, out);
        }
    }
    rec(1, 0, n_us, k, &mut rgs, &mut out);
    out
}

/// All set partitions of {1..n}.
pub fn all_set_partitions(n: u32) -> Vec<SetPartition> {
    (1..=n).flat_map(|k| set_partitions(n, k)).collect()
}

/// Stirling number of the first kind s(n, k): signed count of permutations
/// of n letters with k cycles. Computed by the descending-factorial
/// recurrence and, for small n, cross-checked against the cycle-count sum
/// over set partitions; zero outside the triangle.
pub fn stirling_first(n: u32, k: u32) -> Int {
    let v = stirling_first_recurrence(n, k);
    debug_assert!(
        n > 9 || v == stirling_first_partition_sum(n, k),
        "stirling_first disagreement at ({n},{k})"
    );
    v
}

fn stirling_first_recurrence(n: u32, k: u32) -> Int {
    if n == 0 && k == 0 {
        return Int::one();
    }
    if k == 0 || k > n {
        return Int::zero();
    }
    // s(n,k) = s(n-1,k-1) - (n-1) s(n-1,k), from x(x-1)...(x-n+1).
    let mut prev = vec![Int::zero(); n as usize + 1];
    prev[0] = Int::one();
    for i in 1..=n as usize {
        let mut curr = vec![Int::zero(); n as usize + 1];
        for j in 1..=i {
            curr[j] = prev[j - 1].clone() - prev[j].clone() * int(i as i64 - 1);
        }
        prev = curr;
    }
    prev[k as usize].clone()
}

/// Direct sum over set partitions: s(n,k) = sum over J in S(n,k) of
/// prod (-1)^{|J_i|-1} (|J_i|-1)!.
fn stirling_first_partition_sum(n: u32, k: u32) -> Int {
    if n == 0 && k == 0 {
        return Int::one();
    }
    let mut total = Int::zero();
    for p in set_partitions(n, k) {
        let mut term = Int::one();
        for b in p.blocks() {
            let m = b.len() as u32;
            let mut f = factorial(m - 1);
            if (m - 1) % 2 == 1 {
                f = -f;
            }
            term *= f;
        }
        total += term;
    }
    total
}

/// Stirling number of the second kind S(n, k) = |S(n,k)|; zero outside the
/// triangle.
pub fn stirling_second(n: u32, k: u32) -> Int {
    if n == 0 && k == 0 {
        return Int::one();
    }
    if k == 0 || k > n {
        return Int::zero();
    }
    let mut prev = vec![Int::zero(); k as usize + 1];
    prev[0] = Int::one();
    for _i in 1..=n {
        let mut curr = vec![Int::zero(); k as usize + 1];
        for j in 1..=k as usize {
            curr[j] = prev[j - 1].clone() + prev[j].clone() * int(j as i64);
        }
        prev = curr;
        prev[0] = Int::zero();
    }
    prev[k as usize].clone()
}

/// Partial Bell polynomial B_{n,k}(f_1, ..., f_n) over any commutative ring:
/// the sum over set partitions of {1..n} with k blocks of the product of
/// f_{block size}. `f[0]` is f_1.
///
/// Direct enumeration is used for n <= 9; beyond that the generating-function
/// recurrence B_{n,k} = sum_j C(n-1, j-1) f_j B_{n-j, k-1}. The two agree on
/// the overlap (tested).
pub fn bell_partial<R: CoeffRing>(n: u32, k: u32, f: &[R]) -> R {
    assert!(f.len() as u32 >= n, "bell_partial needs f_1..f_n");
    if n <= 9 {
        bell_partial_enumerate(n, k, f)
    } else {
        bell_partial_recurrence(n, k, f)
    }
}

fn bell_partial_enumerate<R: CoeffRing>(n: u32, k: u32, f: &[R]) -> R {
    if n == 0 && k == 0 {
        return R::one();
    }
    let mut total = R::zero();
    for p in set_partitions(n, k) {
        let mut term = R::one();
        for b in p.blocks() {
            term = term * &f[b.len() - 1];
        }
        total = total + &term;
    }
    total
}

fn bell_partial_recurrence<R: CoeffRing>(n: u32, k: u32, f: &[R]) -> R {
    // table[m][j] = B_{m,j}
    let n_us = n as usize;
    let k_us = k as usize;
    let mut table = vec![vec![R::zero(); k_us + 1]; n_us + 1];
    table[0][0] = R::one();
    for m in 1..=n_us {
        for j in 1..=k_us.min(m) {
            let mut acc = R::zero();
            for part in 1..=m - j + 1 {
                let binom = binomial(m as u32 - 1, part as u32 - 1);
                let contrib = f[part - 1].clone() * &table[m - part][j - 1];
                acc = acc + &contrib.scale(&crate::ring::Rat::from_integer(binom));
            }
            table[m][j] = acc;
        }
    }
    table[n_us][k_us].clone()
}

/// Binomial coefficient C(n, k) as an exact integer.
pub fn binomial(n: u32, k: u32) -> Int {
    if k > n {
        return Int::zero();
    }
    let mut num = Int::one();
    for i in 0..k {
        num *= int((n - i) as i64);
    }
    num / factorial(k)
}

/// The pair of N x N Stirling matrices, with the product checked to be the
/// identity on construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StirlingMatrices {
    pub size: u32,
    /// `first[n-1][k-1]` holds s(n, k).
    pub first: Vec<Vec<Int>>,
    /// `second[n-1][k-1]` holds S(n, k).
    pub second: Vec<Vec<Int>>,
}

impl StirlingMatrices {
    pub fn new(size: u32) -> Self {
        assert!(size >= 1);
        let first: Vec<Vec<Int>> = (1..=size)
            .map(|n| (1..=size).map(|k| stirling_first(n, k)).collect())
            .collect();
        let second: Vec<Vec<Int>> = (1..=size)
            .map(|n| (1..=size).map(|k| stirling_second(n, k)).collect())
            .collect();
        let m = StirlingMatrices {
            size,
            first,
            second,
        };
        assert!(
            m.product_is_identity(),
            "s . S != I at size {size}: arithmetic bug"
        );
        m
    }

    /// Direct matrix multiplication check of s . S = I.
    pub fn product_is_identity(&self) -> bool {
        let n = self.size as usize;
        for i in 0..n {
            for j in 0..n {
                let mut acc = Int::zero();
                for l in 0..n {
                    acc += &self.first[i][l] * &self.second[l][j];
                }
                let expect = if i == j { Int::one() } else { Int::zero() };
                if acc != expect {
                    return false;
                }
            }
        }
        true
    }
}

/// Number of partitions of |alpha| into a_j subsets of size j.
pub fn partition_count_by_shape(mult: &[u32]) -> Int {
    let total: u32 = mult
        .iter()
        .enumerate()
        .map(|(j, &a)| (j as u32 + 1) * a)
        .sum();
    let mut denom = Int::one();
    for (j, &a) in mult.iter().enumerate() {
        let jf = factorial(j as u32 + 1);
        for _ in 0..a {
            denom *= &jf;
        }
        denom *= factorial(a);
    }
    factorial(total) / denom
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{rat_int, Rat};

    #[test]
    fn partitions_count_and_order() {
        assert_eq!(partitions_of(0).len(), 1);
        assert_eq!(partitions_of(5).len(), 7);
        assert_eq!(partitions_of(12).len(), 77);
        let ps = partitions_of(4);
        // Sorted ascending by lex within the weight class.
        let strings: Vec<String> = ps.iter().map(|p| p.to_string()).collect();
        assert_eq!(
            strings,
            vec!["[1,1,1,1]", "[2,1,1]", "[2,2]", "[3,1]", "[4]"]
        );
    }

    #[test]
    fn z_factor_values() {
        // z_{(1^n)} = n!, z_{(n)} = n.
        assert_eq!(IntPartition::new(vec![1, 1, 1, 1]).z_factor(), int(24));
        assert_eq!(IntPartition::new(vec![5]).z_factor(), int(5));
        assert_eq!(IntPartition::new(vec![2, 2, 1]).z_factor(), int(8));
        // sum over lambda |- n of n!/z_lambda = p(n) conjugacy class sizes sum to n!.
        for n in 1..=8u32 {
            let total: Int = partitions_of(n)
                .iter()
                .map(|p| factorial(n) / p.z_factor())
                .sum();
            // Number of permutations of S_n.
            assert_eq!(total, factorial(n));
        }
    }

    #[test]
    fn set_partition_counts_match_stirling_second() {
        for n in 1..=9u32 {
            for k in 1..=n {
                assert_eq!(
                    int(set_partitions(n, k).len() as i64),
                    stirling_second(n, k),
                    "count mismatch at ({n},{k})"
                );
            }
        }
    }

    #[test]
    fn set_partition_examples() {
        assert_eq!(set_partitions(4, 2).len(), 7);
        let nn = set_partitions(4, 4);
        assert_eq!(nn.len(), 1);
        assert_eq!(nn[0].blocks().len(), 4);
        let one = set_partitions(4, 1);
        assert_eq!(one.len(), 1);
        assert_eq!(one[0].blocks()[0], vec![1, 2, 3, 4]);
        assert!(set_partitions(3, 4).is_empty());
        assert!(set_partitions(3, 0).is_empty());
    }

    #[test]
    fn enumeration_is_duplicate_free_and_canonical() {
        for n in 1..=7u32 {
            let mut seen = std::collections::HashSet::new();
            for k in 1..=n {
                for p in set_partitions(n, k) {
                    // Re-canonicalization is stable.
                    let again = SetPartition::new(n, p.blocks().to_vec());
                    assert_eq!(p, again);
                    assert!(seen.insert(p), "duplicate partition");
                }
            }
        }
    }

    #[test]
    fn refinement_examples() {
        let j = SetPartition::new(4, vec![vec![1, 2], vec![3], vec![4]]);
        let k = SetPartition::new(4, vec![vec![1, 2], vec![3, 4]]);
        assert!(j.refines(&k));
        let j2 = SetPartition::new(4, vec![vec![1, 3], vec![2], vec![4]]);
        assert!(!j2.refines(&k));
        assert!(j.refines(&j));
    }

    #[test]
    fn stirling_first_matrix_values() {
        assert_eq!(stirling_first(4, 2), int(11));
        assert_eq!(stirling_first(5, 1), int(24));
        assert_eq!(stirling_first(6, 6), int(1));
        assert_eq!(stirling_first(5, 7), int(0));
        assert_eq!(stirling_first(0, 0), int(1));
        // Cross-check the two routes explicitly on the full small triangle.
        for n in 0..=9u32 {
            for k in 0..=n {
                assert_eq!(
                    stirling_first_recurrence(n, k),
                    stirling_first_partition_sum(n, k),
                    "({n},{k})"
                );
            }
        }
    }

    #[test]
    fn stirling_second_values() {
        assert_eq!(stirling_second(4, 2), int(7));
        assert_eq!(stirling_second(5, 3), int(25));
        assert_eq!(stirling_second(7, 1), int(1));
    }

    #[test]
    fn descending_factorial_identity() {
        // sum_k s(n,k) x^k = x(x-1)...(x-n+1) as polynomials, n <= 12.
        for n in 1..=12u32 {
            // Expand the falling factorial.
            let mut poly = vec![Int::zero(); n as usize + 1];
            poly[0] = Int::one(); // constant 1, then multiply by (x - i)
            let mut deg = 0usize;
            for i in 0..n as i64 {
                let mut next = vec![Int::zero(); n as usize + 1];
                for d in 0..=deg {
                    // x * poly
                    next[d + 1] += &poly[d];
                    // -i * poly
                    next[d] -= &poly[d] * int(i);
                }
                deg += 1;
                poly = next;
            }
            for k in 0..=n {
                assert_eq!(
                    poly[k as usize],
                    stirling_first(n, k),
                    "coeff x^{k} at n={n}"
                );
            }
        }
    }

    #[test]
    fn bell_specializations() {
        // f_k = 1 gives S(n,k).
        let ones: Vec<Rat> = (0..9).map(|_| rat_int(1)).collect();
        assert_eq!(bell_partial(4, 2, &ones), rat_int(7));
        // f_k = (-1)^{k-1} (k-1)! gives |s(n,k)| signs: B(4,2) = 11.
        let logs: Vec<Rat> = (1..=9u32)
            .map(|k| {
                let mut f = Rat::from_integer(factorial(k - 1));
                if (k - 1) % 2 == 1 {
                    f = -f;
                }
                f
            })
            .collect();
        assert_eq!(bell_partial(4, 2, &logs), rat_int(11));
        // Single block: B(n,1,f) = f_n.
        let f: Vec<Rat> = (1..=6).map(rat_int).collect();
        assert_eq!(bell_partial(6, 1, &f), rat_int(6));
    }

    #[test]
    fn bell_enumeration_matches_recurrence_on_overlap() {
        let f: Vec<Rat> = (1..=9u32)
            .map(|k| rat(2 * k as i64 - 3, 1 + (k as i64 % 3)))
            .collect();
        for n in 1..=9u32 {
            for k in 1..=n {
                assert_eq!(
                    bell_partial_enumerate(n, k, &f),
                    bell_partial_recurrence(n, k, &f),
                    "({n},{k})"
                );
            }
        }
    }

    use crate::ring::rat;

    #[test]
    fn bell_inverse_series_matrices() {
        // f(t) = e^t - 1 (f_k = 1) and g(t) = log(1+t) (g_k = (-1)^{k-1}(k-1)!)
        // give mutually inverse Bell matrices for N <= 10.
        let n_max = 10u32;
        let f: Vec<Rat> = (0..n_max).map(|_| rat_int(1)).collect();
        let g: Vec<Rat> = (1..=n_max)
            .map(|k| {
                let mut v = Rat::from_integer(factorial(k - 1));
                if (k - 1) % 2 == 1 {
                    v = -v;
                }
                v
            })
            .collect();
        for n in 1..=n_max {
            for k in 1..=n_max {
                let mut acc = Rat::zero();
                for l in 1..=n_max {
                    acc += bell_partial(n, l, &f) * bell_partial(l, k, &g);
                }
                let expect = if n == k { rat_int(1) } else { rat_int(0) };
                assert_eq!(acc, expect, "entry ({n},{k})");
            }
        }
    }

    #[test]
    fn stirling_matrices_identity() {
        let m = StirlingMatrices::new(12);
        assert!(m.product_is_identity());
        let one = StirlingMatrices::new(1);
        assert_eq!(one.first, vec![vec![int(1)]]);
        assert_eq!(one.second, vec![vec![int(1)]]);
    }

    #[test]
    fn partition_count_by_shape_matches_enumeration() {
        // p(alpha) = |alpha|! / prod j!^{a_j} a_j!, vs brute-force enumeration.
        for n in 1..=9u32 {
            for lambda in partitions_of(n) {
                let mult = lambda.multiplicities();
                let expected = partition_count_by_shape(&mult);
                let count = all_set_partitions(n)
                    .into_iter()
                    .filter(|sp| sp.shape() == lambda)
                    .count();
                assert_eq!(expected, int(count as i64), "shape {lambda}");
            }
        }
    }

    #[test]
    fn generating_function_checks() {
        // Coefficients of e^{x(e^t-1)} - 1 match S(n,k): expand to t^9.
        // Work with coefficients of t^n x^k scaled by n!.
        let nmax = 9usize;
        // e^t - 1 coefficients: 1/m! for m >= 1.
        let mut et = vec![Rat::zero(); nmax + 1];
        for m in 1..=nmax {
            et[m] = Rat::new(Int::one(), factorial(m as u32));
        }
        // power[k][n] = coeff of t^n in (e^t-1)^k
        let mut power = vec![vec![Rat::zero(); nmax + 1]; nmax + 1];
        power[0][0] = rat_int(1);
        for k in 1..=nmax {
            for n in 0..=nmax {
                let mut acc = Rat::zero();
                for m in 1..=n {
                    acc += &et[m] * &power[k - 1][n - m];
                }
                power[k][n] = acc;
            }
        }
        for n in 1..=nmax {
            for k in 1..=n {
                // coeff of x^k t^n in e^{x(e^t-1)} - 1 is power[k][n]/k!.
                let got = &power[k][n] / Rat::from_integer(factorial(k as u32));
                let expect = Rat::new(stirling_second(n as u32, k as u32), factorial(n as u32));
                assert_eq!(got, expect, "S({n},{k}) generating function");
            }
        }
        // Coefficients of (1+t)^x = exp(x log(1+t)) match s(n,k).
        let mut lt = vec![Rat::zero(); nmax + 1];
        for m in 1..=nmax {
            let mut c = Rat::new(Int::one(), int(m as i64));
            if (m - 1) % 2 == 1 {
                c = -c;
            }
            lt[m] = c;
        }
        let mut lpow = vec![vec![Rat::zero(); nmax + 1]; nmax + 1];
        lpow[0][0] = rat_int(1);
        for k in 1..=nmax {
            for n in 0..=nmax {
                let mut acc = Rat::zero();
                for m in 1..=n {
                    acc += &lt[m] * &lpow[k - 1][n - m];
                }
                lpow[k][n] = acc;
            }
        }
        for n in 1..=nmax {
            for k in 1..=n {
                let got = &lpow[k][n] / Rat::from_integer(factorial(k as u32));
                let expect = Rat::new(stirling_first(n as u32, k as u32), factorial(n as u32));
                assert_eq!(got, expect, "s({n},{k}) generating function");
            }
        }
    }
}

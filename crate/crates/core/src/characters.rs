//! Characters of symmetric groups.
//!
//! Irreducible character values chi^lambda(rho) are computed by the
//! Murnaghan-Nakayama border-strip recursion and memoized per n; the full
//! table for a given n is built once and shared behind a lock.

use crate::numbers::factorial;
use crate::partitions::{partitions_of, IntPartition};
use crate::ring::{Int, Rat};
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

/// A class function on S_n: a value for each cycle type.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Character {
    n: u32,
    values: BTreeMap<IntPartition, Rat>,
}

impl Character {
    /// Build from explicit values; must cover every cycle type of S_n.
    pub fn new(n: u32, values: BTreeMap<IntPartition, Rat>) -> Self {
        for rho in partitions_of(n) {
            assert!(
                values.contains_key(&rho),
                "missing value at cycle type {rho}"
            );
        }
        Character { n, values }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn value(&self, cycle_type: &IntPartition) -> &Rat {
        &self.values[cycle_type]
    }

    pub fn values(&self) -> &BTreeMap<IntPartition, Rat> {
        &self.values
    }

    /// The trivial character of S_n.
    pub fn trivial(n: u32) -> Self {
        let values = partitions_of(n)
            .into_iter()
            .map(|p| (p, Rat::one()))
            .collect();
        Character { n, values }
    }

    /// The sign character of S_n: (-1)^{n - #cycles}.
    pub fn sign(n: u32) -> Self {
        let values = partitions_of(n)
            .into_iter()
            .map(|p| {
                let s = if (n as usize - p.len()) % 2 == 0 {
                    Rat::one()
                } else {
                    -Rat::one()
                };
                (p, s)
            })
            .collect();
        Character { n, values }
    }

    /// Pointwise scaling.
    pub fn scaled(&self, q: &Rat) -> Self {
        Character {
            n: self.n,
            values: self
                .values
                .iter()
                .map(|(k, v)| (k.clone(), v * q))
                .collect(),
        }
    }

    /// True if every value is an integer.
    pub fn is_integral(&self) -> bool {
        self.values.values().all(|v| v.denom().is_one())
    }
}

/// Number of elements of S_n with the given cycle type: n! / z_rho.
pub fn conjugacy_class_size(rho: &IntPartition) -> Int {
    factorial(rho.weight()) / rho.z_factor()
}

/// The irreducible character table of S_n.
///
/// Rows are indexed by the partition labelling the irreducible, columns by
/// cycle type, both in `IntPartition` order.
#[derive(Debug)]
pub struct CharTable {
    pub n: u32,
    pub labels: Vec<IntPartition>,
    /// `table[row][col]` is the value of the irreducible labelled by
    /// `labels[row]` at the cycle type `labels[col]`.
    pub table: Vec<Vec<Int>>,
    index: HashMap<IntPartition, usize>,
}

impl CharTable {
    pub fn value(&self, lambda: &IntPartition, rho: &IntPartition) -> &Int {
        let r = self.index[lambda];
        let c = self.index[rho];
        &self.table[r][c]
    }

    /// Dimension of the irreducible labelled by lambda.
    pub fn dimension(&self, lambda: &IntPartition) -> &Int {
        let ones = IntPartition::new(vec![1; self.n as usize]);
        self.value(lambda, &ones)
    }

    pub fn index_of(&self, p: &IntPartition) -> usize {
        self.index[p]
    }
}

/// Shared character table for S_n (memoized).
pub fn char_table(n: u32) -> Arc<CharTable> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<CharTable>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = cache.lock().unwrap();
    guard
        .entry(n)
        .or_insert_with(|| {
            let labels = partitions_of(n);
            let index: HashMap<IntPartition, usize> = labels
                .iter()
                .cloned()
                .enumerate()
                .map(|(i, p)| (p, i))
                .collect();
            let mut memo = HashMap::new();
            let table = labels
                .iter()
                .map(|lambda| {
                    labels
                        .iter()
                        .map(|rho| mn_value(lambda.parts(), rho.parts(), &mut memo))
                        .collect()
                })
                .collect();
            Arc::new(CharTable {
                n,
                labels,
                table,
                index,
            })
        })
        .clone()
}

/// chi^lambda(rho) as an integer.
pub fn character_value(lambda: &IntPartition, rho: &IntPartition) -> Int {
    assert_eq!(lambda.weight(), rho.weight());
    char_table(lambda.weight()).value(lambda, rho).clone()
}

/// Murnaghan-Nakayama recursion: peel a border strip of length rho[0] from
/// lambda in every possible way, working with beta numbers.
///
/// With beta numbers b_i = lambda_i + (m-1-i), a removable border strip of
/// length r corresponds to a beta number b with b - r >= 0 not already in the
/// set; the strip height is the number of beta numbers strictly between
/// b - r and b.
fn mn_value(lambda: &[u32], rho: &[u32], memo: &mut HashMap<(Vec<u32>, Vec<u32>), Int>) -> Int {
    if rho.is_empty() {
        return if lambda.is_empty() {
            Int::one()
        } else {
            Int::zero()
        };
    }
    let key = (lambda.to_vec(), rho.to_vec());
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let r = rho[0] as i64;
    let rest = &rho[1..];
    let m = lambda.len();
    let beta: Vec<i64> = lambda
        .iter()
        .enumerate()
        .map(|(i, &l)| l as i64 + (m - 1 - i) as i64)
        .collect();
    let mut total = Int::zero();
    for i in 0..m {
        let nb = beta[i] - r;
        if nb < 0 || beta.contains(&nb) {
            continue;
        }
        let height = beta.iter().filter(|&&b| nb < b && b < beta[i]).count();
        let mut nbeta = beta.clone();
        nbeta[i] = nb;
        nbeta.sort_unstable_by(|a, b| b.cmp(a));
        let mut shape: Vec<u32> = nbeta
            .iter()
            .enumerate()
            .map(|(j, &b)| (b - (m - 1 - j) as i64) as u32)
            .collect();
        while shape.last() == Some(&0) {
            shape.pop();
        }
        let sub = mn_value(&shape, rest, memo);
        if height % 2 == 0 {
            total += sub;
        } else {
            total -= sub;
        }
    }
    memo.insert(key, total.clone());
    total
}

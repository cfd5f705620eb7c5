//! Enumeration helpers: permutations, subsets, integer and set partitions,
//! set compositions.

use super::label::Label;

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..n).collect();
    loop {
        out.push(current.clone());
        // next lexicographic permutation
        let Some(i) = (1..n).rev().find(|&i| current[i - 1] < current[i]) else {
            break;
        };
        let j = (i..n).rev().find(|&j| current[j] > current[i - 1]).expect("pivot exists");
        current.swap(i - 1, j);
        current[i..].reverse();
    }
    out
}

/// All `k`-element subsets of `items`, each in the order of `items`.
pub fn combinations<T: Clone>(items: &[T], k: usize) -> Vec<Vec<T>> {
    fn go<T: Clone>(items: &[T], k: usize, start: usize, acc: &mut Vec<T>, out: &mut Vec<Vec<T>>) {
        if acc.len() == k {
            out.push(acc.clone());
            return;
        }
        for i in start..items.len() {
            if items.len() - i < k - acc.len() {
                break;
            }
            acc.push(items[i].clone());
            go(items, k, i + 1, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    go(items, k, 0, &mut Vec::new(), &mut out);
    out
}

/// Integer partitions of `n` as nonincreasing part lists.
pub fn integer_partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, max: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(acc.clone());
            return;
        }
        for part in (1..=n.min(max)).rev() {
            acc.push(part);
            go(n - part, part, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Integer compositions of `n` (ordered, positive parts).
pub fn integer_compositions(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in 1..=n {
        for mut rest in integer_compositions(n - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Set partitions of `items`, blocks listed by least element, via restricted
/// growth strings.
pub fn set_partitions(items: &[Label]) -> Vec<Vec<Vec<Label>>> {
    fn go(items: &[Label], i: usize, blocks: &mut Vec<Vec<Label>>, out: &mut Vec<Vec<Vec<Label>>>) {
        if i == items.len() {
            out.push(blocks.clone());
            return;
        }
        for b in 0..blocks.len() {
            blocks[b].push(items[i].clone());
            go(items, i + 1, blocks, out);
            blocks[b].pop();
        }
        blocks.push(vec![items[i].clone()]);
        go(items, i + 1, blocks, out);
        blocks.pop();
    }
    let mut out = Vec::new();
    go(items, 0, &mut Vec::new(), &mut out);
    out
}

/// Set compositions of `items` whose block sizes are exactly `sizes`, in order.
pub fn compositions_with_sizes(items: &[Label], sizes: &[usize]) -> Vec<Vec<Vec<Label>>> {
    let Some((&first, rest)) = sizes.split_first() else {
        return if items.is_empty() { vec![Vec::new()] } else { Vec::new() };
    };
    let mut out = Vec::new();
    for block in combinations(items, first) {
        let remaining: Vec<Label> = items.iter().filter(|l| !block.contains(l)).cloned().collect();
        for mut tail in compositions_with_sizes(&remaining, rest) {
            tail.insert(0, block.clone());
            out.push(tail);
        }
    }
    out
}

/// `z_λ = Π_i i^{m_i} m_i!`, so that `n!/z_λ` permutations have cycle type `λ`.
pub fn z_lambda(parts: &[usize]) -> u64 {
    let mut z = 1u64;
    let mut i = 0;
    while i < parts.len() {
        let part = parts[i];
        let m = parts[i..].iter().take_while(|&&p| p == part).count();
        for k in 1..=m {
            z *= part as u64 * k as u64;
        }
        i += m;
    }
    z
}

/// Cycle decomposition of a permutation of `0..n` given as images; cycles start
/// at their least element and come in order of that element.
pub fn cycles(perm: &[usize]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; perm.len()];
    let mut out = Vec::new();
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut cycle = vec![start];
        seen[start] = true;
        let mut next = perm[start];
        while next != start {
            seen[next] = true;
            cycle.push(next);
            next = perm[next];
        }
        out.push(cycle);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::species::FiniteSet;

    #[test]
    fn counts() {
        assert_eq!(permutations(4).len(), 24);
        assert_eq!(permutations(0).len(), 1);
        assert_eq!(combinations(&[1, 2, 3, 4, 5], 2).len(), 10);
        let parts: Vec<usize> = (0..8).map(|n| integer_partitions(n).len()).collect();
        assert_eq!(parts, vec![1, 1, 2, 3, 5, 7, 11, 15]);
        assert_eq!(integer_compositions(4).len(), 8);
        let set = FiniteSet::standard(5);
        assert_eq!(set_partitions(set.labels()).len(), 52);
        assert_eq!(compositions_with_sizes(set.labels(), &[2, 1, 2]).len(), 30);
    }

    #[test]
    fn class_sizes_sum_to_factorial() {
        for n in 0..7usize {
            let fact: u64 = (1..=n as u64).product();
            let total: u64 = integer_partitions(n).iter().map(|p| fact / z_lambda(p)).sum();
            assert_eq!(total, fact);
        }
    }

    #[test]
    fn cycle_decomposition() {
        assert_eq!(cycles(&[2, 3, 0, 1]), vec![vec![0, 2], vec![1, 3]]);
        assert_eq!(cycles(&[0]), vec![vec![0]]);
    }
}

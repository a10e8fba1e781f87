//! Counts computed independently of the tree enumerators.

/// Planar trees with `m` labelled leaves in order, every internal vertex
/// with at least two children (the little Schröder numbers).
pub fn planar_tree_count(m: usize) -> u128 {
    let mut trees = vec![0u128; m.max(1) + 1];
    trees[1] = 1;
    for k in 2..=m {
        // seq[t][j]: sequences of j smaller trees with t leaves in total.
        let mut seq = vec![vec![0u128; k + 1]; k + 1];
        seq[0][0] = 1;
        for t in 1..=k {
            for j in 1..=t {
                seq[t][j] = (1..=t.min(k - 1)).map(|f| trees[f] * seq[t - f][j - 1]).sum();
            }
        }
        trees[k] = (2..=k).map(|j| seq[k][j]).sum();
    }
    trees[m]
}

/// Ordered set partitions of an `m`-set, by listing every map
/// `{1..m} → {1..m}` whose image is an initial segment.
pub fn ordered_partition_count(m: usize) -> u128 {
    if m == 0 {
        return 1;
    }
    let mut count = 0;
    let mut f = vec![0usize; m];
    loop {
        let k = f.iter().max().copied().unwrap_or(0) + 1;
        if (0..k).all(|b| f.contains(&b)) {
            count += 1;
        }
        let mut i = 0;
        while i < m && f[i] == m - 1 {
            f[i] = 0;
            i += 1;
        }
        if i == m {
            return count;
        }
        f[i] += 1;
    }
}

/// Tubings of the cycle graph on `v` nodes: sets of proper cyclic
/// intervals, pairwise nested or disjoint and non-adjacent. These label the
/// faces of the cyclohedron of dimension `v − 1`, the empty tubing being
/// the whole polytope.
pub fn cycle_tubing_count(v: usize) -> u128 {
    let tubes: Vec<u64> = (0..v)
        .flat_map(|start| (1..v).map(move |len| (start, len)))
        .map(|(start, len)| (0..len).fold(0u64, |m, k| m | 1 << ((start + k) % v)))
        .collect();
    let full = (1u64 << v) - 1;
    let connected = |set: u64| tubes.contains(&set) || set == full;
    let compatible = |a: u64, b: u64| {
        let nested = a & b == a || a & b == b;
        let apart = a & b == 0 && !connected(a | b);
        nested || apart
    };
    fn extend(tubes: &[u64], from: usize, chosen: &mut Vec<u64>, ok: &dyn Fn(u64, u64) -> bool) -> u128 {
        let mut total = 1;
        for i in from..tubes.len() {
            if chosen.iter().all(|&c| ok(c, tubes[i])) {
                chosen.push(tubes[i]);
                total += extend(tubes, i + 1, chosen, ok);
                chosen.pop();
            }
        }
        total
    }
    extend(&tubes, 0, &mut Vec::new(), &compatible)
}

pub fn binomial(n: u64, k: u64) -> u128 {
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn frozen_values() {
        let psi: Vec<u128> = (1..=7).map(planar_tree_count).collect();
        assert_eq!(psi, [1, 1, 3, 11, 45, 197, 903]);
        let fub: Vec<u128> = (0..=6).map(ordered_partition_count).collect();
        assert_eq!(fub, [1, 1, 3, 13, 75, 541, 4683]);
        let cyc: Vec<u128> = (2..=5).map(cycle_tubing_count).collect();
        assert_eq!(cyc, [3, 13, 63, 321]);
        assert_eq!(binomial(8, 4), 70);
    }

    #[test]
    fn hexagon_and_segment() {
        // The cycle on three nodes gives a hexagon: 6 + 6 + 1 faces.
        assert_eq!(cycle_tubing_count(3), 13);
        assert_eq!(cycle_tubing_count(2), 3);
    }
}

//! Leveled trees versus ordered set partitions ("falling numbers").

use std::fmt;

use crate::error::{Error, Result};
use crate::tree::{BaseKind, Label, LeveledTree, Node};

/// Ordered sequence of disjoint nonempty blocks covering `{1, …, m}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrderedPartition {
    blocks: Vec<Vec<u32>>,
}

impl OrderedPartition {
    pub fn new(mut blocks: Vec<Vec<u32>>) -> Result<Self> {
        blocks.iter_mut().for_each(|b| b.sort_unstable());
        let mut all: Vec<u32> = blocks.iter().flatten().copied().collect();
        all.sort_unstable();
        if blocks.iter().any(Vec::is_empty) {
            return Err(Error::invariant("blocks must be nonempty"));
        }
        if all.iter().enumerate().any(|(i, &x)| x as usize != i + 1) {
            return Err(Error::invariant("blocks must partition 1..m"));
        }
        Ok(OrderedPartition { blocks })
    }

    pub fn blocks(&self) -> &[Vec<u32>] {
        &self.blocks
    }

    pub fn ground_size(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }

    fn block_of(&self) -> Vec<usize> {
        let mut at = vec![0; self.ground_size() + 1];
        for (k, b) in self.blocks.iter().enumerate() {
            b.iter().for_each(|&x| at[x as usize] = k);
        }
        at
    }

    /// Whether `coarser` arises from `self` by merging runs of adjacent
    /// blocks.
    pub fn refines(&self, coarser: &OrderedPartition) -> bool {
        let mut mine = self.blocks.iter();
        coarser.blocks.iter().all(|target| {
            let mut acc: Vec<u32> = Vec::new();
            while acc.len() < target.len() {
                match mine.next() {
                    Some(b) => acc.extend(b),
                    None => return false,
                }
            }
            acc.sort_unstable();
            acc == *target
        }) && mine.next().is_none()
    }
}

impl fmt::Display for OrderedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .blocks
            .iter()
            .map(|b| format!("{{{}}}", b.iter().map(u32::to_string).collect::<Vec<_>>().join(",")))
            .collect();
        f.write_str(&parts.join(","))
    }
}

/// Every ordered partition of `{1, …, m}`, generated by block assignment.
pub fn ordered_partitions(m: usize) -> Vec<OrderedPartition> {
    let mut out = Vec::new();
    let mut assign = vec![0usize; m];
    loop {
        let k = assign.iter().copied().max().map_or(0, |x| x + 1);
        if (0..k).all(|b| assign.contains(&b)) {
            let blocks = (0..k)
                .map(|b| (0..m).filter(|&i| assign[i] == b).map(|i| i as u32 + 1).collect())
                .collect();
            out.push(OrderedPartition { blocks });
        }
        // odometer over {0..m-1}^m
        let mut i = 0;
        while i < m && assign[i] == m - 1 {
            assign[i] = 0;
            i += 1;
        }
        if i == m {
            break;
        }
        assign[i] += 1;
    }
    out.sort();
    out
}

/// Number `i` falls to the nadir of leaves `i - 1` and `i`; block `k`
/// collects the numbers that land on level-`k` vertices.
pub fn tonks_partition(t: &LeveledTree) -> Result<OrderedPartition> {
    if t.kind() != BaseKind::Psi {
        return Err(Error::precondition("the falling-numbers map needs a planar-tree base"));
    }
    let root = t.root();
    let levels = t.levels();
    let mut blocks = vec![Vec::new(); t.level_count() as usize];
    for i in 1..=t.n() as Label + 1 {
        let v = root.nadir(i - 1, i)?;
        let idx = root.preorder_index(&v).expect("nadirs are internal");
        blocks[levels[idx] as usize - 1].push(i);
    }
    OrderedPartition::new(blocks)
}

/// Inverse of [`tonks_partition`].
pub fn tonks_inverse(p: &OrderedPartition) -> LeveledTree {
    let block = p.block_of();
    // Leaves a..=b; the numbers between them are a+1..=b.
    fn build(a: u32, b: u32, block: &[usize]) -> Node<u32> {
        if a == b {
            return Node::Leaf(a);
        }
        let min = (a + 1..=b).map(|x| block[x as usize]).min().expect("nonempty");
        let mut children = Vec::new();
        let mut start = a;
        for x in a + 1..=b {
            if block[x as usize] == min {
                children.push(build(start, x - 1, block));
                start = x;
            }
        }
        children.push(build(start, b, block));
        Node::Internal(min as u32 + 1, children)
    }
    let root = build(0, p.ground_size() as u32, &block);
    LeveledTree::new(BaseKind::Psi, root).expect("an ordered partition yields a leveled tree")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn falling_numbers_examples() {
        let t: LeveledTree = "((0 1)@2 2)@1".parse().unwrap();
        assert_eq!(tonks_partition(&t).unwrap().to_string(), "{2},{1}");
        let c: LeveledTree = "(0 1 2 3)@1".parse().unwrap();
        assert_eq!(tonks_partition(&c).unwrap().to_string(), "{1,2,3}");
    }

    #[test]
    fn worked_value_from_its_inverse() {
        let p = OrderedPartition::new(vec![vec![4], vec![3, 5], vec![1], vec![2, 6, 7]]).unwrap();
        let t = tonks_inverse(&p);
        assert_eq!(t.to_string(), "(((0 (1 2)@4)@3 3)@2 (4 (5 6 7)@4)@2)@1");
        assert_eq!(tonks_partition(&t).unwrap(), p);
    }

    #[test]
    fn ordered_partition_counts() {
        let counts: Vec<usize> = (0..=4).map(|m| ordered_partitions(m).len()).collect();
        assert_eq!(counts, [1, 1, 3, 13, 75]);
    }

    #[test]
    fn refinement() {
        let fine = OrderedPartition::new(vec![vec![2], vec![1], vec![3]]).unwrap();
        let merged = OrderedPartition::new(vec![vec![1, 2], vec![3]]).unwrap();
        let skipped = OrderedPartition::new(vec![vec![2, 3], vec![1]]).unwrap();
        assert!(fine.refines(&merged));
        assert!(fine.refines(&fine));
        assert!(!fine.refines(&skipped));
        assert!(!merged.refines(&fine));
    }
}

use std::ops::Range;

use super::{is_connected, Graph, GraphError};

/// Largest `n` for a full labeled enumeration (`2^21` graphs at n = 7).
pub const ENUMERATION_MAX_N: usize = 7;

/// Hard limit for range enumeration; n = 8 has `2^28` labeled graphs and is
/// only reachable through an explicit opt-in.
pub(crate) const RANGE_ENUMERATION_MAX_N: usize = 8;

/// Bit position of the pair `{i, j}` in an enumeration mask, following graph6
/// column order: `(0,1), (0,2), (1,2), (0,3), ...`.
pub fn pair_index(i: usize, j: usize) -> usize {
    let (i, j) = if i < j { (i, j) } else { (j, i) };
    j * (j - 1) / 2 + i
}

/// Number of labeled simple graphs on `n` vertices.
pub fn labeled_graph_count(n: usize) -> u64 {
    1u64 << (n * n.saturating_sub(1) / 2)
}

/// The labeled graph whose edge set is the set bits of `mask`.
pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut g = Graph::empty(n);
    for j in 1..n {
        for i in 0..j {
            if mask >> pair_index(i, j) & 1 == 1 {
                g.add_edge(i, j).expect("in range");
            }
        }
    }
    g
}

fn check_order(n: usize, max: usize) -> Result<(), GraphError> {
    if n == 0 {
        return Err(GraphError::TooSmall { n, min: 1 });
    }
    if n > max {
        return Err(GraphError::TooLarge { n, max });
    }
    Ok(())
}

/// Labeled graphs with masks in `masks`, ascending, paired with their mask.
/// This is the sharding primitive for parallel census runs.
pub fn enumerate_mask_range(
    n: usize,
    masks: Range<u64>,
    connected_only: bool,
) -> Result<impl Iterator<Item = (u64, Graph)>, GraphError> {
    check_order(n, RANGE_ENUMERATION_MAX_N)?;
    let end = masks.end.min(labeled_graph_count(n));
    Ok((masks.start..end)
        .map(move |mask| (mask, graph_from_mask(n, mask)))
        .filter(move |(_, g)| !connected_only || is_connected(g)))
}

/// Every labeled simple graph on `n` vertices exactly once, in ascending mask order.
pub type LabeledGraphs = Box<dyn Iterator<Item = Graph> + Send>;

pub fn enumerate_labeled_graphs(
    n: usize,
    connected_only: bool,
) -> Result<LabeledGraphs, GraphError> {
    check_order(n, ENUMERATION_MAX_N)?;
    Ok(Box::new(
        enumerate_mask_range(n, 0..labeled_graph_count(n), connected_only)?.map(|(_, g)| g),
    ))
}

//! Total-support classification of square sparsity patterns.
//!
//! Sinkhorn-style balancing of a square matrix succeeds exactly when the
//! pattern has *total support*: at least one entry is nonzero, and every
//! nonzero entry lies on some nonzero permuted diagonal (a set of entries
//! with one from each row and each column). The check runs a maximum
//! bipartite matching (Hopcroft-Karp); an unmatched row means no nonzero
//! diagonal exists at all. Given one perfect matching, a nonzero entry lies
//! on some nonzero diagonal iff it is matched or lies on an alternating
//! cycle, which reduces to a strongly-connected-component test on the
//! matching-oriented graph.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::matrix::Matrix;
use crate::Error;

/// Pattern classification for square matrices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SupportClass {
    /// Every nonzero entry lies on a nonzero permuted diagonal.
    TotalSupport,
    /// A nonzero diagonal exists, but some nonzero entry is on none of them.
    SupportOnly,
    /// No nonzero permuted diagonal (includes the all-zero matrix).
    NoSupport,
}

/// Result of [`check_support`]. The witness (0-based row, col) is present
/// exactly for `SupportOnly` and names a nonzero entry that lies on no
/// nonzero permuted diagonal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SupportDiagnosis {
    pub classification: SupportClass,
    pub witness: Option<(usize, usize)>,
}

/// Classify the sparsity pattern of a square matrix. Rectangular input is a
/// shape error: a permuted diagonal needs one entry per row *and* per
/// column, which is impossible when m != n.
pub fn check_support(pattern: &Matrix) -> Result<SupportDiagnosis, Error> {
    if pattern.rows() != pattern.cols() {
        return Err(Error::NotSquare {
            rows: pattern.rows(),
            cols: pattern.cols(),
        });
    }
    let n = pattern.rows();
    let entries = pattern.nonzero_entries();
    if entries.is_empty() {
        return Ok(SupportDiagnosis {
            classification: SupportClass::NoSupport,
            witness: None,
        });
    }

    let mut adj = vec![Vec::new(); n];
    for &(i, j, _) in &entries {
        adj[i].push(j);
    }

    let matching = hopcroft_karp(&adj, n);
    if matching.size < n {
        return Ok(SupportDiagnosis {
            classification: SupportClass::NoSupport,
            witness: None,
        });
    }

    // Orient: unmatched edge row->col, matched edge col->row. An unmatched
    // nonzero (i, j) lies on some perfect matching iff i and j end up in the
    // same strongly connected component.
    // Nodes: 0..n are rows, n..2n are columns.
    let mut digraph = vec![Vec::new(); 2 * n];
    for &(i, j, _) in &entries {
        if matching.row_to_col[i] == Some(j) {
            digraph[n + j].push(i);
        } else {
            digraph[i].push(n + j);
        }
    }
    let comp = strongly_connected_components(&digraph);

    for &(i, j, _) in &entries {
        if matching.row_to_col[i] != Some(j) && comp[i] != comp[n + j] {
            return Ok(SupportDiagnosis {
                classification: SupportClass::SupportOnly,
                witness: Some((i, j)),
            });
        }
    }
    Ok(SupportDiagnosis {
        classification: SupportClass::TotalSupport,
        witness: None,
    })
}

struct Matching {
    row_to_col: Vec<Option<usize>>,
    size: usize,
}

/// Hopcroft-Karp maximum bipartite matching; rows on the left, columns on
/// the right.
fn hopcroft_karp(adj: &[Vec<usize>], n_cols: usize) -> Matching {
    let n_rows = adj.len();
    let mut row_to_col: Vec<Option<usize>> = vec![None; n_rows];
    let mut col_to_row: Vec<Option<usize>> = vec![None; n_cols];
    let inf = usize::MAX;
    let mut dist = vec![inf; n_rows];
    let mut size = 0;

    loop {
        // BFS layering from free rows.
        let mut queue = VecDeque::new();
        for (u, matched) in row_to_col.iter().enumerate() {
            if matched.is_none() {
                dist[u] = 0;
                queue.push_back(u);
            } else {
                dist[u] = inf;
            }
        }
        let mut found = false;
        while let Some(u) = queue.pop_front() {
            for &v in &adj[u] {
                match col_to_row[v] {
                    Some(u2) => {
                        if dist[u2] == inf {
                            dist[u2] = dist[u] + 1;
                            queue.push_back(u2);
                        }
                    }
                    None => found = true,
                }
            }
        }
        if !found {
            break;
        }
        for u in 0..n_rows {
            if row_to_col[u].is_none() && augment(u, adj, &mut row_to_col, &mut col_to_row, &mut dist) {
                size += 1;
            }
        }
    }

    Matching { row_to_col, size }
}

fn augment(
    u: usize,
    adj: &[Vec<usize>],
    row_to_col: &mut [Option<usize>],
    col_to_row: &mut [Option<usize>],
    dist: &mut [usize],
) -> bool {
    for &v in &adj[u] {
        match col_to_row[v] {
            None => {
                row_to_col[u] = Some(v);
                col_to_row[v] = Some(u);
                return true;
            }
            Some(u2) => {
                if dist[u2] == dist[u] + 1 && augment(u2, adj, row_to_col, col_to_row, dist) {
                    row_to_col[u] = Some(v);
                    col_to_row[v] = Some(u);
                    return true;
                }
            }
        }
    }
    dist[u] = usize::MAX;
    false
}

/// Iterative Tarjan SCC; returns the component id of each node.
fn strongly_connected_components(graph: &[Vec<usize>]) -> Vec<usize> {
    let n = graph.len();
    let unset = usize::MAX;
    let mut index = vec![unset; n];
    let mut lowlink = vec![0; n];
    let mut comp = vec![unset; n];
    let mut on_stack = vec![false; n];
    let mut stack: Vec<usize> = Vec::new();
    let mut next_index = 0;
    let mut comp_count = 0;

    // Explicit DFS frames: (node, next child position).
    let mut frames: Vec<(usize, usize)> = Vec::new();
    for start in 0..n {
        if index[start] != unset {
            continue;
        }
        frames.push((start, 0));
        index[start] = next_index;
        lowlink[start] = next_index;
        next_index += 1;
        stack.push(start);
        on_stack[start] = true;

        while let Some(&mut (v, ref mut child)) = frames.last_mut() {
            if *child < graph[v].len() {
                let w = graph[v][*child];
                *child += 1;
                if index[w] == unset {
                    index[w] = next_index;
                    lowlink[w] = next_index;
                    next_index += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    frames.push((w, 0));
                } else if on_stack[w] && index[w] < lowlink[v] {
                    lowlink[v] = index[w];
                }
            } else {
                frames.pop();
                if lowlink[v] == index[v] {
                    loop {
                        let w = stack.pop().expect("tarjan stack non-empty");
                        on_stack[w] = false;
                        comp[w] = comp_count;
                        if w == v {
                            break;
                        }
                    }
                    comp_count += 1;
                }
                if let Some(&(parent, _)) = frames.last() {
                    if lowlink[v] < lowlink[parent] {
                        lowlink[parent] = lowlink[v];
                    }
                }
            }
        }
    }
    comp
}

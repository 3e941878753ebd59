//! Minimum-cost bipartite assignment on a sparse edge list, by shortest
//! augmenting paths with potentials.
//!
//! Rows are matched one at a time; each round runs a Dijkstra-style scan
//! over reduced costs and the potentials keep every reduced cost
//! nonnegative. Pairs without an edge are simply absent, so an instance
//! where some row cannot reach a free column reports infeasibility instead
//! of relying on a sentinel cost.

const INF: i64 = i64::MAX / 4;

/// Matches every row to a distinct column minimizing total cost.
///
/// `adjacency[r]` lists `(column, cost)` pairs for row `r`. Returns the total
/// cost and the column chosen for each row, or `None` when no complete
/// matching of the rows exists. Ties prefer smaller column indices, so the
/// result is deterministic.
pub fn min_cost_assignment(
    rows: usize,
    cols: usize,
    adjacency: &[Vec<(usize, i64)>],
) -> Option<(i64, Vec<usize>)> {
    assert_eq!(adjacency.len(), rows);
    if rows > cols {
        return None;
    }
    let mut row_potential = vec![0i64; rows];
    let mut col_potential = vec![0i64; cols + 1];
    // col_match[c] = row currently matched to column c; index `cols` is the
    // virtual column that temporarily holds the row being inserted.
    let mut col_match: Vec<Option<usize>> = vec![None; cols + 1];

    for r0 in 0..rows {
        col_match[cols] = Some(r0);
        let mut min_reduced = vec![INF; cols];
        // Columns with no edge from the alternating tree stay unreached;
        // their sentinel never participates in delta bookkeeping.
        let mut reached = vec![false; cols];
        let mut came_from = vec![cols; cols];
        let mut done = vec![false; cols + 1];
        let mut j0 = cols;
        loop {
            done[j0] = true;
            let i0 = col_match[j0].expect("scanned columns are matched");
            let mut delta = INF;
            let mut j1 = usize::MAX;
            for &(j, w) in &adjacency[i0] {
                if !done[j] {
                    let cur = w - row_potential[i0] - col_potential[j];
                    if cur < min_reduced[j] {
                        min_reduced[j] = cur;
                        came_from[j] = j0;
                        reached[j] = true;
                    }
                }
            }
            for j in 0..cols {
                if !done[j] && reached[j] && min_reduced[j] < delta {
                    delta = min_reduced[j];
                    j1 = j;
                }
            }
            if j1 == usize::MAX {
                // No augmenting path: the instance cannot match row r0.
                return None;
            }
            for j in 0..=cols {
                if done[j] {
                    if let Some(r) = col_match[j] {
                        row_potential[r] += delta;
                    }
                    col_potential[j] -= delta;
                } else if j < cols && reached[j] {
                    min_reduced[j] -= delta;
                }
            }
            j0 = j1;
            if col_match[j0].is_none() {
                break;
            }
        }
        // Flip the alternating path back to the virtual column.
        while j0 != cols {
            let j1 = came_from[j0];
            col_match[j0] = col_match[j1];
            j0 = j1;
        }
    }

    let mut row_to_col = vec![usize::MAX; rows];
    for c in 0..cols {
        if let Some(r) = col_match[c] {
            row_to_col[r] = c;
        }
    }
    let mut total = 0i64;
    for r in 0..rows {
        let c = row_to_col[r];
        let w = adjacency[r]
            .iter()
            .find(|&&(j, _)| j == c)
            .map(|&(_, w)| w)
            .expect("matched pairs come from the adjacency");
        total += w;
    }
    Some((total, row_to_col))
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Exhaustive minimum over all injections of rows into columns.
    fn brute_force(rows: usize, cols: usize, adjacency: &[Vec<(usize, i64)>]) -> Option<i64> {
        fn rec(
            r: usize,
            rows: usize,
            used: &mut Vec<bool>,
            adjacency: &[Vec<(usize, i64)>],
            acc: i64,
            best: &mut Option<i64>,
        ) {
            if r == rows {
                *best = Some(best.map_or(acc, |b: i64| b.min(acc)));
                return;
            }
            for &(c, w) in &adjacency[r] {
                if !used[c] {
                    used[c] = true;
                    rec(r + 1, rows, used, adjacency, acc + w, best);
                    used[c] = false;
                }
            }
        }
        let mut best = None;
        rec(0, rows, &mut vec![false; cols], adjacency, 0, &mut best);
        best
    }

    #[test]
    fn dense_three_by_three() {
        let costs = [[8, 5, 9], [4, 2, 4], [7, 3, 8]];
        let adjacency: Vec<Vec<(usize, i64)>> = costs
            .iter()
            .map(|row| row.iter().enumerate().map(|(j, &w)| (j, w)).collect())
            .collect();
        let (total, cols) = min_cost_assignment(3, 3, &adjacency).unwrap();
        assert_eq!(total, 15);
        assert_eq!(cols.len(), 3);
        assert_eq!(total, brute_force(3, 3, &adjacency).unwrap());
    }

    #[test]
    fn infeasible_when_a_row_is_isolated() {
        let adjacency = vec![vec![(0, 1)], vec![]];
        assert!(min_cost_assignment(2, 2, &adjacency).is_none());
    }

    #[test]
    fn infeasible_when_rows_share_one_column() {
        let adjacency = vec![vec![(0, 1)], vec![(0, 1)]];
        assert!(min_cost_assignment(2, 2, &adjacency).is_none());
    }

    #[test]
    fn rectangular_leaves_columns_free() {
        let adjacency = vec![vec![(0, 5), (1, 1), (2, 9)]];
        let (total, cols) = min_cost_assignment(1, 3, &adjacency).unwrap();
        assert_eq!(total, 1);
        assert_eq!(cols, vec![1]);
    }

    #[test]
    fn matches_brute_force_on_random_sparse_instances() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha12Rng::seed_from_u64(7);
        for _case in 0..300 {
            let rows = rng.random_range(1..=5);
            let cols = rng.random_range(rows..=6);
            let mut adjacency: Vec<Vec<(usize, i64)>> = Vec::new();
            for _ in 0..rows {
                let mut row = Vec::new();
                for c in 0..cols {
                    if rng.random_bool(0.6) {
                        row.push((c, rng.random_range(0..20)));
                    }
                }
                adjacency.push(row);
            }
            let expected = brute_force(rows, cols, &adjacency);
            let got = min_cost_assignment(rows, cols, &adjacency).map(|(t, _)| t);
            assert_eq!(got, expected);
            if let Some((total, assign)) = min_cost_assignment(rows, cols, &adjacency) {
                // The reported matching must be injective and account for
                // the reported cost.
                let mut seen = vec![false; cols];
                let mut sum = 0;
                for (r, &c) in assign.iter().enumerate() {
                    assert!(!seen[c]);
                    seen[c] = true;
                    sum += adjacency[r].iter().find(|&&(j, _)| j == c).unwrap().1;
                }
                assert_eq!(sum, total);
            }
        }
    }
}

//! Bipartite matchings by augmenting paths. The left side is
//! `0..adj.len()`, and `adj[l]` is the mask of right neighbors of `l`.

use crate::bits::{self, Mask};

fn augment(adj: &[Mask], l: usize, seen: &mut Mask, mate_right: &mut [Option<usize>]) -> bool {
    for r in bits::ones(adj[l]) {
        if bits::contains(*seen, r) {
            continue;
        }
        *seen |= bits::bit(r);
        if mate_right[r].is_none_or(|l2| augment(adj, l2, seen, mate_right)) {
            mate_right[r] = Some(l);
            return true;
        }
    }
    false
}

/// A maximum matching as `mate[l]`, the right partner of each left vertex.
pub(crate) fn maximum_matching(adj: &[Mask], n_right: usize) -> Vec<Option<usize>> {
    let mut mate_right = vec![None; n_right];
    for l in 0..adj.len() {
        let mut seen = 0;
        augment(adj, l, &mut seen, &mut mate_right);
    }
    let mut mate = vec![None; adj.len()];
    for (r, l) in mate_right.iter().enumerate() {
        if let Some(l) = l {
            mate[*l] = Some(r);
        }
    }
    mate
}

/// A matching saturating the left side, or a Hall violator `(S, N(S))` with
/// `|N(S)| < |S|` found by alternating search from an unmatched left vertex.
pub(crate) fn left_perfect_matching(adj: &[Mask], n_right: usize) -> Result<Vec<usize>, (Mask, Mask)> {
    let mate = maximum_matching(adj, n_right);
    let Some(start) = mate.iter().position(Option::is_none) else {
        return Ok(mate.into_iter().map(|m| m.unwrap_or_default()).collect());
    };
    let mut owner = vec![None; n_right];
    for (l, m) in mate.iter().enumerate() {
        if let Some(r) = m {
            owner[*r] = Some(l);
        }
    }
    let (mut left, mut right) = (bits::bit(start), 0);
    let mut queue = vec![start];
    while let Some(l) = queue.pop() {
        for r in bits::ones(adj[l] & !right) {
            right |= bits::bit(r);
            if let Some(l2) = owner[r] {
                if !bits::contains(left, l2) {
                    left |= bits::bit(l2);
                    queue.push(l2);
                }
            }
        }
    }
    Err((left, right))
}

/// For a perfect matching `mate`, a cycle of left vertices `l_0, ..., l_k`
/// with `l_i` adjacent to `mate[l_{i+1}]`. Rematching along it gives a
/// second perfect matching, and none exists without one.
pub(crate) fn alternating_cycle(adj: &[Mask], mate: &[usize]) -> Option<Vec<usize>> {
    let n = adj.len();
    let mut owner = vec![usize::MAX; n];
    for (l, &r) in mate.iter().enumerate() {
        owner[r] = l;
    }
    let succ = |l: usize| -> Vec<usize> {
        bits::ones(adj[l])
            .map(|r| owner[r])
            .filter(|&l2| l2 != l && l2 != usize::MAX)
            .collect()
    };
    // 0 = unvisited, 1 = on the stack, 2 = done.
    let mut state = vec![0u8; n];
    let mut stack: Vec<usize> = Vec::new();
    fn dfs(
        l: usize,
        succ: &dyn Fn(usize) -> Vec<usize>,
        state: &mut [u8],
        stack: &mut Vec<usize>,
    ) -> Option<Vec<usize>> {
        state[l] = 1;
        stack.push(l);
        for l2 in succ(l) {
            if state[l2] == 1 {
                let at = stack.iter().position(|&x| x == l2).unwrap_or(0);
                return Some(stack[at..].to_vec());
            }
            if state[l2] == 0 {
                if let Some(c) = dfs(l2, succ, state, stack) {
                    return Some(c);
                }
            }
        }
        stack.pop();
        state[l] = 2;
        None
    }
    (0..n).find_map(|l| {
        if state[l] == 0 {
            dfs(l, &succ, &mut state, &mut stack)
        } else {
            None
        }
    })
}

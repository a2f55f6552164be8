//! Maximum bipartite matching by augmenting paths (Kuhn), seeded greedily.

/// Matches left vertices `0..adj.len()` to right vertices `0..right_count`.
/// `adj[l]` lists the admissible right vertices of `l` in preference order.
/// Returns `mate[l]`.
pub fn max_matching(adj: &[Vec<usize>], right_count: usize) -> Vec<Option<usize>> {
    let mut mate_left: Vec<Option<usize>> = vec![None; adj.len()];
    let mut mate_right: Vec<Option<usize>> = vec![None; right_count];

    // greedy seed: first free preference
    for (l, prefs) in adj.iter().enumerate() {
        if let Some(&r) = prefs.iter().find(|&&r| mate_right[r].is_none()) {
            mate_left[l] = Some(r);
            mate_right[r] = Some(l);
        }
    }

    let mut seen = vec![false; right_count];
    for l in 0..adj.len() {
        if mate_left[l].is_some() {
            continue;
        }
        seen.iter_mut().for_each(|s| *s = false);
        augment(l, adj, &mut mate_left, &mut mate_right, &mut seen);
    }
    mate_left
}

fn augment(
    l: usize,
    adj: &[Vec<usize>],
    mate_left: &mut [Option<usize>],
    mate_right: &mut [Option<usize>],
    seen: &mut [bool],
) -> bool {
    for &r in &adj[l] {
        if seen[r] {
            continue;
        }
        seen[r] = true;
        let free = match mate_right[r] {
            None => true,
            Some(other) => augment(other, adj, mate_left, mate_right, seen),
        };
        if free {
            mate_left[l] = Some(r);
            mate_right[r] = Some(l);
            return true;
        }
    }
    false
}

/// True iff every left vertex can be matched.
pub fn has_perfect_left_matching(adj: &[Vec<usize>], right_count: usize) -> bool {
    max_matching(adj, right_count).iter().all(Option::is_some)
}

//! Bounded lattices given by an order matrix.

/// Reflexive-transitive closure of a covering relation on `n` points.
pub fn order_from_covers(n: usize, covers: &[(usize, usize)]) -> Vec<bool> {
    let mut leq = vec![false; n * n];
    for i in 0..n {
        leq[i * n + i] = true;
    }
    for &(a, b) in covers {
        leq[a * n + b] = true;
    }
    for k in 0..n {
        for i in 0..n {
            if leq[i * n + k] {
                for j in 0..n {
                    if leq[k * n + j] {
                        leq[i * n + j] = true;
                    }
                }
            }
        }
    }
    leq
}

/// Join and meet tables of a partial order, or `None` when some pair lacks a
/// least upper or greatest lower bound.
pub fn join_meet_tables(n: usize, leq: &[bool]) -> Option<(Vec<usize>, Vec<usize>)> {
    let le = |a: usize, b: usize| leq[a * n + b];
    let mut join = vec![0; n * n];
    let mut meet = vec![0; n * n];
    for a in 0..n {
        for b in a..n {
            let ub: Vec<usize> = (0..n).filter(|&c| le(a, c) && le(b, c)).collect();
            let j = ub.iter().copied().find(|&c| ub.iter().all(|&u| le(c, u)))?;
            let lb: Vec<usize> = (0..n).filter(|&c| le(c, a) && le(c, b)).collect();
            let m = lb.iter().copied().find(|&c| lb.iter().all(|&l| le(l, c)))?;
            join[a * n + b] = j;
            join[b * n + a] = j;
            meet[a * n + b] = m;
            meet[b * n + a] = m;
        }
    }
    Some((join, meet))
}

//! Lattice points of boxes `[0,b₁]×…×[0,b_d]`.

/// All points of the box, in lexicographic order.
pub fn box_points(bounds: &[i64]) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::with_capacity(bounds.len())];
    for &b in bounds {
        let mut next = Vec::with_capacity(out.len() * (b.max(0) as usize + 1));
        for p in &out {
            for v in 0..=b {
                let mut q = p.clone();
                q.push(v);
                next.push(q);
            }
        }
        out = next;
    }
    out
}

/// Points of the box with coordinate sum at most `max_sum` (if given), in
/// graded lexicographic order.
pub fn graded_points(bounds: &[i64], max_sum: Option<i64>) -> Vec<Vec<i64>> {
    let mut pts: Vec<Vec<i64>> =
        box_points(bounds).into_iter().filter(|p| max_sum.is_none_or(|m| p.iter().sum::<i64>() <= m)).collect();
    pts.sort_by_cached_key(|p| (p.iter().sum::<i64>(), p.clone()));
    pts
}

pub fn leq(a: &[i64], b: &[i64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

pub fn sub(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn add(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

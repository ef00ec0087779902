use std::ops::ControlFlow;

use crate::ring::{Elem, Meter};

/// Tuple number `t` among `base^len` tuples, first entry most significant,
/// so increasing `t` walks the tuples in lexicographic order.
pub(crate) fn lex_tuple(mut t: usize, base: usize, len: usize) -> Vec<Elem> {
    let mut out = vec![0; len];
    for slot in out.iter_mut().rev() {
        *slot = t % base;
        t /= base;
    }
    out
}

/// Side of the unknown factor in a pruned sweep.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Order {
    /// Products `f·g`.
    Right,
    /// Products `g·f`.
    Left,
}

/// Enumerates coefficient tuples `g` of length `len` in lexicographic order
/// such that coefficient `k < len` of the product with `f` passes
/// `ok(k, c_k)`. Choosing `g_k` fixes `c_k`, so failing prefixes are cut
/// immediately. `visit` sees each surviving tuple and may stop the sweep.
pub(crate) fn pruned_factors<T>(
    m: &Meter,
    f: &[Elem],
    len: usize,
    order: Order,
    ok: &dyn Fn(usize, Elem) -> bool,
    visit: &mut dyn FnMut(&[Elem]) -> ControlFlow<T>,
) -> Option<T> {
    let mut g = vec![m.ring().zero(); len];
    match dfs(m, f, &mut g, 0, order, ok, visit) {
        ControlFlow::Break(t) => Some(t),
        ControlFlow::Continue(()) => None,
    }
}

fn dfs<T>(
    m: &Meter,
    f: &[Elem],
    g: &mut Vec<Elem>,
    k: usize,
    order: Order,
    ok: &dyn Fn(usize, Elem) -> bool,
    visit: &mut dyn FnMut(&[Elem]) -> ControlFlow<T>,
) -> ControlFlow<T> {
    if k == g.len() {
        return visit(g);
    }
    let r = m.ring();
    let z = r.zero();
    // Part of c_k that does not involve g_k.
    let mut partial = z;
    for i in 1..=k.min(f.len().saturating_sub(1)) {
        let p = match order {
            Order::Right => m.mul(f[i], g[k - i]),
            Order::Left => m.mul(g[k - i], f[i]),
        };
        partial = m.add(partial, p);
    }
    let f0 = f.first().copied().unwrap_or(z);
    for x in r.elements() {
        let lead = match order {
            Order::Right => m.mul(f0, x),
            Order::Left => m.mul(x, f0),
        };
        if ok(k, m.add(partial, lead)) {
            g[k] = x;
            dfs(m, f, g, k + 1, order, ok, visit)?;
        }
    }
    g[k] = z;
    ControlFlow::Continue(())
}

//! Closed-form bounds, threshold constants, goodness rules, and the
//! extremal lower-bound colorings.
//!
//! All formula arithmetic is exact rational; the threshold predicates
//! involve divisions where rounding could flip an inequality.

use crate::coloring::{EdgeColor, TwoColoring};
use crate::graph::Graph;
use num_rational::Ratio;
use serde::Serialize;
use thiserror::Error;

pub type Rat = Ratio<i128>;

pub fn rat(p: i128, q: i128) -> Rat {
    Ratio::new(p, q)
}

/// Renders a rational as `p/q` (or plain `p` when integral), for reports.
pub fn rat_string(r: &Rat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BoundsError {
    #[error("the lower bound needs n >= t, got n={n}, t={t}")]
    OrderBelowSurplus { n: usize, t: usize },
    #[error("the order/size bound needs n >= 2 and m >= 1, got n={n}, m={m}")]
    DegenerateGraph { n: usize, m: usize },
    #[error("applicability analysis requires a connected graph")]
    Disconnected,
    #[error("parameters must be positive")]
    NonPositive,
}

/// General lower bound for a connected graph of order `n >= t` against
/// `t F_k`: with chromatic number 3 and surplus `t`, it reads `2(n-1) + t`.
pub fn burr_lower_bound(n: usize, k: usize, t: usize) -> Result<usize, BoundsError> {
    if k == 0 || t == 0 {
        return Err(BoundsError::NonPositive);
    }
    if n < t {
        return Err(BoundsError::OrderBelowSurplus { n, t });
    }
    Ok(2 * (n - 1) + t)
}

/// Order/size upper bound `r(G, F_k) <= n + 2mk - 2m/n` for a graph with no
/// isolated vertices.
pub fn size_upper_bound(n: usize, m: usize, k: usize) -> Result<Rat, BoundsError> {
    if k == 0 {
        return Err(BoundsError::NonPositive);
    }
    if n < 2 || m < 1 {
        return Err(BoundsError::DegenerateGraph { n, m });
    }
    let (n, m, k) = (n as i128, m as i128, k as i128);
    Ok(Rat::from_integer(n + 2 * m * k) - rat(2 * m, n))
}

/// `r(G, tF_k) <= r(G, F_k) + (t-1)(2k+1)` on top of the order/size bound.
pub fn union_size_upper_bound(n: usize, m: usize, k: usize, t: usize) -> Result<Rat, BoundsError> {
    if t == 0 {
        return Err(BoundsError::NonPositive);
    }
    Ok(size_upper_bound(n, m, k)? + Rat::from_integer(((t - 1) * (2 * k + 1)) as i128))
}

/// `r(G, tF_k) <= (2n - 1) + (t-1)(2k+1)`, valid whenever the single-fan
/// goodness theorem applies to `G`.
pub fn union_goodness_upper_bound(n: usize, k: usize, t: usize) -> usize {
    2 * n - 1 + (t - 1) * (2 * k + 1)
}

// ---------------------------------------------------------------------------
// The parameterized threshold family
// ---------------------------------------------------------------------------

/// The trade-off constants at parameter `c`: the single-fan theorem holds
/// for `n >= order_min_single` and at most `n(1 + 1/edge_denom_single)`
/// edges, and the union version with the `_union` pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThresholdFamily {
    pub c: Rat,
    /// `g(k,c) = (2c+12)k^3 + (c+30)k^2 - 4k - 9`
    pub edge_denom_single: Rat,
    /// `f(k,c) = (8k^3+4k^2-36k+19) g(k,c) / (c k^2)`
    pub order_min_single: Rat,
    /// `G(k,t,c) = 2(c+6)k^3 t + (c+30)k^2 t - 6k^2 + 18kt + 3t - 13k - 6 + c/4`
    pub edge_denom_union: Rat,
    /// `F(k,t,c) = (8kt+34t-6) G(k,t,c) / c`
    pub order_min_union: Rat,
}

/// Evaluates the threshold family exactly at `(k, t, c)`.
pub fn threshold_family(k: usize, t: usize, c: Rat) -> Result<ThresholdFamily, BoundsError> {
    if k == 0 || t == 0 || c <= Rat::from_integer(0) {
        return Err(BoundsError::NonPositive);
    }
    let ki = Rat::from_integer(k as i128);
    let ti = Rat::from_integer(t as i128);
    let (k2, k3) = (ki * ki, ki * ki * ki);
    let two = Rat::from_integer(2);
    let g = (two * c + rat(12, 1)) * k3 + (c + rat(30, 1)) * k2 - rat(4, 1) * ki - rat(9, 1);
    let f = (rat(8, 1) * k3 + rat(4, 1) * k2 - rat(36, 1) * ki + rat(19, 1)) * g / (c * k2);
    let big_g = two * (c + rat(6, 1)) * k3 * ti + (c + rat(30, 1)) * k2 * ti - rat(6, 1) * k2
        + rat(18, 1) * ki * ti
        + rat(3, 1) * ti
        - rat(13, 1) * ki
        - rat(6, 1)
        + c / rat(4, 1);
    let big_f = (rat(8, 1) * ki * ti + rat(34, 1) * ti - rat(6, 1)) * big_g / c;
    Ok(ThresholdFamily {
        c,
        edge_denom_single: g,
        order_min_single: f,
        edge_denom_union: big_g,
        order_min_union: big_f,
    })
}

// ---------------------------------------------------------------------------
// Applicability report
// ---------------------------------------------------------------------------

/// One goodness rule and whether it covers the instance.
#[derive(Clone, Debug, Serialize)]
pub struct RuleCheck {
    pub rule: &'static str,
    pub applies: bool,
    pub reason: String,
}

/// Every bound and threshold for a given `(G, k, t)`.
#[derive(Clone, Debug, Serialize)]
pub struct BoundsReport {
    pub n: usize,
    pub m: usize,
    pub k: usize,
    pub t: usize,
    pub burr_lower: usize,
    #[serde(serialize_with = "ser_rat")]
    pub size_upper: Rat,
    #[serde(serialize_with = "ser_rat")]
    pub union_size_upper: Rat,
    pub union_goodness_upper: usize,
    /// `2n + t - 2` exactly when some rule applies.
    pub theorem_value: Option<usize>,
    /// Checks in priority order; the first applying rule is the tightest.
    pub applicable: Vec<RuleCheck>,
}

fn ser_rat<S: serde::Serializer>(r: &Rat, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&rat_string(r))
}

fn is_tree(g: &Graph) -> bool {
    g.is_connected() && g.size() + 1 == g.order()
}

fn is_star(g: &Graph) -> bool {
    is_tree(g) && g.order() >= 2 && g.vertices().any(|v| g.degree(v) == g.order() - 1)
}

fn is_unicyclic(g: &Graph) -> bool {
    g.is_connected() && g.size() == g.order()
}

/// Exact check of `m <= n (1 + 1/denom)`.
fn edge_bound(n: usize, m: usize, denom: i128) -> bool {
    (m as i128 - n as i128) * denom <= n as i128
}

/// Evaluates every goodness rule on `(g, k, t)` and assembles the report.
pub fn applicability(g: &Graph, k: usize, t: usize) -> Result<BoundsReport, BoundsError> {
    if k == 0 || t == 0 {
        return Err(BoundsError::NonPositive);
    }
    if !g.is_connected() {
        return Err(BoundsError::Disconnected);
    }
    let (n, m) = (g.order(), g.size());
    let ki = k as i128;
    let ti = t as i128;
    let mut checks = Vec::new();

    // Trees versus a single triangle (k = 1, t = 1).
    checks.push(RuleCheck {
        rule: "tree_vs_triangle",
        applies: t == 1 && k == 1 && is_tree(g),
        reason: if t != 1 {
            "only covers a single fan".into()
        } else if k != 1 {
            "only covers k = 1 (a triangle)".into()
        } else if !is_tree(g) {
            "graph is not a tree".into()
        } else {
            "tree versus a triangle".into()
        },
    });

    // Stars versus a single fan.
    let star_single_ok = if matches!(k, 3..=5) { n >= 6 * (k - 1) } else { n >= k * k - k + 1 };
    checks.push(RuleCheck {
        rule: "star_fan",
        applies: t == 1 && is_star(g) && star_single_ok,
        reason: if t != 1 {
            "only covers a single fan".into()
        } else if !is_star(g) {
            "graph is not a star".into()
        } else if !star_single_ok {
            format!("needs n >= {}", if matches!(k, 3..=5) { 6 * (k - 1) } else { k * k - k + 1 })
        } else {
            "star at sufficient order".into()
        },
    });

    // Trees versus a single fan.
    let tree_fan_ok = n as i128 >= 3 * ki * ki - 2 * ki - 1;
    checks.push(RuleCheck {
        rule: "tree_fan",
        applies: t == 1 && is_tree(g) && tree_fan_ok,
        reason: if t != 1 {
            "only covers a single fan".into()
        } else if !is_tree(g) {
            "graph is not a tree".into()
        } else if !tree_fan_ok {
            format!("needs n >= 3k^2-2k-1 = {}", 3 * ki * ki - 2 * ki - 1)
        } else {
            "tree at sufficient order".into()
        },
    });

    // Unicyclic graphs versus a single fan (k >= 18).
    let uni_ok = k >= 18 && n >= k * k - k + 1;
    checks.push(RuleCheck {
        rule: "unicyclic_fan",
        applies: t == 1 && is_unicyclic(g) && uni_ok,
        reason: if t != 1 {
            "only covers a single fan".into()
        } else if !is_unicyclic(g) {
            "graph is not unicyclic".into()
        } else if k < 18 {
            "needs k >= 18".into()
        } else if n < k * k - k + 1 {
            format!("needs n >= k^2-k+1 = {}", k * k - k + 1)
        } else {
            "unicyclic at sufficient order".into()
        },
    });

    // Sparse connected graphs versus a single fan.
    let sf_order = n as i128 >= 36 * ki.pow(4);
    let sf_denom = 204 * ki.pow(3) + 126 * ki.pow(2);
    let sf_edges = edge_bound(n, m, sf_denom);
    checks.push(RuleCheck {
        rule: "sparse_fan",
        applies: t == 1 && sf_order && sf_edges,
        reason: if t != 1 {
            "only covers a single fan".into()
        } else if !sf_order {
            format!("needs n >= 36k^4 = {}", 36 * ki.pow(4))
        } else if !sf_edges {
            format!("needs m <= n(1 + 1/{sf_denom}), i.e. m - n <= {}", rat_string(&rat(n as i128, sf_denom)))
        } else {
            "within the sparse single-fan range".into()
        },
    });

    // Stars versus unions of fans.
    let su_ok = n >= (12 * t * k + 2 * k).max(4 * t * k * k);
    checks.push(RuleCheck {
        rule: "star_union_fan",
        applies: is_star(g) && su_ok,
        reason: if !is_star(g) {
            "graph is not a star".into()
        } else if !su_ok {
            format!("needs n >= max(12tk+2k, 4tk^2) = {}", (12 * t * k + 2 * k).max(4 * t * k * k))
        } else {
            "star at sufficient order".into()
        },
    });

    // Sparse connected graphs versus unions of fans.
    let uf_order = n as i128 >= 161 * ti.pow(2) * ki.pow(4);
    let uf_denom = 204 * ti * ki.pow(3) + 147 * ti * ki.pow(2);
    let uf_edges = edge_bound(n, m, uf_denom);
    checks.push(RuleCheck {
        rule: "sparse_union_fan",
        applies: uf_order && uf_edges,
        reason: if !uf_order {
            format!("needs n >= 161t^2k^4 = {}", 161 * ti.pow(2) * ki.pow(4))
        } else if !uf_edges {
            format!("needs m <= n(1 + 1/{uf_denom})")
        } else {
            "within the sparse union range".into()
        },
    });

    let theorem_value = checks.iter().any(|c| c.applies).then_some(2 * n + t - 2);
    let burr_lower = burr_lower_bound(n, k, t)?;
    if let Some(v) = theorem_value {
        debug_assert_eq!(burr_lower, v);
    }
    Ok(BoundsReport {
        n,
        m,
        k,
        t,
        burr_lower,
        size_upper: size_upper_bound(n.max(2), m.max(1), k)?,
        union_size_upper: union_size_upper_bound(n.max(2), m.max(1), k, t)?,
        union_goodness_upper: union_goodness_upper_bound(n, k, t),
        theorem_value,
        applicable: checks,
    })
}

// ---------------------------------------------------------------------------
// Extremal colorings
// ---------------------------------------------------------------------------

/// The standard witness on `K_{2n+t-3}`: two red cliques of order `n - 1`
/// and a blue rest of `t - 1` vertices. Every red component has order at
/// most `n - 1`, and no blue `t F_k` exists: blue triangles all meet the
/// `t - 1` extra vertices, so `t` disjoint fans cannot fit.
pub fn build_extremal_coloring(n: usize, k: usize, t: usize) -> Result<TwoColoring, BoundsError> {
    if n < 2 || k == 0 || t == 0 {
        return Err(BoundsError::NonPositive);
    }
    let part = |v: usize| -> usize {
        if v < n - 1 {
            0
        } else if v < 2 * (n - 1) {
            1
        } else {
            2
        }
    };
    Ok(TwoColoring::from_fn(2 * n + t - 3, |u, v| {
        if part(u) == part(v) && part(u) != 2 {
            EdgeColor::Red
        } else {
            EdgeColor::Blue
        }
    }))
}

//! Seeded random formula generation for property checks and fuzz corpora.

use rand::Rng;

use crate::formula::Formula;

/// Random formulas over a fixed variable pool, up to a maximum depth.
///
/// Leaves are variables; inner nodes are `¬`, `∧`, `∨`, `→` (and `↔` when
/// enabled). Depth follows [`Formula::depth`], so a bare variable has
/// depth 1.
#[derive(Debug, Clone)]
pub struct FormulaGen {
    vars: Vec<String>,
    max_depth: usize,
    leaf_weight: u32,
    with_iff: bool,
}

impl FormulaGen {
    /// # Panics
    ///
    /// If `vars` is empty.
    pub fn new<S: Into<String>>(vars: impl IntoIterator<Item = S>, max_depth: usize) -> Self {
        let vars: Vec<String> = vars.into_iter().map(Into::into).collect();
        assert!(!vars.is_empty(), "variable pool is empty");
        FormulaGen {
            vars,
            max_depth,
            leaf_weight: 1,
            with_iff: false,
        }
    }

    /// Relative weight of stopping early at an inner position (default 1,
    /// against 4 or 5 connectives).
    pub fn leaf_weight(mut self, w: u32) -> Self {
        self.leaf_weight = w;
        self
    }

    pub fn with_iff(mut self, on: bool) -> Self {
        self.with_iff = on;
        self
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> Formula {
        self.sample_depth(rng, self.max_depth)
    }

    fn leaf<R: Rng + ?Sized>(&self, rng: &mut R) -> Formula {
        Formula::var(self.vars[rng.gen_range(0..self.vars.len())].clone())
    }

    fn sample_depth<R: Rng + ?Sized>(&self, rng: &mut R, depth: usize) -> Formula {
        if depth <= 1 {
            return self.leaf(rng);
        }
        let ops = if self.with_iff { 5 } else { 4 };
        let pick = rng.gen_range(0..self.leaf_weight + ops);
        if pick < self.leaf_weight {
            return self.leaf(rng);
        }
        let mut sub = || self.sample_depth(rng, depth - 1);
        match pick - self.leaf_weight {
            0 => Formula::not(sub()),
            1 => Formula::and(sub(), sub()),
            2 => Formula::or(sub(), sub()),
            3 => Formula::implies(sub(), sub()),
            _ => Formula::iff(sub(), sub()),
        }
    }
}

/// `p`, `q`, `r`, `s`, then `p4`, `p5`, … for larger pools.
pub fn var_pool(n: usize) -> Vec<String> {
    const BASE: [&str; 4] = ["p", "q", "r", "s"];
    (0..n)
        .map(|i| {
            BASE.get(i)
                .map_or_else(|| format!("p{i}"), |s| s.to_string())
        })
        .collect()
}

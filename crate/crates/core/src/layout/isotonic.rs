//! Least-squares monotone regression of configuration distances on geodesic
//! order (pool-adjacent-violators).
//!
//! Pairs with exactly equal geodesic distance form one tie group that must
//! receive a single fitted value, so groups (not pairs) are the units being
//! pooled.

/// Fitted values aligned with the input pairs.
#[derive(Debug, Clone, PartialEq)]
pub struct MonotoneFit {
    pub fitted: Vec<f64>,
}

/// Precomputed geodesic ordering and tie groups, reusable across fits.
#[derive(Debug, Clone)]
pub struct MonotoneFitter {
    order: Vec<usize>,
    /// `(start, end)` ranges into `order`, one per tie group.
    groups: Vec<(usize, usize)>,
}

impl MonotoneFitter {
    pub fn new(geodesic: &[f64]) -> Self {
        let mut order: Vec<usize> = (0..geodesic.len()).collect();
        order.sort_by(|&a, &b| geodesic[a].total_cmp(&geodesic[b]).then(a.cmp(&b)));
        let mut groups = Vec::new();
        let mut start = 0;
        while start < order.len() {
            let mut end = start + 1;
            while end < order.len() && geodesic[order[end]] == geodesic[order[start]] {
                end += 1;
            }
            groups.push((start, end));
            start = end;
        }
        MonotoneFitter { order, groups }
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// Monotone fit of `config` (aligned with the geodesic values given to
    /// [`MonotoneFitter::new`]).
    pub fn fit(&self, config: &[f64]) -> MonotoneFit {
        assert_eq!(config.len(), self.order.len(), "pair count mismatch");

        // stack of pooled blocks: (first group, one past last group, sum, count)
        let mut blocks: Vec<(usize, usize, f64, f64)> = Vec::with_capacity(self.groups.len());
        for (g, &(s, e)) in self.groups.iter().enumerate() {
            let sum: f64 = self.order[s..e].iter().map(|&p| config[p]).sum();
            let mut cur = (g, g + 1, sum, (e - s) as f64);
            while let Some(&prev) = blocks.last() {
                // prev mean > cur mean, without dividing
                if prev.2 * cur.3 > cur.2 * prev.3 {
                    blocks.pop();
                    cur = (prev.0, cur.1, prev.2 + cur.2, prev.3 + cur.3);
                } else {
                    break;
                }
            }
            blocks.push(cur);
        }

        let mut fitted = vec![0.0; config.len()];
        for &(g0, g1, _, _) in &blocks {
            let (s, e) = (self.groups[g0].0, self.groups[g1 - 1].1);
            let members = &self.order[s..e];
            let mean = members.iter().map(|&p| config[p]).sum::<f64>() / members.len() as f64;
            for &p in members {
                fitted[p] = mean;
            }
        }
        MonotoneFit { fitted }
    }
}

/// One-shot [`MonotoneFitter`]: fit `config` monotonically in `geodesic`.
pub fn monotone_fit(geodesic: &[f64], config: &[f64]) -> MonotoneFit {
    MonotoneFitter::new(geodesic).fit(config)
}

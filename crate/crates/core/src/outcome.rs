use std::collections::BTreeMap;

/// Probabilities over discrete measurement outcomes, kept in key order so that
/// iteration and output are deterministic.
#[derive(Debug, Clone, PartialEq)]
pub struct OutcomeDistribution<K: Ord> {
    probs: BTreeMap<K, f64>,
}

impl<K: Ord> Default for OutcomeDistribution<K> {
    fn default() -> Self {
        Self {
            probs: BTreeMap::new(),
        }
    }
}

impl<K: Ord + Clone> OutcomeDistribution<K> {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds `p` to the probability of `key`.
    pub fn add(&mut self, key: K, p: f64) {
        *self.probs.entry(key).or_insert(0.0) += p;
    }

    /// Probability of `key`, zero when the outcome never occurs.
    pub fn get(&self, key: &K) -> f64 {
        self.probs.get(key).copied().unwrap_or(0.0)
    }

    pub fn total(&self) -> f64 {
        self.probs.values().sum()
    }

    pub fn len(&self) -> usize {
        self.probs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.probs.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, f64)> {
        self.probs.iter().map(|(k, &p)| (k, p))
    }

    /// Largest absolute difference over the union of both supports.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.probs
            .keys()
            .chain(other.probs.keys())
            .map(|k| (self.get(k) - other.get(k)).abs())
            .fold(0.0, f64::max)
    }

    /// Total-variation distance, half the L1 distance.
    pub fn total_variation(&self, other: &Self) -> f64 {
        let mut keys: Vec<&K> = self.probs.keys().chain(other.probs.keys()).collect();
        keys.sort();
        keys.dedup();
        0.5 * keys
            .into_iter()
            .map(|k| (self.get(k) - other.get(k)).abs())
            .sum::<f64>()
    }
}

impl<K: Ord> FromIterator<(K, f64)> for OutcomeDistribution<K> {
    fn from_iter<I: IntoIterator<Item = (K, f64)>>(iter: I) -> Self {
        let mut probs = BTreeMap::new();
        for (k, p) in iter {
            *probs.entry(k).or_insert(0.0) += p;
        }
        Self { probs }
    }
}

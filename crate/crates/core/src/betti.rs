//! Graded and multigraded Betti tables of an ideal.
//!
//! Index `i` counts homological degree in a resolution of the ideal `I`
//! itself (`i = 0` at the generators), so `beta_i(I) = beta_{i+1}(S/I)`.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

/// One nonzero entry of a graded Betti table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiEntry {
    pub i: usize,
    pub degree: u32,
    pub rank: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BettiTable {
    multigraded: Option<BTreeMap<(usize, Vec<u32>), usize>>,
    graded: BTreeMap<(usize, u32), usize>,
}

impl BettiTable {
    /// Build from multigraded ranks; zero ranks are dropped.
    pub fn from_multigraded(entries: BTreeMap<(usize, Vec<u32>), usize>) -> Self {
        let entries: BTreeMap<_, _> = entries.into_iter().filter(|(_, r)| *r > 0).collect();
        let mut graded = BTreeMap::new();
        for ((i, b), r) in &entries {
            *graded.entry((*i, b.iter().sum::<u32>())).or_insert(0) += r;
        }
        BettiTable {
            multigraded: Some(entries),
            graded,
        }
    }

    /// Build from total-degree ranks; zero ranks are dropped.
    pub fn from_graded(entries: BTreeMap<(usize, u32), usize>) -> Self {
        BettiTable {
            multigraded: None,
            graded: entries.into_iter().filter(|(_, r)| *r > 0).collect(),
        }
    }

    pub fn multigraded(&self) -> Option<&BTreeMap<(usize, Vec<u32>), usize>> {
        self.multigraded.as_ref()
    }

    pub fn graded(&self) -> &BTreeMap<(usize, u32), usize> {
        &self.graded
    }

    pub fn is_empty(&self) -> bool {
        self.graded.is_empty()
    }

    pub fn rank(&self, i: usize, degree: u32) -> usize {
        self.graded.get(&(i, degree)).copied().unwrap_or(0)
    }

    pub fn multigraded_rank(&self, i: usize, b: &[u32]) -> usize {
        self.multigraded
            .as_ref()
            .and_then(|m| m.get(&(i, b.to_vec())).copied())
            .unwrap_or(0)
    }

    /// Total rank of each free module, `i = 0, 1, ...`.
    pub fn totals(&self) -> Vec<usize> {
        let len = self.graded.keys().map(|(i, _)| i + 1).max().unwrap_or(0);
        let mut out = vec![0; len];
        for ((i, _), r) in &self.graded {
            out[*i] += r;
        }
        out
    }

    /// `max(degree - i)` over nonzero entries; `None` for an empty table.
    pub fn regularity(&self) -> Option<i64> {
        self.graded
            .keys()
            .map(|(i, d)| *d as i64 - *i as i64)
            .max()
    }

    pub fn entries(&self) -> Vec<BettiEntry> {
        self.graded
            .iter()
            .map(|((i, d), r)| BettiEntry {
                i: *i,
                degree: *d,
                rank: *r,
            })
            .collect()
    }

    /// Compare total-degree ranks only.
    pub fn graded_eq(&self, other: &BettiTable) -> bool {
        self.graded == other.graded
    }

    /// Flat JSON form: `{"regularity": r, "betti": [{i, degree, rank}, ...]}`.
    pub fn to_json(&self) -> Value {
        json!({
            "regularity": self.regularity(),
            "betti": self.entries(),
        })
    }

    /// Rows are homological indices `i`; column `j` of row `i` holds the rank
    /// in degree `i + j`. Zero entries print as `.`.
    pub fn render_text(&self) -> String {
        if self.graded.is_empty() {
            return "(empty)\n".to_string();
        }
        let shifts: Vec<i64> = self
            .graded
            .keys()
            .map(|(i, d)| *d as i64 - *i as i64)
            .collect();
        let jmin = *shifts.iter().min().unwrap();
        let jmax = *shifts.iter().max().unwrap();
        let rows = self.totals().len();
        let width = self
            .graded
            .values()
            .map(|r| r.to_string().len())
            .chain((jmin..=jmax).map(|j| j.to_string().len()))
            .chain(self.totals().iter().map(|t| t.to_string().len()))
            .max()
            .unwrap_or(1)
            .max(1);
        let label = rows.to_string().len().max("total".len());

        let mut out = String::new();
        let _ = write!(out, "{:>label$} ", "");
        for j in jmin..=jmax {
            let _ = write!(out, " {:>width$}", j);
        }
        let _ = writeln!(out, " {:>tw$}", "total", tw = width.max(5));
        for i in 0..rows {
            let _ = write!(out, "{:>label$}:", i);
            for j in jmin..=jmax {
                let d = i as i64 + j;
                let r = if d >= 0 { self.rank(i, d as u32) } else { 0 };
                if r == 0 {
                    let _ = write!(out, " {:>width$}", ".");
                } else {
                    let _ = write!(out, " {:>width$}", r);
                }
            }
            let _ = writeln!(out, " {:>tw$}", self.totals()[i], tw = width.max(5));
        }
        if let Some(reg) = self.regularity() {
            let _ = writeln!(out, "regularity: {reg}");
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table() -> BettiTable {
        // (x^2, xy, y^2)
        let mut m = BTreeMap::new();
        m.insert((0, vec![2, 0]), 1);
        m.insert((0, vec![1, 1]), 1);
        m.insert((0, vec![0, 2]), 1);
        m.insert((1, vec![2, 1]), 1);
        m.insert((1, vec![1, 2]), 1);
        BettiTable::from_multigraded(m)
    }

    #[test]
    fn derived_quantities() {
        let t = table();
        assert_eq!(t.totals(), vec![3, 2]);
        assert_eq!(t.regularity(), Some(2));
        assert_eq!(t.rank(1, 3), 2);
        assert_eq!(t.multigraded_rank(1, &[2, 1]), 1);
        assert!(BettiTable::default().regularity().is_none());
    }

    #[test]
    fn json_and_text() {
        let t = table();
        let v = t.to_json();
        assert_eq!(v["regularity"], 2);
        assert_eq!(v["betti"][1]["i"], 1);
        assert_eq!(v["betti"][1]["degree"], 3);
        assert_eq!(v["betti"][1]["rank"], 2);
        let text = t.render_text();
        assert!(text.lines().nth(1).unwrap().trim_start().starts_with("0: 3"), "{text}");
        assert!(text.contains("regularity: 2"));
    }

    #[test]
    fn zero_ranks_dropped() {
        let mut g = BTreeMap::new();
        g.insert((0, 2), 0);
        g.insert((0, 3), 1);
        let t = BettiTable::from_graded(g);
        assert_eq!(t.entries().len(), 1);
        assert_eq!(t.regularity(), Some(3));
    }
}

//! Graded and multigraded Betti tables.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::Zero;
use serde::Serialize;

use crate::ideal::Multidegree;

/// Graded Betti numbers `beta_{i,j}` of an ideal; only nonzero entries are stored.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct BettiTable {
    entries: BTreeMap<(usize, usize), BigUint>,
}

/// One nonzero `beta_{i,j}`, as emitted in JSON.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BettiEntry {
    pub i: usize,
    pub j: usize,
    #[serde(serialize_with = "crate::io::serialize_biguint")]
    pub value: BigUint,
}

impl BettiTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_entries<I, V>(entries: I) -> Self
    where
        I: IntoIterator<Item = ((usize, usize), V)>,
        V: Into<BigUint>,
    {
        let mut t = BettiTable::new();
        for ((i, j), v) in entries {
            t.add(i, j, v.into());
        }
        t
    }

    pub fn get(&self, i: usize, j: usize) -> BigUint {
        self.entries.get(&(i, j)).cloned().unwrap_or_default()
    }

    pub fn is_nonzero(&self, i: usize, j: usize) -> bool {
        self.entries.contains_key(&(i, j))
    }

    pub fn add(&mut self, i: usize, j: usize, v: BigUint) {
        if v.is_zero() {
            return;
        }
        *self.entries.entry((i, j)).or_default() += v;
    }

    /// Nonzero entries in `(i, j)` order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, &BigUint)> {
        self.entries.iter().map(|(&(i, j), v)| (i, j, v))
    }

    pub fn entries(&self) -> Vec<BettiEntry> {
        self.iter()
            .map(|(i, j, v)| BettiEntry {
                i,
                j,
                value: v.clone(),
            })
            .collect()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Last step with a nonzero entry (the projective dimension of the ideal).
    pub fn max_step(&self) -> Option<usize> {
        self.entries.keys().map(|&(i, _)| i).max()
    }

    /// Largest `d = j - i` with a nonzero entry (the regularity).
    pub fn regularity(&self) -> Option<usize> {
        self.entries.keys().map(|&(i, j)| j - i).max()
    }

    /// Smallest row label `d`.
    pub fn initial_degree(&self) -> Option<usize> {
        self.entries.keys().map(|&(i, j)| j - i).min()
    }

    /// Entries `beta_{i,i+d}` for `i = 0..=max_step`.
    pub fn row(&self, d: usize) -> Vec<BigUint> {
        let p = self.max_step().unwrap_or(0);
        (0..=p).map(|i| self.get(i, i + d)).collect()
    }

    /// True when every nonzero entry sits in row 2.
    pub fn is_linear(&self) -> bool {
        self.entries.keys().all(|&(i, j)| j == i + 2)
    }

    pub fn num_rows(&self) -> usize {
        match (self.initial_degree(), self.regularity()) {
            (Some(lo), Some(hi)) => hi - lo + 1,
            _ => 0,
        }
    }

    /// Betti diagram: columns are steps `0..=p`, rows are `d = j - i` from 2
    /// up to the regularity, each cell is `beta_{i,i+d}` or `-` for zero.
    pub fn diagram(&self) -> String {
        let p = self.max_step().unwrap_or(0);
        let m = self.regularity().unwrap_or(2).max(2);
        let cell = |v: &BigUint| {
            if v.is_zero() {
                "-".to_string()
            } else {
                v.to_string()
            }
        };
        let rows: Vec<(String, Vec<String>)> = (2..=m)
            .map(|d| (d.to_string(), self.row(d).iter().map(cell).collect()))
            .collect();
        let header: Vec<String> = (0..=p).map(|i| i.to_string()).collect();
        let width = rows
            .iter()
            .flat_map(|(_, cells)| cells.iter())
            .chain(header.iter())
            .map(String::len)
            .max()
            .unwrap_or(1);
        let label_width = rows.iter().map(|(l, _)| l.len()).max().unwrap_or(1);
        let fmt_cells = |cells: &[String]| {
            cells
                .iter()
                .map(|c| format!("{c:>width$}"))
                .collect::<Vec<_>>()
                .join(" ")
        };
        let mut out = String::new();
        let head = format!("{:label_width$} | {}", "", fmt_cells(&header));
        out.push_str(head.trim_end());
        out.push('\n');
        out.push_str(&"-".repeat(label_width + 1));
        out.push('+');
        out.push_str(&"-".repeat(head.len() - label_width - 2));
        out.push('\n');
        for (label, cells) in &rows {
            out.push_str(&format!("{label:>label_width$} | {}\n", fmt_cells(cells)));
        }
        out
    }
}

impl fmt::Debug for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map()
            .entries(self.entries.iter().map(|(k, v)| (k, v.to_string())))
            .finish()
    }
}

impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.diagram())
    }
}

/// Multigraded Betti numbers of a squarefree ideal, keyed by step and the
/// vertex set of a 0/1 multidegree.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct MultigradedBetti {
    num_vars: usize,
    entries: BTreeMap<(usize, Vec<usize>), u64>,
    /// `(fresh variable, original variable)` when computed on a polarization.
    variable_map: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MultigradedEntry {
    pub i: usize,
    pub support: Vec<usize>,
    pub value: u64,
}

impl MultigradedBetti {
    pub(crate) fn new(num_vars: usize, variable_map: Vec<(usize, usize)>) -> Self {
        MultigradedBetti {
            num_vars,
            entries: BTreeMap::new(),
            variable_map,
        }
    }

    pub(crate) fn insert(&mut self, i: usize, support: Vec<usize>, value: u64) {
        if value > 0 {
            *self.entries.entry((i, support)).or_default() += value;
        }
    }

    /// Number of variables of the (possibly polarized) ring the entries live in.
    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn variable_map(&self) -> &[(usize, usize)] {
        &self.variable_map
    }

    pub fn get(&self, i: usize, support: &[usize]) -> u64 {
        let mut key = support.to_vec();
        key.sort_unstable();
        self.entries.get(&(i, key)).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &[usize], u64)> {
        self.entries
            .iter()
            .map(|((i, s), &v)| (*i, s.as_slice(), v))
    }

    pub fn entries(&self) -> Vec<MultigradedEntry> {
        self.iter()
            .map(|(i, s, v)| MultigradedEntry {
                i,
                support: s.to_vec(),
                value: v,
            })
            .collect()
    }

    /// Nonzero multidegrees as exponent vectors.
    pub fn multidegrees(&self) -> Vec<(usize, Multidegree, u64)> {
        self.iter()
            .map(|(i, s, v)| {
                (
                    i,
                    Multidegree::squarefree(self.num_vars, s.iter().copied()),
                    v,
                )
            })
            .collect()
    }

    /// Sum over multidegrees of equal total degree.
    pub fn to_graded(&self) -> BettiTable {
        let mut t = BettiTable::new();
        for (i, s, v) in self.iter() {
            t.add(i, s.len(), BigUint::from(v));
        }
        t
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

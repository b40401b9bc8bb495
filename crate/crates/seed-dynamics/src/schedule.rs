use std::collections::BTreeMap;

/// A label for a recorded value: an optional family name (`w`, `x`, `y`,
/// `z`, ... — empty for single-family models) plus an integer index tuple
/// such as `(n)` or `(n, m)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Label {
    pub family: String,
    pub idx: Vec<i64>,
}

impl Label {
    pub fn new(family: impl Into<String>, idx: Vec<i64>) -> Self {
        Label {
            family: family.into(),
            idx,
        }
    }

    /// Single-index label with no family.
    pub fn n(n: i64) -> Self {
        Label::new("", vec![n])
    }
}

impl std::fmt::Display for Label {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let idx: Vec<String> = self.idx.iter().map(|i| i.to_string()).collect();
        if self.family.is_empty() {
            write!(f, "{}", idx.join(","))
        } else {
            write!(f, "{},{}", self.family, idx.join(","))
        }
    }
}

/// Per-family relabeling applied to a vertex's label when it is mutated:
/// the family is mapped and the index tuple shifted. This encodes the
/// renamings `x_n -> x_{n+4}`, `x_n^m -> x_{n+2}^{m+1}`, the w/x swap of
/// the two-component models, and the coefficient swaps at mutated vertices.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RelabelRule {
    pub x_map: BTreeMap<String, (String, Vec<i64>)>,
    pub y_map: BTreeMap<String, (String, Vec<i64>)>,
}

fn apply(map: &BTreeMap<String, (String, Vec<i64>)>, label: &Label) -> Label {
    let (family, shift) = map
        .get(&label.family)
        .unwrap_or_else(|| panic!("no relabel rule for family {:?}", label.family));
    assert_eq!(shift.len(), label.idx.len(), "relabel shift arity");
    Label {
        family: family.clone(),
        idx: label.idx.iter().zip(shift).map(|(a, b)| a + b).collect(),
    }
}

impl RelabelRule {
    /// Uniform single-family rule: shift every index tuple by `shift`.
    pub fn shift(shift: Vec<i64>) -> Self {
        let mut x_map = BTreeMap::new();
        x_map.insert(String::new(), (String::new(), shift.clone()));
        RelabelRule {
            x_map: x_map.clone(),
            y_map: x_map,
        }
    }

    pub fn next_x(&self, label: &Label) -> Label {
        apply(&self.x_map, label)
    }

    pub fn next_y(&self, label: &Label) -> Label {
        apply(&self.y_map, label)
    }
}

/// The batch structure of a schedule: either a batch list repeated every
/// sweep (the mutation-periodic models) or an explicit per-sweep batch list
/// (windowed lattice models, whose dependency order is finite).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ScheduleKind {
    Cyclic(Vec<Vec<usize>>),
    Finite(Vec<Vec<Vec<usize>>>),
}

/// Ordered batches of vertex mutations plus the relabeling map and the
/// initial per-vertex labels. Each batch must be pairwise non-adjacent in
/// the current quiver (asserted at execution time).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MutationSchedule {
    pub kind: ScheduleKind,
    pub relabel: RelabelRule,
    /// Initial cluster-variable label of each vertex.
    pub xlabels: Vec<Label>,
    /// Initial coefficient label of each vertex (the diagonal `y_n`
    /// bookkeeping; unused in coefficient-free runs).
    pub ylabels: Vec<Label>,
}

impl MutationSchedule {
    /// Batches for sweep `s`, or `None` if a finite schedule is exhausted.
    pub fn batches_for(&self, s: usize) -> Option<&[Vec<usize>]> {
        match &self.kind {
            ScheduleKind::Cyclic(b) => Some(b),
            ScheduleKind::Finite(sw) => sw.get(s).map(|v| v.as_slice()),
        }
    }

    /// Number of sweeps available (`None` = unbounded).
    pub fn available_sweeps(&self) -> Option<usize> {
        match &self.kind {
            ScheduleKind::Cyclic(_) => None,
            ScheduleKind::Finite(sw) => Some(sw.len()),
        }
    }
}

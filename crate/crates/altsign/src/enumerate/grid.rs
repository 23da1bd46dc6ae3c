//! Cell-by-cell depth-first search over sign matrices with tied cells.
//!
//! Cells are filled in row-major order. A cell is free, tied to an earlier cell of
//! its symmetry orbit, or fixed. Row and column partial sums must stay in {0,1},
//! so alternation is checked incrementally, and each line must finish at its
//! target sum.

use std::collections::BTreeMap;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Rule {
    Free,
    Tied(usize),
    /// Value read along the row, value read along the column.
    Fixed(i8, i8),
}

#[derive(Clone, Debug)]
pub(crate) struct GridSpec {
    pub rows: usize,
    pub cols: usize,
    pub rules: Vec<Rule>,
    pub row_init: Vec<i8>,
    pub row_target: Vec<i8>,
    pub col_init: Vec<i8>,
    pub col_target: Vec<i8>,
}

impl GridSpec {
    /// Plain square grid: every line starts at 0 and ends at 1.
    pub fn square(n: usize) -> Self {
        GridSpec {
            rows: n,
            cols: n,
            rules: vec![Rule::Free; n * n],
            row_init: vec![0; n],
            row_target: vec![1; n],
            col_init: vec![0; n],
            col_target: vec![1; n],
        }
    }

    /// Ties every cell to the smallest cell of its orbit under the given maps and
    /// fixes the listed cells to zero. Orbits containing a zero cell become zero.
    pub fn with_orbits(mut self, maps: &[&dyn Fn(usize, usize) -> (usize, usize)], zeros: &[(usize, usize)]) -> Self {
        let (r, c) = (self.rows, self.cols);
        let mut parent: Vec<usize> = (0..r * c).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut x = x;
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for i in 0..r {
            for j in 0..c {
                for f in maps {
                    let (a, b) = f(i, j);
                    let (x, y) = (find(&mut parent, i * c + j), find(&mut parent, a * c + b));
                    let (lo, hi) = (x.min(y), x.max(y));
                    parent[hi] = lo;
                }
            }
        }
        let mut zero_root = vec![false; r * c];
        for &(i, j) in zeros {
            let root = find(&mut parent, i * c + j);
            zero_root[root] = true;
        }
        for k in 0..r * c {
            let root = find(&mut parent, k);
            self.rules[k] = if zero_root[root] {
                Rule::Fixed(0, 0)
            } else if root == k {
                Rule::Free
            } else {
                Rule::Tied(root)
            };
        }
        self
    }
}

/// A partial assignment: the next cell to fill and the line sums so far.
#[derive(Clone, Debug)]
pub struct SearchState {
    pub(crate) next: usize,
    pub(crate) grid: Vec<i8>,
    pub(crate) row_sums: Vec<i8>,
    pub(crate) col_sums: Vec<i8>,
}

impl SearchState {
    pub(crate) fn start(spec: &GridSpec) -> Self {
        SearchState {
            next: 0,
            grid: vec![0; spec.rows * spec.cols],
            row_sums: spec.row_init.clone(),
            col_sums: spec.col_init.clone(),
        }
    }
}

struct Search<'a, F> {
    spec: &'a GridSpec,
    st: SearchState,
    stop_at: usize,
    visit: F,
}

impl<F: FnMut(&SearchState)> Search<'_, F> {
    fn run(&mut self) {
        let k = self.st.next;
        if k == self.stop_at {
            (self.visit)(&self.st);
            return;
        }
        let spec = self.spec;
        let (i, j) = (k / spec.cols, k % spec.cols);
        match spec.rules[k] {
            Rule::Free => {
                for v in [0i8, 1, -1] {
                    self.place(i, j, v, v);
                }
            }
            Rule::Tied(src) => {
                let v = self.st.grid[src];
                self.place(i, j, v, v);
            }
            Rule::Fixed(rv, cv) => self.place(i, j, rv, cv),
        }
    }

    fn place(&mut self, i: usize, j: usize, rv: i8, cv: i8) {
        let spec = self.spec;
        let r = self.st.row_sums[i] + rv;
        let c = self.st.col_sums[j] + cv;
        if !(0..=1).contains(&r) || !(0..=1).contains(&c) {
            return;
        }
        if j + 1 == spec.cols && r != spec.row_target[i] {
            return;
        }
        if i + 1 == spec.rows && c != spec.col_target[j] {
            return;
        }
        let k = i * spec.cols + j;
        let (old_r, old_c) = (self.st.row_sums[i], self.st.col_sums[j]);
        self.st.row_sums[i] = r;
        self.st.col_sums[j] = c;
        self.st.grid[k] = rv;
        self.st.next = k + 1;
        self.run();
        self.st.next = k;
        self.st.grid[k] = 0;
        self.st.row_sums[i] = old_r;
        self.st.col_sums[j] = old_c;
    }
}

/// Runs the search from `state` until cell index `stop_at`, calling `visit` on each
/// surviving state. With `stop_at = rows·cols` the visits are complete matrices.
pub(crate) fn search_from(spec: &GridSpec, state: SearchState, stop_at: usize, visit: impl FnMut(&SearchState)) {
    let mut s = Search { spec, st: state, stop_at, visit };
    s.run();
}

pub(crate) fn search(spec: &GridSpec, mut visit: impl FnMut(&[i8])) {
    let end = spec.rows * spec.cols;
    search_from(spec, SearchState::start(spec), end, |st| visit(&st.grid));
}

/// Tabulates `stat` over all completions, splitting the search after the first
/// rows so that the pieces can run on separate workers.
pub(crate) fn tabulate(spec: &GridSpec, jobs: usize, stat: &(dyn Fn(&[i8]) -> usize + Sync)) -> BTreeMap<usize, u64> {
    let end = spec.rows * spec.cols;
    let tally = |state: SearchState| {
        let mut t = BTreeMap::new();
        search_from(spec, state, end, |st| *t.entry(stat(&st.grid)).or_insert(0u64) += 1);
        t
    };
    if jobs <= 1 {
        return tally(SearchState::start(spec));
    }
    let prefixes = split_prefixes(spec, 4 * jobs);
    let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs).build().expect("thread pool");
    pool.install(|| {
        use rayon::prelude::*;
        prefixes.into_par_iter().map(tally).reduce(BTreeMap::new, merge_counts)
    })
}

/// Partial assignments covering whole rows, taking rows until there are at least
/// `want` of them (or half the grid is fixed).
pub(crate) fn split_prefixes(spec: &GridSpec, want: usize) -> Vec<SearchState> {
    let mut rows = 1;
    loop {
        let mut out = Vec::new();
        search_from(spec, SearchState::start(spec), rows * spec.cols, |st| out.push(st.clone()));
        if out.len() >= want || 2 * rows >= spec.rows {
            return out;
        }
        rows += 1;
    }
}

pub(crate) fn merge_counts(mut a: BTreeMap<usize, u64>, b: BTreeMap<usize, u64>) -> BTreeMap<usize, u64> {
    for (k, v) in b {
        *a.entry(k).or_insert(0) += v;
    }
    a
}

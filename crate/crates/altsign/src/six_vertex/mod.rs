//! Six-vertex grids with domain-wall and U-turn boundaries: configurations,
//! weights, exact state sums, the closed partition-function formulas, and the
//! specializations that turn them into refined counts.

mod formulas;
mod links;

pub use formulas::{
    random_params, z_dwbc_formula, z_h_even_formula, z_o_formula, z_u_formula, z_uu_formula, FormulaCheck,
};
pub use links::{formula_vs_state_sum, refined_link_dwbc, refined_link_uturn};

use std::fmt;
use std::str::FromStr;

use crate::arith::{sigma, Cyclotomic, LaurentPoly, Ring, Var};
use crate::asm::{Asm, SymmetryClass, VertexType};
use crate::enumerate::{enumerate_asms, enumerate_class};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GridModel {
    /// n×n grid, horizontal boundary arrows inward, vertical outward.
    Dwbc(usize),
    /// 2n×n grid; rows 2k, 2k+1 are joined on the right by a U-turn.
    UTurn(usize),
    /// 2n×2n grid with U-turns on the right and at the bottom.
    UUTurn(usize),
}

impl GridModel {
    pub fn n(self) -> usize {
        match self {
            GridModel::Dwbc(n) | GridModel::UTurn(n) | GridModel::UUTurn(n) => n,
        }
    }

    pub fn rows(self) -> usize {
        match self {
            GridModel::Dwbc(n) => n,
            GridModel::UTurn(n) | GridModel::UUTurn(n) => 2 * n,
        }
    }

    pub fn cols(self) -> usize {
        match self {
            GridModel::Dwbc(n) | GridModel::UTurn(n) => n,
            GridModel::UUTurn(n) => 2 * n,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            GridModel::Dwbc(_) => "dwbc",
            GridModel::UTurn(_) => "uturn",
            GridModel::UUTurn(_) => "uuturn",
        }
    }

    /// Builds a model from its name and size.
    pub fn parse(name: &str, n: usize) -> Result<Self> {
        match name.parse::<ModelKind>()? {
            ModelKind::Dwbc => Ok(GridModel::Dwbc(n)),
            ModelKind::UTurn => Ok(GridModel::UTurn(n)),
            ModelKind::UUTurn => Ok(GridModel::UUTurn(n)),
        }
    }

    fn row_pairs(self) -> bool {
        !matches!(self, GridModel::Dwbc(_))
    }

    fn col_pairs(self) -> bool {
        matches!(self, GridModel::UUTurn(_))
    }
}

impl fmt::Display for GridModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.name(), self.n())
    }
}

/// Model family without a size, for argument parsing.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModelKind {
    Dwbc,
    UTurn,
    UUTurn,
}

impl FromStr for ModelKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "dwbc" => Ok(ModelKind::Dwbc),
            "uturn" => Ok(ModelKind::UTurn),
            "uuturn" => Ok(ModelKind::UUTurn),
            _ => Err(Error::Parse(format!("unknown model {s:?} (expected dwbc, uturn, uuturn)"))),
        }
    }
}

/// Spectral parameters x (per row or row pair), y (per column or column pair),
/// and the crossing parameter q with the U-turn parameters b, c.
#[derive(Clone, Debug, PartialEq)]
pub struct ParamSet<R> {
    pub x: Vec<R>,
    pub y: Vec<R>,
    pub q: R,
    pub b: R,
    pub c: R,
}

impl<R: Ring> ParamSet<R> {
    /// x = y = 1, b = c = 1 at the given q.
    pub fn ones(model: GridModel, q: R) -> Self {
        let n = model.n();
        ParamSet { x: vec![R::one(); n], y: vec![R::one(); n], q, b: R::one(), c: R::one() }
    }

    fn validate(&self, model: GridModel) -> Result<()> {
        let n = model.n();
        if self.x.len() != n || self.y.len() != n {
            return Err(Error::OutOfRange(format!(
                "{model} needs {n} x and {n} y parameters, got {} and {}",
                self.x.len(),
                self.y.len()
            )));
        }
        Ok(())
    }
}

impl ParamSet<LaurentPoly<Cyclotomic>> {
    /// Lifts a numeric parameter set, replacing x₁ by the variable x. This is the
    /// only symbolic slot the state sums use.
    pub fn symbolic_x1(base: &ParamSet<Cyclotomic>) -> Self {
        let lift = |c: &Cyclotomic| LaurentPoly::constant(Var::X, c.clone());
        let mut x: Vec<_> = base.x.iter().map(lift).collect();
        if let Some(first) = x.first_mut() {
            *first = LaurentPoly::var(Var::X);
        }
        ParamSet { x, y: base.y.iter().map(lift).collect(), q: lift(&base.q), b: lift(&base.b), c: lift(&base.c) }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Arrow {
    Left,
    Right,
    Up,
    Down,
}

/// An edge orientation of the grid. It is stored as the matrix of vertex
/// entries; the arrow on every edge follows from the partial sums along it
/// (row partial sum 0 ↦ →, 1 ↦ ←; column partial sum 0 ↦ ↑, 1 ↦ ↓).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Config {
    model: GridModel,
    entries: Vec<i8>,
}

impl Config {
    pub fn new(model: GridModel, entries: Vec<i8>) -> Result<Self> {
        if entries.len() != model.rows() * model.cols() {
            return Err(Error::InvalidMatrix(format!("{model} has {} vertices", model.rows() * model.cols())));
        }
        let cfg = Config { model, entries };
        if !cfg.is_admissible() {
            return Err(Error::InvalidMatrix(format!("not an admissible {model} configuration")));
        }
        Ok(cfg)
    }

    pub fn from_asm(a: &Asm) -> Self {
        Config { model: GridModel::Dwbc(a.order()), entries: a.entries().to_vec() }
    }

    pub fn to_asm(&self) -> Result<Asm> {
        match self.model {
            GridModel::Dwbc(n) => Asm::from_flat(n, self.entries.clone()),
            m => Err(Error::Incompatible { class: m.name().into(), order: m.n() }),
        }
    }

    pub fn model(&self) -> GridModel {
        self.model
    }

    pub fn entries(&self) -> &[i8] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> i8 {
        self.entries[i * self.model.cols() + j]
    }

    /// Σ_{j'<j} entry(i, j'), for 0 ≤ j ≤ cols.
    pub fn row_partial(&self, i: usize, j: usize) -> i8 {
        (0..j).map(|k| self.get(i, k)).sum()
    }

    /// Σ_{i'<i} entry(i', j), for 0 ≤ i ≤ rows.
    pub fn col_partial(&self, i: usize, j: usize) -> i8 {
        (0..i).map(|k| self.get(k, j)).sum()
    }

    /// Arrow on the horizontal edge left of vertex (i, j); j = cols is the right boundary.
    pub fn horizontal(&self, i: usize, j: usize) -> Arrow {
        if self.row_partial(i, j) == 0 {
            Arrow::Right
        } else {
            Arrow::Left
        }
    }

    /// Arrow on the vertical edge above vertex (i, j); i = rows is the bottom boundary.
    pub fn vertical(&self, i: usize, j: usize) -> Arrow {
        if self.col_partial(i, j) == 0 {
            Arrow::Up
        } else {
            Arrow::Down
        }
    }

    pub fn vertex(&self, i: usize, j: usize) -> VertexType {
        VertexType::from_partial_sums(self.get(i, j), self.row_partial(i, j), self.col_partial(i, j))
    }

    /// Every vertex has two incoming and two outgoing arrows.
    pub fn ice_rule_holds(&self) -> bool {
        (0..self.model.rows()).all(|i| {
            (0..self.model.cols()).all(|j| {
                let incoming = [
                    self.horizontal(i, j) == Arrow::Right,
                    self.horizontal(i, j + 1) == Arrow::Left,
                    self.vertical(i, j) == Arrow::Down,
                    self.vertical(i + 1, j) == Arrow::Up,
                ];
                incoming.iter().filter(|&&b| b).count() == 2
            })
        })
    }

    /// The right U-turn joining rows 2k and 2k+1 points up when the arrow leaving
    /// row 2k on the right points left.
    pub fn right_turn_up(&self, k: usize) -> bool {
        self.row_partial(2 * k, self.model.cols()) == 1
    }

    /// The bottom U-turn joining columns 2l and 2l+1 points right when column 2l
    /// ends pointing down.
    pub fn bottom_turn_right(&self, l: usize) -> bool {
        self.col_partial(self.model.rows(), 2 * l) == 1
    }

    fn is_admissible(&self) -> bool {
        let (rows, cols) = (self.model.rows(), self.model.cols());
        let in01 = |v: i8| v == 0 || v == 1;
        let partial_ok = (0..rows).all(|i| (0..=cols).all(|j| in01(self.row_partial(i, j))))
            && (0..cols).all(|j| (0..=rows).all(|i| in01(self.col_partial(i, j))));
        let pair = |a: i8, b: i8| a + b == 1;
        let rows_ok = if self.model.row_pairs() {
            (0..rows / 2).all(|k| pair(self.row_partial(2 * k, cols), self.row_partial(2 * k + 1, cols)))
        } else {
            (0..rows).all(|i| self.row_partial(i, cols) == 1)
        };
        let cols_ok = if self.model.col_pairs() {
            (0..cols / 2).all(|l| pair(self.col_partial(rows, 2 * l), self.col_partial(rows, 2 * l + 1)))
        } else {
            (0..cols).all(|j| self.col_partial(rows, j) == 1)
        };
        partial_ok && rows_ok && cols_ok
    }
}

/// Visits every admissible configuration once: a cell-by-cell search over
/// vertex entries in which partial sums (the edge arrows) stay in {0, 1}, which
/// is the ice rule, with boundary conditions checked at row and grid ends.
pub fn enumerate_configs(model: GridModel, mut visit: impl FnMut(&Config)) {
    if model.n() == 0 {
        return;
    }
    if let GridModel::Dwbc(n) = model {
        enumerate_asms(n, |a| visit(&Config::from_asm(a)));
        return;
    }
    let (rows, cols) = (model.rows(), model.cols());
    let mut s = Search { model, rows, cols, grid: vec![0; rows * cols], rp: vec![0; rows], cp: vec![0; cols] };
    s.run(0, &mut visit);
}

struct Search {
    model: GridModel,
    rows: usize,
    cols: usize,
    grid: Vec<i8>,
    rp: Vec<i8>,
    cp: Vec<i8>,
}

impl Search {
    fn run(&mut self, cell: usize, visit: &mut impl FnMut(&Config)) {
        if cell == self.rows * self.cols {
            let cols_ok = if self.model.col_pairs() {
                self.cp.chunks(2).all(|p| p[0] + p[1] == 1)
            } else {
                self.cp.iter().all(|&c| c == 1)
            };
            if cols_ok {
                visit(&Config { model: self.model, entries: self.grid.clone() });
            }
            return;
        }
        let (i, j) = (cell / self.cols, cell % self.cols);
        for v in [0i8, 1, -1] {
            let (r, c) = (self.rp[i] + v, self.cp[j] + v);
            if !(0..=1).contains(&r) || !(0..=1).contains(&c) {
                continue;
            }
            if j + 1 == self.cols && i % 2 == 1 && self.rp[i - 1] + r != 1 {
                continue;
            }
            self.grid[cell] = v;
            self.rp[i] = r;
            self.cp[j] = c;
            self.run(cell + 1, visit);
            self.rp[i] -= v;
            self.cp[j] -= v;
        }
        self.grid[cell] = 0;
    }
}

pub fn configs(model: GridModel) -> Vec<Config> {
    let mut out = Vec::new();
    enumerate_configs(model, |c| out.push(c.clone()));
    out
}

fn inv<R: Ring>(u: &R) -> Result<R> {
    u.try_inv().ok_or(Error::DivisionByZero)
}

/// Per-vertex and per-turn weights for one parameter set.
struct WeightTable<R> {
    cols: usize,
    /// Zero entry with equal row and column partial sums: σ(qū)/σ(q²).
    same: Vec<R>,
    /// Zero entry with different partial sums: σ(qu)/σ(q²).
    diff: Vec<R>,
    /// Right U-turns: (pointing down, pointing up).
    right: Vec<(R, R)>,
    /// Bottom U-turns: (first column ends up, first column ends down).
    bottom: Vec<(R, R)>,
}

impl<R: Ring> WeightTable<R> {
    fn new(model: GridModel, p: &ParamSet<R>) -> Result<Self> {
        p.validate(model)?;
        let q = &p.q;
        let inv_s2 = inv(&sigma(&(q.clone() * q.clone()))?)?;
        let (rows, cols) = (model.rows(), model.cols());
        let mut same = Vec::with_capacity(rows * cols);
        let mut diff = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                let u = label(model, p, i, j)?;
                same.push(sigma(&(q.clone() * inv(&u)?))? * inv_s2.clone());
                diff.push(sigma(&(q.clone() * u))? * inv_s2.clone());
            }
        }
        let mut right = Vec::new();
        let mut bottom = Vec::new();
        if model.row_pairs() {
            for x in &p.x {
                let down = sigma(&(p.b.clone() * q.clone() * x.clone()))?;
                let up = sigma(&(p.b.clone() * inv(&(q.clone() * x.clone()))?))?;
                right.push((down, up));
            }
        }
        if model.col_pairs() {
            for y in &p.y {
                let up = sigma(&(p.c.clone() * q.clone() * inv(y)?))?;
                let down = sigma(&(p.c.clone() * y.clone() * inv(q)?))?;
                bottom.push((up, down));
            }
        }
        Ok(WeightTable { cols, same, diff, right, bottom })
    }

    fn weight(&self, cfg: &Config) -> R {
        let (rows, cols) = (cfg.model.rows(), self.cols);
        let mut w = R::one();
        let mut cp = vec![0i8; cols];
        for i in 0..rows {
            let mut r = 0i8;
            for j in 0..cols {
                let v = cfg.get(i, j);
                if v == 0 {
                    let t = if r == cp[j] { &self.same } else { &self.diff };
                    w = w * t[i * cols + j].clone();
                }
                r += v;
                cp[j] += v;
            }
        }
        for (k, (down, up)) in self.right.iter().enumerate() {
            w = w * if cfg.right_turn_up(k) { up.clone() } else { down.clone() };
        }
        for (l, (up, down)) in self.bottom.iter().enumerate() {
            w = w * if cfg.bottom_turn_right(l) { down.clone() } else { up.clone() };
        }
        w
    }
}

/// Spectral label u of vertex (i, j).
fn label<R: Ring>(model: GridModel, p: &ParamSet<R>, i: usize, j: usize) -> Result<R> {
    match model {
        GridModel::Dwbc(_) => Ok(p.x[i].clone() * inv(&p.y[j])?),
        GridModel::UTurn(_) => {
            let x = &p.x[i / 2];
            if i.is_multiple_of(2) {
                Ok(p.y[j].clone() * inv(x)?)
            } else {
                Ok(x.clone() * p.y[j].clone())
            }
        }
        GridModel::UUTurn(_) => {
            let x = &p.x[i / 2];
            let y = &p.y[j / 2];
            let row = if i.is_multiple_of(2) { inv(x)? } else { x.clone() };
            let col = if j.is_multiple_of(2) { y.clone() } else { inv(y)? };
            Ok(row * col)
        }
    }
}

pub fn config_weight<R: Ring>(cfg: &Config, p: &ParamSet<R>) -> Result<R> {
    Ok(WeightTable::new(cfg.model, p)?.weight(cfg))
}

/// Σ of config weights over all admissible configurations.
pub fn z_state_sum<R: Ring>(model: GridModel, p: &ParamSet<R>) -> Result<R> {
    z_state_sum_where(model, p, |_| true)
}

/// State sum restricted to the configurations accepted by `keep`.
pub fn z_state_sum_where<R: Ring>(model: GridModel, p: &ParamSet<R>, keep: impl Fn(&Config) -> bool) -> Result<R> {
    let table = WeightTable::new(model, p)?;
    let mut total = R::zero();
    enumerate_configs(model, |c| {
        if keep(c) {
            total = total.clone() + table.weight(c);
        }
    });
    Ok(total)
}

/// Vertex weight with label u and the DWBC zero-weight rule.
fn zero_weight<R: Ring>(q: &R, u: &R, equal_sums: bool, inv_s2: &R) -> Result<R> {
    let arg = if equal_sums { q.clone() * inv(u)? } else { q.clone() * u.clone() };
    Ok(sigma(&arg)? * inv_s2.clone())
}

fn asm_state_sum<R: Ring>(
    class: SymmetryClass,
    order: usize,
    q: &R,
    cells: impl Fn(usize, usize) -> Option<R>,
) -> Result<R> {
    let inv_s2 = inv(&sigma(&(q.clone() * q.clone()))?)?;
    let mut total = R::zero();
    let mut err = None;
    let mut visit = |a: &Asm| {
        let mut w = R::one();
        for i in 0..order {
            let mut r = 0i8;
            for j in 0..order {
                let v = a.get(i, j);
                if v == 0 {
                    if let Some(u) = cells(i, j) {
                        let c: i8 = (0..i).map(|k| a.get(k, j)).sum();
                        match zero_weight(q, &u, r == c, &inv_s2) {
                            Ok(x) => w = w * x,
                            Err(e) => err = Some(e),
                        }
                    }
                }
                r += v;
            }
        }
        total = total.clone() + w;
    };
    if class == SymmetryClass::Plain {
        enumerate_asms(order, &mut visit);
    } else {
        enumerate_class(class, order, &mut visit)?;
    }
    match err {
        Some(e) => Err(e),
        None => Ok(total),
    }
}

/// Off-diagonal symmetric state sum of order 2n: weights on the strict upper
/// triangle with label x_i·x_j.
pub fn z_os_state_sum<R: Ring>(x: &[R], q: &R) -> Result<R> {
    asm_state_sum(SymmetryClass::OS, x.len(), q, |i, j| (i < j).then(|| x[i].clone() * x[j].clone()))
}

/// Half-turn symmetric state sum of order 2n over the top n rows, with label
/// x_i/y_j left of centre and x_i/y_{2n−1−j} right of it.
pub fn z_ht_even_state_sum<R: Ring>(x: &[R], y: &[R], q: &R) -> Result<R> {
    let n = x.len();
    if y.len() != n {
        return Err(Error::OutOfRange("x and y must have equal length".into()));
    }
    let inv_y: Vec<R> = y.iter().map(inv).collect::<Result<_>>()?;
    asm_state_sum(SymmetryClass::HTS, 2 * n, q, |i, j| {
        (i < n).then(|| x[i].clone() * if j < n { inv_y[j].clone() } else { inv_y[2 * n - 1 - j].clone() })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, Rational};
    use crate::closed_forms::asm_total;

    #[test]
    fn config_counts() {
        for n in 1..=4 {
            assert_eq!(crate::arith::Integer::from(configs(GridModel::Dwbc(n)).len()), asm_total(n).unwrap());
        }
        assert_eq!(configs(GridModel::UTurn(1)).len(), 2);
        assert!(!configs(GridModel::UUTurn(2)).is_empty());
    }

    #[test]
    fn ice_rule_on_every_config() {
        for m in [GridModel::Dwbc(4), GridModel::UTurn(2), GridModel::UUTurn(1)] {
            enumerate_configs(m, |c| assert!(c.ice_rule_holds(), "{c:?}"));
        }
    }

    #[test]
    fn dwbc_round_trip() {
        for n in 1..=4 {
            enumerate_configs(GridModel::Dwbc(n), |c| {
                assert_eq!(&Config::from_asm(&c.to_asm().unwrap()), c);
            });
        }
    }

    #[test]
    fn unit_weights_count_asms() {
        for n in 1..=5 {
            let p = ParamSet::ones(GridModel::Dwbc(n), Cyclotomic::q());
            let z = z_state_sum(GridModel::Dwbc(n), &p).unwrap();
            assert_eq!(z, Cyclotomic::from(asm_total(n).unwrap()));
        }
    }

    #[test]
    fn weight_matches_vertex_types() {
        let a = Asm::new(vec![vec![0, 1, 0], vec![1, -1, 1], vec![0, 1, 0]]).unwrap();
        let cfg = Config::from_asm(&a);
        let p = ParamSet {
            x: vec![rat(2, 3), rat(5, 1), rat(7, 4)],
            y: vec![rat(3, 1), rat(11, 5), rat(1, 2)],
            q: rat(9, 7),
            b: Rational::from_integer(1.into()),
            c: Rational::from_integer(1.into()),
        };
        let s2 = sigma(&(p.q.clone() * p.q.clone())).unwrap();
        let mut expect = rat(1, 1);
        for i in 0..3 {
            for j in 0..3 {
                let t = crate::asm::vertex_type(&a, i, j).unwrap();
                let u = p.x[i].clone() / p.y[j].clone();
                expect *= match t {
                    VertexType::A1 | VertexType::A2 => rat(1, 1),
                    t if t.is_equal_sums() => sigma(&(p.q.clone() / u)).unwrap() / s2.clone(),
                    _ => sigma(&(p.q.clone() * u)).unwrap() / s2.clone(),
                };
            }
        }
        assert_eq!(config_weight(&cfg, &p).unwrap(), expect);
    }

    #[test]
    fn forced_top_row_turn_factor() {
        // The configuration with the top U-turn pointing down carries σ(q²x) at b = q.
        let m = GridModel::UTurn(1);
        let base = ParamSet { b: Cyclotomic::q(), ..ParamSet::ones(m, Cyclotomic::q()) };
        let p = ParamSet::symbolic_x1(&base);
        let down = z_state_sum_where(m, &p, |c| !c.right_turn_up(0)).unwrap();
        let q = p.q.clone();
        let expect_turn = sigma(&(q.clone() * q.clone() * p.x[0].clone())).unwrap();
        let cfg = configs(m).into_iter().find(|c| !c.right_turn_up(0)).unwrap();
        assert_eq!(cfg.entries(), &[0, 1]);
        // Only the bulk zero in the top row contributes besides the turn.
        let bulk =
            sigma(&(q.clone() * p.x[0].clone())).unwrap() * sigma(&(q.clone() * q.clone())).unwrap().try_inv().unwrap();
        assert_eq!(down, bulk * expect_turn);
    }

    #[test]
    fn model_parse() {
        assert_eq!(GridModel::parse("uturn", 2).unwrap(), GridModel::UTurn(2));
        assert!(GridModel::parse("torus", 2).is_err());
    }
}

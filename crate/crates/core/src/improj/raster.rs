//! Rasters of `I(f)` for bivariate `f` and the components of the complement.

use std::collections::VecDeque;

use num::Zero;
use rayon::prelude::*;
use serde::Serialize;

use super::oracle::BivariateOracle;
use super::{heuristic_membership, MembershipConfig, MembershipValue, Mode};
use crate::algebra::{MPoly, Rational};
use crate::arrangement::{arrangement_membership, LinearFormSet, UnionMembership};
use crate::error::{Error, Result};
use crate::structured::{Structure, StructuredPoly};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Cell {
    Inside,
    Outside,
    Unknown,
}

impl From<MembershipValue> for Cell {
    fn from(v: MembershipValue) -> Self {
        match v {
            MembershipValue::Inside => Cell::Inside,
            MembershipValue::Outside => Cell::Outside,
            MembershipValue::Unknown => Cell::Unknown,
        }
    }
}

/// `[x_min, x_max] × [y_min, y_max]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RasterBox {
    #[serde(with = "crate::algebra::scalar::serde_rational")]
    pub x_min: Rational,
    #[serde(with = "crate::algebra::scalar::serde_rational")]
    pub x_max: Rational,
    #[serde(with = "crate::algebra::scalar::serde_rational")]
    pub y_min: Rational,
    #[serde(with = "crate::algebra::scalar::serde_rational")]
    pub y_max: Rational,
}

impl RasterBox {
    pub fn new(x_min: Rational, x_max: Rational, y_min: Rational, y_max: Rational) -> Result<Self> {
        if x_min >= x_max || y_min >= y_max {
            return Err(Error::InvalidArgument("empty raster box".into()));
        }
        Ok(RasterBox { x_min, x_max, y_min, y_max })
    }

    /// `[-r, r]²`.
    pub fn square(r: Rational) -> Result<Self> {
        RasterBox::new(-r.clone(), r.clone(), -r.clone(), r)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum GridMode {
    Exact,
    Numeric,
}

/// Membership sampled on the lattice `(x_min + i h_x, y_min + j h_y)`,
/// `0 <= i, j < res`, `h = width / res`. Sampling the lower-left corner of
/// each pixel puts the origin on a lattice point for symmetric boxes with
/// even resolution, so lower-dimensional pieces through it (axes, diagonals)
/// are sampled exactly.
#[derive(Clone, Debug, Serialize)]
pub struct RasterGrid {
    pub bbox: RasterBox,
    pub res: usize,
    pub mode: GridMode,
    /// Row-major from the bottom row (`j = 0`) up.
    pub cells: Vec<Cell>,
    /// Lower-left corners `(i, j)` of checkerboard 2×2 blocks whose Outside
    /// diagonal stays Outside at the block centre, so it is connected.
    pub saddles: Vec<(usize, usize)>,
}

impl RasterGrid {
    pub fn cell(&self, i: usize, j: usize) -> Cell {
        self.cells[j * self.res + i]
    }

    pub fn point(&self, i: usize, j: usize) -> Vec<Rational> {
        point(&self.bbox, self.res, i, j)
    }

    pub fn count(&self, c: Cell) -> usize {
        self.cells.iter().filter(|&&x| x == c).count()
    }

    /// Binary PGM: Inside 0, Outside 255, Unknown 128, top row first.
    pub fn to_pgm(&self) -> Vec<u8> {
        let mut out = format!("P5\n{} {}\n255\n", self.res, self.res).into_bytes();
        for j in (0..self.res).rev() {
            for i in 0..self.res {
                out.push(match self.cell(i, j) {
                    Cell::Inside => 0,
                    Cell::Outside => 255,
                    Cell::Unknown => 128,
                });
            }
        }
        out
    }
}

fn coord(lo: &Rational, hi: &Rational, res: usize, k: usize) -> Rational {
    lo + (hi - lo) * Rational::new(k.into(), res.into())
}

fn point(b: &RasterBox, res: usize, i: usize, j: usize) -> Vec<Rational> {
    vec![coord(&b.x_min, &b.x_max, res, i), coord(&b.y_min, &b.y_max, res, j)]
}

/// Point membership for one structured polynomial, prepared for many queries.
enum PointOracle {
    Union(Vec<PointOracle>),
    Arrangement(LinearFormSet),
    Bivariate(BivariateOracle),
    Heuristic(MPoly, MembershipConfig),
    Nowhere,
}

impl PointOracle {
    fn new(f: &StructuredPoly, cfg: &MembershipConfig) -> Result<Self> {
        if cfg.mode == Mode::Numeric {
            return Ok(PointOracle::Heuristic(f.poly().clone(), cfg.clone()));
        }
        Ok(match f.structure() {
            Structure::LinearForms(fs) | Structure::DiagDet(fs) => PointOracle::Arrangement(fs.clone()),
            Structure::Factors(gs) => {
                PointOracle::Union(gs.iter().map(PointOracle::generic).collect::<Result<Vec<_>>>()?)
            }
            _ => PointOracle::generic(f.poly())?,
        })
    }

    fn generic(f: &MPoly) -> Result<Self> {
        if f.is_constant() {
            return Ok(PointOracle::Nowhere);
        }
        Ok(PointOracle::Bivariate(BivariateOracle::new(f)?))
    }

    fn eval(&self, y: &[Rational]) -> Cell {
        match self {
            PointOracle::Nowhere => Cell::Outside,
            PointOracle::Arrangement(fs) => match arrangement_membership(fs, y).expect("dimension checked") {
                UnionMembership::InsideUnion => Cell::Inside,
                UnionMembership::OutsideUnion => Cell::Outside,
            },
            PointOracle::Bivariate(o) => {
                if o.inside(y).expect("dimension checked") {
                    Cell::Inside
                } else {
                    Cell::Outside
                }
            }
            PointOracle::Heuristic(f, cfg) => heuristic_membership(f, y, cfg).value.into(),
            PointOracle::Union(os) => {
                let mut acc = Cell::Outside;
                for o in os {
                    match o.eval(y) {
                        Cell::Inside => return Cell::Inside,
                        Cell::Unknown => acc = Cell::Unknown,
                        Cell::Outside => {}
                    }
                }
                acc
            }
        }
    }
}

pub fn raster(f: &MPoly, bbox: &RasterBox, res: usize, cfg: &MembershipConfig) -> Result<RasterGrid> {
    raster_structured(&StructuredPoly::generic(f.clone()), bbox, res, cfg)
}

/// Membership of every lattice point; exact unless `cfg.mode` is `Numeric`.
pub fn raster_structured(
    f: &StructuredPoly,
    bbox: &RasterBox,
    res: usize,
    cfg: &MembershipConfig,
) -> Result<RasterGrid> {
    if f.nvars() != 2 {
        return Err(Error::UnsupportedDimension(f.nvars()));
    }
    if res < 8 {
        return Err(Error::InvalidArgument(format!("resolution must be at least 8, got {res}")));
    }
    if f.poly().is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let oracle = PointOracle::new(f, cfg)?;
    let rows: Vec<Vec<Cell>> =
        (0..res).into_par_iter().map(|j| (0..res).map(|i| oracle.eval(&point(bbox, res, i, j))).collect()).collect();
    let cells: Vec<Cell> = rows.into_iter().flatten().collect();
    let mode = if cfg.mode == Mode::Numeric { GridMode::Numeric } else { GridMode::Exact };
    let mut grid = RasterGrid { bbox: bbox.clone(), res, mode, cells, saddles: Vec::new() };
    let half = Rational::new(1.into(), 2.into());
    for j in 0..res - 1 {
        for i in 0..res - 1 {
            let (a, b, c, d) = (grid.cell(i, j), grid.cell(i + 1, j), grid.cell(i, j + 1), grid.cell(i + 1, j + 1));
            let main = a == Cell::Outside && d == Cell::Outside && b != Cell::Outside && c != Cell::Outside;
            let anti = b == Cell::Outside && c == Cell::Outside && a != Cell::Outside && d != Cell::Outside;
            if !(main || anti) {
                continue;
            }
            let lo = point(bbox, res, i, j);
            let hi = point(bbox, res, i + 1, j + 1);
            let centre: Vec<Rational> = lo.iter().zip(&hi).map(|(p, q)| (p + q) * &half).collect();
            if oracle.eval(&centre) == Cell::Outside {
                grid.saddles.push((i, j));
            }
        }
    }
    Ok(grid)
}

#[derive(Clone, Debug)]
pub struct ComponentConfig {
    /// Minimum pixel-count / hull-lattice-count ratio for strict convexity.
    pub convex_tol: f64,
    /// Longest admissible convex-hull edge, in pixels; `None` picks `max(8, res / 8)`.
    pub segment_tol: Option<f64>,
}

impl Default for ComponentConfig {
    fn default() -> Self {
        ComponentConfig { convex_tol: 0.98, segment_tol: None }
    }
}

impl ComponentConfig {
    pub fn segment_tol_for(&self, res: usize) -> f64 {
        self.segment_tol.unwrap_or_else(|| (res as f64 / 8.0).max(8.0))
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Component {
    pub id: usize,
    pub pixels: usize,
    #[serde(serialize_with = "crate::algebra::scalar::serde_rational::vec::serialize")]
    pub representative: Vec<Rational>,
    pub touches_boundary: bool,
    pub convexity_score: f64,
    /// Longest edge of the convex hull of the pixel centres, in pixels.
    pub max_hull_edge: f64,
    pub strictly_convex: bool,
    pub paired_with: Option<usize>,
    #[serde(skip)]
    pub cells: Vec<(usize, usize)>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ComponentReport {
    pub components: Vec<Component>,
    pub total: usize,
    pub bounded: usize,
    pub unbounded: usize,
}

/// Connected components of the Outside cells: 4-neighbours plus the saddle
/// diagonals recorded in the grid.
pub fn components(grid: &RasterGrid, cfg: &ComponentConfig) -> ComponentReport {
    let res = grid.res;
    let idx = |i: usize, j: usize| j * res + i;
    let mut diag: Vec<Vec<(usize, usize)>> = vec![Vec::new(); res * res];
    for &(i, j) in &grid.saddles {
        if grid.cell(i, j) == Cell::Outside {
            diag[idx(i, j)].push((i + 1, j + 1));
            diag[idx(i + 1, j + 1)].push((i, j));
        } else {
            diag[idx(i + 1, j)].push((i, j + 1));
            diag[idx(i, j + 1)].push((i + 1, j));
        }
    }
    let mut label = vec![usize::MAX; res * res];
    let mut comps: Vec<Vec<(usize, usize)>> = Vec::new();
    for j in 0..res {
        for i in 0..res {
            if grid.cell(i, j) != Cell::Outside || label[idx(i, j)] != usize::MAX {
                continue;
            }
            let id = comps.len();
            let mut cells = Vec::new();
            let mut queue = VecDeque::from([(i, j)]);
            label[idx(i, j)] = id;
            while let Some((a, b)) = queue.pop_front() {
                cells.push((a, b));
                let mut nbrs = diag[idx(a, b)].clone();
                if a > 0 {
                    nbrs.push((a - 1, b));
                }
                if a + 1 < res {
                    nbrs.push((a + 1, b));
                }
                if b > 0 {
                    nbrs.push((a, b - 1));
                }
                if b + 1 < res {
                    nbrs.push((a, b + 1));
                }
                for (c, d) in nbrs {
                    if grid.cell(c, d) == Cell::Outside && label[idx(c, d)] == usize::MAX {
                        label[idx(c, d)] = id;
                        queue.push_back((c, d));
                    }
                }
            }
            cells.sort_by_key(|&(a, b)| (b, a));
            comps.push(cells);
        }
    }
    let seg_tol = cfg.segment_tol_for(res);
    let mut out: Vec<Component> = comps
        .into_iter()
        .enumerate()
        .map(|(id, cells)| {
            let touches = cells.iter().any(|&(a, b)| a == 0 || b == 0 || a + 1 == res || b + 1 == res);
            let hull = convex_hull(&cells);
            let area2 = polygon_area2(&hull);
            let boundary = hull_boundary_points(&hull);
            // Pick: lattice points in the closed hull = A + B/2 + 1.
            let lattice =
                if hull.len() < 3 { boundary as f64 } else { area2 as f64 / 2.0 + boundary as f64 / 2.0 + 1.0 };
            let score = (cells.len() as f64 / lattice).min(1.0);
            let max_edge = max_edge(&hull);
            let strictly = !touches && area2 > 0 && score >= cfg.convex_tol && max_edge <= seg_tol;
            let rep = cells.iter().copied().find(|&(a, b)| a > 0 && b > 0).unwrap_or(cells[0]);
            Component {
                id,
                pixels: cells.len(),
                representative: grid.point(rep.0, rep.1),
                touches_boundary: touches,
                convexity_score: score,
                max_hull_edge: max_edge,
                strictly_convex: strictly,
                paired_with: None,
                cells,
            }
        })
        .collect();
    // Pair each component with the one holding the mirror of its representative.
    let mirror_of: Vec<Option<usize>> = out
        .iter()
        .map(|c| {
            let (a, b) = c.cells.iter().copied().find(|&(a, b)| a > 0 && b > 0)?;
            let (ma, mb) = (res - a, res - b);
            if ma >= res || mb >= res || !is_mirror(grid, a, b) {
                return None;
            }
            let l = label[idx(ma, mb)];
            (l != usize::MAX).then_some(l)
        })
        .collect();
    for k in 0..out.len() {
        if let Some(m) = mirror_of[k] {
            if mirror_of[m] == Some(k) {
                out[k].paired_with = Some(m);
            }
        }
    }
    let bounded = out.iter().filter(|c| !c.touches_boundary).count();
    ComponentReport { total: out.len(), bounded, unbounded: out.len() - bounded, components: out }
}

/// Whether lattice index `res - k` is the point `-x_k` in both axes.
fn is_mirror(grid: &RasterGrid, a: usize, b: usize) -> bool {
    let p = grid.point(a, b);
    let q = grid.point(grid.res - a, grid.res - b);
    p.iter().zip(&q).all(|(x, y)| (x + y).is_zero())
}

fn cross(o: (i64, i64), a: (i64, i64), b: (i64, i64)) -> i64 {
    (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
}

/// Monotone chain hull of pixel centres, counter-clockwise without collinear points.
fn convex_hull(cells: &[(usize, usize)]) -> Vec<(i64, i64)> {
    let mut pts: Vec<(i64, i64)> = cells.iter().map(|&(a, b)| (a as i64, b as i64)).collect();
    pts.sort_unstable();
    pts.dedup();
    if pts.len() < 3 {
        return pts;
    }
    let mut lower: Vec<(i64, i64)> = Vec::new();
    for &p in &pts {
        while lower.len() >= 2 && cross(lower[lower.len() - 2], lower[lower.len() - 1], p) <= 0 {
            lower.pop();
        }
        lower.push(p);
    }
    let mut upper: Vec<(i64, i64)> = Vec::new();
    for &p in pts.iter().rev() {
        while upper.len() >= 2 && cross(upper[upper.len() - 2], upper[upper.len() - 1], p) <= 0 {
            upper.pop();
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

fn polygon_area2(h: &[(i64, i64)]) -> i64 {
    if h.len() < 3 {
        return 0;
    }
    let mut s = 0;
    for k in 0..h.len() {
        let (a, b) = (h[k], h[(k + 1) % h.len()]);
        s += a.0 * b.1 - a.1 * b.0;
    }
    s.abs()
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

fn hull_boundary_points(h: &[(i64, i64)]) -> usize {
    match h.len() {
        0 => 0,
        1 => 1,
        2 => gcd(h[1].0 - h[0].0, h[1].1 - h[0].1) as usize + 1,
        n => (0..n)
            .map(|k| {
                let (a, b) = (h[k], h[(k + 1) % n]);
                gcd(b.0 - a.0, b.1 - a.1) as usize
            })
            .sum(),
    }
}

fn max_edge(h: &[(i64, i64)]) -> f64 {
    let n = h.len();
    if n < 2 {
        return 0.0;
    }
    (0..n)
        .map(|k| {
            let (a, b) = (h[k], h[(k + 1) % n]);
            (((b.0 - a.0).pow(2) + (b.1 - a.1).pow(2)) as f64).sqrt()
        })
        .fold(0.0, f64::max)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::int;
    use crate::algebra::mpoly::mpoly_from_ints;

    fn exact() -> MembershipConfig {
        MembershipConfig::with_mode(Mode::Exact)
    }

    #[test]
    fn coordinate_cross_raster() {
        let f = mpoly_from_ints(2, &[(1, &[1, 1])]);
        let g = raster(&f, &RasterBox::square(int(2)).unwrap(), 64, &exact()).unwrap();
        for j in 0..64 {
            for i in 0..64 {
                let on_axis = i == 32 || j == 32;
                assert_eq!(g.cell(i, j) == Cell::Inside, on_axis, "({i}, {j})");
            }
        }
        let rep = components(&g, &ComponentConfig::default());
        assert_eq!((rep.total, rep.unbounded, rep.bounded), (4, 4, 0));
        for c in &rep.components {
            assert!(!c.strictly_convex);
            assert!(c.paired_with.is_some());
        }
    }

    #[test]
    fn disk_is_the_complement() {
        let f = mpoly_from_ints(2, &[(1, &[2, 0]), (1, &[0, 2]), (25, &[0, 0])]);
        let g = raster(&f, &RasterBox::square(int(10)).unwrap(), 128, &exact()).unwrap();
        for j in 0..128 {
            for i in 0..128 {
                let p = g.point(i, j);
                let r2 = &p[0] * &p[0] + &p[1] * &p[1];
                assert_eq!(g.cell(i, j) == Cell::Outside, r2 < int(25));
            }
        }
        let rep = components(&g, &ComponentConfig::default());
        assert_eq!(rep.bounded, 1);
        assert!(rep.components[0].strictly_convex);
    }

    #[test]
    fn all_outside_is_one_component() {
        let f = MPoly::constant(2, crate::algebra::CRational::one());
        let g = raster(&f, &RasterBox::square(int(1)).unwrap(), 16, &exact()).unwrap();
        let rep = components(&g, &ComponentConfig::default());
        assert_eq!((rep.total, rep.unbounded), (1, 1));
    }

    #[test]
    fn pgm_layout() {
        let f = mpoly_from_ints(2, &[(1, &[0, 1])]);
        let g = raster(&f, &RasterBox::square(int(1)).unwrap(), 8, &exact()).unwrap();
        let pgm = g.to_pgm();
        let header = b"P5\n8 8\n255\n";
        assert_eq!(&pgm[..header.len()], header);
        assert_eq!(pgm.len(), header.len() + 64);
        // Row y2 = 0 is j = 4, printed as the fourth row from the top (index 3).
        let row = &pgm[header.len() + 3 * 8..header.len() + 4 * 8];
        assert!(row.iter().all(|&b| b == 0));
    }
}

//! Unbounded complement components of `I(f)` against the sectors of `I(init f)`.
//!
//! A component whose recession cone is full-dimensional fills, far out, most of
//! one complement sector of the initial form. Components with a thinner
//! recession cone occupy a vanishing share of every sector's far field.

use serde::Serialize;

use super::raster::{components, raster, ComponentConfig, ComponentReport, RasterBox, RasterGrid};
use super::MembershipConfig;
use crate::algebra::MPoly;
use crate::error::{Error, Result};

#[derive(Clone, Debug, Serialize)]
pub struct RecessionMatch {
    pub component: usize,
    pub sector: usize,
    /// Share of the sector's far-field ring covered by the component.
    pub coverage: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct UnboundedComponent {
    pub id: usize,
    /// Angular measure of the component's far-field ring, in radians.
    pub angular_extent: f64,
    pub matched_sector: Option<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct RecessionReport {
    pub polynomial: String,
    pub initial_form: String,
    pub components: usize,
    pub sectors: usize,
    pub unbounded: Vec<UnboundedComponent>,
    pub matches: Vec<RecessionMatch>,
    /// Unbounded components left unmatched: recession cone not full-dimensional.
    pub thin: Vec<usize>,
    pub pixel_angle: f64,
    #[serde(skip)]
    pub f_report: Option<ComponentReport>,
    #[serde(skip)]
    pub init_report: Option<ComponentReport>,
}

/// Share of a component's far-field pixels that must fall in one sector.
const MIN_PURITY: f64 = 0.75;
/// Share of a sector's far-field ring its matched component must cover.
const MIN_COVERAGE: f64 = 0.25;

/// Width of the far-field ring, in pixels.
fn ring_width(res: usize) -> usize {
    (res / 16).max(2)
}

fn ring_cells(grid: &RasterGrid) -> Vec<(usize, usize)> {
    let res = grid.res;
    let w = ring_width(res);
    let mut out = Vec::new();
    for j in 0..res {
        for i in 0..res {
            let d = i.min(j).min(res - 1 - i).min(res - 1 - j);
            if d < w {
                out.push((i, j));
            }
        }
    }
    out
}

pub fn recession_correspondence(
    f: &MPoly,
    bbox: &RasterBox,
    res: usize,
    mcfg: &MembershipConfig,
    ccfg: &ComponentConfig,
) -> Result<RecessionReport> {
    if f.nvars() != 2 {
        return Err(Error::UnsupportedDimension(f.nvars()));
    }
    let init = f.initial_form()?;
    let gf = raster(f, bbox, res, mcfg)?;
    let gi = raster(&init, bbox, res, mcfg)?;
    let rf = components(&gf, ccfg);
    let ri = components(&gi, ccfg);
    let label = |rep: &ComponentReport| {
        let mut l = vec![usize::MAX; res * res];
        for c in &rep.components {
            for &(i, j) in &c.cells {
                l[j * res + i] = c.id;
            }
        }
        l
    };
    let (lf, li) = (label(&rf), label(&ri));
    let ring = ring_cells(&gf);
    let mut sector_ring = vec![0usize; ri.total];
    for &(i, j) in &ring {
        if li[j * res + i] != usize::MAX {
            sector_ring[li[j * res + i]] += 1;
        }
    }
    // Angular bins of one pixel on the outer frame.
    let bins = 4 * res;
    let pixel_angle = std::f64::consts::TAU / bins as f64;
    let centre = (res as f64 / 2.0, res as f64 / 2.0);
    let mut unbounded = Vec::new();
    let mut candidates = Vec::new();
    for c in rf.components.iter().filter(|c| c.touches_boundary) {
        let mut overlap = vec![0usize; ri.total];
        let mut hit = vec![false; bins];
        for &(i, j) in &ring {
            if lf[j * res + i] != c.id {
                continue;
            }
            let a = (j as f64 - centre.1).atan2(i as f64 - centre.0) + std::f64::consts::PI;
            hit[((a / pixel_angle) as usize).min(bins - 1)] = true;
            if li[j * res + i] != usize::MAX {
                overlap[li[j * res + i]] += 1;
            }
        }
        let extent = hit.iter().filter(|&&h| h).count() as f64 * pixel_angle;
        // A recession cone inside one sector keeps the far field inside that
        // sector; a recession ray on a boundary line straddles two sectors.
        let in_sectors: usize = overlap.iter().sum();
        if let Some((s, &o)) = overlap.iter().enumerate().max_by_key(|(_, &o)| o) {
            let purity = o as f64 / in_sectors.max(1) as f64;
            if sector_ring[s] > 0 && extent > pixel_angle && purity >= MIN_PURITY {
                candidates.push((c.id, s, o as f64 / sector_ring[s] as f64));
            }
        }
        unbounded.push(UnboundedComponent { id: c.id, angular_extent: extent, matched_sector: None });
    }
    // Each sector goes to the qualifying component covering most of its ring.
    let mut matches = Vec::new();
    for s in 0..ri.total {
        let best = candidates.iter().filter(|c| c.1 == s).max_by(|a, b| a.2.partial_cmp(&b.2).expect("finite"));
        if let Some(&(id, _, cov)) = best {
            if cov >= MIN_COVERAGE {
                matches.push(RecessionMatch { component: id, sector: s, coverage: cov });
            }
        }
    }
    for u in &mut unbounded {
        u.matched_sector = matches.iter().find(|m| m.component == u.id).map(|m| m.sector);
    }
    let thin = unbounded.iter().filter(|u| u.matched_sector.is_none()).map(|u| u.id).collect();
    Ok(RecessionReport {
        polynomial: f.to_string(),
        initial_form: init.to_string(),
        components: rf.total,
        sectors: ri.total,
        unbounded,
        matches,
        thin,
        pixel_angle,
        f_report: Some(rf),
        init_report: Some(ri),
    })
}

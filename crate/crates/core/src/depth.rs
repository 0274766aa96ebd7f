//! Depth measures for functional data.
//!
//! Every measure scores how central a curve sits within a sample observed
//! on a common grid. All pointwise comparisons are non-strict, and when the
//! target curve belongs to the sample it is compared against all `n`
//! curves, itself included. Band-type depths enumerate subsets of distinct
//! indices exactly; the implementations here count with integers and
//! divide once at the end, so they agree bit-for-bit with a direct
//! enumeration of the definition.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::sample::{Curve, FunctionalSample};

/// Default number of curves defining a band for band depth.
pub const DEFAULT_BAND_ORDER: usize = 3;

/// Default subset size for modified band depth.
pub const DEFAULT_MODIFIED_BAND_ORDER: usize = 2;

/// Default quantile of pairwise distances used as the h-mode bandwidth.
pub const DEFAULT_BANDWIDTH_QUANTILE: f64 = 0.15;

/// How the h-mode kernel bandwidth is chosen.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum BandwidthRule {
    /// Use the given bandwidth as-is; must be positive.
    Fixed(f64),
    /// Use the empirical quantile (nearest-rank, in (0, 1]) of the
    /// pairwise Euclidean distances within the sample.
    DistanceQuantile(f64),
}

impl Default for BandwidthRule {
    fn default() -> Self {
        BandwidthRule::DistanceQuantile(DEFAULT_BANDWIDTH_QUANTILE)
    }
}

/// A depth measure together with its parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum DepthMethod {
    /// Half-region depth: the smaller of the fractions of curves lying
    /// entirely above or entirely below the target.
    HalfRegion,
    /// Majority depth: fraction of sample curves whose majority region
    /// contains the target entirely.
    Majority,
    /// Band depth with subset sizes `2..=order`.
    Band { order: usize },
    /// Modified band depth with subsets of exactly `order` curves.
    ModifiedBand { order: usize },
    /// Spatial depth, one minus the norm of the mean unit direction.
    Spatial,
    /// Kernel (h-mode) depth with the given bandwidth rule.
    HMode { bandwidth: BandwidthRule },
}

/// Depths for every curve of a sample, in input order.
#[derive(Debug, Clone, PartialEq)]
pub struct DepthVector {
    pub method: DepthMethod,
    pub values: Vec<f64>,
}

impl DepthVector {
    /// Number of scored curves.
    pub fn len(&self) -> usize {
        self.values.len()
    }

    /// True when no curves were scored.
    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

fn check_on_grid(x: &Curve, sample: &FunctionalSample) -> Result<()> {
    if x.len() != sample.grid().len() {
        return Err(Error::LengthMismatch {
            expected: sample.grid().len(),
            actual: x.len(),
        });
    }
    Ok(())
}

/// True when `a(t) >= b(t)` at every grid point.
pub fn dominates(a: &Curve, b: &Curve) -> Result<bool> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch {
            expected: a.len(),
            actual: b.len(),
        });
    }
    Ok(a.values().iter().zip(b.values()).all(|(x, y)| x >= y))
}

/// Half-region depth of `x` with respect to `sample`:
/// `min(#above, #below) / n`, where a curve counts as above (below) when
/// it dominates (is dominated by) `x` at every grid point.
pub fn half_region_depth(x: &Curve, sample: &FunctionalSample) -> Result<f64> {
    check_on_grid(x, sample)?;
    let mut above = 0usize;
    let mut below = 0usize;
    for c in sample.curves() {
        if dominates(c, x)? {
            above += 1;
        }
        if dominates(x, c)? {
            below += 1;
        }
    }
    Ok(above.min(below) as f64 / sample.len() as f64)
}

/// Majority depth of `x` with respect to `sample`.
///
/// For each sample curve `r`, the majority region is the half region
/// (entirely-above or entirely-below `r`) holding the larger share of the
/// sample; on a tie both regions count. The depth is the fraction of
/// sample curves whose majority region contains `x` entirely.
pub fn functional_majority_depth(x: &Curve, sample: &FunctionalSample) -> Result<f64> {
    check_on_grid(x, sample)?;
    let (upper_mass, lower_mass) = region_mass(sample)?;
    majority_with_mass(x, sample, &upper_mass, &lower_mass)
}

/// Half-region masses for every sample curve: `upper[r]` counts curves
/// dominating `r`, `lower[r]` counts curves dominated by `r`, both
/// including `r` itself.
fn region_mass(sample: &FunctionalSample) -> Result<(Vec<usize>, Vec<usize>)> {
    let n = sample.len();
    let mut upper = vec![0usize; n];
    let mut lower = vec![0usize; n];
    for (i, a) in sample.curves().iter().enumerate() {
        for (j, b) in sample.curves().iter().enumerate() {
            if dominates(a, b)? {
                upper[j] += 1;
                lower[i] += 1;
            }
        }
    }
    Ok((upper, lower))
}

fn majority_with_mass(
    x: &Curve,
    sample: &FunctionalSample,
    upper_mass: &[usize],
    lower_mass: &[usize],
) -> Result<f64> {
    let mut contained = 0usize;
    for (r, c) in sample.curves().iter().enumerate() {
        let in_upper = upper_mass[r] >= lower_mass[r] && dominates(x, c)?;
        let in_lower = lower_mass[r] >= upper_mass[r] && dominates(c, x)?;
        if in_upper || in_lower {
            contained += 1;
        }
    }
    Ok(contained as f64 / sample.len() as f64)
}

fn check_band(x: &Curve, band: &[Curve]) -> Result<()> {
    if band.len() < 2 {
        return Err(Error::BandTooSmall { size: band.len() });
    }
    for c in band {
        if c.len() != x.len() {
            return Err(Error::LengthMismatch {
                expected: x.len(),
                actual: c.len(),
            });
        }
    }
    Ok(())
}

/// True when `x` lies inside the pointwise envelope of `band` at every
/// grid point (boundary included).
pub fn in_band(x: &Curve, band: &[Curve]) -> Result<bool> {
    check_band(x, band)?;
    Ok((0..x.len()).all(|k| point_in_band(x, band, k)))
}

/// Fraction of grid points at which `x` lies inside the pointwise
/// envelope of `band` (boundary included).
pub fn band_fraction(x: &Curve, band: &[Curve]) -> Result<f64> {
    check_band(x, band)?;
    let inside = (0..x.len()).filter(|&k| point_in_band(x, band, k)).count();
    Ok(inside as f64 / x.len() as f64)
}

fn point_in_band(x: &Curve, band: &[Curve], k: usize) -> bool {
    let v = x.values()[k];
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for c in band {
        let w = c.values()[k];
        lo = lo.min(w);
        hi = hi.max(w);
    }
    lo <= v && v <= hi
}

fn check_order(order: usize, n: usize) -> Result<()> {
    if order < 2 {
        return Err(Error::OrderTooSmall { order });
    }
    if order > n {
        return Err(Error::OrderExceedsSample { order, n });
    }
    Ok(())
}

/// Band depth of `x` with respect to `sample`: the sum over subset sizes
/// `j = 2..=order` of the fraction of `j`-subsets of the sample whose
/// envelope contains `x` at every grid point.
///
/// Subsets range over distinct indices, so when `x` is a sample member the
/// subsets through its own index contain it trivially. The count is exact:
/// each curve is reduced to bitmasks of grid points lying strictly above
/// and strictly below `x`, and a subset covers `x` exactly when neither
/// mask intersection survives.
pub fn band_depth(x: &Curve, sample: &FunctionalSample, order: usize) -> Result<f64> {
    check_on_grid(x, sample)?;
    check_order(order, sample.len())?;
    let masks = ExcursionMasks::new(x, sample);
    let mut depth = 0.0;
    for j in 2..=order {
        let covering = masks.count_covering_subsets(j);
        depth += covering as f64 / binomial(sample.len(), j) as f64;
    }
    Ok(depth)
}

/// Modified band depth of `x` with respect to `sample`: the average over
/// all `order`-subsets of the fraction of grid points at which `x` lies
/// inside the subset's envelope.
///
/// Computed pointwise: a subset misses `x` at a grid point exactly when
/// all its members are strictly above or all strictly below, so the number
/// of covering subsets at that point is
/// `C(n, order) - C(#above, order) - C(#below, order)`. Point counts are
/// accumulated as integers and divided once, which reproduces the subset
/// enumeration bit-for-bit.
pub fn modified_band_depth(x: &Curve, sample: &FunctionalSample, order: usize) -> Result<f64> {
    check_on_grid(x, sample)?;
    check_order(order, sample.len())?;
    let n = sample.len();
    let t = x.len();
    let total = binomial(n, order);
    let mut covered: u128 = 0;
    for k in 0..t {
        let v = x.values()[k];
        let mut above = 0usize;
        let mut below = 0usize;
        for c in sample.curves() {
            let w = c.values()[k];
            if w > v {
                above += 1;
            } else if w < v {
                below += 1;
            }
        }
        covered += total - binomial(above, order) - binomial(below, order);
    }
    Ok(covered as f64 / (total as f64 * t as f64))
}

/// Spatial depth of `x` with respect to `sample`: one minus the Euclidean
/// norm of the average unit direction from the sample curves toward `x`.
/// A zero difference (the self term of a sample member) contributes the
/// zero vector exactly.
pub fn functional_spatial_depth(x: &Curve, sample: &FunctionalSample) -> Result<f64> {
    check_on_grid(x, sample)?;
    let t = x.len();
    let n = sample.len() as f64;
    let mut acc = vec![0.0; t];
    let mut diff = vec![0.0; t];
    for c in sample.curves() {
        let mut sq = 0.0;
        for ((d, &xv), &cv) in diff.iter_mut().zip(x.values()).zip(c.values()) {
            *d = xv - cv;
            sq += *d * *d;
        }
        if sq > 0.0 {
            let norm = sq.sqrt();
            for (a, &d) in acc.iter_mut().zip(&diff) {
                *a += d / norm;
            }
        }
    }
    let mut mean_sq = 0.0;
    for v in &acc {
        let m = v / n;
        mean_sq += m * m;
    }
    Ok(1.0 - mean_sq.sqrt())
}

/// Kernel (h-mode) depth of `x` with respect to `sample`: the average
/// Gaussian kernel weight `exp(-(d/h)^2 / 2)` over the Euclidean distances
/// `d` from `x` to each sample curve. Reported as a diagnostic alongside
/// the rank-based depths; it measures local crowding rather than
/// centrality.
pub fn h_mode_depth(x: &Curve, sample: &FunctionalSample, rule: BandwidthRule) -> Result<f64> {
    check_on_grid(x, sample)?;
    let h = resolve_bandwidth(sample, rule)?;
    Ok(h_mode_with_bandwidth(x, sample, h))
}

/// Bandwidth implied by `rule` for this sample.
///
/// The quantile rule sorts all `n(n-1)/2` pairwise distances and picks the
/// nearest-rank quantile, `d[ceil(p * m)]` in 1-based indexing. It fails
/// on samples without at least one positive pairwise distance.
pub fn resolve_bandwidth(sample: &FunctionalSample, rule: BandwidthRule) -> Result<f64> {
    match rule {
        BandwidthRule::Fixed(h) => {
            if !h.is_finite() || h <= 0.0 {
                Err(Error::NonPositiveBandwidth { value: h })
            } else {
                Ok(h)
            }
        }
        BandwidthRule::DistanceQuantile(p) => {
            if !p.is_finite() || p <= 0.0 || p > 1.0 {
                return Err(Error::InvalidBandwidthQuantile { value: p });
            }
            let n = sample.len();
            if n < 2 {
                return Err(Error::BandwidthNeedsPairs);
            }
            let mut dists = Vec::with_capacity(n * (n - 1) / 2);
            for i in 0..n {
                for j in (i + 1)..n {
                    dists.push(distance(sample.curve(i), sample.curve(j)));
                }
            }
            dists.sort_by(f64::total_cmp);
            let m = dists.len();
            let rank = ((p * m as f64).ceil() as usize).clamp(1, m);
            let h = dists[rank - 1];
            if h <= 0.0 {
                return Err(Error::NonPositiveBandwidth { value: h });
            }
            Ok(h)
        }
    }
}

fn distance(a: &Curve, b: &Curve) -> f64 {
    a.values()
        .iter()
        .zip(b.values())
        .map(|(x, y)| (x - y) * (x - y))
        .sum::<f64>()
        .sqrt()
}

fn h_mode_with_bandwidth(x: &Curve, sample: &FunctionalSample, h: f64) -> f64 {
    let sum: f64 = sample
        .curves()
        .iter()
        .map(|c| {
            let d = distance(x, c);
            (-(d / h) * (d / h) / 2.0).exp()
        })
        .sum();
    sum / sample.len() as f64
}

/// Depths of every sample curve under `method`, in input order.
///
/// Results are bit-identical to calling the single-curve operation on each
/// member; shared work (majority region masses, the h-mode bandwidth) is
/// computed once per sample. Targets are scored in parallel.
pub fn compute_depths(sample: &FunctionalSample, method: DepthMethod) -> Result<DepthVector> {
    let values = match method {
        DepthMethod::HalfRegion => par_scores(sample, |x| half_region_depth(x, sample))?,
        DepthMethod::Majority => {
            let (upper, lower) = region_mass(sample)?;
            par_scores(sample, |x| majority_with_mass(x, sample, &upper, &lower))?
        }
        DepthMethod::Band { order } => {
            check_order(order, sample.len())?;
            par_scores(sample, |x| band_depth(x, sample, order))?
        }
        DepthMethod::ModifiedBand { order } => {
            check_order(order, sample.len())?;
            par_scores(sample, |x| modified_band_depth(x, sample, order))?
        }
        DepthMethod::Spatial => par_scores(sample, |x| functional_spatial_depth(x, sample))?,
        DepthMethod::HMode { bandwidth } => {
            let h = resolve_bandwidth(sample, bandwidth)?;
            par_scores(sample, |x| Ok(h_mode_with_bandwidth(x, sample, h)))?
        }
    };
    Ok(DepthVector { method, values })
}

fn par_scores<F>(sample: &FunctionalSample, score: F) -> Result<Vec<f64>>
where
    F: Fn(&Curve) -> Result<f64> + Sync + Send,
{
    sample.curves().par_iter().map(score).collect()
}

/// Bitmasks of grid points where each sample curve sits strictly above or
/// strictly below a fixed target. A subset of curves covers the target
/// everywhere exactly when the bitwise AND of its above-masks and of its
/// below-masks are both zero.
struct ExcursionMasks {
    words: usize,
    n: usize,
    t_bits: usize,
    above: Vec<u64>,
    below: Vec<u64>,
}

impl ExcursionMasks {
    fn new(x: &Curve, sample: &FunctionalSample) -> ExcursionMasks {
        let t = x.len();
        let n = sample.len();
        let words = t.div_ceil(64);
        let mut above = vec![0u64; n * words];
        let mut below = vec![0u64; n * words];
        for (i, c) in sample.curves().iter().enumerate() {
            for k in 0..t {
                let (w, b) = (k / 64, k % 64);
                // `above` marks points where curve i fails to cover the
                // target from above, `below` where it fails from below.
                if c.values()[k] < x.values()[k] {
                    above[i * words + w] |= 1 << b;
                }
                if c.values()[k] > x.values()[k] {
                    below[i * words + w] |= 1 << b;
                }
            }
        }
        ExcursionMasks {
            words,
            n,
            t_bits: t,
            above,
            below,
        }
    }

    /// Number of `size`-subsets of distinct indices whose envelope covers
    /// the target at every grid point. A subset covers exactly when the
    /// AND of its members' above-masks and of their below-masks are both
    /// zero.
    fn count_covering_subsets(&self, size: usize) -> u128 {
        if self.words == 1 {
            let init = low_bits(self.t_bits);
            self.recurse_word(0, size, init, init)
        } else {
            let init = full_mask(self.words, self.t_bits);
            self.recurse(0, size, &init, &init)
        }
    }

    /// Single-word fast path for grids of at most 64 points.
    fn recurse_word(&self, start: usize, slots: usize, acc_above: u64, acc_below: u64) -> u128 {
        if acc_above == 0 && acc_below == 0 {
            // Every completion covers; count the remaining choices.
            return binomial(self.n - start, slots);
        }
        if slots == 0 {
            return 0;
        }
        let mut total = 0u128;
        for i in start..=(self.n - slots) {
            total += self.recurse_word(
                i + 1,
                slots - 1,
                acc_above & self.above[i],
                acc_below & self.below[i],
            );
        }
        total
    }

    fn recurse(&self, start: usize, slots: usize, acc_above: &[u64], acc_below: &[u64]) -> u128 {
        if acc_above.iter().all(|&w| w == 0) && acc_below.iter().all(|&w| w == 0) {
            return binomial(self.n - start, slots);
        }
        if slots == 0 {
            return 0;
        }
        let mut total = 0u128;
        let mut next_a = vec![0u64; self.words];
        let mut next_b = vec![0u64; self.words];
        for i in start..=(self.n - slots) {
            for w in 0..self.words {
                next_a[w] = acc_above[w] & self.above[i * self.words + w];
                next_b[w] = acc_below[w] & self.below[i * self.words + w];
            }
            total += self.recurse(i + 1, slots - 1, &next_a, &next_b);
        }
        total
    }
}

fn low_bits(bits: usize) -> u64 {
    if bits >= 64 {
        u64::MAX
    } else {
        (1u64 << bits) - 1
    }
}

fn full_mask(words: usize, bits: usize) -> Vec<u64> {
    let mut mask = vec![0u64; words];
    for k in 0..bits {
        mask[k / 64] |= 1 << (k % 64);
    }
    mask
}

/// Binomial coefficient `C(n, k)`; zero when `k > n`. Exact for the small
/// subset orders used by band-type depths.
fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut result: u128 = 1;
    for i in 1..=k {
        result = result * (n - k + i) as u128 / i as u128;
    }
    result
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sample::Grid;

    /// Sample of constant curves on a grid of `t` points.
    fn constants(values: &[f64], t: usize) -> FunctionalSample {
        let grid = Grid::equidistant(t).unwrap();
        let rows = values.iter().map(|&v| vec![v; t]).collect();
        FunctionalSample::from_rows(grid, rows).unwrap()
    }

    fn constant(v: f64, t: usize) -> Curve {
        Curve::new(vec![v; t]).unwrap()
    }

    #[test]
    fn binomial_small_values() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(50, 3), 19_600);
        assert_eq!(binomial(4, 0), 1);
        assert_eq!(binomial(3, 5), 0);
    }

    #[test]
    fn dominates_is_non_strict() {
        let a = Curve::new(vec![1.0, 2.0]).unwrap();
        let b = Curve::new(vec![1.0, 1.5]).unwrap();
        assert!(dominates(&a, &b).unwrap());
        assert!(!dominates(&b, &a).unwrap());
        assert!(dominates(&a, &a).unwrap());
    }

    #[test]
    fn half_region_depth_on_constants() {
        let s = constants(&[0.0, 1.0, 2.0], 3);
        let d = compute_depths(&s, DepthMethod::HalfRegion).unwrap();
        assert_eq!(d.values, vec![1.0 / 3.0, 2.0 / 3.0, 1.0 / 3.0]);
    }

    #[test]
    fn half_region_depth_of_external_curves() {
        let s = constants(&[0.0, 1.0, 2.0], 2);
        let far = constant(5.0, 2);
        assert_eq!(half_region_depth(&far, &s).unwrap(), 0.0);
        let two = constants(&[1.0, 2.0], 2);
        let mid = constant(1.5, 2);
        assert_eq!(half_region_depth(&mid, &two).unwrap(), 0.5);
    }

    #[test]
    fn majority_depth_on_constants() {
        let s = constants(&[0.0, 1.0, 2.0, 3.0], 2);
        assert_eq!(functional_majority_depth(&constant(1.0, 2), &s).unwrap(), 1.0);
        assert_eq!(functional_majority_depth(&constant(0.0, 2), &s).unwrap(), 0.75);
    }

    #[test]
    fn majority_depth_counts_members_of_each_majority_region() {
        // For {0, 2} the majority region of 0 is the upper one (mass 2
        // vs 1) and of 2 the lower one; both members lie in both majority
        // regions, so each scores 1.
        let s = constants(&[0.0, 2.0], 2);
        let d = compute_depths(&s, DepthMethod::Majority).unwrap();
        assert_eq!(d.values, vec![1.0, 1.0]);
    }

    #[test]
    fn band_membership_is_boundary_inclusive() {
        let band = vec![constant(1.0, 4), constant(2.0, 4)];
        assert!(in_band(&constant(1.5, 4), &band).unwrap());
        assert!(in_band(&constant(1.0, 4), &band).unwrap());
        assert!(!in_band(&constant(0.5, 4), &band).unwrap());
        let mixed = Curve::new(vec![1.5, 2.5, 1.0, 0.0]).unwrap();
        assert_eq!(band_fraction(&mixed, &band).unwrap(), 0.5);
    }

    #[test]
    fn band_needs_two_curves() {
        let band = vec![constant(1.0, 2)];
        assert!(matches!(
            in_band(&constant(1.0, 2), &band),
            Err(Error::BandTooSmall { size: 1 })
        ));
    }

    #[test]
    fn band_depth_on_constants() {
        let s = constants(&[0.0, 1.0, 2.0], 3);
        let d = compute_depths(&s, DepthMethod::Band { order: 3 }).unwrap();
        // Ends: 2 of 3 pairs plus the single triple; middle: everything.
        assert_eq!(d.values, vec![2.0 / 3.0 + 1.0, 2.0, 2.0 / 3.0 + 1.0]);
    }

    #[test]
    fn band_depth_of_outside_curve_is_zero() {
        let s = constants(&[0.0, 1.0, 2.0], 3);
        assert_eq!(band_depth(&constant(5.0, 3), &s, 2).unwrap(), 0.0);
        assert_eq!(band_depth(&constant(5.0, 3), &s, 3).unwrap(), 0.0);
    }

    #[test]
    fn band_depth_validates_order() {
        let s = constants(&[0.0, 1.0, 2.0], 3);
        let x = constant(1.0, 3);
        assert!(matches!(
            band_depth(&x, &s, 1),
            Err(Error::OrderTooSmall { order: 1 })
        ));
        assert!(matches!(
            band_depth(&x, &s, 4),
            Err(Error::OrderExceedsSample { order: 4, n: 3 })
        ));
    }

    #[test]
    fn modified_band_depth_on_constants() {
        let s = constants(&[0.0, 1.0, 2.0], 3);
        let d = compute_depths(&s, DepthMethod::ModifiedBand { order: 2 }).unwrap();
        assert_eq!(d.values, vec![2.0 / 3.0, 1.0, 2.0 / 3.0]);
    }

    #[test]
    fn modified_band_depth_counts_partial_coverage() {
        // One point of three inside the band of the only pair.
        let grid = Grid::equidistant(3).unwrap();
        let s = FunctionalSample::from_rows(
            grid,
            vec![vec![0.0, 0.0, 0.0], vec![1.0, 1.0, 1.0]],
        )
        .unwrap();
        let x = Curve::new(vec![0.5, -1.0, 2.0]).unwrap();
        assert_eq!(modified_band_depth(&x, &s, 2).unwrap(), 1.0 / 3.0);
    }

    #[test]
    fn spatial_depth_of_midpoint_between_two_constants() {
        let s = constants(&[0.0, 2.0], 4);
        // Unit directions cancel for the midpoint; for a member, the self
        // term is zero and the other contributes half a unit vector.
        assert_eq!(functional_spatial_depth(&constant(1.0, 4), &s).unwrap(), 1.0);
        assert_eq!(functional_spatial_depth(&constant(0.0, 4), &s).unwrap(), 0.5);
    }

    #[test]
    fn spatial_depth_is_symmetric_around_the_center() {
        let s = constants(&[0.0, 1.0, 2.0], 5);
        let d = compute_depths(&s, DepthMethod::Spatial).unwrap();
        assert_eq!(d.values[1], 1.0);
        assert_eq!(d.values[0], d.values[2]);
        assert!((d.values[0] - 1.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn h_mode_depth_with_fixed_bandwidth() {
        let s = constants(&[0.0, 2.0], 1);
        let expected = (1.0 + (-2.0f64).exp()) / 2.0;
        let got = h_mode_depth(&constant(0.0, 1), &s, BandwidthRule::Fixed(1.0)).unwrap();
        assert!((got - expected).abs() < 1e-15);
    }

    #[test]
    fn h_mode_depth_with_quantile_bandwidth() {
        // Pairwise distances {1, 1, 2}; the 0.15 quantile picks the first,
        // so h = 1 and the center scores (1 + 2 exp(-1/2)) / 3.
        let s = constants(&[0.0, 1.0, 2.0], 1);
        let got = h_mode_depth(&constant(1.0, 1), &s, BandwidthRule::default()).unwrap();
        let expected = (1.0 + 2.0 * (-0.5f64).exp()) / 3.0;
        assert!((got - expected).abs() < 1e-15, "{got} vs {expected}");
    }

    #[test]
    fn quantile_bandwidth_needs_pairs_and_spread() {
        let single = constants(&[1.0], 2);
        assert!(matches!(
            resolve_bandwidth(&single, BandwidthRule::default()),
            Err(Error::BandwidthNeedsPairs)
        ));
        let degenerate = constants(&[1.0, 1.0, 1.0], 2);
        assert!(matches!(
            resolve_bandwidth(&degenerate, BandwidthRule::default()),
            Err(Error::NonPositiveBandwidth { .. })
        ));
        assert!(matches!(
            resolve_bandwidth(&degenerate, BandwidthRule::Fixed(0.0)),
            Err(Error::NonPositiveBandwidth { .. })
        ));
        assert!(matches!(
            resolve_bandwidth(&degenerate, BandwidthRule::DistanceQuantile(1.5)),
            Err(Error::InvalidBandwidthQuantile { .. })
        ));
    }

    #[test]
    fn depth_of_mismatched_curve_is_rejected() {
        let s = constants(&[0.0, 1.0], 3);
        let short = constant(1.0, 2);
        assert!(matches!(
            half_region_depth(&short, &s),
            Err(Error::LengthMismatch { .. })
        ));
        assert!(matches!(
            functional_spatial_depth(&short, &s),
            Err(Error::LengthMismatch { .. })
        ));
    }

    #[test]
    fn monotone_nesting_peaks_at_the_median_constant() {
        let s = constants(&[-2.0, -1.0, 0.0, 1.0, 2.0], 3);
        for method in [
            DepthMethod::HalfRegion,
            DepthMethod::Band { order: 3 },
            DepthMethod::ModifiedBand { order: 2 },
        ] {
            let d = compute_depths(&s, method).unwrap();
            let median = d.values[2];
            for (i, v) in d.values.iter().enumerate() {
                if i != 2 {
                    assert!(v < &median, "{method:?}: values {:?}", d.values);
                }
            }
        }
    }

    #[test]
    fn multiword_grid_matches_single_word_logic() {
        // 70 grid points force the two-word mask path; compare against a
        // 64-point restriction where both paths agree by construction.
        let grid = Grid::equidistant(70).unwrap();
        let rows: Vec<Vec<f64>> = (0..5)
            .map(|i| {
                (1..=70)
                    .map(|k| (0.3 * i as f64 + 0.1 * k as f64).sin() + i as f64 * 0.2)
                    .collect()
            })
            .collect();
        let s = FunctionalSample::from_rows(grid, rows).unwrap();
        for i in 0..5 {
            let fast = band_depth(s.curve(i), &s, 3).unwrap();
            // Re-count by brute force over all pairs and triples,
            // enumerating subsets as bitmasks over the five curves.
            let mut expected = 0.0;
            for order in 2..=3usize {
                let mut count = 0u64;
                for mask in 0u32..32 {
                    if mask.count_ones() as usize != order {
                        continue;
                    }
                    let band: Vec<Curve> = (0..5)
                        .filter(|&j| mask & (1 << j) != 0)
                        .map(|j| s.curve(j).clone())
                        .collect();
                    if in_band(s.curve(i), &band).unwrap() {
                        count += 1;
                    }
                }
                expected += count as f64 / binomial(5, order) as f64;
            }
            assert_eq!(fast, expected, "curve {i}");
        }
    }
}

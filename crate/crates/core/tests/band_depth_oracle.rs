//! Cross-checks the combinatorial band depths against a direct
//! subset-enumeration reference.
//!
//! The reference implementation below shares no code with the library: it
//! materializes every index subset, builds each subset's envelope with plain
//! min/max loops, and checks containment per grid point. Because both sides
//! accumulate integer subset counts and divide in the same order, the two
//! computations must agree bit-for-bit, so the comparisons use exact
//! equality rather than a tolerance.

use curvedepth::{band_depth, modified_band_depth, Curve, FunctionalSample, Grid, RngStream};

/// Every size-`k` subset of `0..n`, in lexicographic order.
fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn extend(start: usize, n: usize, k: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == k {
            out.push(prefix.clone());
            return;
        }
        for i in start..n {
            prefix.push(i);
            extend(i + 1, n, k, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    extend(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// True when `target` lies inside the pointwise envelope of the subset.
fn envelope_contains(rows: &[Vec<f64>], subset: &[usize], target: &[f64]) -> bool {
    target.iter().enumerate().all(|(r, &x)| {
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for &i in subset {
            lo = lo.min(rows[i][r]);
            hi = hi.max(rows[i][r]);
        }
        lo <= x && x <= hi
    })
}

/// Band depth by enumeration: for each subset size `2..=order`, the
/// fraction of subsets whose envelope contains the target everywhere.
fn naive_band_depth(rows: &[Vec<f64>], target: &[f64], order: usize) -> f64 {
    let mut depth = 0.0;
    for k in 2..=order {
        let subs = subsets(rows.len(), k);
        let covering = subs
            .iter()
            .filter(|s| envelope_contains(rows, s, target))
            .count();
        depth += covering as f64 / subs.len() as f64;
    }
    depth
}

/// Modified band depth by enumeration: the average over all `order`-subsets
/// of the fraction of grid points at which the target lies in the envelope.
/// Point counts stay integer until a single final division.
fn naive_modified_band_depth(rows: &[Vec<f64>], target: &[f64], order: usize) -> f64 {
    let subs = subsets(rows.len(), order);
    let t = target.len();
    let mut covered: u128 = 0;
    for sub in &subs {
        for (r, &x) in target.iter().enumerate() {
            let mut lo = f64::INFINITY;
            let mut hi = f64::NEG_INFINITY;
            for &i in sub {
                lo = lo.min(rows[i][r]);
                hi = hi.max(rows[i][r]);
            }
            if lo <= x && x <= hi {
                covered += 1;
            }
        }
    }
    covered as f64 / (subs.len() as f64 * t as f64)
}

/// A random curve: standard normal values, or (on quantizing trials)
/// values drawn from a coarse lattice so that exact ties between curves
/// are common and the strict/non-strict comparisons get exercised.
fn random_row(t: usize, quantize: bool, rng: &mut RngStream) -> Vec<f64> {
    (0..t)
        .map(|_| {
            if quantize {
                (rng.uniform() * 9.0).floor() / 4.0 - 1.0
            } else {
                rng.standard_normal()
            }
        })
        .collect()
}

#[test]
fn band_depths_match_subset_enumeration_exactly() {
    let mut rng = RngStream::from_seed(0x0bad_5eed);
    let mut samples = 0usize;
    let mut comparisons = 0usize;

    for trial in 0..1200 {
        let n = 2 + (rng.uniform() * 7.0) as usize;
        let t = 1 + (rng.uniform() * 5.0) as usize;
        let quantize = trial % 2 == 1;

        let rows: Vec<Vec<f64>> = (0..n).map(|_| random_row(t, quantize, &mut rng)).collect();
        let external = random_row(t, quantize, &mut rng);
        let grid = Grid::equidistant(t).unwrap();
        let sample = FunctionalSample::from_rows(grid, rows.clone()).unwrap();
        samples += 1;

        let mut targets: Vec<Vec<f64>> = rows.clone();
        targets.push(external);

        for target in &targets {
            let x = Curve::new(target.clone()).unwrap();
            for order in 2..=n.min(4) {
                let fast = band_depth(&x, &sample, order).unwrap();
                let naive = naive_band_depth(&rows, target, order);
                assert_eq!(
                    fast, naive,
                    "band depth mismatch: trial {trial}, n {n}, t {t}, order {order}, \
                     quantize {quantize}"
                );

                let fast_mbd = modified_band_depth(&x, &sample, order).unwrap();
                let naive_mbd = naive_modified_band_depth(&rows, target, order);
                assert_eq!(
                    fast_mbd, naive_mbd,
                    "modified band depth mismatch: trial {trial}, n {n}, t {t}, order {order}, \
                     quantize {quantize}"
                );
                comparisons += 2;
            }
        }
    }

    assert!(samples >= 1000, "expected at least 1000 samples, ran {samples}");
    assert!(comparisons >= 10_000, "ran only {comparisons} comparisons");
}

#[test]
fn oracle_agrees_on_handcrafted_constants() {
    // Three constant curves 0, 1, 2 on two grid points. For the middle
    // curve every pair-envelope contains it; for an extreme curve only the
    // two pairs it belongs to do.
    let rows = vec![vec![0.0, 0.0], vec![1.0, 1.0], vec![2.0, 2.0]];
    assert_eq!(naive_band_depth(&rows, &rows[1], 2), 1.0);
    assert_eq!(naive_band_depth(&rows, &rows[0], 2), 2.0 / 3.0);
    assert_eq!(naive_band_depth(&rows, &rows[0], 3), 2.0 / 3.0 + 1.0);
    assert_eq!(naive_modified_band_depth(&rows, &rows[1], 2), 1.0);
    assert_eq!(naive_modified_band_depth(&rows, &rows[0], 2), 2.0 / 3.0);
}

//! Planar geometry primitives and the analytic functions behind the
//! unit-circle arguments: radial projection, 60-degree sector diameter,
//! and the two-chord energy function `g`.

use std::f64::consts::PI;

use thiserror::Error;

/// Half-width of the domain of [`g_delta`], i.e. pi/15.
pub const G_DELTA_MAX: f64 = PI / 15.0;

/// Analytic minimum of `g`, attained at delta = 0: (3 + sqrt 5) / 5.
pub fn g_minimum() -> f64 {
    (3.0 + 5.0f64.sqrt()) / 5.0
}

#[derive(Error, Debug, Clone, PartialEq)]
pub enum GeometryError {
    #[error("coordinates must be finite")]
    NonFiniteCoordinate,
    #[error("radius must be nonnegative, got {0}")]
    NegativeRadius(f64),
    #[error("the origin has no polar angle")]
    OriginHasNoAngle,
    #[error("scale factor must be positive, got {0}")]
    NonPositiveScale(f64),
    #[error("cannot radially project a point at the origin")]
    OriginPoint,
    #[error("point lies outside the unit ball (norm {0})")]
    OutsideUnitBall(f64),
    #[error("delta {0} lies outside [-pi/15, pi/15]")]
    DeltaOutOfRange(f64),
    #[error("sample (r={r}, theta={theta}) lies outside the 60-degree unit sector")]
    OutsideSector { r: f64, theta: f64 },
}

/// A point in the Euclidean plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point2 {
    pub x: f64,
    pub y: f64,
}

impl Point2 {
    pub fn new(x: f64, y: f64) -> Result<Self, GeometryError> {
        if !x.is_finite() || !y.is_finite() {
            return Err(GeometryError::NonFiniteCoordinate);
        }
        Ok(Point2 { x, y })
    }

    pub fn norm(&self) -> f64 {
        self.x.hypot(self.y)
    }
}

/// Polar coordinates with `r >= 0` and the angle normalized to `(-pi, pi]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolarPoint {
    r: f64,
    theta: f64,
}

impl PolarPoint {
    pub fn new(r: f64, theta: f64) -> Result<Self, GeometryError> {
        if !r.is_finite() || !theta.is_finite() {
            return Err(GeometryError::NonFiniteCoordinate);
        }
        if r < 0.0 {
            return Err(GeometryError::NegativeRadius(r));
        }
        Ok(PolarPoint {
            r,
            theta: normalize_angle(theta),
        })
    }

    pub fn r(&self) -> f64 {
        self.r
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }
}

/// Folds an angle into `(-pi, pi]`.
pub fn normalize_angle(theta: f64) -> f64 {
    let mut t = theta % (2.0 * PI);
    if t <= -PI {
        t += 2.0 * PI;
    } else if t > PI {
        t -= 2.0 * PI;
    }
    t
}

/// Euclidean distance between two points.
pub fn dist(p: Point2, q: Point2) -> f64 {
    (p.x - q.x).hypot(p.y - q.y)
}

pub fn polar_to_cart(p: PolarPoint) -> Point2 {
    Point2 {
        x: p.r * p.theta.cos(),
        y: p.r * p.theta.sin(),
    }
}

pub fn cart_to_polar(p: Point2) -> Result<PolarPoint, GeometryError> {
    if p.x == 0.0 && p.y == 0.0 {
        return Err(GeometryError::OriginHasNoAngle);
    }
    PolarPoint::new(p.norm(), p.y.atan2(p.x))
}

/// Scales every point by `rho > 0`; pairwise distances scale by `rho`.
pub fn apply_scaling(points: &[Point2], rho: f64) -> Result<Vec<Point2>, GeometryError> {
    if !(rho > 0.0) {
        return Err(GeometryError::NonPositiveScale(rho));
    }
    Ok(points
        .iter()
        .map(|p| Point2 {
            x: rho * p.x,
            y: rho * p.y,
        })
        .collect())
}

/// Moves every point of the punctured unit ball radially outward onto the
/// unit circle, keeping its angle. When all pairwise input distances exceed
/// 1, no pairwise distance decreases.
pub fn radial_project(points: &[Point2]) -> Result<Vec<Point2>, GeometryError> {
    points
        .iter()
        .map(|p| {
            let n = p.norm();
            if n == 0.0 {
                return Err(GeometryError::OriginPoint);
            }
            if n > 1.0 + 1e-12 {
                return Err(GeometryError::OutsideUnitBall(n));
            }
            Ok(Point2 {
                x: p.x / n,
                y: p.y / n,
            })
        })
        .collect()
}

/// Interference at a unit-circle point from its two neighbors at angular
/// offsets `2pi/5 + delta` and `2pi/5 - delta`:
///
/// `g(delta) = 1/(4(1 - cos(2pi/5 + delta))^2) + 1/(4(1 - cos(2pi/5 - delta))^2)`
pub fn g_delta(delta: f64) -> Result<f64, GeometryError> {
    if !delta.is_finite() || delta.abs() > G_DELTA_MAX + 1e-12 {
        return Err(GeometryError::DeltaOutOfRange(delta));
    }
    let term = |angle: f64| {
        let c = 1.0 - angle.cos();
        1.0 / (4.0 * c * c)
    };
    Ok(term(2.0 * PI / 5.0 + delta) + term(2.0 * PI / 5.0 - delta))
}

/// Grid minimum of `g` over `[-pi/15, pi/15]`.
///
/// Returns `(delta_star, g_star)`. The grid always contains 0 for odd
/// `grid_points`, and the global minimum is at 0.
pub fn minimize_g(grid_points: usize) -> (f64, f64) {
    assert!(grid_points >= 3, "need at least 3 grid points");
    let mut best = (f64::NAN, f64::INFINITY);
    for k in 0..grid_points {
        let delta = -G_DELTA_MAX + 2.0 * G_DELTA_MAX * k as f64 / (grid_points - 1) as f64;
        let value = g_delta(delta).expect("grid point inside domain");
        if value < best.1 {
            best = (delta, value);
        }
    }
    best
}

/// Maximum pairwise distance among samples in the closed 60-degree sector
/// `{(r, theta): r in [0,1], theta in [0, pi/3]}` of the unit ball.
/// The sector diameter is 1, so the result never exceeds 1 (mod rounding).
pub fn max_pairwise_distance_in_sector(samples: &[PolarPoint]) -> Result<f64, GeometryError> {
    let eps = 1e-12;
    for s in samples {
        if s.r > 1.0 + eps || s.theta < -eps || s.theta > PI / 3.0 + eps {
            return Err(GeometryError::OutsideSector {
                r: s.r,
                theta: s.theta,
            });
        }
    }
    let pts: Vec<Point2> = samples.iter().map(|&s| polar_to_cart(s)).collect();
    let mut max = 0.0f64;
    for i in 0..pts.len() {
        for j in (i + 1)..pts.len() {
            max = max.max(dist(pts[i], pts[j]));
        }
    }
    Ok(max)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;
    use rand::{Rng as _, SeedableRng as _};
    use rand_chacha::ChaCha8Rng;

    fn pt(x: f64, y: f64) -> Point2 {
        Point2::new(x, y).unwrap()
    }

    // Independent chord form of g: place the three unit-circle points and
    // sum 1/d^4 over the two chords.
    fn g_delta_chord(delta: f64) -> f64 {
        let s1 = polar_to_cart(PolarPoint::new(1.0, 0.0).unwrap());
        let s2 = polar_to_cart(PolarPoint::new(1.0, 2.0 * PI / 5.0 + delta).unwrap());
        let s5 = polar_to_cart(PolarPoint::new(1.0, 2.0 * PI / 5.0 - delta).unwrap());
        dist(s1, s2).powi(-4) + dist(s1, s5).powi(-4)
    }

    #[test]
    fn dist_examples() {
        assert_eq!(dist(pt(0.0, 0.0), pt(1.0, 0.0)), 1.0);
        assert_abs_diff_eq!(dist(pt(1.0, 0.0), pt(0.0, 1.0)), 2.0f64.sqrt(), epsilon = 1e-12);
        // Chord between unit-circle points at angles 0 and 2pi/5.
        let a = pt(1.0, 0.0);
        let b = pt((2.0 * PI / 5.0).cos(), (2.0 * PI / 5.0).sin());
        assert_abs_diff_eq!(dist(a, b), 2.0 * (PI / 5.0).sin(), epsilon = 1e-12);
        assert_abs_diff_eq!(dist(a, b), 1.1755705, epsilon = 1e-6);
    }

    #[test]
    fn dist_is_symmetric_and_zero_on_diagonal() {
        let a = pt(0.3, -2.5);
        let b = pt(-1.0, 4.0);
        assert_eq!(dist(a, b), dist(b, a));
        assert_eq!(dist(a, a), 0.0);
    }

    #[test]
    fn polar_cart_examples() {
        let p = polar_to_cart(PolarPoint::new(1.0, 0.0).unwrap());
        assert_abs_diff_eq!(p.x, 1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(p.y, 0.0, epsilon = 1e-15);
        let p = polar_to_cart(PolarPoint::new(1.0, PI / 2.0).unwrap());
        assert_abs_diff_eq!(p.x, 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(p.y, 1.0, epsilon = 1e-15);
        let p = polar_to_cart(PolarPoint::new(2.0, PI).unwrap());
        assert_abs_diff_eq!(p.x, -2.0, epsilon = 1e-15);
        assert_abs_diff_eq!(p.y, 0.0, epsilon = 1e-12);
    }

    #[test]
    fn cart_to_polar_rejects_origin() {
        assert_eq!(
            cart_to_polar(pt(0.0, 0.0)),
            Err(GeometryError::OriginHasNoAngle)
        );
    }

    proptest! {
        #[test]
        fn polar_round_trip(x in -10.0f64..10.0, y in -10.0f64..10.0) {
            prop_assume!(x != 0.0 || y != 0.0);
            let p = pt(x, y);
            let back = polar_to_cart(cart_to_polar(p).unwrap());
            prop_assert!((back.x - x).abs() < 1e-12 * (1.0 + x.abs()));
            prop_assert!((back.y - y).abs() < 1e-12 * (1.0 + y.abs()));
        }

        #[test]
        fn scaling_scales_distances(
            x1 in -5.0f64..5.0, y1 in -5.0f64..5.0,
            x2 in -5.0f64..5.0, y2 in -5.0f64..5.0,
            rho in 0.01f64..10.0,
        ) {
            let scaled = apply_scaling(&[pt(x1, y1), pt(x2, y2)], rho).unwrap();
            let d0 = dist(pt(x1, y1), pt(x2, y2));
            let d1 = dist(scaled[0], scaled[1]);
            prop_assert!((d1 - rho * d0).abs() <= 1e-12 * (1.0 + d1));
        }
    }

    #[test]
    fn scaling_examples() {
        let out = apply_scaling(&[pt(1.0, 0.0)], 2.0).unwrap();
        assert_eq!(out, vec![pt(2.0, 0.0)]);
        let out = apply_scaling(&[pt(0.0, 0.0), pt(1.0, 1.0)], 0.5).unwrap();
        assert_eq!(out, vec![pt(0.0, 0.0), pt(0.5, 0.5)]);
        let pts = [pt(0.3, -0.7), pt(2.0, 5.0)];
        assert_eq!(apply_scaling(&pts, 1.0).unwrap(), pts.to_vec());
        assert!(matches!(
            apply_scaling(&pts, 0.0),
            Err(GeometryError::NonPositiveScale(_))
        ));
        assert!(matches!(
            apply_scaling(&pts, -1.0),
            Err(GeometryError::NonPositiveScale(_))
        ));
    }

    #[test]
    fn radial_project_examples() {
        let out = radial_project(&[pt(0.5, 0.0)]).unwrap();
        assert_abs_diff_eq!(out[0].x, 1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(out[0].y, 0.0, epsilon = 1e-15);

        // Points already on the circle are fixed.
        let on_circle = [pt(1.0, 0.0), pt(0.0, -1.0)];
        let out = radial_project(&on_circle).unwrap();
        for (a, b) in on_circle.iter().zip(&out) {
            assert_abs_diff_eq!(a.x, b.x, epsilon = 1e-15);
            assert_abs_diff_eq!(a.y, b.y, epsilon = 1e-15);
        }

        // Projection does not decrease the distance of a far pair.
        let theta = 2.0 * PI / 5.0;
        let a = pt(1.0, 0.0);
        let b = pt(0.8 * theta.cos(), 0.8 * theta.sin());
        assert!(dist(a, b) > 1.0);
        let out = radial_project(&[a, b]).unwrap();
        assert!(dist(out[0], out[1]) >= dist(a, b));
    }

    #[test]
    fn radial_project_errors() {
        assert_eq!(
            radial_project(&[pt(0.0, 0.0)]),
            Err(GeometryError::OriginPoint)
        );
        assert!(matches!(
            radial_project(&[pt(1.5, 0.0)]),
            Err(GeometryError::OutsideUnitBall(_))
        ));
    }

    #[test]
    fn projection_monotone_for_separated_points() {
        // Lemma regime: pairwise distances > 1 inside the punctured ball.
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let mut checked = 0;
        while checked < 200 {
            let a = pt(
                rng.gen_range(-1.0..1.0f64),
                rng.gen_range(-1.0..1.0f64),
            );
            let b = pt(
                rng.gen_range(-1.0..1.0f64),
                rng.gen_range(-1.0..1.0f64),
            );
            if a.norm() == 0.0 || b.norm() == 0.0 || a.norm() > 1.0 || b.norm() > 1.0 {
                continue;
            }
            if dist(a, b) <= 1.0 {
                continue;
            }
            let out = radial_project(&[a, b]).unwrap();
            assert!(dist(out[0], out[1]) >= dist(a, b) - 1e-12);
            checked += 1;
        }
    }

    #[test]
    fn g_at_zero_matches_closed_form() {
        let g0 = g_delta(0.0).unwrap();
        assert_abs_diff_eq!(g0, g_minimum(), epsilon = 1e-12);
        assert_abs_diff_eq!(g0, 1.0472136, epsilon = 1e-6);
    }

    #[test]
    fn g_is_even_and_matches_chord_form() {
        for k in 0..=20 {
            let delta = G_DELTA_MAX * k as f64 / 20.0;
            let plus = g_delta(delta).unwrap();
            let minus = g_delta(-delta).unwrap();
            assert_abs_diff_eq!(plus, minus, epsilon = 1e-12);
            assert_abs_diff_eq!(plus, g_delta_chord(delta), epsilon = 1e-9);
        }
    }

    #[test]
    fn g_domain_error() {
        assert!(matches!(
            g_delta(G_DELTA_MAX + 0.01),
            Err(GeometryError::DeltaOutOfRange(_))
        ));
        assert!(matches!(
            g_delta(-1.0),
            Err(GeometryError::DeltaOutOfRange(_))
        ));
    }

    #[test]
    fn minimize_g_examples() {
        let (delta_star, g_star) = minimize_g(1001);
        assert_abs_diff_eq!(delta_star, 0.0, epsilon = 1e-12);
        assert_abs_diff_eq!(g_star, g_minimum(), epsilon = 1e-9);

        // Grid of 3: the midpoint 0 is the global minimum.
        let (delta_star, g_star) = minimize_g(3);
        assert_eq!(delta_star, 0.0);
        assert_eq!(g_star, g_delta(0.0).unwrap());
    }

    #[test]
    fn g_exceeds_one_on_grid() {
        for k in 0..1001 {
            let delta = -G_DELTA_MAX + 2.0 * G_DELTA_MAX * k as f64 / 1000.0;
            assert!(g_delta(delta).unwrap() > 1.0);
        }
    }

    #[test]
    fn g_discrete_convexity() {
        let n = 501;
        let vals: Vec<f64> = (0..n)
            .map(|k| {
                let delta = -G_DELTA_MAX + 2.0 * G_DELTA_MAX * k as f64 / (n - 1) as f64;
                g_delta(delta).unwrap()
            })
            .collect();
        for w in vals.windows(3) {
            assert!(w[0] - 2.0 * w[1] + w[2] >= -1e-9);
        }
    }

    #[test]
    fn sector_examples() {
        let a = PolarPoint::new(1.0, 0.0).unwrap();
        let b = PolarPoint::new(1.0, PI / 3.0).unwrap();
        let max = max_pairwise_distance_in_sector(&[a, b]).unwrap();
        assert_abs_diff_eq!(max, 1.0, epsilon = 1e-12);

        assert_eq!(max_pairwise_distance_in_sector(&[a]).unwrap(), 0.0);

        assert!(matches!(
            max_pairwise_distance_in_sector(&[PolarPoint::new(1.0, PI / 2.0).unwrap()]),
            Err(GeometryError::OutsideSector { .. })
        ));
        assert!(matches!(
            max_pairwise_distance_in_sector(&[PolarPoint::new(1.2, 0.1).unwrap()]),
            Err(GeometryError::OutsideSector { .. })
        ));
    }

    #[test]
    fn sector_diameter_random() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let samples: Vec<PolarPoint> = (0..2000)
            .map(|_| {
                let r = rng.gen::<f64>().sqrt();
                let theta = rng.gen_range(0.0..PI / 3.0);
                PolarPoint::new(r, theta).unwrap()
            })
            .collect();
        let max = max_pairwise_distance_in_sector(&samples).unwrap();
        assert!(max <= 1.0 + 1e-12);
    }

    #[test]
    fn angle_normalization() {
        assert_abs_diff_eq!(normalize_angle(3.0 * PI), PI, epsilon = 1e-12);
        assert_abs_diff_eq!(normalize_angle(-PI), PI, epsilon = 1e-12);
        assert_abs_diff_eq!(normalize_angle(0.5), 0.5, epsilon = 1e-15);
    }
}

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tri_inscribe::convex::largest_homothet_convex;
use tri_inscribe::geom::{triangle_in_polygon, AnglePair, Point2};
use tri_inscribe::oracle::{gen_random_convex, gen_random_simple, oracle_solve, OracleConfig};
use tri_inscribe::simple::{largest_ab_simple_axis, max_inscribed_scale};
use tri_inscribe::Polygon;

const SETTINGS: [(f64, f64); 3] = [(90.0, 45.0), (60.0, 60.0), (30.0, 100.0)];

fn poly(pts: &[(f64, f64)]) -> Polygon {
    Polygon::new(pts.iter().map(|&(x, y)| Point2::new(x, y)).collect()).unwrap()
}

#[test]
fn square_and_lshape() {
    let ab = AnglePair::from_degrees(90.0, 45.0).unwrap();
    let sq = poly(&[(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)]);
    let r = largest_ab_simple_axis(&sq, ab).unwrap();
    assert!((r.area - 0.5).abs() < 1e-12, "{}", r.area);
    let l = poly(&[(0.0, 0.0), (2.0, 0.0), (2.0, 1.0), (1.0, 1.0), (1.0, 2.0), (0.0, 2.0)]);
    let r = largest_ab_simple_axis(&l, ab).unwrap();
    assert!((r.area - 2.0).abs() < 1e-12, "{}", r.area);
}

#[test]
fn convex_matches_homothet() {
    for inst in 0..30u64 {
        let p = gen_random_convex::<f64>(4 + inst as usize % 9, 300 + inst);
        let (a, b) = SETTINGS[inst as usize % 3];
        let ab = AnglePair::from_degrees(a, b).unwrap();
        let fast = largest_ab_simple_axis(&p, ab).unwrap();
        let exact = largest_homothet_convex(&p, ab, 0.0).unwrap();
        assert!((fast.area - exact.area).abs() <= 1e-9 * exact.area, "inst {inst}: {} vs {}", fast.area, exact.area);
    }
}

#[test]
fn no_anchor_beats_the_solver() {
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    let mut total = 0.0;
    for inst in 0..20u64 {
        let n = rng.gen_range(6..=30);
        let p = gen_random_simple::<f64>(n, 900 + inst);
        let d2 = p.diameter().powi(2);
        for (a, b) in SETTINGS {
            let ab = AnglePair::from_degrees(a, b).unwrap();
            let r = largest_ab_simple_axis(&p, ab).unwrap();
            total += r.stats.wall_time;
            assert!(triangle_in_polygon(&p, &r.triangle, p.tolerance()));
            assert!(r.warnings.is_empty());
            let (lo, hi) = p.bbox();
            let mut probes = 0;
            while probes < 1000 {
                let x = Point2::new(rng.gen_range(lo.x..hi.x), rng.gen_range(lo.y..hi.y));
                if !p.contains_strict(x) {
                    continue;
                }
                probes += 1;
                let s = max_inscribed_scale(&p, x, ab).unwrap();
                let area = s.triangle.area();
                assert!(area <= r.area + 1e-9 * d2, "inst {inst} {a}/{b}: anchor {x:?} gives {area} > {}", r.area);
            }
        }
    }
    eprintln!("solver time {total:.3}s");
}

#[test]
fn matches_oracle() {
    let cfg = OracleConfig::default();
    let mut worst = 0.0f64;
    for inst in 0..8u64 {
        let p = gen_random_simple::<f64>(6 + inst as usize * 3, 1200 + inst);
        let (a, b) = SETTINGS[inst as usize % 3];
        let ab = AnglePair::from_degrees(a, b).unwrap();
        let exact = largest_ab_simple_axis(&p, ab).unwrap();
        let orc = oracle_solve(&p, ab.alpha(), Some(ab.beta()), Some(0.0), cfg).unwrap();
        assert!(orc.area <= exact.area * (1.0 + 1e-9), "inst {inst}: oracle {} > {}", orc.area, exact.area);
        worst = worst.max((exact.area - orc.area) / exact.area);
    }
    eprintln!("worst relative gap {worst:.3e}");
}

#[test]
fn subdivision_examples() {
    use tri_inscribe::simple::build_subdivision;
    let ab = AnglePair::from_degrees(90.0, 45.0).unwrap();
    let sq = poly(&[(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)]);
    let sub = build_subdivision(&sq, ab).unwrap();
    assert!(sub.vertices.len() <= 8, "{}", sub.vertices.len());
    assert!((sub.best_vertex().unwrap().scale - 1.0).abs() < 1e-12);
    let l = poly(&[(0.0, 0.0), (2.0, 0.0), (2.0, 1.0), (1.0, 1.0), (1.0, 2.0), (0.0, 2.0)]);
    let sub = build_subdivision(&l, ab).unwrap();
    assert!((sub.best_vertex().unwrap().scale - 2.0).abs() < 1e-12);
    assert!(sub.vertices.iter().all(|v| v.contacts.len() >= 3));
    assert!(sub.edges.iter().all(|e| e.contacts.len() >= 2));
    assert!(sub.to_svg().starts_with("<svg"));
}

#[test]
fn subdivision_agrees_with_search() {
    use tri_inscribe::simple::{build_subdivision, largest_ab_simple_axis_with};
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    let t0 = std::time::Instant::now();
    let mut worst_ratio = 0.0f64;
    for inst in 0..20u64 {
        let n = rng.gen_range(6..=30);
        let p = gen_random_simple::<f64>(n, 900 + inst);
        for (a, b) in SETTINGS {
            let ab = AnglePair::from_degrees(a, b).unwrap();
            let sub = build_subdivision(&p, ab).unwrap();
            worst_ratio = worst_ratio.max(sub.vertices.len() as f64 / n as f64);
            let fast = largest_ab_simple_axis(&p, ab).unwrap();
            let slow = largest_ab_simple_axis_with(&p, ab, true).unwrap();
            assert!((fast.area - slow.area).abs() <= 1e-9 * fast.area, "inst {inst} {a}/{b}: {} vs {}", fast.area, slow.area);
        }
    }
    eprintln!("max vertices/n {worst_ratio:.2}, {:?}", t0.elapsed());
}

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tri_inscribe::approx::{alpha_constants, eps_kernel, fptas_ab, fptas_alpha};
use tri_inscribe::convex::{largest_ab_convex_rotating, largest_alpha_convex_rotating};
use tri_inscribe::geom::{directional_width, triangle_in_polygon, AnglePair, Point2};
use tri_inscribe::oracle::gen_random_convex;

const EPS: [f64; 3] = [0.5, 0.1, 0.02];

#[test]
fn kernel_widths_and_size() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for inst in 0..30u64 {
        let n = rng.gen_range(8..=200);
        let mut p = gen_random_convex::<f64>(n, 500 + inst);
        if inst % 3 == 0 {
            // Thin instances stress the affine normalization.
            p = p.map(|v| Point2::new(v.x, v.y * 0.01)).rotated(rng.gen::<f64>() * 3.0);
        }
        for eps in EPS.iter().copied().chain([0.5 / 32.0, 0.02 / 64.0]) {
            let k = eps_kernel(&p, eps).unwrap();
            assert!(k.kernel.len() as f64 <= 10.0 / eps.sqrt());
            assert!(k.kernel.vertices().iter().all(|v| p.vertices().contains(v)));
            for _ in 0..10_000 {
                let u = Point2::unit(rng.gen::<f64>() * std::f64::consts::PI);
                let (wk, wp) = (directional_width(k.kernel.vertices(), u), directional_width(p.vertices(), u));
                assert!(wk >= (1.0 - eps) * wp, "inst {inst} eps {eps}: {wk} < {wp}");
            }
        }
    }
}

#[test]
fn fptas_within_eps_of_exact() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let t0 = std::time::Instant::now();
    for inst in 0..10u64 {
        let n = rng.gen_range(8..=64);
        let p = gen_random_convex::<f64>(n, 7000 + inst);
        let ab = AnglePair::from_degrees(rng.gen_range(20.0..100.0), rng.gen_range(20.0..60.0)).unwrap();
        let exact_ab = largest_ab_convex_rotating(&p, ab).unwrap().area;
        let exact_a = largest_alpha_convex_rotating(&p, ab.alpha()).unwrap().area;
        let c = alpha_constants(&p, ab.alpha()).unwrap();
        assert!(exact_a >= c.c1 * c.d * c.w);
        for eps in EPS {
            let a = fptas_ab(&p, ab, eps).unwrap();
            assert!(triangle_in_polygon(&p, &a.triangle, p.tolerance()));
            assert!(a.area >= (1.0 - eps) * exact_ab && a.area <= exact_ab * (1.0 + 1e-9));
            let b = fptas_alpha(&p, ab.alpha(), eps).unwrap();
            assert!(triangle_in_polygon(&p, &b.triangle, p.tolerance()));
            assert!(b.area >= (1.0 - eps) * exact_a && b.area <= exact_a * (1.0 + 1e-9), "inst {inst} eps {eps}: {} vs {exact_a}", b.area);
        }
    }
    eprintln!("{:?}", t0.elapsed());
}

fn regular(n: usize) -> tri_inscribe::Polygon {
    tri_inscribe::Polygon::new((0..n).map(|k| Point2::unit(std::f64::consts::TAU * k as f64 / n as f64)).collect())
        .unwrap()
}

#[test]
fn reference_instances() {
    let p = regular(200);
    let ab = AnglePair::from_degrees(30.0, 70.0).unwrap();
    let exact = largest_ab_convex_rotating(&p, ab).unwrap().area;
    assert!(fptas_ab(&p, ab, 0.05).unwrap().area >= 0.95 * exact);

    let p = regular(100);
    let alpha = 60f64.to_radians();
    let exact = largest_alpha_convex_rotating(&p, alpha).unwrap().area;
    assert!(fptas_alpha(&p, alpha, 0.1).unwrap().area >= 0.9 * exact);

    let r = tri_inscribe::Polygon::new(vec![
        Point2::new(0.0, 0.0),
        Point2::new(20.0, 0.0),
        Point2::new(20.0, 1.0),
        Point2::new(0.0, 1.0),
    ])
    .unwrap();
    let alpha = 45f64.to_radians();
    let exact = largest_alpha_convex_rotating(&r, alpha).unwrap().area;
    let approx = fptas_alpha(&r, alpha, 0.05).unwrap();
    assert!(approx.area >= 0.95 * exact && approx.area <= exact * (1.0 + 1e-9));
}

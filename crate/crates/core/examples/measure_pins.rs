//! Dev-time measurement of the recorded regression constants.

use lamroot_core::arith;
use lamroot_core::sieve::{default_y, measure_positive_c2, rosser_weights};
use lamroot_core::unitgroup::{grh_ratio_with_ceiling, UnitGroup};
use rayon::prelude::*;

fn main() {
    // c0^{-1} / lg1(omega(phi(q))) over 2..=10^4
    let (ratio, argq) = (2u64..=10_000)
        .into_par_iter()
        .map(|q| {
            let c0 = UnitGroup::decompose(q).unwrap().lambda_density();
            let c0_inv = *c0.denom() as f64 / *c0.numer() as f64;
            let lg = arith::iter_log(arith::omega(arith::euler_phi(q)).max(1) as f64, 1).unwrap();
            (c0_inv / lg, q)
        })
        .reduce(|| (0.0, 0), |a, b| if a.0 >= b.0 { a } else { b });
    println!("max c0_inv / lg1(omega(phi(q))) = {ratio:.6} at q = {argq}");

    // grh ratio over 3..=10^5
    let (max_ratio, argmax) = (3u64..=100_000)
        .into_par_iter()
        .map(|q| (grh_ratio_with_ceiling(q, 100_000_000).unwrap(), q))
        .reduce(|| (0.0, 0), |a, b| if a.0 >= b.0 { a } else { b });
    println!("max grh ratio = {max_ratio:.6} at q = {argmax}");

    // top 5 ratios for context
    let mut all: Vec<(f64, u64)> = (3u64..=1000)
        .map(|q| (grh_ratio_with_ceiling(q, 100_000_000).unwrap(), q))
        .collect();
    all.sort_by(|a, b| b.0.total_cmp(&a.0));
    println!("top small-q ratios: {:?}", &all[..5]);

    // smallest positive-T C2 on a grid, plus implied C1 = min T*log z
    let c2 = measure_positive_c2(60, &[1.0, 1.5, 2.0, 3.0, 4.0, 6.0, 8.0]);
    println!("smallest grid C2 with T > 0 for z <= 60: {c2:?}");
    for c2 in [1.0, 4.0] {
        let c1 = (2u64..=60)
            .map(|z| {
                let zf = z as f64;
                let y = (c2 * zf * zf).clamp(zf * zf, zf.powi(4));
                let t = rosser_weights(y, z).unwrap().weight_sums().t_sum_f64();
                t * zf.ln()
            })
            .fold(f64::INFINITY, f64::min);
        println!("C2 = {c2}: min T*log z over z <= 60 = {c1:.6}");
    }

    // canonical sieve positivity margin
    let t121 = rosser_weights(121.0, 11).unwrap().weight_sums();
    println!(
        "T(121, 11) = {} ~ {:.6}, abs_sum = {}",
        t121.t_sum,
        t121.t_sum_f64(),
        t121.abs_sum
    );
    let tdef = rosser_weights(default_y(11), 11).unwrap().weight_sums();
    println!("T(default_y(11) = {}, 11) ~ {:.6}", default_y(11), tdef.t_sum_f64());
}

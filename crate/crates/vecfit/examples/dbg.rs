use vecfit::motion::{init_params, HomographyParams, MotionModel, MotionParams};
use vecfit::objective::*;
use vecfit::raster::{distance_transform, foreground_mask, Renderer};
use vecfit::svg::parse_svg;
use vecfit::geom::Vec2;

fn main() {
    let d = parse_svg(
        r##"<svg viewBox="0 0 64 64">
          <g id="a"><rect x="12" y="12" width="20" height="16" fill="#204060"/></g>
          <g id="b"><circle cx="44" cy="44" r="10" fill="#a03010"/></g>
        </svg>"##,
    ).unwrap();
    let model = MotionModel::from_document(&d);
    let adj = build_adjacency(&d, 0.01 * d.canvas_width);
    let joints = build_smooth_joints(&d);
    for lam_sdf in [1.0, 0.0] {
        let ctx = ObjectiveContext {
            model: &model,
            renderer: Renderer::new(0.7),
            width: 64, height: 64,
            fills: d.paths.iter().map(|p| p.fill).collect(),
            subpath_lens: d.paths.iter().map(|p| p.subpaths.iter().map(|s| s.len()).collect()).collect(),
            path_ranges: (0..d.paths.len()).map(|i| d.path_point_range(i)).collect(),
            painter_order: d.painter_order.clone(),
            adjacency: &adj,
            joints: &joints,
            weights: LossWeights { lambda_sdf: lam_sdf, ..Default::default() },
            tau_sdf: 0.0,
        };
        let mut shifted = init_params(&d, 2);
        shifted.homography_mut(0, 1).tx = 3.0;
        shifted.homography_mut(1, 1).ty = -2.0;
        let (target_pts, _) = model.forward(&shifted, 1);
        let target = ctx.renderer.render(&ctx.scene_from_points(&target_pts));
        let mask = foreground_mask(&target, 0.98);
        let sdf = distance_transform(&mask);
        let mut params = init_params(&d, 2);
        let mut rng = vecfit::rng::Lcg64::new(31);
        params.homography_mut(0, 1).tx = rng.uniform(-1.0, 1.0);
        params.homography_mut(1, 1).theta = rng.uniform(-0.05, 0.05);
        for o in params.offsets[1].iter_mut() {
            *o = Vec2::new(rng.uniform(-0.5, 0.5), rng.uniform(-0.5, 0.5));
        }
        let eval = evaluate(&ctx, &params, &[1], &[&target], &[&sdf]).unwrap();
        let loss_of = |p: &MotionParams| evaluate(&ctx, p, &[1], &[&target], &[&sdf]).unwrap().total;
        let h = 1e-4;
        let mut p_plus = params.clone(); let mut p_minus = params.clone();
        let mut ap = p_plus.homography(0, 1).as_array(); ap[2] += h;
        let mut am = p_minus.homography(0, 1).as_array(); am[2] -= h;
        *p_plus.homography_mut(0, 1) = HomographyParams::from_array(ap);
        *p_minus.homography_mut(0, 1) = HomographyParams::from_array(am);
        let fd = (loss_of(&p_plus) - loss_of(&p_minus)) / (2.0 * h);
        println!("lambda_sdf={}: theta analytic {} vs fd {}", lam_sdf, eval.grads[0].homographies[0][2], fd);
    }
}

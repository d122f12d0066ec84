use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::frame::{Frame, PixelRect};
use crate::scenario::Scenario;

/// Ground truth for one object in one frame.
#[derive(Clone, Debug)]
pub struct ObjectTruth {
    /// Unsnapped trajectory center.
    pub center: (f64, f64),
    /// Per box pixel (row-major over the object's extent): is this object
    /// the front-most owner there?
    pub visible: Vec<bool>,
    /// The object covering most of this one's box, when any does.
    pub occluder: Option<usize>,
}

/// Draws frame `t`: objects pasted in ascending z (later in front), then
/// seeded Gaussian pixel noise, clipped to [0, 1]. Noise uses one RNG
/// stream per frame index, so frames can be produced in any order.
pub fn render(scenario: &Scenario, t: usize) -> (Frame, Vec<ObjectTruth>) {
    assert!(t < scenario.frames, "frame index out of range");
    let (w, h) = (scenario.width, scenario.height);
    let mut frame = Frame::filled(w, h, scenario.background, t);
    let mut owner: Vec<Option<usize>> = vec![None; w * h];

    let mut order: Vec<usize> = (0..scenario.objects.len()).collect();
    order.sort_by_key(|&k| scenario.objects[k].z);

    let rects: Vec<PixelRect> = (0..scenario.objects.len())
        .map(|k| PixelRect::around(scenario.position(k, t), scenario.objects[k].extent))
        .collect();

    for &k in &order {
        let obj = &scenario.objects[k];
        let rect = rects[k];
        for (i, v) in obj.template.iter().enumerate() {
            let x = rect.x0 as usize + i % obj.extent.0;
            let y = rect.y0 as usize + i / obj.extent.0;
            frame.set(x, y, *v);
            owner[y * w + x] = Some(k);
        }
    }

    if scenario.noise_sigma > 0.0 {
        let mut rng = ChaCha8Rng::seed_from_u64(scenario.seed);
        rng.set_stream(t as u64);
        for p in frame.pixels.iter_mut() {
            let z: f64 = rng.sample(StandardNormal);
            *p = (*p + z * scenario.noise_sigma).clamp(0.0, 1.0);
        }
    }

    let truth = (0..scenario.objects.len())
        .map(|k| {
            let obj = &scenario.objects[k];
            let rect = rects[k];
            let mut visible = Vec::with_capacity(obj.template.len());
            let mut cover_counts = vec![0usize; scenario.objects.len()];
            for i in 0..obj.template.len() {
                let x = rect.x0 as usize + i % obj.extent.0;
                let y = rect.y0 as usize + i / obj.extent.0;
                match owner[y * w + x] {
                    Some(o) if o == k => visible.push(true),
                    Some(o) => {
                        visible.push(false);
                        cover_counts[o] += 1;
                    }
                    None => visible.push(false),
                }
            }
            let occluder = cover_counts
                .iter()
                .enumerate()
                .filter(|(_, &c)| c > 0)
                .max_by_key(|(o, &c)| (c, usize::MAX - o))
                .map(|(o, _)| o);
            ObjectTruth {
                center: scenario.position(k, t),
                visible,
                occluder,
            }
        })
        .collect();

    (frame, truth)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scenario::{ObjectSpec, Waypoint};

    fn empty_scene(noise: f64) -> Scenario {
        Scenario {
            width: 16,
            height: 16,
            frames: 4,
            noise_sigma: noise,
            background: 0.25,
            seed: 3,
            objects: Vec::new(),
        }
    }

    #[test]
    fn no_objects_and_no_noise_is_pure_background() {
        let (frame, truth) = render(&empty_scene(0.0), 0);
        assert!(frame.pixels.iter().all(|&p| p == 0.25));
        assert!(truth.is_empty());
    }

    #[test]
    fn rendering_is_deterministic_per_seed_and_frame() {
        let scene = empty_scene(0.1);
        let (a, _) = render(&scene, 2);
        let (b, _) = render(&scene, 2);
        assert_eq!(a.pixels, b.pixels);
        let (c, _) = render(&scene, 3);
        assert_ne!(a.pixels, c.pixels);
        assert!(a.pixels.iter().all(|&p| (0.0..=1.0).contains(&p)));
    }

    fn stacked_scene() -> Scenario {
        let spec = |z: i32, v: f64| ObjectSpec {
            template: vec![v; 16],
            extent: (4, 4),
            z,
            waypoints: vec![Waypoint { x: 8.0, y: 8.0, frame: 0 }],
        };
        Scenario {
            width: 16,
            height: 16,
            frames: 2,
            noise_sigma: 0.0,
            background: 0.0,
            seed: 0,
            objects: vec![spec(0, 0.4), spec(1, 0.9)],
        }
    }

    #[test]
    fn full_overlap_hides_the_rear_object() {
        let (frame, truth) = render(&stacked_scene(), 0);
        assert!(truth[0].visible.iter().all(|v| !v));
        assert!(truth[1].visible.iter().all(|v| *v));
        assert_eq!(truth[0].occluder, Some(1));
        assert_eq!(truth[1].occluder, None);
        assert_eq!(frame.get(8, 8), 0.9);
    }

    #[test]
    fn every_pixel_has_exactly_one_owner() {
        let scene = Scenario::crossing(5);
        let t = 60;
        let (_, truth) = render(&scene, t);
        // Visible pixel counts plus hidden pixels equal each box area, and
        // the overlap region is owned by exactly one object.
        let visible0 = truth[0].visible.iter().filter(|v| **v).count();
        let visible1 = truth[1].visible.iter().filter(|v| **v).count();
        let r0 = PixelRect::around(scene.position(0, t), (12, 12));
        let r1 = PixelRect::around(scene.position(1, t), (12, 12));
        let inter = r0.intersect(&r1).area() as usize;
        assert_eq!(visible1, 144, "front object is fully visible");
        assert_eq!(visible0, 144 - inter, "rear loses exactly the analytic intersection");
    }
}

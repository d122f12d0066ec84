use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::frame::PixelRect;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Waypoint {
    pub x: f64,
    pub y: f64,
    pub frame: usize,
}

#[derive(Clone, Debug)]
pub struct ObjectSpec {
    /// Row-major texture of size `extent`.
    pub template: Vec<f64>,
    pub extent: (usize, usize),
    /// Draw order; higher z is drawn later, hence in front.
    pub z: i32,
    pub waypoints: Vec<Waypoint>,
}

#[derive(Clone, Debug)]
pub struct Scenario {
    pub width: usize,
    pub height: usize,
    pub frames: usize,
    pub noise_sigma: f64,
    pub background: f64,
    pub seed: u64,
    pub objects: Vec<ObjectSpec>,
}

/// Deterministic texture for an object: uniform values in [0.25, 1].
pub fn seeded_texture(seed: u64, object: usize, extent: (usize, usize)) -> Vec<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(1_000_000 + object as u64);
    (0..extent.0 * extent.1)
        .map(|_| rng.random_range(0.25..=1.0))
        .collect()
}

impl Scenario {
    /// Object center at frame `t`: linear interpolation between waypoints,
    /// clamped at the ends.
    pub fn position(&self, object: usize, t: usize) -> (f64, f64) {
        let wps = &self.objects[object].waypoints;
        let t = t as f64;
        if t <= wps[0].frame as f64 {
            return (wps[0].x, wps[0].y);
        }
        for w in wps.windows(2) {
            let (a, b) = (w[0], w[1]);
            if t <= b.frame as f64 {
                let span = (b.frame - a.frame) as f64;
                let alpha = if span == 0.0 { 1.0 } else { (t - a.frame as f64) / span };
                return (a.x + alpha * (b.x - a.x), a.y + alpha * (b.y - a.y));
            }
        }
        let last = wps[wps.len() - 1];
        (last.x, last.y)
    }

    pub fn validate(&self) -> Result<()> {
        if self.width == 0 || self.height == 0 || self.frames == 0 {
            return Err(Error::Scenario("frame size and count must be positive".into()));
        }
        if self.noise_sigma < 0.0 {
            return Err(Error::Scenario("noise sigma must be non-negative".into()));
        }
        let mut zs: Vec<i32> = self.objects.iter().map(|o| o.z).collect();
        zs.sort_unstable();
        zs.dedup();
        if zs.len() != self.objects.len() {
            return Err(Error::Scenario("z-order must be a total order (distinct z)".into()));
        }
        for (k, obj) in self.objects.iter().enumerate() {
            if obj.extent.0 == 0 || obj.extent.1 == 0 {
                return Err(Error::Scenario(format!("object {k} has a degenerate extent")));
            }
            if obj.template.len() != obj.extent.0 * obj.extent.1 {
                return Err(Error::Scenario(format!("object {k} template does not match its extent")));
            }
            if obj.waypoints.is_empty() {
                return Err(Error::Scenario(format!("object {k} has no waypoints")));
            }
            if obj.waypoints.windows(2).any(|w| w[1].frame <= w[0].frame) {
                return Err(Error::Scenario(format!("object {k} waypoints must have increasing frames")));
            }
            for t in 0..self.frames {
                let rect = PixelRect::around(self.position(k, t), obj.extent);
                if rect.x0 < 0
                    || rect.y0 < 0
                    || rect.x1 > self.width as i64
                    || rect.y1 > self.height as i64
                {
                    return Err(Error::Scenario(format!(
                        "object {k} leaves the frame at t={t}"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Parses the line-oriented scenario format: `key = value` pairs and
    /// one `object:` line per object. `load_template` maps a template
    /// reference to pixel data of the declared extent.
    pub fn parse(
        text: &str,
        mut load_template: impl FnMut(&str, (usize, usize)) -> Result<Vec<f64>>,
    ) -> Result<Scenario> {
        let mut scenario = Scenario {
            width: 0,
            height: 0,
            frames: 0,
            noise_sigma: 0.0,
            background: 0.0,
            seed: 0,
            objects: Vec::new(),
        };
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            let lineno = lineno + 1;
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |message: String| Error::Parse { line: lineno, message };
            if let Some(rest) = line.strip_prefix("object:") {
                scenario.objects.push(parse_object(rest.trim(), lineno, &mut load_template)?);
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| err("expected `key = value` or `object:`".to_string()))?;
            let (key, value) = (key.trim(), value.trim());
            match key {
                "size" => {
                    let (w, h) = parse_extent(value).map_err(|m| err(m))?;
                    scenario.width = w;
                    scenario.height = h;
                }
                "frames" => scenario.frames = value.parse().map_err(|_| err(format!("bad frame count {value:?}")))?,
                "noise_sigma" => scenario.noise_sigma = value.parse().map_err(|_| err(format!("bad noise sigma {value:?}")))?,
                "background" => scenario.background = value.parse().map_err(|_| err(format!("bad background {value:?}")))?,
                "seed" => scenario.seed = value.parse().map_err(|_| err(format!("bad seed {value:?}")))?,
                other => return Err(err(format!("unknown key {other:?}"))),
            }
        }
        scenario.validate()?;
        Ok(scenario)
    }

    /// Two textured 12x12 objects crossing paths on a 64x64 stage, the
    /// second one in front; the workhorse scenario for occlusion tests.
    pub fn crossing(seed: u64) -> Scenario {
        let extent = (12, 12);
        let scenario = Scenario {
            width: 64,
            height: 64,
            frames: 120,
            noise_sigma: 0.0,
            background: 0.0,
            seed,
            objects: vec![
                ObjectSpec {
                    template: seeded_texture(seed, 0, extent),
                    extent,
                    z: 0,
                    waypoints: vec![
                        Waypoint { x: 10.0, y: 29.0, frame: 0 },
                        Waypoint { x: 54.0, y: 29.0, frame: 119 },
                    ],
                },
                ObjectSpec {
                    template: seeded_texture(seed, 1, extent),
                    extent,
                    z: 1,
                    waypoints: vec![
                        Waypoint { x: 54.0, y: 32.0, frame: 0 },
                        Waypoint { x: 10.0, y: 32.0, frame: 119 },
                    ],
                },
            ],
        };
        scenario.validate().expect("crossing scenario is well-formed");
        scenario
    }
}

fn parse_extent(value: &str) -> std::result::Result<(usize, usize), String> {
    let (w, h) = value
        .split_once('x')
        .ok_or_else(|| format!("expected WxH, got {value:?}"))?;
    let w = w.trim().parse().map_err(|_| format!("bad width {w:?}"))?;
    let h = h.trim().parse().map_err(|_| format!("bad height {h:?}"))?;
    Ok((w, h))
}

fn parse_object(
    rest: &str,
    lineno: usize,
    load_template: &mut impl FnMut(&str, (usize, usize)) -> Result<Vec<f64>>,
) -> Result<ObjectSpec> {
    let err = |message: String| Error::Parse { line: lineno, message };
    let mut template_ref = None;
    let mut extent = None;
    let mut z = None;
    let mut waypoints = None;
    for field in rest.split_whitespace() {
        let (key, value) = field
            .split_once('=')
            .ok_or_else(|| err(format!("expected key=value, got {field:?}")))?;
        match key {
            "template" => template_ref = Some(value.to_string()),
            "extent" => extent = Some(parse_extent(value).map_err(|m| err(m))?),
            "z" => z = Some(value.parse().map_err(|_| err(format!("bad z {value:?}")))?),
            "waypoints" => {
                let mut parsed = Vec::new();
                for wp in value.split(';') {
                    let (xy, t) = wp
                        .split_once('@')
                        .ok_or_else(|| err(format!("expected (x,y)@t, got {wp:?}")))?;
                    let xy = xy
                        .strip_prefix('(')
                        .and_then(|s| s.strip_suffix(')'))
                        .ok_or_else(|| err(format!("expected (x,y), got {xy:?}")))?;
                    let (x, y) = xy
                        .split_once(',')
                        .ok_or_else(|| err(format!("expected x,y in {xy:?}")))?;
                    parsed.push(Waypoint {
                        x: x.trim().parse().map_err(|_| err(format!("bad x {x:?}")))?,
                        y: y.trim().parse().map_err(|_| err(format!("bad y {y:?}")))?,
                        frame: t.trim().parse().map_err(|_| err(format!("bad frame {t:?}")))?,
                    });
                }
                waypoints = Some(parsed);
            }
            other => return Err(err(format!("unknown object field {other:?}"))),
        }
    }
    let template_ref = template_ref.ok_or_else(|| err("object needs template=".into()))?;
    let extent = extent.ok_or_else(|| err("object needs extent=WxH".into()))?;
    let template = load_template(&template_ref, extent)?;
    Ok(ObjectSpec {
        template,
        extent,
        z: z.ok_or_else(|| err("object needs z=".into()))?,
        waypoints: waypoints.ok_or_else(|| err("object needs waypoints=".into()))?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn interpolates_and_clamps_waypoints() {
        let s = Scenario::crossing(1);
        assert_eq!(s.position(0, 0), (10.0, 29.0));
        assert_eq!(s.position(0, 119), (54.0, 29.0));
        let (x, _) = s.position(0, 60);
        assert!(x > 10.0 && x < 54.0);
        assert_eq!(s.position(0, 500), (54.0, 29.0));
    }

    #[test]
    fn parses_the_file_format() {
        let text = "\
# demo
size = 32x24
frames = 10
noise_sigma = 0.01
seed = 5
object: template=dummy extent=4x4 z=0 waypoints=(8,8)@0;(20,8)@9
";
        let s = Scenario::parse(text, |r, (w, h)| {
            assert_eq!(r, "dummy");
            Ok(vec![0.5; w * h])
        })
        .unwrap();
        assert_eq!((s.width, s.height, s.frames), (32, 24, 10));
        assert_eq!(s.objects.len(), 1);
        assert_eq!(s.objects[0].waypoints[1].frame, 9);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let bad = "size = 32x24\nframes = ten\n";
        match Scenario::parse(bad, |_, _| Ok(vec![])) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn validation_rejects_escapes_and_duplicate_z() {
        let mut s = Scenario::crossing(1);
        s.objects[0].waypoints[1].x = 140.0;
        assert!(s.validate().is_err());
        let mut s = Scenario::crossing(1);
        s.objects[1].z = 0;
        assert!(s.validate().is_err());
    }
}

//! Template detectors: normalized cross-correlation sweeps that turn a
//! frame into an ordered stream of atomic symbols.

use sp_core::Symbol;

use crate::frame::Frame;

#[derive(Clone, Debug)]
pub struct Detector {
    pub symbol: Symbol,
    pub template: Vec<f64>,
    pub width: usize,
    pub height: usize,
    /// Minimum normalized cross-correlation for an emission.
    pub threshold: f64,
}

#[derive(Clone, Debug)]
pub struct Detection {
    pub symbol: Symbol,
    /// Top-left corner of the matched window.
    pub row: usize,
    pub col: usize,
    pub score: f64,
    pub detector: usize,
}

fn ncc(frame: &Frame, r: usize, c: usize, det: &Detector, t_mean: f64, t_norm: f64) -> f64 {
    let n = (det.width * det.height) as f64;
    let mut f_sum = 0.0;
    for dy in 0..det.height {
        for dx in 0..det.width {
            f_sum += frame.get(c + dx, r + dy);
        }
    }
    let f_mean = f_sum / n;
    let mut dot = 0.0;
    let mut f_sq = 0.0;
    for dy in 0..det.height {
        for dx in 0..det.width {
            let fv = frame.get(c + dx, r + dy) - f_mean;
            let tv = det.template[dy * det.width + dx] - t_mean;
            dot += fv * tv;
            f_sq += fv * fv;
        }
    }
    let denom = f_sq.sqrt() * t_norm;
    if denom < 1e-12 {
        0.0
    } else {
        dot / denom
    }
}

/// Slides every detector over the frame. Emissions scoring at or above the
/// detector's threshold survive per-detector suppression (within half a
/// template extent on both axes only the strongest is kept) and come back
/// ordered by (row, column, detector index).
pub fn detect_features(frame: &Frame, detectors: &[Detector]) -> Vec<Detection> {
    let mut all = Vec::new();
    for (di, det) in detectors.iter().enumerate() {
        assert!(
            det.width <= frame.width && det.height <= frame.height,
            "detector template larger than the frame"
        );
        let n = (det.width * det.height) as f64;
        let t_mean = det.template.iter().sum::<f64>() / n;
        let t_norm = det
            .template
            .iter()
            .map(|t| (t - t_mean) * (t - t_mean))
            .sum::<f64>()
            .sqrt();

        let mut candidates = Vec::new();
        for r in 0..=frame.height - det.height {
            for c in 0..=frame.width - det.width {
                let score = ncc(frame, r, c, det, t_mean, t_norm);
                if score >= det.threshold {
                    candidates.push(Detection {
                        symbol: det.symbol.clone(),
                        row: r,
                        col: c,
                        score,
                        detector: di,
                    });
                }
            }
        }
        // Strongest first; earlier position wins exact ties.
        candidates.sort_by(|a, b| {
            b.score
                .total_cmp(&a.score)
                .then_with(|| (a.row, a.col).cmp(&(b.row, b.col)))
        });
        let (rr, rc) = (det.height.div_ceil(2), det.width.div_ceil(2));
        let mut kept: Vec<Detection> = Vec::new();
        for cand in candidates {
            let clash = kept.iter().any(|k| {
                k.row.abs_diff(cand.row) < rr && k.col.abs_diff(cand.col) < rc
            });
            if !clash {
                kept.push(cand);
            }
        }
        all.extend(kept);
    }
    all.sort_by_key(|d| (d.row, d.col, d.detector));
    all
}

/// The symbol stream a frame produces under the given detectors.
pub fn extract_symbols(frame: &Frame, detectors: &[Detector]) -> Vec<Symbol> {
    detect_features(frame, detectors)
        .into_iter()
        .map(|d| d.symbol)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scenario::seeded_texture;

    fn detector(symbol: &str, template: Vec<f64>, w: usize, h: usize) -> Detector {
        Detector {
            symbol: Symbol::new(symbol).unwrap(),
            template,
            width: w,
            height: h,
            threshold: 0.8,
        }
    }

    fn plant(frame: &mut Frame, template: &[f64], w: usize, at: (usize, usize)) {
        for (i, v) in template.iter().enumerate() {
            frame.set(at.0 + i % w, at.1 + i / w, *v);
        }
    }

    #[test]
    fn planted_template_emits_exactly_once() {
        let mut frame = Frame::filled(32, 32, 0.1, 0);
        let tpl = seeded_texture(5, 0, (5, 5));
        plant(&mut frame, &tpl, 5, (10, 14));
        let dets = vec![detector("hit", tpl, 5, 5)];
        let found = detect_features(&frame, &dets);
        assert_eq!(found.len(), 1);
        assert_eq!((found[0].row, found[0].col), (14, 10));
        assert!(found[0].score > 0.999);
    }

    #[test]
    fn blank_frame_emits_nothing() {
        let frame = Frame::filled(16, 16, 0.3, 0);
        let dets = vec![detector("hit", seeded_texture(5, 0, (4, 4)), 4, 4)];
        assert!(extract_symbols(&frame, &dets).is_empty());
    }

    #[test]
    fn emissions_come_in_scan_order() {
        let mut frame = Frame::filled(32, 32, 0.1, 0);
        let ta = seeded_texture(5, 0, (4, 4));
        let tb = seeded_texture(5, 1, (4, 4));
        plant(&mut frame, &tb, 4, (20, 4));
        plant(&mut frame, &ta, 4, (4, 4));
        plant(&mut frame, &ta, 4, (12, 20));
        let dets = vec![
            detector("a", ta, 4, 4),
            detector("b", tb, 4, 4),
        ];
        let syms: Vec<String> = extract_symbols(&frame, &dets)
            .iter()
            .map(|s| s.as_str().to_string())
            .collect();
        assert_eq!(syms, ["a", "b", "a"]);
    }

    #[test]
    fn nearby_duplicates_are_suppressed() {
        // A 2x2 template of constant gradient matches a uniform ramp at
        // every offset; suppression keeps peaks half a template apart.
        let mut frame = Frame::filled(8, 8, 0.0, 0);
        for y in 0..8 {
            for x in 0..8 {
                frame.set(x, y, (x + y) as f64 / 14.0);
            }
        }
        let tpl = vec![0.0, 0.5, 0.5, 1.0];
        let dets = vec![Detector {
            symbol: Symbol::new("ramp").unwrap(),
            template: tpl,
            width: 2,
            height: 2,
            threshold: 0.99,
        }];
        let found = detect_features(&frame, &dets);
        assert!(!found.is_empty());
        for i in 0..found.len() {
            for j in i + 1..found.len() {
                let (a, b) = (&found[i], &found[j]);
                assert!(
                    a.row.abs_diff(b.row) >= 1 || a.col.abs_diff(b.col) >= 1,
                    "suppression left adjacent duplicates"
                );
            }
        }
    }
}

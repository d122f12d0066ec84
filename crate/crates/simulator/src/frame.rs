/// Integer pixel rectangle, end-exclusive.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PixelRect {
    pub x0: i64,
    pub y0: i64,
    pub x1: i64,
    pub y1: i64,
}

impl PixelRect {
    /// The pixel box of extent `(w, h)` centered at `center`; the center is
    /// snapped to the pixel grid, top-left at `round(c) - extent/2`.
    pub fn around(center: (f64, f64), extent: (usize, usize)) -> Self {
        let x0 = center.0.round() as i64 - extent.0 as i64 / 2;
        let y0 = center.1.round() as i64 - extent.1 as i64 / 2;
        PixelRect {
            x0,
            y0,
            x1: x0 + extent.0 as i64,
            y1: y0 + extent.1 as i64,
        }
    }

    pub fn width(&self) -> i64 {
        (self.x1 - self.x0).max(0)
    }

    pub fn height(&self) -> i64 {
        (self.y1 - self.y0).max(0)
    }

    pub fn area(&self) -> i64 {
        self.width() * self.height()
    }

    pub fn intersect(&self, other: &PixelRect) -> PixelRect {
        PixelRect {
            x0: self.x0.max(other.x0),
            y0: self.y0.max(other.y0),
            x1: self.x1.min(other.x1),
            y1: self.y1.min(other.y1),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.x1 <= self.x0 || self.y1 <= self.y0
    }
}

/// A grayscale frame, row-major, values in [0, 1].
#[derive(Clone, Debug)]
pub struct Frame {
    pub width: usize,
    pub height: usize,
    pub pixels: Vec<f64>,
    pub index: usize,
}

impl Frame {
    pub fn filled(width: usize, height: usize, value: f64, index: usize) -> Self {
        Frame {
            width,
            height,
            pixels: vec![value; width * height],
            index,
        }
    }

    pub fn get(&self, x: usize, y: usize) -> f64 {
        self.pixels[y * self.width + x]
    }

    pub fn set(&mut self, x: usize, y: usize, v: f64) {
        self.pixels[y * self.width + x] = v;
    }

    pub fn contains(&self, rect: &PixelRect) -> bool {
        rect.x0 >= 0
            && rect.y0 >= 0
            && rect.x1 <= self.width as i64
            && rect.y1 <= self.height as i64
    }

    /// Row-major copy of the box of extent `extent` around `center`, or
    /// None when the box leaves the frame.
    pub fn extract_patch(&self, center: (f64, f64), extent: (usize, usize)) -> Option<Vec<f64>> {
        let rect = PixelRect::around(center, extent);
        if !self.contains(&rect) {
            return None;
        }
        Some(self.rect_pixels(&rect))
    }

    /// Row-major copy of an in-frame rectangle.
    pub fn rect_pixels(&self, rect: &PixelRect) -> Vec<f64> {
        debug_assert!(self.contains(rect));
        let mut out = Vec::with_capacity((rect.area()) as usize);
        for y in rect.y0..rect.y1 {
            for x in rect.x0..rect.x1 {
                out.push(self.get(x as usize, y as usize));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rect_snaps_to_the_pixel_grid() {
        let r = PixelRect::around((10.0, 6.0), (4, 4));
        assert_eq!((r.x0, r.y0, r.x1, r.y1), (8, 4, 12, 8));
        let r = PixelRect::around((10.4, 6.6), (4, 4));
        assert_eq!((r.x0, r.y0, r.x1, r.y1), (8, 5, 12, 9));
    }

    #[test]
    fn patch_extraction_respects_frame_edges() {
        let f = Frame::filled(16, 16, 0.5, 0);
        assert!(f.extract_patch((2.0, 2.0), (4, 4)).is_some());
        assert!(f.extract_patch((1.0, 2.0), (4, 4)).is_none());
        assert!(f.extract_patch((14.0, 14.0), (4, 4)).is_some());
        assert!(f.extract_patch((15.0, 14.0), (4, 4)).is_none());
        assert_eq!(f.extract_patch((8.0, 8.0), (4, 4)).unwrap().len(), 16);
    }

    #[test]
    fn intersection_is_the_usual_one() {
        let a = PixelRect { x0: 0, y0: 0, x1: 10, y1: 10 };
        let b = PixelRect { x0: 5, y0: -2, x1: 15, y1: 6 };
        let i = a.intersect(&b);
        assert_eq!((i.x0, i.y0, i.x1, i.y1), (5, 0, 10, 6));
        assert_eq!(i.area(), 30);
        let c = PixelRect { x0: 20, y0: 20, x1: 22, y1: 22 };
        assert!(a.intersect(&c).is_empty());
    }
}

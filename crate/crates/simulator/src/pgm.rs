//! Binary PGM (`P5`, maxval 255) reading and writing.

use std::io::{Read, Write};

use crate::error::{Error, Result};
use crate::frame::Frame;

pub fn write_pgm(frame: &Frame, out: &mut impl Write) -> Result<()> {
    write!(out, "P5\n{} {}\n255\n", frame.width, frame.height)?;
    let bytes: Vec<u8> = frame
        .pixels
        .iter()
        .map(|&v| (v.clamp(0.0, 1.0) * 255.0).round() as u8)
        .collect();
    out.write_all(&bytes)?;
    Ok(())
}

/// Reads a `P5` image into a frame (index 0). Header comments are allowed.
pub fn read_pgm(input: &mut impl Read) -> Result<Frame> {
    let mut data = Vec::new();
    input.read_to_end(&mut data)?;
    let mut pos = 0;

    let mut token = |data: &[u8]| -> Result<String> {
        // Skip whitespace and `#` comments.
        loop {
            while pos < data.len() && data[pos].is_ascii_whitespace() {
                pos += 1;
            }
            if pos < data.len() && data[pos] == b'#' {
                while pos < data.len() && data[pos] != b'\n' {
                    pos += 1;
                }
                continue;
            }
            break;
        }
        let start = pos;
        while pos < data.len() && !data[pos].is_ascii_whitespace() {
            pos += 1;
        }
        if start == pos {
            return Err(Error::Pgm("unexpected end of header".into()));
        }
        Ok(String::from_utf8_lossy(&data[start..pos]).into_owned())
    };

    let magic = token(&data)?;
    if magic != "P5" {
        return Err(Error::Pgm(format!("expected P5, got {magic:?}")));
    }
    let width: usize = token(&data)?.parse().map_err(|_| Error::Pgm("bad width".into()))?;
    let height: usize = token(&data)?.parse().map_err(|_| Error::Pgm("bad height".into()))?;
    let maxval: u32 = token(&data)?.parse().map_err(|_| Error::Pgm("bad maxval".into()))?;
    if maxval != 255 {
        return Err(Error::Pgm(format!("only maxval 255 is supported, got {maxval}")));
    }
    pos += 1; // single whitespace after maxval
    let need = width * height;
    if data.len() < pos + need {
        return Err(Error::Pgm("truncated pixel data".into()));
    }
    let pixels = data[pos..pos + need]
        .iter()
        .map(|&b| b as f64 / 255.0)
        .collect();
    Ok(Frame {
        width,
        height,
        pixels,
        index: 0,
    })
}

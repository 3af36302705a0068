//! Grayscale images and their pixel-grid graphs.

use crate::error::{Error, Result};
use crate::graph::{build_graph, VertexSet, WeightedGraph};

/// Row-major grayscale image with nonnegative intensities.
#[derive(Debug, Clone, PartialEq)]
pub struct GrayImage {
    width: usize,
    height: usize,
    pixels: Vec<f64>,
}

impl GrayImage {
    pub fn new(width: usize, height: usize, pixels: Vec<f64>) -> Result<Self> {
        if width == 0 || height == 0 {
            return Err(Error::BadImage(format!("empty {width}x{height} image")));
        }
        if pixels.len() != width * height {
            return Err(Error::BadImage(format!(
                "{} intensities for a {width}x{height} image",
                pixels.len()
            )));
        }
        if let Some(p) = pixels.iter().find(|p| !(p.is_finite() && **p >= 0.0)) {
            return Err(Error::BadImage(format!(
                "intensity {p} is not a nonnegative number"
            )));
        }
        Ok(GrayImage {
            width,
            height,
            pixels,
        })
    }

    pub fn from_fn(width: usize, height: usize, f: impl Fn(usize, usize) -> f64) -> Result<Self> {
        let pixels = (0..height)
            .flat_map(|y| (0..width).map(move |x| (x, y)))
            .map(|(x, y)| f(x, y))
            .collect();
        Self::new(width, height, pixels)
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn pixels(&self) -> &[f64] {
        &self.pixels
    }

    pub fn get(&self, x: usize, y: usize) -> f64 {
        self.pixels[y * self.width + x]
    }

    /// Smooth test scene: three Gaussian blobs on a faint diagonal gradient.
    pub fn synthetic(size: usize) -> Result<Self> {
        let blobs = [
            (0.28, 0.3, 0.08, 1.0),
            (0.72, 0.32, 0.07, 0.8),
            (0.5, 0.74, 0.1, 0.9),
        ];
        let s = size.max(1) as f64;
        GrayImage::from_fn(size, size, |x, y| {
            let (fx, fy) = ((x as f64 + 0.5) / s, (y as f64 + 0.5) / s);
            let bright: f64 = blobs
                .iter()
                .map(|&(cx, cy, sd, a)| {
                    let d2 = (fx - cx).powi(2) + (fy - cy).powi(2);
                    a * (-d2 / (2.0 * sd * sd)).exp()
                })
                .sum();
            0.02 + 0.03 * (fx + fy) / 2.0 + bright
        })
    }

    /// Block average onto an `r × r` grid. Block `i` along an axis of length
    /// `L` covers `[⌊iL/r⌋, ⌊(i+1)L/r⌋)`.
    pub fn downsample(&self, r: usize) -> Result<GrayImage> {
        if r == 0 || r > self.width.min(self.height) {
            return Err(Error::BadGrid {
                r,
                width: self.width,
                height: self.height,
            });
        }
        let bounds = |i: usize, len: usize| (i * len / r, (i + 1) * len / r);
        GrayImage::from_fn(r, r, |gx, gy| {
            let (x0, x1) = bounds(gx, self.width);
            let (y0, y1) = bounds(gy, self.height);
            let mut sum = 0.0;
            for y in y0..y1 {
                for x in x0..x1 {
                    sum += self.get(x, y);
                }
            }
            sum / ((x1 - x0) * (y1 - y0)) as f64
        })
    }
}

/// Plain PGM (`P2`) with `#` comments. Intensities are divided by the maxval.
pub fn parse_pgm(text: &str) -> Result<GrayImage> {
    let mut tokens = text.lines().enumerate().flat_map(|(i, line)| {
        let content = line.split('#').next().unwrap_or("");
        content.split_whitespace().map(move |t| (i + 1, t))
    });
    let mut next = |what: &str| {
        tokens.next().ok_or_else(|| Error::Parse {
            line: 0,
            message: format!("unexpected end of file, expected {what}"),
        })
    };
    let (line, magic) = next("magic number")?;
    if magic != "P2" {
        return Err(Error::Parse {
            line,
            message: format!("expected `P2`, found `{magic}`"),
        });
    }
    let mut number = |what: &str| -> Result<(usize, u64)> {
        let (line, tok) = next(what)?;
        tok.parse::<u64>()
            .map(|v| (line, v))
            .map_err(|_| Error::Parse {
                line,
                message: format!("invalid {what} `{tok}`"),
            })
    };
    let (_, width) = number("width")?;
    let (_, height) = number("height")?;
    let (line, maxval) = number("maxval")?;
    if maxval == 0 {
        return Err(Error::Parse {
            line,
            message: "maxval must be positive".into(),
        });
    }
    let count = width as usize * height as usize;
    let mut pixels = Vec::with_capacity(count);
    for _ in 0..count {
        let (line, v) = number("pixel")?;
        if v > maxval {
            return Err(Error::Parse {
                line,
                message: format!("pixel {v} exceeds maxval {maxval}"),
            });
        }
        pixels.push(v as f64 / maxval as f64);
    }
    GrayImage::new(width as usize, height as usize, pixels)
}

/// Comma-separated rows of intensities, one image row per line.
pub fn parse_csv_image(text: &str) -> Result<GrayImage> {
    let mut pixels = Vec::new();
    let mut width = None;
    let mut height = 0;
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let row: Vec<f64> = line
            .split(',')
            .map(|t| {
                let t = t.trim();
                t.parse::<f64>().map_err(|_| Error::Parse {
                    line: i + 1,
                    message: format!("invalid intensity `{t}`"),
                })
            })
            .collect::<Result<_>>()?;
        match width {
            None => width = Some(row.len()),
            Some(w) if w != row.len() => {
                return Err(Error::Parse {
                    line: i + 1,
                    message: format!("row has {} values, expected {w}", row.len()),
                })
            }
            _ => {}
        }
        pixels.extend(row);
        height += 1;
    }
    GrayImage::new(width.unwrap_or(0), height, pixels)
}

pub fn emit_pgm(img: &GrayImage, maxval: u32) -> String {
    let peak = img.pixels.iter().copied().fold(0.0, f64::max);
    let scale = if peak > 0.0 {
        maxval as f64 / peak
    } else {
        0.0
    };
    let mut out = format!("P2\n{} {}\n{maxval}\n", img.width, img.height);
    for row in img.pixels.chunks(img.width) {
        let line: Vec<String> = row
            .iter()
            .map(|p| format!("{}", (p * scale).round() as u32))
            .collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

#[derive(Debug, Clone, PartialEq)]
pub struct ImageGraph {
    /// Vertex `y * r + x` is grid point `(x, y)`.
    pub graph: WeightedGraph,
    /// Grid points whose intensity is at least that of every 8-neighbor.
    pub intensity_maxima: VertexSet,
    /// The down-sampled `r × r` intensities.
    pub grid: GrayImage,
}

const OFFSETS: [(isize, isize); 8] = [
    (-1, -1),
    (0, -1),
    (1, -1),
    (-1, 0),
    (1, 0),
    (-1, 1),
    (0, 1),
    (1, 1),
];

fn neighbors8(r: usize, x: usize, y: usize) -> impl Iterator<Item = (usize, usize)> {
    OFFSETS.iter().filter_map(move |&(dx, dy)| {
        let nx = x.checked_add_signed(dx)?;
        let ny = y.checked_add_signed(dy)?;
        (nx < r && ny < r).then_some((nx, ny))
    })
}

/// Down-samples `img` to `r × r`, links each grid point to its 8 neighbors with
/// weight `I(u) · I(v)` (zero products are non-edges).
pub fn image_grid_graph(img: &GrayImage, r: usize) -> Result<ImageGraph> {
    let grid = img.downsample(r)?;
    let mut edges = Vec::with_capacity(4 * r * r);
    let mut maxima = VertexSet::empty(r * r);
    for y in 0..r {
        for x in 0..r {
            let u = y * r + x;
            let iu = grid.get(x, y);
            let mut is_max = true;
            for (nx, ny) in neighbors8(r, x, y) {
                let iv = grid.get(nx, ny);
                is_max &= iu >= iv;
                let v = ny * r + nx;
                if u < v {
                    edges.push((u, v, iu * iv));
                }
            }
            if is_max {
                maxima.insert(u);
            }
        }
    }
    Ok(ImageGraph {
        graph: build_graph(r * r, edges)?,
        intensity_maxima: maxima,
        grid,
    })
}

use std::fmt::Write;

use crate::polygon::Polygon;

/// Renders the polygon as one stroke-only closed path.
///
/// Only here do coordinates become floating point: vertex `(x, y)` is drawn at
/// `(x, −y·√m)` so that counter-clockwise stays counter-clockwise on screen.
pub fn emit_svg(polygon: &Polygon) -> String {
    let root_m = (polygon.m as f64).sqrt();
    let pts: Vec<(f64, f64)> =
        polygon.vertices.iter().map(|v| (v.x.to_f64() + 0.0, -v.y.to_f64() * root_m + 0.0)).collect();
    let (mut x0, mut y0, mut x1, mut y1) = (f64::MAX, f64::MAX, f64::MIN, f64::MIN);
    for &(x, y) in &pts {
        x0 = x0.min(x);
        y0 = y0.min(y);
        x1 = x1.max(x);
        y1 = y1.max(y);
    }
    let (mx, my) = (0.05 * (x1 - x0), 0.05 * (y1 - y0));
    let mut d = String::new();
    for (i, (x, y)) in pts.iter().enumerate() {
        let cmd = if i == 0 { 'M' } else { 'L' };
        write!(d, "{cmd}{x} {y} ").unwrap();
    }
    d.push('Z');
    format!(
        "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n\
         <svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"{} {} {} {}\">\n\
         <path d=\"{d}\" fill=\"none\" stroke=\"black\" vector-effect=\"non-scaling-stroke\"/>\n\
         </svg>\n",
        x0 - mx,
        y0 - my,
        (x1 - x0) + 2.0 * mx,
        (y1 - y0) + 2.0 * my,
    )
}

//! Chord diagrams as SVG: the occurrences sit on a circle in reading order,
//! one arc of the circle per word, and each letter is a chord between its
//! two occurrences.

use std::f64::consts::TAU;
use std::fmt::Write;

use nanoword::{HomotopyData, Nanophrase};

const SIZE: f64 = 480.0;
const RADIUS: f64 = 180.0;

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;").replace('"', "&quot;")
}

/// Angle of every occurrence, word by word. Words are separated by a gap
/// of one step so that word boundaries stay visible.
fn angles(phrase: &Nanophrase) -> Vec<Vec<f64>> {
    let lens = phrase.word_lengths();
    let gaps = if lens.len() > 1 { lens.len() } else { 0 };
    let steps = (lens.iter().sum::<usize>() + gaps).max(1) as f64;
    let mut k = 0.0;
    lens.iter()
        .map(|&l| {
            let out = (0..l).map(|j| -TAU / 4.0 + TAU * (k + j as f64) / steps).collect();
            k += l as f64 + if gaps > 0 { 1.0 } else { 0.0 };
            out
        })
        .collect()
}

fn point(angle: f64, r: f64) -> (f64, f64) {
    (SIZE / 2.0 + r * angle.cos(), SIZE / 2.0 + r * angle.sin())
}

pub fn render(phrase: &Nanophrase, data: &HomotopyData) -> String {
    let angles = angles(phrase);
    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    );
    let _ = writeln!(
        svg,
        r#"  <circle cx="{c}" cy="{c}" r="{RADIUS}" fill="none" stroke="black" stroke-width="1.5"/>"#,
        c = SIZE / 2.0
    );
    for occ in phrase.occurrences().iter().enumerate() {
        let (id, o) = occ;
        let letter = &phrase.letters()[id];
        let (r1, i1) = o.first;
        let (r2, i2) = o.second;
        let (x1, y1) = point(angles[r1][i1 - 1], RADIUS);
        let (x2, y2) = point(angles[r2][i2 - 1], RADIUS);
        let label = format!("{}:{}", letter.name, data.name(letter.symbol));
        let _ = writeln!(
            svg,
            r#"  <line class="chord" data-letter="{name}" data-from="{a}:{b}" data-to="{c}:{d}" x1="{x1:.2}" y1="{y1:.2}" x2="{x2:.2}" y2="{y2:.2}" stroke="steelblue" stroke-width="1.5"/>"#,
            name = escape(&letter.name),
            a = r1 + 1,
            b = i1,
            c = r2 + 1,
            d = i2,
        );
        let (mx, my) = ((x1 + x2) / 2.0, (y1 + y2) / 2.0);
        let _ = writeln!(svg, r#"  <text x="{mx:.2}" y="{my:.2}" font-size="12" text-anchor="middle">{}</text>"#, escape(&label));
    }
    for (r, word) in angles.iter().enumerate() {
        for (j, &a) in word.iter().enumerate() {
            let (x, y) = point(a, RADIUS);
            let (lx, ly) = point(a, RADIUS + 16.0);
            let name = &phrase.letter(phrase.word(r)[j]).name;
            let _ = writeln!(svg, r#"  <circle class="point" cx="{x:.2}" cy="{y:.2}" r="3" fill="black"/>"#);
            let _ = writeln!(
                svg,
                r#"  <text x="{lx:.2}" y="{ly:.2}" font-size="10" text-anchor="middle">{}</text>"#,
                escape(name)
            );
        }
    }
    svg.push_str("</svg>\n");
    svg
}

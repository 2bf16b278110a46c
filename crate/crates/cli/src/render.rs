//! SVG drawing of a (labelled) Motzkin path on a unit grid.

use std::fmt::Write;

use involution_paths::{ParsedPath, Step};

const CELL: usize = 40;
const MARGIN: usize = 20;

/// Renders `path` as a standalone SVG document. Output depends only on the
/// path, so identical inputs give byte-identical files.
pub fn render_svg(path: &ParsedPath) -> String {
    let (shape, labels) = match path {
        ParsedPath::Plain(m) => (m.clone(), None),
        ParsedPath::Labelled(lp) => (lp.path().clone(), Some(lp.labels().to_vec())),
    };
    let n = shape.len();
    let top = shape.height().max(1);
    let width = n * CELL + 2 * MARGIN;
    let height = top * CELL + 2 * MARGIN;
    let px = |x: usize| MARGIN + x * CELL;
    let py = |y: usize| MARGIN + (top - y) * CELL;

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    svg.push_str("<g id=\"grid\" stroke=\"#cccccc\" stroke-width=\"1\">\n");
    for x in 0..=n {
        let _ = writeln!(
            svg,
            r#"<line x1="{0}" y1="{1}" x2="{0}" y2="{2}"/>"#,
            px(x),
            py(top),
            py(0)
        );
    }
    for y in 0..=top {
        let _ = writeln!(
            svg,
            r#"<line x1="{0}" y1="{2}" x2="{1}" y2="{2}"/>"#,
            px(0),
            px(n),
            py(y)
        );
    }
    svg.push_str("</g>\n");

    let mut text = String::new();
    let mut level = 0usize;
    let mut downs = 0usize;
    svg.push_str(
        "<g id=\"path\" stroke=\"#000000\" stroke-width=\"3\" stroke-linecap=\"round\">\n",
    );
    for (x, step) in shape.steps().iter().enumerate() {
        let next = match step {
            Step::Up => level + 1,
            Step::Horizontal => level,
            Step::Down => level - 1,
        };
        let _ = writeln!(
            svg,
            r#"<line class="step" x1="{}" y1="{}" x2="{}" y2="{}"/>"#,
            px(x),
            py(level),
            px(x + 1),
            py(next)
        );
        if *step == Step::Down {
            if let Some(labels) = &labels {
                let mx = (px(x) + px(x + 1)) / 2 + 6;
                let my = (py(level) + py(next)) / 2 - 6;
                let _ = writeln!(text, r#"<text x="{mx}" y="{my}">{}</text>"#, labels[downs]);
            }
            downs += 1;
        }
        level = next;
    }
    svg.push_str("</g>\n");
    svg.push_str("<g id=\"labels\" font-family=\"sans-serif\" font-size=\"14\">\n");
    svg.push_str(&text);
    svg.push_str("</g>\n</svg>\n");
    svg
}

#[cfg(test)]
mod tests {
    use super::*;
    use involution_paths::parse_path;

    #[test]
    fn labelled_path_segments_and_labels() {
        let svg = render_svg(&parse_path("UUUD1D2HD1UD1").unwrap());
        assert_eq!(svg.matches("class=\"step\"").count(), 9);
        let labels: Vec<&str> = svg
            .split("<text ")
            .skip(1)
            .map(|t| &t[t.find('>').unwrap() + 1..t.find("</text>").unwrap()])
            .collect();
        assert_eq!(labels, ["1", "2", "1", "1"]);
    }

    #[test]
    fn empty_path_has_empty_group() {
        let svg = render_svg(&parse_path("").unwrap());
        assert!(svg.contains(
            "<g id=\"path\" stroke=\"#000000\" stroke-width=\"3\" stroke-linecap=\"round\">\n</g>"
        ));
        assert!(!svg.contains("class=\"step\""));
    }

    #[test]
    fn plain_paths_have_no_labels() {
        let svg = render_svg(&parse_path("UUDD").unwrap());
        assert_eq!(svg.matches("class=\"step\"").count(), 4);
        assert!(!svg.contains("<text"));
    }
}

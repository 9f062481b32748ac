//! Affine point configurations over Q and vertex colorings, with plain-text
//! serialization.

use crate::rational::{format_rational, parse_rational, Rational};
use std::collections::BTreeSet;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
#[error("line {line}: {msg}")]
pub struct PointsParseError {
    pub line: usize,
    pub msg: String,
}

fn err(line: usize, msg: impl Into<String>) -> PointsParseError {
    PointsParseError {
        line,
        msg: msg.into(),
    }
}

/// Ordered list of points in Q^d; point i is the image of vertex i under an
/// affine map from a simplex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointConfiguration {
    dimension: usize,
    points: Vec<Vec<Rational>>,
}

impl PointConfiguration {
    pub fn new(dimension: usize, points: Vec<Vec<Rational>>) -> Self {
        assert!(!points.is_empty(), "a configuration has at least one point");
        for p in &points {
            assert_eq!(p.len(), dimension, "point has wrong dimension");
        }
        PointConfiguration { dimension, points }
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        false // the constructor rejects empty configurations
    }

    pub fn point(&self, i: usize) -> &[Rational] {
        &self.points[i]
    }

    pub fn points(&self) -> &[Vec<Rational>] {
        &self.points
    }

    /// Header `points v1 <d> <n>`, then one point per line of
    /// space-separated rationals (`num` or `num/den`).
    pub fn to_text(&self) -> String {
        let mut out = format!("points v1 {} {}\n", self.dimension, self.points.len());
        for p in &self.points {
            let coords: Vec<String> = p.iter().map(format_rational).collect();
            out.push_str(&coords.join(" "));
            out.push('\n');
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self, PointsParseError> {
        let mut lines = text.lines().enumerate();
        let (ln, header) = lines
            .next()
            .ok_or_else(|| err(1, "empty input, expected `points v1 <d> <n>`"))?;
        let parts: Vec<&str> = header.split_whitespace().collect();
        if parts.len() != 4 || parts[0] != "points" || parts[1] != "v1" {
            return Err(err(ln + 1, "expected header `points v1 <d> <n>`"));
        }
        let d: usize = parts[2]
            .parse()
            .map_err(|_| err(ln + 1, format!("bad dimension `{}`", parts[2])))?;
        let n: usize = parts[3]
            .parse()
            .map_err(|_| err(ln + 1, format!("bad point count `{}`", parts[3])))?;
        if n == 0 {
            return Err(err(ln + 1, "a configuration has at least one point"));
        }
        let mut points = Vec::with_capacity(n);
        for (ln, line) in lines {
            if line.trim().is_empty() {
                continue;
            }
            let mut coords = Vec::with_capacity(d);
            for tok in line.split_whitespace() {
                coords.push(
                    parse_rational(tok).map_err(|e| err(ln + 1, e))?,
                );
            }
            if coords.len() != d {
                return Err(err(
                    ln + 1,
                    format!("expected {d} coordinates, found {}", coords.len()),
                ));
            }
            points.push(coords);
        }
        if points.len() != n {
            return Err(err(
                text.lines().count(),
                format!("expected {n} points, found {}", points.len()),
            ));
        }
        Ok(PointConfiguration::new(d, points))
    }
}

/// Partition of vertex indices into named color classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coloring {
    classes: Vec<Vec<usize>>,
}

impl Coloring {
    /// Classes must be nonempty and pairwise disjoint; each is stored sorted.
    pub fn new(classes: Vec<Vec<usize>>) -> Result<Self, String> {
        let mut seen = BTreeSet::new();
        let mut sorted = Vec::with_capacity(classes.len());
        for class in classes {
            if class.is_empty() {
                return Err("empty color class".into());
            }
            let mut c = class;
            c.sort_unstable();
            c.dedup();
            for &v in &c {
                if !seen.insert(v) {
                    return Err(format!("vertex {v} appears in two color classes"));
                }
            }
            sorted.push(c);
        }
        Ok(Coloring { classes: sorted })
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    /// True when the classes cover exactly the vertices 0..n.
    pub fn partitions(&self, n: usize) -> bool {
        let all: BTreeSet<usize> = self.classes.iter().flatten().copied().collect();
        all.len() == n && all.iter().all(|&v| v < n)
    }

    /// Color of a vertex, if any class contains it.
    pub fn color_of(&self, v: usize) -> Option<usize> {
        self.classes
            .iter()
            .position(|c| c.binary_search(&v).is_ok())
    }

    /// Header `colors v1`, then one class per line of vertex indices.
    pub fn to_text(&self) -> String {
        let mut out = String::from("colors v1\n");
        for c in &self.classes {
            let toks: Vec<String> = c.iter().map(|v| v.to_string()).collect();
            out.push_str(&toks.join(" "));
            out.push('\n');
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self, PointsParseError> {
        let mut lines = text.lines().enumerate();
        let (ln, header) = lines
            .next()
            .ok_or_else(|| err(1, "empty input, expected `colors v1`"))?;
        if header.split_whitespace().collect::<Vec<_>>() != ["colors", "v1"] {
            return Err(err(ln + 1, "expected header `colors v1`"));
        }
        let mut classes = Vec::new();
        let mut class_lines = Vec::new();
        for (ln, line) in lines {
            if line.trim().is_empty() {
                continue;
            }
            let mut class = Vec::new();
            for tok in line.split_whitespace() {
                let v: usize = tok
                    .parse()
                    .map_err(|_| err(ln + 1, format!("bad vertex index `{tok}`")))?;
                class.push(v);
            }
            classes.push(class);
            class_lines.push(ln + 1);
        }
        Coloring::new(classes).map_err(|msg| {
            err(class_lines.last().copied().unwrap_or(1), msg)
        })
    }
}

use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Hard cap on `|E|·|X|` so that every soft set fits a `u32`.
pub const DEFAULT_CELL_CAP: usize = 24;

/// The universe `X` together with the parameter set `E`.
///
/// Cell `(e, x)` of a soft set is stored at bit `e * |X| + x`, so bit
/// patterns compare in parameter-major order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Universe {
    points: Vec<String>,
    params: Vec<String>,
}

impl Universe {
    pub fn new<P, Q>(points: P, params: Q) -> Result<Arc<Self>>
    where
        P: IntoIterator,
        P::Item: Into<String>,
        Q: IntoIterator,
        Q::Item: Into<String>,
    {
        Self::with_cap(points, params, DEFAULT_CELL_CAP)
    }

    pub fn with_cap<P, Q>(points: P, params: Q, cap: usize) -> Result<Arc<Self>>
    where
        P: IntoIterator,
        P::Item: Into<String>,
        Q: IntoIterator,
        Q::Item: Into<String>,
    {
        let points: Vec<String> = points.into_iter().map(Into::into).collect();
        let params: Vec<String> = params.into_iter().map(Into::into).collect();
        check_labels("point", &points)?;
        check_labels("parameter", &params)?;
        let cells = points.len() * params.len();
        let cap = cap.min(DEFAULT_CELL_CAP);
        if cells > cap {
            return Err(Error::TooManyCells { cells, cap });
        }
        Ok(Arc::new(Universe { points, params }))
    }

    /// Universe with generated labels: points `a, b, c, ...`, parameters
    /// `e1, e2, ...`.
    pub fn anonymous(params: usize, points: usize) -> Result<Arc<Self>> {
        let point_labels = (0..points).map(|i| {
            if i < 26 {
                ((b'a' + i as u8) as char).to_string()
            } else {
                format!("p{i}")
            }
        });
        let param_labels = (1..=params).map(|i| format!("e{i}"));
        Self::new(point_labels, param_labels)
    }

    pub fn points(&self) -> &[String] {
        &self.points
    }

    pub fn params(&self) -> &[String] {
        &self.params
    }

    pub fn point_count(&self) -> usize {
        self.points.len()
    }

    pub fn param_count(&self) -> usize {
        self.params.len()
    }

    /// `|E|·|X|`.
    pub fn cells(&self) -> usize {
        self.points.len() * self.params.len()
    }

    /// The bit pattern of the absolute soft set `X_E`.
    pub fn full_mask(&self) -> u32 {
        mask_of(self.cells())
    }

    pub fn cell(&self, param: usize, point: usize) -> usize {
        param * self.points.len() + point
    }

    pub fn cell_coords(&self, cell: usize) -> (usize, usize) {
        (cell / self.points.len(), cell % self.points.len())
    }

    pub fn point_index(&self, label: &str) -> Result<usize> {
        self.points
            .iter()
            .position(|p| p == label)
            .ok_or_else(|| Error::UnknownPoint(label.to_string()))
    }

    pub fn param_index(&self, label: &str) -> Result<usize> {
        self.params
            .iter()
            .position(|p| p == label)
            .ok_or_else(|| Error::UnknownParameter(label.to_string()))
    }

    /// Bit mask of all cells carrying parameter `param`.
    pub fn param_row(&self, param: usize) -> u32 {
        mask_of(self.points.len()) << (param * self.points.len())
    }
}

impl fmt::Display for Universe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "X = {{{}}}, E = {{{}}}",
            self.points.join(","),
            self.params.join(",")
        )
    }
}

pub(crate) fn mask_of(cells: usize) -> u32 {
    if cells >= 32 {
        u32::MAX
    } else {
        (1u32 << cells) - 1
    }
}

pub(crate) fn same_universe(a: &Arc<Universe>, b: &Arc<Universe>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

fn check_labels(kind: &'static str, labels: &[String]) -> Result<()> {
    if labels.is_empty() {
        return Err(Error::EmptyLabels(kind));
    }
    let mut seen = HashSet::new();
    for label in labels {
        if !seen.insert(label.as_str()) {
            return Err(Error::DuplicateLabel {
                kind,
                label: label.clone(),
            });
        }
    }
    Ok(())
}

//! Composite check of the Adinkra conditions, in dependency order.

use std::fmt;

use crate::dashing::validate_totally_odd;
use crate::graph::{ColorViolation, ColoredGraph};
use crate::heights::HeightAssignment;
use crate::structure::bicolor_report;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Classification {
    None,
    PreAdinkra,
    Adinkra,
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Classification::None => "NONE",
            Classification::PreAdinkra => "PRE-ADINKRA",
            Classification::Adinkra => "ADINKRA",
        })
    }
}

/// Outcome of an optional check: not applicable, passed, or failed with details.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Check {
    Absent,
    Pass(String),
    Fail(String),
}

impl Check {
    pub fn failed(&self) -> bool {
        matches!(self, Check::Fail(_))
    }

    pub fn passed(&self) -> bool {
        matches!(self, Check::Pass(_))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    pub regular: Vec<ColorViolation>,
    pub bipartite: bool,
    /// Edges joining two vertices of the same declared parity.
    pub parity_conflicts: usize,
    /// `None` when the coloring is not regular.
    pub quadrilateral: Option<bool>,
    pub dashing: Check,
    pub heights: Check,
    pub classification: Classification,
}

impl VerifyReport {
    /// True when the graph is at least a pre-Adinkra and every supplied
    /// decoration is valid.
    pub fn ok(&self) -> bool {
        self.classification != Classification::None && !self.dashing.failed() && !self.heights.failed()
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "regular: {}", yes_no(self.regular.is_empty()))?;
        for v in &self.regular {
            writeln!(f, "  {v}")?;
        }
        writeln!(f, "bipartite: {}", yes_no(self.bipartite))?;
        if self.parity_conflicts > 0 {
            writeln!(f, "parity: {} edges join equal parities", self.parity_conflicts)?;
        }
        match self.quadrilateral {
            Some(q) => writeln!(f, "quadrilateral: {}", yes_no(q))?,
            None => writeln!(f, "quadrilateral: not checked")?,
        }
        for (name, check) in [("totally odd dashing", &self.dashing), ("heights", &self.heights)] {
            match check {
                Check::Absent => writeln!(f, "{name}: absent")?,
                Check::Pass(d) => writeln!(f, "{name}: yes{}", if d.is_empty() { String::new() } else { format!(" ({d})") })?,
                Check::Fail(d) => writeln!(f, "{name}: no ({d})")?,
            }
        }
        writeln!(f, "classification: {}", self.classification)
    }
}

/// Regular coloring, bipartite, quadrilateral, then the dashing (if any edge
/// is dashed) and the heights (if present).
pub fn verify(g: &ColoredGraph) -> VerifyReport {
    let regular = g.validate_regular_coloring();
    let bipartite = g.is_bipartite();
    let parity_conflicts = g.parity_violations().len();
    let quadrilateral = if regular.is_empty() {
        bicolor_report(g).ok().map(|r| r.is_quadrilateral())
    } else {
        None
    };

    let dashing = match (quadrilateral, g.has_dashes()) {
        (_, false) => Check::Absent,
        (Some(true), true) => match validate_totally_odd(g) {
            Ok(bad) if bad.is_empty() => Check::Pass(String::new()),
            Ok(bad) => Check::Fail(format!("{} bicolor squares with an even number of dashes", bad.len())),
            Err(e) => Check::Fail(e.to_string()),
        },
        _ => Check::Fail("requires a quadrilateral regular coloring".into()),
    };

    let heights = match g.heights() {
        None => Check::Absent,
        Some(h) => match HeightAssignment::new(g, h.to_vec()) {
            Ok(a) => {
                let seq: Vec<String> = a.rank_sequence().iter().map(|x| x.to_string()).collect();
                Check::Pass(format!("rank sequence ({})", seq.join(", ")))
            }
            Err(e) => Check::Fail(e.to_string()),
        },
    };

    let pre = regular.is_empty() && bipartite && parity_conflicts == 0 && quadrilateral == Some(true);
    let classification = if !pre {
        Classification::None
    } else if g.has_dashes() && dashing.passed() && heights.passed() {
        Classification::Adinkra
    } else {
        Classification::PreAdinkra
    };

    VerifyReport {
        regular,
        bipartite,
        parity_conflicts,
        quadrilateral,
        dashing,
        heights,
        classification,
    }
}

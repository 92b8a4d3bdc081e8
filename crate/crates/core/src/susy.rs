//! Supercharge transformation rules read off a dashed, height-graded
//! Adinkra, and a symbolic check of the algebra
//! `Q_k^2 = i d/dt`, `Q_i Q_j + Q_j Q_i = 0` for `i != j`.

use std::fmt;
use std::ops::{Mul, Neg};
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{Color, ColoredGraph, Parity, Vertex};
use crate::heights::HeightAssignment;

/// A Gaussian integer `re + im i`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Gaussian {
    pub re: i64,
    pub im: i64,
}

impl Gaussian {
    pub const ONE: Gaussian = Gaussian { re: 1, im: 0 };
    pub const I: Gaussian = Gaussian { re: 0, im: 1 };

    pub fn new(re: i64, im: i64) -> Self {
        Self { re, im }
    }

    pub fn from_sign(s: i64) -> Self {
        Self { re: s, im: 0 }
    }
}

impl Mul for Gaussian {
    type Output = Gaussian;
    fn mul(self, o: Gaussian) -> Gaussian {
        Gaussian {
            re: self.re * o.re - self.im * o.im,
            im: self.re * o.im + self.im * o.re,
        }
    }
}

impl Neg for Gaussian {
    type Output = Gaussian;
    fn neg(self) -> Gaussian {
        Gaussian {
            re: -self.re,
            im: -self.im,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Field {
    Boson(Vertex),
    Fermion(Vertex),
}

impl Field {
    pub fn vertex(self) -> Vertex {
        match self {
            Field::Boson(v) | Field::Fermion(v) => v,
        }
    }

    pub fn of(parity: Parity, v: Vertex) -> Field {
        match parity {
            Parity::Boson => Field::Boson(v),
            Parity::Fermion => Field::Fermion(v),
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Boson(v) => write!(f, "b{v}"),
            Field::Fermion(v) => write!(f, "f{v}"),
        }
    }
}

/// `coefficient * (d/dt)^derivative field`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FieldTerm {
    pub coefficient: Gaussian,
    pub derivative: u32,
    pub field: Field,
}

impl FieldTerm {
    pub fn plain(field: Field) -> Self {
        Self {
            coefficient: Gaussian::ONE,
            derivative: 0,
            field,
        }
    }
}

/// `Q_k` on every field, for each color `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupermultipletRules {
    parity: Vec<Parity>,
    /// `images[k - 1][v - 1] = Q_k(x_v)`.
    images: Vec<Vec<FieldTerm>>,
}

impl SupermultipletRules {
    pub fn colors(&self) -> usize {
        self.images.len()
    }

    pub fn n(&self) -> usize {
        self.parity.len()
    }

    pub fn field(&self, v: Vertex) -> Field {
        Field::of(self.parity[v - 1], v)
    }

    /// `Q_k(x)` for a bare field.
    pub fn image(&self, k: Color, v: Vertex) -> FieldTerm {
        self.images[k - 1][v - 1]
    }

    /// `Q_k` applied to a term; `Q_k` is linear and commutes with `d/dt`.
    pub fn apply(&self, k: Color, term: FieldTerm) -> FieldTerm {
        let q = self.image(k, term.field.vertex());
        FieldTerm {
            coefficient: term.coefficient * q.coefficient,
            derivative: term.derivative + q.derivative,
            field: q.field,
        }
    }

    /// Fields in render order: fermions then bosons, by vertex id.
    fn ordered_fields(&self) -> Vec<Field> {
        let mut fields: Vec<Field> = (1..=self.n()).map(|v| self.field(v)).collect();
        fields.sort_by_key(|f| match f {
            Field::Fermion(v) => (0, *v),
            Field::Boson(v) => (1, *v),
        });
        fields
    }
}

/// Rules for edge `{b, f}` of color `k` and sign `s`:
/// if `h(b) < h(f)`, `Q_k f = s i d/dt b` and `Q_k b = s f`;
/// otherwise `Q_k f = s i b` and `Q_k b = s d/dt f`.
pub fn emit_rules(g: &ColoredGraph) -> Result<SupermultipletRules> {
    let parity = g.parity().ok_or(Error::MissingParity)?.to_vec();
    let h = HeightAssignment::of_graph(g)?;
    let perms = g.color_permutations()?;
    let mut images = Vec::with_capacity(g.colors());
    for k in 1..=g.colors() {
        let mut row = Vec::with_capacity(g.n());
        for v in g.vertices() {
            let w = perms.apply(k, v);
            if parity[v - 1] == parity[w - 1] {
                return Err(Error::InvalidGraph(format!("edge {v}-{w} joins two fields of the same parity")));
            }
            let s = Gaussian::from_sign(perms.sign(k, v).value());
            let (boson, fermion) = match parity[v - 1] {
                Parity::Boson => (v, w),
                Parity::Fermion => (w, v),
            };
            let boson_below = h.height(boson) < h.height(fermion);
            let term = match (parity[v - 1], boson_below) {
                (Parity::Fermion, true) => (s * Gaussian::I, 1, Field::Boson(w)),
                (Parity::Fermion, false) => (s * Gaussian::I, 0, Field::Boson(w)),
                (Parity::Boson, true) => (s, 0, Field::Fermion(w)),
                (Parity::Boson, false) => (s, 1, Field::Fermion(w)),
            };
            row.push(FieldTerm {
                coefficient: term.0,
                derivative: term.1,
                field: term.2,
            });
        }
        images.push(row);
    }
    Ok(SupermultipletRules { parity, images })
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AlgebraReport {
    /// `(k, x)` with `Q_k Q_k x != i d/dt x`.
    pub square_failures: Vec<(Color, Field)>,
    /// `(i, j, x)` with `Q_i Q_j x + Q_j Q_i x != 0`.
    pub anticommutator_failures: Vec<(Color, Color, Field)>,
}

impl AlgebraReport {
    pub fn passed(&self) -> bool {
        self.square_failures.is_empty() && self.anticommutator_failures.is_empty()
    }
}

pub fn verify_algebra(rules: &SupermultipletRules) -> AlgebraReport {
    let mut report = AlgebraReport::default();
    for v in 1..=rules.n() {
        let x = FieldTerm::plain(rules.field(v));
        for i in 1..=rules.colors() {
            let sq = rules.apply(i, rules.apply(i, x));
            let expected = FieldTerm {
                coefficient: Gaussian::I,
                derivative: 1,
                field: x.field,
            };
            if sq != expected {
                report.square_failures.push((i, x.field));
            }
            for j in i + 1..=rules.colors() {
                let a = rules.apply(i, rules.apply(j, x));
                let b = rules.apply(j, rules.apply(i, x));
                let cancels = a.field == b.field
                    && a.derivative == b.derivative
                    && a.coefficient == -b.coefficient;
                if !cancels {
                    report.anticommutator_failures.push((i, j, x.field));
                }
            }
        }
    }
    report
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RenderFormat {
    Text,
    Latex,
}

impl FromStr for RenderFormat {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "text" => Ok(RenderFormat::Text),
            "latex" => Ok(RenderFormat::Latex),
            other => Err(Error::UnknownFormat(other.to_string())),
        }
    }
}

fn unit_parts(c: Gaussian) -> Option<(char, bool)> {
    // (sign, has i)
    match (c.re, c.im) {
        (1, 0) => Some(('+', false)),
        (-1, 0) => Some(('-', false)),
        (0, 1) => Some(('+', true)),
        (0, -1) => Some(('-', true)),
        _ => None,
    }
}

fn text_term(t: &FieldTerm) -> String {
    let coeff = match unit_parts(t.coefficient) {
        Some((s, true)) => format!("{s}i"),
        Some((s, false)) => format!("{s}1"),
        None => format!("({}{:+}i)", t.coefficient.re, t.coefficient.im),
    };
    let d = match t.derivative {
        0 => String::new(),
        1 => "d/dt ".to_string(),
        p => format!("d/dt^{p} "),
    };
    format!("{coeff} {d}{}", t.field)
}

fn subscript(n: usize) -> String {
    if n < 10 {
        n.to_string()
    } else {
        format!("{{{n}}}")
    }
}

fn latex_field(f: Field) -> String {
    match f {
        Field::Boson(v) => format!("b_{}", subscript(v)),
        Field::Fermion(v) => format!("f_{}", subscript(v)),
    }
}

fn latex_term(t: &FieldTerm) -> String {
    let coeff = match unit_parts(t.coefficient) {
        Some(('+', true)) => "i ".to_string(),
        Some(('-', true)) => "-i ".to_string(),
        Some(('+', false)) => String::new(),
        Some(_) => "-".to_string(),
        None => format!("({}{:+}i) ", t.coefficient.re, t.coefficient.im),
    };
    let d = match t.derivative {
        0 => String::new(),
        1 => "\\frac{d}{dt} ".to_string(),
        p => format!("\\frac{{d^{{{p}}}}}{{dt^{{{p}}}}} "),
    };
    format!("{coeff}{d}{}", latex_field(t.field))
}

/// One equation per line, ordered by color, then fermions before bosons,
/// then vertex id. No colors gives an empty document.
pub fn render(rules: &SupermultipletRules, colors: &[Color], format: RenderFormat) -> String {
    let mut lines = Vec::new();
    for &k in colors {
        for f in rules.ordered_fields() {
            let t = rules.image(k, f.vertex());
            lines.push(match format {
                RenderFormat::Text => format!("Q{k}({f}) = {}", text_term(&t)),
                RenderFormat::Latex => {
                    format!("Q_{}({}) &= {} \\\\", subscript(k), latex_field(f), latex_term(&t))
                }
            });
        }
    }
    if lines.is_empty() {
        return String::new();
    }
    match format {
        RenderFormat::Text => lines.iter().map(|l| format!("{l}\n")).collect(),
        RenderFormat::Latex => {
            let mut s = String::from("\\begin{align*}\n");
            for l in &lines {
                s.push_str(l);
                s.push('\n');
            }
            s.push_str("\\end{align*}\n");
            s
        }
    }
}

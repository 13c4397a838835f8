//! Text and JSON formats: polynomials, triangulations, dissections, drawings,
//! area vectors and certificates. Rationals are strings like `"-3/4"`.

use std::collections::BTreeMap;

use areapoly_core::areamap::{AreaVector, Drawing};
use areapoly_core::complex::{CombinatorialTriangulation, ComplexError, GeometricDissection};
use areapoly_core::exact::{Rational, Valuation};
use areapoly_core::geometry::Point;
use areapoly_core::monsky::RainbowCertificate;
use areapoly_core::poly::{Monomial, Polynomial, Ring};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("syntax error at column {}: {message}", .position + 1)]
pub struct SyntaxError {
    /// Byte offset into the input.
    pub position: usize,
    pub message: String,
}

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("bad rational {0:?}")]
    Rational(String),
    #[error("vertex {0:?} has no coordinates")]
    MissingCoordinate(String),
    #[error("drawing names unknown vertex {0:?}")]
    UnknownVertex(String),
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error(transparent)]
    Area(#[from] areapoly_core::areamap::AreaError),
    #[error(transparent)]
    Syntax(#[from] SyntaxError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Int(String),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Token)>, SyntaxError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'+' => Token::Plus,
            b'-' => Token::Minus,
            b'*' => Token::Star,
            b'^' => Token::Caret,
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((start, Token::Int(text[start..i].to_string())));
                continue;
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((start, Token::Ident(text[start..i].to_string())));
                continue;
            }
            _ => {
                let ch = text[start..].chars().next().unwrap_or('?');
                return Err(SyntaxError {
                    position: start,
                    message: format!("unexpected character {ch:?}"),
                });
            }
        };
        out.push((start, tok));
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    tokens: &'a [(usize, Token)],
    pos: usize,
    end: usize,
    ring: &'a Ring,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end, |(p, _)| *p)
    }

    fn error(&self, message: impl Into<String>) -> SyntaxError {
        SyntaxError {
            position: self.offset(),
            message: message.into(),
        }
    }

    fn expression(&mut self) -> Result<Polynomial, SyntaxError> {
        let mut acc = Polynomial::zero(self.ring);
        let mut negate = match self.peek() {
            Some(Token::Minus) => {
                self.pos += 1;
                true
            }
            Some(Token::Plus) => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        loop {
            let t = self.term()?;
            acc = if negate { &acc - &t } else { &acc + &t };
            negate = match self.peek() {
                None => return Ok(acc),
                Some(Token::Plus) => false,
                Some(Token::Minus) => true,
                Some(_) => return Err(self.error("expected '+' or '-'")),
            };
            self.pos += 1;
        }
    }

    fn term(&mut self) -> Result<Polynomial, SyntaxError> {
        let mut coeff = Rational::one();
        let mut exps = vec![0u32; self.ring.len()];
        loop {
            match self.peek().cloned() {
                Some(Token::Int(digits)) => {
                    coeff = coeff * digits.parse::<Rational>().map_err(|_| self.error("bad integer"))?;
                    self.pos += 1;
                }
                Some(Token::Ident(name)) => {
                    let var = self
                        .ring
                        .index_of(&name)
                        .ok_or_else(|| self.error(format!("unknown variable {name:?}")))?;
                    self.pos += 1;
                    let mut e = 1u32;
                    if self.peek() == Some(&Token::Caret) {
                        self.pos += 1;
                        e = match self.peek() {
                            Some(Token::Int(d)) => d.parse().map_err(|_| self.error("exponent too large"))?,
                            _ => return Err(self.error("expected exponent after '^'")),
                        };
                        self.pos += 1;
                    }
                    exps[var] = exps[var]
                        .checked_add(e)
                        .ok_or_else(|| self.error("exponent too large"))?;
                }
                _ => return Err(self.error("expected a number or a variable")),
            }
            if self.peek() != Some(&Token::Star) {
                break;
            }
            self.pos += 1;
        }
        Ok(Polynomial::term(self.ring, Monomial::from_exponents(exps), coeff))
    }
}

/// Parses the canonical text format (`U^2 + 2*U*B1 - B2`) into `ring`.
pub fn parse_polynomial(text: &str, ring: &Ring) -> Result<Polynomial, SyntaxError> {
    let tokens = tokenize(text)?;
    let mut p = Parser {
        tokens: &tokens,
        pos: 0,
        end: text.len(),
        ring,
    };
    p.expression()
}

/// Like [`parse_polynomial`], with the ring made of the variables in order of
/// first appearance.
pub fn parse_polynomial_free(text: &str) -> Result<Polynomial, SyntaxError> {
    let tokens = tokenize(text)?;
    let mut names: Vec<String> = Vec::new();
    for (_, t) in &tokens {
        if let Token::Ident(n) = t {
            if !names.contains(n) {
                names.push(n.clone());
            }
        }
    }
    let ring = Ring::new(names).expect("deduplicated");
    let mut p = Parser {
        tokens: &tokens,
        pos: 0,
        end: text.len(),
        ring: &ring,
    };
    p.expression()
}

pub fn rational(s: &str) -> Result<Rational, FormatError> {
    s.parse().map_err(|_| FormatError::Rational(s.to_string()))
}

fn point(xy: &[String; 2]) -> Result<Point, FormatError> {
    Ok(Point::new(rational(&xy[0])?, rational(&xy[1])?))
}

fn point_strings(p: &Point) -> [String; 2] {
    [p.x.to_string(), p.y.to_string()]
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TriangulationFile {
    pub vertices: Vec<String>,
    pub corners: [String; 4],
    pub triangles: Vec<[String; 3]>,
}

impl TriangulationFile {
    pub fn from_triangulation(t: &CombinatorialTriangulation) -> Self {
        let name = |v: usize| t.vertex_name(v).to_string();
        TriangulationFile {
            vertices: t.vertices().to_vec(),
            corners: t.corners().map(name),
            triangles: t.triangles().iter().map(|tri| tri.map(name)).collect(),
        }
    }

    pub fn to_triangulation(&self) -> Result<CombinatorialTriangulation, FormatError> {
        let corners = [&self.corners[0], &self.corners[1], &self.corners[2], &self.corners[3]].map(String::as_str);
        Ok(CombinatorialTriangulation::new(
            &self.vertices,
            corners,
            &self.triangles,
        )?)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DissectionFile {
    pub corners: [[String; 2]; 4],
    pub triangles: Vec<[[String; 2]; 3]>,
}

impl DissectionFile {
    pub fn from_dissection(d: &GeometricDissection) -> Self {
        DissectionFile {
            corners: [0, 1, 2, 3].map(|k| point_strings(&d.corners[k])),
            triangles: d
                .triangles
                .iter()
                .map(|t| [0, 1, 2].map(|k| point_strings(&t[k])))
                .collect(),
        }
    }

    pub fn to_dissection(&self) -> Result<GeometricDissection, FormatError> {
        let mut corners = Vec::with_capacity(4);
        for c in &self.corners {
            corners.push(point(c)?);
        }
        let mut triangles = Vec::with_capacity(self.triangles.len());
        for t in &self.triangles {
            triangles.push([point(&t[0])?, point(&t[1])?, point(&t[2])?]);
        }
        let corners: [Point; 4] = corners.try_into().expect("four corners");
        Ok(GeometricDissection::new(corners, triangles))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DrawingFile {
    pub coords: BTreeMap<String, [String; 2]>,
}

impl DrawingFile {
    pub fn from_drawing(t: &CombinatorialTriangulation, d: &Drawing) -> Self {
        let coords = (0..t.vertex_count())
            .map(|v| (t.vertex_name(v).to_string(), point_strings(d.point(v))))
            .collect();
        DrawingFile { coords }
    }

    pub fn to_drawing(&self, t: &CombinatorialTriangulation) -> Result<Drawing, FormatError> {
        if let Some(extra) = self.coords.keys().find(|k| t.vertex_index(k).is_none()) {
            return Err(FormatError::UnknownVertex(extra.clone()));
        }
        let mut pts = Vec::with_capacity(t.vertex_count());
        for name in t.vertices() {
            let xy = self
                .coords
                .get(name)
                .ok_or_else(|| FormatError::MissingCoordinate(name.clone()))?;
            pts.push(point(xy)?);
        }
        Ok(Drawing::new(t, pts)?)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AreaVectorJson {
    #[serde(rename = "U")]
    pub u: String,
    #[serde(rename = "B")]
    pub b: Vec<String>,
}

impl AreaVectorJson {
    pub fn from_areas(av: &AreaVector) -> Self {
        AreaVectorJson {
            u: av.u.to_string(),
            b: av.b.iter().map(ToString::to_string).collect(),
        }
    }
}

/// A valuation in JSON: an integer, or the string `"inf"`.
pub fn valuation_json(v: Valuation) -> serde_json::Value {
    match v {
        Valuation::Finite(n) => serde_json::Value::from(n),
        Valuation::Infinity => serde_json::Value::from("inf"),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CertificateJson {
    pub colors: BTreeMap<String, String>,
    pub rainbow: [String; 3],
    #[serde(rename = "nu_Wj")]
    pub nu_wj: serde_json::Value,
    #[serde(rename = "nu_U")]
    pub nu_u: serde_json::Value,
    pub verdict: &'static str,
}

impl CertificateJson {
    pub fn from_certificate(t: &CombinatorialTriangulation, c: &RainbowCertificate) -> Self {
        CertificateJson {
            colors: c
                .colors
                .iter()
                .enumerate()
                .map(|(v, col)| (t.vertex_name(v).to_string(), col.to_string()))
                .collect(),
            rainbow: c.vertices.map(|v| t.vertex_name(v).to_string()),
            nu_wj: valuation_json(c.nu_wj),
            nu_u: valuation_json(c.nu_u),
            verdict: if c.holds { "OK" } else { "FAIL" },
        }
    }
}

pub fn read_triangulation(json: &str) -> Result<CombinatorialTriangulation, FormatError> {
    serde_json::from_str::<TriangulationFile>(json)?.to_triangulation()
}

pub fn read_dissection(json: &str) -> Result<GeometricDissection, FormatError> {
    serde_json::from_str::<DissectionFile>(json)?.to_dissection()
}

pub fn read_drawing(json: &str, t: &CombinatorialTriangulation) -> Result<Drawing, FormatError> {
    serde_json::from_str::<DrawingFile>(json)?.to_drawing(t)
}

//! The small prefix grammar used in provenance fields, e.g.
//! `truncate(triplex(2,3),v0)` or `pyr^3(pentagon)`. Parsing an expression
//! and evaluating it replays the construction exactly.

use std::fmt;

use crate::error::{Error, Result};
use crate::families as fam;
use crate::lattice::build_lattice;
use crate::polytope::Polytope;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Simplex(usize),
    Segment,
    Prism(usize),
    Polygon(usize),
    Pentagon,
    Cyclic(usize, usize),
    SProd(Vec<usize>),
    Triplex(usize, usize),
    Pentasm(usize),
    Cp(usize, usize),
    A(usize),
    B(usize),
    C(usize),
    Sigma(usize),
    Gamma(usize, usize),
    J(usize),
    Antiwedge,
    Bipyramid(usize),
    Pyr(usize, Box<Expr>),
    FSum(Box<Expr>, Box<Expr>),
    Prod(Box<Expr>, Box<Expr>),
    Mink(Box<Expr>, Box<Expr>),
    Dual(Box<Expr>),
    /// Truncate the face spanned by the listed vertices.
    Truncate(Box<Expr>, Vec<usize>),
    /// Truncate the first simple vertex.
    Trv(Box<Expr>),
    /// Truncate the first simple edge.
    Tre(Box<Expr>),
    /// Stack beyond a facet (by index; `None` means the first simplex facet).
    Stack(Box<Expr>, Option<usize>),
    /// Add a point beyond the face of the given dimension and canonical index.
    Beyond(Box<Expr>, usize, usize),
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use Expr::*;
        match self {
            Simplex(d) => write!(f, "simplex({d})"),
            Segment => write!(f, "segment"),
            Prism(d) => write!(f, "prism({d})"),
            Polygon(n) => write!(f, "polygon({n})"),
            Pentagon => write!(f, "pentagon"),
            Cyclic(n, d) => write!(f, "cyclic({n},{d})"),
            SProd(dims) => {
                let s: Vec<String> = dims.iter().map(|d| d.to_string()).collect();
                write!(f, "sprod({})", s.join(","))
            }
            Triplex(k, m) => write!(f, "triplex({k},{m})"),
            Pentasm(d) => write!(f, "pentasm({d})"),
            Cp(k, d) => write!(f, "cp({k},{d})"),
            A(d) => write!(f, "A({d})"),
            B(d) => write!(f, "B({d})"),
            C(d) => write!(f, "C({d})"),
            Sigma(d) => write!(f, "Sigma({d})"),
            Gamma(m, n) => write!(f, "gamma({m},{n})"),
            J(d) => write!(f, "J({d})"),
            Antiwedge => write!(f, "antiwedge"),
            Bipyramid(d) => write!(f, "bipyramid({d})"),
            Pyr(1, e) => write!(f, "pyr({e})"),
            Pyr(r, e) => write!(f, "pyr^{r}({e})"),
            FSum(a, b) => write!(f, "fsum({a},{b})"),
            Prod(a, b) => write!(f, "prod({a},{b})"),
            Mink(a, b) => write!(f, "mink({a},{b})"),
            Dual(e) => write!(f, "dual({e})"),
            Truncate(e, vs) => {
                let s: Vec<String> = vs.iter().map(|v| v.to_string()).collect();
                write!(f, "truncate({e},v{})", s.join("-"))
            }
            Trv(e) => write!(f, "trv({e})"),
            Tre(e) => write!(f, "tre({e})"),
            Stack(e, None) => write!(f, "stack({e})"),
            Stack(e, Some(i)) => write!(f, "stack({e},f{i})"),
            Beyond(e, dim, idx) => write!(f, "beyond({e},{dim},{idx})"),
        }
    }
}

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------

struct Tokens<'a> {
    text: &'a str,
    pos: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(usize),
    LParen,
    RParen,
    Comma,
    Caret,
}

impl<'a> Tokens<'a> {
    fn new(text: &'a str) -> Self {
        Tokens { text, pos: 0 }
    }

    fn peek(&mut self) -> Result<Option<Tok>> {
        let save = self.pos;
        let t = self.next()?;
        self.pos = save;
        Ok(t)
    }

    fn next(&mut self) -> Result<Option<Tok>> {
        let bytes = self.text.as_bytes();
        while self.pos < bytes.len() && bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
        if self.pos >= bytes.len() {
            return Ok(None);
        }
        let c = bytes[self.pos];
        let tok = match c {
            b'(' => {
                self.pos += 1;
                Tok::LParen
            }
            b')' => {
                self.pos += 1;
                Tok::RParen
            }
            b',' => {
                self.pos += 1;
                Tok::Comma
            }
            b'^' => {
                self.pos += 1;
                Tok::Caret
            }
            b'0'..=b'9' => {
                let start = self.pos;
                while self.pos < bytes.len() && bytes[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let n: usize = self.text[start..self.pos]
                    .parse()
                    .map_err(|e| Error::Parse(format!("{e}")))?;
                Tok::Int(n)
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < bytes.len()
                    && (bytes[self.pos].is_ascii_alphanumeric()
                        || bytes[self.pos] == b'_'
                        || bytes[self.pos] == b'-')
                {
                    self.pos += 1;
                }
                Tok::Ident(self.text[start..self.pos].to_string())
            }
            other => {
                return Err(Error::Parse(format!(
                    "unexpected character '{}' at {}",
                    other as char, self.pos
                )))
            }
        };
        Ok(Some(tok))
    }

    fn expect(&mut self, want: Tok) -> Result<()> {
        match self.next()? {
            Some(t) if t == want => Ok(()),
            other => Err(Error::Parse(format!("expected {want:?}, got {other:?}"))),
        }
    }

    fn int(&mut self) -> Result<usize> {
        match self.next()? {
            Some(Tok::Int(n)) => Ok(n),
            other => Err(Error::Parse(format!("expected integer, got {other:?}"))),
        }
    }
}

fn parse_int_args(t: &mut Tokens, count: usize) -> Result<Vec<usize>> {
    t.expect(Tok::LParen)?;
    let mut out = Vec::with_capacity(count);
    for i in 0..count {
        if i > 0 {
            t.expect(Tok::Comma)?;
        }
        out.push(t.int()?);
    }
    t.expect(Tok::RParen)?;
    Ok(out)
}

/// Parse a vertex reference `v3` or `v1-4-7`.
fn parse_vertex_ref(name: &str) -> Result<Vec<usize>> {
    let rest = name
        .strip_prefix('v')
        .ok_or_else(|| Error::Parse(format!("expected vertex reference, got '{name}'")))?;
    rest.split('-')
        .map(|p| {
            p.parse::<usize>()
                .map_err(|e| Error::Parse(format!("vertex index '{p}': {e}")))
        })
        .collect()
}

fn parse_expr(t: &mut Tokens) -> Result<Expr> {
    let tok = t
        .next()?
        .ok_or_else(|| Error::Parse("unexpected end of expression".into()))?;
    let Tok::Ident(name) = tok else {
        return Err(Error::Parse(format!("expected a name, got {tok:?}")));
    };
    let expr = match name.as_str() {
        "segment" => Expr::Segment,
        "pentagon" => Expr::Pentagon,
        "antiwedge" | "TA" => Expr::Antiwedge,
        "simplex" => Expr::Simplex(parse_int_args(t, 1)?[0]),
        "prism" => Expr::Prism(parse_int_args(t, 1)?[0]),
        "polygon" => Expr::Polygon(parse_int_args(t, 1)?[0]),
        "cyclic" => {
            let a = parse_int_args(t, 2)?;
            Expr::Cyclic(a[0], a[1])
        }
        "sprod" => {
            t.expect(Tok::LParen)?;
            let mut dims = vec![t.int()?];
            while t.peek()? == Some(Tok::Comma) {
                t.next()?;
                dims.push(t.int()?);
            }
            t.expect(Tok::RParen)?;
            Expr::SProd(dims)
        }
        "triplex" => {
            let a = parse_int_args(t, 2)?;
            Expr::Triplex(a[0], a[1])
        }
        "pentasm" => Expr::Pentasm(parse_int_args(t, 1)?[0]),
        "cp" => {
            let a = parse_int_args(t, 2)?;
            Expr::Cp(a[0], a[1])
        }
        "A" => Expr::A(parse_int_args(t, 1)?[0]),
        "B" => Expr::B(parse_int_args(t, 1)?[0]),
        "C" => Expr::C(parse_int_args(t, 1)?[0]),
        "Sigma" => Expr::Sigma(parse_int_args(t, 1)?[0]),
        "gamma" => {
            let a = parse_int_args(t, 2)?;
            Expr::Gamma(a[0], a[1])
        }
        "J" => Expr::J(parse_int_args(t, 1)?[0]),
        "bipyramid" => Expr::Bipyramid(parse_int_args(t, 1)?[0]),
        "pyr" => {
            let r = if t.peek()? == Some(Tok::Caret) {
                t.next()?;
                t.int()?
            } else {
                1
            };
            t.expect(Tok::LParen)?;
            let inner = parse_expr(t)?;
            t.expect(Tok::RParen)?;
            Expr::Pyr(r, Box::new(inner))
        }
        "fsum" | "prod" | "mink" => {
            t.expect(Tok::LParen)?;
            let a = parse_expr(t)?;
            t.expect(Tok::Comma)?;
            let b = parse_expr(t)?;
            t.expect(Tok::RParen)?;
            match name.as_str() {
                "fsum" => Expr::FSum(Box::new(a), Box::new(b)),
                "prod" => Expr::Prod(Box::new(a), Box::new(b)),
                _ => Expr::Mink(Box::new(a), Box::new(b)),
            }
        }
        "dual" => {
            t.expect(Tok::LParen)?;
            let a = parse_expr(t)?;
            t.expect(Tok::RParen)?;
            Expr::Dual(Box::new(a))
        }
        "truncate" => {
            t.expect(Tok::LParen)?;
            let a = parse_expr(t)?;
            t.expect(Tok::Comma)?;
            let tok = t.next()?;
            let Some(Tok::Ident(vref)) = tok else {
                return Err(Error::Parse(format!("expected face reference, got {tok:?}")));
            };
            t.expect(Tok::RParen)?;
            Expr::Truncate(Box::new(a), parse_vertex_ref(&vref)?)
        }
        "trv" | "tre" => {
            t.expect(Tok::LParen)?;
            let a = parse_expr(t)?;
            t.expect(Tok::RParen)?;
            if name == "trv" {
                Expr::Trv(Box::new(a))
            } else {
                Expr::Tre(Box::new(a))
            }
        }
        "stack" => {
            t.expect(Tok::LParen)?;
            let a = parse_expr(t)?;
            let mut idx = None;
            if t.peek()? == Some(Tok::Comma) {
                t.next()?;
                let tok = t.next()?;
                let Some(Tok::Ident(fref)) = tok else {
                    return Err(Error::Parse(format!("expected facet reference, got {tok:?}")));
                };
                let num = fref
                    .strip_prefix('f')
                    .ok_or_else(|| Error::Parse(format!("bad facet reference '{fref}'")))?;
                idx = Some(
                    num.parse::<usize>()
                        .map_err(|e| Error::Parse(format!("{e}")))?,
                );
            }
            t.expect(Tok::RParen)?;
            Expr::Stack(Box::new(a), idx)
        }
        "beyond" => {
            t.expect(Tok::LParen)?;
            let a = parse_expr(t)?;
            t.expect(Tok::Comma)?;
            let dim = t.int()?;
            t.expect(Tok::Comma)?;
            let idx = t.int()?;
            t.expect(Tok::RParen)?;
            Expr::Beyond(Box::new(a), dim, idx)
        }
        other => return Err(Error::Parse(format!("unknown constructor '{other}'"))),
    };
    Ok(expr)
}

pub fn parse(text: &str) -> Result<Expr> {
    let mut t = Tokens::new(text);
    let e = parse_expr(&mut t)?;
    if let Some(extra) = t.next()? {
        return Err(Error::Parse(format!("trailing input: {extra:?}")));
    }
    Ok(e)
}

pub fn eval(e: &Expr) -> Result<Polytope> {
    use Expr::*;
    let p = match e {
        Simplex(d) => fam::simplex(*d)?,
        Segment => fam::segment()?,
        Prism(d) => fam::prism(*d)?,
        Polygon(n) => fam::polygon(*n)?,
        Pentagon => fam::pentagon()?,
        Cyclic(n, d) => fam::cyclic(*n, *d)?,
        SProd(dims) => fam::simplex_product(dims)?,
        Triplex(k, m) => fam::triplex(*k, *m)?,
        Pentasm(d) => fam::pentasm(*d)?,
        Cp(k, d) => fam::capped_prism(*k, *d)?,
        A(d) => fam::family_a(*d)?,
        B(d) => fam::family_b(*d)?,
        C(d) => fam::family_c(*d)?,
        Sigma(d) => fam::family_sigma(*d)?,
        Gamma(m, n) => fam::gamma(*m, *n)?,
        J(d) => fam::j_family(*d)?,
        Antiwedge => fam::antiwedge()?,
        Bipyramid(d) => fam::bipyramid(*d)?,
        Pyr(r, inner) => fam::pyramid(&eval(inner)?, *r)?,
        FSum(a, b) => fam::free_sum(&eval(a)?, &eval(b)?)?,
        Prod(a, b) => fam::product(&eval(a)?, &eval(b)?)?,
        Mink(a, b) => fam::minkowski_sum(&eval(a)?, &eval(b)?)?,
        Dual(a) => crate::lattice::dual(&eval(a)?)?,
        Truncate(a, vs) => fam::truncate(&eval(a)?, vs)?.0,
        Trv(a) => fam::truncate_first_simple_vertex(&eval(a)?)?,
        Tre(a) => fam::truncate_first_simple_edge(&eval(a)?)?,
        Stack(a, None) => fam::stack_first(&eval(a)?)?,
        Stack(a, Some(i)) => fam::stack(&eval(a)?, *i)?,
        Beyond(a, dim, idx) => {
            let base = eval(a)?;
            let lat = build_lattice(&base)?;
            let ids = lat.ids_of_dim(*dim as i64);
            let &id = ids.get(*idx).ok_or_else(|| {
                Error::BadParameter(format!("no face #{idx} of dimension {dim}"))
            })?;
            fam::stack_beyond_face(&base, &lat.face_vertices(id))?
        }
    };
    Ok(p.with_provenance(e.to_string()))
}

/// Parse and evaluate a provenance expression.
pub fn replay(text: &str) -> Result<Polytope> {
    eval(&parse(text)?)
}

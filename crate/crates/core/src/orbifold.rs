//! Group presentations for discrete groups with `beta < -4`, `gamma > 0`.
//!
//! Four families occur, each with two order slots `m` and `q` taking values
//! in [`ExtendedOrder`]:
//!
//! ```text
//! PH[inf,m;q]    = <x,y,s   | x^inf=s^2=(xs)^2=(ys)^2=(xyxy^-1)^m=(y^-1xys)^q=1>
//! P[inf,m;q]     = <w,x,y,z | w^inf=x^2=y^2=z^2=(wx)^2=(wy)^2=(yz)^2=(zx)^q=(zw)^m=1>
//! S2[inf,m;q]    = <x,L     | x^inf=(xLxL^-1)^m=(xL^2x^-1L^-2)^q=1>
//! GTet1[inf,m;q] = <x,y,z   | x^inf=y^2=z^inf=(xy)^m=(yzy^-1z^-1)^q=[x,z]=1>
//! ```
//!
//! A relation `w^infbar=1` is dropped (the element is hyperbolic). In
//! [`RenderMode::Kleinian`] the relations `w^inf=1` stay and mark
//! parabolics; [`RenderMode::Abstract`] drops them too.
//!
//! The rendered text is ASCII apart from the angle brackets and parses back
//! with [`parse_presentation`].

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::{self, Write};

use crate::types::{ExtendedOrder, HalfLength};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PresentationKind {
    PH,
    P,
    S2,
    GTet1,
}

impl PresentationKind {
    pub const ALL: [PresentationKind; 4] =
        [PresentationKind::PH, PresentationKind::P, PresentationKind::S2, PresentationKind::GTet1];

    pub fn name(self) -> &'static str {
        match self {
            PresentationKind::PH => "PH",
            PresentationKind::P => "P",
            PresentationKind::S2 => "S2",
            PresentationKind::GTet1 => "GTet1",
        }
    }

    pub fn generators(self) -> &'static [&'static str] {
        match self {
            PresentationKind::PH => &["x", "y", "s"],
            PresentationKind::P => &["w", "x", "y", "z"],
            PresentationKind::S2 => &["x", "L"],
            PresentationKind::GTet1 => &["x", "y", "z"],
        }
    }
}

/// A letter raised to a nonzero power.
pub type Syllable = (&'static str, i32);

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Word {
    Product(Vec<Syllable>),
    /// `[a, b]`.
    Commutator(&'static str, &'static str),
}

/// `word^exponent = 1`, or `word = 1` when `exponent` is `None`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    pub word: Word,
    pub exponent: Option<ExtendedOrder>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RenderMode {
    Kleinian,
    Abstract,
}

/// One of the four presentations with its slots filled. The first slot is
/// always `inf` and is not stored.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Presentation {
    pub kind: PresentationKind,
    pub m: ExtendedOrder,
    pub q: ExtendedOrder,
}

fn word(letters: &[Syllable]) -> Word {
    Word::Product(letters.to_vec())
}

fn rel(letters: &[Syllable], e: ExtendedOrder) -> Relation {
    Relation { word: word(letters), exponent: Some(e) }
}

const TWO: ExtendedOrder = ExtendedOrder::Finite(2);
const INF: ExtendedOrder = ExtendedOrder::Omega;

impl Presentation {
    pub fn new(kind: PresentationKind, m: ExtendedOrder, q: ExtendedOrder) -> Result<Self> {
        if !m.at_least(2) || !q.at_least(2) {
            return Err(Error::InvalidWitness("presentation slots must be at least 2"));
        }
        Ok(Self { kind, m, q })
    }

    pub fn generators(&self) -> &'static [&'static str] {
        self.kind.generators()
    }

    /// The full relation list in template order, before any removal.
    pub fn relations(&self) -> Vec<Relation> {
        let (m, q) = (self.m, self.q);
        match self.kind {
            PresentationKind::PH => alloc::vec![
                rel(&[("x", 1)], INF),
                rel(&[("s", 1)], TWO),
                rel(&[("x", 1), ("s", 1)], TWO),
                rel(&[("y", 1), ("s", 1)], TWO),
                rel(&[("x", 1), ("y", 1), ("x", 1), ("y", -1)], m),
                rel(&[("y", -1), ("x", 1), ("y", 1), ("s", 1)], q),
            ],
            PresentationKind::P => alloc::vec![
                rel(&[("w", 1)], INF),
                rel(&[("x", 1)], TWO),
                rel(&[("y", 1)], TWO),
                rel(&[("z", 1)], TWO),
                rel(&[("w", 1), ("x", 1)], TWO),
                rel(&[("w", 1), ("y", 1)], TWO),
                rel(&[("y", 1), ("z", 1)], TWO),
                rel(&[("z", 1), ("x", 1)], q),
                rel(&[("z", 1), ("w", 1)], m),
            ],
            PresentationKind::S2 => alloc::vec![
                rel(&[("x", 1)], INF),
                rel(&[("x", 1), ("L", 1), ("x", 1), ("L", -1)], m),
                rel(&[("x", 1), ("L", 2), ("x", -1), ("L", -2)], q),
            ],
            PresentationKind::GTet1 => alloc::vec![
                rel(&[("x", 1)], INF),
                rel(&[("y", 1)], TWO),
                rel(&[("z", 1)], INF),
                rel(&[("x", 1), ("y", 1)], m),
                rel(&[("y", 1), ("z", 1), ("y", -1), ("z", -1)], q),
                Relation { word: Word::Commutator("x", "z"), exponent: None },
            ],
        }
    }

    /// The relations kept under the removal conventions of `mode`.
    pub fn visible_relations(&self, mode: RenderMode) -> Vec<Relation> {
        self.relations()
            .into_iter()
            .filter(|r| match r.exponent {
                Some(ExtendedOrder::BarOmega) => false,
                Some(ExtendedOrder::Omega) => mode == RenderMode::Kleinian,
                _ => true,
            })
            .collect()
    }

    /// `PH[inf,2;3]`.
    pub fn symbol(&self) -> String {
        alloc::format!("{}[inf,{};{}]", self.kind.name(), self.m, self.q)
    }

    pub fn render(&self, mode: RenderMode) -> String {
        let mut out = String::from("\u{27e8}");
        out.push_str(&self.generators().join(","));
        let rels = self.visible_relations(mode);
        if !rels.is_empty() {
            out.push_str(" | ");
            for r in &rels {
                write_relation(&mut out, r);
                out.push('=');
            }
            out.push('1');
        }
        out.push('\u{27e9}');
        out
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.symbol())
    }
}

fn write_syllables(out: &mut String, letters: &[Syllable]) {
    for &(g, e) in letters {
        out.push_str(g);
        if e != 1 {
            let _ = write!(out, "^{e}");
        }
    }
}

fn write_relation(out: &mut String, r: &Relation) {
    match &r.word {
        Word::Commutator(a, b) => {
            let _ = write!(out, "[{a},{b}]");
        }
        Word::Product(letters) => {
            let bare = letters.len() == 1 && letters[0].1 == 1;
            if !bare {
                out.push('(');
            }
            write_syllables(out, letters);
            if !bare {
                out.push(')');
            }
        }
    }
    if let Some(e) = r.exponent {
        let _ = write!(out, "^{e}");
    }
}

/// Selects the presentation of the group with witnesses `(u, v)`.
///
/// | `t(u)`          | `t(v)`               | presentation                 |
/// |-----------------|----------------------|------------------------------|
/// | even or infinite | odd                 | `PH[inf, t(u)/2; t(v)]`      |
/// | even or infinite | even or infinite    | `S2[inf, t(u)/2; t(v)/2]`    |
/// | odd             | odd                  | `P[inf, t(u); t(v)]`         |
/// | odd             | even or infinite     | `GTet1[inf, t(u); t(v)/2]`   |
pub fn presentation_for(u: HalfLength, v: HalfLength) -> Result<Presentation> {
    let (tu, tv) = (u.order(), v.order());
    if !tu.at_least(3) {
        return Err(Error::InvalidWitness("t(u) must be at least 3"));
    }
    if !tv.at_least(3) {
        return Err(Error::InvalidWitness("t(v) must be at least 3"));
    }
    let half = |t: ExtendedOrder| t.checked_div(2).ok_or(Error::InvalidWitness("order not divisible by 2"));
    let (kind, m, q) = match (tu.is_odd(), tv.is_odd()) {
        (false, true) => (PresentationKind::PH, half(tu)?, tv),
        (false, false) => (PresentationKind::S2, half(tu)?, half(tv)?),
        (true, true) => (PresentationKind::P, tu, tv),
        (true, false) => (PresentationKind::GTet1, tu, half(tv)?),
    };
    Presentation::new(kind, m, q)
}

fn kind_from_name(s: &str) -> Option<PresentationKind> {
    PresentationKind::ALL.into_iter().find(|k| k.name() == s)
}

fn parse_order(s: &str) -> Result<ExtendedOrder> {
    match s {
        "inf" => Ok(ExtendedOrder::Omega),
        "infbar" => Ok(ExtendedOrder::BarOmega),
        _ => s.parse::<u32>().map(ExtendedOrder::Finite).map_err(|_| Error::Parse("bad order")),
    }
}

/// Parses the short form `PH[inf,2;3]`.
pub fn parse_symbol(s: &str) -> Result<Presentation> {
    let s = s.trim();
    let open = s.find('[').ok_or(Error::Parse("missing '['"))?;
    let kind = kind_from_name(&s[..open]).ok_or(Error::Parse("unknown presentation kind"))?;
    let body = s[open + 1..].strip_suffix(']').ok_or(Error::Parse("missing ']'"))?;
    let (first, rest) = body.split_once(',').ok_or(Error::Parse("missing ','"))?;
    if first != "inf" {
        return Err(Error::Parse("first slot must be inf"));
    }
    let (m, q) = rest.split_once(';').ok_or(Error::Parse("missing ';'"))?;
    Presentation::new(kind, parse_order(m)?, parse_order(q)?)
}

/// Relations as parsed from text, with letters borrowed from the input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParsedRelation<'a> {
    pub commutator: Option<(&'a str, &'a str)>,
    pub letters: Vec<(&'a str, i32)>,
    pub exponent: Option<ExtendedOrder>,
}

fn parse_letters(s: &str) -> Result<Vec<(&str, i32)>> {
    let mut out = Vec::new();
    let bytes = s.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        if !bytes[i].is_ascii_alphabetic() {
            return Err(Error::Parse("expected a generator letter"));
        }
        let letter = &s[i..i + 1];
        i += 1;
        let mut e = 1;
        if i < bytes.len() && bytes[i] == b'^' {
            let start = i + 1;
            let mut j = start;
            if j < bytes.len() && bytes[j] == b'-' {
                j += 1;
            }
            while j < bytes.len() && bytes[j].is_ascii_digit() {
                j += 1;
            }
            e = s[start..j].parse().map_err(|_| Error::Parse("bad letter exponent"))?;
            i = j;
        }
        out.push((letter, e));
    }
    Ok(out)
}

fn parse_relation(s: &str) -> Result<ParsedRelation<'_>> {
    if let Some(inner) = s.strip_prefix('[') {
        let inner = inner.strip_suffix(']').ok_or(Error::Parse("unclosed commutator"))?;
        let (a, b) = inner.split_once(',').ok_or(Error::Parse("commutator needs two letters"))?;
        return Ok(ParsedRelation { commutator: Some((a, b)), letters: Vec::new(), exponent: None });
    }
    let (body, exp) = if let Some(inner) = s.strip_prefix('(') {
        let close = inner.find(')').ok_or(Error::Parse("unclosed parenthesis"))?;
        let rest = &inner[close + 1..];
        let exp = rest.strip_prefix('^').ok_or(Error::Parse("group word needs an exponent"))?;
        (&inner[..close], Some(exp))
    } else {
        match s.split_once('^') {
            Some((g, e)) => (g, Some(e)),
            None => (s, None),
        }
    };
    let exponent = exp.map(parse_order).transpose()?;
    Ok(ParsedRelation { commutator: None, letters: parse_letters(body)?, exponent })
}

/// Splits rendered text into generators and relations.
pub fn parse_relations(text: &str) -> Result<(Vec<&str>, Vec<ParsedRelation<'_>>)> {
    let inner = text
        .trim()
        .strip_prefix('\u{27e8}')
        .and_then(|t| t.strip_suffix('\u{27e9}'))
        .ok_or(Error::Parse("missing angle brackets"))?;
    let (gens, rels) = match inner.split_once('|') {
        Some((g, r)) => (g.trim(), Some(r.trim())),
        None => (inner.trim(), None),
    };
    let generators: Vec<&str> = gens.split(',').map(str::trim).collect();
    let mut relations = Vec::new();
    if let Some(rels) = rels {
        let parts: Vec<&str> = split_top_level(rels);
        let (last, body) = parts.split_last().ok_or(Error::Parse("empty relation list"))?;
        if *last != "1" {
            return Err(Error::Parse("relation chain must end in =1"));
        }
        for p in body {
            relations.push(parse_relation(p)?);
        }
    }
    Ok((generators, relations))
}

/// Splits on `=` outside brackets.
fn split_top_level(s: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in s.char_indices() {
        match c {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            '=' if depth == 0 => {
                out.push(s[start..i].trim());
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(s[start..].trim());
    out
}

/// Parses Kleinian-mode text back into a [`Presentation`]. Slots whose
/// relation is absent are read as `infbar`.
pub fn parse_presentation(text: &str) -> Result<Presentation> {
    let (gens, rels) = parse_relations(text)?;
    let kind = PresentationKind::ALL
        .into_iter()
        .find(|k| k.generators() == gens.as_slice())
        .ok_or(Error::Parse("unknown generator set"))?;
    let bar = ExtendedOrder::BarOmega;
    let template = Presentation { kind, m: bar, q: bar }.relations();
    let (mut m, mut q) = (bar, bar);
    let mut seen = alloc::vec![false; template.len()];
    for r in &rels {
        let idx =
            template.iter().position(|t| same_word(&t.word, r)).ok_or(Error::Parse("relation not in template"))?;
        if seen[idx] {
            return Err(Error::Parse("duplicate relation"));
        }
        seen[idx] = true;
        let t = &template[idx];
        if t.exponent == Some(bar) {
            let e = r.exponent.ok_or(Error::Parse("slot relation needs an exponent"))?;
            if slot_index(kind, idx) == 0 {
                m = e;
            } else {
                q = e;
            }
        } else if t.exponent != r.exponent {
            return Err(Error::Parse("fixed relation has the wrong exponent"));
        }
    }
    for (i, t) in template.iter().enumerate() {
        let optional = matches!(t.exponent, Some(ExtendedOrder::BarOmega));
        if !seen[i] && !optional {
            return Err(Error::Parse("missing relation"));
        }
    }
    Presentation::new(kind, m, q)
}

/// Whether template relation `idx` carries slot `m` (0) or `q` (1).
fn slot_index(kind: PresentationKind, idx: usize) -> usize {
    match (kind, idx) {
        (PresentationKind::PH, 4) | (PresentationKind::P, 8) | (PresentationKind::S2, 1) => 0,
        (PresentationKind::GTet1, 3) => 0,
        _ => 1,
    }
}

fn same_word(w: &Word, r: &ParsedRelation<'_>) -> bool {
    match (w, r.commutator) {
        (Word::Commutator(a, b), Some((x, y))) => *a == x && *b == y,
        (Word::Product(letters), None) => {
            letters.len() == r.letters.len() && letters.iter().zip(&r.letters).all(|(a, b)| a.0 == b.0 && a.1 == b.1)
        }
        _ => false,
    }
}

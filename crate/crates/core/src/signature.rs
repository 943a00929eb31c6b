//! NEC signatures `(g; ±; [m_1,..,m_r]; {(n_11,..),..})`: parsing, rendering,
//! exact area and the signature-level predicates.

use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Exact rational used for every area computation.
pub type Rational = Ratio<i128>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SignatureError {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("proper period {0} is less than 2")]
    ProperPeriod(u32),
    #[error("link period {0} is less than 2")]
    LinkPeriod(u32),
    #[error("sign '-' requires genus at least 1")]
    NonOrientableGenusZero,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

/// Link periods of one boundary component; empty means `(-)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct PeriodCycle {
    pub links: Vec<u32>,
}

impl PeriodCycle {
    pub fn new(links: Vec<u32>) -> Self {
        PeriodCycle { links }
    }

    pub fn empty() -> Self {
        PeriodCycle { links: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.links.len()
    }

    pub fn is_empty(&self) -> bool {
        self.links.is_empty()
    }

    /// The cycle read from position `t`: `(n_{t+1},..,n_s,n_1,..,n_t)`.
    pub fn rotated(&self, t: usize) -> PeriodCycle {
        let s = self.links.len();
        if s == 0 {
            return self.clone();
        }
        PeriodCycle {
            links: (0..s).map(|k| self.links[(t + k) % s]).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NecSignature {
    pub genus: u32,
    pub sign: Sign,
    pub proper_periods: Vec<u32>,
    pub cycles: Vec<PeriodCycle>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Classification {
    AdmissibleProperNec,
    AdmissibleFuchsian,
    NonHyperbolic,
}

/// Numbers of period cycles with 0, 1, 2 and at least 3 link periods.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct CycleParams {
    pub k0: usize,
    pub k1: usize,
    pub k2: usize,
    pub k3: usize,
}

/// Surface data of a torsion-free kernel deduced from areas.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct KernelSurface {
    /// `None` when the area formula gives a non-integral genus.
    pub genus: Option<i128>,
    pub consistent: bool,
}

impl NecSignature {
    pub fn new(
        genus: u32,
        sign: Sign,
        proper_periods: Vec<u32>,
        cycles: Vec<PeriodCycle>,
    ) -> Result<Self, SignatureError> {
        if let Some(&m) = proper_periods.iter().find(|&&m| m < 2) {
            return Err(SignatureError::ProperPeriod(m));
        }
        if let Some(&n) = cycles.iter().flat_map(|c| c.links.iter()).find(|&&n| n < 2) {
            return Err(SignatureError::LinkPeriod(n));
        }
        if sign == Sign::Minus && genus == 0 {
            return Err(SignatureError::NonOrientableGenusZero);
        }
        Ok(NecSignature {
            genus,
            sign,
            proper_periods,
            cycles,
        })
    }

    pub fn r(&self) -> usize {
        self.proper_periods.len()
    }

    pub fn k(&self) -> usize {
        self.cycles.len()
    }

    /// `μ = αg + k − 2 + Σ(1 − 1/m_i) + ½ ΣΣ(1 − 1/n_ij)`, with α = 2 for `+`
    /// and α = 1 for `−`.
    pub fn area(&self) -> Rational {
        let one = Rational::from_integer(1);
        let alpha: i128 = match self.sign {
            Sign::Plus => 2,
            Sign::Minus => 1,
        };
        let mut mu = Rational::from_integer(alpha * self.genus as i128 + self.k() as i128 - 2);
        for &m in &self.proper_periods {
            mu += one - Rational::new(1, m as i128);
        }
        let half = Rational::new(1, 2);
        for c in &self.cycles {
            for &n in &c.links {
                mu += half * (one - Rational::new(1, n as i128));
            }
        }
        mu
    }

    pub fn classify(&self) -> Classification {
        if self.area() <= Rational::from_integer(0) {
            Classification::NonHyperbolic
        } else if self.sign == Sign::Plus && self.cycles.is_empty() {
            Classification::AdmissibleFuchsian
        } else {
            Classification::AdmissibleProperNec
        }
    }

    pub fn is_admissible(&self) -> bool {
        self.area() > Rational::from_integer(0)
    }

    pub fn cycle_params(&self) -> CycleParams {
        let mut p = CycleParams::default();
        for c in &self.cycles {
            match c.len() {
                0 => p.k0 += 1,
                1 => p.k1 += 1,
                2 => p.k2 += 1,
                _ => p.k3 += 1,
            }
        }
        p
    }

    /// The signature with genus 0 and sign `+`, keeping the torsion part.
    pub fn torsion_part(&self) -> NecSignature {
        NecSignature {
            genus: 0,
            sign: Sign::Plus,
            proper_periods: self.proper_periods.clone(),
            cycles: self.cycles.clone(),
        }
    }
}

/// Adjacency reading for "two consecutive link periods".
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Adjacency {
    Cyclic,
    Linear,
}

/// Bordered-surface subgroup criterion: some period cycle is empty, or has
/// two consecutive link periods equal to 2. Returns `None` when `k = 0`
/// (the signature is not bordered).
pub fn bordered_surface_criterion(sig: &NecSignature, adjacency: Adjacency) -> Option<bool> {
    if sig.cycles.is_empty() {
        return None;
    }
    Some(sig.cycles.iter().any(|c| {
        let s = c.len();
        if s == 0 {
            return true;
        }
        let linear = c.links.windows(2).any(|w| w[0] == 2 && w[1] == 2);
        match adjacency {
            Adjacency::Linear => linear,
            Adjacency::Cyclic => linear || (s >= 2 && c.links[s - 1] == 2 && c.links[0] == 2),
        }
    }))
}

/// `μ(Γ') = index · μ(Γ)`.
pub fn riemann_hurwitz(mu: Rational, index: u128) -> Rational {
    mu * Rational::from_integer(index as i128)
}

/// Genus of a torsion-free kernel of the given index. A non-orientable
/// kernel has signature `(γ;−;[−];{−})`, so `γ = μ(K) + 2`; an orientable one
/// has `(g;+;[−];{−})`, so `g = (μ(K) + 2)/2`. For `μ(Γ) > 0` consistency
/// requires `γ ≥ 3` or `g ≥ 2`; for non-hyperbolic signatures (spherical or
/// Euclidean quotients) only integrality and `γ ≥ 1`, `g ≥ 0` are required.
pub fn kernel_surface_data(mu: Rational, index: u128, orientable: bool) -> KernelSurface {
    let mu_k = riemann_hurwitz(mu, index);
    let two = Rational::from_integer(2);
    let raw = if orientable {
        (mu_k + two) / two
    } else {
        mu_k + two
    };
    if !raw.is_integer() {
        return KernelSurface {
            genus: None,
            consistent: false,
        };
    }
    let genus = raw.to_integer();
    let hyperbolic = mu > Rational::from_integer(0);
    let min = match (orientable, hyperbolic) {
        (false, true) => 3,
        (true, true) => 2,
        (false, false) => 1,
        (true, false) => 0,
    };
    KernelSurface {
        genus: Some(genus),
        consistent: genus >= min,
    }
}

/// Renders a rational as `p/q` or `p`.
pub fn rational_to_string(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn parse_rational(text: &str) -> Option<Rational> {
    let text = text.trim();
    match text.split_once('/') {
        Some((p, q)) => {
            let q: i128 = q.trim().parse().ok()?;
            if q == 0 {
                return None;
            }
            Some(Rational::new(p.trim().parse().ok()?, q))
        }
        None => Some(Rational::from_integer(text.parse().ok()?)),
    }
}

impl fmt::Display for NecSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({};{};", self.genus, self.sign.symbol())?;
        if self.proper_periods.is_empty() {
            write!(f, "[-]")?;
        } else {
            write!(f, "[{}]", join(&self.proper_periods))?;
        }
        write!(f, ";")?;
        if self.cycles.is_empty() {
            write!(f, "{{-}}")?;
        } else {
            write!(f, "{{")?;
            for (i, c) in self.cycles.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                if c.is_empty() {
                    write!(f, "(-)")?;
                } else {
                    write!(f, "({})", join(&c.links))?;
                }
            }
            write!(f, "}}")?;
        }
        write!(f, ")")
    }
}

fn join(v: &[u32]) -> String {
    v.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

impl FromStr for NecSignature {
    type Err = SignatureError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_signature(s)
    }
}

/// Parses the whitespace-insensitive signature grammar.
pub fn parse_signature(text: &str) -> Result<NecSignature, SignatureError> {
    let mut p = Parser {
        chars: text
            .char_indices()
            .filter(|(_, c)| !c.is_whitespace())
            .collect(),
        pos: 0,
        len: text.len(),
    };
    p.expect('(')?;
    let genus = p.int()?;
    p.expect(';')?;
    let sign = match p.next() {
        Some((_, '+')) => Sign::Plus,
        Some((_, '-')) | Some((_, '−')) => Sign::Minus,
        _ => return Err(p.error("expected '+' or '-'")),
    };
    p.expect(';')?;
    p.expect('[')?;
    let periods = if p.eat_dash() {
        Vec::new()
    } else {
        p.int_list()?
    };
    p.expect(']')?;
    p.expect(';')?;
    p.expect('{')?;
    let mut cycles = Vec::new();
    if !p.eat_dash() {
        loop {
            p.expect('(')?;
            if p.eat_dash() {
                cycles.push(PeriodCycle::empty());
            } else {
                cycles.push(PeriodCycle::new(p.int_list()?));
            }
            p.expect(')')?;
            if !p.eat(',') {
                break;
            }
        }
    }
    p.expect('}')?;
    p.expect(')')?;
    if p.pos != p.chars.len() {
        return Err(p.error("trailing input"));
    }
    NecSignature::new(genus, sign, periods, cycles)
}

struct Parser {
    chars: Vec<(usize, char)>,
    pos: usize,
    len: usize,
}

impl Parser {
    fn offset(&self) -> usize {
        self.chars.get(self.pos).map(|c| c.0).unwrap_or(self.len)
    }

    fn error(&self, msg: &str) -> SignatureError {
        SignatureError::Syntax {
            pos: self.offset(),
            msg: msg.to_string(),
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|c| c.1)
    }

    fn next(&mut self) -> Option<(usize, char)> {
        let c = self.chars.get(self.pos).copied();
        self.pos += 1;
        c
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn eat_dash(&mut self) -> bool {
        self.eat('-') || self.eat('−')
    }

    fn expect(&mut self, c: char) -> Result<(), SignatureError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(&format!("expected '{c}'")))
        }
    }

    fn int(&mut self) -> Result<u32, SignatureError> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected integer"));
        }
        let s: String = self.chars[start..self.pos].iter().map(|c| c.1).collect();
        s.parse().map_err(|_| SignatureError::Syntax {
            pos: self.chars[start].0,
            msg: "integer out of range".into(),
        })
    }

    fn int_list(&mut self) -> Result<Vec<u32>, SignatureError> {
        let mut v = vec![self.int()?];
        while self.eat(',') {
            v.push(self.int()?);
        }
        Ok(v)
    }
}

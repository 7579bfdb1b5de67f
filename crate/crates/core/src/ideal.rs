//! Monomial ideals in k[x,y,z]: parsing, minimal generators, membership,
//! lcm lattice, and neighboring syzygies along staircase walls.
//!
//! Variable order is fixed as x < y < z (indices 0, 1, 2); every sign
//! convention downstream is pinned to it.

use std::fmt;

/// Names of the three variables, in order.
pub const VAR_NAMES: [char; 3] = ['x', 'y', 'z'];

/// Exponent vector in ℕ³.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DegreeVector(pub [u32; 3]);

impl DegreeVector {
    pub fn new(x: u32, y: u32, z: u32) -> Self {
        DegreeVector([x, y, z])
    }

    /// Componentwise partial order a ⪯ b.
    pub fn leq(&self, other: &DegreeVector) -> bool {
        (0..3).all(|k| self.0[k] <= other.0[k])
    }

    pub fn lt(&self, other: &DegreeVector) -> bool {
        self.leq(other) && self != other
    }

    /// Componentwise difference, or None when any coordinate would go negative.
    pub fn checked_sub(&self, other: &DegreeVector) -> Option<DegreeVector> {
        let mut out = [0u32; 3];
        for k in 0..3 {
            out[k] = self.0[k].checked_sub(other.0[k])?;
        }
        Some(DegreeVector(out))
    }

    /// Componentwise max (the lcm of the two monomials).
    pub fn join(&self, other: &DegreeVector) -> DegreeVector {
        DegreeVector([
            self.0[0].max(other.0[0]),
            self.0[1].max(other.0[1]),
            self.0[2].max(other.0[2]),
        ])
    }

    /// |·|₁, the total number of lattice steps down to the origin.
    pub fn degree_sum(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Indices of nonzero coordinates.
    pub fn support(&self) -> Vec<usize> {
        (0..3).filter(|&k| self.0[k] > 0).collect()
    }

    pub fn minus_unit(&self, dir: usize) -> Option<DegreeVector> {
        if self.0[dir] == 0 {
            return None;
        }
        let mut out = self.0;
        out[dir] -= 1;
        Some(DegreeVector(out))
    }

    /// Monomial string, e.g. (3,0,1) → "x^3*z", (0,0,0) → "1".
    pub fn monomial(&self) -> String {
        let mut parts = Vec::new();
        for k in 0..3 {
            match self.0[k] {
                0 => {}
                1 => parts.push(VAR_NAMES[k].to_string()),
                e => parts.push(format!("{}^{}", VAR_NAMES[k], e)),
            }
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }

    /// Compact digit form used on the command line when all exponents are < 10.
    pub fn compact(&self) -> String {
        if self.0.iter().all(|&e| e < 10) {
            format!("{}{}{}", self.0[0], self.0[1], self.0[2])
        } else {
            format!("{},{},{}", self.0[0], self.0[1], self.0[2])
        }
    }

    /// Parse "131" (all digits) or "1,3,1".
    pub fn parse(text: &str) -> Result<DegreeVector, ParseError> {
        let t = text.trim();
        if t.contains(',') {
            let parts: Vec<&str> = t.split(',').map(str::trim).collect();
            if parts.len() != 3 {
                return Err(ParseError::Syntax(format!(
                    "expected three components in {t:?}"
                )));
            }
            let mut out = [0u32; 3];
            for (k, p) in parts.iter().enumerate() {
                out[k] = p
                    .parse()
                    .map_err(|_| ParseError::Syntax(format!("bad exponent {p:?}")))?;
            }
            Ok(DegreeVector(out))
        } else {
            let digits: Vec<u32> = t
                .chars()
                .map(|c| c.to_digit(10))
                .collect::<Option<_>>()
                .ok_or_else(|| ParseError::Syntax(format!("bad degree vector {t:?}")))?;
            if digits.len() != 3 {
                return Err(ParseError::Syntax(format!(
                    "expected three digits in {t:?}"
                )));
            }
            Ok(DegreeVector([digits[0], digits[1], digits[2]]))
        }
    }
}

impl fmt::Debug for DegreeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.0[0], self.0[1], self.0[2])
    }
}

impl fmt::Display for DegreeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.compact())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseError {
    /// A token could not be read as a monomial or exponent triple.
    Syntax(String),
    /// No generators were found in the input.
    EmptyIdeal,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseError::Syntax(msg) => write!(f, "syntax error: {msg}"),
            ParseError::EmptyIdeal => write!(f, "no generators given"),
        }
    }
}

impl std::error::Error for ParseError {}

/// A monomial ideal, stored as its minimal generating set (an antichain,
/// sorted for determinism).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    gens: Vec<DegreeVector>,
}

impl MonomialIdeal {
    /// Build from arbitrary generators; non-minimal ones are dropped.
    pub fn new(gens: Vec<DegreeVector>) -> Result<MonomialIdeal, ParseError> {
        if gens.is_empty() {
            return Err(ParseError::EmptyIdeal);
        }
        Ok(MonomialIdeal {
            gens: minimalize(gens),
        })
    }

    /// Parse comma/newline-separated monomials ("x^3*z", "xyz", "y^2z") or
    /// exponent triples ("3 0 1").  Lines starting with '#' are comments.
    pub fn parse(text: &str) -> Result<MonomialIdeal, ParseError> {
        let mut gens = Vec::new();
        for line in text.lines() {
            let line = line.split('#').next().unwrap_or("");
            for token in line.split(',') {
                let token = token.trim();
                if token.is_empty() {
                    continue;
                }
                gens.push(parse_generator(token)?);
            }
        }
        MonomialIdeal::new(gens)
    }

    pub fn gens(&self) -> &[DegreeVector] {
        &self.gens
    }

    /// Membership: x^b ∈ I iff some generator divides x^b.
    pub fn contains(&self, b: &DegreeVector) -> bool {
        self.gens.iter().any(|g| g.leq(b))
    }

    /// Componentwise max of the generators; every resolution degree lies in
    /// the box below this vector.
    pub fn lcm_all(&self) -> DegreeVector {
        let mut out = DegreeVector([0, 0, 0]);
        for g in &self.gens {
            out = out.join(g);
        }
        out
    }

    /// Generators behind `b` in the plane of the two directions `dirs`,
    /// i.e. g ⪯ b with supp(b − g) ⊆ dirs.
    pub fn generators_behind(&self, b: &DegreeVector, dirs: (usize, usize)) -> Vec<DegreeVector> {
        self.gens
            .iter()
            .filter(|g| {
                g.leq(b)
                    && b.checked_sub(g)
                        .map(|d| d.support().iter().all(|&s| s == dirs.0 || s == dirs.1))
                        .unwrap_or(false)
            })
            .copied()
            .collect()
    }

    /// The neighboring syzygies of a generator `a` along the edge wall with
    /// directions `edge_dirs`: lcms with its predecessor and successor in the
    /// chain of generators behind `b`, ordered by the second direction.
    pub fn neighboring_syzygies(
        &self,
        b: &DegreeVector,
        a: &DegreeVector,
        edge_dirs: (usize, usize),
    ) -> Result<Vec<DegreeVector>, IdealError> {
        if !self.gens.contains(a) {
            return Err(IdealError::NotAGenerator(*a));
        }
        let mut chain = self.generators_behind(b, edge_dirs);
        chain.sort_by_key(|g| g.0[edge_dirs.1]);
        let Some(pos) = chain.iter().position(|g| g == a) else {
            return Err(IdealError::NotBehind(*a, *b));
        };
        let mut out = Vec::new();
        if pos > 0 {
            out.push(chain[pos - 1].join(a));
        }
        if pos + 1 < chain.len() {
            out.push(a.join(&chain[pos + 1]));
        }
        Ok(out)
    }

    /// Canonical generator list rendering, e.g. "x^3*z, x*y*z".
    pub fn render(&self) -> String {
        self.gens
            .iter()
            .map(|g| g.monomial())
            .collect::<Vec<_>>()
            .join(", ")
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}>", self.render())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IdealError {
    NotAGenerator(DegreeVector),
    NotBehind(DegreeVector, DegreeVector),
}

impl fmt::Display for IdealError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IdealError::NotAGenerator(a) => write!(f, "{a} is not a minimal generator"),
            IdealError::NotBehind(a, b) => {
                write!(f, "{a} does not lie behind {b} in the given directions")
            }
        }
    }
}

impl std::error::Error for IdealError {}

fn minimalize(mut gens: Vec<DegreeVector>) -> Vec<DegreeVector> {
    gens.sort();
    gens.dedup();
    let keep: Vec<DegreeVector> = gens
        .iter()
        .filter(|g| !gens.iter().any(|h| h != *g && h.leq(g)))
        .copied()
        .collect();
    keep
}

fn parse_generator(token: &str) -> Result<DegreeVector, ParseError> {
    // Exponent-triple form: three whitespace-separated numbers.
    let fields: Vec<&str> = token.split_whitespace().collect();
    if fields.len() == 3 && fields.iter().all(|f| f.chars().all(|c| c.is_ascii_digit())) {
        let mut out = [0u32; 3];
        for (k, f) in fields.iter().enumerate() {
            out[k] = f
                .parse()
                .map_err(|_| ParseError::Syntax(format!("bad exponent {f:?}")))?;
        }
        return Ok(DegreeVector(out));
    }
    // Monomial form: variables x,y,z with optional ^e, optional * separators.
    let mut exps = [0u32; 3];
    let mut chars = token.chars().peekable();
    let mut saw_var = false;
    while let Some(c) = chars.next() {
        match c {
            '*' | ' ' => {}
            '1' if !saw_var && chars.peek().is_none() => {
                // The monomial "1": the unit ideal.
                return Ok(DegreeVector([0, 0, 0]));
            }
            'x' | 'y' | 'z' => {
                saw_var = true;
                let idx = VAR_NAMES.iter().position(|&v| v == c).unwrap();
                let mut exp = 1u32;
                if chars.peek() == Some(&'^') {
                    chars.next();
                    let mut digits = String::new();
                    while chars.peek().is_some_and(|d| d.is_ascii_digit()) {
                        digits.push(chars.next().unwrap());
                    }
                    if digits.is_empty() {
                        return Err(ParseError::Syntax(format!("missing exponent in {token:?}")));
                    }
                    exp = digits
                        .parse()
                        .map_err(|_| ParseError::Syntax(format!("bad exponent in {token:?}")))?;
                } else if chars.peek().is_some_and(|d| d.is_ascii_digit()) {
                    // Allow "x3z" shorthand.
                    let mut digits = String::new();
                    while chars.peek().is_some_and(|d| d.is_ascii_digit()) {
                        digits.push(chars.next().unwrap());
                    }
                    exp = digits
                        .parse()
                        .map_err(|_| ParseError::Syntax(format!("bad exponent in {token:?}")))?;
                }
                exps[idx] += exp;
            }
            other => {
                return Err(ParseError::Syntax(format!(
                    "unexpected {other:?} in {token:?}"
                )));
            }
        }
    }
    if !saw_var {
        return Err(ParseError::Syntax(format!("no variables in {token:?}")));
    }
    Ok(DegreeVector(exps))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dv(x: u32, y: u32, z: u32) -> DegreeVector {
        DegreeVector::new(x, y, z)
    }

    #[test]
    fn parse_staircase_example() {
        let ideal = MonomialIdeal::parse("x^3z, xyz, y^2z, x^3y^2, x^2y^3").unwrap();
        let mut expect = [
            dv(3, 0, 1),
            dv(1, 1, 1),
            dv(0, 2, 1),
            dv(3, 2, 0),
            dv(2, 3, 0),
        ];
        expect.sort();
        assert_eq!(ideal.gens(), &expect[..]);
    }

    #[test]
    fn parse_drops_non_minimal() {
        let ideal = MonomialIdeal::parse("xy, xy^2").unwrap();
        assert_eq!(ideal.gens(), &[dv(1, 1, 0)]);
    }

    #[test]
    fn parse_four_generators() {
        let ideal = MonomialIdeal::parse("yz, xz, xy^2, x^2y").unwrap();
        assert_eq!(ideal.gens().len(), 4);
    }

    #[test]
    fn parse_triples_and_comments() {
        let ideal = MonomialIdeal::parse("# staircase\n3 0 1\n1 1 1\n").unwrap();
        assert_eq!(ideal.gens(), &[dv(1, 1, 1), dv(3, 0, 1)]);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            MonomialIdeal::parse(""),
            Err(ParseError::EmptyIdeal)
        ));
        assert!(matches!(
            MonomialIdeal::parse("w^2"),
            Err(ParseError::Syntax(_))
        ));
    }

    #[test]
    fn membership() {
        let ideal = MonomialIdeal::parse("xy, y^3, z").unwrap();
        assert!(ideal.contains(&dv(1, 3, 1)));
        assert!(!ideal.contains(&dv(1, 0, 0)));
        let ideal2 = MonomialIdeal::parse("yz, xz, xy^2, x^2y").unwrap();
        assert!(!ideal2.contains(&dv(1, 1, 0)));
    }

    #[test]
    fn membership_monotone() {
        let ideal = MonomialIdeal::parse("xy, y^3, z").unwrap();
        let b = dv(1, 1, 0);
        assert!(ideal.contains(&b));
        assert!(ideal.contains(&b.join(&dv(0, 0, 5))));
    }

    #[test]
    fn lcm_all_values() {
        assert_eq!(
            MonomialIdeal::parse("xy, y^3, z").unwrap().lcm_all(),
            dv(1, 3, 1)
        );
        assert_eq!(MonomialIdeal::parse("x^2y").unwrap().lcm_all(), dv(2, 1, 0));
        assert_eq!(
            MonomialIdeal::parse("yz, xz, xy^2, x^2y")
                .unwrap()
                .lcm_all(),
            dv(2, 2, 1)
        );
    }

    #[test]
    fn neighboring_syzygies_staircase() {
        let ideal = MonomialIdeal::parse("x^3z, xyz, y^2z, x^3y^2, x^2y^3").unwrap();
        let b = dv(3, 2, 1);
        let syz = ideal
            .neighboring_syzygies(&b, &dv(1, 1, 1), (0, 1))
            .unwrap();
        assert_eq!(syz, vec![dv(3, 1, 1), dv(1, 2, 1)]);
        let syz = ideal
            .neighboring_syzygies(&b, &dv(3, 0, 1), (0, 1))
            .unwrap();
        assert_eq!(syz, vec![dv(3, 1, 1)]);
    }

    #[test]
    fn neighboring_syzygies_single_generator_chain() {
        let ideal = MonomialIdeal::parse("xz").unwrap();
        let syz = ideal
            .neighboring_syzygies(&dv(2, 0, 1), &dv(1, 0, 1), (0, 1))
            .unwrap();
        assert!(syz.is_empty());
        assert!(ideal
            .neighboring_syzygies(&dv(2, 0, 1), &dv(9, 9, 9), (0, 1))
            .is_err());
    }

    #[test]
    fn render_round_trip() {
        let ideal = MonomialIdeal::parse("x^3z, xyz, y^2z").unwrap();
        let again = MonomialIdeal::parse(&ideal.render()).unwrap();
        assert_eq!(ideal, again);
    }
}

// Textual ring-spec grammar (whitespace-insensitive):
//
//   expr     := postfix { "x" postfix }
//   postfix  := atom { "[x]/(x^" int ")" }
//   atom     := "Z" int | "M" int "(" expr ")" | "T" int "(" expr ")"
//             | "Triv(" expr ")" | "Op(" expr ")" | "Center(" expr ")"
//             | "Corner(" expr "," int ")"
//             | "Ideal(" expr "," intlist ")" | "Quot(" expr "," intlist ")"
//             | "(" expr ")"
//   intlist  := [ int { "," int } ]
//
// Columns in errors are 1-based positions in the original input.

use std::fmt;
use std::str::FromStr;

use super::RingSpec;
use crate::error::Error;

struct Parser {
    chars: Vec<(char, usize)>,
    pos: usize,
    end_column: usize,
}

type PResult<T> = Result<T, Error>;

impl Parser {
    fn new(input: &str) -> Self {
        let chars: Vec<(char, usize)> =
            input.chars().enumerate().filter(|(_, c)| !c.is_whitespace()).map(|(i, c)| (c, i + 1)).collect();
        Parser { chars, pos: 0, end_column: input.chars().count() + 1 }
    }

    fn column(&self) -> usize {
        self.chars.get(self.pos).map_or(self.end_column, |&(_, col)| col)
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(c, _)| c)
    }

    fn error<T>(&self, message: impl Into<String>) -> PResult<T> {
        Err(Error::Parse { column: self.column(), message: message.into() })
    }

    fn unexpected<T>(&self, wanted: &str) -> PResult<T> {
        match self.peek() {
            Some(c) => self.error(format!("expected {wanted}, found '{c}'")),
            None => self.error(format!("expected {wanted}, found end of input")),
        }
    }

    fn expect(&mut self, lit: &str) -> PResult<()> {
        for want in lit.chars() {
            if self.peek() != Some(want) {
                return self.unexpected(&format!("'{want}'"));
            }
            self.pos += 1;
        }
        Ok(())
    }

    fn int(&mut self) -> PResult<u64> {
        let start = self.pos;
        let mut value: u64 = 0;
        while let Some(d) = self.peek().and_then(|c| c.to_digit(10)) {
            value = match value.checked_mul(10).and_then(|v| v.checked_add(d as u64)) {
                Some(v) => v,
                None => {
                    self.pos = start;
                    return self.error("integer too large");
                }
            };
            self.pos += 1;
        }
        if self.pos == start {
            return self.unexpected("an integer");
        }
        Ok(value)
    }

    fn small_int<T: TryFrom<u64>>(&mut self) -> PResult<T> {
        let col = self.column();
        let v = self.int()?;
        T::try_from(v).map_err(|_| Error::Parse { column: col, message: "integer too large".into() })
    }

    fn int_list(&mut self) -> PResult<Vec<u32>> {
        let mut out = Vec::new();
        if self.peek() == Some(')') {
            return Ok(out);
        }
        out.push(self.small_int()?);
        while self.peek() == Some(',') {
            self.pos += 1;
            out.push(self.small_int()?);
        }
        Ok(out)
    }

    fn expr(&mut self) -> PResult<RingSpec> {
        let mut parts = vec![self.postfix()?];
        while self.peek() == Some('x') {
            self.pos += 1;
            parts.push(self.postfix()?);
        }
        Ok(if parts.len() == 1 { parts.pop().unwrap() } else { RingSpec::Product(flatten(parts)) })
    }

    fn postfix(&mut self) -> PResult<RingSpec> {
        let mut spec = self.atom()?;
        while self.peek() == Some('[') {
            self.expect("[x]/(x^")?;
            let n = self.small_int()?;
            self.expect(")")?;
            spec = RingSpec::poly_mod(spec, n);
        }
        Ok(spec)
    }

    fn bracketed(&mut self, open: &str) -> PResult<RingSpec> {
        self.expect(open)?;
        let inner = self.expr()?;
        self.expect(")")?;
        Ok(inner)
    }

    fn atom(&mut self) -> PResult<RingSpec> {
        let rest: String = self.chars[self.pos..].iter().map(|&(c, _)| c).take(7).collect();
        match self.peek() {
            Some('Z') => {
                self.pos += 1;
                Ok(RingSpec::Zn(self.small_int()?))
            }
            Some('M') => {
                self.pos += 1;
                let k = self.small_int()?;
                Ok(RingSpec::matrix(k, self.bracketed("(")?))
            }
            Some('T') if rest.starts_with("Tr") => Ok(RingSpec::trivial_ext(self.bracketed("Triv(")?)),
            Some('T') => {
                self.pos += 1;
                let k = self.small_int()?;
                Ok(RingSpec::triangular(k, self.bracketed("(")?))
            }
            Some('O') => Ok(RingSpec::opposite(self.bracketed("Op(")?)),
            Some('C') if rest.starts_with("Ce") => Ok(RingSpec::center(self.bracketed("Center(")?)),
            Some('C') => {
                self.expect("Corner(")?;
                let base = self.expr()?;
                self.expect(",")?;
                let e = self.small_int()?;
                self.expect(")")?;
                Ok(RingSpec::corner(base, e))
            }
            Some('I') => {
                self.expect("Ideal(")?;
                let base = self.expr()?;
                self.expect(",")?;
                let gens = self.int_list()?;
                self.expect(")")?;
                Ok(RingSpec::ideal_ring(base, gens))
            }
            Some('Q') => {
                self.expect("Quot(")?;
                let base = self.expr()?;
                self.expect(",")?;
                let gens = self.int_list()?;
                self.expect(")")?;
                Ok(RingSpec::quotient(base, gens))
            }
            Some('(') => self.bracketed("("),
            _ => self.unexpected("a ring"),
        }
    }
}

fn flatten(parts: Vec<RingSpec>) -> Vec<RingSpec> {
    let mut out = Vec::new();
    for p in parts {
        match p {
            RingSpec::Product(inner) => out.extend(flatten(inner)),
            other => out.push(other),
        }
    }
    out
}

impl FromStr for RingSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut p = Parser::new(s);
        let spec = p.expr()?;
        if p.pos != p.chars.len() {
            return p.unexpected("end of input");
        }
        Ok(spec)
    }
}

fn write_list(f: &mut fmt::Formatter<'_>, items: &[u32]) -> fmt::Result {
    let joined: Vec<String> = items.iter().map(|g| g.to_string()).collect();
    f.write_str(&joined.join(","))
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingSpec::Zn(n) => write!(f, "Z{n}"),
            RingSpec::Product(parts) => {
                // Mixed-radix enumeration is associative, so nested products
                // print flat without changing any element index.
                let flat = flatten(parts.clone());
                for (i, p) in flat.iter().enumerate() {
                    if i > 0 {
                        f.write_str("x")?;
                    }
                    write!(f, "{p}")?;
                }
                Ok(())
            }
            RingSpec::Matrix { k, base } => write!(f, "M{k}({base})"),
            RingSpec::Triangular { k, base } => write!(f, "T{k}({base})"),
            RingSpec::PolyMod { base, n } => match base.as_ref() {
                RingSpec::Product(parts) if flatten(parts.clone()).len() > 1 => write!(f, "({base})[x]/(x^{n})"),
                _ => write!(f, "{base}[x]/(x^{n})"),
            },
            RingSpec::TrivialExt(base) => write!(f, "Triv({base})"),
            RingSpec::Opposite(base) => write!(f, "Op({base})"),
            RingSpec::Center(base) => write!(f, "Center({base})"),
            RingSpec::Corner { base, e } => write!(f, "Corner({base},{e})"),
            RingSpec::IdealRing { base, generators } => {
                write!(f, "Ideal({base},")?;
                write_list(f, generators)?;
                f.write_str(")")
            }
            RingSpec::Quotient { base, generators } => {
                write!(f, "Quot({base},")?;
                write_list(f, generators)?;
                f.write_str(")")
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: &str) -> RingSpec {
        s.parse().unwrap()
    }

    fn column(s: &str) -> usize {
        match s.parse::<RingSpec>() {
            Err(Error::Parse { column, .. }) => column,
            other => panic!("expected parse error for {s:?}, got {other:?}"),
        }
    }

    #[test]
    fn atoms() {
        assert_eq!(parse("Z6"), RingSpec::Zn(6));
        assert_eq!(parse("M2(Z2)"), RingSpec::matrix(2, RingSpec::Zn(2)));
        assert_eq!(parse("T2(Z4)"), RingSpec::triangular(2, RingSpec::Zn(4)));
        assert_eq!(parse("Triv(Z2)"), RingSpec::trivial_ext(RingSpec::Zn(2)));
        assert_eq!(parse("Op(T2(Z2))"), RingSpec::opposite(RingSpec::triangular(2, RingSpec::Zn(2))));
        assert_eq!(parse("Corner(M2(Z2),8)"), RingSpec::corner(RingSpec::matrix(2, RingSpec::Zn(2)), 8));
        assert_eq!(parse("Ideal(Z4,2)"), RingSpec::ideal_ring(RingSpec::Zn(4), vec![2]));
        assert_eq!(parse("Quot(Z12, 4, 6)"), RingSpec::quotient(RingSpec::Zn(12), vec![4, 6]));
        assert_eq!(parse("Quot(Z4,)"), RingSpec::quotient(RingSpec::Zn(4), vec![]));
        assert_eq!(parse("Center(M2(Z2))"), RingSpec::center(RingSpec::matrix(2, RingSpec::Zn(2))));
    }

    #[test]
    fn products_and_polynomials() {
        assert_eq!(parse("Z2xZ4"), RingSpec::product([RingSpec::Zn(2), RingSpec::Zn(4)]));
        assert_eq!(parse("Z2 x Z2 x Z3"), RingSpec::product([RingSpec::Zn(2), RingSpec::Zn(2), RingSpec::Zn(3)]));
        assert_eq!(parse("Z2[x]/(x^2)"), RingSpec::poly_mod(RingSpec::Zn(2), 2));
        assert_eq!(
            parse("Z2xZ4[x]/(x^2)"),
            RingSpec::product([RingSpec::Zn(2), RingSpec::poly_mod(RingSpec::Zn(4), 2)])
        );
        assert_eq!(
            parse("(Z2xZ4)[x]/(x^2)"),
            RingSpec::poly_mod(RingSpec::product([RingSpec::Zn(2), RingSpec::Zn(4)]), 2)
        );
        assert_eq!(parse("(Z2xZ3)xZ5"), parse("Z2xZ3xZ5"));
    }

    #[test]
    fn whitespace_is_ignored() {
        assert_eq!(parse(" M2 ( Z 4 ) "), parse("M2(Z4)"));
    }

    #[test]
    fn error_columns() {
        assert_eq!(column("Zq"), 2);
        assert_eq!(column(""), 1);
        assert_eq!(column("M2(Z2"), 6);
        assert_eq!(column("Z2y"), 3);
        assert_eq!(column("Corner(Z2)"), 10);
        assert_eq!(column("Z 99999999999"), 3);
    }

    #[test]
    fn canonical_printing() {
        for s in [
            "Z6",
            "Z2xZ4",
            "M2(Z4)",
            "T2(Z2)",
            "Triv(Z2)",
            "Z4[x]/(x^2)",
            "(Z2xZ2)[x]/(x^3)",
            "Ideal(Z4,2)",
            "Quot(T2(Z4),2,1)",
            "Corner(M2(Z2),8)",
            "Op(M2(Z2xZ3))",
            "Center(Op(Z2[x]/(x^2)[x]/(x^2)))",
            "Quot(Z4,)",
        ] {
            assert_eq!(parse(s).to_string(), s);
        }
    }
}

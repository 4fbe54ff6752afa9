//! The functor expression language.
//!
//! ```text
//! expr   := term { "+" term }
//! term   := factor { "*" factor }
//! factor := atom [ "o" atom ]
//! atom   := "Id" | "Const(" nat ")" | "Sym^" nat | "Wedge^" nat
//!         | "Tensor^" nat | "Gamma^" nat | "Schur[" nat { "," nat } "]"
//!         | "(" expr ")"
//! ```
//!
//! Whitespace between tokens is ignored.

use crate::error::{Error, Result};
use crate::polyfunctor::FunctorExpr;
use crate::symgroup::Partition;

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Word(String),
    Nat(usize),
    Punct(char),
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Word(w) => format!("\"{w}\""),
            Tok::Nat(n) => format!("\"{n}\""),
            Tok::Punct(c) => format!("\"{c}\""),
            Tok::End => "end of input".into(),
        }
    }
}

const ATOM_START: &[&str] = &[
    "Id", "Const", "Sym", "Wedge", "Tensor", "Gamma", "Schur", "(",
];

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        if c.is_ascii_whitespace() {
            i += 1;
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_alphabetic() {
                i += 1;
            }
            out.push((start, Tok::Word(text[start..i].to_string())));
        } else if c.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let n = text[start..i].parse().map_err(|_| Error::Syntax {
                offset: start,
                expected: vec!["natural number".into()],
                found: format!("\"{}\" (too large)", &text[start..i]),
            })?;
            out.push((start, Tok::Nat(n)));
        } else if b"()[]^,+*".contains(&c) {
            out.push((i, Tok::Punct(c as char)));
            i += 1;
        } else {
            let ch = text[i..].chars().next().unwrap();
            return Err(Error::Syntax {
                offset: i,
                expected: vec!["a token".into()],
                found: format!("\"{ch}\""),
            });
        }
    }
    out.push((text.len(), Tok::End));
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    depth: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].1
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].0
    }

    fn error(&self, expected: &[&str]) -> Error {
        Error::Syntax {
            offset: self.offset(),
            expected: expected.iter().map(|s| s.to_string()).collect(),
            found: self.peek().describe(),
        }
    }

    fn eat_punct(&mut self, c: char) -> bool {
        if *self.peek() == Tok::Punct(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect_punct(&mut self, c: char) -> Result<()> {
        if self.eat_punct(c) {
            Ok(())
        } else {
            Err(self.error(&[&c.to_string()]))
        }
    }

    fn nat(&mut self) -> Result<usize> {
        match *self.peek() {
            Tok::Nat(n) => {
                self.pos += 1;
                Ok(n)
            }
            _ => Err(self.error(&["natural number"])),
        }
    }

    /// Tokens that may follow a complete factor.
    fn follow(&self, after_compose: bool) -> Vec<&'static str> {
        let mut v = if after_compose { vec![] } else { vec!["o"] };
        v.extend(["*", "+"]);
        v.push(if self.depth > 0 { ")" } else { "end of input" });
        v
    }

    fn expr(&mut self) -> Result<FunctorExpr> {
        let mut terms = vec![self.term()?];
        while self.eat_punct('+') {
            terms.push(self.term()?);
        }
        Ok(if terms.len() == 1 {
            terms.pop().unwrap()
        } else {
            FunctorExpr::Sum(terms)
        })
    }

    fn term(&mut self) -> Result<FunctorExpr> {
        let mut factors = vec![self.factor()?];
        while self.eat_punct('*') {
            factors.push(self.factor()?);
        }
        Ok(if factors.len() == 1 {
            factors.pop().unwrap()
        } else {
            FunctorExpr::TensorProd(factors)
        })
    }

    fn factor(&mut self) -> Result<FunctorExpr> {
        let outer = self.atom()?;
        if *self.peek() == Tok::Word("o".into()) {
            self.pos += 1;
            let inner = self.atom()?;
            self.check_follow(true)?;
            return Ok(FunctorExpr::compose(outer, inner));
        }
        self.check_follow(false)?;
        Ok(outer)
    }

    fn check_follow(&self, after_compose: bool) -> Result<()> {
        let ok = match self.peek() {
            Tok::Punct('+') | Tok::Punct('*') => true,
            Tok::Punct(')') => self.depth > 0,
            Tok::End => self.depth == 0,
            _ => false,
        };
        if ok {
            Ok(())
        } else {
            Err(self.error(&self.follow(after_compose)))
        }
    }

    fn atom(&mut self) -> Result<FunctorExpr> {
        if self.eat_punct('(') {
            self.depth += 1;
            let e = self.expr()?;
            self.expect_punct(')')?;
            self.depth -= 1;
            return Ok(e);
        }
        let Tok::Word(w) = self.peek().clone() else {
            return Err(self.error(ATOM_START));
        };
        let power = |p: &mut Parser| -> Result<usize> {
            p.expect_punct('^')?;
            p.nat()
        };
        let start = self.offset();
        self.pos += 1;
        Ok(match w.as_str() {
            "Id" => FunctorExpr::Id,
            "Const" => {
                self.expect_punct('(')?;
                let n = self.nat()?;
                self.expect_punct(')')?;
                FunctorExpr::Const(n)
            }
            "Sym" => FunctorExpr::SymPow(power(self)?),
            "Wedge" => FunctorExpr::WedgePow(power(self)?),
            "Tensor" => FunctorExpr::TensorPow(power(self)?),
            "Gamma" => FunctorExpr::GammaPow(power(self)?),
            "Schur" => {
                self.expect_punct('[')?;
                let mut parts = vec![self.nat()?];
                while self.eat_punct(',') {
                    parts.push(self.nat()?);
                }
                self.expect_punct(']')?;
                let lambda = Partition::new(parts.clone()).map_err(|_| {
                    Error::InvalidPartition(format!(
                        "{parts:?} at byte {start} is not a weakly decreasing sequence of positive integers"
                    ))
                })?;
                if lambda.parts() != parts.as_slice() {
                    return Err(Error::InvalidPartition(format!(
                        "{parts:?} at byte {start} is not a weakly decreasing sequence of positive integers"
                    )));
                }
                FunctorExpr::schur(lambda)
            }
            _ => {
                self.pos -= 1;
                return Err(self.error(ATOM_START));
            }
        })
    }
}

pub fn parse_expr(text: &str) -> Result<FunctorExpr> {
    let mut p = Parser {
        toks: tokenize(text)?,
        pos: 0,
        depth: 0,
    };
    let e = p.expr()?;
    if *p.peek() != Tok::End {
        return Err(p.error(&p.follow(false)));
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn part(p: &[usize]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(
            parse_expr("Sym^2 + Wedge^3").unwrap(),
            FunctorExpr::Sum(vec![FunctorExpr::SymPow(2), FunctorExpr::WedgePow(3)])
        );
        assert_eq!(
            parse_expr("Sym^2 o Sym^2").unwrap(),
            FunctorExpr::compose(FunctorExpr::SymPow(2), FunctorExpr::SymPow(2))
        );
        assert_eq!(
            parse_expr("Schur[2,1]").unwrap(),
            FunctorExpr::schur(part(&[2, 1]))
        );
    }

    #[test]
    fn precedence_and_whitespace() {
        let e = parse_expr(" Id+Sym ^ 2*Gamma^3 o Wedge^2 ").unwrap();
        let expected = FunctorExpr::Sum(vec![
            FunctorExpr::Id,
            FunctorExpr::TensorProd(vec![
                FunctorExpr::SymPow(2),
                FunctorExpr::compose(FunctorExpr::GammaPow(3), FunctorExpr::WedgePow(2)),
            ]),
        ]);
        assert_eq!(e, expected);
        assert_eq!(
            parse_expr("(Id + Const(2)) * Tensor^0").unwrap(),
            FunctorExpr::TensorProd(vec![
                FunctorExpr::Sum(vec![FunctorExpr::Id, FunctorExpr::Const(2)]),
                FunctorExpr::TensorPow(0),
            ])
        );
    }

    fn syntax(text: &str) -> (usize, Vec<String>) {
        match parse_expr(text) {
            Err(Error::Syntax {
                offset, expected, ..
            }) => (offset, expected),
            other => panic!("{text}: expected a syntax error, got {other:?}"),
        }
    }

    #[test]
    fn syntax_errors_report_offset_and_expected() {
        let (offset, expected) = syntax("Sym^");
        assert_eq!(offset, 4);
        assert_eq!(expected, ["natural number"]);
        let (offset, expected) = syntax("Id + ");
        assert_eq!(offset, 5);
        assert!(expected.contains(&"Schur".to_string()) && expected.contains(&"(".to_string()));
        let (offset, expected) = syntax("Id o Id o Id");
        assert_eq!(offset, 8);
        assert_eq!(expected, ["*", "+", "end of input"]);
        let (offset, expected) = syntax("(Id Id)");
        assert_eq!(offset, 4);
        assert_eq!(expected, ["o", "*", "+", ")"]);
        assert_eq!(syntax("Foo").0, 0);
        assert_eq!(syntax("Id)").0, 2);
        assert_eq!(syntax("Id $").0, 3);
        assert_eq!(syntax("(Id").1, ["o", "*", "+", ")"]);
    }

    #[test]
    fn schur_needs_a_partition() {
        assert!(matches!(
            parse_expr("Schur[1,2]"),
            Err(Error::InvalidPartition(_))
        ));
        assert!(matches!(
            parse_expr("Schur[2,0]"),
            Err(Error::InvalidPartition(_))
        ));
        assert!(matches!(parse_expr("Schur[]"), Err(Error::Syntax { .. })));
    }

    fn arb_partition() -> impl Strategy<Value = Partition> {
        prop::collection::vec(1usize..4, 1..4).prop_map(|mut v| {
            v.sort_unstable_by(|a, b| b.cmp(a));
            Partition::new(v).unwrap()
        })
    }

    fn arb_expr() -> impl Strategy<Value = FunctorExpr> {
        let leaf = prop_oneof![
            Just(FunctorExpr::Id),
            (0usize..5).prop_map(FunctorExpr::Const),
            (0usize..5).prop_map(FunctorExpr::SymPow),
            (0usize..5).prop_map(FunctorExpr::WedgePow),
            (0usize..5).prop_map(FunctorExpr::TensorPow),
            (0usize..5).prop_map(FunctorExpr::GammaPow),
            arb_partition().prop_map(FunctorExpr::schur),
        ];
        leaf.prop_recursive(5, 48, 3, |inner| {
            prop_oneof![
                prop::collection::vec(inner.clone(), 2..4).prop_map(FunctorExpr::Sum),
                prop::collection::vec(inner.clone(), 2..4).prop_map(FunctorExpr::TensorProd),
                (inner.clone(), inner).prop_map(|(a, b)| FunctorExpr::compose(a, b)),
            ]
        })
    }

    proptest! {
        #[test]
        fn print_then_parse_is_identity(e in arb_expr()) {
            let text = e.to_string();
            prop_assert_eq!(parse_expr(&text).unwrap(), e, "{}", text);
        }
    }
}

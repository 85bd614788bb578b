//! Reader for the prefix notation `v(i)`, `u(E,E)`, `eta(i,j,E)`,
//! `rho(i,j,E)`. Whitespace is ignored and `#` starts a comment running to
//! the end of the line. Nesting depth is limited only by memory.

use super::expr::{KExprBuilder, KExpression, Label};
use crate::error::KExprError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Op {
    V,
    U,
    Eta,
    Rho,
}

impl Op {
    fn numbers(self) -> usize {
        match self {
            Op::V => 1,
            Op::U => 0,
            Op::Eta | Op::Rho => 2,
        }
    }

    fn children(self) -> usize {
        match self {
            Op::V => 0,
            Op::U => 2,
            Op::Eta | Op::Rho => 1,
        }
    }
}

struct Lexer<'a> {
    text: &'a [u8],
    pos: usize,
    line: usize,
    col: usize,
}

impl<'a> Lexer<'a> {
    fn skip_blank(&mut self) {
        while let Some(&c) = self.text.get(self.pos) {
            if c == b'#' {
                while self.text.get(self.pos).is_some_and(|&c| c != b'\n') {
                    self.bump();
                }
            } else if c.is_ascii_whitespace() {
                self.bump();
            } else {
                break;
            }
        }
    }

    fn bump(&mut self) {
        if self.text[self.pos] == b'\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        self.pos += 1;
    }

    /// Position of the next token.
    fn here(&mut self) -> (usize, usize) {
        self.skip_blank();
        (self.line, self.col)
    }

    fn error(&mut self, message: impl Into<String>) -> KExprError {
        let (line, col) = self.here();
        KExprError::Syntax {
            line,
            col,
            message: message.into(),
        }
    }

    fn expect(&mut self, c: u8) -> Result<(), KExprError> {
        self.skip_blank();
        if self.text.get(self.pos) == Some(&c) {
            self.bump();
            Ok(())
        } else {
            Err(self.error(format!("expected '{}'", c as char)))
        }
    }

    fn word(&mut self) -> Result<Op, KExprError> {
        self.skip_blank();
        let start = self.pos;
        while self
            .text
            .get(self.pos)
            .is_some_and(|c| c.is_ascii_alphabetic())
        {
            self.bump();
        }
        match &self.text[start..self.pos] {
            b"v" => Ok(Op::V),
            b"u" => Ok(Op::U),
            b"eta" => Ok(Op::Eta),
            b"rho" => Ok(Op::Rho),
            b"" => Err(self.error("expected v, u, eta or rho")),
            other => {
                let word = String::from_utf8_lossy(other).into_owned();
                Err(KExprError::Syntax {
                    line: self.line,
                    col: self.col - other.len(),
                    message: format!("unknown operation {word:?}"),
                })
            }
        }
    }

    fn label(&mut self) -> Result<Label, KExprError> {
        self.skip_blank();
        let start = self.pos;
        let (line, col) = (self.line, self.col);
        while self.text.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.bump();
        }
        let digits = std::str::from_utf8(&self.text[start..self.pos]).expect("ascii digits");
        match digits.parse::<Label>() {
            Ok(l) if l >= 1 => Ok(l),
            Ok(_) => Err(KExprError::Syntax {
                line,
                col,
                message: "labels start at 1".into(),
            }),
            Err(_) => Err(KExprError::Syntax {
                line,
                col,
                message: "expected a label".into(),
            }),
        }
    }
}

struct Frame {
    op: Op,
    numbers: Vec<Label>,
    children: Vec<usize>,
}

pub fn parse_kexpression(text: &str) -> Result<KExpression, KExprError> {
    let mut lx = Lexer {
        text: text.as_bytes(),
        pos: 0,
        line: 1,
        col: 1,
    };
    let mut b = KExprBuilder::new();
    let mut stack: Vec<Frame> = Vec::new();

    loop {
        // read the head of one operation
        let (line, col) = lx.here();
        let op = lx.word()?;
        lx.expect(b'(')?;
        let mut frame = Frame {
            op,
            numbers: Vec::with_capacity(2),
            children: Vec::with_capacity(2),
        };
        for i in 0..op.numbers() {
            if i > 0 {
                lx.expect(b',')?;
            }
            frame.numbers.push(lx.label()?);
        }
        if op == Op::Eta && frame.numbers[0] == frame.numbers[1] {
            return Err(KExprError::SameLabelEta {
                label: frame.numbers[0],
                line,
                col,
            });
        }
        if op.children() > 0 {
            if op.numbers() > 0 {
                lx.expect(b',')?;
            }
            stack.push(frame);
            continue;
        }

        // close finished operations and hand them to their parents
        let mut done = frame;
        loop {
            lx.expect(b')')?;
            let node = match done.op {
                Op::V => b.vertex(done.numbers[0]),
                Op::U => b.union(done.children[0], done.children[1]),
                Op::Eta => b.eta(done.numbers[0], done.numbers[1], done.children[0]),
                Op::Rho => b.rho(done.numbers[0], done.numbers[1], done.children[0]),
            };
            let Some(parent) = stack.last_mut() else {
                lx.skip_blank();
                if lx.pos < lx.text.len() {
                    return Err(lx.error("unexpected text after the expression"));
                }
                return Ok(b.finish(node));
            };
            parent.children.push(node);
            if parent.children.len() < parent.op.children() {
                lx.expect(b',')?;
                break;
            }
            done = stack.pop().expect("parent exists");
        }
    }
}

//! The string grammar for parenthesized lists: comma-separated entries
//! inside nested round parentheses, e.g. `(1,((2,3),(4,5)))`. The outermost
//! pair is the maximal interval; every pair must hold at least two entries.

use std::fmt;

use dissections::ParenthesizedList;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GrammarError {
    Unbalanced,
    ExpectedOpenParen,
    ExpectedNumberOrGroup(usize),
    TooFewEntries,
    TrailingInput,
    NotAPermutation,
    InvalidList(dissections::Error),
}

impl fmt::Display for GrammarError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GrammarError::Unbalanced => write!(f, "unbalanced parentheses"),
            GrammarError::ExpectedOpenParen => write!(f, "expected '(' at the start"),
            GrammarError::ExpectedNumberOrGroup(pos) => {
                write!(f, "expected a number or '(' at byte {pos}")
            }
            GrammarError::TooFewEntries => {
                write!(f, "parenthesis pair with fewer than two entries")
            }
            GrammarError::TrailingInput => write!(f, "unexpected input after the outer pair"),
            GrammarError::NotAPermutation => {
                write!(f, "entries are not a permutation of 1..=n")
            }
            GrammarError::InvalidList(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for GrammarError {}

enum Node {
    Leaf(usize),
    Group(Vec<Node>),
}

struct Scanner<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Scanner<'a> {
    fn new(input: &'a str) -> Scanner<'a> {
        Scanner {
            bytes: input.as_bytes(),
            pos: 0,
        }
    }

    fn skip_spaces(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_spaces();
        self.bytes.get(self.pos).copied()
    }

    fn bump(&mut self) {
        self.pos += 1;
    }

    fn number(&mut self) -> Result<usize, GrammarError> {
        let start = self.pos;
        while self
            .bytes
            .get(self.pos)
            .is_some_and(|b| b.is_ascii_digit())
        {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(GrammarError::ExpectedNumberOrGroup(start));
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .ok()
            .and_then(|s| s.parse().ok())
            .ok_or(GrammarError::ExpectedNumberOrGroup(start))
    }

    fn group(&mut self) -> Result<Node, GrammarError> {
        match self.peek() {
            Some(b'(') => self.bump(),
            _ => return Err(GrammarError::ExpectedOpenParen),
        }
        let mut entries = Vec::new();
        loop {
            let entry = match self.peek() {
                Some(b'(') => self.group()?,
                Some(b) if b.is_ascii_digit() => Node::Leaf(self.number()?),
                Some(_) => return Err(GrammarError::ExpectedNumberOrGroup(self.pos)),
                None => return Err(GrammarError::Unbalanced),
            };
            entries.push(entry);
            match self.peek() {
                Some(b',') => self.bump(),
                Some(b')') => {
                    self.bump();
                    break;
                }
                Some(_) => return Err(GrammarError::ExpectedNumberOrGroup(self.pos)),
                None => return Err(GrammarError::Unbalanced),
            }
        }
        if entries.len() < 2 {
            return Err(GrammarError::TooFewEntries);
        }
        Ok(Node::Group(entries))
    }
}

/// Parses a parenthesization string into a `ParenthesizedList`; the whole
/// string must be one outer pair over a permutation of `1..=n`.
pub fn parse(input: &str) -> Result<ParenthesizedList, GrammarError> {
    let mut scanner = Scanner::new(input);
    let root = scanner.group()?;
    if scanner.peek().is_some() {
        return Err(GrammarError::TrailingInput);
    }

    let mut perm = Vec::new();
    let mut intervals = Vec::new();
    fn walk(node: &Node, perm: &mut Vec<usize>, intervals: &mut Vec<(usize, usize)>) {
        match node {
            Node::Leaf(v) => perm.push(*v),
            Node::Group(entries) => {
                let start = perm.len() + 1;
                for e in entries {
                    walk(e, perm, intervals);
                }
                intervals.push((start, perm.len()));
            }
        }
    }
    walk(&root, &mut perm, &mut intervals);

    let n = perm.len();
    let mut seen = vec![false; n + 1];
    for &v in &perm {
        if v < 1 || v > n || seen[v] {
            return Err(GrammarError::NotAPermutation);
        }
        seen[v] = true;
    }
    let list = ParenthesizedList::new(n, perm, intervals);
    list.validate().map_err(GrammarError::InvalidList)?;
    Ok(list)
}

/// Prints a valid parenthesization back into the string grammar,
/// inverse to [`parse`].
pub fn print(p: &ParenthesizedList) -> Result<String, GrammarError> {
    p.validate().map_err(GrammarError::InvalidList)?;
    let n = p.n();
    let render = render_interval((1, n), p);
    Ok(render)
}

fn render_interval(interval: (usize, usize), p: &ParenthesizedList) -> String {
    // Direct children: maximal proper subintervals, merged with the
    // uncovered positions, left to right.
    let mut covered = vec![false; interval.1 - interval.0 + 1];
    let mut children: Vec<(usize, String)> = Vec::new();
    let mut nested: Vec<(usize, usize)> = p
        .intervals()
        .iter()
        .copied()
        .filter(|&iv| iv != interval && interval.0 <= iv.0 && iv.1 <= interval.1)
        .collect();
    nested.sort_by_key(|&(l, r)| (l, std::cmp::Reverse(r)));
    let mut maximal: Vec<(usize, usize)> = Vec::new();
    for iv in nested {
        if !maximal
            .iter()
            .any(|&(l, r)| l <= iv.0 && iv.1 <= r)
        {
            maximal.push(iv);
        }
    }
    for &(l, r) in &maximal {
        for pos in l..=r {
            covered[pos - interval.0] = true;
        }
        children.push((l, render_interval((l, r), p)));
    }
    for pos in interval.0..=interval.1 {
        if !covered[pos - interval.0] {
            children.push((pos, p.perm()[pos - 1].to_string()));
        }
    }
    children.sort_by_key(|&(pos, _)| pos);
    let inner: Vec<String> = children.into_iter().map(|(_, s)| s).collect();
    format!("({})", inner.join(","))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_figure_string() {
        let p = parse("(1,((2,3),(4,5)))").unwrap();
        assert_eq!(p.perm(), &[1, 2, 3, 4, 5]);
        assert_eq!(p.intervals(), &[(1, 5), (2, 3), (2, 5), (4, 5)]);
    }

    #[test]
    fn parses_permuted_list() {
        let p = parse("((2,3),1)").unwrap();
        assert_eq!(p.perm(), &[2, 3, 1]);
        assert_eq!(p.intervals(), &[(1, 2), (1, 3)]);
    }

    #[test]
    fn rejects_single_entry_pair() {
        assert_eq!(parse("(1,(2))"), Err(GrammarError::TooFewEntries));
        assert_eq!(parse("((1,2))"), Err(GrammarError::TooFewEntries));
    }

    #[test]
    fn rejects_malformed_strings() {
        assert_eq!(parse("(1,2"), Err(GrammarError::Unbalanced));
        assert_eq!(parse("1,2"), Err(GrammarError::ExpectedOpenParen));
        assert_eq!(parse("(1,2))"), Err(GrammarError::TrailingInput));
        assert_eq!(parse("(1,3)"), Err(GrammarError::NotAPermutation));
        assert_eq!(parse("(1,1)"), Err(GrammarError::NotAPermutation));
        assert!(matches!(parse("(1,,2)"), Err(GrammarError::ExpectedNumberOrGroup(_))));
    }

    #[test]
    fn accepts_whitespace() {
        let p = parse(" ( 1 , ( 3 , 2 ) ) ").unwrap();
        assert_eq!(p.perm(), &[1, 3, 2]);
    }

    #[test]
    fn print_is_inverse_of_parse() {
        for s in ["(1,((2,3),(4,5)))", "(1,2)", "((2,3),1)", "(3,(1,2),4)"] {
            let p = parse(s).unwrap();
            assert_eq!(print(&p).unwrap(), s);
        }
    }
}

use super::ParseError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Token {
    /// Lowercase-initial name or a number: predicate, constant or keyword.
    Name(String),
    /// Uppercase- or underscore-initial name.
    Variable(String),
    LParen,
    RParen,
    Comma,
    Dot,
    If,
    Tilde,
    Equals,
}

impl Token {
    pub fn describe(&self) -> String {
        match self {
            Token::Name(n) | Token::Variable(n) => format!("`{n}`"),
            Token::LParen => "`(`".into(),
            Token::RParen => "`)`".into(),
            Token::Comma => "`,`".into(),
            Token::Dot => "`.`".into(),
            Token::If => "`:-`".into(),
            Token::Tilde => "`~`".into(),
            Token::Equals => "`=`".into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Spanned {
    pub token: Token,
    pub line: usize,
    pub col: usize,
}

pub fn tokenize(text: &str) -> Result<Vec<Spanned>, ParseError> {
    let mut out = Vec::new();
    for (ln, line) in text.lines().enumerate() {
        let chars: Vec<char> = line.chars().collect();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            let col = i + 1;
            let at = |token| Spanned { token, line: ln + 1, col };
            match c {
                '%' => break,
                c if c.is_whitespace() => i += 1,
                '(' | ')' | ',' | '.' | '~' | '=' => {
                    out.push(at(match c {
                        '(' => Token::LParen,
                        ')' => Token::RParen,
                        ',' => Token::Comma,
                        '.' => Token::Dot,
                        '~' => Token::Tilde,
                        _ => Token::Equals,
                    }));
                    i += 1;
                }
                ':' if chars.get(i + 1) == Some(&'-') => {
                    out.push(at(Token::If));
                    i += 2;
                }
                c if c.is_ascii_alphanumeric() || c == '_' => {
                    let start = i;
                    while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                        i += 1;
                    }
                    let word: String = chars[start..i].iter().collect();
                    out.push(at(if c.is_ascii_uppercase() || c == '_' {
                        Token::Variable(word)
                    } else {
                        Token::Name(word)
                    }));
                }
                other => return Err(ParseError::new(ln + 1, col, format!("unexpected character `{other}`"))),
            }
        }
    }
    Ok(out)
}

//! Author-line normalization.

/// An author identity. `key` is the case-folded form used for identity;
/// `display` preserves the casing first seen.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AuthorName {
    pub key: String,
    pub display: String,
}

impl AuthorName {
    /// Normalizes a single name; `None` when nothing is left.
    pub fn parse(raw: &str) -> Option<Self> {
        let display = collapse_whitespace(&strip_parenthesized(raw));
        if display.is_empty() {
            return None;
        }
        Some(AuthorName { key: display.to_lowercase(), display })
    }
}

/// Splits a raw author line on commas and the word `and`, dropping
/// parenthesized affiliations and duplicate identities.
///
/// ```
/// use tvgraph::ingest::normalize_authors;
/// let names: Vec<_> = normalize_authors("A. Author (CERN), B. Other and C. Third")
///     .into_iter().map(|a| a.display).collect();
/// assert_eq!(names, ["A. Author", "B. Other", "C. Third"]);
/// ```
pub fn normalize_authors(raw: &str) -> Vec<AuthorName> {
    let stripped = strip_parenthesized(raw);
    let mut out: Vec<AuthorName> = Vec::new();
    for piece in stripped.split(',') {
        for name in split_on_and(piece) {
            if let Some(author) = AuthorName::parse(&name) {
                if !out.iter().any(|a| a.key == author.key) {
                    out.push(author);
                }
            }
        }
    }
    out
}

fn split_on_and(piece: &str) -> Vec<String> {
    let mut parts = vec![String::new()];
    for token in piece.split_whitespace() {
        if token.eq_ignore_ascii_case("and") {
            parts.push(String::new());
        } else {
            let current = parts.last_mut().expect("non-empty");
            if !current.is_empty() {
                current.push(' ');
            }
            current.push_str(token);
        }
    }
    parts
}

fn strip_parenthesized(s: &str) -> String {
    let mut depth = 0usize;
    let mut out = String::with_capacity(s.len());
    for c in s.chars() {
        match c {
            '(' => depth += 1,
            ')' if depth > 0 => depth -= 1,
            _ if depth == 0 => out.push(c),
            _ => {}
        }
    }
    out
}

fn collapse_whitespace(s: &str) -> String {
    s.split_whitespace().collect::<Vec<_>>().join(" ")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn displays(raw: &str) -> Vec<String> {
        normalize_authors(raw).into_iter().map(|a| a.display).collect()
    }

    #[test]
    fn splits_on_commas_and_and() {
        assert_eq!(displays("A. Author, B. Other and C. Third"), ["A. Author", "B. Other", "C. Third"]);
        assert_eq!(displays("A. Author, B. Other, and C. Third"), ["A. Author", "B. Other", "C. Third"]);
    }

    #[test]
    fn strips_affiliations() {
        assert_eq!(displays("A. Author (CERN)"), ["A. Author"]);
        assert_eq!(displays("A. Author (Dept. of Physics (Theory)), B. Other"), ["A. Author", "B. Other"]);
    }

    #[test]
    fn case_folded_identity_keeps_first_display() {
        let names = normalize_authors("J. Smith and  j. smith");
        assert_eq!(names.len(), 1);
        assert_eq!(names[0].display, "J. Smith");
        assert_eq!(names[0].key, "j. smith");
    }

    #[test]
    fn names_containing_and_substring_survive() {
        assert_eq!(displays("R. Anderson and S. Sand"), ["R. Anderson", "S. Sand"]);
    }

    #[test]
    fn empty_after_stripping() {
        assert!(normalize_authors("(CERN) , and ").is_empty());
        assert!(AuthorName::parse("   ").is_none());
    }
}

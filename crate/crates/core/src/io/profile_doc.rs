//! The profile text format.
//!
//! ```text
//! # comment
//! m=3 n=2
//! a b c
//! c b a
//! ```
//!
//! Alternatives are letters `a`.. (while `m <= 26`) or 0-based integers.
//! Comments run from `#` to the end of the line; blank lines are ignored.

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{ParseError, ProfileError};
use crate::profile::{Ballot, Profile};
use crate::set::{Alternative, MAX_ALTERNATIVES};

fn syntax(line: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax { line, message: message.into() }
}

fn parse_header(line: usize, text: &str) -> Result<(usize, usize), ParseError> {
    let (mut m, mut n) = (None, None);
    for field in text.split_whitespace() {
        let (key, value) = field.split_once('=').ok_or_else(|| syntax(line, format!("expected key=value, got `{field}`")))?;
        let value: usize = value.parse().map_err(|_| syntax(line, format!("`{value}` is not a count")))?;
        let slot = match key {
            "m" => &mut m,
            "n" => &mut n,
            other => return Err(syntax(line, format!("unknown header field `{other}`"))),
        };
        if slot.replace(value).is_some() {
            return Err(syntax(line, format!("header field `{key}` given twice")));
        }
    }
    match (m, n) {
        (Some(m), Some(n)) => Ok((m, n)),
        _ => Err(syntax(line, "header must be `m=<int> n=<int>`")),
    }
}

fn parse_alternative(line: usize, token: &str, m: usize) -> Result<usize, ParseError> {
    if let Ok(i) = token.parse::<usize>() {
        return Ok(i);
    }
    let mut chars = token.chars();
    match (chars.next(), chars.next()) {
        (Some(c @ 'a'..='z'), None) if m <= 26 => Ok(c as usize - 'a' as usize),
        _ => Err(syntax(line, format!("`{token}` is not an alternative"))),
    }
}

/// Parses a profile document.
pub fn parse_profile(text: &str) -> Result<Profile, ParseError> {
    let mut header = None;
    let mut ballots = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let Some((m, _)) = header else {
            let (m, n) = parse_header(line, content)?;
            if m == 0 || m > MAX_ALTERNATIVES {
                return Err(ParseError::Profile { line, source: ProfileError::BadAlternativeCount { m, max: MAX_ALTERNATIVES } });
            }
            header = Some((m, n));
            continue;
        };
        let ranking = content
            .split_whitespace()
            .map(|t| parse_alternative(line, t, m))
            .collect::<Result<Vec<_>, _>>()?;
        if ranking.len() != m {
            return Err(ParseError::Profile { line, source: ProfileError::BallotLength { len: ranking.len(), m } });
        }
        let ballot = Ballot::new(ranking).map_err(|source| ParseError::Profile { line, source })?;
        ballots.push(ballot);
    }
    let Some((_, n)) = header else {
        return Err(ParseError::EmptyProfile(ProfileError::Empty));
    };
    if ballots.len() != n {
        return Err(ParseError::VoterCountMismatch { declared: n, found: ballots.len() });
    }
    Profile::new(ballots).map_err(ParseError::EmptyProfile)
}

/// Renders a profile document; [`parse_profile`] inverts it exactly.
pub fn serialize_profile(profile: &Profile) -> String {
    let m = profile.m();
    let mut out = format!("m={} n={}\n", m, profile.n());
    for ballot in profile.ballots() {
        let names: Vec<String> = ballot.ranking().map(|x| Alternative::from(x).name(m)).collect();
        out.push_str(&names.join(" "));
        out.push('\n');
    }
    out
}

/// Profiles serialize as their text document.
impl Serialize for Profile {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&serialize_profile(self))
    }
}

impl<'de> Deserialize<'de> for Profile {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        parse_profile(&text).map_err(serde::de::Error::custom)
    }
}

/// Ballots serialize as their ranking, best first.
impl Serialize for Ballot {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.ranking())
    }
}

impl<'de> Deserialize<'de> for Ballot {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let ranking = Vec::<usize>::deserialize(d)?;
        Ballot::new(ranking).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::majority::MarginMatrix;

    #[test]
    fn trivial_profile() {
        let p = parse_profile("m=1 n=1\na\n").unwrap();
        assert_eq!((p.m(), p.n()), (1, 1));
    }

    #[test]
    fn comments_and_integers() {
        let p = parse_profile("# two voters\nm=3 n=2  # header\n0 1 2\n\nc b a # reversed\n").unwrap();
        assert_eq!(MarginMatrix::of(&p), MarginMatrix::zero(3));
        assert_eq!(serialize_profile(&p), "m=3 n=2\na b c\nc b a\n");
    }

    #[test]
    fn errors() {
        assert!(matches!(
            parse_profile("m=3 n=1\na a b"),
            Err(ParseError::Profile { line: 2, source: ProfileError::DuplicateAlternative(0) })
        ));
        assert!(matches!(
            parse_profile("m=3 n=1\na b"),
            Err(ParseError::Profile { source: ProfileError::BallotLength { len: 2, m: 3 }, .. })
        ));
        assert_eq!(parse_profile("m=2 n=2\na b\n"), Err(ParseError::VoterCountMismatch { declared: 2, found: 1 }));
        assert_eq!(parse_profile("m=2 n=0\n"), Err(ParseError::EmptyProfile(ProfileError::Empty)));
        assert_eq!(parse_profile("# nothing\n"), Err(ParseError::EmptyProfile(ProfileError::Empty)));
        assert!(matches!(parse_profile("m=2\na b"), Err(ParseError::Syntax { line: 1, .. })));
        assert!(matches!(parse_profile("m=2 n=1\na z"), Err(ParseError::Profile { .. })));
        assert!(matches!(parse_profile("m=2 n=1\na ?"), Err(ParseError::Syntax { line: 2, .. })));
    }

    #[test]
    fn many_alternatives_use_integers() {
        let p = Profile::new(vec![Ballot::lexicographic(30).reversed()]).unwrap();
        let text = serialize_profile(&p);
        assert!(text.starts_with("m=30 n=1\n29 28"));
        assert_eq!(parse_profile(&text).unwrap(), p);
    }

    #[test]
    fn serde_as_document() {
        let p = Profile::from_rankings(&[[1, 0]]).unwrap();
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(json, "\"m=2 n=1\\nb a\\n\"");
        assert_eq!(serde_json::from_str::<Profile>(&json).unwrap(), p);
    }
}

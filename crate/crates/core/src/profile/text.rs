//! Plain-text profile format.
//!
//! ```text
//! # comment lines start with '#'
//! m n
//! a_1 a_2 ... a_m      (voter 1, 1-based ids, most preferred first)
//! ...                  (n voter lines)
//! ```
//!
//! Several records may be concatenated; [`parse_profiles`] reads them all.

use std::collections::HashMap;
use std::fmt::Write as _;

use super::{PreferenceOrder, Profile};
use crate::error::{Error, Result};

/// Whether repeated voter orders are rejected.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ParseMode {
    #[default]
    Strict,
    Lenient,
}

/// Non-comment, non-blank lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let t = line.trim();
        (!t.is_empty() && !t.starts_with('#')).then_some((i + 1, t))
    })
}

fn parse_header(line_no: usize, line: &str) -> Result<(usize, usize)> {
    let fields: Vec<&str> = line.split_whitespace().collect();
    let [m, n] = fields[..] else {
        return Err(Error::parse(line_no, "header must be \"m n\""));
    };
    let m: usize = m
        .parse()
        .map_err(|_| Error::parse(line_no, format!("bad alternative count {m:?}")))?;
    let n: usize = n
        .parse()
        .map_err(|_| Error::parse(line_no, format!("bad voter count {n:?}")))?;
    if m == 0 || n == 0 {
        return Err(Error::parse(line_no, "m and n must both be at least 1"));
    }
    Ok((m, n))
}

fn parse_order(line_no: usize, line: &str, m: usize) -> Result<PreferenceOrder> {
    let ids = line
        .split_whitespace()
        .map(|tok| match tok.parse::<usize>() {
            Ok(id) if (1..=m).contains(&id) => Ok(id - 1),
            _ => Err(Error::parse(
                line_no,
                format!("{tok:?} is not an alternative id in 1..={m}"),
            )),
        })
        .collect::<Result<Vec<_>>>()?;
    if ids.len() != m {
        return Err(Error::parse(
            line_no,
            format!("expected {m} alternatives, found {}", ids.len()),
        ));
    }
    PreferenceOrder::new(ids)
        .map_err(|_| Error::parse(line_no, "ranking is not a permutation"))
}

fn parse_record<'a, I>(lines: &mut I, mode: ParseMode) -> Result<Option<Profile>>
where
    I: Iterator<Item = (usize, &'a str)>,
{
    let Some((header_line, header)) = lines.next() else {
        return Ok(None);
    };
    let (m, n) = parse_header(header_line, header)?;
    let mut orders = Vec::with_capacity(n);
    let mut first_seen: HashMap<PreferenceOrder, usize> = HashMap::new();
    for voter in 0..n {
        let (line_no, line) = lines.next().ok_or_else(|| {
            Error::parse(
                header_line,
                format!("expected {n} voter lines, found {voter}"),
            )
        })?;
        let order = parse_order(line_no, line, m)?;
        if mode == ParseMode::Strict {
            if let Some(prev) = first_seen.insert(order.clone(), line_no) {
                return Err(Error::parse(
                    line_no,
                    format!("duplicate preference order (first seen on line {prev})"),
                ));
            }
        }
        orders.push(order);
    }
    Profile::new_lenient(m, orders)
        .map(Some)
        .map_err(|e| Error::parse(header_line, e.to_string()))
}

/// Parses exactly one profile record.
pub fn parse_profile(text: &str, mode: ParseMode) -> Result<Profile> {
    let mut lines = content_lines(text);
    let profile =
        parse_record(&mut lines, mode)?.ok_or_else(|| Error::parse(1, "empty profile text"))?;
    if let Some((line_no, _)) = lines.next() {
        return Err(Error::parse(line_no, "unexpected content after profile"));
    }
    Ok(profile)
}

/// Parses any number of concatenated profile records.
pub fn parse_profiles(text: &str, mode: ParseMode) -> Result<Vec<Profile>> {
    let mut lines = content_lines(text);
    let mut out = Vec::new();
    while let Some(p) = parse_record(&mut lines, mode)? {
        out.push(p);
    }
    Ok(out)
}

/// Canonical text form: `"m n\n"` followed by one space-separated 1-based line per voter.
pub fn serialize_profile(p: &Profile) -> String {
    let mut s = String::new();
    write_profile(&mut s, p);
    s
}

fn write_profile(s: &mut String, p: &Profile) {
    let _ = writeln!(s, "{} {}", p.num_alternatives(), p.num_voters());
    for order in p.orders() {
        for (i, a) in order.ranking().iter().enumerate() {
            if i > 0 {
                s.push(' ');
            }
            let _ = write!(s, "{}", a + 1);
        }
        s.push('\n');
    }
}

/// Concatenates records, each preceded by a `# <label>` comment line.
pub fn serialize_profiles<'a, I>(records: I) -> String
where
    I: IntoIterator<Item = (String, &'a Profile)>,
{
    let mut s = String::new();
    for (label, p) in records {
        let _ = writeln!(s, "# {label}");
        write_profile(&mut s, p);
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parses_one_based_text() {
        let p = parse_profile("3 2\n1 2 3\n3 2 1\n", ParseMode::Strict).unwrap();
        assert_eq!(
            p,
            Profile::from_rankings(3, [vec![0, 1, 2], vec![2, 1, 0]]).unwrap()
        );
    }

    #[test]
    fn rejects_non_permutation() {
        let err = parse_profile("3 1\n1 1 2\n", ParseMode::Strict).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }), "{err}");
    }

    #[test]
    fn strict_mode_rejects_duplicate_voter() {
        let err = parse_profile("2 2\n1 2\n1 2\n", ParseMode::Strict).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }), "{err}");
        let p = parse_profile("2 2\n1 2\n1 2\n", ParseMode::Lenient).unwrap();
        assert!(p.has_duplicates());
    }

    #[test]
    fn malformed_headers() {
        for text in ["", "3\n1 2 3\n", "a 1\n1\n", "0 1\n\n", "2 2\n1 2\n"] {
            assert!(parse_profile(text, ParseMode::Strict).is_err(), "{text:?}");
        }
    }

    #[test]
    fn comments_and_trailing_content() {
        let p = parse_profile("# hi\n2 1\n# voter 1\n2 1\n", ParseMode::Strict).unwrap();
        assert_eq!(p.orders()[0].ranking(), &[1, 0]);
        let err = parse_profile("2 1\n2 1\n1 2\n", ParseMode::Strict).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }));
    }

    #[test]
    fn serializes_canonically() {
        let p = Profile::from_rankings(2, [vec![0, 1]]).unwrap();
        assert_eq!(serialize_profile(&p), "2 1\n1 2\n");
    }

    #[test]
    fn multi_record_round_trip() {
        let a = Profile::from_rankings(2, [vec![0, 1]]).unwrap();
        let b = Profile::from_rankings(3, [vec![0, 1, 2], vec![1, 2, 0]]).unwrap();
        let text = serialize_profiles([("0".to_string(), &a), ("1".to_string(), &b)]);
        assert!(text.starts_with("# 0\n2 1\n"));
        assert_eq!(parse_profiles(&text, ParseMode::Strict).unwrap(), vec![a, b]);
    }

    fn arb_profile() -> impl Strategy<Value = Profile> {
        (1usize..7, 1usize..5).prop_flat_map(|(m, n)| {
            let order = Just((0..m).collect::<Vec<_>>()).prop_shuffle();
            proptest::collection::vec(order, n)
                .prop_map(move |rs| Profile::from_rankings(m, rs).unwrap())
        })
    }

    proptest! {
        #[test]
        fn parse_serialize_round_trip(p in arb_profile()) {
            let text = serialize_profile(&p);
            let back = parse_profile(&text, ParseMode::Lenient).unwrap();
            prop_assert_eq!(serialize_profile(&back), text);
            prop_assert_eq!(back, p);
        }
    }
}

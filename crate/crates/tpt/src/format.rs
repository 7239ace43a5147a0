//! Text formats: the `TPT1` dense tensor file, the `SYM2` one-liner and
//! trace export.
//!
//! ```text
//! TPT1
//! order 3
//! dim 2
//! entries
//! 0.5
//! ...            (n^m values, (i1, ..., im) with im fastest)
//! end
//! ```
//!
//! `SYM2 m=4 a=0.25` names a member of the symmetric two-state family.
//! Lines starting with `#` and blank lines are skipped in both forms.

use std::fmt::Write as _;

use tpt_core::simulator::ChainTrace;
use tpt_core::{SymmetricFamily2, TransitionModel, TransitionTensor};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum FormatError {
    #[error("line {line}: expected {expected}, found `{found}`")]
    Unexpected {
        line: usize,
        expected: &'static str,
        found: String,
    },
    #[error("line {line}: `{token}` is not a decimal number")]
    BadNumber { line: usize, token: String },
    #[error("line {line}: `{token}` is not a nonnegative integer")]
    BadInteger { line: usize, token: String },
    #[error("unexpected end of input, expected {expected}")]
    Truncated { expected: &'static str },
    #[error("line {line}: `{token}` is out of range: {reason}")]
    OutOfRange {
        line: usize,
        token: String,
        reason: String,
    },
}

/// What a tensor file describes.
#[derive(Debug, Clone, PartialEq)]
pub enum Input {
    Tensor(TransitionTensor),
    Family(SymmetricFamily2),
}

/// Non-comment lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

/// Accepts `[+-]digits[.digits][(e|E)[+-]digits]` and `[+-].digits[...]`;
/// rejects `inf`, `nan`, hexadecimal and anything locale-shaped.
pub fn parse_decimal(token: &str, line: usize) -> Result<f64, FormatError> {
    let bad = || FormatError::BadNumber {
        line,
        token: token.to_string(),
    };
    let bytes = token.as_bytes();
    let mut i = 0;
    if matches!(bytes.first(), Some(b'+' | b'-')) {
        i += 1;
    }
    let int_start = i;
    while i < bytes.len() && bytes[i].is_ascii_digit() {
        i += 1;
    }
    let mut digits = i - int_start;
    if i < bytes.len() && bytes[i] == b'.' {
        i += 1;
        let frac_start = i;
        while i < bytes.len() && bytes[i].is_ascii_digit() {
            i += 1;
        }
        digits += i - frac_start;
    }
    if digits == 0 {
        return Err(bad());
    }
    if i < bytes.len() && matches!(bytes[i], b'e' | b'E') {
        i += 1;
        if matches!(bytes.get(i), Some(b'+' | b'-')) {
            i += 1;
        }
        let exp_start = i;
        while i < bytes.len() && bytes[i].is_ascii_digit() {
            i += 1;
        }
        if i == exp_start {
            return Err(bad());
        }
    }
    if i != bytes.len() {
        return Err(bad());
    }
    let value: f64 = token.parse().map_err(|_| bad())?;
    if value.is_finite() {
        Ok(value)
    } else {
        Err(bad())
    }
}

fn parse_usize(token: &str, line: usize) -> Result<usize, FormatError> {
    if token.is_empty() || !token.bytes().all(|b| b.is_ascii_digit()) {
        return Err(FormatError::BadInteger {
            line,
            token: token.to_string(),
        });
    }
    token.parse().map_err(|_| FormatError::OutOfRange {
        line,
        token: token.to_string(),
        reason: "too large".to_string(),
    })
}

fn keyword_value<'a>(
    lines: &mut impl Iterator<Item = (usize, &'a str)>,
    keyword: &'static str,
    expected: &'static str,
) -> Result<(usize, usize), FormatError> {
    let (line, text) = lines.next().ok_or(FormatError::Truncated { expected })?;
    let mut parts = text.split_whitespace();
    match (parts.next(), parts.next(), parts.next()) {
        (Some(k), Some(v), None) if k == keyword => Ok((line, parse_usize(v, line)?)),
        _ => Err(FormatError::Unexpected {
            line,
            expected,
            found: text.to_string(),
        }),
    }
}

fn expect_line<'a>(
    lines: &mut impl Iterator<Item = (usize, &'a str)>,
    word: &'static str,
    expected: &'static str,
) -> Result<usize, FormatError> {
    let (line, text) = lines.next().ok_or(FormatError::Truncated { expected })?;
    if text == word {
        Ok(line)
    } else {
        Err(FormatError::Unexpected {
            line,
            expected,
            found: text.to_string(),
        })
    }
}

/// Parses a `TPT1` file. Only the structure is checked here; stochasticity
/// is left to [`TransitionTensor::validate`].
pub fn parse_tpt1(text: &str) -> Result<TransitionTensor, FormatError> {
    let mut lines = content_lines(text);
    expect_line(&mut lines, "TPT1", "`TPT1`")?;
    let (order_line, order) = keyword_value(&mut lines, "order", "`order <m>`")?;
    let (dim_line, dim) = keyword_value(&mut lines, "dim", "`dim <n>`")?;
    let entries_line = expect_line(&mut lines, "entries", "`entries`")?;

    let count = checked_count(order, dim).ok_or_else(|| FormatError::OutOfRange {
        line: dim_line,
        token: dim.to_string(),
        reason: format!("dim^order overflows for order {order}"),
    })?;
    if order < 3 {
        return Err(FormatError::OutOfRange {
            line: order_line,
            token: order.to_string(),
            reason: "order must be at least 3".to_string(),
        });
    }
    if dim < 2 {
        return Err(FormatError::OutOfRange {
            line: dim_line,
            token: dim.to_string(),
            reason: "dim must be at least 2".to_string(),
        });
    }

    let mut entries = Vec::with_capacity(count.min(1 << 20));
    loop {
        let (line, token) = lines.next().ok_or(FormatError::Truncated {
            expected: if entries.len() < count {
                "an entry"
            } else {
                "`end`"
            },
        })?;
        if token == "end" {
            if entries.len() < count {
                return Err(FormatError::Unexpected {
                    line,
                    expected: "more entries",
                    found: format!("end after {} of {count} entries", entries.len()),
                });
            }
            break;
        }
        if entries.len() == count {
            return Err(FormatError::Unexpected {
                line,
                expected: "`end`",
                found: token.to_string(),
            });
        }
        entries.push(parse_decimal(token, line)?);
    }
    if let Some((line, text)) = lines.next() {
        return Err(FormatError::Unexpected {
            line,
            expected: "nothing after `end`",
            found: text.to_string(),
        });
    }
    TransitionTensor::new(order, dim, entries).map_err(|e| FormatError::OutOfRange {
        line: entries_line,
        token: "entries".to_string(),
        reason: e.to_string(),
    })
}

fn checked_count(order: usize, dim: usize) -> Option<usize> {
    (0..order).try_fold(1usize, |acc, _| acc.checked_mul(dim))
}

/// Parses `SYM2 m=<int> a=<decimal>` (one line, fields in that order).
pub fn parse_sym2_line(text: &str, line: usize) -> Result<SymmetricFamily2, FormatError> {
    let unexpected = |expected, found: &str| FormatError::Unexpected {
        line,
        expected,
        found: found.to_string(),
    };
    let mut parts = text.split_whitespace();
    match parts.next() {
        Some("SYM2") => {}
        other => return Err(unexpected("`SYM2`", other.unwrap_or(""))),
    }
    let m_token = parts.next().ok_or(FormatError::Truncated {
        expected: "`m=<int>`",
    })?;
    let m_value = m_token
        .strip_prefix("m=")
        .ok_or_else(|| unexpected("`m=<int>`", m_token))?;
    let order = parse_usize(m_value, line)?;
    let a_token = parts.next().ok_or(FormatError::Truncated {
        expected: "`a=<decimal>`",
    })?;
    let a_value = a_token
        .strip_prefix("a=")
        .ok_or_else(|| unexpected("`a=<decimal>`", a_token))?;
    let a = parse_decimal(a_value, line)?;
    if let Some(extra) = parts.next() {
        return Err(unexpected("end of line", extra));
    }
    SymmetricFamily2::new(order, a).map_err(|e| FormatError::OutOfRange {
        line,
        token: if matches!(e, tpt_core::Error::ParameterOutOfRange(_)) {
            a_token.to_string()
        } else {
            m_token.to_string()
        },
        reason: e.to_string(),
    })
}

/// Parses either form, dispatching on the first non-comment line.
pub fn parse_input(text: &str) -> Result<Input, FormatError> {
    let mut lines = content_lines(text);
    let (line, first) = lines.next().ok_or(FormatError::Truncated {
        expected: "`TPT1` or `SYM2`",
    })?;
    if first.split_whitespace().next() == Some("SYM2") {
        let family = parse_sym2_line(first, line)?;
        if let Some((line, text)) = lines.next() {
            return Err(FormatError::Unexpected {
                line,
                expected: "nothing after the SYM2 line",
                found: text.to_string(),
            });
        }
        Ok(Input::Family(family))
    } else {
        parse_tpt1(text).map(Input::Tensor)
    }
}

/// Writes a `TPT1` file. Values use the shortest decimal that parses back
/// to the same `f64`, so [`parse_tpt1`] reproduces the entries bit-exactly.
pub fn format_tpt1(tensor: &TransitionTensor) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "TPT1");
    let _ = writeln!(out, "order {}", tensor.order());
    let _ = writeln!(out, "dim {}", tensor.dim());
    let _ = writeln!(out, "entries");
    for v in tensor.entries() {
        let _ = writeln!(out, "{v:?}");
    }
    let _ = writeln!(out, "end");
    out
}

pub fn format_sym2(family: &SymmetricFamily2) -> String {
    format!("SYM2 m={} a={:?}\n", family.order(), family.a())
}

/// Trace export: the header line, the initial window as a comment, then
/// one generated state per line, 1-based.
pub fn format_trace(trace: &ChainTrace, family: &SymmetricFamily2) -> String {
    let mut out = String::with_capacity(trace.steps * 2 + 64);
    let _ = writeln!(
        out,
        "# seed={} m={} a={:?}",
        trace.seed,
        family.order(),
        family.a()
    );
    let window: Vec<String> = trace
        .initial_window
        .iter()
        .map(|s| (s + 1).to_string())
        .collect();
    let _ = writeln!(out, "# window={}", window.join(","));
    for s in trace.generated() {
        let _ = writeln!(out, "{}", s + 1);
    }
    out
}

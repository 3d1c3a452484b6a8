//! Text pyramids of the basis: rows by `nu`, columns by `i0` descending.

use std::fmt;
use std::str::FromStr;

use crate::fock::{triple_from_pair, Convention, FockState, Parity};
use crate::qnum::Half;
use crate::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LabelStyle {
    /// `|nu1,nu_-1>`.
    Pair,
    /// `|n1,n0,n_-1>` with minimal `n0`.
    TripleMin,
    /// `|n1,n0,n_-1>` with maximal `n0`.
    TripleMax,
}

impl LabelStyle {
    pub const ALL: [LabelStyle; 3] = [LabelStyle::Pair, LabelStyle::TripleMin, LabelStyle::TripleMax];

    pub fn as_str(self) -> &'static str {
        match self {
            LabelStyle::Pair => "pair",
            LabelStyle::TripleMin => "triple-min",
            LabelStyle::TripleMax => "triple-max",
        }
    }
}

impl fmt::Display for LabelStyle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for LabelStyle {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        LabelStyle::ALL
            .into_iter()
            .find(|l| l.as_str() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown label style '{s}' (pair, triple-min, triple-max)")))
    }
}

pub fn label(s: FockState, style: LabelStyle) -> Result<String, Error> {
    Ok(match style {
        LabelStyle::Pair if s == FockState::new(0, 0) => "|0>".to_string(),
        LabelStyle::Pair => s.to_string(),
        LabelStyle::TripleMin => triple_from_pair(s, Convention::MinN0)?.to_string(),
        LabelStyle::TripleMax => triple_from_pair(s, Convention::MaxN0)?.to_string(),
    })
}

/// `rows` consecutive rows of one parity sector, starting at `nu = 0` or 1.
///
/// Triple labels exist on `H+` only.
pub fn pyramid(style: LabelStyle, sector: Parity, rows: u32) -> Result<String, Error> {
    if rows == 0 {
        return Err(Error::InvalidArgument("need at least one row".into()));
    }
    if style != LabelStyle::Pair && sector == Parity::Odd {
        return Err(Error::OddParity(FockState::new(1, 0)));
    }
    let first = if sector == Parity::Even { 0 } else { 1 };
    let nus: Vec<u32> = (0..rows).map(|r| first + 2 * r).collect();
    let top = *nus.last().expect("rows > 0") as i32;
    // i0 = (nu1 - nu_-1)/2 in halves, from top/2 down to -top/2.
    let cols: Vec<i32> = (0..=top).map(|k| top - 2 * k).collect();

    let mut grid: Vec<Vec<String>> = Vec::new();
    for &nu in &nus {
        let mut line = Vec::new();
        for &c in &cols {
            // nu1 - nu_-1 = c, nu1 + nu_-1 = nu
            let twice = nu as i32 + c;
            line.push(if c.abs() <= nu as i32 && twice % 2 == 0 {
                let nu1 = (twice / 2) as u32;
                label(FockState::new(nu1, nu - nu1), style)?
            } else {
                String::new()
            });
        }
        grid.push(line);
    }
    let heads: Vec<String> = cols.iter().map(|&c| Half(c).to_string()).collect();
    let w = grid.iter().flatten().chain(&heads).map(|s| s.len()).max().unwrap_or(1) + 2;
    let key = "nu/i0";
    let kw = key.len() + 1;

    let mut out = String::new();
    let rule = format!("{}+{}\n", "-".repeat(kw), vec!["-".repeat(w); cols.len()].join("+"));
    out.push_str(&format!("{key:<kw$}|{}\n", heads.iter().map(|h| format!("{h:^w$}")).collect::<Vec<_>>().join("|")));
    out.push_str(&rule);
    for (nu, line) in nus.iter().zip(&grid) {
        let cells: Vec<String> = line.iter().map(|s| format!("{s:^w$}")).collect();
        out.push_str(&format!("{:<kw$}|{}\n", nu, cells.join("|")));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labels() {
        assert_eq!(label(FockState::new(0, 0), LabelStyle::Pair).unwrap(), "|0>");
        assert_eq!(label(FockState::new(3, 1), LabelStyle::TripleMin).unwrap(), "|1,1,0>");
        assert_eq!(label(FockState::new(2, 2), LabelStyle::TripleMax).unwrap(), "|0,2,0>");
        assert_eq!(label(FockState::new(2, 2), LabelStyle::TripleMin).unwrap(), "|1,0,1>");
    }

    #[test]
    fn odd_triples_rejected() {
        assert!(pyramid(LabelStyle::TripleMin, Parity::Odd, 3).is_err());
        assert!(pyramid(LabelStyle::Pair, Parity::Odd, 3).is_ok());
    }

    #[test]
    fn layout() {
        let p = pyramid(LabelStyle::Pair, Parity::Even, 2).unwrap();
        let lines: Vec<&str> = p.lines().collect();
        assert_eq!(lines.len(), 4);
        assert!(lines[0].starts_with("nu/i0 |"));
        assert!(lines[3].contains("|2,0>") && lines[3].contains("|0,2>"));
        assert!(lines.iter().all(|l| l.len() == lines[0].len()));
    }
}

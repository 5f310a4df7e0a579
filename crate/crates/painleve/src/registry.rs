use painleve_core::{rf, RatFunc};

use crate::error::{Error, Result};

/// Provenance of a row obtained by middle convolution of another row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConvolutionLink {
    pub source_row: u8,
    pub mu_c: RatFunc,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Table1Row {
    pub id: u8,
    pub theta: [RatFunc; 4],
    pub lambda: RatFunc,
    pub mu: RatFunc,
    pub t: RatFunc,
    /// The momentum as printed, kept when it differs from `mu`.
    pub printed_mu: Option<RatFunc>,
    /// Curve family whose Picard-Fuchs system yields the row; the
    /// substitution for `b` is the family's rationalizing reparametrization.
    pub family: Option<u8>,
    pub convolution: Option<ConvolutionLink>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Table1Entry {
    /// Row 1: the locus `{lambda = t = 0} u {lambda = t = 1}`, a pole locus of
    /// the Hamiltonian, linked to the hypergeometric family.
    Degenerate { theta: [RatFunc; 4], locus: &'static str },
    Solution(Table1Row),
}

impl Table1Entry {
    pub fn solution(self) -> Option<Table1Row> {
        match self {
            Table1Entry::Solution(row) => Some(row),
            Table1Entry::Degenerate { .. } => None,
        }
    }
}

impl Table1Row {
    /// The momentum exactly as printed in the table.
    pub fn printed_momentum(&self) -> &RatFunc {
        self.printed_mu.as_ref().unwrap_or(&self.mu)
    }
}

fn row(id: u8, theta: [&str; 4], lambda: &str, mu: &str, t: &str) -> Table1Row {
    Table1Row {
        id,
        theta: theta.map(rf),
        lambda: rf(lambda),
        mu: rf(mu),
        t: rf(t),
        printed_mu: None,
        family: None,
        convolution: None,
    }
}

pub fn table1(id: u8) -> Result<Table1Entry> {
    let entry = match id {
        1 => Table1Entry::Degenerate {
            theta: ["0", "1-c", "c-a-b", "b-a"].map(rf),
            locus: "lambda = t = 0 or lambda = t = 1",
        },
        2 => Table1Row {
            convolution: Some(ConvolutionLink { source_row: 3, mu_c: rf("-c") }),
            ..row(2, ["1/2", "a-1", "1/2", "-(a+2*c-3)"], "(-a+1)/(a+2*c-3)*b", "(-a-2*c+3)/(2*b)", "b^2")
        }
        .into(),
        3 => Table1Row {
            family: Some(2),
            ..row(3, ["c-1/2", "a+c-1", "c-1/2", "a+c-1"], "-b", "(-a-2*c+2)/(2*b)", "b^2")
        }
        .into(),
        4 => Table1Row {
            family: Some(3),
            printed_mu: Some(rf("(-2*a+3)*b^2*(b+2)/(2*(b+1)^2)")),
            ..row(
                4,
                ["a-1/2", "3*(a-1/2)", "a-1/2", "a-1/2"],
                "(-2*b-1)/b^2",
                "-(3*a-2)*b^2*(b+2)/(3*(b+1)^2)",
                "(2*b+1)/(b^4+2*b^3)",
            )
        }
        .into(),
        5 => Table1Row {
            family: Some(4),
            convolution: Some(ConvolutionLink { source_row: 4, mu_c: rf("-(3*a-2)") }),
            ..row(
                5,
                ["a-1/2", "1/2", "a-1/2", "a-1/2"],
                "(b^3+b^2+3*b+3)/(b^3+b^2-5*b+3)",
                "(3*a-2)*(b-1)^2*(b+3)/(24*(b+1))",
                "(b^4-6*b^2-8*b-3)/(b^4-6*b^2+8*b-3)",
            )
        }
        .into(),
        6 => Table1Row {
            family: Some(5),
            ..row(
                6,
                ["a-1/2", "1/3", "a-1/2", "2*a-1"],
                "(-2*b^2-4)/(b^4-6*b^2)",
                "(-3*a+2)*b^2*(b^2+2)*(b^2-6)/(12*(b^2-2)^2)",
                "(-12*b^2+8)/(b^6-6*b^4)",
            )
        }
        .into(),
        _ => return Err(Error::UnknownRow(id)),
    };
    Ok(entry)
}

impl From<Table1Row> for Table1Entry {
    fn from(row: Table1Row) -> Self {
        Table1Entry::Solution(row)
    }
}

/// The parametrized rows 2 to 6.
pub fn solution_row(id: u8) -> Result<Table1Row> {
    table1(id)?.solution().ok_or(Error::DegenerateRow(id))
}

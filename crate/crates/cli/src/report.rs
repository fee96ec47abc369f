//! The structured report emitted by every subcommand.

use serde::{Deserialize, Serialize};

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
pub struct Discrepancy {
    pub location: String,
    pub paper_value: String,
    pub computed_value: String,
    pub note: String,
}

impl From<liekit::dimeq::Discrepancy> for Discrepancy {
    fn from(d: liekit::dimeq::Discrepancy) -> Discrepancy {
        Discrepancy {
            location: d.location,
            paper_value: d.paper_value,
            computed_value: d.computed_value,
            note: d.note,
        }
    }
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
pub struct Report {
    pub schema: u32,
    pub command: String,
    pub inputs: serde_json::Value,
    pub results: serde_json::Value,
    pub discrepancies: Vec<Discrepancy>,
}

impl Report {
    pub fn new(command: &str, inputs: serde_json::Value, results: serde_json::Value) -> Report {
        Report {
            schema: 1,
            command: command.to_string(),
            inputs,
            results,
            discrepancies: Vec::new(),
        }
    }
}

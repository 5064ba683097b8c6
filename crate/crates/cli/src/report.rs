use serde::Serialize;
use serde_json::Value;

use exdp::TypeTag;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub check: String,
    #[serde(rename = "type")]
    pub tag: TypeTag,
    pub expected: Value,
    pub computed: Value,
    pub status: Status,
}

impl VerificationReport {
    /// `status` is derived from exact equality of the two values.
    pub fn compare(check: &str, tag: TypeTag, expected: Value, computed: Value) -> Self {
        let status = if expected == computed {
            Status::Pass
        } else {
            Status::Fail
        };
        VerificationReport {
            check: check.to_string(),
            tag,
            expected,
            computed,
            status,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

use serde::Serialize;

/// Outcome of a decision procedure: a witness for YES or a reason for NO.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "verdict", content = "detail", rename_all = "UPPERCASE")]
pub enum Verdict<Y, N> {
    Yes(Y),
    No(N),
}

impl<Y, N> Verdict<Y, N> {
    pub fn is_yes(&self) -> bool {
        matches!(self, Verdict::Yes(_))
    }

    pub fn is_no(&self) -> bool {
        matches!(self, Verdict::No(_))
    }

    pub fn yes(&self) -> Option<&Y> {
        match self {
            Verdict::Yes(y) => Some(y),
            Verdict::No(_) => None,
        }
    }

    pub fn no(&self) -> Option<&N> {
        match self {
            Verdict::Yes(_) => None,
            Verdict::No(n) => Some(n),
        }
    }

    pub fn into_yes(self) -> Option<Y> {
        match self {
            Verdict::Yes(y) => Some(y),
            Verdict::No(_) => None,
        }
    }
}

use crate::certify::{Bipartition, ContractionSolution};

/// Outcome of a decision procedure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Yes(Certificate),
    No,
    /// The search hit its configured node limit before deciding.
    BudgetExceeded,
}

impl Verdict {
    pub fn is_yes(&self) -> bool {
        matches!(self, Verdict::Yes(_))
    }

    pub fn certificate(&self) -> Option<&Certificate> {
        match self {
            Verdict::Yes(c) => Some(c),
            _ => None,
        }
    }
}

/// A valid partition together with the edge set it induces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub partition: Bipartition,
    pub solution: ContractionSolution,
}

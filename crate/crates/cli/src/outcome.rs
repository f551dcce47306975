use acg_core::VerificationReport;

/// Process exit status, ordered by precedence.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Pass = 0,
    CapacitySkips = 2,
    InputError = 3,
    Violation = 1,
}

impl Outcome {
    pub fn of_report(r: &VerificationReport) -> Self {
        if r.has_failures() {
            Outcome::Violation
        } else if r.has_capacity_skips() {
            Outcome::CapacitySkips
        } else {
            Outcome::Pass
        }
    }

    /// The more severe of two outcomes: violations, then input errors, then skips.
    pub fn merge(self, other: Outcome) -> Outcome {
        if other.severity() > self.severity() {
            other
        } else {
            self
        }
    }

    fn severity(self) -> u8 {
        match self {
            Outcome::Pass => 0,
            Outcome::CapacitySkips => 1,
            Outcome::InputError => 2,
            Outcome::Violation => 3,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn precedence() {
        use Outcome::*;
        assert_eq!(Pass.merge(CapacitySkips), CapacitySkips);
        assert_eq!(CapacitySkips.merge(InputError), InputError);
        assert_eq!(InputError.merge(Violation), Violation);
        assert_eq!(Violation.merge(Pass), Violation);
    }
}

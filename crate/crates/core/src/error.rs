use alloc::string::String;
use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// A group, ramification, or cycle-notation string could not be parsed.
    Parse(String),
    /// The enumerated group would exceed the configured order cap.
    OrderCap { cap: usize },
    /// An element that was expected to be in the group is not.
    NotInGroup(String),
    /// The automorphism search was asked for a group above its cap.
    AutomorphismCap { order: usize, cap: usize },
    /// The prime does not split the group, or eigenvalue splitting failed.
    Splitting(String),
    /// Irreducible submodule search ran out of attempts.
    SpinFailed { char_index: usize, attempts: usize },
    /// Two objects live on different domains (subgroups, primes, groups).
    DomainMismatch(String),
    /// The degrees assigned to a class do not add up to its ramification.
    DegreeSum { class: usize, expected: u32, found: u32 },
    /// An invalid RSR component.
    InvalidRsr(String),
    /// The given transversal does not list the cosets in the expected order.
    CosetMismatch(String),
    /// The requested isomorphism mode does not apply to this group.
    ModeInapplicable(String),
    /// A computation would exceed its size budget.
    Budget(String),
    /// A product landed above the truncation degree.
    Truncated { degree: usize, max: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Parse(s) => write!(f, "parse error: {s}"),
            Error::OrderCap { cap } => write!(f, "group order exceeds cap {cap}"),
            Error::NotInGroup(s) => write!(f, "element not in group: {s}"),
            Error::AutomorphismCap { order, cap } => {
                write!(f, "automorphism search needs |G| <= {cap}, got {order}")
            }
            Error::Splitting(s) => write!(f, "character table splitting failed: {s}"),
            Error::SpinFailed { char_index, attempts } => {
                write!(f, "no irreducible submodule for character {char_index} after {attempts} attempts")
            }
            Error::DomainMismatch(s) => write!(f, "domain mismatch: {s}"),
            Error::DegreeSum { class, expected, found } => {
                write!(f, "class {class}: irreducible degrees sum to {found}, ramification is {expected}")
            }
            Error::InvalidRsr(s) => write!(f, "invalid RSR: {s}"),
            Error::CosetMismatch(s) => write!(f, "coset mismatch: {s}"),
            Error::ModeInapplicable(s) => write!(f, "mode inapplicable: {s}"),
            Error::Budget(s) => write!(f, "budget exceeded: {s}"),
            Error::Truncated { degree, max } => {
                write!(f, "product of degree {degree} exceeds truncation {max}")
            }
        }
    }
}

impl core::error::Error for Error {}

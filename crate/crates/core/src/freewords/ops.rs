//! The six quasigroup operations as the regular `S_3`-set (triality).
//!
//! Each operation is `mu^g` for a group element `g`. Left multiplication by
//! `sigma` gives the opposite operation; left multiplication by `tau` gives
//! the operation that cancels against it.

use std::fmt;

/// Permutation of `{0, 1, 2}` in one-line notation.
type Perm = [u8; 3];

const ID: Perm = [0, 1, 2];
const SIGMA_P: Perm = [1, 0, 2];
const TAU_P: Perm = [0, 2, 1];

fn compose(g: Perm, h: Perm) -> Perm {
    [g[h[0] as usize], g[h[1] as usize], g[h[2] as usize]]
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OpSymbol {
    /// `x · y`, element `e`.
    Mul,
    /// `x \ y`, element `tau`.
    LeftDiv,
    /// `x / y`, element `sigma tau sigma`.
    RightDiv,
    /// `x ∘ y = y · x`, element `sigma`.
    OppMul,
    /// `x \\ y = y \ x`, element `sigma tau`.
    OppLeftDiv,
    /// `x // y = y / x`, element `tau sigma`.
    OppRightDiv,
}

impl OpSymbol {
    pub const ALL: [OpSymbol; 6] = [
        OpSymbol::Mul,
        OpSymbol::LeftDiv,
        OpSymbol::RightDiv,
        OpSymbol::OppMul,
        OpSymbol::OppLeftDiv,
        OpSymbol::OppRightDiv,
    ];

    /// Multiplication, left division, right division.
    pub const BASIC: [OpSymbol; 3] = [OpSymbol::Mul, OpSymbol::LeftDiv, OpSymbol::RightDiv];

    pub const IDENTITY: OpSymbol = OpSymbol::Mul;
    pub const SIGMA: OpSymbol = OpSymbol::OppMul;
    pub const TAU: OpSymbol = OpSymbol::LeftDiv;

    fn perm(self) -> Perm {
        match self {
            OpSymbol::Mul => ID,
            OpSymbol::OppMul => SIGMA_P,
            OpSymbol::LeftDiv => TAU_P,
            OpSymbol::OppLeftDiv => compose(SIGMA_P, TAU_P),
            OpSymbol::OppRightDiv => compose(TAU_P, SIGMA_P),
            OpSymbol::RightDiv => compose(SIGMA_P, compose(TAU_P, SIGMA_P)),
        }
    }

    fn from_perm(p: Perm) -> OpSymbol {
        *Self::ALL
            .iter()
            .find(|op| op.perm() == p)
            .expect("S3 is closed")
    }

    /// Group product `self * other` in `S_3`.
    pub fn compose(self, other: OpSymbol) -> OpSymbol {
        Self::from_perm(compose(self.perm(), other.perm()))
    }

    pub fn inverse(self) -> OpSymbol {
        let p = self.perm();
        let mut inv = [0u8; 3];
        for (i, &x) in p.iter().enumerate() {
            inv[x as usize] = i as u8;
        }
        Self::from_perm(inv)
    }

    /// `mu^{sigma g}`: the same operation with its arguments swapped.
    pub fn opposite(self) -> OpSymbol {
        Self::SIGMA.compose(self)
    }

    /// `mu^{tau g}`: `x (x y mu^{tau g}) mu^g = y`.
    pub fn cancel_partner(self) -> OpSymbol {
        Self::TAU.compose(self)
    }

    pub fn is_basic(self) -> bool {
        matches!(self, OpSymbol::Mul | OpSymbol::LeftDiv | OpSymbol::RightDiv)
    }

    /// Name of the group element, e.g. `στσ`.
    pub fn group_name(self) -> &'static str {
        match self {
            OpSymbol::Mul => "e",
            OpSymbol::OppMul => "σ",
            OpSymbol::LeftDiv => "τ",
            OpSymbol::OppLeftDiv => "στ",
            OpSymbol::OppRightDiv => "τσ",
            OpSymbol::RightDiv => "στσ",
        }
    }

    /// ASCII token used by the word grammar.
    pub fn token(self) -> &'static str {
        match self {
            OpSymbol::Mul => "*",
            OpSymbol::LeftDiv => "\\",
            OpSymbol::RightDiv => "/",
            OpSymbol::OppMul => "@",
            OpSymbol::OppLeftDiv => "\\\\",
            OpSymbol::OppRightDiv => "//",
        }
    }
}

impl fmt::Display for OpSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OpSymbol::Mul => "·",
            OpSymbol::LeftDiv => "\\",
            OpSymbol::RightDiv => "/",
            OpSymbol::OppMul => "∘",
            OpSymbol::OppLeftDiv => "\\\\",
            OpSymbol::OppRightDiv => "//",
        })
    }
}

/// Opposite and cancel partner of an operation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OpRelations {
    pub opposite: OpSymbol,
    pub cancel_partner: OpSymbol,
}

pub fn op_algebra(op: OpSymbol) -> OpRelations {
    OpRelations {
        opposite: op.opposite(),
        cancel_partner: op.cancel_partner(),
    }
}

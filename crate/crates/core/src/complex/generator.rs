use super::{Simplex, SimplicialComplex};

/// `σ▹α`: the simplex `α` viewed in `C_*(X, X − st̊σ)`. Needs `σ ≤ α`;
/// `∅▹α` is `α` itself. The dual symbol `σ▹α^*` reuses this type.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Gen {
    pub under: Simplex,
    pub over: Simplex,
}

impl Gen {
    /// `None` when `under` is not a face of `over` (the symbol is zero).
    pub fn new(under: Simplex, over: Simplex) -> Option<Gen> {
        under.is_face_of(&over).then_some(Gen { under, over })
    }

    /// `∅▹α`.
    pub fn plain(over: Simplex) -> Gen {
        Gen {
            under: Simplex::empty(),
            over,
        }
    }

    /// `α▹α`.
    pub fn diagonal(s: Simplex) -> Gen {
        Gen {
            under: s.clone(),
            over: s,
        }
    }

    pub fn is_diagonal(&self) -> bool {
        self.under == self.over
    }

    pub fn display(&self, x: &SimplicialComplex) -> String {
        if self.under.is_empty() {
            x.display(&self.over)
        } else {
            format!("{}▹{}", x.display(&self.under), x.display(&self.over))
        }
    }
}

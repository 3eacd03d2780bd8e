/// Outcome of a decision procedure together with the evidence behind it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict<W> {
    pub holds: bool,
    pub witness: W,
    /// Short name of the method that produced the answer.
    pub method: &'static str,
}

impl<W> Verdict<W> {
    pub fn new(holds: bool, witness: W, method: &'static str) -> Self {
        Verdict {
            holds,
            witness,
            method,
        }
    }

    pub fn map<V>(self, f: impl FnOnce(W) -> V) -> Verdict<V> {
        Verdict {
            holds: self.holds,
            witness: f(self.witness),
            method: self.method,
        }
    }
}

use super::frame::VariableFrame;
use super::polynomial::Polynomial;
use super::print::print;
use crate::error::{Error, Result};

/// Ordered tuple of polynomials over a common set of variables.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PolyMap {
    arity: usize,
    components: Vec<Polynomial>,
}

impl PolyMap {
    pub fn new(arity: usize, components: Vec<Polynomial>) -> Result<Self> {
        if let Some(bad) = components.iter().find(|c| c.arity() != arity) {
            return Err(Error::ArityMismatch {
                expected: arity,
                found: bad.arity(),
            });
        }
        Ok(PolyMap { arity, components })
    }

    /// The identity map `x ↦ x` in `n` variables.
    pub fn identity(n: usize) -> Self {
        PolyMap {
            arity: n,
            components: (0..n).map(|i| Polynomial::var(n, i)).collect(),
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    /// Same number of components as variables.
    pub fn is_square(&self) -> bool {
        self.arity == self.components.len()
    }

    pub fn components(&self) -> &[Polynomial] {
        &self.components
    }

    pub fn component(&self, i: usize) -> &Polynomial {
        &self.components[i]
    }

    pub fn into_components(self) -> Vec<Polynomial> {
        self.components
    }

    /// Largest total degree among the components.
    pub fn degree(&self) -> u32 {
        self.components.iter().map(Polynomial::degree).max().unwrap_or(0)
    }

    /// `self ∘ inner`, i.e. `x ↦ self(inner(x))`.
    pub fn compose(&self, inner: &PolyMap) -> Result<PolyMap> {
        if inner.len() != self.arity {
            return Err(Error::ArityMismatch {
                expected: self.arity,
                found: inner.len(),
            });
        }
        let components = self
            .components
            .iter()
            .map(|c| c.substitute(inner.components()))
            .collect::<Result<Vec<_>>>()?;
        Ok(PolyMap {
            arity: inner.arity,
            components,
        })
    }

    pub fn sub(&self, other: &PolyMap) -> Result<PolyMap> {
        if self.arity != other.arity || self.len() != other.len() {
            return Err(Error::Dimension("map difference needs equal shapes".into()));
        }
        Ok(PolyMap {
            arity: self.arity,
            components: self
                .components
                .iter()
                .zip(&other.components)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn widen(&self, new_arity: usize) -> PolyMap {
        PolyMap {
            arity: new_arity,
            components: self.components.iter().map(|c| c.widen(new_arity)).collect(),
        }
    }

    /// Componentwise `d`-th power.
    pub fn hadamard_power(&self, d: u32) -> PolyMap {
        PolyMap {
            arity: self.arity,
            components: self.components.iter().map(|c| c.pow(d)).collect(),
        }
    }

    /// Componentwise product.
    pub fn hadamard_product(&self, other: &PolyMap) -> Result<PolyMap> {
        if self.arity != other.arity || self.len() != other.len() {
            return Err(Error::Dimension(
                "Hadamard product needs maps of equal shape".into(),
            ));
        }
        Ok(PolyMap {
            arity: self.arity,
            components: self
                .components
                .iter()
                .zip(&other.components)
                .map(|(a, b)| a * b)
                .collect(),
        })
    }

    pub fn render(&self, frame: &VariableFrame) -> Vec<String> {
        self.components.iter().map(|c| print(c, frame)).collect()
    }
}

impl std::fmt::Debug for PolyMap {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let frame = VariableFrame::standard(self.arity);
        write!(f, "({})", self.render(&frame).join(", "))
    }
}

use num_traits::One;

use crate::error::{Error, Result};
use crate::poly::{print, Polynomial, VariableFrame};
use crate::rational::Rational;

use super::ScalarMatrix;

/// Dense matrix of polynomials sharing one arity, row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    arity: usize,
    data: Vec<Polynomial>,
}

impl PolyMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Polynomial>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::Dimension("matrix must have positive size".into()));
        }
        if data.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        let arity = data[0].arity();
        if let Some(bad) = data.iter().find(|p| p.arity() != arity) {
            return Err(Error::ArityMismatch {
                expected: arity,
                found: bad.arity(),
            });
        }
        Ok(PolyMatrix {
            rows,
            cols,
            arity,
            data,
        })
    }

    pub fn from_rows(rows: Vec<Vec<Polynomial>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        Self::new(r, c, rows.into_iter().flatten().collect())
    }

    pub fn zeros(rows: usize, cols: usize, arity: usize) -> Self {
        PolyMatrix {
            rows,
            cols,
            arity,
            data: vec![Polynomial::zero(arity); rows * cols],
        }
    }

    pub fn identity(n: usize, arity: usize) -> Self {
        let mut m = Self::zeros(n, n, arity);
        for i in 0..n {
            m.data[i * n + i] = Polynomial::one(arity);
        }
        m
    }

    pub fn from_scalar(m: &ScalarMatrix, arity: usize) -> Self {
        let data = m
            .entries()
            .iter()
            .map(|c| Polynomial::constant(arity, c.clone()))
            .collect();
        PolyMatrix {
            rows: m.rows(),
            cols: m.cols(),
            arity,
            data,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Polynomial {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, p: Polynomial) {
        self.data[r * self.cols + c] = p;
    }

    pub fn entries(&self) -> &[Polynomial] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Polynomial::is_zero)
    }

    pub fn transpose(&self) -> PolyMatrix {
        let mut t = Self::zeros(self.cols, self.rows, self.arity);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        if self.cols != other.rows {
            return Err(Error::Dimension("matrix product shape mismatch".into()));
        }
        if self.arity != other.arity {
            return Err(Error::ArityMismatch {
                expected: self.arity,
                found: other.arity,
            });
        }
        let mut out = Self::zeros(self.rows, other.cols, self.arity);
        for r in 0..self.rows {
            for c in 0..other.cols {
                let mut s = Polynomial::zero(self.arity);
                for k in 0..self.cols {
                    let (a, b) = (self.get(r, k), other.get(k, c));
                    if !a.is_zero() && !b.is_zero() {
                        s = &s + &(a * b);
                    }
                }
                out.set(r, c, s);
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::Dimension("matrix sum shape mismatch".into()));
        }
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        PolyMatrix::new(self.rows, self.cols, data)
    }

    pub fn scale(&self, c: &Rational) -> PolyMatrix {
        PolyMatrix {
            data: self.data.iter().map(|p| p.scale(c)).collect(),
            ..self.clone()
        }
    }

    /// Substitutes `images` for the variables in every entry.
    pub fn substitute(&self, images: &[Polynomial]) -> Result<PolyMatrix> {
        let data = self
            .data
            .iter()
            .map(|p| p.substitute(images))
            .collect::<Result<Vec<_>>>()?;
        PolyMatrix::new(self.rows, self.cols, data)
    }

    /// Entries evaluated at a rational point.
    pub fn evaluate(&self, point: &[Rational]) -> ScalarMatrix {
        let data = self.data.iter().map(|p| p.evaluate(point)).collect();
        ScalarMatrix::new(self.rows, self.cols, data).expect("same shape")
    }

    /// The matrix with row `r` and column `c` removed.
    pub fn minor(&self, r: usize, c: usize) -> PolyMatrix {
        let data = (0..self.rows)
            .filter(|&i| i != r)
            .flat_map(|i| (0..self.cols).filter(move |&j| j != c).map(move |j| (i, j)))
            .map(|(i, j)| self.get(i, j).clone())
            .collect();
        PolyMatrix {
            rows: self.rows - 1,
            cols: self.cols - 1,
            arity: self.arity,
            data,
        }
    }

    /// Row-major nested vectors of rendered entries.
    pub fn render(&self, frame: &VariableFrame) -> Vec<Vec<String>> {
        (0..self.rows)
            .map(|r| (0..self.cols).map(|c| print(self.get(r, c), frame)).collect())
            .collect()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn determinant(&self) -> Result<Polynomial> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        Ok(if self.rows <= 4 {
            self.cofactor_det()
        } else {
            self.bareiss_det()
        })
    }

    fn cofactor_det(&self) -> Polynomial {
        match self.rows {
            1 => self.get(0, 0).clone(),
            2 => &(self.get(0, 0) * self.get(1, 1)) - &(self.get(0, 1) * self.get(1, 0)),
            n => {
                let mut acc = Polynomial::zero(self.arity);
                for c in 0..n {
                    let a = self.get(0, c);
                    if a.is_zero() {
                        continue;
                    }
                    let term = a * &self.minor(0, c).cofactor_det();
                    acc = if c % 2 == 0 { &acc + &term } else { &acc - &term };
                }
                acc
            }
        }
    }

    fn bareiss_det(&self) -> Polynomial {
        let n = self.rows;
        let mut m = self.clone();
        let mut sign = Rational::one();
        let mut prev = Polynomial::one(self.arity);
        for k in 0..n - 1 {
            if m.get(k, k).is_zero() {
                let Some(p) = (k + 1..n).find(|&r| !m.get(r, k).is_zero()) else {
                    return Polynomial::zero(self.arity);
                };
                m.swap_rows(k, p);
                sign = -sign;
            }
            let pivot = m.get(k, k).clone();
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &(&pivot * m.get(i, j)) - &(m.get(i, k) * m.get(k, j));
                    let v = num
                        .div_exact(&prev)
                        .expect("Bareiss elimination divides exactly");
                    m.set(i, j, v);
                }
                m.set(i, k, Polynomial::zero(self.arity));
            }
            prev = pivot;
        }
        m.get(n - 1, n - 1).scale(&sign)
    }

    /// Whether every entry is a constant.
    pub fn is_constant(&self) -> bool {
        self.data.iter().all(Polynomial::is_constant)
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|r| (r + 1..self.cols).all(|c| self.get(r, c) == self.get(c, r)))
    }

    pub fn trace(&self) -> Polynomial {
        let mut t = Polynomial::zero(self.arity);
        for i in 0..self.rows.min(self.cols) {
            t = &t + self.get(i, i);
        }
        t
    }

    pub fn constant_part(&self) -> Option<ScalarMatrix> {
        let data = self
            .data
            .iter()
            .map(|p| p.constant_value())
            .collect::<Option<Vec<_>>>()?;
        ScalarMatrix::new(self.rows, self.cols, data).ok()
    }

    pub(crate) fn first_nonzero(&self) -> Option<(usize, usize)> {
        self.data
            .iter()
            .position(|p| !p.is_zero())
            .map(|i| (i / self.cols, i % self.cols))
    }
}

impl std::fmt::Debug for PolyMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let frame = VariableFrame::standard(self.arity);
        write!(f, "{:?}", self.render(&frame))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_standard as p;

    fn m(rows: &[&[&str]], n: usize) -> PolyMatrix {
        PolyMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|e| p(e, n)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn determinant_examples() {
        assert_eq!(m(&[&["1", "2*x2"], &["0", "1"]], 2).determinant().unwrap(), p("1", 2));
        assert_eq!(m(&[&["0", "1"], &["1", "0"]], 2).determinant().unwrap(), p("-1", 2));
        assert_eq!(m(&[&["2*x1", "0"], &["0", "1"]], 2).determinant().unwrap(), p("2*x1", 2));
        assert!(matches!(
            PolyMatrix::zeros(2, 3, 1).determinant(),
            Err(Error::NotSquare { rows: 2, cols: 3 })
        ));
    }

    #[test]
    fn bareiss_matches_cofactor() {
        let entries = [
            "x1", "1", "0", "x2", "2", "0", "x1*x2", "1", "x2", "0", "0", "0", "3", "x1", "1",
            "x1^2", "0", "x2", "1", "0", "1", "1", "0", "x2", "x1",
        ];
        let big = PolyMatrix::new(5, 5, entries.iter().map(|e| p(e, 2)).collect()).unwrap();
        let mut cof = Polynomial::zero(2);
        for c in 0..5 {
            let t = big.get(0, c) * &big.minor(0, c).cofactor_det();
            cof = if c % 2 == 0 { &cof + &t } else { &cof - &t };
        }
        assert_eq!(big.bareiss_det(), cof);
    }

    #[test]
    fn symmetry() {
        assert!(!m(&[&["0", "1"], &["0", "0"]], 2).is_symmetric());
        assert!(m(&[&["x1"]], 1).is_symmetric());
    }
}

//! A polynomial together with known structure that selects exact routes.

use num::Zero;

use crate::algebra::{MPoly, Rational};
use crate::arrangement::LinearFormSet;
use crate::error::{Error, Result};
use crate::improj::HermitianPencil;

#[derive(Clone, Debug, PartialEq)]
pub enum Structure {
    /// Nothing known beyond the expanded polynomial.
    Generic,
    /// The polynomial is the product of these factors.
    Factors(Vec<MPoly>),
    /// A constant times a product of real linear forms.
    LinearForms(LinearFormSet),
    /// `det(Σ z_j diag(a^(1)_j, ..., a^(d)_j))`, a product of real linear forms.
    DiagDet(LinearFormSet),
    /// `det(Σ z_j A_j)` for a Hermitian pencil.
    Pencil(HermitianPencil),
}

#[derive(Clone, Debug, PartialEq)]
pub struct StructuredPoly {
    poly: MPoly,
    structure: Structure,
}

pub(crate) fn linear_form_of(f: &MPoly) -> Option<Vec<Rational>> {
    if f.degree() != Some(1) || !f.is_homogeneous() {
        return None;
    }
    let g = f.real_multiple()?;
    let n = f.nvars();
    let mut a = vec![Rational::zero(); n];
    for (m, c) in g.terms() {
        let j = m.exps().iter().position(|&e| e == 1)?;
        a[j] = c.re.clone();
    }
    Some(a)
}

fn product_of_forms(fs: &LinearFormSet) -> MPoly {
    let mut p = MPoly::one(fs.dim());
    for a in fs.forms() {
        p = p.mul(&MPoly::linear_form(a)).expect("same ring");
    }
    p
}

impl StructuredPoly {
    pub fn generic(poly: MPoly) -> Self {
        StructuredPoly { poly, structure: Structure::Generic }
    }

    /// Product of the given factors; recognises products of real linear forms.
    pub fn from_factors(factors: Vec<MPoly>) -> Result<Self> {
        let first = factors.first().ok_or(Error::ZeroPolynomial)?;
        let n = first.nvars();
        let poly = MPoly::product(n, &factors)?;
        if poly.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let nonconst: Vec<MPoly> = factors.into_iter().filter(|f| !f.is_constant()).collect();
        if nonconst.is_empty() {
            return Ok(StructuredPoly::generic(poly));
        }
        let forms: Option<Vec<Vec<Rational>>> = nonconst.iter().map(linear_form_of).collect();
        if let Some(forms) = forms {
            let fs = LinearFormSet::new(n, forms)?;
            return Ok(StructuredPoly { poly, structure: Structure::LinearForms(fs) });
        }
        if nonconst.len() == 1 {
            return Ok(StructuredPoly::generic(poly));
        }
        Ok(StructuredPoly { poly, structure: Structure::Factors(nonconst) })
    }

    pub fn linear_forms(fs: LinearFormSet) -> Self {
        StructuredPoly { poly: product_of_forms(&fs), structure: Structure::LinearForms(fs) }
    }

    pub fn diag_det(fs: LinearFormSet) -> Self {
        StructuredPoly { poly: product_of_forms(&fs), structure: Structure::DiagDet(fs) }
    }

    pub fn pencil(p: HermitianPencil) -> Result<Self> {
        Ok(StructuredPoly { poly: p.expand()?, structure: Structure::Pencil(p) })
    }

    pub fn poly(&self) -> &MPoly {
        &self.poly
    }

    pub fn structure(&self) -> &Structure {
        &self.structure
    }

    pub fn nvars(&self) -> usize {
        self.poly.nvars()
    }

    /// Nonconstant factors whose product is the polynomial up to a constant.
    pub fn factors(&self) -> Vec<MPoly> {
        match &self.structure {
            Structure::Factors(fs) => fs.clone(),
            Structure::LinearForms(fs) | Structure::DiagDet(fs) => {
                fs.forms().iter().map(|a| MPoly::linear_form(a)).collect()
            }
            _ => vec![self.poly.clone()],
        }
    }
}

impl From<MPoly> for StructuredPoly {
    fn from(p: MPoly) -> Self {
        StructuredPoly::generic(p)
    }
}

//! `{"bidegree":[m,n],"coeffs":[{"k":..,"l":..,"re":..,"im":..},...]}`;
//! omitted entries are zero.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::{Poly1, Poly2, PolyError, Variable};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PolyJsonTerm {
    pub k: usize,
    pub l: usize,
    pub re: f64,
    pub im: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PolyJson {
    pub bidegree: [usize; 2],
    pub coeffs: Vec<PolyJsonTerm>,
}

impl From<&Poly2> for PolyJson {
    fn from(p: &Poly2) -> Self {
        let (m, n) = p.bidegree();
        PolyJson {
            bidegree: [m, n],
            coeffs: p
                .terms()
                .map(|(k, l, c)| PolyJsonTerm {
                    k,
                    l,
                    re: c.re,
                    im: c.im,
                })
                .collect(),
        }
    }
}

impl From<&Poly1> for PolyJson {
    fn from(p: &Poly1) -> Self {
        PolyJson::from(&p.to_poly2(Variable::Z1))
    }
}

impl TryFrom<PolyJson> for Poly2 {
    type Error = PolyError;

    /// The declared bidegree may be padded; the result is tightened.
    fn try_from(j: PolyJson) -> Result<Self, PolyError> {
        let [m, n] = j.bidegree;
        let mut coeffs = vec![Complex64::new(0.0, 0.0); (m + 1) * (n + 1)];
        for t in j.coeffs {
            if t.k > m || t.l > n {
                return Err(PolyError::OutsideBidegree { k: t.k, l: t.l, m, n });
            }
            coeffs[t.k * (n + 1) + t.l] += Complex64::new(t.re, t.im);
        }
        Poly2::from_grid(m + 1, n + 1, coeffs)
    }
}

impl Serialize for Poly2 {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        PolyJson::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for Poly2 {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let j = PolyJson::deserialize(d)?;
        Poly2::try_from(j).map_err(serde::de::Error::custom)
    }
}

impl Serialize for Poly1 {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        PolyJson::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for Poly1 {
    /// Accepts any `z2`-free polynomial in the bivariate format.
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let p = Poly2::deserialize(d)?;
        if p.depends_on(Variable::Z2) {
            return Err(serde::de::Error::custom("univariate polynomial must not depend on z2"));
        }
        let (m, _) = p.bidegree();
        Poly1::new((0..=m).map(|k| p.coeff(k, 0)).collect()).map_err(serde::de::Error::custom)
    }
}

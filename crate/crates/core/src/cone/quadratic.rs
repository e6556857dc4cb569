//! Rays and cones with coordinates in a real quadratic field.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactarith::feasibility::in_conic_hull;
use crate::exactarith::linalg::QVector;
use crate::exactarith::quad::QuadScalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Ray {
    Rational(QVector),
    Quadratic(Vec<QuadScalar>),
}

impl Ray {
    pub fn is_zero(&self) -> bool {
        match self {
            Ray::Rational(v) => v.is_zero(),
            Ray::Quadratic(v) => v.iter().all(QuadScalar::is_zero),
        }
    }

    /// Rational direction of the ray, as a primitive integer vector.
    pub fn rational_direction(&self) -> Option<QVector> {
        match self {
            Ray::Rational(v) => Some(v.primitive()),
            Ray::Quadratic(v) => {
                let pivot = v.iter().find(|c| !c.is_zero())?;
                let ratios: Option<Vec<_>> = v.iter().map(|c| (c / pivot).to_rational()).collect();
                let mut q = QVector::new(ratios?);
                if pivot.signum() == std::cmp::Ordering::Less {
                    q = q.neg();
                }
                Some(q.primitive())
            }
        }
    }
}

impl Serialize for Ray {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Ray::Rational(v) => v.serialize(s),
            Ray::Quadratic(v) => v.serialize(s),
        }
    }
}

/// Does the ray contain a nonzero rational point?
pub fn is_rational_ray(r: &Ray) -> bool {
    !r.is_zero() && r.rational_direction().is_some()
}

/// Cone generated by vectors over one quadratic field `ℚ(√n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadCone {
    radicand: u64,
    generators: Vec<Vec<QuadScalar>>,
}

impl QuadCone {
    pub fn new(radicand: u64, generators: Vec<Vec<QuadScalar>>) -> Result<Self> {
        let d = generators.first().map(|g| g.len()).unwrap_or(0);
        for g in &generators {
            if g.len() != d {
                return Err(Error::Invalid("generators of mixed dimension".into()));
            }
            if g.iter().any(|c| c.radicand() != radicand && !c.is_rational()) {
                return Err(Error::IncompatibleFields);
            }
        }
        let generators = generators
            .into_iter()
            .map(|g| {
                g.into_iter()
                    .map(|c| QuadScalar::new(c.a().clone(), c.b().clone(), radicand))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { radicand, generators })
    }

    pub fn radicand(&self) -> u64 {
        self.radicand
    }

    pub fn generators(&self) -> &[Vec<QuadScalar>] {
        &self.generators
    }

    pub fn contains(&self, x: &[QuadScalar]) -> bool {
        in_conic_hull(&self.generators, x)
    }

    /// Generators not in the conic hull of the other generators, one per
    /// direction.
    pub fn extreme_rays(&self) -> Vec<Ray> {
        let mut out: Vec<Vec<QuadScalar>> = Vec::new();
        for (i, g) in self.generators.iter().enumerate() {
            if g.iter().all(QuadScalar::is_zero) {
                continue;
            }
            let others: Vec<Vec<QuadScalar>> = self
                .generators
                .iter()
                .enumerate()
                .filter(|&(j, h)| j != i && !same_direction(g, h))
                .map(|(_, h)| h.clone())
                .collect();
            if !in_conic_hull(&others, g) && !out.iter().any(|o| same_direction(o, g)) {
                out.push(g.clone());
            }
        }
        out.into_iter().map(Ray::Quadratic).collect()
    }

    /// Pointed: no nonzero generator has its negative in the cone.
    pub fn is_pointed(&self) -> bool {
        self.generators.iter().all(|g| {
            g.iter().all(QuadScalar::is_zero) || {
                let neg: Vec<QuadScalar> = g.iter().map(|c| -c).collect();
                !self.contains(&neg)
            }
        })
    }

    pub fn is_positive(&self) -> bool {
        self.generators.iter().all(|g| g.iter().all(|c| c.signum() != std::cmp::Ordering::Less))
    }
}

fn same_direction(a: &[QuadScalar], b: &[QuadScalar]) -> bool {
    // a = λ b with λ > 0
    let Some(i) = b.iter().position(|c| !c.is_zero()) else {
        return false;
    };
    let lambda = &a[i] / &b[i];
    if lambda.signum() != std::cmp::Ordering::Greater {
        return false;
    }
    a.iter().zip(b).all(|(x, y)| (x - &(&lambda * y)).is_zero())
}

/// Is every extreme ray rational? Requires a pointed, positive cone.
pub fn check_realizable(c: &QuadCone) -> Result<bool> {
    if !c.is_pointed() {
        return Err(Error::NotPointed);
    }
    if !c.is_positive() {
        return Err(Error::Invalid("cone is not positive".into()));
    }
    Ok(c.extreme_rays().iter().all(is_rational_ray))
}

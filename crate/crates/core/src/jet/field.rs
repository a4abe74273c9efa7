//! Point vector fields on `(x, y, z, u)`, their second prolongation and the
//! invariance conditions for `∇u = f(u)`.

use serde::Serialize;

use crate::algebra::AlgebraElement;
use crate::error::{Error, Result};
use crate::jet::poly::{Dir, JetPolynomial, Var};
use crate::linalg;
use crate::scalar::{int, Rational};

/// Variables allowed in point-field components.
pub const POINT_VARS: [Var; 4] = [Var::X, Var::Y, Var::Z, Var::U];

/// `ξ1 ∂x + ξ2 ∂y + ξ3 ∂z + φ ∂u` with components in `x, y, z, u`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PointVectorField {
    xi: [JetPolynomial; 3],
    phi: JetPolynomial,
}

/// Whether the source term is the formal atom `f` or identically zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FMode {
    Zero,
    Generic,
}

impl FMode {
    /// Drops `f`, `f'`, `f''` in zero mode.
    pub fn apply(self, p: &JetPolynomial) -> JetPolynomial {
        match self {
            FMode::Generic => p.clone(),
            FMode::Zero => {
                let z = JetPolynomial::zero();
                p.substitute(Var::F, &z).substitute(Var::F1, &z).substitute(Var::F2, &z)
            }
        }
    }
}

fn v(var: Var) -> JetPolynomial {
    JetPolynomial::var(var)
}

impl PointVectorField {
    pub fn new(xi: [JetPolynomial; 3], phi: JetPolynomial) -> Result<Self> {
        for c in xi.iter().chain([&phi]) {
            if !c.only_in(&POINT_VARS) {
                return Err(Error::JetInVectorField(c.to_string()));
            }
        }
        Ok(Self { xi, phi })
    }

    pub fn xi(&self) -> &[JetPolynomial; 3] {
        &self.xi
    }

    pub fn phi(&self) -> &JetPolynomial {
        &self.phi
    }

    /// Vector field of an se(3) element.
    pub fn from_element(a: &AlgebraElement<Rational>) -> Self {
        let c = |i: usize| JetPolynomial::constant(a.coeff(i).clone());
        let (x, y, z) = (v(Var::X), v(Var::Y), v(Var::Z));
        let xi = [
            &(&c(1) + &(&c(5) * &z)) - &(&c(6) * &y),
            &(&c(2) + &(&c(6) * &x)) - &(&c(4) * &z),
            &(&c(3) + &(&c(4) * &y)) - &(&c(5) * &x),
        ];
        Self { xi, phi: JetPolynomial::zero() }
    }

    /// `X_i` as a vector field (1-based).
    pub fn generator(i: usize) -> Result<Self> {
        if !(1..=6).contains(&i) {
            return Err(Error::GeneratorIndex(i));
        }
        Ok(Self::from_element(&AlgebraElement::basis(i)))
    }

    /// `x ∂x + y ∂y + z ∂z`.
    pub fn dilation() -> Self {
        Self { xi: [v(Var::X), v(Var::Y), v(Var::Z)], phi: JetPolynomial::zero() }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self { xi: self.xi.clone().map(|p| p.scale(c)), phi: self.phi.scale(c) }
    }

    pub fn add(&self, other: &Self) -> Self {
        Self {
            xi: std::array::from_fn(|i| &self.xi[i] + &other.xi[i]),
            phi: &self.phi + &other.phi,
        }
    }

    /// `V(g) = Σ ξ_i ∂_i g + φ ∂_u g`.
    pub fn apply(&self, g: &JetPolynomial) -> JetPolynomial {
        let mut out = &self.phi * &g.partial(Var::U);
        for d in Dir::ALL {
            out = &out + &(&self.xi[d.index()] * &g.partial(Var::coordinate(d)));
        }
        out
    }

    fn components(&self) -> [&JetPolynomial; 4] {
        [&self.xi[0], &self.xi[1], &self.xi[2], &self.phi]
    }
}

/// `[V, W]` with components `V(W^i) − W(V^i)`.
pub fn bracket_fields(a: &PointVectorField, b: &PointVectorField) -> PointVectorField {
    let (ca, cb) = (a.components(), b.components());
    let c: [JetPolynomial; 4] = std::array::from_fn(|i| &a.apply(cb[i]) - &b.apply(ca[i]));
    let [x, y, z, phi] = c;
    PointVectorField { xi: [x, y, z], phi }
}

/// Coordinates of `field` in the span of `basis`, if it lies there.
pub fn decompose(field: &PointVectorField, basis: &[PointVectorField]) -> Option<Vec<Rational>> {
    let mut keys = std::collections::BTreeSet::new();
    for f in basis.iter().chain([field]) {
        for (k, comp) in f.components().into_iter().enumerate() {
            keys.extend(comp.terms().map(|(m, _)| (k, *m)));
        }
    }
    let coords = |f: &PointVectorField| -> Vec<Rational> {
        let comps = f.components();
        keys.iter().map(|(k, m)| comps[*k].coefficient(m)).collect()
    };
    let columns: Vec<Vec<Rational>> = basis.iter().map(coords).collect();
    linalg::solve_columns(&columns, &coords(field))
}

/// The nine coefficients `φ^x, φ^y, φ^z, φ^xx, φ^xy, φ^xz, φ^yy, φ^yz, φ^zz`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Prolongation {
    pub first: [JetPolynomial; 3],
    /// Indexed by `Var::second(i, j)` with `i ≤ j`, in the order `xx, xy, xz, yy, yz, zz`.
    pub second: [JetPolynomial; 6],
}

impl Prolongation {
    pub fn get_second(&self, a: Dir, b: Dir) -> &JetPolynomial {
        &self.second[Var::second(a, b).index() - Var::Uxx.index()]
    }

    pub fn all(&self) -> impl Iterator<Item = &JetPolynomial> {
        self.first.iter().chain(self.second.iter())
    }
}

fn d(p: &JetPolynomial, dir: Dir) -> JetPolynomial {
    p.total_derivative(dir).expect("point-field prolongation stays within second order")
}

/// Second prolongation by `φ^J,k = D_k φ^J − Σ_i (D_k ξ_i) u_{J,i}`.
pub fn second_prolongation(v: &PointVectorField) -> Prolongation {
    let dxi: [[JetPolynomial; 3]; 3] = std::array::from_fn(|k| std::array::from_fn(|i| d(&v.xi[i], Dir::from_index(k))));
    let first: [JetPolynomial; 3] = std::array::from_fn(|k| {
        let mut out = d(&v.phi, Dir::from_index(k));
        for i in Dir::ALL {
            out = &out - &(&dxi[k][i.index()] * &JetPolynomial::var(Var::first(i)));
        }
        out
    });
    let pairs = [(0, 0), (0, 1), (0, 2), (1, 1), (1, 2), (2, 2)];
    let second = pairs.map(|(j, k)| {
        let (dj, dk) = (Dir::from_index(j), Dir::from_index(k));
        let mut out = d(&first[j], dk);
        for i in Dir::ALL {
            out = &out - &(&dxi[k][i.index()] * &JetPolynomial::var(Var::second(dj, i)));
        }
        out
    });
    Prolongation { first, second }
}

/// First-order coefficient from the explicit formula
/// `φ^k = −Σ_i u_i (∂_k + u_k ∂_u) ξ_i + (∂_k + u_k ∂_u) φ`.
pub fn first_order_explicit(v: &PointVectorField, dir: Dir) -> JetPolynomial {
    let uk = JetPolynomial::var(Var::first(dir));
    let op = |g: &JetPolynomial| &g.partial(Var::coordinate(dir)) + &(&uk * &g.partial(Var::U));
    let mut out = op(&v.phi);
    for i in Dir::ALL {
        out = &out - &(&JetPolynomial::var(Var::first(i)) * &op(&v.xi[i.index()]));
    }
    out
}

/// Substitutes `u_zz := f − u_xx − u_yy`.
pub fn on_shell(p: &JetPolynomial) -> JetPolynomial {
    let by = &(&v(Var::F) - &v(Var::Uxx)) - &v(Var::Uyy);
    p.substitute(Var::Uzz, &by)
}

/// `pr⁽²⁾v (∇u − f(u))` reduced on solutions; zero iff `v` is a symmetry for every `f`.
pub fn invariance_residual(v: &PointVectorField) -> JetPolynomial {
    let pr = second_prolongation(v);
    let lap = &(pr.get_second(Dir::X, Dir::X) + pr.get_second(Dir::Y, Dir::Y)) + pr.get_second(Dir::Z, Dir::Z);
    on_shell(&(&lap - &(&v.phi * &JetPolynomial::var(Var::F1))))
}

/// Spatial Laplacian `∂xx + ∂yy + ∂zz`.
pub fn laplacian(p: &JetPolynomial) -> JetPolynomial {
    Dir::ALL
        .into_iter()
        .map(|d| {
            let c = Var::coordinate(d);
            p.partial(c).partial(c)
        })
        .fold(JetPolynomial::zero(), |a, b| &a + &b)
}

/// One equation of the defining system with its residual.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DefiningResidual {
    pub equation: &'static str,
    pub residual: JetPolynomial,
}

/// The thirteen published defining equations, each as `lhs − rhs`.
pub fn defining_equations(field: &PointVectorField) -> Vec<DefiningResidual> {
    let [x1, x2, x3] = &field.xi;
    let phi = &field.phi;
    let p = |q: &JetPolynomial, var: Var| q.partial(var);
    let two = int(2);
    let mixed_u = |c: Var| p(&p(phi, c), Var::U).scale(&two);
    let rows: [(&'static str, JetPolynomial); 13] = [
        ("d_u xi1 = 0", p(x1, Var::U)),
        ("d_u xi2 = 0", p(x2, Var::U)),
        ("d_u xi3 = 0", p(x3, Var::U)),
        ("d_uu phi = 0", p(&p(phi, Var::U), Var::U)),
        ("d_x xi1 = d_z xi3", &p(x1, Var::X) - &p(x3, Var::Z)),
        ("d_x xi2 + d_y xi1 = 0", &p(x2, Var::X) + &p(x1, Var::Y)),
        ("d_x xi3 + d_z xi1 = 0", &p(x3, Var::X) + &p(x1, Var::Z)),
        ("d_y xi3 + d_z xi2 = 0", &p(x3, Var::Y) + &p(x2, Var::Z)),
        ("d_z xi3 = d_y xi2", &p(x3, Var::Z) - &p(x2, Var::Y)),
        ("lap xi2 = 2 d_yu phi", &laplacian(x2) - &mixed_u(Var::Y)),
        ("lap xi3 = 2 d_zu phi", &laplacian(x3) - &mixed_u(Var::Z)),
        ("lap xi1 = 2 d_xu phi", &laplacian(x1) - &mixed_u(Var::X)),
        (
            "lap phi = 2 f d_z xi3 + f' phi",
            &(&laplacian(phi) - &(&v(Var::F) * &p(x3, Var::Z)).scale(&two)) - &(&v(Var::F1) * phi),
        ),
    ];
    rows.into_iter().map(|(equation, residual)| DefiningResidual { equation, residual }).collect()
}

/// Whether every defining residual vanishes under `mode`.
pub fn satisfies_defining_equations(v: &PointVectorField, mode: FMode) -> bool {
    defining_equations(v).iter().all(|r| mode.apply(&r.residual).is_zero())
}

/// se(3) commutator table recomputed from vector-field brackets.
pub fn recompute_commutator_table() -> [[AlgebraElement<Rational>; 6]; 6] {
    let basis: Vec<PointVectorField> = (1..=6).map(|i| PointVectorField::generator(i).expect("valid index")).collect();
    std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            let c = decompose(&bracket_fields(&basis[i], &basis[j]), &basis).expect("se(3) is closed");
            AlgebraElement::new(std::array::from_fn(|k| c[k].clone()))
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{bracket, StructureConstants};
    use crate::jet::parse::parse_polynomial;

    fn pp(s: &str) -> JetPolynomial {
        parse_polynomial(s).unwrap()
    }

    #[test]
    fn jet_coordinates_are_rejected() {
        let e = PointVectorField::new([pp("u_x"), pp("0"), pp("0")], pp("0")).unwrap_err();
        assert_eq!(e, Error::JetInVectorField("u_x".into()));
    }

    #[test]
    fn prolongation_examples() {
        let pr = second_prolongation(&PointVectorField::generator(1).unwrap());
        assert!(pr.all().all(JetPolynomial::is_zero));

        let pr = second_prolongation(&PointVectorField::generator(4).unwrap());
        assert_eq!(pr.first, [pp("0"), pp("-u_z"), pp("u_y")]);

        let pr = second_prolongation(&PointVectorField::dilation());
        assert_eq!(*pr.get_second(Dir::X, Dir::X), pp("-2*u_xx"));
        assert_eq!(*pr.get_second(Dir::Y, Dir::Y), pp("-2*u_yy"));
        assert_eq!(*pr.get_second(Dir::Z, Dir::Z), pp("-2*u_zz"));
    }

    #[test]
    fn residual_examples() {
        for i in 1..=6 {
            let g = PointVectorField::generator(i).unwrap();
            assert!(invariance_residual(&g).is_zero(), "X{i}");
            assert!(satisfies_defining_equations(&g, FMode::Generic), "X{i}");
        }
        let dil = PointVectorField::dilation();
        assert_eq!(invariance_residual(&dil), pp("-2*f"));
        let last = defining_equations(&dil).pop().unwrap();
        assert_eq!(last.residual, pp("-2*f"));
    }

    #[test]
    fn on_shell_is_idempotent() {
        let p = pp("u_zz^2*x + u_xx*u_zz - f");
        assert_eq!(on_shell(&on_shell(&p)), on_shell(&p));
    }

    #[test]
    fn brackets_match_structure_constants() {
        let table = recompute_commutator_table();
        for i in 1..=6 {
            for j in 1..=6 {
                let want = StructureConstants::SE3.bracket(&AlgebraElement::<Rational>::basis(i), &AlgebraElement::basis(j));
                assert_eq!(table[i - 1][j - 1], want);
                assert_eq!(want, bracket(&AlgebraElement::basis(i), &AlgebraElement::basis(j)));
            }
        }
    }
}

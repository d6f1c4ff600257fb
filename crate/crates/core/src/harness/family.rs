//! The binomial family in k[x, y, z, t]: `I = (t^n, z^n)`, `g = x^m t - y^m z`,
//! `K = I + (g)`, `J = (g, t^n)`, computed through Gröbner bases and minimal
//! resolutions and compared with closed forms.

use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{Field, FieldSpec};
use crate::ideal::PolyIdeal;
use crate::monomial::default_var_names;
use crate::poly::{PolyRing, Polynomial, TermOrder};
use crate::resolution::regularity_poly;
use crate::with_field;

/// Largest `m` or `n` accepted by [`family`].
pub const MAX_FAMILY_PARAM: u32 = 6;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyPrediction {
    pub reg_i_cap_g: i64,
    pub reg_k: i64,
    #[serde(rename = "reg_IJ")]
    pub reg_ij: i64,
    pub reg_i: i64,
    pub reg_j: i64,
    pub reg_g: i64,
}

impl FamilyPrediction {
    pub fn new(m: u32, n: u32) -> Self {
        let (m, n) = (m as i64, n as i64);
        FamilyPrediction {
            reg_i_cap_g: (m + 1) * n,
            reg_k: (m + 1) * n - 1,
            reg_ij: m * n + 2 * n - 1,
            reg_i: 2 * n - 1,
            reg_j: m + n,
            reg_g: m + 1,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FamilyReport {
    pub m: u32,
    pub n: u32,
    pub field: FieldSpec,
    pub computed: FamilyPrediction,
    pub predicted: FamilyPrediction,
    /// `reg(I) + reg((g))`.
    #[serde(rename = "bound_I_cap_g")]
    pub bound_i_cap_g: i64,
    /// `reg(I) + reg(J)`.
    #[serde(rename = "bound_IJ")]
    pub bound_ij: i64,
    #[serde(rename = "violation_I_cap_g")]
    pub violation_i_cap_g: bool,
    #[serde(rename = "violation_IJ")]
    pub violation_ij: bool,
    /// Both violations are expected exactly when `(m, n) != (2, 2)`.
    pub violation_expected: bool,
    pub saturation_identity: bool,
    pub elapsed_ms: f64,
}

impl FamilyReport {
    /// Do all computed values, violation flags and the saturation identity
    /// agree with the closed forms?
    pub fn matches_predictions(&self) -> bool {
        self.computed == self.predicted
            && self.violation_i_cap_g == self.violation_expected
            && self.violation_ij == self.violation_expected
            && self.saturation_identity
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut v = serde_json::to_value(self).expect("report serializes");
        let obj = v.as_object_mut().unwrap();
        obj.remove("computed");
        obj.remove("predicted");
        let c = &self.computed;
        let p = &self.predicted;
        for (key, got, want) in [
            ("reg_I_cap_g", c.reg_i_cap_g, p.reg_i_cap_g),
            ("reg_K", c.reg_k, p.reg_k),
            ("reg_IJ", c.reg_ij, p.reg_ij),
            ("reg_I", c.reg_i, p.reg_i),
            ("reg_J", c.reg_j, p.reg_j),
            ("reg_g", c.reg_g, p.reg_g),
        ] {
            obj.insert(key.into(), got.into());
            obj.insert(format!("predicted_{key}"), want.into());
        }
        obj.insert("matches_predictions".into(), self.matches_predictions().into());
        v
    }

    pub fn render_text(&self) -> String {
        let c = &self.computed;
        let p = &self.predicted;
        let mut out = format!("family m={} n={} over {}\n", self.m, self.n, self.field);
        for (label, got, want) in [
            ("reg(I cap (g))", c.reg_i_cap_g, p.reg_i_cap_g),
            ("reg(K)", c.reg_k, p.reg_k),
            ("reg(IJ)", c.reg_ij, p.reg_ij),
            ("reg(I)", c.reg_i, p.reg_i),
            ("reg(J)", c.reg_j, p.reg_j),
            ("reg((g))", c.reg_g, p.reg_g),
        ] {
            out.push_str(&format!("  {label:<15} {got:>4}  predicted {want}\n"));
        }
        out.push_str(&format!(
            "  reg(I cap (g)) > reg(I) + reg((g)) = {}: {}\n",
            self.bound_i_cap_g, self.violation_i_cap_g
        ));
        out.push_str(&format!(
            "  reg(IJ) > reg(I) + reg(J) = {}: {}\n",
            self.bound_ij, self.violation_ij
        ));
        out.push_str(&format!("  saturation identity: {}\n", self.saturation_identity));
        out.push_str(&format!("  matches predictions: {}\n", self.matches_predictions()));
        out
    }
}

/// The ideals of the family over `ring`, in the order `I, g, K, J`.
pub fn family_ideals<F: Field>(
    ring: &PolyRing<F>,
    m: u32,
    n: u32,
) -> (PolyIdeal<F>, Polynomial<F>, PolyIdeal<F>, PolyIdeal<F>) {
    let tn = ring.from_int_terms(&[(1, vec![0, 0, 0, n])]);
    let zn = ring.from_int_terms(&[(1, vec![0, 0, n, 0])]);
    let g = ring.from_int_terms(&[(1, vec![m, 0, 0, 1]), (-1, vec![0, m, 1, 0])]);
    let i = PolyIdeal::new(ring, vec![tn.clone(), zn]);
    let k = i.sum(&PolyIdeal::new(ring, vec![g.clone()]));
    let j = PolyIdeal::new(ring, vec![g.clone(), tn]);
    (i, g, k, j)
}

/// `(g) + (z, t)^n`.
pub fn expected_saturation<F: Field>(ring: &PolyRing<F>, m: u32, n: u32) -> PolyIdeal<F> {
    let g = ring.from_int_terms(&[(1, vec![m, 0, 0, 1]), (-1, vec![0, m, 1, 0])]);
    let mut gens = vec![g];
    for a in 0..=n {
        gens.push(ring.from_int_terms(&[(1, vec![0, 0, a, n - a])]));
    }
    PolyIdeal::new(ring, gens)
}

pub fn family(m: u32, n: u32, field: FieldSpec) -> Result<FamilyReport> {
    if m < 2 || n < 2 {
        return Err(Error::Domain(format!("family needs m, n >= 2, got ({m}, {n})")));
    }
    let largest = m.max(n);
    if largest > MAX_FAMILY_PARAM {
        return Err(Error::GuardExceeded {
            what: "family parameter",
            limit: MAX_FAMILY_PARAM as usize,
            got: largest as usize,
        });
    }
    with_field!(field, |f| family_in(m, n, f))
}

fn family_in<F: Field>(m: u32, n: u32, field: F) -> Result<FamilyReport> {
    let start = Instant::now();
    let ring = PolyRing::new(default_var_names(4), TermOrder::DegRevLex, field);
    let (i, g, k, j) = family_ideals(&ring, m, n);
    let principal = PolyIdeal::new(&ring, vec![g]);

    let computed = FamilyPrediction {
        reg_i_cap_g: regularity_poly(&i.intersect(&principal)?)?,
        reg_k: regularity_poly(&k)?,
        reg_ij: regularity_poly(&i.product(&j))?,
        reg_i: regularity_poly(&i)?,
        reg_j: regularity_poly(&j)?,
        reg_g: regularity_poly(&principal)?,
    };
    let sat = i.sum(&j).saturation(&PolyIdeal::maximal(&ring))?;
    let saturation_identity = sat.same_ideal(&expected_saturation(&ring, m, n));

    let bound_i_cap_g = computed.reg_i + computed.reg_g;
    let bound_ij = computed.reg_i + computed.reg_j;
    Ok(FamilyReport {
        m,
        n,
        field: ring.field().spec(),
        violation_i_cap_g: computed.reg_i_cap_g > bound_i_cap_g,
        violation_ij: computed.reg_ij > bound_ij,
        violation_expected: (m, n) != (2, 2),
        predicted: FamilyPrediction::new(m, n),
        computed,
        bound_i_cap_g,
        bound_ij,
        saturation_identity,
        elapsed_ms: start.elapsed().as_secs_f64() * 1e3,
    })
}

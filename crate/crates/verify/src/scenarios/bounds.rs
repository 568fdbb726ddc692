//! Integer evaluations of the counting inequalities that bound `q` when the
//! projective image has no regular orbit.

use crate::scenario::{obs, Case, Observation, Params, RunContext, Scenario, ScenarioError};

const Y_MAX: i128 = 200;

/// `120 y^3 + 60 y^2 + 242 >= y^6`.
pub fn poly_holds(y: i128) -> bool {
    120 * y.pow(3) + 60 * y.pow(2) + 242 >= y.pow(6)
}

/// `60 (2 (q^(1/2) + 1) + (q^(1/3) + 1)) >= q - 62` at `q = y^6`.
pub fn six_r_holds(y: i128) -> bool {
    60 * (2 * (y.pow(3) + 1) + (y.pow(2) + 1)) >= y.pow(6) - 62
}

/// `60 (s + 1) >= s^2 - 62` with `s = q^(1/2)`, i.e. `s^2 <= 60 s + 122`.
pub fn square_root_term_holds(s: i128) -> bool {
    60 * (s + 1) >= s * s - 62
}

/// `2 (s + 1) >= (s^2 - 62) / 60`, i.e. `s^2 <= 120 s + 182`.
pub fn hcf2_holds(s: i128) -> bool {
    120 * (s + 1) >= s * s - 62
}

pub struct PolyY6;

impl Scenario for PolyY6 {
    fn id(&self) -> &'static str {
        "poly_y6"
    }

    fn claim(&self) -> &'static str {
        "120y^3 + 60y^2 + 242 >= y^6 is false for every y >= 7"
    }

    fn cases(&self) -> Vec<Case> {
        vec![Case::fast(Params::new())]
    }

    fn observe(&self, _: &Params, _: &RunContext) -> Result<Vec<Observation>, ScenarioError> {
        let false_from_7 = (7..=Y_MAX).all(|y| !poly_holds(y));
        // past the scan the left side grows like y^3 and the right like y^6
        let threshold = (1..=Y_MAX).find(|&y| (y..=Y_MAX).all(|z| !poly_holds(z))).unwrap_or(0);
        Ok(vec![
            obs("false_for_7_to_200", false_from_7),
            obs("first_y_false_through_200", threshold as i64),
            obs("holds_at_1", poly_holds(1)),
            obs("sides_at_7", vec![120 * 343 + 60 * 49 + 242, 7i64.pow(6)]),
        ])
    }
}

pub struct Ineq2Hcf2;

impl Scenario for Ineq2Hcf2 {
    fn id(&self) -> &'static str {
        "ineq2_hcf2"
    }

    fn claim(&self) -> &'static str {
        "2(q^(1/2) + 1) >= (q - 62)/60 forces q^(1/2) <= 121; with only the square-root term p <= 61"
    }

    fn cases(&self) -> Vec<Case> {
        vec![Case::fast(Params::new())]
    }

    fn observe(&self, _: &Params, _: &RunContext) -> Result<Vec<Observation>, ScenarioError> {
        let s_max = (1..=1000).filter(|&s| hcf2_holds(s)).max().unwrap_or(0);
        let closed = (s_max + 1..=10_000).all(|s| !hcf2_holds(s));
        let p_max = (1..=1000).filter(|&p| square_root_term_holds(p)).max().unwrap_or(0);
        Ok(vec![
            obs("largest_root_bound", s_max as i64),
            obs("fails_beyond_bound", closed),
            obs("largest_p_for_p_squared", p_max as i64),
            obs("q_7_4_allowed", square_root_term_holds(49)),
            obs("q_11_4_excluded", !square_root_term_holds(121)),
        ])
    }
}

pub struct Ineq2SixR;

impl Scenario for Ineq2SixR {
    fn id(&self) -> &'static str {
        "ineq2_6r"
    }

    fn claim(&self) -> &'static str {
        "when 6 | r the counting bound at q = y^6 reduces to the y^6 polynomial and fails for y >= 7"
    }

    fn cases(&self) -> Vec<Case> {
        vec![Case::fast(Params::new())]
    }

    fn observe(&self, _: &Params, _: &RunContext) -> Result<Vec<Observation>, ScenarioError> {
        let agree = (1..=Y_MAX).all(|y| six_r_holds(y) == poly_holds(y));
        let fails = (7..=Y_MAX).all(|y| !six_r_holds(y));
        let largest_holding = (1..=Y_MAX).filter(|&y| six_r_holds(y)).max().unwrap_or(0);
        Ok(vec![
            obs("forms_agree_1_to_200", agree),
            obs("fails_for_7_to_200", fails),
            obs("largest_y_holding", largest_holding as i64),
        ])
    }
}

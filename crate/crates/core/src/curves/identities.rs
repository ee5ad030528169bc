//! Substitutions turning a root of each auxiliary polynomial of the Fermat
//! sextic family into a point on a simpler curve. Each is checked as an
//! identity `lhs = multiple * F_i` in `Q(T, X)`.

use alloc::vec::Vec;

use crate::poly::parse::{parse_bipoly, parse_ratfn};
use crate::poly::{BiPoly, RatFn2};

/// One checked substitution.
#[derive(Clone, Debug, PartialEq)]
pub struct CaseIdentity {
    pub case: u8,
    /// The auxiliary polynomial whose roots are transported.
    pub auxiliary: BiPoly,
    /// The target curve equation after substitution, as `lhs = 0`.
    pub lhs: RatFn2,
    /// `lhs - multiplier * auxiliary` must vanish identically.
    pub multiplier: RatFn2,
    pub description: &'static str,
}

impl CaseIdentity {
    pub fn holds(&self) -> bool {
        let aux = RatFn2::poly(self.auxiliary.clone());
        self.lhs.sub(&self.multiplier.mul(&aux)).is_zero()
    }
}

fn rf(s: &str) -> RatFn2 {
    parse_ratfn(s, "T", "X").expect("fixed expression parses")
}

fn bp(s: &str) -> BiPoly {
    parse_bipoly(s).expect("fixed expression parses")
}

/// The four substitutions, with `g = T^6 - 1`.
pub fn case_identities() -> Vec<CaseIdentity> {
    let g = rf("T^6 - 1");
    let three = rf("3");

    // v = X / (144 g): v^2 - 3 g
    let v1 = rf("X").div(&rf("144").mul(&g)).expect("nonzero");
    let lhs1 = v1.pow(2).sub(&three.mul(&g));
    let mult1 = rf("1").div(&rf("20736").mul(&g.pow(2))).expect("nonzero");

    // u = 24 g: X^2 + 3 u^2
    let u2 = rf("24").mul(&g);
    let lhs2 = rf("X^2").add(&three.mul(&u2.pow(2)));

    // v = (X + 6)/3, u = -T^2: v^2 - u^3 - 1
    let v3 = rf("(X + 6)/3");
    let u3 = rf("-T^2");
    let lhs3 = v3.pow(2).sub(&u3.pow(3)).sub(&rf("1"));

    // y = 4 T^3: y^2 - 2 (X^3 + 12 X^2 + 48 X + 72)
    let y4 = rf("4*T^3");
    let lhs4 = y4.pow(2).sub(&rf("2*(X^3 + 12*X^2 + 48*X + 72)"));

    alloc::vec![
        CaseIdentity {
            case: 1,
            auxiliary: bp("X^2 - 62208*(T^6 - 1)^3"),
            lhs: lhs1,
            multiplier: mult1,
            description: "v = X/(144(T^6 - 1)) gives v^2 = 3(T^6 - 1)",
        },
        CaseIdentity {
            case: 2,
            auxiliary: bp("X^2 + 1728*(T^6 - 1)^2"),
            lhs: lhs2,
            multiplier: rf("1"),
            description: "u = 24(T^6 - 1) gives X^2 + 3u^2 = 0",
        },
        CaseIdentity {
            case: 3,
            auxiliary: bp("X^2 + 12*X + 27 + 9*T^6"),
            lhs: lhs3,
            multiplier: rf("1/9"),
            description: "v = (X + 6)/3, u = -T^2 give v^2 = u^3 + 1",
        },
        CaseIdentity {
            case: 4,
            auxiliary: bp("X^3 + 12*X^2 + 48*X + 72 - 8*T^6"),
            lhs: lhs4,
            multiplier: rf("-2"),
            description: "y = 4T^3 gives y^2 = 2(X^3 + 12X^2 + 48X + 72)",
        },
    ]
}

/// `(case, holds)` for each substitution.
pub fn verify_case_identities() -> Vec<(u8, bool)> {
    case_identities().iter().map(|c| (c.case, c.holds())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rationals_up_to_height, Rational};

    #[test]
    fn all_cases_hold() {
        assert_eq!(verify_case_identities(), alloc::vec![(1, true), (2, true), (3, true), (4, true)]);
    }

    #[test]
    fn pointwise_oracle() {
        // Evaluate both sides at sample points away from T^6 = 1.
        let ts: Vec<Rational> = rationals_up_to_height(4)
            .into_iter()
            .filter(|t| t != &int(1) && t != &int(-1))
            .collect();
        let xs = rationals_up_to_height(3);
        for c in case_identities() {
            for t in &ts {
                for x in &xs {
                    let l = c.lhs.eval(t, x).unwrap();
                    let m = c.multiplier.eval(t, x).unwrap();
                    assert_eq!(l, m * c.auxiliary.eval2(t, x), "case {}", c.case);
                }
            }
        }
    }

    #[test]
    fn broken_substitution_fails() {
        let mut c = case_identities().remove(3);
        c.multiplier = rf("2");
        assert!(!c.holds());
        let mut c = case_identities().remove(1);
        c.auxiliary = bp("X^2 + 1727*(T^6 - 1)^2");
        assert!(!c.holds());
        assert_eq!(64 * 27, 3 * 24 * 24);
    }
}

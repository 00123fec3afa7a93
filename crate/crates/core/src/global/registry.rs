use serde::Serialize;

use super::spec::{CompleteIntersectionSpec, FiberProductSpec, Partner, SingularityMultiset};
use super::{e_str_ci, e_str_fiber_product};
use crate::algebra::{frac, rat, BigRational};
use crate::catalog::AdeType;
use crate::error::Result;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum GlobalSpec {
    CompleteIntersection(CompleteIntersectionSpec),
    FiberProduct(FiberProductSpec),
}

impl GlobalSpec {
    pub fn e_str(&self) -> Result<BigRational> {
        match self {
            GlobalSpec::CompleteIntersection(s) => e_str_ci(s),
            GlobalSpec::FiberProduct(s) => Ok(e_str_fiber_product(s)),
        }
    }
}

impl std::fmt::Display for GlobalSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            GlobalSpec::CompleteIntersection(s) => {
                let degrees: Vec<String> = s.degrees.iter().map(u32::to_string).collect();
                write!(f, "degree ({}) in P^{} with {}", degrees.join(","), s.r, s.sings)
            }
            GlobalSpec::FiberProduct(s) => {
                let fibers: Vec<String> = s.fibers().iter().map(|(b, p)| format!("I_{b} x {p}")).collect();
                write!(f, "fiber product over {}", fibers.join(", "))
            }
        }
    }
}

/// A named threefold with its recorded stringy Euler number.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RegistryEntry {
    pub name: &'static str,
    pub spec: GlobalSpec,
    #[serde(with = "crate::algebra::rational_string")]
    pub expected: BigRational,
}

fn ci(name: &'static str, r: u32, degrees: &[u32], ty: AdeType, count: u32, expected: BigRational) -> RegistryEntry {
    let sings = SingularityMultiset::single(ty, count).expect("valid registry entry");
    let spec = CompleteIntersectionSpec::new(r, degrees.to_vec(), sings).expect("valid registry entry");
    RegistryEntry { name, spec: GlobalSpec::CompleteIntersection(spec), expected }
}

fn fp(name: &'static str, fibers: Vec<(u32, Partner)>, expected: BigRational) -> RegistryEntry {
    let spec = FiberProductSpec::new(fibers).expect("valid registry entry");
    RegistryEntry { name, spec: GlobalSpec::FiberProduct(spec), expected }
}

/// The named examples: nodal hypersurfaces in `P^4`, two complete
/// intersections of two quadrics in `P^5`, and two fiber products.
pub fn example_registry() -> Vec<RegistryEntry> {
    vec![
        ci("Segre cubic", 4, &[3], AdeType::A(1), 10, rat(14)),
        ci("Burkhardt quartic", 4, &[4], AdeType::A(1), 45, rat(34)),
        ci("van Straten quintic", 4, &[5], AdeType::A(1), 130, rat(60)),
        ci("Schoen quintic", 4, &[5], AdeType::A(1), 125, rat(50)),
        ci("Hirzebruch quintic", 4, &[5], AdeType::A(1), 126, rat(52)),
        ci("Knörrer Y_1", 5, &[2, 2], AdeType::A(5), 1, rat(6)),
        ci("Knörrer Y_2", 5, &[2, 2], AdeType::D(6), 1, frac(6953, 864)),
        fp("Herfurtner Y_1", vec![(5, Partner::I(7)), (5, Partner::II)], rat(82)),
        fp("Herfurtner Y_2", vec![(8, Partner::I(7)), (2, Partner::II)], rat(116) + frac(4, 5)),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_are_unique() {
        let reg = example_registry();
        let mut names: Vec<_> = reg.iter().map(|e| e.name).collect();
        names.sort_unstable();
        names.dedup();
        assert_eq!(names.len(), reg.len());
    }

    #[test]
    fn json_export() {
        let json = serde_json::to_value(example_registry()).unwrap();
        assert_eq!(json[0]["name"], "Segre cubic");
        assert_eq!(json[0]["expected"], "14");
        assert_eq!(json[8]["expected"], "584/5");
        assert_eq!(json[8]["spec"]["kind"], "fiber-product");
        assert_eq!(example_registry()[0].spec.to_string(), "degree (3) in P^4 with 10xA_1");
    }
}

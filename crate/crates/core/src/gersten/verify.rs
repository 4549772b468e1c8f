use std::collections::HashMap;

use rayon::prelude::*;
use serde_json::{json, Value};

use super::group::EffectiveGroup;
use super::presentation::Presentation;
use super::GerstenError;
use crate::freegrp::{Generator, GeneratorWord};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelatorOutcome {
    pub relator: String,
    pub family: &'static str,
    pub passed: bool,
    pub witness: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub outcomes: Vec<RelatorOutcome>,
}

impl VerificationReport {
    pub fn pass_count(&self) -> usize {
        self.outcomes.iter().filter(|o| o.passed).count()
    }

    pub fn fail_count(&self) -> usize {
        self.outcomes.len() - self.pass_count()
    }

    pub fn all_passed(&self) -> bool {
        self.outcomes.iter().all(|o| o.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &RelatorOutcome> {
        self.outcomes.iter().filter(|o| !o.passed)
    }

    pub fn to_json(&self) -> Value {
        let entries: Vec<Value> = self
            .outcomes
            .iter()
            .map(|o| {
                let mut e = json!({
                    "relator": o.relator,
                    "family": o.family,
                    "status": if o.passed { "pass" } else { "fail" },
                });
                if let Some(w) = &o.witness {
                    e["witness"] = json!(w);
                }
                e
            })
            .collect();
        json!({ "passed": self.pass_count(), "failed": self.fail_count(), "relators": entries })
    }
}

/// Evaluates a generator word in `target` under `assignment`.
pub fn evaluate<G: EffectiveGroup>(
    word: &GeneratorWord,
    assignment: &HashMap<Generator, G::Element>,
    target: &G,
) -> Result<G::Element, GerstenError> {
    let mut acc = target.identity();
    for &(g, k) in word.factors() {
        let x = assignment
            .get(&g)
            .ok_or_else(|| GerstenError::MissingAssignment(g.to_string()))?;
        acc = target.multiply(&acc, &target.power(x, k));
    }
    Ok(acc)
}

/// Evaluates every relator of `p` under `assignment`; relators are checked
/// independently and in parallel. Failing relators are data, not errors.
pub fn verify_homomorphism<G: EffectiveGroup>(
    p: &Presentation,
    assignment: &HashMap<Generator, G::Element>,
    target: &G,
) -> Result<VerificationReport, GerstenError> {
    if let Some(g) = p.generators.iter().find(|g| !assignment.contains_key(g)) {
        return Err(GerstenError::MissingAssignment(g.to_string()));
    }
    let outcomes = p
        .relators
        .par_iter()
        .map(|r| {
            let value = evaluate(&r.word, assignment, target)?;
            let passed = target.is_identity(&value);
            Ok(RelatorOutcome {
                relator: r.word.to_string(),
                family: r.family,
                passed,
                witness: if passed { target.witness(&value) } else { None },
            })
        })
        .collect::<Result<Vec<_>, GerstenError>>()?;
    Ok(VerificationReport { outcomes })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freegrp::FreeAutomorphism;
    use crate::gersten::{gersten_presentation, IntegerMatrixGroup};

    fn abelian_assignment(p: &Presentation) -> HashMap<Generator, crate::IntMatrix> {
        p.generators
            .iter()
            .map(|&g| {
                (
                    g,
                    FreeAutomorphism::generator(g, p.rank)
                        .unwrap()
                        .abelianization(),
                )
            })
            .collect()
    }

    #[test]
    fn corrupted_assignment_fails_somewhere() {
        let p = gersten_presentation(3).unwrap();
        let mut a = abelian_assignment(&p);
        let target = IntegerMatrixGroup::new(3);
        assert!(verify_homomorphism(&p, &a, &target).unwrap().all_passed());
        let r12 = a[&Generator::Rho(1, 2)].clone();
        a.insert(Generator::Rho(2, 1), r12);
        let report = verify_homomorphism(&p, &a, &target).unwrap();
        assert!(report.fail_count() > 0);
        assert_eq!(report.pass_count() + report.fail_count(), p.relators.len());
        assert_eq!(report.to_json()["failed"], report.fail_count());
    }

    #[test]
    fn missing_generator_is_an_error() {
        let p = gersten_presentation(3).unwrap();
        let mut a = abelian_assignment(&p);
        a.remove(&Generator::Epsilon(1));
        let err = verify_homomorphism(&p, &a, &IntegerMatrixGroup::new(3)).unwrap_err();
        assert_eq!(err, GerstenError::MissingAssignment("e1".into()));
    }
}

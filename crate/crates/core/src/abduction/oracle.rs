//! Brute-force reference for [`explain`](super::explain): every assignment of
//! the whole pool, then a pairwise minimality filter.

use super::explanation::{AbducibleFact, Explanation, Observation};
use super::framework::{AbductiveFramework, Scope};
use super::search::{ExplainOptions, Minimality};
use super::AbductionError;

/// Largest pool the oracle accepts (3^12 candidates).
pub const ORACLE_LIMIT: usize = 12;

pub fn oracle_explain(
    fw: &AbductiveFramework,
    o: &Observation,
    ctx: Option<&Explanation>,
    opts: ExplainOptions,
) -> Result<Vec<Explanation>, AbductionError> {
    let pool = fw.pool();
    if pool.len() > ORACLE_LIMIT {
        return Err(AbductionError::PoolTooLarge { subjects: pool.len(), limit: ORACLE_LIMIT });
    }
    let scope = match ctx {
        Some(c) => Scope::Context(c),
        None => Scope::Open,
    };
    if opts.strict_def1 && fw.base_model().conjunction(o.to_vec().iter()).is_true() {
        return Ok(Vec::new());
    }

    // Odometer digit per subject: 0 absent, 1 true, 2 false.
    let mut digits = vec![0u8; pool.len()];
    let mut valid = Vec::new();
    loop {
        let e = Explanation::new(digits.iter().zip(pool).filter_map(|(d, s)| match d {
            1 => Some(AbducibleFact::new(s.clone(), true)),
            2 => Some(AbducibleFact::new(s.clone(), false)),
            _ => None,
        }))
        .expect("one value per subject");
        if fw.check(&e, o, scope) {
            valid.push(e);
        }
        let mut i = 0;
        loop {
            if i == digits.len() {
                return Ok(minimal(valid, opts.criterion));
            }
            digits[i] += 1;
            if digits[i] < 3 {
                break;
            }
            digits[i] = 0;
            i += 1;
        }
    }
}

fn split(e: &Explanation) -> (Vec<AbducibleFact>, Vec<AbducibleFact>) {
    e.facts().cloned().partition(|f| !f.is_inspection())
}

fn proper_subset(a: &[AbducibleFact], b: &[AbducibleFact]) -> bool {
    a.len() < b.len() && a.iter().all(|x| b.contains(x))
}

fn minimal(valid: Vec<Explanation>, criterion: Minimality) -> Vec<Explanation> {
    let keyed: Vec<_> = valid.iter().map(split).collect();
    let mut out: Vec<Explanation> = match criterion {
        Minimality::Subset => valid
            .iter()
            .enumerate()
            .filter(|(i, _)| {
                let (n, ins) = &keyed[*i];
                !keyed.iter().any(|(n2, ins2)| proper_subset(n2, n) || (n2 == n && proper_subset(ins2, ins)))
            })
            .map(|(_, e)| e.clone())
            .collect(),
        Minimality::Cardinality => {
            let best = keyed.iter().map(|(n, i)| (n.len(), i.len())).min();
            valid
                .iter()
                .zip(&keyed)
                .filter(|(_, (n, i))| Some((n.len(), i.len())) == best)
                .map(|(e, _)| e.clone())
                .collect()
        }
    };
    out.sort_by_key(|e| (e.non_inspection().len(), e.facts().cloned().collect::<Vec<_>>()));
    out
}

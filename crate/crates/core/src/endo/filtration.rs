use crate::error::{Error, Result};

use super::module::EndoModule;
use super::submodule::SubmoduleRep;

/// How a t-filtration continues past its listed stages.
#[derive(Clone, Debug)]
pub enum ExtensionRule {
    /// `x_n = im(t^n) ∩ y`; `x_0 = y`.
    Standard(SubmoduleRep),
    /// Only the listed stages are known.
    ExplicitOnly,
}

/// Descending chain `x_0 ⊇ x_1 ⊇ ... ⊇ x_B` with `t x_n ⊆ x_{n+1}`.
#[derive(Clone, Debug)]
pub struct TFiltration {
    ambient: EndoModule,
    stages: Vec<SubmoduleRep>,
    rule: ExtensionRule,
}

fn standard_stage(y: &SubmoduleRep, n: usize) -> Result<SubmoduleRep> {
    y.ambient().t_power_image(n).intersect(y)
}

impl TFiltration {
    /// Validating constructor for an explicitly listed filtration;
    /// `x_0` must be the whole module.
    pub fn explicit(ambient: &EndoModule, stages: Vec<SubmoduleRep>) -> Result<Self> {
        let f = TFiltration {
            ambient: ambient.clone(),
            stages,
            rule: ExtensionRule::ExplicitOnly,
        };
        let top = SubmoduleRep::whole(ambient);
        match f.stages.first() {
            Some(x0) if x0.same_as(&top)? => {}
            _ => {
                return Err(Error::InvalidFiltration(
                    "first stage must be the whole module".into(),
                ))
            }
        }
        f.validate()?;
        Ok(f)
    }

    /// The filtration `im(t^n) ∩ y` for `0 <= n <= bound`.
    pub fn standard(y: &SubmoduleRep, bound: usize) -> Result<Self> {
        let stages = (0..=bound)
            .map(|n| standard_stage(y, n))
            .collect::<Result<Vec<_>>>()?;
        let f = TFiltration {
            ambient: y.ambient().clone(),
            stages,
            rule: ExtensionRule::Standard(y.clone()),
        };
        f.validate()?;
        Ok(f)
    }

    fn validate(&self) -> Result<()> {
        for (n, w) in self.stages.windows(2).enumerate() {
            if w[0].ambient() != &self.ambient || w[1].ambient() != &self.ambient {
                return Err(Error::AmbientMismatch(format!("stage {n} lives elsewhere")));
            }
            if !w[1].is_subset_of(&w[0])? {
                return Err(Error::InvalidFiltration(format!(
                    "stage {} is not contained in stage {n}",
                    n + 1
                )));
            }
            if !w[0].t_multiple(1).is_subset_of(&w[1])? {
                return Err(Error::InvalidFiltration(format!(
                    "t maps stage {n} outside stage {}",
                    n + 1
                )));
            }
        }
        Ok(())
    }

    pub fn stages(&self) -> &[SubmoduleRep] {
        &self.stages
    }

    pub fn rule(&self) -> &ExtensionRule {
        &self.rule
    }

    /// Last listed index `B`.
    pub fn bound(&self) -> usize {
        self.stages.len().saturating_sub(1)
    }

    /// Least `n0` such that `t x_n = x_{n+1}` for every `n0 <= n < B`.
    ///
    /// For an explicit filtration the answer must be witnessed by at least
    /// one equality, so `n0 = B` (vacuous) gives `None`. Under the standard
    /// rule the chain is extended by one stage, which certifies `n0 = B`.
    pub fn stability_index(&self) -> Result<Option<usize>> {
        let mut stages = self.stages.clone();
        let explicit = matches!(self.rule, ExtensionRule::ExplicitOnly);
        if let ExtensionRule::Standard(y) = &self.rule {
            stages.push(standard_stage(y, stages.len())?);
        }
        let last = stages.len().saturating_sub(1);
        let mut n0 = last;
        for n in (0..last).rev() {
            if stages[n].t_multiple(1).same_as(&stages[n + 1])? {
                n0 = n;
            } else {
                break;
            }
        }
        if explicit && n0 == last {
            return Ok(None);
        }
        Ok(Some(n0))
    }
}

/// Least `n0 < bound` with `im(t^n) ∩ y = t^{n-n0} (im(t^{n0}) ∩ y)` for
/// all `n0 <= n <= bound`.
pub fn artin_rees_index(x: &EndoModule, y: &SubmoduleRep, bound: usize) -> Result<usize> {
    if y.ambient() != x {
        return Err(Error::AmbientMismatch("y is not a submodule of x".into()));
    }
    if bound == 0 {
        return Err(Error::BoundExceeded { bound });
    }
    let inter = (0..=bound)
        .map(|n| standard_stage(y, n))
        .collect::<Result<Vec<_>>>()?;
    'search: for n0 in 0..bound {
        for n in n0..=bound {
            if !inter[n].same_as(&inter[n0].t_multiple(n - n0))? {
                continue 'search;
            }
        }
        return Ok(n0);
    }
    Err(Error::BoundExceeded { bound })
}

/// Whether `n0` satisfies the Artin–Rees identity for every `n0 <= n <= bound`.
pub fn artin_rees_holds(y: &SubmoduleRep, n0: usize, bound: usize) -> Result<bool> {
    let base = standard_stage(y, n0)?;
    for n in n0..=bound {
        if !standard_stage(y, n)?.same_as(&base.t_multiple(n - n0))? {
            return Ok(false);
        }
    }
    Ok(true)
}

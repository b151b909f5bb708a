//! The six objectives of one instance, computed together.

use std::fmt;
use std::str::FromStr;

use crate::error::Result;
use crate::exact::{Enumerator, Mode, StaticSolution};
use crate::graph::{Cut, Graph, GroupPartition};
use crate::maximin::MaximinSolution;
use crate::rational::Rational;
use crate::utility::UtilityModel;

/// MV, MP, SF-MV, SF-MP, DF-MV, DF-MP.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Objective {
    Mv,
    Mp,
    SfMv,
    SfMp,
    DfMv,
    DfMp,
}

impl Objective {
    pub const ALL: [Objective; 6] =
        [Objective::Mv, Objective::Mp, Objective::SfMv, Objective::SfMp, Objective::DfMv, Objective::DfMp];

    pub fn name(self) -> &'static str {
        match self {
            Objective::Mv => "MV",
            Objective::Mp => "MP",
            Objective::SfMv => "SF-MV",
            Objective::SfMp => "SF-MP",
            Objective::DfMv => "DF-MV",
            Objective::DfMp => "DF-MP",
        }
    }

    pub fn mode(self) -> Mode {
        match self {
            Objective::Mv | Objective::SfMv | Objective::DfMv => Mode::Value,
            Objective::Mp | Objective::SfMp | Objective::DfMp => Mode::Proportion,
        }
    }
}

impl fmt::Display for Objective {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Objective {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Objective::ALL
            .into_iter()
            .find(|o| o.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown objective `{s}`"))
    }
}

/// Every objective of one instance with its witnesses.
#[derive(Debug, Clone)]
pub struct FairnessReport {
    pub mv: Rational,
    pub mp: Rational,
    pub max_witness: Cut,
    pub sf_mv: StaticSolution,
    pub sf_mp: StaticSolution,
    pub df_mv: MaximinSolution,
    pub df_mp: MaximinSolution,
}

impl FairnessReport {
    pub fn value(&self, objective: Objective) -> &Rational {
        match objective {
            Objective::Mv => &self.mv,
            Objective::Mp => &self.mp,
            Objective::SfMv => &self.sf_mv.objective,
            Objective::SfMp => &self.sf_mp.objective,
            Objective::DfMv => &self.df_mv.value,
            Objective::DfMp => &self.df_mp.value,
        }
    }
}

impl Enumerator {
    /// Computes a single objective.
    pub fn objective(
        &self,
        g: &Graph,
        model: UtilityModel,
        partition: &GroupPartition,
        objective: Objective,
    ) -> Result<Rational> {
        model.check_partition(partition)?;
        Ok(match objective {
            Objective::Mv => self.max_value(g, model)?.0,
            Objective::Mp => self.max_proportion(g, model)?.0,
            Objective::SfMv | Objective::SfMp => self.static_fair(g, model, partition, objective.mode())?.objective,
            Objective::DfMv | Objective::DfMp => self.dynamic_fair(g, model, partition, objective.mode())?.value,
        })
    }

    pub fn all_objectives(&self, g: &Graph, model: UtilityModel, partition: &GroupPartition) -> Result<FairnessReport> {
        model.check_partition(partition)?;
        let (mv, max_witness) = self.max_value(g, model)?;
        let (mp, _) = self.max_proportion(g, model)?;
        Ok(FairnessReport {
            mv,
            mp,
            max_witness,
            sf_mv: self.static_fair(g, model, partition, Mode::Value)?,
            sf_mp: self.static_fair(g, model, partition, Mode::Proportion)?,
            df_mv: self.dynamic_fair(g, model, partition, Mode::Value)?,
            df_mp: self.dynamic_fair(g, model, partition, Mode::Proportion)?,
        })
    }
}

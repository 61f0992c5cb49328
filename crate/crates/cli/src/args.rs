use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use hgcount::{MklParams, SizeGuard};

use crate::Failure;

#[derive(Debug, Parser)]
#[command(
    name = "hgcount",
    version,
    about = "Count Hopf-Galois structures between groups D_2k x C_l"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Largest holomorph the brute-force oracle may build.
    #[arg(long, default_value_t = 100_000, value_parser = clap::value_parser!(u64).range(1..), global = true)]
    pub max_hol_size: u64,
    /// Worker threads for oracle work (0 = one per core).
    #[arg(long, default_value_t = 0, global = true)]
    pub parallelism: usize,
    /// Lift the holomorph size guard.
    #[arg(long, global = true)]
    pub allow_slow: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Closed-form e(Γ,G) and e′(Γ,G).
    Count {
        /// Galois group Γ as `k,l`, `cyclic` or `dihedral`.
        #[arg(long)]
        gamma: GroupSpec,
        /// Type G as `k,l`, `cyclic` or `dihedral`.
        #[arg(long = "type")]
        r#type: GroupSpec,
        /// N, required by the `cyclic`/`dihedral` aliases.
        #[arg(long)]
        n: Option<u64>,
    },
    /// e(Γ,G) over every pair of coprime types of order 2N.
    Table {
        #[arg(long)]
        n: u64,
    },
    /// Regular-subgroup inventory of Hol(G), for one G or every coprime type of order 2N.
    ///
    /// With --g, --n only resolves the `cyclic`/`dihedral` aliases.
    Oracle {
        #[arg(long, required_unless_present = "n")]
        g: Option<GroupSpec>,
        #[arg(long)]
        n: Option<u64>,
        /// List the elements of every regular subgroup.
        #[arg(long)]
        dump: bool,
    },
    /// Compare the closed forms with the oracle on every pair of order 2N.
    Verify {
        #[arg(long)]
        n: u64,
    },
    /// Skew braces with additive group Γ.
    Braces {
        #[arg(long)]
        gamma: GroupSpec,
        #[arg(long)]
        n: Option<u64>,
    },
    /// Element-order census of Hol(G).
    Orders {
        #[arg(long)]
        g: GroupSpec,
        #[arg(long)]
        n: Option<u64>,
    },
}

/// A group given as `k,l` or by alias.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GroupSpec {
    Pair(u64, u64),
    Cyclic,
    Dihedral,
}

impl FromStr for GroupSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.trim().to_ascii_lowercase().as_str() {
            "cyclic" => return Ok(GroupSpec::Cyclic),
            "dihedral" => return Ok(GroupSpec::Dihedral),
            _ => {}
        }
        let (k, l) = s
            .split_once(',')
            .ok_or_else(|| format!("expected `k,l`, `cyclic` or `dihedral`, got `{s}`"))?;
        let parse = |x: &str| {
            x.trim()
                .parse::<u64>()
                .map_err(|_| format!("`{}` is not a non-negative integer", x.trim()))
        };
        Ok(GroupSpec::Pair(parse(k)?, parse(l)?))
    }
}

impl GroupSpec {
    pub fn resolve(&self, n: Option<u64>) -> Result<MklParams, Failure> {
        let p = match (*self, n) {
            (GroupSpec::Pair(k, l), _) => MklParams::new(k, l)?,
            (GroupSpec::Cyclic, Some(n)) => MklParams::cyclic(n)?,
            (GroupSpec::Dihedral, Some(n)) => MklParams::dihedral(n)?,
            (_, None) => return Err(Failure::usage("the `cyclic`/`dihedral` aliases need --n")),
        };
        if let Some(n) = n {
            if p.n() != n {
                return Err(Failure::usage(format!("{p} has N = {}, not {n}", p.n())));
            }
        }
        Ok(p)
    }
}

#[derive(Debug, Clone, Copy)]
pub struct RunConfig {
    pub guard: SizeGuard,
}

impl Cli {
    pub fn config(&self) -> RunConfig {
        let guard = if self.allow_slow {
            SizeGuard::unlimited()
        } else {
            SizeGuard::new(self.max_hol_size.into())
        };
        RunConfig { guard }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_specs_parse() {
        assert_eq!("3,5".parse(), Ok(GroupSpec::Pair(3, 5)));
        assert_eq!(" 1 , 15 ".parse(), Ok(GroupSpec::Pair(1, 15)));
        assert_eq!("Dihedral".parse(), Ok(GroupSpec::Dihedral));
        assert_eq!("cyclic".parse(), Ok(GroupSpec::Cyclic));
        assert!("3".parse::<GroupSpec>().is_err());
        assert!("3,-1".parse::<GroupSpec>().is_err());
    }

    #[test]
    fn aliases_resolve_against_n() {
        assert_eq!(
            GroupSpec::Cyclic.resolve(Some(15)).ok(),
            MklParams::new(1, 15).ok()
        );
        assert_eq!(
            GroupSpec::Dihedral.resolve(Some(15)).ok(),
            MklParams::new(15, 1).ok()
        );
        assert!(GroupSpec::Dihedral.resolve(None).is_err());
        assert!(GroupSpec::Pair(3, 5).resolve(Some(9)).is_err());
        assert!(GroupSpec::Pair(2, 5).resolve(None).is_err());
    }

    #[test]
    fn guard_follows_flags() {
        let cli = Cli::parse_from(["hgcount", "--max-hol-size", "50", "table", "--n", "3"]);
        assert_eq!(cli.config().guard, SizeGuard::new(50));
        let cli = Cli::parse_from(["hgcount", "table", "--n", "3", "--allow-slow"]);
        assert_eq!(cli.config().guard, SizeGuard::unlimited());
    }
}

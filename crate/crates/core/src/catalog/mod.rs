//! Built-in groups, the standard test corpus, and the group-definition
//! document format.

mod defs;

use thiserror::Error;

use crate::error::Error as GroupError;
use crate::group::{
    cyclic_group_with_cap, direct_product, perm_group, semidirect_product, ActionSpec, FiniteGroup,
    Permutation, DEFAULT_CAP,
};

pub use defs::{
    build_groups, load_groups, parse_group_defs, to_table_def, DefError, DefErrorKind, GroupDef,
    GroupSource,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("unknown group {0:?}")]
    Unknown(String),
    #[error("cannot build {name}: {source}")]
    Build { name: String, source: GroupError },
}

/// Fixed built-in names. `Z<n>` (cyclic of order n) and `Dih<n>`
/// (`Z_n ⋊ Z_2` by inversion, order 2n) are accepted for any `n ≥ 1`.
pub const BUILTIN_NAMES: &[&str] = &[
    "trivial", "Z2xZ2", "V4", "S3", "S4", "S5", "A4", "A5", "Z60", "Z4xZ3xZ5", "Z2xS3", "H1", "H2",
];

fn perm(degree: usize, cycles: &[&[usize]]) -> Permutation {
    Permutation::from_cycles(degree, cycles).expect("built-in cycles are valid")
}

fn perms(degree: usize, gens: &[&[&[usize]]], cap: usize) -> Result<FiniteGroup, GroupError> {
    let gens: Vec<_> = gens.iter().map(|c| perm(degree, c)).collect();
    perm_group(degree, &gens, cap)
}

fn multiply_by(n: usize, factor: usize) -> ActionSpec {
    ActionSpec::new(n, vec![(0..n).map(|x| x * factor % n).collect()])
}

/// `Z_n ⋊ Z_2` with the involution acting by `x ↦ −x`.
pub fn dihedral(n: usize, cap: usize) -> Result<FiniteGroup, GroupError> {
    let zn = cyclic_group_with_cap(n, cap)?;
    let z2 = cyclic_group_with_cap(2, cap)?;
    semidirect_product(
        &zn,
        &z2,
        &multiply_by(n, n.saturating_sub(1).max(1)),
        &[1],
        cap,
    )
}

/// `Z_2 × (Z_13 ⋊ Z_6)`, the generator of `Z_6` acting by `x ↦ 4x`.
pub fn h1(cap: usize) -> Result<FiniteGroup, GroupError> {
    let inner = semidirect_product(
        &cyclic_group_with_cap(13, cap)?,
        &cyclic_group_with_cap(6, cap)?,
        &multiply_by(13, 4),
        &[1],
        cap,
    )?;
    direct_product(&cyclic_group_with_cap(2, cap)?, &inner, cap)
}

/// `(Z_2 × Z_2) ⋊ (Z_13 ⋊ Z_3)`: `Z_3` acts on `Z_13` by `x ↦ 3x` and cycles
/// the three involutions of `Z_2 × Z_2`; `Z_13` acts trivially.
pub fn h2(cap: usize) -> Result<FiniteGroup, GroupError> {
    let z2 = cyclic_group_with_cap(2, cap)?;
    let v4 = direct_product(&z2, &z2, cap)?;
    let f39 = semidirect_product(
        &cyclic_group_with_cap(13, cap)?,
        &cyclic_group_with_cap(3, cap)?,
        &multiply_by(13, 3),
        &[1],
        cap,
    )?;
    // In F39 the pair (h, x) sits at h·13 + x: element 1 generates Z_13,
    // element 13 generates Z_3.
    let action = ActionSpec::new(4, vec![vec![0, 1, 2, 3], vec![0, 2, 3, 1]]);
    semidirect_product(&v4, &f39, &action, &[1, 13], cap)
}

fn build(name: &str, cap: usize) -> Option<Result<FiniteGroup, GroupError>> {
    let parse_suffix = |prefix: &str| {
        name.strip_prefix(prefix)
            .filter(|s| !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit()))
            .and_then(|s| s.parse::<usize>().ok())
            .filter(|&n| n >= 1)
    };
    Some(match name {
        "trivial" => cyclic_group_with_cap(1, cap),
        "Z2xZ2" | "V4" => {
            cyclic_group_with_cap(2, cap).and_then(|z2| direct_product(&z2, &z2, cap))
        }
        "S3" => perms(3, &[&[&[0, 1]], &[&[0, 1, 2]]], cap),
        "S4" => perms(4, &[&[&[0, 1, 2, 3]], &[&[0, 1]]], cap),
        "S5" => perms(5, &[&[&[0, 1, 2, 3, 4]], &[&[0, 1]]], cap),
        "A4" => perms(4, &[&[&[0, 1, 2]], &[&[1, 2, 3]]], cap),
        "A5" => perms(5, &[&[&[0, 1, 2, 3, 4]], &[&[0, 1, 2]]], cap),
        "Z4xZ3xZ5" => (|| {
            let z4 = cyclic_group_with_cap(4, cap)?;
            let z12 = direct_product(&z4, &cyclic_group_with_cap(3, cap)?, cap)?;
            direct_product(&z12, &cyclic_group_with_cap(5, cap)?, cap)
        })(),
        "Z2xS3" => build("S3", cap)?
            .and_then(|s3| direct_product(&cyclic_group_with_cap(2, cap)?, &s3, cap)),
        "H1" => h1(cap),
        "H2" => h2(cap),
        _ => {
            if let Some(n) = parse_suffix("Z") {
                cyclic_group_with_cap(n, cap)
            } else {
                let n = parse_suffix("Dih")?;
                dihedral(n, cap)
            }
        }
    })
}

/// Looks up a built-in group by name. The returned group carries `name`.
pub fn catalog(name: &str) -> Result<FiniteGroup, CatalogError> {
    catalog_with_cap(name, DEFAULT_CAP)
}

pub fn catalog_with_cap(name: &str, cap: usize) -> Result<FiniteGroup, CatalogError> {
    match build(name, cap) {
        None => Err(CatalogError::Unknown(name.to_string())),
        Some(Err(source)) => Err(CatalogError::Build {
            name: name.to_string(),
            source,
        }),
        Some(Ok(g)) => Ok(g.with_name(name)),
    }
}

/// Names of the standard corpus: `Z1..Z120`, the small symmetric and
/// alternating groups, `Dih3..Dih50`, and the two order-156 groups.
pub fn corpus_names() -> Vec<String> {
    let mut names: Vec<String> = (1..=120).map(|n| format!("Z{n}")).collect();
    names.extend(
        ["Z2xZ2", "S3", "S4", "S5", "A4", "A5", "Z4xZ3xZ5", "Z2xS3"]
            .iter()
            .map(|s| s.to_string()),
    );
    names.extend((3..=50).map(|n| format!("Dih{n}")));
    names.extend(["H1".to_string(), "H2".to_string()]);
    names
}

pub fn corpus() -> Vec<FiniteGroup> {
    corpus_names()
        .iter()
        .map(|name| catalog(name).expect("corpus names are built-in"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::psi::order_spectrum;

    #[test]
    fn named_groups() {
        let a5 = catalog("A5").unwrap();
        assert_eq!(a5.order(), 60);
        assert_eq!(order_spectrum(&a5).summary(), "1:1 2:15 3:20 5:24");
        assert_eq!(a5.name(), "A5");
        assert_eq!(catalog("S4").unwrap().order(), 24);
        assert_eq!(catalog("S5").unwrap().order(), 120);
        assert_eq!(catalog("A4").unwrap().order(), 12);
        assert_eq!(catalog("Dih7").unwrap().order(), 14);
        assert!(catalog("Z4xZ3xZ5").unwrap().is_cyclic());
        assert_eq!(catalog("trivial").unwrap().order(), 1);
    }

    #[test]
    fn unknown_names() {
        for name in ["", "Z", "Z0", "Zx", "Z-3", "Dih", "A6", "h1"] {
            assert!(
                matches!(catalog(name), Err(CatalogError::Unknown(_))),
                "{name:?}"
            );
        }
        assert!(matches!(catalog("Z20001"), Err(CatalogError::Build { .. })));
        assert!(matches!(
            catalog_with_cap("H1", 100),
            Err(CatalogError::Build { .. })
        ));
    }

    #[test]
    fn order_156_groups() {
        for name in ["H1", "H2"] {
            let g = catalog(name).unwrap();
            assert_eq!(g.order(), 156);
            assert!(!g.is_abelian());
            assert!(g.is_solvable());
        }
        // H1 has a central involution; H2 has trivial center.
        assert_eq!(catalog("H1").unwrap().center().order(), 2);
        assert_eq!(catalog("H2").unwrap().center().order(), 1);
    }

    #[test]
    fn corpus_is_stable() {
        let names = corpus_names();
        assert_eq!(names.len(), 120 + 8 + 48 + 2);
        let mut dedup = names.clone();
        dedup.sort();
        dedup.dedup();
        assert_eq!(dedup.len(), names.len());
    }
}

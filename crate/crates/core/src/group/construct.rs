use std::collections::{HashMap, VecDeque};

use super::{FiniteGroup, Permutation, DEFAULT_CAP, IDENTITY};
use crate::error::{Error, Result};

fn check_cap(size: usize, cap: usize) -> Result<()> {
    if size > cap {
        Err(Error::TooLarge { size, cap })
    } else {
        Ok(())
    }
}

/// `Z_n` with `i·j = (i + j) mod n`, subject to [`DEFAULT_CAP`].
pub fn cyclic_group(n: usize) -> Result<FiniteGroup> {
    cyclic_group_with_cap(n, DEFAULT_CAP)
}

pub fn cyclic_group_with_cap(n: usize, cap: usize) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(Error::ZeroOrder);
    }
    check_cap(n, cap)?;
    let mut table = Vec::with_capacity(n * n);
    for i in 0..n {
        table.extend((0..n).map(|j| ((i + j) % n) as u32));
    }
    Ok(FiniteGroup::from_trusted_table(format!("Z{n}"), n, table))
}

/// Closure of `gens` under composition, breadth first.
///
/// The identity is element 0; the rest are numbered in discovery order,
/// trying generators in the order given. The product `a·b` applies `a`
/// first, then `b`.
pub fn perm_group(degree: usize, gens: &[Permutation], cap: usize) -> Result<FiniteGroup> {
    for g in gens {
        if g.degree() != degree {
            return Err(Error::DegreeMismatch {
                expected: degree,
                found: g.degree(),
            });
        }
    }
    let gens: Vec<&Permutation> = gens.iter().filter(|g| !g.is_identity()).collect();

    let mut elements = vec![Permutation::identity(degree)];
    let mut index: HashMap<Permutation, usize> = HashMap::new();
    index.insert(elements[0].clone(), 0);
    // parent[x] = (y, gen) with x = y·gens[gen]
    let mut parent: Vec<(usize, usize)> = vec![(0, 0)];
    let mut next = 0;
    while next < elements.len() {
        for (gi, g) in gens.iter().enumerate() {
            let y = elements[next].then(g);
            if !index.contains_key(&y) {
                check_cap(elements.len() + 1, cap)?;
                index.insert(y.clone(), elements.len());
                elements.push(y);
                parent.push((next, gi));
            }
        }
        next += 1;
    }

    let n = elements.len();
    // right multiplication by each generator
    let rmul: Vec<Vec<u32>> = gens
        .iter()
        .map(|g| elements.iter().map(|x| index[&x.then(g)] as u32).collect())
        .collect();
    let mut table = vec![0u32; n * n];
    for a in 0..n {
        table[a * n] = a as u32;
        for b in 1..n {
            let (pb, gi) = parent[b];
            // a·b = (a·pb)·g
            let apb = table[a * n + pb] as usize;
            table[a * n + b] = rmul[gi][apb];
        }
    }
    Ok(FiniteGroup::from_trusted_table(
        format!("P{degree}_{n}"),
        n,
        table,
    ))
}

/// `A × B` with the pair `(a, b)` stored at index `a·|B| + b`.
pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup, cap: usize) -> Result<FiniteGroup> {
    let (na, nb) = (a.order(), b.order());
    let n = na.saturating_mul(nb);
    check_cap(n, cap)?;
    let mut table = Vec::with_capacity(n * n);
    for a1 in 0..na {
        for b1 in 0..nb {
            for a2 in 0..na {
                let a3 = a.mul(a1, a2) * nb;
                table.extend((0..nb).map(|b2| (a3 + b.mul(b1, b2)) as u32));
            }
        }
    }
    Ok(FiniteGroup::from_trusted_table(
        format!("{}x{}", a.name(), b.name()),
        n,
        table,
    ))
}

/// Action of an acting group `H` on a normal group `N`, one image array per
/// generator of `H`. `maps[i][x]` is the image of `x ∈ N` under the i-th
/// generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ActionSpec {
    pub normal_order: usize,
    pub maps: Vec<Vec<usize>>,
}

impl ActionSpec {
    pub fn new(normal_order: usize, maps: Vec<Vec<usize>>) -> Self {
        Self { normal_order, maps }
    }

    /// Every generator acts as the identity map.
    pub fn trivial(normal_order: usize, generators: usize) -> Self {
        Self::new(normal_order, vec![(0..normal_order).collect(); generators])
    }

    fn validate_automorphisms(&self, normal: &FiniteGroup) -> Result<()> {
        if self.normal_order != normal.order() {
            return Err(Error::InvalidAction(format!(
                "action declared on a group of order {}, normal subgroup has order {}",
                self.normal_order,
                normal.order()
            )));
        }
        for (i, map) in self.maps.iter().enumerate() {
            if map.len() != normal.order() {
                return Err(Error::InvalidAction(format!(
                    "map {i} has {} images, expected {}",
                    map.len(),
                    normal.order()
                )));
            }
            Permutation::new(map.clone()).map_err(|_| {
                Error::InvalidAction(format!(
                    "map {i} is not a bijection of 0..{}",
                    normal.order()
                ))
            })?;
            for x in normal.elements() {
                for y in normal.elements() {
                    if map[normal.mul(x, y)] != normal.mul(map[x], map[y]) {
                        return Err(Error::InvalidAction(format!(
                            "map {i} is not an automorphism: fails on ({x}, {y})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }
}

/// `N ⋊ H` on pairs `(h, n)`, stored at index `h·|N| + n`, with
///
/// ```text
/// (h1, n1)·(h2, n2) = (h1·h2, α(h2)(n1)·n2)
/// ```
///
/// where `α` is the right action generated by `action`: `α(h·g) = α(g) ∘ α(h)`.
/// The assignment of maps to `h_gens` is extended over all of `H` along a
/// breadth-first walk; every edge of the walk is checked, so any relation
/// among the generators that is not respected is reported.
pub fn semidirect_product(
    normal: &FiniteGroup,
    acting: &FiniteGroup,
    action: &ActionSpec,
    h_gens: &[usize],
    cap: usize,
) -> Result<FiniteGroup> {
    let (nn, nh) = (normal.order(), acting.order());
    let n = nn.saturating_mul(nh);
    check_cap(n, cap)?;
    if action.maps.len() != h_gens.len() {
        return Err(Error::InvalidAction(format!(
            "{} maps given for {} acting generators",
            action.maps.len(),
            h_gens.len()
        )));
    }
    for &g in h_gens {
        acting.check_index(g)?;
    }
    action.validate_automorphisms(normal)?;

    let mut alpha: Vec<Option<Vec<u32>>> = vec![None; nh];
    alpha[IDENTITY] = Some((0..nn as u32).collect());
    let mut queue = VecDeque::from([IDENTITY]);
    while let Some(h) = queue.pop_front() {
        let current = alpha[h].clone().expect("queued elements carry a map");
        for (&g, map) in h_gens.iter().zip(&action.maps) {
            let hg = acting.mul(h, g);
            let extended: Vec<u32> = current.iter().map(|&x| map[x as usize] as u32).collect();
            match &alpha[hg] {
                None => {
                    alpha[hg] = Some(extended);
                    queue.push_back(hg);
                }
                Some(existing) if *existing != extended => {
                    return Err(Error::InvalidAction(format!(
                        "inconsistent extension: element {hg} of the acting group receives two different automorphisms"
                    )));
                }
                Some(_) => {}
            }
        }
    }
    let alpha: Vec<Vec<u32>> = alpha
        .into_iter()
        .enumerate()
        .map(|(h, m)| {
            m.ok_or_else(|| {
                Error::InvalidAction(format!(
                    "acting generators {h_gens:?} do not generate the acting group (element {h} unreachable)"
                ))
            })
        })
        .collect::<Result<_>>()?;

    let mut table = Vec::with_capacity(n * n);
    for h1 in 0..nh {
        for n1 in 0..nn {
            for (h2, map) in alpha.iter().enumerate() {
                let h3 = acting.mul(h1, h2) * nn;
                let twisted = map[n1] as usize;
                table.extend((0..nn).map(|n2| (h3 + normal.mul(twisted, n2)) as u32));
            }
        }
    }
    Ok(FiniteGroup::from_trusted_table(
        format!("{}:{}", normal.name(), acting.name()),
        n,
        table,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::DEFAULT_CAP;

    fn spectrum(g: &FiniteGroup) -> Vec<usize> {
        let mut orders = g.element_orders();
        orders.sort_unstable();
        orders
    }

    fn inversion(n: usize) -> ActionSpec {
        ActionSpec::new(n, vec![(0..n).map(|x| (n - x) % n).collect()])
    }

    #[test]
    fn cyclic_examples() {
        assert!(matches!(cyclic_group(0), Err(Error::ZeroOrder)));
        assert!(matches!(
            cyclic_group(DEFAULT_CAP + 1),
            Err(Error::TooLarge { .. })
        ));
        assert!(matches!(
            cyclic_group_with_cap(11, 10),
            Err(Error::TooLarge { size: 11, cap: 10 })
        ));
        let trivial = cyclic_group(1).unwrap();
        assert_eq!(trivial.order(), 1);
        let z60 = cyclic_group(60).unwrap();
        let generators = z60
            .element_orders()
            .into_iter()
            .filter(|&o| o == 60)
            .count();
        let coprime = (1..=60usize)
            .filter(|i| num_integer::gcd(*i, 60) == 1)
            .count();
        assert_eq!(generators, coprime);
        assert_eq!(generators, 16);
    }

    #[test]
    fn alternating_group_from_two_cycles() {
        let five = Permutation::from_cycles(5, &[&[0, 1, 2, 3, 4]]).unwrap();
        let three = Permutation::from_cycles(5, &[&[0, 1, 2]]).unwrap();
        let a5 = perm_group(5, &[five, three], DEFAULT_CAP).unwrap();
        assert_eq!(a5.order(), 60);
        a5.check_associativity().unwrap();
    }

    #[test]
    fn symmetric_group_s3() {
        let t = Permutation::from_cycles(3, &[&[0, 1]]).unwrap();
        let c = Permutation::from_cycles(3, &[&[0, 1, 2]]).unwrap();
        let s3 = perm_group(3, &[t, c], DEFAULT_CAP).unwrap();
        assert_eq!(s3.order(), 6);
        assert!(!s3.is_abelian());
        s3.check_associativity().unwrap();
    }

    #[test]
    fn perm_group_edge_cases() {
        let trivial = perm_group(4, &[Permutation::identity(4)], DEFAULT_CAP).unwrap();
        assert_eq!(trivial.order(), 1);
        let empty = perm_group(4, &[], DEFAULT_CAP).unwrap();
        assert_eq!(empty.order(), 1);

        let t = Permutation::from_cycles(3, &[&[0, 1]]).unwrap();
        assert!(matches!(
            perm_group(4, &[t], DEFAULT_CAP),
            Err(Error::DegreeMismatch {
                expected: 4,
                found: 3
            })
        ));

        let long = Permutation::from_cycles(6, &[&[0, 1, 2, 3, 4, 5]]).unwrap();
        let swap = Permutation::from_cycles(6, &[&[0, 1]]).unwrap();
        assert!(matches!(
            perm_group(6, &[long, swap], 100),
            Err(Error::TooLarge { cap: 100, .. })
        ));
    }

    #[test]
    fn perm_group_table_matches_composition() {
        let a = Permutation::from_cycles(4, &[&[0, 1, 2, 3]]).unwrap();
        let b = Permutation::from_cycles(4, &[&[0, 2]]).unwrap();
        let g = perm_group(4, &[a.clone(), b.clone()], DEFAULT_CAP).unwrap();
        assert_eq!(g.order(), 8);
        g.check_associativity().unwrap();
        // element 1 is the first generator, element 2 the second
        let prod = g.mul(1, 2);
        let check = perm_group(4, &[a.then(&b)], DEFAULT_CAP).unwrap();
        assert_eq!(g.element_order(prod).unwrap(), check.order());
    }

    #[test]
    fn direct_products() {
        let z2 = cyclic_group(2).unwrap();
        let z3 = cyclic_group(3).unwrap();
        let z6 = direct_product(&z2, &z3, DEFAULT_CAP).unwrap();
        assert!(z6.is_cyclic());
        let v4 = direct_product(&z2, &z2, DEFAULT_CAP).unwrap();
        assert_eq!(spectrum(&v4), vec![1, 2, 2, 2]);
        let z4 = cyclic_group(4).unwrap();
        let z15 = cyclic_group(15).unwrap();
        let p = direct_product(&z4, &z15, DEFAULT_CAP).unwrap();
        assert_eq!(spectrum(&p), spectrum(&cyclic_group(60).unwrap()));
        assert!(matches!(
            direct_product(&z4, &z15, 59),
            Err(Error::TooLarge { size: 60, cap: 59 })
        ));
    }

    #[test]
    fn semidirect_s3_from_inversion() {
        let z3 = cyclic_group(3).unwrap();
        let z2 = cyclic_group(2).unwrap();
        let s3 = semidirect_product(&z3, &z2, &inversion(3), &[1], DEFAULT_CAP).unwrap();
        s3.check_associativity().unwrap();
        assert!(!s3.is_abelian());
        assert_eq!(s3.element_orders().iter().sum::<usize>(), 13);
    }

    #[test]
    fn semidirect_z13_by_z6() {
        let z13 = cyclic_group(13).unwrap();
        let z6 = cyclic_group(6).unwrap();
        let times4 = ActionSpec::new(13, vec![(0..13).map(|x| 4 * x % 13).collect()]);
        let g = semidirect_product(&z13, &z6, &times4, &[1], DEFAULT_CAP).unwrap();
        assert_eq!(g.order(), 78);
        let orders = g.element_orders();
        let outside_13: usize = orders.iter().copied().filter(|&o| o != 13).max().unwrap();
        assert_eq!(outside_13, 6);
        assert!(!orders.contains(&78));
        g.check_associativity().unwrap();
    }

    #[test]
    fn trivial_action_matches_direct_product() {
        let z4 = cyclic_group(4).unwrap();
        let z6 = cyclic_group(6).unwrap();
        let semi =
            semidirect_product(&z4, &z6, &ActionSpec::trivial(4, 1), &[1], DEFAULT_CAP).unwrap();
        let direct = direct_product(&z6, &z4, DEFAULT_CAP).unwrap();
        assert_eq!(spectrum(&semi), spectrum(&direct));
        // with the (h, n) layout the tables coincide exactly
        assert_eq!(semi.rows(), direct.rows());
    }

    #[test]
    fn semidirect_rejections() {
        let z13 = cyclic_group(13).unwrap();
        let z6 = cyclic_group(6).unwrap();
        // x -> 4x has order 6 mod 13, fine for Z6, but x -> 2x has order 12: the
        // relation g^6 = 1 is violated.
        let times2 = ActionSpec::new(13, vec![(0..13).map(|x| 2 * x % 13).collect()]);
        let err = semidirect_product(&z13, &z6, &times2, &[1], DEFAULT_CAP).unwrap_err();
        assert!(err.to_string().contains("inconsistent"), "{err}");

        // not a homomorphism
        let mut bad = (0..13).collect::<Vec<_>>();
        bad.swap(1, 2);
        let err = semidirect_product(
            &z13,
            &z6,
            &ActionSpec::new(13, vec![bad]),
            &[1],
            DEFAULT_CAP,
        )
        .unwrap_err();
        assert!(err.to_string().contains("automorphism"), "{err}");

        // element 2 generates only the even residues of Z6
        let times3 = ActionSpec::new(13, vec![(0..13).map(|x| 3 * x % 13).collect()]);
        let err = semidirect_product(&z13, &z6, &times3, &[2], DEFAULT_CAP).unwrap_err();
        assert!(err.to_string().contains("do not generate"), "{err}");

        // not a bijection
        let err = semidirect_product(
            &z13,
            &z6,
            &ActionSpec::new(13, vec![vec![0; 13]]),
            &[1],
            DEFAULT_CAP,
        )
        .unwrap_err();
        assert!(matches!(err, Error::InvalidAction(_)));

        let err = semidirect_product(
            &z13,
            &z6,
            &ActionSpec::new(13, vec![vec![0, 1, 2]]),
            &[1],
            DEFAULT_CAP,
        )
        .unwrap_err();
        assert!(err.to_string().contains("3 images"), "{err}");

        assert!(matches!(
            semidirect_product(&z13, &z6, &ActionSpec::trivial(13, 1), &[1], 77),
            Err(Error::TooLarge { size: 78, cap: 77 })
        ));
    }
}

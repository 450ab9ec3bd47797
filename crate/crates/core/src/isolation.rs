//! Isolation of cohomological representations, decided on Young diagrams.
//!
//! Two representations are neighbours when their skew diagrams differ by a
//! single cell (two cells for orthogonal groups), compared as sets of
//! absolute positions in the `p × q` box. A representation is isolated in the
//! unitary dual when it has no neighbour; it is isolated under `d = 0` when
//! no neighbour is obtained by adding cells to its skew diagram.

use std::collections::BTreeSet;
use std::fmt;

use crate::cohomreps::{
    enumerate_cached, sp_flag0_allowed, CohRep, CohRepError, Family, FamilyKind,
};
use crate::partitions::{boundary_path, Partition, Rectangle, Step};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Criterion {
    Explicit,
    Search,
}

impl fmt::Display for Criterion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Criterion::Explicit => "explicit",
            Criterion::Search => "search",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsolationVerdict {
    pub isolated: bool,
    /// Neighbouring representations that prevent isolation, sorted.
    pub witnesses: Vec<CohRep>,
    pub criterion: Criterion,
}

impl IsolationVerdict {
    fn from_witnesses(mut witnesses: Vec<CohRep>, criterion: Criterion) -> Self {
        witnesses.sort_by(|a, b| (&a.lambda, &a.mu, a.flag).cmp(&(&b.lambda, &b.mu, b.flag)));
        witnesses.dedup();
        IsolationVerdict {
            isolated: witnesses.is_empty(),
            witnesses,
            criterion,
        }
    }
}

fn expect_kind(rep: &CohRep, expected: FamilyKind) -> Result<(), CohRepError> {
    if rep.kind() == expected {
        Ok(())
    } else {
        Err(CohRepError::WrongFamily {
            expected,
            found: rep.kind(),
        })
    }
}

/// Representations of the same family whose skew diagram differs from the
/// one of `rep` in exactly `cells` positions. Each skew diagram is reported
/// once; for `Sp` the flag is not compared.
fn neighbours(rep: &CohRep, cells: usize) -> Vec<CohRep> {
    let all = enumerate_cached(rep.family);
    let size = rep.decomposition.boxes.len();
    let mut seen = BTreeSet::new();
    all.iter()
        .filter(|other| other.decomposition.boxes.len().abs_diff(size) <= cells)
        .filter(|other| {
            other
                .decomposition
                .boxes
                .symmetric_difference_len(&rep.decomposition.boxes)
                == cells
        })
        .filter(|other| seen.insert((other.lambda.clone(), other.mu.clone())))
        .cloned()
        .collect()
}

/// Picks the representative reported for an `Sp` neighbour: flag 0 when it
/// exists, flag 1 otherwise.
fn sp_representative(family: Family, lambda: &Partition, mu: &Partition) -> CohRep {
    let probe = CohRep::symplectic(family.p, family.q, lambda.clone(), mu.clone(), 1)
        .expect("neighbours are compatible pairs");
    let flag = if sp_flag0_allowed(lambda, mu, family.p, &probe.decomposition) {
        0
    } else {
        1
    };
    CohRep::symplectic(family.p, family.q, lambda.clone(), mu.clone(), flag).expect("flag checked")
}

/// Exhaustive one-cell neighbour search in the unitary dual of `U(p,q)`.
pub fn isolated_u_search(rep: &CohRep) -> Result<IsolationVerdict, CohRepError> {
    expect_kind(rep, FamilyKind::U)?;
    Ok(IsolationVerdict::from_witnesses(
        neighbours(rep, 1),
        Criterion::Search,
    ))
}

/// A corner shared by the boundaries of `λ` and `μ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum SharedCorner {
    /// The cell `(row, col)` is removable from both diagrams.
    Removable(u32, u32),
    /// The cell `(row, col)` is addable to both diagrams.
    Addable(u32, u32),
}

fn shared_corners(lambda: &Partition, mu: &Partition, p: u32, q: u32) -> Vec<SharedCorner> {
    let a = boundary_path(lambda, p, q);
    let b = boundary_path(mu, p, q);
    let mut out = Vec::new();
    let mut ups = [0u32; 2];
    for k in 1..a.len() {
        for (u, path) in ups.iter_mut().zip([&a, &b]) {
            if path[k - 1] == Step::Up {
                *u += 1;
            }
        }
        if ups[0] != ups[1] || a[k - 1] != b[k - 1] || a[k] != b[k] || a[k - 1] == a[k] {
            continue;
        }
        // Both paths sit at column x, height u above the bottom edge.
        let u = ups[0];
        let x = k as u32 - u;
        out.push(match a[k] {
            Step::Up => SharedCorner::Removable(p - u, x),
            Step::Right => SharedCorner::Addable(p - u + 1, x + 1),
        });
    }
    out
}

fn with_part(lambda: &Partition, row: u32, delta: i32) -> Partition {
    let mut parts = lambda.padded(row.max(lambda.length() as u32));
    let i = row as usize - 1;
    parts[i] = (parts[i] as i32 + delta) as u32;
    Partition::new(parts).expect("corner moves keep the parts decreasing")
}

/// The explicit criterion: every rectangle is at least `2 × 2`, and the
/// boundaries of `λ` and `μ` share no corner.
///
/// Each failure of the criterion comes with a concrete neighbour: a thin
/// rectangle loses its top-left cell, and a shared corner cell is split off
/// as a new `1 × 1` block.
pub fn isolated_u_explicit(rep: &CohRep) -> Result<IsolationVerdict, CohRepError> {
    expect_kind(rep, FamilyKind::U)?;
    let (p, q) = (rep.family.p, rep.family.q);
    let mut moves: Vec<(Partition, Partition)> = Vec::new();

    for (_, top_left) in thin_rectangles(rep) {
        moves.push((with_part(&rep.lambda, top_left.0, 1), rep.mu.clone()));
    }
    for corner in shared_corners(&rep.lambda, &rep.mu, p, q) {
        moves.push(match corner {
            SharedCorner::Removable(row, _) => (with_part(&rep.lambda, row, -1), rep.mu.clone()),
            SharedCorner::Addable(row, _) => (rep.lambda.clone(), with_part(&rep.mu, row, 1)),
        });
    }
    let witnesses = moves
        .into_iter()
        .map(|(l, m)| CohRep::unitary(p, q, l, m).expect("corner moves keep the pair compatible"))
        .collect();
    Ok(IsolationVerdict::from_witnesses(
        witnesses,
        Criterion::Explicit,
    ))
}

/// Rectangles with a side of length 1, with their top-left cell.
fn thin_rectangles(rep: &CohRep) -> Vec<(Rectangle, (u32, u32))> {
    let boxes = &rep.decomposition.boxes;
    let mut out = Vec::new();
    let mut seen = BTreeSet::new();
    for (r, c) in boxes.iter() {
        // A top-left cell has no skew neighbour above or to the left.
        if boxes.contains((r.wrapping_sub(1), c)) || boxes.contains((r, c.wrapping_sub(1))) {
            continue;
        }
        let rows = (r..).take_while(|&rr| boxes.contains((rr, c))).count() as u32;
        let cols = (c..).take_while(|&cc| boxes.contains((r, cc))).count() as u32;
        if rows.min(cols) == 1 && seen.insert((r, c)) {
            out.push((Rectangle::new(rows, cols), (r, c)));
        }
    }
    out
}

/// Two-cell neighbour search among orthogonal partitions of `O(p,q)`.
pub fn isolated_o(rep: &CohRep) -> Result<IsolationVerdict, CohRepError> {
    expect_kind(rep, FamilyKind::O)?;
    Ok(IsolationVerdict::from_witnesses(
        neighbours(rep, 2),
        Criterion::Search,
    ))
}

/// Isolation for `Sp(p,q)`. Flag 1 behaves as for `U(p,q)`; flag 0 requires
/// `p_1 + q_1 ≥ 3` and only counts neighbours keeping the first rectangle.
pub fn isolated_sp(rep: &CohRep) -> Result<IsolationVerdict, CohRepError> {
    expect_kind(rep, FamilyKind::Sp)?;
    let family = rep.family;
    let lift = |n: Vec<CohRep>| -> Vec<CohRep> {
        n.iter()
            .map(|c| sp_representative(family, &c.lambda, &c.mu))
            .collect()
    };
    let close = neighbours(rep, 1);
    match rep.quaternionic_block() {
        None => Ok(IsolationVerdict::from_witnesses(
            lift(close),
            Criterion::Search,
        )),
        Some(first) if first.rows + first.cols < 3 => Ok(IsolationVerdict::from_witnesses(
            lift(close),
            Criterion::Explicit,
        )),
        Some(first) => {
            let kept = close
                .into_iter()
                .filter(|c| c.decomposition.first() == Some(first))
                .collect();
            Ok(IsolationVerdict::from_witnesses(
                lift(kept),
                Criterion::Search,
            ))
        }
    }
}

/// Isolation in the unitary dual with the default method of each family.
pub fn isolated(rep: &CohRep) -> IsolationVerdict {
    match rep.kind() {
        FamilyKind::U => isolated_u_search(rep),
        FamilyKind::O => isolated_o(rep),
        FamilyKind::Sp => isolated_sp(rep),
    }
    .expect("dispatch matches the family")
}

/// Isolation under `d = 0`: no representation whose skew diagram is obtained
/// from the one of `rep` by adding one cell (two for `O`), keeping the first
/// rectangle when `rep` carries a quaternionic block.
pub fn isolated_d0(rep: &CohRep) -> IsolationVerdict {
    let extra = if rep.kind() == FamilyKind::O { 2 } else { 1 };
    let size = rep.decomposition.boxes.len();
    let family = rep.family;
    let mut witnesses: Vec<CohRep> = neighbours(rep, extra)
        .into_iter()
        .filter(|c| c.decomposition.boxes.len() == size + extra)
        .filter(|c| rep.decomposition.boxes.is_subset(&c.decomposition.boxes))
        .collect();
    if let Some(first) = rep.quaternionic_block() {
        witnesses.retain(|c| c.decomposition.first() == Some(first));
    }
    if family.kind == FamilyKind::Sp {
        witnesses = witnesses
            .iter()
            .map(|c| sp_representative(family, &c.lambda, &c.mu))
            .collect();
    }
    IsolationVerdict::from_witnesses(witnesses, Criterion::Search)
}

/// `p ≥ 2`, `q ≥ 2r + 2` and `p + q ≥ 2r + 5`: the inequalities under which
/// `A((r^p))` of `O(p,q)` is isolated.
pub fn t1intro_inequalities(p: u32, q: u32, r: u32) -> bool {
    p >= 2 && q >= 2 * r + 2 && p + q >= 2 * r + 5
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohomreps::enumerate;

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn u(p: u32, q: u32, l: &str, m: &str) -> CohRep {
        CohRep::unitary(p, q, part(l), part(m)).unwrap()
    }

    #[test]
    fn unitary_search_examples() {
        assert!(isolated_u_search(&u(2, 2, "[]", "[2,2]")).unwrap().isolated);
        for q in 1..5 {
            let triv =
                CohRep::unitary(1, q, Partition::empty(), Partition::rectangle(1, q)).unwrap();
            assert!(!isolated_u_search(&triv).unwrap().isolated, "U(1,{q})");
        }
        for rep in enumerate(Family::unitary(2, 3).unwrap()) {
            if rep.is_discrete_series() {
                assert!(!isolated_u_search(&rep).unwrap().isolated, "{rep}");
            }
        }
    }

    #[test]
    fn unitary_explicit_examples() {
        let v = isolated_u_explicit(&u(3, 3, "[]", "[3,3,3]")).unwrap();
        assert!(v.isolated);
        assert_eq!(v.criterion, Criterion::Explicit);
        assert!(
            !isolated_u_explicit(&u(2, 2, "[1]", "[2,1]"))
                .unwrap()
                .isolated
        );
        assert!(
            !isolated_u_explicit(&u(2, 2, "[1]", "[1]"))
                .unwrap()
                .isolated
        );
    }

    #[test]
    fn explicit_witnesses_are_search_witnesses() {
        for (p, q) in [(2, 2), (2, 3), (3, 3), (2, 4)] {
            for rep in enumerate(Family::unitary(p, q).unwrap()) {
                let e = isolated_u_explicit(&rep).unwrap();
                let s = isolated_u_search(&rep).unwrap();
                assert_eq!(e.isolated, s.isolated, "{rep}");
                assert!(e.witnesses.iter().all(|w| s.witnesses.contains(w)), "{rep}");
            }
        }
    }

    #[test]
    fn shared_corner_positions() {
        // λ = μ = [1] in 2×2: removable (1,1), addable (2,1) and (1,2).
        let c = shared_corners(&part("[1]"), &part("[1]"), 2, 2);
        assert_eq!(
            c,
            [
                SharedCorner::Addable(2, 1),
                SharedCorner::Removable(1, 1),
                SharedCorner::Addable(1, 2)
            ]
        );
        assert!(shared_corners(&Partition::empty(), &part("[2,2]"), 2, 2).is_empty());
    }

    #[test]
    fn orthogonal_examples() {
        let o = CohRep::orthogonal(3, 4, part("[1,1,1]")).unwrap();
        assert!(isolated_o(&o).unwrap().isolated);
        let o = CohRep::orthogonal(2, 4, part("[1,1]")).unwrap();
        let v = isolated_o(&o).unwrap();
        assert!(!v.isolated);
        assert!(v.witnesses.iter().any(|w| w.lambda == part("[2,1]")));
        for q in 2..6 {
            let o = CohRep::orthogonal(1, q, Partition::empty()).unwrap();
            assert!(!isolated_o(&o).unwrap().isolated, "O(1,{q})");
        }
    }

    #[test]
    fn symplectic_examples() {
        let r = CohRep::symplectic(1, 1, Partition::empty(), part("[1]"), 0).unwrap();
        let v = isolated_sp(&r).unwrap();
        assert!(!v.isolated);
        assert_eq!(v.criterion, Criterion::Explicit);
        for rep in enumerate(Family::symplectic(2, 2).unwrap()) {
            if rep.lambda == rep.mu {
                assert!(!isolated_sp(&rep).unwrap().isolated, "{rep}");
            }
        }
        let r = CohRep::symplectic(2, 3, Partition::empty(), part("[3,3]"), 0).unwrap();
        let v = isolated_sp(&r).unwrap();
        assert_eq!(v.criterion, Criterion::Search);
        assert!(v.isolated);
    }

    #[test]
    fn d0_examples() {
        let triv = u(2, 2, "[]", "[2,2]");
        assert!(isolated_d0(&triv).isolated);
        let ds = u(2, 2, "[2,1]", "[2,1]");
        let v = isolated_d0(&ds);
        assert!(!v.isolated);
        for w in &v.witnesses {
            assert_eq!(w.decomposition.boxes.len(), 1);
        }
    }

    #[test]
    fn t1intro_examples() {
        assert!(t1intro_inequalities(3, 4, 1));
        assert!(!t1intro_inequalities(2, 4, 1));
        for (p, q) in [(2, 3), (3, 2), (1, 5), (2, 2)] {
            assert_eq!(
                t1intro_inequalities(p, q, 0),
                p >= 2 && q >= 2 && p + q >= 5
            );
        }
    }

    #[test]
    fn wrong_family_is_reported() {
        let o = CohRep::orthogonal(2, 2, Partition::empty()).unwrap();
        assert!(isolated_u_search(&o).is_err());
        assert!(isolated_sp(&o).is_err());
        assert!(isolated_o(&u(1, 1, "[]", "[1]")).is_err());
    }
}

//! Young-diagram combinatorics inside a `p × q` box.
//!
//! Cells are addressed by 1-based `(row, col)` coordinates, rows counted from
//! the top (English convention). A partition `λ ⊆ p × q` occupies the cells
//! `{(r, c) : c ≤ λ_r}`; the skew diagram `μ/λ` is `{(r, c) : λ_r < c ≤ μ_r}`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("parts must be weakly decreasing, got {0:?}")]
    NotDecreasing(Vec<u32>),
    #[error("partition {partition} does not fit in the {rows}x{cols} box")]
    BoxOverflow {
        partition: Partition,
        rows: u32,
        cols: u32,
    },
    #[error("{inner} is not contained in {outer}")]
    NotNested { inner: Partition, outer: Partition },
    #[error("skew diagram {outer}/{inner} is not a union of corner-touching rectangles")]
    NotCompatible { inner: Partition, outer: Partition },
    #[error("{partition} is not orthogonal in the {rows}x{cols} box")]
    NotOrthogonal {
        partition: Partition,
        rows: u32,
        cols: u32,
    },
    #[error("rectangles of the complement skew of {partition} in {rows}x{cols} are not palindromic: {rectangles:?}")]
    PalindromeViolation {
        partition: Partition,
        rows: u32,
        cols: u32,
        rectangles: Vec<Rectangle>,
    },
    #[error("cannot parse a partition from {0:?}")]
    Parse(String),
}

/// A weakly decreasing sequence of nonnegative integers, stored without
/// trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Result<Self, PartitionError> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(PartitionError::NotDecreasing(parts));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The rectangular partition `(cols^rows)`.
    pub fn rectangle(rows: u32, cols: u32) -> Self {
        if cols == 0 {
            return Self::empty();
        }
        Partition {
            parts: vec![cols; rows as usize],
        }
    }

    /// Nonzero parts, largest first.
    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// `λ_{i+1}` (0-based index); zero past the length.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn length(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Parts padded with zeros to exactly `rows` entries. Panics if the
    /// partition is longer than `rows`.
    pub fn padded(&self, rows: u32) -> Vec<u32> {
        assert!(self.length() <= rows as usize);
        (0..rows as usize).map(|i| self.part(i)).collect()
    }

    pub fn fits_in(&self, rows: u32, cols: u32) -> bool {
        self.length() <= rows as usize && self.part(0) <= cols
    }

    /// `other ⊆ self` as Young diagrams.
    pub fn contains(&self, other: &Partition) -> bool {
        other.length() <= self.length() && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.part(0) as usize;
        let parts = (0..cols)
            .map(|c| self.parts.iter().filter(|&&x| x as usize > c).count() as u32)
            .collect();
        Partition { parts }
    }

    /// The complement of the diagram in `rows × cols`, rotated by 180°.
    pub fn complement(&self, rows: u32, cols: u32) -> Result<Partition, PartitionError> {
        self.check_box(rows, cols)?;
        let parts = (0..rows as usize)
            .rev()
            .map(|i| cols - self.part(i))
            .collect();
        Partition::new(parts)
    }

    pub(crate) fn check_box(&self, rows: u32, cols: u32) -> Result<(), PartitionError> {
        if self.fits_in(rows, cols) {
            Ok(())
        } else {
            Err(PartitionError::BoxOverflow {
                partition: self.clone(),
                rows,
                cols,
            })
        }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, part) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{part}")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Partition {
    type Err = PartitionError;

    /// Accepts `[3,1]`, `[]`, `3,1` and tolerates whitespace and trailing zeros.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || PartitionError::Parse(s.to_string());
        let t = s.trim();
        let inner = match (t.strip_prefix('['), t.strip_suffix(']')) {
            (Some(_), Some(_)) => &t[1..t.len() - 1],
            (None, None) => t,
            _ => return Err(err()),
        };
        let inner = inner.trim();
        if inner.is_empty() || inner == "∅" {
            return Ok(Partition::empty());
        }
        let parts = inner
            .split(',')
            .map(|x| x.trim().parse::<u32>().map_err(|_| err()))
            .collect::<Result<Vec<_>, _>>()?;
        Partition::new(parts)
    }
}

/// An `rows × cols` block of a skew diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rectangle {
    pub rows: u32,
    pub cols: u32,
}

impl Rectangle {
    pub fn new(rows: u32, cols: u32) -> Self {
        assert!(rows >= 1 && cols >= 1, "rectangles are nonempty");
        Rectangle { rows, cols }
    }

    pub fn area(&self) -> u32 {
        self.rows * self.cols
    }

    pub fn perimeter(&self) -> u32 {
        2 * (self.rows + self.cols)
    }
}

impl fmt::Display for Rectangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{}", self.rows, self.cols)
    }
}

/// Absolute cell positions, 1-based, inside the ambient box.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct BoxSet(BTreeSet<(u32, u32)>);

impl BoxSet {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, cell: (u32, u32)) -> bool {
        self.0.contains(&cell)
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.0.iter().copied()
    }

    pub fn is_subset(&self, other: &BoxSet) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn symmetric_difference_len(&self, other: &BoxSet) -> usize {
        self.0.symmetric_difference(&other.0).count()
    }
}

impl FromIterator<(u32, u32)> for BoxSet {
    fn from_iter<I: IntoIterator<Item = (u32, u32)>>(iter: I) -> Self {
        BoxSet(iter.into_iter().collect())
    }
}

/// A compatible skew diagram cut into its maximal rectangles, listed from the
/// top-right block to the bottom-left block.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SkewDecomposition {
    pub rectangles: Vec<Rectangle>,
    pub boxes: BoxSet,
}

impl SkewDecomposition {
    pub fn first(&self) -> Option<Rectangle> {
        self.rectangles.first().copied()
    }

    pub fn is_empty(&self) -> bool {
        self.rectangles.is_empty()
    }

    pub fn single(&self) -> Option<Rectangle> {
        match self.rectangles.as_slice() {
            [r] => Some(*r),
            _ => None,
        }
    }

    /// `Σ p_i q_i`.
    pub fn area(&self) -> u32 {
        self.rectangles.iter().map(Rectangle::area).sum()
    }
}

/// Decomposition of `λ̂/λ` for an orthogonal partition:
/// `(a_1×b_1) * … * (a_m×b_m) * (p_0×q_0) * (a_m×b_m) * … * (a_1×b_1)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OrthogonalDecomposition {
    pub skew: SkewDecomposition,
    /// `a_i × b_i`, `i = 1..m`, outermost first.
    pub pairs: Vec<Rectangle>,
    /// `p_0 × q_0`; `None` when the pairs exhaust the skew diagram.
    pub center: Option<Rectangle>,
}

impl OrthogonalDecomposition {
    pub fn center_dims(&self) -> (u32, u32) {
        self.center.map_or((0, 0), |r| (r.rows, r.cols))
    }
}

pub fn conjugate(lambda: &Partition) -> Partition {
    lambda.conjugate()
}

pub fn complement(lambda: &Partition, p: u32, q: u32) -> Result<Partition, PartitionError> {
    lambda.complement(p, q)
}

fn check_nested(lambda: &Partition, mu: &Partition, p: u32, q: u32) -> Result<(), PartitionError> {
    mu.check_box(p, q)?;
    if !mu.contains(lambda) {
        return Err(PartitionError::NotNested {
            inner: lambda.clone(),
            outer: mu.clone(),
        });
    }
    Ok(())
}

pub fn skew_box_set(
    lambda: &Partition,
    mu: &Partition,
    p: u32,
    q: u32,
) -> Result<BoxSet, PartitionError> {
    check_nested(lambda, mu, p, q)?;
    Ok(skew_cells(lambda, mu))
}

fn skew_cells(lambda: &Partition, mu: &Partition) -> BoxSet {
    (0..mu.length())
        .flat_map(|i| {
            let row = i as u32 + 1;
            (lambda.part(i) + 1..=mu.part(i)).map(move |c| (row, c))
        })
        .collect()
}

pub fn rectangle_decomposition(
    lambda: &Partition,
    mu: &Partition,
    p: u32,
    q: u32,
) -> Result<SkewDecomposition, PartitionError> {
    check_nested(lambda, mu, p, q)?;
    let boxes = skew_cells(lambda, mu);
    let not_compatible = || PartitionError::NotCompatible {
        inner: lambda.clone(),
        outer: mu.clone(),
    };

    // Flood-fill edge-connected components; each must fill its bounding box.
    let mut seen = BTreeSet::new();
    let mut blocks: Vec<(u32, Rectangle)> = Vec::new();
    for start in boxes.iter() {
        if !seen.insert(start) {
            continue;
        }
        let mut stack = vec![start];
        let (mut r0, mut r1, mut c0, mut c1) = (start.0, start.0, start.1, start.1);
        let mut size = 0u32;
        while let Some((r, c)) = stack.pop() {
            size += 1;
            r0 = r0.min(r);
            r1 = r1.max(r);
            c0 = c0.min(c);
            c1 = c1.max(c);
            let neighbours = [
                (r.wrapping_sub(1), c),
                (r + 1, c),
                (r, c.wrapping_sub(1)),
                (r, c + 1),
            ];
            for n in neighbours {
                if boxes.contains(n) && seen.insert(n) {
                    stack.push(n);
                }
            }
        }
        let rect = Rectangle::new(r1 - r0 + 1, c1 - c0 + 1);
        if rect.area() != size {
            return Err(not_compatible());
        }
        blocks.push((c0, rect));
    }
    blocks.sort_by_key(|b| std::cmp::Reverse(b.0));
    Ok(SkewDecomposition {
        rectangles: blocks.into_iter().map(|(_, r)| r).collect(),
        boxes,
    })
}

pub fn is_compatible(lambda: &Partition, mu: &Partition, p: u32, q: u32) -> bool {
    rectangle_decomposition(lambda, mu, p, q).is_ok()
}

pub fn orthogonal_decomposition(
    lambda: &Partition,
    p: u32,
    q: u32,
) -> Result<OrthogonalDecomposition, PartitionError> {
    let hat = lambda.complement(p, q)?;
    let skew = rectangle_decomposition(lambda, &hat, p, q).map_err(|e| match e {
        PartitionError::NotNested { .. } | PartitionError::NotCompatible { .. } => {
            PartitionError::NotOrthogonal {
                partition: lambda.clone(),
                rows: p,
                cols: q,
            }
        }
        other => other,
    })?;
    let rects = &skew.rectangles;
    let k = rects.len();
    if (0..k).any(|i| rects[i] != rects[k - 1 - i]) {
        return Err(PartitionError::PalindromeViolation {
            partition: lambda.clone(),
            rows: p,
            cols: q,
            rectangles: rects.clone(),
        });
    }
    let pairs = rects[..k / 2].to_vec();
    let center = (k % 2 == 1).then(|| rects[k / 2]);
    Ok(OrthogonalDecomposition {
        skew,
        pairs,
        center,
    })
}

pub fn is_orthogonal(lambda: &Partition, p: u32, q: u32) -> bool {
    orthogonal_decomposition(lambda, p, q).is_ok()
}

/// All partitions inside `p × q`, in increasing lexicographic order of the
/// zero-padded part vectors.
pub fn enumerate_partitions_in_box(p: u32, q: u32) -> PartitionsInBox {
    PartitionsInBox {
        cols: q,
        current: Some(vec![0; p as usize]),
    }
}

#[derive(Debug, Clone)]
pub struct PartitionsInBox {
    cols: u32,
    current: Option<Vec<u32>>,
}

impl Iterator for PartitionsInBox {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let cur = self.current.take()?;
        let out = Partition::new(cur.clone()).expect("generator keeps parts decreasing");
        let mut next = cur;
        // Lexicographic successor: bump the rightmost part that can grow and
        // reset everything after it.
        let bump = (0..next.len())
            .rev()
            .find(|&i| next[i] < self.cols && (i == 0 || next[i] < next[i - 1]));
        if let Some(i) = bump {
            next[i] += 1;
            next[i + 1..].iter_mut().for_each(|x| *x = 0);
            self.current = Some(next);
        }
        Some(out)
    }
}

/// All compatible pairs `(λ, μ)` in `p × q`, ordered by `(λ, μ)` in box order.
pub fn compatible_pairs(p: u32, q: u32) -> Vec<(Partition, Partition, SkewDecomposition)> {
    let all: Vec<Partition> = enumerate_partitions_in_box(p, q).collect();
    let mut out = Vec::new();
    for lambda in &all {
        for mu in all.iter().filter(|mu| mu.contains(lambda)) {
            if let Ok(d) = rectangle_decomposition(lambda, mu, p, q) {
                out.push((lambda.clone(), mu.clone(), d));
            }
        }
    }
    out
}

/// All orthogonal partitions in `p × q`, in box order.
pub fn orthogonal_partitions(
    p: u32,
    q: u32,
) -> Result<Vec<(Partition, OrthogonalDecomposition)>, PartitionError> {
    let mut out = Vec::new();
    for lambda in enumerate_partitions_in_box(p, q) {
        match orthogonal_decomposition(&lambda, p, q) {
            Ok(d) => out.push((lambda, d)),
            Err(PartitionError::NotOrthogonal { .. }) => {}
            Err(e) => return Err(e),
        }
    }
    Ok(out)
}

/// Step of the boundary path of a diagram, walked from the bottom-left corner
/// `(p, 0)` of the box to its top-right corner `(0, q)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Step {
    Right,
    Up,
}

pub(crate) fn boundary_path(lambda: &Partition, p: u32, q: u32) -> Vec<Step> {
    let mut steps = Vec::with_capacity((p + q) as usize);
    let mut col = 0;
    for i in (0..p as usize).rev() {
        let part = lambda.part(i);
        steps.extend(std::iter::repeat_n(Step::Right, (part - col) as usize));
        col = part;
        steps.push(Step::Up);
    }
    steps.extend(std::iter::repeat_n(Step::Right, (q - col) as usize));
    steps
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn cells(v: &[(u32, u32)]) -> BoxSet {
        v.iter().copied().collect()
    }

    #[test]
    fn canonical_form_strips_zeros() {
        assert_eq!(Partition::new(vec![3, 1, 0, 0]).unwrap(), part("[3,1]"));
        assert_eq!(part("[0]"), Partition::empty());
        assert_eq!(part("[]").to_string(), "[]");
        assert!(matches!(
            Partition::new(vec![1, 2]),
            Err(PartitionError::NotDecreasing(_))
        ));
        assert!(part("[3, 1]").parts() == [3, 1]);
        assert!("[a]".parse::<Partition>().is_err());
        assert!("[1".parse::<Partition>().is_err());
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(part("[3,1]").conjugate(), part("[2,1,1]"));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(
            Partition::rectangle(2, 5).conjugate(),
            Partition::rectangle(5, 2)
        );
    }

    #[test]
    fn complement_examples() {
        assert_eq!(Partition::empty().complement(2, 2).unwrap(), part("[2,2]"));
        assert_eq!(part("[1]").complement(2, 2).unwrap(), part("[2,1]"));
        assert_eq!(part("[2,1]").complement(2, 2).unwrap(), part("[1]"));
        assert!(matches!(
            part("[3]").complement(2, 2),
            Err(PartitionError::BoxOverflow { .. })
        ));
        assert!(matches!(
            part("[1,1,1]").complement(2, 2),
            Err(PartitionError::BoxOverflow { .. })
        ));
    }

    #[test]
    fn skew_box_set_examples() {
        let s = skew_box_set(&part("[1]"), &part("[2,1]"), 2, 2).unwrap();
        assert_eq!(s, cells(&[(1, 2), (2, 1)]));
        let l = part("[2,1]");
        assert!(skew_box_set(&l, &l, 2, 2).unwrap().is_empty());
        assert_eq!(
            skew_box_set(&Partition::empty(), &part("[2,2]"), 2, 2)
                .unwrap()
                .len(),
            4
        );
        assert!(matches!(
            skew_box_set(&part("[2]"), &part("[1,1]"), 2, 2),
            Err(PartitionError::NotNested { .. })
        ));
        assert!(matches!(
            skew_box_set(&part("[]"), &part("[3]"), 2, 2),
            Err(PartitionError::BoxOverflow { .. })
        ));
    }

    #[test]
    fn rectangle_decomposition_examples() {
        let d = rectangle_decomposition(&Partition::empty(), &part("[2,2]"), 2, 2).unwrap();
        assert_eq!(d.rectangles, vec![Rectangle::new(2, 2)]);

        let d = rectangle_decomposition(&part("[1]"), &part("[2,1]"), 2, 2).unwrap();
        assert_eq!(
            d.rectangles,
            vec![Rectangle::new(1, 1), Rectangle::new(1, 1)]
        );

        assert!(matches!(
            rectangle_decomposition(&part("[1]"), &part("[2,2]"), 2, 2),
            Err(PartitionError::NotCompatible { .. })
        ));
    }

    #[test]
    fn decomposition_order_is_top_right_first() {
        // Skew of [4,2]/[3] in 2x4: (1,4) alone and (2,1),(2,2).
        let d = rectangle_decomposition(&part("[3]"), &part("[4,2]"), 2, 4).unwrap();
        assert_eq!(
            d.rectangles,
            vec![Rectangle::new(1, 1), Rectangle::new(1, 2)]
        );
    }

    #[test]
    fn compatibility_examples() {
        assert!(is_compatible(&Partition::empty(), &part("[2,2]"), 2, 2));
        assert!(!is_compatible(&part("[1]"), &part("[2,2]"), 2, 2));
        assert!(is_compatible(&part("[1]"), &part("[2,1]"), 2, 2));
        assert!(!is_compatible(&part("[2]"), &part("[1,1]"), 2, 2));
        assert!(!is_compatible(&part("[]"), &part("[3]"), 2, 2));
    }

    #[test]
    fn orthogonal_examples() {
        let d = orthogonal_decomposition(&Partition::empty(), 2, 2).unwrap();
        assert_eq!(d.center, Some(Rectangle::new(2, 2)));
        assert!(d.pairs.is_empty());

        let d = orthogonal_decomposition(&part("[1,1]"), 2, 3).unwrap();
        assert_eq!(d.center, Some(Rectangle::new(2, 1)));
        assert!(d.pairs.is_empty());

        let d = orthogonal_decomposition(&part("[2,1]"), 2, 4).unwrap();
        assert_eq!(d.center, None);
        assert_eq!(d.pairs, vec![Rectangle::new(1, 1)]);
        assert_eq!(d.skew.rectangles.len(), 2);

        assert!(matches!(
            orthogonal_decomposition(&part("[1]"), 1, 1),
            Err(PartitionError::NotOrthogonal { .. })
        ));
    }

    #[test]
    fn enumeration_examples() {
        let v: Vec<_> = enumerate_partitions_in_box(1, 1).collect();
        assert_eq!(v, vec![Partition::empty(), part("[1]")]);
        let v: Vec<String> = enumerate_partitions_in_box(2, 2)
            .map(|p| p.to_string())
            .collect();
        assert_eq!(v, ["[]", "[1]", "[1,1]", "[2]", "[2,1]", "[2,2]"]);
        assert_eq!(
            enumerate_partitions_in_box(0, 3).collect::<Vec<_>>(),
            vec![Partition::empty()]
        );
        assert_eq!(
            enumerate_partitions_in_box(3, 0).collect::<Vec<_>>(),
            vec![Partition::empty()]
        );
    }

    #[test]
    fn boundary_path_of_hook() {
        use Step::*;
        // [2,1] in 2x3: row 2 has length 1, row 1 has length 2.
        assert_eq!(
            boundary_path(&part("[2,1]"), 2, 3),
            vec![Right, Up, Right, Up, Right]
        );
    }
}

//! Kauffman bracket state sum and Jones polynomial of closed link diagrams.
//!
//! Diagrams are planar diagram (PD) codes: one 4-tuple of arc labels per
//! crossing, listed counterclockwise starting at the incoming under-strand,
//! plus a count of crossingless circles. The bracket is evaluated by full
//! enumeration of the `2^c` smoothing states with exact integer arithmetic;
//! diagrams up to about 20 crossings are the supported envelope.

mod laurent;

pub use laurent::{Coefficient, LaurentPoly};

use crate::util::UnionFind;
use std::collections::HashMap;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PdError {
    #[error("arc {arc} does not occur exactly twice")]
    ArcCount { arc: u32 },
    #[error("crossing {crossing}: no consistent strand orientation")]
    Unorientable { crossing: usize },
    #[error("empty diagram has no bracket")]
    EmptyDiagram,
    #[error("diagram has {components} components, expected one")]
    MultiComponent { components: usize },
    #[error("{crossings} crossings exceed the state-sum envelope")]
    TooManyCrossings { crossings: usize },
}

/// Error produced when reading the PD text format.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {message}")]
pub struct PdParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

const MAX_STATE_SUM_CROSSINGS: usize = 24;

/// A closed link diagram in PD form.
///
/// Each crossing stores `[a, b, c, d]`: `a` is the incoming under-strand
/// arc and `b, c, d` follow counterclockwise, so the under-strand leaves at
/// `c` and the over-strand occupies `b` and `d`. Crossingless circles are
/// recorded in `free_loops`. Strand orientations are not stored; they are
/// recovered from the under-strand directions, and a component that never
/// passes under is oriented by a fixed convention.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinkDiagram {
    crossings: Vec<[u32; 4]>,
    free_loops: usize,
}

impl LinkDiagram {
    /// Builds a diagram, checking that every arc label occurs exactly twice.
    pub fn new(crossings: Vec<[u32; 4]>, free_loops: usize) -> Result<Self, PdError> {
        let mut counts: HashMap<u32, usize> = HashMap::new();
        for cr in &crossings {
            for &arc in cr {
                *counts.entry(arc).or_default() += 1;
            }
        }
        for (&arc, &count) in &counts {
            if count != 2 {
                return Err(PdError::ArcCount { arc });
            }
        }
        Ok(LinkDiagram {
            crossings,
            free_loops,
        })
    }

    /// A crossingless unknot diagram.
    pub fn unknot() -> Self {
        LinkDiagram {
            crossings: Vec::new(),
            free_loops: 1,
        }
    }

    /// The reference 3-crossing trefoil diagram.
    pub fn trefoil() -> Self {
        LinkDiagram {
            crossings: vec![[1, 4, 2, 5], [3, 6, 4, 1], [5, 2, 6, 3]],
            free_loops: 0,
        }
    }

    pub fn crossings(&self) -> &[[u32; 4]] {
        &self.crossings
    }

    pub fn free_loops(&self) -> usize {
        self.free_loops
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    /// Number of link components, counting free loops.
    pub fn component_count(&self) -> usize {
        let (mut dsu, index) = self.arc_dsu();
        for cr in &self.crossings {
            dsu.union(index[&cr[0]], index[&cr[2]]);
            dsu.union(index[&cr[1]], index[&cr[3]]);
        }
        let roots = (0..dsu.len()).filter(|&i| dsu.find(i) == i).count();
        roots + self.free_loops
    }

    fn arc_dsu(&self) -> (UnionFind, HashMap<u32, usize>) {
        let mut index = HashMap::new();
        for cr in &self.crossings {
            for &arc in cr {
                let next = index.len();
                index.entry(arc).or_insert(next);
            }
        }
        (UnionFind::new(index.len()), index)
    }

    /// Crossing signs under the recovered orientations, `+1` or `-1` each.
    pub fn crossing_signs(&self) -> Result<Vec<i8>, PdError> {
        Ok(self.orient()?.0)
    }

    /// True when the under-strand directions alone pin every orientation,
    /// with no appeal to the fallback convention.
    pub fn orientations_determined(&self) -> Result<bool, PdError> {
        Ok(self.orient()?.1)
    }

    /// Propagates strand directions from the under-strand passages.
    ///
    /// Returns the crossing signs and whether they were fully determined.
    /// A crossing is positive when the over-strand enters at slot `b`.
    fn orient(&self) -> Result<(Vec<i8>, bool), PdError> {
        // occurrence list per arc; validated to be exactly two everywhere
        let mut occ: HashMap<u32, Vec<(usize, usize)>> = HashMap::new();
        for (ci, cr) in self.crossings.iter().enumerate() {
            for (slot, &arc) in cr.iter().enumerate() {
                occ.entry(arc).or_default().push((ci, slot));
            }
        }
        for (&arc, list) in &occ {
            if list.len() != 2 {
                return Err(PdError::ArcCount { arc });
            }
        }

        // is_head[crossing][slot]: the arc in this slot points into the
        // crossing here
        let mut is_head: Vec<[Option<bool>; 4]> = vec![[None; 4]; self.crossings.len()];
        let mut queue: Vec<(usize, usize, bool)> = Vec::new();
        let set = |is_head: &mut Vec<[Option<bool>; 4]>,
                       queue: &mut Vec<(usize, usize, bool)>,
                       ci: usize,
                       slot: usize,
                       value: bool|
         -> Result<(), PdError> {
            match is_head[ci][slot] {
                Some(existing) if existing != value => Err(PdError::Unorientable { crossing: ci }),
                Some(_) => Ok(()),
                None => {
                    is_head[ci][slot] = Some(value);
                    queue.push((ci, slot, value));
                    Ok(())
                }
            }
        };

        for ci in 0..self.crossings.len() {
            set(&mut is_head, &mut queue, ci, 0, true)?;
            set(&mut is_head, &mut queue, ci, 2, false)?;
        }
        let mut determined = true;
        loop {
            while let Some((ci, slot, value)) = queue.pop() {
                // each arc has one head and one tail end
                let arc = self.crossings[ci][slot];
                let list = &occ[&arc];
                let other = if list[0] == (ci, slot) { list[1] } else { list[0] };
                set(&mut is_head, &mut queue, other.0, other.1, !value)?;
                // the over-strand enters on one side and leaves on the other
                if slot == 1 || slot == 3 {
                    let sibling = 4 - slot;
                    set(&mut is_head, &mut queue, ci, sibling, !value)?;
                }
            }
            match (0..self.crossings.len()).find(|&ci| is_head[ci][1].is_none()) {
                None => break,
                Some(ci) => {
                    // component never passes under: orient it positively
                    determined = false;
                    set(&mut is_head, &mut queue, ci, 1, true)?;
                }
            }
        }
        let signs = is_head
            .iter()
            .map(|states| if states[1] == Some(true) { 1 } else { -1 })
            .collect();
        Ok((signs, determined))
    }

    /// Sum of crossing signs under the recovered orientations.
    pub fn writhe(&self) -> Result<i64, PdError> {
        Ok(self.crossing_signs()?.iter().map(|&s| s as i64).sum())
    }

    /// The bracket state sum, normalized so the unknot evaluates to 1.
    ///
    /// Every crossing is smoothed both ways: the A-smoothing joins `a-d` and
    /// `b-c`, the B-smoothing joins `a-b` and `c-d`. A state with `a` A-type
    /// and `b` B-type smoothings and `L` resulting loops contributes
    /// `A^(a-b) · δ^(L-1)` with `δ = -A² - A⁻²`.
    pub fn kauffman_bracket<C: Coefficient>(&self) -> Result<LaurentPoly<C>, PdError> {
        let c = self.crossings.len();
        if c > MAX_STATE_SUM_CROSSINGS {
            return Err(PdError::TooManyCrossings { crossings: c });
        }
        if c == 0 {
            if self.free_loops == 0 {
                return Err(PdError::EmptyDiagram);
            }
            return Ok(LaurentPoly::delta().pow(self.free_loops - 1));
        }
        let (_, index) = self.arc_dsu();
        let dense: Vec<[usize; 4]> = self
            .crossings
            .iter()
            .map(|cr| [index[&cr[0]], index[&cr[1]], index[&cr[2]], index[&cr[3]]])
            .collect();
        let arc_count = index.len();

        let delta = LaurentPoly::<C>::delta();
        let max_loops = arc_count + self.free_loops;
        let mut delta_pow = Vec::with_capacity(max_loops + 1);
        delta_pow.push(LaurentPoly::<C>::one());
        for k in 1..=max_loops {
            delta_pow.push(delta_pow[k - 1].mul(&delta));
        }

        let mut acc = LaurentPoly::<C>::zero();
        let mut parent: Vec<usize> = vec![0; arc_count];
        for state in 0u64..(1u64 << c) {
            for (i, p) in parent.iter_mut().enumerate() {
                *p = i;
            }
            fn find(parent: &mut [usize], mut x: usize) -> usize {
                while parent[x] != x {
                    parent[x] = parent[parent[x]];
                    x = parent[x];
                }
                x
            }
            let mut loops = arc_count;
            let union = |parent: &mut [usize], loops: &mut usize, a: usize, b: usize| {
                let ra = find(parent, a);
                let rb = find(parent, b);
                if ra != rb {
                    parent[ra] = rb;
                    *loops -= 1;
                }
            };
            let mut exponent = 0i64;
            for (i, cr) in dense.iter().enumerate() {
                if state >> i & 1 == 0 {
                    exponent += 1;
                    union(&mut parent, &mut loops, cr[0], cr[3]);
                    union(&mut parent, &mut loops, cr[1], cr[2]);
                } else {
                    exponent -= 1;
                    union(&mut parent, &mut loops, cr[0], cr[1]);
                    union(&mut parent, &mut loops, cr[2], cr[3]);
                }
            }
            acc.add_shifted(&delta_pow[loops + self.free_loops - 1], exponent);
        }
        Ok(acc)
    }

    /// The Jones polynomial in the bracket variable `A`: the bracket times
    /// `(-A³)^(-writhe)`. Substituting `t = A⁻⁴` is left to the caller.
    pub fn jones<C: Coefficient>(&self) -> Result<LaurentPoly<C>, PdError> {
        let writhe = self.writhe()?;
        let bracket = self.kauffman_bracket::<C>()?;
        let sign = if writhe % 2 == 0 {
            C::one()
        } else {
            -C::one()
        };
        Ok(bracket.mul_monomial(sign, -3 * writhe))
    }

    /// True certifies the knot is not the unknot; false is inconclusive.
    pub fn certifies_not_unknot(&self) -> Result<bool, PdError> {
        let components = self.component_count();
        if components != 1 {
            return Err(PdError::MultiComponent { components });
        }
        Ok(!self.jones::<i64>()?.is_one())
    }

    /// Reads the PD text format: one `X(a,b,c,d)` per line plus an optional
    /// `O(k)` line for `k` free loops.
    pub fn parse(input: &str) -> Result<Self, PdParseError> {
        let mut crossings = Vec::new();
        let mut free_loops = 0usize;
        for (lineno, raw_line) in input.lines().enumerate() {
            let line = lineno + 1;
            let content = match raw_line.find('#') {
                Some(i) => &raw_line[..i],
                None => raw_line,
            };
            let trimmed = content.trim();
            if trimmed.is_empty() {
                continue;
            }
            let column = content.len() - content.trim_start().len() + 1;
            let err = |message: String| PdParseError {
                line,
                column,
                message,
            };
            if let Some(body) = trimmed
                .strip_prefix("X(")
                .and_then(|rest| rest.strip_suffix(')'))
            {
                let parts: Vec<&str> = body.split(',').map(str::trim).collect();
                if parts.len() != 4 {
                    return Err(err("expected X(a,b,c,d)".into()));
                }
                let mut tuple = [0u32; 4];
                for (i, part) in parts.iter().enumerate() {
                    tuple[i] = part
                        .parse()
                        .map_err(|_| err(format!("invalid arc label `{part}`")))?;
                }
                crossings.push(tuple);
            } else if let Some(body) = trimmed
                .strip_prefix("O(")
                .and_then(|rest| rest.strip_suffix(')'))
            {
                let k: usize = body
                    .trim()
                    .parse()
                    .map_err(|_| err(format!("invalid loop count `{body}`")))?;
                free_loops += k;
            } else {
                return Err(err(format!("unrecognized line `{trimmed}`")));
            }
        }
        LinkDiagram::new(crossings, free_loops).map_err(|e| PdParseError {
            line: 1,
            column: 1,
            message: e.to_string(),
        })
    }
}

/// Canonical PD text: `X(a,b,c,d)` lines, then `O(k)` when loops exist.
impl fmt::Display for LinkDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for cr in &self.crossings {
            writeln!(f, "X({},{},{},{})", cr[0], cr[1], cr[2], cr[3])?;
        }
        if self.free_loops > 0 {
            writeln!(f, "O({})", self.free_loops)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type P = LaurentPoly<i64>;

    #[test]
    fn bracket_of_unknot_is_one() {
        assert_eq!(LinkDiagram::unknot().kauffman_bracket::<i64>().unwrap(), P::one());
    }

    #[test]
    fn bracket_of_two_component_unlink_is_delta() {
        let l = LinkDiagram::new(Vec::new(), 2).unwrap();
        assert_eq!(l.kauffman_bracket::<i64>().unwrap(), P::delta());
    }

    #[test]
    fn empty_diagram_has_no_bracket() {
        let l = LinkDiagram::new(Vec::new(), 0).unwrap();
        assert_eq!(l.kauffman_bracket::<i64>(), Err(PdError::EmptyDiagram));
    }

    #[test]
    fn arc_count_validation() {
        assert!(LinkDiagram::new(vec![[1, 1, 2, 3]], 0).is_err());
        assert!(LinkDiagram::new(vec![[1, 2, 1, 2]], 0).is_ok());
    }

    #[test]
    fn trefoil_is_certified_knotted() {
        let t = LinkDiagram::trefoil();
        assert_eq!(t.component_count(), 1);
        assert!(t.certifies_not_unknot().unwrap());
    }

    /// Counts the circles of a smoothing state by walking the alternating
    /// cycles of two perfect matchings: the smoothing pairs and the arcs.
    fn count_loops(pairs: &[(u32, u32)]) -> usize {
        let mut occ: HashMap<u32, Vec<(usize, usize)>> = HashMap::new();
        for (i, &(a, b)) in pairs.iter().enumerate() {
            occ.entry(a).or_default().push((i, 0));
            occ.entry(b).or_default().push((i, 1));
        }
        let mut seen = vec![[false; 2]; pairs.len()];
        let mut loops = 0;
        for i in 0..pairs.len() {
            for side in 0..2 {
                if seen[i][side] {
                    continue;
                }
                loops += 1;
                let (mut ci, mut cs) = (i, side);
                loop {
                    seen[ci][cs] = true;
                    // cross the smoothing pair, then follow the arc
                    let exit = (ci, 1 - cs);
                    seen[exit.0][exit.1] = true;
                    let arc = if exit.1 == 0 {
                        pairs[exit.0].0
                    } else {
                        pairs[exit.0].1
                    };
                    let ends = &occ[&arc];
                    let next = if ends[0] == exit { ends[1] } else { ends[0] };
                    (ci, cs) = next;
                    if (ci, cs) == (i, side) {
                        break;
                    }
                }
            }
        }
        loops
    }

    /// Brute-force bracket oracle, independent of the union-find path.
    fn bracket_oracle(l: &LinkDiagram) -> P {
        let c = l.crossing_count();
        let mut acc = P::zero();
        for state in 0u64..(1u64 << c) {
            let mut pairs: Vec<(u32, u32)> = Vec::new();
            let mut exponent = 0i64;
            for (i, cr) in l.crossings().iter().enumerate() {
                if state >> i & 1 == 0 {
                    exponent += 1;
                    pairs.push((cr[0], cr[3]));
                    pairs.push((cr[1], cr[2]));
                } else {
                    exponent -= 1;
                    pairs.push((cr[0], cr[1]));
                    pairs.push((cr[2], cr[3]));
                }
            }
            let loops = count_loops(&pairs);
            acc.add_shifted(&P::delta().pow(loops + l.free_loops() - 1), exponent);
        }
        acc
    }

    #[test]
    fn bracket_matches_loop_walking_oracle_on_trefoil() {
        let t = LinkDiagram::trefoil();
        assert_eq!(t.kauffman_bracket::<i64>().unwrap(), bracket_oracle(&t));
    }

    #[test]
    fn parse_and_display_round_trip() {
        let t = LinkDiagram::trefoil();
        let text = t.to_string();
        assert_eq!(text, "X(1,4,2,5)\nX(3,6,4,1)\nX(5,2,6,3)\n");
        assert_eq!(LinkDiagram::parse(&text).unwrap(), t);

        let l = LinkDiagram::new(vec![[1, 2, 1, 2]], 2).unwrap();
        assert_eq!(LinkDiagram::parse(&l.to_string()).unwrap(), l);

        let err = LinkDiagram::parse("X(1,2)\n").unwrap_err();
        assert_eq!(err.line, 1);
        assert!(LinkDiagram::parse("wat\n").is_err());
    }
}

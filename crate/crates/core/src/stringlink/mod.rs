//! Geometric `(n,n)`-tangle diagrams as left-to-right slice event sequences.
//!
//! A diagram is a word of elementary events read along the horizontal axis:
//! crossings of adjacent strands, births (a cap opening to the right) and
//! deaths (a cap closing to the left). Composition of tangles is literal
//! concatenation of event lists, and a diagram is a braid exactly when it has
//! no birth or death events.
//!
//! Closed loop components are disallowed; [`SliceDiagram::validate`] rejects
//! them while tracing the strand components of the diagram.

mod monotonize;

pub use monotonize::{monotonize, MonotonizeOutcome};

use crate::braid::BraidWord;
use crate::invariants::LinkDiagram;
use crate::util::UnionFind;
use std::collections::HashMap;
use std::fmt;
use thiserror::Error;

/// Crossing handedness. `Pos` crosses the lower strand over the upper one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }
}

/// One elementary slice of a tangle diagram. Positions are 1-based within
/// the current slice width, counted bottom to top.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SliceEvent {
    /// Strands at `pos` and `pos+1` cross.
    Cross { pos: usize, sign: Sign },
    /// Two new adjacent strands appear at positions `pos`, `pos+1`.
    Birth { pos: usize },
    /// The strands at `pos` and `pos+1` join and leave the diagram.
    Death { pos: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiagramError {
    #[error("event {event}: position {pos} out of range at width {width}")]
    Position {
        event: usize,
        pos: usize,
        width: usize,
    },
    #[error("final width {found} does not return to boundary count {expected}")]
    Width { expected: usize, found: usize },
    #[error("event {event}: joining the strands closes a loop")]
    ClosedLoop { event: usize },
    #[error("diagram is not a string link")]
    NotAStringLink,
    #[error("keep set is empty")]
    EmptyKeep,
    #[error("keep index {index} out of range for boundary count {boundary}")]
    KeepOutOfRange { index: usize, boundary: usize },
    #[error("boundary count mismatch: {left} vs {right}")]
    BoundaryMismatch { left: usize, right: usize },
    #[error("plait closure requires an even boundary count, got {boundary}")]
    PlaitOddBoundary { boundary: usize },
}

/// A tangle diagram: `boundary` strand endpoints on each vertical face and a
/// sequence of slice events between them.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SliceDiagram {
    boundary: usize,
    events: Vec<SliceEvent>,
}

/// One strand component of a diagram, as reported by
/// [`SliceDiagram::validate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    /// Left-face endpoint positions, ascending.
    pub left: Vec<usize>,
    /// Right-face endpoint positions, ascending.
    pub right: Vec<usize>,
    /// Indices of the events this component participates in, ascending.
    pub events: Vec<usize>,
}

/// The component decomposition of a valid diagram.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentTrace {
    components: Vec<Component>,
}

impl ComponentTrace {
    pub fn components(&self) -> &[Component] {
        &self.components
    }

    /// True when every component runs from the left face to the right face.
    pub fn is_string_link(&self) -> bool {
        self.components
            .iter()
            .all(|c| c.left.len() == 1 && c.right.len() == 1)
    }

    /// For a string link: entry `i` is the right endpoint of the component
    /// whose left endpoint is `i+1`.
    pub fn endpoint_map(&self) -> Option<Vec<usize>> {
        if !self.is_string_link() {
            return None;
        }
        let mut map = vec![0; self.components.len()];
        for c in &self.components {
            map[c.left[0] - 1] = c.right[0];
        }
        Some(map)
    }
}

/// Which way the ends of a tangle are joined into a closed link.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClosureScheme {
    /// Joins left `i` to right `i` around the outside.
    Trace,
    /// Joins adjacent pairs `(1,2), (3,4), …` on both faces.
    Plait,
}

/// Raw sweep data shared by validation and strand deletion.
struct TraceData {
    dsu: UnionFind,
    /// Strand id occupying each final position.
    final_ids: Vec<usize>,
    /// Participating strand ids per event (birth ids count from `boundary`).
    participants: Vec<Vec<usize>>,
}

impl SliceDiagram {
    /// Builds a diagram without validating it; run [`validate`] to check it.
    ///
    /// [`validate`]: SliceDiagram::validate
    pub fn new(boundary: usize, events: Vec<SliceEvent>) -> Self {
        SliceDiagram { boundary, events }
    }

    /// The identity tangle: `n` horizontal strands, no events.
    pub fn identity(n: usize) -> Self {
        debug_assert!(n >= 1);
        SliceDiagram {
            boundary: n,
            events: Vec::new(),
        }
    }

    pub fn boundary(&self) -> usize {
        self.boundary
    }

    pub fn events(&self) -> &[SliceEvent] {
        &self.events
    }

    fn trace_ids(&self) -> Result<TraceData, DiagramError> {
        let n = self.boundary;
        let mut dsu = UnionFind::new(n);
        let mut current: Vec<usize> = (0..n).collect();
        let mut participants = Vec::with_capacity(self.events.len());
        for (k, ev) in self.events.iter().enumerate() {
            let width = current.len();
            match *ev {
                SliceEvent::Cross { pos, .. } => {
                    if pos == 0 || pos + 1 > width {
                        return Err(DiagramError::Position {
                            event: k,
                            pos,
                            width,
                        });
                    }
                    participants.push(vec![current[pos - 1], current[pos]]);
                    current.swap(pos - 1, pos);
                }
                SliceEvent::Birth { pos } => {
                    if pos == 0 || pos > width + 1 {
                        return Err(DiagramError::Position {
                            event: k,
                            pos,
                            width,
                        });
                    }
                    let id = dsu.grow();
                    participants.push(vec![id]);
                    current.insert(pos - 1, id);
                    current.insert(pos - 1, id);
                }
                SliceEvent::Death { pos } => {
                    if pos == 0 || pos + 1 > width {
                        return Err(DiagramError::Position {
                            event: k,
                            pos,
                            width,
                        });
                    }
                    let u = current[pos - 1];
                    let v = current[pos];
                    participants.push(vec![u, v]);
                    if !dsu.union(u, v) {
                        return Err(DiagramError::ClosedLoop { event: k });
                    }
                    current.remove(pos - 1);
                    current.remove(pos - 1);
                }
            }
        }
        if current.len() != n {
            return Err(DiagramError::Width {
                expected: n,
                found: current.len(),
            });
        }
        Ok(TraceData {
            dsu,
            final_ids: current,
            participants,
        })
    }

    /// Checks widths, positions and the no-closed-loop rule, and returns the
    /// component decomposition.
    pub fn validate(&self) -> Result<ComponentTrace, DiagramError> {
        let mut data = self.trace_ids()?;
        let n = self.boundary;
        let id_count = data.dsu.len();

        let mut lefts: HashMap<usize, Vec<usize>> = HashMap::new();
        let mut rights: HashMap<usize, Vec<usize>> = HashMap::new();
        let mut events: HashMap<usize, Vec<usize>> = HashMap::new();
        for i in 0..n {
            lefts.entry(data.dsu.find(i)).or_default().push(i + 1);
        }
        for (p, &id) in data.final_ids.iter().enumerate() {
            rights.entry(data.dsu.find(id)).or_default().push(p + 1);
        }
        for (k, ids) in data.participants.iter().enumerate() {
            for &id in ids {
                let root = data.dsu.find(id);
                let evs = events.entry(root).or_default();
                if evs.last() != Some(&k) {
                    evs.push(k);
                }
            }
        }

        let mut roots: Vec<usize> = (0..id_count)
            .filter(|&i| data.dsu.find(i) == i)
            .collect();
        roots.sort_by_key(|r| {
            (
                lefts.get(r).map_or(usize::MAX, |v| v[0]),
                rights.get(r).map_or(usize::MAX, |v| v[0]),
            )
        });
        let components = roots
            .into_iter()
            .map(|r| Component {
                left: lefts.remove(&r).unwrap_or_default(),
                right: rights.remove(&r).unwrap_or_default(),
                events: events.remove(&r).unwrap_or_default(),
            })
            .collect();
        Ok(ComponentTrace { components })
    }

    /// True when every strand runs from the left face to the right face.
    pub fn is_string_link(&self) -> Result<bool, DiagramError> {
        Ok(self.validate()?.is_string_link())
    }

    /// Tangle composition: the events of `self` followed by those of
    /// `other`. No rewriting is performed.
    pub fn compose(&self, other: &Self) -> Result<Self, DiagramError> {
        if self.boundary != other.boundary {
            return Err(DiagramError::BoundaryMismatch {
                left: self.boundary,
                right: other.boundary,
            });
        }
        let mut events = self.events.clone();
        events.extend_from_slice(&other.events);
        Ok(SliceDiagram {
            boundary: self.boundary,
            events,
        })
    }

    /// Mirror image across the vertical middle plane: events reversed,
    /// crossings flipped, births and deaths exchanged.
    pub fn reflect(&self) -> Self {
        let events = self
            .events
            .iter()
            .rev()
            .map(|ev| match *ev {
                SliceEvent::Cross { pos, sign } => SliceEvent::Cross {
                    pos,
                    sign: sign.flip(),
                },
                SliceEvent::Birth { pos } => SliceEvent::Death { pos },
                SliceEvent::Death { pos } => SliceEvent::Birth { pos },
            })
            .collect();
        SliceDiagram {
            boundary: self.boundary,
            events,
        }
    }

    /// Keeps only the strands with the given left endpoints, dissolving the
    /// rest. Crossings involving a deleted strand are dropped; positions are
    /// renumbered to the induced width.
    pub fn delete_strands(&self, keep: &[usize]) -> Result<Self, DiagramError> {
        let mut keep_sorted: Vec<usize> = keep.to_vec();
        keep_sorted.sort_unstable();
        keep_sorted.dedup();
        if keep_sorted.is_empty() {
            return Err(DiagramError::EmptyKeep);
        }
        let n = self.boundary;
        if let Some(&bad) = keep_sorted.iter().find(|&&i| i == 0 || i > n) {
            return Err(DiagramError::KeepOutOfRange {
                index: bad,
                boundary: n,
            });
        }
        let mut data = self.trace_ids()?;
        // strand deletion is defined on string links only
        {
            let trace = self.validate()?;
            if !trace.is_string_link() {
                return Err(DiagramError::NotAStringLink);
            }
        }
        let kept_roots: Vec<usize> = keep_sorted.iter().map(|&i| data.dsu.find(i - 1)).collect();
        let is_kept = |dsu: &mut UnionFind, id: usize| kept_roots.contains(&dsu.find(id));

        let mut current: Vec<usize> = (0..n).collect();
        let mut next_birth = n;
        let mut out = Vec::new();
        for ev in &self.events {
            match *ev {
                SliceEvent::Cross { pos, sign } => {
                    let u = current[pos - 1];
                    let v = current[pos];
                    if is_kept(&mut data.dsu, u) && is_kept(&mut data.dsu, v) {
                        let new_pos = 1 + current[..pos - 1]
                            .iter()
                            .filter(|&&id| is_kept(&mut data.dsu, id))
                            .count();
                        out.push(SliceEvent::Cross { pos: new_pos, sign });
                    }
                    current.swap(pos - 1, pos);
                }
                SliceEvent::Birth { pos } => {
                    let id = next_birth;
                    next_birth += 1;
                    if is_kept(&mut data.dsu, id) {
                        let new_pos = 1 + current[..pos - 1]
                            .iter()
                            .filter(|&&id| is_kept(&mut data.dsu, id))
                            .count();
                        out.push(SliceEvent::Birth { pos: new_pos });
                    }
                    current.insert(pos - 1, id);
                    current.insert(pos - 1, id);
                }
                SliceEvent::Death { pos } => {
                    let u = current[pos - 1];
                    if is_kept(&mut data.dsu, u) {
                        let new_pos = 1 + current[..pos - 1]
                            .iter()
                            .filter(|&&id| is_kept(&mut data.dsu, id))
                            .count();
                        out.push(SliceEvent::Death { pos: new_pos });
                    }
                    current.remove(pos - 1);
                    current.remove(pos - 1);
                }
            }
        }
        Ok(SliceDiagram {
            boundary: keep_sorted.len(),
            events: out,
        })
    }

    /// Reads the braid word off a monotone diagram; `None` when any birth or
    /// death event is present.
    pub fn monotone_braid(&self) -> Option<BraidWord> {
        let mut letters = Vec::with_capacity(self.events.len());
        for ev in &self.events {
            match *ev {
                SliceEvent::Cross { pos, sign } => {
                    let letter = pos as i32;
                    letters.push(match sign {
                        Sign::Pos => letter,
                        Sign::Neg => -letter,
                    });
                }
                _ => return None,
            }
        }
        BraidWord::new(self.boundary, letters).ok()
    }

    /// Searches for a braid representative within a rewrite-step budget.
    pub fn monotonize(&self, budget: usize) -> Result<MonotonizeOutcome, DiagramError> {
        monotonize(self, budget)
    }

    /// Closes the tangle into a link diagram in planar-diagram form.
    pub fn closure(&self, scheme: ClosureScheme) -> Result<LinkDiagram, DiagramError> {
        self.validate()?;
        if scheme == ClosureScheme::Plait && self.boundary % 2 != 0 {
            return Err(DiagramError::PlaitOddBoundary {
                boundary: self.boundary,
            });
        }
        Ok(closure::build(self, scheme))
    }

    /// Reads the line-based slice file format.
    pub fn parse(input: &str) -> Result<Self, SliceParseError> {
        parse_slice(input)
    }
}

/// Canonical slice file text: `tangle n=<int>` then one event per line.
impl fmt::Display for SliceDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "tangle n={}", self.boundary)?;
        for ev in &self.events {
            match *ev {
                SliceEvent::Cross { pos, sign } => {
                    let s = match sign {
                        Sign::Pos => '+',
                        Sign::Neg => '-',
                    };
                    writeln!(f, "x {pos} {s}")?;
                }
                SliceEvent::Birth { pos } => writeln!(f, "birth {pos}")?,
                SliceEvent::Death { pos } => writeln!(f, "death {pos}")?,
            }
        }
        Ok(())
    }
}

/// Error produced when reading the slice file format.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {message}")]
pub struct SliceParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

fn parse_slice(input: &str) -> Result<SliceDiagram, SliceParseError> {
    let mut boundary: Option<usize> = None;
    let mut events = Vec::new();
    for (lineno, raw_line) in input.lines().enumerate() {
        let line_no = lineno + 1;
        let content = match raw_line.find('#') {
            Some(i) => &raw_line[..i],
            None => raw_line,
        };
        let mut tokens = Vec::new();
        let mut col = 1usize;
        for piece in content.split_inclusive(char::is_whitespace) {
            let trimmed = piece.trim_end_matches(char::is_whitespace);
            if !trimmed.is_empty() {
                tokens.push((col, trimmed));
            }
            col += piece.chars().count();
        }
        if tokens.is_empty() {
            continue;
        }
        let err = |column: usize, message: String| SliceParseError {
            line: line_no,
            column,
            message,
        };
        let parse_pos = |tok: (usize, &str)| -> Result<usize, SliceParseError> {
            let pos: usize = tok
                .1
                .parse()
                .map_err(|_| err(tok.0, format!("invalid position `{}`", tok.1)))?;
            if pos == 0 {
                return Err(err(tok.0, "positions are 1-based".into()));
            }
            Ok(pos)
        };
        match boundary {
            None => {
                if tokens[0].1 != "tangle" {
                    return Err(err(tokens[0].0, "expected `tangle n=<int>` header".into()));
                }
                if tokens.len() != 2 || !tokens[1].1.starts_with("n=") {
                    let col = tokens.get(1).map_or(tokens[0].0, |t| t.0);
                    return Err(err(col, "expected `n=<int>` after `tangle`".into()));
                }
                let n: usize = tokens[1].1[2..]
                    .parse()
                    .map_err(|_| err(tokens[1].0, "invalid boundary count".into()))?;
                boundary = Some(n);
            }
            Some(_) => {
                let ev = match tokens[0].1 {
                    "x" => {
                        if tokens.len() != 3 {
                            return Err(err(tokens[0].0, "expected `x <pos> +|-`".into()));
                        }
                        let pos = parse_pos(tokens[1])?;
                        let sign = match tokens[2].1 {
                            "+" => Sign::Pos,
                            "-" => Sign::Neg,
                            other => {
                                return Err(err(tokens[2].0, format!("invalid sign `{other}`")))
                            }
                        };
                        SliceEvent::Cross { pos, sign }
                    }
                    "birth" | "death" => {
                        if tokens.len() != 2 {
                            return Err(err(
                                tokens[0].0,
                                format!("expected `{} <pos>`", tokens[0].1),
                            ));
                        }
                        let pos = parse_pos(tokens[1])?;
                        if tokens[0].1 == "birth" {
                            SliceEvent::Birth { pos }
                        } else {
                            SliceEvent::Death { pos }
                        }
                    }
                    other => return Err(err(tokens[0].0, format!("unknown event `{other}`"))),
                };
                events.push(ev);
            }
        }
    }
    match boundary {
        Some(n) => Ok(SliceDiagram::new(n, events)),
        None => Err(SliceParseError {
            line: 1,
            column: 1,
            message: "missing `tangle n=<int>` header".into(),
        }),
    }
}

mod closure {
    use super::*;

    #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
    enum End {
        Left,
        Right,
    }

    impl End {
        fn opposite(self) -> End {
            match self {
                End::Left => End::Right,
                End::Right => End::Left,
            }
        }
    }

    /// Compass slots of a crossing, in counterclockwise order.
    #[derive(Debug, Clone, Copy, PartialEq, Eq)]
    enum Slot {
        Sw,
        Se,
        Ne,
        Nw,
    }

    impl Slot {
        fn ccw_next(self) -> Slot {
            match self {
                Slot::Sw => Slot::Se,
                Slot::Se => Slot::Ne,
                Slot::Ne => Slot::Nw,
                Slot::Nw => Slot::Sw,
            }
        }
    }

    struct SweepCrossing {
        sw: usize,
        se: usize,
        ne: usize,
        nw: usize,
        piece_low: usize,
        piece_high: usize,
        sign: Sign,
    }

    /// Builds the planar diagram of the closed-up tangle. The diagram must
    /// already have passed validation.
    pub(super) fn build(d: &SliceDiagram, scheme: ClosureScheme) -> LinkDiagram {
        let n = d.boundary();
        let mut arcs = UnionFind::new(0);
        let mut piece_count = 0usize;
        let mut new_piece = || {
            let id = piece_count;
            piece_count += 1;
            id
        };
        let mut links: HashMap<(usize, End), (usize, End)> = HashMap::new();
        let link = |links: &mut HashMap<(usize, End), (usize, End)>,
                        a: (usize, End),
                        b: (usize, End)| {
            let old = links.insert(a, b);
            debug_assert!(old.is_none());
            let old = links.insert(b, a);
            debug_assert!(old.is_none());
        };
        let mut crossings: Vec<SweepCrossing> = Vec::new();
        let mut free_loops = 0usize;

        // sweep: per position the current (arc, piece)
        let mut state: Vec<(usize, usize)> = Vec::with_capacity(n);
        let mut left_ends = Vec::with_capacity(n);
        for _ in 0..n {
            let entry = (arcs.grow(), new_piece());
            state.push(entry);
            left_ends.push(entry);
        }
        for ev in d.events() {
            match *ev {
                SliceEvent::Cross { pos, sign } => {
                    let low = state[pos - 1];
                    let high = state[pos];
                    let ne = arcs.grow();
                    let se = arcs.grow();
                    crossings.push(SweepCrossing {
                        sw: low.0,
                        nw: high.0,
                        ne,
                        se,
                        piece_low: low.1,
                        piece_high: high.1,
                        sign,
                    });
                    state[pos - 1] = (se, high.1);
                    state[pos] = (ne, low.1);
                }
                SliceEvent::Birth { pos } => {
                    let arc = arcs.grow();
                    let p1 = new_piece();
                    let p2 = new_piece();
                    link(&mut links, (p1, End::Left), (p2, End::Left));
                    state.insert(pos - 1, (arc, p2));
                    state.insert(pos - 1, (arc, p1));
                }
                SliceEvent::Death { pos } => {
                    let u = state[pos - 1];
                    let v = state[pos];
                    let merged = arcs.union(u.0, v.0);
                    debug_assert!(merged, "validated diagrams have no closed loops");
                    link(&mut links, (u.1, End::Right), (v.1, End::Right));
                    state.remove(pos - 1);
                    state.remove(pos - 1);
                }
            }
        }
        let right_ends = state;

        // closure arcs
        let mut join = |arcs: &mut UnionFind, a: usize, b: usize| {
            if !arcs.union(a, b) {
                free_loops += 1;
            }
        };
        match scheme {
            ClosureScheme::Trace => {
                for i in 0..n {
                    join(&mut arcs, left_ends[i].0, right_ends[i].0);
                    link(
                        &mut links,
                        (right_ends[i].1, End::Right),
                        (left_ends[i].1, End::Left),
                    );
                }
            }
            ClosureScheme::Plait => {
                for k in 0..n / 2 {
                    let (a, b) = (left_ends[2 * k], left_ends[2 * k + 1]);
                    join(&mut arcs, a.0, b.0);
                    link(&mut links, (a.1, End::Left), (b.1, End::Left));
                    let (a, b) = (right_ends[2 * k], right_ends[2 * k + 1]);
                    join(&mut arcs, a.0, b.0);
                    link(&mut links, (a.1, End::Right), (b.1, End::Right));
                }
            }
        }

        // orient components: walk the piece cycles, seeding at the smallest
        // left face endpoint (rightward), else the smallest right one
        let mut rightward: Vec<Option<bool>> = vec![None; piece_count];
        let walk = |rightward: &mut Vec<Option<bool>>, start: (usize, End)| {
            if rightward[start.0].is_some() {
                return;
            }
            let mut cur = start;
            loop {
                debug_assert!(rightward[cur.0].is_none());
                rightward[cur.0] = Some(cur.1 == End::Left);
                let next = links[&(cur.0, cur.1.opposite())];
                cur = next;
                if cur == start {
                    break;
                }
            }
        };
        for e in &left_ends {
            walk(&mut rightward, (e.1, End::Left));
        }
        for e in &right_ends {
            walk(&mut rightward, (e.1, End::Right));
        }
        debug_assert!(rightward.iter().all(|d| d.is_some()));

        // emit PD tuples, slot `a` = incoming under-strand
        let mut tuples = Vec::with_capacity(crossings.len());
        for c in &crossings {
            let low_rightward = rightward[c.piece_low].unwrap();
            let high_rightward = rightward[c.piece_high].unwrap();
            let under_in = match c.sign {
                // low strand over: the under strand runs NW-SE
                Sign::Pos => {
                    if high_rightward {
                        Slot::Nw
                    } else {
                        Slot::Se
                    }
                }
                // high strand over: the under strand runs SW-NE
                Sign::Neg => {
                    if low_rightward {
                        Slot::Sw
                    } else {
                        Slot::Ne
                    }
                }
            };
            let arc_at = |slot: Slot| match slot {
                Slot::Sw => c.sw,
                Slot::Se => c.se,
                Slot::Ne => c.ne,
                Slot::Nw => c.nw,
            };
            let mut slot = under_in;
            let mut tuple = [0usize; 4];
            for t in tuple.iter_mut() {
                *t = arc_at(slot);
                slot = slot.ccw_next();
            }
            tuples.push(tuple);
        }

        // canonical dense arc labels in first-appearance order
        let mut labels: HashMap<usize, u32> = HashMap::new();
        let mut next_label = 1u32;
        let mut out = Vec::with_capacity(tuples.len());
        for tuple in &tuples {
            let mut labeled = [0u32; 4];
            for (slot, &proto) in tuple.iter().enumerate() {
                let root = arcs.find(proto);
                let label = *labels.entry(root).or_insert_with(|| {
                    let l = next_label;
                    next_label += 1;
                    l
                });
                labeled[slot] = label;
            }
            out.push(labeled);
        }
        LinkDiagram::new(out, free_loops).expect("closure emits a well-formed planar diagram")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::BraidWord;

    fn braid(n: usize, letters: &[i32]) -> BraidWord {
        BraidWord::new(n, letters.to_vec()).unwrap()
    }

    /// The two-strand clasp: its plait closure is a trefoil diagram.
    pub(crate) fn clasp() -> SliceDiagram {
        SliceDiagram::new(
            2,
            vec![
                SliceEvent::Birth { pos: 3 },
                SliceEvent::Cross {
                    pos: 2,
                    sign: Sign::Pos,
                },
                SliceEvent::Cross {
                    pos: 2,
                    sign: Sign::Pos,
                },
                SliceEvent::Cross {
                    pos: 2,
                    sign: Sign::Pos,
                },
                SliceEvent::Death { pos: 1 },
            ],
        )
    }

    #[test]
    fn validate_identity() {
        let trace = SliceDiagram::identity(3).validate().unwrap();
        assert_eq!(trace.components().len(), 3);
        for (i, c) in trace.components().iter().enumerate() {
            assert_eq!(c.left, vec![i + 1]);
            assert_eq!(c.right, vec![i + 1]);
        }
        assert!(trace.is_string_link());
    }

    #[test]
    fn validate_rejects_forced_loop() {
        let d = SliceDiagram::new(
            0,
            vec![SliceEvent::Birth { pos: 1 }, SliceEvent::Death { pos: 1 }],
        );
        assert_eq!(d.validate(), Err(DiagramError::ClosedLoop { event: 1 }));
    }

    #[test]
    fn validate_clasp() {
        let trace = clasp().validate().unwrap();
        assert_eq!(trace.components().len(), 2);
        assert!(trace.is_string_link());
        assert_eq!(trace.components()[0].left, vec![1]);
        assert_eq!(trace.components()[0].right, vec![2]);
        assert_eq!(trace.components()[1].left, vec![2]);
        assert_eq!(trace.components()[1].right, vec![1]);
        // the clasp crossings tie the two components together
        assert_eq!(trace.components()[0].events, vec![0, 1, 2, 3, 4]);
        assert_eq!(trace.components()[1].events, vec![1, 2, 3]);
    }

    #[test]
    fn validate_position_and_width_errors() {
        let d = SliceDiagram::new(2, vec![SliceEvent::Cross { pos: 2, sign: Sign::Pos }]);
        assert_eq!(
            d.validate(),
            Err(DiagramError::Position {
                event: 0,
                pos: 2,
                width: 2
            })
        );
        let d = SliceDiagram::new(2, vec![SliceEvent::Birth { pos: 1 }]);
        assert_eq!(
            d.validate(),
            Err(DiagramError::Width {
                expected: 2,
                found: 4
            })
        );
    }

    #[test]
    fn string_link_examples() {
        assert!(SliceDiagram::identity(4).is_string_link().unwrap());
        assert!(braid(3, &[1, -2, 1]).to_diagram().is_string_link().unwrap());
        // left pair joined, right pair joined: a tangle but not a string link
        let d = SliceDiagram::new(
            2,
            vec![SliceEvent::Death { pos: 1 }, SliceEvent::Birth { pos: 1 }],
        );
        assert!(!d.is_string_link().unwrap());
    }

    #[test]
    fn compose_examples() {
        let d = clasp();
        let id = SliceDiagram::identity(2);
        assert_eq!(id.compose(&d).unwrap(), d);
        assert_eq!(d.compose(&id).unwrap(), d);

        let left = braid(2, &[1]).to_diagram();
        let right = braid(2, &[-1]).to_diagram();
        let both = left.compose(&right).unwrap();
        assert_eq!(
            both.events(),
            &[
                SliceEvent::Cross {
                    pos: 1,
                    sign: Sign::Pos
                },
                SliceEvent::Cross {
                    pos: 1,
                    sign: Sign::Neg
                },
            ]
        );
        assert!(left.compose(&SliceDiagram::identity(3)).is_err());
    }

    #[test]
    fn reflect_examples() {
        assert_eq!(
            SliceDiagram::identity(5).reflect(),
            SliceDiagram::identity(5)
        );
        let d = braid(3, &[1, 2]).to_diagram();
        assert_eq!(
            d.reflect().events(),
            &[
                SliceEvent::Cross {
                    pos: 2,
                    sign: Sign::Neg
                },
                SliceEvent::Cross {
                    pos: 1,
                    sign: Sign::Neg
                },
            ]
        );
        assert_eq!(clasp().reflect().reflect(), clasp());
    }

    #[test]
    fn monotone_braid_examples() {
        assert_eq!(
            SliceDiagram::identity(3).monotone_braid(),
            Some(BraidWord::empty(3))
        );
        let d = braid(3, &[1, -2]).to_diagram();
        assert_eq!(d.monotone_braid(), Some(braid(3, &[1, -2])));
        assert_eq!(clasp().monotone_braid(), None);
    }

    #[test]
    fn delete_keep_all_is_identity_operation() {
        let d = clasp();
        assert_eq!(d.delete_strands(&[1, 2]).unwrap(), d);
    }

    #[test]
    fn delete_middle_strand_of_half_twist() {
        // deleting the middle strand of σ1 σ2 σ1 leaves a single crossing
        let d = braid(3, &[1, 2, 1]).to_diagram();
        let kept = d.delete_strands(&[1, 3]).unwrap();
        assert_eq!(kept.boundary(), 2);
        let word = kept.monotone_braid().unwrap();
        assert!(word.equivalent(&braid(2, &[1])).unwrap());
        assert_eq!(word.letters(), &[1]);
    }

    #[test]
    fn delete_disjoint_horizontal_strand() {
        // clasp on strands 1,2 plus one horizontal strand above
        let padded = SliceDiagram::new(3, clasp().events().to_vec());
        assert_eq!(padded.delete_strands(&[1, 2]).unwrap(), clasp());
    }

    #[test]
    fn delete_errors() {
        let d = clasp();
        assert_eq!(d.delete_strands(&[]), Err(DiagramError::EmptyKeep));
        assert_eq!(
            d.delete_strands(&[3]),
            Err(DiagramError::KeepOutOfRange {
                index: 3,
                boundary: 2
            })
        );
        let tangle = SliceDiagram::new(
            2,
            vec![SliceEvent::Death { pos: 1 }, SliceEvent::Birth { pos: 1 }],
        );
        assert_eq!(
            tangle.delete_strands(&[1]),
            Err(DiagramError::NotAStringLink)
        );
    }

    #[test]
    fn delete_zigzag_from_clasp() {
        // keeping only strand 1 of the clasp leaves a planar zig-zag
        let kept = clasp().delete_strands(&[1]).unwrap();
        assert_eq!(
            kept.events(),
            &[SliceEvent::Birth { pos: 2 }, SliceEvent::Death { pos: 1 }]
        );
        assert_eq!(kept.boundary(), 1);
        kept.validate().unwrap();
    }

    #[test]
    fn parse_and_display_round_trip() {
        let text = "tangle n=2\nbirth 3\nx 2 +\nx 2 +\nx 2 +\ndeath 1\n";
        let d = SliceDiagram::parse(text).unwrap();
        assert_eq!(d, clasp());
        assert_eq!(d.to_string(), text);

        let commented = "# the clasp\ntangle n=2\nbirth 3 # cap\nx 2 +\nx 2 +\nx 2 +\ndeath 1\n";
        assert_eq!(SliceDiagram::parse(commented).unwrap(), clasp());
    }

    #[test]
    fn parse_errors_carry_line_and_column() {
        let err = SliceDiagram::parse("tangle n=2\nx 0 +\n").unwrap_err();
        assert_eq!((err.line, err.column), (2, 3));
        let err = SliceDiagram::parse("tangle n=2\ny 1\n").unwrap_err();
        assert_eq!((err.line, err.column), (2, 1));
        let err = SliceDiagram::parse("tangle n=2\nx 1 ?\n").unwrap_err();
        assert_eq!((err.line, err.column), (2, 5));
        assert!(SliceDiagram::parse("").is_err());
    }
}

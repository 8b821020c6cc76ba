//! Bounded rewriting of a string link diagram towards a monotone (braid)
//! form.
//!
//! The moves all preserve the equivalence class of the diagram:
//!
//! * cancellation of an adjacent inverse crossing pair (a planar second
//!   Reidemeister move);
//! * removal of a birth-death zig-zag when the two caps are adjacent and
//!   aligned;
//! * removal of a crossing that curls the two newborn strands of a birth,
//!   or the two dying strands of a death (a first Reidemeister move at a
//!   turnback);
//! * interchange of adjacent events with disjoint position support, used to
//!   bubble deaths leftwards and births rightwards until caps meet.
//!
//! The search is a deterministic greedy loop over these moves, so it is a
//! heuristic, not a decision procedure: exhausting the budget or reaching a
//! diagram with no applicable move reports failure rather than a verdict.

use super::{DiagramError, SliceDiagram, SliceEvent};

/// Result of a [`monotonize`] search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MonotonizeOutcome {
    /// A monotone diagram was reached; the braid word read off it.
    Braid(crate::braid::BraidWord),
    /// No applicable rewrite remains but births or deaths persist.
    Stuck,
    /// The step budget ran out before the search finished.
    BudgetExhausted,
}

#[derive(Debug, Clone, Copy)]
enum Move {
    /// Remove events at `k` and `k+1`.
    RemovePair(usize),
    /// Remove the single event at `k`.
    Remove(usize),
    /// Replace events at `k`, `k+1` by the two given events.
    Swap(usize, SliceEvent, SliceEvent),
}

/// Searches for a braid representative of a string link within `budget`
/// rewrite steps.
pub fn monotonize(d: &SliceDiagram, budget: usize) -> Result<MonotonizeOutcome, DiagramError> {
    let trace = d.validate()?;
    if !trace.is_string_link() {
        return Err(DiagramError::NotAStringLink);
    }
    let mut events = d.events().to_vec();
    let mut steps = 0usize;
    loop {
        if events
            .iter()
            .all(|ev| matches!(ev, SliceEvent::Cross { .. }))
        {
            let word = SliceDiagram::new(d.boundary(), events)
                .monotone_braid()
                .expect("crossings only");
            return Ok(MonotonizeOutcome::Braid(word));
        }
        match find_move(&events) {
            None => return Ok(MonotonizeOutcome::Stuck),
            Some(mv) => {
                if steps >= budget {
                    return Ok(MonotonizeOutcome::BudgetExhausted);
                }
                apply(&mut events, mv);
                steps += 1;
            }
        }
    }
}

fn find_move(events: &[SliceEvent]) -> Option<Move> {
    use SliceEvent::*;
    // local cancellations first, leftmost wins
    for k in 0..events.len().saturating_sub(1) {
        match (events[k], events[k + 1]) {
            (Cross { pos: p, sign: s }, Cross { pos: q, sign: t }) if p == q && t == s.flip() => {
                return Some(Move::RemovePair(k));
            }
            (Birth { pos: p }, Death { pos: q }) if q + 1 == p || q == p + 1 => {
                return Some(Move::RemovePair(k));
            }
            (Birth { pos: p }, Cross { pos: q, .. }) if q == p => {
                return Some(Move::Remove(k + 1));
            }
            (Cross { pos: p, .. }, Death { pos: q }) if q == p => {
                return Some(Move::Remove(k));
            }
            _ => {}
        }
    }
    // bubble deaths leftwards
    for k in 1..events.len() {
        if matches!(events[k], Death { .. })
            && !matches!(events[k - 1], Death { .. })
        {
            if let Some((e2, e1)) = commute(events[k - 1], events[k]) {
                return Some(Move::Swap(k - 1, e2, e1));
            }
        }
    }
    // bubble births rightwards
    for k in 0..events.len().saturating_sub(1) {
        if matches!(events[k], Birth { .. }) && !matches!(events[k + 1], Birth { .. }) {
            if let Some((e2, e1)) = commute(events[k], events[k + 1]) {
                return Some(Move::Swap(k, e2, e1));
            }
        }
    }
    None
}

fn apply(events: &mut Vec<SliceEvent>, mv: Move) {
    match mv {
        Move::RemovePair(k) => {
            events.drain(k..k + 2);
        }
        Move::Remove(k) => {
            events.remove(k);
        }
        Move::Swap(k, e2, e1) => {
            events[k] = e2;
            events[k + 1] = e1;
        }
    }
}

/// Interchange law for adjacent events with disjoint support: given
/// `[e1, e2]`, returns `(e2', e1')` so that `[e2', e1']` is the same
/// diagram. Positions are adjusted for the width changes of caps.
fn commute(e1: SliceEvent, e2: SliceEvent) -> Option<(SliceEvent, SliceEvent)> {
    use SliceEvent::*;
    let cross = |pos, sign| Cross { pos, sign };
    match (e1, e2) {
        (Cross { pos: p, sign: s }, Cross { pos: q, sign: t }) => {
            if q + 1 < p || q > p + 1 {
                Some((cross(q, t), cross(p, s)))
            } else {
                None
            }
        }
        (Cross { pos: p, sign: s }, Birth { pos: q }) => {
            if q <= p {
                Some((Birth { pos: q }, cross(p + 2, s)))
            } else if q >= p + 2 {
                Some((Birth { pos: q }, cross(p, s)))
            } else {
                None
            }
        }
        (Cross { pos: p, sign: s }, Death { pos: q }) => {
            if q + 1 < p {
                Some((Death { pos: q }, cross(p - 2, s)))
            } else if q > p + 1 {
                Some((Death { pos: q }, cross(p, s)))
            } else {
                None
            }
        }
        (Birth { pos: p }, Cross { pos: q, sign: t }) => {
            if q + 1 < p {
                Some((cross(q, t), Birth { pos: p }))
            } else if q > p + 1 {
                Some((cross(q - 2, t), Birth { pos: p }))
            } else {
                None
            }
        }
        (Birth { pos: p }, Birth { pos: q }) => {
            if q <= p {
                Some((Birth { pos: q }, Birth { pos: p + 2 }))
            } else if q >= p + 2 {
                Some((Birth { pos: q - 2 }, Birth { pos: p }))
            } else {
                None
            }
        }
        (Birth { pos: p }, Death { pos: q }) => {
            if q + 1 < p {
                Some((Death { pos: q }, Birth { pos: p - 2 }))
            } else if q > p + 1 {
                Some((Death { pos: q - 2 }, Birth { pos: p }))
            } else {
                None
            }
        }
        (Death { pos: p }, Cross { pos: q, sign: t }) => {
            if q + 1 < p {
                Some((cross(q, t), Death { pos: p }))
            } else if q >= p {
                Some((cross(q + 2, t), Death { pos: p }))
            } else {
                None
            }
        }
        (Death { pos: p }, Birth { pos: q }) => {
            if q <= p {
                Some((Birth { pos: q }, Death { pos: p + 2 }))
            } else {
                Some((Birth { pos: q + 2 }, Death { pos: p }))
            }
        }
        (Death { pos: p }, Death { pos: q }) => {
            if q + 1 < p {
                Some((Death { pos: q }, Death { pos: p - 2 }))
            } else {
                Some((Death { pos: q + 2 }, Death { pos: p }))
            }
        }
    }
}

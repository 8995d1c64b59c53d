//! The two local moves between tilings by the domino and the L.
//!
//! Templates are given at anchor `(0,0)`. Move 1 with `k` dominoes trades two
//! Ls for dominoes; move 2 slides one L two cells to the right.

use std::collections::VecDeque;
use std::fmt;

use rustc_hash::FxHashMap;
use thiserror::Error;

use super::alg::{DOMINO, L_TILE};
use crate::lattice::{Cell, Placement, TileSet, Tiling};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum MoveKind {
    /// Two Ls joined by `k >= 1` dominoes become `k + 3` dominoes.
    One {
        k: u32,
    },
    Two,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Direction {
    Forward,
    Backward,
}

impl Direction {
    pub fn reversed(self) -> Self {
        match self {
            Direction::Forward => Direction::Backward,
            Direction::Backward => Direction::Forward,
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct MoveApplication {
    pub kind: MoveKind,
    pub direction: Direction,
    pub anchor: Cell,
}

impl MoveApplication {
    pub fn new(kind: MoveKind, direction: Direction, anchor: impl Into<Cell>) -> Self {
        MoveApplication { kind, direction, anchor: anchor.into() }
    }

    /// The application that undoes this one.
    pub fn inverse(&self) -> Self {
        MoveApplication { direction: self.direction.reversed(), ..self.clone() }
    }
}

impl fmt::Display for MoveApplication {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let dir = match self.direction {
            Direction::Forward => "forward",
            Direction::Backward => "backward",
        };
        match self.kind {
            MoveKind::One { k } => write!(f, "move 1 (k={k}) {dir} at {}", self.anchor),
            MoveKind::Two => write!(f, "move 2 {dir} at {}", self.anchor),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum MoveError {
    #[error("{0} does not match the tiling")]
    TemplateMismatch(MoveApplication),
    #[error("move 1 needs k >= 1")]
    ZeroK,
    #[error("local moves apply to tilings by the fixed domino and L only")]
    WrongTileSet,
    #[error("the two tilings cover different regions")]
    RegionMismatch,
    #[error("search budget of {states} tilings exceeded")]
    BudgetExceeded { states: usize },
    #[error("tilings are not connected by local moves ({explored} tilings explored)")]
    Disconnected { explored: usize },
}

/// A template block: tile index and its cells in scan order.
pub type Block = (usize, Vec<(i32, i32)>);

fn domino(x: i32, y: i32) -> Block {
    (DOMINO, vec![(x, y), (x + 1, y)])
}

fn l_tile(x: i32, y: i32) -> Block {
    (L_TILE, vec![(x, y), (x + 1, y), (x + 1, y + 1)])
}

/// Forward `(source, target)` blocks of a move at anchor `(0,0)`.
pub fn move_template(kind: MoveKind) -> (Vec<Block>, Vec<Block>) {
    match kind {
        MoveKind::One { k } => {
            let k = k as i32;
            let mut source = vec![l_tile(0, 0)];
            source.extend((1..=k).map(|j| domino(2 * j, 1)));
            source.push(l_tile(2 * k + 1, 0));
            let mut target = vec![domino(0, 0)];
            target.extend((0..=k).map(|j| domino(2 * j + 1, 1)));
            target.push(domino(2 * k + 1, 0));
            (source, target)
        }
        MoveKind::Two => {
            (vec![domino(0, 0), domino(1, 1), l_tile(2, 0)], vec![l_tile(0, 0), domino(2, 1), domino(2, 0)])
        }
    }
}

fn oriented(m: &MoveApplication) -> (Vec<Block>, Vec<Block>) {
    let (s, t) = move_template(m.kind);
    match m.direction {
        Direction::Forward => (s, t),
        Direction::Backward => (t, s),
    }
}

/// Placement index covering each cell.
struct Owners<'a> {
    tiling: &'a Tiling,
    owner: FxHashMap<(i32, i32), usize>,
}

impl<'a> Owners<'a> {
    fn new(tiling: &'a Tiling) -> Self {
        let mut owner = FxHashMap::default();
        for (i, p) in tiling.placements.iter().enumerate() {
            for c in p.cells() {
                owner.insert((c.x(), c.y()), i);
            }
        }
        Owners { tiling, owner }
    }

    /// The placement exactly equal to `block` shifted by `(ax, ay)`.
    fn find(&self, block: &Block, ax: i32, ay: i32) -> Option<usize> {
        let (tile, cells) = block;
        let (x, y) = cells[0];
        let i = *self.owner.get(&(x + ax, y + ay))?;
        let p = &self.tiling.placements[i];
        let same = p.tile == *tile
            && p.len() == cells.len()
            && p.cells().iter().zip(cells).all(|(c, &(x, y))| c.x() == x + ax && c.y() == y + ay);
        same.then_some(i)
    }

    fn matches(&self, blocks: &[Block], ax: i32, ay: i32) -> Option<Vec<usize>> {
        blocks.iter().map(|b| self.find(b, ax, ay)).collect()
    }
}

fn check_tileset(t: &Tiling) -> Result<(), MoveError> {
    if t.tileset == TileSet::domino_l() {
        Ok(())
    } else {
        Err(MoveError::WrongTileSet)
    }
}

/// Replaces the source blocks of `m` by its target blocks. Untouched placements keep their order.
pub fn apply_move(t: &Tiling, m: &MoveApplication) -> Result<Tiling, MoveError> {
    check_tileset(t)?;
    if m.kind == (MoveKind::One { k: 0 }) {
        return Err(MoveError::ZeroK);
    }
    if m.anchor.dim() != 2 {
        return Err(MoveError::TemplateMismatch(m.clone()));
    }
    let (from, to) = oriented(m);
    let (ax, ay) = (m.anchor.x(), m.anchor.y());
    let owners = Owners::new(t);
    let mut gone = owners.matches(&from, ax, ay).ok_or_else(|| MoveError::TemplateMismatch(m.clone()))?;
    gone.sort_unstable();
    let mut placements: Vec<Placement> = t
        .placements
        .iter()
        .enumerate()
        .filter(|(i, _)| gone.binary_search(i).is_err())
        .map(|(_, p)| p.clone())
        .collect();
    placements.extend(to.iter().map(|(tile, cells)| {
        let (x, y) = cells[0];
        Placement::new(*tile, t.tileset.tile(*tile).clone(), Cell::xy(x + ax, y + ay))
    }));
    Ok(Tiling::new(t.region.clone(), t.tileset.clone(), placements))
}

/// Every move application whose source matches `t`, sorted.
pub fn find_move_applications(t: &Tiling) -> Vec<MoveApplication> {
    if check_tileset(t).is_err() {
        return Vec::new();
    }
    let owners = Owners::new(t);
    let mut out = Vec::new();
    let mut try_push = |kind, direction, ax: i32, ay: i32| {
        let m = MoveApplication::new(kind, direction, (ax, ay));
        let (from, _) = oriented(&m);
        if owners.matches(&from, ax, ay).is_some() {
            out.push(m);
        }
    };
    for p in &t.placements {
        let (ax, ay) = (p.offset.x(), p.offset.y());
        let has_domino = |x: i32, y: i32| owners.find(&domino(x, y), ax, ay).is_some();
        if p.tile == L_TILE {
            try_push(MoveKind::Two, Direction::Backward, ax, ay);
            let mut k = 1;
            while has_domino(2 * k, 1) {
                try_push(MoveKind::One { k: k as u32 }, Direction::Forward, ax, ay);
                k += 1;
            }
        } else if p.tile == DOMINO {
            try_push(MoveKind::Two, Direction::Forward, ax, ay);
            if has_domino(1, 1) {
                let mut k = 1;
                while has_domino(2 * k + 1, 1) {
                    try_push(MoveKind::One { k: k as u32 }, Direction::Backward, ax, ay);
                    k += 1;
                }
            }
        }
    }
    out.sort();
    out
}

/// Breadth-first search over the tiling graph state table.
struct Graph {
    states: Vec<Tiling>,
    seen: FxHashMap<Vec<Vec<Cell>>, usize>,
    parent: Vec<Option<(usize, MoveApplication)>>,
}

impl Graph {
    fn new(start: &Tiling) -> Self {
        let mut seen = FxHashMap::default();
        seen.insert(start.blocks(), 0);
        Graph { states: vec![start.clone()], seen, parent: vec![None] }
    }

    /// Expands breadth-first until `stop` holds for a state or the graph is exhausted.
    fn explore(
        &mut self,
        max_states: usize,
        mut stop: impl FnMut(&Tiling) -> bool,
    ) -> Result<Option<usize>, MoveError> {
        let mut queue = VecDeque::from([0usize]);
        if stop(&self.states[0]) {
            return Ok(Some(0));
        }
        while let Some(i) = queue.pop_front() {
            for m in find_move_applications(&self.states[i]) {
                let next = apply_move(&self.states[i], &m)?;
                let key = next.blocks();
                if self.seen.contains_key(&key) {
                    continue;
                }
                if self.states.len() >= max_states {
                    return Err(MoveError::BudgetExceeded { states: max_states });
                }
                let j = self.states.len();
                self.seen.insert(key, j);
                let done = stop(&next);
                self.states.push(next);
                self.parent.push(Some((i, m)));
                if done {
                    return Ok(Some(j));
                }
                queue.push_back(j);
            }
        }
        Ok(None)
    }
}

/// A shortest sequence of moves turning `t1` into `t2`.
pub fn connect_tilings(t1: &Tiling, t2: &Tiling, max_states: usize) -> Result<Vec<MoveApplication>, MoveError> {
    check_tileset(t1)?;
    check_tileset(t2)?;
    if t1.region != t2.region {
        return Err(MoveError::RegionMismatch);
    }
    let goal = t2.blocks();
    let mut g = Graph::new(t1);
    let Some(mut at) = g.explore(max_states, |t| t.blocks() == goal)? else {
        return Err(MoveError::Disconnected { explored: g.states.len() });
    };
    let mut path = Vec::new();
    while let Some((prev, m)) = g.parent[at].take() {
        path.push(m);
        at = prev;
    }
    path.reverse();
    Ok(path)
}

/// Every tiling reachable from `t` by local moves, `t` first.
pub fn reachable_tilings(t: &Tiling, max_states: usize) -> Result<Vec<Tiling>, MoveError> {
    check_tileset(t)?;
    let mut g = Graph::new(t);
    g.explore(max_states, |_| false)?;
    Ok(g.states)
}

use std::fmt;

use super::{Cell, LatticeError, Polyomino, Symmetry};

/// A tile shape, normalized so the coordinatewise minimum of its cells is the origin.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tile(Polyomino);

impl Tile {
    /// Normalizes `cells`. Tiles must be nonempty and face-connected.
    pub fn new(dim: usize, cells: impl IntoIterator<Item = Cell>) -> Result<Self, LatticeError> {
        Self::from_polyomino(&Polyomino::new(dim, cells)?)
    }

    pub fn from_xy(cells: impl IntoIterator<Item = (i32, i32)>) -> Result<Self, LatticeError> {
        Self::new(2, cells.into_iter().map(Cell::from))
    }

    pub fn from_polyomino(p: &Polyomino) -> Result<Self, LatticeError> {
        if p.is_empty() {
            return Err(LatticeError::EmptyRegion);
        }
        if !p.is_connected() {
            return Err(LatticeError::Disconnected);
        }
        Ok(Tile(p.normalized()))
    }

    pub fn dim(&self) -> usize {
        self.0.dim()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn cells(&self) -> &[Cell] {
        self.0.cells()
    }

    pub fn as_polyomino(&self) -> &Polyomino {
        &self.0
    }

    /// The cells of this shape translated by `offset`, in scan order.
    pub fn placed_at(&self, offset: &Cell) -> Vec<Cell> {
        self.0.cells().iter().map(|c| c.add(offset)).collect()
    }

    /// Whether the shape is simply connected: planar hole-free, or for
    /// `d >= 3` connected with a connected padded box complement.
    pub fn is_simply_connected(&self) -> bool {
        self.0.box_complement_connected()
    }

    /// The image under one group element, renormalized.
    fn image(&self, g: &super::SignedPermutation) -> Tile {
        let mut cells: Vec<Cell> = self.0.cells().iter().map(|c| g.apply(c)).collect();
        cells.sort_unstable();
        Tile(Polyomino::from_sorted_unchecked(self.dim(), cells).normalized())
    }
}

impl fmt::Debug for Tile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.0.cells()).finish()
    }
}

/// The lexicographically least normalized image of `t` over the symmetry group.
pub fn canonical_tile_form(t: &Tile, symmetry: Symmetry) -> Tile {
    symmetry.group(t.dim()).iter().map(|g| t.image(g)).min().expect("groups contain the identity")
}

/// All distinct normalized images of `t`, sorted.
pub fn tile_orbit(t: &Tile, symmetry: Symmetry) -> Vec<Tile> {
    let mut out: Vec<Tile> = symmetry.group(t.dim()).iter().map(|g| t.image(g)).collect();
    out.sort_unstable();
    out.dedup();
    out
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NamedTile {
    pub name: String,
    pub tile: Tile,
}

/// A list of tiles with the symmetry mode that governs their placements.
///
/// Construction checks that no two tiles coincide under the symmetry and
/// precomputes every admissible orientation ("variant") of each tile.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TileSet {
    dim: usize,
    symmetry: Symmetry,
    tiles: Vec<NamedTile>,
    variants: Vec<Vec<Tile>>,
}

impl TileSet {
    pub fn new(dim: usize, symmetry: Symmetry, tiles: Vec<NamedTile>) -> Result<Self, LatticeError> {
        if dim == 0 {
            return Err(LatticeError::ZeroDimension);
        }
        let mut canon: Vec<(Tile, &str)> = Vec::with_capacity(tiles.len());
        for nt in &tiles {
            if nt.tile.dim() != dim {
                return Err(LatticeError::DimensionMismatch { expected: dim, found: nt.tile.dim() });
            }
            if !nt.tile.is_simply_connected() {
                return Err(LatticeError::NotSimplyConnected(nt.name.clone()));
            }
            let c = canonical_tile_form(&nt.tile, symmetry);
            if let Some((_, other)) = canon.iter().find(|(o, _)| *o == c) {
                return Err(LatticeError::DuplicateTile(format!("{} and {}", other, nt.name)));
            }
            canon.push((c, &nt.name));
        }
        if let Some(dup) = tiles.iter().enumerate().find(|(i, t)| tiles[..*i].iter().any(|o| o.name == t.name)) {
            return Err(LatticeError::DuplicateTile(dup.1.name.clone()));
        }
        let variants = tiles.iter().map(|t| tile_orbit(&t.tile, symmetry)).collect();
        Ok(TileSet { dim, symmetry, tiles, variants })
    }

    /// Builds from `(name, shape)` pairs, normalizing each shape.
    pub fn from_shapes<'a>(
        dim: usize,
        symmetry: Symmetry,
        shapes: impl IntoIterator<Item = (&'a str, Tile)>,
    ) -> Result<Self, LatticeError> {
        Self::new(
            dim,
            symmetry,
            shapes.into_iter().map(|(name, tile)| NamedTile { name: name.to_string(), tile }).collect(),
        )
    }

    /// Horizontal domino and the L `{(0,0),(1,0),(1,1)}`, translation only.
    pub fn domino_l() -> Self {
        Self::from_shapes(2, Symmetry::Fixed, [("domino", shapes::domino()), ("L", shapes::l_tromino())])
            .expect("built-in set is valid")
    }

    /// Domino, L, 3-bar, T and plus with rotations: the planar fountain set.
    pub fn s2() -> Self {
        Self::from_shapes(
            2,
            Symmetry::Rotations,
            [
                ("domino", shapes::domino()),
                ("L", shapes::l_tromino()),
                ("bar3", shapes::bar3()),
                ("T", shapes::t_tetromino()),
                ("plus", shapes::plus()),
            ],
        )
        .expect("built-in set is valid")
    }

    /// Domino, L, 3-bar and T with rotations.
    pub fn sa() -> Self {
        let mut s2 = Self::s2();
        s2.tiles.truncate(4);
        s2.variants.truncate(4);
        s2
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn symmetry(&self) -> Symmetry {
        self.symmetry
    }

    pub fn len(&self) -> usize {
        self.tiles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tiles.is_empty()
    }

    pub fn tiles(&self) -> &[NamedTile] {
        &self.tiles
    }

    pub fn tile(&self, i: usize) -> &Tile {
        &self.tiles[i].tile
    }

    pub fn name(&self, i: usize) -> &str {
        &self.tiles[i].name
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.tiles.iter().position(|t| t.name == name)
    }

    /// Admissible orientations of tile `i`, sorted.
    pub fn variants(&self, i: usize) -> &[Tile] {
        &self.variants[i]
    }

    pub fn is_admissible(&self, i: usize, variant: &Tile) -> bool {
        self.variants.get(i).is_some_and(|v| v.binary_search(variant).is_ok())
    }

    /// The tile whose orbit contains `shape` (normalized), with its variant.
    pub fn identify(&self, shape: &Tile) -> Option<usize> {
        (0..self.len()).find(|&i| self.is_admissible(i, shape))
    }

    /// Canonical forms of all tiles under the set's own symmetry, sorted.
    pub fn canonical_forms(&self) -> Vec<Tile> {
        let mut v: Vec<Tile> = self.tiles.iter().map(|t| canonical_tile_form(&t.tile, self.symmetry)).collect();
        v.sort_unstable();
        v
    }

    pub fn min_tile_size(&self) -> Option<usize> {
        self.tiles.iter().map(|t| t.tile.len()).min()
    }

    /// A copy without tile `i`.
    pub fn without(&self, i: usize) -> TileSet {
        let mut s = self.clone();
        s.tiles.remove(i);
        s.variants.remove(i);
        s
    }

    /// A copy with `tile` appended. Fails if it duplicates an existing tile.
    pub fn with_tile(&self, name: String, tile: Tile) -> Result<TileSet, LatticeError> {
        let mut tiles = self.tiles.clone();
        tiles.push(NamedTile { name, tile });
        TileSet::new(self.dim, self.symmetry, tiles)
    }
}

/// The named shapes used throughout the crate.
pub mod shapes {
    use super::Tile;

    pub fn monomino() -> Tile {
        Tile::from_xy([(0, 0)]).unwrap()
    }

    /// Horizontal domino.
    pub fn domino() -> Tile {
        Tile::from_xy([(0, 0), (1, 0)]).unwrap()
    }

    /// `{(0,0),(1,0),(1,1)}`: the top cell sits above the right base cell.
    pub fn l_tromino() -> Tile {
        Tile::from_xy([(0, 0), (1, 0), (1, 1)]).unwrap()
    }

    pub fn bar3() -> Tile {
        Tile::from_xy([(0, 0), (1, 0), (2, 0)]).unwrap()
    }

    /// Stem pointing up.
    pub fn t_tetromino() -> Tile {
        Tile::from_xy([(0, 0), (1, 0), (2, 0), (1, 1)]).unwrap()
    }

    pub fn plus() -> Tile {
        Tile::from_xy([(1, 0), (0, 1), (1, 1), (2, 1), (1, 2)]).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixed_form_is_identity() {
        let l = shapes::l_tromino();
        assert_eq!(canonical_tile_form(&l, Symmetry::Fixed), l);
    }

    #[test]
    fn rotations_of_l_collapse() {
        let orbit = tile_orbit(&shapes::l_tromino(), Symmetry::Rotations);
        assert_eq!(orbit.len(), 4);
        let c = canonical_tile_form(&orbit[0], Symmetry::Rotations);
        assert!(orbit.iter().all(|t| canonical_tile_form(t, Symmetry::Rotations) == c));
    }

    #[test]
    fn plus_is_its_own_canonical_form() {
        let p = shapes::plus();
        assert_eq!(canonical_tile_form(&p, Symmetry::Rotations), p);
        assert_eq!(tile_orbit(&p, Symmetry::Rotations).len(), 1);
    }

    #[test]
    fn domino_orbit_has_two_orientations() {
        let orbit = tile_orbit(&shapes::domino(), Symmetry::Rotations);
        assert_eq!(orbit, vec![shapes::domino(), Tile::from_xy([(0, 0), (0, 1)]).unwrap()]);
    }

    #[test]
    fn tileset_rejects_rotated_duplicates() {
        let vertical = Tile::from_xy([(0, 0), (0, 1)]).unwrap();
        let err = TileSet::from_shapes(2, Symmetry::Rotations, [("h", shapes::domino()), ("v", vertical.clone())]);
        assert!(matches!(err, Err(LatticeError::DuplicateTile(_))));
        assert!(TileSet::from_shapes(2, Symmetry::Fixed, [("h", shapes::domino()), ("v", vertical)]).is_ok());
    }

    #[test]
    fn tileset_rejects_holes() {
        let ring = Tile::from_xy([(0, 0), (1, 0), (2, 0), (0, 1), (2, 1), (0, 2), (1, 2), (2, 2)]).unwrap();
        assert!(matches!(
            TileSet::from_shapes(2, Symmetry::Rotations, [("ring", ring)]),
            Err(LatticeError::NotSimplyConnected(_))
        ));
    }

    #[test]
    fn builtin_sets() {
        assert_eq!(TileSet::s2().len(), 5);
        assert_eq!(TileSet::sa().len(), 4);
        assert_eq!(TileSet::sa().variants(3).len(), 4);
        assert_eq!(TileSet::domino_l().variants(0), &[shapes::domino()]);
        assert_eq!(TileSet::s2().min_tile_size(), Some(2));
    }
}

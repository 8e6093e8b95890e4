//! Planar 3-trees (stacked triangulations) as stacking programs.
//!
//! A planar 3-tree is built from a root triangle by repeatedly splitting a
//! facial triangle with a new degree-3 vertex. We store exactly that: the
//! outer triangle plus the ordered sequence of splits. Everything else
//! (faces, adjacency, the face tree with interior counts) is derived by
//! replay.

use std::collections::{BTreeSet, HashMap, HashSet};
use thiserror::Error;

/// Symmetric adjacency lists indexed by vertex id.
pub type Adjacency = Vec<BTreeSet<usize>>;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TriTreeError {
    #[error("face ({0} {1} {2}) not present")]
    FaceNotPresent(usize, usize, usize),
    #[error("unknown vertex {0}")]
    UnknownVertex(usize),
    #[error("duplicate label {0:?}")]
    DuplicateLabel(String),
    #[error("not a planar 3-tree on this root: {0}")]
    NotPlanar3Tree(String),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

#[inline]
fn sorted3(mut f: [usize; 3]) -> [usize; 3] {
    f.sort_unstable();
    f
}

/// A planar 3-tree as a stacking program.
///
/// Vertex ids are `0..n`; the outer triangle is always `[0, 1, 2]` and the
/// vertex added by program step `i` is `3 + i`. Each program entry records
/// the split face in its stored (creation-order) orientation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriTree {
    labels: Vec<String>,
    program: Vec<[usize; 3]>,
    /// Current stackable faces in creation order, stored orientation.
    faces: Vec<[usize; 3]>,
    face_lookup: HashMap<[usize; 3], [usize; 3]>,
}

impl TriTree {
    /// A bare triangle with outer labels; its single stackable face is the
    /// root face itself.
    pub fn new_root(labels: [&str; 3]) -> TriTree {
        let root = [0, 1, 2];
        let mut face_lookup = HashMap::new();
        face_lookup.insert(root, root);
        TriTree {
            labels: labels.iter().map(|s| s.to_string()).collect(),
            program: Vec::new(),
            faces: vec![root],
            face_lookup,
        }
    }

    pub fn n(&self) -> usize {
        3 + self.program.len()
    }

    pub fn outer(&self) -> [usize; 3] {
        [0, 1, 2]
    }

    /// Program entries in stacking order; entry `i` is the face split by
    /// vertex `3 + i`.
    pub fn program(&self) -> &[[usize; 3]] {
        &self.program
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Current stackable faces in creation order.
    pub fn faces(&self) -> &[[usize; 3]] {
        &self.faces
    }

    /// Resolve a vertex set to the stored orientation of a current face.
    pub fn find_face(&self, face: [usize; 3]) -> Option<[usize; 3]> {
        self.face_lookup.get(&sorted3(face)).copied()
    }

    /// Total face count of the plane triangulation, `2n - 4` (the stackable
    /// faces plus the outer face; a bare triangle counts both of its sides).
    pub fn face_count(&self) -> usize {
        2 * self.n() - 4
    }

    /// All faces usable as the outer face of a drawing: the designated outer
    /// face first, then the stackable faces in creation order.
    pub fn all_faces(&self) -> Vec<[usize; 3]> {
        let mut out = vec![[0, 1, 2]];
        for f in &self.faces {
            if sorted3(*f) != [0, 1, 2] {
                out.push(*f);
            }
        }
        out
    }

    /// Split `face` with a new vertex; returns the new vertex id.
    ///
    /// The face may be given in any vertex order; it is resolved against the
    /// current faces by its vertex set and recorded in stored orientation.
    pub fn stack(&mut self, face: [usize; 3], label: &str) -> Result<usize, TriTreeError> {
        let key = sorted3(face);
        let stored = *self
            .face_lookup
            .get(&key)
            .ok_or(TriTreeError::FaceNotPresent(face[0], face[1], face[2]))?;
        let v = self.n();
        self.labels.push(label.to_string());
        self.program.push(stored);
        self.face_lookup.remove(&key);
        let pos = self.faces.iter().position(|f| sorted3(*f) == key).unwrap();
        self.faces.remove(pos);
        for child in children_of(stored, v) {
            self.face_lookup.insert(sorted3(child), child);
            self.faces.push(child);
        }
        Ok(v)
    }

    /// Symmetric adjacency lists derived from the program.
    pub fn adjacency(&self) -> Adjacency {
        let mut adj: Adjacency = vec![BTreeSet::new(); self.n()];
        let connect = |a: usize, b: usize, adj: &mut Adjacency| {
            adj[a].insert(b);
            adj[b].insert(a);
        };
        connect(0, 1, &mut adj);
        connect(1, 2, &mut adj);
        connect(0, 2, &mut adj);
        for (i, face) in self.program.iter().enumerate() {
            let v = 3 + i;
            for &u in face {
                connect(v, u, &mut adj);
            }
        }
        adj
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut edges = vec![(0, 1), (1, 2), (0, 2)];
        for (i, face) in self.program.iter().enumerate() {
            let v = 3 + i;
            for &u in face {
                edges.push((u, v));
            }
        }
        edges
    }

    /// The face tree with per-node interior counts.
    pub fn face_tree(&self) -> FaceTree {
        FaceTree::build_weighted(self, |_| 0)
    }

    /// Serialize in the stacking text format.
    pub fn to_text(&self) -> String {
        let mut out = format!(
            "outer: {} {} {}\n",
            self.labels[0], self.labels[1], self.labels[2]
        );
        for (i, face) in self.program.iter().enumerate() {
            out.push_str(&format!(
                "{}: {} {} {}\n",
                self.labels[3 + i],
                self.labels[face[0]],
                self.labels[face[1]],
                self.labels[face[2]]
            ));
        }
        out
    }

    /// Parse the stacking text format: a line `outer: a b c` followed by one
    /// line `v: p q r` per stack.
    pub fn from_text(text: &str) -> Result<TriTree, TriTreeError> {
        let mut tree: Option<TriTree> = None;
        let mut ids: HashMap<String, usize> = HashMap::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (head, rest) = line.split_once(':').ok_or(TriTreeError::Parse {
                line: lineno + 1,
                msg: "expected `name: ...`".into(),
            })?;
            let head = head.trim();
            let parts: Vec<&str> = rest.split_whitespace().collect();
            if parts.len() != 3 {
                return Err(TriTreeError::Parse {
                    line: lineno + 1,
                    msg: format!("expected 3 vertex names, got {}", parts.len()),
                });
            }
            match (&mut tree, head) {
                (None, "outer") => {
                    let names: HashSet<&str> = parts.iter().copied().collect();
                    if names.len() != 3 {
                        return Err(TriTreeError::Parse {
                            line: lineno + 1,
                            msg: "outer labels must be distinct".into(),
                        });
                    }
                    tree = Some(TriTree::new_root([parts[0], parts[1], parts[2]]));
                    for (i, name) in parts.iter().enumerate() {
                        ids.insert(name.to_string(), i);
                    }
                }
                (None, _) => {
                    return Err(TriTreeError::Parse {
                        line: lineno + 1,
                        msg: "first line must be `outer: a b c`".into(),
                    })
                }
                (Some(_), "outer") => {
                    return Err(TriTreeError::Parse {
                        line: lineno + 1,
                        msg: "duplicate outer line".into(),
                    })
                }
                (Some(t), name) => {
                    if ids.contains_key(name) {
                        return Err(TriTreeError::DuplicateLabel(name.to_string()));
                    }
                    let mut face = [0usize; 3];
                    for (i, part) in parts.iter().enumerate() {
                        face[i] = *ids.get(*part).ok_or(TriTreeError::Parse {
                            line: lineno + 1,
                            msg: format!("unknown vertex {part:?}"),
                        })?;
                    }
                    let v = t.stack(face, name)?;
                    ids.insert(name.to_string(), v);
                }
            }
        }
        tree.ok_or(TriTreeError::Parse {
            line: 0,
            msg: "empty input".into(),
        })
    }
}

/// Children of a face `(u1, u2, u3)` split by `v`, ordered opposite each
/// corner: `(u2 u3 v)`, `(u1 u3 v)`, `(u1 u2 v)`.
#[inline]
pub(crate) fn children_of(face: [usize; 3], v: usize) -> [[usize; 3]; 3] {
    [
        [face[1], face[2], v],
        [face[0], face[2], v],
        [face[0], face[1], v],
    ]
}

/// Node of a [`FaceTree`].
#[derive(Clone, Debug)]
pub struct FaceNode {
    /// Face in stored orientation.
    pub face: [usize; 3],
    /// Splitting vertex and the three child node indices, if split.
    pub split: Option<(usize, [usize; 3])>,
    /// Number of vertices (or attached weight, for weighted trees) strictly
    /// inside this face.
    pub interior: usize,
}

/// The split history of a 3-tree as a ternary tree over faces.
#[derive(Clone, Debug)]
pub struct FaceTree {
    pub nodes: Vec<FaceNode>,
}

impl FaceTree {
    /// Face tree where each leaf carries `leaf_weight(face)` and each split
    /// node counts its splitting vertex plus everything below.
    pub fn build_weighted(tree: &TriTree, leaf_weight: impl Fn(&[usize; 3]) -> usize) -> FaceTree {
        let mut nodes = vec![FaceNode {
            face: [0, 1, 2],
            split: None,
            interior: 0,
        }];
        let mut leaf_of: HashMap<[usize; 3], usize> = HashMap::new();
        leaf_of.insert([0, 1, 2], 0);
        for (i, face) in tree.program().iter().enumerate() {
            let v = 3 + i;
            let idx = leaf_of.remove(&sorted3(*face)).expect("face tree replay");
            let mut child_ids = [0usize; 3];
            for (c, child) in children_of(nodes[idx].face, v).into_iter().enumerate() {
                let id = nodes.len();
                nodes.push(FaceNode {
                    face: child,
                    split: None,
                    interior: 0,
                });
                leaf_of.insert(sorted3(child), id);
                child_ids[c] = id;
            }
            nodes[idx].split = Some((v, child_ids));
        }
        // interior counts bottom-up; children always have larger indices
        for idx in (0..nodes.len()).rev() {
            nodes[idx].interior = match nodes[idx].split {
                None => leaf_weight(&nodes[idx].face),
                Some((_, ch)) => 1 + ch.iter().map(|&c| nodes[c].interior).sum::<usize>(),
            };
        }
        FaceTree { nodes }
    }

    pub fn root(&self) -> &FaceNode {
        &self.nodes[0]
    }
}

/// Reconstruct a stacking program for `adj` rooted at the triangle `outer`.
///
/// Peels eligible degree-3 vertices (lowest id first) whose neighborhood is a
/// triangle, then replays the reversed removal order and checks that the
/// derived adjacency equals the input. Returns the tree together with the
/// map from new vertex ids to input ids.
pub fn recognize(adj: &Adjacency, outer: [usize; 3]) -> Result<(TriTree, Vec<usize>), TriTreeError> {
    let n = adj.len();
    if n < 3 {
        return Err(TriTreeError::NotPlanar3Tree("fewer than 3 vertices".into()));
    }
    for &v in &outer {
        if v >= n {
            return Err(TriTreeError::UnknownVertex(v));
        }
    }
    if outer[0] == outer[1] || outer[1] == outer[2] || outer[0] == outer[2] {
        return Err(TriTreeError::NotPlanar3Tree("outer vertices not distinct".into()));
    }
    for (i, nb) in adj.iter().enumerate() {
        if nb.contains(&i) {
            return Err(TriTreeError::NotPlanar3Tree("self loop".into()));
        }
        for &j in nb {
            if j >= n || !adj[j].contains(&i) {
                return Err(TriTreeError::NotPlanar3Tree("asymmetric adjacency".into()));
            }
        }
    }
    if !(adj[outer[0]].contains(&outer[1])
        && adj[outer[1]].contains(&outer[2])
        && adj[outer[0]].contains(&outer[2]))
    {
        return Err(TriTreeError::NotPlanar3Tree("outer is not a triangle".into()));
    }

    let is_outer = |v: usize| outer.contains(&v);
    let mut live: Vec<BTreeSet<usize>> = adj.clone();
    let mut alive: BTreeSet<usize> = (0..n).collect();
    let mut peeled: Vec<(usize, [usize; 3])> = Vec::new();
    while alive.len() > 3 {
        let pick = alive.iter().copied().find(|&v| {
            if is_outer(v) || live[v].len() != 3 {
                return false;
            }
            let nb: Vec<usize> = live[v].iter().copied().collect();
            live[nb[0]].contains(&nb[1])
                && live[nb[0]].contains(&nb[2])
                && live[nb[1]].contains(&nb[2])
        });
        let v = pick.ok_or_else(|| {
            TriTreeError::NotPlanar3Tree(format!(
                "peeling stuck with {} vertices remaining",
                alive.len()
            ))
        })?;
        let nb: Vec<usize> = live[v].iter().copied().collect();
        peeled.push((v, [nb[0], nb[1], nb[2]]));
        for &u in &nb {
            live[u].remove(&v);
        }
        live[v].clear();
        alive.remove(&v);
    }
    for &v in &outer {
        if !alive.contains(&v) {
            return Err(TriTreeError::NotPlanar3Tree(
                "an outer vertex was peeled away".into(),
            ));
        }
    }

    // replay in reverse removal order
    let mut new_to_old: Vec<usize> = outer.to_vec();
    let mut old_to_new: HashMap<usize, usize> = HashMap::new();
    for (i, &v) in outer.iter().enumerate() {
        old_to_new.insert(v, i);
    }
    let mut tree = TriTree::new_root(["v0", "v1", "v2"]);
    tree.labels = outer.iter().map(|v| format!("v{v}")).collect();
    for &(v, nbs) in peeled.iter().rev() {
        let face = [old_to_new[&nbs[0]], old_to_new[&nbs[1]], old_to_new[&nbs[2]]];
        let new_id = tree
            .stack(face, &format!("v{v}"))
            .map_err(|_| TriTreeError::NotPlanar3Tree(format!("vertex {v} splits a non-face")))?;
        old_to_new.insert(v, new_id);
        new_to_old.push(v);
    }

    // the derived adjacency must match the input exactly
    let derived = tree.adjacency();
    for (new_v, &old_v) in new_to_old.iter().enumerate() {
        let mapped: BTreeSet<usize> = derived[new_v].iter().map(|&u| new_to_old[u]).collect();
        if mapped != adj[old_v] {
            return Err(TriTreeError::NotPlanar3Tree(
                "derived adjacency differs from input".into(),
            ));
        }
    }
    Ok((tree, new_to_old))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn abc() -> TriTree {
        TriTree::new_root(["a", "b", "c"])
    }

    #[test]
    fn root_triangle() {
        let t = abc();
        assert_eq!(t.n(), 3);
        assert!(t.program().is_empty());
        assert_eq!(t.faces(), &[[0, 1, 2]]);
        assert_eq!(t.face_count(), 2);
        assert_eq!(t.all_faces(), vec![[0, 1, 2]]);
    }

    #[test]
    fn stack_makes_k4() {
        let mut t = abc();
        let d = t.stack([0, 1, 2], "d").unwrap();
        assert_eq!(d, 3);
        assert_eq!(t.n(), 4);
        let sets: HashSet<[usize; 3]> = t.faces().iter().map(|f| sorted3(*f)).collect();
        assert_eq!(
            sets,
            HashSet::from([[1, 2, 3], [0, 2, 3], [0, 1, 3]])
        );
        assert_eq!(t.face_count(), 4);
        // every pair adjacent
        let adj = t.adjacency();
        for i in 0..4 {
            assert_eq!(adj[i].len(), 3);
        }
    }

    #[test]
    fn five_stacks_give_eight_vertices_twelve_faces() {
        let mut t = abc();
        t.stack([0, 1, 2], "d").unwrap();
        t.stack([0, 1, 3], "e").unwrap();
        t.stack([1, 2, 3], "f").unwrap();
        t.stack([0, 2, 3], "g").unwrap();
        t.stack([0, 1, 4], "h").unwrap();
        assert_eq!(t.n(), 8);
        assert_eq!(t.face_count(), 12);
        assert_eq!(t.edges().len(), 3 * 8 - 6);
    }

    #[test]
    fn stale_face_rejected() {
        let mut t = abc();
        t.stack([0, 1, 2], "d").unwrap();
        assert_eq!(
            t.stack([0, 1, 2], "e"),
            Err(TriTreeError::FaceNotPresent(0, 1, 2))
        );
    }

    #[test]
    fn face_tree_counts() {
        let mut t = abc();
        t.stack([0, 1, 2], "d").unwrap();
        let ft = t.face_tree();
        let (_, kids) = ft.root().split.unwrap();
        assert_eq!(ft.root().interior, 1);
        for c in kids {
            assert_eq!(ft.nodes[c].interior, 0);
        }

        // d splits (a,b,c); e splits (a,c,d): child counts (0,1,0) over
        // faces ((b,c,d),(a,c,d),(a,b,d))
        let mut t = abc();
        t.stack([0, 1, 2], "d").unwrap();
        t.stack([0, 2, 3], "e").unwrap();
        let ft = t.face_tree();
        let (v, kids) = ft.root().split.unwrap();
        assert_eq!(v, 3);
        let faces: Vec<[usize; 3]> = kids.iter().map(|&c| ft.nodes[c].face).collect();
        assert_eq!(faces, vec![[1, 2, 3], [0, 2, 3], [0, 1, 3]]);
        let counts: Vec<usize> = kids.iter().map(|&c| ft.nodes[c].interior).collect();
        assert_eq!(counts, vec![0, 1, 0]);
        assert_eq!(ft.root().interior, t.n() - 3);
    }

    #[test]
    fn recognize_k4_any_face() {
        let mut t = abc();
        t.stack([0, 1, 2], "d").unwrap();
        let adj = t.adjacency();
        for f in t.all_faces() {
            let (r, map) = recognize(&adj, f).unwrap();
            assert_eq!(r.program().len(), 1);
            assert_eq!(map.len(), 4);
        }
    }

    #[test]
    fn recognize_rejects_octahedron() {
        // 4-regular: no degree-3 vertex anywhere
        let edges = [
            (0, 1),
            (0, 2),
            (0, 3),
            (0, 4),
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 1),
            (5, 1),
            (5, 2),
            (5, 3),
            (5, 4),
        ];
        let mut adj: Adjacency = vec![BTreeSet::new(); 6];
        for (a, b) in edges {
            adj[a].insert(b);
            adj[b].insert(a);
        }
        assert!(matches!(
            recognize(&adj, [0, 1, 2]),
            Err(TriTreeError::NotPlanar3Tree(_))
        ));
    }

    #[test]
    fn recognize_rejects_separating_triangle_root() {
        // d splits (a,b,c); e splits (a,b,d): the triangle {a,b,d} separates
        // c from e and is not a face.
        let mut t = abc();
        t.stack([0, 1, 2], "d").unwrap();
        t.stack([0, 1, 3], "e").unwrap();
        let adj = t.adjacency();
        assert!(recognize(&adj, [0, 1, 3]).is_err());
    }

    #[test]
    fn recognize_five_vertex_rerooted() {
        // d splits (a,b,c); e splits (a,c,d), re-rooted at face (b,c,d)
        let mut t = abc();
        t.stack([0, 1, 2], "d").unwrap();
        t.stack([0, 2, 3], "e").unwrap();
        let adj = t.adjacency();
        let (r, map) = recognize(&adj, [1, 2, 3]).unwrap();
        assert_eq!(r.n(), 5);
        assert_eq!(r.program().len(), 2);
        // round-trip adjacency under the id map
        let derived = r.adjacency();
        for v in 0..5 {
            let mapped: BTreeSet<usize> = derived[v].iter().map(|&u| map[u]).collect();
            assert_eq!(mapped, adj[map[v]]);
        }
    }

    #[test]
    fn recognize_round_trips_every_face_of_random_programs() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..25 {
            let mut t = abc();
            let steps = rng.gen_range(1..8);
            for i in 0..steps {
                let faces = t.faces().to_vec();
                let f = faces[rng.gen_range(0..faces.len())];
                t.stack(f, &format!("s{i}")).unwrap();
            }
            let adj = t.adjacency();
            for f in t.all_faces() {
                let (r, map) = recognize(&adj, f).expect("every face roots the tree");
                let derived = r.adjacency();
                for v in 0..r.n() {
                    let mapped: BTreeSet<usize> = derived[v].iter().map(|&u| map[u]).collect();
                    assert_eq!(mapped, adj[map[v]]);
                }
            }
        }
    }

    #[test]
    fn text_format_round_trip() {
        let mut t = abc();
        t.stack([0, 1, 2], "d").unwrap();
        t.stack([0, 2, 3], "e").unwrap();
        let text = t.to_text();
        assert!(text.starts_with("outer: a b c\n"));
        let back = TriTree::from_text(&text).unwrap();
        assert_eq!(back, t);

        assert!(TriTree::from_text("d: a b c\n").is_err());
        assert!(TriTree::from_text("outer: a b c\nd: a b\n").is_err());
        assert!(TriTree::from_text("outer: a b c\nd: a b q\n").is_err());
    }
}

//! The rooted gadget catalog.
//!
//! Ten planar 3-trees with outer face (a, b, c): seven on 8 vertices and
//! three on 5 vertices. The catalog ships as data and every structural
//! invariant is enforced at load, so a mistranscribed file cannot slip
//! through silently. Gadget order in the file defines the digit values used
//! by family enumeration.

use crate::iso::{canonical_form_rooted, CanonicalForm, IsoError};
use crate::tritree::{TriTree, TriTreeError};
use std::path::Path;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("catalog parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("gadget {name}: {violation}")]
    Invariant { name: String, violation: String },
    #[error("family {family}: {violation}")]
    Family { family: String, violation: String },
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    TriTree(#[from] TriTreeError),
    #[error(transparent)]
    Iso(#[from] IsoError),
}

/// Which of the two gadget families a gadget belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GadgetFamily {
    /// The seven 8-vertex gadgets (file tag `T`).
    Seven,
    /// The three 5-vertex gadgets (file tag `Tt`).
    Three,
}

impl GadgetFamily {
    pub fn expected_vertices(self) -> usize {
        match self {
            GadgetFamily::Seven => 8,
            GadgetFamily::Three => 5,
        }
    }

    pub fn expected_members(self) -> usize {
        match self {
            GadgetFamily::Seven => 7,
            GadgetFamily::Three => 3,
        }
    }
}

/// A rooted gadget: a planar 3-tree whose outer labels are a, b, c.
#[derive(Clone, Debug)]
pub struct Gadget {
    name: String,
    family: GadgetFamily,
    tree: TriTree,
}

impl Gadget {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn family(&self) -> GadgetFamily {
        self.family
    }

    pub fn tree(&self) -> &TriTree {
        &self.tree
    }

    /// Number of non-outer vertices.
    pub fn internal_count(&self) -> usize {
        self.tree.n() - 3
    }

    pub fn rooted_form(&self) -> CanonicalForm {
        canonical_form_rooted(&self.tree.adjacency(), [0, 1, 2]).expect("gadgets are tiny")
    }
}

/// The gadget with outer labels a and b interchanged.
pub fn flip(g: &Gadget) -> Gadget {
    Gadget {
        name: format!("{}'", g.name),
        family: g.family,
        tree: flip_tree(&g.tree),
    }
}

/// Replay a stacking program with vertex ids 0 and 1 swapped.
pub(crate) fn flip_tree(t: &TriTree) -> TriTree {
    let swap = |v: usize| match v {
        0 => 1,
        1 => 0,
        v => v,
    };
    let mut out = TriTree::new_root([t.label(0), t.label(1), t.label(2)]);
    for (i, face) in t.program().iter().enumerate() {
        out.stack(
            [swap(face[0]), swap(face[1]), swap(face[2])],
            t.label(3 + i),
        )
        .expect("flipped program replays");
    }
    out
}

/// The validated ten-gadget catalog.
#[derive(Clone, Debug)]
pub struct GadgetCatalog {
    seven: Vec<Gadget>,
    three: Vec<Gadget>,
    flip_seven: Vec<usize>,
    flip_three: Vec<usize>,
}

impl GadgetCatalog {
    /// Load and validate a catalog file.
    pub fn load(path: &Path) -> Result<Self, CatalogError> {
        let text = std::fs::read_to_string(path)?;
        Self::parse(&text)
    }

    /// The catalog shipped with the crate.
    pub fn builtin() -> Self {
        Self::parse(include_str!("../data/catalog.txt")).expect("builtin catalog is valid")
    }

    /// Parse and validate the catalog text format: blank-line separated
    /// blocks of `gadget <name> <family>` followed by a stacking program.
    pub fn parse(text: &str) -> Result<Self, CatalogError> {
        let mut seven = Vec::new();
        let mut three = Vec::new();

        let mut block_start = 0usize;
        let mut block: Vec<&str> = Vec::new();
        let mut blocks: Vec<(usize, Vec<&str>)> = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let trimmed = line.trim();
            if trimmed.is_empty() {
                if !block.is_empty() {
                    blocks.push((block_start, std::mem::take(&mut block)));
                }
            } else if trimmed.starts_with('#') {
                continue;
            } else {
                if block.is_empty() {
                    block_start = i + 1;
                }
                block.push(trimmed);
            }
        }
        if !block.is_empty() {
            blocks.push((block_start, block));
        }

        for (start, lines) in blocks {
            let header: Vec<&str> = lines[0].split_whitespace().collect();
            if header.len() != 3 || header[0] != "gadget" {
                return Err(CatalogError::Parse {
                    line: start,
                    msg: "expected `gadget <name> <family>`".into(),
                });
            }
            let family = match header[2] {
                "T" => GadgetFamily::Seven,
                "Tt" => GadgetFamily::Three,
                other => {
                    return Err(CatalogError::Parse {
                        line: start,
                        msg: format!("unknown family tag {other:?}"),
                    })
                }
            };
            let tree = TriTree::from_text(&lines[1..].join("\n"))?;
            let gadget = Gadget {
                name: header[1].to_string(),
                family,
                tree,
            };
            match family {
                GadgetFamily::Seven => seven.push(gadget),
                GadgetFamily::Three => three.push(gadget),
            }
        }

        for g in seven.iter().chain(&three) {
            validate_gadget(g)?;
        }
        let flip_seven = validate_family(&seven, GadgetFamily::Seven)?;
        let flip_three = validate_family(&three, GadgetFamily::Three)?;
        Ok(GadgetCatalog {
            seven,
            three,
            flip_seven,
            flip_three,
        })
    }

    /// The seven 8-vertex gadgets in file (digit) order.
    pub fn seven(&self) -> &[Gadget] {
        &self.seven
    }

    /// The three 5-vertex gadgets in file (digit) order.
    pub fn three(&self) -> &[Gadget] {
        &self.three
    }

    pub fn family(&self, f: GadgetFamily) -> &[Gadget] {
        match f {
            GadgetFamily::Seven => &self.seven,
            GadgetFamily::Three => &self.three,
        }
    }

    /// Index permutation induced by the a-b flip on the seven-family.
    pub fn flip_permutation_seven(&self) -> &[usize] {
        &self.flip_seven
    }

    /// Index permutation induced by the a-b flip on the three-family.
    pub fn flip_permutation_three(&self) -> &[usize] {
        &self.flip_three
    }
}

fn validate_gadget(g: &Gadget) -> Result<(), CatalogError> {
    let fail = |violation: String| CatalogError::Invariant {
        name: g.name.clone(),
        violation,
    };
    let want_n = g.family.expected_vertices();
    if g.tree.n() != want_n {
        return Err(fail(format!(
            "vertex count: expected {want_n}, got {}",
            g.tree.n()
        )));
    }
    let want_faces = 2 * want_n - 4;
    if g.tree.face_count() != want_faces {
        return Err(fail(format!(
            "face count: expected {want_faces}, got {}",
            g.tree.face_count()
        )));
    }
    let mut first = g.tree.program()[0];
    first.sort_unstable();
    if first != [0, 1, 2] {
        return Err(fail("first vertex does not split the outer face".into()));
    }
    let adj = g.tree.adjacency();
    for outer in 0..3 {
        let internal_neighbors = adj[outer].iter().filter(|&&v| v >= 3).count();
        if internal_neighbors > 4 {
            return Err(fail(format!(
                "outer vertex {} has {internal_neighbors} internal neighbors (max 4)",
                g.tree.label(outer)
            )));
        }
    }
    for v in 3..g.tree.n() {
        if adj[v].len() > 7 {
            return Err(fail(format!(
                "internal vertex {} has degree {} (max 7)",
                g.tree.label(v),
                adj[v].len()
            )));
        }
    }
    Ok(())
}

/// Rooted-distinctness and flip-closure; returns the flip index permutation.
fn validate_family(gadgets: &[Gadget], family: GadgetFamily) -> Result<Vec<usize>, CatalogError> {
    let tag = match family {
        GadgetFamily::Seven => "T",
        GadgetFamily::Three => "Tt",
    };
    let fail = |violation: String| CatalogError::Family {
        family: tag.into(),
        violation,
    };
    if gadgets.len() != family.expected_members() {
        return Err(fail(format!(
            "expected {} members, got {}",
            family.expected_members(),
            gadgets.len()
        )));
    }
    let forms: Vec<CanonicalForm> = gadgets.iter().map(|g| g.rooted_form()).collect();
    for i in 0..forms.len() {
        for j in i + 1..forms.len() {
            if forms[i] == forms[j] {
                return Err(fail(format!(
                    "rooted distinctness: {} and {} are isomorphic with (a,b,c) pinned",
                    gadgets[i].name, gadgets[j].name
                )));
            }
        }
    }
    let mut perm = Vec::with_capacity(gadgets.len());
    for (i, g) in gadgets.iter().enumerate() {
        let flipped_form = flip(g).rooted_form();
        match forms.iter().position(|f| *f == flipped_form) {
            Some(j) => perm.push(j),
            None => {
                return Err(fail(format!(
                    "flip-symmetry: flip of {} is not in the family",
                    gadgets[i].name
                )))
            }
        }
    }
    // flips are involutions, so the permutation must be too
    for (i, &j) in perm.iter().enumerate() {
        if perm[j] != i {
            return Err(fail("flip permutation is not an involution".into()));
        }
    }
    Ok(perm)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_catalog_validates() {
        let cat = GadgetCatalog::builtin();
        assert_eq!(cat.seven().len(), 7);
        assert_eq!(cat.three().len(), 3);
        for g in cat.seven() {
            assert_eq!(g.tree().n(), 8);
            assert_eq!(g.tree().face_count(), 12);
            assert_eq!(g.internal_count(), 5);
        }
        for g in cat.three() {
            assert_eq!(g.tree().n(), 5);
            assert_eq!(g.tree().face_count(), 6);
        }
    }

    #[test]
    fn flip_is_involution_up_to_rooted_iso() {
        let cat = GadgetCatalog::builtin();
        for g in cat.seven().iter().chain(cat.three()) {
            let back = flip(&flip(g));
            assert_eq!(back.rooted_form(), g.rooted_form());
        }
    }

    #[test]
    fn flip_permutations_stable() {
        let cat = GadgetCatalog::builtin();
        // three-family: first two swap, third is flip-invariant
        assert_eq!(cat.flip_permutation_three(), &[1, 0, 2]);
        let perm = cat.flip_permutation_seven();
        for (i, &j) in perm.iter().enumerate() {
            assert_eq!(perm[j], i);
        }
        // parity: a flip-closed family of 7 has an odd number of fixed points
        let fixed = perm.iter().enumerate().filter(|&(i, &j)| i == j).count();
        assert_eq!(fixed % 2, 1);
    }

    fn builtin_text() -> &'static str {
        include_str!("../data/catalog.txt")
    }

    #[test]
    fn bad_catalogs_rejected() {
        // grow Tt1 to 6 vertices
        let broken = builtin_text().replace(
            "gadget Tt1 Tt\nouter: a b c\nd: a b c\ne: b c d",
            "gadget Tt1 Tt\nouter: a b c\nd: a b c\ne: b c d\nf: c d e",
        );
        let err = GadgetCatalog::parse(&broken).unwrap_err();
        assert!(matches!(err, CatalogError::Invariant { .. }));
        assert!(err.to_string().contains("vertex count"), "{err}");

        // replace T1 by a gadget whose flip is outside the family
        let t1 = builtin_text()
            .split("\n\n")
            .find(|b| b.contains("gadget T1 T\n"))
            .unwrap();
        let unpaired = "gadget T1 T\nouter: a b c\nd: a b c\ne: b c d\nf: b d e\ng: a c d\nh: a c g";
        let broken = builtin_text().replace(t1, unpaired);
        let err = GadgetCatalog::parse(&broken).unwrap_err();
        assert!(err.to_string().contains("flip-symmetry"), "{err}");
    }

    #[test]
    fn duplicate_member_rejected() {
        // rewrite Tt2's stack as Tt1's face in another vertex order
        let broken = builtin_text().replace(
            "gadget Tt2 Tt\nouter: a b c\nd: a b c\ne: a c d",
            "gadget Tt2 Tt\nouter: a b c\nd: a b c\ne: c b d",
        );
        let err = GadgetCatalog::parse(&broken).unwrap_err();
        assert!(err.to_string().contains("rooted distinctness"), "{err}");
    }
}

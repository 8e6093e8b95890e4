//! The graph family: parameters, skeleton, and enumeration by planting.
//!
//! For each n >= 22 the family is built over a fixed skeleton with three
//! fan regions around a center vertex. Every face of the skeleton touching
//! exactly one outer vertex receives a gadget: an 8-vertex gadget on the
//! seven-family faces, a 5-vertex gadget on the three-family faces. Members
//! are indexed in mixed radix over the per-face gadget choices.

use crate::gadgets::{GadgetCatalog, GadgetFamily};
use crate::tritree::TriTree;
use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FamilyError {
    #[error("n = {0} is below the construction range (n >= 22)")]
    BelowConstructionRange(usize),
    #[error("index {index} out of range for family of size {size}")]
    IndexOutOfRange { index: BigUint, size: BigUint },
    #[error("digit {digit} out of range for face {face} (base {base})")]
    DigitOutOfRange { digit: u8, face: usize, base: u8 },
}

/// Derived family parameters for a given n.
///
/// `f_order` lists the gadget-receiving skeleton faces in canonical order
/// (fan regions in order, stacking order within a region, the face touching
/// the region's first outer vertex before the second); the first `f2` of
/// them receive 5-vertex gadgets, the rest 8-vertex gadgets.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilySpec {
    pub n: usize,
    pub k: [usize; 3],
    /// Skeleton face count F = 2(k1+k2+k3) + 4.
    pub f: usize,
    pub f1: usize,
    pub f2: usize,
    /// Canonical order of the gadget-receiving faces (skeleton vertex ids).
    pub f_order: Vec<[usize; 3]>,
}

impl FamilySpec {
    /// The faces receiving 5-vertex gadgets: the first `f2` of `f_order`.
    pub fn f2_set(&self) -> &[[usize; 3]] {
        &self.f_order[..self.f2]
    }

    /// Number of skeleton vertices, k1 + k2 + k3 + 4.
    pub fn skeleton_vertices(&self) -> usize {
        self.k.iter().sum::<usize>() + 4
    }

    /// Base (7 or 3) of the digit attached to `f_order[i]`.
    pub fn base_at(&self, i: usize) -> u8 {
        if i < self.f2 {
            3
        } else {
            7
        }
    }
}

/// Compute the family parameters for n.
pub fn family_parameters(n: usize) -> Result<FamilySpec, FamilyError> {
    if n < 22 {
        return Err(FamilyError::BelowConstructionRange(n));
    }
    let f2 = (7 * n + 5) % 11;
    debug_assert_eq!((n + 3 * f2).wrapping_sub(4) % 11, 0);
    let ksum = (n - 4 + 3 * f2) / 11;
    let f = 2 * ksum + 4;
    let f1 = f - 4 - f2;
    let q = ksum / 3;
    let k = match ksum % 3 {
        0 => [q, q, q],
        1 => [q, q, q + 1],
        _ => [q, q + 1, q + 1],
    };
    let skeleton = build_skeleton(k);
    Ok(FamilySpec {
        n,
        k,
        f,
        f1,
        f2,
        f_order: skeleton.f_faces,
    })
}

/// The base skeleton: vertex ids are x=0, y=1, z=2, w=3, then the three fan
/// regions in order.
#[derive(Clone, Debug)]
pub struct Skeleton {
    pub tree: TriTree,
    /// Gadget-receiving faces (exactly one outer vertex), canonical order.
    pub f_faces: Vec<[usize; 3]>,
    /// The four faces with two or more outer vertices, the outer face first.
    pub exceptional: [[usize; 3]; 4],
}

/// Build the skeleton for region sizes `k = [k1, k2, k3]`.
///
/// The center w splits (x,y,z); region 1 fans k1 vertices inside (y,w,z)
/// toward the edge yz, region 2 fans k2 inside (z,w,x) toward zx, region 3
/// fans k3 inside (x,w,y) toward xy. With an empty region the center w
/// stands in for the last fan vertex in the exceptional faces.
pub fn build_skeleton(k: [usize; 3]) -> Skeleton {
    let (x, y, z, w) = (0usize, 1usize, 2usize, 3usize);
    let mut tree = TriTree::new_root(["x", "y", "z"]);
    tree.stack([x, y, z], "w").expect("root face");

    // per region: (first corner, second corner, label prefix)
    let regions = [(y, z, "a"), (z, x, "b"), (x, y, "g")];
    let mut f_faces: Vec<[usize; 3]> = Vec::new();
    let mut last = [w, w, w];
    for (r, &(u, v, prefix)) in regions.iter().enumerate() {
        let mut prev = w;
        for i in 1..=k[r] {
            let face = if i == 1 { [u, w, v] } else { [prev, u, v] };
            let fan = tree.stack(face, &format!("{prefix}{i}")).expect("fan face");
            let u_side = tree.find_face([prev, u, fan]).expect("u-side face");
            let v_side = tree.find_face([prev, v, fan]).expect("v-side face");
            f_faces.push(u_side);
            f_faces.push(v_side);
            prev = fan;
        }
        last[r] = prev;
    }
    let exceptional = [
        [x, y, z],
        tree.find_face([x, y, last[2]]).expect("xy fan face"),
        tree.find_face([last[0], y, z]).expect("yz fan face"),
        tree.find_face([x, last[1], z]).expect("zx fan face"),
    ];
    debug_assert_eq!(f_faces.len(), 2 * (k[0] + k[1] + k[2]));
    debug_assert!(f_faces
        .iter()
        .all(|f| f.iter().filter(|&&v| v < 3).count() == 1));
    Skeleton {
        tree,
        f_faces,
        exceptional,
    }
}

/// Exact family size 7^f1 * 3^f2.
pub fn family_size(spec: &FamilySpec) -> BigUint {
    BigUint::from(7u32).pow(spec.f1 as u32) * BigUint::from(3u32).pow(spec.f2 as u32)
}

/// Per-face gadget digits, aligned with `f_order`: base 3 on the first f2
/// faces, base 7 on the rest.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Assignment {
    pub digits: Vec<u8>,
}

/// Decode a member index in mixed radix: the seven-family digits are the
/// most significant block, ordered by `f_order`.
pub fn decode_index(spec: &FamilySpec, index: &BigUint) -> Result<Assignment, FamilyError> {
    let size = family_size(spec);
    if *index >= size {
        return Err(FamilyError::IndexOutOfRange {
            index: index.clone(),
            size,
        });
    }
    let mut digits = vec![0u8; spec.f - 4];
    let mut rem = index.clone();
    // least significant last: three-family digits run f2-1 .. 0 after the
    // seven-family block f-5 .. f2
    let three = BigUint::from(3u32);
    let seven = BigUint::from(7u32);
    for i in (0..spec.f2).rev() {
        let (q, r) = rem.div_rem(&three);
        digits[i] = r.to_u8().expect("digit below 3");
        rem = q;
    }
    for i in (spec.f2..spec.f - 4).rev() {
        let (q, r) = rem.div_rem(&seven);
        digits[i] = r.to_u8().expect("digit below 7");
        rem = q;
    }
    debug_assert!(rem.is_zero());
    Ok(Assignment { digits })
}

/// Inverse of [`decode_index`].
pub fn encode_assignment(spec: &FamilySpec, a: &Assignment) -> Result<BigUint, FamilyError> {
    let mut acc = BigUint::zero();
    for i in spec.f2..spec.f - 4 {
        if a.digits[i] >= 7 {
            return Err(FamilyError::DigitOutOfRange {
                digit: a.digits[i],
                face: i,
                base: 7,
            });
        }
        acc = acc * 7u32 + a.digits[i];
    }
    for i in 0..spec.f2 {
        if a.digits[i] >= 3 {
            return Err(FamilyError::DigitOutOfRange {
                digit: a.digits[i],
                face: i,
                base: 3,
            });
        }
        acc = acc * 3u32 + a.digits[i];
    }
    Ok(acc)
}

/// Build the member graph for an assignment by planting the chosen gadget
/// into each face of `f_order`.
///
/// A gadget is planted by identifying its outer vertex c with the unique
/// outer-labeled vertex of the face and a, b with the remaining two in
/// stored face order (immaterial up to flip-symmetry).
pub fn graph_from_assignment(
    spec: &FamilySpec,
    catalog: &GadgetCatalog,
    a: &Assignment,
) -> Result<TriTree, FamilyError> {
    let mut tree = build_skeleton(spec.k).tree;
    for (i, &face) in spec.f_order.iter().enumerate() {
        let family = if i < spec.f2 {
            GadgetFamily::Three
        } else {
            GadgetFamily::Seven
        };
        let digit = a.digits[i];
        let members = catalog.family(family);
        if digit as usize >= members.len() {
            return Err(FamilyError::DigitOutOfRange {
                digit,
                face: i,
                base: members.len() as u8,
            });
        }
        plant(&mut tree, face, members[digit as usize].tree(), i);
    }
    Ok(tree)
}

/// Decode and build the member at `index`.
pub fn graph_at(
    spec: &FamilySpec,
    catalog: &GadgetCatalog,
    index: &BigUint,
) -> Result<TriTree, FamilyError> {
    graph_from_assignment(spec, catalog, &decode_index(spec, index)?)
}

fn plant(tree: &mut TriTree, face: [usize; 3], gadget: &TriTree, face_idx: usize) {
    // c goes to the unique outer-labeled vertex, a and b to the remaining
    // two in stored order
    let outer_pos = face
        .iter()
        .position(|&v| v < 3)
        .expect("gadget face touches one outer vertex");
    let rest: Vec<usize> = (0..3).filter(|&i| i != outer_pos).collect();
    let mut map = vec![0usize; gadget.n()];
    map[0] = face[rest[0]];
    map[1] = face[rest[1]];
    map[2] = face[outer_pos];
    for (j, gface) in gadget.program().iter().enumerate() {
        let target = [map[gface[0]], map[gface[1]], map[gface[2]]];
        let label = format!("f{face_idx}_{}", gadget.label(3 + j));
        map[3 + j] = tree.stack(target, &label).expect("planting replays");
    }
}

/// Lazy enumeration of the whole family in index order.
pub fn enumerate_family<'a>(
    spec: &'a FamilySpec,
    catalog: &'a GadgetCatalog,
) -> impl Iterator<Item = (BigUint, TriTree)> + 'a {
    let size = family_size(spec);
    let mut next = BigUint::zero();
    std::iter::from_fn(move || {
        if next >= size {
            return None;
        }
        let idx = next.clone();
        let g = graph_at(spec, catalog, &idx).expect("index in range");
        next += 1u32;
        Some((idx, g))
    })
}

/// Vertex degrees of a member split by role.
#[derive(Clone, Debug, Serialize)]
pub struct DegreeReport {
    pub degrees: Vec<usize>,
    pub outer: [usize; 3],
    pub max_other_skeleton: usize,
    pub max_gadget_internal: usize,
}

/// Degrees of the outer vertices, the other skeleton vertices, and the
/// gadget internals of a member graph.
pub fn degree_report(g: &TriTree, spec: &FamilySpec) -> DegreeReport {
    let adj = g.adjacency();
    let degrees: Vec<usize> = adj.iter().map(|nb| nb.len()).collect();
    let skeleton_n = spec.skeleton_vertices();
    let outer = [degrees[0], degrees[1], degrees[2]];
    let max_other_skeleton = degrees[3..skeleton_n].iter().copied().max().unwrap_or(0);
    let max_gadget_internal = degrees[skeleton_n..].iter().copied().max().unwrap_or(0);
    DegreeReport {
        degrees,
        outer,
        max_other_skeleton,
        max_gadget_internal,
    }
}

use std::fmt;

use super::{Graph, GraphError};

/// Largest vertex count for which [`automorphisms`] will run. Vertex-transitive
/// graphs make the search visit on the order of `|Aut(G)|·n` nodes, and
/// `10! = 3,628,800` is still tractable.
pub const AUTOMORPHISM_MAX_N: usize = 10;

/// Bijection on `0..n`, stored as its image sequence.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    image: Vec<usize>,
}

impl Permutation {
    /// Validates that `image` is a bijection on `0..image.len()`.
    pub fn new(image: Vec<usize>) -> Option<Self> {
        let mut seen = vec![false; image.len()];
        for &v in &image {
            if v >= image.len() || std::mem::replace(&mut seen[v], true) {
                return None;
            }
        }
        Some(Self { image })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            image: (0..n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    pub fn apply(&self, v: usize) -> usize {
        self.image[v]
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Self) -> Self {
        Self {
            image: other.image.iter().map(|&v| self.image[v]).collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut image = vec![0; self.image.len()];
        for (i, &v) in self.image.iter().enumerate() {
            image[v] = i;
        }
        Self { image }
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &v)| i == v)
    }

    pub fn is_involution(&self) -> bool {
        self.compose(self).is_identity()
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation{:?}", self.image)
    }
}

/// Every permutation `π` with `adj[π(i)][π(j)] = adj[i][j]`, in lexicographic
/// order of image sequences (so the identity comes first).
///
/// Plain backtracking over degree-compatible assignments, checking adjacency
/// against all previously placed vertices.
pub fn automorphisms(g: &Graph) -> Result<Vec<Permutation>, GraphError> {
    let n = g.n();
    if n > AUTOMORPHISM_MAX_N {
        return Err(GraphError::TooLarge {
            n,
            max: AUTOMORPHISM_MAX_N,
        });
    }
    let degrees = g.degrees();
    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    let mut out = Vec::new();
    extend(g, &degrees, 0, &mut image, &mut used, &mut out);
    Ok(out)
}

fn extend(
    g: &Graph,
    degrees: &[usize],
    v: usize,
    image: &mut Vec<usize>,
    used: &mut Vec<bool>,
    out: &mut Vec<Permutation>,
) {
    let n = g.n();
    if v == n {
        out.push(Permutation {
            image: image.clone(),
        });
        return;
    }
    for w in 0..n {
        if used[w] || degrees[w] != degrees[v] {
            continue;
        }
        if (0..v).any(|u| g.has_edge(u, v) != g.has_edge(image[u], w)) {
            continue;
        }
        image[v] = w;
        used[w] = true;
        extend(g, degrees, v + 1, image, used, out);
        used[w] = false;
    }
    image[v] = usize::MAX;
}

/// True iff every nonidentity automorphism of `g` squares to the identity.
pub fn all_nonidentity_involutions(g: &Graph) -> Result<bool, GraphError> {
    Ok(automorphisms(g)?.iter().all(Permutation::is_involution))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn is_automorphism(g: &Graph, p: &Permutation) -> bool {
        (0..g.n())
            .all(|i| (0..g.n()).all(|j| g.has_edge(i, j) == g.has_edge(p.apply(i), p.apply(j))))
    }

    #[test]
    fn k3_has_full_symmetric_group() {
        let auts = automorphisms(&Graph::complete(3)).unwrap();
        assert_eq!(auts.len(), 6);
        assert!(auts[0].is_identity());
        assert!(!all_nonidentity_involutions(&Graph::complete(3)).unwrap());
    }

    #[test]
    fn path3_has_one_swap() {
        let auts = automorphisms(&Graph::path(3)).unwrap();
        assert_eq!(
            auts,
            vec![
                Permutation::identity(3),
                Permutation::new(vec![2, 1, 0]).unwrap()
            ]
        );
        assert!(all_nonidentity_involutions(&Graph::path(3)).unwrap());
    }

    #[test]
    fn petersen_group_order() {
        let g = Graph::petersen();
        let auts = automorphisms(&g).unwrap();
        assert_eq!(auts.len(), 120);
        assert!(auts.iter().all(|p| is_automorphism(&g, p)));
    }

    #[test]
    fn cap_is_enforced() {
        assert_eq!(
            automorphisms(&Graph::path(11)),
            Err(GraphError::TooLarge { n: 11, max: 10 })
        );
    }

    #[test]
    fn brute_force_agreement() {
        // Compare against filtering all n! permutations for a few small graphs.
        fn all_perms(n: usize) -> Vec<Vec<usize>> {
            if n == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for p in all_perms(n - 1) {
                for pos in 0..n {
                    let mut q = p.clone();
                    q.insert(pos, n - 1);
                    out.push(q);
                }
            }
            out
        }
        let graphs = [
            Graph::cycle(6),
            Graph::star(4),
            Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5)]).unwrap(),
            Graph::empty(5),
        ];
        for g in &graphs {
            let mut brute: Vec<Permutation> = all_perms(g.n())
                .into_iter()
                .map(|p| Permutation::new(p).unwrap())
                .filter(|p| is_automorphism(g, p))
                .collect();
            brute.sort();
            assert_eq!(automorphisms(g).unwrap(), brute);
        }
    }

    #[test]
    fn permutation_algebra() {
        assert!(Permutation::new(vec![0, 0]).is_none());
        assert!(Permutation::new(vec![0, 2]).is_none());
        let p = Permutation::new(vec![1, 2, 0]).unwrap();
        assert!(p.compose(&p.inverse()).is_identity());
        assert!(!p.is_involution());
        assert_eq!(p.compose(&p).image(), &[2, 0, 1]);
    }
}

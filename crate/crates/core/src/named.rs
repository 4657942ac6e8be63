//! Generators for the named families used as fixtures: complete, cycle,
//! path, complete bipartite, theta, delta.

use crate::graph::Graph;
use crate::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NamedFamily {
    Complete,
    Cycle,
    Path,
    CompleteBipartite,
    Theta,
    Delta,
}

impl std::str::FromStr for NamedFamily {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "complete" => Ok(NamedFamily::Complete),
            "cycle" => Ok(NamedFamily::Cycle),
            "path" => Ok(NamedFamily::Path),
            "complete-bipartite" => Ok(NamedFamily::CompleteBipartite),
            "theta" => Ok(NamedFamily::Theta),
            "delta" => Ok(NamedFamily::Delta),
            _ => Err(format!(
                "unknown family `{s}`; expected complete, cycle, path, complete-bipartite, theta, or delta"
            )),
        }
    }
}

pub fn gen_named(family: NamedFamily, params: &[usize]) -> Result<Graph, Error> {
    let one = |name| match params {
        [k] => Ok(*k),
        _ => Err(Error::WrongParameterCount { family: name, expected: 1 }),
    };
    match family {
        NamedFamily::Complete => complete(one("complete")?),
        NamedFamily::Cycle => cycle(one("cycle")?),
        NamedFamily::Path => path(one("path")?),
        NamedFamily::CompleteBipartite => match params {
            [a, b] => complete_bipartite(*a, *b),
            _ => Err(Error::WrongParameterCount { family: "complete-bipartite", expected: 2 }),
        },
        NamedFamily::Theta => theta(one("theta")?),
        NamedFamily::Delta => delta(one("delta")?),
    }
}

/// K_k, any k >= 0.
pub fn complete(k: usize) -> Result<Graph, Error> {
    let edges: Vec<(usize, usize)> = (0..k)
        .flat_map(|u| (u + 1..k).map(move |v| (u, v)))
        .collect();
    Graph::from_edge_list(k, &edges)
}

/// C_k on vertices 0..k in cyclic order, k >= 3.
pub fn cycle(k: usize) -> Result<Graph, Error> {
    if k < 3 {
        return Err(Error::ParameterTooSmall { what: "cycle length", min: 3, got: k });
    }
    let edges: Vec<(usize, usize)> = (0..k).map(|v| (v, (v + 1) % k)).collect();
    Graph::from_edge_list(k, &edges)
}

/// P_k on k vertices, k >= 1.
pub fn path(k: usize) -> Result<Graph, Error> {
    if k < 1 {
        return Err(Error::ParameterTooSmall { what: "path order", min: 1, got: k });
    }
    let edges: Vec<(usize, usize)> = (1..k).map(|v| (v - 1, v)).collect();
    Graph::from_edge_list(k, &edges)
}

/// K_{a,b} with parts 0..a and a..a+b, both >= 1.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph, Error> {
    if a < 1 || b < 1 {
        return Err(Error::ParameterTooSmall { what: "bipartite part size", min: 1, got: a.min(b) });
    }
    let edges: Vec<(usize, usize)> = (0..a)
        .flat_map(|u| (a..a + b).map(move |v| (u, v)))
        .collect();
    Graph::from_edge_list(a + b, &edges)
}

/// Theta graph: two n-cycles sharing n-1 vertices. Shared path 0..n-2, the
/// two extra vertices n-1 and n each adjacent to both path ends. n >= 4.
pub fn theta(n: usize) -> Result<Graph, Error> {
    if n < 4 {
        return Err(Error::ParameterTooSmall { what: "theta parameter", min: 4, got: n });
    }
    let mut edges: Vec<(usize, usize)> = (0..n - 2).map(|j| (j, j + 1)).collect();
    for extra in [n - 1, n] {
        edges.push((extra, 0));
        edges.push((extra, n - 2));
    }
    Graph::from_edge_list(n + 1, &edges)
}

/// Delta graph: a chain of i consecutively adjacent triangles on vertices
/// 0..i+2, plus an apex i+2 adjacent to the chain ends 0 and i+1. i >= 1.
pub fn delta(i: usize) -> Result<Graph, Error> {
    if i < 1 {
        return Err(Error::ParameterTooSmall { what: "delta parameter", min: 1, got: i });
    }
    let mut edges: Vec<(usize, usize)> = Vec::with_capacity(2 * i + 3);
    for j in 0..=i {
        edges.push((j, j + 1));
    }
    for j in 0..i {
        edges.push((j, j + 2));
    }
    let apex = i + 2;
    edges.push((0, apex));
    edges.push((i + 1, apex));
    Graph::from_edge_list(i + 3, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::iso::is_isomorphic;

    #[test]
    fn delta_2_shape() {
        let g = delta(2).unwrap();
        assert_eq!((g.order(), g.size()), (5, 7));
        let mut degs: Vec<usize> = (0..5).map(|v| g.degree(v)).collect();
        degs.sort_unstable();
        assert_eq!(degs, vec![2, 3, 3, 3, 3]);
        // delta_2 is K_{2,3} plus one edge between two degree-2 vertices
        let k23_plus = Graph::from_edge_list(
            5,
            &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 3)],
        )
        .unwrap();
        assert!(is_isomorphic(&g, &k23_plus).is_some());
    }

    #[test]
    fn delta_1_is_the_diamond() {
        let g = delta(1).unwrap();
        let diamond = Graph::from_edge_list(4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert!(is_isomorphic(&g, &diamond).is_some());
    }

    #[test]
    fn delta_size_formula() {
        for i in 1..=7 {
            let g = delta(i).unwrap();
            assert_eq!((g.order(), g.size()), (i + 3, 2 * i + 3));
        }
    }

    #[test]
    fn theta_4_is_k23() {
        let g = theta(4).unwrap();
        assert!(is_isomorphic(&g, &complete_bipartite(2, 3).unwrap()).is_some());
    }

    #[test]
    fn theta_is_two_overlapping_cycles() {
        for n in 4..=8 {
            let g = theta(n).unwrap();
            assert_eq!((g.order(), g.size()), (n + 1, n + 2));
            // cycle 1: path + vertex n-1; cycle 2: path + vertex n
            for extra in [n - 1, n] {
                let mut verts: Vec<usize> = (0..n - 1).collect();
                verts.push(extra);
                let sub = g.induced_subgraph(&verts);
                assert!(is_isomorphic(&sub, &cycle(n).unwrap()).is_some());
            }
        }
    }

    #[test]
    fn small_members() {
        assert_eq!(complete(1).unwrap().order(), 1);
        assert_eq!(complete(0).unwrap().order(), 0);
        assert_eq!(complete(4).unwrap().size(), 6);
        assert_eq!(cycle(3).unwrap().size(), 3);
        assert_eq!(path(1).unwrap().size(), 0);
        assert_eq!(path(4).unwrap().size(), 3);
        let k23 = complete_bipartite(2, 3).unwrap();
        assert_eq!(
            k23.edges(),
            vec![(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]
        );
    }

    #[test]
    fn parameter_minimums() {
        assert!(cycle(2).is_err());
        assert!(path(0).is_err());
        assert!(theta(3).is_err());
        assert!(delta(0).is_err());
        assert!(complete_bipartite(0, 2).is_err());
        assert!(gen_named(NamedFamily::Cycle, &[3, 4]).is_err());
        assert!(gen_named(NamedFamily::CompleteBipartite, &[2]).is_err());
        assert!(gen_named(NamedFamily::Delta, &[2]).is_ok());
    }

    #[test]
    fn family_names_parse() {
        for (s, f) in [
            ("complete", NamedFamily::Complete),
            ("cycle", NamedFamily::Cycle),
            ("path", NamedFamily::Path),
            ("complete-bipartite", NamedFamily::CompleteBipartite),
            ("theta", NamedFamily::Theta),
            ("delta", NamedFamily::Delta),
        ] {
            assert_eq!(s.parse::<NamedFamily>().unwrap(), f);
        }
        assert!("wheel".parse::<NamedFamily>().is_err());
    }
}

//! Graph families used in the extremal constructions.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{named, Graph};

/// Round-robin 1-factorization of `K_m`: vertex 0 is fixed and the other
/// `m - 1` vertices rotate. Each factor is sorted.
pub fn one_factorization(m: usize) -> Result<Vec<Vec<(usize, usize)>>> {
    if m % 2 == 1 || !(2..=64).contains(&m) {
        return Err(Error::invalid(format!("one-factorization needs even 2 <= m <= 64, got {m}")));
    }
    let rot = m - 1;
    let factors = (0..rot)
        .map(|r| {
            let mut f = vec![(0, 1 + r)];
            for j in 1..m / 2 {
                let a = 1 + (r + j) % rot;
                let b = 1 + (r + rot - j) % rot;
                f.push((a.min(b), a.max(b)));
            }
            f.sort_unstable();
            f
        })
        .collect();
    Ok(factors)
}

/// A regular graph together with the perfect matchings it is built from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorizedGraph {
    pub graph: Graph,
    pub factors: Vec<Vec<(usize, usize)>>,
}

/// Union of the first `k` factors of [`one_factorization`]`(m)`.
pub fn regular_factorizable(m: usize, k: usize) -> Result<FactorizedGraph> {
    if k == 0 || k >= m {
        return Err(Error::invalid(format!("need 1 <= k <= m - 1, got m = {m}, k = {k}")));
    }
    let factors: Vec<_> = one_factorization(m)?.into_iter().take(k).collect();
    let edges: Vec<_> = factors.iter().flatten().copied().collect();
    Ok(FactorizedGraph {
        graph: Graph::from_edges(m, &edges)?,
        factors,
    })
}

/// `K_{k+2}` minus the matching `{01, 23, .., (k-1)k}`, for odd `k >= 3`.
pub fn k_plus2_minus_matching(k: usize) -> Result<Graph> {
    if k % 2 == 0 || k < 3 || k + 2 > 64 {
        return Err(Error::invalid(format!("need odd 3 <= k <= 61, got {k}")));
    }
    let mut g = named::complete(k + 2);
    for i in (0..k).step_by(2) {
        g.toggle_edge_unchecked(i, i + 1);
    }
    Ok(g)
}

/// Which branch of the `s(n, k)` construction applies, with
/// `n = l(k+1) + r`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SCase {
    /// `r = 0`: `l K_{k+1}`.
    A,
    /// `k + r` odd: `RF(k+r+1, k) + (l-1) K_{k+1}`.
    B,
    /// `k + r` even, `k` even, `l >= 2`: `RF(k+r, k) + (l-2) K_{k+1} + RF(k+2, k)`.
    C,
    /// `k + r` even, `k` odd, `l >= 2`: `RF(k+r, k) + (l-2) K_{k+1} + (K_{k+2} - matching)`.
    Odd,
    /// `k + r` even, `l = 1`: apex over `RF(n-1, k)`. Only an upper bound.
    Apex,
}

impl SCase {
    pub fn classify(n: usize, k: usize) -> Result<SCase> {
        if k < 6 || k >= n {
            return Err(Error::invalid(format!("need 6 <= k <= n - 1, got n = {n}, k = {k}")));
        }
        let l = n / (k + 1);
        let r = n % (k + 1);
        Ok(if r == 0 {
            SCase::A
        } else if (k + r) % 2 == 1 {
            SCase::B
        } else if l >= 2 && k % 2 == 0 {
            SCase::C
        } else if l >= 2 {
            SCase::Odd
        } else {
            SCase::Apex
        })
    }

    /// Edge count of the construction.
    pub fn edges(self, n: usize, k: usize) -> usize {
        match self {
            SCase::A | SCase::B | SCase::C => n * k / 2,
            SCase::Odd => (n * k + 1) / 2,
            SCase::Apex => (n - 1) * (k + 2) / 2,
        }
    }

    /// Whether the edge count is the exact value of `s(n, k)`.
    pub fn is_exact(self) -> bool {
        self != SCase::Apex
    }

    pub fn name(self) -> &'static str {
        match self {
            SCase::A => "a",
            SCase::B => "b",
            SCase::C => "c",
            SCase::Odd => "odd",
            SCase::Apex => "apex",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SWitness {
    pub case: SCase,
    pub graph: Graph,
}

/// Construction with `fmp = k` and few edges on `n` vertices.
pub fn s_witness(n: usize, k: usize) -> Result<SWitness> {
    if n > 64 {
        return Err(Error::cap("graph order", 64, n));
    }
    let case = SCase::classify(n, k)?;
    let l = n / (k + 1);
    let r = n % (k + 1);
    let clique = named::complete(k + 1);
    let graph = match case {
        SCase::A => named::copies(&clique, l),
        SCase::B => regular_factorizable(k + r + 1, k)?
            .graph
            .disjoint_union(&named::copies(&clique, l - 1))?,
        SCase::C => Graph::union_all(&[
            regular_factorizable(k + r, k)?.graph,
            named::copies(&clique, l - 2),
            regular_factorizable(k + 2, k)?.graph,
        ])?,
        SCase::Odd => Graph::union_all(&[
            regular_factorizable(k + r, k)?.graph,
            named::copies(&clique, l - 2),
            k_plus2_minus_matching(k)?,
        ])?,
        SCase::Apex => apex_over_factorizable(n, k)?,
    };
    Ok(SWitness { case, graph })
}

/// `RF(n-1, k)` plus a vertex `n-1` adjacent to all of it.
pub fn apex_over_factorizable(n: usize, k: usize) -> Result<Graph> {
    if n < 3 || n % 2 == 0 {
        return Err(Error::invalid(format!("apex construction needs odd n >= 3, got {n}")));
    }
    let mut g = regular_factorizable(n - 1, k)?.graph.disjoint_union(&named::empty(1))?;
    for v in 0..n - 1 {
        g.add_edge(v, n - 1)?;
    }
    Ok(g)
}

/// Two 4-cycles `0123`, `4567` and a vertex 8 adjacent to 0, 3, 4, 7.
pub fn bowtie() -> Graph {
    Graph::from_edges(
        9,
        &[
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 0),
            (4, 5),
            (5, 6),
            (6, 7),
            (7, 4),
            (8, 0),
            (8, 3),
            (8, 4),
            (8, 7),
        ],
    )
    .expect("fixed edge list")
}

/// Sparse odd-order graphs with small `fmp`: `which` is 2, 3 or 4.
pub fn h_family(n: usize, which: u8) -> Result<Graph> {
    if n % 2 == 0 || n > 64 {
        return Err(Error::invalid(format!("order must be odd and at most 64, got {n}")));
    }
    match which {
        2 if n >= 3 => named::copies(&named::complete(2), (n - 3) / 2).disjoint_union(&named::complete(3)),
        3 if n >= 9 && n % 4 == 1 => bowtie().disjoint_union(&named::copies(&named::cycle(4), (n - 9) / 4)),
        4 if n >= 15 && n % 4 == 3 => Graph::union_all(&[
            bowtie(),
            named::copies(&named::cycle(4), (n - 15) / 4),
            named::cycle(6),
        ]),
        2..=4 => Err(Error::invalid(format!("H{which} is not defined for n = {n}"))),
        _ => Err(Error::invalid(format!("unknown H family {which}"))),
    }
}

/// `K_{n-1}` on `0..n-1` plus a vertex `n-1` adjacent to `0..k-1`.
pub fn f_lower_witness(n: usize, k: usize) -> Result<Graph> {
    if k == 0 || k >= n || n > 64 {
        return Err(Error::invalid(format!("need 1 <= k <= n - 1 <= 63, got n = {n}, k = {k}")));
    }
    let mut g = named::complete(n - 1).disjoint_union(&named::empty(1))?;
    for v in 0..k - 1 {
        g.add_edge(v, n - 1)?;
    }
    Ok(g)
}

/// A named family member, as accepted on the command line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    Complete(usize),
    Cycle(usize),
    Path(usize),
    Empty(usize),
    CliqueUnion { copies: usize, size: usize },
    RegularFactorizable { m: usize, k: usize },
    KMinusMaxMatching(usize),
    SWitness { n: usize, k: usize },
    H2(usize),
    H3(usize),
    H4(usize),
    Bowtie,
    ApexOverFactorizable { n: usize, k: usize },
    FLowerWitness { n: usize, k: usize },
}

impl FamilySpec {
    pub const NAMES: &'static [&'static str] = &[
        "complete",
        "cycle",
        "path",
        "empty",
        "clique_union",
        "regular_factorizable",
        "k_minus_max_matching",
        "s_witness",
        "h2",
        "h3",
        "h4",
        "bowtie",
        "apex_over_factorizable",
        "f_lower_witness",
    ];

    pub fn parse(name: &str, params: &[usize]) -> Result<FamilySpec> {
        let want = |k: usize| -> Result<()> {
            if params.len() == k {
                Ok(())
            } else {
                Err(Error::invalid(format!("{name} takes {k} parameter(s), got {}", params.len())))
            }
        };
        let p = |i: usize| params[i];
        let spec = match name {
            "complete" => want(1).map(|_| FamilySpec::Complete(p(0))),
            "cycle" => want(1).map(|_| FamilySpec::Cycle(p(0))),
            "path" => want(1).map(|_| FamilySpec::Path(p(0))),
            "empty" => want(1).map(|_| FamilySpec::Empty(p(0))),
            "clique_union" => want(2).map(|_| FamilySpec::CliqueUnion { copies: p(0), size: p(1) }),
            "regular_factorizable" => want(2).map(|_| FamilySpec::RegularFactorizable { m: p(0), k: p(1) }),
            "k_minus_max_matching" => want(1).map(|_| FamilySpec::KMinusMaxMatching(p(0))),
            "s_witness" => want(2).map(|_| FamilySpec::SWitness { n: p(0), k: p(1) }),
            "h2" => want(1).map(|_| FamilySpec::H2(p(0))),
            "h3" => want(1).map(|_| FamilySpec::H3(p(0))),
            "h4" => want(1).map(|_| FamilySpec::H4(p(0))),
            "bowtie" => want(0).map(|_| FamilySpec::Bowtie),
            "apex_over_factorizable" => want(2).map(|_| FamilySpec::ApexOverFactorizable { n: p(0), k: p(1) }),
            "f_lower_witness" => want(2).map(|_| FamilySpec::FLowerWitness { n: p(0), k: p(1) }),
            _ => Err(Error::invalid(format!(
                "unknown family {name:?}; expected one of {}",
                FamilySpec::NAMES.join(", ")
            ))),
        }?;
        Ok(spec)
    }

    pub fn build(&self) -> Result<Graph> {
        let small = |n: usize| {
            if n > 64 {
                Err(Error::cap("graph order", 64, n))
            } else {
                Ok(())
            }
        };
        match *self {
            FamilySpec::Complete(n) => small(n).map(|_| named::complete(n)),
            FamilySpec::Cycle(n) if n < 3 => Err(Error::invalid("a cycle needs at least 3 vertices")),
            FamilySpec::Cycle(n) => small(n).map(|_| named::cycle(n)),
            FamilySpec::Path(n) => small(n).map(|_| named::path(n)),
            FamilySpec::Empty(n) => small(n).map(|_| named::empty(n)),
            FamilySpec::CliqueUnion { copies, size } => {
                small(copies * size).map(|_| named::copies(&named::complete(size), copies))
            }
            FamilySpec::RegularFactorizable { m, k } => regular_factorizable(m, k).map(|f| f.graph),
            FamilySpec::KMinusMaxMatching(k) => k_plus2_minus_matching(k),
            FamilySpec::SWitness { n, k } => s_witness(n, k).map(|w| w.graph),
            FamilySpec::H2(n) => h_family(n, 2),
            FamilySpec::H3(n) => h_family(n, 3),
            FamilySpec::H4(n) => h_family(n, 4),
            FamilySpec::Bowtie => Ok(bowtie()),
            FamilySpec::ApexOverFactorizable { n, k } => apex_over_factorizable(n, k),
            FamilySpec::FLowerWitness { n, k } => f_lower_witness(n, k),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Complete(n) => write!(f, "complete:{n}"),
            FamilySpec::Cycle(n) => write!(f, "cycle:{n}"),
            FamilySpec::Path(n) => write!(f, "path:{n}"),
            FamilySpec::Empty(n) => write!(f, "empty:{n}"),
            FamilySpec::CliqueUnion { copies, size } => write!(f, "clique_union:{copies},{size}"),
            FamilySpec::RegularFactorizable { m, k } => write!(f, "regular_factorizable:{m},{k}"),
            FamilySpec::KMinusMaxMatching(k) => write!(f, "k_minus_max_matching:{k}"),
            FamilySpec::SWitness { n, k } => write!(f, "s_witness:{n},{k}"),
            FamilySpec::H2(n) => write!(f, "h2:{n}"),
            FamilySpec::H3(n) => write!(f, "h3:{n}"),
            FamilySpec::H4(n) => write!(f, "h4:{n}"),
            FamilySpec::Bowtie => write!(f, "bowtie"),
            FamilySpec::ApexOverFactorizable { n, k } => write!(f, "apex_over_factorizable:{n},{k}"),
            FamilySpec::FLowerWitness { n, k } => write!(f, "f_lower_witness:{n},{k}"),
        }
    }
}

/// `name` or `name:p1,p2,..`, the same shape `Display` writes.
impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (name, rest) = s.split_once(':').unwrap_or((s, ""));
        let params = rest
            .split(',')
            .filter(|p| !p.trim().is_empty())
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::invalid(format!("bad family parameter {p:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        FamilySpec::parse(name.trim(), &params)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matching::has_perfect_matching;

    #[test]
    fn factorization_of_k4() {
        let f = one_factorization(4).unwrap();
        assert_eq!(f, vec![vec![(0, 1), (2, 3)], vec![(0, 2), (1, 3)], vec![(0, 3), (1, 2)]]);
        assert!(one_factorization(5).is_err());
        assert!(one_factorization(0).is_err());
    }

    #[test]
    fn factorizations_partition_the_complete_graph() {
        for m in (2..=20).step_by(2) {
            let fs = one_factorization(m).unwrap();
            assert_eq!(fs.len(), m - 1);
            let mut seen = Graph::new(m).unwrap();
            for f in &fs {
                let mut covered = 0u64;
                for &(u, v) in f {
                    assert_eq!(covered >> u & 1, 0);
                    assert_eq!(covered >> v & 1, 0);
                    covered |= 1 << u | 1 << v;
                    assert!(seen.add_edge(u, v).unwrap(), "edge repeated");
                }
                assert_eq!(covered.count_ones() as usize, m);
            }
            assert_eq!(seen, named::complete(m));
        }
    }

    #[test]
    fn first_factors_of_k8_leave_a_perfect_matching() {
        let g = regular_factorizable(8, 6).unwrap().graph;
        assert_eq!(g.size(), 24);
        assert!(has_perfect_matching(&g.complement()));
        assert_eq!(g.complement().size(), 4);
        assert_eq!(regular_factorizable(4, 1).unwrap().graph.edge_list(), vec![(0, 1), (2, 3)]);
        let g = regular_factorizable(14, 6).unwrap().graph;
        assert!((0..14).all(|v| g.degree(v) == 6));
        assert!(regular_factorizable(6, 6).is_err());
    }

    #[test]
    fn complete_minus_matching() {
        assert_eq!(k_plus2_minus_matching(3).unwrap().size(), 8);
        assert_eq!(k_plus2_minus_matching(7).unwrap().size(), 32);
        let mut degs = k_plus2_minus_matching(5).unwrap().degree_sequence();
        degs.sort_unstable();
        assert_eq!(degs, vec![5, 5, 5, 5, 5, 5, 6]);
        assert!(k_plus2_minus_matching(4).is_err());
    }

    #[test]
    fn s_witness_cases_and_sizes() {
        let cases = [
            (14, 6, SCase::A, 42),
            (15, 6, SCase::B, 45),
            (16, 6, SCase::C, 48),
            (17, 7, SCase::Odd, 60),
            (13, 6, SCase::Apex, 48),
        ];
        for (n, k, case, e) in cases {
            let w = s_witness(n, k).unwrap();
            assert_eq!(w.case, case, "({n}, {k})");
            assert_eq!(w.graph.order(), n);
            assert_eq!(w.graph.size(), e);
            assert_eq!(case.edges(n, k), e);
        }
        assert!(s_witness(10, 5).is_err());
        assert!(s_witness(7, 7).is_err());
    }

    #[test]
    fn h_families() {
        for n in (5..=15).step_by(2) {
            let g = h_family(n, 2).unwrap();
            assert_eq!((g.order(), g.size()), (n, (n + 3) / 2));
        }
        assert_eq!(bowtie().size(), 12);
        for n in [9, 13, 17] {
            let g = h_family(n, 3).unwrap();
            assert_eq!((g.order(), g.size()), (n, n + 3));
        }
        for n in [15, 19] {
            let g = h_family(n, 4).unwrap();
            assert_eq!((g.order(), g.size()), (n, n + 3));
        }
        assert!(h_family(11, 4).is_err());
        assert!(h_family(11, 3).is_err());
        assert!(h_family(8, 2).is_err());
        assert!(h_family(9, 5).is_err());
    }

    #[test]
    fn f_lower_witnesses() {
        assert_eq!(f_lower_witness(8, 3).unwrap().size(), 23);
        assert_eq!(f_lower_witness(8, 1).unwrap().degree(7), 0);
        let g = f_lower_witness(9, 8).unwrap();
        assert_eq!((g.min_degree(), g.size()), (7, 35));
    }

    #[test]
    fn spec_round_trip() {
        for s in ["complete:7", "s_witness:15,6", "bowtie", "h3:13", "clique_union:2,7"] {
            let spec: FamilySpec = s.parse().unwrap();
            assert_eq!(spec.to_string(), s);
            spec.build().unwrap();
        }
        assert!("nope:1".parse::<FamilySpec>().is_err());
        assert!("complete:1,2".parse::<FamilySpec>().is_err());
        assert!("complete:x".parse::<FamilySpec>().is_err());
        assert!("complete:99".parse::<FamilySpec>().unwrap().build().is_err());
    }
}

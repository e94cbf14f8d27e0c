//! `q`-cyclotomic cosets modulo `n`, their leaders and the negation pairing
//! `B_j <-> B_{-j}`.

use serde::Serialize;

use crate::arith;
use crate::error::{Error, Result};

/// The orbit `{a, aq, ..., aq^(size-1)} mod n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CyclotomicCoset {
    leader: usize,
    elements: Vec<usize>,
}

impl CyclotomicCoset {
    /// Smallest member of the coset.
    pub fn leader(&self) -> usize {
        self.leader
    }

    /// Members in orbit order starting from the element the coset was built from.
    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn size(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, a: usize) -> bool {
        self.elements.contains(&a)
    }
}

fn check_coprime(q: u64, n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::ZeroLength);
    }
    if arith::gcd(q, n as u64) != 1 {
        return Err(Error::NotCoprime { n: n as u64, q });
    }
    Ok(())
}

/// Coset of `a mod n` under multiplication by `q`.
pub fn coset_of(q: u64, n: usize, a: usize) -> Result<CyclotomicCoset> {
    check_coprime(q, n)?;
    Ok(orbit(q, n, a % n))
}

fn orbit(q: u64, n: usize, a: usize) -> CyclotomicCoset {
    let step = (q % n as u64) as usize;
    let mut elements = vec![a];
    let mut cur = a * step % n;
    while cur != a {
        elements.push(cur);
        cur = cur * step % n;
    }
    let leader = *elements.iter().min().unwrap();
    CyclotomicCoset { leader, elements }
}

/// The partition of `Z_n` into `q`-cyclotomic cosets, indexed by leader.
#[derive(Clone, Debug)]
pub struct CosetTable {
    q: u64,
    n: usize,
    // sorted by leader; each coset starts at its leader
    cosets: Vec<CyclotomicCoset>,
    // residue -> index into `cosets`
    index_of: Vec<u32>,
    // coset index -> index of the coset of the negated leader
    neg: Vec<usize>,
}

impl CosetTable {
    pub fn build(q: u64, n: usize) -> Result<CosetTable> {
        check_coprime(q, n)?;
        let mut index_of = vec![u32::MAX; n];
        let mut cosets = Vec::new();
        for a in 0..n {
            if index_of[a] != u32::MAX {
                continue;
            }
            // scanning upward, the first unseen residue is the coset minimum
            let c = orbit(q, n, a);
            for &s in &c.elements {
                index_of[s] = cosets.len() as u32;
            }
            cosets.push(c);
        }
        let neg = cosets
            .iter()
            .map(|c| index_of[(n - c.leader) % n] as usize)
            .collect();
        Ok(CosetTable {
            q,
            n,
            cosets,
            index_of,
            neg,
        })
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of cosets, `t`.
    pub fn len(&self) -> usize {
        self.cosets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cosets.is_empty()
    }

    pub fn cosets(&self) -> &[CyclotomicCoset] {
        &self.cosets
    }

    /// The leader set `B(n, q)`, ascending.
    pub fn leaders(&self) -> Vec<usize> {
        self.cosets.iter().map(|c| c.leader).collect()
    }

    pub fn is_leader(&self, j: usize) -> bool {
        j < self.n && self.cosets[self.index_of[j] as usize].leader == j
    }

    /// Position of a leader within [`Self::leaders`].
    pub fn position(&self, leader: usize) -> Result<usize> {
        if !self.is_leader(leader) {
            return Err(Error::InvalidLeader(leader));
        }
        Ok(self.index_of[leader] as usize)
    }

    pub fn coset(&self, leader: usize) -> Result<&CyclotomicCoset> {
        Ok(&self.cosets[self.position(leader)?])
    }

    /// Leader of the coset containing `a mod n`.
    pub fn leader_of(&self, a: usize) -> usize {
        self.cosets[self.index_of[a % self.n] as usize].leader
    }

    /// `δ_j`, the size of the coset with leader `j`.
    pub fn size_of(&self, leader: usize) -> Result<usize> {
        Ok(self.coset(leader)?.size())
    }

    /// Leader of `B_{-j}`.
    pub fn neg_pair(&self, leader: usize) -> Result<usize> {
        Ok(self.cosets[self.neg[self.position(leader)?]].leader)
    }

    pub fn is_self_paired(&self, leader: usize) -> Result<bool> {
        Ok(self.neg_pair(leader)? == leader)
    }

    /// Splits the leaders into the self-paired set `T1` and the unordered
    /// pairs `{j, -j}` making up `T2`, each pair listed with its smaller leader first.
    pub fn split_t1_t2(&self) -> (Vec<usize>, Vec<(usize, usize)>) {
        let mut t1 = Vec::new();
        let mut pairs = Vec::new();
        for (i, c) in self.cosets.iter().enumerate() {
            let partner = self.cosets[self.neg[i]].leader;
            if partner == c.leader {
                t1.push(c.leader);
            } else if c.leader < partner {
                pairs.push((c.leader, partner));
            }
        }
        (t1, pairs)
    }
}

use std::fmt;

use crate::scalars::CoeffPoly;

use super::AlgebraError;

/// A generator, identified by its canonical position in the algebra.
///
/// Heisenberg kinds order `b1 < ... < bp < a1 < ... < ap`; Borel kinds order
/// `B < A`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Gen(pub u8);

/// Value of the central element in `a_i b_i - b_i a_i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Central {
    Unit,
    /// The free commuting symbol `c`.
    Symbolic,
}

/// Deformation parameter of the `AB - qBA = A` Borel relation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Deformation {
    /// `q = 1`, i.e. `[A, B] = A`.
    Unit,
    Symbolic,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AlgebraKind {
    /// `p` commuting copies of `[a, b] = c`.
    HeisenbergClassical { p: u8, central: Central },
    /// `ab - q ba = 1`.
    HeisenbergQ,
    /// The two-pair q-deformed algebra whose realization is the quantum plane.
    QuantumPlane2,
    /// `AB - q BA = A`.
    BorelA { q: Deformation },
    /// `AB - q BA = B`.
    BorelB,
}

/// One right-hand side of a rewrite rule: `coeff * letters`.
pub type RuleTerm = (CoeffPoly, Vec<Gen>);

/// Rewrite rules for every out-of-order adjacent pair `(x, y)` with `x > y`.
#[derive(Clone, Debug)]
pub struct RuleTable {
    size: usize,
    rules: Vec<Option<Vec<RuleTerm>>>,
}

impl RuleTable {
    pub fn get(&self, x: Gen, y: Gen) -> Option<&[RuleTerm]> {
        self.rules[x.0 as usize * self.size + y.0 as usize].as_deref()
    }

    pub fn len(&self) -> usize {
        self.rules.iter().filter(|r| r.is_some()).count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn insert(&mut self, x: Gen, y: Gen, rhs: Vec<RuleTerm>) {
        let slot = &mut self.rules[x.0 as usize * self.size + y.0 as usize];
        assert!(slot.is_none(), "duplicate rule for ({x:?}, {y:?})");
        *slot = Some(rhs);
    }
}

/// Presentation of one of the supported algebras.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct AlgebraSpec {
    kind: AlgebraKind,
}

pub const MAX_PAIRS: u8 = 9;

impl AlgebraSpec {
    pub fn new(kind: AlgebraKind) -> Result<Self, AlgebraError> {
        if let AlgebraKind::HeisenbergClassical { p, .. } = kind {
            if p == 0 || p > MAX_PAIRS {
                return Err(AlgebraError::InvalidPairs(p as u32));
            }
        }
        Ok(AlgebraSpec { kind })
    }

    pub fn classical(p: u8) -> Result<Self, AlgebraError> {
        Self::new(AlgebraKind::HeisenbergClassical { p, central: Central::Unit })
    }

    /// The p-pair classical algebra with symbolic central element `c`.
    pub fn classical_central(p: u8) -> Result<Self, AlgebraError> {
        Self::new(AlgebraKind::HeisenbergClassical { p, central: Central::Symbolic })
    }

    pub fn heisenberg() -> Self {
        AlgebraSpec { kind: AlgebraKind::HeisenbergClassical { p: 1, central: Central::Unit } }
    }

    pub fn q_deformed() -> Self {
        AlgebraSpec { kind: AlgebraKind::HeisenbergQ }
    }

    pub fn quantum_plane() -> Self {
        AlgebraSpec { kind: AlgebraKind::QuantumPlane2 }
    }

    pub fn borel_a(q: Deformation) -> Self {
        AlgebraSpec { kind: AlgebraKind::BorelA { q } }
    }

    pub fn borel_b() -> Self {
        AlgebraSpec { kind: AlgebraKind::BorelB }
    }

    pub fn kind(&self) -> AlgebraKind {
        self.kind
    }

    /// Number of (b, a) pairs; Borel kinds count `(B, A)` as one pair.
    pub fn pairs(&self) -> u8 {
        match self.kind {
            AlgebraKind::HeisenbergClassical { p, .. } => p,
            AlgebraKind::HeisenbergQ => 1,
            AlgebraKind::QuantumPlane2 => 2,
            AlgebraKind::BorelA { .. } | AlgebraKind::BorelB => 1,
        }
    }

    pub fn num_generators(&self) -> usize {
        2 * self.pairs() as usize
    }

    pub fn is_borel(&self) -> bool {
        matches!(self.kind, AlgebraKind::BorelA { .. } | AlgebraKind::BorelB)
    }

    /// `b_i` (or `B` for Borel kinds), 1-based.
    pub fn b(&self, i: u8) -> Gen {
        assert!(i >= 1 && i <= self.pairs(), "pair index {i} out of range");
        Gen(i - 1)
    }

    /// `a_i` (or `A` for Borel kinds), 1-based.
    pub fn a(&self, i: u8) -> Gen {
        assert!(i >= 1 && i <= self.pairs(), "pair index {i} out of range");
        Gen(self.pairs() + i - 1)
    }

    /// True for the annihilation-type generators `a_i` (and `A`).
    pub fn is_lowering(&self, g: Gen) -> bool {
        g.0 >= self.pairs()
    }

    /// 1-based pair index of a generator.
    pub fn pair_index(&self, g: Gen) -> u8 {
        g.0 % self.pairs() + 1
    }

    pub fn generator_name(&self, g: Gen) -> String {
        let letter = match (self.is_borel(), self.is_lowering(g)) {
            (true, true) => "A",
            (true, false) => "B",
            (false, true) => "a",
            (false, false) => "b",
        };
        if self.pairs() == 1 {
            letter.to_string()
        } else {
            format!("{letter}{}", self.pair_index(g))
        }
    }

    /// Resolves a generator name such as `a`, `b2`, `A`.
    ///
    /// Single-pair Heisenberg algebras also accept `a1`/`b1`.
    pub fn lookup(&self, name: &str) -> Result<Gen, AlgebraError> {
        let unknown = || AlgebraError::UnknownGenerator(name.to_string());
        let mut chars = name.chars();
        let letter = chars.next().ok_or_else(unknown)?;
        let rest = chars.as_str();
        let lowering = match (self.is_borel(), letter) {
            (true, 'A') => true,
            (true, 'B') => false,
            (false, 'a') => true,
            (false, 'b') => false,
            _ => return Err(unknown()),
        };
        let index: u32 = if rest.is_empty() {
            if self.pairs() != 1 {
                return Err(unknown());
            }
            1
        } else {
            if self.is_borel() || !rest.bytes().all(|c| c.is_ascii_digit()) {
                return Err(unknown());
            }
            rest.parse().map_err(|_| unknown())?
        };
        if index == 0 {
            return Err(unknown());
        }
        if index > self.pairs() as u32 {
            return Err(AlgebraError::IndexExceeds { index, p: self.pairs() as u32 });
        }
        let i = index as u8;
        Ok(if lowering { self.a(i) } else { self.b(i) })
    }

    pub fn supports_adjoint(&self) -> bool {
        !self.is_borel()
    }

    /// The star image `a_i <-> b_i`.
    pub fn adjoint_gen(&self, g: Gen) -> Option<Gen> {
        if !self.supports_adjoint() {
            return None;
        }
        let p = self.pairs();
        Some(Gen((g.0 + p) % (2 * p)))
    }

    /// Extra term of the termination measure. Only the quantum plane needs it:
    /// `a1 b1 -> ... + (q-1) b2 a2` keeps the degree and may keep the inversion
    /// count, but strictly lowers the number of pair-1 letters.
    pub fn weight(&self, g: Gen) -> u32 {
        match self.kind {
            AlgebraKind::QuantumPlane2 if self.pair_index(g) == 1 => 1,
            _ => 0,
        }
    }

    pub fn rule_table(&self) -> RuleTable {
        let size = self.num_generators();
        let mut table = RuleTable { size, rules: vec![None; size * size] };
        let one = CoeffPoly::one;
        let swap = |x: Gen, y: Gen, c: CoeffPoly| -> Vec<RuleTerm> { vec![(c, vec![y, x])] };
        match self.kind {
            AlgebraKind::HeisenbergClassical { p, central } => {
                let c = match central {
                    Central::Unit => CoeffPoly::one(),
                    Central::Symbolic => CoeffPoly::central(),
                };
                let n = 2 * p;
                for x in 0..n {
                    for y in 0..x {
                        let (gx, gy) = (Gen(x), Gen(y));
                        let mut rhs = swap(gx, gy, one());
                        if self.is_lowering(gx) && !self.is_lowering(gy) && self.pair_index(gx) == self.pair_index(gy) {
                            rhs.push((c.clone(), vec![]));
                        }
                        table.insert(gx, gy, rhs);
                    }
                }
            }
            AlgebraKind::HeisenbergQ => {
                let (b, a) = (self.b(1), self.a(1));
                table.insert(a, b, vec![(CoeffPoly::q(), vec![b, a]), (one(), vec![])]);
            }
            AlgebraKind::QuantumPlane2 => {
                let (b1, b2, a1, a2) = (self.b(1), self.b(2), self.a(1), self.a(2));
                let v = CoeffPoly::v_pow;
                table.insert(
                    a1,
                    b1,
                    vec![(CoeffPoly::q(), vec![b1, a1]), (one(), vec![]), (CoeffPoly::q() - one(), vec![b2, a2])],
                );
                table.insert(a2, b2, vec![(CoeffPoly::q(), vec![b2, a2]), (one(), vec![])]);
                table.insert(a1, b2, swap(a1, b2, v(1)));
                table.insert(a2, b1, swap(a2, b1, v(1)));
                table.insert(b2, b1, swap(b2, b1, v(-1)));
                table.insert(a2, a1, swap(a2, a1, v(1)));
            }
            AlgebraKind::BorelA { q } => {
                let (bb, aa) = (self.b(1), self.a(1));
                let qc = match q {
                    Deformation::Unit => one(),
                    Deformation::Symbolic => CoeffPoly::q(),
                };
                table.insert(aa, bb, vec![(qc, vec![bb, aa]), (one(), vec![aa])]);
            }
            AlgebraKind::BorelB => {
                let (bb, aa) = (self.b(1), self.a(1));
                table.insert(aa, bb, vec![(CoeffPoly::q(), vec![bb, aa]), (one(), vec![bb])]);
            }
        }
        table
    }

    /// Short machine name, as accepted on the command line.
    pub fn short_name(&self) -> &'static str {
        match self.kind {
            AlgebraKind::HeisenbergClassical { .. } => "classical",
            AlgebraKind::HeisenbergQ => "q",
            AlgebraKind::QuantumPlane2 => "qplane",
            AlgebraKind::BorelA { .. } => "borelA",
            AlgebraKind::BorelB => "borelB",
        }
    }
}

impl fmt::Display for AlgebraSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            AlgebraKind::HeisenbergClassical { p, central: Central::Unit } => {
                write!(f, "classical(p={p})")
            }
            AlgebraKind::HeisenbergClassical { p, central: Central::Symbolic } => {
                write!(f, "classical(p={p}, central=c)")
            }
            AlgebraKind::HeisenbergQ => write!(f, "q"),
            AlgebraKind::QuantumPlane2 => write!(f, "qplane"),
            AlgebraKind::BorelA { q: Deformation::Unit } => write!(f, "borelA(q=1)"),
            AlgebraKind::BorelA { q: Deformation::Symbolic } => write!(f, "borelA"),
            AlgebraKind::BorelB => write!(f, "borelB"),
        }
    }
}

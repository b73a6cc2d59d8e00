//! The BMW algebras `K_n`: Brauer-lift basis, the Hecke quotient and its
//! section, Young idempotents, the path basis, and eigenvalue operators.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use parking_lot::RwLock;

use crate::coeff::RatFunc;
use crate::error::{Result, SkeinError};
use crate::linalg;
use crate::matching::BrauerMatching;
use crate::skein::{Engine, SkeinElement};
use crate::tangle::{Slice, TangleWord};
use crate::young::{enumerate_updown, UpDownTableau, YoungDiagram, UPDOWN_BOUND};

/// Elements of `K_n` are skein elements with `src = dst = n`.
pub type BmwElement = SkeinElement;

pub const BASIS_CAP: usize = 4;
pub const IDEMPOTENT_CAP: usize = 3;

/// Element of the Hecke algebra `H_n` in the positive-permutation-braid basis.
#[derive(Clone, PartialEq, Eq)]
pub struct HeckeElement {
    n: usize,
    terms: BTreeMap<Vec<usize>, RatFunc>,
}

impl HeckeElement {
    pub fn zero(n: usize) -> Self {
        Self {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn basis(perm: Vec<usize>) -> Self {
        let mut h = Self::zero(perm.len());
        h.add_term(perm, RatFunc::one());
        h
    }

    pub fn identity(n: usize) -> Self {
        Self::basis((0..n).collect())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<Vec<usize>, RatFunc> {
        &self.terms
    }

    pub fn coeff(&self, perm: &[usize]) -> RatFunc {
        self.terms.get(perm).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, perm: Vec<usize>, c: RatFunc) {
        if c.is_zero() {
            return;
        }
        let sum = &self.coeff(&perm) + &c;
        if sum.is_zero() {
            self.terms.remove(&perm);
        } else {
            self.terms.insert(perm, sum);
        }
    }

    pub fn scale(&self, k: &RatFunc) -> Self {
        let mut out = Self::zero(self.n);
        for (p, c) in &self.terms {
            out.add_term(p.clone(), c * k);
        }
        out
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (p, c) in &o.terms {
            out.add_term(p.clone(), c.clone());
        }
        out
    }

    /// The positive-permutation-braid lift to `K_n`.
    pub fn lift(&self) -> BmwElement {
        let mut out = SkeinElement::zero(self.n, self.n);
        for (p, c) in &self.terms {
            let m = BrauerMatching::from_permutation(p).expect("stored keys are permutations");
            out.add_term(m, c.clone());
        }
        out
    }
}

impl fmt::Display for HeckeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(p, c)| {
                let w: Vec<String> = p.iter().map(|i| (i + 1).to_string()).collect();
                format!("({c})*T[{}]", w.join(""))
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for HeckeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `x = c * y` for a unique scalar `c`, when `y` is nonzero.
pub fn proportionality(x: &SkeinElement, y: &SkeinElement) -> Option<RatFunc> {
    let (m, c) = y.terms().iter().next()?;
    let k = x.coeff(m).checked_div(c).ok()?;
    (y.scale(&k) == *x).then_some(k)
}

fn inversions(p: &[usize]) -> usize {
    (0..p.len())
        .flat_map(|i| (i + 1..p.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| p[i] > p[j])
        .count()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                cur.push(i);
                go(cur, used, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out.sort_by_key(|p| (inversions(p), p.clone()));
    out
}

/// Permutations of the Young subgroup with the given consecutive block sizes.
fn young_subgroup(blocks: &[usize]) -> Vec<Vec<usize>> {
    let n: usize = blocks.iter().sum();
    let mut out = vec![(0..n).collect::<Vec<_>>()];
    let mut start = 0;
    for &b in blocks {
        let mut next = Vec::new();
        for base in &out {
            for p in permutations(b) {
                let mut q: Vec<usize> = base.clone();
                for (i, &pi) in p.iter().enumerate() {
                    q[start + i] = start + pi;
                }
                next.push(q);
            }
        }
        out = next;
        start += b;
    }
    out
}

/// Result of one check inside a report.
#[derive(Clone, Debug)]
pub struct CheckLine {
    pub name: String,
    pub ok: bool,
    pub detail: String,
}

impl CheckLine {
    pub fn new(name: impl Into<String>, ok: bool, detail: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            ok,
            detail: detail.into(),
        }
    }

    pub fn compare(name: impl Into<String>, got: &SkeinElement, want: &SkeinElement) -> Self {
        let ok = got == want;
        let detail = if ok {
            String::new()
        } else {
            format!("got {got}; want {want}")
        };
        Self::new(name, ok, detail)
    }
}

impl fmt::Display for CheckLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.ok { "PASS" } else { "FAIL" };
        if self.detail.is_empty() {
            write!(f, "{tag} {}", self.name)
        } else {
            write!(f, "{tag} {}: {}", self.name, self.detail)
        }
    }
}

#[derive(Clone, Debug)]
pub struct PathCheck {
    pub left: UpDownTableau,
    pub right: UpDownTableau,
    pub holds: bool,
    /// For `left == right`: `c` with `b a = c * y`, when proportional.
    pub scalar: Option<RatFunc>,
}

#[derive(Clone, Debug)]
pub struct OrthogonalityReport {
    pub n: usize,
    pub checks: Vec<PathCheck>,
    pub rank: usize,
    pub expected_rank: usize,
}

impl OrthogonalityReport {
    pub fn off_diagonal_ok(&self) -> bool {
        self.checks.iter().filter(|c| c.left != c.right).all(|c| c.holds)
    }

    pub fn diagonal_ok(&self) -> bool {
        self.checks.iter().filter(|c| c.left == c.right).all(|c| c.holds)
    }

    pub fn rank_ok(&self) -> bool {
        self.rank == self.expected_rank
    }

    pub fn all_ok(&self) -> bool {
        self.off_diagonal_ok() && self.diagonal_ok() && self.rank_ok()
    }
}

#[derive(Clone, Debug)]
pub struct TwistReport {
    pub lambda: YoungDiagram,
    pub smaller: YoungDiagram,
    pub content: i32,
    pub positive: Option<RatFunc>,
    pub negative: Option<RatFunc>,
}

impl TwistReport {
    pub fn ok(&self) -> bool {
        let want = |e: i32| RatFunc::s().pow(e).ok();
        self.positive == want(2 * self.content) && self.negative == want(-2 * self.content)
    }
}

#[derive(Clone, Debug)]
pub struct AbsorbReport {
    pub lambda: YoungDiagram,
    pub smaller: YoungDiagram,
    /// `y_lambda (y_smaller (x) 1) = y_lambda`
    pub right: bool,
    /// `(y_smaller (x) 1) y_lambda = y_lambda`
    pub left: bool,
}

/// The BMW calculus with caches for sections and idempotents.
pub struct Bmw {
    engine: Engine,
    basis_cap: usize,
    idempotent_cap: usize,
    sections: RwLock<HashMap<Vec<usize>, BmwElement>>,
    ytildes: RwLock<BTreeMap<YoungDiagram, BmwElement>>,
}

impl Default for Bmw {
    fn default() -> Self {
        Self::new(Engine::default())
    }
}

impl Bmw {
    pub fn new(engine: Engine) -> Self {
        Self {
            engine,
            basis_cap: BASIS_CAP,
            idempotent_cap: IDEMPOTENT_CAP,
            sections: RwLock::new(HashMap::new()),
            ytildes: RwLock::new(BTreeMap::new()),
        }
    }

    /// Overrides both arity caps.
    pub fn with_max_n(mut self, n: usize) -> Self {
        self.basis_cap = n;
        self.idempotent_cap = n;
        self
    }

    pub fn engine(&self) -> &Engine {
        &self.engine
    }

    fn check_cap(&self, what: &'static str, n: usize, cap: usize) -> Result<()> {
        if n > cap {
            return Err(SkeinError::BoundExceeded {
                what,
                value: n,
                bound: cap,
            });
        }
        Ok(())
    }

    pub fn basis(&self, n: usize) -> Result<Vec<BrauerMatching>> {
        self.check_cap("bmw arity", n, self.basis_cap)?;
        Ok(BrauerMatching::enumerate(n, n))
    }

    pub fn identity(&self, n: usize) -> BmwElement {
        SkeinElement::identity(n)
    }

    pub fn word(&self, w: &TangleWord) -> BmwElement {
        self.engine.reduce_word(w)
    }

    /// `(e_1..e_{n-1}, h_1..h_{n-1})`.
    pub fn gens(&self, n: usize) -> Result<(Vec<BmwElement>, Vec<BmwElement>)> {
        if n < 2 {
            return Err(SkeinError::InvalidArgument("gens needs n >= 2".into()));
        }
        self.check_cap("bmw arity", n, self.basis_cap)?;
        let mut es = Vec::new();
        let mut hs = Vec::new();
        for i in 1..n {
            es.push(self.word(&TangleWord::e(n, i)?));
            hs.push(self.word(&TangleWord::h(n, i)?));
        }
        Ok((es, hs))
    }

    pub fn mul(&self, x: &BmwElement, y: &BmwElement) -> Result<BmwElement> {
        self.engine.compose(x, y)
    }

    pub fn tensor(&self, x: &SkeinElement, y: &SkeinElement) -> SkeinElement {
        self.engine.tensor(x, y)
    }

    /// Splits by basis support: hook-free part and hook part.
    pub fn split_ideal(&self, x: &BmwElement) -> (BmwElement, BmwElement) {
        x.split_hooks()
    }

    pub fn pi_n(&self, x: &BmwElement) -> HeckeElement {
        let mut h = HeckeElement::zero(x.src());
        for (m, c) in x.terms() {
            if let Some(p) = m.permutation() {
                h.add_term(p, c.clone());
            }
        }
        h
    }

    pub fn hecke_mul(&self, x: &HeckeElement, y: &HeckeElement) -> Result<HeckeElement> {
        Ok(self.pi_n(&self.mul(&x.lift(), &y.lift())?))
    }

    /// The splitting `s_n`: the unique lift of `x` annihilating the ideal on both sides.
    pub fn section_s(&self, x: &HeckeElement) -> Result<BmwElement> {
        let n = x.n();
        self.check_cap("section arity", n, self.idempotent_cap)?;
        let mut out = SkeinElement::zero(n, n);
        for (p, c) in x.terms() {
            out.add_scaled(&self.section_basis(p)?, c);
        }
        Ok(out)
    }

    fn section_basis(&self, perm: &[usize]) -> Result<BmwElement> {
        if let Some(v) = self.sections.read().get(perm) {
            return Ok(v.clone());
        }
        let n = perm.len();
        let lift = SkeinElement::basis(BrauerMatching::from_permutation(perm)?);
        let identity: Vec<usize> = (0..n).collect();
        let value = if perm != identity.as_slice() {
            // lift(T_w) s(1) satisfies the defining conditions, so it is s(T_w)
            self.mul(&lift, &self.section_basis(&identity)?)?
        } else {
            self.solve_unit_section(n)?
        };
        self.sections.write().insert(perm.to_vec(), value.clone());
        Ok(value)
    }

    /// Solves for `1 + sum c_d d` over hook matchings `d` annihilating every
    /// hook matching on both sides.
    fn solve_unit_section(&self, n: usize) -> Result<BmwElement> {
        let unit = SkeinElement::identity(n);
        let hooks: Vec<BrauerMatching> = BrauerMatching::enumerate(n, n)
            .into_iter()
            .filter(|m| m.hook_count() > 0)
            .collect();
        if hooks.is_empty() {
            return Ok(unit);
        }
        let basis = BrauerMatching::enumerate(n, n);
        let hook_elems: Vec<BmwElement> = hooks.iter().cloned().map(SkeinElement::basis).collect();
        let mut seen = std::collections::HashSet::new();
        let mut rows = Vec::new();
        let mut rhs = Vec::new();
        for dp in &hook_elems {
            for right in [true, false] {
                let prod = |x: &BmwElement| {
                    if right {
                        self.mul(x, dp)
                    } else {
                        self.mul(dp, x)
                    }
                };
                let cols: Vec<BmwElement> = hook_elems.iter().map(&prod).collect::<Result<_>>()?;
                let base = prod(&unit)?;
                for m in &basis {
                    let row: Vec<RatFunc> = cols.iter().map(|c| c.coeff(m)).collect();
                    let b = -base.coeff(m);
                    if row.iter().all(|x| x.is_zero()) && b.is_zero() {
                        continue;
                    }
                    if seen.insert((row.clone(), b.clone())) {
                        rows.push(row);
                        rhs.push(b);
                    }
                }
            }
        }
        let coeffs = linalg::solve(&rows, &rhs)?;
        let mut z = unit;
        for (d, c) in hooks.into_iter().zip(coeffs) {
            z.add_term(d, c);
        }
        Ok(z)
    }

    /// Symmetrizer over the Young subgroup of `blocks`, weighting `T_w` by `q^len(w)`.
    fn symmetrizer(&self, blocks: &[usize], q: &RatFunc) -> Result<HeckeElement> {
        let n = blocks.iter().sum();
        let mut h = HeckeElement::zero(n);
        for w in young_subgroup(blocks) {
            h.add_term(w.clone(), q.pow(inversions(&w) as i32)?);
        }
        Ok(h)
    }

    /// `T_w^-1`, from the reversed lift word with all crossings switched.
    pub fn hecke_inverse_basis(&self, perm: &[usize]) -> Result<HeckeElement> {
        let lift = self.engine.lift(&BrauerMatching::from_permutation(perm)?);
        let slices = lift
            .slices()
            .iter()
            .rev()
            .map(|s| match *s {
                Slice::Cross { pos, positive } => Slice::Cross {
                    pos,
                    positive: !positive,
                },
                other => other,
            })
            .collect();
        let inv = TangleWord::new(perm.len(), slices)?;
        Ok(self.pi_n(&self.word(&inv)))
    }

    /// Quasi-idempotent for `lambda` with its flattening permutation `w` and
    /// the scalar `kappa` with `z^2 = kappa z`. `R` symmetrizes the rows
    /// (eigenvalue `s`) and `A` antisymmetrizes the columns (eigenvalue
    /// `-s^-1`), both over consecutive blocks. Candidates are `R T_w A` for
    /// all `w`, then `R T_w A T_w^-1`, with `w` ordered by length then
    /// lexicographically; the first with nonzero `kappa` is taken.
    pub fn young_quasi(&self, lambda: &YoungDiagram) -> Result<(HeckeElement, Vec<usize>, RatFunc)> {
        let n = lambda.size();
        self.check_cap("idempotent size", n, self.idempotent_cap)?;
        let r = self.symmetrizer(lambda.rows(), &RatFunc::s())?;
        let a = self.symmetrizer(lambda.transpose().rows(), &-RatFunc::s().inverse()?)?;
        for conjugate in [false, true] {
            for w in permutations(n) {
                let rw = self.hecke_mul(&r, &HeckeElement::basis(w.clone()))?;
                let mut z = self.hecke_mul(&rw, &a)?;
                if conjugate {
                    z = self.hecke_mul(&z, &self.hecke_inverse_basis(&w)?)?;
                }
                let Some((p, c)) = z.terms().iter().next() else {
                    continue;
                };
                let z2 = self.hecke_mul(&z, &z)?;
                let kappa = z2.coeff(p).checked_div(c)?;
                if kappa.is_zero() {
                    continue;
                }
                if z.scale(&kappa) != z2 {
                    return Err(SkeinError::Normalization(format!(
                        "{lambda}: square of the quasi-idempotent is not a multiple for w = {w:?}"
                    )));
                }
                return Ok((z, w, kappa));
            }
        }
        Err(SkeinError::Normalization(format!("no quasi-idempotent with kappa != 0 for {lambda}")))
    }

    pub fn young_idempotent(&self, lambda: &YoungDiagram) -> Result<HeckeElement> {
        let (z, _, kappa) = self.young_quasi(lambda)?;
        Ok(z.scale(&kappa.inverse()?))
    }

    /// The flattened idempotent `T_w y T_w^-1`, `w` as in [`Bmw::young_quasi`].
    pub fn flattened_idempotent(&self, lambda: &YoungDiagram) -> Result<HeckeElement> {
        let (z, w, kappa) = self.young_quasi(lambda)?;
        let y = z.scale(&kappa.inverse()?);
        if w.iter().enumerate().all(|(i, &p)| i == p) {
            return Ok(y);
        }
        let left = self.hecke_mul(&HeckeElement::basis(w.clone()), &y)?;
        self.hecke_mul(&left, &self.hecke_inverse_basis(&w)?)
    }

    /// `s_n` of the flattened Young idempotent; `1` for the empty diagram.
    pub fn ytilde(&self, lambda: &YoungDiagram) -> Result<BmwElement> {
        if let Some(v) = self.ytildes.read().get(lambda) {
            return Ok(v.clone());
        }
        let v = if lambda.is_empty() {
            SkeinElement::identity(0)
        } else {
            self.section_s(&self.flattened_idempotent(lambda)?)?
        };
        self.ytildes.write().insert(lambda.clone(), v.clone());
        Ok(v)
    }

    /// Quantum dimension: the closure of `ytilde(lambda)`.
    pub fn qdim(&self, lambda: &YoungDiagram) -> Result<RatFunc> {
        let q = self.engine.closure_scalar(&self.ytilde(lambda)?)?;
        if q.is_zero() {
            return Err(SkeinError::Normalization(format!("quantum dimension of {lambda} is 0")));
        }
        Ok(q)
    }

    /// `(a, b)` with `a: |last| -> n` and `b: n -> |last|`.
    pub fn path_elements(&self, t: &UpDownTableau) -> Result<(SkeinElement, SkeinElement)> {
        let Some(parent) = t.parent() else {
            return Ok((SkeinElement::identity(1), SkeinElement::identity(1)));
        };
        let (a0, b0) = self.path_elements(&parent)?;
        let one = SkeinElement::identity(1);
        let last = t.last();
        let y = self.ytilde(last)?;
        let a_ext = self.tensor(&a0, &one);
        let b_ext = self.tensor(&b0, &one);
        if last.size() > parent.last().size() {
            let a = self.engine.compose(&a_ext, &y)?;
            let b = self.engine.compose(&y, &b_ext)?;
            Ok((a, b))
        } else {
            let ratio = self.qdim(last)?.checked_div(&self.qdim(parent.last())?)?;
            let cup = self.word(&TangleWord::cup());
            let cap = self.word(&TangleWord::cap());
            let a = self.engine.compose(&a_ext, &self.tensor(&y, &cup))?.scale(&ratio);
            let b = self.engine.compose(&self.tensor(&y, &cap), &b_ext)?;
            Ok((a, b))
        }
    }

    pub fn verify_path_orthogonality(&self, n: usize) -> Result<OrthogonalityReport> {
        self.check_cap("path length", n, self.idempotent_cap)?;
        let (paths, _) = enumerate_updown(n, UPDOWN_BOUND)?;
        let elems: Vec<(SkeinElement, SkeinElement)> =
            paths.iter().map(|p| self.path_elements(p)).collect::<Result<_>>()?;
        let mut checks = Vec::new();
        for (i, l) in paths.iter().enumerate() {
            for (j, r) in paths.iter().enumerate() {
                let prod = self.engine.compose(&elems[i].1, &elems[j].0)?;
                let (holds, scalar) = if i == j {
                    let y = self.ytilde(l.last())?;
                    (prod == y, proportionality(&prod, &y))
                } else {
                    (prod.is_zero(), None)
                };
                checks.push(PathCheck {
                    left: l.clone(),
                    right: r.clone(),
                    holds,
                    scalar,
                });
            }
        }
        let basis = BrauerMatching::enumerate(n, n);
        let mut rows = Vec::new();
        for (i, l) in paths.iter().enumerate() {
            for (j, r) in paths.iter().enumerate() {
                if l.last() == r.last() {
                    let ab = self.engine.compose(&elems[i].0, &elems[j].1)?;
                    rows.push(basis.iter().map(|m| ab.coeff(m)).collect::<Vec<_>>());
                }
            }
        }
        Ok(OrthogonalityReport {
            n,
            checks,
            rank: linalg::rank(&rows),
            expected_rank: basis.len(),
        })
    }

    /// Puts a loop around all strands of `x`.
    pub fn encircle(&self, x: &BmwElement) -> Result<BmwElement> {
        let loop_elem = self.word(&TangleWord::encircling(x.dst()));
        self.mul(&loop_elem, x)
    }

    /// The eigenvalue of encircling on `ytilde(lambda)`, when it is an eigenvector.
    pub fn encircle_eigenvalue(&self, lambda: &YoungDiagram) -> Result<Option<RatFunc>> {
        let y = self.ytilde(lambda)?;
        Ok(proportionality(&self.encircle(&y)?, &y))
    }

    pub fn full_twist_eigencheck(
        &self,
        lambda: &YoungDiagram,
        smaller: &YoungDiagram,
    ) -> Result<TwistReport> {
        let content = lambda.removed_cell_content(smaller).ok_or_else(|| {
            SkeinError::InvalidArgument(format!("{smaller} is not {lambda} minus a corner"))
        })?;
        let n = lambda.size();
        let y = self.ytilde(lambda)?;
        let eig = |positive| -> Result<Option<RatFunc>> {
            let t = self.word(&TangleWord::last_strand_full_twist(n, positive));
            Ok(proportionality(&self.mul(&t, &y)?, &y))
        };
        Ok(TwistReport {
            lambda: lambda.clone(),
            smaller: smaller.clone(),
            content,
            positive: eig(true)?,
            negative: eig(false)?,
        })
    }

    pub fn absorbing_check(&self, lambda: &YoungDiagram) -> Result<Vec<AbsorbReport>> {
        let y = self.ytilde(lambda)?;
        let one = SkeinElement::identity(1);
        let mut out = Vec::new();
        for smaller in lambda.remove_moves() {
            let ys = self.tensor(&self.ytilde(&smaller)?, &one);
            out.push(AbsorbReport {
                right: self.mul(&y, &ys)? == y,
                left: self.mul(&ys, &y)? == y,
                lambda: lambda.clone(),
                smaller,
            });
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn yd(rows: &[usize]) -> YoungDiagram {
        YoungDiagram::new(rows.to_vec()).unwrap()
    }

    #[test]
    fn young_subgroup_sizes() {
        assert_eq!(young_subgroup(&[2, 1]).len(), 2);
        assert_eq!(young_subgroup(&[3]).len(), 6);
        assert_eq!(young_subgroup(&[1, 1, 1]).len(), 1);
        assert_eq!(permutations(3)[0], vec![0, 1, 2]);
    }

    #[test]
    fn section_two_strands() {
        let b = Bmw::default();
        let s = b.section_s(&HeckeElement::identity(2)).unwrap();
        let (_, hs) = b.gens(2).unwrap();
        let want = &SkeinElement::identity(2) - &hs[0].scale(&RatFunc::delta().inverse().unwrap());
        assert_eq!(s, want);
    }

    #[test]
    fn idempotents_two_strands() {
        let b = Bmw::default();
        let y2 = b.ytilde(&yd(&[2])).unwrap();
        let y11 = b.ytilde(&yd(&[1, 1])).unwrap();
        assert_eq!(b.mul(&y2, &y2).unwrap(), y2);
        assert_eq!(b.mul(&y11, &y11).unwrap(), y11);
        assert!(b.mul(&y2, &y11).unwrap().is_zero());
        let (_, hs) = b.gens(2).unwrap();
        let sum = &(&y2 + &y11) + &hs[0].scale(&RatFunc::delta().inverse().unwrap());
        assert_eq!(sum, SkeinElement::identity(2));
    }
}

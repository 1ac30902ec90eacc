//! Independent oracles for the acceptance and property suites. These
//! deliberately avoid the library's own computation paths: the solvable
//! word problem is answered by folding letters through the nested
//! semidirect products of the Magnus model, and the signature integral by
//! a floating-point Riemann sum over explicit Hermitian forms.

use concord_core::freegroup::Word;
use concord_core::seifert::SeifertMatrix;
use std::collections::BTreeMap;

// ---------------------------------------------------------------------------
// Wreath/Magnus oracle for the free solvable word problem.
// ---------------------------------------------------------------------------

/// Element of the level-k Magnus model: the trivial group at level 0, and
/// pairs (module vector over the integral group ring of the level below,
/// base element) with the semidirect multiplication law.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum Elt {
    Triv,
    Pair {
        module: Vec<BTreeMap<Elt, i64>>,
        base: Box<Elt>,
    },
}

fn identity(level: u32, n: usize) -> Elt {
    if level == 0 {
        Elt::Triv
    } else {
        Elt::Pair {
            module: vec![BTreeMap::new(); n],
            base: Box::new(identity(level - 1, n)),
        }
    }
}

fn ring_add(a: &BTreeMap<Elt, i64>, b: &BTreeMap<Elt, i64>) -> BTreeMap<Elt, i64> {
    let mut out = a.clone();
    for (g, c) in b {
        let e = out.entry(g.clone()).or_insert(0);
        *e += c;
        if *e == 0 {
            out.remove(g);
        }
    }
    out
}

fn ring_translate(g: &Elt, a: &BTreeMap<Elt, i64>) -> BTreeMap<Elt, i64> {
    a.iter().map(|(h, c)| (mul(g, h), *c)).collect()
}

fn ring_neg(a: &BTreeMap<Elt, i64>) -> BTreeMap<Elt, i64> {
    a.iter().map(|(h, c)| (h.clone(), -c)).collect()
}

/// (a, g)(b, h) = (a + g.b, gh)
pub fn mul(x: &Elt, y: &Elt) -> Elt {
    match (x, y) {
        (Elt::Triv, Elt::Triv) => Elt::Triv,
        (
            Elt::Pair {
                module: am,
                base: ab,
            },
            Elt::Pair {
                module: bm,
                base: bb,
            },
        ) => {
            let module = am
                .iter()
                .zip(bm)
                .map(|(ai, bi)| ring_add(ai, &ring_translate(ab, bi)))
                .collect();
            Elt::Pair {
                module,
                base: Box::new(mul(ab, bb)),
            }
        }
        _ => panic!("mismatched levels"),
    }
}

/// (a, g)^-1 = (-g^-1 . a, g^-1)
pub fn inv(x: &Elt) -> Elt {
    match x {
        Elt::Triv => Elt::Triv,
        Elt::Pair { module, base } => {
            let binv = inv(base);
            let m = module
                .iter()
                .map(|ai| ring_neg(&ring_translate(&binv, ai)))
                .collect();
            Elt::Pair {
                module: m,
                base: Box::new(binv),
            }
        }
    }
}

fn generator_image(level: u32, n: usize, g: usize) -> Elt {
    if level == 0 {
        return Elt::Triv;
    }
    let mut module = vec![BTreeMap::new(); n];
    module[g].insert(identity(level - 1, n), 1);
    Elt::Pair {
        module,
        base: Box::new(generator_image(level - 1, n, g)),
    }
}

fn eval(w: &Word, level: u32, n: usize) -> Elt {
    let mut acc = identity(level, n);
    for &(g, e) in w.letters() {
        let img = generator_image(level, n, g as usize);
        let img = if e == 1 { img } else { inv(&img) };
        acc = mul(&acc, &img);
    }
    acc
}

/// Whether w lies in F^(k), by evaluation in the level-k model.
pub fn oracle_in_derived(w: &Word, k: u32) -> bool {
    if k == 0 {
        return true;
    }
    let n = w.max_generator().map_or(1, |g| g as usize + 1);
    eval(w, k, n) == identity(k, n)
}

/// Largest k <= k_max with w in F^(k).
pub fn oracle_depth(w: &Word, k_max: u32) -> u32 {
    for k in 1..=k_max {
        if !oracle_in_derived(w, k) {
            return k - 1;
        }
    }
    k_max
}

// ---------------------------------------------------------------------------
// Floating-point Riemann-sum oracle for rho_0.
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, Debug)]
struct C(f64, f64);

impl C {
    fn conj(self) -> C {
        C(self.0, -self.1)
    }
    fn abs2(self) -> f64 {
        self.0 * self.0 + self.1 * self.1
    }
    fn add(self, o: C) -> C {
        C(self.0 + o.0, self.1 + o.1)
    }
    fn sub(self, o: C) -> C {
        C(self.0 - o.0, self.1 - o.1)
    }
    fn mul(self, o: C) -> C {
        C(
            self.0 * o.0 - self.1 * o.1,
            self.0 * o.1 + self.1 * o.0,
        )
    }
    fn scale(self, s: f64) -> C {
        C(self.0 * s, self.1 * s)
    }
}

/// Signature of a complex Hermitian matrix (flat row-major buffer) by
/// Bunch-Parlett elimination with 1x1 and 2x2 pivots; None when the
/// remaining block degenerates.
fn hermitian_signature(h: &mut [C], n: usize, scale: f64) -> Option<i64> {
    let at = |h: &[C], i: usize, j: usize| h[i * n + j];
    let mut sig = 0i64;
    let mut k = 0;
    while k < n {
        let mut best_diag = (k, 0.0f64);
        for i in k..n {
            let a = at(h, i, i).0.abs();
            if a > best_diag.1 {
                best_diag = (i, a);
            }
        }
        let mut best_off = (k, k + 1, 0.0f64);
        for i in k..n {
            for j in i + 1..n {
                let a = at(h, i, j).abs2();
                if a > best_off.2 {
                    best_off = (i, j, a);
                }
            }
        }
        let off_norm = best_off.2.sqrt();
        if best_diag.1 < 1e-9 * scale && off_norm < 1e-9 * scale {
            return None;
        }
        if best_diag.1 >= 0.6404 * off_norm {
            // 1x1 pivot at the largest diagonal entry
            swap_sym(h, n, k, best_diag.0);
            let pivot = at(h, k, k).0;
            sig += if pivot > 0.0 { 1 } else { -1 };
            for i in k + 1..n {
                let f = at(h, i, k).scale(1.0 / pivot);
                for j in k + 1..n {
                    h[i * n + j] = at(h, i, j).sub(f.mul(at(h, k, j)));
                }
            }
            k += 1;
        } else {
            // 2x2 pivot on the largest off-diagonal pair
            let (i0, j0, _) = best_off;
            swap_sym(h, n, k, i0);
            let j0 = if j0 == k { i0 } else { j0 };
            swap_sym(h, n, k + 1, j0);
            let (a, b, c) = (at(h, k, k).0, at(h, k, k + 1), at(h, k + 1, k + 1).0);
            let det = a * c - b.abs2();
            if det.abs() < 1e-12 * scale * scale {
                return None;
            }
            sig += if det < 0.0 {
                0
            } else if a + c > 0.0 {
                2
            } else {
                -2
            };
            // Schur complement against the 2x2 pivot inverse
            let inv00 = C(c / det, 0.0);
            let inv11 = C(a / det, 0.0);
            let inv01 = b.scale(-1.0 / det);
            let inv10 = inv01.conj();
            for i in k + 2..n {
                let wi0 = at(h, i, k);
                let wi1 = at(h, i, k + 1);
                let f0 = wi0.mul(inv00).add(wi1.mul(inv10));
                let f1 = wi0.mul(inv01).add(wi1.mul(inv11));
                for j in k + 2..n {
                    let corr = f0.mul(at(h, k, j)).add(f1.mul(at(h, k + 1, j)));
                    h[i * n + j] = at(h, i, j).sub(corr);
                }
            }
            k += 2;
        }
    }
    Some(sig)
}

fn swap_sym(h: &mut [C], n: usize, a: usize, b: usize) {
    if a == b {
        return;
    }
    for j in 0..n {
        h.swap(a * n + j, b * n + j);
    }
    for i in 0..n {
        h.swap(i * n + a, i * n + b);
    }
}

/// The Levine-Tristram form (1-w)V + (1-conj(w))V^T at w = e^{i theta},
/// written into a reused flat buffer.
fn hermitian_form(v: &SeifertMatrix, theta: f64, h: &mut [C]) {
    let n = v.size();
    let (c, s) = (theta.cos(), theta.sin());
    let one_minus_w = C(1.0 - c, -s);
    let one_minus_wbar = C(1.0 - c, s);
    for i in 0..n {
        for j in 0..n {
            h[i * n + j] = one_minus_w
                .scale(v.entry(i, j) as f64)
                .add(one_minus_wbar.scale(v.entry(j, i) as f64));
        }
    }
}

/// Riemann sum of the normalized signature integral with `samples` midpoint
/// evaluations of the Levine-Tristram form in floating point.
pub fn rho0_riemann(v: &SeifertMatrix, samples: usize) -> f64 {
    let n = v.size();
    if n == 0 {
        return 0.0;
    }
    let scale = v
        .entries()
        .iter()
        .flat_map(|r| r.iter())
        .fold(1.0f64, |m, &x| m.max(x.abs() as f64))
        * 4.0;
    let mut buf = vec![C(0.0, 0.0); n * n];
    let mut acc = 0.0f64;
    for j in 0..samples {
        let mut theta = std::f64::consts::PI * (j as f64 + 0.5) / samples as f64;
        let sig = loop {
            hermitian_form(v, theta, &mut buf);
            match hermitian_signature(&mut buf, n, scale) {
                Some(s) => break s,
                None => theta += 1e-9, // nudge off a degenerate sample
            }
        };
        acc += sig as f64;
    }
    acc / samples as f64
}

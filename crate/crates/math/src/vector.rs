use crate::{Int, Rat};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub fn dot_int(a: &[Int], b: &[Int]) -> Int {
    assert_eq!(a.len(), b.len(), "dot of mismatched lengths");
    let mut acc = Int::zero();
    for (x, y) in a.iter().zip(b) {
        acc += x * y;
    }
    acc
}

pub fn dot_rat(a: &[Rat], b: &[Rat]) -> Rat {
    assert_eq!(a.len(), b.len(), "dot of mismatched lengths");
    let mut acc = Rat::zero();
    for (x, y) in a.iter().zip(b) {
        acc += x * y;
    }
    acc
}

pub fn is_zero_int(v: &[Int]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub fn is_zero_rat(v: &[Rat]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub fn int_to_rat(v: &[Int]) -> Vec<Rat> {
    v.iter().map(|x| Rat::from(x.clone())).collect()
}

/// Divide an integer vector by the gcd of its entries. Direction is
/// preserved; the zero vector is returned unchanged.
pub fn primitive_int(v: &[Int]) -> Vec<Int> {
    let mut g = Int::zero();
    for x in v {
        g = g.gcd(x);
    }
    if g.is_zero() || g.is_one() {
        return v.to_vec();
    }
    v.iter().map(|x| x / &g).collect()
}

pub fn lcm_of_denominators(v: &[Rat]) -> Int {
    let mut l = Int::one();
    for x in v {
        l = l.lcm(x.denom());
    }
    l
}

/// Scale a rational vector by a positive rational so it becomes a primitive
/// integer vector pointing the same way.
pub fn rat_to_primitive_int(v: &[Rat]) -> Vec<Int> {
    let l = lcm_of_denominators(v);
    let ints: Vec<Int> = v.iter().map(|x| x.numer() * (&l / x.denom())).collect();
    primitive_int(&ints)
}

/// Alias kept for call sites that read better with this name.
pub fn primitive_of_rat(v: &[Rat]) -> Vec<Int> {
    rat_to_primitive_int(v)
}

/// Primitive form with the sign fixed so the first nonzero entry is
/// positive. Used where v and -v describe the same object (equations,
/// lineality directions).
pub fn normalize_equation(v: &[Int]) -> Vec<Int> {
    let p = primitive_int(v);
    match p.iter().find(|x| !x.is_zero()) {
        Some(first) if first.is_negative() => p.iter().map(|x| -x).collect(),
        _ => p,
    }
}

//! Brute-force oracles on plain value vectors, sharing no code with the library.

#![allow(dead_code)]

use std::collections::HashSet;

pub type Map = Vec<u32>;

/// Every monotone map of `C_n` with values in `allowed`, in lexicographic order.
pub fn monotone_maps(n: u32, allowed: &[u32]) -> Vec<Map> {
    fn go(n: usize, allowed: &[u32], from: usize, prefix: &mut Map, out: &mut Vec<Map>) {
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        for i in from..allowed.len() {
            prefix.push(allowed[i]);
            go(n, allowed, i, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n as usize, allowed, 0, &mut Vec::new(), &mut out);
    out
}

pub fn all_maps(n: u32) -> Vec<Map> {
    monotone_maps(n, &(0..n).collect::<Vec<_>>())
}

/// `a` first, then `b`.
pub fn mul(a: &[u32], b: &[u32]) -> Map {
    a.iter().map(|&x| b[x as usize]).collect()
}

pub fn add(a: &[u32], b: &[u32]) -> Map {
    a.iter().zip(b).map(|(&x, &y)| x.max(y)).collect()
}

pub fn power(a: &[u32], m: usize) -> Map {
    let mut p = a.to_vec();
    for _ in 1..m {
        p = mul(&p, a);
    }
    p
}

pub fn is_constant(a: &[u32]) -> bool {
    a.iter().all(|&x| x == a[0])
}

pub fn is_idempotent(a: &[u32]) -> bool {
    mul(a, a) == *a
}

pub fn fixed_points(a: &[u32]) -> Vec<u32> {
    (0..a.len() as u32).filter(|&x| a[x as usize] == x).collect()
}

/// Indices of the vertices hit by each vertex.
pub fn type_of(a: &[u32], vertices: &[u32]) -> Map {
    vertices.iter().map(|&v| vertices.iter().position(|&w| w == a[v as usize]).unwrap() as u32).collect()
}

/// First idempotent power and its exponent.
pub fn idempotent_power(a: &[u32]) -> (Map, usize) {
    let mut m = 1;
    loop {
        let p = power(a, m);
        if is_idempotent(&p) {
            return (p, m);
        }
        m += 1;
    }
}

pub fn catalan(i: u32) -> u128 {
    // C_(i+1) = sum C_j C_(i-j)
    let mut c = vec![1u128];
    for m in 1..=i as usize {
        c.push((0..m).map(|j| c[j] * c[m - 1 - j]).sum());
    }
    c[i as usize]
}

/// All nonempty vertex subsets of `C_n`.
pub fn vertex_sets(n: u32) -> Vec<Vec<u32>> {
    (1u32..1 << n).map(|mask| (0..n).filter(|v| mask >> v & 1 == 1).collect()).collect()
}

/// Closure verdicts `(add, mul, left ideal, right ideal)` of `cand` inside `amb`.
pub fn verdicts(cand: &[Map], amb: &[Map]) -> [bool; 4] {
    let set: HashSet<&Map> = cand.iter().collect();
    let add_ok = cand.iter().all(|a| cand.iter().all(|b| set.contains(&add(a, b))));
    let mul_ok = cand.iter().all(|a| cand.iter().all(|b| set.contains(&mul(a, b))));
    let left = amb.iter().all(|p| cand.iter().all(|a| set.contains(&mul(p, a))));
    let right = cand.iter().all(|a| amb.iter().all(|p| set.contains(&mul(a, p))));
    [add_ok, mul_ok, left, right]
}

//! Standard small groups as Cayley tables.

use super::CayleyGroup;

pub fn cyclic(n: usize) -> CayleyGroup {
    cyclic_product(&[n])
}

/// `C_{n0} × C_{n1} × ...` with element index `a0 + n0·(a1 + n1·(a2 + ...))`.
pub fn cyclic_product(moduli: &[usize]) -> CayleyGroup {
    assert!(moduli.iter().all(|&n| n > 0), "cyclic factors must be non-empty");
    let factors: Vec<CayleyGroup> = moduli
        .iter()
        .map(|&n| {
            let table = (0..n)
                .flat_map(|a| (0..n).map(move |b| ((a + b) % n) as u32))
                .collect();
            CayleyGroup::from_flat_unchecked(n, table)
        })
        .collect();
    direct_product(&factors)
}

/// Direct product with mixed-radix indexing, first factor varying fastest.
pub fn direct_product(factors: &[CayleyGroup]) -> CayleyGroup {
    let orders: Vec<usize> = factors.iter().map(CayleyGroup::order).collect();
    let n: usize = orders.iter().product();
    let digits = |mut x: usize| {
        orders
            .iter()
            .map(|&m| {
                let d = x % m;
                x /= m;
                d
            })
            .collect::<Vec<_>>()
    };
    let all: Vec<Vec<usize>> = (0..n).map(digits).collect();
    let mut table = Vec::with_capacity(n * n);
    for a in &all {
        for b in &all {
            let mut index = 0;
            let mut radix = 1;
            for (k, g) in factors.iter().enumerate() {
                index += g.mul(a[k], b[k]) * radix;
                radix *= orders[k];
            }
            table.push(index as u32);
        }
    }
    CayleyGroup::from_flat_unchecked(n, table)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn extend(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                extend(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

fn parity(p: &[usize]) -> bool {
    let mut inversions = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inversions += 1;
            }
        }
    }
    inversions % 2 == 0
}

fn permutation_group(perms: Vec<Vec<usize>>) -> (CayleyGroup, Vec<Vec<usize>>) {
    let n = perms.len();
    let index = |p: &Vec<usize>| perms.iter().position(|q| q == p).expect("closed under composition");
    let mut table = Vec::with_capacity(n * n);
    for a in &perms {
        for b in &perms {
            // (a·b)(i) = a(b(i))
            let ab: Vec<usize> = b.iter().map(|&i| a[i]).collect();
            table.push(index(&ab) as u32);
        }
    }
    (CayleyGroup::from_flat_unchecked(n, table), perms)
}

/// `S_n` in lexicographic order of one-line notation, with `(a·b)(i) = a(b(i))`.
/// Also returns the permutation each index stands for.
pub fn symmetric_with_elements(n: usize) -> (CayleyGroup, Vec<Vec<usize>>) {
    permutation_group(permutations(n))
}

pub fn symmetric(n: usize) -> CayleyGroup {
    symmetric_with_elements(n).0
}

pub fn alternating_with_elements(n: usize) -> (CayleyGroup, Vec<Vec<usize>>) {
    permutation_group(permutations(n).into_iter().filter(|p| parity(p)).collect())
}

pub fn alternating(n: usize) -> CayleyGroup {
    alternating_with_elements(n).0
}

/// Dihedral group of order `2n`; index `i + n·j` stands for `r^i s^j`.
pub fn dihedral(n: usize) -> CayleyGroup {
    let order = 2 * n;
    let mut table = Vec::with_capacity(order * order);
    for x in 0..order {
        let (a, b) = (x % n, x / n);
        for y in 0..order {
            let (c, d) = (y % n, y / n);
            let rot = if b == 0 { (a + c) % n } else { (a + n - c) % n };
            table.push((rot + n * ((b + d) % 2)) as u32);
        }
    }
    CayleyGroup::from_flat_unchecked(order, table)
}

/// Quaternion group: index `2·u + s` stands for `(-1)^s · u` with
/// `u ∈ {1, i, j, k}`.
pub fn quaternion() -> CayleyGroup {
    // unit products: (sign flip, unit)
    const UNIT: [[(usize, usize); 4]; 4] = [
        [(0, 0), (0, 1), (0, 2), (0, 3)],
        [(0, 1), (1, 0), (0, 3), (1, 2)],
        [(0, 2), (1, 3), (1, 0), (0, 1)],
        [(0, 3), (0, 2), (1, 1), (1, 0)],
    ];
    let mut table = Vec::with_capacity(64);
    for x in 0..8 {
        for y in 0..8 {
            let (flip, u) = UNIT[x / 2][y / 2];
            let sign = (x % 2 + y % 2 + flip) % 2;
            table.push((2 * u + sign) as u32);
        }
    }
    CayleyGroup::from_flat_unchecked(8, table)
}

/// Every group of order at most 8, up to isomorphism, with a short name.
pub fn groups_up_to_order_8() -> Vec<(&'static str, CayleyGroup)> {
    vec![
        ("C1", CayleyGroup::trivial()),
        ("C2", cyclic(2)),
        ("C3", cyclic(3)),
        ("C4", cyclic(4)),
        ("C2xC2", cyclic_product(&[2, 2])),
        ("C5", cyclic(5)),
        ("C6", cyclic(6)),
        ("S3", symmetric(3)),
        ("C7", cyclic(7)),
        ("C8", cyclic(8)),
        ("C2xC4", cyclic_product(&[2, 4])),
        ("C2xC2xC2", cyclic_product(&[2, 2, 2])),
        ("D4", dihedral(4)),
        ("Q8", quaternion()),
    ]
}

/// The lattice fixture set of groups of order at most 16.
pub fn lattice_fixtures() -> Vec<(&'static str, CayleyGroup)> {
    vec![
        ("C2", cyclic(2)),
        ("C3", cyclic(3)),
        ("C4", cyclic(4)),
        ("C2xC2", cyclic_product(&[2, 2])),
        ("C6", cyclic(6)),
        ("S3", symmetric(3)),
        ("C8", cyclic(8)),
        ("D4", dihedral(4)),
        ("Q8", quaternion()),
        ("A4", alternating(4)),
        ("C2xC4", cyclic_product(&[2, 4])),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constructions_are_groups() {
        for (name, g) in groups_up_to_order_8().into_iter().chain(lattice_fixtures()) {
            let again = CayleyGroup::from_table(&g.rows());
            assert!(again.is_ok(), "{name}: {again:?}");
        }
    }

    #[test]
    fn orders_and_commutativity() {
        assert_eq!(dihedral(4).order(), 8);
        assert!(!dihedral(4).is_abelian());
        assert!(!quaternion().is_abelian());
        assert_eq!(alternating(4).order(), 12);
        assert!(cyclic_product(&[2, 4]).is_abelian());
        // Q8 has a unique element of order 2
        let q = quaternion();
        assert_eq!((0..8).filter(|&x| q.element_order(x) == 2).count(), 1);
        // D4 has five
        let d = dihedral(4);
        assert_eq!((0..8).filter(|&x| d.element_order(x) == 2).count(), 5);
    }

    #[test]
    fn known_subgroup_counts() {
        let counts: Vec<(&str, usize)> = lattice_fixtures()
            .iter()
            .map(|(n, g)| (*n, g.all_subgroups().len()))
            .collect();
        let expected = [
            ("C2", 2),
            ("C3", 2),
            ("C4", 3),
            ("C2xC2", 5),
            ("C6", 4),
            ("S3", 6),
            ("C8", 4),
            ("D4", 10),
            ("Q8", 6),
            ("A4", 10),
            ("C2xC4", 8),
        ];
        assert_eq!(counts, expected);
    }
}

//! Bitmask helpers. Matroid ground sets are 1-indexed: element `i` is bit `i - 1`.

/// Mask of a list of 1-indexed elements.
pub fn set(elems: &[usize]) -> u32 {
    elems.iter().fold(0, |m, &e| {
        assert!((1..=32).contains(&e), "element {e} out of range");
        m | 1 << (e - 1)
    })
}

/// Sorted 1-indexed elements of a mask.
pub fn elems(mask: u32) -> Vec<usize> {
    iter(mask).collect()
}

pub fn iter(mask: u32) -> impl Iterator<Item = usize> {
    let mut m = mask;
    std::iter::from_fn(move || {
        if m == 0 {
            return None;
        }
        let i = m.trailing_zeros() as usize;
        m &= m - 1;
        Some(i + 1)
    })
}

pub fn full(n: usize) -> u32 {
    if n == 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

pub fn size(mask: u32) -> usize {
    mask.count_ones() as usize
}

/// All submasks of `mask`, including 0 and `mask`.
pub fn submasks(mask: u32) -> impl Iterator<Item = u32> {
    let mut s = Some(mask);
    std::iter::from_fn(move || {
        let cur = s?;
        s = if cur == 0 { None } else { Some((cur - 1) & mask) };
        Some(cur)
    })
}

pub fn submasks64(mask: u64) -> impl Iterator<Item = u64> {
    let mut s = Some(mask);
    std::iter::from_fn(move || {
        let cur = s?;
        s = if cur == 0 { None } else { Some((cur - 1) & mask) };
        Some(cur)
    })
}

/// All `k`-subsets of `{1..n}` in colex order.
pub fn k_subsets(n: usize, k: usize) -> Vec<u32> {
    if k > n {
        return Vec::new();
    }
    if k == 0 {
        return vec![0];
    }
    let mut out = Vec::new();
    let mut s: u32 = (1 << k) - 1;
    let limit = 1u64 << n;
    while (s as u64) < limit {
        out.push(s);
        let c = s & s.wrapping_neg();
        let r = s.wrapping_add(c);
        if r == 0 {
            break;
        }
        s = (((r ^ s) >> 2) / c) | r;
    }
    out
}

/// Compact rendering such as `{1,2,5}`.
pub fn fmt(mask: u32) -> String {
    let v: Vec<String> = iter(mask).map(|e| e.to_string()).collect();
    format!("{{{}}}", v.join(","))
}

/// Lexicographic comparison key of a set by its sorted element list.
pub fn lex_key(mask: u32) -> Vec<usize> {
    elems(mask)
}

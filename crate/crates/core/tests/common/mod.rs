//! Brute-force reference enumeration for jump-system paths.
//!
//! Generates every jump sequence explicitly and classifies it, sharing no
//! code with the DP under test. Exponential; only for small lengths.

/// Path counts per class from exhaustive enumeration.
#[derive(Debug, Default, Clone, Copy, PartialEq, Eq)]
pub struct ClassCounts {
    pub walks: u64,
    pub bridges: u64,
    pub meanders: u64,
    pub excursions: u64,
}

/// Enumerates every sequence of jumps whose time lengths tile `length`
/// exactly, tracking the running height, and tallies the four classes.
pub fn enumerate_classes(jumps: &[(usize, i64)], length: usize) -> ClassCounts {
    let mut counts = ClassCounts::default();
    fn recurse(
        jumps: &[(usize, i64)],
        remaining: usize,
        height: i64,
        min_height: i64,
        counts: &mut ClassCounts,
    ) {
        if remaining == 0 {
            counts.walks += 1;
            if height == 0 {
                counts.bridges += 1;
            }
            if min_height >= 0 {
                counts.meanders += 1;
                if height == 0 {
                    counts.excursions += 1;
                }
            }
            return;
        }
        for &(t, dh) in jumps {
            if t <= remaining {
                let h = height + dh;
                recurse(jumps, remaining - t, h, min_height.min(h), counts);
            }
        }
    }
    recurse(jumps, length, 0, 0, &mut counts);
    counts
}

/// Enumerated meanders of the given length grouped by final height.
pub fn enumerate_meanders_by_end(
    jumps: &[(usize, i64)],
    length: usize,
) -> std::collections::BTreeMap<i64, u64> {
    let mut profile = std::collections::BTreeMap::new();
    fn recurse(
        jumps: &[(usize, i64)],
        remaining: usize,
        height: i64,
        profile: &mut std::collections::BTreeMap<i64, u64>,
    ) {
        if remaining == 0 {
            *profile.entry(height).or_insert(0) += 1;
            return;
        }
        for &(t, dh) in jumps {
            if t <= remaining {
                let h = height + dh;
                if h >= 0 {
                    recurse(jumps, remaining - t, h, profile);
                }
            }
        }
    }
    recurse(jumps, length, 0, &mut profile);
    profile
}

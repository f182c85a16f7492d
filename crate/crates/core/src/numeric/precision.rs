/// Working precision for a numeric computation. Every numeric entry point takes
/// one of these explicitly; there is no ambient precision.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrecisionConfig {
    pub decimal_digits: u32,
    pub guard_digits: u32,
}

impl PrecisionConfig {
    pub fn new(decimal_digits: u32) -> Self {
        PrecisionConfig {
            decimal_digits: decimal_digits.max(10),
            guard_digits: 10,
        }
    }

    pub fn with_guard(decimal_digits: u32, guard_digits: u32) -> Self {
        PrecisionConfig {
            decimal_digits: decimal_digits.max(10),
            guard_digits,
        }
    }

    /// `ceil((digits + guard) * log2(10))`.
    pub fn bits(&self) -> u32 {
        let total = u64::from(self.decimal_digits + self.guard_digits);
        // 3.321928094887362 < 3321929/1000000
        (total * 3_321_929).div_ceil(1_000_000) as u32
    }

    /// Target relative accuracy `10^-decimal_digits` as an f64.
    pub fn tolerance(&self) -> f64 {
        10f64.powi(-(self.decimal_digits as i32))
    }
}

impl Default for PrecisionConfig {
    fn default() -> Self {
        PrecisionConfig::new(50)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bits_cover_digits() {
        for d in [10u32, 17, 50, 100, 200] {
            let cfg = PrecisionConfig::new(d);
            let need = f64::from(d + 10) * std::f64::consts::LOG2_10;
            assert!(f64::from(cfg.bits()) >= need);
            assert!(f64::from(cfg.bits()) < need + 1.0);
        }
        assert_eq!(PrecisionConfig::new(3).decimal_digits, 10);
    }
}

use serde::{Serialize, Serializer};
use serde_json::value::RawValue;
use trinomial_core::Complex64;

/// Seventeen significant digits: enough to round-trip any `f64`.
pub fn sig17(x: f64) -> String {
    format!("{x:.16e}")
}

/// A float that serializes to JSON with [`sig17`] digits (`null` if not finite).
#[derive(Debug, Clone, Copy)]
pub struct Num(pub f64);

impl Serialize for Num {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        if !self.0.is_finite() {
            return s.serialize_none();
        }
        let raw = RawValue::from_string(sig17(self.0)).map_err(serde::ser::Error::custom)?;
        raw.serialize(s)
    }
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct JsonComplex {
    pub re: Num,
    pub im: Num,
}

impl From<Complex64> for JsonComplex {
    fn from(z: Complex64) -> Self {
        JsonComplex {
            re: Num(z.re),
            im: Num(z.im),
        }
    }
}

/// Twelve significant digits, fixed-point where that stays readable.
pub fn sig12(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let exp = x.abs().log10().floor() as i32;
    if (-4..12).contains(&exp) {
        format!("{:.*}", (11 - exp) as usize, x)
    } else {
        format!("{x:.11e}")
    }
}

pub fn complex12(z: Complex64) -> String {
    let sign = if z.im.is_sign_negative() { '-' } else { '+' };
    format!("{} {} {}i", sig12(z.re), sign, sig12(z.im.abs()))
}

/// `t` in shortest round-trip form, e.g. `0.3` or `0.3+0.1i`.
pub fn short_complex(z: Complex64) -> String {
    if z.im == 0.0 {
        format!("{}", z.re)
    } else if z.im.is_sign_negative() {
        format!("{}-{}i", z.re, -z.im)
    } else {
        format!("{}+{}i", z.re, z.im)
    }
}

pub const CSV_HEADER: [&str; 9] = [
    "t_re",
    "t_im",
    "method",
    "root_index",
    "root_re",
    "root_im",
    "residual",
    "terms_used",
    "converged",
];

/// One CSV row; `root` is `None` for a row that only reports a failed method.
pub fn csv_record(
    t: Complex64,
    method: &str,
    root: Option<(usize, Complex64, f64)>,
    terms_used: Option<usize>,
    converged: bool,
) -> [String; 9] {
    let (index, re, im, residual) = match root {
        Some((i, x, r)) => (i.to_string(), sig17(x.re), sig17(x.im), sig17(r)),
        None => Default::default(),
    };
    [
        sig17(t.re),
        sig17(t.im),
        method.to_string(),
        index,
        re,
        im,
        residual,
        terms_used.map(|n| n.to_string()).unwrap_or_default(),
        converged.to_string(),
    ]
}

pub fn csv_writer<W: std::io::Write>(out: W) -> csv::Writer<W> {
    csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(out)
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("output is always serializable")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sig17_round_trips() {
        for x in [0.1, -1.125418782756626, 1e-300, 6.02e23, -0.0] {
            assert_eq!(sig17(x).parse::<f64>().unwrap().to_bits(), x.to_bits());
        }
    }

    #[test]
    fn json_numbers_are_raw() {
        let s = serde_json::to_string(&JsonComplex::from(Complex64::new(0.5, -2.0))).unwrap();
        assert_eq!(
            s,
            r#"{"re":5.0000000000000000e-1,"im":-2.0000000000000000e0}"#
        );
        assert_eq!(serde_json::to_string(&Num(f64::NAN)).unwrap(), "null");
    }

    #[test]
    fn plain_digits() {
        assert_eq!(sig12(-1.125418782756626), "-1.12541878276");
        assert_eq!(sig12(0.0003389362415949989), "0.000338936241595");
        assert_eq!(sig12(1.5e-9), "1.50000000000e-9");
        assert_eq!(
            complex12(Complex64::new(0.5, -0.25)),
            "0.500000000000 - 0.250000000000i"
        );
    }
}

use std::io::Write;

use serde::Serialize;
use trinomial_core::decomposition::{argument_scale_exact, class_spec};
use trinomial_core::{gamma_ratio_term, Complex64, HypergeometricSpec, Rational};

use crate::args::{DecomposeArgs, Format};
use crate::failure::Failure;
use crate::format::{sig12, to_json, Num};

/// `27t^2/4`-style text for the common class argument.
pub fn argument_text(degree: u32) -> String {
    let m = degree - 1;
    let t_pow = if m == 1 {
        "t".to_string()
    } else {
        format!("t^{m}")
    };
    match argument_scale_exact(degree) {
        Some(r) if *r.denom() == 1 => format!("{}{t_pow}", r.numer()),
        Some(r) => format!("{}{t_pow}/{}", r.numer(), r.denom()),
        None => format!("{degree}^{degree} {t_pow}/{m}^{m}"),
    }
}

fn ratio_text(r: Rational) -> String {
    r.to_string()
}

fn power(base: &str, k: u32) -> String {
    match k {
        0 => String::new(),
        1 => base.to_string(),
        _ => format!("{base}^{k}"),
    }
}

/// `Γ(Nq/(N-1) + 1) / (Γ(q + 2) Γ(q/(N-1) + 1))` with reduced arguments.
fn gamma_text(degree: u32, q: u32) -> String {
    let m = i64::from(degree - 1);
    let q = i64::from(q);
    let a = Rational::new(i64::from(degree) * q, m) + 1;
    let c = Rational::new(q, m) + 1;
    format!("Γ({a})/(Γ({})·Γ({c}))", q + 2)
}

struct ClassInfo {
    q: u32,
    /// `-c_q / (N-1)`, the numeric part of the coefficient.
    scale: f64,
    expression: String,
    spec: HypergeometricSpec,
}

fn classes(degree: u32) -> Vec<ClassInfo> {
    let m = degree - 1;
    (0..m)
        .map(|q| {
            let scale = -gamma_ratio_term(degree, u64::from(q)) / f64::from(m);
            let monomial = [power("ω_j", q), power("t", q + 1)]
                .into_iter()
                .filter(|s| !s.is_empty())
                .collect::<Vec<_>>()
                .join(" ");
            let front = if m == 1 {
                "-".to_string()
            } else {
                format!("-(1/{m})·")
            };
            let expression = if q == 0 {
                format!("{front}{monomial}")
            } else {
                format!(
                    "{front}{}·{monomial} ≈ {} {monomial}",
                    gamma_text(degree, q),
                    sig12(scale)
                )
            };
            ClassInfo {
                q,
                scale,
                expression,
                spec: class_spec(degree, q, Complex64::new(0.0, 0.0)),
            }
        })
        .collect()
}

#[derive(Serialize)]
struct ClassJson {
    q: u32,
    coefficient: String,
    scale: Num,
    omega_power: u32,
    t_power: u32,
    upper: Vec<String>,
    lower: Vec<String>,
    function: String,
}

#[derive(Serialize)]
struct DecomposeJson {
    degree: u32,
    root: String,
    omega: String,
    argument: String,
    classes: Vec<ClassJson>,
    small_root: String,
}

pub fn run(args: &DecomposeArgs, format: Format, out: &mut dyn Write) -> Result<(), Failure> {
    let degree = args.degree;
    let m = degree - 1;
    let arg = argument_text(degree);
    let info = classes(degree);
    let root = "x_j = 1/ω_j + Σ_q C_q · F_q(z)".to_string();
    let omega = format!("ω_j = exp(2πi(j+1)/{m}), j = 0..{}", m - 1);
    let small_root = format!("t · {}", info[0].spec.render(&arg));
    let text = match format {
        Format::Json => {
            to_json(&DecomposeJson {
                degree,
                root,
                omega,
                argument: arg.clone(),
                classes: info
                    .iter()
                    .map(|c| ClassJson {
                        q: c.q,
                        coefficient: c.expression.clone(),
                        scale: Num(c.scale),
                        omega_power: c.q,
                        t_power: c.q + 1,
                        upper: c.spec.upper().iter().copied().map(ratio_text).collect(),
                        lower: c.spec.lower().iter().copied().map(ratio_text).collect(),
                        function: c.spec.render(&arg),
                    })
                    .collect(),
                small_root,
            }) + "\n"
        }
        Format::Plain | Format::Csv => {
            let mut s = format!("N = {degree}\n{root}\n{omega}\nz = {arg}\n");
            for c in &info {
                s += &format!(
                    "q = {}\n  C_{} = {}\n  F_{} = {}\n",
                    c.q,
                    c.q,
                    c.expression,
                    c.q,
                    c.spec.render(&arg)
                );
            }
            s += &format!("sum-rule root: {small_root}\n");
            s
        }
    };
    out.write_all(text.as_bytes())
        .map_err(|e| Failure::Numeric(format!("writing output: {e}")))
}

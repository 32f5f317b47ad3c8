use std::f64::consts::PI;

use paraq::quantum::ChshAngles;

/// `%.{digits}g`: `digits` significant digits, trailing zeros dropped,
/// exponent form outside `1e-5 ..= 10^digits`.
pub fn sig(x: f64, digits: usize) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let p = digits.max(1);
    let sci = format!("{:.*e}", p - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent form");
    let exp: i32 = exp.parse().expect("integer exponent");
    if exp < -5 || exp >= p as i32 {
        format!(
            "{}e{}{:02}",
            trim_zeros(mantissa),
            if exp < 0 { '-' } else { '+' },
            exp.abs()
        )
    } else {
        let decimals = (p as i32 - 1 - exp).max(0) as usize;
        trim_zeros(&format!("{x:.decimals$}")).to_string()
    }
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

/// Parses an angle in radians. Accepts plain numbers (`0.785`), multiples
/// of pi (`pi`, `-pi/4`, `3pi/4`, `3*pi/4`, `0.5pi`) and degrees (`45deg`).
pub fn parse_angle(text: &str) -> Result<f64, String> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = || format!("bad angle `{text}` (try 0.785, 3pi/4, 45deg)");
    if let Some(deg) = s.strip_suffix("deg") {
        return deg.parse::<f64>().map(f64::to_radians).map_err(|_| bad());
    }
    let Some(at) = s.find("pi").or_else(|| s.find('π')) else {
        return s.parse().map_err(|_| bad());
    };
    let width = if s[at..].starts_with("pi") {
        2
    } else {
        'π'.len_utf8()
    };
    let coef = s[..at].trim_end_matches('*');
    let coef = match coef {
        "" | "+" => 1.0,
        "-" => -1.0,
        c => c.parse::<f64>().map_err(|_| bad())?,
    };
    let rest = &s[at + width..];
    let denom = match rest {
        "" => 1.0,
        r => r
            .strip_prefix('/')
            .and_then(|d| d.parse::<f64>().ok())
            .filter(|d| *d != 0.0)
            .ok_or_else(bad)?,
    };
    Ok(coef * PI / denom)
}

/// `a,a',b,b'` as four angles.
pub fn parse_angles(text: &str) -> Result<ChshAngles<f64>, String> {
    let parts: Vec<&str> = text.split(',').collect();
    let [a, ap, b, bp] = parts.as_slice() else {
        return Err(format!(
            "expected four comma-separated angles, got `{text}`"
        ));
    };
    Ok(ChshAngles {
        a: parse_angle(a)?,
        a_prime: parse_angle(ap)?,
        b: parse_angle(b)?,
        b_prime: parse_angle(bp)?,
    })
}

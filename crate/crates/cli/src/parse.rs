use num_complex::Complex64;
use partition_core::Partition;
use symfunc_numeric::VarSet;

/// Comma-separated parts, e.g. `4,2,2`; empty or `0` is `∅`.
pub fn partition(s: &str) -> Result<Partition, String> {
    s.parse::<Partition>().map_err(|e| format!("invalid partition {s:?}: {e}"))
}

/// A complex number written `re`, `imj` or `re+imj`.
pub fn complex(s: &str) -> Result<Complex64, String> {
    let t = s.trim();
    if t.contains('i') {
        return Err(format!("invalid complex number {s:?}: use j for the imaginary unit"));
    }
    t.replace('j', "i").parse::<Complex64>().map_err(|_| format!("invalid complex number {s:?}"))
}

/// Comma-separated complex numbers; empty or `∅` is the empty set.
pub fn varset(s: &str) -> Result<VarSet, String> {
    let t = s.trim().trim_start_matches('[').trim_end_matches(']').trim();
    if t.is_empty() || t == "∅" {
        return Ok(VarSet::empty());
    }
    t.split(',').map(complex).collect::<Result<Vec<_>, _>>().map(VarSet::new)
}

/// Formats a partition as comma-separated parts.
pub fn format_partition(p: &Partition) -> String {
    p.parts().iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

/// Formats a complex number as `re+imj`.
pub fn format_complex(z: Complex64) -> String {
    if z.im < 0.0 || (z.im == 0.0 && z.im.is_sign_negative()) {
        format!("{}-{}j", z.re, -z.im)
    } else {
        format!("{}+{}j", z.re, z.im)
    }
}

/// Formats a variable set as comma-separated `re+imj` values.
pub fn format_varset(x: &VarSet) -> String {
    x.values().iter().map(|z| format_complex(*z)).collect::<Vec<_>>().join(",")
}

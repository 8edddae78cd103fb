//! Parsing of type specs, roots, ideals and simple-root subsets from the command line.
//!
//! Every error names the offending token.

use abnorm::rootsys::paper_e6;
use abnorm::{Family, RootSystem, SimpleTypeId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Numbering {
    Bourbaki,
    PaperE6,
}

/// Translation between the labels a user types and internal 0-based simple indices.
#[derive(Debug, Clone, Copy)]
pub struct Labels {
    pub numbering: Numbering,
    pub rank: usize,
}

impl Labels {
    pub fn new(numbering: Numbering, t: SimpleTypeId) -> Result<Self, String> {
        if numbering == Numbering::PaperE6 && (t.family() != Family::E || t.rank() != 6) {
            return Err(format!("numbering 'paper-e6' applies only to E6, not '{t}'"));
        }
        Ok(Self { numbering, rank: t.rank() })
    }

    /// 1-based user label to 0-based internal index.
    pub fn internal(&self, label: usize) -> usize {
        match self.numbering {
            Numbering::Bourbaki => label - 1,
            Numbering::PaperE6 => paper_e6::to_bourbaki(label) - 1,
        }
    }

    /// 0-based internal index to 1-based user label.
    pub fn label(&self, k: usize) -> usize {
        match self.numbering {
            Numbering::Bourbaki => k + 1,
            Numbering::PaperE6 => paper_e6::from_bourbaki(k + 1),
        }
    }

    pub fn labels(&self, ks: &[usize]) -> Vec<usize> {
        let mut v: Vec<usize> = ks.iter().map(|&k| self.label(k)).collect();
        v.sort_unstable();
        v
    }

    /// Letters of a word: 0 stays `s₀`, simple letters are relabelled.
    pub fn letters(&self, letters: &[usize]) -> Vec<usize> {
        letters.iter().map(|&l| if l == 0 { 0 } else { self.label(l - 1) }).collect()
    }

    pub fn coeffs_out(&self, c: &[i32]) -> Vec<i32> {
        match self.numbering {
            Numbering::Bourbaki => c.to_vec(),
            Numbering::PaperE6 => paper_e6::coeffs_from_bourbaki(c),
        }
    }

    pub fn coeffs_in(&self, c: &[i32]) -> Vec<i32> {
        match self.numbering {
            Numbering::Bourbaki => c.to_vec(),
            Numbering::PaperE6 => paper_e6::coeffs_to_bourbaki(c),
        }
    }

    /// Compact coefficient string, e.g. `1221`, in the user's numbering.
    pub fn root_string(&self, rs: &RootSystem, i: usize) -> String {
        let c = self.coeffs_out(rs.coeffs(i));
        if c.iter().all(|&x| (0..10).contains(&x)) {
            c.iter().map(|x| x.to_string()).collect()
        } else {
            format!("{c:?}")
        }
    }
}

/// `E6`, `Dn4`, `A1..E8`, `all`, `all:rank<=N`, or a comma list of those.
pub fn parse_types(spec: &str) -> Result<Vec<SimpleTypeId>, String> {
    let mut out: Vec<SimpleTypeId> = Vec::new();
    for item in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let found = if item.eq_ignore_ascii_case("all") {
            SimpleTypeId::all_up_to(8)
        } else if let Some(bound) = item.strip_prefix("all:rank<=") {
            let n: usize = bound
                .parse()
                .map_err(|_| format!("bad rank bound '{bound}' in type spec '{item}'"))?;
            SimpleTypeId::all_up_to(n)
        } else if let Some((lo, hi)) = item.split_once("..") {
            let lo = parse_type(lo)?;
            let hi = parse_type(hi)?;
            let all = SimpleTypeId::all_up_to(lo.rank().max(hi.rank()).max(8));
            let pos = |t: SimpleTypeId| all.iter().position(|&x| x == t);
            match (pos(lo), pos(hi)) {
                (Some(a), Some(b)) if a <= b => all[a..=b].to_vec(),
                _ => return Err(format!("empty type range '{item}'")),
            }
        } else {
            vec![parse_type(item)?]
        };
        for t in found {
            if !out.contains(&t) {
                out.push(t);
            }
        }
    }
    if out.is_empty() {
        return Err(format!("type spec '{spec}' selects no types"));
    }
    Ok(out)
}

fn parse_type(token: &str) -> Result<SimpleTypeId, String> {
    token
        .trim()
        .parse()
        .map_err(|_| format!("unknown type '{}'", token.trim()))
}

/// A positive root: `theta`, `a3` (simple root by label), `1,2,2,1` or `1221`.
pub fn parse_root(rs: &RootSystem, labels: &Labels, token: &str) -> Result<usize, String> {
    let t = token.trim();
    if t.eq_ignore_ascii_case("theta") || t == "θ" {
        return Ok(rs.theta());
    }
    let simple = t
        .strip_prefix(['a', 'A'])
        .or_else(|| t.strip_prefix('α'));
    if let Some(rest) = simple {
        let label: usize = rest.parse().map_err(|_| format!("bad root '{t}'"))?;
        if label == 0 || label > rs.rank() {
            return Err(format!("simple root '{t}' out of range for {}", rs.type_id()));
        }
        return Ok(labels.internal(label));
    }
    let inner = t.trim_start_matches('[').trim_end_matches(']');
    let coeffs: Vec<i32> = if inner.contains(',') {
        inner
            .split(',')
            .map(|x| x.trim().parse::<i32>().map_err(|_| format!("bad root '{t}'")))
            .collect::<Result<_, _>>()?
    } else if inner.chars().all(|c| c.is_ascii_digit()) && !inner.is_empty() {
        inner.chars().map(|c| c.to_digit(10).unwrap() as i32).collect()
    } else {
        return Err(format!("bad root '{t}'"));
    };
    if coeffs.len() != rs.rank() {
        return Err(format!(
            "root '{t}' has {} coefficients, {} needs {}",
            coeffs.len(),
            rs.type_id(),
            rs.rank()
        ));
    }
    rs.index_of(&labels.coeffs_in(&coeffs))
        .ok_or_else(|| format!("'{t}' is not a positive root of {}", rs.type_id()))
}

/// Ideal generators: root indices (`0,3,5`) or, with `as_coeffs`, roots separated by `;`.
pub fn parse_ideal(rs: &RootSystem, labels: &Labels, spec: &str, as_coeffs: bool) -> Result<Vec<usize>, String> {
    let mut out = Vec::new();
    if as_coeffs {
        for tok in spec.split(';').map(str::trim).filter(|s| !s.is_empty()) {
            out.push(parse_root(rs, labels, tok)?);
        }
    } else {
        for tok in spec.split([',', ' ']).map(str::trim).filter(|s| !s.is_empty()) {
            let i: usize = tok.parse().map_err(|_| format!("bad root index '{tok}'"))?;
            if i >= rs.num_pos() {
                return Err(format!(
                    "root index '{tok}' out of range ({} has {} positive roots)",
                    rs.type_id(),
                    rs.num_pos()
                ));
            }
            out.push(i);
        }
    }
    Ok(out)
}

/// 1-based simple labels, comma separated; empty means `∅`.
pub fn parse_support(labels: &Labels, spec: &str) -> Result<Vec<usize>, String> {
    let mut out = Vec::new();
    for tok in spec.split([',', ' ']).map(str::trim).filter(|s| !s.is_empty()) {
        let tok_num = tok.trim_start_matches(['a', 'A']);
        let l: usize = tok_num.parse().map_err(|_| format!("bad simple root '{tok}'"))?;
        if l == 0 || l > labels.rank {
            return Err(format!("simple root '{tok}' out of range for rank {}", labels.rank));
        }
        out.push(labels.internal(l));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use abnorm::build_root_system;

    fn rs(s: &str) -> RootSystem {
        build_root_system(s.parse().unwrap())
    }

    #[test]
    fn type_specs() {
        assert_eq!(parse_types("E6").unwrap().len(), 1);
        assert_eq!(parse_types("all:rank<=8").unwrap().len(), 32);
        assert_eq!(parse_types("A1..E8").unwrap().len(), 30);
        assert_eq!(parse_types("A2, Dn4,A2").unwrap().len(), 2);
        let err = parse_types("A2,X9").unwrap_err();
        assert!(err.contains("X9"), "{err}");
        assert!(parse_types("E8..A1").is_err());
    }

    #[test]
    fn roots_in_both_numberings() {
        let d4 = rs("D4");
        let l = Labels::new(Numbering::Bourbaki, d4.type_id()).unwrap();
        assert_eq!(parse_root(&d4, &l, "a1").unwrap(), 0);
        assert_eq!(parse_root(&d4, &l, "1,2,1,1").unwrap(), d4.theta());
        assert_eq!(parse_root(&d4, &l, "theta").unwrap(), d4.theta());
        assert!(parse_root(&d4, &l, "1,3,1,1").unwrap_err().contains("1,3,1,1"));

        let e6 = rs("E6");
        let p = Labels::new(Numbering::PaperE6, e6.type_id()).unwrap();
        assert_eq!(parse_root(&e6, &p, "123212").unwrap(), e6.theta());
        assert_eq!(parse_root(&e6, &p, "a6").unwrap(), 1);
        assert!(Labels::new(Numbering::PaperE6, d4.type_id()).is_err());
    }

    #[test]
    fn ideal_tokens_are_named() {
        let a2 = rs("A2");
        let l = Labels::new(Numbering::Bourbaki, a2.type_id()).unwrap();
        assert_eq!(parse_ideal(&a2, &l, "0,2", false).unwrap(), vec![0, 2]);
        assert_eq!(parse_ideal(&a2, &l, "a1; 11", true).unwrap(), vec![0, 2]);
        assert!(parse_ideal(&a2, &l, "0,7", false).unwrap_err().contains("'7'"));
        assert!(parse_ideal(&a2, &l, "0,x", false).unwrap_err().contains("'x'"));
    }
}

//! Text format for presentations:
//!
//! ```text
//! algebra sl11_Hhat {
//!   generators e f h t;
//!   degree 1 1 1 1;
//!   grading Z2: e=1 f=1 h=0 t=0;
//!   central t;
//!   relations {
//!     e*f + f*e - h*t;
//!   }
//! }
//! ```

use std::fmt;

use linemod_core::ncalg::{Alphabet, Generator, GroupElem, GroupKind, NcPoly, Word, Q};
use linemod_core::rewrite::Presentation;
use pest::iterators::Pair;
use pest::Parser;
use pest_derive::Parser;

#[derive(Parser)]
#[grammar = "alg.pest"]
struct AlgParser;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub struct DslError {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

impl fmt::Display for DslError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.col, self.message)
    }
}

impl DslError {
    fn at(pair: &Pair<Rule>, message: impl Into<String>) -> Self {
        let (line, col) = pair.as_span().start_pos().line_col();
        DslError { line, col, message: message.into() }
    }

    fn syntax(e: pest::error::Error<Rule>) -> Self {
        let (line, col) = match e.line_col {
            pest::error::LineColLocation::Pos(p) | pest::error::LineColLocation::Span(p, _) => p,
        };
        let message = match &e.variant {
            pest::error::ErrorVariant::ParsingError { positives, .. } if !positives.is_empty() => {
                let names: Vec<String> = positives.iter().map(rule_name).collect();
                format!("syntax error: expected {}", names.join(" or "))
            }
            _ => "syntax error".to_string(),
        };
        DslError { line, col, message }
    }
}

fn rule_name(r: &Rule) -> String {
    match r {
        Rule::expr | Rule::term | Rule::factor => "an expression".into(),
        Rule::ident => "a generator name".into(),
        Rule::rational | Rule::int => "a number".into(),
        Rule::add_op => "`+` or `-`".into(),
        Rule::EOI => "end of input".into(),
        other => format!("{other:?}"),
    }
}

/// Parses one `algebra NAME { … }` block into a validated presentation.
pub fn parse_algebra(text: &str) -> Result<Presentation, DslError> {
    let file = AlgParser::parse(Rule::file, text).map_err(DslError::syntax)?.next().expect("file");
    let alg = file.into_inner().next().expect("algebra");
    let alg_pair = alg.clone();
    let mut inner = alg.into_inner();
    let name = inner.next().expect("name").as_str().to_string();

    let mut alpha: Option<Alphabet> = None;
    let mut degrees: Option<(Pair<Rule>, Vec<u32>)> = None;
    let mut grading: Option<(Pair<Rule>, GroupKind, Vec<(String, GroupElem, Pair<Rule>)>)> = None;
    let mut central = Vec::new();
    let mut relations: Vec<(Pair<Rule>, NcPoly)> = Vec::new();

    for section in inner {
        match section.as_rule() {
            Rule::generators => {
                if alpha.is_some() {
                    return Err(DslError::at(&section, "generators declared twice"));
                }
                let names: Vec<&str> = section.clone().into_inner().map(|p| p.as_str()).collect();
                let mut seen = std::collections::BTreeSet::new();
                for p in section.clone().into_inner() {
                    if !seen.insert(p.as_str()) {
                        return Err(DslError::at(&p, format!("duplicate generator `{}`", p.as_str())));
                    }
                }
                alpha = Some(Alphabet::new(&names));
            }
            Rule::degree => {
                let mut ds = Vec::new();
                for p in section.clone().into_inner() {
                    let d: u32 = p.as_str().parse().map_err(|_| DslError::at(&p, "degree out of range"))?;
                    ds.push(d);
                }
                degrees = Some((section, ds));
            }
            Rule::grading => {
                let mut it = section.clone().into_inner();
                let kind = match it.next().expect("group").as_str() {
                    "Z2" => GroupKind::Z2,
                    _ => GroupKind::Z2xZ2,
                };
                let mut labels = Vec::new();
                for assign in it {
                    let mut a = assign.clone().into_inner();
                    let g = a.next().expect("ident").as_str().to_string();
                    let label = a.next().expect("label");
                    let bits: Vec<u8> = label
                        .clone()
                        .into_inner()
                        .map(|p| p.as_str().parse::<u8>().ok().filter(|b| *b <= 1))
                        .collect::<Option<_>>()
                        .ok_or_else(|| DslError::at(&label, "group labels are 0 or 1"))?;
                    let elem = match (kind, bits.as_slice()) {
                        (GroupKind::Z2, [b]) => GroupElem::z2(*b),
                        (GroupKind::Z2xZ2, [a, b]) => GroupElem(*a, *b),
                        _ => return Err(DslError::at(&label, "label does not match the group")),
                    };
                    labels.push((g, elem, assign));
                }
                grading = Some((section, kind, labels));
            }
            Rule::central => {
                let a = alpha.as_ref().ok_or_else(|| DslError::at(&section, "central before generators"))?;
                for p in section.into_inner() {
                    central.push(a.index_of(p.as_str()).ok_or_else(|| unknown(&p))?);
                }
            }
            Rule::relations => {
                let a = alpha.as_ref().ok_or_else(|| DslError::at(&section, "relations before generators"))?;
                for e in section.into_inner() {
                    let p = eval_expr(e.clone(), a)?;
                    relations.push((e, p));
                }
            }
            Rule::EOI => {}
            r => unreachable!("unexpected section {r:?}"),
        }
    }

    let mut alpha = alpha.ok_or_else(|| DslError::at(&alg_pair, "no generators declared"))?;
    if let Some((pair, ds)) = degrees {
        if ds.len() != alpha.len() {
            return Err(DslError::at(&pair, format!("{} degrees for {} generators", ds.len(), alpha.len())));
        }
        for (g, d) in alpha.gens.iter_mut().zip(ds) {
            g.z_degree = d;
        }
    }
    if let Some((pair, kind, labels)) = grading {
        let mut slots: Vec<Option<GroupElem>> = vec![None; alpha.len()];
        for (g, elem, at) in labels {
            let l = alpha.index_of(&g).ok_or_else(|| DslError::at(&at, format!("unknown generator `{g}`")))?;
            slots[l as usize] = Some(elem);
        }
        let missing: Vec<&str> =
            slots.iter().zip(&alpha.gens).filter(|(s, _)| s.is_none()).map(|(_, g)| g.name.as_str()).collect();
        if !missing.is_empty() {
            return Err(DslError::at(&pair, format!("no group label for {}", missing.join(", "))));
        }
        let labels: Vec<GroupElem> = slots.into_iter().map(|s| s.expect("checked")).collect();
        alpha = alpha.with_grading(kind, &labels);
        for (at, p) in &relations {
            let mut degs = p.terms().map(|(w, _)| alpha.group_degree(w).expect("graded"));
            if let Some(first) = degs.next() {
                if degs.any(|d| d != first) {
                    return Err(DslError::at(at, "relation is not homogeneous for the declared grading"));
                }
            }
        }
    }
    let rels = relations.into_iter().map(|(_, p)| p).collect();
    Presentation::new(&name, alpha, rels, central).map_err(|e| DslError::at(&alg_pair, e.to_string()))
}

fn unknown(p: &Pair<Rule>) -> DslError {
    DslError::at(p, format!("unknown generator `{}`", p.as_str()))
}

fn eval_expr(pair: Pair<Rule>, alpha: &Alphabet) -> Result<NcPoly, DslError> {
    match pair.as_rule() {
        Rule::expr => {
            let mut it = pair.into_inner();
            let mut acc = eval_expr(it.next().expect("term"), alpha)?;
            while let Some(op) = it.next() {
                let rhs = eval_expr(it.next().expect("term"), alpha)?;
                acc = if op.as_str() == "+" { &acc + &rhs } else { &acc - &rhs };
            }
            Ok(acc)
        }
        Rule::term => {
            let mut acc = NcPoly::one();
            for f in pair.into_inner() {
                acc = &acc * &eval_expr(f, alpha)?;
            }
            Ok(acc)
        }
        Rule::factor => {
            let mut negate = false;
            let mut value = None;
            for p in pair.into_inner() {
                match p.as_rule() {
                    Rule::neg => negate = !negate,
                    _ => value = Some(eval_expr(p, alpha)?),
                }
            }
            let v = value.expect("atom");
            Ok(if negate { -&v } else { v })
        }
        Rule::rational => {
            let c: Q = pair.as_str().parse().map_err(|_| DslError::at(&pair, "bad rational (zero denominator?)"))?;
            Ok(NcPoly::constant(c))
        }
        Rule::ident => {
            let l = alpha.index_of(pair.as_str()).ok_or_else(|| unknown(&pair))?;
            Ok(NcPoly::monomial(Word::letter(l), Q::from_integer(1.into())))
        }
        r => unreachable!("unexpected rule {r:?}"),
    }
}

/// One expression over `alpha`, e.g. `h - 1/2*t`.
pub fn parse_expr(text: &str, alpha: &Alphabet) -> Result<NcPoly, DslError> {
    let top = AlgParser::parse(Rule::expr_only, text).map_err(DslError::syntax)?.next().expect("expr_only");
    eval_expr(top.into_inner().next().expect("expr"), alpha)
}

/// Comma-separated expressions over `alpha`.
pub fn parse_expr_list(text: &str, alpha: &Alphabet) -> Result<Vec<NcPoly>, DslError> {
    let top = AlgParser::parse(Rule::expr_list, text).map_err(DslError::syntax)?.next().expect("expr_list");
    top.into_inner().filter(|p| p.as_rule() == Rule::expr).map(|p| eval_expr(p, alpha)).collect()
}

/// Canonical text of a presentation; `parse_algebra(&print_algebra(p)) == p`.
pub fn print_algebra(p: &Presentation) -> String {
    let a = &p.alphabet;
    let names: Vec<&str> = a.gens.iter().map(|g| g.name.as_str()).collect();
    let mut out = format!("algebra {} {{\n  generators {};\n", p.name, names.join(" "));
    let degs: Vec<String> = a.gens.iter().map(|g: &Generator| g.z_degree.to_string()).collect();
    out += &format!("  degree {};\n", degs.join(" "));
    if let Some(kind) = a.grading {
        let group = match kind {
            GroupKind::Z2 => "Z2",
            GroupKind::Z2xZ2 => "Z2xZ2",
        };
        let labels: Vec<String> =
            a.gens.iter().map(|g| format!("{}={}", g.name, g.label.expect("graded").render(kind))).collect();
        out += &format!("  grading {group}: {};\n", labels.join(" "));
    }
    if !p.central.is_empty() {
        let c: Vec<&str> = p.central.iter().map(|&l| a.name(l)).collect();
        out += &format!("  central {};\n", c.join(" "));
    }
    out += "  relations {\n";
    for r in &p.relations {
        out += &format!("    {};\n", a.fmt_poly(r));
    }
    out += "  }\n}\n";
    out
}

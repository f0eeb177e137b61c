use std::collections::HashMap;

use super::{ArcId, DiagramError, VirtualLinkDiagram};

pub(super) fn parse(text: &str) -> Result<VirtualLinkDiagram, DiagramError> {
    let mut codes: Vec<[ArcId; 4]> = Vec::new();
    let mut free_loops = 0usize;
    let mut first_line: HashMap<ArcId, usize> = HashMap::new();
    let mut last_line = 0;

    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        last_line = line;
        let syntax = |message: String| DiagramError::Syntax { line, message };
        let mut tokens = content.split_whitespace();
        match tokens.next() {
            Some("X") => {
                let args: Vec<&str> = tokens.collect();
                if args.len() != 4 {
                    return Err(syntax(format!("`X` takes 4 arc ids, found {}", args.len())));
                }
                let mut slots = [0; 4];
                for (slot, tok) in slots.iter_mut().zip(&args) {
                    *slot = tok
                        .parse::<ArcId>()
                        .ok()
                        .filter(|&a| a > 0)
                        .ok_or_else(|| syntax(format!("`{tok}` is not a positive arc id")))?;
                    first_line.entry(*slot).or_insert(line);
                }
                codes.push(slots);
            }
            Some("L") => {
                let args: Vec<&str> = tokens.collect();
                if args.len() != 1 {
                    return Err(syntax("`L` takes one loop count".to_string()));
                }
                free_loops += args[0]
                    .parse::<usize>()
                    .map_err(|_| syntax(format!("`{}` is not a loop count", args[0])))?;
            }
            Some(other) => return Err(syntax(format!("unknown record `{other}`"))),
            None => unreachable!("content is non-empty"),
        }
    }

    VirtualLinkDiagram::from_codes(&codes, free_loops).map_err(|e| {
        let line = match &e {
            DiagramError::ArcMultiplicity { arc, .. } | DiagramError::TwoHeads(arc) | DiagramError::TwoTails(arc) => {
                first_line.get(arc).copied().unwrap_or(last_line)
            }
            _ => last_line.max(1),
        };
        DiagramError::AtLine {
            line,
            source: Box::new(e),
        }
    })
}

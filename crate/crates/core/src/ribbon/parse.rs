use super::{HalfEdgeId, RibbonEdge, RibbonError, RibbonGraph, Sign};

pub(super) fn parse(text: &str) -> Result<RibbonGraph, RibbonError> {
    let mut vertices = Vec::new();
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let syntax = |message: String| RibbonError::Syntax { line, message };
        let id = |tok: &str| {
            tok.parse::<HalfEdgeId>()
                .map_err(|_| syntax(format!("`{tok}` is not a half-edge id")))
        };
        let mut tokens = content.split_whitespace();
        match tokens.next() {
            Some("V") => vertices.push(tokens.map(id).collect::<Result<Vec<_>, _>>()?),
            Some("E") => {
                let args: Vec<&str> = tokens.collect();
                if args.len() != 4 {
                    return Err(syntax(format!("`E` takes 4 fields, found {}", args.len())));
                }
                let twisted = match args[2] {
                    "0" => false,
                    "1" => true,
                    other => return Err(syntax(format!("twist must be 0 or 1, found `{other}`"))),
                };
                let sign = match args[3] {
                    "+" => Sign::Positive,
                    "-" => Sign::Negative,
                    other => return Err(syntax(format!("sign must be + or -, found `{other}`"))),
                };
                edges.push(RibbonEdge {
                    ends: [id(args[0])?, id(args[1])?],
                    twisted,
                    sign,
                });
            }
            Some(other) => return Err(syntax(format!("unknown record `{other}`"))),
            None => unreachable!("content is non-empty"),
        }
    }
    RibbonGraph::new(vertices, edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orphan_half_edge() {
        assert_eq!(
            parse("V 1 2 3\nE 1 2 0 +\n"),
            Err(RibbonError::EdgeMultiplicity { id: 3, count: 0 })
        );
    }

    #[test]
    fn syntax_errors() {
        assert!(matches!(
            parse("V 1 2\nE 1 2 2 +\n"),
            Err(RibbonError::Syntax { line: 2, .. })
        ));
        assert!(matches!(
            parse("V 1 2\nE 1 2 0 *\n"),
            Err(RibbonError::Syntax { line: 2, .. })
        ));
        assert!(matches!(parse("V 1 x\n"), Err(RibbonError::Syntax { line: 1, .. })));
        assert!(matches!(parse("W 1\n"), Err(RibbonError::Syntax { line: 1, .. })));
        assert!(matches!(parse("E 1 2 0\n"), Err(RibbonError::Syntax { line: 1, .. })));
    }

    #[test]
    fn isolated_vertex_and_comments() {
        let g = parse("# an isolated vertex\nV\nV 1 2 # loop\nE 2 1 0 -\n").unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.vertices()[0], Vec::<HalfEdgeId>::new());
        assert_eq!(g.edges()[0].sign, Sign::Negative);
    }
}

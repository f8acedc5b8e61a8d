use symbreak::generators::from_spec;
use symbreak::io::{parse_any, parse_graph6};
use symbreak::Graph;

use crate::failure::{CliError, CliResult};

/// `@path` reads a file (graph6 or edge list); anything containing `:` or
/// `(` is a family spec; everything else is graph6. Neither character can
/// occur in graph6.
pub fn resolve(arg: &str) -> CliResult<Graph> {
    let arg = arg.trim();
    if let Some(path) = arg.strip_prefix('@') {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Input(format!("cannot read {path}: {e}")))?;
        return Ok(parse_any(&text)?);
    }
    if arg.contains(':') || arg.contains('(') {
        return Ok(from_spec(arg)?);
    }
    Ok(parse_graph6(arg)?)
}

/// `gen path 5`, `gen complete_bipartite 3 2`, `gen join star:3 star:3`,
/// or a single full spec.
pub fn generate(family: &str, params: &[String]) -> CliResult<Graph> {
    let spec = match (family, params) {
        (_, []) => family.to_string(),
        ("join" | "cartesian", [a, b]) => format!("{family}({a},{b})"),
        ("join" | "cartesian", _) => {
            return Err(CliError::Input(format!("{family} takes exactly two graph specs")))
        }
        _ => format!("{family}:{}", params.join(",")),
    };
    Ok(from_spec(&spec)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn resolver_forms() {
        assert_eq!(resolve("A_").unwrap().order(), 2);
        assert_eq!(resolve("path:4").unwrap().size(), 3);
        assert_eq!(resolve("join(complete:1,matching:2)").unwrap().order(), 5);
        assert!(matches!(resolve("@/nonexistent/file"), Err(CliError::Input(_))));
        assert!(matches!(resolve("!!"), Err(CliError::Input(_))));
    }

    #[test]
    fn gen_forms() {
        let p = generate("path", &["5".into()]).unwrap();
        assert_eq!((p.order(), p.size()), (5, 4));
        let j = generate("join", &["star:3".into(), "star:3".into()]).unwrap();
        assert_eq!(j.order(), 8);
        assert!(generate("join", &["star:3".into()]).is_err());
        assert_eq!(generate("friendship:2", &[]).unwrap().order(), 5);
    }
}

//! Where a poset comes from: a file in the text format, standard input, or
//! a built-in example.

use std::fs;
use std::io::Read;

use flagideal::poset::{
    antichain, chain, example_3_4, example_3_6, example_4_9, hom_rt_poset, letterplace_poset, pentagon, text,
    v_coletterplace_poset, v_poset,
};
use flagideal::Poset;

use crate::CliError;

pub const EXAMPLE_HELP: &str = "pentagon | 3.4 | 3.6 | 4.9 | hom:r,t | letterplace:n,<poset> | chain:n | \
antichain:n | v:r,s | coletterplace:r,s,n";

fn numbers(args: &str, count: usize, name: &str) -> Result<Vec<usize>, CliError> {
    let parsed: Result<Vec<usize>, _> = args.split(',').map(|s| s.trim().parse::<usize>()).collect();
    match parsed {
        Ok(v) if v.len() == count => Ok(v),
        _ => Err(CliError::Usage(format!(
            "`{name}` takes {count} comma-separated positive integers"
        ))),
    }
}

/// A built-in example by name.
pub fn example(name: &str) -> Result<Poset, CliError> {
    let (head, args) = name.split_once(':').unwrap_or((name, ""));
    let g = match head {
        "pentagon" => return Ok(pentagon()),
        "3.4" => example_3_4(),
        "3.6" => example_3_6(),
        "4.9" => example_4_9(),
        "hom" => {
            let v = numbers(args, 2, head)?;
            hom_rt_poset(v[0], v[1])?
        }
        "chain" => chain(numbers(args, 1, head)?[0])?,
        "antichain" => antichain(numbers(args, 1, head)?[0])?,
        "v" => {
            let v = numbers(args, 2, head)?;
            v_poset(v[0], v[1])?
        }
        "coletterplace" => {
            let v = numbers(args, 3, head)?;
            v_coletterplace_poset(v[0], v[1], v[2])?
        }
        "letterplace" => {
            let (n, q) = args
                .split_once(',')
                .ok_or_else(|| CliError::Usage("`letterplace` takes n,<poset>".into()))?;
            let n = numbers(n, 1, head)?[0];
            letterplace_poset(n, &nested(q)?)?
        }
        _ => {
            return Err(CliError::Usage(format!(
                "unknown example `{name}`; expected one of {EXAMPLE_HELP}"
            )))
        }
    };
    Ok(g.into_poset())
}

/// The poset argument of `letterplace`: a built-in example if the name is
/// one, otherwise a file.
fn nested(q: &str) -> Result<Poset, CliError> {
    match example(q) {
        Ok(p) => Ok(p),
        Err(CliError::Usage(_)) => file(q),
        Err(e) => Err(e),
    }
}

/// A poset file, or standard input for `-`.
pub fn file(path: &str) -> Result<Poset, CliError> {
    let content = if path == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| CliError::Io(format!("standard input: {e}")))?;
        s
    } else {
        fs::read_to_string(path).map_err(|e| CliError::Io(format!("{path}: {e}")))?
    };
    Ok(text::parse(&content)?)
}

/// `example:<name>` or a path.
pub fn spec(s: &str) -> Result<Poset, CliError> {
    match s.strip_prefix("example:") {
        Some(name) => example(name),
        None => file(s),
    }
}

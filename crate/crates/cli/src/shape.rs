use cskit_tableaux::Partition;

use crate::CliError;

/// Parses `3,2,1`. Parts must be positive and weakly decreasing.
pub fn parse_shape(s: &str) -> Result<Partition, CliError> {
    let bad = || CliError::Shape(s.to_string());
    let parts = s
        .split(',')
        .map(|x| x.trim().parse::<usize>().map_err(|_| bad()))
        .collect::<Result<Vec<_>, _>>()?;
    if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
        return Err(bad());
    }
    Partition::new(parts).map_err(|_| bad())
}

pub fn parse_two_row(s: &str) -> Result<(usize, usize), CliError> {
    let shape = parse_shape(s)?;
    match shape.parts() {
        [a] => Ok((*a, 0)),
        [a, b] => Ok((*a, *b)),
        _ => Err(CliError::Parse(format!("shape {shape} has more than two rows"))),
    }
}

//! Argument parsing beyond the core textual formats.

use hsig_core::classification::{langlands_to_bz, LanglandsDatum};
use hsig_core::{Error, Multisegment, ParseError, Rational, Result, Segment};

/// `"1,2,1"` → `[1, 2, 1]`.
pub fn parse_blocks(s: &str) -> Result<Vec<usize>> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .ok()
                .filter(|&v| v > 0)
                .ok_or_else(|| {
                    ParseError::Parameter(s.into(), "block sizes are positive integers").into()
                })
        })
        .collect()
}

pub fn parse_rationals(s: &str) -> Result<Vec<Rational>> {
    s.split(',')
        .map(|t| t.trim().parse::<Rational>().map_err(Error::from))
        .collect()
}

/// Tempered parts, one per block. Blocks are either separated by `|`, or the
/// `;`-separated segments are dealt out to the blocks in order by size:
/// `"[0];[-1/2,1/2];[0]"` with blocks `1,2,1`. Without a `--tempered`
/// argument every block must have size one and gets `[0]`.
pub fn parse_tempered(s: Option<&str>, blocks: &[usize]) -> Result<Vec<Multisegment>> {
    let Some(s) = s else {
        if blocks.iter().all(|&b| b == 1) {
            return Ok(blocks
                .iter()
                .map(|_| Multisegment::singletons(&[Rational::ZERO]))
                .collect());
        }
        return Err(
            ParseError::Parameter("".into(), "blocks larger than one need --tempered").into(),
        );
    };
    if s.contains('|') {
        let parts: Vec<Multisegment> = s
            .split('|')
            .map(|t| t.trim().parse::<Multisegment>().map_err(Error::from))
            .collect::<Result<_>>()?;
        if parts.len() != blocks.len() {
            return Err(Error::SizeMismatch(parts.len(), blocks.len()));
        }
        return Ok(parts);
    }
    let mut segs = s
        .split(';')
        .map(|t| t.parse::<Segment>().map_err(Error::from))
        .collect::<Result<Vec<_>>>()?
        .into_iter();
    let mut out = Vec::with_capacity(blocks.len());
    for &size in blocks {
        let mut chunk = Vec::new();
        let mut filled = 0;
        while filled < size {
            let seg = segs.next().ok_or_else(|| {
                ParseError::Parameter(s.into(), "too few segments for the block sizes")
            })?;
            filled += seg.len();
            chunk.push(seg);
        }
        if filled != size {
            return Err(
                ParseError::Parameter(s.into(), "segments straddle a block boundary").into(),
            );
        }
        out.push(Multisegment::new(chunk));
    }
    if segs.next().is_some() {
        return Err(
            ParseError::Parameter(s.into(), "more segments than the block sizes allow").into(),
        );
    }
    Ok(out)
}

/// The BZ multisegment of a Langlands datum given on the command line.
pub fn langlands_multisegment(
    blocks: &str,
    tempered: Option<&str>,
    nu: &str,
) -> Result<Multisegment> {
    let sizes = parse_blocks(blocks)?;
    let parts = parse_tempered(tempered, &sizes)?;
    let nu = parse_rationals(nu)?;
    let datum = LanglandsDatum::new(sizes, parts, nu)?;
    Ok(langlands_to_bz(&datum))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tempered_grouping() {
        let t = parse_tempered(Some("[0];[-1/2,1/2];[0]"), &[1, 2, 1]).unwrap();
        assert_eq!(t.len(), 3);
        assert_eq!(t[1].to_string(), "[-1/2,1/2]");
        let t = parse_tempered(Some("0;0;0;0"), &[1, 2, 1]).unwrap();
        assert_eq!(t[1].n(), 2);
        assert_eq!(
            parse_tempered(Some("[0] | [0];[0] | [0]"), &[1, 2, 1]).unwrap(),
            t
        );
        assert!(parse_tempered(Some("[-1/2,1/2];0"), &[1, 2]).is_err());
        assert!(parse_tempered(None, &[2]).is_err());
        assert_eq!(parse_tempered(None, &[1, 1]).unwrap().len(), 2);
    }

    #[test]
    fn langlands_input() {
        let m = langlands_multisegment("1,2,1", Some("[0];[-1/2,1/2];[0]"), "3/4,0,-3/4").unwrap();
        assert_eq!(m, "3/4;[-1/2,1/2];-3/4".parse().unwrap());
        assert!(langlands_multisegment("1,1", None, "0,1").is_err());
        assert!(parse_blocks("1,0").is_err());
    }
}

use std::time::{Duration, Instant};

use serde_json::json;

use crate::halftwist::{ribbon_scalar, RibbonChoice};
use crate::scalar::Scalar;
use crate::tangle::{evaluate, Diagram, LabelRegistry, TangleError};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
}

/// Result of evaluating a closed single-label diagram. `normalized` is
/// always `unnormalized·θ^writhe`; `elapsed` is kept out of the emitted
/// output so reports stay byte-identical across runs.
#[derive(Clone, Debug)]
pub struct InvariantReport {
    pub input: String,
    pub rep: String,
    pub ribbon: String,
    pub components: usize,
    pub writhe: i64,
    pub unnormalized: Scalar,
    pub normalized: Scalar,
    pub normalize: bool,
    pub elapsed: Duration,
}

impl InvariantReport {
    pub fn compute(
        input: &str,
        rep: &str,
        d: &Diagram,
        choice: &RibbonChoice,
        reg: &LabelRegistry,
        normalize: bool,
    ) -> Result<Self, TangleError> {
        let start = Instant::now();
        if !d.is_closed() {
            return Err(TangleError::NotClosed);
        }
        let labels = d.labels();
        if labels.len() > 1 {
            return Err(TangleError::Unsupported(format!(
                "link invariants need a single label, found {}",
                labels.join(", ")
            )));
        }
        let res = evaluate(d, choice, reg)?;
        let unnormalized = res.scalar.expect("closed diagram");
        let writhe = res.writhe.expect("closed diagram");
        let theta = match labels.first() {
            Some(l) => ribbon_scalar(choice, reg.datum(), reg.weight(l)?),
            None => Scalar::one(),
        };
        let normalized = &unnormalized * &theta.pow(writhe);
        Ok(Self {
            input: input.to_string(),
            rep: rep.to_string(),
            ribbon: choice.to_string(),
            components: d.components(),
            writhe,
            unnormalized,
            normalized,
            normalize,
            elapsed: start.elapsed(),
        })
    }

    /// The headline value: normalized when requested.
    pub fn invariant(&self) -> &Scalar {
        if self.normalize {
            &self.normalized
        } else {
            &self.unnormalized
        }
    }
}

pub fn emit(r: &InvariantReport, format: Format) -> String {
    match format {
        Format::Text => format!(
            "input: {}\nrep: {}\nribbon: {}\ncomponents: {}\nwrithe: {}\nunnormalized: {}\nnormalized: {}\ninvariant: {}\n",
            r.input,
            r.rep,
            r.ribbon,
            r.components,
            r.writhe,
            r.unnormalized,
            r.normalized,
            r.invariant()
        ),
        Format::Json => {
            let v = json!({
                "input": r.input,
                "rep": r.rep,
                "ribbon": r.ribbon,
                "components": r.components,
                "writhe": r.writhe,
                "normalize": r.normalize,
                "unnormalized": r.unnormalized.to_json(),
                "normalized": r.normalized.to_json(),
                "invariant": r.invariant().to_json(),
            });
            let mut s = serde_json::to_string_pretty(&v).expect("serializable");
            s.push('\n');
            s
        }
    }
}

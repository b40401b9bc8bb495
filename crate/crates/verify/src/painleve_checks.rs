//! Verification of the q-Painleve coefficient dynamics: raw recurrences,
//! constant-form equations, monitor step laws, and constancy of the
//! conserved quantities.

use model_zoo::{
    conserved_quantities, monitor_laws, painleve_recurrence, painleve_rhs, CoeffData,
    IdentityCheck, PainleveKind, ZooError,
};

use crate::report::VerificationReport;

fn families(kind: PainleveKind) -> Vec<&'static str> {
    match kind {
        PainleveKind::QPI | PainleveKind::QPII => vec![""],
        PainleveKind::QPIII => vec!["y", "z"],
        PainleveKind::QPVI => vec!["y", "z", "Y", "Z"],
    }
}

/// Records a batch of identity instances; a missing label ends the scan
/// (returns false), a degenerate value is skipped with a warning.
fn tally(report: &mut VerificationReport, res: Result<Vec<IdentityCheck>, ZooError>) -> bool {
    match res {
        Ok(checks) => {
            for c in &checks {
                report.record_identity(c);
            }
            true
        }
        Err(ZooError::MissingLabel(_)) => {
            report.skip();
            false
        }
        Err(e) => {
            report.warn(e.to_string());
            report.skip();
            true
        }
    }
}

/// Runs all four check families over a coefficient data set. `prefix` names
/// the data source in the reports (model name or derived sequence).
pub fn check_painleve(kind: PainleveKind, d: &CoeffData, prefix: &str) -> Vec<VerificationReport> {
    let len = d.contiguous_len(&families(kind));

    let mut rec = VerificationReport::new(format!("{prefix}: raw recurrence"));
    for n in 0..len {
        if !tally(&mut rec, painleve_recurrence(kind, d, n)) {
            break;
        }
    }

    let mut laws = VerificationReport::new(format!("{prefix}: monitor laws"));
    for n in 0..len {
        if !tally(&mut laws, monitor_laws(kind, d, n)) {
            break;
        }
    }

    let mut form = VerificationReport::new(format!("{prefix}: constant-form equation"));
    for n in 1..len {
        if !tally(&mut form, painleve_rhs(kind, d, n, 0)) {
            break;
        }
    }

    let mut cons = VerificationReport::new(format!("{prefix}: conserved quantities"));
    match conserved_quantities(kind, d, 0) {
        Ok(base) => {
            for n in 1..len {
                match conserved_quantities(kind, d, n) {
                    Ok(c) => {
                        for (key, v) in &c {
                            cons.record(format!("{key} at n={n}"), v, &base[key]);
                        }
                    }
                    Err(ZooError::MissingLabel(_)) => {
                        cons.skip();
                        break;
                    }
                    Err(e) => {
                        cons.warn(e.to_string());
                        cons.skip();
                    }
                }
            }
        }
        Err(e) => {
            cons.warn(format!("base window unavailable: {e}"));
        }
    }

    vec![rec.finish(), laws.finish(), form.finish(), cons.finish()]
}

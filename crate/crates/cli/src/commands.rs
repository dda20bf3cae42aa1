use std::env;

use ditlab::classical::{self, AveragedForm, EntropyProfile, JointDist, ProbDist};
use ditlab::density::{self, ClassicalDensity, StateVector, DENSITY_TOLERANCE};
use ditlab::logic::{self, SearchConfig, TautologyStatus, DEFAULT_WORK_LIMIT};
use ditlab::quantum::{self, Observable, HAMMING_TOLERANCE, ROUTE_TOLERANCE};
use ditlab::weight::FLOAT_TOLERANCE;
use ditlab::{Partition, Universe, Weight};
use num_rational::BigRational;
use serde_json::{json, Map, Value};

use crate::input::{self, Dist, Joint};
use crate::report::{matrix_json, Report};
use crate::{CliError, Demo, DistanceArgs, EntropyArgs, MeasureArgs, TautologyArgs};

pub const WORK_LIMIT_VAR: &str = "DITLAB_WORK_LIMIT";

fn profile_quantities<T: Weight>(r: &mut Report, prefix: &str, prof: &EntropyProfile<T>) {
    for (name, value) in prof.entries() {
        r.weight(&format!("{prefix}{name}"), value);
    }
}

fn profile_agreement<T: Weight>(r: &mut Report, prefix: &str, a: &EntropyProfile<T>, b: &EntropyProfile<T>) {
    for ((name, x), (_, y)) in a.entries().into_iter().zip(b.entries()) {
        r.weight_identity(&format!("{prefix}{name}"), x, y);
    }
}

fn venn_checks<T: Weight>(r: &mut Report, prefix: &str, prof: &EntropyProfile<T>) {
    let split = prof.h_pi_given_sigma.clone() + prof.mutual.clone() + prof.h_sigma_given_pi.clone();
    r.weight_identity(&format!("{prefix}joint_split"), &prof.h_joint, &split);
    let incl = prof.h_pi.clone() + prof.h_sigma.clone() - prof.h_joint.clone();
    r.weight_identity(&format!("{prefix}inclusion_exclusion"), &prof.mutual, &incl);
}

fn entropy_single<T: Weight>(r: &mut Report, pi: &Partition, p: &ProbDist<T>, shannon: bool) -> Result<(), CliError> {
    let h = classical::logical_entropy(pi, p)?;
    r.weight("h_pi", &h);
    r.weight_identity("ditset_h_pi", &h, &classical::logical_entropy_by_dits(pi, p)?);
    r.weight_identity("density_h_pi", &h, &ClassicalDensity::from_partition(pi, p)?.logical_entropy());
    if shannon {
        let big_h = classical::shannon_entropy(pi, p)?;
        r.float("shannon_h_pi", big_h);
        let form = AveragedForm::simple(pi, p)?;
        r.weight_identity("dit_count_h_pi", &form.dit_value(), &h);
        r.identity("bit_count_h_pi", (form.bit_value() - big_h).abs(), FLOAT_TOLERANCE);
    }
    Ok(())
}

fn entropy_pair<T: Weight>(
    r: &mut Report,
    pi: &Partition,
    sigma: &Partition,
    p: &ProbDist<T>,
    shannon: bool,
) -> Result<(), CliError> {
    let prof = classical::entropy_profile(pi, sigma, p)?;
    let dits = classical::entropy_profile_by_dits(pi, sigma, p)?;
    profile_quantities(r, "", &prof);
    profile_agreement(r, "ditset_", &prof, &dits);
    venn_checks(r, "ditset_", &dits);

    let forms = classical::hamming_forms(pi, sigma, p)?;
    r.weight("hamming", &forms.conditional_sum);
    r.weight_identity("hamming_joint_form", &forms.conditional_sum, &forms.joint_form);
    r.weight_identity("hamming_density_form", &forms.conditional_sum, &forms.density_form);
    r.weight("cross_entropy", &classical::cross_entropy_partitions(pi, sigma, p)?);

    if shannon {
        let sp = classical::shannon_profile(pi, sigma, p)?;
        profile_quantities(r, "shannon_", &sp);
        let cond = AveragedForm::conditional(pi, sigma, p)?;
        r.identity("bit_count_h_pi_given_sigma", (cond.bit_value() - sp.h_pi_given_sigma).abs(), FLOAT_TOLERANCE);
        r.weight_identity("dit_count_h_pi_given_sigma", &cond.dit_value(), &prof.h_pi_given_sigma);
        let mutual = AveragedForm::mutual(pi, sigma, p)?;
        r.identity("bit_count_mutual", (mutual.bit_value() - sp.mutual).abs(), FLOAT_TOLERANCE);
        r.weight_identity("dit_count_mutual", &mutual.dit_value(), &prof.mutual);
    }
    Ok(())
}

fn entropy_twoset<T: Weight>(r: &mut Report, pi: &Partition, sigma: &Partition, joint: &JointDist<T>) -> Result<(), CliError> {
    let brute = classical::twoset_profile(pi, sigma, joint)?;
    let closed = classical::twoset_profile_closed(pi, sigma, joint)?;
    profile_quantities(r, "", &brute);
    profile_agreement(r, "closed_", &brute, &closed);
    venn_checks(r, "", &brute);
    Ok(())
}

pub fn entropy(args: &EntropyArgs) -> Result<Report, CliError> {
    let mut r = Report::new("entropy");
    let pi_doc = input::load(&args.pi)?;
    r.input("pi", &pi_doc);
    let pi = input::partition(&pi_doc.doc)?;
    let sigma = match &args.sigma {
        Some(path) => {
            let doc = input::load(path)?;
            r.input("sigma", &doc);
            Some(input::partition(&doc.doc)?)
        }
        None => None,
    };

    if let Some(path) = &args.joint {
        let doc = input::load(path)?;
        r.input("joint", &doc);
        let Some(sigma) = sigma else {
            return Err(CliError::Schema("two-set mode needs --sigma".into()));
        };
        match input::joint(&doc.doc)? {
            Joint::Exact(j) => {
                r.mode(true);
                entropy_twoset(&mut r, &pi, &sigma, &j)?;
            }
            Joint::Float(j) => {
                r.mode(false);
                entropy_twoset(&mut r, &pi, &sigma, &j)?;
            }
        }
        return Ok(r);
    }

    let path = args.p.as_ref().ok_or_else(|| CliError::Schema("--p is required".into()))?;
    let doc = input::load(path)?;
    r.input("p", &doc);
    let dist = input::dist(&doc.doc)?;
    match (&sigma, dist) {
        (None, Dist::Exact(p)) => {
            r.mode(true);
            entropy_single(&mut r, &pi, &p, args.shannon)?;
        }
        (None, Dist::Float(p)) => {
            r.mode(false);
            entropy_single(&mut r, &pi, &p, args.shannon)?;
        }
        (Some(s), Dist::Exact(p)) => {
            r.mode(true);
            entropy_pair(&mut r, &pi, s, &p, args.shannon)?;
        }
        (Some(s), Dist::Float(p)) => {
            r.mode(false);
            entropy_pair(&mut r, &pi, s, &p, args.shannon)?;
        }
    }
    Ok(r)
}

fn work_limit() -> Result<u128, CliError> {
    match env::var(WORK_LIMIT_VAR) {
        Ok(v) => v.trim().parse().map_err(|_| CliError::Schema(format!("{WORK_LIMIT_VAR} is not an integer: {v:?}"))),
        Err(_) => Ok(DEFAULT_WORK_LIMIT),
    }
}

fn partition_json(p: &Partition) -> Value {
    json!(p.blocks())
}

pub fn tautology(args: &TautologyArgs) -> Result<Report, CliError> {
    let mut r = Report::new("tautology");
    let text = match (&args.formula, &args.expr) {
        (Some(path), _) => {
            let doc = input::load(path)?;
            r.input("formula", &doc);
            input::formula_text(&doc.doc)?
        }
        (None, Some(expr)) => {
            r.input_digest("expr", input::digest(expr.as_bytes()));
            expr.clone()
        }
        (None, None) => return Err(CliError::Schema("give --formula or --expr".into())),
    };
    let formula = logic::parse(&text)?;
    let config = SearchConfig { work_limit: work_limit()?, ..SearchConfig::default() };
    let verdict = logic::check_tautology_with(&formula, args.max_n, &config)?;

    r.extra("formula", json!(formula.to_string()));
    r.extra(
        "verdict",
        json!(match verdict.status {
            TautologyStatus::TautologyUpToBound => "TautologyUpToBound",
            TautologyStatus::Counterexample => "Counterexample",
        }),
    );
    r.float("bound", verdict.bound as f64);
    r.float("evaluations", verdict.evaluations as f64);
    if let Some(w) = &verdict.witness {
        let value = logic::eval(&formula, &w.assignment, w.universe)?;
        r.identity("witness_not_top", if value.is_top() { 1.0 } else { 0.0 }, 0.0);
        let assignment: Map<String, Value> = w.assignment.iter().map(|(k, v)| (k.clone(), partition_json(v))).collect();
        r.extra(
            "witness",
            json!({ "universe": w.universe.size(), "assignment": assignment, "value": partition_json(&value) }),
        );
    }
    Ok(r)
}

fn die_parity(r: &mut Report, emit_density: bool) -> Result<(), CliError> {
    r.input_digest("demo", input::digest(b"die-parity"));
    r.mode(true);
    let u = Universe::new(6)?;
    let parity = Partition::from_labels(&[0, 1, 0, 1, 0, 1])?;
    let p: ProbDist<BigRational> = ProbDist::uniform(6)?;
    let before = ClassicalDensity::from_partition(&Partition::bottom(u), &p)?;
    let after = before.luders_blocks(&parity)?;
    let h = classical::logical_entropy(&parity, &p)?;
    let increase = after.logical_entropy() - before.logical_entropy();
    let sumsq = before.decohered_sumsq(&after)?;
    r.weight("h_observable", &h);
    r.weight("h_before", &before.logical_entropy());
    r.weight("h_after", &after.logical_entropy());
    r.weight("entropy_increase", &increase);
    r.weight("decohered_sumsq", &sumsq);
    r.weight_identity("fundamental_theorem", &increase, &sumsq);
    r.weight_identity("h_after_equals_h_observable", &after.logical_entropy(), &h);

    let f = Observable::diagonal((0..6).map(|j| (j % 2) as f64).collect())?;
    let quantum = quantum::h_observable_state(&f, &StateVector::uniform(6)?)?;
    r.identity("complex_route", (quantum.value - h.as_f64()).abs(), ROUTE_TOLERANCE);
    if emit_density {
        r.extra("rho_after", matrix_json(after.to_density_matrix().matrix()));
    }
    Ok(())
}

pub fn measure(args: &MeasureArgs) -> Result<Report, CliError> {
    let mut r = Report::new("measure");
    if let Some(Demo::DieParity) = args.demo {
        die_parity(&mut r, args.emit_density)?;
        return Ok(r);
    }
    let (Some(state_path), Some(obs_path)) = (&args.state, &args.observable) else {
        return Err(CliError::Schema("give --state and --observable, or --demo".into()));
    };
    let state_doc = input::load(state_path)?;
    let obs_doc = input::load(obs_path)?;
    r.input("state", &state_doc);
    r.input("observable", &obs_doc);
    r.mode(false);
    let psi = input::state(&state_doc.doc)?;
    let f = input::observable(&obs_doc.doc)?;

    let h = quantum::h_observable_state(&f, &psi)?;
    r.float("h_observable", h.value);
    r.float("h_via_qudits", h.via_qudits);
    r.float("h_via_partition", h.via_partition);
    r.float("h_via_luders", h.via_luders);
    let spread = (h.via_qudits - h.via_partition).abs().max((h.via_qudits - h.via_luders).abs());
    r.identity("observable_entropy_routes", spread, ROUTE_TOLERANCE);

    let check = quantum::quantum_fundamental_check(&f, &psi)?;
    r.float("entropy_increase", check.entropy_increase);
    r.float("decohered_sumsq", check.decohered_sumsq);
    r.identity("fundamental_theorem", check.residual(), DENSITY_TOLERANCE);
    let after = quantum::measure(&f, &psi)?;
    r.float("von_neumann_after", density::von_neumann(&after));
    if args.emit_density {
        r.extra("rho_after", matrix_json(after.matrix()));
    }
    Ok(r)
}

pub fn distance(args: &DistanceArgs) -> Result<Report, CliError> {
    let mut r = Report::new("distance");
    let rho_doc = input::load(&args.rho)?;
    let tau_doc = input::load(&args.tau)?;
    r.input("rho", &rho_doc);
    r.input("tau", &tau_doc);
    r.mode(false);
    let rho = input::density(&rho_doc.doc)?;
    let tau = input::density(&tau_doc.doc)?;

    let cross = quantum::quantum_cross_entropy(&rho, &tau)?;
    let d = quantum::quantum_hamming(&rho, &tau)?;
    let hs = quantum::hilbert_schmidt(&rho, &tau)?;
    r.float("h_rho", rho.logical_entropy());
    r.float("h_tau", tau.logical_entropy());
    r.float("cross_entropy", cross);
    r.float("hamming", d);
    r.float("hilbert_schmidt", hs);
    r.identity("hamming_equals_hilbert_schmidt", (d - hs).abs(), HAMMING_TOLERANCE);
    let overlap = quantum::spectral_overlap(&rho, &tau)?;
    r.identity("cross_entropy_overlap", ((1.0 - cross) - overlap).abs(), ROUTE_TOLERANCE);
    Ok(r)
}

use std::io::Read;
use std::path::Path;
use std::time::Instant;

use num_bigint::BigUint;
use wronsk_core::bounds::{analyze_family, bound_dense, bound_sparse};
use wronsk_core::pit::{certificate_check, pit_blackbox, pit_whitebox};
use wronsk_core::realroots::isolate_roots;
use wronsk_core::report::{Decimal, Entry, Report, RootReport, VerdictReport};
use wronsk_core::sps::{optimal_instance, random_descartes, random_instance, ForcedZero};
use wronsk_core::wronskian::{factored_wronskian, wronskian_direct};
use wronsk_core::{Error, InstanceParams, Model, SpsInstance};

use crate::{BoundMethod, Context, Failure, GenKind, ModelArg, Output, PitMode, ZeroArg};

const ZERO_INSTANCE: &str = "instance is identically zero";

/// Wall-clock stage timer feeding `timing_ms`.
struct Stopwatch<'a> {
    report: &'a mut Report,
}

impl Stopwatch<'_> {
    fn time<T>(&mut self, stage: &str, f: impl FnOnce() -> T) -> T {
        let start = Instant::now();
        let out = f();
        let ms = start.elapsed().as_secs_f64() * 1000.0;
        self.report
            .timing_ms
            .insert(stage.into(), Decimal(format!("{ms:.3}")));
        out
    }
}

pub fn read_instance(path: &Path) -> Result<SpsInstance, Failure> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::Input(format!("stdin: {e}")))?;
        s
    } else {
        std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?
    };
    SpsInstance::parse(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn new_report(command: &str, inst: Option<&SpsInstance>) -> Report {
    Report {
        command: command.into(),
        instance: inst.map(SpsInstance::serialize),
        ..Report::default()
    }
}

fn empty_roots() -> RootReport {
    let skipped = || Entry::missing("not requested");
    RootReport {
        exact_count: skipped(),
        a_priori_sparse: skipped(),
        a_priori_dense: skipped(),
        certified_upsilon: skipped(),
        certified_main3: skipped(),
        pit_blackbox: None,
        pit_whitebox: None,
    }
}

fn shape_line(inst: &SpsInstance) -> String {
    format!("k = {}, m = {}, t = {}, d = {}", inst.k(), inst.m(), inst.t(), inst.d())
}

pub fn bound(ctx: &Context, file: &Path, method: BoundMethod, exact: bool) -> Result<Output, Failure> {
    let inst = read_instance(file)?;
    let mut report = new_report("bound", Some(&inst));
    let mut roots = empty_roots();
    let (k, m) = (inst.k() as u64, inst.m() as u64);
    let wants = |x: BoundMethod| method == x || method == BoundMethod::All;
    let mut sw = Stopwatch { report: &mut report };

    if wants(BoundMethod::Sparse) {
        roots.a_priori_sparse = Entry::value(sw.time("sparse", || bound_sparse(k, m, inst.t().max(1) as u64))?);
    }
    if wants(BoundMethod::Dense) {
        roots.a_priori_dense = Entry::value(sw.time("dense", || bound_dense(k, m, &inst.d())));
    }
    if wants(BoundMethod::Upsilon) || wants(BoundMethod::Main3) {
        let analysis = sw.time("certified", || analyze_family(&inst, &ctx.limits))?;
        let entry = |f: &dyn Fn() -> usize| match &analysis {
            Some(_) => Entry::value(f()),
            None => Entry::missing(ZERO_INSTANCE),
        };
        if wants(BoundMethod::Upsilon) {
            roots.certified_upsilon = entry(&|| analysis.as_ref().unwrap().upsilon_bound());
        }
        if wants(BoundMethod::Main3) {
            roots.certified_main3 = entry(&|| analysis.as_ref().unwrap().main3_bound());
        }
        if let Some(a) = &analysis {
            report_values(&mut report, a.family_size(), a.upsilon.size);
        }
    }
    let mut sw = Stopwatch { report: &mut report };
    if exact {
        let expanded = sw.time("expand", || inst.expand(&ctx.limits.budget))?;
        roots.exact_count = if expanded.is_zero() {
            Entry::missing(ZERO_INSTANCE)
        } else {
            Entry::value(sw.time("exact", || isolate_roots(&expanded))?.len())
        };
    }

    let mut lines = vec![shape_line(&inst)];
    for (name, entry) in [
        ("a-priori sparse", &roots.a_priori_sparse),
        ("a-priori dense", &roots.a_priori_dense),
        ("certified upsilon", &roots.certified_upsilon),
        ("certified main3", &roots.certified_main3),
        ("exact count", &roots.exact_count),
    ] {
        if !matches!(entry, Entry::NotApplicable(r) if r == "not requested") {
            lines.push(format!("{name}: {entry}"));
        }
    }
    let violations = roots.violations();
    let failure = (!violations.is_empty()).then(|| Failure::Soundness(violations.join("; ")));
    if exact && failure.is_none() {
        lines.push("all requested bounds hold".into());
    }
    report.roots = Some(roots);
    Ok(Output { report, lines, failure })
}

fn report_values(report: &mut Report, family_size: usize, upsilon: usize) {
    report.values.insert("family_size".into(), family_size.to_string());
    report.values.insert("upsilon_size".into(), upsilon.to_string());
}

pub fn pit(ctx: &Context, file: &Path, mode: PitMode, model: ModelArg) -> Result<Output, Failure> {
    let inst = read_instance(file)?;
    let mut report = new_report("pit", Some(&inst));
    let mut roots = empty_roots();
    let mut lines = vec![shape_line(&inst)];
    let mut failure = None;
    let mut sw = Stopwatch { report: &mut report };
    match mode {
        PitMode::Blackbox => {
            let model = match model {
                ModelArg::Sparse => Model::Sparse,
                ModelArg::Dense => Model::Dense,
            };
            let v = sw.time("blackbox", || pit_blackbox(&inst, model, &ctx.limits))?;
            let bound = v.bound.clone().unwrap_or_default();
            lines.push(format!("verdict: {}", if v.is_zero { "zero" } else { "nonzero" }));
            if let Some(w) = &v.witness {
                lines.push(format!("witness: x = {w}"));
            }
            lines.push(format!("queries: {} (bound {model} = {bound})", v.queries));
            if BigUint::from(v.queries) > &bound + 1u32 {
                failure = Some(Failure::Soundness(format!(
                    "{} queries exceed 1 + bound = {}",
                    v.queries,
                    &bound + 1u32
                )));
            }
            roots.pit_blackbox = Some(VerdictReport::new(&v, None));
        }
        PitMode::Whitebox => {
            let v = sw.time("whitebox", || pit_whitebox(&inst, &ctx.limits))?;
            let ok = sw.time("certificate", || certificate_check(&inst, &v, &ctx.limits.budget))?;
            lines.push(format!("verdict: {}", if v.is_zero { "zero" } else { "nonzero" }));
            if let Some(cert) = &v.certificate {
                lines.push(format!(
                    "certificate: {} distinct rows, basis {:?}, {} dependencies",
                    cert.rows.len(),
                    cert.basis.iter().map(|b| b + 1).collect::<Vec<_>>(),
                    cert.dependencies.len()
                ));
                for dep in &cert.dependencies {
                    let combo: Vec<String> = dep.combination.iter().map(ToString::to_string).collect();
                    lines.push(format!("  row {} = [{}] . basis", dep.row + 1, combo.join(", ")));
                }
            }
            lines.push(format!("certificate verified: {ok}"));
            if !ok {
                failure = Some(Failure::Soundness("whitebox certificate failed verification".into()));
            }
            roots.pit_whitebox = Some(VerdictReport::new(&v, Some(ok)));
        }
    }
    report.roots = Some(roots);
    Ok(Output { report, lines, failure })
}

pub fn roots(ctx: &Context, file: &Path) -> Result<Output, Failure> {
    let inst = read_instance(file)?;
    let mut report = new_report("roots", Some(&inst));
    let mut roots = empty_roots();
    let mut lines = vec![shape_line(&inst)];
    let mut sw = Stopwatch { report: &mut report };
    let expanded = sw.time("expand", || inst.expand(&ctx.limits.budget))?;
    if expanded.is_zero() {
        roots.exact_count = Entry::missing(ZERO_INSTANCE);
        lines.push(format!("exact count: {}", roots.exact_count));
    } else {
        let intervals = sw.time("isolate", || isolate_roots(&expanded))?;
        roots.exact_count = Entry::value(intervals.len());
        lines.push(format!("exact count: {}", intervals.len()));
        for (i, iv) in intervals.iter().enumerate() {
            lines.push(format!("  root {}: {iv}", i + 1));
            report.values.insert(format!("root_{}", i + 1), iv.to_string());
        }
    }
    report.values.insert("degree".into(), expanded.degree_u64().map_or_else(|| "-inf".to_string(), |d| d.to_string()));
    report.values.insert("sparsity".into(), expanded.sparsity().to_string());
    report.roots = Some(roots);
    Ok(Output {
        report,
        lines,
        failure: None,
    })
}

pub fn wronskian(ctx: &Context, file: &Path, prefix: Option<usize>) -> Result<Output, Failure> {
    let inst = read_instance(file)?;
    let s = prefix.unwrap_or(inst.k());
    if s == 0 || s > inst.k() {
        return Err(Failure::Input(format!("prefix {s} outside 1..={}", inst.k())));
    }
    // degree of W(g_1..g_s) with every exponent shifted by s
    let shifted_degree: BigUint = (0..s).map(|i| inst.term_degree(i)).sum::<BigUint>()
        + BigUint::from(s * s) * inst.bases().iter().map(|f| f.degree_u64().unwrap_or(0)).sum::<u64>();
    if shifted_degree > BigUint::from(ctx.limits.budget.max_degree) {
        return Err(Error::ExpansionTooLarge(format!(
            "shifted family has degree up to {shifted_degree}, budget {}",
            ctx.limits.budget.max_degree
        ))
        .into());
    }
    let mut report = new_report("wronskian", Some(&inst));
    let mut sw = Stopwatch { report: &mut report };
    let fw = sw.time("factored", || factored_wronskian(inst.bases(), inst.rows(), s))?;
    let factored = fw.reconstruct(inst.bases())?;
    let direct = sw.time("direct", || -> Result<_, Error> {
        let shifted = inst.rows()[..s]
            .iter()
            .map(|r| r.expand(inst.bases(), s as u64))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(wronskian_direct(&shifted))
    })?;
    let agrees = factored == direct;

    let powers: Vec<String> = fw
        .power_exponents
        .iter()
        .enumerate()
        .map(|(j, e)| format!("f{}^{e}", j + 1))
        .collect();
    let lines = vec![
        shape_line(&inst),
        format!("prefix {s}, shift {}", fw.shift),
        format!("W = {} * det T", powers.join(" * ")),
        format!("det T = {}", fw.det_t),
        format!("identity check against the direct Wronskian: {}", if agrees { "ok" } else { "MISMATCH" }),
    ];
    let v = &mut report.values;
    v.insert("prefix".into(), s.to_string());
    v.insert("shift".into(), fw.shift.to_string());
    v.insert("power_exponents".into(), fw.power_exponents.iter().map(ToString::to_string).collect::<Vec<_>>().join(" "));
    v.insert("det_t".into(), fw.det_t.to_string());
    v.insert("identity_check".into(), agrees.to_string());
    let failure = (!agrees).then(|| Failure::Soundness("factored Wronskian differs from the direct one".into()));
    Ok(Output { report, lines, failure })
}

pub struct GenParams {
    pub k: usize,
    pub m: usize,
    pub t: usize,
    pub d: u64,
    pub alpha_max: u64,
    pub coeff_max: u64,
    pub p: usize,
    pub forced_zero: ZeroArg,
}

pub fn gen(ctx: &Context, kind: GenKind, params: &GenParams, out: Option<&Path>) -> Result<Output, Failure> {
    let mut report = new_report("gen", None);
    let mut header = Vec::new();
    let inst = match kind {
        GenKind::Random => random_instance(&InstanceParams {
            k: params.k,
            m: params.m,
            t: params.t,
            d: params.d,
            alpha_max: params.alpha_max,
            coeff_max: params.coeff_max.max(1),
            seed: ctx.seed,
            forced_zero: match params.forced_zero {
                ZeroArg::Off => ForcedZero::Off,
                ZeroArg::Duplicate => ForcedZero::NegatedDuplicate,
                ZeroArg::Hidden => ForcedZero::HiddenRelation,
            },
        }),
        GenKind::Optimal => {
            let opt = optimal_instance(params.k, params.p)?;
            header.push(format!("# optimal family, k = {}, p = {}", opt.k, opt.p));
            header.push(format!("# base roots: {}", opt.base_roots));
            header.push(format!("# predicted distinct real roots: {}", opt.predicted_roots));
            header.push(format!("# predicted upsilon size: {}", opt.predicted_upsilon));
            report.values.insert("base_roots".into(), opt.base_roots.to_string());
            report.values.insert("predicted_roots".into(), opt.predicted_roots.to_string());
            report.values.insert("predicted_upsilon".into(), opt.predicted_upsilon.to_string());
            opt.instance
        }
        GenKind::Descartes => random_descartes(params.k, params.alpha_max.max(params.k as u64), params.coeff_max.max(1), ctx.seed),
    };
    let mut text: String = header.iter().map(|h| format!("{h}\n")).collect();
    text.push_str(&inst.serialize());
    report.instance = Some(inst.serialize());
    let lines = match out {
        Some(path) => {
            std::fs::write(path, &text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
            vec![format!("wrote {} ({})", path.display(), shape_line(&inst))]
        }
        None => vec![text.trim_end().to_string()],
    };
    Ok(Output {
        report,
        lines,
        failure: None,
    })
}

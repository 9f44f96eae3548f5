use std::fs::File;
use std::io::{self, BufWriter, Write};

use agw_core::additive::{
    check_translator, invert_add_general, invert_g0_form, invert_linearized_form,
    invert_translator_form, G0Form, LinearizedForm, TranslatorForm,
};
use agw_core::branch::{
    assemble_branch_inverse, check_two_branch_pp, enumerate_two_branch, invert_two_branch,
    is_involution, Branch, BranchSystem, TwoBranchForm,
};
use agw_core::diagram::{commute_violation, induced_h, AgwSquare, Induced};
use agw_core::field::{euler_phi, gcd, CyclotomicSys};
use agw_core::linearized::Tower;
use agw_core::mult::{
    check_index_pp, invert_hybrid_xh, invert_index_ab, invert_index_b, invert_mult_general,
    invert_mult_general_full, GeneralMultForm, IndexForm,
};
use agw_core::oracle::{brute_inverse, is_permutation, oracle_inverse_poly};
use agw_core::parse::{parse_element, parse_field_spec, parse_linearized, parse_poly};
use agw_core::poly::lagrange_interpolate;
use agw_core::{Error, FieldCtx, PointMap, Poly};
use serde_json::{json, Value};

use crate::cli::{
    CheckPpArgs, Cli, Command, Domain, Emit, EnumerateArgs, FieldInfoArgs, Form, InvertArgs,
    Recipe, VerifyDiagramArgs,
};

/// Wrapper that fixes the exit-code contract: usage-class errors exit 2,
/// failed checks and hypothesis violations exit 1.
#[derive(Debug)]
pub struct RunError {
    pub error: Error,
}

impl RunError {
    pub fn exit_code(&self) -> u8 {
        match self.error {
            Error::Parse { .. } | Error::InvalidField(_) | Error::BadIndex => 2,
            _ => 1,
        }
    }
}

impl From<Error> for RunError {
    fn from(error: Error) -> RunError {
        RunError { error }
    }
}

pub fn error_json(e: &RunError) -> String {
    json!({
        "error": variant_name(&e.error),
        "message": e.error.to_string(),
    })
    .to_string()
}

fn variant_name(e: &Error) -> &'static str {
    match e {
        Error::ZeroInverse => "ZeroInverse",
        Error::Undefined => "Undefined",
        Error::ZeroArgument => "ZeroArgument",
        Error::InvalidField(_) => "InvalidField",
        Error::Parse { .. } => "ParseError",
        Error::DuplicateNodes => "DuplicateNodes",
        Error::DomainNotTotal => "DomainNotTotal",
        Error::InvalidPointMap(_) => "InvalidPointMap",
        Error::NotPermutation => "NotPermutation",
        Error::NotSurjective => "NotSurjective",
        Error::OracleTooLarge { .. } => "OracleTooLarge",
        Error::SquareNotCommuting { .. } => "SquareNotCommuting",
        Error::NotBijective => "NotBijective",
        Error::NotPP => "NotPP",
        Error::BadIndex => "BadIndex",
        Error::GcdHypothesisFailed => "GcdHypothesisFailed",
        Error::DivisionByZero => "DivisionByZero",
        Error::HypothesisFailed(_) => "HypothesisFailed",
        Error::Singular => "Singular",
        Error::CoefficientsNotInBaseField => "CoefficientsNotInBaseField",
        Error::BranchesNotDisjoint => "BranchesNotDisjoint",
        Error::NotInjectiveOnBranch => "NotInjectiveOnBranch",
        Error::EvenCharacteristic => "EvenCharacteristic",
        Error::IndexOutOfRange => "IndexOutOfRange",
    }
}

enum Out {
    Stdout(io::Stdout),
    File(BufWriter<File>),
}

impl Out {
    fn open(path: &Option<String>) -> Result<Out, RunError> {
        match path {
            None => Ok(Out::Stdout(io::stdout())),
            Some(p) => {
                let f = File::create(p).map_err(|e| {
                    RunError::from(Error::InvalidField(format!("cannot open {p}: {e}")))
                })?;
                Ok(Out::File(BufWriter::new(f)))
            }
        }
    }

    fn line(&mut self, s: &str) {
        match self {
            Out::Stdout(o) => writeln!(o, "{s}").expect("stdout"),
            Out::File(f) => writeln!(f, "{s}").expect("file write"),
        }
    }
}

fn elem_json(ctx: &FieldCtx, e: agw_core::FieldElem) -> Value {
    Value::Array(
        ctx.coeffs(e)
            .into_iter()
            .map(|c| Value::from(c))
            .collect(),
    )
}

fn poly_json(ctx: &FieldCtx, p: &Poly) -> Value {
    Value::Array(p.coeffs().iter().map(|&c| elem_json(ctx, c)).collect())
}

fn field_header(ctx: &FieldCtx) -> Value {
    json!({
        "q": ctx.q(),
        "p": ctx.p(),
        "n": ctx.n(),
        "modulus": ctx.modulus(),
    })
}

fn merge(base: Value, extra: Value) -> Value {
    let mut m = base.as_object().cloned().unwrap_or_default();
    if let Some(e) = extra.as_object() {
        for (k, v) in e {
            m.insert(k.clone(), v.clone());
        }
    }
    Value::Object(m)
}

pub fn run(cli: Cli) -> Result<bool, RunError> {
    match cli.command {
        Command::FieldInfo(args) => field_info(args),
        Command::CheckPp(args) => check_pp(args),
        Command::Invert(args) => invert(args),
        Command::VerifyDiagram(args) => verify_diagram(args),
        Command::EnumerateTwoBranch(args) => enumerate(args),
    }
}

fn field_info(args: FieldInfoArgs) -> Result<bool, RunError> {
    let ctx = parse_field_spec(&args.q)?;
    let rec = merge(
        field_header(&ctx),
        json!({
            "record": "field-info",
            "gamma": elem_json(&ctx, ctx.gamma()),
            "gamma_display": ctx.elem_string(ctx.gamma()),
            "multiplicative_order": ctx.q() - 1,
        }),
    );
    println!("{rec}");
    Ok(true)
}

fn check_pp(args: CheckPpArgs) -> Result<bool, RunError> {
    let ctx = parse_field_spec(&args.q)?;
    let f = parse_poly(&ctx, &args.f)?;
    let pp = is_permutation(&ctx, &f);
    let rec = merge(
        field_header(&ctx),
        json!({
            "record": "check-pp",
            "f": f.display(&ctx),
            "pp": pp,
        }),
    );
    println!("{rec}");
    Ok(true)
}

/// Shared tail for invert records: inverse rendering plus oracle match.
fn inverse_fields(ctx: &FieldCtx, inverse: &Poly, oracle: &Poly) -> (Value, bool) {
    let matches = inverse == oracle;
    (
        json!({
            "inverse": inverse.display(ctx),
            "inverse_coeffs": poly_json(ctx, inverse),
            "oracle_match": matches,
        }),
        matches,
    )
}

fn invert(args: InvertArgs) -> Result<bool, RunError> {
    let ctx = parse_field_spec(&args.q)?;
    let mut out = Out::open(&args.out)?;
    let mut all_ok = true;

    let need = |opt: &Option<String>, name: &str| -> Result<String, RunError> {
        opt.clone().ok_or_else(|| {
            RunError::from(Error::Parse {
                pos: 0,
                msg: format!("--{name} is required for --form {:?}", args.form),
            })
        })
    };

    match args.form {
        Form::Index => {
            let r = args.r.ok_or_else(|| {
                RunError::from(Error::Parse {
                    pos: 0,
                    msg: "--r is required for --form index".into(),
                })
            })?;
            let s = args.s.ok_or_else(|| {
                RunError::from(Error::Parse {
                    pos: 0,
                    msg: "--s is required for --form index".into(),
                })
            })?;
            let h = parse_poly(&ctx, &need(&args.h, "h")?)?;
            let form = IndexForm::new(&ctx, r, s, h.clone())?;
            let base = merge(
                field_header(&ctx),
                json!({
                    "record": "invert",
                    "form": "index",
                    "r": r,
                    "s": s,
                    "h": h.display(&ctx),
                    "f": form.f_poly(&ctx).display(&ctx),
                }),
            );
            if !check_index_pp(&ctx, &form) {
                out.line(
                    &merge(base, json!({"pp": false, "inverse": Value::Null, "oracle_match": Value::Null}))
                        .to_string(),
                );
                return Ok(true);
            }
            let oracle = oracle_inverse_poly(&ctx, &form.f_poly(&ctx))?;
            let run_b = matches!(args.recipe, Recipe::B | Recipe::Both);
            let run_ab = matches!(args.recipe, Recipe::Ab | Recipe::Both);
            if run_b {
                if gcd(r, ctx.q() - 1) == 1 {
                    let inv = invert_index_b(&ctx, &form)?;
                    let (fields, ok) = inverse_fields(&ctx, &inv, &oracle);
                    all_ok &= ok;
                    out.line(
                        &merge(merge(base.clone(), json!({"pp": true, "recipe": "b"})), fields)
                            .to_string(),
                    );
                } else if args.recipe == Recipe::B {
                    return Err(Error::GcdHypothesisFailed.into());
                }
            }
            if run_ab {
                let inv = invert_index_ab(&ctx, &form)?;
                let (fields, ok) = inverse_fields(&ctx, &inv.poly, &oracle);
                all_ok &= ok;
                out.line(
                    &merge(
                        merge(
                            base,
                            json!({"pp": true, "recipe": "ab", "a": inv.a, "b": inv.b}),
                        ),
                        fields,
                    )
                    .to_string(),
                );
            }
        }
        Form::GeneralMult => {
            let f1 = parse_poly(&ctx, &need(&args.f1, "f1")?)?;
            let h = parse_poly(&ctx, &need(&args.h, "h")?)?;
            let lambda_poly = parse_poly(&ctx, &need(&args.lambda, "lambda")?)?;
            let lb_poly = match &args.lambda_bar {
                Some(s) => parse_poly(&ctx, s)?,
                None => lambda_poly.clone(),
            };
            let nz: Vec<_> = ctx.nonzero_elements().collect();
            let lambda = PointMap::of_poly(&ctx, &lambda_poly, nz.clone());
            let lambda_bar = PointMap::of_poly(&ctx, &lb_poly, nz.clone());
            let base = merge(
                field_header(&ctx),
                json!({
                    "record": "invert",
                    "form": "general-mult",
                    "f1": f1.display(&ctx),
                    "h": h.display(&ctx),
                    "lambda": lambda_poly.display(&ctx),
                    "lambda_bar": lb_poly.display(&ctx),
                    "domain": match args.domain { Domain::Full => "full", Domain::Nonzero => "nonzero" },
                }),
            );
            let form = match GeneralMultForm::new(&ctx, f1.clone(), h.clone(), lambda, lambda_bar)
            {
                Ok(f) => f,
                Err(Error::NotPP) => {
                    out.line(
                        &merge(base, json!({"pp": false, "inverse": Value::Null, "oracle_match": Value::Null}))
                            .to_string(),
                    );
                    return Ok(true);
                }
                Err(e) => return Err(e.into()),
            };
            match args.domain {
                Domain::Nonzero => {
                    let inv = invert_mult_general(&ctx, &form)?;
                    let brute = brute_inverse(form.f_table())?;
                    let ok = form
                        .f_table()
                        .domain()
                        .iter()
                        .all(|&y| inv.eval(&ctx, y) == brute.apply(y));
                    all_ok &= ok;
                    out.line(
                        &merge(
                            merge(base, json!({"pp": true})),
                            json!({
                                "inverse": inv.display(&ctx),
                                "inverse_coeffs": poly_json(&ctx, &inv),
                                "oracle_match": ok,
                            }),
                        )
                        .to_string(),
                    );
                }
                Domain::Full => {
                    // zero handling per the remark: f must fix 0
                    let f_poly = f1
                        .mul(&ctx, &h.compose(&ctx, &lambda_poly))
                        .normalize(&ctx);
                    if f_poly.eval(&ctx, ctx.zero()).rank() != 0 {
                        return Err(Error::HypothesisFailed(
                            "full-domain inversion needs f(0) = 0".into(),
                        )
                        .into());
                    }
                    let inv = invert_mult_general_full(&ctx, &form)?;
                    let oracle = oracle_inverse_poly(&ctx, &f_poly)?;
                    let (fields, ok) = inverse_fields(&ctx, &inv, &oracle);
                    all_ok &= ok;
                    out.line(&merge(merge(base, json!({"pp": true})), fields).to_string());
                }
            }
        }
        Form::Hybrid => {
            let h = parse_poly(&ctx, &need(&args.h, "h")?)?;
            let k = parse_poly(&ctx, &need(&args.k, "k")?)?;
            let lambda_poly = parse_poly(&ctx, &need(&args.lambda, "lambda")?)?;
            let lambda = PointMap::of_poly(&ctx, &lambda_poly, ctx.elements().collect());
            let base = merge(
                field_header(&ctx),
                json!({
                    "record": "invert",
                    "form": "hybrid",
                    "h": h.display(&ctx),
                    "k": k.display(&ctx),
                    "lambda": lambda_poly.display(&ctx),
                }),
            );
            match invert_hybrid_xh(&ctx, &h, &lambda, &k) {
                Ok(inv) => {
                    let f = {
                        let terms = PointMap::from_fn(&ctx, ctx.elements().collect(), |x| {
                            ctx.mul(x, h.eval(&ctx, lambda.apply(x)))
                        });
                        lagrange_interpolate(&ctx, &terms)?
                    };
                    let oracle = oracle_inverse_poly(&ctx, &f)?;
                    let (fields, ok) = inverse_fields(&ctx, &inv, &oracle);
                    all_ok &= ok;
                    out.line(&merge(merge(base, json!({"pp": true})), fields).to_string());
                }
                Err(Error::NotPP) => {
                    out.line(
                        &merge(base, json!({"pp": false, "inverse": Value::Null, "oracle_match": Value::Null}))
                            .to_string(),
                    );
                }
                Err(e) => return Err(e.into()),
            }
        }
        Form::Additive => {
            let f1 = parse_poly(&ctx, &need(&args.f1, "f1")?)?;
            let h = parse_poly(&ctx, &need(&args.h, "h")?)?;
            let lambda_poly = parse_poly(&ctx, &need(&args.lambda, "lambda")?)?;
            let lb_poly = match &args.lambda_bar {
                Some(s) => parse_poly(&ctx, s)?,
                None => lambda_poly.clone(),
            };
            let all: Vec<_> = ctx.elements().collect();
            let lambda = PointMap::of_poly(&ctx, &lambda_poly, all.clone());
            let lambda_bar = PointMap::of_poly(&ctx, &lb_poly, all.clone());
            let f_table = PointMap::from_fn(&ctx, all.clone(), |x| {
                ctx.add(f1.eval(&ctx, x), h.eval(&ctx, lambda.apply(x)))
            });
            let base = merge(
                field_header(&ctx),
                json!({
                    "record": "invert",
                    "form": "additive",
                    "f1": f1.display(&ctx),
                    "h": h.display(&ctx),
                    "lambda": lambda_poly.display(&ctx),
                    "lambda_bar": lb_poly.display(&ctx),
                }),
            );
            let g = match induced_h(&ctx, &f_table, &lambda, &lambda_bar) {
                Induced::Map(g) => g,
                Induced::Witness(a, b) => {
                    return Err(Error::HypothesisFailed(format!(
                        "no induced bottom map: fiber of ranks {} and {} disagrees",
                        a.rank(),
                        b.rank()
                    ))
                    .into())
                }
            };
            let square = AgwSquare::new(&ctx, f_table.clone(), lambda, lambda_bar, g)?;
            if !f_table.is_permutation() {
                out.line(
                    &merge(base, json!({"pp": false, "inverse": Value::Null, "oracle_match": Value::Null}))
                        .to_string(),
                );
                return Ok(true);
            }
            let inv = invert_add_general(&ctx, &f1, &h, &square)?;
            let f_poly = lagrange_interpolate(&ctx, &f_table)?;
            let oracle = oracle_inverse_poly(&ctx, &f_poly)?;
            let (fields, ok) = inverse_fields(&ctx, &inv, &oracle);
            all_ok &= ok;
            out.line(&merge(merge(base, json!({"pp": true})), fields).to_string());
        }
        Form::G0 => {
            let g_poly = parse_poly(&ctx, &need(&args.g, "g")?)?;
            let g0 = parse_poly(&ctx, &need(&args.g0, "g0")?)?;
            let lambda_poly = parse_poly(&ctx, &need(&args.lambda, "lambda")?)?;
            let lb_poly = match &args.lambda_bar {
                Some(s) => parse_poly(&ctx, s)?,
                None => lambda_poly.clone(),
            };
            let all: Vec<_> = ctx.elements().collect();
            let g = PointMap::of_poly(&ctx, &g_poly, all.clone());
            let lambda = PointMap::of_poly(&ctx, &lambda_poly, all.clone());
            let lambda_bar = PointMap::of_poly(&ctx, &lb_poly, all.clone());
            let form = G0Form::new(&ctx, g, g0.clone(), lambda, lambda_bar)?;
            let base = merge(
                field_header(&ctx),
                json!({
                    "record": "invert",
                    "form": "g0",
                    "g": g_poly.display(&ctx),
                    "g0": g0.display(&ctx),
                    "lambda": lambda_poly.display(&ctx),
                    "lambda_bar": lb_poly.display(&ctx),
                }),
            );
            match invert_g0_form(&ctx, &form) {
                Ok(inv) => {
                    let f_poly = lagrange_interpolate(&ctx, form.f_table())?;
                    let oracle = oracle_inverse_poly(&ctx, &f_poly)?;
                    let (fields, ok) = inverse_fields(&ctx, &inv, &oracle);
                    all_ok &= ok;
                    out.line(&merge(merge(base, json!({"pp": true})), fields).to_string());
                }
                Err(Error::NotPP) => {
                    out.line(
                        &merge(base, json!({"pp": false, "inverse": Value::Null, "oracle_match": Value::Null}))
                            .to_string(),
                    );
                }
                Err(e) => return Err(e.into()),
            }
        }
        Form::Translator => {
            let gamma = parse_element(&ctx, &need(&args.gamma, "gamma")?)?;
            let b = parse_element(&ctx, &need(&args.b, "b")?)?;
            let big_g = parse_poly(&ctx, &need(&args.bigg, "bigg")?)?;
            let lambda_poly = parse_poly(&ctx, &need(&args.lambda, "lambda")?)?;
            let lambda = PointMap::of_poly(&ctx, &lambda_poly, ctx.elements().collect());
            let form = TranslatorForm::new(gamma, b, lambda, big_g.clone());
            let base = merge(
                field_header(&ctx),
                json!({
                    "record": "invert",
                    "form": "translator",
                    "gamma": elem_json(&ctx, gamma),
                    "b": elem_json(&ctx, b),
                    "G": big_g.display(&ctx),
                    "lambda": lambda_poly.display(&ctx),
                    "translator_law": check_translator(&ctx, &form),
                }),
            );
            match invert_translator_form(&ctx, &form) {
                Ok(inv) => {
                    let f_poly = lagrange_interpolate(&ctx, &form.f_table(&ctx))?;
                    let oracle = oracle_inverse_poly(&ctx, &f_poly)?;
                    let (fields, ok) = inverse_fields(&ctx, &inv, &oracle);
                    all_ok &= ok;
                    out.line(&merge(merge(base, json!({"pp": true})), fields).to_string());
                }
                Err(Error::NotPP) => {
                    out.line(
                        &merge(base, json!({"pp": false, "inverse": Value::Null, "oracle_match": Value::Null}))
                            .to_string(),
                    );
                }
                Err(e) => return Err(e.into()),
            }
        }
        Form::Linearized => {
            let base_q = args.base_q.ok_or_else(|| {
                RunError::from(Error::Parse {
                    pos: 0,
                    msg: "--base-q is required for --form linearized".into(),
                })
            })?;
            let tower = Tower::new(ctx.clone(), base_q)?;
            let l = parse_linearized(&tower, &need(&args.l, "l")?)?;
            let l1 = parse_linearized(&tower, &need(&args.l1, "l1")?)?;
            let a = parse_element(&ctx, &need(&args.a, "a")?)?;
            let delta = parse_element(&ctx, &need(&args.delta, "delta")?)?;
            let h = parse_poly(&ctx, &need(&args.h, "h")?)?;
            let form = LinearizedForm::new(tower, l, l1, a, delta, h.clone())?;
            let base = merge(
                field_header(&ctx),
                json!({
                    "record": "invert",
                    "form": "linearized",
                    "base_q": base_q,
                    "a": elem_json(&ctx, a),
                    "delta": elem_json(&ctx, delta),
                    "h": h.display(&ctx),
                }),
            );
            match invert_linearized_form(&form) {
                Ok(inv) => {
                    let f_poly = lagrange_interpolate(&ctx, &form.f_table())?;
                    let oracle = oracle_inverse_poly(&ctx, &f_poly)?;
                    let (fields, ok) = inverse_fields(&ctx, &inv, &oracle);
                    all_ok &= ok;
                    out.line(&merge(merge(base, json!({"pp": true})), fields).to_string());
                }
                Err(Error::Singular) => {
                    out.line(
                        &merge(base, json!({"pp": false, "inverse": Value::Null, "oracle_match": Value::Null}))
                            .to_string(),
                    );
                }
                Err(e) => return Err(e.into()),
            }
        }
        Form::Branch => {
            let s = args.s.ok_or_else(|| {
                RunError::from(Error::Parse {
                    pos: 0,
                    msg: "--s is required for --form branch".into(),
                })
            })?;
            let sys = CyclotomicSys::new(&ctx, s)?;
            if args.branches.len() as u64 != sys.ell() {
                return Err(Error::Parse {
                    pos: 0,
                    msg: format!(
                        "--form branch needs exactly {} --branch polynomials (one per coset)",
                        sys.ell()
                    ),
                }
                .into());
            }
            let mut branches = vec![Branch::with_inverse(
                PointMap::new(&ctx, vec![ctx.zero()], vec![ctx.zero()])
                    .expect("singleton zero map"),
                Poly::zero(),
            )];
            let mut displays = Vec::new();
            for (i, text) in args.branches.iter().enumerate() {
                let p = parse_poly(&ctx, text)?;
                displays.push(p.display(&ctx));
                let members = sys.coset(&ctx, i as u64)?;
                branches.push(Branch::new(PointMap::of_poly(&ctx, &p, members)));
            }
            let bs = BranchSystem::new(&ctx, Some(sys), branches)?;
            let inv = assemble_branch_inverse(&ctx, &bs)?;
            let f_table = bs.f_table(&ctx);
            let f_poly = lagrange_interpolate(&ctx, &f_table)?;
            let oracle = oracle_inverse_poly(&ctx, &f_poly)?;
            let base = merge(
                field_header(&ctx),
                json!({
                    "record": "invert",
                    "form": "branch",
                    "s": s,
                    "branches": displays,
                    "f": f_poly.display(&ctx),
                    "pp": true,
                }),
            );
            let (fields, ok) = inverse_fields(&ctx, &inv, &oracle);
            all_ok &= ok;
            out.line(&merge(base, fields).to_string());
        }
    }
    Ok(all_ok)
}

fn verify_diagram(args: VerifyDiagramArgs) -> Result<bool, RunError> {
    let ctx = parse_field_spec(&args.q)?;
    let mut out = Out::open(&args.out)?;
    let f_poly = parse_poly(&ctx, &args.f)?;
    let lambda_poly = parse_poly(&ctx, &args.lambda)?;
    let lb_poly = match &args.lambda_bar {
        Some(s) => parse_poly(&ctx, s)?,
        None => lambda_poly.clone(),
    };
    let h_poly = parse_poly(&ctx, &args.h)?;
    let domain: Vec<_> = match args.domain {
        Domain::Full => ctx.elements().collect(),
        Domain::Nonzero => ctx.nonzero_elements().collect(),
    };
    let f = PointMap::of_poly(&ctx, &f_poly, domain.clone());
    let lambda = PointMap::of_poly(&ctx, &lambda_poly, domain.clone());
    let lambda_bar = PointMap::of_poly(&ctx, &lb_poly, domain.clone());
    let h = PointMap::of_poly(&ctx, &h_poly, lambda.image_set());

    let base = merge(
        field_header(&ctx),
        json!({
            "record": "verify-diagram",
            "f": f_poly.display(&ctx),
            "lambda": lambda_poly.display(&ctx),
            "lambda_bar": lb_poly.display(&ctx),
            "h": h_poly.display(&ctx),
            "domain": match args.domain { Domain::Full => "full", Domain::Nonzero => "nonzero" },
        }),
    );

    if let Some(w) = commute_violation(&ctx, &f, &lambda, &lambda_bar, &h) {
        out.line(
            &merge(
                base,
                json!({
                    "commutes": false,
                    "witness": elem_json(&ctx, w),
                    "witness_display": ctx.elem_string(w),
                }),
            )
            .to_string(),
        );
        return Ok(false);
    }
    let square = AgwSquare::new(&ctx, f, lambda, lambda_bar, h)?;
    let pp = square.is_pp(&ctx);
    let dual_ok = if pp {
        Some(square.dual_verify(&ctx)?)
    } else {
        None
    };
    out.line(
        &merge(
            base,
            json!({
                "commutes": true,
                "pp": pp,
                "dual_ok": dual_ok,
            }),
        )
        .to_string(),
    );
    Ok(dual_ok.unwrap_or(true))
}

fn enumerate(args: EnumerateArgs) -> Result<bool, RunError> {
    let ctx = parse_field_spec(&args.q)?;
    let mut out = Out::open(&args.out)?;
    let records = enumerate_two_branch(&ctx)?;
    let q = ctx.q();
    let formula = (q - 1) * (q - 1) * euler_phi((q - 1) / 2) * euler_phi((q - 1) / 2) / 2;
    let mut all_ok = true;

    if args.emit == Emit::Tsv {
        out.line("q\ta1\tr1\ta2\tr2\tpoly\tinverse\tinvolution");
    }
    for rec in &records {
        let form = TwoBranchForm::new(&ctx, rec.a1, rec.a2, rec.r1, rec.r2)?;
        debug_assert!(check_two_branch_pp(&ctx, &form)?);
        let f_poly = form.closed_poly(&ctx);
        let inverse = invert_two_branch(&ctx, &form)?;
        let oracle = oracle_inverse_poly(&ctx, &f_poly)?;
        all_ok &= inverse == oracle;
        let involution = is_involution(&form.table(&ctx));
        match args.emit {
            Emit::Jsonl => {
                let line = merge(
                    field_header(&ctx),
                    json!({
                        "record": "two-branch-pp",
                        "a1": elem_json(&ctx, rec.a1),
                        "r1": rec.r1,
                        "a2": elem_json(&ctx, rec.a2),
                        "r2": rec.r2,
                        "poly": f_poly.display(&ctx),
                        "inverse": inverse.display(&ctx),
                        "involution": involution,
                    }),
                );
                out.line(&line.to_string());
            }
            Emit::Tsv => {
                out.line(&format!(
                    "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
                    q,
                    ctx.elem_string(rec.a1),
                    rec.r1,
                    ctx.elem_string(rec.a2),
                    rec.r2,
                    f_poly.display(&ctx),
                    inverse.display(&ctx),
                    involution
                ));
            }
        }
    }
    let count = records.len() as u64;
    let matches = count == formula;
    all_ok &= matches;
    match args.emit {
        Emit::Jsonl => {
            let line = merge(
                field_header(&ctx),
                json!({
                    "record": "two-branch-summary",
                    "count": count,
                    "formula": formula,
                    "match": matches,
                }),
            );
            out.line(&line.to_string());
        }
        Emit::Tsv => {
            out.line(&format!("# count={count} formula={formula} match={matches}"));
        }
    }
    Ok(all_ok)
}

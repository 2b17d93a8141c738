//! The `omcode` command line: JSON in, canonical JSON out.
//!
//! [`run`] is the whole program minus process I/O, so it can be driven
//! in-process by tests.

use std::collections::BTreeMap;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::arrangement::PolyhedralCover;
use crate::catalog::{self, BatteryKind, BatteryParams, Payload};
use crate::codes::{self, matroid_code, Code, CodeMode, LeqOutcome, LeqWitness};
use crate::error::{Error, Result};
use crate::ideals::{self, PseudomonomialIdeal, SquarefreeMonomialIdeal};
use crate::json::{
    self, signed_set_to_json, CircuitsJson, CodeJson, ComplexJson, CovectorsJson, IdealJson, MorphismJson,
    Object, PseudomonomialIdealJson,
};
use crate::matroid::{validate_circuits, validate_covectors, AffineOrientedMatroid, GroundMap, OrientedMatroid};
use crate::sign::{ElementSet, SignedElementSet, SignedVector};
use crate::topology::{local_obstructions, Certificate, CollapseOutcome, SimplicialComplex, DEFAULT_COLLAPSE_BUDGET};

#[derive(Parser, Debug)]
#[command(
    name = "omcode",
    version,
    about = "Oriented matroids, combinatorial codes and their ideals",
    long_about = "Reads JSON from --file (or standard input) or a catalog instance via --name, \
                  and writes canonical JSON to standard output.\n\
                  Exit codes: 0 ok, 1 invalid input, 2 capacity or budget exceeded, 64 usage error."
)]
struct Cli {
    /// Worker threads for cell enumeration; output does not depend on it.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone, Default)]
struct Input {
    /// JSON input file; standard input when neither --file nor --name is given.
    #[arg(long)]
    file: Option<PathBuf>,
    /// Catalog instance to use as input.
    #[arg(long)]
    name: Option<String>,
}

#[derive(Args, Debug, Clone, Default)]
struct Other {
    /// Second JSON input file.
    #[arg(long = "other", id = "other_file")]
    file: Option<PathBuf>,
    /// Catalog instance to use as the second input.
    #[arg(long = "other-name", id = "other_name")]
    name: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Operations on sign vectors written as strings over '+', '-', '0'.
    Sign {
        #[command(subcommand)]
        op: SignOp,
    },
    /// Check the covector or circuit axioms of a set of sign vectors.
    Validate {
        #[arg(value_enum)]
        axioms: AxiomSystem,
        #[command(flatten)]
        input: Input,
    },
    /// Derived representations and properties of an oriented matroid.
    Convert {
        #[command(subcommand)]
        op: ConvertOp,
    },
    /// Codes of matroids and covers, trunks and isomorphism.
    Code {
        #[command(subcommand)]
        op: CodeOp,
    },
    /// Code morphisms and strong maps.
    Morphism {
        #[command(subcommand)]
        op: MorphismOp,
    },
    /// Search for a witness that one code lies below another.
    Leq {
        /// The code D that should lie below.
        #[command(flatten)]
        input: Input,
        /// The code C above.
        #[command(flatten)]
        other: Other,
        #[arg(long, default_value_t = 100_000)]
        budget: u64,
    },
    /// Neural ideals and oriented matroid ideals.
    Ideal {
        #[command(subcommand)]
        op: IdealOp,
    },
    /// Simplicial complexes and local obstructions.
    Topology {
        #[command(subcommand)]
        op: TopologyOp,
    },
    /// Named example objects and seeded batteries.
    Catalog {
        #[command(subcommand)]
        op: CatalogOp,
    },
}

#[derive(Subcommand, Debug)]
enum SignOp {
    /// The composition X ∘ Y.
    Compose {
        #[arg(allow_hyphen_values = true)]
        x: String,
        #[arg(allow_hyphen_values = true)]
        y: String,
    },
    /// Elements where X and Y have opposite nonzero signs.
    Separator {
        #[arg(allow_hyphen_values = true)]
        x: String,
        #[arg(allow_hyphen_values = true)]
        y: String,
    },
    /// Whether X and Y are orthogonal.
    Orthogonal {
        #[arg(allow_hyphen_values = true)]
        x: String,
        #[arg(allow_hyphen_values = true)]
        y: String,
    },
    /// Positive part, negative part and support of X.
    Parts {
        #[arg(allow_hyphen_values = true)]
        x: String,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum AxiomSystem {
    Covectors,
    Circuits,
}

#[derive(Subcommand, Debug)]
enum ConvertOp {
    /// All covectors.
    Covectors(Input),
    /// Circuits (support-minimal vectors).
    Circuits(Input),
    /// All vectors.
    Vectors(Input),
    Topes(Input),
    Cocircuits(Input),
    /// Acyclicity, loops, rank and uniformity.
    Flags(Input),
    TopeGraph(Input),
    /// The minor M ∖ delete / contract.
    Minor {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value = "")]
        delete: String,
        #[arg(long, default_value = "")]
        contract: String,
    },
    /// Whether a set of topes is T-convex.
    TConvex {
        #[command(flatten)]
        input: Input,
        /// Comma-separated topes, e.g. "+-+,+--".
        #[arg(long)]
        topes: String,
    },
    /// Convexity and convex closure of a signed set, e.g. --set "1,-2".
    Closure {
        #[command(flatten)]
        input: Input,
        #[arg(long, allow_hyphen_values = true)]
        set: String,
    },
    /// Whether a sign vector is realized by an arrangement.
    Feasible {
        #[command(flatten)]
        input: Input,
        #[arg(long, allow_hyphen_values = true)]
        vector: String,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum ModeArg {
    #[value(name = "W+")]
    WPlus,
    #[value(name = "L+")]
    LPlus,
    #[value(name = "Lpm", alias = "L+-")]
    LPlusMinus,
}

impl From<ModeArg> for CodeMode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::WPlus => CodeMode::WPlus,
            ModeArg::LPlus => CodeMode::LPlus,
            ModeArg::LPlusMinus => CodeMode::LPlusMinus,
        }
    }
}

#[derive(Subcommand, Debug)]
enum CodeOp {
    /// W⁺, L⁺ or L± of a matroid.
    Matroid {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value = "W+")]
        mode: ModeArg,
    },
    /// The code of a polyhedral cover.
    Cover(Input),
    /// The code of the open half-spaces of a central arrangement (L+: positive, Lpm: both sides).
    HalfSpaces {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value = "L+")]
        mode: ModeArg,
    },
    /// The trunk tk(σ).
    Trunk {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value = "")]
        sigma: String,
    },
    /// Whether a set of codewords is a trunk, e.g. --words '[[1,2],[2,3]]'.
    IsTrunk {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        words: String,
    },
    /// All trunks by their defining sets.
    Trunks(Input),
    /// Morphism-theoretic isomorphism of two codes.
    Isomorphic {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        other: Other,
    },
}

#[derive(Subcommand, Debug)]
enum MorphismOp {
    /// The image code of a morphism given by trunks.
    Apply {
        #[command(flatten)]
        input: Input,
        /// JSON list of trunk sets, e.g. '[[1,3,5],[2,4,5],null]'; overrides the input's trunks.
        #[arg(long)]
        trunks: Option<String>,
    },
    /// Whether a codeword map C → D is a morphism.
    Check {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        other: Other,
        /// JSON list of [source, image] codeword pairs.
        #[arg(long)]
        map: String,
    },
    /// Whether a ground map induces a strong map M1 → M2.
    StrongMap {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        other: Other,
        #[command(flatten)]
        map: MapArgs,
    },
    /// The induced morphism W⁺(M2) → W⁺(M1) of a strong map.
    WPlus {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        other: Other,
        #[command(flatten)]
        map: MapArgs,
    },
}

#[derive(Args, Debug, Clone)]
struct MapArgs {
    /// Images f(1), f(2), … as a comma-separated list with 0 for the base point.
    #[arg(long, allow_hyphen_values = true)]
    map: String,
    /// Images f(−1), f(−2), … as signed integers; checked against f(−e) = −f(e).
    #[arg(long, allow_hyphen_values = true)]
    negative: Option<String>,
}

#[derive(Subcommand, Debug)]
enum IdealOp {
    /// Canonical form of the neural ideal of a code.
    CanonicalForm(Input),
    /// Variety of a pseudomonomial ideal.
    Variety(Input),
    /// Weak elimination and incomparability of a pseudomonomial ideal (or of a code's canonical form).
    WeakElimination(Input),
    Polarize(Input),
    Depolarize(Input),
    /// O(M) from covectors.
    Om(Input),
    /// O(M) as an intersection of circuit primes.
    OmPrimes(Input),
    /// O(M)⋆ from circuits.
    Dual(Input),
    Alexander(Input),
    /// O_g(M) directly; with --via-quotient by specializing [O(M) : O(M ∖ g)].
    Affine {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        g: usize,
        #[arg(long)]
        via_quotient: bool,
    },
    Intersect {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        other: Other,
    },
    Quotient {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        other: Other,
    },
    /// Substitute x_e = 1, y_e = 0.
    Specialize {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        element: usize,
    },
    /// Image under the strong monomial map of a ground map into n2 elements.
    Map {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        map: MapArgs,
        #[arg(long)]
        target_n: usize,
    },
    /// Depolarized circuit ideal versus W⁺ for an acyclic matroid.
    CommutingSquare(Input),
}

#[derive(Subcommand, Debug)]
enum TopologyOp {
    /// Δ(C) of a code.
    Complex(Input),
    Link {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value = "")]
        sigma: String,
    },
    /// Reduced homology over 𝔽₂.
    Homology(Input),
    Collapse {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = DEFAULT_COLLAPSE_BUDGET)]
        budget: u64,
    },
    /// Classify the links of Δ(C) at faces missing from C.
    Obstructions {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = DEFAULT_COLLAPSE_BUDGET)]
        budget: u64,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum BatteryArg {
    AcyclicArrangements,
    UniformAffine,
    RandomCodes,
}

#[derive(Subcommand, Debug)]
enum CatalogOp {
    /// Names of the catalog instances.
    List,
    Show {
        #[arg(long)]
        name: String,
    },
    Sunflower {
        #[arg(long)]
        n: usize,
    },
    /// Seeded instances of a battery.
    Battery(BatteryArgs),
    /// Generate a battery and check its defining property on every instance:
    /// valid acyclic covectors, the tope lemma, or the canonical-form round trip.
    Check(BatteryArgs),
}

#[derive(Args, Debug)]
struct BatteryArgs {
    #[arg(long, value_enum)]
    kind: BatteryArg,
    #[arg(long, default_value_t = 10)]
    count: usize,
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 2)]
    d: usize,
    #[arg(long, default_value_t = 1)]
    seed: u64,
}

impl BatteryArgs {
    fn generate(&self) -> Result<Vec<catalog::NamedInstance>> {
        let kind = match self.kind {
            BatteryArg::AcyclicArrangements => BatteryKind::AcyclicArrangements,
            BatteryArg::UniformAffine => BatteryKind::UniformAffine,
            BatteryArg::RandomCodes => BatteryKind::RandomCodes,
        };
        let params = BatteryParams {
            count: self.count,
            n: self.n,
            d: self.d,
        };
        catalog::battery(kind, params, self.seed)
    }
}

/// Outcome class of a command.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Ok,
    InvalidInput,
    Capacity,
    Budget,
    Usage,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::InvalidInput => 1,
            Status::Capacity | Status::Budget => 2,
            Status::Usage => 64,
        }
    }
}

/// Result of one invocation: `payload` is present exactly when `status` is ok.
#[derive(Clone, Debug, PartialEq)]
pub struct CommandResult {
    pub status: Status,
    pub payload: Option<Value>,
    pub diagnostics: Vec<String>,
    /// Help or version text requested explicitly; printed to standard output.
    pub help: Option<String>,
}

impl CommandResult {
    fn ok(payload: Value) -> Self {
        CommandResult {
            status: Status::Ok,
            payload: Some(payload),
            diagnostics: vec![],
            help: None,
        }
    }

    fn failure(status: Status, message: String) -> Self {
        CommandResult {
            status,
            payload: None,
            diagnostics: vec![message],
            help: None,
        }
    }

    pub fn exit_code(&self) -> i32 {
        self.status.exit_code()
    }

    /// Text for standard output: compact canonical JSON plus a newline, or help text.
    pub fn stdout(&self) -> String {
        match (&self.payload, &self.help) {
            (Some(p), _) => format!("{}\n", serde_json::to_string(p).expect("JSON values serialize")),
            (None, Some(h)) => h.clone(),
            (None, None) => String::new(),
        }
    }

    /// Text for standard error.
    pub fn stderr(&self) -> String {
        self.diagnostics.iter().map(|d| format!("{d}\n")).collect()
    }
}

/// Signals a search that ran out of budget.
struct BudgetExhausted(String);

enum Failure {
    Error(Error),
    Budget(BudgetExhausted),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Error(e)
    }
}

type CmdResult = std::result::Result<Value, Failure>;

/// Runs one invocation; `argv[0]` is the program name and `stdin` supplies
/// input when no file or name is given.
pub fn run<I, T>(argv: I, stdin: &mut dyn FnMut() -> std::io::Result<String>) -> CommandResult
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => CommandResult {
                    status: Status::Ok,
                    payload: None,
                    diagnostics: vec![],
                    help: Some(text),
                },
                _ => CommandResult::failure(Status::Usage, text.trim_end().to_string()),
            };
        }
    };
    let mut ctx = Context {
        jobs: cli.jobs.max(1),
        stdin,
    };
    match ctx.dispatch(cli.command) {
        Ok(v) => CommandResult::ok(v),
        Err(Failure::Budget(BudgetExhausted(msg))) => CommandResult::failure(Status::Budget, msg),
        Err(Failure::Error(e)) => {
            let status = match e {
                Error::Capacity { .. } => Status::Capacity,
                _ => Status::InvalidInput,
            };
            let mut result = CommandResult::failure(status, e.to_string());
            if let Error::Inconsistent {
                report: Some(report), ..
            } = &e
            {
                result.diagnostics.push(serde_json::to_string(report).expect("report serializes"));
            }
            result
        }
    }
}

struct Context<'a> {
    jobs: usize,
    stdin: &'a mut dyn FnMut() -> std::io::Result<String>,
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("plain data serializes")
}

fn code_value(c: &Code) -> Value {
    to_value(&CodeJson::from_code(c))
}

fn ideal_value(j: &SquarefreeMonomialIdeal) -> Value {
    to_value(&IdealJson::from_ideal(j))
}

fn vectors_value(vs: &[SignedVector]) -> Value {
    json!(vs.iter().map(|v| v.to_string()).collect::<Vec<_>>())
}

fn parse_set(text: &str, n: usize) -> Result<ElementSet> {
    let items = parse_ints(text)?;
    if items.iter().any(|&i| i <= 0) {
        return Err(Error::Parse(format!("expected positive elements in {text:?}")));
    }
    ElementSet::from_elements(items.into_iter().map(|i| i as usize), n)
}

fn parse_ints(text: &str) -> Result<Vec<i64>> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| s.parse::<i64>().map_err(|_| Error::Parse(format!("not an integer: {s:?}"))))
        .collect()
}

fn parse_ground_map(args: &MapArgs, n1: usize, n2: usize) -> Result<GroundMap> {
    let positive = parse_ints(&args.map)?;
    match &args.negative {
        Some(neg) => GroundMap::from_signed(n1, n2, &positive, &parse_ints(neg)?),
        None => {
            let negative: Vec<i64> = positive.iter().map(|p| -p).collect();
            GroundMap::from_signed(n1, n2, &positive, &negative)
        }
    }
}

impl Context<'_> {
    fn read(&mut self, file: &Option<PathBuf>, name: &Option<String>) -> Result<Object> {
        match (file, name) {
            (Some(_), Some(_)) => Err(Error::argument("give either a file or a catalog name, not both")),
            (None, Some(name)) => Ok(Object::from_instance(catalog::paper_instance(name)?)),
            (Some(path), None) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| Error::argument(format!("cannot read {}: {e}", path.display())))?;
                Object::parse(&text)
            }
            (None, None) => {
                let text = (self.stdin)().map_err(|e| Error::argument(format!("cannot read standard input: {e}")))?;
                Object::parse(&text)
            }
        }
    }

    fn input(&mut self, input: &Input) -> Result<Object> {
        self.read(&input.file, &input.name)
    }

    fn other(&mut self, other: &Other) -> Result<Object> {
        if other.file.is_none() && other.name.is_none() {
            return Err(Error::argument("this command needs a second input (--other or --other-name)"));
        }
        self.read(&other.file, &other.name)
    }

    fn matroid_of(&self, obj: Object) -> Result<OrientedMatroid> {
        match obj {
            Object::Matroid(m) => Ok(m),
            Object::Arrangement(a) => a.oriented_matroid(self.jobs),
            other => Err(Error::argument(format!("expected a matroid, got a {}", other.kind()))),
        }
    }

    fn matroid(&mut self, input: &Input) -> Result<OrientedMatroid> {
        let obj = self.input(input)?;
        self.matroid_of(obj)
    }

    fn other_matroid(&mut self, other: &Other) -> Result<OrientedMatroid> {
        let obj = self.other(other)?;
        self.matroid_of(obj)
    }

    fn code_of(&self, obj: Object) -> Result<Code> {
        match obj {
            Object::Code(c) => Ok(c),
            Object::Cover(p) => p.code(self.jobs),
            Object::Morphism(f) => Ok(f.apply()),
            other => Err(Error::argument(format!("expected a code, got a {}", other.kind()))),
        }
    }

    fn code(&mut self, input: &Input) -> Result<Code> {
        let obj = self.input(input)?;
        self.code_of(obj)
    }

    fn ideal(&mut self, input: &Input) -> Result<SquarefreeMonomialIdeal> {
        match self.input(input)? {
            Object::Ideal(j) => Ok(j),
            other => Err(Error::argument(format!(
                "expected a monomial ideal, got a {}",
                other.kind()
            ))),
        }
    }

    fn other_ideal(&mut self, other: &Other) -> Result<SquarefreeMonomialIdeal> {
        match self.other(other)? {
            Object::Ideal(j) => Ok(j),
            o => Err(Error::argument(format!("expected a monomial ideal, got a {}", o.kind()))),
        }
    }

    fn pseudomonomial_ideal(&mut self, input: &Input) -> Result<PseudomonomialIdeal> {
        match self.input(input)? {
            Object::PseudomonomialIdeal(i) => Ok(i),
            Object::Code(c) => ideals::canonical_form(&c),
            other => Err(Error::argument(format!(
                "expected a pseudomonomial ideal or code, got a {}",
                other.kind()
            ))),
        }
    }

    fn complex(&mut self, input: &Input) -> Result<SimplicialComplex> {
        match self.input(input)? {
            Object::Complex(c) => Ok(c),
            Object::Code(c) => Ok(c.simplicial_complex()),
            other => Err(Error::argument(format!("expected a complex or code, got a {}", other.kind()))),
        }
    }

    fn dispatch(&mut self, command: Command) -> CmdResult {
        match command {
            Command::Sign { op } => sign_cmd(op),
            Command::Validate { axioms, input } => self.validate(axioms, &input),
            Command::Convert { op } => self.convert(op),
            Command::Code { op } => self.code_cmd(op),
            Command::Morphism { op } => self.morphism(op),
            Command::Leq { input, other, budget } => self.leq(&input, &other, budget),
            Command::Ideal { op } => self.ideal_cmd(op),
            Command::Topology { op } => self.topology(op),
            Command::Catalog { op } => catalog_cmd(op),
        }
    }

    fn validate(&mut self, axioms: AxiomSystem, input: &Input) -> CmdResult {
        // Validation must see the raw vectors, so the input is not turned into a matroid first.
        let raw: Value = match (&input.file, &input.name) {
            (None, Some(name)) => {
                let m = self.matroid_of(Object::from_instance(catalog::paper_instance(name)?))?;
                match axioms {
                    AxiomSystem::Covectors => to_value(&CovectorsJson::from_matroid(&m)),
                    AxiomSystem::Circuits => to_value(&CircuitsJson::from_matroid(&m)),
                }
            }
            (file, None) => {
                let text = match file {
                    Some(path) => std::fs::read_to_string(path)
                        .map_err(|e| Error::argument(format!("cannot read {}: {e}", path.display())))?,
                    None => (self.stdin)().map_err(|e| Error::argument(format!("cannot read standard input: {e}")))?,
                };
                serde_json::from_str(&text).map_err(|e| Error::parse(e.to_string()))?
            }
            _ => return Err(Error::argument("give either a file or a catalog name, not both").into()),
        };
        let decode_err = |e: serde_json::Error| Error::parse(e.to_string());
        let report = match axioms {
            AxiomSystem::Covectors => {
                let j: CovectorsJson = serde_json::from_value(raw).map_err(decode_err)?;
                validate_covectors(j.n, &j.vectors()?)?
            }
            AxiomSystem::Circuits => {
                let j: CircuitsJson = serde_json::from_value(raw).map_err(decode_err)?;
                validate_circuits(j.n, &j.vectors()?)?
            }
        };
        Ok(to_value(&report))
    }

    fn convert(&mut self, op: ConvertOp) -> CmdResult {
        Ok(match op {
            ConvertOp::Covectors(i) => to_value(&CovectorsJson::from_matroid(&self.matroid(&i)?)),
            ConvertOp::Circuits(i) => to_value(&CircuitsJson::from_matroid(&self.matroid(&i)?)),
            ConvertOp::Vectors(i) => {
                let m = self.matroid(&i)?;
                json!({"n": m.n(), "vectors": vectors_value(m.vectors())})
            }
            ConvertOp::Topes(i) => {
                let m = self.matroid(&i)?;
                json!({"n": m.n(), "topes": vectors_value(m.topes())})
            }
            ConvertOp::Cocircuits(i) => {
                let m = self.matroid(&i)?;
                json!({"n": m.n(), "cocircuits": vectors_value(&m.cocircuits())})
            }
            ConvertOp::Flags(i) => to_value(&self.matroid(&i)?.structure_flags()),
            ConvertOp::TopeGraph(i) => {
                let g = self.matroid(&i)?.tope_graph();
                json!({
                    "nodes": vectors_value(&g.nodes),
                    "edges": g.edges.iter().map(|(a, b, _)| json!([a, b])).collect::<Vec<_>>(),
                    "separators": g.edges.iter().map(|(_, _, s)| s.to_vec()).collect::<Vec<_>>(),
                })
            }
            ConvertOp::Minor {
                input,
                delete,
                contract,
            } => {
                let m = self.matroid(&input)?;
                let minor = m.minor(parse_set(&delete, m.n())?, parse_set(&contract, m.n())?)?;
                to_value(&CovectorsJson::from_matroid(&minor))
            }
            ConvertOp::TConvex { input, topes } => {
                let m = self.matroid(&input)?;
                let q = topes
                    .split(',')
                    .map(str::trim)
                    .filter(|s| !s.is_empty())
                    .map(|s| s.parse::<SignedVector>())
                    .collect::<Result<Vec<_>>>()?;
                json!({"t_convex": m.is_t_convex(&q)?})
            }
            ConvertOp::Closure { input, set } => {
                let m = self.matroid(&input)?;
                let s = SignedElementSet::from_signed_ints(m.n(), &parse_ints(&set)?)?;
                json!({
                    "convex": m.is_convex_set(&s)?,
                    "closure": signed_set_to_json(&m.convex_closure(&s)?),
                })
            }
            ConvertOp::Feasible { input, vector } => {
                let a = match self.input(&input)? {
                    Object::Arrangement(a) => a,
                    other => return Err(Error::argument(format!("expected an arrangement, got a {}", other.kind())).into()),
                };
                json!({"feasible": a.feasible_sign_vector(&vector.parse()?)?})
            }
        })
    }

    fn code_cmd(&mut self, op: CodeOp) -> CmdResult {
        Ok(match op {
            CodeOp::Matroid { input, mode } => code_value(&matroid_code(&self.matroid(&input)?, mode.into())),
            CodeOp::Cover(i) => {
                let p = match self.input(&i)? {
                    Object::Cover(p) => p,
                    other => return Err(Error::argument(format!("expected a cover, got a {}", other.kind())).into()),
                };
                code_value(&p.code(self.jobs)?)
            }
            CodeOp::HalfSpaces { input, mode } => {
                let a = match self.input(&input)? {
                    Object::Arrangement(a) => a,
                    other => return Err(Error::argument(format!("expected an arrangement, got a {}", other.kind())).into()),
                };
                let cover = match mode {
                    ModeArg::LPlus => PolyhedralCover::positive_half_spaces(&a),
                    ModeArg::LPlusMinus => PolyhedralCover::signed_half_spaces(&a),
                    ModeArg::WPlus => {
                        return Err(Error::argument("half-space covers give L+ or Lpm codes").into())
                    }
                };
                code_value(&cover.code(self.jobs)?)
            }
            CodeOp::Trunk { input, sigma } => {
                let c = self.code(&input)?;
                let sigma = parse_set(&sigma, c.n())?;
                let words: Vec<Vec<usize>> = c.trunk(sigma).into_iter().map(|w| w.to_vec()).collect();
                json!({"sigma": sigma.to_vec(), "trunk": words})
            }
            CodeOp::IsTrunk { input, words } => {
                let c = self.code(&input)?;
                let lists: Vec<Vec<usize>> =
                    serde_json::from_str(&words).map_err(|e| Error::parse(format!("--words: {e}")))?;
                let words = lists
                    .iter()
                    .map(|w| json::vec_to_set(w, c.n()))
                    .collect::<Result<Vec<_>>>()?;
                json!({"is_trunk": c.is_trunk(&words)})
            }
            CodeOp::Trunks(i) => {
                let c = self.code(&i)?;
                json!({"trunks": json::trunks_to_json(&c.trunk_sets())})
            }
            CodeOp::Isomorphic { input, other } => {
                let c = self.code(&input)?;
                let obj = self.other(&other)?;
                let d = self.code_of(obj)?;
                json!({"isomorphic": codes::is_isomorphic(&c, &d)?})
            }
        })
    }

    fn morphism(&mut self, op: MorphismOp) -> CmdResult {
        Ok(match op {
            MorphismOp::Apply { input, trunks } => {
                let f = match (self.input(&input)?, trunks) {
                    (Object::Morphism(f), None) => f,
                    (Object::Morphism(f), Some(t)) => MorphismJson {
                        source: None,
                        trunks: parse_trunks(&t)?,
                    }
                    .to_morphism(Some(f.source()))?,
                    (Object::Code(c), Some(t)) => MorphismJson {
                        source: None,
                        trunks: parse_trunks(&t)?,
                    }
                    .to_morphism(Some(&c))?,
                    (Object::Code(_), None) => {
                        return Err(Error::argument("a code input needs --trunks").into())
                    }
                    (other, _) => {
                        return Err(Error::argument(format!("expected a morphism or code, got a {}", other.kind())).into())
                    }
                };
                code_value(&f.apply())
            }
            MorphismOp::Check { input, other, map } => {
                let c = self.code(&input)?;
                let obj = self.other(&other)?;
                let d = self.code_of(obj)?;
                let pairs: Vec<(Vec<usize>, Vec<usize>)> =
                    serde_json::from_str(&map).map_err(|e| Error::parse(format!("--map: {e}")))?;
                let mut m = BTreeMap::new();
                for (a, b) in pairs {
                    m.insert(json::vec_to_set(&a, c.n())?, json::vec_to_set(&b, d.n())?);
                }
                json!({"morphism": codes::is_morphism(&c, &d, &m)?})
            }
            MorphismOp::StrongMap { input, other, map } => {
                let m1 = self.matroid(&input)?;
                let m2 = self.other_matroid(&other)?;
                let f = parse_ground_map(&map, m1.n(), m2.n())?;
                to_value(&m1.is_strong_map(&f, &m2)?)
            }
            MorphismOp::WPlus { input, other, map } => {
                let m1 = self.matroid(&input)?;
                let m2 = self.other_matroid(&other)?;
                let f = parse_ground_map(&map, m1.n(), m2.n())?;
                let w = codes::w_plus_morphism(&f, &m1, &m2)?;
                json!({
                    "source": code_value(&w.source),
                    "target": code_value(&w.target),
                    "map": w.map.iter().map(|(a, b)| json!([a.to_vec(), b.to_vec()])).collect::<Vec<_>>(),
                })
            }
        })
    }

    fn leq(&mut self, input: &Input, other: &Other, budget: u64) -> CmdResult {
        let d = self.code(input)?;
        let obj = self.other(other)?;
        let c = self.code_of(obj)?;
        let result = codes::leq_below(&d, &c, budget);
        match result.outcome {
            LeqOutcome::Yes(LeqWitness::Trunk(t)) => Ok(json!({
                "outcome": "yes",
                "witness": {"trunk": t.map(|s| s.to_vec())},
                "nodes": result.nodes,
            })),
            LeqOutcome::Yes(LeqWitness::Morphism(ts)) => Ok(json!({
                "outcome": "yes",
                "witness": {"trunks": json::trunks_to_json(&ts)},
                "nodes": result.nodes,
            })),
            LeqOutcome::NoExhausted => Ok(json!({"outcome": "no-exhausted", "nodes": result.nodes})),
            LeqOutcome::BudgetExceeded => Err(Failure::Budget(BudgetExhausted(format!(
                "search budget of {budget} nodes exhausted after {} nodes",
                result.nodes
            )))),
        }
    }

    fn ideal_cmd(&mut self, op: IdealOp) -> CmdResult {
        Ok(match op {
            IdealOp::CanonicalForm(i) => {
                let c = self.code(&i)?;
                to_value(&PseudomonomialIdealJson::from_ideal(&ideals::canonical_form(&c)?))
            }
            IdealOp::Variety(i) => code_value(&self.pseudomonomial_ideal(&i)?.variety()?),
            IdealOp::WeakElimination(i) => {
                let ideal = self.pseudomonomial_ideal(&i)?;
                json!({
                    "weak_elimination": ideals::weak_elimination_check(&ideal),
                    "incomparability": ideals::incomparability_check(&ideal),
                })
            }
            IdealOp::Polarize(i) => ideal_value(&ideals::polarize(&self.pseudomonomial_ideal(&i)?)),
            IdealOp::Depolarize(i) => {
                to_value(&PseudomonomialIdealJson::from_ideal(&ideals::depolarize(&self.ideal(&i)?)))
            }
            IdealOp::Om(i) => ideal_value(&ideals::om_ideal(&self.matroid(&i)?)),
            IdealOp::OmPrimes(i) => ideal_value(&ideals::om_ideal_primes(&self.matroid(&i)?)),
            IdealOp::Dual(i) => ideal_value(&ideals::om_dual_ideal(&self.matroid(&i)?)?),
            IdealOp::Alexander(i) => ideal_value(&self.ideal(&i)?.alexander_dual()),
            IdealOp::Affine {
                input,
                g,
                via_quotient,
            } => {
                let a = AffineOrientedMatroid::new(self.matroid(&input)?, g)?;
                if via_quotient {
                    ideal_value(&ideals::affine_om_ideal_via_quotient(&a)?)
                } else {
                    ideal_value(&ideals::affine_om_ideal(&a))
                }
            }
            IdealOp::Intersect { input, other } => {
                let a = self.ideal(&input)?;
                ideal_value(&a.intersect(&self.other_ideal(&other)?)?)
            }
            IdealOp::Quotient { input, other } => {
                let a = self.ideal(&input)?;
                ideal_value(&a.quotient(&self.other_ideal(&other)?)?)
            }
            IdealOp::Specialize { input, element } => ideal_value(&self.ideal(&input)?.specialize(element)?),
            IdealOp::Map { input, map, target_n } => {
                let j = self.ideal(&input)?;
                let f = parse_ground_map(&map, j.n(), target_n)?;
                ideal_value(&ideals::strong_monomial_map(&f, &j)?)
            }
            IdealOp::CommutingSquare(i) => {
                let sq = ideals::commuting_square(&self.matroid(&i)?)?;
                json!({
                    "holds": sq.holds(),
                    "varieties_agree": sq.varieties_agree,
                    "generators_agree": sq.generators_agree,
                })
            }
        })
    }

    fn topology(&mut self, op: TopologyOp) -> CmdResult {
        Ok(match op {
            TopologyOp::Complex(i) => to_value(&ComplexJson::from_complex(&self.complex(&i)?)),
            TopologyOp::Link { input, sigma } => {
                let c = self.complex(&input)?;
                let sigma = parse_set(&sigma, c.vertex_count())?;
                to_value(&ComplexJson::from_complex(&c.link(sigma)?))
            }
            TopologyOp::Homology(i) => to_value(&self.complex(&i)?.reduced_homology()),
            TopologyOp::Collapse { input, budget } => {
                let c = self.complex(&input)?;
                let result = c.collapsibility(budget);
                match result.outcome {
                    CollapseOutcome::Yes(seq) => json!({
                        "outcome": "yes",
                        "sequence": seq.iter().map(|s| json!([s.face.to_vec(), s.coface.to_vec()])).collect::<Vec<_>>(),
                        "nodes": result.nodes,
                    }),
                    CollapseOutcome::NoExhausted => json!({"outcome": "no-exhausted", "nodes": result.nodes}),
                    CollapseOutcome::BudgetExceeded => {
                        return Err(Failure::Budget(BudgetExhausted(format!(
                            "collapse budget of {budget} nodes exhausted"
                        ))))
                    }
                }
            }
            TopologyOp::Obstructions { input, budget } => {
                let c = self.code(&input)?;
                let report = local_obstructions(&c, budget)?;
                let entries: Vec<Value> = report
                    .entries
                    .iter()
                    .map(|e| {
                        json!({
                            "sigma": e.sigma.to_vec(),
                            "status": to_value(&e.status),
                            "certificate": certificate_value(&e.certificate),
                        })
                    })
                    .collect();
                json!({
                    "obstructions": report.obstructions().count(),
                    "entries": entries,
                })
            }
        })
    }
}

fn sign_cmd(op: SignOp) -> CmdResult {
    let parse = |s: &str| s.parse::<SignedVector>();
    Ok(match op {
        SignOp::Compose { x, y } => json!({"compose": parse(&x)?.compose(&parse(&y)?)?.to_string()}),
        SignOp::Separator { x, y } => json!({"separator": parse(&x)?.separator(&parse(&y)?)?.to_vec()}),
        SignOp::Orthogonal { x, y } => json!({"orthogonal": parse(&x)?.is_orthogonal(&parse(&y)?)?}),
        SignOp::Parts { x } => {
            let (pos, neg, support) = parse(&x)?.parts();
            json!({"positive": pos.to_vec(), "negative": neg.to_vec(), "support": support.to_vec()})
        }
    })
}

fn parse_trunks(text: &str) -> Result<Vec<Option<Vec<usize>>>> {
    serde_json::from_str(text).map_err(|e| Error::parse(format!("--trunks: {e}")))
}

fn certificate_value(c: &Certificate) -> Value {
    match c {
        Certificate::Homology(h) => json!({"homology": to_value(h)}),
        Certificate::Cone(v) => json!({"cone": v}),
        Certificate::Collapse(seq) => json!({
            "collapse": seq.iter().map(|s| json!([s.face.to_vec(), s.coface.to_vec()])).collect::<Vec<_>>(),
        }),
        Certificate::Inconclusive { homology, exhausted } => json!({
            "homology": to_value(homology),
            "collapse_search": if *exhausted { "no-exhausted" } else { "budget" },
        }),
    }
}

fn catalog_cmd(op: CatalogOp) -> CmdResult {
    Ok(match op {
        CatalogOp::List => json!({"instances": catalog::INSTANCE_NAMES}),
        CatalogOp::Show { name } => json::instance_to_value(&catalog::paper_instance(&name)?),
        CatalogOp::Sunflower { n } => code_value(&catalog::sunflower_code(n)?),
        CatalogOp::Battery(args) => {
            let instances = args.generate()?;
            json!({"instances": instances.iter().map(json::instance_to_value).collect::<Vec<_>>()})
        }
        CatalogOp::Check(args) => {
            let instances = args.generate()?;
            let mut failed = Vec::new();
            for inst in &instances {
                if !battery_property_holds(&inst.payload)? {
                    failed.push(inst.name.clone());
                }
            }
            json!({
                "instances": instances.len(),
                "passed": instances.len() - failed.len(),
                "failed": failed,
            })
        }
    })
}

/// The property each battery kind is generated to exhibit.
fn battery_property_holds(payload: &Payload) -> Result<bool> {
    Ok(match payload {
        Payload::Arrangement { matroid, .. } => {
            validate_covectors(matroid.n(), matroid.covectors())?.valid && matroid.is_acyclic()
        }
        Payload::Affine { matroid, .. } => catalog::tope_lemma_holds(matroid),
        Payload::Code(c) => &ideals::canonical_form(c)?.variety()? == c,
        _ => return Err(Error::argument("not a battery instance")),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> CommandResult {
        let mut argv = vec!["omcode"];
        argv.extend_from_slice(args);
        run(argv, &mut || Ok(String::new()))
    }

    fn run_stdin(args: &[&str], input: &str) -> CommandResult {
        let mut argv = vec!["omcode"];
        argv.extend_from_slice(args);
        let text = input.to_string();
        run(argv, &mut || Ok(text.clone()))
    }

    #[test]
    fn w_plus_of_m1() {
        let r = run_args(&["code", "matroid", "--mode", "W+", "--name", "M1"]);
        assert_eq!(r.stdout(), "{\"n\":3,\"codewords\":[[1],[2],[1,3],[2,3]]}\n");
        assert_eq!(r.exit_code(), 0);
    }

    #[test]
    fn validate_rank_one() {
        let r = run_stdin(
            &["validate", "covectors"],
            r#"{"n":3,"covectors":["000","+++","---"]}"#,
        );
        assert_eq!(r.stdout(), "{\"valid\":true}\n");
        let r = run_stdin(&["validate", "covectors"], r#"{"n":2,"covectors":["00","+0"]}"#);
        assert_eq!(r.exit_code(), 0);
        assert_eq!(r.payload.unwrap()["valid"], json!(false));
    }

    #[test]
    fn commuting_square_command() {
        let r = run_args(&["ideal", "commuting-square", "--name", "rank1_3"]);
        assert_eq!(r.payload.unwrap()["holds"], json!(true));
        let r = run_args(&["ideal", "commuting-square", "--name", "M1"]);
        assert_eq!(r.exit_code(), 1);
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run_args(&["frobnicate"]).exit_code(), 64);
        assert_eq!(run_args(&[]).exit_code(), 64);
        assert_eq!(run_stdin(&["code", "cover"], "not json").exit_code(), 1);
        assert_eq!(run_args(&["catalog", "show", "--name", "nope"]).exit_code(), 1);
        assert_eq!(run_args(&["catalog", "sunflower", "--n", "12"]).exit_code(), 2);
        let r = run_args(&["leq", "--name", "fig3_D", "--other-name", "fig3_C", "--budget", "0"]);
        assert_eq!(r.exit_code(), 2);
        assert!(r.payload.is_none());
        let help = run_args(&["--help"]);
        assert_eq!(help.exit_code(), 0);
        assert!(help.stdout().contains("Usage"));
    }

    #[test]
    fn leq_fig3() {
        let r = run_args(&["leq", "--name", "fig3_D", "--other-name", "fig3_C"]);
        assert_eq!(r.payload.unwrap()["outcome"], json!("yes"));
    }
}

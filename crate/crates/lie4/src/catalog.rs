//! The catalog: sixteen four-dimensional nonunimodular Lie algebras with
//! parameter domains, automorphism-group templates for the twelve type-(R)
//! entries, and the metric-representative families with their expected
//! isometric-automorphism groups.

use std::collections::BTreeMap;
use std::fmt;

use crate::expr::{e, Expr};
use crate::linalg::{rat, rint, Rat, RatMat};
use num::Zero;
use serde_json::{json, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum AlgebraName {
    A2p2A1,
    TwoA2,
    A32pA1,
    A33pA1,
    A35apA1,
    A37apA1,
    A42a,
    A421,
    A43,
    A44,
    A45ab,
    A46ab,
    A47,
    A49b,
    A411a,
    A412,
}

use AlgebraName::*;

impl AlgebraName {
    pub const ALL: [AlgebraName; 16] = [
        A2p2A1, TwoA2, A32pA1, A33pA1, A35apA1, A37apA1, A42a, A421, A43, A44, A45ab, A46ab,
        A47, A49b, A411a, A412,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            A2p2A1 => "A2+2A1",
            TwoA2 => "2A2",
            A32pA1 => "A32+A1",
            A33pA1 => "A33+A1",
            A35apA1 => "A35a+A1",
            A37apA1 => "A37a+A1",
            A42a => "A42a",
            A421 => "A421",
            A43 => "A43",
            A44 => "A44",
            A45ab => "A45ab",
            A46ab => "A46ab",
            A47 => "A47",
            A49b => "A49b",
            A411a => "A411a",
            A412 => "A412",
        }
    }

    pub fn parse(s: &str) -> Option<AlgebraName> {
        Self::ALL.iter().copied().find(|n| n.as_str() == s).or({
            // alternative label under which the A49b family is also known
            if s == "A48" {
                Some(A49b)
            } else {
                None
            }
        })
    }
}

impl fmt::Display for AlgebraName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CatalogError {
    #[error("unknown group `{0}`")]
    UnknownGroup(String),
    #[error("parameter out of domain: {0}")]
    ParamOutOfDomain(String),
    #[error("no automorphism template for `{0}` (outside the type-(R) scope)")]
    NoTemplate(String),
    #[error("missing parameter `{0}`")]
    MissingParam(String),
    #[error("unknown metric case `{0}`")]
    UnknownCase(String),
}

/// An algebra name with bound rational parameter values, domain-checked.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraId {
    pub name: AlgebraName,
    pub params: BTreeMap<String, Rat>,
}

impl AlgebraId {
    pub fn new(name: AlgebraName, params: BTreeMap<String, Rat>) -> Result<Self, CatalogError> {
        validate_algebra_params(name, &params)?;
        Ok(AlgebraId { name, params })
    }

    /// Bind the default parameter values used throughout examples and tests.
    pub fn canonical(name: AlgebraName) -> AlgebraId {
        AlgebraId::new(name, canonical_params(name)).unwrap()
    }
}

pub fn canonical_params(name: AlgebraName) -> BTreeMap<String, Rat> {
    let mut m = BTreeMap::new();
    match name {
        A35apA1 => {
            m.insert("alpha".into(), rat(1, 2));
        }
        A37apA1 | A411a => {
            m.insert("alpha".into(), rint(1));
        }
        A42a => {
            m.insert("alpha".into(), rat(1, 2));
        }
        A45ab => {
            // kept away from alpha = beta and beta = 1, where extra
            // rotational symmetry appears and the generic tables break
            m.insert("alpha".into(), rat(1, 4));
            m.insert("beta".into(), rat(1, 2));
        }
        A46ab => {
            m.insert("alpha".into(), rint(1));
            m.insert("beta".into(), rint(1));
        }
        A49b => {
            m.insert("beta".into(), rat(1, 2));
        }
        _ => {}
    }
    m
}

fn need(params: &BTreeMap<String, Rat>, name: &str) -> Result<Rat, CatalogError> {
    params
        .get(name)
        .cloned()
        .ok_or_else(|| CatalogError::MissingParam(name.into()))
}

fn validate_algebra_params(
    name: AlgebraName,
    params: &BTreeMap<String, Rat>,
) -> Result<(), CatalogError> {
    use num::Signed;
    let bad = |msg: &str| Err(CatalogError::ParamOutOfDomain(msg.into()));
    match name {
        A35apA1 => {
            let a = need(params, "alpha")?;
            if !(a.abs() > Rat::zero() && a.abs() < rint(1)) {
                return bad("A35a+A1 requires 0 < |alpha| < 1");
            }
        }
        A37apA1 => {
            let a = need(params, "alpha")?;
            if !a.is_positive() {
                return bad("A37a+A1 requires alpha > 0");
            }
        }
        A42a => {
            let a = need(params, "alpha")?;
            if a.is_zero() || a == rint(1) || a == rint(-2) {
                return bad("A42a requires alpha not in {0, 1, -2}");
            }
        }
        A45ab => {
            let a = need(params, "alpha")?;
            let b = need(params, "beta")?;
            if (&a * &b).is_zero() {
                return bad("A45ab requires alpha*beta != 0");
            }
            if !(rint(-1) <= a && a <= b && b <= rint(1)) {
                return bad("A45ab requires -1 <= alpha <= beta <= 1");
            }
            if &a + &b == rint(-1) {
                return bad("A45ab requires alpha + beta != -1");
            }
        }
        A46ab => {
            let a = need(params, "alpha")?;
            let b = need(params, "beta")?;
            if a.is_zero() {
                return bad("A46ab requires alpha != 0");
            }
            if b.is_negative() {
                return bad("A46ab requires beta >= 0");
            }
            if a == rint(-2) * &b {
                return bad("A46ab requires alpha != -2*beta");
            }
        }
        A49b => {
            let b = need(params, "beta")?;
            if !(rint(-1) < b && b <= rint(1)) {
                return bad("A49b requires -1 < beta <= 1");
            }
        }
        A411a => {
            let a = need(params, "alpha")?;
            if !a.is_positive() {
                return bad("A411a requires alpha > 0");
            }
        }
        _ => {}
    }
    Ok(())
}

/// One nonzero bracket: `[e_i, e_j] = coeff * e_k` (1-based indices, i < j).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bracket {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub coeff: Expr,
}

/// Bracket tensor `c^k_{ij}` at bound parameter values; antisymmetric in (i, j).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureConstants {
    c: Vec<Rat>, // [k][i][j], 0-based, length 64
}

impl StructureConstants {
    pub fn from_brackets(
        brackets: &[Bracket],
        env: &BTreeMap<String, Rat>,
    ) -> Result<Self, CatalogError> {
        let mut c = vec![Rat::zero(); 64];
        for b in brackets {
            let v = b
                .coeff
                .eval(env)
                .map_err(|e| CatalogError::ParamOutOfDomain(e.to_string()))?;
            let (i, j, k) = (b.i - 1, b.j - 1, b.k - 1);
            c[k * 16 + i * 4 + j] = v.clone();
            c[k * 16 + j * 4 + i] = -v;
        }
        Ok(StructureConstants { c })
    }

    pub fn zero() -> Self {
        StructureConstants {
            c: vec![Rat::zero(); 64],
        }
    }

    /// `c^k_{ij}`, 0-based indices.
    pub fn c(&self, k: usize, i: usize, j: usize) -> &Rat {
        &self.c[k * 16 + i * 4 + j]
    }

    pub fn set_c(&mut self, k: usize, i: usize, j: usize, v: Rat) {
        self.c[k * 16 + i * 4 + j] = v.clone();
        self.c[k * 16 + j * 4 + i] = -v;
    }

    pub fn jacobi_holds(&self) -> bool {
        for i in 0..4 {
            for j in 0..4 {
                for k in 0..4 {
                    for m in 0..4 {
                        let mut acc = Rat::zero();
                        for l in 0..4 {
                            acc += self.c(l, i, j) * self.c(m, l, k)
                                + self.c(l, j, k) * self.c(m, l, i)
                                + self.c(l, k, i) * self.c(m, l, j);
                        }
                        if !acc.is_zero() {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }
}

/// One template branch: a 4x4 grid of expressions in free variables
/// `a1..a16` (row-major cell numbering) and the algebra's own parameters.
pub type TemplateBranch = [[Expr; 4]; 4];

#[derive(Debug, Clone)]
pub struct AutTemplate {
    pub algebra: AlgebraName,
    pub branches: Vec<TemplateBranch>,
}

impl AutTemplate {
    /// Whether a concrete matrix is consistent with some branch: free
    /// variables are read off from the cells where they stand alone, then
    /// every cell (including coupled polynomial cells) is re-evaluated and
    /// compared exactly.
    pub fn matches(&self, a: &RatMat, algebra_env: &BTreeMap<String, Rat>) -> bool {
        self.branches
            .iter()
            .any(|b| branch_matches(b, a, algebra_env))
    }

    /// Instantiate a branch at the given free-variable assignment.
    pub fn instantiate(
        &self,
        branch: usize,
        vars: &BTreeMap<String, Rat>,
        algebra_env: &BTreeMap<String, Rat>,
    ) -> Result<RatMat, CatalogError> {
        let mut env = algebra_env.clone();
        env.extend(vars.iter().map(|(k, v)| (k.clone(), v.clone())));
        let mut m = RatMat::zeros(4, 4);
        for i in 0..4 {
            for j in 0..4 {
                let v = self.branches[branch][i][j]
                    .eval(&env)
                    .map_err(|e| CatalogError::ParamOutOfDomain(e.to_string()))?;
                m.set(i, j, v);
            }
        }
        Ok(m)
    }

    /// Names of the free variables of a branch (`a`-variables only).
    pub fn free_vars(&self, branch: usize) -> Vec<String> {
        let mut out = Vec::new();
        for row in &self.branches[branch] {
            for cell in row {
                for v in cell.vars() {
                    if v.starts_with('a') && v[1..].chars().all(|c| c.is_ascii_digit()) {
                        out.push(v);
                    }
                }
            }
        }
        out.sort();
        out.dedup();
        out
    }
}

fn branch_matches(b: &TemplateBranch, a: &RatMat, algebra_env: &BTreeMap<String, Rat>) -> bool {
    let mut env = algebra_env.clone();
    for i in 0..4 {
        for j in 0..4 {
            if let Expr::Var(name) = &b[i][j] {
                if !name.starts_with('a') {
                    continue; // algebra parameter, already bound
                }
                match env.get(name) {
                    Some(v) if v != a.get(i, j) => return false,
                    Some(_) => {}
                    None => {
                        env.insert(name.clone(), a.get(i, j).clone());
                    }
                }
            }
        }
    }
    for i in 0..4 {
        for j in 0..4 {
            match b[i][j].eval(&env) {
                Ok(v) => {
                    if &v != a.get(i, j) {
                        return false;
                    }
                }
                Err(_) => return false,
            }
        }
    }
    true
}

/// Per-parameter admissibility for a metric family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Constraint {
    Free,
    Positive,
    NonZero,
}

impl Constraint {
    pub fn admits(&self, v: &Rat) -> bool {
        use num::Signed;
        match self {
            Constraint::Free => true,
            Constraint::Positive => v.is_positive(),
            Constraint::NonZero => !v.is_zero(),
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            Constraint::Free => "free",
            Constraint::Positive => "positive",
            Constraint::NonZero => "nonzero",
        }
    }
}

#[derive(Debug, Clone)]
pub struct MetricParamSpec {
    pub name: String,
    pub constraint: Constraint,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GroupLabel {
    Trivial,
    Z2,
    Z2x2,
    Z2x3,
    D4,
    O2,
    O2xZ2,
    Unrecognized,
}

impl GroupLabel {
    pub fn as_str(&self) -> &'static str {
        match self {
            GroupLabel::Trivial => "trivial",
            GroupLabel::Z2 => "Z2",
            GroupLabel::Z2x2 => "Z2^2",
            GroupLabel::Z2x3 => "Z2^3",
            GroupLabel::D4 => "D4",
            GroupLabel::O2 => "O2",
            GroupLabel::O2xZ2 => "O2xZ2",
            GroupLabel::Unrecognized => "unrecognized",
        }
    }
}

impl fmt::Display for GroupLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// The group the theory predicts for a family.
#[derive(Debug, Clone)]
pub enum Expected {
    Label(GroupLabel),
    /// `if_zero` when `condition` evaluates to 0 at the bound metric
    /// parameters, `otherwise` else.
    Conditional {
        condition: Expr,
        if_zero: GroupLabel,
        otherwise: GroupLabel,
    },
}

impl Expected {
    pub fn label_at(&self, metric_env: &BTreeMap<String, Rat>) -> GroupLabel {
        match self {
            Expected::Label(l) => *l,
            Expected::Conditional {
                condition,
                if_zero,
                otherwise,
            } => match condition.eval(metric_env) {
                Ok(v) if v.is_zero() => *if_zero,
                _ => *otherwise,
            },
        }
    }
}

#[derive(Debug, Clone)]
pub struct MetricFamily {
    pub algebra: AlgebraName,
    pub case_name: String,
    pub params: Vec<MetricParamSpec>,
    /// Extra conditions: each expression must evaluate to something nonzero.
    pub nonzero: Vec<Expr>,
    pub u_pattern: [[Expr; 4]; 4],
    pub closed_form: [[Expr; 4]; 4],
    pub expected: Expected,
}

impl MetricFamily {
    pub fn validate_params(&self, env: &BTreeMap<String, Rat>) -> Result<(), CatalogError> {
        for p in &self.params {
            let v = need(env, &p.name)?;
            if !p.constraint.admits(&v) {
                return Err(CatalogError::ParamOutOfDomain(format!(
                    "{}/{} requires `{}` {}",
                    self.algebra, self.case_name, p.name, p.constraint.as_str()
                )));
            }
        }
        for cond in &self.nonzero {
            let v = cond
                .eval(env)
                .map_err(|e| CatalogError::ParamOutOfDomain(e.to_string()))?;
            if v.is_zero() {
                return Err(CatalogError::ParamOutOfDomain(format!(
                    "{}/{} requires {} != 0",
                    self.algebra, self.case_name, cond
                )));
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone)]
pub struct AlgebraSpec {
    pub name: AlgebraName,
    /// Simply connected group realizing the algebra.
    pub group: String,
    pub param_names: Vec<String>,
    pub param_domains: Vec<String>,
    pub brackets: Vec<Bracket>,
    pub template: Vec<TemplateBranch>,
    pub families: Vec<MetricFamily>,
}

#[derive(Debug, Clone)]
pub struct Catalog {
    pub algebras: Vec<AlgebraSpec>,
}

impl Catalog {
    pub fn builtin() -> Catalog {
        Catalog {
            algebras: AlgebraName::ALL.iter().map(|&n| build_algebra(n)).collect(),
        }
    }

    pub fn algebra(&self, name: AlgebraName) -> &AlgebraSpec {
        self.algebras.iter().find(|a| a.name == name).unwrap()
    }

    pub fn algebra_mut(&mut self, name: AlgebraName) -> &mut AlgebraSpec {
        self.algebras.iter_mut().find(|a| a.name == name).unwrap()
    }

    pub fn to_json(&self) -> Value {
        Value::Array(self.algebras.iter().map(algebra_json).collect())
    }
}

fn algebra_json(a: &AlgebraSpec) -> Value {
    json!({
        "name": a.name.as_str(),
        "group": a.group,
        "params": a.param_names.iter().zip(&a.param_domains)
            .map(|(n, d)| json!({"name": n, "domain": d})).collect::<Vec<_>>(),
        "brackets": a.brackets.iter()
            .map(|b| json!([b.i, b.j, b.k, b.coeff.to_string()])).collect::<Vec<_>>(),
        "template": a.template.iter().map(|br| {
            br.iter().map(|row| row.iter().map(|c| c.to_string()).collect::<Vec<_>>())
                .collect::<Vec<_>>()
        }).collect::<Vec<_>>(),
        "families": a.families.iter().map(|f| json!({
            "case": f.case_name,
            "params": f.params.iter()
                .map(|p| json!({"name": p.name, "constraint": p.constraint.as_str()}))
                .collect::<Vec<_>>(),
            "nonzero": f.nonzero.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
            "u_pattern": f.u_pattern.iter()
                .map(|row| row.iter().map(|c| c.to_string()).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
            "closed_form": f.closed_form.iter()
                .map(|row| row.iter().map(|c| c.to_string()).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
            "expected": match &f.expected {
                Expected::Label(l) => json!(l.as_str()),
                Expected::Conditional { condition, if_zero, otherwise } => json!({
                    "condition_zero": condition.to_string(),
                    "if_zero": if_zero.as_str(),
                    "otherwise": otherwise.as_str(),
                }),
            },
        })).collect::<Vec<_>>(),
    })
}

/// Bracket tensor of a catalog algebra at its bound parameters.
pub fn get_algebra(cat: &Catalog, id: &AlgebraId) -> Result<StructureConstants, CatalogError> {
    validate_algebra_params(id.name, &id.params)?;
    StructureConstants::from_brackets(&cat.algebra(id.name).brackets, &id.params)
}

/// Automorphism-group template; errors for the four non-type-(R) entries.
pub fn get_aut_template(cat: &Catalog, id: &AlgebraId) -> Result<AutTemplate, CatalogError> {
    let spec = cat.algebra(id.name);
    if spec.template.is_empty() {
        return Err(CatalogError::NoTemplate(id.name.as_str().into()));
    }
    if id.name == A49b && id.params.get("beta").map_or(true, |b| b.is_zero()) {
        // the (1,2)-entry of the template divides by beta
        return Err(CatalogError::ParamOutOfDomain(
            "A49b template requires beta != 0".into(),
        ));
    }
    Ok(AutTemplate {
        algebra: id.name,
        branches: spec.template.clone(),
    })
}

/// All metric-representative families of a type-(R) catalog entry.
pub fn list_metric_families<'a>(
    cat: &'a Catalog,
    id: &AlgebraId,
) -> Result<&'a [MetricFamily], CatalogError> {
    let spec = cat.algebra(id.name);
    if spec.template.is_empty() {
        return Err(CatalogError::NoTemplate(id.name.as_str().into()));
    }
    Ok(&spec.families)
}

fn grid(rows: [[&str; 4]; 4]) -> [[Expr; 4]; 4] {
    rows.map(|row| row.map(e))
}

fn brackets(list: &[(usize, usize, usize, &str)]) -> Vec<Bracket> {
    list.iter()
        .map(|&(i, j, k, s)| Bracket {
            i,
            j,
            k,
            coeff: e(s),
        })
        .collect()
}

fn mp(name: &str, c: Constraint) -> MetricParamSpec {
    MetricParamSpec {
        name: name.into(),
        constraint: c,
    }
}

struct FamilyDef {
    case: &'static str,
    params: Vec<MetricParamSpec>,
    nonzero: Vec<Expr>,
    u: [[&'static str; 4]; 4],
    m: [[&'static str; 4]; 4],
    expected: Expected,
}

fn family(alg: AlgebraName, d: FamilyDef) -> MetricFamily {
    MetricFamily {
        algebra: alg,
        case_name: d.case.into(),
        params: d.params,
        nonzero: d.nonzero,
        u_pattern: grid(d.u),
        closed_form: grid(d.m),
        expected: d.expected,
    }
}

fn build_algebra(name: AlgebraName) -> AlgebraSpec {
    use Constraint::*;
    use Expected::Label;
    use GroupLabel::*;
    let fam = |d| family(name, d);
    match name {
        A2p2A1 => AlgebraSpec {
            name,
            group: "G_{2.1} x R^2".into(),
            param_names: vec![],
            param_domains: vec![],
            brackets: brackets(&[(1, 2, 2, "1")]),
            template: vec![grid([
                ["1", "0", "0", "0"],
                ["a5", "a6", "0", "0"],
                ["a9", "0", "a11", "a12"],
                ["a13", "0", "a15", "a16"],
            ])],
            families: vec![
                fam(FamilyDef {
                    case: "M1",
                    params: vec![mp("alpha", Positive)],
                    nonzero: vec![],
                    u: [
                        ["alpha", "0", "0", "0"],
                        ["0", "1", "0", "0"],
                        ["0", "0", "1", "0"],
                        ["0", "0", "0", "1"],
                    ],
                    m: [
                        ["1/alpha^2", "0", "0", "0"],
                        ["0", "1", "0", "0"],
                        ["0", "0", "1", "0"],
                        ["0", "0", "0", "1"],
                    ],
                    expected: Label(O2xZ2),
                }),
                fam(FamilyDef {
                    case: "M2",
                    params: vec![mp("alpha", Positive), mp("beta", NonZero)],
                    nonzero: vec![],
                    u: [
                        ["alpha", "beta", "0", "0"],
                        ["0", "1", "0", "0"],
                        ["0", "0", "1", "0"],
                        ["0", "0", "0", "1"],
                    ],
                    m: [
                        ["1/alpha^2", "-beta/alpha^2", "0", "0"],
                        ["-beta/alpha^2", "1 + beta^2/alpha^2", "0", "0"],
                        ["0", "0", "1", "0"],
                        ["0", "0", "0", "1"],
                    ],
                    expected: Label(O2),
                }),
                fam(FamilyDef {
                    case: "M3",
                    params: vec![mp("alpha", Positive), mp("lambda", NonZero)],
                    nonzero: vec![],
                    u: [
                        ["alpha", "0", "0", "0"],
                        ["0", "1", "lambda", "0"],
                        ["0", "0", "1", "0"],
                        ["0", "0", "0", "1"],
                    ],
                    m: [
                        ["1/alpha^2", "0", "0", "0"],
                        ["0", "1", "-lambda", "0"],
                        ["0", "-lambda", "1 + lambda^2", "0"],
                        ["0", "0", "0", "1"],
                    ],
                    expected: Label(Z2x2),
                }),
                fam(FamilyDef {
                    case: "M4",
                    params: vec![
                        mp("alpha", Positive),
                        mp("beta", NonZero),
                        mp("lambda", Positive),
                    ],
                    nonzero: vec![],
                    u: [
                        ["alpha", "beta", "0", "0"],
                        ["0", "1", "lambda", "0"],
                        ["0", "0", "1", "0"],
                        ["0", "0", "0", "1"],
                    ],
                    m: [
                        ["1/alpha^2", "-beta/alpha^2", "beta*lambda/alpha^2", "0"],
                        [
                            "-beta/alpha^2",
                            "1 + beta^2/alpha^2",
                            "-beta^2*lambda/alpha^2 - lambda",
                            "0",
                        ],
                        [
                            "beta*lambda/alpha^2",
                            "-beta^2*lambda/alpha^2 - lambda",
                            "1 + lambda^2 + beta^2*lambda^2/alpha^2",
                            "0",
                        ],
                        ["0", "0", "0", "1"],
                    ],
                    expected: Label(Z2),
                }),
                fam(FamilyDef {
                    case: "M5",
                    params: vec![
                        mp("alpha", Positive),
                        mp("beta", Positive),
                        mp("gamma", Positive),
                        mp("lambda", NonZero),
                        mp("delta", NonZero),
                    ],
                    nonzero: vec![],
                    u: [
                        ["alpha", "beta", "gamma", "0"],
                        ["0", "1", "lambda", "delta"],
                        ["0", "0", "1", "0"],
                        ["0", "0", "0", "1"],
                    ],
                    m: [
                        [
                            "1/alpha^2",
                            "-beta/alpha^2",
                            "(beta*lambda - gamma)/alpha^2",
                            "beta*delta/alpha^2",
                        ],
                        [
                            "-beta/alpha^2",
                            "beta^2/alpha^2 + 1",
                            "beta*(gamma - beta*lambda)/alpha^2 - lambda",
                            "-beta^2*delta/alpha^2 - delta",
                        ],
                        [
                            "(beta*lambda - gamma)/alpha^2",
                            "beta*(gamma - beta*lambda)/alpha^2 - lambda",
                            "(gamma - beta*lambda)^2/alpha^2 + lambda^2 + 1",
                            "-(gamma - beta*lambda)*beta*delta/alpha^2 + lambda*delta",
                        ],
                        [
                            "beta*delta/alpha^2",
                            "-beta^2*delta/alpha^2 - delta",
                            "-(gamma - beta*lambda)*beta*delta/alpha^2 + lambda*delta",
                            "beta^2*delta^2/alpha^2 + delta^2 + 1",
                        ],
                    ],
                    expected: Label(Trivial),
                }),
            ],
        },
        TwoA2 => AlgebraSpec {
            name,
            group: "G_2".into(),
            param_names: vec![],
            param_domains: vec![],
            brackets: brackets(&[(1, 2, 2, "1"), (3, 4, 4, "1")]),
            template: vec![
                grid([
                    ["1", "0", "0", "0"],
                    ["a5", "a6", "0", "0"],
                    ["0", "0", "1", "0"],
                    ["0", "0", "a15", "a16"],
                ]),
                grid([
                    ["0", "0", "1", "0"],
                    ["0", "0", "a7", "a8"],
                    ["1", "0", "0", "0"],
                    ["a13", "a14", "0", "0"],
                ]),
            ],
            families: vec![
                fam(FamilyDef {
                    case: "M1",
                    params: vec![mp("alpha", Positive)],
                    nonzero: vec![],
                    u: [
                        ["alpha", "0", "0", "0"],
                        ["0", "1", "0", "0"],
                        ["0", "0", "alpha", "0"],
                        ["0", "0", "0", "1"],
                    ],
                    m: [
                        ["1/alpha^2", "0", "0", "0"],
                        ["0", "1", "0", "0"],
                        ["0", "0", "1/alpha^2", "0"],
                        ["0", "0", "0", "1"],
                    ],
                    expected: Label(D4),
                }),
                fam(FamilyDef {
                    case: "M2",
                    params: vec![mp("alpha", Positive), mp("mu", Positive)],
                    nonzero: vec![e("alpha - mu")],
                    u: [
                        ["alpha", "0", "0", "0"],
                        ["0", "1", "0", "0"],
                        ["0", "0", "mu", "0"],
                        ["0", "0", "0", "1"],
                    ],
                    m: [
                        ["1/alpha^2", "0", "0", "0"],
                        ["0", "1", "0", "0"],
                        ["0", "0", "1/mu^2", "0"],
                        ["0", "0", "0", "1"],
                    ],
                    expected: Label(Z2x2),
                }),
                fam(FamilyDef {
                    case: "M3",
                    params: vec![
                        mp("alpha", Positive),
                        mp("beta", Positive),
                        mp("mu", Positive),
                    ],
                    nonzero: vec![],
                    u: [
                        ["alpha", "beta", "0", "0"],
                        ["0", "1", "0", "0"],
                        ["0", "0", "mu", "0"],
                        ["0", "0", "0", "1"],
                    ],
                    m: [
                        ["1/alpha^2", "-beta/alpha^2", "0", "0"],
                        ["-beta/alpha^2", "1 + beta^2/alpha^2", "0", "0"],
                        ["0", "0", "1/mu^2", "0"],
                        ["0", "0", "0", "1"],
                    ],
                    expected: Label(Z2),
                }),
                fam(FamilyDef {
                    case: "M4",
                    params: vec![
                        mp("alpha", Positive),
                        mp("beta", Positive),
                        mp("mu", Positive),
                        mp("nu", NonZero),
                    ],
                    nonzero: vec![],
                    u: [
                        ["alpha", "beta", "0", "nu"],
                        ["0", "1", "0", "0"],
                        ["0", "0", "mu", "0"],
                        ["0", "0", "0", "1"],
                    ],
                    m: [
                        ["1/alpha^2", "-beta/alpha^2", "0", "-nu/alpha^2"],
                        [
                            "-beta/alpha^2",
                            "1 + beta^2/alpha^2",
                            "0",
                            "beta*nu/alpha^2",
                        ],
                        ["0", "0", "1/mu^2", "0"],
                        ["-nu/alpha^2", "beta*nu/alpha^2", "0", "1 + nu^2/alpha^2"],
                    ],
                    expected: Label(Trivial),
                }),
                fam(FamilyDef {
                    case: "Mgamma",
                    params: vec![
                        mp("alpha", Positive),
                        mp("mu", Positive),
                        mp("gamma", NonZero),
                    ],
                    nonzero: vec![],
                    u: [
                        ["alpha", "0", "gamma", "0"],
                        ["0", "1", "0", "0"],
                        ["0", "0", "mu", "0"],
                        ["0", "0", "0", "1"],
                    ],
                    m: [
                        ["1/alpha^2", "0", "-gamma/(alpha^2*mu)", "0"],
                        ["0", "1", "0", "0"],
                        [
                            "-gamma/(alpha^2*mu)",
                            "0",
                            "gamma^2/(alpha^2*mu^2) + 1/mu^2",
                            "0",
                        ],
                        ["0", "0", "0", "1"],
                    ],
                    expected: Expected::Conditional {
                        condition: e("mu^2 - alpha^2 - gamma^2"),
                        if_zero: D4,
                        otherwise: Z2x2,
                    },
                }),
                fam(FamilyDef {
                    case: "Mnu",
                    params: vec![
                        mp("alpha", Positive),
                        mp("mu", Positive),
                        mp("nu", NonZero),
                    ],
                    nonzero: vec![],
                    u: [
                        ["alpha", "0", "0", "nu"],
                        ["0", "1", "0", "0"],
                        ["0", "0", "mu", "0"],
                        ["0", "0", "0", "1"],
                    ],
                    m: [
                        ["1/alpha^2", "0", "0", "-nu/alpha^2"],
                        ["0", "1", "0", "0"],
                        ["0", "0", "1/mu^2", "0"],
                        ["-nu/alpha^2", "0", "0", "nu^2/alpha^2 + 1"],
                    ],
                    expected: Label(Z2),
                }),
            ],
        },
        A32pA1 => AlgebraSpec {
            name,
            group: "G_{3.2} x R".into(),
            param_names: vec![],
            param_domains: vec![],
            brackets: brackets(&[(1, 3, 1, "1"), (2, 3, 1, "1"), (2, 3, 2, "1")]),
            template: vec![grid([
                ["a1", "a2", "a3", "0"],
                ["0", "a1", "a7", "0"],
                ["0", "0", "1", "0"],
                ["0", "0", "a15", "a16"],
            ])],
            families: vec![
                fam(FamilyDef {
                    case: "M1",
                    params: vec![mp("alpha", Positive), mp("beta", Positive)],
                    nonzero: vec![],
                    u: diag_u(["alpha", "1", "beta", "1"]),
                    m: [
                        ["1/alpha^2", "0", "0", "0"],
                        ["0", "1", "0", "0"],
                        ["0", "0", "1/beta^2", "0"],
                        ["0", "0", "0", "1"],
                    ],
                    expected: Label(Z2x2),
                }),
                fam(FamilyDef {
                    case: "M2",
                    params: vec![
                        mp("alpha", Positive),
                        mp("beta", Positive),
                        mp("gamma", NonZero),
                    ],
                    nonzero: vec![],
                    u: [
                        ["alpha", "0", "0", "gamma"],
                        ["0", "1", "0", "0"],
                        ["0", "0", "beta", "0"],
                        ["0", "0", "0", "1"],
                    ],
                    m: [
                        ["1/alpha^2", "0", "0", "-gamma/alpha^2"],
                        ["0", "1", "0", "0"],
                        ["0", "0", "1/beta^2", "0"],
                        ["-gamma/alpha^2", "0", "0", "gamma^2/alpha^2 + 1"],
                    ],
                    expected: Label(Z2),
                }),
                fam(FamilyDef {
                    case: "M3",
                    params: vec![
                        mp("alpha", Positive),
                        mp("beta", Positive),
                        mp("gamma", NonZero),
                        mp("mu", Positive),
                    ],
                    nonzero: vec![],
                    u: [
                        ["alpha", "0", "0", "gamma"],
                        ["0", "1", "0", "0"],
                        ["0", "0", "beta", "mu"],
                        ["0", "0", "0", "1"],
                    ],
                    m: [
                        ["1/alpha^2", "0", "0", "-gamma/alpha^2"],
                        ["0", "1", "0", "0"],
                        ["0", "0", "1/beta^2", "-mu/beta^2"],
                        [
                            "-gamma/alpha^2",
                            "0",
                            "-mu/beta^2",
                            "gamma^2/alpha^2 + mu^2/beta^2 + 1",
                        ],
                    ],
                    expected: Label(Trivial),
                }),
            ],
        },
        A33pA1 => AlgebraSpec {
            name,
            group: "G_{3.3} x R".into(),
            param_names: vec![],
            param_domains: vec![],
            brackets: brackets(&[(1, 3, 1, "1"), (2, 3, 2, "1")]),
            template: vec![grid([
                ["a1", "a2", "a3", "0"],
                ["a5", "a6", "a7", "0"],
                ["0", "0", "1", "0"],
                ["0", "0", "a15", "a16"],
            ])],
            families: vec![
                fam(FamilyDef {
                    case: "M1",
                    params: vec![mp("alpha", Positive)],
                    nonzero: vec![],
                    u: diag_u(["1", "1", "alpha", "1"]),
                    m: [
                        ["1", "0", "0", "0"],
                        ["0", "1", "0", "0"],
                        ["0", "0", "1/alpha^2", "0"],
                        ["0", "0", "0", "1"],
                    ],
                    expected: Label(O2xZ2),
                }),
                fam(FamilyDef {
                    case: "M2",
                    params: vec![mp("alpha", Positive), mp("gamma", Positive)],
                    nonzero: vec![],
                    u: [
                        ["1", "0", "0", "0"],
                        ["0", "1", "0", "0"],
                        ["0", "0", "alpha", "gamma"],
                        ["0", "0", "0", "1"],
                    ],
                    m: [
                        ["1", "0", "0", "0"],
                        ["0", "1", "0", "0"],
                        ["0", "0", "1/alpha^2", "-gamma/alpha^2"],
                        ["0", "0", "-gamma/alpha^2", "1 + gamma^2/alpha^2"],
                    ],
                    expected: Label(O2),
                }),
                fam(FamilyDef {
                    case: "M3",
                    params: vec![mp("alpha", Positive), mp("beta", Positive)],
                    nonzero: vec![],
                    u: [
                        ["1", "0", "0", "beta"],
                        ["0", "1", "0", "0"],
                        ["0", "0", "alpha", "0"],
                        ["0", "0", "0", "1"],
                    ],
                    m: [
                        ["1", "0", "0", "-beta"],
                        ["0", "1", "0", "0"],
                        ["0", "0", "1/alpha^2", "0"],
                        ["-beta", "0", "0", "beta^2 + 1"],
                    ],
                    expected: Label(Z2x2),
                }),
                fam(FamilyDef {
                    case: "M4",
                    params: vec![
                        mp("alpha", Positive),
                        mp("beta", Positive),
                        mp("gamma", Positive),
                    ],
                    nonzero: vec![],
                    u: [
                        ["1", "0", "0", "beta"],
                        ["0", "1", "0", "0"],
                        ["0", "0", "alpha", "gamma"],
                        ["0", "0", "0", "1"],
                    ],
                    m: [
                        ["1", "0", "0", "-beta"],
                        ["0", "1", "0", "0"],
                        ["0", "0", "1/alpha^2", "-gamma/alpha^2"],
                        ["-beta", "0", "-gamma/alpha^2", "beta^2 + 1 + gamma^2/alpha^2"],
                    ],
                    expected: Label(Z2),
                }),
            ],
        },
        A35apA1 => AlgebraSpec {
            name,
            group: "G_c x R".into(),
            param_names: vec!["alpha".into()],
            param_domains: vec!["0 < |alpha| < 1".into()],
            brackets: brackets(&[(1, 3, 1, "1"), (2, 3, 2, "alpha")]),
            template: vec![grid([
                ["a1", "0", "a3", "0"],
                ["0", "a6", "a7", "0"],
                ["0", "0", "1", "0"],
                ["0", "0", "a15", "a16"],
            ])],
            families: vec![
                fam(FamilyDef {
                    case: "M1",
                    params: vec![mp("beta", Positive)],
                    nonzero: vec![],
                    u: diag_u(["1", "1", "beta", "1"]),
                    m: [
                        ["1", "0", "0", "0"],
                        ["0", "1", "0", "0"],
                        ["0", "0", "1/beta^2", "0"],
                        ["0", "0", "0", "1"],
                    ],
                    expected: Label(Z2x3),
                }),
                fam(FamilyDef {
                    case: "M2",
                    params: vec![mp("beta", Positive), mp("lambda", Positive)],
                    nonzero: vec![],
                    u: [
                        ["1", "0", "0", "0"],
                        ["0", "1", "0", "lambda"],
                        ["0", "0", "beta", "0"],
                        ["0", "0", "0", "1"],
                    ],
                    m: [
                        ["1", "0", "0", "0"],
                        ["0", "1", "0", "-lambda"],
                        ["0", "0", "1/beta^2", "0"],
                        ["0", "-lambda", "0", "lambda^2 + 1"],
                    ],
                    expected: Label(Z2x2),
                }),
                fam(FamilyDef {
                    case: "M3",
                    params: vec![
                        mp("alpha", NonZero),
                        mp("beta", Positive),
                        mp("lambda", Positive),
                    ],
                    nonzero: vec![],
                    u: [
                        ["1", "alpha", "0", "0"],
                        ["0", "1", "0", "lambda"],
                        ["0", "0", "beta", "0"],
                        ["0", "0", "0", "1"],
                    ],
                    m: [
                        ["1", "-alpha", "0", "alpha*lambda"],
                        ["-alpha", "1 + alpha^2", "0", "-alpha^2*lambda - lambda"],
                        ["0", "0", "1/beta^2", "0"],
                        [
                            "alpha*lambda",
                            "-alpha^2*lambda - lambda",
                            "0",
                            "alpha^2*lambda^2 + lambda^2 + 1",
                        ],
                    ],
                    expected: Label(Z2),
                }),
                fam(FamilyDef {
                    case: "M4",
                    params: vec![
                        mp("alpha", NonZero),
                        mp("beta", Positive),
                        mp("lambda", Positive),
                        mp("mu", Positive),
                    ],
                    nonzero: vec![],
                    u: [
                        ["1", "alpha", "0", "0"],
                        ["0", "1", "0", "lambda"],
                        ["0", "0", "beta", "mu"],
                        ["0", "0", "0", "1"],
                    ],
                    m: [
                        ["1", "-alpha", "0", "alpha*lambda"],
                        ["-alpha", "1 + alpha^2", "0", "-alpha^2*lambda - lambda"],
                        ["0", "0", "1/beta^2", "-mu/beta^2"],
                        [
                            "alpha*lambda",
                            "-alpha^2*lambda - lambda",
                            "-mu/beta^2",
                            "alpha^2*lambda^2 + lambda^2 + mu^2/beta^2 + 1",
                        ],
                    ],
                    expected: Label(Trivial),
                }),
            ],
        },
        A37apA1 => AlgebraSpec {
            name,
            group: "G_{3.7}^alpha x R".into(),
            param_names: vec!["alpha".into()],
            param_domains: vec!["alpha > 0".into()],
            brackets: brackets(&[
                (1, 3, 1, "alpha"),
                (1, 3, 2, "-1"),
                (2, 3, 1, "1"),
                (2, 3, 2, "alpha"),
            ]),
            template: vec![],
            families: vec![],
        },
        A42a => AlgebraSpec {
            name,
            group: "G_{4.2}^alpha".into(),
            param_names: vec!["alpha".into()],
            param_domains: vec!["alpha not in {0, 1, -2}".into()],
            brackets: brackets(&[
                (1, 4, 1, "alpha"),
                (2, 4, 2, "1"),
                (3, 4, 2, "1"),
                (3, 4, 3, "1"),
            ]),
            template: vec![grid([
                ["a1", "0", "0", "a4"],
                ["0", "a6", "a7", "a8"],
                ["0", "0", "a6", "a12"],
                ["0", "0", "0", "1"],
            ])],
            families: a42_style_families(name, "lambda"),
        },
        A421 => AlgebraSpec {
            name,
            group: "G_{4.2}^1".into(),
            param_names: vec![],
            param_domains: vec![],
            brackets: brackets(&[
                (1, 4, 1, "1"),
                (2, 4, 2, "1"),
                (3, 4, 2, "1"),
                (3, 4, 3, "1"),
            ]),
            template: vec![grid([
                ["a1", "0", "a3", "a4"],
                ["a5", "a6", "a7", "a8"],
                ["0", "0", "a6", "a12"],
                ["0", "0", "0", "1"],
            ])],
            families: a42_style_families(name, "gamma"),
        },
        A43 => AlgebraSpec {
            name,
            group: "G_{4.3}".into(),
            param_names: vec![],
            param_domains: vec![],
            brackets: brackets(&[(1, 4, 1, "1"), (3, 4, 2, "1")]),
            template: vec![grid([
                ["a1", "0", "0", "a4"],
                ["0", "a6", "a7", "a8"],
                ["0", "0", "a6", "a12"],
                ["0", "0", "0", "1"],
            ])],
            families: a42_style_families(name, "lambda"),
        },
        A44 => AlgebraSpec {
            name,
            group: "G_{4.4}".into(),
            param_names: vec![],
            param_domains: vec![],
            brackets: brackets(&[
                (1, 4, 1, "1"),
                (2, 4, 1, "1"),
                (2, 4, 2, "1"),
                (3, 4, 2, "1"),
                (3, 4, 3, "1"),
            ]),
            template: vec![grid([
                ["a1", "a2", "a3", "a4"],
                ["0", "a1", "a2", "a8"],
                ["0", "0", "a1", "a12"],
                ["0", "0", "0", "1"],
            ])],
            families: vec![fam(FamilyDef {
                case: "M1",
                params: vec![
                    mp("beta", Positive),
                    mp("gamma", Positive),
                    mp("lambda", Positive),
                ],
                nonzero: vec![],
                u: diag_u(["1", "beta", "gamma", "lambda"]),
                m: [
                    ["1", "0", "0", "0"],
                    ["0", "1/beta^2", "0", "0"],
                    ["0", "0", "1/gamma^2", "0"],
                    ["0", "0", "0", "1/lambda^2"],
                ],
                expected: Label(Z2),
            })],
        },
        A45ab => AlgebraSpec {
            name,
            group: "G_{4.5}^{alpha,beta}".into(),
            param_names: vec!["alpha".into(), "beta".into()],
            param_domains: vec![
                "alpha*beta != 0, -1 <= alpha <= beta <= 1, alpha + beta != -1".into(),
                "see alpha".into(),
            ],
            brackets: brackets(&[(1, 4, 1, "1"), (2, 4, 2, "alpha"), (3, 4, 3, "beta")]),
            template: vec![grid([
                ["a1", "0", "0", "a4"],
                ["0", "a6", "0", "a8"],
                ["0", "0", "a11", "a12"],
                ["0", "0", "0", "1"],
            ])],
            families: vec![
                fam(FamilyDef {
                    case: "M1",
                    params: vec![mp("lambda", Positive)],
                    nonzero: vec![],
                    u: diag_u(["1", "1", "1", "lambda"]),
                    m: [
                        ["1", "0", "0", "0"],
                        ["0", "1", "0", "0"],
                        ["0", "0", "1", "0"],
                        ["0", "0", "0", "1/lambda^2"],
                    ],
                    expected: Label(Z2x3),
                }),
                fam(FamilyDef {
                    case: "M2",
                    params: vec![mp("alpha", Positive), mp("lambda", Positive)],
                    nonzero: vec![],
                    u: [
                        ["1", "alpha", "0", "0"],
                        ["0", "1", "0", "0"],
                        ["0", "0", "1", "0"],
                        ["0", "0", "0", "lambda"],
                    ],
                    m: [
                        ["1", "-alpha", "0", "0"],
                        ["-alpha", "1 + alpha^2", "0", "0"],
                        ["0", "0", "1", "0"],
                        ["0", "0", "0", "1/lambda^2"],
                    ],
                    expected: Label(Z2x2),
                }),
                fam(FamilyDef {
                    case: "M3",
                    params: vec![
                        mp("alpha", Positive),
                        mp("beta", Positive),
                        mp("gamma", Free),
                        mp("lambda", Positive),
                    ],
                    nonzero: vec![],
                    u: [
                        ["1", "alpha", "beta", "0"],
                        ["0", "1", "gamma", "0"],
                        ["0", "0", "1", "0"],
                        ["0", "0", "0", "lambda"],
                    ],
                    m: [
                        ["1", "-alpha", "alpha*gamma - beta", "0"],
                        [
                            "-alpha",
                            "1 + alpha^2",
                            "-alpha*(alpha*gamma - beta) - gamma",
                            "0",
                        ],
                        [
                            "alpha*gamma - beta",
                            "-alpha*(alpha*gamma - beta) - gamma",
                            "(alpha*gamma - beta)^2 + gamma^2 + 1",
                            "0",
                        ],
                        ["0", "0", "0", "1/lambda^2"],
                    ],
                    expected: Label(Z2),
                }),
            ],
        },
        A46ab => AlgebraSpec {
            name,
            group: "G_{4.6}^{alpha,beta}".into(),
            param_names: vec!["alpha".into(), "beta".into()],
            param_domains: vec![
                "alpha != 0, alpha != -2*beta".into(),
                "beta >= 0".into(),
            ],
            brackets: brackets(&[
                (1, 4, 1, "alpha"),
                (2, 4, 2, "beta"),
                (2, 4, 3, "-1"),
                (3, 4, 2, "1"),
                (3, 4, 3, "beta"),
            ]),
            template: vec![],
            families: vec![],
        },
        A47 => AlgebraSpec {
            name,
            group: "G_{4.7}".into(),
            param_names: vec![],
            param_domains: vec![],
            brackets: brackets(&[
                (2, 3, 1, "1"),
                (1, 4, 1, "2"),
                (2, 4, 2, "1"),
                (3, 4, 2, "1"),
                (3, 4, 3, "1"),
            ]),
            template: vec![grid([
                ["a6^2", "-a12*a6", "-a12*(a6 + a7) + a6*a8", "a4"],
                ["0", "a6", "a7", "a8"],
                ["0", "0", "a6", "a12"],
                ["0", "0", "0", "1"],
            ])],
            families: vec![
                fam(FamilyDef {
                    case: "M1",
                    params: vec![
                        mp("alpha", Positive),
                        mp("lambda", Positive),
                        mp("mu", Positive),
                    ],
                    nonzero: vec![],
                    u: diag_u(["alpha", "1", "lambda", "mu"]),
                    m: [
                        ["1/alpha^2", "0", "0", "0"],
                        ["0", "1", "0", "0"],
                        ["0", "0", "1/lambda^2", "0"],
                        ["0", "0", "0", "1/mu^2"],
                    ],
                    expected: Label(Z2),
                }),
                fam(FamilyDef {
                    case: "M2",
                    params: vec![
                        mp("alpha", Positive),
                        mp("beta", NonZero),
                        mp("lambda", Positive),
                        mp("mu", Positive),
                    ],
                    nonzero: vec![],
                    u: [
                        ["alpha", "beta", "0", "0"],
                        ["0", "1", "0", "0"],
                        ["0", "0", "lambda", "0"],
                        ["0", "0", "0", "mu"],
                    ],
                    m: [
                        ["1/alpha^2", "-beta/alpha^2", "0", "0"],
                        ["-beta/alpha^2", "1 + beta^2/alpha^2", "0", "0"],
                        ["0", "0", "1/lambda^2", "0"],
                        ["0", "0", "0", "1/mu^2"],
                    ],
                    expected: Label(Trivial),
                }),
            ],
        },
        A49b => AlgebraSpec {
            name,
            group: "G_{4.8}^alpha".into(),
            param_names: vec!["beta".into()],
            param_domains: vec!["-1 < beta <= 1".into()],
            brackets: brackets(&[
                (2, 3, 1, "1"),
                (1, 4, 1, "1 + beta"),
                (2, 4, 2, "1"),
                (3, 4, 3, "beta"),
            ]),
            template: vec![grid([
                ["a11*a6", "-a12*a6/beta", "a8*a11", "a4"],
                ["0", "a6", "0", "a8"],
                ["0", "0", "a11", "a12"],
                ["0", "0", "0", "1"],
            ])],
            families: vec![
                fam(FamilyDef {
                    case: "M1",
                    params: vec![mp("alpha", Positive), mp("mu", Positive)],
                    nonzero: vec![],
                    u: diag_u(["alpha", "1", "1", "mu"]),
                    m: [
                        ["1/alpha^2", "0", "0", "0"],
                        ["0", "1", "0", "0"],
                        ["0", "0", "1", "0"],
                        ["0", "0", "0", "1/mu^2"],
                    ],
                    expected: Label(Z2x2),
                }),
                fam(FamilyDef {
                    case: "M2",
                    params: vec![
                        mp("alpha", Positive),
                        mp("eta", Positive),
                        mp("mu", Positive),
                    ],
                    nonzero: vec![],
                    u: [
                        ["alpha", "eta", "0", "0"],
                        ["0", "1", "0", "0"],
                        ["0", "0", "1", "0"],
                        ["0", "0", "0", "mu"],
                    ],
                    m: [
                        ["1/alpha^2", "-eta/alpha^2", "0", "0"],
                        ["-eta/alpha^2", "1 + eta^2/alpha^2", "0", "0"],
                        ["0", "0", "1", "0"],
                        ["0", "0", "0", "1/mu^2"],
                    ],
                    expected: Label(Z2),
                }),
                fam(FamilyDef {
                    case: "M3",
                    params: vec![
                        mp("alpha", Positive),
                        mp("eta", Positive),
                        mp("lambda", NonZero),
                        mp("mu", Positive),
                    ],
                    nonzero: vec![],
                    u: [
                        ["alpha", "eta", "0", "0"],
                        ["0", "1", "lambda", "0"],
                        ["0", "0", "1", "0"],
                        ["0", "0", "0", "mu"],
                    ],
                    m: [
                        ["1/alpha^2", "-eta/alpha^2", "eta*lambda/alpha^2", "0"],
                        [
                            "-eta/alpha^2",
                            "1 + eta^2/alpha^2",
                            "-eta^2*lambda/alpha^2 - lambda",
                            "0",
                        ],
                        [
                            "eta*lambda/alpha^2",
                            "-eta^2*lambda/alpha^2 - lambda",
                            "lambda^2 + 1 + eta^2*lambda^2/alpha^2",
                            "0",
                        ],
                        ["0", "0", "0", "1/mu^2"],
                    ],
                    expected: Label(Trivial),
                }),
            ],
        },
        A411a => AlgebraSpec {
            name,
            group: "G_{4.11}^alpha".into(),
            param_names: vec!["alpha".into()],
            param_domains: vec!["alpha > 0".into()],
            brackets: brackets(&[
                (2, 3, 1, "1"),
                (1, 4, 1, "2*alpha"),
                (2, 4, 2, "alpha"),
                (2, 4, 3, "-1"),
                (3, 4, 2, "1"),
                (3, 4, 3, "alpha"),
            ]),
            template: vec![],
            families: vec![],
        },
        A412 => AlgebraSpec {
            name,
            group: "G_{4.12}".into(),
            param_names: vec![],
            param_domains: vec![],
            brackets: brackets(&[
                (1, 3, 1, "1"),
                (2, 3, 2, "1"),
                (1, 4, 2, "-1"),
                (2, 4, 1, "1"),
            ]),
            template: vec![],
            families: vec![],
        },
    }
}

fn diag_u(d: [&str; 4]) -> [[&'static str; 4]; 4] {
    // helper for string grids; only the literal names used in this file
    let mut g = [["0"; 4]; 4];
    for (i, s) in d.into_iter().enumerate() {
        g[i][i] = match s {
            "1" => "1",
            "alpha" => "alpha",
            "beta" => "beta",
            "gamma" => "gamma",
            "lambda" => "lambda",
            "mu" => "mu",
            other => panic!("unexpected diagonal symbol {other}"),
        };
    }
    g
}

/// Shared family shapes for the three algebras whose metric sections coincide
/// up to the name of the last diagonal parameter.
fn a42_style_families(alg: AlgebraName, last: &'static str) -> Vec<MetricFamily> {
    use Constraint::*;
    let inv_last: &str = match last {
        "lambda" => "1/lambda^2",
        "gamma" => "1/gamma^2",
        _ => unreachable!(),
    };
    vec![
        family(
            alg,
            FamilyDef {
                case: "M1",
                params: vec![mp("beta", Positive), mp(last, Positive)],
                nonzero: vec![],
                u: diag_u(["1", "beta", "1", last]),
                m: [
                    ["1", "0", "0", "0"],
                    ["0", "1/beta^2", "0", "0"],
                    ["0", "0", "1", "0"],
                    ["0", "0", "0", inv_last],
                ],
                expected: Expected::Label(GroupLabel::Z2x2),
            },
        ),
        family(
            alg,
            FamilyDef {
                case: "M2",
                params: vec![mp("alpha", Positive), mp("beta", Positive), mp(last, Positive)],
                nonzero: vec![],
                u: [
                    ["1", "alpha", "0", "0"],
                    ["0", "beta", "0", "0"],
                    ["0", "0", "1", "0"],
                    ["0", "0", "0", last],
                ],
                m: [
                    ["1", "-alpha/beta", "0", "0"],
                    ["-alpha/beta", "(alpha^2 + 1)/beta^2", "0", "0"],
                    ["0", "0", "1", "0"],
                    ["0", "0", "0", inv_last],
                ],
                expected: Expected::Label(GroupLabel::Z2),
            },
        ),
    ]
}

//! Group codes: ideals of KG read as linear codes of length `|G|`.

use std::fmt;

use crate::algebra::{GroupAlgebra, IdealSide, IdealSubspace, Side};
use crate::distance::{min_distance, weight_distribution, Distance, DistanceOptions};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{Matrix, Subspace};

/// An ideal viewed as a code, with its minimum distance once computed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodeSubspace {
    ideal: IdealSubspace,
    distance: Option<Distance>,
}

impl CodeSubspace {
    pub fn new(ideal: IdealSubspace) -> CodeSubspace {
        CodeSubspace { ideal, distance: None }
    }

    pub fn n(&self) -> usize {
        self.ideal.space().ambient_dim()
    }

    pub fn k(&self) -> usize {
        self.ideal.dim()
    }

    pub fn ideal(&self) -> &IdealSubspace {
        &self.ideal
    }

    pub fn space(&self) -> &Subspace {
        self.ideal.space()
    }

    pub fn distance(&self) -> Option<Distance> {
        self.distance
    }

    /// Runs [`min_distance`] and caches the result. `None` for the zero code.
    pub fn compute_distance(&mut self, opts: &DistanceOptions) -> Result<Option<Distance>> {
        let d = min_distance(self.ideal.space(), opts)?;
        self.distance = d;
        Ok(d)
    }

    pub fn weight_distribution(&self, budget: u128) -> Result<Vec<u128>> {
        weight_distribution(self.ideal.space(), budget)
    }

    /// `[n,k,d]`, with `d` shown as `?` before computation, `-` for the zero code and
    /// `<=d` when only bounded.
    pub fn params(&self) -> String {
        let d = match (self.distance, self.k()) {
            (_, 0) => "-".to_string(),
            (None, _) => "?".to_string(),
            (Some(d), _) if d.method == crate::distance::DistanceMethod::Bounded => format!("<={}", d.d),
            (Some(d), _) => d.d.to_string(),
        };
        format!("[{},{},{}]", self.n(), self.k(), d)
    }
}

impl fmt::Display for CodeSubspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.params())
    }
}

/// `C^⊥` under the standard form `⟨g,h⟩ = δ_{g,h}`, with closure flags re-verified.
pub fn dual_code(alg: &GroupAlgebra, c: &CodeSubspace) -> Result<CodeSubspace> {
    let dual = alg.ideal(c.space().orthogonal())?;
    Ok(CodeSubspace::new(dual))
}

/// Applies the hat map to every vector of a subspace.
pub fn hat_subspace(alg: &GroupAlgebra, s: &Subspace) -> Subspace {
    Subspace::span(alg.field(), alg.dim(), s.vectors().map(|v| alg.hat_raw(v)))
}

/// Cross-checks `C^⊥` from the nullspace against `hat(ann_l(C))`.
pub fn macwilliams_dual_check(alg: &GroupAlgebra, c: &IdealSubspace) -> Result<bool> {
    if !c.side().is_right() {
        return Err(Error::NotARightIdeal);
    }
    let via_nullspace = c.space().orthogonal();
    let via_annihilator = hat_subspace(alg, alg.annihilator(c.space(), Side::Left).space());
    Ok(via_nullspace == via_annihilator)
}

/// On-disk code: a `group=<id> field=<spec> side=<flag>` line followed by a matrix in
/// the text form of [`Matrix::to_text`] whose rows span the code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodeFile {
    pub group: String,
    pub field: Field,
    pub side: IdealSide,
    pub generators: Matrix,
}

impl CodeFile {
    pub fn from_code(group: &str, code: &CodeSubspace) -> CodeFile {
        CodeFile {
            group: group.to_string(),
            field: code.space().field().clone(),
            side: code.ideal().side(),
            generators: code.space().basis().clone(),
        }
    }

    pub fn to_text(&self) -> String {
        format!(
            "group={} field={} side={}\n{}",
            self.group,
            self.field.spec(),
            self.side.as_str(),
            self.generators.to_text()
        )
    }

    pub fn from_text(text: &str) -> Result<CodeFile> {
        let bad = |m: &str| Error::MatrixFormat(m.to_string());
        let (header, body) = text.trim_start().split_once('\n').ok_or_else(|| bad("missing code header"))?;
        let (mut group, mut field, mut side) = (None, None, IdealSide::None);
        for tok in header.split_whitespace() {
            let (key, value) = tok.split_once('=').ok_or_else(|| bad("header entries must be key=value"))?;
            match key {
                "group" => group = Some(value.to_string()),
                "field" => field = Some(value.parse::<Field>()?),
                "side" => side = IdealSide::parse(value).ok_or_else(|| bad("unknown side flag"))?,
                _ => return Err(bad(&format!("unknown header key {key:?}"))),
            }
        }
        let group = group.ok_or_else(|| bad("header lacks group="))?;
        let field = field.ok_or_else(|| bad("header lacks field="))?;
        let generators = Matrix::from_text(&field, body)?;
        Ok(CodeFile { group, field, side, generators })
    }

    /// Builds the code in `alg`. The declared side is advisory; flags are recomputed.
    pub fn into_code(self, alg: &GroupAlgebra) -> Result<CodeSubspace> {
        if &self.field != alg.field() {
            return Err(Error::FieldMismatch);
        }
        if self.generators.cols() != alg.dim() {
            return Err(Error::AmbientMismatch);
        }
        let ideal = alg.ideal(Subspace::row_space(&self.generators))?;
        Ok(CodeSubspace::new(ideal))
    }
}

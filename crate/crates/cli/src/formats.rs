//! Text and JSON interchange formats.
//!
//! Graphs: first line `n m`, then `m` lines `u v` with 1-indexed endpoints.
//! Set systems: first line `n m`, then `m` lines listing each member's
//! elements (a blank line is the empty member). Profiles and step models use
//! small JSON schemas. All writers emit LF line endings.

use std::fmt;

use edl_core::{Graph, Profile, SetSystem, StepFn, StepModel};
use serde::Deserialize;

use crate::json::{fmt_f64, Json};

#[derive(Debug)]
pub struct FormatError(pub String);

impl fmt::Display for FormatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl std::error::Error for FormatError {}

fn err(msg: impl Into<String>) -> FormatError {
    FormatError(msg.into())
}

fn parse_header(line: Option<&str>) -> Result<(usize, usize), FormatError> {
    let line = line.ok_or_else(|| err("missing header line 'n m'"))?;
    let mut parts = line.split_whitespace();
    let n = parts
        .next()
        .ok_or_else(|| err("missing vertex count in header"))?
        .parse::<usize>()
        .map_err(|e| err(format!("bad vertex count: {e}")))?;
    let m = parts
        .next()
        .ok_or_else(|| err("missing member count in header"))?
        .parse::<usize>()
        .map_err(|e| err(format!("bad member count: {e}")))?;
    if parts.next().is_some() {
        return Err(err("header has trailing tokens"));
    }
    Ok((n, m))
}

pub fn read_graph(text: &str) -> Result<Graph, FormatError> {
    let mut lines = text.lines();
    let (n, m) = parse_header(lines.next())?;
    let mut edges = Vec::with_capacity(m);
    for i in 0..m {
        let line = lines.next().ok_or_else(|| err(format!("expected {m} edges, found {i}")))?;
        let mut parts = line.split_whitespace();
        let u = parts
            .next()
            .ok_or_else(|| err(format!("edge line {} is empty", i + 1)))?
            .parse::<usize>()
            .map_err(|e| err(format!("edge line {}: {e}", i + 1)))?;
        let v = parts
            .next()
            .ok_or_else(|| err(format!("edge line {} has one endpoint", i + 1)))?
            .parse::<usize>()
            .map_err(|e| err(format!("edge line {}: {e}", i + 1)))?;
        if parts.next().is_some() {
            return Err(err(format!("edge line {} has trailing tokens", i + 1)));
        }
        edges.push((u, v));
    }
    Graph::from_edge_list(n, &edges).map_err(|e| err(e.to_string()))
}

pub fn write_graph(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("{} {}\n", g.n(), edges.len());
    for (u, v) in edges {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn read_set_system(text: &str) -> Result<SetSystem, FormatError> {
    let mut lines = text.lines();
    let (n, m) = parse_header(lines.next())?;
    let mut members = Vec::with_capacity(m);
    for i in 0..m {
        let line = lines
            .next()
            .ok_or_else(|| err(format!("expected {m} members, found {i}")))?;
        let mut member = Vec::new();
        for token in line.split_whitespace() {
            let e = token
                .parse::<usize>()
                .map_err(|e| err(format!("member line {}: {e}", i + 1)))?;
            member.push(e);
        }
        members.push(member);
    }
    SetSystem::from_members(n, &members).map_err(|e| err(e.to_string()))
}

pub fn write_set_system(s: &SetSystem) -> String {
    let members = s.members_as_vecs();
    let mut out = format!("{} {}\n", s.ground_n(), members.len());
    for member in members {
        let tokens: Vec<String> = member.iter().map(|e| e.to_string()).collect();
        out.push_str(&tokens.join(" "));
        out.push('\n');
    }
    out
}

#[derive(Deserialize)]
struct ProfileJson {
    x: Vec<f64>,
    y: Vec<f64>,
}

pub fn read_profile(text: &str) -> Result<Profile, FormatError> {
    let raw: ProfileJson =
        serde_json::from_str(text).map_err(|e| err(format!("profile JSON: {e}")))?;
    Profile::new(raw.x, raw.y).map_err(|e| err(e.to_string()))
}

/// Profile as the `{"x":[...],"y":[...]}` JSON object.
pub fn profile_json(p: &Profile) -> Json {
    Json::Object(vec![
        ("x", Json::Array(p.x().iter().map(|&v| Json::Float(v)).collect())),
        ("y", Json::Array(p.y().iter().map(|&v| Json::Float(v)).collect())),
    ])
}

pub fn write_profile(p: &Profile) -> String {
    profile_json(p).render()
}

#[derive(Deserialize)]
struct StepModelJson {
    x: f64,
    breaks: Vec<f64>,
    vals: Vec<f64>,
}

pub fn read_step_model(text: &str) -> Result<StepModel, FormatError> {
    let raw: StepModelJson =
        serde_json::from_str(text).map_err(|e| err(format!("step model JSON: {e}")))?;
    let f = StepFn::new(raw.breaks, raw.vals).map_err(|e| err(e.to_string()))?;
    StepModel::new(raw.x, f).map_err(|e| err(e.to_string()))
}

pub fn write_step_model(m: &StepModel) -> String {
    Json::Object(vec![
        ("x", Json::Float(m.x())),
        (
            "breaks",
            Json::Array(m.f().breaks().iter().map(|&b| Json::Float(b)).collect()),
        ),
        (
            "vals",
            Json::Array(m.f().vals().iter().map(|&v| Json::Float(v)).collect()),
        ),
    ])
    .render()
}

/// One CSV cell for a float, same 17-digit convention as JSON output.
pub fn csv_f64(x: f64) -> String {
    fmt_f64(x)
}

//! Newline-delimited JSON file formats.
//!
//! Instance files start with a header record `{"N":..,"d":..,"mode":..}`
//! followed by one item per line: `{"id":..,"p":..,"s":..}` for hypercubes
//! or `{"id":..,"p":..,"h":..,"w":..}` for rectangles. Packing files carry a
//! `{"N":..,"d":..}` header and `{"id":..,"origin":[..],"rot":..}` records.
//! Parse errors always carry the offending line number.

use crate::error::CoreError;
use crate::implicit::{ImplicitSolution, SelectionCell};
use crate::item::{Instance, Item, ItemId, Mode, Shape};
use crate::packing::{Packing, Placement};
use crate::boxspec::PlacedBox;
use serde::{Deserialize, Serialize};
use serde_json::Value;
use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Read, Write};
use std::path::Path;

fn parse_line(line: usize, text: &str) -> Result<Value, CoreError> {
    serde_json::from_str(text).map_err(|e| CoreError::parse(line, e.to_string()))
}

fn get_u64(v: &Value, key: &str, line: usize) -> Result<u64, CoreError> {
    v.get(key)
        .and_then(Value::as_u64)
        .ok_or_else(|| CoreError::parse(line, format!("missing or invalid {key:?}")))
}

fn get_id(v: &Value, line: usize) -> Result<ItemId, CoreError> {
    match v.get("id") {
        Some(Value::String(s)) => Ok(ItemId::new(s.clone())),
        Some(Value::Number(n)) => Ok(ItemId::new(n.to_string())),
        _ => Err(CoreError::parse(line, "missing or invalid \"id\"")),
    }
}

pub fn read_instance_from(reader: impl Read) -> Result<Instance, CoreError> {
    let reader = BufReader::new(reader);
    let mut header: Option<Instance> = None;
    let mut items: Vec<Item> = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let lineno = idx + 1;
        let text = line?;
        if text.trim().is_empty() {
            continue;
        }
        let v = parse_line(lineno, &text)?;
        match &mut header {
            None => {
                let n = get_u64(&v, "N", lineno)?;
                let d = get_u64(&v, "d", lineno)? as usize;
                let mode_str = v
                    .get("mode")
                    .and_then(Value::as_str)
                    .ok_or_else(|| CoreError::parse(lineno, "missing or invalid \"mode\""))?;
                let mode = Mode::parse(mode_str)
                    .map_err(|e| CoreError::parse(lineno, e.to_string()))?;
                header = Some(
                    Instance::new(n, d, mode).map_err(|e| CoreError::parse(lineno, e.to_string()))?,
                );
            }
            Some(inst) => {
                let id = get_id(&v, lineno)?;
                let profit = get_u64(&v, "p", lineno)?;
                let shape = match inst.mode {
                    Mode::Hypercube => Shape::Cube {
                        side: get_u64(&v, "s", lineno)?,
                    },
                    Mode::Rectangle | Mode::RectangleRot => Shape::Rect {
                        h: get_u64(&v, "h", lineno)?,
                        w: get_u64(&v, "w", lineno)?,
                    },
                };
                let item = Item { id, shape, profit };
                item.validate(inst.mode)
                    .map_err(|e| CoreError::parse(lineno, e.to_string()))?;
                items.push(item);
            }
        }
    }
    let inst = header.ok_or_else(|| CoreError::parse(1, "missing instance header"))?;
    inst.with_items(items)
}

pub fn read_instance(path: impl AsRef<Path>) -> Result<Instance, CoreError> {
    read_instance_from(File::open(path)?)
}

pub fn write_instance_to(mut w: impl Write, inst: &Instance) -> Result<(), CoreError> {
    writeln!(
        w,
        "{}",
        serde_json::json!({"N": inst.n_side, "d": inst.d, "mode": inst.mode.as_str()})
    )?;
    for it in &inst.items {
        let rec = match it.shape {
            Shape::Cube { side } => {
                serde_json::json!({"id": it.id.as_str(), "s": side, "p": it.profit})
            }
            Shape::Rect { h, w } => {
                serde_json::json!({"id": it.id.as_str(), "h": h, "w": w, "p": it.profit})
            }
        };
        writeln!(w, "{rec}")?;
    }
    Ok(())
}

pub fn write_instance(path: impl AsRef<Path>, inst: &Instance) -> Result<(), CoreError> {
    write_instance_to(BufWriter::new(File::create(path)?), inst)
}

pub fn read_packing_from(reader: impl Read) -> Result<Packing, CoreError> {
    let reader = BufReader::new(reader);
    let mut saw_header = false;
    let mut packing = Packing::default();
    for (idx, line) in reader.lines().enumerate() {
        let lineno = idx + 1;
        let text = line?;
        if text.trim().is_empty() {
            continue;
        }
        if !saw_header {
            let v = parse_line(lineno, &text)?;
            get_u64(&v, "N", lineno)?;
            get_u64(&v, "d", lineno)?;
            saw_header = true;
            continue;
        }
        let p: Placement = serde_json::from_str(&text)
            .map_err(|e| CoreError::parse(lineno, e.to_string()))?;
        packing.placements.push(p);
    }
    if !saw_header {
        return Err(CoreError::parse(1, "missing packing header"));
    }
    Ok(packing)
}

pub fn read_packing(path: impl AsRef<Path>) -> Result<Packing, CoreError> {
    read_packing_from(File::open(path)?)
}

pub fn write_packing_to(
    mut w: impl Write,
    n_side: u64,
    d: usize,
    packing: &Packing,
) -> Result<(), CoreError> {
    writeln!(w, "{}", serde_json::json!({"N": n_side, "d": d}))?;
    for p in &packing.placements {
        writeln!(
            w,
            "{}",
            serde_json::to_string(p).map_err(|e| CoreError::Invalid(e.to_string()))?
        )?;
    }
    Ok(())
}

pub fn write_packing(
    path: impl AsRef<Path>,
    n_side: u64,
    d: usize,
    packing: &Packing,
) -> Result<(), CoreError> {
    write_packing_to(BufWriter::new(File::create(path)?), n_side, d, packing)
}

#[derive(Serialize, Deserialize)]
struct ImplicitHeader {
    mode: String,
    #[serde(rename = "N")]
    n_side: u64,
    d: usize,
    estimate: u128,
    thresholds: Vec<u64>,
}

#[derive(Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
enum ImplicitRecord {
    Box(PlacedBox),
    Cell(SelectionCell),
}

pub fn write_implicit_to(mut w: impl Write, sol: &ImplicitSolution) -> Result<(), CoreError> {
    let to_json = |v: &dyn std::fmt::Debug, s: serde_json::Result<String>| {
        s.map_err(|e| CoreError::Invalid(format!("cannot serialize {v:?}: {e}")))
    };
    let hdr = ImplicitHeader {
        mode: sol.mode.as_str().into(),
        n_side: sol.n_side,
        d: sol.d,
        estimate: sol.total_profit_estimate,
        thresholds: sol.thresholds.clone(),
    };
    writeln!(
        w,
        "{}",
        serde_json::to_string(&hdr).map_err(|e| CoreError::Invalid(e.to_string()))?
    )?;
    for b in &sol.boxes {
        let rec = ImplicitRecord::Box(b.clone());
        writeln!(w, "{}", to_json(b, serde_json::to_string(&rec))?)?;
    }
    for c in &sol.cells {
        let rec = ImplicitRecord::Cell(c.clone());
        writeln!(w, "{}", to_json(c, serde_json::to_string(&rec))?)?;
    }
    Ok(())
}

pub fn write_implicit(path: impl AsRef<Path>, sol: &ImplicitSolution) -> Result<(), CoreError> {
    write_implicit_to(BufWriter::new(File::create(path)?), sol)
}

pub fn read_implicit_from(reader: impl Read) -> Result<ImplicitSolution, CoreError> {
    let reader = BufReader::new(reader);
    let mut sol: Option<ImplicitSolution> = None;
    for (idx, line) in reader.lines().enumerate() {
        let lineno = idx + 1;
        let text = line?;
        if text.trim().is_empty() {
            continue;
        }
        match &mut sol {
            None => {
                let hdr: ImplicitHeader = serde_json::from_str(&text)
                    .map_err(|e| CoreError::parse(lineno, e.to_string()))?;
                let mode =
                    Mode::parse(&hdr.mode).map_err(|e| CoreError::parse(lineno, e.to_string()))?;
                let mut s = ImplicitSolution::empty(mode, hdr.n_side, hdr.d);
                s.total_profit_estimate = hdr.estimate;
                s.thresholds = hdr.thresholds;
                sol = Some(s);
            }
            Some(s) => {
                let rec: ImplicitRecord = serde_json::from_str(&text)
                    .map_err(|e| CoreError::parse(lineno, e.to_string()))?;
                match rec {
                    ImplicitRecord::Box(b) => s.boxes.push(b),
                    ImplicitRecord::Cell(c) => s.cells.push(c),
                }
            }
        }
    }
    sol.ok_or_else(|| CoreError::parse(1, "missing implicit-solution header"))
}

pub fn read_implicit(path: impl AsRef<Path>) -> Result<ImplicitSolution, CoreError> {
    read_implicit_from(File::open(path)?)
}

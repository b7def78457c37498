//! Output records with a stable schema across the text, JSON and CSV
//! formats: every record carries the command, the algebra parameters, the
//! command-specific inputs, and the value both as its exact coefficient
//! 4-tuple and in pretty form.

use crate::Format;
use sfq::CycScalar;
use std::io::Write;

pub struct Record {
    pub command: String,
    pub n: usize,
    pub beta: u8,
    pub inputs: serde_json::Value,
    pub value: Option<CycScalar>,
    pub pretty: String,
    /// verification outcome when a reference value exists
    pub check: Option<bool>,
    /// true when the value lies outside a formula's computed range
    pub derived: bool,
}

impl Record {
    fn to_json(&self) -> serde_json::Value {
        let mut obj = serde_json::json!({
            "command": self.command,
            "N": self.n,
            "beta": self.beta,
            "inputs": self.inputs,
            "pretty": self.pretty,
        });
        let map = obj.as_object_mut().unwrap();
        if let Some(v) = &self.value {
            map.insert("value".into(), v.to_json());
        }
        if let Some(ok) = self.check {
            map.insert(
                "check".into(),
                serde_json::json!(if ok { "ok" } else { "mismatch" }),
            );
        }
        if self.derived {
            map.insert("derived".into(), serde_json::json!(true));
        }
        obj
    }

    fn inputs_text(&self) -> String {
        match self.inputs.as_object() {
            Some(map) => map
                .iter()
                .map(|(k, v)| match v.as_str() {
                    Some(s) => format!("{k}={s}"),
                    None => format!("{k}={v}"),
                })
                .collect::<Vec<_>>()
                .join(" "),
            None => self.inputs.to_string(),
        }
    }
}

pub fn emit(records: &[Record], format: Format, out: Option<&std::path::Path>) {
    let body = render(records, format);
    match out {
        None => print!("{body}"),
        Some(path) => {
            if let Err(e) =
                std::fs::File::create(path).and_then(|mut f| f.write_all(body.as_bytes()))
            {
                eprintln!("error: cannot write {}: {e}", path.display());
                std::process::exit(2);
            }
        }
    }
}

fn render(records: &[Record], format: Format) -> String {
    match format {
        Format::Json => {
            let arr: Vec<serde_json::Value> = records.iter().map(Record::to_json).collect();
            format!("{}\n", serde_json::to_string_pretty(&arr).unwrap())
        }
        Format::Text => {
            let mut s = String::new();
            for r in records {
                let status = match r.check {
                    Some(true) => "  [ok]",
                    Some(false) => "  [MISMATCH]",
                    None => "",
                };
                let derived = if r.derived { "  [derived]" } else { "" };
                s.push_str(&format!(
                    "{} N={} beta=z^{} {}  ->  {}{}{}\n",
                    r.command,
                    r.n,
                    r.beta,
                    r.inputs_text(),
                    r.pretty,
                    status,
                    derived
                ));
            }
            s
        }
        Format::Csv => {
            let mut s = String::from("command,N,beta,inputs,c0,c1,c2,c3,pretty,check,derived\n");
            for r in records {
                let coeffs = match &r.value {
                    Some(v) => v.coeff_strings(),
                    None => ["".into(), "".into(), "".into(), "".into()],
                };
                let check = match r.check {
                    Some(true) => "ok",
                    Some(false) => "mismatch",
                    None => "",
                };
                s.push_str(&format!(
                    "{},{},{},\"{}\",{},{},{},{},\"{}\",{},{}\n",
                    r.command,
                    r.n,
                    r.beta,
                    r.inputs_text().replace('"', "'"),
                    coeffs[0],
                    coeffs[1],
                    coeffs[2],
                    coeffs[3],
                    r.pretty,
                    check,
                    r.derived
                ));
            }
            s
        }
    }
}

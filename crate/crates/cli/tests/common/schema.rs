//! Validator for the subset of JSON Schema used by the report schema:
//! `type`, `const`, `enum`, `properties`, `required`,
//! `additionalProperties`, `items`, `minItems`, `maxItems`, `minimum`,
//! `oneOf` and local `$ref`. Any other keyword is rejected so that a schema
//! edit cannot silently weaken validation.

use serde_json::Value;

const ANNOTATIONS: &[&str] = &["$schema", "$id", "$defs", "title", "description"];

pub struct Validator<'a> {
    root: &'a Value,
}

impl<'a> Validator<'a> {
    pub fn new(root: &'a Value) -> Self {
        Validator { root }
    }

    pub fn validate(&self, instance: &Value) -> Result<(), String> {
        self.check(self.root, instance, "$")
    }

    fn resolve(&self, reference: &str) -> Result<&'a Value, String> {
        let path = reference
            .strip_prefix("#/")
            .ok_or_else(|| format!("unsupported $ref {reference}"))?;
        path.split('/')
            .try_fold(self.root, |v, key| v.get(key))
            .ok_or_else(|| format!("dangling $ref {reference}"))
    }

    fn check(&self, schema: &Value, v: &Value, at: &str) -> Result<(), String> {
        let Some(obj) = schema.as_object() else {
            return match schema {
                Value::Bool(true) => Ok(()),
                Value::Bool(false) => Err(format!("{at}: nothing is allowed here")),
                _ => Err(format!("{at}: schema is not an object")),
            };
        };
        for (key, arg) in obj {
            match key.as_str() {
                "$ref" => self.check(self.resolve(arg.as_str().unwrap_or_default())?, v, at)?,
                "type" => {
                    let allowed: Vec<&str> = match arg {
                        Value::String(s) => vec![s.as_str()],
                        Value::Array(a) => a.iter().filter_map(Value::as_str).collect(),
                        _ => return Err(format!("{at}: bad type keyword")),
                    };
                    if !allowed.iter().any(|t| type_matches(t, v)) {
                        return Err(format!("{at}: expected {allowed:?}, found {v}"));
                    }
                }
                "const" if arg != v => return Err(format!("{at}: expected {arg}, found {v}")),
                "const" => {}
                "enum" => {
                    let options = arg.as_array().ok_or("enum must be an array")?;
                    if !options.contains(v) {
                        return Err(format!("{at}: {v} not in enum"));
                    }
                }
                "required" => {
                    if let Some(o) = v.as_object() {
                        for name in arg
                            .as_array()
                            .into_iter()
                            .flatten()
                            .filter_map(Value::as_str)
                        {
                            if !o.contains_key(name) {
                                return Err(format!("{at}: missing `{name}`"));
                            }
                        }
                    }
                }
                "properties" => {
                    if let Some(o) = v.as_object() {
                        for (name, sub) in arg.as_object().ok_or("properties must be an object")? {
                            if let Some(field) = o.get(name) {
                                self.check(sub, field, &format!("{at}.{name}"))?;
                            }
                        }
                    }
                }
                "additionalProperties" => {
                    if let Some(o) = v.as_object() {
                        let known = obj.get("properties").and_then(Value::as_object);
                        for (name, field) in o {
                            if known.is_some_and(|k| k.contains_key(name)) {
                                continue;
                            }
                            self.check(arg, field, &format!("{at}.{name}"))?;
                        }
                    }
                }
                "items" => {
                    if let Some(a) = v.as_array() {
                        for (i, item) in a.iter().enumerate() {
                            self.check(arg, item, &format!("{at}[{i}]"))?;
                        }
                    }
                }
                "minItems" | "maxItems" => {
                    if let Some(a) = v.as_array() {
                        let bound = arg.as_u64().ok_or("item bounds must be integers")? as usize;
                        let ok = if key == "minItems" {
                            a.len() >= bound
                        } else {
                            a.len() <= bound
                        };
                        if !ok {
                            return Err(format!(
                                "{at}: {key} {bound} violated by length {}",
                                a.len()
                            ));
                        }
                    }
                }
                "minimum" => {
                    if let (Some(x), Some(m)) = (v.as_f64(), arg.as_f64()) {
                        if x < m {
                            return Err(format!("{at}: {x} below minimum {m}"));
                        }
                    }
                }
                "oneOf" => {
                    let branches = arg.as_array().ok_or("oneOf must be an array")?;
                    let matched = branches
                        .iter()
                        .filter(|b| self.check(b, v, at).is_ok())
                        .count();
                    if matched != 1 {
                        return Err(format!("{at}: {matched} oneOf branches match {v}"));
                    }
                }
                k if ANNOTATIONS.contains(&k) => {}
                k => return Err(format!("unsupported schema keyword `{k}`")),
            }
        }
        Ok(())
    }
}

fn type_matches(t: &str, v: &Value) -> bool {
    match t {
        "null" => v.is_null(),
        "boolean" => v.is_boolean(),
        "object" => v.is_object(),
        "array" => v.is_array(),
        "string" => v.is_string(),
        "number" => v.is_number(),
        "integer" => v.is_u64() || v.is_i64(),
        _ => false,
    }
}

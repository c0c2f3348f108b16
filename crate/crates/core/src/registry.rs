//! Name-keyed registries of interchangeable strategies.
//!
//! Each strategy family (matrix functions, reorthogonalization, dense
//! eigensolvers) is a trait; a [`Registry`] maps a name to a factory that
//! builds a boxed trait object from an optional parameter string. Specs
//! look like `name` or `name:params`, e.g. `power:0.5` or `poly:1,0,2`.

use std::collections::BTreeMap;

use crate::error::{Error, Result};

pub type Factory<T> = fn(Option<&str>) -> Result<Box<T>>;

pub struct Registry<T: ?Sized> {
    kind: &'static str,
    factories: BTreeMap<&'static str, Factory<T>>,
}

impl<T: ?Sized> Registry<T> {
    pub fn new(kind: &'static str) -> Self {
        Self {
            kind,
            factories: BTreeMap::new(),
        }
    }

    /// Adds or replaces the factory registered under `name`.
    pub fn register(&mut self, name: &'static str, factory: Factory<T>) -> &mut Self {
        self.factories.insert(name, factory);
        self
    }

    pub fn names(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.factories.keys().copied()
    }

    pub fn contains(&self, name: &str) -> bool {
        self.factories.contains_key(name)
    }

    /// Builds the strategy described by `spec` (`name` or `name:params`).
    pub fn build(&self, spec: &str) -> Result<Box<T>> {
        let spec = spec.trim();
        let (name, params) = match spec.split_once(':') {
            Some((n, p)) => (n.trim(), Some(p.trim())),
            None => (spec, None),
        };
        let factory = self.factories.get(name).ok_or_else(|| Error::UnknownStrategy {
            kind: self.kind,
            name: name.to_string(),
            available: self.names().collect::<Vec<_>>().join(", "),
        })?;
        factory(params)
    }
}

pub(crate) fn no_params(name: &str, params: Option<&str>) -> Result<()> {
    match params {
        None => Ok(()),
        Some(p) => Err(Error::invalid(format!("`{name}` takes no parameters, got `{p}`"))),
    }
}

pub(crate) fn parse_f64(name: &str, text: &str) -> Result<f64> {
    let v: f64 = text
        .trim()
        .parse()
        .map_err(|_| Error::invalid(format!("`{name}`: cannot parse `{text}` as a number")))?;
    if !v.is_finite() {
        return Err(Error::invalid(format!("`{name}`: parameter must be finite")));
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    trait Greeter {
        fn greet(&self) -> String;
    }

    struct Fixed(String);

    impl Greeter for Fixed {
        fn greet(&self) -> String {
            self.0.clone()
        }
    }

    fn make(params: Option<&str>) -> Result<Box<dyn Greeter>> {
        Ok(Box::new(Fixed(params.unwrap_or("hi").to_string())))
    }

    #[test]
    fn build_by_name_with_params() {
        let mut reg: Registry<dyn Greeter> = Registry::new("greeter");
        reg.register("fixed", make);
        assert_eq!(reg.build("fixed").unwrap().greet(), "hi");
        assert_eq!(reg.build("fixed:yo").unwrap().greet(), "yo");
        let err = reg.build("other").err().unwrap();
        assert!(err.to_string().contains("available: fixed"));
    }
}

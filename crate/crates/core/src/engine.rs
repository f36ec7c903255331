//! Selection between the two braid word-problem solvers.

use std::fmt;
use std::str::FromStr;

use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::oracle::HandleReducer;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Engine {
    Garside,
    Oracle,
    /// Both solvers; disagreement is an error.
    #[default]
    Both,
}

impl Engine {
    pub fn equal(self, u: &BraidWord, v: &BraidWord) -> Result<bool> {
        match self {
            Engine::Garside => u.equal(v),
            Engine::Oracle => HandleReducer::default().equal(u, v),
            Engine::Both => {
                let g = u.equal(v)?;
                let o = HandleReducer::default().equal(u, v)?;
                if g != o {
                    return Err(Error::EngineDisagreement(format!("{u} vs {v}")));
                }
                Ok(g)
            }
        }
    }

    pub fn is_trivial(self, w: &BraidWord) -> Result<bool> {
        let e = BraidWord::identity(w.strands())?;
        self.equal(w, &e)
    }
}

impl fmt::Display for Engine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Engine::Garside => "garside",
            Engine::Oracle => "oracle",
            Engine::Both => "both",
        })
    }
}

impl FromStr for Engine {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "garside" => Ok(Engine::Garside),
            "oracle" => Ok(Engine::Oracle),
            "both" => Ok(Engine::Both),
            _ => Err(format!("unknown engine {s:?} (expected garside, oracle or both)")),
        }
    }
}

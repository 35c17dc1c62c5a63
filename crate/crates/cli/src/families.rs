//! Shared dispatch for the bound families and construction recipes, used by
//! both the direct subcommands and the sweep runner.

use anyhow::{anyhow, bail, Result};
use sumset_core::bounds::{self, BoundResult, Hypothesis};
use sumset_core::construct;
use sumset_core::structure::SymmetryClass;
use sumset_core::{ExtendedCount, GroupSpec, GroupSubset};

#[derive(Default, Clone)]
pub struct BoundParams {
    pub k: Option<u64>,
    pub p: Option<ExtendedCount>,
    pub h: Option<u32>,
    pub m: Option<u64>,
    pub s: Option<u64>,
    pub theta: Option<i64>,
    pub zero_in_a: Option<bool>,
    pub class: Option<String>,
}

pub fn eval_bound(family: &str, prm: &BoundParams) -> Result<(BoundResult, String)> {
    let need = |o: Option<u64>, name: &str| {
        o.ok_or_else(|| anyhow!("family {family} needs --{name}"))
    };
    let need_h = || prm.h.ok_or_else(|| anyhow!("family {family} needs --h"));
    let need_p = || {
        prm.p
            .ok_or_else(|| anyhow!("family {family} needs --p"))
    };
    Ok(match family {
        "signed-field" => {
            let (k, p, h) = (need(prm.k, "k")?, need_p()?, need_h()?);
            (
                bounds::bound_signed_field(k, &p, h).map_err(|e| anyhow!("{e}"))?,
                format!("k={k} p={p} h={h}"),
            )
        }
        "restricted-field" => {
            let (k, p, h, s) = (need(prm.k, "k")?, need_p()?, need_h()?, need(prm.s, "s")?);
            (
                bounds::bound_restricted_field(k, &p, h, s).map_err(|e| anyhow!("{e}"))?,
                format!("k={k} p={p} h={h} s={s}"),
            )
        }
        "rho-plain" => {
            let (p, m, h) = (need_p()?, need(prm.m, "m")?, need_h()?);
            (bounds::bound_rho_plain(&p, m, h), format!("p={p} m={m} h={h}"))
        }
        "rho-signed" => {
            let (p, m, h, s) = (need_p()?, need(prm.m, "m")?, need_h()?, need(prm.s, "s")?);
            (
                bounds::bound_rho_signed_sdeg(&p, m, h, s).map_err(|e| anyhow!("{e}"))?,
                format!("p={p} m={m} h={h} s={s}"),
            )
        }
        "interval-restricted" => {
            let (p, m, h, s) = (need_p()?, need(prm.m, "m")?, need_h()?, need(prm.s, "s")?);
            let z = prm
                .zero_in_a
                .ok_or_else(|| anyhow!("family {family} needs --zero-in-a"))?;
            (
                bounds::bound_interval_restricted(&p, m, h, s, z).map_err(|e| anyhow!("{e}"))?,
                format!("p={p} m={m} h={h} s={s} zero_in_a={z}"),
            )
        }
        "class" => {
            let (p, m, h) = (need_p()?, need(prm.m, "m")?, need_h()?);
            let c = match prm.class.as_deref() {
                Some("sym") => SymmetryClass::Sym,
                Some("asym") => SymmetryClass::Asym,
                Some("nsym") => SymmetryClass::Nsym,
                other => bail!("--class must be sym|asym|nsym, got {other:?}"),
            };
            (
                bounds::bound_interval_restricted_class(&p, m, h, c)
                    .map_err(|e| anyhow!("{e}"))?,
                format!("p={p} m={m} h={h} class={c}"),
            )
        }
        "restricted-plain" => {
            let (p, m, h) = (need_p()?, need(prm.m, "m")?, need_h()?);
            (
                bounds::bound_restricted_plain(&p, m, h).map_err(|e| anyhow!("{e}"))?,
                format!("p={p} m={m} h={h}"),
            )
        }
        "int-signed" => {
            let (m, h, s) = (need(prm.m, "m")?, need_h()?, need(prm.s, "s")?);
            (
                bounds::bound_int_signed(m, h, s).map_err(|e| anyhow!("{e}"))?,
                format!("m={m} h={h} s={s}"),
            )
        }
        "theta" => {
            let (k, h, s) = (need(prm.k, "k")?, need_h()?, need(prm.s, "s")?);
            let v = bounds::theta(k, h, s);
            (
                BoundResult {
                    value: u64::try_from(v).ok(),
                    branch: format!("theta = {v}"),
                    hypotheses: vec![],
                },
                format!("k={k} h={h} s={s}"),
            )
        }
        "ell" => {
            let t = prm
                .theta
                .ok_or_else(|| anyhow!("family ell needs --theta"))?;
            let (p, h) = (need_p()?, need_h()?);
            let l = bounds::ell(t, &p, h).map_err(|e| anyhow!("{e}"))?;
            (
                BoundResult {
                    value: Some(l as u64),
                    branch: format!("l = {l}"),
                    hypotheses: vec![],
                },
                format!("theta={t} p={p} h={h}"),
            )
        }
        "liu-sun-k" => {
            let (k, m, h) = (need(prm.k, "k")?, need(prm.m, "m")?, need_h()?);
            let v = bounds::liu_sun_k(k, m, h);
            (
                BoundResult {
                    value: u64::try_from(v).ok(),
                    branch: format!("K = {v}"),
                    hypotheses: vec![Hypothesis {
                        label: "K >= 0".into(),
                        met: v >= 0,
                    }],
                },
                format!("k={k} m={m} h={h}"),
            )
        }
        other => bail!("unknown bound family {other:?}"),
    })
}

#[derive(Default, Clone)]
pub struct ConstructParams {
    pub d: Option<u64>,
    pub m: Option<u64>,
    pub s: Option<u64>,
    pub group: Option<GroupSpec>,
    pub set: Option<String>,
    pub h: Option<u32>,
}

pub struct Constructed {
    pub set: GroupSubset,
    pub params_echo: String,
    pub steps: Option<usize>,
}

pub fn eval_construct(recipe: &str, prm: &ConstructParams) -> Result<Constructed> {
    let need = |o: Option<u64>, name: &str| {
        o.ok_or_else(|| anyhow!("recipe {recipe} needs --{name}"))
    };
    let need_group = || {
        prm.group
            .clone()
            .ok_or_else(|| anyhow!("recipe {recipe} needs -g"))
    };
    Ok(match recipe {
        "odd_spaced_ap" => {
            let (d, m) = (need(prm.d, "d")?, need(prm.m, "m")?);
            Constructed {
                set: construct::odd_spaced_ap(d, m).map_err(|e| anyhow!("{e}"))?,
                params_echo: format!("d={d} m={m}"),
                steps: None,
            }
        }
        "interval_set" => {
            let (d, m) = (need(prm.d, "d")?, need(prm.m, "m")?);
            Constructed {
                set: construct::interval_set(d, m).map_err(|e| anyhow!("{e}"))?,
                params_echo: format!("d={d} m={m}"),
                steps: None,
            }
        }
        "rho_s_witness" => {
            let g = need_group()?;
            let (m, s) = (need(prm.m, "m")?, need(prm.s, "s")?);
            Constructed {
                set: construct::rho_s_witness(&g, m, s).map_err(|e| anyhow!("{e}"))?,
                params_echo: format!("g={g} m={m} s={s}"),
                steps: None,
            }
        }
        "subgroup_interval" => {
            let g = need_group()?;
            let m = need(prm.m, "m")?;
            Constructed {
                set: construct::subgroup_interval(&g, m).map_err(|e| anyhow!("{e}"))?,
                params_echo: format!("g={g} m={m}"),
                steps: None,
            }
        }
        "symmetrize" => {
            let g = need_group()?;
            let lit = prm
                .set
                .as_deref()
                .ok_or_else(|| anyhow!("recipe symmetrize needs -A"))?;
            let a = g.parse_subset(lit).map_err(|e| anyhow!("{e}"))?;
            let h = prm.h.ok_or_else(|| anyhow!("recipe symmetrize needs --h"))?;
            let r = construct::symmetrize(&a, h).map_err(|e| anyhow!("{e}"))?;
            Constructed {
                set: r.set,
                params_echo: format!("g={g} A={} h={h}", a.canonical_literal()),
                steps: Some(r.steps),
            }
        }
        other => bail!("unknown recipe {other:?}"),
    })
}

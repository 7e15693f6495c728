use num_bigint::BigInt;
use serde_json::{json, Value};
use zpoly::families::{build_tables, kl_closed_family, kl_family, whitney_multi_family, z_family};
use zpoly::klz::{closed_formula_terms, kl_coeff_closed, kl_polynomial, z_polynomial, KlMethod};
use zpoly::polyarith::bigint_to_json;
use zpoly::IntPolynomial;

use crate::args::Quantity;
use crate::config::{Job, JobConfig, MatroidSource, MethodChoice};
use crate::output::{csv_field, Outcome, Rendered, Status};
use crate::{CliError, CliResult};

fn quantity_name(q: Quantity) -> &'static str {
    match q {
        Quantity::Kl => "kl",
        Quantity::Z => "z",
        Quantity::Chi => "chi",
        Quantity::Whitney => "whitney",
        Quantity::Coeff => "coeff",
        Quantity::Terms => "terms",
        Quantity::Flats => "flats",
    }
}

pub fn cmd_compute(config: &JobConfig) -> CliResult<Outcome> {
    let Job::Compute {
        quantity,
        source,
        flat_cap,
        method,
        all_methods,
        profile,
        i,
    } = &config.job
    else {
        return Err(CliError::Usage("not a compute job".to_string()));
    };
    let (quantity, flat_cap) = (*quantity, *flat_cap);
    let family = source.family();
    let use_family = match method {
        Some(MethodChoice::Family) => true,
        Some(MethodChoice::Generic(_)) => false,
        None => family.is_some(),
    };
    let label = source.label();

    let (rendered, status) = match quantity {
        Quantity::Kl if *all_methods => {
            let lat = source.lattice(flat_cap)?;
            let mut rows: Vec<(&str, IntPolynomial)> = KlMethod::ALL
                .iter()
                .map(|&m| (m.name(), kl_polynomial(&lat, m)))
                .collect();
            if let Some((f, d)) = family {
                rows.push(("family", kl_family(f, d)?));
            }
            let agree = rows.windows(2).all(|w| w[0].1 == w[1].1);
            (
                poly_report(quantity, &label, &rows, Some(agree)),
                Status::from_passed(agree),
            )
        }
        Quantity::Kl | Quantity::Z | Quantity::Chi => {
            let (name, poly) = single_polynomial(quantity, source, flat_cap, *method, use_family)?;
            (poly_report(quantity, &label, &[(name, poly)], None), Status::Pass)
        }
        Quantity::Whitney => {
            let value = match family.filter(|_| use_family) {
                Some((f, d)) => whitney_multi_family(f, d, profile)?,
                None => source.lattice(flat_cap)?.whitney_multi(profile),
            };
            let key = profile.iter().map(i64::to_string).collect::<Vec<_>>().join(",");
            (
                number_report(quantity, &label, json!({ "profile": profile }), &key, &value),
                Status::Pass,
            )
        }
        Quantity::Coeff => {
            let i = i.expect("validated");
            let value = match family.filter(|_| use_family) {
                Some((f, d)) => kl_closed_family(f, d, i)?,
                None => kl_coeff_closed(&source.lattice(flat_cap)?, i)?,
            };
            (
                number_report(quantity, &label, json!({ "i": i }), &i.to_string(), &value),
                Status::Pass,
            )
        }
        Quantity::Terms => {
            let i = i.expect("validated");
            if i < 0 {
                return Err(zpoly::Error::NegativeIndex(i).into());
            }
            (terms_report(&label, i, &source.lattice(flat_cap)?), Status::Pass)
        }
        Quantity::Flats => {
            let counts = source.lattice(flat_cap)?.rank_counts();
            let plain = counts.iter().map(usize::to_string).collect::<Vec<_>>().join(" ");
            let csv = std::iter::once("rank,count".to_string())
                .chain(counts.iter().enumerate().map(|(r, c)| format!("{r},{c}")))
                .collect::<Vec<_>>()
                .join("\n");
            let json = json!({ "quantity": "flats", "source": label, "rank_counts": counts });
            (Rendered { plain, json, csv }, Status::Pass)
        }
    };
    Ok(rendered.into_outcome(config.format, status))
}

fn single_polynomial(
    quantity: Quantity,
    source: &MatroidSource,
    flat_cap: usize,
    method: Option<MethodChoice>,
    use_family: bool,
) -> CliResult<(&'static str, IntPolynomial)> {
    if let Some((f, d)) = source.family().filter(|_| use_family) {
        let poly = match quantity {
            Quantity::Kl => kl_family(f, d)?,
            Quantity::Z => z_family(f, d)?,
            _ => {
                let tables = build_tables(f, d)?;
                let coeffs = (0..=d as i64)
                    .map(|k| tables.char_coeff(d, k))
                    .collect::<zpoly::Result<Vec<BigInt>>>()?;
                IntPolynomial::new(coeffs)
            }
        };
        return Ok(("family", poly));
    }
    let lat = source.lattice(flat_cap)?;
    Ok(match quantity {
        Quantity::Kl => {
            let m = match method {
                Some(MethodChoice::Generic(m)) => m,
                _ => KlMethod::Defining,
            };
            (m.name(), kl_polynomial(&lat, m))
        }
        Quantity::Z => ("lattice", z_polynomial(&lat)),
        _ => ("lattice", lat.characteristic_polynomial()),
    })
}

fn poly_report(
    quantity: Quantity,
    label: &str,
    rows: &[(&str, IntPolynomial)],
    agree: Option<bool>,
) -> Rendered {
    let mut plain: Vec<String> = rows.iter().map(|(_, p)| p.to_string()).collect();
    if let Some(agree) = agree {
        plain.push(if agree { "AGREE" } else { "DISAGREE" }.to_string());
    }
    let mut csv = vec!["method,k,coeff".to_string()];
    for (name, p) in rows {
        csv.extend(
            p.coeffs()
                .iter()
                .enumerate()
                .map(|(k, c)| format!("{name},{k},{c}")),
        );
    }
    let results: Vec<Value> = rows
        .iter()
        .map(|(name, p)| json!({ "method": name, "polynomial": p, "text": p.to_string() }))
        .collect();
    let mut json = json!({ "quantity": quantity_name(quantity), "source": label, "results": results });
    if let Some(agree) = agree {
        json["agree"] = json!(agree);
    }
    Rendered {
        plain: plain.join("\n"),
        json,
        csv: csv.join("\n"),
    }
}

fn number_report(quantity: Quantity, label: &str, args: Value, key: &str, value: &BigInt) -> Rendered {
    let mut json =
        json!({ "quantity": quantity_name(quantity), "source": label, "value": bigint_to_json(value) });
    if let (Some(obj), Value::Object(extra)) = (json.as_object_mut(), args) {
        obj.extend(extra);
    }
    Rendered {
        plain: value.to_string(),
        json,
        csv: format!(
            "quantity,argument,value\n{},{},{value}",
            quantity_name(quantity),
            csv_field(key)
        ),
    }
}

fn terms_report(label: &str, i: i64, lat: &zpoly::matroid::FlatLattice) -> Rendered {
    let terms = closed_formula_terms(lat, i as usize);
    let total: BigInt = terms.iter().map(|t| &t.whitney * t.sign).sum();
    let total = if i == 0 { BigInt::from(1) } else { total };
    let profile_text = |p: &[i64]| p.iter().map(i64::to_string).collect::<Vec<_>>().join(",");
    let mut plain: Vec<String> = terms
        .iter()
        .map(|t| {
            format!(
                "{} W({}) = {}",
                if t.sign > 0 { '+' } else { '-' },
                profile_text(&t.profile),
                t.whitney
            )
        })
        .collect();
    plain.push(format!("total {total}"));
    let mut csv = vec!["sign,profile,whitney".to_string()];
    csv.extend(terms.iter().map(|t| {
        format!(
            "{},{},{}",
            t.sign,
            csv_field(&profile_text(&t.profile)),
            t.whitney
        )
    }));
    let json = json!({ "quantity": "terms", "source": label, "i": i, "terms": terms, "total": bigint_to_json(&total) });
    Rendered {
        plain: plain.join("\n"),
        json,
        csv: csv.join("\n"),
    }
}

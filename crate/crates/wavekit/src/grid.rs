//! Grid evaluation and CSV export.
//!
//! Rows run t-major, then y, then x. Numbers are printed with 17 significant
//! digits, which reproduces an f64 exactly; the `singular` column marks
//! points excluded because the tau function vanishes there.

use std::io::{self, Write};

use wavekit_core::fields::assemble;
use wavekit_core::wave::Point;

use crate::scenario::Scenario;

pub const CSV_HEADER: &str = "x,y,t,re_u,im_u,re_v,im_v,re_omega,im_omega,singular";

fn num(v: f64) -> String {
    format!("{v:.16e}")
}

/// Writes the scenario's fields over its grid as CSV.
pub fn write_csv<W: Write>(scenario: &Scenario, out: &mut W) -> io::Result<()> {
    let ft = assemble(scenario.tau(), scenario.bg);
    let xs = scenario.grid.x.values();
    let ys = scenario.grid.y.values();
    writeln!(out, "{CSV_HEADER}")?;
    for &t in &scenario.grid.t {
        for &y in &ys {
            for &x in &xs {
                let p = Point::new(x, y, t);
                match ft.values(p) {
                    Ok(f) => writeln!(
                        out,
                        "{},{},{},{},{},{},{},{},{},0",
                        num(x),
                        num(y),
                        num(t),
                        num(f.u.re),
                        num(f.u.im),
                        num(f.v.re),
                        num(f.v.im),
                        num(f.omega.re),
                        num(f.omega.im),
                    )?,
                    Err(_) => writeln!(out, "{},{},{},0,0,0,0,0,0,1", num(x), num(y), num(t),)?,
                }
            }
        }
    }
    Ok(())
}

/// The full CSV as a string (used by tests and the CLI).
pub fn to_csv_string(scenario: &Scenario) -> String {
    let mut buf = Vec::new();
    write_csv(scenario, &mut buf).expect("writing to a Vec cannot fail");
    String::from_utf8(buf).expect("CSV is ASCII")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scenario::{AxisSpec, GridSpec, Scenario, Tolerances};
    use wavekit_core::soliton::{Background, EquationCoefficients};
    use wavekit_core::wave::TauFunction;

    #[test]
    fn vacuum_grid_rows_are_background() {
        let grid = GridSpec {
            x: AxisSpec {
                min: 0.0,
                max: 1.0,
                count: 2,
            },
            y: AxisSpec {
                min: 0.0,
                max: 1.0,
                count: 2,
            },
            t: vec![0.0],
        };
        let scenario = Scenario::raw(
            TauFunction::one(),
            EquationCoefficients::new(1.0, 1.0, 0.0, 0.0),
            Background::real(0.25, -0.5, 0.75),
            grid,
            Tolerances::default(),
            1,
        );
        let csv = to_csv_string(&scenario);
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], CSV_HEADER);
        assert_eq!(lines.len(), 5);
        for line in &lines[1..] {
            let cols: Vec<&str> = line.split(',').collect();
            assert_eq!(cols.len(), 10);
            assert_eq!(cols[3].parse::<f64>().unwrap(), 0.25);
            assert_eq!(cols[5].parse::<f64>().unwrap(), -0.5);
            assert_eq!(cols[7].parse::<f64>().unwrap(), 0.75);
            assert_eq!(cols[9], "0");
        }
    }

    #[test]
    fn row_order_is_t_major_then_y_then_x() {
        let grid = GridSpec {
            x: AxisSpec {
                min: 0.0,
                max: 1.0,
                count: 2,
            },
            y: AxisSpec {
                min: 10.0,
                max: 11.0,
                count: 2,
            },
            t: vec![100.0, 200.0],
        };
        let scenario = Scenario::raw(
            TauFunction::one(),
            EquationCoefficients::new(1.0, 1.0, 0.0, 0.0),
            Background::zero(),
            grid,
            Tolerances::default(),
            1,
        );
        let csv = to_csv_string(&scenario);
        let first: Vec<f64> = csv
            .lines()
            .skip(1)
            .map(|l| l.split(',').next().unwrap().parse().unwrap())
            .collect();
        // x cycles fastest: 0,1,0,1,...
        assert_eq!(first, vec![0.0, 1.0, 0.0, 1.0, 0.0, 1.0, 0.0, 1.0]);
        let times: Vec<f64> = csv
            .lines()
            .skip(1)
            .map(|l| l.split(',').nth(2).unwrap().parse().unwrap())
            .collect();
        assert_eq!(&times[..4], &[100.0; 4]);
        assert_eq!(&times[4..], &[200.0; 4]);
    }

    #[test]
    fn singular_points_are_marked_not_crashed() {
        // w = 1 - e^x vanishes on the x = 0 plane.
        use wavekit_core::wave::{LinearPhase, WaveTerm};
        use wavekit_core::Complex;
        let tau = TauFunction::new(
            Complex::new(1.0, 0.0),
            vec![WaveTerm::exp(
                Complex::new(-1.0, 0.0),
                LinearPhase::real(1.0, 0.0, 0.0),
            )],
        );
        let grid = GridSpec {
            x: AxisSpec {
                min: 0.0,
                max: 1.0,
                count: 2,
            },
            y: AxisSpec {
                min: 0.0,
                max: 0.0,
                count: 1,
            },
            t: vec![0.0],
        };
        let scenario = Scenario::raw(
            tau,
            EquationCoefficients::new(1.0, 1.0, 0.0, 0.0),
            Background::zero(),
            grid,
            Tolerances::default(),
            1,
        );
        let csv = to_csv_string(&scenario);
        let rows: Vec<&str> = csv.lines().skip(1).collect();
        assert!(
            rows[0].ends_with(",1"),
            "x=0 row should be singular: {}",
            rows[0]
        );
        assert!(rows[1].ends_with(",0"));
    }
}

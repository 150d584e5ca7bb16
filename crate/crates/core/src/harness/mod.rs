//! Declarative experiments: configuration, parallel execution with
//! schedule-independent seeding, aggregation, CSV output and scaling fits.

mod algo_spec;
mod config;
mod csv_io;
mod fit;
mod presets;
mod run;
mod stats;

pub use algo_spec::AlgorithmSpec;
pub use config::{Cell, DMode, ExperimentConfig};
pub use csv_io::{emit_csv, emit_raw_csv, format_real, load_table, render_csv, render_raw_csv, Table, CSV_HEADER, NUMERIC_COLUMNS, RAW_CSV_HEADER};
pub use fit::{fit_scaling_exponent, fit_table, GroupFit, ScalingFit};
pub use presets::{preset, Preset, DEFAULT_MAX_N};
pub use run::{run_experiment, run_experiment_records, TrialResult};
pub use stats::{aggregate, AggregateStats};

#pragma once

namespace tscalc {

/// Stopping rule for truncated series evaluation.
struct TruncationPolicy {
    int max_terms = 10000;
    double abs_tol = 1e-12;
    int consecutive_small = 3;
};

/// Engine-wide numeric settings. Discrete-scale results are exact and do
/// not depend on any of these; they only govern real-line fallbacks and
/// truncation defaults.
struct Config {
    /// Central-difference step for real-line derivatives without an
    /// attached closed-form derivative (2^-20).
    double fd_step = 9.5367431640625e-07;
    /// Absolute tolerance of the adaptive Simpson quadrature on the real line.
    double quad_abs_tol = 1e-10;
    /// Cap on monomial order, bounding factorial growth.
    int max_monomial_order = 4096;
    TruncationPolicy policy;
};

inline const Config& default_config() {
    static const Config config;
    return config;
}

}  // namespace tscalc

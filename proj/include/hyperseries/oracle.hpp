#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hyperseries/errors.hpp"
#include "hyperseries/hyperreal.hpp"
#include "hyperseries/rational.hpp"
#include "hyperseries/series.hpp"
#include "hyperseries/summation.hpp"

namespace hyperseries {

/// Exact sum of the actual terms start..n; the empty sum (n = start - 1) is 0.
inline Rational brute_partial_sum(const SeriesExpr& s, std::int64_t n) {
    if (n < s.start() - 1) {
        throw index_before_start("partial sum bound " + std::to_string(n) + " precedes start - 1");
    }
    Rational sum;
    for (std::int64_t i = s.start(); i <= n; ++i) {
        sum += term_at(s, i);
    }
    return sum;
}

enum class Status { pass, fail };

struct Mismatch {
    std::int64_t n = 0;
    Rational expected;
    Rational got;
};

struct VerificationReport {
    std::string series_id;
    std::int64_t range_from = 0;
    std::int64_t range_to = 0;
    Status status = Status::pass;
    std::optional<Mismatch> first_mismatch;

    bool passed() const { return status == Status::pass; }
};

/// Compares `formula` against brute-force partial sums on [valid_from, valid_from + window].
inline VerificationReport check_formula(const SeriesExpr& s, const PartialSumFormula& formula, std::int64_t window,
                                        std::string series_id = {}) {
    if (window < 1) {
        throw error("verification window must be at least 1");
    }
    VerificationReport report{std::move(series_id), formula.valid_from, formula.valid_from + window, Status::pass, std::nullopt};
    Rational brute = brute_partial_sum(s, formula.valid_from);
    for (std::int64_t n = report.range_from; n <= report.range_to; ++n) {
        if (n > report.range_from) {
            brute += term_at(s, n);
        }
        Rational got = formula(n);
        if (got != brute) {
            report.status = Status::fail;
            report.first_mismatch = Mismatch{n, brute, std::move(got)};
            break;
        }
    }
    return report;
}

inline VerificationReport check_formula(const SeriesExpr& s, std::int64_t window, std::string series_id = {},
                                        const EvalConfig& cfg = {}) {
    return check_formula(s, partial_sum_formula(s, cfg), window, std::move(series_id));
}

/// k-times iterated arithmetic mean (Hoelder mean) of the partial sums
/// S(start), ..., S(n_max). Partial sums are accumulated exactly; only the
/// averaging runs in floating point.
inline double holder_mean(const SeriesExpr& s, int k, std::int64_t n_max) {
    if (k < 1) {
        throw error("holder order must be at least 1");
    }
    if (n_max < s.start()) {
        throw error("holder_mean needs at least one partial sum");
    }
    std::vector<long double> seq;
    seq.reserve(static_cast<std::size_t>(n_max - s.start() + 1));
    Rational sum;
    for (std::int64_t i = s.start(); i <= n_max; ++i) {
        sum += term_at(s, i);
        seq.push_back(static_cast<long double>(sum.to_double()));
    }
    for (int level = 0; level < k; ++level) {
        long double running = 0;
        for (std::size_t j = 0; j < seq.size(); ++j) {
            running += seq[j];
            seq[j] = running / static_cast<long double>(j + 1);
        }
    }
    return static_cast<double>(seq.back());
}

/// Checks that the Hoelder-k mean of the partial sums lands within `tol` of the
/// standard part of the series' hyperreal value.
inline VerificationReport standard_part_crosscheck(const SeriesExpr& s, int k, std::int64_t n_max, double tol,
                                                   std::string series_id = {}, const EvalConfig& cfg = {}) {
    const auto finite = standard_part(sum_series(s, cfg));
    if (!finite) {
        throw infinite_value("series value is infinite; no standard part to compare against");
    }
    VerificationReport report{std::move(series_id), s.start(), n_max, Status::pass, std::nullopt};
    const double mean = holder_mean(s, k, n_max);
    if (!(std::fabs(mean - finite->to_double()) <= tol)) {
        report.status = Status::fail;
        // expected is the standard part; got is the mean as an exact binary fraction
        Rational got;
        if (std::isfinite(mean)) {
            const mpq_class approx(mean);
            got = Rational(approx.get_num(), approx.get_den());
        }
        report.first_mismatch = Mismatch{n_max, *finite, got};
    }
    return report;
}

} // namespace hyperseries

#pragma once

// Full decision procedure for one c: find a certified crossover beyond which
// the reduced denominator D_n stays above the threshold, check every index
// below the horizon exactly, and emit a machine-checkable certificate of
// exactly which x_n are integers.  The certificate never claims the
// universal statement as proved; it records (a) exhaustive exact
// verification up to the horizon and (b) the exact bound verdict with a
// ratio-monotonicity certificate at and beyond the crossover.

#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cnx/bounds.hpp"
#include "cnx/exact.hpp"
#include "cnx/sequence.hpp"

namespace cnx {

struct EvidenceItem {
    unsigned long n = 0;
    std::string x;                             // canonical "p/q" fraction
    std::optional<Integer> D;                  // absent at n = 0
    std::optional<bool> interval_ok;           // n >= 1
    std::optional<bool> window_excluded;       // n >= 1
    std::optional<bool> quadratic_in_window;   // n >= 2
    bool is_integer = false;
};

struct PaperDiscrepancy {
    std::string claim_ref;
    std::string claimed;
    std::string computed;
};

struct IntegralityReport {
    std::uint64_t c = 1;
    BoundVariant threshold_variant = BoundVariant::E;
    Rational threshold;
    unsigned long crossover = 0;
    unsigned long horizon_checked = 0;
    std::vector<unsigned long> integral_indices;
    std::vector<EvidenceItem> evidence;
    std::vector<PaperDiscrepancy> paper_discrepancies;
};

struct CertifyOptions {
    std::optional<unsigned long> horizon;
    std::optional<Rational> threshold;
    std::optional<BoundVariant> variant;
    unsigned long scan_limit = 1'000'000;
    std::uint64_t factor_limit = kDefaultFactorLimit;
};

namespace detail {

inline std::string short_decimal(const PowerProduct& p) { return decimal_hint(p, 6); }

inline std::vector<PaperDiscrepancy> adjudicate_published_claims(std::uint64_t c,
                                                                 const OddPrimeSupport& support,
                                                                 unsigned long scan_limit) {
    std::vector<PaperDiscrepancy> out;
    if (c == 1) {
        const unsigned long exact = crossover_index(1, support, Rational(2), BoundVariant::E, scan_limit);
        if (exact != 10) {
            PaperDiscrepancy d;
            d.claim_ref = "Eq. (13)";
            d.claimed = "E(n) = sqrt((n-1)!)/2^(n-1) >= 2 for all n >= 10";
            d.computed = "least n with E(n) >= 2 (ratio nondecreasing beyond) is " +
                         std::to_string(exact) + "; E(10) = " +
                         short_decimal(bound_value(1, 10, support, BoundVariant::E)) +
                         ", E(11) = " +
                         short_decimal(bound_value(1, 11, support, BoundVariant::E));
            out.push_back(std::move(d));
        }
    }
    if (c == 3) {
        const PowerProduct e30_sq = bound_value(3, 30, support, BoundVariant::E).pow(Rational(2));
        const auto exact_sq = e30_sq.as_rational();
        {
            PaperDiscrepancy d;
            d.claim_ref = "Eq. (21)";
            d.claimed = "(E(30))^2 = 29!/(4^29 * 3^28 * 57) >= 0.423";
            d.computed = "(E(30))^2 = " + (exact_sq ? fraction_string(*exact_sq) : std::string("?")) +
                         " = " + short_decimal(e30_sq) + " < 1 exactly";
            out.push_back(std::move(d));
        }
        const unsigned long exact = crossover_index(3, support, Rational(1), BoundVariant::E, scan_limit);
        if (exact != 31) {
            PaperDiscrepancy d;
            d.claim_ref = "Eqs. (19)-(22)";
            d.claimed = "E(31) > 1 and E(n+1)/E(n) > 1 for n > 30, hence D_n > 1 for all n >= 31";
            d.computed = "least n with E(n) >= 1 (ratio nondecreasing beyond) is " +
                         std::to_string(exact);
            out.push_back(std::move(d));
        }
    }
    return out;
}

}  // namespace detail

inline IntegralityReport certify(std::uint64_t c, const CertifyOptions& options = {}) {
    if (c == 0) throw std::invalid_argument("certify: c must be >= 1");
    const OddPrimeSupport support = OddPrimeSupport::of(c, options.factor_limit);
    const BoundVariant variant = options.variant.value_or(auto_variant(support));
    const Rational threshold = options.threshold.value_or(default_threshold(c));

    IntegralityReport report;
    report.c = c;
    report.threshold_variant = variant;
    report.threshold = threshold;
    report.crossover = crossover_index(c, support, threshold, variant, options.scan_limit);

    const unsigned long floor_horizon = report.crossover > 0 ? report.crossover - 1 : 0;
    report.horizon_checked = std::max(floor_horizon, options.horizon.value_or(64ul));

    const SequenceTable table = build_table(c, report.horizon_checked);
    report.integral_indices.push_back(0);  // x_0 = 1
    for (unsigned long n = 0; n <= report.horizon_checked; ++n) {
        EvidenceItem item;
        item.n = n;
        item.x = fraction_string(table.x(n));
        if (n >= 1) {
            item.D = table.D(n);
            item.is_integer = (*item.D == 1);
            item.interval_ok = fixed_point_interval_check(c, n, table.x(n));
            item.window_excluded = window_excludes_integer(c, n).excluded;
            if (n >= 2) {
                const Rational q = quadratic_residual(table, n);
                item.quadratic_in_window =
                    Rational(Integer(static_cast<unsigned long>(n - 1))) < q &&
                    q < Rational(Integer(static_cast<unsigned long>(n)));
            }
            if (item.is_integer) report.integral_indices.push_back(n);
        } else {
            item.is_integer = true;
        }
        report.evidence.push_back(std::move(item));
    }

    report.paper_discrepancies = detail::adjudicate_published_claims(c, support, options.scan_limit);
    return report;
}

inline nlohmann::ordered_json report_json(const IntegralityReport& r) {
    nlohmann::ordered_json j;
    j["c"] = r.c;
    j["threshold_variant"] = to_string(r.threshold_variant);
    j["threshold"] = fraction_string(r.threshold);
    j["crossover"] = r.crossover;
    j["horizon_checked"] = r.horizon_checked;
    j["integral_indices"] = r.integral_indices;
    j["evidence"] = nlohmann::ordered_json::array();
    for (const auto& e : r.evidence) {
        nlohmann::ordered_json je;
        je["n"] = e.n;
        je["x"] = e.x;
        je["D"] = e.D ? nlohmann::ordered_json(e.D->get_str()) : nlohmann::ordered_json(nullptr);
        je["interval_ok"] = e.interval_ok ? nlohmann::ordered_json(*e.interval_ok)
                                          : nlohmann::ordered_json(nullptr);
        je["window_excluded"] = e.window_excluded ? nlohmann::ordered_json(*e.window_excluded)
                                                  : nlohmann::ordered_json(nullptr);
        je["quadratic_in_window"] = e.quadratic_in_window
                                        ? nlohmann::ordered_json(*e.quadratic_in_window)
                                        : nlohmann::ordered_json(nullptr);
        je["is_integer"] = e.is_integer;
        j["evidence"].push_back(std::move(je));
    }
    j["paper_discrepancies"] = nlohmann::ordered_json::array();
    for (const auto& d : r.paper_discrepancies) {
        nlohmann::ordered_json jd;
        jd["claim_ref"] = d.claim_ref;
        jd["claimed"] = d.claimed;
        jd["computed"] = d.computed;
        j["paper_discrepancies"].push_back(std::move(jd));
    }
    return j;
}

inline std::string report_json_string(const IntegralityReport& r) {
    return report_json(r).dump(2) + "\n";
}

// Tabular renderings of a sequence table (the regenerated companion table).
inline std::string table_tsv(const SequenceTable& t) {
    std::ostringstream os;
    os << "n\tx\ta\td\tD\n";
    for (std::size_t n = 0; n <= t.n_max(); ++n) {
        const SequenceRow& r = t.row(n);
        os << n << "\t" << fraction_string(r.x) << "\t" << r.a.get_str() << "\t"
           << (r.d ? r.d->get_str() : "-") << "\t" << (r.D ? r.D->get_str() : "-") << "\n";
    }
    return os.str();
}

inline nlohmann::ordered_json table_json(const SequenceTable& t) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (std::size_t n = 0; n <= t.n_max(); ++n) {
        const SequenceRow& r = t.row(n);
        nlohmann::ordered_json jr;
        jr["n"] = n;
        jr["x"] = fraction_string(r.x);
        jr["a"] = r.a.get_str();
        jr["d"] = r.d ? nlohmann::ordered_json(r.d->get_str()) : nlohmann::ordered_json(nullptr);
        jr["D"] = r.D ? nlohmann::ordered_json(r.D->get_str()) : nlohmann::ordered_json(nullptr);
        rows.push_back(std::move(jr));
    }
    nlohmann::ordered_json j;
    j["c"] = t.c();
    j["rows"] = std::move(rows);
    return j;
}

}  // namespace cnx

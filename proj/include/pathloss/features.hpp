#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <span>
#include <string>
#include <vector>

#include "pathloss/errors.hpp"
#include "pathloss/ingest.hpp"
#include "pathloss/types.hpp"

namespace pathloss {

// Canonical order of the environmental regressors. A ModelSpec may select a
// subset; selected columns always appear in this order.
inline const std::vector<std::string>& environmental_term_order() {
    static const std::vector<std::string> order = {
        "co2", "humidity", "pm25", "pressure", "temperature"};
    return order;
}

// Which regressors enter the model. The baseline uses geometry only; the
// environment-aware spec adds telemetry terms and SNR.
struct ModelSpec {
    bool include_environment = true;
    bool include_snr = true;
    std::vector<std::string> environmental_terms = environmental_term_order();
    double d0_m = 1.0;
    double frequency_mhz = 868.0;

    void validate() const {
        if (!(d0_m > 0.0)) throw DataError("model spec: d0 must be > 0");
        if (!(frequency_mhz > 0.0)) {
            throw DataError("model spec: frequency must be > 0");
        }
        if (include_environment && environmental_terms.empty()) {
            throw DataError(
                "model spec: include_environment set but no environmental terms");
        }
        if (!include_environment && !environmental_terms.empty()) {
            throw DataError(
                "model spec: environmental terms listed but include_environment unset");
        }
        for (const auto& t : environmental_terms) {
            const auto& order = environmental_term_order();
            if (std::find(order.begin(), order.end(), t) == order.end()) {
                throw DataError("model spec: unknown environmental term: " + t);
            }
        }
    }

    // Selected environmental terms in canonical order.
    std::vector<std::string> canonical_terms() const {
        std::vector<std::string> out;
        for (const auto& t : environmental_term_order()) {
            if (std::find(environmental_terms.begin(), environmental_terms.end(),
                          t) != environmental_terms.end()) {
                out.push_back(t);
            }
        }
        return out;
    }

    std::vector<std::string> column_labels() const {
        std::vector<std::string> labels = {"intercept", "log_distance",
                                           "brick_walls", "wood_walls"};
        if (include_environment) {
            for (const auto& t : canonical_terms()) labels.push_back(t);
        }
        if (include_snr) labels.push_back("snr");
        return labels;
    }

    static ModelSpec baseline(double d0 = 1.0, double f_mhz = 868.0) {
        ModelSpec s;
        s.include_environment = false;
        s.include_snr = false;
        s.environmental_terms.clear();
        s.d0_m = d0;
        s.frequency_mhz = f_mhz;
        return s;
    }
};

// Regressors and response. The response has the fixed-frequency offset
// 20*log10(f_MHz) already subtracted, so the fitted intercept is the model
// intercept rather than intercept-plus-offset.
struct DesignMatrix {
    std::vector<std::string> columns;
    Eigen::MatrixXd X;
    Eigen::VectorXd y;
    double frequency_offset_db = 0.0;

    std::size_t n() const { return static_cast<std::size_t>(X.rows()); }
    std::size_t p() const { return static_cast<std::size_t>(X.cols()); }

    std::size_t column_index(const std::string& label) const {
        for (std::size_t j = 0; j < columns.size(); ++j) {
            if (columns[j] == label) return j;
        }
        throw DataError("no such design column: " + label);
    }
};

inline double frequency_offset_db(double frequency_mhz) {
    return 20.0 * std::log10(frequency_mhz);
}

inline DesignMatrix build_design_matrix(std::span<const LinkedSample> samples,
                                        const ModelSpec& spec,
                                        const RadioConfig& radio) {
    spec.validate();
    validate(radio);
    DesignMatrix d;
    d.columns = spec.column_labels();
    d.frequency_offset_db = frequency_offset_db(spec.frequency_mhz);
    const auto n = static_cast<Eigen::Index>(samples.size());
    const auto p = static_cast<Eigen::Index>(d.columns.size());
    d.X.resize(n, p);
    d.y.resize(n);

    const auto env_terms = spec.include_environment
                               ? spec.canonical_terms()
                               : std::vector<std::string>{};
    for (Eigen::Index i = 0; i < n; ++i) {
        const auto& s = samples[static_cast<std::size_t>(i)];
        if (!(s.link.distance_m > 0.0)) {
            throw DataError("row " + std::to_string(i) + " (device " +
                            s.link.device_id + "): distance must be > 0");
        }
        Eigen::Index j = 0;
        d.X(i, j++) = 1.0;
        d.X(i, j++) = 10.0 * std::log10(s.link.distance_m / spec.d0_m);
        d.X(i, j++) = static_cast<double>(s.link.brick_walls);
        d.X(i, j++) = static_cast<double>(s.link.wood_walls);
        for (const auto& t : env_terms) {
            d.X(i, j++) = numeric_field(s.record, t);
        }
        if (spec.include_snr) d.X(i, j++) = s.record.snr;
        d.y(i) = compute_path_loss(s.record, radio) - d.frequency_offset_db;
        for (Eigen::Index c = 0; c < p; ++c) {
            if (!std::isfinite(d.X(i, c))) {
                throw DataError("row " + std::to_string(i) +
                                ": non-finite value in column " +
                                d.columns[static_cast<std::size_t>(c)]);
            }
        }
        if (!std::isfinite(d.y(i))) {
            throw DataError("row " + std::to_string(i) + ": non-finite response");
        }
    }
    return d;
}

// Row subset of a design matrix (used by the split and CV paths).
inline DesignMatrix take_rows(const DesignMatrix& d,
                              std::span<const std::size_t> rows) {
    DesignMatrix out;
    out.columns = d.columns;
    out.frequency_offset_db = d.frequency_offset_db;
    out.X.resize(static_cast<Eigen::Index>(rows.size()), d.X.cols());
    out.y.resize(static_cast<Eigen::Index>(rows.size()));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        out.X.row(static_cast<Eigen::Index>(i)) =
            d.X.row(static_cast<Eigen::Index>(rows[i]));
        out.y(static_cast<Eigen::Index>(i)) =
            d.y(static_cast<Eigen::Index>(rows[i]));
    }
    return out;
}

}  // namespace pathloss

#pragma once

#include <charconv>
#include <cstdint>
#include <istream>
#include <map>
#include <span>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "pathloss/csv.hpp"
#include "pathloss/errors.hpp"
#include "pathloss/iso8601.hpp"
#include "pathloss/isolation_forest.hpp"
#include "pathloss/types.hpp"

namespace pathloss {

inline constexpr std::array<std::string_view, 10> kMeasurementColumns = {
    "timestamp", "device_id", "sf",       "rssi", "snr",
    "temperature", "humidity", "pressure", "pm25", "co2"};

struct RowIssue {
    std::size_t line = 0;  // 1-based line number in the source file
    std::string message;
};

struct ParseOutcome {
    std::vector<MeasurementRecord> records;
    std::vector<RowIssue> skipped;
};

struct ParsePolicy {
    bool strict = false;  // abort on the first bad row instead of skipping
};

namespace detail {

inline bool parse_double(const std::string& s, double& out) {
    if (s.empty()) return false;
    const char* begin = s.data();
    const char* end = begin + s.size();
    const auto res = std::from_chars(begin, end, out);
    return res.ec == std::errc{} && res.ptr == end;
}

inline bool parse_int(const std::string& s, int& out) {
    if (s.empty()) return false;
    const char* begin = s.data();
    const char* end = begin + s.size();
    const auto res = std::from_chars(begin, end, out);
    return res.ec == std::errc{} && res.ptr == end;
}

}  // namespace detail

// Reads the measurement CSV. The header must contain every documented column
// (extra columns are ignored). Rows failing type or range checks are skipped
// and reported with their line number, or abort the parse under `strict`.
inline ParseOutcome parse_measurements(std::istream& in,
                                       const ParsePolicy& policy = {}) {
    std::string line;
    if (!csv::read_line(in, line)) {
        throw SchemaError("measurement CSV is empty (missing header)");
    }
    const auto header = csv::split_line(line);
    std::map<std::string_view, std::size_t> col;
    for (std::size_t i = 0; i < header.size(); ++i) col[header[i]] = i;
    for (const auto name : kMeasurementColumns) {
        if (!col.count(name)) {
            throw SchemaError("missing required column: " + std::string(name));
        }
    }

    ParseOutcome out;
    std::size_t line_no = 1;
    while (csv::read_line(in, line)) {
        ++line_no;
        if (line.empty() || line == "\r") continue;
        const auto fields = csv::split_line(line);
        std::string issue;
        MeasurementRecord rec;
        if (fields.size() < header.size()) {
            issue = "expected " + std::to_string(header.size()) + " fields, got " +
                    std::to_string(fields.size());
        } else {
            const auto& ts = fields[col["timestamp"]];
            if (const auto t = parse_iso8601_utc(ts)) {
                rec.timestamp = *t;
            } else {
                issue = "bad timestamp '" + ts + "'";
            }
            rec.device_id = fields[col["device_id"]];
            if (issue.empty() && !detail::parse_int(fields[col["sf"]], rec.spreading_factor)) {
                issue = "bad sf '" + fields[col["sf"]] + "'";
            }
            const std::pair<std::string_view, double MeasurementRecord::*> numeric[] = {
                {"rssi", &MeasurementRecord::rssi},
                {"snr", &MeasurementRecord::snr},
                {"temperature", &MeasurementRecord::temperature},
                {"humidity", &MeasurementRecord::humidity},
                {"pressure", &MeasurementRecord::pressure},
                {"pm25", &MeasurementRecord::pm25},
                {"co2", &MeasurementRecord::co2},
            };
            for (const auto& [name, member] : numeric) {
                if (!issue.empty()) break;
                if (!detail::parse_double(fields[col[name]], rec.*member)) {
                    issue = "bad " + std::string(name) + " '" + fields[col[name]] + "'";
                }
            }
            if (issue.empty()) issue = validate_record(rec);
        }
        if (issue.empty()) {
            out.records.push_back(std::move(rec));
        } else if (policy.strict) {
            throw DataError("line " + std::to_string(line_no) + ": " + issue);
        } else {
            out.skipped.push_back({line_no, issue});
        }
    }
    return out;
}

// Removes duplicate (device_id, timestamp) records, first occurrence kept,
// then filters to spreading factors in [sf_low, sf_high]. Order is stable.
inline std::vector<MeasurementRecord> dedup_and_filter_sf(
    std::span<const MeasurementRecord> records, int sf_low, int sf_high) {
    if (sf_low > sf_high) throw DataError("sf_low must be <= sf_high");
    std::unordered_set<std::string> seen;
    std::vector<MeasurementRecord> out;
    out.reserve(records.size());
    std::string key;
    for (const auto& r : records) {
        key = r.device_id;
        key += '\x1f';
        key += std::to_string(r.timestamp);
        if (!seen.insert(key).second) continue;
        if (r.spreading_factor < sf_low || r.spreading_factor > sf_high) continue;
        out.push_back(r);
    }
    return out;
}

// Link-budget inversion: PL = EIRP + receive gain - RSSI.
inline double compute_path_loss(const MeasurementRecord& r,
                                const RadioConfig& radio) {
    return radio.tx_power_dbm + radio.tx_gain_dbi + radio.rx_gain_dbi - r.rssi;
}

inline std::vector<LinkedSample> join_links(
    std::span<const MeasurementRecord> records,
    std::span<const LinkProfile> profiles) {
    std::unordered_map<std::string_view, const LinkProfile*> by_device;
    for (const auto& p : profiles) {
        validate(p);
        by_device[p.device_id] = &p;
    }
    std::vector<LinkedSample> out;
    out.reserve(records.size());
    for (const auto& r : records) {
        const auto it = by_device.find(r.device_id);
        if (it == by_device.end()) {
            throw JoinError("no link profile for device " + r.device_id,
                            r.device_id);
        }
        out.push_back({r, *it->second});
    }
    return out;
}

struct OutlierSplit {
    std::vector<MeasurementRecord> kept;
    std::vector<MeasurementRecord> flagged;
    std::vector<double> scores;  // per input record, input order
};

// Isolation-forest outlier removal over the named numeric features. Exactly
// floor(contamination * n) records are flagged, ties broken by record order.
inline OutlierSplit isolation_forest_outliers(
    std::span<const MeasurementRecord> records,
    std::span<const std::string> feature_names,
    const IsolationForestOptions& options) {
    if (options.contamination < 0.0 || options.contamination >= 0.5) {
        throw DataError("contamination must be in [0, 0.5)");
    }
    if (feature_names.empty()) {
        throw DataError("isolation forest: empty feature set");
    }
    OutlierSplit split;
    if (records.empty()) return split;

    const std::size_t n = records.size();
    const std::size_t f = feature_names.size();
    std::vector<double> data(n * f);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < f; ++j) {
            data[i * f + j] = numeric_field(records[i], feature_names[j]);
        }
    }
    IsolationForest forest(data, n, f, options);
    split.scores = forest.score_all();
    const auto flagged_idx = top_outlier_indices(split.scores, options.contamination);

    std::vector<char> is_flagged(n, 0);
    for (const auto i : flagged_idx) is_flagged[i] = 1;
    split.kept.reserve(n - flagged_idx.size());
    split.flagged.reserve(flagged_idx.size());
    for (std::size_t i = 0; i < n; ++i) {
        (is_flagged[i] ? split.flagged : split.kept).push_back(records[i]);
    }
    return split;
}

inline std::vector<std::string> default_outlier_features() {
    return {"rssi", "snr", "temperature", "humidity", "pressure", "pm25", "co2"};
}

}  // namespace pathloss

#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <string>
#include <string_view>

#include "pathloss/errors.hpp"

namespace pathloss {

// One uplink: radio metadata plus the environmental readings carried in the
// payload. Timestamps are UTC epoch seconds.
struct MeasurementRecord {
    std::int64_t timestamp = 0;
    std::string device_id;
    int spreading_factor = 7;
    double rssi = 0.0;         // dBm
    double snr = 0.0;          // dB
    double temperature = 0.0;  // degC
    double humidity = 0.0;     // % relative
    double pressure = 0.0;     // hPa
    double pm25 = 0.0;         // ug/m^3
    double co2 = 0.0;          // ppm
};

// Per-device geometry: gateway distance and wall counts along the path.
struct LinkProfile {
    std::string device_id;
    double distance_m = 0.0;
    int brick_walls = 0;
    int wood_walls = 0;
};

// Radio constants used to invert RSSI into path loss.
struct RadioConfig {
    double tx_power_dbm = 14.0;  // EU868 duty-cycle-class maximum
    double tx_gain_dbi = 0.0;
    double rx_gain_dbi = 0.0;
    double frequency_mhz = 868.0;
    double d0_m = 1.0;
};

struct LinkedSample {
    MeasurementRecord record;
    LinkProfile link;
};

// Numeric record fields addressable by CSV column name, e.g. for selecting
// outlier-detection features.
inline constexpr std::array<std::string_view, 7> kNumericFields = {
    "rssi", "snr", "temperature", "humidity", "pressure", "pm25", "co2"};

inline double numeric_field(const MeasurementRecord& r, std::string_view name) {
    if (name == "rssi") return r.rssi;
    if (name == "snr") return r.snr;
    if (name == "temperature") return r.temperature;
    if (name == "humidity") return r.humidity;
    if (name == "pressure") return r.pressure;
    if (name == "pm25") return r.pm25;
    if (name == "co2") return r.co2;
    throw DataError("unknown numeric field: " + std::string(name));
}

// Range/sanity rules for a parsed record; returns an empty string when valid.
inline std::string validate_record(const MeasurementRecord& r) {
    const auto finite = [](double v) { return std::isfinite(v); };
    if (r.spreading_factor < 7 || r.spreading_factor > 12) {
        return "spreading_factor outside 7..12";
    }
    for (const auto name : kNumericFields) {
        if (!finite(numeric_field(r, name))) {
            return std::string(name) + " is not finite";
        }
    }
    if (r.humidity < 0.0 || r.humidity > 100.0) return "humidity outside [0,100]";
    if (r.pm25 < 0.0) return "pm25 negative";
    if (r.co2 < 0.0) return "co2 negative";
    if (r.device_id.empty()) return "empty device_id";
    return {};
}

inline void validate(const LinkProfile& p) {
    if (!(p.distance_m > 0.0)) {
        throw DataError("link profile " + p.device_id + ": distance must be > 0");
    }
    if (p.brick_walls < 0 || p.wood_walls < 0) {
        throw DataError("link profile " + p.device_id + ": negative wall count");
    }
}

inline void validate(const RadioConfig& r) {
    if (!(r.frequency_mhz > 0.0)) throw DataError("radio: frequency must be > 0");
    if (!(r.d0_m > 0.0)) throw DataError("radio: d0 must be > 0");
}

}  // namespace pathloss

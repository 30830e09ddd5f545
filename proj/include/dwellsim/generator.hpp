#pragma once

// Synthetic container-stream generator. Containers arrive in vessel
// batches; each draws a cargo profile whose description embeds a keyword
// the mock standardizer resolves to a full HS code, and an owner profile
// that resolves to a KSIC code and size class. True dwell is log-normal
// per (cargo profile, owner size): larger owners dwell shorter with less
// spread. Configured fractions of descriptions are ambiguous (generic
// terms only) or junk (unclassifiable). Deterministic given the seed.

#include <array>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "dwellsim/backend.hpp"
#include "dwellsim/error.hpp"
#include "dwellsim/mock_tables.hpp"
#include "dwellsim/record.hpp"
#include "dwellsim/rng.hpp"
#include "dwellsim/standard_code.hpp"
#include "dwellsim/time.hpp"

namespace dwellsim {

// Log-normal dwell parameters in log-hours.
struct DwellParams {
    double mu = 4.0;
    double sigma = 0.45;

    bool operator==(const DwellParams&) const = default;
};

struct GeneratorConfig {
    int n_containers = 1000;
    double vessel_interarrival_hours = 6.0;
    double batch_size_mean = 40.0;
    int n_cargo_profiles = 12;
    int n_owner_profiles = 10;
    // t_cr lands at this fraction of the full dwell.
    double cr_fraction_lo = 0.2;
    double cr_fraction_hi = 0.6;
    // Pickup pre-notice lead time t_out - t_cp.
    double cp_lead_lo = 1.0;
    double cp_lead_hi = 48.0;
    // Delivery-order slack t_do - t_cp.
    double do_margin_lo = 6.0;
    double do_margin_hi = 72.0;
    double reefer_fraction = 0.07;
    double ft40_fraction = 0.45;
    double ambiguous_fraction = 0.05;
    double junk_fraction = 0.01;
    // Per-profile mean dwell (hours) is drawn from this range when
    // dwell_params is left empty.
    double base_dwell_mean_lo = 30.0;
    double base_dwell_mean_hi = 130.0;
    std::string start_date = "2026-01-05";
    std::uint64_t seed = 0;
    // Dwell parameters per cargo profile, indexed by OwnerSize (Large,
    // Mid, SME, Unknown). Empty means derive defaults from the seed.
    std::vector<std::array<DwellParams, 4>> dwell_params;

    void validate() const {
        if (n_containers < 0) {
            throw ConfigError("n_containers must be non-negative");
        }
        if (vessel_interarrival_hours <= 0.0 || batch_size_mean < 1.0) {
            throw ConfigError("vessel schedule parameters must be positive");
        }
        if (n_cargo_profiles < 1 ||
            n_cargo_profiles > static_cast<int>(std::size(data::kCiKeywords))) {
            throw ConfigError("n_cargo_profiles outside the keyword table");
        }
        if (n_owner_profiles < 1 ||
            n_owner_profiles > static_cast<int>(std::size(data::kOiKeywords))) {
            throw ConfigError("n_owner_profiles outside the owner table");
        }
        if (!(0.0 < cr_fraction_lo && cr_fraction_lo < cr_fraction_hi && cr_fraction_hi < 1.0)) {
            throw ConfigError("cr fraction range must satisfy 0 < lo < hi < 1");
        }
        if (!(1.0 <= cp_lead_lo && cp_lead_lo + 0.01 <= cp_lead_hi && cp_lead_hi <= 48.0)) {
            throw ConfigError("cp lead range must lie within [1, 48] hours");
        }
        if (!(0.0 < do_margin_lo && do_margin_lo < do_margin_hi)) {
            throw ConfigError("do margin range must be positive and increasing");
        }
        for (double f : {reefer_fraction, ft40_fraction, ambiguous_fraction, junk_fraction}) {
            if (f < 0.0 || f > 1.0) {
                throw ConfigError("fractions must lie in [0, 1]");
            }
        }
        if (ambiguous_fraction + junk_fraction > 1.0) {
            throw ConfigError("ambiguous and junk fractions exceed 1");
        }
        if (!(0.0 < base_dwell_mean_lo && base_dwell_mean_lo <= base_dwell_mean_hi)) {
            throw ConfigError("base dwell mean range must be positive and increasing");
        }
        if (!dwell_params.empty() &&
            dwell_params.size() != static_cast<std::size_t>(n_cargo_profiles)) {
            throw ConfigError("dwell_params must have one entry per cargo profile");
        }
        parse_iso8601(start_date);
    }
};

struct GeneratedDataset {
    std::vector<ContainerRecord> records;
    // Expected standardization per distinct raw text, as the mock backend
    // will answer it.
    std::map<std::string, StandardizationResult> cargo_truth;
    std::map<std::string, StandardizationResult> owner_truth;
};

namespace detail {

inline constexpr std::string_view kCountries[] = {
    "CN", "KR", "JP", "VN", "TH", "US", "DE", "SG", "MY", "ID", "IN", "TW", "PH", "HK", "AU",
    "NL", "RU", "SA", "AE", "BR", "MX", "CA", "GB", "FR", "IT", "ES", "PL", "TR", "EG", "ZA",
    "CL", "PE", "AR", "NZ", "BD", "LK", "PK", "KH", "MM", "LA", "NG", "KE", "QA", "KW",
};

inline constexpr std::string_view kCarriers[] = {
    "HMM", "MSC", "MAERSK", "CMA", "COSCO", "ONE", "EVERGREEN", "YML", "ZIM",
};

inline constexpr std::string_view kAmbiguousCargo[] = {
    "GENERAL GOODS", "SAMPLE MATERIAL", "MISC COMMODITY", "CHEMICAL PRODUCT",
    "MACHINERY SPARES", "TEXTILE ROLLS", "FOODSTUFF ASSORTED",
};

inline constexpr std::string_view kJunkCargo[] = {
    "QX7 119", "ZZ 4481 KP", "NO DESCR", "XKTR 88 PCS", "N A",
};

inline constexpr std::string_view kAmbiguousOwner[] = {
    "KP TRADING CO", "BG INTERNATIONAL LTD", "TH LOGISTICS CO", "JS GLOBAL LTD",
    "DH INDUSTRY CO",
};

inline constexpr std::string_view kJunkOwner[] = {
    "ZQX 77", "PRIVATE PERSON", "UNLISTED 9",
};

// Weights decaying harmonically: a few heavy categories, a long tail.
inline std::vector<double> harmonic_weights(std::size_t n) {
    std::vector<double> w(n);
    for (std::size_t i = 0; i < n; ++i) {
        w[i] = 1.0 / static_cast<double>(i + 1);
    }
    return w;
}

}  // namespace detail

// The per-(profile, owner size) log-normal parameters actually used:
// either the configured table or defaults derived from the seed. Larger
// owners get a lower mean and tighter spread.
inline std::vector<std::array<DwellParams, 4>> effective_dwell_params(
    const GeneratorConfig& config) {
    if (!config.dwell_params.empty()) {
        return config.dwell_params;
    }
    // Index order matches OwnerSize: Large, Mid, SME, Unknown.
    constexpr double kMeanScale[4] = {0.80, 1.00, 1.15, 1.00};
    constexpr double kSigma[4] = {0.30, 0.45, 0.55, 0.50};
    Rng rng(mix_seed(config.seed, 0x4457454cULL));
    std::vector<std::array<DwellParams, 4>> params;
    params.reserve(static_cast<std::size_t>(config.n_cargo_profiles));
    for (int p = 0; p < config.n_cargo_profiles; ++p) {
        double base_mean = rng.uniform(config.base_dwell_mean_lo, config.base_dwell_mean_hi);
        std::array<DwellParams, 4> per_size;
        for (int s = 0; s < 4; ++s) {
            double mean = base_mean * kMeanScale[s];
            per_size[static_cast<std::size_t>(s)] = DwellParams{
                std::log(mean) - kSigma[s] * kSigma[s] / 2.0, kSigma[s]};
        }
        params.push_back(per_size);
    }
    return params;
}

inline GeneratedDataset generate_dataset(const GeneratorConfig& config) {
    config.validate();
    MockBackend mock;
    Rng rng(config.seed);
    GeneratedDataset out;
    out.records.reserve(static_cast<std::size_t>(config.n_containers));

    // Cargo profiles: distinct keyword-table rows, each with a fixed set
    // of raw-text variants so descriptions repeat across containers.
    std::vector<int> keyword_order(std::size(data::kCiKeywords));
    for (std::size_t i = 0; i < keyword_order.size(); ++i) {
        keyword_order[i] = static_cast<int>(i);
    }
    rng.shuffle(keyword_order);
    std::vector<std::vector<std::string>> cargo_variants;
    for (int p = 0; p < config.n_cargo_profiles; ++p) {
        std::string kw(data::kCiKeywords[static_cast<std::size_t>(keyword_order[p])].token);
        cargo_variants.push_back(
            {kw, kw + " EXPORT PACKED", "BULK " + kw + " GRADE A"});
    }

    std::vector<int> owner_order(std::size(data::kOiKeywords));
    for (std::size_t i = 0; i < owner_order.size(); ++i) {
        owner_order[i] = static_cast<int>(i);
    }
    rng.shuffle(owner_order);
    std::vector<std::vector<std::string>> owner_variants;
    for (int p = 0; p < config.n_owner_profiles; ++p) {
        std::string name(data::kOiKeywords[static_cast<std::size_t>(owner_order[p])].token);
        owner_variants.push_back(
            {name + " TRADING CO LTD", name + " CO LTD", name + " CORP"});
    }

    auto remember = [&](std::map<std::string, StandardizationResult>& truth,
                        const std::string& raw, CodeKind kind) {
        if (truth.find(raw) == truth.end()) {
            truth.emplace(raw, mock.standardize_raw(raw, kind));
        }
    };

    const auto dwell = effective_dwell_params(config);
    const auto country_weights = detail::harmonic_weights(std::size(detail::kCountries));
    const auto carrier_weights = detail::harmonic_weights(std::size(detail::kCarriers));
    const double bl_weights_arr[] = {0.15, 0.55, 0.25, 0.05};  // B0, B1, B2, None
    const std::vector<double> bl_weights(std::begin(bl_weights_arr), std::end(bl_weights_arr));

    // Short dwells must still leave room for the full event chain:
    // customs release at <= cr_fraction_hi of dwell, then a pre-notice
    // lead of at least cp_lead_lo hours before departure.
    const double dwell_floor =
        std::max(6.0, config.cp_lead_lo / (0.9 * (1.0 - config.cr_fraction_hi)) + 0.5);

    DateTime vessel_time = parse_iso8601(config.start_date);
    int produced = 0;
    while (produced < config.n_containers) {
        int batch = std::max(
            1, static_cast<int>(std::llround(
                   rng.normal(config.batch_size_mean, config.batch_size_mean / 4.0))));
        for (int i = 0; i < batch && produced < config.n_containers; ++i, ++produced) {
            ContainerRecord r;
            char id[24];
            std::snprintf(id, sizeof(id), "CNT-%06d", produced + 1);
            r.id = id;

            // Unloading order within the batch spaces arrivals minutes
            // apart.
            r.t_in = vessel_time + static_cast<double>(i) * rng.uniform(0.02, 0.08);

            int cargo_profile = static_cast<int>(rng.uniform_below(
                static_cast<std::uint64_t>(config.n_cargo_profiles)));
            double text_roll = rng.uniform01();
            if (text_roll < config.junk_fraction) {
                r.ci_raw = detail::kJunkCargo[rng.uniform_below(std::size(detail::kJunkCargo))];
            } else if (text_roll < config.junk_fraction + config.ambiguous_fraction) {
                r.ci_raw = detail::kAmbiguousCargo[rng.uniform_below(
                    std::size(detail::kAmbiguousCargo))];
            } else {
                const auto& variants = cargo_variants[static_cast<std::size_t>(cargo_profile)];
                r.ci_raw = variants[rng.uniform_below(variants.size())];
            }
            remember(out.cargo_truth, r.ci_raw, CodeKind::HS);

            OwnerSize owner_size = OwnerSize::Unknown;
            double owner_roll = rng.uniform01();
            if (owner_roll < config.junk_fraction) {
                r.oi_raw = detail::kJunkOwner[rng.uniform_below(std::size(detail::kJunkOwner))];
            } else if (owner_roll < config.junk_fraction + config.ambiguous_fraction) {
                r.oi_raw = detail::kAmbiguousOwner[rng.uniform_below(
                    std::size(detail::kAmbiguousOwner))];
            } else {
                int owner_profile = static_cast<int>(rng.uniform_below(
                    static_cast<std::uint64_t>(config.n_owner_profiles)));
                const auto& variants = owner_variants[static_cast<std::size_t>(owner_profile)];
                r.oi_raw = variants[rng.uniform_below(variants.size())];
                owner_size = owner_size_from_string(std::string(
                    data::kOiKeywords[static_cast<std::size_t>(owner_order[owner_profile])]
                        .size));
            }
            remember(out.owner_truth, r.oi_raw, CodeKind::KSIC);

            const DwellParams& dp = dwell[static_cast<std::size_t>(
                cargo_profile)][static_cast<std::size_t>(owner_size)];
            double dwell_h = std::max(dwell_floor, rng.lognormal(dp.mu, dp.sigma));

            double cr_frac = rng.uniform(config.cr_fraction_lo, config.cr_fraction_hi);
            double lead_hi =
                std::min(config.cp_lead_hi - 0.001, dwell_h * (1.0 - cr_frac) * 0.9);
            double lead = rng.uniform(config.cp_lead_lo + 0.001, lead_hi);
            double do_margin = rng.uniform(config.do_margin_lo, config.do_margin_hi);

            r.t_out = r.t_in + dwell_h;
            r.t_cr = r.t_in + dwell_h * cr_frac;
            r.t_cp = r.t_in + (dwell_h - lead);
            r.t_do = r.t_cp + do_margin;

            r.size = rng.bernoulli(config.ft40_fraction) ? ContainerSize::Ft40
                                                         : ContainerSize::Ft20;
            if (rng.bernoulli(config.reefer_fraction)) {
                r.ctype = ContainerType::Reefer;
            } else if (rng.bernoulli(0.03)) {
                r.ctype = ContainerType::Danger;
            } else if (rng.bernoulli(0.01)) {
                r.ctype = ContainerType::Other;
            } else {
                r.ctype = ContainerType::Dry;
            }
            r.bl = static_cast<BlCategory>(rng.weighted_index(bl_weights));
            r.weight_kg = rng.uniform(2800.0, 28500.0);
            r.country = detail::kCountries[rng.weighted_index(country_weights)];
            r.carrier = detail::kCarriers[rng.weighted_index(carrier_weights)];

            r.validate();
            out.records.push_back(std::move(r));
        }
        vessel_time = vessel_time +
                      config.vessel_interarrival_hours * rng.uniform(0.6, 1.4);
    }
    return out;
}

}  // namespace dwellsim

#pragma once

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dexfod {

namespace detail {

inline void check_strictly_increasing(const std::vector<double>& e,
                                      const std::string& what) {
    for (std::size_t i = 1; i < e.size(); ++i)
        if (!(e[i] > e[i - 1]))
            throw std::invalid_argument(what + ": energies must be strictly increasing");
}

// Two whitespace-separated columns; '#' starts a comment line.
inline std::pair<std::vector<double>, std::vector<double>> read_two_column(
    const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open: " + path.string());
    std::vector<double> a, b;
    std::string line;
    while (std::getline(in, line)) {
        auto pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos || line[pos] == '#') continue;
        std::istringstream row(line);
        double x, y;
        if (!(row >> x >> y))
            throw std::runtime_error("malformed line in " + path.string() + ": " + line);
        a.push_back(x);
        b.push_back(y);
    }
    return {std::move(a), std::move(b)};
}

}  // namespace detail

// Tabulated tube spectrum: relative photon fluence per energy sample.
struct Spectrum {
    std::vector<double> energy;   // keV, strictly increasing
    std::vector<double> fluence;  // >= 0, total > 0
    std::string label;

    void validate() const {
        if (energy.empty()) throw std::invalid_argument("Spectrum: empty");
        if (energy.size() != fluence.size())
            throw std::invalid_argument("Spectrum: column length mismatch");
        detail::check_strictly_increasing(energy, "Spectrum");
        double total = 0;
        for (double f : fluence) {
            if (!(f >= 0) || !std::isfinite(f))
                throw std::invalid_argument("Spectrum: fluence must be finite and >= 0");
            total += f;
        }
        if (!(total > 0)) throw std::invalid_argument("Spectrum: total fluence must be > 0");
    }
};

inline Spectrum make_spectrum(std::vector<double> energy, std::vector<double> fluence,
                              std::string label = {}) {
    Spectrum s{std::move(energy), std::move(fluence), std::move(label)};
    s.validate();
    return s;
}

inline Spectrum monochromatic(double energy_kev, std::string label = {}) {
    return make_spectrum({energy_kev}, {1.0}, std::move(label));
}

// Tabulated linear attenuation curve kappa(E) for one material.
struct AttenuationCurve {
    std::vector<double> energy;  // keV, strictly increasing
    std::vector<double> mu;      // 1/cm, >= 0
    std::string material;

    void validate() const {
        if (energy.empty()) throw std::invalid_argument("AttenuationCurve: empty");
        if (energy.size() != mu.size())
            throw std::invalid_argument("AttenuationCurve: column length mismatch");
        detail::check_strictly_increasing(energy, "AttenuationCurve");
        for (double m : mu)
            if (!(m >= 0) || !std::isfinite(m))
                throw std::invalid_argument("AttenuationCurve: mu must be finite and >= 0");
    }

    bool covers(double e) const { return e >= energy.front() && e <= energy.back(); }
    bool covers(const Spectrum& s) const {
        return covers(s.energy.front()) && covers(s.energy.back());
    }

    // Log-log interpolation between nodes; segments touching mu = 0 fall
    // back to linear so log stays defined. Exact at the tabulated nodes.
    double at(double e) const {
        if (!covers(e))
            throw std::domain_error("AttenuationCurve: energy " + std::to_string(e) +
                                    " keV outside tabulated range of " + material);
        auto it = std::lower_bound(energy.begin(), energy.end(), e);
        std::size_t hi = static_cast<std::size_t>(it - energy.begin());
        if (hi < energy.size() && energy[hi] == e) return mu[hi];
        std::size_t lo = hi - 1;
        double m0 = mu[lo], m1 = mu[hi];
        if (m0 <= 0.0 || m1 <= 0.0) {
            double t = (e - energy[lo]) / (energy[hi] - energy[lo]);
            return m0 + t * (m1 - m0);
        }
        double t = (std::log(e) - std::log(energy[lo])) /
                   (std::log(energy[hi]) - std::log(energy[lo]));
        return std::exp(std::log(m0) + t * (std::log(m1) - std::log(m0)));
    }
};

inline AttenuationCurve make_attenuation_curve(std::vector<double> energy,
                                               std::vector<double> mu,
                                               std::string material = {}) {
    AttenuationCurve c{std::move(energy), std::move(mu), std::move(material)};
    c.validate();
    return c;
}

inline Spectrum load_spectrum(const std::filesystem::path& path, std::string label = {}) {
    auto [e, f] = detail::read_two_column(path);
    if (label.empty()) label = path.stem().string();
    return make_spectrum(std::move(e), std::move(f), std::move(label));
}

inline AttenuationCurve load_attenuation_curve(const std::filesystem::path& path,
                                               std::string material = {}) {
    auto [e, m] = detail::read_two_column(path);
    if (material.empty()) material = path.stem().string();
    return make_attenuation_curve(std::move(e), std::move(m), std::move(material));
}

}  // namespace dexfod

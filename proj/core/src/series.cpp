#include "turblab/series.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>

namespace turblab {

DiagnosticsSeries::DiagnosticsSeries(std::vector<std::string> channels)
    : names_(std::move(channels)), data_(names_.size()) {
    if (names_.empty()) throw ParamError("DiagnosticsSeries: no channels");
}

void DiagnosticsSeries::add_row(double t, const std::vector<double>& values) {
    if (values.size() != names_.size())
        throw ContractError("DiagnosticsSeries: row width mismatch");
    if (!t_.empty() && t <= t_.back())
        throw ContractError("DiagnosticsSeries: time stamps must strictly increase");
    t_.push_back(t);
    for (std::size_t c = 0; c < values.size(); ++c) data_[c].push_back(values[c]);
}

const std::vector<double>& DiagnosticsSeries::channel(const std::string& name) const {
    for (std::size_t c = 0; c < names_.size(); ++c)
        if (names_[c] == name) return data_[c];
    throw ContractError("DiagnosticsSeries: unknown channel " + name);
}

double DiagnosticsSeries::value(const std::string& name, std::size_t row) const {
    return channel(name).at(row);
}

double DiagnosticsSeries::last(const std::string& name) const {
    const auto& v = channel(name);
    if (v.empty()) throw ContractError("DiagnosticsSeries: empty channel " + name);
    return v.back();
}

double DiagnosticsSeries::integrate(const std::string& name) const {
    const auto& v = channel(name);
    double acc = 0.0;
    for (std::size_t i = 1; i < v.size(); ++i)
        acc += 0.5 * (v[i] + v[i - 1]) * (t_[i] - t_[i - 1]);
    return acc;
}

double DiagnosticsSeries::time_average(const std::string& name, double t0, double t1) const {
    return trapezoid_average(t_, channel(name), t0, t1);
}

void DiagnosticsSeries::write_csv(const std::string& path,
                                  const std::string& config_hash) const {
    std::ofstream os(path);
    if (!os) throw IoError("series: cannot write " + path);
    os << "# config_hash: " << config_hash << "\n";
    os << "t";
    for (const auto& n : names_) os << "," << n;
    os << "\n";
    char buf[32];
    for (std::size_t r = 0; r < t_.size(); ++r) {
        std::snprintf(buf, sizeof buf, "%.12g", t_[r]);
        os << buf;
        for (std::size_t c = 0; c < names_.size(); ++c) {
            std::snprintf(buf, sizeof buf, "%.12g", data_[c][r]);
            os << "," << buf;
        }
        os << "\n";
    }
}

double trapezoid_average(const std::vector<double>& t, const std::vector<double>& v,
                         double t0, double t1) {
    if (t.size() < 2) throw ParamError("trapezoid_average: need at least two samples");
    if (t0 < t.front() - 1e-12 || t1 > t.back() + 1e-12)
        throw ParamError("trapezoid_average: window exceeds recorded history");
    t0 = std::max(t0, t.front());
    t1 = std::min(t1, t.back());
    if (t1 <= t0) throw ParamError("trapezoid_average: empty window");

    auto interp = [&](double tq) {
        const auto it = std::upper_bound(t.begin(), t.end(), tq);
        std::size_t hi = std::min<std::size_t>(t.size() - 1, it - t.begin());
        if (hi == 0) hi = 1;
        const std::size_t lo = hi - 1;
        const double w = (tq - t[lo]) / (t[hi] - t[lo]);
        return v[lo] + w * (v[hi] - v[lo]);
    };

    double acc = 0.0;
    double prev_t = t0, prev_v = interp(t0);
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (t[i] <= t0 || t[i] >= t1) continue;
        acc += 0.5 * (v[i] + prev_v) * (t[i] - prev_t);
        prev_t = t[i];
        prev_v = v[i];
    }
    acc += 0.5 * (interp(t1) + prev_v) * (t1 - prev_t);
    return acc / (t1 - t0);
}

}  // namespace turblab

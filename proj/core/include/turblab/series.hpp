#pragma once

#include <string>
#include <vector>

#include "turblab/errors.hpp"

namespace turblab {

/// Time-stamped scalar diagnostics with named channels. Time stamps are
/// strictly increasing; every channel has one value per stamp.
class DiagnosticsSeries {
  public:
    explicit DiagnosticsSeries(std::vector<std::string> channels);

    void add_row(double t, const std::vector<double>& values);

    std::size_t rows() const { return t_.size(); }
    const std::vector<double>& times() const { return t_; }
    const std::vector<std::string>& channels() const { return names_; }
    const std::vector<double>& channel(const std::string& name) const;
    double value(const std::string& name, std::size_t row) const;
    double last(const std::string& name) const;

    /// Trapezoid time integral of a channel over the recorded history.
    double integrate(const std::string& name) const;
    /// Trapezoid average over [t0, t1] (clipped to the recorded range).
    double time_average(const std::string& name, double t0, double t1) const;

    /// CSV with a "# config_hash: ..." comment line followed by a header row.
    void write_csv(const std::string& path, const std::string& config_hash) const;

  private:
    std::vector<std::string> names_;
    std::vector<double> t_;
    std::vector<std::vector<double>> data_;  // per channel
};

/// Trapezoid average of samples (t_i, v_i) over [t0, t1]; endpoints are
/// interpolated linearly.
double trapezoid_average(const std::vector<double>& t, const std::vector<double>& v,
                         double t0, double t1);

}  // namespace turblab

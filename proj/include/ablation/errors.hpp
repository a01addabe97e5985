#pragma once

#include <stdexcept>
#include <string>

namespace ablation {

/// Rejected input: a physical constant or argument outside its domain.
/// The message names the offending field.
class param_error : public std::invalid_argument {
public:
    explicit param_error(const std::string& field, const std::string& what)
        : std::invalid_argument(field + ": " + what), field_(field) {}
    const std::string& field() const { return field_; }

private:
    std::string field_;
};

/// A quadrature or series failed to reach the requested accuracy.
/// Carries the best estimate obtained and its error estimate.
class accuracy_error : public std::runtime_error {
public:
    accuracy_error(const std::string& what, double best_estimate, double est_error)
        : std::runtime_error(what), best_estimate_(best_estimate), est_error_(est_error) {}
    double best_estimate() const { return best_estimate_; }
    double est_error() const { return est_error_; }

private:
    double best_estimate_;
    double est_error_;
};

} // namespace ablation

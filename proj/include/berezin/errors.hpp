#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace berezin {

using cplx = std::complex<double>;

/// Numeric failure during evaluation (non-finite integrand, eigensolver
/// breakdown, divergent series). Carries the offending node when known.
class numeric_error : public std::runtime_error {
public:
    explicit numeric_error(const std::string& what_arg)
        : std::runtime_error(what_arg), node_(0.0, 0.0), has_node_(false) {}

    numeric_error(const std::string& what_arg, cplx node)
        : std::runtime_error(what_arg), node_(node), has_node_(true) {}

    bool has_node() const noexcept { return has_node_; }
    cplx node() const noexcept { return node_; }

private:
    cplx node_;
    bool has_node_;
};

/// Requested accuracy is unreachable at the current discretization
/// (e.g. kernel tail too large for the truncation dimension).
class resolution_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace berezin

#pragma once

#include <stdexcept>
#include <string>

namespace sbmtest {

/// Invalid argument or precondition violation. CLI exit code 2.
class ParamError : public std::invalid_argument {
public:
    explicit ParamError(const std::string& what) : std::invalid_argument(what) {}
};

/// File or stream failure. CLI exit code 3.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

/// Numerical failure (non-finite input, solver breakdown, degenerate bootstrap).
/// CLI exit code 4.
class NumericError : public std::runtime_error {
public:
    explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

/// A cluster of size one makes the diagonal block average undefined.
class DegenerateClusterError : public ParamError {
public:
    DegenerateClusterError(const std::string& what, int cluster)
        : ParamError(what), cluster_(cluster) {}
    int cluster() const { return cluster_; }

private:
    int cluster_;
};

}  // namespace sbmtest

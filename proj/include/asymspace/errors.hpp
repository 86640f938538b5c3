#pragma once

#include <stdexcept>
#include <string>

namespace asymspace {

/// Raised when two objects that must live in the same ambient space do not.
class dimension_mismatch : public std::invalid_argument {
public:
    explicit dimension_mismatch(const std::string& what)
        : std::invalid_argument(what) {}
};

/// Raised by the double description machinery when the generator budget
/// (ASYMSPACE_DD_BUDGET, default 10000) is exhausted.
class dd_budget_exceeded : public std::runtime_error {
public:
    explicit dd_budget_exceeded(const std::string& what)
        : std::runtime_error(what) {}
};

/// Base class for gauge validation failures.
class gauge_validation_error : public std::runtime_error {
public:
    explicit gauge_validation_error(const std::string& what)
        : std::runtime_error(what) {}
};

/// The functional list admits a point where the max is negative
/// (0 is not in the convex hull of the functionals).
class not_nonnegative_error : public gauge_validation_error {
public:
    explicit not_nonnegative_error(const std::string& what)
        : gauge_validation_error(what) {}
};

/// The zero set {x : q(x)=q(-x)=0} contains a nonzero vector.
class degenerate_lineality_error : public gauge_validation_error {
public:
    explicit degenerate_lineality_error(const std::string& what)
        : gauge_validation_error(what) {}
};

/// A generator-form ball whose conic hull does not cover the whole space;
/// the induced gauge would take the value +infinity somewhere.
class gauge_infinite_error : public gauge_validation_error {
public:
    explicit gauge_infinite_error(const std::string& what)
        : gauge_validation_error(what) {}
};

/// Raised when an operation needs a functional-form gauge but was handed
/// an analytic one (analytic gauges evaluate numerically only).
class exact_form_required : public std::logic_error {
public:
    explicit exact_form_required(const std::string& what)
        : std::logic_error(what) {}
};

/// Space-file syntax or schema violation; carries a JSON-pointer-ish path.
class parse_error : public std::runtime_error {
public:
    explicit parse_error(const std::string& what)
        : std::runtime_error(what) {}
};

} // namespace asymspace

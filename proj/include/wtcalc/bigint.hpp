#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace wtcalc {

using Int = boost::multiprecision::cpp_int;

/* Library-wide error with a coarse kind so the CLI can map failures to
   exit codes without string matching. */
class Error : public std::runtime_error {
public:
    enum class Kind { validation, resource, internal };

    Error(Kind k, const std::string& what) : std::runtime_error(what), kind(k) {}

    Kind kind;
};

inline Error validation_error(const std::string& what) { return Error(Error::Kind::validation, what); }
inline Error resource_error(const std::string& what) { return Error(Error::Kind::resource, what); }
inline Error internal_error(const std::string& what) { return Error(Error::Kind::internal, what); }

// exact division; the quotient must leave no remainder
inline Int div_exact(const Int& a, const Int& b) {
    Int q = a / b;
    if (q * b != a) throw internal_error("div_exact: inexact division");
    return q;
}

}  // namespace wtcalc

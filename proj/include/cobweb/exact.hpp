#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <limits>
#include <string>

#include "cobweb/error.hpp"

namespace cobweb {

using Integer = mpz_class;
using Rational = mpq_class;

inline std::string to_string(const Integer& v) { return v.get_str(); }

inline std::string to_string(const Rational& v) {
    Rational c = v;
    c.canonicalize();
    return c.get_str();
}

inline bool is_integral(const Rational& v) {
    Rational c = v;
    c.canonicalize();
    return c.get_den() == 1;
}

/// Converts an exact count to a host size; throws if it does not fit.
inline std::size_t to_size(const Integer& v, const char* what = "value") {
    if (v < 0 || !v.fits_ulong_p() ||
        v.get_ui() > std::numeric_limits<std::size_t>::max()) {
        throw DomainError(std::string(what) + " " + v.get_str() + " does not fit in a machine size");
    }
    return static_cast<std::size_t>(v.get_ui());
}

/// (-1)^k
inline int sign_power(std::size_t k) { return (k % 2 == 0) ? 1 : -1; }

}  // namespace cobweb

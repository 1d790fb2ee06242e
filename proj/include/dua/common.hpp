#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace dua {

using Int = mpz_class;
using Rat = mpq_class;

// Base class for everything thrown by this library.
struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input text (expressions, spec files).
struct parse_error : error {
    parse_error(const std::string& msg, std::size_t pos)
        : error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
    explicit parse_error(const std::string& msg) : error(msg), position(0) {}
    std::size_t position;
};

// Violated precondition: division by zero, mismatched fields/specs, missing roots.
struct domain_error : error {
    explicit domain_error(const std::string& msg) : error(msg) {}
};

// Query outside the decidable classes this kernel implements.
struct unsupported_error : error {
    explicit unsupported_error(const std::string& msg) : error(msg) {}
};

inline Rat rat_of(long num, long den = 1) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Rat rat_pow(const Rat& base, long e) {
    if (e == 0) return Rat(1);
    Rat b = e > 0 ? base : Rat(1) / base;
    unsigned long n = e > 0 ? static_cast<unsigned long>(e) : static_cast<unsigned long>(-e);
    Rat acc(1);
    while (n) {
        if (n & 1) acc *= b;
        b *= b;
        n >>= 1;
    }
    return acc;
}

inline std::string rat_str(const Rat& q) { return q.get_str(); }

} // namespace dua

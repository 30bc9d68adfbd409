#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace planegerm {

using Rat = mpq_class;

// "p/q", or "p" when q = 1.
std::string to_string(const Rat& r);
Rat parse_rat(const std::string& s);

inline int sign(const Rat& r) { return sgn(r); }
inline bool is_structural_zero(const Rat& r) { return sgn(r) == 0; }

Rat rat_pow(const Rat& r, int e);

// Exact roots when they exist in Q.
std::optional<Rat> rational_sqrt(const Rat& r);
std::optional<Rat> rational_cbrt(const Rat& r);

}  // namespace planegerm

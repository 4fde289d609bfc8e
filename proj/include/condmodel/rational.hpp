#ifndef CONDMODEL_RATIONAL_HPP
#define CONDMODEL_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace condmodel {

// Exact arithmetic everywhere in the core: integers are mpz, rationals mpq.
using Int = mpz_class;
using Rat = mpq_class;

// Parses "p", "-p/q" or a plain decimal like "0.25" into a canonical rational.
Rat parse_rational(std::string_view text);

// Canonical "p/q" form; integers print without the "/1".
std::string rational_to_string(const Rat& q);

std::string int_to_string(const Int& z);
Int parse_integer(std::string_view text);

// Floor of the integer square root.
Int isqrt(const Int& n);

// True iff q is the square of a rational, in which case *root is set.
bool rational_sqrt_exact(const Rat& q, Rat* root);

}  // namespace condmodel

#endif

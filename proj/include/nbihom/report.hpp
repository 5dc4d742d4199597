#pragma once

#include "nbihom/rational.hpp"
#include "nbihom/matrix.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace nbihom {

// First violating basis tuple of an identity, with both sides' exact values.
struct Counterexample {
    std::vector<int> tuple;      // 1-based basis indices, the full argument tuple
    std::string instance;        // which instance of the identity, empty if unique
    Vector<Rational> lhs;
    Vector<Rational> rhs;
};

struct CheckReport {
    std::string axiom;
    bool pass = false;
    std::uint64_t tuples_checked = 0;
    std::optional<Counterexample> counterexample;
    std::string note;
};

std::string render_human(const CheckReport& report);
// Single-line JSON record, byte-deterministic.
std::string render_record(const CheckReport& report);

std::string render_vector(const Vector<Rational>& v);
std::string render_tuple(const std::vector<int>& t);

} // namespace nbihom

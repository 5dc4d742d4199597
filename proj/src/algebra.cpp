#include "nbihom/algebra.hpp"

#include "nbihom/errors.hpp"

namespace nbihom {

std::string flavor_name(Flavor f) {
    switch (f) {
    case Flavor::Unchecked: return "unchecked";
    case Flavor::LieJacobi: return "lie-jacobi";
    case Flavor::LieLeibniz: return "lie-leibniz";
    case Flavor::TotallyAssoc: return "totally-assoc";
    case Flavor::PartiallyAssoc: return "partially-assoc";
    }
    throw ValidationError("unknown flavor");
}

Flavor flavor_from_name(const std::string& name) {
    if (name == "unchecked") return Flavor::Unchecked;
    if (name == "lie-jacobi") return Flavor::LieJacobi;
    if (name == "lie-leibniz") return Flavor::LieLeibniz;
    if (name == "totally-assoc") return Flavor::TotallyAssoc;
    if (name == "partially-assoc") return Flavor::PartiallyAssoc;
    throw ValidationError("unknown flavor '" + name + "'");
}

std::uint64_t pow_u64(std::uint64_t base, int exp) {
    std::uint64_t out = 1;
    for (int i = 0; i < exp; ++i) out *= base;
    return out;
}

} // namespace nbihom

#pragma once

#include "nbihom/algebra.hpp"
#include "nbihom/family.hpp"

#include <string>
#include <utility>
#include <variant>

namespace nbihom {

using LoadedObject = std::variant<QAlgebra, ParamFamily>;

// Parses the versioned JSON formats "nbihom-algebra/1" and "nbihom-family/1".
// origin names the source in error messages.
LoadedObject parse_object(const std::string& text, const std::string& origin);
LoadedObject load_object(const std::string& path);

// Deterministic pretty serialization: sorted keys, two-space indent, trailing
// newline. The bracket list is ordered by tuple.
std::string render_algebra_json(const QAlgebra& alg);
std::string render_family_json(const ParamFamily& fam);

// Single-line machine records {"type":"algebra"|"family","value":...}.
std::string render_algebra_record(const QAlgebra& alg);
std::string render_family_record(const ParamFamily& fam);

void save_algebra(const QAlgebra& alg, const std::string& path);
void save_family(const ParamFamily& fam, const std::string& path);

// "nbihom-matrix/1": one rectangular matrix of rational strings.
QMatrix load_matrix(const std::string& path);
void save_matrix(const QMatrix& m, const std::string& path);

// "nbihom-maps/1": a (alpha, beta) pair of square matrices.
std::pair<QMatrix, QMatrix> load_maps(const std::string& path);
void save_maps(const QMatrix& alpha, const QMatrix& beta, const std::string& path);

} // namespace nbihom
